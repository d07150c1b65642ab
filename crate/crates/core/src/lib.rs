//! Finite affine planes from ternary rings and quasi-fields.
//!
//! The crate builds finite fields and their Galois norm maps ([`gf`]),
//! ternary rings with their axioms, isomorphisms and isotopisms
//! ([`ternary`]), quasi-fields including the Andre family ([`quasifield`],
//! [`andre`]), affine planes and their coordinatization ([`plane`]), and
//! collineations, translations and a Desarguesian classifier
//! ([`collineation`]). Every structure is finite and every check is
//! exhaustive, so each claim comes with a table-level certificate.
//!
//! ```
//! use afp_core::andre::AndreSpec;
//! use afp_core::collineation::{classify, Verdict};
//!
//! let spec = AndreSpec::from_parameters(3, 2, 1, vec![0, 1]).unwrap();
//! let k = spec.build_left().unwrap();
//! assert_eq!(classify(&k).unwrap().verdict, Verdict::NonDesarguesian);
//! ```

pub mod andre;
pub mod collineation;
pub mod formats;
pub mod gf;
pub mod perm;
pub mod plane;
pub mod quasifield;
pub mod ternary;

pub use andre::{AndreSide, AndreSpec};
pub use collineation::{Classification, Collineation, TranslationCertificate, Verdict};
pub use gf::{FiniteField, GaloisGroup};
pub use plane::{AffinePlane, CoordinateFrame, Slope};
pub use quasifield::{AxiomReport, QuasiField};
pub use ternary::{Isotopism, TernaryRing};
