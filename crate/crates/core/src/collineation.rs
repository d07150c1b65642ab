//! Collineations of finite affine planes: verification, translations,
//! the explicit automorphisms of near-field and field planes, and the
//! Desarguesian classifier.

use thiserror::Error;

use crate::gf::{prime_power, FiniteField, GfError};
use crate::perm;
use crate::plane::{AffinePlane, PlaneError};
use crate::quasifield::{QuasiField, QuasiFieldError};
use crate::ternary::{find_isomorphism_with_bound, TernaryError, TernaryRing, ISOMORPHISM_SEARCH_BOUND};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CollineationError {
    #[error("expected a permutation of {0} points")]
    NotPermutation(usize),
    #[error("the image of line {0} is not a line")]
    NotCollineation(usize),
    #[error("not a left quasi-field")]
    NotLeftQuasiField,
    #[error("not a near-field (multiplication is not associative at {0:?})")]
    NotNearField((usize, usize, usize)),
    #[error("scaling factors must be nonzero")]
    ZeroScale,
    #[error("element {0} is out of range")]
    OutOfRange(usize),
    #[error("source and target points coincide")]
    SamePoint,
    #[error("lines {0} and {1} are parallel")]
    ParallelLines(usize, usize),
    #[error("{0} is not a prime power")]
    NotPrimePower(usize),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Plane(#[from] PlaneError),
    #[error(transparent)]
    QuasiField(#[from] QuasiFieldError),
    #[error(transparent)]
    Ternary(#[from] TernaryError),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// A point permutation together with the line permutation it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collineation {
    perm: Vec<usize>,
    line_map: Vec<usize>,
}

/// Line images of `perm` viewed as a map `src -> dst`, if every line of
/// `src` lands on a line of `dst`.
pub fn maps_lines_to_lines(src: &AffinePlane, dst: &AffinePlane, perm: &[usize]) -> Option<Vec<usize>> {
    if src.point_count() != dst.point_count() || !perm::is_permutation(perm, src.point_count()) {
        return None;
    }
    let mut image = Vec::new();
    src.lines()
        .iter()
        .map(|line| {
            image.clear();
            image.extend(line.iter().map(|&p| perm[p]));
            image.sort_unstable();
            dst.line_index(&image)
        })
        .collect()
}

/// First line whose image under `perm` is not a line.
fn first_bad_line(plane: &AffinePlane, perm: &[usize]) -> Option<usize> {
    let mut image = Vec::new();
    plane.lines().iter().position(|line| {
        image.clear();
        image.extend(line.iter().map(|&p| perm[p]));
        image.sort_unstable();
        plane.line_index(&image).is_none()
    })
}

pub fn is_collineation(plane: &AffinePlane, perm: &[usize]) -> bool {
    maps_lines_to_lines(plane, plane, perm).is_some()
}

impl Collineation {
    pub fn new(plane: &AffinePlane, perm: Vec<usize>) -> Result<Self, CollineationError> {
        if !perm::is_permutation(&perm, plane.point_count()) {
            return Err(CollineationError::NotPermutation(plane.point_count()));
        }
        match maps_lines_to_lines(plane, plane, &perm) {
            Some(line_map) => Ok(Self { perm, line_map }),
            None => Err(CollineationError::NotCollineation(
                first_bad_line(plane, &perm).expect("some line fails"),
            )),
        }
    }

    pub fn identity(plane: &AffinePlane) -> Self {
        Self { perm: perm::identity(plane.point_count()), line_map: perm::identity(plane.line_count()) }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn line_map(&self) -> &[usize] {
        &self.line_map
    }

    pub fn apply(&self, p: usize) -> usize {
        self.perm[p]
    }

    pub fn apply_line(&self, l: usize) -> usize {
        self.line_map[l]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.perm.len()).filter(|&p| self.perm[p] == p).collect()
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &Collineation) -> Collineation {
        Collineation {
            perm: perm::compose(&self.perm, &inner.perm),
            line_map: perm::compose(&self.line_map, &inner.line_map),
        }
    }

    pub fn inverse(&self) -> Collineation {
        Collineation { perm: perm::inverse(&self.perm), line_map: perm::inverse(&self.line_map) }
    }
}

/// A verified translation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationCertificate {
    pub collineation: Collineation,
    /// Parallel classes fixed linewise (every class for the identity).
    pub trace_classes: Vec<usize>,
    pub fixed_point_free: bool,
}

impl TranslationCertificate {
    pub fn trace_class(&self) -> usize {
        self.trace_classes[0]
    }

    pub fn perm(&self) -> &[usize] {
        self.collineation.perm()
    }
}

/// Certificate if `perm` maps every line to a parallel one and fixes some
/// parallel class linewise.
pub fn is_translation(plane: &AffinePlane, perm: &[usize]) -> Result<Option<TranslationCertificate>, CollineationError> {
    let Ok(collineation) = Collineation::new(plane, perm.to_vec()) else {
        return Ok(None);
    };
    if (0..plane.line_count()).any(|l| !plane.are_parallel(l, collineation.apply_line(l))) {
        return Ok(None);
    }
    let trace_classes: Vec<usize> = plane
        .parallel_classes()?
        .iter()
        .enumerate()
        .filter(|(_, class)| class.iter().all(|&l| collineation.apply_line(l) == l))
        .map(|(i, _)| i)
        .collect();
    if trace_classes.is_empty() {
        return Ok(None);
    }
    let fixed_point_free = collineation.fixed_points().is_empty();
    Ok(Some(TranslationCertificate { collineation, trace_classes, fixed_point_free }))
}

/// A non-identity translation has no fixed point.
pub fn no_fixed_points(cert: &TranslationCertificate) -> bool {
    cert.collineation.is_identity() || cert.fixed_point_free
}

/// A quasi-field together with its ternary ring and plane.
#[derive(Debug, Clone)]
pub struct QuasiFieldPlane {
    pub quasi_field: QuasiField,
    pub ring: TernaryRing,
    pub plane: AffinePlane,
}

impl QuasiFieldPlane {
    pub fn new(quasi_field: QuasiField) -> Result<Self, CollineationError> {
        let ring = quasi_field.to_ternary()?;
        let plane = AffinePlane::from_ternary(&ring)?;
        Ok(Self { quasi_field, ring, plane })
    }

    pub fn order(&self) -> usize {
        self.quasi_field.order()
    }

    pub fn point(&self, x: usize, y: usize) -> usize {
        x * self.order() + y
    }

    /// Sorted points of `y = a*x + b`.
    fn graph(&self, a: usize, b: usize) -> Vec<usize> {
        let q = self.order();
        let mut pts: Vec<usize> = (0..q).map(|x| self.point(x, self.ring.get(a, x, b))).collect();
        pts.sort_unstable();
        pts
    }

    fn vertical(&self, x: usize) -> Vec<usize> {
        (0..self.order()).map(|y| self.point(x, y)).collect()
    }

    fn perm_from(&self, f: impl Fn(usize, usize) -> (usize, usize)) -> Vec<usize> {
        let q = self.order();
        (0..q * q)
            .map(|p| {
                let (x, y) = f(p / q, p % q);
                self.point(x, y)
            })
            .collect()
    }

    /// The shift `(x, y) -> (x + c, y + d)`, verified as a translation whose
    /// trace is the vertical class when `c = 0` and otherwise the class of
    /// slope `e` with `e c = d`.
    pub fn shift(&self, c: usize, d: usize) -> Result<TranslationCertificate, CollineationError> {
        let q = self.order();
        if let Some(&v) = [c, d].iter().find(|&&v| v >= q) {
            return Err(CollineationError::OutOfRange(v));
        }
        let k = &self.quasi_field;
        if !k.check_vw().is_left() {
            return Err(CollineationError::NotLeftQuasiField);
        }
        let perm = self.perm_from(|x, y| (k.add(x, c), k.add(y, d)));
        let cert = is_translation(&self.plane, &perm)?
            .ok_or_else(|| CollineationError::Verification(format!("shift ({c},{d}) is not a translation")))?;
        let trace_line = if c == 0 {
            self.vertical(0)
        } else {
            let e = (0..q)
                .find(|&e| k.mul(e, c) == d)
                .ok_or_else(|| CollineationError::Verification(format!("no slope e with e*{c} = {d}")))?;
            self.graph(e, 0)
        };
        let line = self.plane.line_index(&trace_line).expect("graph is a line");
        let class = self.plane.class_of(line)?;
        if !cert.trace_classes.contains(&class) {
            return Err(CollineationError::Verification(format!(
                "shift ({c},{d}) does not fix the expected trace class {class}"
            )));
        }
        if !no_fixed_points(&cert) {
            return Err(CollineationError::Verification(format!("shift ({c},{d}) has a fixed point")));
        }
        Ok(cert)
    }

    /// `(x, y) -> (u x, v y)` for a near-field, fixing the origin and both
    /// axes and sending `(1, 1)` to `(u, v)`.
    pub fn diag_automorphism(&self, u: usize, v: usize) -> Result<Collineation, CollineationError> {
        let q = self.order();
        if let Some(&w) = [u, v].iter().find(|&&w| w >= q) {
            return Err(CollineationError::OutOfRange(w));
        }
        if u == 0 || v == 0 {
            return Err(CollineationError::ZeroScale);
        }
        let k = &self.quasi_field;
        if !k.check_vw().is_left() {
            return Err(CollineationError::NotLeftQuasiField);
        }
        if let Some(w) = k.associativity_witness() {
            return Err(CollineationError::NotNearField(w));
        }
        let f = Collineation::new(&self.plane, self.perm_from(|x, y| (k.mul(u, x), k.mul(v, y))))?;
        let axes = [self.graph(0, 0), self.vertical(0)]
            .map(|pts| self.plane.line_index(&pts).expect("axis is a line"));
        if f.apply(0) != 0
            || axes.iter().any(|&l| f.apply_line(l) != l)
            || f.apply(self.point(1, 1)) != self.point(u, v)
        {
            return Err(CollineationError::Verification("diagonal map moves the frame".into()));
        }
        Ok(f)
    }
}

pub fn translation_from_shift(q: &QuasiField, c: usize, d: usize) -> Result<TranslationCertificate, CollineationError> {
    QuasiFieldPlane::new(q.clone())?.shift(c, d)
}

pub fn diag_automorphism(q: &QuasiField, u: usize, v: usize) -> Result<Collineation, CollineationError> {
    QuasiFieldPlane::new(q.clone())?.diag_automorphism(u, v)
}

/// The only possible translation taking `z` to `target`, verified.
///
/// Points off `L = zz'` go to the meet of the parallel to `zp` through `z'`
/// with the parallel to `L` through `p`; points of `L` are routed the same
/// way through the smallest point off `L`.
pub fn translation_candidate(
    plane: &AffinePlane,
    z: usize,
    target: usize,
) -> Result<Option<TranslationCertificate>, CollineationError> {
    if z == target {
        return Err(CollineationError::SamePoint);
    }
    let l = plane.line_through(z, target)?;
    let aux = (0..plane.point_count())
        .find(|&p| !plane.contains(l, p))
        .ok_or_else(|| CollineationError::Verification("all points are collinear".into()))?;
    translation_candidate_via(plane, z, target, aux)
}

/// [`translation_candidate`] with an explicit auxiliary point off `zz'`.
pub fn translation_candidate_via(
    plane: &AffinePlane,
    z: usize,
    target: usize,
    aux: usize,
) -> Result<Option<TranslationCertificate>, CollineationError> {
    if z == target {
        return Err(CollineationError::SamePoint);
    }
    let l = plane.line_through(z, target)?;
    if aux >= plane.point_count() {
        return Err(CollineationError::OutOfRange(aux));
    }
    if plane.contains(l, aux) {
        return Err(CollineationError::Verification(format!("auxiliary point {aux} lies on the trace line")));
    }
    let image_off_line = |from: usize, from_image: usize, p: usize| -> Result<Option<usize>, PlaneError> {
        let joining = plane.line_through(from, p)?;
        let a = plane.parallel_through(joining, from_image)?;
        let b = plane.parallel_through(l, p)?;
        Ok(plane.intersection(a, b))
    };
    let Some(aux_image) = image_off_line(z, target, aux)? else {
        return Ok(None);
    };
    let mut perm = vec![0; plane.point_count()];
    for (p, slot) in perm.iter_mut().enumerate() {
        let image = if p == z {
            Some(target)
        } else if !plane.contains(l, p) {
            image_off_line(z, target, p)?
        } else {
            image_off_line(aux, aux_image, p)?
        };
        match image {
            Some(i) => *slot = i,
            None => return Ok(None),
        }
    }
    if !perm::is_permutation(&perm, plane.point_count()) {
        return Ok(None);
    }
    let cert = is_translation(plane, &perm)?;
    if let Some(c) = &cert {
        if !no_fixed_points(c) {
            return Err(CollineationError::Verification("translation with a fixed point".into()));
        }
    }
    Ok(cert)
}

/// The plane of a field `K` with the four kinds of elementary maps used to
/// move the axes anywhere.
#[derive(Debug, Clone)]
pub struct FieldPlane {
    field: FiniteField,
    inner: QuasiFieldPlane,
}

impl FieldPlane {
    pub fn new(field: FiniteField) -> Result<Self, CollineationError> {
        let inner = QuasiFieldPlane::new(QuasiField::from_field(&field)?)?;
        Ok(Self { field, inner })
    }

    pub fn plane(&self) -> &AffinePlane {
        &self.inner.plane
    }

    pub fn ring(&self) -> &TernaryRing {
        &self.inner.ring
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn point(&self, x: usize, y: usize) -> usize {
        self.inner.point(x, y)
    }

    fn collineation(&self, f: impl Fn(usize, usize) -> (usize, usize)) -> Result<Collineation, CollineationError> {
        Collineation::new(self.plane(), self.inner.perm_from(f))
    }

    fn check(&self, c: usize) -> Result<(), CollineationError> {
        if c < self.field.order() {
            Ok(())
        } else {
            Err(CollineationError::OutOfRange(c))
        }
    }

    /// `(x, y) -> (y, x)`.
    pub fn swap(&self) -> Result<Collineation, CollineationError> {
        self.collineation(|x, y| (y, x))
    }

    /// `(x, y) -> (x + c, y + d)`.
    pub fn shift(&self, c: usize, d: usize) -> Result<Collineation, CollineationError> {
        self.check(c)?;
        self.check(d)?;
        let k = &self.field;
        self.collineation(|x, y| (k.add(x, c), k.add(y, d)))
    }

    /// `(x, y) -> (x, y - c x)`.
    pub fn shear_y(&self, c: usize) -> Result<Collineation, CollineationError> {
        self.check(c)?;
        let k = &self.field;
        self.collineation(|x, y| (x, k.sub(y, k.mul(c, x))))
    }

    /// `(x, y) -> (x - c y, y)`.
    pub fn shear_x(&self, c: usize) -> Result<Collineation, CollineationError> {
        self.check(c)?;
        let k = &self.field;
        self.collineation(|x, y| (k.sub(x, k.mul(c, y)), y))
    }

    fn horizontal_axis(&self) -> usize {
        let q = self.field.order();
        self.plane().line_index(&(0..q).map(|x| x * q).collect::<Vec<_>>()).expect("y = 0 is a line")
    }

    fn vertical_axis(&self) -> usize {
        self.plane().line_index(&(0..self.field.order()).collect::<Vec<_>>()).expect("x = 0 is a line")
    }

    /// `None` for a vertical line through the origin, else its slope.
    fn slope_through_origin(&self, line: usize) -> Option<usize> {
        let q = self.field.order();
        let p = self.plane().line(line).iter().copied().find(|&p| p / q == 1)?;
        Some(p % q)
    }

    /// A collineation taking the axes `y = 0` and `x = 0` to `l2` and `m2`.
    ///
    /// Builds `g = R ∘ S ∘ D? ∘ T` taking `l2, m2` back to the axes, where
    /// `T` shifts their meet to the origin, `D` swaps coordinates when the
    /// first line has become vertical, `S = shear_y` flattens it, and
    /// `R = shear_x` straightens the second; returns `g^{-1}`.
    pub fn frame_mover(&self, l2: usize, m2: usize) -> Result<Collineation, CollineationError> {
        let plane = self.plane();
        if l2 >= plane.line_count() || m2 >= plane.line_count() {
            return Err(CollineationError::OutOfRange(l2.max(m2)));
        }
        let meet = plane.intersection(l2, m2).ok_or(CollineationError::ParallelLines(l2, m2))?;
        let q = self.field.order();
        let k = &self.field;
        let mut g = self.shift(k.neg(meet / q), k.neg(meet % q))?;
        if self.slope_through_origin(g.apply_line(l2)).is_none() {
            g = self.swap()?.after(&g);
        }
        let s = self.slope_through_origin(g.apply_line(l2)).expect("first axis is not vertical");
        g = self.shear_y(s)?.after(&g);
        if let Some(t) = self.slope_through_origin(g.apply_line(m2)) {
            g = self.shear_x(k.inv(t)?)?.after(&g);
        }
        let f = g.inverse();
        if f.apply_line(self.horizontal_axis()) != l2 || f.apply_line(self.vertical_axis()) != m2 {
            return Err(CollineationError::Verification("frame mover misses its target lines".into()));
        }
        Ok(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Desarguesian,
    NonDesarguesian,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Desarguesian => "desarguesian",
            Verdict::NonDesarguesian => "non-desarguesian",
        })
    }
}

/// Evidence for a [`Verdict`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Isomorphism from the input ring onto the ring of `GF(q)`.
    Isomorphism(Vec<usize>),
    /// `(xy)z != x(yz)`, so the quasi-field is not a field.
    NonAssociative((usize, usize, usize)),
    /// The isomorphism search ran to completion without success.
    ExhaustedSearch {
        nodes: u64,
        space: u128,
        /// `(x, y, a)` breaking `(x+y)a = xa + ya`, when known.
        right_distributivity: Option<(usize, usize, usize)>,
        /// `(a, x, y)` breaking `a(x+y) = ax + ay`, when known.
        left_distributivity: Option<(usize, usize, usize)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub certificate: Certificate,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}", self.verdict)?;
        match &self.certificate {
            Certificate::Isomorphism(map) => {
                let map: Vec<String> = map.iter().map(usize::to_string).collect();
                write!(f, "certificate isomorphism {}", map.join(" "))
            }
            Certificate::NonAssociative((x, y, z)) => {
                write!(f, "certificate non-associative x={x} y={y} z={z}")
            }
            Certificate::ExhaustedSearch { nodes, space, right_distributivity, left_distributivity } => {
                write!(f, "certificate exhausted-search nodes={nodes} space={space}")?;
                if let Some((x, y, a)) = right_distributivity {
                    write!(f, "\nright-distributivity fails x={x} y={y} a={a}")?;
                }
                if let Some((a, x, y)) = left_distributivity {
                    write!(f, "\nleft-distributivity fails a={a} x={x} y={y}")?;
                }
                Ok(())
            }
        }
    }
}

fn reference_ring(q: usize) -> Result<TernaryRing, CollineationError> {
    let (p, n) = prime_power(q).ok_or(CollineationError::NotPrimePower(q))?;
    if q > ISOMORPHISM_SEARCH_BOUND {
        return Err(TernaryError::SearchBound { q, bound: ISOMORPHISM_SEARCH_BOUND }.into());
    }
    Ok(QuasiField::from_field(&FiniteField::new(p, n)?)?.to_ternary()?)
}

/// Decides whether the plane of `q` is Desarguesian by comparing its
/// ternary ring with that of `GF(q)`; every finite skew-field is a field,
/// so `GF(q)` is the only candidate.
pub fn classify(quasi_field: &QuasiField) -> Result<Classification, CollineationError> {
    let q = quasi_field.order();
    let reference = reference_ring(q)?;
    if let Some(w) = quasi_field.associativity_witness() {
        return Ok(Classification { verdict: Verdict::NonDesarguesian, certificate: Certificate::NonAssociative(w) });
    }
    let report = quasi_field.check_vw();
    let ring = quasi_field.to_ternary()?;
    search(&ring, &reference, report.vw4_r, report.vw4)
}

/// [`classify`] for a bare ternary ring; the associativity pre-check runs
/// when the ring comes from a quasi-field.
pub fn classify_ternary(ring: &TernaryRing) -> Result<Classification, CollineationError> {
    if let Some(k) = QuasiField::from_ternary(ring)? {
        if k.check_vw().is_left() || k.check_vw().is_right() {
            return classify(&k);
        }
    }
    let reference = reference_ring(ring.order())?;
    search(ring, &reference, None, None)
}

fn search(
    ring: &TernaryRing,
    reference: &TernaryRing,
    right_distributivity: Option<(usize, usize, usize)>,
    left_distributivity: Option<(usize, usize, usize)>,
) -> Result<Classification, CollineationError> {
    let result = find_isomorphism_with_bound(ring, reference, ISOMORPHISM_SEARCH_BOUND)?;
    Ok(match result.map {
        Some(map) => Classification { verdict: Verdict::Desarguesian, certificate: Certificate::Isomorphism(map) },
        None => Classification {
            verdict: Verdict::NonDesarguesian,
            certificate: Certificate::ExhaustedSearch {
                nodes: result.nodes,
                space: result.space,
                right_distributivity,
                left_distributivity,
            },
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field_plane(p: usize, n: usize) -> FieldPlane {
        FieldPlane::new(FiniteField::new(p, n).unwrap()).unwrap()
    }

    #[test]
    fn swap_and_broken_swap() {
        let fp = field_plane(3, 1);
        let plane = fp.plane();
        assert!(is_collineation(plane, &perm::identity(9)));
        assert!(is_collineation(plane, fp.swap().unwrap().perm()));
        let mut bad = perm::identity(9);
        bad.swap(0, 1);
        assert!(!is_collineation(plane, &bad));
        assert!(is_translation(plane, fp.swap().unwrap().perm()).unwrap().is_none());
    }

    #[test]
    fn identity_is_a_translation_with_every_trace() {
        let fp = field_plane(3, 1);
        let cert = is_translation(fp.plane(), &perm::identity(9)).unwrap().unwrap();
        assert_eq!(cert.trace_classes.len(), 4);
        assert!(no_fixed_points(&cert));
    }

    #[test]
    fn shift_matches_candidate() {
        let k = QuasiField::from_field(&FiniteField::new(3, 1).unwrap()).unwrap();
        let qp = QuasiFieldPlane::new(k).unwrap();
        let shift = qp.shift(1, 0).unwrap();
        let horizontal = qp.plane.line_index(&[0, 3, 6]).unwrap();
        assert_eq!(shift.trace_classes, vec![qp.plane.class_of(horizontal).unwrap()]);
        let cand = translation_candidate(&qp.plane, 0, qp.point(1, 0)).unwrap().unwrap();
        assert_eq!(cand.perm(), shift.perm());
        assert!(qp.shift(0, 0).unwrap().collineation.is_identity());
    }

    #[test]
    fn frame_mover_diagonal_and_vertical() {
        let fp = field_plane(3, 1);
        let diag = fp.plane().line_index(&[0, 4, 8]).unwrap();
        let vert = fp.plane().line_index(&[0, 1, 2]).unwrap();
        let f = fp.frame_mover(diag, vert).unwrap();
        assert_eq!(f.apply_line(fp.horizontal_axis()), diag);
        let h = fp.horizontal_axis();
        assert!(fp.frame_mover(h, vert).unwrap().is_identity());
        let other_horizontal = fp.plane().line_index(&[1, 4, 7]).unwrap();
        assert_eq!(fp.frame_mover(h, other_horizontal), Err(CollineationError::ParallelLines(h, other_horizontal)));
    }

    #[test]
    fn classify_small_fields() {
        let k = QuasiField::from_field(&FiniteField::new(2, 2).unwrap()).unwrap();
        let c = classify(&k).unwrap();
        assert_eq!(c.verdict, Verdict::Desarguesian);
        assert_eq!(c.certificate, Certificate::Isomorphism(vec![0, 1, 2, 3]));
        let k6 = QuasiField::from_fns(6, |a, b| (a + b) % 6, |a, b| (a * b) % 6).unwrap();
        assert_eq!(classify(&k6), Err(CollineationError::NotPrimePower(6)));
    }
}
