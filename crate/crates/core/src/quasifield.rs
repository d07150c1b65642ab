//! Quasi-fields (Veblen-Wedderburn systems): two-operation structures whose
//! ternary ring is `<ax+b> = a*x + b`.
//!
//! [`QuasiField`] holds raw tables; [`QuasiField::check_vw`] decides which of
//! the left/right axiom sets hold.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::gf::FiniteField;
use crate::ternary::{TernaryError, TernaryRing, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuasiFieldError {
    #[error("carrier size {0} is outside 2..={MAX_ORDER}")]
    BadOrder(usize),
    #[error("{which} table has {got} entries, expected {expected}")]
    BadLength { which: &'static str, got: usize, expected: usize },
    #[error("{which} table entry {index} = {value} is out of range for q = {q}")]
    EntryOutOfRange { which: &'static str, index: usize, value: usize, q: usize },
    #[error("neither the left nor the right quasi-field axioms hold")]
    NotAQuasiField(Box<AxiomReport>),
    #[error("ternary ring has not been validated")]
    NotValidated,
    #[error("not a subfield: {0}")]
    NotASubfield(String),
    #[error(transparent)]
    Ternary(#[from] TernaryError),
}

/// Which axiom sets a table satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Both,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vw1Failure {
    Identity(usize),
    Inverse(usize),
    Commutativity(usize, usize),
    Associativity(usize, usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vw2Failure {
    /// `a, b != 0` but `ab = 0`.
    ZeroDivisor(usize, usize),
    /// `ax = b` (a, b != 0) lacks a unique nonzero solution.
    Left(usize, usize),
    /// `xa = b` (a, b != 0) lacks a unique nonzero solution.
    Right(usize, usize),
}

/// Seven-flag axiom report. A `None` field means the axiom holds; otherwise
/// it carries the lexicographically smallest counterexample.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub vw1: Option<Vw1Failure>,
    pub vw2: Option<Vw2Failure>,
    /// `x` violating one of `1x = x1 = x`, `0x = x0 = 0`, `x+0 = 0+x = x`.
    pub vw3: Option<usize>,
    /// `(a, x, y)` with `a(x+y) != ax + ay`.
    pub vw4: Option<(usize, usize, usize)>,
    /// `(a, a', b)` for which `ax = a'x + b` has no unique solution.
    pub vw5: Option<(usize, usize, usize)>,
    /// `(x, y, a)` with `(x+y)a != xa + ya`.
    pub vw4_r: Option<(usize, usize, usize)>,
    /// `(a, a', b)` for which `xa = xa' + b` has no unique solution.
    pub vw5_r: Option<(usize, usize, usize)>,
}

impl AxiomReport {
    /// `[VW1, VW2, VW3, VW4, VW5, VW4-r, VW5-r]`.
    pub fn flags(&self) -> [bool; 7] {
        [
            self.vw1.is_none(),
            self.vw2.is_none(),
            self.vw3.is_none(),
            self.vw4.is_none(),
            self.vw5.is_none(),
            self.vw4_r.is_none(),
            self.vw5_r.is_none(),
        ]
    }

    fn common(&self) -> bool {
        self.vw1.is_none() && self.vw2.is_none() && self.vw3.is_none()
    }

    pub fn is_left(&self) -> bool {
        self.common() && self.vw4.is_none() && self.vw5.is_none()
    }

    pub fn is_right(&self) -> bool {
        self.common() && self.vw4_r.is_none() && self.vw5_r.is_none()
    }

    pub fn is_weak_left(&self) -> bool {
        self.common() && self.vw4.is_none()
    }

    pub fn is_weak_right(&self) -> bool {
        self.common() && self.vw4_r.is_none()
    }

    pub fn side(&self) -> Side {
        match (self.is_left(), self.is_right()) {
            (true, true) => Side::Both,
            (true, false) => Side::Left,
            (false, true) => Side::Right,
            (false, false) => Side::Neither,
        }
    }

    /// The same report read through the opposite multiplication (flags only).
    pub fn swapped_flags(&self) -> [bool; 7] {
        let f = self.flags();
        [f[0], f[1], f[2], f[5], f[6], f[3], f[4]]
    }
}

impl std::fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names = ["VW1", "VW2", "VW3", "VW4", "VW5", "VW4-r", "VW5-r"];
        let witnesses = [
            self.vw1.map(|w| format!("{w:?}")),
            self.vw2.map(|w| format!("{w:?}")),
            self.vw3.map(|x| format!("x={x}")),
            self.vw4.map(|(a, x, y)| format!("a={a} x={x} y={y}")),
            self.vw5.map(|(a, a2, b)| format!("a={a} a'={a2} b={b}")),
            self.vw4_r.map(|(x, y, a)| format!("x={x} y={y} a={a}")),
            self.vw5_r.map(|(a, a2, b)| format!("a={a} a'={a2} b={b}")),
        ];
        for (name, w) in names.iter().zip(witnesses) {
            match w {
                None => writeln!(f, "{name} pass")?,
                Some(w) => writeln!(f, "{name} FAIL witness {w}")?,
            }
        }
        let side = match self.side() {
            Side::Left => "left quasi-field",
            Side::Right => "right quasi-field",
            Side::Both => "left and right quasi-field",
            Side::Neither => "not a quasi-field",
        };
        write!(f, "verdict {side}")
    }
}

/// Outcome of [`QuasiField::check_vector_space`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSpaceReport {
    /// `(x, y, a)` with `(xy)a != x(ya)`.
    pub associativity: Option<(usize, usize, usize)>,
    /// `(x, y, a)` with `(x+y)a != xa + ya`.
    pub distributivity: Option<(usize, usize, usize)>,
}

impl VectorSpaceReport {
    pub fn holds(&self) -> bool {
        self.associativity.is_none() && self.distributivity.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiField {
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
}

fn check_table(which: &'static str, q: usize, t: &[u16]) -> Result<(), QuasiFieldError> {
    if t.len() != q * q {
        return Err(QuasiFieldError::BadLength { which, got: t.len(), expected: q * q });
    }
    match t.iter().position(|&v| v as usize >= q) {
        Some(index) => Err(QuasiFieldError::EntryOutOfRange { which, index, value: t[index] as usize, q }),
        None => Ok(()),
    }
}

impl QuasiField {
    /// Wraps raw tables; axioms are not checked here.
    pub fn from_tables(q: usize, add: Vec<u16>, mul: Vec<u16>) -> Result<Self, QuasiFieldError> {
        if !(2..=MAX_ORDER).contains(&q) {
            return Err(QuasiFieldError::BadOrder(q));
        }
        check_table("add", q, &add)?;
        check_table("mul", q, &mul)?;
        Ok(Self { q, add, mul })
    }

    pub fn from_fns(
        q: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, QuasiFieldError> {
        let grid = |f: &dyn Fn(usize, usize) -> usize| {
            (0..q * q).map(|i| f(i / q, i % q) as u16).collect::<Vec<_>>()
        };
        Self::from_tables(q, grid(&add), grid(&mul))
    }

    /// A finite field viewed as a quasi-field.
    pub fn from_field(field: &FiniteField) -> Result<Self, QuasiFieldError> {
        Self::from_tables(field.order(), field.add_table().to_vec(), field.mul_table().to_vec())
    }

    pub fn order(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn add_table(&self) -> &[u16] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u16] {
        &self.mul
    }

    /// Overwrites one product (for building mutants).
    pub fn set_mul(&mut self, a: usize, b: usize, v: usize) {
        self.mul[a * self.q + b] = v as u16;
    }

    /// Additive inverse, assuming VW1.
    fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap_or(0)
    }

    /// Same addition, multiplication `a·b = ba`.
    pub fn opposite(&self) -> QuasiField {
        let q = self.q;
        let mul = (0..q * q).map(|i| self.mul[(i % q) * q + i / q]).collect();
        QuasiField { q, add: self.add.clone(), mul }
    }

    /// Exhaustive check of all seven axioms.
    pub fn check_vw(&self) -> AxiomReport {
        let vw1 = self.vw1();
        AxiomReport {
            vw1,
            vw2: self.vw2(),
            vw3: self.vw3(),
            vw4: self.left_distributivity(),
            vw5: self.vw5_generic(vw1.is_none(), |a, x| self.mul(a, x)),
            vw4_r: self.right_distributivity(),
            vw5_r: self.vw5_generic(vw1.is_none(), |a, x| self.mul(x, a)),
        }
    }

    fn vw1(&self) -> Option<Vw1Failure> {
        let q = self.q;
        if let Some(x) = (0..q).find(|&x| self.add(x, 0) != x || self.add(0, x) != x) {
            return Some(Vw1Failure::Identity(x));
        }
        if let Some(x) = (0..q).find(|&x| !(0..q).any(|y| self.add(x, y) == 0 && self.add(y, x) == 0)) {
            return Some(Vw1Failure::Inverse(x));
        }
        for a in 0..q {
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) {
                    return Some(Vw1Failure::Commutativity(a, b));
                }
            }
        }
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Some(Vw1Failure::Associativity(a, b, c));
                    }
                }
            }
        }
        None
    }

    fn vw2(&self) -> Option<Vw2Failure> {
        let q = self.q;
        for a in 1..q {
            for b in 1..q {
                if self.mul(a, b) == 0 {
                    return Some(Vw2Failure::ZeroDivisor(a, b));
                }
            }
        }
        let mut counts = vec![0usize; q];
        for a in 1..q {
            counts.iter_mut().for_each(|c| *c = 0);
            (0..q).for_each(|x| counts[self.mul(a, x)] += 1);
            if let Some(b) = (1..q).find(|&b| counts[b] != 1 || self.mul(a, 0) == b) {
                return Some(Vw2Failure::Left(a, b));
            }
        }
        for a in 1..q {
            counts.iter_mut().for_each(|c| *c = 0);
            (0..q).for_each(|x| counts[self.mul(x, a)] += 1);
            if let Some(b) = (1..q).find(|&b| counts[b] != 1 || self.mul(0, a) == b) {
                return Some(Vw2Failure::Right(a, b));
            }
        }
        None
    }

    fn vw3(&self) -> Option<usize> {
        (0..self.q).find(|&x| {
            self.mul(1, x) != x
                || self.mul(x, 1) != x
                || self.mul(0, x) != 0
                || self.mul(x, 0) != 0
                || self.add(x, 0) != x
                || self.add(0, x) != x
        })
    }

    fn left_distributivity(&self) -> Option<(usize, usize, usize)> {
        let q = self.q;
        for a in 0..q {
            for x in 0..q {
                for y in 0..q {
                    if self.mul(a, self.add(x, y)) != self.add(self.mul(a, x), self.mul(a, y)) {
                        return Some((a, x, y));
                    }
                }
            }
        }
        None
    }

    fn right_distributivity(&self) -> Option<(usize, usize, usize)> {
        let q = self.q;
        for x in 0..q {
            for y in 0..q {
                for a in 0..q {
                    if self.mul(self.add(x, y), a) != self.add(self.mul(x, a), self.mul(y, a)) {
                        return Some((x, y, a));
                    }
                }
            }
        }
        None
    }

    /// VW5 for `prod(a, x) = a x` (left) or `x a` (right): for `a != a'`,
    /// `prod(a, x) = prod(a', x) + b` has a unique solution for every `b`.
    /// With an abelian addition this is bijectivity of
    /// `x -> prod(a, x) - prod(a', x)`; otherwise solutions are counted.
    fn vw5_generic(
        &self,
        abelian: bool,
        prod: impl Fn(usize, usize) -> usize,
    ) -> Option<(usize, usize, usize)> {
        let q = self.q;
        let mut counts = vec![0usize; q];
        for a in 0..q {
            for a2 in (0..q).filter(|&a2| a2 != a) {
                counts.iter_mut().for_each(|c| *c = 0);
                if abelian {
                    for x in 0..q {
                        counts[self.add(prod(a, x), self.neg(prod(a2, x)))] += 1;
                    }
                } else {
                    for x in 0..q {
                        for (b, c) in counts.iter_mut().enumerate() {
                            if prod(a, x) == self.add(prod(a2, x), b) {
                                *c += 1;
                            }
                        }
                    }
                }
                if let Some(b) = counts.iter().position(|&c| c != 1) {
                    return Some((a, a2, b));
                }
            }
        }
        None
    }

    /// Lexicographically first `(x, y, z)` with `(xy)z != x(yz)`.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let q = self.q;
        for x in 0..q {
            for y in 0..q {
                for z in 0..q {
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// The ternary ring `<ax+b> = a*x + b`, validated.
    pub fn to_ternary(&self) -> Result<TernaryRing, QuasiFieldError> {
        let report = self.check_vw();
        if !report.is_left() && !report.is_right() {
            return Err(QuasiFieldError::NotAQuasiField(Box::new(report)));
        }
        let mut t = self.to_ternary_unchecked();
        t.validate()?;
        Ok(t)
    }

    /// `a*x + b` without checking any axiom.
    pub fn to_ternary_unchecked(&self) -> TernaryRing {
        TernaryRing::from_fn(self.q, |a, x, b| self.add(self.mul(a, x), b))
            .expect("quasi-field tables are in range")
    }

    /// `a + b = <1a+b>`, `ab = <ab+0>`; `None` unless these tables give back
    /// the same ternary operation.
    pub fn from_ternary(t: &TernaryRing) -> Result<Option<QuasiField>, QuasiFieldError> {
        if !t.is_validated() {
            return Err(QuasiFieldError::NotValidated);
        }
        let q = t.order();
        let qf = QuasiField::from_fns(q, |a, b| t.get(1, a, b), |a, b| t.get(a, b, 0))?;
        Ok((qf.to_ternary_unchecked().table() == t.table()).then_some(qf))
    }

    /// Checks that `sub` is a subfield and that for all `x, y` and `a` in
    /// `sub`: `(xy)a = x(ya)` and `(x+y)a = xa + ya`.
    pub fn check_vector_space(&self, sub: &[usize]) -> Result<VectorSpaceReport, QuasiFieldError> {
        self.check_subfield(sub)?;
        let q = self.q;
        let mut associativity = None;
        let mut distributivity = None;
        'outer: for x in 0..q {
            for y in 0..q {
                for &a in sub {
                    if associativity.is_none()
                        && self.mul(self.mul(x, y), a) != self.mul(x, self.mul(y, a))
                    {
                        associativity = Some((x, y, a));
                    }
                    if distributivity.is_none()
                        && self.mul(self.add(x, y), a) != self.add(self.mul(x, a), self.mul(y, a))
                    {
                        distributivity = Some((x, y, a));
                    }
                    if associativity.is_some() && distributivity.is_some() {
                        break 'outer;
                    }
                }
            }
        }
        // Sorted scan order is (x, y, a) with `sub` in its given order.
        Ok(VectorSpaceReport { associativity, distributivity })
    }

    fn check_subfield(&self, sub: &[usize]) -> Result<(), QuasiFieldError> {
        let bad = |s: String| Err(QuasiFieldError::NotASubfield(s));
        if let Some(&v) = sub.iter().find(|&&v| v >= self.q) {
            return bad(format!("element {v} out of range"));
        }
        let set: BTreeSet<usize> = sub.iter().copied().collect();
        if !set.contains(&0) || !set.contains(&1) {
            return bad("must contain 0 and 1".into());
        }
        for &a in &set {
            if !set.iter().any(|&b| self.add(a, b) == 0) {
                return bad(format!("{a} has no additive inverse inside the subset"));
            }
            if a != 0 && !set.iter().any(|&b| self.mul(a, b) == 1 && self.mul(b, a) == 1) {
                return bad(format!("{a} has no multiplicative inverse inside the subset"));
            }
            for &b in &set {
                if !set.contains(&self.add(a, b)) || !set.contains(&self.mul(a, b)) {
                    return bad(format!("not closed at ({a},{b})"));
                }
                for &c in &set {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return bad(format!("multiplication not associative at ({a},{b},{c})"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                        || self.mul(self.add(b, c), a) != self.add(self.mul(b, a), self.mul(c, a))
                    {
                        return bad(format!("not distributive at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Free-function forms.
pub fn check_vw(q: &QuasiField) -> AxiomReport {
    q.check_vw()
}

pub fn opposite(q: &QuasiField) -> QuasiField {
    q.opposite()
}

pub fn to_ternary(q: &QuasiField) -> Result<TernaryRing, QuasiFieldError> {
    q.to_ternary()
}

pub fn from_ternary(t: &TernaryRing) -> Result<Option<QuasiField>, QuasiFieldError> {
    QuasiField::from_ternary(t)
}

pub fn associativity_witness(q: &QuasiField) -> Option<(usize, usize, usize)> {
    q.associativity_witness()
}

pub fn check_vector_space(q: &QuasiField, sub: &[usize]) -> Result<VectorSpaceReport, QuasiFieldError> {
    q.check_vector_space(sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn gf(p: usize, n: usize) -> QuasiField {
        QuasiField::from_field(&make_field(p, n).unwrap()).unwrap()
    }

    #[test]
    fn field_passes_everything() {
        let k = gf(3, 2);
        let r = k.check_vw();
        assert_eq!(r.flags(), [true; 7]);
        assert_eq!(r.side(), Side::Both);
        assert_eq!(k.associativity_witness(), None);
        assert_eq!(k.opposite(), k);
        assert_eq!(k.opposite().opposite(), k);
    }

    #[test]
    fn prime_field_ternary_round_trip() {
        let k = gf(3, 1);
        let t = k.to_ternary().unwrap();
        for a in 0..3 {
            for x in 0..3 {
                for b in 0..3 {
                    assert_eq!(t.get(a, x, b), (a * x + b) % 3);
                }
            }
        }
        assert_eq!(QuasiField::from_ternary(&t).unwrap(), Some(k));
    }

    #[test]
    fn from_ternary_requires_validation() {
        let t = gf(3, 1).to_ternary_unchecked();
        assert_eq!(QuasiField::from_ternary(&t).unwrap_err(), QuasiFieldError::NotValidated);
    }

    #[test]
    fn relabelled_field_is_still_linear() {
        let q = 5;
        let s = [0usize, 1, 3, 2, 4];
        let sinv = crate::perm::inverse(&s);
        let t = TernaryRing::validated(
            q,
            (0..q * q * q)
                .map(|i| {
                    let (a, x, b) = (i / (q * q), (i / q) % q, i % q);
                    sinv[(s[a] * s[x] + s[b]) % q] as u16
                })
                .collect(),
        )
        .unwrap();
        assert!(QuasiField::from_ternary(&t).unwrap().is_some());
    }

    #[test]
    fn doctored_multiplication_fails_vector_space_check() {
        let mut k = gf(3, 2);
        assert!(k.check_vector_space(&[0, 1, 2]).unwrap().holds());
        k.set_mul(4, 2, 7);
        let r = k.check_vector_space(&[0, 1, 2]).unwrap();
        assert!(!r.holds());
        let (x, y, a) = r.associativity.unwrap();
        assert_ne!(k.mul(k.mul(x, y), a), k.mul(x, k.mul(y, a)));
    }

    #[test]
    fn subfield_errors() {
        let k = gf(3, 2);
        assert!(matches!(k.check_vector_space(&[0, 1]), Err(QuasiFieldError::NotASubfield(_))));
        assert!(matches!(k.check_vector_space(&[0, 1, 2, 9]), Err(QuasiFieldError::NotASubfield(_))));
    }

    #[test]
    fn broken_tables_are_not_quasifields() {
        let q = 3;
        let bad = QuasiField::from_fns(q, |a, b| (a + b) % q, |_, _| 0).unwrap();
        let r = bad.check_vw();
        assert_eq!(r.side(), Side::Neither);
        assert_eq!(r.vw2, Some(Vw2Failure::ZeroDivisor(1, 1)));
        assert!(matches!(bad.to_ternary(), Err(QuasiFieldError::NotAQuasiField(_))));
    }
}
