//! Ternary rings as materialized `q^3` tables: axiom checks, isomorphisms
//! and isotopisms.
//!
//! The table stores `<ax+b>` at flat index `((a*q) + x)*q + b`. Elements are
//! `0..q` with `0` and `1` distinguished.

use rayon::prelude::*;
use thiserror::Error;

use crate::perm::{is_permutation, next_permutation};

/// Largest carrier accepted for a materialized table.
pub const MAX_ORDER: usize = 256;
/// Default search bound for [`find_isomorphism`].
pub const ISOMORPHISM_SEARCH_BOUND: usize = 16;
/// Default search bound for [`find_isotopism`].
pub const ISOTOPISM_SEARCH_BOUND: usize = 9;

const NONE: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TernaryError {
    #[error("carrier size {0} is outside 2..={MAX_ORDER}")]
    BadOrder(usize),
    #[error("table has {got} entries, expected {expected}")]
    BadLength { got: usize, expected: usize },
    #[error("value {value} at index {index} is out of range for q = {q}")]
    EntryOutOfRange { index: usize, value: usize, q: usize },
    #[error("operand {value} out of range for q = {q}")]
    OperandOutOfRange { value: usize, q: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("order {q} exceeds the search bound {bound}")]
    SearchBound { q: usize, bound: usize },
    #[error("H(0) must be 0")]
    HMovesZero,
    #[error("expected a permutation of 0..{0}")]
    NotPermutation(usize),
    #[error("ternary axioms fail: {0}")]
    AxiomsFail(Box<TernaryReport>),
}

/// A finite ternary ring (validated or not).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryRing {
    q: usize,
    table: Vec<u16>,
    validated: bool,
}

/// Per-axiom outcome of [`TernaryRing::check_axioms`]. Each `Some` is the
/// lexicographically smallest counterexample in the order the axiom
/// quantifies its variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TernaryReport {
    /// `x` with `<1x+0> != x` or `<x1+0> != x`.
    pub t1: Option<usize>,
    /// `(a, b)` with `<a0+b> != b` or `<0a+b> != b`.
    pub t2: Option<(usize, usize)>,
    /// `(a, x, y)` for which the number of `b` with `<ax+b> = y` is not one.
    pub t3: Option<(usize, usize, usize)>,
    /// `(a, a', b, b')`, `a != a'`, where `<ax+b> = <a'x+b'>` does not have
    /// exactly one solution.
    pub t4: Option<[usize; 4]>,
    /// `(x, x', y, y')`, `x != x'`, not joined by exactly one pair `(a, b)`.
    pub t5: Option<[usize; 4]>,
}

impl TernaryReport {
    pub fn all_pass(&self) -> bool {
        self.flags().iter().all(|&f| f)
    }

    /// `[T1, T2, T3, T4, T5]`.
    pub fn flags(&self) -> [bool; 5] {
        [
            self.t1.is_none(),
            self.t2.is_none(),
            self.t3.is_none(),
            self.t4.is_none(),
            self.t5.is_none(),
        ]
    }

    /// In the finite case T5 follows from T3 and T4.
    pub fn consistent_with_finite_t5(&self) -> bool {
        !(self.t3.is_none() && self.t4.is_none()) || self.t5.is_none()
    }
}

impl std::fmt::Display for TernaryReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mark = |ok: bool| if ok { "pass" } else { "FAIL" };
        writeln!(f, "T1 {}{}", mark(self.t1.is_none()), wit(&self.t1.map(|x| format!("x={x}"))))?;
        writeln!(
            f,
            "T2 {}{}",
            mark(self.t2.is_none()),
            wit(&self.t2.map(|(a, b)| format!("a={a} b={b}")))
        )?;
        writeln!(
            f,
            "T3 {}{}",
            mark(self.t3.is_none()),
            wit(&self.t3.map(|(a, x, y)| format!("a={a} x={x} y={y}")))
        )?;
        writeln!(
            f,
            "T4 {}{}",
            mark(self.t4.is_none()),
            wit(&self.t4.map(|[a, a2, b, b2]| format!("a={a} a'={a2} b={b} b'={b2}")))
        )?;
        write!(
            f,
            "T5 {}{}",
            mark(self.t5.is_none()),
            wit(&self.t5.map(|[x, x2, y, y2]| format!("x={x} x'={x2} y={y} y'={y2}")))
        )
    }
}

fn wit(w: &Option<String>) -> String {
    w.as_ref().map(|s| format!(" witness {s}")).unwrap_or_default()
}

impl TernaryRing {
    /// Wraps a table without checking the axioms.
    pub fn from_table(q: usize, table: Vec<u16>) -> Result<Self, TernaryError> {
        if !(2..=MAX_ORDER).contains(&q) {
            return Err(TernaryError::BadOrder(q));
        }
        if table.len() != q * q * q {
            return Err(TernaryError::BadLength { got: table.len(), expected: q * q * q });
        }
        if let Some((index, &v)) = table.iter().enumerate().find(|(_, &v)| v as usize >= q) {
            return Err(TernaryError::EntryOutOfRange { index, value: v as usize, q });
        }
        Ok(Self { q, table, validated: false })
    }

    pub fn from_fn(q: usize, f: impl Fn(usize, usize, usize) -> usize) -> Result<Self, TernaryError> {
        let mut table = Vec::with_capacity(q * q * q);
        for a in 0..q {
            for x in 0..q {
                for b in 0..q {
                    table.push(f(a, x, b) as u16);
                }
            }
        }
        Self::from_table(q, table)
    }

    /// Wraps a table and requires T1–T5.
    pub fn validated(q: usize, table: Vec<u16>) -> Result<Self, TernaryError> {
        let mut t = Self::from_table(q, table)?;
        t.validate()?;
        Ok(t)
    }

    /// Runs the axiom check and records the outcome.
    pub fn validate(&mut self) -> Result<TernaryReport, TernaryError> {
        let report = self.check_axioms();
        self.validated = report.all_pass();
        if self.validated {
            Ok(report)
        } else {
            Err(TernaryError::AxiomsFail(Box::new(report)))
        }
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn table(&self) -> &[u16] {
        &self.table
    }

    /// Overwrites one entry; clears the validated flag.
    pub fn set(&mut self, a: usize, x: usize, b: usize, y: usize) -> Result<(), TernaryError> {
        for v in [a, x, b, y] {
            self.check(v)?;
        }
        let q = self.q;
        self.table[(a * q + x) * q + b] = y as u16;
        self.validated = false;
        Ok(())
    }

    #[inline]
    pub fn get(&self, a: usize, x: usize, b: usize) -> usize {
        self.table[(a * self.q + x) * self.q + b] as usize
    }

    fn check(&self, v: usize) -> Result<(), TernaryError> {
        if v < self.q {
            Ok(())
        } else {
            Err(TernaryError::OperandOutOfRange { value: v, q: self.q })
        }
    }

    /// `<ax+b>`.
    pub fn eval(&self, a: usize, x: usize, b: usize) -> Result<usize, TernaryError> {
        for v in [a, x, b] {
            self.check(v)?;
        }
        Ok(self.get(a, x, b))
    }

    /// Exhaustive T1–T5 check. T5 is always checked on its own, even when
    /// T3 and T4 already hold.
    pub fn check_axioms(&self) -> TernaryReport {
        let q = self.q;
        let t1 = (0..q).find(|&x| self.get(1, x, 0) != x || self.get(x, 1, 0) != x);
        let t2 = (0..q)
            .flat_map(|a| (0..q).map(move |b| (a, b)))
            .find(|&(a, b)| self.get(a, 0, b) != b || self.get(0, a, b) != b);
        let t3 = self.t3_witness();
        let t4 = self.t4_witness(t3.is_none());
        let t5 = self.t5_witness();
        TernaryReport { t1, t2, t3, t4, t5 }
    }

    fn t3_witness(&self) -> Option<(usize, usize, usize)> {
        let q = self.q;
        let mut counts = vec![0usize; q];
        for a in 0..q {
            for x in 0..q {
                counts.iter_mut().for_each(|c| *c = 0);
                for b in 0..q {
                    counts[self.get(a, x, b)] += 1;
                }
                if let Some(y) = counts.iter().position(|&c| c != 1) {
                    return Some((a, x, y));
                }
            }
        }
        None
    }

    fn t4_witness(&self, t3_holds: bool) -> Option<[usize; 4]> {
        let q = self.q;
        let mut counts = vec![0usize; q];
        if t3_holds {
            // b' is determined by (a', x, y) once T3 holds.
            let mut solve_b = vec![0usize; q * q * q];
            for a in 0..q {
                for x in 0..q {
                    for b in 0..q {
                        solve_b[(a * q + x) * q + self.get(a, x, b)] = b;
                    }
                }
            }
            for a in 0..q {
                for a2 in (0..q).filter(|&a2| a2 != a) {
                    for b in 0..q {
                        counts.iter_mut().for_each(|c| *c = 0);
                        for x in 0..q {
                            counts[solve_b[(a2 * q + x) * q + self.get(a, x, b)]] += 1;
                        }
                        if let Some(b2) = counts.iter().position(|&c| c != 1) {
                            return Some([a, a2, b, b2]);
                        }
                    }
                }
            }
            return None;
        }
        for a in 0..q {
            for a2 in (0..q).filter(|&a2| a2 != a) {
                for b in 0..q {
                    for b2 in 0..q {
                        let n = (0..q).filter(|&x| self.get(a, x, b) == self.get(a2, x, b2)).count();
                        if n != 1 {
                            return Some([a, a2, b, b2]);
                        }
                    }
                }
            }
        }
        None
    }

    fn t5_witness(&self) -> Option<[usize; 4]> {
        let q = self.q;
        let mut counts = vec![0usize; q * q];
        for x in 0..q {
            for x2 in (0..q).filter(|&x2| x2 != x) {
                counts.iter_mut().for_each(|c| *c = 0);
                for a in 0..q {
                    for b in 0..q {
                        counts[self.get(a, x, b) * q + self.get(a, x2, b)] += 1;
                    }
                }
                if let Some(k) = counts.iter().position(|&c| c != 1) {
                    return Some([x, x2, k / q, k % q]);
                }
            }
        }
        None
    }

    fn same_size(&self, other: &TernaryRing) -> Result<(), TernaryError> {
        if self.q == other.q {
            Ok(())
        } else {
            Err(TernaryError::SizeMismatch(self.q, other.q))
        }
    }
}

/// Free-function forms.
pub fn eval(t: &TernaryRing, a: usize, x: usize, b: usize) -> Result<usize, TernaryError> {
    t.eval(a, x, b)
}

pub fn check_ternary_axioms(t: &TernaryRing) -> TernaryReport {
    t.check_axioms()
}

/// Why a candidate map is not an isomorphism / isotopism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapDefect {
    NotPermutation,
    ZeroNotFixed,
    OneNotFixed,
    /// First `(a, x, b)` where the defining identity fails.
    Triple(usize, usize, usize),
}

/// First defect of `map` as an isomorphism `s -> t`, or `None` if it is one.
pub fn isomorphism_defect(
    s: &TernaryRing,
    t: &TernaryRing,
    map: &[usize],
) -> Result<Option<MapDefect>, TernaryError> {
    s.same_size(t)?;
    let q = s.q;
    if !is_permutation(map, q) {
        return Ok(Some(MapDefect::NotPermutation));
    }
    if map[0] != 0 {
        return Ok(Some(MapDefect::ZeroNotFixed));
    }
    if map[1] != 1 {
        return Ok(Some(MapDefect::OneNotFixed));
    }
    for a in 0..q {
        for x in 0..q {
            for b in 0..q {
                if map[s.get(a, x, b)] != t.get(map[a], map[x], map[b]) {
                    return Ok(Some(MapDefect::Triple(a, x, b)));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_isomorphism(s: &TernaryRing, t: &TernaryRing, map: &[usize]) -> Result<bool, TernaryError> {
    Ok(isomorphism_defect(s, t, map)?.is_none())
}

/// Outcome of an exhaustive isomorphism search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsomorphismSearch {
    /// Lexicographically first isomorphism, if any.
    pub map: Option<Vec<usize>>,
    /// Branching decisions tried.
    pub nodes: u64,
    /// `(q-2)!`, the size of the unpruned space of maps fixing 0 and 1.
    pub space: u128,
}

struct IsoSearch<'a> {
    s: &'a TernaryRing,
    t: &'a TernaryRing,
    fwd: Vec<usize>,
    bwd: Vec<usize>,
    trail: Vec<usize>,
    nodes: u64,
}

impl IsoSearch<'_> {
    /// Assigns `x -> y` and every image forced by fully assigned triples.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut pending = vec![(x, y)];
        while let Some((x, y)) = pending.pop() {
            if self.fwd[x] != NONE {
                if self.fwd[x] != y {
                    return false;
                }
                continue;
            }
            if self.bwd[y] != NONE {
                return false;
            }
            self.fwd[x] = y;
            self.bwd[y] = x;
            self.trail.push(x);
            for i in 0..self.trail.len() {
                for j in 0..self.trail.len() {
                    let (u, v) = (self.trail[i], self.trail[j]);
                    for (a, xx, b) in [(x, u, v), (u, x, v), (u, v, x)] {
                        let src = self.s.get(a, xx, b);
                        let img = self.t.get(self.fwd[a], self.fwd[xx], self.fwd[b]);
                        if self.fwd[src] != NONE {
                            if self.fwd[src] != img {
                                return false;
                            }
                        } else if self.bwd[img] != NONE {
                            return false;
                        } else {
                            pending.push((src, img));
                        }
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("non-empty trail");
            self.bwd[self.fwd[x]] = NONE;
            self.fwd[x] = NONE;
        }
    }

    fn dfs(&mut self) -> bool {
        let Some(next) = self.fwd.iter().position(|&v| v == NONE) else {
            return true;
        };
        for y in 0..self.s.q {
            if self.bwd[y] != NONE {
                continue;
            }
            self.nodes += 1;
            let mark = self.trail.len();
            if self.assign(next, y) && self.dfs() {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

/// Backtracking search for the lexicographically first isomorphism `s -> t`.
///
/// Branches on the smallest unassigned element, images in increasing order;
/// every fully assigned triple forces the image of its value.
pub fn find_isomorphism_with_bound(
    s: &TernaryRing,
    t: &TernaryRing,
    bound: usize,
) -> Result<IsomorphismSearch, TernaryError> {
    s.same_size(t)?;
    let q = s.q;
    if q > bound {
        return Err(TernaryError::SearchBound { q, bound });
    }
    let space = (2..=q.saturating_sub(2) as u128).product::<u128>();
    let mut search = IsoSearch {
        s,
        t,
        fwd: vec![NONE; q],
        bwd: vec![NONE; q],
        trail: Vec::with_capacity(q),
        nodes: 0,
    };
    let found = search.assign(0, 0) && search.assign(1, 1) && search.dfs();
    let map = found.then(|| search.fwd.clone());
    if let Some(m) = &map {
        debug_assert!(isomorphism_defect(s, t, m)?.is_none());
    }
    Ok(IsomorphismSearch { map, nodes: search.nodes, space })
}

pub fn find_isomorphism(s: &TernaryRing, t: &TernaryRing) -> Result<Option<Vec<usize>>, TernaryError> {
    Ok(find_isomorphism_with_bound(s, t, ISOMORPHISM_SEARCH_BOUND)?.map)
}

/// A triple `(F, G, H)` with `H(<ax+b>) = <F(a)G(x)+H(b)>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isotopism {
    pub f: Vec<usize>,
    pub g: Vec<usize>,
    pub h: Vec<usize>,
}

impl Isotopism {
    pub fn identity(q: usize) -> Self {
        let id: Vec<usize> = (0..q).collect();
        Self { f: id.clone(), g: id.clone(), h: id }
    }

    /// `(f, f, f)` for an isomorphism `f`.
    pub fn from_isomorphism(map: &[usize]) -> Self {
        Self { f: map.to_vec(), g: map.to_vec(), h: map.to_vec() }
    }

    /// Componentwise `next ∘ self`.
    pub fn then(&self, next: &Isotopism) -> Isotopism {
        let comp = |a: &[usize], b: &[usize]| a.iter().map(|&x| b[x]).collect::<Vec<_>>();
        Isotopism {
            f: comp(&self.f, &next.f),
            g: comp(&self.g, &next.g),
            h: comp(&self.h, &next.h),
        }
    }

    /// `(F^{-1}(1), G^{-1}(1))`.
    pub fn unit_preimages(&self) -> (usize, usize) {
        let pre = |p: &[usize]| p.iter().position(|&v| v == 1).unwrap_or(NONE);
        (pre(&self.f), pre(&self.g))
    }
}

pub fn isotopism_defect(
    s: &TernaryRing,
    t: &TernaryRing,
    iso: &Isotopism,
) -> Result<Option<MapDefect>, TernaryError> {
    s.same_size(t)?;
    let q = s.q;
    if ![&iso.f, &iso.g, &iso.h].iter().all(|p| is_permutation(p, q)) {
        return Ok(Some(MapDefect::NotPermutation));
    }
    if iso.h[0] != 0 {
        return Ok(Some(MapDefect::ZeroNotFixed));
    }
    Ok(first_isotopism_failure(s, t, &iso.f, &iso.g, &iso.h).map(|(a, x, b)| MapDefect::Triple(a, x, b)))
}

fn first_isotopism_failure(
    s: &TernaryRing,
    t: &TernaryRing,
    f: &[usize],
    g: &[usize],
    h: &[usize],
) -> Option<(usize, usize, usize)> {
    let q = s.q;
    for a in 0..q {
        for x in 0..q {
            for b in 0..q {
                if h[s.get(a, x, b)] != t.get(f[a], g[x], h[b]) {
                    return Some((a, x, b));
                }
            }
        }
    }
    None
}

pub fn is_isotopism(s: &TernaryRing, t: &TernaryRing, iso: &Isotopism) -> Result<bool, TernaryError> {
    Ok(isotopism_defect(s, t, iso)?.is_none())
}

/// Rebuilds `F` and `G` from `H` and the preimages of 1:
/// `F(a) = H(<a G^{-1}(1) + 0>)`, `G(a) = H(<F^{-1}(1) a + 0>)`.
/// Returns the triple only when it is a genuine isotopism.
pub fn complete_isotopism(
    s: &TernaryRing,
    t: &TernaryRing,
    h: &[usize],
    f_inv_one: usize,
    g_inv_one: usize,
) -> Result<Option<Isotopism>, TernaryError> {
    s.same_size(t)?;
    let q = s.q;
    if !is_permutation(h, q) {
        return Err(TernaryError::NotPermutation(q));
    }
    if h[0] != 0 {
        return Err(TernaryError::HMovesZero);
    }
    s.check(f_inv_one)?;
    s.check(g_inv_one)?;
    let f: Vec<usize> = (0..q).map(|a| h[s.get(a, g_inv_one, 0)]).collect();
    let g: Vec<usize> = (0..q).map(|a| h[s.get(f_inv_one, a, 0)]).collect();
    if !is_permutation(&f, q) || !is_permutation(&g, q) {
        return Ok(None);
    }
    if first_isotopism_failure(s, t, &f, &g, h).is_some() {
        return Ok(None);
    }
    Ok(Some(Isotopism { f, g, h: h.to_vec() }))
}

/// First isotopism in lexicographic `(H, F^{-1}(1), G^{-1}(1))` order.
///
/// The `H` space is split by `H(1)`; chunks run in parallel and the first
/// non-empty chunk in order wins, so the answer does not depend on the
/// thread count.
pub fn find_isotopism_with_bound(
    s: &TernaryRing,
    t: &TernaryRing,
    bound: usize,
) -> Result<Option<Isotopism>, TernaryError> {
    s.same_size(t)?;
    let q = s.q;
    if q > bound {
        return Err(TernaryError::SearchBound { q, bound });
    }
    let found = (1..q).into_par_iter().find_map_first(|first| {
        let mut rest: Vec<usize> = (1..q).filter(|&v| v != first).collect();
        loop {
            let mut h = Vec::with_capacity(q);
            h.push(0);
            h.push(first);
            h.extend_from_slice(&rest);
            for f1 in 0..q {
                for g1 in 0..q {
                    if let Ok(Some(iso)) = complete_isotopism(s, t, &h, f1, g1) {
                        return Some(iso);
                    }
                }
            }
            if !next_permutation(&mut rest) {
                return None;
            }
        }
    });
    Ok(found)
}

pub fn find_isotopism(s: &TernaryRing, t: &TernaryRing) -> Result<Option<Isotopism>, TernaryError> {
    find_isotopism_with_bound(s, t, ISOTOPISM_SEARCH_BOUND)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mod_ring(q: usize) -> TernaryRing {
        TernaryRing::validated(
            q,
            (0..q * q * q)
                .map(|i| {
                    let (a, x, b) = (i / (q * q), (i / q) % q, i % q);
                    ((a * x + b) % q) as u16
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn eval_examples() {
        let t = mod_ring(3);
        assert_eq!(t.eval(2, 2, 1).unwrap(), 2);
        for x in 0..3 {
            assert_eq!(t.eval(1, x, 0).unwrap(), x);
        }
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(t.eval(a, 0, b).unwrap(), b);
            }
        }
        assert!(matches!(t.eval(3, 0, 0), Err(TernaryError::OperandOutOfRange { .. })));
    }

    #[test]
    fn t1_mutation_has_minimal_witness() {
        let mut t = mod_ring(3);
        t.set(1, 1, 0, 0).unwrap();
        assert!(!t.is_validated());
        let r = t.check_axioms();
        assert_eq!(r.t1, Some(1));
        assert!(r.consistent_with_finite_t5());
    }

    #[test]
    fn table_validation_errors() {
        assert_eq!(TernaryRing::from_table(1, vec![0]).unwrap_err(), TernaryError::BadOrder(1));
        assert!(matches!(TernaryRing::from_table(2, vec![0; 7]), Err(TernaryError::BadLength { .. })));
        assert!(matches!(
            TernaryRing::from_table(2, vec![0, 0, 0, 2, 0, 0, 0, 0]),
            Err(TernaryError::EntryOutOfRange { index: 3, .. })
        ));
        assert!(matches!(TernaryRing::validated(2, vec![0; 8]), Err(TernaryError::AxiomsFail(_))));
    }

    #[test]
    fn identity_and_transposition() {
        let t = mod_ring(5);
        assert!(is_isomorphism(&t, &t, &[0, 1, 2, 3, 4]).unwrap());
        // 2 <-> 3 in Z/5 does not commute with a*x+b: 2*2+0 = 4 but 3*3 = 4.
        let defect = isomorphism_defect(&t, &t, &[0, 1, 3, 2, 4]).unwrap();
        assert!(matches!(defect, Some(MapDefect::Triple(..))));
        assert_eq!(isomorphism_defect(&t, &t, &[1, 0, 2, 3, 4]).unwrap(), Some(MapDefect::ZeroNotFixed));
        assert_eq!(isomorphism_defect(&t, &t, &[0, 0, 2, 3, 4]).unwrap(), Some(MapDefect::NotPermutation));
        assert!(matches!(is_isomorphism(&t, &mod_ring(3), &[0, 1, 2]), Err(TernaryError::SizeMismatch(5, 3))));
    }

    #[test]
    fn self_isomorphism_search_returns_identity() {
        let t = mod_ring(7);
        assert_eq!(find_isomorphism(&t, &t).unwrap(), Some((0..7).collect()));
        let big = TernaryRing::from_fn(17, |a, x, b| (a * x + b) % 17).unwrap();
        assert!(matches!(find_isomorphism(&big, &big), Err(TernaryError::SearchBound { .. })));
    }

    #[test]
    fn complete_isotopism_identity_and_degenerate() {
        let t = mod_ring(3);
        let id = complete_isotopism(&t, &t, &[0, 1, 2], 1, 1).unwrap().unwrap();
        assert_eq!(id, Isotopism::identity(3));
        // G^{-1}(1) = 0 makes F constant.
        assert_eq!(complete_isotopism(&t, &t, &[0, 1, 2], 1, 0).unwrap(), None);
        assert_eq!(complete_isotopism(&t, &t, &[1, 0, 2], 1, 1).unwrap_err(), TernaryError::HMovesZero);
    }

    #[test]
    fn self_isotopism_search_finds_identity_first() {
        let t = mod_ring(5);
        assert_eq!(find_isotopism(&t, &t).unwrap(), Some(Isotopism::identity(5)));
    }

    #[test]
    fn scaling_isotopism_of_prime_field() {
        // (F, G, H) = (a -> a, x -> 2x, y -> 2y) on Z/5.
        let t = mod_ring(5);
        let iso = Isotopism {
            f: (0..5).collect(),
            g: (0..5).map(|x| 2 * x % 5).collect(),
            h: (0..5).map(|x| 2 * x % 5).collect(),
        };
        assert!(is_isotopism(&t, &t, &iso).unwrap());
        let (f1, g1) = iso.unit_preimages();
        assert_eq!(complete_isotopism(&t, &t, &iso.h, f1, g1).unwrap(), Some(iso.clone()));
        let twice = iso.then(&iso);
        assert!(is_isotopism(&t, &t, &twice).unwrap());
    }
}
