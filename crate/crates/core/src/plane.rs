//! Finite affine planes stored as explicit incidence lists, their axioms,
//! and coordinatization by a ternary ring.
//!
//! Points are `0..n`. For planes built from a ternary ring of order `q`,
//! the point `(x, y)` is `x * q + y`.

use std::sync::OnceLock;

use thiserror::Error;

use crate::ternary::{Isotopism, TernaryError, TernaryRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlaneError {
    #[error("ternary ring has not been validated")]
    NotValidated,
    #[error("line {line} is empty")]
    EmptyLine { line: usize },
    #[error("line {line} is not strictly increasing")]
    UnsortedLine { line: usize },
    #[error("line {line} mentions point {point}, but there are only {n} points")]
    PointOutOfRange { line: usize, point: usize, n: usize },
    #[error("index {0} is out of range")]
    OutOfRange(usize),
    #[error("points {0} and {1} are equal")]
    SamePoint(usize, usize),
    #[error("points {0} and {1} do not lie on exactly one line")]
    NoUniqueLine(usize, usize),
    #[error("no unique parallel to line {line} through point {point}")]
    NoUniqueParallel { line: usize, point: usize },
    #[error("parallelism is not transitive at lines {0:?}")]
    NotTransitive((usize, usize, usize)),
    #[error("plane fails its axioms:\n{0}")]
    Axioms(Box<PlaneReport>),
    #[error("plane has no order (lines of unequal size or n is not a square)")]
    NoOrder,
    #[error("invalid frame: {0}")]
    BadFrame(String),
    #[error("frames must share both axes")]
    FrameAxesDiffer,
    #[error("coordinatization failed: {0}")]
    Coordinatize(String),
    #[error(transparent)]
    Ternary(#[from] TernaryError),
}

/// Result of [`AffinePlane::check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneReport {
    /// First pair `(p1, p2)`, `p1 < p2`, with the number of lines through
    /// both when that number is not 1.
    pub a1: Option<(usize, usize, usize)>,
    /// First `(line, point)` with the point off the line and the number of
    /// parallels through it when that number is not 1.
    pub a2: Option<(usize, usize, usize)>,
    /// The first non-collinear triple; `None` means A3 fails.
    pub a3: Option<[usize; 3]>,
    /// Lines `(a, b, c)` with `a ∥ b`, `b ∥ c` but `a ∦ c`.
    pub transitivity: Option<(usize, usize, usize)>,
}

impl PlaneReport {
    pub fn all_pass(&self) -> bool {
        self.a1.is_none() && self.a2.is_none() && self.a3.is_some() && self.transitivity.is_none()
    }
}

impl std::fmt::Display for PlaneReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.a1 {
            None => writeln!(f, "A1 pass")?,
            Some((p, q, c)) => writeln!(f, "A1 FAIL witness points {p} {q} lie on {c} lines")?,
        }
        match self.a2 {
            None => writeln!(f, "A2 pass")?,
            Some((l, p, c)) => writeln!(f, "A2 FAIL witness line {l} point {p} has {c} parallels")?,
        }
        match self.a3 {
            Some([a, b, c]) => writeln!(f, "A3 pass witness {a} {b} {c}")?,
            None => writeln!(f, "A3 FAIL all points collinear")?,
        }
        match self.transitivity {
            None => write!(f, "parallel-transitivity pass"),
            Some((a, b, c)) => write!(f, "parallel-transitivity FAIL witness lines {a} {b} {c}"),
        }
    }
}

/// Slope of a line relative to a frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slope {
    Finite(usize),
    Infinity,
}

/// Two non-parallel axes `l`, `m` and a unit point `z` off both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoordinateFrame {
    pub l: usize,
    pub m: usize,
    pub z: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct ParallelClasses {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct AffinePlane {
    n: usize,
    lines: Vec<Vec<usize>>,
    point_lines: Vec<Vec<usize>>,
    order: Option<usize>,
    parallels: OnceLock<Result<ParallelClasses, PlaneError>>,
}

impl PartialEq for AffinePlane {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.lines == other.lines && self.order == other.order
    }
}

impl Eq for AffinePlane {}

impl AffinePlane {
    /// Builds a plane from explicit lines; the lines are put into canonical
    /// (lexicographic) order. Axioms are not checked.
    pub fn from_lines(n: usize, mut lines: Vec<Vec<usize>>) -> Result<Self, PlaneError> {
        for (i, line) in lines.iter().enumerate() {
            if line.is_empty() {
                return Err(PlaneError::EmptyLine { line: i });
            }
            if let Some(&point) = line.iter().find(|&&p| p >= n) {
                return Err(PlaneError::PointOutOfRange { line: i, point, n });
            }
            if line.windows(2).any(|w| w[0] >= w[1]) {
                return Err(PlaneError::UnsortedLine { line: i });
            }
        }
        lines.sort();
        let mut point_lines = vec![Vec::new(); n];
        for (i, line) in lines.iter().enumerate() {
            for &p in line {
                point_lines[p].push(i);
            }
        }
        let k = lines.first().map_or(0, Vec::len);
        let order = (k > 0 && k * k == n && lines.iter().all(|l| l.len() == k)).then_some(k);
        Ok(Self { n, lines, point_lines, order, parallels: OnceLock::new() })
    }

    /// The plane of a validated ternary ring: verticals `x = x0` and the
    /// graphs `y = <ax+b>`.
    pub fn from_ternary(t: &TernaryRing) -> Result<Self, PlaneError> {
        if !t.is_validated() {
            return Err(PlaneError::NotValidated);
        }
        Ok(Self::from_ternary_unchecked(t))
    }

    /// Same construction for arbitrary (possibly broken) tables.
    pub fn from_ternary_unchecked(t: &TernaryRing) -> Self {
        let q = t.order();
        let mut lines: Vec<Vec<usize>> = (0..q).map(|x| (0..q).map(|y| x * q + y).collect()).collect();
        for a in 0..q {
            for b in 0..q {
                lines.push((0..q).map(|x| x * q + t.get(a, x, b)).collect());
            }
        }
        lines.sort();
        lines.dedup();
        let mut plane = Self::from_lines(q * q, lines).expect("graph lines are well formed");
        plane.order = Some(q);
        plane
    }

    pub fn point_count(&self) -> usize {
        self.n
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn line(&self, i: usize) -> &[usize] {
        &self.lines[i]
    }

    /// Indices of the lines through `p`, ascending.
    pub fn lines_through(&self, p: usize) -> &[usize] {
        &self.point_lines[p]
    }

    pub fn order(&self) -> Option<usize> {
        self.order
    }

    pub fn contains(&self, line: usize, p: usize) -> bool {
        self.lines[line].binary_search(&p).is_ok()
    }

    /// Index of a line given by its sorted point list.
    pub fn line_index(&self, points: &[usize]) -> Option<usize> {
        self.lines.binary_search_by(|l| l.as_slice().cmp(points)).ok()
    }

    /// Removes a line (mutation testing).
    pub fn without_line(&self, i: usize) -> Result<Self, PlaneError> {
        let mut lines = self.lines.clone();
        lines.remove(i);
        Self::from_lines(self.n, lines)
    }

    /// Adds a second copy of a line (mutation testing).
    pub fn with_duplicate_line(&self, i: usize) -> Result<Self, PlaneError> {
        let mut lines = self.lines.clone();
        lines.push(lines[i].clone());
        Self::from_lines(self.n, lines)
    }

    fn check_point(&self, p: usize) -> Result<(), PlaneError> {
        if p < self.n {
            Ok(())
        } else {
            Err(PlaneError::OutOfRange(p))
        }
    }

    fn check_line(&self, l: usize) -> Result<(), PlaneError> {
        if l < self.lines.len() {
            Ok(())
        } else {
            Err(PlaneError::OutOfRange(l))
        }
    }

    /// `meets[j]` is true when line `j` shares a point with line `l`.
    fn meets_row(&self, l: usize) -> Vec<bool> {
        let mut meets = vec![false; self.lines.len()];
        for &p in &self.lines[l] {
            for &j in &self.point_lines[p] {
                meets[j] = true;
            }
        }
        meets
    }

    pub fn are_parallel(&self, a: usize, b: usize) -> bool {
        a == b || !self.lines[a].iter().any(|&p| self.contains(b, p))
    }

    /// The unique line through `p1` and `p2`.
    pub fn line_through(&self, p1: usize, p2: usize) -> Result<usize, PlaneError> {
        self.check_point(p1)?;
        self.check_point(p2)?;
        if p1 == p2 {
            return Err(PlaneError::SamePoint(p1, p2));
        }
        let mut found = self.point_lines[p1].iter().filter(|&&l| self.contains(l, p2));
        match (found.next(), found.next()) {
            (Some(&l), None) => Ok(l),
            _ => Err(PlaneError::NoUniqueLine(p1.min(p2), p1.max(p2))),
        }
    }

    /// The unique line through `p` parallel to `l` (`l` itself if `p ∈ l`).
    pub fn parallel_through(&self, l: usize, p: usize) -> Result<usize, PlaneError> {
        self.check_line(l)?;
        self.check_point(p)?;
        if self.contains(l, p) {
            return Ok(l);
        }
        let mut found = self.point_lines[p].iter().filter(|&&j| self.are_parallel(l, j));
        match (found.next(), found.next()) {
            (Some(&j), None) => Ok(j),
            _ => Err(PlaneError::NoUniqueParallel { line: l, point: p }),
        }
    }

    /// The common point of two distinct lines, if exactly one.
    pub fn intersection(&self, a: usize, b: usize) -> Option<usize> {
        let mut common = self.lines[a].iter().filter(|&&p| self.contains(b, p));
        match (common.next(), common.next()) {
            (Some(&p), None) if a != b => Some(p),
            _ => None,
        }
    }

    /// Exhaustive check of A1–A3 and transitivity of parallelism.
    pub fn check_axioms(&self) -> PlaneReport {
        PlaneReport {
            a1: self.a1_witness(),
            a2: self.a2_witness(),
            a3: self.non_collinear_triple(),
            transitivity: self.transitivity_witness(),
        }
    }

    fn a1_witness(&self) -> Option<(usize, usize, usize)> {
        let mut count = vec![0usize; self.n];
        for p in 0..self.n {
            count.iter_mut().for_each(|c| *c = 0);
            for &l in &self.point_lines[p] {
                for &r in &self.lines[l] {
                    count[r] += 1;
                }
            }
            if let Some(r) = (p + 1..self.n).find(|&r| count[r] != 1) {
                return Some((p, r, count[r]));
            }
        }
        None
    }

    fn a2_witness(&self) -> Option<(usize, usize, usize)> {
        for l in 0..self.lines.len() {
            let meets = self.meets_row(l);
            for p in 0..self.n {
                if self.contains(l, p) {
                    continue;
                }
                let parallels = self.point_lines[p].iter().filter(|&&j| !meets[j]).count();
                if parallels != 1 {
                    return Some((l, p, parallels));
                }
            }
        }
        None
    }

    fn collinear(&self, a: usize, b: usize, c: usize) -> bool {
        self.point_lines[a].iter().any(|&l| self.contains(l, b) && self.contains(l, c))
    }

    fn non_collinear_triple(&self) -> Option<[usize; 3]> {
        for a in 0..self.n {
            for b in a + 1..self.n {
                if let Some(c) = (b + 1..self.n).find(|&c| !self.collinear(a, b, c)) {
                    return Some([a, b, c]);
                }
            }
        }
        None
    }

    fn transitivity_witness(&self) -> Option<(usize, usize, usize)> {
        let m = self.lines.len();
        let rows: Vec<Vec<bool>> = (0..m).map(|l| self.meets_row(l)).collect();
        let parallel = |a: usize, b: usize| a == b || !rows[a][b];
        for b in 0..m {
            let class: Vec<usize> = (0..m).filter(|&a| parallel(a, b)).collect();
            for &a in &class {
                if let Some(&c) = class.iter().find(|&&c| !parallel(a, c)) {
                    return Some((a, b, c));
                }
            }
        }
        None
    }

    /// Parallel classes, each sorted, ordered by smallest member.
    pub fn parallel_classes(&self) -> Result<&[Vec<usize>], PlaneError> {
        Ok(&self.parallels()?.classes)
    }

    /// Index (into [`Self::parallel_classes`]) of the class of `line`.
    pub fn class_of(&self, line: usize) -> Result<usize, PlaneError> {
        self.check_line(line)?;
        Ok(self.parallels()?.class_of[line])
    }

    fn parallels(&self) -> Result<&ParallelClasses, PlaneError> {
        self.parallels.get_or_init(|| self.compute_parallels()).as_ref().map_err(Clone::clone)
    }

    fn compute_parallels(&self) -> Result<ParallelClasses, PlaneError> {
        let m = self.lines.len();
        let mut class_of = vec![usize::MAX; m];
        let mut classes = Vec::new();
        for l in 0..m {
            if class_of[l] != usize::MAX {
                continue;
            }
            let meets = self.meets_row(l);
            let class: Vec<usize> = (0..m).filter(|&j| j == l || !meets[j]).collect();
            for &j in &class {
                if class_of[j] != usize::MAX {
                    return Err(PlaneError::NotTransitive((class[0], l, j)));
                }
                class_of[j] = classes.len();
            }
            for &a in &class {
                if let Some(&c) = class.iter().find(|&&c| !self.are_parallel(a, c)) {
                    return Err(PlaneError::NotTransitive((a, l, c)));
                }
            }
            classes.push(class);
        }
        Ok(ParallelClasses { classes, class_of })
    }

    /// `l = {(x, 0)}`, `m = {(0, y)}`, `z = (1, 1)` for planes built from a
    /// ternary ring.
    pub fn canonical_frame(&self) -> Result<CoordinateFrame, PlaneError> {
        let q = self.order.ok_or(PlaneError::NoOrder)?;
        let missing = || PlaneError::BadFrame("canonical axes are not lines of this plane".into());
        let l = self.line_index(&(0..q).map(|x| x * q).collect::<Vec<_>>()).ok_or_else(missing)?;
        let m = self.line_index(&(0..q).collect::<Vec<_>>()).ok_or_else(missing)?;
        Ok(CoordinateFrame { l, m, z: q + 1 })
    }

    /// Coordinatizes the plane with respect to `frame`.
    pub fn coordinatize(&self, frame: CoordinateFrame) -> Result<(TernaryRing, Coordinatization), PlaneError> {
        Coordinatization::new(self, frame)
    }

    /// The isotopism between the rings of two frames sharing `l` and `m`,
    /// read off from the identity map of the plane.
    pub fn isotopism_from_frames(
        &self,
        first: CoordinateFrame,
        second: CoordinateFrame,
    ) -> Result<Isotopism, PlaneError> {
        if first.l != second.l || first.m != second.m {
            return Err(PlaneError::FrameAxesDiffer);
        }
        let (_, c1) = self.coordinatize(first)?;
        let (_, c2) = self.coordinatize(second)?;
        let q = c1.q;
        let g = (0..q).map(|x| c2.coords(c1.l_point(x)).0).collect();
        let h = (0..q).map(|y| c2.coords(c1.m_point(y)).1).collect();
        let f = (0..q)
            .map(|a| match c2.slope(c1.slope_line(a)) {
                Slope::Finite(s) => Ok(s),
                Slope::Infinity => Err(PlaneError::Coordinatize("slope line became vertical".into())),
            })
            .collect::<Result<_, _>>()?;
        Ok(Isotopism { f, g, h })
    }
}

/// The labeling produced by [`AffinePlane::coordinatize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coordinatization {
    q: usize,
    frame: CoordinateFrame,
    origin: usize,
    diagonal: usize,
    l_points: Vec<usize>,
    m_points: Vec<usize>,
    coords: Vec<(usize, usize)>,
    grid: Vec<usize>,
    line_class: Vec<usize>,
    class_slope: Vec<Slope>,
    slope_lines: Vec<usize>,
}

impl Coordinatization {
    fn new(plane: &AffinePlane, frame: CoordinateFrame) -> Result<(TernaryRing, Self), PlaneError> {
        let bad = |s: &str| PlaneError::BadFrame(s.to_string());
        let fail = |s: String| PlaneError::Coordinatize(s);
        let CoordinateFrame { l, m, z } = frame;
        plane.check_line(l)?;
        plane.check_line(m)?;
        plane.check_point(z)?;
        let report = plane.check_axioms();
        if !report.all_pass() {
            return Err(PlaneError::Axioms(Box::new(report)));
        }
        let q = plane.lines[l].len();
        if plane.n != q * q || plane.lines.iter().any(|line| line.len() != q) {
            return Err(PlaneError::NoOrder);
        }
        let origin = plane.intersection(l, m).ok_or_else(|| bad("l and m are parallel"))?;
        if plane.contains(l, z) || plane.contains(m, z) {
            return Err(bad("z lies on an axis"));
        }
        let diagonal = plane.line_through(origin, z)?;

        let ParallelClasses { classes, class_of: line_class } = plane.parallels()?.clone();

        // Projection onto l along m, and onto m along l.
        let onto_l = |p: usize| -> Result<usize, PlaneError> {
            let v = plane.parallel_through(m, p)?;
            plane.intersection(v, l).ok_or_else(|| fail(format!("no foot on l for point {p}")))
        };
        let onto_m = |p: usize| -> Result<usize, PlaneError> {
            let h = plane.parallel_through(l, p)?;
            plane.intersection(h, m).ok_or_else(|| fail(format!("no foot on m for point {p}")))
        };

        let unit = onto_l(z)?;
        let mut l_points = vec![origin, unit];
        l_points.extend(plane.lines[l].iter().copied().filter(|&p| p != origin && p != unit));

        let mut m_points = Vec::with_capacity(q);
        for &x in &l_points {
            let v = plane.parallel_through(m, x)?;
            let w = plane
                .intersection(v, diagonal)
                .ok_or_else(|| fail(format!("vertical through {x} misses the diagonal")))?;
            m_points.push(onto_m(w)?);
        }

        let mut l_label = vec![usize::MAX; plane.n];
        let mut m_label = vec![usize::MAX; plane.n];
        for k in 0..q {
            l_label[l_points[k]] = k;
            m_label[m_points[k]] = k;
        }
        if m_points.iter().any(|&p| !plane.contains(m, p)) || m_label.iter().filter(|&&v| v != usize::MAX).count() != q {
            return Err(fail("the map from l to m is not a bijection".into()));
        }

        let mut coords = vec![(0, 0); plane.n];
        let mut grid = vec![usize::MAX; plane.n];
        for p in 0..plane.n {
            let (x, y) = (l_label[onto_l(p)?], m_label[onto_m(p)?]);
            if grid[x * q + y] != usize::MAX {
                return Err(fail(format!("points {} and {p} share coordinates", grid[x * q + y])));
            }
            coords[p] = (x, y);
            grid[x * q + y] = p;
        }

        let mut class_slope = vec![Slope::Infinity; classes.len()];
        let mut slope_lines = Vec::with_capacity(q);
        for a in 0..q {
            let line = plane.line_through(origin, grid[q + a])?;
            class_slope[line_class[line]] = Slope::Finite(a);
            slope_lines.push(line);
        }
        if class_slope[line_class[m]] != Slope::Infinity {
            return Err(fail("the vertical class received a finite slope".into()));
        }

        let mut table = vec![u16::MAX; q * q * q];
        for (a, &through_origin) in slope_lines.iter().enumerate() {
            for b in 0..q {
                let line = plane.parallel_through(through_origin, grid[b])?;
                for &p in &plane.lines[line] {
                    let (x, y) = coords[p];
                    table[(a * q + x) * q + b] = y as u16;
                }
            }
        }
        if table.contains(&u16::MAX) {
            return Err(fail("some line misses a vertical".into()));
        }
        let ring = TernaryRing::validated(q, table)?;
        let coordinatization = Self {
            q,
            frame,
            origin,
            diagonal,
            l_points,
            m_points,
            coords,
            grid,
            line_class,
            class_slope,
            slope_lines,
        };
        Ok((ring, coordinatization))
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn frame(&self) -> CoordinateFrame {
        self.frame
    }

    pub fn origin(&self) -> usize {
        self.origin
    }

    /// The line through the origin and `z`.
    pub fn diagonal(&self) -> usize {
        self.diagonal
    }

    /// Point of `l` carrying label `x`.
    pub fn l_point(&self, x: usize) -> usize {
        self.l_points[x]
    }

    /// Point of `m` carrying label `y`.
    pub fn m_point(&self, y: usize) -> usize {
        self.m_points[y]
    }

    /// Carrier labels in order: `labels()[k]` is the point of `l` labeled `k`.
    pub fn labels(&self) -> &[usize] {
        &self.l_points
    }

    pub fn coords(&self, p: usize) -> (usize, usize) {
        self.coords[p]
    }

    pub fn point_at(&self, x: usize, y: usize) -> usize {
        self.grid[x * self.q + y]
    }

    pub fn slope(&self, line: usize) -> Slope {
        self.class_slope[self.line_class[line]]
    }

    /// The line of slope `a` through the origin.
    pub fn slope_line(&self, a: usize) -> usize {
        self.slope_lines[a]
    }
}

pub fn plane_from_ternary(t: &TernaryRing) -> Result<AffinePlane, PlaneError> {
    AffinePlane::from_ternary(t)
}

pub fn check_plane_axioms(p: &AffinePlane) -> PlaneReport {
    p.check_axioms()
}

pub fn coordinatize(p: &AffinePlane, frame: CoordinateFrame) -> Result<(TernaryRing, Coordinatization), PlaneError> {
    p.coordinatize(frame)
}

pub fn isotopism_from_frames(
    p: &AffinePlane,
    first: CoordinateFrame,
    second: CoordinateFrame,
) -> Result<Isotopism, PlaneError> {
    p.isotopism_from_frames(first, second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ternary::is_isotopism;

    fn mod_ring(q: usize) -> TernaryRing {
        TernaryRing::validated(
            q,
            (0..q * q * q).map(|i| ((i / (q * q) * ((i / q) % q) + i % q) % q) as u16).collect(),
        )
        .unwrap()
    }

    #[test]
    fn gf3_plane_shape() {
        let p = AffinePlane::from_ternary(&mod_ring(3)).unwrap();
        assert_eq!((p.point_count(), p.line_count()), (9, 12));
        assert!(p.check_axioms().all_pass());
        let diag = p.line_through(0, 4).unwrap();
        assert_eq!(p.line(diag), &[0, 4, 8]);
        assert_eq!(p.line_through(4, 0).unwrap(), diag);
        assert_eq!(p.line(p.line_through(0, 1).unwrap()), &[0, 1, 2]);
        let par = p.parallel_through(diag, 3).unwrap();
        assert_eq!(p.line(par), &[2, 3, 7]);
        assert_eq!(p.parallel_through(diag, 4).unwrap(), diag);
        let classes = p.parallel_classes().unwrap();
        assert_eq!(classes.len(), 4);
        assert!(classes.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn mutations_trip_a1() {
        let p = AffinePlane::from_ternary(&mod_ring(3)).unwrap();
        assert!(p.without_line(0).unwrap().check_axioms().a1.is_some());
        let dup = p.with_duplicate_line(4).unwrap();
        let (a, b, c) = dup.check_axioms().a1.unwrap();
        assert_eq!(c, 2);
        assert!(dup.line_through(a, b).is_err());
    }

    #[test]
    fn unvalidated_ring_is_rejected() {
        let t = TernaryRing::from_fn(3, |a, x, b| (a * x + b) % 3).unwrap();
        assert_eq!(AffinePlane::from_ternary(&t).unwrap_err(), PlaneError::NotValidated);
    }

    #[test]
    fn canonical_round_trip_and_slopes() {
        let t = mod_ring(5);
        let p = AffinePlane::from_ternary(&t).unwrap();
        let frame = p.canonical_frame().unwrap();
        let (back, coords) = p.coordinatize(frame).unwrap();
        assert_eq!(back.table(), t.table());
        assert_eq!(coords.slope(coords.diagonal()), Slope::Finite(1));
        assert_eq!(coords.slope(frame.m), Slope::Infinity);
        for l1 in 0..p.line_count() {
            for l2 in 0..p.line_count() {
                assert_eq!(coords.slope(l1) == coords.slope(l2), p.are_parallel(l1, l2));
            }
        }
    }

    #[test]
    fn frame_errors() {
        let p = AffinePlane::from_ternary(&mod_ring(3)).unwrap();
        let f = p.canonical_frame().unwrap();
        assert!(matches!(p.coordinatize(CoordinateFrame { z: 1, ..f }), Err(PlaneError::BadFrame(_))));
        let other_vertical = p.line_index(&[3, 4, 5]).unwrap();
        assert!(matches!(
            p.coordinatize(CoordinateFrame { l: f.m, m: other_vertical, z: 7 }),
            Err(PlaneError::BadFrame(_))
        ));
    }

    #[test]
    fn isotopism_between_unit_points() {
        let p = AffinePlane::from_ternary(&mod_ring(5)).unwrap();
        let f1 = p.canonical_frame().unwrap();
        let f2 = CoordinateFrame { z: 5 + 2, ..f1 };
        assert_eq!(p.isotopism_from_frames(f1, f1).unwrap(), Isotopism::identity(5));
        let iso = p.isotopism_from_frames(f1, f2).unwrap();
        let (t1, _) = p.coordinatize(f1).unwrap();
        let (t2, _) = p.coordinatize(f2).unwrap();
        assert!(is_isotopism(&t1, &t2, &iso).unwrap());
        assert_eq!((iso.f[0], iso.g[0], iso.h[0]), (0, 0, 0));
    }
}
