//! Plain-text file formats.
//!
//! All formats are UTF-8 with LF line endings, one record per line and no
//! trailing whitespace:
//!
//! - `TRS 1`, `q <q>`, then `q^3` values at flat index `((a*q)+x)*q+b`.
//! - `QF 1`, `q <q>`, then `q^2` add values and `q^2` mul values (`a*q+b`).
//! - `APLANE 1`, `points <n>`, `lines <m>`, then `m` lines of strictly
//!   increasing point indices, in lexicographic order.
//! - `COLL 1`, `points <n>`, then `n` lines `i -> perm(i)`.
//!
//! Readers check shape and ranges only; axioms are left to the caller.

use std::fmt::Write as _;

use thiserror::Error;

use crate::plane::AffinePlane;
use crate::quasifield::QuasiField;
use crate::ternary::{TernaryRing, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError { line, message: message.into() })
}

/// Numbered lines of a file, with LF-only and trailing-whitespace checks.
struct Lines<'a> {
    lines: Vec<&'a str>,
    next: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Result<Self, FormatError> {
        let body = text.strip_suffix('\n').unwrap_or(text);
        let lines: Vec<&str> = if body.is_empty() { Vec::new() } else { body.split('\n').collect() };
        for (i, l) in lines.iter().enumerate() {
            if l.contains('\r') {
                return err(i + 1, "carriage return found (LF line endings only)");
            }
            if l.ends_with([' ', '\t']) || l.starts_with([' ', '\t']) {
                return err(i + 1, "leading or trailing whitespace");
            }
        }
        Ok(Self { lines, next: 0 })
    }

    fn line_no(&self) -> usize {
        self.next + 1
    }

    fn take(&mut self, what: &str) -> Result<(usize, &'a str), FormatError> {
        match self.lines.get(self.next) {
            Some(l) => {
                self.next += 1;
                Ok((self.next, l))
            }
            None => err(self.line_no(), format!("unexpected end of file, expected {what}")),
        }
    }

    fn header(&mut self, magic: &str) -> Result<(), FormatError> {
        let (no, l) = self.take(magic)?;
        let expected = format!("{magic} 1");
        if l != expected {
            return err(no, format!("expected `{expected}`, found `{l}`"));
        }
        Ok(())
    }

    fn keyed(&mut self, key: &str) -> Result<usize, FormatError> {
        let (no, l) = self.take(key)?;
        match l.strip_prefix(key).and_then(|r| r.strip_prefix(' ')) {
            Some(v) => number(no, v),
            None => err(no, format!("expected `{key} <value>`, found `{l}`")),
        }
    }

    fn value(&mut self, bound: usize) -> Result<usize, FormatError> {
        let (no, l) = self.take("a value")?;
        let v = number(no, l)?;
        if v >= bound {
            return err(no, format!("value {v} is out of range (must be < {bound})"));
        }
        Ok(v)
    }

    fn finish(&self) -> Result<(), FormatError> {
        if self.next < self.lines.len() {
            return err(self.line_no(), "unexpected trailing content");
        }
        Ok(())
    }
}

fn number(line: usize, s: &str) -> Result<usize, FormatError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return err(line, format!("`{s}` is not a decimal number"));
    }
    s.parse().or_else(|_| err(line, format!("`{s}` is too large")))
}

fn order(lines: &mut Lines<'_>) -> Result<usize, FormatError> {
    let no = lines.line_no();
    let q = lines.keyed("q")?;
    if !(2..=MAX_ORDER).contains(&q) {
        return err(no, format!("q = {q} is outside 2..={MAX_ORDER}"));
    }
    Ok(q)
}

pub fn write_trs(t: &TernaryRing) -> String {
    let mut out = format!("TRS 1\nq {}\n", t.order());
    for v in t.table() {
        writeln!(out, "{v}").expect("writing to a string");
    }
    out
}

/// Parses a TRS file; the ring is not validated.
pub fn read_trs(text: &str) -> Result<TernaryRing, FormatError> {
    let mut lines = Lines::new(text)?;
    lines.header("TRS")?;
    let q = order(&mut lines)?;
    let table = (0..q * q * q).map(|_| lines.value(q).map(|v| v as u16)).collect::<Result<_, _>>()?;
    lines.finish()?;
    Ok(TernaryRing::from_table(q, table).expect("shape already checked"))
}

pub fn write_qf(k: &QuasiField) -> String {
    let mut out = format!("QF 1\nq {}\n", k.order());
    for v in k.add_table().iter().chain(k.mul_table()) {
        writeln!(out, "{v}").expect("writing to a string");
    }
    out
}

/// Parses a QF file; no axioms are checked.
pub fn read_qf(text: &str) -> Result<QuasiField, FormatError> {
    let mut lines = Lines::new(text)?;
    lines.header("QF")?;
    let q = order(&mut lines)?;
    let mut table = || (0..q * q).map(|_| lines.value(q).map(|v| v as u16)).collect::<Result<Vec<_>, _>>();
    let add = table()?;
    let mul = table()?;
    lines.finish()?;
    Ok(QuasiField::from_tables(q, add, mul).expect("shape already checked"))
}

pub fn write_aplane(p: &AffinePlane) -> String {
    let mut out = format!("APLANE 1\npoints {}\nlines {}\n", p.point_count(), p.line_count());
    for line in p.lines() {
        let words: Vec<String> = line.iter().map(usize::to_string).collect();
        writeln!(out, "{}", words.join(" ")).expect("writing to a string");
    }
    out
}

/// Parses an APLANE file; lines must already be in canonical order.
pub fn read_aplane(text: &str) -> Result<AffinePlane, FormatError> {
    let mut lines = Lines::new(text)?;
    lines.header("APLANE")?;
    let n = lines.keyed("points")?;
    let m = lines.keyed("lines")?;
    let mut plane_lines: Vec<Vec<usize>> = Vec::new();
    for _ in 0..m {
        let (no, l) = lines.take("a line of points")?;
        let points = l.split(' ').map(|w| number(no, w)).collect::<Result<Vec<_>, _>>()?;
        if let Some(&p) = points.iter().find(|&&p| p >= n) {
            return err(no, format!("point {p} is out of range (must be < {n})"));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return err(no, "points are not strictly increasing");
        }
        if plane_lines.last().is_some_and(|prev| *prev > points) {
            return err(no, "lines are not in lexicographic order");
        }
        plane_lines.push(points);
    }
    lines.finish()?;
    if n == 0 {
        return err(2, "a plane needs at least one point");
    }
    AffinePlane::from_lines(n, plane_lines).or_else(|e| err(3, e.to_string()))
}

pub fn write_coll(perm: &[usize]) -> String {
    let mut out = format!("COLL 1\npoints {}\n", perm.len());
    for (i, p) in perm.iter().enumerate() {
        writeln!(out, "{i} -> {p}").expect("writing to a string");
    }
    out
}

/// Parses a COLL file into a point permutation.
pub fn read_coll(text: &str) -> Result<Vec<usize>, FormatError> {
    let mut lines = Lines::new(text)?;
    lines.header("COLL")?;
    let n = lines.keyed("points")?;
    let mut perm = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for i in 0..n {
        let (no, l) = lines.take("a mapping")?;
        let Some((from, to)) = l.split_once(" -> ") else {
            return err(no, format!("expected `{i} -> <point>`, found `{l}`"));
        };
        if number(no, from)? != i {
            return err(no, format!("expected source point {i}"));
        }
        let to = number(no, to)?;
        if to >= n {
            return err(no, format!("point {to} is out of range (must be < {n})"));
        }
        if std::mem::replace(&mut seen[to], true) {
            return err(no, format!("point {to} is hit twice"));
        }
        perm.push(to);
    }
    lines.finish()?;
    Ok(perm)
}
