//! Exact arithmetic in GF(p^n), cyclic Galois subgroups, fixed fields and
//! the norm map.
//!
//! Elements are encoded as integers: the residue class of
//! `a_0 + a_1 t + ... + a_{n-1} t^{n-1}` is stored as `sum a_i p^i`, so that
//! `0` and `1` keep their usual encodings and tables are stable across runs.

use std::collections::BTreeSet;

use thiserror::Error;

/// Default upper bound on the field order accepted by [`make_field`].
pub const DEFAULT_ORDER_BOUND: usize = 4096;

/// Fields up to this order get the cubic axiom sweep at construction time.
pub const EXHAUSTIVE_CHECK_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not a prime")]
    NotPrime(usize),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{n} exceeds the configured bound {bound}")]
    OrderTooLarge { p: usize, n: usize, bound: usize },
    #[error("element {value} out of range for a field of order {q}")]
    OutOfRange { value: usize, q: usize },
    #[error("zero has no multiplicative inverse")]
    InverseOfZero,
    #[error("missing second operand for {0:?}")]
    MissingOperand(ArithOp),
    #[error("subfield degree {d} does not divide extension degree {n}")]
    NotADivisor { d: usize, n: usize },
    #[error("field mismatch: group acts on order {group}, field has order {field}")]
    FieldMismatch { group: usize, field: usize },
    #[error("field invariant violated: {0}")]
    Invariant(String),
}

/// The four table operations exposed by [`FiniteField::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
    Inv,
}

pub fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^n` with `p` prime, if possible.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut n = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p, n))
}

/// Dense polynomials over GF(p), lowest degree first.
mod poly {
    pub fn trim(mut a: Vec<usize>) -> Vec<usize> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn inv_mod(a: usize, p: usize) -> usize {
        (1..p).find(|&b| a * b % p == 1).expect("nonzero residue mod a prime")
    }

    /// Remainder of `a` divided by `b` (b nonzero).
    pub fn rem(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        let lead_inv = inv_mod(*b.last().expect("nonzero divisor"), p);
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let factor = r[r.len() - 1] * lead_inv % p;
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - factor * c % p) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn mul(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    /// Every monic polynomial of exact degree `deg`, as coefficient vectors.
    pub fn monic_of_degree(deg: usize, p: usize) -> impl Iterator<Item = Vec<usize>> {
        let count = p.pow(deg as u32);
        (0..count).map(move |mut k| {
            let mut c = Vec::with_capacity(deg + 1);
            for _ in 0..deg {
                c.push(k % p);
                k /= p;
            }
            c.push(1);
            c
        })
    }

    /// No monic factor of degree `1..=deg/2`.
    pub fn is_irreducible(f: &[usize], p: usize) -> bool {
        let deg = f.len() - 1;
        (1..=deg / 2).all(|d| monic_of_degree(d, p).all(|g| !rem(f, &g, p).is_empty()))
    }
}

fn decode(mut x: usize, p: usize, n: usize) -> Vec<usize> {
    let mut c = Vec::with_capacity(n);
    for _ in 0..n {
        c.push(x % p);
        x /= p;
    }
    c
}

fn encode(c: &[usize], p: usize) -> usize {
    c.iter().rev().fold(0, |acc, &a| acc * p + a)
}

/// Lexicographically smallest monic irreducible polynomial of degree `n`
/// over GF(p), comparing coefficient sequences from the constant term up.
pub fn smallest_irreducible(p: usize, n: usize) -> Vec<usize> {
    let count = p.pow(n as u32);
    for k in 0..count {
        // k's most significant base-p digit is the constant term.
        let mut c = vec![0; n + 1];
        let mut rest = k;
        for i in (0..n).rev() {
            c[i] = rest % p;
            rest /= p;
        }
        c[n] = 1;
        if n == 1 || (c[0] != 0 && poly::is_irreducible(&c, p)) {
            return c;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// GF(p^n) with materialized arithmetic tables.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: usize,
    n: usize,
    q: usize,
    modulus: Vec<usize>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    exp: Vec<u16>,
    log: Vec<u16>,
    generator: usize,
}

impl std::fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("n", &self.n)
            .field("modulus", &self.modulus)
            .finish_non_exhaustive()
    }
}

/// GF(p^n) under the default order bound.
pub fn make_field(p: usize, n: usize) -> Result<FiniteField, GfError> {
    FiniteField::with_bound(p, n, DEFAULT_ORDER_BOUND)
}

impl FiniteField {
    pub fn new(p: usize, n: usize) -> Result<Self, GfError> {
        make_field(p, n)
    }

    pub fn with_bound(p: usize, n: usize, bound: usize) -> Result<Self, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if n < 1 {
            return Err(GfError::ZeroDegree);
        }
        let q = (0..n)
            .try_fold(1usize, |acc, _| acc.checked_mul(p))
            .filter(|&q| q <= bound && q <= u16::MAX as usize + 1)
            .ok_or(GfError::OrderTooLarge { p, n, bound })?;
        let modulus = smallest_irreducible(p, n);
        let field = Self::from_modulus(p, n, q, modulus);
        field.check_invariants()?;
        Ok(field)
    }

    fn from_modulus(p: usize, n: usize, q: usize, modulus: Vec<usize>) -> Self {
        let digits: Vec<Vec<usize>> = (0..q).map(|x| decode(x, p, n)).collect();
        // x -> x * t reduced modulo the (monic) modulus.
        let times_t = |x: usize| {
            let d = &digits[x];
            let top = d[n - 1];
            let mut out = vec![0; n];
            for i in 0..n {
                let shifted = if i == 0 { 0 } else { d[i - 1] };
                out[i] = (shifted + p * p - top * modulus[i] % p) % p;
            }
            encode(&out, p)
        };
        let t_table: Vec<usize> = (0..q).map(times_t).collect();
        let mut add = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<usize> =
                    digits[a].iter().zip(&digits[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum, p) as u16;
            }
        }
        let add_at = |a: usize, b: usize| add[a * q + b] as usize;
        // Horner evaluation of a * b using only `times_t` and addition.
        let slow_mul = |a: usize, b: usize| {
            let mut acc = 0usize;
            for i in (0..n).rev() {
                acc = t_table[acc];
                for _ in 0..digits[b][i] {
                    acc = add_at(acc, a);
                }
            }
            acc
        };
        // Smallest element of multiplicative order q - 1.
        let generator = (1..q)
            .find(|&g| {
                let mut x = g;
                let mut order = 1;
                while x != 1 {
                    x = slow_mul(x, g);
                    order += 1;
                }
                order == q - 1
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u16; q - 1];
        let mut log = vec![0u16; q];
        let mut x = 1usize;
        for (k, slot) in exp.iter_mut().enumerate() {
            *slot = x as u16;
            log[x] = k as u16;
            x = slow_mul(x, generator);
        }
        let mut mul = vec![0u16; q * q];
        for a in 1..q {
            for b in 1..q {
                mul[a * q + b] = exp[(log[a] as usize + log[b] as usize) % (q - 1)];
            }
        }
        let mut neg = vec![0u16; q];
        let mut inv = vec![0u16; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add_at(a, b) == 0).expect("additive inverse") as u16;
            if a != 0 {
                inv[a] = exp[(q - 1 - log[a] as usize) % (q - 1)];
            }
        }
        Self { p, n, q, modulus, add, mul, neg, inv, exp, log, generator }
    }

    /// Addition and multiplication tables computed by schoolbook polynomial
    /// arithmetic modulo `modulus`; quadratic in q with polynomial work per
    /// entry, so only used for re-derivation checks.
    fn derive_tables(p: usize, n: usize, q: usize, modulus: &[usize]) -> (Vec<u16>, Vec<u16>) {
        let digits: Vec<Vec<usize>> = (0..q).map(|x| decode(x, p, n)).collect();
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<usize> =
                    digits[a].iter().zip(&digits[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum, p) as u16;
                let prod = poly::rem(&poly::mul(&poly::trim(digits[a].clone()), &poly::trim(digits[b].clone()), p), modulus, p);
                mul[a * q + b] = encode(&prod, p) as u16;
            }
        }
        (add, mul)
    }

    /// Regenerates both tables from the stored modulus and compares them with
    /// the stored ones.
    pub fn tables_match_modulus(&self) -> bool {
        let (add, mul) = Self::derive_tables(self.p, self.n, self.q, &self.modulus);
        add == self.add && mul == self.mul
    }

    fn check_invariants(&self) -> Result<(), GfError> {
        let q = self.q;
        let bad = |what: &str| Err(GfError::Invariant(what.to_string()));
        if !poly::is_irreducible(&self.modulus, self.p) {
            return bad("modulus is reducible");
        }
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.mul(a, 0) != 0 {
                return bad("identity elements");
            }
            if self.add(a, self.neg(a)) != 0 {
                return bad("additive inverse");
            }
            if a != 0 && self.mul(a, self.inv[a] as usize) != 1 {
                return bad("multiplicative inverse");
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return bad("commutativity");
                }
            }
        }
        if q <= EXHAUSTIVE_CHECK_ORDER {
            if let Some(w) = self.axiom_violation() {
                return Err(GfError::Invariant(w));
            }
        }
        Ok(())
    }

    /// Exhaustive field-axiom sweep (cubic in q). Returns a description of the
    /// first violation.
    pub fn axiom_violation(&self) -> Option<String> {
        let q = self.q;
        for a in 0..q {
            if self.add(a, 0) != a || self.add(0, a) != a {
                return Some(format!("0 is not an additive identity at {a}"));
            }
            if self.mul(a, 1) != a || self.mul(1, a) != a {
                return Some(format!("1 is not a multiplicative identity at {a}"));
            }
            if !(0..q).any(|b| self.add(a, b) == 0) {
                return Some(format!("{a} has no additive inverse"));
            }
            if a != 0 && !(0..q).any(|b| self.mul(a, b) == 1) {
                return Some(format!("{a} has no multiplicative inverse"));
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) {
                    return Some(format!("addition not commutative at ({a},{b})"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Some(format!("multiplication not commutative at ({a},{b})"));
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Some(format!("addition not associative at ({a},{b},{c})"));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Some(format!("multiplication not associative at ({a},{b},{c})"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Some(format!("not distributive at ({a},{b},{c})"));
                    }
                }
            }
        }
        None
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.q
    }

    /// Monic modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    /// The smallest primitive element, base of the log/exp tables.
    pub fn generator(&self) -> usize {
        self.generator
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn inv(&self, a: usize) -> Result<usize, GfError> {
        self.check(a)?;
        if a == 0 {
            return Err(GfError::InverseOfZero);
        }
        Ok(self.inv[a] as usize)
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let k = self.log[a] as usize * (e % (self.q - 1));
        self.exp[k % (self.q - 1)] as usize
    }

    /// Discrete logarithm base [`generator`](Self::generator); `None` for 0.
    pub fn log(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.log[a] as usize)
    }

    pub fn exp(&self, k: usize) -> usize {
        self.exp[k % (self.q - 1)] as usize
    }

    fn check(&self, a: usize) -> Result<(), GfError> {
        if a < self.q {
            Ok(())
        } else {
            Err(GfError::OutOfRange { value: a, q: self.q })
        }
    }

    /// Range-checked table arithmetic.
    pub fn arith(&self, op: ArithOp, a: usize, b: Option<usize>) -> Result<usize, GfError> {
        self.check(a)?;
        if let Some(b) = b {
            self.check(b)?;
        }
        match op {
            ArithOp::Add => Ok(self.add(a, b.ok_or(GfError::MissingOperand(op))?)),
            ArithOp::Mul => Ok(self.mul(a, b.ok_or(GfError::MissingOperand(op))?)),
            ArithOp::Neg => Ok(self.neg(a)),
            ArithOp::Inv => self.inv(a),
        }
    }

    pub fn add_table(&self) -> &[u16] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u16] {
        &self.mul
    }
}

/// A cyclic group of field automorphisms `x -> x^(p^(d*j))`, stored as
/// explicit permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisGroup {
    q: usize,
    p: usize,
    n: usize,
    d: usize,
    perms: Vec<Vec<u16>>,
    compose: Vec<usize>,
}

/// The subgroup of Gal(GF(p^n)/GF(p)) generated by `x -> x^(p^d)`.
pub fn galois_subgroup(field: &FiniteField, d: usize) -> Result<GaloisGroup, GfError> {
    GaloisGroup::new(field, d)
}

impl GaloisGroup {
    pub fn new(field: &FiniteField, d: usize) -> Result<Self, GfError> {
        let n = field.n();
        if d == 0 || !n.is_multiple_of(d) {
            return Err(GfError::NotADivisor { d, n });
        }
        let q = field.order();
        let order = n / d;
        let step = field.p().pow(d as u32);
        let mut perms = Vec::with_capacity(order);
        let mut current: Vec<u16> = (0..q).map(|x| x as u16).collect();
        for _ in 0..order {
            perms.push(current.clone());
            current = current.iter().map(|&x| field.pow(x as usize, step) as u16).collect();
        }
        for (j, g) in perms.iter().enumerate() {
            if let Some((x, y)) = automorphism_violation(field, g) {
                return Err(GfError::Invariant(format!(
                    "group element {j} is not an automorphism at ({x},{y})"
                )));
            }
        }
        let mut compose = vec![0; order * order];
        for i in 0..order {
            for j in 0..order {
                let composed: Vec<u16> =
                    (0..q).map(|x| perms[i][perms[j][x] as usize]).collect();
                compose[i * order + j] = perms
                    .iter()
                    .position(|g| *g == composed)
                    .ok_or_else(|| GfError::Invariant("group not closed".into()))?;
            }
        }
        if perms[0].iter().enumerate().any(|(x, &y)| x != y as usize) {
            return Err(GfError::Invariant("element 0 is not the identity".into()));
        }
        if (0..order).any(|i| !(0..order).any(|j| compose[i * order + j] == 0)) {
            return Err(GfError::Invariant("missing inverse".into()));
        }
        Ok(Self { q, p: field.p(), n, d, perms, compose })
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    /// Generator exponent: element `j` is `x -> x^(p^(d*j))`.
    pub fn generator_exponent(&self) -> usize {
        self.d
    }

    pub fn field_order(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.perms[g][x] as usize
    }

    pub fn permutation(&self, g: usize) -> &[u16] {
        &self.perms[g]
    }

    /// Index of `g ∘ h`.
    pub fn compose(&self, g: usize, h: usize) -> usize {
        self.compose[g * self.order() + h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        (0..self.order()).find(|&h| self.compose(g, h) == 0).expect("closed group")
    }

    fn same_field(&self, field: &FiniteField) -> Result<(), GfError> {
        if field.order() == self.q && field.p() == self.p && field.n() == self.n {
            Ok(())
        } else {
            Err(GfError::FieldMismatch { group: self.q, field: field.order() })
        }
    }

    /// Elements fixed by every group element, sorted by encoding.
    pub fn fixed_field(&self, field: &FiniteField) -> Result<Vec<usize>, GfError> {
        self.same_field(field)?;
        let fixed: Vec<usize> =
            (0..self.q).filter(|&x| self.perms.iter().all(|g| g[x] as usize == x)).collect();
        let set: BTreeSet<usize> = fixed.iter().copied().collect();
        for &a in &fixed {
            if a != 0 && !set.contains(&field.inv(a)?) {
                return Err(GfError::Invariant("fixed set not closed under inverse".into()));
            }
            for &b in &fixed {
                if !set.contains(&field.add(a, b)) || !set.contains(&field.mul(a, b)) {
                    return Err(GfError::Invariant("fixed set not closed".into()));
                }
            }
        }
        if fixed.len() != self.p.pow(self.d as u32) {
            return Err(GfError::Invariant(format!(
                "fixed field has {} elements, expected {}",
                fixed.len(),
                self.p.pow(self.d as u32)
            )));
        }
        Ok(fixed)
    }

    /// `N(x) = prod_{g in G} g(x)`.
    pub fn norm(&self, field: &FiniteField, x: usize) -> Result<usize, GfError> {
        self.same_field(field)?;
        field.check(x)?;
        Ok(self.perms.iter().fold(1, |acc, g| field.mul(acc, g[x] as usize)))
    }

    /// `N(K*)`, sorted by encoding and checked to be a subgroup of `F*`.
    pub fn norm_image(&self, field: &FiniteField) -> Result<Vec<usize>, GfError> {
        let fixed: BTreeSet<usize> = self.fixed_field(field)?.into_iter().collect();
        let mut image = BTreeSet::new();
        for x in 1..self.q {
            image.insert(self.norm(field, x)?);
        }
        if !image.contains(&1) || image.iter().any(|v| !fixed.contains(v)) {
            return Err(GfError::Invariant("norm image not inside F*".into()));
        }
        for &u in &image {
            if !image.contains(&field.inv(u)?) {
                return Err(GfError::Invariant("norm image not closed under inverse".into()));
            }
            for &v in &image {
                if !image.contains(&field.mul(u, v)) {
                    return Err(GfError::Invariant("norm image not closed".into()));
                }
            }
        }
        Ok(image.into_iter().collect())
    }
}

/// Free-function forms of the group queries.
pub fn fixed_field(field: &FiniteField, group: &GaloisGroup) -> Result<Vec<usize>, GfError> {
    group.fixed_field(field)
}

pub fn norm(field: &FiniteField, group: &GaloisGroup, x: usize) -> Result<usize, GfError> {
    group.norm(field, x)
}

pub fn norm_image(field: &FiniteField, group: &GaloisGroup) -> Result<Vec<usize>, GfError> {
    group.norm_image(field)
}

/// First `(x, y)` where `g` fails to respect `+` or `*`.
pub fn automorphism_violation(field: &FiniteField, g: &[u16]) -> Option<(usize, usize)> {
    let q = field.order();
    for x in 0..q {
        for y in 0..q {
            let gx = g[x] as usize;
            let gy = g[y] as usize;
            if g[field.add(x, y)] as usize != field.add(gx, gy)
                || g[field.mul(x, y)] as usize != field.mul(gx, gy)
            {
                return Some((x, y));
            }
        }
    }
    None
}
