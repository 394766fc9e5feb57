//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors ordered by
//! graded lex, so printing and hashing are deterministic. All operations
//! are pure; values are immutable after construction.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};

/// Exponent vector, one entry per ring variable.
///
/// The derived `Ord` is *graded lexicographic*: total degree first, then
/// the leftmost differing exponent. This is the canonical storage order;
/// Groebner computations impose their own orders on top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * n).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, when exact.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(
                self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over Q or F_p.
///
/// Invariants: no stored coefficient is zero; every exponent vector has one
/// entry per variable; two values over the same ring compare equal iff their
/// term maps do.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    field: FieldSpec,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str], field: FieldSpec) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &[&str], field: FieldSpec) -> Self {
        Self::constant(vars, field.one())
    }

    pub fn constant(vars: &[&str], value: FieldElem) -> Self {
        let mut p = Self::zero(vars, value.spec());
        if !value.is_zero() {
            p.terms.insert(Monomial::constant(vars.len()), value);
        }
        p
    }

    pub fn variable(vars: &[&str], field: FieldSpec, name: &str) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| *v == name)
            .ok_or_else(|| Error::UnknownVariable {
                name: name.to_string(),
                pos: 0,
            })?;
        let mut p = Self::zero(vars, field);
        p.terms.insert(Monomial::var(vars.len(), idx), field.one());
        Ok(p)
    }

    pub fn from_terms<I>(vars: &[&str], field: FieldSpec, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, FieldElem)>,
    {
        let mut p = Self::zero(vars, field);
        for (m, c) in terms {
            if m.nvars() != p.vars.len() {
                return Err(Error::WrongArity {
                    expected: p.vars.len(),
                    got: m.nvars(),
                });
            }
            if c.spec() != field {
                return Err(Error::RingMismatch);
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.is_constant() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().all(Monomial::is_constant))
    }

    /// The coefficient of the constant monomial, i.e. the value at the origin.
    pub fn constant_term(&self) -> FieldElem {
        self.terms
            .get(&Monomial::constant(self.vars.len()))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElem {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Highest exponent of variable `idx` occurring in any term (0 when
    /// absent or zero polynomial).
    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::total_degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn same_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.vars != other.vars || self.field != other.field {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    fn add_term(&mut self, m: Monomial, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(other)?;
        let mut out = Self::zero_like(self);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        Ok(out)
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElem) -> MultiPoly {
        let mut out = Self::zero_like(self);
        if c.is_zero() {
            return out;
        }
        for (m1, c1) in &self.terms {
            out.terms.insert(m1.mul(m), c1.mul(c));
        }
        out
    }

    pub fn scale(&self, c: &FieldElem) -> MultiPoly {
        self.mul_term(&Monomial::constant(self.vars.len()), c)
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut out = Self::one_like(self);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base).expect("same ring");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        out
    }

    pub fn zero_like(p: &MultiPoly) -> MultiPoly {
        MultiPoly {
            vars: p.vars.clone(),
            field: p.field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one_like(p: &MultiPoly) -> MultiPoly {
        let mut out = Self::zero_like(p);
        out.terms
            .insert(Monomial::constant(p.vars.len()), p.field.one());
        out
    }

    /// Substitute `replacement` for the variable `var`, mapping into the
    /// ring of `replacement`. Every other variable of `self` must exist in
    /// that ring; the result is the image under the induced ring map. The
    /// target ring may differ from the source (this is how blow-up charts
    /// are reached).
    pub fn substitute(&self, var: &str, replacement: &MultiPoly) -> Result<MultiPoly> {
        if self.field != replacement.field {
            return Err(Error::RingMismatch);
        }
        let src_idx = self
            .vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| Error::UnknownVariable {
                name: var.to_string(),
                pos: 0,
            })?;
        // Map each remaining source variable to its slot in the target ring.
        let mut slot = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            if i == src_idx {
                slot.push(usize::MAX);
            } else {
                let j = replacement
                    .vars
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::UnknownVariable {
                        name: v.clone(),
                        pos: 0,
                    })?;
                slot.push(j);
            }
        }
        let target_nvars = replacement.vars.len();
        let mut out = Self::zero_like(replacement);
        // Powers of the replacement, computed incrementally.
        let mut powers: Vec<MultiPoly> = vec![Self::one_like(replacement)];
        for (m, c) in &self.terms {
            let k = m.0[src_idx] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap().mul(replacement)?;
                powers.push(next);
            }
            let mut rest = vec![0u32; target_nvars];
            for (i, &e) in m.0.iter().enumerate() {
                if i != src_idx && e > 0 {
                    rest[slot[i]] += e;
                }
            }
            let contrib = powers[k].mul_term(&Monomial(rest), c);
            out = out.add(&contrib)?;
        }
        Ok(out)
    }

    /// The initial degree: minimal total degree of a stored term. This is
    /// the largest k with f in m^k, m the ideal of the origin.
    pub fn ord(&self) -> Result<u32> {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .min()
            .ok_or(Error::ZeroPolynomial { op: "ord" })
    }

    /// The sum of terms of minimal total degree; always homogeneous.
    pub fn initial_form(&self) -> Result<MultiPoly> {
        let c = self.ord().map_err(|_| Error::ZeroPolynomial {
            op: "initial_form",
        })?;
        let mut out = Self::zero_like(self);
        for (m, coef) in &self.terms {
            if m.total_degree() == c {
                out.terms.insert(m.clone(), coef.clone());
            }
        }
        Ok(out)
    }

    /// Exact quotient `self / g`. Errors unless `g` divides `self` in the
    /// polynomial ring.
    pub fn exact_divide(&self, g: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Divide repeatedly by the graded-lex leading term of g; any term
        // that the leading term cannot absorb makes the division inexact.
        let (g_lm, g_lc) = g.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero_like(self);
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m
                .checked_div(&g_lm)
                .ok_or(Error::InexactDivision)?;
            let qc = c.div(&g_lc)?;
            quot.add_term(qm.clone(), qc.clone());
            rem = rem.sub(&g.mul_term(&qm, &qc))?;
        }
        Ok(quot)
    }

    /// Apply the linear change of coordinates sending the first variable to
    /// a*x + b*y and the second to c*x + d*y (in the same two-variable ring).
    pub fn linear_change(
        &self,
        a: &FieldElem,
        b: &FieldElem,
        c: &FieldElem,
        d: &FieldElem,
    ) -> Result<MultiPoly> {
        if self.vars.len() != 2 {
            return Err(Error::WrongArity {
                expected: 2,
                got: self.vars.len(),
            });
        }
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let x = Self::variable(&vars, self.field, &self.vars[0])?;
        let y = Self::variable(&vars, self.field, &self.vars[1])?;
        let img_x = x.scale(a).add(&y.scale(b))?;
        let img_y = x.scale(c).add(&y.scale(d))?;
        let mut out = Self::zero_like(self);
        let mut pow_x: Vec<MultiPoly> = vec![Self::one_like(self)];
        let mut pow_y: Vec<MultiPoly> = vec![Self::one_like(self)];
        for (m, coef) in &self.terms {
            let (i, j) = (m.0[0] as usize, m.0[1] as usize);
            while pow_x.len() <= i {
                let next = pow_x.last().unwrap().mul(&img_x)?;
                pow_x.push(next);
            }
            while pow_y.len() <= j {
                let next = pow_y.last().unwrap().mul(&img_y)?;
                pow_y.push(next);
            }
            out = out.add(&pow_x[i].mul(&pow_y[j])?.scale(coef))?;
        }
        Ok(out)
    }
}

/// Gcd of two nonzero homogeneous binary forms, normalized so the term with
/// the highest power of the first variable has coefficient 1. Computed by
/// splitting off the pure powers of each variable and running the Euclidean
/// algorithm on the dehomogenizations.
pub fn binary_form_gcd(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly> {
    if f.vars.len() != 2 || g.vars.len() != 2 {
        return Err(Error::NotBinaryForm);
    }
    if f.is_zero() || g.is_zero() || !f.is_homogeneous() || !g.is_homogeneous() {
        return Err(Error::NotBinaryForm);
    }
    f.same_ring(g)?;
    let (fx, fy, f_core) = split_axis_powers(f);
    let (gx, gy, g_core) = split_axis_powers(g);
    // Dehomogenize the cores in the second variable; both have full degree
    // in the first variable, so nothing is lost.
    let fu = dehomogenize(&f_core);
    let gu = dehomogenize(&g_core);
    let gcd_u = univariate_gcd(&fu, &gu)?;
    let deg = gcd_u.len() as u32 - 1;
    let mut out = MultiPoly::zero_like(f);
    for (k, c) in gcd_u.iter().enumerate() {
        if !c.is_zero() {
            out.add_term(
                Monomial(vec![k as u32 + fx.min(gx), deg - k as u32 + fy.min(gy)]),
                c.clone(),
            );
        }
    }
    normalize_by_highest_x(&mut out);
    Ok(out)
}

/// Split a binary form into x-power, y-power, and a core divisible by
/// neither variable.
fn split_axis_powers(f: &MultiPoly) -> (u32, u32, MultiPoly) {
    let ax = f.terms.keys().map(|m| m.0[0]).min().unwrap();
    let ay = f.terms.keys().map(|m| m.0[1]).min().unwrap();
    let mut core = MultiPoly::zero_like(f);
    for (m, c) in &f.terms {
        core.terms
            .insert(Monomial(vec![m.0[0] - ax, m.0[1] - ay]), c.clone());
    }
    (ax, ay, core)
}

/// Coefficients of f(z, 1) indexed by degree in z.
fn dehomogenize(f: &MultiPoly) -> Vec<FieldElem> {
    let d = f.terms.keys().map(|m| m.0[0]).max().unwrap() as usize;
    let mut out = vec![f.field.zero(); d + 1];
    for (m, c) in &f.terms {
        out[m.0[0] as usize] = c.clone();
    }
    out
}

fn univ_deg(a: &[FieldElem]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

/// Monic gcd of dense univariate polynomials over the coefficient field.
fn univariate_gcd(a: &[FieldElem], b: &[FieldElem]) -> Result<Vec<FieldElem>> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    loop {
        let db = match univ_deg(&b) {
            None => break,
            Some(d) => d,
        };
        b.truncate(db + 1);
        // a mod b
        let lb = b[db].clone();
        while let Some(da) = univ_deg(&a) {
            if da < db {
                break;
            }
            let q = a[da].div(&lb)?;
            for k in 0..=db {
                let delta = q.mul(&b[k]).neg();
                a[da - db + k] = a[da - db + k].add(&delta);
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    let da = univ_deg(&a).ok_or(Error::DivisionByZero)?;
    a.truncate(da + 1);
    let inv = a[da].inv()?;
    for c in &mut a {
        *c = c.mul(&inv);
    }
    Ok(a)
}

fn normalize_by_highest_x(p: &mut MultiPoly) {
    let lead = p
        .terms
        .iter()
        .max_by_key(|(m, _)| m.0[0])
        .map(|(_, c)| c.clone());
    if let Some(c) = lead {
        if !c.is_one() {
            let inv = c.inv().expect("leading coefficient is nonzero");
            for v in p.terms.values_mut() {
                *v = v.mul(&inv);
            }
        }
    }
}

/// Do two bivariate polynomials share a nonconstant common factor?
///
/// Decided without factoring: a pseudo-remainder sequence in the second
/// variable detects a common factor of positive degree there, and the
/// univariate contents catch factors free of it.
pub fn share_nonconstant_factor(f: &MultiPoly, g: &MultiPoly) -> Result<bool> {
    f.same_ring(g)?;
    if f.vars.len() != 2 {
        return Err(Error::WrongArity {
            expected: 2,
            got: f.vars.len(),
        });
    }
    // The zero polynomial is divisible by everything.
    if f.is_zero() && g.is_zero() {
        return Ok(true);
    }
    if f.is_zero() {
        return Ok(!g.is_constant());
    }
    if g.is_zero() {
        return Ok(!f.is_constant());
    }
    if f.is_constant() || g.is_constant() {
        return Ok(false);
    }
    const Y: usize = 1;
    let dyf = f.degree_in(Y);
    let dyg = g.degree_in(Y);
    if dyf == 0 && dyg == 0 {
        let h = univar_poly_gcd(f, g, 0)?;
        return Ok(!h.is_constant());
    }
    if dyf == 0 {
        let h = univar_poly_gcd(f, &content_in(g, Y)?, 0)?;
        return Ok(!h.is_constant());
    }
    if dyg == 0 {
        let h = univar_poly_gcd(g, &content_in(f, Y)?, 0)?;
        return Ok(!h.is_constant());
    }
    // Both have positive y-degree: pseudo-remainder sequence.
    let mut a = f.clone();
    let mut b = g.clone();
    loop {
        if b.is_zero() {
            // Euclid stopped with positive y-degree: common factor there.
            return Ok(a.degree_in(Y) > 0 || shared_content(f, g, Y)?);
        }
        if b.degree_in(Y) == 0 {
            return shared_content(f, g, Y);
        }
        let r = pseudo_remainder(&a, &b, Y)?;
        let r = primitive_part_in(&r, Y)?;
        a = b;
        b = r;
    }
}

fn shared_content(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<bool> {
    let h = univar_poly_gcd(&content_in(f, var)?, &content_in(g, var)?, 1 - var)?;
    Ok(!h.is_constant())
}

/// Coefficient of `var^k` in f, as a polynomial in the full ring.
fn coefficient_of(f: &MultiPoly, var: usize, k: u32) -> MultiPoly {
    let mut out = MultiPoly::zero_like(f);
    for (m, c) in &f.terms {
        if m.0[var] == k {
            let mut e = m.0.clone();
            e[var] = 0;
            out.terms.insert(Monomial(e), c.clone());
        }
    }
    out
}

/// Gcd over the other variable of all coefficients of f seen as a
/// polynomial in `var`.
fn content_in(f: &MultiPoly, var: usize) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero_like(f);
    for k in 0..=f.degree_in(var) {
        let c = coefficient_of(f, var, k);
        if c.is_zero() {
            continue;
        }
        acc = if acc.is_zero() {
            c
        } else {
            univar_poly_gcd(&acc, &c, 1 - var)?
        };
        if acc.is_constant() {
            break;
        }
    }
    Ok(acc)
}

fn primitive_part_in(f: &MultiPoly, var: usize) -> Result<MultiPoly> {
    if f.is_zero() {
        return Ok(f.clone());
    }
    let c = content_in(f, var)?;
    if c.is_constant() {
        Ok(f.clone())
    } else {
        f.exact_divide(&c)
    }
}

/// Monic gcd of two polynomials supported on a single variable `var`.
fn univar_poly_gcd(a: &MultiPoly, b: &MultiPoly, var: usize) -> Result<MultiPoly> {
    let to_dense = |p: &MultiPoly| -> Vec<FieldElem> {
        let d = p.degree_in(var) as usize;
        let mut out = vec![p.field.zero(); d + 1];
        for (m, c) in &p.terms {
            out[m.0[var] as usize] = c.clone();
        }
        out
    };
    if a.is_zero() {
        return Ok(b.clone());
    }
    if b.is_zero() {
        return Ok(a.clone());
    }
    let g = univariate_gcd(&to_dense(a), &to_dense(b))?;
    let nvars = a.vars.len();
    let mut out = MultiPoly::zero_like(a);
    for (k, c) in g.iter().enumerate() {
        if !c.is_zero() {
            let mut e = vec![0u32; nvars];
            e[var] = k as u32;
            out.terms.insert(Monomial(e), c.clone());
        }
    }
    Ok(out)
}

/// Pseudo-remainder of a by b with respect to `var`: lc(b)^(da-db+1) * a
/// reduced until its degree in `var` drops below that of b.
fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, var: usize) -> Result<MultiPoly> {
    let db = b.degree_in(var);
    let lb = coefficient_of(b, var, db);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lr = coefficient_of(&r, var, dr);
        // r <- lb * r - lr * var^(dr-db) * b
        let mut shift = vec![0u32; a.vars.len()];
        shift[var] = dr - db;
        let shifted = b.mul_term(&Monomial(shift), &a.field.one()).mul(&lr)?;
        r = r.mul(&lb)?.sub(&shifted)?;
    }
    Ok(r)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Terms descending by graded lex, signs folded into the join.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mag = c.abs();
            if m.is_constant() {
                write!(f, "{mag}")?;
            } else {
                let mut wrote = false;
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                    wrote = true;
                }
                for (idx, &e) in m.0.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if wrote {
                        write!(f, "*")?;
                    }
                    write!(f, "{}", self.vars[idx])?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                    wrote = true;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn q(s: &str) -> MultiPoly {
        parse(s, &["x", "y"], FieldSpec::Q).unwrap()
    }

    #[test]
    fn ord_of_paper_curves() {
        assert_eq!(q("x^3+y^3-3*x*y").ord().unwrap(), 2);
        assert_eq!(q("x^2+y^2-3*x").ord().unwrap(), 1);
        assert_eq!(q("x").ord().unwrap(), 1);
        assert!(matches!(
            q("0").ord(),
            Err(Error::ZeroPolynomial { .. })
        ));
    }

    #[test]
    fn initial_forms() {
        assert_eq!(q("x^3+y^3-3*x*y").initial_form().unwrap(), q("-3*x*y"));
        assert_eq!(q("(x+y)^3-4*x*y").initial_form().unwrap(), q("-4*x*y"));
        assert_eq!(q("x^3-(x^2-y^2)").initial_form().unwrap(), q("-x^2+y^2"));
    }

    #[test]
    fn ring_axioms_hold() {
        let f = q("x^3+y^3-3*x*y");
        let zero = q("0");
        assert_eq!(f.mul(&zero).unwrap(), zero);
        assert_eq!(f.add(&zero.sub(&f).unwrap()).unwrap(), zero);
        assert_eq!(f.pow(0), q("1"));
        assert_eq!(f.pow(2), f.mul(&f).unwrap());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let f = q("x");
        let g = parse("x", &["x", "z"], FieldSpec::Q).unwrap();
        assert!(matches!(f.add(&g), Err(Error::RingMismatch)));
        let h = parse("x", &["x", "y"], FieldSpec::Fp(7)).unwrap();
        assert!(matches!(f.mul(&h), Err(Error::RingMismatch)));
    }

    #[test]
    fn substitute_into_blowup_chart() {
        // x -> y*S carries x^3+y^3-3xy to y^3*S^3 + y^3 - 3*y^2*S.
        let f = q("x^3+y^3-3*x*y");
        let repl = parse("y*S", &["y", "S"], FieldSpec::Q).unwrap();
        let image = f.substitute("x", &repl).unwrap();
        let expect = parse("y^3*S^3+y^3-3*y^2*S", &["y", "S"], FieldSpec::Q).unwrap();
        assert_eq!(image, expect);
    }

    #[test]
    fn substitute_is_a_ring_map() {
        let f = q("x^2-y^2+2*x*y");
        let g = q("x*y-3");
        let repl = q("y+1");
        let lhs = f.mul(&g).unwrap().substitute("x", &repl).unwrap();
        let rhs = f
            .substitute("x", &repl)
            .unwrap()
            .mul(&g.substitute("x", &repl).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_division() {
        let f = parse("y^3*S^3+y^3-3*y^2*S", &["y", "S"], FieldSpec::Q).unwrap();
        let y2 = parse("y^2", &["y", "S"], FieldSpec::Q).unwrap();
        let quot = f.exact_divide(&y2).unwrap();
        assert_eq!(
            quot,
            parse("y*S^3+y-3*S", &["y", "S"], FieldSpec::Q).unwrap()
        );

        assert_eq!(q("x^2-y^2").exact_divide(&q("x+y")).unwrap(), q("x-y"));
        let f = q("x^3+y^3-3*x*y");
        assert_eq!(f.exact_divide(&q("1")).unwrap(), f);
        assert!(matches!(
            q("x^2+y").exact_divide(&q("x+y")),
            Err(Error::InexactDivision)
        ));
        assert!(matches!(
            q("x").exact_divide(&q("0")),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn gcd_of_tangent_cones() {
        // Both forms are scalar multiples of x^2 - y^2.
        let h = binary_form_gcd(&q("-x^2+y^2"), &q("-y^2+x^2")).unwrap();
        assert_eq!(h, q("x^2-y^2"));
        assert_eq!(h.total_degree(), Some(2));

        // One shared tangent along the y-axis.
        let h = binary_form_gcd(&q("-3*x*y"), &q("-3*x")).unwrap();
        assert_eq!(h, q("x"));

        // Coprime axis forms.
        let h = binary_form_gcd(&q("x^2"), &q("y^2")).unwrap();
        assert!(h.is_one());

        assert!(binary_form_gcd(&q("x^2+x"), &q("y")).is_err());
        assert!(binary_form_gcd(&q("0"), &q("y")).is_err());
    }

    #[test]
    fn gcd_divides_both_inputs() {
        let cases = [
            ("x^2*y-y^3", "x^3*y^2"),
            ("-4*x*y", "4*x*y"),
            ("x^4-y^4", "x^2-y^2"),
            ("x^3+3*x^2*y+3*x*y^2+y^3", "x^2+2*x*y+y^2"),
        ];
        for (a, b) in cases {
            let (fa, fb) = (q(a), q(b));
            let h = binary_form_gcd(&fa, &fb).unwrap();
            assert!(fa.exact_divide(&h).is_ok(), "gcd must divide {a}");
            assert!(fb.exact_divide(&h).is_ok(), "gcd must divide {b}");
            assert!(
                h.total_degree().unwrap()
                    <= fa.total_degree().unwrap().min(fb.total_degree().unwrap())
            );
        }
    }

    #[test]
    fn common_factor_detection() {
        assert!(share_nonconstant_factor(&q("x"), &q("x")).unwrap());
        assert!(share_nonconstant_factor(&q("x*y+x"), &q("x^2")).unwrap());
        assert!(share_nonconstant_factor(&q("(x+y)*(x-y)"), &q("(x+y)*y")).unwrap());
        assert!(!share_nonconstant_factor(&q("x"), &q("y")).unwrap());
        assert!(!share_nonconstant_factor(&q("x^3+y^3-3*x*y"), &q("x^2+y^2-3*x")).unwrap());
        // Common factor with no y: x | both.
        assert!(share_nonconstant_factor(&q("x^2"), &q("x*y^2+x")).unwrap());
        // f univariate in x, g mixed, sharing x-1.
        assert!(share_nonconstant_factor(&q("x^2-x"), &q("x*y-y")).unwrap());
        assert!(!share_nonconstant_factor(&q("x^2-x"), &q("x*y-2*y")).unwrap());
    }

    #[test]
    fn linear_change_sends_first_cubic_pair_to_second() {
        // (x,y) -> (x+y, x-y) carries x^3-x^2+y^2 to (x+y)^3-4xy and
        // y^3-y^2+x^2 to (x-y)^3+4xy.
        let one = FieldSpec::Q.one();
        let minus = one.neg();
        let f1 = q("x^3-(x^2-y^2)");
        let g1 = q("y^3-(y^2-x^2)");
        assert_eq!(
            f1.linear_change(&one, &one, &one, &minus).unwrap(),
            q("(x+y)^3-4*x*y")
        );
        assert_eq!(
            g1.linear_change(&one, &one, &one, &minus).unwrap(),
            q("(x-y)^3+4*x*y")
        );
    }
}
