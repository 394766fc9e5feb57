//! Buchberger-based ideal arithmetic: reduced Groebner bases, normal forms,
//! quotient dimension, colon, intersection, and saturation.
//!
//! Only global monomial orders are used. Local lengths are obtained
//! elsewhere by adding a high power of the relevant ideal and stabilizing,
//! so a plain Buchberger kernel suffices.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};
use crate::poly::{Monomial, MultiPoly};

/// A global monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    GrevLex,
    /// Pure lexicographic, first variable heaviest.
    Lex,
    /// Elimination block order: the last `block` variables are compared
    /// first (grevlex among themselves), then the remaining variables by
    /// grevlex. Auxiliary variables are always appended last, so this
    /// eliminates them.
    Elimination { block: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::GrevLex => grevlex(&a.0, &b.0),
            MonomialOrder::Elimination { block } => {
                let k = a.0.len().saturating_sub(*block);
                grevlex(&a.0[k..], &b.0[k..]).then_with(|| grevlex(&a.0[..k], &b.0[..k]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // Smaller exponent in the last differing slot wins.
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Resource caps for basis computations.
#[derive(Clone, Copy, Debug)]
pub struct GbLimits {
    /// Maximum number of S-pairs treated.
    pub max_pairs: usize,
    /// Maximum total degree any intermediate polynomial may reach.
    pub max_degree: u32,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits {
            max_pairs: 200_000,
            max_degree: 512,
        }
    }
}

/// Truncation hint for basis computations. Monomials strictly beyond the
/// bound are known to lie in the ideal, so intermediate terms there may be
/// dropped. Sound only when the caller's generators include witnesses for
/// the region (the power-ideal generators at exactly the bound), which stay
/// below the cut and certify every dropped term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trunc {
    None,
    /// Monomials of total degree > the bound are in the ideal.
    TotalDeg(u32),
    /// Monomials whose exponent of the given variable is > the bound.
    VarPow(usize, u32),
}

impl Trunc {
    fn keeps(&self, m: &Monomial) -> bool {
        match self {
            Trunc::None => true,
            Trunc::TotalDeg(d) => m.total_degree() <= *d,
            Trunc::VarPow(v, d) => m.0[*v] <= *d,
        }
    }
}

// Internal representation: terms sorted strictly descending by the active
// order. All functions below assume operands share ring and order.
type GPoly = Vec<(Monomial, FieldElem)>;

fn to_gpoly(p: &MultiPoly, order: MonomialOrder, trunc: Trunc) -> GPoly {
    let mut v: GPoly = p
        .terms()
        .filter(|(m, _)| trunc.keeps(m))
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    v.sort_by(|(a, _), (b, _)| order.cmp(b, a));
    v
}

fn from_gpoly(p: &GPoly, template: &MultiPoly) -> MultiPoly {
    let vars: Vec<&str> = template.vars().iter().map(|s| s.as_str()).collect();
    MultiPoly::from_terms(&vars, template.field(), p.iter().cloned())
        .expect("terms come from the same ring")
}

fn merge_sub(a: &GPoly, b: &GPoly, order: MonomialOrder) -> GPoly {
    // a - b by descending merge.
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if i == a.len() {
            out.push((b[j].0.clone(), b[j].1.neg()));
            j += 1;
        } else if j == b.len() {
            out.push(a[i].clone());
            i += 1;
        } else {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), b[j].1.neg()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1.sub(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    out
}

fn mul_term(p: &GPoly, m: &Monomial, c: &FieldElem, trunc: Trunc) -> GPoly {
    p.iter()
        .map(|(pm, pc)| (pm.mul(m), pc.mul(c)))
        .filter(|(pm, _)| trunc.keeps(pm))
        .collect()
}

/// Scale to the canonical representative: monic over F_p, primitive integer
/// coefficients with positive leading coefficient over Q (keeps Buchberger
/// coefficient growth in check).
fn normalize(p: &mut GPoly, field: FieldSpec) {
    if p.is_empty() {
        return;
    }
    match field {
        FieldSpec::Fp(_) => {
            let inv = p[0].1.inv().expect("leading coefficient nonzero");
            for (_, c) in p.iter_mut() {
                *c = c.mul(&inv);
            }
        }
        FieldSpec::Q => {
            let mut den_lcm = BigInt::one();
            let mut num_gcd = BigInt::zero();
            for (_, c) in p.iter() {
                let r = c.as_rational().expect("rational field");
                den_lcm = den_lcm.lcm(r.denom());
                num_gcd = num_gcd.gcd(r.numer());
            }
            let mut scale = num_rational::BigRational::new(den_lcm, num_gcd);
            if p[0].1.as_rational().unwrap().is_negative() {
                scale = -scale;
            }
            let scale = FieldElem::Q(scale);
            for (_, c) in p.iter_mut() {
                *c = c.mul(&scale);
            }
        }
    }
}

fn make_monic(p: &mut GPoly) {
    if let Some((_, lc)) = p.first() {
        let inv = lc.inv().expect("leading coefficient nonzero");
        if !inv.is_one() {
            for (_, c) in p.iter_mut() {
                *c = c.mul(&inv);
            }
        }
    }
}

/// Full normal form of f against the (not necessarily Groebner) set `basis`.
fn reduce_full(
    mut f: GPoly,
    basis: &[GPoly],
    order: MonomialOrder,
    trunc: Trunc,
) -> GPoly {
    let mut rem: GPoly = Vec::new();
    'outer: while let Some((m, c)) = f.first().cloned() {
        for g in basis {
            let (gm, gc) = &g[0];
            if let Some(q) = m.checked_div(gm) {
                let scale = c.div(gc).expect("leading coefficient nonzero");
                f = merge_sub(&f, &mul_term(g, &q, &scale, trunc), order);
                continue 'outer;
            }
        }
        rem.push((m, c));
        f.remove(0);
    }
    rem
}

fn s_poly(a: &GPoly, b: &GPoly, order: MonomialOrder, trunc: Trunc) -> GPoly {
    let (am, ac) = &a[0];
    let (bm, bc) = &b[0];
    let l = am.lcm(bm);
    let ua = l.checked_div(am).unwrap();
    let ub = l.checked_div(bm).unwrap();
    let left = mul_term(a, &ua, &ac.inv().expect("nonzero"), trunc);
    let right = mul_term(b, &ub, &bc.inv().expect("nonzero"), trunc);
    merge_sub(&left, &right, order)
}

/// Buchberger with the normal selection strategy and the two classical
/// pair-pruning criteria; returns the reduced basis.
fn buchberger(
    gens: &[MultiPoly],
    order: MonomialOrder,
    trunc: Trunc,
    limits: &GbLimits,
) -> Result<Vec<GPoly>> {
    let field = gens
        .iter()
        .map(|g| g.field())
        .next()
        .unwrap_or(FieldSpec::Q);
    let mut basis: Vec<GPoly> = Vec::new();
    for g in gens {
        let mut gp = to_gpoly(g, order, trunc);
        if gp.is_empty() {
            continue;
        }
        // Reduce each incoming generator against what we already have.
        gp = reduce_full(gp, &basis, order, trunc);
        if gp.is_empty() {
            continue;
        }
        normalize(&mut gp, field);
        basis.push(gp);
    }

    // Pending pairs keyed by (lcm degree, i, j) for a deterministic normal
    // strategy; `done` marks treated-or-pruned pairs for the chain criterion.
    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let add_pairs = |pending: &mut BTreeSet<(u32, usize, usize)>, basis: &[GPoly], k: usize| {
        for i in 0..k {
            let l = basis[i][0].0.lcm(&basis[k][0].0);
            pending.insert((l.total_degree(), i, k));
        }
    };
    for k in 0..basis.len() {
        add_pairs(&mut pending, &basis, k);
    }

    let mut treated = 0usize;
    while let Some(&(ld, i, j)) = pending.iter().next() {
        pending.remove(&(ld, i, j));
        treated += 1;
        if treated > limits.max_pairs {
            return Err(Error::ResourceExhausted {
                stage: "groebner basis",
                cap: limits.max_pairs,
            });
        }
        let (li, lj) = (&basis[i][0].0, &basis[j][0].0);
        let l = li.lcm(lj);
        // Product criterion: coprime leading monomials.
        if l.total_degree() == li.total_degree() + lj.total_degree() {
            done.insert((i, j));
            continue;
        }
        // Chain criterion: some k with LT(k) | lcm and both sub-pairs done.
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&l)
                && done.contains(&key(i, k))
                && done.contains(&key(j, k))
        });
        if chained {
            done.insert((i, j));
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order, trunc);
        let mut r = reduce_full(s, &basis, order, trunc);
        done.insert((i, j));
        if r.is_empty() {
            continue;
        }
        if r[0].0.total_degree() > limits.max_degree {
            return Err(Error::ResourceExhausted {
                stage: "groebner basis",
                cap: limits.max_degree as usize,
            });
        }
        normalize(&mut r, field);
        basis.push(r);
        add_pairs(&mut pending, &basis, basis.len() - 1);
    }

    Ok(interreduce(basis, order, trunc))
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Turn a Groebner basis into the reduced one: minimal leading terms, fully
/// reduced tails, monic.
fn interreduce(mut basis: Vec<GPoly>, order: MonomialOrder, trunc: Trunc) -> Vec<GPoly> {
    // Drop elements whose leading term is divisible by another's.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if basis[j][0].0.divides(&basis[i][0].0)
                && (basis[j][0].0 != basis[i][0].0 || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<GPoly> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    // Sort by leading monomial for a canonical result.
    minimal.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    // Reduce every tail against the others.
    for i in 0..minimal.len() {
        let others: Vec<GPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let mut r = reduce_full(minimal[i].clone(), &others, order, trunc);
        make_monic(&mut r);
        minimal[i] = r;
    }
    minimal
}

/// An ideal with an optional cached reduced Groebner basis.
#[derive(Clone, Debug)]
pub struct GroebnerIdeal {
    vars: Vec<String>,
    field: FieldSpec,
    generators: Vec<MultiPoly>,
    basis: Option<(MonomialOrder, Vec<MultiPoly>)>,
}

/// Vector-space dimension of the quotient ring by an ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

impl QuotientDim {
    pub fn finite(self) -> Option<u64> {
        match self {
            QuotientDim::Finite(n) => Some(n),
            QuotientDim::Infinite => None,
        }
    }
}

impl GroebnerIdeal {
    /// Build an ideal from generators; zero generators are dropped. All
    /// generators must share one ring. An empty list (after dropping) is
    /// the zero ideal.
    pub fn new(generators: Vec<MultiPoly>) -> Result<Self> {
        let mut it = generators.iter();
        let first = it.next().ok_or_else(|| {
            Error::InvalidInput("an ideal needs at least one generator to fix its ring".into())
        })?;
        for g in it {
            if g.vars() != first.vars() || g.field() != first.field() {
                return Err(Error::RingMismatch);
            }
        }
        let vars = first.vars().to_vec();
        let field = first.field();
        let gens = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(GroebnerIdeal {
            vars,
            field,
            generators: gens,
            basis: None,
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    /// The cached reduced basis, if one was computed.
    pub fn basis(&self) -> Option<(&MonomialOrder, &[MultiPoly])> {
        self.basis.as_ref().map(|(o, b)| (o, b.as_slice()))
    }

    fn template(&self) -> MultiPoly {
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        MultiPoly::zero(&vars, self.field)
    }

    /// Compute (and cache) the reduced Groebner basis under `order`.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Result<GroebnerIdeal> {
        self.groebner_basis_with(order, Trunc::None, &GbLimits::default())
    }

    pub fn groebner_basis_with(
        &self,
        order: MonomialOrder,
        trunc: Trunc,
        limits: &GbLimits,
    ) -> Result<GroebnerIdeal> {
        if let Some((o, _)) = &self.basis {
            if *o == order {
                return Ok(self.clone());
            }
        }
        let raw = buchberger(&self.generators, order, trunc, limits)?;
        let template = self.template();
        let polys = raw.iter().map(|g| from_gpoly(g, &template)).collect();
        Ok(GroebnerIdeal {
            vars: self.vars.clone(),
            field: self.field,
            generators: self.generators.clone(),
            basis: Some((order, polys)),
        })
    }

    fn basis_gpolys(&self) -> Result<(MonomialOrder, Vec<GPoly>)> {
        let (order, polys) = self.basis.as_ref().ok_or(Error::MissingBasis)?;
        Ok((
            *order,
            polys.iter().map(|p| to_gpoly(p, *order, Trunc::None)).collect(),
        ))
    }

    /// Remainder of multivariate division by the cached basis; zero exactly
    /// for ideal members.
    pub fn normal_form(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if f.vars() != self.vars.as_slice() || f.field() != self.field {
            return Err(Error::RingMismatch);
        }
        let (order, basis) = self.basis_gpolys()?;
        let r = reduce_full(to_gpoly(f, order, Trunc::None), &basis, order, Trunc::None);
        Ok(from_gpoly(&r, &self.template()))
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Count standard monomials (those outside the leading-term ideal) under
    /// the cached basis, or report an infinite-dimensional quotient.
    pub fn quotient_dim(&self) -> Result<QuotientDim> {
        let (_, polys) = self.basis.as_ref().ok_or(Error::MissingBasis)?;
        let (order, _) = self.basis.as_ref().unwrap();
        if polys.iter().any(|p| p.is_constant() && !p.is_zero()) {
            return Ok(QuotientDim::Finite(0));
        }
        let lts: Vec<Monomial> = polys
            .iter()
            .map(|p| leading_monomial(p, *order))
            .collect();
        let n = self.vars.len();
        // Need a pure power of every variable among the leading terms.
        let mut bound = vec![0u32; n];
        for (v, b) in bound.iter_mut().enumerate() {
            let pure = lts
                .iter()
                .filter(|m| m.0.iter().enumerate().all(|(i, &e)| i == v || e == 0))
                .map(|m| m.0[v])
                .min();
            match pure {
                Some(p) => *b = p,
                None => return Ok(QuotientDim::Infinite),
            }
        }
        // Walk the finite box under the pure-power staircase.
        let mut count = 0u64;
        let mut exp = vec![0u32; n];
        'cells: loop {
            let m = Monomial(exp.clone());
            if !lts.iter().any(|l| l.divides(&m)) {
                count += 1;
            }
            // Odometer increment.
            for i in 0..n {
                exp[i] += 1;
                if exp[i] < bound[i] {
                    continue 'cells;
                }
                exp[i] = 0;
            }
            break;
        }
        Ok(QuotientDim::Finite(count))
    }

    /// The colon ideal I : g, via intersection with the principal ideal (g)
    /// followed by exact division of its basis by g.
    pub fn colon(&self, g: &MultiPoly) -> Result<GroebnerIdeal> {
        self.colon_with(g, &GbLimits::default())
    }

    pub fn colon_with(&self, g: &MultiPoly, limits: &GbLimits) -> Result<GroebnerIdeal> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if g.vars() != self.vars.as_slice() || g.field() != self.field {
            return Err(Error::RingMismatch);
        }
        if self.generators.is_empty() {
            // (0) : g = (0)
            return Ok(self.clone());
        }
        let principal = GroebnerIdeal::new(vec![g.clone()])?;
        let meet = self.intersect_with(&principal, limits)?;
        let (_, basis) = meet.basis.as_ref().expect("intersection caches a basis");
        let divided: Result<Vec<MultiPoly>> =
            basis.iter().map(|h| h.exact_divide(g)).collect();
        let mut divided = divided?;
        for p in &mut divided {
            monicize(p);
        }
        Ok(GroebnerIdeal {
            vars: self.vars.clone(),
            field: self.field,
            generators: divided.clone(),
            // Dividing a reduced basis of I n (g) by g preserves the
            // reduced-basis property, with the same leading-term structure
            // shifted by LT(g).
            basis: Some((MonomialOrder::GrevLex, divided)),
        })
    }

    /// The intersection of two ideals in the same ring, by the auxiliary
    /// variable method: eliminate t from t*I + (1-t)*J.
    pub fn intersect(&self, other: &GroebnerIdeal) -> Result<GroebnerIdeal> {
        self.intersect_with(other, &GbLimits::default())
    }

    pub fn intersect_with(
        &self,
        other: &GroebnerIdeal,
        limits: &GbLimits,
    ) -> Result<GroebnerIdeal> {
        if self.vars != other.vars || self.field != other.field {
            return Err(Error::RingMismatch);
        }
        if self.generators.is_empty() || other.generators.is_empty() {
            let zero = if self.generators.is_empty() { self } else { other };
            return Ok(zero.clone());
        }
        let mut aux = "t".to_string();
        while self.vars.contains(&aux) {
            aux.push('_');
        }
        let ext: Vec<String> = self.vars.iter().cloned().chain([aux.clone()]).collect();
        let ext_refs: Vec<&str> = ext.iter().map(|s| s.as_str()).collect();
        let lift = |p: &MultiPoly| -> MultiPoly {
            let terms = p
                .terms()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.push(0);
                    (Monomial(e), c.clone())
                })
                .collect::<Vec<_>>();
            MultiPoly::from_terms(&ext_refs, self.field, terms).expect("lift is well-formed")
        };
        let t = MultiPoly::variable(&ext_refs, self.field, &aux).expect("aux var exists");
        let one_minus_t = MultiPoly::one(&ext_refs, self.field).sub(&t).expect("same ring");
        let mut gens = Vec::new();
        for f in &self.generators {
            gens.push(lift(f).mul(&t).expect("same ring"));
        }
        for g in &other.generators {
            gens.push(lift(g).mul(&one_minus_t).expect("same ring"));
        }
        let extended = GroebnerIdeal::new(gens)?;
        let eliminated = extended.groebner_basis_with(
            MonomialOrder::Elimination { block: 1 },
            Trunc::None,
            limits,
        )?;
        let (_, ebasis) = eliminated.basis.as_ref().unwrap();
        let nvars = self.vars.len();
        let vars_refs: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut kept = Vec::new();
        for p in ebasis {
            // Under the elimination order a t-free leading term forces the
            // whole polynomial to be t-free.
            if p.terms().all(|(m, _)| m.0[nvars] == 0) {
                let proj: Vec<(Monomial, FieldElem)> = p
                    .terms()
                    .map(|(m, c)| (Monomial(m.0[..nvars].to_vec()), c.clone()))
                    .collect();
                kept.push(MultiPoly::from_terms(&vars_refs, self.field, proj)?);
            }
        }
        // The t-free part of the eliminated basis is the reduced grevlex
        // basis of the intersection.
        Ok(GroebnerIdeal {
            vars: self.vars.clone(),
            field: self.field,
            generators: kept.clone(),
            basis: Some((MonomialOrder::GrevLex, kept)),
        })
    }

    /// The saturation I : g^inf by iterating colon until the basis is stable.
    pub fn saturate(&self, g: &MultiPoly) -> Result<GroebnerIdeal> {
        self.saturate_with(g, &GbLimits::default())
    }

    pub fn saturate_with(&self, g: &MultiPoly, limits: &GbLimits) -> Result<GroebnerIdeal> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut current = if self
            .basis
            .as_ref()
            .map(|(o, _)| *o == MonomialOrder::GrevLex)
            .unwrap_or(false)
        {
            self.clone()
        } else {
            self.groebner_basis_with(MonomialOrder::GrevLex, Trunc::None, limits)?
        };
        const CAP: usize = 256;
        for _ in 0..CAP {
            let next = current.colon_with(g, limits)?;
            if next.basis.as_ref().map(|(_, b)| b) == current.basis.as_ref().map(|(_, b)| b) {
                return Ok(current);
            }
            current = next;
        }
        Err(Error::ResourceExhausted {
            stage: "saturation",
            cap: CAP,
        })
    }
}

fn leading_monomial(p: &MultiPoly, order: MonomialOrder) -> Monomial {
    p.terms()
        .map(|(m, _)| m.clone())
        .max_by(|a, b| order.cmp(a, b))
        .expect("nonzero polynomial")
}

fn monicize(p: &mut MultiPoly) {
    let lead = p
        .terms()
        .map(|(m, c)| (m.clone(), c.clone()))
        .max_by(|(a, _), (b, _)| MonomialOrder::GrevLex.cmp(a, b));
    if let Some((_, c)) = lead {
        if !c.is_one() {
            *p = p.scale(&c.inv().expect("nonzero"));
        }
    }
}

/// Generators of m^n for the maximal ideal of the origin: all monomials of
/// total degree exactly n. For n <= 0 this is the unit ideal.
pub fn maximal_ideal_power(vars: &[&str], field: FieldSpec, n: i64) -> Vec<MultiPoly> {
    if n <= 0 {
        return vec![MultiPoly::one(vars, field)];
    }
    let nv = vars.len();
    let mut out = Vec::new();
    let mut exp = vec![0u32; nv];
    fn walk(
        exp: &mut Vec<u32>,
        idx: usize,
        remaining: u32,
        vars: &[&str],
        field: FieldSpec,
        out: &mut Vec<MultiPoly>,
    ) {
        if idx + 1 == exp.len() {
            exp[idx] = remaining;
            let m = Monomial(exp.clone());
            out.push(
                MultiPoly::from_terms(vars, field, [(m, field.one())])
                    .expect("monomial is well-formed"),
            );
            return;
        }
        for e in 0..=remaining {
            exp[idx] = e;
            walk(exp, idx + 1, remaining - e, vars, field, out);
        }
        exp[idx] = 0;
    }
    walk(&mut exp, 0, n as u32, vars, field, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn q(s: &str) -> MultiPoly {
        parse(s, &["x", "y"], FieldSpec::Q).unwrap()
    }

    fn ideal(gens: &[&str]) -> GroebnerIdeal {
        GroebnerIdeal::new(gens.iter().map(|s| q(s)).collect()).unwrap()
    }

    fn basis_strings(i: &GroebnerIdeal) -> Vec<String> {
        i.basis().unwrap().1.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn already_reduced_basis() {
        let i = ideal(&["x", "y"])
            .groebner_basis(MonomialOrder::GrevLex)
            .unwrap();
        assert_eq!(basis_strings(&i), vec!["y", "x"]);
    }

    #[test]
    fn cusp_and_axis() {
        // One S-polynomial reduction: (y^2 - x^3, y) -> {y, x^3}.
        let i = ideal(&["y^2-x^3", "y"])
            .groebner_basis(MonomialOrder::GrevLex)
            .unwrap();
        assert_eq!(basis_strings(&i), vec!["y", "x^3"]);
    }

    #[test]
    fn linear_combinations() {
        let i = ideal(&["x^2-y^2", "x^2+y^2"])
            .groebner_basis(MonomialOrder::GrevLex)
            .unwrap();
        assert_eq!(basis_strings(&i), vec!["y^2", "x^2"]);
    }

    #[test]
    fn normal_forms() {
        let i = ideal(&["y", "x^3"])
            .groebner_basis(MonomialOrder::GrevLex)
            .unwrap();
        assert!(i.normal_form(&q("x^3")).unwrap().is_zero());
        assert_eq!(i.normal_form(&q("x^2")).unwrap(), q("x^2"));

        let j = ideal(&["y^2-x^3", "y"])
            .groebner_basis(MonomialOrder::GrevLex)
            .unwrap();
        assert_eq!(j.normal_form(&q("x^3+x")).unwrap(), q("x"));

        assert!(matches!(
            ideal(&["x"]).normal_form(&q("x")),
            Err(Error::MissingBasis)
        ));
    }

    #[test]
    fn quotient_dimensions() {
        for n in 0..8i64 {
            let gens = maximal_ideal_power(&["x", "y"], FieldSpec::Q, n);
            let i = GroebnerIdeal::new(gens)
                .unwrap()
                .groebner_basis(MonomialOrder::GrevLex)
                .unwrap();
            assert_eq!(
                i.quotient_dim().unwrap(),
                QuotientDim::Finite((n * (n + 1) / 2) as u64),
                "dim of quotient by m^{n}"
            );
        }
        let i = ideal(&["y", "x^3"])
            .groebner_basis(MonomialOrder::GrevLex)
            .unwrap();
        assert_eq!(i.quotient_dim().unwrap(), QuotientDim::Finite(3));
        let i = ideal(&["x"])
            .groebner_basis(MonomialOrder::GrevLex)
            .unwrap();
        assert_eq!(i.quotient_dim().unwrap(), QuotientDim::Infinite);
    }

    #[test]
    fn colon_examples() {
        let i = ideal(&["x*y"]).colon(&q("x")).unwrap();
        assert_eq!(basis_strings(&i), vec!["y"]);

        let i = ideal(&["x^2", "x*y"]).colon(&q("x")).unwrap();
        assert_eq!(basis_strings(&i), vec!["y", "x"]);

        let i = ideal(&["x^2", "x*y"]);
        let c = i.colon(&q("1")).unwrap();
        let gb = i.groebner_basis(MonomialOrder::GrevLex).unwrap();
        assert_eq!(basis_strings(&c), basis_strings(&gb));

        assert!(matches!(
            ideal(&["x"]).colon(&q("0")),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn intersection_examples() {
        let i = ideal(&["x"]).intersect(&ideal(&["y"])).unwrap();
        assert_eq!(basis_strings(&i), vec!["x*y"]);

        let i = ideal(&["x^2", "y"]).intersect(&ideal(&["x"])).unwrap();
        assert_eq!(basis_strings(&i), vec!["x*y", "x^2"]);

        let a = ideal(&["x^2-y", "y^3"]);
        let self_meet = a.intersect(&a).unwrap();
        let gb = a.groebner_basis(MonomialOrder::GrevLex).unwrap();
        assert_eq!(basis_strings(&self_meet), basis_strings(&gb));
    }

    #[test]
    fn saturation_examples() {
        let s = ideal(&["x*y^2"]).saturate(&q("y")).unwrap();
        assert_eq!(basis_strings(&s), vec!["x"]);

        // Iterated colon on (xy, x^2) by x: first step gives (y, x), the
        // second the unit ideal, which is stable.
        let first = ideal(&["x*y", "x^2"]).colon(&q("x")).unwrap();
        assert_eq!(basis_strings(&first), vec!["y", "x"]);
        let second = first.colon(&q("x")).unwrap();
        assert_eq!(basis_strings(&second), vec!["1"]);
        let s = ideal(&["x*y", "x^2"]).saturate(&q("x")).unwrap();
        assert_eq!(basis_strings(&s), vec!["1"]);

        let i = ideal(&["x^2-y", "y^3"]);
        let s = i.saturate(&q("1")).unwrap();
        let gb = i.groebner_basis(MonomialOrder::GrevLex).unwrap();
        assert_eq!(basis_strings(&s), basis_strings(&gb));
    }

    #[test]
    fn saturation_is_idempotent() {
        let i = ideal(&["x^2*y", "x*y^3-y^4"]);
        let once = i.saturate(&q("y")).unwrap();
        let twice = once.saturate(&q("y")).unwrap();
        assert_eq!(basis_strings(&once), basis_strings(&twice));
    }

    #[test]
    fn truncated_basis_matches_plain_one() {
        // Adding m^6 explicitly and truncating at degree 6 must agree with
        // the untruncated computation.
        let mut gens = vec![q("x^3+y^3-3*x*y"), q("x^2+y^2-3*x")];
        gens.extend(maximal_ideal_power(&["x", "y"], FieldSpec::Q, 6));
        let plain = GroebnerIdeal::new(gens.clone())
            .unwrap()
            .groebner_basis(MonomialOrder::GrevLex)
            .unwrap();
        let truncated = GroebnerIdeal::new(gens)
            .unwrap()
            .groebner_basis_with(
                MonomialOrder::GrevLex,
                Trunc::TotalDeg(6),
                &GbLimits::default(),
            )
            .unwrap();
        assert_eq!(basis_strings(&plain), basis_strings(&truncated));
        assert_eq!(plain.quotient_dim().unwrap(), truncated.quotient_dim().unwrap());
    }

    #[test]
    fn grevlex_vs_lex() {
        // In >= 3 variables the two graded orders differ; check grevlex
        // tie-breaking explicitly.
        let a = Monomial(vec![1, 0, 1]);
        let b = Monomial(vec![0, 2, 0]);
        // deg 2 each; grevlex compares last exponent reversed: a has z^1,
        // b has z^0, so b > a.
        assert_eq!(MonomialOrder::GrevLex.cmp(&a, &b), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
    }
}
