//! Local (at the origin) invariants of ideals in k[x,y]: the length of the
//! localized quotient by power-ideal stabilization, an independent recursive
//! intersection-number oracle, and the plane Hilbert-Samuel bookkeeping.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::{
    maximal_ideal_power, GbLimits, GroebnerIdeal, MonomialOrder, QuotientDim, Trunc,
};
use crate::poly::MultiPoly;

/// A quantity obtained by probing a nondecreasing sequence until it
/// plateaus. `probes` records every (N, value) pair observed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizedLength {
    pub value: u64,
    pub n_stop: u32,
    pub probes: Vec<(u32, u64)>,
}

/// Probing schedule: start, step, required plateau length, hard cap.
#[derive(Clone, Copy, Debug)]
pub struct StabilizeOpts {
    pub start: u32,
    pub step: u32,
    pub plateau: usize,
    pub cap: u32,
}

impl Default for StabilizeOpts {
    fn default() -> Self {
        StabilizeOpts {
            start: 2,
            step: 1,
            plateau: 2,
            cap: 64,
        }
    }
}

/// Drive `probe` along the schedule until `plateau` consecutive values
/// agree.
pub(crate) fn stabilize<F>(
    quantity: &'static str,
    opts: &StabilizeOpts,
    mut probe: F,
) -> Result<StabilizedLength>
where
    F: FnMut(u32) -> Result<u64>,
{
    let mut probes: Vec<(u32, u64)> = Vec::new();
    let mut run = 0usize;
    let mut n = opts.start.max(1);
    while n <= opts.cap {
        let v = probe(n)?;
        if let Some(&(_, prev)) = probes.last() {
            run = if v == prev { run + 1 } else { 0 };
        }
        probes.push((n, v));
        if run + 1 >= opts.plateau {
            return Ok(StabilizedLength {
                value: v,
                n_stop: n,
                probes,
            });
        }
        n += opts.step.max(1);
    }
    Err(Error::StabilizationFailed {
        quantity,
        cap: opts.cap,
    })
}

/// Length of the quotient by `ideal` localized at the origin, obtained as
/// the stabilized dimension of the quotient by ideal + m^N. Adding m^N cuts
/// away every component off the origin, and a plateau certifies that m^N is
/// locally contained in the ideal.
pub fn local_length(ideal: &GroebnerIdeal, opts: &StabilizeOpts) -> Result<StabilizedLength> {
    local_length_with(ideal, opts, &GbLimits::default())
}

pub fn local_length_with(
    ideal: &GroebnerIdeal,
    opts: &StabilizeOpts,
    limits: &GbLimits,
) -> Result<StabilizedLength> {
    let vars: Vec<&str> = ideal.vars().iter().map(|s| s.as_str()).collect();
    let field = ideal.field();
    stabilize("local length", opts, |n| {
        let mut gens = ideal.generators().to_vec();
        gens.extend(maximal_ideal_power(&vars, field, n as i64));
        let gb = GroebnerIdeal::new(gens)?.groebner_basis_with(
            MonomialOrder::GrevLex,
            Trunc::TotalDeg(n),
            limits,
        )?;
        match gb.quotient_dim()? {
            QuotientDim::Finite(d) => Ok(d),
            QuotientDim::Infinite => unreachable!("quotient by m^N is finite"),
        }
    })
}

/// Intersection number of two curves at the origin by the classical
/// recursive reduction: kill the pure-x parts against each other, split off
/// exceptional y-factors, and count orders along the x-axis. Entirely
/// independent of the Groebner engine. `None` means infinite (the curves
/// share a component through the origin).
pub fn fulton_oracle(f: &MultiPoly, g: &MultiPoly) -> Result<Option<u64>> {
    if f.vars() != g.vars() || f.field() != g.field() {
        return Err(Error::RingMismatch);
    }
    if f.vars().len() != 2 {
        return Err(Error::WrongArity {
            expected: 2,
            got: f.vars().len(),
        });
    }
    let mut steps = 0usize;
    fulton_rec(f.clone(), g.clone(), &mut steps)
}

const FULTON_STEP_CAP: usize = 100_000;

fn fulton_rec(f: MultiPoly, g: MultiPoly, steps: &mut usize) -> Result<Option<u64>> {
    let mut f = f;
    let mut g = g;
    let mut acc = 0u64;
    loop {
        *steps += 1;
        if *steps > FULTON_STEP_CAP {
            return Err(Error::ResourceExhausted {
                stage: "intersection-number recursion",
                cap: FULTON_STEP_CAP,
            });
        }
        if f.is_zero() || g.is_zero() {
            return Ok(None);
        }
        if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
            return Ok(Some(acc));
        }
        let a = restrict_to_x_axis(&f);
        let b = restrict_to_x_axis(&g);
        match (x_order(&a), x_order(&b)) {
            (None, None) => return Ok(None), // y divides both
            (None, Some(ord_b)) => {
                // f = y * f1: count i(y, g) = ord of g on the x-axis, then
                // recurse on the cofactor.
                acc += ord_b as u64;
                f = divide_by_var(&f, 1);
            }
            (Some(ord_a), None) => {
                acc += ord_a as u64;
                g = divide_by_var(&g, 1);
            }
            (Some(_), Some(_)) => {
                // Both restrictions nonzero: cancel the higher pure-x part
                // against the lower one (the count is symmetric in f, g).
                let (mut a, mut b) = (a, b);
                if a.degree_in(0) > b.degree_in(0) {
                    std::mem::swap(&mut f, &mut g);
                    std::mem::swap(&mut a, &mut b);
                }
                let (da, db) = (a.degree_in(0), b.degree_in(0));
                let scale = top_coeff(&b, db).div(&top_coeff(&a, da))?;
                let shift = crate::poly::Monomial(vec![db - da, 0]);
                g = g.sub(&f.mul_term(&shift, &scale))?;
            }
        }
    }
}

/// f(x, 0): drop every term with positive y-exponent.
fn restrict_to_x_axis(f: &MultiPoly) -> MultiPoly {
    let vars: Vec<&str> = f.vars().iter().map(|s| s.as_str()).collect();
    let terms: Vec<_> = f
        .terms()
        .filter(|(m, _)| m.0[1] == 0)
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    MultiPoly::from_terms(&vars, f.field(), terms).expect("restriction is well-formed")
}

/// Order of vanishing at x = 0 of a polynomial supported on x alone.
fn x_order(a: &MultiPoly) -> Option<u32> {
    a.terms().map(|(m, _)| m.0[0]).min()
}

fn top_coeff(a: &MultiPoly, deg: u32) -> crate::field::FieldElem {
    a.coefficient(&crate::poly::Monomial(vec![deg, 0]))
}

/// Exact quotient by one variable.
fn divide_by_var(f: &MultiPoly, var: usize) -> MultiPoly {
    let vars: Vec<&str> = f.vars().iter().map(|s| s.as_str()).collect();
    let terms: Vec<_> = f
        .terms()
        .map(|(m, c)| {
            let mut e = m.0.clone();
            debug_assert!(e[var] > 0);
            e[var] -= 1;
            (crate::poly::Monomial(e), c.clone())
        })
        .collect();
    MultiPoly::from_terms(&vars, f.field(), terms).expect("quotient is well-formed")
}

/// Length of k[x,y] modulo the n-th power of the origin ideal: n(n+1)/2.
pub fn hilbert_samuel(n: i64) -> i64 {
    if n <= 0 {
        0
    } else {
        n * (n + 1) / 2
    }
}

/// Same value, cross-checked against the staircase count of an actual
/// basis computation.
pub fn hilbert_samuel_checked(n: i64) -> Result<i64> {
    let formula = hilbert_samuel(n);
    let gens = maximal_ideal_power(&["x", "y"], FieldSpec::Q, n);
    let gb = GroebnerIdeal::new(gens)?.groebner_basis(MonomialOrder::GrevLex)?;
    match gb.quotient_dim()? {
        QuotientDim::Finite(d) if d as i64 == formula => Ok(formula),
        other => Err(Error::InvalidInput(format!(
            "staircase count {other:?} disagrees with n(n+1)/2 = {formula}"
        ))),
    }
}

/// The weighted two-fold backwards difference of the plane Hilbert-Samuel
/// function: l(A/m^n) - l(A/m^(n-c)) - l(A/m^(n-d)) + l(A/m^(n-c-d)),
/// with the convention that m^k is the unit ideal for k <= 0. Equals c*d
/// once n >= c + d.
pub fn weighted_difference(n: i64, c: i64, d: i64) -> i64 {
    hilbert_samuel(n) - hilbert_samuel(n - c) - hilbert_samuel(n - d) + hilbert_samuel(n - c - d)
}
