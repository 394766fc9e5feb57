//! Assembly of the full invariant report for a curve pair: the local
//! multiplicity from two independent engines, tangent data, the colon-ideal
//! correction invariants, blow-up chart multiplicities, and the verdicts of
//! the identities relating them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::blowup::{chart_multiplicities_with, ChartMultiplicities};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::{maximal_ideal_power, GbLimits, GroebnerIdeal, QuotientDim};
use crate::localmult::{fulton_oracle, local_length_with, StabilizeOpts, StabilizedLength};
use crate::poly::MultiPoly;
use crate::tangentcone::{axis_is_common_tangent, tangent_data, CurvePair, TangentData};

/// Outcome of one identity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub left: i64,
    pub right: i64,
}

/// Identity labels, fixed as part of the report contract.
pub const VERDICT_NAMES: [&str; 7] = [
    "THM61", "THM51", "PROP52", "THM72", "THM74A", "THM74B", "LEM21",
];

/// Stabilization diagnostics for every probed quantity.
#[derive(Clone, Debug, Serialize)]
pub struct Stabilization {
    pub e: StabilizedLength,
    pub ell: StabilizedLength,
    pub lambda: StabilizedLength,
    pub e1: StabilizedLength,
    pub e2: StabilizedLength,
    pub e3: StabilizedLength,
}

/// Every invariant of a curve pair, plus identity verdicts and
/// stabilization diagnostics.
#[derive(Clone, Debug)]
pub struct BezoutReport {
    pub field: FieldSpec,
    pub f: String,
    pub g: String,
    pub e: u64,
    pub c: u32,
    pub d: u32,
    pub t: u32,
    pub ell: u64,
    pub lambda: u64,
    pub e1: u64,
    pub e2: u64,
    pub e3: u64,
    pub transversal: bool,
    pub axis_tangent: bool,
    /// Multiplicity of the origin ideal in the regular base ring; always 1
    /// here, recorded so the c*d terms above read as c*d times this.
    pub base_ring_multiplicity: u64,
    pub verdicts: BTreeMap<&'static str, Verdict>,
    pub stabilization: Stabilization,
    /// Named consistency warnings (empty in a healthy run).
    pub diagnostics: Vec<String>,
}

impl BezoutReport {
    pub fn all_verdicts_hold(&self) -> bool {
        self.verdicts.values().all(|v| v.holds)
    }

    /// Serialize with the fixed key set (`field`, `f`, `g`, `e`, `c`, `d`,
    /// `t`, `ell`, `lambda`, `e1`, `e2`, `e3`, `transversal`,
    /// `axis_tangent`, `verdicts`, `stabilization`); verdicts flatten to
    /// booleans.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Json<'a> {
            field: String,
            f: &'a str,
            g: &'a str,
            e: u64,
            c: u32,
            d: u32,
            t: u32,
            ell: u64,
            lambda: u64,
            e1: u64,
            e2: u64,
            e3: u64,
            transversal: bool,
            axis_tangent: bool,
            verdicts: BTreeMap<&'a str, bool>,
            stabilization: &'a Stabilization,
        }
        serde_json::to_value(Json {
            field: self.field.to_string(),
            f: &self.f,
            g: &self.g,
            e: self.e,
            c: self.c,
            d: self.d,
            t: self.t,
            ell: self.ell,
            lambda: self.lambda,
            e1: self.e1,
            e2: self.e2,
            e3: self.e3,
            transversal: self.transversal,
            axis_tangent: self.axis_tangent,
            verdicts: self
                .verdicts
                .iter()
                .map(|(k, v)| (*k, v.holds))
                .collect(),
            stabilization: &self.stabilization,
        })
        .expect("report serializes")
    }
}

/// Options threaded through a full report.
#[derive(Clone, Copy, Debug)]
pub struct ReportOpts {
    /// Cap for every stabilization schedule.
    pub max_n: u32,
}

impl Default for ReportOpts {
    fn default() -> Self {
        ReportOpts { max_n: 64 }
    }
}

fn power_ideal_with(f: &MultiPoly, k: i64) -> Result<GroebnerIdeal> {
    let vars: Vec<&str> = f.vars().iter().map(|s| s.as_str()).collect();
    let mut gens = vec![f.clone()];
    gens.extend(maximal_ideal_power(&vars, f.field(), k));
    GroebnerIdeal::new(gens)
}

fn finite(q: QuotientDim) -> Result<u64> {
    q.finite().ok_or_else(|| {
        Error::InvalidInput("colon-module quotient is unexpectedly infinite".into())
    })
}

/// Both colon-module lengths at level n, sharing the colon ideal:
/// the Koszul H1 length lambda_n and the correction ell_n.
fn colon_lengths(pair: &CurvePair, n: u32, limits: &GbLimits) -> Result<(u64, u64)> {
    let d = pair.g().ord()? as i64;
    let n = n as i64;
    let colon = power_ideal_with(pair.f(), n)?.colon_with(pair.g(), limits)?;
    let dim_colon = finite(colon.quotient_dim()?)?;
    let lambda_meet = colon.intersect_with(&power_ideal_with(pair.f(), n - d)?, limits)?;
    let dim_lambda = finite(lambda_meet.quotient_dim()?)?;
    let ell_meet = colon.intersect_with(&power_ideal_with(pair.f(), n - d - 1)?, limits)?;
    let dim_ell = finite(ell_meet.quotient_dim()?)?;
    let lambda = dim_lambda.checked_sub(dim_colon).ok_or_else(|| {
        Error::InvalidInput("colon-module length is negative".into())
    })?;
    let ell = dim_ell.checked_sub(dim_colon).ok_or_else(|| {
        Error::InvalidInput("colon-module length is negative".into())
    })?;
    Ok((lambda, ell))
}

/// Length of ((f) + m^n) : g modulo (f) + m^(n-d) at one level n; the
/// stabilized value is the Koszul H1 length. Requires n > c + d.
pub fn koszul_h1_length(pair: &CurvePair, n: u32) -> Result<u64> {
    let td = tangent_data(pair)?;
    if n <= td.c + td.d {
        return Err(Error::InvalidInput(format!(
            "level n = {n} must exceed c + d = {}",
            td.c + td.d
        )));
    }
    Ok(colon_lengths(pair, n, &GbLimits::default())?.0)
}

/// Length of ((f) + m^n) : g modulo its intersection with (f) + m^(n-d-1)
/// at one level n; the stabilized value is the correction invariant ell.
/// Requires n > c + d + 1.
pub fn ell_invariant(pair: &CurvePair, n: u32) -> Result<u64> {
    let td = tangent_data(pair)?;
    if n <= td.c + td.d + 1 {
        return Err(Error::InvalidInput(format!(
            "level n = {n} must exceed c + d + 1 = {}",
            td.c + td.d + 1
        )));
    }
    Ok(colon_lengths(pair, n, &GbLimits::default())?.1)
}

/// Stabilize lambda_n and ell_n jointly (they share the colon ideal per
/// level n).
fn stabilize_colon_lengths(
    pair: &CurvePair,
    td: &TangentData,
    opts: &ReportOpts,
    limits: &GbLimits,
) -> Result<(StabilizedLength, StabilizedLength)> {
    const PLATEAU: usize = 3;
    let start = td.c + td.d + 2;
    let mut lambda_probes: Vec<(u32, u64)> = Vec::new();
    let mut ell_probes: Vec<(u32, u64)> = Vec::new();
    let (mut lambda_run, mut ell_run) = (0usize, 0usize);
    let (mut lambda_done, mut ell_done) = (None, None);
    let mut n = start;
    while n <= opts.max_n {
        let (lam, ell) = colon_lengths(pair, n, limits)?;
        if let Some(&(_, prev)) = lambda_probes.last() {
            lambda_run = if lam == prev { lambda_run + 1 } else { 0 };
        }
        if let Some(&(_, prev)) = ell_probes.last() {
            ell_run = if ell == prev { ell_run + 1 } else { 0 };
        }
        lambda_probes.push((n, lam));
        ell_probes.push((n, ell));
        if lambda_done.is_none() && lambda_run + 1 >= PLATEAU {
            lambda_done = Some((lam, n));
        }
        if ell_done.is_none() && ell_run + 1 >= PLATEAU {
            ell_done = Some((ell, n));
        }
        if let (Some((lv, ln)), Some((ev, en))) = (lambda_done, ell_done) {
            return Ok((
                StabilizedLength {
                    value: lv,
                    n_stop: ln,
                    probes: lambda_probes,
                },
                StabilizedLength {
                    value: ev,
                    n_stop: en,
                    probes: ell_probes,
                },
            ));
        }
        n += 1;
    }
    Err(Error::StabilizationFailed {
        quantity: "colon-module lengths",
        cap: opts.max_n,
    })
}

/// Compute every invariant of the pair and evaluate all identities.
///
/// The multiplicity e is computed by both engines; disagreement is a hard
/// error. The identities checked are, in the labels of the report:
/// THM61 e = c*d + t + ell; THM51 e = c*d + lambda; PROP52 lambda = t + ell;
/// THM72 e = c*d + e1 + e2 - e3; THM74A e = c*d iff transversal iff
/// e1 = e2 = 0; THM74B (non-transversal pairs) e <= c*d + e1 + e2 with
/// equality iff an axis is a common tangent; LEM21 e >= c*d.
pub fn full_report(pair: &CurvePair, opts: &ReportOpts) -> Result<BezoutReport> {
    let limits = GbLimits::default();
    let td = tangent_data(pair)?;
    let transversal = td.t == 0;
    let axis_tangent = axis_is_common_tangent(pair)?;

    // Engine one: stabilized length of the quotient by (f, g).
    let e_opts = StabilizeOpts {
        start: td.c + td.d + 1,
        step: 1,
        plateau: 2,
        cap: opts.max_n,
    };
    let pair_ideal = GroebnerIdeal::new(vec![pair.f().clone(), pair.g().clone()])?;
    let e_diag = local_length_with(&pair_ideal, &e_opts, &limits)?;

    // Engine two: recursive reduction count.
    let via_oracle = fulton_oracle(pair.f(), pair.g())?.ok_or(Error::CommonComponent)?;
    if via_oracle != e_diag.value {
        return Err(Error::EngineDisagreement {
            groebner: e_diag.value,
            fulton: via_oracle,
        });
    }
    let e = e_diag.value;

    let (lambda_diag, ell_diag) = stabilize_colon_lengths(pair, &td, opts, &limits)?;
    let (lambda, ell) = (lambda_diag.value, ell_diag.value);

    let chart_opts = StabilizeOpts {
        start: 2,
        step: 1,
        plateau: 2,
        cap: opts.max_n,
    };
    let ChartMultiplicities {
        e1,
        e2,
        e3,
        e1_diag,
        e2_diag,
        e3_diag,
    } = chart_multiplicities_with(pair, &chart_opts, &limits)?;

    let mut diagnostics = Vec::new();
    let cd = td.c as i64 * td.d as i64;
    if ell as i64 != e as i64 - cd - td.t as i64 {
        diagnostics.push(format!(
            "ell-consistency: stabilized ell = {ell} but e - c*d - t = {}",
            e as i64 - cd - td.t as i64
        ));
    }
    if lambda as i64 != e as i64 - cd {
        diagnostics.push(format!(
            "lambda-consistency: stabilized lambda = {lambda} but e - c*d = {}",
            e as i64 - cd
        ));
    }

    let mut verdicts = BTreeMap::new();
    let (e_i, t_i, ell_i, lam_i) = (e as i64, td.t as i64, ell as i64, lambda as i64);
    let (e1_i, e2_i, e3_i) = (e1 as i64, e2 as i64, e3 as i64);
    verdicts.insert(
        "THM61",
        Verdict {
            holds: e_i == cd + t_i + ell_i,
            left: e_i,
            right: cd + t_i + ell_i,
        },
    );
    verdicts.insert(
        "THM51",
        Verdict {
            holds: e_i == cd + lam_i,
            left: e_i,
            right: cd + lam_i,
        },
    );
    verdicts.insert(
        "PROP52",
        Verdict {
            holds: lam_i == t_i + ell_i,
            left: lam_i,
            right: t_i + ell_i,
        },
    );
    verdicts.insert(
        "THM72",
        Verdict {
            holds: e_i == cd + e1_i + e2_i - e3_i,
            left: e_i,
            right: cd + e1_i + e2_i - e3_i,
        },
    );
    // Three equivalent statements: e = c*d, transversality, empty fibers.
    let equal_cd = e_i == cd;
    let fibers_empty = e1 == 0 && e2 == 0;
    verdicts.insert(
        "THM74A",
        Verdict {
            holds: equal_cd == transversal && transversal == fibers_empty,
            left: e_i - cd,
            right: e1_i + e2_i,
        },
    );
    // Vacuous for transversal pairs; otherwise an inequality whose equality
    // case is exactly axis tangency.
    let thm74b_holds = if transversal {
        true
    } else {
        e_i <= cd + e1_i + e2_i && ((e_i == cd + e1_i + e2_i) == axis_tangent)
    };
    verdicts.insert(
        "THM74B",
        Verdict {
            holds: thm74b_holds,
            left: e_i,
            right: cd + e1_i + e2_i,
        },
    );
    verdicts.insert(
        "LEM21",
        Verdict {
            holds: e_i >= cd,
            left: e_i,
            right: cd,
        },
    );

    Ok(BezoutReport {
        field: pair.field(),
        f: pair.f().to_string(),
        g: pair.g().to_string(),
        e,
        c: td.c,
        d: td.d,
        t: td.t,
        ell,
        lambda,
        e1,
        e2,
        e3,
        transversal,
        axis_tangent,
        base_ring_multiplicity: 1,
        verdicts,
        stabilization: Stabilization {
            e: e_diag,
            ell: ell_diag,
            lambda: lambda_diag,
            e1: e1_diag,
            e2: e2_diag,
            e3: e3_diag,
        },
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn pair(f: &str, g: &str) -> CurvePair {
        let fp = parse(f, &["x", "y"], FieldSpec::Q).unwrap();
        let gp = parse(g, &["x", "y"], FieldSpec::Q).unwrap();
        CurvePair::new(fp, gp).unwrap()
    }

    fn report(f: &str, g: &str) -> BezoutReport {
        full_report(&pair(f, g), &ReportOpts::default()).unwrap()
    }

    #[test]
    fn lambda_by_direct_colon_computation() {
        // (x, x+y^2): e = 2, c = d = 1, so lambda = 1; t = 1 and ell = 0.
        let p = pair("x", "x+y^2");
        assert_eq!(koszul_h1_length(&p, 5).unwrap(), 1);
        assert_eq!(ell_invariant(&p, 5).unwrap(), 0);
        // Level too small is rejected.
        assert!(koszul_h1_length(&p, 2).is_err());
        assert!(ell_invariant(&p, 3).is_err());
    }

    #[test]
    fn lambda_vanishes_for_transversal_pairs() {
        for n in 4..8 {
            assert_eq!(koszul_h1_length(&pair("x", "y"), n).unwrap(), 0);
        }
    }

    #[test]
    fn ell_values_on_folium_circle() {
        let r = report("x^3+y^3-3*x*y", "x^2+y^2-3*x");
        assert_eq!(r.ell, 2);
        assert_eq!(r.lambda, 3);
        let r = report("x^3+y^3-3*x*y", "x^2+y^2-2*x");
        assert_eq!(r.ell, 0);
        assert_eq!(r.lambda, 1);
    }

    #[test]
    fn full_report_folium_circle_a1() {
        let r = report("x^3+y^3-3*x*y", "x^2+y^2-2*x");
        assert_eq!(
            (r.e, r.c, r.d, r.t, r.ell, r.e1, r.e2, r.e3),
            (3, 2, 1, 1, 0, 1, 0, 0)
        );
        assert!(r.all_verdicts_hold(), "verdicts: {:?}", r.verdicts);
        assert!(r.diagnostics.is_empty());
        assert!(!r.transversal);
        assert!(r.axis_tangent);
    }

    #[test]
    fn full_report_cubic_pairs() {
        let r1 = report("x^3-(x^2-y^2)", "y^3-(y^2-x^2)");
        assert_eq!((r1.e, r1.c, r1.d), (7, 2, 2));
        assert_eq!((r1.e1, r1.e2, r1.e3), (3, 3, 3));
        assert!(r1.all_verdicts_hold());
        let thm72 = r1.verdicts["THM72"];
        assert_eq!((thm72.left, thm72.right), (7, 7));

        let r2 = report("(x+y)^3-4*x*y", "(x-y)^3+4*x*y");
        assert_eq!((r2.e, r2.c, r2.d), (7, 2, 2));
        assert_eq!((r2.e1, r2.e2, r2.e3), (2, 1, 0));
        assert!(r2.all_verdicts_hold());

        // Same intrinsic data, different embeddings.
        assert_eq!(
            (r1.e, r1.c, r1.d, r1.t, r1.ell),
            (r2.e, r2.c, r2.d, r2.t, r2.ell)
        );
        assert_ne!((r1.e1, r1.e2, r1.e3), (r2.e1, r2.e2, r2.e3));
    }

    #[test]
    fn full_report_axes() {
        let r = report("x", "y");
        assert_eq!(
            (r.e, r.c, r.d, r.t, r.ell, r.e1, r.e2, r.e3),
            (1, 1, 1, 0, 0, 0, 0, 0)
        );
        assert!(r.transversal);
        assert!(!r.axis_tangent);
        assert_eq!(r.lambda, 0);
        assert!(r.all_verdicts_hold());
    }

    #[test]
    fn json_has_the_contract_keys() {
        let r = report("x", "y");
        let v = r.to_json();
        let obj = v.as_object().unwrap();
        for key in [
            "field",
            "f",
            "g",
            "e",
            "c",
            "d",
            "t",
            "ell",
            "lambda",
            "e1",
            "e2",
            "e3",
            "transversal",
            "axis_tangent",
            "verdicts",
            "stabilization",
        ] {
            assert!(obj.contains_key(key), "missing key {key}");
        }
        let verdicts = obj["verdicts"].as_object().unwrap();
        for name in VERDICT_NAMES {
            assert_eq!(verdicts[name], serde_json::Value::Bool(true));
        }
        // Numeric fields round-trip through text.
        let text = serde_json::to_string(&v).unwrap();
        let back: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
    }
}
