//! Tangent-cone data of a validated curve pair: initial degrees, initial
//! forms, the common-tangent count t, and the transversality and
//! axis-tangency predicates.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::{binary_form_gcd, share_nonconstant_factor, MultiPoly};

/// Two plane curves through the origin with no common component.
#[derive(Clone, Debug)]
pub struct CurvePair {
    f: MultiPoly,
    g: MultiPoly,
}

impl CurvePair {
    pub fn new(f: MultiPoly, g: MultiPoly) -> Result<Self> {
        if f.vars() != g.vars() || f.field() != g.field() {
            return Err(Error::RingMismatch);
        }
        if f.vars().len() != 2 {
            return Err(Error::WrongArity {
                expected: 2,
                got: f.vars().len(),
            });
        }
        if f.is_zero() {
            return Err(Error::ZeroPolynomial { op: "curve pair" });
        }
        if g.is_zero() {
            return Err(Error::ZeroPolynomial { op: "curve pair" });
        }
        if !f.constant_term().is_zero() {
            return Err(Error::OriginNotOnCurve { which: "f" });
        }
        if !g.constant_term().is_zero() {
            return Err(Error::OriginNotOnCurve { which: "g" });
        }
        if share_nonconstant_factor(&f, &g)? {
            return Err(Error::CommonComponent);
        }
        Ok(CurvePair { f, g })
    }

    pub fn f(&self) -> &MultiPoly {
        &self.f
    }

    pub fn g(&self) -> &MultiPoly {
        &self.g
    }

    pub fn vars(&self) -> &[String] {
        self.f.vars()
    }

    pub fn field(&self) -> FieldSpec {
        self.f.field()
    }
}

/// Initial degrees, initial forms, their gcd h, and t = deg h.
#[derive(Clone, Debug)]
pub struct TangentData {
    pub c: u32,
    pub d: u32,
    pub f_star: MultiPoly,
    pub g_star: MultiPoly,
    pub h: MultiPoly,
    pub t: u32,
}

pub fn tangent_data(pair: &CurvePair) -> Result<TangentData> {
    let c = pair.f.ord()?;
    let d = pair.g.ord()?;
    let f_star = pair.f.initial_form()?;
    let g_star = pair.g.initial_form()?;
    let h = binary_form_gcd(&f_star, &g_star)?;
    let t = h.total_degree().expect("gcd of nonzero forms is nonzero");
    Ok(TangentData {
        c,
        d,
        f_star,
        g_star,
        h,
        t,
    })
}

/// True when the initial forms share no tangent direction (t = 0).
pub fn is_transversal(pair: &CurvePair) -> Result<bool> {
    Ok(tangent_data(pair)?.t == 0)
}

/// True when a coordinate axis is a common tangent, i.e. one of the two
/// variables divides the gcd of the initial forms.
pub fn axis_is_common_tangent(pair: &CurvePair) -> Result<bool> {
    let h = tangent_data(pair)?.h;
    Ok(variable_divides(&h, 0) || variable_divides(&h, 1))
}

fn variable_divides(p: &MultiPoly, var: usize) -> bool {
    !p.is_zero() && p.terms().all(|(m, _)| m.0[var] > 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn q(s: &str) -> MultiPoly {
        parse(s, &["x", "y"], FieldSpec::Q).unwrap()
    }

    fn pair(f: &str, g: &str) -> CurvePair {
        CurvePair::new(q(f), q(g)).unwrap()
    }

    #[test]
    fn validation_rejects_bad_pairs() {
        assert!(matches!(
            CurvePair::new(q("x"), q("x")),
            Err(Error::CommonComponent)
        ));
        assert!(matches!(
            CurvePair::new(q("x+1"), q("y")),
            Err(Error::OriginNotOnCurve { which: "f" })
        ));
        assert!(matches!(
            CurvePair::new(q("x"), q("y+3")),
            Err(Error::OriginNotOnCurve { which: "g" })
        ));
        assert!(CurvePair::new(q("0"), q("y")).is_err());
        let other = parse("x", &["x", "z"], FieldSpec::Q).unwrap();
        assert!(matches!(
            CurvePair::new(q("x"), other),
            Err(Error::RingMismatch)
        ));
    }

    #[test]
    fn folium_circle_tangent_data() {
        // a = 1: the circle is smooth with vertical tangent; one common
        // tangent direction with the folium's node.
        let td = tangent_data(&pair("x^3+y^3-3*x*y", "x^2+y^2-2*x")).unwrap();
        assert_eq!((td.c, td.d, td.t), (2, 1, 1));
        assert_eq!(td.h, q("x"));

        // a = 0: the degenerate circle's cone x^2+y^2 shares nothing with xy.
        let td = tangent_data(&pair("x^3+y^3-3*x*y", "x^2+y^2")).unwrap();
        assert_eq!((td.c, td.d, td.t), (2, 2, 0));
        assert_eq!(td.f_star, q("-3*x*y"));
        assert_eq!(td.g_star, q("x^2+y^2"));

        // a = 3/2.
        let td = tangent_data(&pair("x^3+y^3-3*x*y", "x^2+y^2-3*x")).unwrap();
        assert_eq!((td.c, td.d, td.t), (2, 1, 1));
    }

    #[test]
    fn cubic_pairs_tangent_data() {
        let td = tangent_data(&pair("x^3-(x^2-y^2)", "y^3-(y^2-x^2)")).unwrap();
        assert_eq!((td.c, td.d, td.t), (2, 2, 2));
        assert_eq!(td.h, q("x^2-y^2"));

        let td = tangent_data(&pair("(x+y)^3-4*x*y", "(x-y)^3+4*x*y")).unwrap();
        assert_eq!((td.c, td.d, td.t), (2, 2, 2));
        assert_eq!(td.f_star, q("-4*x*y"));
        assert_eq!(td.g_star, q("4*x*y"));
        assert_eq!(td.h, q("x*y"));
    }

    #[test]
    fn transversality() {
        assert!(is_transversal(&pair("x", "y")).unwrap());
        assert!(is_transversal(&pair("x^3+y^3-3*x*y", "x^2+y^2")).unwrap());
        assert!(!is_transversal(&pair("x^3-(x^2-y^2)", "y^3-(y^2-x^2)")).unwrap());
    }

    #[test]
    fn axis_tangency() {
        // h = x: the y-axis (x = 0) is the shared tangent.
        assert!(axis_is_common_tangent(&pair("x^3+y^3-3*x*y", "x^2+y^2-3*x")).unwrap());
        // h = xy: both axes divide.
        assert!(axis_is_common_tangent(&pair("(x+y)^3-4*x*y", "(x-y)^3+4*x*y")).unwrap());
        // h = x^2-y^2: neither axis divides.
        assert!(!axis_is_common_tangent(&pair("x^3-(x^2-y^2)", "y^3-(y^2-x^2)")).unwrap());
        // Transversal pairs have h = 1.
        assert!(!axis_is_common_tangent(&pair("x", "y")).unwrap());
    }

    #[test]
    fn tangent_count_is_linear_change_invariant() {
        let one = FieldSpec::Q.one();
        let minus = one.neg();
        let f = q("x^3-(x^2-y^2)");
        let g = q("y^3-(y^2-x^2)");
        let before = tangent_data(&CurvePair::new(f.clone(), g.clone()).unwrap()).unwrap();
        let after = tangent_data(
            &CurvePair::new(
                f.linear_change(&one, &one, &one, &minus).unwrap(),
                g.linear_change(&one, &one, &one, &minus).unwrap(),
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(before.t, after.t);
        assert_eq!((before.c, before.d), (after.c, after.d));
    }
}
