//! Curve-pair corpora: the built-in golden table, the line-based corpus
//! file format, and seeded random pair generation for the identity suite.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bezout::BezoutReport;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::{share_nonconstant_factor, Monomial, MultiPoly};

/// One corpus record: a named pair with optional expected invariant values
/// that the computed report must match exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub f_text: String,
    pub g_text: String,
    pub expected: BTreeMap<String, i64>,
}

impl CorpusEntry {
    /// Compare a computed report against the expected assignments; returns
    /// the list of mismatches as `key: expected X, got Y` strings.
    pub fn mismatches(&self, report: &BezoutReport) -> Vec<String> {
        let mut out = Vec::new();
        for (key, want) in &self.expected {
            let got = match key.as_str() {
                "e" => Some(report.e as i64),
                "c" => Some(report.c as i64),
                "d" => Some(report.d as i64),
                "t" => Some(report.t as i64),
                "ell" => Some(report.ell as i64),
                "lambda" => Some(report.lambda as i64),
                "e1" => Some(report.e1 as i64),
                "e2" => Some(report.e2 as i64),
                "e3" => Some(report.e3 as i64),
                "transversal" => Some(report.transversal as i64),
                "axis_tangent" => Some(report.axis_tangent as i64),
                _ => None,
            };
            match got {
                Some(got) if got == *want => {}
                Some(got) => out.push(format!("{key}: expected {want}, got {got}")),
                None => out.push(format!("{key}: unknown expectation key")),
            }
        }
        out
    }
}

/// Parse the corpus text format: one record per line,
/// `name | f | g | k=v,k=v,...`, `#` comments, blank lines skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        if fields.len() < 3 || fields.len() > 4 {
            return Err(Error::InvalidInput(format!(
                "corpus line {}: expected `name | f | g | expectations?`",
                lineno + 1
            )));
        }
        let mut expected = BTreeMap::new();
        if let Some(spec) = fields.get(3) {
            for assign in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let (key, value) = assign.split_once('=').ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "corpus line {}: bad expectation `{assign}`",
                        lineno + 1
                    ))
                })?;
                let value: i64 = value.trim().parse().map_err(|_| {
                    Error::InvalidInput(format!(
                        "corpus line {}: non-integer expectation `{assign}`",
                        lineno + 1
                    ))
                })?;
                expected.insert(key.trim().to_string(), value);
            }
        }
        out.push(CorpusEntry {
            name: fields[0].to_string(),
            f_text: fields[1].to_string(),
            g_text: fields[2].to_string(),
            expected,
        });
    }
    Ok(out)
}

/// The built-in golden corpus: the folium/circle family at its three
/// qualitative parameter values, the two cubic pairs related by a linear
/// change of coordinates, and the transversal axes pair.
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    const TEXT: &str = "\
# name | f | g | expected invariants
folium-circle-a1 | x^3+y^3-3*x*y | x^2+y^2-2*x | e=3,c=2,d=1,t=1,ell=0,lambda=1,e1=1,e2=0,e3=0
folium-circle-a0 | x^3+y^3-3*x*y | x^2+y^2 | e=4,c=2,d=2,t=0,ell=0,lambda=0,e1=0,e2=0,e3=0
folium-circle-a3/2 | x^3+y^3-3*x*y | x^2+y^2-3*x | e=5,c=2,d=1,t=1,ell=2,lambda=3,e1=3,e2=0,e3=0
cubic-pair-1 | x^3-(x^2-y^2) | y^3-(y^2-x^2) | e=7,c=2,d=2,t=2,ell=1,lambda=3,e1=3,e2=3,e3=3
cubic-pair-2 | (x+y)^3-4*x*y | (x-y)^3+4*x*y | e=7,c=2,d=2,t=2,ell=1,lambda=3,e1=2,e2=1,e3=0
axes | x | y | e=1,c=1,d=1,t=0,ell=0,lambda=0,e1=0,e2=0,e3=0
";
    parse_corpus(TEXT).expect("builtin corpus parses")
}

/// Deterministic generator of admissible random curve pairs: no constant
/// terms, both nonzero, and no common factor (rejected by the resultant
/// test and resampled).
pub struct PairGenerator {
    rng: ChaCha8Rng,
    max_degree: u32,
    field: FieldSpec,
}

impl PairGenerator {
    pub fn new(seed: u64, max_degree: u32, field: FieldSpec) -> Self {
        PairGenerator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_degree,
            field,
        }
    }

    fn random_curve(&mut self) -> MultiPoly {
        loop {
            // Forcing a minimum order some of the time keeps singular
            // intersections (the interesting cases) in the sample.
            let min_ord = if self.rng.random_bool(0.5) {
                1
            } else {
                self.rng.random_range(1..=self.max_degree.min(3))
            };
            let mut terms = Vec::new();
            for i in 0..=self.max_degree {
                for j in 0..=self.max_degree - i {
                    let deg = i + j;
                    if deg < min_ord || deg > self.max_degree {
                        continue;
                    }
                    if !self.rng.random_bool(0.4) {
                        continue;
                    }
                    let coeff = match self.field {
                        FieldSpec::Q => {
                            let c: i64 = self.rng.random_range(-9..=9);
                            self.field.from_integer(c)
                        }
                        FieldSpec::Fp(p) => {
                            self.field.from_integer(self.rng.random_range(0..p as i64))
                        }
                    };
                    if coeff.is_zero() {
                        continue;
                    }
                    terms.push((Monomial(vec![i, j]), coeff));
                }
            }
            let p = MultiPoly::from_terms(&["x", "y"], self.field, terms)
                .expect("generated terms are well-formed");
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// Next admissible pair. Pairs sharing a factor are discarded.
    pub fn next_pair(&mut self) -> Result<(MultiPoly, MultiPoly)> {
        const ATTEMPTS: usize = 10_000;
        for _ in 0..ATTEMPTS {
            let f = self.random_curve();
            let g = self.random_curve();
            if !share_nonconstant_factor(&f, &g)? {
                return Ok((f, g));
            }
        }
        Err(Error::ResourceExhausted {
            stage: "random pair generation",
            cap: ATTEMPTS,
        })
    }
}
