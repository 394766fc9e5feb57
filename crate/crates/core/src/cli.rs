//! Command-line frontend: single-pair reports, corpus runs with golden
//! expectations, and the seeded random identity suite.
//!
//! Exit codes: 0 all checks pass, 1 input error, 2 verdict or golden-value
//! failure (including engine disagreement), 3 resource exhaustion.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::bezout::{full_report, BezoutReport, ReportOpts, VERDICT_NAMES};
use crate::corpus::{builtin_corpus, parse_corpus, CorpusEntry, PairGenerator};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::parse::parse;
use crate::tangentcone::CurvePair;

#[derive(Parser, Debug)]
#[command(
    name = "local-bezout",
    about = "Local intersection invariants of plane curve pairs at the origin",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the full invariant report for one curve pair.
    Report {
        /// Defining equation of the first curve, in x and y.
        f: String,
        /// Defining equation of the second curve, in x and y.
        g: String,
        /// Coefficient field: `q` or `fp:<prime>`.
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Cap for every stabilization schedule.
        #[arg(long = "max-n", default_value_t = 64)]
        max_n: u32,
    },
    /// Run every pair of a corpus file (or the builtin corpus `paper`) and
    /// compare against the expected values recorded there.
    Corpus {
        /// Path to a corpus file, or `paper` for the builtin table.
        path: String,
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long = "max-n", default_value_t = 64)]
        max_n: u32,
    },
    /// Generate seeded random pairs and assert every identity on each.
    Random {
        /// Number of pairs to test.
        count: u64,
        /// Maximum total degree of the generated curves.
        max_degree: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long = "max-n", default_value_t = 64)]
        max_n: u32,
    },
}

/// Map an error to the exit-code contract.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::ResourceExhausted { .. } | Error::StabilizationFailed { .. } => 3,
        Error::EngineDisagreement { .. } => 2,
        _ => 1,
    }
}

fn report_for(f_text: &str, g_text: &str, field: FieldSpec, max_n: u32) -> Result<BezoutReport> {
    let f = parse(f_text, &["x", "y"], field)?;
    let g = parse(g_text, &["x", "y"], field)?;
    let pair = CurvePair::new(f, g)?;
    full_report(&pair, &ReportOpts { max_n })
}

fn render_report_text(r: &BezoutReport, out: &mut String) {
    let _ = writeln!(out, "pair over {}: f = {}, g = {}", r.field, r.f, r.g);
    let _ = writeln!(
        out,
        "e = {}  c = {}  d = {}  t = {}  ell = {}  lambda = {}",
        r.e, r.c, r.d, r.t, r.ell, r.lambda
    );
    let _ = writeln!(
        out,
        "charts: e1 = {}  e2 = {}  e3 = {}",
        r.e1, r.e2, r.e3
    );
    let _ = writeln!(
        out,
        "transversal: {}  axis tangent: {}  base ring multiplicity: {}",
        r.transversal, r.axis_tangent, r.base_ring_multiplicity
    );
    let _ = writeln!(out, "verdicts:");
    for name in VERDICT_NAMES {
        let v = &r.verdicts[name];
        let _ = writeln!(
            out,
            "  {:<7} {}  ({} vs {})",
            name,
            if v.holds { "ok" } else { "FAIL" },
            v.left,
            v.right
        );
    }
    let _ = writeln!(
        out,
        "stabilized at: e N={} ell n={} lambda n={} e1 N={} e2 N={} e3 N={}",
        r.stabilization.e.n_stop,
        r.stabilization.ell.n_stop,
        r.stabilization.lambda.n_stop,
        r.stabilization.e1.n_stop,
        r.stabilization.e2.n_stop,
        r.stabilization.e3.n_stop
    );
    for d in &r.diagnostics {
        let _ = writeln!(out, "diagnostic: {d}");
    }
}

fn csv_header(with_name: bool) -> String {
    let mut cols = Vec::new();
    if with_name {
        cols.push("name");
    }
    cols.extend([
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
    ]);
    cols.extend(VERDICT_NAMES);
    cols.join(",")
}

fn csv_row(r: &BezoutReport, name: Option<&str>) -> String {
    let mut cols: Vec<String> = Vec::new();
    if let Some(n) = name {
        cols.push(n.to_string());
    }
    cols.extend([
        r.field.to_string(),
        r.f.clone(),
        r.g.clone(),
        r.e.to_string(),
        r.c.to_string(),
        r.d.to_string(),
        r.t.to_string(),
        r.ell.to_string(),
        r.lambda.to_string(),
        r.e1.to_string(),
        r.e2.to_string(),
        r.e3.to_string(),
        r.transversal.to_string(),
        r.axis_tangent.to_string(),
    ]);
    for v in VERDICT_NAMES {
        cols.push(r.verdicts[v].holds.to_string());
    }
    cols.join(",")
}

/// Run the parsed command; returns (stdout text, exit code).
pub fn run(cli: &Cli) -> (String, i32) {
    match &cli.command {
        Command::Report {
            f,
            g,
            field,
            format,
            max_n,
        } => cmd_report(f, g, field, *format, *max_n),
        Command::Corpus {
            path,
            field,
            format,
            max_n,
        } => cmd_corpus(path, field, *format, *max_n),
        Command::Random {
            count,
            max_degree,
            seed,
            field,
            max_n,
        } => cmd_random(*count, *max_degree, *seed, field, *max_n),
    }
}

pub fn cmd_report(
    f_text: &str,
    g_text: &str,
    field: &str,
    format: Format,
    max_n: u32,
) -> (String, i32) {
    let mut out = String::new();
    let field = match FieldSpec::parse(field) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            return (out, 1);
        }
    };
    match report_for(f_text, g_text, field, max_n) {
        Ok(report) => {
            match format {
                Format::Text => render_report_text(&report, &mut out),
                Format::Json => {
                    let _ = writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&report.to_json()).expect("serializes")
                    );
                }
                Format::Csv => {
                    let _ = writeln!(out, "{}", csv_header(false));
                    let _ = writeln!(out, "{}", csv_row(&report, None));
                }
            }
            let code = if report.all_verdicts_hold() { 0 } else { 2 };
            (out, code)
        }
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            (out, exit_code_for(&e))
        }
    }
}

pub fn cmd_corpus(path: &str, field: &str, format: Format, max_n: u32) -> (String, i32) {
    let mut out = String::new();
    let field = match FieldSpec::parse(field) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            return (out, 1);
        }
    };
    let entries: Vec<CorpusEntry> = if path == "paper" {
        builtin_corpus()
    } else {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                let _ = writeln!(out, "error: cannot read corpus `{path}`: {e}");
                return (out, 1);
            }
        };
        match parse_corpus(&text) {
            Ok(es) => es,
            Err(e) => {
                let _ = writeln!(out, "error: {e}");
                return (out, 1);
            }
        }
    };
    if entries.is_empty() {
        let _ = writeln!(out, "error: corpus is empty");
        return (out, 1);
    }

    let results: Vec<Result<BezoutReport>> = entries
        .par_iter()
        .map(|e| report_for(&e.f_text, &e.g_text, field, max_n))
        .collect();

    let mut code = 0i32;
    match format {
        Format::Text => {
            let _ = writeln!(
                out,
                "{:<20} {:>3} {:>3} {:>3} {:>3} {:>4} {:>3} {:>3} {:>3}  verdicts  expected",
                "name", "e", "c", "d", "t", "ell", "e1", "e2", "e3"
            );
            for (entry, res) in entries.iter().zip(&results) {
                match res {
                    Ok(r) => {
                        let mismatches = entry.mismatches(r);
                        let verdicts_ok = r.all_verdicts_hold();
                        if !verdicts_ok || !mismatches.is_empty() {
                            code = code.max(2);
                        }
                        let _ = writeln!(
                            out,
                            "{:<20} {:>3} {:>3} {:>3} {:>3} {:>4} {:>3} {:>3} {:>3}  {:<8}  {}",
                            entry.name,
                            r.e,
                            r.c,
                            r.d,
                            r.t,
                            r.ell,
                            r.e1,
                            r.e2,
                            r.e3,
                            if verdicts_ok { "ok" } else { "FAIL" },
                            if mismatches.is_empty() {
                                "ok".to_string()
                            } else {
                                format!("MISMATCH ({})", mismatches.join("; "))
                            }
                        );
                    }
                    Err(e) => {
                        code = code.max(exit_code_for(e));
                        let _ = writeln!(out, "{:<20} error: {e}", entry.name);
                    }
                }
            }
        }
        Format::Json => {
            let mut rows = Vec::new();
            for (entry, res) in entries.iter().zip(&results) {
                let row = match res {
                    Ok(r) => {
                        let mismatches = entry.mismatches(r);
                        if !r.all_verdicts_hold() || !mismatches.is_empty() {
                            code = code.max(2);
                        }
                        serde_json::json!({
                            "name": entry.name,
                            "status": if mismatches.is_empty() && r.all_verdicts_hold() { "ok" } else { "fail" },
                            "mismatches": mismatches,
                            "report": r.to_json(),
                        })
                    }
                    Err(e) => {
                        code = code.max(exit_code_for(e));
                        serde_json::json!({
                            "name": entry.name,
                            "status": "error",
                            "error": e.to_string(),
                        })
                    }
                };
                rows.push(row);
            }
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&serde_json::Value::Array(rows)).expect("serializes")
            );
        }
        Format::Csv => {
            let _ = writeln!(out, "{}", csv_header(true));
            for (entry, res) in entries.iter().zip(&results) {
                match res {
                    Ok(r) => {
                        let mismatches = entry.mismatches(r);
                        if !r.all_verdicts_hold() || !mismatches.is_empty() {
                            code = code.max(2);
                        }
                        let _ = writeln!(out, "{}", csv_row(r, Some(&entry.name)));
                    }
                    Err(e) => {
                        code = code.max(exit_code_for(e));
                        let _ = writeln!(out, "{},error: {e}", entry.name);
                    }
                }
            }
        }
    }
    (out, code)
}

pub fn cmd_random(count: u64, max_degree: u32, seed: u64, field: &str, max_n: u32) -> (String, i32) {
    let mut out = String::new();
    if count == 0 {
        let _ = writeln!(out, "error: count must be at least 1");
        return (out, 1);
    }
    if max_degree == 0 {
        let _ = writeln!(out, "error: max degree must be at least 1");
        return (out, 1);
    }
    let field = match FieldSpec::parse(field) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            return (out, 1);
        }
    };
    // Generation is sequential from the seed; evaluation is parallel with
    // results reassembled in order.
    let mut generator = PairGenerator::new(seed, max_degree, field);
    let mut pairs = Vec::with_capacity(count as usize);
    for _ in 0..count {
        match generator.next_pair() {
            Ok(p) => pairs.push(p),
            Err(e) => {
                let _ = writeln!(out, "error: {e}");
                return (out, exit_code_for(&e));
            }
        }
    }
    let results: Vec<Result<BezoutReport>> = pairs
        .par_iter()
        .map(|(f, g)| {
            let pair = CurvePair::new(f.clone(), g.clone())?;
            full_report(&pair, &ReportOpts { max_n })
        })
        .collect();

    let mut pass = 0u64;
    let mut code = 0i32;
    for ((f, g), res) in pairs.iter().zip(&results) {
        match res {
            Ok(r) if r.all_verdicts_hold() && r.diagnostics.is_empty() => pass += 1,
            Ok(r) => {
                code = code.max(2);
                let failed: Vec<&str> = VERDICT_NAMES
                    .iter()
                    .filter(|n| !r.verdicts[**n].holds)
                    .copied()
                    .collect();
                let _ = writeln!(
                    out,
                    "FAIL [{}]: rerun with: local-bezout report \"{f}\" \"{g}\"",
                    if failed.is_empty() {
                        r.diagnostics.join("; ")
                    } else {
                        failed.join(",")
                    }
                );
            }
            Err(e) => {
                code = code.max(exit_code_for(e));
                let _ = writeln!(
                    out,
                    "ERROR ({e}): rerun with: local-bezout report \"{f}\" \"{g}\""
                );
            }
        }
    }
    let _ = writeln!(
        out,
        "random suite: seed {seed}, max degree {max_degree}, field {field}: {pass}/{count} pass"
    );
    (out, code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_exit_codes() {
        let (out, code) = cmd_report("x", "x", "q", Format::Text, 64);
        assert_eq!(code, 1);
        assert!(out.contains("share a component"));

        let (out, code) = cmd_report("x+1", "y", "q", Format::Text, 64);
        assert_eq!(code, 1);
        assert!(out.contains("does not pass through the origin"));

        let (out, code) = cmd_report("x^", "y", "q", Format::Text, 64);
        assert_eq!(code, 1);
        assert!(out.contains("error"));

        let (_, code) = cmd_report("x", "y", "bad-field", Format::Text, 64);
        assert_eq!(code, 1);
    }

    #[test]
    fn report_json_contains_expected_values() {
        let (out, code) = cmd_report(
            "x^3+y^3-3*x*y",
            "x^2+y^2-3*x",
            "q",
            Format::Json,
            64,
        );
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["e"], 5);
        assert_eq!(v["t"], 1);
        assert_eq!(v["ell"], 2);
        assert_eq!(v["e1"], 3);
        assert_eq!(v["e2"], 0);
        assert_eq!(v["e3"], 0);
        for name in VERDICT_NAMES {
            assert_eq!(v["verdicts"][name], true);
        }
    }

    #[test]
    fn corpus_golden_pass_and_failure_paths() {
        let (out, code) = cmd_corpus("paper", "q", Format::Text, 64);
        assert_eq!(code, 0, "builtin corpus must pass:\n{out}");
        assert_eq!(out.lines().count(), 7); // header + 6 rows

        let dir = std::env::temp_dir().join("lbz-corpus-test");
        std::fs::create_dir_all(&dir).unwrap();
        let okfile = dir.join("ok.corpus");
        std::fs::write(&okfile, "axes | x | y | e=1\n").unwrap();
        let (_, code) = cmd_corpus(okfile.to_str().unwrap(), "q", Format::Text, 64);
        assert_eq!(code, 0);

        let badfile = dir.join("bad.corpus");
        std::fs::write(&badfile, "axes | x | y | e=99\n").unwrap();
        let (out, code) = cmd_corpus(badfile.to_str().unwrap(), "q", Format::Text, 64);
        assert_eq!(code, 2);
        assert!(out.contains("MISMATCH"));
        assert!(out.contains("expected 99, got 1"));

        let (_, code) = cmd_corpus("/nonexistent/corpus", "q", Format::Text, 64);
        assert_eq!(code, 1);
    }

    #[test]
    fn random_suite_small_runs() {
        let (out, code) = cmd_random(5, 2, 1, "q", 64);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("5/5 pass"));
        // Determinism: same seed, same bytes.
        let (again, _) = cmd_random(5, 2, 1, "q", 64);
        assert_eq!(out, again);

        let (_, code) = cmd_random(0, 2, 1, "q", 64);
        assert_eq!(code, 1);
        let (_, code) = cmd_random(3, 0, 1, "q", 64);
        assert_eq!(code, 1);
    }

    #[test]
    fn degree_one_pairs_are_transversal() {
        let (out, code) = cmd_random(8, 1, 3, "q", 64);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("8/8 pass"));
    }
}
