//! Command-line front end: argument definitions and command dispatch.

pub mod parse;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::braidword::NormalForm;
use crate::conjugacy::{super_summit_conjugate, Conjugator};
use crate::error::{Error, Result};
use crate::oracle::suites::{run_all, SuiteConfig};
use crate::oracle::{
    brute_sss_epsilon, catalan, check_partial_cycling_closure, normal_form_json, twisted_product_is_delta,
    uss_lower_bound, SSS_LIMIT,
};
use crate::periodic::{power_conjugacy, solve, PeriodicVerdict};

pub use parse::parse_braid;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "pbraid", version, about = "Braid normal forms and periodic conjugacy")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Skip the exact check of returned conjugators.
    #[arg(long, global = true)]
    pub no_verify: bool,
    /// Seed for randomised suites.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the left normal form of a word.
    Nf {
        #[arg(short = 'n')]
        n: usize,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        word: Vec<String>,
    },
    /// Decide whether a braid is periodic and find a conjugator to d^k or epsilon^k.
    Solve {
        #[arg(short = 'n')]
        n: usize,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        word: Vec<String>,
    },
    /// Compute the r-th power of a periodic braid with a conjugator to its summit form.
    PowerConj {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'r')]
        r: i64,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        word: Vec<String>,
    },
    /// Enumerate the super summit set of epsilon^k by exhaustive search.
    SssBrute {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'k')]
        k: i64,
    },
    /// Build the Catalan family of distinct ultra summit elements.
    UssBound {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'u')]
        u: i64,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Run the algebraic property suites and closure checks.
    Props {
        /// Largest strand count exercised.
        #[arg(short = 'n')]
        n: usize,
        /// Random cases per suite.
        #[arg(long, default_value_t = 1000)]
        cases: usize,
    },
}

/// Rendered command output; `ok` is false when a check failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub ok: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, ok: true }
    }
}

fn read_word(n: usize, word: &[String]) -> Result<NormalForm> {
    parse_braid(n, &word.join(" "))?.normalize()
}

fn element_json(n: usize, g: &NormalForm) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA_VERSION));
    m.insert("n".into(), json!(n));
    if let Value::Object(inner) = normal_form_json(g) {
        m.extend(inner);
    }
    m
}

fn conjugator_json(x: &NormalForm) -> Value {
    let mut v = normal_form_json(x);
    v["text"] = json!(x.to_string());
    v
}

fn verified_text(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "skipped",
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    let verify = !cli.no_verify;
    match &cli.command {
        Command::Nf { n, word } => {
            let g = read_word(*n, word)?;
            if cli.json {
                Ok(Report::ok(Value::Object(element_json(*n, &g)).to_string()))
            } else {
                Ok(Report::ok(g.to_string()))
            }
        }
        Command::Solve { n, word } => {
            let alpha = read_word(*n, word)?;
            let verdict = solve(&alpha)?;
            let verified = if verify { Some(verdict.verify(&alpha)?) } else { None };
            let gamma = verdict.conjugator().map(Conjugator::normal_form).transpose()?;
            let (kind, k) = match &verdict {
                PeriodicVerdict::NonPeriodic => ("non-periodic", None),
                PeriodicVerdict::DeltaType { k, .. } => ("delta-type", Some(*k)),
                PeriodicVerdict::EpsilonType { k, .. } => ("epsilon-type", Some(*k)),
            };
            let ok = verified != Some(false);
            if cli.json {
                let mut m = element_json(*n, &alpha);
                m.insert("kind".into(), json!(kind));
                m.insert("k".into(), json!(k));
                m.insert("conjugator".into(), gamma.as_ref().map(conjugator_json).unwrap_or(Value::Null));
                m.insert("verified".into(), json!(verified));
                return Ok(Report { text: Value::Object(m).to_string(), ok });
            }
            let text = match (k, gamma) {
                (Some(k), Some(g)) => format!("{kind} k={k} gamma={g} verified={}", verified_text(verified)),
                _ => kind.to_string(),
            };
            Ok(Report { text, ok })
        }
        Command::PowerConj { n, r, word } => {
            let alpha = read_word(*n, word)?;
            let (summit, y) = super_summit_conjugate(&alpha)?;
            let pc = power_conjugacy(&summit, *r)?;
            // pc.conjugator^-1 . power . pc.conjugator = summit^r = y^-1 alpha^r y
            let x = pc.conjugator.compose(&y.invert()?)?;
            let verified = if verify {
                Some(x.apply(&pc.power)? == alpha.power(*r)?)
            } else {
                None
            };
            let xn = x.normal_form()?;
            let ok = verified != Some(false);
            if cli.json {
                let mut m = element_json(*n, &pc.power);
                m.insert("r".into(), json!(r));
                m.insert("rounds".into(), json!(pc.rounds));
                m.insert("conjugator".into(), conjugator_json(&xn));
                m.insert("verified".into(), json!(verified));
                return Ok(Report { text: Value::Object(m).to_string(), ok });
            }
            Ok(Report {
                text: format!(
                    "power={} conjugator={} rounds={} verified={}",
                    pc.power,
                    xn,
                    pc.rounds,
                    verified_text(verified)
                ),
                ok,
            })
        }
        Command::SssBrute { n, k } => {
            let table = brute_sss_epsilon(*n, *k)?;
            if cli.json {
                let mut v = table.to_json();
                v["schema"] = json!(SCHEMA_VERSION);
                return Ok(Report::ok(v.to_string()));
            }
            let mut lines: Vec<String> = table.elements.iter().map(|g| g.to_string()).collect();
            lines.push(format!("size={}", table.len()));
            Ok(Report::ok(lines.join("\n")))
        }
        Command::UssBound { n, u, k } => {
            let elements = uss_lower_bound(*n, *u, *k)?;
            let bound = catalan(*k);
            if cli.json {
                let v = json!({
                    "schema": SCHEMA_VERSION,
                    "n": n,
                    "u": u,
                    "k": k,
                    "catalan": bound,
                    "distinct": true,
                    "elements": elements.iter().map(normal_form_json).collect::<Vec<_>>(),
                });
                return Ok(Report::ok(v.to_string()));
            }
            let mut lines: Vec<String> = elements.iter().map(|g| g.to_string()).collect();
            lines.push(format!("count={} catalan={bound} distinct=true", elements.len()));
            Ok(Report::ok(lines.join("\n")))
        }
        Command::Props { n, cases } => props(*n, *cases, cli.seed, cli.json),
    }
}

fn props(n: usize, cases: usize, seed: u64, as_json: bool) -> Result<Report> {
    if n < 2 {
        return Err(Error::BadParameters("props needs n >= 2".into()));
    }
    let cfg = SuiteConfig {
        min_n: 2,
        max_n: n,
        cases,
        seed,
    };
    let mut rows = Vec::new();
    for s in run_all(&cfg) {
        rows.push((s.name.to_string(), s.cases, s.failures, s.examples));
    }
    if (3..=SSS_LIMIT).contains(&n) {
        let q = n as i64 - 1;
        for d in (1..q).filter(|d| q % d == 0) {
            let table = brute_sss_epsilon(n, d)?;
            let report = check_partial_cycling_closure(&table)?;
            let examples = report
                .violations
                .iter()
                .take(5)
                .map(|v| format!("{} by {} gives {}", v.element, v.prefix, v.result))
                .collect();
            rows.push((
                format!("closure of epsilon^{d}"),
                report.cyclings,
                report.violations.len(),
                examples,
            ));
            let mut bad = Vec::new();
            for g in &table.elements {
                if !twisted_product_is_delta(g, q / d)? {
                    bad.push(g.to_string());
                }
            }
            rows.push((format!("twisted product of epsilon^{d}"), table.len(), bad.len(), bad));
        }
    }
    let ok = rows.iter().all(|r| r.2 == 0);
    let text = if as_json {
        json!({
            "schema": SCHEMA_VERSION,
            "n": n,
            "seed": seed,
            "suites": rows.iter().map(|(name, cases, failures, examples)| json!({
                "name": name, "cases": cases, "failures": failures, "examples": examples,
            })).collect::<Vec<_>>(),
            "passed": ok,
        })
        .to_string()
    } else {
        let mut lines = Vec::new();
        for (name, cases, failures, examples) in &rows {
            let status = if *failures == 0 { "PASS" } else { "FAIL" };
            lines.push(format!("{status} {name}: {cases} cases, {failures} failures"));
            lines.extend(examples.iter().map(|e| format!("  {e}")));
        }
        lines.join("\n")
    };
    Ok(Report { text, ok })
}
