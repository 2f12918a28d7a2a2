//! Text and JSON rendering of reports.
//!
//! JSON mode prints exactly one document per invocation:
//!
//! ```json
//! { "command": "...", "parameters": {...}, "reports": [...], "engine_version": "..." }
//! ```
//!
//! `sweep` adds a `lemma_reports` array next to `reports`.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use curious_core::verifier::{BenchReport, PointCheckReport, SweepReport};
use curious_core::IdentityReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Serialize)]
pub struct ExpandReport {
    pub target: String,
    pub parameter: u32,
    pub rendered: String,
    pub term_count: usize,
}

#[derive(Debug, Serialize)]
pub struct Envelope<T> {
    pub command: &'static str,
    pub parameters: Value,
    pub reports: Vec<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma_reports: Option<Vec<IdentityReport>>,
    pub engine_version: &'static str,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &'static str, parameters: Value, reports: Vec<T>) -> Self {
        Envelope {
            command,
            parameters,
            reports,
            lemma_reports: None,
            engine_version: curious_core::VERSION,
        }
    }

    pub fn print(&self, no_timing: bool) {
        let mut doc = serde_json::to_value(self).expect("reports serialize");
        if no_timing {
            zero_timings(&mut doc);
        }
        let text = serde_json::to_string_pretty(&doc).expect("value serializes");
        // a closed pipe downstream is not an error worth reporting
        let _ = writeln!(std::io::stdout().lock(), "{text}");
    }
}

fn zero_timings(v: &mut Value) {
    match v {
        Value::Object(map) => {
            for (k, child) in map.iter_mut() {
                if k == "elapsed_micros" {
                    *child = Value::from(0);
                } else {
                    zero_timings(child);
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(zero_timings),
        _ => {}
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "OK"
    } else {
        "FAILED"
    }
}

pub fn print_identity(r: &IdentityReport, no_timing: bool) {
    println!("{} (parameter {})", r.identity_name, r.parameter);
    println!("  lhs:   {}", r.lhs_rendered);
    println!("  rhs:   {}", r.rhs_rendered);
    println!("  diff:  {}", r.difference_rendered);
    print!("  terms: {} / {}", r.term_counts.0, r.term_counts.1);
    if !no_timing {
        print!(", {} us", r.elapsed_micros);
    }
    println!();
    println!("{}", verdict(r.equal));
}

pub fn print_sweep(s: &SweepReport, no_timing: bool) {
    println!("{:>4}  {:>9}  {:>9}  {:>10}  status", "m", "lhs_terms", "rhs_terms", "micros");
    for r in &s.main {
        let micros = if no_timing { 0 } else { r.elapsed_micros };
        println!(
            "{:>4}  {:>9}  {:>9}  {:>10}  {}",
            r.parameter,
            r.term_counts.0,
            r.term_counts.1,
            micros,
            verdict(r.equal)
        );
    }
    let passed = s.lemmas.iter().filter(|r| r.equal).count();
    println!("lemmas: {passed}/{} equal", s.lemmas.len());
    for r in s.lemmas.iter().filter(|r| !r.equal) {
        println!("  {} {}: difference {}", r.identity_name, r.parameter, r.difference_rendered);
    }
    if no_timing {
        println!("sweep: {}", verdict(s.all_equal()));
    } else {
        println!("sweep: {} in {} us", verdict(s.all_equal()), s.elapsed_micros);
    }
}

pub fn print_check(r: &PointCheckReport) {
    println!(
        "{} (parameter {}): {} trials, seed {}, {} failures",
        r.identity_name, r.parameter, r.trials, r.seed, r.failures
    );
    if let Some(p) = &r.first_failure {
        let vals: Vec<String> = p.assignments.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!("  first failure at index {}: {}", p.index, vals.join(", "));
    }
    println!("{}", verdict(r.failures == 0));
}

pub fn print_bench(b: &BenchReport, no_timing: bool) {
    println!("m = {}, {} points, seed {}", b.m, b.points, b.seed);
    println!("{:<10}  {:>10}  {:>10}", "strategy", "ring_ops", "micros");
    for s in &b.strategies {
        let micros = if no_timing { 0 } else { s.elapsed_micros };
        println!("{:<10}  {:>10}  {:>10}", s.name, s.ring_ops, micros);
    }
    println!("agreement: {}/{} points", b.points - b.disagreements, b.points);
    println!("{}", verdict(b.agreed));
}
