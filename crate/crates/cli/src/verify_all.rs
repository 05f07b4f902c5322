//! The `verify-all` sweep: every registry family over its parameter range,
//! the sixteen generating-function sides, the classification sweep, and
//! the shuffle cross-checks, fanned out over a worker pool.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::Args;
use rayon::prelude::*;
use serde_json::json;

use qshuffle_core::checks::{self, CheckReport};
use qshuffle_core::relations::{self, Arity, VerificationReport};
use qshuffle_core::series;

use crate::CliError;

pub const DEFAULT_SERIES_ORDER: usize = 8;
/// Series coefficients hold words of length 2k + 2; past this order the
/// packed word representation would overflow.
pub const MAX_SERIES_ORDER: usize = 24;
/// Registry sweeps build words of length ~4n + 9; this cap keeps every
/// family within the packed word representation.
pub const MAX_BOUND: usize = 12;
const MAX_CLASSIFY_LEN: usize = 14;

#[derive(Args)]
pub struct VerifyAllArgs {
    /// Sweep bound for one-parameter families (default: 4 for the letter
    /// commutator suite, 3 for the convolution suites).
    #[arg(long, value_name = "N")]
    bound_1p: Option<usize>,
    /// Sweep bound i + j for two-parameter families (default: 6 for the
    /// alternating-word relations, 4 for the doubly alternating ones).
    #[arg(long, value_name = "N")]
    bound_2p: Option<usize>,
    /// Truncation order for the generating-function identities.
    #[arg(long, default_value_t = DEFAULT_SERIES_ORDER)]
    series_order: usize,
    /// Maximum word length for the classification-vs-oracle sweep.
    #[arg(long, default_value_t = 10)]
    classify_max_len: usize,
    /// Number of random pairs for the shuffle-vs-oracle check.
    #[arg(long, default_value_t = 1000)]
    shuffle_random: usize,
    /// Skip the classification and shuffle sweeps (registry only).
    #[arg(long)]
    skip_checks: bool,
}

fn family_bound(args: &VerifyAllArgs, arity: Arity, section: &str) -> usize {
    match arity {
        Arity::None => 0,
        Arity::One => args.bound_1p.unwrap_or(if section == "4" { 4 } else { 3 }),
        Arity::Two => args.bound_2p.unwrap_or(if section == "A" { 6 } else { 4 }),
        Arity::SeriesOrder => args.series_order,
    }
}

struct FamilySummary {
    instances: usize,
    failures: usize,
    millis: u128,
    failing: Vec<String>,
}

pub fn run(args: &VerifyAllArgs, json_out: bool, jobs: Option<usize>) -> Result<ExitCode, CliError> {
    if let Some(b) = args.bound_1p.or(args.bound_2p) {
        if b > MAX_BOUND {
            return Err(CliError(format!("--bound-1p/--bound-2p are capped at {MAX_BOUND}")));
        }
    }
    if args.series_order > MAX_SERIES_ORDER {
        return Err(CliError(format!("--series-order is capped at {MAX_SERIES_ORDER}")));
    }
    if args.classify_max_len > MAX_CLASSIFY_LEN {
        return Err(CliError(format!("--classify-max-len is capped at {MAX_CLASSIFY_LEN}")));
    }

    let start = Instant::now();
    let body = || run_sweeps(args);
    let (reports, check_reports) = match jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| CliError(format!("worker pool: {e}")))?
            .install(body),
        None => body(),
    };
    let elapsed = start.elapsed();

    // Deterministic output: sorted by family id, then parameters.
    let mut summaries: BTreeMap<String, FamilySummary> = BTreeMap::new();
    for report in &reports {
        let entry = summaries.entry(report.id.clone()).or_insert(FamilySummary {
            instances: 0,
            failures: 0,
            millis: 0,
            failing: Vec::new(),
        });
        entry.instances += 1;
        entry.millis += report.millis;
        if !report.pass {
            entry.failures += 1;
            entry.failing.push(format!("{report}"));
        }
    }

    let total_instances: usize = summaries.values().map(|s| s.instances).sum();
    let total_failures: usize =
        summaries.values().map(|s| s.failures).sum::<usize>()
            + check_reports.iter().map(|c| c.failures).sum::<usize>();
    let all_pass = total_failures == 0;

    if json_out {
        let families: Vec<_> = summaries
            .iter()
            .map(|(id, s)| {
                json!({
                    "id": id,
                    "instances": s.instances,
                    "failures": s.failures,
                    "millis": s.millis,
                })
            })
            .collect();
        let checks_json: Vec<_> = check_reports.iter().map(CheckReport::to_json).collect();
        println!(
            "{}",
            json!({
                "verdict": if all_pass { "pass" } else { "fail" },
                "families": families,
                "checks": checks_json,
                "instances": total_instances,
                "failures": total_failures,
                "millis": elapsed.as_millis(),
            })
        );
    } else {
        for (id, summary) in &summaries {
            println!(
                "{:<5} {id:<16} instances={:<4} {} ms",
                if summary.failures == 0 { "pass" } else { "FAIL" },
                summary.instances,
                summary.millis
            );
            for line in &summary.failing {
                println!("      {line}");
            }
        }
        for check in &check_reports {
            println!(
                "{:<5} {:<34} instances={:<6} {} ms",
                if check.pass() { "pass" } else { "FAIL" },
                check.id,
                check.instances,
                check.millis
            );
            if !check.pass() {
                println!("      {}", check.detail);
            }
        }
        println!(
            "{}: {} families, {} checks, {} instances, {} failures, {} ms",
            if all_pass { "PASS" } else { "FAIL" },
            summaries.len(),
            check_reports.len(),
            total_instances,
            total_failures,
            elapsed.as_millis()
        );
    }

    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run_sweeps(args: &VerifyAllArgs) -> (Vec<VerificationReport>, Vec<CheckReport>) {
    // Every (family, parameter tuple) instance, exact and series alike.
    let mut tasks: Vec<(&'static str, Vec<usize>)> = Vec::new();
    for fam in relations::catalog() {
        let bound = family_bound(args, fam.arity, fam.source.section);
        for params in fam.param_tuples(bound) {
            tasks.push((fam.id, params));
        }
    }
    for fam in series::catalog() {
        tasks.push((fam.id, vec![args.series_order]));
    }

    let reports: Vec<VerificationReport> = tasks
        .par_iter()
        .map(|(id, params)| relations::verify(id, params).expect("catalog ids verify"))
        .collect();

    let check_reports: Vec<CheckReport> = if args.skip_checks {
        Vec::new()
    } else {
        let classify_len = args.classify_max_len;
        let random_count = args.shuffle_random;
        let sweeps: Vec<Box<dyn Fn() -> CheckReport + Send + Sync>> = vec![
            Box::new(move || checks::classify_oracle_agreement(classify_len)),
            Box::new(|| checks::shuffle_oracle_exhaustive(10)),
            Box::new(move || checks::shuffle_oracle_random(random_count, 16, 0x5eed)),
            Box::new(|| checks::shuffle_associativity(200, 4, 0xa550c)),
            Box::new(|| checks::shuffle_q1_binomial(200, 16, 0xb1704)),
        ];
        sweeps.par_iter().map(|sweep| sweep()).collect()
    };

    (reports, check_reports)
}
