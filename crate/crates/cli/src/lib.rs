//! Command implementations behind the `altrank` binary.
//!
//! Each command returns plain data; `main.rs` handles argument parsing,
//! printing and exit codes.

pub mod rank3;

use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use altrank_core::constructions::{self, catalog, rank_reduce, CatalogEntry, FamilyId, FamilyTag};
use altrank_core::cpr::graph_to_generators;
use altrank_core::error::ConstructionError;
use altrank_core::perm::{identify_chain, GroupKind, StabilizerChain};
use altrank_core::verifier::{self, schlafli_type, VerificationReport, VerifyOptions};

pub use rank3::{cmd_enumerate_rank3, Rank3Enumeration};

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAIL: i32 = 1;
    pub const USAGE: i32 = 2;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

/// Serialized graph for the dispatcher's choice at `(n, r)`.
pub fn cmd_generate(n: usize, r: usize, format: GraphFormat, alt_rank5: bool) -> Result<String> {
    let (graph, ..) = constructions::build(n, r, alt_rank5)?;
    Ok(match format {
        GraphFormat::Dot => graph.to_dot(),
        GraphFormat::Json => {
            let mut s = graph.to_json();
            s.push('\n');
            s
        }
    })
}

pub fn cmd_verify(n: usize, r: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    Ok(verifier::verify(n, r, opts)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub n: usize,
    pub r: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub covered: Vec<usize>,
    pub failed: Vec<usize>,
    pub skipped: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub n_min: usize,
    pub n_max: usize,
    /// Ranks not attempted for any degree, with the reason.
    pub excluded_ranks: BTreeMap<usize, String>,
    pub entries: Vec<VerificationReport>,
    pub summary: BTreeMap<usize, DegreeSummary>,
    pub skipped: Vec<Skipped>,
    pub passed: bool,
}

/// Verifies every `(n, r)` with `n_min <= n <= n_max` and
/// `4 <= r <= floor((n-1)/2)`. `jobs = 0` uses one worker per core.
pub fn cmd_sweep(
    n_min: usize,
    n_max: usize,
    jobs: usize,
    opts: &VerifyOptions,
) -> Result<SweepResult> {
    if n_min < 12 || n_min > n_max {
        bail!("sweep needs 12 <= n_min <= n_max, got {n_min}..{n_max}");
    }
    let pairs: Vec<(usize, usize)> = (n_min..=n_max)
        .flat_map(|n| (4..=(n - 1) / 2).map(move |r| (n, r)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .context("building worker pool")?;
    let outcomes: Vec<Result<VerificationReport, ConstructionError>> = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(n, r)| verifier::verify(n, r, opts))
            .collect()
    });

    let mut result = SweepResult {
        n_min,
        n_max,
        excluded_ranks: BTreeMap::from([(
            3,
            "rank 3 is covered by existing classifications and not constructed".to_string(),
        )]),
        entries: Vec::new(),
        summary: BTreeMap::new(),
        skipped: Vec::new(),
        passed: true,
    };
    for n in n_min..=n_max {
        result.summary.insert(
            n,
            DegreeSummary {
                covered: Vec::new(),
                failed: Vec::new(),
                skipped: Vec::new(),
            },
        );
    }
    for (&(n, r), outcome) in pairs.iter().zip(outcomes) {
        let summary = result.summary.get_mut(&n).expect("degree in range");
        match outcome {
            Ok(report) => {
                if report.passed {
                    summary.covered.push(r);
                } else {
                    summary.failed.push(r);
                    result.passed = false;
                }
                result.entries.push(report);
            }
            Err(e) => {
                summary.skipped.push(r);
                result.skipped.push(Skipped {
                    n,
                    r,
                    reason: e.to_string(),
                });
            }
        }
    }
    Ok(result)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduceStep {
    pub rank: usize,
    pub schlafli: Vec<u64>,
    pub group: GroupKind,
    pub order: String,
}

/// Repeatedly lowers the rank of the simplex generators of `S_n` down to
/// rank 3, recording the type and group after every step.
pub fn cmd_reduce(n: usize) -> Result<Vec<ReduceStep>> {
    if n < 5 {
        bail!("reduction starts from the simplex on n >= 5 points, got {n}");
    }
    let family = FamilyId::new(FamilyTag::Simplex, n, n - 1)?;
    let mut s = graph_to_generators(&family.graph())?;
    let mut trace = Vec::new();
    loop {
        let id = identify_chain(&StabilizerChain::new(s.generators())?);
        trace.push(ReduceStep {
            rank: s.rank(),
            schlafli: schlafli_type(&s).0,
            group: id.kind,
            order: id.order.to_string(),
        });
        if s.rank() <= 3 {
            break;
        }
        s = rank_reduce(&s)?;
    }
    Ok(trace)
}

/// Family listing with admissible instances for `n` in `n_min..=n_max`.
pub fn cmd_catalog(n_min: usize, n_max: usize) -> Vec<CatalogEntry> {
    catalog(n_min..=n_max)
}
