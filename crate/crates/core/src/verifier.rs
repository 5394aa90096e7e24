//! End-to-end certification of a generating set.
//!
//! The intersection property is checked on contiguous index intervals
//! only: an sggi is a string C-group as soon as its two maximal parabolic
//! subgroups `G_0` and `G_{r-1}` are string C-groups and meet in exactly
//! `G_{0,r-1}`. Applying this recursively visits each interval once.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::constructions::{self, ExpectedGroup, ExpectedType, FamilyId, FamilyTag};
use crate::cpr::{check_sggi, graph_to_generators, validate_sggi_graph, CprGraph, Sggi};
use crate::error::ConstructionError;
use crate::perm::{
    giant_certificate, identify_chain, intersection_order, is_primitive, is_transitive,
    GiantCertificate, GroupKind, IntersectionOptions, Permutation, StabilizerChain,
};

/// Orders of consecutive products `rho_{i-1} rho_i`.
pub fn schlafli_type(s: &Sggi) -> ExpectedType {
    ExpectedType(
        s.generators()
            .windows(2)
            .map(|w| w[0].then(&w[1]).order())
            .collect(),
    )
}

/// Reverses the generator order.
pub fn dual(s: &Sggi) -> Sggi {
    let mut gens = s.generators().to_vec();
    gens.reverse();
    Sggi::new(s.degree(), gens).expect("reversal keeps the string conditions")
}

/// Why a generating set fails the C-group test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    NotSggi {
        reason: String,
    },
    TrivialGenerator {
        index: usize,
    },
    EqualGenerators {
        i: usize,
        j: usize,
    },
    /// `<rho_k : k in left> ∩ <rho_k : k in right>` is larger than the
    /// subgroup generated by the common indices.
    Intersection {
        left: Vec<usize>,
        right: Vec<usize>,
        intersection_order: String,
        expected_order: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CGroupOutcome {
    pub is_c_group: bool,
    pub witness: Option<Witness>,
}

impl CGroupOutcome {
    fn pass() -> Self {
        Self {
            is_c_group: true,
            witness: None,
        }
    }

    fn fail(w: Witness) -> Self {
        Self {
            is_c_group: false,
            witness: Some(w),
        }
    }
}

/// Interval recursion state. Chains and verdicts are cached per interval
/// when `memoize` is set.
struct IntervalCheck<'a> {
    gens: &'a [Permutation],
    degree: usize,
    opts: &'a IntersectionOptions,
    memoize: bool,
    chains: HashMap<(usize, usize), StabilizerChain>,
    verdicts: HashMap<(usize, usize), CGroupOutcome>,
}

impl<'a> IntervalCheck<'a> {
    /// Chain of `<rho_i, ..., rho_j>`; `j < i` is the trivial group.
    fn chain(&mut self, i: usize, j: usize) -> StabilizerChain {
        if j < i {
            return StabilizerChain::trivial(self.degree);
        }
        if let Some(c) = self.chains.get(&(i, j)) {
            return c.clone();
        }
        let mut c = if self.memoize && j > i {
            self.chain(i, j - 1)
        } else {
            StabilizerChain::trivial(self.degree)
        };
        let start = if self.memoize && j > i { j } else { i };
        for g in &self.gens[start..=j] {
            c.add_generator(g).expect("common degree");
        }
        if self.memoize {
            self.chains.insert((i, j), c.clone());
        }
        c
    }

    fn certify(&mut self, i: usize, j: usize) -> CGroupOutcome {
        if let Some(v) = self.verdicts.get(&(i, j)) {
            return v.clone();
        }
        let out = self.certify_uncached(i, j);
        if self.memoize {
            self.verdicts.insert((i, j), out.clone());
        }
        out
    }

    fn certify_uncached(&mut self, i: usize, j: usize) -> CGroupOutcome {
        if i == j {
            return if self.gens[i].is_identity() {
                CGroupOutcome::fail(Witness::TrivialGenerator { index: i })
            } else {
                CGroupOutcome::pass()
            };
        }
        if j == i + 1 {
            return if self.gens[i] == self.gens[j] {
                CGroupOutcome::fail(Witness::EqualGenerators { i, j })
            } else {
                CGroupOutcome::pass()
            };
        }
        for (a, b) in [(i, j - 1), (i + 1, j)] {
            let sub = self.certify(a, b);
            if !sub.is_c_group {
                return sub;
            }
        }
        let left = self.chain(i, j - 1);
        let right = self.chain(i + 1, j);
        let middle = self.chain(i + 1, j - 1);
        let meet =
            intersection_order(&left, &right, Some(&middle), self.opts).expect("common degree");
        let expected = middle.order();
        if meet == expected {
            CGroupOutcome::pass()
        } else {
            CGroupOutcome::fail(Witness::Intersection {
                left: (i..j).collect(),
                right: (i + 1..=j).collect(),
                intersection_order: meet.to_string(),
                expected_order: expected.to_string(),
            })
        }
    }
}

/// Decides whether an sggi is a string C-group, with a witness on failure.
pub fn is_string_c_group(gens: &[Permutation], opts: &IntersectionOptions) -> CGroupOutcome {
    c_group_check(gens, opts, true)
}

/// Same test without caching intervals; used to cross-check the cached run.
pub fn is_string_c_group_uncached(
    gens: &[Permutation],
    opts: &IntersectionOptions,
) -> CGroupOutcome {
    c_group_check(gens, opts, false)
}

fn c_group_check(gens: &[Permutation], opts: &IntersectionOptions, memoize: bool) -> CGroupOutcome {
    if let Err(e) = check_sggi(gens) {
        return CGroupOutcome::fail(Witness::NotSggi {
            reason: e.to_string(),
        });
    }
    if gens.is_empty() {
        return CGroupOutcome::pass();
    }
    let mut check = IntervalCheck {
        gens,
        degree: gens[0].degree(),
        opts,
        memoize,
        chains: HashMap::new(),
        verdicts: HashMap::new(),
    };
    check.certify(0, gens.len() - 1)
}

/// The intersection property over every pair of index subsets. Exponential
/// in the rank; meant for cross-checking small ranks.
pub fn intersection_property_exhaustive(
    gens: &[Permutation],
    opts: &IntersectionOptions,
) -> CGroupOutcome {
    if let Err(e) = check_sggi(gens) {
        return CGroupOutcome::fail(Witness::NotSggi {
            reason: e.to_string(),
        });
    }
    let r = gens.len();
    let degree = gens.first().map_or(0, Permutation::degree);
    let subsets: Vec<u32> = (0..1u32 << r).collect();
    let chains: Vec<StabilizerChain> = subsets
        .iter()
        .map(|&m| {
            let sub: Vec<Permutation> = (0..r)
                .filter(|k| m >> k & 1 == 1)
                .map(|k| gens[k].clone())
                .collect();
            let mut c = StabilizerChain::trivial(degree);
            for g in &sub {
                c.add_generator(g).expect("common degree");
            }
            c
        })
        .collect();
    let indices = |m: u32| (0..r).filter(|k| m >> k & 1 == 1).collect::<Vec<_>>();
    for &a in &subsets {
        for &b in &subsets {
            if b <= a {
                continue;
            }
            let meet = intersection_order(&chains[a as usize], &chains[b as usize], None, opts)
                .expect("common degree");
            let expected = chains[(a & b) as usize].order();
            if meet != expected {
                return CGroupOutcome::fail(Witness::Intersection {
                    left: indices(a),
                    right: indices(b),
                    intersection_order: meet.to_string(),
                    expected_order: expected.to_string(),
                });
            }
        }
    }
    CGroupOutcome::pass()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOptions {
    /// Look for a giant certificate before the exact order computation.
    pub fast_id: bool,
    /// Use the alternative rank-5 layout when n ≡ 3 (mod 4).
    pub alt_rank5: bool,
    /// Record per-phase timings in the report.
    pub timings: bool,
    pub intersection: IntersectionOptions,
    pub seed: u64,
    pub word_bound: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self::from_config(&Config::default())
    }
}

impl VerifyOptions {
    pub fn from_config(config: &Config) -> Self {
        Self {
            fast_id: false,
            alt_rank5: false,
            timings: true,
            intersection: IntersectionOptions {
                threshold: config.intersection_threshold,
                ..Default::default()
            },
            seed: config.seed,
            word_bound: config.word_bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub graph_valid: bool,
    pub sggi: bool,
    pub intersection_property: bool,
    pub expected_group_matched: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub kind: GroupKind,
    /// Exact order in decimal.
    pub order: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<GiantCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchlafliReport {
    pub expected: Option<ExpectedType>,
    pub actual: ExpectedType,
    pub matched: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub rank: usize,
    pub family: FamilyTag,
    pub checks: Checks,
    pub group: GroupReport,
    pub schlafli: SchlafliReport,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub timings_ms: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn group_order(&self) -> BigUint {
        self.group.order.parse().expect("decimal order")
    }
}

struct Timer {
    enabled: bool,
    last: Instant,
    phases: BTreeMap<String, f64>,
}

impl Timer {
    fn new(enabled: bool) -> Self {
        Self {
            enabled,
            last: Instant::now(),
            phases: BTreeMap::new(),
        }
    }

    fn lap(&mut self, phase: &str) {
        let now = Instant::now();
        if self.enabled {
            let ms = (now - self.last).as_secs_f64() * 1000.0;
            self.phases
                .insert(phase.to_string(), (ms * 1000.0).round() / 1000.0);
        }
        self.last = now;
    }
}

/// Builds the dispatcher's graph for `A_n` at rank `r` and certifies it.
pub fn verify(
    n: usize,
    r: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport, ConstructionError> {
    let family = constructions::select_family(n, r, opts.alt_rank5)?;
    Ok(verify_family(family, opts))
}

/// Certifies the graph of any family against that family's expectations.
pub fn verify_family(family: FamilyId, opts: &VerifyOptions) -> VerificationReport {
    let graph = family.graph();
    verify_graph(
        &graph,
        family.tag,
        family.expected_type(),
        &family.expected_group(),
        opts,
    )
}

/// Certifies a graph against an expected group and, optionally, type.
pub fn verify_graph(
    graph: &CprGraph,
    family: FamilyTag,
    expected_type: Option<ExpectedType>,
    expected_group: &ExpectedGroup,
    opts: &VerifyOptions,
) -> VerificationReport {
    let mut timer = Timer::new(opts.timings);
    let n = graph.n();
    let graph_valid = validate_sggi_graph(graph);
    let sggi = graph_to_generators(graph);
    timer.lap("graph");

    let mut report = VerificationReport {
        n,
        rank: graph.rank(),
        family,
        checks: Checks {
            graph_valid: graph_valid.is_ok(),
            sggi: sggi.is_ok(),
            intersection_property: false,
            expected_group_matched: false,
        },
        group: GroupReport {
            kind: GroupKind::Other,
            order: "0".into(),
            certificate: None,
        },
        schlafli: SchlafliReport {
            expected: expected_type.clone(),
            actual: ExpectedType(Vec::new()),
            matched: false,
        },
        timings_ms: BTreeMap::new(),
        witness: None,
        passed: false,
    };
    let s = match sggi {
        Ok(s) => s,
        Err(e) => {
            report.witness = Some(Witness::NotSggi {
                reason: match graph_valid {
                    Err(v) => format!("{v:?}"),
                    Ok(()) => e.to_string(),
                },
            });
            report.timings_ms = timer.phases;
            return report;
        }
    };
    let gens = s.generators();

    // Cheap refutations first: the exact order below decides a pass.
    if opts.fast_id && expected_group.kind != GroupKind::Other {
        let parity_ok = match expected_group.kind {
            GroupKind::Alternating => gens.iter().all(Permutation::is_even),
            _ => gens.iter().any(|g| !g.is_even()),
        };
        let transitive = is_transitive(gens, n);
        if !parity_ok || !transitive {
            report.witness = Some(Witness::NotSggi {
                reason: format!(
                    "generators cannot give {:?}: transitive={transitive}, parity matches={parity_ok}",
                    expected_group.kind
                ),
            });
            report.timings_ms = timer.phases;
            return report;
        }
        if n >= 8 && is_primitive(gens, n).unwrap_or(false) {
            report.group.certificate = giant_certificate(gens, opts.seed, opts.word_bound);
        }
        timer.lap("certificate");
    }

    let chain = StabilizerChain::new(gens).expect("common degree");
    let identity = identify_chain(&chain);
    report.group.kind = identity.kind;
    report.group.order = identity.order.to_string();
    report.checks.expected_group_matched =
        identity.kind == expected_group.kind && identity.order == expected_group.order;
    timer.lap("identify");

    let c = is_string_c_group(gens, &opts.intersection);
    report.checks.intersection_property = c.is_c_group;
    report.witness = c.witness;
    timer.lap("intersection");

    let actual = schlafli_type(&s);
    report.schlafli.matched = expected_type.as_ref().is_none_or(|e| *e == actual);
    report.schlafli.actual = actual;

    let ch = &report.checks;
    report.passed = ch.graph_valid
        && ch.sggi
        && ch.intersection_property
        && ch.expected_group_matched
        && report.schlafli.matched;
    report.timings_ms = timer.phases;
    report
}
