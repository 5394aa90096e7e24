//! Exhaustive search for rank-3 string C-group representations of small
//! alternating groups.
//!
//! Conjugating by `S_n` maps solutions to solutions, so only one `rho_0`
//! per conjugacy class of involutions is tried and its count is weighted
//! by the class size. The reported count is the number of ordered triples.

use anyhow::{bail, Result};
use serde::{Deserialize, Serialize};

use altrank_core::perm::{
    factorial, is_transitive, IntersectionOptions, Permutation, StabilizerChain,
};
use altrank_core::verifier::{intersection_property_exhaustive, is_string_c_group};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank3Enumeration {
    pub n: usize,
    /// Ordered triples `(rho_0, rho_1, rho_2)` generating `A_n` as a string C-group.
    pub count: u64,
    pub nonempty: bool,
    /// Solutions whose `rho_0` is the canonical representative
    /// `(1,2)(3,4)...` of its class, in cycle notation.
    pub canonical: Vec<[String; 3]>,
}

/// All involutions on `n` points made of exactly `pairs` transpositions.
fn involutions_with(n: usize, pairs: usize) -> Vec<Permutation> {
    fn extend(
        n: usize,
        left: usize,
        used: &mut Vec<bool>,
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<Permutation>,
    ) {
        if left == 0 {
            out.push(Permutation::from_transpositions(n, acc).expect("disjoint"));
            return;
        }
        let start = acc.last().map_or(1, |&(a, _)| a + 1);
        for a in start..=n {
            if used[a] {
                continue;
            }
            used[a] = true;
            for b in a + 1..=n {
                if used[b] {
                    continue;
                }
                used[b] = true;
                acc.push((a, b));
                extend(n, left - 1, used, acc, out);
                acc.pop();
                used[b] = false;
            }
            used[a] = false;
        }
    }
    let mut out = Vec::new();
    extend(n, pairs, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
    out
}

pub fn cmd_enumerate_rank3(n: usize) -> Result<Rank3Enumeration> {
    if !(5..=8).contains(&n) {
        bail!("enumerate-rank3 is capped at 5 <= n <= 8, got {n}");
    }
    let even_pair_counts: Vec<usize> = (1..=n / 2).filter(|k| k % 2 == 0).collect();
    let involutions: Vec<Permutation> = even_pair_counts
        .iter()
        .flat_map(|&k| involutions_with(n, k))
        .collect();
    let target = factorial(n) / 2u32;
    let opts = IntersectionOptions::default();

    let mut count: u64 = 0;
    let mut canonical = Vec::new();
    for &k in &even_pair_counts {
        let pairs: Vec<(usize, usize)> = (0..k).map(|t| (2 * t + 1, 2 * t + 2)).collect();
        let rho0 = Permutation::from_transpositions(n, &pairs)?;
        // |class| = n! / ((n - 2k)! 2^k k!)
        let class_size = factorial(n) / (factorial(n - 2 * k) * factorial(k) * (1u64 << k));
        let class_size: u64 = class_size.try_into().expect("small class");
        let commuting: Vec<&Permutation> = involutions
            .iter()
            .filter(|g| g.commutes_with(&rho0) && **g != rho0)
            .collect();
        let mut found = 0u64;
        for rho1 in involutions.iter().filter(|g| **g != rho0) {
            for &rho2 in commuting.iter().filter(|g| **g != rho1) {
                let gens = [rho0.clone(), rho1.clone(), rho2.clone()];
                if !is_transitive(&gens, n) {
                    continue;
                }
                if StabilizerChain::new(&gens)?.order() != target {
                    continue;
                }
                let c = is_string_c_group(&gens, &opts);
                debug_assert_eq!(
                    c.is_c_group,
                    intersection_property_exhaustive(&gens, &opts).is_c_group
                );
                if c.is_c_group {
                    found += 1;
                    canonical.push(gens.map(|g| g.to_string()));
                }
            }
        }
        count += found * class_size;
    }
    Ok(Rank3Enumeration {
        n,
        count,
        nonempty: count > 0,
        canonical,
    })
}
