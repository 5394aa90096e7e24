//! Recognizing `A_n` and `S_n`.
//!
//! The exact route compares the chain order with `n!/2` and `n!`. The fast
//! route certifies a giant without a chain: a primitive group containing a
//! cycle of prime length `p <= n - 3` contains `A_n`. Such a cycle is found
//! as a power of an element having exactly one cycle whose length is
//! divisible by `p`, with that length equal to `p`.

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::orbit::{is_primitive, is_transitive};
use super::{Permutation, StabilizerChain};
use crate::error::PermError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Alternating,
    Symmetric,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupIdentity {
    pub kind: GroupKind,
    pub degree: usize,
    pub order: BigUint,
}

/// Evidence that a primitive group contains the alternating group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GiantCertificate {
    /// Generator indices; the element is their left-to-right product.
    pub word: Vec<usize>,
    /// Raising the word to this power leaves a single `prime`-cycle.
    pub exponent: u64,
    pub prime: usize,
    /// The resulting cycle, 1-based.
    pub cycle: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentifyOptions {
    /// Try the giant certificate before building a stabilizer chain.
    pub fast: bool,
    pub seed: u64,
    /// Number of words to try for a certificate.
    pub word_bound: usize,
}

impl Default for IdentifyOptions {
    fn default() -> Self {
        Self {
            fast: false,
            seed: 0,
            word_bound: 10_000,
        }
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Classifies an order for a group already known to act on `degree` points.
pub fn kind_from_order(order: &BigUint, degree: usize) -> GroupKind {
    let full = factorial(degree);
    if degree >= 2 && *order == full {
        GroupKind::Symmetric
    } else if degree >= 3 && order * 2u32 == full {
        GroupKind::Alternating
    } else {
        GroupKind::Other
    }
}

/// Exact identification from a stabilizer chain.
pub fn identify_chain(chain: &StabilizerChain) -> GroupIdentity {
    let order = chain.order();
    GroupIdentity {
        kind: kind_from_order(&order, chain.degree()),
        degree: chain.degree(),
        order,
    }
}

/// Identifies the group generated by `gens`. With `opts.fast` the chain is
/// skipped whenever a giant certificate turns up.
pub fn identify(gens: &[Permutation], opts: &IdentifyOptions) -> Result<GroupIdentity, PermError> {
    let degree = gens.first().map_or(0, Permutation::degree);
    if opts.fast
        && degree >= 8
        && is_transitive(gens, degree)
        && is_primitive(gens, degree)?
        && giant_certificate(gens, opts.seed, opts.word_bound).is_some()
    {
        let (kind, order) = if gens.iter().all(Permutation::is_even) {
            (GroupKind::Alternating, factorial(degree) / 2u32)
        } else {
            (GroupKind::Symmetric, factorial(degree))
        };
        return Ok(GroupIdentity {
            kind,
            degree,
            order,
        });
    }
    Ok(identify_chain(&StabilizerChain::new(gens)?))
}

/// Checks whether `g` yields a prime cycle; returns `(exponent, prime)`.
pub fn prime_cycle_power(g: &Permutation) -> Option<(u64, usize)> {
    let n = g.degree();
    let lens: Vec<usize> = g.cycles().iter().map(Vec::len).collect();
    for (k, &p) in lens.iter().enumerate() {
        if !is_prime(p) || p + 3 > n {
            continue;
        }
        let clash = lens.iter().enumerate().any(|(m, &l)| m != k && l % p == 0);
        if clash {
            continue;
        }
        let exponent = lens
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != k)
            .fold(1u64, |acc, (_, &l)| num_integer::lcm(acc, l as u64));
        return Some((exponent, p));
    }
    None
}

/// Searches a deterministic word stream for a giant certificate: single
/// generators, then pairwise products, then seeded random words.
///
/// Primitivity is the caller's responsibility.
pub fn giant_certificate(
    gens: &[Permutation],
    seed: u64,
    word_bound: usize,
) -> Option<GiantCertificate> {
    if gens.is_empty() {
        return None;
    }
    let r = gens.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let singles = (0..r).map(|i| vec![i]);
    let pairs = (0..r).flat_map(move |i| (0..r).filter(move |&j| j != i).map(move |j| vec![i, j]));
    let random = std::iter::repeat_with(move || {
        let len = rng.gen_range(3..=3 * r.max(2));
        (0..len).map(|_| rng.gen_range(0..r)).collect::<Vec<_>>()
    });
    for word in singles.chain(pairs).chain(random).take(word_bound) {
        let g = word
            .iter()
            .skip(1)
            .fold(gens[word[0]].clone(), |acc, &i| acc.then(&gens[i]));
        if let Some((exponent, prime)) = prime_cycle_power(&g) {
            let c = g.pow(exponent);
            let cycle = c.cycles().pop().expect("a prime cycle remains");
            debug_assert_eq!(cycle.len(), prime);
            return Some(GiantCertificate {
                word,
                exponent,
                prime,
                cycle: cycle.into_iter().map(|x| x + 1).collect(),
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(10), BigUint::from(3_628_800u32));
    }

    #[test]
    fn prime_cycle_detection() {
        // 5-cycle with a 2-cycle on 9 points: power 2 isolates the 5-cycle
        let g = cyc(9, &[&[1, 2, 3, 4, 5], &[6, 7]]);
        assert_eq!(prime_cycle_power(&g), Some((2, 5)));
        assert_eq!(g.pow(2).cycle_structure()[0], 5);
        // two 3-cycles clash; the 2-cycle works but 2 + 3 > 6
        assert_eq!(prime_cycle_power(&cyc(6, &[&[1, 2, 3], &[4, 5, 6]])), None);
    }

    #[test]
    fn s9_and_a9_recognized() {
        let n = 9;
        let s9 = vec![cyc(n, &[&[1, 2]]), cyc(n, &[&[1, 2, 3, 4, 5, 6, 7, 8, 9]])];
        let a9 = vec![
            cyc(n, &[&[1, 2, 3]]),
            cyc(n, &[&[1, 2, 3, 4, 5, 6, 7, 8, 9]]),
        ];
        for fast in [false, true] {
            let opts = IdentifyOptions {
                fast,
                ..Default::default()
            };
            assert_eq!(identify(&s9, &opts).unwrap().kind, GroupKind::Symmetric);
            let id = identify(&a9, &opts).unwrap();
            assert_eq!(id.kind, GroupKind::Alternating);
            assert_eq!(id.order, factorial(9) / 2u32);
        }
    }

    #[test]
    fn imprimitive_group_is_other() {
        let g = vec![cyc(8, &[&[1, 2, 3, 4, 5, 6, 7, 8]]), cyc(8, &[&[1, 3]])];
        let opts = IdentifyOptions {
            fast: true,
            ..Default::default()
        };
        let id = identify(&g, &opts).unwrap();
        assert_eq!(id.kind, GroupKind::Other);
    }
}
