//! Subgroup intersection.
//!
//! Three exact algorithms share one entry point:
//!
//! * `Enumerate` walks the smaller group and sifts every element into the
//!   other one.
//! * `CosetOrbit` computes the orbit of the coset `Y` under right
//!   multiplication by `X`; its point stabilizer is `X ∩ Y`. Each coset is
//!   keyed by a canonical element found by minimizing base images along
//!   `Y`'s stabilizer chain.
//! * `Backtrack` searches `X`'s chain level by level, pruning every partial
//!   base image that no element of `Y` realizes.
//!
//! `Auto` enumerates when the smaller group is under the threshold and
//! backtracks otherwise. The coset orbit is kept as an independent check.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::orbit::orbit;
use super::{Permutation, StabilizerChain};
use crate::error::PermError;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntersectionStrategy {
    #[default]
    Auto,
    Enumerate,
    CosetOrbit,
    Backtrack,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionOptions {
    /// Groups up to this order are intersected by enumeration under `Auto`.
    pub threshold: u64,
    pub strategy: IntersectionStrategy,
}

impl Default for IntersectionOptions {
    fn default() -> Self {
        Self {
            threshold: 1_000_000,
            strategy: IntersectionStrategy::Auto,
        }
    }
}

fn check_degrees(a: &StabilizerChain, b: &StabilizerChain) -> Result<(), PermError> {
    if a.degree() != b.degree() && !(a.is_trivial() || b.is_trivial()) {
        return Err(PermError::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(())
}

fn resolve(
    a: &StabilizerChain,
    b: &StabilizerChain,
    opts: &IntersectionOptions,
) -> IntersectionStrategy {
    match opts.strategy {
        IntersectionStrategy::Auto => {
            let small = a.order().min(b.order());
            if small <= BigUint::from(opts.threshold) {
                IntersectionStrategy::Enumerate
            } else {
                IntersectionStrategy::Backtrack
            }
        }
        s => s,
    }
}

/// Exact stabilizer chain for `a ∩ b`.
pub fn intersection(
    a: &StabilizerChain,
    b: &StabilizerChain,
    opts: &IntersectionOptions,
) -> Result<StabilizerChain, PermError> {
    intersection_with_known(a, b, None, opts)
}

/// Like [`intersection`], seeded with a subgroup already known to lie in
/// both groups. The hint only speeds things up; the result is exact either way.
pub fn intersection_with_known(
    a: &StabilizerChain,
    b: &StabilizerChain,
    known: Option<&StabilizerChain>,
    opts: &IntersectionOptions,
) -> Result<StabilizerChain, PermError> {
    check_degrees(a, b)?;
    if a.is_trivial() || b.is_trivial() {
        return Ok(StabilizerChain::trivial(a.degree().max(b.degree())));
    }
    match resolve(a, b, opts) {
        IntersectionStrategy::Enumerate => Ok(by_enumeration(a, b, known)),
        IntersectionStrategy::Backtrack => Ok(by_backtrack(a, b, known)),
        _ => {
            let (x, y) = pick_acting(a, b, known);
            let orbit = coset_orbit(x, y);
            Ok(orbit.stabilizer(x, known))
        }
    }
}

/// Order of `a ∩ b`; skips building generators where the algorithm allows.
pub fn intersection_order(
    a: &StabilizerChain,
    b: &StabilizerChain,
    known: Option<&StabilizerChain>,
    opts: &IntersectionOptions,
) -> Result<BigUint, PermError> {
    check_degrees(a, b)?;
    if a.is_trivial() || b.is_trivial() {
        return Ok(BigUint::from(1u32));
    }
    match resolve(a, b, opts) {
        IntersectionStrategy::Enumerate | IntersectionStrategy::Backtrack => {
            Ok(intersection_with_known(a, b, known, opts)?.order())
        }
        _ => {
            let (x, y) = pick_acting(a, b, known);
            let orbit = coset_orbit(x, y);
            Ok(x.order() / BigUint::from(orbit.reps.len()))
        }
    }
}

// Act with the group whose index over the known subgroup is smaller: the
// orbit length is at most that index.
fn pick_acting<'a>(
    a: &'a StabilizerChain,
    b: &'a StabilizerChain,
    known: Option<&StabilizerChain>,
) -> (&'a StabilizerChain, &'a StabilizerChain) {
    let (oa, ob) = (a.order(), b.order());
    let a_smaller = match known {
        Some(k) if !k.order().is_zero() => {
            let ko = k.order();
            &oa / &ko <= &ob / &ko
        }
        _ => oa <= ob,
    };
    if a_smaller {
        (a, b)
    } else {
        (b, a)
    }
}

fn by_enumeration(
    a: &StabilizerChain,
    b: &StabilizerChain,
    known: Option<&StabilizerChain>,
) -> StabilizerChain {
    let (small, other) = if a.order() <= b.order() {
        (a, b)
    } else {
        (b, a)
    };
    let degree = small.degree();
    let mut h = StabilizerChain::trivial(degree);
    if let Some(k) = known {
        for g in k.generators() {
            h.add_generator(g)
                .expect("known subgroup has the same degree");
        }
    }
    let target = small.order();
    small.for_each_element(|g| {
        if other.sift_is_identity(g) && !h.sift_is_identity(g) {
            h.add_generator(g).expect("same degree");
        }
        h.order() != target
    });
    h
}

/// Canonical key of the right coset `Y g`.
///
/// Level by level, the least reachable base image pins down a coset of the
/// next stabilizer, so the greedy walk ends at one element of `Y g` that
/// depends only on the coset. Its image array is the key.
pub(crate) fn coset_key(y: &StabilizerChain, g: &Permutation) -> Vec<u32> {
    let mut cur = g.clone();
    for level in 0..y.depth() {
        let orbit = y.basic_orbit(level);
        let best = *orbit
            .iter()
            .min_by_key(|&&d| cur.image(d))
            .expect("orbit contains the base point");
        if best != orbit[0] {
            cur = y.coset_rep(level, best).unwrap().then(&cur);
        }
    }
    cur.images().map(|x| x as u32).collect()
}

struct CosetOrbit {
    /// `reps[i]` is an element of `X` carrying the coset `Y` to coset `i`.
    reps: Vec<Permutation>,
    /// `edges[i * gens + s]` is the index of coset `i` times generator `s`.
    edges: Vec<usize>,
}

fn coset_orbit(x: &StabilizerChain, y: &StabilizerChain) -> CosetOrbit {
    let gens = x.generators();
    let id = Permutation::identity(x.degree());
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    index.insert(coset_key(y, &id), 0);
    let mut reps = vec![id];
    let mut edges = Vec::new();
    let mut i = 0;
    while i < reps.len() {
        for g in gens {
            let h = reps[i].then(g);
            let key = coset_key(y, &h);
            let next = reps.len();
            let j = *index.entry(key).or_insert(next);
            if j == next {
                reps.push(h);
            }
            edges.push(j);
        }
        i += 1;
    }
    CosetOrbit { reps, edges }
}

impl CosetOrbit {
    /// Point stabilizer via Schreier generators, stopping once the order
    /// reaches `|X| / |orbit|`.
    fn stabilizer(&self, x: &StabilizerChain, known: Option<&StabilizerChain>) -> StabilizerChain {
        let target = x.order() / BigUint::from(self.reps.len());
        let mut h = StabilizerChain::trivial(x.degree());
        if let Some(k) = known {
            for g in k.generators() {
                h.add_generator(g).expect("same degree");
            }
        }
        let gens = x.generators();
        'outer: for (i, rep) in self.reps.iter().enumerate() {
            for (s, g) in gens.iter().enumerate() {
                if h.order() == target {
                    break 'outer;
                }
                let j = self.edges[i * gens.len() + s];
                let schreier = rep.then(g).then(&self.reps[j].inverse());
                if !h.sift_is_identity(&schreier) {
                    h.add_generator(&schreier).expect("same degree");
                }
            }
        }
        h
    }
}

fn by_backtrack(
    a: &StabilizerChain,
    b: &StabilizerChain,
    known: Option<&StabilizerChain>,
) -> StabilizerChain {
    let degree = a.degree();
    let base = a.base();
    let k = base.len();
    let bb = StabilizerChain::with_base(degree, b.generators(), &base).expect("same degree");
    let known_chain = known
        .map(|kc| StabilizerChain::with_base(degree, kc.generators(), &base).expect("same degree"));
    let mut found: Vec<Permutation> = Vec::new();
    // found[i] was discovered at level found_level[i] and fixes base[..level].
    let mut found_level: Vec<usize> = Vec::new();

    for l in (0..k).rev() {
        let mut gens_l: Vec<Permutation> = known_chain
            .as_ref()
            .filter(|kc| l < kc.depth())
            .map(|kc| kc.strong_generators(l).to_vec())
            .unwrap_or_default();
        gens_l.extend(
            found
                .iter()
                .zip(&found_level)
                .filter(|(_, &lvl)| lvl >= l)
                .map(|(g, _)| g.clone()),
        );
        let mut reached = vec![false; degree];
        for p in orbit(&gens_l, degree, base[l]) {
            reached[p] = true;
        }
        let mut candidates: Vec<usize> = a.basic_orbit(l).to_vec();
        candidates.sort_unstable();
        for gamma in candidates {
            if reached[gamma] {
                continue;
            }
            let search = Search { a, b, bb: &bb, k };
            if let Some(g) = search.find(l, gamma) {
                gens_l.push(g.clone());
                found.push(g);
                found_level.push(l);
                reached.iter_mut().for_each(|r| *r = false);
                for p in orbit(&gens_l, degree, base[l]) {
                    reached[p] = true;
                }
            }
        }
    }

    let mut h = StabilizerChain::trivial(degree);
    if let Some(kc) = known {
        for g in kc.generators() {
            h.add_generator(g).expect("same degree");
        }
    }
    for g in &found {
        h.add_generator(g).expect("same degree");
    }
    h
}

struct Search<'a> {
    a: &'a StabilizerChain,
    b: &'a StabilizerChain,
    /// `b` rebuilt with `a`'s base as a prefix.
    bb: &'a StabilizerChain,
    k: usize,
}

impl Search<'_> {
    /// An element of `a ∩ b` fixing the first `l` base points and sending
    /// the `l`-th one to `gamma`.
    fn find(&self, l: usize, gamma: usize) -> Option<Permutation> {
        let b_inv = self.bb.coset_rep_inv(l, gamma)?.clone();
        let p = self.a.coset_rep(l, gamma)?.clone();
        self.descend(l + 1, p, b_inv)
    }

    // `p` is the product u_{j-1} ... u_l chosen so far; `b_inv` undoes the
    // B-transversal choices realizing the same base images.
    fn descend(&self, j: usize, p: Permutation, b_inv: Permutation) -> Option<Permutation> {
        if j == self.k {
            return self.b.sift_is_identity(&p).then_some(p);
        }
        let mut choices: Vec<(usize, usize)> = self
            .a
            .basic_orbit(j)
            .iter()
            .map(|&d| (p.image(d), d))
            .collect();
        choices.sort_unstable();
        for (img, delta) in choices {
            let y = b_inv.image(img);
            let Some(v_inv) = self.bb.coset_rep_inv(j, y) else {
                continue;
            };
            let next_p = self.a.coset_rep(j, delta).unwrap().then(&p);
            let next_inv = b_inv.then(v_inv);
            if let Some(g) = self.descend(j + 1, next_p, next_inv) {
                return Some(g);
            }
        }
        None
    }
}

/// Convenience for tests and reports: order as `u64` when it fits.
pub fn order_u64(chain: &StabilizerChain) -> Option<u64> {
    chain.order().to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn chain(gens: &[Permutation]) -> StabilizerChain {
        StabilizerChain::new(gens).unwrap()
    }

    const ALL: [IntersectionStrategy; 3] = [
        IntersectionStrategy::Enumerate,
        IntersectionStrategy::CosetOrbit,
        IntersectionStrategy::Backtrack,
    ];

    fn with(strategy: IntersectionStrategy) -> IntersectionOptions {
        IntersectionOptions {
            strategy,
            ..Default::default()
        }
    }

    #[test]
    fn klein_four_meets_its_diagonal() {
        let a = chain(&[cyc(4, &[&[1, 2]]), cyc(4, &[&[3, 4]])]);
        let b = chain(&[cyc(4, &[&[1, 2], &[3, 4]])]);
        for s in ALL {
            let c = intersection(&a, &b, &with(s)).unwrap();
            assert_eq!(c.order(), BigUint::from(2u32), "{s:?}");
            assert!(c.contains(&cyc(4, &[&[1, 2], &[3, 4]])).unwrap());
        }
    }

    #[test]
    fn subgroup_intersection_is_the_subgroup() {
        let s5: Vec<_> = (1..5).map(|i| cyc(5, &[&[i, i + 1]])).collect();
        let a = chain(&[cyc(5, &[&[1, 2, 3]]), cyc(5, &[&[1, 2]])]);
        let b = chain(&s5);
        for s in ALL {
            let c = intersection(&a, &b, &with(s)).unwrap();
            assert_eq!(c.order(), a.order(), "{s:?}");
        }
    }

    #[test]
    fn point_stabilizers_meet_in_two_point_stabilizer() {
        let a = chain(&[cyc(6, &[&[2, 3, 4, 5, 6]]), cyc(6, &[&[2, 3]])]);
        let b = chain(&[cyc(6, &[&[1, 2, 3, 4, 5]]), cyc(6, &[&[1, 2]])]);
        for s in ALL {
            let c = intersection(&a, &b, &with(s)).unwrap();
            assert_eq!(c.order(), BigUint::from(24u32), "{s:?}");
            let o = intersection_order(&a, &b, None, &with(s)).unwrap();
            assert_eq!(o, BigUint::from(24u32));
        }
    }

    #[test]
    fn coset_keys_separate_cosets() {
        let y = chain(&[cyc(4, &[&[1, 2]])]);
        let e = Permutation::identity(4);
        let t = cyc(4, &[&[1, 2]]);
        let z = cyc(4, &[&[1, 3]]);
        assert_eq!(coset_key(&y, &e), coset_key(&y, &t));
        assert_ne!(coset_key(&y, &e), coset_key(&y, &z));
        // Y z = Y (t z)
        assert_eq!(coset_key(&y, &z), coset_key(&y, &t.then(&z)));
    }
}
