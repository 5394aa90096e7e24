use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;

use altrank_core::constructions::{rank_reduce, FamilyId, FamilyTag};
use altrank_core::cpr::{generators_to_graph, graph_to_generators, Sggi};
use altrank_core::perm::{
    giant_certificate, identify, identify_chain, intersection, is_primitive, is_transitive,
    minimal_block_system, GroupKind, IdentifyOptions, IntersectionOptions, IntersectionStrategy,
    Permutation, StabilizerChain,
};
use altrank_core::verifier::{
    dual, intersection_property_exhaustive, is_string_c_group, is_string_c_group_uncached,
    schlafli_type,
};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn gens(n: usize, max: usize) -> impl Strategy<Value = Vec<Permutation>> {
    prop::collection::vec(perm(n), 1..=max)
}

fn degree_and_gens() -> impl Strategy<Value = (usize, Vec<Permutation>)> {
    (2usize..=7).prop_flat_map(|n| (Just(n), gens(n, 3)))
}

fn closure(gens: &[Permutation]) -> HashSet<Permutation> {
    let n = gens[0].degree();
    let mut seen = HashSet::from([Permutation::identity(n)]);
    let mut frontier = vec![Permutation::identity(n)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

/// Involution with `pairs` disjoint transpositions taken from a shuffle.
fn involution(n: usize, shuffled: &[usize], pairs: usize) -> Permutation {
    let t: Vec<(usize, usize)> = (0..pairs)
        .map(|k| (shuffled[2 * k] + 1, shuffled[2 * k + 1] + 1))
        .collect();
    Permutation::from_transpositions(n, &t).unwrap()
}

fn sggi(n: usize, rank: usize) -> impl Strategy<Value = Sggi> {
    let one = (
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        1..=n / 2,
    )
        .prop_map(move |(s, k)| involution(n, &s, k));
    prop::collection::vec(one, rank)
        .prop_filter_map("string commuting", move |g| Sggi::new(n, g).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chain_matches_closure((_, g) in degree_and_gens()) {
        let chain = StabilizerChain::new(&g).unwrap();
        let elems = closure(&g);
        prop_assert_eq!(chain.order(), elems.len().into());
        prop_assert!(chain.verify_invariants(&g));
        for e in &elems {
            prop_assert!(chain.contains(e).unwrap());
        }
        let listed: HashSet<Permutation> = chain.elements().into_iter().collect();
        prop_assert_eq!(listed, elems);
    }

    #[test]
    fn membership_matches_closure(
        (g, x) in (2usize..=7).prop_flat_map(|n| (gens(n, 3), perm(n)))
    ) {
        let chain = StabilizerChain::new(&g).unwrap();
        prop_assert_eq!(chain.contains(&x).unwrap(), closure(&g).contains(&x));
    }

    #[test]
    fn self_intersection_is_whole((_, g) in degree_and_gens()) {
        let chain = StabilizerChain::new(&g).unwrap();
        for strategy in [IntersectionStrategy::CosetOrbit, IntersectionStrategy::Backtrack] {
            let opts = IntersectionOptions { threshold: 0, strategy };
            prop_assert_eq!(intersection(&chain, &chain, &opts).unwrap().order(), chain.order());
        }
    }

    #[test]
    fn alternating_means_even_generators(g in (3usize..=8).prop_flat_map(|n| gens(n, 3))) {
        let id = identify(&g, &IdentifyOptions { fast: true, ..Default::default() }).unwrap();
        if id.kind == GroupKind::Alternating {
            prop_assert!(g.iter().all(Permutation::is_even));
        }
        let exact = identify_chain(&StabilizerChain::new(&g).unwrap());
        prop_assert_eq!(id, exact);
    }

    #[test]
    fn intersection_divides_and_commutes(
        (a, b) in (3usize..=7).prop_flat_map(|n| (gens(n, 2), gens(n, 2)))
    ) {
        let ca = StabilizerChain::new(&a).unwrap();
        let cb = StabilizerChain::new(&b).unwrap();
        for strategy in [
            IntersectionStrategy::Enumerate,
            IntersectionStrategy::CosetOrbit,
            IntersectionStrategy::Backtrack,
        ] {
            let opts = IntersectionOptions { threshold: 0, strategy };
            let ab = intersection(&ca, &cb, &opts).unwrap();
            let ba = intersection(&cb, &ca, &opts).unwrap();
            prop_assert_eq!(ab.order(), ba.order());
            prop_assert_eq!(ca.order() % ab.order(), 0u32.into());
            prop_assert_eq!(cb.order() % ab.order(), 0u32.into());
            let x: BTreeSet<_> = ab.elements().into_iter().collect();
            let y: BTreeSet<_> = ba.elements().into_iter().collect();
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn block_system_is_preserved((n, g) in degree_and_gens()) {
        prop_assume!(is_transitive(&g, n));
        match minimal_block_system(&g, n).unwrap() {
            Some(sys) => {
                prop_assert!(sys.is_preserved_by(&g));
                prop_assert!(sys.block_size() > 1 && sys.block_size() < n);
                prop_assert_eq!(n % sys.block_size(), 0);
                prop_assert!(!is_primitive(&g, n).unwrap());
            }
            None => prop_assert!(is_primitive(&g, n).unwrap()),
        }
    }

    #[test]
    fn certificate_implies_giant(
        g in (8usize..=11).prop_flat_map(|n| gens(n, 2)),
        seed in any::<u64>(),
    ) {
        let n = g[0].degree();
        prop_assume!(is_transitive(&g, n) && is_primitive(&g, n).unwrap());
        if let Some(cert) = giant_certificate(&g, seed, 200) {
            let kind = identify_chain(&StabilizerChain::new(&g).unwrap()).kind;
            prop_assert!(matches!(kind, GroupKind::Alternating | GroupKind::Symmetric));
            prop_assert!(cert.prime + 3 <= n);
            prop_assert_eq!(cert.cycle.len(), cert.prime);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn cached_and_uncached_agree(s in (4usize..=8, 2usize..=4).prop_flat_map(|(n, r)| sggi(n, r))) {
        let opts = IntersectionOptions::default();
        let cached = is_string_c_group(s.generators(), &opts);
        let plain = is_string_c_group_uncached(s.generators(), &opts);
        let full = intersection_property_exhaustive(s.generators(), &opts);
        prop_assert_eq!(cached.is_c_group, plain.is_c_group);
        prop_assert_eq!(cached.is_c_group, full.is_c_group);
        let flipped = is_string_c_group(dual(&s).generators(), &opts);
        prop_assert_eq!(cached.is_c_group, flipped.is_c_group);
        let mut rev = schlafli_type(&dual(&s)).0;
        rev.reverse();
        prop_assert_eq!(rev, schlafli_type(&s).0);
    }

    #[test]
    fn generator_support_is_its_edges(s in (2usize..=12, 1usize..=5).prop_flat_map(|(n, r)| sggi(n, r))) {
        let g = generators_to_graph(&s);
        for (i, rho) in s.generators().iter().enumerate() {
            prop_assert!(rho.is_involution());
            let ends: BTreeSet<usize> = g.edges_with_label(i).flat_map(|(u, v)| [u - 1, v - 1]).collect();
            let support: BTreeSet<usize> = rho.support().into_iter().collect();
            prop_assert_eq!(ends, support);
        }
        prop_assert_eq!(graph_to_generators(&g).unwrap(), s);
    }
}

#[test]
fn simplex_reduction_stays_symmetric() {
    for n in 5..=9 {
        let f = FamilyId::new(FamilyTag::Simplex, n, n - 1).unwrap();
        let mut s = graph_to_generators(&f.graph()).unwrap();
        for _ in 0..n - 4 {
            s = rank_reduce(&s).unwrap();
            let id = identify_chain(&StabilizerChain::new(s.generators()).unwrap());
            assert_eq!(id.kind, GroupKind::Symmetric, "n={n} rank={}", s.rank());
        }
        assert_eq!(s.rank(), 3);
    }
}
