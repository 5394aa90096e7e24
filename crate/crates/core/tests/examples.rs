use std::collections::BTreeSet;

use num_bigint::BigUint;

use altrank_core::constructions::{build, parabolic, FamilyId, FamilyTag};
use altrank_core::cpr::graph_to_generators;
use altrank_core::perm::{
    compose, factorial, intersection_order, is_primitive, orbits, IntersectionOptions, Permutation,
    StabilizerChain,
};
use altrank_core::verifier::{verify, verify_family, VerifyOptions};

fn family_gens(tag: FamilyTag, n: usize, r: usize) -> Vec<Permutation> {
    let f = FamilyId::new(tag, n, r).unwrap();
    graph_to_generators(&f.graph()).unwrap().into_generators()
}

fn chain(gens: &[Permutation]) -> StabilizerChain {
    StabilizerChain::new(gens).unwrap()
}

#[test]
fn composition_applies_left_factor_first() {
    let p = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
    let q = Permutation::from_cycles(3, &[&[2, 3]]).unwrap();
    // 1 -> 2 -> 3, 2 -> 1 -> 1, 3 -> 3 -> 2
    let expected = Permutation::from_one_based(&[3, 1, 2]).unwrap();
    assert_eq!(compose(&p, &q).unwrap(), expected);
    assert_eq!(compose(&q, &p).unwrap(), expected.inverse());
}

#[test]
fn rank_four_ladder_for_ten_points() {
    let g = family_gens(FamilyTag::F1, 10, 4);
    let product = g[0].then(&g[1]);
    assert!(product.cycle_structure().contains(&5));
    assert!(is_primitive(&g, 10).unwrap());

    let outer = intersection_order(
        &chain(&g[1..]),
        &chain(&g[..3]),
        None,
        &IntersectionOptions::default(),
    )
    .unwrap();
    assert_eq!(outer, BigUint::from(12u32));
    assert_eq!(chain(&g[1..3]).order(), outer);
}

#[test]
fn split_building_block_has_two_orbits() {
    for n in [8, 10, 12] {
        let g = family_gens(FamilyTag::Sym2a, n, 3);
        let sizes: BTreeSet<usize> = orbits(&g, n).iter().map(Vec::len).collect();
        assert_eq!(sizes, BTreeSet::from([(n - 4) / 2, (n + 4) / 2]), "n={n}");
    }
}

#[test]
fn thirteen_points_rank_six() {
    let (graph, family, ty) = build(13, 6, false).unwrap();
    assert_eq!(family.tag, FamilyTag::OneModR);
    assert_eq!(graph.n(), 13);
    let s = graph_to_generators(&graph).unwrap();
    assert_eq!(s.generator(0).cycles().len(), 6);
    assert!(s.generator(0).cycles().iter().all(|c| c.len() == 2));
    assert_eq!(ty.unwrap().0, vec![10, 3, 3, 3, 3]);

    let g = s.generators();
    assert_eq!(chain(g).order(), factorial(13) / 2u32);
    let outer = intersection_order(
        &chain(&g[1..]),
        &chain(&g[..5]),
        None,
        &IntersectionOptions::default(),
    )
    .unwrap();
    let middle = parabolic(&s, &[1, 2, 3, 4]);
    assert_eq!(outer, BigUint::from(120u32));
    assert_eq!(chain(middle.generators()).order(), outer);
}

#[test]
fn fifteen_points_rank_six_type() {
    let (_, _, ty) = build(15, 6, false).unwrap();
    assert_eq!(ty.unwrap().0, vec![5, 6, 3, 5, 3]);
    let report = verify(15, 6, &VerifyOptions::default()).unwrap();
    assert!(report.passed);
}

#[test]
fn small_alternating_layouts() {
    let opts = VerifyOptions::default();
    let rep = verify_family(FamilyId::new(FamilyTag::AltEvenRank, 9, 4).unwrap(), &opts);
    assert!(rep.passed);
    assert_eq!(rep.group.order, "181440");
    assert_eq!(rep.schlafli.actual.0, vec![10, 3, 3]);

    let rep = verify_family(FamilyId::new(FamilyTag::AltOddRank, 13, 5).unwrap(), &opts);
    assert!(rep.passed);
    assert_eq!(rep.schlafli.actual.0, vec![10, 3, 6, 4]);
}

/// The two-row layout with a closing `(r-2)`-edge generates `S_n` at every
/// rank, but at rank 4 the outer parabolics meet in twice the expected
/// subgroup for several `n`. Checked here against a plain enumeration of
/// the smaller parabolic.
#[test]
fn closed_two_row_layout_at_rank_four() {
    for (n, meet) in [(10, 12usize), (12, 24), (14, 24), (16, 24), (18, 12)] {
        let g = family_gens(FamilyTag::Sym2b, n, 4);
        assert_eq!(chain(&g).order(), factorial(n));
        let left = chain(&g[1..]);
        let right = chain(&g[..3]);
        let oracle = left
            .elements()
            .into_iter()
            .filter(|x| right.contains(x).unwrap())
            .count();
        assert_eq!(oracle, meet, "n={n}");
        let computed =
            intersection_order(&left, &right, None, &IntersectionOptions::default()).unwrap();
        assert_eq!(computed, BigUint::from(meet));
        assert_eq!(chain(&g[1..3]).order(), BigUint::from(12u32));
        let report = verify_family(
            FamilyId::new(FamilyTag::Sym2b, n, 4).unwrap(),
            &VerifyOptions::default(),
        );
        assert_eq!(report.passed, meet == 12, "n={n}");
    }
}

#[test]
fn closed_two_row_layout_above_rank_four() {
    for n in [12, 14, 16] {
        for r in 5..=(n - 2) / 2 {
            let f = FamilyId::new(FamilyTag::Sym2b, n, r).unwrap();
            let report = verify_family(f, &VerifyOptions::default());
            assert!(report.passed, "n={n} r={r}");
            assert_eq!(report.group.order, factorial(n).to_string());
        }
    }
}
