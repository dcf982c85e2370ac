//! Graph-invariant behavior on actual endomorphism graphs.

use endograph::analytics::{
    clique_and_chromatic, maximal_cliques, planarity, single_point_basis, verify_verdict,
    Certificate, KuratowskiKind,
};
use endograph::graph::{digraph_isomorphic, endo_digraph, symmetrise};
use endograph::group::{build_group, direct_product};
use endograph::numtheory::factorize;
use endograph::FiniteGroup;

fn group(spec: &str) -> FiniteGroup {
    build_group(&spec.parse().unwrap()).unwrap()
}

fn eg(spec: &str) -> endograph::graph::SimpleGraph {
    symmetrise(&endo_digraph(&group(spec)).unwrap())
}

#[test]
fn clique_equals_chromatic_on_endomorphism_graphs() {
    // comparability graphs of preorders are perfect, so the two invariants
    // agree; the search computes both independently
    for spec in [
        "cyclic:12",
        "cyclic:30",
        "symmetric:4",
        "dihedral:6",
        "quaternion",
        "metacyclic:7,3",
        "alternating:4",
        "dicyclic:3",
        "heisenberg:3",
        "abelian:2,4",
    ] {
        let g = eg(spec);
        let cc = clique_and_chromatic(&g).unwrap();
        assert_eq!(cc.clique_number, cc.chromatic_number, "{spec}");
    }
}

#[test]
fn z12_maximal_cliques_are_the_divisor_chains() {
    let g = eg("cyclic:12");
    let cliques = maximal_cliques(&g).unwrap();
    assert_eq!(
        cliques,
        vec![
            vec![0, 1, 2, 4, 5, 7, 8, 10, 11],
            vec![0, 1, 2, 5, 6, 7, 10, 11],
            vec![0, 1, 3, 5, 6, 7, 9, 11],
        ]
    );
}

#[test]
fn endomorphism_graph_planarity_verdicts() {
    for (spec, planar) in [
        ("cyclic:2", true),
        ("cyclic:3", true),
        ("cyclic:4", true),
        ("abelian:2,2", true),
        ("cyclic:5", false),
        ("abelian:2,4", false), // K8
        ("symmetric:4", false),
    ] {
        let g = eg(spec);
        let verdict = planarity(&g);
        assert_eq!(verdict.planar, planar, "{spec}");
        verify_verdict(&g, &verdict).unwrap();
        if !planar {
            match verdict.certificate {
                Certificate::Witness { kind, .. } => assert_eq!(kind, KuratowskiKind::K5, "{spec}"),
                _ => panic!("{spec}: non-planar verdict needs a witness"),
            }
        }
    }
}

#[test]
fn point_basis_examples() {
    let d = endo_digraph(&group("cyclic:6")).unwrap();
    assert_eq!(single_point_basis(&d).unwrap(), Some(1));
    let d = endo_digraph(&group("quaternion")).unwrap();
    let basis = single_point_basis(&d).unwrap().expect("Q8 has one");
    assert_eq!(group("quaternion").element_order(basis), 4);
    let d = endo_digraph(&group("symmetric:3")).unwrap();
    assert_eq!(single_point_basis(&d).unwrap(), None);
}

#[test]
fn cyclic_groups_match_their_prime_power_product() {
    // the digraph of Z_n is isomorphic to the digraph of the product of its
    // prime-power parts
    for n in 2..=60usize {
        let factors = factorize(n as u64);
        if factors.len() < 2 {
            continue;
        }
        let mut product = group(&format!("cyclic:{}", factors[0].0.pow(factors[0].1)));
        for &(p, e) in &factors[1..] {
            let next = group(&format!("cyclic:{}", p.pow(e)));
            product = direct_product(&product, &next).unwrap();
        }
        let a = endo_digraph(&group(&format!("cyclic:{n}"))).unwrap();
        let b = endo_digraph(&product).unwrap();
        assert!(
            digraph_isomorphic(&a, &b).unwrap().is_some(),
            "n = {n} vs its prime-power product"
        );
    }
}

#[test]
fn planarity_verdicts_are_certified_on_random_graphs() {
    // both certificate kinds are checked by independent validators inside
    // planarity(), so this is a correctness stress across densities
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut planar_seen = 0;
    let mut nonplanar_seen = 0;
    for round in 0..300 {
        let n = rng.gen_range(1..=12);
        let density = rng.gen_range(0.05..0.9);
        let mut g = endograph::graph::SimpleGraph::with_indices(n);
        for x in 0..n {
            for y in x + 1..n {
                if rng.gen_bool(density) {
                    g.add_edge(x, y);
                }
            }
        }
        let verdict = planarity(&g);
        verify_verdict(&g, &verdict).unwrap_or_else(|e| panic!("round {round}: {e}"));
        if verdict.planar {
            planar_seen += 1;
        } else {
            nonplanar_seen += 1;
        }
    }
    assert!(planar_seen > 50 && nonplanar_seen > 50, "seed must exercise both outcomes");
}

#[test]
fn oversized_non_preorder_isomorphism_is_rejected() {
    use endograph::graph::Digraph;
    let mut a = Digraph::with_indices(65);
    let mut b = Digraph::with_indices(65);
    for i in 0..65 {
        a.add_arc(i, (i + 1) % 65);
        b.add_arc(i, (i + 1) % 65);
    }
    assert!(matches!(
        digraph_isomorphic(&a, &b),
        Err(endograph::Error::SizeLimit { .. })
    ));
}
