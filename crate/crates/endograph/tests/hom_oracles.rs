//! Differential oracles for the enumeration engine.
//!
//! The reference enumerator below walks all self-maps by assigning images in
//! element-index order, pruning a prefix as soon as any fully-assigned
//! product pair violates f(xy) = f(x)f(y). It shares no code or search
//! structure with the generator-image engine under test.

use endograph::group::{build_group, direct_product};
use endograph::hom::{
    abelian_p_arrow, automorphism_orbits, endo_reachability, endo_reachability_via_enumeration,
    endomorphism_classes, enumerate_automorphisms, enumerate_endomorphisms, homocyclic_arrow,
    kernel_and_image, orbits_via_basis, orbits_via_enumeration, reachability_via_basis,
    verify_homomorphism, EnumLimits,
};
use endograph::FiniteGroup;

fn group(spec: &str) -> FiniteGroup {
    build_group(&spec.parse().unwrap()).unwrap()
}

/// All endomorphism image arrays by prefix-pruned exhaustive search over
/// self-maps with f(identity) = identity (forced for any homomorphism).
fn brute_force_endomorphisms(g: &FiniteGroup) -> Vec<Vec<u16>> {
    let n = g.order();
    let mut f = vec![0u16; n];
    let mut out = Vec::new();
    fn extend(g: &FiniteGroup, f: &mut Vec<u16>, k: usize, out: &mut Vec<Vec<u16>>) {
        let n = g.order();
        if k == n {
            out.push(f.clone());
            return;
        }
        'image: for w in 0..n {
            f[k] = w as u16;
            // check every pair that became fully assigned with f[k]
            for i in 0..=k {
                for j in 0..=k {
                    let p = g.mul(i, j);
                    if p <= k
                        && (i == k || j == k || p == k)
                        && f[p] as usize != g.mul(f[i] as usize, f[j] as usize)
                    {
                        continue 'image;
                    }
                }
            }
            extend(g, f, k + 1, out);
        }
        f[k] = 0;
    }
    extend(g, &mut f, 1, &mut out);
    out.sort_unstable();
    out
}

#[test]
fn differential_oracle_every_group_up_to_order_10() {
    let specs = [
        "cyclic:1",
        "cyclic:2",
        "cyclic:3",
        "cyclic:4",
        "abelian:2,2",
        "cyclic:5",
        "cyclic:6",
        "symmetric:3",
        "cyclic:7",
        "cyclic:8",
        "abelian:2,4",
        "abelian:2,2,2",
        "dihedral:4",
        "quaternion",
        "cyclic:9",
        "abelian:3,3",
        "cyclic:10",
        "dihedral:5",
    ];
    for spec in specs {
        let g = group(spec);
        assert!(g.order() <= 10, "{spec}");
        let expected = brute_force_endomorphisms(&g);
        let got: Vec<Vec<u16>> = enumerate_endomorphisms(&g)
            .unwrap()
            .into_iter()
            .map(|m| m.images().to_vec())
            .collect();
        assert_eq!(got, expected, "endomorphism sets differ for {spec}");
    }
}

#[test]
fn differential_oracle_selected_larger_groups() {
    // the prefix pruning makes the reference search cheap well past order
    // 10; these cover the families whose figures the suite checks
    for spec in [
        "dicyclic:3",
        "alternating:4",
        "dihedral:6",
        "abelian:2,2,3",
        "dicyclic:4",
        "abelian:4,4",
        "dicyclic:6",
        "symmetric:4",
    ] {
        let g = group(spec);
        let expected = brute_force_endomorphisms(&g);
        let got: Vec<Vec<u16>> = enumerate_endomorphisms(&g)
            .unwrap()
            .into_iter()
            .map(|m| m.images().to_vec())
            .collect();
        assert_eq!(got, expected, "endomorphism sets differ for {spec}");
    }
}

#[test]
fn dicyclic_rotation_images_require_odd_exponents() {
    // x^2 = a^n couples the generators: f(a) = a^2 forces
    // f(x)^2 = f(a)^6 = e, but every candidate f(x) that inverts a^2 under
    // conjugation squares to a^6 != e. So no endomorphism of Dic6 maps a to
    // the class of a^2, and the rotation part of the compressed digraph is
    // NOT the compressed digraph of Z12.
    let g = group("dicyclic:6");
    let rel = endo_reachability(&g).unwrap();
    assert!(!rel.reaches(1, 2), "no endomorphism of Dic6 maps a to a^2");
    assert!(!rel.reaches(1, 4));
    assert!(!rel.reaches(2, 4));
    assert!(rel.reaches(1, 3));
    assert!(rel.reaches(1, 6));
    // and the brute-force reference agrees
    let brute = brute_force_endomorphisms(&g);
    assert!(brute.iter().all(|f| f[1] != 2 && f[1] != 4));
    assert!(brute.iter().any(|f| f[1] == 3));
}

#[test]
fn endomorphism_counts() {
    // Klein four: all 16 linear self-maps over F2 are endomorphisms
    assert_eq!(
        enumerate_endomorphisms(&group("abelian:2,2"))
            .unwrap()
            .len(),
        16
    );
    assert_eq!(
        enumerate_automorphisms(&group("abelian:2,2"))
            .unwrap()
            .len(),
        6
    );
    // a cyclic group has one endomorphism per image of the generator
    assert_eq!(
        enumerate_endomorphisms(&group("cyclic:6")).unwrap().len(),
        6
    );
    assert_eq!(
        enumerate_endomorphisms(&group("symmetric:3"))
            .unwrap()
            .len(),
        10
    );
    assert_eq!(
        enumerate_automorphisms(&group("cyclic:12")).unwrap().len(),
        4
    );
    assert_eq!(
        enumerate_automorphisms(&group("quaternion")).unwrap().len(),
        24
    );
}

#[test]
fn enumeration_contains_identity_and_trivial_and_is_sorted() {
    for spec in ["cyclic:12", "dihedral:6", "quaternion", "metacyclic:7,3"] {
        let g = group(spec);
        let endos = enumerate_endomorphisms(&g).unwrap();
        let n = g.order();
        assert!(endos.iter().any(|m| m.is_identity()), "{spec}");
        assert!(
            endos.iter().any(|m| m.images().iter().all(|&v| v == 0)),
            "{spec}"
        );
        let mut sorted = endos.clone();
        sorted.sort_by(|a, b| a.images().cmp(b.images()));
        assert_eq!(endos, sorted, "{spec} output must be sorted");
        for m in &endos {
            assert_eq!(m.images().len(), n);
        }
    }
}

#[test]
fn composition_closure_on_random_pairs() {
    // deterministic LCG; 1000 pairs per group
    let mut state = 0x243f6a8885a308d3u64;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (state >> 33) as usize
    };
    for spec in [
        "cyclic:12",
        "dihedral:6",
        "quaternion",
        "symmetric:4",
        "metacyclic:7,3",
    ] {
        let g = group(spec);
        let endos = enumerate_endomorphisms(&g).unwrap();
        let set: std::collections::HashSet<Vec<u16>> =
            endos.iter().map(|m| m.images().to_vec()).collect();
        for _ in 0..1000 {
            let a = &endos[next() % endos.len()];
            let b = &endos[next() % endos.len()];
            let c = a.compose(b);
            assert!(
                set.contains(c.images()),
                "{spec}: composite escaped the enumerated monoid"
            );
        }
    }
}

#[test]
fn image_order_divides_preimage_order() {
    for spec in [
        "cyclic:12",
        "dihedral:6",
        "dicyclic:3",
        "symmetric:4",
        "heisenberg:3",
    ] {
        let g = group(spec);
        for m in enumerate_endomorphisms(&g).unwrap() {
            for x in 0..g.order() {
                let ox = g.element_order(x);
                let oi = g.element_order(m.apply(x));
                assert_eq!(ox % oi, 0, "{spec}: order |f({x})| does not divide |{x}|");
            }
        }
    }
}

#[test]
fn verify_homomorphism_examples() {
    let z4 = group("cyclic:4");
    // the constant-identity and identity maps are endomorphisms
    assert!(verify_homomorphism(&z4, &[0, 0, 0, 0]).is_ok());
    assert!(verify_homomorphism(&z4, &[0, 1, 2, 3]).is_ok());
    // 1 -> 1 forces 2 = 1+1 -> 2, so sending 2 to 3 is rejected at (1, 1)
    let err = verify_homomorphism(&z4, &[0, 1, 3, 3]).unwrap_err();
    match err {
        endograph::Error::NotHomomorphism { x, y } => assert_eq!((x, y), (1, 1)),
        other => panic!("unexpected error {other}"),
    }
}

#[test]
fn automorphism_orbit_examples() {
    let z12 = group("cyclic:12");
    let orbits = automorphism_orbits(&z12).unwrap();
    assert_eq!(
        orbits.blocks(),
        &[
            vec![0],
            vec![1, 5, 7, 11],
            vec![2, 10],
            vec![3, 9],
            vec![4, 8],
            vec![6]
        ]
    );

    // S4 orbits are exactly its conjugacy classes
    let s4 = group("symmetric:4");
    let orbits = automorphism_orbits(&s4).unwrap();
    let mut classes = s4.conjugacy_classes();
    classes.sort_by_key(|c| c[0]);
    assert_eq!(orbits.blocks(), &classes[..]);

    // quaternion group: identity, the central involution, and the six
    // elements of order 4
    let q8 = group("quaternion");
    let orbits = automorphism_orbits(&q8).unwrap();
    let mut sizes = orbits.block_sizes();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 1, 6]);
}

fn gcd(a: usize, b: usize) -> usize {
    if a == 0 {
        b
    } else {
        gcd(b % a, a)
    }
}

#[test]
fn cyclic_reachability_matches_gcd_criterion() {
    for n in 1..=30usize {
        let g = group(&format!("cyclic:{n}"));
        let rel = endo_reachability(&g).unwrap();
        rel.verify_invariants().unwrap();
        for x in 0..n {
            for y in 0..n {
                let expected = gcd(y, n).is_multiple_of(gcd(x, n));
                assert_eq!(rel.reaches(x, y), expected, "n={n}, {x} -> {y}");
            }
        }
    }
}

#[test]
fn reachability_examples() {
    let z6 = group("cyclic:6");
    let rel = endo_reachability(&z6).unwrap();
    assert!(rel.reaches(2, 4));
    assert!(!rel.reaches(2, 1));

    // every element of the quaternion group is an image of i (index 1)
    let q8 = group("quaternion");
    let rel = endo_reachability(&q8).unwrap();
    for y in 0..8 {
        assert!(rel.reaches(1, y));
    }

    // Z8 x Z2: no endomorphism maps (4, 0) to (0, 1) despite equal orders
    let g = group("abelian:8,2");
    let basis = g.abelian_basis().unwrap();
    let a = basis.index(&[4, 0]);
    let b = basis.index(&[0, 1]);
    assert_eq!(g.element_order(a), 2);
    assert_eq!(g.element_order(b), 2);
    let rel = endo_reachability(&g).unwrap();
    assert!(!rel.reaches(a, b));
    // the reverse direction does hold: the order-2 basis vector may be sent
    // to any involution
    assert!(rel.reaches(b, a));
}

#[test]
fn endomorphism_class_examples() {
    // for a cyclic group the endomorphism classes equal the orbits
    let z12 = group("cyclic:12");
    assert_eq!(
        endomorphism_classes(&z12).unwrap().blocks(),
        automorphism_orbits(&z12).unwrap().blocks()
    );

    // metacyclic (7,3): the 14 elements of order 3 form one endomorphism
    // class but two automorphism orbits of size 7
    let g = group("metacyclic:7,3");
    let classes = endomorphism_classes(&g).unwrap();
    let order3: Vec<usize> = (0..21).filter(|&x| g.element_order(x) == 3).collect();
    assert_eq!(order3.len(), 14);
    let b = classes.block_of(order3[0]);
    assert!(order3.iter().all(|&x| classes.block_of(x) == b));
    let orbits = automorphism_orbits(&g).unwrap();
    let orbit_sizes: Vec<usize> = orbits
        .blocks()
        .iter()
        .filter(|blk| blk.iter().all(|&x| g.element_order(x) == 3))
        .map(|blk| blk.len())
        .collect();
    assert_eq!(orbit_sizes, vec![7, 7]);

    // dihedral 6: the reflections and r^3 are mutually reachable
    let d12 = group("dihedral:6");
    let classes = endomorphism_classes(&d12).unwrap();
    let r3 = 3; // rotations are indices 0..6
    let s = 6; // reflections are indices 6..12
    assert_eq!(classes.block_of(r3), classes.block_of(s));
    let merged = &classes.blocks()[classes.block_of(s)];
    assert_eq!(merged.len(), 7);
}

#[test]
fn orbits_refine_endomorphism_classes() {
    for spec in [
        "cyclic:12",
        "dihedral:6",
        "metacyclic:7,3",
        "quaternion",
        "symmetric:4",
    ] {
        let g = group(spec);
        let orbits = automorphism_orbits(&g).unwrap();
        let classes = endomorphism_classes(&g).unwrap();
        assert!(orbits.refines(&classes), "{spec}");
        // identity is always alone in its class for these nontrivial groups
        assert_eq!(classes.blocks()[classes.block_of(0)], vec![0], "{spec}");
    }
}

#[test]
fn kernel_and_image_examples() {
    let d12 = group("dihedral:6");
    let endos = enumerate_endomorphisms(&d12).unwrap();
    // identity and trivial maps
    let id = endos.iter().find(|m| m.is_identity()).unwrap();
    let ki = kernel_and_image(&d12, id).unwrap();
    assert_eq!(ki.kernel, vec![0]);
    assert_eq!(ki.image.len(), 12);
    let z = endos
        .iter()
        .find(|m| m.images().iter().all(|&v| v == 0))
        .unwrap();
    let ki = kernel_and_image(&d12, z).unwrap();
    assert_eq!(ki.kernel.len(), 12);
    assert_eq!(ki.image, vec![0]);
    // r -> s, s -> e extends to a homomorphism with kernel <r^2, s> of size 6
    let m = endos
        .iter()
        .find(|m| m.apply(1) == 6 && m.apply(6) == 0)
        .expect("the kernel-<r^2,s> endomorphism must be enumerated");
    let ki = kernel_and_image(&d12, m).unwrap();
    assert_eq!(ki.kernel.len(), 6);
    assert_eq!(ki.image.len(), 2);
    assert!(ki.kernel.contains(&2) && ki.kernel.contains(&6));
}

#[test]
fn abelian_p_arrow_examples() {
    // profile (1,2) over p=2 is Z2 x Z4: (0,1) maps to (0,2)
    assert!(abelian_p_arrow(&[1, 2], 2, &[1, 0], &[1, 1]).unwrap());
    // identity endomorphism: b maps to b
    assert!(abelian_p_arrow(&[1, 3], 2, &[0, 2], &[0, 2]).unwrap());
    // profile (1,3) over p=2 is Z2 x Z8: (0,4) cannot reach (1,0)
    assert!(!abelian_p_arrow(&[1, 3], 2, &[1, 2], &[0, 3]).unwrap());
    // malformed inputs
    assert!(abelian_p_arrow(&[2, 1], 2, &[0, 0], &[0, 0]).is_err());
    assert!(abelian_p_arrow(&[1, 2], 4, &[0, 0], &[0, 0]).is_err());
    assert!(abelian_p_arrow(&[1, 2], 2, &[2, 0], &[0, 0]).is_err());
}

#[test]
fn homocyclic_arrow_examples() {
    let g = group("abelian:4,4");
    let basis = g.abelian_basis().unwrap();
    let a = basis.index(&[1, 0]);
    let b = basis.index(&[2, 2]);
    assert!(homocyclic_arrow(&g, a, b).unwrap());
    for x in 0..16 {
        assert!(homocyclic_arrow(&g, x, 0).unwrap());
    }
    let z9 = group("cyclic:9");
    assert!(!homocyclic_arrow(&z9, 3, 1).unwrap());
    // non-homocyclic shape is a contract violation
    assert!(homocyclic_arrow(&group("abelian:2,4"), 0, 0).is_err());
    // agreement with actual reachability on homocyclic shapes
    for spec in ["abelian:4,4", "abelian:2,2,2", "cyclic:6", "abelian:3,3"] {
        let g = group(spec);
        let rel = endo_reachability(&g).unwrap();
        for x in 0..g.order() {
            for y in 0..g.order() {
                assert_eq!(
                    homocyclic_arrow(&g, x, y).unwrap(),
                    rel.reaches(x, y),
                    "{spec}: ({x}, {y})"
                );
            }
        }
    }
}

#[test]
fn coprime_product_endomorphism_count_is_multiplicative() {
    let specs = [
        ("cyclic:2", "cyclic:3"),
        ("cyclic:2", "cyclic:9"),
        ("cyclic:4", "cyclic:3"),
        ("abelian:2,2", "cyclic:3"),
        ("abelian:2,2", "cyclic:9"),
        ("cyclic:8", "cyclic:5"),
        ("symmetric:3", "cyclic:5"),
        ("quaternion", "cyclic:5"),
        ("abelian:2,4", "cyclic:5"),
        ("cyclic:7", "cyclic:6"),
    ];
    for (a, b) in specs {
        let (ga, gb) = (group(a), group(b));
        assert_eq!(gcd(ga.order(), gb.order()), 1);
        assert!(ga.order() * gb.order() <= 48);
        let product = direct_product(&ga, &gb).unwrap();
        let na = enumerate_endomorphisms(&ga).unwrap().len();
        let nb = enumerate_endomorphisms(&gb).unwrap().len();
        let np = enumerate_endomorphisms(&product).unwrap().len();
        assert_eq!(np, na * nb, "({a}) x ({b})");
    }
}

#[test]
fn fast_paths_agree_with_enumeration() {
    let specs = [
        "abelian:2,2",
        "abelian:2,4",
        "abelian:2,2,2",
        "abelian:4,4",
        "abelian:2,8",
        "abelian:3,3",
        "abelian:2,2,4",
        "abelian:3,9",
        "abelian:2,2,2,2",
        "abelian:6,6",
        "abelian:2,4,4",
        "cyclic:16",
        "abelian:2,2,8",
    ];
    let limits = EnumLimits::default();
    for spec in specs {
        let g = group(spec);
        let fast = reachability_via_basis(&g).unwrap();
        let slow = endo_reachability_via_enumeration(&g, &limits).unwrap();
        for x in 0..g.order() {
            for y in 0..g.order() {
                assert_eq!(fast.reaches(x, y), slow.reaches(x, y), "{spec}: ({x}, {y})");
            }
        }
        let fast_orbits = orbits_via_basis(&g).unwrap();
        let slow_orbits = orbits_via_enumeration(&g, &limits).unwrap();
        assert_eq!(fast_orbits.blocks(), slow_orbits.blocks(), "{spec}");
    }
}

#[test]
fn fast_paths_handle_the_groups_enumeration_cannot() {
    // (Z2)^6: every pair of non-identity elements is mutually reachable
    let g = group("abelian:2,2,2,2,2,2");
    let rel = endo_reachability(&g).unwrap();
    rel.verify_invariants().unwrap();
    for x in 1..64 {
        for y in 1..64 {
            assert!(rel.reaches(x, y));
        }
    }
    let orbits = automorphism_orbits(&g).unwrap();
    assert_eq!(orbits.block_sizes(), vec![1, 63]);

    // Z4 x (Z2)^4 mixes exponents
    let g = group("abelian:2,2,2,2,4");
    let rel = endo_reachability(&g).unwrap();
    rel.verify_invariants().unwrap();
    let basis = g.abelian_basis().unwrap();
    // an order-4 element reaches an order-2 one, never the reverse
    let x4 = basis.index(&[0, 0, 0, 0, 1]);
    let x2 = basis.index(&[1, 0, 0, 0, 0]);
    assert!(rel.reaches(x4, x2));
    assert!(!rel.reaches(x2, x4));
}

#[test]
fn s6_endomorphism_monoid_shape() {
    // order 720: 1440 automorphisms, 75 maps through the index-2 quotient
    // (one per involution), and the trivial map
    let s6 = group("symmetric:6");
    let limits = endograph::hom::EnumLimits::generous();
    let mut total = 0u64;
    let mut bijective = 0u64;
    endograph::hom::for_each_endomorphism(&s6, &limits, |images| {
        total += 1;
        let mut seen = vec![false; images.len()];
        if images.iter().all(|&v| {
            let fresh = !seen[v as usize];
            seen[v as usize] = true;
            fresh
        }) {
            bijective += 1;
        }
    })
    .unwrap();
    assert_eq!(total, 1516);
    assert_eq!(bijective, 1440);
}

#[test]
fn size_errors_above_caps() {
    let g = group("abelian:2,2,2,2,2,2");
    assert!(matches!(
        enumerate_endomorphisms(&g),
        Err(endograph::Error::SizeLimit { .. })
    ));
    let s6 = group("symmetric:6");
    // order 720 exceeds the default cap but fits the generous one
    assert!(enumerate_endomorphisms(&s6).is_err());
}
