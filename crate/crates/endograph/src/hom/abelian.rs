//! Fast reachability and orbit routes for groups built as direct products of
//! cyclic factors, used where exhaustive enumeration is out of reach
//! (elementary abelian 2-groups already overflow it at order 32).
//!
//! Reachability: an endomorphism of a product of cyclic groups is exactly a
//! choice of basis images w_i with ord(w_i) dividing the basis modulus, so
//! the image set of x = sum c_i e_i is the subgroup product of the sets
//! {w^{c_i} : w in the m_i-torsion}. This is computed per element, no
//! enumeration involved.
//!
//! Orbits: a pool of verified automorphisms (diagonal unit multiplications,
//! equal-modulus swaps, admissible transvections) drives a union-find; the
//! resulting partition is certified exact against the height-sequence
//! invariant, which no automorphism can cross. A certification mismatch is
//! reported as an error rather than silently accepted.

use super::{Partition, ReachRelation, UnionFind};
use crate::bits::{BitMat, BitRow};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Exact endomorphism reachability from the basis-image characterization.
pub fn reachability_via_basis(g: &FiniteGroup) -> Result<ReachRelation> {
    let basis = g
        .abelian_basis()
        .ok_or_else(|| Error::Contract("group carries no abelian basis".into()))?;
    let n = g.order();
    let moduli = basis.moduli().to_vec();
    // torsion element lists per distinct modulus
    let orders: Vec<usize> = (0..n).map(|x| g.element_order(x)).collect();
    let torsion =
        |m: usize| -> Vec<usize> { (0..n).filter(|&w| m.is_multiple_of(orders[w])).collect() };
    let mut torsion_of: Vec<(usize, Vec<usize>)> = Vec::new();
    for &m in &moduli {
        if !torsion_of.iter().any(|&(tm, _)| tm == m) {
            torsion_of.push((m, torsion(m)));
        }
    }
    let mut mat = BitMat::new(n);
    for x in 0..n {
        let coords = basis.coords(x);
        let mut reach_list = vec![0usize];
        let mut reach_bits = BitRow::new(n);
        reach_bits.set(0);
        for (i, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let t = &torsion_of
                .iter()
                .find(|&&(tm, _)| tm == moduli[i])
                .unwrap()
                .1;
            let mut step = BitRow::new(n);
            let mut step_list = Vec::new();
            for &w in t {
                let y = g.pow(w, c as u64);
                if !step.get(y) {
                    step.set(y);
                    step_list.push(y);
                }
            }
            let mut next_bits = BitRow::new(n);
            let mut next_list = Vec::new();
            for &r in &reach_list {
                for &s in &step_list {
                    let y = g.mul(r, s);
                    if !next_bits.get(y) {
                        next_bits.set(y);
                        next_list.push(y);
                    }
                }
            }
            reach_list = next_list;
            reach_bits = next_bits;
        }
        debug_assert!(reach_bits.get(x), "reachable set must contain x itself");
        for &y in &reach_list {
            mat.set(x, y);
        }
    }
    let rel = ReachRelation::new(g.label(), mat);
    debug_assert!(rel.verify_invariants().is_ok());
    Ok(rel)
}

/// Automorphism orbits via a verified generator pool, certified against the
/// height-sequence invariant.
pub fn orbits_via_basis(g: &FiniteGroup) -> Result<Partition> {
    let basis = g
        .abelian_basis()
        .ok_or_else(|| Error::Contract("group carries no abelian basis".into()))?;
    let n = g.order();
    let moduli = basis.moduli().to_vec();
    let k = moduli.len();

    // image array of the map sending each basis element e_i to imgs[i]
    let map_from_basis = |imgs: &[usize]| -> Vec<usize> {
        (0..n)
            .map(|x| {
                let coords = basis.coords(x);
                let mut y = 0;
                for (i, &c) in coords.iter().enumerate() {
                    y = g.mul(y, g.pow(imgs[i], c as u64));
                }
                y
            })
            .collect()
    };
    let basis_elems: Vec<usize> = (0..k).map(|i| basis.basis_element(i)).collect();

    let mut pool: Vec<Vec<usize>> = Vec::new();
    for i in 0..k {
        for u in 2..moduli[i] {
            if gcd(u, moduli[i]) == 1 {
                let mut imgs = basis_elems.clone();
                imgs[i] = g.pow(basis_elems[i], u as u64);
                pool.push(imgs);
            }
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            if moduli[i] == moduli[j] {
                let mut imgs = basis_elems.clone();
                imgs.swap(i, j);
                pool.push(imgs);
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let lambda = moduli[i] / gcd(moduli[i], moduli[j]);
            if !lambda.is_multiple_of(moduli[i]) {
                let mut imgs = basis_elems.clone();
                imgs[j] = g.mul(basis_elems[j], g.pow(basis_elems[i], lambda as u64));
                pool.push(imgs);
            }
        }
    }

    let mut uf = UnionFind::new(n);
    for imgs in &pool {
        let f = map_from_basis(imgs);
        let m = super::verify_homomorphism(g, &f)?;
        if !m.is_bijective() {
            return Err(Error::Contract(
                "orbit pool produced a non-bijective map".into(),
            ));
        }
        for (x, &fx) in f.iter().enumerate() {
            uf.union(x, fx);
        }
    }
    let ids: Vec<usize> = {
        let mut v = Vec::with_capacity(n);
        for x in 0..n {
            v.push(uf.find(x));
        }
        v
    };
    let computed = Partition::from_ids(g.label(), &ids);

    let invariant = Partition::from_ids(g.label(), &signature_ids(g)?);
    if computed != invariant {
        return Err(Error::Contract(
            "orbit fast path failed certification: pool partition differs from the \
             height-sequence partition"
                .into(),
        ));
    }
    Ok(computed)
}

/// Per-element id of the concatenated per-prime height sequences.
fn signature_ids(g: &FiniteGroup) -> Result<Vec<usize>> {
    let n = g.order();
    let primes: Vec<(u64, u32)> = crate::numtheory::factorize(n as u64);
    let mut signatures: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(p, a) in &primes {
        let pa = (p as usize).pow(a);
        let projector = {
            let q = n / pa; // coprime to p^a
            let inv = mod_inverse(q % pa, pa);
            (q as u64) * (inv as u64)
        };
        // primary components and the torsion subgroup they live in
        let component: Vec<usize> = (0..n).map(|x| g.pow(x, projector)).collect();
        let mut in_gp = BitRow::new(n);
        for x in 0..n {
            if g.pow(x, pa as u64) == 0 {
                in_gp.set(x);
            }
        }
        // height chain: C_{j+1} = p-th powers of C_j
        let mut chain: Vec<BitRow> = vec![in_gp.clone()];
        loop {
            let last = chain.last().unwrap();
            let mut next = BitRow::new(n);
            for y in last.iter_ones() {
                next.set(g.pow(y, p));
            }
            if next.count() == 1 {
                break;
            }
            chain.push(next);
        }
        let height =
            |y: usize| -> usize { (0..chain.len()).rev().find(|&j| chain[j].get(y)).unwrap() };
        for x in 0..n {
            let mut y = component[x];
            signatures[x].push(usize::MAX); // prime separator
            while y != 0 {
                signatures[x].push(height(y));
                y = g.pow(y, p);
            }
        }
    }
    let mut distinct: Vec<&Vec<usize>> = Vec::new();
    let mut ids = vec![0usize; n];
    for x in 0..n {
        match distinct.iter().position(|s| **s == signatures[x]) {
            Some(i) => ids[x] = i,
            None => {
                ids[x] = distinct.len();
                distinct.push(&signatures[x]);
            }
        }
    }
    Ok(ids)
}

fn gcd(a: usize, b: usize) -> usize {
    if a == 0 {
        b
    } else {
        gcd(b % a, a)
    }
}

fn mod_inverse(a: usize, m: usize) -> usize {
    if m == 1 {
        return 0;
    }
    // extended euclid on (a, m)
    let (mut old_r, mut r) = (a as i64, m as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    assert_eq!(old_r, 1, "inverse of non-unit requested");
    old_s.rem_euclid(m as i64) as usize
}

/// p-adic valuations of mixed-radix coordinates over a p-group profile;
/// coordinate 0 gets the full exponent m_i.
pub fn coordinate_valuations(p: usize, profile: &[usize], coords: &[usize]) -> Vec<usize> {
    profile
        .iter()
        .zip(coords)
        .map(|(&m, &c)| {
            if c == 0 {
                m
            } else {
                let mut v = 0;
                let mut c = c;
                while c % p == 0 {
                    c /= p;
                    v += 1;
                }
                v
            }
        })
        .collect()
}
