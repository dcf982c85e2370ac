//! Constructors for the named group families.
//!
//! Table-based families (cyclic, abelian, dihedral, dicyclic, metacyclic,
//! heisenberg, modular_p3) write their multiplication tables directly from
//! the defining relations. Permutation and matrix families close a small
//! generating set and then forget the concrete representation.

use super::{direct_product, AbelianBasis, FiniteGroup, GroupSpec, MAX_GROUP_ORDER};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::hash::Hash;

pub(super) fn build(spec: &GroupSpec) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Cyclic(n) => cyclic(*n),
        GroupSpec::Abelian(moduli) => abelian(moduli),
        GroupSpec::Dihedral(n) => dihedral(*n),
        GroupSpec::Dicyclic(n) => dicyclic(*n, format!("dicyclic:{n}")),
        GroupSpec::Quaternion => dicyclic(2, "quaternion".into()),
        GroupSpec::Symmetric(n) => symmetric(*n),
        GroupSpec::Alternating(n) => alternating(*n),
        GroupSpec::Metacyclic { q, m } => metacyclic(*q, *m),
        GroupSpec::Heisenberg(p) => heisenberg(*p),
        GroupSpec::ModularP3(p) => modular_p3(*p),
        GroupSpec::Sl25 => sl25(),
        GroupSpec::Agl32 => agl32_with_retraction().map(|(g, _)| g),
        GroupSpec::Product(a, b) => {
            let left = build(a)?;
            let right = build(b)?;
            direct_product(&left, &right)
        }
    }
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 || order > MAX_GROUP_ORDER {
        return Err(Error::size(
            "group order",
            MAX_GROUP_ORDER as u64,
            order as u64,
        ));
    }
    Ok(())
}

fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic requires n >= 1".into()));
    }
    check_order(n)?;
    let mut table = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            table[x * n + y] = ((x + y) % n) as u16;
        }
    }
    let gens = if n == 1 { vec![0] } else { vec![1] };
    let basis = AbelianBasis::new(if n == 1 { vec![] } else { vec![n] });
    FiniteGroup::from_table(format!("cyclic:{n}"), n, table, gens, Some(basis))
}

fn abelian(moduli: &[usize]) -> Result<FiniteGroup> {
    if moduli.is_empty() || moduli.contains(&0) {
        return Err(Error::InvalidParameter(
            "abelian requires a nonempty list of positive moduli".into(),
        ));
    }
    let effective: Vec<usize> = moduli.iter().copied().filter(|&m| m > 1).collect();
    let order = effective.iter().product::<usize>().max(1);
    check_order(order)?;
    let basis = AbelianBasis::new(effective);
    let mut table = vec![0u16; order * order];
    for x in 0..order {
        let cx = basis.coords(x);
        for y in 0..order {
            let cy = basis.coords(y);
            let sum: Vec<usize> = cx
                .iter()
                .zip(&cy)
                .zip(basis.moduli())
                .map(|((&a, &b), &m)| (a + b) % m)
                .collect();
            table[x * order + y] = basis.index(&sum) as u16;
        }
    }
    let gens: Vec<usize> = if order == 1 {
        vec![0]
    } else {
        (0..basis.rank()).map(|i| basis.basis_element(i)).collect()
    };
    let label = format!(
        "abelian:{}",
        moduli
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    FiniteGroup::from_table(label, order, table, gens, Some(basis))
}

/// Order 2n: indices 0..n are rotations r^i, n..2n are reflections r^i s.
fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("dihedral requires n >= 1".into()));
    }
    let order = 2 * n;
    check_order(order)?;
    let idx = |rot: usize, refl: bool| if refl { n + rot } else { rot };
    let mut table = vec![0u16; order * order];
    for i in 0..n {
        for j in 0..n {
            table[idx(i, false) * order + idx(j, false)] = idx((i + j) % n, false) as u16;
            table[idx(i, false) * order + idx(j, true)] = idx((i + j) % n, true) as u16;
            table[idx(i, true) * order + idx(j, false)] = idx((i + n - j % n) % n, true) as u16;
            table[idx(i, true) * order + idx(j, true)] = idx((i + n - j % n) % n, false) as u16;
        }
    }
    let gens = if n == 1 { vec![1] } else { vec![1, n] };
    FiniteGroup::from_table(format!("dihedral:{n}"), order, table, gens, None)
}

/// Order 4n: indices 0..2n are powers a^i, 2n..4n are a^i x, with
/// a^{2n} = 1, x^2 = a^n, x^-1 a x = a^-1.
fn dicyclic(n: usize, label: String) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("dicyclic requires n >= 1".into()));
    }
    let m = 2 * n;
    let order = 4 * n;
    check_order(order)?;
    let mut table = vec![0u16; order * order];
    for i in 0..m {
        for j in 0..m {
            table[i * order + j] = ((i + j) % m) as u16;
            table[i * order + (m + j)] = (m + (i + j) % m) as u16;
            table[(m + i) * order + j] = (m + (i + m - j) % m) as u16;
            table[(m + i) * order + (m + j)] = ((i + m - j + n) % m) as u16;
        }
    }
    FiniteGroup::from_table(label, order, table, vec![1, m], None)
}

/// q*m with q prime, m | q-1, m > 1: <x, y | x^q = y^m = 1, y^-1 x y = x^s>
/// for s a primitive m-th root of unity mod q. Index of x^i y^j is i + q*j.
fn metacyclic(q: usize, m: usize) -> Result<FiniteGroup> {
    if !is_prime(q) {
        return Err(Error::InvalidParameter(format!(
            "metacyclic requires q prime, got q = {q}"
        )));
    }
    if m <= 1 || !(q - 1).is_multiple_of(m) {
        return Err(Error::InvalidParameter(format!(
            "metacyclic requires m > 1 dividing q-1, got q = {q}, m = {m}"
        )));
    }
    let order = q * m;
    check_order(order)?;
    let mult_order = |s: usize| {
        let mut t = s;
        let mut k = 1;
        while t != 1 {
            t = t * s % q;
            k += 1;
        }
        k
    };
    let s = (2..q)
        .find(|&s| mult_order(s) == m)
        .expect("cyclic unit group has an element of each order dividing q-1");
    // powers s^j mod q for j < m
    let mut spow = vec![1usize; m];
    for j in 1..m {
        spow[j] = spow[j - 1] * s % q;
    }
    let mut table = vec![0u16; order * order];
    for i in 0..q {
        for j in 0..m {
            let a = i + q * j;
            for k in 0..q {
                for l in 0..m {
                    let b = k + q * l;
                    let xi = (i + k * spow[j]) % q;
                    let yj = (j + l) % m;
                    table[a * order + b] = (xi + q * yj) as u16;
                }
            }
        }
    }
    FiniteGroup::from_table(
        format!("metacyclic:{q},{m}"),
        order,
        table,
        vec![1, q],
        None,
    )
}

/// Order p^3, exponent p (p an odd prime): upper unitriangular 3x3 matrices
/// over Z_p, stored as (a, b, c) with index a + p*b + p^2*c.
fn heisenberg(p: usize) -> Result<FiniteGroup> {
    if !is_prime(p) || p == 2 {
        return Err(Error::InvalidParameter(format!(
            "heisenberg requires an odd prime, got p = {p}"
        )));
    }
    let order = p * p * p;
    check_order(order)?;
    let idx = |a: usize, b: usize, c: usize| a + p * b + p * p * c;
    let mut table = vec![0u16; order * order];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                let lhs = idx(a, b, c);
                for a2 in 0..p {
                    for b2 in 0..p {
                        for c2 in 0..p {
                            let v = idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
                            table[lhs * order + idx(a2, b2, c2)] = v as u16;
                        }
                    }
                }
            }
        }
    }
    let gens = vec![idx(1, 0, 0), idx(0, 1, 0)];
    FiniteGroup::from_table(format!("heisenberg:{p}"), order, table, gens, None)
}

/// Order p^3, exponent p^2 (p an odd prime):
/// <a, b | a^{p^2} = b^p = 1, b^-1 a b = a^{1+p}>. Index of a^i b^j is
/// i + p^2 * j.
fn modular_p3(p: usize) -> Result<FiniteGroup> {
    if !is_prime(p) || p == 2 {
        return Err(Error::InvalidParameter(format!(
            "modular_p3 requires an odd prime, got p = {p}"
        )));
    }
    let p2 = p * p;
    let order = p2 * p;
    check_order(order)?;
    // powers (1+p)^j mod p^2
    let mut upow = vec![1usize; p];
    for j in 1..p {
        upow[j] = upow[j - 1] * (1 + p) % p2;
    }
    let mut table = vec![0u16; order * order];
    for i in 0..p2 {
        for j in 0..p {
            let a = i + p2 * j;
            for k in 0..p2 {
                for l in 0..p {
                    let b = k + p2 * l;
                    let ai = (i + k * upow[j]) % p2;
                    let bj = (j + l) % p;
                    table[a * order + b] = (ai + p2 * bj) as u16;
                }
            }
        }
    }
    let gens = vec![1, p2];
    FiniteGroup::from_table(format!("modular_p3:{p}"), order, table, gens, None)
}

/// Closes `gens` under `mul` starting from `identity` and builds the
/// multiplication table. Only n*k concrete products are evaluated; the rest
/// of the table follows from the BFS factorization y = parent * generator.
fn close_concrete<T: Clone + Eq + Hash>(
    identity: T,
    gens: &[T],
    mul: impl Fn(&T, &T) -> T,
    cap: usize,
) -> Result<(Vec<T>, Vec<u16>, Vec<usize>)> {
    let mut elems = vec![identity.clone()];
    let mut index: HashMap<T, usize> = HashMap::new();
    index.insert(identity, 0);
    // parent_of[y] = (p, s) with elems[y] = elems[p] * gens[s]
    let mut parent_of = vec![(0usize, 0usize)];
    let mut head = 0;
    while head < elems.len() {
        let x = elems[head].clone();
        for (si, s) in gens.iter().enumerate() {
            let y = mul(&x, s);
            if !index.contains_key(&y) {
                if elems.len() >= cap {
                    return Err(Error::size(
                        "generated group order",
                        cap as u64,
                        cap as u64 + 1,
                    ));
                }
                index.insert(y.clone(), elems.len());
                elems.push(y);
                parent_of.push((head, si));
            }
        }
        head += 1;
    }
    let n = elems.len();
    let gen_idx: Vec<usize> = gens.iter().map(|g| index[g]).collect();
    let mut table = vec![0u16; n * n];
    for x in 0..n {
        table[x * n] = x as u16;
    }
    // generator columns by concrete multiplication
    for x in 0..n {
        for &gi in &gen_idx {
            if gi != 0 {
                let prod = mul(&elems[x], &elems[gi]);
                table[x * n + gi] = index[&prod] as u16;
            }
        }
    }
    // remaining columns via x * (p * s) = (x * p) * s
    for y in 1..n {
        let (p, si) = parent_of[y];
        let s = gen_idx[si];
        if y == s {
            continue;
        }
        for x in 0..n {
            let xp = table[x * n + p] as usize;
            table[x * n + y] = table[xp * n + s];
        }
    }
    Ok((elems, table, gen_idx))
}

#[allow(clippy::ptr_arg)] // the closure interface of close_concrete passes &Vec
fn perm_mul(p: &Vec<u8>, q: &Vec<u8>) -> Vec<u8> {
    p.iter().map(|&i| q[i as usize]).collect()
}

fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("symmetric requires n >= 1".into()));
    }
    let identity: Vec<u8> = (0..n as u8).collect();
    let mut gens: Vec<Vec<u8>> = Vec::new();
    if n >= 2 {
        let mut t = identity.clone();
        t.swap(0, 1);
        gens.push(t);
    }
    if n >= 3 {
        let cycle: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
        gens.push(cycle);
    }
    if gens.is_empty() {
        gens.push(identity.clone());
    }
    let (_, table, gen_idx) = close_concrete(identity, &gens, perm_mul, MAX_GROUP_ORDER)?;
    let order = table.len().isqrt();
    FiniteGroup::from_table(format!("symmetric:{n}"), order, table, gen_idx, None)
}

fn alternating(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "alternating requires n >= 1".into(),
        ));
    }
    let identity: Vec<u8> = (0..n as u8).collect();
    let mut gens: Vec<Vec<u8>> = Vec::new();
    if n >= 3 {
        let mut c3 = identity.clone();
        c3[0] = 1;
        c3[1] = 2;
        c3[2] = 0;
        gens.push(c3);
    }
    if n >= 4 {
        // an even long cycle: the full n-cycle for odd n, an (n-1)-cycle
        // fixing 0 for even n
        let cycle: Vec<u8> = if n % 2 == 1 {
            (0..n).map(|i| ((i + 1) % n) as u8).collect()
        } else {
            (0..n)
                .map(|i| if i == 0 { 0 } else { (i % (n - 1) + 1) as u8 })
                .collect()
        };
        gens.push(cycle);
    }
    if gens.is_empty() {
        gens.push(identity.clone());
    }
    let (_, table, gen_idx) = close_concrete(identity, &gens, perm_mul, MAX_GROUP_ORDER)?;
    let order = table.len().isqrt();
    let expected = (1..=n).product::<usize>() / if n >= 2 { 2 } else { 1 };
    if order != expected {
        return Err(Error::InvalidParameter(format!(
            "alternating:{n} closure produced order {order}, expected {expected}"
        )));
    }
    FiniteGroup::from_table(format!("alternating:{n}"), order, table, gen_idx, None)
}

type Mat2 = [u8; 4];

fn sl25() -> Result<FiniteGroup> {
    let mul = |a: &Mat2, b: &Mat2| -> Mat2 {
        [
            (a[0] * b[0] + a[1] * b[2]) % 5,
            (a[0] * b[1] + a[1] * b[3]) % 5,
            (a[2] * b[0] + a[3] * b[2]) % 5,
            (a[2] * b[1] + a[3] * b[3]) % 5,
        ]
    };
    let identity: Mat2 = [1, 0, 0, 1];
    let gens: Vec<Mat2> = vec![[1, 1, 0, 1], [1, 0, 1, 1]];
    let (_, table, gen_idx) = close_concrete(identity, &gens, mul, MAX_GROUP_ORDER)?;
    let order = table.len().isqrt();
    if order != 120 {
        return Err(Error::InvalidParameter(format!(
            "sl25 closure produced order {order}, expected 120"
        )));
    }
    FiniteGroup::from_table("sl25".into(), order, table, gen_idx, None)
}

/// An invertible 3x3 matrix over F2 plus a translation vector; the map is
/// x -> Mx + v and composition is (A*B)(x) = A(B(x)).
type Affine = ([u8; 9], [u8; 3]);

fn mat3_mul(a: &[u8; 9], b: &[u8; 9]) -> [u8; 9] {
    let mut out = [0u8; 9];
    for i in 0..3 {
        for j in 0..3 {
            let mut s = 0;
            for k in 0..3 {
                s ^= a[3 * i + k] & b[3 * k + j];
            }
            out[3 * i + j] = s;
        }
    }
    out
}

fn mat3_apply(m: &[u8; 9], v: &[u8; 3]) -> [u8; 3] {
    let mut out = [0u8; 3];
    for i in 0..3 {
        out[i] = (m[3 * i] & v[0]) ^ (m[3 * i + 1] & v[1]) ^ (m[3 * i + 2] & v[2]);
    }
    out
}

/// Builds AGL(3,2) (order 1344) together with the retraction onto its
/// linear part: the self-map sending x -> Mx + v to x -> Mx. The second
/// component is the image array of that retraction over element indices.
pub fn agl32_with_retraction() -> Result<(FiniteGroup, Vec<usize>)> {
    let mul = |a: &Affine, b: &Affine| -> Affine {
        let m = mat3_mul(&a.0, &b.0);
        let mv = mat3_apply(&a.0, &b.1);
        (m, [mv[0] ^ a.1[0], mv[1] ^ a.1[1], mv[2] ^ a.1[2]])
    };
    let ident: [u8; 9] = [1, 0, 0, 0, 1, 0, 0, 0, 1];
    let identity: Affine = (ident, [0, 0, 0]);
    let transvection: Affine = ([1, 1, 0, 0, 1, 0, 0, 0, 1], [0, 0, 0]);
    let cycle: Affine = ([0, 0, 1, 1, 0, 0, 0, 1, 0], [0, 0, 0]);
    let translation: Affine = (ident, [1, 0, 0]);
    let gens = vec![transvection, cycle, translation];
    let (elems, table, gen_idx) = close_concrete(identity, &gens, mul, MAX_GROUP_ORDER)?;
    let order = table.len().isqrt();
    if order != 1344 {
        return Err(Error::InvalidParameter(format!(
            "agl32 closure produced order {order}, expected 1344"
        )));
    }
    let mut index: HashMap<Affine, usize> = HashMap::new();
    for (i, e) in elems.iter().enumerate() {
        index.insert(*e, i);
    }
    let retraction: Vec<usize> = elems.iter().map(|(m, _)| index[&(*m, [0, 0, 0])]).collect();
    let g = FiniteGroup::from_table("agl32".into(), order, table, gen_idx, None)?;
    Ok((g, retraction))
}

#[cfg(test)]
mod tests {
    use super::super::{build_group, GroupSpec};
    use super::*;

    fn orders_histogram(g: &FiniteGroup) -> HashMap<usize, usize> {
        let mut h = HashMap::new();
        for x in 0..g.order() {
            *h.entry(g.element_order(x)).or_insert(0) += 1;
        }
        h
    }

    #[test]
    fn family_orders() {
        let cases = [
            ("cyclic:1", 1),
            ("cyclic:12", 12),
            ("abelian:2,4,8", 64),
            ("dihedral:6", 12),
            ("dicyclic:6", 24),
            ("quaternion", 8),
            ("symmetric:4", 24),
            ("alternating:5", 60),
            ("metacyclic:7,3", 21),
            ("heisenberg:3", 27),
            ("modular_p3:3", 27),
            ("sl25", 120),
            ("product:(cyclic:8)x(cyclic:2)", 16),
        ];
        for (spec, order) in cases {
            let g = build_group(&spec.parse().unwrap()).unwrap();
            assert_eq!(g.order(), order, "{spec}");
            g.verify_integrity().unwrap();
        }
    }

    #[test]
    fn cyclic_element_orders() {
        let g = build_group(&GroupSpec::Cyclic(12)).unwrap();
        for i in 0..12 {
            assert_eq!(g.element_order(i), 12 / gcd_usize(i, 12), "element {i}");
        }
    }

    fn gcd_usize(a: usize, b: usize) -> usize {
        if a == 0 {
            b
        } else {
            gcd_usize(b % a, a)
        }
    }

    #[test]
    fn dicyclic_generator_orders() {
        // x^2 = a^n forces x to have order 4
        let g = build_group(&GroupSpec::Dicyclic(6)).unwrap();
        assert_eq!(g.element_order(1), 12); // a
        assert_eq!(g.element_order(12), 4); // x
        let h = orders_histogram(&g);
        assert_eq!(h[&4], 12 + 2); // 12 reflections and a^3, a^9
    }

    #[test]
    fn heisenberg_has_exponent_p_and_small_center() {
        for p in [3usize, 5] {
            let g = build_group(&GroupSpec::Heisenberg(p)).unwrap();
            for x in 1..g.order() {
                assert_eq!(g.element_order(x), p);
            }
            let z = g.center();
            assert_eq!(z.len(), p);
            assert_eq!(g.derived_subgroup(), z);
        }
    }

    #[test]
    fn modular_p3_has_exponent_p_squared() {
        let g = build_group(&GroupSpec::ModularP3(3)).unwrap();
        let h = orders_histogram(&g);
        assert_eq!(h[&9], 18);
        assert_eq!(h[&3], 8);
        assert!(!g.is_abelian());
    }

    #[test]
    fn metacyclic_is_nonabelian_of_order_qm() {
        let g = build_group(&GroupSpec::Metacyclic { q: 7, m: 3 }).unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
        // exactly one subgroup of order 7, and it is normal
        let normals = g.normal_subgroups().unwrap();
        let of_order_q: Vec<_> = normals.iter().filter(|s| s.len() == 7).collect();
        assert_eq!(of_order_q.len(), 1);
        // element orders: 7 for <x> \ e, 3 elsewhere
        let h = orders_histogram(&g);
        assert_eq!(h[&7], 6);
        assert_eq!(h[&3], 14);
    }

    #[test]
    fn metacyclic_rejects_bad_parameters() {
        assert!(build(&GroupSpec::Metacyclic { q: 8, m: 7 }).is_err());
        assert!(build(&GroupSpec::Metacyclic { q: 7, m: 4 }).is_err());
        assert!(build(&GroupSpec::Metacyclic { q: 7, m: 1 }).is_err());
        assert!(build(&GroupSpec::Heisenberg(2)).is_err());
        assert!(build(&GroupSpec::ModularP3(4)).is_err());
    }

    #[test]
    fn symmetric_four_centralizer_of_transposition() {
        let g = build_group(&GroupSpec::Symmetric(4)).unwrap();
        // pick any element of order 2 whose centralizer has size 4
        let transpositions: Vec<usize> = (0..24)
            .filter(|&x| g.element_order(x) == 2 && g.centralizer(x).len() == 4)
            .collect();
        assert_eq!(transpositions.len(), 6);
        let a = transpositions[0];
        assert!(g.order() / g.centralizer(a).len() > 3);
    }

    #[test]
    fn s4_normal_subgroup_lattice() {
        let g = build_group(&GroupSpec::Symmetric(4)).unwrap();
        let normals = g.normal_subgroups().unwrap();
        let sizes: Vec<usize> = normals.iter().map(|s| s.len()).collect();
        assert_eq!(sizes, vec![1, 4, 12, 24]);
    }

    #[test]
    fn sl25_structure() {
        let g = build_group(&GroupSpec::Sl25).unwrap();
        let report = g.structural_predicates();
        assert!(!report.is_simple);
        assert!(report.is_perfect);
        let normals = report.normal_subgroups.unwrap();
        assert_eq!(normals.len(), 3);
        assert_eq!(normals[1].len(), 2); // Z = {+-I}
        assert_eq!(report.center.len(), 2);
    }

    #[test]
    fn alternating_five_is_simple_not_so_z_p() {
        let a5 = build_group(&GroupSpec::Alternating(5)).unwrap();
        assert!(a5.is_simple());
        assert!(a5.is_perfect());
        let z5 = build_group(&GroupSpec::Cyclic(5)).unwrap();
        assert!(z5.is_simple());
        assert!(!z5.is_perfect());
        let z1 = build_group(&GroupSpec::Cyclic(1)).unwrap();
        assert!(!z1.is_simple());
    }

    #[test]
    fn agl32_retraction_is_the_linear_projection() {
        let (g, retraction) = agl32_with_retraction().unwrap();
        assert_eq!(g.order(), 1344);
        assert!(g.is_perfect());
        assert!(!g.is_simple());
        // kernel of the retraction: the 8 translations
        let kernel: Vec<usize> = (0..g.order()).filter(|&x| retraction[x] == 0).collect();
        assert_eq!(kernel.len(), 8);
        // retraction is idempotent
        for x in 0..g.order() {
            assert_eq!(retraction[retraction[x]], retraction[x]);
        }
    }

    #[test]
    fn klein_four_via_product() {
        let a = build_group(&"cyclic:2".parse().unwrap()).unwrap();
        let b = build_group(&"cyclic:2".parse().unwrap()).unwrap();
        let v4 = direct_product(&a, &b).unwrap();
        assert_eq!(v4.order(), 4);
        for x in 1..4 {
            assert_eq!(v4.element_order(x), 2);
        }
        assert!(v4.abelian_basis().is_some());
        assert_eq!(v4.generators(), &[2, 1]);
    }

    #[test]
    fn coprime_product_of_cyclics_is_cyclic() {
        let a = build_group(&GroupSpec::Cyclic(2)).unwrap();
        let b = build_group(&GroupSpec::Cyclic(3)).unwrap();
        let g = direct_product(&a, &b).unwrap();
        assert_eq!(g.order(), 6);
        assert!((0..6).any(|x| g.element_order(x) == 6));
    }

    #[test]
    fn product_order_cap() {
        let a = build_group(&GroupSpec::Cyclic(200)).unwrap();
        let b = build_group(&GroupSpec::Cyclic(60)).unwrap();
        assert!(matches!(
            direct_product(&a, &b),
            Err(Error::SizeLimit { .. })
        ));
    }
}
