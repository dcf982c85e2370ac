//! The group catalog the verification checks run over: every abelian group
//! of order 2..=64 (one entry per multiset of prime-power moduli) plus the
//! named nonabelian families the checks reference.

use endograph::group::GroupSpec;
use endograph::numtheory::factorize;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub spec: GroupSpec,
    pub order: usize,
    pub abelian: bool,
    /// the prime, when the order is a prime power
    pub p_group: Option<usize>,
    /// false for the one family excluded from endomorphism enumeration
    pub enumerable: bool,
}

/// Abelian coverage is exhaustive up to order min(max_order, 64); named
/// families appear when their order fits. Sorted by order, then by spec
/// string.
pub fn catalog(max_order: usize) -> Vec<CatalogEntry> {
    let mut entries = Vec::new();
    for n in 2..=max_order.min(64) {
        for moduli in abelian_moduli_multisets(n) {
            entries.push(make_entry(GroupSpec::Abelian(moduli), n, true, true));
        }
    }
    for (spec, order) in named_families() {
        if order <= max_order {
            let enumerable = spec != GroupSpec::Agl32;
            entries.push(make_entry(spec, order, false, enumerable));
        }
    }
    entries.sort_by(|a, b| {
        a.order
            .cmp(&b.order)
            .then_with(|| a.spec.to_string().cmp(&b.spec.to_string()))
    });
    entries
}

fn make_entry(spec: GroupSpec, order: usize, abelian: bool, enumerable: bool) -> CatalogEntry {
    let factors = factorize(order as u64);
    let p_group = if factors.len() == 1 {
        Some(factors[0].0 as usize)
    } else {
        None
    };
    CatalogEntry {
        spec,
        order,
        abelian,
        p_group,
        enumerable,
    }
}

fn named_families() -> Vec<(GroupSpec, usize)> {
    let mut out = vec![
        (GroupSpec::Symmetric(3), 6),
        (GroupSpec::Quaternion, 8),
        (GroupSpec::Alternating(4), 12),
        (GroupSpec::Symmetric(4), 24),
        (GroupSpec::Alternating(5), 60),
        (GroupSpec::Symmetric(6), 720),
        (GroupSpec::Metacyclic { q: 7, m: 3 }, 21),
        (GroupSpec::Metacyclic { q: 13, m: 4 }, 52),
        (GroupSpec::Metacyclic { q: 11, m: 5 }, 55),
        (GroupSpec::Metacyclic { q: 13, m: 6 }, 78),
        (GroupSpec::Heisenberg(3), 27),
        (GroupSpec::ModularP3(3), 27),
        (GroupSpec::Heisenberg(5), 125),
        (GroupSpec::ModularP3(5), 125),
        (GroupSpec::Sl25, 120),
        (GroupSpec::Agl32, 1344),
    ];
    for n in 3..=8 {
        out.push((GroupSpec::Dihedral(n), 2 * n));
    }
    for n in [3, 4, 5, 6, 8, 10] {
        out.push((GroupSpec::Dicyclic(n), 4 * n));
    }
    out
}

/// Multisets of prime-power moduli with product n, each sorted ascending:
/// one per abelian group of order n.
fn abelian_moduli_multisets(n: usize) -> Vec<Vec<usize>> {
    let mut per_prime: Vec<Vec<Vec<usize>>> = Vec::new();
    for (p, e) in factorize(n as u64) {
        let p = p as usize;
        let choices: Vec<Vec<usize>> = partitions(e as usize)
            .into_iter()
            .map(|parts| parts.into_iter().map(|k| p.pow(k as u32)).collect())
            .collect();
        per_prime.push(choices);
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for choices in per_prime {
        let mut next = Vec::new();
        for base in &out {
            for choice in &choices {
                let mut combined = base.clone();
                combined.extend_from_slice(choice);
                next.push(combined);
            }
        }
        out = next;
    }
    for moduli in &mut out {
        moduli.sort_unstable();
    }
    out.sort();
    out
}

/// Integer partitions of n, parts descending, lexicographically sorted.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            current.push(part);
            rec(n - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_counts_by_order() {
        // number of abelian groups of order n is the product of partition
        // counts of the prime exponents
        let count = |n: usize| abelian_moduli_multisets(n).len();
        assert_eq!(count(8), 3);
        assert_eq!(count(16), 5);
        assert_eq!(count(36), 4);
        assert_eq!(count(64), 11);
        assert_eq!(count(60), 2);
        assert_eq!(count(30), 1);
    }

    #[test]
    fn catalog_of_order_eight_abelian_only() {
        let entries: Vec<_> = catalog(8).into_iter().filter(|e| e.abelian).collect();
        assert_eq!(entries.len(), 10);
    }

    #[test]
    fn catalog_flags() {
        let entries = catalog(27);
        assert!(entries
            .iter()
            .any(|e| e.spec == GroupSpec::Heisenberg(3) && e.p_group == Some(3)));
        assert!(entries.iter().any(|e| e.spec == GroupSpec::ModularP3(3)));
        assert!(!entries.iter().any(|e| e.order > 27));
        let full = catalog(2000);
        assert!(full
            .iter()
            .any(|e| e.spec == GroupSpec::Agl32 && !e.enumerable));
        assert!(full.iter().any(|e| e.spec == GroupSpec::Symmetric(6)));
    }

    #[test]
    fn every_catalog_spec_builds_to_its_order() {
        for entry in catalog(64) {
            let g = endograph::build_group(&entry.spec).unwrap();
            assert_eq!(g.order(), entry.order, "{}", entry.spec);
            assert_eq!(g.is_abelian(), entry.abelian, "{}", entry.spec);
        }
    }
}
