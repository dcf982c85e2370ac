//! Endomorphism and automorphism machinery: verified self-maps, exhaustive
//! enumeration, the reachability preorder ("some endomorphism maps x to y"),
//! automorphism orbits, and indifference (endomorphism) classes.

mod abelian;
mod enumerate;

pub use abelian::{coordinate_valuations, orbits_via_basis, reachability_via_basis};
pub use enumerate::{
    enumerate_automorphisms, enumerate_automorphisms_with, enumerate_endomorphisms,
    enumerate_endomorphisms_with, for_each_endomorphism, search_estimate, EnumLimits,
};

use crate::bits::BitMat;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A verified multiplication-preserving self-map of a group, stored as the
/// image array over element indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Mapping {
    group: String,
    images: Vec<u16>,
}

impl Mapping {
    pub(crate) fn new_unchecked(group: &str, images: Vec<u16>) -> Mapping {
        Mapping {
            group: group.to_string(),
            images,
        }
    }

    pub fn group_label(&self) -> &str {
        &self.group
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| i == v as usize)
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        for &v in &self.images {
            if seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        true
    }

    /// Left-to-right composition: (self then other)(x) = other(self(x)).
    pub fn compose(&self, other: &Mapping) -> Mapping {
        Mapping {
            group: self.group.clone(),
            images: self
                .images
                .iter()
                .map(|&v| other.images[v as usize])
                .collect(),
        }
    }
}

/// Accepts a raw image array iff f(xy) = f(x)f(y) holds on all |G|^2 pairs;
/// a rejection carries a witness pair.
pub fn verify_homomorphism(g: &FiniteGroup, images: &[usize]) -> Result<Mapping> {
    let n = g.order();
    if images.len() != n {
        return Err(Error::InvalidParameter(format!(
            "image array has length {}, group has order {n}",
            images.len()
        )));
    }
    if let Some(bad) = images.iter().position(|&v| v >= n) {
        return Err(Error::InvalidParameter(format!(
            "image of element {bad} out of range"
        )));
    }
    for x in 0..n {
        for y in 0..n {
            if images[g.mul(x, y)] != g.mul(images[x], images[y]) {
                return Err(Error::NotHomomorphism { x, y });
            }
        }
    }
    Ok(Mapping {
        group: g.label().to_string(),
        images: images.iter().map(|&v| v as u16).collect(),
    })
}

/// The boolean matrix of the endomorphism preorder: entry (x, y) says some
/// endomorphism maps x to y. Reflexive and transitive by construction.
#[derive(Clone, Debug)]
pub struct ReachRelation {
    group: String,
    mat: BitMat,
}

impl ReachRelation {
    pub(crate) fn new(group: &str, mat: BitMat) -> ReachRelation {
        ReachRelation {
            group: group.to_string(),
            mat,
        }
    }

    pub fn group_label(&self) -> &str {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.mat.n()
    }

    #[inline]
    pub fn reaches(&self, x: usize, y: usize) -> bool {
        self.mat.get(x, y)
    }

    pub fn matrix(&self) -> &BitMat {
        &self.mat
    }

    /// Reflexivity, transitivity, arcs into the identity from everywhere,
    /// and no arc out of the identity.
    pub fn verify_invariants(&self) -> Result<()> {
        let n = self.n();
        for x in 0..n {
            if !self.reaches(x, x) {
                return Err(Error::Contract(format!("relation not reflexive at {x}")));
            }
            if !self.reaches(x, 0) {
                return Err(Error::Contract(format!(
                    "element {x} cannot reach identity"
                )));
            }
        }
        for y in 1..n {
            if self.reaches(0, y) {
                return Err(Error::Contract(format!("identity reaches {y}")));
            }
        }
        if !self.mat.is_transitive() {
            return Err(Error::Contract("relation not transitive".into()));
        }
        Ok(())
    }
}

/// A labeled partition of the element set; blocks are ascending and ordered
/// by their smallest member, which doubles as the block representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    group: String,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    /// Normalizes an arbitrary block-id labeling into canonical form.
    pub fn from_ids(group: &str, ids: &[usize]) -> Partition {
        let n = ids.len();
        let mut first_seen: Vec<(usize, usize)> = Vec::new(); // (id, first element)
        for (x, &id) in ids.iter().enumerate() {
            if !first_seen.iter().any(|&(i, _)| i == id) {
                first_seen.push((id, x));
            }
        }
        first_seen.sort_by_key(|&(_, x)| x);
        let mut blocks = vec![Vec::new(); first_seen.len()];
        let mut block_of = vec![0; n];
        for (x, &id) in ids.iter().enumerate() {
            let b = first_seen.iter().position(|&(i, _)| i == id).unwrap();
            blocks[b].push(x);
            block_of[x] = b;
        }
        Partition {
            group: group.to_string(),
            blocks,
            block_of,
        }
    }

    pub fn group_label(&self) -> &str {
        &self.group
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn representative(&self, block: usize) -> usize {
        self.blocks[block][0]
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    /// True if every block of self lies inside a single block of other.
    pub fn refines(&self, other: &Partition) -> bool {
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&x| other.block_of(x) == other.block_of(b[0])))
    }
}

/// Route endomorphism reachability: exhaustive enumeration when the
/// generator-image search is small, the basis-image argument for abelian
/// groups above that, a streaming search otherwise.
pub fn endo_reachability(g: &FiniteGroup) -> Result<ReachRelation> {
    endo_reachability_with(g, &EnumLimits::default())
}

pub fn endo_reachability_with(g: &FiniteGroup, limits: &EnumLimits) -> Result<ReachRelation> {
    let est = search_estimate(g);
    if est > limits.max_maps as u128 && g.abelian_basis().is_some() {
        return reachability_via_basis(g);
    }
    if est > limits.max_search as u128 {
        return Err(Error::size_hint(
            "endomorphism search size",
            limits.max_search,
            est.min(u64::MAX as u128) as u64,
            "no abelian basis available for the fast path",
        ));
    }
    endo_reachability_via_enumeration(g, limits)
}

/// The enumeration route: OR together the graphs of all endomorphisms.
pub fn endo_reachability_via_enumeration(
    g: &FiniteGroup,
    limits: &EnumLimits,
) -> Result<ReachRelation> {
    let n = g.order();
    let mut mat = BitMat::new(n);
    for_each_endomorphism(g, limits, |images| {
        for (x, &fx) in images.iter().enumerate() {
            mat.set(x, fx as usize);
        }
    })?;
    let rel = ReachRelation::new(g.label(), mat);
    debug_assert!(rel.verify_invariants().is_ok());
    Ok(rel)
}

/// Orbits of the automorphism group on the elements.
pub fn automorphism_orbits(g: &FiniteGroup) -> Result<Partition> {
    automorphism_orbits_with(g, &EnumLimits::default())
}

pub fn automorphism_orbits_with(g: &FiniteGroup, limits: &EnumLimits) -> Result<Partition> {
    let est = search_estimate(g);
    if est > limits.max_maps as u128 && g.abelian_basis().is_some() {
        return orbits_via_basis(g);
    }
    if est > limits.max_search as u128 {
        return Err(Error::size_hint(
            "automorphism search size",
            limits.max_search,
            est.min(u64::MAX as u128) as u64,
            "no abelian basis available for the fast path",
        ));
    }
    orbits_via_enumeration(g, limits)
}

pub fn orbits_via_enumeration(g: &FiniteGroup, limits: &EnumLimits) -> Result<Partition> {
    let n = g.order();
    let mut uf = UnionFind::new(n);
    for_each_endomorphism(g, limits, |images| {
        // automorphisms are the bijective endomorphisms
        let mut seen = vec![false; n];
        if images.iter().all(|&v| {
            let fresh = !seen[v as usize];
            seen[v as usize] = true;
            fresh
        }) {
            for (x, &fx) in images.iter().enumerate() {
                uf.union(x, fx as usize);
            }
        }
    })?;
    let ids: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    Ok(Partition::from_ids(g.label(), &ids))
}

/// Mutual-reachability classes of the endomorphism preorder.
pub fn endomorphism_classes(g: &FiniteGroup) -> Result<Partition> {
    endomorphism_classes_with(g, &EnumLimits::default())
}

pub fn endomorphism_classes_with(g: &FiniteGroup, limits: &EnumLimits) -> Result<Partition> {
    let rel = endo_reachability_with(g, limits)?;
    Ok(classes_from_relation(&rel))
}

pub fn classes_from_relation(rel: &ReachRelation) -> Partition {
    let n = rel.n();
    let mut ids = vec![usize::MAX; n];
    for x in 0..n {
        if ids[x] != usize::MAX {
            continue;
        }
        ids[x] = x;
        for y in x + 1..n {
            if rel.reaches(x, y) && rel.reaches(y, x) {
                ids[y] = x;
            }
        }
    }
    Partition::from_ids(rel.group_label(), &ids)
}

/// Kernel (preimage of the identity, checked normal) and image of a mapping.
#[derive(Debug, Clone)]
pub struct KernelImage {
    pub kernel: Vec<usize>,
    pub image: Vec<usize>,
}

pub fn kernel_and_image(g: &FiniteGroup, m: &Mapping) -> Result<KernelImage> {
    let n = g.order();
    let kernel: Vec<usize> = (0..n).filter(|&x| m.apply(x) == 0).collect();
    let mut image: Vec<usize> = m.images().iter().map(|&v| v as usize).collect();
    image.sort_unstable();
    image.dedup();
    if kernel.len() * image.len() != n {
        return Err(Error::Contract(format!(
            "|kernel| * |image| = {} * {} != {n}",
            kernel.len(),
            image.len()
        )));
    }
    let in_kernel = {
        let mut v = vec![false; n];
        for &x in &kernel {
            v[x] = true;
        }
        v
    };
    for &x in &kernel {
        for t in 0..n {
            if !in_kernel[g.mul(g.mul(t, x), g.inv(t))] {
                return Err(Error::Contract(format!(
                    "kernel not normal: conjugate of {x} by {t} escapes"
                )));
            }
        }
    }
    Ok(KernelImage { kernel, image })
}

/// The arrow criterion for abelian p-groups with exponent profile
/// m_1 <= ... <= m_k: an element with valuation vector b maps to one with
/// valuation vector c iff for every i some j has
/// b_j + max(0, m_i - m_j) <= c_i. Valuation m_i encodes a zero coordinate.
pub fn abelian_p_arrow(profile: &[usize], p: usize, b: &[usize], c: &[usize]) -> Result<bool> {
    if p < 2 || !is_prime(p) {
        return Err(Error::InvalidParameter(format!("p = {p} is not prime")));
    }
    if profile.is_empty() || profile.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidParameter(
            "exponent profile must be nonempty and nondecreasing".into(),
        ));
    }
    if profile.contains(&0) {
        return Err(Error::InvalidParameter("exponents must be positive".into()));
    }
    if b.len() != profile.len() || c.len() != profile.len() {
        return Err(Error::InvalidParameter(
            "valuation vectors must match the profile length".into(),
        ));
    }
    for i in 0..profile.len() {
        if b[i] > profile[i] || c[i] > profile[i] {
            return Err(Error::InvalidParameter(format!(
                "valuation out of range at coordinate {i}"
            )));
        }
    }
    let k = profile.len();
    Ok((0..k).all(|i| (0..k).any(|j| b[j] + profile[i].saturating_sub(profile[j]) <= c[i])))
}

/// For groups that are homocyclic at every prime (all cyclic factors of a
/// given prime share one exponent), reachability is exactly order
/// divisibility: returns element_order(y) | element_order(x).
pub fn homocyclic_arrow(g: &FiniteGroup, x: usize, y: usize) -> Result<bool> {
    let basis = g.abelian_basis().ok_or_else(|| {
        Error::Contract("homocyclic_arrow needs a group built from an abelian spec".into())
    })?;
    if !is_homocyclic_per_prime(basis.moduli()) {
        return Err(Error::Contract(format!(
            "moduli {:?} are not homocyclic per prime",
            basis.moduli()
        )));
    }
    Ok(g.element_order(x).is_multiple_of(g.element_order(y)))
}

/// Every prime appearing in the moduli does so with a single exponent.
pub fn is_homocyclic_per_prime(moduli: &[usize]) -> bool {
    let mut exponents: Vec<(u64, u32)> = Vec::new();
    for &m in moduli {
        for (p, e) in crate::numtheory::factorize(m as u64) {
            match exponents.iter().find(|&&(q, _)| q == p) {
                Some(&(_, e0)) if e0 != e => return false,
                Some(_) => {}
                None => exponents.push((p, e)),
            }
        }
    }
    true
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

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so representatives stay minimal
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}
