//! Exhaustive endomorphism enumeration by backtracking over generator
//! images.
//!
//! A candidate image for generator s must have order dividing ord(s). Each
//! partial assignment is extended to the subgroup generated so far by
//! breadth-first closure along f(x*s) = f(x)*f(s); any conflict prunes the
//! branch. A surviving full-depth assignment has been checked on every pair
//! (x, s) with s a generator, which forces the homomorphism identity on all
//! of G by induction over generator words.

use super::Mapping;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Size caps for the search.
#[derive(Clone, Debug)]
pub struct EnumLimits {
    /// Largest group order the search will touch at all.
    pub max_order: usize,
    /// Cap on the estimated search size when materializing the full list.
    pub max_maps: u64,
    /// Cap on the estimated search size for streaming traversal.
    pub max_search: u64,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits {
            max_order: 512,
            max_maps: 1 << 20,
            max_search: 1 << 24,
        }
    }
}

impl EnumLimits {
    /// Order cap loosened for the order-720 searches the verification suite
    /// runs explicitly; the map caps stay tight so that large abelian
    /// groups keep taking the basis fast path.
    pub fn generous() -> Self {
        EnumLimits {
            max_order: 2048,
            max_maps: 1 << 19,
            max_search: 1 << 24,
        }
    }
}

/// Product over generators of the number of candidate images (elements whose
/// order divides the generator's order). This bounds the number of branches
/// the search can visit.
pub fn search_estimate(g: &FiniteGroup) -> u128 {
    let n = g.order();
    let orders: Vec<usize> = (0..n).map(|x| g.element_order(x)).collect();
    let mut est: u128 = 1;
    for &s in g.generators() {
        let count = (0..n)
            .filter(|&w| orders[s].is_multiple_of(orders[w]))
            .count();
        est = est.saturating_mul(count as u128);
    }
    est
}

enum Op {
    /// f[elem] := f[parent] * f[gens[slot]]
    Assign { elem: u16, parent: u16, slot: u8 },
    /// require f[product] == f[x] * f[gens[slot]]
    Check { x: u16, slot: u8, product: u16 },
}

struct Level {
    gen: usize,
    /// generator already lies in the closure of the earlier ones
    forced: bool,
    candidates: Vec<u16>,
    script: Vec<Op>,
}

fn build_levels(g: &FiniteGroup) -> Vec<Level> {
    let n = g.order();
    let gens = g.generators();
    let orders: Vec<usize> = (0..n).map(|x| g.element_order(x)).collect();
    let mut pos_of: Vec<bool> = vec![false; n];
    pos_of[0] = true;
    let mut reached: Vec<usize> = vec![0];
    let mut levels = Vec::with_capacity(gens.len());
    for (d, &gen) in gens.iter().enumerate() {
        let mut script = Vec::new();
        let forced = pos_of[gen];
        let old_len = reached.len();
        if !forced {
            pos_of[gen] = true;
            reached.push(gen);
        }
        let mut i = 0;
        while i < reached.len() {
            let x = reached[i];
            let slot_range = if i < old_len { d..d + 1 } else { 0..d + 1 };
            for slot in slot_range {
                let y = g.mul(x, gens[slot]);
                if pos_of[y] {
                    script.push(Op::Check {
                        x: x as u16,
                        slot: slot as u8,
                        product: y as u16,
                    });
                } else {
                    pos_of[y] = true;
                    reached.push(y);
                    script.push(Op::Assign {
                        elem: y as u16,
                        parent: x as u16,
                        slot: slot as u8,
                    });
                }
            }
            i += 1;
        }
        let candidates = if forced {
            Vec::new()
        } else {
            (0..n)
                .filter(|&w| orders[gen].is_multiple_of(orders[w]))
                .map(|w| w as u16)
                .collect()
        };
        levels.push(Level {
            gen,
            forced,
            candidates,
            script,
        });
    }
    debug_assert_eq!(reached.len(), n, "generators must generate");
    levels
}

struct Search<'a, F: FnMut(&[u16])> {
    g: &'a FiniteGroup,
    levels: Vec<Level>,
    f: Vec<u16>,
    visitor: F,
    count: u64,
}

impl<'a, F: FnMut(&[u16])> Search<'a, F> {
    fn run_level(&mut self, d: usize) -> bool {
        let n = self.g.order();
        let table = self.g.table();
        let gens = self.g.generators();
        for op in &self.levels[d].script {
            match *op {
                Op::Assign { elem, parent, slot } => {
                    let fp = self.f[parent as usize] as usize;
                    let fs = self.f[gens[slot as usize]] as usize;
                    self.f[elem as usize] = table[fp * n + fs];
                }
                Op::Check { x, slot, product } => {
                    let fx = self.f[x as usize] as usize;
                    let fs = self.f[gens[slot as usize]] as usize;
                    if self.f[product as usize] != table[fx * n + fs] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn dfs(&mut self, d: usize) {
        if d == self.levels.len() {
            #[cfg(debug_assertions)]
            self.full_verify();
            self.count += 1;
            (self.visitor)(&self.f);
            return;
        }
        if self.levels[d].forced {
            if self.run_level(d) {
                self.dfs(d + 1);
            }
            return;
        }
        let gen = self.levels[d].gen;
        for ci in 0..self.levels[d].candidates.len() {
            self.f[gen] = self.levels[d].candidates[ci];
            if self.run_level(d) {
                self.dfs(d + 1);
            }
        }
    }

    #[cfg(debug_assertions)]
    fn full_verify(&self) {
        let n = self.g.order();
        for x in 0..n {
            for y in 0..n {
                debug_assert_eq!(
                    self.f[self.g.mul(x, y)] as usize,
                    self.g.mul(self.f[x] as usize, self.f[y] as usize),
                    "search produced a non-homomorphism"
                );
            }
        }
    }
}

/// Drive `visitor` over the image array of every endomorphism, in DFS order
/// of generator images. Returns the number of endomorphisms.
pub fn for_each_endomorphism(
    g: &FiniteGroup,
    limits: &EnumLimits,
    visitor: impl FnMut(&[u16]),
) -> Result<u64> {
    if g.order() > limits.max_order {
        return Err(Error::size_hint(
            "enumeration order",
            limits.max_order as u64,
            g.order() as u64,
            "raise the order cap or use the reachability fast path",
        ));
    }
    let est = search_estimate(g);
    if est > limits.max_search as u128 {
        return Err(Error::size_hint(
            "endomorphism search size",
            limits.max_search,
            est.min(u64::MAX as u128) as u64,
            "use the reachability fast path",
        ));
    }
    let mut search = Search {
        g,
        levels: build_levels(g),
        f: vec![0; g.order()],
        visitor,
        count: 0,
    };
    search.dfs(0);
    Ok(search.count)
}

/// Complete, duplicate-free, lexicographically sorted list of endomorphisms.
pub fn enumerate_endomorphisms(g: &FiniteGroup) -> Result<Vec<Mapping>> {
    enumerate_endomorphisms_with(g, &EnumLimits::default())
}

pub fn enumerate_endomorphisms_with(g: &FiniteGroup, limits: &EnumLimits) -> Result<Vec<Mapping>> {
    let est = search_estimate(g);
    if est > limits.max_maps as u128 {
        return Err(Error::size_hint(
            "endomorphism list size",
            limits.max_maps,
            est.min(u64::MAX as u128) as u64,
            "stream with for_each_endomorphism or use the reachability fast path",
        ));
    }
    let mut out = Vec::new();
    for_each_endomorphism(g, limits, |images| {
        out.push(Mapping::new_unchecked(g.label(), images.to_vec()));
    })?;
    out.sort_unstable_by(|a, b| a.images().cmp(b.images()));
    Ok(out)
}

/// The bijective endomorphisms, same ordering contract as
/// [`enumerate_endomorphisms`].
pub fn enumerate_automorphisms(g: &FiniteGroup) -> Result<Vec<Mapping>> {
    enumerate_automorphisms_with(g, &EnumLimits::default())
}

pub fn enumerate_automorphisms_with(g: &FiniteGroup, limits: &EnumLimits) -> Result<Vec<Mapping>> {
    Ok(enumerate_endomorphisms_with(g, limits)?
        .into_iter()
        .filter(|m| m.is_bijective())
        .collect())
}
