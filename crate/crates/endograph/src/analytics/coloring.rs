//! Exact clique number and chromatic number.
//!
//! The chromatic search is branch and bound seeded at the clique lower
//! bound. The target graphs are comparability graphs of preorders where
//! the two numbers agree, but that is a statement under test: the search
//! never assumes it and will push past the clique bound if it must.

use super::cliques::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

const CHROMATIC_VERTEX_CAP: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueChromatic {
    pub clique_number: usize,
    pub chromatic_number: usize,
}

pub fn clique_and_chromatic(g: &SimpleGraph) -> Result<CliqueChromatic> {
    let n = g.n();
    if n == 0 {
        return Ok(CliqueChromatic {
            clique_number: 0,
            chromatic_number: 0,
        });
    }
    if n > CHROMATIC_VERTEX_CAP {
        return Err(Error::size(
            "exact chromatic vertices",
            CHROMATIC_VERTEX_CAP as u64,
            n as u64,
        ));
    }
    let cliques = maximal_cliques(g)?;
    let best_clique = cliques.first().cloned().unwrap_or_default();
    let omega = best_clique.len();
    let mut k = omega.max(1);
    loop {
        if colorable(g, k, &best_clique) {
            return Ok(CliqueChromatic {
                clique_number: omega,
                chromatic_number: k,
            });
        }
        k += 1;
    }
}

/// Complete k-colorability backtracking. Vertices of a maximum clique are
/// pre-colored 0..clique-1 (any proper coloring can be renamed to agree, so
/// this only breaks symmetry). Branching picks the most saturated vertex.
fn colorable(g: &SimpleGraph, k: usize, seed_clique: &[usize]) -> bool {
    let n = g.n();
    if seed_clique.len() > k {
        return false;
    }
    let mut colors = vec![usize::MAX; n];
    for (c, &v) in seed_clique.iter().enumerate() {
        colors[v] = c;
    }
    color_dfs(g, k, &mut colors, seed_clique.len())
}

fn color_dfs(g: &SimpleGraph, k: usize, colors: &mut [usize], used: usize) -> bool {
    let n = g.n();
    // most saturated uncolored vertex, ties by degree then index
    let mut pick = usize::MAX;
    let mut pick_key = (0usize, 0usize);
    let mut scratch = vec![false; k];
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        scratch.iter_mut().for_each(|b| *b = false);
        let mut saturation = 0;
        for w in g.neighbors(v).iter_ones() {
            let c = colors[w];
            if c != usize::MAX && !scratch[c] {
                scratch[c] = true;
                saturation += 1;
            }
        }
        let key = (saturation, g.degree(v));
        if pick == usize::MAX || key > pick_key {
            pick = v;
            pick_key = key;
        }
    }
    if pick == usize::MAX {
        return true;
    }
    let mut forbidden = vec![false; k];
    for w in g.neighbors(pick).iter_ones() {
        if colors[w] != usize::MAX {
            forbidden[colors[w]] = true;
        }
    }
    // allow one fresh color beyond those already in use
    let limit = k.min(used + 1);
    for c in 0..limit {
        if forbidden[c] {
            continue;
        }
        colors[pick] = c;
        if color_dfs(g, k, colors, used.max(c + 1)) {
            return true;
        }
        colors[pick] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_cycles() {
        let mut k4 = SimpleGraph::with_indices(4);
        for x in 0..4 {
            for y in x + 1..4 {
                k4.add_edge(x, y);
            }
        }
        let r = clique_and_chromatic(&k4).unwrap();
        assert_eq!((r.clique_number, r.chromatic_number), (4, 4));

        let mut c5 = SimpleGraph::with_indices(5);
        for i in 0..5 {
            c5.add_edge(i, (i + 1) % 5);
        }
        let r = clique_and_chromatic(&c5).unwrap();
        // the 5-cycle is the classic gap: clique 2, chromatic 3
        assert_eq!((r.clique_number, r.chromatic_number), (2, 3));
    }

    #[test]
    fn bipartite_needs_two() {
        let mut g = SimpleGraph::with_indices(6);
        for x in 0..3 {
            for y in 3..6 {
                g.add_edge(x, y);
            }
        }
        let r = clique_and_chromatic(&g).unwrap();
        assert_eq!((r.clique_number, r.chromatic_number), (2, 2));
    }

    #[test]
    fn empty_and_edgeless() {
        let g = SimpleGraph::with_indices(3);
        let r = clique_and_chromatic(&g).unwrap();
        assert_eq!((r.clique_number, r.chromatic_number), (1, 1));
    }
}
