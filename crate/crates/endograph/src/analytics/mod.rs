//! Graph invariants: girth, bipartiteness, trees, cliques, exact chromatic
//! number, digraph connectivity and Hamiltonicity, point bases, and
//! certified planarity.

mod cliques;
mod coloring;
mod planarity;

pub use cliques::maximal_cliques;
pub use coloring::{clique_and_chromatic, CliqueChromatic};
pub use planarity::{planarity, verify_verdict, Certificate, KuratowskiKind, PlanarityVerdict};

use crate::bits::BitRow;
use crate::error::{Error, Result};
use crate::graph::{Digraph, SimpleGraph};

/// Edge count, completeness, bipartiteness, tree-ness, and girth (None for
/// forests).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicStats {
    pub edge_count: usize,
    pub is_complete: bool,
    pub is_bipartite: bool,
    pub is_tree: bool,
    pub girth: Option<usize>,
}

pub fn basic_stats(g: &SimpleGraph) -> BasicStats {
    BasicStats {
        edge_count: g.edge_count(),
        is_complete: g.is_complete(),
        is_bipartite: is_bipartite(g),
        is_tree: is_tree(g),
        girth: girth(g),
    }
}

fn is_bipartite(g: &SimpleGraph) -> bool {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for y in g.neighbors(x).iter_ones() {
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    queue.push(y);
                } else if color[y] == color[x] {
                    return false;
                }
            }
        }
    }
    true
}

fn is_tree(g: &SimpleGraph) -> bool {
    let n = g.n();
    if n == 0 {
        return false;
    }
    g.edge_count() == n - 1 && connected_component_count(g) == 1
}

fn connected_component_count(g: &SimpleGraph) -> usize {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut components = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for y in g.neighbors(x).iter_ones() {
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
    }
    components
}

/// Length of a shortest cycle, None for forests. BFS from every vertex; a
/// non-tree edge at depths d(u), d(v) closes a cycle of length at most
/// d(u) + d(v) + 1, and the bound is attained from a vertex on a shortest
/// cycle.
fn girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for start in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x).iter_ones() {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let candidate = dist[x] + dist[y] + 1;
                    if best.is_none_or(|b| candidate < b) {
                        best = Some(candidate);
                    }
                }
            }
        }
    }
    best
}

/// Strong connectivity, digraph completeness, and Hamiltonicity of a
/// digraph. Hamiltonicity is `None` above the backtracking cap (64
/// vertices); a single vertex counts as Hamiltonian, and a 2-cycle counts
/// for two vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub is_strongly_connected: bool,
    pub is_complete_digraph: bool,
    pub has_hamiltonian_cycle: Option<bool>,
}

const HAMILTONIAN_CAP: usize = 64;

pub fn digraph_connectivity(d: &Digraph) -> ConnectivityReport {
    let n = d.n();
    let sc = is_strongly_connected(d);
    let complete = d.arc_count() == n * n.saturating_sub(1);
    let ham = if n >= HAMILTONIAN_CAP {
        None
    } else if n == 1 {
        Some(true)
    } else if !sc {
        // a Hamiltonian cycle visits every vertex, so it forces strong
        // connectivity
        Some(false)
    } else {
        Some(has_hamiltonian_cycle(d))
    };
    ConnectivityReport {
        is_strongly_connected: sc,
        is_complete_digraph: complete,
        has_hamiltonian_cycle: ham,
    }
}

fn is_strongly_connected(d: &Digraph) -> bool {
    let n = d.n();
    if n == 0 {
        return false;
    }
    let forward = reachable_from(d, 0, false);
    let backward = reachable_from(d, 0, true);
    forward.count() == n && backward.count() == n
}

fn reachable_from(d: &Digraph, start: usize, reversed: bool) -> BitRow {
    let n = d.n();
    let mut seen = BitRow::new(n);
    seen.set(start);
    let mut queue = vec![start];
    while let Some(x) = queue.pop() {
        for y in 0..n {
            let arc = if reversed {
                d.has_arc(y, x)
            } else {
                d.has_arc(x, y)
            };
            if arc && !seen.get(y) {
                seen.set(y);
                queue.push(y);
            }
        }
    }
    seen
}

fn has_hamiltonian_cycle(d: &Digraph) -> bool {
    let n = d.n();
    if n == 2 {
        return d.has_arc(0, 1) && d.has_arc(1, 0);
    }
    // backtracking from vertex 0 with an unvisited-successor reachability cut
    let mut visited = BitRow::new(n);
    visited.set(0);
    let mut path = vec![0usize];
    ham_dfs(d, &mut visited, &mut path)
}

fn ham_dfs(d: &Digraph, visited: &mut BitRow, path: &mut Vec<usize>) -> bool {
    let n = d.n();
    let last = *path.last().unwrap();
    if path.len() == n {
        return d.has_arc(last, path[0]);
    }
    for y in d.successors(last).iter_ones() {
        if visited.get(y) {
            continue;
        }
        visited.set(y);
        path.push(y);
        if ham_dfs(d, visited, path) {
            return true;
        }
        path.pop();
        visited.clear(y);
    }
    false
}

/// A vertex with arcs to every other vertex, if one exists. The input must
/// be transitively closed (loopless sense); that precondition is enforced.
pub fn single_point_basis(d: &Digraph) -> Result<Option<usize>> {
    if !d.is_transitive_loopless() {
        return Err(Error::Contract(
            "single_point_basis requires a transitively closed digraph".into(),
        ));
    }
    let n = d.n();
    Ok((0..n).find(|&v| d.out_degree(v) == n - 1))
}
