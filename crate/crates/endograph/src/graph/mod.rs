//! Digraphs, simple graphs, and weighted condensations built from a group's
//! endomorphism reachability and automorphism orbits.

mod iso;

pub use iso::{digraph_isomorphic, find_bijection, strong_isomorphic};

use crate::bits::BitRow;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::{self, Partition, ReachRelation};

/// Vertex cap for strong products.
const PRODUCT_VERTEX_CAP: usize = 10_000;

/// Loop-free directed graph with per-vertex successor bit sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    labels: Vec<String>,
    adj: Vec<BitRow>,
}

impl Digraph {
    pub fn new(labels: Vec<String>) -> Digraph {
        let n = labels.len();
        Digraph {
            labels,
            adj: vec![BitRow::new(n); n],
        }
    }

    pub fn with_indices(n: usize) -> Digraph {
        Digraph::new((0..n).map(|i| i.to_string()).collect())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn add_arc(&mut self, x: usize, y: usize) {
        assert!(x != y, "loops are not representable");
        self.adj[x].set(y);
    }

    #[inline]
    pub fn has_arc(&self, x: usize, y: usize) -> bool {
        self.adj[x].get(y)
    }

    pub fn successors(&self, x: usize) -> &BitRow {
        &self.adj[x]
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().map(|r| r.count()).sum()
    }

    /// Arcs sorted lexicographically.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.arc_count());
        for x in 0..self.n() {
            for y in self.adj[x].iter_ones() {
                out.push((x, y));
            }
        }
        out
    }

    pub fn out_degree(&self, x: usize) -> usize {
        self.adj[x].count()
    }

    pub fn in_degree(&self, y: usize) -> usize {
        (0..self.n()).filter(|&x| self.has_arc(x, y)).count()
    }

    /// Transitive in the loopless sense: arcs (x,y) and (y,z) with x != z
    /// imply the arc (x,z). Word-parallel: succ(y) minus {x} must sit inside
    /// succ(x).
    pub fn is_transitive_loopless(&self) -> bool {
        for x in 0..self.n() {
            for y in self.adj[x].iter_ones() {
                if !self.adj[y].is_subset_of_except(&self.adj[x], x) {
                    return false;
                }
            }
        }
        true
    }

    /// Same arc set (labels ignored).
    pub fn same_arcs(&self, other: &Digraph) -> bool {
        self.adj == other.adj
    }

    /// Induced subgraph dropping vertex 0 (the identity element).
    pub fn delete_identity(&self) -> Digraph {
        let n = self.n();
        assert!(n >= 1);
        let mut out = Digraph::new(self.labels[1..].to_vec());
        for x in 1..n {
            for y in self.adj[x].iter_ones() {
                if y != 0 {
                    out.add_arc(x - 1, y - 1);
                }
            }
        }
        out
    }
}

/// Simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<BitRow>,
}

impl SimpleGraph {
    pub fn new(labels: Vec<String>) -> SimpleGraph {
        let n = labels.len();
        SimpleGraph {
            labels,
            adj: vec![BitRow::new(n); n],
        }
    }

    pub fn with_indices(n: usize) -> SimpleGraph {
        SimpleGraph::new((0..n).map(|i| i.to_string()).collect())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn add_edge(&mut self, x: usize, y: usize) {
        assert!(x != y, "loops are not representable");
        self.adj[x].set(y);
        self.adj[y].set(x);
    }

    #[inline]
    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adj[x].get(y)
    }

    pub fn neighbors(&self, x: usize) -> &BitRow {
        &self.adj[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count()).sum::<usize>() / 2
    }

    /// Edges {x, y} with x < y, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n() {
            for y in self.adj[x].iter_ones() {
                if x < y {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    pub fn delete_identity(&self) -> SimpleGraph {
        let n = self.n();
        assert!(n >= 1);
        let mut out = SimpleGraph::new(self.labels[1..].to_vec());
        for x in 1..n {
            for y in self.adj[x].iter_ones() {
                if y != 0 && x < y {
                    out.add_edge(x - 1, y - 1);
                }
            }
        }
        out
    }
}

/// Quotient digraph on partition blocks, each vertex weighted by block size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CondensedDigraph {
    representatives: Vec<usize>,
    sizes: Vec<usize>,
    labels: Vec<String>,
    adj: Vec<BitRow>,
}

impl CondensedDigraph {
    /// Assemble a condensed digraph from explicit parts (used to transcribe
    /// reference figures for comparison).
    pub fn from_parts(
        representatives: Vec<usize>,
        sizes: Vec<usize>,
        labels: Vec<String>,
        arcs: &[(usize, usize)],
    ) -> Result<CondensedDigraph> {
        let m = representatives.len();
        if sizes.len() != m || labels.len() != m {
            return Err(Error::InvalidParameter(
                "representatives, sizes, and labels must have equal length".into(),
            ));
        }
        let mut adj = vec![BitRow::new(m); m];
        for &(a, b) in arcs {
            if a >= m || b >= m || a == b {
                return Err(Error::InvalidParameter(format!("bad arc ({a}, {b})")));
            }
            adj[a].set(b);
        }
        Ok(CondensedDigraph {
            representatives,
            sizes,
            labels,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.adj[a].get(b)
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().map(|r| r.count()).sum()
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n() {
            for b in self.adj[a].iter_ones() {
                out.push((a, b));
            }
        }
        out
    }

    /// View as a plain digraph (labels and arcs, weights dropped).
    pub fn to_digraph(&self) -> Digraph {
        let mut d = Digraph::new(self.labels.clone());
        for (a, b) in self.arcs() {
            d.add_arc(a, b);
        }
        d
    }
}

/// Arc x -> y whenever x != y and some endomorphism maps x to y.
pub fn endo_digraph(g: &FiniteGroup) -> Result<Digraph> {
    Ok(endo_digraph_from(&hom::endo_reachability(g)?))
}

pub fn endo_digraph_from(rel: &ReachRelation) -> Digraph {
    let n = rel.n();
    let mut d = Digraph::with_indices(n);
    for x in 0..n {
        for y in 0..n {
            if x != y && rel.reaches(x, y) {
                d.add_arc(x, y);
            }
        }
    }
    d
}

/// All ordered pairs of distinct elements sharing an automorphism orbit.
pub fn auto_digraph(g: &FiniteGroup) -> Result<Digraph> {
    Ok(auto_digraph_from(&hom::automorphism_orbits(g)?))
}

pub fn auto_digraph_from(orbits: &Partition) -> Digraph {
    let n: usize = orbits.blocks().iter().map(|b| b.len()).sum();
    let mut d = Digraph::with_indices(n);
    for block in orbits.blocks() {
        for &x in block {
            for &y in block {
                if x != y {
                    d.add_arc(x, y);
                }
            }
        }
    }
    d
}

/// Ignore directions, suppress double edges.
pub fn symmetrise(d: &Digraph) -> SimpleGraph {
    let mut g = SimpleGraph::new(d.labels().to_vec());
    for (x, y) in d.arcs() {
        if !g.has_edge(x, y) {
            g.add_edge(x, y);
        }
    }
    g
}

/// Delete the identity and shrink each automorphism orbit to one weighted
/// vertex; the arc between two blocks is well defined because reachability
/// is constant across orbit pairs.
pub fn compress(g: &FiniteGroup) -> Result<CondensedDigraph> {
    let rel = hom::endo_reachability(g)?;
    let orbits = hom::automorphism_orbits(g)?;
    compress_from(&rel, &orbits)
}

pub fn compress_from(rel: &ReachRelation, orbits: &Partition) -> Result<CondensedDigraph> {
    let blocks: Vec<&Vec<usize>> = orbits.blocks().iter().filter(|b| b[0] != 0).collect();
    quotient(rel, &blocks, |rep| format!("[{rep}]"))
}

/// Quotient by endomorphism (indifference) classes, identity block kept;
/// the result is checked to be a strict partial order.
pub fn condense_endo_classes(g: &FiniteGroup) -> Result<CondensedDigraph> {
    let rel = hom::endo_reachability(g)?;
    let classes = hom::classes_from_relation(&rel);
    condense_endo_classes_from(&rel, &classes)
}

pub fn condense_endo_classes_from(
    rel: &ReachRelation,
    classes: &Partition,
) -> Result<CondensedDigraph> {
    let blocks: Vec<&Vec<usize>> = classes.blocks().iter().collect();
    let c = quotient(rel, &blocks, |rep| format!("[{rep}]"))?;
    // strict partial order: irreflexive by construction; check the rest
    for a in 0..c.n() {
        for b in c.adj[a].iter_ones() {
            if c.adj[b].get(a) {
                return Err(Error::Contract(format!(
                    "class quotient not antisymmetric at blocks {a}, {b}"
                )));
            }
            for z in c.adj[b].iter_ones() {
                if z != a && !c.adj[a].get(z) {
                    return Err(Error::Contract(format!(
                        "class quotient not transitive at blocks {a}, {b}, {z}"
                    )));
                }
            }
        }
    }
    Ok(c)
}

fn quotient(
    rel: &ReachRelation,
    blocks: &[&Vec<usize>],
    label_of: impl Fn(usize) -> String,
) -> Result<CondensedDigraph> {
    let m = blocks.len();
    let mut out = CondensedDigraph {
        representatives: blocks.iter().map(|b| b[0]).collect(),
        sizes: blocks.iter().map(|b| b.len()).collect(),
        labels: blocks.iter().map(|b| label_of(b[0])).collect(),
        adj: vec![BitRow::new(m); m],
    };
    for a in 0..m {
        for b in 0..m {
            if a != b && rel.reaches(blocks[a][0], blocks[b][0]) {
                out.adj[a].set(b);
            }
        }
    }
    Ok(out)
}

/// Strong product: an arc from (x, y) to (x', y') when each coordinate
/// either moves along an arc or stays fixed, and the pair actually moves.
/// Vertex (x, y) has index x * n2 + y.
pub fn strong_product(d1: &Digraph, d2: &Digraph) -> Result<Digraph> {
    let (n1, n2) = (d1.n(), d2.n());
    let n = n1.saturating_mul(n2);
    if n > PRODUCT_VERTEX_CAP {
        return Err(Error::size(
            "strong product vertices",
            PRODUCT_VERTEX_CAP as u64,
            n as u64,
        ));
    }
    let labels = (0..n1)
        .flat_map(|x| {
            let d2labels = d2.labels();
            let xl = d1.labels()[x].clone();
            d2labels
                .iter()
                .map(move |yl| format!("({xl},{yl})"))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut out = Digraph::new(labels);
    for x in 0..n1 {
        for y in 0..n2 {
            let v = x * n2 + y;
            for x2 in d1.successors(x).iter_ones() {
                out.add_arc(v, x2 * n2 + y);
                for y2 in d2.successors(y).iter_ones() {
                    out.add_arc(v, x2 * n2 + y2);
                }
            }
            for y2 in d2.successors(y).iter_ones() {
                out.add_arc(v, x * n2 + y2);
            }
        }
    }
    Ok(out)
}
