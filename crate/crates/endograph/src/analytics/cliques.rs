//! Bron-Kerbosch maximal clique enumeration with pivoting on bit rows.

use crate::bits::BitRow;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

const CLIQUE_VERTEX_CAP: usize = 2000;

/// Complete list of inclusion-maximal cliques, each ascending, sorted by
/// size descending then lexicographically.
pub fn maximal_cliques(g: &SimpleGraph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    if n > CLIQUE_VERTEX_CAP {
        return Err(Error::size(
            "maximal clique vertices",
            CLIQUE_VERTEX_CAP as u64,
            n as u64,
        ));
    }
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut r = Vec::new();
    let mut p = BitRow::new(n);
    for v in 0..n {
        p.set(v);
    }
    let x = BitRow::new(n);
    bron_kerbosch(g, &mut r, p, x, &mut out);
    out.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn bron_kerbosch(
    g: &SimpleGraph,
    r: &mut Vec<usize>,
    p: BitRow,
    mut x: BitRow,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        let mut clique = r.clone();
        clique.sort_unstable();
        out.push(clique);
        return;
    }
    // pivot: vertex of P union X with most neighbors inside P
    let pivot = p
        .iter_ones()
        .chain(x.iter_ones())
        .max_by_key(|&u| {
            let mut t = p.clone();
            t.intersect_with(g.neighbors(u));
            t.count()
        })
        .unwrap();
    let mut candidates = p.clone();
    for u in g.neighbors(pivot).iter_ones() {
        candidates.clear(u);
    }
    let mut p = p;
    for v in candidates.iter_ones() {
        let mut next_p = p.clone();
        next_p.intersect_with(g.neighbors(v));
        let mut next_x = x.clone();
        next_x.intersect_with(g.neighbors(v));
        r.push(v);
        bron_kerbosch(g, r, next_p, next_x, out);
        r.pop();
        p.clear(v);
        x.set(v);
    }
}
