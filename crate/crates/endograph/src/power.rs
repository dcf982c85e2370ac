//! Directed power graphs and their comparison with endomorphism digraphs.

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::group::FiniteGroup;
use crate::hom::ReachRelation;

/// Arc x -> y whenever y = x^r for some r >= 1 and x != y. Computed by
/// walking each cyclic subgroup once.
pub fn power_digraph(g: &FiniteGroup) -> Digraph {
    let n = g.order();
    let mut d = Digraph::with_indices(n);
    for x in 1..n {
        // x^2, x^3, ..., x^ord = e; none of these can equal x again before e
        let mut y = g.mul(x, x);
        loop {
            d.add_arc(x, y);
            if y == 0 {
                break;
            }
            y = g.mul(y, x);
        }
    }
    d
}

/// Whether the power digraph sits inside the endomorphism digraph, and
/// whether the two coincide. Defined for abelian groups only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpanningCheck {
    pub is_subgraph: bool,
    pub is_equal: bool,
}

pub fn spanning_subgraph_check(g: &FiniteGroup, rel: &ReachRelation) -> Result<SpanningCheck> {
    require_abelian(g)?;
    let power = power_digraph(g);
    let endo = crate::graph::endo_digraph_from(rel);
    let is_subgraph = power.arcs().iter().all(|&(x, y)| endo.has_arc(x, y));
    let is_equal = is_subgraph && power.arc_count() == endo.arc_count();
    Ok(SpanningCheck {
        is_subgraph,
        is_equal,
    })
}

/// Arcs of the endomorphism digraph that are not power-map arcs; empty
/// exactly when the two digraphs coincide.
pub fn difference_digraph(g: &FiniteGroup, rel: &ReachRelation) -> Result<Digraph> {
    require_abelian(g)?;
    let power = power_digraph(g);
    let endo = crate::graph::endo_digraph_from(rel);
    let mut d = Digraph::with_indices(g.order());
    for (x, y) in endo.arcs() {
        if !power.has_arc(x, y) {
            d.add_arc(x, y);
        }
    }
    Ok(d)
}

fn require_abelian(g: &FiniteGroup) -> Result<()> {
    if !g.is_abelian() {
        return Err(Error::Contract(format!(
            "{} is not abelian; the power/endomorphism comparison is only defined for abelian groups",
            g.label()
        )));
    }
    Ok(())
}
