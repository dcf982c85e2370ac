//! DOT and JSON emission for the graphs the tool produces, plus the JSON
//! parser used for round-trip verification.

use endograph::error::{Error, Result};
use endograph::graph::{CondensedDigraph, Digraph, SimpleGraph};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GraphDoc {
    pub group: String,
    pub kind: String,
    pub vertices: Vec<VertexDoc>,
    pub arcs: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct VertexDoc {
    pub id: usize,
    pub label: String,
    pub class_size: usize,
}

impl GraphDoc {
    pub fn from_digraph(group: &str, kind: &str, d: &Digraph) -> GraphDoc {
        GraphDoc {
            group: group.to_string(),
            kind: kind.to_string(),
            vertices: d
                .labels()
                .iter()
                .enumerate()
                .map(|(id, label)| VertexDoc {
                    id,
                    label: label.clone(),
                    class_size: 1,
                })
                .collect(),
            arcs: d.arcs().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn from_condensed(group: &str, c: &CondensedDigraph) -> GraphDoc {
        GraphDoc {
            group: group.to_string(),
            kind: "compressed".to_string(),
            vertices: c
                .labels()
                .iter()
                .enumerate()
                .map(|(id, label)| VertexDoc {
                    id,
                    label: label.clone(),
                    class_size: c.sizes()[id],
                })
                .collect(),
            arcs: c.arcs().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    /// Canonical serialization; parsing and re-serializing is byte-identical.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn parse_json(text: &str) -> Result<GraphDoc> {
        serde_json::from_str(text).map_err(|e| Error::InvalidParameter(format!("bad JSON: {e}")))
    }

    /// Rebuild the digraph described by this document.
    pub fn to_digraph(&self) -> Digraph {
        let mut d = Digraph::new(self.vertices.iter().map(|v| v.label.clone()).collect());
        for &[a, b] in &self.arcs {
            d.add_arc(a, b);
        }
        d
    }
}

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn digraph_dot(name: &str, d: &Digraph) -> String {
    let mut out = format!("digraph {} {{\n", quote(name));
    for (i, label) in d.labels().iter().enumerate() {
        out.push_str(&format!("  n{i} [label={}];\n", quote(label)));
    }
    for (a, b) in d.arcs() {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn condensed_dot(name: &str, c: &CondensedDigraph) -> String {
    let mut out = format!("digraph {} {{\n", quote(name));
    for (i, label) in c.labels().iter().enumerate() {
        out.push_str(&format!(
            "  n{i} [label={}, size={}];\n",
            quote(label),
            c.sizes()[i]
        ));
    }
    for (a, b) in c.arcs() {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn graph_dot(name: &str, g: &SimpleGraph) -> String {
    let mut out = format!("graph {} {{\n", quote(name));
    for (i, label) in g.labels().iter().enumerate() {
        out.push_str(&format!("  n{i} [label={}];\n", quote(label)));
    }
    for (a, b) in g.edges() {
        out.push_str(&format!("  n{a} -- n{b};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use endograph::build_group;
    use endograph::graph::{compress, endo_digraph};

    #[test]
    fn z2_json_shape() {
        let g = build_group(&"cyclic:2".parse().unwrap()).unwrap();
        let d = endo_digraph(&g).unwrap();
        let doc = GraphDoc::from_digraph(g.label(), "endo", &d);
        assert_eq!(doc.arcs, vec![[1, 0]]);
        assert_eq!(doc.vertices.len(), 2);
        let text = doc.to_json();
        assert!(text.contains("\"kind\": \"endo\""));
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        for spec in ["cyclic:12", "quaternion", "symmetric:3"] {
            let g = build_group(&spec.parse().unwrap()).unwrap();
            let d = endo_digraph(&g).unwrap();
            let doc = GraphDoc::from_digraph(g.label(), "endo", &d);
            let text = doc.to_json();
            let reparsed = GraphDoc::parse_json(&text).unwrap();
            assert_eq!(reparsed.to_json(), text, "{spec}");
            assert!(reparsed.to_digraph().same_arcs(&d));
        }
    }

    #[test]
    fn undirected_dot() {
        let g = build_group(&"cyclic:3".parse().unwrap()).unwrap();
        let eg = endograph::graph::symmetrise(&endo_digraph(&g).unwrap());
        let dot = graph_dot("EG(cyclic:3)", &eg);
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert!(dot.starts_with("graph \"EG(cyclic:3)\""));
    }

    #[test]
    fn compressed_dot_of_z12() {
        let g = build_group(&"cyclic:12".parse().unwrap()).unwrap();
        let c = compress(&g).unwrap();
        let dot = condensed_dot("EG-(cyclic:12)", &c);
        assert_eq!(dot.matches(" -> ").count(), 7);
        for label in ["[1]", "[2]", "[3]", "[4]", "[6]"] {
            assert!(dot.contains(&format!("label=\"{label}\"")), "{label}");
        }
        assert!(dot.contains("size=4"));
    }
}
