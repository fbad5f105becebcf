//! DOT rendering of graph-like networks. Nodes and edges are emitted in
//! canonical order so output is diffable.

use crate::{Error, Result};

use super::{Model, Network, Payload};

/// Renders a simple graph, directed graph, or multigraph as DOT. Multigraph
/// multiplicity is rendered as parallel edges.
pub fn to_dot(net: &Network) -> Result<String> {
    let mut out = String::new();
    let directed = matches!(net.model(), Model::Dg);
    let (keyword, connector) = if directed {
        ("digraph", "->")
    } else {
        ("graph", "--")
    };
    out.push_str(&format!("{keyword} network {{\n"));
    for v in 1..=net.arity() {
        out.push_str(&format!("  {v};\n"));
    }
    match net.payload() {
        Payload::Edges(set) => {
            for e in set {
                let (i, j) = e.one_indexed();
                out.push_str(&format!("  {i} {connector} {j};\n"));
            }
        }
        Payload::Arcs(set) => {
            for &(i, j) in set {
                out.push_str(&format!("  {} {connector} {};\n", i + 1, j + 1));
            }
        }
        Payload::Labels(map) => {
            for (e, v) in map {
                let (i, j) = e.one_indexed();
                let mult = match v {
                    crate::monoid::MonoidElement::Nat(n) => *n,
                    crate::monoid::MonoidElement::Bool(b) => *b as u64,
                };
                for _ in 0..mult {
                    out.push_str(&format!("  {i} {connector} {j};\n"));
                }
            }
        }
        _ => {
            return Err(Error::ModelMismatch(format!(
                "no DOT rendering for {}",
                net.model()
            )))
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_simple_graph() {
        let g = Network::simple_graph(3, &[(1, 2), (2, 3)]).unwrap();
        let dot = to_dot(&g).unwrap();
        assert_eq!(
            dot,
            "graph network {\n  1;\n  2;\n  3;\n  1 -- 2;\n  2 -- 3;\n}\n"
        );
    }

    #[test]
    fn renders_multiplicity_as_parallel_edges() {
        let g = Network::multigraph_plus(2, &[(1, 2, 3)]).unwrap();
        let dot = to_dot(&g).unwrap();
        assert_eq!(dot.matches("1 -- 2;").count(), 3);
    }

    #[test]
    fn renders_directed_graph() {
        let g = Network::directed_graph(2, &[(2, 1)]).unwrap();
        let dot = to_dot(&g).unwrap();
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("2 -> 1;"));
    }

    #[test]
    fn rejects_partitions() {
        let p = Network::empty(Model::PartitionJoin, 3).unwrap();
        assert!(to_dot(&p).is_err());
    }
}
