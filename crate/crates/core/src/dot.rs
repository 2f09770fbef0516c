//! Graphviz output. Edges are covering pairs only, drawn bottom to top.

use std::fmt::Write;

use crate::error::Result;
use crate::relations::BinaryRelation;
use crate::semilattice::FiniteSemilattice;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram of a partial order with the given node labels.
pub fn hasse(name: &str, labels: &[String], order: &BinaryRelation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(name));
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    for (i, label) in labels.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label={}];", quote(label));
    }
    for (a, b) in order.transitive_reduction().pairs().filter(|(a, b)| a != b) {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the induced order `a ≤ b ⟺ a ∨ b = b`.
pub fn order_diagram(s: &FiniteSemilattice) -> String {
    hasse("order", s.carrier().names(), &s.induced_order())
}

/// Lattice of congruences ordered by inclusion, nodes labelled by partitions.
pub fn congruence_lattice(s: &FiniteSemilattice) -> Result<String> {
    let cons = s.enumerate_congruences()?;
    let labels: Vec<String> = cons.iter().map(|c| c.partition().display_with(s.carrier().names())).collect();
    let inclusion = BinaryRelation::from_fn(cons.len(), |i, j| cons[i].relation().is_subset(cons[j].relation()));
    Ok(hasse("congruences", &labels, &inclusion))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn chain_diagram() {
        let d = order_diagram(&fixtures::chain2());
        assert_eq!(
            d,
            "digraph \"order\" {\n  rankdir=BT;\n  node [shape=plaintext];\n  n0 [label=\"0\"];\n  n1 [label=\"1\"];\n  n0 -> n1;\n}\n"
        );
    }

    #[test]
    fn covering_edges_only() {
        let s = &fixtures::two_chains().semilattice;
        let d = order_diagram(s);
        // a1 < a2 < c and b1 < b2 < c
        assert_eq!(d.matches(" -> ").count(), 4);
        assert!(!d.contains("n0 -> n4"));
        let lattice = congruence_lattice(s).unwrap();
        assert!(lattice.contains("{a1,a2}{b1}{b2}{c}"));
    }
}
