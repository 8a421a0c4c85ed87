//! Graphviz DOT export of the Hasse diagram.

use num_rational::BigRational;
use num_traits::ToPrimitive;
use trikit_core::HasseGraph;

/// Cosmetic plane embedding of the exact coordinates
/// $|\tau| \cdot (t_\tau, 1 - t_\tau)$: componentwise $\ln(1 + \cdot)$
/// followed by a quarter turn, so chains fan out above the origin and
/// the empty partition sits at $(0, 0)$.
pub fn embed(x: &BigRational, y: &BigRational) -> (f64, f64) {
    let lx = (1.0 + x.to_f64().unwrap_or(0.0)).ln();
    let ly = (1.0 + y.to_f64().unwrap_or(0.0)).ln();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    ((lx - ly) * r, (lx + ly) * r)
}

/// Renders a Hasse diagram as a Graphviz digraph, edges pointing from
/// each partition to its covers. Node order and edge order follow the
/// graph, so the output is byte-stable. Exact coordinates ride along as
/// `exact_x`/`exact_y` attributes; `pos` carries the embedding.
pub fn hasse_dot(g: &HasseGraph) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for (id, node) in g.nodes.iter().enumerate() {
        let (px, py) = embed(&node.x, &node.y);
        out.push_str(&format!(
            "  n{id} [label=\"{}\", pos=\"{px:.4},{py:.4}!\", exact_x=\"{}\", exact_y=\"{}\"];\n",
            node.partition, node.x, node.y
        ));
    }
    for &(lower, upper) in &g.edges {
        out.push_str(&format!("  n{lower} -> n{upper};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use trikit_core::hasse_graph;

    #[test]
    fn test_hasse_dot_shape() {
        let g = hasse_graph(2);
        let dot = hasse_dot(&g);
        assert!(dot.starts_with("digraph hasse {"));
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("label=\"1,1\""));
        assert!(dot.contains("n0 -> n1;"));
        assert!(dot.ends_with("}\n"));
    }

    #[test]
    fn test_embed_origin() {
        let zero = BigRational::from_integer(0.into());
        let (px, py) = embed(&zero, &zero);
        assert_eq!((px, py), (0.0, 0.0));
    }

    #[test]
    fn test_embed_symmetric_pair_on_axis() {
        let one = BigRational::from_integer(1.into());
        let (px, py) = embed(&one, &one);
        assert!(px.abs() < 1e-12);
        assert!(py > 0.0);
    }
}
