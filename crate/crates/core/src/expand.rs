//! Cycle-breaking graph expansion that preserves the largest root of the
//! matching polynomial: expanding G at u along a cycle edge uv replaces G by
//! a copy of G without uv, a fresh copy of the component H of G - u that
//! contains v, and a bridge from u to the copy of v. Fully expanding yields a
//! forest with the same largest matching root.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on intermediate expansion size.
pub const DEFAULT_MAX_VERTICES: usize = 10_000;

/// Expand `g` at `u` along the cycle edge `uv`.
pub fn expand_at(g: &Graph, u: &str, v: &str) -> Result<Graph> {
    let ui = g.vertex_or_err(u)?;
    let vi = g.vertex_or_err(v)?;
    if !g.has_edge(ui, vi) {
        return Err(Error::NotAnEdge {
            u: u.to_string(),
            v: v.to_string(),
        });
    }
    if !g.edge_on_cycle(ui, vi) {
        return Err(Error::EdgeNotOnCycle {
            u: u.to_string(),
            v: v.to_string(),
        });
    }
    let without_u = g.remove_vertex(ui);
    let v_in = without_u.vertex(v).expect("v survives removing u");
    let h_comp: Vec<usize> = without_u
        .components()
        .into_iter()
        .find(|c| c.contains(&v_in))
        .expect("v lies in some component");
    let h = without_u.induced(&h_comp);

    let mut k = g.remove_edge(ui, vi);
    let mut copy = Vec::with_capacity(h.vertex_count());
    for x in 0..h.vertex_count() {
        let label = k.fresh_label(h.label(x));
        copy.push(k.ensure_vertex(label));
    }
    for (x, y) in h.edges() {
        k.add_edge(copy[x], copy[y]);
    }
    let v_copy = copy[h.vertex(v).expect("v is in H")];
    let u_in_k = k.vertex(u).expect("u kept its label");
    k.add_edge(u_in_k, v_copy);
    Ok(k)
}

/// Candidate expansions ordered so that progress is guaranteed whenever
/// possible: prefer pairs whose H is acyclic (the cycle rank then strictly
/// drops), then small H, then lexicographic (u, v) labels.
fn best_candidate(g: &Graph) -> Option<(String, String)> {
    let bridges = g.bridges();
    let mut best: Option<(usize, usize, String, String)> = None;
    for (a, b) in g.edges() {
        if bridges.contains(&(a, b)) {
            continue;
        }
        for (u, v) in [(a, b), (b, a)] {
            let without_u = g.remove_vertex(u);
            let v_label = g.label(v);
            let v_in = without_u.vertex(v_label).expect("v survives");
            let comp = without_u
                .components()
                .into_iter()
                .find(|c| c.contains(&v_in))
                .expect("component exists");
            let h = without_u.induced(&comp);
            let key = (
                h.cycle_rank(),
                h.vertex_count(),
                g.label(u).to_string(),
                g.label(v).to_string(),
            );
            if best.as_ref().is_none_or(|b| {
                (b.0, b.1, b.2.as_str(), b.3.as_str())
                    > (key.0, key.1, key.2.as_str(), key.3.as_str())
            }) {
                best = Some(key);
            }
        }
    }
    best.map(|(_, _, u, v)| (u, v))
}

/// Repeat expansion until the graph is acyclic. The resulting forest F
/// satisfies lambda(F) = lambda(g).
pub fn fully_expand(g: &Graph, max_vertices: usize) -> Result<Graph> {
    let mut cur = g.clone();
    while let Some((u, v)) = best_candidate(&cur) {
        cur = expand_at(&cur, &u, &v)?;
        if cur.vertex_count() > max_vertices {
            return Err(Error::ExpansionTooLarge {
                limit: max_vertices,
            });
        }
    }
    debug_assert!(cur.is_acyclic());
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, path_graph};
    use crate::matching::matching_polynomial;
    use crate::roots::largest_root;

    fn lambda(g: &Graph) -> f64 {
        largest_root(&matching_polynomial(g).unwrap(), 1e-12)
            .unwrap()
            .value()
    }

    #[test]
    fn cycle_expands_to_path() {
        // C_n expanded at any cycle edge is P_(2n-1)
        for n in 3..=6 {
            let c = cycle_graph(n);
            let k = expand_at(&c, "v1", "v2").unwrap();
            assert_eq!(k.vertex_count(), 2 * n - 1);
            assert!(k.is_path());
            assert!((lambda(&c) - lambda(&k)).abs() < 1e-12);
        }
    }

    #[test]
    fn vertex_count_adds_component_size() {
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")]);
        // H = component of g - a containing b, which is {b, c, d}
        let k = expand_at(&g, "a", "b").unwrap();
        assert_eq!(k.vertex_count(), g.vertex_count() + 3);
    }

    #[test]
    fn errors_on_bad_edges() {
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")]);
        assert!(matches!(
            expand_at(&g, "a", "d"),
            Err(Error::NotAnEdge { .. })
        ));
        assert!(matches!(
            expand_at(&g, "c", "d"),
            Err(Error::EdgeNotOnCycle { .. })
        ));
        assert!(matches!(
            expand_at(&g, "zz", "d"),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn fully_expand_tree_is_identity() {
        let t = path_graph(6);
        let f = fully_expand(&t, 100).unwrap();
        assert_eq!(f.vertex_count(), 6);
        assert_eq!(f.edge_count(), 5);
    }

    #[test]
    fn c4_fully_expands_to_p7() {
        let f = fully_expand(&cycle_graph(4), 100).unwrap();
        assert!(f.is_path());
        assert_eq!(f.vertex_count(), 7);
        // rho(P7) = 2 cos(pi/8) = lambda(C4)
        let rho = lambda(&f);
        assert!((rho - 2.0 * (std::f64::consts::PI / 8.0).cos()).abs() < 1e-12);
    }

    #[test]
    fn multicyclic_graphs_terminate() {
        // K4 has no acyclic H at the first step; the fallback still terminates
        let k4 = Graph::from_edges([
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ]);
        let f = fully_expand(&k4, 1000).unwrap();
        assert!(f.is_acyclic());
        assert!((lambda(&k4) - lambda(&f)).abs() < 1e-9);
    }

    #[test]
    fn expansion_cap_is_enforced() {
        let k4 = Graph::from_edges([
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ]);
        assert!(matches!(
            fully_expand(&k4, 5),
            Err(Error::ExpansionTooLarge { limit: 5 })
        ));
    }
}
