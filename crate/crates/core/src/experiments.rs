//! Edge-subdivision experiments on the largest matching root.
//!
//! Subdividing an edge on an endpath always raises the largest matching
//! root; subdividing an internal edge not on a cycle lowers it unless the
//! graph is an H graph. For an edge on a cycle the direction is governed by
//! the shape of the two pieces hanging off the cycle at the separating
//! vertex, and can go either way; the classifier below names the two decided
//! configurations and leaves the mixed one unresolved.

use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::growth::matching_lambda;
use crate::roots::DEFAULT_TOLERANCE;

/// Where an edge sits in its graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    /// Deleting it detaches a (possibly trivial) path that continued the
    /// edge: the detached component is a path with the edge's endpoint at
    /// one end. Subdivision here lengthens a pendant path.
    Endpath,
    /// A bridge that is not an endpath edge. The middle of an H graph is the
    /// canonical example: the detached pieces are paths, but the edge hangs
    /// off their interiors.
    InternalAcyclic,
    /// Lies on a cycle.
    OnCycle,
}

impl EdgeClass {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeClass::Endpath => "endpath",
            EdgeClass::InternalAcyclic => "internal_acyclic",
            EdgeClass::OnCycle => "on_cycle",
        }
    }
}

pub fn classify_edge(g: &Graph, u: &str, v: &str) -> Result<EdgeClass> {
    let ui = g.vertex_or_err(u)?;
    let vi = g.vertex_or_err(v)?;
    if !g.has_edge(ui, vi) {
        return Err(Error::NotAnEdge {
            u: u.to_string(),
            v: v.to_string(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.edge_on_cycle(ui, vi) {
        return Ok(EdgeClass::OnCycle);
    }
    let cut = g.remove_edge(ui, vi);
    let anchored = |end: usize| {
        let comps = cut.components();
        let comp = comps
            .iter()
            .find(|c| c.contains(&end))
            .expect("endpoint is in a component");
        let h = cut.induced(comp);
        let e_in = h.vertex(cut.label(end)).expect("endpoint survives");
        h.is_path() && h.degree(e_in) <= 1
    };
    Ok(if anchored(ui) || anchored(vi) {
        EdgeClass::Endpath
    } else {
        EdgeClass::InternalAcyclic
    })
}

/// Replace the edge uv by a path through `new_vertices` fresh vertices.
pub fn subdivide_edge(g: &Graph, u: &str, v: &str, new_vertices: usize) -> Result<Graph> {
    assert!(new_vertices >= 1);
    let ui = g.vertex_or_err(u)?;
    let vi = g.vertex_or_err(v)?;
    if !g.has_edge(ui, vi) {
        return Err(Error::NotAnEdge {
            u: u.to_string(),
            v: v.to_string(),
        });
    }
    let mut out = g.remove_edge(ui, vi);
    let mut prev = out.vertex(u).expect("labels survive edge removal");
    let mut counter = 1usize;
    for _ in 0..new_vertices {
        let label = loop {
            let cand = format!("s{}", counter);
            counter += 1;
            if out.vertex(&cand).is_none() {
                break cand;
            }
        };
        let w = out.ensure_vertex(label);
        out.add_edge(prev, w);
        prev = w;
    }
    let v_out = out.vertex(v).expect("labels survive edge removal");
    out.add_edge(prev, v_out);
    Ok(out)
}

/// Configuration of a cycle edge e = x1 x2 relative to a separating vertex u
/// on its cycle: the components H1 and H2 of (g minus e) minus u holding x1
/// and x2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleSplitCase {
    /// Both H_i are paths with x_i an endvertex: subdivision raises lambda.
    EndpathPair,
    /// Neither H_i is such a path: subdivision lowers lambda.
    NonPathPair,
    /// One of each; no verdict is attached.
    Mixed,
}

impl CycleSplitCase {
    pub fn as_str(self) -> &'static str {
        match self {
            CycleSplitCase::EndpathPair => "case_a",
            CycleSplitCase::NonPathPair => "case_b",
            CycleSplitCase::Mixed => "neither",
        }
    }
}

pub fn classify_cycle_split(g: &Graph, x1: &str, x2: &str, u: &str) -> Result<CycleSplitCase> {
    let x1i = g.vertex_or_err(x1)?;
    let x2i = g.vertex_or_err(x2)?;
    let ui = g.vertex_or_err(u)?;
    if !g.has_edge(x1i, x2i) {
        return Err(Error::NotAnEdge {
            u: x1.to_string(),
            v: x2.to_string(),
        });
    }
    if !g.edge_on_cycle(x1i, x2i) {
        return Err(Error::EdgeNotOnCycle {
            u: x1.to_string(),
            v: x2.to_string(),
        });
    }
    if ui == x1i || ui == x2i {
        return Err(Error::PreconditionViolated(
            "u must be distinct from the endpoints of e".to_string(),
        ));
    }
    let cut = g.remove_edge(x1i, x2i).remove_vertex(ui);
    let x1c = cut.vertex(x1).expect("x1 survives");
    let x2c = cut.vertex(x2).expect("x2 survives");
    let comps = cut.components();
    let c1 = comps
        .iter()
        .find(|c| c.contains(&x1c))
        .expect("x1 in a component");
    let c2 = comps
        .iter()
        .find(|c| c.contains(&x2c))
        .expect("x2 in a component");
    if c1 == c2 {
        return Err(Error::PreconditionViolated(
            "removing u does not separate the endpoints of e".to_string(),
        ));
    }
    let anchored_path = |comp: &[usize], x: usize| {
        let h = cut.induced(comp);
        let xi = h.vertex(cut.label(x)).expect("x is in its own component");
        h.is_path() && h.degree(xi) <= 1
    };
    let a1 = anchored_path(c1, x1c);
    let a2 = anchored_path(c2, x2c);
    Ok(match (a1, a2) {
        (true, true) => CycleSplitCase::EndpathPair,
        (false, false) => CycleSplitCase::NonPathPair,
        _ => CycleSplitCase::Mixed,
    })
}

/// Direction of a lambda^2 series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Increasing,
    Constant,
    Decreasing,
    Mixed,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Increasing => "increasing",
            Verdict::Constant => "constant",
            Verdict::Decreasing => "decreasing",
            Verdict::Mixed => "mixed",
        }
    }

    pub fn from_series(series: &[f64], tol: f64) -> Verdict {
        let mut up = false;
        let mut down = false;
        for w in series.windows(2) {
            let d = w[1] - w[0];
            if d > tol {
                up = true;
            } else if d < -tol {
                down = true;
            }
        }
        match (up, down) {
            (true, false) => Verdict::Increasing,
            (false, true) => Verdict::Decreasing,
            (false, false) => Verdict::Constant,
            (true, true) => Verdict::Mixed,
        }
    }
}

/// Repeated subdivision of one edge, tracking lambda^2. In bipartite mode
/// each step inserts two vertices, preserving bipartiteness and cycle
/// parity, so every graph in the series is a legal row-column graph; raw
/// mode inserts one vertex per step.
#[derive(Debug, Clone)]
pub struct SubdivisionExperiment {
    pub base: Graph,
    pub edge: (String, String),
    pub steps: usize,
    pub bipartite_mode: bool,
    /// lambda^2 of the base graph, then after each step.
    pub series: Vec<f64>,
    /// bipartiteness of each graph in the series.
    pub bipartite_flags: Vec<bool>,
    pub verdict: Verdict,
}

pub const VERDICT_TOLERANCE: f64 = 1e-9;

impl SubdivisionExperiment {
    pub fn run(
        g: &Graph,
        u: &str,
        v: &str,
        steps: usize,
        bipartite_mode: bool,
    ) -> Result<SubdivisionExperiment> {
        assert!(steps >= 1);
        let per_step = if bipartite_mode { 2 } else { 1 };
        let mut series = Vec::with_capacity(steps + 1);
        let mut bipartite_flags = Vec::with_capacity(steps + 1);
        let lam2 = |graph: &Graph| -> Result<f64> {
            let r = matching_lambda(graph, DEFAULT_TOLERANCE)?;
            Ok(r.value() * r.value())
        };
        series.push(lam2(g)?);
        bipartite_flags.push(g.bipartition().is_some());
        for k in 1..=steps {
            let stepped = subdivide_edge(g, u, v, k * per_step)?;
            series.push(lam2(&stepped)?);
            bipartite_flags.push(stepped.bipartition().is_some());
        }
        Ok(SubdivisionExperiment {
            base: g.clone(),
            edge: (u.to_string(), v.to_string()),
            steps,
            bipartite_mode,
            verdict: Verdict::from_series(&series, VERDICT_TOLERANCE),
            series,
            bipartite_flags,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "edge": [self.edge.0, self.edge.1],
            "steps": self.steps,
            "mode": if self.bipartite_mode { "bipartite" } else { "raw" },
            "lambda_squared_series": self.series,
            "bipartite": self.bipartite_flags,
            "verdict": self.verdict.as_str(),
        })
    }
}

/// Cycle of length `cycle_len` with `leaves_a` pendant leaves at v1 and
/// `leaves_b` at v3 (two steps around the cycle). The three benchmark
/// families are (1,1), (2,1) and (2,2) on growing even cycles.
pub fn cycle_with_pendants(cycle_len: usize, leaves_a: usize, leaves_b: usize) -> Graph {
    assert!(cycle_len >= 4);
    let mut g = Graph::new();
    let vs: Vec<usize> = (1..=cycle_len)
        .map(|i| g.ensure_vertex(format!("v{}", i)))
        .collect();
    for i in 0..cycle_len {
        g.add_edge(vs[i], vs[(i + 1) % cycle_len]);
    }
    for x in 1..=leaves_a {
        let leaf = g.ensure_vertex(format!("a{}", x));
        g.add_edge(vs[0], leaf);
    }
    for x in 1..=leaves_b {
        let leaf = g.ensure_vertex(format!("b{}", x));
        g.add_edge(vs[2], leaf);
    }
    g
}

/// Two cherries joined by a path: a path with `path_edges` edges whose two
/// endvertices each carry two pendant leaves. The one internal-subdivision
/// fixed point of the spectral radius.
pub fn h_graph(path_edges: usize) -> Graph {
    assert!(path_edges >= 1);
    let mut g = Graph::new();
    let path: Vec<usize> = (1..=path_edges + 1)
        .map(|i| g.ensure_vertex(format!("c{}", i)))
        .collect();
    for w in path.windows(2) {
        g.add_edge(w[0], w[1]);
    }
    for (end, tag) in [(path[0], "a"), (path[path_edges], "b")] {
        for x in 1..=2 {
            let leaf = g.ensure_vertex(format!("{}{}", tag, x));
            g.add_edge(end, leaf);
        }
    }
    g
}

pub fn is_h_graph(g: &Graph) -> bool {
    let n = g.vertex_count();
    if !g.is_connected() || !g.is_acyclic() || n < 6 {
        return false;
    }
    let mut deg3 = Vec::new();
    for v in 0..n {
        match g.degree(v) {
            1 | 2 => {}
            3 => deg3.push(v),
            _ => return false,
        }
    }
    if deg3.len() != 2 {
        return false;
    }
    deg3.iter()
        .all(|&v| g.neighbors(v).iter().filter(|&&w| g.degree(w) == 1).count() == 2)
}
