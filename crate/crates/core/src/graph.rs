//! Simple undirected graphs with string-labelled vertices, and their signed
//! (+1/-1 edge) variant. Both are value types: transformations return new
//! graphs and never mutate shared state.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};

/// Undirected simple graph. Vertices are indexed densely; labels are kept for
/// I/O and diagnostics. Neighbor lists are sorted, so every traversal is
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<usize>>,
    index: HashMap<String, usize>,
}

impl Graph {
    pub fn new() -> Self {
        Graph {
            labels: Vec::new(),
            adj: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Build from edges given as label pairs; vertices appear in first-seen order.
    pub fn from_edges<I, S>(edges: I) -> Self
    where
        I: IntoIterator<Item = (S, S)>,
        S: Into<String>,
    {
        let mut g = Graph::new();
        for (a, b) in edges {
            let a = g.ensure_vertex(a.into());
            let b = g.ensure_vertex(b.into());
            g.add_edge(a, b);
        }
        g
    }

    pub fn ensure_vertex(&mut self, label: String) -> usize {
        if let Some(&i) = self.index.get(&label) {
            return i;
        }
        let i = self.labels.len();
        self.index.insert(label.clone(), i);
        self.labels.push(label);
        self.adj.push(Vec::new());
        i
    }

    /// Insert an edge; self-loops and duplicates are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        if let Err(pos) = self.adj[a].binary_search(&b) {
            self.adj[a].insert(pos, b);
            let pos_b = self.adj[b].binary_search(&a).unwrap_err();
            self.adj[b].insert(pos_b, a);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn vertex_or_err(&self, label: &str) -> Result<usize> {
        self.vertex(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as (low, high) index pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (a, ns) in self.adj.iter().enumerate() {
            for &b in ns {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn remove_edge(&self, a: usize, b: usize) -> Graph {
        let mut g = self.clone();
        if let Ok(pos) = g.adj[a].binary_search(&b) {
            g.adj[a].remove(pos);
            let pos_b = g.adj[b].binary_search(&a).unwrap();
            g.adj[b].remove(pos_b);
        }
        g
    }

    /// Induced subgraph on `keep` (indices); labels are preserved.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut g = Graph::new();
        for &v in &sorted {
            g.ensure_vertex(self.labels[v].clone());
        }
        let pos: HashMap<usize, usize> = sorted.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        for &v in &sorted {
            for &w in &self.adj[v] {
                if let Some(&pw) = pos.get(&w) {
                    g.add_edge(pos[&v], pw);
                }
            }
        }
        g
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&w| w != v).collect();
        self.induced(&keep)
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    /// Independent cycle count |E| - |V| + comp.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.components().len() - self.vertex_count()
    }

    pub fn is_acyclic(&self) -> bool {
        self.cycle_rank() == 0
    }

    /// Two-coloring of the underlying graph; None when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.vertex_count();
        let mut color = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// Bridge edges as (low, high) pairs.
    pub fn bridges(&self) -> HashSet<(usize, usize)> {
        let n = self.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut out = HashSet::new();
        let mut timer = 0usize;
        // iterative DFS so deep paths cannot overflow the stack
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&(v, parent, ni)) = stack.last() {
                if ni < self.adj[v].len() {
                    stack.last_mut().unwrap().2 += 1;
                    let w = self.adj[v][ni];
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.insert((p.min(v), p.max(v)));
                        }
                    }
                }
            }
        }
        out
    }

    /// Does the edge a-b lie on a cycle (i.e. is it a non-bridge edge)?
    pub fn edge_on_cycle(&self, a: usize, b: usize) -> bool {
        self.has_edge(a, b) && !self.bridges().contains(&(a.min(b), a.max(b)))
    }

    /// A fresh label not yet in the graph, formed by priming `base`.
    pub fn fresh_label(&self, base: &str) -> String {
        let mut label = format!("{}'", base);
        while self.index.contains_key(&label) {
            label.push('\'');
        }
        label
    }

    /// Is this graph a path (allowing the trivial one-vertex path)?
    pub fn is_path(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        self.is_connected() && self.edge_count() == n - 1 && self.adj.iter().all(|ns| ns.len() <= 2)
    }
}

impl Default for Graph {
    fn default() -> Self {
        Graph::new()
    }
}

/// Graph with +1/-1 edge labels.
#[derive(Debug, Clone)]
pub struct SignedGraph {
    graph: Graph,
    signs: HashMap<(usize, usize), i8>,
}

impl SignedGraph {
    pub fn new() -> Self {
        SignedGraph {
            graph: Graph::new(),
            signs: HashMap::new(),
        }
    }

    pub fn ensure_vertex(&mut self, label: String) -> usize {
        self.graph.ensure_vertex(label)
    }

    pub fn add_edge(&mut self, a: usize, b: usize, sign: i8) {
        debug_assert!(sign == 1 || sign == -1);
        if a == b {
            return;
        }
        self.graph.add_edge(a, b);
        self.signs.insert((a.min(b), a.max(b)), sign);
    }

    pub fn sign(&self, a: usize, b: usize) -> Option<i8> {
        self.signs.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn label(&self, v: usize) -> &str {
        self.graph.label(v)
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.graph.vertex(label)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.graph.neighbors(v)
    }

    /// Signed edges as (low, high, sign), sorted.
    pub fn edges(&self) -> Vec<(usize, usize, i8)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(a, b)| (a, b, self.signs[&(a, b)]))
            .collect()
    }

    /// The graph with signs forgotten.
    pub fn underlying(&self) -> &Graph {
        &self.graph
    }

    /// Parse the edge-list format: one edge per line, `u v` or `u v -`
    /// (a trailing minus marks a negative edge), `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<SignedGraph> {
        let mut g = SignedGraph::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let sign = match tokens.len() {
                2 => 1,
                3 if tokens[2] == "-" => -1,
                3 if tokens[2] == "+" => 1,
                _ => {
                    return Err(Error::InvalidEdge {
                        line: lineno + 1,
                        reason: format!("expected `u v` or `u v -`, got {:?}", line),
                    })
                }
            };
            if tokens[0] == tokens[1] {
                return Err(Error::InvalidEdge {
                    line: lineno + 1,
                    reason: format!("self-loop at {:?}", tokens[0]),
                });
            }
            let a = g.ensure_vertex(tokens[0].to_string());
            let b = g.ensure_vertex(tokens[1].to_string());
            if g.sign(a, b).is_some() {
                return Err(Error::InvalidEdge {
                    line: lineno + 1,
                    reason: format!("duplicate edge {} {}", tokens[0], tokens[1]),
                });
            }
            g.add_edge(a, b, sign);
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (a, b, s) in self.edges() {
            out.push_str(self.label(a));
            out.push(' ');
            out.push_str(self.label(b));
            if s < 0 {
                out.push_str(" -");
            }
            out.push('\n');
        }
        out
    }
}

impl Default for SignedGraph {
    fn default() -> Self {
        SignedGraph::new()
    }
}

/// Path graph on n vertices labelled p1..pn.
pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::new();
    let vs: Vec<usize> = (1..=n)
        .map(|i| g.ensure_vertex(format!("p{}", i)))
        .collect();
    for w in vs.windows(2) {
        g.add_edge(w[0], w[1]);
    }
    g
}

/// Cycle graph on n >= 3 vertices labelled v1..vn.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3);
    let mut g = Graph::new();
    let vs: Vec<usize> = (1..=n)
        .map(|i| g.ensure_vertex(format!("v{}", i)))
        .collect();
    for i in 0..n {
        g.add_edge(vs[i], vs[(i + 1) % n]);
    }
    g
}

/// Disjoint union; labels of `b` are primed on collision.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut g = a.clone();
    let mut map = Vec::with_capacity(b.vertex_count());
    for v in 0..b.vertex_count() {
        let mut label = b.label(v).to_string();
        while g.vertex(&label).is_some() {
            label.push('\'');
        }
        map.push(g.ensure_vertex(label));
    }
    for (x, y) in b.edges() {
        g.add_edge(map[x], map[y]);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_structure() {
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")]);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.cycle_rank(), 1);
        assert!(!g.is_acyclic());
        assert!(g.is_connected());
        let d = g.vertex("d").unwrap();
        assert_eq!(g.degree(d), 1);
    }

    #[test]
    fn bridges_and_cycle_edges() {
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")]);
        let (c, d) = (g.vertex("c").unwrap(), g.vertex("d").unwrap());
        let (a, b) = (g.vertex("a").unwrap(), g.vertex("b").unwrap());
        assert!(!g.edge_on_cycle(c, d));
        assert!(g.edge_on_cycle(a, b));
        assert_eq!(g.bridges().len(), 1);
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        assert!(cycle_graph(4).bipartition().is_some());
        assert!(cycle_graph(5).bipartition().is_none());
        assert!(path_graph(7).bipartition().is_some());
    }

    #[test]
    fn induced_preserves_labels() {
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("c", "d")]);
        let sub = g.induced(&[1, 2, 3]);
        assert_eq!(sub.vertex_count(), 3);
        assert_eq!(sub.edge_count(), 2);
        assert!(sub.vertex("b").is_some());
        assert!(sub.vertex("a").is_none());
    }

    #[test]
    fn edge_list_round_trip() {
        let text = "# experiment\na b\nb c -\nc d +\n";
        let g = SignedGraph::parse_edge_list(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        let (b, c) = (g.vertex("b").unwrap(), g.vertex("c").unwrap());
        assert_eq!(g.sign(b, c), Some(-1));
        let again = SignedGraph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(again.edges().len(), 3);
    }

    #[test]
    fn edge_list_rejects_garbage() {
        assert!(matches!(
            SignedGraph::parse_edge_list("a\n"),
            Err(Error::InvalidEdge { line: 1, .. })
        ));
        assert!(matches!(
            SignedGraph::parse_edge_list("a a\n"),
            Err(Error::InvalidEdge { .. })
        ));
        assert!(matches!(
            SignedGraph::parse_edge_list("a b\na b -\n"),
            Err(Error::InvalidEdge { line: 2, .. })
        ));
    }

    #[test]
    fn is_path_recognizes_paths_only() {
        assert!(path_graph(1).is_path());
        assert!(path_graph(5).is_path());
        assert!(!cycle_graph(4).is_path());
        let star = Graph::from_edges([("c", "a"), ("c", "b"), ("c", "d")]);
        assert!(!star.is_path());
    }
}
