//! The signed row-column graph of a grid matrix, cycle-parity analysis, and
//! consistent orientations of the standard figure.
//!
//! Column i gets vertex `c<i>` and row j gets vertex `r<j>`; each nonzero cell
//! contributes one edge labelled with its sign. A switching function found by
//! sign propagation over a spanning forest both witnesses the absence of
//! negative cycles and reads off directly as a consistent orientation.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, SignedGraph};
use crate::matrix::GridMatrix;

/// Cycle-parity and connectivity summary of a signed graph.
#[derive(Debug, Clone)]
pub struct ParityReport {
    pub connected: bool,
    pub component_count: usize,
    pub has_cycle: bool,
    pub has_negative_cycle: bool,
    /// Odd-length cycle in the underlying unsigned graph (non-bipartiteness).
    pub has_odd_cycle: bool,
    /// Present exactly when there is no negative cycle; then
    /// switching[u] * switching[v] equals the sign of every edge uv.
    pub switching: Option<BTreeMap<String, i8>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColumnDir {
    Leftward,
    Rightward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowDir {
    Downward,
    Upward,
}

/// A consistent orientation of the standard figure: one horizontal direction
/// per column and one vertical direction per row, compatible with each cell's
/// slope (a +1 cell traversed rightward moves upward, a -1 cell downward).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    column_dir: Vec<ColumnDir>,
    row_dir: Vec<RowDir>,
}

impl Orientation {
    pub fn new(column_dir: Vec<ColumnDir>, row_dir: Vec<RowDir>) -> Self {
        Orientation {
            column_dir,
            row_dir,
        }
    }

    pub fn column(&self, i: usize) -> ColumnDir {
        self.column_dir[i - 1]
    }

    pub fn row(&self, j: usize) -> RowDir {
        self.row_dir[j - 1]
    }

    pub fn columns(&self) -> usize {
        self.column_dir.len()
    }

    pub fn rows(&self) -> usize {
        self.row_dir.len()
    }

    /// Check the slope constraint at every nonzero cell of `m`.
    pub fn validate(&self, m: &GridMatrix) -> Result<()> {
        if self.columns() != m.columns() || self.rows() != m.rows() {
            return Err(Error::InvalidOrientation { col: 0, row: 0 });
        }
        for (i, j, v) in m.nonzero_cells() {
            let rightward = self.column(i) == ColumnDir::Rightward;
            let upward = self.row(j) == RowDir::Upward;
            let ok = if v == 1 {
                rightward == upward
            } else {
                rightward != upward
            };
            if !ok {
                return Err(Error::InvalidOrientation { col: i, row: j });
            }
        }
        Ok(())
    }

    /// The block-centre orientation of a doubly refined figure: every oblique
    /// segment points towards the centre of its 2x2 block.
    pub fn block_centre(t: usize, u: usize) -> Orientation {
        assert!(t.is_multiple_of(2) && u.is_multiple_of(2));
        Orientation {
            column_dir: (1..=t)
                .map(|i| {
                    if i % 2 == 1 {
                        ColumnDir::Rightward
                    } else {
                        ColumnDir::Leftward
                    }
                })
                .collect(),
            row_dir: (1..=u)
                .map(|j| {
                    if j % 2 == 1 {
                        RowDir::Upward
                    } else {
                        RowDir::Downward
                    }
                })
                .collect(),
        }
    }

    /// Flip every direction; consistency is preserved.
    pub fn flipped(&self) -> Orientation {
        Orientation {
            column_dir: self
                .column_dir
                .iter()
                .map(|d| match d {
                    ColumnDir::Leftward => ColumnDir::Rightward,
                    ColumnDir::Rightward => ColumnDir::Leftward,
                })
                .collect(),
            row_dir: self
                .row_dir
                .iter()
                .map(|d| match d {
                    RowDir::Downward => RowDir::Upward,
                    RowDir::Upward => RowDir::Downward,
                })
                .collect(),
        }
    }
}

/// The signed row-column graph G(M): vertices c1..ct and r1..ru, and an edge
/// c_i r_j labelled M_ij for every nonzero cell. Isolated vertices (empty
/// columns or rows) are retained.
pub fn row_column_graph(m: &GridMatrix) -> SignedGraph {
    let mut g = SignedGraph::new();
    let cols: Vec<usize> = (1..=m.columns())
        .map(|i| g.ensure_vertex(format!("c{}", i)))
        .collect();
    let rows: Vec<usize> = (1..=m.rows())
        .map(|j| g.ensure_vertex(format!("r{}", j)))
        .collect();
    for (i, j, v) in m.nonzero_cells() {
        g.add_edge(cols[i - 1], rows[j - 1], v);
    }
    g
}

struct SwitchingScan {
    sigma: Vec<i8>,
    parent: Vec<usize>,
    component_count: usize,
    tree_edge_count: usize,
    /// first non-tree edge whose endpoints violate the switching product
    violation: Option<(usize, usize)>,
}

fn switching_scan(g: &SignedGraph) -> SwitchingScan {
    let n = g.vertex_count();
    let mut sigma = vec![0i8; n];
    let mut parent = vec![usize::MAX; n];
    let mut component_count = 0;
    let mut tree_edge_count = 0;
    let mut violation = None;
    for s in 0..n {
        if sigma[s] != 0 {
            continue;
        }
        component_count += 1;
        sigma[s] = 1;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                let sign = g.sign(v, w).expect("adjacent vertices share an edge");
                if sigma[w] == 0 {
                    sigma[w] = sigma[v] * sign;
                    parent[w] = v;
                    tree_edge_count += 1;
                    queue.push_back(w);
                } else if sigma[v] * sigma[w] != sign && violation.is_none() {
                    violation = Some((v, w));
                }
            }
        }
    }
    SwitchingScan {
        sigma,
        parent,
        component_count,
        tree_edge_count,
        violation,
    }
}

/// Classify cycles of a signed graph by parity and report the switching map
/// when every cycle is positive.
pub fn parity_report(g: &SignedGraph) -> ParityReport {
    let scan = switching_scan(g);
    let n = g.vertex_count();
    let has_cycle = g.edge_count() > scan.tree_edge_count;
    let has_negative_cycle = scan.violation.is_some();
    let has_odd_cycle = g.underlying().bipartition().is_none();
    let switching = (!has_negative_cycle).then(|| {
        (0..n)
            .map(|v| (g.label(v).to_string(), scan.sigma[v]))
            .collect()
    });
    ParityReport {
        connected: n <= 1 || scan.component_count == 1,
        component_count: scan.component_count,
        has_cycle,
        has_negative_cycle,
        has_odd_cycle,
        switching,
    }
}

/// A witness negative cycle as a vertex-label list: the spanning-tree path
/// between the endpoints of the first violating non-tree edge, plus that edge.
pub fn negative_cycle_witness(g: &SignedGraph) -> Option<Vec<String>> {
    let scan = switching_scan(g);
    let (a, b) = scan.violation?;
    // walk both endpoints up to their lowest common ancestor
    let depth = |mut v: usize| {
        let mut d = 0;
        while scan.parent[v] != usize::MAX {
            v = scan.parent[v];
            d += 1;
        }
        d
    };
    let (mut x, mut y) = (a, b);
    let (mut dx, mut dy) = (depth(x), depth(y));
    let mut up_x = vec![x];
    let mut up_y = vec![y];
    while dx > dy {
        x = scan.parent[x];
        up_x.push(x);
        dx -= 1;
    }
    while dy > dx {
        y = scan.parent[y];
        up_y.push(y);
        dy -= 1;
    }
    while x != y {
        x = scan.parent[x];
        y = scan.parent[y];
        up_x.push(x);
        up_y.push(y);
    }
    up_y.pop(); // shared ancestor appears once
    up_y.reverse();
    up_x.extend(up_y);
    Some(up_x.into_iter().map(|v| g.label(v).to_string()).collect())
}

/// Derive a consistent orientation of the standard figure from the switching
/// map: column i points rightward iff sigma(c_i) = +1, row j upward iff
/// sigma(r_j) = +1. Fails with a witness cycle when a negative cycle exists.
pub fn consistent_orientation(m: &GridMatrix) -> Result<Orientation> {
    let g = row_column_graph(m);
    let scan = switching_scan(&g);
    if scan.violation.is_some() {
        let cycle = negative_cycle_witness(&g).expect("violation implies a witness");
        return Err(Error::NegativeCycle { cycle });
    }
    let column_dir = (0..m.columns())
        .map(|i| {
            if scan.sigma[i] == 1 {
                ColumnDir::Rightward
            } else {
                ColumnDir::Leftward
            }
        })
        .collect();
    let row_dir = (0..m.rows())
        .map(|j| {
            if scan.sigma[m.columns() + j] == 1 {
                RowDir::Upward
            } else {
                RowDir::Downward
            }
        })
        .collect();
    let o = Orientation {
        column_dir,
        row_dir,
    };
    debug_assert!(o.validate(m).is_ok());
    Ok(o)
}

/// The doubled graph that mirrors matrix double refinement on the graph side:
/// each vertex v gains a twin v'; a positive edge vw yields vw and v'w', a
/// negative edge yields vw' and v'w. The result is used unsigned.
pub fn refine_graph(g: &SignedGraph) -> SignedGraph {
    let n = g.vertex_count();
    let mut out = SignedGraph::new();
    for v in 0..n {
        out.ensure_vertex(g.label(v).to_string());
    }
    let twins: Vec<usize> = (0..n)
        .map(|v| {
            let label = out.underlying().fresh_label(g.label(v));
            out.ensure_vertex(label)
        })
        .collect();
    for (a, b, sign) in g.edges() {
        if sign == 1 {
            out.add_edge(a, b, 1);
            out.add_edge(twins[a], twins[b], 1);
        } else {
            out.add_edge(a, twins[b], 1);
            out.add_edge(twins[a], b, 1);
        }
    }
    out
}

/// Unsigned view of G(M).
pub fn row_column_underlying(m: &GridMatrix) -> Graph {
    row_column_graph(m).underlying().clone()
}
