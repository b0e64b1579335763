//! Exact growth rates of geometric grid classes: the square of the largest
//! root of the matching polynomial of the row-column graph, computed on G(M)
//! directly when every cycle is positive and on the refined graph G(M^x2)
//! otherwise. Also the monotone-grid-class comparison (spectral radius) and
//! the closed forms for cycle row-column graphs.

use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{characteristic_polynomial, matching_polynomial, rook_numbers};
use crate::matrix::GridMatrix;
use crate::poly::IntPolynomial;
use crate::roots::{largest_root, rational_to_f64, RootResult, DEFAULT_TOLERANCE};
use crate::rowcol::{parity_report, row_column_graph};

/// Which graph carried the matching polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UsedGraph {
    Direct,
    Refined,
}

impl UsedGraph {
    pub fn as_str(self) -> &'static str {
        match self {
            UsedGraph::Direct => "G(M)",
            UsedGraph::Refined => "G(M^x2)",
        }
    }
}

/// Relation between the geometric and the monotone growth rate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Strict,
}

impl Comparison {
    pub fn as_str(self) -> &'static str {
        match self {
            Comparison::Equal => "equal",
            Comparison::Strict => "strict",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleParity {
    Positive,
    Negative,
}

#[derive(Debug, Clone)]
pub struct GrowthRateResult {
    pub matrix: GridMatrix,
    pub used_graph: UsedGraph,
    pub negative_cycle_present: bool,
    pub matching_poly: IntPolynomial,
    pub lambda: RootResult,
    pub growth_rate: f64,
    pub monotone_growth_rate: f64,
    pub comparison: Comparison,
}

impl GrowthRateResult {
    /// Exact enclosure of the growth rate: the lambda bracket squared.
    pub fn growth_rate_bracket(&self) -> (num_rational::BigRational, num_rational::BigRational) {
        self.lambda.squared_bracket()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let (lo, hi) = self.lambda.bracket();
        json!({
            "matrix": self.matrix.rows_top_down(),
            "t": self.matrix.columns(),
            "u": self.matrix.rows(),
            "negative_cycle": self.negative_cycle_present,
            "graph_used": self.used_graph.as_str(),
            "matching_polynomial": self.matching_poly.to_decimal_strings(),
            "lambda": {
                "value": self.lambda.value(),
                "bracket": [rational_to_f64(lo), rational_to_f64(hi)],
            },
            "geom_growth_rate": self.growth_rate,
            "monotone_growth_rate": self.monotone_growth_rate,
            "comparison": self.comparison.as_str(),
        })
    }
}

/// Largest root of the matching polynomial of an unsigned graph.
pub fn matching_lambda(g: &Graph, tolerance: f64) -> Result<RootResult> {
    largest_root(&matching_polynomial(g)?, tolerance)
}

/// The graph the growth rate is read from: G(M) when there is no negative
/// cycle, the refined G(M^x2) otherwise.
pub fn star_graph(m: &GridMatrix) -> Result<(Graph, UsedGraph)> {
    let g = row_column_graph(m);
    if parity_report(&g).has_negative_cycle {
        let refined = row_column_graph(&m.double_refinement()?);
        Ok((refined.underlying().clone(), UsedGraph::Refined))
    } else {
        Ok((g.underlying().clone(), UsedGraph::Direct))
    }
}

pub fn geom_growth_rate(m: &GridMatrix) -> Result<GrowthRateResult> {
    geom_growth_rate_with_tolerance(m, DEFAULT_TOLERANCE)
}

pub fn geom_growth_rate_with_tolerance(m: &GridMatrix, tolerance: f64) -> Result<GrowthRateResult> {
    let g = row_column_graph(m);
    let parity = parity_report(&g);
    let (graph, used) = star_graph(m)?;
    let mu = matching_polynomial(&graph)?;
    let lambda = largest_root(&mu, tolerance)?;
    let growth_rate = lambda.value() * lambda.value();
    let monotone_growth_rate = monotone_growth_rate_with_tolerance(m, tolerance)?;
    let comparison = if g.underlying().is_acyclic() {
        Comparison::Equal
    } else {
        Comparison::Strict
    };
    Ok(GrowthRateResult {
        matrix: m.clone(),
        used_graph: used,
        negative_cycle_present: parity.has_negative_cycle,
        matching_poly: mu,
        lambda,
        growth_rate,
        monotone_growth_rate,
        comparison,
    })
}

/// Growth rate of the monotone grid class: the spectral radius of G(M),
/// squared. Independent of cycle parity and invariant under refinement.
pub fn monotone_growth_rate(m: &GridMatrix) -> Result<f64> {
    monotone_growth_rate_with_tolerance(m, DEFAULT_TOLERANCE)
}

pub fn monotone_growth_rate_with_tolerance(m: &GridMatrix, tolerance: f64) -> Result<f64> {
    let rho = spectral_radius(row_column_graph(m).underlying(), tolerance)?;
    Ok(rho.value() * rho.value())
}

/// Largest root of the characteristic polynomial.
pub fn spectral_radius(g: &Graph, tolerance: f64) -> Result<RootResult> {
    largest_root(&characteristic_polynomial(g)?, tolerance)
}

/// Closed form when G(M) is a single cycle of length n (even, since
/// row-column graphs are bipartite): 4cos^2(pi/2n) for a positive cycle and
/// 4cos^2(pi/4n) for a negative one.
pub fn cycle_class_growth_rate(n: usize, parity: CycleParity) -> Result<f64> {
    if !n.is_multiple_of(2) || n < 4 {
        return Err(Error::OddCycleLength(n));
    }
    let nn = n as f64;
    let c = match parity {
        CycleParity::Positive => (std::f64::consts::PI / (2.0 * nn)).cos(),
        CycleParity::Negative => (std::f64::consts::PI / (4.0 * nn)).cos(),
    };
    Ok(4.0 * c * c)
}

/// A k x k staircase matrix whose row-column graph is the cycle C_2k:
/// cells (i, i) and (i mod k + 1, i), all +1 for positive parity, with the
/// single cell (1, 1) negated for negative parity.
pub fn cycle_matrix(n: usize, parity: CycleParity) -> Result<GridMatrix> {
    if !n.is_multiple_of(2) || n < 4 {
        return Err(Error::OddCycleLength(n));
    }
    let k = n / 2;
    let mut rows = vec![vec![0i8; k]; k];
    let mut set = |i: usize, j: usize, v: i8| rows[k - j][i - 1] = v;
    for i in 1..=k {
        set(i, i, 1);
        set(i % k + 1, i, 1);
    }
    if parity == CycleParity::Negative {
        set(1, 1, -1);
    }
    GridMatrix::from_rows(&rows)
}

#[derive(Debug, Clone)]
pub struct ClassComparison {
    pub geom: f64,
    pub monotone: f64,
    pub connected: bool,
    pub acyclic: bool,
    pub comparison: Comparison,
}

impl ClassComparison {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "geom_growth_rate": self.geom,
            "monotone_growth_rate": self.monotone,
            "connected": self.connected,
            "acyclic": self.acyclic,
            "comparison": self.comparison.as_str(),
        })
    }
}

/// Geometric versus monotone growth rate of the same matrix. The geometric
/// rate never exceeds the monotone one, with equality exactly when G(M) is
/// acyclic.
pub fn compare_classes(m: &GridMatrix) -> Result<ClassComparison> {
    let r = geom_growth_rate(m)?;
    let parity = parity_report(&row_column_graph(m));
    debug_assert!(r.growth_rate <= r.monotone_growth_rate + 1e-9);
    Ok(ClassComparison {
        geom: r.growth_rate,
        monotone: r.monotone_growth_rate,
        connected: parity.connected,
        acyclic: !parity.has_cycle,
        comparison: r.comparison,
    })
}

/// The polynomial whose largest root is the growth rate, assembled straight
/// from rook numbers: sum_k (-1)^k r_k z^(floor(n/2) - k) with n the vertex
/// count of the row-column graph. An independent route to the same number as
/// the matching-polynomial path.
pub fn rook_growth_polynomial(rook: &[BigUint], n_vertices: usize) -> IntPolynomial {
    let half = n_vertices / 2;
    let mut coeffs = vec![num_bigint::BigInt::zero(); half + 1];
    for (k, r) in rook.iter().enumerate() {
        debug_assert!(k <= half);
        let signed = num_bigint::BigInt::from(r.clone());
        coeffs[half - k] = if k % 2 == 0 { signed } else { -signed };
    }
    IntPolynomial::new(coeffs)
}

/// Growth rate via rook numbers only (Cartier-Foata route): the largest root
/// of the rook growth polynomial of the matrix actually used.
pub fn growth_rate_via_rooks(m: &GridMatrix, tolerance: f64) -> Result<f64> {
    let g = row_column_graph(m);
    let used = if parity_report(&g).has_negative_cycle {
        m.double_refinement()?
    } else {
        m.clone()
    };
    let rook = rook_numbers(&used)?;
    let n = used.columns() + used.rows();
    let p = rook_growth_polynomial(&rook, n);
    Ok(largest_root(&p, tolerance)?.value())
}

/// Realize a bipartite graph as a grid matrix with all +1 cells, so that
/// G(M) is the given graph. Columns take one colour class, rows the other.
pub fn matrix_from_bipartite(g: &Graph) -> Result<GridMatrix> {
    let colors = g.bipartition().ok_or(Error::NotBipartite)?;
    let cols: Vec<usize> = (0..g.vertex_count()).filter(|&v| !colors[v]).collect();
    let rows: Vec<usize> = (0..g.vertex_count()).filter(|&v| colors[v]).collect();
    if cols.is_empty() || rows.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    let col_pos: std::collections::HashMap<usize, usize> =
        cols.iter().enumerate().map(|(k, &v)| (v, k + 1)).collect();
    let row_pos: std::collections::HashMap<usize, usize> =
        rows.iter().enumerate().map(|(k, &v)| (v, k + 1)).collect();
    let mut grid = vec![vec![0i8; cols.len()]; rows.len()];
    for (a, b) in g.edges() {
        let (i, j) = if colors[a] {
            (col_pos[&b], row_pos[&a])
        } else {
            (col_pos[&a], row_pos[&b])
        };
        grid[rows.len() - j][i - 1] = 1;
    }
    GridMatrix::from_rows(&grid)
}
