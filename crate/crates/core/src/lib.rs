//! Exact growth rates of geometric grid classes of permutations.
//!
//! A geometric grid class is described by a 0/±1 matrix M whose nonzero
//! entries are unit diagonal segments in a grid; the permutations of the
//! class are those plottable on that figure. The growth rate of the class is
//! the square of the largest root of the matching polynomial of the
//! row-column graph of M, taken after a parity-correcting double refinement
//! when the graph carries a negative cycle. Everything on that route is
//! computed exactly: integer matching and rook numbers, integer matching and
//! characteristic polynomials, and certified rational root brackets.
//!
//! The crate also ships the machinery around that pipeline: monotone-class
//! comparison via the spectral radius, Godsil expansion to a forest with the
//! same largest matching root, edge-subdivision experiments, and a
//! brute-force word-enumeration oracle that validates the algebra at small
//! scale.

pub mod error;
pub mod expand;
pub mod experiments;
pub mod graph;
pub mod growth;
pub mod matching;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod roots;
pub mod rowcol;

pub use error::{Error, Result};
pub use graph::{Graph, SignedGraph};
pub use growth::{
    compare_classes, cycle_class_growth_rate, cycle_matrix, geom_growth_rate, monotone_growth_rate,
    Comparison, CycleParity, GrowthRateResult, UsedGraph,
};
pub use matching::{
    characteristic_polynomial, matching_numbers, matching_polynomial, mu_via_cycle_sum,
    rook_numbers,
};
pub use matrix::GridMatrix;
pub use oracle::{
    empirical_growth_rate, enumerate_counts, trace_monoid_counts, CountSequence,
    GriddedPermutation, Word,
};
pub use poly::IntPolynomial;
pub use roots::{largest_root, RootResult};
pub use rowcol::{
    consistent_orientation, parity_report, refine_graph, row_column_graph, Orientation,
    ParityReport,
};
