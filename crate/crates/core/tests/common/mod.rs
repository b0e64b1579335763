//! Shared generators and helpers for the integration suites. All randomness
//! is seeded, so every run fuzzes the same instances.

#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use gridclass::graph::Graph;
use gridclass::growth::{matching_lambda, spectral_radius};
use gridclass::matrix::GridMatrix;
use gridclass::rowcol::{parity_report, row_column_graph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn lambda(g: &Graph) -> f64 {
    matching_lambda(g, 1e-12).unwrap().value()
}

pub fn rho(g: &Graph) -> f64 {
    spectral_radius(g, 1e-12).unwrap().value()
}

/// Random tree on n vertices labelled g0..g(n-1).
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut g = Graph::new();
    let vs: Vec<usize> = (0..n).map(|i| g.ensure_vertex(format!("g{}", i))).collect();
    for i in 1..n {
        let p = rng.gen_range(0..i);
        g.add_edge(vs[i], vs[p]);
    }
    g
}

/// Random connected graph: a tree plus `extra` random chords.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Graph {
    let mut g = random_tree(rng, n);
    let mut added = 0;
    let mut attempts = 0;
    while added < extra && attempts < 100 {
        attempts += 1;
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b && !g.has_edge(a, b) {
            g.add_edge(a, b);
            added += 1;
        }
    }
    g
}

/// Random connected graph guaranteed to contain a cycle.
pub fn random_connected_cyclic(rng: &mut ChaCha8Rng, n_max: usize) -> Graph {
    loop {
        let n = rng.gen_range(3..=n_max);
        let extra = rng.gen_range(1..=3);
        let g = random_connected_graph(rng, n, extra);
        if !g.is_acyclic() {
            return g;
        }
    }
}

/// Random forest on up to n_max vertices (possibly several components).
pub fn random_forest(rng: &mut ChaCha8Rng, n_max: usize) -> Graph {
    let n = rng.gen_range(1..=n_max);
    let mut g = Graph::new();
    let vs: Vec<usize> = (0..n).map(|i| g.ensure_vertex(format!("g{}", i))).collect();
    for i in 1..n {
        // sometimes start a fresh component
        if rng.gen_bool(0.8) {
            let p = rng.gen_range(0..i);
            g.add_edge(vs[i], vs[p]);
        }
    }
    g
}

/// Random grid matrix with at least one nonzero cell.
pub fn random_matrix(rng: &mut ChaCha8Rng, max_dim: usize) -> GridMatrix {
    loop {
        let t = rng.gen_range(1..=max_dim);
        let u = rng.gen_range(1..=max_dim);
        let rows: Vec<Vec<i8>> = (0..u)
            .map(|_| {
                (0..t)
                    .map(|_| match rng.gen_range(0..10) {
                        0..=3 => 0,
                        4..=6 => 1,
                        _ => -1,
                    })
                    .collect()
            })
            .collect();
        if let Ok(m) = GridMatrix::from_rows(&rows) {
            return m;
        }
    }
}

/// Random matrix whose row-column graph is connected.
pub fn random_connected_matrix(rng: &mut ChaCha8Rng, max_dim: usize) -> GridMatrix {
    loop {
        let m = random_matrix(rng, max_dim);
        if parity_report(&row_column_graph(&m)).connected {
            return m;
        }
    }
}

pub fn neg_cycle_matrix() -> GridMatrix {
    GridMatrix::parse("1 0 -1\n1 -1 1\n").unwrap()
}

pub fn pos_cycle_matrix() -> GridMatrix {
    GridMatrix::parse("-1 0 -1\n1 -1 1\n").unwrap()
}

/// The fixed enumeration corpus: the worked matrices plus a spread of shapes
/// up to 3x3, mixing parities, connectivity and density. Well over thirty
/// entries.
pub fn corpus() -> Vec<GridMatrix> {
    let texts = [
        // the two worked matrices
        "1 0 -1\n1 -1 1",
        "-1 0 -1\n1 -1 1",
        // single cells
        "1",
        "-1",
        // 1x2 / 2x1 / 1x3
        "1 1",
        "1 -1",
        "-1 -1",
        "1\n1",
        "1\n-1",
        "1 1 1",
        "1 -1 1",
        // 2x2
        "1 0\n0 1",
        "0 1\n1 0",
        "1 0\n0 -1",
        "1 1\n1 1",
        "1 1\n1 -1",
        "-1 -1\n-1 -1",
        "1 -1\n-1 1",
        "1 1\n0 1",
        "-1 1\n0 1",
        // 3x2 / 2x3 variations
        "1 1 0\n0 1 1",
        "1 -1 0\n0 1 -1",
        "1 0 1\n1 0 1",
        "1 1\n1 0\n0 1",
        "1 -1\n1 0\n0 -1",
        // 3x3 staircases and cycles
        "0 0 1\n0 1 1\n1 1 0",
        "0 0 1\n0 1 1\n-1 1 0",
        "1 0 0\n0 1 1\n1 1 0",
        "-1 0 0\n0 1 1\n1 1 0",
        "1 0 0\n0 1 0\n0 0 1",
        "0 0 1\n0 1 0\n1 0 0",
        "0 0 -1\n0 -1 0\n-1 0 0",
        "1 0 1\n0 1 0\n1 0 1",
        "1 0 -1\n0 1 0\n1 0 1",
        "1 1 0\n1 0 1\n0 1 1",
        "1 1 0\n1 0 -1\n0 1 1",
        "1 1 1\n1 1 1\n1 1 1",
        "1 1 1\n1 -1 1\n1 1 1",
        // disconnected graphs
        "1 0\n0 0",
        "1 0 0\n0 0 0\n0 0 -1",
    ];
    texts
        .iter()
        .map(|t| GridMatrix::parse(t).expect("corpus matrices are valid"))
        .collect()
}
