//! Exact matching numbers, rook numbers, matching and characteristic
//! polynomials, and the cycle-sum identity relating them.
//!
//! Matching counts are computed by the route best suited to the component:
//! a linear-time tree recurrence on forests, a column-by-column mask DP on
//! bipartite graphs (the same DP that counts rook placements), and a
//! memoized vertex-deletion recurrence otherwise. The recurrence is also
//! exposed directly so tests can cross-check routes against each other.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::GridMatrix;
use crate::poly::IntPolynomial;

/// Memo/state budget guard for the exponential-in-the-worst-case routes.
const STATE_BUDGET: usize = 1 << 22;

fn conv(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// m_0..m_max for `g`: m_k is the number of k-edge matchings. m_0 = 1 and
/// trailing zeros above the maximum matching size are trimmed.
pub fn matching_numbers(g: &Graph) -> Result<Vec<BigUint>> {
    let mut acc = vec![BigUint::one()];
    for comp in g.components() {
        let sub = g.induced(&comp);
        let part = component_counts(&sub)?;
        acc = conv(&acc, &part);
    }
    Ok(acc)
}

fn component_counts(g: &Graph) -> Result<Vec<BigUint>> {
    let n = g.vertex_count();
    if g.is_acyclic() {
        return Ok(tree_counts(g));
    }
    if let Some(colors) = g.bipartition() {
        let small = colors
            .iter()
            .filter(|&&c| c)
            .count()
            .min(colors.iter().filter(|&&c| !c).count());
        if small <= 32 {
            return bipartite_counts(g, &colors);
        }
    }
    if n <= 64 {
        return matching_numbers_via_recurrence(g);
    }
    Err(Error::TooLarge {
        what: "graph for matching numbers",
        actual: n,
        limit: 64,
    })
}

/// Matching generating function of a forest, any size: the usual two-state
/// tree DP (root exposed / root matched into its subtree).
fn tree_counts(g: &Graph) -> Vec<BigUint> {
    let n = g.vertex_count();
    let mut acc = vec![BigUint::one()];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        // BFS order, then process leaves-first
        let mut order = vec![root];
        let mut parent = vec![usize::MAX; n];
        seen[root] = true;
        let mut qi = 0;
        while qi < order.len() {
            let v = order[qi];
            qi += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    order.push(w);
                }
            }
        }
        let mut exposed: Vec<Vec<BigUint>> = vec![Vec::new(); n];
        let mut matched: Vec<Vec<BigUint>> = vec![Vec::new(); n];
        for &v in order.iter().rev() {
            let children: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| parent[w] == v)
                .collect();
            let totals: Vec<Vec<BigUint>> = children
                .iter()
                .map(|&c| add_series(&exposed[c], &matched[c]))
                .collect();
            let mut expo = vec![BigUint::one()];
            for t in &totals {
                expo = conv(&expo, t);
            }
            // v matched to child c: edge vc plus c exposed, others free
            let mut mat = vec![BigUint::zero()];
            for (idx, &c) in children.iter().enumerate() {
                let mut term = shift_one(&exposed[c]);
                for (jdx, t) in totals.iter().enumerate() {
                    if jdx != idx {
                        term = conv(&term, t);
                    }
                }
                mat = add_series(&mat, &term);
            }
            exposed[v] = expo;
            matched[v] = mat;
        }
        let total = add_series(&exposed[root], &matched[root]);
        acc = conv(&acc, &total);
    }
    acc
}

fn add_series(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let n = a.len().max(b.len()).max(1);
    let mut out = vec![BigUint::zero(); n];
    for (k, x) in a.iter().enumerate() {
        out[k] += x;
    }
    for (k, x) in b.iter().enumerate() {
        out[k] += x;
    }
    while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn shift_one(a: &[BigUint]) -> Vec<BigUint> {
    if a.is_empty() || (a.len() == 1 && a[0].is_zero()) {
        return vec![BigUint::zero()];
    }
    let mut out = vec![BigUint::zero()];
    out.extend_from_slice(a);
    out
}

/// The vertex-deletion recurrence, memoized on induced-subgraph bitmasks:
/// with u the least vertex present, count matchings leaving u exposed plus,
/// for each neighbour v, matchings using the edge uv. Requires <= 64 vertices.
/// This route makes no structural shortcuts, so it serves as an independent
/// cross-check for the others.
pub fn matching_numbers_via_recurrence(g: &Graph) -> Result<Vec<BigUint>> {
    let n = g.vertex_count();
    if n > 64 {
        return Err(Error::TooLarge {
            what: "graph for matching recurrence",
            actual: n,
            limit: 64,
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1u64 << w)))
        .collect();
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, Vec<BigUint>> = HashMap::new();

    fn rec(mask: u64, adj: &[u64], memo: &mut HashMap<u64, Vec<BigUint>>) -> Result<Vec<BigUint>> {
        if mask == 0 {
            return Ok(vec![BigUint::one()]);
        }
        if let Some(hit) = memo.get(&mask) {
            return Ok(hit.clone());
        }
        let u = mask.trailing_zeros() as usize;
        let rest = mask & !(1u64 << u);
        let mut res = rec(rest, adj, memo)?;
        let mut nbrs = adj[u] & rest;
        while nbrs != 0 {
            let v = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            let sub = rec(rest & !(1u64 << v), adj, memo)?;
            res = add_series(&res, &shift_one(&sub));
        }
        if memo.len() >= STATE_BUDGET {
            return Err(Error::TooLarge {
                what: "matching recurrence memo",
                actual: memo.len(),
                limit: STATE_BUDGET,
            });
        }
        memo.insert(mask, res.clone());
        Ok(res)
    }

    rec(full, &adj, &mut memo)
}

/// Rook-placement DP over a board given as, per column, the occupied row
/// indices. States are masks of used rows; the rook count is the popcount.
fn board_counts(cols: &[Vec<u32>]) -> Result<Vec<BigUint>> {
    let mut states: HashMap<u64, BigUint> = HashMap::from([(0u64, BigUint::one())]);
    for col in cols {
        let mut next = states.clone(); // leave this column empty
        for (&mask, cnt) in &states {
            for &r in col {
                let bit = 1u64 << r;
                if mask & bit == 0 {
                    *next.entry(mask | bit).or_insert_with(BigUint::zero) += cnt;
                }
            }
        }
        if next.len() > STATE_BUDGET {
            return Err(Error::TooLarge {
                what: "rook DP states",
                actual: next.len(),
                limit: STATE_BUDGET,
            });
        }
        states = next;
    }
    let max_k = states.keys().map(|m| m.count_ones()).max().unwrap_or(0) as usize;
    let mut out = vec![BigUint::zero(); max_k + 1];
    for (mask, cnt) in states {
        out[mask.count_ones() as usize] += cnt;
    }
    while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    Ok(out)
}

/// r_0..r_max for a grid matrix: r_k counts placements of k non-attacking
/// rooks on the nonzero cells. The DP masks the smaller dimension.
pub fn rook_numbers(m: &GridMatrix) -> Result<Vec<BigUint>> {
    let (t, u) = (m.columns(), m.rows());
    let cols: Vec<Vec<u32>> = if u <= t {
        (1..=t)
            .map(|i| {
                (1..=u)
                    .filter(|&j| m.get(i, j) != 0)
                    .map(|j| (j - 1) as u32)
                    .collect()
            })
            .collect()
    } else {
        (1..=u)
            .map(|j| {
                (1..=t)
                    .filter(|&i| m.get(i, j) != 0)
                    .map(|i| (i - 1) as u32)
                    .collect()
            })
            .collect()
    };
    board_counts(&cols)
}

fn bipartite_counts(g: &Graph, colors: &[bool]) -> Result<Vec<BigUint>> {
    let side_a: Vec<usize> = (0..g.vertex_count()).filter(|&v| !colors[v]).collect();
    let side_b: Vec<usize> = (0..g.vertex_count()).filter(|&v| colors[v]).collect();
    let (cols_side, rows_side) = if side_b.len() <= side_a.len() {
        (side_a, side_b)
    } else {
        (side_b, side_a)
    };
    let row_pos: HashMap<usize, u32> = rows_side
        .iter()
        .enumerate()
        .map(|(k, &v)| (v, k as u32))
        .collect();
    let cols: Vec<Vec<u32>> = cols_side
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|w| row_pos[w]).collect())
        .collect();
    board_counts(&cols)
}

/// The matching polynomial: mu(z) = sum_k (-1)^k m_k z^(n-2k). Even when the
/// vertex count is even, odd otherwise.
pub fn matching_polynomial(g: &Graph) -> Result<IntPolynomial> {
    let ms = matching_numbers(g)?;
    Ok(polynomial_from_counts(&ms, g.vertex_count()))
}

/// Assemble sum_k (-1)^k c_k z^(n-2k) from nonnegative counts.
pub fn polynomial_from_counts(counts: &[BigUint], n: usize) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, c) in counts.iter().enumerate() {
        let signed = BigInt::from(c.clone());
        coeffs[n - 2 * k] = if k % 2 == 0 { signed } else { -signed };
    }
    IntPolynomial::new(coeffs)
}

/// Exact characteristic polynomial det(zI - A) of the adjacency matrix, by
/// the Faddeev-LeVerrier iteration over the integers (the divisions by k are
/// exact). Acyclic graphs of any size fall back to the matching polynomial,
/// which is identical on forests.
pub fn characteristic_polynomial(g: &Graph) -> Result<IntPolynomial> {
    let n = g.vertex_count();
    if n > 64 {
        if g.is_acyclic() {
            return matching_polynomial(g);
        }
        return Err(Error::TooLarge {
            what: "graph for characteristic polynomial",
            actual: n,
            limit: 64,
        });
    }
    let mut a = vec![vec![BigInt::zero(); n]; n];
    for (x, y) in g.edges() {
        a[x][y] = BigInt::one();
        a[y][x] = BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    for k in 1..=n {
        let am = mat_mul(&a, &m);
        let tr: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let c = -tr / BigInt::from(k);
        coeffs[n - k] = c.clone();
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &c;
        }
    }
    Ok(IntPolynomial::new(coeffs))
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// All simple cycles as vertex masks (each cycle reported once).
fn simple_cycles(g: &Graph) -> Result<Vec<u64>> {
    let n = g.vertex_count();
    debug_assert!(n <= 64);
    let mut out = Vec::new();

    fn dfs(
        g: &Graph,
        start: usize,
        v: usize,
        mask: u64,
        second: usize,
        out: &mut Vec<u64>,
    ) -> Result<()> {
        for &w in g.neighbors(v) {
            if w == start {
                // close the cycle; count once per orientation
                if mask.count_ones() >= 3 && second < v {
                    out.push(mask);
                    if out.len() > 200_000 {
                        return Err(Error::TooLarge {
                            what: "cycle census",
                            actual: out.len(),
                            limit: 200_000,
                        });
                    }
                }
            } else if w > start && mask & (1u64 << w) == 0 {
                dfs(g, start, w, mask | (1u64 << w), second, out)?;
            }
        }
        Ok(())
    }

    for s in 0..n {
        for &w in g.neighbors(s) {
            if w > s {
                dfs(g, s, w, (1u64 << s) | (1u64 << w), w, &mut out)?;
            }
        }
    }
    Ok(out)
}

/// Godsil-Gutman cycle-sum route to the matching polynomial:
/// mu_G = Phi_G + sum over nonempty unions C of vertex-disjoint cycles of
/// 2^(number of cycles in C) * Phi_(G-C). Exponential in the cycle structure;
/// intended as an independent oracle on small graphs (<= 24 vertices).
pub fn mu_via_cycle_sum(g: &Graph) -> Result<IntPolynomial> {
    let n = g.vertex_count();
    if n > 24 {
        return Err(Error::TooLarge {
            what: "graph for cycle-sum identity",
            actual: n,
            limit: 24,
        });
    }
    let cycles = simple_cycles(g)?;
    let mut total = characteristic_polynomial(g)?;

    fn extend(
        g: &Graph,
        cycles: &[u64],
        from: usize,
        used: u64,
        count: usize,
        total: &mut IntPolynomial,
    ) -> Result<()> {
        for (idx, &c) in cycles.iter().enumerate().skip(from) {
            if used & c != 0 {
                continue;
            }
            let union = used | c;
            let keep: Vec<usize> = (0..g.vertex_count())
                .filter(|&v| union & (1u64 << v) == 0)
                .collect();
            let phi = characteristic_polynomial(&g.induced(&keep))?;
            let weight = BigInt::from(1u64 << (count + 1));
            *total = total.add(&phi.scale(&weight));
            extend(g, cycles, idx + 1, union, count + 1, total)?;
        }
        Ok(())
    }

    extend(g, &cycles, 0, 0, 0, &mut total)?;
    Ok(total)
}
