//! Ground-truth enumeration: words over the cell alphabet plotted as gridded
//! permutations, distinct-count sequences, and the linear recurrence that
//! expands the trace-monoid generating function 1 / sum_k (-1)^k r_k z^k.
//!
//! Two words map to the same gridded permutation exactly when they differ by
//! swaps of adjacent symbols in distinct rows and columns, so the number of
//! distinct gridded permutations of length n equals the number of length-n
//! trace-monoid classes; this is what the recurrence counts.

use std::collections::HashSet;
use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::GridMatrix;
use crate::rowcol::{
    consistent_orientation, parity_report, row_column_graph, ColumnDir, Orientation, RowDir,
};

/// A symbol names a nonzero cell: (column, row), 1-based.
pub type Symbol = (usize, usize);

/// A word over the cell alphabet of a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A permutation together with one gridding: how many of its points fall in
/// each column and each row of the figure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GriddedPermutation {
    pub perm: Vec<u16>,
    pub col_counts: Vec<u16>,
    pub row_counts: Vec<u16>,
}

/// Plot a word on the oriented figure. The k-th symbol a_ij contributes the
/// point at parameter k/(n+1) along the oriented segment of cell (i, j);
/// the permutation reads off the y-ranks in x-order. Coordinates are scaled
/// by (n+1) so everything stays in integers, and no two points can tie.
pub fn word_to_gridded(m: &GridMatrix, o: &Orientation, w: &Word) -> Result<GriddedPermutation> {
    o.validate(m)?;
    if w.is_empty() {
        return Err(Error::InsufficientData);
    }
    let n = w.len();
    for &(i, j) in &w.0 {
        if !m.in_bounds(i, j) || m.get(i, j) == 0 {
            return Err(Error::InvalidWord { col: i, row: j });
        }
    }
    let scale = n as i64 + 1;
    let mut pts: Vec<(i64, i64)> = Vec::with_capacity(n);
    for (k0, &(i, j)) in w.0.iter().enumerate() {
        let k = k0 as i64 + 1;
        let x = match o.column(i) {
            ColumnDir::Rightward => (i as i64 - 1) * scale + k,
            ColumnDir::Leftward => i as i64 * scale - k,
        };
        let y = match o.row(j) {
            RowDir::Upward => (j as i64 - 1) * scale + k,
            RowDir::Downward => j as i64 * scale - k,
        };
        pts.push((x, y));
    }
    pts.sort_unstable();
    let perm = ranks(&pts);
    let mut col_counts = vec![0u16; m.columns()];
    let mut row_counts = vec![0u16; m.rows()];
    for &(i, j) in &w.0 {
        col_counts[i - 1] += 1;
        row_counts[j - 1] += 1;
    }
    Ok(GriddedPermutation {
        perm,
        col_counts,
        row_counts,
    })
}

fn ranks(pts: &[(i64, i64)]) -> Vec<u16> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_unstable_by_key(|&k| pts[k].1);
    let mut rank = vec![0u16; pts.len()];
    for (r, &k) in order.iter().enumerate() {
        rank[k] = r as u16 + 1;
    }
    rank
}

/// Per-length counts of distinct gridded permutations (t_n) and distinct
/// permutations (g_n), with n-th-root growth estimates.
#[derive(Debug, Clone)]
pub struct CountSequence {
    pub n_max: usize,
    pub gridded: Vec<BigUint>,
    pub perms: Vec<BigUint>,
    pub gridded_root_estimates: Vec<f64>,
    pub perm_root_estimates: Vec<f64>,
}

impl CountSequence {
    /// Build from raw gridded counts (e.g. the trace-monoid recurrence);
    /// permutation counts are unavailable on this route.
    pub fn from_gridded_counts(gridded: Vec<BigUint>) -> CountSequence {
        let estimates = root_estimates(&gridded);
        CountSequence {
            n_max: gridded.len(),
            perms: Vec::new(),
            perm_root_estimates: Vec::new(),
            gridded_root_estimates: estimates,
            gridded,
        }
    }

    /// CSV with one line per length.
    pub fn write_csv<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(
            out,
            "n,gridded_count,perm_count,gridded_root_estimate,perm_root_estimate"
        )?;
        for k in 0..self.n_max {
            let perm = self.perms.get(k).map(|c| c.to_string()).unwrap_or_default();
            let perm_est = self
                .perm_root_estimates
                .get(k)
                .map(|e| format!("{:.12}", e))
                .unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{:.12},{}",
                k + 1,
                self.gridded[k],
                perm,
                self.gridded_root_estimates[k],
                perm_est
            )?;
        }
        Ok(())
    }
}

fn root_estimates(counts: &[BigUint]) -> Vec<f64> {
    counts
        .iter()
        .enumerate()
        .map(|(k, c)| big_nth_root_f64(c, k + 1))
        .collect()
}

/// Words budget for exhaustive enumeration.
pub const DEFAULT_WORD_BUDGET: u128 = 100_000_000;

/// Enumerate every word of each length up to n_max over the oriented figure
/// (the refined figure when a negative cycle forces it) and count distinct
/// gridded permutations and distinct permutations.
pub fn enumerate_counts(m: &GridMatrix, n_max: usize) -> Result<CountSequence> {
    enumerate_counts_with_budget(m, n_max, DEFAULT_WORD_BUDGET)
}

/// The matrix enumeration actually runs on: the input itself when its figure
/// orients, its double refinement otherwise.
pub fn enumeration_matrix(m: &GridMatrix) -> Result<GridMatrix> {
    if parity_report(&row_column_graph(m)).has_negative_cycle {
        m.double_refinement()
    } else {
        Ok(m.clone())
    }
}

pub fn enumerate_counts_with_budget(
    m: &GridMatrix,
    n_max: usize,
    budget: u128,
) -> Result<CountSequence> {
    if n_max < 1 {
        return Err(Error::InsufficientData);
    }
    let used = enumeration_matrix(m)?;
    let o = consistent_orientation(&used).expect("the enumeration figure always orients");
    let alphabet: Vec<Symbol> = used.nonzero_cells().map(|(i, j, _)| (i, j)).collect();
    let a = alphabet.len() as u128;
    let words = a.checked_pow(n_max as u32).unwrap_or(u128::MAX);
    if words > budget {
        return Err(Error::BudgetExceeded { words, budget });
    }

    let mut gridded = Vec::with_capacity(n_max);
    let mut perms = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let scale = n as i64 + 1;
        // per-symbol segment parameterization, so the inner loop is pure integer work
        let params: Vec<(i64, i64, i64, i64)> = alphabet
            .iter()
            .map(|&(i, j)| {
                let (x0, sx) = match o.column(i) {
                    ColumnDir::Rightward => ((i as i64 - 1) * scale, 1),
                    ColumnDir::Leftward => (i as i64 * scale, -1),
                };
                let (y0, sy) = match o.row(j) {
                    RowDir::Upward => ((j as i64 - 1) * scale, 1),
                    RowDir::Downward => (j as i64 * scale, -1),
                };
                (x0, sx, y0, sy)
            })
            .collect();
        let total = a.pow(n as u32);
        let mut gridded_set: HashSet<Vec<u8>> = HashSet::new();
        let mut perm_set: HashSet<Vec<u8>> = HashSet::new();
        let mut idx = vec![0usize; n];
        let mut pts: Vec<(i64, i64, usize)> = Vec::with_capacity(n);
        let mut ys: Vec<(i64, usize)> = Vec::with_capacity(n);
        for w in 0..total {
            pts.clear();
            for (k0, &s) in idx.iter().enumerate() {
                let k = k0 as i64 + 1;
                let (x0, sx, y0, sy) = params[s];
                pts.push((x0 + sx * k, y0 + sy * k, s));
            }
            pts.sort_unstable();
            ys.clear();
            ys.extend(pts.iter().enumerate().map(|(pos, &(_, y, _))| (y, pos)));
            ys.sort_unstable();
            let mut key = vec![0u8; n + 1 + used.columns() + used.rows()];
            for (r, &(_, pos)) in ys.iter().enumerate() {
                key[pos] = r as u8 + 1;
            }
            key[n] = 0xFF;
            for &s in &idx {
                let (i, j) = alphabet[s];
                key[n + i] += 1;
                key[n + used.columns() + j] += 1;
            }
            perm_set.insert(key[..n].to_vec());
            gridded_set.insert(key);
            if w + 1 < total {
                let mut pos = n - 1;
                loop {
                    idx[pos] += 1;
                    if idx[pos] < alphabet.len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos -= 1;
                }
            }
        }
        gridded.push(BigUint::from(gridded_set.len()));
        perms.push(BigUint::from(perm_set.len()));
    }
    let gridded_root_estimates = root_estimates(&gridded);
    let perm_root_estimates = root_estimates(&perms);
    Ok(CountSequence {
        n_max,
        gridded,
        perms,
        gridded_root_estimates,
        perm_root_estimates,
    })
}

/// Expand 1 / sum_k (-1)^k r_k z^k as a power series: t_0 = 1 and
/// t_n = sum_{k>=1} (-1)^(k+1) r_k t_(n-k). Returns t_1..t_n_max.
pub fn trace_monoid_counts(rook: &[BigUint], n_max: usize) -> Vec<BigUint> {
    assert!(!rook.is_empty() && rook[0].is_one(), "r_0 must be 1");
    let r: Vec<BigInt> = rook.iter().map(|x| BigInt::from(x.clone())).collect();
    let mut t: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    t.push(BigInt::one());
    for n in 1..=n_max {
        let mut s = BigInt::zero();
        for k in 1..=n.min(r.len() - 1) {
            let term = &r[k] * &t[n - k];
            if k % 2 == 1 {
                s += term;
            } else {
                s -= term;
            }
        }
        t.push(s);
    }
    t.into_iter()
        .skip(1)
        .map(|x| {
            assert!(!x.is_negative(), "trace-monoid counts must be nonnegative");
            x.to_biguint().expect("nonnegative")
        })
        .collect()
}

/// Growth estimate read off a count sequence.
#[derive(Debug, Clone, Copy)]
pub struct GrowthEstimate {
    /// t_n_max^(1/n_max)
    pub root_estimate: f64,
    /// t_n_max / t_(n_max - 1)
    pub last_ratio: f64,
}

pub fn empirical_growth_rate(c: &CountSequence) -> Result<GrowthEstimate> {
    if c.gridded.len() < 2 {
        return Err(Error::InsufficientData);
    }
    let last = &c.gridded[c.gridded.len() - 1];
    let prev = &c.gridded[c.gridded.len() - 2];
    if last.is_zero() || prev.is_zero() {
        return Err(Error::InsufficientData);
    }
    Ok(GrowthEstimate {
        root_estimate: big_nth_root_f64(last, c.gridded.len()),
        last_ratio: big_ratio_f64(last, prev),
    })
}

/// n-th root of a big natural as f64, via logarithms when it overflows f64.
pub fn big_nth_root_f64(x: &BigUint, n: usize) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    (big_ln(x) / n as f64).exp()
}

fn big_ln(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 900 {
        x.to_f64().expect("fits f64 range").ln()
    } else {
        let shift = bits - 64;
        let top = (x >> shift).to_f64().expect("64 bits fit");
        top.ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// a / b as f64, scale-shifted when the operands overflow f64.
pub fn big_ratio_f64(a: &BigUint, b: &BigUint) -> f64 {
    let bits = a.bits().max(b.bits());
    if bits <= 900 {
        a.to_f64().unwrap() / b.to_f64().unwrap()
    } else {
        let shift = bits - 64;
        (a >> shift).to_f64().unwrap() / (b >> shift).to_f64().unwrap()
    }
}
