//! 0/±1 grid matrices.
//!
//! Cells are addressed (i, j) with column i running 1..=t left to right and
//! row j running 1..=u from the bottom, matching Cartesian plots. The text
//! format lists rows top-to-bottom the way a matrix is read on the page; the
//! parser performs the flip.

use crate::error::{Error, Result};

/// Maximum columns/rows accepted by the parser. Doubles after refinement.
pub const DEFAULT_SIZE_LIMIT: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GridMatrix {
    t: usize,
    u: usize,
    data: Vec<i8>, // data[(j-1)*t + (i-1)]
}

impl GridMatrix {
    /// Build from rows listed top-to-bottom (the display order).
    pub fn from_rows(rows: &[Vec<i8>]) -> Result<GridMatrix> {
        Self::from_rows_with_limit(rows, DEFAULT_SIZE_LIMIT)
    }

    pub fn from_rows_with_limit(rows: &[Vec<i8>], limit: usize) -> Result<GridMatrix> {
        if rows.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let t = rows[0].len();
        let u = rows.len();
        for (k, row) in rows.iter().enumerate() {
            if row.len() != t {
                return Err(Error::RaggedRows { line: k + 1 });
            }
            for (c, &v) in row.iter().enumerate() {
                if !(-1..=1).contains(&v) {
                    return Err(Error::BadToken {
                        line: k + 1,
                        col: c + 1,
                        token: v.to_string(),
                    });
                }
            }
        }
        if t == 0 {
            return Err(Error::EmptyMatrix);
        }
        if t > limit || u > limit {
            return Err(Error::TooLarge {
                what: "matrix",
                actual: t.max(u),
                limit,
            });
        }
        let mut data = vec![0i8; t * u];
        for (k, row) in rows.iter().enumerate() {
            let j = u - k; // top text row is the highest matrix row
            for (c, &v) in row.iter().enumerate() {
                data[(j - 1) * t + c] = v;
            }
        }
        let m = GridMatrix { t, u, data };
        if m.nonzero_cells().next().is_none() {
            return Err(Error::EmptyMatrix);
        }
        Ok(m)
    }

    /// Parse the text format: `#` comments, whitespace-separated tokens in
    /// {-1, 0, 1}, one matrix row per line, top row first.
    pub fn parse(text: &str) -> Result<GridMatrix> {
        Self::parse_with_limit(text, DEFAULT_SIZE_LIMIT)
    }

    pub fn parse_with_limit(text: &str, limit: usize) -> Result<GridMatrix> {
        let mut rows: Vec<Vec<i8>> = Vec::new();
        let mut row_lines: Vec<usize> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut row = Vec::new();
            for (col, token) in line.split_whitespace().enumerate() {
                let v = match token {
                    "0" => 0,
                    "1" => 1,
                    "-1" => -1,
                    _ => {
                        return Err(Error::BadToken {
                            line: lineno + 1,
                            col: col + 1,
                            token: token.to_string(),
                        })
                    }
                };
                row.push(v);
            }
            rows.push(row);
            row_lines.push(lineno + 1);
        }
        if rows.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let width = rows[0].len();
        for (k, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::RaggedRows { line: row_lines[k] });
            }
        }
        Self::from_rows_with_limit(&rows, limit)
    }

    /// Render in the text format; `parse(render(m)) == m`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for j in (1..=self.u).rev() {
            let row: Vec<String> = (1..=self.t).map(|i| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Rows listed top-to-bottom, as in the text format.
    pub fn rows_top_down(&self) -> Vec<Vec<i8>> {
        (1..=self.u)
            .rev()
            .map(|j| (1..=self.t).map(|i| self.get(i, j)).collect())
            .collect()
    }

    pub fn columns(&self) -> usize {
        self.t
    }

    pub fn rows(&self) -> usize {
        self.u
    }

    /// Cell value at column i, row j (both 1-based, from the lower left).
    pub fn get(&self, i: usize, j: usize) -> i8 {
        assert!(self.in_bounds(i, j), "cell ({},{}) out of bounds", i, j);
        self.data[(j - 1) * self.t + (i - 1)]
    }

    pub fn in_bounds(&self, i: usize, j: usize) -> bool {
        (1..=self.t).contains(&i) && (1..=self.u).contains(&j)
    }

    /// Nonzero cells (i, j, value) in column-major order.
    pub fn nonzero_cells(&self) -> impl Iterator<Item = (usize, usize, i8)> + '_ {
        (1..=self.t).flat_map(move |i| {
            (1..=self.u).filter_map(move |j| {
                let v = self.get(i, j);
                (v != 0).then_some((i, j, v))
            })
        })
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|&&v| v != 0).count()
    }

    /// The double refinement: a 2t x 2u matrix in which each +1 becomes two
    /// +1 cells on the block diagonal and each -1 two -1 cells on the block
    /// antidiagonal, so the standard figure is a scaled copy of the original.
    pub fn double_refinement(&self) -> Result<GridMatrix> {
        let (t2, u2) = (2 * self.t, 2 * self.u);
        let limit = 2 * DEFAULT_SIZE_LIMIT;
        if t2 > limit || u2 > limit {
            return Err(Error::TooLarge {
                what: "refined matrix",
                actual: t2.max(u2),
                limit,
            });
        }
        let mut data = vec![0i8; t2 * u2];
        let mut set = |i: usize, j: usize, v: i8| data[(j - 1) * t2 + (i - 1)] = v;
        for (i, j, v) in self.nonzero_cells() {
            if v == 1 {
                set(2 * i - 1, 2 * j - 1, 1);
                set(2 * i, 2 * j, 1);
            } else {
                set(2 * i, 2 * j - 1, -1);
                set(2 * i - 1, 2 * j, -1);
            }
        }
        Ok(GridMatrix { t: t2, u: u2, data })
    }

    /// Value-semantics cell update. Rejects updates that would zero out the
    /// whole matrix, which keeps every constructed value a legal class.
    pub fn set_cell(&self, i: usize, j: usize, v: i8) -> Result<GridMatrix> {
        assert!((-1..=1).contains(&v), "cell value must be -1, 0 or 1");
        if !self.in_bounds(i, j) {
            return Err(Error::OutOfBounds {
                i,
                j,
                t: self.t,
                u: self.u,
            });
        }
        let mut m = self.clone();
        m.data[(j - 1) * self.t + (i - 1)] = v;
        if m.nonzero_cells().next().is_none() {
            return Err(Error::EmptyMatrix);
        }
        Ok(m)
    }
}

impl std::fmt::Debug for GridMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GridMatrix({}x{})\n{}", self.t, self.u, self.render())
    }
}

impl std::fmt::Display for GridMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_display_order_into_cartesian_cells() {
        let m = GridMatrix::parse("1 0 -1\n1 -1 1\n").unwrap();
        assert_eq!((m.columns(), m.rows()), (3, 2));
        assert_eq!(m.get(1, 1), 1);
        assert_eq!(m.get(2, 1), -1);
        assert_eq!(m.get(3, 1), 1);
        assert_eq!(m.get(1, 2), 1);
        assert_eq!(m.get(2, 2), 0);
        assert_eq!(m.get(3, 2), -1);
    }

    #[test]
    fn smallest_matrix() {
        let m = GridMatrix::parse("1").unwrap();
        assert_eq!((m.columns(), m.rows()), (1, 1));
        assert_eq!(m.get(1, 1), 1);
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let m = GridMatrix::parse("# header\n\n1 0 # tail\n0 1\n").unwrap();
        assert_eq!(m.nonzero_count(), 2);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            GridMatrix::parse("0 0\n0 0\n"),
            Err(Error::EmptyMatrix)
        ));
        assert!(matches!(GridMatrix::parse(""), Err(Error::EmptyMatrix)));
        assert!(matches!(
            GridMatrix::parse("1 0\n1\n"),
            Err(Error::RaggedRows { line: 2 })
        ));
        assert!(matches!(
            GridMatrix::parse("1 2\n"),
            Err(Error::BadToken {
                line: 1,
                col: 2,
                ..
            })
        ));
        let wide = vec!["1"; 17].join(" ");
        assert!(matches!(
            GridMatrix::parse(&wide),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn render_round_trips() {
        let text = "1 0 -1\n1 -1 1\n";
        let m = GridMatrix::parse(text).unwrap();
        assert_eq!(m.render(), text);
        assert_eq!(GridMatrix::parse(&m.render()).unwrap(), m);
    }

    #[test]
    fn refinement_of_single_cell() {
        let m = GridMatrix::parse("1").unwrap().double_refinement().unwrap();
        assert_eq!((m.columns(), m.rows()), (2, 2));
        let cells: Vec<_> = m.nonzero_cells().collect();
        assert_eq!(cells, vec![(1, 1, 1), (2, 2, 1)]);

        let n = GridMatrix::parse("-1")
            .unwrap()
            .double_refinement()
            .unwrap();
        let cells: Vec<_> = n.nonzero_cells().collect();
        assert_eq!(cells, vec![(1, 2, -1), (2, 1, -1)]);
    }

    #[test]
    fn refinement_of_the_negative_cycle_matrix() {
        let m = GridMatrix::parse("1 0 -1\n1 -1 1\n").unwrap();
        let r = m.double_refinement().unwrap();
        assert_eq!((r.columns(), r.rows()), (6, 4));
        assert_eq!(
            r.rows_top_down(),
            vec![
                vec![0, 1, 0, 0, -1, 0],
                vec![1, 0, 0, 0, 0, -1],
                vec![0, 1, -1, 0, 0, 1],
                vec![1, 0, 0, -1, 1, 0],
            ]
        );
    }

    #[test]
    fn refinement_doubles_signed_cell_counts() {
        let m = GridMatrix::parse("1 0 -1\n1 -1 1\n").unwrap();
        let r = m.double_refinement().unwrap();
        assert_eq!(r.nonzero_count(), 2 * m.nonzero_count());
        let pos = |g: &GridMatrix| g.nonzero_cells().filter(|&(_, _, v)| v == 1).count();
        let neg = |g: &GridMatrix| g.nonzero_cells().filter(|&(_, _, v)| v == -1).count();
        assert_eq!(pos(&r), 2 * pos(&m));
        assert_eq!(neg(&r), 2 * neg(&m));
    }

    #[test]
    fn set_cell_value_semantics() {
        let pos_cycle = GridMatrix::parse("-1 0 -1\n1 -1 1\n").unwrap();
        let neg_cycle = GridMatrix::parse("1 0 -1\n1 -1 1\n").unwrap();
        // negating the (1,2) entry of the positive-cycle matrix gives the
        // negative-cycle one
        assert_eq!(pos_cycle.set_cell(1, 2, 1).unwrap(), neg_cycle);
        assert_eq!(pos_cycle.set_cell(1, 2, -1).unwrap(), pos_cycle);
        let back = neg_cycle
            .set_cell(1, 2, -1)
            .unwrap()
            .set_cell(1, 2, 1)
            .unwrap();
        assert_eq!(back, neg_cycle);

        assert!(matches!(
            neg_cycle.set_cell(4, 1, 0),
            Err(Error::OutOfBounds { .. })
        ));
        let single = GridMatrix::parse("1").unwrap();
        assert!(matches!(single.set_cell(1, 1, 0), Err(Error::EmptyMatrix)));
    }
}
