//! Dense matrices over the rationals with exact elimination.
//!
//! Row reduction pivots on the first nonzero entry of each column; over the
//! rationals no magnitude heuristics are needed and the reduced form is
//! unique, so ranks and nullspaces are exact.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::Rational;
use crate::subspace::Subspace;

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order, order);
        for i in 0..order {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix constructor"
        );
        RatMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut entry: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(entry(r, c));
            }
        }
        RatMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if *self.get(i, j) != -self.get(j, i).clone() {
                    return false;
                }
            }
        }
        true
    }

    /// Top-left `j` by `j` block, 1-based `j`.
    pub fn leading_submatrix(&self, j: usize) -> Result<RatMatrix, Error> {
        if j < 1 || j > self.rows.min(self.cols) {
            return Err(Error::IndexOutOfRange {
                index: j,
                limit: self.rows.min(self.cols),
            });
        }
        Ok(Self::from_fn(j, j, |r, c| self.get(r, c).clone()))
    }

    /// Square block with 0-based row and column range `lo..hi`.
    pub fn block(&self, lo: usize, hi: usize) -> RatMatrix {
        assert!(lo <= hi && hi <= self.rows.min(self.cols));
        Self::from_fn(hi - lo, hi - lo, |r, c| self.get(lo + r, lo + c).clone())
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        Ok(Self::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                acc += a * other.get(k, c);
            }
            acc
        }))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (c, x) in v.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    acc += self.get(r, c) * x;
                }
                acc
            })
            .collect())
    }

    /// Reduced row-echelon form together with the rank.
    pub fn rref(&self) -> (RatMatrix, usize) {
        let mut m = self.clone();
        let rank = rref_in_place(&mut m.entries, m.rows, m.cols);
        (m, rank)
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Exact kernel `{v : Mv = 0}` as a canonical subspace of `Q^cols`.
    pub fn nullspace(&self) -> Subspace {
        let (reduced, rank) = self.rref();
        let n = self.cols;
        // Pivot column of each of the first `rank` rows.
        let mut pivot_cols = Vec::with_capacity(rank);
        for r in 0..rank {
            let c = (0..n)
                .find(|&c| !reduced.get(r, c).is_zero())
                .expect("nonzero row above the rank must have a pivot");
            pivot_cols.push(c);
        }
        let mut is_pivot = vec![false; n];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        // One kernel vector per free column.
        let mut basis = Vec::with_capacity(n - rank);
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -reduced.get(r, free).clone();
            }
            basis.push(v);
        }
        Subspace::from_vectors(n, basis)
    }

    /// Exact inverse of a square matrix.
    pub fn inverse(&self) -> Result<RatMatrix, Error> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        // Gauss-Jordan on [M | I].
        let mut aug = RatMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let rank = rref_in_place(&mut aug.entries, n, 2 * n);
        if rank < n || (0..n).any(|r| (0..n).any(|c| *aug.get(r, c) != delta(r, c))) {
            return Err(Error::SingularMatrix);
        }
        Ok(Self::from_fn(n, n, |r, c| aug.get(r, n + c).clone()))
    }
}

fn delta(r: usize, c: usize) -> Rational {
    if r == c {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// In-place Gauss-Jordan reduction; returns the rank. Pivots on the first
/// nonzero entry of each column.
pub(crate) fn rref_in_place(entries: &mut [Rational], rows: usize, cols: usize) -> usize {
    let idx = |r: usize, c: usize| r * cols + c;
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        let Some(found) = (pivot_row..rows).find(|&r| !entries[idx(r, col)].is_zero()) else {
            continue;
        };
        if found != pivot_row {
            for c in 0..cols {
                entries.swap(idx(found, c), idx(pivot_row, c));
            }
        }
        let pivot = entries[idx(pivot_row, col)].clone();
        if !pivot.is_one() {
            for c in col..cols {
                let cell = &mut entries[idx(pivot_row, c)];
                if !cell.is_zero() {
                    *cell /= &pivot;
                }
            }
        }
        for r in 0..rows {
            if r == pivot_row {
                continue;
            }
            let factor = entries[idx(r, col)].clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..cols {
                let above = entries[idx(pivot_row, c)].clone();
                if above.is_zero() {
                    continue;
                }
                let cell = &mut entries[idx(r, c)];
                *cell -= &factor * above;
            }
        }
        pivot_row += 1;
    }
    pivot_row
}
