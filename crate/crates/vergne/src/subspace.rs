//! Rational subspaces in canonical form.
//!
//! A subspace is stored as the reduced row-echelon basis of its span. The
//! canonical form is unique, so equality of subspaces is plain structural
//! equality and sums can be compared across algorithms with `==`.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::matrix::{rref_in_place, RatMatrix};
use crate::rational::Rational;

/// A linear subspace of `Q^n`, kept in reduced row-echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    /// Span of arbitrary vectors; reduces to the canonical basis.
    pub fn from_vectors(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == ambient_dim),
            "vector length does not match ambient dimension"
        );
        let rows = vectors.len();
        let mut entries: Vec<Rational> = vectors.into_iter().flatten().collect();
        let rank = rref_in_place(&mut entries, rows, ambient_dim);
        let basis = entries
            .chunks(ambient_dim.max(1))
            .take(rank)
            .map(<[Rational]>::to_vec)
            .collect();
        Subspace { ambient_dim, basis }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::standard(ambient_dim, ambient_dim)
    }

    /// Span of the first `k` standard basis vectors.
    pub fn standard(ambient_dim: usize, k: usize) -> Self {
        assert!(k <= ambient_dim);
        let basis = (0..k)
            .map(|i| {
                let mut v = vec![Rational::zero(); ambient_dim];
                v[i] = Rational::one();
                v
            })
            .collect();
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical (reduced row-echelon) basis.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Exact membership test by reducing `v` against the basis.
    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let mut residual = v.to_vec();
        for row in &self.basis {
            let pivot = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("canonical basis row is nonzero");
            let coeff = residual[pivot].clone();
            if coeff.is_zero() {
                continue;
            }
            for (res, base) in residual.iter_mut().zip(row) {
                if !base.is_zero() {
                    *res -= &coeff * base;
                }
            }
        }
        residual.iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient_dim == self.ambient_dim && other.basis.iter().all(|v| self.contains(v))
    }

    /// Smallest subspace containing both summands.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Ok(Self::from_vectors(self.ambient_dim, vectors))
    }

    /// Image under the coordinate inclusion `Q^k -> Q^ambient` that sends
    /// coordinate `i` to coordinate `offset + i`. Zero-padding a reduced
    /// echelon basis keeps it reduced, so no re-reduction is needed.
    pub fn embed(&self, ambient_dim: usize, offset: usize) -> Subspace {
        assert!(offset + self.ambient_dim <= ambient_dim);
        let basis: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .map(|row| {
                let mut v = vec![Rational::zero(); ambient_dim];
                v[offset..offset + self.ambient_dim].clone_from_slice(row);
                v
            })
            .collect();
        let embedded = Subspace { ambient_dim, basis };
        debug_assert_eq!(
            embedded,
            Subspace::from_vectors(ambient_dim, embedded.basis.clone())
        );
        embedded
    }

    /// Basis as the rows of a matrix, handy for rank arguments.
    pub fn as_matrix(&self) -> RatMatrix {
        RatMatrix::from_rows(self.basis.clone())
    }
}
