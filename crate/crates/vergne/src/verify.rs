//! Independent certification of claimed polarizing subalgebras.
//!
//! Everything here is computed from first principles — the bilinear bracket,
//! functional evaluation, a rank, and subspace membership — and never calls
//! into the polarization algorithms, so it can serve as an acceptance oracle
//! for all of them.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::lie::{Functional, LieAlgebra};
use crate::matrix::RatMatrix;
use crate::rational::Rational;
use crate::subspace::Subspace;

/// A concrete pair of vectors on which a condition fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureWitness {
    /// [x, y] lands outside the subspace.
    NotClosed {
        x: Vec<Rational>,
        y: Vec<Rational>,
        bracket: Vec<Rational>,
    },
    /// ℓ[x, y] ≠ 0.
    NotIsotropic {
        x: Vec<Rational>,
        y: Vec<Rational>,
        pairing: Rational,
    },
}

/// Outcome of checking the polarization conditions for a subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub is_subalgebra: bool,
    pub is_isotropic: bool,
    pub dimension_ok: bool,
    /// n − rank M(ℓ)/2, the dimension a polarizing subalgebra must have.
    pub expected_dim: usize,
    pub actual_dim: usize,
    /// First failing pair per failed condition, in basis order.
    pub witnesses: Vec<FailureWitness>,
}

impl VerificationReport {
    /// True iff the subspace is a polarization for ℓ.
    pub fn all_ok(&self) -> bool {
        self.is_subalgebra && self.is_isotropic && self.dimension_ok
    }
}

fn check_lengths(g: &LieAlgebra, ell: &Functional, p: &Subspace) -> Result<(), Error> {
    if ell.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: ell.len(),
        });
    }
    if p.ambient_dim() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: p.ambient_dim(),
        });
    }
    Ok(())
}

/// Rank of the skew form, rebuilt here from the bilinear bracket so the
/// computation shares nothing with the polarization code.
fn form_rank(g: &LieAlgebra, ell: &Functional) -> usize {
    let n = g.n();
    let basis: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            e
        })
        .collect();
    RatMatrix::from_fn(n, n, |r, c| {
        let v = g.bracket(&basis[r], &basis[c]).expect("basis vectors");
        ell.evaluate(&v).expect("length n")
    })
    .rank()
}

/// Check the two polarization conditions — closure+isotropy, and the exact
/// dimension n − d — reporting a witness for each failure.
pub fn verify_polarization(
    g: &LieAlgebra,
    ell: &Functional,
    p: &Subspace,
) -> Result<VerificationReport, Error> {
    check_lengths(g, ell, p)?;
    let mut is_subalgebra = true;
    let mut is_isotropic = true;
    let mut witnesses = Vec::new();
    let basis = p.basis();
    'outer: for (a, x) in basis.iter().enumerate() {
        for y in &basis[a + 1..] {
            let v = g.bracket(x, y).expect("ambient length");
            if is_subalgebra && !p.contains(&v) {
                is_subalgebra = false;
                witnesses.push(FailureWitness::NotClosed {
                    x: x.clone(),
                    y: y.clone(),
                    bracket: v.clone(),
                });
            }
            let pairing = ell.evaluate(&v).expect("length n");
            if is_isotropic && !pairing.is_zero() {
                is_isotropic = false;
                witnesses.push(FailureWitness::NotIsotropic {
                    x: x.clone(),
                    y: y.clone(),
                    pairing,
                });
            }
            if !is_subalgebra && !is_isotropic {
                break 'outer;
            }
        }
    }
    let rank = form_rank(g, ell);
    let expected_dim = g.n() - rank / 2;
    let actual_dim = p.dim();
    Ok(VerificationReport {
        is_subalgebra,
        is_isotropic,
        dimension_ok: expected_dim == actual_dim,
        expected_dim,
        actual_dim,
        witnesses,
    })
}

/// Subordination alone: ℓ kills every bracket of the subspace.
pub fn is_subordinated(g: &LieAlgebra, ell: &Functional, p: &Subspace) -> Result<bool, Error> {
    Ok(verify_polarization(g, ell, p)?.is_isotropic)
}

/// Brute-force maximality cross-check, intended for small algebras: true iff
/// no basis vector Z_i outside the subspace can be adjoined while keeping it
/// an isotropic subalgebra.
pub fn no_isotropic_extension(
    g: &LieAlgebra,
    ell: &Functional,
    p: &Subspace,
) -> Result<bool, Error> {
    check_lengths(g, ell, p)?;
    let n = g.n();
    for i in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        if p.contains(&e) {
            continue;
        }
        let extended = p
            .sum(&Subspace::from_vectors(n, vec![e]))
            .expect("same ambient");
        let report = verify_polarization(g, ell, &extended)?;
        if report.is_subalgebra && report.is_isotropic {
            return Ok(false);
        }
    }
    Ok(true)
}
