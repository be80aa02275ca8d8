//! Vergne polarizing subalgebras.
//!
//! For a functional ℓ the skew form B(X,Y) = ℓ[X,Y] has matrix M(ℓ) in the
//! Malcev basis. The polarizing subalgebra is the sum over j of the radicals
//! r(ℓ_j) = nullspace of the leading j×j submatrix, each embedded back into
//! ambient coordinates. The refined algorithm obtains the same subspace from
//! the center outward: central leading blocks vanish, so only the
//! non-central block of each M(ℓ_j) has to be examined, and blocks of full
//! rank contribute nothing at all.

use std::fmt;

use num_traits::Zero;

use crate::error::Error;
use crate::lie::{Functional, LieAlgebra};
use crate::matrix::RatMatrix;
use crate::subspace::Subspace;

/// Which algorithm produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Basic,
    Refined,
    FreeStep2,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Basic => "basic",
            Method::Refined => "refined",
            Method::FreeStep2 => "free_step2",
        })
    }
}

/// A computed polarizing subalgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizationResult {
    /// The polarizing subalgebra p(ℓ), canonical basis in ambient coordinates.
    pub p_basis: Subspace,
    /// rank M(ℓ) = 2d, the dimension of the coadjoint orbit through ℓ.
    pub orbit_dim: usize,
    pub method: Method,
    /// Radicals r(ℓ_j) per j, in ambient coordinates, when the algorithm
    /// tracks them (the closed-form construction does not).
    pub per_j_nullspaces: Option<Vec<(usize, Subspace)>>,
}

/// The sizes s at which the non-central block attains full rank, so that its
/// radical collapses into the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    /// Sorted members s with 1 < s ≤ n − dim z(g).
    pub members: Vec<usize>,
    /// True when the algebra is abelian, i.e. the range of candidate sizes
    /// is empty and the set is trivially empty.
    pub abelian: bool,
}

impl IndexSet {
    pub fn contains(&self, s: usize) -> bool {
        self.members.binary_search(&s).is_ok()
    }
}

/// The n×n skew-symmetric matrix with entry (i,j) = ℓ[Z_i, Z_j].
pub fn form_matrix(g: &LieAlgebra, ell: &Functional) -> Result<RatMatrix, Error> {
    let n = g.n();
    if ell.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: ell.len(),
        });
    }
    let mut m = RatMatrix::zeros(n, n);
    for i in 1..=n {
        for j in i + 1..=n {
            let value = ell.pair_basis(g, i, j);
            if !value.is_zero() {
                m.set(j - 1, i - 1, -value.clone());
                m.set(i - 1, j - 1, value);
            }
        }
    }
    debug_assert!(m.is_skew_symmetric());
    Ok(m)
}

/// Dimension of the coadjoint orbit through ℓ: rank M(ℓ), always even.
pub fn orbit_dimension(g: &LieAlgebra, ell: &Functional) -> Result<usize, Error> {
    let rank = form_matrix(g, ell)?.rank();
    debug_assert_eq!(rank % 2, 0, "skew-symmetric matrices have even rank");
    Ok(rank)
}

/// The block of M(ℓ_j) indexed by the non-central basis vectors
/// Z_{dim z + 1}..Z_j. Defined only past the center, i.e. for
/// dim z(g) + 1 < j ≤ n; everything before that is a zero matrix.
pub fn noncentral_block(g: &LieAlgebra, ell: &Functional, j: usize) -> Result<RatMatrix, Error> {
    let n = g.n();
    let dz = g.center_dim();
    if ell.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: ell.len(),
        });
    }
    if j <= dz + 1 || j > n {
        return Err(Error::IndexOutOfRange { index: j, limit: n });
    }
    let s = j - dz;
    let mut m = RatMatrix::zeros(s, s);
    for a in 0..s {
        for b in a + 1..s {
            let value = ell.pair_basis(g, dz + a + 1, dz + b + 1);
            if !value.is_zero() {
                m.set(b, a, -value.clone());
                m.set(a, b, value);
            }
        }
    }
    Ok(m)
}

/// Membership by rank test for every candidate size.
pub fn index_set(g: &LieAlgebra, ell: &Functional) -> Result<IndexSet, Error> {
    let n = g.n();
    let dz = g.center_dim();
    if ell.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: ell.len(),
        });
    }
    if dz == n {
        return Ok(IndexSet {
            members: Vec::new(),
            abelian: true,
        });
    }
    let mut members = Vec::new();
    for s in 2..=n - dz {
        if noncentral_block(g, ell, dz + s)?.rank() == s {
            members.push(s);
        }
    }
    Ok(IndexSet {
        members,
        abelian: false,
    })
}

/// Baseline algorithm: sum the nullspaces of all leading submatrices.
pub fn polarize_basic(g: &LieAlgebra, ell: &Functional) -> Result<PolarizationResult, Error> {
    let n = g.n();
    let m = form_matrix(g, ell)?;
    let mut p = Subspace::zero(n);
    let mut trace = Vec::with_capacity(n);
    for j in 1..=n {
        let radical = m
            .leading_submatrix(j)
            .expect("1 <= j <= n")
            .nullspace()
            .embed(n, 0);
        p = p.sum(&radical).expect("same ambient");
        trace.push((j, radical));
    }
    let orbit_dim = m.rank();
    debug_assert_eq!(p.dim(), n - orbit_dim / 2);
    Ok(PolarizationResult {
        p_basis: p,
        orbit_dim,
        method: Method::Basic,
        per_j_nullspaces: Some(trace),
    })
}

/// Center-refined algorithm: p(ℓ) = z(g) + ℝZ_{dim z + 1} + the radicals of
/// the non-central blocks whose size is not in the index set.
///
/// Produces the same subspace as [`polarize_basic`]; the radicals it skips
/// are known in closed form (g_j through the center, z(g) at full-rank
/// sizes), so the trace is still complete.
pub fn polarize_refined(g: &LieAlgebra, ell: &Functional) -> Result<PolarizationResult, Error> {
    let n = g.n();
    let dz = g.center_dim();
    if ell.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: ell.len(),
        });
    }
    if g.is_abelian() {
        // Every leading submatrix is zero, so every radical is all of g_j.
        let trace = (1..=n).map(|j| (j, g.initial_ideal(j))).collect();
        return Ok(PolarizationResult {
            p_basis: Subspace::full(n),
            orbit_dim: 0,
            method: Method::Refined,
            per_j_nullspaces: Some(trace),
        });
    }
    let center = Subspace::standard(n, dz);
    // z(g) + ℝZ_{dim z + 1} = g_{dim z + 1}.
    let mut p = Subspace::standard(n, dz + 1);
    let mut trace: Vec<(usize, Subspace)> =
        (1..=(dz + 1).min(n)).map(|j| (j, g.initial_ideal(j))).collect();
    for s in 2..=n - dz {
        let j = dz + s;
        let block = noncentral_block(g, ell, j)?;
        let (_, rank) = block.rref();
        if rank == s {
            // Full-rank block: the radical collapses to the center.
            trace.push((j, center.clone()));
            continue;
        }
        let radical = center
            .sum(&block.nullspace().embed(n, dz))
            .expect("same ambient");
        p = p.sum(&radical).expect("same ambient");
        trace.push((j, radical));
    }
    let orbit_dim = orbit_dimension(g, ell)?;
    debug_assert_eq!(p.dim(), n - orbit_dim / 2);
    Ok(PolarizationResult {
        p_basis: p,
        orbit_dim,
        method: Method::Refined,
        per_j_nullspaces: Some(trace),
    })
}

/// Entry point used by the CLI: the refined algorithm wherever it applies,
/// the baseline otherwise.
pub fn polarize_auto(g: &LieAlgebra, ell: &Functional) -> Result<PolarizationResult, Error> {
    if g.is_abelian() || g.center_dim() == 0 {
        polarize_basic(g, ell)
    } else {
        polarize_refined(g, ell)
    }
}
