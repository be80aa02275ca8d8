//! Free nilpotent step-2 Lie algebras and their closed-form polarizations.
//!
//! The free step-2 algebra on m generators has basis Z_{ik} (1 ≤ i < k ≤ m,
//! central, listed first) and Z_1..Z_m, with [Z_i, Z_k] = Z_{ik} and all
//! other brackets zero. On the Zariski-open set where the even-order leading
//! generator blocks are nonsingular, the polarizing subalgebra has an
//! explicit spanning set: the center, Z_1, and one corrected generator line
//! per solved block.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::lie::{Functional, LieAlgebra};
use crate::matrix::RatMatrix;
use crate::polarize::{Method, PolarizationResult};
use crate::rational::Rational;
use crate::subspace::Subspace;

/// Basis bookkeeping for the free step-2 algebra on m generators.
///
/// Central vectors Z_{ik} occupy positions 1..m(m−1)/2 in lexicographic
/// (i,k) order; generator Z_i sits at position m(m−1)/2 + i.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreeStep2Layout {
    m: usize,
    central_dim: usize,
    n: usize,
}

impl FreeStep2Layout {
    pub fn new(m: usize) -> Result<Self, Error> {
        if m < 2 {
            return Err(Error::InvalidGeneratorCount { m });
        }
        let central_dim = m * (m - 1) / 2;
        Ok(FreeStep2Layout {
            m,
            central_dim,
            n: central_dim + m,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn central_dim(&self) -> usize {
        self.central_dim
    }

    /// 1-based basis position of the central vector Z_{ik}, 1 ≤ i < k ≤ m.
    pub fn central_position(&self, i: usize, k: usize) -> usize {
        assert!(1 <= i && i < k && k <= self.m, "need 1 <= i < k <= m");
        (i - 1) * self.m - i * (i - 1) / 2 + (k - i)
    }

    /// 1-based basis position of the generator Z_i, 1 ≤ i ≤ m.
    pub fn generator_position(&self, i: usize) -> usize {
        assert!(1 <= i && i <= self.m, "need 1 <= i <= m");
        self.central_dim + i
    }

    /// Basis labels: Z12, Z13, ..., then Z1..Zm.
    pub fn basis_names(&self) -> Vec<String> {
        let mut names = Vec::with_capacity(self.n);
        for i in 1..self.m {
            for k in i + 1..=self.m {
                if self.m <= 9 {
                    names.push(format!("Z{i}{k}"));
                } else {
                    names.push(format!("Z{i}_{k}"));
                }
            }
        }
        for i in 1..=self.m {
            names.push(format!("Z{i}"));
        }
        names
    }

    /// ℓ[Z_a, Z_b] for generators a, b — read straight off the central
    /// coordinates of the functional.
    fn pair_generators(&self, ell: &Functional, a: usize, b: usize) -> Rational {
        if a == b {
            return Rational::zero();
        }
        if a < b {
            ell.value(self.central_position(a, b)).clone()
        } else {
            -ell.value(self.central_position(b, a)).clone()
        }
    }

    fn check_len(&self, ell: &Functional) -> Result<(), Error> {
        if ell.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: ell.len(),
            });
        }
        Ok(())
    }
}

/// Construct and validate the free step-2 algebra on m generators.
pub fn build_free_step2(m: usize) -> Result<(LieAlgebra, FreeStep2Layout), Error> {
    let layout = FreeStep2Layout::new(m)?;
    let mut brackets = Vec::with_capacity(layout.central_dim());
    for i in 1..m {
        for k in i + 1..=m {
            let mut coeffs = vec![Rational::zero(); layout.n()];
            coeffs[layout.central_position(i, k) - 1] = Rational::one();
            brackets.push((layout.generator_position(i), layout.generator_position(k), coeffs));
        }
    }
    let g = LieAlgebra::new(layout.n(), &brackets)?.with_basis_names(layout.basis_names());
    Ok((g, layout))
}

/// The j×j generator block with entries ℓ[Z_a, Z_b] for generators
/// a, b ≤ j. Valid for 2 ≤ j ≤ m.
pub fn generator_block(
    layout: &FreeStep2Layout,
    ell: &Functional,
    j: usize,
) -> Result<RatMatrix, Error> {
    layout.check_len(ell)?;
    if j < 2 || j > layout.m() {
        return Err(Error::IndexOutOfRange {
            index: j,
            limit: layout.m(),
        });
    }
    Ok(RatMatrix::from_fn(j, j, |r, c| {
        layout.pair_generators(ell, r + 1, c + 1)
    }))
}

/// The column (ℓ[Z_1, Z_j], ..., ℓ[Z_{j−1}, Z_j])ᵀ bordering the (j−1)-block
/// inside the j-block; its mirror row is always the negated transpose.
pub fn v_vector(
    layout: &FreeStep2Layout,
    ell: &Functional,
    j: usize,
) -> Result<Vec<Rational>, Error> {
    layout.check_len(ell)?;
    if j < 2 || j > layout.m() {
        return Err(Error::IndexOutOfRange {
            index: j,
            limit: layout.m(),
        });
    }
    Ok((1..j).map(|a| layout.pair_generators(ell, a, j)).collect())
}

/// Pointwise Zariski condition: every even-order leading generator block
/// that the closed form must invert — sizes j−1 for odd j with 1 < j ≤ m —
/// is nonsingular. Vacuously true for m = 2.
pub fn zariski_check(layout: &FreeStep2Layout, ell: &Functional) -> Result<bool, Error> {
    layout.check_len(ell)?;
    let mut j = 3;
    while j <= layout.m() {
        let block = generator_block(layout, ell, j - 1)?;
        if block.rank() < j - 1 {
            return Ok(false);
        }
        j += 2;
    }
    Ok(true)
}

/// The closed-form spanning set for p(ℓ), in ambient coordinates and in
/// construction order: the center, Z_1, then one corrected line
/// Z_{2k+1} − μ_{2k}(M_0(ℓ_{2k})^{−1} v(ℓ_{2k+1})) per solved block, and —
/// for even m with a degenerate final block only — the final block's kernel.
///
/// Fails with ZariskiViolation exactly when the functional is outside the
/// Zariski set, i.e. some required inverse does not exist.
pub fn closed_form_spanning_set(
    layout: &FreeStep2Layout,
    ell: &Functional,
) -> Result<Vec<Vec<Rational>>, Error> {
    layout.check_len(ell)?;
    let n = layout.n();
    let m = layout.m();
    let dz = layout.central_dim();
    let mut vectors = Vec::new();
    for i in 0..dz {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        vectors.push(e);
    }
    let mut z1 = vec![Rational::zero(); n];
    z1[layout.generator_position(1) - 1] = Rational::one();
    vectors.push(z1);
    // Lines indexed by k = 1..s for odd m = 2s+1, k = 1..s−1 for even m = 2s.
    let lines = (m - 1) / 2;
    for k in 1..=lines {
        let block = generator_block(layout, ell, 2 * k)?;
        let inverse = block
            .inverse()
            .map_err(|_| Error::ZariskiViolation { order: 2 * k })?;
        let v = v_vector(layout, ell, 2 * k + 1)?;
        let correction = inverse.mul_vec(&v).expect("square system");
        let mut line = vec![Rational::zero(); n];
        line[layout.generator_position(2 * k + 1) - 1] = Rational::one();
        for (a, coeff) in correction.into_iter().enumerate() {
            line[layout.generator_position(a + 1) - 1] = -coeff;
        }
        vectors.push(line);
    }
    if m % 2 == 0 {
        // The Zariski condition never constrains the final even-order block;
        // when it is degenerate its kernel still belongs to p(ℓ).
        let final_block = generator_block(layout, ell, m)?;
        let kernel = final_block.nullspace();
        if !kernel.is_zero() {
            for w in kernel.basis() {
                let mut vec = vec![Rational::zero(); n];
                for (a, coeff) in w.iter().enumerate() {
                    vec[layout.generator_position(a + 1) - 1] = coeff.clone();
                }
                vectors.push(vec);
            }
        }
    }
    Ok(vectors)
}

/// Closed-form polarization on the Zariski set.
pub fn polarize_free(
    layout: &FreeStep2Layout,
    ell: &Functional,
) -> Result<PolarizationResult, Error> {
    let vectors = closed_form_spanning_set(layout, ell)?;
    let p = Subspace::from_vectors(layout.n(), vectors);
    // All of M(ℓ) outside the generator block is zero, so the block carries
    // the whole rank.
    let orbit_dim = generator_block(layout, ell, layout.m())?.rank();
    debug_assert_eq!(p.dim(), layout.n() - orbit_dim / 2);
    Ok(PolarizationResult {
        p_basis: p,
        orbit_dim,
        method: Method::FreeStep2,
        per_j_nullspaces: None,
    })
}
