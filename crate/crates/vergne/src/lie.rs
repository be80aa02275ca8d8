//! Nilpotent Lie algebras presented by structure constants over a strong
//! Malcev basis.
//!
//! The basis `Z_1..Z_n` must satisfy two ordering conditions, both enforced
//! at construction: every initial span `g_j = span{Z_1..Z_j}` is an ideal
//! (encoded as `c[i][j][k] = 0` for `k >= min(i,j)`), and the first
//! `center_dim` vectors span the center exactly.

use num_traits::Zero;

use crate::error::Error;
use crate::matrix::RatMatrix;
use crate::rational::{rat_int, Rational};
use crate::subspace::Subspace;

/// One declared bracket: `(i, j, coeffs)` means `[Z_i, Z_j] = Σ_k coeffs[k-1]·Z_k`.
pub type BracketRelation = (usize, usize, Vec<Rational>);

/// A nilpotent Lie algebra with a fixed strong Malcev basis through the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    n: usize,
    /// Flat structure-constant tensor; the `(i,j)` slice holds the
    /// coefficient vector of `[Z_i, Z_j]`.
    c: Vec<Rational>,
    /// Per-pair cache: is `[Z_i, Z_j]` nonzero? Keeps the Jacobi sweep and
    /// bracket evaluation cheap on sparse algebras.
    pair_nonzero: Vec<bool>,
    basis_names: Vec<String>,
    center_dim: usize,
}

impl LieAlgebra {
    /// Build and fully validate an algebra from bracket relations.
    ///
    /// Relations may be given in either orientation; the antisymmetric
    /// completion is applied automatically and inconsistent duplicates are
    /// rejected. Validation order: antisymmetry, Malcev chain condition,
    /// Jacobi identity, nilpotency, center-through-the-basis.
    pub fn new(n: usize, brackets: &[BracketRelation]) -> Result<Self, Error> {
        let mut g = Self::assemble(n, brackets)?;
        g.check_malcev()?;
        g.check_jacobi()?;
        g.check_nilpotent()?;
        let z = g.center();
        if z != Subspace::standard(n, z.dim()) {
            return Err(Error::CenterNotInitial {
                actual_dim: z.dim(),
            });
        }
        g.center_dim = z.dim();
        Ok(g)
    }

    /// Escape hatch for algebras known valid by construction (catalog
    /// entries, generated families): skips the Malcev/Jacobi/nilpotency
    /// sweeps but still completes antisymmetry and computes the center.
    pub fn trusted(n: usize, brackets: &[BracketRelation]) -> Result<Self, Error> {
        let mut g = Self::assemble(n, brackets)?;
        debug_assert!(g.check_malcev().is_ok());
        debug_assert!(g.check_jacobi().is_ok());
        let z = g.center();
        debug_assert_eq!(z, Subspace::standard(n, z.dim()));
        g.center_dim = z.dim();
        Ok(g)
    }

    /// Convenience form of [`LieAlgebra::new`] for integer structure
    /// constants: each relation is `(i, j, [(k, coeff), ...])`.
    pub fn from_integer_brackets(
        n: usize,
        brackets: &[(usize, usize, &[(usize, i64)])],
    ) -> Result<Self, Error> {
        let relations: Vec<BracketRelation> = brackets
            .iter()
            .map(|&(i, j, terms)| {
                let mut coeffs = vec![Rational::zero(); n];
                for &(k, val) in terms {
                    assert!(k >= 1 && k <= n, "coefficient index out of range");
                    coeffs[k - 1] += rat_int(val);
                }
                (i, j, coeffs)
            })
            .collect();
        Self::new(n, &relations)
    }

    fn assemble(n: usize, brackets: &[BracketRelation]) -> Result<Self, Error> {
        let mut c = vec![Rational::zero(); n * n * n];
        let mut given = vec![false; n * n];
        for (i, j, coeffs) in brackets {
            let (i, j) = (*i, *j);
            if i < 1 || i > n {
                return Err(Error::IndexOutOfRange { index: i, limit: n });
            }
            if j < 1 || j > n {
                return Err(Error::IndexOutOfRange { index: j, limit: n });
            }
            if coeffs.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: coeffs.len(),
                });
            }
            if i == j {
                if coeffs.iter().any(|x| !x.is_zero()) {
                    return Err(Error::AntisymmetryConflict { i, j });
                }
                continue;
            }
            let fwd = (i - 1) * n + (j - 1);
            let rev = (j - 1) * n + (i - 1);
            if given[fwd] || given[rev] {
                // A repeat is fine only if it agrees with what is stored.
                let consistent = (0..n).all(|k| c[fwd * n + k] == coeffs[k]);
                if !consistent {
                    return Err(Error::AntisymmetryConflict { i, j });
                }
                continue;
            }
            for (k, val) in coeffs.iter().enumerate() {
                c[fwd * n + k] = val.clone();
                c[rev * n + k] = -val.clone();
            }
            given[fwd] = true;
            given[rev] = true;
        }
        let pair_nonzero = (0..n * n)
            .map(|p| c[p * n..(p + 1) * n].iter().any(|x| !x.is_zero()))
            .collect();
        Ok(LieAlgebra {
            n,
            c,
            pair_nonzero,
            basis_names: (1..=n).map(|i| format!("Z{i}")).collect(),
            center_dim: 0,
        })
    }

    fn check_malcev(&self) -> Result<(), Error> {
        for i in 2..=self.n {
            for j in 1..i {
                if !self.pair_nonzero[(i - 1) * self.n + (j - 1)] {
                    continue;
                }
                let row = self.bracket_basis(i, j);
                for k in j..=self.n {
                    if !row[k - 1].is_zero() {
                        return Err(Error::MalcevViolation {
                            i,
                            j,
                            k,
                            value: row[k - 1].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_jacobi(&self) -> Result<(), Error> {
        // [[Z_x, Z_y], Z_z], expanded only over the nonzero coefficients of
        // the inner bracket.
        let term = |acc: &mut [Rational], x: usize, y: usize, z: usize| {
            if !self.pair_nonzero[(x - 1) * self.n + (y - 1)] {
                return;
            }
            for (a0, coeff) in self.bracket_basis(x, y).iter().enumerate() {
                if coeff.is_zero() || !self.pair_nonzero[a0 * self.n + (z - 1)] {
                    continue;
                }
                for (slot, inner) in acc.iter_mut().zip(self.bracket_basis(a0 + 1, z)) {
                    if !inner.is_zero() {
                        *slot += coeff * inner;
                    }
                }
            }
        };
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                for k in j + 1..=self.n {
                    let mut jac = vec![Rational::zero(); self.n];
                    term(&mut jac, i, j, k);
                    term(&mut jac, j, k, i);
                    term(&mut jac, k, i, j);
                    if jac.iter().any(|x| !x.is_zero()) {
                        return Err(Error::JacobiViolation {
                            i,
                            j,
                            k,
                            jacobiator: jac,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_nilpotent(&self) -> Result<(), Error> {
        // Lower central series; each term is an ideal, so the chain is
        // strictly decreasing until it hits zero.
        let mut current = Subspace::full(self.n);
        for _ in 0..=self.n {
            if current.is_zero() {
                return Ok(());
            }
            let mut products = Vec::new();
            for i in 1..=self.n {
                for b in current.basis() {
                    let v = self
                        .bracket_with_basis(i, b)
                        .expect("basis vector has ambient length");
                    if v.iter().any(|x| !x.is_zero()) {
                        products.push(v);
                    }
                }
            }
            let next = Subspace::from_vectors(self.n, products);
            if next.dim() == current.dim() {
                return Err(Error::NotNilpotent);
            }
            current = next;
        }
        Err(Error::NotNilpotent)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn center_dim(&self) -> usize {
        self.center_dim
    }

    pub fn is_abelian(&self) -> bool {
        self.pair_nonzero.iter().all(|&b| !b)
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Name of basis vector `Z_i`, 1-based.
    pub fn basis_name(&self, i: usize) -> &str {
        &self.basis_names[i - 1]
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n, "one name per basis vector");
        self.basis_names = names;
        self
    }

    /// Coefficient vector of `[Z_i, Z_j]`, 1-based indices.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        let p = (i - 1) * self.n + (j - 1);
        &self.c[p * self.n..(p + 1) * self.n]
    }

    /// Structure constant `c[i][j][k]`, all 1-based.
    pub fn struct_const(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.bracket_basis(i, j)[k - 1]
    }

    /// `[Z_i, Y]` for a coordinate vector `Y`.
    fn bracket_with_basis(&self, i: usize, y: &[Rational]) -> Result<Vec<Rational>, Error> {
        if y.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: y.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.n];
        for (j0, yc) in y.iter().enumerate() {
            if yc.is_zero() || !self.pair_nonzero[(i - 1) * self.n + j0] {
                continue;
            }
            for (slot, cc) in out.iter_mut().zip(self.bracket_basis(i, j0 + 1)) {
                if !cc.is_zero() {
                    *slot += yc * cc;
                }
            }
        }
        Ok(out)
    }

    /// Bilinear bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, Error> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        if y.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: y.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.n];
        for (i0, xc) in x.iter().enumerate() {
            if xc.is_zero() {
                continue;
            }
            for (j0, yc) in y.iter().enumerate() {
                if yc.is_zero() || !self.pair_nonzero[i0 * self.n + j0] {
                    continue;
                }
                for (slot, cc) in out.iter_mut().zip(self.bracket_basis(i0 + 1, j0 + 1)) {
                    if !cc.is_zero() {
                        *slot += xc * yc * cc;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Center `{X : [X, Z_j] = 0 for all j}`, computed as the nullspace of
    /// the stacked adjoint equations.
    pub fn center(&self) -> Subspace {
        // X = Σ_a x_a Z_a is central iff Σ_a x_a c[a][j][k] = 0 for all j,k.
        let mut rows = Vec::new();
        for j in 1..=self.n {
            for k in 1..=self.n {
                let row: Vec<Rational> = (1..=self.n)
                    .map(|a| self.struct_const(a, j, k).clone())
                    .collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return Subspace::full(self.n);
        }
        RatMatrix::from_rows(rows).nullspace()
    }

    /// The ideal `g_j = span{Z_1..Z_j}`.
    pub fn initial_ideal(&self, j: usize) -> Subspace {
        Subspace::standard(self.n, j)
    }

    /// Same dimension and structure constants, ignoring display names.
    pub fn structure_equals(&self, other: &LieAlgebra) -> bool {
        self.n == other.n && self.c == other.c
    }
}

/// A linear functional on the algebra, stored by its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functional {
    values: Vec<Rational>,
}

impl Functional {
    pub fn new(values: Vec<Rational>) -> Self {
        Functional { values }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Functional {
            values: values.iter().map(|&v| rat_int(v)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `ℓ(Z_i)`, 1-based.
    pub fn value(&self, i: usize) -> &Rational {
        &self.values[i - 1]
    }

    /// `ℓ(X) = Σ_i values[i]·X[i]`.
    pub fn evaluate(&self, x: &[Rational]) -> Result<Rational, Error> {
        if x.len() != self.values.len() {
            return Err(Error::DimensionMismatch {
                expected: self.values.len(),
                found: x.len(),
            });
        }
        let mut acc = Rational::zero();
        for (v, xc) in self.values.iter().zip(x) {
            if !v.is_zero() && !xc.is_zero() {
                acc += v * xc;
            }
        }
        Ok(acc)
    }

    /// `ℓ[Z_i, Z_j]` — the pairing that fills the skew form matrix.
    pub fn pair_basis(&self, g: &LieAlgebra, i: usize, j: usize) -> Rational {
        self.evaluate(g.bracket_basis(i, j))
            .expect("functional length matches the algebra dimension")
    }

    pub fn scaled(&self, t: &Rational) -> Functional {
        Functional {
            values: self.values.iter().map(|v| v * t).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    pub fn heisenberg() -> LieAlgebra {
        LieAlgebra::from_integer_brackets(3, &[(3, 2, &[(1, 1)])]).unwrap()
    }

    #[test]
    fn heisenberg_is_valid_with_central_line() {
        let g = heisenberg();
        assert_eq!(g.n(), 3);
        assert_eq!(g.center_dim(), 1);
        assert_eq!(g.center(), Subspace::standard(3, 1));
        assert!(!g.is_abelian());
        assert_eq!(g.basis_name(2), "Z2");
    }

    #[test]
    fn antisymmetric_completion() {
        let g = heisenberg();
        assert_eq!(*g.struct_const(3, 2, 1), rat_int(1));
        assert_eq!(*g.struct_const(2, 3, 1), rat_int(-1));
        assert_eq!(*g.struct_const(1, 2, 1), rat_int(0));
    }

    #[test]
    fn consistent_duplicate_is_accepted() {
        let g = LieAlgebra::new(
            3,
            &[
                (3, 2, vec![rat_int(1), rat_int(0), rat_int(0)]),
                (2, 3, vec![rat_int(-1), rat_int(0), rat_int(0)]),
            ],
        );
        assert!(g.is_ok());
    }

    #[test]
    fn conflicting_duplicate_is_rejected() {
        let err = LieAlgebra::new(
            3,
            &[
                (3, 2, vec![rat_int(1), rat_int(0), rat_int(0)]),
                (2, 3, vec![rat_int(1), rat_int(0), rat_int(0)]),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::AntisymmetryConflict { i: 2, j: 3 }));
    }

    #[test]
    fn jacobi_violation_reports_triple_and_jacobiator() {
        let err = LieAlgebra::from_integer_brackets(5, &[(4, 3, &[(2, 1)]), (5, 2, &[(1, 1)])])
            .unwrap_err();
        match err {
            Error::JacobiViolation { i, j, k, jacobiator } => {
                assert_eq!((i, j, k), (3, 4, 5));
                let expected: Vec<Rational> =
                    [1, 0, 0, 0, 0].iter().map(|&x| rat_int(x)).collect();
                assert_eq!(jacobiator, expected);
            }
            other => panic!("expected JacobiViolation, got {other:?}"),
        }
    }

    #[test]
    fn malcev_violation_reports_offending_constant() {
        let err = LieAlgebra::from_integer_brackets(3, &[(3, 2, &[(3, 1)])]).unwrap_err();
        assert!(matches!(err, Error::MalcevViolation { i: 3, j: 2, k: 3, .. }));
    }

    #[test]
    fn center_must_be_an_initial_segment() {
        // [Z4, Z2] = Z1 leaves Z3 central but Z2 not: center = span{Z1, Z3}.
        let err = LieAlgebra::from_integer_brackets(4, &[(4, 2, &[(1, 1)])]).unwrap_err();
        assert!(matches!(err, Error::CenterNotInitial { actual_dim: 2 }));
    }

    #[test]
    fn abelian_algebra_has_full_center() {
        let g = LieAlgebra::new(4, &[]).unwrap();
        assert!(g.is_abelian());
        assert_eq!(g.center_dim(), 4);
        assert_eq!(g.center(), Subspace::full(4));
    }

    #[test]
    fn bracket_is_bilinear_and_alternating() {
        let g = heisenberg();
        let z2 = vec![rat_int(0), rat_int(1), rat_int(0)];
        let z3 = vec![rat_int(0), rat_int(0), rat_int(1)];
        let z2_plus_z3 = vec![rat_int(0), rat_int(1), rat_int(1)];
        assert_eq!(
            g.bracket(&z3, &z2).unwrap(),
            vec![rat_int(1), rat_int(0), rat_int(0)]
        );
        assert_eq!(g.bracket(&z2_plus_z3, &z2).unwrap(), g.bracket(&z3, &z2).unwrap());
        assert!(g.bracket(&z2_plus_z3, &z2_plus_z3).unwrap().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn bracket_checks_lengths() {
        let g = heisenberg();
        let short = vec![rat_int(1)];
        let ok = vec![rat_int(1), rat_int(0), rat_int(0)];
        assert!(matches!(
            g.bracket(&short, &ok),
            Err(Error::DimensionMismatch { expected: 3, found: 1 })
        ));
    }

    #[test]
    fn functional_evaluation() {
        let ell = Functional::from_ints(&[1, 2, 3]);
        let x = vec![rat_int(1), rat_int(1), rat_int(-1)];
        assert_eq!(ell.evaluate(&x).unwrap(), rat_int(0));
        assert_eq!(*ell.value(2), rat_int(2));
        assert!(matches!(
            ell.evaluate(&[rat_int(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn functional_pairing_reads_off_structure_constants() {
        let g = heisenberg();
        let ell = Functional::from_ints(&[1, 0, 0]);
        assert_eq!(ell.pair_basis(&g, 3, 2), rat_int(1));
        assert_eq!(ell.pair_basis(&g, 2, 3), rat_int(-1));
        assert_eq!(ell.pair_basis(&g, 1, 2), rat_int(0));
    }

    #[test]
    fn scaling_a_functional() {
        let ell = Functional::from_ints(&[1, -2, 0]).scaled(&rat(1, 2));
        assert_eq!(ell.values(), &[rat(1, 2), rat_int(-1), rat_int(0)]);
    }

    #[test]
    fn trusted_matches_validated_construction() {
        let a = heisenberg();
        let b = LieAlgebra::trusted(3, &[(3, 2, vec![rat_int(1), rat_int(0), rat_int(0)])])
            .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn filiform_examples_validate() {
        let f4 = LieAlgebra::from_integer_brackets(4, &[(4, 3, &[(2, 1)]), (4, 2, &[(1, 1)])])
            .unwrap();
        assert_eq!(f4.center_dim(), 1);
        let f5 = LieAlgebra::from_integer_brackets(
            5,
            &[(5, 4, &[(3, 1)]), (5, 3, &[(2, 1)]), (5, 2, &[(1, 1)])],
        )
        .unwrap();
        assert_eq!(f5.center_dim(), 1);
    }

    #[test]
    fn out_of_range_bracket_index() {
        let err = LieAlgebra::new(2, &[(3, 1, vec![rat_int(0), rat_int(0)])]).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { index: 3, limit: 2 }));
    }
}
