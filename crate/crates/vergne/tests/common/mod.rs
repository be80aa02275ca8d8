//! Shared helpers for the integration tests: seeded random functionals and
//! random (but always valid) step-2 algebras.
#![allow(dead_code)]

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vergne::free_step2::zariski_check;
use vergne::{FreeStep2Layout, Functional, LieAlgebra, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut impl Rng) -> Rational {
    let num = rng.gen_range(-6i64..=6);
    let den = rng.gen_range(1i64..=4);
    Rational::new(num.into(), den.into())
}

/// Random functional with a mix of zero and small rational coordinates.
pub fn random_functional(rng: &mut impl Rng, n: usize) -> Functional {
    let values = (0..n)
        .map(|_| {
            if rng.gen_bool(0.25) {
                Rational::zero()
            } else {
                small_rational(rng)
            }
        })
        .collect();
    Functional::new(values)
}

/// Random step-2 nilpotent algebra: generator brackets land in the center,
/// so antisymmetry, Jacobi, Malcev and nilpotency hold by construction.
/// Resamples until the center is an initial segment of the basis.
pub fn random_step2_algebra(rng: &mut impl Rng) -> LieAlgebra {
    for _ in 0..200 {
        let c = rng.gen_range(1usize..=3);
        let gens = rng.gen_range(2usize..=4);
        let n = c + gens;
        let mut relations: Vec<(usize, usize, Vec<Rational>)> = Vec::new();
        for j in c + 1..=n {
            for i in j + 1..=n {
                let coeffs: Vec<Rational> = (0..n)
                    .map(|k| {
                        if k < c && rng.gen_bool(0.6) {
                            Rational::from_integer(rng.gen_range(-3i64..=3).into())
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect();
                relations.push((i, j, coeffs));
            }
        }
        if let Ok(g) = LieAlgebra::new(n, &relations) {
            return g;
        }
    }
    panic!("failed to sample a valid step-2 algebra in 200 attempts");
}

/// Random functional on the free step-2 algebra that passes the Zariski
/// check, by rejection sampling.
pub fn random_zariski_functional(rng: &mut impl Rng, layout: &FreeStep2Layout) -> Functional {
    loop {
        let ell = random_functional(rng, layout.n());
        if zariski_check(layout, &ell).expect("well-formed functional") {
            return ell;
        }
    }
}

/// Random functional that fails the Zariski check at order 2: the Z12
/// coordinate is forced to zero, so the leading 2x2 generator block is
/// singular. Only meaningful for m >= 3 (for m = 2 the check is vacuous).
pub fn zariski_failing_functional(rng: &mut impl Rng, layout: &FreeStep2Layout) -> Functional {
    assert!(layout.m() >= 3);
    let mut values = random_functional(rng, layout.n()).values().to_vec();
    values[layout.central_position(1, 2) - 1] = Rational::zero();
    let ell = Functional::new(values);
    assert!(!zariski_check(layout, &ell).expect("well-formed functional"));
    ell
}
