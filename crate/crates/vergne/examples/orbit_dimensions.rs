//! Orbit dimensions across the catalog: for each built-in algebra, sample
//! functionals and tabulate rank M(ell) against dim p(ell). The two are tied
//! by dim p = n - rank/2, so each row of the table is one coadjoint-orbit
//! stratum.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use vergne::catalog;
use vergne::polarize::{orbit_dimension, polarize_auto};
use vergne::{Functional, Rational};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for entry in catalog::entries() {
        let n = entry.algebra.n();
        let mut strata: BTreeMap<usize, usize> = BTreeMap::new();
        for _ in 0..300 {
            let values: Vec<Rational> = (0..n)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        Rational::zero()
                    } else {
                        Rational::from_integer(rng.gen_range(-5i64..=5).into())
                    }
                })
                .collect();
            let ell = Functional::new(values);
            let orbit = orbit_dimension(&entry.algebra, &ell).unwrap();
            let result = polarize_auto(&entry.algebra, &ell).unwrap();
            assert_eq!(result.p_basis.dim(), n - orbit / 2);
            *strata.entry(orbit).or_default() += 1;
        }
        println!("{} (dim {n}):", entry.name);
        for (orbit, count) in strata {
            println!(
                "  orbit dim {orbit:2}  ->  dim p {:2}   ({count} of 300 samples)",
                n - orbit / 2
            );
        }
    }
}
