//! Closed-form polarizations on free step-2 nilpotent algebras.
//!
//! On the free step-2 algebra the polarization of a generic functional can
//! be written down directly: the center, the first generator, and one
//! correction line per pair of generators, each obtained from a single
//! matrix inverse. No echelon pass over the full algebra is needed.

use vergne::free_step2::{build_free_step2, polarize_free, zariski_check};
use vergne::polarize::polarize_basic;
use vergne::rational::format_combination;
use vergne::{Error, Functional};

fn main() {
    let (g, layout) = build_free_step2(3).unwrap();
    println!(
        "free step-2 on 3 generators: dim {}, center dim {}",
        layout.n(),
        layout.central_dim()
    );
    println!("basis: {}", g.basis_names().join(" "));

    // ell assigns 1, 2, 3 to the central directions Z12, Z13, Z23
    let ell = Functional::from_ints(&[1, 2, 3, 0, 0, 0]);
    assert!(zariski_check(&layout, &ell).unwrap());

    let closed = polarize_free(&layout, &ell).unwrap();
    println!("closed form, dim p = {}:", closed.p_basis.dim());
    for v in closed.p_basis.basis() {
        println!("  {}", format_combination(v, g.basis_names()));
    }

    // same subspace as the general algorithm
    let basic = polarize_basic(&g, &ell).unwrap();
    assert_eq!(closed.p_basis, basic.p_basis);
    println!("matches the general algorithm exactly");

    // off the Zariski-open set the closed form refuses instead of guessing
    let degenerate = Functional::from_ints(&[0, 5, 7, 0, 0, 0]);
    match polarize_free(&layout, &degenerate) {
        Err(Error::ZariskiViolation { order }) => {
            println!("ell with l(Z12) = 0: generator block of order {order} is singular");
        }
        other => panic!("expected a refusal, got {other:?}"),
    }
    let fallback = polarize_basic(&g, &degenerate).unwrap();
    println!(
        "general algorithm still applies: dim p = {}, orbit dim = {}",
        fallback.p_basis.dim(),
        fallback.orbit_dim
    );
}
