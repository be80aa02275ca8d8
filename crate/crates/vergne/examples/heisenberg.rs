//! The smallest interesting case: the 3-dimensional Heisenberg algebra,
//! [Z3, Z2] = Z1, polarized at the generic functional ell = Z1*.
//!
//! Run with: cargo run --example heisenberg

use vergne::polarize::polarize_auto;
use vergne::rational::{format_combination, format_vector};
use vergne::verify::verify_polarization;
use vergne::{Functional, LieAlgebra};

fn main() {
    let g = LieAlgebra::from_integer_brackets(3, &[(3, 2, &[(1, 1)])]).unwrap();
    let ell = Functional::from_ints(&[1, 0, 0]);

    let result = polarize_auto(&g, &ell).unwrap();
    println!("dim g = {}, dim z(g) = {}", g.n(), g.center_dim());
    println!("orbit through ell has dimension {}", result.orbit_dim);
    println!("p(ell) has dimension {}:", result.p_basis.dim());
    for v in result.p_basis.basis() {
        println!(
            "  {}  =  {}",
            format_vector(v),
            format_combination(v, g.basis_names())
        );
    }

    // the library double-checks its own answer
    let report = verify_polarization(&g, &ell, &result.p_basis).unwrap();
    assert!(report.all_ok());
    println!("isotropic subalgebra of the right dimension: verified");
}
