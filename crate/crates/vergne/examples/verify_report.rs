//! What verification reports look like when a claimed polarization is wrong.

use vergne::rational::format_combination;
use vergne::verify::{no_isotropic_extension, verify_polarization, FailureWitness};
use vergne::{Functional, LieAlgebra, Subspace};

fn main() {
    let g = LieAlgebra::from_integer_brackets(3, &[(3, 2, &[(1, 1)])]).unwrap();
    let ell = Functional::from_ints(&[1, 0, 0]);
    let names = g.basis_names();

    // span{Z2, Z3} is neither a subalgebra nor isotropic for this ell
    let wrong = Subspace::from_vectors(
        3,
        vec![
            Functional::from_ints(&[0, 1, 0]).values().to_vec(),
            Functional::from_ints(&[0, 0, 1]).values().to_vec(),
        ],
    );
    let report = verify_polarization(&g, &ell, &wrong).unwrap();
    println!("claimed p = span{{Z2, Z3}}");
    println!("  subalgebra: {}", report.is_subalgebra);
    println!("  isotropic:  {}", report.is_isotropic);
    println!(
        "  dimension:  {} (expected {})",
        report.actual_dim, report.expected_dim
    );
    for witness in &report.witnesses {
        match witness {
            FailureWitness::NotClosed { x, y, bracket } => println!(
                "  not closed: [{}, {}] = {}",
                format_combination(x, names),
                format_combination(y, names),
                format_combination(bracket, names)
            ),
            FailureWitness::NotIsotropic { x, y, pairing } => println!(
                "  not isotropic: l[{}, {}] = {}",
                format_combination(x, names),
                format_combination(y, names),
                pairing
            ),
        }
    }

    // span{Z1} is isotropic and a subalgebra, but not maximal
    let undersized = Subspace::standard(3, 1);
    let report = verify_polarization(&g, &ell, &undersized).unwrap();
    println!("\nclaimed p = span{{Z1}}");
    println!(
        "  isotropic subalgebra, but dim {} < expected {}",
        report.actual_dim, report.expected_dim
    );
    assert!(!no_isotropic_extension(&g, &ell, &undersized).unwrap());
    println!("  brute-force check agrees: some basis vector still extends it");

    // and the real answer passes everything
    let correct = Subspace::standard(3, 2);
    assert!(verify_polarization(&g, &ell, &correct).unwrap().all_ok());
    assert!(no_isotropic_extension(&g, &ell, &correct).unwrap());
    println!("\np = span{{Z1, Z2}} verifies and admits no extension");
}
