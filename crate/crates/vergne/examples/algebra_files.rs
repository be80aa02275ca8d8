//! The algebra file format: parse, validate, polarize, and emit.
//!
//! Files declare a dimension and then bracket relations on a strong Malcev
//! basis Z1..Zn. Omitted brackets are zero; [j,i] is implied by [i,j].

use vergne::parse::{emit_algebra, parse_algebra, parse_functional};
use vergne::polarize::polarize_auto;
use vergne::rational::format_combination;
use vergne::Error;

const FILIFORM: &str = "\
# 4-dimensional filiform algebra
dim 4
[4,3] = Z2
[4,2] = Z1
";

fn main() {
    let g = parse_algebra(FILIFORM).unwrap();
    println!("parsed: dim {}, center dim {}", g.n(), g.center_dim());

    let ell = parse_functional("1, 0, -3/2, 2", g.n()).unwrap();
    let result = polarize_auto(&g, &ell).unwrap();
    println!("p(ell) for ell = (1, 0, -3/2, 2):");
    for v in result.p_basis.basis() {
        println!("  {}", format_combination(v, g.basis_names()));
    }

    // emit writes a canonical file that parses back to the same algebra
    let emitted = emit_algebra(&g);
    println!("\ncanonical form:\n{emitted}");
    assert!(parse_algebra(&emitted).unwrap().structure_equals(&g));

    // the validator rejects structurally bad input with a witness
    let bad = "dim 5\n[4,3] = Z2\n[5,2] = Z1\n";
    match parse_algebra(bad) {
        Err(Error::JacobiViolation { i, j, k, .. }) => {
            println!("rejected non-algebra: Jacobi fails on (Z{i}, Z{j}, Z{k})");
        }
        other => panic!("expected a Jacobi violation, got {other:?}"),
    }
}
