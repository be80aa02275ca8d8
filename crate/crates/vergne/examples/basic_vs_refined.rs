//! Both polarization algorithms side by side on the 5-dimensional filiform
//! algebra, with the radical trace that the refined method gets for free.
//!
//! The basic method reduces every leading submatrix M_j(ell). The refined
//! method knows that for j <= dim z + 1 the radical is all of g_j, and that
//! where the non-central block has full rank it collapses to the center, so
//! it only reduces the handful of blocks that remain.

use vergne::catalog;
use vergne::polarize::{index_set, polarize_basic, polarize_refined};
use vergne::rational::format_combination;
use vergne::Functional;

fn main() {
    let entry = catalog::find("filiform5").unwrap();
    let g = &entry.algebra;
    let ell = Functional::from_ints(&[2, -1, 3, 5, 7]);

    let basic = polarize_basic(g, &ell).unwrap();
    let refined = polarize_refined(g, &ell).unwrap();
    assert_eq!(basic.p_basis, refined.p_basis);
    assert_eq!(basic.orbit_dim, refined.orbit_dim);

    println!("{}: {}", entry.name, entry.description);
    println!("ell = (2, -1, 3, 5, 7)");
    println!(
        "both methods: dim p = {}, orbit dim = {}",
        basic.p_basis.dim(),
        basic.orbit_dim
    );

    let index = index_set(g, &ell).unwrap();
    println!("index set I(ell) = {:?}", index.members);

    println!("radical of each leading submatrix:");
    for (j, radical) in refined.per_j_nullspaces.as_ref().unwrap() {
        let combos: Vec<String> = radical
            .basis()
            .iter()
            .map(|v| format_combination(v, g.basis_names()))
            .collect();
        println!("  r(l_{j}) = span{{{}}}", combos.join(", "));
    }

    println!("p(ell):");
    for v in basic.p_basis.basis() {
        println!("  {}", format_combination(v, g.basis_names()));
    }
}
