//! Built-in example algebras.

use crate::error::Error;
use crate::free_step2::build_free_step2;
use crate::lie::LieAlgebra;

/// A named, pre-validated algebra.
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub algebra: LieAlgebra,
}

/// All built-in algebras, in listing order.
pub fn entries() -> Vec<CatalogEntry> {
    let mut list = vec![
        CatalogEntry {
            name: "heisenberg",
            description: "3-dimensional Heisenberg algebra: [Z3,Z2] = Z1",
            algebra: LieAlgebra::from_integer_brackets(3, &[(3, 2, &[(1, 1)])])
                .expect("catalog entry is valid"),
        },
        CatalogEntry {
            name: "filiform4",
            description: "4-dimensional filiform algebra: [Z4,Z3] = Z2, [Z4,Z2] = Z1",
            algebra: LieAlgebra::from_integer_brackets(4, &[(4, 3, &[(2, 1)]), (4, 2, &[(1, 1)])])
                .expect("catalog entry is valid"),
        },
        CatalogEntry {
            name: "filiform5",
            description: "5-dimensional filiform algebra: [Z5,Zk] = Z(k-1) for k = 2..4",
            algebra: LieAlgebra::from_integer_brackets(
                5,
                &[(5, 4, &[(3, 1)]), (5, 3, &[(2, 1)]), (5, 2, &[(1, 1)])],
            )
            .expect("catalog entry is valid"),
        },
    ];
    for m in 2..=5 {
        let (algebra, _) = build_free_step2(m).expect("m >= 2");
        list.push(CatalogEntry {
            name: match m {
                2 => "free2",
                3 => "free3",
                4 => "free4",
                _ => "free5",
            },
            description: match m {
                2 => "free step-2 algebra on 2 generators (Heisenberg-shaped)",
                3 => "free step-2 algebra on 3 generators, dim 6",
                4 => "free step-2 algebra on 4 generators, dim 10",
                _ => "free step-2 algebra on 5 generators, dim 15",
            },
            algebra,
        });
    }
    list
}

/// Look up a catalog algebra by name.
pub fn find(name: &str) -> Result<CatalogEntry, Error> {
    entries()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Parse {
            line: 1,
            col: 1,
            message: format!("unknown catalog entry `{name}`"),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Functional;
    use crate::polarize::{polarize_basic, polarize_refined};
    use crate::rational::rat_int;
    use crate::verify::verify_polarization;

    #[test]
    fn all_entries_validate_and_have_expected_shapes() {
        let list = entries();
        assert_eq!(list.len(), 7);
        let dims: Vec<(usize, usize)> = list
            .iter()
            .map(|e| (e.algebra.n(), e.algebra.center_dim()))
            .collect();
        assert_eq!(
            dims,
            vec![(3, 1), (4, 1), (5, 1), (3, 1), (6, 3), (10, 6), (15, 10)]
        );
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(find("heisenberg").unwrap().algebra.n(), 3);
        assert_eq!(find("free4").unwrap().algebra.n(), 10);
        assert!(find("nonsense").is_err());
    }

    #[test]
    fn filiform4_polarization_worked_example() {
        let g = find("filiform4").unwrap().algebra;
        let ell = Functional::from_ints(&[1, 0, 0, 0]);
        let basic = polarize_basic(&g, &ell).unwrap();
        let refined = polarize_refined(&g, &ell).unwrap();
        assert_eq!(basic.p_basis, refined.p_basis);
        assert_eq!(basic.p_basis, crate::subspace::Subspace::standard(4, 3));
        assert_eq!(basic.orbit_dim, 2);
        let report = verify_polarization(&g, &ell, &basic.p_basis).unwrap();
        assert!(report.all_ok());
    }

    #[test]
    fn filiform5_generic_functional() {
        let g = find("filiform5").unwrap().algebra;
        let ell = Functional::new(vec![
            rat_int(2),
            rat_int(-1),
            rat_int(3),
            rat_int(5),
            rat_int(7),
        ]);
        let basic = polarize_basic(&g, &ell).unwrap();
        let refined = polarize_refined(&g, &ell).unwrap();
        assert_eq!(basic.p_basis, refined.p_basis);
        let report = verify_polarization(&g, &ell, &basic.p_basis).unwrap();
        assert!(report.all_ok());
    }
}
