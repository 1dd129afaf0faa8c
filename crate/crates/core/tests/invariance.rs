mod common;

use common::{fp, random_endomorphisms, rng};
use leibniz::aut::{
    centralizer_of_quotient, centralizer_of_subalgebra, enumerate_automorphisms, invariance_check, is_automorphism,
    is_normal, Invariance, DEFAULT_BUDGET,
};
use leibniz::catalog::{self, CatalogName};

#[test]
fn automorphisms_fix_characteristic_subspaces() {
    for q in [2, 3] {
        for name in CatalogName::ALL {
            let alg = name.build(fp(q));
            let g = enumerate_automorphisms(&alg, DEFAULT_BUDGET).unwrap();
            assert!(g.is_group());
            let mut subspaces = vec![
                alg.leibniz_kernel().unwrap(),
                alg.left_center(),
                alg.right_center(),
                alg.center(),
                alg.derived_subalgebra(),
            ];
            subspaces.extend(alg.lower_central_series());
            subspaces.extend(alg.upper_central_series());
            for f in g.iter() {
                assert!(is_automorphism(&alg, f).unwrap());
                for s in &subspaces {
                    assert_eq!(invariance_check(&alg, f, s).unwrap(), Invariance::Equal, "{name} over F{q}: {s}");
                }
            }
        }
    }
}

#[test]
fn endomorphisms_shrink_lower_series_terms() {
    let mut rng = rng(5);
    for name in CatalogName::ALL {
        let alg = name.build(fp(3));
        let series = alg.lower_central_series();
        for f in random_endomorphisms(&alg, 50, &mut rng) {
            for term in &series {
                assert_ne!(invariance_check(&alg, &f, term).unwrap(), Invariance::Neither, "{name}: {term}");
            }
            let derived = alg.derived_subalgebra();
            assert_ne!(invariance_check(&alg, &f, &derived).unwrap(), Invariance::Neither);
        }
    }
}

#[test]
fn centralizers_are_normal() {
    for q in [2, 3] {
        let alg = catalog::lei3(fp(q));
        let g = enumerate_automorphisms(&alg, DEFAULT_BUDGET).unwrap();
        for a in [
            alg.leibniz_kernel().unwrap(),
            alg.left_center(),
            alg.center(),
            alg.derived_subalgebra(),
        ] {
            let ca = centralizer_of_subalgebra(&g, &a).unwrap();
            let cq = centralizer_of_quotient(&g, &a).unwrap();
            assert!(ca.is_group() && cq.is_group());
            assert!(is_normal(&ca, &g).unwrap(), "C_G({a}) over F{q}");
            assert!(is_normal(&cq, &g).unwrap(), "C_G(L/{a}) over F{q}");
        }
    }
}

#[test]
fn automorphism_groups_of_small_catalog() {
    // Orders found by enumeration; only the group axioms are asserted
    // structurally for Lei1 and Lei2.
    for q in [2, 3] {
        for name in [CatalogName::Lei1, CatalogName::Lei2] {
            let g = enumerate_automorphisms(&name.build(fp(q)), DEFAULT_BUDGET).unwrap();
            assert!(g.is_group() && g.order() > 1, "{name} over F{q}");
        }
    }
}
