use cptgroups::exact_arith::{root_of_unity, CMatrix, Cyclotomic, Rational};
use cptgroups::group_core::{
    direct_product, generate_group, is_isomorphic, semidirect_product, ActionTable, FiniteGroup,
    Permutation,
};
use cptgroups::repr_theory::{character_table, check_orthogonality};
use proptest::prelude::*;

const ORDERS: [u32; 8] = [1, 2, 3, 4, 5, 6, 8, 12];

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((0..ORDERS.len(), 0i64..12, -4i64..5, 1i64..4), 0..4).prop_map(|terms| {
        terms.into_iter().fold(Cyclotomic::zero(), |acc, (o, k, n, d)| {
            let r = Rational::new(n.into(), d.into());
            acc + root_of_unity(ORDERS[o], k).unwrap().scale(&r)
        })
    })
}

fn gaussian() -> impl Strategy<Value = Cyclotomic> {
    (-5i64..6, -5i64..6).prop_map(|(a, b)| Cyclotomic::gaussian(a, b))
}

fn matrix(n: usize) -> impl Strategy<Value = CMatrix> {
    prop::collection::vec(cyclotomic(), n * n).prop_map(move |v| CMatrix::new(n, n, v).unwrap())
}

fn permutation(m: usize) -> impl Strategy<Value = Permutation> {
    Just((0..m).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

fn perm_group(m: usize) -> impl Strategy<Value = FiniteGroup> {
    prop::collection::vec(permutation(m), 1..3).prop_map(|seeds| {
        generate_group(&seeds, |a, b| a * b, |p| p.to_string()).unwrap().0
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert!((a.clone() - a.clone()).is_zero());
        if !a.is_zero() {
            prop_assert!((a.clone() * a.checked_inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form(a in cyclotomic(), b in cyclotomic(), n in 1u32..13, k in -20i64..20, m in 1u32..4) {
        prop_assert_eq!(root_of_unity(n, k).unwrap(), root_of_unity(n * m, k * m as i64).unwrap());
        let c = a.clone() + b.clone() - b.clone();
        prop_assert_eq!(c.order(), a.order());
        prop_assert_eq!(c.coeffs(), a.coeffs());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Cyclotomic>(&json).unwrap(), a);
    }

    #[test]
    fn gaussian_text_round_trip(a in gaussian()) {
        prop_assert_eq!(a.to_string().parse::<Cyclotomic>().unwrap(), a);
    }

    #[test]
    fn conjugation(a in cyclotomic(), b in cyclotomic()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((a.clone() * b.clone()).conj(), a.conj() * b.conj());
        prop_assert!((a.clone() * a.conj()).conj() == a.clone() * a.conj());
    }

    #[test]
    fn kron_trace(a in matrix(2), b in matrix(3)) {
        let t = a.kron(&b).trace().unwrap();
        prop_assert_eq!(t, a.trace().unwrap() * b.trace().unwrap());
    }

    #[test]
    fn group_axioms(g in perm_group(4)) {
        let n = g.order();
        prop_assert_eq!(24 % n, 0);
        for a in g.elements() {
            let mut row: Vec<usize> = g.cayley_row(a).map(|x| x.index()).collect();
            row.sort_unstable();
            prop_assert_eq!(row, (0..n).collect::<Vec<_>>());
            prop_assert_eq!(g.mul(a, g.inv(a)), g.identity());
            prop_assert_eq!(n % g.element_order(a), 0);
            for b in g.elements() {
                for c in g.elements() {
                    prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
        let sizes: usize = g.conjugacy_classes().iter().map(|c| c.size()).sum();
        prop_assert_eq!(sizes, n);
        prop_assert!(g.conjugacy_classes().iter().all(|c| n % c.size() == 0));
        let back = FiniteGroup::from_json(g.to_json()).unwrap();
        prop_assert!(back == g);
        prop_assert_eq!(back.labels(), g.labels());
    }

    #[test]
    fn dixon_tables_are_orthogonal(g in perm_group(4)) {
        let t = character_table(&g).unwrap();
        prop_assert!(check_orthogonality(&g, t.rows()).is_ok());
        prop_assert_eq!(t.rows().len(), g.class_count());
        let sum: usize = t.dims().iter().map(|d| d * d).sum();
        prop_assert_eq!(sum, g.order());
    }

    #[test]
    fn trivial_semidirect_is_direct(n in perm_group(3), h in perm_group(3)) {
        let action = ActionTable::trivial(h.clone(), n.clone());
        let s = semidirect_product(&n, &h, &action).unwrap();
        let d = direct_product(&n, &h).unwrap();
        prop_assert!(s.group == d.group);
        prop_assert!(is_isomorphic(&s.group, &d.group).is_some());
    }
}
