//! Derived values checked against independent brute-force computations.

use std::collections::BTreeSet;

use cptgroups::cpt_models::fixtures::Q_CHARACTERS;
use cptgroups::cpt_models::{
    build_g_psi_eq, build_g_psi_hat, build_qed_group, build_quaternion, build_z2, irreps_g_psi_hat,
    irreps_q, printed_g_a_map,
};
use cptgroups::exact_arith::{CMatrix, Cyclotomic};
use cptgroups::group_core::{embeds, is_isomorphic, verify_hom, ElementId, FiniteGroup, GroupHom};
use cptgroups::repr_theory::{
    character_of, character_table, complete_by_orthogonality, restrict_rep, tables_match, Character,
    PartialTable, Provenance,
};

fn involutions(g: &FiniteGroup) -> Vec<ElementId> {
    g.elements().filter(|&x| x != g.identity() && g.mul(x, x) == g.identity()).collect()
}

#[test]
fn minus_i_sigma2_squares_to_minus_identity() {
    let m = CMatrix::parse("0,-1;1,0").unwrap();
    assert_eq!(m.mat_mul(&m).unwrap(), CMatrix::identity(2).neg());
}

#[test]
fn quaternion_element_orders() {
    let q = build_quaternion();
    let mut counts = [0usize; 5];
    for x in q.elements() {
        let mut k = 1;
        let mut y = x;
        while y != q.identity() {
            y = q.mul(y, x);
            k += 1;
        }
        counts[k] += 1;
    }
    assert_eq!(counts, [0, 1, 1, 0, 6]);
}

#[test]
fn order_two_subgroups_of_q_x_z2() {
    let hat = build_g_psi_hat().unwrap();
    let g = &hat.cpt.group;
    let labels: BTreeSet<&str> = involutions(g).into_iter().map(|x| g.label(x)).collect();
    assert_eq!(labels, BTreeSet::from(["(-1,e)", "(1,a)", "(-1,a)"]));
}

#[test]
fn z2_embeds_onto_an_involution() {
    let hat = build_g_psi_hat().unwrap();
    let e = embeds(&build_z2(), &hat.cpt.group).unwrap();
    let image = e.image();
    assert_eq!(image.len(), 2);
    let labels: BTreeSet<&str> = image.iter().map(|&x| hat.cpt.group.label(x)).collect();
    assert_eq!(labels, BTreeSet::from(["(1,e)", "(1,a)"]));
}

#[test]
fn q_x_z2_and_d4_semidirect_z2_differ() {
    let hat = build_g_psi_hat().unwrap();
    let eq = build_g_psi_eq().unwrap();
    assert_eq!(involutions(&hat.cpt.group).len(), 3);
    assert_eq!(involutions(&eq.cpt.group).len(), 7);
    assert!(is_isomorphic(&hat.cpt.group, &eq.cpt.group).is_none());
    let (a, b) = (character_table(&hat.cpt.group).unwrap(), character_table(&eq.cpt.group).unwrap());
    assert!(tables_match(&a, &b).is_none());
    assert!(a.rows().iter().all(|r| r.values().iter().all(|v| v.is_rational())));
    assert!(b.rows().iter().any(|r| r.values().contains(&Cyclotomic::gaussian(0, 2))));
}

#[test]
fn printed_field_map_collides_on_t() {
    let map = printed_g_a_map().unwrap();
    let src = map.source();
    let t = src.find("T̂").unwrap();
    let pt = src.find("P̂*T̂").unwrap();
    assert_eq!(map.apply(t), map.apply(pt));
    let report = verify_hom(&map);
    assert!(!report.is_hom() && !report.injective);
    assert!(report.violations.iter().any(|&(a, b)| [a, b, src.mul(a, b)].contains(&t)));
}

#[test]
fn phi9_restrictions() {
    let hat = build_g_psi_hat().unwrap();
    let irreps = irreps_g_psi_hat().unwrap();
    let phi9 = &irreps.iter().find(|r| r.name == "φ9").unwrap().rep;
    let g = hat.cpt.group.clone();

    let c = g.find("(1,a)").unwrap();
    let z2 = GroupHom::from_generator_images(build_z2(), g.clone(), &[c]).unwrap();
    let r = restrict_rep(phi9, &z2).unwrap();
    let two = Cyclotomic::from_i64(2);
    assert_eq!(character_of(&r).values(), &[two.clone(), two]);

    let q = hat.q.clone();
    let into = &hat.product.inj_left;
    let r = restrict_rep(phi9, into).unwrap();
    let q_irreps = irreps_q(&q).unwrap();
    let phi5 = &q_irreps.iter().find(|r| r.rep.dim() == 2).unwrap().rep;
    assert_eq!(r.matrices(), phi5.matrices());
}

#[test]
fn q_row_recovered_by_orthogonality() {
    let q = build_quaternion();
    let row = |k: usize| {
        let values = &Q_CHARACTERS.rows[k].1;
        Character::from_element_values(&q, |x| {
            let j = Q_CHARACTERS
                .class_labels
                .iter()
                .position(|l| q.class_of(q.find(l).unwrap()) == q.class_of(x))
                .unwrap();
            values[j].parse().unwrap()
        })
        .unwrap()
    };
    let known: Vec<Character> = [0, 1, 2, 4].into_iter().map(row).collect();
    let partial = PartialTable { group: q.clone(), provenance: vec![Provenance::Constructive; 4], known };
    let full = complete_by_orthogonality(&partial).unwrap();
    assert_eq!(full.rows().len(), 5);
    assert!(full.rows().contains(&row(3)));
}

#[test]
fn semidirect_inverse_for_odd_elements() {
    let eq = build_g_psi_eq().unwrap();
    let g = &eq.product.group;
    let minus = eq.z2.find("-1").unwrap();
    for n in eq.d4.elements() {
        let x = eq.product.pair(n, minus);
        let inv = eq.product.pair(eq.action.act(minus, eq.d4.inv(n)), minus);
        assert_eq!(g.mul(inv, x), g.identity());
    }
    let p = eq.d4.find("(1234)").unwrap();
    let x = eq.product.pair(p, minus);
    assert_eq!(eq.cpt.cpt_label(g.mul(x, x)).to_string(), "-I");
}

#[test]
fn qed_class_count_and_abelianization() {
    let qed = build_qed_group().unwrap();
    let g = &qed.group;
    assert_eq!(g.class_count(), qed.psi.cpt.group.class_count() * qed.a.cpt.group.class_count());
    let commutators: Vec<ElementId> = g
        .elements()
        .flat_map(|a| g.elements().map(move |b| (a, b)))
        .map(|(a, b)| g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)))
        .collect();
    let derived = g.closure(&commutators);
    let linear = character_table(g).unwrap().dims().iter().filter(|&&d| d == 1).count();
    assert_eq!(g.order() / derived.len(), 64);
    assert_eq!(linear, 64);
}
