use super::*;
use crate::curve_graph::{DualGraph, Subcurve};
use crate::vstability::{DegeneracySet, VStability};

fn banana() -> DualGraph {
    DualGraph::rational(2, &[(0, 1), (0, 1)]).unwrap()
}

fn k4() -> DualGraph {
    DualGraph::rational(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

fn sc(vs: &[usize]) -> Subcurve {
    Subcurve::from_vertices(vs.iter().copied())
}

#[test]
fn banana_degeneracy_subsets() {
    let all = enumerate_degeneracy_subsets(&banana());
    assert_eq!(all.len(), 2);
    assert!(all[0].is_empty());
    assert_eq!(minimal_elements(&all[1]), vec![sc(&[0]), sc(&[1])]);
    assert!(minimal_elements(&all[0]).is_empty());
    assert_eq!(move_i(&all[1], sc(&[0])).unwrap(), all[0]);
}

#[test]
fn k4_minimal_elements() {
    let g = k4();
    let d = from_minimal(&g, &[sc(&[0, 1]), sc(&[2, 3]), sc(&[0, 2]), sc(&[1, 3])]).unwrap();
    assert!(d.is_valid());
    assert_eq!(
        minimal_elements(&d),
        vec![sc(&[0, 1]), sc(&[0, 2]), sc(&[1, 3]), sc(&[2, 3])]
    );
}

#[test]
fn k4_exceptional_cover_and_non_domination() {
    let g = k4();
    // i, j, k, l = 0, 1, 2, 3.
    let d1 = from_minimal(&g, &[sc(&[0, 1]), sc(&[2, 3]), sc(&[0, 2]), sc(&[1, 3])]).unwrap();
    let d2 = from_minimal(&g, &[sc(&[0]), sc(&[1]), sc(&[2]), sc(&[3])]).unwrap();
    assert!(deg_geq(&d1, &d2));
    let il = sc(&[0, 3]);
    let diff = d2.difference(&d1);
    let e = DegeneracySet::from_members(
        &g,
        diff.members().into_iter().filter(|&s| s.is_subset_of(il) || il.is_subset_of(s)),
    )
    .unwrap();
    assert!(check_witness(&d1, &d2, &e));

    let pairs: Vec<Subcurve> =
        [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]].iter().map(|p| sc(p)).collect();
    let d_pairs = from_minimal(&g, &pairs).unwrap();
    assert!(d_pairs.is_subset_of(&d2));
    assert!(!deg_geq(&d_pairs, &d2));
}

#[test]
fn k4_move_ii_gives_cover() {
    let g = k4();
    let singles = from_minimal(&g, &[sc(&[0]), sc(&[1]), sc(&[2]), sc(&[3])]).unwrap();
    let r = move_ii(&singles, sc(&[0]), sc(&[1])).unwrap();
    assert_eq!(minimal_elements(&r), vec![sc(&[0, 1]), sc(&[2]), sc(&[3])]);
    assert!(deg_geq(&r, &singles));
    assert!(matches!(
        move_ii(&singles, sc(&[0]), sc(&[0, 1])),
        Err(crate::Error::MoveNotApplicable(_))
    ));
}

#[test]
fn k4_poset_mod_symmetry() {
    let g = k4();
    let poset = deg_poset(&g).unwrap();
    let q = deg_poset_mod_symmetry(&poset, &g.automorphisms());
    assert_eq!(q.elements.len(), 7);
    assert_eq!(q.covers.len(), 8);
    assert_eq!(q.grading().unwrap().1, 3);
}

#[test]
fn banana_normal_form() {
    let s = VStability::checked(banana(), 0, vec![3, -2]).unwrap();
    let (t, tau) = normal_form(&s).unwrap();
    assert_eq!(t.values(), &[0, 1]);
    assert_eq!(tau, TranslationVector(vec![-3, 3]));
    let (u, z) = normal_form(&t).unwrap();
    assert_eq!(u, t);
    assert!(z.is_zero());
}

#[test]
fn banana_orbits() {
    let orbits = enumerate_orbits(&banana());
    let values: Vec<&[i64]> = orbits.iter().map(|s| s.values()).collect();
    assert_eq!(values, vec![&[0, 0][..], &[0, 1][..]]);
    let a = VStability::checked(banana(), 0, vec![0, 1]).unwrap();
    let b = VStability::checked(banana(), 0, vec![1, 0]).unwrap();
    assert!(orbit_equal(&a, &b).unwrap());
    let point = DualGraph::rational(1, &[]).unwrap();
    assert_eq!(enumerate_orbits(&point).len(), 1);
}

#[test]
fn banana_lift() {
    let g = banana();
    let s2 = VStability::checked(g.clone(), 0, vec![0, 0]).unwrap();
    let d2 = s2.degeneracy_set().unwrap();
    let d1 = DegeneracySet::empty(&g);
    let s1 = lift(&d1, &d2, &s2).unwrap();
    assert!(s1.values() == [1, 0] || s1.values() == [0, 1]);
    assert!(vstab_geq(&s1, &s2));
    assert_eq!(lift(&d2, &d2, &s2).unwrap(), s2);
    assert_eq!(up_set(&s2).unwrap().len(), 3);
}

#[test]
fn chain_hasse() {
    let h = hasse(vec![0, 1, 2], |a, b| a <= b).unwrap();
    assert_eq!(h.covers, vec![(0, 1), (1, 2)]);
    assert_eq!(h.grading().unwrap().1, 2);
    assert!(matches!(
        hasse(vec![0, 1], |_, _| true),
        Err(crate::Error::NotAPartialOrder(_))
    ));
}

#[test]
fn banana_scan() {
    let r = qdeg_scan(&banana());
    assert!(r.ranked && r.surjective && r.partial_order);
    assert_eq!(r.rank, Some(1));
}
