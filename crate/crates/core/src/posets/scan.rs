//! Posets of degeneracy subsets modulo symmetry, and the rank/surjectivity scan.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::curve_graph::DualGraph;
use crate::error::Result;
use crate::posets::degeneracy::{canonical_degeneracy, deg_geq, enumerate_degeneracy_subsets};
use crate::posets::hasse::{hasse, HasseDiagram};
use crate::posets::translation::enumerate_orbits;
use crate::vstability::DegeneracySet;

/// `Deg(X)` ordered by dominance; covers go from the dominated set to the dominating one.
pub fn deg_poset(g: &DualGraph) -> Result<HasseDiagram<DegeneracySet>> {
    let elements = enumerate_degeneracy_subsets(g);
    // `a ≤ b` in the poset means `b ≥ a` in the dominance order.
    hasse(elements, |a, b| deg_geq(b, a))
}

/// Quotient of a degeneracy poset by graph automorphisms. Class covers are the images
/// of element covers; each class is represented by its canonical member.
pub fn deg_poset_mod_symmetry(
    poset: &HasseDiagram<DegeneracySet>,
    autos: &[Vec<usize>],
) -> HasseDiagram<DegeneracySet> {
    let mut class_of = Vec::with_capacity(poset.elements.len());
    let mut classes: BTreeMap<DegeneracySet, usize> = BTreeMap::new();
    let mut reps: Vec<DegeneracySet> = Vec::new();
    for d in &poset.elements {
        let c = canonical_degeneracy(d, autos);
        let idx = *classes.entry(c.clone()).or_insert_with(|| {
            reps.push(c);
            reps.len() - 1
        });
        class_of.push(idx);
    }
    let mut covers: Vec<(usize, usize)> = poset
        .covers
        .iter()
        .map(|&(l, u)| (class_of[l], class_of[u]))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    covers.sort_unstable();
    HasseDiagram { elements: reps, covers }
}

/// Evidence for the rank and surjectivity questions on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QDegReport {
    pub num_components: usize,
    pub num_edges: usize,
    pub num_degeneracy_subsets: usize,
    pub num_orbits: usize,
    pub partial_order: bool,
    pub ranked: bool,
    pub rank: Option<usize>,
    pub rank_is_components_minus_one: bool,
    pub surjective: bool,
    pub unrealized: usize,
}

pub fn qdeg_scan(g: &DualGraph) -> QDegReport {
    let elements = enumerate_degeneracy_subsets(g);
    let orbits = enumerate_orbits(g);
    let realized: HashSet<DegeneracySet> =
        orbits.iter().map(|s| s.degeneracy_set().expect("orbit representatives are valid")).collect();
    let unrealized = elements.iter().filter(|d| !realized.contains(*d)).count();
    let num = elements.len();
    let (partial_order, grading) = match hasse(elements, |a, b| deg_geq(b, a)) {
        Ok(h) => (true, h.grading()),
        Err(_) => (false, None),
    };
    let rank = grading.map(|(_, r)| r);
    QDegReport {
        num_components: g.num_components(),
        num_edges: g.edges().len(),
        num_degeneracy_subsets: num,
        num_orbits: orbits.len(),
        partial_order,
        ranked: rank.is_some(),
        rank,
        rank_is_components_minus_one: rank == Some(g.num_components() - 1),
        surjective: unrealized == 0,
        unrealized,
    }
}
