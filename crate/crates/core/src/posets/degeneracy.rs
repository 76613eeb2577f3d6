//! The poset `Deg(X)` of degeneracy subsets.

use std::collections::{HashSet, VecDeque};

use crate::curve_graph::{DualGraph, Subcurve};
use crate::error::{Error, Result};
use crate::vstability::DegeneracySet;

/// Every degeneracy subset of `g`, starting with `∅`, in breadth-first discovery order.
pub fn enumerate_degeneracy_subsets(g: &DualGraph) -> Vec<DegeneracySet> {
    let st = g.bcon_structure();
    let reps: Vec<usize> = (0..st.complement.len()).filter(|&i| i < st.complement[i]).collect();
    let start = DegeneracySet::empty(g);
    let mut seen: HashSet<DegeneracySet> = HashSet::from([start.clone()]);
    let mut out = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(d) = queue.pop_front() {
        for &i in &reps {
            if d.contains_index(i) {
                continue;
            }
            let mut e = d.clone();
            e.insert_index(i);
            e.close();
            if seen.insert(e.clone()) {
                out.push(e.clone());
                queue.push_back(e);
            }
        }
    }
    debug_assert!(out.iter().all(DegeneracySet::is_valid));
    out
}

/// Members admitting no `W ∈ D` with `W ⊊ Y` and `Y − W` biconnected.
pub fn minimal_elements(d: &DegeneracySet) -> Vec<Subcurve> {
    let g = d.graph();
    let members = d.members();
    members
        .iter()
        .copied()
        .filter(|&y| {
            !members
                .iter()
                .any(|&w| w != y && w.is_subset_of(y) && g.is_biconnected(y.minus(w)))
        })
        .collect()
}

/// All ways of writing `y` as a union of pairwise disjoint elements of `parts`.
pub fn decompositions(parts: &[Subcurve], y: Subcurve) -> Vec<Vec<Subcurve>> {
    fn go(
        parts: &[Subcurve],
        rest: Subcurve,
        acc: &mut Vec<Subcurve>,
        out: &mut Vec<Vec<Subcurve>>,
    ) {
        let Some(v) = rest.lowest() else {
            out.push(acc.clone());
            return;
        };
        for &p in parts {
            if p.contains(v) && p.is_subset_of(rest) {
                acc.push(p);
                go(parts, rest.minus(p), acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(parts, y, &mut Vec::new(), &mut out);
    out
}

/// The biconnected subcurves that are disjoint unions of the given minimal elements.
pub fn from_minimal(g: &DualGraph, mins: &[Subcurve]) -> Result<DegeneracySet> {
    let members: Vec<Subcurve> = g
        .biconnected_subcurves()
        .iter()
        .copied()
        .filter(|&y| !decompositions(mins, y).is_empty())
        .collect();
    DegeneracySet::from_members(g, members)
}

/// A witness set `E ⊆ D2 − D1` for the dominance `D1 ≥ D2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dominance {
    pub witness: DegeneracySet,
}

/// Checks the three witness conditions for `D1 ≥ D2`.
pub fn check_witness(d1: &DegeneracySet, d2: &DegeneracySet, e: &DegeneracySet) -> bool {
    if !d1.is_subset_of(d2) {
        return false;
    }
    let g = d1.graph();
    let st = g.bcon_structure();
    let diff = d2.difference(d1);
    if !e.is_subset_of(&diff) {
        return false;
    }
    for i in diff.indices() {
        if e.contains_index(i) == e.contains_index(st.complement[i]) {
            return false;
        }
    }
    for &[i, j, u] in &st.union_pairs {
        if diff.contains_index(i) && diff.contains_index(j) && d1.contains_index(u)
            && e.contains_index(i) == e.contains_index(j) {
                return false;
            }
    }
    for &[i, j, k] in &st.triples {
        if diff.contains_index(i) && diff.contains_index(j) && diff.contains_index(k) {
            let c = [i, j, k].iter().filter(|&&x| e.contains_index(x)).count();
            if c == 0 || c == 3 {
                return false;
            }
        }
    }
    true
}

/// Decides `D1 ≥ D2`, returning a witness `E` when it holds.
///
/// One boolean per complementary pair of `D2 − D1`; pair constraints are XORs solved by a
/// parity union-find, triple constraints are not-all-equal and handled by backtracking.
pub fn deg_geq_witness(d1: &DegeneracySet, d2: &DegeneracySet) -> Option<Dominance> {
    if !d1.is_subset_of(d2) {
        return None;
    }
    let g = d1.graph();
    let st = g.bcon_structure();
    let diff = d2.difference(d1);
    let nb = st.complement.len();
    // Literal for member i: (variable, negated).
    let mut var_of = vec![usize::MAX; nb];
    let mut reps = Vec::new();
    for i in diff.indices() {
        if i < st.complement[i] {
            var_of[i] = reps.len();
            var_of[st.complement[i]] = reps.len();
            reps.push(i);
        }
    }
    let neg = |i: usize| i != reps[var_of[i]];
    let nv = reps.len();
    let mut parent: Vec<usize> = (0..nv).collect();
    let mut parity = vec![false; nv];
    fn find(parent: &mut [usize], parity: &mut [bool], x: usize) -> (usize, bool) {
        if parent[x] == x {
            return (x, false);
        }
        let (r, p) = find(parent, parity, parent[x]);
        parent[x] = r;
        parity[x] ^= p;
        (r, parity[x])
    }
    for &[i, j, u] in &st.union_pairs {
        if !(diff.contains_index(i) && diff.contains_index(j) && d1.contains_index(u)) {
            continue;
        }
        // lit(i) xor lit(j) = 1.
        let want = true ^ neg(i) ^ neg(j);
        let (ri, pi) = find(&mut parent, &mut parity, var_of[i]);
        let (rj, pj) = find(&mut parent, &mut parity, var_of[j]);
        if ri == rj {
            if pi ^ pj != want {
                return None;
            }
        } else {
            parent[ri] = rj;
            parity[ri] = pi ^ pj ^ want;
        }
    }
    // Not-all-equal triples over root variables: (root, parity) per literal.
    let mut roots: Vec<usize> = Vec::new();
    let mut nae: Vec<[(usize, bool); 3]> = Vec::new();
    for &[i, j, k] in &st.triples {
        if !(diff.contains_index(i) && diff.contains_index(j) && diff.contains_index(k)) {
            continue;
        }
        let lit = |x: usize, parent: &mut Vec<usize>, parity: &mut Vec<bool>| {
            let (r, p) = find(parent, parity, var_of[x]);
            (r, p ^ neg(x))
        };
        let t = [
            lit(i, &mut parent, &mut parity),
            lit(j, &mut parent, &mut parity),
            lit(k, &mut parent, &mut parity),
        ];
        for &(r, _) in &t {
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        nae.push(t);
    }
    let mut assign: Vec<Option<bool>> = vec![None; nv];
    fn backtrack(
        k: usize,
        roots: &[usize],
        nae: &[[(usize, bool); 3]],
        assign: &mut Vec<Option<bool>>,
    ) -> bool {
        let consistent = nae.iter().all(|t| {
            let vals: Option<Vec<bool>> = t.iter().map(|&(r, p)| assign[r].map(|a| a ^ p)).collect();
            match vals {
                Some(v) => !(v[0] == v[1] && v[1] == v[2]),
                None => true,
            }
        });
        if !consistent {
            return false;
        }
        if k == roots.len() {
            return true;
        }
        for b in [false, true] {
            assign[roots[k]] = Some(b);
            if backtrack(k + 1, roots, nae, assign) {
                return true;
            }
        }
        assign[roots[k]] = None;
        false
    }
    if !backtrack(0, &roots, &nae, &mut assign) {
        return None;
    }
    let mut e = DegeneracySet::empty(g);
    for i in diff.indices() {
        let (r, p) = find(&mut parent, &mut parity, var_of[i]);
        let value = assign[r].unwrap_or(false) ^ p ^ neg(i);
        if value {
            e.insert_index(i);
        }
    }
    debug_assert!(check_witness(d1, d2, &e));
    Some(Dominance { witness: e })
}

/// `D1 ≥ D2` in the dominance order (in particular `D1 ⊆ D2`).
pub fn deg_geq(d1: &DegeneracySet, d2: &DegeneracySet) -> bool {
    deg_geq_witness(d1, d2).is_some()
}

/// Removes a minimal complementary pair `{Y, Y^c}`.
pub fn move_i(d: &DegeneracySet, y: Subcurve) -> Result<DegeneracySet> {
    let g = d.graph();
    let yc = g.complement(y);
    let mins = minimal_elements(d);
    if !mins.contains(&y) || !mins.contains(&yc) {
        return Err(Error::MoveNotApplicable(format!("{y:?} and its complement must be minimal")));
    }
    let new_mins: Vec<Subcurve> = mins.into_iter().filter(|&m| m != y && m != yc).collect();
    finish_move(g, d, new_mins)
}

/// Replaces minimal disjoint `Y1`, `Y2` with biconnected union by `Y1 ∪ Y2`.
pub fn move_ii(d: &DegeneracySet, y1: Subcurve, y2: Subcurve) -> Result<DegeneracySet> {
    let g = d.graph();
    let mins = minimal_elements(d);
    if !mins.contains(&y1) || !mins.contains(&y2) {
        return Err(Error::MoveNotApplicable("both subcurves must be minimal".into()));
    }
    if !y1.is_disjoint(y2) || !g.is_biconnected(y1.join(y2)) {
        return Err(Error::MoveNotApplicable(
            "subcurves must be disjoint with biconnected union".into(),
        ));
    }
    let mut new_mins: Vec<Subcurve> = mins.into_iter().filter(|&m| m != y1 && m != y2).collect();
    new_mins.push(y1.join(y2));
    new_mins.sort();
    finish_move(g, d, new_mins)
}

fn finish_move(g: &DualGraph, d: &DegeneracySet, new_mins: Vec<Subcurve>) -> Result<DegeneracySet> {
    let r = from_minimal(g, &new_mins)?;
    if !r.is_valid() || minimal_elements(&r) != new_mins {
        return Err(Error::MoveNotApplicable(
            "resulting minimal set does not define a degeneracy subset".into(),
        ));
    }
    if !deg_geq(&r, d) {
        return Err(Error::MoveNotApplicable("result does not dominate the input".into()));
    }
    Ok(r)
}

/// Image of a degeneracy set under a vertex permutation.
pub fn permute_degeneracy(d: &DegeneracySet, perm: &[usize]) -> DegeneracySet {
    let g = d.graph();
    let members = d.members().into_iter().map(|y| permute_subcurve(y, perm));
    DegeneracySet::from_members(g, members).expect("automorphisms preserve biconnectedness")
}

pub fn permute_subcurve(y: Subcurve, perm: &[usize]) -> Subcurve {
    Subcurve::from_vertices(y.vertices().map(|v| perm[v]))
}

/// Canonical representative of the orbit of `d` under the given automorphisms.
pub fn canonical_degeneracy(d: &DegeneracySet, autos: &[Vec<usize>]) -> DegeneracySet {
    autos
        .iter()
        .map(|p| permute_degeneracy(d, p))
        .min()
        .unwrap_or_else(|| d.clone())
}
