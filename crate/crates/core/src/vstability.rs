//! V-stability conditions: validation, degeneracy sets, the extended
//! V-function, restriction to subcurves and pullback along contractions.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::curve_graph::{Contraction, DualGraph, Embedding, Subcurve};
use crate::error::{Error, Result};

/// A violated constraint, with witnessing subcurves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `s_Y + s_{Y^c} − χ` is not 0 or 1.
    Sum { y: Subcurve, excess: i64 },
    /// Two parts of a covering triple are degenerate but the third is not.
    TripleClosure { parts: [Subcurve; 3] },
    /// `Σ s_{Y_i} − χ` is outside the range allowed by the degeneracy pattern.
    TripleSum { parts: [Subcurve; 3], excess: i64 },
    /// `s_{Y1∪Y2} − s_{Y1} − s_{Y2}` is outside the range allowed by degeneracy.
    Union { y1: Subcurve, y2: Subcurve, difference: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Sum { y, excess } => write!(f, "sum rule at {y:?}: excess {excess}"),
            Violation::TripleClosure { parts } => write!(f, "triple closure at {parts:?}"),
            Violation::TripleSum { parts, excess } => {
                write!(f, "triple sum at {parts:?}: excess {excess}")
            }
            Violation::Union { y1, y2, difference } => {
                write!(f, "union rule at {y1:?} + {y2:?}: difference {difference}")
            }
        }
    }
}

/// Outcome of validation: every violated constraint.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A V-stability condition: characteristic χ and an integer per biconnected subcurve.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VStability {
    graph: DualGraph,
    chi: i64,
    values: Vec<i64>,
}

impl VStability {
    /// Values indexed like `graph.biconnected_subcurves()`. Not validated.
    pub fn new(graph: DualGraph, chi: i64, values: Vec<i64>) -> Result<Self> {
        let expected = graph.biconnected_subcurves().len();
        if values.len() != expected {
            return Err(Error::DomainMismatch(format!(
                "expected {expected} values, got {}",
                values.len()
            )));
        }
        Ok(VStability { graph, chi, values })
    }

    /// Builds from explicit `(subcurve, value)` pairs; the keys must be exactly `BCon`.
    pub fn from_pairs<I>(graph: DualGraph, chi: i64, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subcurve, i64)>,
    {
        let bcon_len = graph.biconnected_subcurves().len();
        let mut values = vec![None; bcon_len];
        for (y, v) in pairs {
            let i = graph.bcon_index(y).ok_or_else(|| {
                Error::DomainMismatch(format!("{y:?} is not biconnected"))
            })?;
            if values[i].replace(v).is_some() {
                return Err(Error::DomainMismatch(format!("duplicate key {y:?}")));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    Error::DomainMismatch(format!(
                        "missing value for {:?}",
                        graph.biconnected_subcurves()[i]
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VStability { graph, chi, values })
    }

    /// Like [`VStability::new`] but rejects invalid data.
    pub fn checked(graph: DualGraph, chi: i64, values: Vec<i64>) -> Result<Self> {
        let s = Self::new(graph, chi, values)?;
        s.ensure_valid()?;
        Ok(s)
    }

    pub fn graph(&self) -> &DualGraph {
        &self.graph
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Stored value on a biconnected subcurve.
    pub fn value(&self, y: Subcurve) -> Option<i64> {
        self.graph.bcon_index(y).map(|i| self.values[i])
    }

    /// `(subcurve, value)` pairs in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (Subcurve, i64)> + '_ {
        self.graph.biconnected_subcurves().iter().copied().zip(self.values.iter().copied())
    }

    pub(crate) fn excess_at(&self, i: usize) -> i64 {
        let c = self.graph.bcon_structure().complement[i];
        self.values[i] + self.values[c] - self.chi
    }

    pub(crate) fn degenerate_at(&self, i: usize) -> bool {
        self.excess_at(i) == 0
    }

    /// Whether a biconnected `y` is degenerate (`s_Y + s_{Y^c} = χ`).
    pub fn is_degenerate(&self, y: Subcurve) -> bool {
        self.graph.bcon_index(y).is_some_and(|i| self.degenerate_at(i))
    }

    fn sum_violations(&self, out: &mut Vec<Violation>) {
        let st = self.graph.bcon_structure();
        for (i, &y) in self.graph.biconnected_subcurves().iter().enumerate() {
            if i < st.complement[i] {
                let excess = self.excess_at(i);
                if excess != 0 && excess != 1 {
                    out.push(Violation::Sum { y, excess });
                }
            }
        }
    }

    /// Checks the sum rule and both triple conditions, reporting every violation.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        self.sum_violations(&mut violations);
        let bcon = self.graph.biconnected_subcurves();
        for &[i, j, k] in &self.graph.bcon_structure().triples {
            let parts = [bcon[i], bcon[j], bcon[k]];
            let degenerate =
                [i, j, k].iter().filter(|&&x| self.degenerate_at(x)).count();
            if degenerate == 2 {
                violations.push(Violation::TripleClosure { parts });
            }
            let excess = self.values[i] + self.values[j] + self.values[k] - self.chi;
            let ok = match degenerate {
                0 => excess == 1 || excess == 2,
                1 => excess == 1,
                3 => excess == 0,
                _ => true,
            };
            if !ok {
                violations.push(Violation::TripleSum { parts, excess });
            }
        }
        ValidationReport { violations }
    }

    /// Checks the sum rule and the pairwise union rule, reporting every violation.
    pub fn validate_via_union(&self) -> ValidationReport {
        let mut violations = Vec::new();
        self.sum_violations(&mut violations);
        let bcon = self.graph.biconnected_subcurves();
        for &[i, j, u] in &self.graph.bcon_structure().union_pairs {
            let difference = self.values[u] - self.values[i] - self.values[j];
            let ok = if self.degenerate_at(i) || self.degenerate_at(j) {
                difference == 0
            } else if self.degenerate_at(u) {
                difference == -1
            } else {
                difference == 0 || difference == -1
            };
            if !ok {
                violations.push(Violation::Union { y1: bcon[i], y2: bcon[j], difference });
            }
        }
        ValidationReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_ok() {
            Ok(())
        } else {
            Err(Error::InvalidStability(report.violations))
        }
    }

    pub fn degeneracy_set(&self) -> Result<DegeneracySet> {
        self.ensure_valid()?;
        Ok(self.degeneracy_set_unchecked())
    }

    pub(crate) fn degeneracy_set_unchecked(&self) -> DegeneracySet {
        let mut d = DegeneracySet::empty(&self.graph);
        for i in 0..self.values.len() {
            if self.degenerate_at(i) {
                d.insert_index(i);
            }
        }
        d
    }

    pub fn is_general(&self) -> Result<bool> {
        Ok(self.degeneracy_set()?.is_empty())
    }

    /// Connected `W` whose complement components are all degenerate, plus the whole curve.
    pub fn extended_degeneracy(&self) -> Result<Vec<Subcurve>> {
        Ok(self.degeneracy_set()?.extended())
    }

    /// Membership in the extended degeneracy set.
    pub fn in_extended_degeneracy(&self, w: Subcurve) -> bool {
        self.degeneracy_set_unchecked().extended_contains(w)
    }

    /// The extended V-function on any nonempty subcurve.
    pub fn extended_value(&self, y: Subcurve) -> Result<i64> {
        if y.is_empty() {
            return Err(Error::EmptySubcurve);
        }
        Ok(self
            .graph
            .connected_components(y)
            .into_iter()
            .map(|c| self.extended_value_connected(c))
            .sum())
    }

    fn extended_value_connected(&self, y: Subcurve) -> i64 {
        if let Some(i) = self.graph.bcon_index(y) {
            return self.values[i];
        }
        let rest = self.graph.complement(y);
        let mut total = self.chi;
        for z in self.graph.connected_components(rest) {
            let i = self.graph.bcon_index(z).expect("complement components are biconnected");
            total -= self.values[i];
            if !self.degenerate_at(i) {
                total += 1;
            }
        }
        total
    }

    /// Restriction to `y` in the extended degeneracy set, as a stability on the induced curve.
    pub fn restrict(&self, y: Subcurve) -> Result<(VStability, Embedding)> {
        self.ensure_valid()?;
        if y.is_empty() {
            return Err(Error::EmptySubcurve);
        }
        if !self.in_extended_degeneracy(y) {
            return Err(Error::NotDegenerate);
        }
        let (h, emb) = self.graph.induced(y)?;
        let chi = self.extended_value(y)?;
        let values = h
            .biconnected_subcurves()
            .iter()
            .map(|&w| self.extended_value(emb.to_parent(w)))
            .collect::<Result<Vec<_>>>()?;
        Ok((VStability { graph: h, chi, values }, emb))
    }

    /// Pullback along a contraction: `self` lives on the source (finer) curve and the
    /// result on the contracted curve, with `(ξ*s)_Y = s_{ξ_*(Y)}`.
    pub fn pullback(&self, c: &Contraction) -> Result<VStability> {
        if self.graph != c.source {
            return Err(Error::DomainMismatch("stability is not on the contraction source".into()));
        }
        let values = c
            .target
            .biconnected_subcurves()
            .iter()
            .map(|&y| {
                let up = c.pushforward(y);
                self.value(up).ok_or_else(|| {
                    Error::DomainMismatch(format!("{up:?} is not biconnected in the source"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VStability { graph: c.target.clone(), chi: self.chi, values })
    }

    /// Same data with other values (same graph and χ).
    pub fn with_values(&self, values: Vec<i64>) -> Result<VStability> {
        VStability::new(self.graph.clone(), self.chi, values)
    }
}

/// A set of biconnected subcurves, stored as a bitset over `BCon` indices.
#[derive(Clone, Debug)]
pub struct DegeneracySet {
    graph: DualGraph,
    bits: Vec<u64>,
}

impl PartialEq for DegeneracySet {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && self.graph == other.graph
    }
}

impl Eq for DegeneracySet {}

impl Hash for DegeneracySet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl PartialOrd for DegeneracySet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DegeneracySet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members().cmp(&other.members())
    }
}

impl DegeneracySet {
    pub fn empty(graph: &DualGraph) -> Self {
        let words = graph.biconnected_subcurves().len().div_ceil(64).max(1);
        DegeneracySet { graph: graph.clone(), bits: vec![0; words] }
    }

    /// Collects members without checking closure.
    pub fn from_members<I: IntoIterator<Item = Subcurve>>(graph: &DualGraph, ys: I) -> Result<Self> {
        let mut d = Self::empty(graph);
        for y in ys {
            let i = graph
                .bcon_index(y)
                .ok_or_else(|| Error::DomainMismatch(format!("{y:?} is not biconnected")))?;
            d.insert_index(i);
        }
        Ok(d)
    }

    /// The smallest valid degeneracy set containing the given subcurves.
    pub fn closure_of<I: IntoIterator<Item = Subcurve>>(graph: &DualGraph, ys: I) -> Result<Self> {
        let mut d = Self::from_members(graph, ys)?;
        d.close();
        Ok(d)
    }

    pub fn graph(&self) -> &DualGraph {
        &self.graph
    }

    pub(crate) fn insert_index(&mut self, i: usize) {
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn contains_index(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn contains(&self, y: Subcurve) -> bool {
        self.graph.bcon_index(y).is_some_and(|i| self.contains_index(i))
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub(crate) fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.graph.biconnected_subcurves().len()).filter(|&i| self.contains_index(i))
    }

    /// Members in canonical order.
    pub fn members(&self) -> Vec<Subcurve> {
        let bcon = self.graph.biconnected_subcurves();
        self.indices().map(|i| bcon[i]).collect()
    }

    pub fn is_subset_of(&self, other: &DegeneracySet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Members of `self` not in `other`.
    pub fn difference(&self, other: &DegeneracySet) -> DegeneracySet {
        DegeneracySet {
            graph: self.graph.clone(),
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & !b).collect(),
        }
    }

    /// Closes under complement and under disjoint unions that are biconnected.
    pub(crate) fn close(&mut self) {
        let graph = self.graph.clone();
        let st = graph.bcon_structure();
        loop {
            let mut changed = false;
            for i in 0..st.complement.len() {
                if self.contains_index(i) && !self.contains_index(st.complement[i]) {
                    self.insert_index(st.complement[i]);
                    changed = true;
                }
            }
            for &[i, j, u] in &st.union_pairs {
                if self.contains_index(i) && self.contains_index(j) && !self.contains_index(u) {
                    self.insert_index(u);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// Closed under complement and under disjoint unions landing in `BCon`.
    pub fn is_valid(&self) -> bool {
        let st = self.graph.bcon_structure();
        (0..st.complement.len())
            .all(|i| !self.contains_index(i) || self.contains_index(st.complement[i]))
            && st.union_pairs.iter().all(|&[i, j, u]| {
                !(self.contains_index(i) && self.contains_index(j)) || self.contains_index(u)
            })
    }

    /// Connected `W` whose complement components all lie in `self`, plus the whole curve.
    pub fn extended(&self) -> Vec<Subcurve> {
        self.graph
            .connected_subcurves()
            .into_iter()
            .filter(|&w| self.extended_contains(w))
            .collect()
    }

    pub fn extended_contains(&self, w: Subcurve) -> bool {
        if w.is_empty() || !self.graph.connected_mask(w.mask()) {
            return false;
        }
        self.graph
            .connected_components(self.graph.complement(w))
            .into_iter()
            .all(|z| self.contains(z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn banana() -> DualGraph {
        DualGraph::rational(2, &[(0, 1), (0, 1)]).unwrap()
    }

    fn triangle() -> DualGraph {
        DualGraph::rational(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn sc(vs: &[usize]) -> Subcurve {
        Subcurve::from_vertices(vs.iter().copied())
    }

    #[test]
    fn validate_examples() {
        let s = VStability::new(banana(), 0, vec![0, 0]).unwrap();
        assert!(s.validate().is_ok());
        assert!(s.validate_via_union().is_ok());
        assert!(s.is_degenerate(sc(&[0])) && s.is_degenerate(sc(&[1])));

        let bad = VStability::new(banana(), 0, vec![0, 2]).unwrap();
        let r = bad.validate();
        assert_eq!(r.violations, vec![Violation::Sum { y: sc(&[0]), excess: 2 }]);
        assert!(!bad.validate_via_union().is_ok());

        let tri = VStability::new(triangle(), 0, vec![0; 6]).unwrap();
        assert!(tri.validate().is_ok());
        assert!(tri.validate_via_union().is_ok());
    }

    #[test]
    fn domain_mismatch() {
        assert!(matches!(
            VStability::new(banana(), 0, vec![0]),
            Err(Error::DomainMismatch(_))
        ));
        assert!(matches!(
            VStability::from_pairs(banana(), 0, [(sc(&[0]), 0)]),
            Err(Error::DomainMismatch(_))
        ));
    }

    #[test]
    fn degeneracy_examples() {
        let s = VStability::new(banana(), 0, vec![0, 0]).unwrap();
        assert_eq!(s.degeneracy_set().unwrap().members(), vec![sc(&[0]), sc(&[1])]);
        assert!(!s.is_general().unwrap());
        let t = VStability::new(banana(), 0, vec![0, 1]).unwrap();
        assert!(t.is_general().unwrap());
        assert_eq!(t.extended_degeneracy().unwrap(), vec![sc(&[0, 1])]);
        assert_eq!(
            s.extended_degeneracy().unwrap(),
            vec![sc(&[0]), sc(&[1]), sc(&[0, 1])]
        );
        let tri = VStability::new(triangle(), 0, vec![0; 6]).unwrap();
        assert_eq!(tri.extended_degeneracy().unwrap().len(), 7);
    }

    #[test]
    fn extended_value_examples() {
        let path = DualGraph::rational(3, &[(0, 1), (1, 2)]).unwrap();
        // BCon order: {0}, {0,1}, {2}, {1,2}; general with χ = 1.
        let s = VStability::checked(path.clone(), 1, vec![1, 1, 1, 1]).unwrap();
        assert!(s.is_general().unwrap());
        assert_eq!(s.extended_value(path.full()).unwrap(), 1);
        assert_eq!(s.extended_value(sc(&[0, 1])).unwrap(), 1);
        assert_eq!(s.extended_value(sc(&[0, 2])).unwrap(), 2);
        assert_eq!(s.extended_value(Subcurve::EMPTY), Err(Error::EmptySubcurve));
    }

    #[test]
    fn restriction_examples() {
        let s = VStability::new(banana(), 0, vec![0, 0]).unwrap();
        let (r, _) = s.restrict(banana().full()).unwrap();
        assert_eq!(r, s);
        let (r0, emb) = s.restrict(sc(&[0])).unwrap();
        assert_eq!(r0.chi(), 0);
        assert!(r0.values().is_empty());
        assert_eq!(emb.vertices, vec![0]);
        let t = VStability::new(banana(), 0, vec![0, 1]).unwrap();
        assert_eq!(t.restrict(sc(&[0])), Err(Error::NotDegenerate));
    }

    #[test]
    fn pullback_examples() {
        let s = VStability::new(banana(), 0, vec![0, 1]).unwrap();
        let id = Contraction::identity(&banana());
        assert_eq!(s.pullback(&id).unwrap(), s);
        let (point, c) = banana().contract(&[0, 1]).unwrap();
        let p = s.pullback(&c).unwrap();
        assert_eq!(p.graph(), &point);
        assert_eq!(p.chi(), 0);
        assert!(p.values().is_empty());
    }

    #[test]
    fn degeneracy_set_closure() {
        let k4 = DualGraph::rational(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let d = DegeneracySet::closure_of(&k4, [sc(&[0]), sc(&[1])]).unwrap();
        assert!(d.is_valid());
        assert!(d.contains(sc(&[0, 1])) && d.contains(sc(&[2, 3])) && d.contains(sc(&[1, 2, 3])));
        assert_eq!(d.len(), 6);
    }
}
