//! Combinatorial rank-1 torsion-free sheaves on nodal curves.
//!
//! A sheaf class is recorded by its support, a degree per supported component
//! and the set of nodes where it fails to be free. Such a sheaf is the pushforward
//! of a line bundle from the partial normalization at the nonfree nodes, so
//!
//! `χ(I) = Σ_{v ∈ supp} (d_v + 1 − g_v) − #{free nodes internal to supp}`
//!
//! (loops included). Restriction `I_Y` keeps the data on `Y`; the subsheaf `_Y I`
//! additionally loses one degree at each free node joining `Y` to the rest of the
//! support. The sheaf splits at `Y` exactly when every node between `Y` and the
//! rest of the support is nonfree.

use std::collections::{BTreeSet, HashSet};
use std::sync::{Arc, OnceLock};

use crate::curve_graph::{DualGraph, Subcurve};
use crate::error::{Error, Result};
use crate::vstability::VStability;

/// Rank-1 torsion-free sheaf data: support, multidegree and nonfree nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SheafData {
    graph: DualGraph,
    support: Subcurve,
    degrees: Vec<i64>,
    nonfree: u64,
}

impl SheafData {
    /// `degrees` has one entry per component and must vanish off the support;
    /// `nonfree` is an edge mask of nodes internal to the support.
    pub fn new(graph: DualGraph, support: Subcurve, degrees: Vec<i64>, nonfree: u64) -> Result<Self> {
        let n = graph.num_components();
        if support.is_empty() {
            return Err(Error::EmptySubcurve);
        }
        if !support.is_subset_of(graph.full()) {
            return Err(Error::InvalidSheaf(format!("support {support:?} is not a subcurve")));
        }
        if degrees.len() != n {
            return Err(Error::InvalidSheaf(format!(
                "expected {n} degrees, got {}",
                degrees.len()
            )));
        }
        if let Some(v) = (0..n).find(|&v| !support.contains(v) && degrees[v] != 0) {
            return Err(Error::InvalidSheaf(format!("nonzero degree off the support at {v}")));
        }
        if nonfree & !graph.internal_edge_mask(support) != 0 {
            return Err(Error::InvalidSheaf("nonfree nodes must be internal to the support".into()));
        }
        Ok(SheafData { graph, support, degrees, nonfree })
    }

    /// A line bundle on the whole curve.
    pub fn line_bundle(graph: DualGraph, degrees: Vec<i64>) -> Result<Self> {
        let full = graph.full();
        SheafData::new(graph, full, degrees, 0)
    }

    pub fn graph(&self) -> &DualGraph {
        &self.graph
    }

    pub fn support(&self) -> Subcurve {
        self.support
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn degree(&self, v: usize) -> i64 {
        self.degrees[v]
    }

    /// Edge mask of the nonfree nodes.
    pub fn nonfree(&self) -> u64 {
        self.nonfree
    }

    /// Total degree over the support.
    pub fn total_degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    pub fn is_line_bundle(&self) -> bool {
        self.support == self.graph.full() && self.nonfree == 0
    }

    /// Ordering key for deterministic output.
    pub fn key(&self) -> (u32, Vec<i64>, u64) {
        (self.support.mask(), self.degrees.clone(), self.nonfree)
    }

    pub fn euler_char(&self) -> i64 {
        chi_on(&self.graph, &self.degrees, self.nonfree, self.support)
    }

    /// `χ(I_Y)` for `Y` met with the support.
    pub fn euler_char_on(&self, y: Subcurve) -> Result<i64> {
        let y = self.meet(y)?;
        Ok(chi_on(&self.graph, &self.degrees, self.nonfree, y))
    }

    fn meet(&self, y: Subcurve) -> Result<Subcurve> {
        let m = y.meet(self.support);
        if m.is_empty() {
            Err(Error::EmptySubcurve)
        } else {
            Ok(m)
        }
    }

    /// The torsion-free quotient `I_Y` of the restriction to `Y`.
    pub fn restrict(&self, y: Subcurve) -> Result<SheafData> {
        let y = self.meet(y)?;
        let degrees = (0..self.degrees.len())
            .map(|v| if y.contains(v) { self.degrees[v] } else { 0 })
            .collect();
        let nonfree = self.nonfree & self.graph.internal_edge_mask(y);
        Ok(SheafData { graph: self.graph.clone(), support: y, degrees, nonfree })
    }

    /// The subsheaf `_Y I` of sections vanishing on the rest of the support.
    pub fn sub_part(&self, y: Subcurve) -> Result<SheafData> {
        let mut out = self.restrict(y)?;
        let rest = self.support.minus(out.support);
        for e in self.free_cross_edges(out.support, rest) {
            let edge = self.graph.edges()[e];
            let v = if out.support.contains(edge.u) { edge.u } else { edge.v };
            out.degrees[v] -= 1;
        }
        Ok(out)
    }

    fn free_cross_edges(&self, a: Subcurve, b: Subcurve) -> impl Iterator<Item = usize> {
        let m = self.graph.cross_edge_mask(a, b) & !self.nonfree;
        (0..64).filter(move |i| m >> i & 1 == 1)
    }

    /// Whether `I = I_Y ⊕ I_{supp − Y}`, i.e. every node between them is nonfree.
    pub fn splits_at(&self, y: Subcurve) -> bool {
        let y = y.meet(self.support);
        let rest = self.support.minus(y);
        self.graph.cross_edge_mask(y, rest) & !self.nonfree == 0
    }

    /// Supports of the indecomposable summands: components of the support joined
    /// through free nodes, ordered by lowest vertex.
    pub fn canonical_supports(&self) -> Vec<Subcurve> {
        let mut left = self.support;
        let mut out = Vec::new();
        let free: Vec<(usize, usize)> = self
            .graph
            .edges()
            .iter()
            .enumerate()
            .filter(|&(i, e)| self.nonfree >> i & 1 == 0 && !e.is_loop())
            .filter(|(_, e)| self.support.contains(e.u) && self.support.contains(e.v))
            .map(|(_, e)| (e.u, e.v))
            .collect();
        while let Some(start) = left.lowest() {
            let mut comp = Subcurve::singleton(start);
            loop {
                let grown = free.iter().fold(comp, |c, &(u, v)| {
                    if c.contains(u) || c.contains(v) {
                        c.join(Subcurve::from_vertices([u, v]))
                    } else {
                        c
                    }
                });
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            left = left.minus(comp);
            out.push(comp);
        }
        out
    }

    /// The decomposition `I = ⊕ I_{Y_j}` into indecomposable summands.
    pub fn canonical_decomposition(&self) -> Vec<SheafData> {
        self.canonical_supports()
            .into_iter()
            .map(|y| self.restrict(y).expect("pieces are nonempty"))
            .collect()
    }

    /// Rank of the automorphism torus, i.e. the number of indecomposable summands.
    pub fn aut_rank(&self) -> usize {
        self.canonical_supports().len()
    }

    pub fn is_simple(&self) -> bool {
        self.aut_rank() == 1
    }
}

fn chi_on(g: &DualGraph, degrees: &[i64], nonfree: u64, y: Subcurve) -> i64 {
    let local: i64 = y.vertices().map(|v| degrees[v] + 1 - g.genera()[v] as i64).sum();
    let free = (g.internal_edge_mask(y) & !nonfree).count_ones() as i64;
    local - free
}

/// Direct sum of sheaves with pairwise disjoint supports. Nodes between distinct
/// summands are nonfree.
pub fn direct_sum(parts: &[SheafData]) -> Result<SheafData> {
    let first = parts.first().ok_or(Error::EmptySubcurve)?;
    let g = first.graph.clone();
    let mut support = Subcurve::EMPTY;
    let mut degrees = vec![0; g.num_components()];
    let mut nonfree = 0u64;
    for p in parts {
        if p.graph != g {
            return Err(Error::DomainMismatch("summands live on different curves".into()));
        }
        if !p.support.is_disjoint(support) {
            return Err(Error::OverlappingSubcurves);
        }
        for v in p.support.vertices() {
            degrees[v] = p.degrees[v];
        }
        nonfree |= p.nonfree;
        for q in parts {
            if q.support != p.support {
                nonfree |= g.cross_edge_mask(p.support, q.support);
            }
        }
        support = support.join(p.support);
    }
    SheafData::new(g, support, degrees, nonfree)
}

/// An ordered partition `(Y_0, …, Y_q)` of a support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    parts: Vec<Subcurve>,
}

impl OrderedPartition {
    /// Parts must be nonempty and pairwise disjoint.
    pub fn new(parts: Vec<Subcurve>) -> Result<Self> {
        let mut seen = Subcurve::EMPTY;
        for &p in &parts {
            if p.is_empty() {
                return Err(Error::InvalidPartition("empty part".into()));
            }
            if !p.is_disjoint(seen) {
                return Err(Error::InvalidPartition(format!("{p:?} overlaps an earlier part")));
            }
            seen = seen.join(p);
        }
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        Ok(OrderedPartition { parts })
    }

    pub fn parts(&self) -> &[Subcurve] {
        &self.parts
    }

    pub fn union(&self) -> Subcurve {
        self.parts.iter().fold(Subcurve::EMPTY, |a, &b| a.join(b))
    }
}

/// `Gr_{Y•}(I) = ⊕_i (_{W_i} I)_{Y_i}` with `W_i = Y_i ∪ … ∪ Y_q`.
pub fn gr_specialize(i: &SheafData, p: &OrderedPartition) -> Result<SheafData> {
    if p.union() != i.support {
        return Err(Error::InvalidPartition("parts do not cover the support".into()));
    }
    let mut pieces = Vec::with_capacity(p.parts.len());
    for k in 0..p.parts.len() {
        let w = p.parts[k..].iter().fold(Subcurve::EMPTY, |a, &b| a.join(b));
        pieces.push(i.sub_part(w)?.restrict(p.parts[k])?);
    }
    direct_sum(&pieces)
}

/// `Gr_{(Y, supp − Y)}(I) = I_Y ⊕ _{supp − Y} I`.
pub fn specialize_at(i: &SheafData, y: Subcurve) -> Result<SheafData> {
    let y = y.meet(i.support);
    let rest = i.support.minus(y);
    if y.is_empty() || rest.is_empty() {
        return Ok(i.clone());
    }
    gr_specialize(i, &OrderedPartition::new(vec![y, rest])?)
}

/// Forms `K` with `K_Y = J` (Y the support of `J`) and `_Z K = I` (Z the support of `I`).
/// Nodes between `Y` and `Z` in `free_boundary` are free in `K`; the others are nonfree.
pub fn extension_glue(j: &SheafData, i: &SheafData, free_boundary: u64) -> Result<SheafData> {
    if j.graph != i.graph {
        return Err(Error::DomainMismatch("sheaves live on different curves".into()));
    }
    if !j.support.is_disjoint(i.support) {
        return Err(Error::OverlappingSubcurves);
    }
    let g = &j.graph;
    let cross = g.cross_edge_mask(j.support, i.support);
    if free_boundary & !cross != 0 {
        return Err(Error::InvalidSheaf("free boundary nodes must join the two supports".into()));
    }
    let mut degrees = vec![0; g.num_components()];
    for v in j.support.vertices() {
        degrees[v] = j.degrees[v];
    }
    for v in i.support.vertices() {
        degrees[v] = i.degrees[v];
    }
    for (e, edge) in g.edges().iter().enumerate() {
        if free_boundary >> e & 1 == 1 {
            let v = if i.support.contains(edge.u) { edge.u } else { edge.v };
            degrees[v] += 1;
        }
    }
    let nonfree = j.nonfree | i.nonfree | (cross & !free_boundary);
    SheafData::new(g.clone(), j.support.join(i.support), degrees, nonfree)
}

/// Restricted stability data on a connected subcurve `Y` of the extended degeneracy set.
#[derive(Debug)]
struct Piece {
    /// `|s(Y)| = s_Y`.
    total: i64,
    /// `(Z, s(Y)_Z, Z degenerate for s(Y))` over the biconnected subcurves of `Y`.
    bcon: Vec<(Subcurve, i64, bool)>,
    /// `(W, s(Y)_W)` over the extended degeneracy set of `s(Y)`, without `Y` itself.
    hat: Vec<(Subcurve, i64)>,
}

/// Stability predicates for sheaves against a fixed V-stability, with the restricted
/// stabilities cached per subcurve.
pub struct SheafStability {
    s: VStability,
    pieces: Vec<OnceLock<Option<Arc<Piece>>>>,
}

impl SheafStability {
    pub fn new(s: &VStability) -> Result<Self> {
        s.degeneracy_set()?;
        let n = s.graph().num_components();
        Ok(SheafStability { s: s.clone(), pieces: (0..1usize << n).map(|_| OnceLock::new()).collect() })
    }

    pub fn stability(&self) -> &VStability {
        &self.s
    }

    fn piece(&self, y: Subcurve) -> Option<Arc<Piece>> {
        self.pieces[y.mask() as usize]
            .get_or_init(|| {
                let (t, emb) = self.s.restrict(y).ok()?;
                let bcon = t
                    .entries()
                    .map(|(z, v)| (emb.to_parent(z), v, t.is_degenerate(z)))
                    .collect();
                let full = t.graph().full();
                let hat = t
                    .extended_degeneracy()
                    .expect("restrictions are valid")
                    .into_iter()
                    .filter(|&w| w != full)
                    .map(|w| (emb.to_parent(w), t.extended_value(w).expect("nonempty")))
                    .collect();
                Some(Arc::new(Piece { total: t.chi(), bcon, hat }))
            })
            .clone()
    }

    fn check_graph(&self, i: &SheafData) -> Result<()> {
        if i.graph != *self.s.graph() {
            return Err(Error::DomainMismatch("sheaf and stability live on different curves".into()));
        }
        Ok(())
    }

    /// Connected components of the support with their restricted stability data,
    /// or `None` if some component is outside the extended degeneracy set.
    fn components(&self, i: &SheafData) -> Option<Vec<(Subcurve, Arc<Piece>)>> {
        i.graph
            .connected_components(i.support)
            .into_iter()
            .map(|y| self.piece(y).map(|p| (y, p)))
            .collect()
    }

    fn chi(i: &SheafData, z: Subcurve) -> i64 {
        chi_on(&i.graph, &i.degrees, i.nonfree, z)
    }

    fn semistable_parts(&self, i: &SheafData) -> Option<Vec<(Subcurve, Arc<Piece>)>> {
        let comps = self.components(i)?;
        let ok = comps.iter().all(|(y, p)| {
            Self::chi(i, *y) == p.total && p.bcon.iter().all(|&(z, v, _)| Self::chi(i, z) >= v)
        });
        ok.then_some(comps)
    }

    pub fn is_semistable(&self, i: &SheafData) -> Result<bool> {
        self.check_graph(i)?;
        Ok(self.semistable_parts(i).is_some())
    }

    /// Semistable, and every equality on a degenerate `Z` of a component `Y` splits `I_Y` at `Z`.
    pub fn is_polystable(&self, i: &SheafData) -> Result<bool> {
        Ok(self.polystable_witnesses(i)?.is_some_and(|w| w.is_empty()))
    }

    /// Semistable with strict inequality on every degenerate `Z` of every component.
    pub fn is_stable(&self, i: &SheafData) -> Result<bool> {
        self.check_graph(i)?;
        Ok(self.semistable_parts(i).is_some_and(|comps| {
            comps.iter().all(|(_, p)| p.bcon.iter().all(|&(z, v, d)| !d || Self::chi(i, z) > v))
        }))
    }

    /// Polystability tested over the extended degeneracy sets of the components.
    pub fn is_polystable_hat(&self, i: &SheafData) -> Result<bool> {
        self.check_graph(i)?;
        Ok(self.semistable_parts(i).is_some_and(|comps| {
            comps.iter().all(|(y, p)| {
                p.hat.iter().all(|&(w, v)| {
                    Self::chi(i, w) != v || splits_within(i, *y, w)
                })
            })
        }))
    }

    /// Stability tested over the extended degeneracy sets of the components.
    pub fn is_stable_hat(&self, i: &SheafData) -> Result<bool> {
        self.check_graph(i)?;
        Ok(self.semistable_parts(i).is_some_and(|comps| {
            comps.iter().all(|(_, p)| p.hat.iter().all(|&(w, v)| Self::chi(i, w) > v))
        }))
    }

    /// Degenerate `Z` (inside some support component) with `χ(I_Z) = s_Z` at which `I`
    /// does not split, in component then index order. `None` if `I` is not semistable.
    pub fn polystable_witnesses(&self, i: &SheafData) -> Result<Option<Vec<Subcurve>>> {
        self.check_graph(i)?;
        Ok(self.semistable_parts(i).map(|comps| {
            comps
                .iter()
                .flat_map(|(y, p)| {
                    p.bcon
                        .iter()
                        .filter(|&&(z, v, d)| d && Self::chi(i, z) == v && !splits_within(i, *y, z))
                        .map(|&(z, _, _)| z)
                        .collect::<Vec<_>>()
                })
                .collect()
        }))
    }

    /// The polystable sheaf that `I` isotrivially specializes to, reached by splitting
    /// at the first witness until none remain.
    pub fn polystable_limit(&self, i: &SheafData) -> Result<SheafData> {
        let mut cur = i.clone();
        loop {
            let witnesses = self.polystable_witnesses(&cur)?.ok_or(Error::NotSemistable)?;
            match witnesses.first() {
                None => return Ok(cur),
                Some(&z) => cur = specialize_at(&cur, z)?,
            }
        }
    }

    /// Every polystable sheaf reachable by splitting at witnesses in any order.
    pub fn all_polystable_limits(&self, i: &SheafData) -> Result<Vec<SheafData>> {
        if !self.is_semistable(i)? {
            return Err(Error::NotSemistable);
        }
        let mut seen = HashSet::new();
        let mut results = BTreeSet::new();
        let mut stack = vec![i.clone()];
        while let Some(cur) = stack.pop() {
            if !seen.insert(cur.key()) {
                continue;
            }
            let witnesses = self.polystable_witnesses(&cur)?.ok_or(Error::NotSemistable)?;
            if witnesses.is_empty() {
                results.insert(cur.key());
                continue;
            }
            for z in witnesses {
                stack.push(specialize_at(&cur, z)?);
            }
        }
        results
            .into_iter()
            .map(|(m, d, nf)| SheafData::new(i.graph.clone(), Subcurve::from_mask(m), d, nf))
            .collect()
    }

    /// Indecomposable summands of a polystable sheaf, each checked to be stable.
    pub fn stable_summands(&self, i: &SheafData) -> Result<Vec<SheafData>> {
        if !self.is_polystable(i)? {
            return Err(Error::NotPolystable);
        }
        let pieces = i.canonical_decomposition();
        for p in &pieces {
            if !self.is_stable(p)? {
                return Err(Error::NotPolystable);
            }
        }
        Ok(pieces)
    }

    /// Semistable sheaf classes, filtered by the options.
    pub fn enumerate_semistable(&self, opts: &EnumerateOptions) -> Vec<SheafData> {
        let g = self.s.graph();
        let supports: Vec<Subcurve> = match opts.supports {
            Supports::Full => vec![g.full()],
            Supports::Only(y) => vec![y],
            Supports::All => g.full().subsets().filter(|y| !y.is_empty()).collect(),
        };
        let mut out = Vec::new();
        for y in supports {
            let Some(comps) = self.components_of(y) else { continue };
            let internal = g.internal_edge_mask(y);
            let edges: Vec<usize> = (0..64).filter(|e| internal >> e & 1 == 1).collect();
            for sub in 0..1u64 << edges.len() {
                let nonfree = edges.iter().enumerate().fold(0u64, |m, (k, &e)| {
                    if sub >> k & 1 == 1 {
                        m | 1 << e
                    } else {
                        m
                    }
                });
                self.enumerate_degrees(y, &comps, nonfree, opts, &mut out);
            }
        }
        out.sort_by_key(|i| i.key());
        out
    }

    fn components_of(&self, y: Subcurve) -> Option<Vec<(Subcurve, Arc<Piece>)>> {
        self.s
            .graph()
            .connected_components(y)
            .into_iter()
            .map(|c| self.piece(c).map(|p| (c, p)))
            .collect()
    }

    fn enumerate_degrees(
        &self,
        y: Subcurve,
        comps: &[(Subcurve, Arc<Piece>)],
        nonfree: u64,
        opts: &EnumerateOptions,
        out: &mut Vec<SheafData>,
    ) {
        let g = self.s.graph();
        let n = g.num_components();
        // Per vertex: χ(I_v) ≥ s(Y)_v and χ(_v I) ≤ |s(Y)| − s(Y)_{Y − v}, which bound d_v.
        let mut bounds = vec![(0i64, -1i64); n];
        for (c, p) in comps {
            let t = opts
                .degree_window
                .is_none()
                .then(|| self.s.restrict(*c).expect("component is in the extended set").0);
            for (k, v) in c.vertices().enumerate() {
                bounds[v] = match (&t, opts.degree_window) {
                    (_, Some(window)) => window,
                    (None, None) => unreachable!(),
                    (Some(t), None) => {
                        let single = Subcurve::singleton(v);
                        let base = 1 - g.genera()[v] as i64
                            - (g.internal_edge_mask(single) & !nonfree).count_ones() as i64;
                        let boundary = (g.cross_edge_mask(single, c.minus(single)) & !nonfree)
                            .count_ones() as i64;
                        let local = Subcurve::singleton(k);
                        let lo = t.extended_value(local).expect("nonempty") - base;
                        let rest = t.graph().full().minus(local);
                        let hi = if rest.is_empty() {
                            p.total - base
                        } else {
                            p.total - t.extended_value(rest).expect("nonempty") - base + boundary
                        };
                        (lo, hi)
                    }
                };
            }
        }
        let vertices: Vec<usize> = y.vertices().collect();
        let mut degrees = vec![0i64; n];
        self.degree_search(y, comps, nonfree, &vertices, 0, &bounds, &mut degrees, out);
    }

    #[allow(clippy::too_many_arguments)]
    fn degree_search(
        &self,
        y: Subcurve,
        comps: &[(Subcurve, Arc<Piece>)],
        nonfree: u64,
        vertices: &[usize],
        k: usize,
        bounds: &[(i64, i64)],
        degrees: &mut Vec<i64>,
        out: &mut Vec<SheafData>,
    ) {
        let g = self.s.graph();
        if k == vertices.len() {
            let i = SheafData {
                graph: g.clone(),
                support: y,
                degrees: degrees.clone(),
                nonfree,
            };
            if self.semistable_parts(&i).is_some() {
                out.push(i);
            }
            return;
        }
        let v = vertices[k];
        let (lo, hi) = bounds[v];
        // The last vertex of a component is fixed by χ(I_{Y_i}) = s_{Y_i}.
        let comp = comps.iter().find(|(c, _)| c.contains(v)).expect("v is supported");
        let last = comp.0.vertices().last() == Some(v);
        for d in lo..=hi {
            degrees[v] = d;
            if last && chi_on(g, degrees, nonfree, comp.0) != comp.1.total {
                continue;
            }
            self.degree_search(y, comps, nonfree, vertices, k + 1, bounds, degrees, out);
        }
        degrees[v] = 0;
    }
}

/// Whether `I_Y` splits at `W ⊆ Y`.
fn splits_within(i: &SheafData, y: Subcurve, w: Subcurve) -> bool {
    i.graph.cross_edge_mask(w, y.minus(w)) & !i.nonfree == 0
}

/// Which supports to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Supports {
    /// The whole curve.
    #[default]
    Full,
    /// Every nonempty subcurve.
    All,
    Only(Subcurve),
}

/// Options for [`SheafStability::enumerate_semistable`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub supports: Supports,
    /// Box of degrees searched per component; `None` uses the tight bounds implied by
    /// semistability.
    pub degree_window: Option<(i64, i64)>,
}

pub fn is_semistable(i: &SheafData, s: &VStability) -> Result<bool> {
    SheafStability::new(s)?.is_semistable(i)
}

pub fn is_polystable(i: &SheafData, s: &VStability) -> Result<bool> {
    SheafStability::new(s)?.is_polystable(i)
}

pub fn is_stable(i: &SheafData, s: &VStability) -> Result<bool> {
    SheafStability::new(s)?.is_stable(i)
}

pub fn polystable_limit(i: &SheafData, s: &VStability) -> Result<SheafData> {
    SheafStability::new(s)?.polystable_limit(i)
}

pub fn stable_summands(i: &SheafData, s: &VStability) -> Result<Vec<SheafData>> {
    SheafStability::new(s)?.stable_summands(i)
}

pub fn enumerate_semistable(s: &VStability, opts: &EnumerateOptions) -> Result<Vec<SheafData>> {
    Ok(SheafStability::new(s)?.enumerate_semistable(opts))
}
