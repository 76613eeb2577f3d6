//! Dual graphs of connected nodal curves and subcurve combinatorics.
//!
//! Vertices are irreducible components (with geometric genus), edges are
//! nodes. A subcurve is a set of components, stored as a bitmask.

use std::collections::VecDeque;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Largest supported number of components.
pub const MAX_COMPONENTS: usize = 16;
/// Largest supported number of nodes (edge sets are stored as `u64`).
pub const MAX_EDGES: usize = 64;

/// A subcurve, i.e. a set of components given by a bitmask.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subcurve(u32);

impl Subcurve {
    pub const EMPTY: Subcurve = Subcurve(0);

    pub fn from_mask(mask: u32) -> Self {
        Subcurve(mask)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_COMPONENTS);
        Subcurve(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(v: usize) -> Self {
        Subcurve(1 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        Subcurve(vs.into_iter().fold(0, |m, v| m | (1 << v)))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn is_subset_of(self, other: Subcurve) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subcurve) -> bool {
        self.0 & other.0 == 0
    }

    pub fn join(self, other: Subcurve) -> Subcurve {
        Subcurve(self.0 | other.0)
    }

    pub fn meet(self, other: Subcurve) -> Subcurve {
        Subcurve(self.0 & other.0)
    }

    pub fn minus(self, other: Subcurve) -> Subcurve {
        Subcurve(self.0 & !other.0)
    }

    /// Complement inside a curve with `n` components.
    pub fn complement(self, n: usize) -> Subcurve {
        Subcurve::full(n).minus(self)
    }

    pub fn lowest(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(v)
            }
        })
    }

    /// All subsets of `self` (including empty and `self`), ascending by mask.
    pub fn subsets(self) -> impl Iterator<Item = Subcurve> {
        let full = self.0;
        let mut cur: Option<u32> = Some(0);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full { None } else { Some(((c | !full).wrapping_add(1)) & full) };
            Some(Subcurve(c))
        })
    }
}

impl fmt::Debug for Subcurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

/// A node of the curve: an unordered pair of components with `u <= v`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        Edge { u: a.min(b), v: a.max(b) }
    }

    pub fn is_loop(self) -> bool {
        self.u == self.v
    }

    pub fn other(self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

struct Inner {
    genera: Vec<u32>,
    edges: Vec<Edge>,
    adj: Vec<u32>,
    mult: Vec<u32>,
    loops: Vec<u32>,
    connected: Vec<u64>,
    bcon: Vec<Subcurve>,
    bcon_index: Vec<u32>,
    structure: OnceLock<BconStructure>,
}

/// Index tables over `BCon` used by validation and enumeration.
#[derive(Debug)]
pub struct BconStructure {
    /// `complement[i]` is the index of the complement of `bcon[i]`.
    pub complement: Vec<usize>,
    /// Unordered pairwise-disjoint triples covering the curve, `i < j < k`.
    pub triples: Vec<[usize; 3]>,
    /// Unordered disjoint pairs `(i, j, union)` whose union is biconnected, `i < j`.
    pub union_pairs: Vec<[usize; 3]>,
}

/// The dual graph of a connected nodal curve. Cheap to clone.
#[derive(Clone)]
pub struct DualGraph(Arc<Inner>);

impl PartialEq for DualGraph {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.genera == other.0.genera && self.0.edges == other.0.edges)
    }
}

impl Eq for DualGraph {}

/// Genera and sorted edge list under the least relabelling.
pub type CanonicalKey = (Vec<u32>, Vec<(usize, usize)>);

impl std::hash::Hash for DualGraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.genera.hash(state);
        self.0.edges.hash(state);
    }
}

impl fmt::Debug for DualGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DualGraph")
            .field("genera", &self.0.genera)
            .field("edges", &self.0.edges.iter().map(|e| (e.u, e.v)).collect::<Vec<_>>())
            .finish()
    }
}

const NO_INDEX: u32 = u32::MAX;

impl DualGraph {
    /// Builds a dual graph; edges are normalized and sorted.
    pub fn new(genera: Vec<u32>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = genera.len();
        if n == 0 {
            return Err(Error::InvalidGraph("no components".into()));
        }
        if n > MAX_COMPONENTS {
            return Err(Error::InvalidGraph(format!("more than {MAX_COMPONENTS} components")));
        }
        if edges.len() > MAX_EDGES {
            return Err(Error::InvalidGraph(format!("more than {MAX_EDGES} edges")));
        }
        let mut es: Vec<Edge> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({a},{b}) out of range")));
            }
            es.push(Edge::new(a, b));
        }
        es.sort();
        let mut adj = vec![0u32; n];
        let mut mult = vec![0u32; n * n];
        let mut loops = vec![0u32; n];
        for e in &es {
            if e.is_loop() {
                loops[e.u] += 1;
            } else {
                adj[e.u] |= 1 << e.v;
                adj[e.v] |= 1 << e.u;
                mult[e.u * n + e.v] += 1;
                mult[e.v * n + e.u] += 1;
            }
        }
        let size = 1usize << n;
        let mut connected = vec![0u64; size.div_ceil(64)];
        for m in 1..size as u32 {
            if mask_connected(&adj, m) {
                connected[m as usize / 64] |= 1 << (m % 64);
            }
        }
        let is_conn = |m: u32| connected[m as usize / 64] >> (m % 64) & 1 == 1;
        let full = (size - 1) as u32;
        if !is_conn(full) {
            return Err(Error::InvalidGraph("graph is not connected".into()));
        }
        let mut bcon = Vec::new();
        let mut bcon_index = vec![NO_INDEX; size];
        for m in 1..full {
            if is_conn(m) && is_conn(full & !m) {
                bcon_index[m as usize] = bcon.len() as u32;
                bcon.push(Subcurve(m));
            }
        }
        Ok(DualGraph(Arc::new(Inner {
            genera,
            edges: es,
            adj,
            mult,
            loops,
            connected,
            bcon,
            bcon_index,
            structure: OnceLock::new(),
        })))
    }

    /// Genus-zero components joined by the given edges.
    pub fn rational(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(vec![0; n], edges)
    }

    pub fn num_components(&self) -> usize {
        self.0.genera.len()
    }

    pub fn genera(&self) -> &[u32] {
        &self.0.genera
    }

    /// Edges in canonical (sorted) order; indices into this list identify nodes.
    pub fn edges(&self) -> &[Edge] {
        &self.0.edges
    }

    pub fn full(&self) -> Subcurve {
        Subcurve::full(self.num_components())
    }

    pub fn complement(&self, y: Subcurve) -> Subcurve {
        y.complement(self.num_components())
    }

    /// Number of non-loop edges between distinct vertices `a` and `b`.
    pub fn multiplicity(&self, a: usize, b: usize) -> u32 {
        self.0.mult[a * self.num_components() + b]
    }

    pub fn loops_at(&self, v: usize) -> u32 {
        self.0.loops[v]
    }

    pub fn neighbors(&self, v: usize) -> Subcurve {
        Subcurve(self.0.adj[v])
    }

    pub(crate) fn connected_mask(&self, m: u32) -> bool {
        self.0.connected[m as usize / 64] >> (m % 64) & 1 == 1
    }

    /// Whether the induced subgraph on `y` is connected.
    pub fn is_connected(&self, y: Subcurve) -> Result<bool> {
        if y.is_empty() {
            return Err(Error::EmptySubcurve);
        }
        Ok(self.connected_mask(y.0))
    }

    /// Nonempty proper subcurves `Y` with `Y` and `Y^c` connected, ascending by mask.
    pub fn biconnected_subcurves(&self) -> &[Subcurve] {
        &self.0.bcon
    }

    pub fn bcon_index(&self, y: Subcurve) -> Option<usize> {
        match self.0.bcon_index.get(y.0 as usize) {
            Some(&i) if i != NO_INDEX => Some(i as usize),
            _ => None,
        }
    }

    pub fn is_biconnected(&self, y: Subcurve) -> bool {
        self.bcon_index(y).is_some()
    }

    /// Complement, triple and union tables over `BCon`, computed on first use.
    pub fn bcon_structure(&self) -> &BconStructure {
        self.0.structure.get_or_init(|| {
            let bcon = &self.0.bcon;
            let full = self.full();
            let complement =
                bcon.iter().map(|&y| self.bcon_index(full.minus(y)).unwrap()).collect();
            let mut triples = Vec::new();
            let mut union_pairs = Vec::new();
            for (i, &a) in bcon.iter().enumerate() {
                for (j, &b) in bcon.iter().enumerate().skip(i + 1) {
                    if !a.is_disjoint(b) {
                        continue;
                    }
                    let u = a.join(b);
                    if let Some(k) = self.bcon_index(full.minus(u)) {
                        if k > j {
                            triples.push([i, j, k]);
                        }
                    }
                    if let Some(k) = self.bcon_index(u) {
                        union_pairs.push([i, j, k]);
                    }
                }
            }
            BconStructure { complement, triples, union_pairs }
        })
    }

    /// Connected subcurves, ascending by mask.
    pub fn connected_subcurves(&self) -> Vec<Subcurve> {
        (1..=self.full().0).filter(|&m| self.connected_mask(m)).map(Subcurve).collect()
    }

    /// Maximal connected pieces of `y`, ordered by lowest vertex.
    pub fn connected_components(&self, y: Subcurve) -> Vec<Subcurve> {
        let mut rest = y.0;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.0.adj[v] & rest & !comp;
                comp |= new;
                frontier |= new;
            }
            out.push(Subcurve(comp));
            rest &= !comp;
        }
        out
    }

    /// Edges joining `a` and `b`, with multiplicity.
    pub fn edges_between(&self, a: Subcurve, b: Subcurve) -> Result<u32> {
        if !a.is_disjoint(b) {
            return Err(Error::OverlappingSubcurves);
        }
        Ok(self.count_between(a, b))
    }

    pub(crate) fn count_between(&self, a: Subcurve, b: Subcurve) -> u32 {
        let n = self.num_components();
        let mut c = 0;
        for u in a.vertices() {
            for v in b.vertices() {
                c += self.0.mult[u * n + v];
            }
        }
        c
    }

    /// Edges from `v` to the vertices of `y` (loops excluded).
    pub fn edges_to(&self, v: usize, y: Subcurve) -> u32 {
        let n = self.num_components();
        y.vertices().map(|w| self.0.mult[v * n + w]).sum()
    }

    /// Indices of edges with both endpoints in `y`; loops included.
    pub fn internal_edges(&self, y: Subcurve) -> Vec<usize> {
        self.edge_indices(|e| y.contains(e.u) && y.contains(e.v))
    }

    /// Bitmask over edge indices of the edges internal to `y`.
    pub fn internal_edge_mask(&self, y: Subcurve) -> u64 {
        self.edge_mask(|e| y.contains(e.u) && y.contains(e.v))
    }

    /// Bitmask over edge indices of the edges joining `a` and `b`.
    pub fn cross_edge_mask(&self, a: Subcurve, b: Subcurve) -> u64 {
        self.edge_mask(|e| {
            (a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u))
        })
    }

    fn edge_indices(&self, f: impl Fn(Edge) -> bool) -> Vec<usize> {
        self.0.edges.iter().enumerate().filter(|(_, e)| f(**e)).map(|(i, _)| i).collect()
    }

    fn edge_mask(&self, f: impl Fn(Edge) -> bool) -> u64 {
        self.0
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| f(**e))
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    /// Arithmetic genus of `y`: internal edges − |Y| + #components + Σ genera.
    pub fn subcurve_genus(&self, y: Subcurve) -> u32 {
        if y.is_empty() {
            return 0;
        }
        let internal = self.internal_edges(y).len() as u32;
        let genera: u32 = y.vertices().map(|v| self.0.genera[v]).sum();
        internal + self.connected_components(y).len() as u32 + genera - y.len() as u32
    }

    /// Arithmetic genus of the whole curve.
    pub fn genus(&self) -> u32 {
        self.subcurve_genus(self.full())
    }

    /// χ(O_Y) = 1 − g(Y) summed over connected components.
    pub fn chi_structure(&self, y: Subcurve) -> i64 {
        self.connected_components(y).len() as i64 - self.subcurve_genus(y) as i64
    }

    /// Breadth-first spanning tree from vertex 0, neighbors in index order.
    pub fn canonical_spanning_tree(&self) -> SpanningTree {
        let n = self.num_components();
        let mut parent = vec![None; n];
        let mut seen = 1u32;
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for w in Subcurve(self.0.adj[u] & !seen).vertices() {
                seen |= 1 << w;
                parent[w] = Some(u);
                edges.push((u, w));
                queue.push_back(w);
            }
        }
        SpanningTree { n, parent, edges }
    }

    /// Contracts the edges with the given indices.
    pub fn contract(&self, contracted: &[usize]) -> Result<(DualGraph, Contraction)> {
        let n = self.num_components();
        let mut uf: Vec<usize> = (0..n).collect();
        fn find(uf: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while uf[r] != r {
                r = uf[r];
            }
            uf[x] = r;
            r
        }
        let mut fset = 0u64;
        for &i in contracted {
            let e = *self
                .0
                .edges
                .get(i)
                .ok_or_else(|| Error::InvalidGraph(format!("edge index {i} out of range")))?;
            fset |= 1 << i;
            let (a, b) = (find(&mut uf, e.u), find(&mut uf, e.v));
            if a != b {
                uf[a.max(b)] = a.min(b);
            }
        }
        let mut roots = Vec::new();
        let vertex_map: Vec<usize> = (0..n)
            .map(|v| {
                let r = find(&mut uf, v);
                roots.iter().position(|&x| x == r).unwrap_or_else(|| {
                    roots.push(r);
                    roots.len() - 1
                })
            })
            .collect();
        let m = roots.len();
        let mut fibers = vec![Subcurve::EMPTY; m];
        for v in 0..n {
            fibers[vertex_map[v]] = fibers[vertex_map[v]].join(Subcurve::singleton(v));
        }
        let mut genera = Vec::with_capacity(m);
        for f in &fibers {
            let inside = self.edge_mask(|e| f.contains(e.u) && f.contains(e.v)) & fset;
            let g = inside.count_ones() + 1 + f.vertices().map(|v| self.0.genera[v]).sum::<u32>()
                - f.len() as u32;
            genera.push(g);
        }
        let new_edges: Vec<(usize, usize)> = self
            .0
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| fset >> i & 1 == 0)
            .map(|(_, e)| (vertex_map[e.u], vertex_map[e.v]))
            .collect();
        let target = DualGraph::new(genera, &new_edges)?;
        let mut ces: Vec<usize> = contracted.to_vec();
        ces.sort_unstable();
        ces.dedup();
        let c = Contraction {
            source: self.clone(),
            target: target.clone(),
            contracted_edges: ces,
            vertex_map,
            fibers,
        };
        Ok((target, c))
    }

    /// The induced curve on `y` with vertices relabelled in increasing order.
    pub fn induced(&self, y: Subcurve) -> Result<(DualGraph, Embedding)> {
        if y.is_empty() {
            return Err(Error::EmptySubcurve);
        }
        let vertices: Vec<usize> = y.vertices().collect();
        let pos = |v: usize| vertices.iter().position(|&w| w == v).unwrap();
        let genera = vertices.iter().map(|&v| self.0.genera[v]).collect();
        let edges: Vec<(usize, usize)> = self
            .internal_edges(y)
            .into_iter()
            .map(|i| {
                let e = self.0.edges[i];
                (pos(e.u), pos(e.v))
            })
            .collect();
        Ok((DualGraph::new(genera, &edges)?, Embedding { vertices }))
    }

    /// Laplacian ignoring loops.
    #[allow(clippy::needless_range_loop)]
    pub fn laplacian(&self) -> Vec<Vec<i64>> {
        let n = self.num_components();
        let mut l = vec![vec![0i64; n]; n];
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    let m = self.0.mult[a * n + b] as i64;
                    l[a][b] = -m;
                    l[a][a] += m;
                }
            }
        }
        l
    }

    /// Vertex permutations preserving genera and edge multiplicities.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.num_components();
        let mut out = Vec::new();
        let mut perm = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.extend_automorphism(&mut perm, &mut used, &mut out);
        out
    }

    fn extend_automorphism(&self, perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = self.num_components();
        let k = perm.len();
        if k == n {
            out.push(perm.clone());
            return;
        }
        for img in 0..n {
            if used[img]
                || self.0.genera[img] != self.0.genera[k]
                || self.0.loops[img] != self.0.loops[k]
            {
                continue;
            }
            let ok = (0..k).all(|j| self.multiplicity(k, j) == self.multiplicity(img, perm[j]));
            if ok {
                used[img] = true;
                perm.push(img);
                self.extend_automorphism(perm, used, out);
                perm.pop();
                used[img] = false;
            }
        }
    }

    /// Isomorphism-invariant key: lexicographically least relabelling.
    pub fn canonical_key(&self) -> CanonicalKey {
        let n = self.num_components();
        let mut best: Option<CanonicalKey> = None;
        for_each_permutation(n, |p| {
            let mut genera = vec![0; n];
            for v in 0..n {
                genera[p[v]] = self.0.genera[v];
            }
            let mut edges: Vec<(usize, usize)> = self
                .0
                .edges
                .iter()
                .map(|e| {
                    let (a, b) = (p[e.u], p[e.v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            edges.sort_unstable();
            let key = (genera, edges);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        });
        best.expect("at least one permutation")
    }
}

fn mask_connected(adj: &[u32], m: u32) -> bool {
    let start = m & m.wrapping_neg();
    let mut comp = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & m & !comp;
        comp |= new;
        frontier |= new;
    }
    comp == m
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// A rooted spanning tree; tree edges are oriented parent → child.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    n: usize,
    parent: Vec<Option<usize>>,
    edges: Vec<(usize, usize)>,
}

impl SpanningTree {
    /// Oriented edges `(parent, child)` in discovery order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Number of tree edges joining `y` to its complement.
    pub fn valence(&self, y: Subcurve) -> usize {
        self.edges.iter().filter(|&&(a, b)| y.contains(a) != y.contains(b)).count()
    }

    /// The side of the cut of tree edge `i` containing the root.
    pub fn cut(&self, i: usize) -> Subcurve {
        let child = self.edges[i].1;
        let mut below = Subcurve::singleton(child);
        for &(a, b) in &self.edges[i + 1..] {
            if below.contains(a) {
                below = below.join(Subcurve::singleton(b));
            }
        }
        below.complement(self.n)
    }
}

/// Free function form of [`SpanningTree::valence`].
pub fn tree_valence(t: &SpanningTree, y: Subcurve) -> usize {
    t.valence(y)
}

/// An edge contraction `source → target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub source: DualGraph,
    pub target: DualGraph,
    pub contracted_edges: Vec<usize>,
    /// Source vertex → target vertex.
    pub vertex_map: Vec<usize>,
    fibers: Vec<Subcurve>,
}

impl Contraction {
    pub fn identity(g: &DualGraph) -> Self {
        let n = g.num_components();
        Contraction {
            source: g.clone(),
            target: g.clone(),
            contracted_edges: Vec::new(),
            vertex_map: (0..n).collect(),
            fibers: (0..n).map(Subcurve::singleton).collect(),
        }
    }

    pub fn source_components(&self) -> usize {
        self.vertex_map.len()
    }

    pub fn target_components(&self) -> usize {
        self.fibers.len()
    }

    pub fn fiber(&self, w: usize) -> Subcurve {
        self.fibers[w]
    }

    /// The subcurve of the source made of all components over `y`.
    pub fn pushforward(&self, y: Subcurve) -> Subcurve {
        y.vertices().fold(Subcurve::EMPTY, |acc, w| acc.join(self.fibers[w]))
    }

    /// The image in the target of a source subcurve.
    pub fn image(&self, y: Subcurve) -> Subcurve {
        Subcurve::from_vertices(y.vertices().map(|v| self.vertex_map[v]))
    }
}

/// Vertex relabelling of an induced subgraph into its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub vertices: Vec<usize>,
}

impl Embedding {
    pub fn to_parent(&self, y: Subcurve) -> Subcurve {
        Subcurve::from_vertices(y.vertices().map(|i| self.vertices[i]))
    }

    pub fn from_parent(&self, y: Subcurve) -> Subcurve {
        Subcurve::from_vertices(
            self.vertices.iter().enumerate().filter(|(_, &v)| y.contains(v)).map(|(i, _)| i),
        )
    }
}
