//! Small connected multigraphs up to isomorphism, for exhaustive checks.

use std::collections::HashSet;

use crate::curve_graph::DualGraph;

/// Connected loopless multigraphs with genus-0 vertices, `1..=max_vertices` vertices and
/// at most `max_edges` edges, one per isomorphism class, ordered by size.
pub fn connected_multigraphs(max_vertices: usize, max_edges: usize) -> Vec<DualGraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut seen = HashSet::new();
        let mut mult = vec![0usize; pairs.len()];
        let mut found = Vec::new();
        compositions(&pairs, 0, max_edges, &mut mult, &mut |m| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(m)
                .flat_map(|(&p, &k)| std::iter::repeat_n(p, k))
                .collect();
            if edges.len() + 1 < n {
                return;
            }
            if let Ok(g) = DualGraph::rational(n, &edges) {
                if seen.insert(g.canonical_key()) {
                    found.push(g);
                }
            }
        });
        found.sort_by_key(|g| (g.edges().len(), g.canonical_key()));
        out.extend(found);
    }
    out
}

fn compositions(
    pairs: &[(usize, usize)],
    i: usize,
    left: usize,
    mult: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if i == pairs.len() {
        f(mult);
        return;
    }
    for k in 0..=left {
        mult[i] = k;
        compositions(pairs, i + 1, left - k, mult, f);
    }
    mult[i] = 0;
}
