//! Brute-force oracles written directly from the definitions. They use only the
//! graph plumbing (components, edges, biconnected subcurves) of the library.

#![allow(dead_code)]

use vstab::{DualGraph, SheafData, Subcurve, VStability};

pub fn subcurves(n: usize) -> impl Iterator<Item = Subcurve> {
    (1..1u32 << n).map(Subcurve::from_mask)
}

pub fn is_connected(g: &DualGraph, y: Subcurve) -> bool {
    !y.is_empty() && g.connected_components(y).len() == 1
}

pub fn is_bcon(g: &DualGraph, y: Subcurve) -> bool {
    let c = g.complement(y);
    !c.is_empty() && is_connected(g, y) && is_connected(g, c)
}

/// Whether some edge joins `a` and `b`.
pub fn touches(g: &DualGraph, a: Subcurve, b: Subcurve) -> bool {
    g.edges().iter().any(|e| {
        (a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u))
    })
}

pub fn value(s: &VStability, y: Subcurve) -> i64 {
    s.value(y).unwrap_or_else(|| panic!("{y:?} is not biconnected"))
}

pub fn degenerate(s: &VStability, y: Subcurve) -> bool {
    value(s, y) + value(s, s.graph().complement(y)) == s.chi()
}

pub fn degeneracy(s: &VStability) -> Vec<Subcurve> {
    s.graph().biconnected_subcurves().iter().copied().filter(|&y| degenerate(s, y)).collect()
}

/// Connected `w` equal to the whole curve or whose complement components are degenerate.
pub fn dhat(s: &VStability, w: Subcurve) -> bool {
    let g = s.graph();
    if !is_connected(g, w) {
        return false;
    }
    let c = g.complement(w);
    c.is_empty() || g.connected_components(c).into_iter().all(|z| degenerate(s, z))
}

/// The extended V-function, straight from its defining formula.
pub fn ext(s: &VStability, y: Subcurve) -> i64 {
    let g = s.graph();
    g.connected_components(y)
        .into_iter()
        .map(|w| {
            let c = g.complement(w);
            let mut total = s.chi();
            for z in g.connected_components(c) {
                total -= value(s, z);
                if !degenerate(s, z) {
                    total += 1;
                }
            }
            total
        })
        .sum()
}

/// Sum rule plus the union trichotomy, which together are equivalent to validity.
pub fn valid(s: &VStability) -> bool {
    let g = s.graph();
    let bcon = g.biconnected_subcurves();
    for &y in bcon {
        let e = value(s, y) + value(s, g.complement(y)) - s.chi();
        if e != 0 && e != 1 {
            return false;
        }
    }
    for &y1 in bcon {
        for &y2 in bcon {
            if y1.mask() >= y2.mask() || !y1.is_disjoint(y2) || s.value(y1.join(y2)).is_none() {
                continue;
            }
            let u = y1.join(y2);
            let diff = value(s, u) - value(s, y1) - value(s, y2);
            let (d1, d2, du) = (degenerate(s, y1), degenerate(s, y2), degenerate(s, u));
            let ok = if d1 || d2 {
                diff == 0
            } else if du {
                diff == -1
            } else {
                diff == 0 || diff == -1
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// `d + (O(−Y) contribution)` computed edge by edge.
pub fn twist(g: &DualGraph, d: &[i64], y: Subcurve) -> Vec<i64> {
    let mut out = d.to_vec();
    for e in g.edges() {
        if e.is_loop() {
            continue;
        }
        match (y.contains(e.u), y.contains(e.v)) {
            (true, false) => {
                out[e.u] += 1;
                out[e.v] -= 1;
            }
            (false, true) => {
                out[e.v] += 1;
                out[e.u] -= 1;
            }
            _ => {}
        }
    }
    out
}

pub fn internal_edges(g: &DualGraph, y: Subcurve) -> i64 {
    g.edges().iter().filter(|e| y.contains(e.u) && y.contains(e.v)).count() as i64
}

/// `χ(L_Z) − s_Z` for the line bundle of multidegree `d`.
pub fn beta(s: &VStability, d: &[i64], z: Subcurve) -> i64 {
    let g = s.graph();
    let local: i64 = z.vertices().map(|v| d[v] + 1 - g.genera()[v] as i64).sum();
    local - internal_edges(g, z) - ext(s, z)
}

/// `χ(I_Y)` from degrees and free internal nodes.
pub fn chi(i: &SheafData, y: Subcurve) -> i64 {
    let g = i.graph();
    let y = y.meet(i.support());
    let local: i64 = y.vertices().map(|v| i.degree(v) + 1 - g.genera()[v] as i64).sum();
    let free = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(k, e)| y.contains(e.u) && y.contains(e.v) && i.nonfree() >> k & 1 == 0)
        .count() as i64;
    local - free
}

/// Biconnected subcurves of the connected subcurve `y`, computed within `y`.
pub fn bcon_within(g: &DualGraph, y: Subcurve) -> Vec<Subcurve> {
    y.subsets()
        .filter(|&z| !z.is_empty() && z != y)
        .filter(|&z| is_connected(g, z) && is_connected(g, y.minus(z)))
        .collect()
}

/// Semistability exactly as defined: per support component `Y_i`, membership in the
/// extended degeneracy set, `χ(I_{Y_i}) = s_{Y_i}` and `χ(I_Z) ≥ s_Z` on `BCon(Y_i)`.
pub fn semistable(s: &VStability, i: &SheafData) -> bool {
    let g = s.graph();
    g.connected_components(i.support()).into_iter().all(|yi| {
        dhat(s, yi)
            && chi(i, yi) == ext(s, yi)
            && bcon_within(g, yi).into_iter().all(|z| chi(i, z) >= ext(s, z))
    })
}

/// Whether every node between `y` and the rest of the support is nonfree.
pub fn splits(i: &SheafData, y: Subcurve) -> bool {
    let g = i.graph();
    let rest = i.support().minus(y);
    g.edges().iter().enumerate().all(|(k, e)| {
        let cross = (y.contains(e.u) && rest.contains(e.v)) || (y.contains(e.v) && rest.contains(e.u));
        !cross || i.nonfree() >> k & 1 == 1
    })
}

/// Every sheaf class with support `support` whose component characteristics match
/// `s`, degrees in `[lo, hi]` and any set of nonfree internal nodes.
pub fn sheaf_box(s: &VStability, support: Subcurve, lo: i64, hi: i64) -> Vec<SheafData> {
    let g = s.graph();
    let comps = g.connected_components(support);
    let internal: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| support.contains(e.u) && support.contains(e.v))
        .map(|(k, _)| k)
        .collect();
    let verts: Vec<usize> = support.vertices().collect();
    let mut out = Vec::new();
    for sub in 0..1u64 << internal.len() {
        let nonfree = internal
            .iter()
            .enumerate()
            .filter(|(b, _)| sub >> b & 1 == 1)
            .fold(0u64, |m, (_, &k)| m | 1 << k);
        let mut d = vec![0i64; g.num_components()];
        fill(s, &comps, &verts, 0, lo, hi, nonfree, support, &mut d, &mut out);
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn fill(
    s: &VStability,
    comps: &[Subcurve],
    verts: &[usize],
    k: usize,
    lo: i64,
    hi: i64,
    nonfree: u64,
    support: Subcurve,
    d: &mut Vec<i64>,
    out: &mut Vec<SheafData>,
) {
    if k == verts.len() {
        let i = SheafData::new(s.graph().clone(), support, d.clone(), nonfree).unwrap();
        if comps.iter().all(|&c| chi(&i, c) == ext(s, c)) {
            out.push(i);
        }
        return;
    }
    for x in lo..=hi {
        d[verts[k]] = x;
        fill(s, comps, verts, k + 1, lo, hi, nonfree, support, d, out);
    }
    d[verts[k]] = 0;
}

/// Small named graphs.
pub fn banana() -> DualGraph {
    DualGraph::rational(2, &[(0, 1), (0, 1)]).unwrap()
}

pub fn k4() -> DualGraph {
    DualGraph::rational(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}
