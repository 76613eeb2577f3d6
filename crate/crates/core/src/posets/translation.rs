//! Translation action of `ℤ^V` on V-stabilities, spanning-tree normal forms
//! and enumeration of orbit representatives.

use crate::curve_graph::{DualGraph, SpanningTree, Subcurve};
use crate::error::{Error, Result};
use crate::vstability::VStability;

/// An integer per component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TranslationVector(pub Vec<i64>);

impl TranslationVector {
    pub fn zero(n: usize) -> Self {
        TranslationVector(vec![0; n])
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn on(&self, y: Subcurve) -> i64 {
        y.vertices().map(|v| self.0[v]).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&t| t == 0)
    }
}

/// `(s + τ)_Y = s_Y + τ_Y` and `|s + τ| = |s| + |τ|`.
pub fn translate(s: &VStability, tau: &TranslationVector) -> Result<VStability> {
    if tau.0.len() != s.graph().num_components() {
        return Err(Error::DomainMismatch("translation has wrong length".into()));
    }
    let values = s.entries().map(|(y, v)| v + tau.on(y)).collect();
    VStability::new(s.graph().clone(), s.chi() + tau.total(), values)
}

/// The translate of `s` with `|s| = 0`, `s_{Y_e} = 0` and `s_{Y_e^c} ∈ {0, 1}` for every
/// edge `e` of the canonical spanning tree (`Y_e` the side containing vertex 0).
pub fn normal_form(s: &VStability) -> Result<(VStability, TranslationVector)> {
    s.degeneracy_set()?;
    let g = s.graph();
    let tree = g.canonical_spanning_tree();
    // τ(Y_e) = −s_{Y_e} and |τ| = −χ; so τ(subtree(child)) = −χ + s_{Y_e}.
    let n = g.num_components();
    let mut subtree_total = vec![0i64; n];
    subtree_total[0] = -s.chi();
    for (i, &(_, child)) in tree.edges().iter().enumerate() {
        let ye = tree.cut(i);
        let value = s.value(ye).expect("tree cuts are biconnected");
        subtree_total[child] = -s.chi() + value;
    }
    let mut tau = subtree_total.clone();
    for &(parent, child) in tree.edges() {
        tau[parent] -= subtree_total[child];
    }
    let tau = TranslationVector(tau);
    let t = translate(s, &tau)?;
    debug_assert!(is_normal(&t, &tree));
    Ok((t, tau))
}

fn is_normal(s: &VStability, tree: &SpanningTree) -> bool {
    s.chi() == 0
        && (0..tree.edges().len()).all(|i| {
            let ye = tree.cut(i);
            let yc = s.graph().complement(ye);
            s.value(ye) == Some(0) && matches!(s.value(yc), Some(0 | 1))
        })
}

/// Whether `s` and `t` differ by a translation.
pub fn orbit_equal(s: &VStability, t: &VStability) -> Result<bool> {
    if s.graph() != t.graph() {
        return Ok(false);
    }
    Ok(normal_form(s)?.0 == normal_form(t)?.0)
}

/// Image of `s` under a graph automorphism `perm` (vertex `v ↦ perm[v]`).
pub fn permute_stability(s: &VStability, perm: &[usize]) -> VStability {
    let g = s.graph();
    let values = g
        .biconnected_subcurves()
        .iter()
        .map(|&y| {
            let pre = Subcurve::from_vertices(y.vertices().map(|w| {
                perm.iter().position(|&p| p == w).expect("perm is a bijection")
            }));
            s.value(pre).expect("automorphisms preserve biconnectedness")
        })
        .collect();
    VStability::new(g.clone(), s.chi(), values).expect("same domain")
}

/// Window `[−val_T(Y) + 1, val_T(Y)]` for every biconnected subcurve.
pub fn window(g: &DualGraph) -> Vec<(i64, i64)> {
    let tree = g.canonical_spanning_tree();
    g.biconnected_subcurves()
        .iter()
        .map(|&y| {
            let v = tree.valence(y) as i64;
            (1 - v, v)
        })
        .collect()
}

/// Normal-form orbit representatives (χ = 0), one per translation orbit.
pub fn enumerate_orbits(g: &DualGraph) -> Vec<VStability> {
    let out = search_window(g, true);
    for s in &out {
        let (t, tau) = normal_form(s).expect("enumerated stabilities are valid");
        assert!(tau.is_zero() && &t == s, "normal form is not unique in its orbit");
    }
    out
}

/// Every valid stability with χ = 0 whose values lie in the spanning-tree window.
pub fn enumerate_window(g: &DualGraph) -> Vec<VStability> {
    search_window(g, false)
}

/// Depth-first search over complementary pairs ordered by tree valence, pruning with the
/// union rule as soon as all three members of an admissible pair are assigned.
fn search_window(g: &DualGraph, normal_only: bool) -> Vec<VStability> {
    let st = g.bcon_structure();
    let bcon = g.biconnected_subcurves();
    let tree = g.canonical_spanning_tree();
    let nb = bcon.len();
    let win = window(g);
    let root_side: Vec<bool> = bcon.iter().map(|y| y.contains(0)).collect();
    let mut pairs: Vec<(usize, usize)> = (0..nb)
        .filter(|&i| i < st.complement[i])
        .map(|i| (i, st.complement[i]))
        .collect();
    pairs.sort_by_key(|&(i, _)| (tree.valence(bcon[i]), i));
    let mut position = vec![0usize; nb];
    for (p, &(i, j)) in pairs.iter().enumerate() {
        position[i] = p;
        position[j] = p;
    }
    let mut checks: Vec<Vec<[usize; 3]>> = vec![Vec::new(); pairs.len()];
    for &c in &st.union_pairs {
        let p = c.iter().map(|&x| position[x]).max().unwrap();
        checks[p].push(c);
    }
    let mut values = vec![0i64; nb];
    let mut degenerate = vec![false; nb];
    let mut out = Vec::new();

    struct Ctx<'a> {
        g: &'a DualGraph,
        pairs: &'a [(usize, usize)],
        checks: &'a [Vec<[usize; 3]>],
        win: &'a [(i64, i64)],
        tree_cut: Vec<bool>,
        root_side: &'a [bool],
        normal_only: bool,
    }

    fn union_ok(values: &[i64], degenerate: &[bool], [i, j, u]: [usize; 3]) -> bool {
        let d = values[u] - values[i] - values[j];
        if degenerate[i] || degenerate[j] {
            d == 0
        } else if degenerate[u] {
            d == -1
        } else {
            d == 0 || d == -1
        }
    }

    fn go(
        ctx: &Ctx,
        p: usize,
        values: &mut Vec<i64>,
        degenerate: &mut Vec<bool>,
        out: &mut Vec<VStability>,
    ) {
        if p == ctx.pairs.len() {
            let s = VStability::new(ctx.g.clone(), 0, values.clone()).unwrap();
            if s.is_valid() {
                out.push(s);
            }
            return;
        }
        let (i, j) = ctx.pairs[p];
        let (lo, hi) = ctx.win[i];
        let (lo_c, hi_c) = ctx.win[j];
        for vi in lo..=hi {
            for excess in 0..=1 {
                let vj = excess - vi;
                if vj < lo_c || vj > hi_c {
                    continue;
                }
                if ctx.normal_only && ctx.tree_cut[i] {
                    // The root side of a tree cut is normalized to 0.
                    let root_value = if ctx.root_side[i] { vi } else { vj };
                    if root_value != 0 {
                        continue;
                    }
                }
                values[i] = vi;
                values[j] = vj;
                degenerate[i] = excess == 0;
                degenerate[j] = excess == 0;
                if ctx.checks[p].iter().all(|&c| union_ok(values, degenerate, c)) {
                    go(ctx, p + 1, values, degenerate, out);
                }
            }
        }
    }

    let tree_cut = bcon.iter().map(|&y| tree.valence(y) == 1).collect();
    let ctx = Ctx {
        g,
        pairs: &pairs,
        checks: &checks,
        win: &win,
        tree_cut,
        root_side: &root_side,
        normal_only,
    };
    go(&ctx, 0, &mut values, &mut degenerate, &mut out);
    out
}
