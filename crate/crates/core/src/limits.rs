//! Limits of line bundles along a regular one-parameter smoothing.
//!
//! Twisting the family by the Cartier divisor of a subcurve `Y` of the special
//! fiber changes the multidegree by `O(−Y)`: a component `v` meets `Y` in
//! `Y·X_v` points, which is `edges(v, Y)` for `v ∉ Y` and `−edges(v, Y^c)` for
//! `v ∈ Y`. So `twist(d, Y) = d + L·1_Y` with `L` the graph Laplacian, and twisting
//! by the whole fiber is the identity.
//!
//! The twisting-subcurve iteration does not always reach a semistable multidegree:
//! the union `Y` can grow to the whole curve (a trivial twist), or a few twists can
//! cycle. Since `min β` never decreases along the iteration, every visited multidegree
//! lies in a finite box, so a stall shows up as a repeated multidegree. From there
//! [`BetaTable::limit`] finishes with completion steps: the level sets of the shortest
//! twist vector reaching a semistable multidegree of the same orbit.

use std::collections::HashSet;
use std::sync::OnceLock;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::curve_graph::{DualGraph, Subcurve};
use crate::error::{Error, Result};
use crate::vstability::VStability;

/// `d_v += edges(v, Y^c)` for `v ∈ Y`, `d_v −= edges(v, Y)` for `v ∉ Y`.
pub fn twist(g: &DualGraph, d: &[i64], y: Subcurve) -> Vec<i64> {
    let yc = g.complement(y);
    (0..d.len())
        .map(|v| {
            if y.contains(v) {
                d[v] + g.edges_to(v, yc) as i64
            } else {
                d[v] - g.edges_to(v, y) as i64
            }
        })
        .collect()
}

/// `β(Z) = χ(L_Z) − s_Z` for the line bundle of multidegree `d`, with the extended V-function.
pub fn beta(d: &[i64], s: &VStability, z: Subcurve) -> Result<i64> {
    let g = s.graph();
    let chi_z: i64 = z.vertices().map(|v| d[v] + 1 - g.genera()[v] as i64).sum::<i64>()
        - g.internal_edges(z).len() as i64;
    Ok(chi_z - s.extended_value(z)?)
}

/// How a twisting subcurve was chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepRule {
    /// The twisting subcurve `Y(d, s)` of the iteration.
    Twisting,
    /// A level set of the twist vector towards a semistable multidegree, used after
    /// the iteration revisits a multidegree.
    Completion,
}

/// One twist of the limit algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitStep {
    /// The twisting subcurve.
    pub y: Subcurve,
    /// `min β` before the twist.
    pub beta_min: i64,
    /// Multidegree after the twist.
    pub d: Vec<i64>,
    pub rule: StepRule,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LimitTrace {
    pub steps: Vec<LimitStep>,
}

impl LimitTrace {
    /// Whether the iteration stalled and completion steps were needed.
    pub fn stalled(&self) -> bool {
        self.steps.iter().any(|s| s.rule == StepRule::Completion)
    }

    /// Steps of the twisting-subcurve iteration.
    pub fn twisting_steps(&self) -> usize {
        self.steps.iter().filter(|s| s.rule == StepRule::Twisting).count()
    }
}

/// β evaluated through tables indexed by subcurve mask.
pub struct BetaTable {
    s: VStability,
    n: usize,
    /// `χ(O_Z) − s_Z`, i.e. `β(Z)` for the zero multidegree; index 0 unused.
    offset: Vec<i64>,
    orbits: OnceLock<OrbitSolver>,
    semistable: OnceLock<Vec<Vec<i64>>>,
}

impl BetaTable {
    pub fn new(s: &VStability) -> Result<Self> {
        s.degeneracy_set()?;
        let g = s.graph();
        let n = g.num_components();
        let mut offset = vec![0; 1 << n];
        for (m, slot) in offset.iter_mut().enumerate().skip(1) {
            let z = Subcurve::from_mask(m as u32);
            let base: i64 = z.vertices().map(|v| 1 - g.genera()[v] as i64).sum::<i64>()
                - g.internal_edges(z).len() as i64;
            *slot = base - s.extended_value(z)?;
        }
        Ok(BetaTable { s: s.clone(), n, offset, orbits: OnceLock::new(), semistable: OnceLock::new() })
    }

    pub fn stability(&self) -> &VStability {
        &self.s
    }

    pub fn beta(&self, d: &[i64], z: Subcurve) -> i64 {
        self.offset[z.mask() as usize] + z.vertices().map(|v| d[v]).sum::<i64>()
    }

    /// All β values by mask (index 0 set to `i64::MAX`).
    fn all(&self, d: &[i64]) -> Vec<i64> {
        let mut out = vec![i64::MAX; 1 << self.n];
        let mut sums = vec![0i64; 1 << self.n];
        for m in 1..1usize << self.n {
            let low = m.trailing_zeros() as usize;
            sums[m] = sums[m & (m - 1)] + d[low];
            out[m] = self.offset[m] + sums[m];
        }
        out
    }

    /// Whether `Σd` matches `|s|`, i.e. `β(X) = 0`.
    pub fn has_matching_degree(&self, d: &[i64]) -> bool {
        self.beta(d, Subcurve::full(self.n)) == 0
    }

    /// `β ≥ 0` on every biconnected subcurve (and `β(X) = 0`).
    pub fn is_semistable(&self, d: &[i64]) -> bool {
        self.has_matching_degree(d)
            && self.s.graph().biconnected_subcurves().iter().all(|&z| self.beta(d, z) >= 0)
    }

    fn check(&self, d: &[i64]) -> Result<()> {
        if d.len() != self.n {
            return Err(Error::DomainMismatch(format!("expected {} degrees", self.n)));
        }
        if !self.has_matching_degree(d) {
            return Err(Error::DomainMismatch(
                "total degree does not match the characteristic".into(),
            ));
        }
        Ok(())
    }

    /// Minimum of β over nonempty subcurves and, among the minimizers not contained in
    /// `avoid`, the inclusion-maximal one with the lowest mask.
    fn minimizer(&self, betas: &[i64], avoid: Subcurve) -> (i64, Option<Subcurve>) {
        let min = betas.iter().copied().min().expect("at least one subcurve");
        let candidates: Vec<u32> = (1..betas.len() as u32)
            .filter(|&m| betas[m as usize] == min && m & !avoid.mask() != 0)
            .collect();
        let pick = candidates
            .iter()
            .copied()
            .find(|&m| !candidates.iter().any(|&o| o != m && m & o == m))
            .map(Subcurve::from_mask);
        (min, pick)
    }

    /// The twisting subcurve `Y(d, s)` together with `min β` and the first maximal
    /// minimizer `Y_0`.
    pub fn twisting_subcurve(&self, d: &[i64]) -> Result<(Subcurve, Subcurve, i64)> {
        self.check(d)?;
        let g = self.s.graph();
        let (m0, y0) = self.minimizer(&self.all(d), Subcurve::EMPTY);
        let y0 = y0.expect("the minimum is attained");
        let mut y = y0;
        loop {
            let dk = twist(g, d, y);
            let (mk, w) = self.minimizer(&self.all(&dk), y);
            match w {
                Some(w) if mk <= m0 => y = y.join(w),
                _ => break,
            }
        }
        debug_assert!(self.twist_inequality_holds(d, y, m0));
        Ok((y, y0, m0))
    }

    /// After twisting by `y`, `β ≥ m0` everywhere with equality only inside `y`.
    pub fn twist_inequality_holds(&self, d: &[i64], y: Subcurve, m0: i64) -> bool {
        let after = self.all(&twist(self.s.graph(), d, y));
        (1..after.len()).all(|m| {
            after[m] > m0 || (after[m] == m0 && Subcurve::from_mask(m as u32).is_subset_of(y))
        })
    }

    /// Bound on the twisting steps of [`BetaTable::limit`]: the number of multidegrees of
    /// the same total with `β ≥ min β(d)` on every singleton and every complement of a
    /// singleton. The iteration never lowers `min β` and stops at the first repeated
    /// multidegree, so it stays in this box and visits each point at most once.
    pub fn step_bound(&self, d: &[i64]) -> usize {
        let m0 = self.all(d).into_iter().min().unwrap_or(0);
        let full = (1usize << self.n) - 1;
        let total: i64 = d.iter().sum();
        let mut count: usize = 1;
        // With the total fixed, the last degree is determined by the others.
        for v in 0..self.n.saturating_sub(1) {
            let lo = m0 - self.offset[1 << v];
            let hi = self.offset[full & !(1 << v)] + total - m0;
            count = count.saturating_mul((hi - lo + 1).max(1) as usize);
        }
        count
    }

    /// The semistable multidegree of the orbit of `d` nearest to `d`, with the
    /// twist vector reaching it (minimum 0, smallest maximum, then smallest sum).
    fn nearest_semistable(&self, d: &[i64]) -> Option<(Vec<i64>, Vec<i64>)> {
        let solver = self.orbits.get_or_init(|| OrbitSolver::new(self.s.graph()));
        let targets = self.semistable.get_or_init(|| self.semistable_multidegrees());
        targets
            .iter()
            .filter_map(|e| solver.solve(d, e).map(|tau| (e.clone(), tau)))
            .min_by_key(|(e, tau)| (tau.iter().max().copied(), tau.iter().sum::<i64>(), e.clone()))
    }

    /// Twists by the twisting subcurve until `β ≥ 0` on every biconnected subcurve,
    /// switching to completion steps if a multidegree repeats.
    pub fn limit(&self, d0: &[i64]) -> Result<(Vec<i64>, LimitTrace)> {
        self.check(d0)?;
        let bound = self.step_bound(d0);
        let g = self.s.graph();
        let mut d = d0.to_vec();
        let mut trace = LimitTrace::default();
        let mut seen = HashSet::from([d.clone()]);
        while !self.is_semistable(&d) {
            if trace.steps.len() >= bound {
                return Err(Error::NonTermination(bound));
            }
            let (y, _, m0) = self.twisting_subcurve(&d)?;
            let next = twist(g, &d, y);
            if !seen.insert(next.clone()) {
                return self.complete(d, trace);
            }
            d = next;
            trace.steps.push(LimitStep { y, beta_min: m0, d: d.clone(), rule: StepRule::Twisting });
        }
        Ok((d, trace))
    }

    fn complete(&self, mut d: Vec<i64>, mut trace: LimitTrace) -> Result<(Vec<i64>, LimitTrace)> {
        let g = self.s.graph();
        // Every orbit of matching degree contains a semistable multidegree.
        let (target, tau) = self.nearest_semistable(&d).ok_or(Error::NonTermination(trace.steps.len()))?;
        for k in 1..=tau.iter().copied().max().unwrap_or(0) {
            let y = Subcurve::from_vertices((0..self.n).filter(|&v| tau[v] >= k));
            let m0 = self.all(&d).into_iter().min().unwrap_or(0);
            d = twist(g, &d, y);
            trace.steps.push(LimitStep { y, beta_min: m0, d: d.clone(), rule: StepRule::Completion });
        }
        debug_assert_eq!(d, target);
        Ok((d, trace))
    }

    /// Semistable multidegrees with total matching `|s|`.
    pub fn semistable_multidegrees(&self) -> Vec<Vec<i64>> {
        let g = self.s.graph();
        let n = self.n;
        // χ(L_v) ≥ s_v and χ(L_{X−v}) ≥ s_{X−v} bound each degree.
        let full = g.full();
        let mut bounds = Vec::with_capacity(n);
        let mut zero = vec![0i64; n];
        for v in 0..n {
            let single = Subcurve::singleton(v);
            let lo = -self.beta(&zero, single);
            let rest = full.minus(single);
            let hi = if rest.is_empty() {
                lo
            } else {
                // β(X) = 0 gives d_v = −offset(X) − Σ_{w≠v} d_w and β(rest) ≥ 0.
                -self.offset[full.mask() as usize] + self.offset[rest.mask() as usize]
            };
            bounds.push((lo, hi));
        }
        let mut out = Vec::new();
        fn go(
            t: &BetaTable,
            v: usize,
            bounds: &[(i64, i64)],
            d: &mut Vec<i64>,
            out: &mut Vec<Vec<i64>>,
        ) {
            if v == d.len() {
                if t.is_semistable(d) {
                    out.push(d.clone());
                }
                return;
            }
            for x in bounds[v].0..=bounds[v].1 {
                d[v] = x;
                go(t, v + 1, bounds, d, out);
            }
        }
        go(self, 0, &bounds, &mut zero, &mut out);
        out
    }
}

pub fn twisting_subcurve(d: &[i64], s: &VStability) -> Result<Subcurve> {
    Ok(BetaTable::new(s)?.twisting_subcurve(d)?.0)
}

/// The semistable limit of the line bundle with multidegree `d0`, with its trace.
pub fn esteves_limit(d0: &[i64], s: &VStability) -> Result<(Vec<i64>, LimitTrace)> {
    BetaTable::new(s)?.limit(d0)
}

/// Smith normal form `U·A·V = D` with `U`, `V` unimodular and `D` diagonal, each
/// diagonal entry dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: Vec<Vec<i64>>,
    pub d: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
}

impl SmithForm {
    /// Nonzero diagonal entries (all positive).
    pub fn invariants(&self) -> Vec<i64> {
        (0..self.d.len().min(self.d.first().map_or(0, Vec::len)))
            .map(|i| self.d[i][i])
            .filter(|&x| x != 0)
            .collect()
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn smith_normal_form(a: &[Vec<i64>]) -> SmithForm {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut d: Vec<Vec<i64>> = a.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);

    // Row operation r_i ← r_i − q r_j on d and u; column operation c_i ← c_i − q c_j on d and v.
    fn row_op(m: &mut [Vec<i64>], i: usize, j: usize, q: i64) {
        for k in 0..m[i].len() {
            m[i][k] -= q * m[j][k];
        }
    }
    fn col_op(m: &mut [Vec<i64>], i: usize, j: usize, q: i64) {
        for row in m.iter_mut() {
            row[i] -= q * row[j];
        }
    }
    fn swap_cols(m: &mut [Vec<i64>], i: usize, j: usize) {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
    }

    for t in 0..rows.min(cols) {
        loop {
            // Pivot: smallest nonzero absolute value in the remaining block.
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| d[i][j] != 0)
                .min_by_key(|&(i, j)| d[i][j].abs());
            let Some((pi, pj)) = pivot else {
                return finish(u, d, v);
            };
            d.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);
            let p = d[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = Integer::div_floor(&d[i][t], &p);
                row_op(&mut d, i, t, q);
                row_op(&mut u, i, t, q);
                clean &= d[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = Integer::div_floor(&d[t][j], &p);
                col_op(&mut d, j, t, q);
                col_op(&mut v, j, t, q);
                clean &= d[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // Divisibility: fold any offending entry into row t and repeat.
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| d[i][j] % p != 0);
            match bad {
                Some((i, _)) => {
                    row_op(&mut d, t, i, -1);
                    row_op(&mut u, t, i, -1);
                }
                None => break,
            }
        }
        if d[t][t] < 0 {
            d[t].iter_mut().for_each(|x| *x = -*x);
            u[t].iter_mut().for_each(|x| *x = -*x);
        }
    }
    finish(u, d, v)
}

fn finish(u: Vec<Vec<i64>>, d: Vec<Vec<i64>>, v: Vec<Vec<i64>>) -> SmithForm {
    SmithForm { u, d, v }
}

/// Solves `L·τ = b` over the integers through a cached Smith normal form of the Laplacian.
struct OrbitSolver {
    snf: SmithForm,
}

impl OrbitSolver {
    fn new(g: &DualGraph) -> Self {
        OrbitSolver { snf: smith_normal_form(&g.laplacian()) }
    }

    /// `τ` with `d2 = d1 + L·τ`, normalized to minimum 0.
    fn solve(&self, d1: &[i64], d2: &[i64]) -> Option<Vec<i64>> {
        let n = d1.len();
        if d2.len() != n || d1.iter().sum::<i64>() != d2.iter().sum::<i64>() {
            return None;
        }
        let snf = &self.snf;
        let b: Vec<i64> = (0..n).map(|i| d2[i] - d1[i]).collect();
        // L τ = b  ⇔  D (V⁻¹ τ) = U b.
        let ub: Vec<i64> = (0..n).map(|i| (0..n).map(|k| snf.u[i][k] * b[k]).sum()).collect();
        let mut y = vec![0i64; n];
        for i in 0..n {
            let di = snf.d[i][i];
            if di == 0 {
                if ub[i] != 0 {
                    return None;
                }
            } else if ub[i] % di != 0 {
                return None;
            } else {
                y[i] = ub[i] / di;
            }
        }
        let tau: Vec<i64> = (0..n).map(|i| (0..n).map(|k| snf.v[i][k] * y[k]).sum()).collect();
        let min = tau.iter().copied().min().unwrap_or(0);
        Some(tau.into_iter().map(|t| t - min).collect())
    }
}

/// Whether `d2 = d1 + L·τ` for an integer `τ`, returning `τ` normalized to minimum 0.
pub fn same_orbit(g: &DualGraph, d1: &[i64], d2: &[i64]) -> Option<Vec<i64>> {
    if d1.len() != g.num_components() {
        return None;
    }
    OrbitSolver::new(g).solve(d1, d2)
}

/// Applies the twist multiplicities `τ`: `d + L·τ`.
pub fn apply_twists(g: &DualGraph, d: &[i64], tau: &[i64]) -> Vec<i64> {
    let l = g.laplacian();
    (0..d.len()).map(|i| d[i] + (0..d.len()).map(|k| l[i][k] * tau[k]).sum::<i64>()).collect()
}
