//! Numerical polarizations, the ceiling map to V-stabilities and detection
//! of classical stabilities.

pub mod fm;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::curve_graph::{DualGraph, Subcurve};
use crate::error::{Error, Result};
use crate::vstability::VStability;
pub use fm::{Constraint, Rational, Relation};

/// Additive rational function on subcurves, stored per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalPolarization {
    graph: DualGraph,
    chi: i64,
    psi: Vec<Rational>,
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn ceil_i64(q: &Rational) -> i64 {
    let c: BigInt = q.numer().div_ceil(q.denom());
    i64::try_from(c).expect("ceiling fits in i64")
}

impl NumericalPolarization {
    /// `psi` has one entry per component and must sum to an integer.
    pub fn new(graph: DualGraph, psi: Vec<Rational>) -> Result<Self> {
        if psi.len() != graph.num_components() {
            return Err(Error::InvalidPolarization(format!(
                "expected {} entries, got {}",
                graph.num_components(),
                psi.len()
            )));
        }
        let total: Rational = psi.iter().sum();
        if !total.is_integer() {
            return Err(Error::InvalidPolarization(format!("total {total} is not an integer")));
        }
        let chi = i64::try_from(total.to_integer())
            .map_err(|_| Error::InvalidPolarization("total out of range".into()))?;
        Ok(NumericalPolarization { graph, chi, psi })
    }

    /// `ψ_Y = deg(L|_Y) · χ / deg L` for a line bundle with the given multidegree.
    pub fn from_ample(graph: DualGraph, degrees: &[i64], chi: i64) -> Result<Self> {
        let total: i64 = degrees.iter().sum();
        if total <= 0 {
            return Err(Error::InvalidPolarization("total degree must be positive".into()));
        }
        let psi = degrees.iter().map(|&d| rational(d * chi, total)).collect();
        Self::new(graph, psi)
    }

    /// `ψ_Y = −μ(E|_Y)` from per-component slopes.
    pub fn from_slopes(graph: DualGraph, slopes: &[Rational]) -> Result<Self> {
        Self::new(graph, slopes.iter().map(|m| -m.clone()).collect())
    }

    /// Slopes of a vector bundle of the given rank and per-component degrees.
    pub fn from_vector_bundle(graph: DualGraph, rank: i64, degrees: &[i64]) -> Result<Self> {
        if rank <= 0 {
            return Err(Error::InvalidPolarization("rank must be positive".into()));
        }
        let slopes: Vec<Rational> = degrees.iter().map(|&d| rational(d, rank)).collect();
        Self::from_slopes(graph, &slopes)
    }

    pub fn graph(&self) -> &DualGraph {
        &self.graph
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn psi(&self) -> &[Rational] {
        &self.psi
    }

    pub fn value_on(&self, y: Subcurve) -> Rational {
        y.vertices().map(|v| &self.psi[v]).sum()
    }

    /// The stability `Y ↦ ⌈ψ_Y⌉`.
    pub fn induced_vstability(&self) -> VStability {
        let values = self
            .graph
            .biconnected_subcurves()
            .iter()
            .map(|&y| ceil_i64(&self.value_on(y)))
            .collect();
        VStability::new(self.graph.clone(), self.chi, values).expect("values indexed by BCon")
    }

    /// Biconnected subcurves on which `ψ` is integral.
    pub fn integral_subcurves(&self) -> Vec<Subcurve> {
        self.graph
            .biconnected_subcurves()
            .iter()
            .copied()
            .filter(|&y| self.value_on(y).is_integer())
            .collect()
    }

    pub fn translate(&self, tau: &[i64]) -> Result<Self> {
        if tau.len() != self.psi.len() {
            return Err(Error::DomainMismatch("translation has wrong length".into()));
        }
        let psi = self.psi.iter().zip(tau).map(|(p, &t)| p + integer(t)).collect();
        Self::new(self.graph.clone(), psi)
    }
}

/// The linear system whose solutions are exactly the `ψ` with `⌈ψ⌉ = s`.
pub fn classical_system(s: &VStability) -> Vec<Constraint> {
    let g = s.graph();
    let n = g.num_components();
    let indicator = |y: Subcurve| -> Vec<Rational> {
        (0..n).map(|v| if y.contains(v) { Rational::one() } else { Rational::zero() }).collect()
    };
    let neg = |c: Vec<Rational>| -> Vec<Rational> { c.into_iter().map(|a| -a).collect() };
    let mut out = vec![Constraint::new(indicator(g.full()), Relation::Eq, integer(s.chi()))];
    for (y, value) in s.entries() {
        if s.is_degenerate(y) {
            out.push(Constraint::new(indicator(y), Relation::Eq, integer(value)));
        } else {
            out.push(Constraint::new(indicator(y), Relation::Lt, integer(value)));
            out.push(Constraint::new(neg(indicator(y)), Relation::Lt, integer(1 - value)));
        }
    }
    out
}

/// A polarization inducing `s`, if one exists.
pub fn is_classical(s: &VStability) -> Result<Option<NumericalPolarization>> {
    s.degeneracy_set()?;
    let n = s.graph().num_components();
    let Some(psi) = fm::solve(n, &classical_system(s)) else {
        return Ok(None);
    };
    let p = NumericalPolarization::new(s.graph().clone(), psi)?;
    debug_assert_eq!(&p.induced_vstability(), s);
    Ok(Some(p))
}
