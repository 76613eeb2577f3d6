//! JSON interchange formats.
//!
//! Subcurves are sorted vertex lists; edges index into the sorted edge list of
//! the graph; rationals are `["num", "den"]` string pairs.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::curve_graph::{DualGraph, Subcurve};
use crate::error::{Error, Result};
use crate::limits::{LimitTrace, StepRule};
use crate::polarization::{NumericalPolarization, Rational};
use crate::posets::HasseDiagram;
use crate::sheaves::SheafData;
use crate::vstability::{DegeneracySet, VStability};

pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

pub fn vertices(y: Subcurve) -> Vec<usize> {
    y.vertices().collect()
}

fn subcurve(g: &DualGraph, vs: &[usize]) -> Result<Subcurve> {
    if let Some(&v) = vs.iter().find(|&&v| v >= g.num_components()) {
        return Err(Error::Parse(format!("vertex {v} out of range")));
    }
    Ok(Subcurve::from_vertices(vs.iter().copied()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub genera: Vec<u32>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &DualGraph) -> Self {
        GraphJson {
            genera: g.genera().to_vec(),
            edges: g.edges().iter().map(|e| [e.u, e.v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<DualGraph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        DualGraph::new(self.genera.clone(), &edges)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StabilityEntry {
    pub subcurve: Vec<usize>,
    pub s: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StabilityJson {
    pub chi: i64,
    pub values: Vec<StabilityEntry>,
}

impl StabilityJson {
    pub fn from_stability(s: &VStability) -> Self {
        StabilityJson {
            chi: s.chi(),
            values: s
                .entries()
                .map(|(y, v)| StabilityEntry { subcurve: vertices(y), s: v })
                .collect(),
        }
    }

    /// Entries must cover every biconnected subcurve exactly once; validity is not checked.
    pub fn to_stability(&self, g: &DualGraph) -> Result<VStability> {
        let pairs = self
            .values
            .iter()
            .map(|e| Ok((subcurve(g, &e.subcurve)?, e.s)))
            .collect::<Result<Vec<_>>>()?;
        VStability::from_pairs(g.clone(), self.chi, pairs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolarizationJson {
    pub chi: i64,
    pub psi: Vec<[String; 2]>,
}

impl PolarizationJson {
    pub fn from_polarization(p: &NumericalPolarization) -> Self {
        PolarizationJson {
            chi: p.chi(),
            psi: p.psi().iter().map(|q| [q.numer().to_string(), q.denom().to_string()]).collect(),
        }
    }

    pub fn to_polarization(&self, g: &DualGraph) -> Result<NumericalPolarization> {
        let psi = self
            .psi
            .iter()
            .map(|[n, d]| {
                let n = n.parse().map_err(|_| Error::Parse(format!("bad numerator {n:?}")))?;
                let d: num_bigint::BigInt =
                    d.parse().map_err(|_| Error::Parse(format!("bad denominator {d:?}")))?;
                if d == 0.into() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                Ok(Rational::new(n, d))
            })
            .collect::<Result<Vec<_>>>()?;
        let p = NumericalPolarization::new(g.clone(), psi)?;
        if p.chi() != self.chi {
            return Err(Error::InvalidPolarization(format!(
                "entries sum to {}, not {}",
                p.chi(),
                self.chi
            )));
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SheafJson {
    pub support: Vec<usize>,
    pub multidegree: BTreeMap<String, i64>,
    pub nonfree: Vec<usize>,
}

impl SheafJson {
    pub fn from_sheaf(i: &SheafData) -> Self {
        SheafJson {
            support: vertices(i.support()),
            multidegree: i.support().vertices().map(|v| (v.to_string(), i.degree(v))).collect(),
            nonfree: (0..64).filter(|e| i.nonfree() >> e & 1 == 1).collect(),
        }
    }

    pub fn to_sheaf(&self, g: &DualGraph) -> Result<SheafData> {
        let support = subcurve(g, &self.support)?;
        let mut degrees = vec![0; g.num_components()];
        for (k, &d) in &self.multidegree {
            let v: usize = k.parse().map_err(|_| Error::Parse(format!("bad vertex key {k:?}")))?;
            if !support.contains(v) {
                return Err(Error::InvalidSheaf(format!("degree given off the support at {v}")));
            }
            degrees[v] = d;
        }
        if let Some(v) = support.vertices().find(|v| !self.multidegree.contains_key(&v.to_string())) {
            return Err(Error::Parse(format!("missing degree for vertex {v}")));
        }
        let mut nonfree = 0u64;
        for &e in &self.nonfree {
            if e >= g.edges().len() {
                return Err(Error::Parse(format!("edge {e} out of range")));
            }
            nonfree |= 1 << e;
        }
        SheafData::new(g.clone(), support, degrees, nonfree)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    #[serde(rename = "Y")]
    pub y: Vec<usize>,
    pub beta_min: i64,
    pub d: Vec<i64>,
    pub rule: StepRule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub steps: Vec<StepJson>,
    pub result: Vec<i64>,
}

impl TraceJson {
    pub fn new(trace: &LimitTrace, result: &[i64]) -> Self {
        TraceJson {
            steps: trace
                .steps
                .iter()
                .map(|s| StepJson { y: vertices(s.y), beta_min: s.beta_min, d: s.d.clone(), rule: s.rule })
                .collect(),
            result: result.to_vec(),
        }
    }
}

/// A degeneracy set as a list of subcurves.
pub fn degeneracy_json(d: &DegeneracySet) -> Vec<Vec<usize>> {
    d.members().into_iter().map(vertices).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseJson<T> {
    pub elements: Vec<T>,
    pub covers: Vec<[usize; 2]>,
}

impl<T> HasseJson<T> {
    pub fn new<E>(h: &HasseDiagram<E>, f: impl Fn(&E) -> T) -> Self {
        HasseJson {
            elements: h.elements.iter().map(f).collect(),
            covers: h.covers.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}
