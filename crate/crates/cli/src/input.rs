//! Loading graphs, stabilities and sheaves from the command line.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use vstab::io::{parse, GraphJson, SheafJson, StabilityJson};
use vstab::{DualGraph, SheafData, Subcurve, VStability};

pub fn graph(spec: &str) -> Result<DualGraph> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        let g = match name {
            "point" => DualGraph::rational(1, &[]),
            "banana" => DualGraph::rational(2, &[(0, 1), (0, 1)]),
            "triangle" => DualGraph::rational(3, &[(0, 1), (1, 2), (0, 2)]),
            "k4" => DualGraph::rational(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
            _ => bail!(vstab::Error::Parse(format!("unknown builtin graph {name:?}"))),
        };
        return Ok(g?);
    }
    let json: GraphJson = read(Path::new(spec))?;
    Ok(json.to_graph()?)
}

pub fn stability(g: &DualGraph, path: &Path) -> Result<VStability> {
    let json: StabilityJson = read(path)?;
    Ok(json.to_stability(g)?)
}

pub fn sheaf(g: &DualGraph, path: &Path) -> Result<SheafData> {
    let json: SheafJson = read(path)?;
    Ok(json.to_sheaf(g)?)
}

fn read<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| vstab::Error::Parse(format!("{}: {e}", path.display())))?;
    parse(&text).with_context(|| format!("reading {}", path.display()))
}

pub fn integers(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| vstab::Error::Parse(format!("not an integer: {t:?}")).into())
        })
        .collect()
}

pub fn partition(g: &DualGraph, text: &str) -> Result<Vec<Subcurve>> {
    text.split(';')
        .map(|part| {
            let vs = integers(part)?;
            if let Some(&v) = vs.iter().find(|&&v| v < 0 || v as usize >= g.num_components()) {
                bail!(vstab::Error::Parse(format!("vertex {v} out of range")));
            }
            Ok(Subcurve::from_vertices(vs.into_iter().map(|v| v as usize)))
        })
        .collect()
}
