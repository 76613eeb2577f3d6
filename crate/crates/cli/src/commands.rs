//! Subcommand implementations. Each returns the rendered output and a verdict;
//! a false verdict maps to exit code 1.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write;

use anyhow::{bail, Result};
use num_integer::Integer;
use rayon::prelude::*;
use serde_json::{json, Value};
use vstab::corpus::connected_multigraphs;
use vstab::io::{
    degeneracy_json, to_string, vertices, GraphJson, HasseJson, PolarizationJson, SheafJson,
    StabilityJson, TraceJson,
};
use vstab::posets::{
    canonical_degeneracy, deg_poset, deg_poset_mod_symmetry, enumerate_degeneracy_subsets,
    enumerate_orbits, enumerate_window, hasse, minimal_elements, normal_form, permute_stability,
    qdeg_scan, translate, up_set, vstab_geq,
};
use vstab::sheaves::{gr_specialize, EnumerateOptions, SheafStability, Supports};
use vstab::{
    esteves_limit, is_classical, DegeneracySet, Error, HasseDiagram, OrderedPartition,
    SheafData, StepRule, Subcurve, TranslationVector, VStability,
};

use crate::{input, Command, Format, PosetKind, RunConfig};

pub struct Output {
    pub text: String,
    pub verdict: bool,
}

fn ok(text: String) -> Result<Output> {
    Ok(Output { text, verdict: true })
}

/// 1 for domain verdicts raised as errors, 2 for bad input.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(
            Error::InvalidStability(_)
            | Error::NotDegenerate
            | Error::MoveNotApplicable(_)
            | Error::LiftImpossible
            | Error::NotAPartialOrder(_)
            | Error::NotSemistable
            | Error::NotPolystable
            | Error::NonTermination(_),
        ) => 1,
        _ => 2,
    }
}

fn json_text(v: &impl serde::Serialize) -> String {
    let mut s = to_string(v);
    s.push('\n');
    s
}

fn fmt_subcurve(y: Subcurve) -> String {
    let vs: Vec<String> = y.vertices().map(|v| v.to_string()).collect();
    format!("{{{}}}", vs.join(","))
}

fn fmt_stability(s: &VStability) -> String {
    let parts: Vec<String> =
        s.entries().map(|(y, v)| format!("{}={v}", fmt_subcurve(y))).collect();
    format!("chi={} {}", s.chi(), parts.join(" "))
}

fn fmt_degeneracy(d: &DegeneracySet) -> String {
    let mins = minimal_elements(d);
    if mins.is_empty() {
        "∅".to_string()
    } else {
        mins.into_iter().map(fmt_subcurve).collect::<Vec<_>>().join(" ")
    }
}

fn fmt_sheaf(i: &SheafData) -> String {
    let degrees: Vec<String> =
        i.support().vertices().map(|v| format!("{v}:{}", i.degree(v))).collect();
    let nonfree: Vec<String> =
        (0..64).filter(|e| i.nonfree() >> e & 1 == 1).map(|e| e.to_string()).collect();
    format!(
        "support={} degrees=[{}] nonfree=[{}]",
        fmt_subcurve(i.support()),
        degrees.join(" "),
        nonfree.join(",")
    )
}

fn no_dot(cfg: &RunConfig) -> Result<()> {
    if cfg.format == Format::Dot {
        bail!(Error::Parse("dot output is only available for `poset`".into()));
    }
    Ok(())
}

pub fn run(cmd: &Command, cfg: &RunConfig) -> Result<Output> {
    match cmd {
        Command::Validate { graph, stability } => {
            no_dot(cfg)?;
            let g = input::graph(&graph.graph)?;
            let s = input::stability(&g, stability)?;
            let report = s.validate();
            let messages: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
            let text = match cfg.format {
                Format::Table if report.is_ok() => "valid\n".to_string(),
                Format::Table => messages.iter().map(|m| format!("{m}\n")).collect(),
                _ => json_text(&json!({ "valid": report.is_ok(), "violations": messages })),
            };
            Ok(Output { text, verdict: report.is_ok() })
        }
        Command::EnumOrbits { graph, chi } => {
            no_dot(cfg)?;
            let g = input::graph(&graph.graph)?;
            let mut shift = TranslationVector::zero(g.num_components());
            shift.0[0] = *chi;
            let reps = enumerate_orbits(&g)
                .iter()
                .map(|s| translate(s, &shift))
                .collect::<vstab::Result<Vec<_>>>()?;
            ok(match cfg.format {
                Format::Table => reps.iter().map(|s| format!("{}\n", fmt_stability(s))).collect(),
                _ => json_text(&reps.iter().map(StabilityJson::from_stability).collect::<Vec<_>>()),
            })
        }
        Command::EnumDeg { graph, mod_symmetry } => {
            no_dot(cfg)?;
            let g = input::graph(&graph.graph)?;
            let mut sets = enumerate_degeneracy_subsets(&g);
            if *mod_symmetry {
                let autos = g.automorphisms();
                let mut seen = HashSet::new();
                sets = sets
                    .iter()
                    .map(|d| canonical_degeneracy(d, &autos))
                    .filter(|d| seen.insert(d.clone()))
                    .collect();
            }
            ok(match cfg.format {
                Format::Table => sets.iter().map(|d| format!("{}\n", fmt_degeneracy(d))).collect(),
                _ => json_text(
                    &sets
                        .iter()
                        .map(|d| {
                            json!({
                                "members": degeneracy_json(d),
                                "minimal": minimal_elements(d).into_iter().map(vertices).collect::<Vec<_>>(),
                            })
                        })
                        .collect::<Vec<_>>(),
                ),
            })
        }
        Command::Poset { graph, kind, mod_symmetry, stability } => {
            let g = input::graph(&graph.graph)?;
            match kind {
                PosetKind::Deg => {
                    let mut h = deg_poset(&g)?;
                    if *mod_symmetry {
                        h = deg_poset_mod_symmetry(&h, &g.automorphisms());
                    }
                    ok(render_hasse(cfg, &h, fmt_degeneracy, |d| {
                        json!(minimal_elements(d).into_iter().map(vertices).collect::<Vec<_>>())
                    }))
                }
                PosetKind::Vstab => {
                    let elements = match stability {
                        Some(path) => up_set(&input::stability(&g, path)?)?,
                        None => enumerate_window(&g),
                    };
                    let mut h = hasse(elements, |a, b| vstab_geq(b, a))?;
                    if *mod_symmetry {
                        h = quotient_stabilities(&h, &g.automorphisms());
                    }
                    ok(render_hasse(cfg, &h, fmt_stability, |s| {
                        serde_json::to_value(StabilityJson::from_stability(s)).expect("serializable")
                    }))
                }
            }
        }
        Command::Classical { graph, stability } => {
            no_dot(cfg)?;
            let g = input::graph(&graph.graph)?;
            let s = input::stability(&g, stability)?;
            let verdict = is_classical(&s)?;
            let text = match (&verdict, cfg.format) {
                (None, Format::Table) => "not classical\n".to_string(),
                (None, _) => json_text(&json!({ "classical": false })),
                (Some(p), format) => {
                    let denominator = p
                        .psi()
                        .iter()
                        .fold(num_bigint::BigInt::from(1), |acc, q| acc.lcm(q.denom()));
                    let within = denominator <= num_bigint::BigInt::from(cfg.denominator_bound);
                    if format == Format::Table {
                        let psi: Vec<String> = p.psi().iter().map(|q| q.to_string()).collect();
                        format!("classical psi=[{}] denominator={denominator}\n", psi.join(" "))
                    } else {
                        json_text(&json!({
                            "classical": true,
                            "polarization": PolarizationJson::from_polarization(p),
                            "denominator": denominator.to_string(),
                            "within_bound": within,
                        }))
                    }
                }
            };
            Ok(Output { text, verdict: verdict.is_some() })
        }
        Command::Semistable { graph, stability, sheaf, all_supports } => {
            no_dot(cfg)?;
            let g = input::graph(&graph.graph)?;
            let s = input::stability(&g, stability)?;
            let st = SheafStability::new(&s)?;
            match sheaf {
                Some(path) => {
                    let i = input::sheaf(&g, path)?;
                    let semi = st.is_semistable(&i)?;
                    let poly = st.is_polystable(&i)?;
                    let stable = st.is_stable(&i)?;
                    let text = match cfg.format {
                        Format::Table => format!(
                            "semistable={semi} polystable={poly} stable={stable} chi={} aut_rank={}\n",
                            i.euler_char(),
                            i.aut_rank()
                        ),
                        _ => json_text(&json!({
                            "semistable": semi,
                            "polystable": poly,
                            "stable": stable,
                            "euler_char": i.euler_char(),
                            "aut_rank": i.aut_rank(),
                        })),
                    };
                    Ok(Output { text, verdict: semi })
                }
                None => {
                    let opts = EnumerateOptions {
                        supports: if *all_supports { Supports::All } else { Supports::Full },
                        degree_window: cfg.window.map(|w| (-(w as i64), w as i64)),
                    };
                    let found = st.enumerate_semistable(&opts);
                    ok(match cfg.format {
                        Format::Table => found.iter().map(|i| format!("{}\n", fmt_sheaf(i))).collect(),
                        _ => json_text(&found.iter().map(SheafJson::from_sheaf).collect::<Vec<_>>()),
                    })
                }
            }
        }
        Command::Limit { graph, stability, multidegree } => {
            no_dot(cfg)?;
            let g = input::graph(&graph.graph)?;
            let s = input::stability(&g, stability)?;
            let d0 = input::integers(multidegree)?;
            let (d, trace) = esteves_limit(&d0, &s)?;
            ok(match cfg.format {
                Format::Table => {
                    let mut t = String::new();
                    for step in &trace.steps {
                        let rule = match step.rule {
                            StepRule::Twisting => "twist",
                            StepRule::Completion => "complete",
                        };
                        writeln!(
                            t,
                            "{rule} {} beta_min={} d={:?}",
                            fmt_subcurve(step.y),
                            step.beta_min,
                            step.d
                        )
                        .unwrap();
                    }
                    writeln!(t, "result {d:?}").unwrap();
                    t
                }
                _ => json_text(&TraceJson::new(&trace, &d)),
            })
        }
        Command::Specialize { graph, sheaf, partition, stability } => {
            no_dot(cfg)?;
            let g = input::graph(&graph.graph)?;
            let i = input::sheaf(&g, sheaf)?;
            let out = match (partition, stability) {
                (Some(p), _) => gr_specialize(&i, &OrderedPartition::new(input::partition(&g, p)?)?)?,
                (None, Some(path)) => {
                    SheafStability::new(&input::stability(&g, path)?)?.polystable_limit(&i)?
                }
                (None, None) => {
                    bail!(Error::Parse("specialize needs --partition or --stability".into()))
                }
            };
            ok(match cfg.format {
                Format::Table => format!("{}\n", fmt_sheaf(&out)),
                _ => json_text(&SheafJson::from_sheaf(&out)),
            })
        }
        Command::NormalForm { graph, stability } => {
            no_dot(cfg)?;
            let g = input::graph(&graph.graph)?;
            let s = input::stability(&g, stability)?;
            let (t, tau) = normal_form(&s)?;
            ok(match cfg.format {
                Format::Table => format!("{}\ntau={:?}\n", fmt_stability(&t), tau.0),
                _ => json_text(&json!({
                    "normal_form": StabilityJson::from_stability(&t),
                    "tau": tau.0,
                })),
            })
        }
        Command::QdegScan { graph } => {
            no_dot(cfg)?;
            let graphs = match graph {
                Some(spec) => vec![input::graph(spec)?],
                None => connected_multigraphs(cfg.max_vertices as usize, cfg.max_edges as usize),
            };
            let reports: Vec<_> = graphs.par_iter().map(qdeg_scan).collect();
            ok(match cfg.format {
                Format::Table => {
                    let mut t = String::from("vertices edges deg_subsets orbits ranked rank surjective\n");
                    for r in &reports {
                        writeln!(
                            t,
                            "{} {} {} {} {} {} {}",
                            r.num_components,
                            r.num_edges,
                            r.num_degeneracy_subsets,
                            r.num_orbits,
                            r.ranked,
                            r.rank.map_or("-".to_string(), |x| x.to_string()),
                            r.surjective
                        )
                        .unwrap();
                    }
                    t
                }
                _ => json_text(
                    &graphs
                        .iter()
                        .zip(&reports)
                        .map(|(g, r)| json!({ "graph": GraphJson::from_graph(g), "report": r }))
                        .collect::<Vec<_>>(),
                ),
            })
        }
    }
}

fn render_hasse<T>(
    cfg: &RunConfig,
    h: &HasseDiagram<T>,
    label: impl Fn(&T) -> String,
    element: impl Fn(&T) -> Value,
) -> String {
    match cfg.format {
        Format::Dot => h.to_dot(label),
        Format::Table => {
            let mut t = String::new();
            for (i, e) in h.elements.iter().enumerate() {
                writeln!(t, "{i}: {}", label(e)).unwrap();
            }
            for (a, b) in &h.covers {
                writeln!(t, "{a} < {b}").unwrap();
            }
            t
        }
        Format::Json => json_text(&HasseJson::new(h, element)),
    }
}

/// Classes of stabilities under graph automorphisms; covers are images of element covers.
fn quotient_stabilities(h: &HasseDiagram<VStability>, autos: &[Vec<usize>]) -> HasseDiagram<VStability> {
    let mut classes: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    let mut reps = Vec::new();
    let class_of: Vec<usize> = h
        .elements
        .iter()
        .map(|s| {
            let canon = autos
                .iter()
                .map(|p| permute_stability(s, p))
                .min_by(|a, b| a.values().cmp(b.values()))
                .expect("identity automorphism");
            *classes.entry(canon.values().to_vec()).or_insert_with(|| {
                reps.push(canon);
                reps.len() - 1
            })
        })
        .collect();
    let mut covers: Vec<(usize, usize)> = h
        .covers
        .iter()
        .map(|&(a, b)| (class_of[a], class_of[b]))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    covers.sort_unstable();
    HasseDiagram { elements: reps, covers }
}
