//! V-stability conditions and V-compactified Jacobians on dual graphs of
//! nodal curves.

pub mod corpus;
pub mod curve_graph;
pub mod error;
pub mod io;
pub mod limits;
pub mod polarization;
pub mod posets;
pub mod sheaves;
pub mod vstability;

pub use curve_graph::{Contraction, DualGraph, Edge, Embedding, SpanningTree, Subcurve};
pub use error::{Error, Result};
pub use limits::{esteves_limit, same_orbit, twist, BetaTable, LimitStep, LimitTrace, StepRule};
pub use polarization::{is_classical, NumericalPolarization, Rational};
pub use posets::{HasseDiagram, TranslationVector};
pub use sheaves::{EnumerateOptions, OrderedPartition, SheafData, SheafStability, Supports};
pub use vstability::{DegeneracySet, ValidationReport, VStability, Violation};
