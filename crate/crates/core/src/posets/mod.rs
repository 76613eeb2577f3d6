//! Posets of degeneracy subsets and of V-stabilities, the translation action
//! and orbit enumeration.

pub mod degeneracy;
pub mod hasse;
pub mod order;
pub mod scan;
pub mod translation;

pub use degeneracy::{
    canonical_degeneracy, check_witness, decompositions, deg_geq, deg_geq_witness,
    enumerate_degeneracy_subsets, from_minimal, minimal_elements, move_i, move_ii,
    permute_degeneracy, permute_subcurve, Dominance,
};
pub use hasse::{hasse, HasseDiagram};
pub use order::{lift, lift_with, up_set, vstab_geq};
pub use scan::{deg_poset, deg_poset_mod_symmetry, qdeg_scan, QDegReport};
pub use translation::{
    enumerate_orbits, enumerate_window, normal_form, orbit_equal, permute_stability, translate,
    window, TranslationVector,
};

#[cfg(test)]
mod tests;
