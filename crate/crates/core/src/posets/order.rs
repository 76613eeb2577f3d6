//! The order on V-stabilities and the lift along the degeneracy map.

use crate::error::{Error, Result};
use crate::posets::degeneracy::deg_geq_witness;
use crate::vstability::{DegeneracySet, VStability};

/// `s ≥ t`: same characteristic and `s_Y ≥ t_Y` on every biconnected subcurve.
pub fn vstab_geq(s: &VStability, t: &VStability) -> bool {
    s.graph() == t.graph()
        && s.chi() == t.chi()
        && s.values().iter().zip(t.values()).all(|(a, b)| a >= b)
}

/// Raises `s2` by one on the members of `e`.
pub fn lift_with(s2: &VStability, e: &DegeneracySet) -> Result<VStability> {
    let values = s2
        .values()
        .iter()
        .enumerate()
        .map(|(i, &v)| if e.contains_index(i) { v + 1 } else { v })
        .collect();
    s2.with_values(values)
}

/// Given `D1 ≥ D2 = D(s2)`, a stability `s1 ≥ s2` with `D(s1) = D1`.
pub fn lift(d1: &DegeneracySet, d2: &DegeneracySet, s2: &VStability) -> Result<VStability> {
    if &s2.degeneracy_set()? != d2 {
        return Err(Error::DomainMismatch("degeneracy set of s2 differs from D2".into()));
    }
    let dom = deg_geq_witness(d1, d2).ok_or(Error::LiftImpossible)?;
    let s1 = lift_with(s2, &dom.witness)?;
    if !s1.is_valid() || &s1.degeneracy_set_unchecked() != d1 {
        return Err(Error::LiftImpossible);
    }
    Ok(s1)
}

/// Every valid `t ≥ s`. Such `t` agree with `s` off `D(s)`, and on each degenerate pair
/// `{Y, Y^c}` at most one of the two values goes up, by one.
pub fn up_set(s: &VStability) -> Result<Vec<VStability>> {
    let d = s.degeneracy_set()?;
    let st = s.graph().bcon_structure();
    let pairs: Vec<(usize, usize)> =
        d.indices().filter(|&i| i < st.complement[i]).map(|i| (i, st.complement[i])).collect();
    let mut out = Vec::new();
    let mut choice = vec![0u8; pairs.len()];
    loop {
        let mut values = s.values().to_vec();
        for (&(i, j), &c) in pairs.iter().zip(&choice) {
            match c {
                1 => values[i] += 1,
                2 => values[j] += 1,
                _ => {}
            }
        }
        let t = s.with_values(values)?;
        if t.is_valid() {
            out.push(t);
        }
        let mut k = 0;
        while k < choice.len() && choice[k] == 2 {
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            break;
        }
        choice[k] += 1;
    }
    Ok(out)
}
