//! Fixture graphs shared by the benchmarks.

use vstab::DualGraph;

pub fn k4() -> DualGraph {
    DualGraph::rational(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

pub fn banana() -> DualGraph {
    DualGraph::rational(2, &[(0, 1), (0, 1)]).unwrap()
}

/// A 5-cycle with one doubled edge.
pub fn cycle5() -> DualGraph {
    DualGraph::rational(5, &[(0, 1), (0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap()
}
