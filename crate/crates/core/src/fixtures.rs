//! Small named inputs used across the examples, tests and the verification suites.

use crate::ferrers::ShiftedDiagram;
use crate::graph::BipartiteGraph;
use crate::monomial::MonomialIdeal;

fn build(texts: &[&str], n: usize) -> MonomialIdeal {
    MonomialIdeal::new(n, texts.iter().map(|t| crate::monomial::mono(t, n)))
        .expect("fixture is well formed")
}

/// `(x^3, x^2 y^2, y^4)` in two variables.
pub fn two_variable() -> MonomialIdeal {
    build(&["x1^3", "x1^2*x2^2", "x2^4"], 2)
}

/// Strongly stable closure of `x2 x3 x4` and `x1 x3 x4` in degree 3; 14 generators.
pub fn borel_cube() -> MonomialIdeal {
    build(
        &[
            "x1^3", "x1^2*x2", "x1*x2^2", "x2^3", "x1^2*x3", "x1*x2*x3", "x2^2*x3", "x1*x3^2",
            "x2*x3^2", "x1^2*x4", "x1*x2*x4", "x2^2*x4", "x1*x3*x4", "x2*x3*x4",
        ],
        4,
    )
}

/// A stable, not strongly stable, cubic ideal with 12 generators.
pub fn stable_not_strongly() -> MonomialIdeal {
    build(
        &[
            "x1^3", "x1^2*x2", "x1*x2^2", "x2^3", "x1^2*x3", "x1*x2*x3", "x2^2*x3", "x1*x3^2",
            "x2*x3^2", "x3^3", "x1*x2*x4", "x3^2*x4",
        ],
        4,
    )
}

/// The diagram `lambda = (6,5,4,7)`, `mu = (1,3,2,3)`; connected, not westward.
pub fn quasi_diagram() -> ShiftedDiagram {
    ShiftedDiagram::new(vec![6, 5, 4, 7], vec![1, 3, 2, 3]).expect("valid shape")
}

/// The four-point diagram `lambda = (3,3)`, `mu = (1,1)`: compatible but not stable.
pub fn compatible_square() -> ShiftedDiagram {
    ShiftedDiagram::new(vec![3, 3], vec![1, 1]).expect("valid shape")
}

/// Bound `(3,4,2)` that goes with [`compatible_square`].
pub fn compatible_square_bound() -> Vec<u32> {
    vec![3, 4, 2]
}

/// `lambda = (4,5)`, `mu = (1,3)`: connected and westward but not compatible.
pub fn incompatible_pair() -> ShiftedDiagram {
    ShiftedDiagram::new(vec![4, 5], vec![1, 3]).expect("valid shape")
}

/// Bipartite graph on `x1, x2` and `y1, y2, y3` missing the edge `x2 y3`.
pub fn almost_complete_graph() -> BipartiteGraph {
    BipartiteGraph::new(2, 3, [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)]).expect("valid graph")
}

/// `K_{2,2}` plus the edge `y1 y2`, in variables `x1, x2, y1, y2`.
pub fn non_bipartite() -> MonomialIdeal {
    build(&["x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4"], 4)
}
