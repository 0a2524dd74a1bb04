//! Bipartite graphs, edge ideals, and the Newton-dual versus Alexander-dual comparison.
//!
//! For a bipartite graph on `X = {x_1..x_m}`, `Y = {y_1..y_n}` the edge ideal lives
//! in `m + n` variables: `x_i` is variable `i`, `y_j` is variable `m + j`.

use std::collections::BTreeSet;

use crate::dual::{alexander_dual_squarefree, newton_dual};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    m: usize,
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(m: usize, n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let edges: BTreeSet<(usize, usize)> = edges.into_iter().collect();
        for &(i, j) in &edges {
            if i == 0 || i > m || j == 0 || j > n {
                return Err(Error::Graph(format!("edge ({i},{j}) outside [{m}]x[{n}]")));
            }
        }
        Ok(Self { m, n, edges })
    }

    /// Complete bipartite graph `K_{m,n}`.
    pub fn complete(m: usize, n: usize) -> Self {
        let edges = (1..=m).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
        Self { m, n, edges }
    }

    pub fn x_count(&self) -> usize {
        self.m
    }

    pub fn y_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Non-isolated vertices `X_I` and `Y_I`.
    pub fn essential_vertices(&self) -> (Vec<usize>, Vec<usize>) {
        let xs: BTreeSet<usize> = self.edges.iter().map(|e| e.0).collect();
        let ys: BTreeSet<usize> = self.edges.iter().map(|e| e.1).collect();
        (xs.into_iter().collect(), ys.into_iter().collect())
    }

    /// The graph restricted to `X_I ⊔ Y_I`, renumbered consecutively.
    pub fn restrict_essential(&self) -> Result<BipartiteGraph> {
        if self.is_empty() {
            return Err(Error::Graph("graph has no edges".into()));
        }
        let (xs, ys) = self.essential_vertices();
        let pos = |v: &[usize], k: usize| v.iter().position(|&u| u == k).unwrap() + 1;
        let edges = self.edges.iter().map(|&(i, j)| (pos(&xs, i), pos(&ys, j)));
        BipartiteGraph::new(xs.len(), ys.len(), edges)
    }

    /// Edge ideal in `m + n` variables.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let total = self.m + self.n;
        let gens = self
            .edges
            .iter()
            .map(|&(i, j)| Monomial::squarefree([i, self.m + j], total));
        MonomialIdeal::new(total, gens).expect("consistent ambient")
    }

    /// Cross edges missing from `G` on `X_I ⊔ Y_I` (renumbered consecutively).
    pub fn essential_complement(&self) -> Result<BipartiteGraph> {
        let g = self.restrict_essential()?;
        let edges: Vec<(usize, usize)> = (1..=g.m)
            .flat_map(|i| (1..=g.n).map(move |j| (i, j)))
            .filter(|e| !g.edges.contains(e))
            .collect();
        BipartiteGraph::new(g.m, g.n, edges)
    }

    /// Edge ideal of the full graph complement of `G|_{X_I ⊔ Y_I}` on the same
    /// vertex set: all `x_i x_j`, all `y_i y_j`, and the missing cross edges.
    pub fn complement_edge_ideal(&self) -> Result<MonomialIdeal> {
        let g = self.restrict_essential()?;
        Ok(graph_complement_ideal(&g.edge_ideal()))
    }
}

/// Edge ideal of the complement, on the support of `I`, of the simple graph whose
/// edge ideal is the squarefree quadratic ideal `I`.
pub fn graph_complement_ideal(edge_ideal: &MonomialIdeal) -> MonomialIdeal {
    let n = edge_ideal.n();
    let support: BTreeSet<usize> = edge_ideal.lcm().supp();
    let vs: Vec<usize> = support.into_iter().collect();
    let mut gens = Vec::new();
    for (a, &u) in vs.iter().enumerate() {
        for &v in &vs[a + 1..] {
            let m = Monomial::squarefree([u, v], n);
            if !edge_ideal.is_generator(&m) {
                gens.push(m);
            }
        }
    }
    MonomialIdeal::new(n, gens).expect("consistent ambient")
}

/// Both sides of the Newton-dual / Alexander-dual identity for one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderComparison {
    pub newton_dual: MonomialIdeal,
    pub alexander_dual: MonomialIdeal,
    pub equal: bool,
}

/// Compare the Newton dual of a squarefree quadratic ideal with the Alexander dual of
/// its complement graph's edge ideal. Works for any simple graph.
pub fn compare_newton_alexander(edge_ideal: &MonomialIdeal) -> Result<AlexanderComparison> {
    if edge_ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !edge_ideal.is_squarefree() || edge_ideal.equigenerated_degree() != Some(2) {
        return Err(Error::Graph("not the edge ideal of a simple graph".into()));
    }
    let (_, dual) = newton_dual(edge_ideal)?;
    let star = alexander_dual_squarefree(&graph_complement_ideal(edge_ideal))?;
    let equal = dual == star;
    Ok(AlexanderComparison {
        newton_dual: dual,
        alexander_dual: star,
        equal,
    })
}

/// Check the identity for a bipartite graph on the ring of its non-isolated vertices.
pub fn verify_alex_dual(graph: &BipartiteGraph) -> Result<AlexanderComparison> {
    let g = graph.restrict_essential()?;
    compare_newton_alexander(&g.edge_ideal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::ideal;

    fn less_graph() -> BipartiteGraph {
        BipartiteGraph::new(2, 3, [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)]).unwrap()
    }

    #[test]
    fn single_edge() {
        let g = BipartiteGraph::new(1, 1, [(1, 1)]).unwrap();
        assert_eq!(g.edge_ideal(), ideal(&["x1*x2"], 2));
        assert!(g.essential_complement().unwrap().is_empty());
        assert!(verify_alex_dual(&g).unwrap().equal);
    }

    #[test]
    fn complete_bipartite() {
        let k = BipartiteGraph::complete(2, 2);
        assert!(k.essential_complement().unwrap().is_empty());
        assert_eq!(k.complement_edge_ideal().unwrap(), ideal(&["x1*x2", "x3*x4"], 4));
        assert!(verify_alex_dual(&k).unwrap().equal);
    }

    #[test]
    fn less_graph_complement() {
        let g = less_graph();
        let c = g.essential_complement().unwrap();
        assert_eq!(c.edges().iter().copied().collect::<Vec<_>>(), vec![(2, 3)]);
        let r = verify_alex_dual(&g).unwrap();
        assert!(r.equal);
        assert_eq!(r.newton_dual.len(), 5);
    }

    #[test]
    fn isolated_vertices_are_dropped() {
        let g = BipartiteGraph::new(3, 4, [(2, 1), (2, 3)]).unwrap();
        let r = g.restrict_essential().unwrap();
        assert_eq!((r.x_count(), r.y_count()), (1, 2));
        assert!(verify_alex_dual(&g).unwrap().equal);
    }

    #[test]
    fn empty_graph_is_rejected() {
        let g = BipartiteGraph::new(2, 2, []).unwrap();
        assert!(g.essential_complement().is_err());
        assert!(BipartiteGraph::new(1, 1, [(1, 2)]).is_err());
    }

    #[test]
    fn non_bipartite_counter_example() {
        let i = ideal(&["x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4"], 4);
        let r = compare_newton_alexander(&i).unwrap();
        assert!(!r.equal);
        assert_eq!(r.alexander_dual, ideal(&["x1", "x2"], 4));
        assert_eq!(r.newton_dual.len(), 5);
    }
}
