// Newton duals of bipartite edge ideals are Alexander duals of complement graphs.

use newton_dual::dual::{generalized_alexander_dual_squarefree, generalized_dual, ExponentBound};
use newton_dual::fixtures;
use newton_dual::graph::{compare_newton_alexander, verify_alex_dual, BipartiteGraph};

fn main() {
    let g = fixtures::almost_complete_graph();
    let c = verify_alex_dual(&g).unwrap();
    println!("missing cross edges: {:?}", g.essential_complement().unwrap().edges());
    println!("Newton dual    {}", c.newton_dual);
    println!("Alexander dual {}", c.alexander_dual);
    assert!(c.equal);

    // one extra edge y1 y2 breaks bipartiteness and the identity
    let c = compare_newton_alexander(&fixtures::non_bipartite()).unwrap();
    println!("non-bipartite: {} vs {}", c.newton_dual, c.alexander_dual);
    assert!(!c.equal);

    // with a non-trivial bound the two generalizations differ
    let k = BipartiteGraph::complete(2, 2);
    let a = ExponentBound::new(vec![2, 2, 2, 2]);
    let lhs = generalized_dual(&k.edge_ideal(), &a).unwrap();
    let rhs = generalized_alexander_dual_squarefree(&k.complement_edge_ideal().unwrap(), &a).unwrap();
    println!("K22, a = {a}: {lhs} vs {rhs}");
    assert_ne!(lhs, rhs);
}
