// Shifted diagrams, their removal order and good moves, and the planar complex.

use newton_dual::cellres::{betti_from_complex, build_planar_complex, free_complex};
use newton_dual::dual::{generalized_dual, ExponentBound};
use newton_dual::fixtures;
use newton_dual::oracle::betti_oracle;

fn main() {
    let q = fixtures::quasi_diagram();
    println!("lambda {:?}, mu {:?}, connected: {}", q.lambda(), q.mu(), q.is_connected());
    let order = q.removal_order().unwrap();
    println!("removal order: {order:?}");
    for m in q.good_moves(&order).unwrap() {
        println!("  good move {:?} -> {:?} ({:?})", m.from, m.to, m.axis);
    }
    println!("compatible: {:?}", q.is_compatible());

    let d = fixtures::compatible_square();
    let a = ExponentBound::new(fixtures::compatible_square_bound());
    let x = build_planar_complex(&d, &a).unwrap();
    println!("square diagram: f-vector {:?}", x.f_vector());
    let cellular = betti_from_complex(&free_complex(&x).unwrap()).unwrap();
    let dual = generalized_dual(&d.ideal().unwrap(), &a).unwrap();
    assert_eq!(cellular, betti_oracle(&dual).unwrap());
    print!("{cellular}");

    let bad = fixtures::incompatible_pair();
    println!("lambda {:?}, mu {:?}: compatible = {}", bad.lambda(), bad.mu(), bad.is_compatible().unwrap());
}
