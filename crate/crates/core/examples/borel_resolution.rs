// The cube complex of a strongly stable ideal resolves its Newton dual.

use newton_dual::cellres::{betti_from_complex, build_borel_complex, free_complex, is_minimal};
use newton_dual::dual::newton_dual;
use newton_dual::fixtures;
use newton_dual::oracle::{betti_oracle, bayer_sturmfels, Field};

fn main() {
    let i = fixtures::borel_cube();
    let (a, dual) = newton_dual(&i).unwrap();
    let x = build_borel_complex(&i, &a).unwrap();
    println!("{} generators, bound {a}", i.len());
    println!("f-vector {:?}", x.f_vector());

    let f = free_complex(&x).unwrap();
    assert!(is_minimal(&f));
    let cellular = betti_from_complex(&f).unwrap();
    print!("{cellular}");

    let oracle = betti_oracle(&dual).unwrap();
    assert_eq!(cellular, oracle);
    assert_eq!(bayer_sturmfels(&x, Field::Q).unwrap(), None);
    println!("matches the oracle; every restriction is acyclic");

    let r: Vec<usize> = i.generators().iter().map(|g| g.supp1().len()).collect();
    println!("|supp_1| per generator: {r:?}");
}
