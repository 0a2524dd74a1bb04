// Generalized and Newton duals, the double-dual identity, and the product rule.

use newton_dual::dual::{generalized_dual, newton_dual, ExponentBound};
use newton_dual::fixtures;
use newton_dual::monomial::MonomialIdeal;

fn main() {
    let names = vec!["x".to_string(), "y".to_string()];
    let i = fixtures::two_variable();
    let a = ExponentBound::new(vec![5, 6]);
    let d = generalized_dual(&i, &a).expect("I is (5,6)-determined");
    println!("I          = {}", i.render(&names));
    println!("dual(I, a) = {}   a = {a}", d.render(&names));
    assert_eq!(generalized_dual(&d, &a).unwrap(), i);
    println!("dual(dual(I, a), a) = I");

    let (newton, nd) = newton_dual(&i).unwrap();
    println!("Newton bound {newton}, Newton dual {}", nd.render(&names));

    // product rule for equigenerated ideals
    let j = MonomialIdeal::from_exponents(2, &[&[1, 1], &[0, 2]]).unwrap();
    let k = MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1]]).unwrap();
    let b = ExponentBound::new(vec![2, 2]);
    let lhs = generalized_dual(&j.product(&k).unwrap(), &b.scaled(2).unwrap()).unwrap();
    let rhs = generalized_dual(&j, &b)
        .unwrap()
        .product(&generalized_dual(&k, &b).unwrap())
        .unwrap();
    println!("dual(JK, 2b) = {} = dual(J, b) dual(K, b)", lhs.render(&names));
    assert_eq!(lhs, rhs);
}
