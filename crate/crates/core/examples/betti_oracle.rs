// Multigraded Betti numbers of arbitrary monomial ideals, over Q and F2.

use newton_dual::dual::newton_dual;
use newton_dual::fixtures;
use newton_dual::monomial::MonomialIdeal;
use newton_dual::oracle::{betti_oracle_over, has_linear_resolution, Field};

fn main() {
    let i = MonomialIdeal::from_exponents(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
    let t = betti_oracle_over(&i, Field::Q).unwrap();
    println!("Koszul complex on three variables:");
    print!("{t}");
    for (k, b, v) in t.entries() {
        println!("  beta_{k},{b} = {v}");
    }

    let (_, dual) = newton_dual(&fixtures::stable_not_strongly()).unwrap();
    let q = betti_oracle_over(&dual, Field::Q).unwrap();
    println!("dual of a stable, not strongly stable ideal:");
    print!("{q}");
    println!("linear resolution: {}", has_linear_resolution(&dual).unwrap());
    assert_eq!(q, betti_oracle_over(&dual, Field::F2).unwrap());
}
