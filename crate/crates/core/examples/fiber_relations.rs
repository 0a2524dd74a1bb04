// Binomial relations of an ideal and of its dual, and the symmetric-minor description.

use newton_dual::dual::{dual_generators, ExponentBound};
use newton_dual::monomial::MonomialIdeal;
use newton_dual::toric::{fiber_relations, symmetrized_matrix, verify_specfiber};

fn main() {
    let i = MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
    let a = ExponentBound::newton(&i).unwrap();
    let lhs = fiber_relations(i.generators(), 3).unwrap();
    let rhs = fiber_relations(&dual_generators(i.generators(), &a).unwrap(), 3).unwrap();
    for r in &lhs {
        println!("{}", r.render("T"));
    }
    assert_eq!(lhs, rhs);
    println!("the dual has the same {} relations up to degree 3", rhs.len());

    let s = symmetrized_matrix(&[4, 4, 3], &[0, 1, 2]).unwrap();
    print!("{s}");
    let rep = verify_specfiber(&[4, 4, 3], &[0, 1, 2]).unwrap();
    println!(
        "{} quadratic relations, {} binomial minors, {} degenerate minors",
        rep.relations.len(),
        rep.minors.binomials.len(),
        rep.minors.degenerate.len()
    );
    assert!(rep.passed());
}
