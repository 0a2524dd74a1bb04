// Colon ideals of the dual generators in co-lex order.

use newton_dual::dual::{dual_generators, ExponentBound};
use newton_dual::fixtures;
use newton_dual::stability::{check_linear_quotients, is_stable, is_strongly_stable, OrderedGenerators};

fn main() {
    for (name, i) in [
        ("strongly stable", fixtures::borel_cube()),
        ("stable only", fixtures::stable_not_strongly()),
    ] {
        let a = ExponentBound::newton(&i).unwrap();
        let order = OrderedGenerators::colex(i.clone());
        let duals = dual_generators(order.order(), &a).unwrap();
        let og = OrderedGenerators::from_sequence(i.n(), duals).unwrap();
        let rep = check_linear_quotients(&og).unwrap();
        println!(
            "{name}: stable {}, strongly stable {}, linear quotients {}",
            is_stable(&i).unwrap(),
            is_strongly_stable(&i).unwrap(),
            rep.succeeded()
        );
        for s in rep.steps.iter().take(4) {
            println!("  step {}: {}", s.k, s.colon);
        }
        if let Some((k, g)) = rep.failure {
            println!("  first failure at step {k}: colon contains {g}");
        }
    }
}
