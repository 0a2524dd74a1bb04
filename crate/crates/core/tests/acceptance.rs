//! Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, UnwindSafe};
use std::time::{Duration, Instant};

use newton_dual::betti::BettiTable;
use newton_dual::cellres::{
    betti_from_complex, build_borel_complex, build_planar_complex, free_complex, is_minimal,
};
use newton_dual::cli;
use newton_dual::dual::{
    generalized_alexander_dual_squarefree, generalized_dual, newton_dual, ExponentBound,
};
use newton_dual::ferrers::ShiftedDiagram;
use newton_dual::fixtures;
use newton_dual::graph::{compare_newton_alexander, verify_alex_dual, BipartiteGraph};
use newton_dual::monomial::{ideal, Monomial, MonomialIdeal};
use newton_dual::oracle::{bayer_sturmfels, betti_oracle_over, has_linear_resolution, Field};
use newton_dual::sample::{self, SeededRng};
use newton_dual::stability::{is_stable, is_strongly_stable, StabilityVariant};
use newton_dual::suite::{
    check_betti_stable, check_borel, check_double_dual, check_dual_linear_quotients,
    check_fiber_iso, check_planar, check_product_rule, compatible_diagrams, essential_graphs,
};
use newton_dual::toric::verify_specfiber;
use rand::Rng;

const SEED: u64 = 0x5eed_2024;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// Generators as a set of strings with the `*` separators removed.
fn rendered(i: &MonomialIdeal, names: &[String]) -> BTreeSet<String> {
    i.generators().iter().map(|g| g.render(names).replace('*', "")).collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// `x^a / f` by direct exponent subtraction, followed by minimalization by hand.
fn naive_dual(i: &MonomialIdeal, a: &[u32]) -> BTreeSet<Vec<u32>> {
    let all: Vec<Vec<u32>> = i
        .generators()
        .iter()
        .map(|g| a.iter().zip(g.exponents()).map(|(x, e)| x - e).collect())
        .collect();
    let divides = |u: &Vec<u32>, v: &Vec<u32>| u.iter().zip(v).all(|(p, q)| p <= q);
    all.iter()
        .filter(|v| !all.iter().any(|u| u != *v && divides(u, v)))
        .cloned()
        .collect()
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (1..=k).fold(1, |acc, t| acc * (n + 1 - t) / t)
}

fn c1_dual_examples() -> Outcome {
    let dir = std::env::temp_dir().join(format!("newton-dual-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let cases = [
        (
            "vars x y\nx^3\nx^2*y^2\ny^4\n",
            "5,6",
            set(&["x^2y^6", "x^3y^4", "x^5y^2"]),
        ),
        (
            "vars x1 x2 x3\nx1*x2\nx1*x3\nx2^2\nx2*x3\n",
            "3,4,2",
            set(&["x1^2x2^3x3^2", "x1^2x2^4x3", "x1^3x2^2x3^2", "x1^3x2^3x3"]),
        ),
    ];
    for (k, (text, bound, want)) in cases.iter().enumerate() {
        let path = dir.join(format!("case{k}.txt"));
        std::fs::write(&path, text).map_err(|e| e.to_string())?;
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cli::run(
            ["newton-dual", "dual", path.to_str().unwrap(), "--bound", bound],
            &mut out,
            &mut err,
        );
        ensure(code == 0, || format!("exit {code}: {}", String::from_utf8_lossy(&err)))?;
        let json: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
        let got: BTreeSet<String> = json["generators"]
            .as_array()
            .ok_or("no generators field")?
            .iter()
            .map(|g| g.as_str().unwrap_or_default().replace('*', ""))
            .collect();
        ensure(&got == want, || format!("case {k}: got {got:?}"))?;
    }
    std::fs::remove_dir_all(&dir).ok();
    Ok("both examples emitted exactly".into())
}

fn c2_involution_and_product() -> Outcome {
    let mut rng: SeededRng = sample::seeded(SEED);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=5);
        let i = sample::random_ideal(&mut rng, n, 8, 4);
        let a = sample::random_bound(&mut rng, &i, 2);
        let bound = ExponentBound::new(a.clone());
        check_double_dual(&i, &bound)?;
        let d = generalized_dual(&i, &bound).map_err(|e| e.to_string())?;
        let got: BTreeSet<Vec<u32>> = d.generators().iter().map(|g| g.exponents().to_vec()).collect();
        ensure(got == naive_dual(&i, &a), || format!("dual of {i} disagrees with subtraction"))?;

        let (d1, d2) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let p = sample::random_equigenerated(&mut rng, n, d1, 4);
        let q = sample::random_equigenerated(&mut rng, n, d2, 4);
        let joint = p.lcm().lcm(&q.lcm()).map_err(|e| e.to_string())?;
        let b: Vec<u32> = joint.exponents().iter().map(|&e| e + rng.gen_range(0..=2)).collect();
        check_product_rule(&p, &q, &ExponentBound::new(b))?;
    }
    Ok("1000 double duals and 1000 product rules".into())
}

fn c3_example_xi() -> Outcome {
    let i = fixtures::borel_cube();
    ensure(is_strongly_stable(&i).unwrap_or(false), || "fixture is not strongly stable".into())?;
    let (a, dual) = newton_dual(&i).map_err(|e| e.to_string())?;
    let x = build_borel_complex(&i, &a).map_err(|e| e.to_string())?;
    ensure(x.f_vector() == [14, 21, 9, 1], || format!("f-vector {:?}", x.f_vector()))?;
    let oracle = betti_oracle_over(&dual, Field::Q).map_err(|e| e.to_string())?;
    ensure(oracle.totals() == [14, 21, 9, 1], || format!("oracle {:?}", oracle.totals()))?;
    let r: Vec<usize> = i.generators().iter().map(|g| g.supp1().len()).collect();
    let sums: Vec<usize> = (0..4).map(|k| r.iter().map(|&rk| binom(rk, k)).sum()).collect();
    ensure(sums == [14, 21, 9, 1], || format!("binomial sums {sums:?}"))?;
    let f = free_complex(&x).map_err(|e| e.to_string())?;
    ensure(is_minimal(&f), || "not minimal".into())?;
    let cellular = betti_from_complex(&f).map_err(|e| e.to_string())?;
    ensure(cellular == oracle, || "cellular table differs from oracle".into())?;
    let bs = bayer_sturmfels(&x, Field::Q).map_err(|e| e.to_string())?;
    ensure(bs.is_none(), || format!("restriction to {bs:?} not acyclic"))?;
    Ok("(14, 21, 9, 1) from complex, oracle and binomial sums".into())
}

fn strongly_stable_sample() -> Vec<MonomialIdeal> {
    let mut rng: SeededRng = sample::seeded(SEED ^ 4);
    let mut out = Vec::new();
    while out.len() < 200 {
        let n = rng.gen_range(2..=5);
        let d = rng.gen_range(1..=4);
        let i = sample::random_closed_ideal(&mut rng, n, d, 20, StabilityVariant::StronglyStable)
            .expect("closure");
        if i.len() >= 2 {
            out.push(i);
        }
    }
    out
}

fn c4_borel_sweep(sample: &[MonomialIdeal]) -> Outcome {
    for i in sample {
        ensure(is_strongly_stable(i).unwrap_or(false), || format!("{i} not strongly stable"))?;
        ensure(i.equigenerated_degree().is_some(), || format!("{i} not equigenerated"))?;
        check_borel(i, Field::Q).map_err(|e| format!("{i}: {e}"))?;
    }
    Ok(format!("{} ideals, multidegree-exact", sample.len()))
}

fn frozen_stable_dual_table() -> Vec<((usize, u32), usize)> {
    vec![((0, 7), 12), ((1, 8), 14), ((1, 9), 1), ((2, 9), 3), ((2, 10), 1)]
}

fn c5_linear_quotients(sample: &[MonomialIdeal]) -> Outcome {
    for i in sample {
        check_dual_linear_quotients(i).map_err(|e| format!("{i}: {e}"))?;
    }
    let j = fixtures::stable_not_strongly();
    ensure(j.len() == 12, || "fixture size".into())?;
    ensure(is_stable(&j).unwrap_or(false), || "fixture not stable".into())?;
    ensure(!is_strongly_stable(&j).unwrap_or(true), || "fixture strongly stable".into())?;
    let (_, dual) = newton_dual(&j).map_err(|e| e.to_string())?;
    ensure(!has_linear_resolution(&dual).map_err(|e| e.to_string())?, || {
        "12-generator dual has a linear resolution".into()
    })?;
    let coarse: Vec<_> = betti_oracle_over(&dual, Field::Q)
        .map_err(|e| e.to_string())?
        .coarse()
        .into_iter()
        .collect();
    ensure(coarse == frozen_stable_dual_table(), || format!("table {coarse:?}"))?;
    Ok(format!("{} orders succeed; 12-generator dual is not linear", sample.len()))
}

fn c6_alexander() -> Outcome {
    let graphs = essential_graphs(7);
    for g in &graphs {
        let c = verify_alex_dual(g).map_err(|e| e.to_string())?;
        ensure(c.equal, || format!("{:?}: {} != {}", g.edges(), c.newton_dual, c.alexander_dual))?;
    }
    let vars = names(&["x1", "x2", "y1", "y2"]);
    let c = compare_newton_alexander(&fixtures::non_bipartite()).map_err(|e| e.to_string())?;
    let nd = rendered(&c.newton_dual, &vars);
    let ad = rendered(&c.alexander_dual, &vars);
    ensure(nd == set(&["x2y2", "x2y1", "x1y2", "x1y1", "x1x2"]), || format!("Newton dual {nd:?}"))?;
    ensure(ad == set(&["x1", "x2"]), || format!("Alexander dual {ad:?}"))?;
    ensure(!c.equal, || "counter-example agrees".into())?;
    Ok(format!("{} graphs; counter-example reproduced", graphs.len()))
}

fn c7_not_agree() -> Outcome {
    let g = BipartiteGraph::complete(2, 2);
    let a = ExponentBound::new(vec![2, 2, 2, 2]);
    let vars = names(&["x1", "x2", "y1", "y2"]);
    let newton = generalized_dual(&g.edge_ideal(), &a).map_err(|e| e.to_string())?;
    let complement = g.complement_edge_ideal().map_err(|e| e.to_string())?;
    ensure(rendered(&complement, &vars) == set(&["x1x2", "y1y2"]), || "complement".into())?;
    let alex = generalized_alexander_dual_squarefree(&complement, &a).map_err(|e| e.to_string())?;
    let want_n = set(&["x1x2^2y1y2^2", "x1x2^2y1^2y2", "x1^2x2y1y2^2", "x1^2x2y1^2y2"]);
    let want_a = set(&["x1^2y1^2", "x2^2y1^2", "x1^2y2^2", "x2^2y2^2"]);
    ensure(rendered(&newton, &vars) == want_n, || format!("Newton {newton}"))?;
    ensure(rendered(&alex, &vars) == want_a, || format!("Alexander {alex}"))?;
    ensure(newton != alex, || "the two duals agree".into())?;
    Ok("both generator sets reproduced and distinct".into())
}

fn c8_pipeline() -> Outcome {
    let q = ShiftedDiagram::new(vec![6, 5, 4, 7], vec![1, 3, 2, 3]).map_err(|e| e.to_string())?;
    ensure(q.is_connected(), || "not connected".into())?;
    let order: Vec<Monomial> = q
        .removal_order()
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|p| q.monomial(p))
        .collect();
    let listed = [
        "x1*x2", "x1*x3", "x1*x4", "x1*x5", "x1*x6", "x2*x4", "x2*x5", "x3*x4", "x3^2", "x4^2",
        "x4*x5", "x4*x6", "x4*x7",
    ];
    let want: Vec<Monomial> = listed.iter().map(|t| newton_dual::monomial::mono(t, 7)).collect();
    ensure(order == want, || format!("removal order {order:?}"))?;

    let d = ShiftedDiagram::new(vec![3, 3], vec![1, 1]).map_err(|e| e.to_string())?;
    ensure(d.ideal().ok() == Some(ideal(&["x1*x2", "x1*x3", "x2^2", "x2*x3"], 3)), || {
        "ideal of (3,3;1,1)".into()
    })?;
    ensure(d.is_compatible() == Ok(true), || "(3,3;1,1) not compatible".into())?;
    let a = ExponentBound::new(vec![3, 4, 2]);
    let x = build_planar_complex(&d, &a).map_err(|e| e.to_string())?;
    ensure(x.f_vector() == [4, 4, 1], || format!("f-vector {:?}", x.f_vector()))?;
    let f = free_complex(&x).map_err(|e| e.to_string())?;
    ensure(is_minimal(&f), || "not minimal".into())?;
    let stated = ideal(&["x1^2*x2^3*x3^2", "x1^2*x2^4*x3", "x1^3*x2^2*x3^2", "x1^3*x2^3*x3"], 3);
    let cellular = betti_from_complex(&f).map_err(|e| e.to_string())?;
    let oracle = betti_oracle_over(&stated, Field::Q).map_err(|e| e.to_string())?;
    ensure(cellular == oracle, || "cellular table differs from oracle".into())?;

    let bad = ShiftedDiagram::new(vec![4, 5], vec![1, 3]).map_err(|e| e.to_string())?;
    ensure(bad.is_compatible() == Ok(false), || "(4,5;1,3) accepted".into())?;
    let ba = ExponentBound::newton(&bad.ideal().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(build_planar_complex(&bad, &ba).is_err(), || "planar complex built for (4,5;1,3)".into())?;
    Ok("removal order, (4,4,1) resolution and rejection".into())
}

fn c9_planar_sweep() -> Outcome {
    let ds = compatible_diagrams(10);
    ensure(!ds.is_empty(), || "no diagrams".into())?;
    for d in &ds {
        check_planar(d, Field::Q).map_err(|e| format!("{:?}/{:?}: {e}", d.lambda(), d.mu()))?;
    }
    Ok(format!("{} compatible diagrams", ds.len()))
}

fn c10_betti_stable() -> Outcome {
    let mut rng: SeededRng = sample::seeded(SEED ^ 10);
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let i = sample::random_closed_ideal(&mut rng, n, 2, 21, StabilityVariant::Stable)
            .map_err(|e| e.to_string())?;
        ensure(is_stable(&i).unwrap_or(false), || format!("{i} not stable"))?;
        check_betti_stable(&i, Field::Q).map_err(|e| format!("{i}: {e}"))?;
    }
    Ok("100 ideals".into())
}

fn c11_toric() -> Outcome {
    for (l, m) in [(vec![2, 2], vec![0, 1]), (vec![4, 4, 3], vec![0, 1, 2])] {
        let r = verify_specfiber(&l, &m).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{l:?}/{m:?}: {:?} {:?}", r.only_in_kernel, r.only_in_minors))?;
    }
    let mut rng: SeededRng = sample::seeded(SEED ^ 11);
    for _ in 0..100 {
        let n = rng.gen_range(1..=4);
        let d = rng.gen_range(1..=3);
        let i = sample::random_equigenerated(&mut rng, n, d, 8);
        let a = ExponentBound::new(sample::random_bound(&mut rng, &i, 2));
        check_fiber_iso(&i, &a, 3).map_err(|e| format!("{i}: {e}"))?;
    }
    Ok("two shapes and 100 fiber comparisons".into())
}

fn tables_agree(i: &MonomialIdeal) -> Result<BettiTable, String> {
    let q = betti_oracle_over(i, Field::Q).map_err(|e| e.to_string())?;
    let f2 = betti_oracle_over(i, Field::F2).map_err(|e| e.to_string())?;
    ensure(q == f2, || format!("{i}: Q and F2 tables differ"))?;
    Ok(q)
}

fn c12_fields() -> Outcome {
    let xi = fixtures::borel_cube();
    let (_, dual) = newton_dual(&xi).map_err(|e| e.to_string())?;
    tables_agree(&dual)?;
    let sq = ShiftedDiagram::new(vec![3, 3], vec![1, 1]).map_err(|e| e.to_string())?;
    let sd = generalized_dual(&sq.ideal().unwrap(), &ExponentBound::new(vec![3, 4, 2])).unwrap();
    tables_agree(&sd)?;
    for field in Field::ALL {
        let q = check_borel(&xi, field)?;
        ensure(q.f_vector == [14, 21, 9, 1], || format!("{field}: f-vector"))?;
        check_planar(&sq, field)?;
    }
    Ok("identical tables over Q and F2".into())
}

fn record<F: FnOnce() -> Outcome + UnwindSafe>(n: usize, limit: Duration, f: F) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
    let elapsed = start.elapsed();
    let outcome = outcome.and_then(|msg| {
        if elapsed <= limit {
            Ok(msg)
        } else {
            Err(format!("{msg}, but over the {:.0?} limit", limit))
        }
    });
    let secs = elapsed.as_secs_f64();
    match &outcome {
        Ok(msg) => println!("PASS criterion {n}: {msg} ({secs:.2}s)"),
        Err(msg) => println!("FAIL criterion {n}: {msg} ({secs:.2}s)"),
    }
    outcome.is_ok()
}

fn main() {
    let sec = Duration::from_secs;
    let sample = strongly_stable_sample();
    let results = [
        record(1, sec(1), c1_dual_examples),
        record(2, sec(30), c2_involution_and_product),
        record(3, sec(10), c3_example_xi),
        record(4, sec(300), || c4_borel_sweep(&sample)),
        record(5, sec(300), || c5_linear_quotients(&sample)),
        record(6, sec(120), c6_alexander),
        record(7, sec(1), c7_not_agree),
        record(8, sec(5), c8_pipeline),
        record(9, sec(600), c9_planar_sweep),
        record(10, sec(300), c10_betti_stable),
        record(11, sec(300), c11_toric),
        record(12, sec(60), c12_fields),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
