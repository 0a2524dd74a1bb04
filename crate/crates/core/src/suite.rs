//! Verification suites: each constructs objects, computes the same quantity along two
//! independent paths, and records every disagreement.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::betti::BettiTable;
use crate::cellres::{betti_from_complex, build_borel_complex, build_planar_complex, free_complex, is_minimal};
use crate::dual::{dual_generators, generalized_dual, newton_dual, ExponentBound};
use crate::ferrers::{betti_w_formula, ShiftedDiagram};
use crate::graph::{verify_alex_dual, BipartiteGraph};
use crate::monomial::MonomialIdeal;
use crate::oracle::{bayer_sturmfels, betti_oracle_over, Field};
use crate::sample;
use crate::stability::{check_linear_quotients, x_set_in_order, ExchangeMode, OrderedGenerators, StabilityVariant};
use crate::toric::{fiber_relations, verify_specfiber};

/// Outcome of one suite.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.into(),
            ..Self::default()
        }
    }

    fn record(&mut self, label: impl FnOnce() -> String, outcome: Result<(), String>) {
        self.cases += 1;
        if let Err(e) = outcome {
            self.failures.push(format!("{}: {e}", label()));
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(f, "{:<18} {:>6} cases  {status}", self.name, self.cases)?;
        for e in self.failures.iter().take(5) {
            write!(f, "\n    {e}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Duals,
    Borel,
    LinearQuotients,
    Alexander,
    Planar,
    BettiStable,
    Toric,
    Fields,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Duals,
        Suite::Borel,
        Suite::LinearQuotients,
        Suite::Alexander,
        Suite::Planar,
        Suite::BettiStable,
        Suite::Toric,
        Suite::Fields,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duals => "duals",
            Suite::Borel => "borel",
            Suite::LinearQuotients => "linear-quotients",
            Suite::Alexander => "alexander",
            Suite::Planar => "planar",
            Suite::BettiStable => "betti-stable",
            Suite::Toric => "toric",
            Suite::Fields => "fields",
        }
    }
}

/// Parse `all` or a comma-separated list of suite names.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>, String> {
    if s == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    s.split(',').map(|p| p.trim().parse()).collect()
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Number of random cases for the sampled suites.
    pub samples: usize,
    /// Point bound for the diagram enumeration.
    pub max_points: usize,
    pub field: Field,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 2024,
            samples: 100,
            max_points: 8,
            field: Field::Q,
        }
    }
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Double dual is the identity.
pub fn check_double_dual(ideal: &MonomialIdeal, a: &ExponentBound) -> Result<(), String> {
    let d = generalized_dual(ideal, a).map_err(err)?;
    let back = generalized_dual(&d, a).map_err(err)?;
    (back == *ideal)
        .then_some(())
        .ok_or_else(|| format!("double dual of {ideal} is {back}"))
}

/// `dual(IJ, 2a) = dual(I, a) dual(J, a)` for equigenerated `I`, `J`.
pub fn check_product_rule(i: &MonomialIdeal, j: &MonomialIdeal, a: &ExponentBound) -> Result<(), String> {
    let ij = i.product(j).map_err(err)?;
    let lhs = generalized_dual(&ij, &a.scaled(2).map_err(err)?).map_err(err)?;
    let rhs = generalized_dual(i, a)
        .and_then(|x| x.product(&generalized_dual(j, a)?))
        .map_err(err)?;
    (lhs == rhs)
        .then_some(())
        .ok_or_else(|| format!("dual of product {lhs} != product of duals {rhs}"))
}

/// What the cube complex of a strongly stable ideal produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorelSummary {
    pub f_vector: Vec<usize>,
    pub cellular: BettiTable,
}

/// Cube complex versus the oracle for the Newton dual, plus the binomial-sum formula.
pub fn check_borel(ideal: &MonomialIdeal, field: Field) -> Result<BorelSummary, String> {
    let (a, dual) = newton_dual(ideal).map_err(err)?;
    let x = build_borel_complex(ideal, &a).map_err(err)?;
    x.check_labels().map_err(err)?;
    let f = free_complex(&x).map_err(err)?;
    if !is_minimal(&f) {
        return Err("cellular complex is not minimal".into());
    }
    let cellular = betti_from_complex(&f).map_err(err)?;
    let oracle = betti_oracle_over(&dual, field).map_err(err)?;
    if cellular != oracle {
        return Err(format!(
            "cellular and oracle tables differ at {:?}",
            cellular.differences(&oracle).first()
        ));
    }
    let r: Vec<usize> = ideal.generators().iter().map(|g| g.supp1().len()).collect();
    let pd = r.iter().copied().max().unwrap_or(0);
    let predicted: Vec<usize> = (0..=pd).map(|i| r.iter().map(|&rk| binomial(rk, i)).sum()).collect();
    if cellular.totals() != predicted || cellular.projective_dimension() != Some(pd) {
        return Err(format!("totals {:?} but binomial sums {predicted:?}", cellular.totals()));
    }
    Ok(BorelSummary {
        f_vector: x.f_vector(),
        cellular,
    })
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// Dual generators in the order induced by co-lex on `I` have linear quotients, with
/// the `k`-th colon generated by the variables of `X_k`.
pub fn check_dual_linear_quotients(ideal: &MonomialIdeal) -> Result<(), String> {
    let (a, _) = newton_dual(ideal).map_err(err)?;
    let og = OrderedGenerators::colex(ideal.clone());
    let duals = dual_generators(og.order(), &a).map_err(err)?;
    let dog = OrderedGenerators::from_sequence(ideal.n(), duals).map_err(err)?;
    let rep = check_linear_quotients(&dog).map_err(err)?;
    if let Some((k, g)) = rep.failure {
        return Err(format!("step {k} has colon generator {g}"));
    }
    for step in &rep.steps {
        let xk = x_set_in_order(&og, step.k - 1, ExchangeMode::StrictLower).map_err(err)?;
        if step.variables.as_ref() != Some(&xk) {
            return Err(format!("step {} colon {} but X_k = {xk:?}", step.k, step.colon));
        }
    }
    Ok(())
}

/// Planar complex of a compatible diagram against the oracle, with the full
/// acyclicity sweep.
pub fn check_planar(d: &ShiftedDiagram, field: Field) -> Result<Vec<usize>, String> {
    let ideal = d.ideal().map_err(err)?;
    let (a, dual) = newton_dual(&ideal).map_err(err)?;
    let x = build_planar_complex(d, &a).map_err(err)?;
    let f = free_complex(&x).map_err(err)?;
    if !is_minimal(&f) {
        return Err("planar complex is not minimal".into());
    }
    if let Some(b) = bayer_sturmfels(&x, field).map_err(err)? {
        return Err(format!("restriction to {b} is not acyclic"));
    }
    let cellular = betti_from_complex(&f).map_err(err)?;
    let oracle = betti_oracle_over(&dual, field).map_err(err)?;
    if cellular != oracle {
        return Err(format!(
            "cellular and oracle tables differ at {:?}",
            cellular.differences(&oracle).first()
        ));
    }
    if x.euler_characteristic() != 1 {
        return Err(format!("Euler characteristic {}", x.euler_characteristic()));
    }
    Ok(x.f_vector())
}

/// `beta_1 = 2 w2 + w1` and `beta_2 = w2` for the dual of a stable quadratic ideal.
pub fn check_betti_stable(ideal: &MonomialIdeal, field: Field) -> Result<(), String> {
    let (w1, w2) = betti_w_formula(ideal).map_err(err)?;
    let (_, dual) = newton_dual(ideal).map_err(err)?;
    let t = betti_oracle_over(&dual, field).map_err(err)?.totals();
    let got = |i: usize| t.get(i).copied().unwrap_or(0);
    let want = [ideal.len(), 2 * w2 + w1, w2];
    if (0..3).any(|i| got(i) != want[i]) || t.len() > 3 {
        return Err(format!("oracle totals {t:?}, formula {want:?}"));
    }
    Ok(())
}

/// Fiber relations of `I` and of its `a`-dual agree up to degree `r`.
pub fn check_fiber_iso(ideal: &MonomialIdeal, a: &ExponentBound, r: usize) -> Result<(), String> {
    let gens = ideal.generators();
    let lhs = fiber_relations(gens, r).map_err(err)?;
    let rhs = fiber_relations(&dual_generators(gens, a).map_err(err)?, r).map_err(err)?;
    if lhs != rhs {
        let diff: Vec<_> = lhs.symmetric_difference(&rhs).take(3).collect();
        return Err(format!("relations differ: {diff:?}"));
    }
    Ok(())
}

/// Graphs on at most `max_total` vertices, identified after dropping isolated vertices.
pub fn essential_graphs(max_total: usize) -> Vec<BipartiteGraph> {
    let set: BTreeSet<(usize, usize, Vec<(usize, usize)>)> = sample::bipartite_graphs(max_total)
        .filter_map(|g| g.restrict_essential().ok())
        .map(|g| (g.x_count(), g.y_count(), g.edges().iter().copied().collect()))
        .collect();
    set.into_iter()
        .map(|(m, n, e)| BipartiteGraph::new(m, n, e).expect("valid"))
        .collect()
}

/// Compatible diagrams with at most `max_points` points and columns at most `max_points`.
pub fn compatible_diagrams(max_points: usize) -> Vec<ShiftedDiagram> {
    sample::westward_diagrams(max_points, max_points)
        .into_iter()
        .filter(|d| d.is_compatible().unwrap_or(false))
        .collect()
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(suite.name());
    let mut rng = sample::seeded(cfg.seed ^ suite as u64);
    match suite {
        Suite::Duals => {
            for _ in 0..cfg.samples {
                let n = rng_range(&mut rng, 1, 5);
                let i = sample::random_ideal(&mut rng, n, 8, 4);
                let a = ExponentBound::new(sample::random_bound(&mut rng, &i, 2));
                rep.record(|| format!("{i} / {a}"), check_double_dual(&i, &a));
                let d1 = rng_range(&mut rng, 1, 4) as u32;
                let d2 = rng_range(&mut rng, 1, 4) as u32;
                let i = sample::random_equigenerated(&mut rng, n, d1, 4);
                let j = sample::random_equigenerated(&mut rng, n, d2, 4);
                let joint = i.lcm().lcm(&j.lcm()).expect("same ambient");
                let a = ExponentBound::new(
                    joint.exponents().iter().map(|&e| e + rng_range(&mut rng, 0, 1) as u32).collect(),
                );
                rep.record(|| format!("{i} * {j}"), check_product_rule(&i, &j, &a));
            }
        }
        Suite::Borel | Suite::LinearQuotients => {
            for _ in 0..cfg.samples {
                let n = rng_range(&mut rng, 2, 5);
                let d = rng_range(&mut rng, 1, 4) as u32;
                let i = match sample::random_closed_ideal(&mut rng, n, d, 20, StabilityVariant::StronglyStable) {
                    Ok(i) => i,
                    Err(e) => {
                        rep.record(|| "sampling".into(), Err(e.to_string()));
                        continue;
                    }
                };
                if i.len() < 2 {
                    continue;
                }
                if suite == Suite::Borel {
                    rep.record(|| i.to_string(), check_borel(&i, cfg.field).map(|_| ()));
                } else {
                    rep.record(|| i.to_string(), check_dual_linear_quotients(&i));
                }
            }
        }
        Suite::Alexander => {
            let total = cfg.max_points.clamp(2, 7);
            for g in essential_graphs(total) {
                let outcome = verify_alex_dual(&g).map_err(err).and_then(|c| {
                    c.equal.then_some(()).ok_or_else(|| {
                        format!("{} != {}", c.newton_dual, c.alexander_dual)
                    })
                });
                rep.record(|| format!("{:?}", g.edges()), outcome);
            }
        }
        Suite::Planar => {
            for d in compatible_diagrams(cfg.max_points) {
                rep.record(|| format!("{:?} / {:?}", d.lambda(), d.mu()), check_planar(&d, cfg.field).map(|_| ()));
            }
        }
        Suite::BettiStable => {
            for _ in 0..cfg.samples {
                let n = rng_range(&mut rng, 1, 6);
                let i = match sample::random_closed_ideal(&mut rng, n, 2, 21, StabilityVariant::Stable) {
                    Ok(i) => i,
                    Err(e) => {
                        rep.record(|| "sampling".into(), Err(e.to_string()));
                        continue;
                    }
                };
                rep.record(|| i.to_string(), check_betti_stable(&i, cfg.field));
            }
        }
        Suite::Toric => {
            for (l, m) in [(vec![2, 2], vec![0, 1]), (vec![4, 4, 3], vec![0, 1, 2])] {
                let outcome = verify_specfiber(&l, &m).map_err(err).and_then(|r| {
                    r.passed().then_some(()).ok_or_else(|| {
                        format!("kernel-only {:?}, minors-only {:?}", r.only_in_kernel, r.only_in_minors)
                    })
                });
                rep.record(|| format!("shape {l:?} / {m:?}"), outcome);
            }
            for _ in 0..cfg.samples {
                let n = rng_range(&mut rng, 1, 4);
                let d = rng_range(&mut rng, 1, 3) as u32;
                let i = sample::random_equigenerated(&mut rng, n, d, 8);
                let a = ExponentBound::new(sample::random_bound(&mut rng, &i, 2));
                rep.record(|| format!("{i} / {a}"), check_fiber_iso(&i, &a, 3));
            }
        }
        Suite::Fields => {
            let mut cases: Vec<MonomialIdeal> = vec![newton_dual(&crate::fixtures::borel_cube())
                .expect("fixture")
                .1];
            let sq = crate::fixtures::compatible_square();
            cases.push(
                generalized_dual(
                    &sq.ideal().expect("fixture"),
                    &ExponentBound::new(crate::fixtures::compatible_square_bound()),
                )
                .expect("fixture"),
            );
            for d in compatible_diagrams(cfg.max_points.min(6)) {
                cases.push(newton_dual(&d.ideal().expect("connected")).expect("nonzero").1);
            }
            for i in cases {
                let outcome = betti_oracle_over(&i, Field::Q)
                    .and_then(|q| Ok((q, betti_oracle_over(&i, Field::F2)?)))
                    .map_err(err)
                    .and_then(|(q, f2)| {
                        (q == f2).then_some(()).ok_or_else(|| "tables differ".to_string())
                    });
                rep.record(|| i.to_string(), outcome);
            }
        }
    }
    rep
}

fn rng_range(rng: &mut sample::SeededRng, lo: usize, hi: usize) -> usize {
    rand::Rng::gen_range(rng, lo..=hi)
}
