//! Command-line front end. Exit codes: 0 success, 1 verification failure, 2 usage,
//! parse or precondition error.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::betti::BettiTable;
use crate::cellres::{
    betti_from_complex, build_borel_complex, build_planar_complex, free_complex, is_minimal,
    LabeledCellComplex,
};
use crate::dual::{dual_generators, generalized_dual, ExponentBound};
use crate::error::Error;
use crate::ferrers::ShiftedDiagram;
use crate::graph::{compare_newton_alexander, BipartiteGraph};
use crate::io::{complex_svg, IdealDocument};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::oracle::{bayer_sturmfels, betti_oracle_over, Field};
use crate::stability::{check_linear_quotients, OrderedGenerators};
use crate::suite::{parse_suites, run_suite, SuiteConfig};
use crate::toric::{fiber_relations, transport_relations};

#[derive(Parser, Debug)]
#[command(name = "newton-dual", version, about = "Duals of monomial ideals and their cellular resolutions")]
struct Cli {
    /// Print human-readable tables instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Borel,
    Planar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Order {
    Colex,
    Removal,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generalized Newton dual with respect to a bound (default: the lcm of the generators).
    Dual {
        input: PathBuf,
        #[arg(long)]
        bound: Option<String>,
    },
    /// Multigraded Betti numbers of the ideal from the homology oracle.
    Betti {
        input: PathBuf,
        #[arg(long, default_value = "Q")]
        field: Field,
    },
    /// Cellular resolution of the dual.
    Resolve {
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        bound: Option<String>,
        /// Re-verify against the oracle and the acyclicity criterion.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value = "Q")]
        field: Field,
        /// Negate the first incidence sign of this cell before resolving.
        #[arg(long, hide = true)]
        flip_sign: Option<usize>,
    },
    /// Linear quotients of the dual generators in the chosen order.
    CheckLinearQuotients {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "colex")]
        order: Order,
        #[arg(long)]
        bound: Option<String>,
    },
    /// Newton dual of an edge ideal against the Alexander dual of the complement graph.
    AlexanderCompare { input: PathBuf },
    /// Fiber relations of the ideal and of its dual up to a degree cap.
    FiberRelations {
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        degree_cap: usize,
        #[arg(long)]
        bound: Option<String>,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_points: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value = "Q")]
        field: Field,
    },
    /// Draw the cell complex of the dual resolution.
    ExportSvg {
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        bound: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Run with explicit arguments (including the program name) and output streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn read_document(path: &PathBuf) -> std::result::Result<IdealDocument, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    Ok(IdealDocument::parse(&text)?)
}

fn parse_bound(text: &str, n: usize) -> std::result::Result<ExponentBound, Failure> {
    let parts: std::result::Result<Vec<u32>, _> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect();
    let parts = parts.map_err(|_| Failure::Usage(format!("bad bound {text:?}")))?;
    if parts.len() != n {
        return Err(Failure::Usage(format!("bound has {} entries, expected {n}", parts.len())));
    }
    Ok(ExponentBound::new(parts))
}

/// Bound from the flag, else from the document, else the lcm of the generators.
fn bound_for(
    flag: &Option<String>,
    doc: &IdealDocument,
    ideal: &MonomialIdeal,
) -> std::result::Result<ExponentBound, Failure> {
    match (flag, doc.exponent_bound()) {
        (Some(t), _) => parse_bound(t, doc.n()),
        (None, Some(b)) => Ok(b),
        (None, None) => Ok(ExponentBound::newton(ideal)?),
    }
}

fn emit(out: &mut dyn Write, value: &Value) -> Outcome {
    writeln!(out, "{}", serde_json::to_string_pretty(value).expect("json"))
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn emit_text(out: &mut dyn Write, text: &str) -> Outcome {
    write!(out, "{text}").map_err(|e| Failure::Usage(e.to_string()))
}

fn render_all(gens: &[Monomial], names: &[String]) -> Vec<String> {
    gens.iter().map(|g| g.render(names)).collect()
}

fn betti_json(t: &BettiTable) -> Value {
    let entries: Vec<Value> = t
        .entries()
        .map(|(i, b, v)| json!({"i": i, "multidegree": b, "value": v}))
        .collect();
    let ideal = t.totals();
    let mut quotient = vec![1];
    quotient.extend(&ideal);
    json!({
        "entries": entries,
        "ideal_totals": ideal,
        "quotient_totals": quotient,
    })
}

fn betti_line(t: &BettiTable) -> String {
    t.totals().iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn build_complex(
    mode: Mode,
    doc: &IdealDocument,
    bound: &Option<String>,
) -> std::result::Result<(LabeledCellComplex, ExponentBound, MonomialIdeal), Failure> {
    let ideal = doc.ideal()?;
    let a = bound_for(bound, doc, &ideal)?;
    let dual = generalized_dual(&ideal, &a)?;
    let x = match mode {
        Mode::Borel => build_borel_complex(&ideal, &a)?,
        Mode::Planar => build_planar_complex(&ShiftedDiagram::from_ideal(&ideal)?, &a)?,
    };
    Ok((x, a, dual))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Dual { input, bound } => {
            let doc = read_document(input)?;
            let ideal = doc.ideal()?;
            let a = bound_for(bound, &doc, &ideal)?;
            let dual = generalized_dual(&ideal, &a)?;
            if cli.text {
                return emit_text(out, &format!("{}\n", dual.render(&doc.variables)));
            }
            let mut d = IdealDocument::from_ideal(&dual, Some(&a));
            d.variables = doc.variables.clone();
            d.blocks = doc.blocks;
            emit(
                out,
                &json!({
                    "bound": a,
                    "generators": render_all(dual.generators(), &doc.variables),
                    "document": d,
                }),
            )
        }
        Command::Betti { input, field } => {
            let doc = read_document(input)?;
            let t = betti_oracle_over(&doc.ideal()?, *field)?;
            if cli.text {
                return emit_text(out, &t.to_string());
            }
            emit(out, &json!({"field": field.to_string(), "betti": betti_json(&t)}))
        }
        Command::Resolve {
            input,
            mode,
            bound,
            check,
            field,
            flip_sign,
        } => {
            let doc = read_document(input)?;
            let (mut x, a, dual) = build_complex(*mode, &doc, bound)?;
            if let Some(c) = *flip_sign {
                if c >= x.cells().len() || x.cell(c).facets.is_empty() {
                    return Err(Failure::Usage(format!("cell {c} has no facets to flip")));
                }
                x.flip_sign(c, 0);
            }
            let f = free_complex(&x).map_err(|e| Failure::Verification(e.to_string()))?;
            if !is_minimal(&f) {
                return Err(Failure::Verification("cellular complex is not minimal".into()));
            }
            let cellular = betti_from_complex(&f)?;
            let mut report = json!({
                "bound": a,
                "f_vector": x.f_vector(),
                "betti_line": betti_line(&cellular),
                "betti": betti_json(&cellular),
            });
            let mut failure = None;
            if *check {
                let oracle = betti_oracle_over(&dual, *field)?;
                let acyclic = bayer_sturmfels(&x, *field)?;
                let matches = oracle == cellular;
                report["check"] = json!({
                    "field": field.to_string(),
                    "oracle_match": matches,
                    "acyclic": acyclic.is_none(),
                    "first_non_acyclic": acyclic,
                });
                if !matches {
                    failure = Some("cellular Betti table differs from the oracle".to_string());
                } else if let Some(b) = &acyclic {
                    failure = Some(format!("restriction to {b} is not acyclic"));
                }
            }
            if cli.text {
                let mut s = format!("f-vector: {:?}\nbetti: {}\n{cellular}", x.f_vector(), betti_line(&cellular));
                if let Some(c) = report.get("check") {
                    s += &format!("check: {c}\n");
                }
                emit_text(out, &s)?;
            } else {
                report["complex"] = serde_json::to_value(&x).expect("json");
                report["free_complex"] = serde_json::to_value(&f).expect("json");
                emit(out, &report)?;
            }
            match failure {
                Some(msg) => Err(Failure::Verification(msg)),
                None => Ok(()),
            }
        }
        Command::CheckLinearQuotients { input, order, bound } => {
            let doc = read_document(input)?;
            let ideal = doc.ideal()?;
            let a = bound_for(bound, &doc, &ideal)?;
            let source = match order {
                Order::Colex => OrderedGenerators::colex(ideal.clone()),
                Order::Removal => ShiftedDiagram::from_ideal(&ideal)?.ordered_generators()?,
            };
            let duals = dual_generators(source.order(), &a)?;
            let og = OrderedGenerators::from_sequence(ideal.n(), duals)?;
            let rep = check_linear_quotients(&og)?;
            let names = &doc.variables;
            let steps: Vec<Value> = rep
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "k": s.k,
                        "generator": og.order()[s.k - 1].render(names),
                        "colon": render_all(s.colon.generators(), names),
                        "variables": s.variables,
                    })
                })
                .collect();
            if cli.text {
                let mut s = String::new();
                for st in &rep.steps {
                    s += &format!("{:>3}: {}\n", st.k, st.colon.render(names));
                }
                s += if rep.succeeded() { "linear quotients\n" } else { "not linear quotients\n" };
                emit_text(out, &s)?;
            } else {
                emit(
                    out,
                    &json!({
                        "order": render_all(og.order(), names),
                        "steps": steps,
                        "linear_quotients": rep.succeeded(),
                    }),
                )?;
            }
            match rep.failure {
                Some((k, g)) => Err(Failure::Verification(format!(
                    "colon at step {k} has generator {}",
                    g.render(names)
                ))),
                None => Ok(()),
            }
        }
        Command::AlexanderCompare { input } => {
            let doc = read_document(input)?;
            let ideal = doc.ideal()?;
            let (c, names) = match doc.blocks {
                Some([m, n]) => {
                    let edges = ideal
                        .generators()
                        .iter()
                        .map(|g| {
                            let s: Vec<usize> = g.supp().into_iter().collect();
                            if g.degree() != 2 || s.len() != 2 || s[0] > m || s[1] <= m {
                                return Err(Failure::Usage(format!(
                                    "{} is not an x-y edge",
                                    g.render(&doc.variables)
                                )));
                            }
                            Ok((s[0], s[1] - m))
                        })
                        .collect::<std::result::Result<Vec<_>, _>>()?;
                    // the comparison lives on the non-isolated vertices
                    let r = BipartiteGraph::new(m, n, edges)?.restrict_essential()?;
                    let mut names: Vec<String> = (1..=r.x_count()).map(|i| format!("x{i}")).collect();
                    names.extend((1..=r.y_count()).map(|j| format!("y{j}")));
                    (compare_newton_alexander(&r.edge_ideal())?, names)
                }
                None => (compare_newton_alexander(&ideal)?, doc.variables.clone()),
            };
            if cli.text {
                emit_text(
                    out,
                    &format!(
                        "newton dual:    {}\nalexander dual: {}\nequal: {}\n",
                        c.newton_dual.render(&names),
                        c.alexander_dual.render(&names),
                        c.equal
                    ),
                )?;
            } else {
                emit(
                    out,
                    &json!({
                        "variables": names,
                        "newton_dual": render_all(c.newton_dual.generators(), &names),
                        "alexander_dual": render_all(c.alexander_dual.generators(), &names),
                        "equal": c.equal,
                    }),
                )?;
            }
            if doc.blocks.is_some() && !c.equal {
                return Err(Failure::Verification("the two duals differ".into()));
            }
            Ok(())
        }
        Command::FiberRelations { input, degree_cap, bound } => {
            let doc = read_document(input)?;
            let ideal = doc.ideal()?;
            let a = bound_for(bound, &doc, &ideal)?;
            let gens = ideal.generators();
            let lhs = fiber_relations(gens, *degree_cap)?;
            let rhs = fiber_relations(&dual_generators(gens, &a)?, *degree_cap)?;
            let transported = transport_relations(&lhs);
            let same = transported == rhs;
            if cli.text {
                let mut s = String::new();
                for r in &lhs {
                    s += &format!("{}\n", r.render("T"));
                }
                s += &format!("dual relations agree: {same}\n");
                emit_text(out, &s)?;
            } else {
                let pairs = |set: &std::collections::BTreeSet<crate::toric::ToricRelation>| -> Vec<Value> {
                    set.iter()
                        .map(|r| json!({"alpha": r.alpha, "beta": r.beta, "degree": r.degree()}))
                        .collect()
                };
                emit(
                    out,
                    &json!({
                        "generators": render_all(gens, &doc.variables),
                        "degree_cap": degree_cap,
                        "relations": pairs(&lhs),
                        "dual_relations": pairs(&rhs),
                        "dual_agrees": same,
                    }),
                )?;
            }
            if !same {
                return Err(Failure::Verification("relations of the dual differ".into()));
            }
            Ok(())
        }
        Command::Verify {
            suite,
            max_points,
            samples,
            seed,
            field,
        } => {
            let suites = parse_suites(suite).map_err(Failure::Usage)?;
            let cfg = SuiteConfig {
                seed: *seed,
                samples: *samples,
                max_points: *max_points,
                field: *field,
            };
            let reports: Vec<_> = suites.iter().map(|&s| run_suite(s, &cfg)).collect();
            let ok = reports.iter().all(|r| r.passed());
            if cli.text {
                let mut s = String::new();
                for r in &reports {
                    s += &format!("{r}\n");
                }
                emit_text(out, &s)?;
            } else {
                let v: Vec<Value> = reports
                    .iter()
                    .map(|r| json!({"suite": r.name, "cases": r.cases, "passed": r.passed(), "failures": r.failures}))
                    .collect();
                emit(out, &json!({"suites": v, "passed": ok}))?;
            }
            if ok {
                Ok(())
            } else {
                Err(Failure::Verification("some suites failed".into()))
            }
        }
        Command::ExportSvg {
            input,
            mode,
            bound,
            output,
        } => {
            let doc = read_document(input)?;
            let (x, _, _) = build_complex(*mode, &doc, bound)?;
            let svg = complex_svg(&x, &doc.variables)?;
            match output {
                Some(p) => std::fs::write(p, svg).map_err(|e| Failure::Usage(e.to_string())),
                None => emit_text(out, &svg),
            }
        }
    }
}
