//! Degree-bounded binomial relations among the generators of an equigenerated ideal,
//! and the symmetric matrix of a shifted shape with its 2x2 minors.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::dual::newton_dual;
use crate::error::{Error, Result};
use crate::ferrers::{generalized_ferrers_ideal, specialize, Point, ShiftedPartition};
use crate::monomial::{Monomial, MonomialIdeal};

/// Largest number of multisets enumerated per call.
pub const MULTISET_LIMIT: usize = 2_000_000;

/// `T_alpha - T_beta` with `f_alpha = f_beta`; indices are 1-based and sorted, and
/// `alpha < beta`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ToricRelation {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl ToricRelation {
    /// Canonical form of an unordered pair; `None` when the two sides agree.
    pub fn new(mut alpha: Vec<usize>, mut beta: Vec<usize>) -> Option<Self> {
        alpha.sort_unstable();
        beta.sort_unstable();
        match alpha.cmp(&beta) {
            std::cmp::Ordering::Less => Some(Self { alpha, beta }),
            std::cmp::Ordering::Greater => Some(Self {
                alpha: beta,
                beta: alpha,
            }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn degree(&self) -> usize {
        self.alpha.len()
    }

    /// `T_1 T_3 - T_2^2` style rendering with the given symbol.
    pub fn render(&self, symbol: &str) -> String {
        format!("{} - {}", term(&self.alpha, symbol), term(&self.beta, symbol))
    }

    /// Re-multiply both sides and compare.
    pub fn holds_for(&self, gens: &[Monomial]) -> Result<bool> {
        Ok(product(gens, &self.alpha)? == product(gens, &self.beta)?)
    }
}

fn term(idx: &[usize], symbol: &str) -> String {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &i in idx {
        *counts.entry(i).or_insert(0) += 1;
    }
    counts
        .into_iter()
        .map(|(i, c)| {
            if c == 1 {
                format!("{symbol}_{i}")
            } else {
                format!("{symbol}_{i}^{c}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for ToricRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("T"))
    }
}

fn product(gens: &[Monomial], idx: &[usize]) -> Result<Monomial> {
    let n = gens.first().map_or(0, Monomial::n);
    idx.iter().try_fold(Monomial::one(n), |acc, &i| {
        let g = gens
            .get(i.wrapping_sub(1))
            .ok_or_else(|| Error::Document(format!("generator index {i} out of range")))?;
        acc.mul(g)
    })
}

fn multiset_count(nu: usize, r: usize) -> usize {
    // C(nu + r - 1, r), saturating
    let mut c: u128 = 1;
    for k in 0..r as u128 {
        c = c * (nu as u128 + k) / (k + 1);
        if c > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    c as usize
}

/// All relations of degree `2..=r` among `gens` (taken in the given order),
/// found by grouping products of `r`-multisets.
pub fn fiber_relations(gens: &[Monomial], r: usize) -> Result<BTreeSet<ToricRelation>> {
    let Some(first) = gens.first() else {
        return Err(Error::ZeroIdeal);
    };
    if gens.iter().any(|g| g.degree() != first.degree() || g.n() != first.n()) {
        return Err(Error::NotEquigenerated);
    }
    if gens.iter().collect::<BTreeSet<_>>().len() != gens.len() {
        return Err(Error::Document("repeated generator".into()));
    }
    let total: usize = (2..=r).map(|k| multiset_count(gens.len(), k)).sum();
    if total > MULTISET_LIMIT {
        return Err(Error::ScaleGuard(format!(
            "{total} multisets of {} generators up to degree {r}",
            gens.len()
        )));
    }
    let mut out = BTreeSet::new();
    for k in 2..=r {
        let mut fibers: HashMap<Monomial, Vec<Vec<usize>>> = HashMap::new();
        let mut current = vec![0usize; k];
        multisets(gens, k, 1, &mut current, 0, Monomial::one(first.n()), &mut fibers)?;
        for members in fibers.values() {
            for (x, a) in members.iter().enumerate() {
                for b in &members[x + 1..] {
                    out.extend(ToricRelation::new(a.clone(), b.clone()));
                }
            }
        }
    }
    Ok(out)
}

fn multisets(
    gens: &[Monomial],
    k: usize,
    start: usize,
    current: &mut Vec<usize>,
    depth: usize,
    acc: Monomial,
    fibers: &mut HashMap<Monomial, Vec<Vec<usize>>>,
) -> Result<()> {
    if depth == k {
        fibers.entry(acc).or_default().push(current.clone());
        return Ok(());
    }
    for i in start..=gens.len() {
        current[depth] = i;
        let next = acc.mul(&gens[i - 1])?;
        multisets(gens, k, i, current, depth + 1, next, fibers)?;
    }
    Ok(())
}

/// Relations of an ideal, with generators indexed in canonical order.
pub fn fiber_relations_of(ideal: &MonomialIdeal, r: usize) -> Result<BTreeSet<ToricRelation>> {
    fiber_relations(ideal.generators(), r)
}

/// The index-preserving renaming `T_i -> S_i` between the fiber rings of an ideal and
/// its dual. Relations carry indices only, so this is the identity on data.
pub fn transport_relations(rels: &BTreeSet<ToricRelation>) -> BTreeSet<ToricRelation> {
    rels.clone()
}

/// Tag `T_{ij}` with `i <= j`.
pub type Tag = (usize, usize);

/// Square matrix of tags `T_{ij}` or zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolMatrix {
    size: usize,
    entries: Vec<Option<Tag>>,
}

impl SymbolMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> Option<Tag> {
        self.entries[(i - 1) * self.size + (j - 1)]
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=self.size).all(|i| (1..=self.size).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl fmt::Display for SymbolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.size {
            let row: Vec<String> = (1..=self.size)
                .map(|j| match self.get(i, j) {
                    Some((a, b)) => format!("T{a}{b}"),
                    None => "0".into(),
                })
                .collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// `T_{ij}` at `(i, j)` for `mu_i < j <= lambda_i`, reflected along the diagonal.
pub fn symmetrized_matrix(lambda: &[usize], mu: &[usize]) -> Result<SymbolMatrix> {
    let shape = ShiftedPartition::new(lambda.to_vec(), mu.to_vec())?;
    let d = shape.diagram();
    let size = d.ambient();
    let mut entries = vec![None; size * size];
    for (i, j) in d.points() {
        entries[(i - 1) * size + (j - 1)] = Some((i, j));
        entries[(j - 1) * size + (i - 1)] = Some((i, j));
    }
    Ok(SymbolMatrix { size, entries })
}

/// A binomial `u - v` in the tags, sorted so that `u < v`.
pub type TagBinomial = (Vec<Tag>, Vec<Tag>);

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Minors {
    pub binomials: BTreeSet<TagBinomial>,
    /// Minors with exactly one vanishing product, leaving a single monomial.
    pub degenerate: BTreeSet<Vec<Tag>>,
}

fn canonical_binomial(mut u: Vec<Tag>, mut v: Vec<Tag>) -> Option<TagBinomial> {
    u.sort_unstable();
    v.sort_unstable();
    match u.cmp(&v) {
        std::cmp::Ordering::Less => Some((u, v)),
        std::cmp::Ordering::Greater => Some((v, u)),
        std::cmp::Ordering::Equal => None,
    }
}

/// All 2x2 minors of `s`, split into binomials and degenerate monomials.
pub fn minors2(s: &SymbolMatrix) -> Minors {
    let mut out = Minors::default();
    let k = s.size();
    for r1 in 1..=k {
        for r2 in r1 + 1..=k {
            for c1 in 1..=k {
                for c2 in c1 + 1..=k {
                    let p = s.get(r1, c1).zip(s.get(r2, c2));
                    let q = s.get(r1, c2).zip(s.get(r2, c1));
                    match (p, q) {
                        (Some((a, b)), Some((c, d))) => {
                            out.binomials.extend(canonical_binomial(vec![a, b], vec![c, d]));
                        }
                        (Some((a, b)), None) | (None, Some((a, b))) => {
                            let mut m = vec![a, b];
                            m.sort_unstable();
                            out.degenerate.insert(m);
                        }
                        (None, None) => {}
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecfiberReport {
    /// Degree-2 relations of the dual, written in tags.
    pub relations: BTreeSet<TagBinomial>,
    pub minors: Minors,
    pub only_in_kernel: Vec<TagBinomial>,
    pub only_in_minors: Vec<TagBinomial>,
}

impl SpecfiberReport {
    pub fn passed(&self) -> bool {
        self.only_in_kernel.is_empty() && self.only_in_minors.is_empty()
    }
}

/// Compare the degree-2 relations of the Newton dual of the specialized shape ideal
/// with the binomial 2x2 minors of the symmetrized matrix, via `x_i x_j <-> T_{ij}`.
pub fn verify_specfiber(lambda: &[usize], mu: &[usize]) -> Result<SpecfiberReport> {
    let shape = ShiftedPartition::new(lambda.to_vec(), mu.to_vec())?;
    let diagram = shape.diagram();
    let ideal = match generalized_ferrers_ideal(lambda, mu) {
        Ok(bi) => specialize(&bi)?,
        // shifted shapes that are not Ferrers shapes specialize to the diagram ideal
        Err(_) => diagram.ideal()?,
    };
    let (_, dual) = newton_dual(&ideal)?;
    let points: Vec<Point> = ideal
        .generators()
        .iter()
        .map(|g| {
            let s: Vec<usize> = g.supp().into_iter().collect();
            (s[0], *s.last().unwrap())
        })
        .collect();
    let bound = ideal.lcm();
    let dual_gens: Vec<Monomial> = ideal
        .generators()
        .iter()
        .map(|g| bound.quotient(g).map(|q| q.expect("divides lcm")))
        .collect::<Result<_>>()?;
    debug_assert_eq!(
        MonomialIdeal::new(dual.n(), dual_gens.clone())?,
        dual
    );
    let rels = fiber_relations(&dual_gens, 2)?;
    let relations: BTreeSet<TagBinomial> = rels
        .iter()
        .filter_map(|r| {
            canonical_binomial(
                r.alpha.iter().map(|&k| points[k - 1]).collect(),
                r.beta.iter().map(|&k| points[k - 1]).collect(),
            )
        })
        .collect();
    let minors = minors2(&symmetrized_matrix(lambda, mu)?);
    let only_in_kernel = relations.difference(&minors.binomials).cloned().collect();
    let only_in_minors = minors.binomials.difference(&relations).cloned().collect();
    Ok(SpecfiberReport {
        relations,
        minors,
        only_in_kernel,
        only_in_minors,
    })
}
