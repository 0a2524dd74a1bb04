//! Stable and strongly stable ideals, Borel moves, closures, and linear quotients.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::monomial::{canonical_cmp, colex_key_cmp, Monomial, MonomialIdeal};

/// Which exchange property a closure or predicate uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilityVariant {
    /// `m -> m x_i / x_max(m)` for `i < max(m)`
    Stable,
    /// `m -> m x_j / x_i` for `x_i | m`, `j < i`
    StronglyStable,
}

impl StabilityVariant {
    fn name(self) -> &'static str {
        match self {
            Self::Stable => "stable",
            Self::StronglyStable => "strongly stable",
        }
    }
}

/// All single exchange moves out of `m`.
fn moves(m: &Monomial, variant: StabilityVariant) -> Vec<Monomial> {
    let mut out = Vec::new();
    match variant {
        StabilityVariant::Stable => {
            if let Some(top) = m.max_index() {
                for i in 1..top {
                    out.extend(m.exchange(i, top));
                }
            }
        }
        StabilityVariant::StronglyStable => {
            for i in m.supp() {
                for j in 1..i {
                    out.extend(m.exchange(j, i));
                }
            }
        }
    }
    out
}

/// Checks the exchange property on `G(I)`; requires an equigenerated ideal.
pub fn check_stability(ideal: &MonomialIdeal, variant: StabilityVariant) -> Result<bool> {
    ideal.require_equigenerated()?;
    Ok(ideal
        .generators()
        .iter()
        .all(|g| moves(g, variant).iter().all(|m| ideal.is_generator(m))))
}

pub fn is_stable(ideal: &MonomialIdeal) -> Result<bool> {
    check_stability(ideal, StabilityVariant::Stable)
}

pub fn is_strongly_stable(ideal: &MonomialIdeal) -> Result<bool> {
    check_stability(ideal, StabilityVariant::StronglyStable)
}

/// Full-definition check for exploratory use on non-equigenerated ideals: every
/// monomial of `I` up to the maximal generator degree is tested for membership of
/// its exchanges.
pub fn check_stability_permissive(ideal: &MonomialIdeal, variant: StabilityVariant) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.n();
    let top = ideal.generators().iter().map(Monomial::degree).max().unwrap_or(0);
    let mut ok = true;
    for_each_monomial_up_to(n, top, &mut |m| {
        if ok && ideal.contains(m) {
            ok = moves(m, variant).iter().all(|e| ideal.contains(e));
        }
    });
    Ok(ok)
}

fn for_each_monomial_up_to(n: usize, max_degree: u32, f: &mut dyn FnMut(&Monomial)) {
    fn rec(exps: &mut Vec<u32>, k: usize, left: u32, f: &mut dyn FnMut(&Monomial)) {
        if k == exps.len() {
            f(&Monomial::new(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps[k] = e;
            rec(exps, k + 1, left - e, f);
        }
        exps[k] = 0;
    }
    let mut exps = vec![0; n];
    rec(&mut exps, 0, max_degree, f);
}

/// `m -> sigma`: multiply by `x_{i-1}/x_i` for each `i in sigma` (1-based).
pub fn borel_move(m: &Monomial, sigma: &BTreeSet<usize>) -> Result<Monomial> {
    let supp1 = m.supp1();
    if !sigma.is_subset(&supp1) {
        return Err(Error::BadDirections {
            monomial: m.to_string(),
            sigma: sigma.iter().copied().collect(),
        });
    }
    let mut exps = m.exponents().to_vec();
    for &i in sigma {
        exps[i - 2] += 1;
        exps[i - 1] -= 1;
    }
    Ok(Monomial::new(exps))
}

/// Smallest (strongly) stable ideal containing the equigenerated set `seeds`.
pub fn stable_closure(
    n: usize,
    seeds: &[Monomial],
    variant: StabilityVariant,
) -> Result<MonomialIdeal> {
    let Some(first) = seeds.first() else {
        return Err(Error::ZeroIdeal);
    };
    let d = first.degree();
    if seeds.iter().any(|s| s.degree() != d) {
        return Err(Error::NotEquigenerated);
    }
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue: VecDeque<Monomial> = VecDeque::new();
    for s in seeds {
        if s.n() != n {
            return Err(Error::AmbientMismatch {
                expected: n,
                found: s.n(),
            });
        }
        if seen.insert(s.clone()) {
            queue.push_back(s.clone());
        }
    }
    while let Some(m) = queue.pop_front() {
        for next in moves(&m, variant) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    MonomialIdeal::new(n, seen)
}

/// The smallest seed set whose closure is `J`: generators not reachable by a single
/// move from another generator.
pub fn minimal_closure_generators(
    ideal: &MonomialIdeal,
    variant: StabilityVariant,
) -> Result<Vec<Monomial>> {
    if !check_stability(ideal, variant)? {
        return Err(Error::NotClosed(variant.name()));
    }
    let reachable: HashSet<Monomial> = ideal
        .generators()
        .iter()
        .flat_map(|g| moves(g, variant))
        .collect();
    Ok(ideal
        .generators()
        .iter()
        .filter(|g| !reachable.contains(*g))
        .cloned()
        .collect())
}

/// A minimal generating set together with a chosen linear order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedGenerators {
    ideal: MonomialIdeal,
    order: Vec<Monomial>,
}

impl OrderedGenerators {
    /// Validate that `order` is a bijection onto `G(I)`.
    pub fn new(ideal: MonomialIdeal, order: Vec<Monomial>) -> Result<Self> {
        let mut sorted = order.clone();
        sorted.sort_by(canonical_cmp);
        if sorted.as_slice() != ideal.generators() {
            return Err(Error::Document(
                "order is not a permutation of the minimal generators".into(),
            ));
        }
        Ok(Self { ideal, order })
    }

    /// Generators in co-lex order (the ideal's canonical order when equigenerated).
    pub fn colex(ideal: MonomialIdeal) -> Self {
        let mut order = ideal.generators().to_vec();
        order.sort_by(colex_key_cmp);
        Self { ideal, order }
    }

    /// Use a sequence that is already a minimal generating set.
    pub fn from_sequence(n: usize, order: Vec<Monomial>) -> Result<Self> {
        let ideal = MonomialIdeal::new(n, order.clone())?;
        Self::new(ideal, order)
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn order(&self) -> &[Monomial] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Position (0-based) of a generator in the order.
    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.order.iter().position(|g| g == m)
    }
}

/// One colon step `(f_1, ..., f_{k-1}) : f_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientStep {
    /// 1-based position `k` of the generator being adjoined.
    pub k: usize,
    pub colon: MonomialIdeal,
    /// Variable indices when the colon is generated by variables.
    pub variables: Option<BTreeSet<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearQuotientReport {
    pub steps: Vec<QuotientStep>,
    /// First failing step and its first non-variable colon generator.
    pub failure: Option<(usize, Monomial)>,
}

impl LinearQuotientReport {
    pub fn succeeded(&self) -> bool {
        self.failure.is_none()
    }
}

/// Compute every colon ideal along the order and test whether each is generated by
/// variables.
pub fn check_linear_quotients(og: &OrderedGenerators) -> Result<LinearQuotientReport> {
    let n = og.ideal().n();
    let mut steps = Vec::new();
    let mut failure = None;
    for k in 1..og.len() {
        let prefix = MonomialIdeal::new(n, og.order()[..k].iter().cloned())?;
        let colon = prefix.colon(&og.order()[k])?;
        let bad = colon.generators().iter().find(|g| g.degree() != 1).cloned();
        let variables = match bad {
            None => Some(
                colon
                    .generators()
                    .iter()
                    .map(|g| g.max_index().expect("degree one"))
                    .collect(),
            ),
            Some(g) => {
                if failure.is_none() {
                    failure = Some((k + 1, g));
                }
                None
            }
        };
        steps.push(QuotientStep {
            k: k + 1,
            colon,
            variables,
        });
    }
    Ok(LinearQuotientReport { steps, failure })
}

/// Which exchanges count towards `x_set`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExchangeMode {
    /// `i < j`
    StrictLower,
    /// `i != j`
    AnyOther,
}

/// `{ x_j : f x_i / x_j in G(I) }` over the exchanges allowed by `mode`.
pub fn x_set(ideal: &MonomialIdeal, f: &Monomial, mode: ExchangeMode) -> Result<BTreeSet<usize>> {
    x_set_filtered(ideal, f, mode, |_| true)
}

/// `X_k` relative to an order: only exchanges landing on an earlier generator count.
pub fn x_set_in_order(og: &OrderedGenerators, k: usize, mode: ExchangeMode) -> Result<BTreeSet<usize>> {
    let f = &og.order()[k];
    x_set_filtered(og.ideal(), f, mode, |g| {
        og.position(g).is_some_and(|p| p < k)
    })
}

fn x_set_filtered(
    ideal: &MonomialIdeal,
    f: &Monomial,
    mode: ExchangeMode,
    keep: impl Fn(&Monomial) -> bool,
) -> Result<BTreeSet<usize>> {
    if !ideal.is_generator(f) {
        return Err(Error::NotAGenerator(f.to_string()));
    }
    let n = ideal.n();
    let mut out = BTreeSet::new();
    for j in f.supp() {
        for i in 1..=n {
            let allowed = match mode {
                ExchangeMode::StrictLower => i < j,
                ExchangeMode::AnyOther => i != j,
            };
            if !allowed {
                continue;
            }
            if let Some(g) = f.exchange(i, j) {
                if ideal.is_generator(&g) && keep(&g) {
                    out.insert(j);
                    break;
                }
            }
        }
    }
    Ok(out)
}
