//! Exponent-vector monomials and monomial ideals.
//!
//! Variables are numbered `1..=n` in every public API that takes or returns a
//! variable index (supports, direction sets, Borel moves). Storage is a plain
//! exponent vector of length `n`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x^alpha` in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

/// Support data of a non-unit monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportStats {
    pub supp: BTreeSet<usize>,
    pub supp1: BTreeSet<usize>,
    pub max: usize,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    /// The variable `x_i` (1-based) in `n` variables.
    pub fn var(i: usize, n: usize) -> Self {
        assert!(1 <= i && i <= n, "variable index {i} out of range 1..={n}");
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Self { exps }
    }

    /// Squarefree monomial `x^sigma` for a set of 1-based indices.
    pub fn squarefree<I: IntoIterator<Item = usize>>(sigma: I, n: usize) -> Self {
        let mut exps = vec![0; n];
        for i in sigma {
            exps[i - 1] = 1;
        }
        Self { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i`, 1-based.
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::AmbientMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(())
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        Ok(self.zip_with(other, u32::max))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        Ok(self.zip_with(other, u32::min))
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// Exact quotient `self / other`, or `None` if `other` does not divide `self`.
    pub fn quotient(&self, other: &Monomial) -> Result<Option<Monomial>> {
        self.check_ambient(other)?;
        if !other.divides_unchecked(self) {
            return Ok(None);
        }
        Ok(Some(self.zip_with(other, |a, b| a - b)))
    }

    /// `self * x_up / x_down` if defined (1-based indices).
    pub fn exchange(&self, up: usize, down: usize) -> Option<Monomial> {
        if self.exps[down - 1] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[down - 1] -= 1;
        exps[up - 1] = exps[up - 1].checked_add(1)?;
        Some(Monomial { exps })
    }

    /// Substitute `x_i -> x_i^{powers(i)}`.
    pub fn substitute_powers(&self, powers: &[u32]) -> Result<Monomial> {
        if powers.len() != self.n() {
            return Err(Error::AmbientMismatch {
                expected: self.n(),
                found: powers.len(),
            });
        }
        let exps = self
            .exps
            .iter()
            .zip(powers)
            .map(|(e, p)| e.checked_mul(*p).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| f(*a, *b))
                .collect(),
        }
    }

    /// 1-based indices of variables dividing the monomial.
    pub fn supp(&self) -> BTreeSet<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `supp(m) \ {1}`.
    pub fn supp1(&self) -> BTreeSet<usize> {
        let mut s = self.supp();
        s.remove(&1);
        s
    }

    /// Largest index in the support.
    pub fn max_index(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0).map(|i| i + 1)
    }

    pub fn support_stats(&self) -> Result<SupportStats> {
        let max = self.max_index().ok_or(Error::UnitMonomial)?;
        Ok(SupportStats {
            supp: self.supp(),
            supp1: self.supp1(),
            max,
        })
    }

    /// Render with the given variable names, e.g. `x^2*y`.
    pub fn render(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            let name = names
                .get(i)
                .cloned()
                .unwrap_or_else(|| format!("x{}", i + 1));
            match e {
                0 => {}
                1 => parts.push(name),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

/// Co-lexicographic comparison of two monomials of the same total degree:
/// `a < b` iff at the largest index where they differ, `a` has the smaller exponent.
pub fn colex_cmp(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    a.check_ambient(b)?;
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    Ok(colex_key_cmp(a, b))
}

pub(crate) fn colex_key_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Canonical generator order: total degree, then co-lex.
pub(crate) fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| colex_key_cmp(a, b))
}

/// A monomial ideal stored by its minimal generating set `G(I)`.
///
/// Generators are kept in canonical order (total degree, then co-lex), so for an
/// equigenerated ideal `generators()` lists `f_1 < f_2 < ... < f_nu` in co-lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize an arbitrary generating set. An empty input gives the zero ideal.
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            if g.n() != n {
                return Err(Error::AmbientMismatch {
                    expected: n,
                    found: g.n(),
                });
            }
        }
        gens.sort_by(canonical_cmp);
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            // candidates arrive by non-decreasing degree, so only kept ones can divide g
            if !kept.iter().any(|k| k.divides_unchecked(&g)) {
                kept.push(g);
            }
        }
        Ok(Self { n, gens: kept })
    }

    /// Build from a sequence of exponent vectors.
    pub fn from_exponents(n: usize, rows: &[&[u32]]) -> Result<Self> {
        Self::new(n, rows.iter().map(|r| Monomial::new(r.to_vec())))
    }

    pub fn zero(n: usize) -> Self {
        Self { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        Self {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Rejects the zero and unit ideals.
    pub fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        Ok(())
    }

    /// `x^b in I` iff some generator divides `x^b`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    pub fn is_generator(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g == m)
    }

    /// The common degree of all generators, if equigenerated and nonzero.
    pub fn equigenerated_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn require_equigenerated(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        self.equigenerated_degree().ok_or(Error::NotEquigenerated)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// lcm of all minimal generators (the unit monomial for the zero ideal).
    pub fn lcm(&self) -> Monomial {
        self.gens.iter().fold(Monomial::one(self.n), |acc, g| {
            acc.zip_with(g, u32::max)
        })
    }

    /// `(I : m) = ( g / gcd(g, m) : g in G(I) )`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.n() != self.n {
            return Err(Error::AmbientMismatch {
                expected: self.n,
                found: m.n(),
            });
        }
        let quotients = self
            .gens
            .iter()
            .map(|g| g.zip_with(m, |a, b| a.saturating_sub(b)));
        MonomialIdeal::new(self.n, quotients)
    }

    /// `I * J`, minimalized.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if other.n != self.n {
            return Err(Error::AmbientMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut prods = Vec::with_capacity(self.len() * other.len());
        for f in &self.gens {
            for g in &other.gens {
                prods.push(f.mul(g)?);
            }
        }
        MonomialIdeal::new(self.n, prods)
    }

    /// Sum of ideals, minimalized.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if other.n != self.n {
            return Err(Error::AmbientMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        MonomialIdeal::new(self.n, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn render(&self, names: &[String]) -> String {
        let body: Vec<String> = self.gens.iter().map(|g| g.render(names)).collect();
        format!("({})", body.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

/// Parse a monomial written with `x1..xn` names, e.g. `x1^2*x3`. Test and example helper.
pub fn mono(text: &str, n: usize) -> Monomial {
    let mut exps = vec![0u32; n];
    let text = text.trim();
    if text == "1" {
        return Monomial::new(exps);
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (var, pow) = match factor.split_once('^') {
            Some((v, p)) => (v, p.parse::<u32>().expect("bad exponent")),
            None => (factor, 1),
        };
        let idx: usize = var
            .strip_prefix('x')
            .and_then(|s| s.parse().ok())
            .unwrap_or_else(|| panic!("bad variable {var}"));
        exps[idx - 1] += pow;
    }
    Monomial::new(exps)
}

/// Build an ideal from `x1..xn`-style monomial strings. Test and example helper.
pub fn ideal(texts: &[&str], n: usize) -> MonomialIdeal {
    MonomialIdeal::new(n, texts.iter().map(|t| mono(t, n))).expect("consistent ambient")
}
