//! Generalized Newton complementary duals and squarefree Alexander duals.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// The exponent vector `a` bounding an ideal from above.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentBound(Vec<u32>);

impl ExponentBound {
    pub fn new(a: Vec<u32>) -> Self {
        Self(a)
    }

    /// Componentwise maximum over `G(I)`.
    pub fn newton(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(Self(ideal.lcm().exponents().to_vec()))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.0.clone())
    }

    pub fn scaled(&self, k: u32) -> Result<Self> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for ExponentBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn check_bound_ambient(n: usize, a: &ExponentBound) -> Result<()> {
    if a.n() != n {
        return Err(Error::AmbientMismatch {
            expected: n,
            found: a.n(),
        });
    }
    Ok(())
}

/// Every generator exponent is componentwise at most `a`.
pub fn is_a_determined(ideal: &MonomialIdeal, a: &ExponentBound) -> Result<bool> {
    check_bound_ambient(ideal.n(), a)?;
    let bound = a.monomial();
    Ok(ideal.generators().iter().all(|g| g.divides_unchecked(&bound)))
}

/// `x^a / f` for each `f`, preserving the input order.
pub fn dual_generators(gens: &[Monomial], a: &ExponentBound) -> Result<Vec<Monomial>> {
    let bound = a.monomial();
    gens.iter()
        .map(|f| {
            check_bound_ambient(f.n(), a)?;
            bound
                .quotient(f)?
                .ok_or_else(|| Error::NotDetermined(a.to_string()))
        })
        .collect()
}

/// The `a`-dual of `I`: generated by `x^a / f` for `f in G(I)`.
pub fn generalized_dual(ideal: &MonomialIdeal, a: &ExponentBound) -> Result<MonomialIdeal> {
    check_bound_ambient(ideal.n(), a)?;
    if !is_a_determined(ideal, a)? {
        return Err(Error::NotDetermined(a.to_string()));
    }
    let gens = dual_generators(ideal.generators(), a)?;
    let dual = MonomialIdeal::new(ideal.n(), gens)?;
    debug_assert_eq!(dual.len(), ideal.len());
    Ok(dual)
}

/// The Newton complementary dual: the `a`-dual for `a = lcm(G(I))`.
///
/// A single-generator ideal dualizes to the unit ideal; callers can detect it with
/// [`MonomialIdeal::is_unit`].
pub fn newton_dual(ideal: &MonomialIdeal) -> Result<(ExponentBound, MonomialIdeal)> {
    let a = ExponentBound::newton(ideal)?;
    let dual = generalized_dual(ideal, &a)?;
    Ok((a, dual))
}

/// Alexander dual of a squarefree ideal, as the set of minimal transversals of the
/// generator supports.
pub fn alexander_dual_squarefree(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let n = ideal.n();
    if let Some(g) = ideal.generators().iter().find(|g| !g.is_squarefree()) {
        return Err(Error::NotSquarefree(g.to_string()));
    }
    // empty intersection is the whole ring
    let mut current = MonomialIdeal::unit(n);
    for g in ideal.generators() {
        let sigma = g.supp();
        let mut next = Vec::new();
        for t in current.generators() {
            if sigma.iter().any(|&i| t.exp(i) > 0) {
                next.push(t.clone());
            } else {
                for &i in &sigma {
                    let mut e = t.exponents().to_vec();
                    e[i - 1] = 1;
                    next.push(Monomial::new(e));
                }
            }
        }
        current = MonomialIdeal::new(n, next)?;
    }
    Ok(current)
}

/// Alexander dual followed by `x_i -> x_i^{a(i)}`.
pub fn generalized_alexander_dual_squarefree(
    ideal: &MonomialIdeal,
    a: &ExponentBound,
) -> Result<MonomialIdeal> {
    check_bound_ambient(ideal.n(), a)?;
    if !is_a_determined(ideal, a)? {
        return Err(Error::NotDetermined(a.to_string()));
    }
    let star = alexander_dual_squarefree(ideal)?;
    let gens = star
        .generators()
        .iter()
        .map(|g| g.substitute_powers(a.as_slice()))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(ideal.n(), gens)
}
