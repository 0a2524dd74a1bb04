//! The cellular free complex of a labeled cell complex.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::betti::BettiTable;
use crate::cellres::complex::LabeledCellComplex;
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A basis element `e_P` of multidegree `alpha_P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeGenerator {
    pub multidegree: Monomial,
    /// Originating cell id; `None` for the empty cell.
    pub cell: Option<usize>,
}

/// Entry `sign * x^coefficient` of a differential, from source column to target row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeEntry {
    pub source: usize,
    pub target: usize,
    pub sign: i32,
    pub coefficient: Monomial,
}

/// `0 -> F_d -> ... -> F_0 -> F_{-1} = R -> 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeComplex {
    n: usize,
    /// `generators[k]` is the basis of `F_{k-1}`.
    generators: Vec<Vec<FreeGenerator>>,
    /// `differentials[k]` is `F_k -> F_{k-1}` for `k >= 0`.
    differentials: Vec<Vec<FreeEntry>>,
}

impl FreeComplex {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Basis of `F_k`, `k >= -1`.
    pub fn generators(&self, k: isize) -> &[FreeGenerator] {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.generators.get(i))
            .map_or(&[], Vec::as_slice)
    }

    /// Entries of `F_k -> F_{k-1}`, `k >= 0`.
    pub fn differential(&self, k: usize) -> &[FreeEntry] {
        self.differentials.get(k).map_or(&[], Vec::as_slice)
    }

    /// Ranks of `F_{-1}, F_0, ...`.
    pub fn ranks(&self) -> Vec<usize> {
        self.generators.iter().map(Vec::len).collect()
    }

    /// Top index `d` with `F_d != 0`.
    pub fn length(&self) -> usize {
        self.generators.len().saturating_sub(2)
    }

    /// Symbolic check that every composite `F_{k+1} -> F_k -> F_{k-1}` is zero.
    pub fn check_composites(&self) -> Result<()> {
        for k in 1..self.differentials.len() {
            let mut by_target: Vec<Vec<&FreeEntry>> =
                vec![Vec::new(); self.generators[k].len()];
            for e in &self.differentials[k - 1] {
                by_target[e.source].push(e);
            }
            let mut acc: BTreeMap<(usize, usize, Monomial), i32> = BTreeMap::new();
            for e in &self.differentials[k] {
                for f in &by_target[e.target] {
                    let c = e.coefficient.mul(&f.coefficient)?;
                    *acc.entry((f.target, e.source, c)).or_insert(0) += e.sign * f.sign;
                }
            }
            if let Some(((t, s, c), v)) = acc.into_iter().find(|(_, v)| *v != 0) {
                return Err(Error::SignLaw(format!(
                    "composite into degree {} is {v}*{c} at ({t}, {s})",
                    k as isize - 2
                )));
            }
        }
        Ok(())
    }
}

/// Build `F_X` and check `d^2 = 0` symbolically.
pub fn free_complex(x: &LabeledCellComplex) -> Result<FreeComplex> {
    let n = x.n();
    let top = x.dim().map_or(0, |d| d + 1);
    let mut generators: Vec<Vec<FreeGenerator>> = vec![Vec::new(); top + 1];
    generators[0].push(FreeGenerator {
        multidegree: Monomial::one(n),
        cell: None,
    });
    let mut local = vec![0usize; x.cells().len()];
    for c in x.cells() {
        local[c.id] = generators[c.dim + 1].len();
        generators[c.dim + 1].push(FreeGenerator {
            multidegree: c.label.clone(),
            cell: Some(c.id),
        });
    }
    let mut differentials: Vec<Vec<FreeEntry>> = vec![Vec::new(); top];
    for c in x.cells() {
        let entries = &mut differentials[c.dim];
        if c.dim == 0 {
            entries.push(FreeEntry {
                source: local[c.id],
                target: 0,
                sign: 1,
                coefficient: c.label.clone(),
            });
            continue;
        }
        for &(f, s) in &c.facets {
            let q = x.cell(f);
            let coefficient = c
                .label
                .quotient(&q.label)?
                .ok_or_else(|| Error::Complex(format!("label of {f} does not divide {}", c.id)))?;
            entries.push(FreeEntry {
                source: local[c.id],
                target: local[f],
                sign: s,
                coefficient,
            });
        }
    }
    let fc = FreeComplex {
        n,
        generators,
        differentials,
    };
    fc.check_composites()?;
    Ok(fc)
}

/// No differential entry between cells is a unit. The augmentation `F_0 -> R` is
/// excluded since it resolves the quotient, not the ideal.
pub fn is_minimal(f: &FreeComplex) -> bool {
    f.differentials
        .iter()
        .skip(1)
        .flatten()
        .all(|e| !e.coefficient.is_one())
}

/// `beta_{i, b}` of the ideal: cells of dimension `i` with label `b`.
pub fn betti_from_complex(f: &FreeComplex) -> Result<BettiTable> {
    if !is_minimal(f) {
        return Err(Error::NotMinimal);
    }
    let mut t = BettiTable::new();
    for (k, gens) in f.generators.iter().enumerate().skip(1) {
        for g in gens {
            t.add(k - 1, g.multidegree.clone(), 1);
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellres::complex::taylor_complex;
    use crate::monomial::mono;

    #[test]
    fn single_vertex() {
        let x = taylor_complex(&[mono("x1^2", 1)]).unwrap();
        let f = free_complex(&x).unwrap();
        assert_eq!(f.ranks(), vec![1, 1]);
        assert_eq!(f.differential(0)[0].coefficient, mono("x1^2", 1));
        assert!(is_minimal(&f));
        assert_eq!(betti_from_complex(&f).unwrap().totals(), vec![1]);
    }

    #[test]
    fn redundant_generator_is_not_minimal() {
        let x = taylor_complex(&[mono("x1", 2), mono("x1*x2", 2)]).unwrap();
        let f = free_complex(&x).unwrap();
        assert!(!is_minimal(&f));
        assert_eq!(betti_from_complex(&f), Err(Error::NotMinimal));
    }

    #[test]
    fn koszul_on_two_variables() {
        let x = taylor_complex(&[mono("x1", 2), mono("x2", 2)]).unwrap();
        let f = free_complex(&x).unwrap();
        assert_eq!(f.ranks(), vec![1, 2, 1]);
        assert!(is_minimal(&f));
        let b = betti_from_complex(&f).unwrap();
        assert_eq!(b.get(1, &mono("x1*x2", 2)), 1);
    }

    #[test]
    fn flipped_sign_breaks_composite() {
        let mut x = taylor_complex(&[mono("x1", 3), mono("x2", 3), mono("x3", 3)]).unwrap();
        x.flip_sign(3, 1);
        assert!(matches!(free_complex(&x), Err(Error::SignLaw(_))));
    }
}
