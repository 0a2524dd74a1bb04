//! Multigraded Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use crate::monomial::Monomial;

/// `beta_{i, b}` indexed by homological degree `i` and multidegree `b`.
///
/// Indexing follows the ideal: `beta_0` counts minimal generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `value` to `beta_{i, b}`; zero values are not stored.
    pub fn add(&mut self, i: usize, b: Monomial, value: usize) {
        if value == 0 {
            return;
        }
        *self.entries.entry((i, b)).or_insert(0) += value;
    }

    pub fn get(&self, i: usize, b: &Monomial) -> usize {
        self.entries.get(&(i, b.clone())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Monomial, usize)> {
        self.entries.iter().map(|((i, b), v)| (*i, b, *v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coarse graded view `beta_{i, j}` with `j` the total degree.
    pub fn coarse(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        for ((i, b), v) in &self.entries {
            *out.entry((*i, b.degree())).or_insert(0) += v;
        }
        out
    }

    /// Total Betti numbers `beta_0, beta_1, ...` up to the projective dimension.
    pub fn totals(&self) -> Vec<usize> {
        let Some(pd) = self.projective_dimension() else {
            return Vec::new();
        };
        let mut out = vec![0; pd + 1];
        for ((i, _), v) in &self.entries {
            out[*i] += v;
        }
        out
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// `max { j - i : beta_{i,j} != 0 }` for the ideal.
    pub fn regularity(&self) -> Option<i64> {
        self.entries
            .keys()
            .map(|(i, b)| b.degree() as i64 - *i as i64)
            .max()
    }

    /// Merge another table into this one.
    pub fn merge(&mut self, other: &BettiTable) {
        for ((i, b), v) in &other.entries {
            self.add(*i, b.clone(), *v);
        }
    }

    /// Entries present in exactly one of the two tables or with different values.
    pub fn differences(&self, other: &BettiTable) -> Vec<(usize, Monomial, usize, usize)> {
        let mut keys: Vec<&(usize, Monomial)> =
            self.entries.keys().chain(other.entries.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|k| {
                let a = self.entries.get(k).copied().unwrap_or(0);
                let b = other.entries.get(k).copied().unwrap_or(0);
                (a != b).then(|| (k.0, k.1.clone(), a, b))
            })
            .collect()
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay2-style coarse table: rows `j - i`, columns `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coarse = self.coarse();
        let Some(pd) = self.projective_dimension() else {
            return writeln!(f, "(empty)");
        };
        let rows: std::collections::BTreeSet<i64> = coarse
            .keys()
            .map(|(i, j)| *j as i64 - *i as i64)
            .collect();
        write!(f, "{:>6}", "")?;
        for i in 0..=pd {
            write!(f, "{i:>6}")?;
        }
        writeln!(f)?;
        for r in rows {
            write!(f, "{:>5}:", r)?;
            for i in 0..=pd {
                let j = r + i as i64;
                let v = if j >= 0 {
                    coarse.get(&(i, j as u32)).copied().unwrap_or(0)
                } else {
                    0
                };
                if v == 0 {
                    write!(f, "{:>6}", ".")?;
                } else {
                    write!(f, "{v:>6}")?;
                }
            }
            writeln!(f)?;
        }
        write!(f, "total:")?;
        for v in self.totals() {
            write!(f, "{v:>6}")?;
        }
        writeln!(f)
    }
}
