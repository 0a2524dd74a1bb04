//! Augmented chain complexes and reduced homology.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::oracle::linalg::{exact_rank, Field, IntMatrix};

/// Chain complex `C_top -> ... -> C_0 -> C_{-1}` with integer boundary matrices.
///
/// `sizes[k]` is the rank of `C_{k-1}`; `boundaries[k]` (for `k >= 1`) is the matrix of
/// `C_{k-1} -> C_{k-2}` with `sizes[k-1]` rows and `sizes[k]` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    sizes: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Validates shapes and that consecutive composites vanish.
    pub fn new(sizes: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        let c = Self::from_parts(sizes, boundaries)?;
        for k in 2..c.sizes.len() {
            let comp = c.boundaries[k - 1]
                .checked_mul(&c.boundaries[k])
                .ok_or(Error::Overflow)?;
            if !comp.is_zero() {
                let witness = (0..comp.rows())
                    .flat_map(|r| (0..comp.cols()).map(move |s| (r, s)))
                    .map(|(r, s)| comp.get(r, s))
                    .find(|&v| v != 0)
                    .unwrap_or(0);
                return Err(Error::NonzeroComposite(witness as i32));
            }
        }
        Ok(c)
    }

    /// Shape checks only; for complexes that are correct by construction.
    pub(crate) fn from_parts(sizes: Vec<usize>, mut boundaries: Vec<IntMatrix>) -> Result<Self> {
        if boundaries.len() + 1 == sizes.len() {
            boundaries.insert(0, IntMatrix::zeros(0, sizes.first().copied().unwrap_or(0)));
        }
        if boundaries.len() != sizes.len() {
            return Err(Error::Complex("boundary count does not match degrees".into()));
        }
        for k in 1..sizes.len() {
            let b = &boundaries[k];
            if b.rows() != sizes[k - 1] || b.cols() != sizes[k] {
                return Err(Error::Complex(format!("boundary {k} has the wrong shape")));
            }
        }
        Ok(Self { sizes, boundaries })
    }

    /// Ranks of `C_{-1}, C_0, ...`.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// `dim H~_k` for `k = -1, 0, 1, ...`, indexed from 0.
    pub fn reduced_homology_dims(&self, field: Field) -> Vec<usize> {
        let ranks: Vec<usize> = (0..self.sizes.len())
            .map(|k| {
                if k == 0 {
                    0
                } else {
                    exact_rank(&self.boundaries[k], field)
                }
            })
            .collect();
        (0..self.sizes.len())
            .map(|k| {
                let out = ranks[k];
                let inc = ranks.get(k + 1).copied().unwrap_or(0);
                self.sizes[k] - out - inc
            })
            .collect()
    }

    pub fn is_acyclic(&self, field: Field) -> bool {
        self.reduced_homology_dims(field).iter().all(|&h| h == 0)
    }

    /// `sum (-1)^k rank C_k` over `k >= 0`.
    pub fn euler_characteristic(&self) -> i64 {
        self.sizes
            .iter()
            .skip(1)
            .enumerate()
            .map(|(k, &s)| if k % 2 == 0 { s as i64 } else { -(s as i64) })
            .sum()
    }
}

/// Augmented simplicial chain complex of the complex generated by `facets`
/// (bitmasks over at most 32 vertices). An empty facet list gives the void complex,
/// a list containing only `0` gives `{∅}`.
pub fn simplicial_chain_complex(facets: &[u32]) -> ChainComplex {
    let mut faces: Vec<u32> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &f in facets {
        // enumerate submasks
        let mut s = f;
        loop {
            if seen.insert(s) {
                faces.push(s);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    faces.sort_by_key(|&s| (s.count_ones(), s));
    let top = faces.last().map_or(0, |s| s.count_ones() as usize);
    let mut by_dim: Vec<Vec<u32>> = vec![Vec::new(); if faces.is_empty() { 0 } else { top + 1 }];
    for &s in &faces {
        by_dim[s.count_ones() as usize].push(s);
    }
    let index: Vec<HashMap<u32, usize>> = by_dim
        .iter()
        .map(|v| v.iter().enumerate().map(|(i, &s)| (s, i)).collect())
        .collect();
    let sizes: Vec<usize> = by_dim.iter().map(Vec::len).collect();
    let mut boundaries = vec![IntMatrix::zeros(0, sizes.first().copied().unwrap_or(0))];
    for k in 1..by_dim.len() {
        let mut m = IntMatrix::zeros(sizes[k - 1], sizes[k]);
        for (c, &s) in by_dim[k].iter().enumerate() {
            let mut sign = 1;
            let mut bits = s;
            while bits != 0 {
                let v = bits & bits.wrapping_neg();
                m.set(index[k - 1][&(s & !v)], c, sign);
                sign = -sign;
                bits &= bits - 1;
            }
        }
        boundaries.push(m);
    }
    ChainComplex { sizes, boundaries }
}
