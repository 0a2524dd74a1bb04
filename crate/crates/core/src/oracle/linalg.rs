//! Exact matrix rank over the rationals and over the field with two elements.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Coefficient field for homology computations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    #[default]
    Q,
    F2,
}

impl Field {
    pub const ALL: [Field; 2] = [Field::Q, Field::F2];
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Q => "Q",
            Field::F2 => "F2",
        })
    }
}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "Q" | "q" | "QQ" => Ok(Field::Q),
            "F2" | "f2" | "GF2" | "ZZ/2" => Ok(Field::F2),
            other => Err(format!("unknown field {other:?} (expected Q or F2)")),
        }
    }
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// `self * other`, or `None` on overflow.
    pub fn checked_mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let v = out.get(i, j).checked_add(a.checked_mul(b)?)?;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Some(out)
    }

    fn row_slices(&self) -> impl Iterator<Item = &[i64]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }
}

/// Rank of an integer matrix over the chosen field.
pub fn exact_rank(m: &IntMatrix, field: Field) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    match field {
        Field::Q => rank_q(m),
        Field::F2 => rank_f2(m),
    }
}

/// Rank of a rational matrix, by clearing denominators row by row.
pub fn exact_rank_rational(rows: &[Vec<BigRational>]) -> usize {
    let scaled: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, q| num_integer::lcm(acc, q.denom().clone()));
            row.iter()
                .map(|q| q.numer() * (&l / q.denom()))
                .collect()
        })
        .collect();
    bareiss_big(scaled)
}

fn rank_q(m: &IntMatrix) -> usize {
    let rows: Vec<Vec<i128>> = m
        .row_slices()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    match bareiss_i128(rows) {
        Some(r) => r,
        None => bareiss_big(
            m.row_slices()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        ),
    }
}

/// Fraction-free elimination; `None` if an intermediate value overflows.
fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a[0].len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        // prefer unit pivots to keep entries small
        let pivot = (rank..rows)
            .filter(|&r| a[r][c] != 0)
            .min_by_key(|&r| a[r][c].unsigned_abs());
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        let pv = a[rank][c];
        for r in rank + 1..rows {
            let f = a[r][c];
            for k in c + 1..cols {
                let v = pv
                    .checked_mul(a[r][k])?
                    .checked_sub(f.checked_mul(a[rank][k])?)?;
                a[r][k] = v / prev;
            }
            a[r][c] = 0;
        }
        prev = pv;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows)
            .filter(|&r| !a[r][c].is_zero())
            .min_by(|&x, &y| a[x][c].abs().cmp(&a[y][c].abs()));
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        let pv = a[rank][c].clone();
        for r in rank + 1..rows {
            let f = a[r][c].clone();
            for k in c + 1..cols {
                let v = &pv * &a[r][k] - &f * &a[rank][k];
                a[r][k] = v / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = pv;
        rank += 1;
    }
    rank
}

fn rank_f2(m: &IntMatrix) -> usize {
    let words = m.cols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = m
        .row_slices()
        .map(|r| {
            let mut bits = vec![0u64; words];
            for (c, &v) in r.iter().enumerate() {
                if v.rem_euclid(2) == 1 {
                    bits[c / 64] |= 1 << (c % 64);
                }
            }
            bits
        })
        .collect();
    let mut rank = 0;
    for c in 0..m.cols {
        let (w, b) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for r in rank + 1..rows.len() {
            if rows[r][w] & b != 0 {
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}
