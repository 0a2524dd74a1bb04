//! Seeded random inputs and exhaustive enumerators for the verification sweeps.

use rand::Rng;

use crate::error::Result;
use crate::ferrers::ShiftedDiagram;
use crate::graph::BipartiteGraph;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::stability::{stable_closure, StabilityVariant};

pub use rand_chacha::ChaCha8Rng as SeededRng;

/// Deterministic generator for a given seed.
pub fn seeded(seed: u64) -> SeededRng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// A random monomial of total degree exactly `d` in `n` variables.
pub fn random_monomial<R: Rng>(rng: &mut R, n: usize, d: u32) -> Monomial {
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(e)
}

/// Non-zero, proper ideal with at most `max_gens` generators of degree `1..=max_deg`.
pub fn random_ideal<R: Rng>(rng: &mut R, n: usize, max_gens: usize, max_deg: u32) -> MonomialIdeal {
    loop {
        let k = rng.gen_range(1..=max_gens);
        let gens = (0..k).map(|_| {
            let d = rng.gen_range(1..=max_deg);
            random_monomial(rng, n, d)
        });
        let i = MonomialIdeal::new(n, gens.collect::<Vec<_>>()).expect("same ambient");
        if !i.is_unit() {
            return i;
        }
    }
}

/// Equigenerated ideal of degree `d` with `1..=max_gens` generators.
pub fn random_equigenerated<R: Rng>(rng: &mut R, n: usize, d: u32, max_gens: usize) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens);
    let gens: Vec<Monomial> = (0..k).map(|_| random_monomial(rng, n, d)).collect();
    MonomialIdeal::new(n, gens).expect("same ambient")
}

/// `a >= lcm(G(I))` with up to `slack` extra in each coordinate.
pub fn random_bound<R: Rng>(rng: &mut R, ideal: &MonomialIdeal, slack: u32) -> Vec<u32> {
    ideal
        .lcm()
        .exponents()
        .iter()
        .map(|&e| e + rng.gen_range(0..=slack))
        .collect()
}

/// Closure of a few random seeds, retried until it has at most `max_gens` generators.
pub fn random_closed_ideal<R: Rng>(
    rng: &mut R,
    n: usize,
    d: u32,
    max_gens: usize,
    variant: StabilityVariant,
) -> Result<MonomialIdeal> {
    loop {
        let seeds: Vec<Monomial> = (0..rng.gen_range(1..=3))
            .map(|_| random_monomial(rng, n, d))
            .collect();
        let i = stable_closure(n, &seeds, variant)?;
        if i.len() <= max_gens {
            return Ok(i);
        }
    }
}

/// All bipartite graphs with at least one edge on `m + n <= max_total` vertices,
/// `m, n >= 1`.
pub fn bipartite_graphs(max_total: usize) -> impl Iterator<Item = BipartiteGraph> {
    (1..max_total).flat_map(move |m| {
        (1..=max_total - m).flat_map(move |n| {
            let cells: Vec<(usize, usize)> =
                (1..=m).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
            let k = cells.len();
            (1u64..(1u64 << k)).map(move |mask| {
                let edges = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| cells[b]);
                BipartiteGraph::new(m, n, edges).expect("edges in range")
            })
        })
    })
}

/// Connected shifted diagrams with westward rows (`mu` non-decreasing), at most
/// `max_points` points and columns at most `max_column`.
pub fn westward_diagrams(max_points: usize, max_column: usize) -> Vec<ShiftedDiagram> {
    let mut out = Vec::new();
    let mut lambda = Vec::new();
    let mut mu = Vec::new();
    extend_rows(&mut lambda, &mut mu, 0, max_points, max_column, &mut out);
    out
}

fn extend_rows(
    lambda: &mut Vec<usize>,
    mu: &mut Vec<usize>,
    points: usize,
    max_points: usize,
    max_column: usize,
    out: &mut Vec<ShiftedDiagram>,
) {
    let i = lambda.len() + 1;
    let lo = mu.last().copied().unwrap_or(0).max(i - 1);
    for u in lo..max_column {
        if let Some(&pl) = lambda.last() {
            // rows must share a column
            if u + 1 > pl {
                break;
            }
        }
        for l in u + 1..=max_column {
            let size = points + l - u;
            if size > max_points {
                break;
            }
            if let Some(&pl) = lambda.last() {
                let pu = *mu.last().unwrap();
                if pu.max(u) >= pl.min(l) {
                    continue;
                }
            }
            lambda.push(l);
            mu.push(u);
            out.push(ShiftedDiagram::new(lambda.clone(), mu.clone()).expect("valid rows"));
            extend_rows(lambda, mu, size, max_points, max_column, out);
            lambda.pop();
            mu.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_is_deterministic() {
        let a = random_ideal(&mut seeded(7), 4, 5, 3);
        let b = random_ideal(&mut seeded(7), 4, 5, 3);
        assert_eq!(a, b);
    }

    #[test]
    fn graph_enumeration_counts() {
        // 1x1: 1 graph; 1x2 and 2x1: 3 each
        assert_eq!(bipartite_graphs(3).count(), 7);
    }

    #[test]
    fn diagrams_are_connected_and_westward() {
        let ds = westward_diagrams(4, 4);
        assert!(ds.iter().all(|d| d.is_connected() && d.is_westward() && d.len() <= 4));
        assert!(ds.contains(&crate::fixtures::compatible_square()));
        let singles = ds.iter().filter(|d| d.len() == 1).count();
        assert_eq!(singles, 4);
    }

    #[test]
    fn closed_ideals_respect_size() {
        let mut rng = seeded(1);
        for _ in 0..5 {
            let i = random_closed_ideal(&mut rng, 4, 3, 20, StabilityVariant::StronglyStable)
                .unwrap();
            assert!(i.len() <= 20);
            assert!(crate::stability::is_strongly_stable(&i).unwrap());
        }
    }
}
