//! Multigraded Betti numbers via upper Koszul simplicial complexes, and the
//! Bayer–Sturmfels acyclicity sweep for labeled cell complexes.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::betti::BettiTable;
use crate::cellres::LabeledCellComplex;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::oracle::homology::simplicial_chain_complex;
use crate::oracle::linalg::Field;

/// Largest lcm lattice the oracle will walk.
pub const LATTICE_LIMIT: usize = 200_000;

/// All lcms of non-empty subsets of `gens`, sorted.
pub fn lcm_lattice(gens: &[Monomial]) -> Result<Vec<Monomial>> {
    let mut seen: BTreeSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let l = x.lcm(g)?;
                if !seen.contains(&l) {
                    seen.insert(l.clone());
                    next.push(l);
                }
            }
        }
        if seen.len() > LATTICE_LIMIT {
            return Err(Error::ScaleGuard(format!(
                "lcm lattice exceeds {LATTICE_LIMIT} elements"
            )));
        }
        frontier = next;
    }
    Ok(seen.into_iter().collect())
}

/// Facets of `K^b = { tau ⊆ supp(b) : x^{b - tau} in I }` as bitmasks.
fn upper_koszul_facets(ideal: &MonomialIdeal, b: &Monomial) -> Vec<u32> {
    ideal
        .generators()
        .iter()
        .filter(|g| g.divides_unchecked(b))
        .map(|g| {
            g.exponents()
                .iter()
                .zip(b.exponents())
                .enumerate()
                .filter(|(_, (gi, bi))| bi > gi)
                .map(|(i, _)| 1u32 << i)
                .sum()
        })
        .collect()
}

/// `beta_{i,b}(I) = dim H~_{i-1}(K^b)` over the rationals.
pub fn betti_oracle(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_oracle_over(ideal, Field::Q)
}

pub fn betti_oracle_over(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.n() > 32 {
        return Err(Error::ScaleGuard(format!("{} variables", ideal.n())));
    }
    let lattice = lcm_lattice(ideal.generators())?;
    let per_degree: Vec<(Monomial, Vec<usize>)> = lattice
        .into_par_iter()
        .map(|b| {
            let facets = upper_koszul_facets(ideal, &b);
            let dims = simplicial_chain_complex(&facets).reduced_homology_dims(field);
            (b, dims)
        })
        .collect();
    let mut table = BettiTable::new();
    for (b, dims) in per_degree {
        for (i, &h) in dims.iter().enumerate() {
            table.add(i, b.clone(), h);
        }
    }
    Ok(table)
}

/// `X_{<= beta}` has vanishing reduced homology; a restriction without vertices
/// counts as acyclic.
pub fn is_acyclic_leq(x: &LabeledCellComplex, beta: &Monomial, field: Field) -> bool {
    let r = x.restrict_leq(beta);
    r.is_empty() || r.chain_complex().is_acyclic(field)
}

/// Check acyclicity of `X_{<= beta}` for every `beta` in the lcm lattice of the vertex
/// labels. Returns the smallest failing `beta`, if any.
pub fn bayer_sturmfels(x: &LabeledCellComplex, field: Field) -> Result<Option<Monomial>> {
    let labels: Vec<Monomial> = x.cells_of_dim(0).map(|c| c.label.clone()).collect();
    let lattice = lcm_lattice(&labels)?;
    Ok(lattice
        .into_par_iter()
        .filter(|b| !is_acyclic_leq(x, b, field))
        .min())
}

/// Every non-zero `beta_{i,j}` sits at `j = d + i`.
pub fn has_linear_resolution(ideal: &MonomialIdeal) -> Result<bool> {
    let d = ideal.require_equigenerated()?;
    let table = betti_oracle(ideal)?;
    let linear = table.entries().all(|(i, b, _)| b.degree() == d + i as u32);
    Ok(linear)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellres::{build_borel_complex, build_planar_complex, taylor_complex};
    use crate::dual::{newton_dual, ExponentBound};
    use crate::fixtures;
    use crate::monomial::{ideal, mono};

    #[test]
    fn koszul_two_variables() {
        let t = betti_oracle(&ideal(&["x1", "x2"], 2)).unwrap();
        assert_eq!(t.totals(), vec![2, 1]);
        assert_eq!(t.get(1, &mono("x1*x2", 2)), 1);
        assert!(has_linear_resolution(&ideal(&["x1", "x2"], 2)).unwrap());
    }

    #[test]
    fn generator_count_is_beta_zero() {
        let i = ideal(&["x1^2", "x1*x2^3", "x2^4", "x1*x3"], 3);
        assert_eq!(betti_oracle(&i).unwrap().totals()[0], 4);
    }

    #[test]
    fn borel_cube_dual() {
        let (_, dual) = newton_dual(&fixtures::borel_cube()).unwrap();
        let t = betti_oracle(&dual).unwrap();
        assert_eq!(t.totals(), vec![14, 21, 9, 1]);
        assert!(has_linear_resolution(&dual).unwrap());
        assert_eq!(betti_oracle_over(&dual, Field::F2).unwrap(), t);
    }

    #[test]
    fn stable_not_strongly_dual_is_not_linear() {
        let (_, dual) = newton_dual(&fixtures::stable_not_strongly()).unwrap();
        assert!(!has_linear_resolution(&dual).unwrap());
    }

    #[test]
    fn acyclicity_conventions() {
        let x = taylor_complex(&[mono("x1", 2), mono("x2", 2)]).unwrap();
        assert!(is_acyclic_leq(&x, &Monomial::one(2), Field::Q));
        assert!(is_acyclic_leq(&x, &mono("x1", 2), Field::Q));
        assert_eq!(bayer_sturmfels(&x, Field::Q).unwrap(), None);
    }

    #[test]
    fn sweeps_pass_on_constructed_complexes() {
        let c = fixtures::compatible_square();
        let a = ExponentBound::new(fixtures::compatible_square_bound());
        let x = build_planar_complex(&c, &a).unwrap();
        for f in Field::ALL {
            assert_eq!(bayer_sturmfels(&x, f).unwrap(), None);
        }
        let i = fixtures::borel_cube();
        let x = build_borel_complex(&i, &ExponentBound::newton(&i).unwrap()).unwrap();
        assert_eq!(bayer_sturmfels(&x, Field::Q).unwrap(), None);
    }

    #[test]
    fn hollow_complex_fails_the_sweep() {
        // boundary of a triangle with all labels equal to the same monomial
        let mut x = taylor_complex(&[mono("x1", 3), mono("x2", 3), mono("x3", 3)]).unwrap();
        let cells: Vec<_> = x.cells().iter().filter(|c| c.dim < 2).cloned().collect();
        x = LabeledCellComplex::from_cells(3, cells).unwrap();
        assert_eq!(
            bayer_sturmfels(&x, Field::Q).unwrap(),
            Some(mono("x1*x2*x3", 3))
        );
    }
}
