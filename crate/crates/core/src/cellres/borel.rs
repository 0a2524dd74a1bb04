//! The cube complex of a strongly stable equigenerated ideal.

use std::collections::{BTreeSet, HashMap};

use crate::cellres::complex::{Cell, CellDescriptor, LabeledCellComplex};
use crate::dual::{is_a_determined, ExponentBound};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::stability::{borel_move, is_strongly_stable};

fn subsets_of(items: &[usize]) -> Vec<Vec<usize>> {
    let k = items.len();
    let mut out: Vec<Vec<usize>> = (0u32..(1 << k))
        .map(|mask| (0..k).filter(|b| mask >> b & 1 == 1).map(|b| items[b]).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Cells `C(m, sigma)` for `m in G(I)` and `sigma ⊆ supp_1(m)`, labeled
/// `(x^a / m) x^sigma`.
pub fn build_borel_complex(ideal: &MonomialIdeal, a: &ExponentBound) -> Result<LabeledCellComplex> {
    ideal.require_proper_nonzero()?;
    if !is_strongly_stable(ideal)? {
        return Err(Error::NotClosed("strongly stable"));
    }
    if !is_a_determined(ideal, a)? {
        return Err(Error::NotDetermined(a.to_string()));
    }
    let n = ideal.n();
    let top = a.monomial();

    // (apex, sigma) for every cell, grouped by dimension
    let mut specs: Vec<(Monomial, Vec<usize>)> = Vec::new();
    for m in ideal.generators() {
        let s1: Vec<usize> = m.supp1().into_iter().collect();
        for sigma in subsets_of(&s1) {
            specs.push((m.clone(), sigma));
        }
    }
    specs.sort_by_key(|x| x.1.len());

    let mut cells: Vec<Cell> = Vec::with_capacity(specs.len());
    let mut by_vertices: HashMap<BTreeSet<Monomial>, usize> = HashMap::new();
    let mut vertex_id: HashMap<Monomial, usize> = HashMap::new();
    for (m, sigma) in specs {
        let id = cells.len();
        let corners: BTreeSet<Monomial> = subsets_of(&sigma)
            .iter()
            .map(|tau| borel_move(&m, &tau.iter().copied().collect()))
            .collect::<Result<_>>()?;
        if let Some(&other) = by_vertices.get(&corners) {
            return Err(Error::Complex(format!(
                "C({m}, {sigma:?}) coincides with cell {other}"
            )));
        }
        let label = top
            .quotient(&m)?
            .ok_or_else(|| Error::NotDetermined(a.to_string()))?
            .mul(&Monomial::squarefree(sigma.iter().copied(), n))?;
        let facets = if sigma.is_empty() {
            vertex_id.insert(m.clone(), id);
            Vec::new()
        } else {
            let mut facets = Vec::with_capacity(2 * sigma.len());
            for (j, &i) in sigma.iter().enumerate() {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let rest: Vec<usize> = sigma.iter().copied().filter(|&t| t != i).collect();
                let same = facet_id(&by_vertices, &m, &rest)?;
                let moved = borel_move(&m, &BTreeSet::from([i]))?;
                let parallel = facet_id(&by_vertices, &moved, &rest)?;
                facets.push((same, sign));
                facets.push((parallel, -sign));
            }
            facets
        };
        let vertices = corners.iter().map(|v| vertex_id[v]).collect();
        by_vertices.insert(corners, id);
        cells.push(Cell {
            id,
            dim: sigma.len(),
            descriptor: CellDescriptor::Borel { apex: m, sigma },
            label,
            vertices,
            facets,
        });
    }
    let x = LabeledCellComplex::from_cells(n, cells)?;
    x.check_incidence()?;
    Ok(x)
}

fn facet_id(
    by_vertices: &HashMap<BTreeSet<Monomial>, usize>,
    apex: &Monomial,
    sigma: &[usize],
) -> Result<usize> {
    let corners: BTreeSet<Monomial> = subsets_of(sigma)
        .iter()
        .map(|tau| borel_move(apex, &tau.iter().copied().collect()))
        .collect::<Result<_>>()?;
    by_vertices
        .get(&corners)
        .copied()
        .ok_or_else(|| Error::Complex(format!("missing facet C({apex}, {sigma:?})")))
}
