//! The planar complex induced by the good moves of a compatible shifted diagram.

use std::collections::HashMap;

use crate::cellres::complex::{Cell, CellDescriptor, LabeledCellComplex};
use crate::dual::{is_a_determined, ExponentBound};
use crate::error::{Error, Result};
use crate::ferrers::{Axis, Point, ShiftedDiagram};
use crate::monomial::Monomial;

/// Vertices are diagram points labeled `x^a / (x_i x_j)`, edges are good moves labeled
/// `x^a / x_i` (horizontal) or `x^a / x_j` (vertical), and every point with two good
/// moves anchors a rectangle labeled `x^a`.
///
/// Edges are oriented from the later point to the earlier one, so `d[p -> q] = q - p`.
/// Rectangles are oriented counterclockwise.
pub fn build_planar_complex(d: &ShiftedDiagram, a: &ExponentBound) -> Result<LabeledCellComplex> {
    if !d.is_compatible()? {
        return Err(Error::NotCompatible);
    }
    let ideal = d.ideal()?;
    if !is_a_determined(&ideal, a)? {
        return Err(Error::NotDetermined(a.to_string()));
    }
    let n = ideal.n();
    let top = a.monomial();
    let divide = |m: &Monomial| -> Result<Monomial> {
        top.quotient(m)?
            .ok_or_else(|| Error::NotDetermined(a.to_string()))
    };

    let order = d.removal_order()?;
    let moves = d.good_moves(&order)?;
    let mut cells: Vec<Cell> = Vec::new();
    let mut vertex: HashMap<Point, usize> = HashMap::new();
    for &p in &order {
        let id = cells.len();
        vertex.insert(p, id);
        cells.push(Cell {
            id,
            dim: 0,
            descriptor: CellDescriptor::Vertex { point: p },
            label: divide(&d.monomial(p))?,
            vertices: vec![id],
            facets: Vec::new(),
        });
    }
    let mut edge: HashMap<(Point, Point), usize> = HashMap::new();
    for mv in &moves {
        let id = cells.len();
        let (from, to) = (mv.from, mv.to);
        let (descriptor, var) = match mv.axis {
            Axis::Horizontal => (CellDescriptor::HEdge { from, to }, from.0),
            Axis::Vertical => (CellDescriptor::VEdge { from, to }, from.1),
        };
        edge.insert((from, to), id);
        cells.push(Cell {
            id,
            dim: 1,
            descriptor,
            label: divide(&Monomial::var(var, n))?,
            vertices: vec![vertex[&from], vertex[&to]],
            facets: vec![(vertex[&to], 1), (vertex[&from], -1)],
        });
    }
    let lookup = |from: Point, to: Point| -> Result<usize> {
        edge.get(&(from, to)).copied().ok_or_else(|| {
            Error::Complex(format!("rectangle side {from:?} -> {to:?} is not a good move"))
        })
    };
    let mut rectangles = Vec::new();
    for &q1 in &order {
        let out: Vec<_> = moves.iter().filter(|m| m.from == q1).collect();
        if out.len() != 2 {
            continue;
        }
        let (t1, t2) = q1;
        let west = out.iter().find(|m| m.axis == Axis::Horizontal);
        let north = out.iter().find(|m| m.axis == Axis::Vertical);
        let (Some(west), Some(north)) = (west, north) else {
            return Err(Error::Complex(format!("point {q1:?} has two parallel good moves")));
        };
        let p0 = west.to;
        let q2 = north.to;
        let t0 = q2.0;
        let ps = (t0, t2 - 1);
        if p0 != (t1, t2 - 1) || !d.contains(ps) {
            return Err(Error::Complex(format!("no rectangle at {q1:?}")));
        }
        let mut facets = vec![(lookup(q1, q2)?, 1), (lookup(q2, ps)?, 1)];
        // walk up the left column from p0 to ps
        let left: Vec<Point> = (t0..=t1)
            .rev()
            .map(|r| (r, t2 - 1))
            .filter(|&p| d.contains(p))
            .collect();
        for w in left.windows(2) {
            facets.push((lookup(w[0], w[1])?, -1));
        }
        facets.push((lookup(q1, p0)?, -1));
        let mut vertices: Vec<usize> = left.iter().map(|p| vertex[p]).collect();
        vertices.push(vertex[&q1]);
        vertices.push(vertex[&q2]);
        vertices.sort_unstable();
        rectangles.push((q1, t0, facets, vertices));
    }
    for (corner, top_row, facets, vertices) in rectangles {
        let id = cells.len();
        cells.push(Cell {
            id,
            dim: 2,
            descriptor: CellDescriptor::Rectangle { corner, top_row },
            label: top.clone(),
            vertices,
            facets,
        });
    }
    let x = LabeledCellComplex::from_cells(n, cells)?;
    x.check_incidence()?;
    x.check_labels()?;
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellres::free::{free_complex, is_minimal};
    use crate::fixtures::{compatible_square, compatible_square_bound, incompatible_pair, quasi_diagram};
    use crate::monomial::mono;

    #[test]
    fn compatible_square_complex() {
        let d = compatible_square();
        let a = ExponentBound::new(compatible_square_bound());
        let x = build_planar_complex(&d, &a).unwrap();
        assert_eq!(x.f_vector(), vec![4, 4, 1]);
        assert_eq!(x.cell(0).label, mono("x1^2*x2^3*x3^2", 3));
        let f = free_complex(&x).unwrap();
        assert_eq!(f.ranks(), vec![1, 4, 4, 1]);
        assert!(is_minimal(&f));
        let r = x.restrict_leq(&mono("x1^3*x2^4*x3", 3));
        assert_eq!(r.f_vector(), vec![2, 1]);
        let points: Vec<_> = r
            .cells_of_dim(0)
            .map(|c| c.descriptor.clone())
            .collect();
        assert_eq!(
            points,
            vec![
                CellDescriptor::Vertex { point: (1, 3) },
                CellDescriptor::Vertex { point: (2, 3) }
            ]
        );
    }

    #[test]
    fn single_row() {
        let d = ShiftedDiagram::new(vec![3], vec![1]).unwrap();
        let x = build_planar_complex(&d, &ExponentBound::new(vec![1, 1, 1])).unwrap();
        assert_eq!(x.f_vector(), vec![2, 1]);
    }

    #[test]
    fn tall_rectangle() {
        // column 5 skips row 2, so the rectangle at (3, 5) has three left edges
        let d = ShiftedDiagram::new(vec![5, 4, 5], vec![0, 1, 2]).unwrap();
        let a = ExponentBound::newton(&d.ideal().unwrap()).unwrap();
        let x = build_planar_complex(&d, &a).unwrap();
        assert_eq!(x.euler_characteristic(), 1);
        let tall = x
            .cells_of_dim(2)
            .find(|c| c.descriptor == CellDescriptor::Rectangle { corner: (3, 5), top_row: 1 })
            .unwrap();
        assert_eq!(tall.facets.len(), 5);
        assert!(is_minimal(&free_complex(&x).unwrap()));
    }

    #[test]
    fn rejects_bad_diagrams() {
        let q = quasi_diagram();
        let a = ExponentBound::new(vec![2; 7]);
        assert_eq!(build_planar_complex(&q, &a), Err(Error::EastwardMoves));
        let bad = incompatible_pair();
        let a = ExponentBound::new(vec![2; 5]);
        assert_eq!(build_planar_complex(&bad, &a), Err(Error::NotCompatible));
        let c = compatible_square();
        assert!(build_planar_complex(&c, &ExponentBound::new(vec![1, 1, 1])).is_err());
    }
}
