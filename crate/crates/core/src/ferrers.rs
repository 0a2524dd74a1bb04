//! Ferrers and generalized Ferrers ideals, specialization, and shifted quasi-Ferrers
//! diagrams with their quasi-Borel moves.
//!
//! Diagram points are `(i, j)` with row `i` and column `j`, `1 <= i <= j`. A point
//! corresponds to the monomial `x_i x_j`. Rows are stored as half-open column
//! intervals `(mu_i, lambda_i]`.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::stability::{is_stable, x_set_in_order, ExchangeMode, OrderedGenerators};

/// A lattice point `(row, column)`.
pub type Point = (usize, usize);

/// A monomial ideal in `x_1..x_m, y_1..y_n` with the block split recorded.
///
/// Variable `i` is `x_i` for `i <= m` and `y_{i-m}` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteIdeal {
    pub x_count: usize,
    pub y_count: usize,
    pub ideal: MonomialIdeal,
}

impl BipartiteIdeal {
    pub fn new(x_count: usize, y_count: usize, ideal: MonomialIdeal) -> Result<Self> {
        if ideal.n() != x_count + y_count {
            return Err(Error::AmbientMismatch {
                expected: x_count + y_count,
                found: ideal.n(),
            });
        }
        Ok(Self {
            x_count,
            y_count,
            ideal,
        })
    }
}

fn check_ferrers_shape(lambda: &[usize], mu: &[usize]) -> Result<()> {
    if lambda.is_empty() || lambda.len() != mu.len() {
        return Err(Error::InvalidPartition(
            "lambda and mu must be non-empty and of equal length".into(),
        ));
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidPartition("lambda must be non-increasing".into()));
    }
    if mu.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidPartition("mu must be non-decreasing".into()));
    }
    if mu[mu.len() - 1] >= lambda[lambda.len() - 1] {
        return Err(Error::InvalidPartition("need mu_m < lambda_m".into()));
    }
    Ok(())
}

/// `I_{lambda - mu} = (x_i y_j : mu_i < j <= lambda_i)` in `m + lambda_1` variables.
pub fn generalized_ferrers_ideal(lambda: &[usize], mu: &[usize]) -> Result<BipartiteIdeal> {
    check_ferrers_shape(lambda, mu)?;
    let m = lambda.len();
    let n = lambda[0];
    let gens = (0..m).flat_map(|r| {
        ((mu[r] + 1)..=lambda[r]).map(move |j| Monomial::squarefree([r + 1, m + j], m + n))
    });
    BipartiteIdeal::new(m, n, MonomialIdeal::new(m + n, gens)?)
}

/// Substitute `y_i -> x_i` into `k = max(m, n)` variables and minimalize.
pub fn specialize(bi: &BipartiteIdeal) -> Result<MonomialIdeal> {
    let (m, n) = (bi.x_count, bi.y_count);
    let k = m.max(n);
    let gens = bi.ideal.generators().iter().map(|g| {
        let mut e = vec![0u32; k];
        for (v, &p) in g.exponents().iter().enumerate() {
            let target = if v < m { v } else { v - m };
            e[target] += p;
        }
        Monomial::new(e)
    });
    MonomialIdeal::new(k, gens)
}

/// `lambda - mu` with `i - 1 <= mu_i < lambda_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftedPartition {
    lambda: Vec<usize>,
    mu: Vec<usize>,
}

impl ShiftedPartition {
    pub fn new(lambda: Vec<usize>, mu: Vec<usize>) -> Result<Self> {
        if lambda.is_empty() || lambda.len() != mu.len() {
            return Err(Error::InvalidPartition(
                "lambda and mu must be non-empty and of equal length".into(),
            ));
        }
        for (r, (&l, &u)) in lambda.iter().zip(&mu).enumerate() {
            if u < r || u >= l {
                return Err(Error::InvalidPartition(format!(
                    "row {}: need {} <= mu < lambda, got mu={u}, lambda={l}",
                    r + 1,
                    r
                )));
            }
        }
        Ok(Self { lambda, mu })
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    pub fn diagram(&self) -> ShiftedDiagram {
        ShiftedDiagram {
            rows: self.mu.iter().copied().zip(self.lambda.iter().copied()).collect(),
        }
    }
}

/// A shifted quasi-Ferrers diagram `D_{lambda - mu}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftedDiagram {
    /// `(mu_i, lambda_i)` for rows `1..=h`
    rows: Vec<(usize, usize)>,
}

impl ShiftedDiagram {
    pub fn new(lambda: Vec<usize>, mu: Vec<usize>) -> Result<Self> {
        Ok(ShiftedPartition::new(lambda, mu)?.diagram())
    }

    /// Rebuild from a point set; every row `1..=h` must be a non-empty interval.
    pub fn from_points(points: &BTreeSet<Point>) -> Result<Self> {
        let h = points.iter().map(|p| p.0).max().ok_or_else(|| {
            Error::InvalidDiagram("no points".into())
        })?;
        let mut lambda = Vec::with_capacity(h);
        let mut mu = Vec::with_capacity(h);
        for i in 1..=h {
            let cols: Vec<usize> = points.iter().filter(|p| p.0 == i).map(|p| p.1).collect();
            let (Some(&lo), Some(&hi)) = (cols.first(), cols.last()) else {
                return Err(Error::InvalidDiagram(format!("row {i} is empty")));
            };
            if hi - lo + 1 != cols.len() {
                return Err(Error::InvalidDiagram(format!("row {i} is not an interval")));
            }
            mu.push(lo - 1);
            lambda.push(hi);
        }
        ShiftedDiagram::new(lambda, mu)
            .map_err(|e| Error::InvalidDiagram(e.to_string()))
    }

    /// Read the diagram off a degree-2 ideal via `x_i x_j <-> (i, j)`.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.equigenerated_degree() != Some(2) {
            return Err(Error::InvalidDiagram("ideal is not generated in degree 2".into()));
        }
        let points: BTreeSet<Point> = ideal
            .generators()
            .iter()
            .map(|g| {
                let s: Vec<usize> = g.supp().into_iter().collect();
                (s[0], *s.last().unwrap())
            })
            .collect();
        Self::from_points(&points)
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn lambda(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.1).collect()
    }

    pub fn mu(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.0).collect()
    }

    /// Column interval `(mu_i, lambda_i]` of row `i` as an inclusive range.
    pub fn row(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        let (u, l) = self.rows[i - 1];
        (u + 1)..=l
    }

    pub fn contains(&self, p: Point) -> bool {
        let (i, j) = p;
        i >= 1 && i <= self.rows.len() && {
            let (u, l) = self.rows[i - 1];
            u < j && j <= l
        }
    }

    /// Points in row-major order.
    pub fn points(&self) -> Vec<Point> {
        (1..=self.height())
            .flat_map(|i| self.row(i).map(move |j| (i, j)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|(u, l)| l - u).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of variables needed: the largest column.
    pub fn ambient(&self) -> usize {
        self.rows.iter().map(|r| r.1).max().unwrap_or(0)
    }

    /// Consecutive rows share a column.
    pub fn is_connected(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[0].0.max(w[1].0) < w[0].1.min(w[1].1))
    }

    /// `mu` non-decreasing, equivalently every horizontal good move points west.
    pub fn is_westward(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].0 <= w[1].0)
    }

    pub fn monomial(&self, p: Point) -> Monomial {
        point_monomial(p, self.ambient())
    }

    /// The shifted stable ideal `(x_i x_j : (i, j) in D)`.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.ambient();
        MonomialIdeal::new(n, self.points().into_iter().map(|p| point_monomial(p, n)))
    }

    /// The construction order: reverse of the point-removal sequence that keeps the
    /// diagram connected. `f_1` comes first.
    pub fn removal_order(&self) -> Result<Vec<Point>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut rows = self.rows.clone();
        let mut removed = Vec::with_capacity(self.len());
        while let Some(&(u, l)) = rows.last() {
            let h = rows.len();
            if h == 1 {
                if l - u == 1 {
                    removed.push((1, l));
                    rows.pop();
                } else {
                    removed.push((1, l));
                    rows[0].1 -= 1;
                }
                continue;
            }
            let (pu, pl) = rows[h - 2];
            // min of the overlap of rows h-1 and h
            let t = pu.max(u) + 1;
            debug_assert!(t <= pl.min(l));
            if u + 1 == t && l == t {
                removed.push((h, t));
                rows.pop();
            } else if l > t {
                removed.push((h, l));
                rows[h - 1].1 -= 1;
            } else {
                removed.push((h, u + 1));
                rows[h - 1].0 += 1;
            }
        }
        removed.reverse();
        Ok(removed)
    }

    /// The removal order as an ordered generating set of the diagram ideal.
    pub fn ordered_generators(&self) -> Result<OrderedGenerators> {
        let n = self.ambient();
        let order = self
            .removal_order()?
            .into_iter()
            .map(|p| point_monomial(p, n))
            .collect();
        OrderedGenerators::new(self.ideal()?, order)
    }

    /// Nearest diagram points in the same column, above and below.
    fn column_neighbors(&self, p: Point) -> (Option<Point>, Option<Point>) {
        let (i, j) = p;
        let above = (1..i).rev().map(|r| (r, j)).find(|&q| self.contains(q));
        let below = (i + 1..=self.height()).map(|r| (r, j)).find(|&q| self.contains(q));
        (above, below)
    }

    /// All minimal quasi-Borel moves oriented towards the earlier endpoint of `order`.
    pub fn good_moves(&self, order: &[Point]) -> Result<Vec<QuasiBorelMove>> {
        let mut sorted: Vec<Point> = order.to_vec();
        sorted.sort();
        if sorted != self.points() {
            return Err(Error::InvalidDiagram(
                "order is not a permutation of the diagram points".into(),
            ));
        }
        let pos: HashMap<Point, usize> = order.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let mut out = Vec::new();
        for &p in order {
            let (i, j) = p;
            let (above, below) = self.column_neighbors(p);
            let mut candidates = vec![];
            if j > 1 && self.contains((i, j - 1)) {
                candidates.push(((i, j - 1), Axis::Horizontal));
            }
            if self.contains((i, j + 1)) {
                candidates.push(((i, j + 1), Axis::Horizontal));
            }
            candidates.extend(above.map(|q| (q, Axis::Vertical)));
            candidates.extend(below.map(|q| (q, Axis::Vertical)));
            for (q, axis) in candidates {
                if pos[&q] < pos[&p] {
                    let length = i.abs_diff(q.0).max(j.abs_diff(q.1));
                    out.push(QuasiBorelMove {
                        from: p,
                        to: q,
                        axis,
                        length,
                        good: true,
                        minimal: true,
                    });
                }
            }
        }
        out.sort_by_key(|m| (pos[&m.from], m.axis, pos[&m.to]));
        Ok(out)
    }

    /// Compatibility via the row criterion:
    /// `(i', i), (i, j) in D` with `i' < i < j` forces `(i, j - 1) in D`.
    pub fn is_compatible(&self) -> Result<bool> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if !self.is_westward() {
            return Err(Error::EastwardMoves);
        }
        for i in 2..=self.height() {
            let column_i_above = (1..i).any(|ip| self.contains((ip, i)));
            if !column_i_above {
                continue;
            }
            for j in self.row(i) {
                if j > i && !self.contains((i, j - 1)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Compatibility straight from the definition: a point has two good moves exactly
    /// when its exchange set `X_k` has two elements.
    pub fn is_compatible_by_definition(&self) -> Result<bool> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if !self.is_westward() {
            return Err(Error::EastwardMoves);
        }
        let order = self.removal_order()?;
        let moves = self.good_moves(&order)?;
        let og = self.ordered_generators()?;
        for (k, p) in order.iter().enumerate() {
            let count = moves.iter().filter(|m| m.from == *p).count();
            let xk = x_set_in_order(&og, k, ExchangeMode::AnyOther)?;
            if (count == 2) != (xk.len() == 2) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn point_monomial(p: Point, n: usize) -> Monomial {
    let mut e = vec![0u32; n];
    e[p.0 - 1] += 1;
    e[p.1 - 1] += 1;
    Monomial::new(e)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    Horizontal,
    Vertical,
}

/// A move between two diagram points sharing a row or a column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuasiBorelMove {
    pub from: Point,
    pub to: Point,
    pub axis: Axis,
    pub length: usize,
    pub good: bool,
    pub minimal: bool,
}

impl QuasiBorelMove {
    pub fn is_westward(&self) -> bool {
        self.axis == Axis::Horizontal && self.to.1 < self.from.1
    }

    pub fn is_northward(&self) -> bool {
        self.axis == Axis::Vertical && self.to.0 < self.from.0
    }
}

/// The 2-cell and 1-cell counts `(w1, w2)` of a stable degree-2 ideal's dual
/// resolution, read off the column sets `Y_j`.
pub fn betti_w_formula(ideal: &MonomialIdeal) -> Result<(usize, usize)> {
    if ideal.require_equigenerated()? != 2 {
        return Err(Error::InvalidDiagram("stable ideal must be of degree 2".into()));
    }
    if !is_stable(ideal)? {
        return Err(Error::NotClosed("stable"));
    }
    let n = ideal.n();
    let mut y: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + 1];
    let mut h = 0;
    let mut e = 0;
    for g in ideal.generators() {
        let s: Vec<usize> = g.supp().into_iter().collect();
        let (lo, hi) = (s[0], *s.last().unwrap());
        y[hi].insert(lo);
        h = h.max(lo);
        e = e.max(hi);
    }
    for j in 1..=h {
        if y[j] != (1..=j).collect::<BTreeSet<_>>() {
            return Err(Error::NotClosed("stable (column containment)"));
        }
    }
    for j in h + 1..=e {
        if !y[j].is_subset(&y[j - 1]) {
            return Err(Error::NotClosed("stable (column containment)"));
        }
    }
    let low: usize = (2..=h).map(|j| j - 2).sum();
    let w2 = low + (h + 1..=e).map(|j| y[j].len() - 1).sum::<usize>();
    let w1 = 2 * (h - 1) + (e - h);
    Ok((w1, w2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{ideal, mono};

    fn quasi_exam() -> ShiftedDiagram {
        ShiftedDiagram::new(vec![6, 5, 4, 7], vec![1, 3, 2, 3]).unwrap()
    }

    #[test]
    fn generalized_ferrers_443() {
        let bi = generalized_ferrers_ideal(&[4, 4, 3], &[0, 1, 2]).unwrap();
        // x1..x3 then y1..y4 as variables 4..7
        let expected = ideal(
            &[
                "x1*x4", "x1*x5", "x1*x6", "x1*x7", "x2*x5", "x2*x6", "x2*x7", "x3*x6",
            ],
            7,
        );
        assert_eq!(bi.ideal, expected);
        assert_eq!(
            specialize(&bi).unwrap(),
            ideal(
                &["x1^2", "x1*x2", "x1*x3", "x1*x4", "x2^2", "x2*x3", "x2*x4", "x3^2"],
                4
            )
        );
    }

    #[test]
    fn classical_ferrers_count() {
        let bi = generalized_ferrers_ideal(&[4, 4, 3], &[0, 0, 0]).unwrap();
        assert_eq!(bi.ideal.len(), 11);
        let one = generalized_ferrers_ideal(&[1], &[0]).unwrap();
        assert_eq!(one.ideal, ideal(&["x1*x2"], 2));
        assert!(generalized_ferrers_ideal(&[2, 3], &[0, 0]).is_err());
        assert!(generalized_ferrers_ideal(&[3, 3], &[1, 0]).is_err());
    }

    #[test]
    fn specialize_less_example() {
        let i = ideal(&["x1*x3", "x1*x4", "x1*x5", "x2*x3", "x2*x4"], 5);
        let bi = BipartiteIdeal::new(2, 3, i).unwrap();
        let s = specialize(&bi).unwrap();
        assert_eq!(s, ideal(&["x1^2", "x1*x2", "x1*x3", "x2^2"], 3));
        let single = BipartiteIdeal::new(1, 2, ideal(&["x1*x3"], 3)).unwrap();
        assert_eq!(specialize(&single).unwrap(), ideal(&["x1*x2"], 2));
        assert!(BipartiteIdeal::new(1, 1, ideal(&["x1*x3"], 3)).is_err());
    }

    #[test]
    fn diagram_ideals() {
        let d = quasi_exam();
        assert!(d.is_connected());
        assert_eq!(
            d.ideal().unwrap(),
            ideal(
                &[
                    "x1*x2", "x1*x3", "x1*x4", "x1*x5", "x1*x6", "x2*x4", "x2*x5", "x3*x4",
                    "x3^2", "x4^2", "x4*x5", "x4*x6", "x4*x7",
                ],
                7
            )
        );
        let c = ShiftedDiagram::new(vec![3, 3], vec![1, 1]).unwrap();
        assert_eq!(c.ideal().unwrap(), ideal(&["x1*x2", "x1*x3", "x2^2", "x2*x3"], 3));
        let p = ShiftedDiagram::new(vec![1], vec![0]).unwrap();
        assert_eq!(p.ideal().unwrap(), ideal(&["x1^2"], 1));
        assert!(ShiftedDiagram::new(vec![3, 3], vec![1, 0]).is_err());
    }

    #[test]
    fn connectivity() {
        let d = ShiftedDiagram::new(vec![2, 3], vec![0, 2]).unwrap();
        assert!(!d.is_connected());
        assert_eq!(d.ideal(), Err(Error::Disconnected));
        assert!(ShiftedDiagram::new(vec![4], vec![1]).unwrap().is_connected());
    }

    #[test]
    fn removal_order_of_quasi_exam() {
        let order = quasi_exam().removal_order().unwrap();
        let expected = vec![
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 6),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 3),
            (4, 4),
            (4, 5),
            (4, 6),
            (4, 7),
        ];
        assert_eq!(order, expected);
        let single = ShiftedDiagram::new(vec![1], vec![0]).unwrap();
        assert_eq!(single.removal_order().unwrap(), vec![(1, 1)]);
        let c = ShiftedDiagram::new(vec![3, 3], vec![1, 1]).unwrap();
        assert_eq!(c.removal_order().unwrap(), vec![(1, 2), (1, 3), (2, 2), (2, 3)]);
    }

    #[test]
    fn good_moves_examples() {
        let d = quasi_exam();
        let moves = d.good_moves(&d.removal_order().unwrap()).unwrap();
        let has = |a: Point, b: Point| moves.iter().any(|m| m.from == a && m.to == b);
        assert!(has((4, 4), (3, 4)));
        assert!(has((1, 3), (1, 2)));
        for m in &moves {
            assert!(m.good && m.minimal);
        }
        let row = ShiftedDiagram::new(vec![5], vec![1]).unwrap();
        let rm = row.good_moves(&row.removal_order().unwrap()).unwrap();
        assert_eq!(rm.len(), 3);
        assert!(rm.iter().all(|m| m.length == 1 && m.is_westward()));

        let c = ShiftedDiagram::new(vec![3, 3], vec![1, 1]).unwrap();
        let cm = c.good_moves(&c.removal_order().unwrap()).unwrap();
        let pairs: BTreeSet<(Point, Point)> = cm.iter().map(|m| (m.from, m.to)).collect();
        let expected: BTreeSet<(Point, Point)> = [
            ((1, 3), (1, 2)),
            ((2, 3), (2, 2)),
            ((2, 2), (1, 2)),
            ((2, 3), (1, 3)),
        ]
        .into();
        assert_eq!(pairs, expected);
        assert!(c.good_moves(&[(1, 2)]).is_err());
    }

    #[test]
    fn compatibility_examples() {
        let c = ShiftedDiagram::new(vec![3, 3], vec![1, 1]).unwrap();
        assert!(c.is_compatible().unwrap());
        let stable = ShiftedDiagram::new(vec![5, 4, 3], vec![0, 1, 2]).unwrap();
        assert!(stable.is_compatible().unwrap());
        let bad = ShiftedDiagram::new(vec![4, 5], vec![1, 3]).unwrap();
        assert!(bad.is_connected());
        assert!(!bad.is_compatible().unwrap());
        assert!(!bad.is_compatible_by_definition().unwrap());
        assert_eq!(quasi_exam().is_compatible(), Err(Error::EastwardMoves));
        // dropping (3, 3) from the quasi example leaves (2, 4) with |X| = 2 but one move
        let dropped = ShiftedDiagram::new(vec![6, 5, 4, 7], vec![1, 3, 3, 3]).unwrap();
        assert!(!dropped.is_compatible().unwrap());
        assert!(!dropped.is_compatible_by_definition().unwrap());
    }

    #[test]
    fn from_points_and_ideal() {
        let c = ShiftedDiagram::new(vec![3, 3], vec![1, 1]).unwrap();
        let back = ShiftedDiagram::from_ideal(&c.ideal().unwrap()).unwrap();
        assert_eq!(back, c);
        let gap: BTreeSet<Point> = [(1, 1), (1, 3)].into();
        assert!(ShiftedDiagram::from_points(&gap).is_err());
        let missing_row: BTreeSet<Point> = [(2, 2)].into();
        assert!(ShiftedDiagram::from_points(&missing_row).is_err());
    }

    #[test]
    fn w_formula_examples() {
        assert_eq!(betti_w_formula(&ideal(&["x1^2", "x1*x2"], 2)).unwrap(), (1, 0));
        assert_eq!(betti_w_formula(&ideal(&["x1^2"], 1)).unwrap(), (0, 0));
        assert_eq!(
            betti_w_formula(&ideal(&["x1^2", "x1*x2", "x2^2"], 2)).unwrap(),
            (2, 0)
        );
        assert!(betti_w_formula(&ideal(&["x1*x2", "x1*x3", "x2^2", "x2*x3"], 3)).is_err());
        assert!(betti_w_formula(&ideal(&["x1^3"], 1)).is_err());
        let _ = mono("x1", 1);
    }
}
