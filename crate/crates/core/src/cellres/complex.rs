//! Labeled cell complexes stored combinatorially.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ferrers::{Axis, Point};
use crate::monomial::Monomial;
use crate::oracle::homology::ChainComplex;
use crate::oracle::linalg::IntMatrix;

/// How a cell was produced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CellDescriptor {
    /// `C(m, sigma)`: the cube spanned by `m -> tau`, `tau ⊆ sigma`.
    Borel { apex: Monomial, sigma: Vec<usize> },
    Vertex { point: Point },
    HEdge { from: Point, to: Point },
    VEdge { from: Point, to: Point },
    /// Rectangle with lower-right corner `corner`, spanning rows `top_row..=corner.0`
    /// and columns `corner.1 - 1..=corner.1`.
    Rectangle { corner: Point, top_row: usize },
    /// A face of a simplex on generator indices.
    Simplex { indices: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub id: usize,
    pub dim: usize,
    pub descriptor: CellDescriptor,
    pub label: Monomial,
    /// Ids of the 0-cells in the closure.
    pub vertices: Vec<usize>,
    /// `(facet id, incidence sign)`; empty for vertices, whose only facet is the empty cell
    /// with sign `+1`.
    pub facets: Vec<(usize, i32)>,
}

/// A complex of labeled cells. Cells are sorted by dimension and `cells[k].id == k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledCellComplex {
    n: usize,
    cells: Vec<Cell>,
}

impl LabeledCellComplex {
    /// Assemble from cells listed by dimension with ids equal to positions.
    pub fn from_cells(n: usize, cells: Vec<Cell>) -> Result<Self> {
        for (k, c) in cells.iter().enumerate() {
            if c.id != k {
                return Err(Error::Complex(format!("cell {k} carries id {}", c.id)));
            }
            if k > 0 && cells[k - 1].dim > c.dim {
                return Err(Error::Complex("cells are not sorted by dimension".into()));
            }
            if c.label.n() != n {
                return Err(Error::AmbientMismatch {
                    expected: n,
                    found: c.label.n(),
                });
            }
            for &(f, _) in &c.facets {
                if f >= k || cells[f].dim + 1 != c.dim {
                    return Err(Error::Complex(format!("cell {k} has a bad facet {f}")));
                }
            }
            if (c.dim == 0) != c.facets.is_empty() {
                return Err(Error::Complex(format!("cell {k} has the wrong facet count")));
            }
        }
        Ok(Self { n, cells })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, id: usize) -> &Cell {
        &self.cells[id]
    }

    pub fn cells_of_dim(&self, d: usize) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(move |c| c.dim == d)
    }

    pub fn dim(&self) -> Option<usize> {
        self.cells.last().map(|c| c.dim)
    }

    /// Number of cells in each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim().map_or(0, |d| d + 1)];
        for c in &self.cells {
            f[c.dim] += 1;
        }
        f
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// lcm of all cell labels, or `None` for the empty complex.
    pub fn label_lcm(&self) -> Option<Monomial> {
        let mut it = self.cells.iter().map(|c| &c.label);
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, l| acc.lcm(l).expect("same ambient")))
    }

    /// Each label must equal the lcm of the labels of the cell's vertices.
    pub fn check_labels(&self) -> Result<()> {
        for c in &self.cells {
            let mut l = Monomial::one(self.n);
            for &v in &c.vertices {
                if self.cells[v].dim != 0 {
                    return Err(Error::Complex(format!("cell {} lists non-vertex {v}", c.id)));
                }
                l = l.lcm(&self.cells[v].label)?;
            }
            if l != c.label {
                return Err(Error::Complex(format!(
                    "cell {} has label {} but its vertices give {l}",
                    c.id, c.label
                )));
            }
        }
        Ok(())
    }

    /// Composite boundary vanishes: for every cell `P` and codimension-2 face `R` the
    /// signed count of chains `R < Q < P` is zero. The empty cell is the common facet of
    /// all vertices.
    pub fn check_incidence(&self) -> Result<()> {
        for p in &self.cells {
            if p.dim == 0 {
                continue;
            }
            let mut acc: BTreeMap<Option<usize>, i32> = BTreeMap::new();
            for &(q, e1) in &p.facets {
                let q = &self.cells[q];
                if q.dim == 0 {
                    *acc.entry(None).or_insert(0) += e1;
                } else {
                    for &(r, e2) in &q.facets {
                        *acc.entry(Some(r)).or_insert(0) += e1 * e2;
                    }
                }
            }
            if let Some((r, v)) = acc.into_iter().find(|(_, v)| *v != 0) {
                let face = r.map_or("the empty cell".to_string(), |r| format!("cell {r}"));
                return Err(Error::SignLaw(format!(
                    "boundary of boundary of cell {} has coefficient {v} on {face}",
                    p.id
                )));
            }
        }
        Ok(())
    }

    /// The subcomplex of cells whose label divides `beta`, renumbered.
    pub fn restrict_leq(&self, beta: &Monomial) -> LabeledCellComplex {
        let mut map: HashMap<usize, usize> = HashMap::new();
        let mut cells = Vec::new();
        for c in &self.cells {
            if !c.label.divides(beta).unwrap_or(false) {
                continue;
            }
            let id = cells.len();
            map.insert(c.id, id);
            cells.push(c.clone());
        }
        for c in &mut cells {
            c.id = map[&c.id];
            // faces of a kept cell have dividing labels, so they are kept too
            c.vertices = c.vertices.iter().map(|v| map[v]).collect();
            c.facets = c.facets.iter().map(|&(f, s)| (map[&f], s)).collect();
        }
        LabeledCellComplex { n: self.n, cells }
    }

    /// Cellular chain complex augmented by the empty cell in degree `-1`.
    pub fn chain_complex(&self) -> ChainComplex {
        let top = self.dim().map_or(0, |d| d + 1);
        let mut local = vec![0usize; self.cells.len()];
        let mut sizes = vec![1usize];
        sizes.resize(top + 1, 0);
        for c in &self.cells {
            local[c.id] = sizes[c.dim + 1];
            sizes[c.dim + 1] += 1;
        }
        let mut boundaries: Vec<IntMatrix> = (1..sizes.len())
            .map(|k| IntMatrix::zeros(sizes[k - 1], sizes[k]))
            .collect();
        for c in &self.cells {
            let m = &mut boundaries[c.dim];
            if c.dim == 0 {
                m.set(0, local[c.id], 1);
            } else {
                for &(f, s) in &c.facets {
                    m.add_to(local[f], local[c.id], s as i64);
                }
            }
        }
        ChainComplex::from_parts(sizes, boundaries).expect("shapes are consistent")
    }

    /// Negate one incidence sign. Only useful for fault-injection tests.
    pub fn flip_sign(&mut self, cell: usize, facet_position: usize) {
        let f = &mut self.cells[cell].facets[facet_position];
        f.1 = -f.1;
    }
}

/// The full simplex on the given monomials, labeled by lcms.
pub fn taylor_complex(gens: &[Monomial]) -> Result<LabeledCellComplex> {
    let Some(first) = gens.first() else {
        return Ok(LabeledCellComplex {
            n: 0,
            cells: Vec::new(),
        });
    };
    let n = first.n();
    if gens.len() > 16 {
        return Err(Error::ScaleGuard(format!(
            "Taylor complex on {} generators",
            gens.len()
        )));
    }
    let k = gens.len();
    let mut subsets: Vec<u32> = (1u32..(1 << k)).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    let index: HashMap<u32, usize> = subsets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut cells = Vec::with_capacity(subsets.len());
    for (id, &s) in subsets.iter().enumerate() {
        let members: Vec<usize> = (0..k).filter(|i| s >> i & 1 == 1).collect();
        let mut label = Monomial::one(n);
        for &i in &members {
            label = label.lcm(&gens[i])?;
        }
        let facets = if members.len() == 1 {
            Vec::new()
        } else {
            members
                .iter()
                .enumerate()
                .map(|(pos, &i)| (index[&(s & !(1 << i))], if pos % 2 == 0 { 1 } else { -1 }))
                .collect()
        };
        cells.push(Cell {
            id,
            dim: members.len() - 1,
            descriptor: CellDescriptor::Simplex {
                indices: members.iter().map(|i| i + 1).collect(),
            },
            label,
            vertices: members.iter().map(|&i| index[&(1 << i)]).collect(),
            facets,
        });
    }
    LabeledCellComplex::from_cells(n, cells)
}

impl CellDescriptor {
    pub fn axis(&self) -> Option<Axis> {
        match self {
            CellDescriptor::HEdge { .. } => Some(Axis::Horizontal),
            CellDescriptor::VEdge { .. } => Some(Axis::Vertical),
            _ => None,
        }
    }
}
