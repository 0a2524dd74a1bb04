//! SVG drawings of labeled cell complexes.
//!
//! Planar complexes are drawn in diagram coordinates (row `i` downward, column `j`
//! rightward). Cube complexes are placed by the tail-sum map
//! `m -> (m_2 + ... + m_n, m_3 + ... + m_n, ..., m_n)`, under which every cell is a face
//! of a unit cube, and then projected obliquely to the plane.

use std::fmt::Write;

use crate::cellres::{CellDescriptor, LabeledCellComplex};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::stability::borel_move;

const SCALE: f64 = 80.0;
const MARGIN: f64 = 60.0;

fn tail_sums(m: &Monomial) -> Vec<f64> {
    let e = m.exponents();
    (1..e.len())
        .map(|j| e[j..].iter().sum::<u32>() as f64)
        .collect()
}

fn project(coords: &[f64]) -> (f64, f64) {
    let k = coords.len().max(1);
    coords.iter().enumerate().fold((0.0, 0.0), |(x, y), (t, &c)| {
        let theta = std::f64::consts::PI * (t as f64 + 0.5) / k as f64;
        (x + c * theta.cos(), y - c * theta.sin())
    })
}

fn vertex_position(d: &CellDescriptor, k: usize, total: usize) -> (f64, f64) {
    match d {
        CellDescriptor::Vertex { point: (i, j) } => (*j as f64, *i as f64),
        CellDescriptor::Borel { apex, .. } => project(&tail_sums(apex)),
        _ => {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / total.max(1) as f64;
            (2.0 * theta.cos(), 2.0 * theta.sin())
        }
    }
}

/// Render `x` as a standalone SVG document, with variable names `names`.
pub fn complex_svg(x: &LabeledCellComplex, names: &[String]) -> Result<String> {
    let vertices: Vec<_> = x.cells_of_dim(0).collect();
    if vertices.is_empty() {
        return Err(Error::Complex("nothing to draw".into()));
    }
    let raw: Vec<(f64, f64)> = vertices
        .iter()
        .enumerate()
        .map(|(k, c)| vertex_position(&c.descriptor, k, vertices.len()))
        .collect();
    let min_x = raw.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let min_y = raw.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let max_x = raw.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let max_y = raw.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    let place = |p: (f64, f64)| {
        (
            MARGIN + (p.0 - min_x) * SCALE,
            MARGIN + (p.1 - min_y) * SCALE,
        )
    };
    let mut pos = vec![(0.0, 0.0); x.cells().len()];
    for (c, &p) in vertices.iter().zip(&raw) {
        pos[c.id] = place(p);
    }
    let width = 2.0 * MARGIN + (max_x - min_x) * SCALE;
    let height = 2.0 * MARGIN + (max_y - min_y) * SCALE;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="sans-serif" font-size="10">"#
    )
    .unwrap();
    // two-cells first so edges and vertices sit on top
    for c in x.cells_of_dim(2) {
        let corners: Vec<usize> = match &c.descriptor {
            CellDescriptor::Borel { apex, sigma } if sigma.len() == 2 => {
                let find = |tau: &[usize]| -> Result<usize> {
                    let m = borel_move(apex, &tau.iter().copied().collect())?;
                    vertices
                        .iter()
                        .find(|v| matches!(&v.descriptor, CellDescriptor::Borel { apex, .. } if *apex == m))
                        .map(|v| v.id)
                        .ok_or_else(|| Error::Complex(format!("missing vertex {m}")))
                };
                let (i, j) = (sigma[0], sigma[1]);
                vec![find(&[])?, find(&[i])?, find(&[i, j])?, find(&[j])?]
            }
            CellDescriptor::Rectangle { corner, top_row } => {
                let (t1, t2) = *corner;
                let find = |p: (usize, usize)| {
                    vertices
                        .iter()
                        .find(|v| v.descriptor == CellDescriptor::Vertex { point: p })
                        .map(|v| v.id)
                        .ok_or_else(|| Error::Complex(format!("missing vertex {p:?}")))
                };
                vec![find((t1, t2))?, find((*top_row, t2))?, find((*top_row, t2 - 1))?, find((t1, t2 - 1))?]
            }
            _ => c.vertices.clone(),
        };
        let pts: Vec<String> = corners
            .iter()
            .map(|&v| format!("{:.1},{:.1}", pos[v].0, pos[v].1))
            .collect();
        writeln!(
            out,
            r##"<polygon points="{}" fill="#cfe3f7" fill-opacity="0.6" stroke="none"><title>{}</title></polygon>"##,
            pts.join(" "),
            c.label.render(names)
        )
        .unwrap();
    }
    for c in x.cells_of_dim(1) {
        let (a, b) = (pos[c.vertices[0]], pos[c.vertices[1]]);
        writeln!(
            out,
            r##"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="#333" stroke-width="1.5"><title>{}</title></line>"##,
            a.0, a.1, b.0, b.1,
            c.label.render(names)
        )
        .unwrap();
    }
    for c in &vertices {
        let (px, py) = pos[c.id];
        writeln!(out, r##"<circle cx="{px:.1}" cy="{py:.1}" r="4" fill="#b22"/>"##).unwrap();
        writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{}</text>"#,
            px,
            py - 8.0,
            c.label.render(names)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}
