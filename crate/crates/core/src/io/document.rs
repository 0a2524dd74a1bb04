//! Ideal documents: a hand-writable text format and a JSON form.
//!
//! Text format:
//!
//! ```text
//! vars x y
//! bound 5 6
//! x^3
//! x^2*y^2
//! 0 4
//! ```
//!
//! Lines may be blank or start with `#`. `blocks m n` splits the variables into an
//! `x`-block and a `y`-block.

use serde::{Deserialize, Serialize};

use crate::dual::ExponentBound;
use crate::error::{Error, Result};
use crate::ferrers::BipartiteIdeal;
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDocument {
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<[usize; 2]>,
    pub generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<Vec<u32>>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

impl IdealDocument {
    /// Default names `x1..xn`.
    pub fn default_names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    pub fn from_ideal(ideal: &MonomialIdeal, bound: Option<&ExponentBound>) -> Self {
        Self {
            variables: Self::default_names(ideal.n()),
            blocks: None,
            generators: ideal
                .generators()
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect(),
            bound: bound.map(|b| b.as_slice().to_vec()),
        }
    }

    /// Parse either format; JSON is recognized by a leading `{`.
    pub fn parse(text: &str) -> Result<Self> {
        let doc = if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| {
                parse_err(e.line(), e.column(), e.to_string())
            })?
        } else {
            Self::parse_text(text)?
        };
        doc.validate()?;
        Ok(doc)
    }

    fn parse_text(text: &str) -> Result<Self> {
        let mut variables: Option<Vec<String>> = None;
        let mut blocks = None;
        let mut bound = None;
        let mut generators = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim_end();
            let trimmed = line.trim_start();
            let offset = line.len() - trimmed.len();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut words = trimmed.split_whitespace();
            let head = words.next().unwrap_or_default();
            match head {
                "vars" => {
                    if variables.is_some() {
                        return Err(parse_err(line_no, offset + 1, "repeated vars line"));
                    }
                    let names: Vec<String> = words.map(str::to_string).collect();
                    if names.is_empty() {
                        return Err(parse_err(line_no, offset + 1, "no variables"));
                    }
                    variables = Some(names);
                }
                "blocks" => {
                    let nums = parse_numbers(trimmed, "blocks", line_no, offset)?;
                    let [m, n] = nums[..] else {
                        return Err(parse_err(line_no, offset + 1, "blocks needs two sizes"));
                    };
                    blocks = Some([m as usize, n as usize]);
                }
                "bound" => {
                    bound = Some(parse_numbers(trimmed, "bound", line_no, offset)?);
                }
                _ => {
                    let Some(vars) = &variables else {
                        return Err(parse_err(line_no, offset + 1, "expected a vars line first"));
                    };
                    generators.push(parse_generator(trimmed, vars, line_no, offset)?);
                }
            }
        }
        let variables = variables.ok_or_else(|| parse_err(1, 1, "missing vars line"))?;
        Ok(Self {
            variables,
            blocks,
            generators,
            bound,
        })
    }

    /// Dimension, bound and block checks.
    pub fn validate(&self) -> Result<()> {
        let n = self.variables.len();
        if n == 0 {
            return Err(Error::Document("no variables".into()));
        }
        let mut names = self.variables.clone();
        names.sort();
        names.dedup();
        if names.len() != n {
            return Err(Error::Document("repeated variable name".into()));
        }
        if self.generators.is_empty() {
            return Err(Error::Document("no generators".into()));
        }
        for (k, g) in self.generators.iter().enumerate() {
            if g.len() != n {
                return Err(Error::Document(format!(
                    "generator {} has {} exponents, expected {n}",
                    k + 1,
                    g.len()
                )));
            }
        }
        if let Some(b) = &self.bound {
            if b.len() != n {
                return Err(Error::Document(format!("bound has {} entries, expected {n}", b.len())));
            }
            if let Some(k) = self
                .generators
                .iter()
                .position(|g| g.iter().zip(b).any(|(e, a)| e > a))
            {
                return Err(Error::Document(format!("bound does not dominate generator {}", k + 1)));
            }
        }
        if let Some([m, y]) = self.blocks {
            if m + y != n {
                return Err(Error::Document(format!("blocks {m} + {y} != {n} variables")));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.variables.len()
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.generators.iter().map(|g| Monomial::new(g.clone())).collect()
    }

    pub fn ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::new(self.n(), self.monomials())
    }

    pub fn exponent_bound(&self) -> Option<ExponentBound> {
        self.bound.clone().map(ExponentBound::new)
    }

    pub fn bipartite(&self) -> Result<Option<BipartiteIdeal>> {
        self.blocks
            .map(|[m, n]| BipartiteIdeal::new(m, n, self.ideal()?))
            .transpose()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("vars {}\n", self.variables.join(" "));
        if let Some([m, n]) = self.blocks {
            out += &format!("blocks {m} {n}\n");
        }
        if let Some(b) = &self.bound {
            let parts: Vec<String> = b.iter().map(u32::to_string).collect();
            out += &format!("bound {}\n", parts.join(" "));
        }
        for g in self.monomials() {
            out += &g.render(&self.variables);
            out.push('\n');
        }
        out
    }
}

fn parse_numbers(line: &str, head: &str, line_no: usize, offset: usize) -> Result<Vec<u32>> {
    let rest = &line[head.len()..];
    let mut out = Vec::new();
    let mut col = offset + head.len();
    for piece in rest.split(' ') {
        col += 1;
        if !piece.is_empty() {
            out.push(
                piece
                    .parse()
                    .map_err(|_| parse_err(line_no, col, format!("expected an integer, got {piece:?}")))?,
            );
        }
        col += piece.len();
    }
    Ok(out)
}

fn parse_generator(text: &str, vars: &[String], line_no: usize, offset: usize) -> Result<Vec<u32>> {
    let n = vars.len();
    let words: Vec<&str> = text.split_whitespace().collect();
    if words.len() == n && words.iter().all(|w| w.bytes().all(|b| b.is_ascii_digit())) {
        return words
            .iter()
            .map(|w| {
                w.parse::<u32>()
                    .map_err(|_| parse_err(line_no, offset + 1, format!("exponent {w:?} out of range")))
            })
            .collect();
    }
    if text == "1" {
        return Ok(vec![0; n]);
    }
    let mut exps = vec![0u32; n];
    let mut col = offset + 1;
    for factor in text.split('*') {
        let f = factor.trim();
        let lead = factor.len() - factor.trim_start().len();
        let at = col + lead;
        let (name, power) = match f.split_once('^') {
            Some((name, p)) => (
                name.trim(),
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| parse_err(line_no, at, format!("bad exponent in {f:?}")))?,
            ),
            None => (f, 1),
        };
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| parse_err(line_no, at, format!("unknown variable {name:?}")))?;
        exps[idx] = exps[idx]
            .checked_add(power)
            .ok_or(Error::Overflow)?;
        col += factor.len() + 1;
    }
    Ok(exps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_example() {
        let doc = IdealDocument::parse("vars x y\nx^3\nx^2*y^2\ny^4\nbound 5 6\n").unwrap();
        assert_eq!(doc.generators, vec![vec![3, 0], vec![2, 2], vec![0, 4]]);
        assert_eq!(doc.bound, Some(vec![5, 6]));
        let again = IdealDocument::parse(&doc.to_text()).unwrap();
        assert_eq!(again, doc);
        let json = IdealDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(json, doc);
    }

    #[test]
    fn exponent_vectors_and_comments() {
        let doc = IdealDocument::parse("# comment\nvars a b c\n\n1 0 2\na*c\n").unwrap();
        assert_eq!(doc.generators, vec![vec![1, 0, 2], vec![1, 0, 1]]);
    }

    #[test]
    fn structured_bipartite() {
        let json = r#"{"variables":["x1","x2","y1","y2","y3"],"blocks":[2,3],
            "generators":[[1,0,1,0,0],[1,0,0,1,0],[1,0,0,0,1],[0,1,1,0,0],[0,1,0,1,0]]}"#;
        let doc = IdealDocument::parse(json).unwrap();
        let bi = doc.bipartite().unwrap().unwrap();
        assert_eq!((bi.x_count, bi.y_count), (2, 3));
        assert_eq!(bi.ideal.len(), 5);
    }

    #[test]
    fn errors() {
        assert!(matches!(IdealDocument::parse("vars x y\n"), Err(Error::Document(_))));
        assert!(matches!(
            IdealDocument::parse("vars x y\nx*z\n"),
            Err(Error::Parse { line: 2, column: 3, .. })
        ));
        assert!(matches!(
            IdealDocument::parse("vars x y\nx^a\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(IdealDocument::parse("vars x y\nx^3\nbound 2 2\n").is_err());
        assert!(IdealDocument::parse("vars x y\nblocks 1 2\nx\n").is_err());
        assert!(IdealDocument::parse("x^2\n").is_err());
        assert!(IdealDocument::parse("{\"variables\": [\"x\"]").is_err());
    }
}
