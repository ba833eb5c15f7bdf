//! Partial orders on the vertex set.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pathalg::Quiver;

/// A partial order on the vertices, kept as its strict relation closed under
/// transitivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOrder {
    labels: Vec<String>,
    /// `less[a][b]`: `a < b`.
    less: Vec<Vec<bool>>,
}

impl PartialOrder {
    /// Builds the order generated by `pairs` (`a < b`); rejects cycles.
    pub fn from_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<PartialOrder> {
        let n = labels.len();
        let mut less = vec![vec![false; n]; n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidOrder(format!("vertex index {} out of range", a.max(b))));
            }
            less[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        if let Some(v) = (0..n).find(|&v| less[v][v]) {
            return Err(Error::InvalidOrder(format!("cycle through vertex `{}`", labels[v])));
        }
        Ok(PartialOrder { labels, less })
    }

    /// The total order `seq[0] < seq[1] < ...`.
    pub fn total(labels: Vec<String>, seq: &[usize]) -> Result<PartialOrder> {
        let pairs: Vec<(usize, usize)> = seq.windows(2).map(|w| (w[0], w[1])).collect();
        PartialOrder::from_pairs(labels, &pairs)
    }

    /// Parses chains such as `2<3<1<4`, separated by commas, semicolons or
    /// whitespace; the order is the union. Every vertex must be mentioned.
    pub fn parse(quiver: &Quiver, text: &str) -> Result<PartialOrder> {
        PartialOrder::parse_all(quiver, &[text])
    }

    pub fn parse_all(quiver: &Quiver, texts: &[&str]) -> Result<PartialOrder> {
        let n = quiver.num_vertices();
        let mut seen = vec![false; n];
        let mut pairs = Vec::new();
        for text in texts {
            for chain in text.split([',', ';']).flat_map(str::split_whitespace) {
                let mut prev = None;
                for part in chain.split('<') {
                    let part = part.trim();
                    if part.is_empty() {
                        return Err(Error::InvalidOrder(format!("empty element in `{chain}`")));
                    }
                    let v = quiver.vertex(part)?;
                    seen[v] = true;
                    if let Some(u) = prev {
                        pairs.push((u, v));
                    }
                    prev = Some(v);
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidOrder(format!("vertex `{}` is not ordered", quiver.label(v))));
        }
        PartialOrder::from_pairs(quiver.vertices().to_vec(), &pairs)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.less[a][b]
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        a == b || self.less[a][b]
    }

    pub fn is_total(&self) -> bool {
        (0..self.len()).all(|a| (0..self.len()).all(|b| self.le(a, b) || self.le(b, a)))
    }

    /// Pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.less[a][b] && !(0..n).any(|c| self.less[a][c] && self.less[c][b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Ascending linear extension; ties go to the smaller index.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut placed = vec![false; n];
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let v = (0..n)
                .find(|&v| !placed[v] && (0..n).all(|u| placed[u] || !self.less[u][v]))
                .expect("acyclic");
            placed[v] = true;
            out.push(v);
        }
        out
    }

    /// Every total order on at most `max` vertices.
    pub fn all_total(labels: &[String], max: usize) -> Result<Vec<PartialOrder>> {
        let n = labels.len();
        if n > max {
            return Err(Error::Precondition(format!("{n} vertices exceed the search limit {max}")));
        }
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        permutations(&mut perm, 0, &mut |p| out.push(PartialOrder::total(labels.to_vec(), p).expect("total")));
        Ok(out)
    }
}

fn permutations(p: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, visit);
        p.swap(k, i);
    }
}

impl fmt::Display for PartialOrder {
    /// Cover relations, one chain link per entry: `2<3, 3<1, 1<4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers = self.covers();
        if covers.is_empty() {
            return write!(f, "{}", self.labels.join(", "));
        }
        let parts: Vec<String> =
            covers.iter().map(|&(a, b)| format!("{}<{}", self.labels[a], self.labels[b])).collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl Serialize for PartialOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
