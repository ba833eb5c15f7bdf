use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver with labelled vertices and named arrows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.clone(), i).is_some() {
                return Err(Error::Duplicate { kind: "vertex", name: v.clone() });
            }
        }
        Ok(Quiver { vertices, arrows: Vec::new() })
    }

    /// Vertices labelled `1..=n`.
    pub fn numbered(n: usize) -> Self {
        Quiver { vertices: (1..=n).map(|i| i.to_string()).collect(), arrows: Vec::new() }
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<usize> {
        if self.arrow_index(name).is_some() {
            return Err(Error::Duplicate { kind: "arrow", name: name.to_string() });
        }
        let s = self.vertex(source)?;
        let t = self.vertex(target)?;
        self.arrows.push(Arrow { name: name.to_string(), source: s, target: t });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&i| self.arrows[i].source == v)
    }

    pub fn arrows_to(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&i| self.arrows[i].target == v)
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    /// Checks that consecutive arrows compose.
    pub fn is_path(&self, w: &[usize]) -> bool {
        w.windows(2).all(|p| self.arrows[p[0]].target == self.arrows[p[1]].source)
    }

    /// All paths of exactly `len` arrows starting at `v`.
    pub fn words_from(&self, v: usize, len: usize) -> Vec<Vec<usize>> {
        let mut layer: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), v)];
        for _ in 0..len {
            let mut next = Vec::new();
            for (w, end) in &layer {
                for a in self.arrows_from(*end) {
                    let mut w2 = w.clone();
                    w2.push(a);
                    next.push((w2, self.arrows[a].target));
                }
            }
            layer = next;
        }
        layer.into_iter().map(|(w, _)| w).collect()
    }

    /// All paths of exactly `len` arrows ending at `v`.
    pub fn words_to(&self, v: usize, len: usize) -> Vec<Vec<usize>> {
        let mut layer: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), v)];
        for _ in 0..len {
            let mut next = Vec::new();
            for (w, start) in &layer {
                for a in self.arrows_to(*start) {
                    let mut w2 = vec![a];
                    w2.extend_from_slice(w);
                    next.push((w2, self.arrows[a].source));
                }
            }
            layer = next;
        }
        layer.into_iter().map(|(w, _)| w).collect()
    }

    pub fn format_word(&self, w: &[usize]) -> String {
        w.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
    }

    /// Parses `a*b*c` into arrow indices.
    pub fn parse_word(&self, s: &str) -> Result<Vec<usize>> {
        s.split('*')
            .map(|t| {
                let t = t.trim();
                self.arrow_index(t).ok_or_else(|| Error::UnknownArrow(t.to_string()))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_in_a_square() {
        let mut q = Quiver::numbered(4);
        q.add_arrow("a", "1", "2").unwrap();
        q.add_arrow("b", "2", "4").unwrap();
        q.add_arrow("c", "1", "3").unwrap();
        q.add_arrow("d", "3", "4").unwrap();
        assert_eq!(q.words_from(0, 2).len(), 2);
        assert_eq!(q.words_to(3, 2).len(), 2);
        assert_eq!(q.parse_word("a*b").unwrap(), vec![0, 1]);
        assert!(q.is_path(&[0, 1]));
        assert!(!q.is_path(&[0, 3]));
        assert!(q.add_arrow("a", "1", "2").is_err());
    }
}
