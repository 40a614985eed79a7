use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

/// A total vertex coloring with 0-based color indices.
///
/// The palette is the number of distinct colors actually used; it is
/// recomputed on construction. Properness is not enforced by the type, see
/// [`verify_coloring`].
#[derive(Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    palette: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        let mut seen: Vec<usize> = colors.clone();
        seen.sort_unstable();
        seen.dedup();
        Coloring {
            palette: seen.len(),
            colors,
        }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Renumbers colors to `0..palette` in order of first appearance.
    pub fn compacted(&self) -> Coloring {
        let mut map = HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Coloring::new(colors)
    }

    /// One color per line, in vertex order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.colors {
            s.push_str(&c.to_string());
            s.push('\n');
        }
        s
    }

    /// Parses the format written by [`Coloring::to_text`]. Lines may also be
    /// `vertex color` pairs (0-based vertex ids); `#` starts a comment.
    pub fn from_text(text: &str) -> Result<Coloring, String> {
        let mut pairs = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
            match nums.map_err(|_| format!("line {}: not a number", i + 1))?.as_slice() {
                [c] => pairs.push((pairs.len(), *c)),
                [v, c] => pairs.push((*v, *c)),
                _ => return Err(format!("line {}: expected `color` or `vertex color`", i + 1)),
            }
        }
        let n = pairs.iter().map(|(v, _)| v + 1).max().unwrap_or(0);
        let mut colors = vec![None; n];
        for (v, c) in pairs {
            if colors[v].replace(c).is_some() {
                return Err(format!("vertex {v} colored twice"));
            }
        }
        colors
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(format!("vertex {v} has no color")))
            .collect::<Result<Vec<_>, _>>()
            .map(Coloring::new)
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring(palette={}, {:?})", self.palette, self.colors)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Proper,
    /// An edge whose endpoints share a color.
    Conflict(usize, usize),
}

impl Verdict {
    pub fn is_proper(self) -> bool {
        self == Verdict::Proper
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("coloring covers {covered} vertices but the graph has {order}")]
pub struct PartialColoring {
    pub covered: usize,
    pub order: usize,
}

/// Checks properness; reports the lexicographically first conflicting edge.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<Verdict, PartialColoring> {
    if c.len() != g.order() {
        return Err(PartialColoring {
            covered: c.len(),
            order: g.order(),
        });
    }
    Ok(g.edges()
        .find(|&(u, v)| c.color(u) == c.color(v))
        .map_or(Verdict::Proper, |(u, v)| Verdict::Conflict(u, v)))
}
