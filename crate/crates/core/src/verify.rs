//! Certificate checking.
//!
//! Every check takes the carrier graph explicitly; certificates never carry
//! a reference to the graph they were produced for.

use alloc::format;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

/// A vertex coloring `c : V -> {1, ..., k}`.
///
/// `colors[v]` is the class of vertex `v`. A fall coloring additionally needs
/// every class to be nonempty; that is checked by [`is_fall_coloring`], not
/// by the type, since proper colorings fed to reductions may leave classes
/// unused.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        if let Some((v, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::MalformedColoring(format!(
                "vertex {v} has color {c} outside 1..={k}"
            )));
        }
        Ok(Coloring { k, colors })
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Color classes `V_1, ..., V_k` (index `i` holds class `i + 1`).
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = alloc::vec![VertexSet::new(self.colors.len()); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c - 1].insert(v);
        }
        classes
    }

    /// True when every class `1..=k` is used.
    pub fn is_surjective(&self) -> bool {
        let mut used = alloc::vec![false; self.k];
        for &c in &self.colors {
            used[c - 1] = true;
        }
        used.into_iter().all(|u| u)
    }

    /// Applies `perm` (1-based: color `c` becomes `perm[c - 1]`).
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        Coloring::new(self.k, self.colors.iter().map(|&c| perm[c - 1]).collect())
    }

    /// Renames colors in order of first appearance, so the lowest vertex gets
    /// color 1, the next new color seen gets 2, and so on.
    pub fn canonical(&self) -> Self {
        let mut perm = alloc::vec![0usize; self.k];
        let mut next = 1;
        for &c in &self.colors {
            if perm[c - 1] == 0 {
                perm[c - 1] = next;
                next += 1;
            }
        }
        for p in perm.iter_mut().filter(|p| **p == 0) {
            *p = next;
            next += 1;
        }
        Coloring {
            k: self.k,
            colors: self.colors.iter().map(|&c| perm[c - 1]).collect(),
        }
    }
}

/// A coloring of the edges of a graph, indexed by position in
/// [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EdgeColoring {
    k: usize,
    colors: Vec<usize>,
}

impl EdgeColoring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        if let Some((e, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::MalformedColoring(format!(
                "edge {e} has color {c} outside 1..={k}"
            )));
        }
        Ok(EdgeColoring { k, colors })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color(&self, edge: usize) -> usize {
        self.colors[edge]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }
}

/// One reason a coloring fails to be a fall coloring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum Violation {
    /// No vertex received this color.
    EmptyClass { color: usize },
    /// Both endpoints of an edge share a color.
    Monochromatic { u: usize, v: usize, color: usize },
    /// The vertex has no neighbor of this color (and is not itself of it).
    MissingColor { vertex: usize, color: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VerifyReport {
    pub valid: bool,
    pub k: usize,
    pub violations: Vec<Violation>,
}

fn check_set(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.universe() != g.n() {
        let vertex = s.iter().last().unwrap_or(s.universe());
        if s.universe() > g.n() && vertex >= g.n() {
            return Err(Error::VertexOutOfRange { vertex, n: g.n() });
        }
        return Err(Error::InvalidParameter(format!(
            "vertex set over {} vertices checked against a graph with {}",
            s.universe(),
            g.n()
        )));
    }
    Ok(())
}

fn check_total(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::MalformedColoring(format!(
            "coloring covers {} vertices, graph has {}",
            c.len(),
            g.n()
        )));
    }
    Ok(())
}

/// No edge has both endpoints in `s`.
pub fn is_independent(g: &Graph, s: &VertexSet) -> Result<bool> {
    check_set(g, s)?;
    Ok(s.iter().all(|v| g.neighbors(v).is_disjoint(s)))
}

/// Every vertex is in `s` or has a neighbor in `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    check_set(g, s)?;
    Ok(g
        .vertices()
        .all(|v| s.contains(v) || g.neighbors(v).intersects(s)))
}

/// Independent and dominating, i.e. a maximal independent set.
pub fn is_ids(g: &Graph, s: &VertexSet) -> Result<bool> {
    Ok(is_independent(g, s)? && is_dominating(g, s)?)
}

pub fn are_disjoint_ids(g: &Graph, s1: &VertexSet, s2: &VertexSet) -> Result<bool> {
    check_set(g, s1)?;
    check_set(g, s2)?;
    Ok(s1.is_disjoint(s2) && is_ids(g, s1)? && is_ids(g, s2)?)
}

/// Checks that `c` partitions `V` into `k` nonempty independent dominating
/// sets, reporting every violation found.
pub fn is_fall_coloring(g: &Graph, c: &Coloring) -> Result<VerifyReport> {
    check_total(g, c)?;
    let k = c.k();
    let mut violations = Vec::new();

    let mut used = alloc::vec![false; k];
    for &col in c.colors() {
        used[col - 1] = true;
    }
    for (i, _) in used.iter().enumerate().filter(|(_, &u)| !u) {
        violations.push(Violation::EmptyClass { color: i + 1 });
    }

    for &(u, v) in g.edges() {
        if c.color(u) == c.color(v) {
            violations.push(Violation::Monochromatic {
                u,
                v,
                color: c.color(u),
            });
        }
    }

    let mut seen = alloc::vec![false; k];
    for v in g.vertices() {
        seen.iter_mut().for_each(|s| *s = false);
        for w in g.neighbors(v) {
            seen[c.color(w) - 1] = true;
        }
        for color in 1..=k {
            // An empty class is already reported once; it is not also
            // every vertex's fault.
            if color != c.color(v) && !seen[color - 1] && used[color - 1] {
                violations.push(Violation::MissingColor { vertex: v, color });
            }
        }
    }

    Ok(VerifyReport {
        valid: violations.is_empty(),
        k,
        violations,
    })
}

pub fn is_proper_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    check_total(g, c)?;
    Ok(g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v)))
}

/// Adjacent edges (sharing an endpoint) receive distinct colors.
pub fn is_proper_edge_coloring(g: &Graph, h: &EdgeColoring) -> Result<bool> {
    if h.colors().len() != g.m() {
        return Err(Error::MalformedColoring(format!(
            "edge coloring covers {} edges, graph has {}",
            h.colors().len(),
            g.m()
        )));
    }
    let mut seen = alloc::vec![VertexSet::new(h.k() + 1); g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let col = h.color(e);
        if !seen[u].insert(col) || !seen[v].insert(col) {
            return Ok(false);
        }
    }
    Ok(true)
}
