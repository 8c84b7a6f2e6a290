//! The graph carrier shared by every solver and reduction.
//!
//! Vertices are the contiguous integers `0..n`. Graphs are immutable once
//! built; every transform returns a fresh graph and documents how it numbers
//! the vertices it creates.

mod classify;
mod generate;
mod ops;
mod vertex_set;

use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result};

pub use classify::{
    bipartition, classify, components, distances_from, is_bipartite, is_chordal,
    is_triangle_free, perfect_elimination_order, StructureReport,
};
pub use generate::{
    complete, cycle, edgeless, f_k, path, petersen, random_chordal_ktree, random_gnp,
    random_maximal_outerplanar, random_regular, REGULAR_PAIRING_RETRIES,
};
pub use ops::{
    cartesian_product, categorical_product, disjoint_union, induced_subgraph, line_graph,
    power, subdivide,
};
pub use vertex_set::VertexSet;
pub(crate) use generate::gnp_with;

/// An undirected simple graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted, deduplicated, each pair stored as `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) collapse to one.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            normalized.push(if u < v { (u, v) } else { (v, u) });
        }
        normalized.sort_unstable();
        normalized.dedup();

        let mut adjacency = alloc::vec![VertexSet::new(n); n];
        for &(u, v) in &normalized {
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Ok(Graph {
            n,
            edges: normalized,
            adjacency,
            labels: None,
        })
    }

    /// Attaches role labels. The label list must cover every vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidParameter(alloc::format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending `(min, max)` order. Line graphs and edge colorings
    /// index edges by position in this slice.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut set = self.adjacency[v].clone();
        set.insert(v);
        set
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].contains(v)
    }

    /// Position of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.min_degree();
        (self.n > 0 && self.max_degree() == d).then_some(d)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn vertices(&self) -> core::ops::Range<usize> {
        0..self.n
    }

    /// The full vertex set `V`.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}
