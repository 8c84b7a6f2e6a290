//! Proper vertex and edge coloring: exact DSATUR branch and bound.

use alloc::vec::Vec;

use super::Limits;
use crate::graph::{line_graph, Graph};
use crate::verify::{Coloring, EdgeColoring};
use crate::{Error, Result};

fn guard(g: &Graph, limits: &Limits, algorithm: &'static str) -> Result<()> {
    if g.n() > limits.chromatic_max_n {
        return Err(Error::SizeGuard {
            algorithm,
            n: g.n(),
            limit: limits.chromatic_max_n,
        });
    }
    Ok(())
}

/// A proper coloring with colors from `1..=k`, if one exists.
pub fn proper_color_decide(g: &Graph, k: usize, limits: &Limits) -> Result<Option<Coloring>> {
    guard(g, limits, "proper coloring")?;
    let n = g.n();
    if n == 0 {
        return Ok(Some(Coloring::new(k, Vec::new())?));
    }
    if k == 0 {
        return Ok(None);
    }
    if k >= n {
        return Ok(Some(Coloring::new(k, (1..=n).collect())?));
    }
    let mut dsatur = Dsatur::new(g, k);
    Ok(dsatur
        .search(0)
        .then(|| Coloring::new(k, dsatur.colors).expect("colors within 1..=k")))
}

/// χ(G), bracketed by a greedy clique from below and greedy DSATUR from
/// above, then closed by exact search.
pub fn chromatic_number(g: &Graph, limits: &Limits) -> Result<usize> {
    guard(g, limits, "chromatic number")?;
    if g.n() == 0 {
        return Ok(0);
    }
    let lower = greedy_clique(g);
    let upper = greedy_dsatur(g);
    for k in lower..upper {
        if proper_color_decide(g, k, limits)?.is_some() {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// A proper edge coloring with `k` colors, if one exists, found as a proper
/// coloring of the line graph.
pub fn edge_color_decide(g: &Graph, k: usize, limits: &Limits) -> Result<Option<EdgeColoring>> {
    if g.m() == 0 {
        return Ok(Some(EdgeColoring::new(k, Vec::new())?));
    }
    let line = line_graph(g)?;
    guard(&line, limits, "edge coloring")?;
    proper_color_decide(&line, k, limits)?
        .map(|c| EdgeColoring::new(k, c.colors().to_vec()))
        .transpose()
}

struct Dsatur<'g> {
    g: &'g Graph,
    k: usize,
    colors: Vec<usize>,
    /// Bit `c - 1` set when some neighbor has color `c`.
    saturation: Vec<u64>,
}

impl<'g> Dsatur<'g> {
    fn new(g: &'g Graph, k: usize) -> Self {
        Dsatur {
            g,
            k,
            colors: alloc::vec![0; g.n()],
            saturation: alloc::vec![0; g.n()],
        }
    }

    fn pick(&self) -> Option<usize> {
        self.g
            .vertices()
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| {
                let uncolored = self
                    .g
                    .neighbors(v)
                    .iter()
                    .filter(|&w| self.colors[w] == 0)
                    .count();
                (self.saturation[v].count_ones(), uncolored, core::cmp::Reverse(v))
            })
    }

    fn search(&mut self, max_used: usize) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        let top = (max_used + 1).min(self.k);
        for c in 1..=top {
            if self.saturation[v] & (1 << (c - 1)) != 0 {
                continue;
            }
            let saved: Vec<(usize, u64)> = self
                .g
                .neighbors(v)
                .iter()
                .map(|w| (w, self.saturation[w]))
                .collect();
            self.colors[v] = c;
            for &(w, _) in &saved {
                self.saturation[w] |= 1 << (c - 1);
            }
            if self.search(max_used.max(c)) {
                return true;
            }
            for (w, s) in saved {
                self.saturation[w] = s;
            }
            self.colors[v] = 0;
        }
        false
    }
}

fn greedy_dsatur(g: &Graph) -> usize {
    let n = g.n();
    let mut colors = alloc::vec![0usize; n];
    let mut saturation: Vec<Vec<bool>> = alloc::vec![alloc::vec![false; n + 2]; n];
    let mut sat_count = alloc::vec![0usize; n];
    let mut used = 0;
    for _ in 0..n {
        let v = g
            .vertices()
            .filter(|&v| colors[v] == 0)
            .max_by_key(|&v| (sat_count[v], g.degree(v), core::cmp::Reverse(v)))
            .expect("uncolored vertex");
        let c = (1..=n + 1).find(|&c| !saturation[v][c]).expect("free color");
        colors[v] = c;
        used = used.max(c);
        for w in g.neighbors(v) {
            if !saturation[w][c] {
                saturation[w][c] = true;
                sat_count[w] += 1;
            }
        }
    }
    used
}

fn greedy_clique(g: &Graph) -> usize {
    g.vertices()
        .map(|start| {
            let mut clique = alloc::vec![start];
            let mut candidates = g.neighbors(start).clone();
            while let Some(next) = candidates
                .iter()
                .max_by_key(|&w| (g.neighbors(w).intersection(&candidates).len(), core::cmp::Reverse(w)))
            {
                clique.push(next);
                candidates.intersect_with(g.neighbors(next));
            }
            clique.len()
        })
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, edgeless, petersen, power};
    use crate::verify::{is_proper_coloring, is_proper_edge_coloring};

    fn chi(g: &Graph) -> usize {
        chromatic_number(g, &Limits::default()).unwrap()
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chi(&complete(4).unwrap()), 4);
        assert_eq!(chi(&cycle(5).unwrap()), 3);
        assert_eq!(chi(&cycle(6).unwrap()), 2);
        assert_eq!(chi(&power(&cycle(6).unwrap(), 2).unwrap()), 3);
        assert_eq!(chi(&petersen()), 3);
        assert_eq!(chi(&edgeless(3)), 1);
        assert_eq!(chi(&Graph::new(0, []).unwrap()), 0);
    }

    #[test]
    fn decide_returns_proper_witness() {
        let g = power(&cycle(7).unwrap(), 2).unwrap();
        let limits = Limits::default();
        assert!(proper_color_decide(&g, 3, &limits).unwrap().is_none());
        let c = proper_color_decide(&g, 4, &limits).unwrap().unwrap();
        assert!(is_proper_coloring(&g, &c).unwrap());
    }

    #[test]
    fn edge_coloring_examples() {
        let limits = Limits::default();
        let k4 = complete(4).unwrap();
        let h = edge_color_decide(&k4, 3, &limits).unwrap().unwrap();
        assert!(is_proper_edge_coloring(&k4, &h).unwrap());
        assert!(edge_color_decide(&complete(3).unwrap(), 2, &limits).unwrap().is_none());
        let c6 = cycle(6).unwrap();
        let h = edge_color_decide(&c6, 2, &limits).unwrap().unwrap();
        assert!(is_proper_edge_coloring(&c6, &h).unwrap());
        assert!(edge_color_decide(&petersen(), 3, &limits).unwrap().is_none());
    }

    #[test]
    fn guard_applies() {
        let limits = Limits {
            chromatic_max_n: 3,
            ..Limits::default()
        };
        assert!(chromatic_number(&complete(4).unwrap(), &limits).is_err());
    }
}
