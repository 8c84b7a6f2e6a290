//! The naive baseline: enumerate every `k`-coloring in lexicographic order.
//!
//! Colorings with a monochromatic edge are cut as soon as the edge is
//! complete (they can never be fall colorings), but no other reasoning is
//! applied, so this stays an independent check of the smarter solvers.

use alloc::vec::Vec;

use super::{FallResult, Limits, Method, SolveStats};
use crate::graph::Graph;
use crate::verify::Coloring;
use crate::{Error, Result};

/// Exact count of labeled fall k-colorings and the lexicographically first
/// one.
pub fn oracle_fall(g: &Graph, k: usize, limits: &Limits) -> Result<FallResult> {
    let n = g.n();
    if n > limits.oracle_max_n {
        return Err(Error::SizeGuard {
            algorithm: "oracle",
            n,
            limit: limits.oracle_max_n,
        });
    }
    let mut state = Enumeration {
        g,
        k,
        earlier: g
            .vertices()
            .map(|v| g.neighbors(v).iter().filter(|&w| w < v).collect())
            .collect(),
        colors: alloc::vec![0; n],
        count: 0,
        first: None,
        nodes: 0,
    };
    if k > 0 && n > 0 {
        state.assign(0);
    }
    let witness = state
        .first
        .map(|c| Coloring::new(k, c).expect("colors within 1..=k"));
    Ok(FallResult {
        k,
        feasible: state.count > 0,
        witness,
        count: Some(state.count),
        method: Method::Oracle,
        stats: SolveStats {
            nodes: state.nodes,
            elapsed_micros: None,
        },
    })
}

struct Enumeration<'g> {
    g: &'g Graph,
    k: usize,
    earlier: Vec<Vec<usize>>,
    colors: Vec<usize>,
    count: u128,
    first: Option<Vec<usize>>,
    nodes: u64,
}

impl Enumeration<'_> {
    fn assign(&mut self, v: usize) {
        if v == self.g.n() {
            self.nodes += 1;
            if self.is_fall() {
                self.count += 1;
                if self.first.is_none() {
                    self.first = Some(self.colors.clone());
                }
            }
            return;
        }
        for c in 1..=self.k {
            if self.earlier[v].iter().any(|&w| self.colors[w] == c) {
                continue;
            }
            self.colors[v] = c;
            self.assign(v + 1);
        }
        self.colors[v] = 0;
    }

    fn is_fall(&self) -> bool {
        let mut used = alloc::vec![false; self.k];
        self.colors.iter().for_each(|&c| used[c - 1] = true);
        if !used.iter().all(|&u| u) {
            return false;
        }
        self.g.vertices().all(|v| {
            let mut seen = alloc::vec![false; self.k];
            seen[self.colors[v] - 1] = true;
            self.g
                .neighbors(v)
                .iter()
                .for_each(|w| seen[self.colors[w] - 1] = true);
            seen.into_iter().all(|s| s)
        })
    }
}
