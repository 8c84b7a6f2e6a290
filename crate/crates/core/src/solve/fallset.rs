use alloc::vec::Vec;

use super::{fall_decide_backtrack, special_case_dispatch, FallResult, Limits};
use crate::graph::Graph;
use crate::Result;

/// The fall set of a graph: every `k` admitting a fall k-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FallSet {
    /// Ascending.
    pub members: Vec<usize>,
    /// Inclusive range `1..=δ(G)+1` that was probed; no larger `k` can be a
    /// member.
    pub probed: (usize, usize),
}

impl FallSet {
    /// χ_fall(G), the smallest member.
    pub fn chi_fall(&self) -> Option<usize> {
        self.members.first().copied()
    }

    /// ψ_fall(G), the largest member.
    pub fn psi_fall(&self) -> Option<usize> {
        self.members.last().copied()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.members.binary_search(&k).is_ok()
    }
}

/// Answers one `k` the way [`fall_set`] does: polynomial rules first, then
/// exact backtracking.
pub fn fall_probe(g: &Graph, k: usize, limits: &Limits) -> Result<FallResult> {
    match special_case_dispatch(g, k, limits)? {
        Some(answer) => Ok(answer),
        None => fall_decide_backtrack(g, k),
    }
}

pub fn fall_set(g: &Graph, limits: &Limits) -> Result<FallSet> {
    let top = g.min_degree() + 1;
    let mut members = Vec::new();
    for k in 1..=top {
        if fall_probe(g, k, limits)?.feasible {
            members.push(k);
        }
    }
    Ok(FallSet {
        members,
        probed: (1, top),
    })
}
