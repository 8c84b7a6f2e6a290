//! Exact solvers.
//!
//! Four independent routes decide fall k-colorability:
//!
//! | route | function | answers |
//! |-------|----------|---------|
//! | exhaustive `k^n` enumeration | [`oracle_fall`] | decision, count, first witness |
//! | propagating backtracking | [`fall_decide_backtrack`] | decision, witness |
//! | inclusion–exclusion over vertex subsets | [`fall_count_incexc`] | decision, count |
//! | branching over independent dominating sets | [`fall_decide_polyspace`] | decision |
//!
//! [`special_case_dispatch`] answers the cases with a polynomial
//! characterization and [`fall_set`] combines it with backtracking.

mod backtrack;
mod chromatic;
mod disjoint;
mod fallset;
mod incexc;
mod mis;
mod oracle;
mod polyspace;
mod special;

use alloc::vec::Vec;

use crate::verify::Coloring;

pub use backtrack::fall_decide_backtrack;
pub use chromatic::{chromatic_number, edge_color_decide, proper_color_decide};
pub use disjoint::two_disjoint_ids;
pub use fallset::{fall_probe, fall_set, FallSet};
pub use incexc::fall_count_incexc;
pub use mis::{enumerate_mis, for_each_ids_within, for_each_mis};
pub use oracle::oracle_fall;
pub use polyspace::fall_decide_polyspace;
pub use special::{special_case_dispatch, Rule};

/// Size guards for the exponential algorithms. These are configuration; the
/// defaults keep every shipped test and example well under a minute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Limits {
    /// Largest `n` for the `k^n` enumeration oracle.
    pub oracle_max_n: usize,
    /// Largest `n` for the inclusion–exclusion counter (memory is
    /// `O(2^n · n)`).
    pub incexc_max_n: usize,
    /// Largest `n` for exact chromatic number and proper/edge coloring.
    pub chromatic_max_n: usize,
    /// Largest `n` on which the dispatcher applies the regular-graph square
    /// criterion.
    pub regular_rule_max_n: usize,
    /// Largest `n` for searches that enumerate maximal independent sets.
    pub mis_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            oracle_max_n: 14,
            incexc_max_n: 20,
            chromatic_max_n: 40,
            regular_rule_max_n: 40,
            mis_max_n: 96,
        }
    }
}

/// Which algorithm produced a [`FallResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Method {
    Oracle,
    Backtrack,
    InclusionExclusion,
    Polyspace,
    Rule(Rule),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SolveStats {
    /// Search nodes, enumerated colorings or subsets visited, depending on
    /// the method.
    pub nodes: u64,
    /// Wall time; filled in by callers that have a clock.
    pub elapsed_micros: Option<u64>,
}

/// Answer to "is `k` in fall(G)?".
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FallResult {
    pub k: usize,
    pub feasible: bool,
    pub witness: Option<Coloring>,
    /// Number of labeled fall k-colorings, when the method counts.
    pub count: Option<u128>,
    pub method: Method,
    pub stats: SolveStats,
}

impl FallResult {
    pub(crate) fn infeasible(k: usize, method: Method) -> Self {
        FallResult {
            k,
            feasible: false,
            witness: None,
            count: None,
            method,
            stats: SolveStats::default(),
        }
    }

    pub(crate) fn with_witness(k: usize, witness: Coloring, method: Method) -> Self {
        FallResult {
            k,
            feasible: true,
            witness: Some(witness),
            count: None,
            method,
            stats: SolveStats::default(),
        }
    }

    /// Number of unordered partitions into `k` independent dominating sets.
    pub fn partition_count(&self) -> Option<u128> {
        let factorial: u128 = (1..=self.k as u128).product();
        self.count.map(|c| c / factorial)
    }
}

/// Degeneracy (smallest-last) ordering: repeatedly removes a vertex of
/// minimum remaining degree, lowest index first. Returned in removal order.
pub(crate) fn degeneracy_order(g: &crate::Graph) -> Vec<usize> {
    let n = g.n();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = alloc::vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("vertex left");
        removed[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    order
}
