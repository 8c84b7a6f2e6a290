//! Constraint-propagating backtracking for fall k-colorability.
//!
//! Each vertex carries a domain of still-possible colors (a `u64` mask, so
//! `k <= 64`). Propagation enforces two rules to a fixpoint:
//!
//! * properness: a vertex fixed to color `c` removes `c` from its neighbors;
//! * colorfulness: for every vertex `v` and color `j`, either `v` takes `j`
//!   or some neighbor does. A color no neighbor can take is forced onto `v`;
//!   a color `v` cannot take and only one neighbor can supply is forced onto
//!   that neighbor; and the `k` colors must be matchable to distinct
//!   members of the closed neighborhood of `v`.
//!
//! Branching picks the unfixed vertex with the smallest ratio of domain size
//! to degree, breaking ties by degeneracy order and then by index. Colors no vertex is
//! fixed to are interchangeable, so only the lowest such color is tried.

use alloc::vec::Vec;

use super::{degeneracy_order, FallResult, Method, SolveStats};
use crate::graph::Graph;
use crate::verify::Coloring;
use crate::{Error, Result};

const MAX_COLORS: usize = 64;

/// Decides `k ∈ fall(G)`, returning a witness when feasible.
pub fn fall_decide_backtrack(g: &Graph, k: usize) -> Result<FallResult> {
    if let Some(trivial) = trivially_infeasible(g, k) {
        return Ok(trivial);
    }
    if k > MAX_COLORS {
        return Err(Error::SizeGuard {
            algorithm: "backtrack (colors)",
            n: k,
            limit: MAX_COLORS,
        });
    }
    let mut search = Search::new(g, k);
    let full = search.full;
    let mut domains = alloc::vec![full; g.n()];
    let witness = if search.propagate(&mut domains, None) {
        search.branch(domains)
    } else {
        None
    };
    let coloring = witness.map(|d| {
        let colors = d.iter().map(|m| m.trailing_zeros() as usize + 1).collect();
        Coloring::new(k, colors).expect("colors within 1..=k")
    });
    Ok(FallResult {
        k,
        feasible: coloring.is_some(),
        witness: coloring,
        count: None,
        method: Method::Backtrack,
        stats: SolveStats {
            nodes: search.nodes,
            elapsed_micros: None,
        },
    })
}

/// Cases every route agrees on before doing any work.
pub(crate) fn trivially_infeasible(g: &Graph, k: usize) -> Option<FallResult> {
    let n = g.n();
    let hopeless = k == 0 || n == 0 || k > n || k > g.min_degree() + 1;
    hopeless.then(|| FallResult::infeasible(k, Method::Backtrack))
}

struct Search<'g> {
    g: &'g Graph,
    neighbors: Vec<Vec<usize>>,
    /// `v` followed by its neighbors.
    closed: Vec<Vec<usize>>,
    k: usize,
    rank: Vec<usize>,
    full: u64,
    nodes: u64,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, k: usize) -> Self {
        let mut rank = alloc::vec![0; g.n()];
        // Last removed in the smallest-last order is branched on first.
        for (i, v) in degeneracy_order(g).into_iter().rev().enumerate() {
            rank[v] = i;
        }
        Search {
            g,
            neighbors: g.vertices().map(|v| g.neighbors(v).to_vec()).collect(),
            closed: g
                .vertices()
                .map(|v| core::iter::once(v).chain(g.neighbors(v).iter()).collect())
                .collect(),
            k,
            rank,
            full: if k == 64 { !0 } else { (1u64 << k) - 1 },
            nodes: 0,
        }
    }

    fn branch(&mut self, domains: Vec<u64>) -> Option<Vec<u64>> {
        self.nodes += 1;
        // Smallest domain per degree first; exact comparison of the ratios.
        let Some(v) = (0..self.g.n())
            .filter(|&v| domains[v].count_ones() > 1)
            .min_by(|&a, &b| {
                let ra = domains[a].count_ones() as usize * self.neighbors[b].len();
                let rb = domains[b].count_ones() as usize * self.neighbors[a].len();
                ra.cmp(&rb).then(self.rank[a].cmp(&self.rank[b])).then(a.cmp(&b))
            })
        else {
            return Some(domains);
        };

        // A color no vertex is fixed to has been treated exactly like every
        // other such color so far, so they are interchangeable.
        let used = domains
            .iter()
            .filter(|d| d.count_ones() == 1)
            .fold(0, |acc, d| acc | d);
        let fresh = domains[v] & !used;
        let mut choices = domains[v] & used;
        if fresh != 0 {
            choices |= fresh & fresh.wrapping_neg();
        }
        while choices != 0 {
            let bit = choices & choices.wrapping_neg();
            choices &= choices - 1;
            let mut next = domains.clone();
            next[v] = bit;
            if self.propagate(&mut next, Some(v)) {
                if let Some(done) = self.branch(next) {
                    return Some(done);
                }
            }
        }
        None
    }

    /// Runs the propagation rules to a fixpoint. Returns `false` on a
    /// wipe-out. `changed` seeds the worklist; `None` checks every vertex.
    fn propagate(&self, dom: &mut [u64], changed: Option<usize>) -> bool {
        let n = self.g.n();
        let mut queued = alloc::vec![false; n];
        let mut work: Vec<usize> = Vec::new();
        let push = |v: usize, work: &mut Vec<usize>, queued: &mut [bool]| {
            if !queued[v] {
                queued[v] = true;
                work.push(v);
            }
        };
        match changed {
            Some(v) => {
                push(v, &mut work, &mut queued);
                for &w in &self.neighbors[v] {
                    push(w, &mut work, &mut queued);
                }
            }
            None => {
                for v in (0..n).rev() {
                    push(v, &mut work, &mut queued);
                }
            }
        }

        // Narrowing a domain can affect the vertex itself, its neighbors
        // (properness, their colorful check) and its neighbors' neighbors
        // (their supply counts); enqueue the vertex and its neighbors, whose
        // own narrowing cascades further.
        let mut narrowed: Vec<usize> = Vec::new();
        while let Some(v) = work.pop() {
            queued[v] = false;
            narrowed.clear();
            if !self.revise(v, dom, &mut narrowed) {
                return false;
            }
            for &u in &narrowed {
                push(u, &mut work, &mut queued);
                for &w in &self.neighbors[u] {
                    push(w, &mut work, &mut queued);
                }
            }
        }
        true
    }

    /// Applies every rule centered at `v`, recording vertices whose domain
    /// shrank.
    fn revise(&self, v: usize, dom: &mut [u64], narrowed: &mut Vec<usize>) -> bool {
        let own = dom[v];
        if own == 0 {
            return false;
        }
        if own.count_ones() == 1 {
            for &w in &self.neighbors[v] {
                if dom[w] & own != 0 {
                    dom[w] &= !own;
                    if dom[w] == 0 {
                        return false;
                    }
                    narrowed.push(w);
                }
            }
        }

        let (mut once, mut twice) = (0u64, 0u64);
        for &w in &self.neighbors[v] {
            twice |= once & dom[w];
            once |= dom[w];
        }

        let missing = self.full & !once;
        if missing != 0 {
            if missing.count_ones() > 1 || dom[v] & missing == 0 {
                return false;
            }
            if dom[v] != missing {
                dom[v] = missing;
                narrowed.push(v);
                // Fixing v feeds back into the properness rule on the next
                // visit.
            }
        }

        let need = self.full & !dom[v];
        if !self.suppliable(v, dom) {
            return false;
        }

        let mut forced = once & !twice & need;
        while forced != 0 {
            let bit = forced & forced.wrapping_neg();
            forced &= forced - 1;
            // An earlier forcing in this loop may have taken the only
            // supplier.
            let Some(&w) = self.neighbors[v].iter().find(|&&w| dom[w] & bit != 0) else {
                return false;
            };
            if dom[w] != bit {
                dom[w] = bit;
                narrowed.push(w);
            }
        }
        true
    }

    /// Hall's condition: all `k` colors can be given to distinct members of
    /// the closed neighborhood of `v`, each able to take its color. `v`
    /// itself supplies its own color.
    fn suppliable(&self, v: usize, dom: &[u64]) -> bool {
        let nbrs = &self.closed[v];
        if nbrs.len() < self.k {
            return false;
        }
        let mut holder = alloc::vec![usize::MAX; nbrs.len()];
        let mut seen = alloc::vec![false; nbrs.len()];
        for c in 0..self.k {
            seen.fill(false);
            if !augment(c, nbrs, dom, &mut holder, &mut seen) {
                return false;
            }
        }
        true
    }
}

/// Kuhn's augmenting path step: gives color `c` to some neighbor, moving
/// earlier assignments along the way if needed.
fn augment(c: usize, nbrs: &[usize], dom: &[u64], holder: &mut [usize], seen: &mut [bool]) -> bool {
    for (i, &w) in nbrs.iter().enumerate() {
        if seen[i] || dom[w] >> c & 1 == 0 {
            continue;
        }
        seen[i] = true;
        if holder[i] == usize::MAX || augment(holder[i], nbrs, dom, holder, seen) {
            holder[i] = c;
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, f_k, petersen};
    use crate::verify::is_fall_coloring;

    fn decide(g: &Graph, k: usize) -> FallResult {
        let r = fall_decide_backtrack(g, k).unwrap();
        if let Some(w) = &r.witness {
            assert!(is_fall_coloring(g, w).unwrap().valid);
        }
        r
    }

    #[test]
    fn c6_three_colors() {
        let r = decide(&cycle(6).unwrap(), 3);
        assert!(r.feasible);
        assert_eq!(r.witness.unwrap().canonical().colors(), &[1, 2, 3, 1, 2, 3]);
    }

    #[test]
    fn c5_never() {
        let c5 = cycle(5).unwrap();
        for k in 1..=6 {
            assert!(!decide(&c5, k).feasible, "k = {k}");
        }
    }

    #[test]
    fn f_k_gadgets() {
        for k in 3..=6 {
            assert!(decide(&f_k(k).unwrap(), k).feasible);
        }
    }

    #[test]
    fn cliques_and_bounds() {
        let k4 = complete(4).unwrap();
        assert!(decide(&k4, 4).feasible);
        assert!(!decide(&k4, 3).feasible);
        assert!(!decide(&k4, 0).feasible);
        assert!(!decide(&Graph::new(0, []).unwrap(), 1).feasible);
    }

    #[test]
    fn petersen_fall_set() {
        // Petersen: fall 4 would need χ(P²) = 4, but P² = K_10.
        let p = petersen();
        assert!(!decide(&p, 4).feasible);
        assert!(!decide(&p, 2).feasible);
        let oracle = super::super::oracle_fall(&p, 3, &Default::default()).unwrap();
        assert_eq!(decide(&p, 3).feasible, oracle.feasible);
    }
}
