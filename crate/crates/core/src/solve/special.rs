//! Polynomial-time answers for inputs with a known characterization.

use alloc::vec::Vec;

use super::chromatic::proper_color_decide;
use super::{FallResult, Limits, Method};
use crate::graph::{bipartition, components, is_chordal, power, Graph};
use crate::verify::Coloring;
use crate::Result;

/// The characterization that settled a query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Rule {
    /// No vertices, `k = 0`, `k > n` or `k > δ + 1`.
    DegreeBound,
    /// `k = 1`: feasible iff the graph is edgeless.
    SingleClass,
    /// `k = 2`: feasible iff bipartite without isolated vertices.
    Bipartite,
    /// Disjoint union of cycles: `k ∈ {2, 3}` and `k` divides every length.
    Cycles,
    /// Chordal: the fall set is empty or `{δ + 1}`.
    Chordal,
    /// `r`-regular with `k = r + 1`: feasible iff `χ(G²) = r + 1`.
    RegularSquare,
}

/// Returns a definitive answer when one of the rules applies, otherwise
/// `None`. Feasible answers always carry a witness.
pub fn special_case_dispatch(g: &Graph, k: usize, limits: &Limits) -> Result<Option<FallResult>> {
    let n = g.n();
    let delta = g.min_degree();
    let settle = |rule: Rule, witness: Option<Coloring>| {
        Some(match witness {
            Some(w) => FallResult::with_witness(k, w, Method::Rule(rule)),
            None => FallResult::infeasible(k, Method::Rule(rule)),
        })
    };

    if n == 0 || k == 0 || k > n || k > delta + 1 {
        return Ok(settle(Rule::DegreeBound, None));
    }
    if k == 1 {
        let witness = (g.m() == 0).then(|| Coloring::new(1, alloc::vec![1; n]).expect("k = 1"));
        return Ok(settle(Rule::SingleClass, witness));
    }
    if g.regular_degree() == Some(2) {
        return Ok(settle(Rule::Cycles, cycle_union_coloring(g, k)));
    }
    if is_chordal(g) && k != delta + 1 {
        return Ok(settle(Rule::Chordal, None));
    }
    if k == 2 {
        let witness = bipartition(g).map(|side| {
            Coloring::new(2, side.into_iter().map(|s| s as usize + 1).collect())
                .expect("two sides")
        });
        return Ok(settle(Rule::Bipartite, witness));
    }
    if let Some(r) = g.regular_degree() {
        if k == r + 1 && n <= limits.regular_rule_max_n && n <= limits.chromatic_max_n {
            // Every closed neighborhood is a clique of G², so a proper
            // (r+1)-coloring of G² shows each vertex all other colors.
            let square = power(g, 2)?;
            let witness = proper_color_decide(&square, k, limits)?;
            return Ok(settle(Rule::RegularSquare, witness));
        }
    }
    Ok(None)
}

/// Colors each cycle `1, 2, ..., k, 1, 2, ...` in traversal order from its
/// smallest vertex, if `k` divides every cycle length.
fn cycle_union_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    if !(2..=3).contains(&k) {
        return None;
    }
    let mut colors = alloc::vec![0usize; g.n()];
    for comp in components(g) {
        if comp.len() % k != 0 {
            return None;
        }
        let start = comp.first().expect("nonempty component");
        let mut order: Vec<usize> = alloc::vec![start];
        let mut prev = start;
        let mut cur = g.neighbors(start).first().expect("degree two");
        while cur != start {
            order.push(cur);
            let next = g
                .neighbors(cur)
                .iter()
                .find(|&w| w != prev)
                .expect("degree two");
            prev = cur;
            cur = next;
        }
        for (i, v) in order.into_iter().enumerate() {
            colors[v] = i % k + 1;
        }
    }
    Some(Coloring::new(k, colors).expect("colors within 1..=k"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union, random_chordal_ktree};
    use crate::verify::is_fall_coloring;

    fn dispatch(g: &Graph, k: usize) -> Option<FallResult> {
        let r = special_case_dispatch(g, k, &Limits::default()).unwrap();
        if let Some(w) = r.as_ref().and_then(|r| r.witness.as_ref()) {
            assert!(is_fall_coloring(g, w).unwrap().valid);
        }
        r
    }

    #[test]
    fn cycles_rule() {
        let r = dispatch(&cycle(12).unwrap(), 3).unwrap();
        assert!(r.feasible);
        assert_eq!(r.method, Method::Rule(Rule::Cycles));
        let two = disjoint_union(&cycle(6).unwrap(), &cycle(9).unwrap());
        assert!(dispatch(&two, 3).unwrap().feasible);
        assert!(!dispatch(&two, 2).unwrap().feasible);
    }

    #[test]
    fn chordal_rule() {
        let g = random_chordal_ktree(8, 3, 1).unwrap();
        let r = dispatch(&g, 2).unwrap();
        assert!(!r.feasible);
        assert_eq!(r.method, Method::Rule(Rule::Chordal));
        // δ + 1 = 4 is left to exact search.
        assert!(dispatch(&g, 4).is_none());
    }

    #[test]
    fn regular_square_rule() {
        let r = dispatch(&complete(4).unwrap(), 4).unwrap();
        assert!(r.feasible);
        // K4 is chordal with δ + 1 = 4, so the square rule decides it.
        assert_eq!(r.method, Method::Rule(Rule::RegularSquare));
    }

    #[test]
    fn small_k() {
        assert!(dispatch(&crate::graph::edgeless(3), 1).unwrap().feasible);
        assert!(!dispatch(&complete(2).unwrap(), 1).unwrap().feasible);
        assert!(dispatch(&cycle(4).unwrap(), 2).unwrap().feasible);
        assert!(!dispatch(&cycle(4).unwrap(), 4).unwrap().feasible);
    }

    #[test]
    fn undecided_case() {
        // Petersen is 3-regular and not chordal; k = 3 has no rule.
        assert!(dispatch(&crate::graph::petersen(), 3).is_none());
    }
}
