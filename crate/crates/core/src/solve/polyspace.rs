//! Polynomial-space decision by recursive set partition over independent
//! dominating sets.
//!
//! The lowest uncovered vertex must belong to the next class, so the search
//! branches over every independent dominating set of `G` that contains it
//! and lies inside the uncovered part, then recurses with one class fewer.
//! Each unordered partition is reached exactly once.

use core::ops::ControlFlow;

use super::backtrack::trivially_infeasible;
use super::mis::for_each_ids_within;
use super::{FallResult, Method, SolveStats};
use crate::graph::{Graph, VertexSet};
use crate::Result;

pub fn fall_decide_polyspace(g: &Graph, k: usize) -> Result<FallResult> {
    if let Some(mut trivial) = trivially_infeasible(g, k) {
        trivial.method = Method::Polyspace;
        return Ok(trivial);
    }
    let mut nodes = 0;
    let feasible = partition(g, &VertexSet::full(g.n()), k, &mut nodes);
    Ok(FallResult {
        k,
        feasible,
        witness: None,
        count: None,
        method: Method::Polyspace,
        stats: SolveStats {
            nodes,
            elapsed_micros: None,
        },
    })
}

fn partition(g: &Graph, uncovered: &VertexSet, classes: usize, nodes: &mut u64) -> bool {
    *nodes += 1;
    let Some(pivot) = uncovered.first() else {
        return classes == 0;
    };
    if classes == 0 || uncovered.len() < classes {
        return false;
    }
    let found = for_each_ids_within(g, Some(pivot), uncovered, |class| {
        if partition(g, &uncovered.difference(class), classes - 1, nodes) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found.is_break()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn examples() {
        assert!(fall_decide_polyspace(&cycle(6).unwrap(), 3).unwrap().feasible);
        assert!(!fall_decide_polyspace(&complete(4).unwrap(), 3).unwrap().feasible);
        assert!(fall_decide_polyspace(&cycle(4).unwrap(), 2).unwrap().feasible);
        assert!(!fall_decide_polyspace(&cycle(5).unwrap(), 2).unwrap().feasible);
        assert!(fall_decide_polyspace(&complete(1).unwrap(), 1).unwrap().feasible);
    }
}
