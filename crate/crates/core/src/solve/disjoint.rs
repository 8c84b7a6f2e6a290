use core::ops::ControlFlow;

use super::mis::{for_each_ids_within, for_each_mis};
use super::Limits;
use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

/// Two disjoint independent dominating sets, if the graph has them.
///
/// Streams maximal independent sets `S1` and, for each, searches for an
/// independent dominating set inside `V \ S1`. The first pair found is
/// returned; the order is deterministic.
pub fn two_disjoint_ids(g: &Graph, limits: &Limits) -> Result<Option<(VertexSet, VertexSet)>> {
    if g.n() > limits.mis_max_n {
        return Err(Error::SizeGuard {
            algorithm: "two disjoint IDS",
            n: g.n(),
            limit: limits.mis_max_n,
        });
    }
    let found = for_each_mis(g, |first| {
        let rest = first.complement();
        let second = for_each_ids_within(g, None, &rest, |s| ControlFlow::Break(s.clone()));
        match second {
            ControlFlow::Break(s) => ControlFlow::Break((first.clone(), s)),
            ControlFlow::Continue(()) => ControlFlow::Continue(()),
        }
    });
    Ok(match found {
        ControlFlow::Break(pair) => Some(pair),
        ControlFlow::Continue(()) => None,
    })
}
