//! Edge k-coloring of a k-regular graph to fall k-coloring of its line graph.
//!
//! The base target is `L(G)`, which is `(2k-2)`-regular. The boxed variant
//! takes `L(G) □ K_2`, which is `(2k-1)`-regular and has the same fall set;
//! its vertex `(e, side)` has index `2e + side`.

use alloc::vec::Vec;

use super::trace::{ReductionKind, ReductionTrace, Role};
use crate::graph::{cartesian_product, complete, line_graph, Graph};
use crate::verify::{is_fall_coloring, is_proper_edge_coloring, Coloring, EdgeColoring};
use crate::{Error, Result};

const KINDS: [ReductionKind; 2] = [ReductionKind::EdgeColToFallK, ReductionKind::EdgeColToFallKBox];

pub fn reduce_edgecol_to_fallk(
    g: &Graph,
    k: usize,
    with_box: bool,
) -> Result<(Graph, ReductionTrace)> {
    if k < 3 {
        return Err(Error::InvalidParameter(alloc::format!("k must be at least 3, got {k}")));
    }
    if g.n() == 0 || g.regular_degree() != Some(k) {
        return Err(Error::InvalidParameter(alloc::format!("source graph is not {k}-regular")));
    }
    let line = line_graph(g)?;
    let (target, kind, layers) = if with_box {
        let boxed = cartesian_product(&line, &complete(2)?)?;
        (boxed, ReductionKind::EdgeColToFallKBox, 2)
    } else {
        (line, ReductionKind::EdgeColToFallK, 1)
    };
    let mut role_map = Vec::with_capacity(target.n());
    for &(u, v) in g.edges() {
        for layer in 0..layers {
            role_map.push(Role::EdgeVertex { u, v, layer });
        }
    }
    let trace = ReductionTrace {
        kind,
        source_size: (g.n(), g.m()),
        k: Some(k),
        role_map,
    };
    Ok((target, trace))
}

fn layers(trace: &ReductionTrace) -> usize {
    match trace.kind {
        ReductionKind::EdgeColToFallKBox => 2,
        _ => 1,
    }
}

fn trace_k(trace: &ReductionTrace) -> Result<usize> {
    trace
        .k
        .ok_or_else(|| Error::InvalidParameter("trace carries no k".into()))
}

/// A proper edge k-coloring becomes a fall k-coloring: in a k-regular graph
/// every vertex sees all k colors, so every edge does too. In the boxed
/// variant the second layer uses the shifted coloring `c mod k + 1`.
pub fn lift_edge_coloring_to_fall(
    trace: &ReductionTrace,
    target: &Graph,
    h: &EdgeColoring,
) -> Result<Coloring> {
    trace.expect_kind(&KINDS, "edgecol-fallk")?;
    trace.expect_target(target)?;
    let k = trace_k(trace)?;
    let source = trace.source_graph()?;
    if h.colors().len() != source.m() || h.k() > k {
        return Err(Error::MalformedColoring(alloc::format!(
            "expected an edge {k}-coloring of {} edges",
            source.m()
        )));
    }
    if !is_proper_edge_coloring(&source, h)? {
        return Err(Error::InvalidCertificate("edge coloring is not proper".into()));
    }
    let layers = layers(trace);
    let colors = h
        .colors()
        .iter()
        .flat_map(|&c| [c, c % k + 1].into_iter().take(layers))
        .collect();
    let lifted = Coloring::new(k, colors)?;
    let report = is_fall_coloring(target, &lifted)?;
    if !report.valid {
        return Err(Error::InvalidCertificate(alloc::format!(
            "lifted coloring fails verification: {:?}",
            report.violations
        )));
    }
    Ok(lifted)
}

/// Reads the edge coloring off layer 0. Any proper coloring of the target
/// restricts to a proper coloring of `L(G)`, which is a proper edge coloring.
pub fn lift_fall_to_edge_coloring(
    trace: &ReductionTrace,
    target: &Graph,
    c: &Coloring,
) -> Result<EdgeColoring> {
    trace.expect_kind(&KINDS, "edgecol-fallk")?;
    trace.expect_target(target)?;
    let k = trace_k(trace)?;
    if c.k() != k {
        return Err(Error::MalformedColoring(alloc::format!(
            "expected a {k}-coloring, got k = {}",
            c.k()
        )));
    }
    let report = is_fall_coloring(target, c)?;
    if !report.valid {
        return Err(Error::InvalidCertificate(alloc::format!(
            "not a fall {k}-coloring: {:?}",
            report.violations
        )));
    }
    let layers = layers(trace);
    let colors = c.colors().iter().step_by(layers).copied().collect();
    let h = EdgeColoring::new(k, colors)?;
    if !is_proper_edge_coloring(&trace.source_graph()?, &h)? {
        return Err(Error::InvalidCertificate("recovered edge coloring is not proper".into()));
    }
    Ok(h)
}
