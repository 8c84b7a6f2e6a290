//! k-coloring to fall k-coloring: subdivide every edge, hang a uniquely
//! fall-colorable gadget on every source vertex, and pad each subdivision
//! vertex with pendant gadgets until it needs every color.
//!
//! Target layout for a source with `n` vertices and `m` edges:
//!
//! * `0..n`: the source vertices;
//! * `n..n+m`: one subdivision vertex per source edge, in sorted edge order;
//! * for `k = 3`: five cycle vertices `w_{v,1..5}` per source vertex, so that
//!   `v, w_{v,1}, ..., w_{v,5}` is a 6-cycle;
//! * for `k >= 4`: the other `2k - 1` vertices of an `F_k` copy per source
//!   vertex, which sits at `F_k` index 0, followed by `k - 3` pendant `F_k`
//!   copies per subdivision vertex, each attached at its index 0.

use alloc::vec::Vec;

use super::trace::{ReductionKind, ReductionTrace, Role};
use crate::graph::{f_k, Graph};
use crate::solve::fall_decide_backtrack;
use crate::verify::{is_fall_coloring, is_proper_coloring, Coloring};
use crate::{Error, Result};

const KINDS: [ReductionKind; 2] = [ReductionKind::ThreeColToFall3, ReductionKind::KColToFallK];

/// The 3-coloring reduction with 6-cycle gadgets: `n + m + 5n` vertices and
/// `2m + 6n` edges.
pub fn reduce_3col_to_fall3(g: &Graph) -> Result<(Graph, ReductionTrace)> {
    let (n, m) = (g.n(), g.m());
    let mut roles: Vec<Role> = (0..n).map(|vertex| Role::Original { vertex }).collect();
    let mut edges = Vec::with_capacity(2 * m + 6 * n);
    push_subdivisions(g, &mut roles, &mut edges);
    for v in 0..n {
        let base = roles.len();
        for position in 1..=5 {
            roles.push(Role::Gadget { owner: v, position });
        }
        edges.push((v, base));
        edges.push((v, base + 4));
        for i in 0..4 {
            edges.push((base + i, base + i + 1));
        }
    }
    let target = Graph::new(roles.len(), edges)?;
    let trace = ReductionTrace {
        kind: ReductionKind::ThreeColToFall3,
        source_size: (n, m),
        k: Some(3),
        role_map: roles,
    };
    Ok((target, trace))
}

/// The k-coloring reduction with `F_k` gadgets. For `k = 3` this is exactly
/// [`reduce_3col_to_fall3`]. Otherwise the target has
/// `2k·n + m·(1 + 2k(k-3))` vertices.
pub fn reduce_kcol_to_fallk(g: &Graph, k: usize) -> Result<(Graph, ReductionTrace)> {
    if k < 3 {
        return Err(Error::InvalidParameter(alloc::format!(
            "k-coloring reduction needs k >= 3, got {k}"
        )));
    }
    if k == 3 {
        return reduce_3col_to_fall3(g);
    }
    let gadget = f_k(k)?;
    let (n, m) = (g.n(), g.m());
    let mut roles: Vec<Role> = (0..n).map(|vertex| Role::Original { vertex }).collect();
    let mut edges = Vec::new();
    push_subdivisions(g, &mut roles, &mut edges);

    for v in 0..n {
        let base = roles.len();
        for position in 1..2 * k {
            roles.push(Role::Gadget { owner: v, position });
        }
        let at = |p: usize| if p == 0 { v } else { base + p - 1 };
        edges.extend(gadget.edges().iter().map(|&(a, b)| (at(a), at(b))));
    }
    for e in 0..m {
        let x = n + e;
        for copy in 0..k - 3 {
            let base = roles.len();
            for position in 0..2 * k {
                roles.push(Role::Pendant {
                    owner: x,
                    copy,
                    position,
                });
            }
            edges.extend(gadget.edges().iter().map(|&(a, b)| (base + a, base + b)));
            edges.push((x, base));
        }
    }
    let target = Graph::new(roles.len(), edges)?;
    let trace = ReductionTrace {
        kind: ReductionKind::KColToFallK,
        source_size: (n, m),
        k: Some(k),
        role_map: roles,
    };
    Ok((target, trace))
}

fn push_subdivisions(g: &Graph, roles: &mut Vec<Role>, edges: &mut Vec<(usize, usize)>) {
    for &(u, v) in g.edges() {
        let x = roles.len();
        roles.push(Role::Subdivision { u, v });
        edges.push((u, x));
        edges.push((v, x));
    }
}

/// The fall k-coloring of `F_k`, found by search. `F_k` has exactly one up
/// to renaming colors, so the result is canonical: vertex 0 gets color 1.
pub fn f_k_fall_coloring(k: usize) -> Result<Coloring> {
    let gadget = f_k(k)?;
    let found = fall_decide_backtrack(&gadget, k)?;
    let witness = found.witness.ok_or_else(|| {
        Error::InvalidCertificate(alloc::format!("F_{k} has no fall {k}-coloring"))
    })?;
    Ok(witness.canonical())
}

/// Restricts a fall k-coloring of the target to the source vertices, which
/// yields a proper k-coloring of the source.
pub fn lift_fall_to_coloring(trace: &ReductionTrace, target: &Graph, c: &Coloring) -> Result<Coloring> {
    trace.expect_kind(&KINDS, "3col-fall3 or kcol-fallk")?;
    trace.expect_target(target)?;
    let k = trace.k.unwrap_or(3);
    if c.k() != k {
        return Err(Error::InvalidCertificate(alloc::format!(
            "certificate has {} colors, reduction uses {k}",
            c.k()
        )));
    }
    let report = is_fall_coloring(target, c)?;
    if !report.valid {
        return Err(Error::InvalidCertificate(alloc::format!(
            "not a fall {k}-coloring of the target ({} violations)",
            report.violations.len()
        )));
    }
    let colors = trace
        .originals()
        .into_iter()
        .map(|t| t.map(|t| c.color(t)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InvalidParameter("trace is missing an original vertex".into()))?;
    let lifted = Coloring::new(k, colors)?;
    if !is_proper_coloring(&trace.source_graph()?, &lifted)? {
        return Err(Error::InvalidCertificate(
            "restriction is not a proper coloring of the source".into(),
        ));
    }
    Ok(lifted)
}

/// Extends a proper k-coloring of the source to a fall k-coloring of the
/// target.
///
/// Subdivision vertices take the lowest color missing from both endpoints
/// (for `k = 3` the only one); the pendant gadgets of a subdivision vertex
/// take the colors it still lacks in ascending order; every gadget is then
/// completed by its unique fall coloring, renamed to agree at its anchor.
pub fn lift_coloring_to_fall(trace: &ReductionTrace, target: &Graph, c: &Coloring) -> Result<Coloring> {
    trace.expect_kind(&KINDS, "3col-fall3 or kcol-fallk")?;
    trace.expect_target(target)?;
    let k = trace.k.unwrap_or(3);
    let source = trace.source_graph()?;
    if c.len() != source.n() || c.k() > k {
        return Err(Error::MalformedColoring(alloc::format!(
            "expected a {k}-coloring of {} vertices",
            source.n()
        )));
    }
    if !is_proper_coloring(&source, c)? {
        return Err(Error::InvalidCertificate("source coloring is not proper".into()));
    }

    let mut colors = alloc::vec![0usize; target.n()];
    // Colors still owed to each subdivision vertex by its pendant gadgets.
    let mut owed: Vec<Vec<usize>> = alloc::vec![Vec::new(); target.n()];
    for (t, role) in trace.role_map.iter().enumerate() {
        match *role {
            Role::Original { vertex } => colors[t] = c.color(vertex),
            Role::Subdivision { u, v } => {
                let (cu, cv) = (c.color(u), c.color(v));
                let mut free = (1..=k).filter(|&x| x != cu && x != cv);
                colors[t] = free.next().expect("k >= 3 leaves a free color");
                owed[t] = free.collect();
            }
            _ => {}
        }
    }

    let gadget_coloring = if trace.kind == ReductionKind::KColToFallK {
        Some(f_k_fall_coloring(k)?)
    } else {
        None
    };
    for (t, role) in trace.role_map.iter().enumerate() {
        match *role {
            Role::Gadget { owner, position } => {
                colors[t] = match &gadget_coloring {
                    None => six_cycle_color(c.color(owner), position),
                    Some(fk) => anchored(fk, c.color(owner), position),
                };
            }
            Role::Pendant {
                owner,
                copy,
                position,
            } => {
                let anchor = *owed[owner].get(copy).ok_or_else(|| {
                    Error::InvalidParameter(alloc::format!("pendant copy {copy} of {owner}"))
                })?;
                let fk = gadget_coloring
                    .as_ref()
                    .ok_or_else(|| Error::InvalidParameter("pendant in a k = 3 trace".into()))?;
                colors[t] = anchored(fk, anchor, position);
            }
            _ => {}
        }
    }

    let lifted = Coloring::new(k, colors)?;
    let report = is_fall_coloring(target, &lifted)?;
    if !report.valid {
        return Err(Error::InvalidCertificate(alloc::format!(
            "lifted coloring fails verification: {:?}",
            report.violations.first()
        )));
    }
    Ok(lifted)
}

/// Color of `w_{v,position}` when `v` has color `anchor`. With the other two
/// colors `b < c`, the cycle `v, w_1, ..., w_5` reads `anchor, b, c, anchor,
/// b, c`.
fn six_cycle_color(anchor: usize, position: usize) -> usize {
    let mut others = (1..=3).filter(|&x| x != anchor);
    let (b, c) = (others.next().unwrap_or(1), others.next().unwrap_or(1));
    match position % 3 {
        1 => b,
        2 => c,
        _ => anchor,
    }
}

/// Color of `F_k` position `position` in the canonical fall coloring renamed
/// so that position 0 has color `anchor`.
fn anchored(fk: &Coloring, anchor: usize, position: usize) -> usize {
    let base = fk.color(0);
    match fk.color(position) {
        x if x == base => anchor,
        x if x == anchor => base,
        x => x,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{classify, complete, edgeless};

    #[test]
    fn triangle_sizes() {
        let (t, trace) = reduce_3col_to_fall3(&complete(3).unwrap()).unwrap();
        assert_eq!((t.n(), t.m()), (21, 24));
        assert!(classify(&t).bipartite);
        trace.validate().unwrap();
        for v in 0..3 {
            assert_eq!(t.degree(v), 4);
        }
    }

    #[test]
    fn kcol_k3_matches_3col() {
        let g = complete(3).unwrap();
        assert_eq!(reduce_kcol_to_fallk(&g, 3).unwrap(), reduce_3col_to_fall3(&g).unwrap());
        assert!(reduce_kcol_to_fallk(&g, 2).is_err());
    }

    #[test]
    fn k4_on_k4_size() {
        let (t, _) = reduce_kcol_to_fallk(&complete(4).unwrap(), 4).unwrap();
        assert_eq!(t.n(), 86);
        assert!(classify(&t).bipartite);
    }

    #[test]
    fn six_cycle_table() {
        // anchor 1: w1 = 2, w2 = 3, w3 = 1, w4 = 2, w5 = 3
        let row: Vec<usize> = (1..=5).map(|p| six_cycle_color(1, p)).collect();
        assert_eq!(row, [2, 3, 1, 2, 3]);
    }

    #[test]
    fn lift_round_trip_on_triangle() {
        let g = complete(3).unwrap();
        let (t, trace) = reduce_3col_to_fall3(&g).unwrap();
        let c = Coloring::new(3, alloc::vec![3, 1, 2]).unwrap();
        let up = lift_coloring_to_fall(&trace, &t, &c).unwrap();
        let down = lift_fall_to_coloring(&trace, &t, &up).unwrap();
        assert_eq!(down, c);
    }

    #[test]
    fn lifts_for_single_vertex() {
        for k in 3..=5 {
            let (t, trace) = reduce_kcol_to_fallk(&complete(1).unwrap(), k).unwrap();
            assert_eq!(t.n(), 2 * k);
            let c = Coloring::new(k, alloc::vec![2]).unwrap();
            let up = lift_coloring_to_fall(&trace, &t, &c).unwrap();
            assert_eq!(up.color(0), 2);
            assert_eq!(lift_fall_to_coloring(&trace, &t, &up).unwrap(), c);
        }
    }

    #[test]
    fn lift_rejects_bad_input() {
        let g = complete(3).unwrap();
        let (t, trace) = reduce_3col_to_fall3(&g).unwrap();
        let improper = Coloring::new(3, alloc::vec![1, 1, 2]).unwrap();
        assert!(matches!(
            lift_coloring_to_fall(&trace, &t, &improper),
            Err(Error::InvalidCertificate(_))
        ));
        let junk = Coloring::new(3, alloc::vec![1; 21]).unwrap();
        assert!(matches!(
            lift_fall_to_coloring(&trace, &t, &junk),
            Err(Error::InvalidCertificate(_))
        ));
    }

    #[test]
    fn isolated_sources() {
        let (t, trace) = reduce_3col_to_fall3(&edgeless(2)).unwrap();
        assert_eq!((t.n(), t.m()), (12, 12));
        let c = Coloring::new(3, alloc::vec![1, 1]).unwrap();
        assert!(lift_coloring_to_fall(&trace, &t, &c).is_ok());
    }

    #[test]
    fn f_k_coloring_is_canonical() {
        for k in 3..=6 {
            let c = f_k_fall_coloring(k).unwrap();
            assert_eq!(c.color(0), 1);
            // Classes are {(0, j), (1, j)}.
            for j in 0..k {
                assert_eq!(c.color(j), c.color(k + j));
            }
        }
    }
}
