//! Independent dominating sets, i.e. maximal independent sets.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::graph::{Graph, VertexSet};

/// All maximal independent sets, sorted lexicographically by member list.
pub fn enumerate_mis(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let _ = for_each_mis(g, |s| {
        out.push(s.clone());
        ControlFlow::<()>::Continue(())
    });
    out.sort();
    out
}

/// Streams every maximal independent set to `visit` (Bron–Kerbosch with
/// Tomita pivoting, run on the complement graph). Stops early when `visit`
/// breaks.
pub fn for_each_mis<B, F>(g: &Graph, mut visit: F) -> ControlFlow<B>
where
    F: FnMut(&VertexSet) -> ControlFlow<B>,
{
    let n = g.n();
    // Non-neighbors in G, excluding the vertex itself.
    let anti: Vec<VertexSet> = g
        .vertices()
        .map(|v| g.closed_neighborhood(v).complement())
        .collect();
    let mut r = VertexSet::new(n);
    bron_kerbosch(&anti, &mut r, VertexSet::full(n), VertexSet::new(n), &mut visit)
}

fn bron_kerbosch<B, F>(
    anti: &[VertexSet],
    r: &mut VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    visit: &mut F,
) -> ControlFlow<B>
where
    F: FnMut(&VertexSet) -> ControlFlow<B>,
{
    if p.is_empty() {
        if x.is_empty() {
            return visit(r);
        }
        return ControlFlow::Continue(());
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| (p.intersection(&anti[u]).len(), core::cmp::Reverse(u)))
        .expect("p nonempty");
    for v in p.difference(&anti[pivot]).iter() {
        r.insert(v);
        bron_kerbosch(
            anti,
            r,
            p.intersection(&anti[v]),
            x.intersection(&anti[v]),
            visit,
        )?;
        r.remove(v);
        p.remove(v);
        x.insert(v);
    }
    ControlFlow::Continue(())
}

/// Streams every independent dominating set `S` of `g` with `S ⊆ allowed`
/// (and `must ∈ S` when given), each exactly once, using polynomial space.
///
/// Domination is checked against all of `V`, not just `allowed`. The search
/// repeatedly takes the lowest vertex not yet dominated and branches on which
/// still-available vertex of its closed neighborhood dominates it, removing
/// each tried candidate before trying the next.
pub fn for_each_ids_within<B, F>(
    g: &Graph,
    must: Option<usize>,
    allowed: &VertexSet,
    mut visit: F,
) -> ControlFlow<B>
where
    F: FnMut(&VertexSet) -> ControlFlow<B>,
{
    let n = g.n();
    let mut chosen = VertexSet::new(n);
    let mut available = allowed.clone();
    let mut undominated = VertexSet::full(n);
    if let Some(v) = must {
        if !allowed.contains(v) {
            return ControlFlow::Continue(());
        }
        let closed = g.closed_neighborhood(v);
        chosen.insert(v);
        available.difference_with(&closed);
        undominated.difference_with(&closed);
    }
    extend_ids(g, &mut chosen, available, undominated, &mut visit)
}

fn extend_ids<B, F>(
    g: &Graph,
    chosen: &mut VertexSet,
    mut available: VertexSet,
    undominated: VertexSet,
    visit: &mut F,
) -> ControlFlow<B>
where
    F: FnMut(&VertexSet) -> ControlFlow<B>,
{
    let Some(target) = undominated.first() else {
        return visit(chosen);
    };
    let candidates = g.closed_neighborhood(target).intersection(&available);
    for y in candidates.iter() {
        let closed = g.closed_neighborhood(y);
        chosen.insert(y);
        extend_ids(
            g,
            chosen,
            available.difference(&closed),
            undominated.difference(&closed),
            visit,
        )?;
        chosen.remove(y);
        available.remove(y);
    }
    ControlFlow::Continue(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen};
    use crate::verify::is_ids;

    fn members(sets: &[VertexSet]) -> Vec<Vec<usize>> {
        sets.iter().map(VertexSet::to_vec).collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(
            members(&enumerate_mis(&complete(3).unwrap())),
            [[0], [1], [2]]
        );
        assert_eq!(
            members(&enumerate_mis(&cycle(4).unwrap())),
            [[0, 2], [1, 3]]
        );
        let p3 = members(&enumerate_mis(&path(3).unwrap()));
        assert_eq!(p3, [alloc::vec![0, 2], alloc::vec![1]]);
    }

    #[test]
    fn every_mis_is_ids_and_unique() {
        let g = petersen();
        let all = enumerate_mis(&g);
        for s in &all {
            assert!(is_ids(&g, s).unwrap());
        }
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn restricted_enumeration_matches_filter() {
        let g = petersen();
        let all = enumerate_mis(&g);
        let allowed = VertexSet::from_vertices(10, [0, 2, 3, 5, 6, 7, 8, 9]).unwrap();
        for must in [None, Some(0), Some(7), Some(1)] {
            let mut got = Vec::new();
            let _ = for_each_ids_within(&g, must, &allowed, |s| {
                got.push(s.clone());
                ControlFlow::<()>::Continue(())
            });
            got.sort();
            let expected: Vec<VertexSet> = all
                .iter()
                .filter(|s| s.is_subset(&allowed) && must.is_none_or(|v| s.contains(v)))
                .cloned()
                .collect();
            assert_eq!(got, expected, "must = {must:?}");
        }
    }
}
