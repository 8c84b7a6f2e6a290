//! Counting fall k-colorings by inclusion–exclusion over vertex subsets.
//!
//! Let `a_X(z) = Σ z^|S|` over independent dominating sets `S ⊆ X`. The
//! coefficient of `z^n` in `a_X(z)^k` counts ordered `k`-tuples of such sets
//! inside `X` whose sizes sum to `n`. Summing over `X ⊆ V` with sign
//! `(-1)^{n-|X|}` keeps the tuples that cover `V`; a cover of `V` whose sizes
//! sum to `n` has pairwise disjoint parts, so what remains is exactly the
//! number of ordered partitions of `V` into `k` independent dominating sets.
//!
//! The tables `a_X` are built with one subset-sum (zeta) transform per set
//! size. Arithmetic is modulo `2^128`, which is exact because the true count
//! is at most `k^n`, checked to fit beforehand.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::backtrack::trivially_infeasible;
use super::mis::for_each_mis;
use super::{FallResult, Limits, Method, SolveStats};
use crate::graph::Graph;
use crate::{Error, Result};

/// Hard ceiling independent of configuration: subset masks are `u32`.
const MAX_N: usize = 30;

pub fn fall_count_incexc(g: &Graph, k: usize, limits: &Limits) -> Result<FallResult> {
    let n = g.n();
    let limit = limits.incexc_max_n.min(MAX_N);
    if n > limit {
        return Err(Error::SizeGuard {
            algorithm: "inclusion-exclusion",
            n,
            limit,
        });
    }
    if let Some(mut trivial) = trivially_infeasible(g, k) {
        trivial.method = Method::InclusionExclusion;
        trivial.count = Some(0);
        return Ok(trivial);
    }
    if (k as u128).checked_pow(n as u32).is_none() {
        return Err(Error::SizeGuard {
            algorithm: "inclusion-exclusion (count width)",
            n,
            limit: n - 1,
        });
    }

    let mut sets: Vec<u32> = Vec::new();
    let _ = for_each_mis(g, |s| {
        sets.push(s.iter().fold(0u32, |m, v| m | (1 << v)));
        ControlFlow::<()>::Continue(())
    });
    let min_size = sets.iter().map(|s| s.count_ones()).min().unwrap_or(0) as usize;
    let max_size = sets.iter().map(|s| s.count_ones()).max().unwrap_or(0) as usize;

    // layers[s - min_size][X] = number of IDS of size s contained in X.
    let subsets = 1usize << n;
    let mut layers: Vec<Vec<u32>> = alloc::vec![alloc::vec![0; subsets]; max_size - min_size + 1];
    for &s in &sets {
        layers[s.count_ones() as usize - min_size][s as usize] += 1;
    }
    for layer in &mut layers {
        for bit in 0..n {
            let b = 1usize << bit;
            for x in 0..subsets {
                if x & b != 0 {
                    layer[x] += layer[x ^ b];
                }
            }
        }
    }

    let mut total: u128 = 0;
    let mut poly = alloc::vec![0u128; n + 1];
    let mut nodes = 0u64;
    for x in 0..subsets {
        poly.iter_mut().for_each(|c| *c = 0);
        let mut any = false;
        for (i, layer) in layers.iter().enumerate() {
            if layer[x] != 0 {
                poly[min_size + i] = layer[x] as u128;
                any = true;
            }
        }
        if !any {
            continue;
        }
        nodes += 1;
        let term = truncated_power_top(&poly, k, n);
        if (n - (x as u32).count_ones() as usize) % 2 == 0 {
            total = total.wrapping_add(term);
        } else {
            total = total.wrapping_sub(term);
        }
    }

    Ok(FallResult {
        k,
        feasible: total > 0,
        witness: None,
        count: Some(total),
        method: Method::InclusionExclusion,
        stats: SolveStats {
            nodes,
            elapsed_micros: None,
        },
    })
}

/// Coefficient of `z^n` in `poly^k`, working modulo `2^128` and dropping
/// terms above degree `n`.
fn truncated_power_top(poly: &[u128], k: usize, n: usize) -> u128 {
    let mut result = alloc::vec![0u128; n + 1];
    result[0] = 1;
    let mut base = poly.to_vec();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_truncated(&result, &base, n);
        }
        e >>= 1;
        if e > 0 {
            base = mul_truncated(&base, &base, n);
        }
    }
    result[n]
}

fn mul_truncated(a: &[u128], b: &[u128], n: usize) -> Vec<u128> {
    let mut out = alloc::vec![0u128; n + 1];
    for (i, &ai) in a.iter().enumerate().filter(|(_, &c)| c != 0) {
        for (j, &bj) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] = out[i + j].wrapping_add(ai.wrapping_mul(bj));
        }
    }
    out
}
