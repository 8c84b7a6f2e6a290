//! Monotone 3-SAT to two disjoint independent dominating sets.
//!
//! Variable `i` becomes the gadget `X_i`: a 5-cycle `x_i, a_i, b_i, c_i, x̄_i`
//! with one pendant on each of `a_i, b_i, c_i`. Each clause becomes a vertex
//! joined to the literal vertices of its three literals. Gadget `i` occupies
//! target vertices `8i..8i+8` in the order of [`SatGadget`]; clause `j` is
//! vertex `8n + j`.

use alloc::vec::Vec;

use super::cnf::CnfFormula;
use super::trace::{ReductionKind, ReductionTrace, Role};
use crate::graph::{Graph, VertexSet};
use crate::verify::{are_disjoint_ids, is_dominating};
use crate::{Error, Result};

/// Offsets inside one variable gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SatGadget {
    Positive = 0,
    A = 1,
    B = 2,
    C = 3,
    Negative = 4,
    PendantA = 5,
    PendantB = 6,
    PendantC = 7,
}

impl SatGadget {
    pub const SIZE: usize = 8;

    /// Target vertex of this gadget part for variable `var` (0-based).
    pub fn vertex(self, var: usize) -> usize {
        Self::SIZE * var + self as usize
    }
}

pub fn reduce_sat_to_2ids(phi: &CnfFormula) -> Result<(Graph, ReductionTrace)> {
    if let Some(j) = phi.first_mixed_clause() {
        return Err(Error::InvalidParameter(alloc::format!(
            "clause {j} mixes positive and negative literals"
        )));
    }
    use SatGadget::*;
    let n = phi.num_vars();
    let m = phi.clauses().len();
    let mut roles = Vec::with_capacity(8 * n + m);
    let mut edges = Vec::with_capacity(8 * n + 3 * m);
    for var in 0..n {
        let at = |part: SatGadget| part.vertex(var);
        roles.push(Role::Literal { var, positive: true });
        for position in 0..3 {
            roles.push(Role::Gadget { owner: var, position });
        }
        roles.push(Role::Literal { var, positive: false });
        for part in [A, B, C] {
            roles.push(Role::Pendant {
                owner: at(part),
                copy: 0,
                position: 0,
            });
        }
        edges.extend([
            (at(Positive), at(A)),
            (at(A), at(B)),
            (at(B), at(C)),
            (at(C), at(Negative)),
            (at(Negative), at(Positive)),
            (at(A), at(PendantA)),
            (at(B), at(PendantB)),
            (at(C), at(PendantC)),
        ]);
    }
    for (j, clause) in phi.clauses().iter().enumerate() {
        let vertex = roles.len();
        roles.push(Role::Clause { clause: j });
        for &lit in clause {
            let var = lit.unsigned_abs() as usize - 1;
            let part = if lit > 0 { Positive } else { Negative };
            edges.push((vertex, part.vertex(var)));
        }
    }
    let target = Graph::new(roles.len(), edges)?;
    let trace = ReductionTrace {
        kind: ReductionKind::SatToTwoIds,
        source_size: (n, m),
        k: None,
        role_map: roles,
    };
    Ok((target, trace))
}

/// Builds `(I1, I2)` from a satisfying assignment: `I1` holds the true
/// literal of each variable, every `b_i` and the pendants of `a_i, c_i`;
/// `I2` holds every `a_i, c_i`, the pendant of `b_i` and all clause
/// vertices.
pub fn lift_assignment_to_ids(
    trace: &ReductionTrace,
    target: &Graph,
    tau: &[bool],
) -> Result<(VertexSet, VertexSet)> {
    use SatGadget::*;
    trace.expect_kind(&[ReductionKind::SatToTwoIds], "sat-2ids")?;
    trace.expect_target(target)?;
    let (n, m) = trace.source_size;
    if tau.len() != n {
        return Err(Error::InvalidParameter(alloc::format!(
            "assignment has {} values for {n} variables",
            tau.len()
        )));
    }
    let mut first = VertexSet::new(target.n());
    let mut second = VertexSet::new(target.n());
    for (var, &value) in tau.iter().enumerate() {
        first.insert(if value { Positive } else { Negative }.vertex(var));
        for part in [B, PendantA, PendantC] {
            first.insert(part.vertex(var));
        }
        for part in [A, C, PendantB] {
            second.insert(part.vertex(var));
        }
    }
    for j in 0..m {
        second.insert(SatGadget::SIZE * n + j);
    }
    if !is_dominating(target, &first)? {
        let clause = (0..m)
            .find(|&j| {
                let v = SatGadget::SIZE * n + j;
                !target.neighbors(v).intersects(&first)
            })
            .unwrap_or(0);
        return Err(Error::InvalidCertificate(alloc::format!(
            "assignment does not satisfy clause {clause}: its vertex is not dominated by I1"
        )));
    }
    if !are_disjoint_ids(target, &first, &second)? {
        return Err(Error::InvalidCertificate(
            "constructed sets are not disjoint independent dominating sets".into(),
        ));
    }
    Ok((first, second))
}

/// Reads an assignment off two disjoint independent dominating sets: `x_i`
/// is true iff its positive literal vertex is in `I1 ∪ I2`. Variables whose
/// literal vertices are both outside the union are set to false.
pub fn lift_ids_to_assignment(
    trace: &ReductionTrace,
    target: &Graph,
    first: &VertexSet,
    second: &VertexSet,
) -> Result<Vec<bool>> {
    trace.expect_kind(&[ReductionKind::SatToTwoIds], "sat-2ids")?;
    trace.expect_target(target)?;
    if !are_disjoint_ids(target, first, second)? {
        return Err(Error::InvalidCertificate(
            "sets are not disjoint independent dominating sets".into(),
        ));
    }
    let union = first.union(second);
    let (n, m) = trace.source_size;
    let tau: Vec<bool> = (0..n)
        .map(|var| union.contains(SatGadget::Positive.vertex(var)))
        .collect();

    // Each clause vertex must see a true literal.
    for j in 0..m {
        let clause = SatGadget::SIZE * n + j;
        let satisfied = target.neighbors(clause).iter().any(|lit| match trace.role_map[lit] {
            Role::Literal { var, positive } => tau[var] == positive,
            _ => false,
        });
        if !satisfied {
            return Err(Error::InvalidCertificate(alloc::format!(
                "recovered assignment leaves clause {j} unsatisfied"
            )));
        }
    }
    Ok(tau)
}
