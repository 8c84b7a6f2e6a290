//! Hardness reductions as instance transformers.
//!
//! Each transformer returns the target graph and a [`ReductionTrace`] that
//! records the role of every target vertex. The traces drive certificate
//! lifting in both directions, and every lift verifies its output before
//! returning it.
//!
//! | reduction | source problem | target problem |
//! |-----------|----------------|----------------|
//! | [`reduce_3col_to_fall3`] | 3-coloring | fall 3-coloring (bipartite) |
//! | [`reduce_kcol_to_fallk`] | k-coloring | fall k-coloring (bipartite) |
//! | [`reduce_edgecol_to_fallk`] | edge k-coloring of a k-regular graph | fall k-coloring of a (2k-2)- or (2k-1)-regular graph |
//! | [`reduce_sat_to_2ids`] | monotone 3-SAT | two disjoint independent dominating sets (triangle-free) |

mod cnf;
mod edgecol;
mod harness;
mod sat;
mod trace;
mod vertex_coloring;

pub use cnf::CnfFormula;
pub use edgecol::{lift_edge_coloring_to_fall, lift_fall_to_edge_coloring, reduce_edgecol_to_fallk};
pub use harness::{
    brute_force_edge_coloring, brute_force_proper_coloring, brute_force_sat,
    equivalence_harness, run_trial, source_instance, Family, HarnessConfig, HarnessFailure, HarnessReport,
    SourceInstance, TrialOutcome,
};
pub use sat::{lift_assignment_to_ids, lift_ids_to_assignment, reduce_sat_to_2ids, SatGadget};
pub use trace::{ReductionKind, ReductionTrace, Role};
pub use vertex_coloring::{
    f_k_fall_coloring, lift_coloring_to_fall, lift_fall_to_coloring, reduce_3col_to_fall3,
    reduce_kcol_to_fallk,
};
