//! JSON shapes written and read by the command line.

use fallkit_core::reduce::{ReductionKind, ReductionTrace, Role};
use fallkit_core::solve::{FallResult, FallSet, Method, Rule};
use serde::{Deserialize, Serialize};

pub fn method_name(m: Method) -> String {
    match m {
        Method::Oracle => "oracle".into(),
        Method::Backtrack => "backtrack".into(),
        Method::InclusionExclusion => "incexc".into(),
        Method::Polyspace => "polyspace".into(),
        Method::Rule(r) => format!(
            "rule:{}",
            match r {
                Rule::DegreeBound => "degree-bound",
                Rule::SingleClass => "single-class",
                Rule::Bipartite => "bipartite",
                Rule::Cycles => "cycles",
                Rule::Chordal => "chordal",
                Rule::RegularSquare => "regular-square",
            }
        ),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsJson {
    pub nodes: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_micros: Option<u64>,
}

/// `{problem, k, feasible, count?, witness?, stats}`. The witness lists the
/// color of each vertex in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveJson {
    pub problem: String,
    pub k: usize,
    pub feasible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<u128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    pub method: String,
    pub stats: StatsJson,
}

impl From<&FallResult> for SolveJson {
    fn from(r: &FallResult) -> Self {
        SolveJson {
            problem: "fall-coloring".into(),
            k: r.k,
            feasible: r.feasible,
            count: r.count,
            witness: r.witness.as_ref().map(|w| w.colors().to_vec()),
            method: method_name(r.method),
            stats: StatsJson {
                nodes: r.stats.nodes,
                elapsed_micros: r.stats.elapsed_micros,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FallSetJson {
    pub members: Vec<usize>,
    pub probed: [usize; 2],
    pub chi_fall: Option<usize>,
    pub psi_fall: Option<usize>,
}

impl From<&FallSet> for FallSetJson {
    fn from(f: &FallSet) -> Self {
        FallSetJson {
            members: f.members.clone(),
            probed: [f.probed.0, f.probed.1],
            chi_fall: f.chi_fall(),
            psi_fall: f.psi_fall(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Vertices of a source graph or variables of a formula.
    pub source_n: usize,
    /// Edges of a source graph or clauses of a formula.
    pub source_m: usize,
}

/// `{kind, params, role_map}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub kind: ReductionKind,
    pub params: TraceParams,
    pub role_map: Vec<Role>,
}

impl From<&ReductionTrace> for TraceJson {
    fn from(t: &ReductionTrace) -> Self {
        TraceJson {
            kind: t.kind,
            params: TraceParams {
                k: t.k,
                source_n: t.source_size.0,
                source_m: t.source_size.1,
            },
            role_map: t.role_map.clone(),
        }
    }
}

impl From<TraceJson> for ReductionTrace {
    fn from(j: TraceJson) -> Self {
        ReductionTrace {
            kind: j.kind,
            source_size: (j.params.source_n, j.params.source_m),
            k: j.params.k,
            role_map: j.role_map,
        }
    }
}

/// Pretty JSON with a trailing newline; deterministic for equal values.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("schema types serialize") + "\n"
}
