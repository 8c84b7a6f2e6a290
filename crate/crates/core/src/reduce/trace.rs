use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ReductionKind {
    #[cfg_attr(feature = "serde", serde(rename = "3col-fall3"))]
    ThreeColToFall3,
    #[cfg_attr(feature = "serde", serde(rename = "kcol-fallk"))]
    KColToFallK,
    #[cfg_attr(feature = "serde", serde(rename = "edgecol-fallk"))]
    EdgeColToFallK,
    #[cfg_attr(feature = "serde", serde(rename = "edgecol-fallk-box"))]
    EdgeColToFallKBox,
    #[cfg_attr(feature = "serde", serde(rename = "sat-2ids"))]
    SatToTwoIds,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 5] = [
        ReductionKind::ThreeColToFall3,
        ReductionKind::KColToFallK,
        ReductionKind::EdgeColToFallK,
        ReductionKind::EdgeColToFallKBox,
        ReductionKind::SatToTwoIds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::ThreeColToFall3 => "3col-fall3",
            ReductionKind::KColToFallK => "kcol-fallk",
            ReductionKind::EdgeColToFallK => "edgecol-fallk",
            ReductionKind::EdgeColToFallKBox => "edgecol-fallk-box",
            ReductionKind::SatToTwoIds => "sat-2ids",
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ReductionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(alloc::format!("unknown reduction `{s}`")))
    }
}

/// What a target vertex stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "role", rename_all = "snake_case"))]
pub enum Role {
    /// Source vertex `v`, kept at the same index.
    Original { vertex: usize },
    /// The vertex placed on source edge `{u, v}`.
    Subdivision { u: usize, v: usize },
    /// Position `position` of the gadget owned by source vertex (or SAT
    /// variable) `owner`.
    Gadget { owner: usize, position: usize },
    /// Position `position` of the `copy`-th pendant structure hanging off
    /// target vertex `owner`.
    Pendant {
        owner: usize,
        copy: usize,
        position: usize,
    },
    /// The vertex of clause `clause`.
    Clause { clause: usize },
    /// Literal vertex of variable `var` (0-based); `positive` selects `x`
    /// over `x̄`.
    Literal { var: usize, positive: bool },
    /// Source edge `{u, v}` in layer `layer` (0 unless a `□ K_2` was taken).
    EdgeVertex { u: usize, v: usize, layer: usize },
}

/// Links a reduced instance back to its source.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ReductionTrace {
    pub kind: ReductionKind,
    /// `(n, m)` of a source graph, or `(variables, clauses)` of a formula.
    pub source_size: (usize, usize),
    /// Number of colors, where the reduction has one.
    pub k: Option<usize>,
    /// `role_map[t]` is the role of target vertex `t`.
    pub role_map: Vec<Role>,
}

impl ReductionTrace {
    pub(crate) fn expect_kind(&self, allowed: &[ReductionKind], expected: &'static str) -> Result<()> {
        if allowed.contains(&self.kind) {
            Ok(())
        } else {
            Err(Error::TraceMismatch {
                expected,
                found: self.kind.name(),
            })
        }
    }

    pub(crate) fn expect_target(&self, target: &Graph) -> Result<()> {
        if self.role_map.len() != target.n() {
            return Err(Error::InvalidParameter(alloc::format!(
                "trace covers {} vertices, target has {}",
                self.role_map.len(),
                target.n()
            )));
        }
        Ok(())
    }

    /// Reconstructs the source graph of a graph-to-graph reduction from the
    /// subdivision or edge roles.
    pub fn source_graph(&self) -> Result<Graph> {
        let edges = self.role_map.iter().filter_map(|r| match *r {
            Role::Subdivision { u, v } => Some((u, v)),
            Role::EdgeVertex { u, v, .. } => Some((u, v)),
            _ => None,
        });
        Graph::new(self.source_size.0, edges)
    }

    /// Target index of every original vertex, indexed by source vertex.
    pub fn originals(&self) -> Vec<Option<usize>> {
        let mut out = alloc::vec![None; self.source_size.0];
        for (t, r) in self.role_map.iter().enumerate() {
            if let Role::Original { vertex } = *r {
                if vertex < out.len() {
                    out[vertex] = Some(t);
                }
            }
        }
        out
    }

    /// Checks that the role map is total and that original/literal roles are
    /// injective.
    pub fn validate(&self) -> Result<()> {
        let mut seen = alloc::collections::BTreeSet::new();
        for r in &self.role_map {
            let key = match *r {
                Role::Original { vertex } => (0usize, vertex, 0usize),
                Role::Literal { var, positive } => (1, var, positive as usize),
                _ => continue,
            };
            if !seen.insert(key) {
                return Err(Error::InvalidParameter(alloc::format!("duplicate role {r:?}")));
            }
        }
        Ok(())
    }
}
