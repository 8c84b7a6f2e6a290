//! Self-checking equivalence harness for the reductions.
//!
//! Each trial draws a random source instance, solves it with a brute-force
//! oracle, solves the reduced instance with the fall solvers, compares the
//! answers and pushes certificates through both lifts. Anything unexpected is
//! recorded against the instance, printed verbatim.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cnf::CnfFormula;
use super::edgecol::{lift_edge_coloring_to_fall, lift_fall_to_edge_coloring, reduce_edgecol_to_fallk};
use super::sat::{lift_assignment_to_ids, lift_ids_to_assignment, reduce_sat_to_2ids, SatGadget};
use super::trace::ReductionKind;
use super::vertex_coloring::{lift_coloring_to_fall, lift_fall_to_coloring, reduce_kcol_to_fallk};
use crate::graph::{classify, gnp_with, random_regular, Graph};
use crate::solve::{fall_probe, two_disjoint_ids, Limits};
use crate::verify::{is_proper_coloring, is_proper_edge_coloring, Coloring, EdgeColoring};
use crate::{Error, Result};

/// Which reduction a harness run exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Family {
    ThreeColFall3,
    KColFallK(usize),
    EdgeColFallK { k: usize, with_box: bool },
    SatTwoIds,
}

impl Family {
    pub fn kind(self) -> ReductionKind {
        match self {
            Family::ThreeColFall3 => ReductionKind::ThreeColToFall3,
            Family::KColFallK(_) => ReductionKind::KColToFallK,
            Family::EdgeColFallK { with_box: false, .. } => ReductionKind::EdgeColToFallK,
            Family::EdgeColFallK { with_box: true, .. } => ReductionKind::EdgeColToFallKBox,
            Family::SatTwoIds => ReductionKind::SatToTwoIds,
        }
    }

    pub fn k(self) -> Option<usize> {
        match self {
            Family::ThreeColFall3 => Some(3),
            Family::KColFallK(k) | Family::EdgeColFallK { k, .. } => Some(k),
            Family::SatTwoIds => None,
        }
    }

    /// Builds a family from a reduction kind; `k` is ignored where the
    /// reduction has no color parameter.
    pub fn from_kind(kind: ReductionKind, k: usize) -> Self {
        match kind {
            ReductionKind::ThreeColToFall3 => Family::ThreeColFall3,
            ReductionKind::KColToFallK => Family::KColFallK(k),
            ReductionKind::EdgeColToFallK => Family::EdgeColFallK { k, with_box: false },
            ReductionKind::EdgeColToFallKBox => Family::EdgeColFallK { k, with_box: true },
            ReductionKind::SatToTwoIds => Family::SatTwoIds,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k() {
            Some(k) if !matches!(self, Family::ThreeColFall3) => write!(f, "{} (k={k})", self.kind()),
            _ => write!(f, "{}", self.kind()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HarnessConfig {
    pub family: Family,
    pub trials: usize,
    /// Largest source size: vertices for graph families, variables and
    /// clauses for SAT.
    pub max_n: usize,
    pub seed: u64,
    pub limits: Limits,
}

impl HarnessConfig {
    pub fn new(family: Family, trials: usize, max_n: usize, seed: u64) -> Self {
        HarnessConfig {
            family,
            trials,
            max_n,
            seed,
            limits: Limits::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TrialOutcome {
    pub trial: usize,
    /// The source instance, printed verbatim.
    pub instance: String,
    pub source_feasible: bool,
    pub target_feasible: bool,
    pub target_size: (usize, usize),
    /// Empty when the trial passed.
    pub failures: Vec<String>,
}

impl TrialOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HarnessFailure {
    pub trial: usize,
    pub instance: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HarnessReport {
    pub family: String,
    pub trials: usize,
    pub max_n: usize,
    pub seed: u64,
    /// Trials whose source instance was a yes-instance.
    pub feasible: usize,
    pub failures: Vec<HarnessFailure>,
}

impl HarnessReport {
    /// Aggregates outcomes in trial order, whatever order they arrive in.
    pub fn from_outcomes(config: &HarnessConfig, mut outcomes: Vec<TrialOutcome>) -> Self {
        outcomes.sort_by_key(|o| o.trial);
        let feasible = outcomes.iter().filter(|o| o.source_feasible).count();
        let failures = outcomes
            .into_iter()
            .flat_map(|o| {
                let (trial, instance) = (o.trial, o.instance);
                o.failures.into_iter().map(move |reason| HarnessFailure {
                    trial,
                    instance: instance.clone(),
                    reason,
                })
            })
            .collect();
        HarnessReport {
            family: alloc::format!("{}", config.family),
            trials: config.trials,
            max_n: config.max_n,
            seed: config.seed,
            feasible,
            failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs every trial in order.
pub fn equivalence_harness(config: &HarnessConfig) -> HarnessReport {
    let outcomes = (0..config.trials).map(|t| run_trial(config, t)).collect();
    HarnessReport::from_outcomes(config, outcomes)
}

/// A random source instance of a harness trial.
#[derive(Debug, Clone, PartialEq)]
pub enum SourceInstance {
    Graph(Graph),
    Formula(CnfFormula),
}

/// The instance trial `trial` runs on. It depends only on the seed and the
/// trial index, so trials may run in any order or concurrently.
pub fn source_instance(config: &HarnessConfig, trial: usize) -> Result<SourceInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(trial as u64);
    let rng = &mut rng;
    Ok(match config.family {
        Family::ThreeColFall3 | Family::KColFallK(_) => {
            let n = rng.gen_range(1..=config.max_n.max(1));
            let p = rng.gen_range(0.2..=1.0);
            SourceInstance::Graph(gnp_with(n, p, rng))
        }
        Family::EdgeColFallK { k, .. } => {
            let sizes: Vec<usize> = (k + 1..=config.max_n.max(k + 1))
                .filter(|n| n * k % 2 == 0)
                .collect();
            if sizes.is_empty() {
                return Err(Error::InvalidParameter(alloc::format!(
                    "no {k}-regular graph fits max_n = {}",
                    config.max_n
                )));
            }
            let n = sizes[rng.gen_range(0..sizes.len())];
            SourceInstance::Graph(random_regular(n, k, rng.gen())?)
        }
        Family::SatTwoIds => SourceInstance::Formula(random_monotone(rng, config.max_n)?),
    })
}

/// Runs trial `trial` on [`source_instance`].
pub fn run_trial(config: &HarnessConfig, trial: usize) -> TrialOutcome {
    let mut out = TrialOutcome {
        trial,
        instance: String::new(),
        source_feasible: false,
        target_feasible: false,
        target_size: (0, 0),
        failures: Vec::new(),
    };
    let result = source_instance(config, trial).and_then(|source| match (config.family, source) {
        (Family::ThreeColFall3, SourceInstance::Graph(g)) => vertex_trial(config, 3, &g, &mut out),
        (Family::KColFallK(k), SourceInstance::Graph(g)) => vertex_trial(config, k, &g, &mut out),
        (Family::EdgeColFallK { k, with_box }, SourceInstance::Graph(g)) => {
            edge_trial(config, k, with_box, &g, &mut out)
        }
        (Family::SatTwoIds, SourceInstance::Formula(phi)) => sat_trial(config, &phi, &mut out),
        _ => unreachable!("source_instance matches the family"),
    });
    if let Err(e) = result {
        out.failures.push(alloc::format!("error: {e}"));
    }
    out
}

fn describe_graph(g: &Graph) -> String {
    alloc::format!("n={} edges={:?}", g.n(), g.edges())
}

fn check(out: &mut TrialOutcome, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        out.failures.push(what());
    }
}

fn vertex_trial(config: &HarnessConfig, k: usize, g: &Graph, out: &mut TrialOutcome) -> Result<()> {
    let g = g.clone();
    let n = g.n();
    out.instance = describe_graph(&g);

    let (target, trace) = reduce_kcol_to_fallk(&g, k)?;
    out.target_size = (target.n(), target.m());

    // Structure.
    let report = classify(&target);
    check(out, report.bipartite, || "target is not bipartite".into());
    let m = g.m();
    let (want_n, want_m) = if k == 3 {
        (6 * n + m, 2 * m + 6 * n)
    } else {
        (2 * k * n + m * (1 + 2 * k * (k - 3)), n * k * (k - 1) + 2 * m + m * (k - 3) * (k * (k - 1) + 1))
    };
    check(out, (target.n(), target.m()) == (want_n, want_m), || {
        alloc::format!(
            "target has {} vertices and {} edges, expected {want_n} and {want_m}",
            target.n(),
            target.m()
        )
    });
    for v in g.vertices() {
        let want = g.degree(v) + if k == 3 { 2 } else { k - 1 };
        check(out, target.degree(v) == want, || {
            alloc::format!("original vertex {v} has degree {}, expected {want}", target.degree(v))
        });
    }
    if g.max_degree() <= 2 * k - 2 {
        let cap = 3 * (k - 1);
        check(out, target.max_degree() <= cap, || {
            alloc::format!("target max degree {} exceeds {cap}", target.max_degree())
        });
    }

    // Equivalence.
    let source = brute_force_proper_coloring(&g, k);
    let solved = fall_probe(&target, k, &config.limits)?;
    out.source_feasible = source.is_some();
    out.target_feasible = solved.feasible;
    check(out, source.is_some() == solved.feasible, || {
        alloc::format!(
            "source {k}-colorable = {}, target fall {k}-colorable = {}",
            source.is_some(),
            solved.feasible
        )
    });

    // Certificates in both directions.
    if let Some(c) = &source {
        match lift_coloring_to_fall(&trace, &target, c) {
            Ok(lifted) => match lift_fall_to_coloring(&trace, &target, &lifted) {
                Ok(back) => check(out, back == *c, || "round trip changed the source coloring".into()),
                Err(e) => out.failures.push(alloc::format!("reverse lift of lifted coloring: {e}")),
            },
            Err(e) => out.failures.push(alloc::format!("forward lift: {e}")),
        }
    }
    if let Some(w) = &solved.witness {
        match lift_fall_to_coloring(&trace, &target, w) {
            Ok(c) => check(out, is_proper_coloring(&g, &c)?, || "reverse lift is not proper".into()),
            Err(e) => out.failures.push(alloc::format!("reverse lift of solver witness: {e}")),
        }
    }
    Ok(())
}

fn edge_trial(
    config: &HarnessConfig,
    k: usize,
    with_box: bool,
    g: &Graph,
    out: &mut TrialOutcome,
) -> Result<()> {
    let g = g.clone();
    out.instance = describe_graph(&g);

    let (target, trace) = reduce_edgecol_to_fallk(&g, k, with_box)?;
    out.target_size = (target.n(), target.m());
    let layers = if with_box { 2 } else { 1 };
    let degree = 2 * k - 2 + (layers - 1);
    check(out, target.n() == layers * g.m(), || {
        alloc::format!("target has {} vertices, expected {}", target.n(), layers * g.m())
    });
    check(out, target.regular_degree() == Some(degree), || {
        alloc::format!("target is not {degree}-regular")
    });

    let source = brute_force_edge_coloring(&g, k);
    let solved = fall_probe(&target, k, &config.limits)?;
    out.source_feasible = source.is_some();
    out.target_feasible = solved.feasible;
    check(out, source.is_some() == solved.feasible, || {
        alloc::format!(
            "source edge {k}-colorable = {}, target fall {k}-colorable = {}",
            source.is_some(),
            solved.feasible
        )
    });
    if let Some(h) = &source {
        match lift_edge_coloring_to_fall(&trace, &target, h) {
            Ok(c) => match lift_fall_to_edge_coloring(&trace, &target, &c) {
                Ok(back) => check(out, back == *h, || "round trip changed the edge coloring".into()),
                Err(e) => out.failures.push(alloc::format!("reverse lift of lifted coloring: {e}")),
            },
            Err(e) => out.failures.push(alloc::format!("forward lift: {e}")),
        }
    }
    if let Some(w) = &solved.witness {
        match lift_fall_to_edge_coloring(&trace, &target, w) {
            Ok(h) => check(out, is_proper_edge_coloring(&g, &h)?, || "reverse lift is not proper".into()),
            Err(e) => out.failures.push(alloc::format!("reverse lift of solver witness: {e}")),
        }
    }
    Ok(())
}

fn random_monotone(rng: &mut ChaCha8Rng, max: usize) -> Result<CnfFormula> {
    let n = rng.gen_range(3..=max.max(3));
    let m = rng.gen_range(1..=max.max(1));
    let clauses = (0..m)
        .map(|_| {
            let positive = rng.gen_bool(0.5);
            let vars = rand::seq::index::sample(rng, n, 3);
            vars.iter()
                .map(|v| if positive { v as i32 + 1 } else { -(v as i32 + 1) })
                .collect()
        })
        .collect();
    CnfFormula::new(n, clauses)
}

fn sat_trial(config: &HarnessConfig, phi: &CnfFormula, out: &mut TrialOutcome) -> Result<()> {
    let phi = phi.clone();
    out.instance = alloc::format!("vars={} clauses={:?}", phi.num_vars(), phi.clauses());
    let (n, m) = (phi.num_vars(), phi.clauses().len());

    let (target, trace) = reduce_sat_to_2ids(&phi)?;
    out.target_size = (target.n(), target.m());
    check(out, target.n() == 8 * n + m && target.m() == 8 * n + 3 * m, || {
        alloc::format!("target has {} vertices and {} edges", target.n(), target.m())
    });
    check(out, classify(&target).triangle_free, || "target has a triangle".into());

    let source = brute_force_sat(&phi)?;
    let solved = two_disjoint_ids(&target, &config.limits)?;
    out.source_feasible = source.is_some();
    out.target_feasible = solved.is_some();
    check(out, source.is_some() == solved.is_some(), || {
        alloc::format!(
            "formula satisfiable = {}, two disjoint IDS = {}",
            source.is_some(),
            solved.is_some()
        )
    });
    if let Some(tau) = &source {
        match lift_assignment_to_ids(&trace, &target, tau) {
            Ok((a, b)) => match lift_ids_to_assignment(&trace, &target, &a, &b) {
                Ok(back) => check(out, back == *tau, || "round trip changed the assignment".into()),
                Err(e) => out.failures.push(alloc::format!("reverse lift of lifted pair: {e}")),
            },
            Err(e) => out.failures.push(alloc::format!("forward lift: {e}")),
        }
    }
    if let Some((a, b)) = &solved {
        let union = a.union(b);
        for var in 0..n {
            let (va, vc) = (SatGadget::A.vertex(var), SatGadget::C.vertex(var));
            let together = (a.contains(va) && a.contains(vc)) || (b.contains(va) && b.contains(vc));
            check(out, union.contains(va) && union.contains(vc) && together, || {
                alloc::format!("a_{var} and c_{var} are not in the same set")
            });
        }
        match lift_ids_to_assignment(&trace, &target, a, b) {
            Ok(tau) => check(out, phi.is_satisfied_by(&tau), || "recovered assignment fails".into()),
            Err(e) => out.failures.push(alloc::format!("reverse lift of solver pair: {e}")),
        }
    }
    Ok(())
}

/// Plain backtracking over vertices in index order.
pub fn brute_force_proper_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    fn go(g: &Graph, k: usize, v: usize, colors: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 1..=k {
            if g.neighbors(v).iter().all(|u| u > v || colors[u] != c) {
                colors[v] = c;
                if go(g, k, v + 1, colors) {
                    return true;
                }
            }
        }
        colors[v] = 0;
        false
    }
    if k == 0 && g.n() > 0 {
        return None;
    }
    let mut colors = alloc::vec![0; g.n()];
    go(g, k, 0, &mut colors).then(|| Coloring::new(k.max(1), colors).expect("colors in range"))
}

/// Plain backtracking over edges in [`Graph::edges`] order.
pub fn brute_force_edge_coloring(g: &Graph, k: usize) -> Option<EdgeColoring> {
    fn go(g: &Graph, k: usize, e: usize, colors: &mut Vec<usize>) -> bool {
        if e == g.m() {
            return true;
        }
        let (u, v) = g.edges()[e];
        for c in 1..=k {
            let clash = g.edges()[..e]
                .iter()
                .zip(colors.iter())
                .any(|(&(a, b), &d)| d == c && (a == u || a == v || b == u || b == v));
            if !clash {
                colors[e] = c;
                if go(g, k, e + 1, colors) {
                    return true;
                }
            }
        }
        false
    }
    let mut colors = alloc::vec![0; g.m()];
    if k == 0 && g.m() > 0 {
        return None;
    }
    go(g, k, 0, &mut colors).then(|| EdgeColoring::new(k, colors).expect("colors in range"))
}

/// Tries all `2^n` assignments in binary order; the first satisfying one is
/// returned.
pub fn brute_force_sat(phi: &CnfFormula) -> Result<Option<Vec<bool>>> {
    const MAX_VARS: usize = 20;
    let n = phi.num_vars();
    if n > MAX_VARS {
        return Err(Error::SizeGuard {
            algorithm: "brute-force SAT",
            n,
            limit: MAX_VARS,
        });
    }
    Ok((0u32..1 << n)
        .map(|bits| (0..n).map(|i| bits >> i & 1 == 1).collect::<Vec<bool>>())
        .find(|tau| phi.is_satisfied_by(tau)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, petersen};

    #[test]
    fn brute_force_oracles() {
        assert!(brute_force_proper_coloring(&complete(4).unwrap(), 3).is_none());
        assert!(brute_force_proper_coloring(&complete(4).unwrap(), 4).is_some());
        assert!(brute_force_edge_coloring(&petersen(), 3).is_none());
        assert!(brute_force_edge_coloring(&complete(4).unwrap(), 3).is_some());
        let phi = CnfFormula::new(3, alloc::vec![alloc::vec![1, 2, 3], alloc::vec![-1, -2, -3]]).unwrap();
        let tau = brute_force_sat(&phi).unwrap().unwrap();
        assert!(phi.is_satisfied_by(&tau));
    }

    #[test]
    fn trials_are_reproducible() {
        let config = HarnessConfig::new(Family::ThreeColFall3, 3, 5, 11);
        assert_eq!(run_trial(&config, 2), run_trial(&config, 2));
        let report = equivalence_harness(&config);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn small_runs_pass() {
        for family in [
            Family::KColFallK(4),
            Family::EdgeColFallK { k: 3, with_box: false },
            Family::EdgeColFallK { k: 3, with_box: true },
            Family::SatTwoIds,
        ] {
            let report = equivalence_harness(&HarnessConfig::new(family, 3, 5, 3));
            assert!(report.passed(), "{report:?}");
        }
    }
}
