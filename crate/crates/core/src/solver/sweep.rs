//! Exhaustive checks of the two open conjectures over small graphs.

use std::collections::BTreeMap;
use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{
    enumerate_connected_graphs, enumerate_trees, graph_canonical_form, tree_canonical_form,
};
use super::{chi_nl_exact, SolveOptions, SolveStatus, SolverError};
use crate::bounds::chi_closed_form;
use crate::graph::{diameter, FamilySpec, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Conjecture {
    /// Every tree with χ_NL = k has maximum degree at most (k-1)².
    Delta,
    /// Every connected graph of diameter d has χ_NL at least χ_NL(P_{d+1}).
    Diameter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepLimits {
    pub min_n: usize,
    pub max_n: usize,
    /// Per-instance solver budget; an instance that runs out is `Unresolved`.
    pub instance_budget: Option<Duration>,
}

impl SweepLimits {
    pub fn up_to(max_n: usize) -> Self {
        SweepLimits {
            min_n: 1,
            max_n,
            instance_budget: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Violated,
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepInstance {
    pub n: usize,
    pub canonical_form: String,
    pub chi: Option<usize>,
    /// Δ for the degree conjecture, the diameter for the other.
    pub measure: usize,
    /// (χ-1)² for the degree conjecture, χ_NL(P_{d+1}) for the other.
    pub bound: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepReport {
    pub conjecture: Conjecture,
    pub min_n: usize,
    pub max_n: usize,
    pub holds: bool,
    pub violations: usize,
    pub unresolved: usize,
    /// Largest Δ seen per χ_NL value (degree conjecture only).
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub max_delta_by_chi: BTreeMap<usize, usize>,
    pub instances: Vec<SweepInstance>,
}

fn diameter_bound(d: usize) -> usize {
    if d == 0 {
        1
    } else {
        chi_closed_form(&FamilySpec::Path(d + 1)).expect("paths of order >= 2 are valid")
    }
}

fn check(which: Conjecture, g: &Graph, budget: Option<Duration>) -> SweepInstance {
    let opts = SolveOptions {
        time_budget: budget,
        ..Default::default()
    };
    let result = chi_nl_exact(g, &opts);
    let chi = (result.status == SolveStatus::Exact)
        .then_some(result.chi)
        .flatten();
    let (measure, canonical_form) = match which {
        Conjecture::Delta => {
            let seq = tree_canonical_form(g);
            (g.max_degree(), seq.iter().map(|d| d.to_string()).collect())
        }
        Conjecture::Diameter => (diameter(g), format!("{:x}", graph_canonical_form(g))),
    };
    let bound = match which {
        Conjecture::Delta => chi.map_or(0, |k| (k - 1) * (k - 1)),
        Conjecture::Diameter => diameter_bound(measure),
    };
    let verdict = match (which, chi) {
        (_, None) => Verdict::Unresolved,
        (Conjecture::Delta, Some(_)) if measure <= bound => Verdict::Holds,
        (Conjecture::Diameter, Some(k)) if k >= bound => Verdict::Holds,
        _ => Verdict::Violated,
    };
    SweepInstance {
        n: g.n(),
        canonical_form,
        chi,
        measure,
        bound,
        verdict,
    }
}

/// Checks a conjecture on an explicit list of graphs (trees for the degree
/// conjecture). Instances are solved in parallel, each one sequentially.
pub fn sweep_graphs(
    which: Conjecture,
    graphs: &[Graph],
    instance_budget: Option<Duration>,
) -> SweepReport {
    let instances: Vec<SweepInstance> = graphs
        .par_iter()
        .map(|g| check(which, g, instance_budget))
        .collect();
    let mut max_delta_by_chi = BTreeMap::new();
    if which == Conjecture::Delta {
        for inst in &instances {
            if let Some(k) = inst.chi {
                let slot = max_delta_by_chi.entry(k).or_insert(0);
                *slot = (*slot).max(inst.measure);
            }
        }
    }
    let count = |v: Verdict| instances.iter().filter(|i| i.verdict == v).count();
    let violations = count(Verdict::Violated);
    let unresolved = count(Verdict::Unresolved);
    SweepReport {
        conjecture: which,
        min_n: graphs.iter().map(Graph::n).min().unwrap_or(0),
        max_n: graphs.iter().map(Graph::n).max().unwrap_or(0),
        holds: violations == 0 && unresolved == 0,
        violations,
        unresolved,
        max_delta_by_chi,
        instances,
    }
}

/// Checks a conjecture on every tree (degree conjecture) or every connected
/// graph (diameter conjecture) with order in `limits.min_n..=limits.max_n`.
pub fn conjecture_sweep(
    which: Conjecture,
    limits: &SweepLimits,
) -> Result<SweepReport, SolverError> {
    let mut graphs = Vec::new();
    for n in limits.min_n.max(1)..=limits.max_n {
        graphs.extend(match which {
            Conjecture::Delta => enumerate_trees(n)?,
            Conjecture::Diameter => enumerate_connected_graphs(n)?,
        });
    }
    let mut report = sweep_graphs(which, &graphs, limits.instance_budget);
    report.min_n = limits.min_n;
    report.max_n = limits.max_n;
    Ok(report)
}
