//! Exact neighbor-locating chromatic number by exhaustive search, small-graph
//! enumeration, and conjecture sweeps built on both.

mod enumerate;
mod search;
mod sweep;

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::bounds::chi_lower_bound;
use crate::graph::Graph;
use crate::verify::{is_nl_coloring, Coloring};

pub use enumerate::{
    enumerate_connected_graphs, enumerate_trees, graph_canonical_form, tree_canonical_form,
    MAX_GRAPH_ORDER, MAX_TREE_ORDER,
};
pub use search::MAX_SEARCH_COLORS;
pub use sweep::{
    conjecture_sweep, sweep_graphs, Conjecture, SweepInstance, SweepLimits, SweepReport, Verdict,
};

use search::{search, Outcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("order {n} is above the enumeration cap {cap}")]
    OrderTooLarge { n: usize, cap: usize },
    #[error("order must be at least 1")]
    EmptyOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub max_k: Option<usize>,
    pub time_budget: Option<Duration>,
    pub symmetry_breaking: bool,
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_k: None,
            time_budget: None,
            symmetry_breaking: true,
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SolveStatus {
    Exact,
    CappedOut,
    TimedOut,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub chi: Option<usize>,
    pub witness: Option<Coloring>,
    pub status: SolveStatus,
    /// Largest k known to be a lower bound when the search stopped.
    pub lower_bound: usize,
    pub nodes_explored: u64,
}

/// Searches for a k-NL-coloring of `g` that uses all `k` colors.
pub fn exists_nl_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    if k > MAX_SEARCH_COLORS {
        return None;
    }
    match search(g, k, true, false, None).outcome {
        Outcome::Found(colors) => Some(Coloring::new(k, colors).expect("search uses every color")),
        _ => None,
    }
}

/// Exact χ_NL: tries k upward from [`chi_lower_bound`] until a coloring is found.
///
/// With `parallel` on, the top levels of the search tree are split across the
/// rayon pool. `chi` and `status` do not depend on scheduling; the witness may.
pub fn chi_nl_exact(g: &Graph, opts: &SolveOptions) -> SolveResult {
    let deadline = opts.time_budget.map(|b| Instant::now() + b);
    let cap = opts
        .max_k
        .unwrap_or(usize::MAX)
        .min(MAX_SEARCH_COLORS)
        .min(g.n());
    let mut k = chi_lower_bound(g);
    let mut nodes = 0;
    while k <= cap {
        let run = search(g, k, opts.symmetry_breaking, opts.parallel, deadline);
        nodes += run.nodes;
        match run.outcome {
            Outcome::Found(colors) => {
                let witness = Coloring::new(k, colors).expect("search uses every color");
                debug_assert!(is_nl_coloring(g, &witness).ok());
                return SolveResult {
                    chi: Some(k),
                    witness: Some(witness),
                    status: SolveStatus::Exact,
                    lower_bound: k,
                    nodes_explored: nodes,
                };
            }
            Outcome::Aborted => {
                return SolveResult {
                    chi: None,
                    witness: None,
                    status: SolveStatus::TimedOut,
                    lower_bound: k,
                    nodes_explored: nodes,
                }
            }
            Outcome::Infeasible => k += 1,
        }
    }
    SolveResult {
        chi: None,
        witness: None,
        status: SolveStatus::CappedOut,
        lower_bound: k,
        nodes_explored: nodes,
    }
}
