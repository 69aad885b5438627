//! Explicit NL-colorings: small bases, the cycle insertion pipeline, paths,
//! cones, the comb, the extremal unicyclic graph and caterpillar, and the
//! generic tree coloring.
//!
//! Every constructor returns a [`ColoredGraph`], which can only be built
//! through a successful NL check.

mod comb;
mod cycles;
mod extremal;
mod trees;

use thiserror::Error;

use crate::bounds::BoundsError;
use crate::graph::{Graph, GraphError};
use crate::verify::{is_nl_coloring, Coloring, ColoringError, NLFailure};

pub use comb::{
    comb_coloring, comb_signature_errata, comb_signature_expected, comb_signature_table,
    comb_spine_colors, CombErratum,
};
pub use cycles::{
    base_small_coloring, cycle_coloring, one_paired_cycle_coloring, op1_insert, op2_insert,
    path_coloring, CyclePipeline, InsertOp, InsertionSite, Stage,
};
pub use extremal::{caterpillar_extremal, splice_signature_table, unicyclic_extremal, SpliceCell};
pub use trees::generic_tree_coloring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error("{what}: result is not neighbor-locating ({failure})")]
    NotNeighborLocating { what: String, failure: NLFailure },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("{what}: cross-check failed: {detail}")]
    CrossCheck { what: String, detail: String },
}

/// A graph together with a coloring known to be neighbor-locating, plus a
/// trace of the steps that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    graph: Graph,
    coloring: Coloring,
    provenance: Vec<String>,
}

impl ColoredGraph {
    /// Checks the coloring and wraps it, or reports the first violation.
    pub fn verified(
        graph: Graph,
        coloring: Coloring,
        provenance: Vec<String>,
    ) -> Result<Self, ConstructError> {
        coloring.check_length(&graph)?;
        if let Some(failure) = is_nl_coloring(&graph, &coloring).failure {
            return Err(ConstructError::NotNeighborLocating {
                what: provenance.last().cloned().unwrap_or_default(),
                failure,
            });
        }
        Ok(ColoredGraph {
            graph,
            coloring,
            provenance,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn k(&self) -> usize {
        self.coloring.k()
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn into_parts(self) -> (Graph, Coloring, Vec<String>) {
        (self.graph, self.coloring, self.provenance)
    }
}

/// Adds a universal vertex colored `k + 1`.
pub fn cone_coloring(cg: &ColoredGraph) -> Result<ColoredGraph, ConstructError> {
    let graph = cg.graph.with_universal_vertex();
    let mut colors = cg.coloring.colors().to_vec();
    colors.push(cg.k() as u32 + 1);
    let coloring = Coloring::new(cg.k() + 1, colors)?;
    let mut provenance = cg.provenance.clone();
    provenance.push(format!("cone: universal vertex colored {}", cg.k() + 1));
    ColoredGraph::verified(graph, coloring, provenance)
}
