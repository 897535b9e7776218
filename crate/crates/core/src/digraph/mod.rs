//! Multidigraphs and the structural enumerations built on them.

mod arborescence;
mod cuts;
mod cycles;
mod graph;
mod layering;
mod orientation;

pub use arborescence::{
    enumerate_spanning_arborescences, is_arborescence, is_spanning_arborescence,
    tree_path_from_root,
};
pub use cuts::{elementary_directed_cuts, enumerate_directed_cuts, DirectedCut};
pub use cycles::{enumerate_signed_cycles, SignedCycle};
pub use graph::{ConnectivityFlags, DiGraph, UGraph};
pub use layering::{admissible_layerings, find_layering, is_admissible_layering, Layering};
pub use orientation::enumerate_orientations;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge} uses vertex {vertex}, but the graph has only {n} vertices")]
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("{n} vertices exceed the supported maximum of 64")]
    TooManyVertices { n: usize },
    #[error("{m} edges exceed the supported maximum of 64")]
    TooManyEdges { m: usize },
    #[error("the input digraph is not weakly connected")]
    DisconnectedInput,
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    NoSuchVertex { vertex: usize, n: usize },
}
