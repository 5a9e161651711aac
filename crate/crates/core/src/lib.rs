//! Bipartite distance-hereditary (BDH) graphs and their Galois lattices.
//!
//! A BDH graph is built from a single edge by repeatedly adding pending
//! vertices and false twins. Given such a construction sequence this crate
//! computes
//!
//! * the Hasse diagram of the lattice of maximal bicliques, with explicit
//!   vertex lists, in time linear in the number of edges ([`explicit`]);
//! * a compact encoding of the same diagram, where every biclique shore and
//!   every neighborhood is a directed path in one of two arborescences, in
//!   time and space linear in the number of vertices ([`compact`]).
//!
//! [`pruning`] recovers a construction sequence from an arbitrary connected
//! bipartite graph (or reports that none exists), and [`oracle`] holds the
//! brute-force reference implementations used to check everything else on
//! small inputs.

pub mod bigraph;
pub mod canonical;
pub mod compact;
pub mod error;
pub mod explicit;
pub mod oracle;
pub mod pruning;

pub use bigraph::{
    apply_sequence, generate_random_bdh, intermediate_graph, BipartiteGraph, ConstructionSequence,
    ConstructionStep, Shore, StepKind, VertexId,
};
pub use canonical::CanonicalLattice;
pub use compact::{
    decode_biclique, decode_interval, fast_compute_bdh_diagram, to_explicit, ArcId, Arborescence,
    CompactBiclique, CompactBuilder, CompactDiagram, Interval, StorageStats,
};
pub use error::{GraphError, LatticeError, OracleError, RecognitionError};
pub use explicit::{
    compute_bdh_diagram, Biclique, BicliqueId, ElementKind, FullLattice, HasseDiagram,
    LatticeElement,
};
pub use pruning::{extract_pruning_sequence, is_bdh, RecognitionResult, Recognized};
