//! Dynamic coprime labelings of finite simple graphs.
//!
//! A labeling assigns distinct positive integers to vertices so that
//! adjacent labels are coprime. Evolving it by a map `g` (`f_{t+1} = g(f_t)`)
//! gives a sequence of labelings; when `g` preserves coprimality the whole
//! sequence stays valid. This crate builds canonical labelings for standard
//! families, applies and vets maps, verifies runs exactly or modulo `n`,
//! relates vertex orders to Carmichael's function, and decides existence of
//! classical coprime labelings by backtracking.

pub mod error;
pub mod evolution;
pub mod graph;
pub mod labeling;
pub mod number_theory;
pub mod serde_util;
pub mod solver;
pub mod transforms;

pub use error::{Error, Result};
pub use evolution::{
    classify_boundedness, evolve, find_generating_labels, graph_period, verify_modular_period,
    verify_run, vertex_order_profile, Boundedness, DclRun, EvolveOptions, Frame, Label,
    PeriodReport, Representation, RunStatus,
};
pub use graph::{Bipartition, Family, Graph, VertexId};
pub use labeling::{
    bipartite_prime_labeling, canonical_initial_labeling, verify_coprime, verify_prime_labeling,
    Labeling, VerifyReport,
};
pub use solver::{solve_coprime_labeling, SolveLimits, SolveResult, SolveStatus};
pub use transforms::{
    affine_edge_hypothesis, sample_coprime_preservation, AffineHypothesisReport, MapVerdict,
    Preservation, TransformSpec,
};
