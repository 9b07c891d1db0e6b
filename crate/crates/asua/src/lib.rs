#![forbid(unsafe_code)]

//! Average steps until absorption (ASUA) for random walks on graphs.
//!
//! A random walk on an undirected multigraph steps from its current vertex
//! to a uniformly chosen neighbor, counting parallel edges once per
//! multiplicity, until it first reaches an absorbing vertex. The ASUA of a
//! vertex `v` with absorber `u`, written `t(G, v, u)`, is the expected
//! number of steps of that walk. This crate computes it three independent
//! ways and checks the routes against each other:
//!
//! * an exact rational solve of `(I - Q) t = 1` over the transient block of
//!   the walk's transition matrix ([`chain`]),
//! * closed-form evaluators for paths, cycles, stems, and the sea-dragon
//!   tree families SD1–SD4 ([`closed_form`]), verified against the solver
//!   by exhaustive sweeps ([`verify`]),
//! * a seeded Monte Carlo estimator ([`monte_carlo`]).
//!
//! Pendant stems, multiple absorbers via contraction, absorption-sum and
//! round-trip aggregates, tree enumeration with an extremal survey
//! ([`survey`]), and an ASCII maze front end ([`maze`]) round out the
//! toolkit. Start with the runnable programs under `examples/`.

pub mod chain;
pub mod cli;
pub mod closed_form;
pub mod edge_list;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
mod linalg;
pub mod maze;
pub mod monte_carlo;
pub mod rational;
pub mod rng;
pub mod survey;
pub mod verify;

pub use chain::{
    asua_equation_residuals, asua_sum, build_transition, chain_residuals, round_trip, solve_asua,
    solve_asua_float, solve_graph, AsuaVector, FloatSolution, TransitionMatrix,
};
pub use closed_form::{
    cycle_asua, path_asua, sd1_asua, sd2_asua, sd3_asua, sd4_asua, stem_offset, SeaDragonSpec,
};
pub use error::{Error, Result};
pub use families::{enumerate_trees, gen_cycle, gen_path, gen_sea_dragon, gen_star};
pub use graph::{vid, DegreeProfile, Graph, SeaDragonClass, VertexId};
pub use monte_carlo::{simulate, simulate_chain, SimEstimate, WalkConfig};
pub use rational::Rational;
