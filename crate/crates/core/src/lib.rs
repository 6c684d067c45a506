//! Computing, bounding and certifying the k-independence number `α_k` of
//! graphs: the largest vertex set whose members are pairwise more than `k`
//! apart.
//!
//! - [`graph`] and [`io`]: representation, metrics, graph6 / edge list / DOT.
//! - [`layers`]: distance layers around a seed set and their audits.
//! - [`power`] and [`coloring`]: `α_k = α(G^k)` and `χ_k = χ(G^k)` solvers.
//! - [`bounds`]: closed-form upper and lower bounds with applicability.
//! - [`constructions`]: extremal families and their certificates.

pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod layers;
pub mod power;
pub mod random;

pub use bounds::{bound_report, BoundReport, BoundValue, CaseId, Direction, Quantity, Rational};
pub use coloring::{chi_k_exact, chi_k_greedy, ColoringResult};
pub use constructions::{certify, expected_profile, verify_construction, Certificate, FamilyParams, Status};
pub use error::{Error, Result};
pub use graph::{DegreeStats, Diameter, DistanceVector, Graph};
pub use io::{parse_graph6, parse_graph_auto, write_graph6};
pub use layers::{check_lemma1, is_k_independent, layer_decomposition, LayerDecomposition, LemmaAudit};
pub use power::{alpha_k_bruteforce, alpha_k_exact, alpha_k_greedy, graph_power, Method, SolveResult, SolverOptions};
pub use random::random_connected_graph;
