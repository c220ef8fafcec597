//! Homomorphism-based approximability distances between graphs.
//!
//! The core quantity is `s(M, N)`, the worst-case ratio `mc_M(G, w) / mc_N(G, w)`
//! over weighted instances, computed exactly from the edge-orbit program of
//! `N`. From it, `d(M, N) = 1 - s(M, N) · s(N, M)` is a metric on graphs up to
//! homomorphic equivalence, and approximation guarantees for Max `M`-Col
//! transfer to Max `N`-Col with a factor `1 - d(M, N)`.
//!
//! Everything numeric is generic over [`Scalar`]; the aliases below fix the
//! exact rational instantiation used by the command-line tool.

pub mod bounds;
pub mod distance;
pub mod error;
pub mod graph;
pub mod homomorphism;
pub mod limits;
pub mod lp;
pub mod maxcol;
pub mod scalar;
pub mod symmetry;

pub use bounds::{
    alpha_gw, alpha_k, family_sweep, format_significant, hastad_bound, hastad_report, hastad_value,
    inapprox_transfer, random_graph_estimate, transfer_guarantee, turan_edges, turan_ratio, AlphaGw, BaseAlgorithm, Estimate, Family,
    GuaranteeReport, HastadValue, InapproxReport, Provenance, SweepRow,
};
pub use distance::{
    check_metric_axioms, distance, s_value, s_via_orbit_program, sandwich_bounds, Axiom,
    AxiomCheck, DistanceReport, MetricReport, SRoute, SValue, SandwichBounds,
};
pub use error::{Error, ErrorKind, Result};
pub use graph::{
    complete, cycle, parse_edge_list, parse_graph, path, petersen, rational_complete,
    read_edge_list, render_edge_list, turan, wheel, EdgeListDocument, Graph, GraphSpec,
};
pub use homomorphism::{find_homomorphism, hom_equivalent, verify_homomorphism, HomEquivalence, VertexMap};
pub use limits::Limits;
pub use lp::{solve_orbit_lp, verify_solution, LpSolution, OrbitLp};
pub use maxcol::{
    bipartite_density, induced_weight, mc, measure, orbit_counts, pareto_maximal,
    solution_vectors, symmetrize, McOutcome, SolutionVector, SymmetricWeightFunction,
    WeightFunction,
};
pub use scalar::Scalar;
pub use symmetry::{
    automorphisms, edge_orbits, is_edge_transitive, vertex_orbits, AutomorphismGroup,
    OrbitPartition, Permutation,
};

/// Arbitrary-precision rational, the default scalar.
pub type Rational = num_rational::BigRational;

pub type RationalWeights = WeightFunction<Rational>;
pub type RationalSValue = SValue<Rational>;
pub type RationalDistanceReport = DistanceReport<Rational>;
pub type RationalLpSolution = LpSolution<Rational>;
pub type RationalMetricReport = MetricReport<Rational>;

/// `num / den` as a [`Rational`].
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
