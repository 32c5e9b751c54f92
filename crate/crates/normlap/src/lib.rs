//! Spectral sums of the normalized Laplacian and majorization-based bounds.
//!
//! For a simple connected graph, the index of interest is the sum of the
//! `alpha`-th powers of the non-zero eigenvalues of the normalized Laplacian
//! `D^{-1/2} (D - A) D^{-1/2}`. This crate computes the index exactly from a
//! dense symmetric eigensolve, localizes the two largest eigenvalues through
//! a majorization optimization that only needs the vertex count and the
//! degree-pair sum, and turns those localizations into upper/lower bounds on
//! the index together with their relative errors.
//!
//! # Modules
//!
//! * [`graph`] — validated simple graphs, named families, seeded random
//!   generators (connected Erdős–Rényi, uniform Prüfer trees), edge-list IO.
//! * [`spectral`] — normalized Laplacian, Jacobi eigensolver, the degree-pair
//!   sum `t` and second spectral moment `b = n + t`, the index itself, and
//!   spectrum validation against the identities it must satisfy.
//! * [`majorization`] — the constrained minimization of the h-th largest
//!   coordinate under fixed sum and power sum; closed forms `Q` and `R` for
//!   the quadratic case, cross-checked against bracketed bisection.
//! * [`bounds`] — the one- and two-eigenvalue bound families, the classical
//!   localization `P`, and per-graph [`bounds::BoundReport`]s.
//! * [`experiment`] — seeded multi-size experiment runs, curve sampling of
//!   `Q - P`, and deterministic CSV serialization.
//!
//! # Quick start
//!
//! ```
//! use normlap::graph::{make_named, NamedGraph};
//! use normlap::bounds::bound_report;
//!
//! let paw = normlap::graph::Graph::new(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
//! let report = bound_report(&paw, 1.5).unwrap();
//! assert!((report.exact - 4.7874).abs() < 1e-3);
//! // Lower bounds sit below the exact value for alpha > 1.
//! for rb in &report.bounds {
//!     assert!(rb.bound.value <= report.exact);
//! }
//!
//! let p4 = make_named(NamedGraph::Path(4)).unwrap();
//! let report = bound_report(&p4, 0.5).unwrap();
//! // Bipartite graphs use theta = 2, the exact largest eigenvalue.
//! assert!(report.bipartite);
//! ```
//!
//! Random generation is reproducible: every generator takes an explicit
//! seed feeding a ChaCha8 stream, so results are identical across runs and
//! platforms. Derive per-task seeds (e.g. `seed + index`) for parallel use;
//! all computation on constructed values is pure.

pub mod bounds;
pub mod experiment;
pub mod graph;
pub mod majorization;
pub mod spectral;

pub use bounds::{bound_report, BoundKind, BoundReport, BoundValue, BoundsError, ThetaSource};
pub use graph::{Graph, GraphClass, GraphError, NamedGraph};
pub use majorization::{
    h_star, q_closed_form, r_closed_form, solve_min_lambda, MajorizationError,
    MajorizationInstance, SolveCase, SolverResult,
};
pub use spectral::{
    degree_pair_sum, normalized_laplacian, s_alpha_star, spectrum, DerivedScalars, SpectralError,
    Spectrum, SymmetricMatrix,
};
