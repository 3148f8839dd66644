//! Scalarization-based solver and existence diagnostics for set optimization
//! problems `min F(x)` with a set-valued map `F : R^n ⇉ R^m`, ordered by a
//! polyhedral cone `P` with an interior order unit `q`.
//!
//! Values `F(x)` are finite point clouds, possibly sampled from analytic sets.
//! The central quantity is `Ψ_F(x) = min_{z in F(x)} ψ(z)`, where `ψ` is the
//! Gerstewitz scalarization of `P` along `q`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod cone;
pub mod crossval;
pub mod diagnostics;
pub mod error;
pub mod fixtures;
pub mod problem;
pub mod random;
pub mod report;
pub mod scalarizer;
pub mod schema;
pub mod setrel;
pub mod solver;

pub use asymptotics::{
    asymptotic_cone_estimate, check_condition_12, f_g_infty, horizon_limsup, AsymptoticEstimate, RayOptions,
    RaySchedule,
};
pub use cone::{ConeSpec, ScalarValue};
pub use diagnostics::{
    check_attainment, check_colevel_compact_at, check_sgicc, check_srgi, check_transfer_closed, weierstrass_report,
    Check, HypothesisReport, Verdict,
};
pub use error::{Result, SetOptError};
pub use problem::{build_problem, DomainGrid, MapModel, SetValuedProblem};
pub use scalarizer::{colevel, colevel_at_set, m_f_q, psi_f, ScalarField};
pub use schema::ProblemDocument;
pub use setrel::{equivalent_l, lower_less, strictly_lower_less, PointCloudSet};
pub use solver::{argmin_scalarized, solve, sweff_brute, weff_brute, SolveReport};
