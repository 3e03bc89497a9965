//! The Hochschild cochain complex with its brace-algebra structure.

pub mod action;
pub mod cochain;
pub mod ops;
pub mod suites;

pub use action::{act, act_chain};
pub use cochain::{ad_left_pow, ad_pow, brace, brace1, brace_opt, bracket, power, AssocAlgebra, Cochain};
pub use ops::{bockstein_chain, differential_matrix, is_coboundary, random_cochain, trial_rng, xi1, zeta1, CocycleSpace, LiftedCochain};
pub use suites::{
    identity_suite, jacobson_suite, jacobson_suite_with, kpower_suite, operations_suite, power_law_suite, powers, zeta_bockstein_suite, CheckOutcome, SuiteReport, Witness,
};
