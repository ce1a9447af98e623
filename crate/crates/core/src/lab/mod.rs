//! Probes of the vanishing-divided-difference hypothesis: the polynomial
//! cascade, the finite constraint system and its kernel, the minimum
//! Lipschitz constant of a surviving function, and the averaging and
//! reindexing identities behind the continuous case.

pub mod averaging;
pub mod cascade;
pub mod constraints;
pub mod lipschitz;
pub mod simplex;
pub mod walkthrough;

pub use averaging::{
    averaging_probe, factorial_cofactor, telescope_shift_identity, AveragingProbeResult, TelescopeCheck,
};
pub use cascade::{polynomial_cascade, CascadeCheck, CascadeReport, CascadeVerdict};
pub use constraints::{
    build_constraint_system, integer_kernel, nullspace, ConstraintSystem, IntegerKernel, NullspaceReport,
};
pub use lipschitz::{min_lipschitz_unit_norm, MinLipschitz};
pub use walkthrough::{proof_walkthrough, ShiftTerms, WalkthroughReport};
