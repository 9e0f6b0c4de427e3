//! Fibers of `h_4` over a target quartic.

pub mod appendix;
mod named;
mod report;
mod system;
mod univariate;
mod zero_dim;

pub use named::{named_quartic, NamedQuartic};
pub use report::{
    d_fiber_check, fermat_correspondence, fermat_fiber, fermat_multiplicities_by_eigenvalues, jacobian_rank,
    Correspondence, Evidence, FiberPoint, FiberReport, FiberStatus,
};
pub use system::{build_fiber_system, build_fiber_system_with, verify_point_on_fiber, Certificate, FiberSystem, PointCheck};
pub use univariate::UniPoly;
pub use zero_dim::{MultiplicityProfile, Quotient};
