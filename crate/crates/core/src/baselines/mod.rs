//! Reference optimizers sharing the objective/space/record contracts, so the
//! harness can run like-for-like comparisons.

mod ga;
mod gwo;
mod pso;

pub use ga::{ga_optimize, GaConfig};
pub use gwo::gwo_optimize;
pub use pso::{pso_optimize, InertiaMode, PsoConfig};
