//! Swarm optimizers built around the dragonfly dynamics: a continuous
//! single-objective variant, a binary variant driven by a V-shaped transfer
//! function and an archive-based multi-objective variant, next to PSO, GWO
//! and GA baselines, a classical + CEC-2019 benchmark corpus and a seeded
//! experiment harness.

pub mod baselines;
pub mod bda;
pub mod benchfns;
pub mod da;
pub mod error;
pub mod harness;
pub mod moda;
pub mod record;
pub mod rng;
pub mod space;
pub mod walks;

pub use error::{Error, Result};
pub use record::{RunRecord, StatRow};
pub use rng::RngStream;
pub use space::{
    neighborhood, radius_schedule, weights_at, Dragonfly, NeighborSet, RadiusSchedule,
    SearchSpace, SpaceMode, SwarmState, WeightSchedule, Weights,
};
pub use walks::{brownian_step, levy_step, LevyParams};
