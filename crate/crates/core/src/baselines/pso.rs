//! Global-best particle swarm optimization.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::record::RunRecord;
use crate::rng::RngStream;
use crate::space::{SearchSpace, SpaceMode};

/// Velocity damping regime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InertiaMode {
    /// Clerc constriction `chi = 2 / |2 - c - sqrt(c^2 - 4c)|`, `c = c1 + c2`;
    /// requires `c > 4`.
    Constriction,
    /// Linearly decaying inertia weight.
    Linear { w_start: f64, w_end: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsoConfig {
    pub c1: f64,
    pub c2: f64,
    pub inertia: InertiaMode,
    pub pop: usize,
    pub iters: usize,
    pub seed: u64,
}

impl PsoConfig {
    /// Constriction defaults: c1 = c2 = 2.05 gives chi close to 0.7298.
    pub fn new(pop: usize, iters: usize, seed: u64) -> Self {
        Self {
            c1: 2.05,
            c2: 2.05,
            inertia: InertiaMode::Constriction,
            pop,
            iters,
            seed,
        }
    }

    /// The c1 = c2 = 2 setting with a linear 0.9 -> 0.4 inertia ramp.
    pub fn linear(pop: usize, iters: usize, seed: u64) -> Self {
        Self {
            c1: 2.0,
            c2: 2.0,
            inertia: InertiaMode::Linear {
                w_start: 0.9,
                w_end: 0.4,
            },
            pop,
            iters,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.pop < 2 || self.iters < 1 {
            return Err(Error::InvalidConfig(
                "pso needs pop >= 2 and iters >= 1".into(),
            ));
        }
        if matches!(self.inertia, InertiaMode::Constriction) && self.c1 + self.c2 <= 4.0 {
            return Err(Error::InvalidConfig(format!(
                "constriction mode requires c1 + c2 > 4, got {}",
                self.c1 + self.c2
            )));
        }
        Ok(())
    }

    /// The constriction coefficient for the current c1 + c2.
    pub fn constriction_chi(&self) -> f64 {
        let c = self.c1 + self.c2;
        2.0 / (2.0 - c - (c * c - 4.0 * c).sqrt()).abs()
    }
}

pub fn pso_optimize<F>(objective: F, space: &SearchSpace, cfg: &PsoConfig) -> Result<RunRecord>
where
    F: Fn(&[f64]) -> f64,
{
    let mut rng = RngStream::new(cfg.seed);
    let positions = (0..cfg.pop).map(|_| space.sample_position(&mut rng)).collect();
    let velocities = (0..cfg.pop).map(|_| space.sample_step(&mut rng)).collect();
    pso_optimize_from(objective, space, cfg, positions, velocities, rng)
}

/// Loop entry point with explicit initial positions and velocities.
pub fn pso_optimize_from<F>(
    objective: F,
    space: &SearchSpace,
    cfg: &PsoConfig,
    mut positions: Vec<Vec<f64>>,
    mut velocities: Vec<Vec<f64>>,
    mut rng: RngStream,
) -> Result<RunRecord>
where
    F: Fn(&[f64]) -> f64,
{
    cfg.validate()?;
    if space.mode() != SpaceMode::Continuous {
        return Err(Error::InvalidConfig("pso requires a continuous space".into()));
    }
    if positions.len() != cfg.pop || velocities.len() != cfg.pop {
        return Err(Error::InvalidConfig(
            "initial swarm size does not match pop".into(),
        ));
    }

    let start = Instant::now();
    let dim = space.dim();

    let mut pbest = positions.clone();
    let mut pbest_val = vec![f64::INFINITY; cfg.pop];
    let mut gbest = positions[0].clone();
    let mut gbest_val = f64::INFINITY;
    let mut curve = Vec::with_capacity(cfg.iters);

    for t in 0..cfg.iters {
        for i in 0..cfg.pop {
            let value = objective(&positions[i]);
            if !value.is_finite() {
                return Err(Error::NonFiniteObjective {
                    value,
                    position: positions[i].clone(),
                });
            }
            if value < pbest_val[i] {
                pbest_val[i] = value;
                pbest[i].clone_from(&positions[i]);
            }
            if value < gbest_val {
                gbest_val = value;
                gbest.clone_from(&positions[i]);
            }
        }
        curve.push(gbest_val);

        let (chi, w) = match cfg.inertia {
            InertiaMode::Constriction => (cfg.constriction_chi(), 1.0),
            InertiaMode::Linear { w_start, w_end } => {
                (1.0, w_start - (w_start - w_end) * t as f64 / cfg.iters as f64)
            }
        };
        for i in 0..cfg.pop {
            for j in 0..dim {
                let r1 = rng.uniform();
                let r2 = rng.uniform();
                let cognitive = cfg.c1 * r1 * (pbest[i][j] - positions[i][j]);
                let social = cfg.c2 * r2 * (gbest[j] - positions[i][j]);
                let width = space.width(j);
                velocities[i][j] =
                    (chi * (w * velocities[i][j] + cognitive + social)).clamp(-width, width);
                positions[i][j] = (positions[i][j] + velocities[i][j])
                    .clamp(space.lower()[j], space.upper()[j]);
            }
        }
    }

    Ok(RunRecord {
        best_value: gbest_val,
        best_position: gbest,
        curve,
        wall_seconds: start.elapsed().as_secs_f64(),
        seed: cfg.seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(x: &[f64]) -> f64 {
        x.iter().map(|v| v * v).sum()
    }

    #[test]
    fn chi_matches_clerc_value() {
        let cfg = PsoConfig::new(10, 10, 0);
        assert!((cfg.constriction_chi() - 0.729_843_788).abs() < 1e-6);
    }

    #[test]
    fn constriction_requires_c_above_four() {
        let mut cfg = PsoConfig::new(10, 10, 0);
        cfg.c1 = 2.0;
        cfg.c2 = 2.0;
        assert!(cfg.validate().is_err());
        assert!(PsoConfig::linear(10, 10, 0).validate().is_ok());
    }

    #[test]
    fn sphere_2d_converges() {
        let space = SearchSpace::symmetric(2, 100.0).unwrap();
        let record = pso_optimize(sphere, &space, &PsoConfig::new(30, 200, 42)).unwrap();
        assert!(record.best_value <= 1e-6, "best {}", record.best_value);
    }

    #[test]
    fn deterministic_and_monotone() {
        let space = SearchSpace::symmetric(3, 10.0).unwrap();
        let cfg = PsoConfig::new(15, 50, 7);
        let r1 = pso_optimize(sphere, &space, &cfg).unwrap();
        let r2 = pso_optimize(sphere, &space, &cfg).unwrap();
        assert_eq!(r1.best_value, r2.best_value);
        assert_eq!(r1.curve, r2.curve);
        for pair in r1.curve.windows(2) {
            assert!(pair[1] <= pair[0]);
        }
        assert!(space.contains(&r1.best_position));
    }

    #[test]
    fn zero_coefficients_and_velocity_is_stationary() {
        let space = SearchSpace::symmetric(2, 5.0).unwrap();
        let mut cfg = PsoConfig::linear(3, 20, 3);
        cfg.c1 = 0.0;
        cfg.c2 = 0.0;
        let positions = vec![vec![1.0, 2.0], vec![-3.0, 0.5], vec![4.0, -4.0]];
        let velocities = vec![vec![0.0, 0.0]; 3];
        let record = pso_optimize_from(
            sphere,
            &space,
            &cfg,
            positions.clone(),
            velocities,
            RngStream::new(3),
        )
        .unwrap();
        let expected: f64 = positions.iter().map(|p| sphere(p)).fold(f64::INFINITY, f64::min);
        assert_eq!(record.best_value, expected);
        assert!(record.curve.iter().all(|&v| v == expected));
    }
}
