//! Grey wolf optimizer: alpha/beta/delta-guided position updates with the
//! control scalar decaying linearly from 2 to 0.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::record::RunRecord;
use crate::rng::RngStream;
use crate::space::{SearchSpace, SpaceMode};

pub fn gwo_optimize<F>(
    objective: F,
    space: &SearchSpace,
    pop: usize,
    iters: usize,
    seed: u64,
) -> Result<RunRecord>
where
    F: Fn(&[f64]) -> f64,
{
    if pop < 2 || iters < 1 {
        return Err(Error::InvalidConfig(
            "gwo needs pop >= 2 and iters >= 1".into(),
        ));
    }
    if space.mode() != SpaceMode::Continuous {
        return Err(Error::InvalidConfig("gwo requires a continuous space".into()));
    }

    let start = Instant::now();
    let dim = space.dim();
    let mut rng = RngStream::new(seed);

    let mut positions: Vec<Vec<f64>> = (0..pop).map(|_| space.sample_position(&mut rng)).collect();
    let mut alpha = (f64::INFINITY, vec![0.0; dim]);
    let mut beta = (f64::INFINITY, vec![0.0; dim]);
    let mut delta = (f64::INFINITY, vec![0.0; dim]);
    let mut curve = Vec::with_capacity(iters);

    for t in 0..iters {
        for p in &positions {
            let value = objective(p);
            if !value.is_finite() {
                return Err(Error::NonFiniteObjective {
                    value,
                    position: p.clone(),
                });
            }
            if value < alpha.0 {
                delta = beta.clone();
                beta = alpha.clone();
                alpha = (value, p.clone());
            } else if value < beta.0 {
                delta = beta.clone();
                beta = (value, p.clone());
            } else if value < delta.0 {
                delta = (value, p.clone());
            }
        }
        curve.push(alpha.0);

        let a = 2.0 - 2.0 * t as f64 / iters as f64;
        for p in &mut positions {
            for j in 0..dim {
                let mut guided = 0.0;
                for leader in [&alpha.1, &beta.1, &delta.1] {
                    let a_coef = 2.0 * a * rng.uniform() - a;
                    let c_coef = 2.0 * rng.uniform();
                    let dist = (c_coef * leader[j] - p[j]).abs();
                    guided += leader[j] - a_coef * dist;
                }
                p[j] = (guided / 3.0).clamp(space.lower()[j], space.upper()[j]);
            }
        }
    }

    Ok(RunRecord {
        best_value: alpha.0,
        best_position: alpha.1,
        curve,
        wall_seconds: start.elapsed().as_secs_f64(),
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(x: &[f64]) -> f64 {
        x.iter().map(|v| v * v).sum()
    }

    #[test]
    fn sphere_2d_converges_deep() {
        let space = SearchSpace::symmetric(2, 100.0).unwrap();
        let record = gwo_optimize(sphere, &space, 30, 200, 5).unwrap();
        assert!(record.best_value <= 1e-10, "best {}", record.best_value);
    }

    #[test]
    fn deterministic_monotone_and_bounded() {
        let space = SearchSpace::symmetric(4, 10.0).unwrap();
        let r1 = gwo_optimize(sphere, &space, 12, 60, 11).unwrap();
        let r2 = gwo_optimize(sphere, &space, 12, 60, 11).unwrap();
        assert_eq!(r1.best_value, r2.best_value);
        assert_eq!(r1.curve, r2.curve);
        for pair in r1.curve.windows(2) {
            assert!(pair[1] <= pair[0]);
        }
        assert!(space.contains(&r1.best_position));
    }

    #[test]
    fn rejects_bad_input() {
        let space = SearchSpace::symmetric(2, 1.0).unwrap();
        assert!(gwo_optimize(sphere, &space, 1, 10, 0).is_err());
        assert!(gwo_optimize(sphere, &space, 10, 0, 0).is_err());
        let bin = SearchSpace::binary(2).unwrap();
        assert!(gwo_optimize(sphere, &bin, 10, 10, 0).is_err());
    }
}
