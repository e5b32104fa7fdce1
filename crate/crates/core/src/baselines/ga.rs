//! Real-coded genetic algorithm: size-2 tournaments, arithmetic crossover,
//! Gaussian mutation and single-elite survival.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::record::RunRecord;
use crate::rng::RngStream;
use crate::space::{SearchSpace, SpaceMode};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaConfig {
    /// Crossover probability, drives the per-generation child count.
    pub pc: f64,
    /// Mutation probability, drives the per-generation mutant count.
    pub pm: f64,
    pub pop: usize,
    pub iters: usize,
    pub seed: u64,
}

impl GaConfig {
    pub fn new(pop: usize, iters: usize, seed: u64) -> Self {
        Self {
            pc: 0.8,
            pm: 0.03,
            pop,
            iters,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.pc) || !(0.0..=1.0).contains(&self.pm) {
            return Err(Error::InvalidConfig(
                "crossover and mutation probabilities must be in [0, 1]".into(),
            ));
        }
        if self.pop < 2 || self.iters < 1 {
            return Err(Error::InvalidConfig(
                "ga needs pop >= 2 and iters >= 1".into(),
            ));
        }
        Ok(())
    }

    /// Children per generation: `2 * round(pop * pc / 2)`.
    pub fn n_crossover(&self) -> usize {
        2 * ((self.pop as f64 * self.pc / 2.0).round() as usize)
    }

    /// Mutated individuals per generation: `round(pop * pm)`.
    pub fn n_mutation(&self) -> usize {
        (self.pop as f64 * self.pm).round() as usize
    }
}

fn tournament(fitness: &[f64], rng: &mut RngStream) -> usize {
    let a = rng.index(fitness.len());
    let b = rng.index(fitness.len());
    if fitness[a] <= fitness[b] {
        a
    } else {
        b
    }
}

pub fn ga_optimize<F>(objective: F, space: &SearchSpace, cfg: &GaConfig) -> Result<RunRecord>
where
    F: Fn(&[f64]) -> f64,
{
    cfg.validate()?;
    if space.mode() != SpaceMode::Continuous {
        return Err(Error::InvalidConfig("ga requires a continuous space".into()));
    }

    let start = Instant::now();
    let dim = space.dim();
    let mut rng = RngStream::new(cfg.seed);

    let mut population: Vec<Vec<f64>> =
        (0..cfg.pop).map(|_| space.sample_position(&mut rng)).collect();
    let mut fitness = vec![0.0; cfg.pop];
    let mut best = (f64::INFINITY, vec![0.0; dim]);
    let mut curve = Vec::with_capacity(cfg.iters);

    for _ in 0..cfg.iters {
        for (fit, ind) in fitness.iter_mut().zip(&population) {
            let value = objective(ind);
            if !value.is_finite() {
                return Err(Error::NonFiniteObjective {
                    value,
                    position: ind.clone(),
                });
            }
            *fit = value;
        }
        let gen_best = fitness
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        if fitness[gen_best] < best.0 {
            best = (fitness[gen_best], population[gen_best].clone());
        }
        curve.push(best.0);

        // next generation: elite, then crossover children, then selected copies
        let mut next: Vec<Vec<f64>> = Vec::with_capacity(cfg.pop);
        next.push(population[gen_best].clone());
        let n_children = cfg.n_crossover().min(cfg.pop - next.len());
        for _ in 0..n_children / 2 {
            let p1 = &population[tournament(&fitness, &mut rng)];
            let p2 = &population[tournament(&fitness, &mut rng)];
            let alpha = rng.uniform();
            let mut c1 = Vec::with_capacity(dim);
            let mut c2 = Vec::with_capacity(dim);
            for j in 0..dim {
                c1.push(alpha * p1[j] + (1.0 - alpha) * p2[j]);
                c2.push((1.0 - alpha) * p1[j] + alpha * p2[j]);
            }
            next.push(c1);
            if next.len() < cfg.pop {
                next.push(c2);
            }
        }
        while next.len() < cfg.pop {
            next.push(population[tournament(&fitness, &mut rng)].clone());
        }

        // Gaussian mutation on n_mutation non-elite individuals, sigma = 10%
        // of the range per gene
        for _ in 0..cfg.n_mutation() {
            if cfg.pop < 2 {
                break;
            }
            let victim = 1 + rng.index(cfg.pop - 1);
            for j in 0..dim {
                let sigma = 0.1 * space.width(j);
                next[victim][j] = (next[victim][j] + rng.normal(0.0, sigma))
                    .clamp(space.lower()[j], space.upper()[j]);
            }
        }
        for ind in &mut next {
            space.clamp_position(ind);
        }
        population = next;
    }

    Ok(RunRecord {
        best_value: best.0,
        best_position: best.1,
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
    fn operator_counts_match_published_formulas() {
        let cfg = GaConfig::new(100, 10, 0);
        assert_eq!(cfg.n_crossover(), 80);
        assert_eq!(cfg.n_mutation(), 3);
        let odd = GaConfig {
            pc: 0.5,
            pop: 25,
            ..cfg
        };
        // 2 * round(25 * 0.5 / 2) = 2 * round(6.25) = 12
        assert_eq!(odd.n_crossover(), 12);
    }

    #[test]
    fn sphere_2d_converges() {
        let space = SearchSpace::symmetric(2, 100.0).unwrap();
        let record = ga_optimize(sphere, &space, &GaConfig::new(100, 500, 9)).unwrap();
        assert!(record.best_value <= 1e-2, "best {}", record.best_value);
    }

    #[test]
    fn frozen_operators_keep_best_constant() {
        let space = SearchSpace::symmetric(3, 10.0).unwrap();
        let mut cfg = GaConfig::new(20, 40, 4);
        cfg.pc = 0.0;
        cfg.pm = 0.0;
        let record = ga_optimize(sphere, &space, &cfg).unwrap();
        let first = record.curve[0];
        assert!(record.curve.iter().all(|&v| v == first));
    }

    #[test]
    fn deterministic_monotone_and_bounded() {
        let space = SearchSpace::symmetric(2, 50.0).unwrap();
        let cfg = GaConfig::new(30, 60, 12);
        let r1 = ga_optimize(sphere, &space, &cfg).unwrap();
        let r2 = ga_optimize(sphere, &space, &cfg).unwrap();
        assert_eq!(r1.best_value, r2.best_value);
        for pair in r1.curve.windows(2) {
            assert!(pair[1] <= pair[0]);
        }
        assert!(space.contains(&r1.best_position));
    }

    #[test]
    fn rejects_bad_probabilities() {
        let mut cfg = GaConfig::new(10, 10, 0);
        cfg.pc = 1.5;
        assert!(cfg.validate().is_err());
        cfg.pc = 0.8;
        cfg.pm = -0.1;
        assert!(cfg.validate().is_err());
    }
}
