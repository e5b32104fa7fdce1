//! Binary Dragonfly Algorithm: V-shaped transfer function, probabilistic
//! bit-flip position update, a time-dependent transfer-function option and
//! the wrapper-selection fitness combiner.

use std::time::Instant;

use crate::da::{
    alignment, cohesion, enemy_distraction, food_attraction, separation, step_update, DaConfig,
    ForceSet,
};
use crate::error::{Error, Result};
use crate::record::RunRecord;
use crate::rng::RngStream;
use crate::space::{neighborhood, Dragonfly, SearchSpace};

/// One binary agent: a bit vector plus the continuous step retained for the
/// transfer function.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryDragonfly {
    pub bits: Vec<bool>,
    pub step: Vec<f64>,
}

impl BinaryDragonfly {
    pub fn new(bits: Vec<bool>, step: Vec<f64>) -> Self {
        debug_assert_eq!(bits.len(), step.len());
        Self { bits, step }
    }

    pub fn dim(&self) -> usize {
        self.bits.len()
    }

    /// Bits cast to reals, for the continuous force equations.
    pub fn as_real(&self) -> Vec<f64> {
        self.bits.iter().map(|&b| if b { 1.0 } else { 0.0 }).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransferKind {
    /// `T(dx) = |dx / sqrt(dx^2 + 1)|`, the fixed V shape.
    StaticV,
    /// Same V shape with a shoulder `tau(t)` interpolating from `tau_start`
    /// down to `tau_end`, so early iterations flip less eagerly.
    TimeVarying,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferConfig {
    pub kind: TransferKind,
    pub tau_start: f64,
    pub tau_end: f64,
}

impl TransferConfig {
    pub fn static_v() -> Self {
        Self {
            kind: TransferKind::StaticV,
            tau_start: 1.0,
            tau_end: 1.0,
        }
    }

    pub fn time_varying() -> Self {
        Self {
            kind: TransferKind::TimeVarying,
            tau_start: 4.0,
            tau_end: 1.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tau_start >= self.tau_end && self.tau_end > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "transfer shoulder requires tau_start >= tau_end > 0, got {} and {}",
                self.tau_start, self.tau_end
            )));
        }
        Ok(())
    }
}

/// Flip probability of one step component; always in `[0, 1)`.
pub fn transfer(step_component: f64, cfg: &TransferConfig, t: usize, max_iters: usize) -> f64 {
    debug_assert!(max_iters >= 1);
    let tau = match cfg.kind {
        TransferKind::StaticV => 1.0,
        TransferKind::TimeVarying => {
            cfg.tau_start - (cfg.tau_start - cfg.tau_end) * t as f64 / max_iters as f64
        }
    };
    (step_component / (step_component * step_component + tau * tau).sqrt()).abs()
}

/// Per dimension, flip the bit when a fresh uniform draw lands below the
/// transfer probability; keep it otherwise.
pub fn flip_update(
    agent: &BinaryDragonfly,
    probs: &[f64],
    rng: &mut RngStream,
) -> BinaryDragonfly {
    debug_assert_eq!(agent.dim(), probs.len());
    let bits = agent
        .bits
        .iter()
        .zip(probs)
        .map(|(&bit, &p)| if rng.uniform() < p { !bit } else { bit })
        .collect();
    BinaryDragonfly::new(bits, agent.step.clone())
}

/// Binary DA loop. The whole population counts as one swarm: every agent
/// neighbors every other, so the radius schedule and the random-walk branch
/// of the continuous loop do not apply.
pub fn optimize_binary<F>(
    objective: F,
    dim: usize,
    cfg: &DaConfig,
    tf: &TransferConfig,
) -> Result<RunRecord>
where
    F: Fn(&[bool]) -> f64,
{
    cfg.validate()?;
    tf.validate()?;
    if dim == 0 {
        return Err(Error::InvalidConfig("dimension must be positive".into()));
    }

    let start = Instant::now();
    let space = SearchSpace::binary(dim)?;
    let mut rng = RngStream::new(cfg.seed);

    let mut agents: Vec<BinaryDragonfly> = (0..cfg.pop)
        .map(|_| {
            let bits = (0..dim).map(|_| rng.chance(0.5)).collect();
            BinaryDragonfly::new(bits, space.sample_step(&mut rng))
        })
        .collect();

    let mut food_bits: Vec<bool> = vec![false; dim];
    let mut food_value = f64::INFINITY;
    let mut enemy_bits: Vec<bool> = vec![false; dim];
    let mut curve = Vec::with_capacity(cfg.iters);
    let mut fitness = vec![0.0; cfg.pop];

    for t in 0..cfg.iters {
        for (fit, agent) in fitness.iter_mut().zip(&agents) {
            let value = objective(&agent.bits);
            if !value.is_finite() {
                return Err(Error::NonFiniteObjective {
                    value,
                    position: agent.as_real(),
                });
            }
            *fit = value;
        }
        let mut enemy_value = f64::NEG_INFINITY;
        for (agent, &fit) in agents.iter().zip(&fitness) {
            if fit < food_value {
                food_value = fit;
                food_bits.clone_from(&agent.bits);
            }
            if fit > enemy_value {
                enemy_value = fit;
                enemy_bits.clone_from(&agent.bits);
            }
        }
        curve.push(food_value);

        let weights = cfg.weights.at(t, cfg.iters, &mut rng);
        let food_real: Vec<f64> = food_bits.iter().map(|&b| b as u8 as f64).collect();
        let enemy_real: Vec<f64> = enemy_bits.iter().map(|&b| b as u8 as f64).collect();

        // real-valued shadow of the population for the force equations
        let shadow: Vec<Dragonfly> = agents
            .iter()
            .map(|a| Dragonfly::new(a.as_real(), a.step.clone()))
            .collect();

        for (i, agent) in agents.iter_mut().enumerate() {
            // one swarm: every other agent is a neighbor
            let nbrs = neighborhood(&shadow, i, f64::INFINITY);
            let me = &shadow[i];
            let forces = ForceSet {
                separation: separation(me, &nbrs)?,
                alignment: alignment(&nbrs)?,
                cohesion: cohesion(me, &nbrs)?,
                food_attraction: food_attraction(me, &food_real),
                enemy_distraction: enemy_distraction(me, &enemy_real, cfg.enemy_form),
            };
            let step = step_update(&forces, &weights, &me.step, &space);
            let probs: Vec<f64> = step
                .iter()
                .map(|&s| transfer(s, tf, t, cfg.iters))
                .collect();
            let mut next = flip_update(agent, &probs, &mut rng);
            next.step = step;
            *agent = next;
        }
    }

    let best_position = food_bits.iter().map(|&b| b as u8 as f64).collect();
    Ok(RunRecord {
        best_value: food_value,
        best_position,
        curve,
        wall_seconds: start.elapsed().as_secs_f64(),
        seed: cfg.seed,
    })
}

/// Weighting between classification error and subset size in a wrapper
/// feature-selection objective: `alpha * error + (1 - alpha) * |R| / |C|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeatureFitnessParams {
    alpha: f64,
    beta: f64,
    total_features: usize,
}

impl FeatureFitnessParams {
    pub fn new(alpha: f64, total_features: usize) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::InvalidConfig(format!(
                "alpha must be in [0, 1], got {alpha}"
            )));
        }
        if total_features == 0 {
            return Err(Error::InvalidConfig(
                "total feature count must be positive".into(),
            ));
        }
        Ok(Self {
            alpha,
            beta: 1.0 - alpha,
            total_features,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn total_features(&self) -> usize {
        self.total_features
    }
}

/// Combined wrapper-selection fitness for an externally computed error rate
/// and a selected-subset size.
pub fn feature_fitness(
    error_rate: f64,
    selected: usize,
    params: &FeatureFitnessParams,
) -> Result<f64> {
    if !(0.0..=1.0).contains(&error_rate) {
        return Err(Error::InvalidConfig(format!(
            "error rate must be in [0, 1], got {error_rate}"
        )));
    }
    if selected > params.total_features {
        return Err(Error::InvalidConfig(format!(
            "selected count {} exceeds total features {}",
            selected, params.total_features
        )));
    }
    Ok(params.alpha * error_rate + params.beta * selected as f64 / params.total_features as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transfer_hand_values() {
        let tf = TransferConfig::static_v();
        assert_eq!(transfer(0.0, &tf, 0, 1), 0.0);
        let p = transfer(1.0, &tf, 0, 1);
        assert!((p - 1.0 / 2f64.sqrt()).abs() < 1e-12, "got {p}");
        assert_eq!(transfer(-1.0, &tf, 0, 1), transfer(1.0, &tf, 0, 1));
    }

    #[test]
    fn transfer_range_and_monotonicity() {
        let tf = TransferConfig::time_varying();
        let mut rng = RngStream::new(2);
        for _ in 0..10_000 {
            let dx = rng.uniform_in(-50.0, 50.0);
            let t = rng.index(101);
            let p = transfer(dx, &tf, t, 100);
            assert!((0.0..1.0).contains(&p));
            assert_eq!(p, transfer(-dx, &tf, t, 100));
            let bigger = transfer(dx.abs() + 0.5, &tf, t, 100);
            assert!(bigger > transfer(dx.abs(), &tf, t, 100));
        }
    }

    #[test]
    fn time_varying_endpoint_equals_static() {
        let tv = TransferConfig::time_varying();
        let st = TransferConfig::static_v();
        let mut rng = RngStream::new(3);
        for _ in 0..10_000 {
            let dx = rng.uniform_in(-10.0, 10.0);
            assert_eq!(transfer(dx, &tv, 100, 100), transfer(dx, &st, 0, 100));
        }
    }

    #[test]
    fn transfer_config_validation() {
        assert!(TransferConfig {
            kind: TransferKind::TimeVarying,
            tau_start: 1.0,
            tau_end: 2.0
        }
        .validate()
        .is_err());
        assert!(TransferConfig {
            kind: TransferKind::TimeVarying,
            tau_start: 1.0,
            tau_end: 0.0
        }
        .validate()
        .is_err());
        assert!(TransferConfig::time_varying().validate().is_ok());
    }

    #[test]
    fn flip_forced_branches() {
        let mut rng = RngStream::new(4);
        let agent = BinaryDragonfly::new(vec![true, false, true], vec![0.0; 3]);
        let kept = flip_update(&agent, &[0.0, 0.0, 0.0], &mut rng);
        assert_eq!(kept.bits, agent.bits);
        let flipped = flip_update(&agent, &[1.0, 1.0, 1.0], &mut rng);
        assert_eq!(flipped.bits, vec![false, true, false]);
    }

    #[test]
    fn flip_fraction_matches_probability() {
        // binomial oracle: 1000 dims at p = 0.3 stays within 0.3 +/- 0.05
        let dim = 1000;
        let mut rng = RngStream::new(6);
        let agent = BinaryDragonfly::new(vec![false; dim], vec![0.0; dim]);
        let flipped = flip_update(&agent, &vec![0.3; dim], &mut rng);
        let frac = flipped.bits.iter().filter(|&&b| b).count() as f64 / dim as f64;
        assert!((frac - 0.3).abs() < 0.05, "flip fraction {frac}");
    }

    fn count_zeros(bits: &[bool]) -> f64 {
        bits.iter().filter(|&&b| !b).count() as f64
    }

    #[test]
    fn onemax_single_run_reaches_optimum() {
        let cfg = DaConfig::new(30, 200, 11);
        let record = optimize_binary(count_zeros, 20, &cfg, &TransferConfig::static_v()).unwrap();
        assert_eq!(record.best_value, 0.0);
        assert!(record.best_position.iter().all(|&v| v == 1.0));
    }

    #[test]
    fn binary_run_is_deterministic_with_monotone_curve() {
        let cfg = DaConfig::new(10, 50, 8);
        let tf = TransferConfig::time_varying();
        let r1 = optimize_binary(count_zeros, 12, &cfg, &tf).unwrap();
        let r2 = optimize_binary(count_zeros, 12, &cfg, &tf).unwrap();
        assert_eq!(r1.best_value, r2.best_value);
        assert_eq!(r1.best_position, r2.best_position);
        assert_eq!(r1.curve, r2.curve);
        for pair in r1.curve.windows(2) {
            assert!(pair[1] <= pair[0]);
        }
    }

    #[test]
    fn feature_fitness_hand_values() {
        let p = FeatureFitnessParams::new(0.99, 10).unwrap();
        assert_eq!(feature_fitness(0.0, 0, &p).unwrap(), 0.0);
        let f = feature_fitness(0.1, 5, &p).unwrap();
        assert!((f - 0.104).abs() < 1e-15, "got {f}");
        let p1 = FeatureFitnessParams::new(1.0, 10).unwrap();
        assert_eq!(feature_fitness(0.37, 9, &p1).unwrap(), 0.37);
    }

    #[test]
    fn feature_fitness_monotone() {
        let p = FeatureFitnessParams::new(0.7, 20).unwrap();
        let mut prev = -1.0;
        for sel in 0..=20 {
            let f = feature_fitness(0.5, sel, &p).unwrap();
            assert!(f >= prev);
            prev = f;
        }
        let mut prev = -1.0;
        for e in 0..=10 {
            let f = feature_fitness(e as f64 / 10.0, 5, &p).unwrap();
            assert!(f >= prev);
            prev = f;
        }
    }

    #[test]
    fn feature_fitness_rejects_bad_input() {
        let p = FeatureFitnessParams::new(0.5, 10).unwrap();
        assert!(feature_fitness(0.5, 11, &p).is_err());
        assert!(feature_fitness(1.5, 3, &p).is_err());
        assert!(FeatureFitnessParams::new(1.5, 10).is_err());
        assert!(FeatureFitnessParams::new(0.5, 0).is_err());
    }

    #[test]
    fn alpha_beta_sum_exactly_one() {
        for alpha in [0.0, 0.25, 0.5, 0.99, 1.0] {
            let p = FeatureFitnessParams::new(alpha, 7).unwrap();
            assert_eq!(p.alpha() + p.beta(), 1.0);
        }
    }
}
