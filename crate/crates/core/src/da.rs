//! Single-objective continuous Dragonfly Algorithm: the five swarming
//! forces, the step/position update, the Lévy (or Brownian) fallback for
//! isolated agents, and the full optimization loop.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::record::RunRecord;
use crate::rng::RngStream;
use crate::space::{
    neighborhood, Dragonfly, NeighborSet, RadiusSchedule, SearchSpace, SpaceMode, SwarmState,
    WeightSchedule, Weights,
};
use crate::walks::{brownian_step, levy_step, LevyParams};

/// Random walk used when an agent has no neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepMode {
    Levy,
    Brownian,
}

/// How enemy distraction combines the enemy position with the agent's own.
///
/// `Sum` is the literal published form `E = X⁻ + X`; `Difference` is the
/// repulsive alternative `E = X - X⁻` pointing away from the enemy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnemyForm {
    Sum,
    Difference,
}

#[derive(Debug, Clone)]
pub struct DaConfig {
    pub pop: usize,
    pub iters: usize,
    pub weights: WeightSchedule,
    pub levy: LevyParams,
    pub step_mode: StepMode,
    pub seed: u64,
    pub radius: RadiusSchedule,
    pub enemy_form: EnemyForm,
    /// When set, food attraction contributes only while the food lies within
    /// the current neighborhood radius of the agent.
    pub food_in_radius_only: bool,
    /// Zero the step vector after a random-walk move instead of carrying the
    /// stale momentum into the next iteration.
    pub reset_step_after_walk: bool,
}

impl DaConfig {
    pub fn new(pop: usize, iters: usize, seed: u64) -> Self {
        Self {
            pop,
            iters,
            weights: WeightSchedule::default(),
            levy: LevyParams::default(),
            step_mode: StepMode::Levy,
            seed,
            radius: RadiusSchedule::default(),
            enemy_form: EnemyForm::Sum,
            food_in_radius_only: false,
            reset_step_after_walk: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.pop < 2 {
            return Err(Error::InvalidConfig(format!(
                "population must be at least 2, got {}",
                self.pop
            )));
        }
        if self.iters < 1 {
            return Err(Error::InvalidConfig("iterations must be at least 1".into()));
        }
        self.weights.validate()?;
        self.levy.validate()
    }
}

/// The five swarming force vectors of one agent.
#[derive(Debug, Clone, PartialEq)]
pub struct ForceSet {
    pub separation: Vec<f64>,
    pub alignment: Vec<f64>,
    pub cohesion: Vec<f64>,
    pub food_attraction: Vec<f64>,
    pub enemy_distraction: Vec<f64>,
}

/// `S = -Σ_j (X - X_j)` over the neighbor set.
pub fn separation(agent: &Dragonfly, nbrs: &NeighborSet) -> Result<Vec<f64>> {
    if nbrs.is_empty() {
        return Err(Error::EmptyNeighborhood);
    }
    let mut s = vec![0.0; agent.dim()];
    for pos in nbrs.positions() {
        for (acc, (x, xj)) in s.iter_mut().zip(agent.position.iter().zip(pos)) {
            *acc -= x - xj;
        }
    }
    Ok(s)
}

/// `A = (Σ_j V_j) / N`: the mean neighbor step.
pub fn alignment(nbrs: &NeighborSet) -> Result<Vec<f64>> {
    if nbrs.is_empty() {
        return Err(Error::EmptyNeighborhood);
    }
    let n = nbrs.count() as f64;
    let dim = nbrs.steps().next().map_or(0, <[f64]>::len);
    let mut a = vec![0.0; dim];
    for step in nbrs.steps() {
        for (acc, v) in a.iter_mut().zip(step) {
            *acc += v;
        }
    }
    for acc in &mut a {
        *acc /= n;
    }
    Ok(a)
}

/// `C = (Σ_j X_j) / N - X`: pull towards the neighborhood centroid.
pub fn cohesion(agent: &Dragonfly, nbrs: &NeighborSet) -> Result<Vec<f64>> {
    if nbrs.is_empty() {
        return Err(Error::EmptyNeighborhood);
    }
    let n = nbrs.count() as f64;
    let mut c = vec![0.0; agent.dim()];
    for pos in nbrs.positions() {
        for (acc, xj) in c.iter_mut().zip(pos) {
            *acc += xj;
        }
    }
    for (acc, x) in c.iter_mut().zip(&agent.position) {
        *acc = *acc / n - x;
    }
    Ok(c)
}

/// `F = X⁺ - X`: attraction towards the food source.
pub fn food_attraction(agent: &Dragonfly, food: &[f64]) -> Vec<f64> {
    debug_assert_eq!(agent.dim(), food.len());
    food.iter().zip(&agent.position).map(|(f, x)| f - x).collect()
}

/// Enemy distraction. The `Sum` form is `E = X⁻ + X`, kept exactly as
/// published; `Difference` gives the repulsive `E = X - X⁻`.
pub fn enemy_distraction(agent: &Dragonfly, enemy: &[f64], form: EnemyForm) -> Vec<f64> {
    debug_assert_eq!(agent.dim(), enemy.len());
    match form {
        EnemyForm::Sum => enemy.iter().zip(&agent.position).map(|(e, x)| e + x).collect(),
        EnemyForm::Difference => enemy.iter().zip(&agent.position).map(|(e, x)| x - e).collect(),
    }
}

/// `ΔX' = (s·S + a·A + c·C + f·F + e·E) + w·ΔX`, clamped so no component
/// exceeds the range width.
pub fn step_update(
    forces: &ForceSet,
    weights: &Weights,
    prev_step: &[f64],
    space: &SearchSpace,
) -> Vec<f64> {
    let mut step: Vec<f64> = (0..prev_step.len())
        .map(|j| {
            weights.separation * forces.separation[j]
                + weights.alignment * forces.alignment[j]
                + weights.cohesion * forces.cohesion[j]
                + weights.food * forces.food_attraction[j]
                + weights.enemy * forces.enemy_distraction[j]
                + weights.inertia * prev_step[j]
        })
        .collect();
    space.clamp_step(&mut step);
    step
}

/// `X' = X + ΔX'`, clamped to the box; the returned agent carries the new step.
pub fn position_update(agent: &Dragonfly, new_step: Vec<f64>, space: &SearchSpace) -> Dragonfly {
    let mut position: Vec<f64> = agent
        .position
        .iter()
        .zip(&new_step)
        .map(|(x, s)| x + s)
        .collect();
    space.clamp_position(&mut position);
    Dragonfly::new(position, new_step)
}

/// Random walk for an agent with no neighbors: `X' = X + scale·L ⊙ X` with
/// `L` a Lévy draw. The step is reset to zero so stale momentum is not
/// carried into the next swarming update.
pub fn levy_position_update(
    agent: &Dragonfly,
    space: &SearchSpace,
    params: &LevyParams,
    rng: &mut RngStream,
) -> Dragonfly {
    let walk = levy_step(agent.dim(), params, rng);
    let mut position: Vec<f64> = agent
        .position
        .iter()
        .zip(&walk)
        .map(|(x, l)| x + params.scale * l * x)
        .collect();
    space.clamp_position(&mut position);
    Dragonfly::new(position, vec![0.0; agent.dim()])
}

/// Brownian variant of the no-neighbor walk: `X'_j = X_j + scale·width_j·n_j`
/// with unit-normal `n`.
fn brownian_position_update(
    agent: &Dragonfly,
    space: &SearchSpace,
    scale: f64,
    rng: &mut RngStream,
) -> Dragonfly {
    let walk = brownian_step(agent.dim(), 1.0, rng).expect("unit sigma is valid");
    let mut position: Vec<f64> = agent
        .position
        .iter()
        .enumerate()
        .map(|(j, x)| x + scale * space.width(j) * walk[j])
        .collect();
    space.clamp_position(&mut position);
    Dragonfly::new(position, vec![0.0; agent.dim()])
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Run the continuous DA loop on a uniformly initialized population.
pub fn optimize<F>(objective: F, space: &SearchSpace, cfg: &DaConfig) -> Result<RunRecord>
where
    F: Fn(&[f64]) -> f64,
{
    cfg.validate()?;
    let mut rng = RngStream::new(cfg.seed);
    let agents = init_population(space, cfg.pop, &mut rng);
    optimize_with_population(objective, space, cfg, agents, rng).map(|(record, _)| record)
}

/// Uniform positions within bounds and small uniform steps.
pub fn init_population(space: &SearchSpace, pop: usize, rng: &mut RngStream) -> Vec<Dragonfly> {
    (0..pop)
        .map(|_| Dragonfly::new(space.sample_position(rng), space.sample_step(rng)))
        .collect()
}

/// Loop entry point with an explicit initial population, returning the final
/// swarm alongside the record. Used directly by tests that need to pin the
/// starting state.
pub fn optimize_with_population<F>(
    objective: F,
    space: &SearchSpace,
    cfg: &DaConfig,
    agents: Vec<Dragonfly>,
    mut rng: RngStream,
) -> Result<(RunRecord, SwarmState)>
where
    F: Fn(&[f64]) -> f64,
{
    cfg.validate()?;
    if space.mode() != SpaceMode::Continuous {
        return Err(Error::InvalidConfig(
            "continuous optimizer requires a continuous space".into(),
        ));
    }
    if agents.len() != cfg.pop {
        return Err(Error::InvalidConfig(format!(
            "initial population size {} does not match pop {}",
            agents.len(),
            cfg.pop
        )));
    }

    let start = Instant::now();
    let mut state = SwarmState::new(agents, cfg.iters);
    let mut curve = Vec::with_capacity(cfg.iters);
    let mut fitness = vec![0.0; cfg.pop];

    for t in 0..cfg.iters {
        state.t = t;
        for (fit, agent) in fitness.iter_mut().zip(&state.agents) {
            let value = objective(&agent.position);
            if !value.is_finite() {
                return Err(Error::NonFiniteObjective {
                    value,
                    position: agent.position.clone(),
                });
            }
            *fit = value;
        }
        state.refresh_food_enemy(&fitness);
        curve.push(state.food_value);

        let radius = cfg.radius.scalar(space, t, cfg.iters)?;
        let weights = cfg.weights.at(t, cfg.iters, &mut rng);

        // Synchronous update: every move reads the population as it stood
        // after the evaluation pass.
        let snapshot = state.agents.clone();
        for (i, slot) in state.agents.iter_mut().enumerate() {
            let nbrs = neighborhood(&snapshot, i, radius);
            let agent = &snapshot[i];
            *slot = if nbrs.is_empty() {
                let mut walked = match cfg.step_mode {
                    StepMode::Levy => levy_position_update(agent, space, &cfg.levy, &mut rng),
                    StepMode::Brownian => {
                        brownian_position_update(agent, space, cfg.levy.scale, &mut rng)
                    }
                };
                if !cfg.reset_step_after_walk {
                    walked.step.clone_from(&agent.step);
                }
                walked
            } else {
                let food_term = if cfg.food_in_radius_only
                    && euclidean(&agent.position, &state.food) > radius
                {
                    vec![0.0; agent.dim()]
                } else {
                    food_attraction(agent, &state.food)
                };
                let forces = ForceSet {
                    separation: separation(agent, &nbrs)?,
                    alignment: alignment(&nbrs)?,
                    cohesion: cohesion(agent, &nbrs)?,
                    food_attraction: food_term,
                    enemy_distraction: enemy_distraction(agent, &state.enemy, cfg.enemy_form),
                };
                let step = step_update(&forces, &weights, &agent.step, space);
                position_update(agent, step, space)
            };
        }
    }
    state.t = cfg.iters;

    Ok((
        RunRecord {
            best_value: state.food_value,
            best_position: state.food.clone(),
            curve,
            wall_seconds: start.elapsed().as_secs_f64(),
            seed: rng.seed(),
        },
        state,
    ))
}
