//! Bounded search spaces, swarm agents and the adaptive schedules that drive
//! the swarming weights and neighborhood radius.

use crate::error::{Error, Result};
use crate::rng::RngStream;

/// Whether positions are real vectors or bit vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceMode {
    Continuous,
    Binary,
}

/// Box-bounded search space.
#[derive(Debug, Clone)]
pub struct SearchSpace {
    dim: usize,
    lower: Vec<f64>,
    upper: Vec<f64>,
    mode: SpaceMode,
}

impl SearchSpace {
    /// Continuous space with per-dimension bounds. Requires `lower[j] < upper[j]`.
    pub fn continuous(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::InvalidConfig(format!(
                "bound vectors must be non-empty and equal length (got {} and {})",
                lower.len(),
                upper.len()
            )));
        }
        for (j, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
                return Err(Error::InvalidConfig(format!(
                    "lower[{j}] = {lo} must be strictly below upper[{j}] = {hi}"
                )));
            }
        }
        Ok(Self {
            dim: lower.len(),
            lower,
            upper,
            mode: SpaceMode::Continuous,
        })
    }

    /// Continuous hypercube `[-half_width, half_width]^dim`.
    pub fn symmetric(dim: usize, half_width: f64) -> Result<Self> {
        Self::continuous(vec![-half_width; dim], vec![half_width; dim])
    }

    /// Binary space: bounds are forced to `[0, 1]` per dimension.
    pub fn binary(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidConfig("dimension must be positive".into()));
        }
        Ok(Self {
            dim,
            lower: vec![0.0; dim],
            upper: vec![1.0; dim],
            mode: SpaceMode::Binary,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn mode(&self) -> SpaceMode {
        self.mode
    }

    /// Range width `upper[j] - lower[j]`.
    pub fn width(&self, j: usize) -> f64 {
        self.upper[j] - self.lower[j]
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim
            && x.iter()
                .zip(&self.lower)
                .zip(&self.upper)
                .all(|((v, lo), hi)| *v >= *lo && *v <= *hi)
    }

    /// Clamp a position into the box.
    pub fn clamp_position(&self, x: &mut [f64]) {
        for ((v, lo), hi) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            *v = v.clamp(*lo, *hi);
        }
    }

    /// Clamp a step so `|step[j]| <= upper[j] - lower[j]`.
    pub fn clamp_step(&self, step: &mut [f64]) {
        for (j, s) in step.iter_mut().enumerate() {
            let w = self.width(j);
            *s = s.clamp(-w, w);
        }
    }

    /// Uniform random position inside the box.
    pub fn sample_position(&self, rng: &mut RngStream) -> Vec<f64> {
        (0..self.dim)
            .map(|j| rng.uniform_in(self.lower[j], self.upper[j]))
            .collect()
    }

    /// Uniform random step in `[-width/10, width/10]` per dimension.
    /// Small initial magnitudes avoid first-iteration clamp saturation.
    pub fn sample_step(&self, rng: &mut RngStream) -> Vec<f64> {
        (0..self.dim)
            .map(|j| {
                let w = self.width(j) / 10.0;
                rng.uniform_in(-w, w)
            })
            .collect()
    }
}

/// One search agent: a position vector and its step (velocity) vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Dragonfly {
    pub position: Vec<f64>,
    pub step: Vec<f64>,
}

impl Dragonfly {
    pub fn new(position: Vec<f64>, step: Vec<f64>) -> Self {
        debug_assert_eq!(position.len(), step.len());
        Self { position, step }
    }

    pub fn dim(&self) -> usize {
        self.position.len()
    }
}

/// Swarm population plus the food (best-so-far) and enemy (current worst)
/// bookkeeping shared by the optimization loops.
#[derive(Debug, Clone)]
pub struct SwarmState {
    pub agents: Vec<Dragonfly>,
    pub food: Vec<f64>,
    pub food_value: f64,
    pub enemy: Vec<f64>,
    pub enemy_value: f64,
    pub t: usize,
    pub max_iters: usize,
}

impl SwarmState {
    pub fn new(agents: Vec<Dragonfly>, max_iters: usize) -> Self {
        let dim = agents.first().map_or(0, Dragonfly::dim);
        Self {
            agents,
            food: vec![0.0; dim],
            food_value: f64::INFINITY,
            enemy: vec![0.0; dim],
            enemy_value: f64::NEG_INFINITY,
            t: 0,
            max_iters,
        }
    }

    /// Refresh food (elitist best-so-far) and enemy (worst of the current
    /// population) from a completed evaluation pass. Scanning in index order
    /// breaks ties towards the lowest agent index, and because the pass is
    /// completed before any agent moves, the outcome does not depend on the
    /// order agents are later updated in.
    pub fn refresh_food_enemy(&mut self, fitness: &[f64]) {
        debug_assert_eq!(fitness.len(), self.agents.len());
        self.enemy_value = f64::NEG_INFINITY;
        for (agent, &fit) in self.agents.iter().zip(fitness) {
            if fit < self.food_value {
                self.food_value = fit;
                self.food.clone_from(&agent.position);
            }
            if fit > self.enemy_value {
                self.enemy_value = fit;
                self.enemy.clone_from(&agent.position);
            }
        }
    }
}

/// Neighbors of one agent: indices into the swarm, with views of their
/// positions and steps.
#[derive(Debug)]
pub struct NeighborSet<'a> {
    indices: Vec<usize>,
    agents: &'a [Dragonfly],
}

impl<'a> NeighborSet<'a> {
    pub fn count(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn positions(&self) -> impl Iterator<Item = &'a [f64]> + '_ {
        self.indices.iter().map(|&j| self.agents[j].position.as_slice())
    }

    /// Neighbor step vectors, i.e. the neighbor velocities.
    pub fn steps(&self) -> impl Iterator<Item = &'a [f64]> + '_ {
        self.indices.iter().map(|&j| self.agents[j].step.as_slice())
    }
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// All agents `j != i` within Euclidean distance `radius` of agent `i`.
/// An empty set is a valid result; the focal agent is always excluded.
pub fn neighborhood<'a>(agents: &'a [Dragonfly], i: usize, radius: f64) -> NeighborSet<'a> {
    debug_assert!(i < agents.len());
    debug_assert!(radius >= 0.0);
    let focal = &agents[i].position;
    let indices = agents
        .iter()
        .enumerate()
        .filter(|(j, a)| *j != i && euclidean(focal, &a.position) <= radius)
        .map(|(j, _)| j)
        .collect();
    NeighborSet { indices, agents }
}

/// Neighborhood radius growth: starts at a quarter of the range and expands
/// past the full range before the run ends, so the swarm ends as one group.
///
/// `r_j(t) = width_j * (base_fraction + growth * t / T)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusSchedule {
    pub base_fraction: f64,
    pub growth: f64,
}

impl Default for RadiusSchedule {
    fn default() -> Self {
        Self {
            base_fraction: 0.25,
            growth: 2.0,
        }
    }
}

impl RadiusSchedule {
    /// Per-dimension radius at iteration `t` of `max_iters`.
    pub fn per_dim(&self, space: &SearchSpace, t: usize, max_iters: usize) -> Result<Vec<f64>> {
        if max_iters == 0 {
            return Err(Error::InvalidConfig("max_iters must be at least 1".into()));
        }
        let frac = self.base_fraction + self.growth * t as f64 / max_iters as f64;
        Ok((0..space.dim()).map(|j| space.width(j) * frac).collect())
    }

    /// Scalar radius for the Euclidean neighborhood test: the L2 norm of the
    /// per-dimension radii, so that at `t = T` it covers the box diagonal.
    pub fn scalar(&self, space: &SearchSpace, t: usize, max_iters: usize) -> Result<f64> {
        let r = self.per_dim(space, t, max_iters)?;
        Ok(r.iter().map(|v| v * v).sum::<f64>().sqrt())
    }
}

/// Per-dimension neighborhood radius under the default schedule.
pub fn radius_schedule(space: &SearchSpace, t: usize, max_iters: usize) -> Result<Vec<f64>> {
    RadiusSchedule::default().per_dim(space, t, max_iters)
}

/// Base magnitudes and inertia ramp for the five swarming weights.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightSchedule {
    pub s_base: f64,
    pub a_base: f64,
    pub c_base: f64,
    pub f_base: f64,
    pub e_base: f64,
    pub w_start: f64,
    pub w_end: f64,
}

impl Default for WeightSchedule {
    fn default() -> Self {
        Self {
            s_base: 0.1,
            a_base: 0.1,
            c_base: 0.7,
            f_base: 1.0,
            e_base: 1.0,
            w_start: 0.9,
            w_end: 0.2,
        }
    }
}

/// Swarming weights realized for one iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Weights {
    pub separation: f64,
    pub alignment: f64,
    pub cohesion: f64,
    pub food: f64,
    pub enemy: f64,
    pub inertia: f64,
}

impl WeightSchedule {
    pub fn validate(&self) -> Result<()> {
        let bases = [self.s_base, self.a_base, self.c_base, self.f_base, self.e_base];
        if bases.iter().any(|b| *b < 0.0 || !b.is_finite()) {
            return Err(Error::InvalidConfig("base weights must be non-negative".into()));
        }
        if !(self.w_start > self.w_end && self.w_end > 0.0) {
            return Err(Error::InvalidConfig(
                "inertia ramp requires w_start > w_end > 0".into(),
            ));
        }
        Ok(())
    }

    /// Weights at iteration `t` of `max_iters`.
    ///
    /// Inertia ramps linearly from `w_start` to `w_end`. Separation,
    /// alignment, cohesion and enemy distraction each get a fresh uniform
    /// multiplier and a linearly vanishing factor `max(0, 1 - 2t/T)`, so the
    /// swarm stops scattering halfway through the run. Food attraction keeps
    /// a fresh uniform multiplier only and never decays. Multipliers are
    /// redrawn once per iteration, not per agent.
    pub fn at(&self, t: usize, max_iters: usize, rng: &mut RngStream) -> Weights {
        debug_assert!(max_iters >= 1 && t <= max_iters);
        let frac = t as f64 / max_iters as f64;
        let decay = (1.0 - 2.0 * frac).max(0.0);
        Weights {
            separation: self.s_base * rng.uniform() * decay,
            alignment: self.a_base * rng.uniform() * decay,
            cohesion: self.c_base * rng.uniform() * decay,
            food: self.f_base * rng.uniform(),
            enemy: self.e_base * rng.uniform() * decay,
            // two-sided form so both endpoints are hit exactly
            inertia: self.w_start * (1.0 - frac) + self.w_end * frac,
        }
    }
}

/// Convenience wrapper matching the free-function form of the schedule.
pub fn weights_at(
    sched: &WeightSchedule,
    t: usize,
    max_iters: usize,
    rng: &mut RngStream,
) -> Weights {
    sched.at(t, max_iters, rng)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_agents() -> Vec<Dragonfly> {
        vec![
            Dragonfly::new(vec![0.0, 0.0], vec![0.0, 0.0]),
            Dragonfly::new(vec![3.0, 4.0], vec![0.0, 0.0]),
        ]
    }

    #[test]
    fn neighborhood_at_exact_distance() {
        // distance between (0,0) and (3,4) is exactly 5
        let agents = two_agents();
        let nbrs = neighborhood(&agents, 0, 5.0);
        assert_eq!(nbrs.count(), 1);
        assert_eq!(nbrs.indices(), &[1]);
    }

    #[test]
    fn neighborhood_just_below_distance() {
        let agents = two_agents();
        let nbrs = neighborhood(&agents, 0, 4.9);
        assert_eq!(nbrs.count(), 0);
    }

    #[test]
    fn neighborhood_excludes_self() {
        let agents = vec![Dragonfly::new(vec![1.0], vec![0.0])];
        let nbrs = neighborhood(&agents, 0, 1e9);
        assert!(nbrs.is_empty());
    }

    #[test]
    fn neighborhood_is_symmetric() {
        let mut rng = RngStream::new(11);
        for _ in 0..50 {
            let agents: Vec<Dragonfly> = (0..8)
                .map(|_| {
                    Dragonfly::new(
                        (0..3).map(|_| rng.uniform_in(-10.0, 10.0)).collect(),
                        vec![0.0; 3],
                    )
                })
                .collect();
            let r = rng.uniform_in(0.0, 20.0);
            for i in 0..agents.len() {
                for &j in neighborhood(&agents, i, r).indices() {
                    assert!(
                        neighborhood(&agents, j, r).indices().contains(&i),
                        "neighborhood not symmetric for ({i}, {j})"
                    );
                }
            }
        }
    }

    #[test]
    fn radius_start_and_midpoint() {
        // range width 4 -> r(0) = 1 and r(T/2) = 5
        let space = SearchSpace::symmetric(2, 2.0).unwrap();
        let r0 = radius_schedule(&space, 0, 100).unwrap();
        assert_eq!(r0, vec![1.0, 1.0]);
        let rh = radius_schedule(&space, 50, 100).unwrap();
        assert_eq!(rh, vec![5.0, 5.0]);
    }

    #[test]
    fn radius_covers_range_at_end() {
        let space = SearchSpace::continuous(vec![-3.0, 0.0], vec![7.0, 1.0]).unwrap();
        let r = radius_schedule(&space, 200, 200).unwrap();
        for (j, rj) in r.iter().enumerate() {
            assert!(*rj >= space.width(j));
        }
    }

    #[test]
    fn radius_monotone_in_t() {
        let space = SearchSpace::symmetric(3, 50.0).unwrap();
        let mut prev = 0.0;
        for t in 0..=64 {
            let r = radius_schedule(&space, t, 64).unwrap()[0];
            assert!(r >= prev);
            prev = r;
        }
    }

    #[test]
    fn radius_rejects_zero_iterations() {
        let space = SearchSpace::symmetric(1, 1.0).unwrap();
        assert!(radius_schedule(&space, 0, 0).is_err());
    }

    #[test]
    fn inertia_ramp_endpoints_and_midpoint() {
        let sched = WeightSchedule::default();
        let mut rng = RngStream::new(0);
        assert_eq!(sched.at(0, 10, &mut rng).inertia, 0.9);
        assert_eq!(sched.at(10, 10, &mut rng).inertia, 0.2);
        let mid = sched.at(5, 10, &mut rng).inertia;
        assert!((mid - 0.55).abs() < 1e-15);
    }

    #[test]
    fn swarming_weights_vanish_at_end() {
        let sched = WeightSchedule::default();
        let mut rng = RngStream::new(3);
        let w = sched.at(100, 100, &mut rng);
        assert_eq!(w.separation, 0.0);
        assert_eq!(w.alignment, 0.0);
        assert_eq!(w.cohesion, 0.0);
        assert_eq!(w.enemy, 0.0);
        assert_eq!(w.inertia, 0.2);
    }

    #[test]
    fn weights_non_negative_everywhere() {
        let sched = WeightSchedule::default();
        let mut rng = RngStream::new(9);
        for t in 0..=50 {
            let w = sched.at(t, 50, &mut rng);
            for v in [w.separation, w.alignment, w.cohesion, w.food, w.enemy, w.inertia] {
                assert!(v >= 0.0);
            }
        }
    }

    #[test]
    fn binary_space_bounds_are_unit() {
        let space = SearchSpace::binary(5).unwrap();
        assert_eq!(space.lower(), &[0.0; 5]);
        assert_eq!(space.upper(), &[1.0; 5]);
        assert_eq!(space.mode(), SpaceMode::Binary);
    }

    #[test]
    fn invalid_bounds_rejected() {
        assert!(SearchSpace::continuous(vec![1.0], vec![1.0]).is_err());
        assert!(SearchSpace::continuous(vec![2.0], vec![1.0]).is_err());
        assert!(SearchSpace::continuous(vec![], vec![]).is_err());
    }

    #[test]
    fn clamping_respects_limits() {
        let space = SearchSpace::continuous(vec![0.0, 0.0], vec![10.0, 10.0]).unwrap();
        let mut x = vec![-5.0, 12.0];
        space.clamp_position(&mut x);
        assert_eq!(x, vec![0.0, 10.0]);
        let mut s = vec![25.0, -11.0];
        space.clamp_step(&mut s);
        assert_eq!(s, vec![10.0, -10.0]);
    }

    #[test]
    fn refresh_keeps_elitist_food_and_current_enemy() {
        let agents = vec![
            Dragonfly::new(vec![1.0], vec![0.0]),
            Dragonfly::new(vec![2.0], vec![0.0]),
        ];
        let mut state = SwarmState::new(agents, 10);
        state.refresh_food_enemy(&[5.0, 3.0]);
        assert_eq!(state.food_value, 3.0);
        assert_eq!(state.food, vec![2.0]);
        assert_eq!(state.enemy_value, 5.0);
        // food is elitist across passes, enemy tracks the current population
        state.refresh_food_enemy(&[9.0, 7.0]);
        assert_eq!(state.food_value, 3.0);
        assert_eq!(state.enemy_value, 9.0);
    }

    #[test]
    fn refresh_is_order_free() {
        let a = Dragonfly::new(vec![1.0], vec![0.0]);
        let b = Dragonfly::new(vec![2.0], vec![0.0]);
        let c = Dragonfly::new(vec![3.0], vec![0.0]);
        let mut s1 = SwarmState::new(vec![a.clone(), b.clone(), c.clone()], 1);
        let mut s2 = SwarmState::new(vec![c, b, a], 1);
        s1.refresh_food_enemy(&[4.0, 2.0, 8.0]);
        s2.refresh_food_enemy(&[8.0, 2.0, 4.0]);
        assert_eq!(s1.food_value, s2.food_value);
        assert_eq!(s1.enemy_value, s2.enemy_value);
        assert_eq!(s1.food, s2.food);
        assert_eq!(s1.enemy, s2.enemy);
    }
}
