//! Multi-objective DA: Pareto dominance, a bounded non-dominated archive,
//! per-iteration grid segmentation of objective space, roulette-wheel food
//! selection biased to sparse segments, enemy selection from the most
//! crowded segment, and archive truncation.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::da::{
    alignment, cohesion, enemy_distraction, food_attraction, init_population,
    levy_position_update, separation, step_update, DaConfig, ForceSet, StepMode,
};
use crate::error::{Error, Result};
use crate::record::RunRecord;
use crate::rng::RngStream;
use crate::space::{neighborhood, Dragonfly, SearchSpace, SpaceMode};
use crate::walks::brownian_step;

/// One point in objective space; all components finite.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveVector {
    values: Vec<f64>,
}

impl ObjectiveVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFiniteObjective {
                value: *values.iter().find(|v| !v.is_finite()).unwrap(),
                position: values.clone(),
            });
        }
        Ok(Self { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.values
    }
}

/// Pareto dominance for minimization: `u` dominates `v` iff `u <= v`
/// componentwise with at least one strict improvement.
pub fn dominates(u: &[f64], v: &[f64]) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            got: v.len(),
        });
    }
    let mut strict = false;
    for (a, b) in u.iter().zip(v) {
        if a > b {
            return Ok(false);
        }
        if a < b {
            strict = true;
        }
    }
    Ok(strict)
}

fn dominates_unchecked(u: &[f64], v: &[f64]) -> bool {
    let mut strict = false;
    for (a, b) in u.iter().zip(v) {
        if a > b {
            return false;
        }
        if a < b {
            strict = true;
        }
    }
    strict
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArchiveEntry {
    pub position: Vec<f64>,
    pub objectives: ObjectiveVector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertOutcome {
    Accepted,
    Rejected,
}

/// Bounded store of mutually non-dominated solutions with grid crowding.
///
/// Crowding segments are axis-aligned equal boxes over the bounding box of
/// the archived objective vectors, recomputed every time they are needed.
#[derive(Debug, Clone)]
pub struct ParetoArchive {
    entries: Vec<ArchiveEntry>,
    capacity: usize,
    n_segments: usize,
}

impl ParetoArchive {
    pub fn new(capacity: usize, n_segments: usize) -> Result<Self> {
        if n_segments == 0 {
            return Err(Error::InvalidConfig(
                "segment count per objective must be positive".into(),
            ));
        }
        Ok(Self {
            entries: Vec::new(),
            capacity,
            n_segments,
        })
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn n_segments(&self) -> usize {
        self.n_segments
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[ArchiveEntry] {
        &self.entries
    }

    /// Offer a candidate. Rejected iff some resident dominates it; otherwise
    /// it enters and every resident it dominates is removed. Overflow beyond
    /// capacity is resolved by truncation.
    pub fn insert(
        &mut self,
        position: Vec<f64>,
        objectives: ObjectiveVector,
        rng: &mut RngStream,
    ) -> Result<InsertOutcome> {
        if let Some(first) = self.entries.first() {
            if first.objectives.len() != objectives.len() {
                return Err(Error::DimensionMismatch {
                    expected: first.objectives.len(),
                    got: objectives.len(),
                });
            }
        }
        let cand = objectives.as_slice();
        if self
            .entries
            .iter()
            .any(|e| dominates_unchecked(e.objectives.as_slice(), cand))
        {
            return Ok(InsertOutcome::Rejected);
        }
        self.entries
            .retain(|e| !dominates_unchecked(cand, e.objectives.as_slice()));
        self.entries.push(ArchiveEntry {
            position,
            objectives,
        });
        if self.entries.len() > self.capacity {
            self.truncate(rng);
        }
        Ok(InsertOutcome::Accepted)
    }

    /// Assign every entry to one grid segment of the current objective
    /// bounding box. Boundary values go to the lower bin; each axis maximum
    /// goes to the last bin; a zero-width axis collapses to bin 0.
    pub fn segment(&self) -> BTreeMap<u64, Vec<usize>> {
        let mut map: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        if self.entries.is_empty() {
            return map;
        }
        let k = self.entries[0].objectives.len();
        let mut lo = vec![f64::INFINITY; k];
        let mut hi = vec![f64::NEG_INFINITY; k];
        for e in &self.entries {
            for (d, v) in e.objectives.as_slice().iter().enumerate() {
                lo[d] = lo[d].min(*v);
                hi[d] = hi[d].max(*v);
            }
        }
        let n = self.n_segments as u64;
        for (idx, e) in self.entries.iter().enumerate() {
            let mut id: u64 = 0;
            for (d, v) in e.objectives.as_slice().iter().enumerate() {
                let width = (hi[d] - lo[d]) / self.n_segments as f64;
                let bin = if width == 0.0 {
                    0
                } else {
                    let q = (v - lo[d]) / width;
                    (q.ceil() as i64 - 1).clamp(0, self.n_segments as i64 - 1) as u64
                };
                id = id * n + bin;
            }
            map.entry(id).or_default().push(idx);
        }
        map
    }

    /// Roulette-wheel food pick: segment chosen with weight `1/(count + 1)`,
    /// then a uniform member of that segment.
    pub fn select_food(&self, rng: &mut RngStream) -> Result<Vec<f64>> {
        let segments = self.segment();
        if segments.is_empty() {
            return Err(Error::EmptyArchive);
        }
        let total: f64 = segments
            .values()
            .map(|members| 1.0 / (members.len() as f64 + 1.0))
            .sum();
        let mut spin = rng.uniform() * total;
        let mut chosen = None;
        for members in segments.values() {
            let w = 1.0 / (members.len() as f64 + 1.0);
            if spin < w {
                chosen = Some(members);
                break;
            }
            spin -= w;
        }
        // float round-off can leave the spin just past the last slot
        let members = chosen.unwrap_or_else(|| segments.values().last().unwrap());
        let pick = members[rng.index(members.len())];
        Ok(self.entries[pick].position.clone())
    }

    /// Enemy pick: uniform member of the most crowded segment, ties broken
    /// towards the lowest segment id.
    pub fn select_enemy(&self, rng: &mut RngStream) -> Result<Vec<f64>> {
        let segments = self.segment();
        if segments.is_empty() {
            return Err(Error::EmptyArchive);
        }
        let mut best: Option<&Vec<usize>> = None;
        for members in segments.values() {
            if best.map_or(true, |b| members.len() > b.len()) {
                best = Some(members);
            }
        }
        let members = best.unwrap();
        let pick = members[rng.index(members.len())];
        Ok(self.entries[pick].position.clone())
    }

    /// Remove uniform-random members of the currently most crowded segment,
    /// recomputing the segmentation after each removal, until the archive
    /// fits its capacity.
    pub fn truncate(&mut self, rng: &mut RngStream) {
        while self.entries.len() > self.capacity {
            let segments = self.segment();
            let mut crowded: Option<&Vec<usize>> = None;
            for members in segments.values() {
                if crowded.map_or(true, |b| members.len() > b.len()) {
                    crowded = Some(members);
                }
            }
            let members = crowded.expect("archive is non-empty here");
            let victim = members[rng.index(members.len())];
            self.entries.remove(victim);
        }
    }

    /// CSV export: one row per entry, position components (`x0..`) first,
    /// then objective components (`f0..`).
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if let Some(first) = self.entries.first() {
            let d = first.position.len();
            let k = first.objectives.len();
            let header: Vec<String> = (0..d)
                .map(|j| format!("x{j}"))
                .chain((0..k).map(|j| format!("f{j}")))
                .collect();
            out.push_str(&header.join(","));
            out.push('\n');
            for e in &self.entries {
                let row: Vec<String> = e
                    .position
                    .iter()
                    .chain(e.objectives.as_slice())
                    .map(|v| format!("{v:.14e}"))
                    .collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
        }
        out
    }
}

/// Multi-objective DA loop: the continuous swarming dynamics with food and
/// enemy drawn from the archive each iteration. Every evaluated agent is
/// offered to the archive. The record's scalar curve tracks the best-so-far
/// sum of objective components, which is monotone by construction.
pub fn optimize_multi<F>(
    objectives: F,
    space: &SearchSpace,
    cfg: &DaConfig,
    capacity: usize,
    n_segments: usize,
) -> Result<(ParetoArchive, RunRecord)>
where
    F: Fn(&[f64]) -> Vec<f64>,
{
    cfg.validate()?;
    if space.mode() != SpaceMode::Continuous {
        return Err(Error::InvalidConfig(
            "multi-objective optimizer requires a continuous space".into(),
        ));
    }

    let start = Instant::now();
    let mut rng = RngStream::new(cfg.seed);
    let mut agents = init_population(space, cfg.pop, &mut rng);
    let mut archive = ParetoArchive::new(capacity, n_segments)?;

    let mut best_scalar = f64::INFINITY;
    let mut best_position = agents[0].position.clone();
    let mut curve = Vec::with_capacity(cfg.iters);
    let mut k_objectives: Option<usize> = None;

    for t in 0..cfg.iters {
        let mut evals: Vec<ObjectiveVector> = Vec::with_capacity(cfg.pop);
        for agent in &agents {
            let values = objectives(&agent.position);
            match k_objectives {
                None => {
                    if values.len() < 2 {
                        return Err(Error::InvalidConfig(
                            "multi-objective run needs at least 2 objectives".into(),
                        ));
                    }
                    k_objectives = Some(values.len());
                }
                Some(k) => {
                    if values.len() != k {
                        return Err(Error::DimensionMismatch {
                            expected: k,
                            got: values.len(),
                        });
                    }
                }
            }
            evals.push(ObjectiveVector::new(values)?);
        }
        for (agent, obj) in agents.iter().zip(&evals) {
            let scalar: f64 = obj.as_slice().iter().sum();
            if scalar < best_scalar {
                best_scalar = scalar;
                best_position.clone_from(&agent.position);
            }
            archive.insert(agent.position.clone(), obj.clone(), &mut rng)?;
        }
        curve.push(best_scalar);

        // the archive always holds at least one entry once a finite
        // candidate has been offered; the swarm fallback covers the
        // degenerate case anyway
        let (food, enemy) = if archive.is_empty() {
            (best_position.clone(), best_position.clone())
        } else {
            (archive.select_food(&mut rng)?, archive.select_enemy(&mut rng)?)
        };

        let radius = cfg.radius.scalar(space, t, cfg.iters)?;
        let weights = cfg.weights.at(t, cfg.iters, &mut rng);
        let snapshot = agents.clone();
        for (i, slot) in agents.iter_mut().enumerate() {
            let nbrs = neighborhood(&snapshot, i, radius);
            let agent = &snapshot[i];
            *slot = if nbrs.is_empty() {
                match cfg.step_mode {
                    StepMode::Levy => levy_position_update(agent, space, &cfg.levy, &mut rng),
                    StepMode::Brownian => {
                        let walk = brownian_step(agent.dim(), 1.0, &mut rng)?;
                        let mut position: Vec<f64> = agent
                            .position
                            .iter()
                            .enumerate()
                            .map(|(j, x)| x + cfg.levy.scale * space.width(j) * walk[j])
                            .collect();
                        space.clamp_position(&mut position);
                        Dragonfly::new(position, vec![0.0; agent.dim()])
                    }
                }
            } else {
                let forces = ForceSet {
                    separation: separation(agent, &nbrs)?,
                    alignment: alignment(&nbrs)?,
                    cohesion: cohesion(agent, &nbrs)?,
                    food_attraction: food_attraction(agent, &food),
                    enemy_distraction: enemy_distraction(agent, &enemy, cfg.enemy_form),
                };
                let step = step_update(&forces, &weights, &agent.step, space);
                let mut position: Vec<f64> = agent
                    .position
                    .iter()
                    .zip(&step)
                    .map(|(x, s)| x + s)
                    .collect();
                space.clamp_position(&mut position);
                Dragonfly::new(position, step)
            };
        }
    }

    let record = RunRecord {
        best_value: best_scalar,
        best_position,
        curve,
        wall_seconds: start.elapsed().as_secs_f64(),
        seed: cfg.seed,
    };
    Ok((archive, record))
}
