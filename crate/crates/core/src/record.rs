//! Per-run results and aggregated statistics rows.

use serde::Serialize;

/// Outcome of one seeded optimization run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunRecord {
    pub best_value: f64,
    pub best_position: Vec<f64>,
    /// Best-so-far value per iteration; monotone non-increasing with
    /// `curve[last] == best_value`.
    pub curve: Vec<f64>,
    pub wall_seconds: f64,
    pub seed: u64,
}

impl RunRecord {
    pub fn iters(&self) -> usize {
        self.curve.len()
    }
}

/// One row of a mean/std/time comparison table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatRow {
    pub function: String,
    pub algo: String,
    pub mean: f64,
    pub std: f64,
    pub time_sec: f64,
    pub runs: usize,
}

/// Sum in ascending value order, so aggregation over runs is bit-identical
/// under permutation of run order.
fn ordered_sum(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted.iter().sum()
}

/// Arithmetic mean (order-free); 0 for an empty slice.
pub fn mean(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    ordered_sum(values) / values.len() as f64
}

/// Sample standard deviation (divisor n-1, order-free); 0 by convention for
/// n < 2.
pub fn sample_std(values: &[f64]) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let m = mean(values);
    let sq: Vec<f64> = values.iter().map(|v| (v - m) * (v - m)).collect();
    (ordered_sum(&sq) / (values.len() - 1) as f64).sqrt()
}

impl StatRow {
    /// Aggregate run records for one (function, algo) cell.
    pub fn aggregate(function: &str, algo: &str, records: &[&RunRecord]) -> Self {
        let best: Vec<f64> = records.iter().map(|r| r.best_value).collect();
        let times: Vec<f64> = records.iter().map(|r| r.wall_seconds).collect();
        Self {
            function: function.to_string(),
            algo: algo.to_string(),
            mean: mean(&best),
            std: sample_std(&best),
            time_sec: ordered_sum(&times),
            runs: records.len(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn std_of_single_run_is_zero() {
        assert_eq!(sample_std(&[3.5]), 0.0);
        assert_eq!(sample_std(&[]), 0.0);
    }

    #[test]
    fn mean_and_std_hand_values() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(mean(&xs), 2.5);
        // sample variance = (2.25 + 0.25 + 0.25 + 2.25) / 3 = 5/3
        assert!((sample_std(&xs) - (5.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn aggregation_is_order_free() {
        let mk = |v: f64, t: f64| RunRecord {
            best_value: v,
            best_position: vec![0.0],
            curve: vec![v],
            wall_seconds: t,
            seed: 0,
        };
        let a = mk(1.0, 0.5);
        let b = mk(2.0, 0.25);
        let c = mk(4.0, 0.125);
        let r1 = StatRow::aggregate("f", "algo", &[&a, &b, &c]);
        let r2 = StatRow::aggregate("f", "algo", &[&c, &a, &b]);
        assert_eq!(r1.mean, r2.mean);
        assert_eq!(r1.std, r2.std);
        assert_eq!(r1.time_sec, r2.time_sec);
        // mean stays within the member range
        assert!(r1.mean >= 1.0 && r1.mean <= 4.0);
    }
}
