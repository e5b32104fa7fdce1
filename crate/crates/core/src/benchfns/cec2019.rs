//! Canonical (unshifted, unrotated) forms of the ten CEC-2019 "100-digit
//! challenge" functions, each offset by +1 so the global minimum value is 1.
//!
//! The official shift/rotation data files are not bundled; a transform can
//! be loaded from CSV and applied as `z = R (x - o)` before evaluation.

use std::f64::consts::PI;

use super::classical::{ackley, griewank, rastrigin};

/// Storn's Chebyshev polynomial fitting problem (degree dim-1, dim odd).
///
/// Penalizes polynomials that leave [-1, 1] on the sample grid and that sit
/// below T_{dim-1}(±1.2) at the interval edges. Zero exactly at the
/// Chebyshev coefficients.
pub fn chebyshev(x: &[f64]) -> f64 {
    let nx = x.len();
    // T_{nx-1}(1.2) by recurrence
    let mut a = 1.0;
    let mut b = 1.2;
    for _ in 0..nx.saturating_sub(2) {
        let next = 2.4 * b - a;
        a = b;
        b = next;
    }
    let edge = b;

    let sample = 32 * nx;
    let dy = 2.0 / sample as f64;
    let mut y = -1.0;
    let mut sum = 0.0;
    for _ in 0..=sample {
        let mut px = x[0];
        for &coef in &x[1..] {
            px = y * px + coef;
        }
        if !(-1.0..=1.0).contains(&px) {
            sum += (1.0 - px.abs()) * (1.0 - px.abs());
        }
        y += dy;
    }
    for m in [-1.2, 1.2] {
        let mut px = x[0];
        for &coef in &x[1..] {
            px = m * px + coef;
        }
        if px < edge {
            sum += px * px;
        }
    }
    sum
}

/// Coefficients of the degree-8 Chebyshev polynomial, the known optimum of
/// the dim-9 fitting problem.
pub const CHEBYSHEV_X_STAR: [f64; 9] = [128.0, 0.0, -256.0, 0.0, 160.0, 0.0, -32.0, 0.0, 1.0];

/// Inverse Hilbert matrix problem: with dim = b^2, read x as a b x b matrix
/// Z (entry (i, k) at x[k + b*i]) and sum |H Z - I|.
pub fn inverse_hilbert(x: &[f64]) -> f64 {
    let b = (x.len() as f64).sqrt() as usize;
    debug_assert_eq!(b * b, x.len());
    let mut sum = 0.0;
    for i in 0..b {
        for k in 0..b {
            let mut y = 0.0;
            for j in 0..b {
                let hilbert = 1.0 / (i + j + 1) as f64;
                y += hilbert * x[k + b * j];
            }
            let target = if i == k { 1.0 } else { 0.0 };
            sum += (y - target).abs();
        }
    }
    sum
}

/// Flattened exact inverse of the 4x4 Hilbert matrix.
pub const INVERSE_HILBERT_X_STAR: [f64; 16] = [
    16.0, -120.0, 240.0, -140.0, -120.0, 1200.0, -2700.0, 1680.0, 240.0, -2700.0, 6480.0, -4200.0,
    -140.0, 1680.0, -4200.0, 2800.0,
];

/// Lennard-Jones minimum-energy cluster for dim/3 atoms, shifted by the
/// known 6-atom minimum so the optimum sits at zero.
pub fn lennard_jones(x: &[f64]) -> f64 {
    let atoms = x.len() / 3;
    let mut sum = 12.712_062_256_8;
    for i in 0..atoms.saturating_sub(1) {
        for j in (i + 1)..atoms {
            let (a, b) = (3 * i, 3 * j);
            let dx = x[a] - x[b];
            let dy = x[a + 1] - x[b + 1];
            let dz = x[a + 2] - x[b + 2];
            let r2 = dx * dx + dy * dy + dz * dz;
            let r6 = r2 * r2 * r2;
            if r6 > 1.0e-10 {
                sum += (1.0 / r6 - 2.0) / r6;
            } else {
                sum += 1.0e20;
            }
        }
    }
    sum
}

/// Weierstrass with a = 0.5, b = 3, k_max = 20; zero at the origin.
pub fn weierstrass(x: &[f64]) -> f64 {
    const A: f64 = 0.5;
    const B: f64 = 3.0;
    const K_MAX: usize = 20;
    let center: f64 = (0..=K_MAX)
        .map(|k| A.powi(k as i32) * (2.0 * PI * B.powi(k as i32) * 0.5).cos())
        .sum();
    x.iter()
        .map(|&v| {
            let inner: f64 = (0..=K_MAX)
                .map(|k| A.powi(k as i32) * (2.0 * PI * B.powi(k as i32) * (v + 0.5)).cos())
                .sum();
            inner - center
        })
        .sum()
}

/// Modified Schwefel with boundary handling for |z| > 500; zero at the
/// origin under the built-in 420.9687... offset.
pub fn modified_schwefel(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mut sum = 0.0;
    for &v in x {
        let z = v + 420.968_746_227_503_6;
        let g = if z.abs() <= 500.0 {
            z * z.abs().sqrt().sin()
        } else if z > 500.0 {
            let zm = 500.0 - z % 500.0;
            zm * zm.abs().sqrt().sin() - (z - 500.0) * (z - 500.0) / (10_000.0 * n)
        } else {
            let zm = z.abs() % 500.0 - 500.0;
            zm * zm.abs().sqrt().sin() - (z + 500.0) * (z + 500.0) / (10_000.0 * n)
        };
        sum += g;
    }
    418.982_887_272_433_8 * n - sum
}

fn schaffer_pair(x: f64, y: f64) -> f64 {
    let ss = x * x + y * y;
    0.5 + ((ss.sqrt().sin()).powi(2) - 0.5) / (1.0 + 0.001 * ss).powi(2)
}

/// Expanded Schaffer F6 over the cyclic pairs; zero at the origin.
pub fn expanded_schaffer_f6(x: &[f64]) -> f64 {
    let n = x.len();
    (0..n).map(|i| schaffer_pair(x[i], x[(i + 1) % n])).sum()
}

/// Happy Cat; zero at all components -1.
pub fn happy_cat(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sum_sq: f64 = x.iter().map(|v| v * v).sum();
    let sum: f64 = x.iter().sum();
    (sum_sq - n).abs().powf(0.25) + (0.5 * sum_sq + sum) / n + 0.5
}

/// Base value of a CEC-2019 function (without the +1 optimum offset).
pub fn cec_base(index: usize, x: &[f64]) -> f64 {
    match index {
        1 => chebyshev(x),
        2 => inverse_hilbert(x),
        3 => lennard_jones(x),
        4 => rastrigin(x),
        5 => griewank(x),
        6 => weierstrass(x),
        7 => modified_schwefel(x),
        8 => expanded_schaffer_f6(x),
        9 => happy_cat(x),
        10 => ackley(x),
        _ => unreachable!("cec index out of range"),
    }
}
