//! Canonical forms of the 23 classical test functions TF1-TF23.
//!
//! TF1-TF13 accept any dimension; TF14-TF23 are the fixed-dimension set
//! (Foxholes, Kowalik, Six-Hump Camel, Branin, Goldstein-Price, Hartmann-3,
//! Hartmann-6, Shekel-5/7/10). Coefficient tables follow the Dixon-Szego /
//! De Jong lineage as circulated with the common MATLAB benchmark files.

use std::f64::consts::{E, PI};

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

/// Schwefel 2.22: sum of absolutes plus product of absolutes.
pub fn schwefel_222(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v.abs()).sum();
    let prod: f64 = x.iter().map(|v| v.abs()).product();
    sum + prod
}

/// Schwefel 1.2: sum of squared prefix sums.
pub fn schwefel_12(x: &[f64]) -> f64 {
    let mut total = 0.0;
    let mut prefix = 0.0;
    for v in x {
        prefix += v;
        total += prefix * prefix;
    }
    total
}

/// Schwefel 2.21: largest absolute component.
pub fn schwefel_221(x: &[f64]) -> f64 {
    x.iter().map(|v| v.abs()).fold(0.0, f64::max)
}

pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

/// Step function: squared floors.
pub fn step(x: &[f64]) -> f64 {
    x.iter().map(|v| (v + 0.5).floor().powi(2)).sum()
}

/// Quartic without the customary additive noise term, so evaluation stays
/// pure and replayable.
pub fn quartic(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v.powi(4))
        .sum()
}

pub fn schwefel_226(x: &[f64]) -> f64 {
    x.iter().map(|v| -v * v.abs().sqrt().sin()).sum()
}

/// Per-dimension minimizer and value of Schwefel 2.26, polished numerically.
pub const SCHWEFEL_X_STAR: f64 = 420.968_746_359_982_05;
pub const SCHWEFEL_MIN_PER_DIM: f64 = -418.982_887_272_433_7;

pub fn rastrigin(x: &[f64]) -> f64 {
    x.iter()
        .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum()
}

pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let rms = (x.iter().map(|v| v * v).sum::<f64>() / n).sqrt();
    let mean_cos = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * rms).exp() - mean_cos.exp() + 20.0 + E
}

pub fn griewank(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sum - prod + 1.0
}

fn penalty_u(v: f64, a: f64, k: f64, m: f64) -> f64 {
    if v > a {
        k * (v - a).powf(m)
    } else if v < -a {
        k * (-v - a).powf(m)
    } else {
        0.0
    }
}

/// Generalized penalized function no. 1; minimum 0 at x = -1.
pub fn penalized_1(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let y = |v: f64| 1.0 + (v + 1.0) / 4.0;
    let y0 = y(x[0]);
    let mut core = 10.0 * (PI * y0).sin().powi(2);
    for w in x.windows(2) {
        let yi = y(w[0]);
        let yn = y(w[1]);
        core += (yi - 1.0).powi(2) * (1.0 + 10.0 * (PI * yn).sin().powi(2));
    }
    let ylast = y(x[x.len() - 1]);
    core += (ylast - 1.0).powi(2);
    let penalty: f64 = x.iter().map(|&v| penalty_u(v, 10.0, 100.0, 4.0)).sum();
    PI / n * core + penalty
}

/// Generalized penalized function no. 2; minimum 0 at x = 1.
pub fn penalized_2(x: &[f64]) -> f64 {
    let mut core = (3.0 * PI * x[0]).sin().powi(2);
    for w in x.windows(2) {
        core += (w[0] - 1.0).powi(2) * (1.0 + (3.0 * PI * w[1]).sin().powi(2));
    }
    let last = x[x.len() - 1];
    core += (last - 1.0).powi(2) * (1.0 + (2.0 * PI * last).sin().powi(2));
    let penalty: f64 = x.iter().map(|&v| penalty_u(v, 5.0, 100.0, 4.0)).sum();
    0.1 * core + penalty
}

/// Shekel's foxholes (De Jong F5), dim 2.
pub fn foxholes(x: &[f64]) -> f64 {
    const A: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];
    let mut sum = 0.0;
    for j in 0..25 {
        let a1 = A[j % 5];
        let a2 = A[j / 5];
        sum += 1.0 / ((j + 1) as f64 + (x[0] - a1).powi(6) + (x[1] - a2).powi(6));
    }
    1.0 / (1.0 / 500.0 + sum)
}

pub const FOXHOLES_MIN: f64 = 0.998_003_837_794_449_8;
pub const FOXHOLES_X_STAR: [f64; 2] = [-31.978_334_780_538_82, -31.978_332_295_368_574];

/// Kowalik's function, dim 4.
pub fn kowalik(x: &[f64]) -> f64 {
    const A: [f64; 11] = [
        0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
    ];
    const B_INV: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];
    A.iter()
        .zip(B_INV)
        .map(|(&a, b_inv)| {
            let b = 1.0 / b_inv;
            let model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            (a - model) * (a - model)
        })
        .sum()
}

pub const KOWALIK_MIN: f64 = 3.074_859_878_056_056e-4;
pub const KOWALIK_X_STAR: [f64; 4] = [
    0.192_833_452_203_346_38,
    0.190_836_244_566_061_57,
    0.123_117_294_487_729_83,
    0.135_765_992_506_608_04,
];

/// Six-hump camel back, dim 2.
pub fn six_hump_camel(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    4.0 * x1 * x1 - 2.1 * x1.powi(4) + x1.powi(6) / 3.0 + x1 * x2 - 4.0 * x2 * x2
        + 4.0 * x2.powi(4)
}

pub const CAMEL_MIN: f64 = -1.031_628_453_489_877_6;
pub const CAMEL_X_STAR: [f64; 2] = [0.089_842_012_934_536_35, -0.712_656_401_810_809_7];

/// Branin, dim 2, bounds x1 in [-5, 10], x2 in [0, 15].
pub fn branin(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    let a = x2 - 5.1 * x1 * x1 / (4.0 * PI * PI) + 5.0 * x1 / PI - 6.0;
    a * a + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * x1.cos() + 10.0
}

pub const BRANIN_MIN: f64 = 0.397_887_357_729_738_16;
pub const BRANIN_X_STAR: [f64; 2] = [PI, 2.275];

/// Goldstein-Price, dim 2.
pub fn goldstein_price(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    let t1 = 1.0
        + (x1 + x2 + 1.0).powi(2)
            * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2);
    let t2 = 30.0
        + (2.0 * x1 - 3.0 * x2).powi(2)
            * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 * x2);
    t1 * t2
}

pub const GOLDSTEIN_PRICE_MIN: f64 = 3.0;
pub const GOLDSTEIN_PRICE_X_STAR: [f64; 2] = [0.0, -1.0];

const HARTMANN_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];

const HARTMANN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];
// The 0.03815 entry is the variant used by the circulating MATLAB benchmark
// files; it reproduces the published optimum -3.86278214782076.
const HARTMANN3_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.03815, 0.5743, 0.8828],
];

/// Hartmann-3, dim 3, bounds [0, 1].
pub fn hartmann3(x: &[f64]) -> f64 {
    -(0..4)
        .map(|i| {
            let expo: f64 = (0..3)
                .map(|j| HARTMANN3_A[i][j] * (x[j] - HARTMANN3_P[i][j]).powi(2))
                .sum();
            HARTMANN_C[i] * (-expo).exp()
        })
        .sum::<f64>()
}

pub const HARTMANN3_MIN: f64 = -3.862_782_147_820_755_4;
pub const HARTMANN3_X_STAR: [f64; 3] = [
    0.114_614_336_499_802_02,
    0.555_648_850_651_118_6,
    0.852_546_953_087_445_7,
];

const HARTMANN6_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];
const HARTMANN6_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

/// Hartmann-6, dim 6, bounds [0, 1].
pub fn hartmann6(x: &[f64]) -> f64 {
    -(0..4)
        .map(|i| {
            let expo: f64 = (0..6)
                .map(|j| HARTMANN6_A[i][j] * (x[j] - HARTMANN6_P[i][j]).powi(2))
                .sum();
            HARTMANN_C[i] * (-expo).exp()
        })
        .sum::<f64>()
}

pub const HARTMANN6_MIN: f64 = -3.322_368_011_415_515;
pub const HARTMANN6_X_STAR: [f64; 6] = [
    0.201_689_512_840_881_66,
    0.150_010_691_215_734_68,
    0.476_873_975_520_047_34,
    0.275_332_430_951_074_6,
    0.311_651_617_462_712_86,
    0.657_300_532_965_973_2,
];

const SHEKEL_A: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];
const SHEKEL_C: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

/// Shekel family with `m` wells, dim 4, bounds [0, 10].
pub fn shekel(x: &[f64], m: usize) -> f64 {
    -(0..m)
        .map(|i| {
            let dist: f64 = (0..4).map(|j| (x[j] - SHEKEL_A[i][j]).powi(2)).sum();
            1.0 / (dist + SHEKEL_C[i])
        })
        .sum::<f64>()
}

pub const SHEKEL5_MIN: f64 = -10.153_199_679_058_229;
pub const SHEKEL5_X_STAR: [f64; 4] = [
    4.000_037_151_080_39,
    4.000_133_275_843_115,
    4.000_037_153_167_726,
    4.000_133_276_877_367,
];
pub const SHEKEL7_MIN: f64 = -10.402_940_566_818_664;
pub const SHEKEL7_X_STAR: [f64; 4] = [
    4.000_572_917_109_016,
    4.000_689_366_776_857,
    3.999_489_710_901_12,
    3.999_606_159_410_502,
];
pub const SHEKEL10_MIN: f64 = -10.536_409_816_692_045;
pub const SHEKEL10_X_STAR: [f64; 4] = [
    4.000_746_530_961_358,
    4.000_592_931_951_245,
    3.999_663_400_498_093_8,
    3.999_509_802_168_968,
];
