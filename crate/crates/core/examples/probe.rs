//! Quick empirical probe of the acceptance-scale scenarios.

use dragonfly_core::baselines::{ga_optimize, gwo_optimize, pso_optimize, GaConfig, PsoConfig};
use dragonfly_core::bda::{optimize_binary, TransferConfig};
use dragonfly_core::benchfns::by_id;
use dragonfly_core::da::{optimize, DaConfig, StepMode};
use dragonfly_core::moda::optimize_multi;
use dragonfly_core::harness::{schaffer_objectives, schaffer_space};

fn summarize(label: &str, bests: &[f64]) {
    let mut sorted = bests.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mean = bests.iter().sum::<f64>() / bests.len() as f64;
    let median = sorted[sorted.len() / 2];
    println!(
        "{label}: mean={mean:.6e} median={median:.6e} min={:.6e} max={:.6e}",
        sorted[0],
        sorted[sorted.len() - 1]
    );
}

fn main() {
    let runs = 30;

    // criterion 2 fixtures: TF16/17/18, pop 30, iters 300
    for (fn_id, target) in [("TF16", -1.0316285), ("TF17", 0.39788736), ("TF18", 3.0)] {
        let f = by_id(fn_id, None).unwrap();
        for algo in ["da", "da_brownian", "pso", "gwo", "ga"] {
            let bests: Vec<f64> = (0..runs)
                .map(|r| {
                    let seed = 100 + r as u64;
                    let obj = |x: &[f64]| f.evaluate(x).unwrap_or(f64::NAN);
                    match algo {
                        "da" => optimize(obj, f.space(), &DaConfig::new(30, 300, seed)).unwrap().best_value,
                        "da_brownian" => {
                            let mut cfg = DaConfig::new(30, 300, seed);
                            cfg.step_mode = StepMode::Brownian;
                            optimize(obj, f.space(), &cfg).unwrap().best_value
                        }
                        "pso" => pso_optimize(obj, f.space(), &PsoConfig::new(30, 300, seed)).unwrap().best_value,
                        "gwo" => gwo_optimize(obj, f.space(), 30, 300, seed).unwrap().best_value,
                        "ga" => ga_optimize(obj, f.space(), &GaConfig::new(30, 300, seed)).unwrap().best_value,
                        _ => unreachable!(),
                    }
                })
                .collect();
            let mean = bests.iter().sum::<f64>() / runs as f64;
            let ok = (mean - target).abs() <= 1e-2;
            println!(
                "{fn_id} {algo}: mean={mean:.8} target={target} |diff|={:.2e} {}",
                (mean - target).abs(),
                if ok { "OK" } else { "MISS" }
            );
        }
    }

    // criterion 3: DA sphere dim 10, pop 30, iters 500, median <= 1e-3
    let f = by_id("TF1", Some(10)).unwrap();
    let bests: Vec<f64> = (0..runs)
        .map(|r| {
            let obj = |x: &[f64]| f.evaluate(x).unwrap_or(f64::NAN);
            optimize(obj, f.space(), &DaConfig::new(30, 500, 200 + r as u64))
                .unwrap()
                .best_value
        })
        .collect();
    summarize("TF1 dim10 DA pop30 it500", &bests);

    // criterion 4: DA ackley dim 10, pop 50, iters 500, <=1e-8 in >=50%
    let f = by_id("TF10", Some(10)).unwrap();
    let bests: Vec<f64> = (0..runs)
        .map(|r| {
            let obj = |x: &[f64]| f.evaluate(x).unwrap_or(f64::NAN);
            optimize(obj, f.space(), &DaConfig::new(50, 500, 300 + r as u64))
                .unwrap()
                .best_value
        })
        .collect();
    let hits = bests.iter().filter(|&&b| b <= 1e-8).count();
    summarize("TF10 dim10 DA pop50 it500", &bests);
    println!("  ackley hits <=1e-8: {hits}/{runs}");

    // criterion 5: BDA onemax dim 20, pop 30, iters 200
    for (label, tf) in [
        ("static", TransferConfig::static_v()),
        ("time_varying", TransferConfig::time_varying()),
    ] {
        let hits = (0..runs)
            .filter(|r| {
                let obj = |bits: &[bool]| bits.iter().filter(|&&b| !b).count() as f64;
                let rec =
                    optimize_binary(obj, 20, &DaConfig::new(30, 200, 400 + *r as u64), &tf).unwrap();
                rec.best_value == 0.0
            })
            .count();
        println!("BDA onemax {label}: {hits}/{runs} optimum hits");
    }

    // criterion 7: MODA schaffer pop 50, iters 300, capacity 100
    let (archive, _) = optimize_multi(
        schaffer_objectives,
        &schaffer_space(),
        &DaConfig::new(50, 300, 500),
        100,
        10,
    )
    .unwrap();
    let xs: Vec<f64> = archive.entries().iter().map(|e| e.position[0]).collect();
    let in_range = xs.iter().filter(|&&x| (-0.05..=2.05).contains(&x)).count();
    println!(
        "MODA archive: {} entries, {} within [-0.05, 2.05], x range [{:.4}, {:.4}]",
        xs.len(),
        in_range,
        xs.iter().cloned().fold(f64::INFINITY, f64::min),
        xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
    );

    // hypervolume vs dense front sample, ref (5,5)
    let hv = |points: &mut Vec<(f64, f64)>| -> f64 {
        points.retain(|p| p.0 < 5.0 && p.1 < 5.0);
        points.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
        let mut area = 0.0;
        let mut prev_f1 = 0.0_f64;
        let mut best_f2 = f64::INFINITY;
        let mut kept: Vec<(f64, f64)> = Vec::new();
        for &(f1, f2) in points.iter() {
            if f2 < best_f2 {
                best_f2 = f2;
                kept.push((f1, f2));
            }
        }
        let _ = prev_f1;
        for (i, &(f1, f2)) in kept.iter().enumerate() {
            let next_f1 = if i + 1 < kept.len() { kept[i + 1].0 } else { 5.0 };
            area += (next_f1 - f1) * (5.0 - f2);
        }
        area
    };
    let mut archive_pts: Vec<(f64, f64)> = archive
        .entries()
        .iter()
        .map(|e| (e.objectives.as_slice()[0], e.objectives.as_slice()[1]))
        .collect();
    let mut true_pts: Vec<(f64, f64)> = (0..=10_000)
        .map(|i| {
            let x = 2.0 * i as f64 / 10_000.0;
            (x * x, (x - 2.0) * (x - 2.0))
        })
        .collect();
    let hv_arch = hv(&mut archive_pts);
    let hv_true = hv(&mut true_pts);
    println!(
        "MODA hypervolume: archive={hv_arch:.6} true={hv_true:.6} ratio={:.4}",
        hv_arch / hv_true
    );

    // [PAPER] examples: PSO TF6 and GWO TF9 at pop 100, iters 1000
    let f = by_id("TF6", Some(10)).unwrap();
    let hits = (0..runs)
        .filter(|r| {
            let obj = |x: &[f64]| f.evaluate(x).unwrap_or(f64::NAN);
            pso_optimize(obj, f.space(), &PsoConfig::new(100, 1000, 600 + *r as u64))
                .unwrap()
                .best_value
                == 0.0
        })
        .count();
    println!("PSO TF6 dim10: {hits}/{runs} exact zeros");

    let f = by_id("TF9", Some(10)).unwrap();
    let hits = (0..runs)
        .filter(|r| {
            let obj = |x: &[f64]| f.evaluate(x).unwrap_or(f64::NAN);
            gwo_optimize(obj, f.space(), 100, 1000, 700 + *r as u64)
                .unwrap()
                .best_value
                == 0.0
        })
        .count();
    println!("GWO TF9 dim10: {hits}/{runs} exact zeros");
}
