//! Experiment orchestration: run (algorithm x function x seeds) grids,
//! aggregate mean/std/time statistics and emit machine-readable results.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;

use crate::baselines::{ga_optimize, gwo_optimize, pso_optimize, GaConfig, PsoConfig};
use crate::bda::{optimize_binary, TransferConfig, TransferKind};
use crate::benchfns::{by_id, BenchmarkFn};
use crate::da::{optimize, DaConfig, StepMode};
use crate::error::{Error, Result};
use crate::moda::optimize_multi;
use crate::record::{RunRecord, StatRow};
use crate::space::SearchSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    Da,
    DaBrownian,
    Bda,
    Moda,
    Pso,
    Gwo,
    Ga,
}

impl Algo {
    pub const ALL: [Algo; 7] = [
        Algo::Da,
        Algo::DaBrownian,
        Algo::Bda,
        Algo::Moda,
        Algo::Pso,
        Algo::Gwo,
        Algo::Ga,
    ];
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Algo::Da => "da",
            Algo::DaBrownian => "da_brownian",
            Algo::Bda => "bda",
            Algo::Moda => "moda",
            Algo::Pso => "pso",
            Algo::Gwo => "gwo",
            Algo::Ga => "ga",
        };
        f.write_str(name)
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "da" => Ok(Algo::Da),
            "da_brownian" | "da-brownian" => Ok(Algo::DaBrownian),
            "bda" => Ok(Algo::Bda),
            "moda" => Ok(Algo::Moda),
            "pso" => Ok(Algo::Pso),
            "gwo" => Ok(Algo::Gwo),
            "ga" => Ok(Algo::Ga),
            other => Err(Error::InvalidConfig(format!("unknown algorithm '{other}'"))),
        }
    }
}

/// PSO velocity regime selector, recorded in the report footer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsoMode {
    Constriction,
    Linear,
}

impl fmt::Display for PsoMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PsoMode::Constriction => f.write_str("constriction"),
            PsoMode::Linear => f.write_str("linear"),
        }
    }
}

impl FromStr for PsoMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "constriction" => Ok(PsoMode::Constriction),
            "linear" => Ok(PsoMode::Linear),
            other => Err(Error::InvalidConfig(format!("unknown pso mode '{other}'"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub algo: Algo,
    /// Benchmark ids (`TF3`, `CEC05`), `onemax` for the binary algorithm or
    /// `schaffer` for the multi-objective one.
    pub functions: Vec<String>,
    pub dim: Option<usize>,
    pub pop: usize,
    pub iters: usize,
    pub runs: usize,
    pub base_seed: u64,
    pub out_dir: PathBuf,
    /// Parallel runs; 1 executes the grid serially.
    pub jobs: usize,
    pub tf_kind: TransferKind,
    pub pso_mode: PsoMode,
    /// Archive capacity for multi-objective runs.
    pub capacity: usize,
    /// Grid segments per objective for multi-objective runs.
    pub n_segments: usize,
    /// Persist measured wall times. Disable for bitwise-reproducible output
    /// files; times are then written as zero.
    pub record_time: bool,
}

impl RunConfig {
    pub fn new(algo: Algo, functions: Vec<String>, out_dir: PathBuf) -> Self {
        Self {
            algo,
            functions,
            dim: None,
            pop: 30,
            iters: 300,
            runs: 30,
            base_seed: 1,
            out_dir,
            jobs: 1,
            tf_kind: TransferKind::StaticV,
            pso_mode: PsoMode::Constriction,
            capacity: 100,
            n_segments: 10,
            record_time: true,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.runs < 1 || self.pop < 2 || self.iters < 1 {
            return Err(Error::InvalidConfig(
                "grid needs runs >= 1, pop >= 2, iters >= 1".into(),
            ));
        }
        if self.functions.is_empty() {
            return Err(Error::InvalidConfig("no functions selected".into()));
        }
        if self.jobs < 1 {
            return Err(Error::InvalidConfig("jobs must be at least 1".into()));
        }
        Ok(())
    }
}

/// One resolved task: either a continuous benchmark, the binary bit-counting
/// task or the built-in bi-objective problem.
#[derive(Debug, Clone)]
enum Task {
    Continuous(BenchmarkFn),
    OneMax { dim: usize },
    Schaffer,
}

impl Task {
    fn name(&self) -> String {
        match self {
            Task::Continuous(f) => f.id().to_string(),
            Task::OneMax { .. } => "onemax".to_string(),
            Task::Schaffer => "schaffer".to_string(),
        }
    }
}

/// Decision-space bounds of the built-in Schaffer problem.
pub fn schaffer_space() -> SearchSpace {
    SearchSpace::symmetric(1, 1000.0).expect("static bounds")
}

/// The built-in bi-objective problem: `f1 = x^2`, `f2 = (x - 2)^2`.
pub fn schaffer_objectives(x: &[f64]) -> Vec<f64> {
    vec![x[0] * x[0], (x[0] - 2.0) * (x[0] - 2.0)]
}

fn resolve_task(cfg: &RunConfig, id: &str) -> Result<Task> {
    match (cfg.algo, id.to_ascii_lowercase().as_str()) {
        (Algo::Bda, "onemax") => Ok(Task::OneMax {
            dim: cfg.dim.unwrap_or(20),
        }),
        (Algo::Bda, other) => Err(Error::InvalidConfig(format!(
            "bda runs on the binary task 'onemax', not '{other}'"
        ))),
        (Algo::Moda, "schaffer") => Ok(Task::Schaffer),
        (Algo::Moda, other) => Err(Error::InvalidConfig(format!(
            "moda runs on the bi-objective task 'schaffer', not '{other}'"
        ))),
        (_, "onemax" | "schaffer") => Err(Error::InvalidConfig(format!(
            "'{id}' requires the matching algorithm (bda or moda)"
        ))),
        _ => Ok(Task::Continuous(by_id(id, cfg.dim)?)),
    }
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub function: String,
    pub algo: Algo,
    pub run_index: usize,
    pub seed: u64,
    pub result: std::result::Result<RunRecord, String>,
    /// Archive CSV for multi-objective runs.
    pub archive_csv: Option<String>,
}

#[derive(Debug, Clone)]
pub struct GridOutcome {
    pub outcomes: Vec<RunOutcome>,
    pub stats: Vec<StatRow>,
    pub all_ok: bool,
}

fn execute(cfg: &RunConfig, task: &Task, seed: u64) -> Result<(RunRecord, Option<String>)> {
    match task {
        Task::Continuous(f) => {
            let space = f.space().clone();
            let objective = move |x: &[f64]| f.evaluate(x).unwrap_or(f64::NAN);
            let record = match cfg.algo {
                Algo::Da | Algo::DaBrownian => {
                    let mut da = DaConfig::new(cfg.pop, cfg.iters, seed);
                    if cfg.algo == Algo::DaBrownian {
                        da.step_mode = StepMode::Brownian;
                    }
                    optimize(objective, &space, &da)?
                }
                Algo::Pso => {
                    let pso = match cfg.pso_mode {
                        PsoMode::Constriction => PsoConfig::new(cfg.pop, cfg.iters, seed),
                        PsoMode::Linear => PsoConfig::linear(cfg.pop, cfg.iters, seed),
                    };
                    pso_optimize(objective, &space, &pso)?
                }
                Algo::Gwo => gwo_optimize(objective, &space, cfg.pop, cfg.iters, seed)?,
                Algo::Ga => {
                    let ga = GaConfig::new(cfg.pop, cfg.iters, seed);
                    ga_optimize(objective, &space, &ga)?
                }
                Algo::Bda | Algo::Moda => unreachable!("resolved earlier"),
            };
            Ok((record, None))
        }
        Task::OneMax { dim } => {
            let da = DaConfig::new(cfg.pop, cfg.iters, seed);
            let tf = match cfg.tf_kind {
                TransferKind::StaticV => TransferConfig::static_v(),
                TransferKind::TimeVarying => TransferConfig::time_varying(),
            };
            let objective = |bits: &[bool]| bits.iter().filter(|&&b| !b).count() as f64;
            let record = optimize_binary(objective, *dim, &da, &tf)?;
            Ok((record, None))
        }
        Task::Schaffer => {
            let da = DaConfig::new(cfg.pop, cfg.iters, seed);
            let (archive, record) = optimize_multi(
                schaffer_objectives,
                &schaffer_space(),
                &da,
                cfg.capacity,
                cfg.n_segments,
            )?;
            Ok((record, Some(archive.to_csv())))
        }
    }
}

/// Execute the whole grid, aggregate statistics and persist `results.csv`,
/// `stats.{csv,json,md}`, `curves.csv` (and archives for multi-objective
/// runs) into the output directory.
pub fn run_grid(cfg: &RunConfig) -> Result<GridOutcome> {
    cfg.validate()?;
    let tasks: Vec<Task> = cfg
        .functions
        .iter()
        .map(|id| resolve_task(cfg, id))
        .collect::<Result<_>>()?;

    let descriptors: Vec<(usize, usize)> = (0..tasks.len())
        .flat_map(|f| (0..cfg.runs).map(move |r| (f, r)))
        .collect();

    let run_one = |&(f, r): &(usize, usize)| -> RunOutcome {
        let seed = cfg.base_seed + r as u64;
        let task = &tasks[f];
        match execute(cfg, task, seed) {
            Ok((mut record, archive_csv)) => {
                if !cfg.record_time {
                    record.wall_seconds = 0.0;
                }
                RunOutcome {
                    function: task.name(),
                    algo: cfg.algo,
                    run_index: r,
                    seed,
                    result: Ok(record),
                    archive_csv,
                }
            }
            Err(e) => RunOutcome {
                function: task.name(),
                algo: cfg.algo,
                run_index: r,
                seed,
                result: Err(e.to_string()),
                archive_csv: None,
            },
        }
    };

    let outcomes: Vec<RunOutcome> = if cfg.jobs == 1 {
        descriptors.iter().map(run_one).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
        pool.install(|| descriptors.par_iter().map(run_one).collect())
    };

    let mut stats = Vec::new();
    for task in &tasks {
        let name = task.name();
        let members: Vec<&RunRecord> = outcomes
            .iter()
            .filter(|o| o.function == name)
            .filter_map(|o| o.result.as_ref().ok())
            .collect();
        if !members.is_empty() {
            stats.push(StatRow::aggregate(&name, &cfg.algo.to_string(), &members));
        }
    }

    let all_ok = outcomes.iter().all(|o| o.result.is_ok());
    persist(cfg, &outcomes, &stats)?;
    Ok(GridOutcome {
        outcomes,
        stats,
        all_ok,
    })
}

fn fmt_float(v: f64) -> String {
    format!("{v:.14e}")
}

fn fmt_time(v: f64) -> String {
    format!("{v:.6}")
}

fn persist(cfg: &RunConfig, outcomes: &[RunOutcome], stats: &[StatRow]) -> Result<()> {
    fs::create_dir_all(&cfg.out_dir)?;

    let mut results = String::from("function,algo,run,seed,status,best_value,time_sec,best_position\n");
    for o in outcomes {
        match &o.result {
            Ok(r) => {
                let pos: Vec<String> = r.best_position.iter().map(|v| fmt_float(*v)).collect();
                results.push_str(&format!(
                    "{},{},{},{},ok,{},{},{}\n",
                    o.function,
                    o.algo,
                    o.run_index,
                    o.seed,
                    fmt_float(r.best_value),
                    fmt_time(r.wall_seconds),
                    pos.join(";")
                ));
            }
            Err(msg) => {
                results.push_str(&format!(
                    "{},{},{},{},failed,,,{}\n",
                    o.function,
                    o.algo,
                    o.run_index,
                    o.seed,
                    msg.replace([',', '\n'], ";")
                ));
            }
        }
    }
    fs::write(cfg.out_dir.join("results.csv"), results)?;

    emit_report(stats, ReportFormat::Csv, &cfg.out_dir.join("stats.csv"))?;
    emit_report(stats, ReportFormat::Json, &cfg.out_dir.join("stats.json"))?;
    emit_markdown(stats, cfg, &cfg.out_dir.join("stats.md"))?;

    let columns: Vec<(String, &[f64])> = outcomes
        .iter()
        .filter_map(|o| {
            o.result.as_ref().ok().map(|r| {
                (
                    format!("{}:{}:run{}", o.function, o.algo, o.run_index),
                    r.curve.as_slice(),
                )
            })
        })
        .collect();
    if !columns.is_empty() {
        convergence_dump(&columns, &cfg.out_dir.join("curves.csv"))?;
    }

    for o in outcomes {
        if let Some(csv) = &o.archive_csv {
            fs::write(
                cfg.out_dir
                    .join(format!("archive_{}_run{}.csv", o.function, o.run_index)),
                csv,
            )?;
        }
    }
    fs::write(cfg.out_dir.join("config.txt"), config_echo(cfg))?;
    Ok(())
}

fn config_echo(cfg: &RunConfig) -> String {
    let mut s = String::new();
    s.push_str(&format!("algo = {}\n", cfg.algo));
    s.push_str(&format!("fn = {}\n", cfg.functions.join(",")));
    if let Some(d) = cfg.dim {
        s.push_str(&format!("dim = {d}\n"));
    }
    s.push_str(&format!("pop = {}\n", cfg.pop));
    s.push_str(&format!("iters = {}\n", cfg.iters));
    s.push_str(&format!("runs = {}\n", cfg.runs));
    s.push_str(&format!("seed = {}\n", cfg.base_seed));
    s.push_str(&format!("jobs = {}\n", cfg.jobs));
    s.push_str(&format!(
        "tf-kind = {}\n",
        match cfg.tf_kind {
            TransferKind::StaticV => "static",
            TransferKind::TimeVarying => "time_varying",
        }
    ));
    s.push_str(&format!("pso-mode = {}\n", cfg.pso_mode));
    s.push_str(&format!("capacity = {}\n", cfg.capacity));
    s.push_str(&format!("segments = {}\n", cfg.n_segments));
    s.push_str(&format!("record-time = {}\n", cfg.record_time));
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            other => Err(Error::InvalidConfig(format!("unknown format '{other}'"))),
        }
    }
}

/// Serialize statistic rows. CSV columns are exactly
/// `function,algo,mean,std,time_sec,runs`; JSON is an array of row objects;
/// markdown renders one row per (function, algo) grouped by function.
pub fn emit_report(stats: &[StatRow], format: ReportFormat, path: &Path) -> Result<()> {
    if stats.is_empty() {
        return Err(Error::InvalidConfig("no statistics to report".into()));
    }
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    match format {
        ReportFormat::Csv => {
            let mut out = String::from("function,algo,mean,std,time_sec,runs\n");
            for row in stats {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    row.function,
                    row.algo,
                    fmt_float(row.mean),
                    fmt_float(row.std),
                    fmt_time(row.time_sec),
                    row.runs
                ));
            }
            fs::write(path, out)?;
        }
        ReportFormat::Json => {
            let json = serde_json::to_string_pretty(stats)
                .map_err(|e| Error::InvalidConfig(format!("json: {e}")))?;
            fs::write(path, json + "\n")?;
        }
        ReportFormat::Markdown => {
            let mut file = fs::File::create(path)?;
            write_markdown(&mut file, stats, None)?;
        }
    }
    Ok(())
}

fn emit_markdown(stats: &[StatRow], cfg: &RunConfig, path: &Path) -> Result<()> {
    if stats.is_empty() {
        return Ok(());
    }
    let mut file = fs::File::create(path)?;
    write_markdown(&mut file, stats, Some(cfg))?;
    Ok(())
}

fn write_markdown(out: &mut impl Write, stats: &[StatRow], cfg: Option<&RunConfig>) -> Result<()> {
    writeln!(out, "# Benchmark statistics\n")?;
    writeln!(out, "| Function | Algorithm | Mean | Std. | Time (sec) | Runs |")?;
    writeln!(out, "|---|---|---|---|---|---|")?;
    // group rows by function id, keeping first-seen function order
    let mut order: Vec<&str> = Vec::new();
    for row in stats {
        if !order.contains(&row.function.as_str()) {
            order.push(&row.function);
        }
    }
    for name in order {
        for row in stats.iter().filter(|r| r.function == name) {
            writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                row.function,
                row.algo,
                fmt_float(row.mean),
                fmt_float(row.std),
                fmt_time(row.time_sec),
                row.runs
            )?;
        }
    }
    writeln!(out)?;
    writeln!(out, "Std. is the sample standard deviation (divisor n-1).")?;
    writeln!(out, "Time is the total wall time summed over the runs of a row.")?;
    if let Some(cfg) = cfg {
        if cfg.algo == Algo::Pso {
            writeln!(out, "PSO inertia regime: {}.", cfg.pso_mode)?;
        }
        if !cfg.record_time {
            writeln!(out, "Wall times were not recorded for this grid.")?;
        }
    }
    Ok(())
}

/// CSV dump of convergence curves: an iteration column followed by one
/// best-so-far column per run. All columns must have equal length.
pub fn convergence_dump(columns: &[(String, &[f64])], path: &Path) -> Result<()> {
    if columns.is_empty() {
        return Err(Error::InvalidConfig("no curves to dump".into()));
    }
    let len = columns[0].1.len();
    if columns.iter().any(|(_, c)| c.len() != len) {
        return Err(Error::InvalidConfig(
            "convergence curves have mismatched lengths".into(),
        ));
    }
    let mut out = String::from("iteration");
    for (label, _) in columns {
        out.push(',');
        out.push_str(label);
    }
    out.push('\n');
    for i in 0..len {
        out.push_str(&i.to_string());
        for (_, curve) in columns {
            out.push(',');
            out.push_str(&fmt_float(curve[i]));
        }
        out.push('\n');
    }
    fs::write(path, out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::tempdir;

    fn tiny_cfg(algo: Algo, functions: &[&str], dir: &Path) -> RunConfig {
        let mut cfg = RunConfig::new(
            algo,
            functions.iter().map(|s| s.to_string()).collect(),
            dir.to_path_buf(),
        );
        cfg.pop = 8;
        cfg.iters = 20;
        cfg.runs = 2;
        cfg.dim = Some(3);
        cfg
    }

    #[test]
    fn grid_runs_and_persists() {
        let dir = tempdir().unwrap();
        let cfg = tiny_cfg(Algo::Da, &["TF1", "TF9"], dir.path());
        let outcome = run_grid(&cfg).unwrap();
        assert!(outcome.all_ok);
        assert_eq!(outcome.outcomes.len(), 4);
        assert_eq!(outcome.stats.len(), 2);
        for file in ["results.csv", "stats.csv", "stats.json", "stats.md", "curves.csv", "config.txt"] {
            assert!(dir.path().join(file).exists(), "{file} missing");
        }
        let stats = fs::read_to_string(dir.path().join("stats.csv")).unwrap();
        assert!(stats.starts_with("function,algo,mean,std,time_sec,runs\n"));
        assert_eq!(stats.lines().count(), 3);
    }

    #[test]
    fn single_run_std_is_zero() {
        let dir = tempdir().unwrap();
        let mut cfg = tiny_cfg(Algo::Gwo, &["TF1"], dir.path());
        cfg.runs = 1;
        let outcome = run_grid(&cfg).unwrap();
        assert_eq!(outcome.stats[0].runs, 1);
        assert_eq!(outcome.stats[0].std, 0.0);
    }

    #[test]
    fn identical_seeds_identical_files() {
        let d1 = tempdir().unwrap();
        let d2 = tempdir().unwrap();
        let mut c1 = tiny_cfg(Algo::Da, &["TF1"], d1.path());
        c1.record_time = false;
        let mut c2 = tiny_cfg(Algo::Da, &["TF1"], d2.path());
        c2.record_time = false;
        run_grid(&c1).unwrap();
        run_grid(&c2).unwrap();
        for file in ["results.csv", "stats.csv", "stats.json", "stats.md", "curves.csv"] {
            let a = fs::read(d1.path().join(file)).unwrap();
            let b = fs::read(d2.path().join(file)).unwrap();
            assert_eq!(a, b, "{file} differs");
        }
    }

    #[test]
    fn different_seed_changes_results() {
        let d1 = tempdir().unwrap();
        let d2 = tempdir().unwrap();
        let mut c1 = tiny_cfg(Algo::Da, &["TF1"], d1.path());
        c1.record_time = false;
        let mut c2 = tiny_cfg(Algo::Da, &["TF1"], d2.path());
        c2.record_time = false;
        c2.base_seed = c1.base_seed + 1000;
        run_grid(&c1).unwrap();
        run_grid(&c2).unwrap();
        let a = fs::read(d1.path().join("results.csv")).unwrap();
        let b = fs::read(d2.path().join("results.csv")).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn parallel_jobs_match_serial() {
        let d1 = tempdir().unwrap();
        let d2 = tempdir().unwrap();
        let mut c1 = tiny_cfg(Algo::Pso, &["TF1", "TF9"], d1.path());
        c1.record_time = false;
        let mut c2 = c1.clone();
        c2.out_dir = d2.path().to_path_buf();
        c2.jobs = 2;
        run_grid(&c1).unwrap();
        run_grid(&c2).unwrap();
        let a = fs::read(d1.path().join("results.csv")).unwrap();
        let b = fs::read(d2.path().join("results.csv")).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn binary_and_multi_objective_tasks() {
        let dir = tempdir().unwrap();
        let mut cfg = tiny_cfg(Algo::Bda, &["onemax"], dir.path());
        cfg.dim = Some(8);
        cfg.iters = 30;
        let outcome = run_grid(&cfg).unwrap();
        assert!(outcome.all_ok);

        let dir2 = tempdir().unwrap();
        let mut cfg = tiny_cfg(Algo::Moda, &["schaffer"], dir2.path());
        cfg.dim = None;
        let outcome = run_grid(&cfg).unwrap();
        assert!(outcome.all_ok);
        assert!(dir2.path().join("archive_schaffer_run0.csv").exists());

        // mismatched pairings are rejected
        let bad = tiny_cfg(Algo::Bda, &["TF1"], dir.path());
        assert!(run_grid(&bad).is_err());
        let bad = tiny_cfg(Algo::Da, &["onemax"], dir.path());
        assert!(run_grid(&bad).is_err());
    }

    #[test]
    fn scientific_notation_keeps_fifteen_digits() {
        let v = 8.881_784_197_001_25e-16;
        assert_eq!(fmt_float(v), "8.88178419700125e-16");
        let row = StatRow {
            function: "TF10".into(),
            algo: "da".into(),
            mean: v,
            std: 0.0,
            time_sec: 1.0,
            runs: 30,
        };
        let dir = tempdir().unwrap();
        let path = dir.path().join("stats.csv");
        emit_report(&[row], ReportFormat::Csv, &path).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert!(text.contains("8.88178419700125e-16"), "{text}");
    }

    #[test]
    fn markdown_groups_by_function_in_order() {
        let mk = |f: &str, algo: &str| StatRow {
            function: f.into(),
            algo: algo.into(),
            mean: 0.0,
            std: 0.0,
            time_sec: 0.0,
            runs: 1,
        };
        let stats = vec![mk("TF2", "da"), mk("TF1", "da"), mk("TF2", "pso")];
        let dir = tempdir().unwrap();
        let path = dir.path().join("stats.md");
        emit_report(&stats, ReportFormat::Markdown, &path).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        let tf2_first = text.find("| TF2 |").unwrap();
        let tf1 = text.find("| TF1 |").unwrap();
        let tf2_last = text.rfind("| TF2 |").unwrap();
        // both TF2 rows stay together, before TF1 ever appears
        assert!(tf2_first < tf2_last && tf2_last < tf1);
    }

    #[test]
    fn convergence_dump_shape() {
        let c1 = vec![5.0, 3.0, 1.0];
        let c2 = vec![6.0, 6.0, 2.0];
        let cols = vec![
            ("TF1:da:run0".to_string(), c1.as_slice()),
            ("TF1:da:run1".to_string(), c2.as_slice()),
        ];
        let dir = tempdir().unwrap();
        let path = dir.path().join("curves.csv");
        convergence_dump(&cols, &path).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], "iteration,TF1:da:run0,TF1:da:run1");
        assert_eq!(lines[1].split(',').count(), 3);
    }

    #[test]
    fn empty_report_is_rejected() {
        let dir = tempdir().unwrap();
        assert!(emit_report(&[], ReportFormat::Csv, &dir.path().join("x.csv")).is_err());
        assert!(convergence_dump(&[], &dir.path().join("c.csv")).is_err());
    }
}
