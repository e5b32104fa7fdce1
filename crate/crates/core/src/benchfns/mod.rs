//! Benchmark corpus: the 23 classical test functions in their three groups
//! (unimodal TF1-TF7, multi-modal TF8-TF13, fixed-dimension TF14-TF23) and
//! the ten CEC-2019 functions, with dimension, bounds and known-optimum
//! metadata.

pub mod cec2019;
pub mod classical;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::space::SearchSpace;

use classical as cl;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Unimodal,
    Multimodal,
    FixedDimension,
    Cec2019,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Group::Unimodal => "unimodal",
            Group::Multimodal => "multimodal",
            Group::FixedDimension => "fixed_dimension",
            Group::Cec2019 => "cec2019",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Tf(u8),
    Cec(u8),
}

/// Optional shift/rotation applied before evaluation: `z = R (x - o)`.
#[derive(Debug, Clone)]
struct Transform {
    shift: Vec<f64>,
    rotation: Vec<Vec<f64>>,
}

#[derive(Debug, Clone)]
pub struct BenchmarkFn {
    id: String,
    dim: usize,
    space: SearchSpace,
    group: Group,
    kind: Kind,
    known_min: Option<f64>,
    optimum: Option<Vec<f64>>,
    transform: Option<Transform>,
}

/// Default dimension for the scalable functions TF1-TF13.
pub const DEFAULT_SCALABLE_DIM: usize = 30;

fn tf_descriptor(index: u8, dim: usize) -> (f64, Group, Option<f64>, Option<Vec<f64>>) {
    // (half-range or special bounds handled by caller, group, min, optimum)
    match index {
        1 => (100.0, Group::Unimodal, Some(0.0), Some(vec![0.0; dim])),
        2 => (10.0, Group::Unimodal, Some(0.0), Some(vec![0.0; dim])),
        3 => (100.0, Group::Unimodal, Some(0.0), Some(vec![0.0; dim])),
        4 => (100.0, Group::Unimodal, Some(0.0), Some(vec![0.0; dim])),
        5 => (30.0, Group::Unimodal, Some(0.0), Some(vec![1.0; dim])),
        6 => (100.0, Group::Unimodal, Some(0.0), Some(vec![0.0; dim])),
        7 => (1.28, Group::Unimodal, Some(0.0), Some(vec![0.0; dim])),
        8 => (
            500.0,
            Group::Multimodal,
            Some(cl::SCHWEFEL_MIN_PER_DIM * dim as f64),
            Some(vec![cl::SCHWEFEL_X_STAR; dim]),
        ),
        9 => (5.12, Group::Multimodal, Some(0.0), Some(vec![0.0; dim])),
        10 => (32.0, Group::Multimodal, Some(0.0), Some(vec![0.0; dim])),
        11 => (600.0, Group::Multimodal, Some(0.0), Some(vec![0.0; dim])),
        12 => (50.0, Group::Multimodal, Some(0.0), Some(vec![-1.0; dim])),
        13 => (50.0, Group::Multimodal, Some(0.0), Some(vec![1.0; dim])),
        _ => unreachable!("scalable tf index"),
    }
}

fn make_tf(index: u8, dim: usize) -> Result<BenchmarkFn> {
    if (1..=13).contains(&index) {
        let (half, group, known_min, optimum) = tf_descriptor(index, dim);
        return Ok(BenchmarkFn {
            id: format!("TF{index}"),
            dim,
            space: SearchSpace::symmetric(dim, half)?,
            group,
            kind: Kind::Tf(index),
            known_min,
            optimum,
            transform: None,
        });
    }
    let (dim, space, known_min, optimum): (usize, SearchSpace, f64, Vec<f64>) = match index {
        14 => (
            2,
            SearchSpace::symmetric(2, 65.536)?,
            cl::FOXHOLES_MIN,
            cl::FOXHOLES_X_STAR.to_vec(),
        ),
        15 => (
            4,
            SearchSpace::symmetric(4, 5.0)?,
            cl::KOWALIK_MIN,
            cl::KOWALIK_X_STAR.to_vec(),
        ),
        16 => (
            2,
            SearchSpace::symmetric(2, 5.0)?,
            cl::CAMEL_MIN,
            cl::CAMEL_X_STAR.to_vec(),
        ),
        17 => (
            2,
            SearchSpace::continuous(vec![-5.0, 0.0], vec![10.0, 15.0])?,
            cl::BRANIN_MIN,
            cl::BRANIN_X_STAR.to_vec(),
        ),
        18 => (
            2,
            SearchSpace::symmetric(2, 2.0)?,
            cl::GOLDSTEIN_PRICE_MIN,
            cl::GOLDSTEIN_PRICE_X_STAR.to_vec(),
        ),
        19 => (
            3,
            SearchSpace::continuous(vec![0.0; 3], vec![1.0; 3])?,
            cl::HARTMANN3_MIN,
            cl::HARTMANN3_X_STAR.to_vec(),
        ),
        20 => (
            6,
            SearchSpace::continuous(vec![0.0; 6], vec![1.0; 6])?,
            cl::HARTMANN6_MIN,
            cl::HARTMANN6_X_STAR.to_vec(),
        ),
        21 => (
            4,
            SearchSpace::continuous(vec![0.0; 4], vec![10.0; 4])?,
            cl::SHEKEL5_MIN,
            cl::SHEKEL5_X_STAR.to_vec(),
        ),
        22 => (
            4,
            SearchSpace::continuous(vec![0.0; 4], vec![10.0; 4])?,
            cl::SHEKEL7_MIN,
            cl::SHEKEL7_X_STAR.to_vec(),
        ),
        23 => (
            4,
            SearchSpace::continuous(vec![0.0; 4], vec![10.0; 4])?,
            cl::SHEKEL10_MIN,
            cl::SHEKEL10_X_STAR.to_vec(),
        ),
        _ => return Err(Error::UnknownFunction(format!("TF{index}"))),
    };
    Ok(BenchmarkFn {
        id: format!("TF{index}"),
        dim,
        space,
        group: Group::FixedDimension,
        kind: Kind::Tf(index),
        known_min: Some(known_min),
        optimum: Some(optimum),
        transform: None,
    })
}

fn make_cec(index: u8) -> Result<BenchmarkFn> {
    let (dim, half, optimum): (usize, f64, Option<Vec<f64>>) = match index {
        1 => (9, 8192.0, Some(cec2019::CHEBYSHEV_X_STAR.to_vec())),
        2 => (16, 16384.0, Some(cec2019::INVERSE_HILBERT_X_STAR.to_vec())),
        3 => (18, 4.0, None),
        4 => (10, 100.0, Some(vec![0.0; 10])),
        5 => (10, 100.0, Some(vec![0.0; 10])),
        6 => (10, 100.0, Some(vec![0.0; 10])),
        7 => (10, 100.0, Some(vec![0.0; 10])),
        8 => (10, 100.0, Some(vec![0.0; 10])),
        9 => (10, 100.0, Some(vec![-1.0; 10])),
        10 => (10, 100.0, Some(vec![0.0; 10])),
        _ => return Err(Error::UnknownFunction(format!("CEC{index:02}"))),
    };
    Ok(BenchmarkFn {
        id: format!("CEC{index:02}"),
        dim,
        space: SearchSpace::symmetric(dim, half)?,
        group: Group::Cec2019,
        kind: Kind::Cec(index),
        known_min: Some(1.0),
        optimum,
        transform: None,
    })
}

impl BenchmarkFn {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    pub fn group(&self) -> Group {
        self.group
    }

    /// Known global minimum value, when the canonical literature states one.
    pub fn known_min(&self) -> Option<f64> {
        self.known_min
    }

    /// A position attaining the known minimum, when one is stored.
    pub fn optimum(&self) -> Option<&[f64]> {
        self.optimum.as_deref()
    }

    /// Evaluate at an in-bounds point of the right dimension.
    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        for (j, &v) in x.iter().enumerate() {
            if v < self.space.lower()[j] || v > self.space.upper()[j] {
                return Err(Error::OutOfBounds {
                    dim: j,
                    value: v,
                    lower: self.space.lower()[j],
                    upper: self.space.upper()[j],
                });
            }
        }
        let transformed;
        let point = match &self.transform {
            None => x,
            Some(tr) => {
                let centered: Vec<f64> = x.iter().zip(&tr.shift).map(|(v, o)| v - o).collect();
                transformed = tr
                    .rotation
                    .iter()
                    .map(|row| row.iter().zip(&centered).map(|(r, c)| r * c).sum())
                    .collect::<Vec<f64>>();
                &transformed
            }
        };
        Ok(match self.kind {
            Kind::Tf(i) => self.eval_tf(i, point),
            Kind::Cec(i) => cec2019::cec_base(i as usize, point) + 1.0,
        })
    }

    fn eval_tf(&self, index: u8, x: &[f64]) -> f64 {
        match index {
            1 => cl::sphere(x),
            2 => cl::schwefel_222(x),
            3 => cl::schwefel_12(x),
            4 => cl::schwefel_221(x),
            5 => cl::rosenbrock(x),
            6 => cl::step(x),
            7 => cl::quartic(x),
            8 => cl::schwefel_226(x),
            9 => cl::rastrigin(x),
            10 => cl::ackley(x),
            11 => cl::griewank(x),
            12 => cl::penalized_1(x),
            13 => cl::penalized_2(x),
            14 => cl::foxholes(x),
            15 => cl::kowalik(x),
            16 => cl::six_hump_camel(x),
            17 => cl::branin(x),
            18 => cl::goldstein_price(x),
            19 => cl::hartmann3(x),
            20 => cl::hartmann6(x),
            21 => cl::shekel(x, 5),
            22 => cl::shekel(x, 7),
            23 => cl::shekel(x, 10),
            _ => unreachable!("tf index"),
        }
    }

    /// Load a shift/rotation transform from CSV. Line 1 holds `dim,k`
    /// (dimension and function index), line 2 the shift row of `dim` reals,
    /// then `dim` rotation rows of `dim` reals each. The stored optimum
    /// metadata no longer applies afterwards and is cleared.
    pub fn load_transform(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)?;
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::MalformedTransform("missing header line".into()))?;
        let fields: Vec<&str> = header.split(',').map(str::trim).collect();
        if fields.len() != 2 {
            return Err(Error::MalformedTransform(format!(
                "header must be 'dim,k', got '{header}'"
            )));
        }
        let dim: usize = fields[0]
            .parse()
            .map_err(|_| Error::MalformedTransform(format!("bad dim '{}'", fields[0])))?;
        if dim != self.dim {
            return Err(Error::MalformedTransform(format!(
                "transform dim {dim} does not match function dim {}",
                self.dim
            )));
        }
        let parse_row = |line: &str| -> Result<Vec<f64>> {
            let row: std::result::Result<Vec<f64>, _> =
                line.split(',').map(|f| f.trim().parse::<f64>()).collect();
            let row =
                row.map_err(|e| Error::MalformedTransform(format!("bad number: {e}")))?;
            if row.len() != dim {
                return Err(Error::MalformedTransform(format!(
                    "expected {dim} values per row, got {}",
                    row.len()
                )));
            }
            Ok(row)
        };
        let shift = parse_row(
            lines
                .next()
                .ok_or_else(|| Error::MalformedTransform("missing shift row".into()))?,
        )?;
        let mut rotation = Vec::with_capacity(dim);
        for _ in 0..dim {
            rotation.push(parse_row(lines.next().ok_or_else(|| {
                Error::MalformedTransform("missing rotation row".into())
            })?)?);
        }
        self.transform = Some(Transform { shift, rotation });
        self.known_min = None;
        self.optimum = None;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Classical,
    Cec2019,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "classical" => Ok(Suite::Classical),
            "cec2019" => Ok(Suite::Cec2019),
            other => Err(Error::UnknownSuite(other.to_string())),
        }
    }
}

/// The full suite in canonical order. Scalable functions use
/// [`DEFAULT_SCALABLE_DIM`]; construct individual entries through [`by_id`]
/// to pick another dimension.
pub fn suite(name: Suite) -> Vec<BenchmarkFn> {
    match name {
        Suite::Classical => (1..=23)
            .map(|i| make_tf(i, DEFAULT_SCALABLE_DIM).expect("static table"))
            .collect(),
        Suite::Cec2019 => (1..=10).map(|i| make_cec(i).expect("static table")).collect(),
    }
}

/// Look up one function by id (`TF1`..`TF23`, `CEC01`..`CEC10`,
/// case-insensitive). `dim` overrides the dimension of the scalable
/// functions TF1-TF13 and is rejected elsewhere.
pub fn by_id(id: &str, dim: Option<usize>) -> Result<BenchmarkFn> {
    let canon = id.to_ascii_uppercase();
    let parse = |prefix: &str| -> Option<u8> {
        canon
            .strip_prefix(prefix)
            .and_then(|rest| rest.parse::<u8>().ok())
    };
    if let Some(i) = parse("TF") {
        if !(1..=23).contains(&i) {
            return Err(Error::UnknownFunction(id.to_string()));
        }
        if (1..=13).contains(&i) {
            let d = dim.unwrap_or(DEFAULT_SCALABLE_DIM);
            if d == 0 {
                return Err(Error::InvalidConfig("dimension must be positive".into()));
            }
            return make_tf(i, d);
        }
        let fixed = make_tf(i, 0)?;
        if let Some(d) = dim {
            if d != fixed.dim {
                return Err(Error::InvalidConfig(format!(
                    "{canon} has fixed dimension {}, cannot use {d}",
                    fixed.dim
                )));
            }
        }
        return Ok(fixed);
    }
    if let Some(i) = parse("CEC") {
        if !(1..=10).contains(&i) {
            return Err(Error::UnknownFunction(id.to_string()));
        }
        let fixed = make_cec(i)?;
        if let Some(d) = dim {
            if d != fixed.dim {
                return Err(Error::InvalidConfig(format!(
                    "{canon} has fixed dimension {}, cannot use {d}",
                    fixed.dim
                )));
            }
        }
        return Ok(fixed);
    }
    Err(Error::UnknownFunction(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngStream;

    /// Relative check with an absolute floor for minima at (or near) zero.
    fn close(actual: f64, expected: f64) -> bool {
        (actual - expected).abs() <= 1e-9 * expected.abs().max(1.0)
    }

    #[test]
    fn stored_optima_reproduce_known_minima() {
        for f in suite(Suite::Classical).iter().chain(suite(Suite::Cec2019).iter()) {
            let (Some(x), Some(min)) = (f.optimum(), f.known_min()) else {
                continue;
            };
            let value = f.evaluate(x).unwrap();
            assert!(
                close(value, min),
                "{}: f(x*) = {value}, expected {min}",
                f.id()
            );
        }
    }

    #[test]
    fn hand_values_at_named_minima() {
        assert_eq!(by_id("TF1", Some(4)).unwrap().evaluate(&[0.0; 4]).unwrap(), 0.0);
        let camel = by_id("TF16", None).unwrap();
        assert!((camel.known_min().unwrap() - -1.0316285).abs() < 1e-6);
        let branin = by_id("TF17", None).unwrap();
        assert!((branin.known_min().unwrap() - 0.3978874).abs() < 1e-6);
        let gp = by_id("TF18", None).unwrap();
        assert_eq!(gp.evaluate(&[0.0, -1.0]).unwrap(), 3.0);
        for id in ["CEC01", "CEC02", "CEC04", "CEC09", "CEC10"] {
            let f = by_id(id, None).unwrap();
            let v = f.evaluate(f.optimum().unwrap()).unwrap();
            assert!(close(v, 1.0), "{id} optimum value {v}");
        }
    }

    #[test]
    fn suite_shapes() {
        let classical = suite(Suite::Classical);
        assert_eq!(classical.len(), 23);
        let unimodal = classical.iter().filter(|f| f.group() == Group::Unimodal).count();
        let multi = classical.iter().filter(|f| f.group() == Group::Multimodal).count();
        let fixed = classical
            .iter()
            .filter(|f| f.group() == Group::FixedDimension)
            .count();
        assert_eq!((unimodal, multi, fixed), (7, 6, 10));

        let cec = suite(Suite::Cec2019);
        assert_eq!(cec.len(), 10);
        assert_eq!(cec[0].id(), "CEC01");
        assert_eq!(cec[0].dim(), 9);
        assert_eq!(cec[0].space().lower()[0], -8192.0);
        assert_eq!(cec[0].space().upper()[0], 8192.0);
        assert_eq!(cec[2].id(), "CEC03");
        assert_eq!(cec[2].dim(), 18);
        assert_eq!(cec[2].space().upper()[0], 4.0);
        let dims: Vec<usize> = cec.iter().map(BenchmarkFn::dim).collect();
        assert_eq!(dims, vec![9, 16, 18, 10, 10, 10, 10, 10, 10, 10]);
    }

    #[test]
    fn unknown_ids_and_suites_rejected() {
        assert!(by_id("TF0", None).is_err());
        assert!(by_id("TF24", None).is_err());
        assert!(by_id("CEC11", None).is_err());
        assert!(by_id("nope", None).is_err());
        assert!("weird".parse::<Suite>().is_err());
        assert!("classical".parse::<Suite>().is_ok());
    }

    #[test]
    fn dimension_rules() {
        assert_eq!(by_id("TF9", Some(10)).unwrap().dim(), 10);
        assert_eq!(by_id("TF9", None).unwrap().dim(), DEFAULT_SCALABLE_DIM);
        assert!(by_id("TF16", Some(3)).is_err());
        assert_eq!(by_id("TF16", Some(2)).unwrap().dim(), 2);
        assert!(by_id("CEC01", Some(10)).is_err());
    }

    #[test]
    fn evaluate_rejects_bad_input() {
        let f = by_id("TF1", Some(3)).unwrap();
        assert!(matches!(
            f.evaluate(&[0.0, 0.0]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            f.evaluate(&[0.0, 0.0, 101.0]),
            Err(Error::OutOfBounds { .. })
        ));
    }

    #[test]
    fn evaluation_is_pure() {
        let mut rng = RngStream::new(33);
        for f in suite(Suite::Classical) {
            let x = f.space().sample_position(&mut rng);
            let a = f.evaluate(&x).unwrap();
            let b = f.evaluate(&x).unwrap();
            assert_eq!(a.to_bits(), b.to_bits(), "{} not pure", f.id());
        }
    }

    #[test]
    fn unimodal_functions_never_beat_their_minimum() {
        // spot sample here; the acceptance suite runs the full million
        let mut rng = RngStream::new(17);
        for f in suite(Suite::Classical)
            .into_iter()
            .filter(|f| f.group() == Group::Unimodal)
        {
            let min = f.known_min().unwrap();
            for _ in 0..2000 {
                let x = f.space().sample_position(&mut rng);
                assert!(f.evaluate(&x).unwrap() >= min);
            }
        }
    }

    #[test]
    fn transform_loading_and_application() {
        use std::io::Write;
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cec04_shift.csv");
        // 10-d identity rotation with a shift of 1.5 in the first coordinate
        let mut file = std::fs::File::create(&path).unwrap();
        writeln!(file, "10,4").unwrap();
        let mut shift = vec!["0.0".to_string(); 10];
        shift[0] = "1.5".to_string();
        writeln!(file, "{}", shift.join(",")).unwrap();
        for i in 0..10 {
            let row: Vec<String> = (0..10)
                .map(|j| if i == j { "1.0".into() } else { "0.0".into() })
                .collect();
            writeln!(file, "{}", row.join(",")).unwrap();
        }
        drop(file);

        let mut f = by_id("CEC04", None).unwrap();
        f.load_transform(&path).unwrap();
        // minimum moved to the shift point
        let mut at = vec![0.0; 10];
        at[0] = 1.5;
        let v = f.evaluate(&at).unwrap();
        assert!((v - 1.0).abs() < 1e-12, "shifted optimum value {v}");
        assert!(f.evaluate(&vec![0.0; 10]).unwrap() > v);
        assert!(f.optimum().is_none());

        // malformed files are rejected
        let bad = dir.path().join("bad.csv");
        std::fs::write(&bad, "9,4\n0,0\n").unwrap();
        let mut g = by_id("CEC04", None).unwrap();
        assert!(g.load_transform(&bad).is_err());
    }

    #[test]
    fn quartic_and_step_shapes() {
        let f6 = by_id("TF6", Some(2)).unwrap();
        assert_eq!(f6.evaluate(&[0.4, -0.4]).unwrap(), 0.0);
        assert_eq!(f6.evaluate(&[1.6, 0.0]).unwrap(), 4.0);
        let f7 = by_id("TF7", Some(3)).unwrap();
        // 1*0.5^4 + 2*0.5^4 + 3*0.5^4 = 6 * 0.0625
        assert!((f7.evaluate(&[0.5, 0.5, 0.5]).unwrap() - 0.375).abs() < 1e-15);
    }
}
