//! Synthetic datasets: circles, chained circles, half moons and sampled functions.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::alm::{Dataset, Sample};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionKind {
    /// `sin(x)`, x in [0, 2π].
    Sine,
    /// `x`, x in [0, 1].
    Linear,
    /// `x²`, x in [-1, 1].
    Quadratic,
    /// Two inputs in [1, 5]: `(1 + x1⁻² + x2⁻¹·⁵)²`.
    Sugeno,
}

impl FunctionKind {
    pub fn input_dim(self) -> usize {
        match self {
            FunctionKind::Sugeno => 2,
            _ => 1,
        }
    }

    fn domain(self) -> (f64, f64) {
        match self {
            FunctionKind::Sine => (0.0, 2.0 * PI),
            FunctionKind::Linear => (0.0, 1.0),
            FunctionKind::Quadratic => (-1.0, 1.0),
            FunctionKind::Sugeno => (1.0, 5.0),
        }
    }

    pub fn eval(self, x: &[f64]) -> f64 {
        match self {
            FunctionKind::Sine => x[0].sin(),
            FunctionKind::Linear => x[0],
            FunctionKind::Quadratic => x[0] * x[0],
            FunctionKind::Sugeno => (1.0 + x[0].powi(-2) + x[1].powf(-1.5)).powi(2),
        }
    }
}

impl FromStr for FunctionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sine" | "sin" => Ok(FunctionKind::Sine),
            "linear" => Ok(FunctionKind::Linear),
            "quadratic" => Ok(FunctionKind::Quadratic),
            "sugeno" => Ok(FunctionKind::Sugeno),
            other => Err(Error::InvalidArgument(format!(
                "unknown function {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Shape {
    /// Circle of the given radius centered at the origin.
    Circle {
        radius: f64,
    },
    /// Four unit circles with centers 2 apart on the x axis, plus an upper half circle
    /// above them.
    Chained,
    /// Two interleaved half circles.
    HalfMoons,
    Function(FunctionKind),
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Circle { .. } => f.write_str("circle"),
            Shape::Chained => f.write_str("chained"),
            Shape::HalfMoons => f.write_str("halfmoon-set"),
            Shape::Function(_) => f.write_str("function"),
        }
    }
}

/// Centers and radii of the chained figure: four attached unit circles and the half circle.
const CHAIN_CENTERS: [(f64, f64); 4] = [(0.0, 0.0), (2.0, 0.0), (4.0, 0.0), (6.0, 0.0)];
const HALF_CIRCLE_CENTER: (f64, f64) = (3.0, 2.5);

/// Points along a closed or open arc set, parameterized by arc length in `[0, total)`.
fn chained_point(s: f64) -> (f64, f64) {
    let full = 2.0 * PI;
    let idx = (s / full).floor() as usize;
    if idx < CHAIN_CENTERS.len() {
        let (cx, cy) = CHAIN_CENTERS[idx];
        let t = s - idx as f64 * full;
        (cx + t.cos(), cy + t.sin())
    } else {
        let t = s - CHAIN_CENTERS.len() as f64 * full;
        let (cx, cy) = HALF_CIRCLE_CENTER;
        (cx + t.cos(), cy + t.sin())
    }
}

/// `n` points of `shape`, with i.i.d. Gaussian noise of standard deviation `noise` added to
/// every coordinate. Curves are sampled at evenly spaced parameters with a seeded phase;
/// functions at uniformly drawn inputs.
pub fn generate(shape: Shape, n: usize, noise: f64, seed: u64) -> Result<Dataset> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if !(noise >= 0.0 && noise.is_finite()) {
        return Err(Error::InvalidArgument(format!("bad noise level {noise}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = Normal::new(0.0, noise.max(f64::MIN_POSITIVE)).expect("valid sigma");
    let jitter = |rng: &mut ChaCha8Rng| if noise > 0.0 { normal.sample(rng) } else { 0.0 };
    let phase: f64 = rng.random();

    let samples: Vec<Sample> = match shape {
        Shape::Circle { radius } => (0..n)
            .map(|k| {
                let t = 2.0 * PI * (k as f64 + phase) / n as f64;
                let (x, y) = (radius * t.cos(), radius * t.sin());
                Sample {
                    inputs: vec![x + jitter(&mut rng)],
                    output: y + jitter(&mut rng),
                }
            })
            .collect(),
        Shape::Chained => {
            let total = CHAIN_CENTERS.len() as f64 * 2.0 * PI + PI;
            (0..n)
                .map(|k| {
                    let (x, y) = chained_point(total * (k as f64 + phase) / n as f64);
                    Sample {
                        inputs: vec![x + jitter(&mut rng)],
                        output: y + jitter(&mut rng),
                    }
                })
                .collect()
        }
        Shape::HalfMoons => (0..n)
            .map(|k| {
                let upper = k % 2 == 0;
                let m = if upper { n.div_ceil(2) } else { n / 2 };
                let t = PI * ((k / 2) as f64 + phase) / m as f64;
                let (x, y) = if upper {
                    (t.cos(), t.sin())
                } else {
                    (1.0 - t.cos(), 0.5 - t.sin())
                };
                Sample {
                    inputs: vec![x + jitter(&mut rng)],
                    output: y + jitter(&mut rng),
                }
            })
            .collect(),
        Shape::Function(kind) => {
            let (lo, hi) = kind.domain();
            (0..n)
                .map(|_| {
                    let inputs: Vec<f64> = (0..kind.input_dim())
                        .map(|_| rng.random_range(lo..=hi))
                        .collect();
                    let y = kind.eval(&inputs);
                    Sample {
                        inputs,
                        output: y + jitter(&mut rng),
                    }
                })
                .collect()
        }
    };
    let dim = samples[0].inputs.len();
    Dataset::new(dim, samples)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noise_free_circle_is_exact() {
        let ds = generate(Shape::Circle { radius: 2.0 }, 400, 0.0, 9).unwrap();
        assert_eq!(ds.len(), 400);
        for s in ds.samples() {
            let r2 = s.inputs[0].powi(2) + s.output.powi(2);
            assert!((r2 - 4.0).abs() < 1e-9);
        }
    }

    #[test]
    fn functions_are_single_valued() {
        let ds = generate(Shape::Function(FunctionKind::Sine), 100, 0.0, 1).unwrap();
        for s in ds.samples() {
            assert_eq!(s.output, s.inputs[0].sin());
        }
        let ts = generate(Shape::Function(FunctionKind::Sugeno), 10, 0.0, 1).unwrap();
        assert_eq!(ts.input_dim(), 2);
    }

    #[test]
    fn deterministic_under_seed() {
        let a = generate(Shape::Chained, 500, 0.02, 42)
            .unwrap()
            .to_csv_string();
        let b = generate(Shape::Chained, 500, 0.02, 42)
            .unwrap()
            .to_csv_string();
        let c = generate(Shape::Chained, 500, 0.02, 43)
            .unwrap()
            .to_csv_string();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn chained_points_lie_on_the_figure() {
        let ds = generate(Shape::Chained, 900, 0.0, 3).unwrap();
        for s in ds.samples() {
            let (x, y) = (s.inputs[0], s.output);
            let on_circle = CHAIN_CENTERS
                .iter()
                .any(|&(cx, cy)| ((x - cx).powi(2) + (y - cy).powi(2) - 1.0).abs() < 1e-9);
            let (hx, hy) = HALF_CIRCLE_CENTER;
            let on_half =
                y >= hy - 1e-9 && ((x - hx).powi(2) + (y - hy).powi(2) - 1.0).abs() < 1e-9;
            assert!(on_circle || on_half, "({x}, {y})");
        }
    }

    #[test]
    fn bad_arguments() {
        assert!(generate(Shape::HalfMoons, 0, 0.0, 0).is_err());
        assert!(generate(Shape::HalfMoons, 10, -1.0, 0).is_err());
        assert!("cosine".parse::<FunctionKind>().is_err());
    }
}
