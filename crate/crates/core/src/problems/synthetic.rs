//! Shifted canonical benchmark functions on a half-continuous,
//! half-integer domain.

use std::f64::consts::{E, PI};

use rand::Rng;

use crate::rng::seeded;

/// Optimum of the Schwefel function along each axis.
const SCHWEFEL_OPT: f64 = 420.968_746_227_503_4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SyntheticFamily {
    Sphere,
    Elliptic,
    Rosenbrock,
    Rastrigin,
    Ackley,
    Griewank,
    Schwefel,
}

impl SyntheticFamily {
    pub const ALL: [SyntheticFamily; 7] = [
        SyntheticFamily::Sphere,
        SyntheticFamily::Elliptic,
        SyntheticFamily::Rosenbrock,
        SyntheticFamily::Rastrigin,
        SyntheticFamily::Ackley,
        SyntheticFamily::Griewank,
        SyntheticFamily::Schwefel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SyntheticFamily::Sphere => "sphere",
            SyntheticFamily::Elliptic => "elliptic",
            SyntheticFamily::Rosenbrock => "rosenbrock",
            SyntheticFamily::Rastrigin => "rastrigin",
            SyntheticFamily::Ackley => "ackley",
            SyntheticFamily::Griewank => "griewank",
            SyntheticFamily::Schwefel => "schwefel",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Conventional search domain, identical on every axis.
    pub fn bounds(self) -> (f64, f64) {
        match self {
            SyntheticFamily::Sphere | SyntheticFamily::Elliptic => (-100.0, 100.0),
            SyntheticFamily::Rosenbrock => (-30.0, 30.0),
            SyntheticFamily::Rastrigin => (-5.12, 5.12),
            SyntheticFamily::Ackley => (-32.0, 32.0),
            SyntheticFamily::Griewank => (-600.0, 600.0),
            SyntheticFamily::Schwefel => (-500.0, 500.0),
        }
    }

    /// Offset added to `x − o` so that the minimum sits at `x = o`.
    fn offset(self) -> f64 {
        match self {
            SyntheticFamily::Rosenbrock => 1.0,
            SyntheticFamily::Schwefel => SCHWEFEL_OPT,
            _ => 0.0,
        }
    }

    fn shift_seed(self) -> u64 {
        0x5EED_0000 + self as u64
    }

    /// Seed-fixed optimum location: uniform over 80% of the domain, the
    /// integer half rounded.
    pub fn shift(self, dim: usize) -> Vec<f64> {
        let (lo, hi) = self.bounds();
        let mut rng = seeded(self.shift_seed());
        let n_cont = dim / 2;
        (0..dim)
            .map(|i| {
                let v = rng.gen_range(0.8 * lo..=0.8 * hi);
                if i < n_cont {
                    v
                } else {
                    v.round()
                }
            })
            .collect()
    }

    /// Evaluates the function at `x` with optimum `o`.
    pub fn evaluate(self, x: &[f64], o: &[f64]) -> f64 {
        let off = self.offset();
        let z: Vec<f64> = x.iter().zip(o).map(|(a, b)| a - b + off).collect();
        self.canonical(&z)
    }

    /// The unshifted formula.
    pub fn canonical(self, z: &[f64]) -> f64 {
        let d = z.len() as f64;
        match self {
            SyntheticFamily::Sphere => z.iter().map(|v| v * v).sum(),
            SyntheticFamily::Elliptic => {
                let denom = (z.len().max(2) - 1) as f64;
                z.iter()
                    .enumerate()
                    .map(|(i, v)| 1e6f64.powf(i as f64 / denom) * v * v)
                    .sum()
            }
            SyntheticFamily::Rosenbrock => z
                .windows(2)
                .map(|w| 100.0 * (w[0] * w[0] - w[1]).powi(2) + (w[0] - 1.0).powi(2))
                .sum(),
            SyntheticFamily::Rastrigin => z
                .iter()
                .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
                .sum(),
            SyntheticFamily::Ackley => {
                let sq = z.iter().map(|v| v * v).sum::<f64>() / d;
                let cs = z.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / d;
                -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
            }
            SyntheticFamily::Griewank => {
                let sum = z.iter().map(|v| v * v).sum::<f64>() / 4000.0;
                let prod: f64 = z
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
                    .product();
                sum - prod + 1.0
            }
            SyntheticFamily::Schwefel => {
                418.982_887_272_433_9 * d - z.iter().map(|&v| schwefel_term(v, d)).sum::<f64>()
            }
        }
    }
}

/// Per-axis Schwefel term, reflected with a quadratic penalty outside
/// `[−500, 500]`.
fn schwefel_term(z: f64, d: f64) -> f64 {
    if z > 500.0 {
        let m = 500.0 - z.rem_euclid(500.0);
        m * m.abs().sqrt().sin() - (z - 500.0).powi(2) / (10_000.0 * d)
    } else if z < -500.0 {
        let m = z.abs().rem_euclid(500.0) - 500.0;
        m * m.abs().sqrt().sin() - (z + 500.0).powi(2) / (10_000.0 * d)
    } else {
        z * z.abs().sqrt().sin()
    }
}
