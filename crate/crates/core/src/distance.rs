//! Distances between solutions, used to scale attraction.

use crate::error::{Error, Result};
use crate::space::{MixedSolution, SearchSpace};

/// Which distance drives attractiveness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DistanceKind {
    /// Euclidean distance over the whole vector, discrete codes read as reals.
    EuclideanOnly,
    /// `(d_E(continuous) + d_H(discrete)) / D`.
    MixedEuclideanHamming,
    /// Range-normalized Gower dissimilarity.
    Gower,
}

impl DistanceKind {
    pub fn measure(self, space: &SearchSpace, x: &MixedSolution, y: &MixedSolution) -> Result<f64> {
        match self {
            DistanceKind::EuclideanOnly => {
                space.check_shape(x)?;
                space.check_shape(y)?;
                let cont: f64 = x.cont.iter().zip(&y.cont).map(|(a, b)| (b - a) * (b - a)).sum();
                let disc: f64 = x
                    .disc
                    .iter()
                    .zip(&y.disc)
                    .map(|(a, b)| {
                        let d = (b - a) as f64;
                        d * d
                    })
                    .sum();
                Ok((cont + disc).sqrt())
            }
            DistanceKind::MixedEuclideanHamming => mixed_euclidean_hamming(space, x, y),
            DistanceKind::Gower => gower(space, x, y),
        }
    }
}

fn same_len(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::LengthMismatch { expected: a, actual: b });
    }
    Ok(())
}

pub fn euclidean(a: &[f64], b: &[f64]) -> Result<f64> {
    same_len(a.len(), b.len())?;
    Ok(a.iter().zip(b).map(|(x, y)| (y - x) * (y - x)).sum::<f64>().sqrt())
}

/// Number of positions holding different codes.
pub fn hamming(a: &[i64], b: &[i64]) -> Result<usize> {
    same_len(a.len(), b.len())?;
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}

pub fn mixed_euclidean_hamming(space: &SearchSpace, x: &MixedSolution, y: &MixedSolution) -> Result<f64> {
    space.check_shape(x)?;
    space.check_shape(y)?;
    let d_e = euclidean(&x.cont, &y.cont)?;
    let d_h = hamming(&x.disc, &y.disc)? as f64;
    Ok((d_e + d_h) / space.dim() as f64)
}

/// Gower dissimilarity in `[0, 1]`.
///
/// Continuous contributions are scaled by the static bound width of their
/// dimension; discrete contributions are mismatch indicators.
pub fn gower(space: &SearchSpace, x: &MixedSolution, y: &MixedSolution) -> Result<f64> {
    space.check_shape(x)?;
    space.check_shape(y)?;
    let mut total = 0.0;
    for (index, ((b, xi), yi)) in space.continuous().iter().zip(&x.cont).zip(&y.cont).enumerate() {
        let range = b.range();
        if range <= 0.0 {
            return Err(Error::InvalidDimension {
                index,
                reason: "zero range".into(),
            });
        }
        total += (xi - yi).abs() / range;
    }
    total += hamming(&x.disc, &y.disc)? as f64;
    Ok(total / space.dim() as f64)
}
