use crate::error::{Error, Result};

/// Tolerance for the "weights sum to 1" check.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// A neutral-degree distribution: `weights[d]` is the fraction of solutions
/// whose neutral degree is `d`, for `d` in `0..=N`.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeDistribution {
    weights: Vec<f64>,
}

impl DegreeDistribution {
    /// Wraps a weight vector after checking every entry is finite and >= 0.
    ///
    /// Normalization is not required here; operations that need it
    /// (statistics, generation targets, convolution) check separately.
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::invalid("degree distribution cannot be empty"));
        }
        for (degree, &weight) in weights.iter().enumerate() {
            if !weight.is_finite() || weight < 0.0 {
                return Err(Error::BadWeight { degree, weight });
            }
        }
        Ok(DegreeDistribution { weights })
    }

    /// Point mass on `degree`, over degrees `0..=max_degree`.
    pub fn delta(degree: usize, max_degree: usize) -> Self {
        assert!(degree <= max_degree, "delta degree out of range");
        let mut weights = vec![0.0; max_degree + 1];
        weights[degree] = 1.0;
        DegreeDistribution { weights }
    }

    /// Normalizes a histogram of degree counts.
    pub fn from_counts(counts: &[u64]) -> Self {
        let total: u64 = counts.iter().sum();
        assert!(total > 0, "empty histogram");
        let weights = counts.iter().map(|&c| c as f64 / total as f64).collect();
        DegreeDistribution { weights }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest representable degree, `len() - 1`.
    pub fn max_degree(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn sum(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn is_normalized(&self) -> bool {
        (self.sum() - 1.0).abs() <= NORMALIZATION_TOLERANCE
    }

    pub(crate) fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::Unnormalized { sum: self.sum() })
        }
    }

    /// Mean and standard deviation of the degree, `(Σ d·w[d], √(Σ d²·w[d] − mean²))`.
    ///
    /// Requires a normalized distribution.
    pub fn stats(&self) -> Result<(f64, f64)> {
        self.require_normalized()?;
        let mut mean = 0.0;
        let mut second = 0.0;
        for (d, &w) in self.weights.iter().enumerate() {
            mean += d as f64 * w;
            second += (d * d) as f64 * w;
        }
        let var = (second - mean * mean).max(0.0);
        Ok((mean, var.sqrt()))
    }

    /// Euclidean norm of the pointwise difference, `√(Σ (a[d] − b[d])²)`.
    ///
    /// Zero iff the two distributions are identical; errors when the lengths
    /// differ, which signals incompatible bit widths.
    pub fn rms_distance(&self, other: &Self) -> Result<f64> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let sq: f64 = self
            .weights
            .iter()
            .zip(&other.weights)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        Ok(sq.sqrt())
    }
}
