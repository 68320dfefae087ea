use crate::error::{Error, Result};

/// Sign-change ratio of a sampled 1-D function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NaturalSmoothness1D {
    pub n_samples: usize,
    pub sign_changes: usize,
    /// `(n_samples - sign_changes) / n_samples`.
    pub ratio: f64,
}

/// Number of sign flips in the first differences of `seq`, skipping zero
/// differences.
pub fn derivative_sign_changes(seq: &[f64]) -> Result<usize> {
    if seq.len() < 2 {
        return Err(Error::invalid(format!(
            "sign changes need at least 2 values, got {}",
            seq.len()
        )));
    }
    let mut changes = 0;
    let mut last_positive: Option<bool> = None;
    for w in seq.windows(2) {
        let diff = w[1] - w[0];
        if diff == 0.0 {
            continue;
        }
        let positive = diff > 0.0;
        if last_positive.is_some_and(|p| p != positive) {
            changes += 1;
        }
        last_positive = Some(positive);
    }
    Ok(changes)
}

pub fn natural_smoothness_1d(seq: &[f64]) -> Result<NaturalSmoothness1D> {
    let sign_changes = derivative_sign_changes(seq)?;
    let n_samples = seq.len();
    Ok(NaturalSmoothness1D {
        n_samples,
        sign_changes,
        ratio: (n_samples - sign_changes) as f64 / n_samples as f64,
    })
}
