//! Polishing: drive the centered second-difference residual below epsilon.
//!
//! Free (non-guiding) interior points are relaxed toward the average of their
//! neighbors in ascending index order (Gauss-Seidel), in place, until every
//! checked residual is at most `epsilon`. Guiding points and the domain
//! boundary never move. If nothing can move, the residual check covers every
//! interior stencil instead, so a fully pinned input converges only when it
//! already satisfies the bound.

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::field::{value_bounds, ScalarField};

pub const DEFAULT_MAX_ITERS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolishConfig {
    pub epsilon: f64,
    pub max_iters: usize,
    /// Fraction of the step toward the neighbor average, in `(0, 1]`.
    pub relaxation: f64,
}

impl PolishConfig {
    pub fn new(epsilon: f64, max_iters: usize, relaxation: f64) -> Result<Self> {
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(Error::invalid(format!(
                "epsilon must be positive, got {epsilon}"
            )));
        }
        if max_iters == 0 {
            return Err(Error::invalid("max_iters must be positive"));
        }
        if !(relaxation > 0.0 && relaxation <= 1.0) {
            return Err(Error::invalid(format!(
                "relaxation must lie in (0, 1], got {relaxation}"
            )));
        }
        Ok(PolishConfig {
            epsilon,
            max_iters,
            relaxation,
        })
    }

    /// `epsilon = 1e-6 * range(values)` (or `1e-6` for a constant input),
    /// full relaxation, 10,000 sweeps.
    pub fn for_values(values: &[f64]) -> Self {
        let (lo, hi) = value_bounds(values);
        let range = hi - lo;
        let epsilon = if range.is_finite() && range > 0.0 {
            1e-6 * range
        } else {
            1e-6
        };
        PolishConfig {
            epsilon,
            max_iters: DEFAULT_MAX_ITERS,
            relaxation: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolishOutcome {
    pub values: Vec<f64>,
    pub converged: bool,
    /// Number of sweeps performed.
    pub iterations: usize,
    /// Largest checked residual in the returned values.
    pub max_residual: f64,
}

/// `|2 seq[i+1] - seq[i] - seq[i+2]|`.
pub fn second_difference_residual(seq: &[f64], i: usize) -> Result<f64> {
    if i + 2 >= seq.len() {
        return Err(Error::invalid(format!(
            "index {i} has no full stencil in a sequence of length {}",
            seq.len()
        )));
    }
    Ok((2.0 * seq[i + 1] - seq[i] - seq[i + 2]).abs())
}

/// Difference of consecutive divided slopes on `xs[i..=i+2]`.
pub fn general_slope_residual(seq: &[f64], xs: &[f64], i: usize) -> Result<f64> {
    if xs.len() != seq.len() {
        return Err(Error::invalid("coordinates and values differ in length"));
    }
    if xs
        .windows(2)
        .any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less))
    {
        return Err(Error::invalid("coordinates must be strictly increasing"));
    }
    if i + 2 >= seq.len() {
        return Err(Error::invalid(format!(
            "index {i} has no full stencil in a sequence of length {}",
            seq.len()
        )));
    }
    let left = (seq[i + 1] - seq[i]) / (xs[i + 1] - xs[i]);
    let right = (seq[i + 2] - seq[i + 1]) / (xs[i + 2] - xs[i + 1]);
    Ok((left - right).abs())
}

/// Moves `current` toward `target`, staying between the two.
fn relax(current: f64, target: f64, relaxation: f64) -> f64 {
    if relaxation == 1.0 {
        return target;
    }
    let next = current + relaxation * (target - current);
    next.clamp(current.min(target), current.max(target))
}

pub fn polish_1d(seq: &[f64], guiding: &[bool], cfg: &PolishConfig) -> Result<PolishOutcome> {
    if guiding.len() != seq.len() {
        return Err(Error::invalid(format!(
            "guiding mask has {} entries for {} values",
            guiding.len(),
            seq.len()
        )));
    }
    let n = seq.len();
    let interior = 1..n.saturating_sub(1);
    let free: Vec<usize> = interior.clone().filter(|&j| !guiding[j]).collect();
    let checked: Vec<usize> = if free.is_empty() {
        interior.collect()
    } else {
        free.clone()
    };
    let residual = |s: &[f64], j: usize| (2.0 * s[j] - s[j - 1] - s[j + 1]).abs();
    let max_residual = |s: &[f64]| checked.iter().fold(0.0f64, |m, &j| m.max(residual(s, j)));

    let mut values = seq.to_vec();
    let mut iterations = 0;
    loop {
        let worst = max_residual(&values);
        if worst <= cfg.epsilon || free.is_empty() || iterations == cfg.max_iters {
            return Ok(PolishOutcome {
                converged: worst <= cfg.epsilon,
                values,
                iterations,
                max_residual: worst,
            });
        }
        for &j in &free {
            if residual(&values, j) > cfg.epsilon {
                let target = 0.5 * (values[j - 1] + values[j + 1]);
                values[j] = relax(values[j], target, cfg.relaxation);
            }
        }
        iterations += 1;
    }
}

/// Polishes a grid field, enforcing the 1-D residual along rows and columns.
pub fn polish_grid(
    field: &ScalarField,
    dom: &Domain,
    guiding: &[bool],
    cfg: &PolishConfig,
) -> Result<PolishOutcome> {
    let (w, h) = dom
        .dims()
        .ok_or_else(|| Error::invalid("grid polishing needs a grid domain"))?;
    if w < 3 || h < 3 {
        return Err(Error::invalid(format!(
            "grid polishing needs at least 3x3, got {w}x{h}"
        )));
    }
    if field.len() != dom.len() || guiding.len() != dom.len() {
        return Err(Error::invalid(
            "field or guiding mask does not cover the domain",
        ));
    }

    let interior: Vec<usize> = (1..h - 1)
        .flat_map(|y| (1..w - 1).map(move |x| y * w + x))
        .collect();
    let free: Vec<usize> = interior.iter().copied().filter(|&v| !guiding[v]).collect();
    let checked = if free.is_empty() { &interior } else { &free };

    let residual = |s: &[f64], v: usize| {
        let row = (2.0 * s[v] - s[v - 1] - s[v + 1]).abs();
        let col = (2.0 * s[v] - s[v - w] - s[v + w]).abs();
        row.max(col)
    };
    let max_residual = |s: &[f64]| checked.iter().fold(0.0f64, |m, &v| m.max(residual(s, v)));

    let mut values = field.values().to_vec();
    let mut iterations = 0;
    loop {
        let worst = max_residual(&values);
        if worst <= cfg.epsilon || free.is_empty() || iterations == cfg.max_iters {
            return Ok(PolishOutcome {
                converged: worst <= cfg.epsilon,
                values,
                iterations,
                max_residual: worst,
            });
        }
        for &v in &free {
            if residual(&values, v) > cfg.epsilon {
                let target =
                    0.25 * ((values[v - 1] + values[v + 1]) + (values[v - w] + values[v + w]));
                values[v] = relax(values[v], target, cfg.relaxation);
            }
        }
        iterations += 1;
    }
}
