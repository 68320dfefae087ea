//! Iterated differences and their Lipschitz constants.
//!
//! Row `k + 1` of the ladder is the forward difference of row `k`, and
//! `lip[k]` is the Lipschitz constant of row `k` on the integer grid, which
//! equals `max |row[k + 1]|`.

use crate::error::{Error, Result};

pub const DEFAULT_LADDER_DEPTH: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub struct DifferenceLadder {
    /// `rows[0]` is the input; each later row is one element shorter.
    pub rows: Vec<Vec<f64>>,
    /// `lip[k] = max |rows[k + 1]|`.
    pub lip: Vec<f64>,
    /// First `k0` such that `lip` strictly decreases from `k0` to the end.
    pub decrease_onset: Option<usize>,
}

fn forward_difference(row: &[f64]) -> Vec<f64> {
    row.windows(2).map(|w| w[1] - w[0]).collect()
}

fn max_abs(row: &[f64]) -> f64 {
    row.iter().fold(0.0, |m, &v| m.max(v.abs()))
}

/// Differences `seq` until `kmax` constants are computed or a row has a
/// single element.
pub fn difference_ladder(seq: &[f64], kmax: usize) -> Result<DifferenceLadder> {
    if seq.len() < 2 {
        return Err(Error::invalid(format!(
            "difference ladder needs at least 2 values, got {}",
            seq.len()
        )));
    }
    if kmax == 0 {
        return Err(Error::invalid("ladder depth must be positive"));
    }
    let mut rows = vec![seq.to_vec()];
    let mut lip = Vec::new();
    while lip.len() < kmax && rows.last().map_or(0, Vec::len) > 1 {
        let next = forward_difference(rows.last().expect("ladder has a row"));
        lip.push(max_abs(&next));
        rows.push(next);
    }
    let decrease_onset = decrease_onset(&lip);
    Ok(DifferenceLadder {
        rows,
        lip,
        decrease_onset,
    })
}

fn decrease_onset(lip: &[f64]) -> Option<usize> {
    if lip.len() < 2 {
        return None;
    }
    let mut k0 = lip.len() - 1;
    while k0 > 0 && lip[k0 - 1] > lip[k0] {
        k0 -= 1;
    }
    (k0 < lip.len() - 1).then_some(k0)
}

/// Largest difference quotient `|f(x) - f(y)| / |x - y|` over all index pairs.
pub fn lip_pairwise(seq: &[f64]) -> Result<f64> {
    if seq.len() < 2 {
        return Err(Error::invalid(format!(
            "pairwise Lipschitz constant needs at least 2 values, got {}",
            seq.len()
        )));
    }
    let mut best = 0.0f64;
    for x in 0..seq.len() {
        for y in x + 1..seq.len() {
            best = best.max((seq[y] - seq[x]).abs() / (y - x) as f64);
        }
    }
    Ok(best)
}

/// Ladder-based discrete smoothness class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmoothnessClass {
    /// `lip[k] = 0` for every computed `k > K`.
    Absolute(usize),
    /// `lip[k] < c2 / 2^(k - c1)` for every computed `k > K`.
    Almost(usize),
    /// The bound holds for every `k <= K` but fails later.
    KOrder(usize),
    Unclassified,
}

impl SmoothnessClass {
    pub fn name(&self) -> &'static str {
        match self {
            SmoothnessClass::Absolute(_) => "absolute",
            SmoothnessClass::Almost(_) => "almost",
            SmoothnessClass::KOrder(_) => "k_order",
            SmoothnessClass::Unclassified => "unclassified",
        }
    }

    pub fn order(&self) -> Option<usize> {
        match *self {
            SmoothnessClass::Absolute(k)
            | SmoothnessClass::Almost(k)
            | SmoothnessClass::KOrder(k) => Some(k),
            SmoothnessClass::Unclassified => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub class: SmoothnessClass,
    pub c1: f64,
    pub c2: f64,
}

/// `c1 = 0`, `c2 = max(lip[0], 1)`.
pub fn default_constants(ladder: &DifferenceLadder) -> (f64, f64) {
    (0.0, ladder.lip.first().copied().unwrap_or(0.0).max(1.0))
}

/// Classifies a ladder with at least two computed constants.
///
/// `K` ranges over `0..lip.len() - 1` for the absolute and almost classes so
/// that at least one constant lies beyond `K`.
pub fn classify_discrete_smoothness(
    ladder: &DifferenceLadder,
    c1: f64,
    c2: f64,
) -> Result<Classification> {
    let class = classify_lip(&ladder.lip, c1, c2)?;
    Ok(Classification { class, c1, c2 })
}

pub(crate) fn classify_lip(lip: &[f64], c1: f64, c2: f64) -> Result<SmoothnessClass> {
    if !(c2.is_finite() && c2 > 0.0) {
        return Err(Error::invalid(format!("c2 must be positive, got {c2}")));
    }
    if !c1.is_finite() {
        return Err(Error::invalid(format!("c1 must be finite, got {c1}")));
    }
    if lip.len() < 2 {
        return Err(Error::invalid(format!(
            "classification needs a ladder of depth >= 2, got {}",
            lip.len()
        )));
    }
    let last = lip.len() - 1;

    // Smallest K with every later entry zero.
    let zero_tail = lip.iter().rposition(|&l| l != 0.0).map_or(0, |p| p + 1);
    if zero_tail <= last {
        return Ok(SmoothnessClass::Absolute(zero_tail.saturating_sub(1)));
    }

    let within = |k: usize| lip[k] < c2 / 2f64.powf(k as f64 - c1);
    let bound_tail = (0..lip.len())
        .rposition(|k| !within(k))
        .map_or(0, |p| p + 1);
    if bound_tail <= last {
        return Ok(SmoothnessClass::Almost(bound_tail.saturating_sub(1)));
    }

    match (0..lip.len()).position(|k| !within(k)) {
        Some(0) => Ok(SmoothnessClass::Unclassified),
        Some(first_fail) => Ok(SmoothnessClass::KOrder(first_fail - 1)),
        None => unreachable!("bound holding everywhere is the almost class"),
    }
}
