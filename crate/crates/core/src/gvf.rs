//! Gradually varied fill.
//!
//! A level-indexed function is gradually varied when the indices at the two
//! ends of every edge differ by at most one. Samples `i_p` at vertices `p`
//! admit a gradually varied extension exactly when
//! `d(p, q) >= |i_p - i_q|` for every pair of samples.
//!
//! The fill is built from two distance envelopes,
//!
//! ```text
//! lower(v) = max(1, max_p (i_p - d(v, p)))
//! upper(v) = min(n, min_p (i_p + d(v, p)))
//! ```
//!
//! both of which change by at most one across an edge and agree with the
//! samples whenever the feasibility condition holds. Every gradually varied
//! extension lies between them.

use std::fmt;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::field::{LevelField, LevelSamples, LevelSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GvfStrategy {
    /// The lower envelope: smallest gradually varied extension.
    InfEnvelope,
    /// The upper envelope: largest gradually varied extension.
    SupEnvelope,
    /// `floor((lower + upper) / 2)`.
    #[default]
    MidEnvelope,
}

/// A sample pair closer together than their level gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub x: usize,
    pub y: usize,
    pub i: usize,
    pub j: usize,
    pub distance: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{}): d={} < |{}-{}|={}",
            self.x,
            self.y,
            self.distance,
            self.i,
            self.j,
            self.i.abs_diff(self.j)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub violation: Option<Violation>,
}

impl FeasibilityVerdict {
    pub fn is_feasible(&self) -> bool {
        self.violation.is_none()
    }
}

fn check_sample_levels(samples: &LevelSamples, levels: &LevelSequence) -> Result<()> {
    samples.iter().try_for_each(|s| levels.check_index(s.value))
}

fn sample_distances(samples: &LevelSamples, dom: &Domain) -> Result<Vec<Vec<usize>>> {
    samples
        .iter()
        .map(|s| dom.distances_from(s.vertex))
        .collect()
}

/// Checks the pairwise condition `d(x, y) >= |i - j|` over the samples and
/// returns the first violating pair, in sample order, if any.
pub fn gvf_feasible(
    samples: &LevelSamples,
    dom: &Domain,
    levels: &LevelSequence,
) -> Result<FeasibilityVerdict> {
    check_sample_levels(samples, levels)?;
    let dist = sample_distances(samples, dom)?;
    Ok(find_violation(samples, &dist))
}

fn find_violation(samples: &LevelSamples, dist: &[Vec<usize>]) -> FeasibilityVerdict {
    let entries: Vec<_> = samples.iter().collect();
    for (a, p) in entries.iter().enumerate() {
        for q in &entries[a + 1..] {
            let d = dist[a][q.vertex];
            if d < p.value.abs_diff(q.value) {
                return FeasibilityVerdict {
                    violation: Some(Violation {
                        x: p.vertex,
                        y: q.vertex,
                        i: p.value,
                        j: q.value,
                        distance: d,
                    }),
                };
            }
        }
    }
    FeasibilityVerdict { violation: None }
}

/// Lower and upper distance envelopes of a sample set, clamped to `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Envelopes {
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
}

impl Envelopes {
    pub fn compute(samples: &LevelSamples, dom: &Domain, levels: &LevelSequence) -> Result<Self> {
        check_sample_levels(samples, levels)?;
        let dist = sample_distances(samples, dom)?;
        Ok(Self::from_distances(
            samples,
            &dist,
            dom.len(),
            levels.len(),
        ))
    }

    fn from_distances(
        samples: &LevelSamples,
        dist: &[Vec<usize>],
        vertices: usize,
        n_levels: usize,
    ) -> Self {
        let n = n_levels as i64;
        let mut lower = vec![1i64; vertices];
        let mut upper = vec![n; vertices];
        for (s, row) in samples.iter().zip(dist) {
            let level = s.value as i64;
            for v in 0..vertices {
                let d = row[v] as i64;
                lower[v] = lower[v].max(level - d);
                upper[v] = upper[v].min(level + d);
            }
        }
        Envelopes {
            lower: lower.into_iter().map(|x| x as usize).collect(),
            upper: upper.into_iter().map(|x| x as usize).collect(),
        }
    }

    fn select(&self, strategy: GvfStrategy) -> Vec<usize> {
        match strategy {
            GvfStrategy::InfEnvelope => self.lower.clone(),
            GvfStrategy::SupEnvelope => self.upper.clone(),
            GvfStrategy::MidEnvelope => self
                .lower
                .iter()
                .zip(&self.upper)
                .map(|(&lo, &hi)| (lo + hi) / 2)
                .collect(),
        }
    }
}

/// Builds a gradually varied extension of level-indexed samples.
///
/// Fails with [`Error::Infeasible`] carrying the violating pair when no
/// extension exists.
pub fn gvf_fill(
    samples: &LevelSamples,
    dom: &Domain,
    levels: &LevelSequence,
    strategy: GvfStrategy,
) -> Result<LevelField> {
    check_sample_levels(samples, levels)?;
    let dist = sample_distances(samples, dom)?;
    if let Some(v) = find_violation(samples, &dist).violation {
        return Err(Error::Infeasible(v));
    }
    let env = Envelopes::from_distances(samples, &dist, dom.len(), levels.len());
    Ok(LevelField::from_vec(env.select(strategy)))
}

/// First edge `(a, b)` whose level indices differ by more than one.
pub fn find_gradual_violation(
    field: &LevelField,
    dom: &Domain,
    levels: &LevelSequence,
) -> Result<Option<(usize, usize)>> {
    if field.indices().len() != dom.len() {
        return Err(Error::invalid("field does not cover the domain"));
    }
    field
        .indices()
        .iter()
        .try_for_each(|&i| levels.check_index(i))?;
    Ok(dom
        .edges()
        .find(|&(a, b)| field.get(a).abs_diff(field.get(b)) > 1))
}

pub fn is_gradually_varied(
    field: &LevelField,
    dom: &Domain,
    levels: &LevelSequence,
) -> Result<bool> {
    find_gradual_violation(field, dom, levels).map(|v| v.is_none())
}
