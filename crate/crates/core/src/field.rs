//! Sample sets, level sequences and total fields over a [`Domain`].

use std::collections::HashSet;

use crate::domain::Domain;
use crate::error::{Error, Result};

/// Strictly increasing level values `A_1 < A_2 < ... < A_n`.
///
/// Level indices are 1-based throughout the crate.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSequence {
    levels: Vec<f64>,
}

impl LevelSequence {
    pub fn new(levels: Vec<f64>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::invalid("level sequence is empty"));
        }
        if levels.iter().any(|v| !v.is_finite()) {
            return Err(Error::invalid("level values must be finite"));
        }
        if let Some(w) = levels.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::invalid(format!(
                "levels must be strictly increasing ({} >= {})",
                w[0], w[1]
            )));
        }
        Ok(LevelSequence { levels })
    }

    /// `n` evenly spaced levels from `lo` to `hi` inclusive.
    pub fn range(lo: f64, hi: f64, n: usize) -> Result<Self> {
        match n {
            0 => Err(Error::invalid("level range needs n >= 1")),
            1 => Self::new(vec![lo]),
            _ => {
                let step = (hi - lo) / (n - 1) as f64;
                Self::new((0..n).map(|i| lo + step * i as f64).collect())
            }
        }
    }

    /// Unit-spaced levels `1, 2, ..., n`.
    pub fn unit(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| i as f64).collect())
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.levels
    }

    /// Value of the 1-based level `index`.
    pub fn value(&self, index: usize) -> Option<f64> {
        index
            .checked_sub(1)
            .and_then(|i| self.levels.get(i).copied())
    }

    /// 1-based index of the level closest to `value`; ties go to the lower level.
    pub fn nearest_index(&self, value: f64) -> usize {
        let mut best = 0;
        for (i, &a) in self.levels.iter().enumerate() {
            if (a - value).abs() < (self.levels[best] - value).abs() {
                best = i;
            }
        }
        best + 1
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if (1..=self.len()).contains(&index) {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "level index {index} is outside 1..={}",
                self.len()
            )))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample<V> {
    pub vertex: usize,
    pub value: V,
}

/// Guiding points: distinct vertices of one domain with prescribed values.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet<V> {
    entries: Vec<Sample<V>>,
}

/// Real-valued samples, input to the Lipschitz extensions.
pub type RealSamples = SampleSet<f64>;
/// Samples carrying 1-based level indices, input to gradual-variation fill.
pub type LevelSamples = SampleSet<usize>;

impl<V: Copy> SampleSet<V> {
    pub fn new<I>(dom: &Domain, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, V)>,
    {
        let entries: Vec<Sample<V>> = entries
            .into_iter()
            .map(|(vertex, value)| Sample { vertex, value })
            .collect();
        if entries.is_empty() {
            return Err(Error::invalid("sample set is empty"));
        }
        let mut seen = HashSet::with_capacity(entries.len());
        for s in &entries {
            dom.check_vertex(s.vertex)?;
            if !seen.insert(s.vertex) {
                return Err(Error::invalid(format!(
                    "vertex {} is sampled more than once",
                    s.vertex
                )));
            }
        }
        Ok(SampleSet { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Sample<V>> {
        self.entries.iter()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.entries.iter().map(|s| s.vertex).collect()
    }
}

impl RealSamples {
    /// Rejects non-finite values, which no Lipschitz extension can interpolate.
    pub fn check_finite(&self) -> Result<()> {
        match self.entries.iter().find(|s| !s.value.is_finite()) {
            Some(s) => Err(Error::invalid(format!(
                "sample at vertex {} is not finite",
                s.vertex
            ))),
            None => Ok(()),
        }
    }
}

impl<'a, V> IntoIterator for &'a SampleSet<V> {
    type Item = &'a Sample<V>;
    type IntoIter = std::slice::Iter<'a, Sample<V>>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// A real value at every vertex of a domain.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    values: Vec<f64>,
}

impl ScalarField {
    pub fn new(dom: &Domain, values: Vec<f64>) -> Result<Self> {
        if values.len() != dom.len() {
            return Err(Error::invalid(format!(
                "field has {} values but the domain has {} vertices",
                values.len(),
                dom.len()
            )));
        }
        Ok(ScalarField { values })
    }

    pub(crate) fn from_vec(values: Vec<f64>) -> Self {
        ScalarField { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> f64 {
        self.values[v]
    }

    /// `(min, max)` of the values.
    pub fn bounds(&self) -> (f64, f64) {
        value_bounds(&self.values)
    }
}

/// A level index (1-based) at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelField {
    indices: Vec<usize>,
}

impl LevelField {
    pub fn new(dom: &Domain, indices: Vec<usize>) -> Result<Self> {
        if indices.len() != dom.len() {
            return Err(Error::invalid(format!(
                "field has {} indices but the domain has {} vertices",
                indices.len(),
                dom.len()
            )));
        }
        Ok(LevelField { indices })
    }

    pub(crate) fn from_vec(indices: Vec<usize>) -> Self {
        LevelField { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn get(&self, v: usize) -> usize {
        self.indices[v]
    }

    /// Real values through the level lookup `A_i`.
    pub fn to_values(&self, levels: &LevelSequence) -> Result<ScalarField> {
        let values = self
            .indices
            .iter()
            .map(|&i| {
                levels
                    .value(i)
                    .ok_or_else(|| Error::invalid(format!("level index {i} has no value")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ScalarField::from_vec(values))
    }
}

pub(crate) fn value_bounds(values: &[f64]) -> (f64, f64) {
    values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_sequence_validation() {
        assert!(LevelSequence::new(vec![]).is_err());
        assert!(LevelSequence::new(vec![1.0, 1.0]).is_err());
        assert!(LevelSequence::new(vec![2.0, 1.0]).is_err());
        let l = LevelSequence::new(vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(l.value(1), Some(1.0));
        assert_eq!(l.value(3), Some(3.0));
        assert_eq!(l.value(0), None);
        assert_eq!(l.value(4), None);
        assert_eq!(l.nearest_index(2.4), 2);
        assert_eq!(l.nearest_index(-7.0), 1);
    }

    #[test]
    fn level_range() {
        let l = LevelSequence::range(0.0, 1.0, 5).unwrap();
        assert_eq!(l.values(), &[0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(LevelSequence::range(3.0, 3.0, 1).unwrap().values(), &[3.0]);
        assert!(LevelSequence::range(1.0, 1.0, 2).is_err());
    }

    #[test]
    fn sample_set_rules() {
        let d = Domain::path(4).unwrap();
        assert!(SampleSet::<f64>::new(&d, []).is_err());
        assert!(SampleSet::new(&d, [(0, 1.0), (0, 2.0)]).is_err());
        assert!(SampleSet::new(&d, [(4, 1.0)]).is_err());
        let s = SampleSet::new(&d, [(3, 1.0), (0, 2.0)]).unwrap();
        assert_eq!(s.vertices(), vec![3, 0]);
        assert!(SampleSet::new(&d, [(1, f64::NAN)])
            .unwrap()
            .check_finite()
            .is_err());
    }

    #[test]
    fn field_sizes() {
        let d = Domain::path(3).unwrap();
        assert!(ScalarField::new(&d, vec![0.0; 2]).is_err());
        let lf = LevelField::new(&d, vec![1, 2, 2]).unwrap();
        let levels = LevelSequence::new(vec![-1.0, 5.0]).unwrap();
        assert_eq!(lf.to_values(&levels).unwrap().values(), &[-1.0, 5.0, 5.0]);
        assert!(LevelField::new(&d, vec![1, 3, 2])
            .unwrap()
            .to_values(&levels)
            .is_err());
    }
}
