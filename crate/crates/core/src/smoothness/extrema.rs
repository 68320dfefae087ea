//! Extreme-point counting on grid fields via discrete Hessians.
//!
//! An interior vertex is critical when both central-difference gradient
//! components vanish (within tolerance). A critical vertex is an extremum
//! when its central-difference Hessian is definite; saddles and degenerate
//! points are ignored. Extrema of the same kind that are adjacent in the
//! domain form one plateau and count once.

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::field::ScalarField;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremaConfig {
    /// Gradient tolerance as a fraction of the field's value range.
    pub gradient_tol: f64,
    /// Determinant tolerance as a fraction of the squared value range.
    pub determinant_tol: f64,
}

impl Default for ExtremaConfig {
    fn default() -> Self {
        ExtremaConfig {
            gradient_tol: 1e-9,
            determinant_tol: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumKind {
    Minimum,
    Maximum,
}

/// Hessian `[[xx, xy], [xy, yy]]` from central second differences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hessian2 {
    pub xx: f64,
    pub xy: f64,
    pub yy: f64,
}

impl Hessian2 {
    pub fn determinant(&self) -> f64 {
        self.xx * self.yy - self.xy * self.xy
    }

    pub fn trace(&self) -> f64 {
        self.xx + self.yy
    }
}

struct GridView<'a> {
    values: &'a [f64],
    width: usize,
}

impl GridView<'_> {
    fn at(&self, x: usize, y: usize) -> f64 {
        self.values[y * self.width + x]
    }

    fn gradient(&self, x: usize, y: usize) -> (f64, f64) {
        (
            0.5 * (self.at(x + 1, y) - self.at(x - 1, y)),
            0.5 * (self.at(x, y + 1) - self.at(x, y - 1)),
        )
    }

    fn hessian(&self, x: usize, y: usize) -> Hessian2 {
        let c = self.at(x, y);
        Hessian2 {
            xx: self.at(x + 1, y) - 2.0 * c + self.at(x - 1, y),
            yy: self.at(x, y + 1) - 2.0 * c + self.at(x, y - 1),
            xy: 0.25
                * (self.at(x + 1, y + 1) - self.at(x + 1, y - 1) - self.at(x - 1, y + 1)
                    + self.at(x - 1, y - 1)),
        }
    }
}

fn grid_dims(dom: &Domain, field: &ScalarField) -> Result<(usize, usize)> {
    let (w, h) = dom
        .dims()
        .ok_or_else(|| Error::invalid("extreme points need a grid domain"))?;
    if w < 3 || h < 3 {
        return Err(Error::invalid(format!(
            "extreme points need a grid of at least 3x3, got {w}x{h}"
        )));
    }
    if field.len() != dom.len() {
        return Err(Error::invalid("field does not cover the domain"));
    }
    Ok((w, h))
}

/// Per-vertex extremum classification; border vertices are always `None`.
pub fn classify_extrema(
    field: &ScalarField,
    dom: &Domain,
    cfg: &ExtremaConfig,
) -> Result<Vec<Option<ExtremumKind>>> {
    let (w, h) = grid_dims(dom, field)?;
    let (lo, hi) = field.bounds();
    let range = hi - lo;
    let grad_tol = cfg.gradient_tol * range;
    let det_tol = cfg.determinant_tol * range * range;
    let grid = GridView {
        values: field.values(),
        width: w,
    };

    let mut kinds = vec![None; w * h];
    for y in 1..h - 1 {
        for x in 1..w - 1 {
            let (gx, gy) = grid.gradient(x, y);
            if gx.abs() > grad_tol || gy.abs() > grad_tol {
                continue;
            }
            let hess = grid.hessian(x, y);
            if hess.determinant() <= det_tol {
                continue;
            }
            kinds[y * w + x] = Some(if hess.trace() > 0.0 {
                ExtremumKind::Minimum
            } else {
                ExtremumKind::Maximum
            });
        }
    }
    Ok(kinds)
}

/// Number of extreme points, with same-kind plateaus counted once.
pub fn count_extreme_points(
    field: &ScalarField,
    dom: &Domain,
    cfg: &ExtremaConfig,
) -> Result<usize> {
    grid_dims(dom, field)?;
    let kinds = classify_extrema(field, dom, cfg)?;

    let mut seen = vec![false; kinds.len()];
    let mut stack = Vec::new();
    let mut count = 0;
    for start in 0..kinds.len() {
        let Some(kind) = kinds[start] else { continue };
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(v) = stack.pop() {
            for &u in dom.neighbors(v) {
                if !seen[u] && kinds[u] == Some(kind) {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    Ok(count)
}

/// Extreme-point ratio of a reconstruction built from `sn` samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NaturalSmoothnessKD {
    pub sn: usize,
    pub en: usize,
}

impl NaturalSmoothnessKD {
    /// `(SN - EN) / EN`, or `None` when there are no extreme points at all
    /// (a perfectly smooth reconstruction).
    pub fn ratio(&self) -> Option<f64> {
        (self.en > 0).then(|| (self.sn as f64 - self.en as f64) / self.en as f64)
    }

    /// `(SN - EN) / SN`, normalized like the 1-D ratio.
    pub fn ratio_alt(&self) -> f64 {
        (self.sn as f64 - self.en as f64) / self.sn as f64
    }

    pub fn is_perfectly_smooth(&self) -> bool {
        self.en == 0
    }
}

pub fn natural_smoothness_kd(
    sn: usize,
    field: &ScalarField,
    dom: &Domain,
    cfg: &ExtremaConfig,
) -> Result<NaturalSmoothnessKD> {
    if sn == 0 {
        return Err(Error::invalid("sample count must be positive"));
    }
    let en = count_extreme_points(field, dom, cfg)?;
    Ok(NaturalSmoothnessKD { sn, en })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::Adjacency;

    fn centered(n: usize, f: impl Fn(f64, f64) -> f64) -> (Domain, ScalarField) {
        let dom = Domain::grid(n, n, Adjacency::Four).unwrap();
        let half = (n / 2) as f64;
        let values = (0..n * n)
            .map(|v| f((v % n) as f64 - half, (v / n) as f64 - half))
            .collect();
        let field = ScalarField::new(&dom, values).unwrap();
        (dom, field)
    }

    #[test]
    fn bump_has_one_maximum() {
        let (dom, field) = centered(9, |x, y| (-(x * x + y * y)).exp());
        let kinds = classify_extrema(&field, &dom, &ExtremaConfig::default()).unwrap();
        assert_eq!(kinds[40], Some(ExtremumKind::Maximum));
        assert_eq!(
            count_extreme_points(&field, &dom, &ExtremaConfig::default()).unwrap(),
            1
        );
    }

    #[test]
    fn saddle_and_constant_have_none() {
        let cfg = ExtremaConfig::default();
        let (dom, saddle) = centered(9, |x, y| x * x - y * y);
        assert_eq!(count_extreme_points(&saddle, &dom, &cfg).unwrap(), 0);
        let (dom, flat) = centered(9, |_, _| 3.0);
        assert_eq!(count_extreme_points(&flat, &dom, &cfg).unwrap(), 0);
    }

    #[test]
    fn bowl_is_a_minimum() {
        let (dom, bowl) = centered(7, |x, y| x * x + 2.0 * y * y);
        let kinds = classify_extrema(&bowl, &dom, &ExtremaConfig::default()).unwrap();
        assert_eq!(kinds[24], Some(ExtremumKind::Minimum));
        assert_eq!(kinds.iter().flatten().count(), 1);
    }

    #[test]
    fn plateaus_follow_domain_adjacency() {
        // Checkerboard: every interior vertex is a definite extremum, and
        // same-kind extrema touch only diagonally.
        let n = 7;
        let values: Vec<f64> = (0..n * n)
            .map(|v| if (v % n + v / n) % 2 == 0 { 1.0 } else { -1.0 })
            .collect();
        let cfg = ExtremaConfig::default();

        let g4 = Domain::grid(n, n, Adjacency::Four).unwrap();
        let field = ScalarField::new(&g4, values.clone()).unwrap();
        let kinds = classify_extrema(&field, &g4, &cfg).unwrap();
        assert_eq!(kinds.iter().flatten().count(), 25);
        assert_eq!(count_extreme_points(&field, &g4, &cfg).unwrap(), 25);

        let g8 = Domain::grid(n, n, Adjacency::Eight).unwrap();
        let field = ScalarField::new(&g8, values).unwrap();
        assert_eq!(count_extreme_points(&field, &g8, &cfg).unwrap(), 2);
    }

    #[test]
    fn rejects_small_or_non_grid() {
        let dom = Domain::grid(2, 5, Adjacency::Four).unwrap();
        let field = ScalarField::new(&dom, vec![0.0; 10]).unwrap();
        assert!(count_extreme_points(&field, &dom, &ExtremaConfig::default()).is_err());
        let p = Domain::path(9).unwrap();
        let field = ScalarField::new(&p, vec![0.0; 9]).unwrap();
        assert!(count_extreme_points(&field, &p, &ExtremaConfig::default()).is_err());
    }

    #[test]
    fn kd_ratio() {
        let r = NaturalSmoothnessKD { sn: 25, en: 1 };
        assert_eq!(r.ratio(), Some(24.0));
        assert_eq!(r.ratio_alt(), 0.96);
        let r = NaturalSmoothnessKD { sn: 25, en: 0 };
        assert_eq!(r.ratio(), None);
        assert!(r.is_perfectly_smooth());
        let r = NaturalSmoothnessKD { sn: 4, en: 4 };
        assert_eq!(r.ratio(), Some(0.0));

        let (dom, bump) = centered(9, |x, y| (-(x * x + y * y)).exp());
        let kd = natural_smoothness_kd(25, &bump, &dom, &ExtremaConfig::default()).unwrap();
        assert_eq!(kd.ratio(), Some(24.0));
        assert!(natural_smoothness_kd(0, &bump, &dom, &ExtremaConfig::default()).is_err());
    }
}
