//! McShane-Whitney-Kirszbraun extensions of sampled values.
//!
//! Given samples `f` on `J` and a constant `L` at least as large as the
//! tight Lipschitz constant of `f`, the lower extension
//! `max_a { f(a) - L d(a, x) }` is the pointwise smallest `L`-Lipschitz
//! function agreeing with `f` on `J`, and the upper extension
//! `min_a { f(a) + L d(a, x) }` is the largest. The mid extension is their
//! average and is again `L`-Lipschitz.

use crate::domain::{Domain, DomainKind};
use crate::error::{Error, Result};
use crate::field::{RealSamples, ScalarField};

/// Metric used to measure distances between vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Metric {
    /// Hop count along the domain's edges.
    #[default]
    Geodesic,
    /// Straight-line distance between vertex coordinates. Only paths and grids
    /// have coordinates.
    Euclidean,
}

/// Which of the three extensions to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionKind {
    Inf,
    Sup,
    Mid,
}

/// Tight Lipschitz constant of a sample set with a pair attaining it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LipschitzEstimate {
    pub lip: f64,
    /// Vertices of the attaining pair; `None` when fewer than two samples exist.
    pub witness: Option<(usize, usize)>,
}

/// Distances from every sample to every vertex, one row per sample.
struct SampleDistances {
    rows: Vec<Vec<f64>>,
}

impl SampleDistances {
    fn compute(samples: &RealSamples, dom: &Domain, metric: Metric) -> Result<Self> {
        let rows = match metric {
            Metric::Geodesic => samples
                .iter()
                .map(|s| {
                    dom.distances_from(s.vertex)
                        .map(|d| d.into_iter().map(|h| h as f64).collect())
                })
                .collect::<Result<Vec<_>>>()?,
            Metric::Euclidean => {
                if dom.kind() == DomainKind::Graph {
                    return Err(Error::invalid(
                        "euclidean metric needs vertex coordinates (path or grid domain)",
                    ));
                }
                let coords: Vec<(f64, f64)> = (0..dom.len())
                    .map(|v| {
                        dom.coords(v)
                            .expect("path and grid vertices have coordinates")
                    })
                    .collect();
                samples
                    .iter()
                    .map(|s| {
                        let (sx, sy) = coords[s.vertex];
                        coords
                            .iter()
                            .map(|&(x, y)| (x - sx).hypot(y - sy))
                            .collect()
                    })
                    .collect()
            }
        };
        Ok(SampleDistances { rows })
    }
}

/// Smallest `L` with `|f(x) - f(y)| <= L d(x, y)` over all sample pairs.
pub fn lipschitz_constant(
    samples: &RealSamples,
    dom: &Domain,
    metric: Metric,
) -> Result<LipschitzEstimate> {
    samples.check_finite()?;
    let dist = SampleDistances::compute(samples, dom, metric)?;
    tight_constant(samples, &dist)
}

fn tight_constant(samples: &RealSamples, dist: &SampleDistances) -> Result<LipschitzEstimate> {
    let entries: Vec<_> = samples.iter().collect();
    let mut best = LipschitzEstimate {
        lip: 0.0,
        witness: None,
    };
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            let d = dist.rows[i][b.vertex];
            let diff = (a.value - b.value).abs();
            if d == 0.0 {
                if diff != 0.0 {
                    return Err(Error::InfiniteLipschitz {
                        a: a.vertex,
                        b: b.vertex,
                    });
                }
                continue;
            }
            let ratio = diff / d;
            if best.witness.is_none() || ratio > best.lip {
                best = LipschitzEstimate {
                    lip: ratio,
                    witness: Some((a.vertex, b.vertex)),
                };
            }
        }
    }
    Ok(best)
}

/// Evaluates one extension with constant `lip`.
///
/// Fails with [`Error::InfeasibleLip`] when `lip` is below the tight constant
/// of the samples, since the formulas then stop interpolating.
pub fn extend(
    samples: &RealSamples,
    dom: &Domain,
    lip: f64,
    metric: Metric,
    kind: ExtensionKind,
) -> Result<ScalarField> {
    let all = Extensions::compute(samples, dom, lip, metric)?;
    Ok(match kind {
        ExtensionKind::Inf => all.inf,
        ExtensionKind::Sup => all.sup,
        ExtensionKind::Mid => all.mid,
    })
}

/// Lower (INF) extension `max_a { f(a) - lip d(a, x) }`.
pub fn mwk_inf_extension(
    samples: &RealSamples,
    dom: &Domain,
    lip: f64,
    metric: Metric,
) -> Result<ScalarField> {
    extend(samples, dom, lip, metric, ExtensionKind::Inf)
}

/// Upper (SUP) extension `min_a { f(a) + lip d(a, x) }`.
pub fn mwk_sup_extension(
    samples: &RealSamples,
    dom: &Domain,
    lip: f64,
    metric: Metric,
) -> Result<ScalarField> {
    extend(samples, dom, lip, metric, ExtensionKind::Sup)
}

/// Mid extension `(INF + SUP) / 2`.
pub fn mwk_mid_extension(
    samples: &RealSamples,
    dom: &Domain,
    lip: f64,
    metric: Metric,
) -> Result<ScalarField> {
    extend(samples, dom, lip, metric, ExtensionKind::Mid)
}

/// All three extensions from a single distance pass.
#[derive(Debug, Clone, PartialEq)]
pub struct Extensions {
    pub lip: f64,
    pub inf: ScalarField,
    pub sup: ScalarField,
    pub mid: ScalarField,
}

impl Extensions {
    pub fn compute(samples: &RealSamples, dom: &Domain, lip: f64, metric: Metric) -> Result<Self> {
        samples.check_finite()?;
        if !lip.is_finite() || lip < 0.0 {
            return Err(Error::invalid(format!(
                "Lipschitz constant must be finite and nonnegative, got {lip}"
            )));
        }
        let dist = SampleDistances::compute(samples, dom, metric)?;
        let tight = tight_constant(samples, &dist)?;
        if lip < tight.lip {
            return Err(Error::InfeasibleLip {
                given: lip,
                tight: tight.lip,
            });
        }

        let n = dom.len();
        let mut inf = vec![f64::NEG_INFINITY; n];
        let mut sup = vec![f64::INFINITY; n];
        for (s, row) in samples.iter().zip(&dist.rows) {
            for v in 0..n {
                let reach = lip * row[v];
                inf[v] = inf[v].max(s.value - reach);
                sup[v] = sup[v].min(s.value + reach);
            }
        }
        // The sample's own term dominates at its vertex in exact arithmetic;
        // pin it so rounding in lip * d cannot shift a guiding value.
        for s in samples {
            inf[s.vertex] = s.value;
            sup[s.vertex] = s.value;
        }
        // At the tight constant INF and SUP meet exactly wherever a witness
        // chain passes; rounding can leave INF a few ulps above SUP there.
        for (lo, hi) in inf.iter_mut().zip(&mut sup) {
            if *lo > *hi {
                let m = 0.5 * (*lo + *hi);
                *lo = m;
                *hi = m;
            }
        }
        let mid = inf
            .iter()
            .zip(&sup)
            .map(|(&lo, &hi)| 0.5 * (lo + hi))
            .collect();
        Ok(Extensions {
            lip,
            inf: ScalarField::from_vec(inf),
            sup: ScalarField::from_vec(sup),
            mid: ScalarField::from_vec(mid),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::Adjacency;

    fn path5(entries: &[(usize, f64)]) -> (Domain, RealSamples) {
        let d = Domain::path(5).unwrap();
        let s = RealSamples::new(&d, entries.iter().copied()).unwrap();
        (d, s)
    }

    #[test]
    fn tight_constant_examples() {
        let (d, s) = path5(&[(0, 0.0), (4, 2.0)]);
        let est = lipschitz_constant(&s, &d, Metric::Geodesic).unwrap();
        assert_eq!(est.lip, 0.5);
        assert_eq!(est.witness, Some((0, 4)));

        let (d, s) = path5(&[(3, 7.0)]);
        let est = lipschitz_constant(&s, &d, Metric::Geodesic).unwrap();
        assert_eq!(est.lip, 0.0);
        assert_eq!(est.witness, None);

        let (d, s) = path5(&[(0, 0.0), (2, 2.0), (4, 0.0)]);
        let est = lipschitz_constant(&s, &d, Metric::Geodesic).unwrap();
        assert_eq!(est.lip, 1.0);
        assert_eq!(est.witness, Some((0, 2)));
    }

    #[test]
    fn symmetric_pair_with_unit_lip() {
        let (d, s) = path5(&[(0, 0.0), (4, 0.0)]);
        let e = Extensions::compute(&s, &d, 1.0, Metric::Geodesic).unwrap();
        assert_eq!(e.inf.get(2), -2.0);
        assert_eq!(e.sup.get(2), 2.0);
        assert_eq!(e.mid.get(2), 0.0);
        for v in [0, 4] {
            assert_eq!(e.inf.get(v), 0.0);
            assert_eq!(e.sup.get(v), 0.0);
            assert_eq!(e.mid.get(v), 0.0);
        }
    }

    #[test]
    fn tight_lip_collapses_along_geodesic() {
        let (d, s) = path5(&[(0, 0.0), (4, 2.0)]);
        let e = Extensions::compute(&s, &d, 0.5, Metric::Geodesic).unwrap();
        assert_eq!(e.inf.get(2), 1.0);
        assert_eq!(e.sup.get(2), 1.0);
        assert_eq!(e.mid.get(2), 1.0);
        assert_eq!(e.inf.values(), e.sup.values());
        assert_eq!(e.mid.values(), &[0.0, 0.5, 1.0, 1.5, 2.0]);
    }

    #[test]
    fn lip_below_tight_is_rejected() {
        let (d, s) = path5(&[(0, 0.0), (4, 2.0)]);
        let err = mwk_inf_extension(&s, &d, 0.25, Metric::Geodesic).unwrap_err();
        assert!(matches!(err, Error::InfeasibleLip { tight, .. } if tight == 0.5));
        assert!(mwk_sup_extension(&s, &d, -1.0, Metric::Geodesic).is_err());
        assert!(mwk_mid_extension(&s, &d, f64::NAN, Metric::Geodesic).is_err());
    }

    #[test]
    fn euclidean_needs_coordinates() {
        let g = Domain::graph(3, &[(0, 1), (1, 2)]).unwrap();
        let s = RealSamples::new(&g, [(0, 1.0)]).unwrap();
        assert!(lipschitz_constant(&s, &g, Metric::Euclidean).is_err());

        let grid = Domain::grid(3, 3, Adjacency::Four).unwrap();
        let s = RealSamples::new(&grid, [(0, 0.0), (8, 4.0)]).unwrap();
        let e = lipschitz_constant(&s, &grid, Metric::Euclidean).unwrap();
        assert!((e.lip - 4.0 / 8f64.sqrt()).abs() < 1e-15);
        let g = lipschitz_constant(&s, &grid, Metric::Geodesic).unwrap();
        assert_eq!(g.lip, 1.0);
    }

    #[test]
    fn ordering_on_grid() {
        let grid = Domain::grid(6, 5, Adjacency::Eight).unwrap();
        let s = RealSamples::new(&grid, [(0, 1.0), (14, -2.0), (29, 3.5)]).unwrap();
        let tight = lipschitz_constant(&s, &grid, Metric::Geodesic).unwrap().lip;
        let e = Extensions::compute(&s, &grid, tight * 1.5, Metric::Geodesic).unwrap();
        for v in 0..grid.len() {
            assert!(e.inf.get(v) <= e.mid.get(v));
            assert!(e.mid.get(v) <= e.sup.get(v));
        }
    }
}
