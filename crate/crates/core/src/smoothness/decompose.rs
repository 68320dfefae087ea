//! Split a field into a coarse reconstruction and a fine residual.
//!
//! The macro part is rebuilt from every `stride`-th vertex along each axis
//! (domain boundaries always included); the micro part is what remains.

use crate::domain::{Domain, DomainKind};
use crate::error::{Error, Result};
use crate::field::{LevelSamples, LevelSequence, RealSamples, ScalarField};
use crate::gvf::{gvf_fill, GvfStrategy};
use crate::mwk::{lipschitz_constant, Extensions, Metric};

/// How the macro part is reconstructed from the coarse samples.
#[derive(Debug, Clone, PartialEq)]
pub enum MacroMethod {
    /// Mid Lipschitz extension with the tight geodesic constant.
    MwkMid,
    /// Gradually varied fill; samples are snapped to the nearest level.
    Gradual {
        levels: LevelSequence,
        strategy: GvfStrategy,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub macro_part: ScalarField,
    pub micro_part: ScalarField,
    pub stride: usize,
    /// Vertices kept as coarse samples.
    pub samples: Vec<usize>,
}

fn axis_positions(extent: usize, stride: usize) -> Vec<usize> {
    let mut pos: Vec<usize> = (0..extent).step_by(stride).collect();
    if pos.last() != Some(&(extent - 1)) {
        pos.push(extent - 1);
    }
    pos
}

fn check_axis(extent: usize, stride: usize, axis: &str) -> Result<()> {
    if extent >= 2 && stride >= extent {
        return Err(Error::invalid(format!(
            "stride {stride} leaves only the endpoints of the {axis} axis (extent {extent})"
        )));
    }
    Ok(())
}

/// Coarse sample vertices for `stride` on a path or grid.
pub fn coarse_vertices(dom: &Domain, stride: usize) -> Result<Vec<usize>> {
    if stride == 0 {
        return Err(Error::invalid("stride must be positive"));
    }
    match (dom.kind(), dom.dims()) {
        (DomainKind::Path, _) => {
            check_axis(dom.len(), stride, "path")?;
            Ok(axis_positions(dom.len(), stride))
        }
        (_, Some((w, h))) => {
            check_axis(w, stride, "x")?;
            check_axis(h, stride, "y")?;
            let xs = axis_positions(w, stride);
            let ys = axis_positions(h, stride);
            Ok(ys
                .iter()
                .flat_map(|&y| xs.iter().map(move |&x| y * w + x))
                .collect())
        }
        _ => Err(Error::invalid(
            "micro/macro decomposition needs a path or grid domain",
        )),
    }
}

pub fn decompose_micro_macro(
    field: &ScalarField,
    dom: &Domain,
    stride: usize,
    method: &MacroMethod,
) -> Result<Decomposition> {
    if field.len() != dom.len() {
        return Err(Error::invalid("field does not cover the domain"));
    }
    let samples = coarse_vertices(dom, stride)?;
    let macro_part = match method {
        MacroMethod::MwkMid => {
            let coarse = RealSamples::new(dom, samples.iter().map(|&v| (v, field.get(v))))?;
            let lip = lipschitz_constant(&coarse, dom, Metric::Geodesic)?.lip;
            Extensions::compute(&coarse, dom, lip, Metric::Geodesic)?.mid
        }
        MacroMethod::Gradual { levels, strategy } => {
            let coarse = LevelSamples::new(
                dom,
                samples
                    .iter()
                    .map(|&v| (v, levels.nearest_index(field.get(v)))),
            )?;
            gvf_fill(&coarse, dom, levels, *strategy)?.to_values(levels)?
        }
    };
    let micro = field
        .values()
        .iter()
        .zip(macro_part.values())
        .map(|(&f, &m)| f - m)
        .collect();
    Ok(Decomposition {
        macro_part,
        micro_part: ScalarField::from_vec(micro),
        stride,
        samples,
    })
}
