//! End-to-end terrain reconstruction: sparse elevations on a grid, gradually
//! varied fit, polishing, analysis and a PGM preview written to the temp dir.

use discrete_smooth::formats::{format_pgm, Layout};
use discrete_smooth::gvf::{gvf_fill, GvfStrategy};
use discrete_smooth::polish::{polish_grid, PolishConfig};
use discrete_smooth::smoothness::{natural_smoothness_kd, ExtremaConfig};
use discrete_smooth::{Adjacency, Domain, LevelSamples, LevelSequence};

fn main() -> discrete_smooth::Result<()> {
    let (w, h) = (24, 16);
    let dom = Domain::grid(w, h, Adjacency::Eight)?;
    let levels = LevelSequence::range(0.0, 900.0, 10)?;
    let at = |x, y| dom.grid_vertex(x, y).unwrap();
    let peaks = [
        (at(0, 0), 1),
        (at(23, 15), 2),
        (at(6, 5), 7),
        (at(17, 9), 7),
        (at(12, 14), 3),
        (at(20, 2), 4),
    ];
    let samples = LevelSamples::new(&dom, peaks)?;
    let fitted = gvf_fill(&samples, &dom, &levels, GvfStrategy::MidEnvelope)?.to_values(&levels)?;

    let cfg = ExtremaConfig::default();
    let before = natural_smoothness_kd(peaks.len(), &fitted, &dom, &cfg)?;

    let mut guiding = vec![false; dom.len()];
    for &(v, _) in &peaks {
        guiding[v] = true;
    }
    let polished = polish_grid(
        &fitted,
        &dom,
        &guiding,
        &PolishConfig::for_values(fitted.values()),
    )?;
    let polished_field = discrete_smooth::ScalarField::new(&dom, polished.values.clone())?;
    let after = natural_smoothness_kd(peaks.len(), &polished_field, &dom, &cfg)?;

    println!("fit:      EN={} ratio={:?}", before.en, before.ratio());
    println!(
        "polished: EN={} ratio={:?} (converged={}, residual {:.3})",
        after.en,
        after.ratio(),
        polished.converged,
        polished.max_residual
    );

    let path = std::env::temp_dir().join("terrain.pgm");
    let layout = Layout::of(&dom)?;
    std::fs::write(&path, format_pgm(layout, &polished.values))?;
    println!("preview written to {}", path.display());
    Ok(())
}
