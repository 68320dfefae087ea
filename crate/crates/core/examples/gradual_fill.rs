//! Gradually varied fill: feasibility check, envelopes and the three fills.

use discrete_smooth::gvf::{gvf_feasible, gvf_fill, Envelopes, GvfStrategy};
use discrete_smooth::{Domain, LevelSamples, LevelSequence};

fn main() -> discrete_smooth::Result<()> {
    let dom = Domain::path(9)?;
    let levels = LevelSequence::range(0.0, 40.0, 5)?;
    let samples = LevelSamples::new(&dom, [(0, 1), (4, 4), (8, 2)])?;

    println!(
        "feasible: {}",
        gvf_feasible(&samples, &dom, &levels)?.is_feasible()
    );
    let env = Envelopes::compute(&samples, &dom, &levels)?;
    println!("lower {:?}", env.lower);
    println!("upper {:?}", env.upper);
    for strategy in [
        GvfStrategy::InfEnvelope,
        GvfStrategy::MidEnvelope,
        GvfStrategy::SupEnvelope,
    ] {
        let fill = gvf_fill(&samples, &dom, &levels, strategy)?;
        println!("{strategy:?}: {:?}", fill.to_values(&levels)?.values());
    }

    // Samples two hops apart cannot differ by three levels.
    let bad = LevelSamples::new(&dom, [(0, 1), (2, 4)])?;
    if let Some(v) = gvf_feasible(&bad, &dom, &levels)?.violation {
        println!("infeasible: {v}");
    }
    Ok(())
}
