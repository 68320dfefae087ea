//! Difference ladder and discrete smoothness class of a few sequences.

use discrete_smooth::smoothness::{
    classify_discrete_smoothness, default_constants, difference_ladder, DEFAULT_LADDER_DEPTH,
};

fn main() -> discrete_smooth::Result<()> {
    let cubic: Vec<f64> = (0..10).map(|x| f64::from(x * x * x - 4 * x)).collect();
    let halving: Vec<f64> = (0..8).map(|x| 16.0 * 0.5f64.powi(x)).collect();
    let noise = [3.0, -1.0, 4.0, 1.0, -5.0, 9.0, 2.0, -6.0];
    for (name, seq) in [
        ("cubic", &cubic[..]),
        ("halving", &halving),
        ("noise", &noise),
    ] {
        let ladder = difference_ladder(seq, DEFAULT_LADDER_DEPTH)?;
        let (c1, c2) = default_constants(&ladder);
        let class = classify_discrete_smoothness(&ladder, c1, c2)?.class;
        println!("{name}: lip {:?}", ladder.lip);
        println!(
            "  onset {:?}, class {} K={:?}",
            ladder.decrease_onset,
            class.name(),
            class.order()
        );
    }
    Ok(())
}
