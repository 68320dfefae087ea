//! Natural smoothness of sampled sequences: ratio of samples to sign changes.

use discrete_smooth::smoothness::natural_smoothness_1d;

fn main() -> discrete_smooth::Result<()> {
    let monotone = [1.0, 2.0, 3.0, 4.0, 5.0];
    let zigzag: Vec<f64> = (0..100).map(|i| (i % 2) as f64).collect();
    let dense: Vec<f64> = (0..200).map(|i| (i as f64 * 0.1).sin()).collect();
    let sparse: Vec<f64> = (0..200).map(|i| (i as f64 * 3.0).sin()).collect();
    for (name, seq) in [
        ("monotone", &monotone[..]),
        ("zigzag", &zigzag),
        ("sin, fine sampling", &dense),
        ("sin, coarse sampling", &sparse),
    ] {
        let r = natural_smoothness_1d(seq)?;
        println!(
            "{name:22} N={:4} changes={:3} R={:.4}",
            r.n_samples, r.sign_changes, r.ratio
        );
    }
    Ok(())
}
