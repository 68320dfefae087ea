//! Polishing a noisy sequence while holding a few guiding points fixed.

use discrete_smooth::polish::{polish_1d, PolishConfig};
use discrete_smooth::smoothness::natural_smoothness_1d;

fn main() -> discrete_smooth::Result<()> {
    let noisy: Vec<f64> = (0..24)
        .map(|i| {
            let x = i as f64 / 4.0;
            x.sin() * 3.0 + if i % 3 == 0 { 0.4 } else { -0.2 }
        })
        .collect();
    let guiding: Vec<bool> = (0..noisy.len()).map(|i| i % 6 == 0).collect();
    let cfg = PolishConfig::new(1e-6, 10_000, 1.0)?;
    let out = polish_1d(&noisy, &guiding, &cfg)?;

    println!(
        "converged={} after {} sweeps, max residual {:.2e}",
        out.converged, out.iterations, out.max_residual
    );
    println!("R before {:.3}", natural_smoothness_1d(&noisy)?.ratio);
    println!("R after  {:.3}", natural_smoothness_1d(&out.values)?.ratio);
    for (i, (a, b)) in noisy.iter().zip(&out.values).enumerate() {
        let mark = if guiding[i] { "*" } else { " " };
        println!("{i:2}{mark} {a:7.3} -> {b:7.3}");
    }
    Ok(())
}
