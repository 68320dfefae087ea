//! Splitting a field into a coarse reconstruction and its residual detail.

use discrete_smooth::gvf::GvfStrategy;
use discrete_smooth::smoothness::{decompose_micro_macro, MacroMethod};
use discrete_smooth::{Domain, LevelSequence, ScalarField};

fn main() -> discrete_smooth::Result<()> {
    let dom = Domain::path(21)?;
    let values: Vec<f64> = (0..21)
        .map(|i| {
            let x = i as f64;
            0.5 * x + (x * 2.5).sin()
        })
        .collect();
    let field = ScalarField::new(&dom, values)?;

    let methods = [
        ("mwk mid", MacroMethod::MwkMid),
        (
            "gradual",
            MacroMethod::Gradual {
                levels: LevelSequence::range(-1.0, 11.0, 25)?,
                strategy: GvfStrategy::MidEnvelope,
            },
        ),
    ];
    for (name, method) in methods {
        let dec = decompose_micro_macro(&field, &dom, 5, &method)?;
        let energy: f64 = dec.micro_part.values().iter().map(|u| u * u).sum();
        println!(
            "{name}: coarse samples {:?}, micro energy {energy:.3}",
            dec.samples
        );
        let macro_row: Vec<String> = dec
            .macro_part
            .values()
            .iter()
            .map(|v| format!("{v:.2}"))
            .collect();
        println!("  macro {}", macro_row.join(" "));
    }
    Ok(())
}
