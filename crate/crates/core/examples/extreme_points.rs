//! Counting extreme points of 2-D fields and the resulting smoothness ratio.

use discrete_smooth::smoothness::{count_extreme_points, natural_smoothness_kd, ExtremaConfig};
use discrete_smooth::{Adjacency, Domain, ScalarField};

type Shape = fn(f64, f64) -> f64;

fn field(dom: &Domain, f: impl Fn(f64, f64) -> f64) -> discrete_smooth::Result<ScalarField> {
    let (w, _) = dom.dims().unwrap();
    let values = (0..dom.len()).map(|v| f((v % w) as f64 - 4.0, (v / w) as f64 - 4.0));
    ScalarField::new(dom, values.collect())
}

fn main() -> discrete_smooth::Result<()> {
    let dom = Domain::grid(9, 9, Adjacency::Four)?;
    let cfg = ExtremaConfig::default();
    let shapes: [(&str, Shape); 4] = [
        ("bump", |x, y| (-(x * x + y * y) / 4.0).exp()),
        ("saddle", |x, y| x * x - y * y),
        ("twin peaks", |x, y| {
            (-((x - 2.0).powi(2) + y * y))
                .exp()
                .max((-((x + 2.0).powi(2) + y * y)).exp())
        }),
        ("plane", |x, y| x + 2.0 * y),
    ];
    for (name, f) in shapes {
        let field = field(&dom, f)?;
        let en = count_extreme_points(&field, &dom, &cfg)?;
        let ns = natural_smoothness_kd(25, &field, &dom, &cfg)?;
        println!(
            "{name:10} EN={en:2} ratio={:?} alt={:.3}",
            ns.ratio(),
            ns.ratio_alt()
        );
    }
    Ok(())
}
