//! Lipschitz extension of scattered samples on a grid.

use discrete_smooth::mwk::{lipschitz_constant, Extensions, Metric};
use discrete_smooth::{Adjacency, Domain, RealSamples};

fn main() -> discrete_smooth::Result<()> {
    let dom = Domain::grid(7, 5, Adjacency::Four)?;
    let at = |x, y| dom.grid_vertex(x, y).unwrap();
    let samples = RealSamples::new(&dom, [(at(0, 0), 0.0), (at(6, 4), 5.0), (at(3, 2), 4.0)])?;

    let tight = lipschitz_constant(&samples, &dom, Metric::Geodesic)?;
    println!("tight lip = {} (witness {:?})", tight.lip, tight.witness);

    let ext = Extensions::compute(&samples, &dom, tight.lip, Metric::Geodesic)?;
    for (name, f) in [("inf", &ext.inf), ("mid", &ext.mid), ("sup", &ext.sup)] {
        println!("{name}:");
        for row in f.values().chunks(7) {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:5.2}")).collect();
            println!("  {}", cells.join(" "));
        }
    }
    Ok(())
}
