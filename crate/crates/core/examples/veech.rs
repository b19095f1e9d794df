//! Generators of the Veech group, first from the Schreier graph and then shortened.

use stm::catalog::catalog;
use stm::orbit::{generates_stabilizer, orbit, short_generators, veech_generators, DEFAULT_ORBIT_CAP};

fn main() -> stm::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "cube-C".into());
    let o = catalog(&name)?;
    let g = orbit(&o, DEFAULT_ORBIT_CAP)?;

    let schreier = veech_generators(&g);
    println!("{name}: index {} in SL(2,Z), {} Schreier generators", g.size(), schreier.len());

    let short = short_generators(&g, 6)?;
    assert!(generates_stabilizer(&short, &g)?);
    for w in &short {
        println!("  {w:<8} {}", w.matrix());
    }
    Ok(())
}
