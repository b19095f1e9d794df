//! End-to-end analysis of every catalog surface.

use stm::catalog::{catalog, NAMES};
use stm::pipeline::{Analysis, BasisMode, RunConfig};

fn main() -> stm::Result<()> {
    let cfg = RunConfig { basis: BasisMode::Auto, ..RunConfig::default() };
    for name in NAMES {
        let a = Analysis::run(&catalog(name)?, Some(name), &cfg)?;
        let v = a.verdict()?;
        println!(
            "{name:<16} genus {}  |Aut| {:>2}  Veech index {:>2}  lower {:>2}  upper {:>2}  {} {}",
            a.homology.hb.genus(),
            a.aut.group.order(),
            a.veech.orbit.size(),
            v.lower_dim,
            v.upper_dim,
            v.group_name,
            if v.certified { "certified" } else { "not certified" }
        );
    }
    Ok(())
}
