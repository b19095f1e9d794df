//! Splits the zero-holonomy homology of the cube surface into isotypic pieces under Aut.

use stm::catalog::catalog;
use stm::decomp::myz_upper_bound;
use stm::pipeline::{affine_context, aut_stage, decompose_stage, homology_stage, RunConfig};

fn main() -> stm::Result<()> {
    let o = catalog("cube-C")?;
    let h = homology_stage(&o, Some("cube-C"), &RunConfig::default())?;
    let a = aut_stage(&affine_context(&h))?;
    let d = decompose_stage(&h, &a)?;

    for (i, c) in d.report.components.iter().enumerate() {
        println!(
            "component {i}: dim {}, {} copies of a {}-dim irreducible, type {}{}",
            c.dim(),
            c.multiplicity,
            c.irreducible_dim,
            c.algebra,
            if c.is_tautological() { " (tautological)" } else { "" }
        );
    }
    let bound = myz_upper_bound(&d.report)?;
    println!("upper bound: {} of dimension {}", bound.group_name, bound.dim);
    Ok(())
}
