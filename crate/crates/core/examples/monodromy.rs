//! Matrices of affine diffeomorphisms on homology.
//!
//! A Veech group word only fixes the surface up to relabeling, so the action on homology is defined
//! up to an automorphism; `normalized_action` picks a unipotent representative when there is one.

use stm::catalog::catalog;
use stm::pipeline::{affine_context, homology_stage, monodromy_stage, veech_stage, RunConfig};

fn main() -> stm::Result<()> {
    let cfg = RunConfig::default();
    let o = catalog("mutetrahedron-M")?;
    let v = veech_stage(&o, &cfg)?;
    let h = homology_stage(&o, Some("mutetrahedron-M"), &cfg)?;
    let ctx = affine_context(&h);

    for e in monodromy_stage(&ctx, &v.short)? {
        println!("α({}) with W = {}", e.word, e.word.matrix());
        println!("  holonomy equivariant: {}", ctx.is_holonomy_equivariant(&e));
        println!("{}", e.matrix_zero);
    }
    let coset = ctx.aut_coset(&v.short[0])?;
    println!("the coset of {} has {} representatives", v.short[0], coset.len());
    Ok(())
}
