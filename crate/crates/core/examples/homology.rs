//! Absolute homology of the octahedron origami: straight curves, holonomy and the intersection form.

use stm::catalog::{catalog, named_basis};
use stm::homology::{format_chain, holonomy, straight_curve, HomologyBasis};

fn main() -> stm::Result<()> {
    let o = catalog("octahedron-O")?;
    let hb = HomologyBasis::new(&o);
    println!("genus {}, H_1 of rank {}", hb.genus(), hb.rank());

    let horizontal = straight_curve(&o, 0, (1, 0));
    println!("horizontal core curve through square 1: {}", format_chain(&horizontal, o.n()));

    let nb = named_basis("octahedron-O")?;
    let cycles = nb.cycles(&o);
    for (name, c) in nb.curve_names().iter().zip(&cycles) {
        let (x, y) = holonomy(c, o.n());
        println!("  {name:<12} holonomy ({x}, {y})");
    }
    let omega = hb.intersection_form(&cycles)?;
    println!("intersection form (det {}):\n{omega}", omega.det());

    let zero = hb.zero_holonomy_basis();
    println!("zero-holonomy part has dimension {}", zero.len());
    Ok(())
}
