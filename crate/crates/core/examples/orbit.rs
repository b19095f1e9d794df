//! SL(2,Z)-orbit of a square-tiled surface, explored by shearing with T and S.

use stm::catalog::catalog;
use stm::orbit::{orbit, DEFAULT_ORBIT_CAP};
use stm::Origami;

fn main() -> stm::Result<()> {
    // Three squares glued into an L shape.
    let l_shape = Origami::from_cycle_strings(3, "(1,2)", "(1,3)")?;
    let g = orbit(&l_shape, DEFAULT_ORBIT_CAP)?;
    println!("L-shape: genus {}, orbit of size {}", l_shape.genus(), g.size());
    for (i, w) in g.tree_words.iter().enumerate() {
        println!("  surface {i} reached by {w}");
    }

    for name in ["octahedron-O", "cube-C", "mutetrahedron-M"] {
        let o = catalog(name)?;
        let g = orbit(&o, DEFAULT_ORBIT_CAP)?;
        println!("{name}: {} squares, genus {}, orbit size {}", o.n(), o.genus(), g.size());
    }
    Ok(())
}
