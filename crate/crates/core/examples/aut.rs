use stm::aut::{automorphisms, HomRep};
use stm::catalog::catalog;
use stm::homology::HomologyBasis;

fn main() -> stm::Result<()> {
    for name in ["octahedron-O", "cube-C", "mutetrahedron-M"] {
        let o = catalog(name)?;
        let group = automorphisms(&o);
        println!(
            "{name}: Aut of order {} ({}), abelian: {}, {} conjugacy classes",
            group.order(),
            group.label(),
            group.is_abelian(),
            group.conjugacy_classes().len()
        );
        for g in &group.generators {
            println!("  generator {g}");
        }

        let hb = HomologyBasis::new(&o);
        let rep = HomRep::new(&hb, &group, &hb.zero_holonomy_basis())?;
        assert!(rep.is_homomorphism());
        if let Some(m) = rep.generator_matrices().first() {
            println!("  first generator on the zero-holonomy part:\n{m}");
        }
    }
    Ok(())
}
