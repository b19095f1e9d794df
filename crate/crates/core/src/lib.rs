//! Square-tiled surfaces: Veech groups, homology actions of automorphisms and affine maps,
//! and dimension bounds for the Zariski closure of the Kontsevich–Zorich monodromy group.

pub mod affine;
pub mod aut;
pub mod catalog;
pub mod decomp;
pub mod error;
pub mod homology;
pub mod lie;
pub mod linalg;
pub mod orbit;
pub mod origami;
pub mod perm;
pub mod pipeline;
pub mod sl2z;

pub use error::{Error, Result};
pub use origami::Origami;
pub use perm::Permutation;
