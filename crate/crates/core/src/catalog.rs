//! Built-in surfaces: the torus, the octahedron and cube covers, and the mutetrahedron cover,
//! with their named homology curves.

use crate::error::{Error, Result};
use crate::homology::{straight_curve, ChainVector};
use crate::linalg::{q, qf, Q};
use crate::orbit::apply_word_raw;
use crate::origami::Origami;
use crate::perm::Permutation;

pub const NAMES: [&str; 5] = ["torus", "octahedron-O", "cube-C1", "cube-C", "mutetrahedron-M"];

const C1_H: &str = "(1,2,3,4)(5,6,7,8)(9,10,11,12)(13,14,15,16)(17,18,19,20)(21,22,23,24)";
const C1_V: &str = "(1,9,14,22)(2,20,13,7)(3,24,16,11)(4,5,15,18)(6,10,17,21)(8,23,19,12)";

pub fn catalog(name: &str) -> Result<Origami> {
    let o = match name {
        "torus" => Origami::torus(),
        "octahedron-O" => Origami::from_cycle_strings(12, "(1,2,3)(4,5,6)(7,8,9)(10,11,12)", "(1,4,7)(2,9,11)(3,10,5)(6,12,8)")?,
        "cube-C1" => Origami::from_cycle_strings(24, C1_H, C1_V)?,
        "cube-C" => apply_word_raw(&catalog("cube-C1")?, &"TSS".parse()?),
        "mutetrahedron-M" => Origami::from_cycle_strings(
            24,
            "(1,2,3,4,5,6)(7,8,9,10,11,12)(13,14,15,16,17,18)(19,20,21,22,23,24)",
            "(1,7,13,11,3,21)(2,20,14,12,18,22)(4,10,16,8,6,24)(5,23,17,9,15,19)",
        )?,
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(o)
}

/// Generators of the deck group, as printed alongside each surface.
pub fn printed_automorphisms(name: &str) -> Result<Vec<Permutation>> {
    let (n, cycles): (usize, &[&str]) = match name {
        "torus" => (1, &[]),
        "octahedron-O" => (12, &["(1,3,2)(4,10,9)(5,11,7)(6,12,8)", "(1,6,11)(2,4,12)(3,5,10)(7,8,9)"]),
        "cube-C" => (
            24,
            &[
                "(1,13)(2,14)(3,15)(4,16)(5,11)(6,12)(7,9)(8,10)(17,23)(18,24)(19,21)(20,22)",
                "(1,14)(2,15)(3,16)(4,13)(5,7)(6,8)(9,22)(10,23)(11,24)(12,21)(17,19)(18,20)",
                "(1,23,5)(2,24,6)(3,21,7)(4,22,8)(9,19,15)(10,20,16)(11,17,13)(12,18,14)",
            ],
        ),
        "mutetrahedron-M" => (
            24,
            &[
                "(1,4)(2,5)(3,6)(7,10)(8,11)(9,12)(13,16)(14,17)(15,18)(19,22)(20,23)(21,24)",
                "(1,8)(2,9)(3,10)(4,11)(5,12)(6,7)(13,24)(14,19)(15,20)(16,21)(17,22)(18,23)",
                "(1,18)(2,13)(3,14)(4,15)(5,16)(6,17)(7,22)(8,23)(9,24)(10,19)(11,20)(12,21)",
            ],
        ),
        "cube-C1" => (24, &[]),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    cycles.iter().map(|c| Permutation::parse_cycles(n, c)).collect()
}

/// Printed Veech group generators.
pub fn printed_veech_generators(name: &str) -> Result<Vec<crate::sl2z::GroupWord>> {
    use crate::sl2z::{GroupWord, Mat2};
    let words: Vec<GroupWord> = match name {
        "torus" => vec!["T".parse()?, "S".parse()?],
        "octahedron-O" => vec!["TTT".parse()?, "sT".parse()?],
        "mutetrahedron-M" => vec!["sT".parse()?, "TSt".parse()?],
        "cube-C" => [[[1, 2], [0, 1]], [[5, -2], [3, -1]], [[3, -2], [5, -3]]]
            .into_iter()
            .map(|m| GroupWord::from_matrix(Mat2(m)))
            .collect::<Result<_>>()?,
        "cube-C1" => return Ok(Vec::new()),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(words)
}

/// A straight closed curve from a square (1-based) in a primitive direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedCurve {
    pub name: String,
    pub square: usize,
    pub direction: (i64, i64),
}

/// A named basis of `H₁` by straight curves plus a named basis of the zero-holonomy subspace
/// as rational combinations of those curves.
#[derive(Clone, Debug)]
pub struct NamedBasis {
    pub curves: Vec<NamedCurve>,
    pub zero_holonomy: Vec<(String, Vec<(usize, Q)>)>,
}

impl NamedBasis {
    pub fn cycles(&self, o: &Origami) -> Vec<ChainVector> {
        self.curves.iter().map(|c| straight_curve(o, c.square - 1, c.direction)).collect()
    }

    pub fn zero_holonomy_cycles(&self, o: &Origami) -> Vec<ChainVector> {
        let cycles = self.cycles(o);
        self.zero_holonomy
            .iter()
            .map(|(_, terms)| {
                let mut v = vec![q(0); 2 * o.n()];
                for (i, c) in terms {
                    crate::linalg::add_scaled(&mut v, c, &cycles[*i]);
                }
                v
            })
            .collect()
    }

    pub fn curve_names(&self) -> Vec<String> {
        self.curves.iter().map(|c| c.name.clone()).collect()
    }

    pub fn zero_holonomy_names(&self) -> Vec<String> {
        self.zero_holonomy.iter().map(|(n, _)| n.clone()).collect()
    }

    pub fn position(&self, name: &str) -> usize {
        self.curves.iter().position(|c| c.name == name).unwrap_or_else(|| panic!("no curve {name}"))
    }
}

fn family(symbol: &str, squares: &[usize], direction: (i64, i64)) -> Vec<NamedCurve> {
    squares.iter().map(|&s| NamedCurve { name: format!("{symbol}{s}"), square: s, direction }).collect()
}

pub fn named_basis(name: &str) -> Result<NamedBasis> {
    let mut curves = Vec::new();
    let mut zh: Vec<(String, Vec<(usize, Q)>)> = Vec::new();
    match name {
        "torus" => {
            curves.push(NamedCurve { name: "h".into(), square: 1, direction: (1, 0) });
            curves.push(NamedCurve { name: "v".into(), square: 1, direction: (0, 1) });
        }
        "octahedron-O" => {
            curves.extend(family("σ", &[1, 4, 7, 10], (1, 0)));
            curves.extend(family("ζ", &[1, 2, 3, 6], (0, 1)));
            for i in 0..3 {
                zh.push((format!("Σ{}", [1, 4, 7][i]), vec![(i, q(1)), (3, q(-1))]));
            }
            for j in 1..4 {
                zh.push((format!("Z{}", [1, 2, 3, 6][j]), vec![(4, q(1)), (4 + j, q(-1))]));
            }
        }
        "cube-C" => {
            curves.extend(family("σ", &[1, 2, 3, 5, 8, 9], (1, 0)));
            curves.extend(family("ζ", &[1, 2, 3, 4, 5, 8], (0, 1)));
            curves.extend(family("η", &[1, 2, 3, 4, 6, 8], (1, 1)));
            for i in 0..5 {
                zh.push((format!("Σ{}", [1, 2, 3, 5, 8][i]), vec![(i, q(1)), (5, q(-1))]));
            }
            for j in 0..5 {
                zh.push((format!("Z{}", [1, 2, 3, 4, 5][j]), vec![(6 + j, q(1)), (11, q(-1))]));
            }
            for k in 0..6 {
                zh.push((
                    format!("H{}", [1, 2, 3, 4, 6, 8][k]),
                    vec![(12 + k, q(1)), (5, q(-2)), (11, qf(-4, 3))],
                ));
            }
        }
        "mutetrahedron-M" => {
            let squares = [1, 3, 4, 6, 8];
            curves.extend(family("σ", &squares, (1, 1)));
            curves.extend(family("ζ", &squares, (-2, 1)));
            for i in 0..4 {
                zh.push((format!("Σ{}", squares[i]), vec![(i, q(1)), (4, q(-1))]));
            }
            for i in 0..4 {
                zh.push((format!("Z{}", squares[i]), vec![(5 + i, q(1)), (9, q(-1))]));
            }
        }
        _ => return Err(Error::NoNamedBasis(name.to_string())),
    }
    Ok(NamedBasis { curves, zero_holonomy: zh })
}
