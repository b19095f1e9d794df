//! Lower bound for the Zariski closure of the monodromy from logarithms of unipotent elements.

use stm::lie::{conjugation_span, find_unipotents, unipotent_log, Generator, SpanOptions};
use stm::linalg::Matrix;

fn main() -> stm::Result<()> {
    // SL(2,Z) acting on Z^2 ⊕ Z^2 diagonally: the closure is one copy of SL(2,R).
    let t = Matrix::from_int_rows(&[[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]]);
    let s = Matrix::from_int_rows(&[[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 1, 1]]);
    let gens = vec![Generator::new("T", t)?, Generator::new("S", s)?];

    let seeds = find_unipotents(&gens, 4, 2)
        .into_iter()
        .map(|(w, m)| Ok((format!("log {w}"), unipotent_log(&m)?)))
        .collect::<stm::Result<Vec<_>>>()?;
    let span = conjugation_span(&gens, &seeds, 4, SpanOptions::default());
    println!("span dimension {}", span.dimension());
    for w in &span.witnesses {
        println!("  {}", w.description);
    }

    // Decoupling the second block gives SL(2,R) × SL(2,R).
    let s2 = Matrix::from_int_rows(&[[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 2, 1]]);
    let gens = vec![gens[0].clone(), Generator::new("S'", s2)?];
    let seeds = vec![("log T".to_string(), unipotent_log(&gens[0].matrix)?), ("log S'".to_string(), unipotent_log(&gens[1].matrix)?)];
    println!("after decoupling: {}", conjugation_span(&gens, &seeds, 4, SpanOptions::default()).dimension());
    Ok(())
}
