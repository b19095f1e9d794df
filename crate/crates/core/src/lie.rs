//! Lie-algebra lower bound for the Zariski closure of a matrix group.
//!
//! Logarithms of unipotent group elements lie in the Lie algebra of the closure, and so do their
//! conjugates and brackets. The span of these gives a certified lower bound on its dimension.

use num::{One, Zero};
use serde::Serialize;

use crate::decomp::UpperBound;
use crate::error::{Error, Result};
use crate::linalg::{q, EchelonBasis, Matrix, Q};

/// Whether `m − I` is nilpotent.
pub fn is_unipotent(m: &Matrix) -> bool {
    if !m.is_square() {
        return false;
    }
    let n = m.rows();
    let trace = (0..n).fold(Q::zero(), |acc, i| acc + &m[(i, i)]);
    if trace != q(n as i64) {
        return false;
    }
    let nil = m - &Matrix::identity(n);
    nilpotency_index(&nil).is_some()
}

/// Smallest `k` with `x^k = 0`, if any.
fn nilpotency_index(x: &Matrix) -> Option<usize> {
    let n = x.rows();
    let mut p = Matrix::identity(n);
    for k in 1..=n.max(1) {
        p = &p * x;
        if p.is_zero() {
            return Some(k);
        }
    }
    None
}

/// `log(I + N) = N − N²/2 + N³/3 − …`, a finite sum for nilpotent `N`.
pub fn unipotent_log(m: &Matrix) -> Result<Matrix> {
    let n = m.rows();
    let nil = m - &Matrix::identity(n);
    let k = nilpotency_index(&nil).ok_or(Error::NotUnipotent)?;
    let mut out = Matrix::zeros(n, n);
    let mut p = Matrix::identity(n);
    for j in 1..k {
        p = &p * &nil;
        let c = Q::new(if j % 2 == 1 { 1.into() } else { (-1).into() }, (j as i64).into());
        out = &out + &p.scale(&c);
    }
    Ok(out)
}

/// `exp(X) = Σ X^k / k!` for nilpotent `X`.
pub fn exp_nilpotent(x: &Matrix) -> Result<Matrix> {
    let n = x.rows();
    let k = nilpotency_index(x).ok_or(Error::NotUnipotent)?;
    let mut out = Matrix::identity(n);
    let mut p = Matrix::identity(n);
    let mut fact = Q::one();
    for j in 1..k {
        p = &p * x;
        fact *= q(j as i64);
        out = &out + &p.scale(&(Q::one() / &fact));
    }
    Ok(out)
}

/// `XᵀΩ + ΩX = 0`.
pub fn is_infinitesimally_symplectic(x: &Matrix, omega: &Matrix) -> bool {
    (&(&x.transpose() * omega) + &(omega * x)).is_zero()
}

/// A named invertible matrix together with its inverse.
#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub matrix: Matrix,
    pub inverse: Matrix,
}

impl Generator {
    pub fn new(name: impl Into<String>, matrix: Matrix) -> Result<Generator> {
        let inverse = matrix.inverse().ok_or_else(|| Error::Input("generator is not invertible".into()))?;
        Ok(Generator { name: name.into(), matrix, inverse })
    }
}

/// A word in generators and inverses: `(index, inverted)` pairs, leftmost factor first.
pub type GenWord = Vec<(usize, bool)>;

pub fn format_gen_word(w: &GenWord, gens: &[Generator]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|&(i, inv)| if inv { format!("{}⁻¹", gens[i].name) } else { gens[i].name.clone() })
        .collect::<Vec<_>>()
        .join("·")
}

pub fn eval_gen_word(w: &GenWord, gens: &[Generator], dim: usize) -> Matrix {
    w.iter().fold(Matrix::identity(dim), |acc, &(i, inv)| {
        &acc * if inv { &gens[i].inverse } else { &gens[i].matrix }
    })
}

fn letters(gens: &[Generator]) -> Vec<(usize, bool)> {
    (0..gens.len()).map(|i| (i, false)).chain((0..gens.len()).map(|i| (i, true))).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    /// How the element was produced, e.g. `φ_{A·B}(log B²)` or `[x3, x5]`.
    pub description: String,
}

#[derive(Clone, Debug)]
pub struct LieSpan {
    pub elements: Vec<Matrix>,
    pub witnesses: Vec<Witness>,
    echelon: EchelonBasis,
}

impl LieSpan {
    pub fn new(dim: usize) -> Self {
        LieSpan { elements: Vec::new(), witnesses: Vec::new(), echelon: EchelonBasis::new(dim * dim) }
    }

    pub fn dimension(&self) -> usize {
        self.elements.len()
    }

    /// Adds `x` if it is independent of the current span.
    pub fn insert(&mut self, x: Matrix, description: String) -> bool {
        if self.echelon.insert(x.as_slice()) {
            self.elements.push(x);
            self.witnesses.push(Witness { description });
            true
        } else {
            false
        }
    }

    pub fn contains(&self, x: &Matrix) -> bool {
        self.echelon.contains(x.as_slice())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SpanOptions {
    pub max_word_len: usize,
    pub brackets: bool,
    /// Stop as soon as this dimension is reached.
    pub target: Option<usize>,
}

impl Default for SpanOptions {
    fn default() -> Self {
        SpanOptions { max_word_len: 8, brackets: true, target: None }
    }
}

/// Span of the conjugates `w X w⁻¹` of the seeds over words of length at most `max_word_len`,
/// optionally closed under brackets.
///
/// Spinning only continues from conjugates that enlarge the span; this computes exactly the span of
/// all conjugates by words of bounded length, since `Ad` is linear.
pub fn conjugation_span(gens: &[Generator], seeds: &[(String, Matrix)], dim: usize, opts: SpanOptions) -> LieSpan {
    let mut span = LieSpan::new(dim);
    let reached = |s: &LieSpan| opts.target.is_some_and(|t| s.dimension() >= t);
    let mut frontier: Vec<(Matrix, GenWord, usize)> = Vec::new();
    for (k, (name, x)) in seeds.iter().enumerate() {
        if span.insert(x.clone(), name.clone()) {
            frontier.push((x.clone(), Vec::new(), k));
        }
        if reached(&span) {
            return span;
        }
    }
    let alphabet = letters(gens);
    for _ in 0..opts.max_word_len {
        let mut next = Vec::new();
        for (x, w, k) in &frontier {
            for &(i, inv) in &alphabet {
                let g = &gens[i];
                let y = if inv { &(&g.inverse * x) * &g.matrix } else { &(&g.matrix * x) * &g.inverse };
                let mut word = vec![(i, inv)];
                word.extend(w.iter().copied());
                let desc = format!("φ_{{{}}}({})", format_gen_word(&word, gens), seeds[*k].0);
                if span.insert(y.clone(), desc) {
                    next.push((y, word, *k));
                    if reached(&span) {
                        return span;
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    if opts.brackets {
        bracket_closure(&mut span, opts.target);
    }
    span
}

fn bracket_closure(span: &mut LieSpan, target: Option<usize>) {
    let mut start = 0;
    loop {
        let n = span.dimension();
        let mut grew = false;
        for i in 0..n {
            for j in (i + 1).max(start)..n {
                let b = span.elements[i].bracket(&span.elements[j]);
                if span.insert(b, format!("[x{i}, x{j}]")) {
                    grew = true;
                    if target.is_some_and(|t| span.dimension() >= t) {
                        return;
                    }
                }
            }
        }
        if !grew {
            return;
        }
        start = n;
    }
}

/// Non-identity unipotent products of the generators, words up to `max_word_len`, distinct matrices.
pub fn find_unipotents(gens: &[Generator], dim: usize, max_word_len: usize) -> Vec<(String, Matrix)> {
    let alphabet = letters(gens);
    let mut out: Vec<(String, Matrix)> = Vec::new();
    let mut frontier: Vec<(GenWord, Matrix)> = vec![(Vec::new(), Matrix::identity(dim))];
    for _ in 0..max_word_len {
        let mut next = Vec::new();
        for (w, m) in &frontier {
            for &(i, inv) in &alphabet {
                if w.last() == Some(&(i, !inv)) {
                    continue;
                }
                let g = if inv { &gens[i].inverse } else { &gens[i].matrix };
                let p = m * g;
                let mut v = w.clone();
                v.push((i, inv));
                if !p.is_identity() && is_unipotent(&p) && !out.iter().any(|(_, x)| *x == p) {
                    out.push((format_gen_word(&v, gens), p.clone()));
                }
                next.push((v, p));
            }
        }
        frontier = next;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub lower_dim: usize,
    pub upper_dim: usize,
    pub group_name: String,
    /// The two bounds agree, so the closure has the dimension of the upper-bound group.
    pub certified: bool,
}

impl Verdict {
    pub fn new(lower: usize, upper: &UpperBound) -> Verdict {
        Verdict { lower_dim: lower, upper_dim: upper.dim, group_name: upper.group_name.clone(), certified: lower == upper.dim }
    }

    pub fn check(&self) -> Result<()> {
        if self.certified {
            Ok(())
        } else {
            Err(Error::NotCertified { lower: self.lower_dim, upper: self.upper_dim })
        }
    }
}
