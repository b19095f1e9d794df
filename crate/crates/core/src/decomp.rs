//! Isotypic decomposition of a finite-group representation over `Q`.
//!
//! Isotypic components are the joint eigenspaces of the symmetrized class sums
//! `Σ_{g ∈ K ∪ K⁻¹} ρ(g)`, which act as scalars on each real isotypic piece. Irreducible copies are
//! found by spinning eigenvectors of single group elements and split off with averaged projections.

use std::fmt;

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::aut::HomRep;
use crate::error::{Error, Result};
use crate::linalg::{combine, coordinates, independent_subset, q, EchelonBasis, Matrix, Q};

const RANDOM_SEEDS: usize = 32;
const SEED: u64 = 0x5e_ed0f_0a11;

/// Coefficients `c_0..c_n` of `det(xI − m)`, by Faddeev–LeVerrier.
pub fn char_poly(m: &Matrix) -> Vec<Q> {
    let n = m.rows();
    let mut coeffs = vec![Q::zero(); n + 1];
    coeffs[n] = Q::one();
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m * &mk;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = m * &mk;
        let trace = (0..n).fold(Q::zero(), |acc, i| acc + &am[(i, i)]);
        coeffs[n - k] = -trace / q(k as i64);
    }
    coeffs
}

fn eval_poly(coeffs: &[Q], x: &Q) -> Q {
    coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

/// Distinct rational roots of the characteristic polynomial of `m`, ascending.
pub fn rational_eigenvalues(m: &Matrix) -> Result<Vec<Q>> {
    let coeffs = char_poly(m);
    let n = m.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    // |λ| is bounded by the maximal absolute row sum.
    let bound = (0..n)
        .map(|i| m.row(i).iter().fold(Q::zero(), |acc, x| acc + x.abs()))
        .max()
        .unwrap_or_else(Q::zero)
        .ceil()
        .to_integer();
    let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let span = (&bound * &den).to_i64().filter(|&s| s <= 2_000_000).ok_or(Error::IrrationalEigenvalue)?;
    let mut roots = Vec::new();
    let mut remaining = n;
    for y in -span..=span {
        if remaining == 0 {
            break;
        }
        let x = Q::new(BigInt::from(y), den.clone());
        if eval_poly(&coeffs, &x).is_zero() {
            roots.push(x);
            remaining -= 1;
        }
    }
    Ok(roots)
}

/// Rational eigenvalues with bases of their eigenspaces (possibly not spanning).
pub fn rational_eigenspaces(m: &Matrix) -> Result<Vec<(Q, Vec<Vec<Q>>)>> {
    let n = m.rows();
    rational_eigenvalues(m)?
        .into_iter()
        .map(|lambda| {
            let mut shifted = m.clone();
            for i in 0..n {
                shifted[(i, i)] -= &lambda;
            }
            Ok((lambda, shifted.nullspace()))
        })
        .collect()
}

/// Eigenspace decomposition over `Q`; fails unless `m` is diagonalizable with rational spectrum.
pub fn eigen_decomposition(m: &Matrix) -> Result<Vec<(Q, Vec<Vec<Q>>)>> {
    let spaces = rational_eigenspaces(m)?;
    let total: usize = spaces.iter().map(|(_, b)| b.len()).sum();
    if total != m.rows() {
        return Err(Error::IrrationalEigenvalue);
    }
    Ok(spaces)
}

/// Matrix of `op` on an invariant subspace, in the subspace's basis.
fn restrict_operator(op: &Matrix, basis: &[Vec<Q>]) -> Result<Matrix> {
    let cols = basis
        .iter()
        .map(|v| coordinates(&op.mul_vec(v), basis).ok_or(Error::NotInSpan))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(&cols, basis.len()))
}

/// Splits each invariant subspace into eigenspaces of a commuting operator.
fn split_by(op: &Matrix, spaces: Vec<(Vec<Q>, Vec<Vec<Q>>)>, len: usize) -> Result<Vec<(Vec<Q>, Vec<Vec<Q>>)>> {
    let mut out = Vec::new();
    for (tuple, basis) in spaces {
        let r = restrict_operator(op, &basis)?;
        for (lambda, vecs) in eigen_decomposition(&r)? {
            let ambient: Vec<Vec<Q>> = vecs.iter().map(|c| combine(c, &basis, len)).collect();
            let mut t = tuple.clone();
            t.push(lambda);
            out.push((t, ambient));
        }
    }
    Ok(out)
}

fn standard_basis(n: usize) -> Vec<Vec<Q>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub basis: Vec<Vec<Q>>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        coordinates(v, &self.basis).is_some()
    }

    pub fn is_invariant(&self, rep: &HomRep) -> bool {
        rep.generator_matrices().iter().all(|m| self.basis.iter().all(|v| self.contains(&m.mul_vec(v))))
    }
}

/// Common eigenspaces of the generators, keyed by their eigenvalue tuples in ascending order.
pub fn simultaneous_eigenspaces(rep: &HomRep) -> Result<Vec<(Vec<Q>, Subspace)>> {
    let gens = rep.generator_matrices();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            if (*a * *b) != (*b * *a) {
                return Err(Error::NonCommutingGenerators);
            }
        }
    }
    let mut spaces = vec![(Vec::new(), standard_basis(rep.dim))];
    for g in gens {
        spaces = split_by(g, spaces, rep.dim)?;
    }
    spaces.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(spaces.into_iter().map(|(t, b)| (t, Subspace { basis: b })).collect())
}

/// Smallest invariant subspace containing `seed`; the basis is the spun orbit itself.
pub fn spin_invariant_subspace(rep: &HomRep, seed: &[Q]) -> Subspace {
    let gens = rep.generator_matrices();
    let mut ech = EchelonBasis::new(seed.len());
    let mut basis = Vec::new();
    if ech.insert(seed) {
        basis.push(seed.to_vec());
    }
    let mut i = 0;
    while i < basis.len() {
        for g in &gens {
            let w = g.mul_vec(&basis[i]);
            if ech.insert(&w) {
                basis.push(w);
            }
        }
        i += 1;
    }
    Subspace { basis }
}

/// All `X` with `a(g) X = X b(g)` for every generator `g`, as a basis of matrices.
pub fn intertwiner_space(a: &HomRep, b: &HomRep) -> Vec<Matrix> {
    let (da, db) = (a.dim, b.dim);
    let unknowns = da * db;
    if unknowns == 0 {
        return Vec::new();
    }
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (&ia, &ib) in a.generators.iter().zip(&b.generators) {
        let (ma, mb) = (&a.matrices[ia], &b.matrices[ib]);
        for i in 0..da {
            for j in 0..db {
                let mut row = vec![Q::zero(); unknowns];
                for k in 0..da {
                    row[k * db + j] += &ma[(i, k)];
                }
                for k in 0..db {
                    row[i * db + k] -= &mb[(k, j)];
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        rows.push(vec![Q::zero(); unknowns]);
    }
    Matrix::from_rows(rows)
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_rows(v.chunks(db).map(<[Q]>::to_vec).collect()))
        .collect()
}

fn seeded_rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Q> {
    (0..n).map(|_| q(rng.gen_range(-3..=3))).collect()
}

/// An invertible element of the span of `space`, if one is found among the basis and random combinations.
pub fn find_invertible(space: &[Matrix]) -> Option<Matrix> {
    let first = space.first()?;
    if !first.is_square() {
        return None;
    }
    if let Some(m) = space.iter().find(|m| !m.det().is_zero()) {
        return Some(m.clone());
    }
    let mut rng = seeded_rng();
    for _ in 0..RANDOM_SEEDS {
        let c = random_vector(&mut rng, space.len());
        let m = space.iter().zip(&c).fold(Matrix::zeros(first.rows(), first.cols()), |acc, (x, k)| &acc + &x.scale(k));
        if !m.det().is_zero() {
            return Some(m);
        }
    }
    None
}

/// Whether two representations of the same group are equivalent, with a certifying intertwiner.
pub fn equivalence(a: &HomRep, b: &HomRep) -> Option<Matrix> {
    if a.dim != b.dim {
        return None;
    }
    find_invertible(&intertwiner_space(a, b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DivisionAlgebra {
    R,
    C,
    H,
}

impl fmt::Display for DivisionAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DivisionAlgebra::R => "R",
            DivisionAlgebra::C => "C",
            DivisionAlgebra::H => "H",
        })
    }
}

fn algebra_from_dim(d: usize) -> Result<DivisionAlgebra> {
    match d {
        1 => Ok(DivisionAlgebra::R),
        2 => Ok(DivisionAlgebra::C),
        4 => Ok(DivisionAlgebra::H),
        _ => Err(Error::NotIrreducible),
    }
}

/// No proper invariant subspace is reached by spinning basis vectors and random seeds.
pub fn spins_irreducibly(rep: &HomRep) -> bool {
    let mut rng = seeded_rng();
    let seeds = standard_basis(rep.dim).into_iter().chain((0..RANDOM_SEEDS).map(|_| random_vector(&mut rng, rep.dim)));
    seeds.filter(|s| s.iter().any(|x| !x.is_zero())).all(|s| spin_invariant_subspace(rep, &s).dim() == rep.dim)
}

/// Centralizer type of an irreducible representation.
pub fn division_algebra_type(rep: &HomRep) -> Result<DivisionAlgebra> {
    if !spins_irreducibly(rep) {
        return Err(Error::NotIrreducible);
    }
    algebra_from_dim(intertwiner_space(rep, rep).len())
}

/// An irreducible invariant subspace of `rep`, in its coordinates, with its centralizer dimension.
fn find_irreducible(rep: &HomRep) -> Result<(Vec<Vec<Q>>, usize)> {
    let n = rep.dim;
    let mut seeds: Vec<(usize, Vec<Q>)> = Vec::new();
    for (i, m) in rep.matrices.iter().enumerate() {
        if m.is_identity() || i == 0 {
            continue;
        }
        for (_, space) in rational_eigenspaces(m)? {
            if space.len() < n {
                seeds.extend(space.into_iter().map(|v| (0, v)));
            }
        }
    }
    seeds.extend(standard_basis(n).into_iter().map(|v| (1, v)));
    let mut rng = seeded_rng();
    seeds.extend((0..RANDOM_SEEDS).map(|_| (2, random_vector(&mut rng, n))));

    let mut best: Option<Subspace> = None;
    for (_, s) in seeds {
        if s.iter().all(Zero::is_zero) {
            continue;
        }
        let sp = spin_invariant_subspace(rep, &s);
        if best.as_ref().is_none_or(|b| sp.dim() < b.dim()) {
            let done = sp.dim() == 1;
            best = Some(sp);
            if done {
                break;
            }
        }
    }
    let best = best.ok_or(Error::DecompositionIncomplete { found: 0, total: n })?;
    let sub = rep.restrict(&best.basis)?;
    let commutant = intertwiner_space(&sub, &sub);
    if commutant.len() == 1 {
        return Ok((best.basis, 1));
    }
    // Split further along a commutant element with a proper rational eigenspace.
    let mut rng = seeded_rng();
    let mut candidates: Vec<Matrix> = commutant.clone();
    for _ in 0..8 {
        let c = random_vector(&mut rng, commutant.len());
        candidates.push(commutant.iter().zip(&c).fold(Matrix::zeros(sub.dim, sub.dim), |acc, (x, k)| &acc + &x.scale(k)));
    }
    for x in candidates {
        for (_, space) in rational_eigenspaces(&x)? {
            if !space.is_empty() && space.len() < sub.dim {
                let inner = sub.restrict(&space)?;
                let (u, c) = find_irreducible(&inner)?;
                let ambient = u.iter().map(|v| combine(v, &space, sub.dim)).map(|v| combine(&v, &best.basis, n)).collect();
                return Ok((ambient, c));
            }
        }
    }
    algebra_from_dim(commutant.len())?;
    Ok((best.basis, commutant.len()))
}

/// A `G`-invariant complement of the invariant subspace `u`, by averaging a projection.
fn invariant_complement(rep: &HomRep, u: &[Vec<Q>]) -> Result<Vec<Vec<Q>>> {
    let n = rep.dim;
    let mut ech = EchelonBasis::new(n);
    let mut cols: Vec<Vec<Q>> = Vec::new();
    for v in u {
        ech.insert(v);
        cols.push(v.clone());
    }
    for e in standard_basis(n) {
        if ech.insert(&e) {
            cols.push(e);
        }
    }
    let b = Matrix::from_columns(&cols, n);
    let binv = b.inverse().expect("extended to a basis");
    let mut d = Matrix::zeros(n, n);
    for i in 0..u.len() {
        d[(i, i)] = Q::one();
    }
    let p = &(&b * &d) * &binv;
    let mut avg = Matrix::zeros(n, n);
    for (i, m) in rep.matrices.iter().enumerate() {
        let minv = &rep.matrices[rep.inverse_index(i)];
        avg = &avg + &(&(m * &p) * minv);
    }
    Ok(avg.nullspace())
}

#[derive(Clone, Debug)]
pub struct IsotypicComponent {
    pub basis: Vec<Vec<Q>>,
    /// Bases of the irreducible copies, concatenating to `basis`.
    pub copies: Vec<Vec<Vec<Q>>>,
    pub multiplicity: usize,
    pub irreducible_dim: usize,
    /// Dimension of the centralizer of one irreducible copy.
    pub centralizer_dim: usize,
    /// Dimension of the commutant of the whole component.
    pub block_commutant_dim: usize,
    pub algebra: DivisionAlgebra,
    /// Joint eigenvalues of the symmetrized class sums.
    pub class_sum_eigenvalues: Vec<Q>,
    /// Rank of the holonomy map restricted to the component.
    pub holonomy_rank: usize,
    pub copies_equivalent: bool,
}

impl IsotypicComponent {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_tautological(&self) -> bool {
        self.holonomy_rank > 0
    }

    /// Multiplicity of the irreducible inside the zero-holonomy part.
    pub fn zero_holonomy_multiplicity(&self) -> usize {
        (self.dim() - self.holonomy_rank) / self.irreducible_dim
    }
}

#[derive(Clone, Debug)]
pub struct IsotypicReport {
    pub components: Vec<IsotypicComponent>,
    pub total_dim: usize,
    /// Pairs of components that fail to be Ω-orthogonal.
    pub non_orthogonal: Vec<(usize, usize)>,
}

impl IsotypicReport {
    pub fn covered_dim(&self) -> usize {
        self.components.iter().map(IsotypicComponent::dim).sum()
    }

    pub fn tautological(&self) -> Vec<usize> {
        (0..self.components.len()).filter(|&i| self.components[i].is_tautological()).collect()
    }
}

/// Symmetrized class sums, each paired with the indices it sums over.
pub fn symmetrized_class_sums(rep: &HomRep, classes: &[Vec<usize>]) -> Vec<Matrix> {
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut out = Vec::new();
    for class in classes {
        let inv_first = rep.inverse_index(class[0]);
        let mut merged = class.clone();
        if let Some(inv_class) = classes.iter().find(|c| c.contains(&inv_first)) {
            merged.extend(inv_class.iter().copied());
        }
        merged.sort_unstable();
        merged.dedup();
        if seen.contains(&merged) {
            continue;
        }
        let sum = merged.iter().fold(Matrix::zeros(rep.dim, rep.dim), |acc, &i| &acc + &rep.matrices[i]);
        seen.push(merged);
        out.push(sum);
    }
    out
}

/// Decomposes `rep` into isotypic components.
///
/// `holonomy` is the `2 × dim` matrix of the period map in the representation's coordinates and
/// `omega` the intersection form, used to flag the tautological piece and check orthogonality.
pub fn isotypic_decomposition(rep: &HomRep, classes: &[Vec<usize>], holonomy: &Matrix, omega: Option<&Matrix>) -> Result<IsotypicReport> {
    let n = rep.dim;
    let mut spaces = vec![(Vec::new(), standard_basis(n))];
    for s in symmetrized_class_sums(rep, classes) {
        spaces = split_by(&s, spaces, n)?;
    }
    spaces.sort_by(|a, b| b.0.cmp(&a.0));
    let mut components = Vec::new();
    for (eigs, w) in spaces {
        components.push(analyse_component(rep, eigs, w, holonomy)?);
    }
    let mut non_orthogonal = Vec::new();
    if let Some(omega) = omega {
        for i in 0..components.len() {
            for j in i + 1..components.len() {
                let orth = components[i].basis.iter().all(|a| {
                    let oa = omega.transpose().mul_vec(a);
                    components[j].basis.iter().all(|b| crate::linalg::dot(&oa, b).is_zero())
                });
                if !orth {
                    non_orthogonal.push((i, j));
                }
            }
        }
    }
    let report = IsotypicReport { components, total_dim: n, non_orthogonal };
    if report.covered_dim() != n {
        return Err(Error::DecompositionIncomplete { found: report.covered_dim(), total: n });
    }
    Ok(report)
}

fn analyse_component(rep: &HomRep, eigs: Vec<Q>, w: Vec<Vec<Q>>, holonomy: &Matrix) -> Result<IsotypicComponent> {
    let n = rep.dim;
    let mut copies: Vec<Vec<Vec<Q>>> = Vec::new();
    let mut remaining = w.clone();
    let mut centralizer_dim = 1;
    while !remaining.is_empty() {
        let sub = rep.restrict(&remaining)?;
        let (u, c) = find_irreducible(&sub)?;
        centralizer_dim = c;
        let complement = invariant_complement(&sub, &u)?;
        copies.push(u.iter().map(|v| combine(v, &remaining, n)).collect());
        remaining = complement.iter().map(|v| combine(v, &remaining, n)).collect();
    }
    let basis: Vec<Vec<Q>> = copies.iter().flatten().cloned().collect();
    let irreducible_dim = copies[0].len();
    let first = rep.restrict(&copies[0])?;
    let copies_equivalent = copies[1..].iter().all(|c| {
        rep.restrict(c).ok().and_then(|r| equivalence(&first, &r)).is_some()
    });
    let whole = rep.restrict(&basis)?;
    let block_commutant_dim = intertwiner_space(&whole, &whole).len();
    let hol_images: Vec<Vec<Q>> = basis.iter().map(|v| holonomy.mul_vec(v)).collect();
    let holonomy_rank = independent_subset(&hol_images).len();
    Ok(IsotypicComponent {
        algebra: algebra_from_dim(centralizer_dim)?,
        multiplicity: copies.len(),
        irreducible_dim,
        centralizer_dim,
        block_commutant_dim,
        class_sum_eigenvalues: eigs,
        holonomy_rank,
        copies_equivalent,
        basis,
        copies,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperBound {
    pub dim: usize,
    /// `n` for each factor `Sp(n, R)`.
    pub factors: Vec<usize>,
    pub group_name: String,
}

pub fn sp_dim(n: usize) -> usize {
    n * (n + 1) / 2
}

pub fn group_name(factors: &[usize]) -> String {
    if factors.is_empty() {
        return "trivial".into();
    }
    if factors.iter().all(|&f| f == factors[0]) {
        let base = format!("Sp({},R)", factors[0]);
        return if factors.len() == 1 { base } else { format!("{base}^{}", factors.len()) };
    }
    factors.iter().map(|f| format!("Sp({f},R)")).collect::<Vec<_>>().join(" x ")
}

/// Upper bound on the Zariski closure of the monodromy on the zero-holonomy part: a product of
/// `Sp(n_τ, R)` over the isotypic pieces of real type.
pub fn myz_upper_bound(report: &IsotypicReport) -> Result<UpperBound> {
    let mut factors = Vec::new();
    for c in &report.components {
        let m = c.zero_holonomy_multiplicity();
        if m == 0 {
            continue;
        }
        if c.algebra != DivisionAlgebra::R {
            return Err(Error::UnsupportedAlgebraType(c.algebra.to_string()));
        }
        factors.push(m);
    }
    factors.sort_unstable_by(|a, b| b.cmp(a));
    Ok(UpperBound { dim: factors.iter().map(|&f| sp_dim(f)).sum(), group_name: group_name(&factors), factors })
}
