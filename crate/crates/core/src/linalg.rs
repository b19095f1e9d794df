//! Dense exact-rational matrices and the elimination routines built on them.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    let mut acc = Q::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Q], c: &Q, v: &[Q]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

/// Linear combination `Σ coeffs[i] · vectors[i]`.
pub fn combine(coeffs: &[Q], vectors: &[Vec<Q>], len: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        add_scaled(&mut out, c, v);
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.as_ref().iter().map(|&x| q(x)).collect()).collect())
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Q>], rows: usize) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> Vec<Q> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Q>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Row-major flattening, used as the vectorization of a matrix.
    pub fn as_slice(&self) -> &[Q] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        let support: Vec<usize> = (0..v.len()).filter(|&j| !v[j].is_zero()).collect();
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let mut acc = Q::zero();
                for &j in &support {
                    if !row[j].is_zero() {
                        acc += &row[j] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn pow(&self, k: u32) -> Matrix {
        let mut acc = Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// `self · other − other · self`.
    pub fn bracket(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (r, p, _) = self.rref_impl(false);
        (r, p)
    }

    /// Reduced row echelon form `R`, pivots, and an invertible `E` with `E · self = R`.
    pub fn rref_with_transform(&self) -> (Matrix, Vec<usize>, Matrix) {
        let (r, p, e) = self.rref_impl(true);
        (r, p, e.expect("transform requested"))
    }

    fn rref_impl(&self, track: bool) -> (Matrix, Vec<usize>, Option<Matrix>) {
        let mut m = self.clone();
        let mut e = track.then(|| Matrix::identity(self.rows));
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            m.swap_rows(r, p);
            if let Some(e) = e.as_mut() {
                e.swap_rows(r, p);
            }
            let inv = m[(r, c)].recip();
            m.scale_row(r, &inv);
            if let Some(e) = e.as_mut() {
                e.scale_row(r, &inv);
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    m.sub_row_multiple(i, r, &f);
                    if let Some(e) = e.as_mut() {
                        e.sub_row_multiple(i, r, &f);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots, e)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: &Q) {
        for x in &mut self.data[i * self.cols..(i + 1) * self.cols] {
            *x *= c;
        }
    }

    /// row[i] -= f * row[r]
    fn sub_row_multiple(&mut self, i: usize, r: usize, f: &Q) {
        for j in 0..self.cols {
            let v = &self.data[r * self.cols + j];
            if !v.is_zero() {
                let d = f * v;
                self.data[i * self.cols + j] -= d;
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self · x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let (_, pivots, e) = self.rref_with_transform();
        (pivots.len() == self.rows).then_some(e)
    }

    pub fn det(&self) -> Q {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else { return Q::zero() };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for i in c + 1..n {
                if !m[(i, c)].is_zero() {
                    let f = &m[(i, c)] / &pivot;
                    m.sub_row_multiple(i, c, &f);
                }
            }
        }
        det
    }

    /// One solution of `self · x = b`, if any.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        Solver::new(self).solve(b)
    }

    /// Block matrix `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Sub-matrix with the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|&i| cols.iter().map(|&j| self[(i, j)].clone()).collect()).collect())
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(fmt_q).collect()).collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(fmt_q).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.to_strings();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let row: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Precomputed elimination for repeatedly solving `A x = b` with a fixed `A`.
#[derive(Clone, Debug)]
pub struct Solver {
    transform: Matrix,
    pivots: Vec<usize>,
    cols: usize,
}

impl Solver {
    pub fn new(a: &Matrix) -> Self {
        let (_, pivots, transform) = a.rref_with_transform();
        Solver { transform, pivots, cols: a.cols() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The solution with all free variables set to zero, or `None` when inconsistent.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        let y = self.transform.mul_vec(b);
        if !is_zero_vec(&y[self.pivots.len()..]) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (row, &p) in self.pivots.iter().enumerate() {
            x[p] = y[row].clone();
        }
        Some(x)
    }
}

/// Integer vector with content removed and first nonzero entry positive.
fn primitive(v: &[Q]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(lcm.clone())).to_integer()).collect();
    normalize_content(&mut ints);
    ints
}

fn normalize_content(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return;
    }
    let sign = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x = &*x / &g;
        if sign {
            *x = -&*x;
        }
    }
}

/// Incremental rank tracker using fraction-free elimination on integer rows.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<(usize, Vec<BigInt>)>,
    len: usize,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis { rows: Vec::new(), len }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    fn reduce(&self, v: &[Q]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.len);
        let mut w = primitive(v);
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let a = row[*p].clone();
            let b = w[*p].clone();
            for (x, r) in w.iter_mut().zip(row) {
                *x = &a * &*x - &b * r;
            }
            normalize_content(&mut w);
        }
        w
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns whether the rank increased.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let w = self.reduce(v);
        match w.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, w));
                true
            }
            None => false,
        }
    }
}

/// Rank of a family of vectors.
pub fn rank_of(vectors: &[Vec<Q>]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    let mut e = EchelonBasis::new(first.len());
    vectors.iter().filter(|v| e.insert(v)).count()
}

/// A maximal independent subfamily, in order.
pub fn independent_subset(vectors: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let Some(first) = vectors.first() else { return Vec::new() };
    let mut e = EchelonBasis::new(first.len());
    vectors.iter().filter(|v| e.insert(v)).cloned().collect()
}

/// Basis of the intersection of two subspaces given by spanning vectors.
pub fn intersect(a: &[Vec<Q>], b: &[Vec<Q>], len: usize) -> Vec<Vec<Q>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let ma = Matrix::from_columns(a, len);
    let mb = Matrix::from_columns(b, len);
    let joint = ma.hstack(&(-&mb));
    let kernel = joint.nullspace();
    let vs: Vec<Vec<Q>> = kernel.iter().map(|k| combine(&k[..a.len()], a, len)).collect();
    independent_subset(&vs)
}

/// Coordinates of `v` in an independent family, or `None` if outside its span.
pub fn coordinates(v: &[Q], basis: &[Vec<Q>]) -> Option<Vec<Q>> {
    if basis.is_empty() {
        return is_zero_vec(v).then(Vec::new);
    }
    Matrix::from_columns(basis, v.len()).solve(v)
}
