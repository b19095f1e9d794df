//! Cellular first homology of an origami over `Q`.
//!
//! Chains live on the `2N` edges: index `i` is `h_i` (bottom edge of square `i`, pointing right)
//! and `N + i` is `v_i` (left edge of square `i`, pointing up).

use std::collections::VecDeque;

use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, is_zero_vec, q, Matrix, Solver, Q};
use crate::origami::{Corner, Origami};

pub type ChainVector = Vec<Q>;

pub fn h_index(i: usize) -> usize {
    i
}

pub fn v_index(n: usize, i: usize) -> usize {
    n + i
}

/// Edge-end at a vertex: the edge and whether it leaves the vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct EdgeEnd {
    edge: usize,
    out: bool,
}

/// Position of an edge-end in the rotation system: (vertex, index in its cyclic list).
type EndPos = (usize, usize);

#[derive(Clone, Debug)]
pub struct HomologyBasis {
    origami: Origami,
    /// Integral cycles spanning `H₁(X;Z)`.
    pub cycles: Vec<ChainVector>,
    /// Boundaries of the squares, `h_i + v_{σ_h(i)} − h_{σ_v(i)} − v_i`.
    pub face_relations: Vec<ChainVector>,
    /// `∂₁` as a `V × 2N` matrix.
    pub vertex_boundary: Matrix,
    rotation: Vec<Vec<EdgeEnd>>,
    out_pos: Vec<EndPos>,
    in_pos: Vec<EndPos>,
}

impl HomologyBasis {
    pub fn new(o: &Origami) -> Self {
        let n = o.n();
        let (h, v) = (o.sigma_h(), o.sigma_v());
        let cc = o.corner_complex();
        let nv = cc.vertex_count();
        let bl = |i: usize| cc.vertex_of(i, Corner::BottomLeft);

        let mut tail = vec![0; 2 * n];
        let mut head = vec![0; 2 * n];
        for i in 0..n {
            tail[h_index(i)] = bl(i);
            head[h_index(i)] = bl(h.apply(i));
            tail[v_index(n, i)] = bl(i);
            head[v_index(n, i)] = bl(v.apply(i));
        }
        let mut vertex_boundary = Matrix::zeros(nv, 2 * n);
        for e in 0..2 * n {
            vertex_boundary[(head[e], e)] += Q::one();
            vertex_boundary[(tail[e], e)] -= Q::one();
        }

        let face_relations = (0..n)
            .map(|i| {
                let mut f = vec![Q::zero(); 2 * n];
                f[h_index(i)] += Q::one();
                f[v_index(n, h.apply(i))] += Q::one();
                f[h_index(v.apply(i))] -= Q::one();
                f[v_index(n, i)] -= Q::one();
                f
            })
            .collect();

        let (rotation, out_pos, in_pos) = rotation_system(o, nv, &bl);
        let cycles = tree_cotree_cycles(o, nv, &tail, &head);
        HomologyBasis { origami: o.clone(), cycles, face_relations, vertex_boundary, rotation, out_pos, in_pos }
    }

    pub fn origami(&self) -> &Origami {
        &self.origami
    }

    pub fn n(&self) -> usize {
        self.origami.n()
    }

    pub fn rank(&self) -> usize {
        self.cycles.len()
    }

    pub fn genus(&self) -> usize {
        self.cycles.len() / 2
    }

    pub fn zero_chain(&self) -> ChainVector {
        vec![Q::zero(); 2 * self.n()]
    }

    pub fn boundary(&self, c: &[Q]) -> Vec<Q> {
        self.vertex_boundary.mul_vec(c)
    }

    pub fn is_cycle(&self, c: &[Q]) -> bool {
        c.len() == 2 * self.n() && is_zero_vec(&self.boundary(c))
    }

    /// The algebraic intersection number `⟨a, b⟩`, normalized so that `⟨h, v⟩ = 1` on the torus.
    pub fn intersection(&self, a: &[Q], b: &[Q]) -> Result<Q> {
        if !self.is_cycle(a) || !self.is_cycle(b) {
            return Err(Error::NonCycleInput);
        }
        // Prefix sums of a's signed edge-ends around each vertex.
        let flow = |end: &EdgeEnd| -> Q {
            let c = &a[end.edge];
            if end.out {
                c.clone()
            } else {
                -c
            }
        };
        let prefix: Vec<Vec<Q>> = self
            .rotation
            .iter()
            .map(|ends| {
                let mut acc = Q::zero();
                ends.iter()
                    .map(|e| {
                        let before = acc.clone();
                        acc += flow(e);
                        before
                    })
                    .collect()
            })
            .collect();
        let mut raw = Q::zero();
        for (e, c) in b.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (vo, po) = self.out_pos[e];
            let (vi, pi) = self.in_pos[e];
            let term = &prefix[vi][pi] - &prefix[vo][po] - flow(&self.rotation[vo][po]);
            raw += c * term;
        }
        Ok(-raw)
    }

    pub fn intersection_form(&self, basis: &[ChainVector]) -> Result<Matrix> {
        let k = basis.len();
        let mut m = Matrix::zeros(k, k);
        for i in 0..k {
            for j in i + 1..k {
                let x = self.intersection(&basis[i], &basis[j])?;
                m[(j, i)] = -x.clone();
                m[(i, j)] = x;
            }
        }
        Ok(m)
    }

    /// Coordinate system for a family of cycles, modulo boundaries.
    pub fn coordinates(&self, basis: &[ChainVector]) -> BasisCoordinates {
        BasisCoordinates::new(self, basis)
    }

    pub fn express_in_basis(&self, c: &[Q], basis: &[ChainVector]) -> Result<Vec<Q>> {
        self.coordinates(basis).express(c)
    }

    /// Integral cycles spanning the kernel of holonomy.
    pub fn zero_holonomy_basis(&self) -> Vec<ChainVector> {
        let k = self.cycles.len();
        let mut hol = Matrix::zeros(2, k);
        for (j, c) in self.cycles.iter().enumerate() {
            let (x, y) = holonomy(c, self.n());
            hol[(0, j)] = x;
            hol[(1, j)] = y;
        }
        hol.nullspace()
            .into_iter()
            .map(|coeffs| {
                let coeffs = primitive_integers(&coeffs);
                linalg::combine(&coeffs, &self.cycles, 2 * self.n())
            })
            .collect()
    }
}

fn primitive_integers(v: &[Q]) -> Vec<Q> {
    let l = v.iter().fold(num::BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<num::BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(num::BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if g.is_zero() { num::BigInt::one() } else { g };
    ints.into_iter().map(|x| Q::from_integer(x / &g)).collect()
}

/// Counter-clockwise cyclic order of edge-ends around every vertex, starting from an eastward edge.
fn rotation_system(o: &Origami, nv: usize, bl: &dyn Fn(usize) -> usize) -> (Vec<Vec<EdgeEnd>>, Vec<EndPos>, Vec<EndPos>) {
    let n = o.n();
    let (h, v) = (o.sigma_h(), o.sigma_v());
    let (hinv, vinv) = (h.inverse(), v.inverse());
    let mut rotation: Vec<Vec<EdgeEnd>> = vec![Vec::new(); nv];
    let mut visited = vec![false; n];
    let mut out_pos = vec![(0, 0); 2 * n];
    let mut in_pos = vec![(0, 0); 2 * n];
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let vert = bl(start);
        let mut j = start;
        loop {
            visited[j] = true;
            let a = hinv.apply(j);
            let c = h.apply(vinv.apply(a));
            let ends = [
                EdgeEnd { edge: h_index(j), out: true },
                EdgeEnd { edge: v_index(n, j), out: true },
                EdgeEnd { edge: h_index(a), out: false },
                EdgeEnd { edge: v_index(n, c), out: false },
            ];
            for e in ends {
                let pos = (vert, rotation[vert].len());
                if e.out {
                    out_pos[e.edge] = pos;
                } else {
                    in_pos[e.edge] = pos;
                }
                rotation[vert].push(e);
            }
            j = v.apply(c);
            if j == start {
                break;
            }
        }
    }
    (rotation, out_pos, in_pos)
}

/// Fundamental cycles of the edges outside a spanning tree and a dual spanning cotree.
fn tree_cotree_cycles(o: &Origami, nv: usize, tail: &[usize], head: &[usize]) -> Vec<ChainVector> {
    let n = o.n();
    let ne = 2 * n;
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for e in 0..ne {
        incident[tail[e]].push(e);
        if head[e] != tail[e] {
            incident[head[e]].push(e);
        }
    }
    let mut in_tree = vec![false; ne];
    let mut path: Vec<Option<ChainVector>> = vec![None; nv];
    path[0] = Some(vec![Q::zero(); ne]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &e in &incident[x] {
            let (y, sign) = if tail[e] == x { (head[e], 1) } else { (tail[e], -1) };
            if path[y].is_none() {
                let mut p = path[x].clone().expect("visited");
                p[e] += q(sign);
                path[y] = Some(p);
                in_tree[e] = true;
                queue.push_back(y);
            }
        }
    }

    // Dual graph: h_i separates squares i and σ_v⁻¹(i); v_i separates i and σ_h⁻¹(i).
    let (hinv, vinv) = (o.sigma_h().inverse(), o.sigma_v().inverse());
    let sides = |e: usize| if e < n { (e, vinv.apply(e)) } else { (e - n, hinv.apply(e - n)) };
    let mut in_cotree = vec![false; ne];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    let mut dual_incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in 0..ne {
        let (a, b) = sides(e);
        dual_incident[a].push(e);
        if a != b {
            dual_incident[b].push(e);
        }
    }
    while let Some(f) = queue.pop_front() {
        for &e in &dual_incident[f] {
            if in_tree[e] {
                continue;
            }
            let (a, b) = sides(e);
            let g = if a == f { b } else { a };
            if !seen[g] {
                seen[g] = true;
                in_cotree[e] = true;
                queue.push_back(g);
            }
        }
    }

    let path = |x: usize| path[x].as_ref().expect("spanning tree reaches every vertex");
    (0..ne)
        .filter(|&e| !in_tree[e] && !in_cotree[e])
        .map(|e| {
            let mut c: ChainVector = path(tail[e]).iter().zip(path(head[e])).map(|(a, b)| a - b).collect();
            c[e] += Q::one();
            c
        })
        .collect()
}

/// `(Σ h-coefficients, Σ v-coefficients)`.
pub fn holonomy(c: &[Q], n: usize) -> (Q, Q) {
    let sum = |s: &[Q]| s.iter().fold(Q::zero(), |acc, x| acc + x);
    (sum(&c[..n]), sum(&c[n..2 * n]))
}

/// The closed straight line in primitive direction `(p, q)` through the centre-left of square `start`.
///
/// Each strip crossed contributes its horizontal edges first, then one vertical edge.
pub fn straight_curve(o: &Origami, start: usize, direction: (i64, i64)) -> ChainVector {
    let n = o.n();
    let (p, qd) = direction;
    assert!(p != 0 || qd != 0, "direction must be nonzero");
    assert_eq!(p.gcd(&qd), 1, "direction must be primitive");
    let (h, v) = (o.sigma_h(), o.sigma_v());
    let hinv = h.inverse();
    let mut c = vec![Q::zero(); 2 * n];
    if qd == 0 {
        let mut s = start;
        loop {
            if p > 0 {
                c[h_index(s)] += Q::one();
                s = h.apply(s);
            } else {
                s = hinv.apply(s);
                c[h_index(s)] -= Q::one();
            }
            if s == start {
                return c;
            }
        }
    }
    if qd < 0 {
        return straight_curve(o, start, (-p, -qd)).into_iter().map(|x| -x).collect();
    }
    // Offsets are tracked in units of 1/(2q) to stay in integers.
    let den = 2 * qd;
    let f0 = 1;
    let (mut s, mut f) = (start, f0);
    loop {
        let x = f + 2 * p;
        let m = x.div_euclid(den);
        let mut t = s;
        if m > 0 {
            for _ in 0..m {
                c[h_index(t)] += Q::one();
                t = h.apply(t);
            }
        } else {
            for _ in 0..(-m) {
                t = hinv.apply(t);
                c[h_index(t)] -= Q::one();
            }
        }
        c[v_index(n, t)] += Q::one();
        s = v.apply(t);
        f = x - m * den;
        if s == start && f == f0 {
            return c;
        }
    }
}

/// Solves for coordinates of cycles in a fixed family, modulo the face relations.
#[derive(Clone, Debug)]
pub struct BasisCoordinates {
    k: usize,
    solver: Solver,
    independent: bool,
    boundary: Matrix,
}

impl BasisCoordinates {
    fn new(hb: &HomologyBasis, basis: &[ChainVector]) -> Self {
        let len = 2 * hb.n();
        let mut cols: Vec<ChainVector> = basis.to_vec();
        cols.extend(hb.face_relations.iter().cloned());
        let a = Matrix::from_columns(&cols, len);
        let solver = Solver::new(&a);
        let face_rank = hb.n() - 1;
        let independent = solver.rank() == basis.len() + face_rank;
        BasisCoordinates { k: basis.len(), solver, independent, boundary: hb.vertex_boundary.clone() }
    }

    /// Whether the family is linearly independent in homology.
    pub fn is_independent(&self) -> bool {
        self.independent
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn express(&self, c: &[Q]) -> Result<Vec<Q>> {
        if !is_zero_vec(&self.boundary.mul_vec(c)) {
            return Err(Error::NonCycleInput);
        }
        let x = self.solver.solve(c).ok_or(Error::NotInSpan)?;
        Ok(x[..self.k].to_vec())
    }
}

pub fn is_integral_chain(c: &[Q]) -> bool {
    c.iter().all(|x| x.is_integer())
}

/// Human-readable chain, e.g. `h1 + v3 - 1/2 h4`.
pub fn format_chain(c: &[Q], n: usize) -> String {
    let mut parts = Vec::new();
    for (e, x) in c.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let name = if e < n { format!("h{}", e + 1) } else { format!("v{}", e - n + 1) };
        let sign = if x.is_negative() { "-" } else { "+" };
        let abs = x.abs();
        let coeff = if abs.is_one() { String::new() } else { format!("{} ", linalg::fmt_q(&abs)) };
        parts.push(format!("{sign} {coeff}{name}"));
    }
    if parts.is_empty() {
        return "0".into();
    }
    let s = parts.join(" ");
    s.strip_prefix("+ ").map(str::to_string).unwrap_or(s)
}
