use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::sl2z::Letter;

/// A connected square-tiled surface: square `i` has right neighbour `σ_h(i)` and top neighbour `σ_v(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Origami {
    h: Permutation,
    v: Permutation,
}

impl Origami {
    pub fn new(sigma_h: Permutation, sigma_v: Permutation) -> Result<Self> {
        if sigma_h.len() != sigma_v.len() {
            return Err(Error::LengthMismatch(sigma_h.len(), sigma_v.len()));
        }
        if sigma_h.is_empty() {
            return Err(Error::Input("an origami needs at least one square".into()));
        }
        let o = Origami { h: sigma_h, v: sigma_v };
        let reached = o.reachable_from(0);
        if reached != o.n() {
            return Err(Error::Disconnected(reached, o.n()));
        }
        Ok(o)
    }

    /// Parses 1-based cycle strings such as `"(1,2)(3)"`.
    pub fn from_cycle_strings(n: usize, h: &str, v: &str) -> Result<Self> {
        Origami::new(Permutation::parse_cycles(n, h)?, Permutation::parse_cycles(n, v)?)
    }

    pub fn torus() -> Self {
        Origami { h: Permutation::identity(1), v: Permutation::identity(1) }
    }

    fn reachable_from(&self, s: usize) -> usize {
        let mut seen = vec![false; self.n()];
        seen[s] = true;
        let mut stack = vec![s];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in [self.h.apply(x), self.v.apply(x)] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }

    pub fn n(&self) -> usize {
        self.h.len()
    }

    pub fn sigma_h(&self) -> &Permutation {
        &self.h
    }

    pub fn sigma_v(&self) -> &Permutation {
        &self.v
    }

    /// The image under one letter, with the squares keeping their labels.
    pub fn apply_letter_raw(&self, letter: Letter) -> Origami {
        let (h, v) = (&self.h, &self.v);
        let (h, v) = match letter {
            Letter::T => (h.clone(), v.compose(&h.inverse())),
            Letter::TInv => (h.clone(), v.compose(h)),
            Letter::S => (h.compose(&v.inverse()), v.clone()),
            Letter::SInv => (h.compose(v), v.clone()),
        };
        Origami { h, v }
    }

    /// Simultaneous conjugation `(φσ_hφ⁻¹, φσ_vφ⁻¹)`.
    pub fn relabel(&self, phi: &Permutation) -> Origami {
        Origami { h: phi.conjugate(&self.h), v: phi.conjugate(&self.v) }
    }

    fn bfs_labeling(&self, start: usize) -> Permutation {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        label[start] = 0;
        let mut next = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for y in [self.h.apply(x), self.v.apply(x)] {
                if label[y] == usize::MAX {
                    label[y] = next;
                    next += 1;
                    queue.push_back(y);
                }
            }
        }
        Permutation::from_images(label).expect("connected surface gives a full labeling")
    }

    /// Lexicographically least relabeling over breadth-first labelings from every square,
    /// together with the relabeling `φ` (old label ↦ new label).
    pub fn canonical_form(&self) -> (Origami, Permutation) {
        let mut best: Option<(Origami, Permutation)> = None;
        for s in 0..self.n() {
            let phi = self.bfs_labeling(s);
            let cand = self.relabel(&phi);
            let better = match &best {
                None => true,
                Some((b, _)) => (cand.h.images(), cand.v.images()) < (b.h.images(), b.v.images()),
            };
            if better {
                best = Some((cand, phi));
            }
        }
        best.expect("at least one square")
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical_form().0 == *self
    }

    /// All `ψ` with `ψ σ^self ψ⁻¹ = σ^other`, ordered by `ψ(0)`.
    pub fn isomorphisms(&self, other: &Origami) -> Vec<Permutation> {
        if self.n() != other.n() {
            return Vec::new();
        }
        (0..self.n()).filter_map(|j| self.isomorphism_from(other, j)).collect()
    }

    /// The isomorphism with `ψ(0) = j`, if it exists.
    pub fn isomorphism_from(&self, other: &Origami, j: usize) -> Option<Permutation> {
        let n = self.n();
        let mut psi = vec![usize::MAX; n];
        let mut used = vec![false; n];
        psi[0] = j;
        used[j] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            let px = psi[x];
            for (a, b) in [(self.h.apply(x), other.h.apply(px)), (self.v.apply(x), other.v.apply(px))] {
                if psi[a] == usize::MAX {
                    if used[b] {
                        return None;
                    }
                    psi[a] = b;
                    used[b] = true;
                    stack.push(a);
                } else if psi[a] != b {
                    return None;
                }
            }
        }
        Permutation::from_images(psi).ok()
    }

    pub fn first_isomorphism(&self, other: &Origami) -> Option<Permutation> {
        if self.n() != other.n() {
            return None;
        }
        (0..self.n()).find_map(|j| self.isomorphism_from(other, j))
    }

    pub fn is_isomorphic(&self, other: &Origami) -> bool {
        self.first_isomorphism(other).is_some()
    }

    pub fn corner_complex(&self) -> CornerComplex {
        CornerComplex::new(self)
    }

    pub fn genus(&self) -> usize {
        self.corner_complex().genus()
    }

    /// Orders of the zeros of the abelian differential (cone angle `2π(k+1)`), omitting regular points.
    pub fn singularity_profile(&self) -> Vec<usize> {
        let mut ks: Vec<usize> = self
            .corner_complex()
            .vertex_classes
            .iter()
            .map(|c| c.len() / 4 - 1)
            .filter(|&k| k > 0)
            .collect();
        ks.sort_unstable_by(|a, b| b.cmp(a));
        ks
    }
}

impl fmt::Display for Origami {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} σ_h={} σ_v={}", self.n(), self.h, self.v)
    }
}

impl fmt::Debug for Origami {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Origami({self})")
    }
}

/// Corner positions within a square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corner {
    BottomLeft = 0,
    BottomRight = 1,
    TopRight = 2,
    TopLeft = 3,
}

pub fn corner_id(square: usize, c: Corner) -> usize {
    4 * square + c as usize
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Vertices of the square cell structure as classes of square corners.
#[derive(Clone, Debug)]
pub struct CornerComplex {
    pub vertex_classes: Vec<Vec<usize>>,
    vertex_of_corner: Vec<usize>,
    pub edge_count: usize,
    pub face_count: usize,
}

impl CornerComplex {
    fn new(o: &Origami) -> Self {
        use Corner::*;
        let n = o.n();
        let mut uf = UnionFind((0..4 * n).collect());
        for i in 0..n {
            let (hi, vi) = (o.h.apply(i), o.v.apply(i));
            uf.union(corner_id(i, TopLeft), corner_id(vi, BottomLeft));
            uf.union(corner_id(i, TopRight), corner_id(vi, BottomRight));
            uf.union(corner_id(i, BottomRight), corner_id(hi, BottomLeft));
            uf.union(corner_id(i, TopRight), corner_id(hi, TopLeft));
        }
        let mut class_index = vec![usize::MAX; 4 * n];
        let mut vertex_classes: Vec<Vec<usize>> = Vec::new();
        let mut vertex_of_corner = vec![0; 4 * n];
        for c in 0..4 * n {
            let r = uf.find(c);
            if class_index[r] == usize::MAX {
                class_index[r] = vertex_classes.len();
                vertex_classes.push(Vec::new());
            }
            vertex_classes[class_index[r]].push(c);
            vertex_of_corner[c] = class_index[r];
        }
        CornerComplex { vertex_classes, vertex_of_corner, edge_count: 2 * n, face_count: n }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_classes.len()
    }

    pub fn vertex_of(&self, square: usize, c: Corner) -> usize {
        self.vertex_of_corner[corner_id(square, c)]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count as i64 + self.face_count as i64
    }

    pub fn genus(&self) -> usize {
        ((2 - self.euler_characteristic()) / 2) as usize
    }
}

/// Permutation given in a surface file.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PermSpec {
    Cycles(Vec<Vec<usize>>),
    OneLine(Vec<usize>),
}

impl PermSpec {
    fn build(&self, n: usize) -> Result<Permutation> {
        let p = match self {
            PermSpec::Cycles(c) => Permutation::from_cycles(n, c)?,
            PermSpec::OneLine(l) => Permutation::from_one_line(l)?,
        };
        if p.len() != n {
            return Err(Error::LengthMismatch(p.len(), n));
        }
        Ok(p)
    }
}

/// On-disk surface description: `{"n": N, "sigma_h": {"cycles": [...]}, "sigma_v": {"one_line": [...]}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurfaceFile {
    pub n: usize,
    pub sigma_h: PermSpec,
    pub sigma_v: PermSpec,
}

impl SurfaceFile {
    pub fn from_json(s: &str) -> Result<Origami> {
        let f: SurfaceFile = serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))?;
        f.build()
    }

    pub fn build(&self) -> Result<Origami> {
        Origami::new(self.sigma_h.build(self.n)?, self.sigma_v.build(self.n)?)
    }

    pub fn from_origami(o: &Origami) -> Self {
        SurfaceFile {
            n: o.n(),
            sigma_h: PermSpec::Cycles(o.sigma_h().cycles_one_based()),
            sigma_v: PermSpec::Cycles(o.sigma_v().cycles_one_based()),
        }
    }
}
