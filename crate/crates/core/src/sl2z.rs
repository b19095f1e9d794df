//! Words in `T = [[1,1],[0,1]]`, `S = [[1,0],[1,1]]` and coset enumeration in `SL(2,Z)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    T,
    S,
    TInv,
    SInv,
}

impl Letter {
    /// Generators before inverses.
    pub const ALL: [Letter; 4] = [Letter::T, Letter::S, Letter::TInv, Letter::SInv];

    pub fn inverse(self) -> Letter {
        match self {
            Letter::T => Letter::TInv,
            Letter::TInv => Letter::T,
            Letter::S => Letter::SInv,
            Letter::SInv => Letter::S,
        }
    }

    pub fn matrix(self) -> Mat2 {
        match self {
            Letter::T => Mat2([[1, 1], [0, 1]]),
            Letter::TInv => Mat2([[1, -1], [0, 1]]),
            Letter::S => Mat2([[1, 0], [1, 1]]),
            Letter::SInv => Mat2([[1, 0], [-1, 1]]),
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::T => "T",
            Letter::S => "S",
            Letter::TInv => "T⁻¹",
            Letter::SInv => "S⁻¹",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mat2(pub [[i64; 2]; 2]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[1, 0], [0, 1]]);

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let (a, b) = (self.0, o.0);
        Mat2([
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ])
    }

    pub fn det(&self) -> i64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn apply(&self, (x, y): (i64, i64)) -> (i64, i64) {
        (self.0[0][0] * x + self.0[0][1] * y, self.0[1][0] * x + self.0[1][1] * y)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.0;
        write!(f, "[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

/// A word in the letters, read as a matrix product (the rightmost letter acts first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        GroupWord { letters }
    }

    pub fn empty() -> Self {
        GroupWord::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn matrix(&self) -> Mat2 {
        self.letters.iter().fold(Mat2::IDENTITY, |acc, l| acc.mul(&l.matrix()))
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// `self · other`.
    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GroupWord { letters }.reduced()
    }

    pub fn pow(&self, k: usize) -> GroupWord {
        GroupWord { letters: self.letters.repeat(k) }.reduced()
    }

    /// Free cancellation of adjacent inverse pairs.
    pub fn reduced(mut self) -> GroupWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for l in self.letters.drain(..) {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupWord { letters: out }
    }

    /// A word with the given matrix, found by the Euclidean algorithm on the first column.
    pub fn from_matrix(m: Mat2) -> Result<GroupWord> {
        if m.det() != 1 {
            return Err(Error::Input(format!("{m} is not in SL(2,Z)")));
        }
        let mut cur = m.0;
        // cur = ops · m; `prefix` accumulates ops⁻¹ so that m = prefix · cur.
        let mut prefix: Vec<Letter> = Vec::new();
        while cur[1][0] != 0 {
            let (a, c) = (cur[0][0], cur[1][0]);
            if a == 0 {
                // row1 += row2
                cur[0][0] += cur[1][0];
                cur[0][1] += cur[1][1];
                prefix.push(Letter::TInv);
            } else if a.abs() > c.abs() {
                let q = a / c;
                cur[0][0] -= q * cur[1][0];
                cur[0][1] -= q * cur[1][1];
                prefix.extend(std::iter::repeat_n(if q > 0 { Letter::T } else { Letter::TInv }, q.unsigned_abs() as usize));
            } else {
                let q = c / a;
                cur[1][0] -= q * cur[0][0];
                cur[1][1] -= q * cur[0][1];
                prefix.extend(std::iter::repeat_n(if q > 0 { Letter::S } else { Letter::SInv }, q.unsigned_abs() as usize));
            }
        }
        let (a, b) = (cur[0][0], cur[0][1]);
        let mut tail = Vec::new();
        let b = if a == -1 {
            tail.extend(minus_identity().letters);
            -b
        } else {
            b
        };
        tail.extend(std::iter::repeat_n(if b > 0 { Letter::T } else { Letter::TInv }, b.unsigned_abs() as usize));
        prefix.extend(tail);
        let w = GroupWord { letters: prefix }.reduced();
        debug_assert_eq!(w.matrix(), m);
        Ok(w)
    }
}

/// `(T S⁻¹ T)² = −I`.
pub fn minus_identity() -> GroupWord {
    use Letter::*;
    GroupWord::new(vec![T, SInv, T, T, SInv, T])
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    /// Accepts `T`, `S`, `t`/`s` for inverses, and `T⁻¹`, `T^-1` forms.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace() && *c != '*' && *c != '·').collect();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let base = match chars[i] {
                'T' => Letter::T,
                'S' => Letter::S,
                't' => Letter::TInv,
                's' => Letter::SInv,
                '1' if chars.len() == 1 => break,
                c => return Err(Error::Input(format!("unexpected `{c}` in word `{s}`"))),
            };
            i += 1;
            let rest: String = chars[i..].iter().take(3).collect();
            let inv = if rest.starts_with("⁻¹") {
                i += 2;
                true
            } else if rest.starts_with("^-1") {
                i += 3;
                true
            } else {
                false
            };
            letters.push(if inv { base.inverse() } else { base });
        }
        Ok(GroupWord { letters })
    }
}

impl Serialize for GroupWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Relators of `SL(2,Z) = ⟨T, S | T S⁻¹ T = S⁻¹ T S⁻¹, (T S⁻¹ T)⁴ = 1⟩`.
pub fn relators() -> Vec<GroupWord> {
    use Letter::*;
    vec![GroupWord::new(vec![T, SInv, T, S, TInv, S]), minus_identity().pow(2)]
}

const UNDEF: usize = usize::MAX;

/// Completed coset table of a finite-index subgroup `H`, cosets acted on from the right.
#[derive(Clone, Debug)]
pub struct CosetTable {
    table: Vec<[usize; 4]>,
}

impl CosetTable {
    /// Haselgrove–Leech–Trotter enumeration of the right cosets of `⟨gens⟩`.
    pub fn enumerate(gens: &[GroupWord], max_cosets: usize) -> Result<CosetTable> {
        let mut e = Enumerator { table: vec![[UNDEF; 4]], parent: vec![0], queue: Vec::new(), max_cosets };
        for w in gens {
            e.scan_and_fill(0, w.letters())?;
        }
        let rels = relators();
        let mut a = 0;
        while a < e.table.len() {
            if e.parent[a] == a {
                for r in &rels {
                    if e.parent[a] != a {
                        break;
                    }
                    e.scan_and_fill(a, r.letters())?;
                }
                for x in 0..4 {
                    if e.parent[a] == a && e.table[a][x] == UNDEF {
                        e.define(a, x)?;
                    }
                }
            }
            a += 1;
        }
        Ok(e.compress())
    }

    pub fn index(&self) -> usize {
        self.table.len()
    }

    /// The coset `H · w`.
    pub fn trace(&self, w: &GroupWord) -> usize {
        w.letters().iter().fold(0, |c, l| self.table[c][l.index()])
    }

    pub fn contains(&self, w: &GroupWord) -> bool {
        self.trace(w) == 0
    }
}

struct Enumerator {
    table: Vec<[usize; 4]>,
    parent: Vec<usize>,
    queue: Vec<usize>,
    max_cosets: usize,
}

fn inv_col(x: usize) -> usize {
    (x + 2) % 4
}

impl Enumerator {
    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        if self.table.len() >= self.max_cosets {
            return Err(Error::CosetLimit(self.max_cosets));
        }
        let n = self.table.len();
        self.table.push([UNDEF; 4]);
        self.parent.push(n);
        self.table[c][x] = n;
        self.table[n][inv_col(x)] = c;
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = c;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn merge(&mut self, k: usize, l: usize) {
        let (k, l) = (self.rep(k), self.rep(l));
        if k == l {
            return;
        }
        let (m, n) = (k.min(l), k.max(l));
        self.parent[n] = m;
        self.queue.push(n);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..4 {
                let f = self.table[e][x];
                if f == UNDEF {
                    continue;
                }
                if self.table[f][inv_col(x)] == e {
                    self.table[f][inv_col(x)] = UNDEF;
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                if self.table[e1][x] != UNDEF {
                    let t = self.table[e1][x];
                    self.merge(f1, t);
                } else if self.table[f1][inv_col(x)] != UNDEF {
                    let t = self.table[f1][inv_col(x)];
                    self.merge(e1, t);
                } else {
                    self.table[e1][x] = f1;
                    self.table[f1][inv_col(x)] = e1;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[Letter]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let cols: Vec<usize> = w.iter().map(|l| l.index()).collect();
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, cols.len() - 1);
        loop {
            while i <= j && self.table[f][cols[i]] != UNDEF {
                f = self.table[f][cols[i]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.table[b][inv_col(cols[j])] != UNDEF {
                b = self.table[b][inv_col(cols[j])];
                if j == 0 {
                    // whole word scanned backwards
                    if f != b {
                        self.coincidence(f, b);
                    }
                    return Ok(());
                }
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            } else if i == j {
                self.table[f][cols[i]] = b;
                self.table[b][inv_col(cols[i])] = f;
                return Ok(());
            } else {
                self.define(f, cols[i])?;
            }
        }
    }

    fn compress(mut self) -> CosetTable {
        let live: Vec<usize> = (0..self.table.len()).filter(|&c| self.parent[c] == c).collect();
        let mut new_index = vec![UNDEF; self.table.len()];
        for (k, &c) in live.iter().enumerate() {
            new_index[c] = k;
        }
        let table = live
            .iter()
            .map(|&c| {
                let mut row = [UNDEF; 4];
                for x in 0..4 {
                    let t = self.table[c][x];
                    let t = self.rep(t);
                    row[x] = new_index[t];
                }
                row
            })
            .collect();
        CosetTable { table }
    }
}
