use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{0..n}`; printed and parsed 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotABijection(format!("{:?}", images.iter().map(|x| x + 1).collect::<Vec<_>>())));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        if one_line.contains(&0) {
            return Err(Error::NotABijection("entries are 1-based".into()));
        }
        Self::from_images(one_line.iter().map(|&i| i - 1).collect())
    }

    /// From 1-based disjoint cycles on `{1..n}`; omitted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<Option<usize>> = vec![None; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || b == 0 || a > n || b > n || images[a - 1].is_some() {
                    return Err(Error::NotABijection(format!("bad cycle {cycle:?} on {n} points")));
                }
                images[a - 1] = Some(b - 1);
            }
        }
        Self::from_images(images.iter().enumerate().map(|(i, x)| x.unwrap_or(i)).collect())
    }

    /// Parses text such as `(1,2,3)(4,5)`.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        for part in s.split(')') {
            let part = part.trim().trim_start_matches('(');
            if part.trim().is_empty() {
                continue;
            }
            let cycle: std::result::Result<Vec<usize>, _> =
                part.split([',', ' ']).filter(|t| !t.is_empty()).map(str::parse).collect();
            cycles.push(cycle.map_err(|e| Error::Input(format!("bad cycle `{part}`: {e}")))?);
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ p ∘ self⁻¹`.
    pub fn conjugate(&self, p: &Permutation) -> Permutation {
        self.compose(p).compose(&self.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.compose(other) == other.compose(self)
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| num::integer::lcm(acc, c.len()))
    }

    /// 0-based cycles, including fixed points, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.images[s];
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.images[x];
            }
            out.push(c);
        }
        out
    }

    /// 1-based nontrivial cycles.
    pub fn cycles_one_based(&self) -> Vec<Vec<usize>> {
        self.cycles().into_iter().filter(|c| c.len() > 1).map(|c| c.iter().map(|x| x + 1).collect()).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles_one_based();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let c: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", c.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.len(), self)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}
