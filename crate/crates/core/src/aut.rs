//! Deck transformations of an origami and their action on homology.

use std::collections::{BTreeSet, HashMap, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::homology::{BasisCoordinates, ChainVector, HomologyBasis};
use crate::linalg::{coordinates, Matrix, Q};
use crate::origami::Origami;
use crate::perm::Permutation;

/// Image of a chain under the square relabeling `h_i ↦ h_{φ(i)}`, `v_i ↦ v_{φ(i)}`.
pub fn relabel_chain(c: &[Q], phi: &Permutation) -> ChainVector {
    let n = phi.len();
    let mut out = c.to_vec();
    for i in 0..n {
        let j = phi.apply(i);
        out[j] = c[i].clone();
        out[n + j] = c[n + i].clone();
    }
    out
}

#[derive(Clone, Debug)]
pub struct AutGroup {
    /// Sorted, identity first.
    pub elements: Vec<Permutation>,
    pub generators: Vec<Permutation>,
}

/// All permutations commuting with `σ_h` and `σ_v`.
pub fn automorphisms(o: &Origami) -> AutGroup {
    let mut elements: Vec<Permutation> = (0..o.n())
        .into_par_iter()
        .filter_map(|j| o.isomorphism_from(o, j))
        .collect();
    elements.sort();
    elements.dedup();
    let generators = greedy_generators(&elements);
    AutGroup { elements, generators }
}

fn closure(gens: &[Permutation], n: usize) -> BTreeSet<Permutation> {
    let id = Permutation::identity(n);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

fn greedy_generators(elements: &[Permutation]) -> Vec<Permutation> {
    let n = elements.first().map_or(0, Permutation::len);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span = closure(&gens, n);
    // try elements of largest order first for a short list
    let mut by_order: Vec<&Permutation> = elements.iter().collect();
    by_order.sort_by_key(|p| std::cmp::Reverse(p.order()));
    for p in by_order {
        if span.len() == elements.len() {
            break;
        }
        if !span.contains(p) {
            gens.push(p.clone());
            span = closure(&gens, n);
        }
    }
    gens
}

impl AutGroup {
    /// The same group presented by the given generators, which must generate it.
    pub fn with_generators(&self, gens: Vec<Permutation>) -> Result<AutGroup> {
        if gens.iter().any(|g| !self.elements.contains(g)) {
            return Err(Error::NotAnAutomorphism);
        }
        let n = self.elements[0].len();
        if closure(&gens, n).len() != self.order() {
            return Err(Error::Input("permutations do not generate the automorphism group".into()));
        }
        Ok(AutGroup { elements: self.elements.clone(), generators: gens })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|a| self.generators.iter().all(|b| a.commutes_with(b)))
    }

    pub fn exponent(&self) -> usize {
        self.elements.iter().fold(1, |acc, p| num::integer::lcm(acc, p.order()))
    }

    pub fn involution_count(&self) -> usize {
        self.elements.iter().filter(|p| p.order() == 2).count()
    }

    /// Recognizes the small groups that occur for the catalog surfaces.
    pub fn label(&self) -> String {
        let (n, ab, e, inv) = (self.order(), self.is_abelian(), self.exponent(), self.involution_count());
        match (n, ab, e, inv) {
            (1, ..) => "trivial".into(),
            (_, true, _, _) if e == n => format!("Z/{n}Z"),
            (_, true, 2, _) => format!("(Z/2Z)^{}", n.trailing_zeros()),
            (12, false, 6, 3) => "A4".into(),
            (24, false, 12, 9) => "S4".into(),
            (_, true, _, _) => format!("abelian of order {n}"),
            _ => format!("nonabelian of order {n}"),
        }
    }

    /// Conjugacy classes as sorted index lists.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let index: HashMap<&Permutation, usize> = self.elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut assigned = vec![false; self.order()];
        let mut classes = Vec::new();
        for i in 0..self.order() {
            if assigned[i] {
                continue;
            }
            let mut class: Vec<usize> = self
                .elements
                .iter()
                .map(|g| index[&g.conjugate(&self.elements[i])])
                .collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                assigned[c] = true;
            }
            classes.push(class);
        }
        classes
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }
}

/// Matrix of `φ` on a basis of (a subspace of) homology, columns being images of basis cycles.
pub fn aut_action(hb: &HomologyBasis, phi: &Permutation, basis: &[ChainVector]) -> Result<Matrix> {
    aut_action_with(hb, phi, basis, &hb.coordinates(basis))
}

pub fn aut_action_with(hb: &HomologyBasis, phi: &Permutation, basis: &[ChainVector], coords: &BasisCoordinates) -> Result<Matrix> {
    let o = hb.origami();
    if phi.len() != o.n() || !phi.commutes_with(o.sigma_h()) || !phi.commutes_with(o.sigma_v()) {
        return Err(Error::NotAnAutomorphism);
    }
    let cols = basis
        .iter()
        .map(|c| coords.express(&relabel_chain(c, phi)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(&cols, basis.len()))
}

/// A linear representation of a finite permutation group, listed element by element.
#[derive(Clone, Debug)]
pub struct HomRep {
    pub elements: Vec<Permutation>,
    pub matrices: Vec<Matrix>,
    /// Indices of the generators in `elements`.
    pub generators: Vec<usize>,
    pub dim: usize,
}

impl HomRep {
    pub fn new(hb: &HomologyBasis, group: &AutGroup, basis: &[ChainVector]) -> Result<HomRep> {
        let coords = hb.coordinates(basis);
        let matrices = group
            .elements
            .par_iter()
            .map(|p| aut_action_with(hb, p, basis, &coords))
            .collect::<Result<Vec<_>>>()?;
        let generators = group.generators.iter().map(|g| group.index_of(g).expect("generator in group")).collect();
        Ok(HomRep { elements: group.elements.clone(), matrices, generators, dim: basis.len() })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn matrix_of(&self, p: &Permutation) -> Option<&Matrix> {
        self.elements.iter().position(|e| e == p).map(|i| &self.matrices[i])
    }

    pub fn generator_matrices(&self) -> Vec<&Matrix> {
        self.generators.iter().map(|&i| &self.matrices[i]).collect()
    }

    /// Index of the product `elements[a] ∘ elements[b]`.
    pub fn product_index(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].compose(&self.elements[b]);
        self.elements.iter().position(|e| *e == p).expect("closed under composition")
    }

    pub fn inverse_index(&self, a: usize) -> usize {
        let p = self.elements[a].inverse();
        self.elements.iter().position(|e| *e == p).expect("closed under inverses")
    }

    /// The representation on an invariant subspace spanned by the given coordinate vectors.
    pub fn restrict(&self, subspace: &[Vec<Q>]) -> Result<HomRep> {
        let k = subspace.len();
        let matrices = self
            .matrices
            .iter()
            .map(|m| {
                let cols = subspace
                    .iter()
                    .map(|v| coordinates(&m.mul_vec(v), subspace).ok_or(Error::NotInSpan))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Matrix::from_columns(&cols, k))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HomRep { elements: self.elements.clone(), matrices, generators: self.generators.clone(), dim: k })
    }

    /// Checks `ρ(gh) = ρ(g)ρ(h)` for all pairs.
    pub fn is_homomorphism(&self) -> bool {
        (0..self.order()).all(|a| {
            (0..self.order()).all(|b| self.matrices[self.product_index(a, b)] == &self.matrices[a] * &self.matrices[b])
        })
    }
}
