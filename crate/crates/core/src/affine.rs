//! Action of affine diffeomorphisms on homology through chain-level shear maps.

use num::Zero;
use rayon::prelude::*;

use std::sync::OnceLock;

use crate::aut::{aut_action_with, automorphisms, relabel_chain};
use crate::error::{Error, Result};
use crate::homology::{h_index, holonomy, v_index, BasisCoordinates, ChainVector, HomologyBasis};
use crate::lie::is_unipotent;
use crate::linalg::{Matrix, Q};
use crate::orbit::apply_word_raw;
use crate::origami::Origami;
use crate::perm::Permutation;
use crate::sl2z::{GroupWord, Letter};

/// Image of a chain on `o` under the shear `letter`, in the labels of the raw image surface.
pub fn letter_chain_map(o: &Origami, letter: Letter, c: &[Q]) -> ChainVector {
    let n = o.n();
    let (h, v) = (o.sigma_h(), o.sigma_v());
    let (hinv, vinv) = (h.inverse(), v.inverse());
    let mut out = vec![Q::zero(); 2 * n];
    for i in 0..n {
        let (ch, cv) = (&c[h_index(i)], &c[v_index(n, i)]);
        match letter {
            Letter::T => {
                out[h_index(i)] += ch;
                out[h_index(i)] += cv;
                out[v_index(n, h.apply(i))] += cv;
            }
            Letter::TInv => {
                out[h_index(i)] += ch;
                let k = hinv.apply(i);
                out[v_index(n, k)] += cv;
                out[h_index(k)] -= cv;
            }
            Letter::S => {
                out[v_index(n, i)] += cv;
                out[v_index(n, i)] += ch;
                out[h_index(v.apply(i))] += ch;
            }
            Letter::SInv => {
                out[v_index(n, i)] += cv;
                let k = vinv.apply(i);
                out[h_index(k)] += ch;
                out[v_index(n, k)] -= ch;
            }
        }
    }
    out
}

/// Composite chain map of a word (rightmost letter first); returns the raw image surface too.
pub fn word_chain_map(o: &Origami, w: &GroupWord, c: &[Q]) -> (Origami, ChainVector) {
    let mut cur = o.clone();
    let mut chain = c.to_vec();
    for &l in w.letters().iter().rev() {
        chain = letter_chain_map(&cur, l, &chain);
        cur = cur.apply_letter_raw(l);
    }
    (cur, chain)
}

#[derive(Clone, Debug)]
pub struct AffineElement {
    pub word: GroupWord,
    /// Isomorphism from the raw image surface back to the base labeling.
    pub relabeling: Permutation,
    pub matrix_full: Matrix,
    pub matrix_zero: Matrix,
}

/// Everything needed to turn stabilizing words into matrices on a fixed pair of bases.
#[derive(Clone, Debug)]
pub struct AffineContext {
    pub hb: HomologyBasis,
    pub full_basis: Vec<ChainVector>,
    pub zero_basis: Vec<ChainVector>,
    full_coords: BasisCoordinates,
    zero_coords: BasisCoordinates,
    aut: OnceLock<Vec<AutMatrices>>,
}

/// An automorphism with its matrices on the full and zero-holonomy bases.
#[derive(Clone, Debug)]
pub struct AutMatrices {
    pub permutation: Permutation,
    pub full: Matrix,
    pub zero: Matrix,
}

impl AffineContext {
    pub fn new(hb: HomologyBasis, full_basis: Vec<ChainVector>, zero_basis: Vec<ChainVector>) -> Self {
        let full_coords = hb.coordinates(&full_basis);
        let zero_coords = hb.coordinates(&zero_basis);
        AffineContext { hb, full_basis, zero_basis, full_coords, zero_coords, aut: OnceLock::new() }
    }

    pub fn origami(&self) -> &Origami {
        self.hb.origami()
    }

    /// Pushes a chain through `w` and back to the base labels via `ψ`.
    pub fn push_chain(&self, w: &GroupWord, psi: &Permutation, c: &[Q]) -> ChainVector {
        let (_, img) = word_chain_map(self.origami(), w, c);
        relabel_chain(&img, psi)
    }

    pub fn express_full(&self, c: &[Q]) -> Result<Vec<Q>> {
        self.full_coords.express(c)
    }

    pub fn express_zero(&self, c: &[Q]) -> Result<Vec<Q>> {
        self.zero_coords.express(c)
    }

    pub fn affine_action(&self, w: &GroupWord) -> Result<AffineElement> {
        let o = self.origami();
        let image = apply_word_raw(o, w);
        let psi = image.first_isomorphism(o).ok_or_else(|| Error::WordDoesNotStabilize(w.to_string()))?;
        self.affine_action_with(w, psi)
    }

    /// The action for a chosen identification `ψ` of the image with the base surface.
    pub fn affine_action_with(&self, w: &GroupWord, psi: Permutation) -> Result<AffineElement> {
        let images = self.word_images(w);
        self.element_from_images(w, &images, psi)
    }

    /// Raw images of the full and zero-holonomy basis chains under `w`, before relabeling.
    fn word_images(&self, w: &GroupWord) -> (Vec<ChainVector>, Vec<ChainVector>) {
        let mut chains: Vec<ChainVector> = self.full_basis.iter().chain(&self.zero_basis).cloned().collect();
        let mut cur = self.origami().clone();
        for &l in w.letters().iter().rev() {
            chains = chains.iter().map(|c| letter_chain_map(&cur, l, c)).collect();
            cur = cur.apply_letter_raw(l);
        }
        let zero = chains.split_off(self.full_basis.len());
        (chains, zero)
    }

    fn element_from_images(&self, w: &GroupWord, images: &(Vec<ChainVector>, Vec<ChainVector>), psi: Permutation) -> Result<AffineElement> {
        let cols_full = images.0.iter().map(|c| self.express_full(&relabel_chain(c, &psi))).collect::<Result<Vec<_>>>()?;
        let cols_zero = images.1.iter().map(|c| self.express_zero(&relabel_chain(c, &psi))).collect::<Result<Vec<_>>>()?;
        Ok(AffineElement {
            word: w.clone(),
            relabeling: psi,
            matrix_full: Matrix::from_columns(&cols_full, self.full_basis.len()),
            matrix_zero: Matrix::from_columns(&cols_zero, self.zero_basis.len()),
        })
    }

    /// Matrices of every automorphism, computed once.
    pub fn aut_matrices(&self) -> Result<&[AutMatrices]> {
        if let Some(a) = self.aut.get() {
            return Ok(a);
        }
        let group = automorphisms(self.origami());
        let mats = group
            .elements
            .into_par_iter()
            .map(|p| {
                let full = aut_action_with(&self.hb, &p, &self.full_basis, &self.full_coords)?;
                let zero = aut_action_with(&self.hb, &p, &self.zero_basis, &self.zero_coords)?;
                Ok(AutMatrices { permutation: p, full, zero })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.aut.get_or_init(|| mats))
    }

    /// All representatives `ρ(a) · α̃(w)`, one per automorphism `a`, in the order of `Aut`.
    pub fn aut_coset(&self, w: &GroupWord) -> Result<Vec<AffineElement>> {
        let base = self.affine_action(w)?;
        Ok(self
            .aut_matrices()?
            .par_iter()
            .map(|a| AffineElement {
                word: w.clone(),
                relabeling: a.permutation.compose(&base.relabeling),
                matrix_full: &a.full * &base.matrix_full,
                matrix_zero: &a.zero * &base.matrix_zero,
            })
            .collect())
    }

    /// A coset representative that is unipotent when the coset has one, else the first.
    pub fn normalized_action(&self, w: &GroupWord) -> Result<AffineElement> {
        let coset = self.aut_coset(w)?;
        let pick = coset.iter().position(|e| is_unipotent(&e.matrix_full)).unwrap_or(0);
        Ok(coset.into_iter().nth(pick).expect("nonempty coset"))
    }

    pub fn monodromy_generators(&self, words: &[GroupWord]) -> Result<Vec<AffineElement>> {
        words.par_iter().map(|w| self.normalized_action(w)).collect()
    }

    /// Checks holonomy equivariance `hol(α̃(w)c) = W·hol(c)` on every full basis cycle.
    pub fn is_holonomy_equivariant(&self, e: &AffineElement) -> bool {
        let n = self.origami().n();
        let m = e.word.matrix().0;
        self.full_basis.iter().all(|c| {
            let img = self.push_chain(&e.word, &e.relabeling, c);
            let (x, y) = holonomy(c, n);
            let expected = (
                Q::from_integer(m[0][0].into()) * &x + Q::from_integer(m[0][1].into()) * &y,
                Q::from_integer(m[1][0].into()) * &x + Q::from_integer(m[1][1].into()) * &y,
            );
            holonomy(&img, n) == expected
        })
    }
}

/// Whether `m = ρ(a) · reference` for some `a` in the group, matrices given on the same basis.
pub fn equal_up_to_aut(m: &Matrix, reference: &Matrix, aut_matrices: &[Matrix]) -> Option<usize> {
    aut_matrices.iter().position(|r| *m == r * reference)
}
