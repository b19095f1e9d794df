//! Structural invariants checked on arbitrary surfaces.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stm::homology::{is_integral_chain, straight_curve};
use stm::lie::{exp_nilpotent, is_unipotent, unipotent_log};
use stm::linalg::{is_zero_vec, q, Matrix};
use stm::orbit::{orbit, veech_generators};
use stm::pipeline::{affine_context, aut_stage, decompose_stage, homology_stage, RunConfig};
use stm::sl2z::GroupWord;
use stm::{Origami, Permutation};

pub const SMALL_ORBIT: usize = 500;

pub const DIRECTIONS: [(i64, i64); 7] = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2), (3, -2)];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

/// A uniformly random pair of permutations on at most `max_n` letters, redrawn until connected.
pub fn random_origami(rng: &mut impl Rng, max_n: usize) -> Origami {
    loop {
        let n = rng.gen_range(1..=max_n);
        let (h, v) = (random_permutation(rng, n), random_permutation(rng, n));
        if let Ok(o) = Origami::new(h, v) {
            return o;
        }
    }
}

pub fn random_origamis(seed: u64, count: usize, max_n: usize) -> Vec<Origami> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_origami(&mut rng, max_n)).collect()
}

pub fn canonical_form_is_invariant(o: &Origami, phi: &Permutation) -> Result<(), String> {
    let (canon, psi) = o.canonical_form();
    ensure(o.relabel(&psi) == canon, || format!("canonical relabeling of {o:?} is wrong"))?;
    let (other, _) = o.relabel(phi).canonical_form();
    ensure(other == canon, || format!("canonical form of {o:?} changes under {phi:?}"))
}

pub fn straight_curves_are_cycles(o: &Origami) -> Result<(), String> {
    let hb = stm::homology::HomologyBasis::new(o);
    for d in DIRECTIONS {
        for start in 0..o.n() {
            let c = straight_curve(o, start, d);
            ensure(is_integral_chain(&c) && is_zero_vec(&hb.boundary(&c)), || format!("∂ of curve {d:?} from {start} on {o:?}"))?;
        }
    }
    Ok(())
}

pub fn integral_form_is_unimodular(o: &Origami) -> Result<(), String> {
    let hb = stm::homology::HomologyBasis::new(o);
    ensure(hb.cycles.iter().all(|c| is_integral_chain(c)), || format!("non-integral cycle on {o:?}"))?;
    let det = hb.intersection_form(&hb.cycles).map_err(|e| e.to_string())?.det();
    ensure(det == q(1) || det == q(-1), || format!("det Ω = {det} on {o:?}"))
}

fn preserves(m: &Matrix, omega: &Matrix) -> bool {
    &(&m.transpose() * omega) * m == *omega
}

/// A random unipotent `I + N` with `N` strictly upper triangular.
pub fn random_unipotent(rng: &mut impl Rng, dim: usize) -> Matrix {
    let mut m = Matrix::identity(dim);
    for i in 0..dim {
        for j in i + 1..dim {
            m[(i, j)] = q(rng.gen_range(-3..=3));
        }
    }
    m
}

pub fn exp_inverts_log(m: &Matrix) -> Result<(), String> {
    let log = unipotent_log(m).map_err(|e| e.to_string())?;
    let back = exp_nilpotent(&log).map_err(|e| e.to_string())?;
    ensure(back == *m, || format!("exp(log m) ≠ m for {m:?}"))
}

/// `T^k` and `S^m` for the orders of `σ_h` and `σ_v`, which fix every surface, followed by up to
/// `max_schreier` Schreier generators when the orbit is small enough to enumerate.
pub fn affine_words(o: &Origami, max_schreier: usize) -> Vec<GroupWord> {
    let mut words: Vec<GroupWord> =
        [("T", o.sigma_h().order()), ("S", o.sigma_v().order())].iter().map(|(l, k)| l.repeat(*k).parse().unwrap()).collect();
    if let Ok(g) = orbit(o, SMALL_ORBIT) {
        words.extend(veech_generators(&g).into_iter().take(max_schreier));
    }
    words
}

/// Symplecticity, equivariance, exp∘log and isotypic dimension checks for the actions on `o`.
/// Uses at most `max_words` Schreier generators.
pub fn actions_are_consistent(o: &Origami, max_words: usize) -> Result<(), String> {
    let cfg = RunConfig::default();
    let h = homology_stage(o, None, &cfg).map_err(|e| e.to_string())?;
    let ctx = affine_context(&h);
    let a = aut_stage(&ctx).map_err(|e| e.to_string())?;
    for m in ctx.aut_matrices().map_err(|e| e.to_string())? {
        ensure(preserves(&m.full, &h.omega), || format!("ρ({}) breaks Ω on {o:?}", m.permutation))?;
    }
    for w in affine_words(o, max_words) {
        let e = ctx.affine_action(&w).map_err(|e| e.to_string())?;
        ensure(preserves(&e.matrix_full, &h.omega), || format!("α̃({w}) breaks Ω on {o:?}"))?;
        ensure(preserves(&e.matrix_zero, &h.omega_zero), || format!("α({w}) breaks Ω₀ on {o:?}"))?;
        ensure(ctx.is_holonomy_equivariant(&e), || format!("α̃({w}) is not holonomy-equivariant on {o:?}"))?;
        let mut p = e.matrix_full.clone();
        for _ in 0..12 {
            if is_unipotent(&p) {
                exp_inverts_log(&p)?;
                break;
            }
            p = &p * &e.matrix_full;
        }
    }
    let d = decompose_stage(&h, &a).map_err(|e| e.to_string())?;
    let total: usize = d.report.components.iter().map(|c| c.dim()).sum();
    ensure(total == 2 * o.genus(), || format!("isotypic dimensions sum to {total} on {o:?}, genus {}", o.genus()))
}

pub fn check_surface(o: &Origami, phi: &Permutation) -> Result<(), String> {
    canonical_form_is_invariant(o, phi)?;
    straight_curves_are_cycles(o)?;
    integral_form_is_unimodular(o)?;
    actions_are_consistent(o, 3)
}
