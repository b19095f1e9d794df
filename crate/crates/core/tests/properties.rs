mod common;

use common::props::*;
use proptest::prelude::*;
use stm::catalog::{catalog, NAMES};
use stm::{Origami, Permutation};

fn images(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    images(n).prop_map(|v| Permutation::from_images(v).unwrap())
}

fn origami(max_n: usize) -> impl Strategy<Value = Origami> {
    (1..=max_n)
        .prop_flat_map(|n| (permutation(n), permutation(n)))
        .prop_filter_map("disconnected", |(h, v)| Origami::new(h, v).ok())
}

fn with_relabeling(max_n: usize) -> impl Strategy<Value = (Origami, Permutation)> {
    origami(max_n).prop_flat_map(|o| {
        let n = o.n();
        (Just(o), permutation(n))
    })
}

fn unwrap(r: Result<(), String>) -> Result<(), TestCaseError> {
    r.map_err(TestCaseError::fail)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn canonical_form_is_conjugation_invariant((o, phi) in with_relabeling(12)) {
        unwrap(canonical_form_is_invariant(&o, &phi))?;
    }

    #[test]
    fn straight_curves_close_up(o in origami(12)) {
        unwrap(straight_curves_are_cycles(&o))?;
    }

    #[test]
    fn integral_intersection_form_is_unimodular(o in origami(12)) {
        unwrap(integral_form_is_unimodular(&o))?;
    }

    #[test]
    fn actions_preserve_structure(o in origami(12)) {
        unwrap(actions_are_consistent(&o, 3))?;
    }

    #[test]
    fn exp_log_round_trip(seed in any::<u64>(), dim in 1usize..8) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        unwrap(exp_inverts_log(&random_unipotent(&mut rng, dim)))?;
    }
}

#[test]
fn catalog_surfaces_satisfy_every_invariant() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for name in NAMES {
        let o = catalog(name).unwrap();
        let phi = random_permutation(&mut rng, o.n());
        check_surface(&o, &phi).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}
