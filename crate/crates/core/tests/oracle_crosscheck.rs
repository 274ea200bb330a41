//! The fast paths checked against the tensor-space oracle.

use majorana::entanglement::{gram, perma_concurrence, permanent};
use majorana::majorana::state_from_stars;
use majorana::oracle::{
    build_dicke, displaced_ground, embed, project_state, symmetrized_product, FullState,
};
use majorana::sampling::{random_state, random_stars};
use majorana::{fidelity, Complex64, Star, SymmetricState};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn symmetrized_norm_is_factorial_times_permanent() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=8 {
        for _ in 0..10 {
            let stars = random_stars(n, &mut rng);
            let oracle = symmetrized_product(&stars).unwrap();
            let factorial: f64 = (1..=n).map(|k| k as f64).product();
            let perm = permanent(gram(&stars).entries()).unwrap();
            let rel = (oracle.pre_norm_sq - factorial * perm.re).abs() / oracle.pre_norm_sq;
            assert!(rel <= 1e-9, "N = {n}: relative {rel}");
            assert!(perm.im.abs() <= 1e-10);
        }
    }
}

#[test]
fn state_from_stars_matches_symmetrized_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in 1..=8 {
        for _ in 0..5 {
            let mut stars: Vec<Star> = random_stars(n, &mut rng).stars().to_vec();
            if n > 2 {
                stars[1] = Star::infinity();
            }
            let stars = majorana::StarSet::new(stars).unwrap();
            let oracle = project_state(&symmetrized_product(&stars).unwrap().state).unwrap();
            let fast = state_from_stars(&stars);
            assert!(fidelity(&oracle, &fast).unwrap() >= 1.0 - 1e-10, "N = {n}");
        }
    }
}

#[test]
fn dicke_constructors_agree() {
    for n in 1..=8 {
        for k in 0..=n {
            let fast = embed(&SymmetricState::dicke(n, k).unwrap()).unwrap();
            let oracle = build_dicke(n, k).unwrap();
            assert!(fast.fidelity(&oracle).unwrap() >= 1.0 - 1e-14);
        }
    }
}

#[test]
fn embed_project_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for n in 1..=8 {
        let s = random_state(n + 1, &mut rng);
        let back = project_state(&embed(&s).unwrap()).unwrap();
        for (a, b) in s.amplitudes().iter().zip(back.amplitudes()) {
            assert!((a - b).norm() <= 1e-12);
        }
    }
}

#[test]
fn displaced_ground_is_a_product_of_coherent_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for n in 1..=6 {
        for _ in 0..4 {
            let xi = Complex64::from_polar(rng.random_range(0.0..1.5), rng.random_range(0.0..6.3));
            let displaced = displaced_ground(n, xi).unwrap();
            // exp(ξ q⁺ − ξ̄ q⁻)|0…0⟩ = |z⟩^{⊗N} with z = e^{i arg ξ} tan|ξ|
            let z = Complex64::from_polar(xi.norm().tan(), xi.arg());
            let product = FullState::product(&vec![Star::finite(z); n]).unwrap();
            assert!(displaced.fidelity(&product).unwrap() >= 1.0 - 1e-9);
        }
    }
}

#[test]
fn p_d_equals_normalized_oracle_norm() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for n in 2..=7 {
        let stars = random_stars(n, &mut rng);
        let factorial: f64 = (1..=n).map(|k| k as f64).product();
        let from_oracle = symmetrized_product(&stars).unwrap().pre_norm_sq / (factorial * factorial);
        let p = perma_concurrence(&stars).unwrap().p_d;
        assert!((p - from_oracle).abs() <= 1e-10 * from_oracle);
    }
}
