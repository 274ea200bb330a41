//! Random states and constellations for experiments and tests.
//!
//! States have independent complex-Gaussian amplitudes, which is the unitarily
//! invariant distribution on the unit sphere of the symmetric subspace. Stars
//! are uniform on the Bloch sphere.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::{Star, StarSet, SymmetricState};

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Random state of `dim ≥ 2` amplitudes.
pub fn random_state<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> SymmetricState {
    assert!(dim >= 2, "a symmetric state needs at least two amplitudes");
    loop {
        let amps: Vec<Complex64> = (0..dim).map(|_| gaussian(rng)).collect();
        if let Ok(s) = SymmetricState::normalize(&amps) {
            return s;
        }
    }
}

/// Random state with `c_0 = 0`, so at least one star sits at infinity.
pub fn random_state_without_ground<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> SymmetricState {
    assert!(dim >= 2, "a symmetric state needs at least two amplitudes");
    loop {
        let mut amps: Vec<Complex64> = (0..dim).map(|_| gaussian(rng)).collect();
        amps[0] = Complex64::new(0.0, 0.0);
        if let Ok(s) = SymmetricState::normalize(&amps) {
            return s;
        }
    }
}

/// Uniformly distributed point of the Bloch sphere.
pub fn random_star<R: Rng + ?Sized>(rng: &mut R) -> Star {
    loop {
        if let Some(s) = Star::from_homogeneous(gaussian(rng), gaussian(rng)) {
            return s;
        }
    }
}

pub fn random_stars<R: Rng + ?Sized>(n: usize, rng: &mut R) -> StarSet {
    StarSet::new((0..n).map(|_| random_star(rng)).collect()).expect("n ≥ 1")
}

/// `|z⟩^{⊗N}` for a random star.
pub fn random_separable<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> SymmetricState {
    SymmetricState::product(dim - 1, &random_star(rng)).expect("dim ≥ 2")
}
