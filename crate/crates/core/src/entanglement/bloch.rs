use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::{overlap, Star, StarSet};

/// Point of the Bloch sphere for a star: `z = 0` is the north pole
/// `(0, 0, 1)` and the star at infinity the south pole `(0, 0, −1)`.
pub fn bloch_vector(star: &Star) -> [f64; 3] {
    let (a, b) = (star.alpha(), star.beta());
    let ab = a.conj() * b;
    [2.0 * ab.re, 2.0 * ab.im, a.norm_sqr() - b.norm_sqr()]
}

/// Matrix of `n_i · n_j` over all pairs of stars.
pub fn bloch_pair_products(stars: &StarSet) -> DMatrix<f64> {
    let v: Vec<[f64; 3]> = stars.stars().iter().map(bloch_vector).collect();
    DMatrix::from_fn(v.len(), v.len(), |i, j| {
        v[i][0] * v[j][0] + v[i][1] * v[j][1] + v[i][2] * v[j][2]
    })
}

/// `⟨a|b⟩⟨b|c⟩⟨c|a⟩`. For qubits its real part is fixed by the pairwise
/// overlaps: `2 Re = |⟨a|b⟩|² + |⟨b|c⟩|² + |⟨c|a⟩|² − 1`.
pub fn bargmann_invariant(a: &Star, b: &Star, c: &Star) -> Complex64 {
    overlap(a, b) * overlap(b, c) * overlap(c, a)
}
