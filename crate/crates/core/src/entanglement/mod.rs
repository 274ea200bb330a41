//! Entanglement from the star constellation.
//!
//! The squared norm of the symmetrized product of `N` coherent states is
//! `N! · perm(A)`, where `A[i][j] = ⟨z_i|z_j⟩` is the Gram matrix of the stars.
//! Dividing by its largest value `(N!)²` gives the perma-concurrence
//! `P_d = perm(A)/N!`, equal to one exactly for product states.

mod bloch;
mod measures;
mod permanent;

pub use bloch::{bargmann_invariant, bloch_pair_products, bloch_vector};
pub use measures::{
    closed_form_p, concurrence_d3, perma_concurrence, ClosedFormP, EntanglementReport,
};
pub use permanent::{permanent, permanent_naive, MAX_NAIVE_N, MAX_PERMANENT_N};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::{overlap, StarSet};

/// `A[i][j] = ⟨z_i|z_j⟩`: Hermitian, unit diagonal, entries of modulus ≤ 1.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    entries: DMatrix<Complex64>,
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn permanent(&self) -> crate::Result<Complex64> {
        permanent(&self.entries)
    }
}

pub fn gram(stars: &StarSet) -> GramMatrix {
    let s = stars.stars();
    let n = s.len();
    let mut entries = DMatrix::from_element(n, n, Complex64::new(1.0, 0.0));
    for i in 0..n {
        for j in i + 1..n {
            let a = overlap(&s[i], &s[j]);
            entries[(i, j)] = a;
            entries[(j, i)] = a.conj();
        }
    }
    GramMatrix { entries }
}
