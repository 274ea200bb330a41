use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::{check_qubits, MAX_QUBITS};
use crate::{binomial, Error, Result, Star, StarSet, SymmetricState};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// A unit vector in the `2^N`-dimensional multiqubit space.
#[derive(Debug, Clone, PartialEq)]
pub struct FullState {
    n_qubits: usize,
    vector: DVector<Complex64>,
}

impl FullState {
    /// Normalizes `vector`, which must have length `2^N`.
    pub fn new(n_qubits: usize, vector: DVector<Complex64>) -> Result<Self> {
        check_qubits(n_qubits, MAX_QUBITS)?;
        if vector.len() != 1 << n_qubits {
            return Err(Error::DimensionMismatch {
                expected: 1 << n_qubits,
                found: vector.len(),
            });
        }
        let norm = vector.norm();
        if norm == 0.0 {
            return Err(Error::AllZero);
        }
        Ok(Self {
            n_qubits,
            vector: vector / Complex64::new(norm, 0.0),
        })
    }

    /// `|s_1⟩ ⊗ |s_2⟩ ⊗ ⋯ ⊗ |s_N⟩`.
    pub fn product(stars: &[Star]) -> Result<Self> {
        check_qubits(stars.len(), MAX_QUBITS)?;
        let mut v = vec![Complex64::new(1.0, 0.0)];
        for s in stars {
            v = v
                .iter()
                .flat_map(|p| [p * s.alpha(), p * s.beta()])
                .collect();
        }
        Self::new(stars.len(), DVector::from_vec(v))
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn vector(&self) -> &DVector<Complex64> {
        &self.vector
    }

    /// `self ⊗ other`, with `other` occupying the least significant bits.
    pub fn tensor(&self, other: &FullState) -> Result<FullState> {
        let v = self.vector.kronecker(&other.vector);
        FullState::new(self.n_qubits + other.n_qubits, v)
    }

    /// `|⟨self|other⟩|`.
    pub fn fidelity(&self, other: &FullState) -> Result<f64> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.n_qubits,
                found: other.n_qubits,
            });
        }
        Ok(self.vector.dotc(&other.vector).norm())
    }
}

/// The Dicke state `|N;k⟩`: every bit string of Hamming weight `k` with
/// amplitude `√(k!(N−k)!/N!)`.
pub fn build_dicke(n: usize, k: usize) -> Result<FullState> {
    check_qubits(n, MAX_QUBITS)?;
    if k > n {
        return Err(Error::Range {
            what: "k",
            value: k,
            range: "0..=N",
        });
    }
    let amp = Complex64::new(1.0 / binomial(n, k).sqrt(), 0.0);
    let v = DVector::from_fn(1 << n, |x, _| if x.count_ones() as usize == k { amp } else { ZERO });
    Ok(FullState { n_qubits: n, vector: v })
}

/// The `2^N × (N+1)` isometry whose columns are `|N;0⟩, …, |N;N⟩`.
pub fn dicke_basis(n: usize) -> Result<DMatrix<Complex64>> {
    let cols = (0..=n)
        .map(|k| build_dicke(n, k).map(|s| s.vector))
        .collect::<Result<Vec<_>>>()?;
    Ok(DMatrix::from_columns(&cols))
}

/// `Σ_k c_k |N;k⟩` in the tensor space.
pub fn embed(state: &SymmetricState) -> Result<FullState> {
    let v = dicke_basis(state.n_qubits())? * DVector::from_column_slice(state.amplitudes());
    FullState::new(state.n_qubits(), v)
}

/// Dicke coordinates `⟨N;k|ψ⟩` of a tensor-space vector.
pub fn project(full: &FullState) -> Result<Vec<Complex64>> {
    let basis = dicke_basis(full.n_qubits)?;
    Ok(basis.ad_mul(&full.vector).iter().copied().collect())
}

/// [`project`] followed by normalization into a [`SymmetricState`].
pub fn project_state(full: &FullState) -> Result<SymmetricState> {
    SymmetricState::normalize(&project(full)?)
}

/// Result of the literal permutation sum over a star constellation.
#[derive(Debug, Clone)]
pub struct SymmetrizedProduct {
    /// The normalized symmetrized state.
    pub state: FullState,
    /// Squared norm of `Σ_σ σ(|z_1⟩ ⊗ ⋯ ⊗ |z_N⟩)` before normalization,
    /// which equals `N! · perm(A)` for the Gram matrix `A`.
    pub pre_norm_sq: f64,
}

/// `Σ_{σ∈S_N} σ(|z_1⟩ ⊗ ⋯ ⊗ |z_N⟩)`, summed over all `N!` orderings.
///
/// Orderings are enumerated depth first so that partial tensor products are
/// shared between permutations with a common prefix; every permutation still
/// contributes its own full product vector.
pub fn symmetrized_product(stars: &StarSet) -> Result<SymmetrizedProduct> {
    let n = stars.len();
    check_qubits(n, MAX_QUBITS)?;
    let mut levels: Vec<Vec<Complex64>> = (0..=n).map(|j| vec![ZERO; 1 << j]).collect();
    levels[0][0] = Complex64::new(1.0, 0.0);
    let mut acc = vec![ZERO; 1 << n];
    permute(stars.stars(), 0, 0, &mut levels, &mut acc);
    let v = DVector::from_vec(acc);
    let pre_norm_sq = v.norm_squared();
    Ok(SymmetrizedProduct {
        state: FullState::new(n, v)?,
        pre_norm_sq,
    })
}

fn permute(
    stars: &[Star],
    depth: usize,
    used: u32,
    levels: &mut [Vec<Complex64>],
    acc: &mut [Complex64],
) {
    let n = stars.len();
    for (i, s) in stars.iter().enumerate() {
        if used >> i & 1 == 1 {
            continue;
        }
        let (lo, hi) = levels.split_at_mut(depth + 1);
        let prev = &lo[depth];
        if depth + 1 == n {
            for (x, p) in prev.iter().enumerate() {
                acc[2 * x] += p * s.alpha();
                acc[2 * x + 1] += p * s.beta();
            }
        } else {
            let next = &mut hi[0];
            for (x, p) in prev.iter().enumerate() {
                next[2 * x] = p * s.alpha();
                next[2 * x + 1] = p * s.beta();
            }
            permute(stars, depth + 1, used | 1 << i, levels, acc);
        }
    }
}
