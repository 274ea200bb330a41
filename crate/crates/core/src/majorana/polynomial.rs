use num_complex::Complex64;

use crate::{binomial, Star, SymmetricState};

/// The Majorana polynomial `Σ_k a_k z^{N−k}` with
/// `a_k = (−1)^k √C(N,k) c_k`, whose roots are the stars of the state.
///
/// The same amplitudes also define the Bargmann polynomial
/// `𝒫(ω) = Σ_k d_k ω^k` with `d_k = √C(N,k) c_k`; the two are related by
/// `M(z) = z^N 𝒫(−1/z)`, so Bargmann zeros `ω` map to stars `z = −1/ω`.
#[derive(Debug, Clone, PartialEq)]
pub struct MajoranaPolynomial {
    degree_nominal: usize,
    coefficients: Vec<Complex64>,
}

impl MajoranaPolynomial {
    pub fn from_state(state: &SymmetricState) -> Self {
        let n = state.n_qubits();
        let coefficients = state
            .amplitudes()
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                c * (sign * binomial(n, k).sqrt())
            })
            .collect();
        Self {
            degree_nominal: n,
            coefficients,
        }
    }

    /// Nominal degree `N`.
    pub fn degree_nominal(&self) -> usize {
        self.degree_nominal
    }

    /// `a_0, …, a_N`; `a_k` multiplies `z^{N−k}`.
    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    /// Bargmann coefficients `d_k = (−1)^k a_k`, in ascending powers of `ω`.
    pub fn bargmann_coefficients(&self) -> Vec<Complex64> {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(k, a)| if k % 2 == 0 { *a } else { -a })
            .collect()
    }

    /// Largest `k` with `c_k ≠ 0`: the degree of the Bargmann polynomial.
    pub fn k_max(&self) -> usize {
        self.coefficients
            .iter()
            .rposition(|a| a.norm() != 0.0)
            .unwrap_or(0)
    }

    /// Smallest `k` with `c_k ≠ 0`: the number of stars at infinity.
    pub fn k_min(&self) -> usize {
        self.coefficients
            .iter()
            .position(|a| a.norm() != 0.0)
            .unwrap_or(0)
    }

    /// `M(z)` at a finite point.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coefficients
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a)
    }

    /// Relative residual at a star, evaluated in homogeneous form
    /// `α^N M(β/α) = Σ_k a_k β^{N−k} α^k` and scaled by
    /// `Σ_k |a_k| |β|^{N−k} |α|^k`, so that it is meaningful at infinity.
    pub fn relative_residual(&self, star: &Star) -> f64 {
        let n = self.degree_nominal;
        let (alpha, beta) = (star.alpha(), star.beta());
        let (mut value, mut scale) = (Complex64::new(0.0, 0.0), 0.0);
        for (k, a) in self.coefficients.iter().enumerate() {
            let term_mag = beta.norm().powi((n - k) as i32) * alpha.norm().powi(k as i32);
            value += a * beta.powu((n - k) as u32) * alpha.powu(k as u32);
            scale += a.norm() * term_mag;
        }
        if scale == 0.0 {
            0.0
        } else {
            value.norm() / scale
        }
    }
}
