use num_complex::Complex64;

use crate::{Error, Result, Star};

/// Largest deviation of `Σ|c_k|²` from 1 accepted for a constructed state.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// [`SymmetricState::new`] silently renormalizes inputs whose norm is within
/// this distance of 1 and rejects everything else.
pub const RENORMALIZE_WINDOW: f64 = 1e-6;

/// Binomial coefficient `C(n, k)` as a float. Exact for `n ≤ 50`.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64).round()
}

/// A pure state of `N` qubits in the symmetric subspace, stored as its
/// amplitudes `c_0, …, c_N` over the Dicke basis `|N;k⟩`.
///
/// Construction always yields unit norm and a fixed global phase: the first
/// nonzero amplitude is real and positive.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricState {
    amplitudes: Vec<Complex64>,
}

impl SymmetricState {
    /// Takes amplitudes that are already normalized up to [`RENORMALIZE_WINDOW`].
    pub fn new(amplitudes: &[Complex64]) -> Result<Self> {
        let norm = checked_norm(amplitudes)?;
        if (norm - 1.0).abs() > RENORMALIZE_WINDOW {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self::from_nonzero(amplitudes, norm))
    }

    /// Scales any nonzero amplitude vector to unit norm.
    pub fn normalize(amplitudes: &[Complex64]) -> Result<Self> {
        let norm = checked_norm(amplitudes)?;
        Ok(Self::from_nonzero(amplitudes, norm))
    }

    /// The completely separable state `|z⟩^{⊗N}` with
    /// `c_k = √C(N,k) α^{N−k} β^k` for the star `(α, β)`.
    pub fn product(n_qubits: usize, star: &Star) -> Result<Self> {
        if n_qubits == 0 {
            return Err(Error::TooFewAmplitudes(1));
        }
        let (a, b) = (star.alpha(), star.beta());
        let amps: Vec<_> = (0..=n_qubits)
            .map(|k| binomial(n_qubits, k).sqrt() * a.powu((n_qubits - k) as u32) * b.powu(k as u32))
            .collect();
        Self::normalize(&amps)
    }

    /// The Dicke basis vector `|N;k⟩`.
    pub fn dicke(n_qubits: usize, k: usize) -> Result<Self> {
        if k > n_qubits {
            return Err(Error::IndexOutOfRange {
                index: k,
                max: n_qubits,
            });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); n_qubits + 1];
        amps[k] = Complex64::new(1.0, 0.0);
        Self::normalize(&amps)
    }

    fn from_nonzero(amplitudes: &[Complex64], norm: f64) -> Self {
        let first = amplitudes.iter().position(|c| *c != Complex64::new(0.0, 0.0));
        // `checked_norm` guarantees a nonzero entry.
        let first = first.expect("nonzero amplitude");
        let lead = amplitudes[first];
        let phase = lead.conj() / lead.norm();
        let mut amps: Vec<Complex64> = amplitudes.iter().map(|c| c * phase / norm).collect();
        amps[first] = Complex64::new(lead.norm() / norm, 0.0);
        Self { amplitudes: amps }
    }

    /// Number of qubits `N`.
    pub fn n_qubits(&self) -> usize {
        self.amplitudes.len() - 1
    }

    /// Dimension `d = N + 1`.
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// `⟨self|other⟩` over the Dicke basis.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }
}

/// Phase-insensitive overlap `|⟨a|b⟩|`.
pub fn fidelity(a: &SymmetricState, b: &SymmetricState) -> Result<f64> {
    Ok(a.inner(b)?.norm().min(1.0))
}

fn checked_norm(amplitudes: &[Complex64]) -> Result<f64> {
    if amplitudes.len() < 2 {
        return Err(Error::TooFewAmplitudes(amplitudes.len()));
    }
    if let Some(i) = amplitudes.iter().position(|c| !c.is_finite()) {
        return Err(Error::NonFinite(i));
    }
    let norm = amplitudes.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(Error::AllZero);
    }
    Ok(norm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn normalize_scales() {
        let s = SymmetricState::normalize(&[c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(s.amplitudes(), &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
    }

    #[test]
    fn normalize_fixes_phase() {
        let s = SymmetricState::normalize(&[c(0.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(s.amplitudes()[1], c(1.0, 0.0));
        assert_eq!(s.amplitudes()[0], c(0.0, 0.0));
    }

    #[test]
    fn normalize_symmetric_pair() {
        let s = SymmetricState::normalize(&[c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        for a in s.amplitudes() {
            assert!((a - c(h, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn all_zero_rejected() {
        assert_eq!(
            SymmetricState::normalize(&[c(0.0, 0.0); 3]),
            Err(Error::AllZero)
        );
        assert_eq!(
            SymmetricState::normalize(&[c(1.0, 0.0)]),
            Err(Error::TooFewAmplitudes(1))
        );
        assert_eq!(
            SymmetricState::normalize(&[c(f64::NAN, 0.0), c(1.0, 0.0)]),
            Err(Error::NonFinite(0))
        );
    }

    #[test]
    fn checked_constructor_window() {
        assert!(SymmetricState::new(&[c(1.0 + 5e-7, 0.0), c(0.0, 0.0)]).is_ok());
        assert!(matches!(
            SymmetricState::new(&[c(1.1, 0.0), c(0.0, 0.0)]),
            Err(Error::NotNormalized { .. })
        ));
        let s = SymmetricState::new(&[c(0.6, 0.0), c(0.0, 0.8 + 1e-8)]).unwrap();
        let norm: f64 = s.amplitudes().iter().map(|a| a.norm_sqr()).sum();
        assert!((norm - 1.0).abs() < NORM_TOLERANCE);
    }

    #[test]
    fn fidelity_examples() {
        let a = SymmetricState::normalize(&[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        let b = SymmetricState::normalize(&[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(fidelity(&a, &a).unwrap(), 1.0);
        assert_eq!(fidelity(&a, &b).unwrap(), 0.0);
        let q0 = SymmetricState::normalize(&[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let plus = SymmetricState::normalize(&[c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!((fidelity(&q0, &plus).unwrap() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(matches!(
            fidelity(&a, &q0),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6.0);
        assert_eq!(binomial(20, 10), 184756.0);
        assert_eq!(binomial(3, 5), 0.0);
    }

    #[test]
    fn product_state_matches_closed_form() {
        // c_k = z^k √C(N,k) / (1+|z|²)^{N/2}
        let z = c(0.3, -0.7);
        let n = 5;
        let s = SymmetricState::product(n, &Star::finite(z)).unwrap();
        let scale = (1.0 + z.norm_sqr()).powf(-(n as f64) / 2.0);
        for (k, a) in s.amplitudes().iter().enumerate() {
            let expected = z.powu(k as u32) * binomial(n, k).sqrt() * scale;
            assert!((a - expected).norm() < 1e-14);
        }
    }
}
