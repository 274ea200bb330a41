use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::{build_collective, build_dicke, check_qubits, FullState, MAX_OPERATOR_QUBITS};
use crate::{Error, Result};

const MAX_TERMS: usize = 60;

/// Matrix exponential by scaling and squaring around a truncated Taylor
/// series. The scaled matrix has 1-norm at most 1/2, so the series converges
/// to double precision in well under [`MAX_TERMS`] terms.
pub fn expm(x: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    let n = x.nrows();
    let norm = one_norm(x);
    if !norm.is_finite() {
        return Err(Error::ExpmNoConvergence { defect: f64::NAN });
    }
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let scaled = x / Complex64::new(2f64.powi(squarings), 0.0);

    let mut sum = DMatrix::<Complex64>::identity(n, n);
    let mut term = DMatrix::<Complex64>::identity(n, n);
    let mut converged = false;
    for k in 1..=MAX_TERMS {
        term = &term * &scaled / Complex64::new(k as f64, 0.0);
        sum += &term;
        if one_norm(&term) <= 1e-18 * one_norm(&sum) {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::ExpmNoConvergence {
            defect: one_norm(&term),
        });
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    Ok(sum)
}

fn one_norm(m: &DMatrix<Complex64>) -> f64 {
    m.column_iter()
        .map(|c| c.iter().map(|v| v.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `exp(x) v` without forming `exp(x)`: the scaled Taylor series is applied
/// to the vector `2^s` times, so each step costs matrix-vector products only.
pub fn expm_apply(x: &DMatrix<Complex64>, v: &DVector<Complex64>) -> Result<DVector<Complex64>> {
    let norm = one_norm(x);
    if !norm.is_finite() {
        return Err(Error::ExpmNoConvergence { defect: f64::NAN });
    }
    let steps = if norm > 0.5 { (norm / 0.5).ceil() as usize } else { 1 };
    let scaled = x / Complex64::new(steps as f64, 0.0);
    let mut out = v.clone();
    for _ in 0..steps {
        let mut term = out.clone();
        let mut sum = out.clone();
        let mut converged = false;
        for k in 1..=MAX_TERMS {
            term = &scaled * &term / Complex64::new(k as f64, 0.0);
            sum += &term;
            if term.norm() <= 1e-18 * sum.norm() {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::ExpmNoConvergence { defect: term.norm() });
        }
        out = sum;
    }
    Ok(out)
}

/// `exp(ξ q⁺ − ξ̄ q⁻) |N;0⟩`, the collective displacement of the all-zero
/// state. The generator is anti-Hermitian, so the result must keep unit norm;
/// a norm defect above `1e-10` is reported as non-convergence.
pub fn displaced_ground(n: usize, xi: Complex64) -> Result<FullState> {
    check_qubits(n, MAX_OPERATOR_QUBITS)?;
    let ops = build_collective(n)?;
    let generator = &ops.q_plus * xi - &ops.q_minus * xi.conj();
    let v = expm_apply(&generator, build_dicke(n, 0)?.vector())?;
    let defect = (v.norm() - 1.0).abs();
    if defect > 1e-10 {
        return Err(Error::ExpmNoConvergence { defect });
    }
    FullState::new(n, v)
}
