use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{check_qubits, MAX_QUBITS};
use crate::Result;

/// Collective ladder and number operators `q± = Σ_i q_i^±`, `K = Σ_i K_i`
/// on the full `2^N` space, with the single-qubit `q⁺ = |1⟩⟨0|`,
/// `q⁻ = |0⟩⟨1|`, `K = |1⟩⟨1|`.
#[derive(Debug, Clone)]
pub struct CollectiveOperators {
    pub n_qubits: usize,
    pub q_plus: DMatrix<Complex64>,
    pub q_minus: DMatrix<Complex64>,
    pub k_op: DMatrix<Complex64>,
}

pub fn build_collective(n: usize) -> Result<CollectiveOperators> {
    check_qubits(n, MAX_QUBITS)?;
    let dim = 1usize << n;
    let one = Complex64::new(1.0, 0.0);
    let mut q_plus = DMatrix::zeros(dim, dim);
    let mut k_op = DMatrix::zeros(dim, dim);
    for x in 0..dim {
        for i in 0..n {
            // qubit i (counted from the left) is bit n-1-i
            let bit = 1 << (n - 1 - i);
            if x & bit == 0 {
                q_plus[(x | bit, x)] += one;
            }
        }
        k_op[(x, x)] = Complex64::new(x.count_ones() as f64, 0.0);
    }
    let q_minus = q_plus.adjoint();
    Ok(CollectiveOperators {
        n_qubits: n,
        q_plus,
        q_minus,
        k_op,
    })
}
