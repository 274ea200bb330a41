//! Ground truth in the literal `2^N`-dimensional tensor space.
//!
//! Nothing here knows about Majorana polynomials or Ryser's formula: states
//! are dense vectors indexed by bit strings `n_1 n_2 … n_N` (with `n_1` the
//! most significant bit), operators are dense matrices, and symmetrization
//! sums over all `N!` permutations. It is slow on purpose and capped at
//! `N ≤ 10`.

mod checks;
mod collective;
mod expm;
mod full_state;

pub use checks::{
    check_algebra, check_dicke_ladder, check_dicke_recursion, CheckReport, IdentityCheck,
    IDENTITY_TOLERANCE, RECURSION_TOLERANCE,
};
pub use collective::{build_collective, CollectiveOperators};
pub use expm::{displaced_ground, expm, expm_apply};
pub use full_state::{
    build_dicke, dicke_basis, embed, project, project_state, symmetrized_product, FullState,
    SymmetrizedProduct,
};

use num_complex::Complex64;

use crate::{Error, Result};

/// Largest qubit count for tensor-space vectors and permutation sums.
pub const MAX_QUBITS: usize = 10;

/// Largest qubit count for dense operator algebra (matrix products and
/// exponentials).
pub const MAX_OPERATOR_QUBITS: usize = 8;

fn check_qubits(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::Range {
            what: "N",
            value: n,
            range: if max == MAX_QUBITS { "1..=10" } else { "1..=8" },
        });
    }
    Ok(())
}

/// Largest entry modulus of a complex matrix or vector.
pub(crate) fn max_abs<'a>(entries: impl IntoIterator<Item = &'a Complex64>) -> f64 {
    entries.into_iter().map(|c| c.norm()).fold(0.0, f64::max)
}
