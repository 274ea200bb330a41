//! Symmetric multiqubit states in the Majorana stellar representation.
//!
//! A state of `N` qubits that is invariant under permutations lives in the
//! `d = N + 1` dimensional span of the Dicke states `|N;k⟩`. Every such state
//! is, up to a global phase, the symmetrized product of `N` single-qubit
//! coherent states `|z_i⟩`, the Majorana stars. This crate converts between the
//! two descriptions and computes what the stars make easy:
//!
//! - [`majorana`]: Dicke amplitudes ⇄ star constellation, the Bargmann
//!   function and separability detection.
//! - [`entanglement`]: the Gram matrix of the stars, its permanent (Ryser with
//!   Gray-code ordering), the perma-concurrence `P_d = perm(A)/N!`, closed forms
//!   for small `N` and the two-qubit concurrence.
//! - [`geometry`]: the Kähler potential `ln P_d + Σ ln(1 + |z_i|²)` and the
//!   Fubini-Study metric it generates.
//! - [`oracle`]: a deliberately naive implementation in the full `2^N` tensor
//!   space used to cross-check everything above.
//!
//! ```
//! use majorana::{SymmetricState, majorana::stars_from_state, entanglement::perma_concurrence};
//! use num_complex::Complex64;
//!
//! // (|3;0⟩ + |3;3⟩)/√2, the three-qubit GHZ state.
//! let ghz = SymmetricState::normalize(&[
//!     Complex64::new(1.0, 0.0),
//!     Complex64::new(0.0, 0.0),
//!     Complex64::new(0.0, 0.0),
//!     Complex64::new(1.0, 0.0),
//! ]).unwrap();
//! let stars = stars_from_state(&ghz, 1e-8).unwrap();
//! let report = perma_concurrence(&stars).unwrap();
//! assert!((report.p_d - 0.25).abs() < 1e-12);
//! ```

pub mod entanglement;
mod error;
pub mod geometry;
pub mod majorana;
pub mod oracle;
pub mod sampling;
mod star;
mod state;
mod symmetric;

pub use error::{Error, Result};
pub use star::{overlap, Star, StarSet};
pub use state::{binomial, fidelity, SymmetricState, NORM_TOLERANCE, RENORMALIZE_WINDOW};
pub use symmetric::{elementary_symmetric, homogeneous_symmetric};

pub use num_complex::Complex64;
