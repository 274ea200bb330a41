use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{bargmann_invariant, bloch_pair_products, gram};
use crate::majorana::state_from_stars;
use crate::{overlap, Error, Result, StarSet, SymmetricState};

#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementReport {
    /// `perm(A)/N!`, in `(0, 1]`.
    pub p_d: f64,
    /// `perm(A)`; real up to rounding for a Gram matrix.
    pub permanent: Complex64,
    /// Two-qubit concurrence, present when `N = 2`.
    pub concurrence: Option<f64>,
    /// `n_i · n_j` for all pairs of stars.
    pub bloch_pair_products: Option<DMatrix<f64>>,
}

/// `P_d = perm(A)/N!` for the Gram matrix `A` of the stars.
pub fn perma_concurrence(stars: &StarSet) -> Result<EntanglementReport> {
    let n = stars.len();
    let permanent = gram(stars).permanent()?;
    let factorial: f64 = (1..=n).map(|k| k as f64).product();
    let concurrence = if n == 2 {
        Some(concurrence_d3(&state_from_stars(stars))?)
    } else {
        None
    };
    Ok(EntanglementReport {
        p_d: permanent.re / factorial,
        permanent,
        concurrence,
        bloch_pair_products: Some(bloch_pair_products(stars)),
    })
}

/// `C = |c_1² − 2 c_0 c_2|` for a two-qubit symmetric state.
pub fn concurrence_d3(state: &SymmetricState) -> Result<f64> {
    let c = state.amplitudes();
    if c.len() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: c.len(),
        });
    }
    Ok((c[1] * c[1] - 2.0 * c[0] * c[2]).norm())
}

/// Closed-form `P_d` for `N ∈ {2, 3, 4}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormP {
    pub n: usize,
    /// Written with the overlaps `⟨z_i|z_j⟩`.
    pub overlap: f64,
    /// Written with the Bloch vectors `n_i`.
    pub bloch: f64,
    /// For `N = 3` only: `(|a_12|² + |a_23|² + |a_31|²)/3`.
    pub pairwise: Option<f64>,
}

pub fn closed_form_p(stars: &StarSet) -> Result<ClosedFormP> {
    let s = stars.stars();
    let n = s.len();
    let a2 = |i: usize, j: usize| overlap(&s[i], &s[j]).norm_sqr();
    let dots = bloch_pair_products(stars);
    let nn = |i: usize, j: usize| dots[(i, j)];
    match n {
        2 => Ok(ClosedFormP {
            n,
            overlap: 0.5 * (1.0 + a2(0, 1)),
            bloch: 0.25 * (3.0 + nn(0, 1)),
            pairwise: None,
        }),
        3 => {
            let sum = a2(0, 1) + a2(1, 2) + a2(2, 0);
            // The two cyclic products are complex conjugates.
            let cyc = bargmann_invariant(&s[0], &s[1], &s[2])
                + bargmann_invariant(&s[0], &s[2], &s[1]);
            Ok(ClosedFormP {
                n,
                overlap: (1.0 + sum + cyc.re) / 6.0,
                bloch: (3.0 + nn(0, 1) + nn(1, 2) + nn(2, 0)) / 6.0,
                pairwise: Some(sum / 3.0),
            })
        }
        4 => {
            const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            const MATCHINGS: [[(usize, usize); 2]; 3] =
                [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];
            let s_ov: f64 = PAIRS.iter().map(|&(i, j)| a2(i, j)).sum();
            let q_ov: f64 = MATCHINGS
                .iter()
                .map(|[(i, j), (k, l)]| a2(*i, *j) * a2(*k, *l))
                .sum();
            let s_bl: f64 = PAIRS.iter().map(|&(i, j)| nn(i, j)).sum();
            let q_bl: f64 = MATCHINGS
                .iter()
                .map(|[(i, j), (k, l)]| nn(*i, *j) * nn(*k, *l))
                .sum();
            Ok(ClosedFormP {
                n,
                overlap: (-6.0 + 4.0 * s_ov + 2.0 * q_ov) / 24.0,
                bloch: (7.5 + 2.5 * s_bl + 0.5 * q_bl) / 24.0,
                pairwise: None,
            })
        }
        _ => Err(Error::UnsupportedDimension(n)),
    }
}
