//! Simultaneous polynomial root finding.
//!
//! Coefficients are in ascending order, `p(x) = Σ c_k x^k`, with a nonzero
//! leading coefficient.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Horner evaluation of `p(x)`, `p'(x)` and the rounding-error scale
/// `Σ |c_k| |x|^k`.
pub(crate) fn eval_with_derivative(coeffs: &[Complex64], x: Complex64) -> (Complex64, Complex64, f64) {
    let ax = x.norm();
    let mut p = ZERO;
    let mut dp = ZERO;
    let mut scale = 0.0;
    for c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
        scale = scale * ax + c.norm();
    }
    (p, dp, scale)
}

pub(crate) fn eval(coeffs: &[Complex64], x: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(ZERO, |acc, c| acc * x + c)
}

/// Aberth–Ehrlich iteration. Starting points sit on a circle around the root
/// centroid `−c_{n−1}/(n c_n)` whose radius is the geometric mean distance of
/// the roots from that centre; the circle is rotated by a seeded random angle
/// and each point is jittered radially so that symmetric polynomials cannot
/// trap the iteration.
///
/// Returns the approximations and whether every root met the stopping rule
/// (residual at rounding level, or a correction below machine precision)
/// within `max_iter` sweeps.
pub(crate) fn aberth(coeffs: &[Complex64], max_iter: usize, seed: u64) -> (Vec<Complex64>, bool) {
    let n = coeffs.len() - 1;
    match n {
        0 => return (Vec::new(), true),
        1 => return (vec![-coeffs[0] / coeffs[1]], true),
        _ => {}
    }
    let lead = coeffs[n];
    let centre = -coeffs[n - 1] / (lead * n as f64);
    let mut radius = (eval(coeffs, centre) / lead).norm().powf(1.0 / n as f64);
    if !(radius.is_finite() && radius > 0.0) {
        radius = 1.0;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let offset = rng.random::<f64>() * std::f64::consts::TAU;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = offset + std::f64::consts::TAU * k as f64 / n as f64;
            let r = radius * (1.0 + 0.1 * (rng.random::<f64>() - 0.5));
            centre + Complex64::from_polar(r, theta)
        })
        .collect();

    let mut done = vec![false; n];
    for _ in 0..max_iter {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (p, dp, scale) = eval_with_derivative(coeffs, z[i]);
            if p.norm() <= 8.0 * f64::EPSILON * scale {
                done[i] = true;
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let mut step = ratio / (1.0 - ratio * repulsion);
            if !step.is_finite() {
                // Stationary point of p or a collision: nudge and retry.
                step = Complex64::from_polar(1e-3 * radius.max(z[i].norm()), rng.random::<f64>() * 6.0);
            }
            z[i] -= step;
            if step.norm() <= 2.0 * f64::EPSILON * z[i].norm() {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            return (z, true);
        }
    }
    (z, false)
}

/// Eigenvalues of the companion matrix of `p`, via a complex Schur form.
pub(crate) fn companion_roots(coeffs: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Some(Vec::new());
    }
    let lead = coeffs[n];
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..n {
        m[(i, n - 1)] = -coeffs[i] / lead;
    }
    let schur = Schur::try_new(m, f64::EPSILON, 10_000)?;
    let eig = schur.eigenvalues()?;
    Some(eig.iter().copied().collect())
}

/// A few Newton steps on each root, kept only while they reduce `|p|`.
pub(crate) fn polish(coeffs: &[Complex64], roots: &mut [Complex64]) {
    for r in roots.iter_mut() {
        for _ in 0..3 {
            let (p, dp, _) = eval_with_derivative(coeffs, *r);
            if p == ZERO || dp == ZERO {
                break;
            }
            let candidate = *r - p / dp;
            if !candidate.is_finite() || eval(coeffs, candidate).norm() >= p.norm() {
                break;
            }
            *r = candidate;
        }
    }
}
