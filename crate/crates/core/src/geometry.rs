//! Kähler potential and Fubini-Study metric of a star constellation.
//!
//! In the stereographic chart the potential of a symmetric state is
//! `K = ln P_d + Σ_i ln(1 + |z_i|²)` and the metric is its mixed Wirtinger
//! Hessian `g_ij = ∂²K/∂z_i∂z̄_j`. The second sum contributes the diagonal
//! `(1 + |z_i|²)^{−2}` of `N` independent spheres; the `ln P_d` part is
//! differentiated numerically.
//!
//! The chart cannot hold the star at infinity. [`rotate_chart`] and
//! [`auto_chart`] move a constellation by an SU(2) rotation, which leaves
//! `P_d` unchanged.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::entanglement::gram;
use crate::{Error, Result, Star, StarSet};

/// Default finite-difference step.
pub const DEFAULT_STEP: f64 = 1e-5;

/// Stars must be farther apart (chordal) than this multiple of the step.
pub const CLOSE_STAR_FACTOR: f64 = 10.0;

#[derive(Debug, Clone, PartialEq)]
pub struct MetricTensor {
    entries: DMatrix<Complex64>,
    /// `max |g_ij − conj(g_ji)|` before the result was made Hermitian.
    hermiticity_defect: f64,
}

impl MetricTensor {
    fn from_hermitian(entries: DMatrix<Complex64>) -> Self {
        Self {
            entries,
            hermiticity_defect: 0.0,
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn hermiticity_defect(&self) -> f64 {
        self.hermiticity_defect
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = SymmetricEigen::new(self.entries.clone())
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    pub fn trace(&self) -> f64 {
        self.entries.diagonal().iter().map(|v| v.re).sum()
    }
}

fn finite_coordinates(stars: &StarSet) -> Result<Vec<Complex64>> {
    stars
        .stars()
        .iter()
        .map(|s| s.z().ok_or(Error::StarAtInfinity))
        .collect()
}

fn ln_p(zs: &[Complex64]) -> Result<f64> {
    let stars = StarSet::new(zs.iter().map(|&z| Star::finite(z)).collect())?;
    let n = zs.len();
    let factorial: f64 = (1..=n).map(|k| k as f64).product();
    Ok((gram(&stars).permanent()?.re / factorial).ln())
}

/// `K = ln P_d + Σ ln(1 + |z_i|²)`.
pub fn kahler_potential(stars: &StarSet) -> Result<f64> {
    let zs = finite_coordinates(stars)?;
    let spheres: f64 = zs.iter().map(|z| z.norm_sqr().ln_1p()).sum();
    Ok(ln_p(&zs)? + spheres)
}

/// `(1 + |z|²)^{−2}`, the round metric of the unit sphere in the chart.
pub fn metric_single_qubit(z: Complex64) -> f64 {
    (1.0 + z.norm_sqr()).powi(-2)
}

/// Metric of the unsymmetrized product `|z_1⟩ ⊗ ⋯ ⊗ |z_N⟩`: diagonal.
pub fn metric_separable(stars: &StarSet) -> Result<MetricTensor> {
    let zs = finite_coordinates(stars)?;
    let diag: Vec<Complex64> = zs
        .iter()
        .map(|&z| Complex64::new(metric_single_qubit(z), 0.0))
        .collect();
    Ok(MetricTensor::from_hermitian(DMatrix::from_diagonal(
        &nalgebra::DVector::from_vec(diag),
    )))
}

/// Metric of the symmetric state with the given stars, with the `ln P_d`
/// Hessian from central differences of step `step` in the real coordinates
/// `x_i = Re z_i`, `y_i = Im z_i`, combined as
/// `∂²/∂z_i∂z̄_j = ¼(∂x_i∂x_j + ∂y_i∂y_j) + (i/4)(∂x_i∂y_j − ∂y_i∂x_j)`.
pub fn metric_symmetric(stars: &StarSet, step: f64) -> Result<MetricTensor> {
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::InvalidStep(step));
    }
    let zs = finite_coordinates(stars)?;
    let s = stars.stars();
    let guard = CLOSE_STAR_FACTOR * step;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            let distance = s[i].chordal_distance(&s[j]);
            if distance <= guard {
                return Err(Error::StarsTooClose {
                    i,
                    j,
                    distance,
                    guard,
                });
            }
        }
    }
    let raw = ln_p_wirtinger_hessian(&zs, step)?;
    let n = zs.len();
    let mut defect: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            defect = defect.max((raw[(i, j)] - raw[(j, i)].conj()).norm());
        }
    }
    let mut g = (&raw + raw.adjoint()) * Complex64::new(0.5, 0.0);
    for (i, z) in zs.iter().enumerate() {
        g[(i, i)] += metric_single_qubit(*z);
    }
    Ok(MetricTensor {
        entries: g,
        hermiticity_defect: defect,
    })
}

/// Mixed Wirtinger Hessian of `ln P_d`, before symmetrization.
fn ln_p_wirtinger_hessian(zs: &[Complex64], h: f64) -> Result<DMatrix<Complex64>> {
    let n = zs.len();
    // Real coordinate r: star r / 2, real part if r is even.
    let shift = |r: usize, d: f64, v: &mut [Complex64]| {
        if r.is_multiple_of(2) {
            v[r / 2].re += d;
        } else {
            v[r / 2].im += d;
        }
    };
    let m = 2 * n;
    let f0 = ln_p(zs)?;
    let mut hess = DMatrix::<f64>::zeros(m, m);
    let mut work = zs.to_vec();
    for a in 0..m {
        for b in 0..m {
            let value = if a == b {
                let mut f = |d: f64| -> Result<f64> {
                    work.copy_from_slice(zs);
                    shift(a, d, &mut work);
                    ln_p(&work)
                };
                (f(h)? - 2.0 * f0 + f(-h)?) / (h * h)
            } else {
                let mut f = |da: f64, db: f64| -> Result<f64> {
                    work.copy_from_slice(zs);
                    shift(a, da, &mut work);
                    shift(b, db, &mut work);
                    ln_p(&work)
                };
                (f(h, h)? - f(h, -h)? - f(-h, h)? + f(-h, -h)?) / (4.0 * h * h)
            };
            hess[(a, b)] = value;
        }
    }
    Ok(DMatrix::from_fn(n, n, |i, j| {
        let (xi, yi, xj, yj) = (2 * i, 2 * i + 1, 2 * j, 2 * j + 1);
        Complex64::new(
            0.25 * (hess[(xi, xj)] + hess[(yi, yj)]),
            0.25 * (hess[(xi, yj)] - hess[(yi, xj)]),
        )
    }))
}

/// Outcome of comparing the metric at steps `h` and `h/2` against the
/// Richardson extrapolation `(4 g(h/4) − g(h/2))/3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepHalving {
    pub error_h: f64,
    pub error_half: f64,
    /// `error_h / error_half`; close to 4 for a second-order stencil.
    pub ratio: f64,
}

pub fn step_halving(stars: &StarSet, h: f64) -> Result<StepHalving> {
    let g1 = metric_symmetric(stars, h)?;
    let g2 = metric_symmetric(stars, h / 2.0)?;
    let g4 = metric_symmetric(stars, h / 4.0)?;
    let reference = (g4.entries() * Complex64::new(4.0, 0.0) - g2.entries()) / Complex64::new(3.0, 0.0);
    let err = |g: &MetricTensor| {
        (g.entries() - &reference)
            .iter()
            .map(|v| v.norm())
            .fold(0.0, f64::max)
    };
    let (error_h, error_half) = (err(&g1), err(&g2));
    Ok(StepHalving {
        error_h,
        error_half,
        ratio: error_h / error_half,
    })
}

/// The SU(2) rotation `(α, β) ↦ (ᾱ_t α + β̄_t β, −β_t α + α_t β)` that sends
/// the target star `t = (α_t, β_t)` to `z = 0` and its antipode to infinity.
/// On finite coordinates it is the Möbius map
/// `z ↦ (α_t z − β_t)/(ᾱ_t + β̄_t z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartRotation {
    target: Star,
}

impl ChartRotation {
    pub fn identity() -> Self {
        Self {
            target: Star::finite(Complex64::new(0.0, 0.0)),
        }
    }

    pub fn target(&self) -> Star {
        self.target
    }

    pub fn apply(&self, star: &Star) -> Star {
        let (ta, tb) = (self.target.alpha(), self.target.beta());
        let (a, b) = (star.alpha(), star.beta());
        Star::from_homogeneous(ta.conj() * a + tb.conj() * b, -tb * a + ta * b)
            .expect("unitary map of a unit vector")
    }

    pub fn apply_inverse(&self, star: &Star) -> Star {
        let (ta, tb) = (self.target.alpha(), self.target.beta());
        let (a, b) = (star.alpha(), star.beta());
        Star::from_homogeneous(ta * a - tb.conj() * b, tb * a + ta.conj() * b)
            .expect("unitary map of a unit vector")
    }
}

/// Chordal distance below which a star counts as sitting on the target's
/// antipode.
const ANTIPODE_GUARD: f64 = 1e-12;

/// Rotates the constellation so that `target` sits at `z = 0`. Fails with
/// [`Error::DegenerateRotation`] if a star is the target's antipode, since it
/// would land at infinity.
pub fn rotate_chart(stars: &StarSet, target: &Star) -> Result<(StarSet, ChartRotation)> {
    let rotation = ChartRotation { target: *target };
    let anti = target.antipode();
    let mut out = Vec::with_capacity(stars.len());
    for (i, s) in stars.stars().iter().enumerate() {
        if s.chordal_distance(&anti) <= ANTIPODE_GUARD {
            return Err(Error::DegenerateRotation(i));
        }
        let r = rotation.apply(s);
        if r.is_infinite() {
            return Err(Error::DegenerateRotation(i));
        }
        out.push(r);
    }
    Ok((StarSet::new(out)?, rotation))
}

/// Number of candidate chart centres tried by [`auto_chart`].
const AUTO_CHART_CANDIDATES: usize = 64;

/// Leaves an all-finite constellation alone; otherwise rotates it so that the
/// point sent to infinity is as far as possible from every star, choosing
/// among a fixed Fibonacci grid on the sphere.
pub fn auto_chart(stars: &StarSet) -> Result<(StarSet, ChartRotation)> {
    if !stars.has_infinite() {
        return Ok((stars.clone(), ChartRotation::identity()));
    }
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    let best = (0..AUTO_CHART_CANDIDATES)
        .map(|k| {
            let cos_theta = 1.0 - 2.0 * (k as f64 + 0.5) / AUTO_CHART_CANDIDATES as f64;
            let half = cos_theta.clamp(-1.0, 1.0).acos() / 2.0;
            let phi = golden * k as f64;
            let target = Star::from_homogeneous(
                Complex64::new(half.cos(), 0.0),
                Complex64::from_polar(half.sin(), phi),
            )
            .expect("unit vector");
            let anti = target.antipode();
            let clearance = stars
                .stars()
                .iter()
                .map(|s| s.chordal_distance(&anti))
                .fold(f64::INFINITY, f64::min);
            (target, clearance)
        })
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .expect("nonempty grid");
    rotate_chart(stars, &best.0)
}
