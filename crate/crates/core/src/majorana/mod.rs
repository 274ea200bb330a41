//! The dictionary between Dicke amplitudes and Majorana stars.
//!
//! Going from amplitudes to stars means finding the zeros `ω_i` of the
//! Bargmann polynomial `𝒫(ω) = Σ_k √C(N,k) c_k ω^k` and mapping them through
//! `z_i = −1/ω_i`. In homogeneous coordinates the star of `ω` is simply
//! `(−ω, 1)`, so `ω = 0` lands on the star at infinity without special
//! casing, and the `N − k_max` missing zeros of a polynomial of reduced degree
//! become stars at `z = 0`.
//!
//! Going back is the expansion
//! `c_k ∝ e_k / √C(N,k)` with `e_k` the homogeneous elementary symmetric forms
//! of the stars (see [`crate::homogeneous_symmetric`]).

mod polynomial;
mod roots;

pub use polynomial::MajoranaPolynomial;

use num_complex::Complex64;

use crate::{
    binomial, fidelity, homogeneous_symmetric, Error, Result, Star, StarSet, SymmetricState,
};

/// Default bound on the relative polynomial residual of a returned star.
pub const DEFAULT_ROOT_TOL: f64 = 1e-8;

/// Default chordal tolerance for [`is_separable`].
pub const DEFAULT_SEPARABILITY_TOL: f64 = 1e-6;

/// Stars closer than this (chordal) are always merged into one multiple star.
pub const MERGE_RADIUS: f64 = 1e-6;

/// Largest number of qubits supported by the star dictionary.
pub const MAX_QUBITS: usize = 20;

/// Widest chordal radius at which a merge of nearby roots is attempted; such
/// merges are kept only if they do not degrade the reconstruction.
const MERGE_SEARCH_RADIUS: f64 = 0.1;
const MERGE_RESIDUAL_FLOOR: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootFinderConfig {
    /// Bound on the relative residual of each returned star.
    pub tol: f64,
    /// Seed of the random rotation applied to the initial Aberth circle.
    pub seed: u64,
    /// Aberth sweeps before falling back to companion-matrix eigenvalues.
    pub max_iter: usize,
}

impl Default for RootFinderConfig {
    fn default() -> Self {
        Self {
            tol: DEFAULT_ROOT_TOL,
            seed: 0x6d61_6a6f,
            max_iter: 200,
        }
    }
}

/// Majorana stars of a state, with residual tolerance `tol` and the default
/// seed.
pub fn stars_from_state(state: &SymmetricState, tol: f64) -> Result<StarSet> {
    stars_from_state_with(
        state,
        &RootFinderConfig {
            tol,
            ..Default::default()
        },
    )
}

/// Majorana stars of a state.
///
/// The Bargmann polynomial is stripped of its exact zero coefficients at both
/// ends (stars at infinity below, stars at the origin above), and the
/// remaining zeros are found by Aberth–Ehrlich iteration, with
/// companion-matrix eigenvalues as the fallback, followed by Newton polishing.
/// Clusters of nearby roots are then merged into multiple stars at their
/// centroid: unconditionally within [`MERGE_RADIUS`], and at wider radii only
/// when the merged constellation reproduces the state at least as well.
pub fn stars_from_state_with(state: &SymmetricState, cfg: &RootFinderConfig) -> Result<StarSet> {
    let n = state.n_qubits();
    if n > MAX_QUBITS {
        return Err(Error::Range {
            what: "N",
            value: n,
            range: "1..=20",
        });
    }
    let poly = MajoranaPolynomial::from_state(state);
    let (k_min, k_max) = (poly.k_min(), poly.k_max());
    let reduced: Vec<Complex64> = poly.bargmann_coefficients()[k_min..=k_max].to_vec();

    let (mut omegas, converged) = roots::aberth(&reduced, cfg.max_iter, cfg.seed);
    let mut tried_companion = false;
    if !converged {
        if let Some(eig) = roots::companion_roots(&reduced) {
            omegas = eig;
            tried_companion = true;
        }
    }
    loop {
        roots::polish(&reduced, &mut omegas);
        let stars = assemble(n, k_min, k_max, &omegas);
        let stars = merge_clusters(state, &poly.bargmann_coefficients(), stars);
        let residual = max_residual(&poly, &stars);
        if residual <= cfg.tol {
            return StarSet::new(stars);
        }
        if tried_companion {
            return Err(Error::RootFindingFailed {
                residual,
                tol: cfg.tol,
            });
        }
        match roots::companion_roots(&reduced) {
            Some(eig) => omegas = eig,
            None => {
                return Err(Error::RootFindingFailed {
                    residual,
                    tol: cfg.tol,
                })
            }
        }
        tried_companion = true;
    }
}

fn assemble(n: usize, k_min: usize, k_max: usize, omegas: &[Complex64]) -> Vec<Star> {
    let mut stars = Vec::with_capacity(n);
    stars.extend(std::iter::repeat_n(Star::infinity(), k_min));
    stars.extend(omegas.iter().map(|&w| {
        Star::from_homogeneous(-w, Complex64::new(1.0, 0.0)).unwrap_or_else(Star::infinity)
    }));
    stars.extend(std::iter::repeat_n(Star::finite(Complex64::new(0.0, 0.0)), n - k_max));
    stars
}

fn max_residual(poly: &MajoranaPolynomial, stars: &[Star]) -> f64 {
    stars
        .iter()
        .map(|s| poly.relative_residual(s))
        .fold(0.0, f64::max)
}

/// Phase-aligned average of unit 2-vectors, renormalized.
fn centroid(members: &[Star]) -> Star {
    let first = members[0];
    let (mut a, mut b) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    for s in members {
        let ov = crate::overlap(s, &first);
        let phase = if ov.norm() > 0.0 { ov / ov.norm() } else { Complex64::new(1.0, 0.0) };
        a += s.alpha() * phase;
        b += s.beta() * phase;
    }
    Star::from_homogeneous(a, b).unwrap_or(first)
}

/// Representative of a cluster of `m` roots: the centroid, refined by Newton
/// iteration on the `(m−1)`-th derivative of the Bargmann form, where an
/// `m`-fold zero is simple. The refinement is dropped if it wanders off.
fn cluster_star(bargmann: &[Complex64], members: &[Star]) -> Star {
    let start = centroid(members);
    let spread = members
        .iter()
        .map(|s| s.chordal_distance(&start))
        .fold(0.0, f64::max);
    match refine_multiple(bargmann, start, members.len()) {
        Some(r) if r.chordal_distance(&start) <= 2.0 * spread + 1e-12 => r,
        _ => start,
    }
}

/// Newton on the `(m−1)`-th derivative in the chart where the star has
/// modulus at most one. With `ω = −α/β` the Bargmann form is
/// `H(u, v) = Σ_k b_k u^k v^{N−k}` at `(u, v) = (−α, β)`.
fn refine_multiple(bargmann: &[Complex64], star: Star, m: usize) -> Option<Star> {
    let (alpha, beta) = (star.alpha(), star.beta());
    // Chart u (v = 1) if |β| ≥ |α|, else chart t = v/u (u = 1).
    let use_u = beta.norm() >= alpha.norm();
    let mut coeffs: Vec<Complex64> = if use_u {
        bargmann.to_vec()
    } else {
        bargmann.iter().rev().copied().collect()
    };
    let mut x = if use_u { -alpha / beta } else { -beta / alpha };
    for _ in 1..m {
        coeffs = coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * k as f64)
            .collect();
    }
    if coeffs.len() < 2 {
        return None;
    }
    for _ in 0..50 {
        let (p, dp, _) = roots::eval_with_derivative(&coeffs, x);
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        x -= step;
        if !x.is_finite() {
            return None;
        }
        if step.norm() <= 4.0 * f64::EPSILON * x.norm().max(f64::MIN_POSITIVE) {
            break;
        }
    }
    let one = Complex64::new(1.0, 0.0);
    if use_u {
        Star::from_homogeneous(-x, one)
    } else {
        Star::from_homogeneous(-one, x)
    }
}

/// `min_φ ‖ψ − e^{iφ} ψ'‖`, at full precision even when tiny.
fn reconstruction_error(state: &SymmetricState, stars: &[Star]) -> f64 {
    let rebuilt = state_from_star_slice(stars);
    let ov = rebuilt.inner(state).expect("same dimension");
    let phase = if ov.norm() > 0.0 { ov / ov.norm() } else { Complex64::new(1.0, 0.0) };
    state
        .amplitudes()
        .iter()
        .zip(rebuilt.amplitudes())
        .map(|(a, b)| (a - b * phase).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

fn merge_clusters(state: &SymmetricState, bargmann: &[Complex64], stars: Vec<Star>) -> Vec<Star> {
    // Each cluster is a sorted list of original star indices.
    let mut clusters: Vec<Vec<usize>> = (0..stars.len()).map(|i| vec![i]).collect();
    let materialize = |clusters: &[Vec<usize>]| -> Vec<Star> {
        let mut out = stars.clone();
        for cl in clusters.iter().filter(|cl| cl.len() > 1) {
            let members: Vec<Star> = cl.iter().map(|&i| stars[i]).collect();
            let c = cluster_star(bargmann, &members);
            for &i in cl {
                out[i] = c;
            }
        }
        out
    };

    let mut current_error: Option<f64> = None;
    let mut radius = MERGE_RADIUS;
    while radius <= MERGE_SEARCH_RADIUS * (1.0 + 1e-9) {
        let unconditional = radius <= MERGE_RADIUS * (1.0 + 1e-9);
        let mut rejected: Vec<Vec<usize>> = Vec::new();
        loop {
            let reps = materialize(&clusters);
            let mut merged_any = false;
            for group in link_components(&clusters, &reps, radius) {
                if group.len() < 2 {
                    continue;
                }
                let mut members: Vec<usize> =
                    group.iter().flat_map(|&ci| clusters[ci].iter().copied()).collect();
                members.sort_unstable();
                if rejected.contains(&members) {
                    continue;
                }
                let mut candidate: Vec<Vec<usize>> = clusters
                    .iter()
                    .enumerate()
                    .filter(|(ci, _)| !group.contains(ci))
                    .map(|(_, cl)| cl.clone())
                    .collect();
                candidate.push(members.clone());
                let accept = if unconditional {
                    current_error = None;
                    true
                } else {
                    let before = *current_error
                        .get_or_insert_with(|| reconstruction_error(state, &reps));
                    let after = reconstruction_error(state, &materialize(&candidate));
                    let ok = after <= MERGE_RESIDUAL_FLOOR.max(10.0 * before);
                    if ok {
                        current_error = Some(after);
                    }
                    ok
                };
                if accept {
                    clusters = candidate;
                    merged_any = true;
                    // Cluster indices have shifted; recompute the components.
                    break;
                }
                rejected.push(members);
            }
            if !merged_any {
                break;
            }
        }
        radius *= 10.0;
    }
    materialize(&clusters)
}

/// Connected components of clusters whose representatives are within
/// `radius` of each other (single linkage). Indices refer to `clusters`.
fn link_components(clusters: &[Vec<usize>], reps: &[Star], radius: f64) -> Vec<Vec<usize>> {
    let m = clusters.len();
    let rep = |ci: usize| reps[clusters[ci][0]];
    let mut component: Vec<usize> = (0..m).collect();
    fn find(c: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while c[r] != r {
            r = c[r];
        }
        c[i] = r;
        r
    }
    for i in 0..m {
        for j in i + 1..m {
            if rep(i).chordal_distance(&rep(j)) <= radius {
                let (a, b) = (find(&mut component, i), find(&mut component, j));
                component[a] = b;
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut label: Vec<Option<usize>> = vec![None; m];
    for i in 0..m {
        let r = find(&mut component, i);
        match label[r] {
            Some(g) => groups[g].push(i),
            None => {
                label[r] = Some(groups.len());
                groups.push(vec![i]);
            }
        }
    }
    groups
}

/// The state whose Majorana stars are `stars`:
/// `c_k ∝ √(k!(N−k)!/N!) e_k`, unit norm, first nonzero amplitude real
/// positive.
pub fn state_from_stars(stars: &StarSet) -> SymmetricState {
    state_from_star_slice(stars.stars())
}

fn state_from_star_slice(stars: &[Star]) -> SymmetricState {
    let n = stars.len();
    let e = homogeneous_symmetric(stars);
    let amps: Vec<Complex64> = e
        .iter()
        .enumerate()
        .map(|(k, ek)| ek / binomial(n, k).sqrt())
        .collect();
    // A product of nonzero linear forms is a nonzero polynomial.
    SymmetricState::normalize(&amps).expect("nonempty star set gives a nonzero state")
}

/// Bargmann function `ψ(z) = (1 + |z|²)^{−N/2} Σ_k √C(N,k) c_k z^k`.
pub fn bargmann_eval(state: &SymmetricState, z: Complex64) -> Complex64 {
    let n = state.n_qubits();
    let poly: Complex64 = state
        .amplitudes()
        .iter()
        .enumerate()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, (k, c)| {
            acc * z + c * binomial(n, k).sqrt()
        });
    poly * (1.0 + z.norm_sqr()).powf(-(n as f64) / 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Separability {
    pub separable: bool,
    /// The common star when the state is `|z⟩^{⊗N}`.
    pub witness: Option<Star>,
}

/// Whether all stars coincide, i.e. `|⟨z_i|z_j⟩| ≥ 1 − tol²/2` for every pair.
pub fn is_separable(state: &SymmetricState, tol: f64) -> Result<Separability> {
    let stars = stars_from_state(state, DEFAULT_ROOT_TOL)?;
    let first = stars.stars()[0];
    // |⟨a|b⟩| ≥ 1 − t²/2  ⇔  chordal ≤ t √(1 − t²/4)
    let bound = tol * (1.0 - tol * tol / 4.0).max(0.0).sqrt();
    let separable = stars
        .stars()
        .iter()
        .all(|s| s.chordal_distance(&first) <= bound);
    if !separable {
        return Ok(Separability {
            separable,
            witness: None,
        });
    }
    let witness = centroid(stars.stars());
    Ok(Separability {
        separable,
        witness: Some(witness),
    })
}

/// Closed-form stars of a qutrit (`N = 2`) with `c_0 ≠ 0`:
/// `z± = (c_1 ± √(c_1² − 2 c_0 c_2)) / (√2 c_0)`.
pub fn qutrit_roots(state: &SymmetricState) -> Option<[Complex64; 2]> {
    let c = state.amplitudes();
    if c.len() != 3 || c[0].norm() == 0.0 {
        return None;
    }
    let disc = (c[1] * c[1] - 2.0 * c[0] * c[2]).sqrt();
    let denom = 2f64.sqrt() * c[0];
    Some([(c[1] + disc) / denom, (c[1] - disc) / denom])
}

/// Largest chordal distance between matched stars, minimized over all
/// matchings of the two multisets (bottleneck assignment). `None` if the sizes
/// differ. Exact by dynamic programming over subsets, so limited to
/// [`MAX_QUBITS`] stars.
pub fn constellation_distance(a: &StarSet, b: &StarSet) -> Option<f64> {
    let (a, b) = (a.stars(), b.stars());
    let n = a.len();
    if n != b.len() || n > MAX_QUBITS {
        return None;
    }
    let dist: Vec<Vec<f64>> = a
        .iter()
        .map(|x| b.iter().map(|y| x.chordal_distance(y)).collect())
        .collect();
    // best[mask]: stars a[0..popcount(mask)] matched into the b-subset mask.
    let mut best = vec![f64::INFINITY; 1 << n];
    best[0] = 0.0;
    for mask in 0usize..(1 << n) {
        let cost = best[mask];
        if cost.is_infinite() {
            continue;
        }
        let i = mask.count_ones() as usize;
        if i == n {
            continue;
        }
        for (j, d) in dist[i].iter().enumerate() {
            if mask & (1 << j) == 0 {
                let next = mask | (1 << j);
                best[next] = best[next].min(cost.max(*d));
            }
        }
    }
    Some(best[(1 << n) - 1])
}

/// Fidelity of the state rebuilt from `stars` against `state`.
pub fn round_trip_fidelity(state: &SymmetricState, stars: &StarSet) -> Result<f64> {
    fidelity(&state_from_stars(stars), state)
}
