use num_complex::Complex64;

use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A point of the Riemann sphere, stored as the normalized qubit
/// `α|0⟩ + β|1⟩`.
///
/// A finite star `z` is `(1, z)/√(1+|z|²)`; the star at infinity is `(0, 1)`.
/// The representative is phase-fixed so that the first nonzero component is
/// real and non-negative, which makes `==` meaningful.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Star {
    alpha: Complex64,
    beta: Complex64,
}

impl Star {
    pub fn finite(z: Complex64) -> Self {
        let n = (1.0 + z.norm_sqr()).sqrt();
        Self {
            alpha: Complex64::new(1.0 / n, 0.0),
            beta: z / n,
        }
    }

    /// The point at infinity, i.e. the qubit `|1⟩`.
    pub fn infinity() -> Self {
        Self {
            alpha: ZERO,
            beta: ONE,
        }
    }

    /// Normalizes and phase-fixes arbitrary homogeneous coordinates.
    /// Returns `None` when both components vanish or are not finite.
    pub fn from_homogeneous(alpha: Complex64, beta: Complex64) -> Option<Self> {
        let norm = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return None;
        }
        let lead = if alpha != ZERO { alpha } else { beta };
        let phase = lead.conj() / lead.norm() / norm;
        let (mut a, mut b) = (alpha * phase, beta * phase);
        if alpha != ZERO {
            a = Complex64::new(alpha.norm() / norm, 0.0);
        } else {
            b = Complex64::new(beta.norm() / norm, 0.0);
        }
        Some(Self { alpha: a, beta: b })
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    pub fn is_infinite(&self) -> bool {
        self.alpha == ZERO
    }

    /// Stereographic coordinate `z = β/α`, or `None` at infinity.
    pub fn z(&self) -> Option<Complex64> {
        (!self.is_infinite()).then(|| self.beta / self.alpha)
    }

    /// The diametrically opposite point `z ↦ −1/z̄`, whose qubit is orthogonal.
    pub fn antipode(&self) -> Self {
        Self::from_homogeneous(-self.beta.conj(), self.alpha.conj())
            .expect("normalized star has a normalized antipode")
    }

    /// `√(1 − |⟨a|b⟩|²)`, evaluated as `|α_a β_b − β_a α_b|` so that it keeps
    /// full relative precision for nearby stars. Ranges over `[0, 1]`, with 1
    /// for antipodes.
    pub fn chordal_distance(&self, other: &Self) -> f64 {
        (self.alpha * other.beta - self.beta * other.alpha).norm().min(1.0)
    }
}

/// Coherent-state overlap `⟨a|b⟩ = ᾱ_a α_b + β̄_a β_b`.
///
/// For finite stars this is `(1 + z̄_a z_b)/√((1+|z_a|²)(1+|z_b|²))`.
pub fn overlap(a: &Star, b: &Star) -> Complex64 {
    a.alpha.conj() * b.alpha + a.beta.conj() * b.beta
}

/// The multiset of `N` Majorana stars of a symmetric `N`-qubit state.
#[derive(Debug, Clone, PartialEq)]
pub struct StarSet {
    stars: Vec<Star>,
    source_degree: usize,
}

impl StarSet {
    pub fn new(stars: Vec<Star>) -> Result<Self> {
        if stars.is_empty() {
            return Err(Error::TooFewAmplitudes(1));
        }
        let at_origin = stars.iter().filter(|s| s.beta == ZERO).count();
        let source_degree = stars.len() - at_origin;
        Ok(Self {
            stars,
            source_degree,
        })
    }

    /// Convenience constructor from stereographic coordinates; `None` is the
    /// star at infinity.
    pub fn from_coordinates(zs: &[Option<Complex64>]) -> Result<Self> {
        Self::new(
            zs.iter()
                .map(|z| z.map_or_else(Star::infinity, Star::finite))
                .collect(),
        )
    }

    pub fn stars(&self) -> &[Star] {
        &self.stars
    }

    /// Number of stars `N`.
    pub fn len(&self) -> usize {
        self.stars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stars.is_empty()
    }

    /// Degree `k_max` of the Bargmann polynomial of the corresponding state:
    /// `N` minus the number of stars sitting exactly at `z = 0`.
    pub fn source_degree(&self) -> usize {
        self.source_degree
    }

    /// Distinct stars with their multiplicities, in order of first appearance.
    pub fn multiplicities(&self) -> Vec<(Star, usize)> {
        let mut out: Vec<(Star, usize)> = Vec::new();
        for s in &self.stars {
            match out.iter_mut().find(|(t, _)| t == s) {
                Some((_, m)) => *m += 1,
                None => out.push((*s, 1)),
            }
        }
        out
    }

    pub fn has_infinite(&self) -> bool {
        self.stars.iter().any(Star::is_infinite)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn overlap_examples() {
        let zero = Star::finite(c(0.0, 0.0));
        assert_eq!(overlap(&zero, &zero), ONE);
        assert_eq!(overlap(&zero, &Star::infinity()), ZERO);
        let z = c(0.4, -1.3);
        let s = Star::finite(z);
        let t = Star::finite(-1.0 / z.conj());
        assert!(overlap(&s, &t).norm() < 1e-15);
        assert!(overlap(&s, &s.antipode()).norm() < 1e-16);
    }

    #[test]
    fn overlap_matches_stereographic_formula() {
        let (za, zb) = (c(0.2, 0.9), c(-1.5, 0.3));
        let expected =
            (1.0 + za.conj() * zb) / ((1.0 + za.norm_sqr()) * (1.0 + zb.norm_sqr())).sqrt();
        let got = overlap(&Star::finite(za), &Star::finite(zb));
        assert!((got - expected).norm() < 1e-15);
    }

    #[test]
    fn phase_fixing() {
        let s = Star::from_homogeneous(c(0.0, 2.0), c(0.0, 2.0)).unwrap();
        assert_eq!(s.alpha().im, 0.0);
        assert!(s.alpha().re > 0.0);
        assert!((s.z().unwrap() - ONE).norm() < 1e-15);
        let inf = Star::from_homogeneous(ZERO, c(0.0, -3.0)).unwrap();
        assert_eq!(inf, Star::infinity());
        assert!(Star::from_homogeneous(ZERO, ZERO).is_none());
    }

    #[test]
    fn antipodes() {
        assert_eq!(Star::finite(ZERO).antipode(), Star::infinity());
        assert_eq!(Star::infinity().antipode(), Star::finite(ZERO));
        let z = c(2.0, -0.5);
        let a = Star::finite(z).antipode();
        assert!((a.z().unwrap() - (-1.0 / z.conj())).norm() < 1e-15);
        assert!((Star::finite(z).chordal_distance(&a) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn chordal_distance_small_separation() {
        let a = Star::finite(c(2.0, 0.0));
        let b = Star::finite(c(2.0001, 0.0));
        // |Δz| / √((1+|z_a|²)(1+|z_b|²))
        let expected = 1e-4 / (5.0f64 * (1.0 + 2.0001f64 * 2.0001)).sqrt();
        assert!((a.chordal_distance(&b) - expected).abs() < 1e-15);
    }

    #[test]
    fn star_set_degree_and_multiplicity() {
        let set =
            StarSet::from_coordinates(&[Some(ZERO), None, Some(ONE), Some(ONE), Some(ZERO)])
                .unwrap();
        assert_eq!(set.len(), 5);
        assert_eq!(set.source_degree(), 3);
        let m = set.multiplicities();
        assert_eq!(m.len(), 3);
        assert_eq!(m[0].1, 2);
        assert_eq!(m[1], (Star::infinity(), 1));
        assert_eq!(m[2].1, 2);
        assert!(set.has_infinite());
        assert!(StarSet::new(vec![]).is_err());
    }
}
