use num_complex::Complex64;

use crate::{Error, Result, Star};

/// Elementary symmetric polynomial `s_k(x_1, …, x_N)`: the sum over all
/// `k`-subsets of the product of the chosen values, with `s_0 = 1`.
///
/// ```
/// use majorana::elementary_symmetric;
/// use num_complex::Complex64;
///
/// let xs: Vec<_> = [1.0, 2.0, 3.0].iter().map(|&x| Complex64::new(x, 0.0)).collect();
/// assert_eq!(elementary_symmetric(2, &xs).unwrap(), Complex64::new(11.0, 0.0));
/// ```
pub fn elementary_symmetric(k: usize, values: &[Complex64]) -> Result<Complex64> {
    if k > values.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: values.len(),
        });
    }
    Ok(all_elementary_symmetric(values)[k])
}

/// All of `s_0, …, s_N` in `O(N²)` by expanding `Π (1 + x_i t)` one factor at
/// a time.
pub(crate) fn all_elementary_symmetric(values: &[Complex64]) -> Vec<Complex64> {
    let mut e = vec![Complex64::new(0.0, 0.0); values.len() + 1];
    e[0] = Complex64::new(1.0, 0.0);
    for (m, x) in values.iter().enumerate() {
        for k in (1..=m + 1).rev() {
            let prev = e[k - 1];
            e[k] += x * prev;
        }
    }
    e
}

/// Homogeneous elementary symmetric forms of a star multiset:
/// `e_k = Σ_{|S| = k} Π_{i∈S} β_i Π_{i∉S} α_i`, the coefficients of
/// `Π (α_i + β_i t)`.
///
/// Reduces to `Π α_i · s_k(z)` when every star is finite, and stays well
/// defined for stars at infinity.
pub fn homogeneous_symmetric(stars: &[Star]) -> Vec<Complex64> {
    let mut e = vec![Complex64::new(0.0, 0.0); stars.len() + 1];
    e[0] = Complex64::new(1.0, 0.0);
    for (m, s) in stars.iter().enumerate() {
        let (a, b) = (s.alpha(), s.beta());
        for k in (1..=m + 1).rev() {
            e[k] = a * e[k] + b * e[k - 1];
        }
        e[0] *= a;
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Sum over explicit subsets, for comparison.
    fn subset_sum(k: usize, xs: &[Complex64]) -> Complex64 {
        (0u32..1 << xs.len())
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| {
                (0..xs.len())
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| xs[i])
                    .product::<Complex64>()
            })
            .sum()
    }

    #[test]
    fn examples() {
        let xs = [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)];
        assert_eq!(elementary_symmetric(0, &xs).unwrap(), c(1.0, 0.0));
        assert_eq!(elementary_symmetric(2, &xs).unwrap(), c(11.0, 0.0));
        let z = c(0.7, -0.2);
        let got = elementary_symmetric(2, &[z, z, z]).unwrap();
        assert!((got - 3.0 * z * z).norm() < 1e-15);
        assert_eq!(
            elementary_symmetric(4, &xs),
            Err(Error::IndexOutOfRange { index: 4, max: 3 })
        );
    }

    #[test]
    fn matches_subset_enumeration() {
        let xs = [c(0.3, 1.0), c(-2.0, 0.5), c(1.5, -0.7), c(0.0, 2.0), c(-0.4, -0.4)];
        for k in 0..=xs.len() {
            let d = elementary_symmetric(k, &xs).unwrap() - subset_sum(k, &xs);
            assert!(d.norm() < 1e-13, "k = {k}");
        }
    }

    #[test]
    fn homogeneous_reduces_for_finite_stars() {
        let zs = [c(0.3, 1.0), c(-2.0, 0.5), c(1.5, -0.7)];
        let stars: Vec<_> = zs.iter().map(|&z| Star::finite(z)).collect();
        let scale: Complex64 = stars.iter().map(|s| s.alpha()).product();
        let e = homogeneous_symmetric(&stars);
        for (k, ek) in e.iter().enumerate() {
            let expected = scale * elementary_symmetric(k, &zs).unwrap();
            assert!((ek - expected).norm() < 1e-15);
        }
    }

    #[test]
    fn homogeneous_with_infinity() {
        let e = homogeneous_symmetric(&[Star::finite(c(0.0, 0.0)), Star::infinity()]);
        assert_eq!(e, vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
    }
}
