use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::{Error, Result};

/// Largest order accepted by [`permanent`].
pub const MAX_PERMANENT_N: usize = 24;

/// Largest order accepted by [`permanent_naive`].
pub const MAX_NAIVE_N: usize = 7;

/// Neumaier's variant of Kahan summation, one accumulator per component.
#[derive(Default)]
struct Compensated {
    sum: f64,
    comp: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Permanent by Ryser's inclusion–exclusion formula in the Nijenhuis–Wilf
/// form, visiting column subsets in Gray-code order so that each step updates
/// the row sums by a single column. `O(2^{N−1} N)` operations.
///
/// With `x_i = a_{i,N} − ½ Σ_j a_{ij}`,
/// `perm(A) = (−1)^{N−1} · 2 · Σ_{S ⊆ {1..N−1}} (−1)^{|S|} Π_i (x_i + Σ_{j∈S} a_{ij})`.
/// Centering the row sums keeps the terms small, which matters for the
/// near-cancelling sums produced by spread-out constellations.
///
/// ```
/// use majorana::entanglement::permanent;
/// use nalgebra::DMatrix;
/// use num_complex::Complex64;
///
/// let ones = DMatrix::from_element(3, 3, Complex64::new(1.0, 0.0));
/// assert!((permanent(&ones).unwrap().re - 6.0).abs() < 1e-12);
/// ```
pub fn permanent(a: &DMatrix<Complex64>) -> Result<Complex64> {
    let n = square_order(a)?;
    if n > MAX_PERMANENT_N {
        return Err(Error::SizeLimit(n));
    }
    if n == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let last = n - 1;
    let mut row: Vec<Complex64> = (0..n)
        .map(|i| a[(i, last)] - a.row(i).sum() * 0.5)
        .collect();
    let mut in_set = vec![false; last];
    let (mut re, mut im) = (Compensated::default(), Compensated::default());
    let term = |row: &[Complex64]| row.iter().product::<Complex64>();
    let t = term(&row);
    re.add(t.re);
    im.add(t.im);

    let mut sign = 1.0;
    for g in 1u64..(1u64 << last) {
        let j = g.trailing_zeros() as usize;
        if in_set[j] {
            for (i, r) in row.iter_mut().enumerate() {
                *r -= a[(i, j)];
            }
        } else {
            for (i, r) in row.iter_mut().enumerate() {
                *r += a[(i, j)];
            }
        }
        in_set[j] = !in_set[j];
        sign = -sign;
        let t = term(&row) * sign;
        re.add(t.re);
        im.add(t.im);
    }
    let outer = if last % 2 == 0 { 2.0 } else { -2.0 };
    Ok(Complex64::new(re.value(), im.value()) * outer)
}

/// Permanent as the literal sum over all `N!` permutations. For `N ≤ 7`.
pub fn permanent_naive(a: &DMatrix<Complex64>) -> Result<Complex64> {
    let n = square_order(a)?;
    if n > MAX_NAIVE_N {
        return Err(Error::Range {
            what: "N",
            value: n,
            range: "0..=7",
        });
    }
    let mut used = vec![false; n];
    let (mut re, mut im) = (Compensated::default(), Compensated::default());
    fn walk(
        a: &DMatrix<Complex64>,
        i: usize,
        prod: Complex64,
        used: &mut [bool],
        re: &mut Compensated,
        im: &mut Compensated,
    ) {
        let n = used.len();
        if i == n {
            re.add(prod.re);
            im.add(prod.im);
            return;
        }
        for j in 0..n {
            if !used[j] {
                used[j] = true;
                walk(a, i + 1, prod * a[(i, j)], used, re, im);
                used[j] = false;
            }
        }
    }
    walk(a, 0, Complex64::new(1.0, 0.0), &mut used, &mut re, &mut im);
    Ok(Complex64::new(re.value(), im.value()))
}

fn square_order(a: &DMatrix<Complex64>) -> Result<usize> {
    if a.nrows() != a.ncols() {
        return Err(Error::DimensionMismatch {
            expected: a.nrows(),
            found: a.ncols(),
        });
    }
    Ok(a.nrows())
}
