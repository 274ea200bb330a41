use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::{
    build_collective, build_dicke, check_qubits, dicke_basis, max_abs, FullState, MAX_OPERATOR_QUBITS,
    MAX_QUBITS,
};
use crate::{binomial, Error, Result, Star};

/// Max-entry tolerance for the operator identities.
pub const IDENTITY_TOLERANCE: f64 = 1e-10;

/// Max-entry tolerance for the Dicke recursion.
pub const RECURSION_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl IdentityCheck {
    fn new(name: impl Into<String>, max_residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            max_residual,
            tolerance,
            pass: max_residual <= tolerance,
        }
    }
}

/// Outcome of a batch of identity checks at fixed `N`. Never an error: a
/// failing identity shows up as `pass == false`.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub n: usize,
    /// Deformation parameter of the generalized Weyl-Heisenberg algebra,
    /// `κ = −1/N`, when the report concerns it.
    pub kappa: Option<f64>,
    pub checks: Vec<IdentityCheck>,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.max_residual).fold(0.0, f64::max)
    }
}

type Mat = DMatrix<Complex64>;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn comm(a: &Mat, b: &Mat) -> Mat {
    a * b - b * a
}

/// Verifies the collective qubit algebra as dense matrix identities:
///
/// - `[q⁻, q⁺] = N·I − 2K` on the full space and on the Dicke span
/// - `[K, q±] = ±q±`
/// - `(q±)^{N+1} = 0` (while `(q±)^N ≠ 0`)
/// - `[q⁻, [q⁺, q⁻]] = 2q⁻` and `[q⁺, [q⁺, q⁻]] = −2q⁺` on the Dicke span
/// - `a± = q±/√N` close `[a⁻, a⁺] = I + 2κK` with `κ = −1/N`
/// - `J₊ = q⁻`, `J₋ = q⁺`, `J_z = N/2 − K` act on `|N;k⟩ = |j=N/2, m=N/2−k)`
///   as the Condon-Shortley angular momentum operators
pub fn check_algebra(n: usize) -> Result<CheckReport> {
    check_qubits(n, MAX_OPERATOR_QUBITS)?;
    let ops = build_collective(n)?;
    let (qp, qm, k) = (&ops.q_plus, &ops.q_minus, &ops.k_op);
    let dim = 1usize << n;
    let eye = Mat::identity(dim, dim);
    let basis = dicke_basis(n)?;
    let restrict = |m: &Mat| basis.ad_mul(&(m * &basis));
    let nf = n as f64;
    let tol = IDENTITY_TOLERANCE;
    let mut checks = Vec::new();

    checks.push(IdentityCheck::new("adjoint", max_abs(&(qm - qp.adjoint())), tol));
    checks.push(IdentityCheck::new("number_hermitian", max_abs(&(k - k.adjoint())), tol));

    let c_mp = comm(qm, qp);
    let rhs = &eye * re(nf) - k * re(2.0);
    checks.push(IdentityCheck::new("commutator_full", max_abs(&(&c_mp - &rhs)), tol));
    let sym_rhs = Mat::from_diagonal(&DVector::from_fn(n + 1, |kk, _| re(nf - 2.0 * kk as f64)));
    checks.push(IdentityCheck::new(
        "commutator_symmetric",
        max_abs(&(restrict(&c_mp) - sym_rhs)),
        tol,
    ));

    checks.push(IdentityCheck::new("number_raising", max_abs(&(comm(k, qp) - qp)), tol));
    checks.push(IdentityCheck::new("number_lowering", max_abs(&(comm(k, qm) + qm)), tol));

    let pow = |m: &Mat, e: usize| (0..e).fold(Mat::identity(dim, dim), |acc, _| acc * m);
    let qp_n = pow(qp, n);
    checks.push(IdentityCheck::new("nilpotent_raising", max_abs(&(&qp_n * qp)), tol));
    checks.push(IdentityCheck::new("nilpotent_lowering", max_abs(&(pow(qm, n) * qm)), tol));
    // (q⁺)^N = N! q_1⁺ ⋯ q_N⁺ maps |0…0⟩ to N!|1…1⟩.
    let factorial: f64 = (1..=n).map(|i| i as f64).product();
    checks.push(IdentityCheck::new(
        "nilpotency_order",
        (qp_n[(dim - 1, 0)] - re(factorial)).norm(),
        tol * factorial,
    ));

    let c_pm = comm(qp, qm);
    checks.push(IdentityCheck::new(
        "trilinear_lowering",
        max_abs(&restrict(&(comm(qm, &c_pm) - qm * re(2.0)))),
        tol,
    ));
    checks.push(IdentityCheck::new(
        "trilinear_raising",
        max_abs(&restrict(&(comm(qp, &c_pm) + qp * re(2.0)))),
        tol,
    ));

    let kappa = -1.0 / nf;
    let ap = qp / re(nf.sqrt());
    let am = qm / re(nf.sqrt());
    let deformed = &eye + k * re(2.0 * kappa);
    checks.push(IdentityCheck::new(
        "deformed_oscillator",
        max_abs(&restrict(&(comm(&am, &ap) - deformed))),
        tol,
    ));
    checks.push(IdentityCheck::new(
        "deformed_number",
        max_abs(&(comm(k, &ap) - &ap)).max(max_abs(&(comm(k, &am) + &am))),
        tol,
    ));

    // su(2) dictionary
    let (j_plus, j_minus) = (qm, qp);
    let j_z = &eye * re(nf / 2.0) - k;
    let j = nf / 2.0;
    let mut su2 = 0.0f64;
    for kk in 0..=n {
        let m = j - kk as f64;
        let v = build_dicke(n, kk)?;
        let v = v.vector();
        let up = j_plus * v;
        let expected_up = if kk > 0 {
            build_dicke(n, kk - 1)?.vector() * re(((j - m) * (j + m + 1.0)).sqrt())
        } else {
            DVector::zeros(dim)
        };
        let down = j_minus * v;
        let expected_down = if kk < n {
            build_dicke(n, kk + 1)?.vector() * re(((j + m) * (j - m + 1.0)).sqrt())
        } else {
            DVector::zeros(dim)
        };
        let diag = &j_z * v - v * re(m);
        su2 = su2
            .max(max_abs(&(up - expected_up)))
            .max(max_abs(&(down - expected_down)))
            .max(max_abs(&diag));
    }
    checks.push(IdentityCheck::new("su2_actions", su2, tol));
    let su2_comm = max_abs(&(comm(&j_z, j_plus) - j_plus))
        .max(max_abs(&(comm(&j_z, j_minus) + j_minus)))
        .max(max_abs(&(comm(j_plus, j_minus) - &j_z * re(2.0))));
    checks.push(IdentityCheck::new("su2_commutators", su2_comm, tol));

    Ok(CheckReport {
        n,
        kappa: Some(kappa),
        checks,
    })
}

/// `|N;k⟩ = √((N−k)/N) |N−1;k⟩⊗|0⟩ + √(k/N) |N−1;k−1⟩⊗|1⟩` for every `k`,
/// evaluated in the tensor space.
pub fn check_dicke_recursion(n: usize) -> Result<CheckReport> {
    check_qubits(n, MAX_QUBITS)?;
    if n < 2 {
        return Err(Error::Range {
            what: "N",
            value: n,
            range: "2..=10",
        });
    }
    let zero = FullState::product(&[Star::finite(re(0.0))])?;
    let one = FullState::product(&[Star::infinity()])?;
    let nf = n as f64;
    let mut checks = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut rhs = DVector::<Complex64>::zeros(1 << n);
        if k < n {
            let a = ((nf - k as f64) / nf).sqrt();
            rhs += build_dicke(n - 1, k)?.tensor(&zero)?.vector() * re(a);
        }
        if k > 0 {
            let b = (k as f64 / nf).sqrt();
            rhs += build_dicke(n - 1, k - 1)?.tensor(&one)?.vector() * re(b);
        }
        let residual = max_abs(&(build_dicke(n, k)?.vector() - rhs));
        checks.push(IdentityCheck::new(
            format!("recursion_k{k}"),
            residual,
            RECURSION_TOLERANCE,
        ));
    }
    Ok(CheckReport {
        n,
        kappa: None,
        checks,
    })
}

/// Ladder actions of the collective operators on Dicke vectors, written with
/// `F(N, ℓ) = ℓ(N − ℓ + 1)` and shift `s = 1/2`:
/// `q⁺|N;k⟩ = √F(N, k+s+1/2) |N;k+1⟩`, `q⁻|N;k⟩ = √F(N, k+s−1/2) |N;k−1⟩`,
/// `K|N;k⟩ = k|N;k⟩`; repeated raising
/// `(q⁺)^k |N;0⟩ = √(k! N!/(N−k)!) |N;k⟩`; and orthonormality of the basis.
pub fn check_dicke_ladder(n: usize) -> Result<CheckReport> {
    check_qubits(n, MAX_OPERATOR_QUBITS)?;
    let ops = build_collective(n)?;
    let dim = 1usize << n;
    let nf = n as f64;
    let f = |l: f64| l * (nf - l + 1.0);
    let s = 0.5;
    let (mut up, mut down, mut number, mut repeated) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let ground = build_dicke(n, 0)?;
    let mut raised = ground.vector().clone();
    let mut k_factorial = 1.0;
    for k in 0..=n {
        let kf = k as f64;
        let v = build_dicke(n, k)?;
        let v = v.vector();
        let expected_up = if k < n {
            build_dicke(n, k + 1)?.vector() * re(f(kf + s + 0.5).sqrt())
        } else {
            DVector::zeros(dim)
        };
        up = up.max(max_abs(&(&ops.q_plus * v - expected_up)));
        let expected_down = if k > 0 {
            build_dicke(n, k - 1)?.vector() * re(f(kf + s - 0.5).sqrt())
        } else {
            DVector::zeros(dim)
        };
        down = down.max(max_abs(&(&ops.q_minus * v - expected_down)));
        number = number.max(max_abs(&(&ops.k_op * v - v * re(kf))));

        if k > 0 {
            raised = &ops.q_plus * raised;
            k_factorial *= kf;
        }
        // k! N!/(N−k)! = k!² C(N,k)
        let coeff = (k_factorial * k_factorial * binomial(n, k)).sqrt();
        repeated = repeated.max(max_abs(&(&raised - v * re(coeff))) / coeff.max(1.0));
    }
    let basis = dicke_basis(n)?;
    let ortho = max_abs(&(basis.ad_mul(&basis) - DMatrix::identity(n + 1, n + 1)));

    let tol = IDENTITY_TOLERANCE;
    Ok(CheckReport {
        n,
        kappa: None,
        checks: vec![
            IdentityCheck::new("raising_ladder", up, tol),
            IdentityCheck::new("lowering_ladder", down, tol),
            IdentityCheck::new("number_eigen", number, tol),
            IdentityCheck::new("repeated_raising", repeated, tol),
            IdentityCheck::new("orthonormal", ortho, RECURSION_TOLERANCE),
        ],
    })
}
