//! The `verify` harness: every cross-check between the fast paths and the
//! tensor-space oracle, plus the experiment on the lower bound of `P_d`.

use majorana::entanglement::{
    bargmann_invariant, bloch_pair_products, closed_form_p, concurrence_d3, gram,
    perma_concurrence, permanent, permanent_naive, MAX_NAIVE_N,
};
use majorana::geometry::{
    auto_chart, metric_single_qubit, metric_symmetric, rotate_chart, step_halving, DEFAULT_STEP,
};
use majorana::majorana::{constellation_distance, stars_from_state, state_from_stars};
use majorana::oracle::{
    check_algebra, check_dicke_ladder, check_dicke_recursion, displaced_ground, project_state,
    symmetrized_product, CheckReport, FullState,
};
use majorana::sampling::{
    random_separable, random_star, random_state, random_state_without_ground, random_stars,
};
use majorana::{fidelity, overlap, Complex64, Star, StarSet, SymmetricState};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::commands::{HALVING_RATIO, HALVING_STEP};
use crate::{CliError, Result};

/// Largest `N` accepted: the permutation-sum oracle is `O(N!)`.
pub const MAX_VERIFY_N: usize = 8;

pub const ROOT_TOL: f64 = 1e-8;
pub const ROUND_TRIP_FIDELITY_TOL: f64 = 1e-9;
pub const STAR_DISTANCE_TOL: f64 = 1e-7;
pub const RYSER_NAIVE_TOL: f64 = 1e-12;
pub const RYSER_ORACLE_TOL: f64 = 1e-9;
pub const STATE_ORACLE_TOL: f64 = 1e-10;
pub const PERMANENT_IMAG_TOL: f64 = 1e-10;
pub const P_D_UPPER_TOL: f64 = 1e-10;
pub const COHERENT_TOL: f64 = 1e-9;
pub const CONCURRENCE_TOL: f64 = 1e-9;
pub const CLOSED_FORM_TOL: f64 = 1e-10;
pub const TRIPLE_TOL: f64 = 1e-10;
pub const BLOCH_DOT_TOL: f64 = 1e-12;
pub const SINGLE_QUBIT_METRIC_TOL: f64 = 1e-8;
pub const HERMITICITY_TOL: f64 = 1e-6;
pub const PSD_TOL: f64 = 1e-6;
pub const CHART_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyLine {
    pub name: String,
    pub n: usize,
    pub pass: bool,
    pub max_residual: f64,
    pub tolerance: f64,
    /// Experimental lines never affect the exit code.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub experimental: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_min: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub empirical_min: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe: Option<f64>,
}

impl VerifyLine {
    fn at_most(name: impl Into<String>, n: usize, max_residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            n,
            pass: max_residual <= tolerance,
            max_residual,
            tolerance,
            experimental: false,
            claimed_min: None,
            empirical_min: None,
            probe: None,
        }
    }

    fn experimental(mut self) -> Self {
        self.experimental = true;
        self
    }
}

/// Number of gating lines that failed.
pub fn failures(lines: &[VerifyLine]) -> usize {
    lines.iter().filter(|l| !l.experimental && !l.pass).count()
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn push_report(out: &mut Vec<VerifyLine>, prefix: &str, report: &CheckReport) {
    for c in &report.checks {
        out.push(VerifyLine::at_most(
            format!("{prefix}.{}", c.name),
            report.n,
            c.max_residual,
            c.tolerance,
        ));
    }
}

/// Runs every check for `N = 1..=max_n` with `trials` random samples where a
/// check is sampled. Lines come out in a fixed order.
pub fn run_verify(max_n: usize, trials: usize, seed: u64) -> Result<Vec<VerifyLine>> {
    if max_n == 0 || max_n > MAX_VERIFY_N {
        return Err(CliError::Usage(format!(
            "--max-n must be in 1..={MAX_VERIFY_N}, got {max_n}"
        )));
    }
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in 1..=max_n {
        operator_checks(&mut out, n)?;
        dictionary_checks(&mut out, n, trials, &mut rng)?;
        permanent_checks(&mut out, n, trials, &mut rng)?;
        small_n_identities(&mut out, n, trials, &mut rng)?;
        metric_checks(&mut out, n, trials, &mut rng)?;
        if n >= 2 {
            out.push(bound_experiment(n, trials, &mut rng)?);
        }
    }
    Ok(out)
}

fn operator_checks(out: &mut Vec<VerifyLine>, n: usize) -> Result<()> {
    let algebra = check_algebra(n)?;
    push_report(out, "algebra", &algebra);
    if let Some(kappa) = algebra.kappa {
        out.push(VerifyLine::at_most(
            "algebra.kappa",
            n,
            (kappa + 1.0 / n as f64).abs(),
            1e-15,
        ));
    }
    if n >= 2 {
        push_report(out, "dicke_recursion", &check_dicke_recursion(n)?);
    }
    push_report(out, "dicke_ladder", &check_dicke_ladder(n)?);
    Ok(())
}

fn dictionary_checks(
    out: &mut Vec<VerifyLine>,
    n: usize,
    trials: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let d = n + 1;
    let extra = (trials / 5).max(1);
    let mut worst: f64 = 0.0;
    let mut samples: Vec<SymmetricState> = (0..trials).map(|_| random_state(d, rng)).collect();
    samples.extend((0..extra).map(|_| random_state_without_ground(d, rng)));
    samples.extend((0..extra).map(|_| random_separable(d, rng)));
    for s in &samples {
        let stars = stars_from_state(s, ROOT_TOL)?;
        worst = worst.max(1.0 - fidelity(&state_from_stars(&stars), s)?);
    }
    out.push(VerifyLine::at_most("state_round_trip", n, worst, ROUND_TRIP_FIDELITY_TOL));

    let mut worst: f64 = 0.0;
    for t in 0..extra {
        let mut v: Vec<Star> = (0..n).map(|_| random_star(rng)).collect();
        if n >= 2 && t % 3 == 1 {
            v[1] = v[0];
        }
        if t % 3 == 2 {
            v[n - 1] = Star::infinity();
        }
        let stars = StarSet::new(v)?;
        let back = stars_from_state(&state_from_stars(&stars), ROOT_TOL)?;
        worst = worst.max(constellation_distance(&stars, &back).unwrap_or(f64::INFINITY));
    }
    out.push(VerifyLine::at_most("star_round_trip", n, worst, STAR_DISTANCE_TOL));

    let mut worst: f64 = 0.0;
    for _ in 0..trials.min(50) {
        let stars = random_stars(n, rng);
        let oracle = project_state(&symmetrized_product(&stars)?.state)?;
        worst = worst.max(1.0 - fidelity(&oracle, &state_from_stars(&stars))?);
    }
    out.push(VerifyLine::at_most("state_vs_oracle", n, worst, STATE_ORACLE_TOL));

    let mut worst: f64 = 0.0;
    for _ in 0..trials.min(50) {
        let xi = Complex64::from_polar(rng.random_range(0.0..=1.5), rng.random_range(0.0..std::f64::consts::TAU));
        let displaced = displaced_ground(n, xi)?;
        let z = Complex64::from_polar(xi.norm().tan(), xi.arg());
        let product = FullState::product(&vec![Star::finite(z); n])?;
        worst = worst.max(1.0 - displaced.fidelity(&product)?);
    }
    out.push(VerifyLine::at_most("coherent_state", n, worst, COHERENT_TOL));
    Ok(())
}

fn permanent_checks(
    out: &mut Vec<VerifyLine>,
    n: usize,
    trials: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    if n <= MAX_NAIVE_N {
        let mut worst: f64 = 0.0;
        for _ in 0..trials.min(200) {
            let m = DMatrix::from_fn(n, n, |_, _| {
                Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
            });
            let (r, s) = (permanent(&m)?, permanent_naive(&m)?);
            worst = worst.max((r - s).norm() / s.norm().max(f64::MIN_POSITIVE));
        }
        out.push(VerifyLine::at_most("ryser_vs_naive", n, worst, RYSER_NAIVE_TOL));
    }

    let mut worst: f64 = 0.0;
    let count = if n <= 6 { trials.min(100) } else { trials.min(20) };
    for _ in 0..count {
        let stars = random_stars(n, rng);
        let pre = symmetrized_product(&stars)?.pre_norm_sq;
        let perm = gram(&stars).permanent()?;
        worst = worst.max((pre - factorial(n) * perm.re).abs() / pre);
    }
    out.push(VerifyLine::at_most("permanent_vs_oracle", n, worst, RYSER_ORACLE_TOL));

    let (mut imag, mut upper): (f64, f64) = (0.0, 0.0);
    for _ in 0..trials {
        let report = perma_concurrence(&random_stars(n, rng))?;
        imag = imag.max(report.permanent.im.abs());
        upper = upper.max(report.p_d - 1.0);
    }
    out.push(VerifyLine::at_most("permanent_real", n, imag, PERMANENT_IMAG_TOL));
    out.push(VerifyLine::at_most("p_d_at_most_one", n, upper.max(0.0), P_D_UPPER_TOL));
    Ok(())
}

fn small_n_identities(
    out: &mut Vec<VerifyLine>,
    n: usize,
    trials: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    if n == 2 {
        let (mut c_id, mut ov_id, mut dots): (f64, f64, f64) = (0.0, 0.0, 0.0);
        for _ in 0..trials {
            let s = random_state(3, rng);
            let stars = stars_from_state(&s, ROOT_TOL)?;
            let p3 = perma_concurrence(&stars)?.p_d;
            let c = concurrence_d3(&s)?;
            c_id = c_id.max((c - (1.0 / p3 - 1.0)).abs());
            let ov = overlap(&stars.stars()[0], &stars.stars()[1]).norm_sqr();
            ov_id = ov_id.max((ov - (1.0 - c) / (1.0 + c)).abs());
            let pair = random_stars(2, rng);
            let g = gram(&pair);
            let nn = bloch_pair_products(&pair);
            dots = dots.max((nn[(0, 1)] - (2.0 * g.entries()[(0, 1)].norm_sqr() - 1.0)).abs());
        }
        out.push(VerifyLine::at_most("concurrence_identity", n, c_id, CONCURRENCE_TOL));
        out.push(VerifyLine::at_most("overlap_concurrence_identity", n, ov_id, CONCURRENCE_TOL));
        out.push(VerifyLine::at_most("bloch_dot_product", n, dots, BLOCH_DOT_TOL));
    }
    if n == 3 {
        let mut worst: f64 = 0.0;
        for _ in 0..trials {
            let (a, b, c) = (random_star(rng), random_star(rng), random_star(rng));
            let lhs = 2.0 * bargmann_invariant(&a, &b, &c).re;
            let rhs = overlap(&a, &b).norm_sqr() + overlap(&b, &c).norm_sqr()
                + overlap(&c, &a).norm_sqr()
                - 1.0;
            worst = worst.max((lhs - rhs).abs());
        }
        out.push(VerifyLine::at_most("bargmann_invariant", n, worst, TRIPLE_TOL));
    }
    if (2..=4).contains(&n) {
        let (mut ov, mut bl, mut pw): (f64, f64, f64) = (0.0, 0.0, 0.0);
        for _ in 0..trials {
            let stars = random_stars(n, rng);
            let p = perma_concurrence(&stars)?.p_d;
            let cf = closed_form_p(&stars)?;
            ov = ov.max((cf.overlap - p).abs());
            bl = bl.max((cf.bloch - p).abs());
            if let Some(q) = cf.pairwise {
                pw = pw.max((q - p).abs());
            }
        }
        // Only the N ≤ 3 comparisons gate; the N = 4 line is reported.
        let gate = |line: VerifyLine| if n == 4 { line.experimental() } else { line };
        out.push(gate(VerifyLine::at_most("closed_form_overlap", n, ov, CLOSED_FORM_TOL)));
        out.push(gate(VerifyLine::at_most("closed_form_bloch", n, bl, CLOSED_FORM_TOL)));
        if n == 3 {
            out.push(VerifyLine::at_most("closed_form_pairwise", n, pw, CLOSED_FORM_TOL));
        }
    }
    Ok(())
}

/// Random constellations moved into a finite chart and far enough apart for
/// the finite-difference guard at `step`.
fn metric_configurations(n: usize, count: usize, step: f64, rng: &mut ChaCha8Rng) -> Result<Vec<StarSet>> {
    let mut found = Vec::with_capacity(count);
    while found.len() < count {
        let (chart, _) = auto_chart(&random_stars(n, rng))?;
        let s = chart.stars();
        let clear = (0..n).all(|i| (i + 1..n).all(|j| s[i].chordal_distance(&s[j]) > 10.0 * step));
        // Keep coordinates moderate so the chart is well conditioned.
        let bounded = s.iter().all(|st| st.z().is_some_and(|z| z.norm() <= 20.0));
        if clear && bounded {
            found.push(chart);
        }
    }
    Ok(found)
}

fn metric_checks(
    out: &mut Vec<VerifyLine>,
    n: usize,
    trials: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    if n == 1 {
        let mut worst: f64 = 0.0;
        for re in [-5.0, 0.0, 3.0] {
            for im in [-3.0, 0.5, 4.0] {
                let z = Complex64::new(re, im);
                let g = metric_symmetric(&StarSet::new(vec![Star::finite(z)])?, DEFAULT_STEP)?;
                worst = worst.max((g.entries()[(0, 0)].re - metric_single_qubit(z)).abs());
            }
        }
        out.push(VerifyLine::at_most("metric_single_qubit", n, worst, SINGLE_QUBIT_METRIC_TOL));
    }
    if (2..=4).contains(&n) {
        let (mut herm, mut psd): (f64, f64) = (0.0, 0.0);
        for stars in metric_configurations(n, trials.clamp(1, 5), HALVING_STEP, rng)? {
            let g = metric_symmetric(&stars, DEFAULT_STEP)?;
            herm = herm.max(g.hermiticity_defect());
            psd = psd.max((-g.eigenvalues()[0]).max(0.0) / g.trace().abs().max(1.0));
        }
        out.push(VerifyLine::at_most("metric_hermiticity", n, herm, HERMITICITY_TOL));
        out.push(VerifyLine::at_most("metric_psd", n, psd, PSD_TOL));

        let stars = metric_configurations(n, 1, HALVING_STEP, rng)?.remove(0);
        let sh = step_halving(&stars, HALVING_STEP)?;
        out.push(VerifyLine {
            pass: HALVING_RATIO.contains(&sh.ratio),
            ..VerifyLine::at_most("metric_step_halving", n, (sh.ratio - 4.0).abs(), 1.0)
        });
    }
    let mut worst: f64 = 0.0;
    for _ in 0..trials.min(100) {
        let stars = random_stars(n, rng);
        let target = random_star(rng);
        if let Ok((rotated, _)) = rotate_chart(&stars, &target) {
            let a = perma_concurrence(&stars)?.p_d;
            let b = perma_concurrence(&rotated)?.p_d;
            worst = worst.max((a - b).abs());
        }
    }
    out.push(VerifyLine::at_most("chart_invariance", n, worst, CHART_TOL));
    Ok(())
}

/// Smallest `P_d` seen over random states of `N` qubits, next to the claimed
/// minimum `1/N`. For `N = 3` the GHZ state is probed as well.
fn bound_experiment(n: usize, trials: usize, rng: &mut ChaCha8Rng) -> Result<VerifyLine> {
    let claimed = 1.0 / n as f64;
    let mut empirical = f64::INFINITY;
    for _ in 0..trials {
        let s = random_state(n + 1, rng);
        empirical = empirical.min(perma_concurrence(&stars_from_state(&s, ROOT_TOL)?)?.p_d);
    }
    let probe = if n == 3 {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let ghz = SymmetricState::normalize(&[one, zero, zero, one])?;
        let p = perma_concurrence(&stars_from_state(&ghz, ROOT_TOL)?)?.p_d;
        empirical = empirical.min(p);
        Some(p)
    } else {
        None
    };
    Ok(VerifyLine {
        pass: empirical >= claimed - 1e-10,
        claimed_min: Some(claimed),
        empirical_min: Some(empirical),
        probe,
        ..VerifyLine::at_most("bound_experiment", n, (claimed - empirical).max(0.0), 1e-10).experimental()
    })
}
