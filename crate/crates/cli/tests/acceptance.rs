//! Acceptance suite. Prints one PASS/FAIL line per criterion and fails if any
//! gating criterion fails. Run with `cargo test -p majorana-cli --test acceptance`.

use std::process::Command;
use std::time::{Duration, Instant};

use majorana::entanglement::{
    bargmann_invariant, bloch_pair_products, closed_form_p, concurrence_d3, gram, perma_concurrence,
    permanent, permanent_naive,
};
use majorana::geometry::{
    auto_chart, metric_single_qubit, metric_symmetric, rotate_chart, step_halving, DEFAULT_STEP,
};
use majorana::majorana::{constellation_distance, state_from_stars, stars_from_state};
use majorana::oracle::{
    build_dicke, check_algebra, check_dicke_recursion, displaced_ground, symmetrized_product,
    FullState,
};
use majorana::sampling::{
    random_separable, random_star, random_stars, random_state, random_state_without_ground,
};
use majorana::{fidelity, overlap, Complex64, Star, StarSet, SymmetricState};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ROOT_TOL: f64 = 1e-8;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Vec<Outcome>,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn within(label: &str, value: f64, tol: f64) -> Outcome {
    Outcome::new(value <= tol, format!("{label} = {value:.3e} (tol {tol:.0e})"))
}

fn landmark(label: &str, value: f64, expected: f64, tol: f64) -> Outcome {
    let dev = (value - expected).abs();
    Outcome::new(
        dev <= tol,
        format!("{label} = {value:.15} (expected {expected:.15}, |dev| {dev:.1e}, tol {tol:.0e})"),
    )
}

fn p_d(stars: &StarSet) -> f64 {
    perma_concurrence(stars).unwrap().p_d
}

fn algebra() -> Vec<Outcome> {
    let mut worst: f64 = 0.0;
    let mut all = true;
    let mut kappa_one = f64::NAN;
    for n in 1..=8 {
        let report = check_algebra(n).unwrap();
        all &= report.all_pass();
        worst = worst.max(report.max_residual());
        if n == 1 {
            kappa_one = report.kappa.unwrap();
        }
    }
    vec![
        Outcome::new(
            all && worst <= 1e-10,
            format!("N=1..8 max identity residual = {worst:.3e} (tol 1e-10)"),
        ),
        Outcome::new(kappa_one == -1.0, format!("kappa at N=1 = {kappa_one}")),
    ]
}

fn dicke() -> Vec<Outcome> {
    let h = 0.5;
    let s6 = 1.0 / 6f64.sqrt();
    let expected: [(&[&str], f64); 5] = [
        (&["0000"], 1.0),
        (&["0001", "0010", "0100", "1000"], h),
        (&["0011", "0101", "0110", "1001", "1010", "1100"], s6),
        (&["0111", "1011", "1101", "1110"], h),
        (&["1111"], 1.0),
    ];
    let mut mismatches = 0;
    for (k, (strings, amp)) in expected.iter().enumerate() {
        let v = build_dicke(4, k).unwrap();
        for (x, a) in v.vector().iter().enumerate() {
            let listed = strings
                .iter()
                .any(|s| usize::from_str_radix(s, 2).unwrap() == x);
            let want = if listed { c(*amp) } else { c(0.0) };
            if *a != want {
                mismatches += 1;
            }
        }
    }
    let mut worst: f64 = 0.0;
    let mut all = true;
    for n in 2..=10 {
        let report = check_dicke_recursion(n).unwrap();
        all &= report.all_pass();
        worst = worst.max(report.max_residual());
    }
    vec![
        Outcome::new(
            mismatches == 0,
            format!("N=4 amplitude pattern: {mismatches} mismatching entries over 5 states"),
        ),
        Outcome::new(
            all && worst <= 1e-12,
            format!("recursion N<=10 max residual = {worst:.3e} (tol 1e-12)"),
        ),
    ]
}

fn round_trip() -> Vec<Outcome> {
    let mut r = rng(3);
    let mut out = Vec::new();
    for d in 3..=11 {
        let mut samples: Vec<SymmetricState> = (0..1000).map(|_| random_state(d, &mut r)).collect();
        samples.extend((0..100).map(|_| random_state_without_ground(d, &mut r)));
        samples.extend((0..100).map(|_| random_separable(d, &mut r)));
        let mut worst: f64 = 0.0;
        for s in &samples {
            let stars = stars_from_state(s, ROOT_TOL).unwrap();
            worst = worst.max(1.0 - fidelity(&state_from_stars(&stars), s).unwrap());
        }
        out.push(within(
            &format!("d={d} ({} states) max 1-fidelity", samples.len()),
            worst,
            1e-9,
        ));
    }
    out
}

fn concurrence() -> Vec<Outcome> {
    let mut r = rng(4);
    let (mut c_id, mut ov_id): (f64, f64) = (0.0, 0.0);
    for _ in 0..1000 {
        let s = random_state(3, &mut r);
        let stars = stars_from_state(&s, ROOT_TOL).unwrap();
        let conc = concurrence_d3(&s).unwrap();
        c_id = c_id.max((conc - (1.0 / p_d(&stars) - 1.0)).abs());
        let ov = overlap(&stars.stars()[0], &stars.stars()[1]).norm_sqr();
        ov_id = ov_id.max((ov - (1.0 - conc) / (1.0 + conc)).abs());
    }
    vec![
        within("max |C - (1/P_3 - 1)|", c_id, 1e-9),
        within("max ||<z1|z2>|^2 - (1-C)/(1+C)|", ov_id, 1e-9),
    ]
}

fn permanents() -> Vec<Outcome> {
    let mut r = rng(5);
    let mut out = Vec::new();
    let mut worst: f64 = 0.0;
    for n in 1..=7 {
        for _ in 0..200 {
            let m = DMatrix::from_fn(n, n, |_, _| {
                Complex64::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0))
            });
            let (a, b) = (permanent(&m).unwrap(), permanent_naive(&m).unwrap());
            worst = worst.max((a - b).norm() / b.norm());
        }
    }
    out.push(within("Ryser vs naive, N<=7, max relative error", worst, 1e-12));

    let mut worst: f64 = 0.0;
    for n in 1..=8 {
        for _ in 0..100 {
            let stars = random_stars(n, &mut r);
            let pre = symmetrized_product(&stars).unwrap().pre_norm_sq;
            let perm = gram(&stars).permanent().unwrap();
            worst = worst.max((pre - factorial(n) * perm.re).abs() / pre);
        }
    }
    out.push(within("Ryser vs symmetrized norm, N<=8, max relative error", worst, 1e-9));

    let m = DMatrix::from_fn(20, 20, |_, _| {
        Complex64::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0))
    });
    let start = Instant::now();
    let value = permanent(&m).unwrap();
    let secs = start.elapsed().as_secs_f64();
    out.push(Outcome::new(
        value.is_finite() && secs <= 5.0,
        format!("Ryser N=20 in {secs:.3} s (limit 5 s)"),
    ));
    out
}

fn landmarks() -> Vec<Outcome> {
    let mut out = Vec::new();
    let zero = c(0.0);
    let w = SymmetricState::new(&[zero, c(1.0), zero]).unwrap();
    out.push(landmark(
        "P_3(|2;1>)",
        p_d(&stars_from_state(&w, ROOT_TOL).unwrap()),
        0.5,
        1e-12,
    ));

    let mut r = rng(6);
    let mut worst: f64 = 0.0;
    for d in 2..=11 {
        for _ in 0..20 {
            let s = random_separable(d, &mut r);
            worst = worst.max((p_d(&stars_from_state(&s, ROOT_TOL).unwrap()) - 1.0).abs());
        }
    }
    out.push(within("separable d=2..11, max |P_d - 1|", worst, 1e-12));

    // One star orthogonal to the other three, which coincide.
    let mut worst: f64 = 0.0;
    let mut cases = vec![StarSet::new(vec![
        Star::finite(zero),
        Star::infinity(),
        Star::infinity(),
        Star::infinity(),
    ])
    .unwrap()];
    for _ in 0..20 {
        let a = random_star(&mut r);
        cases.push(StarSet::new(vec![a, a.antipode(), a.antipode(), a.antipode()]).unwrap());
    }
    for stars in &cases {
        worst = worst.max((p_d(stars) - 0.25).abs());
    }
    out.push(within(
        "P_5 with <z1|z2>=<z1|z3>=<z1|z4>=0, max |P_5 - 1/4|",
        worst,
        1e-10,
    ));

    let ghz = SymmetricState::normalize(&[c(1.0), zero, zero, c(1.0)]).unwrap();
    let ghz_stars = stars_from_state(&ghz, ROOT_TOL).unwrap();
    let oracle = symmetrized_product(&ghz_stars).unwrap().pre_norm_sq / factorial(3).powi(2);
    let value = p_d(&ghz_stars);
    let mut line = landmark("P_4(GHZ)", value, 0.25, 1e-10);
    line.pass &= (oracle - value).abs() <= 1e-10;
    line.detail += &format!(
        "; symmetrized-norm oracle {:.15}; claimed lower bound 1/3 {} (reported only)",
        oracle,
        if value < 1.0 / 3.0 { "violated" } else { "respected" }
    );
    out.push(line);
    out
}

fn closed_forms() -> Vec<Outcome> {
    let mut r = rng(7);
    let mut out = Vec::new();
    for n in 2..=4 {
        let (mut ov, mut bl, mut pw): (f64, f64, f64) = (0.0, 0.0, 0.0);
        for _ in 0..1000 {
            let stars = random_stars(n, &mut r);
            let p = p_d(&stars);
            let cf = closed_form_p(&stars).unwrap();
            ov = ov.max((cf.overlap - p).abs());
            bl = bl.max((cf.bloch - p).abs());
            if let Some(q) = cf.pairwise {
                pw = pw.max((q - p).abs());
            }
        }
        let d = n + 1;
        if n == 4 {
            println!(
                "INFO [7] P_5 closed forms over 1000 constellations: overlap max dev {ov:.3e}, Bloch max dev {bl:.3e} (reported, not gated)"
            );
            continue;
        }
        out.push(within(&format!("P_{d} overlap form, max dev"), ov, 1e-10));
        out.push(within(&format!("P_{d} Bloch form, max dev"), bl, 1e-10));
        if n == 3 {
            out.push(within("P_4 pairwise form, max dev", pw, 1e-10));
        }
    }
    out
}

fn bloch_identities() -> Vec<Outcome> {
    let mut r = rng(8);
    let (mut triple, mut pair): (f64, f64) = (0.0, 0.0);
    for _ in 0..1000 {
        let (a, b, s) = (random_star(&mut r), random_star(&mut r), random_star(&mut r));
        let lhs = 2.0 * bargmann_invariant(&a, &b, &s).re;
        let rhs = overlap(&a, &b).norm_sqr() + overlap(&b, &s).norm_sqr() + overlap(&s, &a).norm_sqr()
            - 1.0;
        triple = triple.max((lhs - rhs).abs());
        let stars = random_stars(2, &mut r);
        let nn = bloch_pair_products(&stars);
        let a01 = overlap(&stars.stars()[0], &stars.stars()[1]).norm_sqr();
        pair = pair.max((nn[(0, 1)] - (2.0 * a01 - 1.0)).abs());
    }
    vec![
        within("Bargmann invariant identity, max residual", triple, 1e-10),
        within("n_i.n_j = 2|<z_i|z_j>|^2 - 1, max residual", pair, 1e-12),
    ]
}

fn coherent() -> Vec<Outcome> {
    let mut r = rng(9);
    let mut worst: f64 = 0.0;
    for n in 1..=8 {
        for _ in 0..50 {
            let xi = Complex64::from_polar(
                r.random_range(0.0..=1.5),
                r.random_range(0.0..std::f64::consts::TAU),
            );
            let displaced = displaced_ground(n, xi).unwrap();
            let z = Complex64::from_polar(xi.norm().tan(), xi.arg());
            let product = FullState::product(&vec![Star::finite(z); n]).unwrap();
            worst = worst.max(1.0 - displaced.fidelity(&product).unwrap());
        }
    }
    vec![within("N<=8, 50 xi each, max 1-fidelity", worst, 1e-9)]
}

fn geometry() -> Vec<Outcome> {
    let mut out = Vec::new();
    let mut worst: f64 = 0.0;
    for re in [-5.0, 0.0, 3.0] {
        for im in [-3.0, 0.5, 4.0] {
            let z = Complex64::new(re, im);
            let stars = StarSet::new(vec![Star::finite(z)]).unwrap();
            let g = metric_symmetric(&stars, DEFAULT_STEP).unwrap();
            worst = worst.max((g.entries()[(0, 0)].re - metric_single_qubit(z)).abs());
        }
    }
    out.push(within("N=1 nine-point grid, max |g - 1/(1+|z|^2)^2|", worst, 1e-8));

    let mut r = rng(10);
    let mut configs = Vec::new();
    while configs.len() < 15 {
        let n = 2 + configs.len() % 3;
        let (chart, _) = auto_chart(&random_stars(n, &mut r)).unwrap();
        let s = chart.stars();
        let clear = (0..n).all(|i| (i + 1..n).all(|j| s[i].chordal_distance(&s[j]) > 0.1));
        let bounded = s.iter().all(|st| st.z().is_some_and(|z| z.norm() <= 20.0));
        if clear && bounded {
            configs.push(chart);
        }
    }
    let mut herm: f64 = 0.0;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for stars in &configs {
        herm = herm.max(metric_symmetric(stars, DEFAULT_STEP).unwrap().hermiticity_defect());
        let ratio = step_halving(stars, 1e-2).unwrap().ratio;
        lo = lo.min(ratio);
        hi = hi.max(ratio);
    }
    out.push(within("N=2..4 Hermiticity residual", herm, 1e-6));
    out.push(Outcome::new(
        (3.0..=5.0).contains(&lo) && (3.0..=5.0).contains(&hi),
        format!("step-halving error ratio at h=1e-2 in [{lo:.3}, {hi:.3}] (required within [3, 5])"),
    ));

    let mut worst: f64 = 0.0;
    let mut rotations = 0;
    while rotations < 100 {
        let n = 2 + rotations % 5;
        let stars = random_stars(n, &mut r);
        if let Ok((rotated, _)) = rotate_chart(&stars, &random_star(&mut r)) {
            worst = worst.max((p_d(&stars) - p_d(&rotated)).abs());
            rotations += 1;
        }
    }
    out.push(within("P_d chart invariance over 100 rotations", worst, 1e-10));

    // Sanity: the star dictionary survives the rotation round trip.
    let stars = random_stars(4, &mut r);
    let (rotated, rot) = rotate_chart(&stars, &random_star(&mut r)).unwrap();
    let back = StarSet::new(rotated.stars().iter().map(|s| rot.apply_inverse(s)).collect()).unwrap();
    out.push(within(
        "inverse rotation restores the constellation",
        constellation_distance(&stars, &back).unwrap(),
        1e-12,
    ));
    out
}

fn end_to_end() -> Vec<Outcome> {
    let start = Instant::now();
    let output = Command::new(env!("CARGO_BIN_EXE_majorana"))
        .args(["verify", "--max-n", "6", "--trials", "500", "--seed", "1"])
        .output()
        .unwrap();
    let secs = start.elapsed().as_secs_f64();
    let lines = String::from_utf8_lossy(&output.stdout).lines().count();
    let code = output.status.code();
    vec![Outcome::new(
        code == Some(0) && secs <= 60.0,
        format!("verify --max-n 6 --trials 500 --seed 1: exit {code:?}, {lines} lines, {secs:.2} s (limit 60 s)"),
    )]
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "algebra suite", limit: Some(Duration::from_secs(10)), run: algebra },
    Criterion { id: 2, name: "Dicke states", limit: None, run: dicke },
    Criterion { id: 3, name: "star round trip", limit: Some(Duration::from_secs(30)), run: round_trip },
    Criterion { id: 4, name: "d=3 concurrence identity", limit: None, run: concurrence },
    Criterion { id: 5, name: "permanent correctness", limit: None, run: permanents },
    Criterion { id: 6, name: "landmark values", limit: None, run: landmarks },
    Criterion { id: 7, name: "closed forms", limit: None, run: closed_forms },
    Criterion { id: 8, name: "Bloch and Bargmann identities", limit: None, run: bloch_identities },
    Criterion { id: 9, name: "coherent-state equivalence", limit: None, run: coherent },
    Criterion { id: 10, name: "geometry", limit: None, run: geometry },
    Criterion { id: 11, name: "end to end", limit: Some(Duration::from_secs(60)), run: end_to_end },
];

fn main() {
    let mut failed = Vec::new();
    for criterion in CRITERIA {
        let start = Instant::now();
        let outcomes = (criterion.run)();
        let elapsed = start.elapsed();
        let in_time = criterion.limit.is_none_or(|l| elapsed <= l);
        let pass = in_time && outcomes.iter().all(|o| o.pass);
        let limit = criterion
            .limit
            .map(|l| format!(", limit {} s", l.as_secs()))
            .unwrap_or_default();
        println!(
            "{} [{}] {} ({:.2} s{limit})",
            if pass { "PASS" } else { "FAIL" },
            criterion.id,
            criterion.name,
            elapsed.as_secs_f64()
        );
        for o in &outcomes {
            println!("     {} {}", if o.pass { "ok  " } else { "FAIL" }, o.detail);
        }
        if !pass {
            failed.push(criterion.id);
        }
    }
    if !failed.is_empty() {
        eprintln!("acceptance criteria failed: {failed:?}");
        std::process::exit(1);
    }
    println!("all {} acceptance criteria passed", CRITERIA.len());
}
