use majorana::entanglement::{bloch_vector, closed_form_p, perma_concurrence};
use majorana::geometry::{auto_chart, metric_symmetric, step_halving};
use majorana::majorana::{round_trip_fidelity, stars_from_state, RootFinderConfig};
use majorana::sampling::random_state;
use majorana::{StarSet, SymmetricState};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::document::{
    star_entries, CheckEntry, ClosedForms, MetricSection, Point, ResultDocument, StepHalvingEntry,
};
use crate::state_file::StateFile;
use crate::{CliError, Result};

pub const ROUND_TRIP_TOL: f64 = 1e-9;
pub const PERMANENT_IMAG_TOL: f64 = 1e-10;
pub const CONCURRENCE_TOL: f64 = 1e-9;
pub const CLOSED_FORM_TOL: f64 = 1e-10;
pub const HERMITICITY_TOL: f64 = 1e-6;
pub const PSD_TOL: f64 = 1e-6;
/// Step for the step-halving consistency check; see `geometry::step_halving`.
pub const HALVING_STEP: f64 = 1e-2;
pub const HALVING_RATIO: std::ops::RangeInclusive<f64> = 3.0..=5.0;

fn stars_of(file: &StateFile, tol: f64) -> Result<(SymmetricState, StarSet)> {
    let state = file.to_state()?;
    let cfg = RootFinderConfig {
        tol,
        ..Default::default()
    };
    let stars = majorana::majorana::stars_from_state_with(&state, &cfg)?;
    Ok((state, stars))
}

pub fn cmd_stars(file: &StateFile, tol: f64) -> Result<ResultDocument> {
    let (state, stars) = stars_of(file, tol)?;
    let mut doc = ResultDocument::new("stars", file);
    let entries = star_entries(&state, &stars);
    let worst = entries.iter().map(|e| e.residual).fold(0.0, f64::max);
    doc.checks.push(CheckEntry::at_most("polynomial_residual", worst, tol));
    let f = round_trip_fidelity(&state, &stars)?;
    doc.checks.push(CheckEntry::at_most("round_trip_fidelity", 1.0 - f, ROUND_TRIP_TOL));
    doc.stars = Some(entries);
    Ok(doc)
}

pub fn cmd_perma(file: &StateFile) -> Result<ResultDocument> {
    let state = file.to_state()?;
    if state.n_qubits() > majorana::entanglement::MAX_PERMANENT_N {
        return Err(majorana::Error::SizeLimit(state.n_qubits()).into());
    }
    let stars = stars_from_state(&state, majorana::majorana::DEFAULT_ROOT_TOL)?;
    let report = perma_concurrence(&stars)?;
    let mut doc = ResultDocument::new("perma", file);
    doc.stars = Some(star_entries(&state, &stars));
    doc.p_d = Some(report.p_d);
    doc.permanent = Some([report.permanent.re, report.permanent.im]);
    doc.concurrence = report.concurrence;
    doc.bloch = Some(stars.stars().iter().map(bloch_vector).collect());
    doc.checks.push(CheckEntry::at_most(
        "permanent_real",
        report.permanent.im.abs(),
        PERMANENT_IMAG_TOL,
    ));
    if let Some(c) = report.concurrence {
        doc.checks.push(CheckEntry::at_most(
            "concurrence_identity",
            (c - (1.0 / report.p_d - 1.0)).abs(),
            CONCURRENCE_TOL,
        ));
    }
    if let Ok(cf) = closed_form_p(&stars) {
        let deviation = [Some(cf.overlap), Some(cf.bloch), cf.pairwise]
            .into_iter()
            .flatten()
            .map(|v| (v - report.p_d).abs())
            .fold(0.0, f64::max);
        doc.checks.push(CheckEntry::at_most("closed_form", deviation, CLOSED_FORM_TOL));
        doc.closed_forms = Some(ClosedForms {
            overlap: cf.overlap,
            bloch: cf.bloch,
            pairwise: cf.pairwise,
            deviation,
        });
    }
    Ok(doc)
}

pub fn cmd_metric(file: &StateFile, step: f64) -> Result<ResultDocument> {
    let state = file.to_state()?;
    let stars = stars_from_state(&state, majorana::majorana::DEFAULT_ROOT_TOL)?;
    let (chart, rotation) = auto_chart(&stars)?;
    let g = metric_symmetric(&chart, step)?;
    let n = g.dim();
    let eigenvalues = g.eigenvalues();
    let halving = if n >= 2 {
        step_halving(&chart, HALVING_STEP).ok()
    } else {
        None
    };

    let mut doc = ResultDocument::new("metric", file);
    doc.stars = Some(star_entries(&state, &stars));
    doc.checks.push(CheckEntry::at_most(
        "hermiticity",
        g.hermiticity_defect(),
        HERMITICITY_TOL,
    ));
    let scale = g.trace().abs().max(1.0);
    doc.checks.push(CheckEntry::at_most(
        "positive_semidefinite",
        (-eigenvalues[0]).max(0.0) / scale,
        PSD_TOL,
    ));
    if let Some(sh) = halving {
        doc.checks.push(CheckEntry {
            name: "step_halving".into(),
            pass: HALVING_RATIO.contains(&sh.ratio),
            residual: (sh.ratio - 4.0).abs(),
        });
    }
    doc.metric = Some(MetricSection {
        step,
        chart_target: Point::from(&rotation.target()),
        chart_stars: chart
            .stars()
            .iter()
            .map(|s| {
                let z = s.z().expect("chart stars are finite");
                [z.re, z.im]
            })
            .collect(),
        entries: (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = g.entries()[(i, j)];
                        [v.re, v.im]
                    })
                    .collect()
            })
            .collect(),
        hermiticity_defect: g.hermiticity_defect(),
        eigenvalues,
        step_halving: halving.map(|sh| StepHalvingEntry {
            step: HALVING_STEP,
            error_h: sh.error_h,
            error_half: sh.error_half,
            ratio: sh.ratio,
        }),
    });
    Ok(doc)
}

pub fn cmd_random(d: usize, count: usize, seed: u64) -> Result<Vec<StateFile>> {
    if d < 2 {
        return Err(CliError::Usage(format!("d must be at least 2, got {d}")));
    }
    if count < 1 {
        return Err(CliError::Usage("count must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|i| StateFile::from_state(&random_state(d, &mut rng), Some(format!("random-{seed}-{i}"))))
        .collect())
}
