//! The JSON report written by `stars`, `perma` and `metric`.

use majorana::majorana::MajoranaPolynomial;
use majorana::{Star, StarSet, SymmetricState};
use serde::{Deserialize, Serialize};

use crate::state_file::StateFile;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputEcho {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub d: usize,
    pub c: Vec<[f64; 2]>,
    /// Norm of `c` as given; the state used is `c / norm`.
    pub norm: f64,
}

impl From<&StateFile> for InputEcho {
    fn from(f: &StateFile) -> Self {
        Self {
            label: f.label.clone(),
            d: f.d,
            c: f.c.clone(),
            norm: f.norm(),
        }
    }
}

/// `{"z": [re, im]}` or `{"inf": true}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inf: Option<bool>,
}

impl From<&Star> for Point {
    fn from(s: &Star) -> Self {
        match s.z() {
            Some(z) => Point {
                z: Some([z.re, z.im]),
                inf: None,
            },
            None => Point {
                z: None,
                inf: Some(true),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StarEntry {
    #[serde(flatten)]
    pub point: Point,
    pub multiplicity: usize,
    /// Relative residual of the Majorana polynomial at this star.
    pub residual: f64,
}

/// One entry per star (so `N` in total), copies of a repeated star adjacent
/// and each carrying the multiplicity.
pub fn star_entries(state: &SymmetricState, stars: &StarSet) -> Vec<StarEntry> {
    let poly = MajoranaPolynomial::from_state(state);
    let mut out = Vec::with_capacity(stars.len());
    for (star, m) in stars.multiplicities() {
        let entry = StarEntry {
            point: Point::from(&star),
            multiplicity: m,
            residual: poly.relative_residual(&star),
        };
        out.extend(std::iter::repeat_n(entry, m));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub pass: bool,
    pub residual: f64,
}

impl CheckEntry {
    pub fn at_most(name: &str, residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            pass: residual <= tolerance,
            residual,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedForms {
    pub overlap: f64,
    pub bloch: f64,
    pub pairwise: Option<f64>,
    /// Largest deviation of the closed forms from `perm/N!`.
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepHalvingEntry {
    pub step: f64,
    pub error_h: f64,
    pub error_half: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricSection {
    pub step: f64,
    /// The star moved to `z = 0` by the chart rotation (`z = 0` itself when
    /// no rotation was needed).
    pub chart_target: Point,
    pub chart_stars: Vec<[f64; 2]>,
    /// `g[i][j]` as `[re, im]`.
    pub entries: Vec<Vec<[f64; 2]>>,
    pub hermiticity_defect: f64,
    pub eigenvalues: Vec<f64>,
    pub step_halving: Option<StepHalvingEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub command: String,
    pub input: InputEcho,
    pub n_stars: usize,
    pub stars: Option<Vec<StarEntry>>,
    pub p_d: Option<f64>,
    pub permanent: Option<[f64; 2]>,
    pub concurrence: Option<f64>,
    pub closed_forms: Option<ClosedForms>,
    pub bloch: Option<Vec<[f64; 3]>>,
    pub checks: Vec<CheckEntry>,
    pub metric: Option<MetricSection>,
}

impl ResultDocument {
    pub fn new(command: &str, input: &StateFile) -> Self {
        Self {
            command: command.to_string(),
            input: InputEcho::from(input),
            n_stars: input.d.saturating_sub(1),
            stars: None,
            p_d: None,
            permanent: None,
            concurrence: None,
            closed_forms: None,
            bloch: None,
            checks: Vec::new(),
            metric: None,
        }
    }
}
