use std::io::Read;

use majorana::{Complex64, SymmetricState};
use serde::{Deserialize, Serialize};

use crate::{CliError, Result};

/// A state on disk: `d` amplitudes as `[re, im]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub d: usize,
    pub c: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl StateFile {
    pub fn from_state(state: &SymmetricState, label: Option<String>) -> Self {
        Self {
            d: state.dim(),
            c: state.amplitudes().iter().map(|a| [a.re, a.im]).collect(),
            label,
        }
    }

    pub fn amplitudes(&self) -> Vec<Complex64> {
        self.c.iter().map(|[re, im]| Complex64::new(*re, *im)).collect()
    }

    /// The normalized state. Files describe directions, so any nonzero
    /// amplitude vector is accepted and rescaled.
    pub fn to_state(&self) -> Result<SymmetricState> {
        if self.d < 2 {
            return Err(CliError::Usage(format!("d must be at least 2, got {}", self.d)));
        }
        if self.c.len() != self.d {
            return Err(CliError::Usage(format!(
                "d = {} but {} amplitudes given",
                self.d,
                self.c.len()
            )));
        }
        Ok(SymmetricState::normalize(&self.amplitudes())?)
    }

    pub fn norm(&self) -> f64 {
        self.c.iter().map(|[re, im]| re * re + im * im).sum::<f64>().sqrt()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(StateFile),
    Many(Vec<StateFile>),
}

/// Parses a single state object or an array of them.
pub fn parse_states(text: &str) -> Result<Vec<StateFile>> {
    let parsed: OneOrMany = serde_json::from_str(text).map_err(|e| {
        CliError::Usage(format!("not a state file (object or array of objects): {e}"))
    })?;
    Ok(match parsed {
        OneOrMany::One(s) => vec![s],
        OneOrMany::Many(v) => v,
    })
}

/// `-` reads stdin, text starting with `{` or `[` is parsed inline, anything
/// else is a path.
pub fn read_input(arg: &str) -> Result<Vec<StateFile>> {
    let trimmed = arg.trim_start();
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
        s
    } else if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|source| CliError::Io {
            path: arg.to_string(),
            source,
        })?
    };
    parse_states(&text)
}
