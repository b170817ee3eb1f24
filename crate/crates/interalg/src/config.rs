use std::path::PathBuf;

use interalg_core::invariants::{ReportOptions, Selection};

use crate::error::{CliError, Result};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    /// Volume engine only.
    Exact,
    /// Closed forms where they exist, volumes elsewhere.
    Formula,
    /// Volume engine plus Monte Carlo and lattice-count estimates.
    Oracle,
    /// Everything; closed forms and oracles must agree with the volumes.
    All,
}

impl MethodChoice {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(MethodChoice::Exact),
            "formula" => Ok(MethodChoice::Formula),
            "oracle" => Ok(MethodChoice::Oracle),
            "all" => Ok(MethodChoice::All),
            _ => Err(CliError::Parse(format!(
                "unknown method {s:?} (exact, formula, oracle, all)"
            ))),
        }
    }

    pub fn report_options(self, select: Selection) -> ReportOptions {
        let (exact, closed_form) = match self {
            MethodChoice::Exact | MethodChoice::Oracle => (true, false),
            MethodChoice::Formula => (false, true),
            MethodChoice::All => (true, true),
        };
        ReportOptions {
            select,
            exact,
            closed_form,
        }
    }

    pub fn runs_oracles(self) -> bool {
        matches!(self, MethodChoice::Oracle | MethodChoice::All)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Table,
}

/// Which invariants to compute. The embedding dimension is always reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvariantSet {
    pub selection: Selection,
    pub embedding_dimension: bool,
}

impl InvariantSet {
    pub fn all() -> Self {
        InvariantSet {
            selection: Selection::all(),
            embedding_dimension: true,
        }
    }

    /// Comma-separated names out of `hs`, `embdim`, `cl`, `fsig`, `hk`, `all`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut set = InvariantSet {
            selection: Selection::none(),
            embedding_dimension: false,
        };
        for name in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match name {
                "hs" => set.selection.hilbert_samuel = true,
                "embdim" => set.embedding_dimension = true,
                "cl" => set.selection.class_group = true,
                "fsig" => set.selection.f_signature = true,
                "hk" => set.selection.hilbert_kunz = true,
                "all" => set = InvariantSet::all(),
                _ => {
                    return Err(CliError::Parse(format!(
                        "unknown invariant {name:?} (hs, embdim, cl, fsig, hk, all)"
                    )))
                }
            }
        }
        if set
            == (InvariantSet {
                selection: Selection::none(),
                embedding_dimension: false,
            })
        {
            return Err(CliError::Parse(String::from("no invariants selected")));
        }
        Ok(set)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub invariants: InvariantSet,
    pub method: MethodChoice,
    pub samples: u64,
    pub seed: u64,
    /// `None` picks a scale from the dimension.
    pub lattice_scale: Option<i64>,
    pub output: OutputFormat,
    pub mesh: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Self {
        RunConfig {
            a,
            b,
            invariants: InvariantSet::all(),
            method: MethodChoice::Exact,
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
            lattice_scale: None,
            output: OutputFormat::Json,
            mesh: None,
        }
    }
}

/// Default lattice scale: 30 in dimension 3, smaller above so the count
/// stays near a few million points.
pub fn default_lattice_scale(dim: usize) -> i64 {
    match dim {
        0..=3 => 30,
        4 => 16,
        _ => 8,
    }
}

/// Comma-separated integers, e.g. `5,2`.
pub fn parse_vector(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Parse(format!("not an integer: {:?} in {s:?}", t.trim())))
        })
        .collect()
}
