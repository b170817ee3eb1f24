use std::io;

use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] interalg_core::Error),
    #[error("{0}")]
    Parse(String),
    #[error("io error on {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    /// An oracle estimate lies too far from the exact value.
    #[error(
        "{invariant}: oracle estimate {estimate} is {sigmas:.2} standard errors from exact {exact}"
    )]
    OracleDisagreement {
        invariant: String,
        exact: String,
        estimate: f64,
        sigmas: f64,
    },
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        use interalg_core::Error as E;
        match self {
            CliError::Core(e) => match e {
                E::LengthMismatch { .. } => "LengthMismatch",
                E::EmptyInput => "EmptyInput",
                E::NegativeEntry { .. } => "NegativeEntry",
                E::DoublyZeroIndex { .. } => "DoublyZeroIndex",
                E::NonPositiveEntry { .. } => "NonPositiveEntry",
                E::ZeroGenerator => "ZeroGenerator",
                E::Unbounded => "Unbounded",
                E::EmptyPolytope => "EmptyPolytope",
                E::DimensionMismatch { .. } => "DimensionMismatch",
                E::BoxTooSmall { .. } => "BoxTooSmall",
                E::CaseNotCovered(_) => "CaseNotCovered",
                E::NonUnimodularPair { .. } => "NonUnimodularPair",
                E::MethodDisagreement { .. } => "MethodDisagreement",
                E::InvalidParameter(_) => "InvalidParameter",
                E::Overflow => "Overflow",
            },
            CliError::Parse(_) => "InvalidInput",
            CliError::Io { .. } => "Io",
            CliError::Json(_) => "Json",
            CliError::OracleDisagreement { .. } => "MethodDisagreement",
        }
    }

    /// `{"error": {"kind": ..., "message": ...}}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Inner<'a> {
            kind: &'a str,
            message: String,
        }
        #[derive(Serialize)]
        struct Outer<'a> {
            error: Inner<'a>,
        }
        let body = Outer {
            error: Inner {
                kind: self.kind(),
                message: self.to_string(),
            },
        };
        serde_json::to_string(&body).unwrap_or_else(|_| String::from("{\"error\":{}}"))
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
