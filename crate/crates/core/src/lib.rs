//! Twisted Kuperberg invariants of sutured Heegaard diagrams, evaluated by
//! exact tensor contraction over exterior algebras, together with twisted
//! Reidemeister torsion from Fox calculus.

pub mod cli;
pub mod diagram;
pub mod grouprings;
pub mod hopf;
pub mod kuperberg;
pub mod torsion;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid number field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("representation error: {0}")]
    Representation(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
