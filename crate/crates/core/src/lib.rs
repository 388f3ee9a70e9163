//! Exact verification of finite-dimensional Hopf algebras, generalized
//! Yetter-Drinfeld modules over bicomodule algebras and bimodule coalgebras,
//! bi-Galois lifting and crossed group gradings.
//!
//! Every structure is a finite basis plus structure-constant matrices over
//! [`FieldSpec`]. Axiom checks return a [`Report`] whose failing findings
//! carry a concrete basis-tuple witness.

pub mod builtin;
pub mod crossed;
pub mod galois;
pub mod hopf;
pub mod linalg;
pub mod rep;
pub mod report;
pub mod scalar;
pub mod yd;

pub use linalg::{Matrix, Quotient, Subspace, Wiring};
pub use report::{Finding, Report, Verdict, Witness};
pub use scalar::{FieldSpec, Scalar};

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid scalar: {0}")]
    InvalidScalar(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("{0}")]
    InvalidParameter(String),
    #[error("structures are not compatible: {0}")]
    Incompatible(String),
    #[error("{what} failed verification")]
    Verification { what: String, report: Box<Report> },
    #[error("no antipode: {0}")]
    NoAntipode(String),
    #[error("not Galois: {0}")]
    NotGalois(String),
}

impl Error {
    pub(crate) fn verification(what: impl Into<String>, report: Report) -> Self {
        Error::Verification {
            what: what.into(),
            report: Box::new(report),
        }
    }
}
