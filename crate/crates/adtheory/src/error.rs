use thiserror::Error;

use crate::complex::CellId;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate cell id {0}")]
    DuplicateCell(CellId),
    #[error("unknown cell id {0}")]
    UnknownCell(CellId),
    #[error("incidence sign {sign} between {of} and {face} is not +1 or -1")]
    BadSign { of: CellId, face: CellId, sign: i64 },
    #[error("complex failed validation:\n{0}")]
    InvalidComplex(String),
    #[error("value on cell {cell} of dimension {dim}, but the pre-ad has degree {degree}")]
    WrongValueDimension { cell: CellId, dim: usize, degree: i64 },
    #[error("pre-ad is not an ad:\n{0}")]
    NotAnAd(String),
    #[error("cell map is not a valid transport: {0}")]
    BadTransport(String),
    #[error("gluing produced a pre-ad that fails the ad condition:\n{0}")]
    SeamMismatch(String),
    #[error("family is not an ad with singularities:\n{0}")]
    NotSingAd(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("singularity sequence mismatch: {0}")]
    SequenceMismatch(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(i64, i64),
    #[error("symmetrization stage mismatch: {0} vs {1}")]
    StageMismatch(u32, u32),
    #[error("{0} is not a permutation of 1..={1}")]
    BadPermutation(String, usize),
    #[error("singularity entries of nonzero dimension are not supported by the ring model")]
    NonzeroEntryDimension,
    #[error("constraint system too large: {vars} variables exceeds the bound {max}")]
    WindowOverflow { vars: usize, max: usize },
    #[error("degree window is empty or inverted")]
    BadWindow,
    #[error(transparent)]
    Exact(#[from] abelian::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
