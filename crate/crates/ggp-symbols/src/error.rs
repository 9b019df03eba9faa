//! Error types, one per layer.

use thiserror::Error;

/// Errors from partition and symbol construction or parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("row {row} of the symbol is not strictly decreasing at position {index}")]
    NotStrictlyDecreasing { row: usize, index: usize },
    #[error("partition is not weakly decreasing at position {index}")]
    NotWeaklyDecreasing { index: usize },
}

/// Errors from representation labels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("{slot} has defect {defect}, which is not admitted by the {family} family")]
    DefectClassMismatch { slot: &'static str, defect: i32, family: &'static str },
    #[error("component ranks sum to {found}, exceeding the group rank {expected}")]
    RankOverflow { expected: u32, found: u32 },
    #[error("component ranks sum to {found}, short of the group rank {expected}")]
    RankShortfall { expected: u32, found: u32 },
    #[error("the signs of the two even-orthogonal parts multiply to {found}, but the group sign is {expected}")]
    SignMismatch { expected: String, found: String },
    #[error("the `eps` flag must be present exactly for odd orthogonal groups")]
    EpsFlagMismatch,
    #[error("a rho descriptor of rank 0 must be the regular descriptor `trivial`")]
    InvalidRho,
    #[error("twist {twist} does not apply to {group}")]
    InapplicableTwist { twist: &'static str, group: String },
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
}

/// Errors from the theta-correspondence layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThetaError {
    #[error("symbol {symbol} has defect {defect}, outside the class required here ({expected})")]
    DefectClassMismatch { symbol: String, defect: i32, expected: &'static str },
    #[error("label {0} is not supported on a cuspidal pair of staircase symbols")]
    NotCuspidalSupport(String),
    #[error("tower {tower} cannot receive a lift from {group}")]
    TowerMismatch { tower: String, group: String },
}

/// Errors from the multiplicity engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GgpError {
    #[error("labels {left} and {right} do not form a {case} pair")]
    CaseMismatch { left: String, right: String, case: &'static str },
    #[error("the left rank {left} is smaller than the right rank {right}; set `symmetrize` to swap")]
    RankOrder { left: u32, right: u32 },
    #[error("label {0} is not unipotent")]
    NotUnipotent(String),
    #[error("target rank {target} differs from source rank {source_rank}")]
    RankMismatch { source_rank: u32, target: u32 },
    #[error("{count} variants of one family have nonzero multiplicity")]
    MultipleNonzero { count: usize },
    #[error(transparent)]
    Theta(#[from] ThetaError),
    #[error(transparent)]
    Label(#[from] LabelError),
}
