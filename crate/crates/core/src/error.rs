use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid tiling: {0}")]
    InvalidTiling(String),
    #[error("invalid level sequence: {0}")]
    InvalidLevelSeq(String),
    #[error("tiling has height {actual}, expected {expected}")]
    HeightMismatch { expected: usize, actual: usize },
    #[error("rank {rank} out of range for height {height} (must be below F_{height} = {count})")]
    RankOutOfRange { height: usize, rank: u64, count: u64 },
    #[error("column heights must be weakly increasing: {0}")]
    NotFerrers(String),
    #[error("invalid board literal: {0}")]
    InvalidBoard(String),
    #[error("series orders differ: {left} vs {right}")]
    SeriesOrderMismatch { left: usize, right: usize },
    #[error("invalid placement: {0}")]
    InvalidPlacement(String),
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("malformed triangle: {0}")]
    InvalidTriangle(String),
}
