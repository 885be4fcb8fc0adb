use thiserror::Error;

use crate::algebra::AlgebraId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("algebra mismatch: expected {expected}, found {found}")]
    AlgebraMismatch { expected: AlgebraId, found: AlgebraId },

    #[error("vector has {found} coordinates but {algebra} has rank {rank}")]
    DimensionMismatch { algebra: AlgebraId, rank: usize, found: usize },

    #[error("simple root index {index} out of range for rank {rank} (indices start at 1)")]
    RootIndexOutOfRange { index: usize, rank: usize },

    #[error("the affine reflection is only defined here for A2, got {0}")]
    NotA2(AlgebraId),

    #[error("weight {0} is not dominant (all coordinates must be >= 0)")]
    NotDominant(String),

    #[error("no projection matrix for {from} -> {to}; supported pairs: {supported}")]
    UnsupportedProjection { from: AlgebraId, to: AlgebraId, supported: String },

    #[error("projection chain is empty")]
    EmptyChain,

    #[error("projection chain junction mismatch: hop ends in {left}, next hop starts at {right}")]
    JunctionMismatch { left: AlgebraId, right: AlgebraId },

    #[error("point {0} is not in the root lattice Q")]
    NotInRootLattice(String),

    #[error("point {0} carries scale denominator {1}; use the refined class rule")]
    RefinedPoint(String, i64),

    #[error("scale denominators differ: {0} vs {1}")]
    ScaleMismatch(i64, i64),

    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u32, u32),

    #[error("number of colours must be >= 1, got {0}")]
    InvalidModulus(i64),

    #[error("refinement level M must be >= 1, got {0}")]
    InvalidRefinement(i64),

    #[error("radius must be >= 0, got {0}")]
    NegativeRadius(String),

    #[error("deleted congruence class must be 0, 1 or 2, got {0}")]
    InvalidClass(i64),

    #[error("patch hexagons are not centred on the root lattice (deleted class {0}, scale {1})")]
    CentersNotInQ(u8, i64),

    #[error("palette has {have} colours but {need} are required")]
    PaletteTooSmall { have: usize, need: usize },

    #[error("verification needs radius >= 4, got {0}")]
    RadiusTooSmall(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}
