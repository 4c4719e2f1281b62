//! Constructors for grid, subgrid and thin-cycle polyominoes, the figure
//! gallery, and exhaustive enumeration of fixed polyominoes.

mod enumerate;
pub mod gallery;
mod grid;
mod thin_cycle;

use thiserror::Error;

use crate::geometry::{Cell, GeometryError};

pub use enumerate::{count_fixed, enumerate, enumerate_upto, enumerate_with_cap, DEFAULT_RANK_CAP};
pub use grid::{make_grid, make_subgrid, split_p1_p2, GridPolyomino, GridSpec};
pub use thin_cycle::{make_thin_cycle, Direction, Run, ThinCycle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid grid specification: {0}")]
    BadGridSpec(String),
    #[error("cell {0} is not a corridor cell of the grid")]
    DeletionNotInP1(Cell),
    #[error("deleting the cells disconnects the polyomino")]
    NotConnected,
    #[error("runs end at ({0},{1}) instead of the starting cell")]
    DoesNotClose(i64, i64),
    #[error("runs visit cell ({0},{1}) twice")]
    SelfOverlap(i64, i64),
    #[error("run {0} has fewer than two cells")]
    RunTooShort(usize),
    #[error("the cells do not form a thin cycle")]
    NotThinCycle,
    #[error("rank {rank} exceeds the enumeration cap {cap}")]
    RankCapExceeded { rank: usize, cap: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
