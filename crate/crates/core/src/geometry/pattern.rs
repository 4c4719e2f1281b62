use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::GeometryError;

/// Named local configurations, matched by translation only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PatternId {
    /// The 2×2 block.
    Q,
    /// Horizontal skew tetromino rising to the right.
    SkewI,
    /// Vertical skew tetromino leaning to the right.
    SkewII,
    /// Horizontal skew tetromino falling to the right.
    SkewIII,
    /// Vertical skew tetromino leaning to the left.
    SkewIV,
    /// Two cells meeting at a vertex along the main diagonal, the other two cells around it missing.
    DiagNe,
    /// Two cells meeting at a vertex along the anti-diagonal, the other two cells around it missing.
    DiagNw,
}

/// Cell offsets that must be present (and, for the diagonal patterns, absent).
#[derive(Debug, Clone, Copy)]
pub struct Pattern {
    pub present: &'static [(u32, u32)],
    pub absent: &'static [(u32, u32)],
}

impl PatternId {
    pub const ALL: [PatternId; 7] = [
        PatternId::Q,
        PatternId::SkewI,
        PatternId::SkewII,
        PatternId::SkewIII,
        PatternId::SkewIV,
        PatternId::DiagNe,
        PatternId::DiagNw,
    ];

    pub fn pattern(self) -> Pattern {
        const fn p(present: &'static [(u32, u32)], absent: &'static [(u32, u32)]) -> Pattern {
            Pattern { present, absent }
        }
        match self {
            PatternId::Q => p(&[(0, 0), (1, 0), (0, 1), (1, 1)], &[]),
            PatternId::SkewI => p(&[(0, 0), (1, 0), (1, 1), (2, 1)], &[]),
            PatternId::SkewII => p(&[(0, 0), (0, 1), (1, 1), (1, 2)], &[]),
            PatternId::SkewIII => p(&[(1, 0), (2, 0), (0, 1), (1, 1)], &[]),
            PatternId::SkewIV => p(&[(1, 0), (1, 1), (0, 1), (0, 2)], &[]),
            PatternId::DiagNe => p(&[(0, 0), (1, 1)], &[(0, 1), (1, 0)]),
            PatternId::DiagNw => p(&[(0, 1), (1, 0)], &[(0, 0), (1, 1)]),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternId::Q => "Q",
            PatternId::SkewI => "SKEW_I",
            PatternId::SkewII => "SKEW_II",
            PatternId::SkewIII => "SKEW_III",
            PatternId::SkewIV => "SKEW_IV",
            PatternId::DiagNe => "DIAG_NE",
            PatternId::DiagNw => "DIAG_NW",
        }
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PatternId {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        PatternId::ALL
            .into_iter()
            .find(|p| p.name() == norm)
            .ok_or_else(|| GeometryError::UnknownPattern(s.to_string()))
    }
}
