use std::fmt;

use serde::{Deserialize, Serialize};

/// A linear symmetry of the square grid: `(x, y) ↦ (xx·x + xy·y, yx·x + yy·y)`.
///
/// The eight elements of the dihedral group of the square. Images of a
/// polyomino are re-translated into ℕ² by [`super::Polyomino::transform`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Isometry {
    xx: i8,
    xy: i8,
    yx: i8,
    yy: i8,
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry::new(1, 0, 0, 1);
    pub const ROTATE_90: Isometry = Isometry::new(0, -1, 1, 0);
    pub const ROTATE_180: Isometry = Isometry::new(-1, 0, 0, -1);
    pub const ROTATE_270: Isometry = Isometry::new(0, 1, -1, 0);
    pub const MIRROR_X: Isometry = Isometry::new(-1, 0, 0, 1);
    pub const MIRROR_Y: Isometry = Isometry::new(1, 0, 0, -1);
    pub const TRANSPOSE: Isometry = Isometry::new(0, 1, 1, 0);
    pub const ANTI_TRANSPOSE: Isometry = Isometry::new(0, -1, -1, 0);

    pub const ALL: [Isometry; 8] = [
        Self::IDENTITY,
        Self::ROTATE_90,
        Self::ROTATE_180,
        Self::ROTATE_270,
        Self::MIRROR_X,
        Self::MIRROR_Y,
        Self::TRANSPOSE,
        Self::ANTI_TRANSPOSE,
    ];

    const fn new(xx: i8, xy: i8, yx: i8, yy: i8) -> Self {
        Isometry { xx, xy, yx, yy }
    }

    pub fn apply(&self, x: i64, y: i64) -> (i64, i64) {
        (
            self.xx as i64 * x + self.xy as i64 * y,
            self.yx as i64 * x + self.yy as i64 * y,
        )
    }

    /// Orthogonal matrix, so the inverse is the transpose.
    pub fn inverse(&self) -> Isometry {
        Isometry::new(self.xx, self.yx, self.xy, self.yy)
    }

    pub fn compose(&self, then: &Isometry) -> Isometry {
        Isometry::new(
            then.xx * self.xx + then.xy * self.yx,
            then.xx * self.xy + then.xy * self.yy,
            then.yx * self.xx + then.yy * self.yx,
            then.yx * self.xy + then.yy * self.yy,
        )
    }

    pub fn name(&self) -> &'static str {
        match *self {
            Self::IDENTITY => "identity",
            Self::ROTATE_90 => "rotate-90",
            Self::ROTATE_180 => "rotate-180",
            Self::ROTATE_270 => "rotate-270",
            Self::MIRROR_X => "mirror-x",
            Self::MIRROR_Y => "mirror-y",
            Self::TRANSPOSE => "transpose",
            Self::ANTI_TRANSPOSE => "anti-transpose",
            _ => unreachable!("not a grid isometry"),
        }
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
