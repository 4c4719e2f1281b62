use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::FamilyError;
use crate::geometry::{Cell, GeometryError, Polyomino};

/// A box `[(1,1),(m,n)]` with holes `[a_i, b_i] × [c_j, d_j]` for every pair of
/// an x-interval and a y-interval. Coordinates are 1-based vertex coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub m: u32,
    pub n: u32,
    pub x_holes: Vec<(u32, u32)>,
    pub y_holes: Vec<(u32, u32)>,
}

fn check_axis(name: &str, bound: u32, holes: &[(u32, u32)]) -> Result<(), FamilyError> {
    if holes.is_empty() {
        return Err(FamilyError::BadGridSpec(format!("no {name}-intervals")));
    }
    for (k, &(a, b)) in holes.iter().enumerate() {
        if !(1 < a && a < b && b < bound) {
            return Err(FamilyError::BadGridSpec(format!(
                "{name}-interval [{a},{b}] must satisfy 1 < a < b < {bound}"
            )));
        }
        if let Some(&(next, _)) = holes.get(k + 1) {
            if next != b + 1 {
                return Err(FamilyError::BadGridSpec(format!(
                    "{name}-interval after [{a},{b}] must start at {}, found {next}",
                    b + 1
                )));
            }
        }
    }
    Ok(())
}

impl GridSpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        check_axis("x", self.m, &self.x_holes)?;
        check_axis("y", self.n, &self.y_holes)
    }

    pub fn hole_count(&self) -> usize {
        self.x_holes.len() * self.y_holes.len()
    }
}

/// A polyomino built by [`make_grid`], together with its specification.
#[derive(Debug, Clone)]
pub struct GridPolyomino {
    spec: GridSpec,
    polyomino: Polyomino,
}

impl GridPolyomino {
    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn polyomino(&self) -> &Polyomino {
        &self.polyomino
    }

    /// Recovers the specification of a polyomino that is a grid, if any.
    pub fn recognize(p: &Polyomino) -> Option<Self> {
        let axis = |len: u32, full: &dyn Fn(u32) -> bool| -> Vec<(u32, u32)> {
            let mut out = Vec::new();
            let mut k = 0;
            while k < len {
                if full(k) {
                    k += 1;
                    continue;
                }
                let start = k;
                while k < len && !full(k) {
                    k += 1;
                }
                // 0-based cells start..k become 1-based vertices start+1..k+1
                out.push((start + 1, k + 1));
            }
            out
        };
        let column_full = |x: u32| (0..p.height()).all(|y| p.contains(&Cell::new(x, y)));
        let row_full = |y: u32| (0..p.width()).all(|x| p.contains(&Cell::new(x, y)));
        let spec = GridSpec {
            m: p.width() + 1,
            n: p.height() + 1,
            x_holes: axis(p.width(), &column_full),
            y_holes: axis(p.height(), &row_full),
        };
        let grid = make_grid(&spec).ok()?;
        (grid.polyomino == *p).then_some(grid)
    }
}

/// The box minus every hole `[a_i,b_i] × [c_j,d_j]`.
pub fn make_grid(spec: &GridSpec) -> Result<GridPolyomino, FamilyError> {
    spec.validate()?;
    let in_holes = |k: u32, holes: &[(u32, u32)]| holes.iter().any(|&(a, b)| a - 1 <= k && k + 2 <= b);
    let cells = (0..spec.m - 1).flat_map(|x| (0..spec.n - 1).map(move |y| Cell::new(x, y)));
    let cells: Vec<Cell> = cells
        .filter(|c| !(in_holes(c.x(), &spec.x_holes) && in_holes(c.y(), &spec.y_holes)))
        .collect();
    let polyomino = Polyomino::validate(cells)?;
    Ok(GridPolyomino {
        spec: spec.clone(),
        polyomino,
    })
}

/// `(P1, P2)`: cells lying in one maximal inner interval of length at least
/// two, and cells lying in two.
pub fn split_p1_p2(g: &GridPolyomino) -> (BTreeSet<Cell>, BTreeSet<Cell>) {
    let p = &g.polyomino;
    let (mut p1, mut p2) = (BTreeSet::new(), BTreeSet::new());
    for c in p.cells() {
        let (h, v) = (p.horizontal_run(c) >= 2, p.vertical_run(c) >= 2);
        match (h, v) {
            (true, true) => p2.insert(*c),
            (true, false) | (false, true) => p1.insert(*c),
            (false, false) => unreachable!("grid cells lie on a full row or column"),
        };
    }
    (p1, p2)
}

/// `P` minus corridor cells. Coordinates of the result are those of `P`.
pub fn make_subgrid(g: &GridPolyomino, deleted: &BTreeSet<Cell>) -> Result<Polyomino, FamilyError> {
    let (p1, _) = split_p1_p2(g);
    if let Some(c) = deleted.iter().find(|c| !p1.contains(c)) {
        return Err(FamilyError::DeletionNotInP1(*c));
    }
    let cells = g.polyomino.cells().iter().filter(|c| !deleted.contains(c)).copied();
    let p = Polyomino::validate(cells).map_err(|e| match e {
        GeometryError::NotConnected | GeometryError::Empty => FamilyError::NotConnected,
        other => FamilyError::Geometry(other),
    })?;
    // deleting a whole boundary column would shift the translation
    debug_assert!(p.width() == g.polyomino.width() && p.height() == g.polyomino.height());
    Ok(p)
}
