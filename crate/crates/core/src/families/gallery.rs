//! Polyominoes transcribed from figures, in 0-based cell coordinates.

use std::collections::BTreeSet;

use super::{make_grid, make_subgrid, make_thin_cycle, Direction::*, GridSpec, Run};
use crate::geometry::{Cell, PatternId, Polyomino};

fn from_cells(name: &str, cells: &[(u32, u32)]) -> Polyomino {
    Polyomino::validate(cells.iter().map(|&(x, y)| Cell::new(x, y)))
        .expect("gallery cells are connected")
        .with_name(name)
}

/// Thin cycle with a length-two column in the middle of its top side.
pub fn fig8a_runs() -> Vec<Run> {
    vec![
        Run::new(N, 3),
        Run::new(E, 2),
        Run::new(N, 2),
        Run::new(E, 3),
        Run::new(S, 2),
        Run::new(E, 2),
        Run::new(S, 3),
        Run::new(W, 5),
    ]
}

pub fn fig8a() -> Polyomino {
    make_thin_cycle(&fig8a_runs())
        .expect("closes")
        .polyomino
        .with_name("fig8a")
}

/// Thin cycle around a plus-shaped hole.
pub fn fig8b() -> Polyomino {
    from_cells(
        "fig8b",
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 0),
            (2, 0),
            (3, 0),
            (4, 1),
            (4, 2),
            (4, 3),
            (1, 4),
            (2, 4),
            (3, 4),
            (1, 1),
            (3, 1),
            (1, 3),
            (3, 3),
        ],
    )
}

/// Thin cycle of 24 cells whose maximal inner intervals all have length three.
pub fn fig8c() -> Polyomino {
    from_cells(
        "fig8c",
        &[
            (0, 2),
            (0, 3),
            (0, 4),
            (6, 2),
            (6, 3),
            (6, 4),
            (2, 0),
            (3, 0),
            (4, 0),
            (2, 6),
            (3, 6),
            (4, 6),
            (1, 2),
            (1, 4),
            (5, 2),
            (5, 4),
            (2, 1),
            (2, 2),
            (2, 4),
            (2, 5),
            (4, 1),
            (4, 2),
            (4, 4),
            (4, 5),
        ],
    )
}

pub fn fig9_spec() -> GridSpec {
    GridSpec {
        m: 16,
        n: 6,
        x_holes: vec![(2, 5), (6, 7), (8, 9), (10, 11), (12, 15)],
        y_holes: vec![(2, 3), (4, 5)],
    }
}

pub fn fig9() -> Polyomino {
    make_grid(&fig9_spec())
        .expect("valid spec")
        .polyomino()
        .clone()
        .with_name("fig9")
}

/// Corridor cells of [`fig9`] removed to obtain [`fig10`].
pub fn fig10_deleted() -> BTreeSet<Cell> {
    [(1, 0), (13, 4), (3, 2), (6, 1), (7, 2), (8, 1), (11, 2)]
        .map(|(x, y)| Cell::new(x, y))
        .into()
}

pub fn fig10() -> Polyomino {
    let grid = make_grid(&fig9_spec()).expect("valid spec");
    make_subgrid(&grid, &fig10_deleted())
        .expect("corridor cells, still connected")
        .with_name("fig10")
}

pub fn fig_q() -> Polyomino {
    from_cells("figQ", PatternId::Q.pattern().present)
}

pub fn fig7(k: usize) -> Polyomino {
    let (name, id) = match k {
        1 => ("fig7_i", PatternId::SkewI),
        2 => ("fig7_ii", PatternId::SkewII),
        3 => ("fig7_iii", PatternId::SkewIII),
        4 => ("fig7_iv", PatternId::SkewIV),
        _ => panic!("fig7 has panels 1..=4"),
    };
    from_cells(name, id.pattern().present)
}

/// 3×3 ring around one cell.
pub fn annulus() -> Polyomino {
    make_grid(&GridSpec {
        m: 4,
        n: 4,
        x_holes: vec![(2, 3)],
        y_holes: vec![(2, 3)],
    })
    .expect("valid spec")
    .polyomino()
    .clone()
    .with_name("annulus")
}

/// 6×4 box with two aligned unit holes.
pub fn two_hole_spec() -> GridSpec {
    GridSpec {
        m: 6,
        n: 4,
        x_holes: vec![(2, 3), (4, 5)],
        y_holes: vec![(2, 3)],
    }
}

/// Every named polyomino, with its fixture file name.
pub fn all() -> Vec<Polyomino> {
    vec![
        fig8a(),
        fig8b(),
        fig8c(),
        fig9(),
        fig10(),
        fig_q(),
        fig7(1),
        fig7(2),
        fig7(3),
        fig7(4),
    ]
}

pub fn by_name(name: &str) -> Option<Polyomino> {
    match name {
        "annulus" => Some(annulus()),
        _ => all().into_iter().find(|p| p.name() == Some(name)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_and_holes() {
        let expect = [
            ("fig8a", 14, 1),
            ("fig8b", 16, 1),
            ("fig8c", 24, 1),
            ("fig9", 57, 10),
            ("fig10", 50, 3),
            ("figQ", 4, 0),
            ("fig7_i", 4, 0),
            ("fig7_iv", 4, 0),
        ];
        for (name, rank, holes) in expect {
            let p = by_name(name).unwrap();
            assert_eq!((p.rank(), p.holes().len()), (rank, holes), "{name}");
        }
    }

    #[test]
    fn thin_cycles() {
        for p in [fig8a(), fig8b(), fig8c(), annulus()] {
            assert!(p.is_thin_cycle(), "{:?}", p.name());
        }
        assert!(fig8a().contains_pattern(PatternId::SkewI));
        assert_eq!(fig8a().pattern_matches(PatternId::SkewI), vec![crate::geometry::Vertex::new(0, 2)]);
        let hole = &fig8b().holes()[0];
        let plus = from_cells("", &[(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]);
        assert_eq!(hole, &plus);
    }

    #[test]
    fn fig8c_runs_all_have_length_three() {
        let p = fig8c();
        assert!(p.maximal_inner_intervals().iter().all(|i| i.length() == 3));
        assert_eq!(p.maximal_inner_intervals().len(), 12);
    }

    #[test]
    fn fig9_rows() {
        let p = fig9();
        for y in [0, 2, 4] {
            assert!((0..15).all(|x| p.contains(&Cell::new(x, y))));
        }
        for y in [1, 3] {
            let row: Vec<u32> = (0..15).filter(|&x| p.contains(&Cell::new(x, y))).collect();
            assert_eq!(row, vec![0, 4, 6, 8, 10, 14]);
        }
    }
}
