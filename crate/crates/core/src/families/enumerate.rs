use std::collections::HashSet;

use rayon::prelude::*;

use super::FamilyError;
use crate::geometry::Polyomino;

pub const DEFAULT_RANK_CAP: usize = 8;

// Below this depth the search is split into independent subtrees.
const SPLIT_DEPTH: usize = 4;

type Xy = (i32, i32);

/// Cells of the half plane `y > 0 ∨ (y = 0 ∧ x ≥ 0)`: the origin is the
/// lowest-then-leftmost cell of every polyomino grown from it.
fn admissible(c: Xy) -> bool {
    c.1 > 0 || (c.1 == 0 && c.0 >= 0)
}

fn neighbors((x, y): Xy) -> [Xy; 4] {
    [(x + 1, y), (x, y + 1), (x - 1, y), (x, y - 1)]
}

struct Search {
    target: usize,
    cells: Vec<Xy>,
    seen: HashSet<Xy>,
}

#[derive(Clone)]
struct Task {
    cells: Vec<Xy>,
    seen: HashSet<Xy>,
    untried: Vec<Xy>,
}

impl Search {
    /// Redelmeier's procedure; `on_split` receives subtrees at `SPLIT_DEPTH`
    /// when given, otherwise they are explored in place.
    fn run(&mut self, mut untried: Vec<Xy>, out: &mut Vec<Vec<Xy>>, split: Option<&mut Vec<Task>>) {
        let mut split = split;
        while let Some(c) = untried.pop() {
            self.cells.push(c);
            if self.cells.len() == self.target {
                out.push(self.cells.clone());
            } else {
                let mut next = untried.clone();
                let mut added = Vec::new();
                for n in neighbors(c) {
                    if admissible(n) && self.seen.insert(n) {
                        next.push(n);
                        added.push(n);
                    }
                }
                match split.as_deref_mut() {
                    Some(tasks) if self.cells.len() == SPLIT_DEPTH => tasks.push(Task {
                        cells: self.cells.clone(),
                        seen: self.seen.clone(),
                        untried: next,
                    }),
                    _ => self.run(next, out, split.as_deref_mut()),
                }
                for n in added {
                    self.seen.remove(&n);
                }
            }
            self.cells.pop();
        }
    }
}

/// Fixed polyominoes of the given rank, sorted, each exactly once.
pub fn enumerate_with_cap(rank: usize, cap: usize) -> Result<Vec<Polyomino>, FamilyError> {
    if rank > cap {
        return Err(FamilyError::RankCapExceeded { rank, cap });
    }
    if rank == 0 {
        return Ok(Vec::new());
    }
    let mut search = Search {
        target: rank,
        cells: Vec::new(),
        seen: HashSet::from([(0, 0)]),
    };
    let mut raw = Vec::new();
    let mut tasks = Vec::new();
    search.run(vec![(0, 0)], &mut raw, Some(&mut tasks));
    let rest: Vec<Vec<Vec<Xy>>> = tasks
        .into_par_iter()
        .map(|t| {
            let mut s = Search {
                target: rank,
                cells: t.cells,
                seen: t.seen,
            };
            let mut out = Vec::new();
            s.run(t.untried, &mut out, None);
            out
        })
        .collect();
    raw.extend(rest.into_iter().flatten());
    let mut polys: Vec<Polyomino> = raw
        .into_iter()
        .map(|cells| {
            Polyomino::from_coords(cells.into_iter().map(|(x, y)| (x as i64, y as i64)))
                .expect("grown cells are connected")
        })
        .collect();
    polys.sort();
    Ok(polys)
}

pub fn enumerate(rank: usize) -> Result<Vec<Polyomino>, FamilyError> {
    enumerate_with_cap(rank, DEFAULT_RANK_CAP)
}

/// All ranks `1..=rank`, in rank order.
pub fn enumerate_upto(rank: usize) -> Result<Vec<Polyomino>, FamilyError> {
    let mut out = Vec::new();
    for r in 1..=rank {
        out.extend(enumerate(r)?);
    }
    Ok(out)
}

pub fn count_fixed(rank: usize) -> Result<usize, FamilyError> {
    Ok(enumerate(rank)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Cell;
    use std::collections::BTreeSet;

    /// Grow every polyomino of rank r−1 by one neighbouring cell and deduplicate.
    fn naive(rank: usize) -> BTreeSet<Polyomino> {
        let mut level: BTreeSet<Polyomino> = [Polyomino::validate([Cell::new(0, 0)]).unwrap()].into();
        for _ in 1..rank {
            let mut next = BTreeSet::new();
            for p in &level {
                let coords: Vec<(i64, i64)> = p.cells().iter().map(|c| (c.x() as i64, c.y() as i64)).collect();
                for &(x, y) in &coords {
                    for n in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                        if !coords.contains(&n) {
                            let mut grown = coords.clone();
                            grown.push(n);
                            next.insert(Polyomino::from_coords(grown).unwrap());
                        }
                    }
                }
            }
            level = next;
        }
        level
    }

    #[test]
    fn counts_match_known_values() {
        let counts: Vec<usize> = (1..=8).map(|r| count_fixed(r).unwrap()).collect();
        assert_eq!(counts, vec![1, 2, 6, 19, 63, 216, 760, 2725]);
    }

    #[test]
    fn agrees_with_naive_growth() {
        for r in 1..=6 {
            let fast = enumerate(r).unwrap();
            let set: BTreeSet<Polyomino> = fast.iter().cloned().collect();
            assert_eq!(set.len(), fast.len(), "duplicates at rank {r}");
            assert_eq!(set, naive(r), "rank {r}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(enumerate(9).unwrap_err(), FamilyError::RankCapExceeded { rank: 9, cap: 8 });
        assert_eq!(enumerate_with_cap(9, 9).unwrap().len(), 9910);
    }
}
