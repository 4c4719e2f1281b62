use serde::{Deserialize, Serialize};

use super::{Cell, Polyomino};

/// How the distance in the "cells far apart are disjoint" clause of the thin
/// cycle definition is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum CycleReading {
    /// Cells at cyclic distance greater than 2 share no vertex.
    #[default]
    Cyclic,
    /// `C_i ∩ C_j = ∅` whenever `j > i + 2` along the labelling `C_1..C_n`,
    /// read literally. Only kept for comparison: it rejects every closed ring
    /// with more than three cells because `C_1` and `C_n` share an edge.
    Linear,
}

pub(super) fn is_thin_cycle(p: &Polyomino, reading: CycleReading) -> bool {
    if !p.is_thin() {
        return false;
    }
    match reading {
        CycleReading::Cyclic => cyclic(p),
        CycleReading::Linear => linear(p),
    }
}

fn edge_neighbors(p: &Polyomino, c: &Cell) -> Vec<Cell> {
    c.neighbors().filter(|n| p.contains(n)).collect()
}

/// The adjacency graph of a thin cycle is 2-regular (the square grid has no
/// triangles), so the cyclic labelling is unique up to rotation and reflection.
fn cyclic(p: &Polyomino) -> bool {
    let n = p.rank();
    if n < 4 || p.cells().iter().any(|c| edge_neighbors(p, c).len() != 2) {
        return false;
    }
    let mut order = vec![p.cells()[0]];
    let mut prev = p.cells()[0];
    let mut cur = edge_neighbors(p, &prev)[0];
    while cur != order[0] {
        order.push(cur);
        let next = edge_neighbors(p, &cur)
            .into_iter()
            .find(|c| *c != prev)
            .expect("degree two");
        prev = cur;
        cur = next;
        if order.len() > n {
            return false;
        }
    }
    if order.len() != n {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            let d = (j - i).min(n - (j - i));
            if d > 2 && order[i].touches(&order[j]) {
                return false;
            }
        }
    }
    true
}

/// Depth-first search over labellings, pruned by the disjointness clause.
fn linear(p: &Polyomino) -> bool {
    let n = p.rank();
    if n < 2 {
        return false;
    }
    let mut used = vec![false; n];
    let mut path = Vec::with_capacity(n);
    let index = |c: &Cell| p.cells().binary_search(c).unwrap();
    for start in 0..n {
        used[start] = true;
        path.push(p.cells()[start]);
        if extend_linear(p, &mut path, &mut used, &index) {
            return true;
        }
        path.pop();
        used[start] = false;
    }
    false
}

fn extend_linear(
    p: &Polyomino,
    path: &mut Vec<Cell>,
    used: &mut [bool],
    index: &dyn Fn(&Cell) -> usize,
) -> bool {
    let n = p.rank();
    if path.len() == n {
        return path[0].shares_edge(&path[n - 1]);
    }
    let last = *path.last().unwrap();
    for next in edge_neighbors(p, &last) {
        let k = index(&next);
        if used[k] {
            continue;
        }
        let j = path.len();
        // next becomes C_{j+1}; it must avoid C_1..C_{j-2}.
        if path[..j.saturating_sub(2)].iter().any(|c| c.touches(&next)) {
            continue;
        }
        used[k] = true;
        path.push(next);
        if extend_linear(p, path, used, index) {
            return true;
        }
        path.pop();
        used[k] = false;
    }
    false
}
