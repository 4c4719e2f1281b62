//! Combinatorial criteria: quadratic-basis predicates, the vertex conditions
//! `π_k`, the primality certificate built from them, and thin obstructions.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Interval, PatternId, Polyomino, Vertex};
use crate::orders::{symmetry_for, OrderError, OrderIndex, Parity};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConditionError {
    #[error("polyomino is not thin")]
    NotThin,
    #[error("vertex {0} is not a vertex of the polyomino")]
    VertexNotInP(Vertex),
    #[error(transparent)]
    Order(#[from] OrderError),
}

/// Inner intervals keyed by each of their corners.
struct Corners {
    by_lower_left: HashMap<Vertex, Vec<Interval>>,
    by_upper_left: HashMap<Vertex, Vec<Interval>>,
    by_lower_right: HashMap<Vertex, Vec<Interval>>,
}

impl Corners {
    fn new(p: &Polyomino) -> Self {
        let mut c = Corners {
            by_lower_left: HashMap::new(),
            by_upper_left: HashMap::new(),
            by_lower_right: HashMap::new(),
        };
        for i in p.inner_intervals() {
            c.by_lower_left.entry(i.lower_left()).or_default().push(i);
            c.by_upper_left.entry(i.upper_left()).or_default().push(i);
            c.by_lower_right.entry(i.lower_right()).or_default().push(i);
        }
        c
    }

    fn get<'a>(map: &'a HashMap<Vertex, Vec<Interval>>, v: &Vertex) -> &'a [Interval] {
        map.get(v).map(Vec::as_slice).unwrap_or(&[])
    }
}

fn inner(p: &Polyomino, ll: (u32, u32), ur: (u32, u32)) -> bool {
    p.is_inner_at(ll.0 as i64, ll.1 as i64, ur.0 as i64, ur.1 as i64)
}

/// Odd: whenever inner `[a,b]` and `[b,e]` meet at `b`, one of `[a,f]`, `[a,g]`
/// is inner, `f`, `g` being the anti-diagonal corners of `[b,e]`.
///
/// Even: whenever inner `X`, `Y` meet at `d`, the lower-right corner of `X`
/// and upper-left corner of `Y`, then `[ll(X)∧ll(Y), d]` or `[d, ur(X)∨ur(Y)]`
/// is inner.
pub fn prop21(p: &Polyomino, parity: Parity) -> bool {
    let corners = Corners::new(p);
    match parity {
        Parity::Odd => p.inner_intervals().iter().all(|i| {
            let (a, b) = i.diagonal_corners();
            Corners::get(&corners.by_lower_left, &b).iter().all(|j| {
                let e = j.upper_right();
                inner(p, (a.x, a.y), (b.x, e.y)) || inner(p, (a.x, a.y), (e.x, b.y))
            })
        }),
        Parity::Even => p.inner_intervals().iter().all(|x| {
            let d = x.lower_right();
            let (x0, y1) = (x.lower_left().x, x.upper_right().y);
            Corners::get(&corners.by_upper_left, &d).iter().all(|y| {
                let (x1, y0) = (y.upper_right().x, y.lower_left().y);
                inner(p, (x0, y0), (d.x, d.y)) || inner(p, (d.x, d.y), (x1, y1))
            })
        }),
    }
}

fn pi1(p: &Polyomino, corners: &Corners, v: Vertex) -> bool {
    // (I): I = [a,b] with v its upper-left corner, J = [b,q]
    let one = Corners::get(&corners.by_upper_left, &v).iter().any(|i| {
        let (a, b) = i.diagonal_corners();
        Corners::get(&corners.by_lower_left, &b).iter().any(|j| {
            let q = j.upper_right();
            inner(p, (v.x, v.y), (q.x, q.y)) && !inner(p, (a.x, a.y), (q.x, b.y))
        })
    });
    // (II): K = [a,b] with v its lower-right corner, L = [p,q] with v its upper-left corner
    let two = || {
        Corners::get(&corners.by_lower_right, &v).iter().any(|k| {
            let (a, b) = k.diagonal_corners();
            Corners::get(&corners.by_upper_left, &v).iter().any(|l| {
                let (pp, q) = l.diagonal_corners();
                inner(p, (v.x, v.y), (q.x, b.y)) && !inner(p, (a.x, pp.y), (v.x, v.y))
            })
        })
    };
    one || two()
}

/// `π_k(P, v)`, defined for `k ≠ 1` as `π_1` on the image of `P` under
/// `σ_k⁻¹`, which carries `<^k` back to `<^1`.
pub fn pi(p: &Polyomino, v: Vertex, k: u8) -> Result<bool, ConditionError> {
    let k = OrderIndex::new(k)?;
    if !p.has_vertex(v) {
        return Err(ConditionError::VertexNotInP(v));
    }
    let t = p.transform(symmetry_for(k).inverse());
    Ok(pi1(&t.polyomino, &Corners::new(&t.polyomino), t.vertex(v)))
}

/// `π_k` for every vertex, as a vector aligned with `p.vertices()`.
pub fn pi_all(p: &Polyomino, k: OrderIndex) -> Vec<bool> {
    let t = p.transform(symmetry_for(k).inverse());
    let corners = Corners::new(&t.polyomino);
    p.vertices()
        .into_iter()
        .map(|v| pi1(&t.polyomino, &corners, t.vertex(v)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexProfile {
    pub vertex: Vertex,
    /// Indices `k` with `π_k` satisfied, ascending.
    pub satisfied: Vec<u8>,
    /// Smallest `k` of the certifying class with `π_k` not satisfied.
    pub chosen: Option<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    /// Entry `i-1` predicts whether the inner 2-minors form the reduced
    /// basis under `<^i`.
    pub quadratic: [bool; 8],
    /// Sorted by vertex.
    pub profiles: Vec<VertexProfile>,
    /// Parity class whose hypotheses hold, odd tried first.
    pub certified: Option<Parity>,
}

impl ConditionReport {
    pub fn is_certified(&self) -> bool {
        self.certified.is_some()
    }
}

fn class(parity: Parity) -> [u8; 4] {
    match parity {
        Parity::Odd => [1, 3, 5, 7],
        Parity::Even => [2, 4, 6, 8],
    }
}

/// Evaluates the primality-sufficiency hypotheses: quadratic bases for every
/// order of one parity class, and at every vertex some `k_v` of that class
/// with `π_{k_v}` false.
pub fn primality_sufficient(p: &Polyomino) -> ConditionReport {
    let odd = prop21(p, Parity::Odd);
    let even = prop21(p, Parity::Even);
    let quadratic = std::array::from_fn(|i| if i % 2 == 0 { odd } else { even });
    let table: Vec<Vec<bool>> = OrderIndex::all().map(|k| pi_all(p, k)).collect();
    let vertices = p.vertices();
    let chosen_in = |parity: Parity, n: usize| class(parity).into_iter().find(|&k| !table[k as usize - 1][n]);
    let certified = [Parity::Odd, Parity::Even].into_iter().find(|&parity| {
        let holds = match parity {
            Parity::Odd => odd,
            Parity::Even => even,
        };
        holds && (0..vertices.len()).all(|n| chosen_in(parity, n).is_some())
    });
    let profiles = vertices
        .iter()
        .enumerate()
        .map(|(n, &vertex)| VertexProfile {
            vertex,
            satisfied: (1..=8u8).filter(|&k| table[k as usize - 1][n]).collect(),
            chosen: certified.and_then(|parity| chosen_in(parity, n)),
        })
        .collect();
    ConditionReport {
        quadratic,
        profiles,
        certified,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub pattern: PatternId,
    /// Translation of the pattern's origin.
    pub at: Vertex,
}

pub fn obstruction_patterns(parity: Parity) -> [PatternId; 3] {
    match parity {
        Parity::Odd => [PatternId::DiagNe, PatternId::SkewI, PatternId::SkewII],
        Parity::Even => [PatternId::DiagNw, PatternId::SkewIII, PatternId::SkewIV],
    }
}

/// Every occurrence of the parity's diagonal gap and its two skew tetrominoes.
pub fn thin_obstructions(p: &Polyomino, parity: Parity) -> Result<Vec<Obstruction>, ConditionError> {
    if !p.is_thin() {
        return Err(ConditionError::NotThin);
    }
    Ok(obstruction_patterns(parity)
        .into_iter()
        .flat_map(|pattern| {
            p.pattern_matches(pattern)
                .into_iter()
                .map(move |at| Obstruction { pattern, at })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Cell, Isometry};

    fn poly(coords: &[(u32, u32)]) -> Polyomino {
        Polyomino::validate(coords.iter().map(|&(x, y)| Cell::new(x, y))).unwrap()
    }

    fn annulus() -> Polyomino {
        poly(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2)])
    }

    #[test]
    fn bars_are_unobstructed() {
        for n in 1..5 {
            let bar = poly(&(0..n).map(|x| (x, 0)).collect::<Vec<_>>());
            assert!(prop21(&bar, Parity::Odd) && prop21(&bar, Parity::Even));
            for v in bar.vertices() {
                for k in 1..=8 {
                    assert!(!pi(&bar, v, k).unwrap());
                }
            }
        }
    }

    #[test]
    fn skew_tetromino_is_odd_obstructed() {
        let s = poly(&[(0, 0), (1, 0), (1, 1), (2, 1)]);
        assert!(!prop21(&s, Parity::Odd));
        assert!(prop21(&s, Parity::Even));
        let found = thin_obstructions(&s, Parity::Odd).unwrap();
        assert_eq!(
            found,
            vec![Obstruction {
                pattern: PatternId::SkewI,
                at: Vertex::new(0, 0)
            }]
        );
    }

    #[test]
    fn annulus_passes_everything() {
        let a = annulus();
        assert!(prop21(&a, Parity::Odd) && prop21(&a, Parity::Even));
        assert!(thin_obstructions(&a, Parity::Odd).unwrap().is_empty());
        assert!(thin_obstructions(&a, Parity::Even).unwrap().is_empty());
        assert!(primality_sufficient(&a).is_certified());
    }

    #[test]
    fn single_cell_is_certified() {
        let r = primality_sufficient(&poly(&[(0, 0)]));
        assert_eq!(r.certified, Some(Parity::Odd));
        assert_eq!(r.quadratic, [true; 8]);
    }

    #[test]
    fn even_is_odd_of_the_mirror_image() {
        for p in [
            poly(&[(0, 0), (1, 0), (1, 1), (2, 1)]),
            poly(&[(1, 0), (2, 0), (0, 1), (1, 1)]),
            poly(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (2, 2), (1, 2)]),
            annulus(),
        ] {
            let m = p.transform(Isometry::MIRROR_X).polyomino;
            assert_eq!(prop21(&p, Parity::Even), prop21(&m, Parity::Odd));
        }
    }

    /// `[a,r]` inner and `[a,s]` not: the vertex `c` satisfies `π_1` through (I).
    #[test]
    fn fig5_vertex_satisfies_pi1() {
        let p = poly(&[(0, 0), (0, 1), (1, 1)]);
        assert!(pi(&p, Vertex::new(0, 1), 1).unwrap());
        assert!(!pi(&p, Vertex::new(0, 0), 1).unwrap());
    }

    #[test]
    fn errors() {
        let p = poly(&[(0, 0)]);
        assert_eq!(pi(&p, Vertex::new(3, 3), 1), Err(ConditionError::VertexNotInP(Vertex::new(3, 3))));
        assert_eq!(pi(&p, Vertex::new(0, 0), 9), Err(ConditionError::Order(OrderError::BadIndex(9))));
        let q = poly(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        assert_eq!(thin_obstructions(&q, Parity::Odd), Err(ConditionError::NotThin));
    }

    #[test]
    fn report_serializes_with_stable_order() {
        let r = primality_sufficient(&annulus());
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, serde_json::to_string(&primality_sufficient(&annulus())).unwrap());
        let back: ConditionReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert!(r.profiles.windows(2).all(|w| w[0].vertex < w[1].vertex));
    }
}
