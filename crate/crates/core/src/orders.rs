//! Vertex orders, their rotations, and the induced grevlex monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

use crate::geometry::{Isometry, Polyomino, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("order index {0} is not in 1..=8")]
    BadIndex(u8),
    #[error("vertex {0} is not a vertex of the polyomino")]
    VertexNotInP(Vertex),
}

/// Index `i` of the vertex order `<^i`, in `1..=8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct OrderIndex(u8);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Odd,
    Even,
}

impl OrderIndex {
    pub fn new(i: u8) -> Result<Self, OrderError> {
        if (1..=8).contains(&i) {
            Ok(OrderIndex(i))
        } else {
            Err(OrderError::BadIndex(i))
        }
    }

    pub fn all() -> impl Iterator<Item = OrderIndex> {
        (1..=8).map(OrderIndex)
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn parity(self) -> Parity {
        if self.0 % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl TryFrom<u8> for OrderIndex {
    type Error = OrderError;

    fn try_from(i: u8) -> Result<Self, OrderError> {
        OrderIndex::new(i)
    }
}

impl From<OrderIndex> for u8 {
    fn from(i: OrderIndex) -> u8 {
        i.0
    }
}

impl fmt::Display for OrderIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Parity {
    pub fn name(self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
    }
}

/// Compares two vertices under `<^i`.
///
/// | i | primary | tie-break |
/// |---|---------|-----------|
/// | 1 | x asc   | y desc    |
/// | 2 | x desc  | y desc    |
/// | 3 | x desc  | y asc     |
/// | 4 | x asc   | y asc     |
/// | 5 | y asc   | x desc    |
/// | 6 | y asc   | x asc     |
/// | 7 | y desc  | x asc     |
/// | 8 | y desc  | x desc    |
pub fn vertex_compare(i: OrderIndex, a: Vertex, b: Vertex) -> Ordering {
    let (xa, ya, xb, yb) = (a.x, a.y, b.x, b.y);
    match i.0 {
        1 => xa.cmp(&xb).then(yb.cmp(&ya)),
        2 => xb.cmp(&xa).then(yb.cmp(&ya)),
        3 => xb.cmp(&xa).then(ya.cmp(&yb)),
        4 => xa.cmp(&xb).then(ya.cmp(&yb)),
        5 => ya.cmp(&yb).then(xb.cmp(&xa)),
        6 => ya.cmp(&yb).then(xa.cmp(&xb)),
        7 => yb.cmp(&ya).then(xa.cmp(&xb)),
        8 => yb.cmp(&ya).then(xb.cmp(&xa)),
        _ => unreachable!("OrderIndex is validated"),
    }
}

/// The grid isometry `σ_i` with `a <^1 b ⇔ σ_i(a) <^i σ_i(b)`.
pub fn symmetry_for(i: OrderIndex) -> Isometry {
    match i.0 {
        1 => Isometry::IDENTITY,
        2 => Isometry::MIRROR_X,
        3 => Isometry::ROTATE_180,
        4 => Isometry::MIRROR_Y,
        5 => Isometry::TRANSPOSE,
        6 => Isometry::ROTATE_90,
        7 => Isometry::ANTI_TRANSPOSE,
        8 => Isometry::ROTATE_270,
        _ => unreachable!("OrderIndex is validated"),
    }
}

/// A total order on the vertices of one polyomino: `<^i`, optionally rotated
/// so that a chosen vertex comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder {
    index: OrderIndex,
    rotation: Option<Vertex>,
    // ascending
    vertices: Vec<Vertex>,
}

impl VertexOrder {
    pub fn for_polyomino(p: &Polyomino, index: OrderIndex) -> Self {
        let mut vertices = p.vertices();
        vertices.sort_by(|&a, &b| vertex_compare(index, a, b));
        VertexOrder {
            index,
            rotation: None,
            vertices,
        }
    }

    /// Cyclic shift of the base list that makes `v` the minimum.
    pub fn rotate(&self, v: Vertex) -> Result<Self, OrderError> {
        let mut base = self.vertices.clone();
        base.sort_by(|&a, &b| vertex_compare(self.index, a, b));
        let k = base
            .iter()
            .position(|&w| w == v)
            .ok_or(OrderError::VertexNotInP(v))?;
        base.rotate_left(k);
        Ok(VertexOrder {
            index: self.index,
            rotation: Some(v),
            vertices: base,
        })
    }

    pub fn index(&self) -> OrderIndex {
        self.index
    }

    pub fn rotation(&self) -> Option<Vertex> {
        self.rotation
    }

    /// Vertices in ascending order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn min(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn compare(&self, a: Vertex, b: Vertex) -> Ordering {
        match self.rotation {
            None => vertex_compare(self.index, a, b),
            Some(_) => self.position(a).cmp(&self.position(b)),
        }
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }
}

/// Sparse exponent vector; entries are sorted by vertex and never zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExponentVector {
    entries: SmallVec<[(Vertex, u32); 4]>,
    degree: u32,
}

impl ExponentVector {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Vertex) -> Self {
        Self::from_pairs([(v, 1)])
    }

    /// Sums repeated vertices and drops zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Vertex, u32)>) -> Self {
        let mut entries: SmallVec<[(Vertex, u32); 4]> = pairs.into_iter().filter(|e| e.1 > 0).collect();
        entries.sort_unstable_by_key(|e| e.0);
        let mut merged: SmallVec<[(Vertex, u32); 4]> = SmallVec::new();
        for (v, e) in entries {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|e| e.1).sum();
        ExponentVector {
            entries: merged,
            degree,
        }
    }

    pub fn product(vars: impl IntoIterator<Item = Vertex>) -> Self {
        Self::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(Vertex, u32)] {
        &self.entries
    }

    pub fn get(&self, v: Vertex) -> u32 {
        self.entries
            .binary_search_by_key(&v, |e| e.0)
            .map(|k| self.entries[k].1)
            .unwrap_or(0)
    }

    fn merge(&self, other: &Self, f: impl Fn(u32, u32) -> Option<u32>) -> Option<Self> {
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        let mut out: SmallVec<[(Vertex, u32); 4]> = SmallVec::new();
        while i < a.len() || j < b.len() {
            let (v, ea, eb) = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) if x.0 == y.0 => {
                    i += 1;
                    j += 1;
                    (x.0, x.1, y.1)
                }
                (Some(x), Some(y)) if x.0 < y.0 => {
                    i += 1;
                    (x.0, x.1, 0)
                }
                (Some(x), None) => {
                    i += 1;
                    (x.0, x.1, 0)
                }
                (_, Some(y)) => {
                    j += 1;
                    (y.0, 0, y.1)
                }
                (None, None) => unreachable!(),
            };
            let e = f(ea, eb)?;
            if e > 0 {
                out.push((v, e));
            }
        }
        let degree = out.iter().map(|e| e.1).sum();
        Some(ExponentVector {
            entries: out,
            degree,
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.merge(other, |a, b| Some(a + b)).unwrap()
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        self.merge(other, |a, b| a.checked_sub(b))
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.degree <= other.degree && self.entries.iter().all(|&(v, e)| other.get(v) >= e)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        self.merge(other, |a, b| Some(a.max(b))).unwrap()
    }

    pub fn gcd(&self, other: &Self) -> Self {
        self.merge(other, |a, b| Some(a.min(b))).unwrap()
    }

    pub fn coprime(&self, other: &Self) -> bool {
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }
}

impl fmt::Display for ExponentVector {
    /// `x_1_0*x_2_3^2`; the empty product is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "x_{}_{}", v.x, v.y)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Graded reverse lexicographic order induced by a vertex order.
///
/// Higher degree is larger; on equal degree, at the smallest vertex where the
/// exponents differ, the monomial with the smaller exponent is larger.
#[derive(Debug, Clone)]
pub struct MonomialOrder {
    base: VertexOrder,
    // rank[ambient slot] = position in `base`, or usize::MAX off P
    rank: Vec<usize>,
    height: u32,
}

impl MonomialOrder {
    pub fn new(base: VertexOrder) -> Self {
        let width = base.vertices.iter().map(|v| v.x).max().unwrap_or(0);
        let height = base.vertices.iter().map(|v| v.y).max().unwrap_or(0);
        let mut rank = vec![usize::MAX; (width as usize + 1) * (height as usize + 1)];
        for (k, v) in base.vertices.iter().enumerate() {
            rank[v.x as usize * (height as usize + 1) + v.y as usize] = k;
        }
        MonomialOrder { base, rank, height }
    }

    pub fn for_polyomino(p: &Polyomino, index: OrderIndex) -> Self {
        Self::new(VertexOrder::for_polyomino(p, index))
    }

    pub fn base(&self) -> &VertexOrder {
        &self.base
    }

    /// Position of `v` in the ascending variable list.
    pub fn rank_of(&self, v: Vertex) -> usize {
        let slot = v.x as usize * (self.height as usize + 1) + v.y as usize;
        match self.rank.get(slot) {
            Some(&r) if v.y <= self.height && r != usize::MAX => r,
            _ => panic!("vertex {v} is not a variable of this order"),
        }
    }

    /// Degree followed by `(rank, exponent)` sorted by rank; comparing keys
    /// with [`GrevlexKey`]'s `Ord` agrees with [`MonomialOrder::compare`].
    pub fn key(&self, m: &ExponentVector) -> GrevlexKey {
        let mut terms: SmallVec<[(usize, u32); 4]> =
            m.entries().iter().map(|&(v, e)| (self.rank_of(v), e)).collect();
        terms.sort_unstable();
        GrevlexKey {
            degree: m.degree(),
            terms,
        }
    }

    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        if a.degree() != b.degree() {
            return a.degree().cmp(&b.degree());
        }
        // (rank, exponent in a, exponent in b) at the lowest-ranked difference
        let mut best: Option<(usize, u32, u32)> = None;
        let mut note = |v: Vertex, ea: u32, eb: u32| {
            if ea != eb {
                let r = self.rank_of(v);
                if best.is_none_or(|(br, _, _)| r < br) {
                    best = Some((r, ea, eb));
                }
            }
        };
        let (x, y) = (a.entries(), b.entries());
        let (mut i, mut j) = (0, 0);
        while i < x.len() || j < y.len() {
            match (x.get(i), y.get(j)) {
                (Some(p), Some(q)) if p.0 == q.0 => {
                    note(p.0, p.1, q.1);
                    i += 1;
                    j += 1;
                }
                (Some(p), Some(q)) if p.0 < q.0 => {
                    note(p.0, p.1, 0);
                    i += 1;
                }
                (Some(p), None) => {
                    note(p.0, p.1, 0);
                    i += 1;
                }
                (_, Some(q)) => {
                    note(q.0, 0, q.1);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        match best {
            None => Ordering::Equal,
            Some((_, ea, eb)) => eb.cmp(&ea),
        }
    }

    pub fn max<'a>(&self, a: &'a ExponentVector, b: &'a ExponentVector) -> &'a ExponentVector {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

/// Sort key realising grevlex as a plain lexicographic comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrevlexKey {
    degree: u32,
    terms: SmallVec<[(usize, u32); 4]>,
}

impl Ord for GrevlexKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let (a, b) = (&self.terms, &other.terms);
            let (mut i, mut j) = (0, 0);
            loop {
                match (a.get(i), b.get(j)) {
                    (None, None) => return Ordering::Equal,
                    // equal degree, so a remaining entry on one side forces one on the other
                    (Some(_), None) | (None, Some(_)) => unreachable!("degrees agree"),
                    (Some(&(ra, ea)), Some(&(rb, eb))) => {
                        if ra == rb {
                            if ea != eb {
                                return eb.cmp(&ea);
                            }
                            i += 1;
                            j += 1;
                        } else if ra < rb {
                            // b has exponent 0 at ra, so b is larger
                            return Ordering::Less;
                        } else {
                            return Ordering::Greater;
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for GrevlexKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
