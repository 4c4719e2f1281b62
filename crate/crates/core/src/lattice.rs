//! The lattice spanned by cell vectors and exact membership in it.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gbasis::{Binomial, GroebnerBasis};
use crate::geometry::{Polyomino, Vertex};
use crate::orders::ExponentVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("vector has {got} entries, the ambient box has {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vertex {0} lies outside the ambient box")]
    OutsideBox(Vertex),
    #[error("integer overflow during Hermite reduction")]
    Overflow,
}

/// Rows `c_k = e_ll + e_ur − e_lr − e_ul`, one per cell, over the vertices of
/// the bounding box, together with the Hermite normal form of their span.
///
/// Coordinates are indexed by [`Polyomino::ambient_index`]. Externally the box
/// starts at `(1,1)`; see [`LatticeBasis::origin_offset`].
#[derive(Debug, Clone)]
pub struct LatticeBasis {
    polyomino: Polyomino,
    rows: Vec<Vec<i64>>,
    hnf: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

fn floor_div(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

/// `target -= q·src`.
fn sub_multiple(target: &mut [i64], q: i64, src: &[i64]) -> Result<(), LatticeError> {
    if q == 0 {
        return Ok(());
    }
    for (t, &s) in target.iter_mut().zip(src) {
        *t = q
            .checked_mul(s)
            .and_then(|qs| t.checked_sub(qs))
            .ok_or(LatticeError::Overflow)?;
    }
    Ok(())
}

/// Row-style Hermite normal form: echelon rows with positive pivots and the
/// entries above each pivot reduced into `[0, pivot)`.
fn hermite(mut a: Vec<Vec<i64>>, ncols: usize) -> Result<(Vec<Vec<i64>>, Vec<usize>), LatticeError> {
    let mut pivots = Vec::new();
    let mut pr = 0;
    for col in 0..ncols {
        if pr == a.len() {
            break;
        }
        loop {
            let best = (pr..a.len())
                .filter(|&i| a[i][col] != 0)
                .min_by_key(|&i| (a[i][col].unsigned_abs(), i));
            let Some(best) = best else { break };
            a.swap(pr, best);
            let mut done = true;
            for i in pr + 1..a.len() {
                if a[i][col] != 0 {
                    let q = a[i][col] / a[pr][col];
                    let (head, tail) = a.split_at_mut(i);
                    sub_multiple(&mut tail[0], q, &head[pr])?;
                    done &= a[i][col] == 0;
                }
            }
            if done {
                break;
            }
        }
        if a[pr][col] == 0 {
            continue;
        }
        if a[pr][col] < 0 {
            for e in a[pr].iter_mut() {
                *e = e.checked_neg().ok_or(LatticeError::Overflow)?;
            }
        }
        for i in 0..pr {
            let q = floor_div(a[i][col], a[pr][col]);
            let (head, tail) = a.split_at_mut(pr);
            sub_multiple(&mut head[i], q, &tail[0])?;
        }
        pivots.push(col);
        pr += 1;
    }
    a.truncate(pr);
    Ok((a, pivots))
}

impl LatticeBasis {
    pub fn for_polyomino(p: &Polyomino) -> Self {
        Self::try_for_polyomino(p).expect("cell vectors have entries in {-1, 0, 1}")
    }

    pub fn try_for_polyomino(p: &Polyomino) -> Result<Self, LatticeError> {
        let n = p.ambient_len();
        let rows: Vec<Vec<i64>> = p
            .cells()
            .iter()
            .map(|c| {
                let [ll, lr, ul, ur] = c.vertices();
                let mut row = vec![0i64; n];
                for (v, s) in [(ll, 1), (ur, 1), (lr, -1), (ul, -1)] {
                    row[p.ambient_index(v).expect("cell corners are in the box")] += s;
                }
                row
            })
            .collect();
        let (hnf, pivots) = hermite(rows.clone(), n)?;
        Ok(LatticeBasis {
            polyomino: p.clone(),
            rows,
            hnf,
            pivots,
        })
    }

    /// Number of coordinates, `(width+1)·(height+1)`.
    pub fn dimension(&self) -> usize {
        self.polyomino.ambient_len()
    }

    pub fn rank(&self) -> usize {
        self.hnf.len()
    }

    pub fn cell_vectors(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn hermite_rows(&self) -> &[Vec<i64>] {
        &self.hnf
    }

    /// Offset added to internal vertex coordinates in the 1-based convention
    /// used for the box `[(1,1),(m,n)]`.
    pub fn origin_offset(&self) -> (u32, u32) {
        (1, 1)
    }

    /// Canonical representative of `w + Λ`.
    pub fn reduce(&self, w: &[i64]) -> Result<Vec<i64>, LatticeError> {
        if w.len() != self.dimension() {
            return Err(LatticeError::DimensionMismatch {
                expected: self.dimension(),
                got: w.len(),
            });
        }
        let mut w = w.to_vec();
        for (row, &pc) in self.hnf.iter().zip(&self.pivots) {
            let q = floor_div(w[pc], row[pc]);
            sub_multiple(&mut w, q, row)?;
        }
        Ok(w)
    }

    pub fn membership(&self, w: &[i64]) -> Result<bool, LatticeError> {
        Ok(self.reduce(w)?.iter().all(|&e| e == 0))
    }

    pub fn exponent_vector(&self, m: &ExponentVector) -> Result<Vec<i64>, LatticeError> {
        let mut w = vec![0i64; self.dimension()];
        for &(v, e) in m.entries() {
            let k = self.polyomino.ambient_index(v).ok_or(LatticeError::OutsideBox(v))?;
            w[k] += e as i64;
        }
        Ok(w)
    }

    /// Key shared by exactly the monomials whose exponent differences lie in Λ.
    pub fn coset_key(&self, m: &ExponentVector) -> Result<Vec<i64>, LatticeError> {
        self.reduce(&self.exponent_vector(m)?)
    }

    pub fn difference(&self, f: &Binomial) -> Result<Vec<i64>, LatticeError> {
        let a = self.exponent_vector(f.plus())?;
        let b = self.exponent_vector(f.minus())?;
        Ok(a.iter().zip(&b).map(|(x, y)| x - y).collect())
    }

    /// `x^a − x^b ∈ I_Λ ⇔ a − b ∈ Λ`.
    pub fn binomial_in_lattice_ideal(&self, f: &Binomial) -> Result<bool, LatticeError> {
        self.membership(&self.difference(f)?)
    }
}

/// Outcome of [`search_witness`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum WitnessSearch {
    /// A binomial of `I_Λ` whose monomials are both standard, hence not in `I_P`.
    Found { binomial: Binomial, degree: u32 },
    NotFound { max_degree: u32 },
    BudgetExhausted { degree: u32, monomials: u64 },
}

/// Looks for two distinct standard monomials of `ideal` in the same coset of Λ,
/// degree by degree from 2 up to `max_degree`.
pub fn search_witness(
    ideal: &GroebnerBasis,
    lattice: &LatticeBasis,
    max_degree: u32,
    monomial_budget: u64,
) -> Result<WitnessSearch, LatticeError> {
    let vertices = lattice.polyomino.vertices();
    let mut visited = 0u64;
    for degree in 2..=max_degree {
        let mut seen: HashMap<Vec<i64>, ExponentVector> = HashMap::new();
        let mut stack: Vec<(usize, ExponentVector)> = vec![(0, ExponentVector::one())];
        // depth-first over multisets of vertices in index order; a non-standard
        // prefix has only non-standard extensions
        while let Some((start, m)) = stack.pop() {
            if m.degree() == degree {
                visited += 1;
                if visited > monomial_budget {
                    return Ok(WitnessSearch::BudgetExhausted {
                        degree,
                        monomials: visited - 1,
                    });
                }
                let key = lattice.coset_key(&m)?;
                if let Some(prev) = seen.get(&key) {
                    let binomial = Binomial::new(prev.clone(), m)
                        .expect("distinct multisets")
                        .oriented(ideal.order());
                    return Ok(WitnessSearch::Found { binomial, degree });
                }
                seen.insert(key, m);
                continue;
            }
            for k in (start..vertices.len()).rev() {
                let next = m.mul(&ExponentVector::var(vertices[k]));
                if ideal.is_standard(&next) {
                    stack.push((k, next));
                }
            }
        }
    }
    Ok(WitnessSearch::NotFound { max_degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gbasis::{buchberger, inner_2_minors, GbOptions};
    use crate::geometry::Cell;
    use crate::orders::{MonomialOrder, OrderIndex};
    use proptest::prelude::*;

    fn poly(coords: &[(u32, u32)]) -> Polyomino {
        Polyomino::validate(coords.iter().map(|&(x, y)| Cell::new(x, y))).unwrap()
    }

    /// Independent solver: the lower-left corner of the lexicographically
    /// smallest remaining cell belongs to no other remaining cell, so its
    /// coefficient is read off directly.
    fn peel(p: &Polyomino, w: &[i64]) -> bool {
        let mut w = w.to_vec();
        let mut cells = p.cells().to_vec();
        cells.sort();
        for c in cells {
            let [ll, lr, ul, ur] = c.vertices();
            let k = w[p.ambient_index(ll).unwrap()];
            for (v, s) in [(ll, 1), (ur, 1), (lr, -1), (ul, -1)] {
                w[p.ambient_index(v).unwrap()] -= k * s;
            }
        }
        w.iter().all(|&e| e == 0)
    }

    fn fixtures() -> Vec<Polyomino> {
        vec![
            poly(&[(0, 0)]),
            poly(&[(0, 0), (1, 0), (0, 1), (1, 1)]),
            poly(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2)]),
            poly(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (2, 2), (1, 2)]),
        ]
    }

    #[test]
    fn rows_have_two_plus_and_two_minus_ones() {
        for p in fixtures() {
            let l = LatticeBasis::for_polyomino(&p);
            for row in l.cell_vectors() {
                assert_eq!(row.iter().sum::<i64>(), 0);
                let mut nz: Vec<i64> = row.iter().copied().filter(|&e| e != 0).collect();
                nz.sort();
                assert_eq!(nz, vec![-1, -1, 1, 1]);
            }
            assert_eq!(l.rank(), p.rank());
        }
    }

    #[test]
    fn block_lattice_has_rank_four() {
        assert_eq!(LatticeBasis::for_polyomino(&fixtures()[1]).rank(), 4);
    }

    #[test]
    fn perturbed_cell_vector_is_not_a_member() {
        let p = &fixtures()[2];
        let l = LatticeBasis::for_polyomino(p);
        let mut w = l.cell_vectors()[0].clone();
        assert!(l.membership(&w).unwrap());
        w[0] += 1;
        assert!(!l.membership(&w).unwrap());
        assert_eq!(
            l.membership(&[0, 1]),
            Err(LatticeError::DimensionMismatch {
                expected: l.dimension(),
                got: 2
            })
        );
    }

    #[test]
    fn inner_minors_lie_in_the_lattice_ideal() {
        for p in fixtures() {
            let l = LatticeBasis::for_polyomino(&p);
            for g in inner_2_minors(&p) {
                assert!(l.binomial_in_lattice_ideal(&g).unwrap());
                assert!(peel(&p, &l.difference(&g).unwrap()));
            }
        }
    }

    #[test]
    fn simple_polyomino_has_no_low_degree_witness() {
        let p = poly(&[(0, 0), (1, 0), (1, 1), (2, 1)]);
        let o = MonomialOrder::for_polyomino(&p, OrderIndex::new(1).unwrap());
        let gb = buchberger(inner_2_minors(&p), &o, &GbOptions::default()).unwrap();
        let l = LatticeBasis::for_polyomino(&p);
        assert_eq!(search_witness(&gb, &l, 4, 1_000_000).unwrap(), WitnessSearch::NotFound { max_degree: 4 });
    }

    #[test]
    fn floor_division_rounds_down() {
        assert_eq!(floor_div(-3, 2), -2);
        assert_eq!(floor_div(3, 2), 1);
        assert_eq!(floor_div(-4, 2), -2);
        assert_eq!(floor_div(3, -2), -2);
    }

    proptest! {
        #[test]
        fn hnf_agrees_with_peeling(
            which in 0usize..4,
            coeffs in proptest::collection::vec(-3i64..=3, 8),
            noise in proptest::collection::vec(-1i64..=1, 16),
        ) {
            let p = &fixtures()[which];
            let l = LatticeBasis::for_polyomino(p);
            let mut w = vec![0i64; l.dimension()];
            for (row, c) in l.cell_vectors().iter().zip(&coeffs) {
                for (e, r) in w.iter_mut().zip(row) {
                    *e += c * r;
                }
            }
            prop_assert!(l.membership(&w).unwrap());
            for (e, n) in w.iter_mut().zip(&noise) {
                *e += n;
            }
            prop_assert_eq!(l.membership(&w).unwrap(), peel(p, &w));
        }
    }
}
