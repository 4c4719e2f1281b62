use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use crate::orders::{ExponentVector, GrevlexKey, MonomialOrder};

use super::binomial::{check_cancellation, Binomial};
use super::{GbError, GbOptions};

/// A reduced Gröbner basis, sorted ascending by leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<Binomial>,
    pairs_processed: u64,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Pairs taken off the queue while computing this basis.
    pub fn pairs_processed(&self) -> u64 {
        self.pairs_processed
    }

    pub fn is_quadratic(&self) -> bool {
        self.elements.iter().all(Binomial::is_quadratic)
    }

    pub fn normal_form_monomial(&self, m: &ExponentVector) -> ExponentVector {
        reduce_monomial(m, &self.elements)
    }

    /// `None` when `f` reduces to zero, i.e. lies in the ideal.
    pub fn normal_form(&self, f: &Binomial) -> Option<Binomial> {
        normal_form(f, &self.elements)
    }

    pub fn contains(&self, f: &Binomial) -> bool {
        self.normal_form(f).is_none()
    }

    /// True if no leading monomial divides `m`.
    pub fn is_standard(&self, m: &ExponentVector) -> bool {
        !self.elements.iter().any(|g| g.lead().divides(m))
    }

    /// One binomial per line in the canonical text format.
    pub fn to_text(&self) -> String {
        self.elements.iter().map(|g| format!("{g}\n")).collect()
    }

    pub(crate) fn from_parts(order: MonomialOrder, elements: Vec<Binomial>, pairs_processed: u64) -> Self {
        let elements = finalize(elements, &order);
        GroebnerBasis {
            order,
            elements,
            pairs_processed,
        }
    }
}

fn reduce_monomial(m: &ExponentVector, basis: &[Binomial]) -> ExponentVector {
    let mut m = m.clone();
    'outer: loop {
        for g in basis {
            if g.lead().divides(&m) {
                let q = m.checked_div(g.lead()).expect("divisibility was checked");
                check_cancellation(&q.mul(g.lead()), &m);
                m = q.mul(g.tail());
                continue 'outer;
            }
        }
        return m;
    }
}

/// Reduces both monomials to normal form; `None` if they meet.
pub fn normal_form(f: &Binomial, basis: &[Binomial]) -> Option<Binomial> {
    Binomial::new(reduce_monomial(f.plus(), basis), reduce_monomial(f.minus(), basis))
}

/// S-polynomial of two oriented binomials, up to sign; `None` when zero.
pub fn spoly(f: &Binomial, g: &Binomial) -> Option<Binomial> {
    let lcm = f.lead().lcm(g.lead());
    let a = lcm.checked_div(f.lead()).expect("lcm is a multiple");
    let b = lcm.checked_div(g.lead()).expect("lcm is a multiple");
    check_cancellation(&a.mul(f.lead()), &b.mul(g.lead()));
    Binomial::new(b.mul(g.tail()), a.mul(f.tail()))
}

/// Drops elements whose leading monomial is a multiple of another's, reduces
/// the tails, and sorts by leading monomial.
fn finalize(elements: Vec<Binomial>, order: &MonomialOrder) -> Vec<Binomial> {
    let mut sorted: Vec<Binomial> = elements.into_iter().map(|g| g.oriented(order)).collect();
    sorted.sort_by(|a, b| order.compare(a.lead(), b.lead()));
    let mut kept: Vec<Binomial> = Vec::new();
    for g in sorted {
        if !kept.iter().any(|k| k.lead().divides(g.lead())) {
            kept.push(g);
        }
    }
    let reduced: Vec<Binomial> = kept
        .iter()
        .map(|g| {
            let tail = reduce_monomial(g.tail(), &kept);
            Binomial::new(g.lead().clone(), tail).expect("tail is smaller than lead")
        })
        .collect();
    debug_assert!(reduced
        .windows(2)
        .all(|w| order.compare(w[0].lead(), w[1].lead()) == Ordering::Less));
    reduced
}

/// Buchberger's algorithm with the normal selection strategy and both
/// Buchberger criteria. Returns the reduced basis.
pub fn buchberger(
    gens: impl IntoIterator<Item = Binomial>,
    order: &MonomialOrder,
    opts: &GbOptions,
) -> Result<GroebnerBasis, GbError> {
    let mut seen = HashSet::new();
    let mut basis: Vec<Binomial> = Vec::new();
    for g in gens {
        let g = g.oriented(order);
        if seen.insert(g.clone()) {
            basis.push(g);
        }
    }

    type Entry = Reverse<(GrevlexKey, usize, usize)>;
    let mut queue: BinaryHeap<Entry> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push = |queue: &mut BinaryHeap<Entry>, pending: &mut HashSet<(usize, usize)>, basis: &[Binomial], i: usize, j: usize| {
        let lcm = basis[i].lead().lcm(basis[j].lead());
        queue.push(Reverse((order.key(&lcm), i, j)));
        pending.insert((i, j));
    };
    for j in 0..basis.len() {
        for i in 0..j {
            push(&mut queue, &mut pending, &basis, i, j);
        }
    }

    let mut processed = 0u64;
    while let Some(Reverse((_, i, j))) = queue.pop() {
        pending.remove(&(i, j));
        processed += 1;
        if processed > opts.pair_budget {
            return Err(GbError::Timeout {
                budget: opts.pair_budget,
            });
        }
        let (f, g) = (&basis[i], &basis[j]);
        if f.lead().coprime(g.lead()) {
            continue;
        }
        let lcm = f.lead().lcm(g.lead());
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let Some(s) = spoly(f, g) else { continue };
        if let Some(h) = normal_form(&s, &basis) {
            let h = h.oriented(order);
            basis.push(h);
            let n = basis.len() - 1;
            for k in 0..n {
                push(&mut queue, &mut pending, &basis, k, n);
            }
        }
    }
    Ok(GroebnerBasis::from_parts(order.clone(), basis, processed))
}
