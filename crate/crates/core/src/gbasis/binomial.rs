use std::cmp::Ordering;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use serde::{Deserialize, Serialize};

use crate::orders::{ExponentVector, MonomialOrder};

static PURITY_CHECKS: AtomicU64 = AtomicU64::new(0);
static PURITY_VIOLATIONS: AtomicU64 = AtomicU64::new(0);

/// Process-wide tallies of the cancellation checks made while building
/// S-polynomials and reduction steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PurityCounters {
    pub checks: u64,
    pub violations: u64,
}

pub fn purity_counters() -> PurityCounters {
    PurityCounters {
        checks: PURITY_CHECKS.load(AtomicOrdering::Relaxed),
        violations: PURITY_VIOLATIONS.load(AtomicOrdering::Relaxed),
    }
}

/// Records that two monomials which must cancel are equal.
pub(crate) fn check_cancellation(left: &ExponentVector, right: &ExponentVector) {
    PURITY_CHECKS.fetch_add(1, AtomicOrdering::Relaxed);
    if left != right {
        PURITY_VIOLATIONS.fetch_add(1, AtomicOrdering::Relaxed);
    }
}

/// `x^plus − x^minus` with `plus ≠ minus`. The zero binomial is never stored.
///
/// Every S-polynomial and every reduction step of such differences is again
/// such a difference or zero, so coefficients never appear.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Binomial {
    plus: ExponentVector,
    minus: ExponentVector,
}

impl Binomial {
    /// `None` for the zero binomial.
    pub fn new(plus: ExponentVector, minus: ExponentVector) -> Option<Self> {
        (plus != minus).then_some(Binomial { plus, minus })
    }

    pub fn plus(&self) -> &ExponentVector {
        &self.plus
    }

    pub fn minus(&self) -> &ExponentVector {
        &self.minus
    }

    /// Same binomial up to sign, with `plus` the larger monomial.
    pub fn oriented(self, order: &MonomialOrder) -> Self {
        if order.compare(&self.plus, &self.minus) == Ordering::Less {
            Binomial {
                plus: self.minus,
                minus: self.plus,
            }
        } else {
            self
        }
    }

    pub fn is_oriented(&self, order: &MonomialOrder) -> bool {
        order.compare(&self.plus, &self.minus) == Ordering::Greater
    }

    /// Leading monomial of an oriented binomial.
    pub fn lead(&self) -> &ExponentVector {
        &self.plus
    }

    /// Trailing monomial of an oriented binomial.
    pub fn tail(&self) -> &ExponentVector {
        &self.minus
    }

    pub fn degree(&self) -> u32 {
        self.plus.degree().max(self.minus.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.plus.degree() == self.minus.degree()
    }

    pub fn is_quadratic(&self) -> bool {
        self.plus.degree() == 2 && self.minus.degree() == 2
    }

    pub fn negate(self) -> Self {
        Binomial {
            plus: self.minus,
            minus: self.plus,
        }
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Vertex;

    #[test]
    fn text_format() {
        let m = |vs: &[(u32, u32)]| ExponentVector::product(vs.iter().map(|&(x, y)| Vertex::new(x, y)));
        let b = Binomial::new(m(&[(0, 1), (1, 0)]), m(&[(0, 0), (1, 1)])).unwrap();
        assert_eq!(b.to_string(), "x_0_1*x_1_0 - x_0_0*x_1_1");
        assert!(b.is_quadratic());
        assert!(Binomial::new(m(&[(0, 0)]), m(&[(0, 0)])).is_none());
        let p = Binomial::new(m(&[(2, 2), (2, 2), (0, 3)]), m(&[(1, 1)])).unwrap();
        assert_eq!(p.to_string(), "x_0_3*x_2_2^2 - x_1_1");
        assert!(!p.is_homogeneous());
    }
}
