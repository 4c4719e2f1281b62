use serde::{Deserialize, Serialize};

use crate::geometry::{Polyomino, Vertex};
use crate::lattice::LatticeBasis;
use crate::orders::{ExponentVector, MonomialOrder, OrderIndex, VertexOrder};

use super::binomial::check_cancellation;
use super::engine::GroebnerBasis;
use super::{buchberger, inner_2_minors, Binomial, GbError, GbOptions};

/// Reduced basis of `I : x_v`, where `x_v` is the smallest variable of the
/// grevlex order of `b` and the ideal is homogeneous.
pub fn colon_by_variable(b: &GroebnerBasis, v: Vertex) -> Result<GroebnerBasis, GbError> {
    if b.order().base().min() != v {
        return Err(GbError::OrderPreconditionViolated(v));
    }
    let xv = ExponentVector::var(v);
    let divided = b.elements().iter().map(|g| {
        // grevlex with x_v last: x_v | lead forces x_v | tail on homogeneous elements
        match (g.lead().checked_div(&xv), g.tail().checked_div(&xv)) {
            (Some(l), Some(t)) => {
                check_cancellation(&l.mul(&xv), g.lead());
                check_cancellation(&t.mul(&xv), g.tail());
                Binomial::new(l, t).expect("distinct monomials stay distinct")
            }
            (lead, _) => {
                debug_assert!(lead.is_none(), "x_v divides the lead of {g} but not its tail");
                g.clone()
            }
        }
    });
    Ok(GroebnerBasis::from_parts(b.order().clone(), divided.collect(), 0))
}

/// One vertex visit of [`saturate_all`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationStep {
    pub pass: usize,
    pub vertex: Vertex,
    /// Colon operations that enlarged the ideal at this vertex.
    pub growth: usize,
    /// Basis size under the rotated order after saturating at this vertex.
    pub basis_size: usize,
}

#[derive(Debug, Clone)]
pub struct Saturation {
    /// Reduced basis of `I_P : (∏ x_v)^∞` under `<^1`.
    pub basis: GroebnerBasis,
    pub transcript: Vec<SaturationStep>,
}

/// Saturates `I_P` at every vertex variable in turn, visiting vertices in
/// ascending `<^1` order, until a full pass changes nothing.
pub fn saturate_all(p: &Polyomino, opts: &GbOptions) -> Result<Saturation, GbError> {
    let o1 = OrderIndex::new(1).expect("1 is a valid index");
    let base = VertexOrder::for_polyomino(p, o1);
    let mut gens: Vec<Binomial> = inner_2_minors(p);
    let mut transcript = Vec::new();
    for pass in 1.. {
        let mut changed = false;
        for &v in base.vertices() {
            let order = MonomialOrder::new(base.rotate(v)?);
            let mut gb = buchberger(gens.iter().cloned(), &order, opts)?;
            let mut growth = 0;
            loop {
                let next = colon_by_variable(&gb, v)?;
                if next.elements() == gb.elements() {
                    break;
                }
                gb = next;
                growth += 1;
            }
            changed |= growth > 0;
            transcript.push(SaturationStep {
                pass,
                vertex: v,
                growth,
                basis_size: gb.len(),
            });
            gens = gb.elements().to_vec();
        }
        if !changed {
            break;
        }
    }
    let basis = buchberger(gens, &MonomialOrder::new(base), opts)?;
    Ok(Saturation { basis, transcript })
}

/// A binomial of the lattice ideal outside `I_P`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub binomial: Binomial,
    /// Its normal form modulo the reduced basis of `I_P` under `<^1`.
    pub normal_form: Binomial,
    /// Whether the exponent difference lies in the cell lattice.
    pub in_lattice: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PrimeReport {
    pub prime: bool,
    pub ideal_basis_size: usize,
    pub saturated_basis_size: usize,
    pub witness: Option<Witness>,
    pub transcript: Vec<SaturationStep>,
}

/// `I_P` is prime iff it equals its saturation by the product of all
/// variables; equality is decided on reduced bases under `<^1`.
pub fn is_prime(p: &Polyomino, opts: &GbOptions) -> Result<PrimeReport, GbError> {
    let o1 = MonomialOrder::for_polyomino(p, OrderIndex::new(1).expect("valid"));
    let ideal = buchberger(inner_2_minors(p), &o1, opts)?;
    let sat = saturate_all(p, opts)?;
    let prime = ideal.elements() == sat.basis.elements();
    let witness = if prime {
        None
    } else {
        let lattice = LatticeBasis::for_polyomino(p);
        sat.basis.elements().iter().find_map(|g| {
            ideal.normal_form(g).map(|nf| Witness {
                binomial: g.clone(),
                normal_form: nf,
                in_lattice: lattice.binomial_in_lattice_ideal(g).unwrap_or(false),
            })
        })
    };
    Ok(PrimeReport {
        prime,
        ideal_basis_size: ideal.len(),
        saturated_basis_size: sat.basis.len(),
        witness,
        transcript: sat.transcript,
    })
}
