use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::covers::CyclicCoverModel;
use crate::exactmath::integer::squarefree_part;
use crate::exactmath::{Field, QuadFieldElement, SquarefreeInt};
use crate::heights::ProjectivePoint;

use super::EllError;

/// A point of `w² = s(x, y, z)` over `[t₀ : 1 : √u₀]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftedPoint {
    pub base: ProjectivePoint,
    pub w: QuadFieldElement,
    pub field_d: SquarefreeInt,
    pub is_rational: bool,
    /// Residue field of the lift strictly larger than that of the base.
    pub is_contracted_by_pi: bool,
    /// `w² = s(x, y, z)` holds exactly in ℚ(√d).
    pub verified: bool,
}

/// Lifts `(u₀, v₀)` on the fiber `v² = s(t₀, 1, √u)` to the cover.
pub fn lift_to_quadratic_point(
    c: &CyclicCoverModel,
    t0: &BigRational,
    u0: &BigRational,
    v0: &BigRational,
) -> Result<LiftedPoint, EllError> {
    if c.r() != 2 || c.e() != 2 || !c.s().is_even_in(2) {
        return Err(EllError::Unsupported("lifting needs a double cover of P^2 even in z".into()));
    }
    if u0.is_zero() {
        return Err(EllError::RamifiedDirection);
    }
    // numerator and denominator are coprime, so their kernels multiply to a squarefree integer
    let (dn, _) = squarefree_part(u0.numer())?;
    let (dd, _) = squarefree_part(u0.denom())?;
    let d = SquarefreeInt::coprime_product(&dn, &dd);
    let z = QuadFieldElement::rational_in(&d, u0.clone())
        .sqrt()
        .expect("u0 is a square in Q(sqrt(kernel of u0))");
    let coords = vec![
        QuadFieldElement::rational_in(&d, t0.clone()),
        QuadFieldElement::rational_in(&d, BigRational::one()),
        z,
    ];
    let w = QuadFieldElement::rational_in(&d, v0.clone());
    let value: QuadFieldElement = c.s().eval(&coords);
    if w.square() != value {
        return Err(EllError::NotOnFiber);
    }
    let base = ProjectivePoint::new_in(&d, coords)?;
    let is_contracted_by_pi = base.is_rational() && !w.is_rational();
    Ok(LiftedPoint {
        is_rational: d.is_one(),
        field_d: d,
        base,
        w,
        is_contracted_by_pi,
        verified: true,
    })
}
