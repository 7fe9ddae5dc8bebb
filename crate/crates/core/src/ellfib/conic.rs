use crate::exactmath::{Embeds, Field, RatFunc};

use super::EllError;

/// Lines of slope `m(λ)` through a base point of `v² = u² + c`; `λ = 0`
/// returns the base point.
#[derive(Clone, Debug, PartialEq)]
pub struct ConicParametrization<F> {
    pub c: F,
    pub u0: F,
    pub v0: F,
}

pub fn conic_parametrize<F: Field>(c: F, u0: F, v0: F) -> Result<ConicParametrization<F>, EllError> {
    if c.is_zero() {
        return Err(EllError::DegenerateConic);
    }
    if v0.square() != u0.square() + c.clone() {
        return Err(EllError::NotOnCurve);
    }
    Ok(ConicParametrization { c, u0, v0 })
}

impl<F: Field> ConicParametrization<F> {
    /// Second intersection of the conic with the line of slope
    /// `u₀/v₀ + λ` (or `1/λ` when `v₀ = 0`); a pole at the asymptotic slopes.
    pub fn at<G: Embeds<F>>(&self, lambda: &G) -> Result<(G, G), EllError> {
        let (u0, v0) = (G::embed(&self.u0), G::embed(&self.v0));
        let one = G::one();
        let two = G::from_i64(2);
        if v0.is_zero() {
            let den = (one - lambda.square()).checked_inv().ok_or(EllError::ConicPole)?;
            let s = two.clone() * u0.clone() * lambda.square() * den.clone();
            let v = two * u0.clone() * lambda.clone() * den;
            return Ok((u0 + s, v));
        }
        let m = u0.clone() / v0.clone() + lambda.clone();
        let den = (m.square() - one).checked_inv().ok_or(EllError::ConicPole)?;
        let s = -(two * lambda.clone() * v0.clone()) * den;
        Ok((u0 + s.clone(), v0 + m * s))
    }

    /// Substitutes a transcendental `λ` and checks the conic equation and the
    /// base point as identities.
    pub fn verify_identity(&self) -> bool {
        let lambda = RatFunc::<F>::t();
        let Ok((u, v)) = self.at(&lambda) else {
            return false;
        };
        let c = RatFunc::constant(self.c.clone());
        let base = self.at(&F::zero());
        v.square() == u.square() + c && base == Ok((self.u0.clone(), self.v0.clone()))
    }
}
