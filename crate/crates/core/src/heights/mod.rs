//! Absolute logarithmic Weil heights, logarithmic discriminants and the
//! Mahler-measure cross-check for points of degree at most two.
//!
//! All real quantities are natural logarithms stored as `f64`. Inequalities
//! are decided with [`TOLERANCE`] added on the permissive side and flagged
//! marginal when within [`MARGINAL_BAND`] of the boundary.

mod mahler;
mod point;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactmath::integer::{ln_abs_bigint, ln_abs_rational};
use crate::exactmath::{field_discriminant, module_norm_hnf, ExactError, QuadFieldElement};

pub use mahler::{mahler_height, minimal_polynomial};
pub use point::ProjectivePoint;

pub const TOLERANCE: f64 = 1e-9;
pub const MARGINAL_BAND: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HeightError {
    #[error("all coordinates are zero")]
    AllZero,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial degree {0} outside 1..=2")]
    UnsupportedDegree(usize),
    #[error("polynomial content is not one")]
    NotPrimitive,
    #[error("polynomial is reducible over Q")]
    Reducible,
    #[error("point is rational; the inequality needs a quadratic point")]
    RationalPoint,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A logarithmic height together with the tolerance used to compare it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HeightValue {
    pub value: f64,
    pub tolerance: f64,
}

impl HeightValue {
    pub fn new(value: f64) -> Self {
        HeightValue {
            value,
            tolerance: TOLERANCE,
        }
    }

    /// `value ≤ bound` up to tolerance.
    pub fn at_most(&self, bound: f64) -> bool {
        self.value <= bound + self.tolerance
    }

    pub fn approx_eq(&self, other: f64) -> bool {
        (self.value - other).abs() <= self.tolerance
    }
}

/// Absolute discriminant of the residue field and its normalized logarithm.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscriminantValue {
    pub disc: BigInt,
    pub log_value: f64,
    pub degree: u32,
}

/// Absolute logarithmic Weil height.
///
/// Rational points use coprime integer coordinates. Over ℚ(√d) the
/// archimedean part sums `log max|σ(xᵢ)|` over both real embeddings, or
/// twice the single complex place; the finite part is `−log N(x₀,…,x_r)`;
/// the total is divided by the degree two.
pub fn weil_height(p: &ProjectivePoint) -> HeightValue {
    if let Some(ints) = p.integer_coords() {
        let m = ints.iter().map(ln_abs_bigint).fold(f64::NEG_INFINITY, f64::max);
        return HeightValue::new(m);
    }
    let coords = p.coords();
    let arch = if p.d().is_negative() {
        2.0 * max_over(coords, QuadFieldElement::ln_abs_complex_embedding)
    } else {
        max_over(coords, |c| c.ln_abs_real_embedding(1))
            + max_over(coords, |c| c.ln_abs_real_embedding(-1))
    };
    let norm = module_norm_hnf(coords).expect("point has a nonzero coordinate");
    HeightValue::new(0.5 * (arch - ln_abs_rational(&norm)))
}

fn max_over(coords: &[QuadFieldElement], f: impl Fn(&QuadFieldElement) -> f64) -> f64 {
    coords
        .iter()
        .filter(|c| !c.is_zero())
        .map(f)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// `log |D| / [k(P):ℚ]` for the residue field of `P`.
pub fn log_disc(p: &ProjectivePoint) -> DiscriminantValue {
    if p.is_rational() {
        return DiscriminantValue {
            disc: BigInt::one(),
            log_value: 0.0,
            degree: 1,
        };
    }
    let disc = field_discriminant(p.d());
    let log_value = ln_abs_bigint(&disc) / 2.0;
    DiscriminantValue {
        disc,
        log_value,
        degree: 2,
    }
}

/// Outcome of the height–discriminant inequality `d ≤ 2h + log 2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SilvermanOutcome {
    pub holds: bool,
    pub slack: f64,
    pub marginal: bool,
}

/// Checks `d_ℚ(P) ≤ 2·h(P) + log 2` for a quadratic point.
pub fn silverman_check(p: &ProjectivePoint) -> Result<SilvermanOutcome, HeightError> {
    if p.is_rational() {
        return Err(HeightError::RationalPoint);
    }
    let h = weil_height(p).value;
    let d = log_disc(p).log_value;
    let slack = 2.0 * h + std::f64::consts::LN_2 - d;
    Ok(SilvermanOutcome {
        holds: slack >= -TOLERANCE,
        slack,
        marginal: slack.abs() < MARGINAL_BAND,
    })
}

/// Largest integer `M` with `log M ≤ H`.
pub fn height_bound_multiplicative(h: f64) -> BigInt {
    // floor(e^H) with a guard against log rounding just below an integer
    let m = (h + TOLERANCE).exp().floor();
    BigInt::from(m as i64)
}

/// Primitive integer vector proportional to `qs`, last nonzero entry positive.
pub fn primitive_integer_vector(qs: &[BigRational]) -> Vec<BigInt> {
    let lcm = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = qs
        .iter()
        .map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = if ints.iter().rev().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|x| x * &sign / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio, SquarefreeInt};

    fn surd(d: i64, a: BigRational, b: BigRational) -> QuadFieldElement {
        QuadFieldElement::new(SquarefreeInt::from_i64(d).unwrap(), a, b)
    }

    fn affine(x: QuadFieldElement) -> ProjectivePoint {
        ProjectivePoint::new(vec![x, QuadFieldElement::one()]).unwrap()
    }

    #[test]
    fn rational_heights() {
        assert!(weil_height(&ProjectivePoint::from_ints(&[1, 1, 0]).unwrap()).approx_eq(0.0));
        assert!(weil_height(&ProjectivePoint::from_ints(&[2, 4, 6]).unwrap()).approx_eq(3f64.ln()));
    }

    #[test]
    fn quadratic_heights() {
        let p = affine(surd(2, rat(0), rat(1)));
        assert!(weil_height(&p).approx_eq(0.5 * 2f64.ln()));
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let g = affine(surd(5, ratio(1, 2), ratio(1, 2)));
        assert!(weil_height(&g).approx_eq(0.5 * phi.ln()));
        // i has height zero
        assert!(weil_height(&affine(surd(-1, rat(0), rat(1)))).approx_eq(0.0));
        // (1+i)/2 is a root of 2x² − 2x + 1, M = 2
        assert!(weil_height(&affine(surd(-1, ratio(1, 2), ratio(1, 2)))).approx_eq(0.5 * 2f64.ln()));
    }

    #[test]
    fn discriminants() {
        assert_eq!(log_disc(&ProjectivePoint::from_ints(&[3, 5]).unwrap()).disc, BigInt::from(1));
        let p = log_disc(&affine(surd(2, rat(0), rat(1))));
        assert_eq!(p.disc, BigInt::from(8));
        assert!((p.log_value - 0.5 * 8f64.ln()).abs() < 1e-12);
        let g = log_disc(&affine(surd(5, ratio(1, 2), ratio(1, 2))));
        assert_eq!(g.disc, BigInt::from(5));
    }

    #[test]
    fn silverman_examples() {
        let s2 = silverman_check(&affine(surd(2, rat(0), rat(1)))).unwrap();
        assert!(s2.holds);
        assert!((s2.slack - 0.5 * 2f64.ln()).abs() < 1e-12);
        let s10 = silverman_check(&affine(surd(10, rat(0), rat(1)))).unwrap();
        assert!((s10.slack - 0.5 * 10f64.ln()).abs() < 1e-12);
        assert!(silverman_check(&affine(surd(5, ratio(1, 2), ratio(1, 2)))).unwrap().holds);
        assert_eq!(
            silverman_check(&ProjectivePoint::from_ints(&[1, 2]).unwrap()),
            Err(HeightError::RationalPoint)
        );
    }

    #[test]
    fn multiplicative_bound_rounding() {
        assert_eq!(height_bound_multiplicative(5f64.ln()), BigInt::from(5));
        assert_eq!(height_bound_multiplicative(0.0), BigInt::from(1));
    }
}
