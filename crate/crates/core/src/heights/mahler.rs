use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::exactmath::integer::{exact_sqrt, ln_abs_bigint};
use crate::exactmath::QuadFieldElement;

use super::{primitive_integer_vector, HeightError, HeightValue};

/// `(1/deg)·log M(f)` for an irreducible primitive `f ∈ ℤ[x]` of degree one or two.
///
/// `coeffs` is ascending: `[c, b, a]` means `a x² + b x + c`.
pub fn mahler_height(coeffs: &[BigInt]) -> Result<HeightValue, HeightError> {
    let mut f: Vec<BigInt> = coeffs.to_vec();
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    if f.is_empty() {
        return Err(HeightError::ZeroPolynomial);
    }
    let deg = f.len() - 1;
    if !(1..=2).contains(&deg) {
        return Err(HeightError::UnsupportedDegree(deg));
    }
    let content = f.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if content != BigInt::from(1) {
        return Err(HeightError::NotPrimitive);
    }
    if deg == 1 {
        let m = f[0].abs().max(f[1].abs());
        return Ok(HeightValue::new(ln_abs_bigint(&m)));
    }

    let (c, b, a) = (&f[0], &f[1], &f[2]);
    let disc: BigInt = b * b - a * c * 4;
    if c.is_zero() || exact_sqrt(&disc).is_some() {
        return Err(HeightError::Reducible);
    }
    let ln_a = ln_abs_bigint(a);
    let ln_c = ln_abs_bigint(c);
    let ln_m = if disc.is_negative() {
        // conjugate roots with |r|² = c/a
        ln_a.max(ln_c)
    } else if b.is_zero() {
        // ±√(−c/a)
        let ln_r = 0.5 * (ln_c - ln_a);
        ln_a + 2.0 * ln_r.max(0.0)
    } else {
        // larger root without cancellation, the other from r₁r₂ = c/a
        let sqrt_disc = ln_abs_bigint(&disc) * 0.5;
        let ln_b = ln_abs_bigint(b);
        let hi = ln_b.max(sqrt_disc);
        let ln_sum = hi + ((ln_b - hi).exp() + (sqrt_disc - hi).exp()).ln();
        let ln_r1 = ln_sum - std::f64::consts::LN_2 - ln_a;
        let ln_r2 = ln_c - ln_a - ln_r1;
        ln_a + ln_r1.max(0.0) + ln_r2.max(0.0)
    };
    Ok(HeightValue::new(ln_m / deg as f64))
}

/// Primitive minimal polynomial over ℤ, ascending, positive leading coefficient.
pub fn minimal_polynomial(alpha: &QuadFieldElement) -> Vec<BigInt> {
    if alpha.is_rational() {
        return primitive_integer_vector(&[-alpha.a().clone(), num_rational::BigRational::from_integer(1.into())]);
    }
    let one = num_rational::BigRational::from_integer(1.into());
    primitive_integer_vector(&[alpha.norm(), -alpha.trace(), one])
}
