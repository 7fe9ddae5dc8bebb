//! Integer utilities: squarefree kernels, quadratic field discriminants,
//! exact square roots and logarithms of big integers.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_prime::nt_funcs::{factors, is_prime};
use num_prime::{FactorizationConfig, Primality};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::ExactError;

/// Default trial-division bound for [`squarefree_part`].
pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

/// A nonzero squarefree integer. `1` names the rational field itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SquarefreeInt(BigInt);

impl SquarefreeInt {
    /// Checks squarefreeness with the default factoring bound.
    pub fn new(value: BigInt) -> Result<Self, ExactError> {
        let (s, f) = squarefree_part(&value)?;
        if f.is_one() {
            Ok(s)
        } else {
            Err(ExactError::NotSquarefree(value))
        }
    }

    pub fn from_i64(value: i64) -> Result<Self, ExactError> {
        Self::new(BigInt::from(value))
    }

    /// Product of two coprime squarefree integers, which is again squarefree.
    /// Coprimality is the caller's invariant and is only checked in debug builds.
    pub fn coprime_product(a: &Self, b: &Self) -> Self {
        debug_assert!(a.0.gcd(&b.0).is_one());
        SquarefreeInt(&a.0 * &b.0)
    }

    /// The rational field.
    pub fn one() -> Self {
        SquarefreeInt(BigInt::one())
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl fmt::Display for SquarefreeInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Writes `n = s·f²` with `s` squarefree carrying the sign of `n` and `f > 0`.
pub fn squarefree_part(n: &BigInt) -> Result<(SquarefreeInt, BigInt), ExactError> {
    squarefree_part_with_bound(n, DEFAULT_TRIAL_BOUND)
}

/// [`squarefree_part`] with an explicit trial-division bound.
///
/// Primes below `bound` are removed by trial division. A surviving cofactor
/// below `bound²` is prime. Larger cofactors are tested for primality and
/// split with Pollard rho; if that fails the call errors rather than guess.
pub fn squarefree_part_with_bound(
    n: &BigInt,
    bound: u64,
) -> Result<(SquarefreeInt, BigInt), ExactError> {
    if n.is_zero() {
        return Err(ExactError::ZeroInput("squarefree_part"));
    }
    let mut rest = n.magnitude().clone();
    let mut kernel = BigUint::one();
    let mut root = BigUint::one();

    let absorb = |p: &BigUint, e: usize, kernel: &mut BigUint, root: &mut BigUint| {
        for _ in 0..e / 2 {
            *root *= p;
        }
        if e % 2 == 1 {
            *kernel *= p;
        }
    };

    let mut p: u64 = 2;
    while p < bound {
        if let Some(small) = rest.to_u128() {
            // native loop once the remaining cofactor fits in a machine word
            let mut small = small;
            while p < bound && (p as u128) * (p as u128) <= small {
                let mut e = 0usize;
                while small % p as u128 == 0 {
                    small /= p as u128;
                    e += 1;
                }
                if e > 0 {
                    absorb(&BigUint::from(p), e, &mut kernel, &mut root);
                }
                p += if p == 2 { 1 } else { 2 };
            }
            rest = BigUint::from(small);
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0usize;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            absorb(&pb, e, &mut kernel, &mut root);
        }
        p += if p == 2 { 1 } else { 2 };
    }

    if !rest.is_one() {
        let b = BigUint::from(bound);
        if rest < &b * &b {
            // every prime below `bound` is gone, so the cofactor is prime
            kernel *= &rest;
        } else {
            for (prime, e) in split_cofactor(rest)? {
                absorb(&prime, e, &mut kernel, &mut root);
            }
        }
    }

    let sign = if n.is_negative() { Sign::Minus } else { Sign::Plus };
    Ok((
        SquarefreeInt(BigInt::from_biguint(sign, kernel)),
        BigInt::from_biguint(Sign::Plus, root),
    ))
}

fn split_cofactor(rest: BigUint) -> Result<Vec<(BigUint, usize)>, ExactError> {
    if let Some(r) = exact_sqrt_uint(&rest) {
        return Ok(split_cofactor(r)?
            .into_iter()
            .map(|(p, e)| (p, 2 * e))
            .collect());
    }
    if !matches!(is_prime(&rest, None), Primality::No) {
        return Ok(vec![(rest, 1)]);
    }
    let mut config = FactorizationConfig::default();
    config.rho_trials = 16;
    let (found, unfactored) = factors(rest.clone(), Some(config));
    if unfactored.is_some() {
        return Err(ExactError::CofactorUnfactored(BigInt::from(rest)));
    }
    Ok(found.into_iter().collect())
}

/// Absolute discriminant of ℚ(√d).
pub fn field_discriminant(d: &SquarefreeInt) -> BigInt {
    let v = d.value();
    if v.is_one() {
        return BigInt::one();
    }
    if v.mod_floor(&BigInt::from(4)).is_one() {
        v.clone()
    } else {
        v * 4
    }
}

/// [`field_discriminant`] for an unchecked integer; non-squarefree input is an error.
pub fn field_discriminant_of(d: &BigInt) -> Result<BigInt, ExactError> {
    Ok(field_discriminant(&SquarefreeInt::new(d.clone())?))
}

/// `Some(r)` with `r ≥ 0` and `r² = n` when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    exact_sqrt_uint(n.magnitude()).map(BigInt::from)
}

fn exact_sqrt_uint(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Nonnegative rational square root when one exists.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    let n = exact_sqrt(q.numer())?;
    let d = exact_sqrt(q.denom())?;
    Some(BigRational::new(n, d))
}

/// Natural logarithm of |n| for arbitrarily large `n`.
pub fn ln_abs_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        n.abs().to_f64().map(f64::ln).unwrap_or(f64::INFINITY)
    } else {
        let shift = bits - 64;
        let top = n.magnitude() >> shift;
        top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Natural logarithm of |q|.
pub fn ln_abs_rational(q: &BigRational) -> f64 {
    ln_abs_bigint(q.numer()) - ln_abs_bigint(q.denom())
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
