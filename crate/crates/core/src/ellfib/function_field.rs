//! Function field `K(x)[y]/(y² + h(x)·y − f(x))` of a plane curve, used to
//! verify coordinate changes as identities of rational functions.

use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactmath::{Embeds, Field, Polynomial, RatFunc};

#[derive(Clone, Debug, PartialEq)]
pub struct CurveEquation<F> {
    pub h: Polynomial<F>,
    pub f: Polynomial<F>,
}

/// `a + b·y` with `a, b ∈ K(x)`. Elements built without a curve are
/// constants of `K(x)` and may be combined with any curve.
#[derive(Clone, Debug)]
pub struct CurveFunction<F> {
    curve: Option<Arc<CurveEquation<F>>>,
    a: RatFunc<F>,
    b: RatFunc<F>,
}

impl<F: Field> CurveFunction<F> {
    /// The generic point `(x, y)` of the curve.
    pub fn generic_point(h: Polynomial<F>, f: Polynomial<F>) -> (Self, Self) {
        let curve = Some(Arc::new(CurveEquation { h, f }));
        let x = CurveFunction {
            curve: curve.clone(),
            a: RatFunc::t(),
            b: RatFunc::zero(),
        };
        let y = CurveFunction {
            curve,
            a: RatFunc::zero(),
            b: RatFunc::one(),
        };
        (x, y)
    }

    pub fn parts(&self) -> (&RatFunc<F>, &RatFunc<F>) {
        (&self.a, &self.b)
    }

    fn scalar(a: RatFunc<F>) -> Self {
        CurveFunction {
            curve: None,
            a,
            b: RatFunc::zero(),
        }
    }

    fn join(&self, other: &Self) -> Option<Arc<CurveEquation<F>>> {
        match (&self.curve, &other.curve) {
            (Some(c), Some(d)) => {
                assert!(Arc::ptr_eq(c, d) || c == d, "elements of different function fields");
                Some(c.clone())
            }
            (c, d) => c.clone().or_else(|| d.clone()),
        }
    }

    fn eq_parts(curve: &CurveEquation<F>) -> (RatFunc<F>, RatFunc<F>) {
        (RatFunc::from_poly(curve.h.clone()), RatFunc::from_poly(curve.f.clone()))
    }
}

impl<F: Field> PartialEq for CurveFunction<F> {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl<F: Field> Zero for CurveFunction<F> {
    fn zero() -> Self {
        Self::scalar(RatFunc::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<F: Field> One for CurveFunction<F> {
    fn one() -> Self {
        Self::scalar(RatFunc::one())
    }
}

impl<F: Field> Add for CurveFunction<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        CurveFunction {
            curve: self.join(&rhs),
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl<F: Field> Sub for CurveFunction<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Neg for CurveFunction<F> {
    type Output = Self;
    fn neg(self) -> Self {
        CurveFunction {
            curve: self.curve,
            a: -self.a,
            b: -self.b,
        }
    }
}

impl<F: Field> Mul for CurveFunction<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let curve = self.join(&rhs);
        let (a1, b1, a2, b2) = (self.a, self.b, rhs.a, rhs.b);
        if b1.is_zero() || b2.is_zero() {
            return CurveFunction {
                curve,
                a: a1.clone() * a2.clone(),
                b: a1 * b2 + a2 * b1,
            };
        }
        // y² = f − h·y
        let (h, f) = Self::eq_parts(curve.as_deref().expect("y without a curve"));
        let bb = b1.clone() * b2.clone();
        CurveFunction {
            curve,
            a: a1.clone() * a2.clone() + bb.clone() * f,
            b: a1 * b2 + a2 * b1 - bb * h,
        }
    }
}

impl<F: Field> Div for CurveFunction<F> {
    type Output = Self;
    /// Panics on division by zero.
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero in a function field");
        if rhs.b.is_zero() {
            let curve = self.join(&rhs);
            return CurveFunction {
                curve,
                a: self.a / rhs.a.clone(),
                b: self.b / rhs.a,
            };
        }
        let curve = self.join(&rhs);
        let (h, f) = Self::eq_parts(curve.as_deref().expect("y without a curve"));
        let (a, b) = (rhs.a, rhs.b);
        // (a + b·y)(a − b·h − b·y) = a² − a·b·h − b²·f
        let norm = a.clone() * a.clone() - a.clone() * b.clone() * h.clone() - b.clone() * b.clone() * f;
        let conj = CurveFunction {
            curve: curve.clone(),
            a: (a - b.clone() * h) / norm.clone(),
            b: -b / norm,
        };
        self * conj
    }
}

impl<F: Field> Field for CurveFunction<F> {
    fn from_rational(q: &BigRational) -> Self {
        Self::scalar(RatFunc::from_rational(q))
    }
}

impl<F: Field> Embeds<F> for CurveFunction<F> {
    fn embed(k: &F) -> Self {
        Self::scalar(RatFunc::constant(k.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn arithmetic_respects_the_curve() {
        // y² + x·y = x³ + 1
        let h = Polynomial::from_i64s(&[0, 1]);
        let f = Polynomial::from_i64s(&[1, 0, 0, 1]);
        let (x, y) = CurveFunction::<BigRational>::generic_point(h, f);
        let lhs = y.clone() * y.clone() + x.clone() * y.clone();
        let rhs = x.clone() * x.clone() * x.clone() + CurveFunction::one();
        assert_eq!(lhs, rhs);
        let z = y.clone() + x.clone() * CurveFunction::embed(&rat(3));
        assert_eq!((z.clone() / z.clone()), CurveFunction::one());
        assert_eq!((y.clone() / z.clone()) * z, y);
    }
}
