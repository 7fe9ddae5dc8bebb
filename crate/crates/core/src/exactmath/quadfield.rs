//! Elements `a + b√d` of a quadratic field ℚ(√d).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::integer::{ln_abs_rational, rational_sqrt, squarefree_part, SquarefreeInt};
use super::ExactError;

/// `a + b√d` with rational `a`, `b`.
///
/// Elements with `b = 0` are compatible with every field tag: arithmetic
/// between a rational element tagged `1` and an element of ℚ(√d) yields an
/// element of ℚ(√d). Mixing two different nontrivial tags panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadFieldElement {
    d: SquarefreeInt,
    a: BigRational,
    b: BigRational,
}

impl QuadFieldElement {
    pub fn new(d: SquarefreeInt, a: BigRational, b: BigRational) -> Self {
        if d.is_one() {
            return QuadFieldElement {
                d,
                a: a + b,
                b: BigRational::zero(),
            };
        }
        QuadFieldElement { d, a, b }
    }

    /// A rational number viewed inside ℚ(√d).
    pub fn rational_in(d: &SquarefreeInt, a: BigRational) -> Self {
        QuadFieldElement {
            d: d.clone(),
            a,
            b: BigRational::zero(),
        }
    }

    pub fn rational(a: BigRational) -> Self {
        Self::rational_in(&SquarefreeInt::one(), a)
    }

    /// `√d` itself.
    pub fn sqrt_d(d: &SquarefreeInt) -> Self {
        Self::new(d.clone(), BigRational::zero(), BigRational::one())
    }

    /// The root `(−b + √(b² − 4ac)) / 2a` of `ax² + bx + c`, in its natural field.
    pub fn root_of_quadratic(a: &BigInt, b: &BigInt, c: &BigInt) -> Result<Self, ExactError> {
        if a.is_zero() {
            return Err(ExactError::InvalidInput("leading coefficient is zero".into()));
        }
        let disc: BigInt = b * b - a * c * 4;
        let two_a: BigInt = a * 2;
        let re = BigRational::new(-b, two_a.clone());
        if disc.is_zero() {
            return Ok(Self::rational(re));
        }
        let (s, f) = squarefree_part(&disc)?;
        Ok(Self::new(s, re, BigRational::new(f, two_a)))
    }

    pub fn d(&self) -> &SquarefreeInt {
        &self.d
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadFieldElement {
            d: self.d.clone(),
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - self.d_rat() * &self.b * &self.b
    }

    pub fn trace(&self) -> BigRational {
        &self.a * BigRational::from_integer(2.into())
    }

    /// Re-tags the element into ℚ(√d); fails if it already lives in another field.
    pub fn in_field(&self, d: &SquarefreeInt) -> Result<Self, ExactError> {
        if self.d == *d || self.b.is_zero() {
            Ok(QuadFieldElement {
                d: d.clone(),
                a: self.a.clone(),
                b: self.b.clone(),
            })
        } else {
            Err(ExactError::FieldMismatch(self.d.clone(), d.clone()))
        }
    }

    fn d_rat(&self) -> BigRational {
        BigRational::from_integer(self.d.value().clone())
    }

    fn joint_tag(&self, other: &Self) -> SquarefreeInt {
        if self.d == other.d {
            return self.d.clone();
        }
        match (self.d.is_one() || self.b.is_zero(), other.d.is_one() || other.b.is_zero()) {
            (_, _) if self.d.is_one() => other.d.clone(),
            (_, _) if other.d.is_one() => self.d.clone(),
            (true, true) => std::cmp::max(self.d.clone(), other.d.clone()),
            (true, false) => other.d.clone(),
            (false, true) => self.d.clone(),
            (false, false) => panic!(
                "arithmetic between Q(sqrt({})) and Q(sqrt({}))",
                self.d, other.d
            ),
        }
    }

    /// Exact square root inside the field, if one exists.
    ///
    /// For `x = p + q√d` we have `x² = (p² + dq²) + 2pq√d` and `N(x²) = N(x)²`,
    /// so `N(v)` must be a rational square `n²` and `p² = (a ± n)/2`.
    pub fn sqrt(&self) -> Option<Self> {
        if self.b.is_zero() {
            if let Some(r) = rational_sqrt(&self.a) {
                return Some(Self::rational_in(&self.d, r));
            }
            if self.d.is_one() {
                return None;
            }
            // a = d·q² gives (q√d)² = a
            let q2 = &self.a / self.d_rat();
            return rational_sqrt(&q2)
                .map(|q| Self::new(self.d.clone(), BigRational::zero(), q));
        }
        let n = rational_sqrt(&self.norm())?;
        let half = BigRational::new(1.into(), 2.into());
        for cand in [(&self.a + &n) * &half, (&self.a - &n) * &half] {
            if cand.is_zero() {
                continue;
            }
            if let Some(p) = rational_sqrt(&cand) {
                let q = &self.b / (&p * BigRational::from_integer(2.into()));
                let root = Self::new(self.d.clone(), p, q);
                if root.square() == *self {
                    return Some(root);
                }
            }
        }
        None
    }

    pub fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }

    /// `ln |σ(x)|` for the real embedding sending `√d` to `sign·√|d|`, `d > 0`.
    ///
    /// Avoids cancellation: when `a` and `b√d` have opposite signs the value
    /// is computed as `ln |N(x)| − ln(|a| + |b|√d)`.
    pub fn ln_abs_real_embedding(&self, sign: i8) -> f64 {
        assert!(!self.d.is_negative(), "real embedding of an imaginary field");
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let b = if sign < 0 { -self.b.clone() } else { self.b.clone() };
        let ln_a = ln_abs_rational(&self.a);
        let ln_bd = ln_abs_rational(&b) + 0.5 * super::integer::ln_abs_bigint(self.d.value());
        if self.a.is_zero() {
            return ln_bd;
        }
        if b.is_zero() {
            return ln_a;
        }
        let ln_sum = log_add_exp(ln_a, ln_bd);
        if self.a.is_positive() == b.is_positive() {
            ln_sum
        } else {
            ln_abs_rational(&self.norm()) - ln_sum
        }
    }

    /// `ln |σ(x)|` for the complex place of an imaginary quadratic field.
    pub fn ln_abs_complex_embedding(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        0.5 * ln_abs_rational(&self.norm())
    }
}

fn log_add_exp(x: f64, y: f64) -> f64 {
    let (hi, lo) = if x >= y { (x, y) } else { (y, x) };
    hi + (lo - hi).exp().ln_1p()
}

impl Zero for QuadFieldElement {
    fn zero() -> Self {
        Self::rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadFieldElement {
    fn one() -> Self {
        Self::rational(BigRational::one())
    }
}

impl Add for QuadFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = self.joint_tag(&rhs);
        QuadFieldElement::new(d, self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for QuadFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let d = self.joint_tag(&rhs);
        QuadFieldElement::new(d, self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for QuadFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        QuadFieldElement {
            d: self.d,
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Mul for QuadFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = self.joint_tag(&rhs);
        let dr = BigRational::from_integer(d.value().clone());
        let a = &self.a * &rhs.a + dr * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadFieldElement::new(d, a, b)
    }
}

impl Div for QuadFieldElement {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in quadratic field");
        let num = self * rhs.conj();
        QuadFieldElement {
            d: num.d.clone(),
            a: num.a / &n,
            b: num.b / n,
        }
    }
}

impl Field for QuadFieldElement {
    fn from_rational(q: &BigRational) -> Self {
        Self::rational(q.clone())
    }
}

impl PartialOrd for QuadFieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on `(a, b, d)`; used only for canonical representatives.
impl Ord for QuadFieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.a
            .cmp(&other.a)
            .then_with(|| self.b.cmp(&other.b))
            .then_with(|| self.d.cmp(&other.d))
    }
}

impl fmt::Display for QuadFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sqrt = format!("sqrt({})", self.d);
        let b = if self.b.is_one() {
            sqrt
        } else if (-self.b.clone()).is_one() {
            format!("-{sqrt}")
        } else {
            format!("{}*{sqrt}", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{b}")
        } else if b.starts_with('-') {
            write!(f, "{}{b}", self.a)
        } else {
            write!(f, "{}+{b}", self.a)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::{rat, ratio};

    fn qf(d: i64, a: BigRational, b: BigRational) -> QuadFieldElement {
        QuadFieldElement::new(SquarefreeInt::from_i64(d).unwrap(), a, b)
    }

    #[test]
    fn norm_examples() {
        assert_eq!(qf(2, rat(1), rat(1)).norm(), rat(-1));
        assert_eq!(qf(5, rat(3), rat(0)).norm(), rat(9));
        let golden = qf(5, ratio(1, 2), ratio(1, 2));
        assert_eq!(golden.norm(), rat(-1));
        // N(x) = x · conj(x)
        let prod = golden.clone() * golden.conj();
        assert!(prod.is_rational());
        assert_eq!(prod.a(), &rat(-1));
    }

    #[test]
    fn d_one_folds_into_rational_part() {
        let x = qf(1, rat(2), rat(3));
        assert_eq!(x.a(), &rat(5));
        assert!(x.b().is_zero());
    }

    #[test]
    fn division_inverts_multiplication() {
        let x = qf(-7, ratio(3, 4), rat(2));
        let y = qf(-7, rat(-1), ratio(1, 3));
        assert_eq!((x.clone() * y.clone()) / y, x);
    }

    #[test]
    fn rational_elements_join_any_field() {
        let x = qf(3, rat(1), rat(1));
        let s = x.clone() + QuadFieldElement::one();
        assert_eq!(s.d().value(), &BigInt::from(3));
        assert_eq!(s.a(), &rat(2));
    }

    #[test]
    #[should_panic]
    fn mixing_fields_panics() {
        let _ = qf(2, rat(0), rat(1)) + qf(3, rat(0), rat(1));
    }

    #[test]
    fn square_roots() {
        let d = SquarefreeInt::from_i64(2).unwrap();
        // (1 + √2)² = 3 + 2√2
        let v = QuadFieldElement::new(d.clone(), rat(3), rat(2));
        let r = v.sqrt().unwrap();
        assert_eq!(r.square(), v);
        // 9 is a square, 28 is not a square in Q(√3)
        assert!(QuadFieldElement::rational_in(&d, rat(9)).is_square());
        let d3 = SquarefreeInt::from_i64(3).unwrap();
        assert!(!QuadFieldElement::rational_in(&d3, rat(28)).is_square());
        // 3 = (√3)² inside Q(√3)
        assert!(QuadFieldElement::rational_in(&d3, rat(3)).is_square());
        // √2 itself is not a square in Q(√2)
        assert!(!QuadFieldElement::sqrt_d(&d).is_square());
    }

    #[test]
    fn embeddings_without_cancellation() {
        // 1 - √2 has |σ| = √2 - 1
        let x = qf(2, rat(1), rat(-1));
        let expect = (2f64.sqrt() - 1.0).ln();
        assert!((x.ln_abs_real_embedding(1) - expect).abs() < 1e-14);
        assert!((x.ln_abs_real_embedding(-1) - (1.0 + 2f64.sqrt()).ln()).abs() < 1e-14);
        let z = qf(-1, rat(3), rat(4));
        assert!((z.ln_abs_complex_embedding() - 5f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn roots_of_quadratics() {
        let g = QuadFieldElement::root_of_quadratic(&1.into(), &(-1).into(), &(-1).into()).unwrap();
        assert_eq!(g, qf(5, ratio(1, 2), ratio(1, 2)));
        let r = QuadFieldElement::root_of_quadratic(&1.into(), &0.into(), &(-8).into()).unwrap();
        assert_eq!(r, qf(2, rat(0), rat(2)));
    }

    #[test]
    fn display() {
        assert_eq!(qf(5, ratio(1, 2), ratio(1, 2)).to_string(), "1/2+1/2*sqrt(5)");
        assert_eq!(qf(2, rat(0), rat(-1)).to_string(), "-sqrt(2)");
        assert_eq!(qf(2, rat(3), rat(0)).to_string(), "3");
    }
}
