//! The rational function field `F(t)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{Embeds, Field};
use super::poly::Polynomial;
use super::ExactError;

/// `num / den` with `gcd(num, den) = 1` and `den` monic. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<F> {
    num: Polynomial<F>,
    den: Polynomial<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: Polynomial<F>, den: Polynomial<F>) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Polynomial<F>, den: Polynomial<F>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let lead = den.leading().cloned().unwrap();
        if !lead.is_one() {
            let inv = F::one() / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: Polynomial<F>) -> Self {
        RatFunc {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    /// The transcendental `t`.
    pub fn t() -> Self {
        Self::from_poly(Polynomial::x())
    }

    pub fn numer(&self) -> &Polynomial<F> {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `Some(c)` when the function is the constant `c`.
    pub fn as_constant(&self) -> Option<F> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    /// Value at `t₀`; a vanishing denominator is reported as a pole.
    pub fn eval(&self, t0: &F) -> Result<F, ExactError> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            return Err(ExactError::Pole);
        }
        Ok(self.num.eval(t0) / d)
    }

    /// Degree of the numerator and the denominator, the usual height proxy.
    pub fn degrees(&self) -> (usize, usize) {
        (
            self.num.degree().unwrap_or(0),
            self.den.degree().unwrap_or(0),
        )
    }

    /// Substitutes `t ↦ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        let num = eval_poly_at(&self.num, inner);
        let den = eval_poly_at(&self.den, inner);
        num / den
    }
}

fn eval_poly_at<F: Field>(p: &Polynomial<F>, x: &RatFunc<F>) -> RatFunc<F> {
    p.coeffs()
        .iter()
        .rev()
        .fold(RatFunc::zero(), |acc, c| acc * x.clone() + RatFunc::constant(c.clone()))
}

impl RatFunc<BigRational> {
    /// Exact square root in ℚ(t), if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        Some(RatFunc {
            num: self.num.sqrt()?,
            den: self.den.sqrt()?,
        })
    }
}

impl<F: Field> Zero for RatFunc<F> {
    fn zero() -> Self {
        RatFunc {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RatFunc<F> {
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
}

impl<F: Field> Add for RatFunc<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::reduced(self.num + rhs.num, self.den);
        }
        Self::reduced(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl<F: Field> Sub for RatFunc<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Neg for RatFunc<F> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<F: Field> Mul for RatFunc<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        // cross-cancel first to keep intermediate degrees small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.exact_div(&g1).unwrap();
        let d = rhs.den.exact_div(&g1).unwrap();
        let c = rhs.num.exact_div(&g2).unwrap();
        let b = self.den.exact_div(&g2).unwrap();
        Self::reduced(a * c, b * d)
    }
}

impl<F: Field> Div for RatFunc<F> {
    type Output = Self;
    /// Panics on division by the zero function; use [`Field::checked_inv`] to avoid it.
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by the zero function");
        let inv = RatFunc {
            num: rhs.den,
            den: rhs.num,
        };
        self * inv
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn from_rational(q: &BigRational) -> Self {
        Self::constant(F::from_rational(q))
    }
}

impl<F: Field> Embeds<F> for RatFunc<F>
where
    RatFunc<F>: Field,
{
    fn embed(k: &F) -> Self {
        Self::constant(k.clone())
    }
}

/// One arithmetic operation of ℚ(t), failing only on division by zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RfOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rf_arith<F: Field>(a: &RatFunc<F>, b: &RatFunc<F>, op: RfOp) -> Result<RatFunc<F>, ExactError> {
    let (a, b) = (a.clone(), b.clone());
    Ok(match op {
        RfOp::Add => a + b,
        RfOp::Sub => a - b,
        RfOp::Mul => a * b,
        RfOp::Div => {
            if b.is_zero() {
                return Err(ExactError::DivisionByZero);
            }
            a / b
        }
    })
}

impl<F: Field + fmt::Display> RatFunc<F> {
    pub fn display_with(&self, var: &str) -> String {
        let n = self.num.display_with(var);
        if self.den.is_one() {
            return n;
        }
        let wrap = |s: String, p: &Polynomial<F>| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!(
            "{}/{}",
            wrap(n, &self.num),
            wrap(self.den.display_with(var), &self.den)
        )
    }
}

impl<F: Field + fmt::Display> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}
