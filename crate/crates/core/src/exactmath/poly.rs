//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::Field;
use super::integer::rational_sqrt;
use super::ExactError;

/// Coefficients in ascending degree; the last stored coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    /// `c·xⁿ`.
    pub fn monomial(c: F, n: usize) -> Self {
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `xⁿ`, zero past the degree.
    pub fn coeff(&self, n: usize) -> F {
        self.coeffs.get(n).cloned().unwrap_or_else(F::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &F) -> F {
        self.eval_in(x)
    }

    /// Horner evaluation at a point of any field containing `F`.
    pub fn eval_in<G>(&self, x: &G) -> G
    where
        G: super::field::Embeds<F>,
    {
        self.coeffs
            .iter()
            .rev()
            .fold(G::zero(), |acc, c| acc * x.clone() + G::embed(c))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) if !l.is_one() => {
                let inv = F::one() / l.clone();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_i64(i as i64))
                .collect(),
        )
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc * inner.clone() + Self::constant(c.clone()))
    }

    /// Euclidean division, `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ExactError> {
        let Some(dd) = divisor.degree() else {
            return Err(ExactError::DivisionByZero);
        };
        let lead_inv = F::one() / divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = rem[k + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient; errors when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, ExactError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ExactError::InvalidInput("inexact polynomial division".into()))
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        // monic remainders keep rational coefficients from swelling
        let mut a = self.clone();
        let mut b = if other.is_zero() { other.clone() } else { other.monic() };
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = if r.is_zero() { r } else { r.monic() };
        }
        a.monic()
    }

    /// Squarefree iff coprime to its derivative (characteristic zero).
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Coefficientwise map into another field.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl Polynomial<BigRational> {
    /// Exact square root in ℚ[x], if `self` is a square.
    ///
    /// Leading coefficients are matched from the top down; the candidate is
    /// then squared and compared, so a `Some` result is always correct.
    pub fn sqrt(&self) -> Option<Self> {
        let Some(n) = self.degree() else {
            return Some(Self::zero());
        };
        if n % 2 == 1 {
            return None;
        }
        let half = n / 2;
        let lead_root = rational_sqrt(&self.coeffs[n])?;
        let two_lead = &lead_root * BigRational::from_integer(2.into());
        // root coefficients r[half], r[half-1], ..., r[0]
        let mut root = vec![BigRational::zero(); half + 1];
        root[half] = lead_root;
        for k in (0..half).rev() {
            // coefficient of x^(half + k) in root² determines r[k]
            let target = half + k;
            let mut acc = self.coeffs[target].clone();
            for i in k + 1..=half {
                let j = target - i;
                if j > k && j <= half {
                    acc -= &root[i] * &root[j];
                }
            }
            root[k] = acc / &two_lead;
        }
        let r = Self::new(root);
        if &(r.clone() * r.clone()) == self {
            Some(r)
        } else {
            None
        }
    }
}

impl<F: Field> Zero for Polynomial<F> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Field> One for Polynomial<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Field> Add for Polynomial<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<F: Field> Sub for Polynomial<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<F: Field> Mul for Polynomial<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<F: Field + fmt::Display> Polynomial<F> {
    /// Renders with the given variable name, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let needs_paren = mag.contains(['+', '-', '/']) && i > 0;
            let coef = if needs_paren { format!("({mag})") } else { mag };
            match i {
                0 => out.push_str(&coef),
                _ => {
                    if coef != "1" {
                        out.push_str(&coef);
                        out.push('*');
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

impl<F: Field + fmt::Display> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}
