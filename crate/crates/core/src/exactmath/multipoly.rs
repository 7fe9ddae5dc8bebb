//! Sparse multivariate polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::field::Field;
use super::ExactError;

/// `Σ c_α x^α` over named variables. Zero coefficients are never stored and
/// every exponent vector has one entry per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

/// One term of the on-disk format: `num/den · Π x_i^{exps[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedTerm {
    pub num: i64,
    pub den: i64,
    pub exps: Vec<u32>,
}

impl MultiPoly {
    pub fn zero_in(vars: &[&str]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_in(vars: &[&str], c: BigRational) -> Self {
        let mut p = Self::zero_in(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    /// The `i`-th variable as a polynomial.
    pub fn var(vars: &[&str], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::from_terms(vars, [(e, BigRational::one())])
    }

    pub fn from_terms(
        vars: &[&str],
        terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>,
    ) -> Self {
        let mut p = Self::zero_in(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    /// Builds from `(coefficient, exponents)` integer pairs.
    pub fn from_int_terms(vars: &[&str], terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(
            vars,
            terms
                .iter()
                .map(|(c, e)| (e.to_vec(), BigRational::from_integer(BigInt::from(*c)))),
        )
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &[u32]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.weighted_degree(&vec![1; self.nvars()]).is_some()
    }

    /// Common weighted degree of every term, if the polynomial is weighted
    /// homogeneous. Zero is homogeneous of every degree and returns `Some(0)`.
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u32> {
        let mut degs = self
            .terms
            .keys()
            .map(|e| e.iter().zip(weights).map(|(a, w)| a * w).sum::<u32>());
        let Some(first) = degs.next() else {
            return Some(0);
        };
        degs.all(|d| d == first).then_some(first)
    }

    /// Value at a point with coordinates in any field.
    pub fn eval<F: Field>(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars(), "point dimension");
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut term = F::from_rational(c);
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    term = term * x.pow(k);
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Replaces each variable `x_i` by `images[i]`, all in one common ring.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly, ExactError> {
        if images.len() != self.nvars() {
            return Err(ExactError::InvalidInput("substitution arity".into()));
        }
        let target: Vec<&str> = match images.first() {
            Some(p) => p.vars.iter().map(String::as_str).collect(),
            None => Vec::new(),
        };
        if images.iter().any(|p| p.vars != images[0].vars) {
            return Err(ExactError::InvalidInput("substitution images in different rings".into()));
        }
        let mut out = Self::zero_in(&target);
        for (e, c) in &self.terms {
            let mut term = Self::constant_in(&target, c.clone());
            for (img, &k) in images.iter().zip(e) {
                for _ in 0..k {
                    term = term * img.clone();
                }
            }
            out = out + term;
        }
        Ok(out)
    }

    /// Linear change of variables `x_i ↦ Σ_j m[i][j]·x_j`.
    pub fn linear_substitute(&self, m: &[Vec<BigRational>]) -> Result<MultiPoly, ExactError> {
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let images: Vec<MultiPoly> = m
            .iter()
            .map(|row| {
                Self::from_terms(
                    &vars,
                    row.iter().enumerate().map(|(j, c)| {
                        let mut e = vec![0; vars.len()];
                        e[j] = 1;
                        (e, c.clone())
                    }),
                )
            })
            .collect();
        self.substitute(&images)
    }

    pub fn partial_derivative(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * BigRational::from_integer(BigInt::from(e[i])));
        }
        out
    }

    /// Writes `self = Σ_k c_k · x_i^k` with each `c_k` free of `x_i`;
    /// the `c_k` live in the ring without `x_i`.
    pub fn coefficients_in(&self, i: usize) -> BTreeMap<u32, MultiPoly> {
        let rest: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2.remove(i);
            out.entry(k)
                .or_insert_with(|| MultiPoly {
                    vars: rest.clone(),
                    terms: BTreeMap::new(),
                })
                .add_term(e2, c.clone());
        }
        out
    }

    /// Degree in the single variable `x_i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// True when `x_i` occurs only to even powers.
    pub fn is_even_in(&self, i: usize) -> bool {
        self.terms.keys().all(|e| e[i] % 2 == 0)
    }

    /// Substitutes `x_i² = u`, renaming `x_i` to `name`; odd powers are an error.
    pub fn halve_exponent(&self, i: usize, name: &str) -> Result<MultiPoly, ExactError> {
        if !self.is_even_in(i) {
            return Err(ExactError::InvalidInput(format!(
                "odd power of {} present",
                self.vars[i]
            )));
        }
        let mut vars = self.vars.clone();
        vars[i] = name.to_string();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2[i] /= 2;
                (e2, c.clone())
            })
            .collect();
        Ok(MultiPoly { vars, terms })
    }

    /// Sets `x_i = value` and drops the variable.
    pub fn specialize(&self, i: usize, value: &BigRational) -> MultiPoly {
        let mut vars = self.vars.clone();
        vars.remove(i);
        let mut out = MultiPoly {
            vars,
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2.remove(i);
            out.add_term(e2, c * num_traits::pow(value.clone(), k as usize));
        }
        out
    }

    /// Same polynomial with the variables renamed.
    pub fn with_vars(&self, vars: &[&str]) -> Result<MultiPoly, ExactError> {
        if vars.len() != self.nvars() {
            return Err(ExactError::InvalidInput("variable count".into()));
        }
        Ok(MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: self.terms.clone(),
        })
    }

    pub fn to_serialized(&self) -> Result<Vec<SerializedTerm>, ExactError> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let num = c.numer().to_i64();
                let den = c.denom().to_i64();
                match (num, den) {
                    (Some(num), Some(den)) => Ok(SerializedTerm {
                        num,
                        den,
                        exps: e.clone(),
                    }),
                    _ => Err(ExactError::InvalidInput(format!("coefficient {c} exceeds 64 bits"))),
                }
            })
            .collect()
    }

    /// Reads the on-disk format; the variable count is taken from `vars`.
    pub fn from_serialized(vars: &[&str], terms: &[SerializedTerm]) -> Result<MultiPoly, ExactError> {
        let mut p = Self::zero_in(vars);
        for t in terms {
            if t.den == 0 {
                return Err(ExactError::InvalidInput("zero denominator".into()));
            }
            if t.exps.len() != vars.len() {
                return Err(ExactError::InvalidInput(format!(
                    "exponent vector {:?} has length {}, expected {}",
                    t.exps,
                    t.exps.len(),
                    vars.len()
                )));
            }
            p.add_term(t.exps.clone(), BigRational::new(t.num.into(), t.den.into()));
        }
        Ok(p)
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "polynomials in different rings");
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self.check_ring(&rhs);
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self + (-rhs)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    // monomials multiply by adding exponent vectors
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        self.check_ring(&rhs);
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(k, _)| **k > 0)
                .map(|(k, v)| if *k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                f.write_str(&mono.join("*"))?;
            }
        }
        Ok(())
    }
}
