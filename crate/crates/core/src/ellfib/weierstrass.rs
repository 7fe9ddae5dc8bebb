use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;

use crate::exactmath::{rat, Field, RatFunc};

use super::EllError;

/// `y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆` with nonzero discriminant.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassModel<F> {
    pub a1: F,
    pub a2: F,
    pub a3: F,
    pub a4: F,
    pub a6: F,
    disc: F,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EcPoint<F> {
    Identity,
    Affine { x: F, y: F },
}

impl<F> EcPoint<F> {
    pub fn affine(x: F, y: F) -> Self {
        EcPoint::Affine { x, y }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, EcPoint::Identity)
    }

    pub fn coords(&self) -> Option<(&F, &F)> {
        match self {
            EcPoint::Identity => None,
            EcPoint::Affine { x, y } => Some((x, y)),
        }
    }

    pub fn map<G>(&self, f: impl Fn(&F) -> G) -> EcPoint<G> {
        match self {
            EcPoint::Identity => EcPoint::Identity,
            EcPoint::Affine { x, y } => EcPoint::Affine { x: f(x), y: f(y) },
        }
    }

    pub fn try_map<G, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<EcPoint<G>, E> {
        Ok(match self {
            EcPoint::Identity => EcPoint::Identity,
            EcPoint::Affine { x, y } => EcPoint::Affine { x: f(x)?, y: f(y)? },
        })
    }
}

impl<F: fmt::Display> fmt::Display for EcPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EcPoint::Identity => write!(f, "O"),
            EcPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl<F: Field> WeierstrassModel<F> {
    pub fn new(a1: F, a2: F, a3: F, a4: F, a6: F) -> Result<Self, EllError> {
        let mut e = WeierstrassModel {
            a1,
            a2,
            a3,
            a4,
            a6,
            disc: F::zero(),
        };
        e.disc = e.compute_discriminant();
        if e.disc.is_zero() {
            return Err(EllError::SingularCurve);
        }
        Ok(e)
    }

    /// `y² = x³ + a·x + b`.
    pub fn short(a: F, b: F) -> Result<Self, EllError> {
        Self::new(F::zero(), F::zero(), F::zero(), a, b)
    }

    pub fn b_invariants(&self) -> [F; 4] {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let c = |n: i64| F::from_i64(n);
        let b2 = a1.square() + c(4) * a2.clone();
        let b4 = c(2) * a4.clone() + a1.clone() * a3.clone();
        let b6 = a3.square() + c(4) * a6.clone();
        let b8 = a1.square() * a6.clone() + c(4) * a2.clone() * a6.clone()
            - a1.clone() * a3.clone() * a4.clone()
            + a2.clone() * a3.square()
            - a4.square();
        [b2, b4, b6, b8]
    }

    pub fn c_invariants(&self) -> (F, F) {
        let [b2, b4, b6, _] = self.b_invariants();
        let c = |n: i64| F::from_i64(n);
        let c4 = b2.square() - c(24) * b4.clone();
        let c6 = -(b2.pow(3)) + c(36) * b2 * b4 - c(216) * b6;
        (c4, c6)
    }

    fn compute_discriminant(&self) -> F {
        let [b2, b4, b6, b8] = self.b_invariants();
        let c = |n: i64| F::from_i64(n);
        -(b2.square() * b8) - c(8) * b4.pow(3) - c(27) * b6.square() + c(9) * b2 * b4 * b6
    }

    pub fn discriminant(&self) -> &F {
        &self.disc
    }

    pub fn contains(&self, p: &EcPoint<F>) -> bool {
        match p {
            EcPoint::Identity => true,
            EcPoint::Affine { x, y } => self.residual(x, y).is_zero(),
        }
    }

    /// Left side minus right side of the equation.
    pub fn residual<G>(&self, x: &G, y: &G) -> G
    where
        G: crate::exactmath::Embeds<F>,
    {
        let e = |v: &F| G::embed(v);
        y.square() + e(&self.a1) * x.clone() * y.clone() + e(&self.a3) * y.clone()
            - x.pow(3)
            - e(&self.a2) * x.square()
            - e(&self.a4) * x.clone()
            - e(&self.a6)
    }

    pub fn negate(&self, p: &EcPoint<F>) -> EcPoint<F> {
        match p {
            EcPoint::Identity => EcPoint::Identity,
            EcPoint::Affine { x, y } => EcPoint::Affine {
                x: x.clone(),
                y: -y.clone() - self.a1.clone() * x.clone() - self.a3.clone(),
            },
        }
    }

    /// Chord–tangent sum of two points already known to lie on the curve.
    pub fn add_unchecked(&self, p: &EcPoint<F>, q: &EcPoint<F>) -> EcPoint<F> {
        let (x1, y1, x2, y2) = match (p, q) {
            (EcPoint::Identity, _) => return q.clone(),
            (_, EcPoint::Identity) => return p.clone(),
            (EcPoint::Affine { x: x1, y: y1 }, EcPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let (lambda, nu) = if x1 == x2 {
            let denom = y1.clone() + y2.clone() + a1.clone() * x2.clone() + a3.clone();
            if denom.is_zero() {
                return EcPoint::Identity;
            }
            let c = |n: i64| F::from_i64(n);
            let tangent = c(2) * y1.clone() + a1.clone() * x1.clone() + a3.clone();
            let l = (c(3) * x1.square() + c(2) * a2.clone() * x1.clone() + a4.clone() - a1.clone() * y1.clone())
                / tangent.clone();
            let n = (-(x1.pow(3)) + a4.clone() * x1.clone() + c(2) * a6.clone() - a3.clone() * y1.clone()) / tangent;
            (l, n)
        } else {
            let dx = x2.clone() - x1.clone();
            let l = (y2.clone() - y1.clone()) / dx.clone();
            let n = (y1.clone() * x2.clone() - y2.clone() * x1.clone()) / dx;
            (l, n)
        };
        let x3 = lambda.square() + a1.clone() * lambda.clone() - a2.clone() - x1.clone() - x2.clone();
        let y3 = -(lambda + a1.clone()) * x3.clone() - nu - a3.clone();
        EcPoint::Affine { x: x3, y: y3 }
    }

    /// `n·P` for `n ≥ 0` by double-and-add.
    pub fn multiple_unchecked(&self, n: u64, p: &EcPoint<F>) -> EcPoint<F> {
        let mut acc = EcPoint::Identity;
        let mut base = p.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add_unchecked(&base, &base);
            }
        }
        acc
    }

    /// `n·P` for any integer `n`.
    pub fn multiple(&self, n: i64, p: &EcPoint<F>) -> Result<EcPoint<F>, EllError> {
        if !self.contains(p) {
            return Err(EllError::NotOnCurve);
        }
        let q = self.multiple_unchecked(n.unsigned_abs(), p);
        Ok(if n < 0 { self.negate(&q) } else { q })
    }
}

pub fn ec_add<F: Field>(e: &WeierstrassModel<F>, p: &EcPoint<F>, q: &EcPoint<F>) -> Result<EcPoint<F>, EllError> {
    if !e.contains(p) || !e.contains(q) {
        return Err(EllError::NotOnCurve);
    }
    Ok(e.add_unchecked(p, q))
}

impl WeierstrassModel<RatFunc<BigRational>> {
    /// Fiber at `t₀`; poles and degenerate fibers are reported separately.
    pub fn specialize(&self, t0: &BigRational) -> Result<WeierstrassModel<BigRational>, EllError> {
        let ev = |c: &RatFunc<BigRational>| c.eval(t0).map_err(|_| EllError::Pole(t0.clone()));
        let (a1, a2, a3, a4, a6) = (ev(&self.a1)?, ev(&self.a2)?, ev(&self.a3)?, ev(&self.a4)?, ev(&self.a6)?);
        WeierstrassModel::new(a1, a2, a3, a4, a6).map_err(|_| EllError::BadReduction(t0.clone()))
    }
}

/// Evaluates a ℚ(t)-point of `e` at `t₀`.
pub fn specialize_point(
    e: &WeierstrassModel<RatFunc<BigRational>>,
    p: &EcPoint<RatFunc<BigRational>>,
    t0: &BigRational,
) -> Result<EcPoint<BigRational>, EllError> {
    let fiber = e.specialize(t0)?;
    let q = p.try_map(|c| c.eval(t0).map_err(|_| EllError::Pole(t0.clone())))?;
    debug_assert!(fiber.contains(&q));
    Ok(q)
}

/// Outcome of the bounded torsion search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionReport {
    pub torsion: bool,
    /// Least `n` with `n·P = O`; `None` means infinite order.
    pub order: Option<u32>,
    /// Least `n ≤ 12` with `n·P` non-integral on the integral short model,
    /// which certifies infinite order.
    pub nonintegral_multiple: Option<u32>,
}

/// Rational torsion has order at most 12, so `n·P ≠ O` for `n ≤ 12` decides it.
pub fn is_torsion(e: &WeierstrassModel<BigRational>, p: &EcPoint<BigRational>) -> Result<TorsionReport, EllError> {
    if !e.contains(p) {
        return Err(EllError::NotOnCurve);
    }
    let (to_short, _) = integral_short_model(e);
    let mut order = None;
    let mut nonintegral = None;
    let mut q = EcPoint::Identity;
    for n in 1..=12u32 {
        q = e.add_unchecked(&q, p);
        match &q {
            EcPoint::Identity => {
                order = Some(n);
                break;
            }
            EcPoint::Affine { x, y } => {
                if nonintegral.is_none() {
                    let (xs, ys) = to_short(x, y);
                    if !xs.is_integer() || !ys.is_integer() {
                        nonintegral = Some(n);
                    }
                }
            }
        }
    }
    Ok(TorsionReport {
        torsion: order.is_some(),
        order,
        nonintegral_multiple: nonintegral,
    })
}

/// `y² = x³ − 27c₄u⁴·x − 54c₆u⁶` with `u` clearing the denominators of
/// `c₄, c₆`, together with the coordinate map onto it.
#[allow(clippy::type_complexity)]
pub fn integral_short_model(
    e: &WeierstrassModel<BigRational>,
) -> (
    impl Fn(&BigRational, &BigRational) -> (BigRational, BigRational) + '_,
    WeierstrassModel<BigRational>,
) {
    let (c4, c6) = e.c_invariants();
    let u = BigRational::from_integer(c4.denom().lcm(c6.denom()));
    let [b2, ..] = e.b_invariants();
    let short = WeierstrassModel::short(-rat(27) * c4 * u.pow(4), -rat(54) * c6 * u.pow(6))
        .expect("isomorphic to a smooth curve");
    let u2 = u.square();
    let u3 = u2.clone() * u.clone();
    let map = move |x: &BigRational, y: &BigRational| {
        let xs = (rat(36) * x + rat(3) * &b2) * &u2;
        let ys = rat(108) * (rat(2) * y + &e.a1 * x + &e.a3) * &u3;
        (xs, ys)
    };
    (map, short)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    fn pt(x: i64, y: i64) -> EcPoint<BigRational> {
        EcPoint::affine(rat(x), rat(y))
    }

    fn y2_x3_1() -> WeierstrassModel<BigRational> {
        WeierstrassModel::short(rat(0), rat(1)).unwrap()
    }

    #[test]
    fn chord_examples() {
        let e = y2_x3_1();
        assert_eq!(ec_add(&e, &pt(2, 3), &pt(0, 1)).unwrap(), pt(-1, 0));
        assert_eq!(ec_add(&e, &pt(2, 3), &EcPoint::Identity).unwrap(), pt(2, 3));
        assert_eq!(ec_add(&e, &pt(2, 3), &e.negate(&pt(2, 3))).unwrap(), EcPoint::Identity);
        assert_eq!(ec_add(&e, &pt(1, 1), &pt(0, 1)), Err(EllError::NotOnCurve));
    }

    #[test]
    fn torsion_orders() {
        let e = y2_x3_1();
        assert_eq!(is_torsion(&e, &pt(-1, 0)).unwrap().order, Some(2));
        assert_eq!(is_torsion(&e, &pt(0, 1)).unwrap().order, Some(3));
        assert_eq!(is_torsion(&e, &pt(2, 3)).unwrap().order, Some(6));
        let r = is_torsion(&e, &pt(2, 3)).unwrap();
        assert!(r.torsion && r.nonintegral_multiple.is_none());
    }

    #[test]
    fn non_torsion_point_has_nonintegral_multiple() {
        // y² = x³ − 1020x, (34, 68)
        let e = WeierstrassModel::short(rat(-1020), rat(0)).unwrap();
        let p = pt(34, 68);
        let r = is_torsion(&e, &p).unwrap();
        assert_eq!(r.order, None);
        assert!(r.nonintegral_multiple.is_some());
        let two_p = e.multiple(2, &p).unwrap();
        assert_eq!(two_p.coords().unwrap().0, &rat(256));
    }

    #[test]
    fn singular_and_general_models() {
        assert_eq!(WeierstrassModel::short(rat(0), rat(0)), Err(EllError::SingularCurve));
        // y² + y = x³ − x² has conductor 11 and (0, 0) of order 5
        let e = WeierstrassModel::new(rat(0), rat(-1), rat(1), rat(0), rat(0)).unwrap();
        assert_eq!(e.discriminant(), &rat(-11));
        let p = pt(0, 0);
        let q = e.multiple(5, &p).unwrap();
        assert_eq!(q, EcPoint::Identity);
        let half = EcPoint::affine(ratio(1, 2), rat(0));
        assert!(!e.contains(&half));
    }
}
