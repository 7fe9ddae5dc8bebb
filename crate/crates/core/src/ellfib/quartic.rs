//! Genus-one curves `v² = f(u)`, `deg f ∈ {3, 4}`, with a marked point, and
//! the change of coordinates to Weierstrass form sending it to the origin.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactmath::{rat, Embeds, Field, Polynomial, RatFunc};

use super::function_field::CurveFunction;
use super::weierstrass::{EcPoint, WeierstrassModel};
use super::EllError;

/// A point of the smooth model. At infinity `v/u²` tends to `ratio`, which
/// is `±√c₄` for quartics and `0` for cubics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum QuarticPoint<F> {
    Affine { u: F, v: F },
    Infinity { ratio: F },
}

impl<F> QuarticPoint<F> {
    pub fn affine(u: F, v: F) -> Self {
        QuarticPoint::Affine { u, v }
    }

    pub fn try_map<G, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<QuarticPoint<G>, E> {
        Ok(match self {
            QuarticPoint::Affine { u, v } => QuarticPoint::Affine { u: f(u)?, v: f(v)? },
            QuarticPoint::Infinity { ratio } => QuarticPoint::Infinity { ratio: f(ratio)? },
        })
    }

    pub fn map<G>(&self, f: impl Fn(&F) -> G) -> QuarticPoint<G> {
        self.try_map(|c| Ok::<_, std::convert::Infallible>(f(c))).unwrap_or_else(|e| match e {})
    }
}

impl<F: fmt::Display> fmt::Display for QuarticPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuarticPoint::Affine { u, v } => write!(f, "({u}, {v})"),
            QuarticPoint::Infinity { ratio } => write!(f, "(inf, {ratio})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuarticModel<F> {
    f: Polynomial<F>,
    marked: QuarticPoint<F>,
}

impl<F: Field> QuarticModel<F> {
    pub fn new(f: Polynomial<F>, marked: QuarticPoint<F>) -> Result<Self, EllError> {
        if !matches!(f.degree(), Some(3 | 4)) {
            return Err(EllError::DegenerateQuartic);
        }
        if !f.is_squarefree() {
            return Err(EllError::SingularQuartic);
        }
        let q = QuarticModel { f, marked };
        if !q.contains(&q.marked) {
            return Err(EllError::MarkedPointNotOnCurve);
        }
        Ok(q)
    }

    /// `v² = c₄u⁴ + … + c₀` from ascending coefficients.
    pub fn from_coeffs(coeffs: [F; 5], marked: QuarticPoint<F>) -> Result<Self, EllError> {
        Self::new(Polynomial::new(coeffs.to_vec()), marked)
    }

    pub fn f(&self) -> &Polynomial<F> {
        &self.f
    }

    pub fn marked(&self) -> &QuarticPoint<F> {
        &self.marked
    }

    pub fn contains<G: Embeds<F>>(&self, p: &QuarticPoint<G>) -> bool {
        match p {
            QuarticPoint::Affine { u, v } => v.square() == self.f.eval_in(u),
            QuarticPoint::Infinity { ratio } => match self.f.degree() {
                Some(4) => ratio.square() == G::embed(&self.f.coeff(4)),
                _ => ratio.is_zero(),
            },
        }
    }
}

impl QuarticModel<RatFunc<BigRational>> {
    /// Fiber at `t₀`; a pole or a singular fiber is reported separately.
    pub fn specialize(&self, t0: &BigRational) -> Result<QuarticModel<BigRational>, EllError> {
        let ev = |c: &RatFunc<BigRational>| c.eval(t0).map_err(|_| EllError::Pole(t0.clone()));
        let coeffs = self.f.coeffs().iter().map(ev).collect::<Result<Vec<_>, _>>()?;
        let f = Polynomial::new(coeffs);
        let marked = self.marked.try_map(ev)?;
        if f.degree() != self.f.degree() {
            return Err(EllError::BadReduction(t0.clone()));
        }
        QuarticModel::new(f, marked).map_err(|e| match e {
            EllError::SingularQuartic | EllError::DegenerateQuartic => EllError::BadReduction(t0.clone()),
            other => other,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Reduction<F> {
    /// `w = z − shift`, `v₁ = q·v₂`, `v₂² = z⁴ + a z² + b z + c`;
    /// `X = 2(v₂ + z²)`, `Y = 2z(X + a)`.
    Monic { q: F, shift: F, a: F, b: F, c: F },
    /// `v₁² = c₃w³ + …`; `X = c₃w`, `Y = c₃v₁`.
    Cubic { c3: F },
}

/// Mutually inverse maps between a marked quartic and a Weierstrass curve.
///
/// An affine marked point `(u₀, v₀)` is first sent to infinity by
/// `u = u₀ + 1/w`, `v = v₁/w²`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticTransform<F> {
    quartic: QuarticModel<F>,
    curve: WeierstrassModel<F>,
    center: Option<F>,
    reduction: Reduction<F>,
}

pub fn quartic_to_weierstrass<F: Field>(q: &QuarticModel<F>) -> Result<QuarticTransform<F>, EllError> {
    let (g, center, ratio) = match &q.marked {
        QuarticPoint::Infinity { ratio } => (q.f.clone(), None, ratio.clone()),
        QuarticPoint::Affine { u, v } => {
            // w⁴·f(u₀ + 1/w) = Σ cᵢ (u₀w + 1)ⁱ w⁴⁻ⁱ
            let lin = Polynomial::new(vec![F::one(), u.clone()]);
            let mut g = Polynomial::zero();
            for (i, c) in q.f.coeffs().iter().enumerate() {
                g = g + lin.pow(i as u32) * Polynomial::monomial(c.clone(), 4 - i);
            }
            (g, Some(u.clone()), v.clone())
        }
    };
    let two = F::from_i64(2);
    let four = F::from_i64(4);
    let (curve, reduction) = match g.degree() {
        Some(4) => {
            let lead = g.coeff(4);
            debug_assert!(ratio.square() == lead);
            let k = g.monic();
            let shift = k.coeff(3) / four.clone();
            let d = k.compose(&Polynomial::new(vec![-shift.clone(), F::one()]));
            let (a, b, c) = (d.coeff(2), d.coeff(1), d.coeff(0));
            let curve = WeierstrassModel::new(
                F::zero(),
                a.clone(),
                two * b.clone(),
                -(four.clone() * c.clone()),
                -(four * a.clone() * c.clone()),
            )
            .map_err(|_| EllError::SingularQuartic)?;
            (curve, Reduction::Monic { q: ratio, shift, a, b, c })
        }
        Some(3) => {
            let c3 = g.coeff(3);
            let curve = WeierstrassModel::new(
                F::zero(),
                g.coeff(2),
                F::zero(),
                g.coeff(1) * c3.clone(),
                g.coeff(0) * c3.square(),
            )
            .map_err(|_| EllError::SingularQuartic)?;
            (curve, Reduction::Cubic { c3 })
        }
        _ => return Err(EllError::SingularQuartic),
    };
    Ok(QuarticTransform {
        quartic: q.clone(),
        curve,
        center,
        reduction,
    })
}

impl<F: Field> QuarticTransform<F> {
    pub fn curve(&self) -> &WeierstrassModel<F> {
        &self.curve
    }

    pub fn quartic(&self) -> &QuarticModel<F> {
        &self.quartic
    }

    pub fn forward<G: Embeds<F>>(&self, p: &QuarticPoint<G>) -> Result<EcPoint<G>, EllError> {
        if !self.quartic.contains(p) {
            return Err(EllError::NotOnCurve);
        }
        let e = |c: &F| G::embed(c);
        let p = match &self.center {
            None => p.clone(),
            Some(u0) => match p {
                QuarticPoint::Infinity { ratio } => QuarticPoint::Affine { u: G::zero(), v: ratio.clone() },
                QuarticPoint::Affine { u, v } => {
                    let du = u.clone() - e(u0);
                    match du.checked_inv() {
                        None => QuarticPoint::Infinity { ratio: v.clone() },
                        Some(w) => QuarticPoint::Affine {
                            u: w.clone(),
                            v: v.clone() * w.square(),
                        },
                    }
                }
            },
        };
        let two = G::from_i64(2);
        Ok(match (&self.reduction, p) {
            (Reduction::Cubic { .. }, QuarticPoint::Infinity { .. }) => EcPoint::Identity,
            (Reduction::Cubic { c3 }, QuarticPoint::Affine { u, v }) => EcPoint::affine(e(c3) * u, e(c3) * v),
            (Reduction::Monic { q, a, b, .. }, QuarticPoint::Infinity { ratio }) => {
                if ratio == e(q) {
                    EcPoint::Identity
                } else {
                    EcPoint::affine(-e(a), -(two * e(b)))
                }
            }
            (Reduction::Monic { q, shift, a, .. }, QuarticPoint::Affine { u, v }) => {
                let z = u + e(shift);
                let v2 = v / e(q);
                let x = two.clone() * (v2 + z.square());
                let y = two * z * (x.clone() + e(a));
                EcPoint::affine(x, y)
            }
        })
    }

    pub fn inverse<G: Embeds<F>>(&self, p: &EcPoint<G>) -> Result<QuarticPoint<G>, EllError> {
        if let EcPoint::Affine { x, y } = p {
            if !self.curve.residual(x, y).is_zero() {
                return Err(EllError::NotOnCurve);
            }
        }
        let e = |c: &F| G::embed(c);
        let w_point = match (&self.reduction, p) {
            (_, EcPoint::Identity) => match &self.reduction {
                Reduction::Cubic { .. } => QuarticPoint::Infinity { ratio: G::zero() },
                Reduction::Monic { q, .. } => QuarticPoint::Infinity { ratio: e(q) },
            },
            (Reduction::Cubic { c3 }, EcPoint::Affine { x, y }) => {
                QuarticPoint::affine(x.clone() / e(c3), y.clone() / e(c3))
            }
            (Reduction::Monic { q, shift, a, b, c }, EcPoint::Affine { x, y }) => {
                let two = G::from_i64(2);
                let xa = x.clone() + e(a);
                let z = if !xa.is_zero() {
                    y.clone() / (two.clone() * xa)
                } else if *y == -(two.clone() * e(b)) {
                    return self.undo_center(QuarticPoint::Infinity { ratio: -e(q) });
                } else {
                    // X = −a forces b·z = a²/4 − c
                    (e(a).square() / G::from_i64(4) - e(c)) / e(b)
                };
                let v2 = x.clone() / two - z.square();
                QuarticPoint::affine(z - e(shift), e(q) * v2)
            }
        };
        self.undo_center(w_point)
    }

    fn undo_center<G: Embeds<F>>(&self, p: QuarticPoint<G>) -> Result<QuarticPoint<G>, EllError> {
        let Some(u0) = &self.center else {
            return Ok(p);
        };
        Ok(match p {
            QuarticPoint::Infinity { ratio } => QuarticPoint::affine(G::embed(u0), ratio),
            QuarticPoint::Affine { u: w, v: v1 } => match w.checked_inv() {
                None => QuarticPoint::Infinity { ratio: v1 },
                Some(iw) => QuarticPoint::affine(G::embed(u0) + iw.clone(), v1 * iw.square()),
            },
        })
    }

    /// Checks both compositions on the generic points of the two curves, as
    /// identities in their function fields, and that the marked point goes
    /// to the origin.
    pub fn verify_round_trip(&self) -> bool {
        if self.forward::<F>(&self.quartic.marked) != Ok(EcPoint::Identity) {
            return false;
        }
        let (u, v) = CurveFunction::generic_point(Polynomial::zero(), self.quartic.f.clone());
        let generic = QuarticPoint::affine(u, v);
        let image = match self.forward(&generic) {
            Ok(p @ EcPoint::Affine { .. }) => p,
            _ => return false,
        };
        if self.inverse(&image).as_ref() != Ok(&generic) {
            return false;
        }
        let h = Polynomial::new(vec![self.curve.a3.clone(), self.curve.a1.clone()]);
        let cubic = Polynomial::new(vec![
            self.curve.a6.clone(),
            self.curve.a4.clone(),
            self.curve.a2.clone(),
            F::one(),
        ]);
        let (x, y) = CurveFunction::generic_point(h, cubic);
        let generic = EcPoint::affine(x, y);
        match self.inverse(&generic) {
            Ok(back @ QuarticPoint::Affine { .. }) => self.forward(&back).as_ref() == Ok(&generic),
            _ => false,
        }
    }
}

/// `v² = u⁴ + c` with the marked point at infinity where `v/u² → 1`.
pub fn monic_biquadratic<F: Field>(c: F) -> Result<QuarticModel<F>, EllError> {
    QuarticModel::new(
        Polynomial::new(vec![c, F::zero(), F::zero(), F::zero(), F::one()]),
        QuarticPoint::Infinity { ratio: F::one() },
    )
}

/// `v² = u⁴ + t⁸ − 1` over ℚ(t), the generic fiber of the degree-eight example.
pub fn octic_fiber_quartic() -> QuarticModel<RatFunc<BigRational>> {
    let c = RatFunc::from_poly(Polynomial::monomial(rat(1), 8) - Polynomial::one());
    monic_biquadratic(c).expect("t^8 - 1 is not zero")
}
