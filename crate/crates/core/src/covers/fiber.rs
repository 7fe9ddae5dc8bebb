use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exactmath::integer::{exact_sqrt, squarefree_part};
use crate::exactmath::{QuadFieldElement, SquarefreeInt};
use crate::heights::ProjectivePoint;

use super::{CoverError, CyclicCoverModel};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberKind {
    /// `s(P)` is a nonzero `e`-th power in `k(P)`.
    Split,
    /// `s(P) = 0`.
    Ramified,
    /// Rational base, `e = 2`: the fiber is one point over ℚ(√d).
    Inert(SquarefreeInt),
    /// Quadratic base, `e = 2`: the fiber is one point of degree four.
    Irreducible,
    /// `e ≥ 3` and `s(P)` is not an `e`-th power.
    Other,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiberClass {
    pub base_point: ProjectivePoint,
    pub kind: FiberKind,
    /// Degree over ℚ of a point in the fiber; `None` when not decided.
    pub residue_degree: Option<u32>,
}

impl FiberClass {
    /// Upstairs points keep the residue field of the base point.
    pub fn is_non_contracted(&self) -> bool {
        matches!(self.kind, FiberKind::Split | FiberKind::Ramified)
    }
}

fn check_dim(c: &CyclicCoverModel, p: &ProjectivePoint) -> Result<(), CoverError> {
    if p.dim() != c.r() {
        return Err(CoverError::DimensionMismatch {
            got: p.dim(),
            want: c.r(),
        });
    }
    Ok(())
}

/// Fiber over a rational point.
///
/// Evaluates `s` at the coprime integer representative; rescaling changes
/// `s(P)` by an `e`-th power, so the classification is well defined.
pub fn classify_fiber(c: &CyclicCoverModel, p: &ProjectivePoint) -> Result<FiberClass, CoverError> {
    check_dim(c, p)?;
    let ints = p.integer_coords().ok_or(CoverError::WrongPointKind("rational"))?;
    let coords: Vec<BigRational> = ints.into_iter().map(BigRational::from_integer).collect();
    let v = c.s().eval(&coords);
    // v·denᵉ is integral and in the same class modulo e-th powers
    let den = v.denom().clone();
    let v_int = v.numer() * num_traits::pow(den.clone(), c.e() as usize - 1);

    let (kind, residue_degree) = if v_int.is_zero() {
        (FiberKind::Ramified, Some(1))
    } else if c.e() == 2 {
        if exact_sqrt(&v_int).is_some() {
            (FiberKind::Split, Some(1))
        } else {
            let (kernel, _) = squarefree_part(&v_int)?;
            (FiberKind::Inert(kernel), Some(2))
        }
    } else if is_int_power(&v_int, c.e()) {
        (FiberKind::Split, Some(1))
    } else {
        let deg = binomial_is_irreducible(&v_int, c.e()).then_some(c.e());
        (FiberKind::Other, deg)
    };
    Ok(FiberClass {
        base_point: p.canonical(),
        kind,
        residue_degree,
    })
}

/// Fiber of a double cover over a quadratic point, decided exactly in ℚ(√d).
pub fn classify_fiber_quadratic(
    c: &CyclicCoverModel,
    p: &ProjectivePoint,
) -> Result<FiberClass, CoverError> {
    check_dim(c, p)?;
    if c.e() != 2 {
        return Err(CoverError::Unsupported(
            "quadratic base points are classified only for double covers".into(),
        ));
    }
    if p.is_rational() {
        return Err(CoverError::WrongPointKind("quadratic"));
    }
    let v: QuadFieldElement = c.s().eval(p.coords());
    let (kind, deg) = if v.is_zero() {
        (FiberKind::Ramified, 2)
    } else if v.is_square() {
        (FiberKind::Split, 2)
    } else {
        (FiberKind::Irreducible, 4)
    };
    Ok(FiberClass {
        base_point: p.canonical(),
        kind,
        residue_degree: Some(deg),
    })
}

fn is_int_power(v: &BigInt, k: u32) -> bool {
    if v.is_negative() {
        return k % 2 == 1 && is_int_power(&-v, k);
    }
    let r = v.nth_root(k);
    num_traits::pow(r, k as usize) == *v
}

/// Capelli: `xᵏ − v` is irreducible over ℚ iff `v` is not a `p`-th power for
/// any prime `p | k`, and `v ∉ −4ℚ⁴` when `4 | k`.
fn binomial_is_irreducible(v: &BigInt, k: u32) -> bool {
    let mut n = k;
    let mut p = 2;
    while n > 1 {
        if n.is_multiple_of(p) {
            if is_int_power(v, p) {
                return false;
            }
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if k.is_multiple_of(4) && v.is_negative() {
        let w = -v;
        if (&w % 4u32).is_zero() && is_int_power(&(w / 4u32), 4) {
            return false;
        }
    }
    true
}
