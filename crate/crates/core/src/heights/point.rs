use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactmath::{QuadFieldElement, SquarefreeInt};

use super::HeightError;

/// A point of ℙʳ over ℚ or a quadratic field.
///
/// Coordinates are stored as given; equality, ordering and hashing go
/// through [`ProjectivePoint::canonical`], so scaled representatives compare equal.
#[derive(Clone, Debug)]
pub struct ProjectivePoint {
    d: SquarefreeInt,
    coords: Vec<QuadFieldElement>,
    /// Set when `coords` is already the canonical representative.
    canonical: bool,
}

impl ProjectivePoint {
    /// The field tag is the unique nontrivial tag among the coordinates, or `1`.
    pub fn new(coords: Vec<QuadFieldElement>) -> Result<Self, HeightError> {
        if coords.is_empty() || coords.iter().all(Zero::is_zero) {
            return Err(HeightError::AllZero);
        }
        let d = coords
            .iter()
            .find(|c| !c.is_rational())
            .map_or_else(SquarefreeInt::one, |c| c.d().clone());
        let coords = coords
            .iter()
            .map(|c| c.in_field(&d))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ProjectivePoint { d, coords, canonical: false })
    }

    /// Tags the point explicitly, e.g. a rational point regarded over ℚ(√d).
    pub fn new_in(d: &SquarefreeInt, coords: Vec<QuadFieldElement>) -> Result<Self, HeightError> {
        let p = Self::new(coords)?;
        if !p.d.is_one() && p.d != *d {
            return Err(HeightError::Exact(crate::exactmath::ExactError::FieldMismatch(
                p.d.clone(),
                d.clone(),
            )));
        }
        let coords = p
            .coords
            .iter()
            .map(|c| c.in_field(d))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ProjectivePoint {
            d: d.clone(),
            coords,
            canonical: false,
        })
    }

    pub fn from_rationals(coords: &[BigRational]) -> Result<Self, HeightError> {
        Self::new(coords.iter().cloned().map(QuadFieldElement::rational).collect())
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self, HeightError> {
        Self::from_rationals(
            &coords
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect::<Vec<_>>(),
        )
    }

    pub fn d(&self) -> &SquarefreeInt {
        &self.d
    }

    pub fn coords(&self) -> &[QuadFieldElement] {
        &self.coords
    }

    /// Dimension `r` of the ambient ℙʳ.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    fn first_nonzero(&self) -> &QuadFieldElement {
        self.coords.iter().find(|c| !c.is_zero()).unwrap()
    }

    /// Coordinates with the first nonzero entry scaled to one.
    pub fn affine_normalized(&self) -> Vec<QuadFieldElement> {
        let lead = self.first_nonzero().clone();
        self.coords.iter().map(|c| c.clone() / lead.clone()).collect()
    }

    /// True when every coordinate ratio is rational, i.e. `k(P) = ℚ`.
    pub fn is_rational(&self) -> bool {
        if self.d.is_one() {
            return true;
        }
        // x/x₀ is rational iff (a, b) is parallel to (a₀, b₀)
        let lead = self.first_nonzero();
        self.coords.iter().all(|c| c.a() * lead.b() == c.b() * lead.a())
    }

    /// Degree of the residue field over ℚ.
    pub fn residue_degree(&self) -> u32 {
        if self.is_rational() {
            1
        } else {
            2
        }
    }

    /// Tag of the residue field: `1` for rational points.
    pub fn effective_d(&self) -> SquarefreeInt {
        if self.is_rational() {
            SquarefreeInt::one()
        } else {
            self.d.clone()
        }
    }

    pub fn conj(&self) -> Self {
        ProjectivePoint {
            d: self.d.clone(),
            coords: self.coords.iter().map(QuadFieldElement::conj).collect(),
            // conjugation fixes rational entries, so canonical forms stay canonical
            canonical: self.canonical,
        }
    }

    /// Coprime integer coordinates with positive first nonzero entry, for rational points.
    pub fn integer_coords(&self) -> Option<Vec<BigInt>> {
        if !self.is_rational() {
            return None;
        }
        let ratios: Vec<BigRational> = self
            .affine_normalized()
            .iter()
            .map(|c| c.a().clone())
            .collect();
        let lcm = ratios
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = ratios
            .iter()
            .map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        Some(ints.into_iter().map(|x| x / &g).collect())
    }

    /// Canonical representative: coprime integers for rational points,
    /// first nonzero coordinate one otherwise.
    pub fn canonical(&self) -> ProjectivePoint {
        if self.canonical {
            return self.clone();
        }
        match self.integer_coords() {
            Some(ints) => ProjectivePoint {
                d: SquarefreeInt::one(),
                coords: ints
                    .into_iter()
                    .map(|x| QuadFieldElement::rational(BigRational::from_integer(x)))
                    .collect(),
                canonical: true,
            },
            None => ProjectivePoint {
                d: self.d.clone(),
                coords: self.affine_normalized(),
                canonical: true,
            },
        }
    }

    fn canonical_cow(&self) -> Cow<'_, ProjectivePoint> {
        if self.canonical {
            Cow::Borrowed(self)
        } else {
            Cow::Owned(self.canonical())
        }
    }

    /// Smaller of the point and its conjugate, the closed-point representative.
    pub fn closed_point_key(&self) -> ProjectivePoint {
        let a = self.canonical();
        let b = self.conj().canonical();
        if b < a {
            b
        } else {
            a
        }
    }
}

impl PartialEq for ProjectivePoint {
    fn eq(&self, other: &Self) -> bool {
        if self.coords.len() != other.coords.len() {
            return false;
        }
        let (a, b) = (self.canonical_cow(), other.canonical_cow());
        a.d == b.d && a.coords == b.coords
    }
}

impl Eq for ProjectivePoint {}

impl Hash for ProjectivePoint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let c = self.canonical_cow();
        c.d.hash(state);
        c.coords.hash(state);
    }
}

impl PartialOrd for ProjectivePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Rational points first, then by field tag, then lexicographic on the
/// canonical coordinates.
impl Ord for ProjectivePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.canonical_cow(), other.canonical_cow());
        let rank = |p: &ProjectivePoint| (!p.d.is_one(), p.d.value().abs(), p.d.is_negative());
        rank(&a)
            .cmp(&rank(&b))
            .then_with(|| a.coords.len().cmp(&b.coords.len()))
            .then_with(|| a.coords.cmp(&b.coords))
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};

    #[test]
    fn projective_equality() {
        let a = ProjectivePoint::from_ints(&[2, 4, 6]).unwrap();
        let b = ProjectivePoint::from_rationals(&[ratio(1, 3), ratio(2, 3), rat(1)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a.integer_coords().unwrap(),
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)]
        );
        let neg = ProjectivePoint::from_ints(&[0, -3, 6]).unwrap();
        assert_eq!(
            neg.integer_coords().unwrap(),
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(-2)]
        );
    }

    #[test]
    fn all_zero_rejected() {
        assert!(matches!(ProjectivePoint::from_ints(&[0, 0]), Err(HeightError::AllZero)));
    }

    #[test]
    fn rational_multiple_of_surd_is_rational_point() {
        let d = SquarefreeInt::from_i64(2).unwrap();
        let s = QuadFieldElement::sqrt_d(&d);
        let p = ProjectivePoint::new(vec![s.clone(), s.clone() * QuadFieldElement::rational(rat(2))]).unwrap();
        assert!(p.is_rational());
        assert_eq!(p, ProjectivePoint::from_ints(&[1, 2]).unwrap());
        let q = ProjectivePoint::new(vec![s, QuadFieldElement::one()]).unwrap();
        assert!(!q.is_rational());
        assert_ne!(q, q.conj());
        assert_eq!(q.closed_point_key(), q.conj().closed_point_key());
    }

}
