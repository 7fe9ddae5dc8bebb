//! Points of ℙ¹ and ℙ² of bounded height over ℚ or of degree two.
//!
//! The keyspace is split into shards so callers can distribute work; the
//! union of all shards, sorted, is the deterministic output.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactmath::integer::exact_sqrt;
use crate::exactmath::{QuadFieldElement, SquarefreeInt};
use crate::heights::{
    height_bound_multiplicative, mahler_height, weil_height, ProjectivePoint, TOLERANCE,
};

use super::CoverError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Quadratic,
}

/// One independent unit of enumeration work.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ShardKey {
    /// Rational points with first coordinate equal to the value.
    FirstCoordinate(i64),
    /// Quadratic points of ℙ¹ whose minimal polynomial has this leading coefficient.
    LeadingCoefficient(i64),
    /// Quadratic points of ℙ² over ℚ(√d).
    Field(SquarefreeInt),
}

/// Enumeration context: bounds plus, for quadratic points of ℙ², the
/// catalogue of coordinates of bounded height grouped by field.
#[derive(Clone, Debug)]
pub struct Enumerator {
    r: usize,
    bound: f64,
    field: FieldKind,
    /// `⌊e^H⌋` for rational coordinates.
    rational_box: i64,
    /// `⌊e^{2H}⌋`, the Mahler measure bound for quadratic coordinates.
    mahler_box: i64,
    rationals: Vec<BigRational>,
    by_field: BTreeMap<SquarefreeInt, Vec<QuadFieldElement>>,
}

impl Enumerator {
    pub fn new(r: usize, bound: f64, field: FieldKind) -> Result<Self, CoverError> {
        if !(1..=2).contains(&r) {
            return Err(CoverError::Unsupported(format!("enumeration on P^{r}")));
        }
        if bound < 0.0 || !bound.is_finite() {
            return Err(CoverError::NonpositiveBound(bound));
        }
        let rational_box = to_i64(&height_bound_multiplicative(bound));
        let mahler_box = to_i64(&height_bound_multiplicative(2.0 * bound));
        let mut e = Enumerator {
            r,
            bound,
            field,
            rational_box,
            mahler_box,
            rationals: Vec::new(),
            by_field: BTreeMap::new(),
        };
        if r == 2 && field == FieldKind::Quadratic {
            e.rationals = rationals_up_to(rational_box);
            for a in 1..=mahler_box {
                for (alpha, _) in quadratic_roots_with_lead(a, mahler_box, bound) {
                    let conj = alpha.conj();
                    let entry = e.by_field.entry(alpha.d().clone()).or_default();
                    entry.push(alpha);
                    entry.push(conj);
                }
            }
        }
        Ok(e)
    }

    pub fn shard_keys(&self) -> Vec<ShardKey> {
        match (self.field, self.r) {
            (FieldKind::Rational, _) => (0..=self.rational_box).map(ShardKey::FirstCoordinate).collect(),
            (FieldKind::Quadratic, 1) => (1..=self.mahler_box).map(ShardKey::LeadingCoefficient).collect(),
            (FieldKind::Quadratic, _) => self.by_field.keys().cloned().map(ShardKey::Field).collect(),
        }
    }

    /// Points of one shard, sorted; shards are pairwise disjoint.
    pub fn shard(&self, key: &ShardKey) -> Vec<ProjectivePoint> {
        let mut out = match key {
            ShardKey::FirstCoordinate(x0) => self.rational_shard(*x0),
            ShardKey::LeadingCoefficient(a) => quadratic_roots_with_lead(*a, self.mahler_box, self.bound)
                .into_iter()
                .map(|(alpha, _)| affine_point(alpha))
                .collect(),
            ShardKey::Field(d) => self.plane_quadratic_shard(d),
        };
        out.sort();
        out
    }

    fn rational_shard(&self, x0: i64) -> Vec<ProjectivePoint> {
        let b = self.rational_box;
        let mut out = Vec::new();
        let tails: Vec<Vec<i64>> = if x0 == 0 {
            // remaining coordinates must themselves be normalized
            projective_tuples(self.r, b)
        } else {
            all_tuples(self.r, b)
        };
        for tail in tails {
            let mut v = Vec::with_capacity(self.r + 1);
            v.push(x0);
            v.extend(tail);
            let g = v.iter().fold(0i64, |acc, x| acc.gcd(x));
            if g == 1 {
                out.push(ProjectivePoint::from_ints(&v).expect("nonzero tuple"));
            }
        }
        out
    }

    fn plane_quadratic_shard(&self, d: &SquarefreeInt) -> Vec<ProjectivePoint> {
        let Some(surds) = self.by_field.get(d) else {
            return Vec::new();
        };
        let rationals = self.rationals.iter().cloned().map(QuadFieldElement::rational);
        let all: Vec<QuadFieldElement> = rationals.chain(surds.iter().cloned()).collect();
        let one = QuadFieldElement::rational(BigRational::one());
        let zero = QuadFieldElement::rational(BigRational::zero());
        let mut seen = BTreeSet::new();
        let mut consider = |coords: Vec<QuadFieldElement>| {
            let p = ProjectivePoint::new_in(d, coords).expect("nonzero point");
            if p.is_rational() || !weil_height(&p).at_most(self.bound) {
                return;
            }
            seen.insert(p.closed_point_key());
        };
        for beta in &all {
            for gamma in &all {
                if beta.is_rational() && gamma.is_rational() {
                    continue;
                }
                consider(vec![one.clone(), beta.clone(), gamma.clone()]);
            }
        }
        for gamma in surds {
            consider(vec![zero.clone(), one.clone(), gamma.clone()]);
        }
        seen.into_iter().collect()
    }
}

/// Every point of ℙʳ (`r ∈ {1, 2}`) of the requested kind with height at most
/// `bound`, one representative per closed point, in ascending order.
pub fn enumerate_points(r: usize, bound: f64, field: FieldKind) -> Result<Vec<ProjectivePoint>, CoverError> {
    let e = Enumerator::new(r, bound, field)?;
    let mut out: Vec<ProjectivePoint> = e.shard_keys().iter().flat_map(|k| e.shard(k)).collect();
    out.sort();
    Ok(out)
}

/// Shard keys for [`enumerate_shard`]; see [`Enumerator`] to reuse the context.
pub fn shard_keys(r: usize, bound: f64, field: FieldKind) -> Result<Vec<ShardKey>, CoverError> {
    Ok(Enumerator::new(r, bound, field)?.shard_keys())
}

pub fn enumerate_shard(
    r: usize,
    bound: f64,
    field: FieldKind,
    key: &ShardKey,
) -> Result<Vec<ProjectivePoint>, CoverError> {
    Ok(Enumerator::new(r, bound, field)?.shard(key))
}

fn to_i64(n: &BigInt) -> i64 {
    i64::try_from(n).expect("height bound too large to enumerate")
}

fn affine_point(alpha: QuadFieldElement) -> ProjectivePoint {
    let one = QuadFieldElement::rational_in(alpha.d(), BigRational::one());
    ProjectivePoint::new(vec![alpha, one]).expect("nonzero point").closed_point_key()
}

/// Roots `(−b + √disc)/2a` of irreducible primitive `ax² + bx + c` with
/// Mahler height at most `bound`, paired with `(a, b, c)`.
fn quadratic_roots_with_lead(a: i64, mahler_box: i64, bound: f64) -> Vec<(QuadFieldElement, [i64; 3])> {
    let mut out = Vec::new();
    for b in -2 * mahler_box..=2 * mahler_box {
        for c in -mahler_box..=mahler_box {
            if c == 0 || a.gcd(&b).gcd(&c) != 1 {
                continue;
            }
            let disc = BigInt::from(b) * b - BigInt::from(4) * a * c;
            if exact_sqrt(&disc).is_some() {
                continue;
            }
            let coeffs = [BigInt::from(c), BigInt::from(b), BigInt::from(a)];
            let h = mahler_height(&coeffs).expect("irreducible primitive quadratic");
            if h.value > bound + TOLERANCE {
                continue;
            }
            let alpha = QuadFieldElement::root_of_quadratic(&a.into(), &b.into(), &c.into())
                .expect("nonzero leading coefficient");
            out.push((alpha, [a, b, c]));
        }
    }
    out
}

fn rationals_up_to(b: i64) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero()];
    for q in 1..=b {
        for p in -b..=b {
            if p != 0 && p.gcd(&q) == 1 {
                out.push(BigRational::new(p.into(), q.into()));
            }
        }
    }
    out.sort();
    out
}

fn all_tuples(len: usize, b: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (-b..=b).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// Nonzero tuples whose first nonzero entry is positive.
fn projective_tuples(len: usize, b: i64) -> Vec<Vec<i64>> {
    all_tuples(len, b)
        .into_iter()
        .filter(|t| t.iter().find(|x| **x != 0).is_some_and(|x| x.is_positive()))
        .collect()
}
