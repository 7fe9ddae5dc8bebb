use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactmath::rat;

use super::SurfError;

/// Which cone description decides ampleness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AmpleRule {
    ProjectivePlane,
    /// Basis `(S₀, F)` of 𝔽ₙ.
    Hirzebruch(u32),
    Unknown,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceLattice {
    pub name: String,
    pub labels: Vec<String>,
    pub gram: Vec<Vec<BigRational>>,
    pub canonical: Vec<BigRational>,
    pub ample_rule: AmpleRule,
    /// Quotient singularities resolved by this lattice, e.g. `A1`.
    pub resolved_singularities: Vec<String>,
}

impl SurfaceLattice {
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        gram: Vec<Vec<BigRational>>,
        canonical: Vec<BigRational>,
        ample_rule: AmpleRule,
    ) -> Result<Arc<Self>, SurfError> {
        let n = labels.len();
        if gram.len() != n || gram.iter().any(|r| r.len() != n) || canonical.len() != n {
            return Err(SurfError::Shape);
        }
        if (0..n).any(|i| (0..i).any(|j| gram[i][j] != gram[j][i])) {
            return Err(SurfError::NotSymmetric);
        }
        Ok(Arc::new(SurfaceLattice {
            name: name.into(),
            labels,
            gram,
            canonical,
            ample_rule,
            resolved_singularities: Vec::new(),
        }))
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn basis(self: &Arc<Self>, i: usize) -> DivisorClass {
        let mut v = vec![BigRational::zero(); self.rank()];
        v[i] = BigRational::one();
        DivisorClass::new(self, v).expect("rank matches")
    }

    pub fn class(self: &Arc<Self>, coeffs: &[i64]) -> Result<DivisorClass, SurfError> {
        DivisorClass::new(self, coeffs.iter().map(|&c| rat(c)).collect())
    }
}

/// ℙ² with hyperplane class `H`.
pub fn projective_plane() -> Arc<SurfaceLattice> {
    SurfaceLattice::new("P2", vec!["H".into()], vec![vec![rat(1)]], vec![rat(-3)], AmpleRule::ProjectivePlane)
        .expect("valid lattice")
}

/// 𝔽ₙ in the basis `(S₀, F)`: `S₀² = −n`, `S₀·F = 1`, `F² = 0`,
/// `K = −2S₀ − (n + 2)F`.
pub fn hirzebruch(n: u32) -> Arc<SurfaceLattice> {
    let n_i = n as i64;
    SurfaceLattice::new(
        format!("F{n}"),
        vec!["S0".into(), "F".into()],
        vec![vec![rat(-n_i), rat(1)], vec![rat(1), rat(0)]],
        vec![rat(-2), rat(-n_i - 2)],
        AmpleRule::Hirzebruch(n),
    )
    .expect("valid lattice")
}

/// ℙ(1,1,2) through its minimal resolution 𝔽₂; `S₀` is the exceptional
/// curve over the `A1` point.
pub fn weighted_plane_112() -> Arc<SurfaceLattice> {
    let mut l = (*hirzebruch(2)).clone();
    l.name = "P(1,1,2)~".into();
    l.resolved_singularities = vec!["A1".into()];
    Arc::new(l)
}

#[derive(Clone, Debug)]
pub struct DivisorClass {
    lattice: Arc<SurfaceLattice>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for DivisorClass {
    fn eq(&self, other: &Self) -> bool {
        same_lattice(&self.lattice, &other.lattice) && self.coeffs == other.coeffs
    }
}

fn same_lattice(a: &Arc<SurfaceLattice>, b: &Arc<SurfaceLattice>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl DivisorClass {
    pub fn new(lattice: &Arc<SurfaceLattice>, coeffs: Vec<BigRational>) -> Result<Self, SurfError> {
        if coeffs.len() != lattice.rank() {
            return Err(SurfError::Shape);
        }
        Ok(DivisorClass {
            lattice: lattice.clone(),
            coeffs,
        })
    }

    pub fn lattice(&self) -> &Arc<SurfaceLattice> {
        &self.lattice
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        DivisorClass {
            lattice: self.lattice.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn times(&self, k: i64) -> Self {
        self.scale(&rat(k))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SurfError> {
        self.check(other)?;
        Ok(DivisorClass {
            lattice: self.lattice.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    fn check(&self, other: &Self) -> Result<(), SurfError> {
        if same_lattice(&self.lattice, &other.lattice) {
            Ok(())
        } else {
            Err(SurfError::LatticeMismatch(self.lattice.name.clone(), other.lattice.name.clone()))
        }
    }

    pub fn self_intersection(&self) -> BigRational {
        intersect(self, self).expect("same lattice")
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

/// Panics when the lattices differ; use [`DivisorClass::try_add`] to avoid it.
impl Add for DivisorClass {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("classes on different lattices")
    }
}

impl Neg for DivisorClass {
    type Output = Self;
    fn neg(self) -> Self {
        self.times(-1)
    }
}

impl Sub for DivisorClass {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, l) in self.coeffs.iter().zip(&self.lattice.labels) {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            let coeff = if mag.is_one() { String::new() } else { format!("{mag}") };
            if first {
                let lead = if c.is_negative() { "-" } else { "" };
                write!(f, "{lead}{coeff}{l}")?;
                first = false;
            } else {
                write!(f, " {sign} {coeff}{l}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn intersect(d1: &DivisorClass, d2: &DivisorClass) -> Result<BigRational, SurfError> {
    d1.check(d2)?;
    let g = &d1.lattice.gram;
    let mut acc = BigRational::zero();
    for (i, a) in d1.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in d2.coeffs.iter().enumerate() {
            acc += a * &g[i][j] * b;
        }
    }
    Ok(acc)
}

pub fn canonical_class(s: &Arc<SurfaceLattice>) -> DivisorClass {
    DivisorClass::new(s, s.canonical.clone()).expect("canonical vector has full rank")
}

/// Arithmetic genus `D·(K + D)/2 + 1`.
pub fn adjunction_genus(d: &DivisorClass) -> BigRational {
    let k = canonical_class(d.lattice());
    intersect(d, &(k + d.clone())).expect("same lattice") / rat(2) + rat(1)
}

/// Double cover branched in `2L`: canonical class `π*(K + L)` recorded
/// downstairs, and volume `2(K + L)²`.
pub fn double_cover_canonical(l: &DivisorClass) -> (DivisorClass, BigRational) {
    let k = canonical_class(l.lattice()) + l.clone();
    let vol = rat(2) * k.self_intersection();
    (k, vol)
}

pub fn is_ample(d: &DivisorClass) -> Result<bool, SurfError> {
    match d.lattice.ample_rule {
        AmpleRule::ProjectivePlane => Ok(d.coeffs[0].is_positive()),
        AmpleRule::Hirzebruch(n) => {
            let (a, b) = (&d.coeffs[0], &d.coeffs[1]);
            Ok(a.is_positive() && *b > a * rat(n as i64))
        }
        AmpleRule::Unknown => Err(SurfError::Unsupported(format!("ampleness on {}", d.lattice.name))),
    }
}

/// Pullback along the double cover 𝔽ₙ → 𝔽₂ₙ squaring the fiber coordinate:
/// `S∞ ↦ 2S∞`, `F ↦ F`, hence `S₀ ↦ 2S₀`.
pub fn quotient_pullback(d: &DivisorClass, target: &Arc<SurfaceLattice>) -> Result<DivisorClass, SurfError> {
    match (&d.lattice.ample_rule, &target.ample_rule) {
        (AmpleRule::Hirzebruch(big), AmpleRule::Hirzebruch(n)) if *big == 2 * n => {
            DivisorClass::new(target, vec![&d.coeffs[0] * rat(2), d.coeffs[1].clone()])
        }
        _ => Err(SurfError::Unsupported(format!(
            "quotient pullback from {} to {}",
            d.lattice.name, target.name
        ))),
    }
}

/// `S∞ = S₀ + nF` on 𝔽ₙ.
pub fn section_at_infinity(s: &Arc<SurfaceLattice>) -> Result<DivisorClass, SurfError> {
    match s.ample_rule {
        AmpleRule::Hirzebruch(n) => s.class(&[1, n as i64]),
        _ => Err(SurfError::Unsupported(format!("S_inf on {}", s.name))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hirzebruch_numbers() {
        for n in 0..8u32 {
            let s = hirzebruch(n);
            let (s0, f) = (s.basis(0), s.basis(1));
            let sinf = section_at_infinity(&s).unwrap();
            let ni = n as i64;
            assert_eq!(s0.self_intersection(), rat(-ni));
            assert_eq!(sinf.self_intersection(), rat(ni));
            assert_eq!(f.self_intersection(), rat(0));
            let k = canonical_class(&s);
            assert_eq!(k, sinf.times(-2) + f.times(ni - 2));
            assert_eq!(k.self_intersection(), rat(8));
        }
        assert_eq!(canonical_class(&hirzebruch(2)).to_string(), "-2S0 - 4F");
        assert_eq!(canonical_class(&projective_plane()).self_intersection(), rat(9));
    }

    #[test]
    fn genus_and_covers() {
        let p2 = projective_plane();
        let h = p2.basis(0);
        assert_eq!(adjunction_genus(&h.times(6)), rat(10));
        assert_eq!(adjunction_genus(&h), rat(0));
        for m in 1..8 {
            let (k, vol) = double_cover_canonical(&h.times(m));
            assert_eq!(k, h.times(m - 3));
            assert_eq!(vol, rat(2 * (m - 3) * (m - 3)));
        }
    }

    #[test]
    fn ampleness() {
        for n in 1..8u32 {
            let s = hirzebruch(n);
            let d = s.class(&[2, 3 * n as i64 - 2]).unwrap();
            assert_eq!(is_ample(&d).unwrap(), n > 2);
            assert!(!is_ample(&s.basis(1)).unwrap());
            assert!(!is_ample(&section_at_infinity(&s).unwrap()).unwrap());
        }
        let other = SurfaceLattice::new("Q", vec!["A".into()], vec![vec![rat(2)]], vec![rat(0)], AmpleRule::Unknown).unwrap();
        assert!(is_ample(&other.basis(0)).is_err());
    }

    #[test]
    fn quotient_map() {
        let (big, small) = (hirzebruch(6), hirzebruch(3));
        let sinf_big = section_at_infinity(&big).unwrap();
        let sinf = section_at_infinity(&small).unwrap();
        assert_eq!(quotient_pullback(&sinf_big, &small).unwrap(), sinf.times(2));
        assert_eq!(quotient_pullback(&sinf_big.times(4), &small).unwrap(), sinf.times(8));
        assert_eq!(quotient_pullback(&big.basis(1), &small).unwrap(), small.basis(1));
        assert!(quotient_pullback(&sinf_big, &hirzebruch(2)).is_err());
        assert!(intersect(&big.basis(0), &small.basis(0)).is_err());
    }
}
