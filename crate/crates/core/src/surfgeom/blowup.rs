use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::exactmath::rat;

use super::lattice::{canonical_class, intersect, AmpleRule, DivisorClass, SurfaceLattice};
use super::SurfError;

/// Blowup of `points` distinct points; the lattice is `Pic(S) ⊕ ⟨E₁,…,E_k⟩`
/// with `Eᵢ·Eⱼ = −δᵢⱼ` and `K = π*K_S + ΣEᵢ`.
#[derive(Clone, Debug)]
pub struct Blowup {
    base: Arc<SurfaceLattice>,
    lattice: Arc<SurfaceLattice>,
    points: usize,
}

pub fn blowup(s: &Arc<SurfaceLattice>, points: usize) -> Blowup {
    let r = s.rank();
    let n = r + points;
    let mut gram = vec![vec![BigRational::zero(); n]; n];
    for (row, old) in gram.iter_mut().zip(&s.gram) {
        row[..r].clone_from_slice(old);
    }
    for (i, row) in gram.iter_mut().enumerate().skip(r) {
        row[i] = rat(-1);
    }
    let mut labels = s.labels.clone();
    labels.extend((1..=points).map(|i| format!("E{i}")));
    let mut canonical = s.canonical.clone();
    canonical.extend(std::iter::repeat_n(rat(1), points));
    let lattice = SurfaceLattice::new(format!("Bl{points}({})", s.name), labels, gram, canonical, AmpleRule::Unknown)
        .expect("block lattice is symmetric");
    Blowup {
        base: s.clone(),
        lattice,
        points,
    }
}

impl Blowup {
    pub fn lattice(&self) -> &Arc<SurfaceLattice> {
        &self.lattice
    }

    pub fn base(&self) -> &Arc<SurfaceLattice> {
        &self.base
    }

    pub fn exceptional(&self, i: usize) -> DivisorClass {
        self.lattice.basis(self.base.rank() + i)
    }

    /// Total transform.
    pub fn pullback(&self, d: &DivisorClass) -> Result<DivisorClass, SurfError> {
        self.proper_transform(d, &vec![0; self.points])
    }

    /// `π*D − Σ multᵢ·Eᵢ`, where `multᵢ` is the multiplicity of `D` at the i-th point.
    pub fn proper_transform(&self, d: &DivisorClass, mults: &[u32]) -> Result<DivisorClass, SurfError> {
        if !Arc::ptr_eq(d.lattice(), &self.base) && **d.lattice() != *self.base {
            return Err(SurfError::LatticeMismatch(d.lattice().name.clone(), self.base.name.clone()));
        }
        if mults.len() != self.points {
            return Err(SurfError::Shape);
        }
        let mut v = d.coeffs().to_vec();
        v.extend(mults.iter().map(|&m| rat(-(m as i64))));
        DivisorClass::new(&self.lattice, v)
    }

    /// Inverse of [`Blowup::pullback`] on classes with no exceptional part.
    pub fn descend(&self, d: &DivisorClass) -> Result<DivisorClass, SurfError> {
        let r = self.base.rank();
        if d.coeffs()[r..].iter().any(|c| !c.is_zero()) {
            return Err(SurfError::NotContractible("class has exceptional components".into()));
        }
        DivisorClass::new(&self.base, d.coeffs()[..r].to_vec())
    }
}

/// Simultaneous contraction of pairwise disjoint (−1)-curves. Classes on the
/// contracted surface are represented by their pullbacks, i.e. classes
/// orthogonal to every contracted curve.
#[derive(Clone, Debug)]
pub struct Contraction {
    curves: Vec<DivisorClass>,
}

/// Image of a class together with its multiplicity at each contracted point.
#[derive(Clone, Debug, PartialEq)]
pub struct PushedClass {
    pub class: DivisorClass,
    pub multiplicities: Vec<BigRational>,
}

pub fn contraction(curves: &[DivisorClass]) -> Result<Contraction, SurfError> {
    for (i, c) in curves.iter().enumerate() {
        let k = canonical_class(c.lattice());
        if c.self_intersection() != rat(-1) || intersect(&k, c)? != rat(-1) {
            return Err(SurfError::NotContractible(format!("{c} is not a (-1)-curve")));
        }
        for d in &curves[..i] {
            if !intersect(c, d)?.is_zero() {
                return Err(SurfError::NotContractible(format!("{c} meets {d}")));
            }
        }
    }
    Ok(Contraction { curves: curves.to_vec() })
}

impl Contraction {
    pub fn curves(&self) -> &[DivisorClass] {
        &self.curves
    }

    /// `push D = D + Σ (D·Cᵢ) Cᵢ`, so `(push D)² = D² + Σ (D·Cᵢ)²`.
    pub fn push(&self, d: &DivisorClass) -> Result<PushedClass, SurfError> {
        let mut class = d.clone();
        let mut multiplicities = Vec::with_capacity(self.curves.len());
        for c in &self.curves {
            let m = intersect(d, c)?;
            class = class.try_add(&c.scale(&m))?;
            multiplicities.push(m);
        }
        Ok(PushedClass { class, multiplicities })
    }
}

pub fn contract_and_push(curves: &[DivisorClass], d: &DivisorClass) -> Result<PushedClass, SurfError> {
    contraction(curves)?.push(d)
}
