use num_rational::BigRational;

use crate::exactmath::rat;

use super::blowup::{blowup, contraction};
use super::lattice::{
    adjunction_genus, canonical_class, double_cover_canonical, hirzebruch, intersect, is_ample,
    quotient_pullback, section_at_infinity, weighted_plane_112, DivisorClass,
};
use super::SurfError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularityFlag {
    PossiblyCanonical,
    NotCanonical,
}

/// A branch point of multiplicity at least 4 makes the double cover
/// non-canonical there. Never certifies canonicity.
pub fn canonical_singularity_flag(branch_multiplicity: u32) -> SingularityFlag {
    if branch_multiplicity >= 4 {
        SingularityFlag::NotCanonical
    } else {
        SingularityFlag::PossiblyCanonical
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteIntersection {
    pub canonical: (i64, i64),
    pub dimension: i64,
    /// Surface with trivial canonical class.
    pub k3_type: bool,
}

/// Canonical class of a complete intersection in ℙ² × ℙ² by adjunction.
pub fn ci_canonical(multidegrees: &[(i64, i64)]) -> CompleteIntersection {
    let canonical = multidegrees.iter().fold((-3, -3), |(a, b), (x, y)| (a + x, b + y));
    let dimension = 4 - multidegrees.len() as i64;
    CompleteIntersection {
        canonical,
        dimension,
        k3_type: dimension == 2 && canonical == (0, 0),
    }
}

/// Invariants of the double cover of 𝔽ₙ branched along the pullback of
/// `4S∞` from 𝔽₂ₙ, and of its branch curve mapped to ℙ².
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyInvariants {
    pub n: u32,
    pub branch: DivisorClass,
    pub canonical: DivisorClass,
    pub canonical_ample: bool,
    pub volume: BigRational,
    pub branch_genus: BigRational,
    /// Self-intersection of the image of `S₀` after contracting the fibers.
    pub contracted_section_square: BigRational,
    pub plane_degree: BigRational,
    pub plane_multiplicity: BigRational,
    pub singularity: SingularityFlag,
}

/// Runs the family construction for `n ≥ 2`: blow up `n − 1` points of `C`-free
/// fibers off `S₀`, contract the fiber transforms, then the image of `S₀`.
pub fn hirzebruch_family(n: u32) -> Result<FamilyInvariants, SurfError> {
    if n < 2 {
        return Err(SurfError::Unsupported(format!("family member n = {n}")));
    }
    let (big, s) = (hirzebruch(2 * n), hirzebruch(n));
    let branch = quotient_pullback(&section_at_infinity(&big)?.times(4), &s)?;
    let half = branch.scale(&BigRational::new(1.into(), 2.into()));
    let (canonical, volume) = double_cover_canonical(&half);
    let canonical_ample = is_ample(&canonical)?;
    let branch_genus = adjunction_genus(&branch);

    let k = n as usize - 1;
    let bl = blowup(&s, k);
    let fibers: Vec<DivisorClass> = (0..k)
        .map(|i| {
            let mut mults = vec![0; k];
            mults[i] = 1;
            bl.proper_transform(&s.basis(1), &mults)
        })
        .collect::<Result<_, _>>()?;
    let s0 = bl.proper_transform(&s.basis(0), &vec![0; k])?;
    let curve = bl.pullback(&branch)?;

    let first = contraction(&fibers)?;
    let s0_image = first.push(&s0)?.class;
    let contracted_section_square = s0_image.self_intersection();
    let curve_image = first.push(&curve)?.class;

    let second = contraction(std::slice::from_ref(&s0_image))?;
    let pushed = second.push(&curve_image)?;
    let h = s0_image.clone() + bl.pullback(&s.basis(1))?;
    debug_assert_eq!(h.self_intersection(), rat(1));
    let plane_degree = intersect(&pushed.class, &h)?;
    let plane_multiplicity = pushed.multiplicities[0].clone();
    let mult_u32 = plane_multiplicity.to_integer().try_into().unwrap_or(u32::MAX);

    Ok(FamilyInvariants {
        n,
        branch,
        canonical,
        canonical_ample,
        volume,
        branch_genus,
        contracted_section_square,
        plane_degree,
        plane_multiplicity,
        singularity: canonical_singularity_flag(mult_u32),
    })
}

/// Canonical class of the double cover of ℙ(1,1,2) branched in weighted
/// degree `2m`, computed on the resolution 𝔽₂ where the branch class is `m·S∞`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedPlaneCover {
    pub m: u32,
    pub canonical: DivisorClass,
    pub k_dot_fiber: BigRational,
    pub k_dot_section: BigRational,
}

pub fn weighted_plane_cover(m: u32) -> Result<WeightedPlaneCover, SurfError> {
    let s = weighted_plane_112();
    let l = section_at_infinity(&s)?.scale(&BigRational::new((m as i64).into(), 2.into()));
    let (canonical, _) = double_cover_canonical(&l);
    let k_dot_fiber = intersect(&canonical, &s.basis(1))?;
    let k_dot_section = intersect(&canonical, &section_at_infinity(&s)?)?;
    debug_assert_eq!(canonical_class(&s).self_intersection(), rat(8));
    Ok(WeightedPlaneCover {
        m,
        canonical,
        k_dot_fiber,
        k_dot_section,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_values() {
        for n in 2..=20u32 {
            let f = hirzebruch_family(n).unwrap();
            let ni = n as i64;
            assert_eq!(f.volume, rat(16 * (ni - 1)));
            assert_eq!(f.branch_genus, rat(28 * ni - 7));
            assert_eq!(f.plane_degree, rat(8 * ni));
            assert_eq!(f.plane_multiplicity, rat(8 * (ni - 1)));
            assert_eq!(f.contracted_section_square, rat(-1));
            assert_eq!(f.canonical_ample, n > 2);
            assert_eq!(f.singularity, SingularityFlag::NotCanonical);
        }
        assert!(hirzebruch_family(1).is_err());
    }

    #[test]
    fn complete_intersections() {
        assert_eq!(ci_canonical(&[(1, 1), (2, 2)]).canonical, (0, 0));
        assert!(ci_canonical(&[(1, 1), (2, 2)]).k3_type);
        let threefold = ci_canonical(&[(1, 1)]);
        assert_eq!((threefold.canonical, threefold.dimension, threefold.k3_type), ((-2, -2), 3, false));
        let k = ci_canonical(&[(3, 3)]);
        assert_eq!(k.canonical, (0, 0));
        assert!(!k.k3_type);
    }

    #[test]
    fn singularity_flags() {
        assert_eq!(canonical_singularity_flag(1), SingularityFlag::PossiblyCanonical);
        assert_eq!(canonical_singularity_flag(3), SingularityFlag::PossiblyCanonical);
        assert_eq!(canonical_singularity_flag(8), SingularityFlag::NotCanonical);
    }

    #[test]
    fn weighted_plane_covers() {
        let k3 = weighted_plane_cover(4).unwrap();
        assert!(k3.canonical.coeffs().iter().all(|c| *c == rat(0)));
        let ruled = weighted_plane_cover(2).unwrap();
        assert!(ruled.k_dot_fiber < rat(0));
        assert!(ruled.k_dot_section < rat(0));
    }
}
