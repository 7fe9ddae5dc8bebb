//! Worked examples: torsion, the Hirzebruch family, thresholds and the
//! generic fibers, each against an independent recomputation.

mod oracle;

use std::time::Instant;

use num_rational::BigRational;

use quadpoints_core::covers::{
    conic_is_smooth, descend_involution, generic_fiber, project_from_point, vojta_threshold, CyclicCoverModel,
};
use quadpoints_core::ellfib::{is_torsion, octic_fiber_quartic, quartic_to_weierstrass, EcPoint, QuarticPoint};
use quadpoints_core::exactmath::{rat, MultiPoly, Polynomial, RatFunc};
use quadpoints_core::surfgeom::{
    ci_canonical, hirzebruch, hirzebruch_family, is_ample, SingularityFlag,
};

type Q = BigRational;

fn poly_t(coeffs: &[i64]) -> RatFunc<Q> {
    RatFunc::from_poly(Polynomial::from_i64s(coeffs))
}

#[test]
fn section_at_two_has_infinite_order() {
    let start = Instant::now();
    let fiber = octic_fiber_quartic().specialize(&rat(2)).unwrap();
    assert_eq!(fiber.f(), &Polynomial::from_i64s(&[255, 0, 0, 0, 1]));
    let t = quartic_to_weierstrass(&fiber).unwrap();
    let p = t.forward(&QuarticPoint::affine(rat(1), rat(16))).unwrap();
    assert_eq!(p, EcPoint::affine(rat(34), rat(68)));
    let report = is_torsion(t.curve(), &p).unwrap();
    assert!(!report.torsion);
    assert_eq!(report.order, None);
    assert!(report.nonintegral_multiple.is_some());

    // y² = x³ − 1020x: the oracle doubles by hand and sees a non-integral x at 4P
    let c = [rat(0), rat(0), rat(0), rat(-1020), rat(0)];
    let mut acc = Some((rat(34), rat(68)));
    let mut multiples = vec![acc.clone()];
    for _ in 1..12 {
        acc = oracle::add(&c, acc, Some((rat(34), rat(68))));
        assert!(acc.is_some(), "oracle found finite order");
        multiples.push(acc.clone());
    }
    assert_eq!(multiples[1].as_ref().unwrap().0, rat(256));
    assert!(multiples.iter().any(|m| !m.as_ref().unwrap().0.is_integer()));
    assert!(start.elapsed().as_secs_f64() < 1.0, "took {:?}", start.elapsed());
}

/// Intersection numbers on 𝔽ₙ in the basis (S₀, F): S₀² = −n, S₀F = 1, F² = 0.
fn dot(n: i64, a: (i64, i64), b: (i64, i64)) -> i64 {
    -n * a.0 * b.0 + a.0 * b.1 + a.1 * b.0
}

#[test]
fn hirzebruch_family_matches_hand_intersection_numbers() {
    let start = Instant::now();
    for n in 2..=20u32 {
        let ni = n as i64;
        let f = hirzebruch_family(n).unwrap();
        // branch 8S₀ + 8nF, canonical −2S₀ − (n+2)F, half-branch 4S₀ + 4nF
        let (b, k) = ((8, 8 * ni), (-2, -(ni + 2)));
        let kx = (k.0 + 4, k.1 + 4 * ni);
        let volume = 2 * dot(ni, kx, kx);
        let genus = (dot(ni, b, b) + dot(ni, k, b)) / 2 + 1;
        assert_eq!(f.volume, rat(volume));
        assert_eq!(f.volume, rat(16 * (ni - 1)));
        assert_eq!(f.branch_genus, rat(genus));
        assert_eq!(f.branch_genus, rat(28 * ni - 7));
        assert_eq!(f.branch.coeffs(), &[rat(b.0), rat(b.1)]);
        assert_eq!(f.canonical.coeffs(), &[rat(2), rat(3 * ni - 2)]);

        let k_class = hirzebruch(n).class(&[2, 3 * ni - 2]).unwrap();
        assert_eq!(is_ample(&k_class).unwrap(), n > 2);
        // ampleness on 𝔽ₙ: positive against both S₀ and F
        assert_eq!(dot(ni, kx, (1, 0)) > 0 && dot(ni, kx, (0, 1)) > 0, n > 2);

        assert_eq!(f.plane_degree, rat(8 * ni));
        assert_eq!(f.plane_multiplicity, rat(8 * (ni - 1)));
        assert_eq!(f.contracted_section_square, rat(-1));
        assert_eq!(f.singularity, SingularityFlag::NotCanonical);
    }
    assert!(start.elapsed().as_secs_f64() < 1.0, "took {:?}", start.elapsed());
}

#[test]
fn thresholds_for_double_covers() {
    assert_eq!(vojta_threshold(1, 2, 2), 5);
    assert_eq!(vojta_threshold(2, 2, 2), 6);
}

#[test]
fn projected_quadric_is_branched_along_a_smooth_conic() {
    let vars = ["x", "y", "z", "w"];
    let sphere = MultiPoly::from_int_terms(
        &vars,
        &[(1, &[2, 0, 0, 0]), (1, &[0, 2, 0, 0]), (1, &[0, 0, 2, 0]), (-1, &[0, 0, 0, 2])],
    );
    let cover = project_from_point(&sphere, &[rat(0), rat(0), rat(0), rat(1)]).unwrap();
    assert_eq!((cover.r(), cover.e(), cover.m()), (2, 2, 1));
    assert_eq!(cover.s().degree(), Some(2));
    assert!(conic_is_smooth(cover.s()));
}

#[test]
fn complete_intersection_has_trivial_canonical_class() {
    let ci = ci_canonical(&[(1, 1), (2, 2)]);
    assert_eq!(ci.canonical, (0, 0));
    assert!(ci.k3_type);
}

fn fermat_minus(m: u32) -> CyclicCoverModel {
    let k = 2 * m;
    let s = MultiPoly::from_int_terms(&["x", "y", "z"], &[(1, &[k, 0, 0]), (-1, &[0, k, 0]), (1, &[0, 0, k])]);
    CyclicCoverModel::new(2, 2, m, s).unwrap()
}

#[test]
fn generic_fibers_are_exact_identities() {
    let g2 = generic_fiber(&descend_involution(&fermat_minus(2)).unwrap()).unwrap().g;
    let one = poly_t(&[1]);
    let zero = poly_t(&[0]);
    assert_eq!(g2, Polynomial::new(vec![poly_t(&[-1, 0, 0, 0, 1]), zero.clone(), one.clone()]));

    let g4 = generic_fiber(&descend_involution(&fermat_minus(4)).unwrap()).unwrap().g;
    let c = poly_t(&[-1, 0, 0, 0, 0, 0, 0, 0, 1]);
    assert_eq!(g4, Polynomial::new(vec![c.clone(), zero.clone(), zero.clone(), zero, one.clone()]));

    // Q_t = (1, t⁴): 1 + t⁸ − 1 = (t⁴)²
    let v = poly_t(&[0, 0, 0, 0, 1]);
    assert_eq!(g4.eval(&one), v.clone() * v.clone());
    assert!(octic_fiber_quartic().contains(&QuarticPoint::affine(one, v)));
}
