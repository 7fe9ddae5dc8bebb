mod oracle;

use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quadpoints_core::ellfib::{
    ec_add, monic_biquadratic, octic_fiber_quartic, quartic_to_weierstrass, sections_for, specialize_point,
    EcPoint, QuarticModel, QuarticPoint, WeierstrassModel,
};
use quadpoints_core::exactmath::{rat, Polynomial, RatFunc};

type Q = BigRational;

fn to_pair(p: &EcPoint<Q>) -> Option<(Q, Q)> {
    p.coords().map(|(x, y)| (x.clone(), y.clone()))
}

/// A smooth curve through two random integral points with distinct `x`.
fn random_curve(rng: &mut ChaCha8Rng) -> ([Q; 5], EcPoint<Q>, EcPoint<Q>) {
    loop {
        let (a1, a2, a3) = (rng.gen_range(-3..=3i64), rng.gen_range(-3..=3i64), rng.gen_range(-3..=3i64));
        let (x0, y0, x1, y1) = (
            rng.gen_range(-6..=6i64),
            rng.gen_range(-9..=9i64),
            rng.gen_range(-6..=6i64),
            rng.gen_range(-9..=9i64),
        );
        if x0 == x1 {
            continue;
        }
        // a4·x + a6 = y² + a1·xy + a3·y − x³ − a2·x² at both points
        let rhs = |x: i64, y: i64| q(y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x);
        let a4 = (rhs(x1, y1) - rhs(x0, y0)) / q(x1 - x0);
        let a6 = rhs(x0, y0) - &a4 * q(x0);
        let coeffs = [q(a1), q(a2), q(a3), a4, a6];
        let [c1, c2, c3, c4, c6] = coeffs.clone();
        if WeierstrassModel::new(c1, c2, c3, c4, c6).is_ok() {
            return (coeffs, EcPoint::affine(q(x0), q(y0)), EcPoint::affine(q(x1), q(y1)));
        }
    }
}

fn q(n: i64) -> Q {
    oracle::q(n)
}

fn model(c: &[Q; 5]) -> WeierstrassModel<Q> {
    let [a1, a2, a3, a4, a6] = c.clone();
    WeierstrassModel::new(a1, a2, a3, a4, a6).unwrap()
}

#[test]
fn group_axioms_on_seeded_curves() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let (c, p, r) = random_curve(&mut rng);
        let e = model(&c);
        assert!(e.contains(&p) && e.contains(&r));
        let q2 = e.add_unchecked(&p, &p);
        let s = ec_add(&e, &p, &r).unwrap();

        // agreement with the textbook formulas
        assert_eq!(to_pair(&s), oracle::add(&c, to_pair(&p), to_pair(&r)));
        assert_eq!(to_pair(&q2), oracle::add(&c, to_pair(&p), to_pair(&p)));

        for x in [&s, &q2] {
            assert!(e.contains(x));
            assert!(oracle::on_curve(&c, &to_pair(x)));
        }
        assert_eq!(ec_add(&e, &r, &p).unwrap(), s);
        let left = e.add_unchecked(&e.add_unchecked(&p, &r), &q2);
        let right = e.add_unchecked(&p, &e.add_unchecked(&r, &q2));
        assert_eq!(left, right);
        assert!(e.add_unchecked(&p, &e.negate(&p)).is_identity());
        assert_eq!(e.add_unchecked(&p, &EcPoint::Identity), p);
        assert_eq!(e.multiple(3, &p).unwrap(), e.add_unchecked(&q2, &p));
        assert_eq!(e.multiple(-2, &p).unwrap(), e.negate(&q2));
    }
}

#[test]
fn specialization_commutes_with_addition() {
    let t = quartic_to_weierstrass(&octic_fiber_quartic()).unwrap();
    let generator = QuarticPoint::affine(RatFunc::constant(rat(1)), RatFunc::from_poly(Polynomial::monomial(rat(1), 4)));
    let sections = sections_for(&t, &generator, [1, -1, 2, -2, 3]).unwrap();
    let e = t.curve();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 100 {
        let (i, j) = (rng.gen_range(0..sections.len()), rng.gen_range(0..sections.len()));
        let t0 = BigRational::new(rng.gen_range(-12..=12i64).into(), rng.gen_range(1..=5i64).into());
        let (p, r) = (&sections[i].point, &sections[j].point);
        let sum = e.add_unchecked(p, r);
        let (Ok(fiber), Ok(ps), Ok(rs), Ok(sums)) =
            (e.specialize(&t0), specialize_point(e, p, &t0), specialize_point(e, r, &t0), specialize_point(e, &sum, &t0))
        else {
            // singular fiber or a pole of one of the sections
            continue;
        };
        let c = [fiber.a1.clone(), fiber.a2.clone(), fiber.a3.clone(), fiber.a4.clone(), fiber.a6.clone()];
        assert_eq!(fiber.add_unchecked(&ps, &rs), sums, "t0 = {t0}");
        assert_eq!(to_pair(&sums), oracle::add(&c, to_pair(&ps), to_pair(&rs)));
        checked += 1;
    }
}

#[test]
fn round_trips_are_identities() {
    assert!(quartic_to_weierstrass(&octic_fiber_quartic()).unwrap().verify_round_trip());
    for c in [-7i64, -2, 3, 255] {
        let t = quartic_to_weierstrass(&monic_biquadratic(rat(c)).unwrap()).unwrap();
        assert!(t.verify_round_trip());
    }
}

#[test]
fn floating_point_instantiation_tracks_exact_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let (c, p, r) = random_curve(&mut rng);
        let exact = model(&c).add_unchecked(&p, &r);
        let f = |x: &Q| num_traits::ToPrimitive::to_f64(x).unwrap();
        let [a1, a2, a3, a4, a6] = c.each_ref().map(f);
        let e = WeierstrassModel::new(a1, a2, a3, a4, a6).unwrap();
        let approx = e.add_unchecked(&p.map(f), &r.map(f));
        match (exact.coords(), approx.coords()) {
            (Some((x, y)), Some((xa, ya))) => {
                assert!((f(x) - xa).abs() <= 1e-6 * (1.0 + f(x).abs()));
                assert!((f(y) - ya).abs() <= 1e-6 * (1.0 + f(y).abs()));
            }
            (None, None) => {}
            other => panic!("mismatch {other:?}"),
        }
    }
}

proptest! {
    #[test]
    fn quartics_with_a_rational_point_round_trip(
        a4 in 1i64..5, a3 in -5i64..5, a2 in -5i64..5, a1 in -5i64..5, u0 in -3i64..3, v0 in 1i64..6
    ) {
        // a0 puts (u0, v0) on v² = a4u⁴ + … + a0
        let partial = a4 * u0.pow(4) + a3 * u0.pow(3) + a2 * u0 * u0 + a1 * u0;
        let a0 = v0 * v0 - partial;
        let f = Polynomial::new(vec![rat(a0), rat(a1), rat(a2), rat(a3), rat(a4)]);
        let Ok(model) = QuarticModel::new(f, QuarticPoint::affine(rat(u0), rat(v0))) else {
            return Ok(());
        };
        let t = quartic_to_weierstrass(&model).unwrap();
        prop_assert!(t.verify_round_trip());
        prop_assert!(t.forward(&QuarticPoint::affine(rat(u0), rat(v0))).unwrap().is_identity());
        // the point with the opposite v maps to a finite point on the curve
        let other = t.forward(&QuarticPoint::affine(rat(u0), rat(-v0))).unwrap();
        prop_assert!(t.curve().contains(&other));
        prop_assert_eq!(t.inverse(&other).unwrap(), QuarticPoint::affine(rat(u0), rat(-v0)));
    }
}
