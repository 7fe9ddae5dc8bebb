//! Reference computations written without the library, shared by the suites.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Squarefree kernel by trial division, sign kept.
pub fn squarefree_kernel(n: i64) -> i64 {
    assert!(n != 0);
    let mut m = n.abs();
    let mut k = 1;
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e % 2 == 1 {
            k *= p;
        }
        p += 1;
    }
    k * m * n.signum()
}

/// Discriminant of ℚ(√d) for squarefree `d ≠ 1`.
pub fn field_discriminant(d: i64) -> i64 {
    if d.rem_euclid(4) == 1 {
        d
    } else {
        4 * d
    }
}

pub fn is_square(n: i64) -> bool {
    if n < 0 {
        return false;
    }
    let r = (n as f64).sqrt().round() as i64;
    (r - 1..=r + 1).any(|s| s >= 0 && s * s == n)
}

/// `ln M(ax² + bx + c)` from floating complex roots.
pub fn log_mahler_measure(a: i64, b: i64, c: i64) -> f64 {
    let (a, b, c) = (a as f64, b as f64, c as f64);
    let disc = b * b - 4.0 * a * c;
    let moduli = if disc < 0.0 {
        let m = (c / a).abs().sqrt();
        [m, m]
    } else {
        let s = disc.sqrt();
        let r1 = (-b - b.signum() * s) / (2.0 * a);
        let r1 = if b == 0.0 { s / (2.0 * a) } else { r1 };
        let r2 = c / (a * r1);
        [r1.abs(), r2.abs()]
    };
    a.abs().ln() + moduli.iter().map(|m| m.max(1.0).ln()).sum::<f64>()
}

/// Primitive irreducible `ax² + bx + c`, `a > 0`, with `|a|, |b|, |c| ≤ bound`.
pub fn irreducible_quadratics(bound: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for a in 1..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                if c != 0 && gcd(gcd(a, b), c) == 1 && !is_square(b * b - 4 * a * c) {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// Closed quadratic points of ℙ¹ with multiplicative height at most `h`:
/// minimal polynomials with `M(f) ≤ h²`. Any such `f` has `|a|, |c| ≤ M` and
/// `|b| ≤ 2M`; the scan covers twice that box.
pub fn quadratic_points_of_line(h: f64) -> usize {
    let m = (h * h + 1e-9).floor() as i64;
    let mut count = 0;
    for a in 1..=2 * m {
        for b in -4 * m..=4 * m {
            for c in -2 * m..=2 * m {
                if c == 0 || gcd(gcd(a, b), c) != 1 || is_square(b * b - 4 * a * c) {
                    continue;
                }
                if log_mahler_measure(a, b, c) <= 2.0 * h.ln() + 1e-9 {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Rational points of ℙʳ with coprime integer coordinates bounded by `b`.
pub fn rational_points(r: usize, b: i64) -> usize {
    let side = (2 * b + 1) as usize;
    let total = side.pow(r as u32 + 1);
    let mut count = 0;
    for idx in 0..total {
        let mut i = idx;
        let mut g = 0;
        for _ in 0..=r {
            let x = (i % side) as i64 - b;
            i /= side;
            g = gcd(g, x);
        }
        if g == 1 {
            count += 1;
        }
    }
    // ±v name the same point
    count / 2
}

/// Textbook chord-and-tangent addition on a long Weierstrass curve.
pub fn add(
    a: &[BigRational; 5],
    p: Option<(BigRational, BigRational)>,
    q: Option<(BigRational, BigRational)>,
) -> Option<(BigRational, BigRational)> {
    let [a1, a2, a3, a4, a6] = a;
    let _ = a6;
    let (x1, y1) = match p {
        None => return q,
        Some(p) => p,
    };
    let (x2, y2) = match q {
        None => return Some((x1, y1)),
        Some(q) => q,
    };
    let two = BigRational::from_integer(2.into());
    let three = BigRational::from_integer(3.into());
    let lambda = if x1 != x2 {
        (&y2 - &y1) / (&x2 - &x1)
    } else {
        let neg_y2 = -&y2 - a1 * &x2 - a3;
        if y1 == neg_y2 {
            return None;
        }
        let den = &two * &y1 + a1 * &x1 + a3;
        (&three * &x1 * &x1 + &two * a2 * &x1 + a4 - a1 * &y1) / den
    };
    let nu = &y1 - &lambda * &x1;
    let x3 = &lambda * &lambda + a1 * &lambda - a2 - &x1 - &x2;
    let y3 = -(&lambda + a1) * &x3 - &nu - a3;
    Some((x3, y3))
}

pub fn on_curve(a: &[BigRational; 5], p: &Option<(BigRational, BigRational)>) -> bool {
    let [a1, a2, a3, a4, a6] = a;
    match p {
        None => true,
        Some((x, y)) => y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6,
    }
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn is_square_big(n: &BigInt) -> bool {
    use num_traits::Signed;
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}
