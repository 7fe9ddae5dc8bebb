//! Hermite normal form over ℤ and norms of fractional ideals of quadratic orders.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::quadfield::QuadFieldElement;
use super::{ExactError, SquarefreeInt};

/// Row-style Hermite normal form. Zero rows are dropped; pivots are positive
/// and entries above each pivot are reduced into `[0, pivot)`.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row == m.len() {
            break;
        }
        // Euclid on the column, carrying the full rows along
        while let Some(min) = (pivot_row..m.len())
            .filter(|&i| !m[i][col].is_zero())
            .min_by(|&i, &j| m[i][col].abs().cmp(&m[j][col].abs()))
        {
            m.swap(pivot_row, min);
            let pivot = m[pivot_row].clone();
            let mut done = true;
            for row in m.iter_mut().skip(pivot_row + 1) {
                if row[col].is_zero() {
                    continue;
                }
                let q = row[col].div_floor(&pivot[col]);
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &q * p;
                }
                done &= row[col].is_zero();
            }
            if done {
                break;
            }
        }
        if m[pivot_row][col].is_zero() {
            continue;
        }
        if m[pivot_row][col].is_negative() {
            for x in m[pivot_row].iter_mut() {
                *x = -x.clone();
            }
        }
        let pivot = m[pivot_row].clone();
        for row in m.iter_mut().take(pivot_row) {
            let q = row[col].div_floor(&pivot[col]);
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x -= &q * p;
            }
        }
        pivot_row += 1;
    }
    m.truncate(pivot_row);
    m
}

/// Coordinates of `x` in the basis `(1, ω)` of the maximal order.
///
/// `ω = (1+√d)/2` for `d ≡ 1 (mod 4)`, else `ω = √d`.
pub fn integral_basis_coords(x: &QuadFieldElement) -> (BigRational, BigRational) {
    if d_is_one_mod_four(x.d()) {
        let two = BigRational::from_integer(2.into());
        (x.a() - x.b(), x.b() * two)
    } else {
        (x.a().clone(), x.b().clone())
    }
}

fn d_is_one_mod_four(d: &SquarefreeInt) -> bool {
    d.value().mod_floor(&BigInt::from(4)).is_one()
}

/// `(t, c)` with `ω² = t·ω + c`.
fn omega_relation(d: &SquarefreeInt) -> (BigInt, BigInt) {
    if d_is_one_mod_four(d) {
        (BigInt::one(), (d.value() - 1) / 4)
    } else {
        (BigInt::zero(), d.value().clone())
    }
}

/// Absolute norm of the fractional ideal generated by `generators`.
///
/// The ℤ-module spanned by `g` and `g·ω` for all generators is the ideal
/// itself; after clearing a common denominator `D` its index in the maximal
/// order is the HNF determinant, and the norm is `det / D²`. Over `d = 1`
/// the ideal is `(gcd)` in ℤ and the norm is that rational gcd.
pub fn module_norm_hnf(generators: &[QuadFieldElement]) -> Result<BigRational, ExactError> {
    let nonzero: Vec<&QuadFieldElement> = generators.iter().filter(|g| !num_traits::Zero::is_zero(*g)).collect();
    let Some(first) = nonzero.first() else {
        return Err(ExactError::ZeroInput("module_norm_hnf"));
    };
    let d = nonzero
        .iter()
        .find(|g| !g.is_rational())
        .map_or_else(|| first.d().clone(), |g| g.d().clone());
    for g in &nonzero {
        if g.d() != &d && !g.is_rational() {
            return Err(ExactError::FieldMismatch(g.d().clone(), d));
        }
    }

    if d.is_one() {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for g in &nonzero {
            num = num.gcd(g.a().numer());
            den = den.lcm(g.a().denom());
        }
        // gcd of p_i/q_i is gcd(p_i)/lcm(q_i) once each fraction is reduced
        return Ok(BigRational::new(num, den));
    }

    let coords: Vec<(BigRational, BigRational)> =
        nonzero.iter().map(|g| integral_basis_coords(g)).collect();
    let denom = coords.iter().fold(BigInt::one(), |acc, (u, v)| {
        acc.lcm(u.denom()).lcm(v.denom())
    });
    let scale = BigRational::from_integer(denom.clone());
    let (t, c) = omega_relation(&d);
    let mut rows = Vec::with_capacity(2 * coords.len());
    for (u, v) in coords {
        let u = (u * &scale).to_integer();
        let v = (v * &scale).to_integer();
        // (u + vω)·ω = v·c + (u + v·t)·ω
        rows.push(vec![&v * &c, &u + &v * &t]);
        rows.push(vec![u, v]);
    }
    let h = hermite_normal_form(&rows);
    debug_assert_eq!(h.len(), 2, "a nonzero ideal has rank 2");
    let det = &h[0][0] * &h[1][1];
    Ok(BigRational::new(det.abs(), &denom * &denom))
}
