use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exactmath::{Field, Polynomial, RatFunc};

use super::quartic::{QuarticPoint, QuarticTransform};
use super::weierstrass::EcPoint;
use super::EllError;

/// `n·G` for one multiplier, in both coordinate systems.
#[derive(Clone, Debug, PartialEq)]
pub struct Section<F> {
    pub multiple: i64,
    pub point: EcPoint<F>,
    pub quartic_point: QuarticPoint<F>,
}

/// `n·G` for every `n` in `multipliers`, where `G` is the image of `generator`.
pub fn sections_for<F: Field>(
    t: &QuarticTransform<F>,
    generator: &QuarticPoint<F>,
    multipliers: impl IntoIterator<Item = i64>,
) -> Result<Vec<Section<F>>, EllError> {
    let g = t.forward(generator).map_err(|_| EllError::GeneratorMissing)?;
    if g.is_identity() {
        return Err(EllError::GeneratorMissing);
    }
    let e = t.curve();
    if !e.contains(&g) {
        return Err(EllError::NotOnCurve);
    }
    let multipliers: Vec<i64> = multipliers.into_iter().collect();
    // positive multiples by repeated addition, shared across all requested n
    let top = multipliers.iter().map(|n| n.unsigned_abs()).max().unwrap_or(0) as usize;
    let mut positive = vec![EcPoint::Identity];
    for k in 1..=top {
        positive.push(e.add_unchecked(&positive[k - 1], &g));
    }
    multipliers
        .into_iter()
        .map(|n| {
            let p = &positive[n.unsigned_abs() as usize];
            let point = if n < 0 { e.negate(p) } else { p.clone() };
            let quartic_point = t.inverse(&point)?;
            Ok(Section {
                multiple: n,
                point,
                quartic_point,
            })
        })
        .collect()
}

/// `{n·G : 1 ≤ n ≤ count}`.
pub fn generate_sections<F: Field>(
    t: &QuarticTransform<F>,
    generator: &QuarticPoint<F>,
    count: usize,
) -> Result<Vec<Section<F>>, EllError> {
    // successive additions reuse the previous multiple
    let g = t.forward(generator).map_err(|_| EllError::GeneratorMissing)?;
    if g.is_identity() {
        return Err(EllError::GeneratorMissing);
    }
    let e = t.curve();
    let mut out = Vec::with_capacity(count);
    let mut acc = EcPoint::Identity;
    for n in 1..=count {
        acc = e.add_unchecked(&acc, &g);
        out.push(Section {
            multiple: n as i64,
            point: acc.clone(),
            quartic_point: t.inverse(&acc)?,
        });
    }
    Ok(out)
}

/// A section of the quartic fibration at `t₀`.
pub fn specialize_section(
    t: &QuarticTransform<RatFunc<BigRational>>,
    s: &QuarticPoint<RatFunc<BigRational>>,
    t0: &BigRational,
) -> Result<QuarticPoint<BigRational>, EllError> {
    let fiber = t.quartic().specialize(t0)?;
    let p = s.try_map(|c| c.eval(t0).map_err(|_| EllError::Pole(t0.clone())))?;
    if !fiber.contains(&p) {
        return Err(EllError::NotOnFiber);
    }
    Ok(p)
}

/// First `u₀ ∈ {0, 1, −1, 2, −2, …}` with `|u₀| ≤ search` for which `g(u₀)`
/// is a square in ℚ(t), with the root of positive leading coefficient.
pub fn find_constant_section(
    g: &Polynomial<RatFunc<BigRational>>,
    search: i64,
) -> Option<(BigRational, RatFunc<BigRational>)> {
    let candidates = std::iter::once(0).chain((1..=search).flat_map(|k| [k, -k]));
    for k in candidates {
        let u0 = BigRational::from_integer(k.into());
        let value = g.eval(&RatFunc::constant(u0.clone()));
        if value.is_zero() {
            continue;
        }
        if let Some(v) = value.sqrt() {
            let negative = v.numer().leading().is_some_and(|c| c.is_negative());
            return Some((u0, if negative { -v } else { v }));
        }
    }
    None
}
