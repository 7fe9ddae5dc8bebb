use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactmath::{rat, MultiPoly, Polynomial, RatFunc};

use super::{CoverError, CyclicCoverModel};

/// Double cover of ℙ² branched along the image of a quadric under projection
/// from a point `p` off it.
///
/// Coordinates are changed so that `p = [0:0:0:1]`; then
/// `q = a·w² + b·w + c` with `a = q(p) ≠ 0`, and the fiber of the projection
/// over `[x:y:z]` is cut out by a quadratic in `w` with discriminant `b² − 4ac`.
pub fn project_from_point(q: &MultiPoly, p: &[BigRational]) -> Result<CyclicCoverModel, CoverError> {
    if q.nvars() != 4 || p.len() != 4 {
        return Err(CoverError::InvalidModel("need a quadric in four variables and a point of P^3".into()));
    }
    if q.degree() != Some(2) || !q.is_homogeneous() {
        return Err(CoverError::InvalidModel("q is not a quadratic form".into()));
    }
    let a = q.eval(p);
    if a.is_zero() {
        return Err(CoverError::PointOnQuadric);
    }
    let pivot = (0..4).rev().find(|&i| !p[i].is_zero()).ok_or(CoverError::InvalidModel("zero point".into()))?;
    // old = M·new; the last new coordinate is the projection direction p
    let mut m = vec![vec![BigRational::zero(); 4]; 4];
    for (col, j) in (0..4).filter(|&j| j != pivot).enumerate() {
        m[j][col] = BigRational::one();
    }
    for (i, row) in m.iter_mut().enumerate() {
        row[3] = p[i].clone();
    }
    let moved = q.linear_substitute(&m)?;
    let parts = moved.coefficients_in(3);
    let xyz = ["x", "y", "z"];
    let part = |k: u32| -> Result<MultiPoly, CoverError> {
        Ok(match parts.get(&k) {
            Some(c) => c.with_vars(&xyz)?,
            None => MultiPoly::zero_in(&xyz),
        })
    };
    let (lead, b, c) = (part(2)?, part(1)?, part(0)?);
    debug_assert_eq!(lead.coefficient(&[0, 0, 0]), a);
    let four_a = MultiPoly::constant_in(&xyz, a * rat(4));
    let branch = b.clone() * b - four_a * c;
    if branch.is_zero() {
        return Err(CoverError::DegenerateBranch);
    }
    CyclicCoverModel::new(2, 2, 1, branch)
}

/// A ternary quadratic form defines a smooth conic iff its Gram matrix is invertible.
pub fn conic_is_smooth(form: &MultiPoly) -> bool {
    if form.nvars() != 3 || form.degree() != Some(2) || !form.is_homogeneous() {
        return false;
    }
    let half = BigRational::new(1.into(), 2.into());
    let mut g = vec![vec![BigRational::zero(); 3]; 3];
    for (e, c) in form.terms() {
        let idx: Vec<usize> = (0..3).flat_map(|i| std::iter::repeat_n(i, e[i] as usize)).collect();
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            g[i][i] = c.clone();
        } else {
            g[i][j] = c * &half;
            g[j][i] = c * &half;
        }
    }
    let det = &g[0][0] * (&g[1][1] * &g[2][2] - &g[1][2] * &g[2][1])
        - &g[0][1] * (&g[1][0] * &g[2][2] - &g[1][2] * &g[2][0])
        + &g[0][2] * (&g[1][0] * &g[2][1] - &g[1][1] * &g[2][0]);
    !det.is_zero()
}

/// Cover of the weighted plane ℙ(1,1,2) obtained by quotienting `z ↦ −z`.
#[derive(Clone, Debug, PartialEq)]
pub struct DescendedModel {
    pub e: u32,
    pub m: u32,
    /// `s̄(x, y, u)` with `s(x, y, z) = s̄(x, y, z²)`.
    pub s: MultiPoly,
    pub weights: [u32; 3],
    pub weighted_degree: u32,
}

pub fn descend_involution(c: &CyclicCoverModel) -> Result<DescendedModel, CoverError> {
    if c.r() != 2 {
        return Err(CoverError::Unsupported("descent is defined for covers of P^2".into()));
    }
    if !c.s().is_even_in(2) {
        return Err(CoverError::OddPower);
    }
    let s = c.s().halve_exponent(2, "u")?.with_vars(&["x", "y", "u"])?;
    let weights = [1, 1, 2];
    let weighted_degree = s.weighted_degree(&weights).expect("descends from a homogeneous form");
    Ok(DescendedModel {
        e: c.e(),
        m: c.m(),
        s,
        weights,
        weighted_degree,
    })
}

/// Affine model `vᵉ = g(u)` of the generic fiber of `[x:y:u] ↦ [x:y]`,
/// with `t = x/y`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenericFiber {
    pub e: u32,
    pub g: Polynomial<RatFunc<BigRational>>,
}

impl fmt::Display for GenericFiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v^{} = {}", self.e, self.g.display_with("u"))
    }
}

pub fn generic_fiber(model: &DescendedModel) -> Result<GenericFiber, CoverError> {
    if model.s.nvars() != 3 || model.weights != [1, 1, 2] {
        return Err(CoverError::NotFibered);
    }
    let deg_u = model.s.degree_in(2) as usize;
    let mut coeffs = vec![Polynomial::<BigRational>::zero(); deg_u + 1];
    for (e, c) in model.s.terms() {
        let k = e[2] as usize;
        coeffs[k] = coeffs[k].clone() + Polynomial::monomial(c.clone(), e[0] as usize);
    }
    let g = Polynomial::new(coeffs.into_iter().map(RatFunc::from_poly).collect());
    if g.degree().unwrap_or(0) == 0 {
        return Err(CoverError::NotFibered);
    }
    Ok(GenericFiber { e: model.e, g })
}
