//! Cyclic covers `wᵉ = s(x₀,…,x_r)` of projective space: fiber classification,
//! threshold arithmetic, point enumeration, the height–discriminant audit and
//! the explicit constructions (projection of a quadric, involution descent).

mod audit;
mod construct;
mod enumerate;
mod fiber;
mod smooth;

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::integer::divisors;
use crate::exactmath::multipoly::SerializedTerm;
use crate::exactmath::{ExactError, MultiPoly};
use crate::heights::HeightError;

pub use audit::{
    audit_point, empirical_constant, row_is_consistent, sort_rows, validate_audit_args, vojta_audit,
    AuditRow,
};
pub use construct::{
    conic_is_smooth, descend_involution, generic_fiber, project_from_point, DescendedModel,
    GenericFiber,
};
pub use enumerate::{
    enumerate_points, enumerate_shard, shard_keys, Enumerator, FieldKind, ShardKey,
};
pub use fiber::{classify_fiber, classify_fiber_quadratic, FiberClass, FiberKind};
pub use smooth::{jacobian_spot_check, SmoothnessReport};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoverError {
    #[error("invalid cover: {0}")]
    InvalidModel(String),
    #[error("malformed cover file: {0}")]
    Parse(String),
    #[error("point has dimension {got}, cover lives over P^{want}")]
    DimensionMismatch { got: usize, want: usize },
    #[error("expected a {0} base point")]
    WrongPointKind(&'static str),
    #[error("height bound must be positive, got {0}")]
    NonpositiveBound(f64),
    #[error("epsilon must lie in [0, 1), got {0}")]
    EpsilonOutOfRange(f64),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("point lies on the quadric")]
    PointOnQuadric,
    #[error("branch locus is identically zero")]
    DegenerateBranch,
    #[error("odd power of the involution variable present")]
    OddPower,
    #[error("model is not fibered over [x:y]")]
    NotFibered,
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Height(#[from] HeightError),
}

/// Conventional variable names for the coordinates of ℙʳ.
pub fn coordinate_names(r: usize) -> Vec<String> {
    match r {
        1 => vec!["x".into(), "y".into()],
        2 => vec!["x".into(), "y".into(), "z".into()],
        3 => vec!["x".into(), "y".into(), "z".into(), "w".into()],
        _ => (0..=r).map(|i| format!("x{i}")).collect(),
    }
}

/// `wᵉ = s(x₀,…,x_r)` with `s` homogeneous of degree `e·m`.
#[derive(Clone, Debug, PartialEq)]
pub struct CyclicCoverModel {
    r: usize,
    e: u32,
    m: u32,
    s: MultiPoly,
}

/// On-disk form of a cover.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverFile {
    pub r: i64,
    pub e: i64,
    pub m: i64,
    pub s: Vec<SerializedTerm>,
}

impl CyclicCoverModel {
    pub fn new(r: usize, e: u32, m: u32, s: MultiPoly) -> Result<Self, CoverError> {
        if r == 0 {
            return Err(CoverError::InvalidModel("r must be positive".into()));
        }
        if e < 2 {
            return Err(CoverError::InvalidModel(format!("e = {e} < 2")));
        }
        if m == 0 {
            return Err(CoverError::InvalidModel("m must be positive".into()));
        }
        if s.nvars() != r + 1 {
            return Err(CoverError::InvalidModel(format!(
                "s has {} variables, expected {}",
                s.nvars(),
                r + 1
            )));
        }
        if s.is_zero() {
            return Err(CoverError::InvalidModel("s is zero".into()));
        }
        if !s.is_homogeneous() {
            return Err(CoverError::InvalidModel("s is not homogeneous".into()));
        }
        let deg = s.degree().unwrap();
        if deg != e * m {
            return Err(CoverError::InvalidModel(format!(
                "deg s = {deg}, expected e*m = {}",
                e * m
            )));
        }
        Ok(CyclicCoverModel { r, e, m, s })
    }

    pub fn from_file(f: &CoverFile) -> Result<Self, CoverError> {
        let (r, e, m) = match (usize::try_from(f.r), u32::try_from(f.e), u32::try_from(f.m)) {
            (Ok(r), Ok(e), Ok(m)) => (r, e, m),
            _ => return Err(CoverError::InvalidModel("r, e, m must be nonnegative".into())),
        };
        let names = coordinate_names(r);
        let vars: Vec<&str> = names.iter().map(String::as_str).collect();
        let s = MultiPoly::from_serialized(&vars, &f.s)?;
        Self::new(r, e, m, s)
    }

    pub fn from_json(text: &str) -> Result<Self, CoverError> {
        let f: CoverFile = serde_json::from_str(text).map_err(|e| CoverError::Parse(e.to_string()))?;
        Self::from_file(&f)
    }

    pub fn to_file(&self) -> Result<CoverFile, CoverError> {
        Ok(CoverFile {
            r: self.r as i64,
            e: self.e as i64,
            m: self.m as i64,
            s: self.s.to_serialized()?,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn s(&self) -> &MultiPoly {
        &self.s
    }
}

/// `K_X = π*𝒪((e−1)m − r − 1)`.
pub fn canonical_multiplier(c: &CyclicCoverModel) -> i64 {
    (c.e as i64 - 1) * c.m as i64 - c.r as i64 - 1
}

/// Least `m` with `m > (r + 2d − 1)/(e − 1)`.
pub fn vojta_threshold(r: u32, d: u32, e: u32) -> u32 {
    assert!(e >= 2, "cover degree must be at least 2");
    (r + 2 * d - 1) / (e - 1) + 1
}

/// Divisors of `gcd(d, e)`.
pub fn residue_degree_options(d: u32, e: u32) -> BTreeSet<u32> {
    divisors(d.gcd(&e) as u64).into_iter().map(|k| k as u32).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(r: usize, e: u32, m: u32) -> CyclicCoverModel {
        let names = coordinate_names(r);
        let vars: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut exps = vec![0u32; r + 1];
        exps[0] = e * m;
        let mut other = vec![0u32; r + 1];
        other[r] = e * m;
        let s = MultiPoly::from_int_terms(&vars, &[(1, &exps), (1, &other)]);
        CyclicCoverModel::new(r, e, m, s).unwrap()
    }

    #[test]
    fn multipliers() {
        assert_eq!(canonical_multiplier(&model(1, 2, 5)), 3);
        assert_eq!(canonical_multiplier(&model(2, 2, 6)), 3);
        assert_eq!(canonical_multiplier(&model(2, 2, 1)), -2);
    }

    #[test]
    fn thresholds() {
        assert_eq!(vojta_threshold(1, 2, 2), 5);
        assert_eq!(vojta_threshold(2, 2, 2), 6);
        assert_eq!(vojta_threshold(2, 3, 3), 4);
        // exact division still needs strict inequality
        assert_eq!(vojta_threshold(1, 1, 3), 2);
    }

    #[test]
    fn residue_options() {
        assert_eq!(residue_degree_options(3, 2), BTreeSet::from([1]));
        assert_eq!(residue_degree_options(2, 2), BTreeSet::from([1, 2]));
        assert_eq!(residue_degree_options(6, 4), BTreeSet::from([1, 2]));
    }

    #[test]
    fn file_round_trip_and_validation() {
        let c = model(2, 2, 3);
        let json = serde_json::to_string(&c.to_file().unwrap()).unwrap();
        assert_eq!(CyclicCoverModel::from_json(&json).unwrap(), c);
        let bad = r#"{"r":1,"e":2,"m":3,"s":[{"num":1,"den":1,"exps":[5,0]},{"num":1,"den":1,"exps":[0,6]}]}"#;
        assert!(matches!(CyclicCoverModel::from_json(bad), Err(CoverError::InvalidModel(_))));
        let wrong_deg = r#"{"r":1,"e":2,"m":3,"s":[{"num":1,"den":1,"exps":[4,0]}]}"#;
        assert!(CyclicCoverModel::from_json(wrong_deg).is_err());
        assert!(matches!(CyclicCoverModel::from_json("{"), Err(CoverError::Parse(_))));
    }
}
