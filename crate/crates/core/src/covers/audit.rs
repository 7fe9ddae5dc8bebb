use serde::Serialize;

use crate::exactmath::SquarefreeInt;
use crate::heights::{log_disc, weil_height, ProjectivePoint, MARGINAL_BAND, TOLERANCE};

use super::enumerate::{Enumerator, FieldKind};
use super::fiber::{classify_fiber, classify_fiber_quadratic, FiberKind};
use super::{canonical_multiplier, CoverError, CyclicCoverModel};

/// One base point with its canonical height, discriminant and slack
/// `disc + ε·h_K − h_K`; negative slack means the inequality fails for the
/// row before any additive constant is allowed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditRow {
    pub point_id: String,
    /// Residue field of the points in the fiber.
    pub field_d: SquarefreeInt,
    pub base_height: f64,
    pub canonical_height: f64,
    pub disc: f64,
    pub contracted: bool,
    pub slack: f64,
    pub marginal: bool,
}

/// Preconditions shared by every audit entry point.
pub fn validate_audit_args(c: &CyclicCoverModel, bound: f64, epsilon: f64) -> Result<(), CoverError> {
    if c.e() != 2 {
        return Err(CoverError::Unsupported("the audit needs a double cover".into()));
    }
    if bound.is_nan() || bound <= 0.0 {
        return Err(CoverError::NonpositiveBound(bound));
    }
    if !(0.0..1.0).contains(&epsilon) {
        return Err(CoverError::EpsilonOutOfRange(epsilon));
    }
    Ok(())
}

/// Row for one base point, if its fiber contributes one.
///
/// Quadratic bases with split fiber give non-contracted rows; rational bases
/// with inert fiber give contracted rows. The discriminant is that of the base.
pub fn audit_point(
    c: &CyclicCoverModel,
    p: &ProjectivePoint,
    epsilon: f64,
) -> Result<Option<AuditRow>, CoverError> {
    let (field_d, contracted) = if p.is_rational() {
        match classify_fiber(c, p)?.kind {
            FiberKind::Inert(d) => (d, true),
            _ => return Ok(None),
        }
    } else {
        match classify_fiber_quadratic(c, p)?.kind {
            FiberKind::Split => (p.d().clone(), false),
            _ => return Ok(None),
        }
    };
    let base_height = weil_height(p).value;
    let canonical_height = canonical_multiplier(c) as f64 * base_height;
    let disc = log_disc(p).log_value;
    let slack = disc + epsilon * canonical_height - canonical_height;
    Ok(Some(AuditRow {
        point_id: p.canonical().to_string(),
        field_d,
        base_height,
        canonical_height,
        disc,
        contracted,
        slack,
        marginal: slack.abs() < MARGINAL_BAND,
    }))
}

/// Orders rows by base height, ties broken by the point label.
pub fn sort_rows(rows: &mut [AuditRow]) {
    rows.sort_by(|a, b| {
        a.base_height
            .total_cmp(&b.base_height)
            .then_with(|| a.point_id.cmp(&b.point_id))
    });
}

/// Audit rows for every rational and quadratic base point of height at most `bound`.
pub fn vojta_audit(c: &CyclicCoverModel, bound: f64, epsilon: f64) -> Result<Vec<AuditRow>, CoverError> {
    validate_audit_args(c, bound, epsilon)?;
    let mut rows = Vec::new();
    for field in [FieldKind::Rational, FieldKind::Quadratic] {
        let e = Enumerator::new(c.r(), bound, field)?;
        for key in e.shard_keys() {
            for p in e.shard(&key) {
                rows.extend(audit_point(c, &p, epsilon)?);
            }
        }
    }
    sort_rows(&mut rows);
    Ok(rows)
}

/// Largest `h_K − disc − ε·h_K` over the rows: the smallest additive constant
/// making every row satisfy the inequality.
pub fn empirical_constant(rows: &[AuditRow]) -> Option<f64> {
    rows.iter().map(|r| -r.slack).reduce(f64::max)
}

/// Canonical height must be the multiplier times the base height.
pub fn row_is_consistent(c: &CyclicCoverModel, row: &AuditRow) -> bool {
    (row.canonical_height - canonical_multiplier(c) as f64 * row.base_height).abs() <= TOLERANCE
}
