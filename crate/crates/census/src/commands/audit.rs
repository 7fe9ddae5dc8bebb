use std::path::PathBuf;

use rayon::prelude::*;
use serde_json::json;

use quadpoints_core::covers::{
    audit_point, canonical_multiplier, empirical_constant, sort_rows, validate_audit_args, AuditRow,
    CoverError, CyclicCoverModel, Enumerator, FieldKind,
};

use crate::{CensusError, Report, RunConfig};

#[derive(Clone, Debug)]
pub struct AuditArgs {
    pub cover: PathBuf,
    pub height_bound: f64,
    pub epsilon: f64,
}

pub fn load_cover(path: &PathBuf) -> Result<CyclicCoverModel, CensusError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CensusError::Input(format!("cannot read {}: {e}", path.display())))?;
    CyclicCoverModel::from_json(&text).map_err(|e| CensusError::Input(format!("{}: {e}", path.display())))
}

pub fn cmd_audit(args: &AuditArgs, cfg: &RunConfig) -> Result<Report, CensusError> {
    let cover = load_cover(&args.cover)?;
    validate_audit_args(&cover, args.height_bound, args.epsilon).map_err(|e| CensusError::Input(e.to_string()))?;
    let pool = cfg.pool()?;
    let mut rows: Vec<AuditRow> = Vec::new();
    let mut shards = 0usize;
    for field in [FieldKind::Rational, FieldKind::Quadratic] {
        let e = Enumerator::new(cover.r(), args.height_bound, field)?;
        let keys = e.shard_keys();
        shards += keys.len();
        let per_shard: Vec<Vec<AuditRow>> = pool.install(|| {
            keys.par_iter()
                .map(|k| {
                    e.shard(k)
                        .iter()
                        .filter_map(|p| audit_point(&cover, p, args.epsilon).transpose())
                        .collect::<Result<Vec<_>, CoverError>>()
                })
                .collect::<Result<Vec<_>, CoverError>>()
        })?;
        rows.extend(per_shard.into_iter().flatten());
    }
    sort_rows(&mut rows);

    let mut report = Report::new(vec![
        "point_id",
        "field_d",
        "base_height",
        "canonical_height",
        "disc",
        "contracted",
        "slack",
        "marginal",
    ]);
    for r in &rows {
        report.push_row(vec![
            json!(r.point_id),
            json!(r.field_d.to_string()),
            json!(r.base_height),
            json!(r.canonical_height),
            json!(r.disc),
            json!(r.contracted),
            json!(r.slack),
            json!(r.marginal),
        ]);
    }
    let contracted = rows.iter().filter(|r| r.contracted).count();
    report.set("rows", rows.len());
    report.set("contracted", contracted);
    report.set("non_contracted", rows.len() - contracted);
    report.set("marginal", rows.iter().filter(|r| r.marginal).count());
    report.set("negative_slack", rows.iter().filter(|r| r.slack < 0.0 && !r.marginal).count());
    report.set("max_slack", rows.iter().map(|r| r.slack).reduce(f64::max).map_or(json!(null), |v| json!(v)));
    report.set("min_slack", rows.iter().map(|r| r.slack).reduce(f64::min).map_or(json!(null), |v| json!(v)));
    report.set("empirical_constant", empirical_constant(&rows).map_or(json!(null), |v| json!(v)));
    report.set("canonical_multiplier", canonical_multiplier(&cover));
    report.set("height_bound", args.height_bound);
    report.set("epsilon", args.epsilon);
    report.set("shards", shards);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture(name: &str) -> PathBuf {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
    }

    fn audit(bound: f64, epsilon: f64) -> Result<Report, CensusError> {
        let args = AuditArgs {
            cover: fixture("sextic_p1.json"),
            height_bound: bound,
            epsilon,
        };
        cmd_audit(&args, &RunConfig::default())
    }

    #[test]
    fn rows_are_sorted_and_counted() {
        let r = audit(3f64.ln(), 0.0).unwrap();
        let heights: Vec<f64> = r.rows.iter().map(|row| row[2].as_f64().unwrap()).collect();
        assert!(heights.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(r.summary["rows"], json!(r.rows.len()));
        let contracted = r.rows.iter().filter(|row| row[5] == json!(true)).count();
        assert_eq!(r.summary["contracted"], json!(contracted));
    }

    #[test]
    fn tiny_bound_keeps_only_height_zero_rows() {
        let r = audit(0.1, 0.0).unwrap();
        assert!(r.rows.iter().all(|row| row[2].as_f64().unwrap() < 1e-9));
    }

    #[test]
    fn bad_arguments_are_input_errors() {
        assert!(matches!(audit(0.0, 0.0), Err(CensusError::Input(_))));
        assert!(matches!(audit(1.0, 1.0), Err(CensusError::Input(_))));
        let missing = AuditArgs {
            cover: fixture("missing.json"),
            height_bound: 1.0,
            epsilon: 0.0,
        };
        assert!(matches!(cmd_audit(&missing, &RunConfig::default()), Err(CensusError::Input(_))));
    }
}
