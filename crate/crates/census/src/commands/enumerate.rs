use rayon::prelude::*;
use serde_json::json;

use quadpoints_core::covers::{Enumerator, FieldKind};
use quadpoints_core::heights::{weil_height, ProjectivePoint};

use crate::{CensusError, Report, RunConfig};

#[derive(Clone, Debug)]
pub struct EnumerateArgs {
    pub r: usize,
    pub field: FieldKind,
    pub height_bound: f64,
}

pub fn cmd_enumerate(args: &EnumerateArgs, cfg: &RunConfig) -> Result<Report, CensusError> {
    if args.height_bound < 0.0 {
        return Err(CensusError::Input(format!("negative height bound {}", args.height_bound)));
    }
    let e = Enumerator::new(args.r, args.height_bound, args.field).map_err(|err| CensusError::Input(err.to_string()))?;
    let keys = e.shard_keys();
    let pool = cfg.pool()?;
    let mut points: Vec<ProjectivePoint> =
        pool.install(|| keys.par_iter().flat_map_iter(|k| e.shard(k)).collect());
    points.sort();

    let mut report = Report::new(vec!["point_id", "field_d", "height"]);
    for p in &points {
        report.push_row(vec![
            json!(p.canonical().to_string()),
            json!(p.effective_d().to_string()),
            json!(weil_height(p).value),
        ]);
    }
    report.set("points", points.len());
    report.set("shards", keys.len());
    report.set("height_bound", args.height_bound);
    report.set("r", args.r);
    report.set(
        "field",
        match args.field {
            FieldKind::Rational => "rational",
            FieldKind::Quadratic => "quadratic",
        },
    );
    Ok(report)
}
