use std::ops::RangeInclusive;

use serde_json::json;

use quadpoints_core::covers::{residue_degree_options, vojta_threshold};

use crate::{CensusError, Report};

#[derive(Clone, Debug)]
pub struct ThresholdArgs {
    pub r: RangeInclusive<u32>,
    pub d: RangeInclusive<u32>,
    pub e: RangeInclusive<u32>,
}

impl Default for ThresholdArgs {
    fn default() -> Self {
        ThresholdArgs {
            r: 1..=3,
            d: 1..=3,
            e: 2..=4,
        }
    }
}

/// Reference rows `(r, d, e) → m` checked whenever they fall in the grid.
const REFERENCE: [((u32, u32, u32), u32); 2] = [((1, 2, 2), 5), ((2, 2, 2), 6)];

pub fn cmd_thresholds(args: &ThresholdArgs) -> Result<Report, CensusError> {
    if *args.r.start() == 0 || *args.d.start() == 0 || *args.e.start() < 2 {
        return Err(CensusError::Input("need r >= 1, d >= 1 and e >= 2".into()));
    }
    let mut report = Report::new(vec!["r", "d", "e", "threshold", "residue_degree_options"]);
    let mut checked = 0;
    for r in args.r.clone() {
        for d in args.d.clone() {
            for e in args.e.clone() {
                let m = vojta_threshold(r, d, e);
                let opts: Vec<String> = residue_degree_options(d, e).iter().map(u32::to_string).collect();
                report.push_row(vec![json!(r), json!(d), json!(e), json!(m), json!(opts.join(";"))]);
                if let Some((_, want)) = REFERENCE.iter().find(|(k, _)| *k == (r, d, e)) {
                    checked += 1;
                    let pass = m == *want;
                    if !pass {
                        report.failed_checks += 1;
                    }
                    report.set(&format!("reference_{r}_{d}_{e}"), if pass { "pass" } else { "fail" });
                }
            }
        }
    }
    report.set("rows", report.rows.len());
    report.set("reference_checks", checked);
    report.set("reference_failures", report.failed_checks);
    Ok(report)
}
