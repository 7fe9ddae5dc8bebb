use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use quadpoints_core::covers::{descend_involution, generic_fiber, CyclicCoverModel, GenericFiber};
use quadpoints_core::ellfib::{
    conic_parametrize, find_constant_section, lift_to_quadratic_point, quartic_to_weierstrass, sections_for,
    specialize_section, EllError, LiftedPoint, QuarticModel, QuarticPoint,
};
use quadpoints_core::RationalFunction;

use super::fermat_type_cover;
use crate::{CensusError, Report, RunConfig};

#[derive(Clone, Debug)]
pub struct PointsArgs {
    pub m: u32,
    pub t_values: Vec<BigRational>,
    /// Multiples `±1..±sections` for `m = 4`; conic parameters `0..sections` for `m = 2`.
    pub sections: usize,
}

impl Default for PointsArgs {
    fn default() -> Self {
        PointsArgs {
            m: 4,
            t_values: [2, 3, 5, 7, 10].iter().map(|&t| BigRational::from_integer(t.into())).collect(),
            sections: 5,
        }
    }
}

/// Search radius for a constant section `u = u₀`.
const SECTION_SEARCH: i64 = 10;

enum Outcome {
    Row(Box<LiftedPoint>, BigRational, BigRational),
    Excluded(String),
}

struct Task {
    t0: BigRational,
    index: i64,
    outcome: Outcome,
}

pub fn cmd_generate_points(args: &PointsArgs, cfg: &RunConfig) -> Result<Report, CensusError> {
    if args.t_values.is_empty() {
        return Err(CensusError::Input("no t-values given".into()));
    }
    let cover = fermat_type_cover(2, args.m, -1);
    let fiber = descend_involution(&cover).and_then(|d| generic_fiber(&d))?;
    let (u0, v) = find_constant_section(&fiber.g, SECTION_SEARCH)
        .ok_or_else(|| CensusError::Input("no constant section found on the generic fiber".into()))?;
    let pool = cfg.pool()?;
    let tasks = match args.m {
        4 => pool.install(|| quartic_tasks(&cover, &fiber, u0.clone(), v.clone(), args))?,
        2 => pool.install(|| conic_tasks(&cover, &fiber, u0.clone(), v.clone(), args))?,
        m => return Err(CensusError::Input(format!("generate-points supports m = 2 or 4, got {m}"))),
    };

    let mut report = Report::new(vec![
        "t0",
        "section_index",
        "u0",
        "v0",
        "field_d",
        "is_rational",
        "is_contracted_by_pi",
        "verified",
    ]);
    let mut fibers = BTreeSet::new();
    let mut t_with_rows = BTreeSet::new();
    let (mut rational, mut verified) = (0, 0);
    for task in &tasks {
        match &task.outcome {
            Outcome::Row(p, u, v) => {
                fibers.insert((task.t0.clone(), task.index));
                t_with_rows.insert(task.t0.clone());
                rational += p.is_rational as usize;
                verified += p.verified as usize;
                if !p.verified {
                    report.failed_checks += 1;
                }
                report.push_row(vec![
                    json!(task.t0.to_string()),
                    json!(task.index),
                    json!(u.to_string()),
                    json!(v.to_string()),
                    json!(p.field_d.to_string()),
                    json!(p.is_rational),
                    json!(p.is_contracted_by_pi),
                    json!(p.verified),
                ]);
            }
            Outcome::Excluded(reason) => {
                report.exclude(format!("t0={} index={}", task.t0, task.index), reason.clone());
            }
        }
    }
    let rows = report.rows.len();
    report.set("m", args.m);
    report.set("generic_fiber", fiber.to_string());
    report.set("generator", Value::String(format!("({}, {})", u0, v.display_with("t"))));
    report.set("rows", rows);
    report.set("verified", verified);
    report.set("rational", rational);
    report.set("quadratic", rows - rational);
    report.set("distinct_fibers", fibers.len());
    report.set("distinct_t0", t_with_rows.len());
    report.set("excluded", report.exclusions.len());
    Ok(report)
}

fn describe(e: &EllError) -> String {
    match e {
        EllError::Pole(_) => "pole of the section".into(),
        EllError::BadReduction(_) => "singular fiber".into(),
        EllError::RamifiedDirection => "u0 = 0 lies on the branch locus".into(),
        other => other.to_string(),
    }
}

fn lift(cover: &CyclicCoverModel, t0: &BigRational, index: i64, u: BigRational, v: BigRational) -> Task {
    let outcome = match lift_to_quadratic_point(cover, t0, &u, &v) {
        Ok(p) => Outcome::Row(Box::new(p), u, v),
        Err(e) => Outcome::Excluded(describe(&e)),
    };
    Task {
        t0: t0.clone(),
        index,
        outcome,
    }
}

fn quartic_tasks(
    cover: &CyclicCoverModel,
    fiber: &GenericFiber,
    u0: BigRational,
    v: RationalFunction,
    args: &PointsArgs,
) -> Result<Vec<Task>, CensusError> {
    let lead = fiber.g.coeff(4);
    let ratio = lead
        .sqrt()
        .ok_or_else(|| CensusError::Input("leading coefficient of the quartic is not a square".into()))?;
    let quartic = QuarticModel::new(fiber.g.clone(), QuarticPoint::Infinity { ratio })
        .map_err(|e| CensusError::Input(format!("generic fiber: {e}")))?;
    let transform = quartic_to_weierstrass(&quartic).map_err(|e| CensusError::Input(e.to_string()))?;
    let generator = QuarticPoint::affine(RationalFunction::constant(u0), v);
    let multipliers: Vec<i64> = (1..=args.sections as i64).flat_map(|n| [n, -n]).collect();
    let sections = sections_for(&transform, &generator, multipliers).map_err(|e| CensusError::Input(e.to_string()))?;
    let jobs: Vec<(&BigRational, usize)> =
        args.t_values.iter().flat_map(|t| (0..sections.len()).map(move |i| (t, i))).collect();
    Ok(jobs
        .par_iter()
        .map(|&(t0, i)| {
            let s = &sections[i];
            match specialize_section(&transform, &s.quartic_point, t0) {
                Ok(QuarticPoint::Affine { u, v }) => lift(cover, t0, s.multiple, u, v),
                Ok(QuarticPoint::Infinity { .. }) => Task {
                    t0: t0.clone(),
                    index: s.multiple,
                    outcome: Outcome::Excluded("section meets the fiber at infinity".into()),
                },
                Err(e) => Task {
                    t0: t0.clone(),
                    index: s.multiple,
                    outcome: Outcome::Excluded(describe(&e)),
                },
            }
        })
        .collect())
}

fn conic_tasks(
    cover: &CyclicCoverModel,
    fiber: &GenericFiber,
    u0: BigRational,
    v: RationalFunction,
    args: &PointsArgs,
) -> Result<Vec<Task>, CensusError> {
    let g = &fiber.g;
    if g.degree() != Some(2) || g.coeff(2) != RationalFunction::one() || !g.coeff(1).is_zero() {
        return Err(CensusError::Input("generic fiber is not of the form v^2 = u^2 + c(t)".into()));
    }
    let c = g.coeff(0);
    let jobs: Vec<(&BigRational, i64)> = args
        .t_values
        .iter()
        .flat_map(|t| (0..args.sections as i64).map(move |l| (t, l)))
        .collect();
    Ok(jobs
        .par_iter()
        .map(|&(t0, lambda)| {
            let excluded = |reason: String| Task {
                t0: t0.clone(),
                index: lambda,
                outcome: Outcome::Excluded(reason),
            };
            let (Ok(c0), Ok(v0)) = (c.eval(t0), v.eval(t0)) else {
                return excluded("pole of the conic data".into());
            };
            let param = match conic_parametrize(c0, u0.clone(), v0) {
                Ok(p) => p,
                Err(e) => return excluded(describe(&e)),
            };
            match param.at(&BigRational::from_integer(lambda.into())) {
                Ok((u, w)) => lift(cover, t0, lambda, u, w),
                Err(e) => excluded(describe(&e)),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use quadpoints_core::exactmath::rat;

    fn run(m: u32, t: &[i64], sections: usize) -> Report {
        let args = PointsArgs {
            m,
            t_values: t.iter().map(|&x| rat(x)).collect(),
            sections,
        };
        cmd_generate_points(&args, &RunConfig::default()).unwrap()
    }

    #[test]
    fn generator_at_two_is_the_rational_row() {
        let r = run(4, &[2], 1);
        let first = &r.rows[0];
        assert_eq!(first[1], json!(1));
        assert_eq!((first[2].clone(), first[3].clone()), (json!("1"), json!("16")));
        assert_eq!(first[5], json!(true));
        assert_eq!(first[7], json!(true));
    }

    #[test]
    fn conic_rows_for_three_parameters() {
        let r = run(2, &[2], 3);
        assert_eq!(r.rows.len(), 3);
        assert!(r.rows.iter().all(|row| row[7] == json!(true)));
    }

    #[test]
    fn singular_fiber_is_excluded() {
        // t = 1 kills the constant term, so the quartic degenerates
        let r = run(4, &[1], 1);
        assert!(r.rows.is_empty());
        assert_eq!(r.exclusions.len(), 2);
        assert_eq!(r.summary["excluded"], json!(2));
    }

    #[test]
    fn unsupported_m_is_an_input_error() {
        let args = PointsArgs {
            m: 3,
            ..PointsArgs::default()
        };
        assert!(matches!(
            cmd_generate_points(&args, &RunConfig::default()),
            Err(CensusError::Input(_))
        ));
    }
}
