mod audit;
mod enumerate;
mod examples;
mod points;
mod thresholds;

pub use audit::{cmd_audit, AuditArgs};
pub use enumerate::{cmd_enumerate, EnumerateArgs};
pub use examples::{cmd_verify_examples, Corruption, ExampleArgs};
pub use points::{cmd_generate_points, PointsArgs};
pub use thresholds::{cmd_thresholds, ThresholdArgs};

use quadpoints_core::covers::{coordinate_names, CyclicCoverModel};
use quadpoints_core::exactmath::MultiPoly;

/// `w² = x^{2m} + sign·y^{2m} + z^{2m}` on ℙ², or `w² = x^{2m} + y^{2m}` on ℙ¹.
pub(crate) fn fermat_type_cover(r: usize, m: u32, y_sign: i64) -> CyclicCoverModel {
    let k = 2 * m;
    let names = coordinate_names(r);
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut terms: Vec<(i64, Vec<u32>)> = Vec::new();
    for i in 0..=r {
        let mut e = vec![0u32; r + 1];
        e[i] = k;
        terms.push((if i == 1 { y_sign } else { 1 }, e));
    }
    let borrowed: Vec<(i64, &[u32])> = terms.iter().map(|(c, e)| (*c, e.as_slice())).collect();
    CyclicCoverModel::new(r, 2, m, MultiPoly::from_int_terms(&vars, &borrowed)).expect("Fermat-type cover is valid")
}
