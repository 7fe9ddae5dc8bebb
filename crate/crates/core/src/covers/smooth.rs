//! One-sided smoothness evidence for branch loci.
//!
//! For binary forms the test is exact. In higher dimension the form and its
//! partials are restricted to seeded random lines: a common root on a line is
//! a singular point of `s = 0`, but passing every line proves nothing.

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactmath::{MultiPoly, Polynomial, RatFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub lines_tested: usize,
    /// A line `P + λQ` meeting the singular locus, as `(P, Q)`.
    pub singular_witness: Option<(Vec<i64>, Vec<i64>)>,
    /// Some tested restriction had no repeated root.
    pub reduced_on_some_line: bool,
    /// True only when the verdict is a proof (binary forms).
    pub exact: bool,
}

impl SmoothnessReport {
    pub fn passed(&self) -> bool {
        self.singular_witness.is_none() && self.reduced_on_some_line
    }
}

const COORD_RANGE: i64 = 12;

pub fn jacobian_spot_check(s: &MultiPoly, seed: u64, lines: usize) -> SmoothnessReport {
    if s.nvars() == 2 {
        return binary_form_check(s);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = s.nvars();
    let partials: Vec<MultiPoly> = (0..n).map(|i| s.partial_derivative(i)).collect();
    let mut report = SmoothnessReport {
        lines_tested: 0,
        singular_witness: None,
        reduced_on_some_line: false,
        exact: false,
    };
    for _ in 0..lines {
        let p: Vec<i64> = (0..n).map(|_| rng.gen_range(-COORD_RANGE..=COORD_RANGE)).collect();
        let q: Vec<i64> = (0..n).map(|_| rng.gen_range(-COORD_RANGE..=COORD_RANGE)).collect();
        if p.iter().all(|x| *x == 0) || q.iter().all(|x| *x == 0) {
            continue;
        }
        report.lines_tested += 1;
        let f = restrict(s, &p, &q);
        if f.is_zero() {
            // line lies inside s = 0; skip rather than guess
            continue;
        }
        let mut g = f.clone();
        for d in &partials {
            g = g.gcd(&restrict(d, &p, &q));
        }
        if g.degree().unwrap_or(0) > 0 && report.singular_witness.is_none() {
            report.singular_witness = Some((p.clone(), q.clone()));
        }
        if f.is_squarefree() {
            report.reduced_on_some_line = true;
        }
    }
    report
}

/// `λ ↦ s(P + λQ)`.
fn restrict(s: &MultiPoly, p: &[i64], q: &[i64]) -> Polynomial<BigRational> {
    let t = RatFunc::<BigRational>::t();
    let pts: Vec<RatFunc<BigRational>> = p
        .iter()
        .zip(q)
        .map(|(&a, &b)| RatFunc::constant(BigRational::from_integer(a.into())) + RatFunc::constant(BigRational::from_integer(b.into())) * t.clone())
        .collect();
    let v = s.eval(&pts);
    debug_assert!(v.is_polynomial());
    v.numer().clone()
}

/// A binary form is smooth iff it has no repeated factor, including at `[1:0]`.
fn binary_form_check(s: &MultiPoly) -> SmoothnessReport {
    let deg = s.degree().unwrap_or(0) as usize;
    let mut coeffs = vec![BigRational::zero(); deg + 1];
    for (e, c) in s.terms() {
        coeffs[e[0] as usize] = c.clone();
    }
    let f = Polynomial::new(coeffs);
    // the multiplicity of [1:0] is deg s − deg f
    let at_infinity = deg - f.degree().unwrap_or(0);
    let ok = !f.is_zero() && f.is_squarefree() && at_infinity <= 1;
    SmoothnessReport {
        lines_tested: 1,
        singular_witness: (!ok).then(|| (vec![0, 1], vec![1, 0])),
        reduced_on_some_line: ok,
        exact: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_forms_are_decided_exactly() {
        let good = MultiPoly::from_int_terms(&["x", "y"], &[(1, &[6, 0]), (1, &[0, 6])]);
        assert!(jacobian_spot_check(&good, 0, 0).passed());
        let double = MultiPoly::from_int_terms(&["x", "y"], &[(1, &[2, 2])]);
        assert!(!jacobian_spot_check(&double, 0, 0).passed());
        let simple_inf = MultiPoly::from_int_terms(&["x", "y"], &[(1, &[1, 1])]);
        assert!(jacobian_spot_check(&simple_inf, 0, 0).passed());
    }

    #[test]
    fn fermat_curves_pass_and_nodes_are_caught() {
        let vars = ["x", "y", "z"];
        let fermat = MultiPoly::from_int_terms(&vars, &[(1, &[8, 0, 0]), (-1, &[0, 8, 0]), (1, &[0, 0, 8])]);
        let r = jacobian_spot_check(&fermat, 7, 20);
        assert!(r.passed());
        assert!(!r.exact);
        // a double line is non-reduced on every line
        let square = MultiPoly::from_int_terms(&vars, &[(1, &[2, 0, 0])]);
        assert!(!jacobian_spot_check(&square, 7, 10).passed());
        // a pair of lines meets in a singular point that random lines rarely hit,
        // but a line through the vertex direction is forced via the witness check
        let cross = MultiPoly::from_int_terms(&vars, &[(1, &[1, 1, 0])]);
        let f = restrict(&cross, &[0, 0, 1], &[1, 1, 0]);
        let mut g = f.clone();
        for i in 0..3 {
            g = g.gcd(&restrict(&cross.partial_derivative(i), &[0, 0, 1], &[1, 1, 0]));
        }
        assert!(g.degree().unwrap() > 0 || g.is_zero());
    }

    #[test]
    fn seeds_are_reproducible() {
        let vars = ["x", "y", "z"];
        let s = MultiPoly::from_int_terms(&vars, &[(1, &[4, 0, 0]), (1, &[0, 4, 0]), (1, &[0, 0, 4])]);
        assert_eq!(jacobian_spot_check(&s, 3, 5), jacobian_spot_check(&s, 3, 5));
        assert_eq!(jacobian_spot_check(&s, 3, 5).lines_tested, 5);
    }
}
