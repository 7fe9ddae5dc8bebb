//! Genus-one and genus-zero fibrations over ℚ(t): Weierstrass models and
//! their group law, the passage from a marked quartic to Weierstrass form,
//! torsion at specializations, sections of the fibration and their lifts to
//! quadratic points of the double cover.

mod conic;
mod function_field;
mod lift;
mod quartic;
mod sections;
mod weierstrass;

use num_rational::BigRational;
use thiserror::Error;

use crate::exactmath::ExactError;
use crate::heights::HeightError;

pub use conic::{conic_parametrize, ConicParametrization};
pub use function_field::{CurveEquation, CurveFunction};
pub use lift::{lift_to_quadratic_point, LiftedPoint};
pub use quartic::{
    monic_biquadratic, octic_fiber_quartic, quartic_to_weierstrass, QuarticModel, QuarticPoint,
    QuarticTransform,
};
pub use sections::{find_constant_section, generate_sections, sections_for, specialize_section, Section};
pub use weierstrass::{
    ec_add, integral_short_model, is_torsion, specialize_point, EcPoint, TorsionReport,
    WeierstrassModel,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EllError {
    #[error("quartic has a repeated root")]
    SingularQuartic,
    #[error("right-hand side must have degree 3 or 4")]
    DegenerateQuartic,
    #[error("marked point is not on the curve")]
    MarkedPointNotOnCurve,
    #[error("Weierstrass model has zero discriminant")]
    SingularCurve,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("no usable generator: the point is missing or is the origin")]
    GeneratorMissing,
    #[error("t0 = {0} is a pole of the data")]
    Pole(BigRational),
    #[error("fiber at t0 = {0} is singular")]
    BadReduction(BigRational),
    #[error("conic is degenerate")]
    DegenerateConic,
    #[error("parameter hits an asymptotic direction of the conic")]
    ConicPole,
    #[error("u0 = 0 lies on the branch locus")]
    RamifiedDirection,
    #[error("point does not lie on the fiber of the cover")]
    NotOnFiber,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Height(#[from] HeightError),
}
