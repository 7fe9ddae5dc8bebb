//! Exact arithmetic, heights and surface geometry for studying quadratic
//! points on cyclic covers of projective space.
//!
//! Algorithms are written against [`Field`], so the same code runs over ℚ,
//! ℚ(t), quadratic number fields and, for cross-checks, `f64`/`f32`.
//! Heights are always reported as `f64`.

pub mod covers;
pub mod ellfib;
pub mod exactmath;
pub mod heights;
pub mod surfgeom;

pub use exactmath::{Embeds, Field, QuadFieldElement, RatFunc, SquarefreeInt};

/// Exact rationals.
pub type Rational = num_rational::BigRational;
/// The rational function field ℚ(t).
pub type RationalFunction = RatFunc<Rational>;
