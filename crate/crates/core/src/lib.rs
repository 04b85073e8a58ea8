//! Small line sets that cut planar point sets, and small guard sets that
//! stab heavy convex regions, built on weak cuttings for lines.
//!
//! Everything is generic over a [`Scalar`]; the aliases below fix it to the
//! exact [`Rational`] type, which is what the solvers use.

pub mod arrangement;
pub mod corridor;
pub mod cutting;
pub mod error;
pub mod geom;
pub mod guarding;
pub mod instance;
pub mod lp;
pub mod oracle;
pub mod reduction;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Float, Rational, Scalar};

pub type Point = geom::Point<Rational>;
pub type Line = geom::Line<Rational>;
pub type Segment = geom::Segment<Rational>;
pub type Polygon = geom::Polygon<Rational>;
pub type Shear = geom::Shear<Rational>;
pub type Arrangement = arrangement::Arrangement<Rational>;
pub type Instance = instance::Instance<Rational>;
pub type WeightedLineSet = cutting::WeightedLineSet<Rational>;
pub type Corridor = corridor::Corridor<Rational>;
