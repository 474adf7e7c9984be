//! Invariants of hyperplane arrangements computed in exact arithmetic.

pub mod error;
pub mod arrangement;
pub mod cherncalc;
pub mod corpus;
pub mod exact;
pub mod logcomplex;
pub mod logmod;
pub mod scalar;

pub use arrangement::{Arrangement, Flat, IntersectionLattice};
pub use error::{Error, Result};
pub use num_rational::BigRational as Rational;

pub type QPoly = exact::MultiPoly<Rational>;
pub type QUniPoly = exact::UniPoly<Rational>;
pub type IntPoly = exact::UniPoly<i64>;
pub type QMatrix = exact::Matrix<Rational>;
pub type QSeries = exact::TruncatedSeries<Rational>;
pub type IntLaurent = exact::LaurentPoly<i64>;
