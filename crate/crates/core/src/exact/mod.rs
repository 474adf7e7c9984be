//! Exact arithmetic: polynomials, series and linear algebra over the
//! rationals.

pub mod laurent;
pub mod matrix;
pub mod poly;
pub mod series;
pub mod upoly;

pub use laurent::LaurentPoly;
pub use matrix::{Echelon, Matrix, RowSpace};
pub use poly::{monomial_count, monomials_of_degree, Monomial, MonomialBasis, MultiPoly};
pub use series::TruncatedSeries;
pub use upoly::UniPoly;
