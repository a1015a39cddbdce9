//! Exact toolkit for intersections of Veronese monomial ideals.

pub mod betti;
pub mod closed_forms;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod linearity;
pub mod oracle;
pub mod ring;
pub mod scalar;

pub use error::{Error, Result};
pub use ring::{veronese_ideal, Monomial, MonomialIdeal, RingCtx, VeroneseComponent, VeroneseSpec};
pub use scalar::{Field, FieldChoice, Fp};

/// The default homology field.
pub type Gf32003 = Fp<32003>;
/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
