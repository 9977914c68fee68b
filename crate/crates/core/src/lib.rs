//! Exact multivariate Chebyshev polynomials of the first and second kind
//! for the rank-2 simple Lie algebras A2, C2, G2 (and the rank-1 case A1).
//!
//! Polynomials are built from Weyl-group orbit sums: the second-kind
//! polynomial `U_n` is the Weyl character `phi_asym(n + rho) / phi_asym(rho)`
//! rewritten in the generalized cosines `x = U_{1,0}`, `y = U_{0,1}`. Two
//! independent routes produce the same tables: coefficient extraction from
//! the diagonal-matrix generating function ([`genfunc`]) and the
//! multiplication-rule recurrence ([`recurrence`]).
//!
//! The polynomial types are generic over the coefficient ring ([`Coeff`]);
//! the aliases below fix it to arbitrary-precision rationals.

pub mod cli;
pub mod error;
pub mod format;
pub mod genfunc;
pub mod laurent;
pub mod numeric;
pub mod orbit;
pub mod polynomialize;
pub mod recurrence;
pub mod rootsystem;
pub mod scalar;
pub mod xypoly;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use orbit::Kind;
pub use polynomialize::VariableBasis;
pub use rootsystem::{AlgebraId, Dominance, RootSystem, Weight, WeylElement};
pub use scalar::{Coeff, Real};
pub use xypoly::{Degree, XYPoly};

/// Arbitrary-precision rational coefficients.
pub type Rational = num_rational::BigRational;

/// Exact Laurent polynomial over the rationals.
pub type Laurent = LaurentPoly<Rational>;

/// Exact polynomial in `x, y` over the rationals.
pub type Poly = XYPoly<Rational>;

/// Variable basis over the rationals.
pub type Basis = VariableBasis<Rational>;

/// Generating function over the rationals.
pub type GeneratingFunction = genfunc::RationalGF<Rational>;
