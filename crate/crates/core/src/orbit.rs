//! Weyl orbit sums and the generalized-cosine variables.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::rootsystem::{RootSystem, Weight};
use crate::scalar::Coeff;

/// Which family of Chebyshev polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    First,
    Second,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::First => "first",
            Kind::Second => "second",
        })
    }
}

/// `sum_{w in W} z^{w n}` over every group element, so a weight with a
/// nontrivial stabilizer picks up that multiplicity.
pub fn phi_sym<C: Coeff>(rs: &RootSystem, n: &Weight) -> LaurentPoly<C> {
    LaurentPoly::from_terms(rs.rank(), rs.elements().iter().map(|w| (w.act(n), C::one())))
}

/// `sum_{w in W} det(w) z^{w k}`.
pub fn phi_asym<C: Coeff>(rs: &RootSystem, k: &Weight) -> LaurentPoly<C> {
    LaurentPoly::from_terms(
        rs.rank(),
        rs.elements().iter().map(|w| (w.act(k), C::from_int(w.det()))),
    )
}

/// The Weyl denominator `phi_asym(rho)`.
pub fn singular_element<C: Coeff>(rs: &RootSystem) -> LaurentPoly<C> {
    phi_asym(rs, &rs.rho())
}

/// `phi_asym(n + rho) / phi_asym(rho)`, the Weyl character of highest weight `n`.
pub fn character<C: Coeff>(rs: &RootSystem, n: &Weight) -> Result<LaurentPoly<C>> {
    phi_asym::<C>(rs, &(*n + rs.rho())).exact_divide(&singular_element(rs))
}

/// Laurent expansions of the variables `x_i`.
pub fn variable_laurents<C: Coeff>(rs: &RootSystem, kind: Kind) -> Result<Vec<LaurentPoly<C>>> {
    (0..rs.rank())
        .map(|i| {
            let e = rs.fundamental_weight(i);
            match kind {
                Kind::First => Ok(phi_sym(rs, &e)),
                Kind::Second => character(rs, &e),
            }
        })
        .collect()
}
