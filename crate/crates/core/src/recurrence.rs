//! Second-kind polynomials from the multiplication rule, plus the companion
//! matrices of the single-index recurrences.
//!
//! Multiplying a character by `x_i` distributes over the weights of `x_i`:
//! `x_i U_n = sum_mu mult(mu) U_{n + mu}`, where an index that leaves the
//! dominant chamber is folded back by the reflection rule
//! `U_n = det(w) U_{w(n + rho) - rho}` and vanishes on a wall.

use std::collections::HashMap;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::genfunc::RationalGF;
use crate::orbit::Kind;
use crate::polynomialize::VariableBasis;
use crate::rootsystem::{RootSystem, Weight};
use crate::scalar::Coeff;
use crate::xypoly::XYPoly;

/// A multi-index folded into the dominant chamber: `U_n = sign * U_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalizedIndex {
    pub sign: i64,
    pub index: Option<Weight>,
}

pub fn normalize_index(rs: &RootSystem, n: &Weight) -> NormalizedIndex {
    let (w, v) = rs.dominant_representative(&(*n + rs.rho()));
    if v.is_strictly_dominant() {
        NormalizedIndex {
            sign: w.det(),
            index: Some(v - rs.rho()),
        }
    } else {
        NormalizedIndex { sign: 0, index: None }
    }
}

/// Which variable to peel off when a target has both coordinates positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepOrder {
    XFirst,
    YFirst,
}

/// Second-kind polynomials for every dominant index up to a height bound.
pub struct RecurrenceTable<C: Coeff> {
    rs: RootSystem,
    polys: HashMap<Weight, XYPoly<C>>,
}

impl<C: Coeff> RecurrenceTable<C> {
    /// Fills every dominant index whose height does not exceed that of some target.
    pub fn build(basis: &VariableBasis<C>, targets: &[Weight], order: StepOrder) -> Result<Self> {
        if basis.kind() != Kind::Second {
            return Err(Error::Unsupported("recurrence tables are second kind only".into()));
        }
        let rs = basis.root_system().clone();
        let rank = rs.rank();
        let max_height = targets
            .iter()
            .map(|t| rs.height(t))
            .max()
            .unwrap_or_else(|| Rational64::from_integer(0));
        let mut weights = dominant_weights_up_to(&rs, max_height);
        weights.sort_by(|a, b| rs.height(a).cmp(&rs.height(b)).then(a.cmp(b)));

        let vars: Vec<XYPoly<C>> = (0..rank).map(|i| XYPoly::var(rank, i)).collect();
        let mut polys: HashMap<Weight, XYPoly<C>> = HashMap::new();
        for t in weights {
            if t.is_zero() {
                polys.insert(t, XYPoly::one(rank));
                continue;
            }
            let candidates = (0..rank).filter(|&i| t.get(i) > 0);
            let i = match order {
                StepOrder::XFirst => candidates.min(),
                StepOrder::YFirst => candidates.max(),
            }
            .expect("nonzero dominant weight");
            let e = rs.fundamental_weight(i);
            let base = t - e;
            let mut u = &vars[i] * &polys[&base];
            for (mu, mult) in basis.var_laurents()[i].terms() {
                if *mu == e {
                    continue;
                }
                let ni = normalize_index(&rs, &(base + *mu));
                let Some(idx) = ni.index else { continue };
                let prev = polys.get(&idx).ok_or_else(|| {
                    Error::Unsupported(format!("recurrence for {t} needs {idx} which is not yet known"))
                })?;
                u.add_scaled(prev, &(-mult.clone() * C::from_int(ni.sign)));
            }
            polys.insert(t, u);
        }
        Ok(Self { rs, polys })
    }

    /// `U_n` for any integer multi-index within the filled range, folded by reflection.
    pub fn get(&self, n: &Weight) -> Option<XYPoly<C>> {
        let ni = normalize_index(&self.rs, n);
        match ni.index {
            None => Some(XYPoly::zero(self.rs.rank())),
            Some(idx) => self.polys.get(&idx).map(|p| p.scale(&C::from_int(ni.sign))),
        }
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

fn dominant_weights_up_to(rs: &RootSystem, max_height: Rational64) -> Vec<Weight> {
    let mut out = Vec::new();
    let second = if rs.rank() == 2 { i64::MAX } else { 0 };
    let mut a = 0;
    while rs.height(&Weight::new(&[a, 0][..rs.rank()])) <= max_height {
        let mut b = 0;
        loop {
            let w = if rs.rank() == 2 { Weight::new2(a, b) } else { Weight::new(&[a]) };
            if rs.height(&w) > max_height {
                break;
            }
            out.push(w);
            if b >= second {
                break;
            }
            b += 1;
        }
        a += 1;
    }
    out
}

/// `U_n` computed only through the multiplication rule.
pub fn poly_via_recurrence<C: Coeff>(basis: &VariableBasis<C>, n: &Weight) -> Result<XYPoly<C>> {
    let table = RecurrenceTable::build(basis, &[*n], StepOrder::XFirst)?;
    Ok(table.get(n).expect("target is inside the filled range"))
}

/// Coefficients `c_1 .. c_d` of `U_m = sum_k c_k U_{m-k}` read off a denominator `1 - sum c_k t^k`.
pub fn recurrence_coeffs<C: Coeff>(denominator: &[XYPoly<C>]) -> Vec<XYPoly<C>> {
    denominator.iter().skip(1).map(|c| -c).collect()
}

/// Square matrix with polynomial entries.
#[derive(Debug, Clone, PartialEq)]
pub struct CompanionMatrix<C: Coeff> {
    entries: Vec<Vec<XYPoly<C>>>,
}

impl<C: Coeff> CompanionMatrix<C> {
    /// First column `coeffs`, ones on the superdiagonal, zeros elsewhere.
    pub fn from_recurrence(rank: usize, coeffs: &[XYPoly<C>]) -> Self {
        let size = coeffs.len();
        let mut entries = vec![vec![XYPoly::zero(rank); size]; size];
        for (i, c) in coeffs.iter().enumerate() {
            entries[i][0] = c.clone();
            if i + 1 < size {
                entries[i][i + 1] = XYPoly::one(rank);
            }
        }
        Self { entries }
    }

    pub fn from_entries(entries: Vec<Vec<XYPoly<C>>>) -> Self {
        assert!(entries.iter().all(|r| r.len() == entries.len()), "matrix must be square");
        Self { entries }
    }

    pub fn identity(rank: usize, size: usize) -> Self {
        let mut entries = vec![vec![XYPoly::zero(rank); size]; size];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = XYPoly::one(rank);
        }
        Self { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Entry in 1-based row and column, matching the usual matrix notation.
    pub fn entry(&self, row: usize, col: usize) -> &XYPoly<C> {
        &self.entries[row - 1][col - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(XYPoly::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.size();
        let rank = self.entries[0][0].rank();
        let mut out = vec![vec![XYPoly::zero(rank); n]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for k in 0..n {
                    if !self.entries[i][k].is_zero() && !other.entries[k][j].is_zero() {
                        let t = &self.entries[i][k] * &other.entries[k][j];
                        cell.add_scaled(&t, &C::one());
                    }
                }
            }
        }
        Self { entries: out }
    }

    /// `sum_k poly[k] M^k` by Horner's rule.
    pub fn eval_poly(&self, poly: &[XYPoly<C>]) -> Self {
        let n = self.size();
        let rank = self.entries[0][0].rank();
        let mut acc = Self::identity(rank, n).scale(&XYPoly::zero(rank));
        for c in poly.iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                acc.entries[i][i].add_scaled(c, &C::one());
            }
        }
        acc
    }

    fn scale(&self, c: &XYPoly<C>) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|e| e * c).collect())
                .collect(),
        }
    }
}

/// Companion matrices of the `p`- and `q`-direction recurrences.
pub fn build_companions<C: Coeff>(gf: &RationalGF<C>) -> (CompanionMatrix<C>, CompanionMatrix<C>) {
    (
        CompanionMatrix::from_recurrence(2, &recurrence_coeffs(gf.p1())),
        CompanionMatrix::from_recurrence(2, &recurrence_coeffs(gf.p2())),
    )
}

/// Whether `P1(M_x) = 0` and `P2(M_y) = 0`.
pub fn minimal_poly_check<C: Coeff>(
    gf: &RationalGF<C>,
    companions: &(CompanionMatrix<C>, CompanionMatrix<C>),
) -> bool {
    companions.0.eval_poly(gf.p1()).is_zero() && companions.1.eval_poly(gf.p2()).is_zero()
}

/// Weights of the Weyl orbit of `l_i`, each once.
pub fn orbit_shifts(rs: &RootSystem, i: usize) -> Vec<Weight> {
    rs.orbit(&rs.fundamental_weight(i))
}
