//! Generating functions built from the diagonal matrices
//! `M_k = diag(z^{w_1 l_k}, ..., z^{w_|W| l_k})`.
//!
//! Every `M_k` is diagonal, so the coefficient of `p_1^{n_1} ... p_d^{n_d}`
//! in `tr(R_{p_1} ... R_{p_d})` with `R_p = (I - p M)^{-1}` is just
//! `sum_j z^{n_1 mu_{1j} + ... + n_d mu_{dj}}`; no series object is built.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::orbit::Kind;
use crate::polynomialize::VariableBasis;
use crate::rootsystem::{RootSystem, Weight};
use crate::scalar::Coeff;
use crate::xypoly::XYPoly;

/// Which diagonal positions enter a trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignClass {
    /// Elements with `det w = +1`.
    Plus,
    /// Elements with `det w = -1`.
    Minus,
    /// `Plus` minus `Minus`: the antisymmetric sums.
    Difference,
    /// Every element with weight one: the symmetric sums.
    All,
}

impl SignClass {
    fn weight(self, det: i64) -> i64 {
        match self {
            SignClass::Plus => i64::from(det == 1),
            SignClass::Minus => i64::from(det == -1),
            SignClass::Difference => det,
            SignClass::All => 1,
        }
    }
}

/// Diagonal of `M_k`: position `j` holds the exponent `w_j l_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalExpMatrix {
    entries: Vec<Weight>,
    dets: Vec<i64>,
}

impl DiagonalExpMatrix {
    pub fn new(rs: &RootSystem, k: usize) -> Self {
        let l = rs.fundamental_weight(k);
        Self {
            entries: rs.elements().iter().map(|w| w.act(&l)).collect(),
            dets: rs.elements().iter().map(|w| w.det()).collect(),
        }
    }

    pub fn entries(&self) -> &[Weight] {
        &self.entries
    }

    pub fn det(&self, j: usize) -> i64 {
        self.dets[j]
    }

    /// Exponents at the positions of one sign class (the diagonal of `M_k^+` or `M_k^-`).
    pub fn class_entries(&self, class: SignClass) -> Vec<Weight> {
        self.entries
            .iter()
            .zip(&self.dets)
            .filter(|(_, d)| class.weight(**d) != 0)
            .map(|(e, _)| *e)
            .collect()
    }
}

/// Coefficient of `p^n` (multi-index) in the chosen resolvent trace.
pub fn coefficient_trace<C: Coeff>(rs: &RootSystem, signs: SignClass, n: &[u32]) -> LaurentPoly<C> {
    assert_eq!(n.len(), rs.rank(), "index length must equal rank");
    let mats: Vec<DiagonalExpMatrix> = (0..rs.rank()).map(|k| DiagonalExpMatrix::new(rs, k)).collect();
    let rank = rs.rank();
    LaurentPoly::from_terms(
        rank,
        (0..rs.order()).filter_map(|j| {
            let s = signs.weight(mats[0].det(j));
            (s != 0).then(|| {
                let e = mats
                    .iter()
                    .zip(n)
                    .fold(Weight::zero(rank), |acc, (m, &nk)| acc + m.entries[j].scale(i64::from(nk)));
                (e, C::from_int(s))
            })
        }),
    )
}

fn check_kind<C: Coeff>(basis: &VariableBasis<C>, kind: Kind) -> Result<()> {
    if basis.kind() != kind {
        return Err(Error::Unsupported(format!("basis is {} kind, need {kind}", basis.kind())));
    }
    Ok(())
}

/// `U_n` from the ratio of trace coefficients at `n + rho` and `rho`.
pub fn second_kind_poly<C: Coeff>(basis: &VariableBasis<C>, n: &[u32]) -> Result<XYPoly<C>> {
    check_kind(basis, Kind::Second)?;
    let rs = basis.root_system();
    let shifted: Vec<u32> = n.iter().map(|v| v + 1).collect();
    let ones = vec![1; n.len()];
    let num = coefficient_trace::<C>(rs, SignClass::Difference, &shifted);
    let den = coefficient_trace::<C>(rs, SignClass::Difference, &ones);
    basis.reduce(&num.exact_divide(&den)?)
}

/// Non-normalized first-kind polynomial: the full trace coefficient at `n`.
pub fn first_kind_poly<C: Coeff>(basis: &VariableBasis<C>, n: &[u32]) -> Result<XYPoly<C>> {
    check_kind(basis, Kind::First)?;
    basis.reduce(&coefficient_trace(basis.root_system(), SignClass::All, n))
}

/// Dispatches on the basis kind.
pub fn chebyshev_poly<C: Coeff>(basis: &VariableBasis<C>, n: &[u32]) -> Result<XYPoly<C>> {
    match basis.kind() {
        Kind::First => first_kind_poly(basis, n),
        Kind::Second => second_kind_poly(basis, n),
    }
}

/// `F(p, q) = (P1(p) P2(q))^{-1} sum_{i,j} K_ij p^i q^j` with coefficients in `x, y`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalGF<C: Coeff> {
    kind: Kind,
    denominators: [Vec<XYPoly<C>>; 2],
    numerator: BTreeMap<(usize, usize), XYPoly<C>>,
}

impl<C: Coeff> RationalGF<C> {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Coefficients of `P1` in ascending powers of `p`.
    pub fn p1(&self) -> &[XYPoly<C>] {
        &self.denominators[0]
    }

    /// Coefficients of `P2` in ascending powers of `q`.
    pub fn p2(&self) -> &[XYPoly<C>] {
        &self.denominators[1]
    }

    pub fn denominator(&self, k: usize) -> &[XYPoly<C>] {
        &self.denominators[k]
    }

    pub fn k(&self, i: usize, j: usize) -> XYPoly<C> {
        self.numerator.get(&(i, j)).cloned().unwrap_or_else(|| XYPoly::zero(2))
    }

    /// Nonzero numerator entries in `(i, j)` order.
    pub fn numerator(&self) -> &BTreeMap<(usize, usize), XYPoly<C>> {
        &self.numerator
    }
}

/// `prod_j (1 - t z^{e_j})` as coefficients of `t^0 .. t^len`.
fn characteristic_coeffs<C: Coeff>(rank: usize, exps: &[Weight]) -> Vec<LaurentPoly<C>> {
    let mut coeffs = vec![LaurentPoly::one(rank)];
    for e in exps {
        let mut next = coeffs.clone();
        next.push(LaurentPoly::zero(rank));
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1].add_scaled(c, &-C::one(), *e);
        }
        coeffs = next;
    }
    coeffs
}

/// Closed-form rational generating function for a rank-2 algebra.
///
/// Denominators come from the diagonals of `M_k^+` (second kind) or from the
/// distinct orbit of `l_k` (first kind); the numerator is the convolution of
/// the polynomial table with both denominators.
pub fn closed_form_gf<C: Coeff>(basis: &VariableBasis<C>) -> Result<RationalGF<C>> {
    let rs = basis.root_system();
    if rs.rank() != 2 {
        return Err(Error::Unsupported("closed-form generating function needs rank 2".into()));
    }
    let mut denominators: [Vec<XYPoly<C>>; 2] = [Vec::new(), Vec::new()];
    for (k, den) in denominators.iter_mut().enumerate() {
        let exps = match basis.kind() {
            Kind::Second => DiagonalExpMatrix::new(rs, k).class_entries(SignClass::Plus),
            Kind::First => rs.orbit(&rs.fundamental_weight(k)),
        };
        *den = characteristic_coeffs::<C>(2, &exps)
            .iter()
            .map(|c| basis.reduce(c))
            .collect::<Result<_>>()?;
    }
    let (d1, d2) = (denominators[0].len() - 1, denominators[1].len() - 1);
    let mut table = BTreeMap::new();
    for a in 0..=d1 {
        for b in 0..=d2 {
            table.insert((a, b), chebyshev_poly(basis, &[a as u32, b as u32])?);
        }
    }
    let mut numerator = BTreeMap::new();
    for i in 0..=d1 {
        for j in 0..=d2 {
            let mut k = XYPoly::zero(2);
            for a in 0..=i {
                for b in 0..=j {
                    let term = &(&table[&(a, b)] * &denominators[0][i - a]) * &denominators[1][j - b];
                    k.add_scaled(&term, &C::one());
                }
            }
            if k.is_zero() {
                continue;
            }
            if i == d1 || j == d2 {
                return Err(Error::ConvolutionNotTerminating(i, j));
            }
            numerator.insert((i, j), k);
        }
    }
    Ok(RationalGF {
        kind: basis.kind(),
        denominators,
        numerator,
    })
}

/// Outcome of expanding a [`RationalGF`] back into its power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesCheck {
    pub ok: bool,
    pub compared: usize,
    pub first_mismatch: Option<(usize, usize)>,
}

/// Long-divides the numerator by `P1` then `P2` up to `(max_m, max_n)` and
/// compares every coefficient with the directly computed polynomial.
pub fn gf_series_check<C: Coeff>(
    gf: &RationalGF<C>,
    basis: &VariableBasis<C>,
    max_m: usize,
    max_n: usize,
) -> Result<SeriesCheck> {
    let series = gf_series(gf, max_m, max_n);
    let mut compared = 0;
    for (i, row) in series.iter().enumerate() {
        for (j, coeff) in row.iter().enumerate() {
            compared += 1;
            let direct = chebyshev_poly(basis, &[i as u32, j as u32])?;
            if *coeff != direct {
                return Ok(SeriesCheck {
                    ok: false,
                    compared,
                    first_mismatch: Some((i, j)),
                });
            }
        }
    }
    Ok(SeriesCheck {
        ok: true,
        compared,
        first_mismatch: None,
    })
}

/// Power-series coefficients of `K / (P1 P2)`; `P1`, `P2` have constant term 1.
#[allow(clippy::needless_range_loop)]
pub fn gf_series<C: Coeff>(gf: &RationalGF<C>, max_m: usize, max_n: usize) -> Vec<Vec<XYPoly<C>>> {
    let (p1, p2) = (gf.p1(), gf.p2());
    debug_assert!(p1[0].is_one() && p2[0].is_one());
    let mut partial = vec![vec![XYPoly::zero(2); max_n + 1]; max_m + 1];
    for i in 0..=max_m {
        for j in 0..=max_n {
            let mut acc = gf.k(i, j);
            for k in 1..=i.min(p1.len() - 1) {
                acc = &acc - &(&p1[k] * &partial[i - k][j]);
            }
            partial[i][j] = acc;
        }
    }
    let mut coeffs = Vec::with_capacity(max_m + 1);
    for row in &partial {
        let mut out: Vec<XYPoly<C>> = Vec::with_capacity(max_n + 1);
        for (j, entry) in row.iter().enumerate() {
            let mut acc = entry.clone();
            for k in 1..=j.min(p2.len() - 1) {
                acc = &acc - &(&p2[k] * &out[j - k]);
            }
            out.push(acc);
        }
        coeffs.push(out);
    }
    coeffs
}
