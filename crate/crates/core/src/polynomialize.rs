//! Rewriting W-invariant Laurent polynomials in the generalized cosines.
//!
//! A W-invariant Laurent polynomial is determined by its coefficients on
//! dominant exponents, so the reduction works on that dominant part only:
//! repeatedly take the highest remaining dominant exponent `a_1 e_1 + a_2 e_2`
//! and subtract the matching multiple of `x^{a_1} y^{a_2}`, whose own highest
//! term sits at exactly that exponent.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::orbit::{variable_laurents, Kind};
use crate::rootsystem::{Dominance, RootSystem, Weight};
use crate::scalar::Coeff;
use crate::xypoly::{Degree, XYPoly};

/// Coefficients of a W-invariant polynomial on dominant exponents.
type DominantPart<C> = BTreeMap<Weight, C>;

pub struct VariableBasis<C> {
    rs: RootSystem,
    kind: Kind,
    var_laurents: Vec<LaurentPoly<C>>,
    leading_weights: Vec<Weight>,
    leading_coeffs: Vec<C>,
    monomials: RwLock<HashMap<Degree, Arc<DominantPart<C>>>>,
}

impl<C: Coeff> VariableBasis<C> {
    pub fn new(rs: &RootSystem, kind: Kind) -> Result<Self> {
        let var_laurents = variable_laurents::<C>(rs, kind)?;
        let leading_weights: Vec<Weight> = (0..rs.rank()).map(|i| rs.fundamental_weight(i)).collect();
        let leading_coeffs: Vec<C> = var_laurents
            .iter()
            .zip(&leading_weights)
            .map(|(v, w)| v.coeff(w))
            .collect();
        for (i, v) in var_laurents.iter().enumerate() {
            let top = highest_terms(rs, v);
            if top != [leading_weights[i]] {
                return Err(Error::NonDominantLeader(format!("{top:?}")));
            }
        }
        Ok(Self {
            rs: rs.clone(),
            kind,
            var_laurents,
            leading_weights,
            leading_coeffs,
            monomials: RwLock::new(HashMap::new()),
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn var_laurents(&self) -> &[LaurentPoly<C>] {
        &self.var_laurents
    }

    pub fn leading_weights(&self) -> &[Weight] {
        &self.leading_weights
    }

    pub fn leading_coeffs(&self) -> &[C] {
        &self.leading_coeffs
    }

    /// Rewrites a W-invariant Laurent polynomial as a polynomial in the variables.
    pub fn reduce(&self, f: &LaurentPoly<C>) -> Result<XYPoly<C>> {
        Ok(self.reduce_counting(f)?.0)
    }

    /// [`reduce`](Self::reduce), also returning the number of elimination steps.
    pub fn reduce_counting(&self, f: &LaurentPoly<C>) -> Result<(XYPoly<C>, usize)> {
        let rank = self.rank();
        if f.rank() != rank {
            return Err(Error::RankMismatch(rank, f.rank()));
        }
        for i in 0..rank {
            if f.apply_weyl(self.rs.generator(i)) != *f {
                return Err(Error::NotInvariant(i + 1));
            }
        }
        if f.is_zero() {
            return Ok((XYPoly::zero(rank), 0));
        }
        let top = highest_terms(&self.rs, f);
        if let Some(bad) = top.iter().find(|w| !w.is_dominant()) {
            return Err(Error::NonDominantLeader(bad.to_string()));
        }
        let mut below: Vec<Weight> = self
            .dominance_maxima(f)
            .iter()
            .flat_map(|t| self.rs.dominant_weights_below(t))
            .collect();
        below.sort();
        below.dedup();
        let bound = below.len();
        // each subtracted monomial only touches exponents strictly lower than its
        // leader, so one sweep in decreasing (height, weight) order suffices
        let mut order: Vec<(Rational64, Weight)> = below.into_iter().map(|w| (self.rs.height(&w), w)).collect();
        order.sort_unstable();

        let mut rem: HashMap<Weight, C> = f
            .terms()
            .filter(|(w, _)| w.is_dominant())
            .map(|(w, c)| (*w, c.clone()))
            .collect();
        let mut out = XYPoly::zero(rank);
        let mut steps = 0;
        for (_, lead) in order.iter().rev() {
            let Some(c) = rem.remove(lead) else { continue };
            if c.is_zero() {
                continue;
            }
            steps += 1;
            let deg = weight_to_degree(lead);
            let norm = (0..rank).fold(C::one(), |acc, i| {
                (0..deg.0[i]).fold(acc, |a, _| a * self.leading_coeffs[i].clone())
            });
            let factor = c / norm;
            let mono = self.monomial_dominant(deg);
            for (w, v) in mono.iter() {
                if w == lead {
                    continue;
                }
                let entry = rem.entry(*w).or_insert_with(C::zero);
                *entry = entry.clone() - v.clone() * factor.clone();
            }
            out.add_term(deg, factor);
        }
        if rem.values().any(|c| !c.is_zero()) {
            return Err(Error::ReductionDiverged(bound));
        }
        Ok((out, steps))
    }

    /// Substitutes the variable Laurent polynomials into `p`.
    pub fn expand(&self, p: &XYPoly<C>) -> LaurentPoly<C> {
        assert_eq!(p.rank(), self.rank(), "rank mismatch");
        let mut dominant: DominantPart<C> = BTreeMap::new();
        for (d, c) in p.terms() {
            for (w, v) in self.monomial_dominant(*d).iter() {
                let e = dominant.entry(*w).or_insert_with(C::zero);
                *e = e.clone() + v.clone() * c.clone();
            }
        }
        self.unfold(&dominant)
    }

    /// Full Laurent expansion of the monomial `x^a y^b`.
    pub fn monomial(&self, d: Degree) -> LaurentPoly<C> {
        self.unfold(&self.monomial_dominant(d))
    }

    /// Dominant exponents of `f` not strictly below another one.
    fn dominance_maxima(&self, f: &LaurentPoly<C>) -> Vec<Weight> {
        let mut dominant: Vec<(Rational64, Weight)> = f
            .terms()
            .filter(|(w, _)| w.is_dominant())
            .map(|(w, _)| (self.rs.height(w), *w))
            .collect();
        dominant.sort_unstable_by(|a, b| b.cmp(a));
        let mut maxima: Vec<Weight> = Vec::new();
        for (_, w) in dominant {
            if !maxima
                .iter()
                .any(|m| self.rs.dominance_compare(&w, m) == Dominance::Less)
            {
                maxima.push(w);
            }
        }
        maxima
    }

    fn unfold(&self, dominant: &DominantPart<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero(self.rank());
        for (w, c) in dominant {
            if c.is_zero() {
                continue;
            }
            for v in self.rs.orbit(w) {
                out.add_term(v, c.clone());
            }
        }
        out
    }

    fn monomial_dominant(&self, d: Degree) -> Arc<DominantPart<C>> {
        if let Some(m) = self.monomials.read().expect("cache lock").get(&d) {
            return m.clone();
        }
        let computed = Arc::new(if d.is_constant() {
            BTreeMap::from([(Weight::zero(self.rank()), C::one())])
        } else {
            let i = if d.0[1] > 0 { 1 } else { 0 };
            let mut lower = d;
            lower.0[i] -= 1;
            let base = self.monomial_dominant(lower);
            self.times_variable(&base, i)
        });
        self.monomials
            .write()
            .expect("cache lock")
            .entry(d)
            .or_insert(computed)
            .clone()
    }

    fn times_variable(&self, base: &DominantPart<C>, i: usize) -> DominantPart<C> {
        let mut out: DominantPart<C> = BTreeMap::new();
        for (w, c) in base {
            for v in self.rs.orbit(w) {
                for (s, k) in self.var_laurents[i].terms() {
                    let t = v + *s;
                    if t.is_dominant() {
                        let e = out.entry(t).or_insert_with(C::zero);
                        *e = e.clone() + c.clone() * k.clone();
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

fn weight_to_degree(w: &Weight) -> Degree {
    let mut d = [0u32, 0];
    for (i, c) in w.coords().iter().enumerate() {
        d[i] = u32::try_from(*c).expect("dominant weight");
    }
    Degree(d)
}

/// Exponents of maximal height.
fn highest_terms<C: Coeff>(rs: &RootSystem, f: &LaurentPoly<C>) -> Vec<Weight> {
    let mut best: Option<Rational64> = None;
    let mut out = Vec::new();
    for (w, _) in f.terms() {
        let h = rs.height(w);
        match best {
            Some(b) if h < b => {}
            Some(b) if h == b => out.push(*w),
            _ => {
                best = Some(h);
                out = vec![*w];
            }
        }
    }
    out
}
