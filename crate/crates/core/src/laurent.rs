//! Sparse Laurent polynomials with exponents in the weight lattice.
//!
//! A monomial `z^mu` stands for the exponential `e^{2 pi i (mu, phi)}`;
//! with `phi` in co-root coordinates this is `z1^{mu_1} z2^{mu_2}` where
//! `z_i = e^{2 pi i phi_i}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsystem::{Weight, WeylElement, MAX_RANK};
use crate::scalar::{Coeff, Real};

#[derive(Clone, PartialEq)]
pub struct LaurentPoly<C> {
    rank: usize,
    terms: BTreeMap<Weight, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(rank: usize, c: C) -> Self {
        Self::monomial(Weight::zero(rank), c)
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, C::one())
    }

    pub fn monomial(exponent: Weight, c: C) -> Self {
        let mut p = Self::zero(exponent.rank());
        p.add_term(exponent, c);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(rank: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Weight, C)>,
    {
        let mut p = Self::zero(rank);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Weight, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, exponent: &Weight) -> C {
        self.terms.get(exponent).cloned().unwrap_or_else(C::zero)
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Weight, &C)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, exponent: Weight, c: C) {
        debug_assert_eq!(exponent.rank(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponent) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&exponent);
                }
            }
            None => {
                self.terms.insert(exponent, c);
            }
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &C::one(), Weight::zero(self.rank));
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (wb, cb) in &other.terms {
            out.add_scaled(self, cb, *wb);
        }
        Ok(out)
    }

    /// `self += c * z^shift * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &C, shift: Weight) {
        if c.is_zero() {
            return;
        }
        for (w, v) in &other.terms {
            self.add_term(*w + shift, v.clone() * c.clone());
        }
    }

    pub fn scale(&self, r: &C) -> Self {
        if r.is_zero() {
            return Self::zero(self.rank);
        }
        Self {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (*w, c.clone() * r.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient `q` with `q * den == self`, by leading-term elimination in lex order.
    pub fn exact_divide(&self, den: &Self) -> Result<Self> {
        self.check_rank(den)?;
        let (den_lead, den_lc) = match den.leading_term() {
            Some((w, c)) => (*w, c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        if self.is_zero() {
            return Ok(Self::zero(self.rank));
        }
        // Newton polytope of the quotient lies in the coordinate box below.
        let (num_lo, num_hi) = self.bounding_box();
        let (den_lo, den_hi) = den.bounding_box();
        let mut lo = [0; MAX_RANK];
        let mut hi = [0; MAX_RANK];
        for i in 0..self.rank {
            lo[i] = num_lo[i] - den_lo[i];
            hi[i] = num_hi[i] - den_hi[i];
        }

        let mut rem = self.clone();
        let mut quotient = Self::zero(self.rank);
        while let Some((lead, lc)) = rem.leading_term() {
            let shift = *lead - den_lead;
            let in_box = (0..self.rank).all(|i| lo[i] <= shift.get(i) && shift.get(i) <= hi[i]);
            if !in_box {
                return Err(Error::NonDivisible(lead.to_string()));
            }
            let factor = lc.clone() / den_lc.clone();
            rem.add_scaled(den, &-factor.clone(), shift);
            quotient.add_term(shift, factor);
        }
        Ok(quotient)
    }

    fn bounding_box(&self) -> ([i64; MAX_RANK], [i64; MAX_RANK]) {
        let mut lo = [i64::MAX; MAX_RANK];
        let mut hi = [i64::MIN; MAX_RANK];
        for w in self.terms.keys() {
            for i in 0..self.rank {
                lo[i] = lo[i].min(w.get(i));
                hi[i] = hi[i].max(w.get(i));
            }
        }
        (lo, hi)
    }

    /// Replaces every exponent `mu` by `w mu`.
    pub fn apply_weyl(&self, w: &WeylElement) -> Self {
        Self {
            rank: self.rank,
            terms: self.terms.iter().map(|(mu, c)| (w.act(mu), c.clone())).collect(),
        }
    }

    /// Substitutes `z_i = point[i]`.
    pub fn evaluate<F: Real>(&self, point: &[Complex<F>]) -> Result<Complex<F>> {
        if point.len() != self.rank {
            return Err(Error::RankMismatch(self.rank, point.len()));
        }
        if let Some(i) = point.iter().position(|z| z.re.is_zero() && z.im.is_zero()) {
            return Err(Error::ZeroComponent(i));
        }
        let mut acc = Complex::new(F::zero(), F::zero());
        for (w, c) in &self.terms {
            let mut term = Complex::new(F::from_f64(c.to_f64_lossy()).unwrap_or_else(F::nan), F::zero());
            for (i, z) in point.iter().enumerate() {
                term = term * z.powi(w.get(i) as i32);
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Evaluates at `z_i = e^{2 pi i angles_i}` using one phase per term.
    ///
    /// Phases are reduced to `[-1/2, 1/2)` so conjugate terms cancel exactly,
    /// and the terms are added with Neumaier compensation.
    pub fn evaluate_on_torus<F: Real>(&self, angles: &[F]) -> Result<Complex<F>> {
        if angles.len() != self.rank {
            return Err(Error::RankMismatch(self.rank, angles.len()));
        }
        let two_pi = F::from_f64(std::f64::consts::TAU).unwrap();
        let mut re = CompensatedSum::new();
        let mut im = CompensatedSum::new();
        for (w, c) in &self.terms {
            let phase = angles
                .iter()
                .enumerate()
                .fold(F::zero(), |s, (i, a)| s + F::from_i64(w.get(i)).unwrap() * *a);
            let phase = phase - phase.round();
            let c = F::from_f64(c.to_f64_lossy()).unwrap_or_else(F::nan);
            let (sin, cos) = (two_pi * phase).sin_cos();
            re.add(c * cos);
            im.add(c * sin);
        }
        Ok(Complex::new(re.total(), im.total()))
    }

    pub fn to_records(&self) -> Vec<LaurentTermRecord> {
        self.terms
            .iter()
            .map(|(w, c)| LaurentTermRecord {
                exponent: w.coords().to_vec(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn from_records(rank: usize, records: &[LaurentTermRecord]) -> Result<Self> {
        let mut p = Self::zero(rank);
        for r in records {
            if r.exponent.len() != rank {
                return Err(Error::RankMismatch(rank, r.exponent.len()));
            }
            let c: C = r
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", r.coeff)))?;
            p.add_term(Weight::new(&r.exponent), c);
        }
        Ok(p)
    }
}

/// One serialized term: `{"exponent": [..], "coeff": "p/q"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentTermRecord {
    pub exponent: Vec<i64>,
    pub coeff: String,
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(self, rhs: Self) -> LaurentPoly<C> {
        self.try_add(rhs).expect("rank mismatch")
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        self.check_rank(rhs).expect("rank mismatch");
        let mut out = self.clone();
        out.add_scaled(rhs, &-C::one(), Weight::zero(self.rank));
        out
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        self.try_mul(rhs).expect("rank mismatch")
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*z^{w}")?;
        }
        Ok(())
    }
}

/// Neumaier's compensated summation.
struct CompensatedSum<F> {
    sum: F,
    carry: F,
}

impl<F: Real> CompensatedSum<F> {
    fn new() -> Self {
        Self {
            sum: F::zero(),
            carry: F::zero(),
        }
    }

    fn add(&mut self, v: F) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry = self.carry + ((self.sum - t) + v);
        } else {
            self.carry = self.carry + ((v - t) + self.sum);
        }
        self.sum = t;
    }

    fn total(&self) -> F {
        self.sum + self.carry
    }
}
