//! Polynomials in the generalized cosines `x` (and `y` at rank 2).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Coeff, Real};

const VARS: [char; 2] = ['x', 'y'];

/// Exponent tuple `(a, b)` of `x^a y^b`, ordered graded-lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Degree(pub [u32; 2]);

impl Degree {
    pub fn total(&self) -> u32 {
        self.0[0] + self.0[1]
    }

    pub fn is_constant(&self) -> bool {
        self.total() == 0
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        Degree([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1]])
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct XYPoly<C> {
    rank: usize,
    terms: BTreeMap<Degree, C>,
}

impl<C: Coeff> XYPoly<C> {
    pub fn zero(rank: usize) -> Self {
        assert!(rank == 1 || rank == 2);
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(rank: usize, c: C) -> Self {
        Self::monomial(rank, Degree([0, 0]), c)
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, C::one())
    }

    pub fn monomial(rank: usize, d: Degree, c: C) -> Self {
        let mut p = Self::zero(rank);
        p.add_term(d, c);
        p
    }

    /// The variable `x_{i+1}`.
    pub fn var(rank: usize, i: usize) -> Self {
        assert!(i < rank);
        let mut d = [0, 0];
        d[i] = 1;
        Self::monomial(rank, Degree(d), C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Degree, C)>>(rank: usize, terms: I) -> Self {
        let mut p = Self::zero(rank);
        for (d, c) in terms {
            p.add_term(d, c);
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&Degree([0, 0])).is_one()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Degree, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &Degree) -> C {
        self.terms.get(d).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, d: Degree, c: C) {
        debug_assert!(self.rank == 2 || d.0[1] == 0);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&d);
                }
            }
            None => {
                self.terms.insert(d, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        for (d, v) in &other.terms {
            self.add_term(*d, v.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        Self {
            rank: self.rank,
            terms: self.terms.iter().map(|(d, v)| (*d, v.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.rank), |acc, _| &acc * self)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Degree::total).max()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Coeff::is_integral)
    }

    /// Exact evaluation at `(x, y)`.
    pub fn eval_exact(&self, vals: &[C]) -> C {
        assert_eq!(vals.len(), self.rank);
        let pw = |v: &C, e: u32| (0..e).fold(C::one(), |acc, _| acc * v.clone());
        self.terms.iter().fold(C::zero(), |acc, (d, c)| {
            let mut t = c.clone();
            for (i, v) in vals.iter().enumerate() {
                t = t * pw(v, d.0[i]);
            }
            acc + t
        })
    }

    /// Floating-point evaluation at complex `(x, y)`.
    pub fn eval<F: Real>(&self, vals: &[Complex<F>]) -> Complex<F> {
        assert_eq!(vals.len(), self.rank);
        self.terms.iter().fold(Complex::new(F::zero(), F::zero()), |acc, (d, c)| {
            let mut t = Complex::new(F::from_f64(c.to_f64_lossy()).unwrap_or_else(F::nan), F::zero());
            for (i, v) in vals.iter().enumerate() {
                t = t * v.powu(d.0[i]);
            }
            acc + t
        })
    }

    /// Applies `f` to each coefficient, e.g. to change the coefficient ring.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> XYPoly<D> {
        XYPoly::from_terms(self.rank, self.terms.iter().map(|(d, c)| (*d, f(c))))
    }

    pub fn to_records(&self) -> Vec<XYTermRecord> {
        self.terms
            .iter()
            .rev()
            .map(|(d, c)| XYTermRecord {
                degree: d.0[..self.rank].to_vec(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn from_records(rank: usize, records: &[XYTermRecord]) -> Result<Self> {
        let mut p = Self::zero(rank);
        for r in records {
            if r.degree.len() != rank {
                return Err(Error::RankMismatch(rank, r.degree.len()));
            }
            let c: C = r
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", r.coeff)))?;
            let mut d = [0, 0];
            d[..rank].copy_from_slice(&r.degree);
            p.add_term(Degree(d), c);
        }
        Ok(p)
    }

    /// LaTeX rendering in descending graded-lex order, e.g. `x^{2}-x-y-1`.
    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    /// Plain rendering, e.g. `x^2-x-y-1`; parses back with [`FromStr`].
    pub fn to_plain(&self) -> String {
        self.render(false)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (d, c)) in self.terms.iter().rev().enumerate() {
            let negative = *c < C::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if negative {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let unit = abs.is_one();
            if !unit || d.is_constant() {
                out.push_str(&render_coeff(&abs, latex, !d.is_constant()));
            }
            for (v, &e) in VARS.iter().zip(d.0.iter()).take(self.rank) {
                match e {
                    0 => {}
                    1 => out.push(*v),
                    _ if latex => out.push_str(&format!("{v}^{{{e}}}")),
                    _ => out.push_str(&format!("{v}^{e}")),
                }
            }
        }
        out
    }
}

fn render_coeff<C: Coeff>(c: &C, latex: bool, followed_by_var: bool) -> String {
    let s = c.to_string();
    match s.split_once('/') {
        Some((n, d)) if latex => format!("\\frac{{{n}}}{{{d}}}"),
        Some(_) if followed_by_var => format!("({s})"),
        _ => s,
    }
}

/// One serialized term: `{"degree": [a, b], "coeff": "p/q"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XYTermRecord {
    pub degree: Vec<u32>,
    pub coeff: String,
}

impl<C: Coeff> Add for &XYPoly<C> {
    type Output = XYPoly<C>;

    fn add(self, rhs: Self) -> XYPoly<C> {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one());
        out
    }
}

impl<C: Coeff> Sub for &XYPoly<C> {
    type Output = XYPoly<C>;

    fn sub(self, rhs: Self) -> XYPoly<C> {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        out.add_scaled(rhs, &-C::one());
        out
    }
}

impl<C: Coeff> Mul for &XYPoly<C> {
    type Output = XYPoly<C>;

    fn mul(self, rhs: Self) -> XYPoly<C> {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = XYPoly::zero(self.rank);
        for (da, ca) in &self.terms {
            for (db, cb) in &rhs.terms {
                out.add_term(*da + *db, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &XYPoly<C> {
    type Output = XYPoly<C>;

    fn neg(self) -> XYPoly<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coeff> fmt::Display for XYPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}

impl<C: Coeff> fmt::Debug for XYPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}

impl<C: Coeff> XYPoly<C> {
    /// Parses `x^2-x-y-1`, `x^{2}y`, `2xy^2`, `-(x^2-2y-1)`, `(3/2)x`, `\frac{3}{2}x`.
    ///
    /// The rank is 2 unless stated otherwise via [`XYPoly::parse_with_rank`].
    pub fn parse_with_rank(s: &str, rank: usize) -> Result<Self> {
        let mut p = Parser {
            chars: s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect(),
            pos: 0,
            rank,
        };
        let poly = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(Error::Parse(format!("trailing input at {} in {s:?}", p.pos)));
        }
        Ok(poly)
    }
}

impl<C: Coeff> FromStr for XYPoly<C> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_with_rank(s, 2)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    rank: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        if self.chars[self.pos..].iter().take(n).copied().eq(s.chars()) {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!("{what} at position {}", self.pos)))
    }

    fn expr<C: Coeff>(&mut self) -> Result<XYPoly<C>> {
        let mut acc = XYPoly::zero(self.rank);
        let mut first = true;
        loop {
            let sign = if self.eat('-') {
                -C::one()
            } else if self.eat('+') || first {
                C::one()
            } else {
                break;
            };
            first = false;
            let t = self.term()?;
            acc.add_scaled(&t, &sign);
            if !matches!(self.peek(), Some('+') | Some('-')) {
                break;
            }
        }
        Ok(acc)
    }

    fn term<C: Coeff>(&mut self) -> Result<XYPoly<C>> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '(' || c == '\\' || VARS.contains(&c)) {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor<C: Coeff>(&mut self) -> Result<XYPoly<C>> {
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                inner
            }
            Some('\\') => {
                if !self.eat_str("\\frac{") {
                    return self.err("unknown command");
                }
                let n = self.integer()?;
                if !self.eat_str("}{") {
                    return self.err("expected '}{'");
                }
                let d = self.integer()?;
                if !self.eat('}') {
                    return self.err("expected '}'");
                }
                let c: C = format!("{n}/{d}")
                    .parse()
                    .map_err(|_| Error::Parse("bad fraction".into()))?;
                XYPoly::constant(self.rank, c)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let text = if self.eat('/') { format!("{n}/{}", self.integer()?) } else { n };
                let c: C = text.parse().map_err(|_| Error::Parse(format!("bad number {text}")))?;
                XYPoly::constant(self.rank, c)
            }
            Some(v) if VARS[..self.rank].contains(&v) => {
                self.pos += 1;
                XYPoly::var(self.rank, if v == 'x' { 0 } else { 1 })
            }
            _ => return self.err("unexpected token"),
        };
        if self.eat('^') {
            let e = if self.eat('{') {
                let e = self.integer()?;
                if !self.eat('}') {
                    return self.err("expected '}'");
                }
                e
            } else {
                self.integer()?
            };
            let e: u32 = e.parse().map_err(|_| Error::Parse("bad exponent".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }
}
