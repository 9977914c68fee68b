//! JSON, LaTeX and plain-text artifacts for polynomial tables and generating functions.
//!
//! Every emitter walks entries in a fixed order and prints polynomials in
//! descending graded-lex order, so equal inputs give byte-identical output.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genfunc::RationalGF;
use crate::orbit::Kind;
use crate::rootsystem::AlgebraId;
use crate::scalar::Coeff;
use crate::xypoly::{XYPoly, XYTermRecord};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Latex,
    Plain,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Self::Json),
            "latex" | "tex" => Ok(Self::Latex),
            "plain" | "text" => Ok(Self::Plain),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

/// Polynomials indexed by `(m, n)`, in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyTable<C: Coeff> {
    pub algebra: AlgebraId,
    pub kind: Kind,
    pub max_m: u32,
    pub max_n: u32,
    pub entries: Vec<(u32, u32, XYPoly<C>)>,
}

impl<C: Coeff> PolyTable<C> {
    /// Indices covered by a table; rank-one algebras only use `m`.
    pub fn indices(algebra: AlgebraId, max_m: u32, max_n: u32) -> Vec<(u32, u32)> {
        let max_n = if algebra.rank() == 1 { 0 } else { max_n };
        (0..=max_m).flat_map(|m| (0..=max_n).map(move |n| (m, n))).collect()
    }

    pub fn get(&self, m: u32, n: u32) -> Option<&XYPoly<C>> {
        self.entries.iter().find(|(a, b, _)| (*a, *b) == (m, n)).map(|(_, _, p)| p)
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Latex => self.to_latex(),
            OutputFormat::Plain => self.to_plain(),
        }
    }

    pub fn to_json(&self) -> String {
        let doc = TableDoc {
            schema: SCHEMA_VERSION,
            algebra: self.algebra,
            kind: self.kind,
            max_m: self.max_m,
            max_n: self.max_n,
            polynomials: self
                .entries
                .iter()
                .map(|(m, n, p)| TableEntry {
                    m: *m,
                    n: *n,
                    poly: p.to_records(),
                    text: p.to_plain(),
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: TableDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.schema != SCHEMA_VERSION {
            return Err(Error::Parse(format!("unsupported schema {}", doc.schema)));
        }
        let rank = doc.algebra.rank();
        let entries = doc
            .polynomials
            .iter()
            .map(|e| Ok((e.m, e.n, XYPoly::from_records(rank, &e.poly)?)))
            .collect::<Result<_>>()?;
        Ok(Self {
            algebra: doc.algebra,
            kind: doc.kind,
            max_m: doc.max_m,
            max_n: doc.max_n,
            entries,
        })
    }

    pub fn to_latex(&self) -> String {
        let symbol = symbol(self.kind);
        let mut s = format!(
            "% {} {} kind, m <= {}, n <= {}\n\\begin{{align*}}\n",
            self.algebra, self.kind, self.max_m, self.max_n
        );
        let last = self.entries.len().saturating_sub(1);
        for (k, (m, n, p)) in self.entries.iter().enumerate() {
            let end = if k == last { "" } else { "\\\\" };
            let _ = writeln!(s, "{symbol}_{{{m},{n}}} &= {}{end}", p.to_latex());
        }
        s.push_str("\\end{align*}\n");
        s
    }

    /// Reads back a table written by [`to_latex`](Self::to_latex).
    pub fn from_latex(s: &str) -> Result<Self> {
        let mut lines = s.lines();
        let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let words: Vec<&str> = header.trim_start_matches('%').split_whitespace().collect();
        let [alg, kind, "kind,", "m", "<=", max_m, "n", "<=", max_n] = words.as_slice() else {
            return Err(Error::Parse(format!("bad header {header:?}")));
        };
        let algebra: AlgebraId = alg.parse()?;
        let kind = match *kind {
            "first" => Kind::First,
            "second" => Kind::Second,
            other => return Err(Error::Parse(format!("bad kind {other:?}"))),
        };
        let parse_u32 = |v: &str| v.trim_end_matches(',').parse::<u32>().map_err(|e| Error::Parse(e.to_string()));
        let mut entries = Vec::new();
        for line in lines {
            let line = line.trim();
            let Some((lhs, rhs)) = line.split_once("&=") else { continue };
            let idx = lhs
                .trim()
                .split_once("_{")
                .and_then(|(_, r)| r.strip_suffix('}'))
                .ok_or_else(|| Error::Parse(format!("bad index in {line:?}")))?;
            let (m, n) = idx
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad index in {line:?}")))?;
            let body = rhs.trim().trim_end_matches("\\\\");
            entries.push((
                parse_u32(m)?,
                parse_u32(n)?,
                XYPoly::parse_with_rank(body, algebra.rank())?,
            ));
        }
        Ok(Self {
            algebra,
            kind,
            max_m: parse_u32(max_m)?,
            max_n: parse_u32(max_n)?,
            entries,
        })
    }

    pub fn to_plain(&self) -> String {
        let symbol = if self.kind == Kind::Second { "U" } else { "Phi" };
        let mut s = String::new();
        for (m, n, p) in &self.entries {
            if self.algebra.rank() == 1 {
                let _ = writeln!(s, "{symbol}({m}) = {}", p.to_plain());
            } else {
                let _ = writeln!(s, "{symbol}({m},{n}) = {}", p.to_plain());
            }
        }
        s
    }
}

fn symbol(kind: Kind) -> &'static str {
    match kind {
        Kind::First => "\\Phi",
        Kind::Second => "U",
    }
}

#[derive(Serialize, Deserialize)]
struct TableDoc {
    schema: u32,
    algebra: AlgebraId,
    kind: Kind,
    max_m: u32,
    max_n: u32,
    polynomials: Vec<TableEntry>,
}

#[derive(Serialize, Deserialize)]
struct TableEntry {
    m: u32,
    n: u32,
    poly: Vec<XYTermRecord>,
    text: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GfDoc {
    pub schema: u32,
    pub algebra: AlgebraId,
    pub kind: Kind,
    #[serde(rename = "P1")]
    pub p1: Vec<CoeffEntry>,
    #[serde(rename = "P2")]
    pub p2: Vec<CoeffEntry>,
    #[serde(rename = "K")]
    pub k: Vec<NumeratorEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffEntry {
    pub power: usize,
    pub poly: Vec<XYTermRecord>,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumeratorEntry {
    pub i: usize,
    pub j: usize,
    pub poly: Vec<XYTermRecord>,
    pub text: String,
}

fn coeff_entries<C: Coeff>(coeffs: &[XYPoly<C>]) -> Vec<CoeffEntry> {
    coeffs
        .iter()
        .enumerate()
        .map(|(power, p)| CoeffEntry {
            power,
            poly: p.to_records(),
            text: p.to_plain(),
        })
        .collect()
}

pub fn gf_doc<C: Coeff>(algebra: AlgebraId, gf: &RationalGF<C>) -> GfDoc {
    GfDoc {
        schema: SCHEMA_VERSION,
        algebra,
        kind: gf.kind(),
        p1: coeff_entries(gf.p1()),
        p2: coeff_entries(gf.p2()),
        k: gf
            .numerator()
            .iter()
            .map(|(&(i, j), p)| NumeratorEntry {
                i,
                j,
                poly: p.to_records(),
                text: p.to_plain(),
            })
            .collect(),
    }
}

pub fn render_gf<C: Coeff>(algebra: AlgebraId, gf: &RationalGF<C>, format: OutputFormat) -> String {
    let mut s = String::new();
    match format {
        OutputFormat::Json => {
            s = serde_json::to_string_pretty(&gf_doc(algebra, gf)).expect("generating function serializes");
            s.push('\n');
        }
        OutputFormat::Latex => {
            let _ = writeln!(s, "% {} {} kind generating function\n\\begin{{align*}}", algebra, gf.kind());
            for (name, var, coeffs) in [("P_1", "p", gf.p1()), ("P_2", "q", gf.p2())] {
                let _ = writeln!(s, "{name} &= {}\\\\", latex_series(coeffs, var));
            }
            let last = gf.numerator().len().saturating_sub(1);
            for (k, ((i, j), p)) in gf.numerator().iter().enumerate() {
                let end = if k == last { "" } else { "\\\\" };
                let _ = writeln!(s, "K_{{{i}{j}}} &= {}{end}", p.to_latex());
            }
            s.push_str("\\end{align*}\n");
        }
        OutputFormat::Plain => {
            for (name, coeffs) in [("P1", gf.p1()), ("P2", gf.p2())] {
                for (k, c) in coeffs.iter().enumerate() {
                    let _ = writeln!(s, "{name}[{k}] = {}", c.to_plain());
                }
            }
            for ((i, j), p) in gf.numerator() {
                let _ = writeln!(s, "K[{i},{j}] = {}", p.to_plain());
            }
        }
    }
    s
}

fn latex_series<C: Coeff>(coeffs: &[XYPoly<C>], var: &str) -> String {
    let mut s = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let body = c.to_latex();
        let power = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{{{k}}}"),
        };
        if k == 0 {
            s.push_str(&body);
            continue;
        }
        if c.len() == 1 && !body.starts_with('-') {
            let _ = write!(s, "+{}{power}", if c.is_one() { String::new() } else { body });
        } else if c.len() == 1 {
            let _ = write!(s, "-{}{power}", if (-c).is_one() { String::new() } else { body[1..].to_string() });
        } else if body.starts_with('-') {
            let _ = write!(s, "-({}){power}", (-c).to_latex());
        } else {
            let _ = write!(s, "+({body}){power}");
        }
    }
    s
}
