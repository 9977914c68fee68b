//! Floating-point checks of the exact tables.

use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Float, One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genfunc::{first_kind_poly, second_kind_poly};
use crate::orbit::{phi_asym, phi_sym};
use crate::polynomialize::VariableBasis;
use crate::rootsystem::{RootSystem, Weight};
use crate::scalar::Coeff;
use crate::xypoly::XYPoly;
use crate::Kind;

pub const DEFAULT_SEED: u64 = 0x5e_ed0f_c4eb;

/// Denominators smaller than this are treated as singular and skipped.
pub const SINGULAR_THRESHOLD: f64 = 1e-6;

/// A point of the torus in co-root coordinates, each in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct AnglePoint {
    pub phi: f64,
    pub psi: f64,
}

impl AnglePoint {
    pub fn new(phi: f64, psi: f64) -> Self {
        Self { phi, psi }
    }

    pub fn random<R: Rng>(rng: &mut R) -> Self {
        Self {
            phi: rng.gen(),
            psi: rng.gen(),
        }
    }

    fn angles(&self, rank: usize) -> Vec<f64> {
        [self.phi, self.psi][..rank].to_vec()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub samples: usize,
    pub max_abs_error: f64,
    pub worst_point: AnglePoint,
    pub skipped: usize,
}

impl VerificationReport {
    pub fn within(&self, tol: f64) -> bool {
        self.max_abs_error < tol
    }
}

/// Values of the variables at `pt`.
pub fn eval_vars<C: Coeff>(basis: &VariableBasis<C>, pt: &AnglePoint) -> Result<Vec<Complex64>> {
    let angles = pt.angles(basis.rank());
    basis
        .var_laurents()
        .iter()
        .map(|v| v.evaluate_on_torus(&angles))
        .collect()
}

/// `phi_asym(n + rho) / phi_asym(rho)` at `pt`, or `None` near a wall.
pub fn character_ratio<C: Coeff>(basis: &VariableBasis<C>, n: &Weight, pt: &AnglePoint) -> Result<Option<Complex64>> {
    let rs = basis.root_system();
    let angles = pt.angles(rs.rank());
    let den = weyl_denominator(rs, &angles);
    if den.norm() < SINGULAR_THRESHOLD {
        return Ok(None);
    }
    let num = phi_asym::<C>(rs, &(*n + rs.rho())).evaluate_on_torus(&angles)?;
    Ok(Some(num / den))
}

/// `phi_asym(rho)` at `z_i = e^{2 pi i angles_i}` through the product
/// `prod_{a > 0} 2i sin(pi (a, angles))`. Summing the twelve unit terms directly
/// loses about `1e-16 / |value|` in relative accuracy near the walls.
pub fn weyl_denominator(rs: &RootSystem, angles: &[f64]) -> Complex64 {
    rs.positive_roots().iter().fold(Complex64::new(1.0, 0.0), |acc, root| {
        let t: f64 = angles.iter().enumerate().map(|(i, a)| root.get(i) as f64 * a).sum();
        let t = t - 2.0 * (t / 2.0).round();
        acc * Complex64::new(0.0, 2.0 * (std::f64::consts::PI * t).sin())
    })
}

/// Evaluates a polynomial exactly at double-precision inputs and rounds once,
/// which avoids cancellation between large coefficients. Inputs are scaled to a
/// common power of two so the whole sum is integer arithmetic.
///
/// The variables are real for algebras whose Weyl group contains `-1`; for A2
/// they are complex conjugates, so values are carried as complex integers.
struct ExactEvaluator {
    terms: Vec<([u32; 2], BigInt)>,
    denominator: BigInt,
    degree: u32,
}

impl ExactEvaluator {
    fn new<C: Coeff>(poly: &XYPoly<C>) -> Self {
        let exact: Vec<([u32; 2], BigRational)> = poly
            .terms()
            .map(|(d, c)| {
                let c = c
                    .to_string()
                    .parse::<BigRational>()
                    .unwrap_or_else(|_| BigRational::from_float(c.to_f64_lossy()).expect("finite coefficient"));
                (d.0, c)
            })
            .collect();
        let denominator = exact.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let terms = exact
            .into_iter()
            .map(|(d, c)| (d, c.numer() * (&denominator / c.denom())))
            .collect();
        Self {
            terms,
            denominator,
            degree: poly.total_degree().unwrap_or(0),
        }
    }

    fn eval(&self, vals: &[Complex64]) -> Result<Complex64> {
        let real = vals.iter().all(|v| v.im.abs() < 1e-12);
        let parts: Vec<(f64, f64)> = vals.iter().map(|v| (v.re, if real { 0.0 } else { v.im })).collect();
        if let Some(bad) = parts.iter().flat_map(|(a, b)| [*a, *b]).find(|v| !v.is_finite()) {
            return Err(Error::Parse(format!("non-finite value {bad}")));
        }
        // every input is an integer multiple of 2^-shift
        let shift = parts
            .iter()
            .flat_map(|(a, b)| [*a, *b])
            .filter(|v| *v != 0.0)
            .map(|v| -i64::from(v.integer_decode().1))
            .max()
            .unwrap_or(0)
            .max(0) as usize;
        let scaled = |v: f64| -> BigInt {
            if v == 0.0 {
                return BigInt::zero();
            }
            let (mantissa, exponent, sign) = v.integer_decode();
            let m = BigInt::from(mantissa) * i64::from(sign);
            let e = i64::from(exponent) + shift as i64;
            m << (e as usize)
        };
        let max_power = self.terms.iter().flat_map(|(d, _)| *d).max().unwrap_or(0) as usize;
        let powers: Vec<Vec<Complex<BigInt>>> = parts
            .iter()
            .map(|&(re, im)| {
                let v = Complex::new(scaled(re), if im == 0.0 { BigInt::zero() } else { scaled(im) });
                let mut out = vec![Complex::new(BigInt::one(), BigInt::zero())];
                for k in 0..max_power {
                    out.push(&out[k] * &v);
                }
                out
            })
            .collect();
        let mut sum = Complex::new(BigInt::zero(), BigInt::zero());
        for (d, c) in &self.terms {
            let mut term = Complex::new(c << (shift * (self.degree - d[0] - d[1]) as usize), BigInt::zero());
            for (table, &e) in powers.iter().zip(d) {
                term *= &table[e as usize];
            }
            sum += term;
        }
        let scale = &self.denominator << (shift * self.degree as usize);
        let to_f64 = |v: BigInt| BigRational::new(v, scale.clone()).to_f64().unwrap_or(f64::NAN);
        Ok(Complex64::new(to_f64(sum.re), to_f64(sum.im)))
    }
}

/// Compares `U_n` from the exact table with the defining ratio at random points.
pub fn verify_ratio<C: Coeff>(
    basis: &VariableBasis<C>,
    n: &[u32],
    samples: usize,
    seed: u64,
) -> Result<VerificationReport> {
    if basis.kind() != Kind::Second {
        return Err(Error::Unsupported("ratio check is for the second kind".into()));
    }
    let poly = second_kind_poly(basis, n)?;
    verify_poly_ratio(basis, &poly, n, samples, seed)
}

/// [`verify_ratio`] for an already computed polynomial.
pub fn verify_poly_ratio<C: Coeff>(
    basis: &VariableBasis<C>,
    poly: &XYPoly<C>,
    n: &[u32],
    samples: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let weight = Weight::new(&n.iter().map(|&v| i64::from(v)).collect::<Vec<_>>());
    let evaluator = ExactEvaluator::new(poly);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerificationReport {
        samples,
        max_abs_error: 0.0,
        worst_point: AnglePoint::default(),
        skipped: 0,
    };
    for _ in 0..samples {
        let pt = AnglePoint::random(&mut rng);
        let Some(rhs) = character_ratio(basis, &weight, &pt)? else {
            report.skipped += 1;
            continue;
        };
        let lhs = evaluator.eval(&eval_vars(basis, &pt)?)?;
        let err = (lhs - rhs).norm();
        if err > report.max_abs_error || err.is_nan() {
            report.max_abs_error = err;
            report.worst_point = pt;
        }
    }
    if report.skipped == samples {
        return Err(Error::AllPointsSingular);
    }
    Ok(report)
}

/// Compares the first-kind polynomial with the orbit sum `phi_sym(n)` at random points.
pub fn verify_first_kind<C: Coeff>(
    basis: &VariableBasis<C>,
    n: &[u32],
    samples: usize,
    seed: u64,
) -> Result<VerificationReport> {
    if basis.kind() != Kind::First {
        return Err(Error::Unsupported("orbit-sum check is for the first kind".into()));
    }
    let rank = basis.rank();
    let evaluator = ExactEvaluator::new(&first_kind_poly(basis, n)?);
    let weight = Weight::new(&n.iter().map(|&v| i64::from(v)).collect::<Vec<_>>());
    let orbit_sum = phi_sym::<C>(basis.root_system(), &weight);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerificationReport {
        samples,
        max_abs_error: 0.0,
        worst_point: AnglePoint::default(),
        skipped: 0,
    };
    for _ in 0..samples {
        let pt = AnglePoint::random(&mut rng);
        let rhs = orbit_sum.evaluate_on_torus(&pt.angles(rank))?;
        let lhs = evaluator.eval(&eval_vars(basis, &pt)?)?;
        let err = (lhs - rhs).norm();
        if err > report.max_abs_error || err.is_nan() {
            report.max_abs_error = err;
            report.worst_point = pt;
        }
    }
    Ok(report)
}

/// `U_n` at the identity by exact substitution, next to the Weyl dimension formula.
pub fn dimension_check<C: Coeff>(basis: &VariableBasis<C>, n: &[u32]) -> Result<(C, C)> {
    Ok(poly_dimension_check(basis, &second_kind_poly(basis, n)?, n))
}

/// [`dimension_check`] for an already computed polynomial.
pub fn poly_dimension_check<C: Coeff>(basis: &VariableBasis<C>, poly: &XYPoly<C>, n: &[u32]) -> (C, C) {
    let rs = basis.root_system();
    let at_identity: Vec<C> = basis
        .var_laurents()
        .iter()
        .map(|v| v.terms().fold(C::zero(), |acc, (_, c)| acc + c.clone()))
        .collect();
    let left = poly.eval_exact(&at_identity);
    let weight = Weight::new(&n.iter().map(|&v| i64::from(v)).collect::<Vec<_>>());
    let dim = rs.weyl_dimension(&weight);
    let right = C::from_int(*dim.numer()) / C::from_int(*dim.denom());
    (left, right)
}
