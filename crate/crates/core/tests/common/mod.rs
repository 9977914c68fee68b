//! Strategies and property bodies shared by the property suite and the acceptance runner.
#![allow(dead_code)]

use num_complex::Complex64;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use weylcheb::genfunc::closed_form_gf;
use weylcheb::orbit::{character, phi_asym, phi_sym};
use weylcheb::recurrence::normalize_index;
use weylcheb::{AlgebraId, Basis, Degree, Kind, Laurent, Poly, Rational, RootSystem, Weight};

pub const RANK2: [AlgebraId; 3] = [AlgebraId::A2, AlgebraId::C2, AlgebraId::G2];

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub fn poly(s: &str) -> Poly {
    s.parse().unwrap_or_else(|e| panic!("cannot parse {s:?}: {e}"))
}

pub fn arb_algebra() -> impl Strategy<Value = AlgebraId> {
    prop::sample::select(RANK2.to_vec())
}

pub fn arb_weight(bound: i64) -> impl Strategy<Value = Weight> {
    (-bound..=bound, -bound..=bound).prop_map(|(a, b)| Weight::new2(a, b))
}

pub fn arb_laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((arb_weight(4), -5i64..=5), 0..6)
        .prop_map(|terms| Laurent::from_terms(2, terms.into_iter().map(|(w, c)| (w, q(c)))))
}

pub fn arb_poly(max_total: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec((0..=max_total, 0..=max_total, -4i64..=4), 0..5).prop_map(move |terms| {
        Poly::from_terms(
            2,
            terms
                .into_iter()
                .filter(|(a, b, _)| a + b <= max_total)
                .map(|(a, b, c)| (Degree([a, b]), q(c))),
        )
    })
}

pub fn arb_torus_point() -> impl Strategy<Value = [Complex64; 2]> {
    (0.0f64..1.0, 0.0f64..1.0).prop_map(|(a, b)| {
        [
            Complex64::from_polar(1.0, std::f64::consts::TAU * a),
            Complex64::from_polar(1.0, std::f64::consts::TAU * b),
        ]
    })
}

pub fn ring_laws(a: &Laurent, b: &Laurent, c: &Laurent) -> Result<(), TestCaseError> {
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    let same = a.clone();
    prop_assert!((a - &same).is_zero());
    prop_assert_eq!(a * &Laurent::one(2), a.clone());
    prop_assert_eq!(a + &Laurent::zero(2), a.clone());
    Ok(())
}

pub fn divide_round_trip(a: &Laurent, b: &Laurent) -> Result<(), TestCaseError> {
    prop_assume!(!b.is_zero());
    prop_assert_eq!((a * b).exact_divide(b).unwrap(), a.clone());
    Ok(())
}

pub fn evaluation_is_multiplicative(a: &Laurent, b: &Laurent, z: &[Complex64; 2]) -> Result<(), TestCaseError> {
    let lhs = (a * b).evaluate(z).unwrap();
    let rhs = a.evaluate(z).unwrap() * b.evaluate(z).unwrap();
    prop_assert!((lhs - rhs).norm() < 1e-9, "{} vs {}", lhs, rhs);
    Ok(())
}

pub fn weyl_action_is_ring_automorphism(alg: AlgebraId, a: &Laurent, b: &Laurent) -> Result<(), TestCaseError> {
    let rs = RootSystem::new(alg);
    for w in rs.elements() {
        prop_assert_eq!((a * b).apply_weyl(w), &a.apply_weyl(w) * &b.apply_weyl(w));
        prop_assert_eq!((a + b).apply_weyl(w), &a.apply_weyl(w) + &b.apply_weyl(w));
    }
    Ok(())
}

pub fn invariance_and_antisymmetry(alg: AlgebraId, n: &Weight) -> Result<(), TestCaseError> {
    let rs = RootSystem::new(alg);
    let sym = phi_sym::<Rational>(&rs, n);
    let asym = phi_asym::<Rational>(&rs, n);
    for w in rs.elements() {
        prop_assert_eq!(sym.apply_weyl(w), sym.clone());
        prop_assert_eq!(asym.apply_weyl(w), asym.scale(&q(w.det())));
    }
    Ok(())
}

pub fn wall_vanishing(alg: AlgebraId, n: &Weight) -> Result<(), TestCaseError> {
    let rs = RootSystem::new(alg);
    for w in rs.elements() {
        let on_wall_a = w.act(&Weight::new2(0, n.get(1)));
        let on_wall_b = w.act(&Weight::new2(n.get(0), 0));
        prop_assert!(phi_asym::<Rational>(&rs, &on_wall_a).is_zero());
        prop_assert!(phi_asym::<Rational>(&rs, &on_wall_b).is_zero());
    }
    Ok(())
}

pub fn reduce_expand_round_trip(alg: AlgebraId, kind: Kind, p: &Poly) -> Result<(), TestCaseError> {
    let basis = Basis::new(&RootSystem::new(alg), kind).unwrap();
    let expanded = basis.expand(p);
    prop_assert_eq!(basis.reduce(&expanded).unwrap(), p.clone());
    Ok(())
}

pub fn character_round_trip(alg: AlgebraId, m: i64, n: i64) -> Result<(), TestCaseError> {
    let rs = RootSystem::new(alg);
    let basis = Basis::new(&rs, Kind::Second).unwrap();
    let chi = character::<Rational>(&rs, &Weight::new2(m, n)).unwrap();
    let reduced = basis.reduce(&chi).unwrap();
    prop_assert_eq!(basis.expand(&reduced), chi);
    Ok(())
}

pub fn normalization_matches_antisymmetry(alg: AlgebraId, n: &Weight) -> Result<(), TestCaseError> {
    let rs = RootSystem::new(alg);
    let ni = normalize_index(&rs, n);
    let direct = phi_asym::<Rational>(&rs, &(*n + rs.rho()));
    match ni.index {
        None => {
            prop_assert_eq!(ni.sign, 0);
            prop_assert!(direct.is_zero());
        }
        Some(idx) => {
            prop_assert!(idx.is_dominant());
            let folded = phi_asym::<Rational>(&rs, &(idx + rs.rho())).scale(&q(ni.sign));
            prop_assert_eq!(direct, folded);
        }
    }
    Ok(())
}

/// Every denominator coefficient list reads the same backwards.
pub fn denominators_are_palindromic(alg: AlgebraId, kind: Kind) -> Result<(), String> {
    let basis = Basis::new(&RootSystem::new(alg), kind).map_err(|e| e.to_string())?;
    let gf = closed_form_gf(&basis).map_err(|e| e.to_string())?;
    for k in 0..2 {
        let coeffs = gf.denominator(k);
        let reversed: Vec<Poly> = coeffs.iter().rev().cloned().collect();
        if coeffs != reversed.as_slice() {
            return Err(format!("{alg} {kind} P{} is not palindromic", k + 1));
        }
    }
    Ok(())
}

/// `K_ij = K_{4-i,4-j}` over the G2 numerator table.
pub fn numerator_is_symmetric() -> Result<(), String> {
    let basis = Basis::new(&RootSystem::new(AlgebraId::G2), Kind::Second).map_err(|e| e.to_string())?;
    let gf = closed_form_gf(&basis).map_err(|e| e.to_string())?;
    for i in 0..=4 {
        for j in 0..=4 {
            if gf.k(i, j) != gf.k(4 - i, 4 - j) {
                return Err(format!("K_{i}{j} != K_{}{}", 4 - i, 4 - j));
            }
        }
    }
    Ok(())
}
