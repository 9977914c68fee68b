//! Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use proptest::strategy::Strategy;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use common::*;
use weylcheb::genfunc::{chebyshev_poly, closed_form_gf, second_kind_poly};
use weylcheb::numeric::{dimension_check, verify_ratio, DEFAULT_SEED};
use weylcheb::orbit::phi_asym;
use weylcheb::recurrence::{build_companions, minimal_poly_check, RecurrenceTable, StepOrder};
use weylcheb::{AlgebraId, Basis, Kind, Laurent, Poly, Rational, RootSystem, Weight};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g2_second() -> Basis {
    Basis::new(&RootSystem::new(AlgebraId::G2), Kind::Second).unwrap()
}

fn laurent(terms: &[((i64, i64), i64)]) -> Laurent {
    Laurent::from_terms(2, terms.iter().map(|&((a, b), c)| (Weight::new2(a, b), q(c))))
}

const PRINTED_TABLE: [((u32, u32), &str); 15] = [
    ((0, 0), "1"),
    ((1, 0), "x"),
    ((0, 1), "y"),
    ((2, 0), "x^2-x-y-1"),
    ((1, 1), "-x^2+xy+y+1"),
    ((0, 2), "-x^3+2xy+y^2+2x+y"),
    ((3, 0), "-2xy-x-x^2-y+x^3"),
    ((2, 1), "-y+x+x^2-y^2-x^3+x^2y"),
    ((1, 2), "2x^2-x-1-x^4+x^2y+x^3+y^2+xy^2"),
    ((0, 3), "-2x^3y+4xy^2+3y^2+4xy+2y-x^3-x^2+x^4-2x^2y+y^3"),
    ((4, 0), "y^2+2y+x-3x^2y-x^2-x^3+x^4"),
    ((3, 1), "2x^3-2y^2-2x-2y+x^2y+x^3y-2xy^2-2xy-x^4+x^2"),
    ((2, 2), "1+2x^3-2y^2-x-x^5-y^3-x^2y+2x^3y-2xy^2-4xy+x^2y^2+2x^4-4x^2"),
    (
        (1, 3),
        "-4x^3+y^2+2x+2x^5+y^3+4x^2y-4x^3y+4xy^2+6xy+3x^2y^2-2x^4y+xy^3-2x^4+2x^2",
    ),
    (
        (0, 4),
        "-1+2x^3+4y^2-x-2y-x^5+5y^3+6x^2y-2x^3y+9xy^2+2xy-2x^4y-3x^3y^2+6xy^3-3x^4+3x^2+x^6+y^4",
    ),
];

fn reference_table() -> Outcome {
    let basis = g2_second();
    for ((m, n), text) in PRINTED_TABLE {
        let got = second_kind_poly(&basis, &[m, n]).map_err(|e| e.to_string())?;
        check(got == poly(text), || format!("U_{{{m},{n}}} = {got}, printed {text}"))?;
    }
    Ok("15/15 printed polynomials reproduced".into())
}

const PRINTED_P1: [&str; 7] = ["1", "1-x", "y+1", "-(x^2-2y-1)", "y+1", "1-x", "1"];
const PRINTED_P2: [&str; 7] = [
    "1",
    "x-y+1",
    "x^3-3xy-2y-x+1",
    "-(y^2-2x^3+4xy+6y+x^2-2y+2x-1)",
    "x^3-3xy-2y-x+1",
    "x-y+1",
    "1",
];
const PRINTED_K: [((usize, usize), &str); 19] = [
    ((0, 0), "1"),
    ((1, 0), "1"),
    ((0, 1), "x+1"),
    ((0, 2), "x+1"),
    ((1, 1), "-x^2+x+y+2"),
    ((0, 3), "1"),
    ((1, 2), "-x^2+x+1"),
    ((2, 1), "y+1"),
    ((3, 1), "1-x"),
    ((1, 3), "1-x"),
    ((2, 2), "-x^2+xy+y+2x+1"),
    ((4, 1), "1"),
    ((2, 3), "y+1"),
    ((3, 2), "-x^2+x+1"),
    ((3, 3), "-x^2+x+y+2"),
    ((4, 2), "x+1"),
    ((3, 4), "1"),
    ((4, 3), "x+1"),
    ((4, 4), "1"),
];

fn closed_form() -> Outcome {
    let gf = closed_form_gf(&g2_second()).map_err(|e| e.to_string())?;
    let p1: Vec<Poly> = PRINTED_P1.iter().map(|s| poly(s)).collect();
    let p2: Vec<Poly> = PRINTED_P2.iter().map(|s| poly(s)).collect();
    check(gf.p1() == p1.as_slice(), || format!("P1 = {:?}", gf.p1()))?;
    check(gf.p2() == p2.as_slice(), || format!("P2 = {:?}", gf.p2()))?;
    let printed: BTreeSet<(usize, usize)> = PRINTED_K.iter().map(|(ij, _)| *ij).collect();
    for ((i, j), text) in PRINTED_K {
        check(gf.k(i, j) == poly(text), || format!("K_{i}{j} = {}, printed {text}", gf.k(i, j)))?;
    }
    for i in 0..=5 {
        for j in 0..=5 {
            if !printed.contains(&(i, j)) {
                check(gf.k(i, j).is_zero(), || format!("K_{i}{j} = {} should vanish", gf.k(i, j)))?;
            }
        }
    }
    check(gf.numerator().len() == 19, || format!("{} nonzero K entries", gf.numerator().len()))?;
    Ok("P1, P2 and 19 nonzero K_ij exact; all other K_ij in 0..5 x 0..5 vanish".into())
}

fn variable_expansions() -> Outcome {
    let basis = g2_second();
    let printed_x = laurent(&[((-1, 0), 1), ((1, -1), 1), ((-2, 1), 1), ((2, -1), 1), ((-1, 1), 1), ((1, 0), 1), ((0, 0), 1)]);
    let x = &basis.var_laurents()[0];
    check(*x == printed_x, || format!("x = {x}"))?;
    check(x.len() == 7 && x.coeff(&Weight::zero(2)) == q(1), || "x shape".into())?;

    let long_roots = [(-3, 1), (0, -1), (3, -2), (3, -1), (0, 1)];
    let short_roots = [(-1, 0), (1, -1), (-2, 1), (2, -1), (-1, 1), (1, 0)];
    let build_y = |sixth: (i64, i64)| {
        let mut terms: Vec<((i64, i64), i64)> = long_roots.iter().map(|&w| (w, 1)).collect();
        terms.push((sixth, 1));
        terms.extend(short_roots.iter().map(|&w| (w, 1)));
        terms.push(((0, 0), 2));
        laurent(&terms)
    };
    let printed_y = build_y((3, 2));
    let corrected_y = build_y((-3, 2));
    let y = &basis.var_laurents()[1];
    check(*y == corrected_y, || format!("y = {y}"))?;
    let diff = y - &printed_y;
    check(diff == laurent(&[((-3, 2), 1), ((3, 2), -1)]), || format!("y - printed = {diff}"))?;
    let rs = basis.root_system();
    check(printed_y.apply_weyl(rs.generator(0)) != printed_y, || "printed y unexpectedly invariant".into())?;
    let weight_sum = y.terms().fold(q(0), |acc, (_, c)| acc + c);
    check(y.coeff(&Weight::zero(2)) == q(2) && weight_sum == q(14), || "y shape".into())?;
    Ok("x matches the 7 printed terms; y matches the 14-weight expansion with the printed exponent 3phi+2psi read as -3phi+2psi (the only W-invariant reading)".into())
}

fn singular_element() -> Outcome {
    let rs = RootSystem::new(AlgebraId::G2);
    let computed = phi_asym::<Rational>(&rs, &Weight::new2(1, 1));
    let printed = laurent(&[
        ((1, 1), 1),
        ((-1, 2), -1),
        ((-4, 3), 1),
        ((4, -1), -1),
        ((5, -2), 1),
        ((5, -3), -1),
        ((-5, 2), 1),
        ((-5, -3), -1),
        ((4, -3), 1),
        ((1, -2), -1),
        ((-1, -1), 1),
        ((-4, 1), -1),
    ]);
    check(computed.len() == 12, || format!("{} terms", computed.len()))?;
    let diff = &computed - &printed;
    check(diff == laurent(&[((-5, 3), -1), ((-5, -3), 1)]), || format!("computed - printed = {diff}"))?;
    let w1 = rs.generator(0);
    check(printed.apply_weyl(w1) != printed.scale(&q(-1)), || "printed literal unexpectedly antisymmetric".into())?;
    Ok("12 terms match the printed expansion with -e(-5phi-3psi) read as -e(-5phi+3psi) (the only antisymmetric reading)".into())
}

fn weyl_groups() -> Outcome {
    for (alg, order) in [(AlgebraId::A1, 2), (AlgebraId::A2, 6), (AlgebraId::C2, 8), (AlgebraId::G2, 12)] {
        let rs = RootSystem::new(alg);
        check(rs.order() == order, || format!("{alg} has order {}", rs.order()))?;
    }
    let rs = RootSystem::new(AlgebraId::G2);
    let (w1, w2) = (0, 1);
    let odd_words: [&[usize]; 6] = [
        &[w1],
        &[w2],
        &[w2, w1, w2],
        &[w1, w2, w1],
        &[w2, w1, w2, w1, w2],
        &[w1, w2, w1, w2, w1],
    ];
    let even_words: [&[usize]; 6] = [&[], &[w1, w2], &[w2, w1], &[w1, w2, w1, w2], &[w2, w1, w2, w1], &[w1, w2, w1, w2, w1, w2]];
    let matrices = |words: &[&[usize]]| -> BTreeSet<String> {
        words.iter().map(|w| format!("{:?}", matrix_of(&rs, rs.element_for_word(w)))).collect()
    };
    let negative: BTreeSet<String> = rs
        .elements()
        .iter()
        .filter(|w| w.det() == -1)
        .map(|w| format!("{:?}", matrix_of(&rs, w)))
        .collect();
    check(negative.len() == 6, || format!("{} elements with det -1", negative.len()))?;
    check(matrices(&odd_words) == negative, || "det -1 elements differ from the listed words".into())?;
    check(
        even_words.iter().all(|w| rs.element_for_word(w).det() == 1) && matrices(&even_words).len() == 6,
        || "remaining words should have det +1".into(),
    )?;
    Ok("orders 2/6/8/12; G2 det -1 elements are exactly w1, w2, w2w1w2, w1w2w1, w2(w1w2)^2, w1(w2w1)^2".into())
}

fn matrix_of(rs: &RootSystem, w: &weylcheb::WeylElement) -> Vec<i64> {
    (0..rs.rank()).flat_map(|i| (0..rs.rank()).map(move |j| w.entry(i, j))).collect()
}

fn cross_path() -> Outcome {
    let basis = g2_second();
    let table = RecurrenceTable::build(&basis, &[Weight::new2(12, 12)], StepOrder::XFirst).map_err(|e| e.to_string())?;
    let mut count = 0;
    for m in 0..=12u32 {
        for n in 0..=12u32 {
            let via_gf = second_kind_poly(&basis, &[m, n]).map_err(|e| e.to_string())?;
            let via_rec = table.get(&Weight::new2(i64::from(m), i64::from(n))).ok_or("missing entry")?;
            check(via_gf == via_rec, || format!("U_{{{m},{n}}} differs between paths"))?;
            count += 1;
        }
    }
    Ok(format!("{count} polynomials identical along both paths"))
}

fn numerical_identity() -> Outcome {
    let basis = g2_second();
    let mut worst = (0.0f64, (0, 0));
    let mut skipped = 0;
    for m in 0..=10u32 {
        for n in 0..=(10 - m) {
            let report = verify_ratio(&basis, &[m, n], 100, DEFAULT_SEED).map_err(|e| e.to_string())?;
            skipped += report.skipped;
            if report.max_abs_error > worst.0 || report.max_abs_error.is_nan() {
                worst = (report.max_abs_error, (m, n));
            }
            check(report.within(1e-8), || format!("U_{{{m},{n}}}: {report:?}"))?;
        }
    }
    Ok(format!(
        "66 indices x 100 samples; worst error {:.2e} at {:?}; {skipped} near-singular samples skipped",
        worst.0, worst.1
    ))
}

fn dimensions() -> Outcome {
    let basis = g2_second();
    for m in 0..=8u32 {
        for n in 0..=8u32 {
            let (left, right) = dimension_check(&basis, &[m, n]).map_err(|e| e.to_string())?;
            check(left == right && left.is_integer(), || format!("({m},{n}): {left} vs {right}"))?;
        }
    }
    for (idx, dim) in [([0, 0], 1), ([1, 0], 7), ([0, 1], 14), ([1, 1], 64)] {
        let (left, _) = dimension_check(&basis, &idx).map_err(|e| e.to_string())?;
        check(left == q(dim), || format!("{idx:?}: {left}"))?;
    }
    Ok("U_{m,n}(7,14) equals the Weyl dimension for 0 <= m,n <= 8; spot values 1, 7, 14, 64".into())
}

fn minimal_polynomials() -> Outcome {
    let gf = closed_form_gf(&g2_second()).map_err(|e| e.to_string())?;
    let companions = build_companions(&gf);
    check(minimal_poly_check(&gf, &companions), || "P1(M_x) or P2(M_y) is nonzero".into())?;
    check(!companions.0.eval_poly(&gf.p1()[..6]).is_zero(), || "degree-5 truncation annihilates M_x".into())?;
    Ok("P1(M_x) = 0, P2(M_y) = 0; degree-5 truncation of P1 leaves M_x nonzero".into())
}

fn classical_degeneration() -> Outcome {
    let basis = Basis::new(&RootSystem::new(AlgebraId::A1), Kind::Second).unwrap();
    let x = Poly::parse_with_rank("x", 1).unwrap();
    let u: Vec<Poly> = (0..=21).map(|n| chebyshev_poly(&basis, &[n]).unwrap()).collect();
    check(u[1] == &x * &u[0], || "U_1 != x U_0".into())?;
    for n in 1..=20 {
        check(u[n + 1] == &(&x * &u[n]) - &u[n - 1], || format!("recurrence fails at n = {n}"))?;
    }
    Ok("P_{n+1} = x P_n - P_{n-1} for 0 <= n <= 20".into())
}

fn property<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn property_suites() -> Outcome {
    let cases = 64;
    property("ring laws", cases, (arb_laurent(), arb_laurent(), arb_laurent()), |(a, b, c)| {
        ring_laws(&a, &b, &c)
    })?;
    property("exact_divide round trip", cases, (arb_laurent(), arb_laurent()), |(a, b)| {
        divide_round_trip(&a, &b)
    })?;
    property("evaluation homomorphism", cases, (arb_laurent(), arb_laurent(), arb_torus_point()), |(a, b, z)| {
        evaluation_is_multiplicative(&a, &b, &z)
    })?;
    property("Weyl automorphism", cases, (arb_algebra(), arb_laurent(), arb_laurent()), |(alg, a, b)| {
        weyl_action_is_ring_automorphism(alg, &a, &b)
    })?;
    property("index folding", cases, (arb_algebra(), arb_weight(6)), |(alg, n)| {
        normalization_matches_antisymmetry(alg, &n)
    })?;
    property("reduce/expand round trip", cases, (arb_algebra(), arb_poly(6)), |(alg, p)| {
        reduce_expand_round_trip(alg, Kind::Second, &p)
    })?;
    property("first-kind reduce/expand", cases, (arb_algebra(), arb_poly(4)), |(alg, p)| {
        reduce_expand_round_trip(alg, Kind::First, &p)
    })?;
    let mut exhaustive = 0;
    for alg in RANK2 {
        for a in -6..=6 {
            for b in -6..=6 {
                let n = Weight::new2(a, b);
                invariance_and_antisymmetry(alg, &n).map_err(|e| format!("invariance {alg} {n}: {e}"))?;
                wall_vanishing(alg, &n).map_err(|e| format!("walls {alg} {n}: {e}"))?;
                exhaustive += 1;
            }
        }
        for m in 0..=4 {
            for n in 0..=4 {
                character_round_trip(alg, m, n).map_err(|e| format!("character {alg} ({m},{n}): {e}"))?;
            }
        }
    }
    for alg in [AlgebraId::C2, AlgebraId::G2] {
        for kind in [Kind::First, Kind::Second] {
            denominators_are_palindromic(alg, kind)?;
        }
    }
    numerator_is_symmetric()?;
    Ok(format!(
        "7 randomized suites x {cases} cases; {exhaustive} exhaustive weights for invariance and walls; palindromic P1/P2; K_ij = K_(4-i)(4-j)"
    ))
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, title: "reference polynomial table", limit: secs(5), run: reference_table },
        Criterion { id: 2, title: "closed-form generating function", limit: secs(30), run: closed_form },
        Criterion { id: 3, title: "variable expansions", limit: None, run: variable_expansions },
        Criterion { id: 4, title: "singular element", limit: None, run: singular_element },
        Criterion { id: 5, title: "Weyl group structure", limit: None, run: weyl_groups },
        Criterion { id: 6, title: "cross-path oracle 13x13", limit: secs(60), run: cross_path },
        Criterion { id: 7, title: "numerical identity", limit: secs(30), run: numerical_identity },
        Criterion { id: 8, title: "dimension specialization", limit: None, run: dimensions },
        Criterion { id: 9, title: "minimal polynomials", limit: None, run: minimal_polynomials },
        Criterion { id: 10, title: "classical degeneration", limit: None, run: classical_degeneration },
        Criterion { id: 11, title: "property suites", limit: secs(60), run: property_suites },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(msg)
        });
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("exceeded {} s", limit.as_secs())),
            (other, _) => other,
        };
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        if outcome.is_err() {
            failed += 1;
        }
        println!("criterion {:>2} {status} [{:>6.2} s] {}: {detail}", c.id, elapsed.as_secs_f64(), c.title);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
