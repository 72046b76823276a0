//! Acceptance suite: every criterion is an exact identity over a fixed range.
//!
//! Each criterion prints one `PASS`/`FAIL` line; the process exits non-zero
//! at the end if any criterion failed, so every line is always printed.

use num_bigint::BigInt;
use num_traits::One;
use young_seminormal::combinat::{enumerate_standard, hook_length_count, KlsParams, Partition, Weight};
use young_seminormal::formulas::{denom_hook, denom_two_row, f_hook, upper_bound_kls, weights_kls, Route};
use young_seminormal::oracle::{sweep, Status, Suite, SweepLimits, SweepReport};
use young_seminormal::rational::{lcm_range, rat};
use young_seminormal::{Engine, Execution, Rational};

struct Outcome {
    id: u8,
    title: &'static str,
    ok: bool,
    detail: String,
}

fn limits(max_n: Option<usize>) -> SweepLimits {
    SweepLimits {
        max_n,
        ..SweepLimits::default()
    }
}

fn run(suite: Suite, max_n: Option<usize>) -> SweepReport {
    sweep(suite, &limits(max_n)).expect("known suite")
}

/// Ok iff every listed case passed and none was skipped.
fn judge<'a>(reports: impl IntoIterator<Item = (&'a SweepReport, Option<&'static str>)>) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for (report, family) in reports {
        let cases: Vec<_> = report.cases.iter().filter(|c| family.is_none_or(|f| c.family == f)).collect();
        let passed = cases.iter().filter(|c| c.status == Status::Pass).count();
        let failed: Vec<_> = cases.iter().filter(|c| c.status != Status::Pass).collect();
        ok &= failed.is_empty() && passed > 0;
        let label = family.unwrap_or(report.suite.name());
        parts.push(format!("{label} {passed}/{}", cases.len()));
        if let Some(c) = failed.first() {
            parts.push(format!("first failure {} {:?}", c.input, c.detail));
        }
    }
    (ok, parts.join(", "))
}

fn criterion_1() -> (bool, String) {
    let r = run(Suite::GarnirSpan, Some(5));
    judge([(&r, None)])
}

fn criterion_2() -> (bool, String) {
    let a = run(Suite::ActionProperty, Some(6));
    let c = run(Suite::ChainIndependence, Some(6));
    let seeds: std::collections::BTreeSet<u64> =
        c.cases.iter().filter_map(|r| r.input["seed"].as_u64()).collect();
    let (ok, detail) = judge([(&a, None), (&c, None)]);
    (ok && seeds.len() >= 5, format!("{detail}, {} seeds", seeds.len()))
}

fn criterion_3() -> (bool, String) {
    let r = run(Suite::Unitriangularity, Some(7));
    judge([(&r, None)])
}

fn formula_report() -> SweepReport {
    run(Suite::FormulaVsRecursion, Some(8))
}

fn criterion_4(r: &SweepReport) -> (bool, String) {
    let expected: usize = (0..=8).map(|n| Partition::all_of_size(n).len()).sum();
    let seen = r.cases.iter().filter(|c| c.family == "add-one").count();
    let (ok, detail) = judge([(r, Some("add-one"))]);
    (ok && seen == expected, format!("{detail}, {expected} partitions expected"))
}

fn criterion_5(r: &SweepReport) -> (bool, String) {
    let (mut ok, detail) = judge([(r, Some("two-row"))]);
    let mut count = 0;
    for k in 1..=6usize {
        for l in 1..=k {
            for m in 1..=4usize {
                let a = (k - l + 1) as u64;
                let expect = lcm_range(a, a + l.min(m) as u64) / BigInt::from(a);
                ok &= denom_two_row(k, l, m).unwrap() == expect;
                count += 1;
            }
        }
    }
    let seen = r.cases.iter().filter(|c| c.family == "two-row").count();
    (ok && seen == count, format!("{detail}, lcm form checked on {count} tuples"))
}

fn criterion_6(r: &SweepReport) -> (bool, String) {
    let (mut ok, detail) = judge([(r, Some("hook"))]);
    let engine = Engine::new(Execution::Parallel);
    let mut count = 0;
    for k in 1..=5usize {
        for s in 1..=3usize {
            for m in 1..=3usize {
                let p = KlsParams::new(k, 1, s, m).unwrap();
                let d = engine.up_arrow_denominator(&p.lambda(), &p.nu()).unwrap();
                ok &= d == BigInt::from(k + s) && denom_hook(k, s) == d;
                let f = f_hook(k, s, m).unwrap();
                ok &= *engine.up_arrow_vector(&p.lambda(), &p.nu()).unwrap() == f;
                // recursion coefficients: 1 at weight 0, (−1)^{s−j}/(k+s) at weight e_j
                let a = weights_kls(&engine, p).unwrap();
                ok &= a[&Weight(vec![0; s])] == Rational::one();
                for j in 1..=s {
                    let sign = if (s - j) % 2 == 0 { 1 } else { -1 };
                    ok &= a[&Weight::unit(s, j)] == rat(sign, (k + s) as i64);
                }
                count += 1;
            }
        }
    }
    (ok, format!("{detail}, d = k+s on {count} tuples"))
}

fn criterion_7() -> (bool, String) {
    let r = run(Suite::FourReductions, None);
    let (ok, detail) = judge([(&r, None)]);
    (ok && r.skipped() == 0, format!("{detail}, {} skipped", r.skipped()))
}

fn criterion_8() -> (bool, String) {
    let r = run(Suite::KlsReduction, None);
    let (ok, detail) = judge([(&r, None)]);
    (ok && r.skipped() == 0, format!("{detail}, {} skipped", r.skipped()))
}

fn criterion_9() -> (bool, String) {
    let d = run(Suite::Divisibility, Some(9));
    let t = run(Suite::Transport, Some(9));
    judge([
        (&d, Some("denominator-bounds")),
        (&d, Some("row-split")),
        (&d, Some("gcd-bound")),
        (&t, Some("truncation")),
        (&t, Some("row-removal")),
        (&t, Some("add-row-factorisation")),
        (&t, Some("row-split-factorisation")),
        (&t, Some("node-chain-estimate")),
    ])
}

fn criterion_10() -> (bool, String) {
    let r = run(Suite::WorkedExample, None);
    let (mut ok, detail) = judge([(&r, None)]);
    let small = Partition::new(vec![4, 2, 2]).unwrap();
    let large = Partition::new(vec![5, 2, 2]).unwrap();
    let n_small = enumerate_standard(&small).len();
    let n_large = enumerate_standard(&large).len();
    ok &= n_small == 56 && BigInt::from(hook_length_count(&small)) == BigInt::from(56);
    ok &= n_large > n_small;
    for k in [2usize, 3] {
        ok &= upper_bound_kls(k, 2, 2).unwrap() == BigInt::from((k + 1) * (k + 2));
    }
    (ok, format!("{detail}, |STab| = {n_small} and {n_large}"))
}

fn criterion_11() -> (bool, String) {
    let r = run(Suite::Dispatch, Some(9));
    let (ok, detail) = judge([(&r, None)]);
    // count exact routes to make sure the sweep is not all bounds
    let engine = Engine::new(Execution::Parallel);
    let exact = r
        .cases
        .iter()
        .filter(|c| {
            let lambda = Partition::new(serde_json::from_value(c.input["lambda"].clone()).unwrap()).unwrap();
            let nu = Partition::new(serde_json::from_value(c.input["nu"].clone()).unwrap()).unwrap();
            let rep = young_seminormal::formulas::summary_dispatch(&engine, &lambda, &nu, 12).unwrap();
            matches!(rep.route, Route::ExactFormula | Route::ReductionThenFormula)
        })
        .count();
    (ok && exact > 0, format!("{detail}, {exact} by closed route"))
}

fn main() {
    let formulas = formula_report();
    let outcomes = [
        (1, "basis theorem (Garnir span, n <= 5)", criterion_1()),
        (2, "seminormal characterisation and chain independence (n <= 6)", criterion_2()),
        (3, "unitriangularity (n <= 7)", criterion_3()),
        (4, "add-one vector and denominator (n <= 8)", criterion_4(&formulas)),
        (5, "two-row vector and lcm denominator", criterion_5(&formulas)),
        (6, "hook denominator k+s and sign pattern", criterion_6(&formulas)),
        (7, "four weight reductions", criterion_7()),
        (8, "(k,l,s) parameter reduction", criterion_8()),
        (9, "truncation, row removal and divisibility (|nu| <= 9)", criterion_9()),
        (10, "(k,2,2) up 2 worked example", criterion_10()),
        (11, "denominator dispatch (|nu| <= 9)", criterion_11()),
    ]
    .map(|(id, title, (ok, detail))| Outcome { id, title, ok, detail });

    for o in &outcomes {
        println!("criterion {:>2} {} {}: {}", o.id, if o.ok { "PASS" } else { "FAIL" }, o.title, o.detail);
    }
    let failed: Vec<u8> = outcomes.iter().filter(|o| !o.ok).map(|o| o.id).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
