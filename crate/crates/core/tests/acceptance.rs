//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qesrep::algebra::labels::y;
use qesrep::algebra::{check, table_gl, table_spl21, table_spl22, Spl22Variant};
use qesrep::diffop::{DiffOp, Operator};
use qesrep::modspace::{basis_m, basis_p, basis_p_bidegree, enveloping_span, kernel_of, orbit_span};
use qesrep::poly::Poly;
use qesrep::qdiffop::QDiffOp;
use qesrep::reps::{self, QRep, Shift};
use qesrep::scalar::{QLaurent, Rational, Scalar};
use qesrep::suites::{self, Params, Suite};

type Outcome = (bool, String);

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = t.elapsed();
    if took > limit {
        return Err(format!("{what} took {took:?}, limit {limit:?}"));
    }
    Ok(())
}

fn gl_closure() -> Outcome {
    let t = Instant::now();
    let mut total = 0;
    for mm in 1..=3 {
        for m in 0..=4 {
            for gamma in [Rational::zero(), Rational::new(1, 2)] {
                let report = reps::rep_gl(mm, m, &gamma).check(&table_gl(mm)).unwrap();
                if !report.pass() || report.relations_total != (mm + 1).pow(4) {
                    return (false, format!("M={mm}, m={m}, γ={gamma}: {:?}", report.failures.first()));
                }
                total += report.relations_total;
            }
        }
    }
    match within(t, Duration::from_secs(60), "closure sweep") {
        Ok(()) => (true, format!("{total} relations in {:?}", t.elapsed())),
        Err(e) => (false, e),
    }
}

fn module_dimensions() -> Outcome {
    for mm in 1..=3usize {
        for m in 0..=5u32 {
            let d = basis_p::<Rational>(m, mm).dim() as u64;
            if d != binomial(mm as u64 + m as u64, mm as u64) {
                return (false, format!("dim P({m},{mm}) = {d}"));
            }
        }
    }
    for m in 0..=4 {
        for n in 0..=4 {
            if basis_m(m, n).dim() != (m + n + 1) as usize {
                return (false, format!("dim M({m};{n})"));
            }
        }
    }
    for m in 0..=3 {
        for n in 0..=3 {
            let d = reps::spl21_2var_module(m, n).dim();
            if d != (2 * m + 2 * n + 3) as usize {
                return (false, format!("spl(2,1) module ({m},{n}) has dimension {d}"));
            }
        }
    }
    (true, "P(m,M), M(m;n) and the spl(2,1) two-variable module".into())
}

fn kernel_characterization() -> Outcome {
    for m in 0..=4 {
        for n in 0..=4 {
            let k = kernel_of(&reps::kernel_operator(m, n), &basis_p_bidegree(m, n)).unwrap();
            if !k.same_span(&basis_m(m, n)) {
                return (false, format!("ker K on P({m};{n}) has dimension {}", k.dim()));
            }
        }
    }
    (true, "span(ker K) = M(m;n) for m, n ≤ 4".into())
}

fn olver_equivalence() -> Outcome {
    let mut checks = 0;
    for m in 0..=2 {
        for n in 0..=3 {
            let r = reps::check_olver_gauge(m, n, false).unwrap();
            if !r.pass() {
                return (false, format!("({m},{n}): {:?}", r.failures.first()));
            }
            checks += r.relations_total;
        }
    }
    (true, format!("{checks} gauge and span checks"))
}

fn spl21_one_variable() -> Outcome {
    for m in 1..=3 {
        for t in [Rational::new(1, 3), Rational::new(-5, 2)] {
            let r = reps::rep_spl21_1var(m, &t).unwrap().check(&table_spl21()).unwrap();
            if !r.pass() {
                return (false, format!("m={m}, t={t}: {:?}", r.failures.first()));
            }
        }
        let a = reps::rep_spl21_1var_atypical(m).unwrap();
        match a.check(&table_spl21()) {
            Ok(r) if r.pass() => {}
            other => return (false, format!("atypical m={m}: {other:?}")),
        }
    }
    let rep = reps::rep_spl21_1var(1, &Rational::new(1, 3)).unwrap();
    let g = enveloping_span(&rep.matrix_list().unwrap(), 6);
    if g.dim() != 64 {
        return (false, format!("enveloping span {} of 64", g.dim()));
    }
    (true, format!("tables, atypical truncations, span growth {:?}", g.dims))
}

fn spl21_two_variables() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for m in 0..=3 {
        for n in 0..=3 {
            let rep = reps::rep_spl21_2var(m, n);
            let mats = rep.matrices().unwrap();
            let r = check(&table_spl21(), &mats).unwrap();
            if !r.pass() {
                return (false, format!("({m},{n}): {:?}", r.failures.first()));
            }
            let list: Vec<_> = mats.values().cloned().collect();
            for _ in 0..3 {
                let seed: Vec<Rational> = (0..rep.dim())
                    .map(|_| Rational::from(rng.gen_range(-50i64..=50)))
                    .collect();
                let span = orbit_span(&list, &seed);
                if span != rep.dim() {
                    return (false, format!("({m},{n}): orbit {span} of {}", rep.dim()));
                }
            }
        }
    }
    (true, "tables and three random orbits per (m, n)".into())
}

fn spl22_atypical() -> Outcome {
    for n in 1..=2 {
        let rep = reps::rep_spl22(n).unwrap();
        let mats = rep.matrices().unwrap();
        if !mats[&y()].is_zero() {
            return (false, format!("n={n}: Y ≠ 0"));
        }
        let r = check(&table_spl22(Spl22Variant::TildeBc), &mats).unwrap();
        if !r.pass() {
            return (false, format!("n={n}: {:?}", r.failures.first()));
        }
        let suite = suites::run(Suite::Spl22, &Params { n: Some(n), ..Params::default() }, false).unwrap();
        let logged = suite.sections.get("discrepancies").and_then(|d| d.as_array()).map_or(0, Vec::len);
        if !suite.pass() || logged == 0 {
            return (false, format!("n={n}: suite pass {}, {logged} discrepancies logged", suite.pass()));
        }
    }
    (true, "n = 1, 2 with Y = 0; printed-formula discrepancies reported".into())
}

fn graded_operators() -> Outcome {
    let mut bad = BTreeSet::new();
    let mut runs = 0;
    for m in 0..=2 {
        for n in 0..=2 {
            for dx in 0..=3 {
                for dy in 0..=(3 - dx) {
                    let Ok(s) = Shift::new(m, n, dx, dy) else { continue };
                    runs += 1;
                    let r = reps::graded_suite(&s, false).unwrap();
                    for f in r.failures {
                        let key = f.relation.split(" (").next().unwrap_or(&f.relation).to_string();
                        bad.insert(if key.starts_with("q_") { "normal-form identity".to_string() } else { key });
                    }
                }
            }
        }
    }
    if bad.is_empty() {
        (true, format!("{runs} parameter sets"))
    } else {
        (false, format!("{runs} parameter sets; failing claims: {}", bad.into_iter().collect::<Vec<_>>().join("; ")))
    }
}

fn rmod_suite() -> Outcome {
    let mut bad = BTreeSet::new();
    for m in 0..=2 {
        for n in 1..=2 {
            let ops = reps::rmod_ops(m, n).unwrap();
            if ops.trace_r() != reps::printed_trace_r(m, n) {
                bad.insert("R trace formula");
            }
            if ops.trace_rbar() != reps::printed_trace_rbar(m, n) {
                bad.insert("Rb trace formula");
            }
            let r = reps::rmod_suite(m, n, false).unwrap();
            let reorder = r.sections["reordering"].as_object().unwrap();
            if !reorder.values().any(|v| v.as_bool() == Some(true)) {
                bad.insert("reordering identity (printed and flagged variant)");
            }
            for f in &r.failures {
                if f.relation.starts_with("corrbar") {
                    bad.insert("quadratic closure as printed");
                } else if f.relation.starts_with('[') {
                    bad.insert("[J, R] relations or trace commutation");
                }
            }
        }
    }
    if bad.is_empty() {
        (true, "m ≤ 2, 1 ≤ n ≤ 2".into())
    } else {
        (false, format!("failing: {}", bad.into_iter().collect::<Vec<_>>().join("; ")))
    }
}

fn deformed_spl21() -> Outcome {
    let t = Instant::now();
    let points = reps::default_points();
    for n in 1..=3 {
        let mut which = vec![QRep::Two];
        which.extend([Rational::new(1, 3), Rational::from(2)].map(|l| QRep::Four(QLaurent::constant(l))));
        for w in &which {
            let r = reps::qspl21_suite(n, w, &points, false).unwrap();
            if !r.pass() {
                return (false, format!("n={n}, {w:?}: {:?}", r.failures.first()));
            }
            let rep = match w {
                QRep::Two => reps::rep_qspl21_2(n),
                QRep::Four(l) => reps::rep_qspl21_4(n, l),
            }
            .unwrap();
            let at: &[Rational] = match w {
                QRep::Two => &[Rational::from(2), Rational::from(3)],
                QRep::Four(_) => &[],
            };
            let c = reps::casimir_suite(&rep.matrices().unwrap(), at).unwrap();
            if !c.pass() {
                return (false, format!("q-Casimir n={n}, {w:?}: {:?}", c.failures.first()));
            }
        }
        let lim = reps::atypical_limit_check(n, &Rational::from(2)).unwrap();
        if !lim.pass() {
            return (false, format!("limit n={n}: {:?}", lim.failures.first()));
        }
    }
    match within(t, Duration::from_secs(120), "deformed sweep") {
        Ok(()) => (true, format!("n ≤ 3, both realizations, Casimirs and limit in {:?}", t.elapsed())),
        Err(e) => (false, e),
    }
}

fn q_calculus() -> Outcome {
    let (x, d, s) = (QDiffOp::x(), QDiffOp::d(), QDiffOp::s());
    let q = QDiffOp::scalar(QLaurent::q());
    let qinv = QDiffOp::scalar(QLaurent::q_pow(-1));
    let ids = [
        ("Dx - xD = S", &(&d * &x) - &(&x * &d), s.clone()),
        ("Sx = q xS", &s * &x, &q * &(&x * &s)),
        ("SD = q^-1 DS", &s * &d, &qinv * &(&d * &s)),
    ];
    for (name, lhs, rhs) in &ids {
        if lhs != rhs {
            return (false, format!("{name} in normal form"));
        }
        for k in 0..=8 {
            let p: Poly<QLaurent> = Poly::monomial(&[k]);
            if lhs.apply(&p).unwrap() != rhs.apply(&p).unwrap() {
                return (false, format!("{name} on x^{k}"));
            }
        }
    }
    let classical = [
        (d.classical_limit(), DiffOp::d(1, 0)),
        (s.classical_limit(), DiffOp::identity(1)),
        (
            QDiffOp::delta(3).classical_limit(),
            &(&DiffOp::x(1, 0) * &DiffOp::d(1, 0)) - &DiffOp::scalar(1, Rational::from(3)),
        ),
    ];
    if classical.iter().any(|(a, b)| a != b) {
        return (false, "q → 1 limit".into());
    }
    (true, "three identities in normal form and on x^k, k ≤ 8; q → 1 limit".into())
}

fn negative_controls() -> Outcome {
    let mut missed = Vec::new();
    for suite in Suite::ALL {
        let clean = suites::run(suite, &Params::default(), false).unwrap();
        let dirty = suites::run(suite, &Params::default(), true).unwrap();
        let known: BTreeSet<_> = clean.failures.iter().map(|f| f.relation.clone()).collect();
        if !dirty.failures.iter().any(|f| !known.contains(&f.relation)) {
            missed.push(suite.name());
        }
    }
    if missed.is_empty() {
        (true, format!("all {} suites flag a single flipped sign", Suite::ALL.len()))
    } else {
        (false, format!("undetected in {}", missed.join(", ")))
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("gl(M+1) closure", gl_closure),
        ("module dimensions", module_dimensions),
        ("kernel characterization", kernel_characterization),
        ("Olver equivalence", olver_equivalence),
        ("spl(2,1) one variable", spl21_one_variable),
        ("spl(2,1) two variables", spl21_two_variables),
        ("spl(2,2) atypical", spl22_atypical),
        ("graded operators", graded_operators),
        ("R-module intertwiners", rmod_suite),
        ("deformed spl(2,1)", deformed_spl21),
        ("q-calculus kernel", q_calculus),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let (ok, detail) = f();
        failed += usize::from(!ok);
        println!("{} {:>2} {name}: {detail}", if ok { "PASS" } else { "FAIL" }, i + 1);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
