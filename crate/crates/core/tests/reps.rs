//! Worked examples for every realization, checked end to end.

use qesrep::algebra::labels::{j, q, qb};
use qesrep::algebra::{check, table_gl, table_qspl21, table_spl21, QTable};
use qesrep::diffop::Operator;
use qesrep::modspace::{basis_m, basis_olver, enveloping_span};
use qesrep::poly::Poly;
use qesrep::qdiffop::QDiffOp;
use qesrep::reps::*;
use qesrep::scalar::{QLaurent, Rational, Scalar};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn x(k: u32) -> Poly<Rational> {
    Poly::monomial(&[k])
}

#[test]
fn gl2_on_quadratics() {
    let rep = rep_gl(1, 2, &Rational::zero());
    let j01 = rep.get(&j(0, 1)).unwrap().get(0, 0);
    assert!(j01.apply(&x(2)).unwrap().is_zero());
    let j00 = rep.get(&j(0, 0)).unwrap().get(0, 0);
    assert_eq!(j00.apply(&x(1)).unwrap(), -x(1));
}

#[test]
fn gl3_on_linear() {
    let rep = rep_gl(2, 1, &Rational::zero());
    assert_eq!(rep.dim(), 3);
    let report = rep.check(&table_gl(2)).unwrap();
    assert_eq!(report.relations_total, 81);
    assert!(report.pass());
}

#[test]
fn gl_sum_and_shift() {
    let zero = Rational::zero();
    let rep = rep_gl_sum(1, &[2, 3], &[zero.clone(), zero]).unwrap();
    assert_eq!(rep.dim(), 7);
    assert!(rep.check(&table_gl(1)).unwrap().pass());
    let shifted = rep_gl_sum(1, &[2, 3], &[r(1, 2), r(-1, 3)]).unwrap();
    assert!(shifted.check(&table_gl(1)).unwrap().pass());
    let single = rep_gl_sum(1, &[2], &[r(1, 2)]).unwrap();
    let plain = rep_gl(1, 2, &r(1, 2));
    assert_eq!(single.matrices().unwrap(), plain.matrices().unwrap());
}

#[test]
fn sl2_closure_in_normal_form() {
    let ops = sl2_ops(1, 0, &Rational::from(3));
    assert_eq!(ops.plus.commutator(&ops.minus), ops.zero.scale(&Rational::from(-2)));
    assert_eq!(ops.zero.commutator(&ops.plus), ops.plus);
    assert!(ops.plus.apply(&x(3)).unwrap().is_zero());
}

#[test]
fn diagonal_casimir_on_m11() {
    let rep = rep_gl_product(1, 1);
    assert_eq!(rep.dim(), 3);
    let mats = rep.matrices().unwrap();
    let [p, z, m] = sl2_labels();
    let (jp, j0, jm) = (&mats[&p], &mats[&z], &mats[&m]);
    let cas = &(j0 * j0) - &(&(jp * jm) + &(jm * jp)).scale(&r(1, 2));
    assert_eq!(cas.as_scalar(), Some(Rational::from(2)));
}

#[test]
fn olver_examples() {
    let ops = olver_ops(1);
    let u = &Poly::<Rational>::var(2, 0) + &Poly::var(2, 1);
    assert_eq!(ops.minus.apply(&u).unwrap(), Poly::constant(2, Rational::from(2)));
    assert_eq!(olver_gauge_equivalence(0, 1, &ops).unwrap(), 6);
    assert!(basis_olver(1, 1).same_span(&basis_m(1, 2)));
}

#[test]
fn tensor_q_on_constants() {
    let zero = Rational::zero();
    let [q0, q1] = tensor_q(&zero, &zero);
    let one = Poly::one(2);
    assert_eq!(q0.apply(&one).unwrap(), one);
    assert_eq!(q1.apply(&one).unwrap(), Poly::var(2, 0));
    let m = 3;
    let [_, qb1] = tensor_qbar(&Rational::from(m));
    assert!(qb1.apply(&Poly::monomial(&[m as u32, 0])).unwrap().is_zero());
}

#[test]
fn spl21_two_variables() {
    let rep = rep_spl21_2var(1, 1);
    assert_eq!(rep.dim(), 7);
    assert!(rep.check(&table_spl21()).unwrap().pass());
    assert!(rep_spl21_2var_swapped(1, 1).check(&table_spl21()).unwrap().pass());
}

#[test]
fn spl21_one_variable() {
    let rep = rep_spl21_1var(1, &r(1, 3)).unwrap();
    assert_eq!(rep.dim(), 8);
    assert!(rep.check(&table_spl21()).unwrap().pass());
    let growth = enveloping_span(&rep.matrix_list().unwrap(), 6);
    assert_eq!(growth.dim(), 64);
    let atyp = rep_spl21_1var_atypical(2).unwrap();
    assert!(atyp.check(&table_spl21()).unwrap().pass());
    // β vanishes at t = −(m+2)
    assert!(alpha_beta(2, &Rational::from(-4)).1.is_zero());
    assert!(matches!(rep_spl21_1var(1, &Rational::from(-2)), Err(qesrep::Error::SingularParameter(_))));
}

#[test]
fn spl22_commuting_copies() {
    let rep = rep_spl22(2).unwrap();
    let mats = rep.matrices().unwrap();
    for (b, a) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        for (d, c) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let (jm, jt) = (&mats[&j(b, a)], &mats[&qesrep::algebra::labels::jt(d, c)]);
            assert!((&(jm * jt) - &(jt * jm)).is_zero());
        }
    }
}

#[test]
fn graded_small_cases() {
    let s = Shift::new(0, 0, 2, 0).unwrap();
    assert_eq!(graded_q(&s, &[0, 1], &[]).unwrap(), graded_q(&s, &[1, 0], &[]).unwrap());
    let s = Shift::new(1, 1, 1, 1).unwrap();
    assert_eq!(s.top(), [Rational::from(5), Rational::from(3)]);
    assert!(graded_realization(&s).unwrap().matrices().is_ok());
    assert!(Shift::new(1, 1, 0, 0).is_err());
}

#[test]
fn rmod_trace_on_xy() {
    let ops = rmod_ops(1, 1).unwrap();
    let img = ops.trace_r().apply(&Poly::monomial(&[1, 1])).unwrap();
    assert_eq!(img, Poly::monomial(&[2, 0]).scale(&Rational::from(-2)));
}

#[test]
fn deformed_two_component() {
    let rep = rep_qspl21_2(2).unwrap();
    assert_eq!(rep.dim(), 5);
    assert!(rep.check(&table_qspl21(QTable::Corrected).unwrap()).unwrap().pass());
    // (xD − [n]_q) x^n = 0
    let top: Poly<QLaurent> = Poly::monomial(&[2]);
    assert!(QDiffOp::delta(2).apply(&top).unwrap().is_zero());
    let mats = rep.matrices().unwrap();
    let (q0, q1) = (&mats[&q(0)], &mats[&q(1)]);
    assert!((&(q0 * q1) + &(q1 * q0).scale(&QLaurent::q())).is_zero());
    assert!(rep_qspl21_2(0).is_err());
}

#[test]
fn deformed_four_component() {
    for lambda in [r(1, 3), Rational::from(2)] {
        for n in 1..=2 {
            let rep = rep_qspl21_4(n, &QLaurent::constant(lambda.clone())).unwrap();
            assert_eq!(rep.dim(), 4 * n as usize + 4);
            let report = rep.check(&table_qspl21(QTable::Corrected).unwrap()).unwrap();
            assert!(report.pass(), "n = {n}, λ = {lambda}: {:?}", report.failures.first());
        }
    }
}

#[test]
fn deformed_printed_sign_fails() {
    let lambda = QLaurent::constant(r(1, 3));
    let rep = rep_qspl21_4_reading(1, &lambda, Reading::Printed).unwrap();
    assert!(!rep.check(&table_qspl21(QTable::Corrected).unwrap()).unwrap().pass());
}

#[test]
fn q_barred_entry_vanishes_in_limit() {
    let n = 2;
    let rep = rep_qspl21_4(n, &QLaurent::q_pow(-(n as i64) - 1)).unwrap();
    assert!(rep.get(&qb(0)).unwrap().get(1, 3).is_zero());
    assert!(rep.get(&qb(0)).unwrap().get(0, 2).is_zero());
}

// Ratios from an independent sympy evaluation of C1·C2⁻¹.
#[test]
fn casimir_ratios() {
    let cases = [(1, QLaurent::constant(r(1, 3)), r(325, 9)), (2, QLaurent::constant(r(1, 3)), Rational::from(2989))];
    for (n, lambda, want) in cases {
        let mats = rep_qspl21_4(n, &lambda).unwrap().matrices().unwrap();
        let (c1, c2) = q_casimirs(&mats).unwrap();
        assert_eq!(casimir_ratio(&c1, &c2, &Rational::from(2)).unwrap(), Some(want));
    }
    let mats = rep_qspl21_2(1).unwrap().matrices().unwrap();
    let (c1, c2) = q_casimirs(&mats).unwrap();
    for s in [2, 3] {
        assert_eq!(casimir_ratio(&c1, &c2, &Rational::from(s)).unwrap(), Some(Rational::zero()));
    }
}

#[test]
fn deformed_burnside() {
    let growth = q_burnside(&rep_qspl21_2(2).unwrap(), &Rational::from(2), 8).unwrap();
    assert!(growth.saturated());
    assert_eq!(growth.full, 25);
}

#[test]
fn tampered_generator_is_caught() {
    let rep = rep_spl21_2var(1, 0);
    let mut mats = rep.matrices().unwrap();
    tamper(&mut mats, &q(1));
    let report = check(&table_spl21(), &mats).unwrap();
    assert!(!report.pass());
    assert!(report.failures.iter().any(|f| f.relation.contains("Q_1")));
}

#[test]
fn realization_dump_round_trips() {
    let rep = rep_qspl21_2(1).unwrap();
    let dump = rep.to_json().unwrap();
    assert_eq!(dump["dimension"], 3);
    let m = &dump["generators"]["Q_0"];
    let back = qesrep::matrix::Matrix::<QLaurent>::from_json(m).unwrap();
    assert_eq!(&back, &rep.matrices().unwrap()[&q(0)]);
}
