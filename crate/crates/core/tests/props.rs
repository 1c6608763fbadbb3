//! Algebraic invariants under random inputs.

use proptest::prelude::*;

use qesrep::diffop::{DiffOp, Operator};
use qesrep::matrix::Matrix;
use qesrep::poly::{Monomial, Poly};
use qesrep::qdiffop::QDiffOp;
use qesrep::scalar::{qint, Field, QLaurent, Rational, Scalar};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::new(n, d))
}

fn nonzero_point() -> impl Strategy<Value = Rational> {
    rational().prop_filter("s ≠ 0", |r| !r.is_zero())
}

fn laurent() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec((-4i64..=4, rational()), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(QLaurent::zero(), |acc, (k, c)| acc + QLaurent::monomial(c, k))
    })
}

fn poly2() -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec((0u32..4, 0u32..4, rational()), 0..5).prop_map(|terms| {
        let mut p = Poly::zero(2);
        for (a, b, c) in terms {
            p.add_term(Monomial(vec![a, b]), c);
        }
        p
    })
}

fn diffop2() -> impl Strategy<Value = DiffOp<Rational>> {
    prop::collection::vec((0u32..3, 0u32..3, 0u32..3, 0u32..3, rational()), 0..4).prop_map(|terms| {
        terms.into_iter().fold(DiffOp::zero(2), |acc, (a, b, i, k, c)| {
            &acc + &DiffOp::term(c, Monomial(vec![a, b]), Monomial(vec![i, k]))
        })
    })
}

fn qpoly() -> impl Strategy<Value = Poly<QLaurent>> {
    prop::collection::vec((0u32..5, laurent()), 0..4).prop_map(|terms| {
        let mut p = Poly::zero(1);
        for (a, c) in terms {
            p.add_term(Monomial(vec![a]), c);
        }
        p
    })
}

fn qdiffop() -> impl Strategy<Value = QDiffOp> {
    prop::collection::vec((0u32..3, 0u32..3, laurent()), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(QDiffOp::zero(1), |acc, (a, i, c)| &acc + &QDiffOp::term(c, a, i))
    })
}

proptest! {
    #[test]
    fn rational_field(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        prop_assert_eq!((a.clone() + &b) * &c, a.clone() * &c + b.clone() * &c);
        if let Some(inv) = a.inv() {
            prop_assert!((a.clone() * &inv).is_one());
        }
    }

    #[test]
    fn rational_text_round_trip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn laurent_eval_is_a_homomorphism(a in laurent(), b in laurent(), s in nonzero_point()) {
        let ev = |p: &QLaurent| p.eval_at(&s).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
    }

    #[test]
    fn laurent_text_round_trip(a in laurent()) {
        prop_assert_eq!(a.to_string().parse::<QLaurent>().unwrap(), a);
    }

    // [n]_q against the closed form (q^n − 1)/(q − 1).
    #[test]
    fn qint_closed_form(n in 0i64..12, s in nonzero_point()) {
        let q = s.clone() * &s;
        prop_assume!(q != Rational::one());
        let closed = (q.pow(n as i32) - Rational::one()) / (q - Rational::one());
        prop_assert_eq!(qint(n).unwrap().eval_at(&s).unwrap(), closed);
    }

    #[test]
    fn partial_is_a_derivation(p in poly2(), r in poly2(), v in 0usize..2) {
        let lhs = (&p * &r).partial(v).unwrap();
        let rhs = &(&p.partial(v).unwrap() * &r) + &(&p * &r.partial(v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn compose_matches_action(a in diffop2(), b in diffop2(), p in poly2()) {
        let lhs = a.compose(&b).apply(&p).unwrap();
        let rhs = a.apply(&b.apply(&p).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi(a in diffop2(), b in diffop2(), c in diffop2()) {
        let cyc = a.commutator(&b.commutator(&c))
            .plus(&b.commutator(&c.commutator(&a)))
            .plus(&c.commutator(&a.commutator(&b)));
        prop_assert!(cyc.is_zero());
    }

    #[test]
    fn q_compose_matches_action(a in qdiffop(), b in qdiffop(), p in qpoly()) {
        let lhs = a.compose(&b).apply(&p).unwrap();
        let rhs = a.apply(&b.apply(&p).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn q_compose_associative(a in qdiffop(), b in qdiffop(), c in qdiffop()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn classical_limit_of_product(a in qdiffop(), b in qdiffop()) {
        let lim = a.compose(&b).classical_limit();
        prop_assert_eq!(lim, a.classical_limit().compose(&b.classical_limit()));
    }

    #[test]
    fn inverse_is_inverse(entries in prop::collection::vec(rational(), 9)) {
        let m = Matrix::from_fn(3, 3, |i, j| entries[3 * i + j].clone());
        match m.inverse() {
            Some(inv) => prop_assert_eq!(&m * &inv, Matrix::identity(3)),
            None => prop_assert!(m.rank() < 3),
        }
    }
}
