//! spl(2,1) by differential operators of one and two variables.

use std::collections::BTreeMap;

use super::classical::{gl_ops, sl2_ops};
use super::{cst, dv, rat, xv, Op, Realization};
use crate::algebra::labels::{j, q, qb};
use crate::diffop::{BlockOp, Operator};
use crate::error::{Error, Result};
use crate::modspace::{basis_m, basis_p, DirectSum};
use crate::scalar::Rational;

/// Printed formula or its verified correction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Reading {
    Printed,
    Corrected,
}

fn r(k: i64) -> Rational {
    Rational::from(k)
}

/// `q_a = (1, v)`.
pub fn q_lin(nvars: usize, v: usize, a: u8) -> Op {
    match a {
        0 => cst(nvars, r(1)),
        _ => xv(nvars, v),
    }
}

/// `q̄_a(v, c) = (∂v, v∂v − c)`.
pub fn qbar_lin(nvars: usize, v: usize, a: u8, c: &Rational) -> Op {
    match a {
        0 => dv(nvars, v),
        _ => &(&xv(nvars, v) * &dv(nvars, v)) - &cst(nvars, c.clone()),
    }
}

/// Raise with `ε^{01} = 1`: `f^0 = f_1`, `f^1 = −f_0`.
pub fn raise(a: u8, f: impl Fn(u8) -> Op) -> Op {
    match a {
        0 => f(1),
        _ => -f(0),
    }
}

/// `q_a(u,p; v,r)`:
/// `q₀ = (p+r+1 + (u−v)∂v)/(p+1)`, `q₁ = ((p+1)u + r·v + v(u−v)∂v)/(p+1)`.
pub fn tensor_q_vars(u: usize, p: &Rational, v: usize, rr: &Rational, a: u8) -> Op {
    let one = r(1);
    let inv = cst(2, (p.clone() + &one).recip().expect("p ≠ −1"));
    let (xu, xw, dw) = (xv(2, u), xv(2, v), dv(2, v));
    let body = match a {
        0 => &cst(2, p.clone() + rr + &one) + &(&(&xu - &xw) * &dw),
        _ => {
            &(&(&cst(2, p.clone() + &one) * &xu) + &(&cst(2, rr.clone()) * &xw))
                + &(&(&xw * &(&xu - &xw)) * &dw)
        }
    };
    &inv * &body
}

/// `q_a(x,m; y,n)` for `a = 0, 1`.
pub fn tensor_q(m: &Rational, n: &Rational) -> [Op; 2] {
    [0, 1].map(|a| tensor_q_vars(0, m, 1, n, a))
}

/// `q̄_a(x,m)` for `a = 0, 1`, in two variables.
pub fn tensor_qbar(m: &Rational) -> [Op; 2] {
    [0, 1].map(|a| qbar_lin(2, 0, a, m))
}

/// Realization whose bosonic generators are `J^b_a = {Q_a, Q̄^b}`.
pub fn from_fermions<O: Operator>(
    name: &str,
    module: DirectSum<O::Scalar>,
    qs: [BlockOp<O>; 2],
    qbs: [BlockOp<O>; 2],
) -> Realization<O> {
    let mut rep = Realization::new(name, module);
    for a in 0..2u8 {
        for b in 0..2u8 {
            rep.push(j(b, a), qs[a as usize].anticommutator(&qbs[b as usize]));
        }
    }
    for (a, op) in qs.into_iter().enumerate() {
        rep.push(q(a as u8), op);
    }
    for (a, op) in qbs.into_iter().enumerate() {
        rep.push(qb(a as u8), op);
    }
    rep
}

/// `α = (m−t)/(2(m+1))`, `β = (m+2+t)/(2(m+1))`. The denominator never
/// vanishes for `m ≥ 0`.
pub fn alpha_beta(m: u32, t: &Rational) -> (Rational, Rational) {
    let m = r(m as i64);
    let den = (m.clone() + r(1)) * r(2);
    let inv = den.recip().expect("m ≥ 0");
    ((m.clone() - t) * &inv, (m + r(2) + t) * &inv)
}

/// `P(m) ⊕ P(m+1) ⊕ P(m−1) ⊕ P(m)`.
pub fn spl21_1var_module(m: u32) -> Result<DirectSum<Rational>> {
    if m == 0 {
        return Err(Error::DegenerateModule("P(m−1) needs m ≥ 1".into()));
    }
    Ok(DirectSum::new(vec![basis_p(m, 1), basis_p(m + 1, 1), basis_p(m - 1, 1), basis_p(m, 1)]))
}

/// Fermionic generators of the one-variable realization.
pub fn spl21_1var_fermions(m: u32, t: &Rational, reading: Reading) -> ([BlockOp<Op>; 2], [BlockOp<Op>; 2]) {
    let (al, be) = alpha_beta(m, t);
    let mr = r(m as i64);
    let m1 = r(m as i64 + 1);
    let qa = |a: u8| q_lin(1, 0, a);
    let qba = |a: u8, c: &Rational| qbar_lin(1, 0, a, c);
    let qs = [0u8, 1].map(|a| {
        BlockOp::from_entries(
            4,
            1,
            vec![(1, 0, qa(a)), (2, 0, qba(a, &mr)), (3, 1, qba(a, &m1)), (3, 2, -qa(a))],
        )
    });
    let (c13, c23) = match reading {
        Reading::Corrected => (be.clone(), -al.clone()),
        Reading::Printed => (al.clone(), -be.clone()),
    };
    let qbs = [0u8, 1].map(|a| {
        let up_q = raise(a, qa);
        let up_qb = |c: &Rational| raise(a, |b| qba(b, c));
        BlockOp::from_entries(
            4,
            1,
            vec![
                (0, 1, up_qb(&m1).scale(&al)),
                (0, 2, up_q.scale(&be)),
                (1, 3, up_q.scale(&c13)),
                (2, 3, up_qb(&mr).scale(&c23)),
            ],
        )
    });
    (qs, qbs)
}

/// The 4×4 one-variable realization with bosonic generators from `{Q, Q̄}`.
pub fn rep_spl21_1var(m: u32, t: &Rational) -> Result<Realization<Op>> {
    rep_spl21_1var_reading(m, t, Reading::Corrected)
}

/// Rejects `t = −(m+1)`.
pub fn rep_spl21_1var_reading(m: u32, t: &Rational, reading: Reading) -> Result<Realization<Op>> {
    let module = spl21_1var_module(m)?;
    if *t == -r(m as i64 + 1) {
        return Err(Error::SingularParameter(format!("t = -(m+1) = {t}")));
    }
    let (qs, qbs) = spl21_1var_fermions(m, t, reading);
    Ok(from_fermions("spl(2,1) one variable", module, qs, qbs))
}

/// Upper-left 2×2 blocks at `t = −(m+2)` on `P(m) ⊕ P(m+1)`.
pub fn rep_spl21_1var_atypical(m: u32) -> Result<Realization<Op>> {
    let t = -r(m as i64 + 2);
    let (qs, qbs) = spl21_1var_fermions(m, &t, Reading::Corrected);
    let module = DirectSum::new(vec![basis_p(m, 1), basis_p(m + 1, 1)]);
    Ok(from_fermions(
        "spl(2,1) atypical",
        module,
        qs.map(|o| o.truncate(2)),
        qbs.map(|o| o.truncate(2)),
    ))
}

/// The diagonal forms printed for the one-variable bosonic generators,
/// keyed by `(b, a)`; the trace part uses the printed `(t, t+1, t+2, t+2)`.
pub fn spl21_1var_printed_bosons(m: u32, t: &Rational) -> BTreeMap<(u8, u8), BlockOp<Op>> {
    let params = [m as i64, m as i64 + 1, m as i64 - 1, m as i64].map(r);
    let sl = params.clone().map(|p| sl2_ops(1, 0, &p));
    let trace = [0, 1, 2, 2].map(|k| cst(1, (t.clone() + r(k)) * rat(1, 2)));
    let mut out = BTreeMap::new();
    out.insert((1, 0), BlockOp::diag(sl.iter().map(|s| -s.minus.clone()).collect()));
    out.insert((0, 1), BlockOp::diag(sl.iter().map(|s| s.plus.clone()).collect()));
    // J^0_0 = trace + j0, J^1_1 = trace − j0
    out.insert(
        (0, 0),
        BlockOp::diag(sl.iter().zip(&trace).map(|(s, c)| c + &s.zero).collect()),
    );
    out.insert(
        (1, 1),
        BlockOp::diag(sl.iter().zip(&trace).map(|(s, c)| c - &s.zero).collect()),
    );
    out
}

/// `M(m;n) ⊕ M(m+1;n)`; dimension `2m+2n+3`.
pub fn spl21_2var_module(m: u32, n: u32) -> DirectSum<Rational> {
    DirectSum::new(vec![basis_m(m, n), basis_m(m + 1, n)])
}

/// `Q_a = q_a(x,m;y,n)σ₋`, `Q̄^a = q̄^a(x,c)σ₊` with `c = m+1` (corrected)
/// or `c = m` (printed).
pub fn spl21_2var_fermions(m: u32, n: u32, reading: Reading) -> ([BlockOp<Op>; 2], [BlockOp<Op>; 2]) {
    let (mr, nr) = (r(m as i64), r(n as i64));
    let qs = tensor_q(&mr, &nr).map(|o| BlockOp::single(2, 1, 0, o));
    let c = match reading {
        Reading::Corrected => r(m as i64 + 1),
        Reading::Printed => mr,
    };
    let qbar = tensor_qbar(&c);
    let qbs = [0u8, 1].map(|a| BlockOp::single(2, 0, 1, raise(a, |b| qbar[b as usize].clone())));
    (qs, qbs)
}

pub fn rep_spl21_2var(m: u32, n: u32) -> Realization<Op> {
    let (qs, qbs) = spl21_2var_fermions(m, n, Reading::Corrected);
    from_fermions("spl(2,1) two variables", spl21_2var_module(m, n), qs, qbs)
}

/// The same construction after `x ↔ y`, `m ↔ n`: on `M(m;n) ⊕ M(m;n+1)`.
pub fn rep_spl21_2var_swapped(m: u32, n: u32) -> Realization<Op> {
    let (qs, qbs) = spl21_2var_fermions(n, m, Reading::Corrected);
    let swap = |o: &Op| o.swap_vars(0, 1);
    let module = DirectSum::new(vec![basis_m(m, n), basis_m(m, n + 1)]);
    from_fermions(
        "spl(2,1) two variables, swapped",
        module,
        qs.map(|b| b.map(swap)),
        qbs.map(|b| b.map(swap)),
    )
}

/// `diag(J(x,m)+J(y,n), J(x,m+1)+J(y,n)) − δ^b_a diag(1,0)`, keyed by `(b, a)`.
pub fn jj2(m: u32, n: u32) -> BTreeMap<(u8, u8), BlockOp<Op>> {
    let zero = r(0);
    let jx0 = gl_ops(2, &[0], &r(m as i64), &zero);
    let jx1 = gl_ops(2, &[0], &r(m as i64 + 1), &zero);
    let jy = gl_ops(2, &[1], &r(n as i64), &zero);
    let mut out = BTreeMap::new();
    for (key, op) in &jx0 {
        let mut top = op + &jy[key];
        if key.0 == key.1 {
            top = &top - &cst(2, r(1));
        }
        out.insert(*key, BlockOp::diag(vec![top, &jx1[key] + &jy[key]]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::table_spl21;
    use crate::poly::Poly;

    #[test]
    fn tensor_q_small() {
        let [q0, q1] = tensor_q(&r(0), &r(0));
        let one = Poly::one(2);
        assert_eq!(q0.apply(&one).unwrap(), one);
        assert_eq!(q1.apply(&one).unwrap(), Poly::var(2, 0));
        let qb1 = &tensor_qbar(&r(2))[1];
        assert!(qb1.apply(&Poly::monomial(&[2, 0])).unwrap().is_zero());
    }

    #[test]
    fn one_variable_passes() {
        let rep = rep_spl21_1var(1, &rat(1, 3)).unwrap();
        assert_eq!(rep.dim(), 8);
        assert!(rep.check(&table_spl21()).unwrap().pass());
    }

    #[test]
    fn two_variable_passes() {
        let rep = rep_spl21_2var(1, 1);
        assert_eq!(rep.dim(), 7);
        assert!(rep.check(&table_spl21()).unwrap().pass());
    }

    #[test]
    fn printed_two_variable_not_invariant() {
        let (qs, qbs) = spl21_2var_fermions(1, 1, Reading::Printed);
        let rep = from_fermions("printed", spl21_2var_module(1, 1), qs, qbs);
        assert!(matches!(rep.matrices(), Err(Error::NotInvariant { .. })));
    }
}
