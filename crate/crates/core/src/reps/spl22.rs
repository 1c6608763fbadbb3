//! Atypical spl(2,2) on four bidegree floors.

use super::classical::sl2_ops;
use super::spl21::{q_lin, qbar_lin, Reading};
use super::{Op, Realization};
use crate::algebra::labels::{j, jt, q2, qb2, y};
use crate::diffop::BlockOp;
use crate::error::{Error, Result};
use crate::modspace::{basis_p_bidegree, DirectSum};
use crate::scalar::Rational;

fn r(k: i64) -> Rational {
    Rational::from(k)
}

/// `P(n;n) ⊕ P(n+1;n−1) ⊕ P(n−1;n+1) ⊕ P(n;n)`. The printed reading puts
/// `P(n+1;n)` on the second floor.
pub fn spl22_module(n: u32, reading: Reading) -> Result<DirectSum<Rational>> {
    if n == 0 {
        return Err(Error::DegenerateModule("P(n−1; n+1) needs n ≥ 1".into()));
    }
    let second = match reading {
        Reading::Corrected => basis_p_bidegree(n + 1, n - 1),
        Reading::Printed => basis_p_bidegree(n + 1, n),
    };
    Ok(DirectSum::new(vec![
        basis_p_bidegree(n, n),
        second,
        basis_p_bidegree(n - 1, n + 1),
        basis_p_bidegree(n, n),
    ]))
}

// x-factor indexed by a, y-factor by c.
fn qx(a: u8) -> Op {
    q_lin(2, 0, a)
}
fn qy(c: u8) -> Op {
    q_lin(2, 1, c)
}
fn qbx(a: u8, k: i64) -> Op {
    qbar_lin(2, 0, a, &r(k))
}
fn qby(c: u8, k: i64) -> Op {
    qbar_lin(2, 1, c, &r(k))
}

/// `V_{ac}`.
pub fn spl22_v(n: u32, a: u8, c: u8) -> BlockOp<Op> {
    let n = n as i64;
    BlockOp::from_entries(
        4,
        2,
        vec![
            (1, 0, &qx(a) * &qby(c, n)),
            (2, 0, &qbx(a, n) * &qy(c)),
            (3, 1, &qbx(a, n + 1) * &qy(c)),
            (3, 2, -(&qx(a) * &qby(c, n + 1))),
        ],
    )
}

/// `V̄_{ac}`, x-factor indexed by `a`. The printed `(0,2)` entry carries
/// `q̄_c(n)` instead of `q̄_c(n+1)`.
pub fn spl22_vbar(n: u32, a: u8, c: u8, reading: Reading) -> BlockOp<Op> {
    let n = n as i64;
    let k02 = match reading {
        Reading::Corrected => n + 1,
        Reading::Printed => n,
    };
    let inv = r(n + 1).recip().expect("n ≥ 0");
    BlockOp::from_entries(
        4,
        2,
        vec![
            (0, 1, -(&qbx(a, n + 1) * &qy(c))),
            (0, 2, &qx(a) * &qby(c, k02)),
            (1, 3, &qx(a) * &qby(c, n)),
            (2, 3, &qbx(a, n) * &qy(c)),
        ],
    )
    .scale(&inv)
}

/// `J^1_0 = −∂`, `J^0_0 = j₀`, `J^0_1 = j₊`, `J^1_1 = −J^0_0`, per floor.
fn bosons(var: usize, params: [i64; 4]) -> [(u8, u8, BlockOp<Op>); 4] {
    let sl = params.map(|p| sl2_ops(2, var, &r(p)));
    let zero = BlockOp::diag(sl.iter().map(|s| s.zero.clone()).collect());
    [
        (1, 0, BlockOp::diag(sl.iter().map(|s| -s.minus.clone()).collect())),
        (0, 0, zero.clone()),
        (0, 1, BlockOp::diag(sl.iter().map(|s| s.plus.clone()).collect())),
        (1, 1, zero.scale(&r(-1))),
    ]
}

/// Realization with a choice of floor and `V̄` reading.
pub fn rep_spl22_reading(n: u32, floors: Reading, vbar: Reading) -> Result<Realization<Op>> {
    let module = spl22_module(n, floors)?;
    let ni = n as i64;
    let mut rep = Realization::new("spl(2,2) atypical", module);
    let mut js = bosons(0, [ni, ni + 1, ni - 1, ni]).to_vec();
    js.sort_by_key(|(b, a, _)| (*a, *b));
    for (b, a, op) in js {
        rep.push(j(b, a), op);
    }
    let mut jts = bosons(1, [ni, ni - 1, ni + 1, ni]).to_vec();
    jts.sort_by_key(|(b, a, _)| (*a, *b));
    for (b, a, op) in jts {
        rep.push(jt(b, a), op);
    }
    rep.push(y(), BlockOp::zero(4, 2));
    // Q^b_a = ε^{bc} V_{ac}, Q̄^b_a = ε^{bc} V̄_{ca}
    for a in 0..2u8 {
        rep.push(q2(0, a), spl22_v(n, a, 1));
        rep.push(q2(1, a), spl22_v(n, a, 0).scale(&r(-1)));
    }
    for a in 0..2u8 {
        rep.push(qb2(0, a), spl22_vbar(n, 1, a, vbar));
        rep.push(qb2(1, a), spl22_vbar(n, 0, a, vbar).scale(&r(-1)));
    }
    Ok(rep)
}

pub fn rep_spl22(n: u32) -> Result<Realization<Op>> {
    rep_spl22_reading(n, Reading::Corrected, Reading::Corrected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{table_spl22, Spl22Variant};

    #[test]
    fn floors_preserved() {
        for n in 1..=2 {
            assert!(rep_spl22(n).unwrap().matrices().is_ok());
        }
        assert!(rep_spl22(0).is_err());
    }

    #[test]
    fn printed_vbar_leaves_module() {
        let rep = rep_spl22_reading(1, Reading::Corrected, Reading::Printed).unwrap();
        assert!(matches!(rep.matrices(), Err(Error::NotInvariant { .. })));
    }

    #[test]
    fn tilde_variant_is_the_one() {
        let rep = rep_spl22(1).unwrap();
        let mats = rep.matrices().unwrap();
        for v in Spl22Variant::ALL {
            let report = crate::algebra::check(&table_spl22(v), &mats).unwrap();
            assert_eq!(report.relations_total, 168);
            assert_eq!(report.pass(), v == Spl22Variant::TildeBc, "{}", v.name());
        }
    }
}
