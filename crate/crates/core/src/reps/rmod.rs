//! Operators preserving M(m;n) ⊕ M(m+1;n−1): the tensors `R`, `R̄`, their
//! traces and their quadratic closure.

use std::collections::BTreeMap;

use serde_json::json;

use super::classical::gl_ops;
use super::graded::same_operator;
use super::spl21::{qbar_lin, tensor_q_vars};
use super::{cst, dv, xv, Op, Realization};
use crate::algebra::labels::{j, r as rl, rb, t};
use crate::algebra::{check, GenLabel, Realized, Relation, RelationTable};
use crate::diffop::{BlockOp, Operator};
use crate::error::{Error, Result};
use crate::modspace::{basis_m, DirectSum};
use crate::report::Report;
use crate::scalar::Rational;

fn r(k: i64) -> Rational {
    Rational::from(k)
}

fn delta(a: u8, b: u8) -> Rational {
    r((a == b) as i64)
}

/// `q^0 = −q_1`, `q^1 = q_0`.
fn up(b: u8, f: impl Fn(u8) -> Op) -> Op {
    match b {
        0 => -f(1),
        _ => f(0),
    }
}

/// `q^b(x,m; y,n)`.
fn q_up_x(m: i64, n: i64, b: u8) -> Op {
    up(b, |a| tensor_q_vars(0, &r(m), 1, &r(n), a))
}

/// `q^b(y,n; x,m)`.
fn q_up_y(n: i64, m: i64, b: u8) -> Op {
    up(b, |a| tensor_q_vars(1, &r(n), 0, &r(m), a))
}

pub fn rmod_module(m: u32, n: u32) -> Result<DirectSum<Rational>> {
    if n == 0 {
        return Err(Error::DegenerateModule("M(m+1; n−1) needs n ≥ 1".into()));
    }
    Ok(DirectSum::new(vec![basis_m(m, n), basis_m(m + 1, n - 1)]))
}

/// Generators of the `R`-module, keyed like the tables.
#[derive(Clone, Debug)]
pub struct RmodOps {
    pub m: u32,
    pub n: u32,
    /// `J^b_a` keyed by `(b, a)`: `J^1_0 = −∂`, `J^0_1 = j₊`, `J^0_0 = D − m`, `J^1_1 = −D`.
    pub j: BTreeMap<(u8, u8), BlockOp<Op>>,
    /// `R^b_a = q̄_a(y,n) q^b(x,m;y,n) σ₋`.
    pub r: BTreeMap<(u8, u8), BlockOp<Op>>,
    /// `R̄^b_a = q̄_a(x,m+1) q^b(y,n−1;x,m+1) σ₊`.
    pub rbar: BTreeMap<(u8, u8), BlockOp<Op>>,
    /// `diag(1, −1)`.
    pub t: BlockOp<Op>,
}

pub fn rmod_ops(m: u32, n: u32) -> Result<RmodOps> {
    if n == 0 {
        return Err(Error::DegenerateModule("M(m+1; n−1) needs n ≥ 1".into()));
    }
    let (mi, ni) = (m as i64, n as i64);
    let zero = r(0);
    let comp = |a: i64, b: i64| {
        let (gx, gy) = (gl_ops(2, &[0], &r(a), &zero), gl_ops(2, &[1], &r(b), &zero));
        gx.into_iter()
            .map(|(k, o)| {
                let sum = &o + &gy[&k];
                let sign = if k.0 == k.1 { 1 } else { -1 };
                (k, sum.scale(&r(sign)))
            })
            .collect::<BTreeMap<_, _>>()
    };
    let (c0, c1) = (comp(mi, ni), comp(mi + 1, ni - 1));
    let j = c0
        .keys()
        .map(|k| (*k, BlockOp::diag(vec![c0[k].clone(), c1[k].clone()])))
        .collect();
    let mut rr = BTreeMap::new();
    let mut rbar = BTreeMap::new();
    for a in 0..2u8 {
        for b in 0..2u8 {
            let op = &qbar_lin(2, 1, a, &r(ni)) * &q_up_x(mi, ni, b);
            rr.insert((b, a), BlockOp::single(2, 1, 0, op));
            let op = &qbar_lin(2, 0, a, &r(mi + 1)) * &q_up_y(ni - 1, mi + 1, b);
            rbar.insert((b, a), BlockOp::single(2, 0, 1, op));
        }
    }
    let t = BlockOp::diag(vec![cst(2, r(1)), cst(2, r(-1))]);
    Ok(RmodOps { m, n, j, r: rr, rbar, t })
}

impl RmodOps {
    pub fn realization(&self) -> Result<Realization<Op>> {
        let mut rep = Realization::new("M(m;n) ⊕ M(m+1;n−1)", rmod_module(self.m, self.n)?);
        for ((b, a), o) in &self.j {
            rep.push(j(*b, *a), o.clone());
        }
        for ((b, a), o) in &self.r {
            rep.push(rl(*b, *a), o.clone());
        }
        for ((b, a), o) in &self.rbar {
            rep.push(rb(*b, *a), o.clone());
        }
        rep.push(t(), self.t.clone());
        Ok(rep)
    }

    /// `R^a_a` as a scalar operator, without `σ₋`.
    pub fn trace_r(&self) -> Op {
        self.r[&(0, 0)].get(1, 0) + self.r[&(1, 1)].get(1, 0)
    }

    /// `R̄^a_a` as a scalar operator, without `σ₊`.
    pub fn trace_rbar(&self) -> Op {
        self.rbar[&(0, 0)].get(0, 1) + self.rbar[&(1, 1)].get(0, 1)
    }
}

fn labels() -> Vec<GenLabel> {
    let idx = [0u8, 1];
    let pairs: Vec<(u8, u8)> = idx.iter().flat_map(|&a| idx.iter().map(move |&b| (b, a))).collect();
    pairs
        .iter()
        .map(|&(b, a)| j(b, a))
        .chain(pairs.iter().map(|&(b, a)| rl(b, a)))
        .chain(pairs.iter().map(|&(b, a)| rb(b, a)))
        .chain([t()])
        .collect()
}

fn quads() -> impl Iterator<Item = (u8, u8, u8, u8)> {
    (0..16u8).map(|k| (k >> 3 & 1, k >> 2 & 1, k >> 1 & 1, k & 1))
}

/// `[J^b_a, R^d_c] = δ^d_a R^b_c − δ^b_c R^d_a`, and the same for `R̄`.
pub fn table_rmod_jr() -> RelationTable<Rational> {
    let mut tab = RelationTable::new("[J, R]", labels());
    for fam in [rl as fn(u8, u8) -> GenLabel, rb] {
        for (a, b, c, d) in quads() {
            tab.push(
                Relation::comm(j(b, a), fam(d, c))
                    .plus(delta(d, a), &[fam(b, c)])
                    .plus(-delta(b, c), &[fam(d, a)]),
            );
        }
    }
    tab
}

/// The quadratic closure exactly as printed:
/// `{R^b_a, R̄^d_c} = ½{J^d_a, J^b_c} + ½T(δ^d_a J^b_c − δ^b_c J^d_a)
///  − ½(δ^b_a J^d_c + δ^d_c J^b_a) − ½δ^b_a δ^d_c`.
pub fn table_rmod_closure_printed() -> RelationTable<Rational> {
    let h = Rational::new(1, 2);
    let mut tab = RelationTable::new("{R, Rb} printed", labels());
    for (a, b, c, d) in quads() {
        tab.push(
            Relation::anti(rl(b, a), rb(d, c))
                .plus(h.clone(), &[j(d, a), j(b, c)])
                .plus(h.clone(), &[j(b, c), j(d, a)])
                .plus(h.clone() * delta(d, a), &[t(), j(b, c)])
                .plus(-(h.clone() * delta(b, c)), &[t(), j(d, a)])
                .plus(-(h.clone() * delta(b, a)), &[j(d, c)])
                .plus(-(h.clone() * delta(d, c)), &[j(b, a)])
                .plus(-(h.clone() * delta(b, a) * delta(d, c)), &[]),
        );
    }
    tab
}

/// The closure satisfied by the realization, with `N = m+n`:
/// `{R^b_a, R̄^d_c} = ½{J^d_a, J^b_c} − ½δ^d_a T J^b_c + ½δ^b_c T J^d_a
///  + (N+3/2)(δ^b_a J^d_c + δ^d_c J^b_a) − ½(δ^d_a J^b_c + δ^b_c J^d_a)
///  + (N+1)² δ^b_a δ^d_c`.
pub fn table_rmod_closure_fitted(m: u32, n: u32) -> RelationTable<Rational> {
    let h = Rational::new(1, 2);
    let nn = r((m + n) as i64);
    let lin = nn.clone() + Rational::new(3, 2);
    let cst = (nn.clone() + r(1)) * (nn + r(1));
    let mut tab = RelationTable::new("{R, Rb} fitted", labels());
    for (a, b, c, d) in quads() {
        tab.push(
            Relation::anti(rl(b, a), rb(d, c))
                .plus(h.clone(), &[j(d, a), j(b, c)])
                .plus(h.clone(), &[j(b, c), j(d, a)])
                .plus(-(h.clone() * delta(d, a)), &[t(), j(b, c)])
                .plus(h.clone() * delta(b, c), &[t(), j(d, a)])
                .plus(lin.clone() * delta(b, a), &[j(d, c)])
                .plus(lin.clone() * delta(d, c), &[j(b, a)])
                .plus(-(h.clone() * delta(d, a)), &[j(b, c)])
                .plus(-(h.clone() * delta(b, c)), &[j(d, a)])
                .plus(cst.clone() * delta(b, a) * delta(d, c), &[]),
        );
    }
    tab
}

/// `((m+n+2)/(m+1))((y−x)∂y − n)`.
pub fn printed_trace_r(m: u32, n: u32) -> Op {
    let k = Rational::new((m + n + 2) as i64, (m + 1) as i64);
    (&(&(&xv(2, 1) - &xv(2, 0)) * &dv(2, 1)) - &cst(2, r(n as i64))).scale(&k)
}

/// `((m+n+2)/(n+1))((x−y)∂x − m)`.
pub fn printed_trace_rbar(m: u32, n: u32) -> Op {
    let k = Rational::new((m + n + 2) as i64, (n + 1) as i64);
    (&(&(&xv(2, 0) - &xv(2, 1)) * &dv(2, 0)) - &cst(2, r(m as i64))).scale(&k)
}

/// `((m+n+2)/n)((x−y)∂x − (m+1))`, the form the realization produces.
pub fn trace_rbar_formula(m: u32, n: u32) -> Op {
    let k = Rational::new((m + n + 2) as i64, n as i64);
    (&(&(&xv(2, 0) - &xv(2, 1)) * &dv(2, 0)) - &cst(2, r(m as i64 + 1))).scale(&k)
}

/// Reordering identity readings for indices `(a, b)`: printed, with the
/// `m+1 ↔ m` slot swap, and with `q̄_a(y,n)` on both sides.
pub fn reorder_readings(m: u32, n: u32, a: u8, b: u8, trace: &Op) -> [(String, Op, Op); 3] {
    let (mi, ni) = (m as i64, n as i64);
    let inv = Rational::new(1, mi + ni + 2);
    let qy = |p: i64, rr: i64| tensor_q_vars(1, &r(p), 0, &r(rr), a);
    let rhs = trace.scale(&inv);
    let printed = &(&qy(ni - 1, mi + 1) * &q_up_x(mi, ni, b)) - &(&q_up_x(mi, ni - 1, b) * &qy(ni - 1, mi));
    let swapped = &(&qy(ni - 1, mi) * &q_up_x(mi, ni, b)) - &(&q_up_x(mi, ni - 1, b) * &qy(ni - 1, mi));
    let qb = qbar_lin(2, 1, a, &r(ni));
    let fixed = &(&qb * &q_up_x(mi, ni, b)) - &(&q_up_x(mi, ni - 1, b) * &qb);
    [
        (format!("reorder printed (a={a}, b={b})"), printed, rhs.clone()),
        (format!("reorder m+1 -> m (a={a}, b={b})"), swapped, rhs.clone()),
        (format!("reorder with qb_a(y,n) (a={a}, b={b})"), fixed, rhs.scale(&delta(a, b))),
    ]
}

fn matrix_claims(report: &mut Report, name: &str, result: Result<Report>) -> Result<()> {
    report.absorb(name, result?);
    Ok(())
}

/// Module preservation, traces, intertwining, reordering, `[J, R]` and the
/// quadratic closure.
pub fn rmod_suite(m: u32, n: u32, tamper: bool) -> Result<Report> {
    let ops = rmod_ops(m, n)?;
    let mut report = Report::new("rmod").with_param("m", m).with_param("n", n);
    let rep = ops.realization()?;
    report.section("dimensions", json!(rep.module.dims()));
    let mut mats: Realized<Rational> = match rep.matrices() {
        Ok(m) => {
            report.claim("R, Rb preserve the module", true, "", "");
            m
        }
        Err(e @ Error::NotInvariant { .. }) => {
            report.claim("R, Rb preserve the module", false, e, "invariant");
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    if tamper {
        super::tamper(&mut mats, &rl(0, 0));
    }

    let tr = ops.trace_r();
    let res = same_operator("R^a_a", &tr, &printed_trace_r(m, n));
    report.claim("R^a_a = ((m+n+2)/(m+1))((y-x)dy - n)", res.is_ok(), &tr, printed_trace_r(m, n));
    let trb = ops.trace_rbar();
    let res = same_operator("Rb^a_a", &trb, &trace_rbar_formula(m, n));
    report.claim("Rb^a_a = ((m+n+2)/n)((x-y)dx - (m+1))", res.is_ok(), &trb, trace_rbar_formula(m, n));
    if trb != printed_trace_rbar(m, n) {
        report.note(
            "discrepancies",
            json!({
                "printed": "Rb^a_a = ((m+n+2)/(n+1))((x-y)dx - m)",
                "computed": trb.to_string(),
                "printed_value": printed_trace_rbar(m, n).to_string(),
            }),
        );
    }

    let traces = [
        ("R^a_a", &mats[&rl(0, 0)] + &mats[&rl(1, 1)]),
        ("Rb^a_a", &mats[&rb(0, 0)] + &mats[&rb(1, 1)]),
    ];
    for (name, tm) in &traces {
        for (b, a) in [(0u8, 0u8), (1, 0), (0, 1), (1, 1)] {
            let jm = &mats[&j(b, a)];
            let c = &(jm * tm) - &(tm * jm);
            report.claim(format!("[J^{b}_{a}, {name}] = 0"), c.is_zero(), "nonzero", "0");
        }
    }

    let mut holds = BTreeMap::new();
    for a in 0..2u8 {
        for b in 0..2u8 {
            let [printed, swapped, fixed] = reorder_readings(m, n, a, b, &tr);
            for (key, (name, lhs, rhs)) in [("printed", printed), ("m+1 -> m", swapped)] {
                let ok = same_operator(&name, &lhs, &rhs).is_ok();
                let slot = holds.entry(key).or_insert(true);
                *slot &= ok;
            }
            let (name, lhs, rhs) = fixed;
            let res = same_operator(&name, &lhs, &rhs);
            report.claim(name, res.is_ok(), res.err().map_or(String::new(), |e| e.to_string()), "0");
        }
    }
    report.section("reordering", json!(holds));
    for (key, ok) in &holds {
        if !ok {
            report.note(
                "discrepancies",
                json!({
                    "printed": format!("reordering identity ({key})"),
                    "resolution": "qb_a(y,n) on both sides, right side delta^b_a R^c_c/(m+n+2)",
                }),
            );
        }
    }

    matrix_claims(&mut report, "[J, R]", check(&table_rmod_jr(), &mats))?;
    matrix_claims(&mut report, "corrbar", check(&table_rmod_closure_printed(), &mats))?;
    let fitted = check(&table_rmod_closure_fitted(m, n), &mats)?;
    report.section(
        "fitted_closure",
        json!({"relations": fitted.relations_total, "failures": fitted.failures.len(), "pass": fitted.pass()}),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    #[test]
    fn trace_on_xy() {
        let ops = rmod_ops(1, 1).unwrap();
        let img = ops.trace_r().apply(&Poly::monomial(&[1, 1])).unwrap();
        assert_eq!(img, Poly::monomial(&[2, 0]).scale(&r(-2)));
        assert!(basis_m(2, 0).contains(&Poly::monomial(&[2, 0])));
    }

    #[test]
    fn module_and_relations() {
        let rep = rmod_ops(1, 1).unwrap().realization().unwrap();
        assert_eq!(rep.dim(), 6);
        let mats = rep.matrices().unwrap();
        assert!(check(&table_rmod_jr(), &mats).unwrap().pass());
        assert!(check(&table_rmod_closure_fitted(1, 1), &mats).unwrap().pass());
    }
}
