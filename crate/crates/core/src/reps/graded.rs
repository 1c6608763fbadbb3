//! Intertwiners between M(m;n) and M(m+Δ;n+Δ′) built from products of the
//! two-variable `q_a`.

use std::collections::BTreeMap;

use serde_json::json;

use super::classical::gl_ops;
use super::spl21::tensor_q_vars;
use super::{cst, Op, Realization};
use crate::algebra::{check, labels::j, table_gl, GenLabel};
use crate::diffop::{BlockOp, DiffOp, Operator};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::modspace::{ad_closure, basis_m, realize_on, DirectSum};
use crate::report::Report;
use crate::scalar::Rational;

fn r(k: i64) -> Rational {
    Rational::from(k)
}

/// `q_a(x,p; y,r)`.
fn qxy(p: i64, rr: i64, a: u8) -> Op {
    tensor_q_vars(0, &r(p), 1, &r(rr), a)
}

/// `q_a(y,p; x,r)`.
fn qyx(p: i64, rr: i64, a: u8) -> Op {
    tensor_q_vars(1, &r(p), 0, &r(rr), a)
}

/// `Δ`, `Δ′` and the base degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shift {
    pub m: u32,
    pub n: u32,
    pub dx: u32,
    pub dy: u32,
}

impl Shift {
    pub fn new(m: u32, n: u32, dx: u32, dy: u32) -> Result<Self> {
        if dx + dy == 0 {
            return Err(Error::DegenerateModule("Δ + Δ′ must be at least 1".into()));
        }
        Ok(Shift { m, n, dx, dy })
    }

    pub fn module(&self) -> DirectSum<Rational> {
        DirectSum::new(vec![
            basis_m(self.m, self.n),
            basis_m(self.m + self.dx, self.n + self.dy),
        ])
    }

    /// `m+n+Δ+Δ′+1` and `m+n+1`.
    pub fn top(&self) -> [Rational; 2] {
        let base = (self.m + self.n + 1) as i64;
        [r(base + (self.dx + self.dy) as i64), r(base)]
    }
}

/// Diagonal gl(2) with the trace-fixing shift, and every `Q(a, b)` labelled
/// `Q^b_a` by its multi-indices.
pub fn graded_realization(s: &Shift) -> Result<Realization<Op>> {
    let mut rep = Realization::new("graded", s.module());
    for ((b, a), op) in graded_diagonal(s, &trace_gamma(s)) {
        rep.push(j(b, a), op);
    }
    for a in multi_indices(s.dx) {
        for b in multi_indices(s.dy) {
            rep.push(GenLabel::odd("Q", &b, &a), graded_block(s, &a, &b)?);
        }
    }
    Ok(rep)
}

/// `q_{b_Δ′}(y,n+Δ′−1; x,m+Δ) ⋯ q_{b_1}(y,n; x,m+Δ) q_{a_Δ}(x,m+Δ−1; y,n) ⋯ q_{a_1}(x,m; y,n)`.
pub fn graded_q(s: &Shift, a: &[u8], b: &[u8]) -> Result<Op> {
    if a.len() != s.dx as usize || b.len() != s.dy as usize {
        return Err(Error::DimensionMismatch(format!(
            "multi-indices of length {} and {} for Δ = {}, Δ′ = {}",
            a.len(),
            b.len(),
            s.dx,
            s.dy
        )));
    }
    let (m, n, dx) = (s.m as i64, s.n as i64, s.dx as i64);
    let xs = a.iter().enumerate().map(|(k, &ak)| qxy(m + k as i64, n, ak));
    let ys = b.iter().enumerate().map(|(l, &bl)| qyx(n + l as i64, m + dx, bl));
    Ok(xs.chain(ys).fold(DiffOp::identity(2), |acc, f| &f * &acc))
}

/// `graded_q · σ₋`.
pub fn graded_block(s: &Shift, a: &[u8], b: &[u8]) -> Result<BlockOp<Op>> {
    Ok(BlockOp::single(2, 1, 0, graded_q(s, a, b)?))
}

/// Every multi-index of length `k`.
pub fn multi_indices(k: u32) -> Vec<Vec<u8>> {
    (0..1u32 << k)
        .map(|bits| (0..k).map(|i| ((bits >> i) & 1) as u8).collect())
        .collect()
}

/// `diag(J(x,m)+J(y,n), J(x,m+Δ)+J(y,n+Δ′)) − ½δ diag(1+Δ+Δ′, 1−Δ−Δ′) + δ diag(γ₀, γ₁)`,
/// keyed by `(b, a)`.
pub fn graded_diagonal(s: &Shift, gamma: &[Rational; 2]) -> BTreeMap<(u8, u8), BlockOp<Op>> {
    let zero = r(0);
    let (m, n, dx, dy) = (s.m as i64, s.n as i64, s.dx as i64, s.dy as i64);
    let top = [gl_ops(2, &[0], &r(m), &zero), gl_ops(2, &[1], &r(n), &zero)];
    let low = [gl_ops(2, &[0], &r(m + dx), &zero), gl_ops(2, &[1], &r(n + dy), &zero)];
    let half = Rational::new(1, 2);
    let shift = [
        gamma[0].clone() - r(1 + dx + dy) * &half,
        gamma[1].clone() - r(1 - dx - dy) * &half,
    ];
    top[0]
        .keys()
        .map(|key| {
            let mut c0 = &top[0][key] + &top[1][key];
            let mut c1 = &low[0][key] + &low[1][key];
            if key.0 == key.1 {
                c0 = &c0 + &cst(2, shift[0].clone());
                c1 = &c1 + &cst(2, shift[1].clone());
            }
            (*key, BlockOp::diag(vec![c0, c1]))
        })
        .collect()
}

/// The shifts `γ` for which the trace equals [`Shift::top`].
pub fn trace_gamma(s: &Shift) -> [Rational; 2] {
    s.top()
}

/// `Ok` when two operators agree in normal form; otherwise the first
/// differing term.
pub fn same_operator(name: &str, lhs: &Op, rhs: &Op) -> Result<()> {
    let diff = lhs - rhs;
    let first = diff.terms().next().map(|(k, c)| DiffOp::term(c.clone(), k.x.clone(), k.d.clone()));
    match first {
        None => Ok(()),
        Some(t) => Err(Error::IdentityFailure(format!("{name}: {t}"))),
    }
}

/// The three reordering identities at `(m, n)` with indices `(a, b)`, as
/// `(lhs, rhs)` pairs; the third uses `q_b(y,n; x,m)` on the right.
pub fn reorder_identities(m: i64, n: i64, a: u8, b: u8) -> [(String, Op, Op); 4] {
    let lhs2 = &qyx(n, m + 1, b) * &qxy(m, n, a);
    [
        (
            format!("q_{b}(x,m+1;y,n) q_{a}(x,m;y,n) = q_{a}(x,m+1;y,n) q_{b}(x,m;y,n)"),
            &qxy(m + 1, n, b) * &qxy(m, n, a),
            &qxy(m + 1, n, a) * &qxy(m, n, b),
        ),
        (
            format!("q_{b}(y,n;x,m+1) q_{a}(x,m;y,n) = q_{a}(y,n;x,m+1) q_{b}(x,m;y,n)"),
            lhs2.clone(),
            &qyx(n, m + 1, a) * &qxy(m, n, b),
        ),
        (
            format!("q_{b}(y,n;x,m+1) q_{a}(x,m;y,n) = q_{a}(x,m;y,n+1) q_{b}(y,n;x,n)"),
            lhs2.clone(),
            &qxy(m, n + 1, a) * &qyx(n, n, b),
        ),
        (
            format!("q_{b}(y,n;x,m+1) q_{a}(x,m;y,n) = q_{a}(x,m;y,n+1) q_{b}(y,n;x,m)"),
            lhs2,
            &qxy(m, n + 1, a) * &qyx(n, m, b),
        ),
    ]
}

fn agree_on(basis: &DirectSum<Rational>, lhs: &Op, rhs: &Op) -> Result<bool> {
    for p in basis.components()[0].elements() {
        if lhs.apply(p)? != rhs.apply(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reordering identities, index symmetry, module mapping, ad-closure and the
/// trace normalization.
pub fn graded_suite(s: &Shift, tamper: bool) -> Result<Report> {
    let mut report = Report::new("graded")
        .with_param("m", s.m)
        .with_param("n", s.n)
        .with_param("dx", s.dx)
        .with_param("dy", s.dy);
    let module = s.module();
    report.section("dimensions", json!(module.dims()));
    let (m, n) = (s.m as i64, s.n as i64);

    for a in 0..2u8 {
        for b in 0..2u8 {
            let [first, second, printed, fixed] = reorder_identities(m, n, a, b);
            for (name, lhs, rhs) in [first, second.clone(), fixed] {
                let res = same_operator(&name, &lhs, &rhs);
                report.claim(name, res.is_ok(), res.err().map_or(String::new(), |e| e.to_string()), "0");
            }
            let (name, lhs, rhs) = second;
            report.note(
                "identities_on_module",
                json!({"identity": name, "holds_on_M(m;n)": agree_on(&module, &lhs, &rhs)?}),
            );
            let (name, lhs, rhs) = printed;
            if let Err(e) = same_operator(&name, &lhs, &rhs) {
                report.note(
                    "discrepancies",
                    json!({
                        "printed": name,
                        "witness": e.to_string(),
                        "resolution": "second factor read as q_b(y,n;x,m)",
                    }),
                );
            }
        }
    }

    let mut qs = Vec::new();
    for a in multi_indices(s.dx) {
        for b in multi_indices(s.dy) {
            let op = graded_q(s, &a, &b)?;
            let mut sa = a.clone();
            sa.sort_unstable();
            let mut sb = b.clone();
            sb.sort_unstable();
            let sym = graded_q(s, &sa, &sb)?;
            report.claim(format!("Q({a:?},{b:?}) = Q({sa:?},{sb:?})"), op == sym, &op, &sym);
            match realize_on(&BlockOp::single(2, 1, 0, op), &module) {
                Ok(mat) => {
                    report.record(None);
                    qs.push(mat);
                }
                Err(e @ Error::NotInvariant { .. }) => report.claim(format!("Q({a:?},{b:?}) maps M(m;n) into M(m+Δ;n+Δ′)"), false, e, "invariant"),
                Err(e) => return Err(e),
            }
        }
    }

    let gamma = trace_gamma(s);
    let diag = graded_diagonal(s, &gamma);
    let mut jm: BTreeMap<(u8, u8), Matrix<Rational>> = diag
        .iter()
        .map(|(k, o)| Ok((*k, realize_on(o, &module)?)))
        .collect::<Result<_>>()?;
    if tamper {
        let j01 = jm.get_mut(&(0, 1)).expect("J^0_1");
        *j01 = j01.negate_first_nonzero();
    }
    let labelled = jm.iter().map(|((b, a), m)| (j(*b, *a), m.clone())).collect();
    report.absorb("diagonal gl(2)", check(&table_gl(1), &labelled)?);
    let acting: Vec<_> = jm.values().cloned().collect();
    let (initial, closed) = ad_closure(&acting, &qs);
    report.section("span_dimension", json!({"initial": initial, "ad_closed": closed}));
    report.claim("span closed under ad J", initial == closed, closed, initial);
    let want = 2 * (s.dx + s.dy) as usize + 1;
    report.claim("span dimension 2(Δ+Δ′)+1", closed == want, closed, want);

    let trace = &jm[&(0, 0)] + &jm[&(1, 1)];
    let d0 = module.dims()[0];
    let comps = [
        trace.submatrix(0, d0, 0, d0).as_scalar(),
        trace.submatrix(d0, module.dim(), d0, module.dim()).as_scalar(),
    ];
    let top = s.top();
    let printed = graded_diagonal(s, &[r(0), r(0)]);
    let printed_trace = &realize_on(&printed[&(0, 0)], &module)? + &realize_on(&printed[&(1, 1)], &module)?;
    report.section(
        "trace",
        json!({
            "gamma": gamma.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "without_gamma": [
                printed_trace.submatrix(0, d0, 0, d0).as_scalar().map(|c| c.to_string()),
                printed_trace.submatrix(d0, module.dim(), d0, module.dim()).as_scalar().map(|c| c.to_string()),
            ],
        }),
    );
    for (k, (got, want)) in comps.iter().zip(&top).enumerate() {
        let shown = got.as_ref().map_or("not scalar".to_string(), |c| c.to_string());
        report.claim(format!("J^a_a on component {k}"), got.as_ref() == Some(want), shown, want);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::spl21::tensor_q;

    #[test]
    fn one_step_is_q() {
        let s = Shift::new(1, 2, 1, 0).unwrap();
        for a in 0..2u8 {
            assert_eq!(graded_q(&s, &[a], &[]).unwrap(), tensor_q(&r(1), &r(2))[a as usize]);
        }
    }

    #[test]
    fn first_identity_symmetric() {
        let s = Shift::new(0, 0, 2, 0).unwrap();
        assert_eq!(graded_q(&s, &[0, 1], &[]).unwrap(), graded_q(&s, &[1, 0], &[]).unwrap());
    }

    #[test]
    fn maps_between_modules() {
        let s = Shift::new(1, 1, 1, 1).unwrap();
        for a in multi_indices(1) {
            for b in multi_indices(1) {
                assert!(realize_on(&graded_block(&s, &a, &b).unwrap(), &s.module()).is_ok());
            }
        }
    }
}
