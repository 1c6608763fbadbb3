//! gl(M+1) on P(m,M), its direct sums and products, the sl(2) operators and
//! the Olver-class operators with their gauge equivalence.

use std::collections::BTreeMap;

use super::{cst, dv, rat, xv, Op, Realization};
use crate::algebra::{labels::j, GenLabel, Relation, RelationTable};
use crate::diffop::{BlockOp, DiffOp, Operator};
use crate::error::{Error, Result};
use crate::modspace::{basis_m, basis_olver, basis_p, DirectSum};
use crate::poly::{GaugedPoly, Poly};
use crate::report::Report;
use crate::scalar::{Rational, Scalar};

/// `J^b_a`, keyed by `(b, a)`, acting on `vars` inside an `nvars`-variable
/// ring. Index `k ≥ 1` refers to `vars[k−1]`.
pub fn gl_ops(nvars: usize, vars: &[usize], m: &Rational, gamma: &Rational) -> BTreeMap<(u8, u8), Op> {
    let euler = vars
        .iter()
        .fold(DiffOp::zero(nvars), |acc, &v| &acc + &(&xv(nvars, v) * &dv(nvars, v)));
    let d_minus_m = &euler - &cst(nvars, m.clone());
    let mut out = BTreeMap::new();
    out.insert((0, 0), &d_minus_m + &cst(nvars, gamma.clone()));
    for (k, &vk) in vars.iter().enumerate() {
        let k = (k + 1) as u8;
        out.insert((k, 0), dv(nvars, vk));
        out.insert((0, k), -(&xv(nvars, vk) * &d_minus_m));
        for (l, &vl) in vars.iter().enumerate() {
            let l = (l + 1) as u8;
            let mut op = -(&xv(nvars, vk) * &dv(nvars, vl));
            if k == l {
                op = &op + &cst(nvars, gamma.clone());
            }
            out.insert((l, k), op);
        }
    }
    out
}

fn gl_labels(mm: usize) -> Vec<(u8, u8)> {
    let n = (mm + 1) as u8;
    (0..n).flat_map(|a| (0..n).map(move |b| (b, a))).collect()
}

/// gl(M+1) on P(m, M).
pub fn rep_gl(mm: usize, m: u32, gamma: &Rational) -> Realization<Op> {
    rep_gl_sum(mm, &[m], std::slice::from_ref(gamma)).expect("one component")
}

/// Block-diagonal gl(M+1) on `⊕ P(m_i, M)` with per-component shifts `γ_i`.
pub fn rep_gl_sum(mm: usize, ms: &[u32], gammas: &[Rational]) -> Result<Realization<Op>> {
    if ms.len() != gammas.len() || ms.is_empty() {
        return Err(Error::DimensionMismatch(format!(
            "{} degrees against {} shifts",
            ms.len(),
            gammas.len()
        )));
    }
    let vars: Vec<usize> = (0..mm).collect();
    let comps: Vec<_> = ms
        .iter()
        .zip(gammas)
        .map(|(&m, g)| gl_ops(mm, &vars, &Rational::from(m as i64), g))
        .collect();
    let module = DirectSum::new(ms.iter().map(|&m| basis_p(m, mm)).collect());
    let mut r = Realization::new(format!("gl({})", mm + 1), module);
    for (b, a) in gl_labels(mm) {
        r.push(j(b, a), BlockOp::diag(comps.iter().map(|c| c[&(b, a)].clone()).collect()));
    }
    Ok(r)
}

/// `j₊, j₀, j₋` in some order of use.
#[derive(Clone, Debug, PartialEq)]
pub struct Sl2<O> {
    pub plus: O,
    pub zero: O,
    pub minus: O,
}

impl<O: Operator> Sl2<O> {
    pub fn add(&self, other: &Self) -> Self {
        Sl2 {
            plus: self.plus.plus(&other.plus),
            zero: self.zero.plus(&other.zero),
            minus: self.minus.plus(&other.minus),
        }
    }

    /// `j₀² − ½(j₊j₋ + j₋j₊)`.
    pub fn casimir(&self) -> O {
        self.casimir_with_sign(-1)
    }

    /// `j₀² + sign·½(j₊j₋ + j₋j₊)`.
    pub fn casimir_with_sign(&self, sign: i64) -> O {
        let half = <O::Scalar as Scalar>::from_rational(rat(sign, 2));
        let sym = self.plus.anticommutator(&self.minus);
        self.zero.compose(&self.zero).plus(&sym.scale(&half))
    }
}

/// `j₊ = x²∂ − mx`, `j₀ = x∂ − m/2`, `j₋ = ∂` in variable `var`.
pub fn sl2_ops(nvars: usize, var: usize, m: &Rational) -> Sl2<Op> {
    let (x, d) = (xv(nvars, var), dv(nvars, var));
    let xd = &x * &d;
    Sl2 {
        plus: &(&x * &xd) - &(&x * &cst(nvars, m.clone())),
        zero: &xd - &cst(nvars, m.clone() * rat(1, 2)),
        minus: d,
    }
}

pub fn sl2_labels() -> [GenLabel; 3] {
    ["j+", "j0", "j-"].map(|f| GenLabel::even(f, &[], &[]))
}

/// The sl(2) closure `[j₊, j₋] = −2j₀`, `[j₀, j±] = ±j±` over all ordered pairs.
pub fn table_sl2<S: Scalar>() -> RelationTable<S> {
    let [p, z, m] = sl2_labels();
    let two = S::from_i64(2);
    let mut t = RelationTable::new("sl(2)", vec![p.clone(), z.clone(), m.clone()]);
    for l in [&p, &z, &m] {
        t.push(Relation::comm(l.clone(), l.clone()));
    }
    t.push(Relation::comm(p.clone(), m.clone()).plus(-two.clone(), std::slice::from_ref(&z)));
    t.push(Relation::comm(m.clone(), p.clone()).plus(two, std::slice::from_ref(&z)));
    t.push(Relation::comm(z.clone(), p.clone()).plus(S::one(), std::slice::from_ref(&p)));
    t.push(Relation::comm(p.clone(), z.clone()).plus(-S::one(), std::slice::from_ref(&p)));
    t.push(Relation::comm(z.clone(), m.clone()).plus(-S::one(), std::slice::from_ref(&m)));
    t.push(Relation::comm(m.clone(), z.clone()).plus(S::one(), std::slice::from_ref(&m)));
    t
}

fn push_sl2(r: &mut Realization<Op>, ops: &Sl2<Op>) {
    let [p, z, m] = sl2_labels();
    r.push(p, BlockOp::diag(vec![ops.plus.clone()]));
    r.push(z, BlockOp::diag(vec![ops.zero.clone()]));
    r.push(m, BlockOp::diag(vec![ops.minus.clone()]));
}

/// The fundamental sl(2) operators on P(m).
pub fn rep_sl2(m: u32) -> Realization<Op> {
    let mut r = Realization::new("sl(2)", DirectSum::new(vec![basis_p(m, 1)]));
    push_sl2(&mut r, &sl2_ops(1, 0, &Rational::from(m as i64)));
    r
}

/// Diagonal sl(2) `j(x,m) + j(y,n)`.
pub fn sl2_product_ops(m: u32, n: u32) -> Sl2<Op> {
    sl2_ops(2, 0, &Rational::from(m as i64)).add(&sl2_ops(2, 1, &Rational::from(n as i64)))
}

/// `J^b_a(x,m) + J^b_a(y,n)` on M(m;n), followed by the diagonal sl(2).
pub fn rep_gl_product(m: u32, n: u32) -> Realization<Op> {
    let zero = Rational::from(0);
    let jx = gl_ops(2, &[0], &Rational::from(m as i64), &zero);
    let jy = gl_ops(2, &[1], &Rational::from(n as i64), &zero);
    let mut r = Realization::new("gl(2) product", DirectSum::new(vec![basis_m(m, n)]));
    for (b, a) in gl_labels(1) {
        r.push(j(b, a), BlockOp::diag(vec![&jx[&(b, a)] + &jy[&(b, a)]]));
    }
    push_sl2(&mut r, &sl2_product_ops(m, n));
    r
}

/// `K = (x−y)∂x∂y + n∂x − m∂y`, whose kernel on P(m;n) is M(m;n).
pub fn kernel_operator(m: u32, n: u32) -> Op {
    let (x, y, dx, dy) = (xv(2, 0), xv(2, 1), dv(2, 0), dv(2, 1));
    let r = |k: u32| cst(2, Rational::from(k as i64));
    &(&(&(&x - &y) * &dx) * &dy) + &(&(&r(n) * &dx) - &(&r(m) * &dy))
}

/// The Olver-class operators
/// `j̃₋ = ∂x + ∂y`, `j̃₀ = x∂x + y∂y`, `j̃₊ = x²∂x + y²∂y + (n/2)(x−y)`.
pub fn olver_ops(n: u32) -> Sl2<Op> {
    let (x, y, dx, dy) = (xv(2, 0), xv(2, 1), dv(2, 0), dv(2, 1));
    let half_n = cst(2, rat(n as i64, 2));
    Sl2 {
        plus: &(&(&(&x * &x) * &dx) + &(&(&y * &y) * &dy)) + &(&half_n * &(&x - &y)),
        zero: &(&x * &dx) + &(&y * &dy),
        minus: &dx + &dy,
    }
}

/// The gauge-equivalent form `j(x,m) + j(y,m+n)` on the Olver module.
pub fn rep_olver(m: u32, n: u32) -> Realization<Op> {
    let mut r = Realization::new("olver", DirectSum::new(vec![basis_olver(m, n)]));
    push_sl2(&mut r, &sl2_product_ops(m, m + n));
    r
}

/// `(x−y)^{m+n/2} j̃_ε (x−y)^{−m−n/2} = j_ε(x,m) + j_ε(y,m+n)` tested on
/// every element of M(m;m+n); errors with the first witness.
pub fn olver_gauge_equivalence(m: u32, n: u32, olver: &Sl2<Op>) -> Result<usize> {
    let gamma = -(Rational::from(m as i64) + rat(n as i64, 2));
    let flat = sl2_product_ops(m, m + n);
    let basis = basis_m(m, m + n);
    let mut checked = 0;
    for (name, tilde, plain) in [
        ("j+", &olver.plus, &flat.plus),
        ("j0", &olver.zero, &flat.zero),
        ("j-", &olver.minus, &flat.minus),
    ] {
        for (k, p) in basis.elements().iter().enumerate() {
            let lhs = tilde.apply_gauged(&GaugedPoly::new(gamma.clone(), p.clone())?)?;
            let rhs = GaugedPoly::new(gamma.clone(), plain.apply(p)?)?;
            if lhs != rhs {
                return Err(Error::GaugeMismatch(format!("{name} on basis element {k}: {lhs} vs {rhs}")));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Gauge check plus the module identity `(x−y)^{m+n/2} M̃(m;n) = M(m;m+n)`.
pub fn check_olver_gauge(m: u32, n: u32, tamper: bool) -> Result<Report> {
    let mut olver = olver_ops(n);
    if tamper {
        olver.plus = olver.plus.negate_first_term();
    }
    let mut report = Report::new("olver").with_param("m", m).with_param("n", n);
    match olver_gauge_equivalence(m, n, &olver) {
        Ok(k) => {
            report.relations_total += k;
            report.section("gauge_checks", k);
        }
        Err(Error::GaugeMismatch(w)) => report.claim("gauge equivalence", false, w, "equal"),
        Err(e) => return Err(e),
    }
    let lhs = basis_olver(m, n);
    let rhs = basis_m(m, m + n);
    report.claim(
        format!("span olver({m},{n}) = M({m};{})", m + n),
        lhs.same_span(&rhs),
        lhs.dim(),
        rhs.dim(),
    );
    report.claim("dim olver module", lhs.dim() == (2 * m + n + 1) as usize, lhs.dim(), 2 * m + n + 1);
    let r = rep_olver(m, n);
    let mut mats = r.matrices()?;
    if tamper {
        super::tamper(&mut mats, &sl2_labels()[0]);
    }
    report.absorb("sl2 on olver module", crate::algebra::check(&table_sl2(), &mats)?);
    Ok(report)
}

/// Elements of `P` as owned polynomials, for tests and examples.
pub fn monomial(exps: &[u32]) -> Poly<Rational> {
    Poly::monomial(exps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::table_gl;
    use crate::modspace::kernel_of;
    use crate::modspace::basis_p_bidegree;

    #[test]
    fn gl_example_actions() {
        let ops = gl_ops(1, &[0], &Rational::from(2), &Rational::from(0));
        assert!(ops[&(0, 1)].apply(&monomial(&[2])).unwrap().is_zero());
        assert_eq!(ops[&(0, 0)].apply(&monomial(&[1])).unwrap(), -monomial(&[1]));
        let p = ops[&(0, 1)].apply(&Poly::one(1)).unwrap();
        assert_eq!(p, monomial(&[1]).scale(&Rational::from(2)));
    }

    #[test]
    fn gl3_closure() {
        let r = rep_gl(2, 1, &Rational::from(0));
        let rep = r.check(&table_gl(2)).unwrap();
        assert_eq!(rep.relations_total, 81);
        assert!(rep.pass());
    }

    #[test]
    fn sl2_identities() {
        let ops = sl2_ops(1, 0, &Rational::from(2));
        assert_eq!(ops.plus.commutator(&ops.minus), ops.zero.scale(&Rational::from(-2)));
        assert_eq!(ops.zero.commutator(&ops.plus), ops.plus);
    }

    #[test]
    fn kernel_is_m11() {
        let k = kernel_of(&kernel_operator(1, 1), &basis_p_bidegree(1, 1)).unwrap();
        assert_eq!(k, basis_m(1, 1));
    }

    #[test]
    fn olver_minus_on_sum() {
        let p = &monomial(&[1, 0]) + &monomial(&[0, 1]);
        assert_eq!(olver_ops(1).minus.apply(&p).unwrap(), Poly::constant(2, Rational::from(2)));
        assert_eq!(olver_gauge_equivalence(0, 1, &olver_ops(1)).unwrap(), 6);
    }
}
