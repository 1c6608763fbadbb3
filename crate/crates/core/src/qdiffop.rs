//! Finite-difference operators in one variable over `QLaurent`.
//!
//! `D x^n = [n]_q x^{n−1}` and the dilation `(S f)(x) = f(qx)`. On polynomials
//! `S = 1 + (q−1)·xD`, so every operator has a unique normal form
//! `Σ c·x^a D^i` and `S` never needs its own slot. The reordering rule is the
//! q-Leibniz identity `D∘x^a = q^a x^a D + [a]_q x^{a−1}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::diffop::{DiffOp, Operator};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};
use crate::scalar::{qint, QLaurent, Rational, Scalar};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QDiffOp {
    /// `(a, i) ↦ c` for the term `c·x^a D^i`.
    terms: BTreeMap<(u32, u32), QLaurent>,
}

fn qint_u(n: u32) -> QLaurent {
    qint(n as i64).expect("nonnegative")
}

impl QDiffOp {
    pub fn term(c: QLaurent, a: u32, i: u32) -> Self {
        let mut op = QDiffOp::default();
        op.add_term(a, i, c);
        op
    }

    pub fn scalar(c: QLaurent) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::term(QLaurent::one(), 1, 0)
    }

    /// The q-derivative `D_q`.
    pub fn d() -> Self {
        Self::term(QLaurent::one(), 0, 1)
    }

    /// The dilation `S = 1 + (q−1)·xD`.
    pub fn s() -> Self {
        let qm1 = QLaurent::q() - QLaurent::one();
        &Self::scalar(QLaurent::one()) + &Self::term(qm1, 1, 1)
    }

    /// `δ(k) = xD − [k]_q`.
    pub fn delta(k: u32) -> Self {
        &(&Self::x() * &Self::d()) - &Self::scalar(qint_u(k))
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &QLaurent)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, a: u32, i: u32) -> QLaurent {
        self.terms.get(&(a, i)).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, a: u32, i: u32, c: QLaurent) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((a, i)).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&(a, i));
        }
    }

    /// `D^i ∘ x^b` in normal form.
    fn d_pow_times_x_pow(i: u32, b: u32) -> BTreeMap<(u32, u32), QLaurent> {
        let mut cur: BTreeMap<(u32, u32), QLaurent> = BTreeMap::new();
        cur.insert((b, 0), QLaurent::one());
        for _ in 0..i {
            let mut next: BTreeMap<(u32, u32), QLaurent> = BTreeMap::new();
            for ((c, k), coef) in cur {
                // D ∘ x^c D^k = q^c x^c D^{k+1} + [c] x^{c−1} D^k
                let e = next.entry((c, k + 1)).or_default();
                *e += &(&coef * &QLaurent::q_pow(c as i64));
                if c > 0 {
                    let e = next.entry((c - 1, k)).or_default();
                    *e += &(&coef * &qint_u(c));
                }
            }
            next.retain(|_, v| !v.is_zero());
            cur = next;
        }
        cur
    }

    /// `a∘b − s^k·b∘a`.
    pub fn q_bracket(&self, other: &Self, k: i64) -> Self {
        &self.compose(other) - &other.compose(self).scale(&QLaurent::s_pow(k))
    }

    /// `a∘b + s^k·b∘a`.
    pub fn q_antibracket(&self, other: &Self, k: i64) -> Self {
        &self.compose(other) + &other.compose(self).scale(&QLaurent::s_pow(k))
    }

    /// Evaluate at `s = 1`: `D_q → d/dx`.
    pub fn classical_limit(&self) -> DiffOp<Rational> {
        let mut out = DiffOp::zero(1);
        for ((a, i), c) in &self.terms {
            let c = c.eval_at(&Rational::one()).expect("s = 1");
            out = &out + &DiffOp::term(c, Monomial(vec![*a]), Monomial(vec![*i]));
        }
        out
    }

    /// Evaluate coefficients at `s = s0`.
    pub fn eval_coeffs(&self, s0: &Rational) -> Result<BTreeMap<(u32, u32), Rational>> {
        self.terms
            .iter()
            .map(|(k, c)| Ok((*k, c.eval_at(s0)?)))
            .collect()
    }

    /// JSON: `[[a, k, i], "scalar"]` with the dilation power `k` always 0.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|((a, i), c)| json!([[a, 0, i], c.to_string()]))
                .collect(),
        )
    }
}

impl Operator for QDiffOp {
    type Scalar = QLaurent;

    fn zero(_nvars: usize) -> Self {
        QDiffOp::default()
    }

    fn identity(_nvars: usize) -> Self {
        QDiffOp::scalar(QLaurent::one())
    }

    fn nvars(&self) -> usize {
        1
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn compose(&self, other: &Self) -> Self {
        let mut out = QDiffOp::default();
        for ((a, i), c1) in &self.terms {
            for ((b, j), c2) in &other.terms {
                let c12 = c1 * c2;
                for ((c, k), coef) in Self::d_pow_times_x_pow(*i, *b) {
                    out.add_term(a + c, k + j, &c12 * &coef);
                }
            }
        }
        out
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, i), c) in &other.terms {
            out.add_term(*a, *i, c.clone());
        }
        out
    }

    fn scale(&self, c: &QLaurent) -> Self {
        let mut out = QDiffOp::default();
        for ((a, i), v) in &self.terms {
            out.add_term(*a, *i, v * c);
        }
        out
    }

    fn apply(&self, p: &Poly<QLaurent>) -> Result<Poly<QLaurent>> {
        if p.nvars() != 1 {
            return Err(Error::UnsupportedArity {
                expected: 1,
                found: p.nvars(),
            });
        }
        let mut out = Poly::zero(1);
        for ((a, i), c) in &self.terms {
            for (m, v) in p.terms() {
                let n = m.0[0];
                if *i > n {
                    continue;
                }
                let mut f = c * v;
                for j in 0..*i {
                    f = f * qint_u(n - j);
                }
                out.add_term(Monomial(vec![n - i + a]), f);
            }
        }
        Ok(out)
    }
}

/// Free-function forms.
pub fn q_apply(op: &QDiffOp, p: &Poly<QLaurent>) -> Result<Poly<QLaurent>> {
    op.apply(p)
}

pub fn q_compose(a: &QDiffOp, b: &QDiffOp) -> QDiffOp {
    a.compose(b)
}

pub fn q_bracket(a: &QDiffOp, b: &QDiffOp, k: i64) -> QDiffOp {
    a.q_bracket(b, k)
}

pub fn q_antibracket(a: &QDiffOp, b: &QDiffOp, k: i64) -> QDiffOp {
    a.q_antibracket(b, k)
}

impl fmt::Display for QDiffOp {
    /// Terms as `c * x^a S^0 D^i`, zero exponents omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, ((a, i), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let c = c.to_string();
            let c = if c.contains(" + ") { format!("({c})") } else { c };
            let mut parts = Vec::new();
            if *a > 0 {
                parts.push(format!("x^{a}"));
            }
            if *i > 0 {
                parts.push(format!("D^{i}"));
            }
            let body = if parts.is_empty() { "1".to_string() } else { parts.join(" ") };
            write!(f, "{c} * {body}")?;
        }
        Ok(())
    }
}

impl<'b> Add<&'b QDiffOp> for &QDiffOp {
    type Output = QDiffOp;
    fn add(self, rhs: &'b QDiffOp) -> QDiffOp {
        self.plus(rhs)
    }
}

impl<'b> Sub<&'b QDiffOp> for &QDiffOp {
    type Output = QDiffOp;
    fn sub(self, rhs: &'b QDiffOp) -> QDiffOp {
        self.minus(rhs)
    }
}

impl<'b> Mul<&'b QDiffOp> for &QDiffOp {
    type Output = QDiffOp;
    fn mul(self, rhs: &'b QDiffOp) -> QDiffOp {
        self.compose(rhs)
    }
}

impl Neg for &QDiffOp {
    type Output = QDiffOp;
    fn neg(self) -> QDiffOp {
        self.scale(&-QLaurent::one())
    }
}

impl Neg for QDiffOp {
    type Output = QDiffOp;
    fn neg(self) -> QDiffOp {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xk(k: u32) -> Poly<QLaurent> {
        Poly::monomial(&[k])
    }

    #[test]
    fn reordering_rules() {
        let (x, d, s) = (QDiffOp::x(), QDiffOp::d(), QDiffOp::s());
        assert_eq!(&(&d * &x) - &(&x * &d), s);
        assert_eq!(&s * &x, (&x * &s).scale(&QLaurent::q()));
        assert_eq!(&s * &d, (&d * &s).scale(&QLaurent::q_pow(-1)));
    }

    #[test]
    fn action_examples() {
        let d = QDiffOp::d();
        assert_eq!(d.apply(&xk(3)).unwrap(), xk(2).scale(&qint(3).unwrap()));
        assert!(d.apply(&xk(0)).unwrap().is_zero());
        assert_eq!(QDiffOp::s().apply(&xk(2)).unwrap(), xk(2).scale(&QLaurent::q_pow(2)));
    }

    #[test]
    fn bracket_examples() {
        let (x, d, s) = (QDiffOp::x(), QDiffOp::d(), QDiffOp::s());
        let want = &(&x * &d).scale(&(QLaurent::one() - QLaurent::q())) + &s;
        assert_eq!(d.q_bracket(&x, 2), want);
        let a = &x * &d;
        assert_eq!(a.q_antibracket(&a, 0), (&a * &a).scale(&QLaurent::from(2)));
        assert!(s.q_bracket(&s, 0).is_zero());
    }

    #[test]
    fn classical_limit_of_d() {
        let lim = QDiffOp::d().classical_limit();
        assert_eq!(lim, DiffOp::d(1, 0));
        assert_eq!(QDiffOp::s().classical_limit(), DiffOp::scalar(1, Rational::one()));
    }
}
