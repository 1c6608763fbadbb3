//! Normal-ordered differential operators `Σ c·x^α ∂^β` and block matrices of
//! operators.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{var_names, GaugedPoly, Monomial, Poly};
use crate::scalar::{Rational, Scalar};

/// What the module and block machinery needs from an operator type.
pub trait Operator: Clone + PartialEq + fmt::Debug + fmt::Display {
    type Scalar: Scalar;
    fn zero(nvars: usize) -> Self;
    fn identity(nvars: usize) -> Self;
    fn nvars(&self) -> usize;
    fn is_zero(&self) -> bool;
    fn compose(&self, other: &Self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn scale(&self, c: &Self::Scalar) -> Self;
    fn apply(&self, p: &Poly<Self::Scalar>) -> Result<Poly<Self::Scalar>>;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&-Self::Scalar::one()))
    }
    fn commutator(&self, other: &Self) -> Self {
        self.compose(other).minus(&other.compose(self))
    }
    fn anticommutator(&self, other: &Self) -> Self {
        self.compose(other).plus(&other.compose(self))
    }
}

/// Key of a normal-ordered term `x^α ∂^β`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DKey {
    pub x: Monomial,
    pub d: Monomial,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiffOp<S> {
    nvars: usize,
    terms: BTreeMap<DKey, S>,
}

fn falling(n: u32, k: u32) -> i64 {
    (0..k).map(|j| (n - j) as i64).product()
}

fn binom(n: u32, k: u32) -> i64 {
    falling(n, k) / falling(k, k)
}

impl<S: Scalar> DiffOp<S> {
    pub fn term(c: S, x: Monomial, d: Monomial) -> Self {
        assert_eq!(x.nvars(), d.nvars(), "arity");
        let mut op = DiffOp {
            nvars: x.nvars(),
            terms: BTreeMap::new(),
        };
        op.add_term(DKey { x, d }, c);
        op
    }

    pub fn scalar(nvars: usize, c: S) -> Self {
        Self::term(c, Monomial::one(nvars), Monomial::one(nvars))
    }

    /// Multiplication by `x_i`.
    pub fn x(nvars: usize, i: usize) -> Self {
        Self::term(S::one(), Monomial::var(nvars, i), Monomial::one(nvars))
    }

    /// `∂/∂x_i`.
    pub fn d(nvars: usize, i: usize) -> Self {
        Self::term(S::one(), Monomial::one(nvars), Monomial::var(nvars, i))
    }

    /// Multiplication by a polynomial.
    pub fn mul_by(p: &Poly<S>) -> Self {
        let n = p.nvars();
        let mut op = DiffOp::zero(n);
        for (m, c) in p.terms() {
            op.add_term(
                DKey {
                    x: m.clone(),
                    d: Monomial::one(n),
                },
                c.clone(),
            );
        }
        op
    }

    /// Euler operator `Σ x_i ∂_i`.
    pub fn euler(nvars: usize) -> Self {
        (0..nvars).fold(DiffOp::zero(nvars), |acc, i| {
            &acc + &(&DiffOp::x(nvars, i) * &DiffOp::d(nvars, i))
        })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DKey, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &Monomial, d: &Monomial) -> S {
        self.terms
            .get(&DKey {
                x: x.clone(),
                d: d.clone(),
            })
            .cloned()
            .unwrap_or_else(S::zero)
    }

    fn add_term(&mut self, k: DKey, c: S) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k.clone()).or_insert_with(S::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Largest `(x-degree − ∂-degree)` over all terms: the operator raises
    /// total degree by at most this much.
    pub fn degree_shift(&self) -> Option<i64> {
        self.terms
            .keys()
            .map(|k| k.x.degree() as i64 - k.d.degree() as i64)
            .max()
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> DiffOp<T> {
        let mut op = DiffOp::zero(self.nvars);
        for (k, c) in &self.terms {
            op.add_term(k.clone(), f(c));
        }
        op
    }

    /// Copy with the sign of the first term flipped.
    pub fn negate_first_term(&self) -> Self {
        let mut out = self.clone();
        if let Some((_, c)) = out.terms.iter_mut().next() {
            *c = -c.clone();
        }
        out
    }

    /// Swap two variables.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut op = DiffOp::zero(self.nvars);
        for (k, c) in &self.terms {
            let mut k = k.clone();
            k.x.0.swap(i, j);
            k.d.0.swap(i, j);
            op.add_term(k, c.clone());
        }
        op
    }

    /// JSON: `[α, β, "scalar"]` triples.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(k, c)| json!([k.x.0, k.d.0, c.to_string()]))
                .collect(),
        )
    }
}

impl<S: Scalar> Operator for DiffOp<S> {
    type Scalar = S;

    fn zero(nvars: usize) -> Self {
        DiffOp {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    fn identity(nvars: usize) -> Self {
        DiffOp::scalar(nvars, S::one())
    }

    fn nvars(&self) -> usize {
        self.nvars
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Normal-ordered product via the Leibniz rule
    /// `∂^β x^γ = Σ_k C(β,k)·γ!/(γ−k)!·x^{γ−k} ∂^{β−k}`.
    fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "operator arity");
        let n = self.nvars;
        let mut out = DiffOp::zero(n);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let c12 = c1.clone() * c2;
                let bound: Vec<u32> = (0..n).map(|i| k1.d.0[i].min(k2.x.0[i])).collect();
                let mut kv = vec![0u32; n];
                loop {
                    let mut coef = 1i64;
                    for i in 0..n {
                        coef *= binom(k1.d.0[i], kv[i]) * falling(k2.x.0[i], kv[i]);
                    }
                    let x = Monomial((0..n).map(|i| k1.x.0[i] + k2.x.0[i] - kv[i]).collect());
                    let d = Monomial((0..n).map(|i| k1.d.0[i] - kv[i] + k2.d.0[i]).collect());
                    out.add_term(DKey { x, d }, c12.clone() * S::from_i64(coef));
                    // odometer over 0 ≤ kv ≤ bound
                    let mut i = 0;
                    while i < n && kv[i] == bound[i] {
                        kv[i] = 0;
                        i += 1;
                    }
                    if i == n {
                        break;
                    }
                    kv[i] += 1;
                }
            }
        }
        out
    }

    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "operator arity");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    fn scale(&self, c: &S) -> Self {
        let mut out = DiffOp::zero(self.nvars);
        for (k, a) in &self.terms {
            out.add_term(k.clone(), a.clone() * c);
        }
        out
    }

    fn apply(&self, p: &Poly<S>) -> Result<Poly<S>> {
        if p.nvars() != self.nvars {
            return Err(Error::UnknownVariable(format!(
                "operator in {} variable(s) applied to polynomial in {}",
                self.nvars,
                p.nvars()
            )));
        }
        let mut out = Poly::zero(self.nvars);
        for (k, c) in &self.terms {
            for (m, a) in p.terms() {
                let Some(rest) = m.checked_div(&k.d) else { continue };
                let f: i64 = (0..self.nvars).map(|i| falling(m.0[i], k.d.0[i])).product();
                out.add_term(rest.mul(&k.x), c.clone() * a * &S::from_i64(f));
            }
        }
        Ok(out)
    }
}

impl DiffOp<Rational> {
    /// Action on `(x−y)^γ·p`; only two-variable operators are supported.
    pub fn apply_gauged(&self, g: &GaugedPoly) -> Result<GaugedPoly> {
        if self.nvars != 2 {
            return Err(Error::UnsupportedArity {
                expected: 2,
                found: self.nvars,
            });
        }
        let mut acc: Option<GaugedPoly> = None;
        for (k, c) in &self.terms {
            let mut h = g.clone();
            for _ in 0..k.d.0[0] {
                h = h.gauged_partial(0)?;
            }
            for _ in 0..k.d.0[1] {
                h = h.gauged_partial(1)?;
            }
            let h = h.mul_poly(&Poly::term(c.clone(), k.x.clone()));
            acc = Some(match acc {
                None => h,
                Some(a) => a.checked_add(&h).expect("exponents differ by integers"),
            });
        }
        Ok(acc.unwrap_or_else(|| g.scale(&Rational::from(0))))
    }
}

/// Free-function forms.
pub fn apply<O: Operator>(op: &O, p: &Poly<O::Scalar>) -> Result<Poly<O::Scalar>> {
    op.apply(p)
}

pub fn compose<O: Operator>(a: &O, b: &O) -> O {
    a.compose(b)
}

pub fn commutator<O: Operator>(a: &O, b: &O) -> O {
    a.commutator(b)
}

pub fn anticommutator<O: Operator>(a: &O, b: &O) -> O {
    a.anticommutator(b)
}

pub fn apply_gauged(op: &DiffOp<Rational>, g: &GaugedPoly) -> Result<GaugedPoly> {
    op.apply_gauged(g)
}

impl<S: Scalar> fmt::Display for DiffOp<S> {
    /// Terms as `c * x^a y^b Dx^i Dy^j`, zero exponents omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = var_names(self.nvars);
        let dnames: Vec<String> = names.iter().map(|v| format!("D{v}")).collect();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let xs = fmt_power_list(&k.x, &names);
            let ds = fmt_power_list(&k.d, &dnames);
            let body = [xs, ds].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join(" ");
            let body = if body.is_empty() { "1".to_string() } else { body };
            write!(f, "{c} * {body}")?;
        }
        Ok(())
    }
}

fn fmt_power_list(m: &Monomial, names: &[String]) -> String {
    m.0.iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(e, v)| format!("{v}^{e}"))
        .collect::<Vec<_>>()
        .join(" ")
}

impl<'b, S: Scalar> Add<&'b DiffOp<S>> for &DiffOp<S> {
    type Output = DiffOp<S>;
    fn add(self, rhs: &'b DiffOp<S>) -> DiffOp<S> {
        self.plus(rhs)
    }
}

impl<'b, S: Scalar> Sub<&'b DiffOp<S>> for &DiffOp<S> {
    type Output = DiffOp<S>;
    fn sub(self, rhs: &'b DiffOp<S>) -> DiffOp<S> {
        self.minus(rhs)
    }
}

impl<'b, S: Scalar> Mul<&'b DiffOp<S>> for &DiffOp<S> {
    type Output = DiffOp<S>;
    fn mul(self, rhs: &'b DiffOp<S>) -> DiffOp<S> {
        self.compose(rhs)
    }
}

impl<S: Scalar> Add for DiffOp<S> {
    type Output = DiffOp<S>;
    fn add(self, rhs: DiffOp<S>) -> DiffOp<S> {
        self.plus(&rhs)
    }
}

impl<S: Scalar> Sub for DiffOp<S> {
    type Output = DiffOp<S>;
    fn sub(self, rhs: DiffOp<S>) -> DiffOp<S> {
        self.minus(&rhs)
    }
}

impl<S: Scalar> Mul for DiffOp<S> {
    type Output = DiffOp<S>;
    fn mul(self, rhs: DiffOp<S>) -> DiffOp<S> {
        self.compose(&rhs)
    }
}

impl<S: Scalar> Neg for DiffOp<S> {
    type Output = DiffOp<S>;
    fn neg(self) -> DiffOp<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Neg for &DiffOp<S> {
    type Output = DiffOp<S>;
    fn neg(self) -> DiffOp<S> {
        self.scale(&-S::one())
    }
}

// ---------------------------------------------------------------------------
// Block operators

/// `K×K` matrix of operators; entry `(i, j)` maps component `j` to component `i`.
#[derive(Clone, PartialEq, Debug)]
pub struct BlockOp<O> {
    k: usize,
    entries: Vec<O>,
}

impl<O: Operator> BlockOp<O> {
    pub fn zero(k: usize, nvars: usize) -> Self {
        BlockOp {
            k,
            entries: vec![O::zero(nvars); k * k],
        }
    }

    pub fn identity(k: usize, nvars: usize) -> Self {
        Self::diag((0..k).map(|_| O::identity(nvars)).collect())
    }

    pub fn diag(ops: Vec<O>) -> Self {
        let k = ops.len();
        let nvars = ops[0].nvars();
        let mut b = Self::zero(k, nvars);
        for (i, op) in ops.into_iter().enumerate() {
            b.set(i, i, op);
        }
        b
    }

    /// Zero except for entry `(i, j)`.
    pub fn single(k: usize, i: usize, j: usize, op: O) -> Self {
        let mut b = Self::zero(k, op.nvars());
        b.set(i, j, op);
        b
    }

    /// Build from `(row, col, op)` triples.
    pub fn from_entries(k: usize, nvars: usize, items: Vec<(usize, usize, O)>) -> Self {
        let mut b = Self::zero(k, nvars);
        for (i, j, op) in items {
            b.set(i, j, op);
        }
        b
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn nvars(&self) -> usize {
        self.entries[0].nvars()
    }

    pub fn get(&self, i: usize, j: usize) -> &O {
        &self.entries[i * self.k + j]
    }

    pub fn set(&mut self, i: usize, j: usize, op: O) {
        self.entries[i * self.k + j] = op;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(O::is_zero)
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k, "block size");
        let mut out = Self::zero(self.k, self.nvars());
        for i in 0..self.k {
            for j in 0..self.k {
                let mut acc = O::zero(self.nvars());
                for l in 0..self.k {
                    let (a, b) = (self.get(i, l), other.get(l, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.plus(&a.compose(b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        BlockOp {
            k: self.k,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn minus(&self, other: &Self) -> Self {
        BlockOp {
            k: self.k,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.minus(b)).collect(),
        }
    }

    pub fn scale(&self, c: &O::Scalar) -> Self {
        BlockOp {
            k: self.k,
            entries: self.entries.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).minus(&other.compose(self))
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        self.compose(other).plus(&other.compose(self))
    }

    /// Upper-left `r×r` corner.
    pub fn truncate(&self, r: usize) -> Self {
        let mut out = Self::zero(r, self.nvars());
        for i in 0..r {
            for j in 0..r {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&O) -> O) -> Self {
        BlockOp {
            k: self.k,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Nonzero entries as `(row, col, op)`.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &O)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, o)| !o.is_zero())
            .map(move |(n, o)| (n / self.k, n % self.k, o))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type D = DiffOp<Rational>;

    fn x() -> D {
        DiffOp::x(1, 0)
    }
    fn d() -> D {
        DiffOp::d(1, 0)
    }
    fn c(n: i64) -> D {
        DiffOp::scalar(1, Rational::from(n))
    }

    fn xk(k: u32) -> Poly<Rational> {
        Poly::monomial(&[k])
    }

    #[test]
    fn leibniz_examples() {
        assert_eq!(&d() * &x(), &(&x() * &d()) + &c(1));
        assert_eq!((&x() * &d()).to_string(), "1 * x^1 Dx^1");
        let x2d = &(&x() * &x()) * &d();
        let lhs = &(&d() * &x2d) - &(&x2d * &d());
        assert_eq!(lhs, &c(2) * &(&x() * &d()));
        for k in 0..=5 {
            let a = lhs.apply(&xk(k)).unwrap();
            let b = (&d() * &x2d).apply(&xk(k)).unwrap() - (&x2d * &d()).apply(&xk(k)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn apply_examples() {
        // j₊ for m = 2 kills x².
        let jp = &(&(&x() * &x()) * &d()) - &(&c(2) * &x());
        assert!(jp.apply(&xk(2)).unwrap().is_zero());
        assert!(d().apply(&xk(0)).unwrap().is_zero());
        // J⁰₁ = −x(x∂ − 2) on 1 gives 2x.
        let j = -(&x() * &(&(&x() * &d()) - &c(2)));
        assert_eq!(j.apply(&xk(0)).unwrap(), xk(1).scale(&Rational::from(2)));
        assert!(d().apply(&Poly::var(2, 0)).is_err());
    }

    #[test]
    fn sl2_commutator() {
        let m = 2;
        let jp = &(&(&x() * &x()) * &d()) - &(&c(m) * &x());
        let j0 = &(&x() * &d()) - &c(1);
        assert_eq!(jp.commutator(&d()), j0.scale(&Rational::from(-2)));
        assert_eq!(commutator(&d(), &x()), c(1));
    }

    #[test]
    fn block_pauli() {
        let one = c(1);
        let sp = BlockOp::single(2, 0, 1, one.clone());
        let sm = BlockOp::single(2, 1, 0, one);
        assert_eq!(sp.anticommutator(&sm), BlockOp::identity(2, 1));
    }

    #[test]
    fn gauged_multiplication() {
        let g = GaugedPoly::new(Rational::new(1, 2), Poly::one(2)).unwrap();
        let xop: D = DiffOp::x(2, 0);
        let out = xop.apply_gauged(&g).unwrap();
        assert_eq!(out, GaugedPoly::new(Rational::new(1, 2), Poly::var(2, 0)).unwrap());
        let g = GaugedPoly::new(Rational::one(), Poly::one(2)).unwrap();
        let dx: D = DiffOp::d(2, 0);
        let out = dx.apply_gauged(&g).unwrap();
        assert_eq!(out, GaugedPoly::new(Rational::from(0), Poly::one(2)).unwrap());
        assert!(matches!(x().apply_gauged(&g), Err(Error::UnsupportedArity { .. })));
    }
}
