//! Multivariate polynomials and gauged polynomials `(x−y)^γ·p`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{QLaurent, Rational, Scalar};

/// Exponent vector ordered graded-lexicographically, first variable largest.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` if every exponent is large enough.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Variable names: `x`, `x y`, then `x1 … xM`.
pub fn var_names(nvars: usize) -> Vec<String> {
    match nvars {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        n => (1..=n).map(|i| format!("x{i}")).collect(),
    }
}

/// Index of a named variable.
pub fn var_index(nvars: usize, name: &str) -> Result<usize> {
    var_names(nvars)
        .iter()
        .position(|v| v == name)
        .ok_or_else(|| Error::UnknownVariable(name.to_string()))
}

pub(crate) fn fmt_monomial(m: &Monomial, names: &[String], sep: &str) -> String {
    let parts: Vec<String> = m
        .0
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    parts.join(sep)
}

/// Polynomial in `nvars` variables; no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<S> {
    nvars: usize,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, S::one())
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(S::one(), Monomial::var(nvars, i))
    }

    pub fn term(c: S, m: Monomial) -> Self {
        let mut p = Poly::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    /// `x^e` from an exponent slice.
    pub fn monomial(exps: &[u32]) -> Self {
        Self::term(S::one(), Monomial(exps.to_vec()))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// Largest monomial with its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &S)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in one variable.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        assert_eq!(m.nvars(), self.nvars, "monomial arity");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    /// Multiply by a monomial.
    pub fn shift(&self, m: &Monomial) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Poly::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact partial derivative in variable `var`.
    pub fn partial(&self, var: usize) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::UnknownVariable(format!("variable index {var}")));
        }
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] -= 1;
            out.add_term(m2, c.clone() * S::from_i64(e as i64));
        }
        Ok(out)
    }

    /// Partial derivative by variable name.
    pub fn partial_named(&self, name: &str) -> Result<Self> {
        self.partial(var_index(self.nvars, name)?)
    }

    /// Substitute `x_j = values[j]`.
    pub fn eval(&self, values: &[S]) -> S {
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, v) in m.0.iter().zip(values) {
                for _ in 0..*e {
                    t = t * v;
                }
            }
            acc += &t;
        }
        acc
    }

    /// Apply `f` to every coefficient.
    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// JSON: `[[exponents], "scalar"]` pairs.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| json!([m.0, c.to_string()]))
                .collect(),
        )
    }
}

impl Poly<QLaurent> {
    /// `x ↦ qx`: scales the coefficient of `x^k` by `q^k`.
    pub fn q_dilate(&self) -> Result<Self> {
        if self.nvars != 1 {
            return Err(Error::UnsupportedArity {
                expected: 1,
                found: self.nvars,
            });
        }
        let mut out = Poly::zero(1);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * &QLaurent::q_pow(m.0[0] as i64));
        }
        Ok(out)
    }
}

/// Free-function form of [`Poly::partial`].
pub fn partial<S: Scalar>(p: &Poly<S>, var: usize) -> Result<Poly<S>> {
    p.partial(var)
}

/// Free-function form of [`Poly::q_dilate`].
pub fn q_dilate(p: &Poly<QLaurent>) -> Result<Poly<QLaurent>> {
    p.q_dilate()
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = var_names(self.nvars);
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mono = fmt_monomial(m, &names, "*");
            let coef = c.to_string();
            let coef = if coef.contains(" + ") { format!("({coef})") } else { coef };
            match (mono.is_empty(), coef.as_str()) {
                (true, _) => f.write_str(&coef)?,
                (false, "1") => f.write_str(&mono)?,
                (false, "-1") => write!(f, "-{mono}")?,
                (false, _) => write!(f, "{coef}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl<'b, S: Scalar> Add<&'b Poly<S>> for &Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: &'b Poly<S>) -> Poly<S> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'b, S: Scalar> Sub<&'b Poly<S>> for &Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: &'b Poly<S>) -> Poly<S> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'b, S: Scalar> Mul<&'b Poly<S>> for &Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: &'b Poly<S>) -> Poly<S> {
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2);
            }
        }
        out
    }
}

impl<S: Scalar> Add for Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: Poly<S>) -> Poly<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: Poly<S>) -> Poly<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: Poly<S>) -> Poly<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        self.scale(&-S::one())
    }
}

// ---------------------------------------------------------------------------
// Gauged polynomials

/// `(x−y)^gamma · body` in the two variables `x, y`. The power of `(x−y)` is
/// never expanded, so `gamma` may be any rational.
#[derive(Clone, Debug)]
pub struct GaugedPoly {
    pub gamma: Rational,
    pub body: Poly<Rational>,
}

fn x_minus_y() -> Poly<Rational> {
    &Poly::var(2, 0) - &Poly::var(2, 1)
}

impl GaugedPoly {
    pub fn new(gamma: Rational, body: Poly<Rational>) -> Result<Self> {
        if body.nvars() != 2 {
            return Err(Error::UnsupportedArity {
                expected: 2,
                found: body.nvars(),
            });
        }
        Ok(GaugedPoly { gamma, body })
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Rewrite with exponent `gamma − k`, multiplying the body by `(x−y)^k`.
    pub fn lowered(&self, k: u32) -> GaugedPoly {
        GaugedPoly {
            gamma: &self.gamma - &Rational::from(k as i64),
            body: &self.body * &x_minus_y().pow(k),
        }
    }

    /// Bring two gauged polynomials to a common exponent. `None` when the
    /// exponents do not differ by an integer.
    fn align(a: &GaugedPoly, b: &GaugedPoly) -> Option<(GaugedPoly, GaugedPoly)> {
        let d = &a.gamma - &b.gamma;
        let k = d.to_i64()?;
        Some(match k {
            k if k >= 0 => (a.lowered(k as u32), b.clone()),
            k => (a.clone(), b.lowered((-k) as u32)),
        })
    }

    /// Sum; `None` when the exponents are incommensurable.
    pub fn checked_add(&self, other: &GaugedPoly) -> Option<GaugedPoly> {
        if other.is_zero() {
            return Some(self.clone());
        }
        if self.is_zero() {
            return Some(other.clone());
        }
        let (a, b) = Self::align(self, other)?;
        Some(GaugedPoly {
            gamma: a.gamma,
            body: &a.body + &b.body,
        })
    }

    pub fn scale(&self, c: &Rational) -> GaugedPoly {
        GaugedPoly {
            gamma: self.gamma.clone(),
            body: self.body.scale(c),
        }
    }

    pub fn mul_poly(&self, p: &Poly<Rational>) -> GaugedPoly {
        GaugedPoly {
            gamma: self.gamma.clone(),
            body: &self.body * p,
        }
    }

    /// Derivative in `x` (`var = 0`) or `y` (`var = 1`); the exponent drops by one.
    pub fn gauged_partial(&self, var: usize) -> Result<GaugedPoly> {
        let sign = match var {
            0 => Rational::one(),
            1 => -Rational::one(),
            _ => return Err(Error::UnknownVariable(format!("variable index {var}"))),
        };
        let body = &self.body.scale(&(&sign * &self.gamma)) + &(&x_minus_y() * &self.body.partial(var)?);
        Ok(GaugedPoly {
            gamma: &self.gamma - &Rational::one(),
            body,
        })
    }
}

impl PartialEq for GaugedPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        match Self::align(self, other) {
            Some((a, b)) => a.body == b.body,
            None => false,
        }
    }
}

impl fmt::Display for GaugedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x - y)^({}) * ({})", self.gamma, self.body)
    }
}

/// Free-function form of [`GaugedPoly::gauged_partial`].
pub fn gauged_partial(g: &GaugedPoly, var: usize) -> Result<GaugedPoly> {
    g.gauged_partial(var)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<Rational>;

    fn x() -> P {
        Poly::var(2, 0)
    }
    fn y() -> P {
        Poly::var(2, 1)
    }
    fn c(n: i64) -> P {
        Poly::constant(2, Rational::from(n))
    }

    #[test]
    fn partial_examples() {
        let p = &(&x() * &x()) * &y();
        assert_eq!(p.partial(0).unwrap(), &c(2) * &(&x() * &y()));
        assert!(c(1).partial(0).unwrap().is_zero());
        let p = &(&x() * &x()) + &(&c(3) * &(&y() * &y()));
        assert_eq!(p.partial(1).unwrap(), &c(6) * &y());
        assert!(matches!(p.partial(2), Err(Error::UnknownVariable(_))));
        assert!(p.partial_named("z").is_err());
    }

    #[test]
    fn grlex_leading() {
        let p = &(&x() + &(&y() * &y())) + &c(1);
        assert_eq!(p.leading().unwrap().0, &Monomial(vec![0, 2]));
        let p = &x() + &y();
        assert_eq!(p.leading().unwrap().0, &Monomial(vec![1, 0]));
    }

    #[test]
    fn display_form() {
        let p = &(&(&x() * &x()) * &y()).scale(&Rational::new(3, 2)) + &c(1);
        assert_eq!(p.to_string(), "3/2*x^2*y + 1");
        assert_eq!((-&x()).to_string(), "-x");
    }

    #[test]
    fn q_dilate_examples() {
        let x: Poly<QLaurent> = Poly::var(1, 0);
        let x3 = x.pow(3);
        assert_eq!(x3.q_dilate().unwrap(), x3.scale(&QLaurent::q_pow(3)));
        assert_eq!(Poly::<QLaurent>::one(1).q_dilate().unwrap(), Poly::one(1));
        let p = &x.pow(2) + &x;
        let want = &x.pow(2).scale(&QLaurent::q_pow(2)) + &x.scale(&QLaurent::q());
        assert_eq!(p.q_dilate().unwrap(), want);
        assert!(Poly::<QLaurent>::var(2, 0).q_dilate().is_err());
    }

    #[test]
    fn gauged_examples() {
        let g = GaugedPoly::new(Rational::one(), c(1)).unwrap();
        let d = g.gauged_partial(0).unwrap();
        assert_eq!(d, GaugedPoly::new(Rational::zero(), c(1)).unwrap());
        let g = GaugedPoly::new(Rational::new(1, 2), c(1)).unwrap();
        let d = g.gauged_partial(1).unwrap();
        assert_eq!(d.gamma, Rational::new(-1, 2));
        assert_eq!(d.body, c(1).scale(&Rational::new(-1, 2)));
        // γ = 0 reduces to the ordinary derivative.
        let p = &(&x() * &x()) * &y();
        let g = GaugedPoly::new(Rational::zero(), p.clone()).unwrap();
        let want = GaugedPoly::new(Rational::zero(), p.partial(0).unwrap()).unwrap();
        assert_eq!(g.gauged_partial(0).unwrap(), want);
    }
}
