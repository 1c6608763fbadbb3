//! Exact scalars: arbitrary-precision rationals and Laurent polynomials in `s`
//! with `q = s²`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which scalar ring a value lives in. Used in JSON dumps and ring checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Rational,
    LaurentS,
}

impl Ring {
    pub fn name(self) -> &'static str {
        match self {
            Ring::Rational => "rational",
            Ring::LaurentS => "laurent_s",
        }
    }
}

/// Commutative ring of exact scalars.
pub trait Scalar:
    Clone
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + FromStr<Err = Error>
{
    const RING: Ring;
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from(n))
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    /// `s^k`, when the ring has it.
    fn try_s_pow(k: i64) -> Option<Self>;
}

/// Scalars with exact division.
pub trait Field: Scalar {
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;
}

// ---------------------------------------------------------------------------
// Rational

/// Arbitrary-precision fraction in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn pow(&self, k: i32) -> Self {
        Rational(num_traits::Pow::pow(&self.0, k))
    }

    pub fn recip(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(n, d)))
    }
}

macro_rules! rational_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational((self.0).$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$m(&rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$m(&rhs.0))
            }
        }
    };
}
rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl std::ops::Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.0.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl<'b> std::ops::Div<&'b Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &'b Rational) -> Rational {
        assert!(!rhs.0.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl<'a> AddAssign<&'a Rational> for Rational {
    fn add_assign(&mut self, rhs: &'a Rational) {
        self.0 += &rhs.0;
    }
}

impl<'a> SubAssign<&'a Rational> for Rational {
    fn sub_assign(&mut self, rhs: &'a Rational) {
        self.0 -= &rhs.0;
    }
}

impl Scalar for Rational {
    const RING: Ring = Ring::Rational;
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn try_s_pow(k: i64) -> Option<Self> {
        (k == 0).then(Rational::one)
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
}

// ---------------------------------------------------------------------------
// QLaurent

/// Laurent polynomial in `s`; `q = s²`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QLaurent {
    coeffs: BTreeMap<i64, Rational>,
}

impl QLaurent {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·s^k`
    pub fn monomial(c: Rational, k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        QLaurent { coeffs }
    }

    /// `s^k`
    pub fn s_pow(k: i64) -> Self {
        Self::monomial(Rational::one(), k)
    }

    /// `q^k = s^{2k}`
    pub fn q_pow(k: i64) -> Self {
        Self::s_pow(2 * k)
    }

    /// `q` itself.
    pub fn q() -> Self {
        Self::s_pow(2)
    }

    /// Coefficient of `s^k`.
    pub fn coeff(&self, k: i64) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms `(k, c)` in increasing `k`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// The rational value if this is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    fn insert_add(&mut self, k: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(k).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    /// Substitute `s = s0` exactly.
    pub fn eval_at(&self, s0: &Rational) -> Result<Rational> {
        if s0.is_zero() {
            return Err(Error::EvalAtZero);
        }
        let mut acc = Rational::zero();
        for (k, c) in &self.coeffs {
            let k = i32::try_from(*k).expect("exponent out of range");
            acc += &(c * &s0.pow(k));
        }
        Ok(acc)
    }

    /// `s ↦ s⁻¹`.
    pub fn invert_s(&self) -> Self {
        QLaurent {
            coeffs: self.coeffs.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }
}

/// `[n]_q = 1 + q + … + q^{n−1}`.
pub fn qint(n: i64) -> Result<QLaurent> {
    if n < 0 {
        return Err(Error::NegativeQInt(n));
    }
    let mut out = QLaurent::default();
    for j in 0..n {
        out.insert_add(2 * j, &Rational::one());
    }
    Ok(out)
}

/// `s^k`; see [`QLaurent::s_pow`].
pub fn s_pow(k: i64) -> QLaurent {
    QLaurent::s_pow(k)
}

/// Substitute `s = s0`; see [`QLaurent::eval_at`].
pub fn eval_at(p: &QLaurent, s0: &Rational) -> Result<Rational> {
    p.eval_at(s0)
}

impl From<Rational> for QLaurent {
    fn from(c: Rational) -> Self {
        QLaurent::constant(c)
    }
}

impl From<i64> for QLaurent {
    fn from(n: i64) -> Self {
        QLaurent::constant(Rational::from(n))
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *k == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*s^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QLaurent {
    type Err = Error;

    /// Accepts the canonical form and a little more: `q` powers, implicit
    /// coefficients, and `-` between terms.
    fn from_str(src: &str) -> Result<Self> {
        let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut out = QLaurent::default();
        for term in split_terms(&compact) {
            let (sign, body) = match term.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, term.strip_prefix('+').unwrap_or(term)),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {src:?}")));
            }
            let mut coef = Rational::from(sign);
            let mut exp = 0i64;
            for factor in body.split('*') {
                if let Some(rest) = factor.strip_prefix('s').or_else(|| factor.strip_prefix('q')) {
                    let scale = if factor.starts_with('q') { 2 } else { 1 };
                    let e = match rest.strip_prefix('^') {
                        Some(e) => e
                            .trim_matches(|c| c == '(' || c == ')')
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad exponent in {src:?}")))?,
                        None if rest.is_empty() => 1,
                        None => return Err(Error::Parse(format!("bad factor {factor:?}"))),
                    };
                    exp += scale * e;
                } else {
                    coef = coef * factor.parse::<Rational>()?;
                }
            }
            out.insert_add(exp, &coef);
        }
        Ok(out)
    }
}

/// Split at top-level `+`/`-`, keeping signs. A sign directly after `^`, `*`,
/// `(` or another sign belongs to the next factor.
fn split_terms(s: &str) -> Vec<&str> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut start = 0;
    let mut depth = 0i32;
    for i in 0..bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if i > start && depth == 0 && !matches!(bytes[i - 1], b'^' | b'*' | b'(' | b'+' | b'-') => {
                out.push(&s[start..i]);
                start = i;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl Add<&QLaurent> for QLaurent {
    type Output = QLaurent;
    fn add(mut self, rhs: &QLaurent) -> QLaurent {
        self += rhs;
        self
    }
}

impl Add for QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: QLaurent) -> QLaurent {
        self + &rhs
    }
}

impl<'b> Add<&'b QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &'b QLaurent) -> QLaurent {
        self.clone() + rhs
    }
}

impl Sub<&QLaurent> for QLaurent {
    type Output = QLaurent;
    fn sub(mut self, rhs: &QLaurent) -> QLaurent {
        self -= rhs;
        self
    }
}

impl Sub for QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: QLaurent) -> QLaurent {
        self - &rhs
    }
}

impl<'b> Sub<&'b QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &'b QLaurent) -> QLaurent {
        self.clone() - rhs
    }
}

impl<'b> Mul<&'b QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &'b QLaurent) -> QLaurent {
        let mut out = QLaurent::default();
        for (i, a) in &self.coeffs {
            for (j, b) in &rhs.coeffs {
                out.insert_add(i + j, &(a * b));
            }
        }
        out
    }
}

impl Mul<&QLaurent> for QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        &self * rhs
    }
}

impl Mul for QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: QLaurent) -> QLaurent {
        &self * &rhs
    }
}

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            coeffs: self.coeffs.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        -self.clone()
    }
}

impl<'a> AddAssign<&'a QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &'a QLaurent) {
        for (k, c) in &rhs.coeffs {
            self.insert_add(*k, c);
        }
    }
}

impl<'a> SubAssign<&'a QLaurent> for QLaurent {
    fn sub_assign(&mut self, rhs: &'a QLaurent) {
        for (k, c) in &rhs.coeffs {
            self.insert_add(*k, &-c);
        }
    }
}

impl Scalar for QLaurent {
    const RING: Ring = Ring::LaurentS;
    fn zero() -> Self {
        QLaurent::default()
    }
    fn one() -> Self {
        QLaurent::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_rational(r: Rational) -> Self {
        QLaurent::constant(r)
    }
    fn try_s_pow(k: i64) -> Option<Self> {
        Some(QLaurent::s_pow(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rational_canonical() {
        assert_eq!(r(6, -4).to_string(), "-3/2");
        assert_eq!(r(0, 5).to_string(), "0");
        assert_eq!("10/4".parse::<Rational>().unwrap(), r(5, 2));
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    fn qint_values() {
        assert!(qint(0).unwrap().is_zero());
        assert_eq!(qint(1).unwrap(), QLaurent::one());
        assert_eq!(qint(3).unwrap().to_string(), "1 + 1*s^2 + 1*s^4");
        assert_eq!(qint(3).unwrap().eval_at(&r(2, 1)).unwrap(), r(21, 1));
        assert!(matches!(qint(-1), Err(Error::NegativeQInt(-1))));
    }

    #[test]
    fn s_pow_examples() {
        assert_eq!(s_pow(0), QLaurent::one());
        assert_eq!(s_pow(-2), QLaurent::q_pow(-1));
        assert_eq!(&s_pow(3) * &s_pow(-3), QLaurent::one());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(QLaurent::one().eval_at(&r(7, 3)).unwrap(), r(1, 1));
        assert_eq!(s_pow(-2).eval_at(&r(1, 2)).unwrap(), r(4, 1));
        assert!(matches!(s_pow(1).eval_at(&r(0, 1)), Err(Error::EvalAtZero)));
    }

    #[test]
    fn laurent_parse() {
        let p: QLaurent = "1 + 1*s^2 + 1*s^4".parse().unwrap();
        assert_eq!(p, qint(3).unwrap());
        let p: QLaurent = "q^-3".parse().unwrap();
        assert_eq!(p, s_pow(-6));
        let p: QLaurent = "2 - 1/3*s^-1".parse().unwrap();
        assert_eq!(p.coeff(-1), r(-1, 3));
        assert_eq!(p.to_string(), "-1/3*s^-1 + 2");
        assert!("".parse::<QLaurent>().is_err());
        assert!("3*t".parse::<QLaurent>().is_err());
    }
}
