//! Abstract relation tables and an exact checker that runs them against
//! realized generator matrices.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{Failure, Report};
use crate::scalar::{QLaurent, Rational, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Grade {
    Even,
    Odd,
}

/// `family^{upper}_{lower}`, e.g. `J^1_0`, `Q_0`, `Qb^1`, `Qb^0_1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GenLabel {
    pub family: String,
    pub upper: Vec<u8>,
    pub lower: Vec<u8>,
    pub grade: Grade,
}

impl GenLabel {
    pub fn new(family: &str, upper: &[u8], lower: &[u8], grade: Grade) -> Self {
        GenLabel {
            family: family.to_string(),
            upper: upper.to_vec(),
            lower: lower.to_vec(),
            grade,
        }
    }

    pub fn even(family: &str, upper: &[u8], lower: &[u8]) -> Self {
        Self::new(family, upper, lower, Grade::Even)
    }

    pub fn odd(family: &str, upper: &[u8], lower: &[u8]) -> Self {
        Self::new(family, upper, lower, Grade::Odd)
    }
}

impl fmt::Display for GenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = |v: &[u8]| v.iter().map(u8::to_string).collect::<String>();
        f.write_str(&self.family)?;
        if !self.upper.is_empty() {
            write!(f, "^{}", idx(&self.upper))?;
        }
        if !self.lower.is_empty() {
            write!(f, "_{}", idx(&self.lower))?;
        }
        Ok(())
    }
}

/// Shorthand labels used by the tables.
pub mod labels {
    use super::GenLabel;

    /// `J^b_a`.
    pub fn j(b: u8, a: u8) -> GenLabel {
        GenLabel::even("J", &[b], &[a])
    }
    /// `J̃^b_a`.
    pub fn jt(b: u8, a: u8) -> GenLabel {
        GenLabel::even("Jt", &[b], &[a])
    }
    pub fn y() -> GenLabel {
        GenLabel::even("Y", &[], &[])
    }
    pub fn t() -> GenLabel {
        GenLabel::even("T", &[], &[])
    }
    /// `Q_a`.
    pub fn q(a: u8) -> GenLabel {
        GenLabel::odd("Q", &[], &[a])
    }
    /// `Q̄^a`.
    pub fn qb(a: u8) -> GenLabel {
        GenLabel::odd("Qb", &[a], &[])
    }
    /// `Q^b_a`.
    pub fn q2(b: u8, a: u8) -> GenLabel {
        GenLabel::odd("Q", &[b], &[a])
    }
    /// `Q̄^b_a`.
    pub fn qb2(b: u8, a: u8) -> GenLabel {
        GenLabel::odd("Qb", &[b], &[a])
    }
    /// `R^b_a`.
    pub fn r(b: u8, a: u8) -> GenLabel {
        GenLabel::odd("R", &[b], &[a])
    }
    /// `R̄^b_a`.
    pub fn rb(b: u8, a: u8) -> GenLabel {
        GenLabel::odd("Rb", &[b], &[a])
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BracketKind {
    Commutator,
    Anticommutator,
}

/// `coef · f₁ f₂ …`; no factors means the identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term<S> {
    pub coef: S,
    pub factors: Vec<GenLabel>,
}

/// `a∘b ∓ factor·b∘a = Σ rhs`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation<S> {
    pub kind: BracketKind,
    pub left: GenLabel,
    pub right: GenLabel,
    pub factor: S,
    /// Printed subscript of a twisted bracket, e.g. `q^-1`.
    pub twist: Option<String>,
    pub rhs: Vec<Term<S>>,
}

impl<S: Scalar> Relation<S> {
    pub fn new(kind: BracketKind, left: GenLabel, right: GenLabel) -> Self {
        Relation {
            kind,
            left,
            right,
            factor: S::one(),
            twist: None,
            rhs: Vec::new(),
        }
    }

    pub fn comm(left: GenLabel, right: GenLabel) -> Self {
        Self::new(BracketKind::Commutator, left, right)
    }

    pub fn anti(left: GenLabel, right: GenLabel) -> Self {
        Self::new(BracketKind::Anticommutator, left, right)
    }

    /// Twist the bracket by `s^k`.
    pub fn twisted(mut self, k: i64) -> Result<Self> {
        self.factor = S::try_s_pow(k).ok_or(Error::RingMismatch {
            expected: "laurent_s",
            found: S::RING.name(),
        })?;
        self.twist = Some(if k % 2 == 0 {
            format!("q^{}", k / 2)
        } else {
            format!("s^{k}")
        });
        Ok(self)
    }

    /// Add `coef · factors` to the right-hand side; zero terms are dropped.
    pub fn plus(mut self, coef: S, factors: &[GenLabel]) -> Self {
        if !coef.is_zero() {
            self.rhs.push(Term {
                coef,
                factors: factors.to_vec(),
            });
        }
        self
    }

    /// Right-hand side with like terms merged.
    pub fn normalized_rhs(&self) -> BTreeMap<Vec<GenLabel>, S> {
        let mut out: BTreeMap<Vec<GenLabel>, S> = BTreeMap::new();
        for t in &self.rhs {
            *out.entry(t.factors.clone()).or_insert_with(S::zero) += &t.coef;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Same bracket and same right-hand side up to term order.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.left == other.left
            && self.right == other.right
            && self.factor == other.factor
            && self.normalized_rhs() == other.normalized_rhs()
    }

    fn labels(&self) -> impl Iterator<Item = &GenLabel> {
        [&self.left, &self.right]
            .into_iter()
            .chain(self.rhs.iter().flat_map(|t| t.factors.iter()))
    }

    pub fn map<T: Scalar>(&self, f: &impl Fn(&S) -> Result<T>) -> Result<Relation<T>> {
        Ok(Relation {
            kind: self.kind,
            left: self.left.clone(),
            right: self.right.clone(),
            factor: f(&self.factor)?,
            twist: self.twist.clone(),
            rhs: self
                .rhs
                .iter()
                .map(|t| {
                    Ok(Term {
                        coef: f(&t.coef)?,
                        factors: t.factors.clone(),
                    })
                })
                .collect::<Result<_>>()?,
        })
    }
}

impl<S: Scalar> fmt::Display for Relation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close) = match self.kind {
            BracketKind::Commutator => ("[", "]"),
            BracketKind::Anticommutator => ("{", "}"),
        };
        write!(f, "{open}{}, {}{close}", self.left, self.right)?;
        if let Some(t) = &self.twist {
            write!(f, "_{{{t}}}")?;
        }
        Ok(())
    }
}

/// Declared generators and their relations, in table order.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationTable<S> {
    pub name: String,
    pub labels: Vec<GenLabel>,
    pub relations: Vec<Relation<S>>,
}

impl<S: Scalar> RelationTable<S> {
    pub fn new(name: impl Into<String>, labels: Vec<GenLabel>) -> Self {
        RelationTable {
            name: name.into(),
            labels,
            relations: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn push(&mut self, rel: Relation<S>) {
        debug_assert!(rel.labels().all(|l| self.labels.contains(l)), "undeclared label in {rel}");
        self.relations.push(rel);
    }

    /// Every relation mentions declared labels only.
    pub fn well_formed(&self) -> bool {
        self.relations
            .iter()
            .all(|r| r.labels().all(|l| self.labels.contains(l)))
    }
}

impl RelationTable<QLaurent> {
    /// Substitute `s = s0` in every factor and coefficient.
    pub fn eval_at(&self, s0: &Rational) -> Result<RelationTable<Rational>> {
        Ok(RelationTable {
            name: self.name.clone(),
            labels: self.labels.clone(),
            relations: self
                .relations
                .iter()
                .map(|r| r.map(&|c: &QLaurent| c.eval_at(s0)))
                .collect::<Result<_>>()?,
        })
    }
}

fn delta<S: Scalar>(a: u8, b: u8) -> S {
    if a == b {
        S::one()
    } else {
        S::zero()
    }
}

fn half<S: Scalar>() -> S {
    S::from_rational(Rational::new(1, 2))
}

const IDX: [u8; 2] = [0, 1];

fn pairs() -> impl Iterator<Item = (u8, u8)> {
    IDX.into_iter().flat_map(|a| IDX.into_iter().map(move |b| (a, b)))
}

fn quads() -> impl Iterator<Item = (u8, u8, u8, u8)> {
    pairs().flat_map(|(a, b)| pairs().map(move |(c, d)| (a, b, c, d)))
}

/// gl(M+1): `[J^b_a, J^d_c] = δ^d_a J^b_c − δ^b_c J^d_a`.
pub fn table_gl<S: Scalar>(m: usize) -> RelationTable<S> {
    use labels::j;
    let n = (m + 1) as u8;
    let idx: Vec<u8> = (0..n).collect();
    let labels = idx.iter().flat_map(|&a| idx.iter().map(move |&b| j(b, a))).collect();
    let mut t = RelationTable::new(format!("gl({})", m + 1), labels);
    for &a in &idx {
        for &b in &idx {
            for &c in &idx {
                for &d in &idx {
                    t.push(
                        Relation::comm(j(b, a), j(d, c))
                            .plus(delta(d, a), &[j(b, c)])
                            .plus(-delta::<S>(b, c), &[j(d, a)]),
                    );
                }
            }
        }
    }
    t
}

fn spl21_labels() -> Vec<GenLabel> {
    use labels::{j, q, qb};
    pairs()
        .map(|(a, b)| j(b, a))
        .chain(IDX.iter().map(|&a| q(a)))
        .chain(IDX.iter().map(|&a| qb(a)))
        .collect()
}

/// spl(2,1) with bosonic `J^b_a`, odd `Q_a` and `Q̄^a`.
pub fn table_spl21<S: Scalar>() -> RelationTable<S> {
    use labels::{j, q, qb};
    let mut t = RelationTable::new("spl(2,1)", spl21_labels());
    for (a, b, c, d) in quads() {
        t.push(
            Relation::comm(j(b, a), j(d, c))
                .plus(delta(d, a), &[j(b, c)])
                .plus(-delta::<S>(b, c), &[j(d, a)]),
        );
    }
    for (a, b) in pairs() {
        for c in IDX {
            t.push(
                Relation::comm(j(b, a), q(c))
                    .plus(-delta::<S>(b, c), &[q(a)])
                    .plus(delta(b, a), &[q(c)]),
            );
        }
    }
    for (a, b) in pairs() {
        for c in IDX {
            t.push(
                Relation::comm(j(b, a), qb(c))
                    .plus(delta(c, a), &[qb(b)])
                    .plus(-delta::<S>(b, a), &[qb(c)]),
            );
        }
    }
    for (a, b) in pairs() {
        t.push(Relation::anti(q(a), qb(b)).plus(S::one(), &[j(b, a)]));
    }
    for (a, b) in pairs() {
        t.push(Relation::anti(q(a), q(b)));
    }
    for (a, b) in pairs() {
        t.push(Relation::anti(qb(a), qb(b)));
    }
    t
}

/// Reading of the second bosonic term in `{Q^b_a, Q̄^d_c}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Spl22Variant {
    /// `δ^d_a J^d_c`, as printed.
    Printed,
    /// `δ^d_a J^b_c`.
    JBc,
    /// `δ^d_a J̃^b_c`.
    TildeBc,
    /// `δ^d_a J̃^d_c`.
    TildeDc,
}

impl Spl22Variant {
    pub const ALL: [Spl22Variant; 4] = [Self::Printed, Self::JBc, Self::TildeBc, Self::TildeDc];

    pub fn name(self) -> &'static str {
        match self {
            Self::Printed => "J^d_c",
            Self::JBc => "J^b_c",
            Self::TildeBc => "Jt^b_c",
            Self::TildeDc => "Jt^d_c",
        }
    }

    fn label(self, b: u8, c: u8, d: u8) -> GenLabel {
        use labels::{j, jt};
        match self {
            Self::Printed => j(d, c),
            Self::JBc => j(b, c),
            Self::TildeBc => jt(b, c),
            Self::TildeDc => jt(d, c),
        }
    }
}

/// spl(2,2): two commuting sl(2) copies `J`, `J̃`, central `Y`, odd
/// `Q^b_a`, `Q̄^b_a`.
pub fn table_spl22<S: Scalar>(variant: Spl22Variant) -> RelationTable<S> {
    use labels::{j, jt, q2, qb2, y};
    let labels = pairs()
        .map(|(a, b)| j(b, a))
        .chain(pairs().map(|(a, b)| jt(b, a)))
        .chain([y()])
        .chain(pairs().map(|(a, b)| q2(b, a)))
        .chain(pairs().map(|(a, b)| qb2(b, a)))
        .collect();
    let mut t = RelationTable::new(format!("spl(2,2) [{}]", variant.name()), labels);
    let h = half::<S>;
    for (a, b, c, d) in quads() {
        t.push(
            Relation::comm(j(b, a), j(d, c))
                .plus(delta(d, a), &[j(b, c)])
                .plus(-delta::<S>(b, c), &[j(d, a)]),
        );
    }
    for (a, b, c, d) in quads() {
        t.push(
            Relation::comm(jt(b, a), jt(d, c))
                .plus(delta(d, a), &[jt(b, c)])
                .plus(-delta::<S>(b, c), &[jt(d, a)]),
        );
    }
    for (a, b, c, d) in quads() {
        t.push(Relation::comm(j(b, a), jt(d, c)));
    }
    for (a, b) in pairs() {
        t.push(Relation::comm(j(b, a), y()));
    }
    for (a, b) in pairs() {
        t.push(Relation::comm(jt(b, a), y()));
    }
    for (a, b, c, d) in quads() {
        t.push(
            Relation::comm(j(b, a), q2(d, c))
                .plus(-delta::<S>(b, c), &[q2(d, a)])
                .plus(h() * delta::<S>(b, a), &[q2(d, c)]),
        );
    }
    for (a, b, c, d) in quads() {
        t.push(
            Relation::comm(j(b, a), qb2(d, c))
                .plus(delta(d, a), &[qb2(b, c)])
                .plus(-(h() * delta::<S>(b, a)), &[qb2(d, c)]),
        );
    }
    for (a, b, c, d) in quads() {
        t.push(
            Relation::comm(jt(b, a), q2(d, c))
                .plus(delta(d, a), &[q2(b, c)])
                .plus(-(h() * delta::<S>(b, a)), &[q2(d, c)]),
        );
    }
    for (a, b, c, d) in quads() {
        t.push(
            Relation::comm(jt(b, a), qb2(d, c))
                .plus(-delta::<S>(b, c), &[qb2(d, a)])
                .plus(h() * delta::<S>(b, a), &[qb2(d, c)]),
        );
    }
    for (a, b, c, d) in quads() {
        t.push(
            Relation::anti(q2(b, a), qb2(d, c))
                .plus(delta(b, c), &[j(d, a)])
                .plus(delta(d, a), &[variant.label(b, c, d)])
                .plus(h() * delta::<S>(d, a) * delta::<S>(b, c), &[y()]),
        );
    }
    for (a, b, c, d) in quads() {
        t.push(Relation::anti(q2(b, a), q2(d, c)));
    }
    for (a, b, c, d) in quads() {
        t.push(Relation::anti(qb2(b, a), qb2(d, c)));
    }
    t
}

/// Which deformed table to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QTable {
    /// Exponents and prefactors exactly as printed.
    Printed,
    /// The consistent reading satisfied by the explicit realizations.
    Corrected,
}

/// Quommutator-deformed spl(2,1). `J^ν_μ` stands for `J_μ^ν`.
pub fn table_qspl21(which: QTable) -> Result<RelationTable<QLaurent>> {
    use labels::{j, q, qb};
    let name = match which {
        QTable::Printed => "U_q spl(2,1) [printed]",
        QTable::Corrected => "U_q spl(2,1) [corrected]",
    };
    let mut t = RelationTable::new(name, spl21_labels());
    let i = |k: u8| k as i64;
    let sp = QLaurent::s_pow;
    let d = |a: u8, b: u8| delta::<QLaurent>(a, b);
    let fixed = which == QTable::Corrected;
    let qm1 = QLaurent::q() - QLaurent::one();
    for (mu, nu) in pairs() {
        for (al, be) in pairs() {
            let s = i(nu) + i(al) - i(mu) - i(be);
            let r = (i(nu) - i(be)) * (i(mu) - i(al));
            let mask = d(al, nu) * d(mu, be) * (QLaurent::one() - d(mu, nu) * d(al, be));
            let (c1, c2, cq) = if fixed {
                (
                    sp(-2 * i(mu)),
                    sp(2 * (i(nu) - i(be) - i(mu))),
                    &qm1 * &sp(-4 * i(mu)) * QLaurent::from(i(nu) - i(mu)),
                )
            } else {
                (sp(s - r - 1), sp(s - r - 1) * sp(2 * r), &qm1 * &sp(-4))
            };
            let quad = &cq * &mask;
            t.push(
                Relation::comm(j(nu, mu), j(be, al))
                    .twisted(2 * s)?
                    .plus(c1 * d(mu, be), &[j(nu, al)])
                    .plus(-(c2 * d(al, nu)), &[j(be, mu)])
                    .plus(quad.clone(), &[q(0), qb(0)])
                    .plus(quad, &[q(1), qb(1)]),
            );
        }
    }
    // [J_μ^ν, Q_α]_{q^e} = q^{(e−1)/2}(δ_μ^ν Q_α − δ_α^ν Q_μ)
    for (mu, nu) in pairs() {
        for al in IDX {
            let e = if fixed { i(al) - i(mu) } else { i(al) - i(nu) };
            t.push(
                Relation::comm(j(nu, mu), q(al))
                    .twisted(2 * e)?
                    .plus(sp(e - 1) * d(mu, nu), &[q(al)])
                    .plus(-(sp(e - 1) * d(al, nu)), &[q(mu)]),
            );
        }
    }
    // [J_μ^ν, Q̄^α]_{q^e} = q^{(e−1)/2}(δ^α_μ Q̄^ν − δ_μ^ν Q̄^α)
    for (mu, nu) in pairs() {
        for al in IDX {
            let e = if fixed { i(nu) - i(al) } else { i(mu) - i(al) };
            t.push(
                Relation::comm(j(nu, mu), qb(al))
                    .twisted(2 * e)?
                    .plus(sp(e - 1) * d(al, mu), &[qb(nu)])
                    .plus(-(sp(e - 1) * d(mu, nu)), &[qb(al)]),
            );
        }
    }
    for (mu, nu) in pairs() {
        t.push(Relation::anti(q(mu), qb(nu)).plus(QLaurent::one(), &[j(nu, mu)]));
    }
    for (mu, nu) in pairs() {
        t.push(Relation::anti(q(mu), q(nu)).twisted(2 * (i(nu) - i(mu)))?);
    }
    for (mu, nu) in pairs() {
        let k = if fixed { i(mu) - i(nu) } else { i(nu) - i(mu) };
        t.push(Relation::anti(qb(mu), qb(nu)).twisted(2 * k)?);
    }
    Ok(t)
}

/// Realized generators, keyed by label.
pub type Realized<S> = BTreeMap<GenLabel, Matrix<S>>;

/// Per-relation outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome<S> {
    pub relation: String,
    /// First differing entry with both values.
    pub witness: Option<(usize, usize, S, S)>,
}

impl<S: Scalar> Outcome<S> {
    pub fn pass(&self) -> bool {
        self.witness.is_none()
    }

    pub fn failure(&self) -> Option<Failure> {
        self.witness.as_ref().map(|(i, j, l, r)| Failure {
            relation: self.relation.clone(),
            entry: [*i, *j],
            lhs: l.to_string(),
            rhs: r.to_string(),
        })
    }
}

fn lookup<'a, S>(mats: &'a Realized<S>, l: &GenLabel) -> Result<&'a Matrix<S>> {
    mats.get(l).ok_or_else(|| Error::MissingGenerator(l.to_string()))
}

/// Both sides of one relation as matrices.
pub fn sides<S: Scalar>(rel: &Relation<S>, mats: &Realized<S>) -> Result<(Matrix<S>, Matrix<S>)> {
    let a = lookup(mats, &rel.left)?;
    let b = lookup(mats, &rel.right)?;
    let n = a.rows();
    for m in [a, b] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}: {}x{} against {n}x{n}",
                rel,
                m.rows(),
                m.cols()
            )));
        }
    }
    let ba = (b * a).scale(&rel.factor);
    let lhs = match rel.kind {
        BracketKind::Commutator => &(a * b) - &ba,
        BracketKind::Anticommutator => &(a * b) + &ba,
    };
    let mut rhs = Matrix::zeros(n, n);
    for term in &rel.rhs {
        let mut prod = Matrix::scalar(n, term.coef.clone());
        for f in &term.factors {
            let m = lookup(mats, f)?;
            if m.rows() != n {
                return Err(Error::DimensionMismatch(format!("{f}: {} rows against {n}", m.rows())));
            }
            prod = &prod * m;
        }
        rhs = &rhs + &prod;
    }
    Ok((lhs, rhs))
}

/// Evaluate every relation in table order.
pub fn check_outcomes<S: Scalar>(table: &RelationTable<S>, mats: &Realized<S>) -> Result<Vec<Outcome<S>>> {
    table
        .relations
        .iter()
        .map(|rel| {
            let (lhs, rhs) = sides(rel, mats)?;
            let witness = lhs
                .first_diff(&rhs)
                .map(|(i, j)| (i, j, lhs.get(i, j).clone(), rhs.get(i, j).clone()));
            Ok(Outcome {
                relation: rel.to_string(),
                witness,
            })
        })
        .collect()
}

/// Run `table` against `mats`, one report entry per relation.
pub fn check<S: Scalar>(table: &RelationTable<S>, mats: &Realized<S>) -> Result<Report> {
    let mut report = Report::new(table.name.clone());
    for o in check_outcomes(table, mats)? {
        report.record(o.failure());
    }
    Ok(report)
}

/// Relation-by-relation comparison of two tables; names of the mismatches.
pub fn compare_tables<S: Scalar>(a: &RelationTable<S>, b: &RelationTable<S>) -> Vec<String> {
    let mut out: Vec<String> = a
        .relations
        .iter()
        .zip(&b.relations)
        .filter(|(x, y)| !x.equivalent(y))
        .map(|(x, _)| x.to_string())
        .collect();
    if a.len() != b.len() {
        out.push(format!("relation count {} vs {}", a.len(), b.len()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::labels::*;
    use super::*;

    type R = Rational;

    #[test]
    fn gl_counts() {
        assert_eq!(table_gl::<R>(1).len(), 16);
        assert_eq!(table_gl::<R>(2).len(), 81);
        assert!(table_gl::<R>(3).well_formed());
    }

    #[test]
    fn gl2_example() {
        let t = table_gl::<R>(1);
        let rel = t
            .relations
            .iter()
            .find(|r| r.left == j(0, 1) && r.right == j(1, 0))
            .unwrap();
        let want: BTreeMap<_, _> = [(vec![j(0, 0)], R::one()), (vec![j(1, 1)], -R::one())].into();
        assert_eq!(rel.normalized_rhs(), want);
        let self_rel = t.relations.iter().find(|r| r.left == j(0, 0) && r.right == j(0, 0)).unwrap();
        assert!(self_rel.normalized_rhs().is_empty());
    }

    #[test]
    fn spl21_examples() {
        let t = table_spl21::<R>();
        assert_eq!(t.len(), 44);
        let find = |l: GenLabel, r: GenLabel| t.relations.iter().find(|x| x.left == l && x.right == r).unwrap();
        let rel = find(q(0), qb(1));
        assert_eq!(rel.normalized_rhs(), [(vec![j(1, 0)], R::one())].into());
        assert!(find(q(0), q(0)).normalized_rhs().is_empty());
        assert!(find(j(0, 0), qb(0)).normalized_rhs().is_empty());
    }

    #[test]
    fn qspl21_examples() {
        let t = table_qspl21(QTable::Printed).unwrap();
        let rel = t.relations.iter().find(|x| x.left == q(0) && x.right == q(1)).unwrap();
        assert_eq!(rel.factor, QLaurent::q());
        assert_eq!(rel.to_string(), "{Q_0, Q_1}_{q^1}");
        let jj = t
            .relations
            .iter()
            .find(|x| x.left == j(0, 0) && x.right == j(1, 1))
            .unwrap();
        assert!(jj.normalized_rhs().is_empty());
    }

    #[test]
    fn deformed_tables_degenerate_at_one() {
        let classical = table_spl21::<R>();
        for which in [QTable::Printed, QTable::Corrected] {
            let t = table_qspl21(which).unwrap().eval_at(&R::one()).unwrap();
            assert!(compare_tables(&t, &classical).is_empty(), "{which:?}");
        }
    }

    #[test]
    fn spl22_count() {
        assert_eq!(table_spl22::<R>(Spl22Variant::Printed).len(), 168);
    }

    #[test]
    fn rational_table_rejects_twist() {
        let r: Result<Relation<R>> = Relation::comm(j(0, 0), j(1, 1)).twisted(2);
        assert!(matches!(r, Err(Error::RingMismatch { .. })));
    }
}
