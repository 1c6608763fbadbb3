//! Polynomial module bases, direct sums, matrix realizations of block
//! operators, kernels, orbit spans and word-span saturation.

use std::collections::VecDeque;

use crate::diffop::{BlockOp, DiffOp, Operator};
use crate::error::{Error, Result};
use crate::matrix::{sparse_from_dense, Matrix, SparseEchelon};
use crate::poly::{Monomial, Poly};
use crate::scalar::{Field, Rational, Scalar};

/// Echelonized polynomial basis: unit leading coefficients, distinct leading
/// monomials, and no element mentions another element's leading monomial.
/// Elements are sorted by increasing leading monomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Basis<S> {
    nvars: usize,
    elements: Vec<Poly<S>>,
}

impl<S: Scalar> Basis<S> {
    /// Basis of monomials; already echelonized.
    pub fn monomials(nvars: usize, exps: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut elements: Vec<Poly<S>> = exps.into_iter().map(|e| Poly::monomial(&e)).collect();
        elements.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
        elements.dedup();
        Basis { nvars, elements }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Poly<S>] {
        &self.elements
    }

    /// Coordinates of `p` and the remainder left after reduction.
    pub fn coords(&self, p: &Poly<S>) -> (Vec<S>, Poly<S>) {
        let mut rest = p.clone();
        let mut out = vec![S::zero(); self.elements.len()];
        for (i, b) in self.elements.iter().enumerate().rev() {
            let lead = b.leading().expect("nonzero element").0;
            let c = rest.coeff(lead);
            if !c.is_zero() {
                rest = &rest - &b.scale(&c);
                out[i] = c;
            }
        }
        (out, rest)
    }

    pub fn contains(&self, p: &Poly<S>) -> bool {
        self.coords(p).1.is_zero()
    }

    /// The element with given coordinates.
    pub fn combine(&self, coords: &[S]) -> Poly<S> {
        let mut acc = Poly::zero(self.nvars);
        for (c, b) in coords.iter().zip(&self.elements) {
            if !c.is_zero() {
                acc = &acc + &b.scale(c);
            }
        }
        acc
    }
}

impl<F: Field> Basis<F> {
    /// Reduced echelon basis of the span of `polys`.
    pub fn span(nvars: usize, polys: impl IntoIterator<Item = Poly<F>>) -> Self {
        let mut b = Basis {
            nvars,
            elements: Vec::new(),
        };
        for p in polys {
            b.push(p);
        }
        b.elements.sort_by(|a, c| a.leading().unwrap().0.cmp(c.leading().unwrap().0));
        b
    }

    fn push(&mut self, p: Poly<F>) {
        let (_, r) = self.coords(&p);
        let Some((lead, c)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) else { return };
        let r = r.scale(&c.inv().expect("nonzero"));
        for e in &mut self.elements {
            let f = e.coeff(&lead);
            if !f.is_zero() {
                *e = &*e - &r.scale(&f);
            }
        }
        self.elements.push(r);
    }

    /// Same span. Reduced echelon form is canonical, so this is equality.
    pub fn same_span(&self, other: &Self) -> bool {
        self == other
    }
}

/// Monomials of total degree ≤ `m` in `nvars` variables.
pub fn basis_p_total<S: Scalar>(m: u32, nvars: usize) -> Basis<S> {
    let mut exps = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, m, &mut cur, &mut exps);
    Basis::monomials(nvars, exps)
}

/// `P(m, M)`: same as [`basis_p_total`].
pub fn basis_p<S: Scalar>(m: u32, nvars: usize) -> Basis<S> {
    basis_p_total(m, nvars)
}

/// `P(m;n)`: `x^i y^j` with `i ≤ m`, `j ≤ n`.
pub fn basis_p_bidegree<S: Scalar>(m: u32, n: u32) -> Basis<S> {
    Basis::monomials(2, (0..=m).flat_map(|i| (0..=n).map(move |j| vec![i, j])))
}

/// `M(m;n) = span{(∂x+∂y)^k x^m y^n : 0 ≤ k ≤ m+n}`.
pub fn basis_m(m: u32, n: u32) -> Basis<Rational> {
    let lower = &DiffOp::d(2, 0) + &DiffOp::d(2, 1);
    let mut p: Poly<Rational> = Poly::monomial(&[m, n]);
    let mut polys = Vec::new();
    for _ in 0..=(m + n) {
        polys.push(p.clone());
        p = lower.apply(&p).expect("two variables");
    }
    Basis::span(2, polys)
}

/// `(x−y)^{2m+n−k} R_k((x+y)/(x−y))` with `R_k = d^k/dt^k (t−1)^{m+n}(t+1)^m`,
/// homogenized with `u = x+y`, `v = x−y`.
pub fn basis_olver(m: u32, n: u32) -> Basis<Rational> {
    let t: Poly<Rational> = Poly::var(1, 0);
    let one = Poly::one(1);
    let mut r = &(&t - &one).pow(m + n) * &(&t + &one).pow(m);
    let top = 2 * m + n;
    let x: Poly<Rational> = Poly::var(2, 0);
    let y: Poly<Rational> = Poly::var(2, 1);
    let (u, v) = (&x + &y, &x - &y);
    let mut polys = Vec::new();
    for k in 0..=top {
        let deg = top - k;
        let mut h = Poly::zero(2);
        for (mono, c) in r.terms() {
            let j = mono.0[0];
            h = &h + &(&u.pow(j) * &v.pow(deg - j)).scale(c);
        }
        polys.push(h);
        r = r.partial(0).expect("one variable");
    }
    Basis::span(2, polys)
}

/// Exact kernel of `op` restricted to the span of `domain`.
pub fn kernel_of<F: Field>(op: &DiffOp<F>, domain: &Basis<F>) -> Result<Basis<F>> {
    let images = domain
        .elements()
        .iter()
        .map(|e| op.apply(e))
        .collect::<Result<Vec<_>>>()?;
    let mut monos: Vec<Monomial> = images.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    monos.sort();
    monos.dedup();
    let a = Matrix::from_fn(monos.len(), images.len(), |i, j| images[j].coeff(&monos[i]));
    let kernel = if monos.is_empty() {
        (0..domain.dim())
            .map(|j| {
                let mut v = vec![F::zero(); domain.dim()];
                v[j] = F::one();
                v
            })
            .collect()
    } else {
        a.nullspace()
    };
    Ok(Basis::span(domain.nvars(), kernel.iter().map(|v| domain.combine(v))))
}

/// Ordered direct sum of bases sharing one variable set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DirectSum<S> {
    comps: Vec<Basis<S>>,
}

impl<S: Scalar> DirectSum<S> {
    pub fn new(comps: Vec<Basis<S>>) -> Self {
        DirectSum { comps }
    }

    pub fn components(&self) -> &[Basis<S>] {
        &self.comps
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.comps.iter().map(Basis::dim).sum()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.comps.iter().map(Basis::dim).collect()
    }

    /// Global index of the first basis vector of each component.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.comps.len());
        let mut acc = 0;
        for c in &self.comps {
            out.push(acc);
            acc += c.dim();
        }
        out
    }

    /// Global coordinate vector of a tuple of polynomials.
    pub fn vector_of(&self, parts: &[Poly<S>]) -> Result<Vec<S>> {
        let mut out = Vec::with_capacity(self.dim());
        for (i, (b, p)) in self.comps.iter().zip(parts).enumerate() {
            let (c, rest) = b.coords(p);
            if !rest.is_zero() {
                return Err(Error::NotInvariant {
                    component: i,
                    index: 0,
                    target: i,
                    remainder: rest.to_string(),
                });
            }
            out.extend(c);
        }
        Ok(out)
    }
}

/// Exact matrix of `op` from `domain` to `codomain`. Fails with the first
/// image that leaves the codomain.
pub fn realize<O: Operator>(
    op: &BlockOp<O>,
    domain: &DirectSum<O::Scalar>,
    codomain: &DirectSum<O::Scalar>,
) -> Result<Matrix<O::Scalar>> {
    if op.size() != domain.len() || op.size() != codomain.len() {
        return Err(Error::DimensionMismatch(format!(
            "block size {} against {} and {} components",
            op.size(),
            domain.len(),
            codomain.len()
        )));
    }
    let (doff, coff) = (domain.offsets(), codomain.offsets());
    let mut mat: Matrix<O::Scalar> = Matrix::zeros(codomain.dim(), domain.dim());
    for (i, j, entry) in op.nonzero_entries() {
        let target = &codomain.components()[i];
        for (k, e) in domain.components()[j].elements().iter().enumerate() {
            let img = entry.apply(e)?;
            if img.is_zero() {
                continue;
            }
            let (c, rest) = target.coords(&img);
            if !rest.is_zero() {
                return Err(Error::NotInvariant {
                    component: j,
                    index: k,
                    target: i,
                    remainder: rest.to_string(),
                });
            }
            for (r, v) in c.into_iter().enumerate() {
                if !v.is_zero() {
                    let cur = mat.get(coff[i] + r, doff[j] + k).clone();
                    mat.set(coff[i] + r, doff[j] + k, cur + v);
                }
            }
        }
    }
    Ok(mat)
}

/// Realization of a block operator on one module.
pub fn realize_on<O: Operator>(op: &BlockOp<O>, module: &DirectSum<O::Scalar>) -> Result<Matrix<O::Scalar>> {
    realize(op, module, module)
}

/// Dimension of the smallest subspace containing `seed` and stable under all `ops`.
pub fn orbit_span<F: Field>(ops: &[Matrix<F>], seed: &[F]) -> usize {
    let mut ech: SparseEchelon<usize, F> = SparseEchelon::new();
    let mut queue = VecDeque::new();
    if ech.insert(sparse_from_dense(seed)) {
        queue.push_back(seed.to_vec());
    }
    while let Some(v) = queue.pop_front() {
        for op in ops {
            let w = op.mat_vec(&v);
            if ech.insert(sparse_from_dense(&w)) {
                queue.push_back(w);
            }
        }
    }
    ech.len()
}

/// [`orbit_span`] starting from block operators.
pub fn orbit_span_ops<O>(ops: &[BlockOp<O>], seed: &[O::Scalar], ds: &DirectSum<O::Scalar>) -> Result<usize>
where
    O: Operator,
    O::Scalar: Field,
{
    let mats = ops.iter().map(|o| realize_on(o, ds)).collect::<Result<Vec<_>>>()?;
    Ok(orbit_span(&mats, seed))
}

/// Growth of the word span, by maximal word length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanGrowth {
    /// `dims[l]`: dimension of the span of words of length ≤ `l`.
    pub dims: Vec<usize>,
    /// `(dim V)²`.
    pub full: usize,
}

impl SpanGrowth {
    pub fn dim(&self) -> usize {
        *self.dims.last().unwrap_or(&0)
    }

    pub fn saturated(&self) -> bool {
        self.dim() == self.full
    }

    /// Word length at which the span stopped growing, if it did.
    pub fn stable_at(&self) -> Option<usize> {
        let n = self.dims.len();
        (n >= 2 && self.dims[n - 1] == self.dims[n - 2]).then_some(n - 2)
    }
}

/// Span of all words of length ≤ `max_len` in the realized generators,
/// identity included. Stops early once a length adds nothing new.
pub fn enveloping_span<F: Field>(gens: &[Matrix<F>], max_len: usize) -> SpanGrowth {
    let n = gens.first().map(Matrix::rows).unwrap_or(0);
    let mut ech: SparseEchelon<usize, F> = SparseEchelon::new();
    let id = Matrix::<F>::identity(n);
    ech.insert(sparse_from_dense(id.entries()));
    let mut frontier = vec![id];
    let mut dims = vec![ech.len()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in gens {
                let p = g * w;
                if ech.insert(sparse_from_dense(p.entries())) {
                    next.push(p);
                }
            }
        }
        dims.push(ech.len());
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    SpanGrowth { dims, full: n * n }
}

/// Dimension of the linear span of some matrices.
pub fn matrix_span_dim<F: Field>(mats: &[Matrix<F>]) -> usize {
    let mut ech: SparseEchelon<usize, F> = SparseEchelon::new();
    for m in mats {
        ech.insert(sparse_from_dense(m.entries()));
    }
    ech.len()
}

/// Span of `seeds` and its closure under `X ↦ [A, X]` for every `A` in
/// `acting`; returns `(initial, closed)` dimensions.
pub fn ad_closure<F: Field>(acting: &[Matrix<F>], seeds: &[Matrix<F>]) -> (usize, usize) {
    let mut ech: SparseEchelon<usize, F> = SparseEchelon::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        if ech.insert(sparse_from_dense(s.entries())) {
            queue.push_back(s.clone());
        }
    }
    let initial = ech.len();
    while let Some(x) = queue.pop_front() {
        for a in acting {
            let c = &(a * &x) - &(&x * a);
            if ech.insert(sparse_from_dense(c.entries())) {
                queue.push_back(c);
            }
        }
    }
    (initial, ech.len())
}

/// [`enveloping_span`] starting from block operators.
pub fn enveloping_span_ops<O>(gens: &[BlockOp<O>], ds: &DirectSum<O::Scalar>, max_len: usize) -> Result<SpanGrowth>
where
    O: Operator,
    O::Scalar: Field,
{
    let mats = gens.iter().map(|o| realize_on(o, ds)).collect::<Result<Vec<_>>>()?;
    Ok(enveloping_span(&mats, max_len))
}

#[cfg(test)]
mod tests {
    use super::*;

    type R = Rational;

    fn d1() -> DiffOp<R> {
        DiffOp::d(1, 0)
    }

    #[test]
    fn dimensions() {
        assert_eq!(basis_p::<R>(2, 2).dim(), 6);
        assert_eq!(basis_p::<R>(0, 3).dim(), 1);
        assert_eq!(basis_p::<R>(3, 1).dim(), 4);
        assert_eq!(basis_m(2, 3).dim(), 6);
        assert_eq!(basis_p_bidegree::<R>(1, 1).dim(), 4);
    }

    #[test]
    fn m11_span() {
        let x: Poly<R> = Poly::var(2, 0);
        let y: Poly<R> = Poly::var(2, 1);
        let want = Basis::span(2, [&x * &y, &x + &y, Poly::one(2)]);
        assert_eq!(basis_m(1, 1), want);
    }

    #[test]
    fn realize_d_on_p2() {
        let ds = DirectSum::new(vec![basis_p::<R>(2, 1)]);
        let m = realize_on(&BlockOp::diag(vec![d1()]), &ds).unwrap();
        assert_eq!(m.get(0, 1), &R::from(1));
        assert_eq!(m.get(1, 2), &R::from(2));
        assert_eq!(m.entries().iter().filter(|v| !v.is_zero()).count(), 2);
    }

    #[test]
    fn not_invariant_witness() {
        let b: Basis<R> = Basis::monomials(1, [vec![0], vec![2]]);
        let ds = DirectSum::new(vec![b]);
        let err = realize_on(&BlockOp::diag(vec![d1()]), &ds).unwrap_err();
        match err {
            Error::NotInvariant { index, remainder, .. } => {
                assert_eq!(index, 1);
                assert_eq!(remainder, "2*x");
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn kernel_of_d() {
        let k = kernel_of(&d1(), &basis_p(2, 1)).unwrap();
        assert_eq!(k, Basis::monomials(1, [vec![0]]));
    }

    #[test]
    fn olver_small() {
        let b = basis_olver(0, 1);
        let want: Basis<R> = Basis::monomials(2, [vec![0, 0], vec![0, 1]]);
        assert_eq!(b, want);
    }

    #[test]
    fn orbit_from_top_of_p3() {
        let ds = DirectSum::new(vec![basis_p::<R>(3, 1)]);
        let m = realize_on(&BlockOp::diag(vec![d1()]), &ds).unwrap();
        let seed: Vec<R> = (0..4).map(|i| R::from((i == 3) as i64)).collect();
        assert_eq!(orbit_span(&[m], &seed), 4);
    }
}
