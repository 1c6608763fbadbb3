//! Concrete realizations: generators as block operators on explicit modules.

use serde_json::{json, Map, Value};

use crate::algebra::{check, GenLabel, RelationTable, Realized};
use crate::diffop::{BlockOp, DiffOp, Operator};
use crate::error::{Error, Result};
use crate::modspace::{realize_on, DirectSum};
use crate::report::Report;
use crate::scalar::Rational;

pub mod classical;
pub mod deformed;
pub mod graded;
pub mod rmod;
pub mod spl21;
pub mod spl22;

pub use classical::*;
pub use deformed::*;
pub use graded::*;
pub use rmod::*;
pub use spl21::*;
pub use spl22::*;

/// Rational differential operators, the workhorse of the classical sector.
pub type Op = DiffOp<Rational>;

/// Labelled generators together with the module they act on.
#[derive(Clone, Debug)]
pub struct Realization<O: Operator> {
    pub name: String,
    pub gens: Vec<(GenLabel, BlockOp<O>)>,
    pub module: DirectSum<O::Scalar>,
}

impl<O: Operator> Realization<O> {
    pub fn new(name: impl Into<String>, module: DirectSum<O::Scalar>) -> Self {
        Realization {
            name: name.into(),
            gens: Vec::new(),
            module,
        }
    }

    pub fn push(&mut self, label: GenLabel, op: BlockOp<O>) {
        self.gens.push((label, op));
    }

    pub fn get(&self, label: &GenLabel) -> Result<&BlockOp<O>> {
        self.gens
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, o)| o)
            .ok_or_else(|| Error::MissingGenerator(label.to_string()))
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Exact matrices of every generator; fails on the first one that leaves
    /// the module.
    pub fn matrices(&self) -> Result<Realized<O::Scalar>> {
        self.gens
            .iter()
            .map(|(l, o)| Ok((l.clone(), realize_on(o, &self.module)?)))
            .collect()
    }

    /// Matrices in generator order.
    pub fn matrix_list(&self) -> Result<Vec<crate::matrix::Matrix<O::Scalar>>> {
        self.gens.iter().map(|(_, o)| realize_on(o, &self.module)).collect()
    }

    pub fn check(&self, table: &RelationTable<O::Scalar>) -> Result<Report> {
        check(table, &self.matrices()?)
    }

    /// `{"name", "dims", "dimension", "generators": {label: matrix}}`.
    pub fn to_json(&self) -> Result<Value> {
        let gens: Map<String, Value> = self
            .matrices()?
            .iter()
            .map(|(l, m)| (l.to_string(), m.to_json()))
            .collect();
        Ok(json!({
            "name": self.name,
            "dims": self.module.dims(),
            "dimension": self.dim(),
            "generators": gens,
        }))
    }
}

/// Flip the sign of one entry of one realized generator.
pub fn tamper<S: crate::scalar::Scalar>(mats: &mut Realized<S>, label: &GenLabel) {
    if let Some(m) = mats.get_mut(label) {
        *m = m.negate_first_nonzero();
    }
}

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub(crate) fn cst(nvars: usize, c: Rational) -> Op {
    DiffOp::scalar(nvars, c)
}

pub(crate) fn xv(nvars: usize, i: usize) -> Op {
    DiffOp::x(nvars, i)
}

pub(crate) fn dv(nvars: usize, i: usize) -> Op {
    DiffOp::d(nvars, i)
}
