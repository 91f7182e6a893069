//! Graded polynomial rings `k[y_0, ..., y_n]` and exact polynomial arithmetic.

mod monomial;
mod poly;

use std::fmt;
use std::sync::Arc;

pub use monomial::{monomial_compare, Monomial, MonomialOrder, MAX_VARS};
pub(crate) use poly::merge_terms;
pub use poly::{Homogeneity, Polynomial, Term};

use crate::coeff::FieldSpec;
use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    field: FieldSpec,
    vars: Vec<String>,
    order: MonomialOrder,
}

/// A polynomial ring over a [`FieldSpec`] with named variables and a monomial
/// order. Cheap to clone.
#[derive(Clone, Debug)]
pub struct PolyRing(Arc<RingData>);

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: Into<String>>(
        field: FieldSpec,
        vars: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.len() < 2 {
            return Err(Error::InvalidRing("need at least two variables".into()));
        }
        if vars.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!("at most {MAX_VARS} variables")));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::InvalidRing(format!("bad variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Block(k) = order {
            if k == 0 || k >= vars.len() {
                return Err(Error::InvalidRing(format!("block size {k} outside [1, {}]", vars.len() - 1)));
            }
        }
        Ok(PolyRing(Arc::new(RingData { field, vars, order })))
    }

    /// Grevlex ring, the default for every computation.
    pub fn grevlex<S: Into<String>>(field: FieldSpec, vars: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::new(field, vars, MonomialOrder::Grevlex)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.0.field
    }

    pub fn variables(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        if order == self.order() {
            return Ok(self.clone());
        }
        Self::new(*self.field(), self.0.vars.clone(), order)
    }

    pub fn with_field(&self, field: FieldSpec) -> Self {
        PolyRing(Arc::new(RingData { field, vars: self.0.vars.clone(), order: self.0.order }))
    }

    pub fn variable(&self, i: usize) -> Polynomial {
        Polynomial::monomial(self, Monomial::variable(self.nvars(), i), self.field().one())
    }

    pub fn gens(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.variable(i)).collect()
    }

    pub(crate) fn same(&self, other: &PolyRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    /// `Err(RingMismatch)` unless `other` is the same ring.
    pub fn check(&self, other: &PolyRing) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for PolyRing {}

impl fmt::Display for PolyRing {
    /// Job-file spelling, e.g. `GF(9001)[x,y,z]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field(), self.0.vars.join(","))
    }
}
