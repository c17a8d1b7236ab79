//! Algebras given by named structure-constant tables.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor3;
use crate::vector::Vector;

/// Catalog of product names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpName {
    /// `x o y`
    Circ,
    /// `[x, y]`
    Bracket,
    /// `x |> y`
    Rtri,
    /// `x <| y`
    Ltri,
    /// `x . y` of the vertical post-Lie algebra
    Bullet,
    /// `x * y` of the opposite post-Lie algebra
    Star,
    /// south-east arrow of a pre-pp-post-Lie algebra
    Se,
    /// north-east arrow
    Ne,
    /// south-west arrow
    Sw,
    /// north-west arrow
    Nw,
    /// the pre-Lie product of a pre-pp-post-Lie algebra
    Dot,
}

impl OpName {
    pub const ALL: [OpName; 11] = [
        OpName::Circ,
        OpName::Bracket,
        OpName::Rtri,
        OpName::Ltri,
        OpName::Bullet,
        OpName::Star,
        OpName::Se,
        OpName::Ne,
        OpName::Sw,
        OpName::Nw,
        OpName::Dot,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OpName::Circ => "circ",
            OpName::Bracket => "bracket",
            OpName::Rtri => "rtri",
            OpName::Ltri => "ltri",
            OpName::Bullet => "bullet",
            OpName::Star => "star",
            OpName::Se => "se",
            OpName::Ne => "ne",
            OpName::Sw => "sw",
            OpName::Nw => "nw",
            OpName::Dot => "dot",
        }
    }
}

impl fmt::Display for OpName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OpName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        OpName::ALL
            .into_iter()
            .find(|op| op.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown operation `{s}`")))
    }
}

/// A finite-dimensional algebra: a basis plus named products on it.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub field: Field,
    pub basis: Vec<String>,
    pub ops: BTreeMap<OpName, Tensor3>,
}

/// Default basis labels `e1..en`.
pub fn default_basis(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl AlgebraSpec {
    pub fn new(n: usize) -> Self {
        AlgebraSpec {
            field: Field::Qi,
            basis: default_basis(n),
            ops: BTreeMap::new(),
        }
    }

    pub fn with_basis(basis: Vec<String>) -> Self {
        AlgebraSpec {
            field: Field::Qi,
            basis,
            ops: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Adds or replaces a product. Panics if the table has the wrong size.
    pub fn with(mut self, name: OpName, t: Tensor3) -> Self {
        self.insert(name, t);
        self
    }

    pub fn insert(&mut self, name: OpName, t: Tensor3) {
        assert_eq!(t.dim(), self.dim(), "table size does not match algebra dimension");
        self.ops.insert(name, t);
    }

    pub fn op(&self, name: OpName) -> Result<&Tensor3> {
        self.ops
            .get(&name)
            .ok_or_else(|| Error::MissingOp(name.as_str().into()))
    }

    pub fn has(&self, name: OpName) -> bool {
        self.ops.contains_key(&name)
    }

    pub fn apply(&self, name: OpName, x: &Vector, y: &Vector) -> Result<Vector> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::Dimension(format!(
                "vectors of length {} and {} in a {n}-dimensional algebra",
                x.len(),
                y.len()
            )));
        }
        Ok(self.op(name)?.apply(x, y))
    }

    /// Restricts to the given products, keeping basis and field.
    pub fn select(&self, names: &[OpName]) -> Result<AlgebraSpec> {
        let mut out = AlgebraSpec {
            field: self.field,
            basis: self.basis.clone(),
            ops: BTreeMap::new(),
        };
        for &name in names {
            out.ops.insert(name, self.op(name)?.clone());
        }
        Ok(out)
    }

    /// Smallest field containing every structure constant.
    pub fn minimal_field(&self) -> Field {
        let all_real = self
            .ops
            .values()
            .all(|t| t.entries().iter().all(Scalar::is_real));
        if all_real {
            Field::Q
        } else {
            Field::Qi
        }
    }
}

impl fmt::Debug for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "AlgebraSpec dim={} field={}", self.dim(), self.field)?;
        for (name, t) in &self.ops {
            writeln!(f, "{name}: {t:?}")?;
        }
        Ok(())
    }
}
