//! Line-oriented text documents holding algebras, coalgebras, matrices and
//! representations.
//!
//! ```text
//! # comment
//! kind algebra
//! field Q(i)
//! dim 3
//! basis e1 e2 e3
//!
//! op bracket
//! 1 2 3 = 1
//! ```
//!
//! Header lines come first. Each block then starts with one of
//! `op <name>` (entries `i j k = s`, the coefficient of `e_k` in `e_i * e_j`),
//! `comap <name>` (entries `k i j = s`), `matrix <name> <rows> <cols>`
//! (entries `i j = s`), `action <name> <dim> <carrier>` (entries `x i j = s`),
//! or is a single `scalar <name> = s` line. Indices are 1-based, missing entries
//! are zero, and [`Document::render`] writes the nonzero entries in index order.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::algebra::{default_basis, AlgebraSpec, OpName};
use crate::coalgebra::{CoName, CoalgebraSpec};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rep::{Action, PPRepSpec, RepSpec};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Algebra,
    Form,
    Map,
    Tensor2,
    Coalgebra,
    Bundle,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Form => "form",
            Kind::Map => "map",
            Kind::Tensor2 => "tensor2",
            Kind::Coalgebra => "coalgebra",
            Kind::Bundle => "bundle",
        }
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "algebra" => Kind::Algebra,
            "form" => Kind::Form,
            "map" => Kind::Map,
            "tensor2" => Kind::Tensor2,
            "coalgebra" => Kind::Coalgebra,
            "bundle" => Kind::Bundle,
            _ => return Err(Error::Parse(format!("unknown kind `{s}`"))),
        })
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub kind: Kind,
    pub field: Field,
    pub basis: Vec<String>,
    pub ops: BTreeMap<OpName, Tensor3>,
    pub comaps: BTreeMap<CoName, Tensor3>,
    pub matrices: BTreeMap<String, Matrix>,
    pub actions: BTreeMap<String, Action>,
    pub scalars: BTreeMap<String, Scalar>,
}

/// Action names of a post-Lie representation bundle.
pub const REP_ACTIONS: [&str; 3] = ["l", "r", "rho"];
/// Action names of a pp-post-Lie representation bundle.
pub const PP_REP_ACTIONS: [&str; 5] = ["l_rtri", "r_rtri", "l_ltri", "r_ltri", "rho"];

impl Document {
    pub fn new(kind: Kind, basis: Vec<String>) -> Self {
        Document {
            kind,
            field: Field::Qi,
            basis,
            ops: BTreeMap::new(),
            comaps: BTreeMap::new(),
            matrices: BTreeMap::new(),
            actions: BTreeMap::new(),
            scalars: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn from_algebra(alg: &AlgebraSpec) -> Self {
        let mut d = Document::new(Kind::Algebra, alg.basis.clone());
        d.field = alg.field;
        d.ops = alg.ops.clone();
        d
    }

    pub fn from_coalgebra(co: &CoalgebraSpec) -> Self {
        let mut d = Document::new(Kind::Coalgebra, co.basis.clone());
        d.field = co.field;
        d.comaps = co.comaps.clone();
        d
    }

    pub fn from_matrix(kind: Kind, name: &str, basis: Vec<String>, m: &Matrix) -> Self {
        let mut d = Document::new(kind, basis);
        d.matrices.insert(name.to_string(), m.clone());
        d.field = matrix_field(m);
        d
    }

    pub fn from_rep(rep: &RepSpec, basis: Vec<String>) -> Self {
        let mut d = Document::new(Kind::Bundle, basis);
        for (name, a) in REP_ACTIONS.iter().zip([&rep.l, &rep.r, &rep.rho]) {
            d.actions.insert(name.to_string(), a.clone());
        }
        d
    }

    pub fn from_pp_rep(rep: &PPRepSpec, basis: Vec<String>) -> Self {
        let mut d = Document::new(Kind::Bundle, basis);
        let acts = [&rep.l_rtri, &rep.r_rtri, &rep.l_ltri, &rep.r_ltri, &rep.rho];
        for (name, a) in PP_REP_ACTIONS.iter().zip(acts) {
            d.actions.insert(name.to_string(), a.clone());
        }
        d
    }

    pub fn to_algebra(&self) -> Result<AlgebraSpec> {
        if self.ops.is_empty() && self.dim() > 0 {
            return Err(Error::Invalid("document holds no products".into()));
        }
        let mut alg = AlgebraSpec::with_basis(self.basis.clone());
        alg.field = self.field;
        for (&n, t) in &self.ops {
            alg.insert(n, t.clone());
        }
        Ok(alg)
    }

    pub fn to_coalgebra(&self) -> Result<CoalgebraSpec> {
        if self.comaps.is_empty() && self.dim() > 0 {
            return Err(Error::Invalid("document holds no comultiplications".into()));
        }
        let mut co = CoalgebraSpec::with_basis(self.basis.clone());
        co.field = self.field;
        co.comaps = self.comaps.clone();
        Ok(co)
    }

    /// The only matrix of the document, or the one called `name`.
    pub fn matrix(&self, name: Option<&str>) -> Result<&Matrix> {
        match name {
            Some(n) => self
                .matrices
                .get(n)
                .ok_or_else(|| Error::MissingOp(format!("matrix {n}"))),
            None if self.matrices.len() == 1 => Ok(self.matrices.values().next().unwrap()),
            None => Err(Error::Invalid(format!(
                "expected exactly one matrix, found {}",
                self.matrices.len()
            ))),
        }
    }

    fn action(&self, name: &str) -> Result<Action> {
        self.actions
            .get(name)
            .cloned()
            .ok_or_else(|| Error::MissingOp(format!("action {name}")))
    }

    pub fn to_rep(&self) -> Result<RepSpec> {
        RepSpec::new(self.action("l")?, self.action("r")?, self.action("rho")?)
    }

    pub fn to_pp_rep(&self) -> Result<PPRepSpec> {
        PPRepSpec::new(
            self.action("l_rtri")?,
            self.action("r_rtri")?,
            self.action("l_ltri")?,
            self.action("r_ltri")?,
            self.action("rho")?,
        )
    }

    pub fn scalar(&self, name: &str) -> Option<&Scalar> {
        self.scalars.get(name)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Document::parse(&text).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.render()).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::default().run(text)
    }

    /// Canonical text form.
    pub fn render(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("kind {}\nfield {}\ndim {}\n", self.kind, self.field.as_str(), self.dim()));
        if !self.basis.is_empty() {
            s.push_str(&format!("basis {}\n", self.basis.join(" ")));
        }
        for (name, v) in &self.scalars {
            s.push_str(&format!("scalar {name} = {v}\n"));
        }
        for (name, t) in &self.ops {
            s.push_str(&format!("\nop {name}\n"));
            write_tensor(&mut s, t);
        }
        for (name, t) in &self.comaps {
            s.push_str(&format!("\ncomap {name}\n"));
            write_tensor(&mut s, t);
        }
        for (name, m) in &self.matrices {
            s.push_str(&format!("\nmatrix {name} {} {}\n", m.rows(), m.cols()));
            write_matrix(&mut s, m, "");
        }
        for (name, a) in &self.actions {
            s.push_str(&format!("\naction {name} {} {}\n", a.dim(), a.carrier()));
            for (x, m) in a.matrices().iter().enumerate() {
                write_matrix(&mut s, m, &format!("{} ", x + 1));
            }
        }
        s
    }

    /// Smallest field holding every entry.
    pub fn minimal_field(&self) -> Field {
        let real = self.ops.values().chain(self.comaps.values()).all(|t| t.entries().iter().all(Scalar::is_real))
            && self.matrices.values().all(|m| m.entries().iter().all(Scalar::is_real))
            && self
                .actions
                .values()
                .all(|a| a.matrices().iter().all(|m| m.entries().iter().all(Scalar::is_real)))
            && self.scalars.values().all(Scalar::is_real);
        if real {
            Field::Q
        } else {
            Field::Qi
        }
    }
}

fn matrix_field(m: &Matrix) -> Field {
    if m.entries().iter().all(Scalar::is_real) {
        Field::Q
    } else {
        Field::Qi
    }
}

fn write_tensor(s: &mut String, t: &Tensor3) {
    let n = t.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = t.get(i, j, k);
                if !v.is_zero() {
                    s.push_str(&format!("{} {} {} = {v}\n", i + 1, j + 1, k + 1));
                }
            }
        }
    }
}

fn write_matrix(s: &mut String, m: &Matrix, prefix: &str) {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = &m[(i, j)];
            if !v.is_zero() {
                s.push_str(&format!("{prefix}{} {} = {v}\n", i + 1, j + 1));
            }
        }
    }
}

enum Block {
    None,
    Op(OpName),
    Comap(CoName),
    Matrix(String),
    Action(String),
}

#[derive(Default)]
struct Parser {
    kind: Option<Kind>,
    field: Option<Field>,
    dim: Option<usize>,
    basis: Option<(usize, usize, Vec<String>)>,
    doc: Option<Document>,
}

fn err(line: usize, col: usize, msg: impl fmt::Display) -> Error {
    Error::Parse(format!("line {line}, column {col}: {msg}"))
}

/// Whitespace-separated words with 1-based starting columns.
fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_usize(lno: usize, (col, w): (usize, &str)) -> Result<usize> {
    w.parse::<usize>().map_err(|_| err(lno, col, format!("expected a number, found `{w}`")))
}

fn parse_index(lno: usize, word: (usize, &str), bound: usize) -> Result<usize> {
    let v = parse_usize(lno, word)?;
    if v == 0 || v > bound {
        return Err(err(lno, word.0, format!("index {v} out of range 1..{bound}")));
    }
    Ok(v - 1)
}

impl Parser {
    fn run(mut self, text: &str) -> Result<Document> {
        let mut block = Block::None;
        for (no, raw) in text.lines().enumerate() {
            let lno = no + 1;
            let line = raw.split('#').next().unwrap_or("");
            let ws = words(line);
            if ws.is_empty() {
                continue;
            }
            let (col, head) = ws[0];
            match head {
                "kind" | "field" | "dim" | "basis" => {
                    if self.doc.is_some() {
                        return Err(err(lno, col, "header line after the first block"));
                    }
                    self.header(lno, &ws)?;
                }
                "scalar" => {
                    self.start(lno)?;
                    self.scalar(lno, &ws)?;
                    block = Block::None;
                }
                "op" | "comap" | "matrix" | "action" => {
                    self.start(lno)?;
                    block = self.open(lno, &ws)?;
                }
                _ => {
                    self.start(lno)?;
                    self.entry(lno, &ws, &block)?;
                }
            }
        }
        self.start(text.lines().count() + 1)?;
        let doc = self.doc.unwrap();
        check_field(&doc)?;
        Ok(doc)
    }

    fn header(&mut self, lno: usize, ws: &[(usize, &str)]) -> Result<()> {
        let (col, head) = ws[0];
        let one = |ws: &[(usize, &str)]| -> Result<(usize, String)> {
            if ws.len() != 2 {
                return Err(err(lno, col, format!("`{head}` takes exactly one value")));
            }
            Ok((ws[1].0, ws[1].1.to_string()))
        };
        match head {
            "kind" => {
                let (c, v) = one(ws)?;
                self.kind = Some(v.parse().map_err(|e: Error| err(lno, c, e))?);
            }
            "field" => {
                let (c, v) = one(ws)?;
                self.field = Some(v.parse().map_err(|e: Error| err(lno, c, e))?);
            }
            "dim" => {
                self.dim = Some(parse_usize(lno, ws.get(1).copied().ok_or_else(|| err(lno, col, "missing dimension"))?)?);
                if ws.len() > 2 {
                    return Err(err(lno, ws[2].0, "unexpected token"));
                }
            }
            _ => self.basis = Some((lno, col, ws[1..].iter().map(|(_, w)| w.to_string()).collect())),
        }
        Ok(())
    }

    /// Builds the document from the header on the first block line.
    fn start(&mut self, lno: usize) -> Result<()> {
        if self.doc.is_some() {
            return Ok(());
        }
        let kind = self.kind.ok_or_else(|| err(lno, 1, "missing `kind` header"))?;
        let dim = self.dim.ok_or_else(|| err(lno, 1, "missing `dim` header"))?;
        let basis = match self.basis.take() {
            Some((bl, bc, b)) if b.len() != dim => {
                return Err(err(bl, bc, format!("basis has {} names but dim is {dim}", b.len())))
            }
            Some((_, _, b)) => b,
            None => default_basis(dim),
        };
        let mut doc = Document::new(kind, basis);
        doc.field = self.field.unwrap_or(Field::Qi);
        self.doc = Some(doc);
        Ok(())
    }

    fn doc(&mut self) -> &mut Document {
        self.doc.as_mut().unwrap()
    }

    fn scalar(&mut self, lno: usize, ws: &[(usize, &str)]) -> Result<()> {
        if ws.len() != 4 || ws[2].1 != "=" {
            return Err(err(lno, ws[0].0, "expected `scalar <name> = <value>`"));
        }
        let v = parse_scalar(lno, ws[3])?;
        self.doc().scalars.insert(ws[1].1.to_string(), v);
        Ok(())
    }

    fn open(&mut self, lno: usize, ws: &[(usize, &str)]) -> Result<Block> {
        let (col, head) = ws[0];
        let name = ws.get(1).ok_or_else(|| err(lno, col, format!("`{head}` needs a name")))?;
        let n = self.doc().dim();
        let arity = if matches!(head, "op" | "comap") { 2 } else { 4 };
        if ws.len() != arity {
            return Err(err(lno, col, format!("`{head}` takes {} arguments", arity - 1)));
        }
        let block = match head {
            "op" => {
                let op: OpName = name.1.parse().map_err(|e: Error| err(lno, name.0, e))?;
                if self.doc().ops.insert(op, Tensor3::zeros(n)).is_some() {
                    return Err(err(lno, name.0, format!("duplicate op `{op}`")));
                }
                Block::Op(op)
            }
            "comap" => {
                let co: CoName = name.1.parse().map_err(|e: Error| err(lno, name.0, e))?;
                if self.doc().comaps.insert(co, Tensor3::zeros(n)).is_some() {
                    return Err(err(lno, name.0, format!("duplicate comap `{co}`")));
                }
                Block::Comap(co)
            }
            "matrix" => {
                let (r, c) = (parse_usize(lno, ws[2])?, parse_usize(lno, ws[3])?);
                let key = name.1.to_string();
                if self.doc().matrices.insert(key.clone(), Matrix::zeros(r, c)).is_some() {
                    return Err(err(lno, name.0, format!("duplicate matrix `{key}`")));
                }
                Block::Matrix(key)
            }
            _ => {
                let (d, c) = (parse_usize(lno, ws[2])?, parse_usize(lno, ws[3])?);
                let key = name.1.to_string();
                if self.doc().actions.insert(key.clone(), Action::zero(d, c)).is_some() {
                    return Err(err(lno, name.0, format!("duplicate action `{key}`")));
                }
                Block::Action(key)
            }
        };
        Ok(block)
    }

    fn entry(&mut self, lno: usize, ws: &[(usize, &str)], block: &Block) -> Result<()> {
        let arity = match block {
            Block::None => return Err(err(lno, ws[0].0, format!("unexpected `{}` outside a block", ws[0].1))),
            Block::Op(_) | Block::Comap(_) | Block::Action(_) => 3,
            Block::Matrix(_) => 2,
        };
        if ws.len() != arity + 2 || ws[arity].1 != "=" {
            let at = ws.get(arity).map_or(ws[0].0, |w| w.0);
            return Err(err(lno, at, format!("expected {arity} indices, `=` and a scalar")));
        }
        let v = parse_scalar(lno, ws[arity + 1])?;
        let doc = self.doc();
        let n = doc.dim();
        match block {
            Block::Op(op) => {
                let (i, j, k) = (parse_index(lno, ws[0], n)?, parse_index(lno, ws[1], n)?, parse_index(lno, ws[2], n)?);
                doc.ops.get_mut(op).unwrap().set(i, j, k, v);
            }
            Block::Comap(co) => {
                let (k, i, j) = (parse_index(lno, ws[0], n)?, parse_index(lno, ws[1], n)?, parse_index(lno, ws[2], n)?);
                doc.comaps.get_mut(co).unwrap().set(k, i, j, v);
            }
            Block::Matrix(name) => {
                let m = doc.matrices.get_mut(name).unwrap();
                let (i, j) = (parse_index(lno, ws[0], m.rows())?, parse_index(lno, ws[1], m.cols())?);
                m[(i, j)] = v;
            }
            Block::Action(name) => {
                let a = doc.actions.get(name).unwrap();
                let (d, c) = (a.dim(), a.carrier());
                let x = parse_index(lno, ws[0], d)?;
                let (i, j) = (parse_index(lno, ws[1], c)?, parse_index(lno, ws[2], c)?);
                let mut mats = a.matrices().to_vec();
                mats[x][(i, j)] = v;
                doc.actions.insert(name.clone(), Action::new(c, mats)?);
            }
            Block::None => unreachable!(),
        }
        Ok(())
    }
}

fn parse_scalar(lno: usize, (col, w): (usize, &str)) -> Result<Scalar> {
    w.parse::<Scalar>().map_err(|e| err(lno, col, e))
}

fn check_field(doc: &Document) -> Result<()> {
    if doc.field != doc.field.join(doc.minimal_field()) {
        return Err(Error::Parse("field Q declared but an entry has an imaginary part".into()));
    }
    Ok(())
}
