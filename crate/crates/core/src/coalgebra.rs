//! Comultiplications, their duals, and coalgebra / bialgebra checks.
//!
//! Elements of `A (x) A` are [`Matrix`] values with `t[p][q]` the coefficient of
//! `e_p (x) e_q`; elements of `A (x) A (x) A` reuse [`Tensor3`] with
//! `t[a][b][c]` the coefficient of `e_a (x) e_b (x) e_c`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{default_basis, AlgebraSpec, OpName};
use crate::checks::{self, for_pairs};
use crate::derived;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{CheckReport, ReportBuilder};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor3;
use crate::vector::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoName {
    DeltaRtri,
    DeltaLtri,
    Delta,
}

impl CoName {
    pub const ALL: [CoName; 3] = [CoName::DeltaRtri, CoName::DeltaLtri, CoName::Delta];

    pub fn as_str(self) -> &'static str {
        match self {
            CoName::DeltaRtri => "delta_rtri",
            CoName::DeltaLtri => "delta_ltri",
            CoName::Delta => "Delta",
        }
    }

    /// The product on the dual space this comultiplication transposes to.
    pub fn dual_op(self) -> OpName {
        match self {
            CoName::DeltaRtri => OpName::Rtri,
            CoName::DeltaLtri => OpName::Ltri,
            CoName::Delta => OpName::Bracket,
        }
    }

    pub fn from_op(op: OpName) -> Option<CoName> {
        CoName::ALL.into_iter().find(|c| c.dual_op() == op)
    }
}

impl fmt::Display for CoName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CoName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CoName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown comultiplication `{s}`")))
    }
}

/// Named comultiplications, `delta(e_k) = sum d[k][i][j] e_i (x) e_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct CoalgebraSpec {
    pub field: Field,
    pub basis: Vec<String>,
    pub comaps: BTreeMap<CoName, Tensor3>,
}

impl CoalgebraSpec {
    pub fn new(n: usize) -> Self {
        CoalgebraSpec::with_basis(default_basis(n))
    }

    pub fn with_basis(basis: Vec<String>) -> Self {
        CoalgebraSpec {
            field: Field::Qi,
            basis,
            comaps: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn with(mut self, name: CoName, d: Tensor3) -> Self {
        self.insert(name, d);
        self
    }

    pub fn insert(&mut self, name: CoName, d: Tensor3) {
        assert_eq!(d.dim(), self.dim(), "table size does not match coalgebra dimension");
        self.comaps.insert(name, d);
    }

    pub fn comap(&self, name: CoName) -> Result<&Tensor3> {
        self.comaps
            .get(&name)
            .ok_or_else(|| Error::MissingOp(name.as_str().into()))
    }

    /// Comultiplication with missing entries read as zero.
    pub fn comap_or_zero(&self, name: CoName) -> Tensor3 {
        self.comaps
            .get(&name)
            .cloned()
            .unwrap_or_else(|| Tensor3::zeros(self.dim()))
    }
}

impl fmt::Debug for CoalgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoalgebraSpec")
            .field("field", &self.field)
            .field("basis", &self.basis)
            .field("comaps", &self.comaps.keys().collect::<Vec<_>>())
            .finish()
    }
}

/// `delta(x)` as an element of `A (x) A`.
pub fn image(d: &Tensor3, x: &Vector) -> Matrix {
    let n = d.dim();
    let mut m = Matrix::zeros(n, n);
    for (k, c) in x.nonzeros() {
        for i in 0..n {
            for (j, v) in d.product_slice(k, i).iter().enumerate() {
                if !v.is_zero() {
                    m[(i, j)] += &(c * v);
                }
            }
        }
    }
    m
}

/// Comultiplication table with `delta(e_k) = f(k)`.
pub fn comap_from_images(n: usize, mut f: impl FnMut(usize) -> Matrix) -> Tensor3 {
    let mut d = Tensor3::zeros(n);
    for k in 0..n {
        let m = f(k);
        for i in 0..n {
            for j in 0..n {
                d.set(k, i, j, m[(i, j)].clone());
            }
        }
    }
    d
}

/// `tau delta`.
pub fn flip(d: &Tensor3) -> Tensor3 {
    d.permuted(|k, i, j| (k, j, i))
}

/// Transposes a comultiplication into a product on the dual space and back:
/// `c[i][j][k] = d[k][i][j]`.
pub fn transpose_to_product(d: &Tensor3) -> Tensor3 {
    d.permuted(|i, j, k| (k, i, j))
}

pub fn transpose_to_comap(c: &Tensor3) -> Tensor3 {
    c.permuted(|k, i, j| (i, j, k))
}

fn dual_basis(basis: &[String]) -> Vec<String> {
    basis
        .iter()
        .map(|b| match b.strip_suffix('*') {
            Some(s) => s.to_string(),
            None => format!("{b}*"),
        })
        .collect()
}

/// The products on `A*` dual to the comultiplications on `A`.
pub fn dualize(co: &CoalgebraSpec) -> AlgebraSpec {
    let mut out = AlgebraSpec::with_basis(dual_basis(&co.basis));
    out.field = co.field;
    for (name, d) in &co.comaps {
        out.insert(name.dual_op(), transpose_to_product(d));
    }
    out
}

/// Comultiplications on `A*` dual to the products `|>`, `<|`, `[-,-]` of `A`;
/// other products are ignored.
pub fn dualize_alg(alg: &AlgebraSpec) -> CoalgebraSpec {
    let mut out = CoalgebraSpec::with_basis(dual_basis(&alg.basis));
    out.field = alg.field;
    for name in CoName::ALL {
        if let Ok(c) = alg.op(name.dual_op()) {
            out.insert(name, transpose_to_comap(c));
        }
    }
    out
}

/// Co-antisymmetry and co-Jacobi of `Delta`, checked on the dual bracket.
pub fn check_lie_coalgebra(co: &CoalgebraSpec) -> Result<CheckReport> {
    let d = co.comap(CoName::Delta)?;
    Ok(checks::lie_report(&transpose_to_product(d)).prefixed("co"))
}

fn dual_tables(co: &CoalgebraSpec) -> (Tensor3, Tensor3, Tensor3) {
    (
        transpose_to_product(&co.comap_or_zero(CoName::DeltaRtri)),
        transpose_to_product(&co.comap_or_zero(CoName::DeltaLtri)),
        transpose_to_product(&co.comap_or_zero(CoName::Delta)),
    )
}

/// pp-post-Lie coalgebra check on the dual algebra.
pub fn check_pp_coalgebra(co: &CoalgebraSpec) -> CheckReport {
    let (rt, lt, br) = dual_tables(co);
    let lie = checks::lie_report(&br);
    if !lie.passed {
        return lie.prefixed("co");
    }
    checks::pp_identities(&rt, &lt, &br).prefixed("dual")
}

// Tensor helpers on A (x) A (x) A.

fn t3_vec(t: &Tensor3) -> Vector {
    Vector(t.entries().to_vec())
}

/// `(delta (x) id) t`.
fn co_left(d: &Tensor3, t: &Matrix) -> Tensor3 {
    let n = d.dim();
    let mut out = Tensor3::zeros(n);
    for p in 0..n {
        for c in 0..n {
            let w = &t[(p, c)];
            if w.is_zero() {
                continue;
            }
            for a in 0..n {
                for (b, v) in d.product_slice(p, a).iter().enumerate() {
                    if !v.is_zero() {
                        let cur = out.get(a, b, c) + &(w * v);
                        out.set(a, b, c, cur);
                    }
                }
            }
        }
    }
    out
}

/// `(id (x) delta) t`.
fn co_right(d: &Tensor3, t: &Matrix) -> Tensor3 {
    let n = d.dim();
    let mut out = Tensor3::zeros(n);
    for a in 0..n {
        for q in 0..n {
            let w = &t[(a, q)];
            if w.is_zero() {
                continue;
            }
            for b in 0..n {
                for (c, v) in d.product_slice(q, b).iter().enumerate() {
                    if !v.is_zero() {
                        let cur = out.get(a, b, c) + &(w * v);
                        out.set(a, b, c, cur);
                    }
                }
            }
        }
    }
    out
}

/// `(tau (x) id) t`.
pub(crate) fn swap12(t: &Tensor3) -> Tensor3 {
    t.permuted(|a, b, c| (b, a, c))
}

/// `sigma_23 t`.
pub(crate) fn swap23(t: &Tensor3) -> Tensor3 {
    t.permuted(|a, b, c| (a, c, b))
}

/// Applies `m` to one tensor slot (0, 1 or 2).
pub(crate) fn on_slot(t: &Tensor3, slot: usize, m: &Matrix) -> Tensor3 {
    let n = t.dim();
    Tensor3::from_fn(n, |a, b, c| {
        let mut s = Scalar::zero();
        for p in 0..n {
            let (coef, src) = match slot {
                0 => (&m[(a, p)], (p, b, c)),
                1 => (&m[(b, p)], (a, p, c)),
                _ => (&m[(c, p)], (a, b, p)),
            };
            if !coef.is_zero() {
                s += &(coef * t.get(src.0, src.1, src.2));
            }
        }
        s
    })
}

/// `(m (x) id) t`.
pub(crate) fn left_on(m: &Matrix, t: &Matrix) -> Matrix {
    m * t
}

/// `(id (x) m) t`.
pub(crate) fn right_on(m: &Matrix, t: &Matrix) -> Matrix {
    t * &m.transpose()
}

fn flat(m: Matrix) -> Vector {
    Vector(m.entries().to_vec())
}

struct Comaps {
    rt: Tensor3,
    lt: Tensor3,
    big: Tensor3,
    circ: Tensor3,
    bullet: Tensor3,
}

impl Comaps {
    fn of(co: &CoalgebraSpec) -> Self {
        let rt = co.comap_or_zero(CoName::DeltaRtri);
        let lt = co.comap_or_zero(CoName::DeltaLtri);
        let big = co.comap_or_zero(CoName::Delta);
        let circ = &rt + &lt;
        let bullet = &rt - &flip(&lt);
        Comaps {
            rt,
            lt,
            big,
            circ,
            bullet,
        }
    }
}

/// Direct evaluation of `LDLC1`..`LDLC5` on basis vectors, together with the
/// Lie coalgebra axioms for `Delta`. The chained `LDLC2` is split into
/// `LDLC2a` and `LDLC2b`, each required to vanish.
pub fn check_pp_coalgebra_direct(co: &CoalgebraSpec) -> CheckReport {
    let n = co.dim();
    let c = Comaps::of(co);
    let sym_lt = &c.lt + &flip(&c.lt);
    let mut out = ReportBuilder::new();
    out.absorb(checks::lie_report(&transpose_to_product(&c.big)).prefixed("co"));
    for (k, x) in checks::basis(n).iter().enumerate() {
        let idx = [k];
        let (d_rt, d_lt, d_big) = (image(&c.rt, x), image(&c.lt, x), image(&c.big, x));
        let (d_circ, d_bullet) = (image(&c.circ, x), image(&c.bullet, x));

        let lhs = co_right(&c.big, &d_lt);
        let rhs = &co_left(&c.big, &d_lt) + &swap12(&co_right(&c.big, &d_lt));
        out.eq("LDLC1", &idx, t3_vec(&lhs), t3_vec(&rhs));

        out.zero("LDLC2a", &idx, t3_vec(&co_right(&sym_lt, &d_big)));
        out.zero("LDLC2b", &idx, t3_vec(&co_left(&c.big, &image(&sym_lt, x))));

        let lhs = co_right(&c.big, &d_bullet);
        let rhs = &co_left(&c.circ, &d_big) + &swap12(&co_right(&c.bullet, &d_big));
        out.eq("LDLC3", &idx, t3_vec(&lhs), t3_vec(&rhs));

        let lhs = co_right(&c.lt, &d_rt);
        let rhs = &(&co_left(&c.bullet, &d_lt) + &swap12(&co_right(&c.circ, &d_lt))) - &co_right(&c.lt, &d_big);
        out.eq("LDLC4", &idx, t3_vec(&lhs), t3_vec(&rhs));

        let anti = |t: Tensor3| &t - &swap12(&t);
        let lhs = anti(co_left(&c.circ, &d_rt));
        let rhs = &(&anti(co_right(&c.rt, &d_rt)) - &co_left(&c.big, &d_circ)) - &anti(co_right(&c.lt, &d_big));
        out.eq("LDLC5", &idx, t3_vec(&lhs), t3_vec(&rhs));
    }
    out.finish()
}

fn pp_tables(alg: &AlgebraSpec) -> Result<(&Tensor3, &Tensor3, &Tensor3)> {
    Ok((alg.op(OpName::Rtri)?, alg.op(OpName::Ltri)?, alg.op(OpName::Bracket)?))
}

fn check_co_dim(n: usize, co: &CoalgebraSpec) -> Result<()> {
    if co.dim() != n {
        return Err(Error::Dimension(format!(
            "{}-dimensional coalgebra on a {n}-dimensional algebra",
            co.dim()
        )));
    }
    Ok(())
}

/// `Delta([x,y]) = G(x) Delta(y) - G(y) Delta(x)` with `G(x) = ad x (x) id + id (x) ad x`.
pub fn liebc_report(br: &Tensor3, big: &Tensor3) -> CheckReport {
    let mut out = ReportBuilder::new();
    for_pairs(br.dim(), |i, j, x, y| {
        let (adx, ady) = (br.left(x), br.left(y));
        let (dx, dy) = (image(big, x), image(big, y));
        let g = |ad: &Matrix, t: &Matrix| &left_on(ad, t) + &right_on(ad, t);
        let rhs = &g(&adx, &dy) - &g(&ady, &dx);
        out.eq("Liebc", &[i, j], flat(image(big, &br.apply(x, y))), flat(rhs));
    });
    out.finish()
}

/// Lie bialgebra: Lie algebra, Lie coalgebra and `Liebc`.
pub fn check_lie_bialgebra(alg: &AlgebraSpec, big: &Tensor3) -> Result<CheckReport> {
    let br = alg.op(OpName::Bracket)?;
    if big.dim() != br.dim() {
        return Err(Error::Dimension("cobracket and bracket sizes differ".into()));
    }
    Ok(CheckReport::all([
        checks::lie_report(br),
        checks::lie_report(&transpose_to_product(big)).prefixed("co"),
        liebc_report(br, big),
    ]))
}

/// The compatibility equations `Liebc`, `DPSPLB1`..`DPSPLB8` on basis pairs.
pub fn pp_bialgebra_compat_report(rt: &Tensor3, lt: &Tensor3, br: &Tensor3, co: &CoalgebraSpec) -> CheckReport {
    let c = Comaps::of(co);
    let circ = derived::horizontal_circ(rt, lt);
    let bullet = derived::vertical_bullet(rt, lt);
    let curly = derived::pp_curly(rt, lt, br);
    let mut out = ReportBuilder::new();
    out.absorb(liebc_report(br, &c.big));
    for_pairs(rt.dim(), |i, j, x, y| {
        let idx = [i, j];
        let (adx, ady) = (br.left(x), br.left(y));
        let (lcx, lbx, lby) = (circ.left(x), bullet.left(x), bullet.left(y));
        let (lrx, llx, lly) = (rt.left(x), lt.left(x), lt.left(y));
        let (rlx, rly, rcy, rby) = (lt.right(x), lt.right(y), circ.right(y), bullet.right(y));
        let img = |d: &Tensor3, v: &Vector| image(d, v);
        let (dy, dx) = (img(&c.big, y), img(&c.big, x));
        let (ltx, lty) = (img(&c.lt, x), img(&c.lt, y));
        let (bx, by) = (img(&c.bullet, x), img(&c.bullet, y));
        let (cx, cy) = (img(&c.circ, x), img(&c.circ, y));
        let rtx = img(&c.rt, x);

        let rhs = &(&left_on(&lcx, &dy) + &right_on(&lbx, &dy)) + &(&right_on(&ady, &ltx) + &left_on(&ady, &ltx));
        out.eq("DPSPLB1", &idx, flat(img(&c.big, &circ.apply(x, y))), flat(rhs));

        let rhs = &(&(&left_on(&lbx, &dy) + &right_on(&lbx, &dy)) - &right_on(&ady, &ltx.transpose()))
            + &left_on(&ady, &ltx);
        out.eq("DPSPLB2", &idx, flat(img(&c.big, &bullet.apply(x, y))), flat(rhs));

        let xy = br.apply(x, y);
        let rhs = &(&(&right_on(&adx, &by) - &right_on(&ady, &bx)) + &left_on(&rlx, &dy)) - &left_on(&rly, &dx);
        out.eq("DPSPLB3", &idx, flat(img(&c.bullet, &xy)), flat(rhs));

        let rhs = &(&(&right_on(&adx, &cy) - &right_on(&ady, &bx)) + &left_on(&rlx, &dy)) + &left_on(&lly, &dx);
        out.eq("DPSPLB4", &idx, flat(img(&c.circ, &xy)), flat(rhs));

        let rd = &rtx + &dx;
        let rhs = &(&(&right_on(&lcx, &by) + &left_on(&(&lrx + &adx), &by)) - &left_on(&rly, &ltx.transpose()))
            + &right_on(&rcy, &rd);
        out.eq("DPSPLB5", &idx, flat(img(&c.bullet, &circ.apply(x, y))), flat(rhs));

        let rhs = &(&(&right_on(&lbx, &cy) + &left_on(&(&lrx + &adx), &cy)) - &left_on(&lly, &ltx)) + &right_on(&rby, &rd);
        out.eq("DPSPLB6", &idx, flat(img(&c.circ, &bullet.apply(x, y))), flat(rhs));

        let lcy = circ.left(y);
        let rhs = &(&right_on(&lbx, &lty) + &left_on(&lcx, &lty)) - &(&right_on(&lby, &ltx) + &left_on(&lcy, &ltx));
        out.eq("DPSPLB7", &idx, flat(img(&c.lt, &curly.apply(x, y))), flat(rhs));

        let w = lt.apply(x, y);
        let cw = img(&c.circ, &w);
        let lhs = &(&cw - &cw.transpose()) + &img(&c.big, &w);
        let rhs = &(&(&right_on(&llx, &by) + &right_on(&rly, &cx)) - &left_on(&llx, &by.transpose()))
            - &left_on(&rly, &cx.transpose());
        out.eq("DPSPLB8", &idx, flat(lhs), flat(rhs));
    });
    out.finish()
}

/// pp-post-Lie bialgebra: the algebra axioms, the coalgebra axioms (on the
/// dual) and the nine compatibility equations.
pub fn check_pp_bialgebra(alg: &AlgebraSpec, co: &CoalgebraSpec) -> Result<CheckReport> {
    check_co_dim(alg.dim(), co)?;
    let (rt, lt, br) = pp_tables(alg)?;
    let lie = checks::lie_report(br);
    let algebra = if lie.passed {
        checks::pp_identities(rt, lt, br)
    } else {
        lie
    };
    Ok(CheckReport::all([
        algebra,
        check_pp_coalgebra(co),
        pp_bialgebra_compat_report(rt, lt, br, co),
    ]))
}
