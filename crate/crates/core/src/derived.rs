//! Products derived from a given algebra: sub-adjacent brackets, horizontal and
//! vertical post-Lie algebras, transposes and opposites.

use crate::algebra::{AlgebraSpec, OpName};
use crate::checks;
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::tensor::Tensor3;

/// `[x, y] = x.y - y.x`.
pub fn commutator(t: &Tensor3) -> Tensor3 {
    t - &t.opposite()
}

/// `x o y = x |> y + x <| y`.
pub fn horizontal_circ(rt: &Tensor3, lt: &Tensor3) -> Tensor3 {
    rt + lt
}

/// `x . y = x |> y - y <| x`.
pub fn vertical_bullet(rt: &Tensor3, lt: &Tensor3) -> Tensor3 {
    rt - &lt.opposite()
}

/// `x <> y = x <| y + x |> y - y <| x - y |> x`.
pub fn diamond(rt: &Tensor3, lt: &Tensor3) -> Tensor3 {
    let c = rt + lt;
    &c - &c.opposite()
}

/// Sub-adjacent bracket of a post-Lie algebra, `{x,y} = x o y - y o x + [x,y]`.
pub fn post_lie_curly(circ: &Tensor3, br: &Tensor3) -> Tensor3 {
    &commutator(circ) + br
}

/// Sub-adjacent bracket of a pp-post-Lie algebra,
/// `{x,y} = x |> y + x <| y - y |> x - y <| x + [x,y]`.
pub fn pp_curly(rt: &Tensor3, lt: &Tensor3, br: &Tensor3) -> Tensor3 {
    post_lie_curly(&(rt + lt), br)
}

fn require(report: CheckReport, what: &str) -> Result<()> {
    if report.passed {
        Ok(())
    } else {
        Err(Error::precondition(what, report))
    }
}

fn like(alg: &AlgebraSpec) -> AlgebraSpec {
    let mut out = AlgebraSpec::with_basis(alg.basis.clone());
    out.field = alg.field;
    out
}

/// Sub-adjacent Lie algebra of a post-Lie algebra `(circ, bracket)`.
pub fn sub_adjacent_lie(alg: &AlgebraSpec) -> Result<AlgebraSpec> {
    require(checks::check_post_lie_default(alg)?, "input is not post-Lie")?;
    let curly = post_lie_curly(alg.op(OpName::Circ)?, alg.op(OpName::Bracket)?);
    Ok(like(alg).with(OpName::Bracket, curly))
}

/// `(A, *, [-,-]^op)` with `x * y = x o y + [x, y]` and `[x,y]^op = [y,x]`.
pub fn opposite_post_lie(alg: &AlgebraSpec) -> Result<AlgebraSpec> {
    require(checks::check_post_lie_default(alg)?, "input is not post-Lie")?;
    let circ = alg.op(OpName::Circ)?;
    let br = alg.op(OpName::Bracket)?;
    Ok(like(alg)
        .with(OpName::Circ, circ + br)
        .with(OpName::Bracket, br.opposite()))
}

fn require_pp(alg: &AlgebraSpec) -> Result<()> {
    require(checks::check_pp_post_lie(alg)?, "input is not pp-post-Lie")
}

/// Horizontal post-Lie algebra `(A, o, [-,-])`, `x o y = x |> y + x <| y`.
pub fn horizontal_post_lie(alg: &AlgebraSpec) -> Result<AlgebraSpec> {
    require_pp(alg)?;
    let circ = horizontal_circ(alg.op(OpName::Rtri)?, alg.op(OpName::Ltri)?);
    Ok(like(alg)
        .with(OpName::Circ, circ)
        .with(OpName::Bracket, alg.op(OpName::Bracket)?.clone()))
}

/// Vertical post-Lie algebra, stored with its product under `circ`.
pub fn vertical_post_lie(alg: &AlgebraSpec) -> Result<AlgebraSpec> {
    require_pp(alg)?;
    let bullet = vertical_bullet(alg.op(OpName::Rtri)?, alg.op(OpName::Ltri)?);
    Ok(like(alg)
        .with(OpName::Circ, bullet)
        .with(OpName::Bracket, alg.op(OpName::Bracket)?.clone()))
}

/// Transpose `x |>^t y = x |> y`, `x <|^t y = -y <| x`.
pub fn transpose_pp(alg: &AlgebraSpec) -> Result<AlgebraSpec> {
    require_pp(alg)?;
    Ok(transpose_tables(alg)?)
}

pub(crate) fn transpose_tables(alg: &AlgebraSpec) -> Result<AlgebraSpec> {
    let lt = alg.op(OpName::Ltri)?;
    Ok(like(alg)
        .with(OpName::Rtri, alg.op(OpName::Rtri)?.clone())
        .with(OpName::Ltri, -&lt.opposite())
        .with(OpName::Bracket, alg.op(OpName::Bracket)?.clone()))
}

/// Sub-adjacent pp-post-Lie algebra of a pre-pp-post-Lie algebra:
/// `|> = se + ne`, `<| = sw + nw`, `[x,y] = x.y - y.x`.
pub fn sub_adjacent_pp(alg: &AlgebraSpec) -> Result<AlgebraSpec> {
    require(checks::check_pre_pp_post_lie(alg)?, "input is not pre-pp-post-Lie")?;
    Ok(sub_adjacent_pp_tables(alg)?)
}

pub(crate) fn sub_adjacent_pp_tables(alg: &AlgebraSpec) -> Result<AlgebraSpec> {
    let t = checks::PrePpTables::from_algebra(alg)?;
    Ok(like(alg)
        .with(OpName::Rtri, t.se + t.ne)
        .with(OpName::Ltri, t.sw + t.nw)
        .with(OpName::Bracket, commutator(t.dot)))
}
