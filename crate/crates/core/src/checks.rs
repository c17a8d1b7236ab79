//! Identity checkers for Lie, pre-Lie, post-Lie, L-dendriform, pp-post-Lie
//! and pre-pp-post-Lie algebras.
//!
//! Every identity is multilinear, so it is evaluated on all tuples of basis
//! vectors.

use crate::algebra::{AlgebraSpec, OpName};
use crate::derived;
use crate::error::{Error, Result};
use crate::report::{CheckReport, ReportBuilder};
use crate::tensor::Tensor3;
use crate::vector::Vector;

pub(crate) fn basis(n: usize) -> Vec<Vector> {
    (0..n).map(|i| Vector::basis(n, i)).collect()
}

/// Runs `f` on every ordered basis triple.
pub(crate) fn for_triples(n: usize, mut f: impl FnMut(usize, usize, usize, &Vector, &Vector, &Vector)) {
    let e = basis(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                f(i, j, k, &e[i], &e[j], &e[k]);
            }
        }
    }
}

/// Runs `f` on every ordered basis pair.
pub(crate) fn for_pairs(n: usize, mut f: impl FnMut(usize, usize, &Vector, &Vector)) {
    let e = basis(n);
    for i in 0..n {
        for j in 0..n {
            f(i, j, &e[i], &e[j]);
        }
    }
}

/// Antisymmetry and Jacobi for a bracket table.
pub fn lie_report(b: &Tensor3) -> CheckReport {
    let n = b.dim();
    let mut rep = ReportBuilder::new();
    for_pairs(n, |i, j, x, y| {
        rep.eq("antisymmetry", &[i, j], b.apply(x, y), -b.apply(y, x));
    });
    for_triples(n, |i, j, k, x, y, z| {
        let jac = b.apply(x, &b.apply(y, z)) + b.apply(y, &b.apply(z, x)) + b.apply(z, &b.apply(x, y));
        rep.zero("jacobi", &[i, j, k], jac);
    });
    rep.finish()
}

/// Left-symmetry `(x o y) o z - x o (y o z) = (y o x) o z - y o (x o z)`.
pub fn pre_lie_report(c: &Tensor3) -> CheckReport {
    let mut rep = ReportBuilder::new();
    for_triples(c.dim(), |i, j, k, x, y, z| {
        let lhs = c.apply(&c.apply(x, y), z) - c.apply(x, &c.apply(y, z));
        let rhs = c.apply(&c.apply(y, x), z) - c.apply(y, &c.apply(x, z));
        rep.eq("left-symmetry", &[i, j, k], lhs, rhs);
    });
    rep.finish()
}

fn require_lie(b: &Tensor3, name: &str) -> Result<()> {
    if lie_report(b).passed {
        Ok(())
    } else {
        Err(Error::NotLie(name.into()))
    }
}

/// Post-Lie identities `pl1`, `pl2`; assumes `br` is already known to be Lie.
pub fn post_lie_identities(circ: &Tensor3, br: &Tensor3) -> CheckReport {
    let mut rep = ReportBuilder::new();
    for_triples(circ.dim(), |i, j, k, x, y, z| {
        let lhs = circ.apply(x, &br.apply(y, z));
        let rhs = br.apply(&circ.apply(x, y), z) + br.apply(y, &circ.apply(x, z));
        rep.eq("pl1", &[i, j, k], lhs, rhs);

        let curly = circ.apply(x, y) - circ.apply(y, x) + br.apply(x, y);
        let lhs = circ.apply(&curly, z);
        let rhs = circ.apply(x, &circ.apply(y, z)) - circ.apply(y, &circ.apply(x, z));
        rep.eq("pl2", &[i, j, k], lhs, rhs);
    });
    rep.finish()
}

/// Post-Lie check on raw tables. Errors with [`Error::NotLie`] if `br` is not Lie.
pub fn post_lie_report(circ: &Tensor3, br: &Tensor3) -> Result<CheckReport> {
    require_lie(br, "bracket")?;
    Ok(post_lie_identities(circ, br))
}

/// Identities `DPSPL1`..`DPSPL5`; `DPSPL2` is split into `DPSPL2a`
/// (`[x, y<|z + z<|y] = 0`), `DPSPL2b` (`[x,z]<|y + y<|[x,z] = 0`) and
/// `DPSPL2c` (their equality).
pub fn pp_identities(rt: &Tensor3, lt: &Tensor3, br: &Tensor3) -> CheckReport {
    let mut rep = ReportBuilder::new();
    let curly = derived::pp_curly(rt, lt, br);
    for_triples(rt.dim(), |i, j, k, x, y, z| {
        let idx = [i, j, k];
        let lhs = lt.apply(x, &br.apply(y, z));
        let rhs = lt.apply(&br.apply(x, y), z) + lt.apply(&br.apply(z, x), y);
        rep.eq("DPSPL1", &idx, lhs, rhs);

        let a = br.apply(x, &(lt.apply(y, z) + lt.apply(z, y)));
        let xz = br.apply(x, z);
        let b = lt.apply(&xz, y) + lt.apply(y, &xz);
        rep.zero("DPSPL2a", &idx, a.clone());
        rep.zero("DPSPL2b", &idx, b.clone());
        rep.eq("DPSPL2c", &idx, a, b);

        let yz = br.apply(y, z);
        let lhs = rt.apply(x, &yz) - lt.apply(&yz, x);
        let rhs = br.apply(&(rt.apply(x, y) + lt.apply(x, y)), z)
            + br.apply(y, &(rt.apply(x, z) - lt.apply(z, x)));
        rep.eq("DPSPL3", &idx, lhs, rhs);

        let lhs = rt.apply(x, &lt.apply(y, z));
        let rhs = lt.apply(&(rt.apply(x, y) - lt.apply(y, x)), z)
            + lt.apply(y, &(rt.apply(x, z) + lt.apply(x, z)))
            - br.apply(x, &lt.apply(y, z));
        rep.eq("DPSPL4", &idx, lhs, rhs);

        let lhs = rt.apply(&curly.apply(x, y), z);
        let rhs = rt.apply(x, &rt.apply(y, z)) - rt.apply(y, &rt.apply(x, z))
            + br.apply(y, &lt.apply(x, z))
            - br.apply(x, &lt.apply(y, z))
            - lt.apply(&br.apply(x, y), z);
        rep.eq("DPSPL5", &idx, lhs, rhs);
    });
    rep.finish()
}

/// pp-post-Lie check on raw tables. Errors with [`Error::NotLie`] if `br` is not Lie.
pub fn pp_report(rt: &Tensor3, lt: &Tensor3, br: &Tensor3) -> Result<CheckReport> {
    require_lie(br, "bracket")?;
    Ok(pp_identities(rt, lt, br))
}

/// The two L-dendriform identities.
pub fn l_dendriform_report(rt: &Tensor3, lt: &Tensor3) -> CheckReport {
    let mut rep = ReportBuilder::new();
    for_triples(rt.dim(), |i, j, k, x, y, z| {
        let idx = [i, j, k];
        let lhs = lt.apply(&(rt.apply(x, y) - lt.apply(y, x)), z);
        let rhs = rt.apply(x, &lt.apply(y, z)) - lt.apply(y, &(rt.apply(x, z) + lt.apply(x, z)));
        rep.eq("LD1", &idx, lhs, rhs);

        let s = rt.apply(x, y) + lt.apply(x, y) - rt.apply(y, x) - lt.apply(y, x);
        let lhs = rt.apply(&s, z);
        let rhs = rt.apply(x, &rt.apply(y, z)) - rt.apply(y, &rt.apply(x, z));
        rep.eq("LD2", &idx, lhs, rhs);
    });
    rep.finish()
}

/// The five products of a pre-pp-post-Lie algebra.
#[derive(Debug, Clone, Copy)]
pub struct PrePpTables<'a> {
    pub se: &'a Tensor3,
    pub ne: &'a Tensor3,
    pub sw: &'a Tensor3,
    pub nw: &'a Tensor3,
    pub dot: &'a Tensor3,
}

impl<'a> PrePpTables<'a> {
    pub fn from_algebra(alg: &'a AlgebraSpec) -> Result<Self> {
        Ok(PrePpTables {
            se: alg.op(OpName::Se)?,
            ne: alg.op(OpName::Ne)?,
            sw: alg.op(OpName::Sw)?,
            nw: alg.op(OpName::Nw)?,
            dot: alg.op(OpName::Dot)?,
        })
    }
}

/// Identities `pldl1`..`pldl11`.
///
/// Chained `= 0` statements are split: `pldl3a`, `pldl3b` and `pldl4a`,
/// `pldl4b` each require one expression to vanish. In `pldl3b` the second
/// north-west argument is `x`, i.e. `x sw (y.z) + (y.z) nw x = 0`, and the
/// north-east argument on the right of `pldl10` is `x vee y - y wedge x + x.y`.
/// These are the forms forced by the representation axioms.
pub fn pre_pp_identities(t: PrePpTables<'_>) -> CheckReport {
    pre_pp_identities_with(t, false)
}

/// As [`pre_pp_identities`], but with `pldl3b` read as `x sw (y.z) + (y.z) nw y = 0`
/// and without the `(x.y) ne z` term of `pldl10`.
pub fn pre_pp_identities_literal(t: PrePpTables<'_>) -> CheckReport {
    pre_pp_identities_with(t, true)
}

fn pre_pp_identities_with(t: PrePpTables<'_>, literal: bool) -> CheckReport {
    let PrePpTables { se, ne, sw, nw, dot } = t;
    let n = se.dim();
    let br = derived::commutator(dot);
    let rt = se + ne;
    let lt = sw + nw;
    let circ = &rt + &lt;
    let vee = se + sw;
    let wedge = ne + nw;
    let curly = &(&circ - &circ.opposite()) + &br;

    let mut rep = ReportBuilder::new();
    for_triples(n, |i, j, k, x, y, z| {
        let idx = [i, j, k];
        let m = |t: &Tensor3, a: &Vector, b: &Vector| t.apply(a, b);

        let lhs = m(nw, x, &m(&br, y, z));
        let rhs = m(nw, &m(dot, z, x), y) - m(nw, &m(dot, y, x), z);
        rep.eq("pldl1", &idx, lhs, rhs);

        let lhs = m(sw, x, &m(dot, y, z));
        let rhs = m(sw, &m(&br, x, y), z) - m(nw, &m(dot, x, z), y);
        rep.eq("pldl2", &idx, lhs, rhs);

        let yz = m(dot, y, z);
        rep.zero("pldl3a", &idx, m(dot, x, &(m(sw, y, z) + m(nw, z, y))));
        let last = if literal { y } else { x };
        rep.zero("pldl3b", &idx, m(sw, x, &yz) + m(nw, &yz, last));

        let xy = m(&br, x, y);
        rep.zero("pldl4a", &idx, m(sw, &xy, z) + m(nw, z, &xy));
        rep.zero("pldl4b", &idx, m(dot, &(m(&lt, x, y) + m(&lt, y, x)), z));

        let lhs = m(&vee, x, &yz);
        let rhs = m(dot, &m(&circ, x, y), z) + m(dot, y, &m(&vee, x, z));
        rep.eq("pldl5", &idx, lhs, rhs);

        let lhs = m(&wedge, x, &m(&br, y, z));
        let rhs = m(dot, y, &m(&wedge, x, z)) - m(dot, z, &m(&wedge, x, y));
        rep.eq("pldl6", &idx, lhs, rhs);

        let lhs = m(se, x, &m(sw, y, z)) + m(dot, x, &m(sw, y, z));
        let s = m(se, x, y) + m(ne, x, y) - m(sw, y, x) - m(nw, y, x);
        let rhs = m(sw, y, &m(&vee, x, z)) + m(sw, &s, z);
        rep.eq("pldl7", &idx, lhs, rhs);

        let lhs = m(se, x, &m(nw, y, z)) + m(dot, x, &m(nw, y, z));
        let rhs = m(nw, y, &m(&circ, x, z)) + m(nw, &(m(se, x, y) - m(nw, y, x)), z);
        rep.eq("pldl8", &idx, lhs, rhs);

        let ylz = m(&lt, y, z);
        let lhs = m(ne, x, &ylz) - m(dot, &ylz, x);
        let rhs = m(sw, y, &m(&wedge, x, z)) + m(nw, &(m(ne, x, y) - m(sw, y, x)), z);
        rep.eq("pldl9", &idx, lhs, rhs);

        let lhs = m(se, x, &m(ne, y, z)) - m(ne, y, &m(&rt, x, z));
        let mut arg = m(&vee, x, y) - m(&wedge, y, x);
        if !literal {
            arg = arg + m(dot, x, y);
        }
        let rhs = m(ne, &arg, z)
            + m(dot, x, &m(nw, y, z))
            + m(nw, &m(dot, x, y), z)
            + m(dot, &m(&lt, x, z), y);
        rep.eq("pldl10", &idx, lhs, rhs);

        let lhs = m(se, &m(&curly, x, y), z) + m(sw, &m(&br, x, y), z);
        let rhs = m(se, x, &m(se, y, z)) - m(se, y, &m(se, x, z)) + m(dot, y, &m(sw, x, z))
            - m(dot, x, &m(sw, y, z));
        rep.eq("pldl11", &idx, lhs, rhs);
    });
    rep.finish()
}

/// Pre-pp-post-Lie check; errors with [`Error::NotPreLie`] if `dot` is not pre-Lie.
pub fn pre_pp_report(t: PrePpTables<'_>) -> Result<CheckReport> {
    if !pre_lie_report(t.dot).passed {
        return Err(Error::NotPreLie("dot".into()));
    }
    Ok(pre_pp_identities(t))
}

// Algebra-level entry points.

pub fn check_lie(alg: &AlgebraSpec, op: OpName) -> Result<CheckReport> {
    Ok(lie_report(alg.op(op)?))
}

pub fn check_pre_lie(alg: &AlgebraSpec, op: OpName) -> Result<CheckReport> {
    Ok(pre_lie_report(alg.op(op)?))
}

pub fn check_post_lie(alg: &AlgebraSpec, circ: OpName, bracket: OpName) -> Result<CheckReport> {
    let b = alg.op(bracket)?;
    require_lie(b, bracket.as_str())?;
    Ok(post_lie_identities(alg.op(circ)?, b))
}

/// Checks `(circ, bracket)`.
pub fn check_post_lie_default(alg: &AlgebraSpec) -> Result<CheckReport> {
    check_post_lie(alg, OpName::Circ, OpName::Bracket)
}

pub fn check_pp_post_lie(alg: &AlgebraSpec) -> Result<CheckReport> {
    pp_report(alg.op(OpName::Rtri)?, alg.op(OpName::Ltri)?, alg.op(OpName::Bracket)?)
}

pub fn check_l_dendriform(alg: &AlgebraSpec) -> Result<CheckReport> {
    Ok(l_dendriform_report(alg.op(OpName::Rtri)?, alg.op(OpName::Ltri)?))
}

pub fn check_pre_pp_post_lie(alg: &AlgebraSpec) -> Result<CheckReport> {
    pre_pp_report(PrePpTables::from_algebra(alg)?)
}
