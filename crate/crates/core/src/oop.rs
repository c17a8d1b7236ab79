//! O-operators on pp-post-Lie algebras and dual p-O-operators on post-Lie algebras.

use crate::algebra::{AlgebraSpec, OpName};
use crate::checks::{self, for_pairs, for_triples};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{CheckReport, ReportBuilder};
use crate::rep::{self, PPRepSpec, RepSpec};
use crate::tensor::Tensor3;

fn check_t_shape(t: &Matrix, n: usize, m: usize) -> Result<()> {
    if t.rows() != n || t.cols() != m {
        return Err(Error::Dimension(format!(
            "operator is {}x{}, expected {n}x{m}",
            t.rows(),
            t.cols()
        )));
    }
    Ok(())
}

/// `LDLOP1`..`LDLOP3` for `T: V -> A` on basis pairs of `V`.
pub fn o_operator_pp_report(rt: &Tensor3, lt: &Tensor3, br: &Tensor3, rep: &PPRepSpec, t: &Matrix) -> CheckReport {
    let mut out = ReportBuilder::new();
    for_pairs(rep.carrier(), |i, j, u, v| {
        let idx = [i, j];
        let (tu, tv) = (t.apply(u), t.apply(v));
        let rhs = t.apply(&(rep.l_rtri.at(&tu).apply(v) + rep.r_rtri.at(&tv).apply(u)));
        out.eq("LDLOP1", &idx, rt.apply(&tu, &tv), rhs);
        let rhs = t.apply(&(rep.l_ltri.at(&tu).apply(v) + rep.r_ltri.at(&tv).apply(u)));
        out.eq("LDLOP2", &idx, lt.apply(&tu, &tv), rhs);
        let rhs = t.apply(&(rep.rho.at(&tu).apply(v) - rep.rho.at(&tv).apply(u)));
        out.eq("LDLOP3", &idx, br.apply(&tu, &tv), rhs);
    });
    out.finish()
}

fn pp_tables(alg: &AlgebraSpec) -> Result<(&Tensor3, &Tensor3, &Tensor3)> {
    Ok((alg.op(OpName::Rtri)?, alg.op(OpName::Ltri)?, alg.op(OpName::Bracket)?))
}

fn require_pp_rep(alg: &AlgebraSpec, rep: &PPRepSpec) -> Result<()> {
    let report = rep::check_pp_rep(alg, rep)?;
    if !report.passed {
        return Err(Error::precondition("not a representation", report));
    }
    Ok(())
}

pub fn check_o_operator_pp(alg: &AlgebraSpec, rep: &PPRepSpec, t: &Matrix) -> Result<CheckReport> {
    check_t_shape(t, alg.dim(), rep.carrier())?;
    require_pp_rep(alg, rep)?;
    let (rt, lt, br) = pp_tables(alg)?;
    Ok(o_operator_pp_report(rt, lt, br, rep, t))
}

/// `ldlo1` and the two equalities of `ldlo2` (`ldlo2a`, `ldlo2b`) for `T: V* -> A`.
pub fn dual_p_o_report(circ: &Tensor3, br: &Tensor3, rep: &RepSpec, t: &Matrix) -> CheckReport {
    let (ls, rs, ps) = (rep.l.dual(), rep.r.dual(), rep.rho.dual());
    let mut out = ReportBuilder::new();
    for_pairs(rep.carrier(), |i, j, u, v| {
        let idx = [i, j];
        let (tu, tv) = (t.apply(u), t.apply(v));
        let inner = (&ls.at(&tu) - &rs.at(&tu)).apply(v) - rs.at(&tv).apply(u);
        out.eq("ldlo1", &idx, circ.apply(&tu, &tv), t.apply(&inner));
        let b = br.apply(&tu, &tv);
        out.eq("ldlo2a", &idx, b.clone(), t.apply(&ps.at(&tu).apply(v)));
        out.eq("ldlo2b", &idx, b, -t.apply(&ps.at(&tv).apply(u)));
    });
    out.finish()
}

fn post_lie_tables(alg: &AlgebraSpec) -> Result<(&Tensor3, &Tensor3)> {
    Ok((alg.op(OpName::Circ)?, alg.op(OpName::Bracket)?))
}

fn require_post_lie_rep(alg: &AlgebraSpec, rep: &RepSpec) -> Result<()> {
    let report = rep::check_post_lie_rep(alg, rep)?;
    if !report.passed {
        return Err(Error::precondition("not a representation", report));
    }
    Ok(())
}

pub fn check_dual_p_o_operator(alg: &AlgebraSpec, rep: &RepSpec, t: &Matrix) -> Result<CheckReport> {
    check_t_shape(t, alg.dim(), rep.carrier())?;
    require_post_lie_rep(alg, rep)?;
    let (circ, br) = post_lie_tables(alg)?;
    Ok(dual_p_o_report(circ, br, rep, t))
}

/// Strength conditions `sdpo1`, `sdpo2a`, `sdpo2b`, `sdpo3`.
///
/// The chained `sdpo2` is split so that each displayed expression must vanish.
pub fn strong_report(br: &Tensor3, rep: &RepSpec, t: &Matrix) -> CheckReport {
    let (rs, ps) = (rep.r.dual(), rep.rho.dual());
    let m = rep.carrier();
    let mut out = ReportBuilder::new();
    for_pairs(m, |i, j, u, v| {
        let (tu, tv) = (t.apply(u), t.apply(v));
        out.eq("sdpo1", &[i, j], ps.at(&tu).apply(v), -ps.at(&tv).apply(u));
    });
    for_triples(m, |i, j, k, u, v, w| {
        let idx = [i, j, k];
        let (tu, tv, tw) = (t.apply(u), t.apply(v), t.apply(w));
        let a = ps.at(&tu).apply(&(rs.at(&tv).apply(w) + rs.at(&tw).apply(v)));
        let b = rs.at(&br.apply(&tu, &tw)).apply(v) + rs.at(&tv).apply(&ps.at(&tu).apply(w));
        out.zero("sdpo2a", &idx, a);
        out.zero("sdpo2b", &idx, b);
        let c = ps.at(&br.apply(&tu, &tv)).apply(w)
            + ps.at(&br.apply(&tv, &tw)).apply(u)
            + ps.at(&br.apply(&tw, &tu)).apply(v);
        out.zero("sdpo3", &idx, c);
    });
    out.finish()
}

fn require_dual_p_o(alg: &AlgebraSpec, rep: &RepSpec, t: &Matrix) -> Result<()> {
    let report = check_dual_p_o_operator(alg, rep, t)?;
    if !report.passed {
        return Err(Error::precondition("not a dual p-O-operator", report));
    }
    Ok(())
}

pub fn check_strong(alg: &AlgebraSpec, rep: &RepSpec, t: &Matrix) -> Result<CheckReport> {
    require_dual_p_o(alg, rep, t)?;
    Ok(strong_report(alg.op(OpName::Bracket)?, rep, t))
}

/// Products on `V*`: `u |> v = (l* - r*)(T u) v`, `u <| v = -r*(T v) u`,
/// `[u, v] = rho*(T u) v`.
pub fn dual_p_o_products(rep: &RepSpec, t: &Matrix) -> AlgebraSpec {
    let (ls, rs, ps) = (rep.l.dual(), rep.r.dual(), rep.rho.dual());
    let m = rep.carrier();
    let e = checks::basis(m);
    let te: Vec<_> = e.iter().map(|u| t.apply(u)).collect();
    let rt = Tensor3::from_products(m, |i, j| (&ls.at(&te[i]) - &rs.at(&te[i])).apply(&e[j]));
    let lt = Tensor3::from_products(m, |i, j| -rs.at(&te[j]).apply(&e[i]));
    let br = Tensor3::from_products(m, |i, j| ps.at(&te[i]).apply(&e[j]));
    AlgebraSpec::new(m)
        .with(OpName::Rtri, rt)
        .with(OpName::Ltri, lt)
        .with(OpName::Bracket, br)
}

/// The pp-post-Lie algebra on `V*` induced by a strong dual p-O-operator.
pub fn pp_from_dual_p_o(alg: &AlgebraSpec, rep: &RepSpec, t: &Matrix) -> Result<AlgebraSpec> {
    let report = check_strong(alg, rep, t)?;
    if !report.passed {
        return Err(Error::precondition("operator is not strong", report));
    }
    let mut out = dual_p_o_products(rep, t);
    out.field = alg.field;
    Ok(out)
}

/// Compatible pp-post-Lie structure on `A` from an invertible dual p-O-operator:
/// `x |> y = T((l* - r*)(x) T^-1 y)`, `x <| y = -T(r*(y) T^-1 x)`.
pub fn compatible_pp_from_invertible(alg: &AlgebraSpec, rep: &RepSpec, t: &Matrix) -> Result<AlgebraSpec> {
    require_dual_p_o(alg, rep, t)?;
    let tinv = t.inverse()?;
    let n = alg.dim();
    let (ls, rs) = (rep.l.dual(), rep.r.dual());
    let e = checks::basis(n);
    let rt = Tensor3::from_products(n, |i, j| {
        t.apply(&(&ls.at(&e[i]) - &rs.at(&e[i])).apply(&tinv.col(j)))
    });
    let lt = Tensor3::from_products(n, |i, j| -t.apply(&rs.at(&e[j]).apply(&tinv.col(i))));
    let mut out = AlgebraSpec::with_basis(alg.basis.clone());
    out.field = alg.field;
    Ok(out
        .with(OpName::Rtri, rt)
        .with(OpName::Ltri, lt)
        .with(OpName::Bracket, alg.op(OpName::Bracket)?.clone()))
}

/// Pre-pp-post-Lie products on `V` from an O-operator `T: V -> A`:
/// `u se v = l_rtri(Tu)v`, `u ne v = r_rtri(Tv)u`, `u sw v = l_ltri(Tu)v`,
/// `u nw v = r_ltri(Tv)u`, `u . v = rho(Tu)v`.
pub fn pre_pp_from_o_operator(alg: &AlgebraSpec, rep: &PPRepSpec, t: &Matrix) -> Result<AlgebraSpec> {
    let report = check_o_operator_pp(alg, rep, t)?;
    if !report.passed {
        return Err(Error::precondition("not an O-operator", report));
    }
    let m = rep.carrier();
    let e = checks::basis(m);
    let te: Vec<_> = e.iter().map(|u| t.apply(u)).collect();
    let mut out = AlgebraSpec::new(m);
    out.field = alg.field;
    Ok(out
        .with(OpName::Se, Tensor3::from_products(m, |i, j| rep.l_rtri.at(&te[i]).apply(&e[j])))
        .with(OpName::Ne, Tensor3::from_products(m, |i, j| rep.r_rtri.at(&te[j]).apply(&e[i])))
        .with(OpName::Sw, Tensor3::from_products(m, |i, j| rep.l_ltri.at(&te[i]).apply(&e[j])))
        .with(OpName::Nw, Tensor3::from_products(m, |i, j| rep.r_ltri.at(&te[j]).apply(&e[i])))
        .with(OpName::Dot, Tensor3::from_products(m, |i, j| rep.rho.at(&te[i]).apply(&e[j]))))
}

/// Compatible pre-pp-post-Lie structure on `A` from an invertible O-operator,
/// transported along `T`.
pub fn invertible_o_to_compatible_pre_pp(alg: &AlgebraSpec, rep: &PPRepSpec, t: &Matrix) -> Result<AlgebraSpec> {
    let on_v = pre_pp_from_o_operator(alg, rep, t)?;
    let tinv = t.inverse()?;
    let n = alg.dim();
    let e = checks::basis(n);
    let pre: Vec<_> = e.iter().map(|x| tinv.apply(x)).collect();
    let mut out = AlgebraSpec::with_basis(alg.basis.clone());
    out.field = alg.field;
    for name in [OpName::Se, OpName::Ne, OpName::Sw, OpName::Nw, OpName::Dot] {
        let op = on_v.op(name)?;
        out.insert(name, Tensor3::from_products(n, |i, j| t.apply(&op.apply(&pre[i], &pre[j]))));
    }
    Ok(out)
}
