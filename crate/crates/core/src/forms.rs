//! Bilinear forms on post-Lie algebras and Rota-Baxter operators on Lie algebras.

use crate::algebra::{AlgebraSpec, OpName};
use crate::checks::{self, for_pairs, for_triples};
use crate::derived;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{CheckReport, ReportBuilder};
use crate::scalar::Scalar;
use crate::tensor::Tensor3;
use crate::vector::Vector;

fn sv(s: Scalar) -> Vector {
    Vector(vec![s])
}

fn check_form_shape(n: usize, b: &Matrix) -> Result<()> {
    if b.rows() != n || b.cols() != n {
        return Err(Error::Dimension(format!(
            "{}x{} form on a {n}-dimensional algebra",
            b.rows(),
            b.cols()
        )));
    }
    Ok(())
}

fn post_lie_tables(alg: &AlgebraSpec) -> Result<(&Tensor3, &Tensor3)> {
    let circ = alg.op(OpName::Circ)?;
    let br = alg.op(OpName::Bracket)?;
    let pre = checks::post_lie_report(circ, br)?;
    if !pre.passed {
        return Err(Error::precondition("algebra is not post-Lie", pre));
    }
    Ok((circ, br))
}

/// `B([x,y], z) = B(x, [y,z])`.
pub fn lie_invariance_report(br: &Tensor3, b: &Matrix) -> CheckReport {
    let mut rep = ReportBuilder::new();
    for_triples(br.dim(), |i, j, k, x, y, z| {
        rep.eq(
            "lieinv",
            &[i, j, k],
            sv(b.bilinear(&br.apply(x, y), z)),
            sv(b.bilinear(x, &br.apply(y, z))),
        );
    });
    rep.finish()
}

/// Invariance: `lieinv` and the 2-cocycle identity.
pub fn invariant_form_report(circ: &Tensor3, br: &Tensor3, b: &Matrix) -> CheckReport {
    let mut rep = ReportBuilder::new();
    rep.absorb(lie_invariance_report(br, b));
    for_triples(circ.dim(), |i, j, k, x, y, z| {
        let lhs = &b.bilinear(&circ.apply(x, y), z) - &b.bilinear(x, &circ.apply(y, z));
        let rhs = &b.bilinear(&circ.apply(y, x), z) - &b.bilinear(y, &circ.apply(x, z));
        rep.eq("2-cocycle", &[i, j, k], sv(lhs), sv(rhs));
    });
    rep.finish()
}

pub fn check_invariant_form(alg: &AlgebraSpec, b: &Matrix) -> Result<CheckReport> {
    check_form_shape(alg.dim(), b)?;
    let (circ, br) = post_lie_tables(alg)?;
    Ok(invariant_form_report(circ, br, b))
}

/// Symmetry and nondegeneracy of a form.
pub fn nondegenerate_symmetric_report(b: &Matrix) -> CheckReport {
    let mut rep = ReportBuilder::new();
    let n = b.rows();
    for i in 0..n {
        for j in i + 1..n {
            if b[(i, j)] != b[(j, i)] {
                rep.eq("symmetric", &[i, j], sv(b[(i, j)].clone()), sv(b[(j, i)].clone()));
            }
        }
    }
    let det = b.det().expect("square form");
    if det.is_zero() {
        rep.eq("nondegenerate", &[], sv(det), sv(Scalar::one()));
    }
    rep.finish()
}

/// Generalized pseudo-Hessian: `B` symmetric, nondegenerate and invariant.
pub fn gph_report(circ: &Tensor3, br: &Tensor3, b: &Matrix) -> CheckReport {
    CheckReport::all([nondegenerate_symmetric_report(b), invariant_form_report(circ, br, b)])
}

pub fn check_gph(alg: &AlgebraSpec, b: &Matrix) -> Result<CheckReport> {
    check_form_shape(alg.dim(), b)?;
    let (circ, br) = post_lie_tables(alg)?;
    Ok(gph_report(circ, br, b))
}

/// Left invariance: `lieinv` and `B(x o y, z) = -B(y, x o z)`.
pub fn left_invariant_report(circ: &Tensor3, br: &Tensor3, b: &Matrix) -> CheckReport {
    let mut rep = ReportBuilder::new();
    rep.absorb(lie_invariance_report(br, b));
    for_triples(circ.dim(), |i, j, k, x, y, z| {
        rep.eq(
            "left-invariant",
            &[i, j, k],
            sv(b.bilinear(&circ.apply(x, y), z)),
            sv(-b.bilinear(y, &circ.apply(x, z))),
        );
    });
    rep.finish()
}

pub fn check_left_invariant(alg: &AlgebraSpec, b: &Matrix) -> Result<CheckReport> {
    check_form_shape(alg.dim(), b)?;
    let (circ, br) = post_lie_tables(alg)?;
    Ok(left_invariant_report(circ, br, b))
}

/// `omega(x,y) = B(x,y) - B(y,x)` and its cyclic 2-cocycle identity on the
/// sub-adjacent Lie algebra.
pub fn omega_cocycle(alg: &AlgebraSpec, b: &Matrix) -> Result<(Matrix, CheckReport)> {
    let inv = check_invariant_form(alg, b)?;
    if !inv.passed {
        return Err(Error::precondition("form is not invariant", inv));
    }
    let (circ, br) = post_lie_tables(alg)?;
    let omega = b - &b.transpose();
    let curly = derived::post_lie_curly(circ, br);
    let mut rep = ReportBuilder::new();
    for_triples(alg.dim(), |i, j, k, x, y, z| {
        let s = &(&omega.bilinear(&curly.apply(x, y), z) + &omega.bilinear(&curly.apply(y, z), x))
            + &omega.bilinear(&curly.apply(z, x), y);
        rep.zero("omega-cocycle", &[i, j, k], sv(s));
    });
    Ok((omega, rep.finish()))
}

/// `[P x, P y] = P([P x, y] + [x, P y] + lambda [x, y])` on basis pairs.
pub fn rota_baxter_report(br: &Tensor3, p: &Matrix, lambda: &Scalar) -> CheckReport {
    let mut rep = ReportBuilder::new();
    for_pairs(br.dim(), |i, j, x, y| {
        let (px, py) = (p.apply(x), p.apply(y));
        let lhs = br.apply(&px, &py);
        let inner = br.apply(&px, y) + br.apply(x, &py) + br.apply(x, y).scale(lambda);
        rep.eq("LieRB", &[i, j], lhs, p.apply(&inner));
    });
    rep.finish()
}

fn check_map_shape(n: usize, p: &Matrix) -> Result<()> {
    if p.rows() != n || p.cols() != n {
        return Err(Error::Dimension(format!(
            "{}x{} operator on a {n}-dimensional algebra",
            p.rows(),
            p.cols()
        )));
    }
    Ok(())
}

pub fn check_rota_baxter_lie(alg: &AlgebraSpec, p: &Matrix, lambda: &Scalar) -> Result<CheckReport> {
    check_map_shape(alg.dim(), p)?;
    let br = alg.op(OpName::Bracket)?;
    let lie = checks::lie_report(br);
    if !lie.passed {
        return Err(Error::NotLie("bracket".into()));
    }
    Ok(rota_baxter_report(br, p, lambda))
}

/// Induced post-Lie algebra `x o y = [P x, y]` of a weight-one Rota-Baxter operator.
pub fn induced_post_lie(alg: &AlgebraSpec, p: &Matrix) -> Result<AlgebraSpec> {
    let report = check_rota_baxter_lie(alg, p, &Scalar::one())?;
    if !report.passed {
        return Err(Error::precondition("P is not a weight-one Rota-Baxter operator", report));
    }
    let br = alg.op(OpName::Bracket)?;
    let n = alg.dim();
    let e = checks::basis(n);
    let circ = Tensor3::from_products(n, |i, j| br.apply(&p.apply(&e[i]), &e[j]));
    let mut out = AlgebraSpec::with_basis(alg.basis.clone());
    out.field = alg.field;
    Ok(out.with(OpName::Circ, circ).with(OpName::Bracket, br.clone()))
}
