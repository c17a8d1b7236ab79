//! The PPP-CYBE `C(r) = D(r) = 0`, its operator form, and the cobrackets
//! induced by a tensor `r`.

use crate::algebra::{AlgebraSpec, OpName};
use crate::checks::{self, for_pairs};
use crate::coalgebra::{comap_from_images, left_on, on_slot, right_on, swap12, swap23, CoName, CoalgebraSpec};
use crate::derived;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rep::PPRepSpec;
use crate::report::{CheckReport, ReportBuilder};
use crate::scalar::Scalar;
use crate::tensor::Tensor3;
use crate::vector::Vector;

fn check_r_shape(n: usize, r: &Matrix) -> Result<()> {
    if r.rows() != n || r.cols() != n {
        return Err(Error::Dimension(format!(
            "{}x{} tensor in a {n}-dimensional algebra",
            r.rows(),
            r.cols()
        )));
    }
    Ok(())
}

fn terms(r: &Matrix) -> Vec<(usize, usize, Scalar)> {
    let mut out = Vec::new();
    for p in 0..r.rows() {
        for q in 0..r.cols() {
            if !r[(p, q)].is_zero() {
                out.push((p, q, r[(p, q)].clone()));
            }
        }
    }
    out
}

fn add_at(t: &mut Tensor3, a: usize, b: usize, c: usize, v: &Scalar) {
    let cur = t.get(a, b, c) + v;
    t.set(a, b, c, cur);
}

/// Accumulates `sum_{i,j} w * f(a_i, b_i, a_j, b_j)` where `f` returns the
/// slot of the product and places it.
fn double_sum(r: &Matrix, n: usize, mut place: impl FnMut(&mut Tensor3, (usize, usize), (usize, usize), &Scalar)) -> Tensor3 {
    let ts = terms(r);
    let mut out = Tensor3::zeros(n);
    for (p, q, u) in &ts {
        for (s, t, v) in &ts {
            place(&mut out, (*p, *q), (*s, *t), &(u * v));
        }
    }
    out
}

fn place_product(out: &mut Tensor3, prod: &[Scalar], w: &Scalar, slot: usize, o1: usize, o2: usize) {
    for (k, c) in prod.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let v = w * c;
        match slot {
            0 => add_at(out, k, o1, o2, &v),
            1 => add_at(out, o1, k, o2, &v),
            _ => add_at(out, o1, o2, k, &v),
        }
    }
}

/// `C(r) = [r12, r13] + [r12, r23] + [r13, r23]`.
pub fn cybe_c_tables(br: &Tensor3, r: &Matrix) -> Tensor3 {
    double_sum(r, br.dim(), |out, (p, q), (s, t), w| {
        place_product(out, br.product_slice(p, s), w, 0, q, t);
        place_product(out, br.product_slice(q, s), w, 1, p, t);
        place_product(out, br.product_slice(q, t), w, 2, p, s);
    })
}

/// `D(r) = r13 <| r12 + r12 . r23 + r13 o r23` with
/// `r13 <| r12 = sum a_i <| a_j (x) b_j (x) b_i`,
/// `r12 . r23 = sum a_i (x) b_i . a_j (x) b_j`,
/// `r13 o r23 = sum a_i (x) a_j (x) b_i o b_j`.
pub fn cybe_d_tables(rt: &Tensor3, lt: &Tensor3, r: &Matrix) -> Tensor3 {
    let circ = derived::horizontal_circ(rt, lt);
    let bullet = derived::vertical_bullet(rt, lt);
    double_sum(r, rt.dim(), |out, (p, q), (s, t), w| {
        place_product(out, lt.product_slice(p, s), w, 0, t, q);
        place_product(out, bullet.product_slice(q, s), w, 1, p, t);
        place_product(out, circ.product_slice(q, t), w, 2, p, s);
    })
}

pub fn cybe_c(alg: &AlgebraSpec, r: &Matrix) -> Result<Tensor3> {
    check_r_shape(alg.dim(), r)?;
    Ok(cybe_c_tables(alg.op(OpName::Bracket)?, r))
}

pub fn cybe_d(alg: &AlgebraSpec, r: &Matrix) -> Result<Tensor3> {
    check_r_shape(alg.dim(), r)?;
    Ok(cybe_d_tables(alg.op(OpName::Rtri)?, alg.op(OpName::Ltri)?, r))
}

fn zero_components(id: &str, t: &Tensor3, out: &mut ReportBuilder) {
    let n = t.dim();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let v = t.get(a, b, c);
                if !v.is_zero() {
                    out.zero(id, &[a, b, c], Vector(vec![v.clone()]));
                }
            }
        }
    }
}

/// `C(r) = 0` and `D(r) = 0`, reported component by component.
pub fn check_pppcybe(alg: &AlgebraSpec, r: &Matrix) -> Result<CheckReport> {
    let c = cybe_c(alg, r)?;
    let d = cybe_d(alg, r)?;
    let mut out = ReportBuilder::new();
    zero_components("C", &c, &mut out);
    zero_components("D", &d, &mut out);
    Ok(out.finish())
}

/// The left multiplications `E`, `F`, `G` act through.
struct Efg {
    rt: Tensor3,
    lt: Tensor3,
    br: Tensor3,
    circ: Tensor3,
    bullet: Tensor3,
    diamond: Tensor3,
}

impl Efg {
    fn of(alg: &AlgebraSpec) -> Result<Self> {
        let (rt, lt, br) = (alg.op(OpName::Rtri)?, alg.op(OpName::Ltri)?, alg.op(OpName::Bracket)?);
        Ok(Efg {
            circ: derived::horizontal_circ(rt, lt),
            bullet: derived::vertical_bullet(rt, lt),
            diamond: derived::diamond(rt, lt),
            rt: rt.clone(),
            lt: lt.clone(),
            br: br.clone(),
        })
    }

    /// `E(x) = L_|>(x) (x) id + id (x) L_<>(x)`.
    fn e(&self, x: &Vector, t: &Matrix) -> Matrix {
        &left_on(&self.rt.left(x), t) + &right_on(&self.diamond.left(x), t)
    }

    /// `F(x) = L_o(x) (x) id + id (x) L_.(x)`.
    fn f(&self, x: &Vector, t: &Matrix) -> Matrix {
        &left_on(&self.circ.left(x), t) + &right_on(&self.bullet.left(x), t)
    }

    /// `G(x) = ad x (x) id + id (x) ad x`.
    fn g(&self, x: &Vector, t: &Matrix) -> Matrix {
        let ad = self.br.left(x);
        &left_on(&ad, t) + &right_on(&ad, t)
    }
}

/// `delta_|>(x) = E(x) r`, `delta_<|(x) = F(x)(-r)`, `Delta(x) = G(x) r`.
pub fn cobrackets_from_r(alg: &AlgebraSpec, r: &Matrix) -> Result<CoalgebraSpec> {
    let n = alg.dim();
    check_r_shape(n, r)?;
    let efg = Efg::of(alg)?;
    let e = checks::basis(n);
    let neg = -r;
    let mut co = CoalgebraSpec::with_basis(alg.basis.clone());
    co.field = alg.field;
    Ok(co
        .with(CoName::DeltaRtri, comap_from_images(n, |k| efg.e(&e[k], r)))
        .with(CoName::DeltaLtri, comap_from_images(n, |k| efg.f(&e[k], &neg)))
        .with(CoName::Delta, comap_from_images(n, |k| efg.g(&e[k], r))))
}

/// `sum_i X(a_i) (x) b_i` for `r = sum a_i (x) b_i`.
fn sum_left(r: &Matrix, mut x: impl FnMut(&Vector) -> Matrix) -> Tensor3 {
    let n = r.rows();
    let e = checks::basis(n);
    let mut out = Tensor3::zeros(n);
    for (p, q, w) in terms(r) {
        let m = x(&e[p]);
        for a in 0..n {
            for b in 0..n {
                if !m[(a, b)].is_zero() {
                    add_at(&mut out, a, b, q, &(&w * &m[(a, b)]));
                }
            }
        }
    }
    out
}

/// `sum_i a_i (x) Y(b_i)`.
fn sum_right(r: &Matrix, mut y: impl FnMut(&Vector) -> Matrix) -> Tensor3 {
    let n = r.rows();
    let e = checks::basis(n);
    let mut out = Tensor3::zeros(n);
    for (p, q, w) in terms(r) {
        let m = y(&e[q]);
        for a in 0..n {
            for b in 0..n {
                if !m[(a, b)].is_zero() {
                    add_at(&mut out, p, a, b, &(&w * &m[(a, b)]));
                }
            }
        }
    }
    out
}

fn t3_vec(t: &Tensor3) -> Vector {
    Vector(t.entries().to_vec())
}

fn flat(m: Matrix) -> Vector {
    Vector(m.entries().to_vec())
}

/// Conditions `qclb1`, `qclb2`, `qcldl1`..`qcldl6`, `cldl1`..`cldl4` and the
/// three invariance conditions `invldl-E`, `invldl-F`, `invldl-G`, each
/// evaluated on basis vectors.
pub fn check_quasitriangular_conditions(alg: &AlgebraSpec, r: &Matrix) -> Result<CheckReport> {
    let n = alg.dim();
    check_r_shape(n, r)?;
    let efg = Efg::of(alg)?;
    let c = cybe_c_tables(&efg.br, r);
    let d = cybe_d_tables(&efg.rt, &efg.lt, r);
    let s = r + &r.transpose();
    let e = checks::basis(n);
    let mut out = ReportBuilder::new();

    // sum_i a_i (x) F(b_i)(r + tau r)
    let af = sum_right(r, |b| efg.f(b, &s));
    let af_minus_d23 = &af - &swap23(&d);
    let tri = |m: &Matrix, t: &Tensor3| &(&on_slot(t, 0, m) + &on_slot(t, 1, m)) + &on_slot(t, 2, m);

    for (k, x) in e.iter().enumerate() {
        let idx = [k];
        let adx = efg.br.left(x);
        let (lcx, lbx) = (efg.circ.left(x), efg.bullet.left(x));
        let (llx, rlx, lrx) = (efg.lt.left(x), efg.lt.right(x), efg.rt.left(x));
        let fxs = efg.f(x, &s);
        let gxs = efg.g(x, &s);
        let exs = efg.e(x, &s);

        out.zero("qclb1", &idx, flat(gxs.clone()));
        out.zero("qclb2", &idx, t3_vec(&tri(&adx, &c)));

        let t = &(&on_slot(&c, 0, &lcx) + &on_slot(&c, 1, &lcx)) + &on_slot(&c, 2, &lbx);
        let t = &t + &sum_left(r, |a| left_on(&efg.br.left(a), &fxs.transpose()));
        out.zero("qcldl1", &idx, t3_vec(&t));

        let inner = &af - &d;
        let t = on_slot(&(&inner + &swap23(&inner)), 0, &adx);
        let t = &t + &sum_right(r, |b| efg.f(&efg.br.apply(x, b), &s));
        out.zero("qcldl2", &idx, t3_vec(&t));

        out.zero("qcldl3", &idx, t3_vec(&on_slot(&c, 2, &(&llx + &rlx))));

        let t = &on_slot(&c, 0, &llx) + &on_slot(&(&swap23(&d) - &af), 1, &adx);
        let t = &t - &on_slot(&d, 2, &adx);
        let t = &t - &sum_left(r, |a| left_on(&efg.lt.right(a), &gxs));
        out.zero("qcldl4", &idx, t3_vec(&t));

        let t = &on_slot(&af_minus_d23, 0, &(&adx + &llx)) + &on_slot(&af_minus_d23, 1, &lcx);
        let fa_b = sum_left(r, |a| efg.f(a, &s).transpose());
        let t = &t + &on_slot(&(&(&af - &fa_b) - &swap23(&d)), 2, &lbx);
        let t = &t + &sum_left(r, |a| left_on(&efg.lt.right(a), &fxs.transpose()));
        let t = &t - &sum_left(r, |a| efg.f(&efg.circ.apply(x, a), &s).transpose());
        out.zero("qcldl5", &idx, t3_vec(&t));

        let anti = |t: Tensor3| &t - &swap12(&t);
        let t = anti(on_slot(&af_minus_d23, 0, &adx));
        let t = &t + &sum_left(r, |a| right_on(&efg.rt.right(a), &exs));
        let t = &t + &sum_left(r, |a| right_on(&efg.circ.right(a), &gxs));
        let t = &t + &anti(on_slot(&d, 2, &efg.diamond.left(x)));
        let t = &t - &on_slot(&c, 2, &efg.bullet.right(x));
        let t = &t + &anti(on_slot(&(&d - &swap12(&d)), 0, &lrx));
        out.zero("qcldl6", &idx, t3_vec(&t));

        out.zero("invldl-E", &idx, flat(exs));
        out.zero("invldl-F", &idx, flat(fxs));
        out.zero("invldl-G", &idx, flat(gxs));
    }

    for_pairs(n, |i, j, x, y| {
        let idx = [i, j];
        let (adx, ady) = (efg.br.left(x), efg.br.left(y));
        let (fxs, fys) = (efg.f(x, &s), efg.f(y, &s));
        out.zero("cldl1", &idx, flat(left_on(&adx, &fys)));

        let t = &(&efg.f(&efg.br.apply(x, y), &s) + &left_on(&adx, &fys)) - &left_on(&ady, &fxs);
        out.zero("cldl2", &idx, flat(t));

        let t = &efg.f(&efg.circ.apply(x, y), &s) + &right_on(&efg.circ.left(x), &fys);
        let t = &t + &left_on(&(&adx + &efg.rt.left(x)), &fys);
        let t = &t - &left_on(&efg.lt.right(y), &fxs.transpose());
        out.zero("cldl3", &idx, flat(t));

        let w = efg.lt.apply(x, y);
        let eys = efg.e(y, &s);
        let le = left_on(&efg.lt.left(x), &eys);
        let t = &(&efg.e(&w, &s) - &efg.f(&w, &s)) + &(&le - &le.transpose());
        let t = &t + &efg.g(x, &s);
        let t = &t + &right_on(&efg.lt.right(y), &(&fxs - &efg.e(x, &s)));
        out.zero("cldl4", &idx, flat(t));
    });
    Ok(out.finish())
}

/// The coadjoint representation `(A*; L_<>*, R_|>*, R_.*, -R_o*, ad*)`.
pub fn coadjoint_rep(alg: &AlgebraSpec) -> Result<PPRepSpec> {
    Ok(PPRepSpec::coadjoint_formula(
        alg.op(OpName::Rtri)?,
        alg.op(OpName::Ltri)?,
        alg.op(OpName::Bracket)?,
    ))
}

/// `r~: A* -> A`, `<r~(u*), v*> = <r, u* (x) v*>`, so `r~ = r^T` as a matrix.
pub fn r_tilde(r: &Matrix) -> Matrix {
    r.transpose()
}

/// Eqs `arod1`..`arod3` for `r~` of an antisymmetric `r`.
pub fn operator_form_check(alg: &AlgebraSpec, r: &Matrix) -> Result<CheckReport> {
    let n = alg.dim();
    check_r_shape(n, r)?;
    if !(r + &r.transpose()).is_zero() {
        return Err(Error::Invalid("r is not antisymmetric".into()));
    }
    let (rt, lt, br) = (alg.op(OpName::Rtri)?, alg.op(OpName::Ltri)?, alg.op(OpName::Bracket)?);
    let rep = coadjoint_rep(alg)?;
    let t = r_tilde(r);
    let mut out = ReportBuilder::new();
    for_pairs(n, |i, j, a, b| {
        let idx = [i, j];
        let (ta, tb) = (t.apply(a), t.apply(b));
        let rhs = t.apply(&(rep.l_rtri.at(&ta).apply(b) + rep.r_rtri.at(&tb).apply(a)));
        out.eq("arod1", &idx, rt.apply(&ta, &tb), rhs);
        let rhs = t.apply(&(rep.l_ltri.at(&ta).apply(b) + rep.r_ltri.at(&tb).apply(a)));
        out.eq("arod2", &idx, lt.apply(&ta, &tb), rhs);
        let rhs = t.apply(&(rep.rho.at(&ta).apply(b) - rep.rho.at(&tb).apply(a)));
        out.eq("arod3", &idx, br.apply(&ta, &tb), rhs);
    });
    Ok(out.finish())
}
