//! Representations of post-Lie and pp-post-Lie algebras.

use crate::algebra::{AlgebraSpec, OpName};
use crate::checks::{self, for_pairs};
use crate::derived;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{CheckReport, ReportBuilder};
use crate::tensor::Tensor3;
use crate::vector::Vector;

/// A linear map `A -> End(V)`, stored as one `m x m` matrix per basis vector of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    carrier: usize,
    mats: Vec<Matrix>,
}

impl Action {
    pub fn new(carrier: usize, mats: Vec<Matrix>) -> Result<Self> {
        if mats.iter().any(|m| m.rows() != carrier || m.cols() != carrier) {
            return Err(Error::Dimension(format!(
                "action matrices must be {carrier}x{carrier}"
            )));
        }
        Ok(Action { carrier, mats })
    }

    pub fn zero(dim: usize, carrier: usize) -> Self {
        Action {
            carrier,
            mats: vec![Matrix::zeros(carrier, carrier); dim],
        }
    }

    /// Left multiplications `L(e_i)` of a product.
    pub fn left_mult(t: &Tensor3) -> Self {
        let n = t.dim();
        Action {
            carrier: n,
            mats: (0..n).map(|i| t.left_basis(i)).collect(),
        }
    }

    /// Right multiplications `R(e_i)` of a product.
    pub fn right_mult(t: &Tensor3) -> Self {
        let n = t.dim();
        Action {
            carrier: n,
            mats: (0..n).map(|i| t.right_basis(i)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.mats.len()
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn basis(&self, i: usize) -> &Matrix {
        &self.mats[i]
    }

    /// The operator attached to an arbitrary element `x = sum x_i e_i`.
    pub fn at(&self, x: &Vector) -> Matrix {
        let mut m = Matrix::zeros(self.carrier, self.carrier);
        for (i, c) in x.nonzeros() {
            m = &m + &self.mats[i].scale(c);
        }
        m
    }

    /// Dual action on `V*`, `rho*(x) = -rho(x)^T`.
    pub fn dual(&self) -> Action {
        Action {
            carrier: self.carrier,
            mats: self.mats.iter().map(|m| -&m.transpose()).collect(),
        }
    }

    fn zip(&self, other: &Action, f: impl Fn(&Matrix, &Matrix) -> Matrix) -> Action {
        assert_eq!((self.dim(), self.carrier), (other.dim(), other.carrier));
        Action {
            carrier: self.carrier,
            mats: self.mats.iter().zip(&other.mats).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn plus(&self, other: &Action) -> Action {
        self.zip(other, |a, b| a + b)
    }

    pub fn minus(&self, other: &Action) -> Action {
        self.zip(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Action {
        Action {
            carrier: self.carrier,
            mats: self.mats.iter().map(|m| -m).collect(),
        }
    }
}

/// `rho*(x) = -rho(x)^T` on every basis element.
pub fn dual_map(rho: &Action) -> Action {
    rho.dual()
}

/// `(V; l, r, rho)` for a post-Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepSpec {
    pub l: Action,
    pub r: Action,
    pub rho: Action,
}

impl RepSpec {
    pub fn new(l: Action, r: Action, rho: Action) -> Result<Self> {
        let shapes = [(l.dim(), l.carrier()), (r.dim(), r.carrier()), (rho.dim(), rho.carrier())];
        if shapes.iter().any(|s| *s != shapes[0]) {
            return Err(Error::Dimension("representation maps disagree in shape".into()));
        }
        Ok(RepSpec { l, r, rho })
    }

    pub fn carrier(&self) -> usize {
        self.rho.carrier()
    }

    pub fn dim(&self) -> usize {
        self.rho.dim()
    }

    pub fn zero(dim: usize, carrier: usize) -> Self {
        let z = Action::zero(dim, carrier);
        RepSpec {
            l: z.clone(),
            r: z.clone(),
            rho: z,
        }
    }

    /// `(A; L_o, R_o, ad)`.
    pub fn adjoint(circ: &Tensor3, br: &Tensor3) -> Self {
        RepSpec {
            l: Action::left_mult(circ),
            r: Action::right_mult(circ),
            rho: Action::left_mult(br),
        }
    }

    /// `(A*; L_|>* - R_<|*, -R_<|*, ad*)` built from a pp-post-Lie algebra.
    pub fn coadjoint_pp(rt: &Tensor3, lt: &Tensor3, br: &Tensor3) -> Self {
        let l = Action::left_mult(rt).dual().minus(&Action::right_mult(lt).dual());
        let r = Action::right_mult(lt).dual().neg();
        RepSpec {
            l,
            r,
            rho: Action::left_mult(br).dual(),
        }
    }
}

/// Lie-representation condition `rho([x,y]) = [rho(x), rho(y)]`.
pub fn lie_rep_report(br: &Tensor3, rho: &Action) -> CheckReport {
    let mut rep = ReportBuilder::new();
    for_pairs(br.dim(), |i, j, x, y| {
        let lhs = rho.at(&br.apply(x, y));
        let rhs = &(rho.basis(i) * rho.basis(j)) - &(rho.basis(j) * rho.basis(i));
        rep.eq("lie-rep", &[i, j], flat(lhs), flat(rhs));
    });
    rep.finish()
}

pub(crate) fn flat(m: Matrix) -> Vector {
    Vector(m.entries().to_vec())
}

/// Eqs `eq6`..`eq9` plus the Lie-representation condition.
pub fn post_lie_rep_report(circ: &Tensor3, br: &Tensor3, rep: &RepSpec) -> CheckReport {
    let curly = derived::post_lie_curly(circ, br);
    let (l, r, rho) = (&rep.l, &rep.r, &rep.rho);
    let mut out = ReportBuilder::new();
    out.absorb(lie_rep_report(br, rho));
    for_pairs(circ.dim(), |i, j, x, y| {
        let idx = [i, j];
        let (lx, ly, rx, ry, px, py) = (l.basis(i), l.basis(j), r.basis(i), r.basis(j), rho.basis(i), rho.basis(j));

        let lhs = rho.at(&circ.apply(x, y));
        let rhs = &(lx * py) - &(py * lx);
        out.eq("eq6", &idx, flat(lhs), flat(rhs));

        let lhs = r.at(&br.apply(x, y));
        let rhs = &(px * ry) - &(py * rx);
        out.eq("eq7", &idx, flat(lhs), flat(rhs));

        let lhs = r.at(&circ.apply(x, y));
        let rhs = &(lx * ry) - &(ry * &(&(lx - rx) + px));
        out.eq("eq8", &idx, flat(lhs), flat(rhs));

        let lhs = l.at(&curly.apply(x, y));
        let rhs = &(lx * ly) - &(ly * lx);
        out.eq("eq9", &idx, flat(lhs), flat(rhs));
    });
    out.finish()
}

pub fn check_post_lie_rep(alg: &AlgebraSpec, rep: &RepSpec) -> Result<CheckReport> {
    let circ = alg.op(OpName::Circ)?;
    let br = alg.op(OpName::Bracket)?;
    check_rep_shape(alg.dim(), rep.dim())?;
    let pre = checks::post_lie_report(circ, br)?;
    if !pre.passed {
        return Err(Error::precondition("algebra is not post-Lie", pre));
    }
    Ok(post_lie_rep_report(circ, br, rep))
}

fn check_rep_shape(n: usize, d: usize) -> Result<()> {
    if n != d {
        return Err(Error::Dimension(format!(
            "representation of a {d}-dimensional algebra used on a {n}-dimensional one"
        )));
    }
    Ok(())
}

/// `(V; l_|>, r_|>, l_<|, r_<|, rho)` for a pp-post-Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PPRepSpec {
    pub l_rtri: Action,
    pub r_rtri: Action,
    pub l_ltri: Action,
    pub r_ltri: Action,
    pub rho: Action,
}

impl PPRepSpec {
    pub fn new(l_rtri: Action, r_rtri: Action, l_ltri: Action, r_ltri: Action, rho: Action) -> Result<Self> {
        let all = [&l_rtri, &r_rtri, &l_ltri, &r_ltri, &rho];
        if all.iter().any(|a| (a.dim(), a.carrier()) != (rho.dim(), rho.carrier())) {
            return Err(Error::Dimension("representation maps disagree in shape".into()));
        }
        Ok(PPRepSpec {
            l_rtri,
            r_rtri,
            l_ltri,
            r_ltri,
            rho,
        })
    }

    pub fn carrier(&self) -> usize {
        self.rho.carrier()
    }

    pub fn dim(&self) -> usize {
        self.rho.dim()
    }

    pub fn zero(dim: usize, carrier: usize) -> Self {
        let z = Action::zero(dim, carrier);
        PPRepSpec {
            l_rtri: z.clone(),
            r_rtri: z.clone(),
            l_ltri: z.clone(),
            r_ltri: z.clone(),
            rho: z,
        }
    }

    /// `(A; L_|>, R_|>, L_<|, R_<|, ad)`.
    pub fn adjoint(rt: &Tensor3, lt: &Tensor3, br: &Tensor3) -> Self {
        PPRepSpec {
            l_rtri: Action::left_mult(rt),
            r_rtri: Action::right_mult(rt),
            l_ltri: Action::left_mult(lt),
            r_ltri: Action::right_mult(lt),
            rho: Action::left_mult(br),
        }
    }

    pub fn adjoint_of(alg: &AlgebraSpec) -> Result<Self> {
        Ok(PPRepSpec::adjoint(
            alg.op(OpName::Rtri)?,
            alg.op(OpName::Ltri)?,
            alg.op(OpName::Bracket)?,
        ))
    }

    /// `(A; L_se, R_ne, L_sw, R_nw, L_dot)` of a pre-pp-post-Lie algebra.
    pub fn from_pre_pp(alg: &AlgebraSpec) -> Result<Self> {
        Ok(PPRepSpec {
            l_rtri: Action::left_mult(alg.op(OpName::Se)?),
            r_rtri: Action::right_mult(alg.op(OpName::Ne)?),
            l_ltri: Action::left_mult(alg.op(OpName::Sw)?),
            r_ltri: Action::right_mult(alg.op(OpName::Nw)?),
            rho: Action::left_mult(alg.op(OpName::Dot)?),
        })
    }

    /// The dual representation on `V*`:
    /// `(l_|>* - r_|>* + l_<|* - r_<|*, r_|>*, r_|>* - l_<|*, -(r_|>* + r_<|*), rho*)`.
    pub fn dual(&self) -> PPRepSpec {
        let (lr, rr, ll, rl) = (self.l_rtri.dual(), self.r_rtri.dual(), self.l_ltri.dual(), self.r_ltri.dual());
        PPRepSpec {
            l_rtri: lr.minus(&rr).plus(&ll).minus(&rl),
            r_rtri: rr.clone(),
            l_ltri: rr.minus(&ll),
            r_ltri: rr.plus(&rl).neg(),
            rho: self.rho.dual(),
        }
    }

    /// `(A*; L_<>*, R_|>*, R_.*, -R_o*, ad*)`, written directly from the derived products.
    pub fn coadjoint_formula(rt: &Tensor3, lt: &Tensor3, br: &Tensor3) -> Self {
        PPRepSpec {
            l_rtri: Action::left_mult(&derived::diamond(rt, lt)).dual(),
            r_rtri: Action::right_mult(rt).dual(),
            l_ltri: Action::right_mult(&derived::vertical_bullet(rt, lt)).dual(),
            r_ltri: Action::right_mult(&derived::horizontal_circ(rt, lt)).dual().neg(),
            rho: Action::left_mult(br).dual(),
        }
    }
}

/// Eqs `ldlrep1`..`ldlrep10` plus the Lie-representation condition.
///
/// The chained `ldlrep3` is split into `ldlrep3a`..`ldlrep3d`, one per
/// expression that must vanish.
pub fn pp_rep_report(rt: &Tensor3, lt: &Tensor3, br: &Tensor3, rep: &PPRepSpec) -> CheckReport {
    let circ = derived::horizontal_circ(rt, lt);
    let bullet = derived::vertical_bullet(rt, lt);
    let curly = derived::pp_curly(rt, lt, br);
    let PPRepSpec {
        l_rtri,
        r_rtri,
        l_ltri,
        r_ltri,
        rho,
    } = rep;
    let mut out = ReportBuilder::new();
    out.absorb(lie_rep_report(br, rho));
    for_pairs(rt.dim(), |i, j, x, y| {
        let idx = [i, j];
        let (lrx, lry) = (l_rtri.basis(i), l_rtri.basis(j));
        let (rrx, rry) = (r_rtri.basis(i), r_rtri.basis(j));
        let (llx, lly) = (l_ltri.basis(i), l_ltri.basis(j));
        let (rlx, rly) = (r_ltri.basis(i), r_ltri.basis(j));
        let (px, py) = (rho.basis(i), rho.basis(j));
        let xy = br.apply(x, y);

        let lhs = r_ltri.at(&xy);
        let rhs = &(rlx * py) - &(rly * px);
        out.eq("ldlrep1", &idx, flat(lhs), flat(rhs));

        let lhs = llx * py;
        let rhs = &l_ltri.at(&xy) - &(rly * px);
        out.eq("ldlrep2", &idx, flat(lhs), flat(rhs));

        let sum_x = llx + rlx;
        let sum_y = lly + rly;
        out.zero("ldlrep3a", &idx, flat(px * &sum_y));
        out.zero("ldlrep3b", &idx, flat(&l_ltri.at(&xy) + &r_ltri.at(&xy)));
        out.zero("ldlrep3c", &idx, flat(&sum_x * py));
        out.zero("ldlrep3d", &idx, flat(rho.at(&(lt.apply(x, y) + lt.apply(y, x)))));

        let dx = lrx - rlx;
        let lhs = &dx * py;
        let rhs = &rho.at(&circ.apply(x, y)) + &(py * &dx);
        out.eq("ldlrep4", &idx, flat(lhs), flat(rhs));

        let lhs = &r_rtri.at(&xy) - &l_ltri.at(&xy);
        let rhs = &(px * &(rry - lly)) - &(py * &(rrx - llx));
        out.eq("ldlrep5", &idx, flat(lhs), flat(rhs));

        let lhs = &(lrx + px) * lly;
        let rhs = &l_ltri.at(&bullet.apply(x, y)) + &(lly * &(lrx + llx));
        out.eq("ldlrep6", &idx, flat(lhs), flat(rhs));

        let lhs = &(lrx + px) * rly;
        let rhs = &r_ltri.at(&circ.apply(x, y)) + &(rly * &(lrx - rlx));
        out.eq("ldlrep7", &idx, flat(lhs), flat(rhs));

        let xly = lt.apply(x, y);
        let lhs = r_rtri.at(&xly);
        let rhs = &(&(rly * &(rrx - llx)) + &(llx * &(rry + rly))) + &rho.at(&xly);
        out.eq("ldlrep8", &idx, flat(lhs), flat(rhs));

        let lhs = r_rtri.at(&rt.apply(x, y));
        let inner = &(&(&(lrx + llx) - rrx) - rlx) + px;
        let rhs = &(&(&(&(lrx * rry) - &(rry * &inner)) - &(px * rly)) - &(rly * px)) - &rho.at(&xly);
        out.eq("ldlrep9", &idx, flat(lhs), flat(rhs));

        let lhs = l_rtri.at(&curly.apply(x, y));
        let rhs = &(&(&(&(lrx * lry) - &(lry * lrx)) + &(py * llx)) - &(px * lly)) - &l_ltri.at(&xy);
        out.eq("ldlrep10", &idx, flat(lhs), flat(rhs));
    });
    out.finish()
}

pub fn check_pp_rep(alg: &AlgebraSpec, rep: &PPRepSpec) -> Result<CheckReport> {
    let (rt, lt, br) = (alg.op(OpName::Rtri)?, alg.op(OpName::Ltri)?, alg.op(OpName::Bracket)?);
    check_rep_shape(alg.dim(), rep.dim())?;
    let pre = checks::pp_report(rt, lt, br)?;
    if !pre.passed {
        return Err(Error::precondition("algebra is not pp-post-Lie", pre));
    }
    Ok(pp_rep_report(rt, lt, br, rep))
}

/// Dual representation, after checking that `rep` is a representation.
pub fn dual_pp_rep(alg: &AlgebraSpec, rep: &PPRepSpec) -> Result<PPRepSpec> {
    let report = check_pp_rep(alg, rep)?;
    if !report.passed {
        return Err(Error::precondition("input is not a representation", report));
    }
    Ok(rep.dual())
}
