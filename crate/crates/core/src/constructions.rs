//! Semidirect products, matched pairs, doubles, Manin triples, compatible
//! structures from invariant forms, and the `T - tau(T)` lift.

use crate::algebra::{AlgebraSpec, OpName};
use crate::checks::{self, for_pairs};
use crate::derived;
use crate::error::{Error, Result};
use crate::forms;
use crate::matrix::Matrix;
use crate::rep::{self, Action, PPRepSpec, RepSpec};
use crate::report::{CheckReport, ReportBuilder};
use crate::scalar::Scalar;
use crate::tensor::Tensor3;
use crate::vector::Vector;

/// Product on `A (+) B` from products on both halves and four actions:
/// `(x+a)*(y+b) = x*y + lb(a)y + rb(b)x + a*b + la(x)b + ra(y)a`.
fn bowtie_table(ta: &Tensor3, tb: &Tensor3, la: &Action, ra: &Action, lb: &Action, rb: &Action) -> Tensor3 {
    let (n, m) = (ta.dim(), tb.dim());
    Tensor3::from_products(n + m, |i, j| match (i < n, j < n) {
        (true, true) => ta.product(i, j).concat(&Vector::zeros(m)),
        (true, false) => rb.basis(j - n).col(i).concat(&la.basis(i).col(j - n)),
        (false, true) => lb.basis(i - n).col(j).concat(&ra.basis(j).col(i - n)),
        (false, false) => Vector::zeros(n).concat(&tb.product(i - n, j - n)),
    })
}

fn require(report: CheckReport, what: &str) -> Result<()> {
    if report.passed {
        Ok(())
    } else {
        Err(Error::precondition(what, report))
    }
}

fn doubled_basis(a: &AlgebraSpec, m: usize, suffix: &str) -> Vec<String> {
    let mut basis = a.basis.clone();
    if suffix == "*" && m == a.dim() {
        basis.extend(a.basis.iter().map(|b| format!("{b}*")));
    } else {
        basis.extend((1..=m).map(|k| format!("v{k}{suffix}")));
    }
    basis
}

/// `A |x_{l,r,rho} V`.
pub fn semidirect_post_lie(alg: &AlgebraSpec, rep: &RepSpec) -> Result<AlgebraSpec> {
    require(rep::check_post_lie_rep(alg, rep)?, "not a representation")?;
    let m = rep.carrier();
    let zb = Tensor3::zeros(m);
    let z = Action::zero(m, alg.dim());
    let circ = bowtie_table(alg.op(OpName::Circ)?, &zb, &rep.l, &rep.r, &z, &z);
    let br = bowtie_table(alg.op(OpName::Bracket)?, &zb, &rep.rho, &rep.rho.neg(), &z, &z);
    let mut out = AlgebraSpec::with_basis(doubled_basis(alg, m, ""));
    out.field = alg.field;
    Ok(out.with(OpName::Circ, circ).with(OpName::Bracket, br))
}

fn semidirect_pp_tables(alg: &AlgebraSpec, rep: &PPRepSpec, basis: Vec<String>) -> Result<AlgebraSpec> {
    let m = rep.carrier();
    let zb = Tensor3::zeros(m);
    let z = Action::zero(m, alg.dim());
    let rt = bowtie_table(alg.op(OpName::Rtri)?, &zb, &rep.l_rtri, &rep.r_rtri, &z, &z);
    let lt = bowtie_table(alg.op(OpName::Ltri)?, &zb, &rep.l_ltri, &rep.r_ltri, &z, &z);
    let br = bowtie_table(alg.op(OpName::Bracket)?, &zb, &rep.rho, &rep.rho.neg(), &z, &z);
    let mut out = AlgebraSpec::with_basis(basis);
    out.field = alg.field;
    Ok(out
        .with(OpName::Rtri, rt)
        .with(OpName::Ltri, lt)
        .with(OpName::Bracket, br))
}

/// `A |x V` for a pp-post-Lie algebra and one of its representations.
pub fn semidirect_pp(alg: &AlgebraSpec, rep: &PPRepSpec) -> Result<AlgebraSpec> {
    require(rep::check_pp_rep(alg, rep)?, "not a representation")?;
    semidirect_pp_tables(alg, rep, doubled_basis(alg, rep.carrier(), ""))
}

/// Two post-Lie algebras acting on each other: `on_b` is `(B; l_A, r_A, rho_A)`
/// and `on_a` is `(A; l_B, r_B, rho_B)`.
#[derive(Debug, Clone)]
pub struct MatchedPair {
    pub a: AlgebraSpec,
    pub b: AlgebraSpec,
    pub on_b: RepSpec,
    pub on_a: RepSpec,
}

struct Side<'a> {
    circ: &'a Tensor3,
    br: &'a Tensor3,
    curly: Tensor3,
}

impl<'a> Side<'a> {
    fn of(alg: &'a AlgebraSpec) -> Result<Self> {
        let (circ, br) = (alg.op(OpName::Circ)?, alg.op(OpName::Bracket)?);
        Ok(Side {
            circ,
            br,
            curly: derived::post_lie_curly(circ, br),
        })
    }
}

/// The five compatibility equations with `x` in the first algebra and `a, b`
/// in the second. Called twice with the roles swapped.
fn matched_half(ids: [&str; 5], s: &Side<'_>, t: &Side<'_>, on_t: &RepSpec, on_s: &RepSpec, out: &mut ReportBuilder) {
    let (n, m) = (s.circ.dim(), t.circ.dim());
    let (la, ra, pa) = (&on_t.l, &on_t.r, &on_t.rho);
    let (lb, rb, pb) = (&on_s.l, &on_s.r, &on_s.rho);
    let es = checks::basis(n);
    let et = checks::basis(m);
    for (i, x) in es.iter().enumerate() {
        let (lax, rax, pax) = (la.at(x), ra.at(x), pa.at(x));
        for (j, a) in et.iter().enumerate() {
            for (k, b) in et.iter().enumerate() {
                let idx = [i, j, k];
                let ab = t.br.apply(a, b);
                let rhs = t.br.apply(&pax.apply(a), b) + t.br.apply(a, &pax.apply(b))
                    + pa.at(&pb.at(b).apply(x)).apply(a)
                    - pa.at(&pb.at(a).apply(x)).apply(b);
                out.eq(ids[0], &idx, pax.apply(&ab), rhs);

                let rhs = t.circ.apply(a, &pax.apply(b)) + t.br.apply(b, &rax.apply(a))
                    - pa.at(&lb.at(a).apply(x)).apply(b)
                    - ra.at(&pb.at(b).apply(x)).apply(a);
                out.eq(ids[1], &idx, pax.apply(&t.circ.apply(a, b)), rhs);

                let rhs = t.br.apply(&lax.apply(a), b) + t.br.apply(a, &lax.apply(b))
                    + pa.at(&rb.at(a).apply(x)).apply(b)
                    - pa.at(&rb.at(b).apply(x)).apply(a);
                out.eq(ids[2], &idx, lax.apply(&ab), rhs);

                let rhs = t.circ.apply(&lax.apply(a), b) + t.circ.apply(a, &lax.apply(b))
                    - t.circ.apply(&rax.apply(a), b)
                    + t.circ.apply(&pax.apply(a), b)
                    + ra.at(&rb.at(b).apply(x)).apply(a)
                    - la.at(&lb.at(a).apply(x)).apply(b)
                    + la.at(&rb.at(a).apply(x)).apply(b)
                    - la.at(&pb.at(a).apply(x)).apply(b);
                out.eq(ids[3], &idx, lax.apply(&t.circ.apply(a, b)), rhs);

                let rhs = t.circ.apply(a, &rax.apply(b)) - t.circ.apply(b, &rax.apply(a))
                    + ra.at(&lb.at(b).apply(x)).apply(a)
                    - ra.at(&lb.at(a).apply(x)).apply(b);
                out.eq(ids[4], &idx, rax.apply(&t.curly.apply(a, b)), rhs);
            }
        }
    }
}

fn check_action_shapes(mp: &MatchedPair) -> Result<()> {
    let (n, m) = (mp.a.dim(), mp.b.dim());
    if mp.on_b.dim() != n || mp.on_b.carrier() != m || mp.on_a.dim() != m || mp.on_a.carrier() != n {
        return Err(Error::Dimension("action maps do not match the algebra dimensions".into()));
    }
    Ok(())
}

/// Both representation conditions and the ten compatibility equations
/// `mplo`, `mppl3`, `mppl4`, `mppl7`, `mppl8` and their mirrors
/// `mpl1`, `mppl1`, `mppl2`, `mppl5`, `mppl6`.
pub fn check_matched_pair(mp: &MatchedPair) -> Result<CheckReport> {
    check_action_shapes(mp)?;
    let rep_b = rep::check_post_lie_rep(&mp.a, &mp.on_b)?.prefixed("rep-on-B");
    let rep_a = rep::check_post_lie_rep(&mp.b, &mp.on_a)?.prefixed("rep-on-A");
    let (sa, sb) = (Side::of(&mp.a)?, Side::of(&mp.b)?);
    let mut out = ReportBuilder::new();
    out.absorb(rep_b);
    out.absorb(rep_a);
    matched_half(["mplo", "mppl3", "mppl4", "mppl7", "mppl8"], &sa, &sb, &mp.on_b, &mp.on_a, &mut out);
    matched_half(["mpl1", "mppl1", "mppl2", "mppl5", "mppl6"], &sb, &sa, &mp.on_a, &mp.on_b, &mut out);
    Ok(out.finish())
}

fn bowtie_tables(mp: &MatchedPair) -> Result<(Tensor3, Tensor3)> {
    let (sa, sb) = (Side::of(&mp.a)?, Side::of(&mp.b)?);
    let circ = bowtie_table(sa.circ, sb.circ, &mp.on_b.l, &mp.on_b.r, &mp.on_a.l, &mp.on_a.r);
    let br = bowtie_table(
        sa.br,
        sb.br,
        &mp.on_b.rho,
        &mp.on_b.rho.neg(),
        &mp.on_a.rho,
        &mp.on_a.rho.neg(),
    );
    Ok((circ, br))
}

fn bowtie_basis(mp: &MatchedPair) -> Vec<String> {
    let mut basis = mp.a.basis.clone();
    basis.extend(mp.b.basis.iter().cloned());
    if basis.iter().collect::<std::collections::BTreeSet<_>>().len() != basis.len() {
        return crate::algebra::default_basis(basis.len());
    }
    basis
}

/// `A |><| B` of a matched pair.
pub fn bowtie(mp: &MatchedPair) -> Result<AlgebraSpec> {
    require(check_matched_pair(mp)?, "not a matched pair")?;
    let (circ, br) = bowtie_tables(mp)?;
    let mut out = AlgebraSpec::with_basis(bowtie_basis(mp));
    out.field = mp.a.field.join(mp.b.field);
    Ok(out.with(OpName::Circ, circ).with(OpName::Bracket, br))
}

/// `B_d(x + a*, y + b*) = <x, b*> + <y, a*>` on `A (+) A*`.
pub fn pairing_form(n: usize) -> Matrix {
    let z = Matrix::zeros(n, n);
    let id = Matrix::identity(n);
    Matrix::block(&z, &id, &id, &z)
}

/// `A |x_{L_|>* - R_<|*, -R_<|*, ad*} A*` with the pairing form.
pub fn double_construction(alg: &AlgebraSpec) -> Result<(AlgebraSpec, Matrix)> {
    let horizontal = derived::horizontal_post_lie(alg)?;
    let coad = RepSpec::coadjoint_pp(alg.op(OpName::Rtri)?, alg.op(OpName::Ltri)?, alg.op(OpName::Bracket)?);
    let mut out = semidirect_post_lie(&horizontal, &coad)?;
    out.basis = doubled_basis(alg, alg.dim(), "*");
    Ok((out, pairing_form(alg.dim())))
}

fn coadjoint_of(alg: &AlgebraSpec) -> Result<RepSpec> {
    Ok(RepSpec::coadjoint_pp(
        alg.op(OpName::Rtri)?,
        alg.op(OpName::Ltri)?,
        alg.op(OpName::Bracket)?,
    ))
}

/// The matched pair `(A, A*)` carried by coadjoint actions of two pp-post-Lie
/// algebras on dual spaces.
pub fn manin_matched_pair(a: &AlgebraSpec, astar: &AlgebraSpec) -> Result<MatchedPair> {
    if a.dim() != astar.dim() {
        return Err(Error::Dimension(format!(
            "A has dimension {} but A* has dimension {}",
            a.dim(),
            astar.dim()
        )));
    }
    Ok(MatchedPair {
        a: derived::horizontal_post_lie(a)?,
        b: derived::horizontal_post_lie(astar)?,
        on_b: coadjoint_of(a)?,
        on_a: coadjoint_of(astar)?,
    })
}

fn restrict(t: &Tensor3, offset: usize, n: usize) -> (Tensor3, CheckReport) {
    let mut leak = ReportBuilder::new();
    let out = Tensor3::from_products(n, |i, j| {
        let v = t.product(offset + i, offset + j);
        let (inside, outside) = if offset == 0 {
            (v.slice(0, n), v.slice(n, t.dim() - n))
        } else {
            (v.slice(offset, n), v.slice(0, offset))
        };
        leak.zero("subalgebra", &[offset + i, offset + j], outside);
        inside
    });
    (out, leak.finish())
}

/// Candidate Manin triple on `A (+) A*` from pp-post-Lie structures on both halves.
///
/// The report covers the post-Lie axioms of the double, invariance of the
/// pairing form, closure of both halves, and whether the compatible
/// pp-post-Lie structure induced by the form restricts to the given ones.
pub fn manin_triple_build(a: &AlgebraSpec, astar: &AlgebraSpec) -> Result<(AlgebraSpec, Matrix, CheckReport)> {
    let mp = manin_matched_pair(a, astar)?;
    let n = a.dim();
    let (circ, br) = bowtie_tables(&mp)?;
    let mut double = AlgebraSpec::with_basis(doubled_basis(a, n, "*"));
    double.field = a.field.join(astar.field);
    let double = double.with(OpName::Circ, circ.clone()).with(OpName::Bracket, br.clone());
    let bd = pairing_form(n);

    let mut out = ReportBuilder::new();
    let post_lie = checks::post_lie_report(&circ, &br)?;
    let post_lie_ok = post_lie.passed;
    out.absorb(post_lie.prefixed("double"));
    let gph = forms::gph_report(&circ, &br, &bd);
    let gph_ok = gph.passed;
    out.absorb(gph.prefixed("form"));
    for t in [&circ, &br] {
        out.absorb(restrict(t, 0, n).1);
        out.absorb(restrict(t, n, n).1);
    }
    if post_lie_ok && gph_ok {
        let pp = compatible_pp_tables(&circ, &bd)?;
        for (half, offset) in [(a, 0), (astar, n)] {
            for name in [OpName::Rtri, OpName::Ltri] {
                let (sub, leak) = restrict(pp.op(name)?, offset, n);
                out.absorb(leak.prefixed("pp"));
                let given = half.op(name)?;
                for_pairs(n, |i, j, _, _| {
                    out.eq(
                        &format!("pp-{name}"),
                        &[offset + i, offset + j],
                        sub.product(i, j),
                        given.product(i, j),
                    );
                });
            }
        }
    }
    Ok((double, bd, out.finish()))
}

fn solve_columns(b: &Matrix, rhs: Vec<Vector>) -> Result<Vec<Vector>> {
    let n = b.rows();
    let sol = b.transpose().solve(&Matrix::from_columns(n, &rhs))?;
    Ok((0..rhs.len()).map(|c| sol.col(c)).collect())
}

/// Products `w` determined by `B(w, z) = f(z)` for every basis `z`.
fn table_from_pairings(b: &Matrix, mut f: impl FnMut(usize, usize, &Vector) -> Scalar) -> Result<Tensor3> {
    let n = b.rows();
    let e = checks::basis(n);
    let mut rhs = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            rhs.push(Vector((0..n).map(|k| f(i, j, &e[k])).collect()));
        }
    }
    let cols = solve_columns(b, rhs)?;
    Ok(Tensor3::from_products(n, |i, j| cols[i * n + j].clone()))
}

fn compatible_pp_tables(circ: &Tensor3, b: &Matrix) -> Result<AlgebraSpec> {
    let n = circ.dim();
    let e = checks::basis(n);
    let rt = table_from_pairings(b, |i, j, z| {
        -b.bilinear(&e[j], &(circ.apply(&e[i], z) - circ.apply(z, &e[i])))
    })?;
    let lt = table_from_pairings(b, |i, j, z| b.bilinear(&e[i], &circ.apply(z, &e[j])))?;
    Ok(AlgebraSpec::new(n).with(OpName::Rtri, rt).with(OpName::Ltri, lt))
}

fn require_gph(alg: &AlgebraSpec, b: &Matrix) -> Result<()> {
    require(forms::check_gph(alg, b)?, "form is not generalized pseudo-Hessian")
}

/// Compatible pp-post-Lie structure of a GPH post-Lie algebra:
/// `B(x |> y, z) = -B(y, x o z - z o x)`, `B(x <| y, z) = B(x, z o y)`.
pub fn compatible_pp_from_gph(alg: &AlgebraSpec, b: &Matrix) -> Result<AlgebraSpec> {
    require_gph(alg, b)?;
    let tables = compatible_pp_tables(alg.op(OpName::Circ)?, b)?;
    let mut out = AlgebraSpec::with_basis(alg.basis.clone());
    out.field = alg.field;
    Ok(out
        .with(OpName::Rtri, tables.op(OpName::Rtri)?.clone())
        .with(OpName::Ltri, tables.op(OpName::Ltri)?.clone())
        .with(OpName::Bracket, alg.op(OpName::Bracket)?.clone()))
}

/// Second post-Lie product of a GPH post-Lie algebra, `B(x . y, z) = -B(y, x o z)`,
/// stored under `circ`.
pub fn bullet_from_gph(alg: &AlgebraSpec, b: &Matrix) -> Result<AlgebraSpec> {
    require_gph(alg, b)?;
    let circ = alg.op(OpName::Circ)?;
    let e = checks::basis(alg.dim());
    let bullet = table_from_pairings(b, |i, j, z| -b.bilinear(&e[j], &circ.apply(&e[i], z)))?;
    let mut out = AlgebraSpec::with_basis(alg.basis.clone());
    out.field = alg.field;
    Ok(out.with(OpName::Circ, bullet).with(OpName::Bracket, alg.op(OpName::Bracket)?.clone()))
}

/// `A^ = A |x V*` and `r = T - tau(T)` for `T: V -> A`, with
/// `T = sum T[i][j] e_j* (x) e_i`.
pub fn hom_embed_r(alg: &AlgebraSpec, rep: &PPRepSpec, t: &Matrix) -> Result<(AlgebraSpec, Matrix)> {
    let (n, m) = (alg.dim(), rep.carrier());
    if t.rows() != n || t.cols() != m {
        return Err(Error::Dimension(format!(
            "operator is {}x{}, expected {n}x{m}",
            t.rows(),
            t.cols()
        )));
    }
    let dual = rep::dual_pp_rep(alg, rep)?;
    let hat = semidirect_pp_tables(alg, &dual, doubled_basis(alg, m, "*"))?;
    let mut r = Matrix::zeros(n + m, n + m);
    for i in 0..n {
        for j in 0..m {
            r[(n + j, i)] = t[(i, j)].clone();
            r[(i, n + j)] = -&t[(i, j)];
        }
    }
    Ok((hat, r))
}
