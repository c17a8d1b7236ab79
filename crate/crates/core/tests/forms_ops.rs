mod common;

use common::{alg, invertible, mat, mutation_matrix, s, small_scalar, transport};
use pplie_core::algebra::OpName;
use pplie_core::rep::{self, Action, PPRepSpec, RepSpec};
use pplie_core::{checks, derived, forms, oop, AlgebraSpec, Error, Matrix, Scalar, Tensor3};
use proptest::prelude::*;

fn postlie() -> AlgebraSpec {
    alg("sl2_postlie")
}

fn kappa() -> Matrix {
    mat("kappa")
}

fn diag(d: &[&str]) -> Matrix {
    Matrix::from_fn(d.len(), d.len(), |i, j| if i == j { s(d[i]) } else { Scalar::zero() })
}

fn adjoint(a: &AlgebraSpec) -> RepSpec {
    RepSpec::adjoint(a.op(OpName::Circ).unwrap(), a.op(OpName::Bracket).unwrap())
}

fn abelian(n: usize) -> AlgebraSpec {
    AlgebraSpec::new(n).with(OpName::Circ, Tensor3::zeros(n)).with(OpName::Bracket, Tensor3::zeros(n))
}

#[test]
fn invariant_forms() {
    let p = postlie();
    assert!(forms::check_invariant_form(&p, &kappa()).unwrap().passed);
    assert!(forms::check_gph(&p, &kappa()).unwrap().passed);
    assert!(forms::check_left_invariant(&p, &kappa()).unwrap().passed);
    assert_eq!(kappa(), diag(&["-2", "-2", "-2"]));

    let sym = Matrix::from_fn(3, 3, |i, j| Scalar::from_int((i + j) as i64));
    assert!(forms::check_invariant_form(&abelian(3), &sym).unwrap().passed);

    let bent = diag(&["-2", "-2", "-1"]);
    assert_eq!(bent, mutation_matrix("kappa_perturbed"));
    assert!(!forms::check_invariant_form(&p, &bent).unwrap().passed);
    assert!(!forms::check_gph(&p, &bent).unwrap().passed);
    assert!(!forms::check_left_invariant(&p, &bent).unwrap().passed);

    assert!(!forms::check_gph(&p, &Matrix::zeros(3, 3)).unwrap().passed);
    assert!(matches!(forms::check_gph(&p, &Matrix::identity(2)), Err(Error::Dimension(_))));
}

#[test]
fn gph_survives_opposite() {
    let opp = derived::opposite_post_lie(&postlie()).unwrap();
    assert!(forms::check_gph(&opp, &kappa()).unwrap().passed);
}

#[test]
fn omega_examples() {
    let (omega, r) = forms::omega_cocycle(&postlie(), &kappa()).unwrap();
    assert!(omega.is_zero());
    assert!(r.passed);

    let skew = Matrix::from_rows(vec![vec![s("0"), s("1")], vec![s("3"), s("1/2")]]).unwrap();
    let (omega, r) = forms::omega_cocycle(&abelian(2), &skew).unwrap();
    assert_eq!(omega[(0, 1)], s("-2"));
    assert_eq!(omega[(1, 0)], s("2"));
    assert!(r.passed);

    let bent = diag(&["-2", "-2", "-1"]);
    assert!(matches!(forms::omega_cocycle(&postlie(), &bent), Err(Error::Precondition { .. })));
}

#[test]
fn rota_baxter_examples() {
    let lie = alg("sl2_lie");
    let p = mat("sl2_P");
    assert!(forms::check_rota_baxter_lie(&lie, &p, &Scalar::one()).unwrap().passed);
    assert!(!forms::check_rota_baxter_lie(&lie, &mutation_matrix("sl2_P_mutated"), &Scalar::one()).unwrap().passed);
    for lambda in ["0", "1", "-3/2i"] {
        assert!(forms::check_rota_baxter_lie(&lie, &Matrix::zeros(3, 3), &s(lambda)).unwrap().passed);
    }
    assert!(forms::check_rota_baxter_lie(&lie, &Matrix::identity(3), &s("-1")).unwrap().passed);
    assert!(!forms::check_rota_baxter_lie(&lie, &Matrix::identity(3), &s("1")).unwrap().passed);
}

#[test]
fn induced_post_lie_examples() {
    let lie = alg("sl2_lie");
    let ind = forms::induced_post_lie(&lie, &mat("sl2_P")).unwrap();
    assert_eq!(ind.ops, postlie().ops);
    assert!(checks::check_post_lie_default(&ind).unwrap().passed);
    assert_eq!(ind.op(OpName::Bracket).unwrap(), lie.op(OpName::Bracket).unwrap());

    let zero = forms::induced_post_lie(&lie, &Matrix::zeros(3, 3)).unwrap();
    assert!(zero.op(OpName::Circ).unwrap().is_zero());

    assert!(matches!(
        forms::induced_post_lie(&lie, &mutation_matrix("sl2_P_mutated")),
        Err(Error::Precondition { .. })
    ));

    // a Lie-invariant form stays invariant on the induced algebra
    let b = kappa();
    assert!(forms::check_invariant_form(&ind, &b).unwrap().passed);
    assert!(forms::check_left_invariant(&ind, &b).unwrap().passed);
}

#[test]
fn dual_map_examples() {
    let id = Action::new(3, vec![Matrix::identity(3); 2]).unwrap();
    let d = rep::dual_map(&id);
    assert!(d.matrices().iter().all(|m| *m == Matrix::scalar(3, s("-1"))));
    assert_eq!(rep::dual_map(&d), id);

    let ad = Action::left_mult(alg("sl2_lie").op(OpName::Bracket).unwrap());
    let ad_star = rep::dual_map(&ad);
    for i in 0..3 {
        assert_eq!(ad_star.basis(i), &-&ad.basis(i).transpose());
    }
}

#[test]
fn post_lie_reps() {
    let p = postlie();
    assert!(rep::check_post_lie_rep(&p, &adjoint(&p)).unwrap().passed);
    assert!(rep::check_post_lie_rep(&p, &RepSpec::zero(3, 4)).unwrap().passed);

    let pp = alg("sl2_pp");
    let (rt, lt, br) = (pp.op(OpName::Rtri).unwrap(), pp.op(OpName::Ltri).unwrap(), pp.op(OpName::Bracket).unwrap());
    let co = RepSpec::coadjoint_pp(rt, lt, br);
    let horizontal = derived::horizontal_post_lie(&pp).unwrap();
    assert!(rep::check_post_lie_rep(&horizontal, &co).unwrap().passed);

    let mut bad = adjoint(&p);
    bad.l = bad.l.neg();
    assert!(!rep::check_post_lie_rep(&p, &bad).unwrap().passed);
}

#[test]
fn pp_reps() {
    let pp = alg("sl2_pp");
    let ad = PPRepSpec::adjoint_of(&pp).unwrap();
    assert!(rep::check_pp_rep(&pp, &ad).unwrap().passed);

    let co = rep::dual_pp_rep(&pp, &ad).unwrap();
    assert!(rep::check_pp_rep(&pp, &co).unwrap().passed);
    let (rt, lt, br) = (pp.op(OpName::Rtri).unwrap(), pp.op(OpName::Ltri).unwrap(), pp.op(OpName::Bracket).unwrap());
    assert_eq!(co, PPRepSpec::coadjoint_formula(rt, lt, br));

    let bracket_only = AlgebraSpec::new(3)
        .with(OpName::Rtri, Tensor3::zeros(3))
        .with(OpName::Ltri, Tensor3::zeros(3))
        .with(OpName::Bracket, br.clone());
    let mut ad_only = PPRepSpec::zero(3, 3);
    ad_only.rho = Action::left_mult(br);
    assert!(rep::check_pp_rep(&bracket_only, &ad_only).unwrap().passed);

    let zero = PPRepSpec::zero(3, 2);
    let dz = rep::dual_pp_rep(&pp, &zero).unwrap();
    assert_eq!(dz, zero);

    let mut bad = ad.clone();
    bad.l_ltri = bad.l_ltri.neg();
    assert!(!rep::check_pp_rep(&pp, &bad).unwrap().passed);
    assert!(matches!(rep::dual_pp_rep(&pp, &bad), Err(Error::Precondition { .. })));
}

#[test]
fn o_operators() {
    let pp = alg("sl2_pp");
    let ad = PPRepSpec::adjoint_of(&pp).unwrap();
    let p = mat("final_P");
    assert_eq!(p, diag(&["1", "0", "0"]));
    assert!(oop::check_o_operator_pp(&pp, &ad, &p).unwrap().passed);
    assert!(oop::check_o_operator_pp(&pp, &ad, &Matrix::zeros(3, 3)).unwrap().passed);
    assert!(!oop::check_o_operator_pp(&pp, &ad, &Matrix::identity(3)).unwrap().passed);

    let prepp = alg("final_prepp");
    let sub = derived::sub_adjacent_pp(&prepp).unwrap();
    let from_pre = PPRepSpec::from_pre_pp(&prepp).unwrap();
    assert!(rep::check_pp_rep(&sub, &from_pre).unwrap().passed);
    assert!(oop::check_o_operator_pp(&sub, &from_pre, &Matrix::identity(3)).unwrap().passed);

    let built = oop::pre_pp_from_o_operator(&pp, &ad, &p).unwrap();
    assert_eq!(built.ops, prepp.ops);
}

#[test]
fn dual_p_o_operators() {
    let p = postlie();
    let ad = adjoint(&p);
    let phi_inv = kappa().inverse().unwrap();
    assert_eq!(phi_inv, Matrix::scalar(3, s("-1/2")));
    assert!(oop::check_dual_p_o_operator(&p, &ad, &phi_inv).unwrap().passed);
    assert!(oop::check_strong(&p, &ad, &phi_inv).unwrap().passed);
    assert!(oop::check_dual_p_o_operator(&p, &ad, &Matrix::zeros(3, 3)).unwrap().passed);
    assert!(oop::check_strong(&p, &ad, &Matrix::zeros(3, 3)).unwrap().passed);

    let zero = oop::pp_from_dual_p_o(&p, &ad, &Matrix::zeros(3, 3)).unwrap();
    assert!(zero.ops.values().all(Tensor3::is_zero));

    let on_dual = oop::pp_from_dual_p_o(&p, &ad, &phi_inv).unwrap();
    assert!(checks::check_pp_post_lie(&on_dual).unwrap().passed);

    let pp = alg("sl2_pp");
    let (rt, lt, br) = (pp.op(OpName::Rtri).unwrap(), pp.op(OpName::Ltri).unwrap(), pp.op(OpName::Bracket).unwrap());
    let horizontal = derived::horizontal_post_lie(&pp).unwrap();
    let co = RepSpec::coadjoint_pp(rt, lt, br);
    assert!(oop::check_dual_p_o_operator(&horizontal, &co, &Matrix::identity(3)).unwrap().passed);
    let back = oop::pp_from_dual_p_o(&horizontal, &co, &Matrix::identity(3)).unwrap();
    assert_eq!(back.ops, pp.ops);
}

#[test]
fn dual_p_o_on_killing_form_matches_gph_construction() {
    let p = postlie();
    let k = kappa();
    let on_dual = oop::pp_from_dual_p_o(&p, &adjoint(&p), &k.inverse().unwrap()).unwrap();
    let kinv = k.inverse().unwrap();
    // pull the products on A* back to A along x -> B(x, -)
    let pulled = AlgebraSpec::new(3)
        .with(OpName::Rtri, pull(on_dual.op(OpName::Rtri).unwrap(), &k, &kinv))
        .with(OpName::Ltri, pull(on_dual.op(OpName::Ltri).unwrap(), &k, &kinv))
        .with(OpName::Bracket, pull(on_dual.op(OpName::Bracket).unwrap(), &k, &kinv));
    let gph = pplie_core::constructions::compatible_pp_from_gph(&p, &k).unwrap();
    assert_eq!(pulled.ops, gph.ops);
}

fn pull(t: &Tensor3, phi: &Matrix, phi_inv: &Matrix) -> Tensor3 {
    let n = t.dim();
    Tensor3::from_products(n, |i, j| phi_inv.apply(&t.apply(&phi.col(i), &phi.col(j))))
}

#[test]
fn shape_errors() {
    let p = postlie();
    assert!(forms::check_rota_baxter_lie(&alg("sl2_lie"), &Matrix::identity(2), &Scalar::one()).is_err());
    assert!(oop::check_dual_p_o_operator(&p, &adjoint(&p), &Matrix::zeros(2, 3)).is_err());
    assert!(RepSpec::new(Action::zero(3, 3), Action::zero(3, 2), Action::zero(3, 3)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dual_map_is_an_involution(ms in proptest::collection::vec(common::matrix(3, small_scalar()), 3)) {
        let a = Action::new(3, ms).unwrap();
        prop_assert_eq!(rep::dual_map(&rep::dual_map(&a)), a);
    }

    #[test]
    fn gph_structures_in_any_basis(m in invertible(3)) {
        let p = transport(&postlie(), &m);
        let b = &(&m.transpose() * &kappa()) * &m;
        prop_assert!(forms::check_gph(&p, &b).unwrap().passed);
        prop_assert!(forms::check_gph(&derived::opposite_post_lie(&p).unwrap(), &b).unwrap().passed);
        let ad = adjoint(&p);
        let t = b.inverse().unwrap();
        prop_assert!(oop::check_dual_p_o_operator(&p, &ad, &t).unwrap().passed);
        prop_assert!(oop::check_strong(&p, &ad, &t).unwrap().passed);
        let on_dual = oop::pp_from_dual_p_o(&p, &ad, &t).unwrap();
        prop_assert!(checks::check_pp_post_lie(&on_dual).unwrap().passed);
    }

    #[test]
    fn invertible_dual_p_o_operators_are_strong(c in small_scalar()) {
        prop_assume!(!c.is_zero());
        let p = postlie();
        let t = kappa().inverse().unwrap().scale(&c);
        prop_assert!(oop::check_dual_p_o_operator(&p, &adjoint(&p), &t).unwrap().passed);
        prop_assert!(oop::check_strong(&p, &adjoint(&p), &t).unwrap().passed);
    }

    #[test]
    fn dual_pp_rep_closure(m in invertible(3)) {
        let pp = transport(&alg("sl2_pp"), &m);
        let ad = PPRepSpec::adjoint_of(&pp).unwrap();
        let co = rep::dual_pp_rep(&pp, &ad).unwrap();
        prop_assert!(rep::check_pp_rep(&pp, &co).unwrap().passed);
        let co2 = rep::dual_pp_rep(&pp, &co).unwrap();
        prop_assert!(rep::check_pp_rep(&pp, &co2).unwrap().passed);
    }

    #[test]
    fn induced_forms_stay_invariant(m in invertible(3)) {
        let lie = transport(&alg("sl2_lie"), &m);
        let minv = m.inverse().unwrap();
        let p = &(&minv * &mat("sl2_P")) * &m;
        let b = &(&m.transpose() * &kappa()) * &m;
        prop_assert!(forms::check_rota_baxter_lie(&lie, &p, &Scalar::one()).unwrap().passed);
        let ind = forms::induced_post_lie(&lie, &p).unwrap();
        prop_assert!(forms::check_invariant_form(&ind, &b).unwrap().passed);
        prop_assert!(forms::check_gph(&ind, &b).unwrap().passed);
    }
}
