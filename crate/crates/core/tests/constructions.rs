mod common;

use common::{alg, co, invertible, mat, matrix, sparse_scalar, transport};
use pplie_core::algebra::OpName;
use pplie_core::coalgebra;
use pplie_core::constructions::{self, MatchedPair};
use pplie_core::rep::{self, PPRepSpec, RepSpec};
use pplie_core::{checks, cybe, derived, forms, oop, AlgebraSpec, Error, Matrix, Scalar, Tensor3};
use proptest::prelude::*;

const PP: [OpName; 3] = [OpName::Rtri, OpName::Ltri, OpName::Bracket];

fn zero_pp(n: usize) -> AlgebraSpec {
    PP.iter().fold(AlgebraSpec::new(n), |a, &op| a.with(op, Tensor3::zeros(n)))
}

fn sl2_pp() -> AlgebraSpec {
    let p = alg("sl2_postlie");
    constructions::compatible_pp_from_gph(&p, &mat("kappa")).unwrap()
}

fn final_sub() -> AlgebraSpec {
    derived::sub_adjacent_pp(&alg("final_prepp")).unwrap()
}

fn adjoint(a: &AlgebraSpec) -> RepSpec {
    RepSpec::adjoint(a.op(OpName::Circ).unwrap(), a.op(OpName::Bracket).unwrap())
}

fn op<'a>(a: &'a AlgebraSpec, name: OpName) -> &'a Tensor3 {
    a.op(name).unwrap()
}

#[test]
fn semidirect_post_lie_examples() {
    let p = alg("sl2_postlie");
    let s = constructions::semidirect_post_lie(&p, &adjoint(&p)).unwrap();
    assert_eq!(s.dim(), 6);
    assert!(checks::check_post_lie_default(&s).unwrap().passed);
    for name in [OpName::Circ, OpName::Bracket] {
        let t = op(&s, name);
        for i in 3..6 {
            for j in 3..6 {
                assert!(t.product(i, j).is_zero());
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(t.product(i, j).slice(0, 3), op(&p, name).product(i, j));
                assert!(t.product(i, j).slice(3, 3).is_zero());
            }
        }
    }

    let direct = constructions::semidirect_post_lie(&p, &RepSpec::zero(3, 2)).unwrap();
    assert!(checks::check_post_lie_default(&direct).unwrap().passed);
    for i in 0..5 {
        for j in 0..5 {
            if i >= 3 || j >= 3 {
                assert!(op(&direct, OpName::Circ).product(i, j).is_zero());
            }
        }
    }

    let mut bad = adjoint(&p);
    bad.rho = bad.rho.neg();
    assert!(matches!(constructions::semidirect_post_lie(&p, &bad), Err(Error::Precondition { .. })));
}

#[test]
fn semidirect_pp_examples() {
    let sub = final_sub();
    let dual = rep::dual_pp_rep(&sub, &PPRepSpec::from_pre_pp(&alg("final_prepp")).unwrap()).unwrap();
    let hat = constructions::semidirect_pp(&sub, &dual).unwrap();
    assert!(checks::check_pp_post_lie(&hat).unwrap().passed);
    assert_eq!(hat.ops, alg("ahat_pp").ops);

    let direct = constructions::semidirect_pp(&sub, &PPRepSpec::zero(3, 3)).unwrap();
    assert!(checks::check_pp_post_lie(&direct).unwrap().passed);
    assert_eq!(op(&direct, OpName::Rtri).nonzero_products(), op(&sub, OpName::Rtri).nonzero_products());
}

#[test]
fn double_construction_examples() {
    let (dbl, bd) = constructions::double_construction(&sl2_pp()).unwrap();
    assert_eq!(dbl.dim(), 6);
    assert_eq!(dbl.basis[3], "e1*");
    assert!(forms::check_gph(&dbl, &bd).unwrap().passed);
    assert_eq!(bd, constructions::pairing_form(3));
    assert_eq!(bd[(0, 3)], Scalar::one());
    assert_eq!(bd[(3, 0)], Scalar::one());
    assert!(bd[(0, 0)].is_zero());

    let (z, bz) = constructions::double_construction(&zero_pp(2)).unwrap();
    assert!(z.ops.values().all(Tensor3::is_zero));
    assert!(!bz.det().unwrap().is_zero());
    assert!(forms::check_gph(&z, &bz).unwrap().passed);

    let mut broken = sl2_pp();
    broken.insert(OpName::Ltri, op(&broken, OpName::Ltri).scale(&Scalar::from_int(2)));
    assert!(matches!(constructions::double_construction(&broken), Err(Error::Precondition { .. })));
}

fn hat_dual() -> (AlgebraSpec, AlgebraSpec) {
    let hat = alg("ahat_pp");
    let cob = cybe::cobrackets_from_r(&hat, &mat("r6")).unwrap();
    (hat, coalgebra::dualize(&cob))
}

#[test]
fn manin_triples() {
    let (hat, astar) = hat_dual();
    let (double, bd, report) = constructions::manin_triple_build(&hat, &astar).unwrap();
    assert!(report.passed, "{report}");
    assert_eq!(double.dim(), 12);
    assert!(forms::check_gph(&double, &bd).unwrap().passed);

    let (_, _, zero) = constructions::manin_triple_build(&zero_pp(3), &zero_pp(3)).unwrap();
    assert!(zero.passed);

    let (_, _, trivial_dual) = constructions::manin_triple_build(&sl2_pp(), &zero_pp(3)).unwrap();
    assert!(trivial_dual.passed);

    // the dual ltri table is antisymmetric, so transposing leaves it fixed
    assert_eq!(derived::transpose_pp(&astar).unwrap().ops, astar.ops);
    let reference = coalgebra::dualize(&co("final_cobrackets"));
    match constructions::manin_triple_build(&hat, &reference) {
        Ok((_, _, bad)) => {
            assert!(!bad.passed);
            assert!(bad.total > 0);
        }
        Err(e) => assert!(matches!(e, Error::Precondition { .. } | Error::NotLie(_)), "{e}"),
    }

    assert!(matches!(
        constructions::manin_triple_build(&hat, &zero_pp(3)),
        Err(Error::Dimension(_))
    ));
}

#[test]
fn matched_pairs() {
    let (hat, astar) = hat_dual();
    let mp = constructions::manin_matched_pair(&hat, &astar).unwrap();
    assert!(constructions::check_matched_pair(&mp).unwrap().passed);

    let bt = constructions::bowtie(&mp).unwrap();
    assert!(checks::check_post_lie_default(&bt).unwrap().passed);
    let n = hat.dim();
    let circ = derived::horizontal_circ(op(&hat, OpName::Rtri), op(&hat, OpName::Ltri));
    for i in 0..n {
        for j in 0..n {
            assert_eq!(op(&bt, OpName::Circ).product(i, j).slice(0, n), circ.product(i, j));
        }
    }

    let mut bent = mp.clone();
    let mut mats = bent.on_b.l.matrices().to_vec();
    mats[1][(0, 2)] = &mats[1][(0, 2)] + &Scalar::one();
    bent.on_b.l = rep::Action::new(mats[0].rows(), mats).unwrap();
    assert!(!constructions::check_matched_pair(&bent).unwrap().passed);
    assert!(constructions::bowtie(&bent).is_err());

    let p = alg("sl2_postlie");
    let empty = AlgebraSpec::new(0).with(OpName::Circ, Tensor3::zeros(0)).with(OpName::Bracket, Tensor3::zeros(0));
    let trivial = MatchedPair {
        a: p.clone(),
        b: empty,
        on_b: RepSpec::zero(3, 0),
        on_a: RepSpec::zero(0, 3),
    };
    assert!(constructions::check_matched_pair(&trivial).unwrap().passed);
    assert_eq!(op(&constructions::bowtie(&trivial).unwrap(), OpName::Circ), op(&p, OpName::Circ));

    let sl = sl2_pp();
    let mp = constructions::manin_matched_pair(&sl, &zero_pp(3)).unwrap();
    let bt = constructions::bowtie(&mp).unwrap();
    assert_eq!(bt.dim(), 6);
    assert!(checks::check_post_lie_default(&bt).unwrap().passed);
}

#[test]
fn three_way_agreement_on_corpus() {
    let hat = alg("ahat_pp");
    let computed = cybe::cobrackets_from_r(&hat, &mat("r6")).unwrap();
    let astar = coalgebra::dualize(&computed);
    let manin = constructions::manin_triple_build(&hat, &astar).unwrap().2.passed;
    let mp = constructions::check_matched_pair(&constructions::manin_matched_pair(&hat, &astar).unwrap())
        .unwrap()
        .passed;
    let bialg = coalgebra::check_pp_bialgebra(&hat, &computed).unwrap().passed;
    assert!(manin && mp && bialg);

    let reference = co("final_cobrackets");
    assert!(!coalgebra::check_pp_bialgebra(&hat, &reference).unwrap().passed);
}

#[test]
fn gph_constructions() {
    let p = alg("sl2_postlie");
    let k = mat("kappa");
    let pp = constructions::compatible_pp_from_gph(&p, &k).unwrap();
    assert!(checks::check_pp_post_lie(&pp).unwrap().passed);
    let circ = op(&p, OpName::Circ);
    assert_eq!(op(&derived::horizontal_post_lie(&pp).unwrap(), OpName::Circ), circ);

    let bullet = constructions::bullet_from_gph(&p, &k).unwrap();
    assert_eq!(op(&bullet, OpName::Circ), op(&derived::vertical_post_lie(&pp).unwrap(), OpName::Circ));
    assert_eq!(op(&bullet, OpName::Circ), circ);
    assert!(checks::check_post_lie_default(&bullet).unwrap().passed);
    assert!(forms::check_gph(&bullet, &k).unwrap().passed);

    let abelian = AlgebraSpec::new(3).with(OpName::Circ, Tensor3::zeros(3)).with(OpName::Bracket, Tensor3::zeros(3));
    let z = constructions::compatible_pp_from_gph(&abelian, &Matrix::identity(3)).unwrap();
    assert!(z.ops.values().all(Tensor3::is_zero));
    assert!(op(&constructions::bullet_from_gph(&abelian, &Matrix::identity(3)).unwrap(), OpName::Circ).is_zero());

    assert!(matches!(
        constructions::compatible_pp_from_gph(&p, &Matrix::zeros(3, 3)),
        Err(Error::Precondition { .. })
    ));
}

#[test]
fn compatible_structures_from_identity_operator() {
    let pp = sl2_pp();
    let horizontal = derived::horizontal_post_lie(&pp).unwrap();
    let coad = RepSpec::coadjoint_pp(op(&pp, OpName::Rtri), op(&pp, OpName::Ltri), op(&pp, OpName::Bracket));
    let id = Matrix::identity(3);
    assert!(oop::check_dual_p_o_operator(&horizontal, &coad, &id).unwrap().passed);
    let back = oop::compatible_pp_from_invertible(&horizontal, &coad, &id).unwrap();
    assert!(checks::check_pp_post_lie(&back).unwrap().passed);
    assert_eq!(
        op(&derived::horizontal_post_lie(&back).unwrap(), OpName::Circ),
        op(&horizontal, OpName::Circ)
    );
}

#[test]
fn pre_pp_from_operators() {
    let prepp = alg("final_prepp");
    let pp = alg("sl2_pp");
    let ad = PPRepSpec::adjoint_of(&pp).unwrap();

    let zero = oop::pre_pp_from_o_operator(&pp, &ad, &Matrix::zeros(3, 3)).unwrap();
    assert!(zero.ops.values().all(Tensor3::is_zero));
    let built = oop::pre_pp_from_o_operator(&pp, &ad, &mat("final_P")).unwrap();
    assert!(checks::check_pre_pp_post_lie(&built).unwrap().passed);
    assert!(matches!(
        oop::pre_pp_from_o_operator(&pp, &ad, &Matrix::identity(3)),
        Err(Error::Precondition { .. })
    ));

    let sub = final_sub();
    let from_pre = PPRepSpec::from_pre_pp(&prepp).unwrap();
    let same = oop::invertible_o_to_compatible_pre_pp(&sub, &from_pre, &Matrix::identity(3)).unwrap();
    assert_eq!(same.ops, prepp.ops);
    assert_eq!(derived::sub_adjacent_pp(&same).unwrap().ops, sub.ops);

    let sing = oop::invertible_o_to_compatible_pre_pp(&pp, &ad, &mat("final_P"));
    assert!(matches!(sing, Err(Error::Singular)));
}

#[test]
fn hom_embed_examples() {
    let sub = final_sub();
    let rep = PPRepSpec::from_pre_pp(&alg("final_prepp")).unwrap();
    let (hat, r) = constructions::hom_embed_r(&sub, &rep, &Matrix::identity(3)).unwrap();
    assert_eq!(hat.ops, alg("ahat_pp").ops);
    assert_eq!(r, mat("r6"));
    assert_eq!(r.transpose(), -&r);
    for i in 0..3 {
        assert_eq!(r[(3 + i, i)], Scalar::one());
        assert_eq!(r[(i, 3 + i)], Scalar::from_int(-1));
    }
    assert!(cybe::check_pppcybe(&hat, &r).unwrap().passed);

    let (_, r0) = constructions::hom_embed_r(&sub, &rep, &Matrix::zeros(3, 3)).unwrap();
    assert!(r0.is_zero());
    assert!(cybe::check_pppcybe(&hat, &r0).unwrap().passed);

    let mut bent = Matrix::identity(3);
    bent[(0, 1)] = Scalar::one();
    assert!(!oop::check_o_operator_pp(&sub, &rep, &bent).unwrap().passed);
    let (_, rb) = constructions::hom_embed_r(&sub, &rep, &bent).unwrap();
    assert!(!cybe::check_pppcybe(&hat, &rb).unwrap().passed);

    assert!(matches!(
        constructions::hom_embed_r(&sub, &rep, &Matrix::identity(2)),
        Err(Error::Dimension(_))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn doubles_are_gph(m in invertible(3)) {
        let pp = transport(&sl2_pp(), &m);
        let (dbl, bd) = constructions::double_construction(&pp).unwrap();
        prop_assert!(forms::check_gph(&dbl, &bd).unwrap().passed);
    }

    #[test]
    fn cybe_matches_o_operator(d in matrix(3, sparse_scalar())) {
        let sub = final_sub();
        let rep = PPRepSpec::from_pre_pp(&alg("final_prepp")).unwrap();
        let t = &Matrix::identity(3) + &d;
        let o = oop::check_o_operator_pp(&sub, &rep, &t).unwrap().passed;
        let (hat, r) = constructions::hom_embed_r(&sub, &rep, &t).unwrap();
        prop_assert_eq!(cybe::check_pppcybe(&hat, &r).unwrap().passed, o);
    }

    #[test]
    fn gph_compatible_structures_in_any_basis(m in invertible(3)) {
        let p = transport(&alg("sl2_postlie"), &m);
        let b = &(&m.transpose() * &mat("kappa")) * &m;
        let pp = constructions::compatible_pp_from_gph(&p, &b).unwrap();
        prop_assert!(checks::check_pp_post_lie(&pp).unwrap().passed);
        let (h, v) = (derived::horizontal_post_lie(&pp).unwrap(), derived::vertical_post_lie(&pp).unwrap());
        prop_assert_eq!(op(&h, OpName::Circ), op(&p, OpName::Circ));
        let bullet = constructions::bullet_from_gph(&p, &b).unwrap();
        prop_assert_eq!(op(&bullet, OpName::Circ), op(&v, OpName::Circ));
    }
}
