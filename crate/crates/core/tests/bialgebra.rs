mod common;

use common::{alg, antisymmetric, co, invertible_sparse, mat, s, sparse_scalar, tensor, transport, transport_tensor};
use pplie_core::algebra::OpName;
use pplie_core::coalgebra::{self, CoName, CoalgebraSpec};
use pplie_core::{checks, cybe, AlgebraSpec, Error, Matrix, Scalar, Tensor3};
use proptest::prelude::*;

const COMAPS: [CoName; 3] = [CoName::DeltaRtri, CoName::DeltaLtri, CoName::Delta];

fn hat() -> AlgebraSpec {
    alg("ahat_pp")
}

fn r6() -> Matrix {
    mat("r6")
}

fn zero_co(n: usize) -> CoalgebraSpec {
    COMAPS.iter().fold(CoalgebraSpec::new(n), |c, &name| c.with(name, Tensor3::zeros(n)))
}

fn computed() -> CoalgebraSpec {
    cybe::cobrackets_from_r(&hat(), &r6()).unwrap()
}

fn lie_part(a: &AlgebraSpec) -> AlgebraSpec {
    a.select(&[OpName::Bracket]).unwrap()
}

#[test]
fn dualize_examples() {
    let z = coalgebra::dualize(&zero_co(3));
    assert!(z.ops.values().all(Tensor3::is_zero));
    assert_eq!(z.ops.len(), 3);

    let pp = alg("sl2_pp");
    assert_eq!(coalgebra::dualize(&coalgebra::dualize_alg(&pp)).ops, pp.ops);

    let c = computed();
    let d = coalgebra::dualize(&c);
    let big = c.comap(CoName::Delta).unwrap();
    let br = d.op(OpName::Bracket).unwrap();
    for i in 0..6 {
        for j in 0..6 {
            for k in 0..6 {
                assert_eq!(br.get(i, j, k), big.get(k, i, j));
            }
        }
    }
    assert!(checks::check_pp_post_lie(&d).unwrap().passed);
}

#[test]
fn lie_coalgebras() {
    let c = computed();
    let reference = co("final_cobrackets");
    assert_eq!(reference.comap(CoName::Delta).unwrap(), c.comap(CoName::Delta).unwrap());
    assert!(coalgebra::check_lie_coalgebra(&reference).unwrap().passed);
    assert!(coalgebra::check_lie_coalgebra(&zero_co(3)).unwrap().passed);

    let mut sym = Tensor3::zeros(3);
    sym.set(1, 0, 0, Scalar::one());
    let bad = CoalgebraSpec::new(3).with(CoName::Delta, sym);
    let r = coalgebra::check_lie_coalgebra(&bad).unwrap();
    assert!(!r.passed);
}

#[test]
fn lie_bialgebras() {
    let lie = lie_part(&alg("sl2_lie"));
    assert!(coalgebra::check_lie_bialgebra(&lie, &Tensor3::zeros(3)).unwrap().passed);

    let h = lie_part(&hat());
    let big = co("final_cobrackets").comap(CoName::Delta).unwrap().clone();
    assert!(coalgebra::check_lie_bialgebra(&h, &big).unwrap().passed);

    // Delta'(e2) = e3 (x) e1* - e1* (x) e3; flip the sign of one term
    assert_eq!(big.get(1, 2, 3), &Scalar::one());
    let mut flipped = big.clone();
    flipped.set(1, 2, 3, Scalar::from_int(-1));
    let r = coalgebra::check_lie_bialgebra(&h, &flipped).unwrap();
    assert!(!r.passed);
}

#[test]
fn pp_coalgebras() {
    assert!(coalgebra::check_pp_coalgebra(&zero_co(4)).passed);
    assert!(coalgebra::check_pp_coalgebra_direct(&zero_co(4)).passed);
    let dual = coalgebra::dualize_alg(&alg("sl2_pp"));
    assert!(coalgebra::check_pp_coalgebra(&dual).passed);
    assert!(coalgebra::check_pp_coalgebra_direct(&dual).passed);
    let c = computed();
    assert!(coalgebra::check_pp_coalgebra(&c).passed);
    assert!(coalgebra::check_pp_coalgebra_direct(&c).passed);
    let reference = co("final_cobrackets");
    assert_eq!(
        coalgebra::check_pp_coalgebra(&reference).passed,
        coalgebra::check_pp_coalgebra_direct(&reference).passed
    );
}

#[test]
fn pp_bialgebras() {
    let pp = alg("sl2_pp");
    assert!(coalgebra::check_pp_bialgebra(&pp, &zero_co(3)).unwrap().passed);
    assert!(coalgebra::check_pp_bialgebra(&hat(), &computed()).unwrap().passed);

    let reference = co("final_cobrackets");
    let r = coalgebra::check_pp_bialgebra(&hat(), &reference).unwrap();
    assert!(!r.passed);

    let mut negated = computed();
    negated.insert(CoName::DeltaRtri, -computed().comap(CoName::DeltaRtri).unwrap());
    assert!(!coalgebra::check_pp_bialgebra(&hat(), &negated).unwrap().passed);
}

#[test]
fn cybe_tensors() {
    let h = hat();
    assert!(cybe::cybe_c(&h, &Matrix::zeros(6, 6)).unwrap().is_zero());
    assert!(cybe::cybe_d(&h, &Matrix::zeros(6, 6)).unwrap().is_zero());
    assert!(cybe::cybe_c(&h, &r6()).unwrap().is_zero());
    assert!(cybe::cybe_d(&h, &r6()).unwrap().is_zero());
    assert!(cybe::check_pppcybe(&h, &r6()).unwrap().passed);

    let any = Matrix::from_fn(3, 3, |i, j| Scalar::from_int((i * 3 + j) as i64));
    let abelian = AlgebraSpec::new(3)
        .with(OpName::Rtri, Tensor3::zeros(3))
        .with(OpName::Ltri, Tensor3::zeros(3))
        .with(OpName::Bracket, Tensor3::zeros(3));
    assert!(cybe::cybe_c(&abelian, &any).unwrap().is_zero());
    assert!(cybe::cybe_d(&abelian, &any).unwrap().is_zero());

    let mut bent = r6();
    bent[(3, 1)] = Scalar::one();
    bent[(1, 3)] = Scalar::from_int(-1);
    assert!(!cybe::check_pppcybe(&h, &bent).unwrap().passed);
    assert!(cybe::check_pppcybe(&h, &r6().scale(&s("-2"))).unwrap().passed);
}

#[test]
fn cobracket_examples() {
    let h = hat();
    let zero = cybe::cobrackets_from_r(&h, &Matrix::zeros(6, 6)).unwrap();
    assert!(COMAPS.iter().all(|&c| zero.comap(c).unwrap().is_zero()));

    let c = computed();
    let reference = co("final_cobrackets");
    assert_eq!(c.comap(CoName::DeltaRtri).unwrap(), reference.comap(CoName::DeltaRtri).unwrap());
    assert_eq!(c.comap(CoName::Delta).unwrap(), reference.comap(CoName::Delta).unwrap());
    assert_eq!(c.comap(CoName::DeltaLtri).unwrap(), &-reference.comap(CoName::DeltaLtri).unwrap());
    // Delta'(e2) = e3 (x) e1* - e1* (x) e3
    let big = c.comap(CoName::Delta).unwrap();
    assert_eq!(big.get(1, 2, 3), &Scalar::one());
    assert_eq!(big.get(1, 3, 2), &Scalar::from_int(-1));

    // a central element with trivial actions has vanishing cobrackets
    let mut a = AlgebraSpec::new(2);
    for name in [OpName::Rtri, OpName::Ltri, OpName::Bracket] {
        a.insert(name, Tensor3::zeros(2));
    }
    let r = Matrix::from_rows(vec![vec![s("0"), s("1")], vec![s("-1"), s("0")]]).unwrap();
    let z = cybe::cobrackets_from_r(&a, &r).unwrap();
    assert!(COMAPS.iter().all(|&n| z.comap(n).unwrap().is_zero()));
}

#[test]
fn quasitriangular_conditions() {
    let h = hat();
    let r = cybe::check_quasitriangular_conditions(&h, &r6()).unwrap();
    assert!(r.passed, "{r}");
    assert!(cybe::check_quasitriangular_conditions(&h, &Matrix::zeros(6, 6)).unwrap().passed);

    let mut sym = Matrix::zeros(6, 6);
    sym[(1, 1)] = Scalar::one();
    let r = cybe::check_quasitriangular_conditions(&h, &sym).unwrap();
    assert!(!r.passed);
    let failed = r.failed_ids();
    for id in ["invldl-E", "invldl-F", "invldl-G"] {
        assert!(failed.contains(&id), "{failed:?}");
    }
}

#[test]
fn operator_form() {
    let h = hat();
    assert!(cybe::operator_form_check(&h, &r6()).unwrap().passed);
    assert!(cybe::operator_form_check(&h, &Matrix::zeros(6, 6)).unwrap().passed);
    assert_eq!(cybe::r_tilde(&r6()), r6().transpose());
    let not_anti = Matrix::identity(6);
    assert!(matches!(cybe::operator_form_check(&h, &not_anti), Err(Error::Precondition { .. } | Error::Invalid(_))));
}

fn near_r6() -> impl Strategy<Value = Matrix> {
    prop_oneof![
        1 => Just(Matrix::zeros(6, 6)),
        2 => antisymmetric(6),
    ]
    .prop_flat_map(|d| (Just(d), -2i64..=2))
    .prop_map(|(d, k)| &r6().scale(&Scalar::from_int(k)) + &d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn direct_and_dual_coalgebra_checks_agree(d in proptest::collection::vec(tensor(3, sparse_scalar()), 3)) {
        let mut c = CoalgebraSpec::new(3);
        for (name, t) in COMAPS.iter().zip(d) {
            c.insert(*name, t);
        }
        prop_assert_eq!(coalgebra::check_pp_coalgebra(&c).passed, coalgebra::check_pp_coalgebra_direct(&c).passed);
    }

    #[test]
    fn direct_and_dual_agree_on_passing_coalgebras(m in invertible_sparse(3)) {
        let c = coalgebra::dualize_alg(&transport(&alg("sl2_pp"), &m));
        prop_assert!(coalgebra::check_pp_coalgebra(&c).passed);
        prop_assert!(coalgebra::check_pp_coalgebra_direct(&c).passed);
    }

    #[test]
    fn solutions_give_bialgebras(m in invertible_sparse(6), k in (-3i64..=3).prop_filter("zero", |k| *k != 0)) {
        let h = transport(&hat(), &m);
        let r = transport_tensor(&r6().scale(&Scalar::from_int(k)), &m);
        prop_assert!(cybe::check_pppcybe(&h, &r).unwrap().passed);
        prop_assert!(cybe::check_quasitriangular_conditions(&h, &r).unwrap().passed);
        let c = cybe::cobrackets_from_r(&h, &r).unwrap();
        prop_assert!(coalgebra::check_pp_bialgebra(&h, &c).unwrap().passed);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn tensor_and_operator_forms_agree(r in near_r6()) {
        let h = hat();
        prop_assert_eq!(cybe::check_pppcybe(&h, &r).unwrap().passed, cybe::operator_form_check(&h, &r).unwrap().passed);
        let minus_flip = -&r.transpose();
        prop_assert_eq!(cybe::cobrackets_from_r(&h, &r).unwrap(), cybe::cobrackets_from_r(&h, &minus_flip).unwrap());
    }

    #[test]
    fn tensor_and_operator_forms_agree_on_sl2(r in antisymmetric(3)) {
        let pp = alg("sl2_pp");
        prop_assert_eq!(cybe::check_pppcybe(&pp, &r).unwrap().passed, cybe::operator_form_check(&pp, &r).unwrap().passed);
    }

    #[test]
    fn dualize_roundtrip(t in proptest::collection::vec(tensor(3, sparse_scalar()), 3)) {
        let mut c = CoalgebraSpec::new(3);
        for (name, d) in COMAPS.iter().zip(t) {
            c.insert(*name, d);
        }
        prop_assert_eq!(&coalgebra::dualize_alg(&coalgebra::dualize(&c)), &c);
    }
}
