mod common;

use common::{invertible, matrix, s, small_rational, small_scalar};
use pplie_core::{Error, Matrix, Scalar};
use proptest::prelude::*;

#[test]
fn arithmetic_examples() {
    assert_eq!(&s("1/2+1/2i") * &s("1/2-1/2i"), s("1/2"));
    assert_eq!(&Scalar::i() * &Scalar::i(), s("-1"));
    let q = s("-1/2i").checked_div(&s("1/2")).unwrap();
    assert_eq!(q, s("-i"));
    assert_eq!(&q * &s("1/2"), s("-1/2i"));
    assert!(matches!(s("3").checked_div(&Scalar::zero()), Err(Error::DivisionByZero)));
}

#[test]
fn solve_and_det_examples() {
    let kappa = Matrix::scalar(3, s("-2"));
    assert_eq!(kappa.solve(&Matrix::identity(3)).unwrap(), Matrix::scalar(3, s("-1/2")));
    assert_eq!(kappa.det().unwrap(), s("-8"));
    assert_eq!(Matrix::identity(3).det().unwrap(), Scalar::one());
    assert_eq!(Matrix::zeros(3, 3).det().unwrap(), Scalar::zero());
    let rank1 = Matrix::from_rows(vec![vec![s("1"), s("2")], vec![s("2"), s("4")]]).unwrap();
    assert!(matches!(rank1.solve(&Matrix::identity(2)), Err(Error::Singular)));
    assert!(matches!(Matrix::zeros(2, 3).det(), Err(Error::NotSquare { .. })));
    assert!(Matrix::identity(2).solve(&Matrix::identity(3)).is_err());
}

#[test]
fn canonical_grammar() {
    for text in ["0", "-1/2", "i", "-i", "1/2-1/2i", "3+2i", "-7/3i", "5"] {
        assert_eq!(s(text).to_string(), text);
    }
    assert_eq!(s("2/4").to_string(), "1/2");
    assert_eq!(s("0+1i").to_string(), "i");
    for bad in ["", "+1", "1/0", "1/-2", "i+1", "1+", "abc", "1/2/3", "--1", "1++i"] {
        assert!(bad.parse::<Scalar>().is_err(), "{bad:?} accepted");
    }
}

proptest! {
    #[test]
    fn field_axioms(a in small_scalar(), b in small_scalar(), c in small_scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, Scalar::zero());
    }

    #[test]
    fn inverses(a in small_scalar()) {
        match a.inv() {
            Some(inv) => prop_assert_eq!(&a * &inv, Scalar::one()),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn division_roundtrip(a in small_scalar(), b in small_scalar()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a);
    }

    #[test]
    fn format_parse_roundtrip(a in small_scalar()) {
        let text = a.to_string();
        let back: Scalar = text.parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn real_scalars_are_real(a in small_rational()) {
        prop_assert!(a.is_real());
        prop_assert!(!a.to_string().contains('i'));
    }

    #[test]
    fn solve_inverts(m in invertible(3)) {
        let inv = m.solve(&Matrix::identity(3)).unwrap();
        prop_assert_eq!(&inv * &m, Matrix::identity(3));
        prop_assert_eq!(&m * &inv, Matrix::identity(3));
    }

    #[test]
    fn det_is_multiplicative(a in matrix(3, small_scalar()), b in matrix(3, small_scalar())) {
        let ab = &a * &b;
        prop_assert_eq!(ab.det().unwrap(), &a.det().unwrap() * &b.det().unwrap());
    }

    #[test]
    fn det_zero_iff_singular(m in matrix(3, (-1i64..=1).prop_map(Scalar::from_int))) {
        let singular = m.inverse().is_err();
        prop_assert_eq!(singular, m.det().unwrap().is_zero());
    }
}
