mod common;

use common::{alg, small_scalar, tensor};
use pplie_core::algebra::OpName;
use pplie_core::corpus::{self, Corpus};
use pplie_core::io::{Document, Kind};
use pplie_core::scalar::Field;
use pplie_core::{AlgebraSpec, Error, Matrix, Scalar, Tensor3};
use proptest::prelude::*;

fn parse_err(text: &str) -> String {
    match Document::parse(text) {
        Err(Error::Parse(msg)) => msg,
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn corpus_roundtrips() {
    for (name, text) in corpus::FIXTURES.iter().copied().chain(corpus::MUTATIONS.iter().map(|(n, _, t)| (*n, *t))) {
        let doc = Document::parse(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let rendered = doc.render();
        let back = Document::parse(&rendered).unwrap();
        assert_eq!(back, doc, "{name}");
        assert_eq!(back.render(), rendered, "{name}");
    }
}

#[test]
fn corpus_postlie_tables() {
    let p = alg("sl2_postlie");
    assert_eq!(p.basis, ["e1", "e2", "e3"]);
    let circ = p.op(OpName::Circ).unwrap();
    assert_eq!(circ.get(1, 1, 0), &"-1/2i".parse::<Scalar>().unwrap());
    assert_eq!(p.op(OpName::Bracket).unwrap().get(0, 1, 2), &Scalar::one());
    assert_eq!(p.field, Field::Qi);
}

#[test]
fn save_and_load() {
    let dir = std::env::temp_dir().join(format!("pplie-io-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let doc = Corpus::bundled().get("final_prepp").unwrap().clone();
    let path = dir.join("final_prepp.txt");
    doc.save(&path).unwrap();
    assert_eq!(Document::load(&path).unwrap(), doc);

    Corpus::bundled().export(&dir).unwrap();
    let reread = Corpus::with_dir(&dir).unwrap();
    for (name, _) in corpus::FIXTURES {
        assert_eq!(reread.get(name).unwrap(), Corpus::bundled().get(name).unwrap());
    }
    assert!(Document::load(dir.join("missing.txt")).is_err());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn empty_algebra_roundtrip() {
    let a = AlgebraSpec::new(0).with(OpName::Bracket, Tensor3::zeros(0));
    let doc = Document::from_algebra(&a);
    let text = doc.render();
    let back = Document::parse(&text).unwrap();
    assert_eq!(back.dim(), 0);
    assert_eq!(back.to_algebra().unwrap().ops, a.ops);
}

#[test]
fn parse_errors_carry_positions() {
    let bad = "kind algebra\nfield Q\ndim 2\nbasis a b\nop bracket\n1 2 = 1/0\n";
    let msg = parse_err(bad);
    assert!(msg.starts_with("line 6, column "), "{msg}");

    let msg = parse_err("kind algebra\nfield Q\ndim 2\nbasis a b\nop bracket\n1 3 = 1\n");
    assert!(msg.starts_with("line 6"), "{msg}");

    let msg = parse_err("kind widget\n");
    assert!(msg.starts_with("line 1"), "{msg}");

    let msg = parse_err("kind algebra\nfield Q\ndim 2\nbasis a b\nop bracket\n1 2 = i\n");
    assert!(msg.contains("line 6"), "{msg}");

    let msg = parse_err("kind algebra\nfield Q\ndim 2\nbasis a b c\n");
    assert!(msg.starts_with("line 4"), "{msg}");

    assert!(Document::parse("kind algebra\nfield Q\ndim 1\nbasis a\nop frobnicate\n").is_err());
}

#[test]
fn comments_and_defaults() {
    let text = "# header\nkind map\nfield Q\ndim 2\nbasis x y\n\nmatrix P 2 2 # trailing\n1 1 = 1\n2 1 = -3/4\n";
    let doc = Document::parse(text).unwrap();
    assert_eq!(doc.kind, Kind::Map);
    let p = doc.matrix(None).unwrap();
    assert_eq!(p[(1, 0)], "-3/4".parse().unwrap());
    assert!(p[(0, 1)].is_zero());
}

#[test]
fn kind_round_trip() {
    for kind in [Kind::Algebra, Kind::Form, Kind::Map, Kind::Tensor2, Kind::Coalgebra, Kind::Bundle] {
        assert_eq!(kind.to_string().parse::<Kind>().unwrap(), kind);
    }
}

#[test]
fn matrix_documents() {
    let m = Matrix::from_fn(2, 3, |i, j| Scalar::gauss((i + j) as i64, 2, 1, 3));
    let doc = Document::from_matrix(Kind::Map, "T", vec!["a".into(), "b".into()], &m);
    let back = Document::parse(&doc.render()).unwrap();
    assert_eq!(back.matrix(Some("T")).unwrap(), &m);
    assert_eq!(back.minimal_field(), Field::Qi);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn algebra_documents_roundtrip(circ in tensor(3, small_scalar()), br in tensor(3, small_scalar())) {
        let a = AlgebraSpec::new(3).with(OpName::Circ, circ).with(OpName::Bracket, br);
        let mut doc = Document::from_algebra(&a);
        doc.field = doc.minimal_field();
        let text = doc.render();
        let back = Document::parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.render(), text);
        prop_assert_eq!(back.to_algebra().unwrap().ops, a.ops);
    }
}
