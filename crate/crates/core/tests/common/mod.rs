#![allow(dead_code)]

use proptest::prelude::*;

use pplie_core::coalgebra::CoalgebraSpec;
use pplie_core::corpus::Corpus;
use pplie_core::{AlgebraSpec, Matrix, Scalar, Tensor3, Vector};

pub fn alg(name: &str) -> AlgebraSpec {
    Corpus::bundled().get(name).unwrap().to_algebra().unwrap()
}

pub fn mat(name: &str) -> Matrix {
    Corpus::bundled().get(name).unwrap().matrix(None).unwrap().clone()
}

pub fn co(name: &str) -> CoalgebraSpec {
    Corpus::bundled().get(name).unwrap().to_coalgebra().unwrap()
}

pub fn s(text: &str) -> Scalar {
    text.parse().unwrap()
}

pub fn e(n: usize, i: usize) -> Vector {
    Vector::basis(n, i)
}

/// Vector from `(index, scalar)` pairs, 1-based.
pub fn v(n: usize, terms: &[(usize, &str)]) -> Vector {
    let mut out = Vector::zeros(n);
    for &(i, c) in terms {
        out[i - 1] = s(c);
    }
    out
}

/// The same algebra written in the basis given by the columns of `m`.
pub fn transport(alg: &AlgebraSpec, m: &Matrix) -> AlgebraSpec {
    let n = alg.dim();
    let inv = m.inverse().unwrap();
    let f: Vec<Vector> = (0..n).map(|j| m.col(j)).collect();
    let mut out = AlgebraSpec::with_basis(alg.basis.clone());
    out.field = alg.field;
    for (&name, t) in &alg.ops {
        out.insert(name, Tensor3::from_products(n, |i, j| inv.apply(&t.apply(&f[i], &f[j]))));
    }
    out
}

pub fn small_rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Scalar::frac(p, q))
}

pub fn small_scalar() -> impl Strategy<Value = Scalar> {
    (small_rational(), small_rational()).prop_map(|(a, b)| &a + &(&b * &Scalar::i()))
}

/// Mostly-sparse small Gaussian integers.
pub fn sparse_scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        3 => Just(Scalar::zero()),
        1 => (-2i64..=2, -1i64..=1).prop_map(|(a, b)| Scalar::gauss(a, 1, b, 1)),
    ]
}

pub fn matrix(n: usize, entry: impl Strategy<Value = Scalar>) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(entry, n * n).prop_map(move |d| Matrix::from_vec(n, n, d).unwrap())
}

pub fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    matrix(n, (-2i64..=2).prop_map(Scalar::from_int))
        .prop_map(move |m| &m + &Matrix::identity(n))
        .prop_filter("singular", |m| !m.det().unwrap().is_zero())
}

pub fn antisymmetric(n: usize) -> impl Strategy<Value = Matrix> {
    matrix(n, sparse_scalar()).prop_map(|m| &m - &m.transpose())
}

pub fn tensor(n: usize, entry: impl Strategy<Value = Scalar>) -> impl Strategy<Value = Tensor3> {
    proptest::collection::vec(entry, n * n * n)
        .prop_map(move |d| Tensor3::from_fn(n, |i, j, k| d[(i * n + j) * n + k].clone()))
}

/// Matrix of a bundled mutation fixture.
pub fn mutation_matrix(name: &str) -> Matrix {
    let (_, _, text) = pplie_core::corpus::MUTATIONS.iter().find(|(n, _, _)| *n == name).unwrap();
    pplie_core::io::Document::parse(text).unwrap().matrix(None).unwrap().clone()
}

/// Identity plus a sparse integer perturbation, kept invertible.
pub fn invertible_sparse(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(prop_oneof![4 => Just(0i64), 1 => -1i64..=1], n * n)
        .prop_map(move |d| &Matrix::identity(n) + &Matrix::from_vec(n, n, d.into_iter().map(Scalar::from_int).collect()).unwrap())
        .prop_filter("singular", |m| !m.det().unwrap().is_zero())
}

/// `r` written in the basis given by the columns of `m`.
pub fn transport_tensor(r: &Matrix, m: &Matrix) -> Matrix {
    let inv = m.inverse().unwrap();
    &(&inv * r) * &inv.transpose()
}
