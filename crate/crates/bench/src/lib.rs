//! Fixture loading shared by the benchmarks.

use pplie_core::corpus::Corpus;
use pplie_core::{AlgebraSpec, Matrix};

pub fn algebra(name: &str) -> AlgebraSpec {
    Corpus::bundled().get(name).and_then(|d| d.to_algebra()).expect("bundled algebra")
}

pub fn matrix(name: &str) -> Matrix {
    Corpus::bundled().get(name).and_then(|d| d.matrix(None).cloned()).expect("bundled matrix")
}
