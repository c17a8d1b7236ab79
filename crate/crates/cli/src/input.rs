//! Loading command-line inputs.

use std::path::Path;

use pplie_core::algebra::OpName;
use pplie_core::coalgebra::CoalgebraSpec;
use pplie_core::corpus;
use pplie_core::io::Document;
use pplie_core::rep::{self, PPRepSpec, RepSpec};
use pplie_core::{AlgebraSpec, Matrix};

use crate::Failure;

/// A file path, or the name of a bundled fixture.
pub fn document(arg: &str) -> Result<Document, Failure> {
    let path = Path::new(arg);
    if path.exists() {
        return Ok(Document::load(path)?);
    }
    let name = arg.strip_suffix(".txt").unwrap_or(arg);
    match corpus::source(name) {
        Some(text) => Ok(Document::parse(text)?),
        None => Err(Failure::usage(format!("{arg}: no such file or corpus entry"))),
    }
}

pub fn algebra(arg: &str) -> Result<AlgebraSpec, Failure> {
    Ok(document(arg)?.to_algebra()?)
}

pub fn coalgebra(arg: &str) -> Result<CoalgebraSpec, Failure> {
    Ok(document(arg)?.to_coalgebra()?)
}

pub fn matrix(arg: &str) -> Result<Matrix, Failure> {
    Ok(document(arg)?.matrix(None)?.clone())
}

/// The matrix of a map document plus its `weight` scalar, if any.
pub fn map_with_weight(arg: &str) -> Result<(Matrix, Option<pplie_core::Scalar>), Failure> {
    let doc = document(arg)?;
    Ok((doc.matrix(None)?.clone(), doc.scalar("weight").cloned()))
}

/// A post-Lie representation: a bundle file, `adjoint`, or `coadjoint` (pp input).
pub fn post_lie_rep(arg: &str, alg: &AlgebraSpec) -> Result<RepSpec, Failure> {
    match arg {
        "adjoint" => Ok(RepSpec::adjoint(alg.op(OpName::Circ)?, alg.op(OpName::Bracket)?)),
        "coadjoint" => Ok(RepSpec::coadjoint_pp(
            alg.op(OpName::Rtri)?,
            alg.op(OpName::Ltri)?,
            alg.op(OpName::Bracket)?,
        )),
        _ => Ok(document(arg)?.to_rep()?),
    }
}

/// A pp-post-Lie representation: a bundle file, `adjoint`, or `coadjoint`.
pub fn pp_rep(arg: &str, alg: &AlgebraSpec) -> Result<PPRepSpec, Failure> {
    match arg {
        "adjoint" => Ok(PPRepSpec::adjoint_of(alg)?),
        "coadjoint" => Ok(rep::dual_pp_rep(alg, &PPRepSpec::adjoint_of(alg)?)?),
        _ => Ok(document(arg)?.to_pp_rep()?),
    }
}

/// Exactly `n` arguments.
pub fn arity<'a>(files: &'a [String], n: usize, what: &str) -> Result<&'a [String], Failure> {
    if files.len() != n {
        return Err(Failure::usage(format!("expected {n} inputs ({what}), got {}", files.len())));
    }
    Ok(files)
}
