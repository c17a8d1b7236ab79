use clap::ValueEnum;
use pplie_core::algebra::OpName;
use pplie_core::coalgebra::{self, CoName};
use pplie_core::constructions;
use pplie_core::io::{Document, Kind};
use pplie_core::{checks, cybe, derived, forms, oop, AlgebraSpec, CheckReport};

use crate::check::matched_pair;
use crate::input::{self, arity};
use crate::{render, Failure, Verbosity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    SubAdjacent,
    Horizontal,
    Vertical,
    Transpose,
    Opposite,
    Induced,
    Semidirect,
    SemidirectPp,
    Bowtie,
    Double,
    Manin,
    PpFromGph,
    BulletFromGph,
    PrePpFromO,
    EmbedR,
    CobracketsFromR,
    Dualize,
}

fn with_matrix(alg: &AlgebraSpec, name: &str, m: &pplie_core::Matrix) -> Document {
    let mut doc = Document::from_algebra(alg);
    doc.kind = Kind::Bundle;
    doc.matrices.insert(name.to_string(), m.clone());
    doc
}

fn one_algebra(files: &[String], what: &str) -> Result<AlgebraSpec, Failure> {
    input::algebra(&arity(files, 1, what)?[0])
}

pub fn run(c: Construction, files: &[String]) -> Result<Document, Failure> {
    use Construction::*;
    let mut doc = match c {
        SubAdjacent => {
            let alg = one_algebra(files, "post-Lie or pre-pp-post-Lie algebra")?;
            let out = if alg.has(OpName::Se) {
                derived::sub_adjacent_pp(&alg)?
            } else {
                derived::sub_adjacent_lie(&alg)?
            };
            Document::from_algebra(&out)
        }
        Horizontal => Document::from_algebra(&derived::horizontal_post_lie(&one_algebra(files, "pp-post-Lie algebra")?)?),
        Vertical => Document::from_algebra(&derived::vertical_post_lie(&one_algebra(files, "pp-post-Lie algebra")?)?),
        Transpose => Document::from_algebra(&derived::transpose_pp(&one_algebra(files, "pp-post-Lie algebra")?)?),
        Opposite => Document::from_algebra(&derived::opposite_post_lie(&one_algebra(files, "post-Lie algebra")?)?),
        Induced => {
            let f = arity(files, 2, "Lie algebra, weight-one Rota-Baxter operator")?;
            Document::from_algebra(&forms::induced_post_lie(&input::algebra(&f[0])?, &input::matrix(&f[1])?)?)
        }
        Semidirect => {
            let f = arity(files, 2, "post-Lie algebra, representation")?;
            let alg = input::algebra(&f[0])?;
            let rep = input::post_lie_rep(&f[1], &alg)?;
            Document::from_algebra(&constructions::semidirect_post_lie(&alg, &rep)?)
        }
        SemidirectPp => {
            let f = arity(files, 2, "pp-post-Lie algebra, representation")?;
            let alg = input::algebra(&f[0])?;
            let rep = input::pp_rep(&f[1], &alg)?;
            Document::from_algebra(&constructions::semidirect_pp(&alg, &rep)?)
        }
        Bowtie => Document::from_algebra(&constructions::bowtie(&matched_pair(files)?)?),
        Double => {
            let (alg, bd) = constructions::double_construction(&one_algebra(files, "pp-post-Lie algebra")?)?;
            with_matrix(&alg, "B", &bd)
        }
        Manin => {
            let f = arity(files, 2, "pp-post-Lie algebras on A and A*")?;
            let (alg, bd, report) = constructions::manin_triple_build(&input::algebra(&f[0])?, &input::algebra(&f[1])?)?;
            if !report.passed {
                return Err(Failure {
                    code: 1,
                    message: format!("not a Manin triple\n{}", render(&report, Verbosity::from_env())),
                });
            }
            with_matrix(&alg, "B", &bd)
        }
        PpFromGph | BulletFromGph => {
            let f = arity(files, 2, "post-Lie algebra, form")?;
            let (alg, b) = (input::algebra(&f[0])?, input::matrix(&f[1])?);
            let out = if c == PpFromGph {
                constructions::compatible_pp_from_gph(&alg, &b)?
            } else {
                constructions::bullet_from_gph(&alg, &b)?
            };
            Document::from_algebra(&out)
        }
        PrePpFromO => {
            let f = arity(files, 3, "pp-post-Lie algebra, representation, O-operator")?;
            let alg = input::algebra(&f[0])?;
            let rep = input::pp_rep(&f[1], &alg)?;
            Document::from_algebra(&oop::pre_pp_from_o_operator(&alg, &rep, &input::matrix(&f[2])?)?)
        }
        EmbedR => {
            let f = arity(files, 3, "pp-post-Lie algebra, representation, map")?;
            let alg = input::algebra(&f[0])?;
            let rep = input::pp_rep(&f[1], &alg)?;
            let (hat, r) = constructions::hom_embed_r(&alg, &rep, &input::matrix(&f[2])?)?;
            with_matrix(&hat, "r", &r)
        }
        CobracketsFromR => {
            let f = arity(files, 2, "pp-post-Lie algebra, tensor")?;
            Document::from_coalgebra(&cybe::cobrackets_from_r(&input::algebra(&f[0])?, &input::matrix(&f[1])?)?)
        }
        Dualize => {
            let d = input::document(&arity(files, 1, "algebra or coalgebra")?[0])?;
            if d.comaps.is_empty() {
                Document::from_coalgebra(&coalgebra::dualize_alg(&d.to_algebra()?))
            } else {
                Document::from_algebra(&coalgebra::dualize(&d.to_coalgebra()?))
            }
        }
    };
    doc.field = doc.field.join(doc.minimal_field());
    let report = validate(&doc)?;
    if !report.passed {
        return Err(Failure {
            code: 1,
            message: format!("derived structure failed validation\n{}", render(&report, Verbosity::from_env())),
        });
    }
    Ok(doc)
}

/// Re-checks a derived document against the axioms its products suggest.
pub fn validate(doc: &Document) -> Result<CheckReport, Failure> {
    let mut reports = Vec::new();
    if !doc.comaps.is_empty() {
        let co = doc.to_coalgebra()?;
        if doc.comaps.len() == 3 {
            reports.push(coalgebra::check_pp_coalgebra(&co));
        } else if doc.comaps.contains_key(&CoName::Delta) {
            reports.push(coalgebra::check_lie_coalgebra(&co)?);
        }
    }
    if !doc.ops.is_empty() {
        let alg = doc.to_algebra()?;
        let has = |op| alg.has(op);
        if has(OpName::Se) {
            reports.push(checks::check_pre_pp_post_lie(&alg)?);
        } else if has(OpName::Rtri) && has(OpName::Ltri) {
            reports.push(checks::check_pp_post_lie(&alg)?);
        } else if has(OpName::Circ) && has(OpName::Bracket) {
            reports.push(checks::check_post_lie_default(&alg)?);
            if let Ok(b) = doc.matrix(Some("B")) {
                reports.push(forms::check_gph(&alg, b)?);
            }
        } else if has(OpName::Bracket) {
            reports.push(checks::check_lie(&alg, OpName::Bracket)?);
        }
    }
    Ok(CheckReport::all(reports))
}
