use clap::ValueEnum;
use pplie_core::algebra::OpName;
use pplie_core::coalgebra::{self, CoName};
use pplie_core::constructions::{self, MatchedPair};
use pplie_core::{checks, cybe, forms, oop, rep, CheckReport, Scalar};

use crate::input::{self, arity};
use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Lie,
    PreLie,
    PostLie,
    Pp,
    PrePp,
    LDendriform,
    Rep,
    PpRep,
    Rb,
    OOp,
    DualPO,
    Strong,
    InvariantForm,
    Gph,
    LieCoalg,
    PpCoalg,
    LieBialg,
    PpBialg,
    MatchedPair,
    ManinTriple,
    Cybe,
    Quasi,
    OpForm,
}

pub struct Options {
    pub op: Option<String>,
    pub weight: Option<String>,
    pub direct: bool,
}

fn op_name(opts: &Options, default: OpName) -> Result<OpName, Failure> {
    match &opts.op {
        Some(s) => Ok(s.parse()?),
        None => Ok(default),
    }
}

pub fn run(kind: CheckKind, files: &[String], opts: &Options) -> Result<CheckReport, Failure> {
    use CheckKind::*;
    let report = match kind {
        Lie => {
            let f = arity(files, 1, "algebra")?;
            checks::check_lie(&input::algebra(&f[0])?, op_name(opts, OpName::Bracket)?)?
        }
        PreLie => {
            let f = arity(files, 1, "algebra")?;
            let alg = input::algebra(&f[0])?;
            let default = if alg.has(OpName::Dot) { OpName::Dot } else { OpName::Circ };
            checks::check_pre_lie(&alg, op_name(opts, default)?)?
        }
        PostLie => checks::check_post_lie_default(&input::algebra(&arity(files, 1, "algebra")?[0])?)?,
        Pp => checks::check_pp_post_lie(&input::algebra(&arity(files, 1, "algebra")?[0])?)?,
        PrePp => checks::check_pre_pp_post_lie(&input::algebra(&arity(files, 1, "algebra")?[0])?)?,
        LDendriform => checks::check_l_dendriform(&input::algebra(&arity(files, 1, "algebra")?[0])?)?,
        Rep => {
            let f = arity(files, 2, "algebra, representation")?;
            let alg = input::algebra(&f[0])?;
            rep::check_post_lie_rep(&alg, &input::post_lie_rep(&f[1], &alg)?)?
        }
        PpRep => {
            let f = arity(files, 2, "algebra, representation")?;
            let alg = input::algebra(&f[0])?;
            rep::check_pp_rep(&alg, &input::pp_rep(&f[1], &alg)?)?
        }
        Rb => {
            let f = arity(files, 2, "Lie algebra, map")?;
            let alg = input::algebra(&f[0])?;
            let (p, doc_weight) = input::map_with_weight(&f[1])?;
            let weight = match &opts.weight {
                Some(w) => w.parse::<Scalar>()?,
                None => doc_weight.unwrap_or_else(Scalar::one),
            };
            forms::check_rota_baxter_lie(&alg, &p, &weight)?
        }
        OOp => {
            let f = arity(files, 3, "pp-post-Lie algebra, representation, map")?;
            let alg = input::algebra(&f[0])?;
            oop::check_o_operator_pp(&alg, &input::pp_rep(&f[1], &alg)?, &input::matrix(&f[2])?)?
        }
        DualPO | Strong => {
            let f = arity(files, 3, "post-Lie algebra, representation, map")?;
            let alg = input::algebra(&f[0])?;
            let rep = input::post_lie_rep(&f[1], &alg)?;
            let t = input::matrix(&f[2])?;
            if kind == DualPO {
                oop::check_dual_p_o_operator(&alg, &rep, &t)?
            } else {
                oop::check_strong(&alg, &rep, &t)?
            }
        }
        InvariantForm | Gph => {
            let f = arity(files, 2, "post-Lie algebra, form")?;
            let (alg, b) = (input::algebra(&f[0])?, input::matrix(&f[1])?);
            if kind == Gph {
                forms::check_gph(&alg, &b)?
            } else {
                forms::check_invariant_form(&alg, &b)?
            }
        }
        LieCoalg => coalgebra::check_lie_coalgebra(&input::coalgebra(&arity(files, 1, "coalgebra")?[0])?)?,
        PpCoalg => {
            let co = input::coalgebra(&arity(files, 1, "coalgebra")?[0])?;
            if opts.direct {
                coalgebra::check_pp_coalgebra_direct(&co)
            } else {
                coalgebra::check_pp_coalgebra(&co)
            }
        }
        LieBialg => {
            let f = arity(files, 2, "Lie algebra, coalgebra")?;
            let co = input::coalgebra(&f[1])?;
            coalgebra::check_lie_bialgebra(&input::algebra(&f[0])?, co.comap(CoName::Delta)?)?
        }
        PpBialg => {
            let f = arity(files, 2, "pp-post-Lie algebra, coalgebra")?;
            coalgebra::check_pp_bialgebra(&input::algebra(&f[0])?, &input::coalgebra(&f[1])?)?
        }
        MatchedPair => constructions::check_matched_pair(&matched_pair(files)?)?,
        ManinTriple => {
            let f = arity(files, 2, "pp-post-Lie algebras on A and A*")?;
            constructions::manin_triple_build(&input::algebra(&f[0])?, &input::algebra(&f[1])?)?.2
        }
        Cybe | Quasi | OpForm => {
            let f = arity(files, 2, "pp-post-Lie algebra, tensor")?;
            let (alg, r) = (input::algebra(&f[0])?, input::matrix(&f[1])?);
            match kind {
                Cybe => cybe::check_pppcybe(&alg, &r)?,
                Quasi => cybe::check_quasitriangular_conditions(&alg, &r)?,
                _ => cybe::operator_form_check(&alg, &r)?,
            }
        }
    };
    Ok(report)
}

/// `A B on-B on-A`: two post-Lie algebras and the action bundles of each on the other.
pub fn matched_pair(files: &[String]) -> Result<MatchedPair, Failure> {
    let f = arity(files, 4, "A, B, action of A on B, action of B on A")?;
    let a = input::algebra(&f[0])?;
    let b = input::algebra(&f[1])?;
    Ok(MatchedPair {
        on_b: input::document(&f[2])?.to_rep()?,
        on_a: input::document(&f[3])?.to_rep()?,
        a,
        b,
    })
}
