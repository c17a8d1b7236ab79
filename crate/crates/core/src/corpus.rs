//! The bundled sl(2) fixtures.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::io::Document;

macro_rules! fixture {
    ($name:literal) => {
        ($name, include_str!(concat!("../corpus/", $name, ".txt")))
    };
}

/// Fixtures consumed by the acceptance pipeline.
pub const FIXTURES: [(&str, &str); 10] = [
    fixture!("sl2_lie"),
    fixture!("kappa"),
    fixture!("sl2_P"),
    fixture!("sl2_postlie"),
    fixture!("sl2_pp"),
    fixture!("final_P"),
    fixture!("final_prepp"),
    fixture!("ahat_pp"),
    fixture!("r6"),
    fixture!("final_cobrackets"),
];

/// Mutated copies, each paired with the fixture it replaces.
pub const MUTATIONS: [(&str, &str, &str); 4] = [
    ("sl2_P_mutated", "sl2_P", include_str!("../corpus/sl2_P_mutated.txt")),
    ("kappa_perturbed", "kappa", include_str!("../corpus/kappa_perturbed.txt")),
    ("sl2_pp_broken", "sl2_pp", include_str!("../corpus/sl2_pp_broken.txt")),
    ("r6_flipped", "r6", include_str!("../corpus/r6_flipped.txt")),
];

/// Named documents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub docs: BTreeMap<String, Document>,
}

impl Corpus {
    pub fn bundled() -> Self {
        let docs = FIXTURES
            .iter()
            .map(|(name, text)| {
                let doc = Document::parse(text).unwrap_or_else(|e| panic!("bundled fixture {name}: {e}"));
                (name.to_string(), doc)
            })
            .collect();
        Corpus { docs }
    }

    /// Bundled fixtures with `<name>.txt` files from `dir` taking precedence.
    pub fn with_dir(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref();
        if !dir.is_dir() {
            return Err(Error::Invalid(format!("{} is not a directory", dir.display())));
        }
        let mut c = Corpus::bundled();
        for (name, _) in FIXTURES {
            let path = dir.join(format!("{name}.txt"));
            if path.exists() {
                c.docs.insert(name.to_string(), Document::load(&path)?);
            }
        }
        Ok(c)
    }

    /// The bundled corpus with one mutation applied.
    pub fn mutated(mutation: &str) -> Result<Self> {
        let (_, target, text) = MUTATIONS
            .iter()
            .find(|(name, _, _)| *name == mutation)
            .ok_or_else(|| Error::Invalid(format!("unknown mutation `{mutation}`")))?;
        let mut c = Corpus::bundled();
        c.docs.insert(target.to_string(), Document::parse(text)?);
        Ok(c)
    }

    pub fn get(&self, name: &str) -> Result<&Document> {
        self.docs
            .get(name)
            .ok_or_else(|| Error::Invalid(format!("corpus has no `{name}`")))
    }

    /// Writes every document in canonical form to `dir`.
    pub fn export(&self, dir: impl AsRef<Path>) -> Result<()> {
        let dir = dir.as_ref();
        fs::create_dir_all(dir).map_err(|e| Error::Invalid(format!("{}: {e}", dir.display())))?;
        for (name, doc) in &self.docs {
            doc.save(dir.join(format!("{name}.txt")))?;
        }
        Ok(())
    }
}

/// Source text of a bundled fixture or mutation.
pub fn source(name: &str) -> Option<&'static str> {
    FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .or_else(|| MUTATIONS.iter().find(|(n, _, _)| *n == name).map(|(_, _, t)| *t))
}
