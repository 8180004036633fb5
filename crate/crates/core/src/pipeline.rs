//! The loaded data a translation needs: key tables, lexicon, simplification
//! and correction rules.

use std::path::{Path, PathBuf};

use crate::encoder::{self, EncodeError, EncodedStream, SimplificationRules};
use crate::keytable::{KeyRealizationTable, KeyTables};
use crate::lexicon::Lexicon;
use crate::rules::CorrectionRules;
use crate::Error;

/// Environment variable naming the default data directory.
pub const DATA_DIR_ENV: &str = "PUCCI_DATA_DIR";

pub const KEYS_FILE: &str = "keys.tsv";
pub const LEXICON_FILE: &str = "lexicon.tsv";
pub const SIMPLIFY_FILE: &str = "simplify.tsv";
pub const CORRECTIONS_FILE: &str = "corrections.tsv";

const KEYS: &str = include_str!("../data/keys.tsv");
const LEXICON: &str = include_str!("../data/lexicon.tsv");
const SIMPLIFY: &str = include_str!("../data/simplify.tsv");
const CORRECTIONS: &str = include_str!("../data/corrections.tsv");

#[derive(Debug, Clone)]
pub struct Pipeline {
    pub keys: KeyTables,
    pub lexicon: Lexicon,
    pub simplification: SimplificationRules,
    pub corrections: CorrectionRules,
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

impl Pipeline {
    /// The data shipped inside the crate.
    pub fn embedded() -> Result<Self, Error> {
        Ok(Pipeline {
            keys: KeyTables::parse(KEYS)?,
            lexicon: Lexicon::parse(LEXICON)?,
            simplification: SimplificationRules::parse(SIMPLIFY)?,
            corrections: CorrectionRules::parse(CORRECTIONS)?,
        })
    }

    /// Load from a directory; a missing file falls back to the shipped one.
    pub fn from_dir(dir: &Path) -> Result<Self, Error> {
        let load = |name: &str, fallback: &'static str| -> Result<String, Error> {
            let path = dir.join(name);
            if path.exists() {
                read(&path)
            } else {
                Ok(fallback.to_string())
            }
        };
        if !dir.is_dir() {
            return Err(Error::io(
                dir,
                std::io::Error::new(std::io::ErrorKind::NotFound, "not a directory"),
            ));
        }
        Ok(Pipeline {
            keys: KeyTables::parse(&load(KEYS_FILE, KEYS)?)?,
            lexicon: Lexicon::parse(&load(LEXICON_FILE, LEXICON)?)?,
            simplification: SimplificationRules::parse(&load(SIMPLIFY_FILE, SIMPLIFY)?)?,
            corrections: CorrectionRules::parse(&load(CORRECTIONS_FILE, CORRECTIONS)?)?,
        })
    }

    /// `dir` if given, else the directory in the environment, else embedded.
    pub fn resolve(dir: Option<&Path>) -> Result<Self, Error> {
        let env = std::env::var_os(DATA_DIR_ENV).map(PathBuf::from);
        match dir.map(Path::to_path_buf).or(env) {
            Some(d) => Self::from_dir(&d),
            None => Self::embedded(),
        }
    }

    pub fn with_lexicon(mut self, path: &Path) -> Result<Self, Error> {
        self.lexicon = Lexicon::load(path)?;
        Ok(self)
    }

    pub fn with_corrections(mut self, path: &Path) -> Result<Self, Error> {
        self.corrections = CorrectionRules::parse(&read(path)?)?;
        Ok(self)
    }

    pub fn source_keys(&self) -> &KeyRealizationTable {
        self.keys.get("it").expect("key table has Italian rows")
    }

    pub fn target_keys(&self) -> &KeyRealizationTable {
        self.keys.get("fr").expect("key table has French rows")
    }

    pub fn simplify(&self, text: &str) -> String {
        encoder::simplify(text, &self.simplification)
    }

    pub fn encode(&self, text: &str) -> Result<EncodedStream, EncodeError> {
        encoder::encode(text, &self.lexicon, self.source_keys())
    }
}
