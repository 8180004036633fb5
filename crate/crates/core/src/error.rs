use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::corpus::CorpusError;
use crate::decoder::TranslateError;
use crate::rules::RuleError;
use crate::diffalign::StatsError;
use crate::encoder::{EncodeError, StreamError};
use crate::keytable::KeyError;
use crate::lexicon::LexiconError;

/// Any failure surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Key(#[from] KeyError),
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
    #[error(transparent)]
    Rule(#[from] RuleError),
    #[error(transparent)]
    Stream(#[from] StreamError),
    #[error(transparent)]
    Encode(#[from] EncodeError),
    #[error(transparent)]
    Translate(#[from] TranslateError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Stats(#[from] StatsError),
}

impl Error {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        Error::Io {
            path: path.to_path_buf(),
            source,
        }
    }
}
