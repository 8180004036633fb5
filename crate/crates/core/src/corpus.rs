//! Registry of the stored texts: the Dante source, the 1931 French output,
//! the later translations and the model-produced streams.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("unknown fixture `{id}`; available: {}", available.join(", "))]
    Unknown { id: String, available: Vec<String> },
    #[error("manifest line {line}: {msg}")]
    Manifest { line: usize, msg: String },
    #[error("duplicate fixture id `{0}`")]
    Duplicate(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Source,
    Reference,
    Candidate,
    Encoding,
}

impl Role {
    pub fn tag(self) -> &'static str {
        match self {
            Role::Source => "source",
            Role::Reference => "reference",
            Role::Candidate => "candidate",
            Role::Encoding => "encoding",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Role {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "source" => Ok(Role::Source),
            "reference" => Ok(Role::Reference),
            "candidate" => Ok(Role::Candidate),
            "encoding" => Ok(Role::Encoding),
            _ => Err(format!("unknown role `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub id: String,
    pub language: String,
    pub role: Role,
    pub text: String,
    pub provenance: String,
}

macro_rules! embedded_files {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../data/fixtures/", $name)))),*]
    };
}

const MANIFEST: &str = include_str!("../data/fixtures/manifest.tsv");
const FILES: &[(&str, &str)] = embedded_files!(
    "dante_it.txt",
    "dante_it_excerpt.txt",
    "pucci_fr_1931.txt",
    "chatgpt_pucci.txt",
    "claude_pucci.txt",
    "grok_pucci.txt",
    "gpt5_pucci.txt",
    "grok4_pucci.txt",
    "fardel_1898.txt",
    "godefroy_1901.txt",
    "cochin_1905.txt",
    "gpt5_nmt.txt",
    "chatgpt_encoding.txt",
    "claude_encoding.txt",
    "gpt5_encoding.txt",
);

#[derive(Debug, Clone)]
pub struct Corpus {
    fixtures: Vec<Fixture>,
}

impl Corpus {
    /// The fixtures compiled into the crate.
    pub fn embedded() -> Self {
        Self::parse(MANIFEST, |path| {
            FILES
                .iter()
                .find(|(name, _)| *name == path)
                .map(|(_, text)| text.to_string())
                .ok_or_else(|| format!("no embedded file `{path}`"))
        })
        .expect("embedded manifest is valid")
    }

    /// Manifest and files from `dir`.
    pub fn from_dir(dir: &Path) -> Result<Self, crate::Error> {
        let manifest_path = dir.join("manifest.tsv");
        let manifest = std::fs::read_to_string(&manifest_path)
            .map_err(|e| crate::Error::io(&manifest_path, e))?;
        Ok(Self::parse(&manifest, |path| {
            std::fs::read_to_string(dir.join(path)).map_err(|e| format!("{path}: {e}"))
        })?)
    }

    fn parse(
        manifest: &str,
        mut read: impl FnMut(&str) -> Result<String, String>,
    ) -> Result<Self, CorpusError> {
        let mut fixtures: Vec<Fixture> = Vec::new();
        for (i, line) in manifest.lines().enumerate() {
            let line_no = i + 1;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: String| CorpusError::Manifest { line: line_no, msg };
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 5 {
                return Err(bad(format!("expected 5 columns, found {}", cols.len())));
            }
            if cols[4].trim().is_empty() {
                return Err(bad("empty provenance".into()));
            }
            if fixtures.iter().any(|f| f.id == cols[0]) {
                return Err(CorpusError::Duplicate(cols[0].to_string()));
            }
            fixtures.push(Fixture {
                id: cols[0].to_string(),
                language: cols[1].to_string(),
                role: cols[2].parse().map_err(bad)?,
                text: read(cols[3]).map_err(bad)?,
                provenance: cols[4].to_string(),
            });
        }
        Ok(Corpus { fixtures })
    }

    pub fn fixtures(&self) -> &[Fixture] {
        &self.fixtures
    }

    pub fn ids(&self) -> Vec<String> {
        self.fixtures.iter().map(|f| f.id.clone()).collect()
    }

    pub fn get(&self, id: &str) -> Result<&Fixture, CorpusError> {
        self.fixtures
            .iter()
            .find(|f| f.id == id)
            .ok_or_else(|| CorpusError::Unknown {
                id: id.to_string(),
                available: self.ids(),
            })
    }

    /// Fixtures with prose (everything except the encodings).
    pub fn texts(&self) -> impl Iterator<Item = &Fixture> {
        self.fixtures.iter().filter(|f| f.role != Role::Encoding)
    }
}

/// Look up a fixture in the embedded registry.
pub fn load_fixture(id: &str) -> Result<Fixture, CorpusError> {
    Corpus::embedded().get(id).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_fixtures() {
        let dante = load_fixture("dante_it").unwrap();
        assert!(dante.text.starts_with("Ai miei occhi apparve la gloriosa donna"));
        assert_eq!(dante.role, Role::Source);
        let pucci = load_fixture("pucci_fr_1931").unwrap();
        assert!(pucci.text.starts_with("À mes yeux apparut la glorieuse femme"));
    }

    #[test]
    fn unknown_fixture_lists_ids() {
        let err = load_fixture("missing_id").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("missing_id") && msg.contains("dante_it"), "{msg}");
    }

    #[test]
    fn registry_is_complete() {
        let corpus = Corpus::embedded();
        for id in [
            "dante_it", "pucci_fr_1931", "chatgpt_pucci", "claude_pucci", "grok_pucci",
            "gpt5_pucci", "grok4_pucci", "fardel_1898", "godefroy_1901", "cochin_1905",
            "gpt5_nmt",
        ] {
            let f = corpus.get(id).unwrap();
            assert!(!f.text.trim().is_empty() && !f.provenance.is_empty(), "{id}");
        }
        assert_eq!(
            corpus.fixtures().iter().filter(|f| f.role == Role::Encoding).count(),
            3
        );
    }

    #[test]
    fn manifest_errors() {
        let err = Corpus::parse("a\tit\tsource\ta.txt\t\n", |_| Ok(String::new())).unwrap_err();
        assert!(matches!(err, CorpusError::Manifest { line: 1, .. }));
        let twice = "a\tit\tsource\ta.txt\tx\na\tit\tsource\ta.txt\tx\n";
        assert_eq!(
            Corpus::parse(twice, |_| Ok(String::new())).unwrap_err(),
            CorpusError::Duplicate("a".into())
        );
    }
}
