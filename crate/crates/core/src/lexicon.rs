//! Bilingual stem dictionary with irregular cells and a full-form index for
//! source-side analysis.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::keytable::{Gender, Number, PersonNumber, TenseIdeogram};
use crate::morph::{self, Language, MorphParadigm, VerbCell};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LexiconError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: `{lemma}` ({pos}) already maps to `{existing}`")]
    Conflict {
        line: usize,
        lemma: String,
        pos: PartOfSpeech,
        existing: String,
    },
    #[error("no lexicon entry for `{lemma}` ({pos})")]
    Missing { lemma: String, pos: PartOfSpeech },
    #[error("no {language} form of `{lemma}` for {features}")]
    NoForm {
        language: Language,
        lemma: String,
        features: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartOfSpeech {
    Noun,
    Verb,
    Adjective,
    Adverb,
    Preposition,
    ProperNoun,
    Numeral,
    Other,
}

impl PartOfSpeech {
    pub const ALL: [PartOfSpeech; 8] = [
        PartOfSpeech::Noun,
        PartOfSpeech::Verb,
        PartOfSpeech::Adjective,
        PartOfSpeech::Adverb,
        PartOfSpeech::Preposition,
        PartOfSpeech::ProperNoun,
        PartOfSpeech::Numeral,
        PartOfSpeech::Other,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            PartOfSpeech::Noun => "noun",
            PartOfSpeech::Verb => "verb",
            PartOfSpeech::Adjective => "adj",
            PartOfSpeech::Adverb => "adv",
            PartOfSpeech::Preposition => "prep",
            PartOfSpeech::ProperNoun => "propn",
            PartOfSpeech::Numeral => "num",
            PartOfSpeech::Other => "other",
        }
    }

    /// Inflects for gender and number.
    pub fn is_nominal(self) -> bool {
        matches!(self, PartOfSpeech::Noun | PartOfSpeech::Adjective)
    }
}

impl fmt::Display for PartOfSpeech {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for PartOfSpeech {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        PartOfSpeech::ALL
            .into_iter()
            .find(|p| p.tag() == s)
            .ok_or(())
    }
}

/// Inflectional features of one word form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Features {
    pub tense: Option<TenseIdeogram>,
    pub person: Option<PersonNumber>,
    pub gender: Option<Gender>,
    pub number: Option<Number>,
}

impl Features {
    pub fn verb(tense: TenseIdeogram, person: Option<PersonNumber>) -> Self {
        Features {
            tense: Some(tense),
            person,
            ..Default::default()
        }
    }

    pub fn nominal(gender: Option<Gender>, number: Number) -> Self {
        Features {
            gender,
            number: Some(number),
            ..Default::default()
        }
    }
}

impl fmt::Display for Features {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(t) = self.tense {
            parts.push(t.to_string());
        }
        if let Some(p) = self.person {
            parts.push(p.to_string());
        }
        if let Some(g) = self.gender {
            parts.push(g.code().to_string());
        }
        if let Some(n) = self.number {
            parts.push(n.code().to_string());
        }
        if parts.is_empty() {
            f.write_str("base")
        } else {
            f.write_str(&parts.join("."))
        }
    }
}

/// Feature key of an irregular cell, e.g. `it.ID4.3sg`, `fr.pl`, `fr.f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FormSpec {
    pub language: Language,
    pub features: Features,
}

impl FromStr for FormSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let mut parts = s.split('.');
        let lang = parts.next().unwrap_or_default();
        let language = Language::from_code(lang).ok_or(format!("unknown language `{lang}`"))?;
        let mut features = Features::default();
        for p in parts {
            if let Ok(t) = p.parse::<TenseIdeogram>() {
                features.tense = Some(t);
            } else if let Ok(pn) = p.parse::<PersonNumber>() {
                features.person = Some(pn);
            } else if let Some(g) = Gender::from_code(p) {
                features.gender = Some(g);
            } else if let Some(n) = Number::from_code(p) {
                features.number = Some(n);
            } else {
                return Err(format!("unknown feature `{p}` in `{s}`"));
            }
        }
        Ok(FormSpec { language, features })
    }
}

impl fmt::Display for FormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.language)?;
        let feats = self.features;
        if let Some(t) = feats.tense {
            write!(f, ".{t}")?;
        }
        if let Some(p) = feats.person {
            write!(f, ".{p}")?;
        }
        if let Some(g) = feats.gender {
            write!(f, ".{}", g.code())?;
        }
        if let Some(n) = feats.number {
            write!(f, ".{}", n.code())?;
        }
        Ok(())
    }
}

/// An irregular cell; the first surface realizes it, the rest are variants
/// accepted in analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrregularForm {
    pub spec: FormSpec,
    pub surfaces: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexiconEntry {
    pub source_lemma: String,
    pub pos: PartOfSpeech,
    pub source_gender: Option<Gender>,
    pub target_lemma: String,
    pub target_gender: Option<Gender>,
    pub irregular: Vec<IrregularForm>,
}

impl LexiconEntry {
    pub fn lemma(&self, language: Language) -> &str {
        match language {
            Language::Italian => &self.source_lemma,
            Language::French => &self.target_lemma,
        }
    }

    pub fn gender(&self, language: Language) -> Option<Gender> {
        match language {
            Language::Italian => self.source_gender,
            Language::French => self.target_gender,
        }
    }

    fn irregular(&self, language: Language, features: Features) -> Option<&str> {
        self.irregular
            .iter()
            .find(|f| f.spec.language == language && f.spec.features == features)
            .map(|f| f.surfaces[0].as_str())
    }

    fn same_mapping(&self, other: &LexiconEntry) -> bool {
        self.source_gender == other.source_gender
            && self.target_lemma == other.target_lemma
            && self.target_gender == other.target_gender
            && self.irregular == other.irregular
    }
}

/// One reading of a source word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub entry: usize,
    pub lemma: String,
    pub pos: PartOfSpeech,
    pub features: Features,
}

#[derive(Debug, Clone)]
struct IndexedForm {
    entry: usize,
    features: Features,
    irregular: bool,
}

#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    entries: Vec<LexiconEntry>,
    by_key: HashMap<(String, PartOfSpeech), usize>,
    forms: HashMap<String, Vec<IndexedForm>>,
    multiword: Vec<(Vec<String>, usize)>,
}

fn parse_gender(col: &str, line: usize) -> Result<Option<Gender>, LexiconError> {
    match col {
        "-" => Ok(None),
        g => Gender::from_code(g)
            .filter(|g| *g != Gender::Neuter)
            .map(Some)
            .ok_or_else(|| LexiconError::Malformed {
                line,
                msg: format!("bad gender `{g}`"),
            }),
    }
}

impl Lexicon {
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut lex = Lexicon::default();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let raw = raw.trim_end_matches('\r');
            if raw.trim().is_empty() || raw.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = raw.split('\t').map(str::trim).collect();
            if cols.len() != 6 {
                return Err(LexiconError::Malformed {
                    line,
                    msg: format!("expected 6 columns, found {}", cols.len()),
                });
            }
            let pos: PartOfSpeech = cols[1].parse().map_err(|_| LexiconError::Malformed {
                line,
                msg: format!("unknown part of speech `{}`", cols[1]),
            })?;
            if cols[0].is_empty() || cols[3].is_empty() {
                return Err(LexiconError::Malformed {
                    line,
                    msg: "empty lemma".into(),
                });
            }
            let mut irregular = Vec::new();
            if cols[5] != "-" {
                for pair in cols[5].split(';').filter(|p| !p.trim().is_empty()) {
                    let (spec, surface) =
                        pair.split_once('=').ok_or_else(|| LexiconError::Malformed {
                            line,
                            msg: format!("irregular form `{pair}` lacks `=`"),
                        })?;
                    let spec: FormSpec = spec
                        .trim()
                        .parse()
                        .map_err(|msg| LexiconError::Malformed { line, msg })?;
                    let surfaces: Vec<String> =
                        surface.split('|').map(|s| s.trim().to_string()).collect();
                    if surfaces.iter().any(String::is_empty) {
                        return Err(LexiconError::Malformed {
                            line,
                            msg: format!("empty surface in `{pair}`"),
                        });
                    }
                    irregular.push(IrregularForm { spec, surfaces });
                }
            }
            let entry = LexiconEntry {
                source_lemma: cols[0].to_string(),
                pos,
                source_gender: parse_gender(cols[2], line)?,
                target_lemma: cols[3].to_string(),
                target_gender: parse_gender(cols[4], line)?,
                irregular,
            };
            if pos == PartOfSpeech::Noun && entry.source_gender.is_none() {
                return Err(LexiconError::Malformed {
                    line,
                    msg: format!("noun `{}` needs a gender", entry.source_lemma),
                });
            }
            if pos == PartOfSpeech::Verb && entry.source_gender.is_some() {
                return Err(LexiconError::Malformed {
                    line,
                    msg: format!("verb `{}` cannot carry a gender", entry.source_lemma),
                });
            }
            let key = (entry.source_lemma.clone(), pos);
            if let Some(&i) = lex.by_key.get(&key) {
                if lex.entries[i].same_mapping(&entry) {
                    continue;
                }
                return Err(LexiconError::Conflict {
                    line,
                    lemma: entry.source_lemma,
                    pos,
                    existing: lex.entries[i].target_lemma.clone(),
                });
            }
            lex.by_key.insert(key, lex.entries.len());
            lex.entries.push(entry);
        }
        lex.build_index();
        Ok(lex)
    }

    pub fn load(path: &Path) -> Result<Self, crate::Error> {
        let text = std::fs::read_to_string(path).map_err(|e| crate::Error::io(path, e))?;
        Ok(Lexicon::parse(&text)?)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[LexiconEntry] {
        &self.entries
    }

    pub fn entry(&self, index: usize) -> &LexiconEntry {
        &self.entries[index]
    }

    pub fn find(&self, lemma: &str, pos: PartOfSpeech) -> Option<usize> {
        self.by_key.get(&(lemma.to_string(), pos)).copied()
    }

    /// First entry for `lemma` in lexicon order, whatever its part of speech.
    pub fn find_any(&self, lemma: &str) -> Option<usize> {
        self.entries.iter().position(|e| e.source_lemma == lemma)
    }

    pub fn translate_lemma(
        &self,
        lemma: &str,
        pos: PartOfSpeech,
    ) -> Result<(&str, Option<Gender>), LexiconError> {
        let i = self.find(lemma, pos).ok_or_else(|| LexiconError::Missing {
            lemma: lemma.to_string(),
            pos,
        })?;
        let e = &self.entries[i];
        Ok((&e.target_lemma, e.target_gender))
    }

    /// Multiword source lemmas as token lists, longest first.
    pub fn multiword(&self) -> &[(Vec<String>, usize)] {
        &self.multiword
    }

    /// Form of entry `index` in `language` with `features`. Irregular
    /// cells override the regular paradigm.
    pub fn inflect(
        &self,
        index: usize,
        language: Language,
        features: Features,
    ) -> Result<String, LexiconError> {
        let e = &self.entries[index];
        let lemma = e.lemma(language);
        let missing = || LexiconError::NoForm {
            language,
            lemma: lemma.to_string(),
            features: features.to_string(),
        };
        if let Some(s) = e.irregular(language, features) {
            return Ok(s.to_string());
        }
        match e.pos {
            PartOfSpeech::Verb => {
                let tense = features.tense.unwrap_or(TenseIdeogram::Infinitive);
                if tense == TenseIdeogram::Infinitive {
                    return Ok(e
                        .irregular(language, Features::verb(tense, None))
                        .unwrap_or(lemma)
                        .to_string());
                }
                if tense == TenseIdeogram::PastParticiple {
                    let base = match e.irregular(language, Features::verb(tense, None)) {
                        Some(b) => b.to_string(),
                        None => MorphParadigm::for_lemma(language, lemma)
                            .and_then(|p| p.realize(lemma, VerbCell::new(tense, None)))
                            .ok_or_else(missing)?,
                    };
                    let gender = features.gender.unwrap_or(Gender::Masculine);
                    let number = features.number.unwrap_or(Number::Singular);
                    return Ok(morph::agree_participle(language, &base, gender, number));
                }
                let person = if tense.is_finite() { features.person } else { None };
                let cell = VerbCell::new(tense, person);
                if tense.is_finite() && person.is_none() {
                    return Err(missing());
                }
                if let Some(s) = e.irregular(language, Features::verb(tense, person)) {
                    return Ok(s.to_string());
                }
                MorphParadigm::for_lemma(language, lemma)
                    .and_then(|p| p.realize(lemma, cell))
                    .ok_or_else(missing)
            }
            PartOfSpeech::Noun => match features.number {
                Some(Number::Plural) => Ok(e
                    .irregular(language, Features::nominal(None, Number::Plural))
                    .map(str::to_string)
                    .unwrap_or_else(|| morph::noun_plural(language, lemma, e.gender(language)))),
                _ => Ok(lemma.to_string()),
            },
            PartOfSpeech::Adjective => {
                let gender = match features.gender {
                    Some(Gender::Feminine) => Gender::Feminine,
                    _ => Gender::Masculine,
                };
                let number = features.number.unwrap_or(Number::Singular);
                let irregular = |g: Option<Gender>, n: Option<Number>| {
                    e.irregular(
                        language,
                        Features {
                            gender: g,
                            number: n,
                            ..Default::default()
                        },
                    )
                };
                let fem = gender == Gender::Feminine;
                let pl = number == Number::Plural;
                let exact = match (fem, pl) {
                    (false, false) => irregular(Some(Gender::Masculine), Some(Number::Singular)),
                    (true, false) => irregular(Some(Gender::Feminine), None)
                        .or_else(|| irregular(Some(Gender::Feminine), Some(Number::Singular))),
                    (false, true) => irregular(None, Some(Number::Plural))
                        .or_else(|| irregular(Some(Gender::Masculine), Some(Number::Plural))),
                    (true, true) => irregular(Some(Gender::Feminine), Some(Number::Plural)),
                };
                if let Some(s) = exact {
                    return Ok(s.to_string());
                }
                if fem && pl {
                    if let Some(f) = irregular(Some(Gender::Feminine), None) {
                        return Ok(format!("{f}s"));
                    }
                }
                Ok(morph::adjective_form(language, lemma, gender, number))
            }
            _ => Ok(lemma.to_string()),
        }
    }

    /// All readings of a source word: exact lemma matches first, then
    /// irregular forms, then longest stem, then lexicon order.
    pub fn analyze(&self, word: &str) -> Vec<Analysis> {
        let w = word.to_lowercase();
        let Some(hits) = self.forms.get(&w) else {
            return Vec::new();
        };
        let mut out: Vec<(usize, &IndexedForm)> = hits.iter().enumerate().collect();
        out.sort_by_key(|(order, f)| {
            let e = &self.entries[f.entry];
            let exact = e.source_lemma != w;
            let stem = common_prefix(&e.source_lemma, &w);
            (exact, !f.irregular, std::cmp::Reverse(stem), f.entry, *order)
        });
        let mut seen = Vec::new();
        let mut result = Vec::new();
        for (_, f) in out {
            if seen.contains(&(f.entry, f.features)) {
                continue;
            }
            seen.push((f.entry, f.features));
            let e = &self.entries[f.entry];
            result.push(Analysis {
                entry: f.entry,
                lemma: e.source_lemma.clone(),
                pos: e.pos,
                features: f.features,
            });
        }
        result
    }

    fn build_index(&mut self) {
        let mut forms: HashMap<String, Vec<IndexedForm>> = HashMap::new();
        let mut multiword = Vec::new();
        for (i, e) in self.entries.iter().enumerate() {
            if e.source_lemma.contains(' ') {
                let toks = e
                    .source_lemma
                    .split(' ')
                    .map(|t| t.to_lowercase())
                    .collect();
                multiword.push((toks, i));
                continue;
            }
            for features in source_cells(e) {
                if let Ok(s) = self.inflect(i, Language::Italian, features) {
                    forms.entry(s.to_lowercase()).or_default().push(IndexedForm {
                        entry: i,
                        features,
                        irregular: false,
                    });
                }
            }
            for irr in e.irregular.iter().filter(|f| f.spec.language == Language::Italian) {
                for s in &irr.surfaces {
                    let mut expanded = vec![(s.clone(), irr.spec.features)];
                    if irr.spec.features.tense == Some(TenseIdeogram::PastParticiple)
                        && irr.spec.features.gender.is_none()
                    {
                        expanded = participle_forms(s);
                    }
                    for (surface, features) in expanded {
                        forms.entry(surface.to_lowercase()).or_default().push(IndexedForm {
                            entry: i,
                            features,
                            irregular: true,
                        });
                    }
                }
            }
        }
        multiword.sort_by_key(|(t, i): &(Vec<String>, usize)| (std::cmp::Reverse(t.len()), *i));
        self.forms = forms;
        self.multiword = multiword;
    }
}

fn participle_forms(base: &str) -> Vec<(String, Features)> {
    let mut out = Vec::new();
    for n in [Number::Singular, Number::Plural] {
        for g in [Gender::Masculine, Gender::Feminine] {
            out.push((
                morph::agree_participle(Language::Italian, base, g, n),
                Features {
                    tense: Some(TenseIdeogram::PastParticiple),
                    gender: Some(g),
                    number: Some(n),
                    person: None,
                },
            ));
        }
    }
    out
}

fn common_prefix(a: &str, b: &str) -> usize {
    a.chars().zip(b.chars()).take_while(|(x, y)| x == y).count()
}

/// Every feature bundle the source side of `e` inflects for.
fn source_cells(e: &LexiconEntry) -> Vec<Features> {
    match e.pos {
        PartOfSpeech::Verb => {
            let mut out = Vec::new();
            let para = MorphParadigm::for_lemma(Language::Italian, &e.source_lemma);
            for t in TenseIdeogram::ALL {
                match t {
                    TenseIdeogram::Infinitive | TenseIdeogram::PresentParticiple => {
                        out.push(Features::verb(t, None))
                    }
                    TenseIdeogram::PastParticiple => {
                        for n in [Number::Singular, Number::Plural] {
                            for g in [Gender::Masculine, Gender::Feminine] {
                                out.push(Features {
                                    gender: Some(g),
                                    number: Some(n),
                                    ..Features::verb(t, None)
                                });
                            }
                        }
                    }
                    _ => {
                        for pn in PersonNumber::all() {
                            let cell = VerbCell::new(t, Some(pn));
                            let listed = e.irregular.iter().any(|f| {
                                f.spec.language == Language::Italian
                                    && f.spec.features == Features::verb(t, Some(pn))
                            });
                            if listed || para.is_some_and(|p| p.has_cell(cell)) {
                                out.push(Features::verb(t, Some(pn)));
                            }
                        }
                    }
                }
            }
            out
        }
        PartOfSpeech::Noun => vec![
            Features::nominal(None, Number::Singular),
            Features::nominal(None, Number::Plural),
        ],
        PartOfSpeech::Adjective => {
            let mut out = Vec::new();
            for n in [Number::Singular, Number::Plural] {
                for g in [Gender::Masculine, Gender::Feminine] {
                    out.push(Features::nominal(Some(g), n));
                }
            }
            out
        }
        _ => vec![Features::default()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# lemma\tpos\tsg\ttarget\ttg\tirregular
occhio\tnoun\tm\tœil\tm\tfr.pl=yeux
donna\tnoun\tf\tfemme\tf\t-
apparire\tverb\t-\tapparaître\t-\tit.ID4.3sg=apparve;fr.ID4.3sg=apparut
vedere\tverb\t-\tvoir\t-\tit.ID4.1sg=vidi;fr.ID4.1sg=vis
glorioso\tadj\tm\tglorieux\tm\t-
cingere\tverb\t-\tceindre\t-\tit.ID9=cinto;fr.ID9=ceint
di\tprep\t-\tde\t-\t-
in mezzo di\tprep\t-\tau milieu de\t-\t-
";

    fn lex() -> Lexicon {
        Lexicon::parse(SAMPLE).unwrap()
    }

    #[test]
    fn analyses_from_spec() {
        let l = lex();
        let a = l.analyze("apparve");
        assert_eq!(a[0].lemma, "apparire");
        assert_eq!(
            a[0].features,
            Features::verb(TenseIdeogram::RemotePast, Some("3sg".parse().unwrap()))
        );
        let o = l.analyze("occhi");
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].lemma, "occhio");
        assert_eq!(o[0].features.number, Some(Number::Plural));
        let v = l.analyze("vidi");
        assert_eq!(v[0].lemma, "vedere");
        assert_eq!(v[0].features.person, Some("1sg".parse().unwrap()));
        assert!(l.analyze("xyzzy").is_empty());
    }

    #[test]
    fn participle_agreement_from_irregular_base() {
        let l = lex();
        let a = l.analyze("cinta");
        assert_eq!(a[0].lemma, "cingere");
        assert_eq!(a[0].features.gender, Some(Gender::Feminine));
        let i = l.find("cingere", PartOfSpeech::Verb).unwrap();
        assert_eq!(l.inflect(i, Language::French, a[0].features).unwrap(), "ceinte");
    }

    #[test]
    fn translate_lemma_cases() {
        let l = lex();
        assert_eq!(
            l.translate_lemma("donna", PartOfSpeech::Noun).unwrap(),
            ("femme", Some(Gender::Feminine))
        );
        assert!(matches!(
            l.translate_lemma("xyzzy", PartOfSpeech::Noun),
            Err(LexiconError::Missing { .. })
        ));
    }

    #[test]
    fn irregular_plural_and_agreement() {
        let l = lex();
        let i = l.find("occhio", PartOfSpeech::Noun).unwrap();
        let pl = Features::nominal(None, Number::Plural);
        assert_eq!(l.inflect(i, Language::French, pl).unwrap(), "yeux");
        let g = l.find("glorioso", PartOfSpeech::Adjective).unwrap();
        let fs = Features::nominal(Some(Gender::Feminine), Number::Singular);
        assert_eq!(l.inflect(g, Language::French, fs).unwrap(), "glorieuse");
    }

    #[test]
    fn load_edge_cases() {
        assert!(Lexicon::parse("").unwrap().is_empty());
        assert_eq!(Lexicon::parse("donna\tnoun\tf\tfemme\tf\t-\n").unwrap().len(), 1);
        let err = Lexicon::parse("donna\tnoun\tf\tfemme\tf\t-\ndonna\tnoun\tf\tdame\tf\t-\n")
            .unwrap_err();
        assert!(matches!(err, LexiconError::Conflict { line: 2, .. }));
        assert!(Lexicon::parse("donna\tnoun\tf\tfemme\tf\t-\ndonna\tnoun\tf\tfemme\tf\t-\n").is_ok());
        assert!(matches!(
            Lexicon::parse("donna\tnoun\tf\n"),
            Err(LexiconError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            Lexicon::parse("donna\tthing\tf\tfemme\tf\t-\n"),
            Err(LexiconError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            Lexicon::parse("x\tverb\t-\ty\t-\tit.ID99=z\n"),
            Err(LexiconError::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn multiword_entries_indexed() {
        let l = lex();
        assert_eq!(l.multiword()[0].0, vec!["in", "mezzo", "di"]);
    }

    #[test]
    fn form_spec_round_trip() {
        for s in ["it.ID4.3sg", "fr.pl", "fr.f.pl", "it.ID9", "fr.ID9.f.pl"] {
            assert_eq!(s.parse::<FormSpec>().unwrap().to_string(), s);
        }
    }
}
