//! Grammatical keys, tense ideograms and their per-language realizations.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KeyError {
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("case index out of range in key `{0}`")]
    BadCaseIndex(String),
    #[error("plural index on a non-pronoun key `{0}`")]
    PluralOnNonPronoun(String),
    #[error("unknown tense ideogram `{0}`")]
    UnknownTense(String),
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("no {language} realization for {key} ({context})")]
    Coverage {
        language: String,
        key: String,
        context: String,
    },
}

/// Chart B tense and mood ideograms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TenseIdeogram {
    Infinitive,
    PresentIndicative,
    Imperfect,
    RemotePast,
    Future,
    PresentSubjunctive,
    PastSubjunctive,
    PresentParticiple,
    PastParticiple,
    Imperative,
    Conditional,
}

impl TenseIdeogram {
    pub const ALL: [TenseIdeogram; 11] = [
        TenseIdeogram::Infinitive,
        TenseIdeogram::PresentIndicative,
        TenseIdeogram::Imperfect,
        TenseIdeogram::RemotePast,
        TenseIdeogram::Future,
        TenseIdeogram::PresentSubjunctive,
        TenseIdeogram::PastSubjunctive,
        TenseIdeogram::PresentParticiple,
        TenseIdeogram::PastParticiple,
        TenseIdeogram::Imperative,
        TenseIdeogram::Conditional,
    ];

    pub fn id(self) -> u8 {
        Self::ALL.iter().position(|t| *t == self).unwrap() as u8 + 1
    }

    pub fn from_id(id: u8) -> Option<Self> {
        Self::ALL.get((id as usize).checked_sub(1)?).copied()
    }

    /// Takes a grammatical person.
    pub fn is_finite(self) -> bool {
        !matches!(
            self,
            TenseIdeogram::Infinitive
                | TenseIdeogram::PresentParticiple
                | TenseIdeogram::PastParticiple
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            TenseIdeogram::Infinitive => "infinitive",
            TenseIdeogram::PresentIndicative => "present indicative",
            TenseIdeogram::Imperfect => "imperfect",
            TenseIdeogram::RemotePast => "remote past",
            TenseIdeogram::Future => "future",
            TenseIdeogram::PresentSubjunctive => "present subjunctive",
            TenseIdeogram::PastSubjunctive => "past subjunctive",
            TenseIdeogram::PresentParticiple => "present participle",
            TenseIdeogram::PastParticiple => "past participle",
            TenseIdeogram::Imperative => "imperative",
            TenseIdeogram::Conditional => "conditional",
        }
    }
}

impl fmt::Display for TenseIdeogram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ID{}", self.id())
    }
}

impl FromStr for TenseIdeogram {
    type Err = KeyError;
    fn from_str(s: &str) -> Result<Self, KeyError> {
        s.strip_prefix("ID")
            .and_then(|n| n.parse::<u8>().ok())
            .and_then(TenseIdeogram::from_id)
            .ok_or_else(|| KeyError::UnknownTense(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gender {
    Masculine,
    Feminine,
    Neuter,
}

impl Gender {
    pub fn code(self) -> &'static str {
        match self {
            Gender::Masculine => "m",
            Gender::Feminine => "f",
            Gender::Neuter => "n",
        }
    }

    pub fn from_code(s: &str) -> Option<Self> {
        match s {
            "m" => Some(Gender::Masculine),
            "f" => Some(Gender::Feminine),
            "n" => Some(Gender::Neuter),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Number {
    Singular,
    Plural,
}

impl Number {
    pub fn code(self) -> &'static str {
        match self {
            Number::Singular => "sg",
            Number::Plural => "pl",
        }
    }

    pub fn from_code(s: &str) -> Option<Self> {
        match s {
            "sg" => Some(Number::Singular),
            "pl" => Some(Number::Plural),
            _ => None,
        }
    }
}

/// Grammatical person with number, printed `1sg` .. `3pl`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PersonNumber {
    pub person: u8,
    pub number: Number,
}

impl PersonNumber {
    pub fn new(person: u8, number: Number) -> Self {
        PersonNumber { person, number }
    }

    pub fn all() -> impl Iterator<Item = PersonNumber> {
        [Number::Singular, Number::Plural]
            .into_iter()
            .flat_map(|n| (1..=3).map(move |p| PersonNumber::new(p, n)))
    }

    /// Position in the usual six-cell conjugation order.
    pub fn slot(self) -> usize {
        (self.person as usize - 1) + if self.number == Number::Plural { 3 } else { 0 }
    }
}

impl fmt::Display for PersonNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.person, self.number.code())
    }
}

impl FromStr for PersonNumber {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        let mut chars = s.chars();
        let p = chars.next().and_then(|c| c.to_digit(10)).ok_or(())? as u8;
        if !(1..=3).contains(&p) {
            return Err(());
        }
        let number = Number::from_code(chars.as_str()).ok_or(())?;
        Ok(PersonNumber::new(p, number))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KeyCategory {
    Article,
    DemonstrativeNear,
    DemonstrativeFar,
    PersonalPronoun,
    Possessive,
    Relative,
    Conjunction,
    PluralMarker,
    GenderMarker,
    PersonalRelativeIndicator,
}

impl KeyCategory {
    pub fn takes_case(self) -> bool {
        matches!(
            self,
            KeyCategory::Article
                | KeyCategory::DemonstrativeNear
                | KeyCategory::DemonstrativeFar
                | KeyCategory::PersonalPronoun
                | KeyCategory::Possessive
                | KeyCategory::Relative
        )
    }

    /// Agrees with a following noun.
    pub fn is_determiner(self) -> bool {
        matches!(
            self,
            KeyCategory::Article
                | KeyCategory::DemonstrativeNear
                | KeyCategory::DemonstrativeFar
                | KeyCategory::Possessive
        )
    }
}

/// Syntactic role carried by a case index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseRole {
    Base,
    Genitive,
    Dative,
    Object,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrammaticalKey {
    pub category: KeyCategory,
    /// Pronoun person, or the owner's person for possessives.
    pub person: Option<u8>,
    /// Pronoun number, or the owner's number for possessives.
    pub number: Option<Number>,
    pub gender: Option<Gender>,
    pub case_index: Option<u8>,
}

const POSSESSIVE_LETTERS: [(&str, u8, Number); 6] = [
    ("M", 1, Number::Singular),
    ("T", 2, Number::Singular),
    ("S", 3, Number::Singular),
    ("N", 1, Number::Plural),
    ("V", 2, Number::Plural),
    ("L", 3, Number::Plural),
];

// Longest letter parts first so that `III` wins over `I`.
const LETTERS: [&str; 19] = [
    "IIIf", "IIIn", "III", "II", "I", "a", "D", "d", "M", "T", "S", "N", "V", "L", "R", "&", "+",
    "m", "f",
];

impl GrammaticalKey {
    fn plain(category: KeyCategory, case_index: Option<u8>) -> Self {
        GrammaticalKey {
            category,
            person: None,
            number: None,
            gender: None,
            case_index,
        }
    }

    pub fn article(case: u8) -> Self {
        Self::plain(KeyCategory::Article, Some(case))
    }

    pub fn demonstrative_near(case: u8) -> Self {
        Self::plain(KeyCategory::DemonstrativeNear, Some(case))
    }

    pub fn demonstrative_far(case: u8) -> Self {
        Self::plain(KeyCategory::DemonstrativeFar, Some(case))
    }

    pub fn relative(case: u8) -> Self {
        Self::plain(KeyCategory::Relative, Some(case))
    }

    pub fn conjunction() -> Self {
        Self::plain(KeyCategory::Conjunction, None)
    }

    pub fn plural_marker() -> Self {
        Self::plain(KeyCategory::PluralMarker, None)
    }

    pub fn gender_marker(gender: Gender) -> Self {
        GrammaticalKey {
            gender: Some(gender),
            ..Self::plain(KeyCategory::GenderMarker, None)
        }
    }

    pub fn pronoun(person: u8, number: Number, gender: Option<Gender>, case: u8) -> Self {
        let gender = if person == 3 {
            Some(gender.unwrap_or(Gender::Masculine))
        } else {
            None
        };
        GrammaticalKey {
            category: KeyCategory::PersonalPronoun,
            person: Some(person),
            number: Some(number),
            gender,
            case_index: Some(case),
        }
    }

    pub fn possessive(person: u8, number: Number, case: u8) -> Self {
        GrammaticalKey {
            category: KeyCategory::Possessive,
            person: Some(person),
            number: Some(number),
            gender: None,
            case_index: Some(case),
        }
    }

    /// Role of the case index. The first-person possessive row is printed
    /// genitive, dative, base; every other row is base, genitive, dative.
    pub fn case_role(&self) -> Option<CaseRole> {
        let idx = self.case_index?;
        let first_poss = self.category == KeyCategory::Possessive
            && self.person == Some(1)
            && self.number == Some(Number::Singular);
        Some(match (first_poss, idx) {
            (true, 1) => CaseRole::Genitive,
            (true, 2) => CaseRole::Dative,
            (true, 3) => CaseRole::Base,
            (false, 1) => CaseRole::Base,
            (false, 2) => CaseRole::Genitive,
            (false, 3) => CaseRole::Dative,
            _ => CaseRole::Object,
        })
    }

    /// Same key with the case index that carries `role`.
    pub fn with_role(&self, role: CaseRole) -> Self {
        let mut k = *self;
        if k.case_index.is_some() {
            k.case_index = (1..=4).find(|i| {
                let probe = GrammaticalKey {
                    case_index: Some(*i),
                    ..*self
                };
                probe.case_role() == Some(role)
            });
        }
        k
    }

    /// Every key of the canonical inventory.
    pub fn inventory() -> Vec<GrammaticalKey> {
        let mut out = Vec::new();
        for case in 1..=4 {
            out.push(Self::article(case));
            out.push(Self::demonstrative_near(case));
            out.push(Self::demonstrative_far(case));
            out.push(Self::relative(case));
        }
        for number in [Number::Singular, Number::Plural] {
            for case in 1..=4 {
                out.push(Self::pronoun(1, number, None, case));
                out.push(Self::pronoun(2, number, None, case));
                for g in [Gender::Masculine, Gender::Feminine, Gender::Neuter] {
                    out.push(Self::pronoun(3, number, Some(g), case));
                }
            }
        }
        for (_, person, number) in POSSESSIVE_LETTERS {
            for case in 1..=4 {
                out.push(Self::possessive(person, number, case));
            }
        }
        out.push(Self::conjunction());
        out.push(Self::plural_marker());
        out.push(Self::gender_marker(Gender::Masculine));
        out.push(Self::gender_marker(Gender::Feminine));
        out.push(Self::plain(KeyCategory::PersonalRelativeIndicator, None));
        out
    }

    /// Keys the encoder may produce: the inventory minus the relative indicator.
    pub fn emittable() -> Vec<GrammaticalKey> {
        Self::inventory()
            .into_iter()
            .filter(|k| k.category != KeyCategory::PersonalRelativeIndicator)
            .collect()
    }

    /// Marker keys carry agreement only and realize as nothing.
    pub fn is_marker(&self) -> bool {
        matches!(
            self.category,
            KeyCategory::PluralMarker | KeyCategory::GenderMarker
        )
    }
}

fn normalize_notation(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '¹' => '1',
            '²' => '2',
            '³' => '3',
            '⁴' => '4',
            other => other,
        })
        .collect()
}

/// Parse a key such as `M2`, `a.`, `III14`, `IIIf1`, `&`.
pub fn parse_key_notation(notation: &str) -> Result<GrammaticalKey, KeyError> {
    let s = normalize_notation(notation);
    if s == "I." {
        return Ok(GrammaticalKey::plain(
            KeyCategory::PersonalRelativeIndicator,
            None,
        ));
    }
    let letter = LETTERS
        .iter()
        .find(|l| s.starts_with(**l))
        .ok_or_else(|| KeyError::UnknownKey(notation.to_string()))?;
    let rest = &s[letter.len()..];
    let index: Option<u32> = match rest {
        "" | "." => None,
        r => {
            let digits = r.strip_suffix('.').unwrap_or(r);
            if !digits.chars().all(|c| c.is_ascii_digit()) {
                return Err(KeyError::UnknownKey(notation.to_string()));
            }
            Some(
                digits
                    .parse()
                    .map_err(|_| KeyError::BadCaseIndex(notation.to_string()))?,
            )
        }
    };
    let bad = || KeyError::BadCaseIndex(notation.to_string());
    let simple_case = |idx: Option<u32>| -> Result<u8, KeyError> {
        match idx {
            None => Ok(1),
            Some(i @ 1..=4) => Ok(i as u8),
            Some(11..=14) => Err(KeyError::PluralOnNonPronoun(notation.to_string())),
            Some(_) => Err(bad()),
        }
    };
    let key = match *letter {
        "a" => GrammaticalKey::article(simple_case(index)?),
        "D" => GrammaticalKey::demonstrative_near(simple_case(index)?),
        "d" => GrammaticalKey::demonstrative_far(simple_case(index)?),
        "R" => GrammaticalKey::relative(simple_case(index)?),
        "&" | "+" | "m" | "f" => {
            if index.is_some() {
                return Err(bad());
            }
            match *letter {
                "&" => GrammaticalKey::conjunction(),
                "+" => GrammaticalKey::plural_marker(),
                "m" => GrammaticalKey::gender_marker(Gender::Masculine),
                _ => GrammaticalKey::gender_marker(Gender::Feminine),
            }
        }
        "I" | "II" | "III" | "IIIf" | "IIIn" => {
            let (number, case) = match index {
                None => (Number::Singular, 1),
                Some(i @ 1..=4) => (Number::Singular, i as u8),
                Some(i @ 11..=14) => (Number::Plural, (i - 10) as u8),
                Some(_) => return Err(bad()),
            };
            let (person, gender) = match *letter {
                "I" => (1, None),
                "II" => (2, None),
                "III" => (3, Some(Gender::Masculine)),
                "IIIf" => (3, Some(Gender::Feminine)),
                _ => (3, Some(Gender::Neuter)),
            };
            GrammaticalKey::pronoun(person, number, gender, case)
        }
        l => {
            let (_, person, number) = POSSESSIVE_LETTERS
                .iter()
                .find(|(p, _, _)| *p == l)
                .copied()
                .ok_or_else(|| KeyError::UnknownKey(notation.to_string()))?;
            GrammaticalKey::possessive(person, number, simple_case(index)?)
        }
    };
    Ok(key)
}

impl fmt::Display for GrammaticalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let case = self.case_index.unwrap_or(1);
        match self.category {
            KeyCategory::Article => write!(f, "a{case}"),
            KeyCategory::DemonstrativeNear => write!(f, "D{case}"),
            KeyCategory::DemonstrativeFar => write!(f, "d{case}"),
            KeyCategory::Relative => write!(f, "R{case}"),
            KeyCategory::Conjunction => write!(f, "&"),
            KeyCategory::PluralMarker => write!(f, "+"),
            KeyCategory::GenderMarker => {
                write!(f, "{}", self.gender.unwrap_or(Gender::Masculine).code())
            }
            KeyCategory::PersonalRelativeIndicator => write!(f, "I."),
            KeyCategory::PersonalPronoun => {
                let letter = match (self.person, self.gender) {
                    (Some(1), _) => "I",
                    (Some(2), _) => "II",
                    (_, Some(Gender::Feminine)) => "IIIf",
                    (_, Some(Gender::Neuter)) => "IIIn",
                    _ => "III",
                };
                let offset = if self.number == Some(Number::Plural) { 10 } else { 0 };
                write!(f, "{letter}{}", case + offset)
            }
            KeyCategory::Possessive => {
                let letter = POSSESSIVE_LETTERS
                    .iter()
                    .find(|(_, p, n)| Some(*p) == self.person && Some(*n) == self.number)
                    .map(|(l, _, _)| *l)
                    .unwrap_or("M");
                write!(f, "{letter}{case}")
            }
        }
    }
}

impl FromStr for GrammaticalKey {
    type Err = KeyError;
    fn from_str(s: &str) -> Result<Self, KeyError> {
        parse_key_notation(s)
    }
}

/// Gender and number a realization agrees with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AgreementContext {
    pub gender: Option<Gender>,
    pub number: Option<Number>,
}

impl AgreementContext {
    pub fn new(gender: Gender, number: Number) -> Self {
        AgreementContext {
            gender: Some(gender),
            number: Some(number),
        }
    }
}

impl fmt::Display for AgreementContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{}",
            self.gender.map(Gender::code).unwrap_or("-"),
            self.number.map(Number::code).unwrap_or("-")
        )
    }
}

/// One row of a key table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyCell {
    pub key: GrammaticalKey,
    pub gender: Option<Gender>,
    pub number: Option<Number>,
    pub surface: String,
}

/// Surface forms of every key in one language. The first row for a cell is
/// the realization; later rows for the same cell are accepted in analysis.
#[derive(Debug, Clone, Default)]
pub struct KeyRealizationTable {
    pub language: String,
    cells: Vec<KeyCell>,
    index: HashMap<(GrammaticalKey, Option<Gender>, Option<Number>), usize>,
}

impl KeyRealizationTable {
    pub fn new(language: &str) -> Self {
        KeyRealizationTable {
            language: language.to_string(),
            ..Default::default()
        }
    }

    pub fn insert(&mut self, cell: KeyCell) {
        let slot = (cell.key, cell.gender, cell.number);
        self.index.entry(slot).or_insert(self.cells.len());
        self.cells.push(cell);
    }

    pub fn cells(&self) -> &[KeyCell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Realization of `key` in `ctx`. Exact cells win over `-` wildcards.
    pub fn lookup(&self, key: &GrammaticalKey, ctx: AgreementContext) -> Result<&str, KeyError> {
        let candidates = [
            (ctx.gender, ctx.number),
            (ctx.gender, None),
            (None, ctx.number),
            (None, None),
        ];
        candidates
            .iter()
            .filter_map(|(g, n)| self.index.get(&(*key, *g, *n)))
            .map(|i| self.cells[*i].surface.as_str())
            .next()
            .ok_or_else(|| KeyError::Coverage {
                language: self.language.clone(),
                key: key.to_string(),
                context: ctx.to_string(),
            })
    }

    /// True when some context realizes `key`.
    pub fn covers(&self, key: &GrammaticalKey) -> bool {
        self.cells.iter().any(|c| c.key == *key)
    }
}

/// Key tables for all languages in a data file.
#[derive(Debug, Clone, Default)]
pub struct KeyTables {
    tables: HashMap<String, KeyRealizationTable>,
}

impl KeyTables {
    pub fn parse(text: &str) -> Result<Self, KeyError> {
        let mut tables: HashMap<String, KeyRealizationTable> = HashMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let trimmed = raw.trim_end_matches('\r');
            if trimmed.trim().is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = trimmed.split('\t').collect();
            if cols.len() != 5 {
                return Err(KeyError::Malformed {
                    line,
                    msg: format!("expected 5 columns, found {}", cols.len()),
                });
            }
            let key = parse_key_notation(cols[0]).map_err(|e| KeyError::Malformed {
                line,
                msg: e.to_string(),
            })?;
            let gender = match cols[2] {
                "-" => None,
                g => Some(Gender::from_code(g).ok_or_else(|| KeyError::Malformed {
                    line,
                    msg: format!("bad gender `{g}`"),
                })?),
            };
            let number = match cols[3] {
                "-" => None,
                v => Some(Number::from_code(v).ok_or_else(|| KeyError::Malformed {
                    line,
                    msg: format!("bad number `{v}`"),
                })?),
            };
            let surface = cols[4].trim();
            if surface.is_empty() {
                return Err(KeyError::Malformed {
                    line,
                    msg: "empty surface".into(),
                });
            }
            let lang = cols[1].trim();
            tables
                .entry(lang.to_string())
                .or_insert_with(|| KeyRealizationTable::new(lang))
                .insert(KeyCell {
                    key,
                    gender,
                    number,
                    surface: surface.to_string(),
                });
        }
        Ok(KeyTables { tables })
    }

    pub fn get(&self, language: &str) -> Option<&KeyRealizationTable> {
        self.tables.get(language)
    }

    pub fn languages(&self) -> Vec<&str> {
        let mut v: Vec<&str> = self.tables.keys().map(String::as_str).collect();
        v.sort();
        v
    }
}

pub fn load_key_tables(path: &std::path::Path) -> Result<KeyTables, crate::Error> {
    let text = std::fs::read_to_string(path).map_err(|e| crate::Error::io(path, e))?;
    Ok(KeyTables::parse(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tense_ids_are_fixed() {
        assert_eq!(TenseIdeogram::from_id(1), Some(TenseIdeogram::Infinitive));
        assert_eq!(TenseIdeogram::from_id(4), Some(TenseIdeogram::RemotePast));
        assert_eq!(TenseIdeogram::from_id(11), Some(TenseIdeogram::Conditional));
        assert_eq!(TenseIdeogram::from_id(12), None);
        assert_eq!(TenseIdeogram::from_id(0), None);
        assert_eq!("ID9".parse::<TenseIdeogram>().unwrap().name(), "past participle");
        assert!("ID0".parse::<TenseIdeogram>().is_err());
    }

    #[test]
    fn parses_spec_examples() {
        let m2 = parse_key_notation("M2").unwrap();
        assert_eq!(m2.category, KeyCategory::Possessive);
        assert_eq!(m2.person, Some(1));
        assert_eq!(m2.number, Some(Number::Singular));
        assert_eq!(m2.case_index, Some(2));
        assert_eq!(m2.case_role(), Some(CaseRole::Dative));

        assert_eq!(parse_key_notation("a.").unwrap(), GrammaticalKey::article(1));
        assert_eq!(
            parse_key_notation("&").unwrap().category,
            KeyCategory::Conjunction
        );
        assert!(matches!(
            parse_key_notation("Q9"),
            Err(KeyError::UnknownKey(t)) if t == "Q9"
        ));
    }

    #[test]
    fn superscripts_and_plural_rows() {
        assert_eq!(parse_key_notation("M²").unwrap(), parse_key_notation("M2").unwrap());
        let noi = parse_key_notation("I11").unwrap();
        assert_eq!(noi.number, Some(Number::Plural));
        assert_eq!(noi.case_index, Some(1));
        assert_eq!(noi.to_string(), "I11");
        assert!(matches!(
            parse_key_notation("a12"),
            Err(KeyError::PluralOnNonPronoun(_))
        ));
        assert!(matches!(parse_key_notation("III5"), Err(KeyError::BadCaseIndex(_))));
        assert!(matches!(parse_key_notation("&2"), Err(KeyError::BadCaseIndex(_))));
        assert_eq!(
            parse_key_notation("I.").unwrap().category,
            KeyCategory::PersonalRelativeIndicator
        );
    }

    #[test]
    fn inventory_round_trips() {
        let inv = GrammaticalKey::inventory();
        for key in &inv {
            assert_eq!(parse_key_notation(&key.to_string()).unwrap(), *key, "{key}");
        }
        let mut printed: Vec<String> = inv.iter().map(|k| k.to_string()).collect();
        printed.sort();
        printed.dedup();
        assert_eq!(printed.len(), inv.len());
    }

    #[test]
    fn first_person_possessive_roles() {
        let m = |i| GrammaticalKey::possessive(1, Number::Singular, i);
        assert_eq!(m(1).case_role(), Some(CaseRole::Genitive));
        assert_eq!(m(3).case_role(), Some(CaseRole::Base));
        assert_eq!(m(3).with_role(CaseRole::Dative), m(2));
        let s = GrammaticalKey::possessive(3, Number::Singular, 1);
        assert_eq!(s.with_role(CaseRole::Dative).case_index, Some(3));
    }

    #[test]
    fn lookup_prefers_exact_cells() {
        let tables = KeyTables::parse(
            "# test\nM2\tit\tm\tsg\tal mio\nM2\tit\tf\tsg\talla mia\nI1\tit\t-\t-\tio\nI3\tit\t-\t-\ta me\nI3\tit\t-\t-\tmi\n",
        )
        .unwrap();
        let it = tables.get("it").unwrap();
        let m2 = parse_key_notation("M2").unwrap();
        assert_eq!(
            it.lookup(&m2, AgreementContext::new(Gender::Feminine, Number::Singular))
                .unwrap(),
            "alla mia"
        );
        let i1 = parse_key_notation("I1").unwrap();
        assert_eq!(it.lookup(&i1, AgreementContext::default()).unwrap(), "io");
        let i3 = parse_key_notation("I3").unwrap();
        assert_eq!(it.lookup(&i3, AgreementContext::default()).unwrap(), "a me");
        let err = it
            .lookup(&m2, AgreementContext::new(Gender::Masculine, Number::Plural))
            .unwrap_err();
        assert!(err.to_string().contains("M2"));
    }

    #[test]
    fn malformed_lines_are_reported() {
        let err = KeyTables::parse("a1\tit\tm\tsg\til\na1\tit\tx\tsg\til\n").unwrap_err();
        assert!(matches!(err, KeyError::Malformed { line: 2, .. }));
        assert!(KeyTables::parse("a1\tit\tm\n").is_err());
    }
}
