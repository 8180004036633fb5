//! Source text to ideogram stream: plain-language simplification, then
//! reduction of each word to a key, a stem or a literal.

use std::fmt;

use thiserror::Error;

use crate::keytable::{
    parse_key_notation, CaseRole, Gender, GrammaticalKey, KeyCategory, KeyRealizationTable,
    Number, PersonNumber, TenseIdeogram,
};
use crate::lexicon::{Analysis, Lexicon, PartOfSpeech};
use crate::morph::{Language, MorphParadigm, VerbCell};
use crate::rules::RuleError;
use crate::text;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StreamError {
    #[error("line {line}: malformed token `{token}`: {msg}")]
    Malformed {
        line: usize,
        token: String,
        msg: String,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EncodeError {
    #[error("sentence {sentence}: unknown word `{token}`")]
    UnknownToken { token: String, sentence: usize },
}

/// A lexical unit of the stream.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Stem {
    pub lemma: String,
    pub pos: PartOfSpeech,
    pub gender: Option<Gender>,
    pub plural: bool,
    pub tense: Option<TenseIdeogram>,
    pub person: Option<PersonNumber>,
}

impl Stem {
    pub fn new(lemma: &str, pos: PartOfSpeech) -> Self {
        Stem {
            lemma: lemma.to_string(),
            pos,
            gender: None,
            plural: false,
            tense: None,
            person: None,
        }
    }

    /// Part of speech a reader assumes when none is written.
    fn implied_pos(&self) -> PartOfSpeech {
        if self.tense.is_some() {
            PartOfSpeech::Verb
        } else if self.gender.is_some() {
            PartOfSpeech::Adjective
        } else {
            PartOfSpeech::Noun
        }
    }
}

impl fmt::Display for Stem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lemma = self.lemma.replace(' ', "_");
        f.write_str(&lemma)?;
        if self.pos != self.implied_pos() || parse_key_notation(&lemma).is_ok() {
            write!(f, "/{}", self.pos)?;
        }
        if let Some(g) = self.gender {
            write!(f, "-{}", g.code())?;
        }
        if self.plural {
            f.write_str("+")?;
        }
        if let Some(t) = self.tense {
            write!(f, ":{t}")?;
            if let Some(p) = self.person {
                write!(f, ":{p}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EncodedToken {
    Key(GrammaticalKey),
    Stem(Stem),
    Literal(String),
}

impl fmt::Display for EncodedToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EncodedToken::Key(k) => write!(f, "{k}"),
            EncodedToken::Stem(s) => write!(f, "{s}"),
            EncodedToken::Literal(t) => {
                f.write_str("\"")?;
                for c in t.chars() {
                    match c {
                        '"' => f.write_str("\\\"")?,
                        '\\' => f.write_str("\\\\")?,
                        '\n' => f.write_str("\\n")?,
                        c => write!(f, "{c}")?,
                    }
                }
                f.write_str("\"")
            }
        }
    }
}

/// Sentences of tokens.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EncodedStream {
    pub sentences: Vec<Vec<EncodedToken>>,
}

impl EncodedStream {
    pub fn tokens(&self) -> impl Iterator<Item = &EncodedToken> {
        self.sentences.iter().flatten()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }
}

impl fmt::Display for EncodedStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_stream(self))
    }
}

/// Canonical notation, one sentence per line.
pub fn render_stream(stream: &EncodedStream) -> String {
    stream
        .sentences
        .iter()
        .map(|s| {
            s.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn split_line(line: &str, line_no: usize) -> Result<Vec<String>, StreamError> {
    let mut out = Vec::new();
    let mut chars = line.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let mut tok = String::new();
        if c == '"' {
            tok.push(chars.next().unwrap());
            let mut closed = false;
            while let Some(c) = chars.next() {
                tok.push(c);
                if c == '\\' {
                    if let Some(n) = chars.next() {
                        tok.push(n);
                    }
                } else if c == '"' {
                    closed = true;
                    break;
                }
            }
            if !closed {
                return Err(StreamError::Malformed {
                    line: line_no,
                    token: tok,
                    msg: "unterminated literal".into(),
                });
            }
        } else {
            while let Some(&c) = chars.peek() {
                if c.is_whitespace() {
                    break;
                }
                tok.push(c);
                chars.next();
            }
        }
        out.push(tok);
    }
    Ok(out)
}

fn parse_literal(tok: &str) -> Option<String> {
    let inner = tok.strip_prefix('"')?.strip_suffix('"')?;
    let mut out = String::new();
    let mut chars = inner.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            match chars.next()? {
                'n' => out.push('\n'),
                other => out.push(other),
            }
        } else {
            out.push(c);
        }
    }
    Some(out)
}

fn parse_stem(tok: &str) -> Result<Stem, String> {
    let mut parts = tok.split(':');
    let head = parts.next().unwrap_or_default();
    let tense = parts
        .next()
        .map(|t| t.parse::<TenseIdeogram>().map_err(|e| e.to_string()))
        .transpose()?;
    let person = parts
        .next()
        .map(|p| {
            p.parse::<PersonNumber>()
                .map_err(|_| format!("bad person `{p}`"))
        })
        .transpose()?;
    if parts.next().is_some() {
        return Err("too many `:` fields".into());
    }
    let (head, plural) = match head.strip_suffix('+') {
        Some(h) => (h, true),
        None => (head, false),
    };
    let (head, gender) = if let Some(h) = head.strip_suffix("-m") {
        (h, Some(Gender::Masculine))
    } else if let Some(h) = head.strip_suffix("-f") {
        (h, Some(Gender::Feminine))
    } else {
        (head, None)
    };
    let (lemma, pos) = match head.rsplit_once('/') {
        Some((l, p)) => (
            l,
            Some(
                p.parse::<PartOfSpeech>()
                    .map_err(|_| format!("unknown part of speech `{p}`"))?,
            ),
        ),
        None => (head, None),
    };
    if lemma.is_empty() {
        return Err("empty lemma".into());
    }
    let mut stem = Stem {
        lemma: lemma.replace('_', " "),
        pos: PartOfSpeech::Noun,
        gender,
        plural,
        tense,
        person,
    };
    stem.pos = pos.unwrap_or_else(|| stem.implied_pos());
    Ok(stem)
}

/// Inverse of [`render_stream`].
pub fn parse_stream(text: &str) -> Result<EncodedStream, StreamError> {
    let mut sentences = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let toks = split_line(line, n + 1)?;
        if toks.is_empty() {
            continue;
        }
        let mut sentence = Vec::new();
        for tok in toks {
            let malformed = |msg: String| StreamError::Malformed {
                line: n + 1,
                token: tok.clone(),
                msg,
            };
            let token = if tok.starts_with('"') {
                EncodedToken::Literal(
                    parse_literal(&tok).ok_or_else(|| malformed("bad literal".into()))?,
                )
            } else if let Ok(k) = parse_key_notation(&tok) {
                EncodedToken::Key(k)
            } else {
                EncodedToken::Stem(parse_stem(&tok).map_err(malformed)?)
            };
            sentence.push(token);
        }
        sentences.push(sentence);
    }
    Ok(EncodedStream { sentences })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleClass {
    Superlative,
    RareExpression,
    DirectConstruction,
    EllipsisFill,
}

impl RuleClass {
    pub fn tag(self) -> &'static str {
        match self {
            RuleClass::Superlative => "superlative",
            RuleClass::RareExpression => "rareExpression",
            RuleClass::DirectConstruction => "directConstruction",
            RuleClass::EllipsisFill => "ellipsisFill",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        [
            RuleClass::Superlative,
            RuleClass::RareExpression,
            RuleClass::DirectConstruction,
            RuleClass::EllipsisFill,
        ]
        .into_iter()
        .find(|c| c.tag() == s)
    }
}

/// Source-side rewrite. A pattern token ending in `*` matches any longer
/// token with that prefix; each `*` in the replacement receives the next
/// captured remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplificationRule {
    pub class: RuleClass,
    pub pattern: Vec<String>,
    pub replacement: Vec<String>,
}

impl SimplificationRule {
    fn match_at(&self, tokens: &[String], at: usize) -> Option<Vec<String>> {
        if at + self.pattern.len() > tokens.len() {
            return None;
        }
        let mut captures = Vec::new();
        for (p, t) in self.pattern.iter().zip(&tokens[at..]) {
            match p.strip_suffix('*') {
                Some(prefix) if !prefix.is_empty() => {
                    let rest = t.strip_prefix(prefix)?;
                    if rest.is_empty() {
                        return None;
                    }
                    captures.push(rest.to_string());
                }
                _ => {
                    if p != t {
                        return None;
                    }
                }
            }
        }
        Some(captures)
    }

    fn expand(&self, captures: &[String]) -> Vec<String> {
        let mut caps = captures.iter();
        self.replacement
            .iter()
            .map(|r| {
                if r.contains('*') {
                    r.replacen('*', caps.next().map(String::as_str).unwrap_or(""), 1)
                } else {
                    r.clone()
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Default)]
pub struct SimplificationRules {
    rules: Vec<SimplificationRule>,
}

impl SimplificationRules {
    /// Parse `class <TAB> pattern <TAB> replacement` lines.
    pub fn parse(text: &str) -> Result<Self, RuleError> {
        let mut rules = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let raw = raw.trim_end_matches('\r');
            if raw.trim().is_empty() || raw.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = raw.split('\t').collect();
            if cols.len() != 3 {
                return Err(RuleError::Malformed {
                    line,
                    msg: format!("expected 3 columns, found {}", cols.len()),
                });
            }
            let class = RuleClass::parse(cols[0].trim()).ok_or_else(|| RuleError::Malformed {
                line,
                msg: format!("unknown rule class `{}`", cols[0]),
            })?;
            let rule = SimplificationRule {
                class,
                pattern: text::tokenize(cols[1]),
                replacement: text::tokenize(cols[2]),
            };
            if rule.pattern.is_empty() {
                return Err(RuleError::Malformed {
                    line,
                    msg: "empty pattern".into(),
                });
            }
            let wild_p = rule.pattern.iter().filter(|p| p.ends_with('*')).count();
            let wild_r = rule.replacement.iter().filter(|p| p.contains('*')).count();
            if wild_r > wild_p {
                return Err(RuleError::Malformed {
                    line,
                    msg: "replacement uses more wildcards than the pattern binds".into(),
                });
            }
            if (0..rule.replacement.len()).any(|i| rule.match_at(&rule.replacement, i).is_some()) {
                return Err(RuleError::Reintroduces { line });
            }
            rules.push(rule);
        }
        Ok(SimplificationRules { rules })
    }

    pub fn rules(&self) -> &[SimplificationRule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Replacement words that neither the lexicon nor the key table know.
    pub fn unknown_vocabulary(&self, lex: &Lexicon, keys: &KeyRealizationTable) -> Vec<String> {
        let key_words: Vec<String> = keys
            .cells()
            .iter()
            .flat_map(|c| text::tokenize(&c.surface.to_lowercase()))
            .collect();
        let multi: Vec<&String> = lex.multiword().iter().flat_map(|(t, _)| t).collect();
        let mut out = Vec::new();
        for rule in &self.rules {
            for w in &rule.replacement {
                if w.contains('*') || text::is_punct_token(w) {
                    continue;
                }
                let lw = w.to_lowercase();
                let known = !lex.analyze(w).is_empty()
                    || key_words.contains(&lw)
                    || multi.contains(&&lw);
                if !known && !out.contains(w) {
                    out.push(w.clone());
                }
            }
        }
        out
    }

    fn rewrite_once(&self, tokens: &[String]) -> Option<Vec<String>> {
        let mut out = Vec::with_capacity(tokens.len());
        let mut changed = false;
        let mut i = 0;
        while i < tokens.len() {
            let mut best: Option<(&SimplificationRule, Vec<String>)> = None;
            for rule in &self.rules {
                if let Some(c) = rule.match_at(tokens, i) {
                    if best
                        .as_ref()
                        .is_none_or(|(b, _)| rule.pattern.len() > b.pattern.len())
                    {
                        best = Some((rule, c));
                    }
                }
            }
            match best {
                Some((rule, caps)) => {
                    out.extend(rule.expand(&caps));
                    i += rule.pattern.len();
                    changed = true;
                }
                None => {
                    out.push(tokens[i].clone());
                    i += 1;
                }
            }
        }
        changed.then_some(out)
    }
}

/// Apply the rules left to right, longest match first, until no pattern
/// occurs. Text without matches is returned unchanged.
pub fn simplify(text_in: &str, rules: &SimplificationRules) -> String {
    let mut tokens = text::tokenize(text_in);
    let mut changed = false;
    for _ in 0..=rules.len().max(1) * 4 {
        match rules.rewrite_once(&tokens) {
            Some(next) => {
                tokens = next;
                changed = true;
            }
            None => break,
        }
    }
    if changed {
        text::detokenize(&tokens)
    } else {
        text_in.to_string()
    }
}

const ARTICULATED: [(&str, &str); 3] = [("ne", "in"), ("da", "da"), ("su", "su")];
const ARTICLE_TAILS: [(&str, &str); 7] = [
    ("l", "il"),
    ("llo", "lo"),
    ("lla", "la"),
    ("ll'", "l'"),
    ("i", "i"),
    ("gli", "gli"),
    ("lle", "le"),
];

fn split_articulated(lower: &str) -> Option<(&'static str, &'static str)> {
    match lower {
        "col" => return Some(("con", "il")),
        "coi" => return Some(("con", "i")),
        _ => {}
    }
    for (stem, prep) in ARTICULATED {
        if let Some(rest) = lower.strip_prefix(stem) {
            if let Some((_, art)) = ARTICLE_TAILS.iter().find(|(t, _)| *t == rest) {
                return Some((prep, art));
            }
        }
    }
    None
}

/// `nella` gives `in la`, `dall'` gives `da l'`, `d'` gives `di`.
fn expand_contractions(tokens: Vec<String>) -> Vec<String> {
    let mut out = Vec::with_capacity(tokens.len());
    for tok in tokens {
        let lower = tok.to_lowercase();
        let upper = tok.chars().next().is_some_and(char::is_uppercase);
        if lower == "d'" {
            out.push(if upper { "Di" } else { "di" }.to_string());
        } else if let Some((prep, art)) = split_articulated(&lower) {
            out.push(if upper { text::capitalize(prep) } else { prep.to_string() });
            out.push(art.to_string());
        } else {
            out.push(tok);
        }
    }
    out
}

fn sentences(tokens: Vec<String>) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for tok in tokens {
        let end = tok.chars().all(|c| c == '.') || tok == "!" || tok == "?";
        cur.push(tok);
        if end {
            out.push(std::mem::take(&mut cur));
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

#[derive(Debug, Clone)]
struct KeyCandidate {
    key: GrammaticalKey,
    gender: Option<Gender>,
    number: Option<Number>,
}

#[derive(Debug, Clone)]
enum Item {
    Punct(String),
    Keys(Vec<KeyCandidate>),
    Word(Vec<Analysis>),
    Multi(usize),
    Proper(String),
}

/// Reads simplified Italian into the interlingua.
pub struct Encoder<'a> {
    lexicon: &'a Lexicon,
    surfaces: Vec<(Vec<String>, KeyCandidate)>,
}

impl<'a> Encoder<'a> {
    pub fn new(lexicon: &'a Lexicon, keys: &'a KeyRealizationTable) -> Self {
        let surfaces = keys
            .cells()
            .iter()
            .map(|c| {
                (
                    text::tokenize(&c.surface.to_lowercase()),
                    KeyCandidate {
                        key: c.key,
                        gender: c.gender,
                        number: c.number,
                    },
                )
            })
            .collect();
        Encoder { lexicon, surfaces }
    }

    pub fn encode(&self, input: &str) -> Result<EncodedStream, EncodeError> {
        let tokens = expand_contractions(text::tokenize(input));
        let mut out = Vec::new();
        for (idx, sentence) in sentences(tokens).into_iter().enumerate() {
            let items = self.items(&sentence, idx + 1)?;
            let encoded = self.resolve(&items);
            if !encoded.is_empty() {
                out.push(encoded);
            }
        }
        Ok(EncodedStream { sentences: out })
    }

    fn items(&self, tokens: &[String], sentence: usize) -> Result<Vec<Item>, EncodeError> {
        let lower: Vec<String> = tokens.iter().map(|t| t.to_lowercase()).collect();
        let mut items = Vec::new();
        let mut i = 0;
        while i < tokens.len() {
            let tok = &tokens[i];
            if text::is_punct_token(tok) {
                items.push(Item::Punct(tok.clone()));
                i += 1;
                continue;
            }
            if let Some((len, entry)) = self
                .lexicon
                .multiword()
                .iter()
                .find(|(t, _)| lower[i..].starts_with(t))
                .map(|(t, e)| (t.len(), *e))
            {
                items.push(Item::Multi(entry));
                i += len;
                continue;
            }
            let best = self
                .surfaces
                .iter()
                .filter(|(s, _)| lower[i..].starts_with(s))
                .map(|(s, _)| s.len())
                .max();
            if let Some(len) = best {
                let cands = self
                    .surfaces
                    .iter()
                    .filter(|(s, _)| s.len() == len && lower[i..].starts_with(s))
                    .map(|(_, c)| c.clone())
                    .collect();
                items.push(Item::Keys(cands));
                i += len;
                continue;
            }
            let analyses = self.lexicon.analyze(tok);
            if !analyses.is_empty() {
                items.push(Item::Word(analyses));
            } else if tok.chars().next().is_some_and(char::is_uppercase) {
                items.push(Item::Proper(tok.clone()));
            } else {
                return Err(EncodeError::UnknownToken {
                    token: tok.clone(),
                    sentence,
                });
            }
            i += 1;
        }
        Ok(items)
    }

    fn pick_word(&self, items: &[Item], at: usize) -> Option<Analysis> {
        let Item::Word(cands) = &items[at] else {
            return None;
        };
        let determiner_numbers: Vec<Option<Number>> = match at.checked_sub(1).map(|p| &items[p]) {
            Some(Item::Keys(k)) => k
                .iter()
                .filter(|c| c.key.category.is_determiner())
                .map(|c| c.number)
                .collect(),
            _ => Vec::new(),
        };
        if !determiner_numbers.is_empty() {
            let agrees = |a: &&Analysis| {
                a.features.number.is_none() || determiner_numbers.contains(&a.features.number)
            };
            let nominal = cands.iter().filter(|a| a.pos.is_nominal());
            if let Some(a) = nominal.clone().find(agrees).or_else(|| nominal.clone().next()) {
                return Some(a.clone());
            }
        }
        let first = &cands[0];
        if first.pos != PartOfSpeech::Verb {
            return Some(first.clone());
        }
        let subject = self.subject(items, at);
        let verbs: Vec<&Analysis> = cands
            .iter()
            .filter(|a| a.pos == PartOfSpeech::Verb && a.lemma == first.lemma)
            .collect();
        let best = verbs.iter().min_by_key(|a| {
            let person_rank = match (a.features.person, subject) {
                (Some(p), Some(s)) => u8::from(p != s),
                (Some(p), None) => u8::from(p != PersonNumber::new(3, Number::Singular)),
                (None, _) => 0,
            };
            let tense = a.features.tense.unwrap_or(TenseIdeogram::Infinitive);
            let defined = self.target_defined(a);
            (person_rank, !defined, tense.id())
        })?;
        Some((*best).clone())
    }

    fn target_defined(&self, a: &Analysis) -> bool {
        let e = self.lexicon.entry(a.entry);
        self.lexicon
            .inflect(a.entry, Language::French, a.features)
            .is_ok()
            || MorphParadigm::for_lemma(Language::French, &e.target_lemma).is_some_and(|p| {
                p.has_cell(VerbCell::new(
                    a.features.tense.unwrap_or(TenseIdeogram::Infinitive),
                    a.features.person,
                ))
            })
    }

    /// Person of the nearest subject pronoun before `at` in the same clause.
    fn subject(&self, items: &[Item], at: usize) -> Option<PersonNumber> {
        for item in items[..at].iter().rev() {
            match item {
                Item::Keys(c) => {
                    let k = c[0].key;
                    if k.category == KeyCategory::Relative {
                        return None;
                    }
                    let subj = c.iter().find(|c| {
                        c.key.category == KeyCategory::PersonalPronoun
                            && c.key.case_role() == Some(CaseRole::Base)
                    });
                    if let Some(s) = subj {
                        return Some(PersonNumber::new(
                            s.key.person.unwrap_or(3),
                            s.key.number.unwrap_or(Number::Singular),
                        ));
                    }
                }
                Item::Word(a) => {
                    let first = &a[0];
                    if first.pos == PartOfSpeech::Verb
                        && first.features.tense.is_some_and(TenseIdeogram::is_finite)
                    {
                        return None;
                    }
                    if first.lemma == "che" {
                        return None;
                    }
                }
                _ => {}
            }
        }
        None
    }

    fn noun_follows(&self, items: &[Item], at: usize) -> bool {
        for item in &items[at + 1..] {
            match item {
                Item::Word(a) => match a[0].pos {
                    PartOfSpeech::Noun | PartOfSpeech::Numeral | PartOfSpeech::ProperNoun => {
                        return true
                    }
                    PartOfSpeech::Adjective => return true,
                    PartOfSpeech::Adverb => continue,
                    _ => return a.iter().any(|x| x.pos.is_nominal()),
                },
                Item::Multi(e) => return self.lexicon.entry(*e).pos.is_nominal(),
                _ => return false,
            }
        }
        false
    }

    fn choose_key(&self, items: &[Item], at: usize, cands: &[KeyCandidate]) -> KeyCandidate {
        let np = self.noun_follows(items, at);
        let dets: Vec<&KeyCandidate> = cands.iter().filter(|c| c.key.category.is_determiner()).collect();
        let others: Vec<&KeyCandidate> = cands.iter().filter(|c| !c.key.category.is_determiner()).collect();
        let pool = if !dets.is_empty() && (np || others.is_empty()) {
            dets
        } else {
            others
        };
        let governor = at
            .checked_sub(1)
            .and_then(|p| match &items[p] {
                Item::Word(a) if a[0].pos == PartOfSpeech::Preposition => Some(a[0].lemma.as_str()),
                _ => None,
            });
        let after_finite = at
            .checked_sub(1)
            .is_some_and(|p| matches!(&items[p], Item::Word(a) if a[0].pos == PartOfSpeech::Verb && a[0].features.tense.is_some_and(TenseIdeogram::is_finite)));
        let role = match governor {
            Some("a") => CaseRole::Dative,
            Some("di") => CaseRole::Genitive,
            _ if after_finite && pool[0].key.category == KeyCategory::PersonalPronoun => {
                CaseRole::Object
            }
            _ => CaseRole::Base,
        };
        let pick = pool
            .iter()
            .find(|c| c.key.case_role() == Some(role))
            .or_else(|| pool.iter().find(|c| c.key.case_role() != Some(CaseRole::Object)))
            .unwrap_or(&pool[0]);
        (*pick).clone()
    }

    fn agreeing_gender(&self, items: &[Item], at: usize) -> Option<Gender> {
        let noun_gender = |item: &Item| match item {
            Item::Word(a) => a
                .iter()
                .find(|x| x.pos == PartOfSpeech::Noun)
                .filter(|_| a[0].pos == PartOfSpeech::Noun)
                .and_then(|x| self.lexicon.entry(x.entry).source_gender),
            _ => None,
        };
        let skippable = |item: &Item| match item {
            Item::Word(a) => matches!(
                a[0].pos,
                PartOfSpeech::Adjective | PartOfSpeech::Adverb | PartOfSpeech::Numeral
            ),
            Item::Keys(k) => k[0].key.category == KeyCategory::Conjunction,
            _ => false,
        };
        for item in &items[at + 1..] {
            if let Some(g) = noun_gender(item) {
                return Some(g);
            }
            if !skippable(item) {
                break;
            }
        }
        for item in items[..at].iter().rev() {
            if let Some(g) = noun_gender(item) {
                return Some(g);
            }
            if !matches!(item, Item::Word(a) if a[0].pos == PartOfSpeech::Adverb) {
                break;
            }
        }
        None
    }

    fn resolve(&self, items: &[Item]) -> Vec<EncodedToken> {
        let mut out = Vec::new();
        for (at, item) in items.iter().enumerate() {
            match item {
                Item::Punct(p) | Item::Proper(p) => out.push(EncodedToken::Literal(p.clone())),
                Item::Multi(e) => {
                    let entry = self.lexicon.entry(*e);
                    out.push(EncodedToken::Stem(Stem::new(&entry.source_lemma, entry.pos)));
                }
                Item::Keys(cands) => {
                    let c = self.choose_key(items, at, cands);
                    out.push(EncodedToken::Key(c.key));
                    if c.key.category.is_determiner() && !self.noun_follows(items, at) {
                        if let Some(g) = c.gender {
                            out.push(EncodedToken::Key(GrammaticalKey::gender_marker(g)));
                        }
                        if c.number == Some(Number::Plural) {
                            out.push(EncodedToken::Key(GrammaticalKey::plural_marker()));
                        }
                    }
                }
                Item::Word(_) => {
                    let a = self.pick_word(items, at).expect("word item");
                    out.push(EncodedToken::Stem(self.stem(items, at, &a)));
                }
            }
        }
        out
    }

    fn stem(&self, items: &[Item], at: usize, a: &Analysis) -> Stem {
        let entry = self.lexicon.entry(a.entry);
        let mut stem = Stem::new(&entry.source_lemma, a.pos);
        let plural = a.features.number == Some(Number::Plural);
        match a.pos {
            PartOfSpeech::Noun => stem.plural = plural,
            PartOfSpeech::Adjective => {
                stem.gender = self
                    .agreeing_gender(items, at)
                    .or(a.features.gender)
                    .or(Some(Gender::Masculine));
                stem.plural = plural;
            }
            PartOfSpeech::Verb => {
                stem.tense = a.features.tense;
                stem.person = a.features.person;
                if a.features.tense == Some(TenseIdeogram::PastParticiple) {
                    stem.gender = a.features.gender;
                    stem.plural = plural;
                }
            }
            _ => {}
        }
        stem
    }
}

/// Encode simplified source text.
pub fn encode(
    text: &str,
    lexicon: &Lexicon,
    keys: &KeyRealizationTable,
) -> Result<EncodedStream, EncodeError> {
    Encoder::new(lexicon, keys).encode(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stem(lemma: &str, pos: PartOfSpeech) -> Stem {
        Stem::new(lemma, pos)
    }

    #[test]
    fn renders_spec_examples() {
        let mut occhio = stem("occhio", PartOfSpeech::Noun);
        occhio.plural = true;
        let mut apparire = stem("apparire", PartOfSpeech::Verb);
        apparire.tense = Some(TenseIdeogram::RemotePast);
        apparire.person = Some(PersonNumber::new(3, Number::Singular));
        let s = EncodedStream {
            sentences: vec![vec![
                EncodedToken::Key(parse_key_notation("M2").unwrap()),
                EncodedToken::Stem(occhio),
                EncodedToken::Stem(apparire),
            ]],
        };
        assert_eq!(render_stream(&s), "M2 occhio+ apparire:ID4:3sg");
        assert_eq!(parse_stream("M2 occhio+ apparire:ID4:3sg").unwrap(), s);
        assert_eq!(render_stream(&EncodedStream::default()), "");
        assert!(parse_stream("").unwrap().is_empty());
        let lit = EncodedStream {
            sentences: vec![vec![EncodedToken::Literal("Beatrice".into())]],
        };
        assert_eq!(render_stream(&lit), "\"Beatrice\"");
        assert_eq!(parse_stream("\"Beatrice\"").unwrap(), lit);
    }

    #[test]
    fn explicit_pos_when_not_implied() {
        let quasi = stem("quasi", PartOfSpeech::Adverb);
        assert_eq!(quasi.to_string(), "quasi/adv");
        let a = stem("a", PartOfSpeech::Preposition);
        assert_eq!(a.to_string(), "a/prep");
        let mut glorioso = stem("glorioso", PartOfSpeech::Adjective);
        glorioso.gender = Some(Gender::Feminine);
        assert_eq!(glorioso.to_string(), "glorioso-f");
        let mid = stem("in mezzo di", PartOfSpeech::Preposition);
        assert_eq!(mid.to_string(), "in_mezzo_di/prep");
        let back = parse_stream("in_mezzo_di/prep").unwrap();
        assert_eq!(back.sentences[0][0], EncodedToken::Stem(mid));
    }

    #[test]
    fn literal_escapes_round_trip() {
        let s = EncodedStream {
            sentences: vec![vec![EncodedToken::Literal("a \"b\" \\ c".into())]],
        };
        assert_eq!(parse_stream(&render_stream(&s)).unwrap(), s);
    }

    #[test]
    fn malformed_tokens() {
        assert!(parse_stream("\"open").is_err());
        assert!(parse_stream("vedere:ID12").is_err());
        assert!(parse_stream("vedere:ID4:9sg").is_err());
        assert!(parse_stream("x/thing").is_err());
    }

    const RULES: &str = "superlative\tnobilissimo\tmolto nobile\n\
        superlative\tbianchissim*\tmolto bianc*\n\
        rareExpression\talla guisa che\tcome\n";

    #[test]
    fn simplify_examples() {
        let rules = SimplificationRules::parse(RULES).unwrap();
        assert_eq!(simplify("nobilissimo colore", &rules), "molto nobile colore");
        assert_eq!(simplify("alla guisa che", &rules), "come");
        assert_eq!(simplify("la donna apparve", &rules), "la donna apparve");
        assert_eq!(simplify("colore bianchissimo.", &rules), "colore molto bianco.");
        let once = simplify("ornata alla guisa che, nobilissimo", &rules);
        assert_eq!(simplify(&once, &rules), once);
    }

    #[test]
    fn simplification_rule_validation() {
        assert!(matches!(
            SimplificationRules::parse("ellipsisFill\tmi parve\tegli mi parve\n"),
            Err(RuleError::Reintroduces { line: 1 })
        ));
        assert!(SimplificationRules::parse("bogus\ta\tb\n").is_err());
        assert!(SimplificationRules::parse("superlative\t\tb\n").is_err());
    }

    #[test]
    fn contractions_expand() {
        let toks = expand_contractions(text::tokenize("Dalla fine nell'ultimo d'uomo nei"));
        assert_eq!(toks, ["Da", "la", "fine", "in", "l'", "ultimo", "di", "uomo", "in", "i"]);
    }
}
