//! Ideogram stream to French: realization through the key table and the
//! lexicon, then the syntactic, morphological and differential stages.

use thiserror::Error;

use crate::encoder::{EncodeError, EncodedStream, EncodedToken, Stem};
use crate::keytable::{
    AgreementContext, Gender, GrammaticalKey, KeyCategory, KeyError, KeyRealizationTable, Number,
    PersonNumber, TenseIdeogram,
};
use crate::lexicon::{Features, Lexicon, LexiconError, PartOfSpeech};
use crate::morph::Language;
use crate::pipeline::Pipeline;
use crate::rules::{CorrectionRules, DraftToken, Stage};
use crate::text;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizeError {
    #[error("sentence {sentence}: {source}")]
    Key { sentence: usize, source: KeyError },
    #[error("sentence {sentence}: `{token}`: {source}")]
    Lexicon {
        sentence: usize,
        token: String,
        source: LexiconError,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TranslateError {
    #[error("encode: {0}")]
    Encode(#[from] EncodeError),
    #[error("realize: {0}")]
    Realize(#[from] RealizeError),
    #[error("{stage}: rewrite budget of {budget} steps exhausted")]
    Budget { stage: Stage, budget: usize },
}

/// Draft tokens, one vector per sentence.
pub type Draft = Vec<Vec<DraftToken>>;

fn key_tag(category: KeyCategory) -> &'static str {
    match category {
        KeyCategory::Article => "art",
        KeyCategory::DemonstrativeNear | KeyCategory::DemonstrativeFar => "dem",
        KeyCategory::PersonalPronoun => "pron",
        KeyCategory::Possessive => "poss",
        KeyCategory::Relative => "rel",
        KeyCategory::Conjunction => "conj",
        _ => "mark",
    }
}

fn entry_for(lex: &Lexicon, stem: &Stem) -> Option<usize> {
    lex.find(&stem.lemma, stem.pos)
        .or_else(|| lex.find_any(&stem.lemma))
}

fn number_of(plural: bool) -> Number {
    if plural {
        Number::Plural
    } else {
        Number::Singular
    }
}

/// Gender and number a determiner at `at` agrees with: the next noun, else
/// explicit marker keys, else the first adjective, else masculine singular.
fn forward_context(sentence: &[EncodedToken], at: usize, lex: &Lexicon) -> AgreementContext {
    let mut adjective: Option<AgreementContext> = None;
    let mut marked = AgreementContext::default();
    let mut saw_marker = false;
    for tok in &sentence[at + 1..] {
        match tok {
            EncodedToken::Key(k) if k.is_marker() => {
                saw_marker = true;
                match k.category {
                    KeyCategory::GenderMarker => marked.gender = k.gender,
                    _ => marked.number = Some(Number::Plural),
                }
            }
            _ if saw_marker => break,
            EncodedToken::Stem(s) => match s.pos {
                PartOfSpeech::Noun | PartOfSpeech::ProperNoun => {
                    let gender = entry_for(lex, s)
                        .and_then(|e| lex.entry(e).target_gender)
                        .or(s.gender)
                        .unwrap_or(Gender::Masculine);
                    return AgreementContext::new(gender, number_of(s.plural));
                }
                PartOfSpeech::Adjective | PartOfSpeech::Numeral => {
                    if adjective.is_none() && s.pos == PartOfSpeech::Adjective {
                        adjective = Some(AgreementContext::new(
                            s.gender.unwrap_or(Gender::Masculine),
                            number_of(s.plural),
                        ));
                    }
                }
                PartOfSpeech::Adverb => {}
                _ => break,
            },
            _ => break,
        }
    }
    if saw_marker {
        return AgreementContext {
            gender: marked.gender.or(Some(Gender::Masculine)),
            number: marked.number.or(Some(Number::Singular)),
        };
    }
    adjective.unwrap_or(AgreementContext::new(Gender::Masculine, Number::Singular))
}

/// Antecedent of a relative at `at`: the nearest noun before it.
fn backward_context(sentence: &[EncodedToken], at: usize, lex: &Lexicon) -> AgreementContext {
    for tok in sentence[..at].iter().rev() {
        if let EncodedToken::Stem(s) = tok {
            if matches!(s.pos, PartOfSpeech::Noun | PartOfSpeech::ProperNoun) {
                let gender = entry_for(lex, s)
                    .and_then(|e| lex.entry(e).target_gender)
                    .unwrap_or(Gender::Masculine);
                return AgreementContext::new(gender, number_of(s.plural));
            }
        }
    }
    AgreementContext::new(Gender::Masculine, Number::Singular)
}

fn key_context(key: &GrammaticalKey, sentence: &[EncodedToken], at: usize, lex: &Lexicon) -> AgreementContext {
    match key.category {
        KeyCategory::Relative => backward_context(sentence, at, lex),
        c if c.is_determiner() => forward_context(sentence, at, lex),
        _ => AgreementContext {
            gender: key.gender,
            number: key.number,
        },
    }
}

fn stem_features(stem: &Stem, lex: &Lexicon, entry: usize) -> Features {
    let number = Some(number_of(stem.plural));
    match lex.entry(entry).pos {
        PartOfSpeech::Noun => Features {
            gender: lex.entry(entry).target_gender,
            number,
            ..Default::default()
        },
        PartOfSpeech::Adjective => Features {
            gender: Some(stem.gender.unwrap_or(Gender::Masculine)),
            number,
            ..Default::default()
        },
        PartOfSpeech::Verb => {
            let tense = stem.tense.unwrap_or(TenseIdeogram::Infinitive);
            let mut f = Features::verb(tense, None);
            if tense.is_finite() {
                f.person = Some(stem.person.unwrap_or(PersonNumber::new(3, Number::Singular)));
            }
            if tense == TenseIdeogram::PastParticiple {
                f.gender = Some(stem.gender.unwrap_or(Gender::Masculine));
                f.number = number;
            }
            f
        }
        _ => Features::default(),
    }
}

/// Keys and stems to French draft tokens, order unchanged.
pub fn realize(
    stream: &EncodedStream,
    keys: &KeyRealizationTable,
    lex: &Lexicon,
) -> Result<Draft, RealizeError> {
    let mut out = Vec::new();
    for (si, sentence) in stream.sentences.iter().enumerate() {
        let mut draft = Vec::new();
        for (at, tok) in sentence.iter().enumerate() {
            match tok {
                EncodedToken::Key(k) if k.is_marker() => {}
                EncodedToken::Key(k) => {
                    let ctx = key_context(k, sentence, at, lex);
                    let surface = keys.lookup(k, ctx).map_err(|source| RealizeError::Key {
                        sentence: si + 1,
                        source,
                    })?;
                    for w in surface.split(' ') {
                        let mut t = DraftToken::word(w, key_tag(k.category));
                        t.features.gender = ctx.gender;
                        t.features.number = ctx.number;
                        draft.push(t);
                    }
                }
                EncodedToken::Stem(s) => {
                    let lex_err = |source| RealizeError::Lexicon {
                        sentence: si + 1,
                        token: s.to_string(),
                        source,
                    };
                    let entry = entry_for(lex, s).ok_or_else(|| {
                        lex_err(LexiconError::Missing {
                            lemma: s.lemma.clone(),
                            pos: s.pos,
                        })
                    })?;
                    let features = stem_features(s, lex, entry);
                    let surface = lex
                        .inflect(entry, Language::French, features)
                        .map_err(lex_err)?;
                    let pos = lex.entry(entry).pos.tag();
                    let words: Vec<&str> = surface.split(' ').collect();
                    let single = words.len() == 1;
                    for w in words {
                        draft.push(DraftToken {
                            surface: w.to_string(),
                            pos: pos.to_string(),
                            entry: single.then_some(entry),
                            features,
                        });
                    }
                }
                EncodedToken::Literal(t) => {
                    let pos = if text::is_punct_token(t) { "punct" } else { "lit" };
                    draft.push(DraftToken::word(t, pos));
                }
            }
        }
        out.push(draft);
    }
    Ok(out)
}

fn run_stage(
    draft: Draft,
    rules: &CorrectionRules,
    stage: Stage,
    lex: Option<&Lexicon>,
) -> Result<Draft, TranslateError> {
    draft
        .into_iter()
        .map(|sentence| {
            let outcome = rules.run(stage, sentence, lex);
            if outcome.exhausted() {
                Err(TranslateError::Budget {
                    stage,
                    budget: outcome.budget,
                })
            } else {
                Ok(outcome.tokens)
            }
        })
        .collect()
}

/// Stage C: word order.
pub fn correct_syntax(draft: Draft, rules: &CorrectionRules) -> Result<Draft, TranslateError> {
    run_stage(draft, rules, Stage::Syntactic, None)
}

/// Stage D: re-inflect every lexical token from its features (applying
/// irregular forms), then run the agreement rules.
pub fn correct_morphology(
    draft: Draft,
    rules: &CorrectionRules,
    lex: &Lexicon,
) -> Result<Draft, TranslateError> {
    let draft = draft
        .into_iter()
        .map(|sentence| {
            sentence
                .into_iter()
                .map(|mut t| {
                    if let Some(e) = t.entry {
                        if let Ok(s) = lex.inflect(e, Language::French, t.features) {
                            t.surface = s;
                        }
                    }
                    t
                })
                .collect()
        })
        .collect();
    run_stage(draft, rules, Stage::Morphological, Some(lex))
}

/// Differential repairs, then detokenization with a capital at each
/// sentence start.
pub fn apply_differential(draft: Draft, rules: &CorrectionRules) -> Result<String, TranslateError> {
    let draft = run_stage(draft, rules, Stage::Differential, None)?;
    Ok(detokenize(&draft))
}

pub fn detokenize(draft: &Draft) -> String {
    draft
        .iter()
        .filter(|s| !s.is_empty())
        .map(|sentence| {
            let mut words: Vec<String> = sentence.iter().map(|t| t.surface.clone()).collect();
            if let Some(first) = words.iter_mut().find(|w| !text::is_punct_token(w)) {
                *first = text::capitalize(first);
            }
            text::detokenize(&words)
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Intermediate results of one translation.
#[derive(Debug, Clone)]
pub struct Trace {
    pub simplified: String,
    pub stream: EncodedStream,
    pub realized: Draft,
    pub syntactic: Draft,
    pub morphological: Draft,
    pub output: String,
}

/// Every stage in order, keeping the intermediate results.
pub fn trace(text_in: &str, pipeline: &Pipeline) -> Result<Trace, TranslateError> {
    let simplified = pipeline.simplify(text_in);
    let stream = pipeline.encode(&simplified)?;
    let realized = realize(&stream, pipeline.target_keys(), &pipeline.lexicon)?;
    let syntactic = correct_syntax(realized.clone(), &pipeline.corrections)?;
    let morphological =
        correct_morphology(syntactic.clone(), &pipeline.corrections, &pipeline.lexicon)?;
    let output = apply_differential(morphological.clone(), &pipeline.corrections)?;
    Ok(Trace {
        simplified,
        stream,
        realized,
        syntactic,
        morphological,
        output,
    })
}

/// Decode an already encoded stream.
pub fn decode(stream: &EncodedStream, pipeline: &Pipeline) -> Result<String, TranslateError> {
    let realized = realize(stream, pipeline.target_keys(), &pipeline.lexicon)?;
    let syntactic = correct_syntax(realized, &pipeline.corrections)?;
    let morphological = correct_morphology(syntactic, &pipeline.corrections, &pipeline.lexicon)?;
    apply_differential(morphological, &pipeline.corrections)
}

/// Italian to French: simplify, encode, realize, C, D, differential.
pub fn translate(text_in: &str, pipeline: &Pipeline) -> Result<String, TranslateError> {
    Ok(trace(text_in, pipeline)?.output)
}
