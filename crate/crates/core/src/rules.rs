//! Token rewrite rules for the target-side correction stages.
//!
//! Pattern tokens: a literal word (case-insensitive), `!word` (any token
//! but that word; at either end of a pattern it also matches the sentence
//! boundary), `{key=value,...}` feature predicates, or a word followed by
//! predicates (`le{pos=art}`). Predicate keys are `pos`, `gender`, `number`,
//! `tense`, and the flags `finite` and `vowel`.
//!
//! Rewrite tokens: `$n` copies the n-th matched token, `$n{gender=f}`
//! copies it with changed features and re-inflects it, anything else is a
//! new word (optionally `word{pos=prep}`).

use std::fmt;

use thiserror::Error;

use crate::keytable::{Gender, Number, TenseIdeogram};
use crate::lexicon::{Features, Lexicon};
use crate::morph::Language;
use crate::text;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RuleError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: rewrite reproduces its own pattern")]
    Reintroduces { line: usize },
}

/// A word of the target draft with the features the rules test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DraftToken {
    pub surface: String,
    pub pos: String,
    pub entry: Option<usize>,
    pub features: Features,
}

impl DraftToken {
    pub fn word(surface: &str, pos: &str) -> Self {
        DraftToken {
            surface: surface.to_string(),
            pos: pos.to_string(),
            entry: None,
            features: Features::default(),
        }
    }

    pub fn is_finite_verb(&self) -> bool {
        self.pos == "verb" && self.features.tense.is_some_and(TenseIdeogram::is_finite)
    }
}

impl fmt::Display for DraftToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.surface)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stage {
    Syntactic,
    Morphological,
    Differential,
}

impl Stage {
    pub fn tag(self) -> &'static str {
        match self {
            Stage::Syntactic => "syntactic",
            Stage::Morphological => "morphological",
            Stage::Differential => "differential",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        [Stage::Syntactic, Stage::Morphological, Stage::Differential]
            .into_iter()
            .find(|x| x.tag() == s)
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Predicate {
    Pos(String),
    Gender(Gender),
    Number(Number),
    Tense(TenseIdeogram),
    Finite,
    Vowel,
}

impl Predicate {
    fn holds(&self, t: &DraftToken) -> bool {
        match self {
            Predicate::Pos(p) => t.pos == *p,
            Predicate::Gender(g) => t.features.gender == Some(*g),
            Predicate::Number(n) => t.features.number.unwrap_or(Number::Singular) == *n,
            Predicate::Tense(x) => t.features.tense == Some(*x),
            Predicate::Finite => t.is_finite_verb(),
            Predicate::Vowel => text::starts_with_vowel(&t.surface),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum PatternToken {
    Match {
        word: Option<String>,
        preds: Vec<Predicate>,
    },
    /// Any token other than these words.
    Not(Vec<String>),
}

impl PatternToken {
    fn matches(&self, t: &DraftToken) -> bool {
        match self {
            PatternToken::Match { word, preds } => {
                word.as_ref()
                    .is_none_or(|w| t.surface.to_lowercase() == *w)
                    && preds.iter().all(|p| p.holds(t))
            }
            PatternToken::Not(ws) => !ws.contains(&t.surface.to_lowercase()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum RewriteToken {
    Capture(usize, Vec<Predicate>),
    Word(String, Option<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectionRule {
    pub stage: Stage,
    pub priority: i32,
    pub source: String,
    pattern: Vec<PatternToken>,
    rewrite: Vec<RewriteToken>,
}

fn split_braces(tok: &str) -> Result<(&str, Option<&str>), String> {
    match tok.find('{') {
        Some(i) => {
            let inner = tok[i + 1..]
                .strip_suffix('}')
                .ok_or_else(|| format!("unclosed `{{` in `{tok}`"))?;
            Ok((&tok[..i], Some(inner)))
        }
        None => Ok((tok, None)),
    }
}

fn parse_predicates(inner: &str) -> Result<Vec<Predicate>, String> {
    let mut out = Vec::new();
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let pred = match part.split_once('=') {
            Some(("pos", v)) => Predicate::Pos(v.to_string()),
            Some(("gender", v)) => {
                Predicate::Gender(Gender::from_code(v).ok_or(format!("bad gender `{v}`"))?)
            }
            Some(("number", v)) => {
                Predicate::Number(Number::from_code(v).ok_or(format!("bad number `{v}`"))?)
            }
            Some(("tense", v)) => Predicate::Tense(v.parse().map_err(|_| format!("bad tense `{v}`"))?),
            None if part == "finite" => Predicate::Finite,
            None if part == "vowel" => Predicate::Vowel,
            _ => return Err(format!("unknown predicate `{part}`")),
        };
        out.push(pred);
    }
    Ok(out)
}

impl CorrectionRule {
    pub fn parse(stage: Stage, priority: i32, pattern: &str, rewrite: &str) -> Result<Self, String> {
        let mut pat = Vec::new();
        for tok in pattern.split_whitespace() {
            if let Some(w) = tok.strip_prefix('!') {
                if w.is_empty() {
                    return Err("empty negation".into());
                }
                pat.push(PatternToken::Not(w.split('|').map(str::to_lowercase).collect()));
                continue;
            }
            let (word, inner) = split_braces(tok)?;
            let preds = inner.map(parse_predicates).transpose()?.unwrap_or_default();
            pat.push(PatternToken::Match {
                word: (!word.is_empty()).then(|| word.to_lowercase()),
                preds,
            });
        }
        if pat.is_empty() {
            return Err("empty pattern".into());
        }
        if pat.iter().all(|p| matches!(p, PatternToken::Not(_))) {
            return Err("pattern has no positive token".into());
        }
        let mut rw = Vec::new();
        for tok in rewrite.split_whitespace() {
            let (head, inner) = split_braces(tok)?;
            if let Some(n) = head.strip_prefix('$') {
                let n: usize = n.parse().map_err(|_| format!("bad capture `{tok}`"))?;
                if n == 0 || n > pat.len() {
                    return Err(format!("capture `{tok}` out of range"));
                }
                let preds = inner.map(parse_predicates).transpose()?.unwrap_or_default();
                if preds.iter().any(|p| {
                    !matches!(p, Predicate::Gender(_) | Predicate::Number(_))
                }) {
                    return Err(format!("only gender and number can be overridden in `{tok}`"));
                }
                rw.push(RewriteToken::Capture(n - 1, preds));
            } else {
                let pos = match inner {
                    Some(i) => match parse_predicates(i)?.as_slice() {
                        [Predicate::Pos(p)] => Some(p.clone()),
                        _ => return Err(format!("new words take only a pos in `{tok}`")),
                    },
                    None => None,
                };
                rw.push(RewriteToken::Word(head.to_string(), pos));
            }
        }
        Ok(CorrectionRule {
            stage,
            priority,
            source: format!("{pattern} -> {rewrite}"),
            pattern: pat,
            rewrite: rw,
        })
    }

    /// Symbolic check that the rewrite cannot match the pattern again. A
    /// captured negation slot stands for a token that was already there, so
    /// it never completes a new match by itself.
    fn reintroduces(&self) -> bool {
        let symbols: Vec<Option<PatternToken>> = self
            .rewrite
            .iter()
            .map(|r| match r {
                RewriteToken::Capture(i, over) => match &self.pattern[*i] {
                    PatternToken::Match { word, preds } => {
                        let mut preds = preds.clone();
                        for o in over {
                            preds.retain(|p| {
                                std::mem::discriminant(p) != std::mem::discriminant(o)
                            });
                            preds.push(o.clone());
                        }
                        Some(PatternToken::Match {
                            word: word.clone(),
                            preds,
                        })
                    }
                    PatternToken::Not(_) => None,
                },
                RewriteToken::Word(w, pos) => Some(PatternToken::Match {
                    word: Some(w.to_lowercase()),
                    preds: pos.iter().map(|p| Predicate::Pos(p.clone())).collect(),
                }),
            })
            .collect();
        let first = self
            .pattern
            .iter()
            .position(|p| matches!(p, PatternToken::Match { .. }))
            .unwrap_or(0);
        (0..symbols.len()).any(|start| {
            self.pattern.iter().enumerate().all(|(k, p)| {
                let idx = (start + k).checked_sub(first);
                match (p, idx.and_then(|i| symbols.get(i))) {
                    (PatternToken::Not(_), None) => true,
                    (PatternToken::Not(ws), Some(Some(PatternToken::Match { word: Some(s), .. }))) => {
                        !ws.contains(s)
                    }
                    (PatternToken::Not(_), Some(_)) => true,
                    (PatternToken::Match { .. }, None) => false,
                    (PatternToken::Match { .. }, Some(None)) => false,
                    (m, Some(Some(s))) => m == s,
                }
            })
        })
    }

    /// Match starting at `at`; returns the matched span and one slot per
    /// pattern token (None for a negation read as the sentence boundary).
    /// With `lead_boundary` the leading negation is read as the boundary.
    fn match_at(
        &self,
        tokens: &[DraftToken],
        at: usize,
        lead_boundary: bool,
    ) -> Option<(usize, usize, Vec<Option<usize>>)> {
        let n = self.pattern.len();
        let mut slots = Vec::with_capacity(n);
        let mut pos = at;
        for (k, p) in self.pattern.iter().enumerate() {
            if k == 0 && lead_boundary {
                slots.push(None);
                continue;
            }
            if pos >= tokens.len() {
                if k == n - 1 && k > 0 && matches!(p, PatternToken::Not(_)) {
                    slots.push(None);
                    continue;
                }
                return None;
            }
            if !p.matches(&tokens[pos]) {
                return None;
            }
            slots.push(Some(pos));
            pos += 1;
        }
        Some((at, pos, slots))
    }

    /// Leftmost match.
    fn find(&self, tokens: &[DraftToken]) -> Option<(usize, usize, Vec<Option<usize>>)> {
        if matches!(self.pattern[0], PatternToken::Not(_)) {
            if let Some(m) = self.match_at(tokens, 0, true) {
                return Some(m);
            }
        }
        (0..tokens.len()).find_map(|i| self.match_at(tokens, i, false))
    }

    fn apply(
        &self,
        tokens: &[DraftToken],
        m: (usize, usize, Vec<Option<usize>>),
        lex: Option<&Lexicon>,
    ) -> Vec<DraftToken> {
        let (start, end, slots) = m;
        let mut out: Vec<DraftToken> = tokens[..start].to_vec();
        for r in &self.rewrite {
            match r {
                RewriteToken::Capture(i, over) => {
                    let Some(src) = slots[*i] else { continue };
                    let mut t = tokens[src].clone();
                    if !over.is_empty() {
                        for o in over {
                            match o {
                                Predicate::Gender(g) => t.features.gender = Some(*g),
                                Predicate::Number(n) => t.features.number = Some(*n),
                                _ => {}
                            }
                        }
                        if let (Some(lex), Some(e)) = (lex, t.entry) {
                            if let Ok(s) = lex.inflect(e, Language::French, t.features) {
                                t.surface = s;
                            }
                        }
                    }
                    out.push(t);
                }
                RewriteToken::Word(w, pos) => {
                    out.push(DraftToken::word(w, pos.as_deref().unwrap_or("other")))
                }
            }
        }
        out.extend_from_slice(&tokens[end..]);
        out
    }
}

/// Result of running one stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageOutcome {
    pub tokens: Vec<DraftToken>,
    pub steps: usize,
    pub budget: usize,
}

impl StageOutcome {
    pub fn exhausted(&self) -> bool {
        self.steps > self.budget
    }
}

/// All correction rules, grouped by stage in priority order.
#[derive(Debug, Clone, Default)]
pub struct CorrectionRules {
    rules: Vec<CorrectionRule>,
}

impl CorrectionRules {
    /// Parse `stage <TAB> priority <TAB> pattern <TAB> rewrite` lines.
    pub fn parse(text: &str) -> Result<Self, RuleError> {
        let mut rules = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let raw = raw.trim_end_matches('\r');
            if raw.trim().is_empty() || raw.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = raw.split('\t').collect();
            if cols.len() != 4 {
                return Err(RuleError::Malformed {
                    line,
                    msg: format!("expected 4 columns, found {}", cols.len()),
                });
            }
            let stage = Stage::parse(cols[0].trim()).ok_or_else(|| RuleError::Malformed {
                line,
                msg: format!("unknown stage `{}`", cols[0]),
            })?;
            let priority: i32 = cols[1].trim().parse().map_err(|_| RuleError::Malformed {
                line,
                msg: format!("bad priority `{}`", cols[1]),
            })?;
            let rule = CorrectionRule::parse(stage, priority, cols[2], cols[3])
                .map_err(|msg| RuleError::Malformed { line, msg })?;
            if rule.reintroduces() {
                return Err(RuleError::Reintroduces { line });
            }
            rules.push(rule);
        }
        // Stable: equal priorities keep file order.
        rules.sort_by_key(|r| (r.stage, std::cmp::Reverse(r.priority)));
        Ok(CorrectionRules { rules })
    }

    pub fn stage(&self, stage: Stage) -> Vec<&CorrectionRule> {
        self.rules.iter().filter(|r| r.stage == stage).collect()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Rewrite to a fixpoint: repeatedly apply the highest-priority rule at
    /// its leftmost match, within |tokens| x |rules| steps.
    pub fn run(&self, stage: Stage, tokens: Vec<DraftToken>, lex: Option<&Lexicon>) -> StageOutcome {
        let rules = self.stage(stage);
        let budget = tokens.len().max(1) * rules.len().max(1);
        let mut tokens = tokens;
        let mut steps = 0;
        'outer: while steps <= budget {
            for rule in &rules {
                if let Some(m) = rule.find(&tokens) {
                    tokens = rule.apply(&tokens, m, lex);
                    steps += 1;
                    continue 'outer;
                }
            }
            break;
        }
        StageOutcome {
            tokens,
            steps,
            budget,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(words: &[(&str, &str)]) -> Vec<DraftToken> {
        words.iter().map(|(w, p)| DraftToken::word(w, p)).collect()
    }

    fn finite(w: &str) -> DraftToken {
        let mut t = DraftToken::word(w, "verb");
        t.features.tense = Some(TenseIdeogram::RemotePast);
        t
    }

    fn surfaces(t: &[DraftToken]) -> Vec<&str> {
        t.iter().map(|t| t.surface.as_str()).collect()
    }

    #[test]
    fn clitic_moves_before_verb() {
        let rules = CorrectionRules::parse("syntactic\t10\t{finite} me\tme $1\n").unwrap();
        let mut input = toks(&[("et", "conj")]);
        input.push(finite("salua"));
        input.push(DraftToken::word("me", "pron"));
        let out = rules.run(Stage::Syntactic, input, None);
        assert_eq!(surfaces(&out.tokens), ["et", "me", "salua"]);
        let again = rules.run(Stage::Syntactic, out.tokens.clone(), None);
        assert_eq!(again.tokens, out.tokens);
        assert_eq!(again.steps, 0);
    }

    #[test]
    fn trailing_negation_matches_boundary() {
        let rules = CorrectionRules::parse("syntactic\t5\tne {finite} !pas\t$1 $2 pas $3\n").unwrap();
        let mut input = toks(&[("elle", "pron"), ("ne", "adv")]);
        input.push(finite("semblait"));
        let out = rules.run(Stage::Syntactic, input.clone(), None);
        assert_eq!(surfaces(&out.tokens), ["elle", "ne", "semblait", "pas"]);
        input.push(DraftToken::word("fille", "noun"));
        let out = rules.run(Stage::Syntactic, input, None);
        assert_eq!(surfaces(&out.tokens), ["elle", "ne", "semblait", "pas", "fille"]);
    }

    #[test]
    fn leading_negation_matches_boundary() {
        let rules = CorrectionRules::parse("syntactic\t5\t!en {tense=ID8}\t$1 en $2\n").unwrap();
        let mut p = DraftToken::word("passant", "verb");
        p.features.tense = Some(TenseIdeogram::PresentParticiple);
        let out = rules.run(Stage::Syntactic, vec![p.clone()], None);
        assert_eq!(surfaces(&out.tokens), ["en", "passant"]);
        let out = rules.run(Stage::Syntactic, vec![DraftToken::word("et", "conj"), p], None);
        assert_eq!(surfaces(&out.tokens), ["et", "en", "passant"]);
    }

    #[test]
    fn priority_orders_rules() {
        let rules = CorrectionRules::parse(
            "differential\t1\tde le\tdu\ndifferential\t9\tde le {vowel}\tde l' $3\n",
        )
        .unwrap();
        let out = rules.run(
            Stage::Differential,
            toks(&[("de", "prep"), ("le", "art"), ("esprit", "noun")]),
            None,
        );
        assert_eq!(surfaces(&out.tokens), ["de", "l'", "esprit"]);
    }

    #[test]
    fn no_match_is_unchanged() {
        let rules = CorrectionRules::parse("syntactic\t1\tfoo\tbar\n").unwrap();
        let input = toks(&[("rien", "noun")]);
        assert_eq!(rules.run(Stage::Syntactic, input.clone(), None).tokens, input);
    }

    #[test]
    fn rejects_self_reintroducing_rules() {
        assert!(matches!(
            CorrectionRules::parse("syntactic\t1\tme\tme\n"),
            Err(RuleError::Reintroduces { line: 1 })
        ));
        assert!(matches!(
            CorrectionRules::parse("syntactic\t1\t{finite} me\tle $1 me\n"),
            Err(RuleError::Reintroduces { .. })
        ));
        assert!(CorrectionRules::parse(
            "morphological\t1\t{pos=adj,gender=m} {pos=noun,gender=f}\t$1{gender=f} $2\n"
        )
        .is_ok());
    }

    #[test]
    fn malformed_rules() {
        assert!(CorrectionRules::parse("syntactic\tx\ta\tb\n").is_err());
        assert!(CorrectionRules::parse("other\t1\ta\tb\n").is_err());
        assert!(CorrectionRules::parse("syntactic\t1\ta\t$3\n").is_err());
        assert!(CorrectionRules::parse("syntactic\t1\t{colour=red}\tb\n").is_err());
        assert!(CorrectionRules::parse("syntactic\t1\t!a\tb\n").is_err());
    }

    #[test]
    fn budget_bounds_steps() {
        let rules = CorrectionRules::parse("syntactic\t1\ta b\tb a\n").unwrap();
        let out = rules.run(
            Stage::Syntactic,
            toks(&[("a", "x"), ("b", "x"), ("a", "x"), ("b", "x")]),
            None,
        );
        assert!(!out.exhausted());
        assert_eq!(surfaces(&out.tokens), ["b", "b", "a", "a"]);
    }
}
