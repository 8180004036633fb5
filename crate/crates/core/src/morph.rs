//! Regular inflection for Italian and French: three verb classes per
//! language plus noun and adjective agreement. Irregular cells live in the
//! lexicon and override these.

use std::fmt;
use std::sync::OnceLock;

use crate::keytable::{Gender, Number, PersonNumber, TenseIdeogram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Language {
    Italian,
    French,
}

impl Language {
    pub fn code(self) -> &'static str {
        match self {
            Language::Italian => "it",
            Language::French => "fr",
        }
    }

    pub fn from_code(s: &str) -> Option<Self> {
        match s {
            "it" => Some(Language::Italian),
            "fr" => Some(Language::French),
            _ => None,
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// A tense with an optional person; non-finite tenses have none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VerbCell {
    pub tense: TenseIdeogram,
    pub person: Option<PersonNumber>,
}

impl VerbCell {
    pub fn new(tense: TenseIdeogram, person: Option<PersonNumber>) -> Self {
        VerbCell { tense, person }
    }
}

impl fmt::Display for VerbCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.person {
            Some(p) => write!(f, "{}:{}", self.tense, p),
            None => write!(f, "{}", self.tense),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum StemKind {
    /// Lemma minus the class ending.
    Root,
    /// Infinitive, minus a final `e` (French future and conditional).
    Infinitive,
}

#[derive(Debug, Clone)]
struct ParadigmCell {
    cell: VerbCell,
    suffix: &'static str,
    stem: StemKind,
}

/// A conjugation class.
#[derive(Debug, Clone)]
pub struct MorphParadigm {
    pub language: Language,
    pub id: &'static str,
    pub ending: &'static str,
    cells: Vec<ParadigmCell>,
}

type Row = (TenseIdeogram, &'static [&'static str]);

const IMPERATIVE_SLOTS: [(u8, Number); 3] = [
    (2, Number::Singular),
    (1, Number::Plural),
    (2, Number::Plural),
];

fn build(
    language: Language,
    id: &'static str,
    ending: &'static str,
    rows: &[Row],
    infinitive_stem: &[TenseIdeogram],
) -> MorphParadigm {
    let mut cells = Vec::new();
    for (tense, forms) in rows {
        let stem = if infinitive_stem.contains(tense) {
            StemKind::Infinitive
        } else {
            StemKind::Root
        };
        match forms.len() {
            1 => cells.push(ParadigmCell {
                cell: VerbCell::new(*tense, None),
                suffix: forms[0],
                stem,
            }),
            3 => {
                for ((p, n), suffix) in IMPERATIVE_SLOTS.iter().zip(forms.iter()) {
                    cells.push(ParadigmCell {
                        cell: VerbCell::new(*tense, Some(PersonNumber::new(*p, *n))),
                        suffix,
                        stem,
                    });
                }
            }
            _ => {
                for (pn, suffix) in PersonNumber::all().zip(forms.iter()) {
                    cells.push(ParadigmCell {
                        cell: VerbCell::new(*tense, Some(pn)),
                        suffix,
                        stem,
                    });
                }
            }
        }
    }
    MorphParadigm {
        language,
        id,
        ending,
        cells,
    }
}

use TenseIdeogram::*;

fn italian() -> Vec<MorphParadigm> {
    let are: &[Row] = &[
        (Infinitive, &["are"]),
        (PresentIndicative, &["o", "i", "a", "iamo", "ate", "ano"]),
        (Imperfect, &["avo", "avi", "ava", "avamo", "avate", "avano"]),
        (RemotePast, &["ai", "asti", "ò", "ammo", "aste", "arono"]),
        (Future, &["erò", "erai", "erà", "eremo", "erete", "eranno"]),
        (PresentSubjunctive, &["i", "i", "i", "iamo", "iate", "ino"]),
        (PastSubjunctive, &["assi", "assi", "asse", "assimo", "aste", "assero"]),
        (PresentParticiple, &["ando"]),
        (PastParticiple, &["ato"]),
        (Imperative, &["a", "iamo", "ate"]),
        (Conditional, &["erei", "eresti", "erebbe", "eremmo", "ereste", "erebbero"]),
    ];
    let ere: &[Row] = &[
        (Infinitive, &["ere"]),
        (PresentIndicative, &["o", "i", "e", "iamo", "ete", "ono"]),
        (Imperfect, &["evo", "evi", "eva", "evamo", "evate", "evano"]),
        (RemotePast, &["ei", "esti", "é", "emmo", "este", "erono"]),
        (Future, &["erò", "erai", "erà", "eremo", "erete", "eranno"]),
        (PresentSubjunctive, &["a", "a", "a", "iamo", "iate", "ano"]),
        (PastSubjunctive, &["essi", "essi", "esse", "essimo", "este", "essero"]),
        (PresentParticiple, &["endo"]),
        (PastParticiple, &["uto"]),
        (Imperative, &["i", "iamo", "ete"]),
        (Conditional, &["erei", "eresti", "erebbe", "eremmo", "ereste", "erebbero"]),
    ];
    let ire: &[Row] = &[
        (Infinitive, &["ire"]),
        (PresentIndicative, &["o", "i", "e", "iamo", "ite", "ono"]),
        (Imperfect, &["ivo", "ivi", "iva", "ivamo", "ivate", "ivano"]),
        (RemotePast, &["ii", "isti", "ì", "immo", "iste", "irono"]),
        (Future, &["irò", "irai", "irà", "iremo", "irete", "iranno"]),
        (PresentSubjunctive, &["a", "a", "a", "iamo", "iate", "ano"]),
        (PastSubjunctive, &["issi", "issi", "isse", "issimo", "iste", "issero"]),
        (PresentParticiple, &["endo"]),
        (PastParticiple, &["ito"]),
        (Imperative, &["i", "iamo", "ite"]),
        (Conditional, &["irei", "iresti", "irebbe", "iremmo", "ireste", "irebbero"]),
    ];
    vec![
        build(Language::Italian, "it-are", "are", are, &[]),
        build(Language::Italian, "it-ere", "ere", ere, &[]),
        build(Language::Italian, "it-ire", "ire", ire, &[]),
    ]
}

fn french() -> Vec<MorphParadigm> {
    let future: &[&str] = &["ai", "as", "a", "ons", "ez", "ont"];
    let conditional: &[&str] = &["ais", "ais", "ait", "ions", "iez", "aient"];
    let er: &[Row] = &[
        (Infinitive, &["er"]),
        (PresentIndicative, &["e", "es", "e", "ons", "ez", "ent"]),
        (Imperfect, &["ais", "ais", "ait", "ions", "iez", "aient"]),
        (RemotePast, &["ai", "as", "a", "âmes", "âtes", "èrent"]),
        (Future, future),
        (PresentSubjunctive, &["e", "es", "e", "ions", "iez", "ent"]),
        (PastSubjunctive, &["asse", "asses", "ât", "assions", "assiez", "assent"]),
        (PresentParticiple, &["ant"]),
        (PastParticiple, &["é"]),
        (Imperative, &["e", "ons", "ez"]),
        (Conditional, conditional),
    ];
    let ir: &[Row] = &[
        (Infinitive, &["ir"]),
        (PresentIndicative, &["is", "is", "it", "issons", "issez", "issent"]),
        (Imperfect, &["issais", "issais", "issait", "issions", "issiez", "issaient"]),
        (RemotePast, &["is", "is", "it", "îmes", "îtes", "irent"]),
        (Future, future),
        (PresentSubjunctive, &["isse", "isses", "isse", "issions", "issiez", "issent"]),
        (PastSubjunctive, &["isse", "isses", "ît", "issions", "issiez", "issent"]),
        (PresentParticiple, &["issant"]),
        (PastParticiple, &["i"]),
        (Imperative, &["is", "issons", "issez"]),
        (Conditional, conditional),
    ];
    let re: &[Row] = &[
        (Infinitive, &["re"]),
        (PresentIndicative, &["s", "s", "", "ons", "ez", "ent"]),
        (Imperfect, &["ais", "ais", "ait", "ions", "iez", "aient"]),
        (RemotePast, &["is", "is", "it", "îmes", "îtes", "irent"]),
        (Future, future),
        (PresentSubjunctive, &["e", "es", "e", "ions", "iez", "ent"]),
        (PastSubjunctive, &["isse", "isses", "ît", "issions", "issiez", "issent"]),
        (PresentParticiple, &["ant"]),
        (PastParticiple, &["u"]),
        (Imperative, &["s", "ons", "ez"]),
        (Conditional, conditional),
    ];
    let inf = &[Future, Conditional];
    vec![
        build(Language::French, "fr-er", "er", er, inf),
        build(Language::French, "fr-ir", "ir", ir, inf),
        build(Language::French, "fr-re", "re", re, inf),
    ]
}

fn paradigms() -> &'static [MorphParadigm] {
    static CELL: OnceLock<Vec<MorphParadigm>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut v = italian();
        v.extend(french());
        v
    })
}

/// French infinitives outside the regular classes: -oir verbs, and -re
/// verbs other than those in -dre (the -indre verbs excepted).
fn irregular_french(lemma: &str) -> bool {
    lemma.ends_with("oir")
        || (lemma.ends_with("re") && (!lemma.ends_with("dre") || lemma.ends_with("indre")))
}

impl MorphParadigm {
    /// Conjugation class of `lemma`, chosen by its infinitive ending.
    pub fn for_lemma(language: Language, lemma: &str) -> Option<&'static MorphParadigm> {
        paradigms()
            .iter()
            .filter(|p| p.language == language)
            .find(|p| lemma.ends_with(p.ending) && lemma.len() > p.ending.len())
            .filter(|_| language == Language::Italian || !irregular_french(lemma))
    }

    pub fn all(language: Language) -> impl Iterator<Item = &'static MorphParadigm> {
        paradigms().iter().filter(move |p| p.language == language)
    }

    pub fn cells(&self) -> impl Iterator<Item = VerbCell> + '_ {
        self.cells.iter().map(|c| c.cell)
    }

    pub fn has_cell(&self, cell: VerbCell) -> bool {
        self.cells.iter().any(|c| c.cell == cell)
    }

    /// Regular form of `lemma` in `cell`.
    pub fn realize(&self, lemma: &str, cell: VerbCell) -> Option<String> {
        let pc = self.cells.iter().find(|c| c.cell == cell)?;
        let root = lemma.strip_suffix(self.ending)?;
        Some(match pc.stem {
            StemKind::Infinitive => {
                let base = lemma.strip_suffix('e').unwrap_or(lemma);
                format!("{base}{}", pc.suffix)
            }
            StemKind::Root => join_stem(self.language, lemma, root, pc.suffix),
        })
    }

    /// Candidate (lemma, cell) pairs obtained by stripping each suffix of
    /// this class from `word`, longest stem first.
    pub fn strip(&self, word: &str) -> Vec<(String, VerbCell)> {
        let mut out = Vec::new();
        for pc in &self.cells {
            if pc.stem != StemKind::Root {
                continue;
            }
            let Some(root) = word.strip_suffix(pc.suffix) else {
                continue;
            };
            let mut roots = vec![root.to_string()];
            if root.ends_with("ch") || root.ends_with("gh") {
                roots.push(root[..root.len() - 1].to_string());
            }
            if root.ends_with('c') || root.ends_with('g') {
                roots.push(format!("{root}i"));
            }
            if let Some(r) = root.strip_suffix('ç') {
                roots.push(format!("{r}c"));
            }
            if let Some(r) = root.strip_suffix("ge") {
                roots.push(format!("{r}g"));
            }
            for r in roots {
                if r.is_empty() {
                    continue;
                }
                let lemma = format!("{r}{}", self.ending);
                if self.realize(&lemma, pc.cell).as_deref() == Some(word) {
                    out.push((lemma, pc.cell));
                }
            }
        }
        out.sort_by_key(|(l, _)| std::cmp::Reverse(l.chars().count()));
        out
    }
}

fn join_stem(language: Language, lemma: &str, root: &str, suffix: &str) -> String {
    let front = suffix.starts_with(['e', 'i', 'é', 'è']);
    match language {
        Language::Italian => {
            if front && (lemma.ends_with("care") || lemma.ends_with("gare")) {
                return format!("{root}h{suffix}");
            }
            if (suffix.starts_with(['e', 'i'])) && (lemma.ends_with("ciare") || lemma.ends_with("giare")) {
                return format!("{}{suffix}", &root[..root.len() - 1]);
            }
            format!("{root}{suffix}")
        }
        Language::French => {
            let back = suffix.starts_with(['a', 'o', 'â']);
            if back && lemma.ends_with("cer") {
                return format!("{}ç{suffix}", &root[..root.len() - 1]);
            }
            if back && lemma.ends_with("ger") {
                return format!("{root}e{suffix}");
            }
            format!("{root}{suffix}")
        }
    }
}

/// Agreement of a masculine singular participle.
pub fn agree_participle(language: Language, base: &str, gender: Gender, number: Number) -> String {
    let fem = gender == Gender::Feminine;
    let pl = number == Number::Plural;
    match language {
        Language::Italian => match base.strip_suffix('o') {
            Some(stem) => format!(
                "{stem}{}",
                match (fem, pl) {
                    (false, false) => "o",
                    (true, false) => "a",
                    (false, true) => "i",
                    (true, true) => "e",
                }
            ),
            None => base.to_string(),
        },
        Language::French => {
            let mut s = base.to_string();
            if fem {
                s.push('e');
            }
            if pl && !(s.ends_with('s') || s.ends_with('x')) {
                s.push('s');
            }
            s
        }
    }
}

fn ends_with_accent(word: &str) -> bool {
    word.ends_with(['à', 'è', 'é', 'ì', 'ò', 'ù'])
}

/// Regular plural of a noun.
pub fn noun_plural(language: Language, lemma: &str, gender: Option<Gender>) -> String {
    if lemma.contains(' ') {
        return lemma.to_string();
    }
    match language {
        Language::Italian => {
            if ends_with_accent(lemma) || !lemma.ends_with(['a', 'e', 'o', 'i']) {
                return lemma.to_string();
            }
            if let Some(stem) = lemma.strip_suffix("io") {
                return format!("{stem}i");
            }
            if let Some(stem) = lemma.strip_suffix("ca").or_else(|| lemma.strip_suffix("ga")) {
                let c = &lemma[stem.len()..stem.len() + 1];
                return if gender == Some(Gender::Feminine) {
                    format!("{stem}{c}he")
                } else {
                    format!("{stem}{c}hi")
                };
            }
            let stem = &lemma[..lemma.len() - 1];
            if lemma.ends_with('a') && gender == Some(Gender::Feminine) {
                format!("{stem}e")
            } else if lemma.ends_with('i') {
                lemma.to_string()
            } else {
                format!("{stem}i")
            }
        }
        Language::French => french_plural(lemma),
    }
}

fn french_plural(word: &str) -> String {
    if word.ends_with(['s', 'x', 'z']) {
        word.to_string()
    } else if word.ends_with("au") || word.ends_with("eu") {
        format!("{word}x")
    } else if let Some(stem) = word.strip_suffix("al") {
        format!("{stem}aux")
    } else {
        format!("{word}s")
    }
}

/// Regular agreement of an adjective given in the masculine singular.
pub fn adjective_form(language: Language, lemma: &str, gender: Gender, number: Number) -> String {
    if lemma.contains(' ') {
        return lemma.to_string();
    }
    let fem = gender == Gender::Feminine;
    let pl = number == Number::Plural;
    match language {
        Language::Italian => {
            if let Some(stem) = lemma.strip_suffix('o') {
                let hard = stem.ends_with('c') || stem.ends_with('g');
                let h = if hard { "h" } else { "" };
                match (fem, pl) {
                    (false, false) => lemma.to_string(),
                    (true, false) => format!("{stem}a"),
                    (false, true) => format!("{stem}{h}i"),
                    (true, true) => format!("{stem}{h}e"),
                }
            } else if let Some(stem) = lemma.strip_suffix('e') {
                if pl {
                    format!("{stem}i")
                } else {
                    lemma.to_string()
                }
            } else {
                lemma.to_string()
            }
        }
        Language::French => {
            let base = if fem {
                french_feminine(lemma)
            } else {
                lemma.to_string()
            };
            if !pl {
                base
            } else if fem {
                format!("{base}s")
            } else {
                french_plural(&base)
            }
        }
    }
}

fn french_feminine(word: &str) -> String {
    if word.ends_with('e') {
        word.to_string()
    } else if let Some(stem) = word.strip_suffix("eux") {
        format!("{stem}euse")
    } else if let Some(stem) = word.strip_suffix("er") {
        format!("{stem}ère")
    } else if let Some(stem) = word.strip_suffix("if") {
        format!("{stem}ive")
    } else if word.ends_with("el") || word.ends_with("il") || word.ends_with("on") || word.ends_with("en") {
        let last = word.chars().last().unwrap();
        format!("{word}{last}e")
    } else {
        format!("{word}e")
    }
}
