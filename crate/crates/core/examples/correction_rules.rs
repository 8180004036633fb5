//! Load a small rule set from text and run it over hand-built draft tokens.

use pucci::keytable::TenseIdeogram;
use pucci::rules::{CorrectionRules, DraftToken, Stage};

const RULES: &str = "\
syntactic\t9\t{finite} me{pos=pron}\tme{pos=pron} $1
syntactic\t5\tne {finite} !pas|jamais\t$1 $2 pas{pos=adv} $3
differential\t4\tme {vowel}\tm' $2
";

fn show(tokens: &[DraftToken]) -> String {
    tokens.iter().map(|t| t.surface.as_str()).collect::<Vec<_>>().join(" ")
}

fn main() -> Result<(), pucci::Error> {
    let rules = CorrectionRules::parse(RULES)?;
    let mut verb = DraftToken::word("aime", "verb");
    verb.features.tense = Some(TenseIdeogram::PresentIndicative);
    let draft = vec![
        DraftToken::word("elle", "pron"),
        DraftToken::word("ne", "adv"),
        verb,
        DraftToken::word("me", "pron"),
    ];
    println!("draft         {}", show(&draft));
    let mut tokens = draft;
    for stage in [Stage::Syntactic, Stage::Morphological, Stage::Differential] {
        let outcome = rules.run(stage, tokens, None);
        println!("{:<13} {}  ({} steps of {})", stage, show(&outcome.tokens), outcome.steps, outcome.budget);
        tokens = outcome.tokens;
    }
    Ok(())
}
