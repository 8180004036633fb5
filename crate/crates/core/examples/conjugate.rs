//! Print the full paradigm of a verb in both languages.
//!
//!     cargo run --example conjugate -- vedere

use pucci::keytable::{PersonNumber, TenseIdeogram};
use pucci::lexicon::{Features, PartOfSpeech};
use pucci::morph::Language;
use pucci::pipeline::Pipeline;

fn main() -> Result<(), pucci::Error> {
    let lex = Pipeline::embedded()?.lexicon;
    let lemma = std::env::args().nth(1).unwrap_or_else(|| "apparire".into());
    let Some(entry) = lex.find(&lemma, PartOfSpeech::Verb) else {
        eprintln!("no verb `{lemma}` in the lexicon");
        std::process::exit(1);
    };
    let form = |lang, f| lex.inflect(entry, lang, f).unwrap_or_else(|_| "-".into());
    for t in TenseIdeogram::ALL {
        println!("{t} {}", t.name());
        let persons: Vec<Option<PersonNumber>> = if t.is_finite() {
            PersonNumber::all().map(Some).collect()
        } else {
            vec![None]
        };
        for p in persons {
            let f = Features::verb(t, p);
            let label = p.map(|p| p.to_string()).unwrap_or_default();
            println!(
                "    {label:<4} {:<16} {}",
                form(Language::Italian, f),
                form(Language::French, f)
            );
        }
    }
    Ok(())
}
