//! Analyze Italian word forms and generate the matching French forms.
//!
//!     cargo run --example lexicon_lookup -- apparve occhi gloriosa

use pucci::morph::Language;
use pucci::pipeline::Pipeline;

fn main() -> Result<(), pucci::Error> {
    let lex = Pipeline::embedded()?.lexicon;
    println!("{} entries", lex.len());
    let mut words: Vec<String> = std::env::args().skip(1).collect();
    if words.is_empty() {
        words = ["apparve", "occhi", "gloriosa", "vedea", "cinta", "uomini", "tremar"]
            .map(String::from)
            .to_vec();
    }
    for w in &words {
        let analyses = lex.analyze(w);
        if analyses.is_empty() {
            println!("{w}: unknown");
        }
        for a in analyses {
            let fr = lex
                .inflect(a.entry, Language::French, a.features)
                .unwrap_or_else(|e| format!("<{e}>"));
            println!("{w}: {} {} [{}] -> {fr}", a.lemma, a.pos, a.features);
        }
    }
    Ok(())
}
