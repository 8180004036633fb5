//! BLEU, chrF and METEOR of every stored French text against the 1931
//! reference, plus the engine's own translation.

use pucci::corpus::{Corpus, Role};
use pucci::decoder::translate;
use pucci::evalmetrics::MetricScores;
use pucci::pipeline::Pipeline;

fn main() -> Result<(), pucci::Error> {
    let corpus = Corpus::embedded();
    let reference = &corpus.get("pucci_fr_1931")?.text;
    let engine = translate(&corpus.get("dante_it")?.text, &Pipeline::embedded()?)?;
    let mut rows: Vec<(String, &str)> = corpus
        .fixtures()
        .iter()
        .filter(|f| f.role == Role::Candidate)
        .map(|f| (f.id.clone(), f.text.as_str()))
        .collect();
    rows.push(("engine".into(), &engine));
    println!("{:<14} {:>7} {:>7} {:>7}", "candidate", "bleu", "chrf", "meteor");
    for (id, text) in rows {
        let s = MetricScores::compute(text, reference);
        println!("{id:<14} {:>7.2} {:>7.2} {:>7.2}", s.bleu.score, s.chrf.score, s.meteor.score);
    }
    Ok(())
}
