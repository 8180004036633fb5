//! Word-level diff between two stored texts (fixture ids).
//!
//!     cargo run --example word_diff -- pucci_fr_1931 chatgpt_pucci

use pucci::corpus::load_fixture;
use pucci::diffalign::word_diff;

fn main() -> Result<(), pucci::Error> {
    let mut args = std::env::args().skip(1);
    let a = args.next().unwrap_or_else(|| "pucci_fr_1931".into());
    let b = args.next().unwrap_or_else(|| "chatgpt_pucci".into());
    let report = word_diff(&load_fixture(&a)?.text, &load_fixture(&b)?.text);
    println!("{a} vs {b}: {}", report.summary_line());
    print!("{}", report.listing());
    Ok(())
}
