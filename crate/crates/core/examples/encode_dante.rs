//! Simplify the Dante passage and encode it into the ideogram stream,
//! one sentence per line.

use pucci::corpus::load_fixture;
use pucci::encoder::{parse_stream, render_stream};
use pucci::pipeline::Pipeline;

fn main() -> Result<(), pucci::Error> {
    let pipeline = Pipeline::embedded()?;
    let source = load_fixture("dante_it")?.text;
    let simplified = pipeline.simplify(&source);
    println!("{simplified}\n");
    let stream = pipeline.encode(&simplified)?;
    let rendered = render_stream(&stream);
    println!("{rendered}");
    assert_eq!(parse_stream(&rendered)?, stream);
    println!("\n{} sentences, {} tokens", stream.sentences.len(), stream.tokens().count());
    Ok(())
}
