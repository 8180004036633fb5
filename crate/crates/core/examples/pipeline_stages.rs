//! Show every stage of one translation: simplification, encoding,
//! realization, word order, agreement and the differential repairs.

use pucci::decoder::{detokenize, trace};
use pucci::encoder::render_stream;
use pucci::pipeline::Pipeline;

fn main() -> Result<(), pucci::Error> {
    let pipeline = Pipeline::embedded()?;
    let input = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "E vedeala di sì nobili e laudabili portamenti, e mi salutò.".into());
    let t = trace(&input, &pipeline)?;
    println!("input          {input}");
    println!("simplified     {}", t.simplified);
    println!("stream         {}", render_stream(&t.stream));
    println!("realized       {}", detokenize(&t.realized));
    println!("syntactic      {}", detokenize(&t.syntactic));
    println!("morphological  {}", detokenize(&t.morphological));
    println!("output         {}", t.output);
    Ok(())
}
