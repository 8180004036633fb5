//! Translate Italian text given on the command line (or the Dante passage).
//!
//!     cargo run --example translate -- "Io vedo la casa del mio amico."

use pucci::corpus::load_fixture;
use pucci::decoder::translate;
use pucci::pipeline::Pipeline;

fn main() -> Result<(), pucci::Error> {
    let pipeline = Pipeline::embedded()?;
    let args: Vec<String> = std::env::args().skip(1).collect();
    let input = if args.is_empty() {
        load_fixture("dante_it")?.text
    } else {
        args.join(" ")
    };
    println!("{}", translate(&input, &pipeline)?);
    Ok(())
}
