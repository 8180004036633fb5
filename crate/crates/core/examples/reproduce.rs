//! Regenerate every table from the stored texts and print the checks.
//! Exits with status 1 if any check fails.

use pucci::corpus::Corpus;
use pucci::pipeline::Pipeline;
use pucci::reproduce;

fn main() -> Result<(), pucci::Error> {
    let report = reproduce::run(&Pipeline::embedded()?, &Corpus::embedded())?;
    print!("{}", report.render());
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
