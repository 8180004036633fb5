//! Parse key notation and realize keys through both key tables.
//!
//!     cargo run --example key_tables -- M2 IIIf4 R1

use pucci::keytable::{parse_key_notation, AgreementContext, Gender, Number};
use pucci::pipeline::Pipeline;

fn main() -> Result<(), pucci::Error> {
    let pipeline = Pipeline::embedded()?;
    let mut notations: Vec<String> = std::env::args().skip(1).collect();
    if notations.is_empty() {
        notations = ["a1", "a2", "D1", "M2", "III¹¹", "IIIf4", "S3", "R1", "&"]
            .map(String::from)
            .to_vec();
    }
    let contexts = [
        AgreementContext::new(Gender::Masculine, Number::Singular),
        AgreementContext::new(Gender::Feminine, Number::Singular),
        AgreementContext::new(Gender::Masculine, Number::Plural),
        AgreementContext::new(Gender::Feminine, Number::Plural),
    ];
    for n in &notations {
        let key = match parse_key_notation(n) {
            Ok(k) => k,
            Err(e) => {
                println!("{n:<6} error: {e}");
                continue;
            }
        };
        let role = key.case_role().map(|r| format!("{r:?}")).unwrap_or("-".into());
        println!("{n:<6} -> {key} ({:?}, role {role})", key.category);
        for ctx in contexts {
            let it = pipeline.source_keys().lookup(&key, ctx).unwrap_or("?");
            let fr = pipeline.target_keys().lookup(&key, ctx).unwrap_or("?");
            println!("    {ctx:<5} it {it:<14} fr {fr}");
        }
    }
    Ok(())
}
