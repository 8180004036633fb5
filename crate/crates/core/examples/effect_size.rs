//! Group means of the published diff counts and the one-way ANOVA effect
//! size, alongside the f derived from the published eta squared.

use pucci::diffalign::{cohens_f_from_eta, effect_size, group_stats, PUBLISHED_COUNTS};

fn main() -> Result<(), pucci::Error> {
    let groups = [PUBLISHED_COUNTS[..3].to_vec(), PUBLISHED_COUNTS[3..].to_vec()];
    for (name, mean) in ["group 1", "groups 2-3"].iter().zip(group_stats(&groups)?) {
        println!("{name:<11} mean {:.2} ({}/{})", mean.value(), mean.sum, mean.count);
    }
    let values: Vec<Vec<f64>> = groups
        .iter()
        .map(|g| g.iter().flat_map(|&(r, a)| [f64::from(r), f64::from(a)]).collect())
        .collect();
    let e = effect_size(&values)?;
    println!("anova       eta^2 {:.4}  f {:.4}", e.eta_squared, e.cohens_f);
    let f = cohens_f_from_eta(0.077);
    println!("eta^2 0.077 f {f:.4} (rounds to {:.2})", f);
    Ok(())
}
