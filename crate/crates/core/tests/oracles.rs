//! Independent reimplementations of the metrics and the ANOVA, written
//! naively from their definitions, checked against the library.

use std::collections::HashMap;

use proptest::prelude::*;

use pucci::corpus::Corpus;
use pucci::diffalign::{cohens_f_from_eta, effect_size};
use pucci::evalmetrics::{bleu, chrf};
use pucci::text::tokenize;

fn ngrams<T: Clone + std::hash::Hash + Eq>(xs: &[T], n: usize) -> HashMap<Vec<T>, usize> {
    let mut m = HashMap::new();
    if xs.len() >= n {
        for w in xs.windows(n) {
            *m.entry(w.to_vec()).or_insert(0) += 1;
        }
    }
    m
}

fn clipped<T: Clone + std::hash::Hash + Eq>(c: &[T], r: &[T], n: usize) -> (usize, usize, usize) {
    let cn = ngrams(c, n);
    let rn = ngrams(r, n);
    let hit = cn.iter().map(|(g, k)| (*k).min(*rn.get(g).unwrap_or(&0))).sum();
    (hit, cn.values().sum(), rn.values().sum())
}

/// Corpus BLEU on one segment, no smoothing, lowercased tokens.
fn bleu_oracle(c: &str, r: &str) -> f64 {
    let c = tokenize(&c.to_lowercase());
    let r = tokenize(&r.to_lowercase());
    let mut log_sum = 0.0;
    for n in 1..=4 {
        let (hit, total, _) = clipped(&c, &r, n);
        if hit == 0 {
            return 0.0;
        }
        log_sum += (hit as f64 / total as f64).ln() / 4.0;
    }
    let bp = if c.len() >= r.len() {
        1.0
    } else {
        (1.0 - r.len() as f64 / c.len() as f64).exp()
    };
    100.0 * bp * log_sum.exp()
}

/// chrF with beta 2 over character 1..6-grams, whitespace removed,
/// precision and recall averaged over the orders both sides have.
fn chrf_oracle(c: &str, r: &str) -> f64 {
    let c: Vec<char> = c.chars().filter(|x| !x.is_whitespace()).collect();
    let r: Vec<char> = r.chars().filter(|x| !x.is_whitespace()).collect();
    let (mut p, mut rec, mut k) = (0.0, 0.0, 0);
    for n in 1..=6 {
        let (hit, ct, rt) = clipped(&c, &r, n);
        if ct == 0 || rt == 0 {
            continue;
        }
        p += hit as f64 / ct as f64;
        rec += hit as f64 / rt as f64;
        k += 1;
    }
    if k == 0 {
        return 0.0;
    }
    let (p, rec) = (p / k as f64, rec / k as f64);
    if p + rec == 0.0 {
        0.0
    } else {
        100.0 * 5.0 * p * rec / (4.0 * p + rec)
    }
}

#[test]
fn bleu_matches_oracle_on_fixtures() {
    let corpus = Corpus::embedded();
    let reference = &corpus.get("pucci_fr_1931").unwrap().text;
    for f in corpus.texts() {
        let got = bleu(&f.text, reference).score;
        let want = bleu_oracle(&f.text, reference);
        assert!((got - want).abs() < 1e-9, "{}: {got} vs {want}", f.id);
    }
}

#[test]
fn chrf_matches_oracle_on_fixtures() {
    let corpus = Corpus::embedded();
    let reference = &corpus.get("pucci_fr_1931").unwrap().text;
    for f in corpus.texts() {
        let got = chrf(&f.text, reference).score;
        let want = chrf_oracle(&f.text, reference);
        assert!((got - want).abs() < 1e-9, "{}: {got} vs {want}", f.id);
    }
}

#[test]
fn bleu_hand_computed() {
    // p1 = 6/7, p2 = 4/6, p3 = 2/5, p4 = 1/4, equal lengths.
    let c = "le chat est assis sur le tapis";
    let r = "le chat est assis sous le tapis";
    let want = 100.0 * (6.0f64 / 7.0 * 4.0 / 6.0 * 2.0 / 5.0 * 1.0 / 4.0).powf(0.25);
    assert_eq!(bleu("le chat est sur le tapis", "le chat est sous le tapis").score, 0.0);
    assert!((bleu(c, r).score - want).abs() < 1e-9);
}

/// eta squared as 1 - SSW / SST.
fn eta_oracle(groups: &[Vec<f64>]) -> f64 {
    let all: Vec<f64> = groups.iter().flatten().copied().collect();
    let grand = all.iter().sum::<f64>() / all.len() as f64;
    let sst: f64 = all.iter().map(|x| (x - grand) * (x - grand)).sum();
    let ssw: f64 = groups
        .iter()
        .map(|g| {
            let m = g.iter().sum::<f64>() / g.len() as f64;
            g.iter().map(|x| (x - m) * (x - m)).sum::<f64>()
        })
        .sum();
    1.0 - ssw / sst
}

#[test]
fn anova_hand_computed() {
    // Grand mean 3.5; SSB = 13.5, SST = 17.5.
    let e = effect_size(&[vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]]).unwrap();
    assert!((e.eta_squared - 13.5 / 17.5).abs() < 1e-12);
    assert!((e.cohens_f - (13.5f64 / 4.0).sqrt()).abs() < 1e-12);
    assert_eq!(e.group_means, vec![2.0, 5.0]);
}

#[test]
fn cohens_f_from_eta_definition() {
    assert_eq!(cohens_f_from_eta(0.0), 0.0);
    assert!((cohens_f_from_eta(0.5) - 1.0).abs() < 1e-12);
    assert!(cohens_f_from_eta(1.0).is_infinite());
}

proptest! {
    #[test]
    fn anova_matches_oracle(
        groups in prop::collection::vec(prop::collection::vec(0u8..50, 1..8), 2..5)
    ) {
        let groups: Vec<Vec<f64>> = groups
            .into_iter()
            .map(|g| g.into_iter().map(f64::from).collect())
            .collect();
        let all: Vec<f64> = groups.iter().flatten().copied().collect();
        prop_assume!(all.iter().any(|x| *x != all[0]));
        let e = effect_size(&groups).unwrap();
        let want = eta_oracle(&groups);
        prop_assert!((e.eta_squared - want).abs() < 1e-9, "{} vs {}", e.eta_squared, want);
        prop_assert!((0.0..=1.0).contains(&e.eta_squared));
    }

    #[test]
    fn chrf_matches_oracle(c in "[a-e ]{0,30}", r in "[a-e ]{0,30}") {
        prop_assert!((chrf(&c, &r).score - chrf_oracle(&c, &r)).abs() < 1e-9);
    }

    #[test]
    fn bleu_matches_oracle(c in "[a-d]( [a-d]){0,12}", r in "[a-d]( [a-d]){0,12}") {
        prop_assert!((bleu(&c, &r).score - bleu_oracle(&c, &r)).abs() < 1e-9);
    }
}
