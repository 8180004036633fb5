//! BLEU, chrF and METEOR against a single reference.
//!
//! All three score the whole text as one segment. BLEU and METEOR work on
//! lowercased word tokens with punctuation split off; chrF works on the raw
//! characters with whitespace removed.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use rust_stemmers::{Algorithm, Stemmer};

use crate::text::tokenize_lower;

pub const BLEU_MAX_N: usize = 4;
pub const CHRF_MAX_N: usize = 6;
pub const CHRF_BETA: f64 = 2.0;

#[derive(Debug, Clone, PartialEq)]
pub struct BleuScore {
    pub score: f64,
    pub brevity_penalty: f64,
    pub precisions: [f64; BLEU_MAX_N],
    pub candidate_len: usize,
    pub reference_len: usize,
    /// Set when the candidate had no tokens.
    pub empty_candidate: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChrfScore {
    pub score: f64,
    pub precisions: [f64; CHRF_MAX_N],
    pub recalls: [f64; CHRF_MAX_N],
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeteorScore {
    pub score: f64,
    pub precision: f64,
    pub recall: f64,
    pub fmean: f64,
    pub fragmentation_penalty: f64,
    pub matches: usize,
    pub chunks: usize,
}

/// One row of the comparison table.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricScores {
    pub bleu: BleuScore,
    pub chrf: ChrfScore,
    pub meteor: MeteorScore,
}

impl MetricScores {
    pub fn compute(candidate: &str, reference: &str) -> Self {
        MetricScores {
            bleu: bleu(candidate, reference),
            chrf: chrf(candidate, reference),
            meteor: meteor(candidate, reference),
        }
    }
}

fn ngram_counts<T: Eq + Hash + Clone>(items: &[T], n: usize) -> HashMap<&[T], usize> {
    let mut counts = HashMap::new();
    if items.len() >= n {
        for w in items.windows(n) {
            *counts.entry(w).or_insert(0) += 1;
        }
    }
    counts
}

/// Clipped matches and candidate total for order `n`.
fn clipped<T: Eq + Hash + Clone>(cand: &[T], reference: &[T], n: usize) -> (usize, usize, usize) {
    let c = ngram_counts(cand, n);
    let r = ngram_counts(reference, n);
    let matched = c.iter().map(|(g, &k)| k.min(r.get(g).copied().unwrap_or(0))).sum();
    (matched, cand.len().saturating_sub(n - 1), reference.len().saturating_sub(n - 1))
}

/// Corpus BLEU with clipped 1..4-gram precisions, no smoothing.
pub fn bleu(candidate: &str, reference: &str) -> BleuScore {
    let cand = tokenize_lower(candidate);
    let refr = tokenize_lower(reference);
    let mut precisions = [0.0; BLEU_MAX_N];
    for (k, p) in precisions.iter_mut().enumerate() {
        let (m, total, _) = clipped(&cand, &refr, k + 1);
        *p = if total == 0 { 0.0 } else { m as f64 / total as f64 };
    }
    let (c, r) = (cand.len(), refr.len());
    let brevity_penalty = if c == 0 {
        0.0
    } else if c < r {
        (1.0 - r as f64 / c as f64).exp()
    } else {
        1.0
    };
    let score = if precisions.contains(&0.0) {
        0.0
    } else {
        let log_mean = precisions.iter().map(|p| p.ln()).sum::<f64>() / BLEU_MAX_N as f64;
        100.0 * brevity_penalty * log_mean.exp()
    };
    BleuScore { score, brevity_penalty, precisions, candidate_len: c, reference_len: r, empty_candidate: c == 0 }
}

/// chrF: character 1..6-gram precision and recall averaged over orders,
/// combined with recall weighted by beta = 2.
pub fn chrf(candidate: &str, reference: &str) -> ChrfScore {
    let cand: Vec<char> = candidate.chars().filter(|c| !c.is_whitespace()).collect();
    let refr: Vec<char> = reference.chars().filter(|c| !c.is_whitespace()).collect();
    let mut precisions = [0.0; CHRF_MAX_N];
    let mut recalls = [0.0; CHRF_MAX_N];
    // Orders longer than either text are left out of the averages.
    let mut effective = 0;
    for n in 1..=CHRF_MAX_N {
        let (m, c_total, r_total) = clipped(&cand, &refr, n);
        precisions[n - 1] = if c_total == 0 { 0.0 } else { m as f64 / c_total as f64 };
        recalls[n - 1] = if r_total == 0 { 0.0 } else { m as f64 / r_total as f64 };
        if c_total > 0 && r_total > 0 {
            effective += 1;
        }
    }
    if effective == 0 {
        return ChrfScore { score: 0.0, precisions, recalls };
    }
    let p = precisions[..effective].iter().sum::<f64>() / effective as f64;
    let r = recalls[..effective].iter().sum::<f64>() / effective as f64;
    let b2 = CHRF_BETA * CHRF_BETA;
    let score = if p + r == 0.0 { 0.0 } else { 100.0 * (1.0 + b2) * p * r / (b2 * p + r) };
    ChrfScore { score, precisions, recalls }
}

/// METEOR with exact then stem unigram matching.
pub fn meteor(candidate: &str, reference: &str) -> MeteorScore {
    let cand = tokenize_lower(candidate);
    let refr = tokenize_lower(reference);
    let stemmer = Stemmer::create(Algorithm::French);
    let cand_stems: Vec<String> = cand.iter().map(|t| stemmer.stem(t).into_owned()).collect();
    let ref_stems: Vec<String> = refr.iter().map(|t| stemmer.stem(t).into_owned()).collect();

    let mut align: Vec<Option<usize>> = vec![None; cand.len()];
    let mut used = vec![false; refr.len()];
    match_stage(&cand, &refr, &mut align, &mut used);
    match_stage(&cand_stems, &ref_stems, &mut align, &mut used);

    let matches = align.iter().flatten().count();
    if matches == 0 {
        return MeteorScore {
            score: 0.0,
            precision: 0.0,
            recall: 0.0,
            fmean: 0.0,
            fragmentation_penalty: 0.0,
            matches: 0,
            chunks: 0,
        };
    }
    let chunks = count_chunks(&align);
    let precision = matches as f64 / cand.len() as f64;
    let recall = matches as f64 / refr.len() as f64;
    let fmean = 10.0 * precision * recall / (recall + 9.0 * precision);
    let fragmentation_penalty = 0.5 * (chunks as f64 / matches as f64).powi(3);
    MeteorScore {
        score: 100.0 * fmean * (1.0 - fragmentation_penalty),
        precision,
        recall,
        fmean,
        fragmentation_penalty,
        matches,
        chunks,
    }
}

/// Align still-unmatched candidate tokens to unused equal reference tokens.
///
/// Each candidate token, left to right, takes the free reference occurrence
/// that continues the previous alignment when possible, otherwise the one
/// nearest to its expected position. This keeps chunks long without an
/// exhaustive search.
fn match_stage(cand: &[String], refr: &[String], align: &mut [Option<usize>], used: &mut [bool]) {
    let mut positions: HashMap<&str, Vec<usize>> = HashMap::new();
    for (j, t) in refr.iter().enumerate() {
        positions.entry(t.as_str()).or_default().push(j);
    }
    let scale = refr.len() as f64 / cand.len().max(1) as f64;
    for i in 0..cand.len() {
        if align[i].is_some() {
            continue;
        }
        let Some(cands) = positions.get(cand[i].as_str()) else { continue };
        let prev = (0..i).rev().find_map(|k| align[k].map(|j| (k, j)));
        let expected = match prev {
            Some((k, j)) => j as f64 + (i - k) as f64,
            None => i as f64 * scale,
        };
        let best = cands
            .iter()
            .copied()
            .filter(|&j| !used[j])
            .min_by(|&x, &y| {
                let dx = (x as f64 - expected).abs();
                let dy = (y as f64 - expected).abs();
                dx.partial_cmp(&dy).unwrap().then(x.cmp(&y))
            });
        if let Some(j) = best {
            align[i] = Some(j);
            used[j] = true;
        }
    }
}

/// Chunks: maximal runs of matched candidate tokens that are adjacent in
/// both texts.
fn count_chunks(align: &[Option<usize>]) -> usize {
    let mut chunks = 0;
    let mut prev: Option<usize> = None;
    for a in align {
        match (a, prev) {
            (Some(j), Some(p)) if *j == p + 1 => {}
            (Some(_), _) => chunks += 1,
            (None, _) => {}
        }
        prev = *a;
    }
    chunks
}

impl fmt::Display for MetricScores {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", bleu_line(&self.bleu))?;
        writeln!(f, "{}", chrf_line(&self.chrf))?;
        write!(f, "{}", meteor_line(&self.meteor))
    }
}

pub fn bleu_line(b: &BleuScore) -> String {
    format!(
        "metric=bleu score={:.2} bp={:.4} p1={:.4} p2={:.4} p3={:.4} p4={:.4} c={} r={}",
        b.score, b.brevity_penalty, b.precisions[0], b.precisions[1], b.precisions[2], b.precisions[3], b.candidate_len, b.reference_len
    )
}

pub fn chrf_line(c: &ChrfScore) -> String {
    format!(
        "metric=chrf score={:.2} p1={:.4} p6={:.4} r1={:.4} r6={:.4}",
        c.score, c.precisions[0], c.precisions[5], c.recalls[0], c.recalls[5]
    )
}

pub fn meteor_line(m: &MeteorScore) -> String {
    format!(
        "metric=meteor score={:.2} precision={:.4} recall={:.4} penalty={:.4} matches={} chunks={}",
        m.score, m.precision, m.recall, m.fragmentation_penalty, m.matches, m.chunks
    )
}
