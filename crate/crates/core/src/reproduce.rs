//! One-shot regeneration of the evaluation: the engine's translation of
//! the Dante passage, the six diffs computable from stored texts, the
//! metric table and the group statistics, each checked against the
//! published numbers.

use std::fmt::Write as _;

use crate::corpus::Corpus;
use crate::decoder;
use crate::diffalign::{cohens_f_from_eta, effect_size, group_stats, word_diff, PUBLISHED_COUNTS};
use crate::evalmetrics::MetricScores;
use crate::pipeline::Pipeline;
use crate::Error;

/// The diff comparisons whose inputs are stored: (item, a, b), items
/// numbered from 1 as in the published list.
pub const TEXT_DIFFS: [(usize, &str, &str); 6] = [
    (4, "chatgpt_pucci", "claude_pucci"),
    (5, "chatgpt_pucci", "grok_pucci"),
    (6, "claude_pucci", "grok_pucci"),
    (10, "pucci_fr_1931", "chatgpt_pucci"),
    (11, "pucci_fr_1931", "claude_pucci"),
    (12, "pucci_fr_1931", "grok_pucci"),
];

pub const DIFF_TOLERANCE: usize = 6;

/// Published candidate scores against the 1931 text, in ascending order:
/// (id, bleu, chrf, meteor).
pub const PUBLISHED_SCORES: [(&str, f64, f64, f64); 4] = [
    ("godefroy_1901", 12.47, 63.81, 56.76),
    ("fardel_1898", 17.34, 66.87, 59.85),
    ("cochin_1905", 46.23, 75.31, 78.43),
    ("gpt5_nmt", 67.45, 85.60, 82.62),
];

pub const ENGINE_MIN_CHRF: f64 = 70.0;
pub const ENGINE_MAX_HUNKS: usize = 50;

/// Published eta squared, and the resulting f to four decimals.
pub const PUBLISHED_ETA_SQUARED: f64 = 0.077;
pub const EXPECTED_COHENS_F: f64 = 0.2888;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub value: String,
    pub expected: String,
    pub pass: bool,
}

impl Check {
    fn new(name: impl Into<String>, value: String, expected: String, pass: bool) -> Self {
        Check {
            name: name.into(),
            value,
            expected,
            pass,
        }
    }

    pub fn machine_line(&self) -> String {
        format!(
            "check={} value={} expected={} status={}",
            self.name,
            self.value.replace(' ', "_"),
            self.expected.replace(' ', "_"),
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub translation: String,
    pub sections: Vec<(String, Vec<String>)>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Human tables followed by the machine lines.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (title, lines) in &self.sections {
            let _ = writeln!(s, "== {title}");
            for l in lines {
                let _ = writeln!(s, "{l}");
            }
            s.push('\n');
        }
        let _ = writeln!(s, "== checks");
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let _ = writeln!(
                s,
                "{:<width$}  {:<6} {:>12}  expected {}",
                c.name,
                if c.pass { "PASS" } else { "FAIL" },
                c.value,
                c.expected
            );
        }
        s.push('\n');
        for c in &self.checks {
            let _ = writeln!(s, "{}", c.machine_line());
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        let _ = writeln!(
            s,
            "result={} checks={} failed={failed}",
            if failed == 0 { "PASS" } else { "FAIL" },
            self.checks.len()
        );
        s
    }
}

fn text<'a>(corpus: &'a Corpus, id: &str) -> Result<&'a str, Error> {
    Ok(&corpus.get(id)?.text)
}

pub fn run(pipeline: &Pipeline, corpus: &Corpus) -> Result<Report, Error> {
    let mut sections = Vec::new();
    let mut checks = Vec::new();

    let reference = text(corpus, "pucci_fr_1931")?;
    let translation = decoder::translate(text(corpus, "dante_it")?, pipeline)?;
    let diff = word_diff(reference, &translation);
    let chrf = MetricScores::compute(&translation, reference).chrf.score;
    sections.push((
        "engine translation of dante_it".to_string(),
        vec![
            translation.clone(),
            format!("engine {} hunks={} chrf={chrf:.2}", diff.summary_line(), diff.total()),
        ],
    ));
    checks.push(Check::new(
        "engine_chrf",
        format!("{chrf:.2}"),
        format!(">={ENGINE_MIN_CHRF:.0}"),
        chrf >= ENGINE_MIN_CHRF,
    ));
    checks.push(Check::new(
        "engine_hunks",
        diff.total().to_string(),
        format!("<={ENGINE_MAX_HUNKS}"),
        diff.total() <= ENGINE_MAX_HUNKS,
    ));

    let mut lines = vec![format!(
        "{:<5} {:<14} {:<14} {:>8} {:>9} {:>9}",
        "item", "a", "b", "removals", "additions", "published"
    )];
    for (item, a, b) in TEXT_DIFFS {
        let d = word_diff(text(corpus, a)?, text(corpus, b)?);
        let (pr, pa) = PUBLISHED_COUNTS[item - 1];
        lines.push(format!(
            "{item:<5} {a:<14} {b:<14} {:>8} {:>9} {:>9}",
            d.removals,
            d.additions,
            format!("{pr}/{pa}")
        ));
        let ok = d.removals.abs_diff(pr as usize) <= DIFF_TOLERANCE
            && d.additions.abs_diff(pa as usize) <= DIFF_TOLERANCE;
        checks.push(Check::new(
            format!("diff_item_{item}"),
            format!("{}/{}", d.removals, d.additions),
            format!("{pr}/{pa}±{DIFF_TOLERANCE}"),
            ok,
        ));
    }
    sections.push(("text-reproducible diffs".to_string(), lines));

    let mut lines = vec![format!(
        "{:<14} {:>7} {:>7} {:>7} {:>7} {:>8} {:>9}",
        "candidate", "bleu", "chrf", "chrf_p1", "chrf_p6", "meteor", "meteor_p"
    )];
    let mut scores = Vec::new();
    for (id, pb, pc, pm) in PUBLISHED_SCORES {
        let s = MetricScores::compute(text(corpus, id)?, reference);
        lines.push(format!(
            "{id:<14} {:>7.2} {:>7.2} {:>7.4} {:>7.4} {:>8.2} {:>9.4}",
            s.bleu.score,
            s.chrf.score,
            s.chrf.precisions[0],
            s.chrf.precisions[5],
            s.meteor.score,
            s.meteor.precision
        ));
        let bleu_tol = if pb > 40.0 { 8.0 } else { 6.0 };
        for (metric, got, want, tol) in [
            ("bleu", s.bleu.score, pb, bleu_tol),
            ("chrf", s.chrf.score, pc, 6.0),
            ("meteor", s.meteor.score, pm, 8.0),
        ] {
            checks.push(Check::new(
                format!("{metric}_{id}"),
                format!("{got:.2}"),
                format!("{want:.2}±{tol:.0}"),
                (got - want).abs() <= tol,
            ));
        }
        scores.push((id, s));
    }
    sections.push(("metrics against pucci_fr_1931".to_string(), lines));
    for metric in ["bleu", "chrf", "meteor"] {
        let values: Vec<f64> = scores
            .iter()
            .map(|(_, s)| match metric {
                "bleu" => s.bleu.score,
                "chrf" => s.chrf.score,
                _ => s.meteor.score,
            })
            .collect();
        let order = scores.iter().map(|(id, _)| *id).collect::<Vec<_>>().join("<");
        checks.push(Check::new(
            format!("order_{metric}"),
            values.iter().map(|v| format!("{v:.2}")).collect::<Vec<_>>().join(","),
            order,
            values.windows(2).all(|w| w[0] < w[1]),
        ));
    }

    let g1 = PUBLISHED_COUNTS[..3].to_vec();
    let g23 = PUBLISHED_COUNTS[3..].to_vec();
    let means = group_stats(&[g1.clone(), g23.clone()])?;
    let flat = |g: &[(u32, u32)]| -> Vec<f64> {
        g.iter().flat_map(|&(r, a)| [f64::from(r), f64::from(a)]).collect()
    };
    let anova = effect_size(&[flat(&g1), flat(&g23)])?;
    let f = cohens_f_from_eta(PUBLISHED_ETA_SQUARED);
    sections.push((
        "group statistics from published counts".to_string(),
        vec![
            format!("group1 mean={:.2} ({}/{})", means[0].value(), means[0].sum, means[0].count),
            format!("group2_3 mean={:.2} ({}/{})", means[1].value(), means[1].sum, means[1].count),
            format!(
                "anova over these two groups: eta_squared={:.4} cohens_f={:.4}",
                anova.eta_squared, anova.cohens_f
            ),
            format!("identity sqrt({PUBLISHED_ETA_SQUARED}/{:.3})={f:.6}", 1.0 - PUBLISHED_ETA_SQUARED),
        ],
    ));
    checks.push(Check::new(
        "group1_mean",
        format!("{:.2}", means[0].rounded(2)),
        "21.33".into(),
        means[0].rounded(2) == 21.33,
    ));
    checks.push(Check::new(
        "group2_3_mean",
        format!("{:.2}", means[1].rounded(2)),
        "23.67".into(),
        means[1].rounded(2) == 23.67,
    ));
    checks.push(Check::new(
        "cohens_f_identity",
        format!("{f:.6}"),
        format!("{EXPECTED_COHENS_F}±1e-4"),
        (f - EXPECTED_COHENS_F).abs() <= 1e-4 && (f * 100.0).round() / 100.0 == 0.29,
    ));

    Ok(Report {
        translation,
        sections,
        checks,
    })
}
