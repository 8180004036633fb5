//! Word-level diff with hunk counting, and the group statistics computed
//! over removal/addition counts.
//!
//! A hunk is a maximal run of unmatched tokens between two matches of the
//! alignment. Its A side counts as one removal when non-empty and its B side
//! as one addition when non-empty, whatever the number of words involved.

use std::fmt;
use std::ops::Range;

use thiserror::Error;

use crate::text::tokenize;

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("group {0} is empty")]
    EmptyGroup(usize),
    #[error("effect size needs at least two groups, got {0}")]
    TooFewGroups(usize),
}

/// One changed region: token index ranges on each side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hunk {
    pub a: Range<usize>,
    pub b: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffReport {
    pub removals: usize,
    pub additions: usize,
    pub hunks: Vec<Hunk>,
    pub a_tokens: Vec<String>,
    pub b_tokens: Vec<String>,
}

impl DiffReport {
    pub fn total(&self) -> usize {
        self.removals + self.additions
    }

    /// Single-line machine form.
    pub fn summary_line(&self) -> String {
        format!("removals={} additions={}", self.removals, self.additions)
    }

    /// Aligned listing, one hunk per line.
    pub fn listing(&self) -> String {
        let mut out = String::new();
        for (n, h) in self.hunks.iter().enumerate() {
            let a = self.a_tokens[h.a.clone()].join(" ");
            let b = self.b_tokens[h.b.clone()].join(" ");
            out.push_str(&format!("{:>3} a[{}..{}] -{{{}}} +{{{}}} b[{}..{}]\n", n + 1, h.a.start, h.a.end, a, b, h.b.start, h.b.end));
        }
        out
    }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary_line())
    }
}

/// Diff two texts word by word.
///
/// The alignment maximizes matched tokens and, among those, minimizes the
/// number of hunks. Inputs are put in a canonical order before aligning so
/// that swapping `a` and `b` mirrors the report exactly.
pub fn word_diff(a: &str, b: &str) -> DiffReport {
    let ta = tokenize(a);
    let tb = tokenize(b);
    if ta <= tb {
        report(ta, tb, false)
    } else {
        report(tb, ta, true)
    }
}

fn report(x: Vec<String>, y: Vec<String>, mirrored: bool) -> DiffReport {
    let pairs = align(&x, &y);
    let mut hunks = Vec::new();
    let (mut i, mut j) = (0, 0);
    for &(mi, mj) in pairs.iter().chain(std::iter::once(&(x.len(), y.len()))) {
        if mi > i || mj > j {
            hunks.push(Hunk { a: i..mi, b: j..mj });
        }
        i = mi + 1;
        j = mj + 1;
    }
    let (a_tokens, b_tokens) = if mirrored {
        for h in &mut hunks {
            std::mem::swap(&mut h.a, &mut h.b);
        }
        (y, x)
    } else {
        (x, y)
    };
    let removals = hunks.iter().filter(|h| !h.a.is_empty()).count();
    let additions = hunks.iter().filter(|h| !h.b.is_empty()).count();
    DiffReport { removals, additions, hunks, a_tokens, b_tokens }
}

/// Matched index pairs of an alignment with maximum matches, then minimum
/// hunk count.
fn align(x: &[String], y: &[String]) -> Vec<(usize, usize)> {
    let (n, m) = (x.len(), y.len());
    // score = matches * W - hunks; W exceeds any possible hunk count.
    let w = (n + m + 1) as i64;
    // best[i][j][g]: best score for suffixes x[i..], y[j..] when the
    // previous step was a gap (g = 1) or not (g = 0).
    let idx = |i: usize, j: usize, g: usize| (i * (m + 1) + j) * 2 + g;
    let mut best = vec![0i64; (n + 1) * (m + 1) * 2];
    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            for g in 0..2 {
                if i == n && j == m {
                    best[idx(i, j, g)] = 0;
                    continue;
                }
                let open = if g == 0 { 1 } else { 0 };
                let mut s = i64::MIN;
                if i < n && j < m && x[i] == y[j] {
                    s = s.max(best[idx(i + 1, j + 1, 0)] + w);
                }
                if i < n {
                    s = s.max(best[idx(i + 1, j, 1)] - open);
                }
                if j < m {
                    s = s.max(best[idx(i, j + 1, 1)] - open);
                }
                best[idx(i, j, g)] = s;
            }
        }
    }
    let mut pairs = Vec::new();
    let (mut i, mut j, mut g) = (0, 0, 0);
    while i < n || j < m {
        let cur = best[idx(i, j, g)];
        let open = if g == 0 { 1 } else { 0 };
        if i < n && j < m && x[i] == y[j] && best[idx(i + 1, j + 1, 0)] + w == cur {
            pairs.push((i, j));
            i += 1;
            j += 1;
            g = 0;
        } else if i < n && best[idx(i + 1, j, 1)] - open == cur {
            i += 1;
            g = 1;
        } else {
            j += 1;
            g = 1;
        }
    }
    pairs
}

/// Exact mean of integer counts, kept as a fraction until displayed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupMean {
    pub sum: u64,
    pub count: u64,
}

impl GroupMean {
    pub fn value(&self) -> f64 {
        self.sum as f64 / self.count as f64
    }

    /// Round half away from zero to `digits` decimals using integer arithmetic.
    pub fn rounded(&self, digits: u32) -> f64 {
        let scale = 10u64.pow(digits);
        let scaled = (2 * self.sum * scale + self.count) / (2 * self.count);
        scaled as f64 / scale as f64
    }
}

/// Mean of the flattened removal and addition values of each group.
pub fn group_stats(groups: &[Vec<(u32, u32)>]) -> Result<Vec<GroupMean>, StatsError> {
    groups
        .iter()
        .enumerate()
        .map(|(g, pairs)| {
            if pairs.is_empty() {
                return Err(StatsError::EmptyGroup(g));
            }
            let sum = pairs.iter().map(|&(r, a)| u64::from(r) + u64::from(a)).sum();
            Ok(GroupMean { sum, count: 2 * pairs.len() as u64 })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct EffectSize {
    pub eta_squared: f64,
    pub cohens_f: f64,
    pub group_means: Vec<f64>,
}

/// Cohen's f from eta squared; infinite when eta squared is 1.
pub fn cohens_f_from_eta(eta_squared: f64) -> f64 {
    if eta_squared >= 1.0 {
        f64::INFINITY
    } else {
        (eta_squared / (1.0 - eta_squared)).sqrt()
    }
}

/// One-way ANOVA effect size over the supplied arrangement of values.
pub fn effect_size(groups: &[Vec<f64>]) -> Result<EffectSize, StatsError> {
    if groups.len() < 2 {
        return Err(StatsError::TooFewGroups(groups.len()));
    }
    if let Some(g) = groups.iter().position(|g| g.is_empty()) {
        return Err(StatsError::EmptyGroup(g));
    }
    let n: usize = groups.iter().map(Vec::len).sum();
    let grand = groups.iter().flatten().sum::<f64>() / n as f64;
    let group_means: Vec<f64> = groups.iter().map(|g| g.iter().sum::<f64>() / g.len() as f64).collect();
    let ss_between: f64 = groups
        .iter()
        .zip(&group_means)
        .map(|(g, mean)| g.len() as f64 * (mean - grand).powi(2))
        .sum();
    let ss_total: f64 = groups.iter().flatten().map(|x| (x - grand).powi(2)).sum();
    let eta_squared = if ss_total <= f64::EPSILON * n as f64 * grand.abs().max(1.0) {
        0.0
    } else {
        (ss_between / ss_total).clamp(0.0, 1.0)
    };
    Ok(EffectSize { eta_squared, cohens_f: cohens_f_from_eta(eta_squared), group_means })
}

/// Published removal/addition counts of the fifteen comparisons, in order.
pub const PUBLISHED_COUNTS: [(u32, u32); 15] = [
    (23, 20),
    (21, 19),
    (22, 23),
    (30, 25),
    (27, 23),
    (25, 21),
    (20, 22),
    (20, 19),
    (24, 28),
    (20, 20),
    (24, 23),
    (24, 24),
    (25, 27),
    (25, 26),
    (24, 22),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_texts_have_no_hunks() {
        let r = word_diff("a b c", "a b c");
        assert_eq!((r.removals, r.additions), (0, 0));
        assert!(r.hunks.is_empty());
    }

    #[test]
    fn single_substitution() {
        let r = word_diff("a b c", "a x c");
        assert_eq!((r.removals, r.additions), (1, 1));
        assert_eq!(r.hunks, vec![Hunk { a: 1..2, b: 1..2 }]);
    }

    #[test]
    fn pure_insertion_and_deletion() {
        let r = word_diff("a c", "a b b c");
        assert_eq!((r.removals, r.additions), (0, 1));
        let r = word_diff("a b b c d", "a c");
        assert_eq!((r.removals, r.additions), (2, 0));
    }

    #[test]
    fn punctuation_counts() {
        let r = word_diff("il arriva que", "il arriva, que");
        assert_eq!((r.removals, r.additions), (0, 1));
    }

    #[test]
    fn case_sensitive() {
        let r = word_diff("Elle", "elle");
        assert_eq!((r.removals, r.additions), (1, 1));
    }

    #[test]
    fn fewest_hunks_among_longest_alignments() {
        // Both "x y" alignments keep two matches; one of them leaves a single hunk.
        let r = word_diff("x y z", "x q y z");
        assert_eq!(r.hunks.len(), 1);
    }

    #[test]
    fn group_means_exact() {
        let g1 = PUBLISHED_COUNTS[..3].to_vec();
        let g23 = PUBLISHED_COUNTS[3..].to_vec();
        let means = group_stats(&[g1, g23]).unwrap();
        assert_eq!(means[0], GroupMean { sum: 128, count: 6 });
        assert_eq!(means[1], GroupMean { sum: 568, count: 24 });
        assert_eq!(means[0].rounded(2), 21.33);
        assert_eq!(means[1].rounded(2), 23.67);
    }

    #[test]
    fn single_group_constant() {
        let m = group_stats(&[vec![(5, 5), (5, 5)]]).unwrap();
        assert_eq!(m[0].value(), 5.0);
    }

    #[test]
    fn empty_group_rejected() {
        assert_eq!(group_stats(&[vec![(1, 1)], vec![]]), Err(StatsError::EmptyGroup(1)));
        assert_eq!(effect_size(&[vec![1.0]]), Err(StatsError::TooFewGroups(1)));
        assert_eq!(effect_size(&[vec![1.0], vec![]]), Err(StatsError::EmptyGroup(1)));
    }

    #[test]
    fn cohens_f_identity_from_published_eta() {
        // sqrt(0.077 / 0.923) = 0.2888314...
        let f = cohens_f_from_eta(0.077);
        assert!((f - 0.288_831_47).abs() < 1e-6, "{f}");
        assert_eq!((f * 100.0).round() / 100.0, 0.29);
    }

    #[test]
    fn equal_means_give_zero() {
        let e = effect_size(&[vec![1.0, 3.0], vec![2.0, 2.0]]).unwrap();
        assert_eq!(e.eta_squared, 0.0);
        assert_eq!(e.cohens_f, 0.0);
    }

    #[test]
    fn no_within_variance_gives_one() {
        let e = effect_size(&[vec![0.0, 0.0], vec![1.0, 1.0]]).unwrap();
        assert_eq!(e.eta_squared, 1.0);
        assert!(e.cohens_f.is_infinite());
    }

    #[test]
    fn zero_total_variance_is_zero() {
        let e = effect_size(&[vec![4.0, 4.0], vec![4.0]]).unwrap();
        assert_eq!(e.eta_squared, 0.0);
    }
}
