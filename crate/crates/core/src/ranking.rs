//! Ranking of fuzzy numbers.
//!
//! * universal: centroid-x (higher wins), then perimeter (lower wins), then
//!   centroid-y (higher wins); equal when all three tie;
//! * ideal ratio: `S(x, best) / (S(x, best) + S(x, worst))` under a similarity;
//! * baseline: mean of interval midpoints.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::attributes::{centroid, perimeter};
use crate::error::{Error, Result};
use crate::iaa::FuzzyNumber;
use crate::interval::{midpoint_mean, IntervalSet};
use crate::similarity::{similarity, Measure, SimilarityWeights};

pub const DEFAULT_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "method", content = "measure", rename_all = "snake_case")]
pub enum RankingMethod {
    Universal,
    IdealRatio(Measure),
    BaselineMean,
}

impl fmt::Display for RankingMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankingMethod::Universal => f.write_str("universal"),
            RankingMethod::IdealRatio(m) => write!(f, "ideal_ratio({m})"),
            RankingMethod::BaselineMean => f.write_str("baseline_mean"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankEntry {
    pub label: String,
    pub score: Option<f64>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankingResult {
    pub method: RankingMethod,
    pub entries: Vec<RankEntry>,
    pub ties: Vec<Vec<String>>,
}

impl RankingResult {
    pub fn labels(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.label.as_str()).collect()
    }

    pub fn rank_of(&self, label: &str) -> Option<usize> {
        self.entries.iter().find(|e| e.label == label).map(|e| e.rank)
    }

    /// Competition ranking over an already sorted list; `equal(i, j)` compares
    /// neighbours in sorted order.
    fn assemble(
        method: RankingMethod,
        sorted: Vec<(String, Option<f64>)>,
        equal: impl Fn(usize, usize) -> bool,
    ) -> Self {
        let mut entries: Vec<RankEntry> = Vec::with_capacity(sorted.len());
        let mut ties: Vec<Vec<String>> = Vec::new();
        let mut in_group = false;
        for (i, (label, score)) in sorted.into_iter().enumerate() {
            let tied = i > 0 && equal(i - 1, i);
            let rank = if tied { entries[i - 1].rank } else { i + 1 };
            if tied {
                if !in_group {
                    ties.push(vec![entries[i - 1].label.clone()]);
                    in_group = true;
                }
                ties.last_mut().expect("group open").push(label.clone());
            } else {
                in_group = false;
            }
            entries.push(RankEntry { label, score, rank });
        }
        RankingResult {
            method,
            entries,
            ties,
        }
    }
}

/// `|x - y| <= epsilon * max(1, |x|, |y|)`.
pub fn approx_eq(x: f64, y: f64, epsilon: f64) -> bool {
    (x - y).abs() <= epsilon * 1f64.max(x.abs()).max(y.abs())
}

/// Comparison keys of the universal relation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniversalKey {
    pub centroid_x: f64,
    pub perimeter: f64,
    pub centroid_y: f64,
}

impl UniversalKey {
    pub fn of(fz: &FuzzyNumber) -> Self {
        let (centroid_x, centroid_y) = centroid(fz);
        UniversalKey {
            centroid_x,
            perimeter: perimeter(fz),
            centroid_y,
        }
    }

    /// `Greater` means `self` outranks `other`.
    pub fn compare(&self, other: &UniversalKey, epsilon: f64) -> Ordering {
        let step = |a: f64, b: f64| {
            if approx_eq(a, b, epsilon) {
                Ordering::Equal
            } else {
                a.total_cmp(&b)
            }
        };
        step(self.centroid_x, other.centroid_x)
            .then_with(|| step(other.perimeter, self.perimeter))
            .then_with(|| step(self.centroid_y, other.centroid_y))
    }
}

/// `Greater` means `a` outranks `b`.
pub fn universal_compare(a: &FuzzyNumber, b: &FuzzyNumber, epsilon: f64) -> Result<Ordering> {
    a.same_scale(b)?;
    Ok(UniversalKey::of(a).compare(&UniversalKey::of(b), epsilon))
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if !(epsilon >= 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidArgument(format!("epsilon must be >= 0, got {epsilon}")));
    }
    Ok(())
}

fn check_shared_scale(items: &[FuzzyNumber]) -> Result<()> {
    if items.is_empty() {
        return Err(Error::InvalidArgument("nothing to rank".into()));
    }
    items.iter().try_for_each(|fz| items[0].same_scale(fz).map(|_| ()))
}

/// Stable top-down merge sort. Unlike the std sorts it tolerates comparators
/// that are not total orders (tolerance-based equality is not transitive).
pub(crate) fn merge_sort_by<T: Copy>(items: &mut [T], mut cmp: impl FnMut(&T, &T) -> Ordering) {
    fn go<T: Copy>(items: &mut [T], buf: &mut Vec<T>, cmp: &mut dyn FnMut(&T, &T) -> Ordering) {
        if items.len() <= 1 {
            return;
        }
        let mid = items.len() / 2;
        go(&mut items[..mid], buf, cmp);
        go(&mut items[mid..], buf, cmp);
        buf.clear();
        let (mut i, mut j) = (0, mid);
        while i < mid && j < items.len() {
            if cmp(&items[j], &items[i]) == Ordering::Less {
                buf.push(items[j]);
                j += 1;
            } else {
                buf.push(items[i]);
                i += 1;
            }
        }
        buf.extend_from_slice(&items[i..mid]);
        buf.extend_from_slice(&items[j..]);
        items.copy_from_slice(buf);
    }
    let mut buf = Vec::with_capacity(items.len());
    go(items, &mut buf, &mut cmp);
}

/// Best first; exact ties keep input order and share a rank.
pub fn rank_universal(items: &[FuzzyNumber], epsilon: f64) -> Result<RankingResult> {
    check_epsilon(epsilon)?;
    check_shared_scale(items)?;
    let keys: Vec<UniversalKey> = items.iter().map(UniversalKey::of).collect();
    let mut order: Vec<usize> = (0..items.len()).collect();
    merge_sort_by(&mut order, |&i, &j| keys[j].compare(&keys[i], epsilon));
    let sorted = order
        .iter()
        .map(|&i| (items[i].label().to_string(), None))
        .collect();
    Ok(RankingResult::assemble(RankingMethod::Universal, sorted, |p, q| {
        keys[order[p]].compare(&keys[order[q]], epsilon) == Ordering::Equal
    }))
}

pub fn ideal_ratio(
    fz: &FuzzyNumber,
    ideal_best: &FuzzyNumber,
    ideal_worst: &FuzzyNumber,
    measure: Measure,
    weights: &SimilarityWeights,
) -> Result<f64> {
    let to_best = similarity(fz, ideal_best, measure, weights)?;
    let to_worst = similarity(fz, ideal_worst, measure, weights)?;
    let total = to_best + to_worst;
    if total == 0.0 {
        return Err(Error::DivisionByZero {
            label: fz.label().to_string(),
        });
    }
    Ok(to_best / total)
}

/// Descending ideal ratio; exact score ties fall back to the universal relation.
pub fn rank_by_ideal_ratio(
    items: &[FuzzyNumber],
    ideal_best: &FuzzyNumber,
    ideal_worst: &FuzzyNumber,
    measure: Measure,
    weights: &SimilarityWeights,
    epsilon: f64,
) -> Result<RankingResult> {
    check_epsilon(epsilon)?;
    check_shared_scale(items)?;
    ideal_best.same_scale(&items[0])?;
    ideal_worst.same_scale(&items[0])?;
    let scores = items
        .iter()
        .map(|fz| ideal_ratio(fz, ideal_best, ideal_worst, measure, weights))
        .collect::<Result<Vec<f64>>>()?;
    let keys: Vec<UniversalKey> = items.iter().map(UniversalKey::of).collect();
    let cmp = |i: usize, j: usize| {
        scores[j]
            .total_cmp(&scores[i])
            .then_with(|| keys[j].compare(&keys[i], epsilon))
    };
    let mut order: Vec<usize> = (0..items.len()).collect();
    merge_sort_by(&mut order, |&i, &j| cmp(i, j));
    let sorted = order
        .iter()
        .map(|&i| (items[i].label().to_string(), Some(scores[i])))
        .collect();
    Ok(RankingResult::assemble(
        RankingMethod::IdealRatio(measure),
        sorted,
        |p, q| cmp(order[p], order[q]) == Ordering::Equal,
    ))
}

/// Descending mean of interval midpoints; equal means share a rank.
pub fn rank_baseline_mean(sets: &[&IntervalSet]) -> Result<RankingResult> {
    if sets.is_empty() {
        return Err(Error::InvalidArgument("nothing to rank".into()));
    }
    let means: Vec<f64> = sets.iter().map(|s| midpoint_mean(s)).collect();
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by(|&i, &j| means[j].total_cmp(&means[i]));
    let sorted = order
        .iter()
        .map(|&i| (sets[i].label().to_string(), Some(means[i])))
        .collect();
    Ok(RankingResult::assemble(RankingMethod::BaselineMean, sorted, |p, q| {
        means[order[p]] == means[order[q]]
    }))
}
