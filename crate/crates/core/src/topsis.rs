//! Similarity-based TOPSIS over a matrix of fuzzy numbers.
//!
//! Per criterion, the positive and negative ideal solutions (PIS/NIS) are the
//! top and bottom alternatives under the universal ranking (swapped for cost
//! criteria). Separation from an ideal is the weighted sum of `1 - S` over
//! criteria, and closeness is `D- / (D+ + D-)`. This is a reconstruction: the
//! normalization and distance forms of classic TOPSIS are replaced by
//! normalized weights and similarity complements.

use std::cmp::Ordering;
use std::str::FromStr;

use serde::Serialize;

use crate::dataset::MultiCriteriaDataset;
use crate::error::{Error, Result};
use crate::iaa::FuzzyNumber;
use crate::ranking::{merge_sort_by, rank_universal, universal_compare};
use crate::similarity::{similarity, Measure, SimilarityWeights};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Benefit,
    Cost,
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "b" | "benefit" => Ok(Direction::Benefit),
            "c" | "cost" => Ok(Direction::Cost),
            other => Err(Error::InvalidArgument(format!("unknown direction `{other}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DecisionMatrix {
    alternatives: Vec<String>,
    criteria: Vec<String>,
    /// Row-major, `cells[alt * criteria.len() + crit]`.
    cells: Vec<FuzzyNumber>,
    weights: Vec<f64>,
    directions: Vec<Direction>,
}

impl DecisionMatrix {
    /// Equal weights, all criteria benefit.
    pub fn from_dataset(dataset: &MultiCriteriaDataset) -> Result<Self> {
        let k = dataset.criteria().len();
        DecisionMatrix::new(dataset, vec![1.0; k], vec![Direction::Benefit; k])
    }

    pub fn new(
        dataset: &MultiCriteriaDataset,
        weights: Vec<f64>,
        directions: Vec<Direction>,
    ) -> Result<Self> {
        let k = dataset.criteria().len();
        if weights.len() != k || directions.len() != k {
            return Err(Error::InvalidArgument(format!(
                "expected {k} weights and directions, got {} and {}",
                weights.len(),
                directions.len()
            )));
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidArgument("weights must be finite and >= 0".into()));
        }
        let total: f64 = weights.iter().sum();
        if total <= 0.0 {
            return Err(Error::InvalidArgument("weights must not all be zero".into()));
        }
        let scale = dataset.scale();
        let mut cells = Vec::with_capacity(dataset.alternatives().len() * k);
        for a in 0..dataset.alternatives().len() {
            for c in 0..k {
                cells.push(FuzzyNumber::construct(dataset.cell(a, c), scale)?);
            }
        }
        Ok(DecisionMatrix {
            alternatives: dataset.alternatives().to_vec(),
            criteria: dataset.criteria().to_vec(),
            cells,
            weights: weights.iter().map(|w| w / total).collect(),
            directions,
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    /// Weights after normalization to unit sum.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn cell(&self, alternative: usize, criterion: usize) -> &FuzzyNumber {
        &self.cells[alternative * self.criteria.len() + criterion]
    }

    pub fn column(&self, criterion: usize) -> Vec<FuzzyNumber> {
        (0..self.alternatives.len())
            .map(|a| self.cell(a, criterion).clone())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionIdeals {
    pub criterion: String,
    /// Alternative indices.
    #[serde(skip)]
    pub pis: usize,
    #[serde(skip)]
    pub nis: usize,
    #[serde(rename = "pis")]
    pub pis_label: String,
    #[serde(rename = "nis")]
    pub nis_label: String,
    /// PIS and NIS compare equal (e.g. a single alternative).
    pub degenerate: bool,
}

pub fn select_ideals(matrix: &DecisionMatrix, epsilon: f64) -> Result<Vec<CriterionIdeals>> {
    if matrix.alternatives.is_empty() {
        return Err(Error::InvalidArgument("matrix has no alternatives".into()));
    }
    (0..matrix.criteria.len())
        .map(|c| {
            let column = matrix.column(c);
            // Rank on indices so duplicate labels cannot confuse the lookup.
            let indexed: Vec<FuzzyNumber> = column
                .iter()
                .enumerate()
                .map(|(i, fz)| fz.clone().with_label(i.to_string()))
                .collect();
            let ranking = rank_universal(&indexed, epsilon)?;
            let index = |pos: usize| -> usize {
                ranking.entries[pos].label.parse().expect("index label")
            };
            let (top, bottom) = (index(0), index(ranking.entries.len() - 1));
            let (pis, nis) = match matrix.directions[c] {
                Direction::Benefit => (top, bottom),
                Direction::Cost => (bottom, top),
            };
            let degenerate =
                universal_compare(&column[pis], &column[nis], epsilon)? == Ordering::Equal;
            Ok(CriterionIdeals {
                criterion: matrix.criteria[c].clone(),
                pis,
                nis,
                pis_label: matrix.alternatives[pis].clone(),
                nis_label: matrix.alternatives[nis].clone(),
                degenerate,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Separation {
    pub d_plus: f64,
    pub d_minus: f64,
}

fn check_measure(measure: Measure) -> Result<()> {
    if measure == Measure::Jaccard {
        return Err(Error::InvalidArgument(
            "TOPSIS supports the attribute and combined measures".into(),
        ));
    }
    Ok(())
}

/// Weighted dissimilarity of every alternative to the PIS and NIS, summed in
/// criterion order.
pub fn separations(
    matrix: &DecisionMatrix,
    ideals: &[CriterionIdeals],
    measure: Measure,
    weights: &SimilarityWeights,
) -> Result<Vec<Separation>> {
    check_measure(measure)?;
    (0..matrix.alternatives.len())
        .map(|a| {
            let mut sep = Separation {
                d_plus: 0.0,
                d_minus: 0.0,
            };
            for (c, ideal) in ideals.iter().enumerate() {
                let cell = matrix.cell(a, c);
                let w = matrix.weights[c];
                let to_pis = similarity(cell, matrix.cell(ideal.pis, c), measure, weights)?;
                let to_nis = similarity(cell, matrix.cell(ideal.nis, c), measure, weights)?;
                sep.d_plus += w * (1.0 - to_pis);
                sep.d_minus += w * (1.0 - to_nis);
            }
            Ok(sep)
        })
        .collect()
}

#[derive(Debug, Clone, Copy)]
pub struct TopsisOptions {
    pub weights: SimilarityWeights,
    pub epsilon: f64,
    /// Criterion whose cells break exact closeness ties via the universal relation.
    pub tie_break: Option<usize>,
}

impl Default for TopsisOptions {
    fn default() -> Self {
        TopsisOptions {
            weights: SimilarityWeights::default(),
            epsilon: crate::ranking::DEFAULT_EPSILON,
            tie_break: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TopsisEntry {
    pub label: String,
    pub d_plus: f64,
    pub d_minus: f64,
    pub closeness: f64,
    pub rank: usize,
    /// `D+ + D- = 0`; closeness set to 0.5.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TopsisResult {
    pub measure: Measure,
    /// Best first.
    pub entries: Vec<TopsisEntry>,
    pub ideals: Vec<CriterionIdeals>,
    pub ties: Vec<Vec<String>>,
}

impl TopsisResult {
    pub fn entry(&self, label: &str) -> Option<&TopsisEntry> {
        self.entries.iter().find(|e| e.label == label)
    }
}

pub fn topsis_rank(
    matrix: &DecisionMatrix,
    measure: Measure,
    options: &TopsisOptions,
) -> Result<TopsisResult> {
    check_measure(measure)?;
    if let Some(c) = options.tie_break {
        if c >= matrix.criteria.len() {
            return Err(Error::InvalidArgument(format!("tie-break criterion {c} out of range")));
        }
    }
    let ideals = select_ideals(matrix, options.epsilon)?;
    let seps = separations(matrix, &ideals, measure, &options.weights)?;
    let scored: Vec<(f64, bool)> = seps
        .iter()
        .map(|s| {
            let denom = s.d_plus + s.d_minus;
            if denom > 0.0 {
                (s.d_minus / denom, false)
            } else {
                (0.5, true)
            }
        })
        .collect();

    let cmp = |i: usize, j: usize| -> Ordering {
        scored[j].0.total_cmp(&scored[i].0).then_with(|| match options.tie_break {
            Some(c) => universal_compare(matrix.cell(j, c), matrix.cell(i, c), options.epsilon)
                .unwrap_or(Ordering::Equal),
            None => Ordering::Equal,
        })
    };
    let mut order: Vec<usize> = (0..matrix.alternatives.len()).collect();
    merge_sort_by(&mut order, |&i, &j| cmp(i, j));

    let mut entries: Vec<TopsisEntry> = Vec::with_capacity(order.len());
    let mut ties: Vec<Vec<String>> = Vec::new();
    let mut in_group = false;
    for (pos, &i) in order.iter().enumerate() {
        let tied = pos > 0 && cmp(order[pos - 1], i) == Ordering::Equal;
        let rank = if tied { entries[pos - 1].rank } else { pos + 1 };
        if tied {
            if !in_group {
                ties.push(vec![entries[pos - 1].label.clone()]);
                in_group = true;
            }
            ties.last_mut().expect("group open").push(matrix.alternatives[i].clone());
        } else {
            in_group = false;
        }
        entries.push(TopsisEntry {
            label: matrix.alternatives[i].clone(),
            d_plus: seps[i].d_plus,
            d_minus: seps[i].d_minus,
            closeness: scored[i].0,
            rank,
            degenerate: scored[i].1,
        });
    }
    Ok(TopsisResult {
        measure,
        entries,
        ideals,
        ties,
    })
}
