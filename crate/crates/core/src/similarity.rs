//! Similarity between fuzzy numbers: discrete Jaccard, weighted attribute
//! comparison, and their average.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::attributes::feature_vector;
use crate::error::{Error, Result};
use crate::iaa::{evaluation_points, FuzzyNumber};

/// PCA-derived feature weights in feature order (quartile, centroid, area,
/// height, perimeter, agreement ratio). Only their squares are used.
pub const DEFAULT_WEIGHTS: [f64; 6] = [0.320726, -0.509757, 0.100985, -0.461649, 0.444451, -0.465218];

const NORM_TOLERANCE: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityWeights([f64; 6]);

impl SimilarityWeights {
    pub fn new(w: [f64; 6]) -> Result<Self> {
        let norm = w.iter().map(|x| x * x).sum::<f64>();
        if !norm.is_finite() || (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::InvalidWeights(norm));
        }
        Ok(SimilarityWeights(w))
    }

    pub fn values(&self) -> [f64; 6] {
        self.0
    }

    pub fn squared_norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum()
    }
}

impl Default for SimilarityWeights {
    fn default() -> Self {
        SimilarityWeights(DEFAULT_WEIGHTS)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Jaccard,
    Attribute,
    Combined,
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jaccard" => Ok(Measure::Jaccard),
            "attribute" => Ok(Measure::Attribute),
            "combined" => Ok(Measure::Combined),
            other => Err(Error::InvalidArgument(format!("unknown measure `{other}`"))),
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Measure::Jaccard => "jaccard",
            Measure::Attribute => "attribute",
            Measure::Combined => "combined",
        })
    }
}

/// Σ min / Σ max of the two memberships over the union of source endpoints,
/// summed in ascending `x`.
pub fn jaccard(a: &FuzzyNumber, b: &FuzzyNumber) -> Result<f64> {
    a.same_scale(b)?;
    let mut intersection = 0.0;
    let mut union = 0.0;
    for x in evaluation_points(a, b) {
        let (ma, mb) = (a.membership(x), b.membership(x));
        intersection += ma.min(mb);
        union += ma.max(mb);
    }
    if union == 0.0 {
        return Err(Error::EmptyEvaluation);
    }
    Ok(intersection / union)
}

/// `1 - Σ w_i² f_i` over the six attribute features.
pub fn attribute_similarity(
    a: &FuzzyNumber,
    b: &FuzzyNumber,
    weights: &SimilarityWeights,
) -> Result<f64> {
    let f = feature_vector(a, b)?;
    let penalty: f64 = weights.0.iter().zip(f.0).map(|(w, fi)| w * w * fi).sum();
    Ok(1.0 - penalty)
}

pub fn combined_similarity(
    a: &FuzzyNumber,
    b: &FuzzyNumber,
    weights: &SimilarityWeights,
) -> Result<f64> {
    Ok((jaccard(a, b)? + attribute_similarity(a, b, weights)?) / 2.0)
}

pub fn similarity(
    a: &FuzzyNumber,
    b: &FuzzyNumber,
    measure: Measure,
    weights: &SimilarityWeights,
) -> Result<f64> {
    match measure {
        Measure::Jaccard => jaccard(a, b),
        Measure::Attribute => attribute_similarity(a, b, weights),
        Measure::Combined => combined_similarity(a, b, weights),
    }
}

/// Symmetric `k × k` similarity matrix; each unordered pair is computed once.
pub fn similarity_matrix(
    items: &[FuzzyNumber],
    measure: Measure,
    weights: &SimilarityWeights,
) -> Result<Vec<Vec<f64>>> {
    let k = items.len();
    let mut m = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in i..k {
            let s = similarity(&items[i], &items[j], measure, weights)?;
            m[i][j] = s;
            m[j][i] = s;
        }
    }
    Ok(m)
}
