//! Aggregated fuzzy numbers from interval-valued data.
//!
//! Interval sets (one interval per expert or observation) are turned into
//! piecewise-constant Type-1 fuzzy numbers with the Interval Agreement
//! Approach, then compared with Jaccard, attribute-based and combined
//! similarity, ranked, and fed into a similarity-based TOPSIS.

pub mod attributes;
pub mod cli;
pub mod dataset;
pub mod error;
pub mod fixtures;
pub mod iaa;
pub mod interval;
pub mod ranking;
pub mod similarity;
pub mod topsis;

pub use attributes::{AttributeVector, FeatureVector};
pub use dataset::{load_dataset, MultiCriteriaDataset};
pub use error::{Error, Result};
pub use iaa::{evaluation_points, membership_at, FuzzyNumber, Region};
pub use interval::{ideal_interval_set, midpoint_mean, parse_interval, Ideal, Interval, IntervalSet, ScaleConfig};
pub use ranking::{RankEntry, RankingMethod, RankingResult};
pub use similarity::{Measure, SimilarityWeights};
pub use topsis::{DecisionMatrix, Direction, TopsisResult};
