//! Bundled example datasets.

use std::path::Path;

use crate::dataset::{parse_csv, MultiCriteriaDataset};
use crate::interval::{IntervalSet, ScaleConfig};

/// Ten films, five critics each, scored on 1..10 (single `overall` criterion).
pub const FILMS_CSV: &str = include_str!("../data/films.csv");

/// Three alternatives (X dominant), two criteria, three experts, scale 0..10.
pub const TOPSIS_CSV: &str = include_str!("../data/topsis_fixture.csv");

pub fn film_scale() -> ScaleConfig {
    ScaleConfig::new(1.0, 10.0).expect("valid scale")
}

pub fn topsis_scale() -> ScaleConfig {
    ScaleConfig::new(0.0, 10.0).expect("valid scale")
}

pub fn films() -> MultiCriteriaDataset {
    parse_csv(FILMS_CSV.as_bytes(), Path::new("films.csv"), film_scale())
        .expect("bundled film data is valid")
}

pub fn topsis_fixture() -> MultiCriteriaDataset {
    parse_csv(TOPSIS_CSV.as_bytes(), Path::new("topsis_fixture.csv"), topsis_scale())
        .expect("bundled TOPSIS data is valid")
}

/// Interval set of one film, e.g. `film("Film B")`.
pub fn film(label: &str) -> IntervalSet {
    let ds = films();
    let a = ds.alternative_index(label).expect("known film");
    ds.cell(a, 0).clone()
}
