//! Long-format dataset ingestion.
//!
//! One row per (alternative, criterion, source) with the interval bounds:
//!
//! ```text
//! alternative,criterion,source,left,right
//! Film A,overall,critic1,1,1
//! ```
//!
//! A `.json` file holds an array of objects with the same field names.

use std::collections::HashMap;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalSet, ScaleConfig};

const HEADER: [&str; 5] = ["alternative", "criterion", "source", "left", "right"];

#[derive(Debug, Clone, Deserialize)]
struct Row {
    alternative: String,
    criterion: String,
    source: String,
    left: f64,
    right: f64,
}

/// Alternatives × criteria grid of interval sets on one scale.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiCriteriaDataset {
    alternatives: Vec<String>,
    criteria: Vec<String>,
    /// Row-major: `cells[alt * criteria.len() + crit]`.
    cells: Vec<IntervalSet>,
    scale: ScaleConfig,
}

impl MultiCriteriaDataset {
    /// Builds a dataset from a full grid. `cells[a][c]` is alternative `a`, criterion `c`.
    pub fn from_grid(
        alternatives: Vec<String>,
        criteria: Vec<String>,
        cells: Vec<Vec<IntervalSet>>,
        scale: ScaleConfig,
    ) -> Result<Self> {
        if alternatives.is_empty() || criteria.is_empty() {
            return Err(Error::InvalidArgument(
                "dataset needs at least one alternative and one criterion".into(),
            ));
        }
        if cells.len() != alternatives.len() || cells.iter().any(|r| r.len() != criteria.len()) {
            return Err(Error::InvalidArgument("cell grid shape mismatch".into()));
        }
        let cells: Vec<IntervalSet> = cells.into_iter().flatten().collect();
        for cell in &cells {
            cell.validate(&scale)?;
        }
        Ok(MultiCriteriaDataset {
            alternatives,
            criteria,
            cells,
            scale,
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    pub fn scale(&self) -> ScaleConfig {
        self.scale
    }

    pub fn cell(&self, alternative: usize, criterion: usize) -> &IntervalSet {
        &self.cells[alternative * self.criteria.len() + criterion]
    }

    pub fn criterion_index(&self, label: &str) -> Result<usize> {
        self.criteria
            .iter()
            .position(|c| c == label)
            .ok_or_else(|| Error::UnknownLabel {
                kind: "criterion",
                label: label.to_string(),
            })
    }

    pub fn alternative_index(&self, label: &str) -> Result<usize> {
        self.alternatives
            .iter()
            .position(|a| a == label)
            .ok_or_else(|| Error::UnknownLabel {
                kind: "alternative",
                label: label.to_string(),
            })
    }

    /// Interval sets of one criterion, in alternative order.
    pub fn column(&self, criterion: usize) -> Vec<&IntervalSet> {
        (0..self.alternatives.len())
            .map(|a| self.cell(a, criterion))
            .collect()
    }

    /// Copy of the dataset without the named criterion.
    pub fn without_criterion(&self, label: &str) -> Result<Self> {
        let drop = self.criterion_index(label)?;
        if self.criteria.len() == 1 {
            return Err(Error::InvalidArgument(format!(
                "cannot exclude `{label}`: it is the only criterion"
            )));
        }
        let criteria = self
            .criteria
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != drop)
            .map(|(_, c)| c.clone())
            .collect();
        let cells = (0..self.alternatives.len())
            .map(|a| {
                (0..self.criteria.len())
                    .filter(|&c| c != drop)
                    .map(|c| self.cell(a, c).clone())
                    .collect()
            })
            .collect();
        MultiCriteriaDataset::from_grid(self.alternatives.clone(), criteria, cells, self.scale)
    }

    /// Alternatives whose criteria have differing source counts. Not an error.
    pub fn ragged_alternatives(&self) -> Vec<&str> {
        self.alternatives
            .iter()
            .enumerate()
            .filter(|&(a, _)| {
                let n0 = self.cell(a, 0).len();
                (1..self.criteria.len()).any(|c| self.cell(a, c).len() != n0)
            })
            .map(|(_, label)| label.as_str())
            .collect()
    }
}

pub fn load_dataset(path: impl AsRef<Path>, scale: ScaleConfig) -> Result<MultiCriteriaDataset> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let is_json = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"));
    if is_json {
        parse_json(&bytes, path, scale)
    } else {
        parse_csv(&bytes, path, scale)
    }
}

/// Parses CSV bytes; `origin` is only used in error messages.
pub fn parse_csv(bytes: &[u8], origin: &Path, scale: ScaleConfig) -> Result<MultiCriteriaDataset> {
    let malformed = |line: usize, message: String| Error::MalformedRow {
        path: origin.to_path_buf(),
        line,
        message,
    };
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(bytes);
    let header = match reader.headers() {
        Ok(h) if h.iter().all(str::is_empty) => return Err(Error::EmptyDataset(origin.into())),
        Ok(h) => h.clone(),
        Err(e) => return Err(malformed(1, e.to_string())),
    };
    if header.iter().ne(HEADER.iter().copied()) {
        return Err(malformed(
            1,
            format!("expected header `{}`", HEADER.join(",")),
        ));
    }

    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            malformed(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let row: Row = record
            .deserialize(Some(&header))
            .map_err(|e| malformed(line, e.to_string()))?;
        rows.push((line, row));
    }
    assemble(rows, origin, scale)
}

pub fn parse_json(bytes: &[u8], origin: &Path, scale: ScaleConfig) -> Result<MultiCriteriaDataset> {
    let rows: Vec<Row> = serde_json::from_slice(bytes).map_err(|e| Error::MalformedRow {
        path: origin.to_path_buf(),
        line: e.line(),
        message: e.to_string(),
    })?;
    // JSON rows are numbered by record index, 1-based.
    let rows = rows.into_iter().enumerate().map(|(i, r)| (i + 1, r)).collect();
    assemble(rows, origin, scale)
}

fn assemble(
    rows: Vec<(usize, Row)>,
    origin: &Path,
    scale: ScaleConfig,
) -> Result<MultiCriteriaDataset> {
    if rows.is_empty() {
        return Err(Error::EmptyDataset(origin.to_path_buf()));
    }
    let mut alternatives: Vec<String> = Vec::new();
    let mut criteria: Vec<String> = Vec::new();
    let mut groups: HashMap<(usize, usize), Vec<(String, Interval)>> = HashMap::new();

    for (line, row) in rows {
        let interval = Interval::new(row.left, row.right)
            .and_then(|iv| scale.check(&iv).map(|_| iv))
            .map_err(|e| e.at_row(origin, line))?;
        let a = index_of(&mut alternatives, row.alternative);
        let c = index_of(&mut criteria, row.criterion);
        let cell = groups.entry((a, c)).or_default();
        if cell.iter().any(|(s, _)| *s == row.source) {
            return Err(Error::DuplicateSource {
                alternative: alternatives[a].clone(),
                criterion: criteria[c].clone(),
                source_label: row.source,
            }
            .at_row(origin, line));
        }
        cell.push((row.source, interval));
    }

    let mut grid = Vec::with_capacity(alternatives.len());
    for (a, alt) in alternatives.iter().enumerate() {
        let mut row = Vec::with_capacity(criteria.len());
        for (c, crit) in criteria.iter().enumerate() {
            let mut sources = groups.remove(&(a, c)).ok_or_else(|| Error::MissingCell {
                alternative: alt.clone(),
                criterion: crit.clone(),
            })?;
            sources.sort_by(|x, y| x.0.cmp(&y.0));
            let intervals = sources.into_iter().map(|(_, iv)| iv).collect();
            row.push(IntervalSet::new(alt.clone(), intervals)?);
        }
        grid.push(row);
    }
    MultiCriteriaDataset::from_grid(alternatives, criteria, grid, scale)
}

fn index_of(labels: &mut Vec<String>, label: String) -> usize {
    match labels.iter().position(|l| *l == label) {
        Some(i) => i,
        None => {
            labels.push(label);
            labels.len() - 1
        }
    }
}
