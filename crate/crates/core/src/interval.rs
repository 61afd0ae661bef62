//! Crisp intervals, interval sets and the measurement scale they live on.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A closed interval `[left, right]`. Point intervals (`left == right`) are legal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    left: f64,
    right: f64,
}

impl Interval {
    pub fn new(left: f64, right: f64) -> Result<Self> {
        if !left.is_finite() || !right.is_finite() {
            return Err(Error::NonFinite);
        }
        if left > right {
            return Err(Error::InvertedBounds { left, right });
        }
        Ok(Interval { left, right })
    }

    pub fn point(value: f64) -> Result<Self> {
        Interval::new(value, value)
    }

    pub fn left(&self) -> f64 {
        self.left
    }

    pub fn right(&self) -> f64 {
        self.right
    }

    pub fn midpoint(&self) -> f64 {
        (self.left + self.right) / 2.0
    }

    pub fn is_point(&self) -> bool {
        self.left == self.right
    }

    pub fn contains(&self, x: f64) -> bool {
        self.left <= x && x <= self.right
    }

    pub fn shifted(&self, delta: f64) -> Result<Self> {
        Interval::new(self.left + delta, self.right + delta)
    }
}

/// Parses `L:R`, `[L,R]` or a bare number `V` (meaning `[V,V]`).
pub fn parse_interval(text: &str) -> Result<Interval> {
    let malformed = || Error::MalformedInterval(text.to_string());
    let num = |s: &str| -> Result<f64> {
        let s = s.trim();
        // Rust's float parser also accepts "inf"/"nan"; only decimal literals are allowed here.
        if s.is_empty()
            || !s
                .bytes()
                .all(|b| b.is_ascii_digit() || matches!(b, b'.' | b'-' | b'+' | b'e' | b'E'))
        {
            return Err(malformed());
        }
        s.parse::<f64>().map_err(|_| malformed())
    };

    let t = text.trim();
    let (l, r) = if let Some(inner) = t.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(malformed)?;
        let (l, r) = inner.split_once(',').ok_or_else(malformed)?;
        (num(l)?, num(r)?)
    } else if let Some((l, r)) = t.split_once(':') {
        (num(l)?, num(r)?)
    } else {
        let v = num(t)?;
        (v, v)
    };
    Interval::new(l, r)
}

impl FromStr for Interval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_interval(s)
    }
}

/// Formats as `L:R`; `{}` on f64 is the shortest representation that round-trips.
impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.left, self.right)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScaleConfig {
    min: f64,
    max: f64,
}

impl ScaleConfig {
    pub fn new(min: f64, max: f64) -> Result<Self> {
        if !min.is_finite() || !max.is_finite() || min >= max {
            return Err(Error::InvalidScale { min, max });
        }
        Ok(ScaleConfig { min, max })
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    pub fn range(&self) -> f64 {
        self.max - self.min
    }

    pub fn check(&self, interval: &Interval) -> Result<()> {
        if interval.left < self.min || interval.right > self.max {
            return Err(Error::OutOfScale {
                left: interval.left,
                right: interval.right,
                min: self.min,
                max: self.max,
            });
        }
        Ok(())
    }
}

/// A labelled multiset of intervals, one per source.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalSet {
    label: String,
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn new(label: impl Into<String>, intervals: Vec<Interval>) -> Result<Self> {
        let label = label.into();
        if intervals.is_empty() {
            return Err(Error::ZeroSources(label));
        }
        Ok(IntervalSet { label, intervals })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn validate(&self, scale: &ScaleConfig) -> Result<()> {
        self.intervals.iter().try_for_each(|iv| scale.check(iv))
    }

    /// Number of intervals containing `x`.
    pub fn count_at(&self, x: f64) -> usize {
        self.intervals.iter().filter(|iv| iv.contains(x)).count()
    }

    /// Sorted, deduplicated interval bounds.
    pub fn endpoints(&self) -> Vec<f64> {
        let mut xs: Vec<f64> = self
            .intervals
            .iter()
            .flat_map(|iv| [iv.left, iv.right])
            .collect();
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        xs
    }

    pub fn shifted(&self, delta: f64) -> Result<Self> {
        let intervals = self
            .intervals
            .iter()
            .map(|iv| iv.shifted(delta))
            .collect::<Result<Vec<_>>>()?;
        IntervalSet::new(self.label.clone(), intervals)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ideal {
    Best,
    Worst,
}

/// `n` sources all answering the scale maximum (best) or minimum (worst).
pub fn ideal_interval_set(scale: &ScaleConfig, n: usize, which: Ideal) -> Result<IntervalSet> {
    let (label, value) = match which {
        Ideal::Best => ("ideal-best", scale.max),
        Ideal::Worst => ("ideal-worst", scale.min),
    };
    if n == 0 {
        return Err(Error::ZeroSources(label.to_string()));
    }
    IntervalSet::new(label, vec![Interval::point(value)?; n])
}

/// Mean of interval midpoints; the conventional "collapse to a number" baseline.
pub fn midpoint_mean(set: &IntervalSet) -> f64 {
    let sum: f64 = set.intervals.iter().map(Interval::midpoint).sum();
    sum / set.len() as f64
}
