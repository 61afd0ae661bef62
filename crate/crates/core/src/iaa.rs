//! Interval Agreement Approach: the membership of `x` is the fraction of source
//! intervals that contain it. The resulting step function is stored as an
//! MC-list, an ordered list of constant-height regions.

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalSet, ScaleConfig};

/// Direct count: fraction of intervals in `set` containing `x`.
pub fn membership_at(set: &IntervalSet, x: f64) -> f64 {
    degree(set.count_at(x), set.len())
}

fn degree(count: usize, n: usize) -> f64 {
    count as f64 / n as f64
}

/// A constant-membership region `([left, right], height)`. A region with
/// `left == right` is a line (a membership spike).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    pub left: f64,
    pub right: f64,
    pub height: f64,
}

impl Region {
    pub fn new(left: f64, right: f64, height: f64) -> Self {
        Region {
            left,
            right,
            height,
        }
    }

    pub fn is_line(&self) -> bool {
        self.left == self.right
    }

    pub fn width(&self) -> f64 {
        self.right - self.left
    }

    pub fn contains(&self, x: f64) -> bool {
        self.left <= x && x <= self.right
    }
}

impl Serialize for Region {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.left, self.right, self.height].serialize(s)
    }
}

/// Piecewise-constant Type-1 fuzzy number built from interval-valued data.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyNumber {
    label: String,
    scale: ScaleConfig,
    regions: Vec<Region>,
    endpoints: Vec<f64>,
    /// Empty when the number was given directly as an MC-list.
    sources: Vec<Interval>,
}

impl FuzzyNumber {
    /// Builds the canonical MC-list of `set`.
    pub fn construct(set: &IntervalSet, scale: ScaleConfig) -> Result<Self> {
        set.validate(&scale)?;
        let regions = decompose(set);
        Ok(FuzzyNumber {
            label: set.label().to_string(),
            scale,
            regions,
            endpoints: set.endpoints(),
            sources: set.intervals().to_vec(),
        })
    }

    /// Wraps an explicit MC-list. Regions are canonicalized; membership then
    /// comes from the max-height rule since no source intervals are known.
    pub fn from_regions(
        label: impl Into<String>,
        regions: Vec<Region>,
        scale: ScaleConfig,
    ) -> Result<Self> {
        for r in &regions {
            if !(r.left.is_finite() && r.right.is_finite() && r.height.is_finite()) {
                return Err(Error::NonFinite);
            }
            if r.left > r.right {
                return Err(Error::InvertedBounds {
                    left: r.left,
                    right: r.right,
                });
            }
            if r.height < 0.0 || r.height > 1.0 {
                return Err(Error::InvalidArgument(format!(
                    "region height {} outside [0, 1]",
                    r.height
                )));
            }
            scale.check(&Interval::new(r.left, r.right)?)?;
        }
        let regions = canonicalize(regions)?;
        if regions.is_empty() {
            return Err(Error::InvalidArgument("MC-list has no positive region".into()));
        }
        let mut endpoints: Vec<f64> = regions.iter().flat_map(|r| [r.left, r.right]).collect();
        endpoints.sort_by(f64::total_cmp);
        endpoints.dedup();
        Ok(FuzzyNumber {
            label: label.into(),
            scale,
            regions,
            endpoints,
            sources: Vec::new(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn scale(&self) -> ScaleConfig {
        self.scale
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    /// Sorted distinct source interval bounds (region bounds for MC-only numbers).
    pub fn endpoints(&self) -> &[f64] {
        &self.endpoints
    }

    pub fn sources(&self) -> &[Interval] {
        &self.sources
    }

    /// Number of source intervals; 0 for numbers given as an MC-list.
    pub fn n(&self) -> usize {
        self.sources.len()
    }

    /// Membership by direct counting over the sources, or by the max-height
    /// rule over regions when there are none.
    pub fn membership(&self, x: f64) -> f64 {
        if self.sources.is_empty() {
            self.region_membership(x)
        } else {
            let count = self.sources.iter().filter(|iv| iv.contains(x)).count();
            degree(count, self.sources.len())
        }
    }

    /// Max height over regions containing `x`, 0 outside the support.
    pub fn region_membership(&self, x: f64) -> f64 {
        self.regions
            .iter()
            .filter(|r| r.contains(x))
            .map(|r| r.height)
            .fold(0.0, f64::max)
    }

    pub fn support_min(&self) -> f64 {
        self.regions[0].left
    }

    pub fn support_max(&self) -> f64 {
        self.regions
            .iter()
            .map(|r| r.right)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Compact JSON: `{"label", "n", "regions": [[l, r, h], ...], "endpoints"}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("fuzzy numbers always serialize")
    }

    pub(crate) fn same_scale(&self, other: &FuzzyNumber) -> Result<ScaleConfig> {
        if self.scale != other.scale {
            return Err(Error::ScaleMismatch);
        }
        Ok(self.scale)
    }
}

impl Serialize for FuzzyNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FuzzyNumber", 4)?;
        st.serialize_field("label", &self.label)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("regions", &self.regions)?;
        st.serialize_field("endpoints", &self.endpoints)?;
        st.end()
    }
}

/// Canonical decomposition from counts. Segment heights come from the count
/// over the open span between consecutive endpoints; a line region is kept
/// only where the closed-interval count at an endpoint exceeds both sides.
fn decompose(set: &IntervalSet) -> Vec<Region> {
    let xs = set.endpoints();
    let n = set.len();
    let ivs = set.intervals();

    // An interval covers the open span (a, b) between consecutive endpoints
    // iff it starts at or before a and ends at or after b.
    let segment: Vec<usize> = xs
        .windows(2)
        .map(|w| ivs.iter().filter(|iv| iv.left() <= w[0] && iv.right() >= w[1]).count())
        .collect();

    let mut regions = Vec::new();
    for (k, &x) in xs.iter().enumerate() {
        let point = set.count_at(x);
        let before = if k > 0 { segment[k - 1] } else { 0 };
        let after = segment.get(k).copied().unwrap_or(0);
        if point > before.max(after) {
            regions.push(Region::new(x, x, degree(point, n)));
        }
        if after > 0 {
            regions.push(Region::new(x, xs[k + 1], degree(after, n)));
        }
    }
    // Adjacent equal segments cannot occur here: every endpoint is the bound
    // of some interval, which changes either a side count or the point count.
    regions
}

/// Normalizes an MC-list: drops zero heights, splits segments at interior
/// spikes, removes lines not above their neighbours, and merges adjacent
/// equal-height segments. Canonical lists are fixed points.
pub fn canonicalize(regions: Vec<Region>) -> Result<Vec<Region>> {
    let mut segments: Vec<Region> = regions
        .iter()
        .filter(|r| r.height > 0.0 && !r.is_line())
        .copied()
        .collect();
    let lines: Vec<Region> = regions
        .iter()
        .filter(|r| r.height > 0.0 && r.is_line())
        .copied()
        .collect();
    segments.sort_by(|a, b| a.left.total_cmp(&b.left));
    if segments.windows(2).any(|w| w[0].right > w[1].left) {
        return Err(Error::InvalidArgument("MC-list segments overlap".into()));
    }

    // Split segments at interior line positions.
    let mut split = Vec::with_capacity(segments.len());
    for seg in segments {
        let mut cuts: Vec<f64> = lines
            .iter()
            .map(|l| l.left)
            .filter(|&x| seg.left < x && x < seg.right && line_height(&lines, x) > seg.height)
            .collect();
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        let mut start = seg.left;
        for x in cuts {
            split.push(Region::new(start, x, seg.height));
            start = x;
        }
        split.push(Region::new(start, seg.right, seg.height));
    }

    let seg_height_at = |x: f64, side_left: bool| -> f64 {
        split
            .iter()
            .find(|s| if side_left { s.right == x } else { s.left == x })
            .map_or(0.0, |s| s.height)
    };

    let mut positions: Vec<f64> = lines.iter().map(|l| l.left).collect();
    positions.sort_by(f64::total_cmp);
    positions.dedup();
    let kept_lines: Vec<Region> = positions
        .into_iter()
        .filter_map(|x| {
            let p = line_height(&lines, x);
            let covered = split
                .iter()
                .filter(|s| s.left < x && x < s.right)
                .map(|s| s.height)
                .fold(0.0, f64::max);
            let around = seg_height_at(x, true).max(seg_height_at(x, false)).max(covered);
            (p > around).then(|| Region::new(x, x, p))
        })
        .collect();

    let mut merged: Vec<Region> = Vec::with_capacity(split.len());
    for seg in split {
        if let Some(last) = merged.last_mut() {
            if last.right == seg.left
                && last.height == seg.height
                && !kept_lines.iter().any(|l| l.left == seg.left)
            {
                last.right = seg.right;
                continue;
            }
        }
        merged.push(seg);
    }

    let mut out: Vec<Region> = merged.into_iter().chain(kept_lines).collect();
    // Lines sort before a segment starting at the same position.
    out.sort_by(|a, b| a.left.total_cmp(&b.left).then(a.right.total_cmp(&b.right)));
    Ok(out)
}

fn line_height(lines: &[Region], x: f64) -> f64 {
    lines
        .iter()
        .filter(|l| l.left == x)
        .map(|l| l.height)
        .fold(0.0, f64::max)
}

/// Sorted union of both numbers' endpoint sets.
pub fn evaluation_points(a: &FuzzyNumber, b: &FuzzyNumber) -> Vec<f64> {
    let mut xs: Vec<f64> = a.endpoints.iter().chain(&b.endpoints).copied().collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    xs
}
