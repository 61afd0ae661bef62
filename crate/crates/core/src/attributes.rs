//! Geometric attributes of an MC-list and the six-feature comparison vector.

use serde::Serialize;

use crate::error::Result;
use crate::iaa::{FuzzyNumber, Region};
use crate::interval::ScaleConfig;

const ZERO_AREA: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AttributeVector {
    pub quartiles: [f64; 5],
    pub centroid_x: f64,
    pub centroid_y: f64,
    pub area: f64,
    pub height: f64,
    pub perimeter: f64,
    pub agreement_ratio: f64,
}

impl AttributeVector {
    pub fn of(fz: &FuzzyNumber) -> Self {
        let (centroid_x, centroid_y) = centroid(fz);
        AttributeVector {
            quartiles: quartile_points(fz),
            centroid_x,
            centroid_y,
            area: area(fz),
            height: height(fz),
            perimeter: perimeter(fz),
            agreement_ratio: agreement_ratio(fz),
        }
    }
}

/// Feature differences in fixed order: quartile, centroid, area, height,
/// perimeter, agreement ratio.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FeatureVector(pub [f64; 6]);

/// Height-weighted average of region midpoints, and the mean half-height over
/// non-zero regions. Lines count like any other region.
pub fn centroid(fz: &FuzzyNumber) -> (f64, f64) {
    let regions = fz.regions();
    let mut weighted = 0.0;
    let mut heights = 0.0;
    let mut half_heights = 0.0;
    let mut nonzero = 0usize;
    for r in regions {
        weighted += r.height * (r.left + r.right);
        heights += r.height;
        if r.height > 0.0 {
            half_heights += r.height / 2.0;
            nonzero += 1;
        }
    }
    (weighted / (2.0 * heights), half_heights / nonzero as f64)
}

pub fn area(fz: &FuzzyNumber) -> f64 {
    fz.regions().iter().map(|r| r.height * r.width()).sum()
}

pub fn height(fz: &FuzzyNumber) -> f64 {
    fz.regions().iter().map(|r| r.height).fold(0.0, f64::max)
}

/// Length of the outline of the membership profile, baseline included.
///
/// Each connected piece of the support contributes its width (baseline), the
/// widths of its segment tops, and every vertical move: from 0 up at the left
/// edge, between neighbouring heights, up-and-down at spikes, down to 0 at the
/// right edge. An isolated line contributes `2 * height`.
pub fn perimeter(fz: &FuzzyNumber) -> f64 {
    components(fz.regions()).iter().map(|c| component_perimeter(c)).sum()
}

/// Splits a sorted MC-list into touching runs.
fn components(regions: &[Region]) -> Vec<&[Region]> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut reach = f64::NEG_INFINITY;
    for (i, r) in regions.iter().enumerate() {
        if i > start && r.left > reach {
            out.push(&regions[start..i]);
            start = i;
        }
        if i == start {
            reach = r.right;
        } else {
            reach = reach.max(r.right);
        }
    }
    if !regions.is_empty() {
        out.push(&regions[start..]);
    }
    out
}

fn component_perimeter(regions: &[Region]) -> f64 {
    let left = regions[0].left;
    let right = regions.iter().map(|r| r.right).fold(f64::NEG_INFINITY, f64::max);

    let mut boundaries: Vec<f64> = regions.iter().flat_map(|r| [r.left, r.right]).collect();
    boundaries.sort_by(f64::total_cmp);
    boundaries.dedup();

    let segment_ending = |x: f64| {
        regions
            .iter()
            .find(|r| !r.is_line() && r.right == x)
            .map_or(0.0, |r| r.height)
    };
    let segment_starting = |x: f64| {
        regions
            .iter()
            .find(|r| !r.is_line() && r.left == x)
            .map_or(0.0, |r| r.height)
    };

    let tops: f64 = regions.iter().filter(|r| !r.is_line()).map(Region::width).sum();
    let verticals: f64 = boundaries
        .iter()
        .map(|&x| {
            let before = segment_ending(x);
            let after = segment_starting(x);
            match regions.iter().find(|r| r.is_line() && r.left == x) {
                Some(spike) => (spike.height - before).abs() + (spike.height - after).abs(),
                None => (after - before).abs(),
            }
        })
        .sum();
    (right - left) + tops + verticals
}

/// Points at cumulative area fractions 0, 1/4, 1/2, 3/4, 1.
///
/// Lines carry no area. When the total area vanishes (spikes only), the
/// cumulative distribution of line heights over their positions is used
/// instead. The outer points are pinned to the support bounds.
pub fn quartile_points(fz: &FuzzyNumber) -> [f64; 5] {
    let regions = fz.regions();
    let lo = fz.support_min();
    let hi = fz.support_max();
    let total = area(fz);
    let mut q = [lo, lo, lo, lo, hi];

    if total > ZERO_AREA {
        for (slot, frac) in [0.25, 0.5, 0.75].into_iter().enumerate() {
            let target = frac * total;
            let mut cum = 0.0;
            for r in regions.iter().filter(|r| !r.is_line()) {
                let a = r.height * r.width();
                if cum + a >= target {
                    q[slot + 1] = (r.left + (target - cum) / r.height).min(r.right);
                    break;
                }
                cum += a;
            }
        }
    } else {
        let mass: f64 = regions.iter().map(|r| r.height).sum();
        for (slot, frac) in [0.25, 0.5, 0.75].into_iter().enumerate() {
            let target = frac * mass;
            let mut cum = 0.0;
            for r in regions {
                cum += r.height;
                if cum >= target {
                    q[slot + 1] = r.left;
                    break;
                }
            }
        }
    }
    q
}

/// Mean membership over the support hull; the height for a degenerate hull.
pub fn agreement_ratio(fz: &FuzzyNumber) -> f64 {
    let hull = fz.support_max() - fz.support_min();
    if hull <= ZERO_AREA {
        height(fz)
    } else {
        area(fz) / hull
    }
}

/// `|x - y| / max(x, y)` with `0 / 0 = 0`.
fn relative_difference(x: f64, y: f64) -> f64 {
    let m = x.max(y);
    if m == 0.0 {
        0.0
    } else {
        (x - y).abs() / m
    }
}

pub fn feature_vector(a: &FuzzyNumber, b: &FuzzyNumber) -> Result<FeatureVector> {
    let scale = a.same_scale(b)?;
    Ok(features_of(&AttributeVector::of(a), &AttributeVector::of(b), &scale))
}

pub fn features_of(a: &AttributeVector, b: &AttributeVector, scale: &ScaleConfig) -> FeatureVector {
    let range = scale.range();
    let quartile = a
        .quartiles
        .iter()
        .zip(&b.quartiles)
        .map(|(x, y)| (x - y).abs())
        .sum::<f64>()
        / (5.0 * range);
    let centroid = (a.centroid_x - b.centroid_x).hypot(a.centroid_y - b.centroid_y)
        / (range * range + 0.25).sqrt();
    FeatureVector([
        quartile,
        centroid,
        relative_difference(a.area, b.area),
        (a.height - b.height).abs(),
        relative_difference(a.perimeter, b.perimeter),
        (a.agreement_ratio - b.agreement_ratio).abs(),
    ])
}
