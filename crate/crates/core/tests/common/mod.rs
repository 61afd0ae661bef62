//! Independent oracles and random fixtures shared by the integration tests.
//!
//! Nothing here calls into the library's construction, attribute or
//! similarity code: every quantity is recomputed from raw interval counts.

#![allow(dead_code)]

use iaa_core::{Interval, IntervalSet, ScaleConfig};
use rand::rngs::StdRng;
use rand::RngExt;

pub const WEIGHTS: [f64; 6] = [0.320726, -0.509757, 0.100985, -0.461649, 0.444451, -0.465218];

/// Raw `(left, right)` pairs of an interval set.
pub fn raw(set: &IntervalSet) -> Vec<(f64, f64)> {
    set.intervals().iter().map(|i| (i.left(), i.right())).collect()
}

pub fn count(raw: &[(f64, f64)], x: f64) -> usize {
    raw.iter().filter(|&&(l, r)| l <= x && x <= r).count()
}

pub fn membership(raw: &[(f64, f64)], x: f64) -> f64 {
    count(raw, x) as f64 / raw.len() as f64
}

/// Piecewise-constant profile sampled on the elementary cells between
/// consecutive endpoints: counts at every endpoint and inside every gap.
#[derive(Debug, Clone)]
pub struct Profile {
    pub n: usize,
    pub endpoints: Vec<f64>,
    pub at_point: Vec<usize>,
    /// `in_gap[k]` is the count strictly between `endpoints[k]` and `endpoints[k + 1]`.
    pub in_gap: Vec<usize>,
}

impl Profile {
    pub fn of(raw: &[(f64, f64)]) -> Profile {
        let mut endpoints: Vec<f64> = raw.iter().flat_map(|&(l, r)| [l, r]).collect();
        endpoints.sort_by(|a, b| a.partial_cmp(b).unwrap());
        endpoints.dedup();
        let at_point = endpoints.iter().map(|&x| count(raw, x)).collect();
        let in_gap = endpoints
            .windows(2)
            .map(|w| raw.iter().filter(|&&(l, r)| l <= w[0] && w[1] <= r).count())
            .collect();
        Profile { n: raw.len(), endpoints, at_point, in_gap }
    }

    fn gap(&self, k: isize) -> usize {
        if k < 0 {
            0
        } else {
            self.in_gap.get(k as usize).copied().unwrap_or(0)
        }
    }

    fn is_spike(&self, k: usize) -> bool {
        self.at_point[k] > self.gap(k as isize - 1).max(self.gap(k as isize))
    }

    /// Canonical `(left, right, height)` regions: maximal runs of equal gap
    /// counts not interrupted by a spike, plus the spikes.
    pub fn regions(&self) -> Vec<(f64, f64, f64)> {
        let h = |c: usize| c as f64 / self.n as f64;
        let mut out = Vec::new();
        let mut k = 0;
        while k < self.in_gap.len() {
            let c = self.in_gap[k];
            if c == 0 {
                k += 1;
                continue;
            }
            let start = k;
            while k + 1 < self.in_gap.len() && self.in_gap[k + 1] == c && !self.is_spike(k + 1) {
                k += 1;
            }
            out.push((self.endpoints[start], self.endpoints[k + 1], h(c)));
            k += 1;
        }
        for (k, &x) in self.endpoints.iter().enumerate() {
            if self.is_spike(k) {
                out.push((x, x, h(self.at_point[k])));
            }
        }
        out.sort_by(|a, b| (a.0, a.1).partial_cmp(&(b.0, b.1)).unwrap());
        out
    }

    pub fn area(&self) -> f64 {
        self.in_gap
            .iter()
            .zip(self.endpoints.windows(2))
            .map(|(&c, w)| c as f64 / self.n as f64 * (w[1] - w[0]))
            .sum()
    }

    pub fn height(&self) -> f64 {
        *self.at_point.iter().max().unwrap() as f64 / self.n as f64
    }

    pub fn support(&self) -> (f64, f64) {
        let first = self.at_point.iter().position(|&c| c > 0).unwrap();
        let last = self.at_point.iter().rposition(|&c| c > 0).unwrap();
        (self.endpoints[first], self.endpoints[last])
    }

    pub fn centroid(&self) -> (f64, f64) {
        let regions = self.regions();
        let num: f64 = regions.iter().map(|r| r.2 * (r.0 + r.1) / 2.0).sum();
        let den: f64 = regions.iter().map(|r| r.2).sum();
        let cy = regions.iter().map(|r| r.2 / 2.0).sum::<f64>() / regions.len() as f64;
        (num / den, cy)
    }

    /// Length of the outline traced left to right over the elementary cells.
    pub fn perimeter(&self) -> f64 {
        let h = |c: usize| c as f64 / self.n as f64;
        let mut total = 0.0;
        for (k, w) in self.endpoints.windows(2).enumerate() {
            if self.in_gap[k] > 0 {
                // baseline below and top above the cell
                total += 2.0 * (w[1] - w[0]);
            }
        }
        for k in 0..self.endpoints.len() {
            let before = h(self.gap(k as isize - 1));
            let after = h(self.gap(k as isize));
            total += if self.is_spike(k) {
                let s = h(self.at_point[k]);
                (s - before) + (s - after)
            } else {
                (after - before).abs()
            };
        }
        total
    }

    pub fn quartiles(&self) -> [f64; 5] {
        let (lo, hi) = self.support();
        let total = self.area();
        let mut q = [lo, lo, lo, lo, hi];
        if total > 1e-12 {
            for (i, frac) in [0.25, 0.5, 0.75].iter().enumerate() {
                let target = frac * total;
                let mut cum = 0.0;
                for (k, w) in self.endpoints.windows(2).enumerate() {
                    let h = self.in_gap[k] as f64 / self.n as f64;
                    let a = h * (w[1] - w[0]);
                    if a > 0.0 && cum + a >= target {
                        q[i + 1] = (w[0] + (target - cum) / h).min(w[1]);
                        break;
                    }
                    cum += a;
                }
            }
        } else {
            let spikes: Vec<(f64, f64)> = self.regions().iter().map(|r| (r.0, r.2)).collect();
            let mass: f64 = spikes.iter().map(|s| s.1).sum();
            for (i, frac) in [0.25, 0.5, 0.75].iter().enumerate() {
                let mut cum = 0.0;
                for &(x, h) in &spikes {
                    cum += h;
                    if cum >= frac * mass {
                        q[i + 1] = x;
                        break;
                    }
                }
            }
        }
        q
    }

    pub fn agreement_ratio(&self) -> f64 {
        let (lo, hi) = self.support();
        if hi - lo <= 1e-12 {
            self.height()
        } else {
            self.area() / (hi - lo)
        }
    }
}

pub fn jaccard(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let mut xs: Vec<f64> = a.iter().chain(b).flat_map(|&(l, r)| [l, r]).collect();
    xs.sort_by(|p, q| p.partial_cmp(q).unwrap());
    xs.dedup();
    let (mut num, mut den) = (0.0, 0.0);
    for x in xs {
        let (ma, mb) = (membership(a, x), membership(b, x));
        num += ma.min(mb);
        den += ma.max(mb);
    }
    num / den
}

fn rel(x: f64, y: f64) -> f64 {
    if x.max(y) == 0.0 {
        0.0
    } else {
        (x - y).abs() / x.max(y)
    }
}

pub fn features(a: &[(f64, f64)], b: &[(f64, f64)], range: f64) -> [f64; 6] {
    let (pa, pb) = (Profile::of(a), Profile::of(b));
    let (qa, qb) = (pa.quartiles(), pb.quartiles());
    let (ca, cb) = (pa.centroid(), pb.centroid());
    [
        qa.iter().zip(&qb).map(|(x, y)| (x - y).abs()).sum::<f64>() / (5.0 * range),
        ((ca.0 - cb.0).powi(2) + (ca.1 - cb.1).powi(2)).sqrt() / (range * range + 0.25).sqrt(),
        rel(pa.area(), pb.area()),
        (pa.height() - pb.height()).abs(),
        rel(pa.perimeter(), pb.perimeter()),
        (pa.agreement_ratio() - pb.agreement_ratio()).abs(),
    ]
}

pub fn attribute(a: &[(f64, f64)], b: &[(f64, f64)], range: f64) -> f64 {
    1.0 - features(a, b, range).iter().zip(WEIGHTS).map(|(f, w)| w * w * f).sum::<f64>()
}

pub fn combined(a: &[(f64, f64)], b: &[(f64, f64)], range: f64) -> f64 {
    (jaccard(a, b) + attribute(a, b, range)) / 2.0
}

/// `n` copies of the degenerate interval at `x`.
pub fn spike_set(x: f64, n: usize) -> Vec<(f64, f64)> {
    vec![(x, x); n]
}

pub fn to_set(label: &str, raw: &[(f64, f64)]) -> IntervalSet {
    let intervals = raw.iter().map(|&(l, r)| Interval::new(l, r).unwrap()).collect();
    IntervalSet::new(label, intervals).unwrap()
}

/// Random interval set on `scale`. Half of the draws snap bounds to a
/// half-unit grid so coincident endpoints, spikes and ties are common.
pub fn random_raw(rng: &mut StdRng, scale: &ScaleConfig, max_n: usize) -> Vec<(f64, f64)> {
    let n = rng.random_range(1..=max_n);
    let snap = rng.random_bool(0.5);
    (0..n)
        .map(|_| {
            let mut draw = || {
                let x = rng.random_range(scale.min()..=scale.max());
                if snap {
                    ((x * 2.0).round() / 2.0).clamp(scale.min(), scale.max())
                } else {
                    x
                }
            };
            let (a, b) = (draw(), draw());
            if rng.random_bool(0.1) {
                (a, a)
            } else {
                (a.min(b), a.max(b))
            }
        })
        .collect()
}
