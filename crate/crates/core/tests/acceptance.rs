//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so every line is printed on a normal
//! `cargo test`. Exits non-zero when any criterion fails.

mod common;

use std::cmp::Ordering;
use std::process::{Command, ExitCode, Output};

use iaa_core::attributes::{centroid, feature_vector};
use iaa_core::ranking::{
    ideal_ratio, rank_baseline_mean, rank_by_ideal_ratio, rank_universal, universal_compare, DEFAULT_EPSILON,
};
use iaa_core::similarity::{jaccard, similarity, DEFAULT_WEIGHTS};
use iaa_core::topsis::{select_ideals, separations, topsis_rank, TopsisOptions};
use iaa_core::{
    fixtures, ideal_interval_set, membership_at, midpoint_mean, DecisionMatrix, Direction, Error, FuzzyNumber, Ideal,
    IntervalSet, Measure, MultiCriteriaDataset, ScaleConfig, SimilarityWeights,
};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

const FILMS: [&str; 10] = [
    "Film A", "Film B", "Film C", "Film D", "Film E", "Film F", "Film G", "Film H", "Film I", "Film J",
];
const SPIKE_FILMS: [&str; 3] = ["Film A", "Film I", "Film J"];

/// Average column of the interval-to-mean table.
const AVERAGES: [f64; 10] = [1.0, 6.1, 3.3, 6.5, 3.74, 8.62, 9.4, 6.01, 8.0, 10.0];

/// Similarity-to-ideal table: Jaccard best, worst; attribute best, worst.
const SIMILARITY_TABLE: [(f64, f64, f64, f64); 10] = [
    (0.0000, 1.0000, 0.6377, 1.0000),
    (0.0833, 0.0000, 0.5173, 0.4830),
    (0.0000, 0.1250, 0.3740, 0.5527),
    (0.1176, 0.0000, 0.5222, 0.3993),
    (0.0000, 0.0588, 0.4215, 0.5900),
    (0.1333, 0.0000, 0.6546, 0.3867),
    (0.2500, 0.0000, 0.6865, 0.3747),
    (0.0667, 0.0323, 0.4835, 0.4444),
    (0.0000, 0.0000, 0.9195, 0.7182),
    (1.0000, 0.0000, 1.0000, 0.6377),
];

const COMBINED_ORDER: &str = "JGFDIBHECA";
const UNIVERSAL_ORDER: &str = "JGFIDHBECA";
/// Final-ranking table, averaging column, as ranks of films A..J.
const BASELINE_RANKS: [usize; 10] = [10, 6, 9, 5, 8, 3, 2, 7, 4, 1];

const README: &str = include_str!("../../../README.md");

type Check = fn() -> (bool, String);

struct Report {
    failed: usize,
}

impl Report {
    fn line(&mut self, id: &str, ok: bool, detail: String) {
        if !ok {
            self.failed += 1;
        }
        println!("criterion {id}: {} - {detail}", if ok { "PASS" } else { "FAIL" });
    }
}

fn main() -> ExitCode {
    let mut report = Report { failed: 0 };
    let criteria: [(&str, Check); 8] = [
        ("1", criterion_1),
        ("2", criterion_2),
        ("3", criterion_3),
        ("4", criterion_4),
        ("5", criterion_5),
        ("6", criterion_6),
        ("7", criterion_7),
        ("8", criterion_8),
    ];
    for (id, check) in criteria {
        let (ok, detail) = check();
        report.line(id, ok, detail);
    }
    println!("acceptance: {} of 8 criteria passed", 8 - report.failed);
    if report.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn scale() -> ScaleConfig {
    fixtures::film_scale()
}

fn fuzzy(label: &str) -> FuzzyNumber {
    FuzzyNumber::construct(&fixtures::film(label), scale()).unwrap()
}

fn films() -> Vec<FuzzyNumber> {
    FILMS.iter().map(|l| fuzzy(l)).collect()
}

fn ideal(which: Ideal) -> FuzzyNumber {
    FuzzyNumber::construct(&ideal_interval_set(&scale(), 5, which).unwrap(), scale()).unwrap()
}

fn letters(labels: &[&str]) -> String {
    labels.iter().map(|l| l.trim_start_matches("Film ")).collect()
}

fn criterion_1() -> (bool, String) {
    let worst = FILMS
        .iter()
        .zip(AVERAGES)
        .map(|(l, avg)| (midpoint_mean(&fixtures::film(l)) - avg).abs())
        .fold(0.0, f64::max);
    let sets: Vec<IntervalSet> = FILMS.iter().map(|l| fixtures::film(l)).collect();
    let refs: Vec<&IntervalSet> = sets.iter().collect();
    let ranking = rank_baseline_mean(&refs).unwrap();
    let ranks: Vec<usize> = FILMS.iter().map(|l| ranking.rank_of(l).unwrap()).collect();
    let ok = worst <= 1e-12 && ranks == BASELINE_RANKS;
    (
        ok,
        format!(
            "max |midpoint mean - average| = {worst:.1e} (tol 1e-12); baseline order {}",
            letters(&ranking.labels())
        ),
    )
}

fn criterion_2() -> (bool, String) {
    let (best, worst) = (ideal(Ideal::Best), ideal(Ideal::Worst));
    let mut max_dev: f64 = 0.0;
    for (label, row) in FILMS.iter().zip(SIMILARITY_TABLE) {
        let fz = fuzzy(label);
        let jb = jaccard(&fz, &best).unwrap();
        let jw = jaccard(&fz, &worst).unwrap();
        // cross-check against the counting oracle
        let raw = common::raw(&fixtures::film(label));
        let oracle_b = common::jaccard(&raw, &common::spike_set(10.0, 5));
        let oracle_w = common::jaccard(&raw, &common::spike_set(1.0, 5));
        if jb != oracle_b || jw != oracle_w {
            return (false, format!("{label}: library and oracle Jaccard disagree"));
        }
        max_dev = max_dev.max((jb - row.0).abs()).max((jw - row.1).abs());
    }
    let undef = matches!(
        ideal_ratio(&fuzzy("Film I"), &best, &worst, Measure::Jaccard, &SimilarityWeights::default()),
        Err(Error::DivisionByZero { ref label }) if label == "Film I"
    );
    (
        max_dev <= 5e-5 && undef,
        format!("max Jaccard deviation {max_dev:.2e} over 20 cells (tol 5e-5); Film I jaccard ratio undefined: {undef}"),
    )
}

fn criterion_3() -> (bool, String) {
    let (best, worst) = (ideal(Ideal::Best), ideal(Ideal::Worst));
    let w = SimilarityWeights::default();
    let mut spike_dev: f64 = 0.0;
    let mut beyond = Vec::new();
    for (label, row) in FILMS.iter().zip(SIMILARITY_TABLE) {
        let fz = fuzzy(label);
        let ab = similarity(&fz, &best, Measure::Attribute, &w).unwrap();
        let aw = similarity(&fz, &worst, Measure::Attribute, &w).unwrap();
        let raw = common::raw(&fixtures::film(label));
        let ob = common::attribute(&raw, &common::spike_set(10.0, 5), 9.0);
        let ow = common::attribute(&raw, &common::spike_set(1.0, 5), 9.0);
        if (ab - ob).abs() > 1e-12 || (aw - ow).abs() > 1e-12 {
            return (false, format!("{label}: library and oracle attribute similarity disagree"));
        }
        let (db, dw) = (ab - row.2, aw - row.3);
        if SPIKE_FILMS.contains(label) {
            spike_dev = spike_dev.max(db.abs()).max(dw.abs());
        } else {
            let fb = feature_vector(&fz, &best).unwrap().0;
            let fw = feature_vector(&fz, &worst).unwrap().0;
            println!(
                "  {label}: best {ab:.4} (target {:.4}, {db:+.4}), worst {aw:.4} (target {:.4}, {dw:+.4}); \
                 weighted features to best {}, to worst {}",
                row.2,
                row.3,
                weighted(&fb),
                weighted(&fw)
            );
            if db.abs() > 0.03 || dw.abs() > 0.03 {
                beyond.push(*label);
            }
        }
    }
    let documented = beyond.iter().all(|l| README.contains(&format!("| {l} |")))
        && ["quartile", "perimeter", "agreement ratio"]
            .iter()
            .all(|f| README.to_lowercase().contains(f));
    let ok = spike_dev <= 5e-5 && (beyond.is_empty() || documented);
    (
        ok,
        format!(
            "spike rows max deviation {spike_dev:.2e} (tol 5e-5); non-spike rows beyond +/-0.03: [{}], \
             per-feature deviation documented in README: {documented}",
            beyond.join(", ")
        ),
    )
}

fn weighted(f: &[f64; 6]) -> String {
    let parts: Vec<String> = f.iter().zip(DEFAULT_WEIGHTS).map(|(x, w)| format!("{:.4}", w * w * x)).collect();
    format!("[{}]", parts.join(" "))
}

/// Whether `ours` equals `target` up to one swap of adjacent non-spike films.
fn within_one_transposition(ours: &str, target: &str) -> (bool, String) {
    if ours == target {
        return (true, "identical".into());
    }
    let (a, b): (Vec<char>, Vec<char>) = (ours.chars().collect(), target.chars().collect());
    let diffs: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
    if diffs.len() == 2 && diffs[1] == diffs[0] + 1 && a[diffs[0]] == b[diffs[1]] && a[diffs[1]] == b[diffs[0]] {
        let pair = [a[diffs[0]], a[diffs[1]]];
        let spike = pair.iter().any(|c| SPIKE_FILMS.contains(&format!("Film {c}").as_str()));
        let what = format!("one adjacent transposition {}<->{}", pair[0], pair[1]);
        if spike {
            return (false, format!("{what}, involving a spike film"));
        }
        return (true, what);
    }
    (false, format!("{} positions differ", diffs.len()))
}

fn criterion_4() -> (bool, String) {
    let (best, worst) = (ideal(Ideal::Best), ideal(Ideal::Worst));
    let w = SimilarityWeights::default();
    let ranking = rank_by_ideal_ratio(&films(), &best, &worst, Measure::Combined, &w, DEFAULT_EPSILON).unwrap();
    let score = |l: &str| ranking.entries.iter().find(|e| e.label == l).unwrap().score.unwrap();
    let mut dev: f64 = 0.0;
    for (label, target) in [("Film A", 0.2418), ("Film I", 0.5615), ("Film J", 0.7582)] {
        dev = dev.max((score(label) - target).abs());
        let raw = common::raw(&fixtures::film(label));
        let sb = common::combined(&raw, &common::spike_set(10.0, 5), 9.0);
        let sw = common::combined(&raw, &common::spike_set(1.0, 5), 9.0);
        if (score(label) - sb / (sb + sw)).abs() > 1e-12 {
            return (false, format!("{label}: library and oracle ratio disagree"));
        }
    }
    let order = letters(&ranking.labels());
    let (order_ok, how) = within_one_transposition(&order, COMBINED_ORDER);
    (
        dev <= 5e-4 && order_ok,
        format!(
            "A/I/J max score deviation {dev:.2e} (tol 5e-4); order {order} vs {COMBINED_ORDER}: {how} \
             (B {:.4}, I {:.4})",
            score("Film B"),
            score("Film I")
        ),
    )
}

fn criterion_5() -> (bool, String) {
    let order = letters(&rank_universal(&films(), DEFAULT_EPSILON).unwrap().labels());
    let (bx, _) = centroid(&fuzzy("Film B"));
    let (hx, _) = centroid(&fuzzy("Film H"));
    let oracle_bx = common::Profile::of(&common::raw(&fixtures::film("Film B"))).centroid().0;
    let ok = order == UNIVERSAL_ORDER && (bx - 5.9375).abs() <= 1e-9 && (oracle_bx - 5.9375).abs() <= 1e-9 && hx > bx;
    (
        ok,
        format!("order {order} (target {UNIVERSAL_ORDER}); Film B centroid_x {bx:.10}; Film H centroid_x {hx:.4} > Film B"),
    )
}

fn criterion_6() -> (bool, String) {
    let mut rng = StdRng::seed_from_u64(0x1AA_2024);
    let s = ScaleConfig::new(0.0, 10.0).unwrap();
    let w = SimilarityWeights::default();
    let mut failures = Vec::new();

    // (a) membership oracle equivalence
    for _ in 0..10_000 {
        let raw = common::random_raw(&mut rng, &s, 8);
        let set = common::to_set("r", &raw);
        let fz = FuzzyNumber::construct(&set, s).unwrap();
        let profile = common::Profile::of(&raw);
        let mut probes = profile.endpoints.clone();
        probes.extend(profile.endpoints.windows(2).map(|p| (p[0] + p[1]) / 2.0));
        probes.extend([s.min(), s.max(), rng.random_range(0.0..=10.0)]);
        let mismatch = probes.iter().any(|&x| {
            let m = common::membership(&raw, x);
            fz.membership(x) != m || fz.region_membership(x) != m || membership_at(&set, x) != m
        });
        let regions: Vec<(f64, f64, f64)> = fz.regions().iter().map(|r| (r.left, r.right, r.height)).collect();
        if mismatch || regions != profile.regions() {
            failures.push("a");
            break;
        }
    }

    // (b) symmetry, identity, range
    'pairs: for _ in 0..1_000 {
        let a = FuzzyNumber::construct(&common::to_set("a", &common::random_raw(&mut rng, &s, 6)), s).unwrap();
        let b = FuzzyNumber::construct(&common::to_set("b", &common::random_raw(&mut rng, &s, 6)), s).unwrap();
        for m in [Measure::Jaccard, Measure::Attribute, Measure::Combined] {
            let ab = similarity(&a, &b, m, &w).unwrap();
            let ba = similarity(&b, &a, m, &w).unwrap();
            let aa = similarity(&a, &a, m, &w).unwrap();
            if ab != ba || aa != 1.0 || !(0.0..=1.0).contains(&ab) {
                failures.push("b");
                break 'pairs;
            }
        }
    }

    // (c) unit-norm weights
    let norm: f64 = DEFAULT_WEIGHTS.iter().map(|x| x * x).sum();
    if (norm - 1.0).abs() > 1e-4 || SimilarityWeights::new(DEFAULT_WEIGHTS).is_err() {
        failures.push("c");
    }

    // (d) strict weak order laws
    for _ in 0..10_000 {
        let t: Vec<FuzzyNumber> = (0..3)
            .map(|_| FuzzyNumber::construct(&common::to_set("t", &common::random_raw(&mut rng, &s, 5)), s).unwrap())
            .collect();
        let gt = |i: usize, j: usize| universal_compare(&t[i], &t[j], DEFAULT_EPSILON).unwrap() == Ordering::Greater;
        let eq = |i: usize, j: usize| universal_compare(&t[i], &t[j], DEFAULT_EPSILON).unwrap() == Ordering::Equal;
        let mut ok = (0..3).all(|i| !gt(i, i));
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
            ok &= !(gt(i, j) && gt(j, i));
            ok &= !(gt(i, j) && gt(j, k)) || gt(i, k);
            ok &= !(eq(i, j) && eq(j, k)) || eq(i, k);
            ok &= gt(i, j) == (universal_compare(&t[j], &t[i], DEFAULT_EPSILON).unwrap() == Ordering::Less);
        }
        if !ok {
            failures.push("d");
            break;
        }
    }

    // (e) translation monotonicity: shifting one alternative right never lowers its rank
    'shift: for _ in 0..200 {
        let raws: Vec<Vec<(f64, f64)>> = (0..6).map(|_| common::random_raw(&mut rng, &s, 5)).collect();
        let who = rng.random_range(0..raws.len());
        let room = s.max() - raws[who].iter().map(|p| p.1).fold(f64::MIN, f64::max);
        if room < 0.5 {
            continue;
        }
        let delta = (rng.random_range(0.5..=room) * 2.0).floor() / 2.0;
        let build = |shift: f64| -> Vec<FuzzyNumber> {
            raws.iter()
                .enumerate()
                .map(|(i, r)| {
                    let set = common::to_set(&format!("alt{i}"), r);
                    let set = if i == who { set.shifted(shift).unwrap() } else { set };
                    FuzzyNumber::construct(&set, s).unwrap()
                })
                .collect()
        };
        let label = format!("alt{who}");
        let before = rank_universal(&build(0.0), DEFAULT_EPSILON).unwrap().rank_of(&label).unwrap();
        let after = rank_universal(&build(delta), DEFAULT_EPSILON).unwrap().rank_of(&label).unwrap();
        if after > before {
            failures.push("e");
            break 'shift;
        }
    }

    // (f) ideals attain the extreme ideal-ratio scores
    let film_scale = scale();
    let mut fixtures_checked = 0;
    for trial in 0..101 {
        let mut items: Vec<FuzzyNumber> = if trial == 0 {
            films()
        } else {
            (0..10)
                .map(|i| {
                    let raw = common::random_raw(&mut rng, &film_scale, 5);
                    FuzzyNumber::construct(&common::to_set(&format!("alt{i}"), &raw), film_scale).unwrap()
                })
                .collect()
        };
        let (best, worst) = (ideal(Ideal::Best), ideal(Ideal::Worst));
        items.push(best.clone());
        items.push(worst.clone());
        let scores: Vec<f64> = items
            .iter()
            .map(|fz| ideal_ratio(fz, &best, &worst, Measure::Combined, &w).unwrap())
            .collect();
        let (sb, sw) = (scores[scores.len() - 2], scores[scores.len() - 1]);
        if scores.iter().any(|&x| x > sb + 1e-12 || x < sw - 1e-12) {
            failures.push("f");
            break;
        }
        fixtures_checked += 1;
    }

    failures.dedup();
    (
        failures.is_empty(),
        format!(
            "(a) 10000 sets (b) 1000 pairs (c) sum w^2 = {norm:.6} (d) 10000 triples (e) 200 shifts \
             (f) film + {} random fixtures; failing parts: [{}]",
            fixtures_checked - 1,
            failures.join(", ")
        ),
    )
}

fn topsis_matrix(weights: Vec<f64>) -> DecisionMatrix {
    DecisionMatrix::new(&fixtures::topsis_fixture(), weights, vec![Direction::Benefit; 2]).unwrap()
}

/// Reorders alternatives by `alt_order` and criteria by `crit_order`.
fn permuted(data: &MultiCriteriaDataset, alt_order: &[usize], crit_order: &[usize]) -> MultiCriteriaDataset {
    let cells = alt_order
        .iter()
        .map(|&a| crit_order.iter().map(|&c| data.cell(a, c).clone()).collect())
        .collect();
    MultiCriteriaDataset::from_grid(
        alt_order.iter().map(|&a| data.alternatives()[a].clone()).collect(),
        crit_order.iter().map(|&c| data.criteria()[c].clone()).collect(),
        cells,
        data.scale(),
    )
    .unwrap()
}

fn criterion_7() -> (bool, String) {
    let opts = TopsisOptions::default();
    let mut notes = Vec::new();
    let mut ok = true;

    for measure in [Measure::Combined, Measure::Attribute] {
        let base = topsis_rank(&topsis_matrix(vec![1.0, 1.0]), measure, &opts).unwrap();
        let x = base.entry("X").unwrap();
        ok &= base.entries[0].label == "X" && x.closeness == 1.0 && x.d_plus == 0.0;

        // weight scaling
        for (w0, w1) in [(2.0, 2.0), (7.5, 7.5), (1e-3, 1e-3)] {
            let scaled = topsis_rank(&topsis_matrix(vec![w0, w1]), measure, &opts).unwrap();
            ok &= base.entries.iter().all(|e| (scaled.entry(&e.label).unwrap().closeness - e.closeness).abs() <= 1e-12);
        }
        let uneven = topsis_rank(&topsis_matrix(vec![0.3, 0.7]), measure, &opts).unwrap();
        let uneven_scaled = topsis_rank(&topsis_matrix(vec![3.0, 7.0]), measure, &opts).unwrap();
        ok &= uneven
            .entries
            .iter()
            .all(|e| (uneven_scaled.entry(&e.label).unwrap().closeness - e.closeness).abs() <= 1e-12);

        // permutations of alternatives and criteria
        let data = fixtures::topsis_fixture();
        for alts in [[0, 1, 2], [2, 0, 1], [1, 2, 0], [2, 1, 0]] {
            for crits in [[0, 1], [1, 0]] {
                let p = permuted(&data, &alts, &crits);
                let m = DecisionMatrix::new(&p, vec![1.0, 1.0], vec![Direction::Benefit; 2]).unwrap();
                let r = topsis_rank(&m, measure, &opts).unwrap();
                ok &= base.entries.iter().all(|e| (r.entry(&e.label).unwrap().closeness - e.closeness).abs() <= 1e-12);
            }
        }

        // separations against the oracle
        let matrix = topsis_matrix(vec![1.0, 3.0]);
        let ideals = select_ideals(&matrix, DEFAULT_EPSILON).unwrap();
        let seps = separations(&matrix, &ideals, measure, &SimilarityWeights::default()).unwrap();
        let raw: Vec<Vec<Vec<(f64, f64)>>> = (0..3)
            .map(|a| (0..2).map(|c| common::raw(data.cell(a, c))).collect())
            .collect();
        let oracle_sim = |x: &[(f64, f64)], y: &[(f64, f64)]| match measure {
            Measure::Combined => common::combined(x, y, 10.0),
            _ => common::attribute(x, y, 10.0),
        };
        let wn = [0.25, 0.75];
        let mut max_dev: f64 = 0.0;
        for c in 0..2 {
            // ideal selection by oracle centroid_x (no ties on the fixture)
            let cx: Vec<f64> = (0..3).map(|a| common::Profile::of(&raw[a][c]).centroid().0).collect();
            let pis = (0..3).max_by(|&i, &j| cx[i].total_cmp(&cx[j])).unwrap();
            let nis = (0..3).min_by(|&i, &j| cx[i].total_cmp(&cx[j])).unwrap();
            ok &= ideals[c].pis == pis && ideals[c].nis == nis;
        }
        for (a, sep) in seps.iter().enumerate() {
            let (mut dp, mut dm) = (0.0, 0.0);
            for c in 0..2 {
                let cx: Vec<f64> = (0..3).map(|i| common::Profile::of(&raw[i][c]).centroid().0).collect();
                let pis = (0..3).max_by(|&i, &j| cx[i].total_cmp(&cx[j])).unwrap();
                let nis = (0..3).min_by(|&i, &j| cx[i].total_cmp(&cx[j])).unwrap();
                dp += wn[c] * (1.0 - oracle_sim(&raw[a][c], &raw[pis][c]));
                dm += wn[c] * (1.0 - oracle_sim(&raw[a][c], &raw[nis][c]));
            }
            max_dev = max_dev.max((dp - sep.d_plus).abs()).max((dm - sep.d_minus).abs());
        }
        ok &= max_dev <= 1e-12;
        notes.push(format!("{measure}: CC_X = {}, separation oracle deviation {max_dev:.1e}", x.closeness));
    }
    (ok, format!("{}; weight scaling and 8 permutations within 1e-12", notes.join("; ")))
}

fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iaa")).args(args).output().expect("run iaa")
}

fn criterion_8() -> (bool, String) {
    let films = ["--input", "builtin:films", "--scale-min", "1", "--scale-max", "10"];
    let commands: Vec<Vec<&str>> = vec![
        vec!["build"],
        vec!["attributes"],
        vec!["similarity", "--matrix"],
        vec!["similarity", "--measure", "attribute", "Film B", "Film H"],
        vec!["rank", "--method", "universal"],
        vec!["rank", "--method", "ideal-ratio", "--measure", "combined"],
        vec!["rank", "--method", "ideal-ratio", "--measure", "jaccard"],
        vec!["rank", "--method", "baseline"],
        vec!["topsis"],
        vec!["plotdata"],
    ];
    let mut runs = 0;
    let mut deterministic = true;
    for cmd in &commands {
        for format in ["text", "json", "csv"] {
            let mut args: Vec<&str> = films.to_vec();
            args.extend(["--format", format]);
            args.extend(cmd.iter().copied());
            let (a, b) = (run_cli(&args), run_cli(&args));
            deterministic &= a.stdout == b.stdout && a.stderr == b.stderr && a.status.code() == b.status.code();
            runs += 2;
        }
    }

    let dir = tempfile::tempdir().unwrap();
    let header = "alternative,criterion,source,left,right\n";
    let inverted = dir.path().join("inverted.csv");
    std::fs::write(&inverted, format!("{header}X,c,s1,2,3\nX,c,s2,5,4\n")).unwrap();
    let garbled = dir.path().join("garbled.csv");
    std::fs::write(&garbled, format!("{header}X,c,s1,two,3\n")).unwrap();
    let missing = dir.path().join("absent.csv");

    let code = |input: &str, extra: &[&str]| {
        let mut args = vec!["--input", input, "--scale-min", "1", "--scale-max", "10"];
        args.extend(extra);
        run_cli(&args)
    };
    let ok_run = code("builtin:films", &["build"]);
    let missing_run = code(missing.to_str().unwrap(), &["build"]);
    let garbled_run = code(garbled.to_str().unwrap(), &["build"]);
    let inverted_run = code(inverted.to_str().unwrap(), &["build"]);
    let undef_run = code("builtin:films", &["rank", "--method", "ideal-ratio", "--measure", "jaccard"]);
    let stderr = |o: &Output| String::from_utf8_lossy(&o.stderr).into_owned();
    let codes = [
        ok_run.status.code(),
        missing_run.status.code(),
        garbled_run.status.code(),
        inverted_run.status.code(),
        undef_run.status.code(),
    ];
    let messages = stderr(&inverted_run).contains(":3") && stderr(&undef_run).contains("Film I");
    let ok = deterministic && codes == [Some(0), Some(2), Some(2), Some(3), Some(4)] && messages;
    (
        ok,
        format!(
            "{runs} runs byte-identical: {deterministic}; exit codes ok/missing/garbled/inverted/undef = {:?}",
            codes.map(|c| c.unwrap_or(-1))
        ),
    )
}
