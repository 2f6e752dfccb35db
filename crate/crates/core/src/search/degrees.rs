//! Searches restricted by generator degrees: ideals generated in one degree,
//! and ideals generated in exactly two degrees a fixed gap apart.

use std::io::Write;
use std::ops::RangeInclusive;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    binomial, mu_square, run_with_workers, search_filtered, Best, Combinations, SearchOptions,
    SearchSpace,
};
use crate::error::{Error, Result};
use crate::ideal::StaircaseIdeal;

/// Seed of the sampler used when a single-degree space is too large to exhaust.
pub const SINGLE_DEGREE_SEED: u64 = 0x5eed_0002;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingleDegreeReport {
    pub m: usize,
    pub degree: u64,
    pub exhaustive: bool,
    pub checked: u64,
    pub min_mu_square: usize,
    /// Ideals found with `μ(I²) < 2m - 1`.
    pub violations: u64,
}

impl SingleDegreeReport {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

/// How the single-degree staircases are visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampling {
    /// Exhaust when the space has at most `trials` members, otherwise sample.
    Auto,
    Exhaustive,
    Random {
        seed: u64,
    },
}

/// Checks `μ(I²) ≥ 2m - 1` on normalized staircases with `m` generators all
/// of total degree `degree`.
///
/// Such a staircase contains `x^d` and `y^d` and is fixed by its `m - 2`
/// middle x-exponents, chosen from `1..d`.
pub fn single_degree_survey(
    m: usize,
    degree: u64,
    trials: u64,
    sampling: Sampling,
) -> Result<SingleDegreeReport> {
    if m < 2 {
        return Err(Error::InvalidParameter(
            "single-degree check needs m ≥ 2".into(),
        ));
    }
    if degree < (m - 1) as u64 {
        return Err(Error::InvalidParameter(format!(
            "no staircase with {m} generators in degree {degree}: need degree ≥ m - 1"
        )));
    }
    let space_size = binomial(degree - 1, (m - 2) as u64).unwrap_or(u128::MAX);
    let (exhaustive, seed) = match sampling {
        Sampling::Auto => (space_size <= trials as u128, SINGLE_DEGREE_SEED),
        Sampling::Exhaustive => (true, 0),
        Sampling::Random { seed } => (false, seed),
    };
    if !exhaustive && trials == 0 {
        return Err(Error::InvalidParameter("trials must be ≥ 1".into()));
    }

    let threshold = 2 * m - 1;
    let mut report = SingleDegreeReport {
        m,
        degree,
        exhaustive,
        checked: 0,
        min_mu_square: usize::MAX,
        violations: 0,
    };
    let mut xs = vec![0u64; m];
    let mut ys = vec![0u64; m];
    let mut buf = Vec::new();
    let mut visit = |middle_desc: &mut dyn Iterator<Item = u64>| {
        xs[0] = degree;
        for (slot, a) in xs[1..m - 1].iter_mut().zip(middle_desc) {
            *slot = a;
        }
        xs[m - 1] = 0;
        for (y, x) in ys.iter_mut().zip(&xs) {
            *y = degree - x;
        }
        let mu = mu_square(&xs, &ys, &mut buf);
        report.checked += 1;
        report.min_mu_square = report.min_mu_square.min(mu);
        if mu < threshold {
            report.violations += 1;
        }
    };

    if exhaustive {
        let mut comb = Combinations::new(degree - 1, m - 2);
        while let Some(c) = comb.next_subset() {
            visit(&mut c.iter().rev().copied());
        }
    } else {
        let pool = usize::try_from(degree - 1)
            .map_err(|_| Error::InvalidParameter(format!("degree {degree} too large to sample")))?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let mut middle: Vec<u64> = sample(&mut rng, pool, m - 2)
                .into_iter()
                .map(|k| k as u64 + 1)
                .collect();
            middle.sort_unstable_by(|a, b| b.cmp(a));
            visit(&mut middle.into_iter());
        }
    }
    Ok(report)
}

pub fn single_degree_bound_check(m: usize, degree: u64, trials: u64) -> Result<bool> {
    Ok(single_degree_survey(m, degree, trials, Sampling::Auto)?.holds())
}

/// One row of a two-degree scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub m: usize,
    pub gap: u64,
    pub bound: u64,
    pub min_mu_square: Option<usize>,
    pub witness: Option<StaircaseIdeal>,
    /// Two-degree ideals with this gap found in the space.
    pub candidates: u64,
}

/// Whether the generator degrees take exactly two values `gap` apart.
fn has_degree_gap(xs: &[u64], ys: &[u64], gap: u64) -> bool {
    let mut lo = u64::MAX;
    let mut hi = 0;
    for (x, y) in xs.iter().zip(ys) {
        let d = x + y;
        lo = lo.min(d);
        hi = hi.max(d);
    }
    hi - lo == gap && xs.iter().zip(ys).all(|(x, y)| x + y == lo || x + y == hi)
}

#[derive(Default)]
struct ScanAcc {
    best: Option<Best>,
    count: u64,
}

/// Depth-first choice of `b_2, …, b_m`: each generator has degree `lo` or
/// `lo + gap`, which leaves at most two values per position.
#[allow(clippy::too_many_arguments)]
fn extend_two_degree(
    xs: &[u64],
    ys: &mut Vec<u64>,
    lo: u64,
    gap: u64,
    bound: u64,
    used: (bool, bool),
    buf: &mut Vec<(u64, u64)>,
    acc: &mut ScanAcc,
) {
    let pos = ys.len();
    if pos == xs.len() {
        if used.0 && used.1 {
            acc.count += 1;
            let mu = mu_square(xs, ys, buf);
            let candidate = Best {
                mu_square: mu,
                key: xs.iter().chain(ys.iter()).copied().collect(),
            };
            if acc.best.as_ref().is_none_or(|b| candidate < *b) {
                acc.best = Some(candidate);
            }
        }
        return;
    }
    let prev = ys[pos - 1];
    for (degree, is_hi) in [(lo, false), (lo + gap, true)] {
        let Some(y) = degree.checked_sub(xs[pos]) else {
            continue;
        };
        if y > prev && y <= bound {
            ys.push(y);
            let used = (used.0 || !is_hi, used.1 || is_hi);
            extend_two_degree(xs, ys, lo, gap, bound, used, buf, acc);
            ys.pop();
        }
    }
}

fn scan_one(m: usize, gap: u64, bound: u64, workers: Option<usize>) -> Result<ScanRow> {
    let space = SearchSpace::new(m, bound)?;
    let slices = space.xexp_sequences();
    let scan_slice = |xs: &Vec<u64>| -> ScanAcc {
        let mut acc = ScanAcc::default();
        let mut buf = Vec::new();
        let mut ys = Vec::with_capacity(m);
        let a1 = xs[0];
        // u_1 = x^{a_1} has the low or the high degree
        let mut lows = vec![(a1, (true, false))];
        if let Some(lo) = a1.checked_sub(gap) {
            lows.push((lo, (false, true)));
        }
        for (lo, used) in lows {
            ys.clear();
            ys.push(0);
            extend_two_degree(xs, &mut ys, lo, gap, bound, used, &mut buf, &mut acc);
        }
        acc
    };
    let total = run_with_workers(workers, || {
        slices
            .par_iter()
            .map(scan_slice)
            .reduce(ScanAcc::default, |a, b| ScanAcc {
                best: Best::merge(a.best, b.best),
                count: a.count + b.count,
            })
    })?;
    Ok(ScanRow {
        m,
        gap,
        bound,
        min_mu_square: total.best.as_ref().map(|b| b.mu_square),
        witness: total.best.as_ref().map(Best::witness),
        candidates: total.count,
    })
}

/// For each `m`, the least `μ(I²)` over normalized staircases with exponents
/// `≤ bound` whose generators lie in exactly two degrees `gap` apart.
pub fn two_degree_scan(
    gap: u64,
    m_range: RangeInclusive<usize>,
    bound: u64,
    workers: Option<usize>,
) -> Result<Vec<ScanRow>> {
    if gap == 0 {
        return Err(Error::InvalidParameter(
            "gap must be ≥ 1; gap 0 is the single-degree case".into(),
        ));
    }
    m_range.map(|m| scan_one(m, gap, bound, workers)).collect()
}

/// [`two_degree_scan`] for a single `m` by filtering the full search space.
pub fn two_degree_scan_brute(m: usize, gap: u64, bound: u64, symmetry: bool) -> Result<ScanRow> {
    if gap == 0 {
        return Err(Error::InvalidParameter("gap must be ≥ 1".into()));
    }
    let space = SearchSpace::new(m, bound)?;
    let options = SearchOptions {
        workers: None,
        symmetry,
        oracle_every: 0,
    };
    let outcome = search_filtered(space, options, |xs, ys| has_degree_gap(xs, ys, gap))?;
    Ok(ScanRow {
        m,
        gap,
        bound,
        min_mu_square: outcome.as_ref().map(|o| o.minimum_mu_square),
        candidates: outcome.as_ref().map_or(0, |o| o.candidates_examined),
        witness: outcome.map(|o| o.witness),
    })
}

/// Writes scan rows as CSV with header `m,gap,bound,min_mu_square,witness`.
///
/// The witness is the JSON ideal format in one field; rows without a
/// two-degree ideal carry `none` and an empty witness.
pub fn write_scan_csv<W: Write>(rows: &[ScanRow], out: W) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::Necessary)
        .from_writer(out);
    w.write_record(["m", "gap", "bound", "min_mu_square", "witness"])?;
    for row in rows {
        let min = row
            .min_mu_square
            .map_or_else(|| "none".to_string(), |v| v.to_string());
        let witness = row
            .witness
            .as_ref()
            .map_or_else(String::new, |i| i.to_json());
        w.write_record([
            row.m.to_string(),
            row.gap.to_string(),
            row.bound.to_string(),
            min,
            witness,
        ])?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::tiny_square_ideal;

    #[test]
    fn single_degree_small_cases() {
        let r = single_degree_survey(3, 2, 10, Sampling::Auto).unwrap();
        assert!(r.exhaustive);
        assert_eq!(r.checked, 1);
        assert_eq!(r.min_mu_square, 5);
        assert!(r.holds());

        let r = single_degree_survey(4, 6, 0, Sampling::Exhaustive).unwrap();
        assert_eq!(r.checked, 10);
        assert!(r.holds());

        assert!(single_degree_bound_check(6, 12, 1000).unwrap());
        assert!(single_degree_survey(5, 3, 10, Sampling::Auto).is_err());
        assert!(single_degree_survey(1, 3, 10, Sampling::Auto).is_err());
    }

    #[test]
    fn single_degree_sampling_is_seeded() {
        let a = single_degree_survey(6, 30, 200, Sampling::Random { seed: 7 }).unwrap();
        let b = single_degree_survey(6, 30, 200, Sampling::Random { seed: 7 }).unwrap();
        assert_eq!(a, b);
        assert!(!a.exhaustive);
        assert_eq!(a.checked, 200);
    }

    #[test]
    fn gap_zero_rejected() {
        assert!(two_degree_scan(0, 3..=3, 6, None).is_err());
        assert!(two_degree_scan_brute(3, 0, 6, true).is_err());
    }

    #[test]
    fn degree_gap_filter() {
        let i = tiny_square_ideal(5).unwrap();
        let xs: Vec<u64> = i.xexps().collect();
        let ys: Vec<u64> = i.yexps().collect();
        assert!(has_degree_gap(&xs, &ys, 13));
        assert!(!has_degree_gap(&xs, &ys, 12));
        assert!(!has_degree_gap(&[2, 1, 0], &[0, 1, 2], 1));
    }

    #[test]
    fn structured_scan_matches_filtered_search() {
        for m in 2..=4 {
            for gap in 1..=3 {
                for bound in (m as u64 - 1)..=7 {
                    let fast = two_degree_scan(gap, m..=m, bound, Some(2))
                        .unwrap()
                        .remove(0);
                    let brute = two_degree_scan_brute(m, gap, bound, false).unwrap();
                    let pruned = two_degree_scan_brute(m, gap, bound, true).unwrap();
                    assert_eq!(fast, brute, "m={m} gap={gap} bound={bound}");
                    assert_eq!(fast, pruned, "m={m} gap={gap} bound={bound}");
                }
            }
        }
    }

    #[test]
    fn csv_layout() {
        let rows = vec![
            ScanRow {
                m: 3,
                gap: 1,
                bound: 6,
                min_mu_square: Some(5),
                witness: Some(StaircaseIdeal::from_exponents(&[2, 1, 0], &[0, 2, 3]).unwrap()),
                candidates: 4,
            },
            ScanRow {
                m: 9,
                gap: 1,
                bound: 8,
                min_mu_square: None,
                witness: None,
                candidates: 0,
            },
        ];
        let mut out = Vec::new();
        write_scan_csv(&rows, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(
            text,
            "m,gap,bound,min_mu_square,witness\n3,1,6,5,\"[[2,0],[1,2],[0,3]]\"\n9,1,8,none,\n"
        );
    }
}
