//! Exhaustive searches over bounded spaces of normalized staircases.
//!
//! A staircase with `m` generators is normalized when `a_m = b_1 = 0`; with
//! all exponents at most `B` it is fixed by choosing the `m - 1` nonzero
//! x-exponents and the `m - 1` nonzero y-exponents from `1..=B`, so the
//! space has `C(B, m-1)²` members. Work is split by x-exponent sequence and
//! the per-slice results are merged with a deterministic minimum.

mod combinations;
mod degrees;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{minimalize, minimalize_pairwise, StaircaseIdeal};
use crate::monomial::Monomial;

pub use combinations::{binomial, Combinations};
pub use degrees::{
    single_degree_bound_check, single_degree_survey, two_degree_scan, two_degree_scan_brute,
    write_scan_csv, Sampling, ScanRow, SingleDegreeReport,
};

/// Largest accepted exponent bound; keeps every product sum far from overflow.
pub const MAX_BOUND: u64 = 1 << 30;

/// Every normalized staircase with `m` generators and exponents `≤ bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchSpace {
    pub m: usize,
    pub bound: u64,
}

impl SearchSpace {
    pub fn new(m: usize, bound: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("m must be ≥ 1".into()));
        }
        if bound < (m - 1) as u64 {
            return Err(Error::BoundTooSmall { m, bound });
        }
        if bound > MAX_BOUND {
            return Err(Error::InvalidParameter(format!(
                "bound {bound} exceeds the supported maximum {MAX_BOUND}"
            )));
        }
        Ok(SearchSpace { m, bound })
    }

    /// `C(bound, m-1)²`.
    pub fn size(&self) -> u128 {
        let c = binomial(self.bound, self.m as u64 - 1).expect("bounded");
        c * c
    }

    /// Whether `ideal` is a member: `m` generators, normalized, exponents in range.
    pub fn contains(&self, ideal: &StaircaseIdeal) -> bool {
        ideal.mu() == self.m
            && ideal.is_normalized()
            && ideal.gens().first().is_some_and(|g| g.xexp <= self.bound)
            && ideal.gens().last().is_some_and(|g| g.yexp <= self.bound)
    }

    /// All decreasing x-exponent sequences `a_1 > … > a_{m-1} > a_m = 0`.
    fn xexp_sequences(&self) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut comb = Combinations::new(self.bound, self.m - 1);
        while let Some(c) = comb.next_subset() {
            let mut a: Vec<u64> = c.iter().rev().copied().collect();
            a.push(0);
            out.push(a);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub m: usize,
    pub bound: u64,
    pub minimum_mu_square: usize,
    /// Lexicographically least `(a_1..a_m, b_1..b_m)` among the minimizers.
    pub witness: StaircaseIdeal,
    pub candidates_examined: u64,
    /// Candidates whose square was recomputed with the pairwise oracle.
    pub oracle_checks: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads; `None` uses the available parallelism.
    pub workers: Option<usize>,
    /// Enumerate only `a_1 ≥ b_m` and account for the mirror images.
    pub symmetry: bool,
    /// Recheck every n-th candidate of each slice with the pairwise oracle;
    /// `0` disables the check.
    pub oracle_every: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: None,
            symmetry: true,
            oracle_every: 100,
        }
    }
}

impl SearchOptions {
    pub fn with_workers(workers: usize) -> Self {
        SearchOptions {
            workers: Some(workers),
            ..Default::default()
        }
    }
}

/// Runs `f` on a pool of `workers` threads, or the global pool.
pub(crate) fn run_with_workers<T: Send>(
    workers: Option<usize>,
    f: impl FnOnce() -> T + Send,
) -> Result<T> {
    match workers {
        None => Ok(f()),
        Some(0) => Err(Error::InvalidParameter("workers must be ≥ 1".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// The number of minimal generators of `I²` for the staircase with exponent
/// sequences `xs`, `ys`. `buf` is scratch space reused across calls.
pub fn mu_square(xs: &[u64], ys: &[u64], buf: &mut Vec<(u64, u64)>) -> usize {
    buf.clear();
    let m = xs.len();
    for i in 0..m {
        for j in i..m {
            buf.push((ys[i] + ys[j], xs[i] + xs[j]));
        }
    }
    count_minimal(buf)
}

/// Counts minimal elements among `(yexp, xexp)` pairs, sorting `buf`.
fn count_minimal(buf: &mut [(u64, u64)]) -> usize {
    buf.sort_unstable();
    let mut min_x = u64::MAX;
    let mut count = 0;
    for &(_, x) in buf.iter() {
        if x < min_x {
            min_x = x;
            count += 1;
        }
    }
    count
}

/// Generators of `I²` via the pairwise oracle.
pub(crate) fn square_by_oracle(xs: &[u64], ys: &[u64]) -> Vec<Monomial> {
    let m = xs.len();
    let mut products = Vec::with_capacity(m * (m + 1) / 2);
    for i in 0..m {
        for j in i..m {
            products.push(Monomial::new(xs[i] + xs[j], ys[i] + ys[j]));
        }
    }
    minimalize_pairwise(&products)
}

/// Best candidate seen so far: `(μ(I²), exponent key)`, compared lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Best {
    pub mu_square: usize,
    pub key: Vec<u64>,
}

impl Best {
    pub fn merge(a: Option<Best>, b: Option<Best>) -> Option<Best> {
        match (a, b) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) => a,
            (None, b) => b,
        }
    }

    pub fn witness(&self) -> StaircaseIdeal {
        let m = self.key.len() / 2;
        StaircaseIdeal::from_exponents(&self.key[..m], &self.key[m..]).expect("m ≥ 1")
    }
}

/// Writes `(a_1..a_m, b_1..b_m)` of the mirror image `x <-> y` into `out`.
pub(crate) fn mirror_key(xs: &[u64], ys: &[u64], out: &mut Vec<u64>) {
    out.clear();
    out.extend(ys.iter().rev());
    out.extend(xs.iter().rev());
}

#[derive(Debug, Default)]
struct SliceResult {
    best: Option<Best>,
    examined: u64,
    oracle_checks: u64,
    mismatch: Option<String>,
}

impl SliceResult {
    fn merge(mut self, other: SliceResult) -> SliceResult {
        self.best = Best::merge(self.best, other.best);
        self.examined += other.examined;
        self.oracle_checks += other.oracle_checks;
        // keep the lexicographically first report so the error is schedule-independent
        self.mismatch = match (self.mismatch, other.mismatch) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Folds `μ(I²)` over every member of `space` accepted by `filter`.
///
/// `filter` receives the exponent sequences and must be invariant under the
/// mirror `x <-> y` when symmetry pruning is on.
pub(crate) fn search_filtered<F>(
    space: SearchSpace,
    options: SearchOptions,
    filter: F,
) -> Result<Option<SearchOutcome>>
where
    F: Fn(&[u64], &[u64]) -> bool + Sync,
{
    let slices = space.xexp_sequences();
    let m = space.m;

    let scan_slice = |xs: &Vec<u64>| -> SliceResult {
        let mut result = SliceResult::default();
        let b_limit = if options.symmetry {
            xs[0].min(space.bound)
        } else {
            space.bound
        };
        let mut ys = vec![0u64; m];
        let mut buf = Vec::with_capacity(m * (m + 1) / 2);
        let mut key = Vec::with_capacity(2 * m);
        let mut mirrored = Vec::with_capacity(2 * m);
        let mut local: u64 = 0;
        let mut comb = Combinations::new(b_limit, m - 1);
        while let Some(c) = comb.next_subset() {
            ys[1..].copy_from_slice(c);
            if !filter(xs, &ys) {
                continue;
            }
            let weight = if options.symmetry && ys[m - 1] < xs[0] {
                2
            } else {
                1
            };
            result.examined += weight;
            let mu = mu_square(xs, &ys, &mut buf);

            if options.oracle_every > 0 && local.is_multiple_of(options.oracle_every) {
                result.oracle_checks += 1;
                let oracle = square_by_oracle(xs, &ys);
                if oracle.len() != mu && result.mismatch.is_none() {
                    result.mismatch = Some(format!("a = {xs:?}, b = {ys:?}"));
                }
            }
            local += 1;

            let improves = match &result.best {
                None => true,
                Some(best) => mu <= best.mu_square,
            };
            if improves {
                key.clear();
                key.extend_from_slice(xs);
                key.extend_from_slice(&ys);
                if weight == 2 {
                    mirror_key(xs, &ys, &mut mirrored);
                    if mirrored < key {
                        std::mem::swap(&mut key, &mut mirrored);
                    }
                }
                let candidate = Best {
                    mu_square: mu,
                    key: key.clone(),
                };
                if result.best.as_ref().is_none_or(|b| candidate < *b) {
                    result.best = Some(candidate);
                }
            }
        }
        result
    };

    let total = run_with_workers(options.workers, || {
        slices
            .par_iter()
            .map(scan_slice)
            .reduce(SliceResult::default, SliceResult::merge)
    })?;

    if let Some(detail) = total.mismatch {
        return Err(Error::OracleMismatch(detail));
    }
    Ok(total.best.map(|best| SearchOutcome {
        m,
        bound: space.bound,
        minimum_mu_square: best.mu_square,
        witness: best.witness(),
        candidates_examined: total.examined,
        oracle_checks: total.oracle_checks,
    }))
}

/// Minimum of `μ(I²)` over all normalized staircases with `m` generators and
/// exponents at most `bound`.
pub fn min_mu_square(m: usize, bound: u64) -> Result<SearchOutcome> {
    min_mu_square_with(m, bound, SearchOptions::default())
}

pub fn min_mu_square_with(m: usize, bound: u64, options: SearchOptions) -> Result<SearchOutcome> {
    let space = SearchSpace::new(m, bound)?;
    Ok(search_filtered(space, options, |_, _| true)?.expect("search space is nonempty"))
}

/// A bounded check that six generators force at least nine in the square.
///
/// A pass is evidence within exponent bound `bound` only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeNineCheck {
    pub outcome: SearchOutcome,
    pub passed: bool,
    pub label: String,
}

pub fn verify_ge_nine(bound: u64) -> Result<GeNineCheck> {
    verify_ge_nine_with(bound, SearchOptions::default())
}

pub fn verify_ge_nine_with(bound: u64, options: SearchOptions) -> Result<GeNineCheck> {
    if bound < 5 {
        return Err(Error::BoundTooSmall { m: 6, bound });
    }
    let outcome = min_mu_square_with(6, bound, options)?;
    let passed = outcome.minimum_mu_square >= 9;
    Ok(GeNineCheck {
        label: format!(
            "μ(I) = 6 ⇒ μ(I²) ≥ 9 {}: verified within exponent bound B = {bound}",
            if passed { "holds" } else { "FAILS" }
        ),
        outcome,
        passed,
    })
}

/// The square of `ideal` computed through [`minimalize`], for cross-checks.
pub fn square_generators(ideal: &StaircaseIdeal) -> Result<StaircaseIdeal> {
    let g = ideal.gens();
    let mut products = Vec::with_capacity(g.len() * g.len());
    for u in g {
        for v in g {
            products.push(u.checked_mul(v)?);
        }
    }
    minimalize(products)
}
