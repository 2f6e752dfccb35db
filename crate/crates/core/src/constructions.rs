//! Ideals with `μ(I) = m` but `μ(I²) = 9`, and the divisibility conditions
//! that force a nine-generator square.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{PairIndex, StaircaseIdeal};
use crate::monomial::Monomial;

/// The x-exponents `(5m, 4m, 4m-1, …, 3m+4, m, 0)` of the tiny-square family.
fn tiny_square_xexps(m: u64) -> Vec<u64> {
    let mut a = vec![5 * m];
    a.extend((3 * m + 4..=4 * m).rev());
    a.extend([m, 0]);
    a
}

/// The ideal with x-exponents `(5m, 4m, 4m-1, …, 3m+4, m, 0)` and the same
/// sequence reversed as y-exponents. It has `m` generators and its square has
/// nine.
pub fn tiny_square_ideal(m: usize) -> Result<StaircaseIdeal> {
    if m < 5 {
        return Err(Error::ConstructionTooSmall(m));
    }
    let xexps = tiny_square_xexps(m as u64);
    debug_assert_eq!(xexps.len(), m);
    let yexps: Vec<u64> = xexps.iter().rev().copied().collect();
    StaircaseIdeal::from_exponents(&xexps, &yexps)
}

/// `J₀ = (x⁵, x⁴y, xy⁴, y⁵)`.
pub fn j0() -> StaircaseIdeal {
    StaircaseIdeal::from_exponents(&[5, 4, 1, 0], &[0, 1, 4, 5]).expect("nonempty")
}

/// Outcome of checking the five divisibility conditions on `u_1, …, u_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub m: usize,
    /// Conditions (1) through (5), in order:
    /// 1. `u_1 u_m | u_2 u_{m-1}`
    /// 2. `u_1 u_{m-1} | u_2 u_3` and `u_1 u_{m-1} | u_{m-2}²`
    /// 3. `u_2² | u_1 u_3` and `u_2² | u_1 u_{m-2}`
    /// 4. `u_2 u_m | u_3 u_{m-1}` and `u_2 u_m | u_{m-2} u_{m-1}`
    /// 5. `u_{m-1}² | u_3 u_m` and `u_{m-1}² | u_{m-2} u_m`
    pub condition_results: [bool; 5],
    /// `u_1², u_1u_2, u_2², u_1u_{m-1}, u_1u_m, u_2u_m, u_{m-1}², u_{m-1}u_m, u_m²`,
    /// duplicates kept.
    pub predicted_generators: Vec<Monomial>,
    /// `μ(I²)` as computed from the generators.
    pub mu_square: usize,
    /// Whether the minimal generators of `I²` coincide with the predicted set.
    pub square_matches_prediction: bool,
    /// All five conditions hold, `μ(I²) = 9` and the generator sets agree.
    pub verified: bool,
}

impl ConditionReport {
    pub fn all_conditions_hold(&self) -> bool {
        self.condition_results.iter().all(|&c| c)
    }
}

/// The nine index pairs of the predicted square generators, in report order.
pub fn predicted_pairs(m: usize) -> [(usize, usize); 9] {
    [
        (1, 1),
        (1, 2),
        (2, 2),
        (1, m - 1),
        (1, m),
        (2, m),
        (m - 1, m - 1),
        (m - 1, m),
        (m, m),
    ]
}

pub fn check_conditions(ideal: &StaircaseIdeal) -> Result<ConditionReport> {
    let m = ideal.mu();
    if m < 5 {
        return Err(Error::TooFewGenerators {
            needed: 5,
            found: m,
        });
    }
    let f = |i: usize, j: usize| ideal.pair_product(PairIndex::unordered(i, j)?);
    let divides_all = |d: Monomial, targets: &[(usize, usize)]| -> Result<bool> {
        for &(i, j) in targets {
            if !d.divides(&f(i, j)?) {
                return Ok(false);
            }
        }
        Ok(true)
    };

    let condition_results = [
        divides_all(f(1, m)?, &[(2, m - 1)])?,
        divides_all(f(1, m - 1)?, &[(2, 3), (m - 2, m - 2)])?,
        divides_all(f(2, 2)?, &[(1, 3), (1, m - 2)])?,
        divides_all(f(2, m)?, &[(3, m - 1), (m - 2, m - 1)])?,
        divides_all(f(m - 1, m - 1)?, &[(3, m), (m - 2, m)])?,
    ];

    let predicted_generators = predicted_pairs(m)
        .iter()
        .map(|&(i, j)| f(i, j))
        .collect::<Result<Vec<_>>>()?;

    let square = ideal.product(ideal)?;
    let mut predicted_sorted = predicted_generators.clone();
    predicted_sorted.sort();
    let mut actual_sorted = square.gens().to_vec();
    actual_sorted.sort();
    let square_matches_prediction = predicted_sorted == actual_sorted;

    let verified =
        condition_results.iter().all(|&c| c) && square.mu() == 9 && square_matches_prediction;

    Ok(ConditionReport {
        m,
        condition_results,
        predicted_generators,
        mu_square: square.mu(),
        square_matches_prediction,
        verified,
    })
}

/// `(u_1, u_2, u_{m-1}, u_m)`.
pub fn corner_subideal(ideal: &StaircaseIdeal) -> Result<StaircaseIdeal> {
    let g = ideal.gens();
    let m = g.len();
    if m < 4 {
        return Err(Error::TooFewGenerators {
            needed: 4,
            found: m,
        });
    }
    StaircaseIdeal::try_from(vec![g[0], g[1], g[m - 2], g[m - 1]])
}

/// `[(k, μ(I^k))]` for `k = 1..=kmax`.
pub fn power_mu_profile(ideal: &StaircaseIdeal, kmax: u32) -> Result<Vec<(u32, usize)>> {
    if kmax == 0 {
        return Err(Error::InvalidParameter("kmax must be ≥ 1".into()));
    }
    let mut out = Vec::with_capacity(kmax as usize);
    let mut power = ideal.clone();
    out.push((1, power.mu()));
    for k in 2..=kmax {
        power = power.product(ideal)?;
        out.push((k, power.mu()));
    }
    Ok(out)
}

/// Number of minimal generators in each total degree, ascending by degree.
pub fn degree_profile(ideal: &StaircaseIdeal) -> Vec<(u64, usize)> {
    let mut counts = BTreeMap::new();
    for g in ideal.gens() {
        *counts.entry(g.degree()).or_insert(0) += 1;
    }
    counts.into_iter().collect()
}

/// Ranges swept by the family-wide checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepLimits {
    pub m_min: usize,
    pub m_max: usize,
    /// Upper end of the `m` range used for the power sweeps.
    pub power_m_max: usize,
    pub k_max: u32,
}

impl Default for SweepLimits {
    fn default() -> Self {
        SweepLimits {
            m_min: 5,
            m_max: 60,
            power_m_max: 20,
            k_max: 8,
        }
    }
}
