//! Monomial ideals of `K[x,y]` represented by their minimal generators.
//!
//! A two-variable monomial ideal is determined by its staircase: the minimal
//! generators `u_1, …, u_m` with x-exponents strictly decreasing and
//! y-exponents strictly increasing. [`StaircaseIdeal`] always holds exactly
//! that list in that order, so two ideals are equal iff their generator
//! lists are.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A monomial ideal given by its unique minimal generating set in canonical
/// staircase order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Monomial>", into = "Vec<Monomial>")]
pub struct StaircaseIdeal {
    gens: Vec<Monomial>,
}

/// An index pair `(i, j)` with `1 ≤ i ≤ j`, naming the product `u_i u_j`.
///
/// The derived `Ord` is the lexicographic order on `(i, j)`; the product
/// order on pairs is [`PairIndex::le`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairIndex {
    pub i: usize,
    pub j: usize,
}

impl PairIndex {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i > j {
            return Err(Error::InvalidParameter(format!(
                "pair ({i},{j}) must satisfy 1 ≤ i ≤ j"
            )));
        }
        Ok(PairIndex { i, j })
    }

    /// The pair `{i, j}` in either order.
    pub fn unordered(a: usize, b: usize) -> Result<Self> {
        PairIndex::new(a.min(b), a.max(b))
    }

    pub fn is_valid_for(&self, m: usize) -> bool {
        1 <= self.i && self.i <= self.j && self.j <= m
    }

    /// Componentwise order: `(i,j) ≤ (k,l)` iff `i ≤ k` and `j ≤ l`.
    pub fn le(&self, other: &PairIndex) -> bool {
        self.i <= other.i && self.j <= other.j
    }

    /// All pairs `1 ≤ i ≤ j ≤ m` in lexicographic order.
    pub fn all(m: usize) -> impl Iterator<Item = PairIndex> {
        (1..=m).flat_map(move |i| (i..=m).map(move |j| PairIndex { i, j }))
    }
}

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Reduces `gens` in place to its minimal elements under divisibility, in
/// canonical staircase order.
///
/// Sorting by `(yexp, xexp)` ascending puts every divisor of a monomial
/// before it, so one sweep tracking the smallest x-exponent seen suffices.
pub(crate) fn minimalize_in_place(gens: &mut Vec<Monomial>) {
    gens.sort_unstable_by_key(|u| (u.yexp, u.xexp));
    let mut min_x = u64::MAX;
    let mut kept = 0;
    for idx in 0..gens.len() {
        let g = gens[idx];
        if g.xexp < min_x {
            min_x = g.xexp;
            gens[kept] = g;
            kept += 1;
        }
    }
    gens.truncate(kept);
}

/// The minimal generators of the ideal generated by `gens`.
pub fn minimalize<I>(gens: I) -> Result<StaircaseIdeal>
where
    I: IntoIterator<Item = Monomial>,
{
    let mut gens: Vec<Monomial> = gens.into_iter().collect();
    if gens.is_empty() {
        return Err(Error::EmptyGeneratingSet);
    }
    minimalize_in_place(&mut gens);
    Ok(StaircaseIdeal { gens })
}

/// Quadratic reference implementation of [`minimalize`]: keeps every
/// monomial not strictly divisible by another one, then deduplicates.
pub fn minimalize_pairwise(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = gens
        .iter()
        .filter(|v| !gens.iter().any(|u| u != *v && u.divides(v)))
        .copied()
        .collect();
    out.sort_unstable_by(|u, v| v.xexp.cmp(&u.xexp).then(u.yexp.cmp(&v.yexp)));
    out.dedup();
    out
}

impl StaircaseIdeal {
    /// Builds the ideal from exponent sequences `a_1..a_m` and `b_1..b_m`.
    ///
    /// The sequences need not be monotone; the result is minimalized.
    pub fn from_exponents(xexps: &[u64], yexps: &[u64]) -> Result<Self> {
        if xexps.len() != yexps.len() {
            return Err(Error::InvalidParameter(format!(
                "exponent sequences differ in length ({} vs {})",
                xexps.len(),
                yexps.len()
            )));
        }
        minimalize(xexps.iter().zip(yexps).map(|(&x, &y)| Monomial::new(x, y)))
    }

    /// The principal ideal `(u)`.
    pub fn principal(u: Monomial) -> Self {
        StaircaseIdeal { gens: vec![u] }
    }

    /// The power `(x, y)^d` of the maximal ideal.
    pub fn maximal_power(d: u64) -> Self {
        StaircaseIdeal {
            gens: (0..=d).rev().map(|a| Monomial::new(a, d - a)).collect(),
        }
    }

    /// Minimal generators in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// The number of minimal generators.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    /// Generator `u_i`, 1-based.
    pub fn generator(&self, i: usize) -> Option<Monomial> {
        i.checked_sub(1).and_then(|k| self.gens.get(k)).copied()
    }

    pub fn xexps(&self) -> impl Iterator<Item = u64> + '_ {
        self.gens.iter().map(|g| g.xexp)
    }

    pub fn yexps(&self) -> impl Iterator<Item = u64> + '_ {
        self.gens.iter().map(|g| g.yexp)
    }

    /// Monomial membership: `v ∈ I` iff some generator divides `v`.
    pub fn contains(&self, v: &Monomial) -> bool {
        // Generators dividing v have yexp ≤ v.yexp, which is a prefix of the
        // staircase; among those the last has the smallest xexp.
        let end = self.gens.partition_point(|g| g.yexp <= v.yexp);
        end > 0 && self.gens[end - 1].xexp <= v.xexp
    }

    /// Divides out the greatest common monomial factor of the generators.
    pub fn normalize(&self) -> StaircaseIdeal {
        let min_x = self.gens.last().map_or(0, |g| g.xexp);
        let min_y = self.gens.first().map_or(0, |g| g.yexp);
        StaircaseIdeal {
            gens: self
                .gens
                .iter()
                .map(|g| Monomial::new(g.xexp - min_x, g.yexp - min_y))
                .collect(),
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.gens.last().is_none_or(|g| g.xexp == 0)
            && self.gens.first().is_none_or(|g| g.yexp == 0)
    }

    /// `u_i u_j` for the pair `p`.
    pub fn pair_product(&self, p: PairIndex) -> Result<Monomial> {
        if !p.is_valid_for(self.mu()) {
            return Err(Error::IndexOutOfRange {
                i: p.i,
                j: p.j,
                m: self.mu(),
            });
        }
        self.gens[p.i - 1].checked_mul(&self.gens[p.j - 1])
    }

    /// The product ideal `I·J`.
    pub fn product(&self, other: &StaircaseIdeal) -> Result<StaircaseIdeal> {
        let mut gens = Vec::with_capacity(self.mu() * other.mu());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.checked_mul(v)?);
            }
        }
        minimalize_in_place(&mut gens);
        Ok(StaircaseIdeal { gens })
    }

    /// `I^k` by repeated multiplication, `((I·I)·I)…`.
    pub fn power(&self, k: u32) -> Result<StaircaseIdeal> {
        if k == 0 {
            return Err(Error::InvalidParameter("power exponent must be ≥ 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Applies `x^a y^b -> x^(k a) y^(k b)` to every generator.
    pub fn scaled(&self, k: u64) -> Result<StaircaseIdeal> {
        if k == 0 {
            return Err(Error::InvalidParameter("scale factor must be ≥ 1".into()));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.scaled(k))
            .collect::<Result<_>>()?;
        Ok(StaircaseIdeal { gens })
    }

    /// The image under `x <-> y`, which reverses the staircase.
    pub fn swapped(&self) -> StaircaseIdeal {
        StaircaseIdeal {
            gens: self.gens.iter().rev().map(Monomial::swapped).collect(),
        }
    }

    /// Parses the ideal file format: one JSON array of `[xexp, yexp]` pairs.
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Serializes to the ideal file format in canonical order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ideal serialization is infallible")
    }
}

impl TryFrom<Vec<Monomial>> for StaircaseIdeal {
    type Error = Error;

    fn try_from(gens: Vec<Monomial>) -> Result<Self> {
        minimalize(gens)
    }
}

impl From<StaircaseIdeal> for Vec<Monomial> {
    fn from(ideal: StaircaseIdeal) -> Self {
        ideal.gens
    }
}

impl fmt::Display for StaircaseIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, g) in self.gens.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

pub fn ideal_product(i: &StaircaseIdeal, j: &StaircaseIdeal) -> Result<StaircaseIdeal> {
    i.product(j)
}

pub fn ideal_power(i: &StaircaseIdeal, k: u32) -> Result<StaircaseIdeal> {
    i.power(k)
}

pub fn mu(i: &StaircaseIdeal) -> usize {
    i.mu()
}

pub fn contains(i: &StaircaseIdeal, v: &Monomial) -> bool {
    i.contains(v)
}

pub fn normalize(i: &StaircaseIdeal) -> StaircaseIdeal {
    i.normalize()
}

pub fn pair_product(i: &StaircaseIdeal, p: PairIndex) -> Result<Monomial> {
    i.pair_product(p)
}
