//! Generator products of an ideal and how the minimal generators of the
//! square sit among them.
//!
//! For `I = (u_1, …, u_m)` every pair `(i,j)` with `i ≤ j` yields a product
//! `u_i u_j`; these generate `I²` and include all of its minimal generators.
//! A minimal generator of `I²` can arise from several pairs, so each one is
//! named by its *canonical pair*: the lexicographically least pair producing
//! it. The gamma map sends a pair to the minimal generator of `I²` dividing
//! its product whose canonical pair is lexicographically least.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ideal::{PairIndex, StaircaseIdeal};
use crate::monomial::Monomial;

/// True iff neither pair is `≤` the other in the componentwise order.
pub fn noncomparable(v: PairIndex, w: PairIndex) -> bool {
    !(v.le(&w) || w.le(&v))
}

/// Strict nesting of intervals `[min v, max v]` and `[min w, max w]`, the
/// shape every noncomparable pair of `V` takes.
pub fn strictly_nested(v: PairIndex, w: PairIndex) -> bool {
    (v.i < w.i && w.j < v.j) || (w.i < v.i && v.j < w.j)
}

/// All pairs whose product divides the product of `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivSet {
    pub target: PairIndex,
    /// Sorted lexicographically.
    pub members: Vec<PairIndex>,
}

impl DivSet {
    pub fn contains(&self, p: PairIndex) -> bool {
        self.members.binary_search(&p).is_ok()
    }

    /// The target is a member, and every other member is noncomparable to it.
    pub fn satisfies_invariants(&self) -> bool {
        self.contains(self.target)
            && self
                .members
                .iter()
                .filter(|&&p| p != self.target)
                .all(|&p| noncomparable(p, self.target))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaValue {
    pub source: PairIndex,
    pub image: PairIndex,
    pub image_monomial: Monomial,
}

/// Precomputed minimal generators of `I²` with their canonical pairs.
#[derive(Debug, Clone)]
pub struct SquareGenerators<'a> {
    ideal: &'a StaircaseIdeal,
    /// `(canonical pair, monomial)` in canonical staircase order of monomials.
    entries: Vec<(PairIndex, Monomial)>,
}

impl<'a> SquareGenerators<'a> {
    pub fn new(ideal: &'a StaircaseIdeal) -> Result<Self> {
        let mut canonical: HashMap<Monomial, PairIndex> = HashMap::new();
        for p in PairIndex::all(ideal.mu()) {
            let prod = ideal.pair_product(p)?;
            // Pairs arrive in lex order, so the first one seen is the least.
            canonical.entry(prod).or_insert(p);
        }
        let square = ideal.product(ideal)?;
        let entries = square.gens().iter().map(|g| (canonical[g], *g)).collect();
        Ok(SquareGenerators { ideal, entries })
    }

    pub fn ideal(&self) -> &StaircaseIdeal {
        self.ideal
    }

    pub fn pairs(&self) -> Vec<PairIndex> {
        self.entries.iter().map(|&(p, _)| p).collect()
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.entries.iter().map(|&(_, g)| g).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn gamma(&self, p: PairIndex) -> Result<GammaValue> {
        let target = self.ideal.pair_product(p)?;
        let (image, image_monomial) = self
            .entries
            .iter()
            .filter(|(_, g)| g.divides(&target))
            .min_by_key(|(q, _)| *q)
            .copied()
            .expect("the generators of I² generate every product u_i u_j");
        Ok(GammaValue {
            source: p,
            image,
            image_monomial,
        })
    }
}

pub fn div_set(ideal: &StaircaseIdeal, p: PairIndex) -> Result<DivSet> {
    let target = ideal.pair_product(p)?;
    let mut members = Vec::new();
    for q in PairIndex::all(ideal.mu()) {
        if ideal.pair_product(q)?.divides(&target) {
            members.push(q);
        }
    }
    Ok(DivSet { target: p, members })
}

pub fn gamma_map(ideal: &StaircaseIdeal, p: PairIndex) -> Result<GammaValue> {
    if !p.is_valid_for(ideal.mu()) {
        return Err(Error::IndexOutOfRange {
            i: p.i,
            j: p.j,
            m: ideal.mu(),
        });
    }
    SquareGenerators::new(ideal)?.gamma(p)
}

/// Canonical pairs of the minimal generators of `I²`, in staircase order of
/// the generators they name.
pub fn square_generator_pairs(ideal: &StaircaseIdeal) -> Result<Vec<PairIndex>> {
    Ok(SquareGenerators::new(ideal)?.pairs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::tiny_square_ideal;

    fn p(i: usize, j: usize) -> PairIndex {
        PairIndex::new(i, j).unwrap()
    }

    fn ideal(gens: &[(u64, u64)]) -> StaircaseIdeal {
        StaircaseIdeal::try_from(
            gens.iter()
                .map(|&(x, y)| Monomial::new(x, y))
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn noncomparability() {
        assert!(noncomparable(p(1, 3), p(2, 2)));
        for q in PairIndex::all(8) {
            assert!(!noncomparable(p(1, 1), q));
        }
        assert!(noncomparable(p(2, 2), p(1, 5)));
        assert!(!noncomparable(p(2, 2), p(1, 2)));
        // (1,3) is comparable to everything except (2,2).
        let others: Vec<_> = PairIndex::all(7)
            .filter(|&q| noncomparable(p(1, 3), q))
            .collect();
        assert_eq!(others, vec![p(2, 2)]);
    }

    #[test]
    fn nesting_matches_noncomparability() {
        for v in PairIndex::all(9) {
            for w in PairIndex::all(9) {
                assert_eq!(noncomparable(v, w), strictly_nested(v, w), "{v} {w}");
            }
        }
    }

    #[test]
    fn div_sets() {
        let i = tiny_square_ideal(7).unwrap();
        assert_eq!(div_set(&i, p(1, 1)).unwrap().members, vec![p(1, 1)]);

        let sq = ideal(&[(2, 0), (1, 1), (0, 2)]);
        assert_eq!(
            div_set(&sq, p(1, 3)).unwrap().members,
            vec![p(1, 3), p(2, 2)]
        );

        let six = tiny_square_ideal(6).unwrap();
        let d = div_set(&six, p(1, 3)).unwrap();
        assert_eq!(d.members, vec![p(1, 3), p(2, 2)]);
        assert!(d.satisfies_invariants());
    }

    #[test]
    fn gamma_examples() {
        let i = tiny_square_ideal(10).unwrap();
        assert_eq!(gamma_map(&i, p(1, 2)).unwrap().image, p(1, 2));
        assert_eq!(gamma_map(&i, p(10, 10)).unwrap().image, p(10, 10));
        let g = gamma_map(&i, p(1, 3)).unwrap();
        assert_eq!(g.image, p(2, 2));
        assert!(div_set(&i, p(1, 3)).unwrap().contains(g.image));
        // u_2 u_9 = u_1 u_10, named by the lex-least pair.
        let g = gamma_map(&i, p(2, 9)).unwrap();
        assert_eq!(g.image, p(1, 10));
        assert_eq!(g.image_monomial, Monomial::new(50, 50));
        assert!(gamma_map(&i, p(3, 11)).is_err());
    }

    #[test]
    fn square_pairs() {
        let max = ideal(&[(1, 0), (0, 1)]);
        assert_eq!(
            square_generator_pairs(&max).unwrap(),
            vec![p(1, 1), p(1, 2), p(2, 2)]
        );

        let i = tiny_square_ideal(10).unwrap();
        let mut pairs = square_generator_pairs(&i).unwrap();
        pairs.sort();
        let mut expected = vec![
            p(1, 1),
            p(1, 2),
            p(2, 2),
            p(1, 9),
            p(1, 10),
            p(2, 10),
            p(9, 9),
            p(9, 10),
            p(10, 10),
        ];
        expected.sort();
        assert_eq!(pairs, expected);

        // single degree: the 6 products of (x^3, x^2 y, y^3) are pairwise distinct
        let sd = ideal(&[(3, 0), (2, 1), (0, 3)]);
        assert_eq!(
            square_generator_pairs(&sd).unwrap(),
            vec![p(1, 1), p(1, 2), p(2, 2), p(1, 3), p(2, 3), p(3, 3)]
        );
    }
}
