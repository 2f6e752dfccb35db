#![allow(dead_code)]

use rand::seq::index::sample;
use rand::Rng;
use staircase::gamma::{div_set, noncomparable, strictly_nested, SquareGenerators};
use staircase::{minimalize_pairwise, Monomial, PairIndex, StaircaseIdeal};

/// A random staircase with `m` generators and exponents in `0..=max_exp`.
pub fn random_staircase<R: Rng>(rng: &mut R, m: usize, max_exp: u64) -> StaircaseIdeal {
    let pick = |rng: &mut R| -> Vec<u64> {
        let mut v: Vec<u64> = sample(rng, max_exp as usize + 1, m)
            .into_iter()
            .map(|k| k as u64)
            .collect();
        v.sort_unstable();
        v
    };
    let mut xs = pick(rng);
    xs.reverse();
    let ys = pick(rng);
    let ideal = StaircaseIdeal::from_exponents(&xs, &ys).unwrap();
    assert_eq!(ideal.mu(), m);
    ideal
}

/// All products `u·v` of generators, as a plain list.
pub fn all_products(a: &StaircaseIdeal, b: &StaircaseIdeal) -> Vec<Monomial> {
    let mut out = Vec::new();
    for u in a.gens() {
        for v in b.gens() {
            out.push(Monomial::new(u.xexp + v.xexp, u.yexp + v.yexp));
        }
    }
    out
}

/// Every normalized staircase with `m` generators and exponents `≤ bound`,
/// built by naive recursion over strictly monotone sequences.
pub fn naive_normalized_staircases(m: usize, bound: u64) -> Vec<(Vec<u64>, Vec<u64>)> {
    fn increasing(len: usize, lo: u64, hi: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for v in lo..=hi {
            prefix.push(v);
            increasing(len, v + 1, hi, prefix, out);
            prefix.pop();
        }
    }
    let mut tails = Vec::new();
    increasing(m - 1, 1, bound, &mut Vec::new(), &mut tails);
    let mut out = Vec::new();
    for xt in &tails {
        let mut xs: Vec<u64> = xt.iter().rev().copied().collect();
        xs.push(0);
        for yt in &tails {
            let mut ys = vec![0];
            ys.extend(yt);
            out.push((xs.clone(), ys));
        }
    }
    out
}

/// μ(I²) through the quadratic pairwise filter.
pub fn oracle_mu_square(xs: &[u64], ys: &[u64]) -> usize {
    let mut products = Vec::new();
    for i in 0..xs.len() {
        for j in 0..xs.len() {
            products.push(Monomial::new(xs[i] + xs[j], ys[i] + ys[j]));
        }
    }
    minimalize_pairwise(&products).len()
}

/// Minimum of μ(I²) and the lex-least `(a, b)` attaining it, by brute force.
pub fn oracle_min_mu_square(m: usize, bound: u64) -> (usize, Vec<u64>, u64) {
    let mut best: Option<(usize, Vec<u64>)> = None;
    let mut count = 0;
    for (xs, ys) in naive_normalized_staircases(m, bound) {
        count += 1;
        let mu = oracle_mu_square(&xs, &ys);
        let key: Vec<u64> = xs.iter().chain(&ys).copied().collect();
        if best.as_ref().is_none_or(|(bm, bk)| (mu, &key) < (*bm, bk)) {
            best = Some((mu, key));
        }
    }
    let (mu, key) = best.unwrap();
    (mu, key, count)
}

fn f(ideal: &StaircaseIdeal, p: PairIndex) -> Monomial {
    ideal.pair_product(p).unwrap()
}

/// Pairs `v ≠ v'` with `f(v) | f(v')` that are comparable in `V`.
pub fn antichain_lemma_violations(ideal: &StaircaseIdeal) -> usize {
    let pairs: Vec<PairIndex> = PairIndex::all(ideal.mu()).collect();
    let mut bad = 0;
    for &v in &pairs {
        for &w in &pairs {
            if v != w && f(ideal, v).divides(&f(ideal, w)) && !noncomparable(v, w) {
                bad += 1;
            }
        }
    }
    bad
}

/// Triples `v, v1 ≤ v2` where `f(v)` divides `f(v1)` and `f(v2)` but misses
/// some `f(v')` with `v1 ≤ v' ≤ v2`.
pub fn interval_lemma_violations(ideal: &StaircaseIdeal) -> usize {
    let pairs: Vec<PairIndex> = PairIndex::all(ideal.mu()).collect();
    let n = pairs.len();
    assert!(n <= 64);
    let products: Vec<Monomial> = pairs.iter().map(|&p| f(ideal, p)).collect();
    let mut bad = 0;
    for v in 0..n {
        let divided: u64 = (0..n)
            .filter(|&w| products[v].divides(&products[w]))
            .fold(0, |acc, w| acc | (1 << w));
        for v1 in (0..n).filter(|&w| divided >> w & 1 == 1) {
            for v2 in (0..n).filter(|&w| divided >> w & 1 == 1) {
                if !pairs[v1].le(&pairs[v2]) {
                    continue;
                }
                for t in 0..n {
                    let between = pairs[v1].le(&pairs[t]) && pairs[t].le(&pairs[v2]);
                    if between && divided >> t & 1 == 0 {
                        bad += 1;
                    }
                }
            }
        }
    }
    bad
}

/// Div-set invariants: reflexive, all other members strictly nested with the
/// target, and membership equal to a direct divisibility test.
pub fn div_set_violations(ideal: &StaircaseIdeal) -> usize {
    let mut bad = 0;
    for p in PairIndex::all(ideal.mu()) {
        let d = div_set(ideal, p).unwrap();
        if !d.satisfies_invariants() {
            bad += 1;
        }
        for q in PairIndex::all(ideal.mu()) {
            let direct = f(ideal, q).divides(&f(ideal, p));
            if direct != d.contains(q) {
                bad += 1;
            }
            if direct && q != p && !strictly_nested(p, q) {
                bad += 1;
            }
        }
    }
    bad
}

/// Gamma: image divides the source product, is a minimal generator of I²
/// named by its lex-least pair, lies in the div set, and γ∘γ = γ. Also
/// checks that every minimal generator of I² is hit.
pub fn gamma_violations(ideal: &StaircaseIdeal) -> usize {
    let square = ideal.product(ideal).unwrap();
    let table = SquareGenerators::new(ideal).unwrap();
    let mut hit = vec![false; square.mu()];
    let mut bad = 0;
    for p in PairIndex::all(ideal.mu()) {
        let g = table.gamma(p).unwrap();
        if !g.image_monomial.divides(&f(ideal, p)) {
            bad += 1;
        }
        match square.gens().iter().position(|h| *h == g.image_monomial) {
            Some(k) => hit[k] = true,
            None => bad += 1,
        }
        if f(ideal, g.image) != g.image_monomial {
            bad += 1;
        }
        let least = PairIndex::all(ideal.mu())
            .find(|&q| f(ideal, q) == g.image_monomial)
            .unwrap();
        if least != g.image {
            bad += 1;
        }
        if !div_set(ideal, p).unwrap().contains(g.image) {
            bad += 1;
        }
        if table.gamma(g.image).unwrap().image != g.image {
            bad += 1;
        }
    }
    bad + hit.iter().filter(|h| !**h).count()
}

/// Builds `I^k` as a balanced product tree.
pub fn balanced_power(ideal: &StaircaseIdeal, k: u32) -> StaircaseIdeal {
    if k == 1 {
        return ideal.clone();
    }
    let left = balanced_power(ideal, k / 2);
    let right = balanced_power(ideal, k - k / 2);
    left.product(&right).unwrap()
}
