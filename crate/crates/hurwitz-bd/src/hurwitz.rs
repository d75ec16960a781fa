//! Enumeration oracle and the user-facing Hurwitz-number API for the B and
//! D families, including the refined counts for the split D classes.

use crate::cutjoin::{hurwitz_series, HurwitzTable};
use crate::perm::{
    classify, compose, d_sign, reflections, Permutation, Profile, ReflKind, Sign,
};
use crate::schur::{spectral_hurwitz, PartitionPair};
use crate::{Error, Rat, Result};
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::str::FromStr;

/// Default cap on the number of sequence evaluations the oracle will attempt.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Computation route for [`hb`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Oracle,
    CutJoin,
    Spectral,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::CutJoin => "cutjoin",
            Method::Spectral => "spectral",
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Method::Oracle),
            "cutjoin" => Ok(Method::CutJoin),
            "spectral" => Ok(Method::Spectral),
            other => Err(Error::Parse(format!("unknown method {other:?}"))),
        }
    }
}

/// All interleavings of m reflections of type R with l of type L.
fn type_patterns(m: u32, l: u32) -> Vec<Vec<ReflKind>> {
    fn rec(cur: &mut Vec<ReflKind>, m_left: u32, l_left: u32, out: &mut Vec<Vec<ReflKind>>) {
        if m_left == 0 && l_left == 0 {
            out.push(cur.clone());
            return;
        }
        if m_left > 0 {
            cur.push(ReflKind::R);
            rec(cur, m_left - 1, l_left, out);
            cur.pop();
        }
        if l_left > 0 {
            cur.push(ReflKind::L);
            rec(cur, m_left, l_left - 1, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity((m + l) as usize), m, l, &mut out);
    out
}

/// Number of sequence evaluations the enumeration will perform, or None on
/// overflow.
fn enumeration_cost(n: u32, m: u32, l: u32) -> Option<u128> {
    let r_count = (n as u128) * (n as u128 - 1);
    let l_count = n as u128;
    let mut patterns: u128 = 1;
    for i in 0..m.min(l) {
        patterns = patterns.checked_mul((m + l - i) as u128)? / (i as u128 + 1);
    }
    let mut cost = patterns;
    for _ in 0..m {
        cost = cost.checked_mul(r_count)?;
    }
    for _ in 0..l {
        cost = cost.checked_mul(l_count)?;
    }
    Some(cost)
}

fn rec_products<K: Ord, C: Fn(&Permutation) -> K>(
    acc: Permutation,
    lists: &[&[Permutation]],
    classify: &C,
    counts: &mut BTreeMap<K, u64>,
) {
    match lists.split_first() {
        None => *counts.entry(classify(&acc)).or_insert(0) += 1,
        Some((first, rest)) => {
            for u in *first {
                let next = compose(&acc, u).expect("reflection sizes match");
                rec_products(next, rest, classify, counts);
            }
        }
    }
}

/// Enumerate every sequence of reflections with the given type pattern,
/// classify each product, and return raw sequence counts. Parallelized over
/// the first factor; merge is exact.
fn enumerate_pattern<K, C>(n: u32, pattern: &[ReflKind], classifier: &C) -> BTreeMap<K, u64>
where
    K: Ord + Send,
    C: Fn(&Permutation) -> K + Sync,
{
    let n_usize = n as usize;
    let r_list = reflections(n_usize, ReflKind::R);
    let l_list = reflections(n_usize, ReflKind::L);
    let list = |k: ReflKind| -> &[Permutation] {
        match k {
            ReflKind::R => &r_list,
            ReflKind::L => &l_list,
        }
    };
    if pattern.is_empty() {
        let mut counts = BTreeMap::new();
        counts.insert(classifier(&Permutation::identity(n_usize)), 1);
        return counts;
    }
    let pos_lists: Vec<&[Permutation]> = pattern[1..].iter().map(|&k| list(k)).collect();
    list(pattern[0])
        .par_iter()
        .map(|first| {
            let mut counts = BTreeMap::new();
            rec_products(first.clone(), &pos_lists, classifier, &mut counts);
            counts
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        })
}

/// Enumerate every interleaving pattern of m R's with l L's, asserting that
/// all patterns give the same class counts (they do: R-reflections and
/// L-reflections each form a conjugacy class, so conjugating re-sorts any
/// word without changing type counts), and return the per-pattern counts.
fn enumerate_products<K, C>(n: u32, m: u32, l: u32, classifier: C) -> BTreeMap<K, u64>
where
    K: Ord + Send + Eq + std::fmt::Debug,
    C: Fn(&Permutation) -> K + Sync,
{
    let patterns = type_patterns(m, l);
    let maps: Vec<BTreeMap<K, u64>> = patterns
        .par_iter()
        .map(|pat| enumerate_pattern(n, pat, &classifier))
        .collect();
    for w in maps.windows(2) {
        assert_eq!(w[0], w[1], "interleaving patterns must give equal class counts");
    }
    maps.into_iter().next().expect("at least one pattern")
}

/// Enumeration oracle: h^B_{m,l,λ,μ} = (1/n!)·#{sequences of m R-reflections
/// and l L-reflections in one fixed type pattern multiplying into C_{λ|μ}}.
/// All C(m+l,m) interleaving patterns are enumerated and checked to give the
/// same counts, so the count of all interleaved sequences is C(m+l,m)·n!
/// times an entry. Refuses to run past `budget` sequence evaluations.
pub fn oracle_hb_with_budget(n: u32, m: u32, l: u32, budget: u64) -> Result<HurwitzTable> {
    if n < 1 {
        return Err(Error::Precondition("oracle needs n >= 1".into()));
    }
    let required = enumeration_cost(n, m, l).unwrap_or(u128::MAX);
    if required > budget as u128 {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let counts = enumerate_products(n, m, l, |x| {
        classify(x).expect("product of reflections lies in the group")
    });
    let mut nfact = Rat::one();
    for k in 1..=n {
        nfact *= Rat::from_integer(k.into());
    }
    let entries: BTreeMap<(u32, u32, Profile), Rat> = counts
        .into_iter()
        .map(|(profile, c)| ((m, l, profile), Rat::from_integer(c.into()) / &nfact))
        .collect();
    Ok(HurwitzTable::from_entries(n, m, l, entries))
}

/// [`oracle_hb_with_budget`] at the default budget.
pub fn oracle_hb(n: u32, m: u32, l: u32) -> Result<HurwitzTable> {
    oracle_hb_with_budget(n, m, l, DEFAULT_BUDGET)
}

/// One Hurwitz number h^B_{m,l,λ,μ} by the chosen method. The three methods
/// agree exactly on their common domain; this is dispatch only.
pub fn hb(n: u32, m: u32, l: u32, profile: &Profile, method: Method) -> Result<Rat> {
    profile.validate(n)?;
    if profile.sign.is_some() {
        return Err(Error::MalformedProfile(
            "a sign is not meaningful for a B-family class".into(),
        ));
    }
    match method {
        Method::Oracle => Ok(oracle_hb(n, m, l)?.entry(m, l, profile)),
        Method::CutJoin => Ok(hurwitz_series(n, m, l)?.entry(m, l, profile)),
        Method::Spectral => {
            let pair = PartitionPair::new(profile.lambda.clone(), profile.mu.clone());
            spectral_hurwitz(n, m, l, &pair)
        }
    }
}

/// D-family Hurwitz number h^D_{m,λ,μ} = h^B_{m,0,λ,μ}, defined only when
/// the class meets D_n (#μ even).
pub fn hd(n: u32, m: u32, profile: &Profile) -> Result<Rat> {
    if profile.mu.len() % 2 == 1 {
        return Err(Error::OddMuCount);
    }
    let unsigned = profile.unsigned();
    hb(n, m, 0, &unsigned, Method::CutJoin)
}

/// Refined D counts for a split class C±_{λ|∅} (λ all even, |λ| = n):
/// R-reflection products split by the sign invariant. The two components
/// are asserted equal (conjugation by l₁ swaps them bijectively).
pub fn hd_refined(n: u32, m: u32, lambda: &crate::partition::Partition) -> Result<(Rat, Rat)> {
    if lambda.weight() != n {
        return Err(Error::RankMismatch(lambda.weight() as usize, n as usize));
    }
    if lambda.parts().iter().any(|p| p % 2 == 1) {
        return Err(Error::Precondition(
            "refined D count needs every part of lambda even".into(),
        ));
    }
    let required = enumeration_cost(n, m, 0).unwrap_or(u128::MAX);
    if required > DEFAULT_BUDGET as u128 {
        return Err(Error::BudgetExceeded { required, budget: DEFAULT_BUDGET });
    }
    let target = Profile::new(lambda.clone(), crate::partition::Partition::empty());
    let counts = enumerate_products(n, m, 0, |x| {
        let profile = classify(x).expect("product of reflections lies in the group");
        if profile == target {
            Some(d_sign(x).expect("all-even class splits"))
        } else {
            None
        }
    });
    let mut nfact = Rat::one();
    for k in 1..=n {
        nfact *= Rat::from_integer(k.into());
    }
    let get = |s: Sign| {
        counts
            .get(&Some(s))
            .map(|&c| Rat::from_integer(c.into()) / &nfact)
            .unwrap_or_else(Rat::zero)
    };
    let plus = get(Sign::Plus);
    let minus = get(Sign::Minus);
    assert_eq!(plus, minus, "refined D components must agree");
    Ok((plus, minus))
}
