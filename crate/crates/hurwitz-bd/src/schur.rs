//! Schur polynomials in power sums, the two-family Schur basis s_{λ|μ},
//! closed-form eigenvalues, principal specialization, the spectral formula
//! for Hurwitz numbers, and the checker for the convolution relation
//! between the two-family and classical Hurwitz numbers.

use crate::cutjoin::{cj_classical, hurwitz_series};
use crate::partition::{partitions_of, Partition};
use crate::perm::{profiles_of_rank, Profile};
use crate::poly::{Family, Monomial, PQPoly, Side};
use crate::{Error, Rat, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// An unsigned pair of partitions indexing the two-family Schur basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PartitionPair {
    pub lambda: Partition,
    pub mu: Partition,
}

impl PartitionPair {
    pub fn new(lambda: Partition, mu: Partition) -> Self {
        PartitionPair { lambda, mu }
    }

    pub fn weight(&self) -> u32 {
        self.lambda.weight() + self.mu.weight()
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.lambda, self.mu)
    }
}

/// Complete homogeneous polynomials h_0..h_max in power sums of the first
/// variable list, by the Newton recursion k·h_k = Σ_{r=1..k} p_r h_{k−r}.
fn complete_homogeneous(max: u32) -> Vec<PQPoly> {
    let mut hs = vec![PQPoly::one(Family::PQ)];
    for k in 1..=max {
        let mut acc = PQPoly::zero(Family::PQ);
        for r in 1..=k {
            let term = hs[(k - r) as usize]
                .mul(&PQPoly::var(Family::PQ, Side::First, r))
                .expect("same family");
            acc = acc.add(&term).expect("same family");
        }
        hs.push(acc.scale(&Rat::new(1.into(), k.into())));
    }
    hs
}

/// Determinant by cofactor expansion along the first row; sizes here are
/// bounded by the number of parts of a partition.
fn determinant(mat: &[Vec<PQPoly>]) -> PQPoly {
    let n = mat.len();
    if n == 0 {
        return PQPoly::one(Family::PQ);
    }
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut acc = PQPoly::zero(Family::PQ);
    for (j, pivot) in mat[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<PQPoly>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let mut term = pivot.mul(&determinant(&minor)).expect("same family");
        if j % 2 == 1 {
            term = term.scale(&-Rat::one());
        }
        acc = acc.add(&term).expect("same family");
    }
    acc
}

/// Schur polynomial s_λ in power sums p, via the Jacobi–Trudi determinant
/// det(h_{λ_i − i + j}).
pub fn schur_p(lambda: &Partition) -> PQPoly {
    let parts = lambda.parts();
    let ell = parts.len();
    if ell == 0 {
        return PQPoly::one(Family::PQ);
    }
    let hs = complete_homogeneous(lambda.weight());
    let entry = |i: usize, j: usize| -> PQPoly {
        let k = parts[i] as i64 - i as i64 + j as i64;
        if k < 0 {
            PQPoly::zero(Family::PQ)
        } else {
            hs.get(k as usize).cloned().unwrap_or_else(|| PQPoly::zero(Family::PQ))
        }
    };
    let mat: Vec<Vec<PQPoly>> =
        (0..ell).map(|i| (0..ell).map(|j| entry(i, j)).collect()).collect();
    determinant(&mat)
}

/// The two-family Schur polynomial s_{λ|μ}(p, q) = s_λ((p+q)/2)·s_μ((p−q)/2),
/// fully expanded in p, q.
pub fn schur_bd(pair: &PartitionPair) -> PQPoly {
    let half = Rat::new(1.into(), 2.into());
    let sum_half = |i: u32| {
        PQPoly::var(Family::PQ, Side::First, i)
            .add(&PQPoly::var(Family::PQ, Side::Second, i))
            .expect("same family")
            .scale(&half)
    };
    let diff_half = |i: u32| {
        PQPoly::var(Family::PQ, Side::First, i)
            .sub(&PQPoly::var(Family::PQ, Side::Second, i))
            .expect("same family")
            .scale(&half)
    };
    let s_lam = schur_p(&pair.lambda).substitute(Family::PQ, |_, i| sum_half(i));
    let s_mu = schur_p(&pair.mu).substitute(Family::PQ, |_, i| diff_half(i));
    s_lam.mul(&s_mu).expect("same family")
}

/// Closed-form eigenvalues of (CJ₁, CJ₂) on s_{λ|μ}:
/// e1 = Σ λ_i(λ_i−2i+1) + μ_i(μ_i−2i+1), e2 = |λ| − |μ|.
pub fn eigenvalues(pair: &PartitionPair) -> (Rat, Rat) {
    let phi = |p: &Partition| -> i64 {
        p.parts()
            .iter()
            .enumerate()
            .map(|(i, &part)| {
                let part = part as i64;
                let i = i as i64 + 1;
                part * (part - 2 * i + 1)
            })
            .sum()
    };
    let e1 = phi(&pair.lambda) + phi(&pair.mu);
    let e2 = pair.lambda.weight() as i64 - pair.mu.weight() as i64;
    (Rat::from_integer(e1.into()), Rat::from_integer(e2.into()))
}

/// φ(λ) = Σ λ_i(λ_i−2i+1), the classical cut-and-join eigenvalue.
pub fn phi(lambda: &Partition) -> Rat {
    eigenvalues(&PartitionPair::new(lambda.clone(), Partition::empty())).0
}

/// Principal specialization: schur_p(λ) at p = (1, 0, 0, …) = dim(λ)/|λ|!.
pub fn principal(lambda: &Partition) -> Rat {
    schur_p(lambda).eval(&[Rat::one()], &[])
}

/// Exact binomial coefficient.
fn binom(n: u64, k: u64) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= Rat::new(BigInt::from(n - i), BigInt::from(i + 1));
    }
    acc
}

fn rat_pow(base: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= base.clone();
    }
    acc
}

/// The spectral expansion Σ_{λ′,μ′⊢n} e1^m e2^ℓ · principal(λ′)principal(μ′)
/// · s_{λ′|μ′}(p,q), whose coefficients are the rank-n Hurwitz numbers.
/// The specialization is per-factor: principal(λ′)·principal(μ′).
pub fn spectral_layer(n: u32, m: u32, l: u32) -> PQPoly {
    let mut acc = PQPoly::zero(Family::PQ);
    for k in 0..=n {
        for lam in partitions_of(k) {
            for mu in partitions_of(n - k) {
                let pair = PartitionPair::new(lam.clone(), mu);
                let (e1, e2) = eigenvalues(&pair);
                let scale =
                    rat_pow(&e1, m) * rat_pow(&e2, l) * principal(&pair.lambda) * principal(&pair.mu);
                if scale.is_zero() {
                    continue;
                }
                acc = acc.add(&schur_bd(&pair).scale(&scale)).expect("same family");
            }
        }
    }
    acc
}

/// h^B_{m,ℓ,λ,μ} by the spectral formula: the coefficient of p_λ q_μ in
/// [`spectral_layer`].
pub fn spectral_hurwitz(n: u32, m: u32, l: u32, target: &PartitionPair) -> Result<Rat> {
    if target.weight() != n {
        return Err(Error::RankMismatch(target.weight() as usize, n as usize));
    }
    let mono = Monomial::from_partitions(&target.lambda, &target.mu);
    Ok(spectral_layer(n, m, l).coeff(&mono))
}

/// Coefficient of x^g in (1+x)^α (1−x)^β.
pub fn f_coeff(alpha: u32, beta: u32, g: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..=g.min(alpha) {
        let j = g - i;
        if j > beta {
            continue;
        }
        let c = binom(alpha as u64, i as u64) * binom(beta as u64, j as u64);
        let c = c.to_integer();
        if j % 2 == 0 {
            acc += c;
        } else {
            acc -= c;
        }
    }
    acc
}

/// Classical one-family Hurwitz numbers h^A_{m,λ} generated by iterating the
/// classical cut-and-join operator on p₁^k/k!: h^A_{m,λ} = [p_λ] CJ^m(p₁^k/k!).
pub fn classical_hurwitz(k: u32, m_max: u32) -> Vec<BTreeMap<Partition, Rat>> {
    let mut kfact = Rat::one();
    for i in 1..=k {
        kfact *= Rat::from_integer(i.into());
    }
    let mut layer = PQPoly::var(Family::PQ, Side::First, 1).pow(k).scale(&kfact.recip());
    if k == 0 {
        layer = PQPoly::one(Family::PQ);
    }
    let mut out = Vec::new();
    for m in 0..=m_max {
        let mut map = BTreeMap::new();
        for (mono, c) in layer.terms() {
            map.insert(mono.to_profile().lambda, c.clone());
        }
        out.push(map);
        if m < m_max {
            layer = cj_classical(&layer);
        }
    }
    out
}

/// One row of the convolution-relation report.
#[derive(Clone, Debug)]
pub struct RelationRow {
    pub profile: Profile,
    pub formula: Rat,
    pub series: Rat,
    pub matches: bool,
}

/// Comparison of the convolution formula for h^B_{m,0,λ,μ} (in terms of
/// classical Hurwitz numbers) with the cut-and-join series.
#[derive(Clone, Debug)]
pub struct RelationReport {
    pub n: u32,
    pub m: u32,
    pub rows: Vec<RelationRow>,
}

impl RelationReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "lambda": r.profile.lambda.parts(),
                    "mu": r.profile.mu.parts(),
                    "formula": r.formula.to_string(),
                    "series": r.series.to_string(),
                    "match": r.matches,
                })
            })
            .collect();
        serde_json::json!({ "n": self.n, "m": self.m, "rows": rows })
    }
}

/// Evaluate the convolution formula
///   h^B_{m,0,λ,μ} = Σ_{λ′∪μ′ = λ∪μ, m₁+m₂=m} h^A_{m₁,λ′} h^A_{m₂,μ′} / 2^{#λ+#μ}
///                   · C(m,m₁) · C(n,|λ′|) · Π_k f^{γ_k}_{α_k β_k}
/// for every rank-n profile and compare against the cut-and-join series.
/// α, β, γ are the multiplicities of k in λ′, μ′, μ. This is a validation
/// report: rows record agreement, they are not asserted.
pub fn classical_relation_check(n: u32, m: u32) -> Result<RelationReport> {
    let series = hurwitz_series(n, m, 0)?;
    let h_a: Vec<Vec<BTreeMap<Partition, Rat>>> =
        (0..=n).map(|k| classical_hurwitz(k, m)).collect();
    let h_a_at = |m1: u32, lam: &Partition| -> Rat {
        h_a[lam.weight() as usize][m1 as usize]
            .get(lam)
            .cloned()
            .unwrap_or_else(Rat::zero)
    };
    let mut rows = Vec::new();
    for profile in profiles_of_rank(n) {
        let lambda = &profile.lambda;
        let mu = &profile.mu;
        // Multiset union λ ∪ μ, as multiplicities per part size.
        let mut total_mult: BTreeMap<u32, u32> = BTreeMap::new();
        for &part in lambda.parts().iter().chain(mu.parts()) {
            *total_mult.entry(part).or_insert(0) += 1;
        }
        let sizes: Vec<u32> = total_mult.keys().copied().collect();
        let totals: Vec<u32> = sizes.iter().map(|k| total_mult[k]).collect();
        let mut formula = Rat::zero();
        // Choose α_k ≤ t_k for each part size k (λ′ takes α_k parts of size k).
        let mut alphas = vec![0u32; sizes.len()];
        loop {
            let mut lam_parts = Vec::new();
            let mut mu_parts = Vec::new();
            let mut f_product = Rat::one();
            for (idx, &k) in sizes.iter().enumerate() {
                let alpha = alphas[idx];
                let beta = totals[idx] - alpha;
                let gamma = mu.multiplicity(k);
                lam_parts.extend(std::iter::repeat(k).take(alpha as usize));
                mu_parts.extend(std::iter::repeat(k).take(beta as usize));
                f_product *= Rat::from_integer(f_coeff(alpha, beta, gamma));
            }
            if !f_product.is_zero() {
                let lam_p = Partition::from_unsorted(lam_parts);
                let mu_p = Partition::from_unsorted(mu_parts);
                let mut inner = Rat::zero();
                for m1 in 0..=m {
                    let term = h_a_at(m1, &lam_p) * h_a_at(m - m1, &mu_p) * binom(m as u64, m1 as u64);
                    inner += term;
                }
                formula += inner * f_product * binom(n as u64, lam_p.weight() as u64);
            }
            // Advance the multi-index.
            let mut pos = 0;
            loop {
                if pos == alphas.len() {
                    break;
                }
                if alphas[pos] < totals[pos] {
                    alphas[pos] += 1;
                    break;
                }
                alphas[pos] = 0;
                pos += 1;
            }
            if pos == alphas.len() {
                break;
            }
        }
        let denom = rat_pow(&Rat::from_integer(2.into()), (lambda.len() + mu.len()) as u32);
        formula /= denom;
        let series_value = series.entry(m, 0, &profile);
        let matches = formula == series_value;
        rows.push(RelationRow { profile, formula, series: series_value, matches });
    }
    Ok(RelationReport { n, m, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutjoin::{cj1, cj2};
    use crate::poly::parse_poly;

    fn part(parts: &[u32]) -> Partition {
        Partition::from_unsorted(parts.to_vec())
    }

    fn pair(lambda: &[u32], mu: &[u32]) -> PartitionPair {
        PartitionPair::new(part(lambda), part(mu))
    }

    fn pq(text: &str) -> PQPoly {
        parse_poly(Family::PQ, text).unwrap()
    }

    #[test]
    fn schur_p_small() {
        assert_eq!(schur_p(&part(&[])), PQPoly::one(Family::PQ));
        assert_eq!(schur_p(&part(&[1])), pq("p[1]"));
        assert_eq!(schur_p(&part(&[2])), pq("1/2*p[2] + 1/2*p[1]^2"));
        assert_eq!(schur_p(&part(&[1, 1])), pq("-1/2*p[2] + 1/2*p[1]^2"));
        // Hook of weight 3: s_(2,1) = (p₁³ − p₃)/3.
        assert_eq!(schur_p(&part(&[2, 1])), pq("-1/3*p[3] + 1/3*p[1]^3"));
    }

    #[test]
    fn schur_bd_small() {
        assert_eq!(schur_bd(&pair(&[1], &[])), pq("1/2*p[1] + 1/2*q[1]"));
        assert_eq!(schur_bd(&pair(&[], &[1])), pq("1/2*p[1] - 1/2*q[1]"));
        assert_eq!(schur_bd(&pair(&[], &[])), PQPoly::one(Family::PQ));
    }

    #[test]
    fn eigenvalue_examples() {
        let as_i = |r: &Rat| r.to_integer();
        let (e1, e2) = eigenvalues(&pair(&[2], &[]));
        assert_eq!((as_i(&e1), as_i(&e2)), (2.into(), 2.into()));
        let (e1, e2) = eigenvalues(&pair(&[1], &[]));
        assert_eq!((as_i(&e1), as_i(&e2)), (0.into(), 1.into()));
        let (e1, e2) = eigenvalues(&pair(&[], &[1]));
        assert_eq!((as_i(&e1), as_i(&e2)), (0.into(), (-1).into()));
    }

    #[test]
    fn eigenvector_property_small_weights() {
        for w in 0..=5u32 {
            for k in 0..=w {
                for lam in partitions_of(k) {
                    for mu in partitions_of(w - k) {
                        let pr = PartitionPair::new(lam.clone(), mu.clone());
                        let s = schur_bd(&pr);
                        let (e1, e2) = eigenvalues(&pr);
                        assert_eq!(cj1(&s).unwrap(), s.scale(&e1), "CJ1 at {pr}");
                        assert_eq!(cj2(&s).unwrap(), s.scale(&e2), "CJ2 at {pr}");
                    }
                }
            }
        }
    }

    #[test]
    fn classical_eigenvector_property() {
        for w in 0..=6u32 {
            for lam in partitions_of(w) {
                let s = schur_p(&lam);
                assert_eq!(cj_classical(&s), s.scale(&phi(&lam)), "CJ at {lam}");
            }
        }
    }

    #[test]
    fn principal_values() {
        assert_eq!(principal(&part(&[])), Rat::one());
        assert_eq!(principal(&part(&[1])), Rat::one());
        assert_eq!(principal(&part(&[2])), Rat::new(1.into(), 2.into()));
        assert_eq!(principal(&part(&[1, 1])), Rat::new(1.into(), 2.into()));
        assert_eq!(principal(&part(&[3])), Rat::new(1.into(), 6.into()));
        assert_eq!(principal(&part(&[2, 1])), Rat::new(1.into(), 3.into()));
        assert_eq!(principal(&part(&[1, 1, 1])), Rat::new(1.into(), 6.into()));
    }

    #[test]
    fn cauchy_identity_truncated() {
        // Σ s_{λ|μ}·principal(λ)·principal(μ) = Σ_k p₁^k/k! through weight 6.
        let max = 6u32;
        let mut lhs = PQPoly::zero(Family::PQ);
        for w in 0..=max {
            for k in 0..=w {
                for lam in partitions_of(k) {
                    for mu in partitions_of(w - k) {
                        let pr = PartitionPair::new(lam.clone(), mu.clone());
                        let scale = principal(&pr.lambda) * principal(&pr.mu);
                        lhs = lhs.add(&schur_bd(&pr).scale(&scale)).unwrap();
                    }
                }
            }
        }
        let mut rhs = PQPoly::zero(Family::PQ);
        let mut kfact = Rat::one();
        for k in 0..=max {
            if k > 0 {
                kfact *= Rat::from_integer(k.into());
            }
            rhs = rhs
                .add(&PQPoly::var(Family::PQ, Side::First, 1).pow(k).scale(&kfact.recip()))
                .unwrap();
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn f_coeff_examples() {
        assert_eq!(f_coeff(3, 2, 0), 1.into());
        assert_eq!(f_coeff(1, 1, 1), 0.into());
        assert_eq!(f_coeff(1, 1, 2), (-1).into());
        assert_eq!(f_coeff(2, 0, 1), 2.into());
        assert_eq!(f_coeff(0, 2, 1), (-2).into());
        assert_eq!(f_coeff(0, 0, 3), 0.into());
    }

    #[test]
    fn spectral_examples() {
        let one = Rat::one();
        assert_eq!(spectral_hurwitz(1, 0, 1, &pair(&[], &[1])).unwrap(), one);
        assert_eq!(spectral_hurwitz(1, 0, 0, &pair(&[1], &[])).unwrap(), one);
        assert_eq!(spectral_hurwitz(2, 1, 0, &pair(&[2], &[])).unwrap(), one);
        assert!(spectral_hurwitz(2, 0, 0, &pair(&[1], &[])).is_err());
    }

    #[test]
    fn spectral_matches_series() {
        for n in 1..=3u32 {
            let table = hurwitz_series(n, 3, 3).unwrap();
            for m in 0..=3u32 {
                for l in 0..=3u32 {
                    if m + l > 3 {
                        continue;
                    }
                    let layer = spectral_layer(n, m, l);
                    assert_eq!(layer, table.layer(m, l), "n={n} m={m} l={l}");
                }
            }
        }
    }

    #[test]
    fn classical_hurwitz_small() {
        // k=2: CJ(p₁²/2) = p₂, CJ(p₂) = 2p₁² (the unhalved operator).
        let t = classical_hurwitz(2, 2);
        assert_eq!(t[0][&part(&[1, 1])], Rat::new(1.into(), 2.into()));
        assert_eq!(t[1][&part(&[2])], Rat::one());
        assert_eq!(t[2][&part(&[1, 1])], Rat::from_integer(2.into()));
        // k=0: h^A_{0,∅} = 1, and the operator annihilates constants.
        let t = classical_hurwitz(0, 1);
        assert_eq!(t[0][&Partition::empty()], Rat::one());
        assert!(t[1].is_empty());
    }

    #[test]
    fn relation_check_small() {
        // n=1, m=0: ((1)|∅) gets ½+½ = 1; both rows match the series.
        let report = classical_relation_check(1, 0).unwrap();
        assert!(report.all_match());
        let row = report
            .rows
            .iter()
            .find(|r| r.profile.lambda == part(&[1]))
            .unwrap();
        assert_eq!(row.formula, Rat::one());
        // n=1, m=1: both sides vanish identically.
        let report = classical_relation_check(1, 1).unwrap();
        assert!(report.all_match());
        assert!(report.rows.iter().all(|r| r.formula.is_zero() && r.series.is_zero()));
        // n=2, m=1: full table; record agreement per profile.
        let report = classical_relation_check(2, 1).unwrap();
        assert_eq!(report.rows.len(), 5);
        assert!(report.all_match(), "{:?}", report.to_json().to_string());
        let json = report.to_json();
        assert_eq!(json["rows"].as_array().unwrap().len(), 5);
    }
}
