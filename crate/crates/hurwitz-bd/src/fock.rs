//! Truncated charge-zero Fock space, its two-particle tensor square, the
//! wedge operators a_k, b_k, c_k, energy and cut-and-join operators, and the
//! boson-fermion correspondence w_λ ↦ s_λ.
//!
//! The Fock set of a partition is Φ_λ = {i − ½ − λ_i | i ≥ 1} ⊂ ℤ+½;
//! half-integers are stored as doubled integers. a_k moves one occupied slot
//! v to v − k with sign (−1)^{#occupied slots passed}, so a_k raises the
//! energy |λ| by k when k > 0 and lowers it by −k when k < 0.
//!
//! Within any index triple (i, j, k), i+j+k = 0 and all nonzero, no pair of
//! indices sums to zero, so the three wedge operators commute pairwise.
//! Cubic operators are therefore applied with negative indices first, which
//! keeps every intermediate state inside the input energy bound: no
//! headroom above the vector's own energy is ever needed.

use crate::cutjoin;
use crate::partition::Partition;
use crate::poly::{Family, PQPoly, Side};
use crate::schur::schur_p;
use crate::{Error, Rat, Result};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// a_k on one basis vector w_λ: the list of (λ′, ±1) with Φ_{λ′} obtained
/// from Φ_λ by moving one element v to v − k.
fn a_on_partition(k: i64, lambda: &Partition) -> Vec<(Partition, i64)> {
    let len = lambda.len();
    let span = len + k.unsigned_abs() as usize + 2;
    // Doubled Fock set prefix: 2c_i = 2i − 1 − 2λ_i for i = 1..=span.
    let occ: BTreeSet<i64> = (1..=span)
        .map(|i| 2 * i as i64 - 1 - 2 * lambda.parts().get(i - 1).copied().unwrap_or(0) as i64)
        .collect();
    let threshold = 2 * span as i64 + 1;
    let member = |x: i64| x >= threshold || occ.contains(&x);
    let mut out = Vec::new();
    for &v in &occ {
        let w = v - 2 * k;
        if member(w) {
            continue;
        }
        let d = if k > 0 {
            occ.range(w..v).count()
        } else {
            occ.range(v + 1..=w).count()
        };
        let mut slots: Vec<i64> = occ.iter().copied().filter(|&u| u != v).collect();
        slots.push(w);
        slots.sort_unstable();
        let mut parts = Vec::new();
        for (idx, c) in slots.iter().enumerate() {
            let part = (2 * (idx as i64 + 1) - 1 - c) / 2;
            debug_assert!(part >= 0, "slot arithmetic must give a partition");
            if part > 0 {
                parts.push(part as u32);
            }
        }
        let sign = if d % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_unsorted(parts), sign));
    }
    out
}

/// Sparse vector in the charge-zero Fock space with basis w_λ, truncated to
/// energy |λ| ≤ N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector {
    truncation: u32,
    terms: BTreeMap<Partition, Rat>,
}

impl FockVector {
    pub fn zero(truncation: u32) -> Self {
        FockVector { truncation, terms: BTreeMap::new() }
    }

    /// The vacuum w_∅.
    pub fn vacuum(truncation: u32) -> Self {
        Self::basis(Partition::empty(), truncation).expect("vacuum has energy 0")
    }

    pub fn basis(lambda: Partition, truncation: u32) -> Result<Self> {
        if lambda.weight() > truncation {
            return Err(Error::TruncationOverflow { needed: lambda.weight(), cap: truncation });
        }
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Rat::one());
        Ok(FockVector { truncation, terms })
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rat {
        self.terms.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: Rat) -> Result<()> {
        if lambda.weight() > self.truncation {
            return Err(Error::TruncationOverflow { needed: lambda.weight(), cap: self.truncation });
        }
        let entry = self.terms.entry(lambda).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    pub fn add(&self, other: &FockVector) -> Result<FockVector> {
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FockVector) -> Result<FockVector> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, s: &Rat) -> FockVector {
        if s.is_zero() {
            return FockVector::zero(self.truncation);
        }
        let terms = self.terms.iter().map(|(l, c)| (l.clone(), c * s)).collect();
        FockVector { truncation: self.truncation, terms }
    }

    /// Maximum energy among stored terms.
    pub fn max_energy(&self) -> u32 {
        self.terms.keys().map(|l| l.weight()).max().unwrap_or(0)
    }
}

/// Wedge operator a_k (k ≠ 0, |k| ≤ N): raises energy by k for k > 0,
/// lowers it by −k for k < 0. Errors when a result would exceed the
/// truncation.
pub fn a_apply(k: i64, v: &FockVector) -> Result<FockVector> {
    if k == 0 {
        return Err(Error::Precondition("a_0 is not defined".into()));
    }
    if k.unsigned_abs() > v.truncation as u64 {
        return Err(Error::Precondition(format!(
            "index {k} exceeds the truncation {}",
            v.truncation
        )));
    }
    let mut out = FockVector::zero(v.truncation);
    for (lambda, c) in &v.terms {
        let needed = lambda.weight() as i64 + k;
        if needed > v.truncation as i64 {
            return Err(Error::TruncationOverflow {
                needed: needed as u32,
                cap: v.truncation,
            });
        }
        for (target, sign) in a_on_partition(k, lambda) {
            out.add_term(target, c * Rat::from_integer(sign.into()))?;
        }
    }
    Ok(out)
}

/// Compose a_ chain right-to-left: `a_apply_chain(&[i, j], v) = a_i(a_j(v))`.
fn a_apply_chain(ks: &[i64], v: &FockVector) -> Result<FockVector> {
    let mut acc = v.clone();
    for &k in ks.iter().rev() {
        acc = a_apply(k, &acc)?;
    }
    Ok(acc)
}

/// Energy operator Σ_{i≥1} a_i a_{−i}; basis vectors are eigenvectors with
/// eigenvalue |λ|.
pub fn energy_apply(v: &FockVector) -> Result<FockVector> {
    let mut out = FockVector::zero(v.truncation);
    for i in 1..=v.max_energy().max(1) as i64 {
        out = out.add(&a_apply_chain(&[i, -i], v)?)?;
    }
    Ok(out)
}

/// Cut-and-join operator C = ⅓ Σ_{i+j+k=0, i,j,k≠0} a_i a_j a_k, normalized
/// so that under the boson-fermion correspondence Ĉ is the classical
/// cut-and-join operator (the unnormalized ordered sum gives 3Ĉ, each
/// unordered index triple appearing 3! or 3 times). Negative indices are
/// applied first (the three factors commute), so intermediate energies never
/// exceed the input's.
pub fn cut_join_apply(v: &FockVector) -> Result<FockVector> {
    let mut out = FockVector::zero(v.truncation);
    let top = v.max_energy();
    for c in 1..=top as i64 {
        for a in 1..=c / 2 {
            let b = c - a;
            let mult = Rat::from_integer(if a == b { 1.into() } else { 2.into() });
            // {a, b, −c}: lower by c, raise by b then a.
            let one_neg = a_apply_chain(&[a, b, -c], v)?;
            // {−a, −b, c}: lower by a and b, raise by c.
            let two_neg = a_apply_chain(&[c, -a, -b], v)?;
            out = out.add(&one_neg.add(&two_neg)?.scale(&mult))?;
        }
    }
    Ok(out)
}

/// Boson-fermion correspondence: w_λ ↦ s_λ in power sums p.
pub fn bf(v: &FockVector) -> PQPoly {
    let mut out = PQPoly::zero(Family::PQ);
    for (lambda, c) in &v.terms {
        out = out.add(&schur_p(lambda).scale(c)).expect("same family");
    }
    out
}

/// Sparse vector in the two-particle Fock space with basis w_λ ⊗ w_μ,
/// truncated on total energy |λ|+|μ| ≤ N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector2 {
    truncation: u32,
    terms: BTreeMap<(Partition, Partition), Rat>,
}

impl FockVector2 {
    pub fn zero(truncation: u32) -> Self {
        FockVector2 { truncation, terms: BTreeMap::new() }
    }

    /// The vacuum w_∅ ⊗ w_∅.
    pub fn vacuum(truncation: u32) -> Self {
        Self::basis(Partition::empty(), Partition::empty(), truncation)
            .expect("vacuum has energy 0")
    }

    pub fn basis(lambda: Partition, mu: Partition, truncation: u32) -> Result<Self> {
        let energy = lambda.weight() + mu.weight();
        if energy > truncation {
            return Err(Error::TruncationOverflow { needed: energy, cap: truncation });
        }
        let mut terms = BTreeMap::new();
        terms.insert((lambda, mu), Rat::one());
        Ok(FockVector2 { truncation, terms })
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition, mu: &Partition) -> Rat {
        self.terms
            .get(&(lambda.clone(), mu.clone()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, lambda: Partition, mu: Partition, coeff: Rat) -> Result<()> {
        let energy = lambda.weight() + mu.weight();
        if energy > self.truncation {
            return Err(Error::TruncationOverflow { needed: energy, cap: self.truncation });
        }
        let entry = self.terms.entry((lambda, mu)).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    pub fn add(&self, other: &FockVector2) -> Result<FockVector2> {
        let mut out = self.clone();
        for ((lambda, mu), c) in &other.terms {
            out.add_term(lambda.clone(), mu.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FockVector2) -> Result<FockVector2> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, s: &Rat) -> FockVector2 {
        if s.is_zero() {
            return FockVector2::zero(self.truncation);
        }
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect();
        FockVector2 { truncation: self.truncation, terms }
    }

    pub fn max_energy(&self) -> u32 {
        self.terms.keys().map(|(l, m)| l.weight() + m.weight()).max().unwrap_or(0)
    }

    /// Apply a one-factor operator to the chosen tensor slot.
    fn apply_factor<F>(&self, side: Side, op: F) -> Result<FockVector2>
    where
        F: Fn(&FockVector) -> Result<FockVector>,
    {
        let mut out = FockVector2::zero(self.truncation);
        for ((lambda, mu), c) in &self.terms {
            let acted = match side {
                Side::First => lambda,
                Side::Second => mu,
            };
            // Give the factor the full remaining headroom.
            let other_energy = match side {
                Side::First => mu.weight(),
                Side::Second => lambda.weight(),
            };
            let image = op(&FockVector::basis(
                acted.clone(),
                self.truncation.saturating_sub(other_energy),
            )?)?;
            for (target, tc) in image.terms() {
                let (l2, m2) = match side {
                    Side::First => (target.clone(), mu.clone()),
                    Side::Second => (lambda.clone(), target.clone()),
                };
                out.add_term(l2, m2, c * tc)?;
            }
        }
        Ok(out)
    }
}

/// b_k = a_k ⊗ I + I ⊗ a_k.
pub fn b_apply(k: i64, v: &FockVector2) -> Result<FockVector2> {
    let first = v.apply_factor(Side::First, |w| a_apply(k, w))?;
    let second = v.apply_factor(Side::Second, |w| a_apply(k, w))?;
    first.add(&second)
}

/// c_k = a_k ⊗ I − I ⊗ a_k.
pub fn c_apply(k: i64, v: &FockVector2) -> Result<FockVector2> {
    let first = v.apply_factor(Side::First, |w| a_apply(k, w))?;
    let second = v.apply_factor(Side::Second, |w| a_apply(k, w))?;
    first.sub(&second)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum BC {
    B,
    C,
}

fn bc_apply(op: BC, k: i64, v: &FockVector2) -> Result<FockVector2> {
    match op {
        BC::B => b_apply(k, v),
        BC::C => c_apply(k, v),
    }
}

/// Apply a composite of b/c operators, negative indices first (legal: within
/// an index triple summing to zero all factors commute pairwise).
fn bc_chain(ops: &[(BC, i64)], v: &FockVector2) -> Result<FockVector2> {
    let mut sorted: Vec<(BC, i64)> = ops.to_vec();
    sorted.sort_by_key(|&(_, k)| k);
    let mut acc = v.clone();
    for &(op, k) in &sorted {
        acc = bc_apply(op, k, &acc)?;
    }
    Ok(acc)
}

/// J₁ = (1/12) Σ_{i+j+k=0, i,j,k≠0} (b_ib_jb_k + b_ic_jc_k + c_ib_jc_k +
/// c_ic_jb_k), which equals C ⊗ Id + Id ⊗ C for the normalized cut-and-join
/// C of [`cut_join_apply`]. Under bf2, Ĵ₁ = CJ₁.
pub fn j1_apply(v: &FockVector2) -> Result<FockVector2> {
    let bound = v.max_energy() as i64;
    let mut out = FockVector2::zero(v.truncation());
    let twelfth = Rat::new(1.into(), 12.into());
    for i in -bound..=bound {
        if i == 0 {
            continue;
        }
        for j in -bound..=bound {
            let k = -i - j;
            if j == 0 || k == 0 || k.abs() > bound {
                continue;
            }
            for word in [[BC::B, BC::B, BC::B], [BC::B, BC::C, BC::C], [BC::C, BC::B, BC::C], [BC::C, BC::C, BC::B]] {
                let ops = [(word[0], i), (word[1], j), (word[2], k)];
                out = out.add(&bc_chain(&ops, v)?.scale(&twelfth))?;
            }
        }
    }
    Ok(out)
}

/// J₂ = ½ Σ_{ℓ≥1} (b_ℓ c_{−ℓ} + c_ℓ b_{−ℓ}) = E ⊗ Id − Id ⊗ E (the ½ makes
/// Ĵ₂ = CJ₂ exactly; the same sum without it gives twice that).
pub fn j2_apply(v: &FockVector2) -> Result<FockVector2> {
    let mut out = FockVector2::zero(v.truncation());
    let half = Rat::new(1.into(), 2.into());
    for l in 1..=v.max_energy().max(1) as i64 {
        let term = bc_chain(&[(BC::B, l), (BC::C, -l)], v)?
            .add(&bc_chain(&[(BC::C, l), (BC::B, -l)], v)?)?;
        out = out.add(&term.scale(&half))?;
    }
    Ok(out)
}

/// Tensor-square boson-fermion correspondence: w_λ ⊗ w_μ ↦ s_λ(u)·s_μ(v).
pub fn bf2(v: &FockVector2) -> PQPoly {
    let mut out = PQPoly::zero(Family::UV);
    for ((lambda, mu), c) in &v.terms {
        let s_l = schur_p(lambda)
            .substitute(Family::UV, |_, i| PQPoly::var(Family::UV, Side::First, i));
        let s_m = schur_p(mu)
            .substitute(Family::UV, |_, i| PQPoly::var(Family::UV, Side::Second, i));
        out = out
            .add(&s_l.mul(&s_m).expect("same family").scale(c))
            .expect("same family");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutjoin::{cj1, cj_classical, euler_on};
    use crate::partition::partitions_of;
    use crate::poly::parse_poly;
    use crate::schur::{eigenvalues, PartitionPair};

    fn part(parts: &[u32]) -> Partition {
        Partition::from_unsorted(parts.to_vec())
    }

    const N: u32 = 12;

    fn basis(parts: &[u32]) -> FockVector {
        FockVector::basis(part(parts), N).unwrap()
    }

    fn basis2(l: &[u32], m: &[u32]) -> FockVector2 {
        FockVector2::basis(part(l), part(m), N).unwrap()
    }

    #[test]
    fn a_examples() {
        assert_eq!(a_apply(1, &FockVector::vacuum(N)).unwrap(), basis(&[1]));
        assert_eq!(a_apply(1, &basis(&[1])).unwrap(), basis(&[2]).add(&basis(&[1, 1])).unwrap());
        assert!(a_apply(-1, &FockVector::vacuum(N)).unwrap().is_zero());
        // Signs: a₂(w_(1)) = w_(3) − w_(1,1,1); a₋₂ undoes them.
        let image = a_apply(2, &basis(&[1])).unwrap();
        assert_eq!(image, basis(&[3]).sub(&basis(&[1, 1, 1])).unwrap());
        assert_eq!(a_apply(-2, &basis(&[2])).unwrap(), FockVector::vacuum(N));
        assert_eq!(a_apply(-2, &basis(&[1, 1])).unwrap(), FockVector::vacuum(N).scale(&-Rat::one()));
    }

    #[test]
    fn a_guards() {
        assert!(a_apply(0, &FockVector::vacuum(N)).is_err());
        assert!(a_apply(N as i64 + 1, &FockVector::vacuum(N)).is_err());
        let tight = FockVector::basis(part(&[1]), 1).unwrap();
        match a_apply(1, &tight).unwrap_err() {
            Error::TruncationOverflow { needed, cap } => {
                assert_eq!((needed, cap), (2, 1));
            }
            other => panic!("expected overflow, got {other:?}"),
        }
    }

    #[test]
    fn commutators_observed() {
        // [a_m, a_n] = 0 for m+n ≠ 0 and −m·Id for n = −m, on all basis
        // vectors with enough headroom. The sign is the observed value for
        // this raising-for-positive-k convention.
        for w in 0..=4u32 {
            for lambda in partitions_of(w) {
                let x = FockVector::basis(lambda, N).unwrap();
                for m in [-3i64, -2, -1, 1, 2, 3] {
                    for n in [-3i64, -2, -1, 1, 2, 3] {
                        let mn = a_apply_chain(&[m, n], &x).unwrap();
                        let nm = a_apply_chain(&[n, m], &x).unwrap();
                        let comm = mn.sub(&nm).unwrap();
                        if m + n == 0 {
                            let expected = x.scale(&Rat::from_integer((-m).into()));
                            assert_eq!(comm, expected, "[a_{m}, a_{n}]");
                        } else {
                            assert!(comm.is_zero(), "[a_{m}, a_{n}]");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bf_examples() {
        assert_eq!(bf(&FockVector::vacuum(N)), PQPoly::one(Family::PQ));
        assert_eq!(bf(&basis(&[2])), parse_poly(Family::PQ, "1/2*p[2] + 1/2*p[1]^2").unwrap());
        assert_eq!(bf2(&basis2(&[1], &[1])), parse_poly(Family::UV, "u[1]*v[1]").unwrap());
    }

    #[test]
    fn bf_intertwines_a_with_p_and_derivative() {
        for w in 0..=5u32 {
            for lambda in partitions_of(w) {
                let x = FockVector::basis(lambda, N).unwrap();
                let fx = bf(&x);
                for k in 1..=3u32 {
                    let raised = bf(&a_apply(k as i64, &x).unwrap());
                    let expected = fx.mul(&PQPoly::var(Family::PQ, Side::First, k)).unwrap();
                    assert_eq!(raised, expected, "a_{k} on {fx}");

                    let lowered = bf(&a_apply(-(k as i64), &x).unwrap());
                    let der = crate::poly::OpTerm {
                        coeff: Rat::from_integer(k.into()),
                        mul: crate::poly::Monomial::one(),
                        der: crate::poly::Monomial::var_p(k),
                    };
                    let expected = crate::poly::apply_operator(&[der], &fx);
                    assert_eq!(lowered, expected, "a_-{k} on {fx}");
                }
            }
        }
    }

    #[test]
    fn energy_eigenvalues() {
        for w in 0..=6u32 {
            for lambda in partitions_of(w) {
                let x = FockVector::basis(lambda, N).unwrap();
                assert_eq!(energy_apply(&x).unwrap(), x.scale(&Rat::from_integer(w.into())));
            }
        }
    }

    #[test]
    fn cut_join_matches_classical() {
        for w in 0..=6u32 {
            for lambda in partitions_of(w) {
                let x = FockVector::basis(lambda, N).unwrap();
                assert_eq!(bf(&cut_join_apply(&x).unwrap()), cj_classical(&bf(&x)), "{x:?}");
            }
        }
    }

    #[test]
    fn b_c_examples() {
        let vac = FockVector2::vacuum(N);
        let b1 = b_apply(1, &vac).unwrap();
        assert_eq!(b1, basis2(&[1], &[]).add(&basis2(&[], &[1])).unwrap());
        assert_eq!(bf2(&b1), parse_poly(Family::UV, "u[1] + v[1]").unwrap());
        assert_eq!(bf2(&b1).to_pq().unwrap(), parse_poly(Family::PQ, "p[1]").unwrap());

        let c1 = c_apply(1, &vac).unwrap();
        assert_eq!(bf2(&c1).to_pq().unwrap(), parse_poly(Family::PQ, "q[1]").unwrap());

        assert!(b_apply(-1, &vac).unwrap().is_zero());
    }

    #[test]
    fn j_eigenvalues() {
        for w in 0..=5u32 {
            for k in 0..=w {
                for lambda in partitions_of(k) {
                    for mu in partitions_of(w - k) {
                        let x = FockVector2::basis(lambda.clone(), mu.clone(), N).unwrap();
                        let (e1, e2) = eigenvalues(&PartitionPair::new(lambda.clone(), mu.clone()));
                        assert_eq!(j1_apply(&x).unwrap(), x.scale(&e1), "J1 at {lambda}|{mu}");
                        assert_eq!(j2_apply(&x).unwrap(), x.scale(&e2), "J2 at {lambda}|{mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn j1_is_tensor_cut_join() {
        for w in 0..=5u32 {
            for k in 0..=w {
                for lambda in partitions_of(k) {
                    for mu in partitions_of(w - k) {
                        let x = FockVector2::basis(lambda, mu, N).unwrap();
                        let tensor = x
                            .apply_factor(Side::First, cut_join_apply)
                            .unwrap()
                            .add(&x.apply_factor(Side::Second, cut_join_apply).unwrap())
                            .unwrap();
                        assert_eq!(j1_apply(&x).unwrap(), tensor);
                    }
                }
            }
        }
    }

    #[test]
    fn j_hats_are_cut_and_join() {
        // bf2∘J₁ = CJ₁∘bf2 (via the uv↔pq change of variables) and
        // bf2∘J₂ = (E_u − E_v)∘bf2, on basis states of total energy ≤ 5.
        for w in 0..=5u32 {
            for k in 0..=w {
                for lambda in partitions_of(k) {
                    for mu in partitions_of(w - k) {
                        let x = FockVector2::basis(lambda, mu, N).unwrap();
                        let image = bf2(&x);
                        let lhs1 = bf2(&j1_apply(&x).unwrap());
                        let rhs1 = cj1(&image.to_pq().unwrap()).unwrap().to_uv().unwrap();
                        assert_eq!(lhs1, rhs1);
                        let lhs2 = bf2(&j2_apply(&x).unwrap());
                        let rhs2 = euler_on(&image, Side::First)
                            .sub(&euler_on(&image, Side::Second))
                            .unwrap();
                        assert_eq!(lhs2, rhs2);
                    }
                }
            }
        }
    }

    #[test]
    fn vector_guards() {
        assert!(FockVector::basis(part(&[7]), 6).is_err());
        assert!(FockVector2::basis(part(&[4]), part(&[3]), 6).is_err());
        let mut v = FockVector::zero(2);
        assert!(v.add_term(part(&[3]), Rat::one()).is_err());
        assert!(v.add_term(part(&[2]), Rat::one()).is_ok());
    }

    // Silence the unused-import lint for cutjoin used only via full paths.
    #[allow(unused_imports)]
    use cutjoin as _;
}
