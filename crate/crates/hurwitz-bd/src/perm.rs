//! Permutations of {1,…,2n}, the involution τ, membership and classification
//! for B_n and D_n, reflections, signed-permutation conversion, and the
//! ± sign of split D_n classes.
//!
//! B_n is the normalizer of τ = (1,n+1)(2,n+2)…(n,2n) in S_{2n}; D_n its
//! even-permutation subgroup. Conjugacy classes of B_n are labelled by
//! profiles (λ|μ): cycles of a normalizer element either come in α-pairs
//! (two cycles of equal length λ_i exchanged by τ) or are single β-cycles
//! (τ-invariant, of even length 2μ_i).

use crate::partition::{partitions_of, Partition};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Sign of a split D_n conjugacy class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Sign::Plus => s.serialize_str("+"),
            Sign::Minus => s.serialize_str("-"),
        }
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        match s.as_str() {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            other => Err(serde::de::Error::custom(format!(
                "sign must be \"+\" or \"-\", got {other:?}"
            ))),
        }
    }
}

/// Conjugacy-class label (λ | μ [, ±]).
///
/// Invariants: |λ|+|μ| = n for the ambient group; `sign` may be present only
/// when μ = ∅ and every part of λ is even (the split D_n classes).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Profile {
    pub lambda: Partition,
    pub mu: Partition,
    #[serde(default)]
    pub sign: Option<Sign>,
}

impl Profile {
    pub fn new(lambda: Partition, mu: Partition) -> Self {
        Profile { lambda, mu, sign: None }
    }

    pub fn with_sign(lambda: Partition, sign: Sign) -> Self {
        Profile { lambda, mu: Partition::empty(), sign: Some(sign) }
    }

    /// |λ| + |μ|, the rank of the ambient group.
    pub fn rank(&self) -> u32 {
        self.lambda.weight() + self.mu.weight()
    }

    /// May this profile carry a ± sign (μ = ∅ and all parts of λ even)?
    pub fn splits_in_d(&self) -> bool {
        self.mu.is_empty() && !self.lambda.is_empty() && self.lambda.all_even()
    }

    /// Does the class lie in D_n (even permutations)? True iff #μ is even.
    pub fn is_in_d(&self) -> bool {
        self.mu.len() % 2 == 0
    }

    /// Same profile with the sign removed.
    pub fn unsigned(&self) -> Profile {
        Profile { lambda: self.lambda.clone(), mu: self.mu.clone(), sign: None }
    }

    /// Same profile carrying the given sign.
    pub fn signed(&self, sign: Sign) -> Profile {
        Profile { lambda: self.lambda.clone(), mu: self.mu.clone(), sign: Some(sign) }
    }

    /// Same profile with the sign flipped (no-op when unsigned).
    pub fn flipped(&self) -> Profile {
        Profile {
            lambda: self.lambda.clone(),
            mu: self.mu.clone(),
            sign: self.sign.map(Sign::flipped),
        }
    }

    /// Check structural invariants; `expected_rank` of 0 skips the rank check.
    pub fn validate(&self, expected_rank: u32) -> Result<()> {
        if expected_rank != 0 && self.rank() != expected_rank {
            return Err(Error::MalformedProfile(format!(
                "rank {} does not match n = {expected_rank}",
                self.rank()
            )));
        }
        if self.sign.is_some() && !self.splits_in_d() {
            return Err(Error::MalformedProfile(format!(
                "sign present on non-splitting profile {self}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Profile {
    /// `(2)|∅`, `(1)|(1)`, `(2)|∅+` for signed profiles.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.lambda, self.mu)?;
        if let Some(s) = self.sign {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Parse a profile from its JSON form `{"lambda":[…],"mu":[…],"sign":…}`
/// and validate it (rank check skipped when `expected_rank` is 0).
pub fn profile_from_json(s: &str, expected_rank: u32) -> Result<Profile> {
    let p: Profile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    p.validate(expected_rank)?;
    Ok(p)
}

/// All unsigned profiles (λ|μ) with |λ|+|μ| = n, in canonical order.
pub fn profiles_of_rank(n: u32) -> Vec<Profile> {
    let mut out = Vec::new();
    for s in 0..=n {
        for lambda in partitions_of(s) {
            for mu in partitions_of(n - s) {
                out.push(Profile::new(lambda.clone(), mu));
            }
        }
    }
    out.sort();
    out
}

/// A permutation of {1,…,2n} in one-line notation (1-indexed).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    /// images[i] is the image of i+1; values lie in 1..=2n.
    images: Vec<usize>,
}

impl Permutation {
    /// Build from a one-line image array; must be a bijection of even length.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let sz = images.len();
        if sz == 0 || sz % 2 != 0 {
            return Err(Error::NotAPermutation(format!(
                "length {sz} is not a positive even number"
            )));
        }
        let mut seen = vec![false; sz];
        for &v in &images {
            if v == 0 || v > sz || seen[v - 1] {
                return Err(Error::NotAPermutation(format!("images {images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=2 * n).collect() }
    }

    /// Build from disjoint cycles on {1,…,2n}; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=2 * n).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > 2 * n || b == 0 || b > 2 * n {
                    return Err(Error::NotAPermutation(format!("cycle {cycle:?}")));
                }
                images[a - 1] = b;
            }
        }
        Permutation::new(images)
    }

    /// Group rank: the permutation acts on 2n points.
    pub fn n(&self) -> usize {
        self.images.len() / 2
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Disjoint cycles (fixed points included), each starting at its minimum
    /// element, sorted by that minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let sz = self.images.len();
        let mut seen = vec![false; sz];
        let mut out = Vec::new();
        for start in 1..=sz {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// True for even permutations.
    pub fn is_even(&self) -> bool {
        let transpositions = self.size() - self.cycles().len();
        transpositions % 2 == 0
    }
}

impl fmt::Display for Permutation {
    /// One-line image array, e.g. `[2,1,4,3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Parse a permutation from a one-line JSON image array, e.g. `[2,1,4,3]`.
pub fn permutation_from_json(s: &str) -> Result<Permutation> {
    let images: Vec<usize> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Permutation::new(images)
}

/// (a∘b)(x) = a(b(x)): the right factor acts first.
pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(a.size(), b.size()));
    }
    let images = (1..=a.size()).map(|x| a.apply(b.apply(x))).collect();
    Ok(Permutation { images })
}

/// The fixed involution τ(i) = i±n: (1,n+1)(2,n+2)…(n,2n).
pub fn tau(n: usize) -> Permutation {
    let images = (1..=2 * n).map(|i| if i <= n { i + n } else { i - n }).collect();
    Permutation { images }
}

/// τ as a function on points: i ↦ i±n.
pub(crate) fn tau_point(n: usize, i: usize) -> usize {
    if i <= n {
        i + n
    } else {
        i - n
    }
}

/// Membership in B_n = Norm(τ): true iff x∘τ = τ∘x.
pub fn normalizer_check(x: &Permutation) -> bool {
    let n = x.n();
    (1..=2 * n).all(|i| x.apply(tau_point(n, i)) == tau_point(n, x.apply(i)))
}

/// Membership in D_n: normalizer element that is even.
pub fn d_check(x: &Permutation) -> bool {
    normalizer_check(x) && x.is_even()
}

/// Classify a normalizer element into its profile (λ|μ), sign left empty.
///
/// Every cycle either forms an α-pair with its τ-image (a distinct cycle of
/// the same length, contributing a part of λ) or is a single τ-invariant
/// β-cycle of even length 2k (contributing k to μ).
pub fn classify(x: &Permutation) -> Result<Profile> {
    if !normalizer_check(x) {
        return Err(Error::NotInNormalizer);
    }
    let n = x.n();
    let cycles = x.cycles();
    // Map each point to the index of its cycle.
    let mut cycle_of = vec![usize::MAX; 2 * n];
    for (ci, cycle) in cycles.iter().enumerate() {
        for &p in cycle {
            cycle_of[p - 1] = ci;
        }
    }
    let mut paired = vec![false; cycles.len()];
    let mut lambda = Vec::new();
    let mut mu = Vec::new();
    for (ci, cycle) in cycles.iter().enumerate() {
        if paired[ci] {
            continue;
        }
        paired[ci] = true;
        let partner = cycle_of[tau_point(n, cycle[0]) - 1];
        if partner == ci {
            // β-cycle: τ maps the cycle to itself, shifting it by half its
            // (necessarily even) length.
            debug_assert!(cycle.len() % 2 == 0);
            mu.push((cycle.len() / 2) as u32);
        } else {
            // α-pair: τ exchanges the two cycles elementwise.
            debug_assert!(!paired[partner]);
            debug_assert_eq!(cycles[partner].len(), cycle.len());
            paired[partner] = true;
            lambda.push(cycle.len() as u32);
        }
    }
    Ok(Profile::new(Partition::from_unsorted(lambda), Partition::from_unsorted(mu)))
}

/// Classify, filling in the ± sign when the class splits in D_n.
pub fn classify_signed(x: &Permutation) -> Result<Profile> {
    let mut p = classify(x)?;
    if p.splits_in_d() {
        p.sign = Some(d_sign(x)?);
    }
    Ok(p)
}

/// Reflection kind: R is the long family r_{ij} = (i,j)(i+n,j+n) (with the
/// identification r_{ij} = r_{i+n,j+n}); L is the short family l_i = (i,i+n).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReflKind {
    R,
    L,
}

/// The reflections of B_n, deduplicated, in a deterministic order.
///
/// Kind R yields the n(n−1) distinct r_{ij}; kind L the n distinct l_i.
pub fn reflections(n: usize, kind: ReflKind) -> Vec<Permutation> {
    let mut set = std::collections::BTreeSet::new();
    match kind {
        ReflKind::R => {
            for a in 1..=2 * n {
                for b in a + 1..=2 * n {
                    if b == tau_point(n, a) {
                        continue;
                    }
                    let r = Permutation::from_cycles(
                        n,
                        &[&[a, b], &[tau_point(n, a), tau_point(n, b)]],
                    )
                    .expect("valid reflection cycle");
                    set.insert(r);
                }
            }
            debug_assert_eq!(set.len(), n * (n - 1).max(0));
        }
        ReflKind::L => {
            for i in 1..=n {
                let l = Permutation::from_cycles(n, &[&[i, tau_point(n, i)]])
                    .expect("valid reflection cycle");
                set.insert(l);
            }
        }
    }
    set.into_iter().collect()
}

/// A signed permutation: a bijection of {1,…,n} together with a sign per point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    /// perm[i] is the image of i+1, in 1..=n.
    pub perm: Vec<usize>,
    /// signs[i] ∈ {+1,−1}.
    pub signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::SizeMismatch(n, signs.len()));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::NotAPermutation(format!("signs {signs:?}")));
        }
        let mut seen = vec![false; n];
        for &v in &perm {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation(format!("perm {perm:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }
}

/// Embed a signed permutation into Norm(τ) ⊂ S_{2n}.
///
/// A point k ≤ n maps to perm(k) when the sign at k is +, and to perm(k)+n
/// when it is −; the images of k+n follow by τ-equivariance.
pub fn embed_signed(s: &SignedPermutation) -> Permutation {
    let n = s.n();
    let mut images = vec![0usize; 2 * n];
    for k in 1..=n {
        let v = s.perm[k - 1];
        let (img, img_shadow) = if s.signs[k - 1] == 1 { (v, v + n) } else { (v + n, v) };
        images[k - 1] = img;
        images[k + n - 1] = img_shadow;
    }
    Permutation { images }
}

/// Inverse of [`embed_signed`]; fails when x ∉ Norm(τ).
pub fn to_signed(x: &Permutation) -> Result<SignedPermutation> {
    if !normalizer_check(x) {
        return Err(Error::NotInNormalizer);
    }
    let n = x.n();
    let mut perm = vec![0usize; n];
    let mut signs = vec![0i8; n];
    for k in 1..=n {
        let v = x.apply(k);
        if v <= n {
            perm[k - 1] = v;
            signs[k - 1] = 1;
        } else {
            perm[k - 1] = v - n;
            signs[k - 1] = -1;
        }
    }
    SignedPermutation::new(perm, signs)
}

/// All 2ⁿ·n! elements of B_n = Norm(τ), sorted deterministically.
pub fn bn_elements(n: usize) -> Vec<Permutation> {
    let mut perms = Vec::new();
    let mut base: Vec<usize> = (1..=n).collect();
    heap_permutations(&mut base, n, &mut perms);
    let mut out = Vec::with_capacity(perms.len() << n);
    for p in &perms {
        for mask in 0u32..(1 << n) {
            let signs: Vec<i8> =
                (0..n).map(|i| if mask & (1 << i) != 0 { -1 } else { 1 }).collect();
            let s = SignedPermutation { perm: p.clone(), signs };
            out.push(embed_signed(&s));
        }
    }
    out.sort();
    debug_assert!(out.windows(2).all(|w| w[0] != w[1]), "embed_signed must be injective");
    return out;

    fn heap_permutations(a: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap_permutations(a, k - 1, out);
            if k % 2 == 0 {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
}

/// Deterministic representative of the class C_{λ|μ}, built by laying out
/// α-pair cycles and then β-cycles on consecutive indices.
///
/// For an all-even λ with μ = ∅ the representative defines the + class; the
/// − representative is its conjugate by the odd reflection l₁.
pub fn canonical_rep(p: &Profile) -> Result<Permutation> {
    p.validate(0)?;
    let n = p.rank() as usize;
    if n == 0 {
        return Err(Error::MalformedProfile("empty profile".into()));
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut next = 1usize;
    for &part in p.lambda.parts() {
        let part = part as usize;
        let primary: Vec<usize> = (next..next + part).collect();
        let shadow: Vec<usize> = primary.iter().map(|&i| i + n).collect();
        cycles.push(primary);
        cycles.push(shadow);
        next += part;
    }
    for &part in p.mu.parts() {
        let part = part as usize;
        let mut beta: Vec<usize> = (next..next + part).collect();
        beta.extend((next..next + part).map(|i| i + n));
        cycles.push(beta);
        next += part;
    }
    let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
    let rep = Permutation::from_cycles(n, &refs)?;
    debug_assert!(normalizer_check(&rep));
    debug_assert_eq!(classify(&rep)?, p.unsigned());
    if p.sign == Some(Sign::Minus) {
        let l1 = Permutation::from_cycles(n, &[&[1, 1 + n]])?;
        return compose(&compose(&l1, &rep)?, &l1);
    }
    Ok(rep)
}

/// The ± sign of an element of a split D_n class (μ = ∅, all parts of λ even).
///
/// Defined as + iff the conjugator g ∈ Norm(τ) with g·rep·g⁻¹ = x is an even
/// permutation, where rep = canonical_rep of the unsigned profile. The
/// conjugator is built constructively by matching the cycle layouts
/// τ-equivariantly; the answer does not depend on the choices made because
/// the centralizer of rep inside Norm(τ) consists of even permutations.
pub fn d_sign(x: &Permutation) -> Result<Sign> {
    let profile = classify(x)?;
    if !profile.splits_in_d() {
        return Err(Error::Precondition(format!(
            "d_sign requires μ = ∅ and all parts of λ even, got {profile}"
        )));
    }
    debug_assert!(x.is_even(), "all-even λ with μ = ∅ forces an even permutation");
    let n = x.n();
    let rep = canonical_rep(&profile)?;

    // α-pairs of a normalizer element, as (primary cycle sequence) sorted by
    // (length descending, minimum element ascending). The primary cycle of a
    // pair is the one containing the pair's minimum element, rotated to start
    // there.
    let alpha_pairs = |y: &Permutation| -> Vec<Vec<usize>> {
        let cycles = y.cycles();
        let mut cycle_of = vec![usize::MAX; 2 * n];
        for (ci, c) in cycles.iter().enumerate() {
            for &pt in c {
                cycle_of[pt - 1] = ci;
            }
        }
        let mut used = vec![false; cycles.len()];
        let mut pairs = Vec::new();
        for (ci, c) in cycles.iter().enumerate() {
            if used[ci] {
                continue;
            }
            let partner = cycle_of[tau_point(n, c[0]) - 1];
            debug_assert_ne!(partner, ci, "β-cycle in a μ = ∅ element");
            used[ci] = true;
            used[partner] = true;
            // cycles() starts each cycle at its min and is sorted by min, so
            // the first cycle of the pair we encounter is the primary one.
            pairs.push(c.clone());
        }
        pairs.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        pairs
    };

    let rep_pairs = alpha_pairs(&rep);
    let x_pairs = alpha_pairs(x);
    debug_assert_eq!(rep_pairs.len(), x_pairs.len());

    // g maps rep's primary cycles onto x's primary cycles pointwise and is
    // extended to the shadows by τ-equivariance: g(τ(a)) = τ(g(a)).
    let mut images = vec![0usize; 2 * n];
    for (rc, xc) in rep_pairs.iter().zip(x_pairs.iter()) {
        debug_assert_eq!(rc.len(), xc.len());
        for (&a, &b) in rc.iter().zip(xc.iter()) {
            images[a - 1] = b;
            images[tau_point(n, a) - 1] = tau_point(n, b);
        }
    }
    let g = Permutation::new(images)?;
    debug_assert!(normalizer_check(&g));
    debug_assert_eq!(
        compose(&compose(&g, &rep)?, &g.inverse())?,
        *x,
        "constructed conjugator must send rep to x"
    );
    Ok(if g.is_even() { Sign::Plus } else { Sign::Minus })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    fn profile(lambda: &[u32], mu: &[u32]) -> Profile {
        Profile::new(Partition::new(lambda.to_vec()).unwrap(), Partition::new(mu.to_vec()).unwrap())
    }

    #[test]
    fn compose_identity_and_convention() {
        let x = perm(&[2, 1, 4, 3]);
        let id = Permutation::identity(2);
        assert_eq!(compose(&id, &x).unwrap(), x);
        assert_eq!(compose(&x, &id).unwrap(), x);
        // (12)(34) ∘ (1234) = (2 4) with 1, 3 fixed: right factor acts first.
        let a = perm(&[2, 1, 4, 3]);
        let b = Permutation::from_cycles(2, &[&[1, 2, 3, 4]]).unwrap();
        let c = compose(&a, &b).unwrap();
        assert_eq!(c, Permutation::from_cycles(2, &[&[2, 4]]).unwrap());
        // Reflections are involutions.
        for r in reflections(3, ReflKind::R) {
            assert!(compose(&r, &r).unwrap().is_identity());
        }
    }

    #[test]
    fn tau_definition_and_involution() {
        assert_eq!(tau(1), perm(&[2, 1]));
        assert_eq!(tau(2), Permutation::from_cycles(2, &[&[1, 3], &[2, 4]]).unwrap());
        for n in 1..=5 {
            let t = tau(n);
            assert!(compose(&t, &t).unwrap().is_identity());
        }
    }

    #[test]
    fn normalizer_membership() {
        assert!(normalizer_check(&tau(2)));
        // A bare transposition (1 2) does not commute with τ for n = 2.
        assert!(!normalizer_check(&perm(&[2, 1, 3, 4])));
        assert!(normalizer_check(&perm(&[2, 1, 4, 3])));
    }

    #[test]
    fn classify_examples() {
        for n in 1..=4 {
            assert_eq!(
                classify(&Permutation::identity(n)).unwrap(),
                Profile::new(Partition::new(vec![1; n]).unwrap(), Partition::empty())
            );
            assert_eq!(
                classify(&tau(n)).unwrap(),
                Profile::new(Partition::empty(), Partition::new(vec![1; n]).unwrap())
            );
        }
        let c4 = Permutation::from_cycles(2, &[&[1, 2, 3, 4]]).unwrap();
        assert_eq!(classify(&c4).unwrap(), profile(&[], &[2]));
        assert!(classify(&perm(&[2, 1, 3, 4])).is_err());
    }

    #[test]
    fn reflection_sets() {
        assert!(reflections(1, ReflKind::R).is_empty());
        let r2 = reflections(2, ReflKind::R);
        assert_eq!(
            r2,
            vec![
                Permutation::from_cycles(2, &[&[1, 2], &[3, 4]]).unwrap(),
                Permutation::from_cycles(2, &[&[1, 4], &[2, 3]]).unwrap(),
            ]
        );
        let l2 = reflections(2, ReflKind::L);
        assert_eq!(
            l2,
            vec![
                Permutation::from_cycles(2, &[&[2, 4]]).unwrap(),
                Permutation::from_cycles(2, &[&[1, 3]]).unwrap(),
            ]
        );
        for n in 1..=5 {
            assert_eq!(reflections(n, ReflKind::R).len(), n * (n - 1));
            assert_eq!(reflections(n, ReflKind::L).len(), n);
            for r in reflections(n, ReflKind::R) {
                assert!(normalizer_check(&r));
                let mut lambda = vec![2u32];
                lambda.extend(vec![1; n - 2]);
                assert_eq!(classify(&r).unwrap(), profile(&lambda, &[]));
            }
            for l in reflections(n, ReflKind::L) {
                assert!(normalizer_check(&l));
                assert_eq!(classify(&l).unwrap(), profile(&vec![1; n - 1], &[1]));
            }
        }
    }

    #[test]
    fn embed_signed_examples() {
        // s⁺₁₂ for n = 2 → (1 2)(3 4).
        let s12 = SignedPermutation::new(vec![2, 1], vec![1, 1]).unwrap();
        assert_eq!(embed_signed(&s12), perm(&[2, 1, 4, 3]));
        // ℓ₁ (sign flip at 1) → (1 3).
        let l1 = SignedPermutation::new(vec![1, 2], vec![-1, 1]).unwrap();
        assert_eq!(embed_signed(&l1), Permutation::from_cycles(2, &[&[1, 3]]).unwrap());
        // −id = ℓ₁ℓ₂ → τ.
        let neg = SignedPermutation::new(vec![1, 2], vec![-1, -1]).unwrap();
        assert_eq!(embed_signed(&neg), tau(2));
    }

    #[test]
    fn embed_signed_roundtrip_and_image() {
        for n in 1..=3 {
            let all = bn_elements(n);
            assert_eq!(all.len(), (1 << n) * (1..=n).product::<usize>());
            for x in &all {
                assert!(normalizer_check(x));
                let s = to_signed(x).unwrap();
                assert_eq!(embed_signed(&s), *x);
                // D_n membership ⟺ even sign-change count.
                let flips = s.signs.iter().filter(|&&v| v == -1).count();
                assert_eq!(x.is_even(), flips % 2 == 0);
            }
        }
        // For n ≤ 3 the image is exactly the normalizer, checked by counting.
        for n in 1..=3 {
            let brute: Vec<Permutation> = all_perms(2 * n)
                .into_iter()
                .filter(normalizer_check)
                .collect();
            assert_eq!(brute.len(), bn_elements(n).len());
        }

        fn all_perms(sz: usize) -> Vec<Permutation> {
            let mut out = Vec::new();
            let mut a: Vec<usize> = (1..=sz).collect();
            rec(&mut a, sz, &mut out);
            return out;
            fn rec(a: &mut Vec<usize>, k: usize, out: &mut Vec<Permutation>) {
                if k <= 1 {
                    out.push(Permutation::new(a.clone()).unwrap());
                    return;
                }
                for i in 0..k {
                    rec(a, k - 1, out);
                    if k % 2 == 0 {
                        a.swap(i, k - 1);
                    } else {
                        a.swap(0, k - 1);
                    }
                }
            }
        }
    }

    #[test]
    fn embed_signed_multiplicative() {
        // Multiplicativity: Φ(s·t) = Φ(s)∘Φ(t) with s acting after t.
        let n = 3;
        let samples = [
            SignedPermutation::new(vec![2, 3, 1], vec![1, -1, 1]).unwrap(),
            SignedPermutation::new(vec![3, 1, 2], vec![-1, -1, 1]).unwrap(),
            SignedPermutation::new(vec![1, 3, 2], vec![-1, 1, -1]).unwrap(),
        ];
        for s in &samples {
            for t in &samples {
                // Signed product: (s·t)(k) = s(t(k)) with sign s_sign(t(k))·t_sign(k).
                let mut perm = vec![0usize; n];
                let mut signs = vec![0i8; n];
                for k in 1..=n {
                    let tv = t.perm[k - 1];
                    perm[k - 1] = s.perm[tv - 1];
                    signs[k - 1] = s.signs[tv - 1] * t.signs[k - 1];
                }
                let st = SignedPermutation::new(perm, signs).unwrap();
                assert_eq!(
                    embed_signed(&st),
                    compose(&embed_signed(s), &embed_signed(t)).unwrap()
                );
            }
        }
    }

    #[test]
    fn canonical_rep_examples() {
        assert_eq!(canonical_rep(&profile(&[2], &[])).unwrap(), perm(&[2, 1, 4, 3]));
        assert_eq!(
            canonical_rep(&profile(&[], &[1])).unwrap(),
            Permutation::from_cycles(1, &[&[1, 2]]).unwrap()
        );
        // ((1)|(1)): fixed points 1 and 3, β-cycle (2 4).
        assert_eq!(
            canonical_rep(&profile(&[1], &[1])).unwrap(),
            Permutation::from_cycles(2, &[&[2, 4]]).unwrap()
        );
        // Round trip through classify for every profile of rank ≤ 5.
        for n in 1..=5 {
            for p in profiles_of_rank(n) {
                let rep = canonical_rep(&p).unwrap();
                assert_eq!(classify(&rep).unwrap(), p);
            }
        }
    }

    #[test]
    fn d_sign_examples() {
        let plus = canonical_rep(&profile(&[2], &[])).unwrap();
        assert_eq!(d_sign(&plus).unwrap(), Sign::Plus);
        let minus = Permutation::from_cycles(2, &[&[1, 4], &[2, 3]]).unwrap();
        assert_eq!(d_sign(&minus).unwrap(), Sign::Minus);
        // Signed canonical representatives land in their own class.
        for p in [
            Profile::with_sign(Partition::new(vec![2]).unwrap(), Sign::Plus),
            Profile::with_sign(Partition::new(vec![2]).unwrap(), Sign::Minus),
            Profile::with_sign(Partition::new(vec![4]).unwrap(), Sign::Plus),
            Profile::with_sign(Partition::new(vec![4]).unwrap(), Sign::Minus),
            Profile::with_sign(Partition::new(vec![2, 2]).unwrap(), Sign::Plus),
            Profile::with_sign(Partition::new(vec![2, 2]).unwrap(), Sign::Minus),
        ] {
            let rep = canonical_rep(&p).unwrap();
            assert_eq!(classify_signed(&rep).unwrap(), p);
        }
    }

    #[test]
    fn d_sign_conjugation_parity() {
        // Conjugation by even normalizer elements preserves the sign and by
        // odd ones flips it; exhaustive over B_n for n ≤ 3, sampled at n = 4.
        for n in [2usize, 3] {
            let all = bn_elements(n);
            for p in profiles_of_rank(n as u32) {
                if !p.splits_in_d() {
                    continue;
                }
                let rep = canonical_rep(&p).unwrap();
                for g in &all {
                    let conj = compose(&compose(g, &rep).unwrap(), &g.inverse()).unwrap();
                    let expect = if g.is_even() { Sign::Plus } else { Sign::Minus };
                    assert_eq!(d_sign(&conj).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn classify_is_conjugation_invariant_exhaustive() {
        for n in 1..=3 {
            let all = bn_elements(n);
            for y in &all {
                let py = classify(y).unwrap();
                for x in &all {
                    let conj = compose(&compose(x, y).unwrap(), &x.inverse()).unwrap();
                    assert_eq!(classify(&conj).unwrap(), py);
                }
            }
        }
    }

    #[test]
    fn profile_json_roundtrip() {
        let p = Profile::with_sign(Partition::new(vec![2]).unwrap(), Sign::Minus);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"lambda":[2],"mu":[],"sign":"-"}"#);
        assert_eq!(profile_from_json(&s, 2).unwrap(), p);
        let q = profile(&[2, 1], &[1]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"lambda":[2,1],"mu":[1],"sign":null}"#);
        assert_eq!(profile_from_json(&s, 4).unwrap(), q);
        // Sign on a non-splitting profile is rejected.
        assert!(profile_from_json(r#"{"lambda":[1],"mu":[],"sign":"+"}"#, 1).is_err());
        // Rank mismatch is rejected.
        assert!(profile_from_json(r#"{"lambda":[2],"mu":[]}"#, 3).is_err());
    }

    #[test]
    fn permutation_json_roundtrip() {
        let x = perm(&[2, 1, 4, 3]);
        assert_eq!(x.to_string(), "[2,1,4,3]");
        assert_eq!(permutation_from_json("[2,1,4,3]").unwrap(), x);
        assert!(permutation_from_json("[1,1]").is_err());
        assert!(permutation_from_json("[1,2,3]").is_err());
        assert!(permutation_from_json("nonsense").is_err());
    }
}
