//! Center of the group algebra in the class-sum basis: multiplicity counts,
//! the T₁/T₂ matrices for B_n, the Θ_D matrix for D_n with its signed
//! classes, and the ± block decomposition for even n.
//!
//! All matrices act on normalized class sums Ĉ = (Σ_{g∈C} g)/#C, so the
//! entry at (p′, p) is the number of reflections u with u·rep(p) ∈ C_{p′}.

use crate::partition::{partitions_of, Partition};
use crate::perm::{
    canonical_rep, classify, classify_signed, compose, profiles_of_rank, reflections, Permutation,
    Profile, ReflKind,
};
use crate::{Error, Rat, Result};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

/// A vector in the center of the group algebra, written in the normalized
/// class-sum basis Ĉ_{λ|μ}. For D_n vectors, split profiles carry signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassVector {
    n: u32,
    entries: BTreeMap<Profile, Rat>,
}

impl ClassVector {
    pub fn new(n: u32) -> Self {
        ClassVector { n, entries: BTreeMap::new() }
    }

    /// Build from a coefficient map, dropping zero coefficients.
    pub fn from_entries(n: u32, entries: BTreeMap<Profile, Rat>) -> Self {
        let mut v = ClassVector::new(n);
        for (p, c) in entries {
            v.add_term(p, c);
        }
        v
    }

    /// The basis vector Ĉ_p.
    pub fn basis_vector(n: u32, p: Profile) -> Self {
        let mut v = ClassVector::new(n);
        v.add_term(p, Rat::from_integer(1.into()));
        v
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Profile, &Rat)> {
        self.entries.iter()
    }

    pub fn coeff(&self, p: &Profile) -> Rat {
        self.entries.get(p).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_term(&mut self, p: Profile, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry(p) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &ClassVector) -> Result<ClassVector> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n as usize, other.n as usize));
        }
        let mut out = self.clone();
        for (p, c) in &other.entries {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ClassVector) -> Result<ClassVector> {
        self.add(&other.scale(&-Rat::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Rat) -> ClassVector {
        if c.is_zero() {
            return ClassVector::new(self.n);
        }
        ClassVector {
            n: self.n,
            entries: self.entries.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }
}

/// The involution 𝓘 of conjugation by the fixed odd element l₁: it swaps the
/// two halves of every split class and fixes every unsplit class.
pub fn involution_apply(v: &ClassVector) -> ClassVector {
    ClassVector {
        n: v.n,
        entries: v.entries.iter().map(|(p, c)| (p.flipped(), c.clone())).collect(),
    }
}

/// Matrix flavor: which operator (and hence which basis convention) it holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    /// Multiplication by 𝒯₁ on Z[B_n]; basis: unsigned profiles of rank n.
    T1,
    /// Multiplication by 𝒯₂ on Z[B_n]; same basis as T1.
    T2,
    /// Multiplication by 𝒯₁ on Z[D_n]; split profiles appear twice, signed.
    ThetaD,
    /// Plus block of the decomposition; basis: unsigned even-#μ profiles.
    DPlus,
    /// Minus block; basis: halved even partitions, read as classes of S_{n/2}.
    DMinus,
    /// Transposition-sum matrix of a symmetric group S_k; basis: (ν|∅), ν ⊢ k.
    STranspositions,
}

impl MatrixKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MatrixKind::T1 => "t1",
            MatrixKind::T2 => "t2",
            MatrixKind::ThetaD => "theta_d",
            MatrixKind::DPlus => "d_plus",
            MatrixKind::DMinus => "d_minus",
            MatrixKind::STranspositions => "s_transpositions",
        }
    }
}

/// Integer matrix over an ordered profile basis, stored column-sparse.
/// Entries are multiplicity counts (nonnegative) except in the minus block,
/// where signed integer combinations can occur.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterMatrix {
    pub n: u32,
    pub kind: MatrixKind,
    pub basis: Vec<Profile>,
    /// (col, row) → entry; zeros are not stored.
    entries: BTreeMap<(usize, usize), i64>,
}

impl CenterMatrix {
    fn new(n: u32, kind: MatrixKind, basis: Vec<Profile>) -> Self {
        CenterMatrix { n, kind, basis, entries: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, p: &Profile) -> Option<usize> {
        self.basis.binary_search(p).ok()
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries.get(&(col, row)).copied().unwrap_or(0)
    }

    fn add_entry(&mut self, row: usize, col: usize, v: i64) {
        if v == 0 {
            return;
        }
        let slot = self.entries.entry((col, row)).or_insert(0);
        *slot += v;
        if *slot == 0 {
            self.entries.remove(&(col, row));
        }
    }

    pub fn column(&self, col: usize) -> Vec<i64> {
        let mut out = vec![0i64; self.dim()];
        for (&(_, row), &v) in self.entries.range((col, 0)..(col, usize::MAX)) {
            out[row] = v;
        }
        out
    }

    pub fn column_sum(&self, col: usize) -> i64 {
        self.entries
            .range((col, 0)..(col, usize::MAX))
            .map(|(_, &v)| v)
            .sum()
    }

    pub fn scaled(&self, k: i64) -> CenterMatrix {
        let mut out = self.clone();
        if k == 0 {
            out.entries.clear();
        } else {
            for v in out.entries.values_mut() {
                *v *= k;
            }
        }
        out
    }

    /// Apply to a class vector written over this basis.
    pub fn apply(&self, v: &ClassVector) -> Result<ClassVector> {
        let mut out = ClassVector::new(v.n());
        for (p, c) in v.entries() {
            let col = self
                .index_of(p)
                .ok_or_else(|| Error::Precondition(format!("profile {p} not in matrix basis")))?;
            for (&(_, row), &m) in self.entries.range((col, 0)..(col, usize::MAX)) {
                out.add_term(self.basis[row].clone(), c * Rat::from_integer(m.into()));
            }
        }
        Ok(out)
    }

    /// Matrix product self·other over a shared basis.
    pub fn matmul(&self, other: &CenterMatrix) -> Result<CenterMatrix> {
        if self.basis != other.basis {
            return Err(Error::Precondition("matrix bases differ".into()));
        }
        let mut out = CenterMatrix::new(self.n, self.kind, self.basis.clone());
        for (&(col, mid), &b) in &other.entries {
            for (&(_, row), &a) in self.entries.range((mid, 0)..(mid, usize::MAX)) {
                out.add_entry(row, col, a * b);
            }
        }
        Ok(out)
    }

    /// Equality of entry data (ignoring basis labels), for relabeled blocks.
    pub fn same_entries(&self, other: &CenterMatrix) -> bool {
        self.dim() == other.dim() && self.entries == other.entries
    }

    /// JSON dump: ordered basis plus `[row, col, value]` triplets in
    /// column-major order.
    pub fn to_json(&self) -> serde_json::Value {
        let triplets: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(&(col, row), &v)| serde_json::json!([row, col, v]))
            .collect();
        serde_json::json!({
            "n": self.n,
            "kind": self.kind.as_str(),
            "basis": self.basis,
            "entries": triplets,
        })
    }
}

fn refl_kind(kind: u8) -> Result<ReflKind> {
    match kind {
        1 => Ok(ReflKind::R),
        2 => Ok(ReflKind::L),
        other => Err(Error::Precondition(format!("reflection kind must be 1 or 2, got {other}"))),
    }
}

fn expect_unsigned(p: &Profile) -> Result<()> {
    if p.sign.is_some() {
        return Err(Error::Precondition(format!("signed profile {p} where a B_n profile is expected")));
    }
    Ok(())
}

/// Validate a D_n profile: #μ even, and a sign exactly on split profiles.
fn expect_d_profile(p: &Profile) -> Result<()> {
    if !p.is_in_d() {
        return Err(Error::Precondition(format!("profile {p} has odd #μ, not a D_n class")));
    }
    match (p.splits_in_d(), p.sign.is_some()) {
        (true, false) => Err(Error::Precondition(format!("split profile {p} needs a sign"))),
        (false, true) => Err(Error::Precondition(format!("unsplit profile {p} must not carry a sign"))),
        _ => Ok(()),
    }
}

/// ⟨λ,μ | λ′,μ′⟩ of the given kind: the number of reflections u with
/// u · rep(p) in the class p2. Kind 1 counts R reflections, kind 2 counts L.
pub fn multiplicity(p: &Profile, p2: &Profile, kind: u8) -> Result<u64> {
    expect_unsigned(p)?;
    expect_unsigned(p2)?;
    if p.rank() != p2.rank() {
        return Err(Error::RankMismatch(p.rank() as usize, p2.rank() as usize));
    }
    let kind = refl_kind(kind)?;
    let n = p.rank() as usize;
    let rep = canonical_rep(p)?;
    let mut count = 0u64;
    for u in reflections(n, kind) {
        if classify(&compose(&u, &rep)?)? == *p2 {
            count += 1;
        }
    }
    Ok(count)
}

/// D_n multiplicity: R reflections only, with signed classification.
pub fn d_multiplicity(p: &Profile, p2: &Profile) -> Result<u64> {
    expect_d_profile(p)?;
    expect_d_profile(p2)?;
    if p.rank() != p2.rank() {
        return Err(Error::RankMismatch(p.rank() as usize, p2.rank() as usize));
    }
    let n = p.rank() as usize;
    let rep = canonical_rep(p)?;
    let mut count = 0u64;
    for u in reflections(n, ReflKind::R) {
        if classify_signed(&compose(&u, &rep)?)? == *p2 {
            count += 1;
        }
    }
    Ok(count)
}

/// The matrix of T_kind on Z[B_n] over the sorted profile basis.
pub fn t_matrix(n: u32, kind: u8) -> Result<CenterMatrix> {
    if n < 1 {
        return Err(Error::Precondition("t_matrix needs n >= 1".into()));
    }
    let rkind = refl_kind(kind)?;
    let mkind = if kind == 1 { MatrixKind::T1 } else { MatrixKind::T2 };
    let basis = profiles_of_rank(n);
    let mut m = CenterMatrix::new(n, mkind, basis);
    let refls = reflections(n as usize, rkind);
    for col in 0..m.dim() {
        let rep = canonical_rep(&m.basis[col])?;
        for u in &refls {
            let target = classify(&compose(u, &rep)?)?;
            let row = m
                .index_of(&target)
                .expect("product of a reflection with a rank-n element has rank n");
            m.add_entry(row, col, 1);
        }
    }
    Ok(m)
}

/// Basis of Z[D_n]: even-#μ profiles, with split ones doubled into ±.
pub fn d_basis(n: u32) -> Vec<Profile> {
    let mut basis = Vec::new();
    for p in profiles_of_rank(n) {
        if !p.is_in_d() {
            continue;
        }
        if p.splits_in_d() {
            basis.push(p.signed(crate::perm::Sign::Plus));
            basis.push(p.signed(crate::perm::Sign::Minus));
        } else {
            basis.push(p);
        }
    }
    basis.sort();
    basis
}

/// The matrix of multiplication by 𝒯₁ on Z[D_n], over the signed basis.
pub fn theta_d_matrix(n: u32) -> Result<CenterMatrix> {
    if n < 2 {
        return Err(Error::Precondition("theta_d_matrix needs n >= 2".into()));
    }
    let basis = d_basis(n);
    let mut m = CenterMatrix::new(n, MatrixKind::ThetaD, basis);
    let refls = reflections(n as usize, ReflKind::R);
    for col in 0..m.dim() {
        let rep = canonical_rep(&m.basis[col])?;
        for u in &refls {
            let target = classify_signed(&compose(u, &rep)?)?;
            let row = m
                .index_of(&target)
                .expect("R reflections preserve D_n and the rank");
            m.add_entry(row, col, 1);
        }
    }
    Ok(m)
}

/// Decompose Θ_D into its plus and minus blocks for even n.
///
/// The change of basis keeps unsplit classes, and replaces each split pair
/// Ĉ± by Ĉ⁺+Ĉ⁻ (plus block, labeled by the unsigned profile) and
/// 2^{−ℓ(λ/2)}(Ĉ⁺−Ĉ⁻) (minus block, labeled by the halved partition
/// λ/2 ⊢ n/2). The 2^{−ℓ} factor is the p_i = 2r_i rescaling of the
/// polynomial model; in this basis Θ_D on the minus part is exactly
/// 4 × the transposition-sum matrix of S_{n/2}.
/// Fails if Θ_D does not actually respect the two blocks.
pub fn d_block_decompose(n: u32) -> Result<(CenterMatrix, CenterMatrix)> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::Precondition("d_block_decompose needs even n >= 2".into()));
    }
    let theta = theta_d_matrix(n)?;
    let plus_basis: Vec<Profile> = profiles_of_rank(n).into_iter().filter(|p| p.is_in_d()).collect();
    let minus_basis: Vec<Profile> = plus_basis
        .iter()
        .filter(|p| p.splits_in_d())
        .map(|p| Profile::new(p.lambda.halved().expect("split profiles have even parts"), Partition::empty()))
        .collect();
    let mut plus = CenterMatrix::new(n, MatrixKind::DPlus, plus_basis);
    let mut minus = CenterMatrix::new(n / 2, MatrixKind::DMinus, minus_basis);

    // Row readers for a column vector over the signed theta basis.
    let signed_index = |p: &Profile| theta.index_of(p).expect("profile in theta basis");
    let block_error = |what: &str| Error::Precondition(format!("block structure violated: {what}"));

    for (col, p) in plus.basis.clone().iter().enumerate() {
        let w: Vec<i64> = if p.splits_in_d() {
            let wp = theta.column(signed_index(&p.signed(crate::perm::Sign::Plus)));
            let wm = theta.column(signed_index(&p.signed(crate::perm::Sign::Minus)));
            wp.iter().zip(&wm).map(|(a, b)| a + b).collect()
        } else {
            theta.column(signed_index(p))
        };
        // Project onto the plus basis: split rows must have equal ± parts.
        for (row_plus, target) in plus.basis.clone().iter().enumerate() {
            let v = if target.splits_in_d() {
                let ip = signed_index(&target.signed(crate::perm::Sign::Plus));
                let im = signed_index(&target.signed(crate::perm::Sign::Minus));
                if w[ip] != w[im] {
                    return Err(block_error("plus-family image has unequal ± components"));
                }
                w[ip]
            } else {
                w[signed_index(target)]
            };
            plus.add_entry(row_plus, col, v);
        }
    }

    let split_unsigned: Vec<Profile> =
        plus.basis.iter().filter(|p| p.splits_in_d()).cloned().collect();
    for (col, p) in split_unsigned.iter().enumerate() {
        let wp = theta.column(signed_index(&p.signed(crate::perm::Sign::Plus)));
        let wm = theta.column(signed_index(&p.signed(crate::perm::Sign::Minus)));
        let w: Vec<i64> = wp.iter().zip(&wm).map(|(a, b)| a - b).collect();
        for (idx, target) in theta.basis.iter().enumerate() {
            match target.sign {
                None => {
                    if w[idx] != 0 {
                        return Err(block_error("minus-family image touches an unsplit class"));
                    }
                }
                Some(crate::perm::Sign::Plus) => {
                    let im = signed_index(&target.flipped());
                    if w[idx] != -w[im] {
                        return Err(block_error("minus-family image is not antisymmetric"));
                    }
                    let halved = target.lambda.halved().expect("split profiles have even parts");
                    let row = minus
                        .index_of(&Profile::new(halved.clone(), Partition::empty()))
                        .expect("halved split profile in minus basis");
                    // Rescale diff_{λ'} ↦ 2^{ℓ(ν')−ℓ(ν)} diff in the r-variable
                    // normalization; the result is integral when the block
                    // structure holds.
                    let lcol = minus.basis[col].lambda.len() as i32;
                    let lrow = halved.len() as i32;
                    let entry = scale_pow2(w[idx], lrow - lcol)
                        .ok_or_else(|| block_error("minus-block entry is not integral"))?;
                    minus.add_entry(row, col, entry);
                }
                Some(crate::perm::Sign::Minus) => {}
            }
        }
    }
    Ok((plus, minus))
}

/// v · 2^e for possibly negative e; None when the result is not integral.
fn scale_pow2(v: i64, e: i32) -> Option<i64> {
    if e >= 0 {
        v.checked_shl(e as u32)
    } else {
        let d = 1i64 << (-e as u32);
        (v % d == 0).then(|| v / d)
    }
}

/// Transposition-sum matrix of S_k over the sorted partition basis (as
/// profiles (ν|∅)): entry (ν′, ν) counts transpositions t with t·σ_ν of
/// type ν′.
pub fn s_transposition_matrix(k: u32) -> CenterMatrix {
    let basis: Vec<Profile> = partitions_of(k)
        .into_iter()
        .map(|nu| Profile::new(nu, Partition::empty()))
        .collect();
    let mut basis = basis;
    basis.sort();
    let mut m = CenterMatrix::new(k, MatrixKind::STranspositions, basis);
    let k = k as usize;
    for col in 0..m.dim() {
        let sigma = s_canonical(&m.basis[col].lambda, k);
        for a in 0..k {
            for b in (a + 1)..k {
                // t·σ with t = (a b): images t[σ[x]].
                let mut prod: Vec<usize> = (0..k).map(|x| sigma[x]).collect();
                for x in prod.iter_mut() {
                    if *x == a {
                        *x = b;
                    } else if *x == b {
                        *x = a;
                    }
                }
                let target = Profile::new(s_cycle_type(&prod), Partition::empty());
                let row = m.index_of(&target).expect("cycle type of a k-permutation");
                m.add_entry(row, col, 1);
            }
        }
    }
    m
}

/// Canonical S_k element of cycle type ν: consecutive cycles, 0-indexed.
fn s_canonical(nu: &Partition, k: usize) -> Vec<usize> {
    let mut images: Vec<usize> = (0..k).collect();
    let mut start = 0usize;
    for &part in nu.parts() {
        let part = part as usize;
        for off in 0..part {
            images[start + off] = start + (off + 1) % part;
        }
        start += part;
    }
    debug_assert_eq!(start, k, "partition weight equals k");
    images
}

fn s_cycle_type(images: &[usize]) -> Partition {
    let mut seen = vec![false; images.len()];
    let mut parts = Vec::new();
    for i in 0..images.len() {
        if seen[i] {
            continue;
        }
        let mut len = 0u32;
        let mut x = i;
        while !seen[x] {
            seen[x] = true;
            x = images[x];
            len += 1;
        }
        parts.push(len);
    }
    Partition::from_unsorted(parts)
}

/// Largest rank for which whole-group enumeration is supported.
pub const MAX_ENUM_RANK: u32 = 6;

type ClassMap = BTreeMap<Profile, Vec<Permutation>>;

fn class_cache() -> &'static Mutex<BTreeMap<(bool, u32), Arc<ClassMap>>> {
    static CACHE: OnceLock<Mutex<BTreeMap<(bool, u32), Arc<ClassMap>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

/// All conjugacy classes of B_n with their elements, keyed by profile.
pub fn bn_classes(n: u32) -> Result<Arc<ClassMap>> {
    classes_impl(n, false)
}

/// All conjugacy classes of D_n with their elements, keyed by signed profile.
pub fn dn_classes(n: u32) -> Result<Arc<ClassMap>> {
    classes_impl(n, true)
}

fn classes_impl(n: u32, d_only: bool) -> Result<Arc<ClassMap>> {
    if n < 1 || n > MAX_ENUM_RANK {
        return Err(Error::Precondition(format!(
            "class enumeration supports 1 <= n <= {MAX_ENUM_RANK}, got {n}"
        )));
    }
    let key = (d_only, n);
    if let Some(hit) = class_cache().lock().expect("cache lock").get(&key) {
        return Ok(Arc::clone(hit));
    }
    let mut map: ClassMap = BTreeMap::new();
    for g in crate::perm::bn_elements(n as usize) {
        if d_only && !g.is_even() {
            continue;
        }
        let profile = if d_only { classify_signed(&g)? } else { classify(&g)? };
        map.entry(profile).or_default().push(g);
    }
    let arc = Arc::new(map);
    class_cache().lock().expect("cache lock").insert(key, Arc::clone(&arc));
    Ok(arc)
}

/// #C_{λ|μ} in B_n, by enumeration (n ≤ MAX_ENUM_RANK).
pub fn bn_class_size(n: u32, p: &Profile) -> Result<u64> {
    expect_unsigned(p)?;
    p.validate(n)?;
    Ok(bn_classes(n)?.get(p).map_or(0, |v| v.len() as u64))
}

/// #C in D_n for a (possibly signed) D profile, by enumeration.
pub fn dn_class_size(n: u32, p: &Profile) -> Result<u64> {
    expect_d_profile(p)?;
    p.validate(n)?;
    Ok(dn_classes(n)?.get(p).map_or(0, |v| v.len() as u64))
}

/// T_kind on Z[B_n] computed directly in the group algebra: expand
/// 𝒯·Ĉ as a multiset of group elements and re-collect into class sums.
/// The class-sum normalization makes the entries #pairs / #C, which must
/// divide exactly; a non-integral entry is reported as an error.
pub fn t_matrix_by_group_algebra(n: u32, kind: u8) -> Result<CenterMatrix> {
    let rkind = refl_kind(kind)?;
    let mkind = if kind == 1 { MatrixKind::T1 } else { MatrixKind::T2 };
    let classes = bn_classes(n)?;
    let basis = profiles_of_rank(n);
    let mut m = CenterMatrix::new(n, mkind, basis);
    let refls = reflections(n as usize, rkind);
    for col in 0..m.dim() {
        let class = classes
            .get(&m.basis[col])
            .ok_or_else(|| Error::Precondition(format!("class {} is empty", m.basis[col])))?;
        let mut pair_counts: BTreeMap<usize, u64> = BTreeMap::new();
        for g in class {
            for u in &refls {
                let target = classify(&compose(u, g)?)?;
                let row = m.index_of(&target).expect("rank preserved");
                *pair_counts.entry(row).or_insert(0) += 1;
            }
        }
        let size = class.len() as u64;
        for (row, pairs) in pair_counts {
            if pairs % size != 0 {
                return Err(Error::Precondition(format!(
                    "class product is not a sum of class sums: {pairs} pairs over class size {size}"
                )));
            }
            m.add_entry(row, col, (pairs / size) as i64);
        }
    }
    Ok(m)
}

/// Θ_D computed directly in the group algebra of D_n (see
/// [`t_matrix_by_group_algebra`]), for cross-checking the signed classes.
pub fn theta_by_group_algebra(n: u32) -> Result<CenterMatrix> {
    let classes = dn_classes(n)?;
    let basis = d_basis(n);
    let mut m = CenterMatrix::new(n, MatrixKind::ThetaD, basis);
    let refls = reflections(n as usize, ReflKind::R);
    for col in 0..m.dim() {
        let class = classes
            .get(&m.basis[col])
            .ok_or_else(|| Error::Precondition(format!("class {} is empty", m.basis[col])))?;
        let mut pair_counts: BTreeMap<usize, u64> = BTreeMap::new();
        for g in class {
            for u in &refls {
                let target = classify_signed(&compose(u, g)?)?;
                let row = m.index_of(&target).expect("rank and parity preserved");
                *pair_counts.entry(row).or_insert(0) += 1;
            }
        }
        let size = class.len() as u64;
        for (row, pairs) in pair_counts {
            if pairs % size != 0 {
                return Err(Error::Precondition(format!(
                    "class product is not a sum of class sums: {pairs} pairs over class size {size}"
                )));
            }
            m.add_entry(row, col, (pairs / size) as i64);
        }
    }
    Ok(m)
}

/// Check that the R reflections are exactly the elements of the class
/// C_{(2,1^{n−2})|∅}, so that 𝒯₁ = #C · Ĉ for that class (and likewise
/// 𝒯₂ with the class C_{(1^{n−1})|(1)}).
pub fn reflection_class_check(n: u32, kind: u8) -> Result<bool> {
    let rkind = refl_kind(kind)?;
    let profile = match rkind {
        ReflKind::R => {
            if n < 2 {
                return Ok(reflections(n as usize, rkind).is_empty());
            }
            let mut parts = vec![2u32];
            parts.extend(std::iter::repeat(1).take((n - 2) as usize));
            Profile::new(Partition::from_unsorted(parts), Partition::empty())
        }
        ReflKind::L => {
            let parts = vec![1u32; (n - 1) as usize];
            Profile::new(Partition::from_unsorted(parts), Partition::from_unsorted(vec![1]))
        }
    };
    let classes = bn_classes(n)?;
    let class: Vec<Permutation> = classes.get(&profile).cloned().unwrap_or_default();
    let mut refls = reflections(n as usize, rkind);
    refls.sort();
    let mut class_sorted = class;
    class_sorted.sort();
    Ok(refls == class_sorted)
}
