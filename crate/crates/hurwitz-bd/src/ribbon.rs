//! Ribbon decompositions for the B family: gluing sequences on 2n disks,
//! boundary permutations, surface invariants, and the counting
//! correspondence with reflection sequences.
//!
//! A decomposition glues ribbons to 2n marked disks. A pair op at (i, j)
//! glues one ribbon from disk i to disk j and its mirror from disk τ(i) to
//! disk τ(j); an invariant op at i glues a single τ-invariant ribbon from
//! disk i to disk τ(i). Sequences of gluing ops correspond bijectively to
//! sequences of reflections (pair ↔ r_ij, invariant ↔ l_i).

use crate::hurwitz::oracle_hb;
use crate::perm::{classify, compose, tau_point, Permutation, Profile, ReflKind};
use crate::{Error, Rat, Result};
use num_traits::One;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// One gluing operation, stored in canonical index form: the smallest index
/// of the glued orbit comes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GluingOp {
    /// Ribbon from disk i to disk j plus its τ-mirror ribbon; i < j, j ≠ τ(i).
    Pair { i: usize, j: usize },
    /// Single τ-invariant ribbon from disk i to disk τ(i); i ≤ n.
    Invariant { i: usize },
}

impl GluingOp {
    /// Pair op gluing disks i ↔ j and τ(i) ↔ τ(j). Any of the four
    /// equivalent index pairs is accepted and canonicalized.
    pub fn pair(n: usize, i: usize, j: usize) -> Result<GluingOp> {
        if n == 0 || i < 1 || j < 1 || i > 2 * n || j > 2 * n {
            return Err(Error::Precondition("pair indices out of range".into()));
        }
        if j == i || j == tau_point(n, i) {
            return Err(Error::Precondition(
                "pair indices must be distinct and not tau-paired".into(),
            ));
        }
        let (ti, tj) = (tau_point(n, i), tau_point(n, j));
        let a = i.min(j).min(ti).min(tj);
        let b = match a {
            x if x == i => j,
            x if x == j => i,
            x if x == ti => tj,
            _ => ti,
        };
        Ok(GluingOp::Pair { i: a, j: b })
    }

    /// Invariant op gluing disk i to disk τ(i).
    pub fn invariant(n: usize, i: usize) -> Result<GluingOp> {
        if n == 0 || i < 1 || i > 2 * n {
            return Err(Error::Precondition("invariant index out of range".into()));
        }
        Ok(GluingOp::Invariant { i: i.min(tau_point(n, i)) })
    }

    pub fn kind(&self) -> ReflKind {
        match self {
            GluingOp::Pair { .. } => ReflKind::R,
            GluingOp::Invariant { .. } => ReflKind::L,
        }
    }

    /// The corresponding reflection of B_n.
    pub fn reflection(&self, n: usize) -> Permutation {
        match *self {
            GluingOp::Pair { i, j } => Permutation::from_cycles(
                n,
                &[&[i, j], &[tau_point(n, i), tau_point(n, j)]],
            )
            .expect("canonical pair indices form a reflection"),
            GluingOp::Invariant { i } => Permutation::from_cycles(n, &[&[i, tau_point(n, i)]])
                .expect("canonical invariant index forms a reflection"),
        }
    }
}

/// An ordered sequence of gluing operations on 2n disks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonDecomposition {
    n: usize,
    ops: Vec<GluingOp>,
}

/// Surface invariants of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonStats {
    /// Euler characteristic 2n − 2m − ℓ.
    pub chi: i64,
    /// Cycles of the boundary permutation, fixed points included.
    pub boundary_components: usize,
    /// Connected components of the disks-and-ribbons graph.
    pub components: usize,
    /// Conjugacy profile of the boundary permutation.
    pub profile: Profile,
}

impl RibbonDecomposition {
    pub fn new(n: usize, ops: Vec<GluingOp>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("ribbon surfaces need n >= 1".into()));
        }
        // Re-canonicalize to validate every index against this n.
        let ops = ops
            .into_iter()
            .map(|op| match op {
                GluingOp::Pair { i, j } => GluingOp::pair(n, i, j),
                GluingOp::Invariant { i } => GluingOp::invariant(n, i),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RibbonDecomposition { n, ops })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ops(&self) -> &[GluingOp] {
        &self.ops
    }

    /// Number of pair ops (m) and invariant ops (ℓ).
    pub fn type_counts(&self) -> (usize, usize) {
        let m = self.ops.iter().filter(|op| op.kind() == ReflKind::R).count();
        (m, self.ops.len() - m)
    }

    /// The reflection sequence encoded by this decomposition.
    pub fn to_reflections(&self) -> Vec<Permutation> {
        self.ops.iter().map(|op| op.reflection(self.n)).collect()
    }

    /// Product of the corresponding reflections in gluing order (the first
    /// glued ribbon acts first).
    pub fn boundary_permutation(&self) -> Permutation {
        let mut acc = Permutation::identity(self.n);
        for op in &self.ops {
            acc = compose(&op.reflection(self.n), &acc).expect("sizes match");
        }
        acc
    }

    /// Surface invariants: Euler characteristic, boundary cycle count,
    /// connected components, boundary profile.
    pub fn stats(&self) -> RibbonStats {
        let (m, l) = self.type_counts();
        let chi = 2 * self.n as i64 - 2 * m as i64 - l as i64;
        let boundary = self.boundary_permutation();
        let boundary_components = boundary.cycles().len();
        let profile = classify(&boundary).expect("boundary lies in the group");

        // Components of the graph on 2n disks with one edge per ribbon.
        let mut parent: Vec<usize> = (0..2 * self.n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        let mut unite = |a: usize, b: usize, parent: &mut Vec<usize>| {
            let (ra, rb) = (find(parent, a - 1), find(parent, b - 1));
            parent[ra] = rb;
        };
        for op in &self.ops {
            match *op {
                GluingOp::Pair { i, j } => {
                    unite(i, j, &mut parent);
                    unite(tau_point(self.n, i), tau_point(self.n, j), &mut parent);
                }
                GluingOp::Invariant { i } => unite(i, tau_point(self.n, i), &mut parent),
            }
        }
        let mut roots: Vec<usize> = (0..2 * self.n).map(|x| find(&mut parent, x)).collect();
        roots.sort_unstable();
        roots.dedup();
        RibbonStats { chi, boundary_components, components: roots.len(), profile }
    }

    /// JSON form: {"n": …, "ops": [{"kind":"pair","i":…,"j":…}, …]}.
    pub fn to_json(&self) -> serde_json::Value {
        let ops: Vec<serde_json::Value> = self
            .ops
            .iter()
            .map(|op| match *op {
                GluingOp::Pair { i, j } => {
                    serde_json::json!({"kind": "pair", "i": i, "j": j})
                }
                GluingOp::Invariant { i } => {
                    serde_json::json!({"kind": "invariant", "i": i})
                }
            })
            .collect();
        serde_json::json!({"n": self.n, "ops": ops})
    }
}

/// Parse a decomposition from the JSON form produced by
/// [`RibbonDecomposition::to_json`]. Safe on arbitrary input.
pub fn ribbon_from_json(s: &str) -> Result<RibbonDecomposition> {
    let value: serde_json::Value =
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let n = value
        .get("n")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| Error::Parse("missing integer field n".into()))?;
    if n == 0 || n > 1_000_000 {
        return Err(Error::Parse("n out of range".into()));
    }
    let n = n as usize;
    let ops_value = value
        .get("ops")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::Parse("missing array field ops".into()))?;
    let index = |op: &serde_json::Value, key: &str| -> Result<usize> {
        op.get(key)
            .and_then(|v| v.as_u64())
            .filter(|&v| v >= 1 && v <= 2 * n as u64)
            .map(|v| v as usize)
            .ok_or_else(|| Error::Parse(format!("missing or invalid index {key}")))
    };
    let mut ops = Vec::with_capacity(ops_value.len());
    for op in ops_value {
        let kind = op
            .get("kind")
            .and_then(|v| v.as_str())
            .ok_or_else(|| Error::Parse("missing string field kind".into()))?;
        let parsed = match kind {
            "pair" => GluingOp::pair(n, index(op, "i")?, index(op, "j")?),
            "invariant" => GluingOp::invariant(n, index(op, "i")?),
            other => return Err(Error::Parse(format!("unknown op kind {other:?}"))),
        };
        ops.push(parsed.map_err(|e| Error::Parse(e.to_string()))?);
    }
    RibbonDecomposition::new(n, ops)
}

/// Encode a reflection sequence as a ribbon decomposition (the inverse of
/// [`RibbonDecomposition::to_reflections`]).
pub fn from_reflections(n: usize, seq: &[Permutation]) -> Result<RibbonDecomposition> {
    let mut ops = Vec::with_capacity(seq.len());
    for x in seq {
        if x.n() != n {
            return Err(Error::SizeMismatch(x.n(), n));
        }
        let cycles: Vec<Vec<usize>> =
            x.cycles().into_iter().filter(|c| c.len() > 1).collect();
        let op = match cycles.as_slice() {
            [c] if c.len() == 2 && c[1] == tau_point(n, c[0]) => GluingOp::invariant(n, c[0])?,
            [c, d] if c.len() == 2 && d.len() == 2 => {
                let mirrored = d.contains(&tau_point(n, c[0])) && d.contains(&tau_point(n, c[1]));
                if !mirrored {
                    return Err(Error::Precondition(format!("{x} is not a reflection")));
                }
                GluingOp::pair(n, c[0], c[1])?
            }
            _ => return Err(Error::Precondition(format!("{x} is not a reflection"))),
        };
        ops.push(op);
    }
    RibbonDecomposition::new(n, ops)
}

/// All canonical gluing ops of one kind.
pub fn gluing_ops(n: usize, kind: ReflKind) -> Vec<GluingOp> {
    let mut out = std::collections::BTreeSet::new();
    match kind {
        ReflKind::R => {
            for i in 1..=2 * n {
                for j in 1..=2 * n {
                    if j != i && j != tau_point(n, i) {
                        out.insert(GluingOp::pair(n, i, j).expect("valid indices"));
                    }
                }
            }
        }
        ReflKind::L => {
            for i in 1..=n {
                out.insert(GluingOp::invariant(n, i).expect("valid index"));
            }
        }
    }
    out.into_iter().collect()
}

/// Count decompositions with m pair ops and l invariant ops per boundary
/// profile, for one fixed type pattern. Every interleaving pattern is
/// enumerated and asserted to give identical counts, so the per-pattern
/// count matches n!·h^B and the count over all arrangements is C(m+l,m)
/// times that.
pub fn ribbon_counts(n: usize, m: usize, l: usize) -> Result<BTreeMap<Profile, u64>> {
    if n == 0 {
        return Err(Error::Precondition("ribbon surfaces need n >= 1".into()));
    }
    let pair_ops = gluing_ops(n, ReflKind::R);
    let inv_ops = gluing_ops(n, ReflKind::L);
    let mut cost: u128 = 1;
    for _ in 0..m {
        cost = cost.saturating_mul(pair_ops.len() as u128);
    }
    for _ in 0..l {
        cost = cost.saturating_mul(inv_ops.len() as u128);
    }
    let patterns = {
        // All arrangements of m R-slots and l L-slots.
        fn rec(cur: &mut Vec<ReflKind>, m: usize, l: usize, out: &mut Vec<Vec<ReflKind>>) {
            if m == 0 && l == 0 {
                out.push(cur.clone());
                return;
            }
            if m > 0 {
                cur.push(ReflKind::R);
                rec(cur, m - 1, l, out);
                cur.pop();
            }
            if l > 0 {
                cur.push(ReflKind::L);
                rec(cur, m, l - 1, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), m, l, &mut out);
        out
    };
    if cost.saturating_mul(patterns.len() as u128) > crate::hurwitz::DEFAULT_BUDGET as u128 {
        return Err(Error::BudgetExceeded {
            required: cost.saturating_mul(patterns.len() as u128),
            budget: crate::hurwitz::DEFAULT_BUDGET,
        });
    }
    let count_pattern = |pattern: &[ReflKind]| -> BTreeMap<Profile, u64> {
        let slots: Vec<&[GluingOp]> = pattern
            .iter()
            .map(|k| match k {
                ReflKind::R => pair_ops.as_slice(),
                ReflKind::L => inv_ops.as_slice(),
            })
            .collect();
        let mut counts: BTreeMap<Profile, u64> = BTreeMap::new();
        let mut stack: Vec<GluingOp> = Vec::with_capacity(pattern.len());
        fn rec(
            n: usize,
            slots: &[&[GluingOp]],
            stack: &mut Vec<GluingOp>,
            counts: &mut BTreeMap<Profile, u64>,
        ) {
            match slots.split_first() {
                None => {
                    let d = RibbonDecomposition::new(n, stack.clone())
                        .expect("enumerated ops are canonical");
                    let stats = d.stats();
                    // Orientable-surface consistency on every instance.
                    assert_eq!(
                        (stats.chi - stats.boundary_components as i64).rem_euclid(2),
                        0,
                        "chi and boundary count must share parity"
                    );
                    *counts.entry(stats.profile).or_insert(0) += 1;
                }
                Some((first, rest)) => {
                    for &op in *first {
                        stack.push(op);
                        rec(n, rest, stack, counts);
                        stack.pop();
                    }
                }
            }
        }
        rec(n, &slots, &mut stack, &mut counts);
        counts
    };
    let maps: Vec<BTreeMap<Profile, u64>> =
        patterns.par_iter().map(|p| count_pattern(p)).collect();
    for w in maps.windows(2) {
        assert_eq!(w[0], w[1], "arrangement patterns must give equal profile counts");
    }
    Ok(maps.into_iter().next().expect("at least one pattern"))
}

/// Check the counting correspondence at one (n, m, l): per-pattern ribbon
/// counts equal n!·h^B_{m,l,λ,μ} for every profile.
pub fn counting_correspondence(n: u32, m: u32, l: u32) -> Result<bool> {
    let counts = ribbon_counts(n as usize, m as usize, l as usize)?;
    let oracle = oracle_hb(n, m, l)?;
    let mut nfact = Rat::one();
    for k in 1..=n {
        nfact *= Rat::from_integer(k.into());
    }
    for p in crate::perm::profiles_of_rank(n) {
        let ribbon = counts.get(&p).copied().unwrap_or(0);
        let expected = oracle.entry(m, l, &p) * &nfact;
        if Rat::from_integer(ribbon.into()) != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decompositions-by-profile table for the CLI: every (m, l) split of the
/// given total length.
pub fn ribbon_count_table(
    n: usize,
    len: usize,
) -> Result<Vec<(usize, usize, BTreeMap<Profile, u64>)>> {
    let mut out = Vec::new();
    for m in 0..=len {
        let l = len - m;
        out.push((m, l, ribbon_counts(n, m, l)?));
    }
    Ok(out)
}
