//! Cut-and-join operators: the six-term CJ₁ and the swap operator CJ₂ in
//! the p,q variables, the classical operator and Euler field, and the
//! generating-function engine producing Hurwitz-number tables as
//! coefficients of CJ₁^m CJ₂^ℓ (p₁ⁿ/n!).

use crate::partition::Partition;
use crate::perm::Profile;
use crate::poly::{apply_operator, Family, Monomial, OpTerm, PQPoly, Side};
use crate::{Error, Rat, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

fn half(n: i64) -> Rat {
    Rat::new(n.into(), 2.into())
}

fn var(side: Side, i: u32) -> Monomial {
    match side {
        Side::First => Monomial::var_p(i),
        Side::Second => Monomial::var_q(i),
    }
}

/// The six-term cut-and-join operator CJ₁ truncated to indices ≤ max:
///   Σ_{i,j≥1} (i+j)p_iq_j∂q_{i+j} + 2ij·q_{i+j}∂p_i∂q_j + ij·p_{i+j}∂q_i∂q_j
///           + ½(i+j)q_iq_j∂p_{i+j} + ½(i+j)p_ip_j∂p_{i+j} + ij·p_{i+j}∂p_i∂p_j
/// over ordered pairs (i, j).
pub fn cj1_spec(max: u32) -> Vec<OpTerm> {
    let mut spec = Vec::new();
    let p = |i| var(Side::First, i);
    let q = |i| var(Side::Second, i);
    for i in 1..=max {
        for j in 1..=max {
            if i + j > max {
                break;
            }
            let s = i + j;
            spec.push(OpTerm { coeff: rat(s as i64), mul: p(i).mul(&q(j)), der: q(s) });
            spec.push(OpTerm {
                coeff: rat(2 * (i * j) as i64),
                mul: q(s),
                der: p(i).mul(&q(j)),
            });
            spec.push(OpTerm { coeff: rat((i * j) as i64), mul: p(s), der: q(i).mul(&q(j)) });
            spec.push(OpTerm { coeff: half(s as i64), mul: q(i).mul(&q(j)), der: p(s) });
            spec.push(OpTerm { coeff: half(s as i64), mul: p(i).mul(&p(j)), der: p(s) });
            spec.push(OpTerm { coeff: rat((i * j) as i64), mul: p(s), der: p(i).mul(&p(j)) });
        }
    }
    spec
}

/// CJ₂ = Σ_i i (p_i ∂q_i + q_i ∂p_i), truncated to indices ≤ max.
pub fn cj2_spec(max: u32) -> Vec<OpTerm> {
    let mut spec = Vec::new();
    for i in 1..=max {
        spec.push(OpTerm {
            coeff: rat(i as i64),
            mul: var(Side::First, i),
            der: var(Side::Second, i),
        });
        spec.push(OpTerm {
            coeff: rat(i as i64),
            mul: var(Side::Second, i),
            der: var(Side::First, i),
        });
    }
    spec
}

/// Classical cut-and-join on one variable list, over ordered pairs:
///   Σ_{i,j≥1} ij·x_{i+j}∂x_i∂x_j + (i+j)x_ix_j∂x_{i+j}.
pub fn cja_spec(max: u32, side: Side) -> Vec<OpTerm> {
    let mut spec = Vec::new();
    for i in 1..=max {
        for j in 1..=max {
            if i + j > max {
                break;
            }
            let s = i + j;
            spec.push(OpTerm {
                coeff: rat((i * j) as i64),
                mul: var(side, s),
                der: var(side, i).mul(&var(side, j)),
            });
            spec.push(OpTerm {
                coeff: rat(s as i64),
                mul: var(side, i).mul(&var(side, j)),
                der: var(side, s),
            });
        }
    }
    spec
}

/// Euler field E = Σ_i i·x_i∂x_i on one variable list.
pub fn euler_spec(max: u32, side: Side) -> Vec<OpTerm> {
    (1..=max)
        .map(|i| OpTerm { coeff: rat(i as i64), mul: var(side, i), der: var(side, i) })
        .collect()
}

fn weight_cap(f: &PQPoly) -> u32 {
    f.max_weight().min(u32::MAX as u64) as u32
}

fn expect_pq(f: &PQPoly) -> Result<()> {
    if f.family != Family::PQ {
        return Err(Error::FamilyMismatch);
    }
    Ok(())
}

/// Apply CJ₁; the operator is weight-preserving, so indices truncate at the
/// weight of the input.
pub fn cj1(f: &PQPoly) -> Result<PQPoly> {
    expect_pq(f)?;
    Ok(apply_operator(&cj1_spec(weight_cap(f)), f))
}

/// Apply CJ₂.
pub fn cj2(f: &PQPoly) -> Result<PQPoly> {
    expect_pq(f)?;
    Ok(apply_operator(&cj2_spec(weight_cap(f)), f))
}

/// Apply the classical cut-and-join to the chosen variable list, treating
/// the other list as constants.
pub fn cj_classical_on(f: &PQPoly, side: Side) -> PQPoly {
    apply_operator(&cja_spec(weight_cap(f), side), f)
}

/// Classical cut-and-join on the first (p) variable list.
pub fn cj_classical(f: &PQPoly) -> PQPoly {
    cj_classical_on(f, Side::First)
}

/// Euler field on the chosen variable list.
pub fn euler_on(f: &PQPoly, side: Side) -> PQPoly {
    apply_operator(&euler_spec(weight_cap(f), side), f)
}

/// Euler field on the first variable list.
pub fn euler(f: &PQPoly) -> PQPoly {
    euler_on(f, Side::First)
}

/// Table of Hurwitz numbers h^B_{m,ℓ,λ,μ} for one rank n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzTable {
    pub n: u32,
    pub m_max: u32,
    pub l_max: u32,
    /// (m, ℓ, profile) → h; zero entries are not stored.
    entries: BTreeMap<(u32, u32, Profile), Rat>,
}

impl HurwitzTable {
    /// Assemble a table from explicit entries; zero values are dropped.
    pub fn from_entries(
        n: u32,
        m_max: u32,
        l_max: u32,
        entries: BTreeMap<(u32, u32, Profile), Rat>,
    ) -> Self {
        let entries = entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        HurwitzTable { n, m_max, l_max, entries }
    }

    pub fn entry(&self, m: u32, l: u32, profile: &Profile) -> Rat {
        self.entries
            .get(&(m, l, profile.clone()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(u32, u32, Profile), &Rat)> {
        self.entries.iter()
    }

    /// The full (m, ℓ) layer as a polynomial: Σ h^B_{m,ℓ,λ,μ} p_λ q_μ.
    pub fn layer(&self, m: u32, l: u32) -> PQPoly {
        let mut out = PQPoly::zero(Family::PQ);
        for ((em, el, profile), c) in &self.entries {
            if *em == m && *el == l {
                out.add_term(Monomial::from_partitions(&profile.lambda, &profile.mu), c.clone());
            }
        }
        out
    }

    /// CSV with header `n,m,l,lambda,mu,value`; partitions are `+`-joined
    /// parts with `-` for the empty partition; values are exact fractions.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,m,l,lambda,mu,value\n");
        for ((m, l, profile), value) in &self.entries {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                self.n,
                m,
                l,
                csv_partition(&profile.lambda),
                csv_partition(&profile.mu),
                value
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|((m, l, profile), value)| {
                serde_json::json!({
                    "m": m,
                    "l": l,
                    "lambda": profile.lambda.parts(),
                    "mu": profile.mu.parts(),
                    "value": value.to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "m_max": self.m_max,
            "l_max": self.l_max,
            "entries": entries,
        })
    }
}

/// Partition in CSV form: `2+1`, or `-` when empty.
pub fn csv_partition(p: &Partition) -> String {
    if p.is_empty() {
        "-".to_string()
    } else {
        p.parts().iter().map(|k| k.to_string()).collect::<Vec<_>>().join("+")
    }
}

/// Parse the CSV partition form produced by [`csv_partition`].
pub fn parse_csv_partition(s: &str) -> Result<Partition> {
    if s == "-" {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for piece in s.split('+') {
        let v: u32 = piece
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad partition part {piece:?}")))?;
        parts.push(v);
    }
    Ok(Partition::from_unsorted(parts))
}

/// All Hurwitz numbers h^B_{m,ℓ,λ,μ} with m ≤ m_max, ℓ ≤ l_max at rank n,
/// as coefficients of CJ₁^m CJ₂^ℓ (p₁ⁿ/n!).
pub fn hurwitz_series(n: u32, m_max: u32, l_max: u32) -> Result<HurwitzTable> {
    if n < 1 {
        return Err(Error::Precondition("hurwitz_series needs n >= 1".into()));
    }
    let mut nfact = Rat::one();
    for k in 1..=n {
        nfact *= rat(k as i64);
    }
    let start = PQPoly::var(Family::PQ, Side::First, 1)
        .pow(n)
        .scale(&nfact.recip());
    let mut entries = BTreeMap::new();
    // March ℓ upward from the seed, then m upward from each (0, ℓ) layer.
    let mut l_layer = start;
    for l in 0..=l_max {
        let mut layer = l_layer.clone();
        for m in 0..=m_max {
            for (mono, c) in layer.terms() {
                entries.insert((m, l, mono.to_profile()), c.clone());
            }
            if m < m_max {
                layer = cj1(&layer)?;
            }
        }
        if l < l_max {
            l_layer = cj2(&l_layer)?;
        }
    }
    Ok(HurwitzTable { n, m_max, l_max, entries })
}
