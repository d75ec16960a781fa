//! Sparse exact-rational polynomials in the graded variable families
//! p, q (or u, v, or t), with deg x_k = k; differential-operator
//! application; the isomorphism Ψ; the u/v change of variables.

use crate::center::ClassVector;
use crate::partition::Partition;
use crate::perm::Profile;
use crate::{Error, Rat, Result};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Variable family of a polynomial. Arithmetic requires matching tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Variables p_k and q_k.
    PQ,
    /// Variables u_k and v_k.
    UV,
    /// Single family t_k (second variable list must stay empty).
    T,
}

impl Family {
    fn names(self) -> (char, Option<char>) {
        match self {
            Family::PQ => ('p', Some('q')),
            Family::UV => ('u', Some('v')),
            Family::T => ('t', None),
        }
    }
}

/// Which of the two variable lists of a family an operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// p (or u, or t).
    First,
    /// q (or v).
    Second,
}

/// A monomial: sparse exponent maps for the two variable lists.
/// Indices are ≥ 1; the weight of x_k is k.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub pexp: BTreeMap<u32, u32>,
    pub qexp: BTreeMap<u32, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// Single variable from the first list: p_i (u_i, t_i).
    pub fn var_p(i: u32) -> Self {
        assert!(i >= 1, "variable indices start at 1");
        Monomial { pexp: BTreeMap::from([(i, 1)]), qexp: BTreeMap::new() }
    }

    /// Single variable from the second list: q_i (v_i).
    pub fn var_q(i: u32) -> Self {
        assert!(i >= 1, "variable indices start at 1");
        Monomial { pexp: BTreeMap::new(), qexp: BTreeMap::from([(i, 1)]) }
    }

    /// p_λ q_μ.
    pub fn from_partitions(lambda: &Partition, mu: &Partition) -> Self {
        let mut m = Monomial::one();
        for &part in lambda.parts() {
            *m.pexp.entry(part).or_insert(0) += 1;
        }
        for &part in mu.parts() {
            *m.qexp.entry(part).or_insert(0) += 1;
        }
        m
    }

    /// Interpret the exponents as a profile: p-exponents give λ, q-exponents μ.
    pub fn to_profile(&self) -> Profile {
        let expand = |exps: &BTreeMap<u32, u32>| {
            let mut parts = Vec::new();
            for (&i, &e) in exps {
                parts.extend(std::iter::repeat(i).take(e as usize));
            }
            Partition::from_unsorted(parts)
        };
        Profile::new(expand(&self.pexp), expand(&self.qexp))
    }

    /// Σ k·(e_p(k) + e_q(k)), saturating.
    pub fn weight(&self) -> u64 {
        let side = |exps: &BTreeMap<u32, u32>| {
            exps.iter().fold(0u64, |acc, (&i, &e)| {
                acc.saturating_add((i as u64).saturating_mul(e as u64))
            })
        };
        side(&self.pexp).saturating_add(side(&self.qexp))
    }

    pub fn is_one(&self) -> bool {
        self.pexp.is_empty() && self.qexp.is_empty()
    }

    fn exps(&self, side: Side) -> &BTreeMap<u32, u32> {
        match side {
            Side::First => &self.pexp,
            Side::Second => &self.qexp,
        }
    }

    fn exps_mut(&mut self, side: Side) -> &mut BTreeMap<u32, u32> {
        match side {
            Side::First => &mut self.pexp,
            Side::Second => &mut self.qexp,
        }
    }

    pub fn exp(&self, side: Side, i: u32) -> u32 {
        self.exps(side).get(&i).copied().unwrap_or(0)
    }

    pub fn with_exp(&self, side: Side, i: u32, e: u32) -> Monomial {
        let mut m = self.clone();
        if e == 0 {
            m.exps_mut(side).remove(&i);
        } else {
            m.exps_mut(side).insert(i, e);
        }
        m
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (&i, &e) in &other.pexp {
            *out.pexp.entry(i).or_insert(0) += e;
        }
        for (&i, &e) in &other.qexp {
            *out.qexp.entry(i).or_insert(0) += e;
        }
        out
    }
}

/// Lexicographic comparison of sparse exponent vectors (e_1, e_2, …).
fn lex_cmp(a: &BTreeMap<u32, u32>, b: &BTreeMap<u32, u32>) -> Ordering {
    let mut keys: Vec<u32> = a.keys().chain(b.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    for k in keys {
        let ea = a.get(&k).copied().unwrap_or(0);
        let eb = b.get(&k).copied().unwrap_or(0);
        match ea.cmp(&eb) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    /// Graded lexicographic: total weight first, then the p-exponent vector,
    /// then the q-exponent vector. This is the canonical serialization order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| lex_cmp(&self.pexp, &other.pexp))
            .then_with(|| lex_cmp(&self.qexp, &other.qexp))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with exact rational coefficients over a variable family.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PQPoly {
    pub family: Family,
    terms: BTreeMap<Monomial, Rat>,
}

impl PQPoly {
    pub fn zero(family: Family) -> Self {
        PQPoly { family, terms: BTreeMap::new() }
    }

    pub fn one(family: Family) -> Self {
        PQPoly::constant(family, Rat::one())
    }

    pub fn constant(family: Family, c: Rat) -> Self {
        let mut p = PQPoly::zero(family);
        p.add_term(Monomial::one(), c);
        p
    }

    /// Single variable x_i from the chosen list, e.g. `var(PQ, First, 2)` = p₂.
    pub fn var(family: Family, side: Side, i: u32) -> Self {
        assert!(
            !(family == Family::T && side == Side::Second),
            "family t has a single variable list"
        );
        let mono = match side {
            Side::First => Monomial::var_p(i),
            Side::Second => Monomial::var_q(i),
        };
        let mut p = PQPoly::zero(family);
        p.add_term(mono, Rat::one());
        p
    }

    pub fn monomial(family: Family, mono: Monomial, coeff: Rat) -> Self {
        let mut p = PQPoly::zero(family);
        p.add_term(mono, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rat {
        self.terms.get(mono).cloned().unwrap_or_else(Rat::zero)
    }

    /// Maximum term weight (0 for the zero polynomial).
    pub fn max_weight(&self) -> u64 {
        self.terms.keys().map(|m| m.weight()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &PQPoly) -> Result<PQPoly> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PQPoly) -> Result<PQPoly> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> PQPoly {
        if c.is_zero() {
            return PQPoly::zero(self.family);
        }
        PQPoly {
            family: self.family,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &PQPoly) -> Result<PQPoly> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch);
        }
        let mut out = PQPoly::zero(self.family);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> PQPoly {
        let mut out = PQPoly::one(self.family);
        for _ in 0..e {
            out = out.mul(self).expect("same family");
        }
        out
    }

    /// Keep only terms of weight ≤ `max_weight`.
    pub fn truncate(&self, max_weight: u64) -> PQPoly {
        PQPoly {
            family: self.family,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() <= max_weight)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Evaluate with x_i = vals[i−1] on the given list (missing entries = 0).
    pub fn eval(&self, first: &[Rat], second: &[Rat]) -> Rat {
        let val = |vals: &[Rat], i: u32| -> Rat {
            vals.get((i - 1) as usize).cloned().unwrap_or_else(Rat::zero)
        };
        let mut acc = Rat::zero();
        'terms: for (m, c) in &self.terms {
            let mut prod = c.clone();
            for (&i, &e) in &m.pexp {
                let v = val(first, i);
                if v.is_zero() {
                    continue 'terms;
                }
                for _ in 0..e {
                    prod *= v.clone();
                }
            }
            for (&i, &e) in &m.qexp {
                let v = val(second, i);
                if v.is_zero() {
                    continue 'terms;
                }
                for _ in 0..e {
                    prod *= v.clone();
                }
            }
            acc += prod;
        }
        acc
    }

    /// Substitute every variable by a polynomial in the target family.
    pub fn substitute<F>(&self, target: Family, subst: F) -> PQPoly
    where
        F: Fn(Side, u32) -> PQPoly,
    {
        let mut out = PQPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = PQPoly::constant(target, c.clone());
            for (&i, &e) in &m.pexp {
                term = term.mul(&subst(Side::First, i).pow(e)).expect("same family");
            }
            for (&i, &e) in &m.qexp {
                term = term.mul(&subst(Side::Second, i).pow(e)).expect("same family");
            }
            out = out.add(&term).expect("same family");
        }
        out
    }
}

/// One term of a differential operator: coeff · (multiply by `mul`) · ∂^{der}.
#[derive(Clone, Debug)]
pub struct OpTerm {
    pub coeff: Rat,
    pub mul: Monomial,
    pub der: Monomial,
}

/// Apply Σ coeff · mul · ∂^{der} to `f`, exactly.
pub fn apply_operator(spec: &[OpTerm], f: &PQPoly) -> PQPoly {
    let mut out = PQPoly::zero(f.family);
    for term in spec {
        for (mono, c) in f.terms() {
            if let Some((derived, factor)) = derive_monomial(mono, &term.der) {
                out.add_term(derived.mul(&term.mul), c * &term.coeff * factor);
            }
        }
    }
    out
}

/// ∂^{der} applied to a monomial: returns the reduced monomial and the
/// integer falling-factorial factor, or None when a derivative kills it.
fn derive_monomial(mono: &Monomial, der: &Monomial) -> Option<(Monomial, Rat)> {
    let mut out = mono.clone();
    let mut factor = Rat::one();
    for (side, exps) in [(Side::First, &der.pexp), (Side::Second, &der.qexp)] {
        for (&i, &d) in exps {
            let e = out.exp(side, i);
            if e < d {
                return None;
            }
            for k in 0..d {
                factor *= Rat::from_integer((e - k).into());
            }
            out = out.with_exp(side, i, e - d);
        }
    }
    Some((out, factor))
}

/// Ψ: Ĉ_{λ|μ} ↦ p_λ q_μ, extended linearly.
pub fn psi(v: &ClassVector) -> PQPoly {
    let mut out = PQPoly::zero(Family::PQ);
    for (profile, c) in v.entries() {
        out.add_term(Monomial::from_partitions(&profile.lambda, &profile.mu), c.clone());
    }
    out
}

/// Inverse of Ψ. Fails when `f` is not homogeneous of one weight (profiles of
/// a single group rank), or when a signed profile would be needed.
pub fn psi_inv(f: &PQPoly) -> Result<ClassVector> {
    if f.family != Family::PQ {
        return Err(Error::FamilyMismatch);
    }
    let mut n: Option<u64> = None;
    let mut entries = BTreeMap::new();
    for (mono, c) in f.terms() {
        let w = mono.weight();
        match n {
            None => n = Some(w),
            Some(prev) if prev != w => {
                return Err(Error::MalformedProfile(format!(
                    "inhomogeneous polynomial: weights {prev} and {w}"
                )))
            }
            _ => {}
        }
        entries.insert(mono.to_profile(), c.clone());
    }
    let n = n.unwrap_or(0) as u32;
    Ok(ClassVector::from_entries(n, entries))
}

/// Express a p,q-polynomial in the u,v variables: p_ℓ = u_ℓ+v_ℓ, q_ℓ = u_ℓ−v_ℓ.
pub fn to_uv(f: &PQPoly) -> Result<PQPoly> {
    if f.family != Family::PQ {
        return Err(Error::FamilyMismatch);
    }
    Ok(f.substitute(Family::UV, |side, i| {
        let u = PQPoly::var(Family::UV, Side::First, i);
        let v = PQPoly::var(Family::UV, Side::Second, i);
        match side {
            Side::First => u.add(&v).expect("same family"),
            Side::Second => u.sub(&v).expect("same family"),
        }
    }))
}

/// Inverse of [`to_uv`]: u_ℓ = (p_ℓ+q_ℓ)/2, v_ℓ = (p_ℓ−q_ℓ)/2.
pub fn to_pq(f: &PQPoly) -> Result<PQPoly> {
    if f.family != Family::UV {
        return Err(Error::FamilyMismatch);
    }
    let half = Rat::new(1.into(), 2.into());
    Ok(f.substitute(Family::PQ, |side, i| {
        let p = PQPoly::var(Family::PQ, Side::First, i);
        let q = PQPoly::var(Family::PQ, Side::Second, i);
        match side {
            Side::First => p.add(&q).expect("same family").scale(&half),
            Side::Second => p.sub(&q).expect("same family").scale(&half),
        }
    }))
}

impl fmt::Display for PQPoly {
    /// Canonical text form, e.g. `1/2*p[2] + 1/2*p[1]^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let (first_name, second_name) = self.family.names();
        for (idx, (mono, coeff)) in self.terms.iter().enumerate() {
            let neg = coeff < &Rat::zero();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = if neg { -coeff.clone() } else { coeff.clone() };
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || mono.is_one() {
                factors.push(abs.to_string());
            }
            for (&i, &e) in &mono.pexp {
                factors.push(var_factor(first_name, i, e));
            }
            for (&i, &e) in &mono.qexp {
                let name = second_name.expect("no second-list variables in family t");
                factors.push(var_factor(name, i, e));
            }
            write!(f, "{}", factors.join("*"))?;
        }
        return Ok(());

        fn var_factor(name: char, i: u32, e: u32) -> String {
            if e == 1 {
                format!("{name}[{i}]")
            } else {
                format!("{name}[{i}]^{e}")
            }
        }
    }
}

/// Maximum variable index / exponent accepted by the text parser.
const PARSE_LIMIT: u32 = 1_000_000;

/// Parse the canonical text form produced by `Display`.
///
/// Grammar: terms joined by `+`/`-`; each term is `*`-separated factors;
/// a factor is a rational literal or `x[i]` / `x[i]^e` with `x` a variable
/// letter of the family. Whitespace between tokens is ignored.
pub fn parse_poly(family: Family, input: &str) -> Result<PQPoly> {
    let (first_name, second_name) = family.names();
    let mut out = PQPoly::zero(family);
    let s: Vec<char> = input.chars().collect();
    let mut pos = 0usize;
    let err = |msg: &str, pos: usize| Error::Parse(format!("{msg} at offset {pos}"));

    skip_ws(&s, &mut pos);
    if pos == s.len() {
        return Err(err("empty input", pos));
    }
    let mut first_term = true;
    while pos < s.len() {
        // Sign.
        let mut negate = false;
        if first_term {
            if s[pos] == '-' {
                negate = true;
                pos += 1;
            } else if s[pos] == '+' {
                pos += 1;
            }
        } else {
            match s[pos] {
                '+' => pos += 1,
                '-' => {
                    negate = true;
                    pos += 1;
                }
                _ => return Err(err("expected '+' or '-'", pos)),
            }
        }
        first_term = false;
        skip_ws(&s, &mut pos);
        // Factors.
        let mut coeff = Rat::one();
        let mut mono = Monomial::one();
        loop {
            skip_ws(&s, &mut pos);
            if pos >= s.len() {
                return Err(err("expected factor", pos));
            }
            let c = s[pos];
            if c.is_ascii_digit() {
                coeff *= parse_number(&s, &mut pos)?;
            } else if c == first_name || Some(c) == second_name {
                pos += 1;
                let side = if c == first_name { Side::First } else { Side::Second };
                if pos >= s.len() || s[pos] != '[' {
                    return Err(err("expected '['", pos));
                }
                pos += 1;
                let i = parse_uint(&s, &mut pos)?;
                if i == 0 {
                    return Err(err("variable index must be >= 1", pos));
                }
                if pos >= s.len() || s[pos] != ']' {
                    return Err(err("expected ']'", pos));
                }
                pos += 1;
                let mut e = 1u32;
                if pos < s.len() && s[pos] == '^' {
                    pos += 1;
                    e = parse_uint(&s, &mut pos)?;
                }
                let cur = mono.exp(side, i);
                let total = cur
                    .checked_add(e)
                    .filter(|&t| t <= PARSE_LIMIT)
                    .ok_or_else(|| err("exponent too large", pos))?;
                mono = mono.with_exp(side, i, total);
            } else {
                return Err(err("unexpected character", pos));
            }
            skip_ws(&s, &mut pos);
            if pos < s.len() && s[pos] == '*' {
                pos += 1;
                continue;
            }
            break;
        }
        if negate {
            coeff = -coeff;
        }
        out.add_term(mono, coeff);
        skip_ws(&s, &mut pos);
    }
    return Ok(out);

    fn skip_ws(s: &[char], pos: &mut usize) {
        while *pos < s.len() && s[*pos].is_whitespace() {
            *pos += 1;
        }
    }

    fn parse_uint(s: &[char], pos: &mut usize) -> Result<u32> {
        let start = *pos;
        while *pos < s.len() && s[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if start == *pos {
            return Err(Error::Parse(format!("expected number at offset {start}")));
        }
        let text: String = s[start..*pos].iter().collect();
        text.parse::<u32>()
            .ok()
            .filter(|&v| v <= PARSE_LIMIT)
            .ok_or_else(|| Error::Parse(format!("number out of range at offset {start}")))
    }

    fn parse_number(s: &[char], pos: &mut usize) -> Result<Rat> {
        let start = *pos;
        while *pos < s.len() && s[*pos].is_ascii_digit() {
            *pos += 1;
        }
        let numer: String = s[start..*pos].iter().collect();
        let mut save = *pos;
        // Optional "/denominator" (lookahead: digits must follow).
        let mut denom = String::from("1");
        if *pos < s.len() && s[*pos] == '/' {
            *pos += 1;
            let dstart = *pos;
            while *pos < s.len() && s[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if dstart == *pos {
                *pos = save;
            } else {
                denom = s[dstart..*pos].iter().collect();
                save = *pos;
            }
        }
        *pos = save;
        crate::parse_rational(&format!("{numer}/{denom}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    fn p(i: u32) -> PQPoly {
        PQPoly::var(Family::PQ, Side::First, i)
    }

    fn q(i: u32) -> PQPoly {
        PQPoly::var(Family::PQ, Side::Second, i)
    }

    #[test]
    fn ring_arithmetic() {
        // p₁·p₁ = p₁².
        let p1sq = p(1).mul(&p(1)).unwrap();
        assert_eq!(p1sq, p(1).pow(2));
        // (u₁+v₁)(u₁−v₁) = u₁²−v₁².
        let u1 = PQPoly::var(Family::UV, Side::First, 1);
        let v1 = PQPoly::var(Family::UV, Side::Second, 1);
        let prod = u1.add(&v1).unwrap().mul(&u1.sub(&v1).unwrap()).unwrap();
        assert_eq!(prod, u1.pow(2).sub(&v1.pow(2)).unwrap());
        // ½p₂ + ½p₂ = p₂.
        let half = rat(1, 2);
        assert_eq!(p(2).scale(&half).add(&p(2).scale(&half)).unwrap(), p(2));
        // Family mismatch is an error.
        assert!(p(1).add(&u1).is_err());
    }

    #[test]
    fn display_canonical_form() {
        let s2 = p(2).add(&p(1).pow(2)).unwrap().scale(&rat(1, 2));
        assert_eq!(s2.to_string(), "1/2*p[2] + 1/2*p[1]^2");
        assert_eq!(PQPoly::zero(Family::PQ).to_string(), "0");
        assert_eq!(PQPoly::constant(Family::PQ, rat(-3, 4)).to_string(), "-3/4");
        let mixed = p(1).mul(&q(3)).unwrap().sub(&q(1).pow(2)).unwrap();
        assert_eq!(mixed.to_string(), "-q[1]^2 + p[1]*q[3]");
    }

    #[test]
    fn parse_roundtrip() {
        let samples = [
            p(2).add(&p(1).pow(2)).unwrap().scale(&rat(1, 2)),
            PQPoly::zero(Family::PQ),
            PQPoly::constant(Family::PQ, rat(-7, 3)),
            p(1).mul(&q(3)).unwrap().sub(&q(1).pow(2).scale(&rat(5, 2))).unwrap(),
        ];
        for f in samples {
            let text = f.to_string();
            assert_eq!(parse_poly(Family::PQ, &text).unwrap(), f, "roundtrip of {text}");
        }
        // Whitespace and explicit coefficients are tolerated.
        assert_eq!(parse_poly(Family::PQ, " 1*p[1] + 0 ").unwrap(), p(1));
        assert!(parse_poly(Family::PQ, "u[1]").is_err());
        assert!(parse_poly(Family::PQ, "p[0]").is_err());
        assert!(parse_poly(Family::PQ, "p[1]^").is_err());
        assert!(parse_poly(Family::PQ, "").is_err());
    }

    #[test]
    fn apply_operator_examples() {
        // Euler field Σ i·p_i∂/∂p_i is diagonal with the weight.
        let euler: Vec<OpTerm> = (1..=8)
            .map(|i| OpTerm {
                coeff: Rat::from_integer(i.into()),
                mul: Monomial::var_p(i as u32),
                der: Monomial::var_p(i as u32),
            })
            .collect();
        let f = p(3).mul(&p(1)).unwrap();
        assert_eq!(apply_operator(&euler, &f), f.scale(&Rat::from_integer(4.into())));
        // {(1, p₂, ∂p₁∂p₁)} on p₁² → 2p₂.
        let spec = [OpTerm {
            coeff: Rat::one(),
            mul: Monomial::var_p(2),
            der: Monomial::var_p(1).mul(&Monomial::var_p(1)),
        }];
        assert_eq!(
            apply_operator(&spec, &p(1).pow(2)),
            p(2).scale(&Rat::from_integer(2.into()))
        );
        // Anything applied to 0 is 0.
        assert!(apply_operator(&spec, &PQPoly::zero(Family::PQ)).is_zero());
    }

    #[test]
    fn uv_change_of_variables() {
        // p₁ → u₁+v₁, q₂ → u₂−v₂.
        let u = |i| PQPoly::var(Family::UV, Side::First, i);
        let v = |i| PQPoly::var(Family::UV, Side::Second, i);
        assert_eq!(to_uv(&p(1)).unwrap(), u(1).add(&v(1)).unwrap());
        assert_eq!(to_uv(&q(2)).unwrap(), u(2).sub(&v(2)).unwrap());
        // p₂q₁ expands fully.
        let expect = u(2)
            .add(&v(2))
            .unwrap()
            .mul(&u(1).sub(&v(1)).unwrap())
            .unwrap();
        assert_eq!(to_uv(&p(2).mul(&q(1)).unwrap()).unwrap(), expect);
        // Round trips.
        let f = p(2)
            .mul(&q(1))
            .unwrap()
            .add(&p(1).pow(3).scale(&rat(2, 3)))
            .unwrap()
            .sub(&q(3).scale(&rat(1, 5)))
            .unwrap();
        assert_eq!(to_pq(&to_uv(&f).unwrap()).unwrap(), f);
        let g = to_uv(&f).unwrap();
        assert_eq!(to_uv(&to_pq(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let m_p2 = Monomial::var_p(2);
        let m_p1sq = Monomial::var_p(1).mul(&Monomial::var_p(1));
        let m_q2 = Monomial::var_q(2);
        assert!(m_p2 < m_p1sq, "within a weight, smaller p₁-exponent first");
        assert!(m_q2 < m_p2, "pure-q monomial precedes p monomials of the same weight");
        assert!(Monomial::var_p(1) < m_p2, "weight dominates");
    }

    #[test]
    fn eval_at_points() {
        let f = p(1).pow(2).add(&p(2).scale(&rat(1, 2))).unwrap();
        let one = Rat::one();
        // p = (1, 0, …): p₁² + ½p₂ → 1.
        assert_eq!(f.eval(&[one.clone()], &[]), Rat::one());
        assert_eq!(f.eval(&[one.clone(), one.clone()], &[]), rat(3, 2));
        let g = p(1).mul(&q(1)).unwrap();
        assert_eq!(g.eval(&[rat(2, 1)], &[rat(3, 1)]), rat(6, 1));
        assert_eq!(g.eval(&[rat(2, 1)], &[]), Rat::zero());
    }
}
