//! Exact-arithmetic Hurwitz numbers for the reflection groups B_n and D_n.
//!
//! B_n is realized as the normalizer of the fixed-point-free involution
//! τ = (1,n+1)(2,n+2)…(n,2n) inside S_{2n}; D_n is its subgroup of even
//! permutations. Simple Hurwitz numbers h^B_{m,ℓ,λ,μ} count factorizations
//! into m "long" reflections r_{ij} = (i,j)(i+n,j+n) and ℓ "short"
//! reflections l_i = (i,i+n) whose product has conjugacy profile (λ|μ).
//!
//! The crate computes these numbers by three independent routes and checks
//! them against each other exactly:
//!
//! * direct enumeration over reflection sequences ([`hurwitz::oracle_hb`]),
//! * iteration of the cut-and-join operators CJ₁/CJ₂ on the polynomial
//!   ring ℚ[p,q] ([`cutjoin::hurwitz_series`]),
//! * the spectral formula over the B-Schur basis s_{λ|μ}
//!   ([`schur::spectral_hurwitz`]).
//!
//! Supporting structure: the center of the group algebra in the class-sum
//! basis ([`center`]), the ± block decomposition for D_n, a combinatorial
//! ribbon-surface model ([`ribbon`]), the charge-zero Fock space with the
//! boson-fermion correspondence ([`fock`]), and a KP-hierarchy residual
//! checker certifying the generating functions are τ-functions ([`kp`]).
//!
//! All arithmetic is exact: integers, arbitrary-precision rationals, and
//! Laurent polynomials over ℚ. No floating point anywhere.

pub mod center;
pub mod claims;
pub mod cutjoin;
pub mod fock;
pub mod hurwitz;
pub mod kp;
pub mod laurent;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod ribbon;
pub mod schur;

use num_bigint::BigInt;
use num_traits::Zero;

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("permutation size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("permutation is not in the normalizer of tau")]
    NotInNormalizer,
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("malformed profile: {0}")]
    MalformedProfile(String),
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("group-theoretic precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration budget exceeded: need {required} sequence evaluations, budget {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("truncation overflow: result energy {needed} exceeds cap {cap}")]
    TruncationOverflow { needed: u32, cap: u32 },
    #[error("variable family mismatch")]
    FamilyMismatch,
    #[error("mu must have an even number of parts for a D_n class")]
    OddMuCount,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree {0} too small: {1}")]
    DegreeTooSmall(u32, &'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Parse an exact rational from `"a/b"` or `"a"` (lowest terms not required).
///
/// Rejects zero denominators instead of panicking, so it is safe on
/// arbitrary input.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    let mk_err = || Error::Parse(format!("invalid rational: {s:?}"));
    let (num_str, den_str) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_str.parse().map_err(|_| mk_err())?;
    let den: BigInt = den_str.parse().map_err(|_| mk_err())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator: {s:?}")));
    }
    Ok(Rat::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn parse_rational_accepts_integers_and_fractions() {
        assert_eq!(parse_rational("1").unwrap(), Rat::one());
        assert_eq!(parse_rational("-3/6").unwrap(), Rat::new((-1).into(), 2.into()));
        assert_eq!(parse_rational(" 7 / 2 ").unwrap(), Rat::new(7.into(), 2.into()));
    }

    #[test]
    fn parse_rational_rejects_zero_denominator_and_junk() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }
}
