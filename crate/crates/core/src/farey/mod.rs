//! Exact Farey sequences and the Farey subsequences of Boolean lattices.
//!
//! A [`FareySeq`] is always materialized: an ascending vector of reduced
//! fractions in `[0, 1]`. Three families are supported:
//!
//! - `Standard(n)`: every reduced `h/k` with `k <= n`;
//! - `Boolean(n, m)`: the ratios `|B ∩ A| / |B|` over nonempty subsets `B` of
//!   an `n`-set containing a fixed `m`-subset `A`, which is exactly
//!   `{h/k in F_n : h <= m, k - h <= n - m}`;
//! - `NumeratorBounded(n, m)`: `{h/k in F_n : h <= m}`.
//!
//! Neighbor formulas, recurrences and symmetries live in the submodules and
//! consume a materialized sequence so that membership can be checked by
//! binary search before any formula is applied.

mod maps;
mod neighbors;
pub mod verify;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

use crate::exec::Guard;

pub use maps::{
    map_fm_to_half, map_half_to_fm, reverse_involution, third_symmetry_involution, Orientation,
};
pub use neighbors::{
    neighbor_general, neighbor_half, neighbor_half_on, neighbors_of_one_third, triple_extend,
    triple_extend_half, Direction, Side, Step,
};
pub use verify::{verify_prop5, verify_suite};

/// Largest `n` the subset oracle enumerates without an override.
pub const ORACLE_MAX_N: u64 = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FareyError {
    #[error("invalid fraction {num}/{den}: need 0 <= num <= den and den >= 1")]
    InvalidFraction { num: u64, den: u64 },
    #[error("cannot parse fraction {0:?}: expected h/k")]
    Parse(String),
    #[error("order must be positive")]
    ZeroOrder,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("subset oracle limited to n <= {limit}, got n = {n}")]
    OracleGuard { n: u64, limit: u64 },
    #[error("{fraction} is not a member of {sequence}")]
    NotMember { fraction: Fraction, sequence: String },
    #[error("{fraction} has no {direction} in {sequence}")]
    NoNeighbor { fraction: Fraction, direction: &'static str, sequence: String },
    #[error("{0} and {1} are not adjacent")]
    NotAdjacent(Fraction, Fraction),
    #[error("wrong side of 1/2 for this formula: {0}")]
    WrongSide(String),
    #[error("{fraction} lies outside the domain of {map}")]
    OutsideDomain { fraction: Fraction, map: &'static str },
    #[error("sequence {0} does not support this operation")]
    WrongVariant(String),
    #[error("arithmetic overflow")]
    Overflow,
}

pub type Result<T, E = FareyError> = std::result::Result<T, E>;

/// A reduced fraction `num/den` with `0 <= num <= den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: u64,
    den: u64,
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const HALF: Fraction = Fraction { num: 1, den: 2 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };

    /// Reduces `num/den` to lowest terms.
    pub fn reduce(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num > den {
            return Err(FareyError::InvalidFraction { num, den });
        }
        let g = num.gcd(&den);
        Ok(Fraction { num: num / g, den: den / g })
    }

    /// Builds from signed intermediates, rejecting negatives and overflow.
    pub(crate) fn reduce_signed(num: i128, den: i128) -> Result<Self> {
        let num = u64::try_from(num).map_err(|_| FareyError::InvalidFraction {
            num: num.unsigned_abs().min(u64::MAX as u128) as u64,
            den: den.unsigned_abs().min(u64::MAX as u128) as u64,
        })?;
        let den = u64::try_from(den).map_err(|_| FareyError::InvalidFraction { num, den: 0 })?;
        Self::reduce(num, den)
    }

    /// Numerator (`h` of `h/k`).
    pub fn num(self) -> u64 {
        self.num
    }

    /// Denominator (`k` of `h/k`).
    pub fn den(self) -> u64 {
        self.den
    }

    pub(crate) fn h(self) -> i128 {
        self.num as i128
    }

    pub(crate) fn k(self) -> i128 {
        self.den as i128
    }
}

/// Free-standing form of [`Fraction::reduce`].
pub fn reduce(h: u64, k: u64) -> Result<Fraction> {
    Fraction::reduce(h, k)
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = FareyError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || FareyError::Parse(s.to_string());
        let (h, k) = s.trim().split_once('/').ok_or_else(bad)?;
        let h: u64 = h.trim().parse().map_err(|_| bad())?;
        let k: u64 = k.trim().parse().map_err(|_| bad())?;
        Fraction::reduce(h, k)
    }
}

/// Which family a [`FareySeq`] belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Standard { n: u64 },
    Boolean { n: u64, m: u64 },
    NumeratorBounded { n: u64, m: u64 },
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Variant::Standard { n } => write!(f, "F_{n}"),
            Variant::Boolean { n, m } => write!(f, "F(B({n}),{m})"),
            Variant::NumeratorBounded { n, m } => write!(f, "(h/k in F_{n} : h <= {m})"),
        }
    }
}

/// A strictly ascending sequence of fractions with its defining parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FareySeq {
    variant: Variant,
    entries: Vec<Fraction>,
}

impl FareySeq {
    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn entries(&self) -> &[Fraction] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<Fraction> {
        self.entries.get(index).copied()
    }

    /// Zero-based position of `f`, by binary search.
    pub fn index_of(&self, f: Fraction) -> Option<usize> {
        self.entries.binary_search(&f).ok()
    }

    pub fn contains(&self, f: Fraction) -> bool {
        self.index_of(f).is_some()
    }

    pub(crate) fn require_member(&self, f: Fraction) -> Result<usize> {
        self.index_of(f).ok_or_else(|| FareyError::NotMember {
            fraction: f,
            sequence: self.variant.to_string(),
        })
    }

    /// `(n, m)` for a Boolean-lattice sequence.
    pub fn boolean_params(&self) -> Result<(u64, u64)> {
        match self.variant {
            Variant::Boolean { n, m } => Ok((n, m)),
            v => Err(FareyError::WrongVariant(v.to_string())),
        }
    }

    /// `m` for a sequence of the form `F(B(2m), m)`.
    pub fn half_param(&self) -> Result<u64> {
        match self.variant {
            Variant::Boolean { n, m } if n == 2 * m => Ok(m),
            v => Err(FareyError::WrongVariant(v.to_string())),
        }
    }

    /// Entries `<= 1/2`.
    pub fn left_half(&self) -> &[Fraction] {
        let end = self.entries.partition_point(|f| *f <= Fraction::HALF);
        &self.entries[..end]
    }

    /// Entries `>= 1/2`.
    pub fn right_half(&self) -> &[Fraction] {
        let start = self.entries.partition_point(|f| *f < Fraction::HALF);
        &self.entries[start..]
    }

    fn from_filter(variant: Variant, n: u64, keep: impl Fn(u64, u64) -> bool) -> Self {
        let mut entries = Vec::new();
        for k in 1..=n {
            for h in 0..=k {
                if h.gcd(&k) == 1 && keep(h, k) {
                    entries.push(Fraction { num: h, den: k });
                }
            }
        }
        entries.sort_unstable();
        FareySeq { variant, entries }
    }
}

/// The standard Farey sequence `F_n`.
pub fn farey_sequence(n: u64) -> Result<FareySeq> {
    if n == 0 {
        return Err(FareyError::ZeroOrder);
    }
    Ok(FareySeq::from_filter(Variant::Standard { n }, n, |_, _| true))
}

/// `F(B(n), m) = {h/k in F_n : h <= m, k - h <= n - m}`.
pub fn farey_boolean(n: u64, m: u64) -> Result<FareySeq> {
    if n == 0 {
        return Err(FareyError::ZeroOrder);
    }
    if m > n {
        return Err(FareyError::OutOfRange(format!("m = {m} exceeds n = {n}")));
    }
    Ok(FareySeq::from_filter(Variant::Boolean { n, m }, n, |h, k| h <= m && k - h <= n - m))
}

/// `{h/k in F_n : h <= m}`.
pub fn farey_numerator_bounded(n: u64, m: u64) -> Result<FareySeq> {
    if n == 0 {
        return Err(FareyError::ZeroOrder);
    }
    if m > n {
        return Err(FareyError::OutOfRange(format!("m = {m} exceeds n = {n}")));
    }
    Ok(FareySeq::from_filter(Variant::NumeratorBounded { n, m }, n, |h, _| h <= m))
}

/// Builds `F(B(n), m)` from its set-theoretic definition: the reduced ratios
/// `|B ∩ A| / |B|` over all `2^n - 1` nonempty subsets `B` of an `n`-set, with
/// `A` a fixed `m`-subset.
pub fn farey_boolean_oracle(n: u64, m: u64) -> Result<FareySeq> {
    farey_boolean_oracle_with(n, m, Guard::Enforce)
}

pub fn farey_boolean_oracle_with(n: u64, m: u64, guard: Guard) -> Result<FareySeq> {
    if n == 0 {
        return Err(FareyError::ZeroOrder);
    }
    if m > n {
        return Err(FareyError::OutOfRange(format!("m = {m} exceeds n = {n}")));
    }
    if guard.enforced() && n > ORACLE_MAX_N {
        return Err(FareyError::OracleGuard { n, limit: ORACLE_MAX_N });
    }
    if n >= 64 {
        return Err(FareyError::OutOfRange(format!("subset oracle needs n < 64, got {n}")));
    }
    let a: u64 = (1u64 << m) - 1;
    let mut seen = BTreeSet::new();
    for b in 1..(1u64 << n) {
        let meet = (b & a).count_ones() as u64;
        let size = b.count_ones() as u64;
        seen.insert(Fraction::reduce(meet, size)?);
    }
    Ok(FareySeq { variant: Variant::Boolean { n, m }, entries: seen.into_iter().collect() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    fn render(seq: &FareySeq) -> Vec<String> {
        seq.entries().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(4, 8).unwrap(), fr("1/2"));
        assert_eq!(reduce(0, 7).unwrap().to_string(), "0/1");
        assert_eq!(reduce(3, 7).unwrap().to_string(), "3/7");
        let once = reduce(6, 9).unwrap();
        assert_eq!(reduce(once.num(), once.den()).unwrap(), once);
    }

    #[test]
    fn reduce_rejects_bad_input() {
        assert!(matches!(reduce(5, 4), Err(FareyError::InvalidFraction { .. })));
        assert!(matches!(reduce(0, 0), Err(FareyError::InvalidFraction { .. })));
        assert!("1-2".parse::<Fraction>().is_err());
        assert!("x/2".parse::<Fraction>().is_err());
    }

    #[test]
    fn standard_sequences() {
        assert_eq!(render(&farey_sequence(1).unwrap()), ["0/1", "1/1"]);
        assert_eq!(
            render(&farey_sequence(4).unwrap()),
            ["0/1", "1/4", "1/3", "1/2", "2/3", "3/4", "1/1"]
        );
        assert_eq!(farey_sequence(5).unwrap().len(), 11);
        assert_eq!(farey_sequence(0), Err(FareyError::ZeroOrder));
    }

    #[test]
    fn boolean_small_cases() {
        assert_eq!(render(&farey_boolean(2, 1).unwrap()), ["0/1", "1/2", "1/1"]);
        assert!(farey_boolean(3, 4).is_err());
        // degenerate parameters collapse to a single endpoint
        assert_eq!(render(&farey_boolean(3, 0).unwrap()), ["0/1"]);
        assert_eq!(render(&farey_boolean(3, 3).unwrap()), ["1/1"]);
    }

    #[test]
    fn oracle_small_cases() {
        assert_eq!(render(&farey_boolean_oracle(3, 0).unwrap()), ["0/1"]);
        assert_eq!(farey_boolean_oracle(4, 2).unwrap(), farey_boolean(4, 2).unwrap());
        assert_eq!(
            farey_boolean_oracle(21, 3),
            Err(FareyError::OracleGuard { n: 21, limit: ORACLE_MAX_N })
        );
    }

    #[test]
    fn numerator_bounded_cases() {
        assert_eq!(
            render(&farey_numerator_bounded(4, 1).unwrap()),
            ["0/1", "1/4", "1/3", "1/2", "1/1"]
        );
        assert_eq!(render(&farey_numerator_bounded(7, 0).unwrap()), ["0/1"]);
        assert_eq!(
            farey_numerator_bounded(5, 5).unwrap().entries(),
            farey_sequence(5).unwrap().entries()
        );
    }

    #[test]
    fn halves_share_one_half() {
        let s = farey_boolean(8, 4).unwrap();
        assert_eq!(*s.left_half().last().unwrap(), Fraction::HALF);
        assert_eq!(s.right_half()[0], Fraction::HALF);
        assert_eq!(s.left_half().len() + s.right_half().len(), s.len() + 1);
    }
}
