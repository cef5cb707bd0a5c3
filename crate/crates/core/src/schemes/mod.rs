//! Closed-form parameters of the Johnson scheme `J(n,d)`, the layers of the
//! crosspolytope lattice `O(m)`, and the binary Hamming scheme `H(m,2)`.
//!
//! All counts are [`BigUint`]. Binomials vanish outside `0 <= b <= a`, and
//! every sum runs over the finite range of `c` where its terms can be nonzero.

mod oracle;
mod verify;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

pub use oracle::{scheme_oracle, scheme_oracle_table, scheme_oracle_with, OracleCount, OracleTable};
pub use verify::{verify_schemes, verify_schemes_with, SCHEME_ORACLE_MAX_M, SCHEME_ORACLE_MAX_N};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchemeError {
    #[error("parameter out of range: {0}")]
    Bounds(String),
    #[error("no pair at distance {k} in {kind}")]
    NoPair { kind: SchemeKind, k: usize },
    #[error("resource guard: {kind} exceeds the oracle limit {limit} (use an override)")]
    Guard { kind: SchemeKind, limit: usize },
}

pub type Result<T, E = SchemeError> = std::result::Result<T, E>;

/// A scheme (or scheme-like layer structure) with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchemeKind {
    /// `d`-subsets of an `n`-set, distance `d - |x ∩ y|`.
    Johnson { n: usize, d: usize },
    /// Opposite-free signed `d`-subsets of `±[1,m]`, distance `d - |x ∧ y|`.
    Crosspolytope { m: usize, d: usize },
    /// Sign words of length `m`, Hamming distance.
    Hamming { m: usize },
}

impl SchemeKind {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            SchemeKind::Johnson { n, d } => d >= 1 && d <= n / 2,
            SchemeKind::Crosspolytope { m, d } => d >= 1 && d <= m,
            SchemeKind::Hamming { m } => m >= 1,
        };
        if ok {
            Ok(self)
        } else {
            Err(SchemeError::Bounds(self.to_string()))
        }
    }

    /// Largest distance between two elements.
    pub fn diameter(self) -> usize {
        match self {
            SchemeKind::Johnson { d, .. } | SchemeKind::Crosspolytope { d, .. } => d,
            SchemeKind::Hamming { m } => m,
        }
    }
}

impl std::fmt::Display for SchemeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SchemeKind::Johnson { n, d } => write!(f, "J({n},{d})"),
            SchemeKind::Crosspolytope { m, d } => write!(f, "O({m})^({d})"),
            SchemeKind::Hamming { m } => write!(f, "H({m},2)"),
        }
    }
}

/// `C(a, b)`, zero unless `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

fn c(a: usize, b: usize) -> BigUint {
    binomial(a as i64, b as i64)
}

fn check_index(kind: SchemeKind, name: &str, v: usize) -> Result<()> {
    if v > kind.diameter() {
        return Err(SchemeError::Bounds(format!("{name} = {v} exceeds {} for {kind}", kind.diameter())));
    }
    Ok(())
}

/// Intersection number `p^k_{ij}` of `J(n,d)`:
/// `Σ_c C(d-k,c) C(k,d-i-c) C(k,d-j-c) C(n-d-k,i+j-d+c)`.
pub fn johnson_p(n: usize, d: usize, i: usize, j: usize, k: usize) -> Result<BigUint> {
    let kind = SchemeKind::Johnson { n, d }.validate()?;
    for (name, v) in [("i", i), ("j", j), ("k", k)] {
        check_index(kind, name, v)?;
    }
    let (n, d, i, j, k) = (n as i64, d as i64, i as i64, j as i64, k as i64);
    Ok((0..=d - k)
        .map(|c| {
            binomial(d - k, c) * binomial(k, d - i - c) * binomial(k, d - j - c) * binomial(n - d - k, i + j - d + c)
        })
        .sum())
}

/// Valency `n_i = C(d,i) C(n-d,i)` of `J(n,d)`.
pub fn johnson_valency(n: usize, d: usize, i: usize) -> Result<BigUint> {
    let kind = SchemeKind::Johnson { n, d }.validate()?;
    check_index(kind, "i", i)?;
    Ok(c(d, i) * c(n - d, i))
}

/// Number of rank-`d` elements of `O(m)`: `C(m,d) 2^d`.
pub fn crosspolytope_whitney(m: usize, d: usize) -> Result<BigUint> {
    if d > m {
        return Err(SchemeError::Bounds(format!("d = {d} exceeds m = {m}")));
    }
    Ok(c(m, d) << d)
}

/// Valency `n_i = C(d,i) Σ_c C(i,c) C(m-d,c) 2^c` of the rank-`d` layer of `O(m)`.
pub fn crosspolytope_valency(m: usize, d: usize, i: usize) -> Result<BigUint> {
    if d > m || i > d {
        return Err(SchemeError::Bounds(format!("need i <= d <= m, got i = {i}, d = {d}, m = {m}")));
    }
    let sum: BigUint = (0..=i).map(|k| (c(i, k) * c(m - d, k)) << k).sum();
    Ok(c(d, i) * sum)
}

/// Same count as [`crosspolytope_valency`] via `C(d,i) Σ_c C(i,c) C(m-d+c,i)`.
pub fn crosspolytope_valency_alt(m: usize, d: usize, i: usize) -> Result<BigUint> {
    if d > m || i > d {
        return Err(SchemeError::Bounds(format!("need i <= d <= m, got i = {i}, d = {d}, m = {m}")));
    }
    let sum: BigUint = (0..=i).map(|k| c(i, k) * c(m - d + k, i)).sum();
    Ok(c(d, i) * sum)
}

fn hamming_bounds(m: usize, i: usize, j: usize, k: usize) -> Result<()> {
    let kind = SchemeKind::Hamming { m }.validate()?;
    for (name, v) in [("i", i), ("j", j), ("k", k)] {
        check_index(kind, name, v)?;
    }
    Ok(())
}

/// Intersection number `p^k_{ij}` of `H(m,2)`:
/// `C(m-k,(i+j-k)/2) C(k,(i-j+k)/2)` when `i+j+k` is even, else 0.
pub fn hamming_p(m: usize, i: usize, j: usize, k: usize) -> Result<BigUint> {
    hamming_bounds(m, i, j, k)?;
    if (i + j + k) % 2 == 1 {
        return Ok(BigUint::zero());
    }
    let (m, i, j, k) = (m as i64, i as i64, j as i64, k as i64);
    Ok(binomial(m - k, (i + j - k) / 2) * binomial(k, (i - j + k) / 2))
}

/// [`hamming_p`] as the four-binomial sum
/// `Σ_c C(m-k,c) C(k,m-i-c) C(i+k-m+c,m-j-c) C(m-k-c,i+j-m+c)`.
pub fn hamming_p_binomial_sum(m: usize, i: usize, j: usize, k: usize) -> Result<BigUint> {
    hamming_bounds(m, i, j, k)?;
    let (m, i, j, k) = (m as i64, i as i64, j as i64, k as i64);
    Ok((0..=m - k)
        .map(|c| {
            binomial(m - k, c)
                * binomial(k, m - i - c)
                * binomial(i + k - m + c, m - j - c)
                * binomial(m - k - c, i + j - m + c)
        })
        .sum())
}

/// Closed-form `p^k_{ij}` where one exists: Johnson and Hamming always,
/// crosspolytope layers only at `d = m` (where they coincide with `H(m,2)`).
pub fn closed_form_p(kind: SchemeKind, i: usize, j: usize, k: usize) -> Result<Option<BigUint>> {
    match kind {
        SchemeKind::Johnson { n, d } => johnson_p(n, d, i, j, k).map(Some),
        SchemeKind::Hamming { m } => hamming_p(m, i, j, k).map(Some),
        SchemeKind::Crosspolytope { m, d } if d == m => hamming_p(m, i, j, k).map(Some),
        SchemeKind::Crosspolytope { .. } => kind.validate().map(|_| None),
    }
}

/// Closed-form valency `n_i`.
pub fn valency(kind: SchemeKind, i: usize) -> Result<BigUint> {
    match kind {
        SchemeKind::Johnson { n, d } => johnson_valency(n, d, i),
        SchemeKind::Crosspolytope { m, d } => {
            kind.validate()?;
            crosspolytope_valency(m, d, i)
        }
        SchemeKind::Hamming { m } => {
            kind.validate()?;
            check_index(kind, "i", i)?;
            Ok(c(m, i))
        }
    }
}
