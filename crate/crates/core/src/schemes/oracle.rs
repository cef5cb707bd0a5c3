//! Exhaustive intersection-number counts over explicit ground sets.

use num_bigint::BigUint;

use super::{Result, SchemeError, SchemeKind};
use crate::exec::Guard;

/// Largest `n` for Johnson oracles without override.
pub const ORACLE_MAX_N: usize = 12;
/// Largest `m` for crosspolytope and Hamming oracles without override.
pub const ORACLE_MAX_M: usize = 8;

/// Base pairs examined per distance, the canonical pair included.
const SAMPLED_PAIRS: usize = 10;

/// `|{z : ∂(z,x) = i, ∂(z,y) = j}|` for a canonical pair at distance `k`,
/// and whether every sampled pair at distance `k` gave the same count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCount {
    pub count: BigUint,
    pub well_defined: bool,
}

/// All counts `p^k_{ij}` for one `k`, with the pair-independence verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleTable {
    pub kind: SchemeKind,
    pub k: usize,
    /// `counts[i][j]` for the canonical pair.
    pub counts: Vec<Vec<u64>>,
    pub pairs_sampled: usize,
    pub well_defined: bool,
    /// Number of elements of the ground set.
    pub size: usize,
}

/// Elements as `(support, signs)` bitmasks; Johnson and Hamming leave one
/// half fixed.
type Element = (u32, u32);

fn ground_set(kind: SchemeKind) -> Vec<Element> {
    match kind {
        SchemeKind::Johnson { n, d } => {
            (0u32..1 << n).filter(|s| s.count_ones() as usize == d).map(|s| (s, 0)).collect()
        }
        SchemeKind::Crosspolytope { m, d } => (0u32..1 << m)
            .filter(|s| s.count_ones() as usize == d)
            .flat_map(|s| (0u32..1 << m).filter(move |g| g & !s == 0).map(move |g| (s, g)))
            .collect(),
        SchemeKind::Hamming { m } => (0u32..1 << m).map(|g| ((1 << m) - 1, g)).collect(),
    }
}

fn distance(kind: SchemeKind, x: Element, y: Element) -> usize {
    match kind {
        SchemeKind::Johnson { d, .. } => d - (x.0 & y.0).count_ones() as usize,
        SchemeKind::Crosspolytope { d, .. } => {
            let agree = x.0 & y.0 & !(x.1 ^ y.1);
            d - agree.count_ones() as usize
        }
        SchemeKind::Hamming { .. } => (x.1 ^ y.1).count_ones() as usize,
    }
}

fn table_for(kind: SchemeKind, xs: &[Element], x: Element, y: Element) -> Vec<Vec<u64>> {
    let r = kind.diameter();
    let mut t = vec![vec![0u64; r + 1]; r + 1];
    for &z in xs {
        t[distance(kind, z, x)][distance(kind, z, y)] += 1;
    }
    t
}

fn guard_check(kind: SchemeKind, guard: Guard) -> Result<()> {
    if !guard.enforced() {
        return Ok(());
    }
    let (v, limit) = match kind {
        SchemeKind::Johnson { n, .. } => (n, ORACLE_MAX_N),
        SchemeKind::Crosspolytope { m, .. } | SchemeKind::Hamming { m } => (m, ORACLE_MAX_M),
    };
    if v > limit {
        return Err(SchemeError::Guard { kind, limit });
    }
    Ok(())
}

/// Counts the full `p^k_{..}` table at a canonical pair and compares it with
/// up to nine further pairs at distance `k`, spread deterministically over the
/// ground set.
pub fn scheme_oracle_table(kind: SchemeKind, k: usize, guard: Guard) -> Result<OracleTable> {
    let kind = kind.validate()?;
    guard_check(kind, guard)?;
    if kind.diameter() > 31 {
        return Err(SchemeError::Guard { kind, limit: 31 });
    }
    let xs = ground_set(kind);
    let pairs: Vec<(Element, Element)> = xs
        .iter()
        .flat_map(|&x| xs.iter().filter(move |&&y| distance(kind, x, y) == k).map(move |&y| (x, y)))
        .collect();
    let Some(&(x0, y0)) = pairs.first() else {
        return Err(SchemeError::NoPair { kind, k });
    };
    let counts = table_for(kind, &xs, x0, y0);
    let step = (pairs.len() / SAMPLED_PAIRS).max(1);
    let sampled: Vec<_> = pairs.iter().step_by(step).skip(1).take(SAMPLED_PAIRS - 1).collect();
    let well_defined = sampled.iter().all(|&&(x, y)| table_for(kind, &xs, x, y) == counts);
    Ok(OracleTable {
        kind,
        k,
        counts,
        pairs_sampled: sampled.len() + 1,
        well_defined,
        size: xs.len(),
    })
}

/// Exhaustive `p^k_{ij}`.
pub fn scheme_oracle(kind: SchemeKind, k: usize, i: usize, j: usize) -> Result<OracleCount> {
    scheme_oracle_with(kind, k, i, j, Guard::Enforce)
}

pub fn scheme_oracle_with(kind: SchemeKind, k: usize, i: usize, j: usize, guard: Guard) -> Result<OracleCount> {
    let kind = kind.validate()?;
    let r = kind.diameter();
    if i > r || j > r || k > r {
        return Err(SchemeError::Bounds(format!("indices ({i},{j},{k}) exceed {r} for {kind}")));
    }
    let t = scheme_oracle_table(kind, k, guard)?;
    Ok(OracleCount { count: BigUint::from(t.counts[i][j]), well_defined: t.well_defined })
}
