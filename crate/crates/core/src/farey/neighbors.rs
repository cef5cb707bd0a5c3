//! Neighbors and three-term recurrences in `F(B(n), m)`.
//!
//! Every function here checks membership (and adjacency where relevant) in the
//! materialized sequence first: the closed forms return plausible but wrong
//! fractions when fed non-members.

use std::fmt;

use super::{FareyError, FareySeq, Fraction, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Pred,
    Succ,
}

impl Direction {
    fn name(self) -> &'static str {
        match self {
            Direction::Pred => "predecessor",
            Direction::Succ => "successor",
        }
    }
}

/// Which end of an adjacent pair the third fraction of a triple extends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Back,
    Forward,
}

/// Halfsequence of `F(B(2m), m)`: at or below 1/2, or at or above it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// The unique `x` in `[hi - modulus + 1, hi]` with `coef * x ≡ residue (mod modulus)`.
fn solve_in_window(coef: i128, residue: i128, modulus: i128, hi: i128) -> Result<i128> {
    debug_assert!(modulus >= 1);
    let (g, inv, _) = ext_gcd(coef.rem_euclid(modulus), modulus);
    if g != 1 {
        return Err(FareyError::OutOfRange(format!(
            "{coef} is not invertible modulo {modulus}"
        )));
    }
    let x = (residue * inv).rem_euclid(modulus);
    Ok(hi - (hi - x).rem_euclid(modulus))
}

fn floor_div(a: i128, b: i128) -> i128 {
    a.div_euclid(b)
}

fn interior_params(seq: &FareySeq) -> Result<(i128, i128)> {
    let (n, m) = seq.boolean_params()?;
    if m == 0 || m >= n {
        return Err(FareyError::OutOfRange(format!("need 0 < m < n, got n = {n}, m = {m}")));
    }
    Ok((n as i128, m as i128))
}

fn half_params(seq: &FareySeq) -> Result<i128> {
    let m = seq.half_param()?;
    if m <= 1 {
        return Err(FareyError::OutOfRange(format!("need m > 1, got m = {m}")));
    }
    Ok(m as i128)
}

fn no_neighbor(seq: &FareySeq, f: Fraction, dir: Direction) -> FareyError {
    FareyError::NoNeighbor { fraction: f, direction: dir.name(), sequence: seq.variant().to_string() }
}

/// Adjacent fraction of an interior member of `F(B(n), m)`, `0 < m < n`,
/// by the general `x0, y0, t*` construction.
pub fn neighbor_general(seq: &FareySeq, f: Fraction, dir: Direction) -> Result<Fraction> {
    let (n, m) = interior_params(seq)?;
    seq.require_member(f)?;
    if (f == Fraction::ZERO && dir == Direction::Pred) || (f == Fraction::ONE && dir == Direction::Succ)
    {
        return Err(no_neighbor(seq, f, dir));
    }
    if f == Fraction::ZERO || f == Fraction::ONE {
        return Err(FareyError::OutOfRange(format!("{f} is an endpoint; the formula needs an interior fraction")));
    }
    let (h, k) = (f.h(), f.k());
    // pred: k*x0 ≡ -1 (mod h), succ: k*x0 ≡ 1 (mod h)
    let r = match dir {
        Direction::Pred => -1,
        Direction::Succ => 1,
    };
    let x0 = solve_in_window(k, r, h, m)?;
    let y0 = (k * x0 - r) / h;
    let t = floor_div(m - x0, h)
        .min(floor_div(n - y0, k))
        .min(floor_div(n - m + x0 - y0, k - h));
    Fraction::reduce_signed(x0 + t * h, y0 + t * k)
}

fn require_adjacent(seq: &FareySeq, a: Fraction, b: Fraction) -> Result<()> {
    let ia = seq.require_member(a)?;
    let ib = seq.require_member(b)?;
    if ib != ia + 1 {
        return Err(FareyError::NotAdjacent(a, b));
    }
    Ok(())
}

/// Given adjacent `a < b` in `F(B(n), m)`, returns the fraction before `a`
/// (`Step::Back`) or after `b` (`Step::Forward`) by the floor-of-min
/// recurrence.
pub fn triple_extend(seq: &FareySeq, a: Fraction, b: Fraction, step: Step) -> Result<Fraction> {
    let (n, m) = interior_params(seq)?;
    require_adjacent(seq, a, b)?;
    let (outer, middle) = match step {
        Step::Forward if b == Fraction::ONE => return Err(no_neighbor(seq, b, Direction::Succ)),
        Step::Back if a == Fraction::ZERO => return Err(no_neighbor(seq, a, Direction::Pred)),
        Step::Forward => (a, b),
        Step::Back => (b, a),
    };
    let (ho, ko, hm, km) = (outer.h(), outer.k(), middle.h(), middle.k());
    let q = floor_div(ho + m, hm)
        .min(floor_div(ko + n, km))
        .min(floor_div(ko - ho + n - m, km - hm));
    Fraction::reduce_signed(q * hm - ho, q * km - ko)
}

/// Neighbor in `F(B(2m), m)` by the `t* = 0` closed form of the requested
/// halfsequence. Errors if `f` violates that formula's side hypothesis.
pub fn neighbor_half_on(seq: &FareySeq, f: Fraction, dir: Direction, side: Side) -> Result<Fraction> {
    let m = half_params(seq)?;
    seq.require_member(f)?;
    let half = Fraction::HALF;
    match (side, dir) {
        (Side::Right, Direction::Succ) if f == Fraction::ONE => return Err(no_neighbor(seq, f, dir)),
        (Side::Left, Direction::Pred) if f == Fraction::ZERO => return Err(no_neighbor(seq, f, dir)),
        _ => {}
    }
    let ok = match (side, dir) {
        (Side::Right, Direction::Pred) => f > half,
        (Side::Right, Direction::Succ) => f >= half,
        (Side::Left, Direction::Pred) => f <= half,
        (Side::Left, Direction::Succ) => f < half,
    };
    if !ok {
        return Err(FareyError::WrongSide(format!("{f} for the {side} {} formula", dir.name())));
    }
    let (h, k) = (f.h(), f.k());
    match side {
        Side::Right => {
            let r = if dir == Direction::Pred { -1 } else { 1 };
            let x0 = solve_in_window(k, r, h, m)?;
            Fraction::reduce_signed(x0, (k * x0 - r) / h)
        }
        Side::Left => {
            let r = if dir == Direction::Pred { 1 } else { -1 };
            let d = k - h;
            let x0 = solve_in_window(h, r, d, m)?;
            Fraction::reduce_signed((h * x0 - r) / d, (k * x0 - r) / d)
        }
    }
}

/// Neighbor in `F(B(2m), m)`, dispatching on the side of 1/2: predecessors of
/// fractions above 1/2 and successors of fractions at or above 1/2 use the
/// right-half formulas, everything else the left-half ones.
pub fn neighbor_half(seq: &FareySeq, f: Fraction, dir: Direction) -> Result<Fraction> {
    let side = match dir {
        Direction::Pred if f > Fraction::HALF => Side::Right,
        Direction::Succ if f >= Fraction::HALF => Side::Right,
        _ => Side::Left,
    };
    neighbor_half_on(seq, f, dir, side)
}

/// Single-floor recurrence for triples inside one halfsequence of
/// `F(B(2m), m)`.
///
/// The right-half form applies when the first fraction of the triple is at
/// least 1/2, the left-half form when the last one is at most 1/2. Triples
/// straddling 1/2 satisfy neither and are rejected.
pub fn triple_extend_half(seq: &FareySeq, a: Fraction, b: Fraction, step: Step) -> Result<Fraction> {
    let m = half_params(seq)?;
    require_adjacent(seq, a, b)?;
    let half = Fraction::HALF;
    let side = match step {
        Step::Forward if b == Fraction::ONE => return Err(no_neighbor(seq, b, Direction::Succ)),
        Step::Back if a == Fraction::ZERO => return Err(no_neighbor(seq, a, Direction::Pred)),
        Step::Forward if a >= half => Side::Right,
        Step::Forward if b < half => Side::Left,
        Step::Back if a > half => Side::Right,
        Step::Back if b <= half => Side::Left,
        _ => {
            return Err(FareyError::WrongSide(format!(
                "the triple through {a} and {b} straddles 1/2"
            )))
        }
    };
    let (outer, middle) = match step {
        Step::Forward => (a, b),
        Step::Back => (b, a),
    };
    let (ho, ko, hm, km) = (outer.h(), outer.k(), middle.h(), middle.k());
    let q = match side {
        Side::Right => floor_div(ho + m, hm),
        Side::Left => floor_div(ko - ho + m, km - hm),
    };
    Fraction::reduce_signed(q * hm - ho, q * km - ko)
}

/// The predecessor and successor of 1/3 in `F(B(2m), m)`, by parity.
// the parity cases read as written
#[allow(clippy::manual_div_ceil, clippy::manual_is_multiple_of)]
pub fn neighbors_of_one_third(m: u64) -> Result<(Fraction, Fraction)> {
    if m <= 1 {
        return Err(FareyError::OutOfRange(format!("need m > 1, got m = {m}")));
    }
    if m > u64::MAX / 3 {
        return Err(FareyError::Overflow);
    }
    let (pred, succ) = if m % 2 == 0 {
        (((m - 2) / 2, (3 * m - 4) / 2), (m / 2, (3 * m - 2) / 2))
    } else {
        (((m - 1) / 2, (3 * m - 1) / 2), ((m + 1) / 2, (3 * m + 1) / 2))
    };
    Ok((Fraction::reduce(pred.0, pred.1)?, Fraction::reduce(succ.0, succ.1)?))
}
