//! Fourier-Motzkin elimination for homogeneous strict systems `A x > 0`.
//!
//! Rows are scaled to primitive integer vectors so elimination stays exact
//! and duplicates collapse. A positive combination of two strict rows is
//! strict, so the projection of a strict system is again strict and the
//! original system is feasible iff elimination never produces `0 > 0`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Row = Vec<BigInt>;

fn primitive(row: Row) -> Row {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        row
    } else {
        row.into_iter().map(|x| x / &g).collect()
    }
}

fn integer_row(row: &[BigRational]) -> Row {
    let lcm = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    primitive(row.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect())
}

fn eliminate(rows: &BTreeSet<Row>, j: usize) -> BTreeSet<Row> {
    let mut next = BTreeSet::new();
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for r in rows {
        match r[j].sign() {
            num_bigint::Sign::Plus => pos.push(r),
            num_bigint::Sign::Minus => neg.push(r),
            num_bigint::Sign::NoSign => {
                next.insert(r.clone());
            }
        }
    }
    for p in &pos {
        for q in &neg {
            let (a, b) = (-&q[j], &p[j]);
            let combo: Row = p.iter().zip(q.iter()).map(|(x, y)| &a * x + b * y).collect();
            next.insert(primitive(combo));
        }
    }
    next
}

/// Returns a rational point `x` with `row · x > 0` for every row, or `None`
/// if the strict system is infeasible. Every row must have length `dim`.
pub fn strict_feasible_point(rows: &[Vec<BigRational>], dim: usize) -> Option<Vec<BigRational>> {
    assert!(rows.iter().all(|r| r.len() == dim), "row length must equal dim");
    let mut stages: Vec<BTreeSet<Row>> = vec![rows.iter().map(|r| integer_row(r)).collect()];
    for j in 0..dim {
        let current = stages.last().expect("nonempty");
        if current.iter().any(|r| r.iter().all(Zero::is_zero)) {
            return None;
        }
        if current.is_empty() {
            break;
        }
        let next = eliminate(current, j);
        stages.push(next);
    }
    let last = stages.last().expect("nonempty");
    if !last.is_empty() {
        // every variable eliminated; what remains reads 0 > 0
        return None;
    }

    let mut x = vec![BigRational::zero(); dim];
    for j in (0..stages.len() - 1).rev() {
        let (mut lo, mut hi): (Option<BigRational>, Option<BigRational>) = (None, None);
        for r in &stages[j] {
            if r[j].is_zero() {
                continue;
            }
            let rest: BigRational = (j + 1..dim)
                .map(|l| BigRational::from_integer(r[l].clone()) * &x[l])
                .fold(BigRational::zero(), |s, v| s + v);
            let c = BigRational::from_integer(r[j].clone());
            let bound = -rest / &c;
            if c.is_positive() {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            }
        }
        x[j] = match (lo, hi) {
            (Some(l), Some(h)) => {
                debug_assert!(l < h);
                (l + h) / BigRational::from_integer(BigInt::from(2))
            }
            (Some(l), None) => l + BigRational::one(),
            (None, Some(h)) => h - BigRational::one(),
            (None, None) => BigRational::zero(),
        };
    }
    Some(x)
}
