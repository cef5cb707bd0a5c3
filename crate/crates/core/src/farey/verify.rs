//! Sequence-level verification of the `F(B(2m), m)` identities.
//!
//! Everything here compares a closed form against the materialized sequence
//! (or, for small `m`, against the subset-enumeration oracle).

use std::collections::BTreeMap;

use super::maps::{
    map_fm_to_half, map_half_to_fm, reverse_involution, third_symmetry_involution, Orientation,
};
use super::neighbors::{
    neighbor_general, neighbor_half, neighbors_of_one_third, triple_extend, triple_extend_half,
    Direction, Side, Step,
};
use super::{
    farey_boolean, farey_boolean_oracle, farey_numerator_bounded, farey_sequence, FareyError,
    FareySeq, Fraction,
};
use crate::exec::{map_range, Strategy};
use crate::report::{CheckResult, Report};

/// Largest `m` for which the suite also runs the `2^(2m)` subset oracle.
pub const SUITE_ORACLE_MAX_M: u64 = 10;

fn fr(h: u64, k: u64) -> Fraction {
    Fraction::reduce(h, k).expect("valid constant")
}

fn first<I: IntoIterator<Item = Option<String>>>(it: I) -> Option<String> {
    it.into_iter().flatten().next()
}

fn same(label: &str, got: Result<Fraction, FareyError>, want: Fraction) -> Option<String> {
    match got {
        Ok(g) if g == want => None,
        Ok(g) => Some(format!("{label}: got {g}, expected {want}")),
        Err(e) => Some(format!("{label}: {e}")),
    }
}

/// The identities around 2/3 and 1/3 for `F(B(2m), m)`, `m > 1`.
pub fn verify_prop5(m: u64) -> Report {
    let subject = format!("symmetry identities of F(B({}),{m})", 2 * m);
    if m <= 1 {
        return Report::hypothesis_violated(subject, format!("need m > 1, got m = {m}"));
    }
    match farey_boolean(2 * m, m) {
        Ok(seq) => {
            let mut report = Report::new(subject);
            for c in prop5_checks(&seq, m) {
                report.push(c);
            }
            report
        }
        Err(e) => Report::hypothesis_violated(subject, e.to_string()),
    }
}

fn prop5_checks(seq: &FareySeq, m: u64) -> Vec<CheckResult> {
    let e = seq.entries();
    let idx = |f: Fraction| seq.index_of(f).expect("1/3, 1/2, 2/3 are members for m > 1");
    let (s, t) = (idx(Fraction::HALF), idx(fr(2, 3)));
    let mut out = Vec::new();

    let mut palindrome = None;
    let mut denominators = None;
    for v in 0..=(t - s) {
        let (hi, lo) = match (e.get(t + v), t.checked_sub(v).and_then(|i| e.get(i))) {
            (Some(hi), Some(lo)) => (*hi, *lo),
            _ => {
                palindrome.get_or_insert(format!("m={m} v={v}: index out of range"));
                continue;
            }
        };
        if hi.num() != lo.num() && palindrome.is_none() {
            palindrome = Some(format!("m={m} v={v}: {hi} and {lo} have different numerators"));
        }
        if hi.den() + lo.den() != 3 * hi.num() && denominators.is_none() {
            denominators = Some(format!("m={m} v={v}: ({} + {}) / {} != 3", hi.den(), lo.den(), hi.num()));
        }
    }
    out.push(CheckResult::from_first_failure("numerators symmetric around 2/3", palindrome));
    out.push(CheckResult::from_first_failure("denominator sum over numerator is 3 around 2/3", denominators));

    let (s3, t3) = (idx(fr(1, 3)), idx(Fraction::HALF));
    let third = first((0..=(t3 - s3)).map(|v| {
        let (hi, lo) = match (e.get(s3 + v), s3.checked_sub(v).and_then(|i| e.get(i))) {
            (Some(hi), Some(lo)) => (*hi, *lo),
            _ => return Some(format!("m={m} v={v}: index out of range")),
        };
        (hi.den() + lo.den() != 3 * (hi.num() + lo.num())).then(|| {
            format!("m={m} v={v}: ({} + {}) / ({} + {}) != 3", hi.den(), lo.den(), hi.num(), lo.num())
        })
    }));
    out.push(CheckResult::from_first_failure("1/3-centered identity", third));

    for (side, half, name) in [
        (Side::Right, seq.right_half(), "h/k -> h/(3h-k) reverses the right half"),
        (Side::Left, seq.left_half(), "h/k -> (k-2h)/(2k-3h) reverses the left half"),
    ] {
        out.push(CheckResult::from_first_failure(name, involution_failure(half, m, |f| third_symmetry_involution(f, side))));
    }

    let one_third = match neighbors_of_one_third(m) {
        Ok((p, q)) => {
            let i = idx(fr(1, 3));
            first([same("pred of 1/3", Ok(p), e[i - 1]), same("succ of 1/3", Ok(q), e[i + 1])])
                .map(|c| format!("m={m}: {c}"))
        }
        Err(err) => Some(format!("m={m}: {err}")),
    };
    out.push(CheckResult::from_first_failure("closed-form neighbors of 1/3", one_third));
    out
}

/// `map` must send `domain` onto itself in reverse order and square to the
/// identity.
fn involution_failure(
    domain: &[Fraction],
    m: u64,
    map: impl Fn(Fraction) -> Result<Fraction, FareyError>,
) -> Option<String> {
    let n = domain.len();
    first(domain.iter().enumerate().map(|(i, &f)| {
        let want = domain[n - 1 - i];
        match map(f) {
            Ok(g) if g != want => Some(format!("m={m}: {f} -> {g}, expected {want}")),
            Ok(g) => match map(g) {
                Ok(back) if back == f => None,
                Ok(back) => Some(format!("m={m}: applying twice sends {f} to {back}")),
                Err(e) => Some(format!("m={m}: {e}")),
            },
            Err(e) => Some(format!("m={m}: {e}")),
        }
    }))
}

fn neighbor_failures(seq: &FareySeq, m: u64) -> [(&'static str, Option<String>); 4] {
    let e = seq.entries();
    let last = e.len() - 1;
    let general = first((1..last).map(|i| {
        first([
            same("pred", neighbor_general(seq, e[i], Direction::Pred), e[i - 1]),
            same("succ", neighbor_general(seq, e[i], Direction::Succ), e[i + 1]),
        ])
        .map(|c| format!("m={m} at {}: {c}", e[i]))
    }));
    let half = first((0..=last).map(|i| {
        let p = (i > 0).then(|| same("pred", neighbor_half(seq, e[i], Direction::Pred), e[i - 1]));
        let s = (i < last).then(|| same("succ", neighbor_half(seq, e[i], Direction::Succ), e[i + 1]));
        first([p.flatten(), s.flatten()]).map(|c| format!("m={m} at {}: {c}", e[i]))
    }));
    let triple = first((0..last).map(|i| {
        let fwd = (i + 2 <= last)
            .then(|| same("forward", triple_extend(seq, e[i], e[i + 1], Step::Forward), e[i + 2]));
        let back =
            (i >= 1).then(|| same("back", triple_extend(seq, e[i], e[i + 1], Step::Back), e[i - 1]));
        first([fwd.flatten(), back.flatten()]).map(|c| format!("m={m} at ({}, {}): {c}", e[i], e[i + 1]))
    }));
    // straddling triples are the only ones outside both hypotheses
    let half_triple = first((0..last).map(|i| {
        let (a, b) = (e[i], e[i + 1]);
        let check = |step: Step, want: Fraction| {
            let straddles = match step {
                Step::Forward => a < Fraction::HALF && b == Fraction::HALF,
                Step::Back => a == Fraction::HALF,
            };
            match triple_extend_half(seq, a, b, step) {
                Err(FareyError::WrongSide(_)) if straddles => None,
                got if straddles => Some(format!("expected a side error, got {got:?}")),
                got => same("value", got, want),
            }
        };
        let fwd = (i + 2 <= last).then(|| check(Step::Forward, e[i + 2]));
        let back = (i >= 1).then(|| check(Step::Back, e[i - 1]));
        first([fwd.flatten(), back.flatten()]).map(|c| format!("m={m} at ({a}, {b}): {c}"))
    }));
    [
        ("neighbor_general reproduces adjacency", general),
        ("neighbor_half reproduces adjacency", half),
        ("triple_extend reproduces triples", triple),
        ("triple_extend_half reproduces triples", half_triple),
    ]
}

fn bijection_failure(seq: &FareySeq, fm: &FareySeq, m: u64) -> Option<String> {
    let targets = fm.entries();
    first([Side::Left, Side::Right].into_iter().flat_map(|side| {
        [Orientation::Preserving, Orientation::Reversing].into_iter().map(move |o| (side, o))
    }).map(|(side, o)| {
        let half = match side {
            Side::Left => seq.left_half(),
            Side::Right => seq.right_half(),
        };
        let tag = format!("m={m} {side} {o:?}");
        let forward: Result<Vec<_>, _> = half.iter().map(|&f| map_half_to_fm(f, side, o)).collect();
        let backward: Result<Vec<_>, _> = targets.iter().map(|&f| map_fm_to_half(f, side, o)).collect();
        let (mut forward, mut backward) = match (forward, backward) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return Some(format!("{tag}: {e}")),
        };
        if o == Orientation::Reversing {
            forward.reverse();
            backward.reverse();
        }
        if forward != targets {
            return Some(format!("{tag}: image of the halfsequence is not F_{m} in order"));
        }
        if backward != half {
            return Some(format!("{tag}: image of F_{m} is not the halfsequence in order"));
        }
        first(half.iter().map(|&f| {
            let round = map_half_to_fm(f, side, o).and_then(|g| map_fm_to_half(g, side, o));
            same("round trip", round, f).map(|c| format!("{tag} at {f}: {c}"))
        }))
    }))
}

fn suite_for(m: u64) -> Vec<CheckResult> {
    let seq = match farey_boolean(2 * m, m) {
        Ok(s) => s,
        Err(e) => return vec![CheckResult::fail("generate F(B(2m),m)", format!("m={m}: {e}"))],
    };
    let mut out = Vec::new();
    let oracle = if m <= SUITE_ORACLE_MAX_M {
        match farey_boolean_oracle(2 * m, m) {
            Ok(o) if o.entries() == seq.entries() => None,
            Ok(_) => Some(format!("m={m}: subset oracle disagrees")),
            Err(e) => Some(format!("m={m}: {e}")),
        }
    } else {
        None
    };
    out.push(CheckResult::from_first_failure("F(B(2m),m) equals the subset oracle (m <= 10)", oracle));
    for (name, failure) in neighbor_failures(&seq, m) {
        out.push(CheckResult::from_first_failure(name, failure));
    }
    let reverse = involution_failure(seq.entries(), m, |f| Ok(reverse_involution(f)));
    out.push(CheckResult::from_first_failure("h/k -> (k-h)/k reverses F(B(2m),m)", reverse));
    let bij = match farey_sequence(m) {
        Ok(fm) => bijection_failure(&seq, &fm, m),
        Err(e) => Some(e.to_string()),
    };
    out.push(CheckResult::from_first_failure("eight halfsequence/F_m bijections", bij));
    out.extend(prop5_checks(&seq, m));
    let bounded = match (farey_numerator_bounded(m, m), farey_sequence(m)) {
        (Ok(a), Ok(b)) if a.entries() == b.entries() => None,
        (Ok(_), Ok(_)) => Some(format!("n={m}: sequences differ")),
        (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
    };
    out.push(CheckResult::from_first_failure("numerator-bounded (n, n) equals F_n", bounded));
    out
}

/// Runs every sequence-level check for `2 <= m <= m_max`; each check reports
/// the first counterexample in increasing `m`.
pub fn verify_suite(m_max: u64, strategy: Strategy) -> Report {
    let mut report = Report::new(format!("F(B(2m),m) suite, 2 <= m <= {m_max}"));
    if m_max < 2 {
        return report;
    }
    let per_m = map_range(strategy, 2..(m_max as usize + 1), |m| suite_for(m as u64));
    let mut merged: BTreeMap<usize, CheckResult> = BTreeMap::new();
    for checks in per_m {
        for (slot, c) in checks.into_iter().enumerate() {
            let entry = merged.entry(slot).or_insert_with(|| CheckResult::pass(c.name.clone()));
            if entry.passed() && !c.passed() {
                *entry = c;
            }
        }
    }
    for c in merged.into_values() {
        report.push(c);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prop5_small() {
        for m in [2, 3, 4, 5] {
            let r = verify_prop5(m);
            assert!(r.passed(), "{r}");
        }
        assert!(!verify_prop5(1).hypothesis_holds());
    }

    #[test]
    fn suite_small() {
        let r = verify_suite(8, Strategy::Sequential);
        assert!(r.passed(), "{r}");
        assert!(r.checks.len() >= 12);
    }
}
