//! Verifiers for the two layer decompositions of the committee family and of
//! its opposite-free subfamily.
//!
//! Each verifier rebuilds the family along independent routes and compares:
//!
//! 1. the size bounds on nonempty layers;
//! 2. layer-by-layer equality with the threshold description
//!    `|K ∩ T_e+| >= ceil((k+1)/2)`;
//! 3. per-committee fraction signatures `f = |K ∩ T_e+| / |K|` and the
//!    multiplier `s` with `|K| = s * den(f)`, `|K ∩ T_e+| = s * num(f)`;
//! 4. the family reassembled from admissible `(s * den(f), s * num(f))`
//!    pairs, swept over all subsets.

use std::collections::BTreeSet;

use super::{all_masks, enumerate_all_with, fraction_signature, Halfspaces, Result};
use crate::exec::{Guard, Strategy};
use crate::farey::{farey_boolean, farey_sequence, FareySeq, Fraction};
use crate::om::ToposSystem;
use crate::report::{CheckResult, Report};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    All,
    NoOpposites,
}

/// Committee family checks for a non-acyclic system. Acyclic input yields a
/// hypothesis-violation report.
pub fn verify_prop8(sys: &ToposSystem) -> Result<Report> {
    verify_prop8_with(sys, Guard::Enforce, Strategy::default())
}

pub fn verify_prop8_with(sys: &ToposSystem, guard: Guard, strategy: Strategy) -> Result<Report> {
    verify_family(sys, Family::All, guard, strategy)
}

/// Opposite-free committee family checks for a non-acyclic system.
pub fn verify_thm9(sys: &ToposSystem) -> Result<Report> {
    verify_thm9_with(sys, Guard::Enforce, Strategy::default())
}

pub fn verify_thm9_with(sys: &ToposSystem, guard: Guard, strategy: Strategy) -> Result<Report> {
    verify_family(sys, Family::NoOpposites, guard, strategy)
}

fn verify_family(sys: &ToposSystem, family: Family, guard: Guard, strategy: Strategy) -> Result<Report> {
    let n = sys.len();
    let subject = match family {
        Family::All => format!("committee layers (|T| = {n})"),
        Family::NoOpposites => format!("opposite-free committee layers (|T| = {n})"),
    };
    if sys.is_acyclic() {
        return Ok(Report::hypothesis_violated(subject, "the all-plus sign vector is a tope (acyclic)"));
    }
    let no_opp = family == Family::NoOpposites;
    let fam = enumerate_all_with(sys, no_opp, guard, strategy)?;
    let hs = Halfspaces::new(sys)?;
    let half = n / 2;
    let (lo, hi) = match family {
        Family::All => (3, n.saturating_sub(3)),
        Family::NoOpposites => (3, half),
    };
    let mut report = Report::new(subject);

    let out_of_range = fam
        .iter()
        .find(|c| c.size() < lo || c.size() > hi)
        .map(|c| format!("committee {} has size {}", c.render(sys), c.size()));
    report.push(CheckResult::from_first_failure(format!("committee sizes within [{lo}, {hi}]"), out_of_range));

    let mut family_masks: Vec<u64> = fam.iter().map(|c| c.mask()).collect();
    family_masks.sort_unstable();
    let admissible_subset = |m: u64| !(no_opp && hs.has_opposite_pair(m));

    let threshold: Vec<u64> = all_masks(n, strategy, |m| {
        let k = m.count_ones() as usize;
        (lo..=hi).contains(&k) && admissible_subset(m) && hs.is_committee_threshold(m)
    });
    report.push(CheckResult::from_first_failure(
        "layers equal the threshold description",
        first_difference(sys, &family_masks, &threshold),
    ));

    let (seq, label) = match family {
        Family::All => (farey_boolean(n as u64, half as u64), format!("F(B({n}),{half})")),
        Family::NoOpposites => (farey_sequence(half.max(1) as u64), format!("F_{half}")),
    };
    let seq = seq.expect("parameters are in range");
    let bound = |f: Fraction| match family {
        Family::All => n as u64 / (2 * f.num()),
        Family::NoOpposites => n as u64 / (2 * f.den()),
    };

    let mut signature_failure = None;
    'outer: for c in fam.iter() {
        for e in 1..=sys.t() {
            let f = match fraction_signature(sys, c, e) {
                Ok(f) => f,
                Err(err) => {
                    signature_failure = Some(err.to_string());
                    break 'outer;
                }
            };
            let count = c.counts()[e - 1] as u64;
            let size = c.size() as u64;
            let s = size / f.den();
            let problem = if f <= Fraction::HALF {
                Some(format!("signature {f} <= 1/2"))
            } else if !seq.contains(f) {
                Some(format!("signature {f} not in {label}"))
            } else if s * f.den() != size || s * f.num() != count {
                Some(format!("no integer multiplier for {count}/{size} over {f}"))
            } else if s < 1 || s > bound(f) {
                Some(format!("multiplier {s} outside [1, {}] for {f}", bound(f)))
            } else {
                None
            };
            if let Some(p) = problem {
                signature_failure = Some(format!("committee {} element {e}: {p}", c.render(sys)));
                break 'outer;
            }
        }
    }
    report.push(CheckResult::from_first_failure(
        format!("signatures exceed 1/2, lie in {label}, and factor as s * f"),
        signature_failure,
    ));

    let pairs = admissible_pairs(&seq, bound);
    let rebuilt: Vec<u64> = all_masks(n, strategy, |m| {
        let size = m.count_ones() as u64;
        admissible_subset(m) && hs.counts(m).iter().all(|&c| pairs.contains(&(size, c as u64)))
    });
    report.push(CheckResult::from_first_failure(
        format!("union over f > 1/2 in {label} and s reproduces the family"),
        first_difference(sys, &family_masks, &rebuilt),
    ));
    Ok(report)
}

/// `(s * den(f), s * num(f))` for `f > 1/2` in `seq` and `1 <= s <= bound(f)`.
fn admissible_pairs(seq: &FareySeq, bound: impl Fn(Fraction) -> u64) -> BTreeSet<(u64, u64)> {
    seq.entries()
        .iter()
        .filter(|&&f| f > Fraction::HALF)
        .flat_map(|&f| (1..=bound(f)).map(move |s| (s * f.den(), s * f.num())))
        .collect()
}

/// Both inputs ascending.
fn first_difference(sys: &ToposSystem, expected: &[u64], got: &[u64]) -> Option<String> {
    let render = |m: u64| super::render_mask(sys, m);
    let a: BTreeSet<u64> = expected.iter().copied().collect();
    let b: BTreeSet<u64> = got.iter().copied().collect();
    if let Some(&m) = a.difference(&b).next() {
        return Some(format!("committee {} missing from the alternative description", render(m)));
    }
    if let Some(&m) = b.difference(&a).next() {
        return Some(format!("{} admitted by the alternative description but not a committee", render(m)));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::om::parse_topes;

    #[test]
    fn triangle_passes_both() {
        let sys = parse_topes("++-\n+-+\n-++\n--+\n-+-\n+--\n").unwrap();
        let r8 = verify_prop8(&sys).unwrap();
        assert!(r8.passed(), "{r8}");
        let r9 = verify_thm9(&sys).unwrap();
        assert!(r9.passed(), "{r9}");
    }

    #[test]
    fn acyclic_reports_hypothesis() {
        let quad = parse_topes("++\n+-\n-+\n--\n").unwrap();
        let r = verify_prop8(&quad).unwrap();
        assert!(!r.hypothesis_holds());
        assert!(!r.passed());
        assert!(!verify_thm9(&quad).unwrap().hypothesis_holds());
    }

    #[test]
    fn admissible_pairs_for_six_topes() {
        let seq = farey_boolean(6, 3).unwrap();
        let pairs = admissible_pairs(&seq, |f| 6 / (2 * f.num()));
        // 2/3 with s = 1 and 1/1 with s = 1..=3
        assert!(pairs.contains(&(3, 2)));
        assert!(pairs.contains(&(3, 3)));
        assert!(!pairs.contains(&(6, 4)));
    }
}
