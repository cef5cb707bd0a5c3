//! Closed forms against exhaustive counts.

use num_bigint::BigUint;

use super::oracle::{ORACLE_MAX_M, ORACLE_MAX_N};
use super::{
    binomial, closed_form_p, crosspolytope_valency, crosspolytope_valency_alt, crosspolytope_whitney, hamming_p,
    hamming_p_binomial_sum, scheme_oracle_table, valency, Result, SchemeError, SchemeKind,
};
use crate::exec::{map_range, Guard, Strategy};
use crate::report::{CheckResult, Report};

pub const SCHEME_ORACLE_MAX_N: usize = ORACLE_MAX_N;
pub const SCHEME_ORACLE_MAX_M: usize = ORACLE_MAX_M;

/// Checks every closed form against the oracles for Johnson `n <= max_n`
/// and crosspolytope/Hamming `m <= max_m`.
pub fn verify_schemes(max_n: usize, max_m: usize) -> Result<Report> {
    verify_schemes_with(max_n, max_m, Guard::Enforce, Strategy::default())
}

pub fn verify_schemes_with(max_n: usize, max_m: usize, guard: Guard, strategy: Strategy) -> Result<Report> {
    if guard.enforced() {
        if max_n > ORACLE_MAX_N {
            return Err(SchemeError::Guard { kind: SchemeKind::Johnson { n: max_n, d: 1 }, limit: ORACLE_MAX_N });
        }
        if max_m > ORACLE_MAX_M {
            return Err(SchemeError::Guard { kind: SchemeKind::Hamming { m: max_m }, limit: ORACLE_MAX_M });
        }
    }
    let mut report = Report::new(format!("schemes (n <= {max_n}, m <= {max_m})"));

    let johnson: Vec<SchemeKind> =
        (2..=max_n).flat_map(|n| (1..=n / 2).map(move |d| SchemeKind::Johnson { n, d })).collect();
    let hamming: Vec<SchemeKind> = (1..=max_m).map(|m| SchemeKind::Hamming { m }).collect();
    let cross: Vec<SchemeKind> =
        (1..=max_m).flat_map(|m| (1..=m).map(move |d| SchemeKind::Crosspolytope { m, d })).collect();

    for (label, kinds) in [("Johnson", &johnson), ("Hamming", &hamming)] {
        let results = map_range(strategy, 0..kinds.len(), |idx| intersection_check(kinds[idx]));
        report.push(CheckResult::from_first_failure(
            format!("{label} p^k_ij equals the oracle and is pair-independent"),
            first_err(results)?,
        ));
    }
    for (label, kinds) in [("Johnson", &johnson), ("Hamming", &hamming)] {
        let results = map_range(strategy, 0..kinds.len(), |idx| row_sum_check(kinds[idx]));
        report.push(CheckResult::from_first_failure(
            format!("{label} row sums equal valencies; valencies sum to |X|"),
            first_err(results)?,
        ));
    }

    let mut parity = None;
    let mut four = None;
    'outer: for m in 1..=max_m {
        for i in 0..=m {
            for j in 0..=m {
                for k in 0..=m {
                    let p = hamming_p(m, i, j, k)?;
                    if (i + j + k) % 2 == 1 && p != BigUint::from(0u32) && parity.is_none() {
                        parity = Some(format!("H({m},2) p^{k}_{i}{j} = {p} with odd i+j+k"));
                    }
                    let s = hamming_p_binomial_sum(m, i, j, k)?;
                    if s != p && four.is_none() {
                        four = Some(format!("H({m},2) p^{k}_{i}{j}: parity form {p}, four-binomial sum {s}"));
                    }
                    if parity.is_some() && four.is_some() {
                        break 'outer;
                    }
                }
            }
        }
    }
    report.push(CheckResult::from_first_failure("Hamming p^k_ij vanishes for odd i+j+k", parity));
    report.push(CheckResult::from_first_failure("Hamming parity form equals the four-binomial sum", four));

    let results = map_range(strategy, 0..cross.len(), |idx| crosspolytope_check(cross[idx]));
    report.push(CheckResult::from_first_failure(
        "crosspolytope layer sizes and valencies equal exhaustive counts",
        first_err(results)?,
    ));
    let reduction = (1..=max_m)
        .flat_map(|m| (0..=m).map(move |i| (m, i)))
        .find_map(|(m, i)| {
            let v = crosspolytope_valency(m, m, i).ok()?;
            (v != binomial(m as i64, i as i64)).then(|| format!("m = {m}, i = {i}: {v}"))
        });
    report.push(CheckResult::from_first_failure("crosspolytope valency at d = m is C(m,i)", reduction));
    let results = map_range(strategy, 0..max_m, |idx| {
        let m = idx + 1;
        intersection_check(SchemeKind::Crosspolytope { m, d: m })
    });
    report.push(CheckResult::from_first_failure(
        "crosspolytope layer d = m matches H(m,2) and is pair-independent",
        first_err(results)?,
    ));
    Ok(report)
}

fn first_err(results: Vec<Result<Option<String>>>) -> Result<Option<String>> {
    for r in results {
        if let Some(msg) = r? {
            return Ok(Some(msg));
        }
    }
    Ok(None)
}

fn intersection_check(kind: SchemeKind) -> Result<Option<String>> {
    let r = kind.diameter();
    for k in 0..=r {
        let table = match scheme_oracle_table(kind, k, Guard::Override) {
            Ok(t) => t,
            // no pair at this distance: every closed form must vanish on row k
            Err(SchemeError::NoPair { .. }) => {
                return Ok(Some(format!("{kind}: no pair at distance {k}")));
            }
            Err(e) => return Err(e),
        };
        if !table.well_defined {
            return Ok(Some(format!("{kind}: p^{k} depends on the base pair")));
        }
        for i in 0..=r {
            for j in 0..=r {
                let expected = closed_form_p(kind, i, j, k)?.expect("closed form exists");
                let got = BigUint::from(table.counts[i][j]);
                if expected != got {
                    return Ok(Some(format!("{kind} p^{k}_{i}{j}: closed form {expected}, oracle {got}")));
                }
            }
        }
    }
    Ok(None)
}

fn row_sum_check(kind: SchemeKind) -> Result<Option<String>> {
    let r = kind.diameter();
    let size = match kind {
        SchemeKind::Johnson { n, d } => binomial(n as i64, d as i64),
        SchemeKind::Hamming { m } => BigUint::from(1u32) << m,
        SchemeKind::Crosspolytope { m, d } => crosspolytope_whitney(m, d)?,
    };
    let total: BigUint = (0..=r).map(|i| valency(kind, i)).sum::<Result<BigUint>>()?;
    if total != size {
        return Ok(Some(format!("{kind}: valencies sum to {total}, |X| = {size}")));
    }
    for k in 0..=r {
        for i in 0..=r {
            let row: BigUint = (0..=r).map(|j| closed_form_p(kind, i, j, k).map(|p| p.unwrap_or_default())).sum::<Result<BigUint>>()?;
            let n_i = valency(kind, i)?;
            if row != n_i {
                return Ok(Some(format!("{kind}: sum_j p^{k}_{i}j = {row}, n_{i} = {n_i}")));
            }
        }
    }
    Ok(None)
}

fn crosspolytope_check(kind: SchemeKind) -> Result<Option<String>> {
    let SchemeKind::Crosspolytope { m, d } = kind else { unreachable!() };
    let table = scheme_oracle_table(kind, 0, Guard::Override)?;
    let w = crosspolytope_whitney(m, d)?;
    if BigUint::from(table.size) != w {
        return Ok(Some(format!("{kind}: {} elements, Whitney number {w}", table.size)));
    }
    for i in 0..=d {
        let v = crosspolytope_valency(m, d, i)?;
        let got = BigUint::from(table.counts[i][i]);
        if v != got {
            return Ok(Some(format!("{kind}: n_{i} closed form {v}, oracle {got}")));
        }
        let alt = crosspolytope_valency_alt(m, d, i)?;
        if alt != v {
            return Ok(Some(format!("{kind}: n_{i} forms disagree ({v} vs {alt})")));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let r = verify_schemes_with(8, 5, Guard::Enforce, Strategy::Sequential).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn guard() {
        assert!(matches!(verify_schemes(13, 4), Err(SchemeError::Guard { .. })));
    }
}
