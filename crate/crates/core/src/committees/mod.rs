//! Tope committees: subsets `K` of topes with `|K ∩ T_e+| > |K|/2` for every
//! ground-set element `e`.
//!
//! Subsets are `u64` bitmasks over the canonical tope order, so systems with
//! more than 64 topes are rejected outright. Exhaustive sweeps are guarded:
//! a single layer may hold at most [`LAYER_LIMIT`] candidate subsets and a
//! whole family at most `2^`[`FAMILY_MAX_TOPES`], unless the caller passes
//! [`Guard::Override`].

mod verify;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exec::{map_range, map_slice, Guard, Strategy};
use crate::farey::Fraction;
use crate::om::{Sign, SignVector, ToposSystem};

pub use verify::{verify_prop8, verify_prop8_with, verify_thm9, verify_thm9_with};

/// Most candidate subsets a single layer enumeration visits without override.
pub const LAYER_LIMIT: u128 = 100_000_000;
/// Largest tope count for which whole-family enumeration runs without override.
pub const FAMILY_MAX_TOPES: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CommitteeError {
    #[error("committee subsets must be nonempty")]
    Empty,
    #[error("{0} is not a tope of the system")]
    NotATope(SignVector),
    #[error("{0} listed twice")]
    Repeated(SignVector),
    #[error("systems with {0} topes exceed the 64-tope bitmask representation")]
    TooManyTopes(usize),
    #[error("resource guard: {what} needs {needed} subsets, limit {limit} (use an override)")]
    Guard { what: String, needed: u128, limit: u128 },
    #[error("layer {k} out of range 1..={max}")]
    LayerOutOfRange { k: usize, max: usize },
    #[error("element index {index} out of range 1..={t}")]
    IndexOutOfRange { index: usize, t: usize },
    #[error("subset {0} is not a committee")]
    NotACommittee(String),
    #[error("{0} already belongs to the committee")]
    AlreadyMember(SignVector),
    #[error("committees overlap in {0}")]
    Overlap(SignVector),
}

pub type Result<T, E = CommitteeError> = std::result::Result<T, E>;

/// Precomputed bitmasks of a tope system: positive halfspaces and opposites.
#[derive(Clone, Debug)]
pub struct Halfspaces {
    size: usize,
    positive: Vec<u64>,
    opposite: Vec<usize>,
}

impl Halfspaces {
    pub fn new(sys: &ToposSystem) -> Result<Self> {
        let size = sys.len();
        if size > 64 {
            return Err(CommitteeError::TooManyTopes(size));
        }
        let positive = (0..sys.t())
            .map(|e| {
                sys.topes()
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| v.at(e) == Sign::Plus)
                    .fold(0u64, |m, (i, _)| m | 1 << i)
            })
            .collect();
        let opposite = sys
            .topes()
            .iter()
            .map(|v| sys.index_of(&v.opposite()).expect("tope systems are negation-closed"))
            .collect();
        Ok(Halfspaces { size, positive, opposite })
    }

    /// Number of topes.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Mask of all topes.
    pub fn full(&self) -> u64 {
        if self.size == 64 {
            u64::MAX
        } else {
            (1u64 << self.size) - 1
        }
    }

    /// `|K ∩ T_e+|` for every element, zero-based.
    pub fn counts(&self, mask: u64) -> Vec<usize> {
        self.positive.iter().map(|h| (mask & h).count_ones() as usize).collect()
    }

    /// Strict majority in every positive halfspace.
    pub fn is_committee(&self, mask: u64) -> bool {
        let k = mask.count_ones();
        k > 0 && self.positive.iter().all(|h| 2 * (mask & h).count_ones() > k)
    }

    /// At least `ceil((k+1)/2)` members in every positive halfspace.
    pub fn is_committee_threshold(&self, mask: u64) -> bool {
        let k = mask.count_ones();
        let threshold = (k + 2) / 2;
        k > 0 && self.positive.iter().all(|h| (mask & h).count_ones() >= threshold)
    }

    /// True iff the subset holds some pair `{T, -T}`.
    pub fn has_opposite_pair(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            if mask & (1 << self.opposite[i]) != 0 {
                return true;
            }
            rest &= rest - 1;
        }
        false
    }

    pub fn opposite_index(&self, i: usize) -> usize {
        self.opposite[i]
    }
}

/// A committee: members (canonical tope indices, ascending) with their
/// halfspace counts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Committee {
    mask: u64,
    counts: Vec<usize>,
}

impl Committee {
    fn from_mask(hs: &Halfspaces, mask: u64) -> Self {
        Committee { mask, counts: hs.counts(mask) }
    }

    /// Validates `topes` as a committee of `sys`.
    pub fn from_topes(sys: &ToposSystem, topes: &[SignVector]) -> Result<Self> {
        let hs = Halfspaces::new(sys)?;
        let mask = subset_mask(sys, topes)?;
        if !hs.is_committee(mask) {
            return Err(CommitteeError::NotACommittee(render_mask(sys, mask)));
        }
        Ok(Self::from_mask(&hs, mask))
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn size(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// `|K ∩ T_e+|` for zero-based `e`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Canonical indices of the members, ascending.
    pub fn members(&self) -> Vec<usize> {
        mask_indices(self.mask).collect()
    }

    pub fn topes<'a>(&self, sys: &'a ToposSystem) -> Vec<&'a SignVector> {
        mask_indices(self.mask).map(|i| &sys.topes()[i]).collect()
    }

    pub fn contains_opposites(&self, sys: &ToposSystem) -> bool {
        Halfspaces::new(sys).map(|hs| hs.has_opposite_pair(self.mask)).unwrap_or(false)
    }

    /// Members as comma-joined tope strings, e.g. `++-,+-+,-++`.
    pub fn render(&self, sys: &ToposSystem) -> String {
        render_mask(sys, self.mask)
    }
}

fn mask_indices(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        (rest != 0).then(|| {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            i
        })
    })
}

fn render_mask(sys: &ToposSystem, mask: u64) -> String {
    mask_indices(mask).map(|i| sys.topes()[i].to_string()).collect::<Vec<_>>().join(",")
}

fn subset_mask(sys: &ToposSystem, topes: &[SignVector]) -> Result<u64> {
    if sys.len() > 64 {
        return Err(CommitteeError::TooManyTopes(sys.len()));
    }
    if topes.is_empty() {
        return Err(CommitteeError::Empty);
    }
    let mut mask = 0u64;
    for v in topes {
        let i = sys.index_of(v).ok_or_else(|| CommitteeError::NotATope(v.clone()))?;
        if mask & (1 << i) != 0 {
            return Err(CommitteeError::Repeated(v.clone()));
        }
        mask |= 1 << i;
    }
    Ok(mask)
}

/// `|K ∩ T_e+| > |K|/2` for every element `e`.
pub fn is_committee(sys: &ToposSystem, topes: &[SignVector]) -> Result<bool> {
    let mask = subset_mask(sys, topes)?;
    Ok(Halfspaces::new(sys)?.is_committee(mask))
}

/// `|K ∩ T_e+| >= ceil((|K|+1)/2)` for every element `e`; always agrees with
/// [`is_committee`].
pub fn is_committee_threshold(sys: &ToposSystem, topes: &[SignVector]) -> Result<bool> {
    let mask = subset_mask(sys, topes)?;
    Ok(Halfspaces::new(sys)?.is_committee_threshold(mask))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Calls `f` on every `k`-subset of `0..n` whose smallest element is `first`,
/// in lexicographic order.
fn for_each_with_first(n: usize, k: usize, first: usize, mut f: impl FnMut(u64)) {
    debug_assert!(k >= 1 && first + k <= n);
    let mut idx: Vec<usize> = (first..first + k).collect();
    loop {
        f(idx.iter().fold(0u64, |m, &i| m | 1 << i));
        // advance positions 1..k; position 0 stays at `first`
        let mut p = k;
        loop {
            if p <= 1 {
                return;
            }
            p -= 1;
            if idx[p] < n - k + p {
                break;
            }
        }
        idx[p] += 1;
        for q in p + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// All `k`-subsets of `0..n` accepted by `keep`, in lexicographic order.
/// Work is split by smallest element; chunks are concatenated in order.
pub(crate) fn layer_masks(
    n: usize,
    k: usize,
    strategy: Strategy,
    keep: impl Fn(u64) -> bool + Sync + Send,
) -> Vec<u64> {
    if k == 0 || k > n {
        return Vec::new();
    }
    map_range(strategy, 0..(n - k + 1), |first| {
        let mut out = Vec::new();
        for_each_with_first(n, k, first, |m| {
            if keep(m) {
                out.push(m);
            }
        });
        out
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Committees of size `k`, optionally restricted to subsets without opposite
/// pairs, in lexicographic order of their canonical member lists.
pub fn enumerate_layer(sys: &ToposSystem, k: usize, no_opposites: bool) -> Result<Vec<Committee>> {
    enumerate_layer_with(sys, k, no_opposites, Guard::Enforce, Strategy::default())
}

pub fn enumerate_layer_with(
    sys: &ToposSystem,
    k: usize,
    no_opposites: bool,
    guard: Guard,
    strategy: Strategy,
) -> Result<Vec<Committee>> {
    let hs = Halfspaces::new(sys)?;
    let n = hs.size();
    if k == 0 || k > n {
        return Err(CommitteeError::LayerOutOfRange { k, max: n });
    }
    let needed = binomial(n, k);
    if guard.enforced() && needed > LAYER_LIMIT {
        return Err(CommitteeError::Guard { what: format!("layer {k}"), needed, limit: LAYER_LIMIT });
    }
    Ok(layer_masks(n, k, strategy, |m| {
        hs.is_committee(m) && !(no_opposites && hs.has_opposite_pair(m))
    })
    .into_iter()
    .map(|m| Committee::from_mask(&hs, m))
    .collect())
}

/// Which committees a family holds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct FamilyFlags {
    pub minimal: bool,
    pub no_opposites: bool,
}

/// Committees grouped by size. Every size `1..=|T|` has an entry, possibly
/// empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommitteeFamily {
    flags: FamilyFlags,
    layers: BTreeMap<usize, Vec<Committee>>,
}

impl CommitteeFamily {
    pub fn flags(&self) -> FamilyFlags {
        self.flags
    }

    pub fn layers(&self) -> &BTreeMap<usize, Vec<Committee>> {
        &self.layers
    }

    pub fn layer(&self, k: usize) -> &[Committee] {
        self.layers.get(&k).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Committee> {
        self.layers.values().flatten()
    }

    pub fn total(&self) -> usize {
        self.layers.values().map(Vec::len).sum()
    }

    /// Sizes of the nonempty layers, ascending.
    pub fn nonempty_layers(&self) -> Vec<usize> {
        self.layers.iter().filter(|(_, v)| !v.is_empty()).map(|(&k, _)| k).collect()
    }

    /// The smallest nonempty layer.
    pub fn minimum(&self) -> &[Committee] {
        self.layers.values().find(|v| !v.is_empty()).map_or(&[], Vec::as_slice)
    }
}

fn family_guard(n: usize, guard: Guard) -> Result<()> {
    if guard.enforced() && n > FAMILY_MAX_TOPES {
        return Err(CommitteeError::Guard {
            what: "whole family".into(),
            needed: 1u128 << n,
            limit: 1u128 << FAMILY_MAX_TOPES,
        });
    }
    Ok(())
}

/// Every committee, layer by layer.
pub fn enumerate_all(sys: &ToposSystem, no_opposites: bool) -> Result<CommitteeFamily> {
    enumerate_all_with(sys, no_opposites, Guard::Enforce, Strategy::default())
}

pub fn enumerate_all_with(
    sys: &ToposSystem,
    no_opposites: bool,
    guard: Guard,
    strategy: Strategy,
) -> Result<CommitteeFamily> {
    let n = sys.len();
    family_guard(n, guard)?;
    let mut layers = BTreeMap::new();
    for k in 1..=n {
        layers.insert(k, enumerate_layer_with(sys, k, no_opposites, Guard::Override, strategy)?);
    }
    Ok(CommitteeFamily { flags: FamilyFlags { minimal: false, no_opposites }, layers })
}

/// Inclusion-minimal committees.
pub fn minimal_committees(sys: &ToposSystem) -> Result<CommitteeFamily> {
    minimal_committees_with(sys, Guard::Enforce, Strategy::default())
}

pub fn minimal_committees_with(
    sys: &ToposSystem,
    guard: Guard,
    strategy: Strategy,
) -> Result<CommitteeFamily> {
    let all = enumerate_all_with(sys, false, guard, strategy)?;
    let masks: Vec<u64> = all.iter().map(Committee::mask).collect();
    // members of `all` are ordered by size, so strict subsets come first
    let keep = map_range(strategy, 0..masks.len(), |i| {
        let m = masks[i];
        masks[..i].iter().all(|&s| s & m != s || s == m)
    });
    let mut layers: BTreeMap<usize, Vec<Committee>> =
        all.layers.keys().map(|&k| (k, Vec::new())).collect();
    for (c, keep) in all.iter().zip(keep) {
        if keep {
            layers.get_mut(&c.size()).expect("layer exists").push(c.clone());
        }
    }
    Ok(CommitteeFamily { flags: FamilyFlags { minimal: true, no_opposites: false }, layers })
}

/// Reduced `|K ∩ T_e+| / |K|` for the one-based element `e`.
pub fn fraction_signature(sys: &ToposSystem, k: &Committee, e: usize) -> Result<Fraction> {
    if e == 0 || e > sys.t() {
        return Err(CommitteeError::IndexOutOfRange { index: e, t: sys.t() });
    }
    let (count, size) = (k.counts[e - 1], k.size());
    if 2 * count <= size {
        return Err(CommitteeError::NotACommittee(k.render(sys)));
    }
    Ok(Fraction::reduce(count as u64, size as u64).expect("count <= size"))
}

/// `K ∪ {T, -T}` for a tope `T` with neither `T` nor `-T` in `K`.
pub fn augment_with_opposite_pair(sys: &ToposSystem, k: &Committee, t: &SignVector) -> Result<Committee> {
    let hs = Halfspaces::new(sys)?;
    let i = sys.index_of(t).ok_or_else(|| CommitteeError::NotATope(t.clone()))?;
    let j = hs.opposite_index(i);
    for idx in [i, j] {
        if k.mask & (1 << idx) != 0 {
            return Err(CommitteeError::AlreadyMember(sys.topes()[idx].clone()));
        }
    }
    let mask = k.mask | 1 << i | 1 << j;
    if !hs.is_committee(mask) {
        return Err(CommitteeError::NotACommittee(render_mask(sys, mask)));
    }
    Ok(Committee::from_mask(&hs, mask))
}

/// Union of two disjoint committees.
pub fn union_committees(sys: &ToposSystem, a: &Committee, b: &Committee) -> Result<Committee> {
    let hs = Halfspaces::new(sys)?;
    let overlap = a.mask & b.mask;
    if overlap != 0 {
        let i = overlap.trailing_zeros() as usize;
        return Err(CommitteeError::Overlap(sys.topes()[i].clone()));
    }
    let mask = a.mask | b.mask;
    if !hs.is_committee(mask) {
        return Err(CommitteeError::NotACommittee(render_mask(sys, mask)));
    }
    Ok(Committee::from_mask(&hs, mask))
}

impl fmt::Display for Committee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = mask_indices(self.mask).map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", members.join(","))
    }
}

/// Masks `0..2^n` satisfying `keep`, ascending numerically.
pub(crate) fn all_masks(n: usize, strategy: Strategy, keep: impl Fn(u64) -> bool + Sync + Send) -> Vec<u64> {
    const CHUNK_BITS: usize = 10;
    if n <= CHUNK_BITS {
        return (1..(1u64 << n)).filter(|&m| keep(m)).collect();
    }
    let chunks: Vec<u64> = (0..(1u64 << (n - CHUNK_BITS))).collect();
    map_slice(strategy, &chunks, |&c| {
        let base = c << CHUNK_BITS;
        (0..(1u64 << CHUNK_BITS)).map(|low| base | low).filter(|&m| m != 0 && keep(m)).collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::om::parse_topes;

    const TRIANGLE: &str = "++-\n+-+\n-++\n--+\n-+-\n+--\n";

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    fn svs(list: &[&str]) -> Vec<SignVector> {
        list.iter().map(|s| sv(s)).collect()
    }

    #[test]
    fn combinations_are_lexicographic() {
        let masks = layer_masks(5, 3, Strategy::Sequential, |_| true);
        assert_eq!(masks.len(), 10);
        let lists: Vec<Vec<usize>> = masks.iter().map(|&m| mask_indices(m).collect()).collect();
        let mut sorted = lists.clone();
        sorted.sort();
        assert_eq!(lists, sorted);
        assert_eq!(lists[0], vec![0, 1, 2]);
        assert_eq!(lists[9], vec![2, 3, 4]);
        assert_eq!(layer_masks(4, 1, Strategy::Sequential, |_| true), vec![1, 2, 4, 8]);
        assert_eq!(layer_masks(4, 4, Strategy::Sequential, |_| true), vec![15]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
        assert_eq!(binomial(3, 4), 0);
    }

    #[test]
    fn committee_predicates() {
        let sys = parse_topes(TRIANGLE).unwrap();
        let k = svs(&["++-", "+-+", "-++"]);
        assert!(is_committee(&sys, &k).unwrap());
        assert!(is_committee_threshold(&sys, &k).unwrap());
        let bad = svs(&["++-", "+-+", "+--"]);
        assert!(!is_committee(&sys, &bad).unwrap());
        assert!(!is_committee_threshold(&sys, &bad).unwrap());
        assert_eq!(is_committee(&sys, &[]), Err(CommitteeError::Empty));
        assert!(matches!(is_committee(&sys, &svs(&["+++"])), Err(CommitteeError::NotATope(_))));
        let quad = parse_topes("++\n+-\n-+\n--\n").unwrap();
        assert!(is_committee(&quad, &svs(&["++"])).unwrap());
    }

    #[test]
    fn even_tie_is_not_a_committee() {
        let quad = parse_topes("++\n+-\n-+\n--\n").unwrap();
        let hs = Halfspaces::new(&quad).unwrap();
        // {++, +-}: element 2 has exactly half
        let m = 0b11;
        assert_eq!(hs.counts(m), vec![2, 1]);
        assert!(!hs.is_committee(m));
        assert!(!hs.is_committee_threshold(m));
    }

    #[test]
    fn triangle_layers() {
        let sys = parse_topes(TRIANGLE).unwrap();
        let l3 = enumerate_layer(&sys, 3, false).unwrap();
        assert_eq!(l3.len(), 1);
        assert_eq!(l3[0].render(&sys), "++-,+-+,-++");
        assert!(enumerate_layer(&sys, 2, false).unwrap().is_empty());
        assert!(enumerate_layer(&sys, 4, true).unwrap().is_empty());
        assert!(matches!(enumerate_layer(&sys, 0, false), Err(CommitteeError::LayerOutOfRange { .. })));
        assert!(matches!(enumerate_layer(&sys, 7, false), Err(CommitteeError::LayerOutOfRange { .. })));
    }

    #[test]
    fn triangle_family() {
        let sys = parse_topes(TRIANGLE).unwrap();
        let fam = enumerate_all(&sys, false).unwrap();
        assert_eq!(fam.total(), 1);
        assert_eq!(fam.nonempty_layers(), vec![3]);
        assert_eq!(fam.layers().len(), 6);
        let min = minimal_committees(&sys).unwrap();
        assert_eq!(min.total(), 1);
        assert_eq!(min.minimum().len(), 1);
        assert_eq!(min.minimum()[0].size(), 3);
    }

    #[test]
    fn acyclic_has_singleton_committee() {
        let quad = parse_topes("++\n+-\n-+\n--\n").unwrap();
        let fam = enumerate_all(&quad, false).unwrap();
        assert_eq!(fam.layer(1).len(), 1);
        assert_eq!(fam.layer(1)[0].render(&quad), "++");
    }

    #[test]
    fn signatures() {
        let sys = parse_topes(TRIANGLE).unwrap();
        let k = Committee::from_topes(&sys, &svs(&["++-", "+-+", "-++"])).unwrap();
        for e in 1..=3 {
            assert_eq!(fraction_signature(&sys, &k, e).unwrap().to_string(), "2/3");
        }
        assert!(fraction_signature(&sys, &k, 4).is_err());
        let quad = parse_topes("++\n+-\n-+\n--\n").unwrap();
        let one = Committee::from_topes(&quad, &svs(&["++"])).unwrap();
        assert_eq!(fraction_signature(&quad, &one, 2).unwrap(), Fraction::ONE);
    }

    #[test]
    fn triangle_committee_admits_no_opposite_pair() {
        let sys = parse_topes(TRIANGLE).unwrap();
        let k = Committee::from_topes(&sys, &svs(&["++-", "+-+", "-++"])).unwrap();
        for t in sys.topes() {
            assert!(matches!(
                augment_with_opposite_pair(&sys, &k, t),
                Err(CommitteeError::AlreadyMember(_))
            ));
        }
    }

    #[test]
    fn union_rejects_overlap() {
        let sys = parse_topes(TRIANGLE).unwrap();
        let k = Committee::from_topes(&sys, &svs(&["++-", "+-+", "-++"])).unwrap();
        assert!(matches!(union_committees(&sys, &k, &k), Err(CommitteeError::Overlap(_))));
    }

    #[test]
    fn guards() {
        // 26 generic lines would be needed for a real instance; fake the size check
        assert!(family_guard(25, Guard::Enforce).is_err());
        assert!(family_guard(25, Guard::Override).is_ok());
        assert!(family_guard(24, Guard::Enforce).is_ok());
    }
}
