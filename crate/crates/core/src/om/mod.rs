//! Simple oriented matroids represented by their tope sets.
//!
//! Only the invariants visible at the level of topes are enforced: negation
//! closure, simplicity (no parallel or antiparallel ground-set elements) and
//! equal-size positive halfspaces. A tope file that passes validation is NOT
//! checked against the oriented-matroid axioms; callers either trust the file
//! or build the system from a central arrangement, which is realizable by
//! construction.

mod arrangement;
mod fm;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use thiserror::Error;

pub use arrangement::{from_central_arrangement, parse_arrangement, Arrangement};
pub use fm::strict_feasible_point;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OmError {
    #[error("line {line}: invalid character {ch:?} (expected '+' or '-')")]
    InvalidChar { line: usize, ch: char },
    #[error("line {line}: tope has length {found}, expected {expected}")]
    Ragged { line: usize, expected: usize, found: usize },
    #[error("no topes given")]
    Empty,
    #[error("duplicate tope {0}")]
    Duplicate(SignVector),
    #[error("not negation-closed: {tope} is present but its opposite {opposite} is not")]
    NotNegationClosed { tope: SignVector, opposite: SignVector },
    #[error("columns {0} and {1} are parallel")]
    Parallel(usize, usize),
    #[error("columns {0} and {1} are antiparallel")]
    Antiparallel(usize, usize),
    #[error("positive halfspace of element {element} has {found} topes, expected {expected}")]
    Halfspace { element: usize, found: usize, expected: usize },
    #[error("element index {index} out of range 1..={t}")]
    IndexOutOfRange { index: usize, t: usize },
    #[error("{0} is not a tope of this system")]
    NotATope(SignVector),
    #[error("empty vote")]
    EmptyVote,
    #[error("arrangement line {line}: {msg}")]
    ArrangementParse { line: usize, msg: String },
    #[error("arrangement vector {0} is zero")]
    ZeroVector(usize),
    #[error("arrangement vectors {0} and {1} are linearly dependent")]
    Dependent(usize, usize),
    #[error("arrangement vector {index} has dimension {found}, expected {expected}")]
    Dimension { index: usize, expected: usize, found: usize },
}

pub type Result<T, E = OmError> = std::result::Result<T, E>;

/// A sign. `Plus` sorts before `Minus`, which fixes the canonical tope order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' | '\u{2212}' => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A full sign vector in `{-, +}^t`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignVector(signs)
    }

    pub fn all_plus(t: usize) -> Self {
        SignVector(vec![Sign::Plus; t])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    /// Sign at zero-based position `i`.
    pub fn at(&self, i: usize) -> Sign {
        self.0[i]
    }

    pub fn opposite(&self) -> SignVector {
        SignVector(self.0.iter().map(|&s| -s).collect())
    }
}

/// Componentwise negation.
pub fn opposite(v: &SignVector) -> SignVector {
    v.opposite()
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = OmError;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| Sign::from_char(c).ok_or(OmError::InvalidChar { line: 1, ch: c }))
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }
}

/// Ground-set size plus a validated, canonically ordered tope set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToposSystem {
    t: usize,
    topes: Vec<SignVector>,
}

impl ToposSystem {
    /// Validates and canonically orders `topes`.
    pub fn new(topes: Vec<SignVector>) -> Result<Self> {
        let t = topes.first().ok_or(OmError::Empty)?.len();
        if t == 0 {
            return Err(OmError::Empty);
        }
        for (i, v) in topes.iter().enumerate() {
            if v.len() != t {
                return Err(OmError::Ragged { line: i + 1, expected: t, found: v.len() });
            }
        }
        let mut set = BTreeSet::new();
        for v in &topes {
            if !set.insert(v.clone()) {
                return Err(OmError::Duplicate(v.clone()));
            }
        }
        for v in &set {
            let o = v.opposite();
            if !set.contains(&o) {
                return Err(OmError::NotNegationClosed { tope: v.clone(), opposite: o });
            }
        }
        let topes: Vec<SignVector> = set.into_iter().collect();
        for a in 0..t {
            for b in a + 1..t {
                if topes.iter().all(|v| v.at(a) == v.at(b)) {
                    return Err(OmError::Parallel(a + 1, b + 1));
                }
                if topes.iter().all(|v| v.at(a) != v.at(b)) {
                    return Err(OmError::Antiparallel(a + 1, b + 1));
                }
            }
        }
        let sys = ToposSystem { t, topes };
        for e in 1..=t {
            let found = sys.halfspace_indices(e).count();
            if 2 * found != sys.topes.len() {
                return Err(OmError::Halfspace { element: e, found, expected: sys.topes.len() / 2 });
            }
        }
        Ok(sys)
    }

    /// Ground-set size.
    pub fn t(&self) -> usize {
        self.t
    }

    /// Topes in canonical order (lexicographic, `+` before `-`).
    pub fn topes(&self) -> &[SignVector] {
        &self.topes
    }

    pub fn len(&self) -> usize {
        self.topes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.topes.is_empty()
    }

    /// Canonical position of `v`.
    pub fn index_of(&self, v: &SignVector) -> Option<usize> {
        self.topes.binary_search(v).ok()
    }

    fn halfspace_indices(&self, e: usize) -> impl Iterator<Item = usize> + '_ {
        self.topes.iter().enumerate().filter(move |(_, v)| v.at(e - 1) == Sign::Plus).map(|(i, _)| i)
    }

    /// The topes with `+` at the one-based element `e`.
    pub fn positive_halfspace(&self, e: usize) -> Result<Vec<SignVector>> {
        if e == 0 || e > self.t {
            return Err(OmError::IndexOutOfRange { index: e, t: self.t });
        }
        Ok(self.halfspace_indices(e).map(|i| self.topes[i].clone()).collect())
    }

    /// True iff the all-plus sign vector is a tope.
    pub fn is_acyclic(&self) -> bool {
        self.index_of(&SignVector::all_plus(self.t)).is_some()
    }

    /// One tope per line in canonical order.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for v in &self.topes {
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }
}

/// Parses a tope file: one tope per line over `+`/`-`, `#` starts a comment.
pub fn parse_topes(text: &str) -> Result<ToposSystem> {
    let mut topes = Vec::new();
    let mut width = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let v = line
            .chars()
            .map(|c| Sign::from_char(c).ok_or(OmError::InvalidChar { line: lineno + 1, ch: c }))
            .collect::<Result<Vec<_>>>()?;
        match width {
            None => width = Some(v.len()),
            Some(w) if w != v.len() => {
                return Err(OmError::Ragged { line: lineno + 1, expected: w, found: v.len() })
            }
            _ => {}
        }
        topes.push(SignVector(v));
    }
    ToposSystem::new(topes)
}

/// Outcome of a majority vote over committee members' signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    /// Fewer than half the votes are `+`.
    A,
    /// More than half the votes are `+`.
    B,
    Tie,
}

/// Committee decision rule over the signs reported by each member.
pub fn classify_vote(signs: &[Sign]) -> Result<Class> {
    if signs.is_empty() {
        return Err(OmError::EmptyVote);
    }
    let plus = signs.iter().filter(|&&s| s == Sign::Plus).count();
    Ok(match (2 * plus).cmp(&signs.len()) {
        std::cmp::Ordering::Less => Class::A,
        std::cmp::Ordering::Greater => Class::B,
        std::cmp::Ordering::Equal => Class::Tie,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    const TRIANGLE: &str = "++-\n+-+\n-++\n--+\n-+-\n+--\n";

    #[test]
    fn parse_triangle() {
        let sys = parse_topes(TRIANGLE).unwrap();
        assert_eq!(sys.t(), 3);
        assert_eq!(sys.len(), 6);
        let order: Vec<String> = sys.topes().iter().map(ToString::to_string).collect();
        assert_eq!(order, ["++-", "+-+", "+--", "-++", "-+-", "--+"]);
        assert!(!sys.is_acyclic());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_topes("++\n--\n"), Err(OmError::Parallel(1, 2)));
        assert!(matches!(parse_topes("++\n+-\n"), Err(OmError::NotNegationClosed { .. })));
        assert!(matches!(parse_topes("+-\n-+\n"), Err(OmError::Antiparallel(1, 2))));
        assert_eq!(
            parse_topes("++-\n+-\n"),
            Err(OmError::Ragged { line: 2, expected: 3, found: 2 })
        );
        assert_eq!(parse_topes("+x\n"), Err(OmError::InvalidChar { line: 1, ch: 'x' }));
        assert!(matches!(parse_topes("++\n--\n++\n"), Err(OmError::Duplicate(_))));
        assert_eq!(parse_topes("# nothing\n\n"), Err(OmError::Empty));
    }

    #[test]
    fn comments_and_unicode_minus() {
        let sys = parse_topes("# quadrants\n++ # first\n+\u{2212}\n-+\n--\n").unwrap();
        assert_eq!(sys.len(), 4);
        assert!(sys.is_acyclic());
    }

    #[test]
    fn halfspaces() {
        let sys = parse_topes(TRIANGLE).unwrap();
        let h1 = sys.positive_halfspace(1).unwrap();
        assert_eq!(h1, vec![sv("++-"), sv("+-+"), sv("+--")]);
        for e in 1..=3 {
            assert_eq!(sys.positive_halfspace(e).unwrap().len(), sys.len() / 2);
        }
        assert!(sys.positive_halfspace(0).is_err());
        assert!(sys.positive_halfspace(4).is_err());
        let quad = parse_topes("++\n+-\n-+\n--\n").unwrap();
        assert_eq!(quad.positive_halfspace(2).unwrap(), vec![sv("++"), sv("-+")]);
    }

    #[test]
    fn opposites() {
        assert_eq!(opposite(&sv("++-")), sv("--+"));
        let v = sv("+-+-");
        assert_eq!(opposite(&opposite(&v)), v);
        let sys = parse_topes(TRIANGLE).unwrap();
        assert!(sys.topes().iter().all(|v| sys.index_of(&v.opposite()).is_some()));
    }

    #[test]
    fn votes() {
        use Sign::*;
        assert_eq!(classify_vote(&[Plus, Minus, Minus]).unwrap(), Class::A);
        assert_eq!(classify_vote(&[Plus, Plus, Minus]).unwrap(), Class::B);
        assert_eq!(classify_vote(&[Plus, Minus]).unwrap(), Class::Tie);
        assert_eq!(classify_vote(&[]), Err(OmError::EmptyVote));
    }

    #[test]
    fn serialize_round_trip() {
        let sys = parse_topes(TRIANGLE).unwrap();
        assert_eq!(parse_topes(&sys.serialize()).unwrap(), sys);
    }
}
