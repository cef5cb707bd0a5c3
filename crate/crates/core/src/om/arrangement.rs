//! Central hyperplane arrangements with exact rational normals.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::fm::strict_feasible_point;
use super::{OmError, Result, Sign, SignVector, ToposSystem};

/// Normal vectors `e_1, ..., e_t` of central hyperplanes `<e_i, x> = 0` in
/// `Q^dim`. No vector is zero and no two are linearly dependent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    vectors: Vec<Vec<BigRational>>,
}

impl Arrangement {
    pub fn new(vectors: Vec<Vec<BigRational>>) -> Result<Self> {
        let dim = vectors.first().map_or(0, Vec::len);
        Self::with_dim(dim, vectors)
    }

    pub fn with_dim(dim: usize, vectors: Vec<Vec<BigRational>>) -> Result<Self> {
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(OmError::Dimension { index: i + 1, expected: dim, found: v.len() });
            }
            if v.iter().all(Zero::is_zero) {
                return Err(OmError::ZeroVector(i + 1));
            }
        }
        for a in 0..vectors.len() {
            for b in a + 1..vectors.len() {
                if dependent(&vectors[a], &vectors[b]) {
                    return Err(OmError::Dependent(a + 1, b + 1));
                }
            }
        }
        Ok(Arrangement { dim, vectors })
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[Vec<BigRational>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Two nonzero vectors are dependent iff every 2x2 minor vanishes.
fn dependent(u: &[BigRational], v: &[BigRational]) -> bool {
    (0..u.len()).all(|i| (i + 1..u.len()).all(|j| (&u[i] * &v[j] - &u[j] * &v[i]).is_zero()))
}

/// Parses one vector per line; components are integers or `p/q`.
/// An optional first line `dim n` fixes the dimension; `#` starts a comment.
pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let mut dim = None;
    let mut vectors = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| OmError::ArrangementParse { line: lineno + 1, msg };
        if let Some(rest) = line.strip_prefix("dim") {
            if dim.is_some() || !vectors.is_empty() {
                return Err(err("'dim' header must come first".into()));
            }
            dim = Some(rest.trim().parse::<usize>().map_err(|_| err(format!("bad dimension {:?}", rest.trim())))?);
            continue;
        }
        let v = line
            .split_whitespace()
            .map(|tok| tok.parse::<BigRational>().map_err(|_| err(format!("bad component {tok:?}"))))
            .collect::<Result<Vec<_>>>()?;
        vectors.push(v);
    }
    match dim {
        Some(d) => Arrangement::with_dim(d, vectors),
        None => Arrangement::new(vectors),
    }
}

fn dot(sign: Sign, v: &[BigRational]) -> Vec<BigRational> {
    match sign {
        Sign::Plus => v.to_vec(),
        Sign::Minus => v.iter().map(|x| -x).collect(),
    }
}

/// Tope set of a central arrangement: all sign vectors `σ` for which the open
/// cone `{x : σ_i <e_i, x> > 0 for all i}` is nonempty over the rationals.
///
/// Sign vectors are grown one coordinate at a time and infeasible prefixes
/// are pruned. Each accepted cone's witness point is re-checked exactly.
pub fn from_central_arrangement(arr: &Arrangement) -> Result<ToposSystem> {
    let mut topes = Vec::new();
    let mut prefix = Vec::with_capacity(arr.len());
    let mut rows = Vec::with_capacity(arr.len());
    grow(arr, &mut prefix, &mut rows, &mut topes);
    ToposSystem::new(topes)
}

fn grow(
    arr: &Arrangement,
    prefix: &mut Vec<Sign>,
    rows: &mut Vec<Vec<BigRational>>,
    out: &mut Vec<SignVector>,
) {
    let i = prefix.len();
    if i == arr.len() {
        out.push(SignVector::new(prefix.clone()));
        return;
    }
    for sign in [Sign::Plus, Sign::Minus] {
        rows.push(dot(sign, &arr.vectors[i]));
        if let Some(x) = strict_feasible_point(rows, arr.dim) {
            assert!(
                rows.iter().all(|r| r.iter().zip(&x).fold(BigRational::zero(), |s, (a, b)| s + a * b).is_positive()),
                "Fourier-Motzkin witness fails its own system"
            );
            prefix.push(sign);
            grow(arr, prefix, rows, out);
            prefix.pop();
        }
        rows.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn topes_of(rows: &[&[i64]]) -> Vec<String> {
        let sys = from_central_arrangement(&Arrangement::from_integers(rows).unwrap()).unwrap();
        sys.topes().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn triangle() {
        assert_eq!(topes_of(&[&[1, 0], &[-1, 1], &[-1, -1]]), ["++-", "+-+", "+--", "-++", "-+-", "--+"]);
    }

    #[test]
    fn quadrants() {
        assert_eq!(topes_of(&[&[1, 0], &[0, 1]]), ["++", "+-", "-+", "--"]);
    }

    #[test]
    fn acyclic_three_lines() {
        let t = topes_of(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(t.len(), 6);
        assert!(t.contains(&"+++".to_string()));
    }

    #[test]
    fn validation() {
        assert_eq!(Arrangement::from_integers(&[&[1, 0], &[0, 0]]), Err(OmError::ZeroVector(2)));
        assert_eq!(Arrangement::from_integers(&[&[1, 2], &[-2, -4]]), Err(OmError::Dependent(1, 2)));
        assert!(matches!(
            Arrangement::from_integers(&[&[1, 2], &[1, 2, 3]]),
            Err(OmError::Dimension { index: 2, .. })
        ));
    }

    #[test]
    fn parsing() {
        let arr = parse_arrangement("# triangle\ndim 2\n1 0\n-1 1\n-1/2 -1/2\n").unwrap();
        assert_eq!(arr.dim(), 2);
        assert_eq!(arr.len(), 3);
        assert!(matches!(
            parse_arrangement("1 0\n1 x\n"),
            Err(OmError::ArrangementParse { line: 2, .. })
        ));
        assert!(matches!(parse_arrangement("dim 3\n1 0\n"), Err(OmError::Dimension { .. })));
    }

    #[test]
    fn three_space_generic_planes() {
        // four generic planes through the origin in R^3 cut 14 regions
        let t = topes_of(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        assert_eq!(t.len(), 14);
    }
}
