//! Exact rational linear algebra over arbitrary-precision integers.
//!
//! Everything downstream (chamber enumeration, axiom checks, scheme
//! construction) runs on these primitives; there is no floating point
//! anywhere in the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Scalar of the ambient space, always kept in lowest terms with a
/// positive denominator (`BigRational` normalizes on construction).
pub type Rational = BigRational;

/// Arbitrary-precision integer.
pub type Int = BigInt;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ExactError {
    #[error("basis is linearly dependent")]
    SingularBasis,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// An element of the dual space `V*`, in coordinates of the standard dual
/// basis. Points of `V` are carried by the same representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Covector {
    coords: Vec<Rational>,
}

impl Covector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Covector { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Covector::new(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Covector::new(vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Pairing with a point of `V` (given in the standard basis).
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(self.coords.len(), point.len());
        self.coords
            .iter()
            .zip(point)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn neg(&self) -> Covector {
        Covector::new(self.coords.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Covector) -> Covector {
        assert_eq!(self.dim(), other.dim());
        Covector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Covector {
        Covector::new(self.coords.iter().map(|x| x * c).collect())
    }

    /// True iff `other = c * self` for some scalar `c != 0`.
    pub fn is_parallel(&self, other: &Covector) -> bool {
        assert_eq!(self.dim(), other.dim());
        if self.is_zero() || other.is_zero() {
            return false;
        }
        let k = self.coords.iter().position(|c| !c.is_zero()).unwrap();
        if other.coords[k].is_zero() {
            return false;
        }
        let c = &other.coords[k] / &self.coords[k];
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| &(a * &c) == b)
    }

    /// True iff all coordinates are integers.
    pub fn is_integral(&self) -> bool {
        is_integer_vector(&self.coords)
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// Square matrix with exact rational entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareMatrix {
    dim: usize,
    rows: Vec<Vec<Rational>>,
}

impl SquareMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim));
        SquareMatrix { dim, rows }
    }

    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        SquareMatrix { dim, rows }
    }

    /// Columns are the given covectors.
    pub fn from_columns(cols: &[Covector]) -> Self {
        let dim = cols.len();
        assert!(cols.iter().all(|c| c.dim() == dim));
        let rows = (0..dim)
            .map(|i| cols.iter().map(|c| c.coords()[i].clone()).collect())
            .collect();
        SquareMatrix { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> Covector {
        Covector::new(self.rows.iter().map(|r| r[j].clone()).collect())
    }

    pub fn mul(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, other.dim);
        let rows = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        (0..self.dim)
                            .map(|k| &self.rows[i][k] * &other.rows[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        SquareMatrix {
            dim: self.dim,
            rows,
        }
    }

    pub fn apply(&self, v: &Covector) -> Covector {
        assert_eq!(self.dim, v.dim());
        Covector::new(
            self.rows
                .iter()
                .map(|row| row.iter().zip(v.coords()).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    pub fn is_identity(&self) -> bool {
        *self == SquareMatrix::identity(self.dim)
    }

    pub fn determinant(&self) -> Rational {
        // fraction-free would be faster; plain elimination is fine at this scale
        let mut m = self.rows.clone();
        let n = self.dim;
        let mut det = Rational::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !m[r][col].is_zero()) {
                Some(p) => p,
                None => return Rational::zero(),
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            let p = m[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = &m[r][col] / &p;
                for c in col..n {
                    let sub = &f * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<SquareMatrix, ExactError> {
        let n = self.dim;
        // augmented [self | I], reduced to [I | inverse]
        let mut m: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..n).map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }));
                r
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(ExactError::SingularBasis)?;
            m.swap(pivot, col);
            let p = m[col][col].clone();
            for c in 0..2 * n {
                m[col][c] /= p.clone();
            }
            for r in 0..n {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].clone();
                for c in 0..2 * n {
                    let sub = &f * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
        Ok(SquareMatrix::from_rows(
            m.into_iter().map(|row| row[n..].to_vec()).collect(),
        ))
    }

    /// All entries integral.
    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(|e| e.is_integer())
    }
}

/// Coefficients `c` with `sum c_i * basis_i = target`, solved by exact
/// Gaussian elimination with first-nonzero pivoting.
pub fn solve_linear(basis: &[Covector], target: &Covector) -> Result<Vec<Rational>, ExactError> {
    let r = target.dim();
    if basis.len() != r {
        return Err(ExactError::DimensionMismatch {
            expected: r,
            got: basis.len(),
        });
    }
    // coordinate j of the combination: sum_i c_i * basis_i[j] = target[j]
    let mut m: Vec<Vec<Rational>> = (0..r)
        .map(|j| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b.coords()[j].clone()).collect();
            row.push(target.coords()[j].clone());
            row
        })
        .collect();
    for col in 0..r {
        let pivot = (col..r)
            .find(|&i| !m[i][col].is_zero())
            .ok_or(ExactError::SingularBasis)?;
        m.swap(pivot, col);
        let p = m[col][col].clone();
        for c in col..=r {
            m[col][c] /= p.clone();
        }
        for i in 0..r {
            if i == col || m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            for c in col..=r {
                let sub = &f * &m[col][c];
                m[i][c] -= sub;
            }
        }
    }
    Ok(m.into_iter().map(|row| row[r].clone()).collect())
}

/// Vectors `v_j` in `V` with `basis_i(v_j) = delta_ij`, i.e. the columns
/// of the inverse of the matrix whose rows are the basis covectors.
pub fn dual_basis(basis: &[Covector]) -> Result<Vec<Covector>, ExactError> {
    let r = basis.len();
    for b in basis {
        if b.dim() != r {
            return Err(ExactError::DimensionMismatch {
                expected: r,
                got: b.dim(),
            });
        }
    }
    let m = SquareMatrix::from_rows(basis.iter().map(|b| b.coords().to_vec()).collect());
    let inv = m.inverse()?;
    Ok((0..r).map(|j| inv.column(j)).collect())
}

pub fn is_integer_vector(coeffs: &[Rational]) -> bool {
    coeffs.iter().all(|c| c.is_integer())
}

/// Uniform-sign test used by the positive-cone lemma checks: all entries
/// `>= 0` or all entries `<= 0`.
pub fn uniform_sign(coeffs: &[Rational]) -> bool {
    let has_pos = coeffs.iter().any(|c| c.is_positive());
    let has_neg = coeffs.iter().any(|c| c.is_negative());
    !(has_pos && has_neg)
}

pub fn are_independent(vectors: &[Covector]) -> bool {
    if vectors.is_empty() {
        return true;
    }
    let dim = vectors[0].dim();
    if vectors.len() > dim {
        return false;
    }
    // row-reduce and count pivots
    let mut m: Vec<Vec<Rational>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    let mut rank = 0;
    for col in 0..dim {
        if rank == m.len() {
            break;
        }
        let pivot = match (rank..m.len()).find(|&i| !m[i][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        m.swap(pivot, rank);
        let p = m[rank][col].clone();
        for i in rank + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &p;
            for c in col..dim {
                let sub = &f * &m[rank][c];
                m[i][c] -= sub;
            }
        }
        rank += 1;
    }
    rank == vectors.len()
}
