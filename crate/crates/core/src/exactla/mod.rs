//! Exact linear algebra over the rationals.
//!
//! Elimination is fraction-free: rows are scaled to primitive integer rows and
//! combined by cross-multiplication, so intermediate values never carry
//! denominators. Pivot rows are chosen by minimal fill (fewest nonzeros) with
//! ties broken by row position, which makes every returned basis
//! deterministic.

mod matrix;
pub mod poly;

pub use matrix::{Matrix, Rref};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Scalar = BigRational;

/// Sparse vector as a column-sorted list of nonzero entries.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn q(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"3"`, `"-2/5"` or a JSON number given as text.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("cannot parse scalar `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Invalid("zero denominator".into()));
        }
        Ok(Scalar::new(n, d))
    } else if let Ok(n) = s.parse::<BigInt>() {
        Ok(Scalar::from_integer(n))
    } else {
        // decimal like 0.5
        let (ip, fp) = s.split_once('.').ok_or_else(bad)?;
        let neg = ip.starts_with('-');
        let digits = format!("{}{}", ip.trim_start_matches('-'), fp);
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), fp.len());
        let v = Scalar::new(n, d);
        Ok(if neg { -v } else { v })
    }
}

pub fn scalar_to_string(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

pub fn kernel_basis(m: &Matrix) -> Matrix {
    m.kernel_basis()
}

pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    m.solve(b)
}

/// Rank of a family of sparse vectors living in a space of dimension `dim`.
pub fn span_rank(dim: usize, vecs: &[SparseVec]) -> usize {
    Matrix::from_sparse_rows(dim, vecs.to_vec()).rank()
}

/// `a*x + b*y` on sparse vectors.
pub fn sv_lin_comb(a: &Scalar, x: &[(usize, Scalar)], b: &Scalar, y: &[(usize, Scalar)]) -> SparseVec {
    let mut acc: Vec<(usize, Scalar)> = x.iter().map(|(j, v)| (*j, a * v)).collect();
    acc.extend(y.iter().map(|(j, v)| (*j, b * v)));
    matrix::normalize_row(acc)
}

pub fn sv_normalize(v: Vec<(usize, Scalar)>) -> SparseVec {
    matrix::normalize_row(v)
}
