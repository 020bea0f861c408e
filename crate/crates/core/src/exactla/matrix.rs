use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Scalar, SparseVec};

/// Sparse matrix over the rationals. Rows are stored as column-sorted lists
/// of nonzero entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} ", self.rows, self.cols)?;
        f.debug_list()
            .entries(self.to_dense().iter().map(|r| {
                r.iter().map(|x| x.to_string()).collect::<Vec<_>>()
            }))
            .finish()
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Scalar::one())
    }

    pub fn scalar(n: usize, c: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for i in 0..n {
                m.data[i].push((i, c.clone()));
            }
        }
        m
    }

    /// Builds from dense rows. All rows must have length `cols`.
    pub fn from_dense(rows: usize, cols: usize, dense: &[Vec<Scalar>]) -> Self {
        assert_eq!(dense.len(), rows, "row count mismatch");
        let data = dense
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "column count mismatch");
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        Matrix { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, dense: &[Vec<i64>]) -> Self {
        let d: Vec<Vec<Scalar>> = dense
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_integer(x.into())).collect())
            .collect();
        Self::from_dense(rows, cols, &d)
    }

    /// Builds from `(row, col, value)` triples; duplicate positions are summed.
    pub fn from_entries<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut tmp: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (i, j, v) in entries {
            assert!(i < rows && j < cols, "entry ({i},{j}) out of bounds {rows}x{cols}");
            tmp[i].push((j, v));
        }
        let data = tmp.into_iter().map(normalize_row).collect();
        Matrix { rows, cols, data }
    }

    /// Builds from sparse rows (entries need not be sorted).
    pub fn from_sparse_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        let n = rows.len();
        let data: Vec<SparseVec> = rows
            .into_iter()
            .map(|r| {
                for (j, _) in &r {
                    assert!(*j < cols, "column {j} out of bounds {cols}");
                }
                normalize_row(r)
            })
            .collect();
        Matrix { rows: n, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[(usize, Scalar)] {
        &self.data[i]
    }

    pub fn row_dense(&self, i: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.cols];
        for (j, v) in &self.data[i] {
            out[*j] = v.clone();
        }
        out
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row_dense(i)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r {
                data[*j].push((i, v.clone()));
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut acc: Vec<(usize, Scalar)> = Vec::new();
                for (k, a) in r {
                    for (j, b) in &other.data[*k] {
                        acc.push((*j, a * b));
                    }
                }
                normalize_row(acc)
            })
            .collect();
        Matrix { rows: self.rows, cols: other.cols, data }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = Vec::new();
        for (k, a) in v {
            for (j, b) in &self.data[*k] {
                acc.push((*j, a * b));
            }
        }
        normalize_row(acc)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.lin_comb(&Scalar::one(), other, &Scalar::one())
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.lin_comb(&Scalar::one(), other, &-Scalar::one())
    }

    /// `a*self + b*other`.
    pub fn lin_comb(&self, a: &Scalar, other: &Matrix, b: &Scalar) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in sum");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| {
                let mut acc: Vec<(usize, Scalar)> =
                    x.iter().map(|(j, v)| (*j, a * v)).collect();
                acc.extend(y.iter().map(|(j, v)| (*j, b * v)));
                normalize_row(acc)
            })
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|r| r.iter().map(|(j, v)| (*j, v * c)).collect())
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let off = self.cols;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| {
                let mut r = x.clone();
                r.extend(y.iter().map(|(j, v)| (j + off, v.clone())));
                r
            })
            .collect();
        Matrix { rows: self.rows, cols: self.cols + other.cols, data }
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn vstack_all(cols: usize, parts: &[Matrix]) -> Matrix {
        let mut out = Matrix::zeros(0, cols);
        for p in parts {
            out = out.vstack(p);
        }
        out
    }

    pub fn block_diag(parts: &[Matrix]) -> Matrix {
        let rows: usize = parts.iter().map(|p| p.rows).sum();
        let cols: usize = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for p in parts {
            out.set_block(ro, co, p);
            ro += p.rows;
            co += p.cols;
        }
        out
    }

    /// Overwrites (adds into an empty region of) the block starting at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "block out of bounds");
        for (i, r) in b.data.iter().enumerate() {
            let row = &mut self.data[r0 + i];
            row.retain(|(j, _)| *j < c0 || *j >= c0 + b.cols);
            row.extend(r.iter().map(|(j, v)| (j + c0, v.clone())));
            row.sort_by_key(|(j, _)| *j);
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let data = (r0..r0 + rows)
            .map(|i| {
                self.data[i]
                    .iter()
                    .filter(|(j, _)| *j >= c0 && *j < c0 + cols)
                    .map(|(j, v)| (j - c0, v.clone()))
                    .collect()
            })
            .collect();
        Matrix { rows, cols, data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let data = idx.iter().map(|&i| self.data[i].clone()).collect();
        Matrix { rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        self.transpose().select_rows(idx).transpose()
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn pow(&self, k: usize) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Row-major flattening into a sparse vector of length rows*cols.
    pub fn flatten(&self) -> SparseVec {
        self.entries().map(|(i, j, v)| (i * self.cols + j, v.clone())).collect()
    }

    pub fn unflatten(rows: usize, cols: usize, v: &[(usize, Scalar)]) -> Matrix {
        Matrix::from_entries(rows, cols, v.iter().map(|(k, x)| (k / cols.max(1), k % cols.max(1), x.clone())))
    }

    // ---- elimination-based queries -------------------------------------

    pub fn rank(&self) -> usize {
        forward_eliminate(&self.data, self.cols, self.cols).len()
    }

    /// Reduced row echelon form (pivots normalised to one).
    pub fn rref(&self) -> Rref {
        rref_rows(&self.data, self.cols, self.cols)
    }

    /// Columns form a basis of the right null space `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Matrix {
        let r = self.rref();
        let pivot_cols: Vec<usize> = r.pivots.clone();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivot_cols {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !is_pivot[*c]).collect();
        let mut entries = Vec::new();
        for (k, &f) in free.iter().enumerate() {
            entries.push((f, k, Scalar::one()));
            for (ri, row) in r.rows.iter().enumerate() {
                if let Ok(pos) = row.binary_search_by_key(&f, |(c, _)| *c) {
                    entries.push((pivot_cols[ri], k, -row[pos].1.clone()));
                }
            }
        }
        Matrix::from_entries(self.cols, free.len(), entries)
    }

    /// Rows form a basis of the left null space `{y : y * self = 0}`.
    pub fn left_kernel_basis(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// Rows form a basis of the row space, in reduced echelon form.
    pub fn row_space_basis(&self) -> Matrix {
        let r = self.rref();
        Matrix::from_sparse_rows(self.cols, r.rows)
    }

    /// Some `x` with `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let rhs = Matrix::from_dense(self.rows, 1, &b.iter().map(|x| vec![x.clone()]).collect::<Vec<_>>());
        self.solve_matrix(&rhs).map(|x| x.to_dense().into_iter().map(|r| r[0].clone()).collect())
    }

    /// Some `X` with `self * X = b`.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(b.rows, self.rows, "right-hand side shape mismatch");
        let aug = self.hstack(b);
        let r = rref_rows(&aug.data, aug.cols, self.cols);
        if r.pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut entries = Vec::new();
        for (row, &p) in r.rows.iter().zip(&r.pivots) {
            for (c, v) in row {
                if *c >= self.cols {
                    entries.push((p, c - self.cols, v.clone()));
                }
            }
        }
        Some(Matrix::from_entries(self.cols, b.cols, entries))
    }

    /// Some `X` with `X * self = b`.
    pub fn solve_left(&self, b: &Matrix) -> Option<Matrix> {
        self.transpose().solve_matrix(&b.transpose()).map(|x| x.transpose())
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        self.solve_matrix(&Matrix::identity(self.rows))
    }

    /// Characteristic polynomial `det(x I - self)`, coefficients from the
    /// constant term upwards (monic).
    pub fn char_poly(&self) -> Vec<Scalar> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        // Faddeev–LeVerrier; exact in characteristic zero.
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            let am = self.mul(&m);
            m = am.add(&Matrix::scalar(n, &coeffs[n - k + 1]));
            let t = self.mul(&m).trace();
            coeffs[n - k] = -t / Scalar::from_integer(BigInt::from(k));
        }
        coeffs
    }

    /// Lexicographic key over dense entries; used for deterministic ordering.
    pub fn lex_key(&self) -> Vec<Scalar> {
        self.to_dense().into_iter().flatten().collect()
    }
}

/// Reduced echelon data: `rows[i]` has its leading one at column `pivots[i]`.
#[derive(Clone, Debug)]
pub struct Rref {
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseVec>,
}

pub(crate) fn normalize_row(mut r: Vec<(usize, Scalar)>) -> SparseVec {
    r.sort_by_key(|(j, _)| *j);
    let mut out: SparseVec = Vec::with_capacity(r.len());
    for (j, v) in r {
        match out.last_mut() {
            Some((lj, lv)) if *lj == j => *lv += v,
            _ => out.push((j, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

// ---- fraction-free integer elimination -----------------------------------

type IRow = Vec<(usize, BigInt)>;

fn to_int_row(r: &[(usize, Scalar)]) -> IRow {
    let mut l = BigInt::one();
    for (_, v) in r {
        l = l.lcm(v.denom());
    }
    let row: IRow = r
        .iter()
        .map(|(j, v)| (*j, v.numer() * (&l / v.denom())))
        .collect();
    primitive(row)
}

fn primitive(mut row: IRow) -> IRow {
    let mut g = BigInt::zero();
    for (_, v) in &row {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
    row
}

/// `ca*a - cb*b`, made primitive.
fn combine(a: &IRow, ca: &BigInt, b: &IRow, cb: &BigInt) -> IRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push((a[i].0, ca * &a[i].1));
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(cb * &b[j].1)));
            j += 1;
        } else {
            let v = ca * &a[i].1 - cb * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    primitive(out)
}

fn entry(row: &IRow, c: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&c, |(k, _)| *k).ok().map(|p| &row[p].1)
}

/// Forward elimination; pivots are only taken in columns `< limit`. Returns
/// pivot rows (in pivot order) with their pivot columns; rows whose leading
/// entry lies at or beyond `limit` are appended after, with pivot = leading
/// column.
fn forward_eliminate(rows: &[SparseVec], _cols: usize, limit: usize) -> Vec<(usize, IRow)> {
    let mut pending: Vec<IRow> = rows.iter().filter(|r| !r.is_empty()).map(|r| to_int_row(r)).collect();
    let mut done: Vec<(usize, IRow)> = Vec::new();
    loop {
        pending.retain(|r| !r.is_empty());
        if pending.is_empty() {
            break;
        }
        let col = pending.iter().map(|r| r[0].0).min().unwrap();
        if col >= limit {
            // remaining rows are eliminated in the tail columns as well, so
            // consistency checks can see them; keep echelon structure.
            let mut tail = pending;
            let mut out_tail = Vec::new();
            while !tail.is_empty() {
                tail.retain(|r| !r.is_empty());
                if tail.is_empty() {
                    break;
                }
                let c = tail.iter().map(|r| r[0].0).min().unwrap();
                let (pi, _) = tail
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| r[0].0 == c)
                    .min_by_key(|(i, r)| (r.len(), *i))
                    .unwrap();
                let piv = tail.swap_remove(pi);
                let pv = piv[0].1.clone();
                for r in tail.iter_mut() {
                    if r[0].0 == c {
                        let a = r[0].1.clone();
                        *r = combine(r, &pv, &piv, &a);
                    }
                }
                out_tail.push((c, piv));
            }
            done.extend(out_tail);
            break;
        }
        // minimal-fill pivot row; ties broken by position
        let (pi, _) = pending
            .iter()
            .enumerate()
            .filter(|(_, r)| r[0].0 == col)
            .min_by_key(|(i, r)| (r.len(), *i))
            .unwrap();
        let piv = pending.remove(pi);
        let pv = piv[0].1.clone();
        for r in pending.iter_mut() {
            if r[0].0 == col {
                let a = r[0].1.clone();
                *r = combine(r, &pv, &piv, &a);
            }
        }
        done.push((col, piv));
    }
    done
}

fn rref_rows(rows: &[SparseVec], cols: usize, limit: usize) -> Rref {
    let mut ech = forward_eliminate(rows, cols, limit);
    // back substitution
    for k in (0..ech.len()).rev() {
        let (pc, prow) = (ech[k].0, ech[k].1.clone());
        let pv = prow[0].1.clone();
        for i in 0..k {
            if let Some(a) = entry(&ech[i].1, pc).cloned() {
                let r = combine(&ech[i].1, &pv, &prow, &a);
                ech[i].1 = r;
            }
        }
    }
    let mut pivots = Vec::new();
    let mut out = Vec::new();
    for (c, row) in ech {
        let lead = entry(&row, c).cloned().expect("pivot entry present");
        let lead = Scalar::from_integer(lead);
        let r: SparseVec = row
            .into_iter()
            .map(|(j, v)| (j, Scalar::from_integer(v) / &lead))
            .collect();
        pivots.push(c);
        out.push(r);
    }
    // keep pivot rows (col < limit) first in column order, then the rest
    let mut idx: Vec<usize> = (0..pivots.len()).collect();
    idx.sort_by_key(|&i| (pivots[i] >= limit, pivots[i]));
    let pivots_sorted: Vec<usize> = idx.iter().map(|&i| pivots[i]).collect();
    let rows_sorted: Vec<SparseVec> = idx.iter().map(|&i| out[i].clone()).collect();
    // rows whose leading entry lies beyond `limit` keep their leading column
    // as pivot; `solve_matrix` treats them as inconsistent.
    Rref { pivots: pivots_sorted, rows: rows_sorted }
}

impl Matrix {
    /// Determinant of a square matrix (via char poly constant term).
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Scalar::one();
        }
        let cp = self.char_poly();
        if n % 2 == 0 {
            cp[0].clone()
        } else {
            -cp[0].clone()
        }
    }

    pub fn max_abs_height(&self) -> BigInt {
        let mut h = BigInt::zero();
        for (_, _, v) in self.entries() {
            let a = v.numer().abs().max(v.denom().abs());
            if a > h {
                h = a;
            }
        }
        h
    }
}
