//! Independent oracles for the integration tests: plain Gaussian elimination,
//! the Euler form, interval modules and graph checks written from scratch.

#![allow(dead_code)]

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use tiltcover::algebra::BoundQuiverAlgebra;
use tiltcover::exactla::{q, Matrix};
use tiltcover::quiver::Quiver;
use tiltcover::rep::{Algebra, Rep};

pub fn path_algebra(q: &Quiver) -> Algebra {
    Arc::new(BoundQuiverAlgebra::path_algebra(q).unwrap())
}

/// Rank of a dense rational matrix by textbook elimination.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone() / pivot.clone();
                for j in c..cols {
                    let d = rows[r][j].clone() * f.clone();
                    rows[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim Hom(M, N)`: unknown matrices `f_v` with `M_a f_t = f_s N_a` for every
/// arrow `a: s -> t`.
pub fn hom_oracle(m: &Rep, n: &Rep) -> usize {
    let qv = m.algebra().quiver();
    let (dm, dn) = (m.dims(), n.dims());
    let mut offset = vec![0; qv.num_vertices()];
    let mut unknowns = 0;
    for v in 0..qv.num_vertices() {
        offset[v] = unknowns;
        unknowns += dm[v] * dn[v];
    }
    if unknowns == 0 {
        return 0;
    }
    let var = |v: usize, i: usize, j: usize| offset[v] + i * dn[v] + j;
    let mut rows = Vec::new();
    for (a, arr) in qv.arrows().iter().enumerate() {
        let (s, t) = (arr.source, arr.target);
        let (ma, na) = (m.map(a), n.map(a));
        for i in 0..dm[s] {
            for j in 0..dn[t] {
                let mut row = vec![BigRational::zero(); unknowns];
                for k in 0..dm[t] {
                    row[var(t, k, j)] += ma.get(i, k);
                }
                for k in 0..dn[s] {
                    row[var(s, i, k)] -= na.get(k, j);
                }
                rows.push(row);
            }
        }
    }
    unknowns - rank(rows)
}

/// Euler form of a path algebra on dimension vectors.
pub fn euler(qv: &Quiver, x: &[usize], y: &[usize]) -> i64 {
    let diag: i64 = x.iter().zip(y).map(|(a, b)| (a * b) as i64).sum();
    let arrows: i64 = qv.arrows().iter().map(|a| (x[a.source] * y[a.target]) as i64).sum();
    diag - arrows
}

/// `dim Ext¹(M, N)` over a path algebra from the oracle Hom and the Euler form.
pub fn ext_oracle(m: &Rep, n: &Rep) -> usize {
    let h = hom_oracle(m, n) as i64;
    let e = h - euler(m.algebra().quiver(), m.dims(), n.dims());
    assert!(e >= 0);
    e as usize
}

/// The interval module supported on `lo..=hi` over linear `A_n`, identity maps.
pub fn interval(alg: &Algebra, lo: usize, hi: usize) -> Rep {
    let n = alg.num_vertices();
    let dims: Vec<usize> = (0..n).map(|v| usize::from(lo <= v && v <= hi)).collect();
    let maps = (0..n - 1)
        .map(|a| if dims[a] == 1 && dims[a + 1] == 1 { Matrix::identity(1) } else { Matrix::zeros(dims[a], dims[a + 1]) })
        .collect();
    Rep::new(alg, dims, maps).unwrap()
}

/// Kronecker module with both maps given as `1 x 1` scalars, `a = x`, `b = y`.
pub fn kronecker_point(alg: &Algebra, x: i64, y: i64) -> Rep {
    Rep::new(alg, vec![1, 1], vec![Matrix::scalar(1, &q(x)), Matrix::scalar(1, &q(y))]).unwrap()
}

/// Preprojective Kronecker module of dimension `(n, n+1)`.
pub fn kronecker_preprojective(alg: &Algebra, n: usize) -> Rep {
    let a = Matrix::from_entries(n, n + 1, (0..n).map(|i| (i, i, q(1))));
    let b = Matrix::from_entries(n, n + 1, (0..n).map(|i| (i, i + 1, q(1))));
    Rep::new(alg, vec![n, n + 1], vec![a, b]).unwrap()
}

pub fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let root = find(&mut parent, 0);
    (0..n).all(|v| find(&mut parent, v) == root)
}

/// A connected graph is a tree iff it has one edge fewer than vertices.
pub fn tree_oracle(n: usize, edges: &[(usize, usize)]) -> bool {
    connected(n, edges) && edges.len() + 1 == n
}

pub fn quiver_edges(qv: &Quiver) -> Vec<(usize, usize)> {
    qv.arrows().iter().map(|a| (a.source, a.target)).collect()
}

pub fn one() -> BigRational {
    BigRational::one()
}
