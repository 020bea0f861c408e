mod common;

use std::collections::BTreeMap;

use common::*;
use num_rational::BigRational;
use proptest::prelude::*;
use tiltcover::exactla::{q, Matrix};
use tiltcover::hh::hh_dim;
use tiltcover::quiver::{finite_cover_from_monodromy, is_galois_quiver_covering, named, FiniteGroup, Quiver};
use tiltcover::rep::{decompose, ext1_dim, hom_dim, is_indecomposable, is_isomorphic, Rep};

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, cols), rows)
}

/// A Kronecker module of dimension `(m, n)` with small integer entries.
fn kronecker_rep() -> impl Strategy<Value = (usize, usize, Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    (0usize..=2, 0usize..=3).prop_flat_map(|(m, n)| (Just(m), Just(n), small_matrix(m, n), small_matrix(m, n)))
}

fn a3_rep() -> impl Strategy<Value = ([usize; 3], Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    (0usize..=2, 0usize..=2, 0usize..=2)
        .prop_flat_map(|(x, y, z)| (Just([x, y, z]), small_matrix(x, y), small_matrix(y, z)))
}

/// Acyclic quivers on two to five vertices, arrows `i -> j` with `i < j`.
fn acyclic_quiver() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (2usize..=5).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        (Just(n), prop::collection::vec(prop::sample::select(pairs), n - 1..=6))
    })
}

/// Number of paths from `s` to `t` in an acyclic quiver.
fn path_count(n: usize, edges: &[(usize, usize)], s: usize, t: usize) -> usize {
    let mut count = vec![0usize; n];
    count[s] = 1;
    for v in s..n {
        for &(a, b) in edges {
            if a == v {
                count[b] += count[v];
            }
        }
    }
    count[t]
}

fn components(n: usize, edges: &[(usize, usize)]) -> usize {
    (0..n)
        .filter(|&v| {
            let mut seen = vec![false; n];
            let mut stack = vec![v];
            seen[v] = true;
            while let Some(x) = stack.pop() {
                for &(a, b) in edges {
                    for (p, r) in [(a, b), (b, a)] {
                        if p == x && !seen[r] {
                            seen[r] = true;
                            stack.push(r);
                        }
                    }
                }
            }
            (0..v).all(|u| !seen[u])
        })
        .count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_matches_textbook_elimination(m in small_matrix(4, 5)) {
        let a = Matrix::from_i64(4, 5, &m);
        let dense: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        prop_assert_eq!(a.rank(), rank(dense));
        let ker = a.kernel_basis();
        prop_assert_eq!(ker.cols() + a.rank(), 5);
        prop_assert!(a.mul(&ker).is_zero());
    }

    #[test]
    fn kronecker_hom_ext_euler((m, n, a, b) in kronecker_rep(), (m2, n2, a2, b2) in kronecker_rep()) {
        let k = path_algebra(&named::kronecker());
        let x = Rep::new(&k, vec![m, n], vec![Matrix::from_i64(m, n, &a), Matrix::from_i64(m, n, &b)]).unwrap();
        let y = Rep::new(&k, vec![m2, n2], vec![Matrix::from_i64(m2, n2, &a2), Matrix::from_i64(m2, n2, &b2)]).unwrap();
        let h = hom_dim(&x, &y).unwrap();
        prop_assert_eq!(h, hom_oracle(&x, &y));
        let e = ext1_dim(&x, &y).unwrap();
        prop_assert_eq!(h as i64 - e as i64, euler(k.quiver(), x.dims(), y.dims()));
    }

    #[test]
    fn decomposition_is_faithful((d, a, b) in a3_rep()) {
        let alg = path_algebra(&named::linear_a(3));
        let x = Rep::new(&alg, d.to_vec(), vec![Matrix::from_i64(d[0], d[1], &a), Matrix::from_i64(d[1], d[2], &b)]).unwrap();
        let parts = decompose(&x).unwrap().summands;
        let mut total = [0usize; 3];
        for p in &parts {
            prop_assert!(is_indecomposable(p).unwrap());
            // indecomposables of A_3 are intervals
            let supp: Vec<usize> = (0..3).filter(|&v| p.dims()[v] > 0).collect();
            prop_assert!(p.dims().iter().all(|&c| c <= 1));
            prop_assert_eq!(supp.len(), supp[supp.len() - 1] - supp[0] + 1);
            for v in 0..3 {
                total[v] += p.dims()[v];
            }
        }
        prop_assert_eq!(&total[..], x.dims());
        prop_assert!(is_isomorphic(&Rep::direct_sum(&alg, &parts), &x).unwrap());
    }

    #[test]
    fn hh1_of_path_algebras((n, edges) in acyclic_quiver()) {
        prop_assume!(components(n, &edges) == 1);
        let qv = Quiver::from_indices(n, &edges).unwrap();
        let got = hh_dim(&path_algebra(&qv), 1, 400).unwrap();
        let parallel: usize = edges.iter().map(|&(s, t)| path_count(n, &edges, s, t)).sum();
        prop_assert_eq!(got as i64, 1 - n as i64 + parallel as i64);
        prop_assert_eq!(got == 0, tree_oracle(n, &edges));
    }

    #[test]
    fn finite_covers_are_galois(order in 1usize..=4, labels in prop::collection::vec(0usize..4, 2)) {
        let g = FiniteGroup::cyclic(order);
        let qv = named::kronecker();
        let w: BTreeMap<String, usize> =
            qv.arrows().iter().zip(&labels).map(|(a, &l)| (a.name.clone(), l % order)).collect();
        let c = finite_cover_from_monodromy(&qv, &g, &w).unwrap();
        prop_assert!(is_galois_quiver_covering(&c));
        prop_assert_eq!(c.total.num_vertices(), 2 * order);
        // the total quiver is connected exactly when the labels generate Z/order
        let gcd = |mut a: usize, mut b: usize| { while b != 0 { (a, b) = (b, a % b); } a };
        let diff = (labels[0] + order - labels[1] % order) % order;
        let conn = connected(c.total.num_vertices(), &quiver_edges(&c.total));
        prop_assert_eq!(conn, gcd(diff, order) == 1);
    }
}
