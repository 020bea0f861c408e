use std::sync::Arc;

use super::enumerate::tits_form;
use super::*;
use crate::algebra::{squid, BoundQuiverAlgebra};
use crate::exactla::{q, Matrix};
use crate::quiver::named;

fn path_alg(qv: crate::quiver::Quiver) -> Algebra {
    Arc::new(BoundQuiverAlgebra::path_algebra(&qv).unwrap())
}

fn a2() -> Algebra {
    path_alg(named::linear_a(2))
}

fn kron() -> Algebra {
    path_alg(named::kronecker())
}

/// Euler form `<m, n> = Σ m_v n_v - Σ_a m_s n_t`, computed from dimension
/// vectors only.
fn euler(alg: &Algebra, m: &[usize], n: &[usize]) -> i64 {
    let d: i64 = m.iter().zip(n).map(|(a, b)| (a * b) as i64).sum();
    let e: i64 = alg.quiver().arrows().iter().map(|a| (m[a.source] * n[a.target]) as i64).sum();
    d - e
}

#[test]
fn projectives_of_a2() {
    let a = a2();
    assert_eq!(Rep::projective(&a, 0).dims(), &[1, 1]);
    assert_eq!(Rep::projective(&a, 1).dims(), &[0, 1]);
    assert!(is_isomorphic(&Rep::projective(&a, 1), &Rep::simple(&a, 1)).unwrap());
    let iso = path_alg(named::linear_a(1));
    assert_eq!(Rep::projective(&iso, 0).dims(), &[1]);
}

#[test]
fn projective_dims_match_algebra() {
    let s = Arc::new(squid(3, &[2, 1, 1], &[q(1)]).unwrap());
    let total: usize = (0..s.num_vertices()).map(|v| Rep::projective(&s, v).total_dim()).sum();
    assert_eq!(total, s.dim());
    for v in 0..s.num_vertices() {
        let p = Rep::projective(&s, v);
        // validated against the relations
        assert!(Rep::new(&s, p.dims().to_vec(), p.maps().to_vec()).is_ok());
    }
}

#[test]
fn hom_examples_a2() {
    let a = a2();
    let (p1, p2) = (Rep::projective(&a, 0), Rep::projective(&a, 1));
    assert_eq!(hom_dim(&p2, &p1).unwrap(), 1);
    assert_eq!(hom_dim(&p1, &p2).unwrap(), 0);
    assert!(hom_dim(&p1, &p1).unwrap() >= 1);
    for h in hom_basis(&p2, &p1).unwrap() {
        assert!(h.commutes());
    }
    let k = kron();
    assert_eq!(hom_dim(&p1, &Rep::simple(&k, 0)).unwrap_err(), Error::AlgebraMismatch);
}

#[test]
fn resolutions_and_ext() {
    let a = a2();
    let (s1, s2) = (Rep::simple(&a, 0), Rep::simple(&a, 1));
    let r = projective_resolution(&s1, 3).unwrap();
    assert_eq!(r.tops, vec![vec![0], vec![1]]);
    assert_eq!(r.length(), 1);
    assert_eq!(pd_at_most(&s1, 2), Some(1));
    assert_eq!(pd_at_most(&Rep::projective(&a, 0), 2), Some(0));
    assert_eq!(ext1_dim(&s1, &s2).unwrap(), 1);
    assert_eq!(ext1_dim(&s2, &s1).unwrap(), 0);
    let k = kron();
    assert_eq!(ext1_dim(&Rep::simple(&k, 0), &Rep::simple(&k, 1)).unwrap(), 2);
    assert_eq!(ext1_dim(&Rep::simple(&k, 1), &Rep::simple(&k, 0)).unwrap(), 0);
    assert_eq!(ext1_dim(&Rep::projective(&k, 0), &Rep::simple(&k, 1)).unwrap(), 0);
}

#[test]
fn squid_source_simple_resolution() {
    let s = Arc::new(squid(2, &[1, 1], &[]).unwrap());
    let x = s.quiver().vertex_index("x").unwrap();
    let pd = pd_at_most(&Rep::simple(&s, x), 4).unwrap();
    assert!(pd <= 2);
    for v in 0..s.num_vertices() {
        assert!(pd_at_most(&Rep::simple(&s, v), 4).unwrap() <= 2);
    }
}

#[test]
fn resolution_cap_error() {
    let a = path_alg(named::linear_a(3));
    assert_eq!(projective_resolution(&Rep::simple(&a, 0), 0).unwrap_err(), Error::ResolutionCap(0));
}

#[test]
fn indecomposability() {
    let a = a2();
    assert!(is_indecomposable(&Rep::simple(&a, 0)).unwrap());
    let sum = Rep::direct_sum(&a, &[Rep::simple(&a, 0), Rep::simple(&a, 1)]);
    assert!(!is_indecomposable(&sum).unwrap());
    let k = kron();
    let r = Rep::new(&k, vec![1, 1], vec![Matrix::from_i64(1, 1, &[vec![1]]), Matrix::from_i64(1, 1, &[vec![0]])]).unwrap();
    assert!(is_indecomposable(&r).unwrap());
}

#[test]
fn non_split_endomorphisms_are_reported() {
    // Kronecker rep with End = Q(i): a = I, b = rotation by 90 degrees
    let k = kron();
    let r = Rep::new(
        &k,
        vec![2, 2],
        vec![Matrix::identity(2), Matrix::from_i64(2, 2, &[vec![0, -1], vec![1, 0]])],
    )
    .unwrap();
    assert_eq!(is_indecomposable(&r).unwrap_err(), Error::NonSplitEndomorphism(2));
}

#[test]
fn decomposition_examples() {
    let a = a2();
    let p1 = Rep::projective(&a, 0);
    let d = decompose(&p1.power(2)).unwrap();
    let g = d.grouped().unwrap();
    assert_eq!(g.len(), 1);
    assert_eq!(g[0].1, 2);
    let reg = decompose(&Rep::regular(&a)).unwrap();
    assert_eq!(reg.summands.len(), 2);
    assert!(reg.iso_from_sum(&Rep::regular(&a)).is_iso());
    let dims: Vec<Vec<usize>> = reg.summands.iter().map(|s| s.dims().to_vec()).collect();
    assert!(dims.contains(&vec![1, 1]) && dims.contains(&vec![0, 1]));
}

#[test]
fn isomorphism_examples() {
    let a = a2();
    let (s1, s2) = (Rep::simple(&a, 0), Rep::simple(&a, 1));
    assert!(is_isomorphic(&s1, &s1).unwrap());
    assert!(!is_isomorphic(&s1, &s2).unwrap());
    let k = kron();
    let p1 = Rep::projective(&k, 0);
    let b = vec![Matrix::identity(1), Matrix::from_i64(2, 2, &[vec![0, 1], vec![1, 0]])];
    let (p1b, iso) = p1.base_change(&b).unwrap();
    assert!(iso.commutes());
    let w = isomorphism(&p1b, &p1).unwrap().unwrap();
    assert!(w.is_iso() && w.commutes());
    // decomposable case: S ⊕ P1 against a permuted copy
    let m = Rep::direct_sum(&k, &[Rep::simple(&k, 1), p1.clone()]);
    let n = Rep::direct_sum(&k, &[p1, Rep::simple(&k, 1)]);
    let w = isomorphism(&m, &n).unwrap().unwrap();
    assert!(w.is_iso() && w.commutes());
}

#[test]
fn trace_examples() {
    let a = a2();
    let (p1, p2) = (Rep::projective(&a, 0), Rep::projective(&a, 1));
    let (t, _) = trace_in(&p2, &p1).unwrap();
    assert_eq!(t.dims(), &[0, 1]);
    let (t, _) = trace_in(&p1, &p1).unwrap();
    assert_eq!(t.dims(), p1.dims());
    let (t, _) = trace_in(&Rep::simple(&a, 0), &Rep::simple(&a, 1)).unwrap();
    assert!(t.is_zero());
}

#[test]
fn enumeration_counts() {
    let r = enumerate_indecomposables(&a2(), 2, EnumerationMode::Strict).unwrap();
    assert_eq!(r.reps.len(), 3);
    for n in 1..=4 {
        let a = path_alg(named::linear_a(n));
        let r = enumerate_indecomposables(&a, n, EnumerationMode::Strict).unwrap();
        assert_eq!(r.reps.len(), n * (n + 1) / 2);
    }
    // D4 with a subspace orientation: 12 positive roots, maximal root total 5
    let d4 = path_alg(crate::quiver::Quiver::from_indices(4, &[(1, 0), (2, 0), (3, 0)]).unwrap());
    let r = enumerate_indecomposables(&d4, 5, EnumerationMode::Strict).unwrap();
    assert_eq!(r.reps.len(), 12);
    assert!(matches!(
        enumerate_indecomposables(&kron(), 2, EnumerationMode::Strict),
        Err(Error::InfiniteFamily(d)) if d == vec![1, 1]
    ));
    let s = Arc::new(squid(2, &[1, 1], &[]).unwrap());
    assert_eq!(enumerate_indecomposables(&s, 2, EnumerationMode::Strict).unwrap_err(), Error::NotHereditary);
}

#[test]
fn euler_form_identity() {
    for alg in [a2(), path_alg(named::linear_a(3)), kron()] {
        let r = enumerate_indecomposables(&alg, 4, EnumerationMode::Sample).unwrap();
        for m in &r.reps {
            for n in &r.reps {
                let lhs = hom_dim(m, n).unwrap() as i64 - ext1_dim(m, n).unwrap() as i64;
                assert_eq!(lhs, euler(&alg, m.dims(), n.dims()));
            }
            assert_eq!(tits_form(&alg, m.dims()), euler(&alg, m.dims(), m.dims()));
        }
    }
}

#[test]
fn kronecker_sampled_families() {
    let r = enumerate_indecomposables(&kron(), 4, EnumerationMode::Sample).unwrap();
    assert_eq!(r.families, vec![vec![1, 1], vec![2, 2]]);
    let dims: Vec<Vec<usize>> = r.reps.iter().map(|x| x.dims().to_vec()).collect();
    for d in [vec![1, 0], vec![0, 1], vec![1, 2], vec![2, 1], vec![1, 1]] {
        assert!(dims.contains(&d), "missing {d:?}");
    }
    for x in &r.reps {
        assert_eq!(decompose(x).unwrap().summands.len(), 1);
    }
}

#[test]
fn extension_middle_terms() {
    let a = a2();
    let (s1, s2) = (Rep::simple(&a, 0), Rep::simple(&a, 1));
    let ext = ext1_basis(&s1, &s2).unwrap();
    assert_eq!(ext.dim(), 1);
    let (e, i, p) = hom::extension_middle(&ext, &ext.cocycles[0]).unwrap();
    assert!(is_isomorphic(&e, &Rep::projective(&a, 0)).unwrap());
    assert!(i.is_injective() && p.is_surjective() && i.then(&p).is_zero());
}

#[test]
fn relations_are_enforced() {
    let s = Arc::new(squid(2, &[1, 1], &[]).unwrap());
    let qv = s.quiver();
    let mut maps: Vec<Matrix> = qv.arrows().iter().map(|_| Matrix::identity(1)).collect();
    // all ones violates a1*b1 = 0
    assert_eq!(Rep::new(&s, vec![1; 4], maps.clone()).unwrap_err(), Error::RelationViolated);
    maps[qv.arrow_index("a1").unwrap()] = Matrix::zeros(1, 1);
    maps[qv.arrow_index("b2").unwrap()] = Matrix::zeros(1, 1);
    assert!(Rep::new(&s, vec![1; 4], maps).is_ok());
}

#[test]
fn json_round_trip() {
    let k = kron();
    let p = Rep::projective(&k, 0);
    let back = Rep::from_json(&k, &p.to_json()).unwrap();
    assert_eq!(back, p);
    let raw = serde_json::json!({"dims": {"1": 1, "2": 1}, "maps": {"a": [["1/2"]], "b": [[0]]}});
    let r = Rep::from_json(&k, &raw).unwrap();
    assert_eq!(r.map(0).get(0, 0), crate::exactla::qf(1, 2));
}
