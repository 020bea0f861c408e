use super::{same_algebra, Rep, RepMorphism};
use crate::error::{Error, Result};
use crate::exactla::{q, Matrix, Scalar, SparseVec};

fn offsets(m: &Rep, n: &Rep) -> (Vec<usize>, usize) {
    let mut off = Vec::with_capacity(m.dims.len());
    let mut total = 0;
    for v in 0..m.dims.len() {
        off.push(total);
        total += m.dims[v] * n.dims[v];
    }
    (off, total)
}

/// The commuting-square system whose kernel is `Hom(M, N)`.
fn hom_system(m: &Rep, n: &Rep) -> (Matrix, Vec<usize>, usize) {
    let (off, total) = offsets(m, n);
    let quiver = m.alg.quiver();
    let mut rows: Vec<SparseVec> = Vec::new();
    for (k, a) in quiver.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ms, nt) = (m.dims[s], n.dims[t]);
        if ms == 0 || nt == 0 {
            continue;
        }
        let ma = &m.maps[k];
        let na = &n.maps[k];
        let nts = n.dims[s];
        // (M_a f_t - f_s N_a)[i][j]
        let mut eq: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); ms * nt];
        for (i, kk, c) in ma.entries() {
            for j in 0..nt {
                eq[i * nt + j].push((off[t] + kk * nt + j, c.clone()));
            }
        }
        for (kk, j, c) in na.entries() {
            for i in 0..ms {
                eq[i * nt + j].push((off[s] + i * nts + kk, -c.clone()));
            }
        }
        rows.extend(eq.into_iter().map(crate::exactla::sv_normalize).filter(|r| !r.is_empty()));
    }
    (Matrix::from_sparse_rows(total, rows), off, total)
}

fn morphism_from_vec(m: &Rep, n: &Rep, off: &[usize], v: &[(usize, Scalar)]) -> RepMorphism {
    let nv = m.dims.len();
    let mut entries: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); nv];
    for (idx, c) in v {
        let w = (0..nv).rev().find(|&w| off[w] <= *idx && m.dims[w] * n.dims[w] > 0).expect("index in range");
        let local = idx - off[w];
        entries[w].push((local / n.dims[w], local % n.dims[w], c.clone()));
    }
    let mats = entries
        .into_iter()
        .enumerate()
        .map(|(w, e)| Matrix::from_entries(m.dims[w], n.dims[w], e))
        .collect();
    RepMorphism::new_unchecked(m, n, mats)
}

/// Basis of `Hom(M, N)`, in the order given by the kernel of the commuting
/// system.
pub fn hom_basis(m: &Rep, n: &Rep) -> Result<Vec<RepMorphism>> {
    if !same_algebra(&m.alg, &n.alg) {
        return Err(Error::AlgebraMismatch);
    }
    let (sys, off, _) = hom_system(m, n);
    let k = sys.kernel_basis().transpose();
    Ok((0..k.rows()).map(|i| morphism_from_vec(m, n, &off, k.row(i))).collect())
}

pub fn hom_dim(m: &Rep, n: &Rep) -> Result<usize> {
    if !same_algebra(&m.alg, &n.alg) {
        return Err(Error::AlgebraMismatch);
    }
    let (sys, _, total) = hom_system(m, n);
    Ok(total - sys.rank())
}

/// Projective cover `P -> M`. `P` is `⊕ P_v` over generators of the top,
/// listed by vertex; the second component lists those vertices.
pub fn projective_cover(m: &Rep) -> (Rep, RepMorphism, Vec<usize>) {
    let alg = m.alg.clone();
    let rad = m.radical_spaces();
    let mut parts = Vec::new();
    let mut maps = Vec::new();
    let mut tops = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        let rr = r.rref();
        let mut is_piv = vec![false; m.dims[v]];
        for &p in &rr.pivots {
            is_piv[p] = true;
        }
        for c in (0..m.dims[v]).filter(|&c| !is_piv[c]) {
            let e = Matrix::from_entries(1, m.dims[v], [(0, c, q(1))]);
            let y = m.yoneda(v, &e);
            parts.push(y.source.clone());
            maps.push(y);
            tops.push(v);
        }
    }
    let p = Rep::direct_sum(&alg, &parts);
    let pi = RepMorphism::row(&p, m, &maps);
    (p, pi, tops)
}

/// Minimal projective resolution `P_k -> ... -> P_0 -> M`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub terms: Vec<Rep>,
    /// `maps[0]: P_0 -> M`, `maps[i]: P_i -> P_{i-1}`.
    pub maps: Vec<RepMorphism>,
    /// Vertices of the indecomposable summands of each term.
    pub tops: Vec<Vec<usize>>,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.terms.iter().rposition(|t| !t.is_zero()).unwrap_or(0)
    }
}

pub fn projective_resolution(m: &Rep, cap: usize) -> Result<Resolution> {
    let mut terms = Vec::new();
    let mut maps = Vec::new();
    let mut tops = Vec::new();
    let mut cur = m.clone();
    let mut incl = m.identity();
    loop {
        let (p, pi, top) = projective_cover(&cur);
        maps.push(pi.then(&incl));
        terms.push(p);
        tops.push(top);
        let (k, k_incl) = pi.kernel();
        if k.is_zero() {
            break;
        }
        if terms.len() > cap {
            return Err(Error::ResolutionCap(cap));
        }
        cur = k;
        incl = k_incl;
    }
    Ok(Resolution { terms, maps, tops })
}

/// Projective dimension when at most `cap`.
pub fn pd_at_most(m: &Rep, cap: usize) -> Option<usize> {
    projective_resolution(m, cap).ok().map(|r| r.length())
}

/// `Ext^1(M, N)` computed from `0 -> Ω -> P_0 -> M -> 0`; classes are
/// represented by morphisms `Ω -> N` modulo restrictions of maps `P_0 -> N`.
#[derive(Clone, Debug)]
pub struct Ext1Basis {
    pub p0: Rep,
    pub d0: RepMorphism,
    pub omega: Rep,
    pub iota: RepMorphism,
    /// Restrictions `iota . g` spanning the coboundaries.
    pub coboundaries: Vec<RepMorphism>,
    /// Cocycles completing the coboundaries to a basis of `Hom(Ω, N)`.
    pub cocycles: Vec<RepMorphism>,
}

impl Ext1Basis {
    pub fn dim(&self) -> usize {
        self.cocycles.len()
    }

    /// Coordinates of the class of `c: Ω -> N` in the cocycle basis.
    pub fn coords(&self, c: &RepMorphism) -> Vec<Scalar> {
        let len = c.flat_len();
        let mut rows: Vec<SparseVec> = self.cocycles.iter().map(RepMorphism::flatten).collect();
        rows.extend(self.coboundaries.iter().map(RepMorphism::flatten));
        if rows.is_empty() {
            return Vec::new();
        }
        let a = Matrix::from_sparse_rows(len, rows).transpose();
        let rhs: Vec<Scalar> = {
            let mut d = vec![q(0); len];
            for (j, v) in c.flatten() {
                d[j] = v;
            }
            d
        };
        let x = a.solve(&rhs).expect("every morphism from Ω is a cocycle");
        x[..self.cocycles.len()].to_vec()
    }
}

pub fn ext1_basis(m: &Rep, n: &Rep) -> Result<Ext1Basis> {
    if !same_algebra(&m.alg, &n.alg) {
        return Err(Error::AlgebraMismatch);
    }
    let (p0, d0, _) = projective_cover(m);
    let (omega, iota) = d0.kernel();
    let coboundaries: Vec<RepMorphism> = hom_basis(&p0, n)?.iter().map(|g| iota.then(g)).collect();
    let hs = hom_basis(&omega, n)?;
    let len = hs.first().map_or(0, RepMorphism::flat_len);
    let mut rows: Vec<SparseVec> = coboundaries.iter().map(RepMorphism::flatten).collect();
    let mut rank = Matrix::from_sparse_rows(len, rows.clone()).rank();
    let mut cocycles = Vec::new();
    for h in hs {
        rows.push(h.flatten());
        let r = Matrix::from_sparse_rows(len, rows.clone()).rank();
        if r > rank {
            rank = r;
            cocycles.push(h);
        } else {
            rows.pop();
        }
    }
    Ok(Ext1Basis { p0, d0, omega, iota, coboundaries, cocycles })
}

pub fn ext1_dim(m: &Rep, n: &Rep) -> Result<usize> {
    if !same_algebra(&m.alg, &n.alg) {
        return Err(Error::AlgebraMismatch);
    }
    let (p0, d0, _) = projective_cover(m);
    let (omega, iota) = d0.kernel();
    if omega.is_zero() {
        return Ok(0);
    }
    let len: usize = (0..omega.dims.len()).map(|v| omega.dims[v] * n.dims[v]).sum();
    let rows: Vec<SparseVec> = hom_basis(&p0, n)?.iter().map(|g| iota.then(g).flatten()).collect();
    let r = Matrix::from_sparse_rows(len, rows).rank();
    Ok(hom_dim(&omega, n)? - r)
}

/// Some `f: A -> X` with `f . pi = g`, where `g: A -> Y` and `pi: X -> Y`.
pub fn factor_through(g: &RepMorphism, pi: &RepMorphism) -> Result<Option<RepMorphism>> {
    let hs = hom_basis(&g.source, &pi.source)?;
    solve_combination(&hs, |h| h.then(pi), g, &g.source, &pi.source)
}

/// Some `f: Y -> B` with `iota . f = g`, where `g: X -> B` and `iota: X -> Y`.
pub fn factor_from(g: &RepMorphism, iota: &RepMorphism) -> Result<Option<RepMorphism>> {
    let hs = hom_basis(&iota.target, &g.target)?;
    solve_combination(&hs, |h| iota.then(h), g, &iota.target, &g.target)
}

fn solve_combination<F>(
    hs: &[RepMorphism],
    apply: F,
    want: &RepMorphism,
    source: &Rep,
    target: &Rep,
) -> Result<Option<RepMorphism>>
where
    F: Fn(&RepMorphism) -> RepMorphism,
{
    let len = want.flat_len();
    if want.is_zero() {
        return Ok(Some(RepMorphism::zero(source, target)));
    }
    if hs.is_empty() {
        return Ok(None);
    }
    let cols: Vec<SparseVec> = hs.iter().map(|h| apply(h).flatten()).collect();
    let a = Matrix::from_sparse_rows(len, cols).transpose();
    let mut rhs = vec![q(0); len];
    for (j, v) in want.flatten() {
        rhs[j] = v;
    }
    Ok(a.solve(&rhs).map(|x| combine(hs, &x)))
}

/// `Σ c_i h_i`.
pub fn combine(hs: &[RepMorphism], cs: &[Scalar]) -> RepMorphism {
    let mut acc = hs[0].scale(&cs[0]);
    for (h, c) in hs.iter().zip(cs).skip(1) {
        acc = acc.lin_comb(&q(1), h, c);
    }
    acc
}

/// Middle term of the extension `0 -> N -> E -> M -> 0` classified by the
/// cocycle `c: Ω -> N`: the pushout of `Ω -> P_0` along `c`. Returns `E`,
/// `N -> E` and `E -> M`.
pub fn extension_middle(ext: &Ext1Basis, c: &RepMorphism) -> Result<(Rep, RepMorphism, RepMorphism)> {
    let alg = ext.p0.algebra().clone();
    let n = c.target.clone();
    let (sum, inj, _) = super::sum_injections(&alg, &[ext.p0.clone(), n.clone()]);
    let rel = ext.iota.then(&inj[0]).lin_comb(&q(1), &c.then(&inj[1]), &q(-1));
    let (e, proj) = sum.quotient(&rel.image_spaces())?;
    let n_to_e = inj[1].then(&proj);
    // (d0, 0): P_0 ⊕ N -> M factors through the quotient
    let zero = RepMorphism::zero(&n, &ext.d0.target);
    let out = RepMorphism::row(&sum, &ext.d0.target, &[ext.d0.clone(), zero]);
    let e_to_m = factor_from(&out, &proj)?.ok_or_else(|| Error::Invalid("pushout does not map to M".into()))?;
    Ok((e, n_to_e, e_to_m))
}
