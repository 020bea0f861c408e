//! Split objects `⊕ M_i[s_i]^{m_i}` of the bounded derived category of a
//! hereditary algebra, graded morphisms between them and mapping cones.
//!
//! `M[k]` is the stalk complex with `M` in cohomological degree `-k`, so
//! `Hom(M[s], N[t]) = Ext^{t-s}(M, N)`.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactla::{q, Matrix, Scalar};
use crate::rep::{
    decompose, ext1_basis, factor_through, hom_basis, is_isomorphic, projective_cover, Algebra, Ext1Basis, Rep,
    RepMorphism,
};

#[derive(Clone, Debug)]
pub struct DSummand {
    pub rep: Rep,
    pub shift: i64,
    pub mult: usize,
}

/// A split complex in normal form: indecomposable summands, one entry per
/// isomorphism class and shift, sorted by shift and then dimension vector.
#[derive(Clone, Debug)]
pub struct DObject {
    alg: Algebra,
    summands: Vec<DSummand>,
}

fn require_hereditary(alg: &Algebra) -> Result<()> {
    if alg.is_path_algebra() {
        Ok(())
    } else {
        Err(Error::NotHereditary)
    }
}

impl DObject {
    /// Builds the normal form of `⊕ parts`; each part is decomposed.
    pub fn new(alg: &Algebra, parts: &[(Rep, i64)]) -> Result<Self> {
        require_hereditary(alg)?;
        let mut summands: Vec<DSummand> = Vec::new();
        for (rep, shift) in parts {
            if rep.algebra().as_ref() != alg.as_ref() {
                return Err(Error::AlgebraMismatch);
            }
            for piece in decompose(rep)?.summands {
                add_summand(&mut summands, piece, *shift, 1)?;
            }
        }
        summands.sort_by(|a, b| (a.shift, a.rep.sort_key()).cmp(&(b.shift, b.rep.sort_key())));
        Ok(DObject { alg: alg.clone(), summands })
    }

    pub fn zero(alg: &Algebra) -> Result<Self> {
        DObject::new(alg, &[])
    }

    pub fn module(m: &Rep) -> Result<Self> {
        DObject::new(m.algebra(), &[(m.clone(), 0)])
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn summands(&self) -> &[DSummand] {
        &self.summands
    }

    /// One `(M, shift)` per indecomposable summand counted with multiplicity.
    pub fn expanded(&self) -> Vec<(Rep, i64)> {
        self.summands
            .iter()
            .flat_map(|s| std::iter::repeat((s.rep.clone(), s.shift)).take(s.mult))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Number of indecomposable summands with multiplicity.
    pub fn len(&self) -> usize {
        self.summands.iter().map(|s| s.mult).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn min_shift(&self) -> Option<i64> {
        self.summands.iter().map(|s| s.shift).min()
    }

    pub fn max_shift(&self) -> Option<i64> {
        self.summands.iter().map(|s| s.shift).max()
    }

    pub fn spread(&self) -> i64 {
        match (self.min_shift(), self.max_shift()) {
            (Some(a), Some(b)) => b - a,
            _ => 0,
        }
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.summands.iter().all(|s| s.mult == 1)
    }

    /// `X[k]`.
    pub fn shift(&self, k: i64) -> DObject {
        let mut out = self.clone();
        for s in &mut out.summands {
            s.shift += k;
        }
        out
    }

    pub fn direct_sum(&self, other: &DObject) -> Result<DObject> {
        let mut parts = self.expanded();
        parts.extend(other.expanded());
        DObject::new(&self.alg, &parts)
    }

    /// The summands (with multiplicity) satisfying `keep`.
    pub fn filter<F: Fn(&DSummand) -> bool>(&self, keep: F) -> DObject {
        DObject { alg: self.alg.clone(), summands: self.summands.iter().filter(|s| keep(s)).cloned().collect() }
    }

    /// The direct sum of the modules in each summand, ignoring shifts.
    pub fn underlying_module(&self) -> Rep {
        let parts: Vec<Rep> = self.expanded().into_iter().map(|(r, _)| r).collect();
        Rep::direct_sum(&self.alg, &parts)
    }

    pub fn is_isomorphic(&self, other: &DObject) -> Result<bool> {
        if self.summands.len() != other.summands.len() {
            return Ok(false);
        }
        let mut used = vec![false; other.summands.len()];
        'outer: for s in &self.summands {
            for (j, o) in other.summands.iter().enumerate() {
                if !used[j] && o.shift == s.shift && o.mult == s.mult && is_isomorphic(&o.rep, &s.rep)? {
                    used[j] = true;
                    continue 'outer;
                }
            }
            return Ok(false);
        }
        Ok(true)
    }

    pub fn to_json(&self) -> Value {
        let parts: Vec<Value> = self
            .summands
            .iter()
            .map(|s| json!({"rep": s.rep.to_json(), "shift": s.shift, "mult": s.mult}))
            .collect();
        json!({ "summands": parts })
    }

    pub fn from_json(alg: &Algebra, j: &Value) -> Result<Self> {
        let arr = j
            .get("summands")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Invalid("object needs a `summands` array".into()))?;
        let mut parts = Vec::new();
        for s in arr {
            let rep = Rep::from_json(alg, s.get("rep").ok_or_else(|| Error::Invalid("summand needs `rep`".into()))?)?;
            let shift = s.get("shift").and_then(Value::as_i64).unwrap_or(0);
            let mult = s.get("mult").and_then(Value::as_u64).unwrap_or(1) as usize;
            for _ in 0..mult {
                parts.push((rep.clone(), shift));
            }
        }
        DObject::new(alg, &parts)
    }
}

fn add_summand(summands: &mut Vec<DSummand>, rep: Rep, shift: i64, mult: usize) -> Result<()> {
    for s in summands.iter_mut() {
        if s.shift == shift && s.rep.dims() == rep.dims() && is_isomorphic(&s.rep, &rep)? {
            s.mult += mult;
            return Ok(());
        }
    }
    summands.push(DSummand { rep, shift, mult });
    Ok(())
}

impl std::fmt::Display for DObject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|s| {
                let mut out = format!("{:?}", s.rep.dims());
                if s.shift != 0 {
                    out.push_str(&format!("[{}]", s.shift));
                }
                if s.mult > 1 {
                    out.push_str(&format!("^{}", s.mult));
                }
                out
            })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// `0 -> Ω -> P_0 -> M -> 0`, the same presentation `ext1_basis` uses.
pub struct Presentation {
    pub p0: Rep,
    pub d0: RepMorphism,
    pub omega: Rep,
    pub iota: RepMorphism,
}

pub fn presentation(m: &Rep) -> Presentation {
    let (p0, d0, _) = projective_cover(m);
    let (omega, iota) = d0.kernel();
    Presentation { p0, d0, omega, iota }
}

/// A morphism `M[s] -> N[t]` between stalk complexes. A degree one map is a
/// cocycle `Ω(M) -> N` on the syzygy of [`presentation`].
#[derive(Clone, Debug)]
pub enum GMap {
    Zero,
    Deg0(RepMorphism),
    Deg1(RepMorphism),
}

impl GMap {
    pub fn is_zero(&self) -> bool {
        match self {
            GMap::Zero => true,
            GMap::Deg0(f) | GMap::Deg1(f) => f.is_zero(),
        }
    }

    pub fn lin_comb(&self, a: &Scalar, other: &GMap, b: &Scalar) -> GMap {
        match (self, other) {
            (GMap::Zero, GMap::Zero) => GMap::Zero,
            (GMap::Zero, GMap::Deg0(g)) => GMap::Deg0(g.scale(b)),
            (GMap::Zero, GMap::Deg1(g)) => GMap::Deg1(g.scale(b)),
            (GMap::Deg0(f), GMap::Zero) => GMap::Deg0(f.scale(a)),
            (GMap::Deg1(f), GMap::Zero) => GMap::Deg1(f.scale(a)),
            (GMap::Deg0(f), GMap::Deg0(g)) => GMap::Deg0(f.lin_comb(a, g, b)),
            (GMap::Deg1(f), GMap::Deg1(g)) => GMap::Deg1(f.lin_comb(a, g, b)),
            _ => panic!("adding graded maps of different degrees"),
        }
    }

    pub fn scale(&self, c: &Scalar) -> GMap {
        self.lin_comb(c, &GMap::Zero, &q(0))
    }

    /// `f` followed by `g`, where `f: X[a] -> Y[b]`. Degree one maps out of
    /// `X` are lifted along the presentation of `X`.
    pub fn then(&self, g: &GMap, x: &Rep) -> Result<GMap> {
        Ok(match (self, g) {
            (GMap::Zero, _) | (_, GMap::Zero) => GMap::Zero,
            (GMap::Deg0(f), GMap::Deg0(h)) => GMap::Deg0(f.then(h)),
            (GMap::Deg1(c), GMap::Deg0(h)) => GMap::Deg1(c.then(h)),
            (GMap::Deg0(f), GMap::Deg1(c)) => {
                let px = presentation(x);
                let py = presentation(&f.target);
                let lift0 = factor_through(&px.d0.then(f), &py.d0)?
                    .ok_or_else(|| Error::Verification("projective cover does not lift".into()))?;
                let lift1 = factor_through(&px.iota.then(&lift0), &py.iota)?
                    .ok_or_else(|| Error::Verification("syzygy map does not lift".into()))?;
                GMap::Deg1(lift1.then(c))
            }
            // Ext^2 vanishes over a hereditary algebra
            (GMap::Deg1(_), GMap::Deg1(_)) => GMap::Zero,
        })
    }

    fn to_json(&self) -> Value {
        match self {
            GMap::Zero => json!({"degree": null}),
            GMap::Deg0(f) => json!({"degree": 0, "maps": f.to_json()}),
            GMap::Deg1(f) => json!({"degree": 1, "maps": f.to_json()}),
        }
    }
}

/// `Hom(M[s], N[t])` with a basis and coordinates.
pub struct GHom {
    pub basis: Vec<GMap>,
    ext: Option<Ext1Basis>,
    degree: i64,
}

impl GHom {
    pub fn new(m: &Rep, s: i64, n: &Rep, t: i64) -> Result<Self> {
        let degree = t - s;
        match degree {
            0 => Ok(GHom { basis: hom_basis(m, n)?.into_iter().map(GMap::Deg0).collect(), ext: None, degree }),
            1 => {
                let e = ext1_basis(m, n)?;
                Ok(GHom { basis: e.cocycles.iter().cloned().map(GMap::Deg1).collect(), ext: Some(e), degree })
            }
            _ => Ok(GHom { basis: Vec::new(), ext: None, degree }),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `f` in `basis` (degree one maps modulo coboundaries).
    pub fn coords(&self, f: &GMap) -> Vec<Scalar> {
        let k = self.basis.len();
        match f {
            GMap::Zero => vec![q(0); k],
            GMap::Deg1(c) => self.ext.as_ref().map_or_else(|| vec![q(0); k], |e| e.coords(c)),
            GMap::Deg0(h) => {
                if self.degree != 0 || k == 0 {
                    return vec![q(0); k];
                }
                let len = h.flat_len();
                let cols: Vec<_> = self
                    .basis
                    .iter()
                    .map(|b| match b {
                        GMap::Deg0(x) => x.flatten(),
                        _ => unreachable!(),
                    })
                    .collect();
                let a = Matrix::from_sparse_rows(len, cols).transpose();
                let mut rhs = vec![q(0); len];
                for (j, v) in h.flatten() {
                    rhs[j] = v;
                }
                a.solve(&rhs).expect("morphism lies in the hom space")
            }
        }
    }

    pub fn from_coords(&self, cs: &[Scalar]) -> GMap {
        let mut acc = GMap::Zero;
        for (b, c) in self.basis.iter().zip(cs) {
            acc = acc.lin_comb(&q(1), b, c);
        }
        acc
    }
}

/// `dim Hom(M[s], N[t])`.
pub fn stalk_hom_dim(m: &Rep, s: i64, n: &Rep, t: i64) -> Result<usize> {
    match t - s {
        0 => crate::rep::hom_dim(m, n),
        1 => crate::rep::ext1_dim(m, n),
        _ => Ok(0),
    }
}

/// `dim Hom(X, Y[d])`.
pub fn ghom_dim(x: &DObject, y: &DObject, d: i64) -> Result<usize> {
    let mut total = 0;
    for a in &x.summands {
        for b in &y.summands {
            total += a.mult * b.mult * stalk_hom_dim(&a.rep, a.shift, &b.rep, b.shift + d)?;
        }
    }
    Ok(total)
}

/// Multiplicity free with `n` summands and `Hom(X, X[i]) = 0` for `i > 0`.
/// Only `i <= spread + 1` can contribute over a hereditary algebra.
pub fn in_class_t(x: &DObject) -> Result<bool> {
    require_hereditary(&x.alg)?;
    if !x.is_multiplicity_free() || x.summands.len() != x.alg.num_vertices() {
        return Ok(false);
    }
    for i in 1..=x.spread() + 1 {
        if ghom_dim(x, x, i)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of summands (with multiplicity) above the lowest shift.
pub fn r_value(x: &DObject) -> usize {
    let Some(lo) = x.min_shift() else { return 0 };
    x.summands.iter().filter(|s| s.shift > lo).map(|s| s.mult).sum()
}

/// A morphism between finite direct sums of stalk complexes, given blockwise.
#[derive(Clone, Debug)]
pub struct DMorphism {
    pub source: Vec<(Rep, i64)>,
    pub target: Vec<(Rep, i64)>,
    /// `blocks[i][j]: source[i] -> target[j]`.
    pub blocks: Vec<Vec<GMap>>,
}

impl DMorphism {
    pub fn new(source: Vec<(Rep, i64)>, target: Vec<(Rep, i64)>, blocks: Vec<Vec<GMap>>) -> Result<Self> {
        if blocks.len() != source.len() || blocks.iter().any(|r| r.len() != target.len()) {
            return Err(Error::Invalid("block shape does not match source and target".into()));
        }
        for (i, (m, s)) in source.iter().enumerate() {
            for (j, (n, t)) in target.iter().enumerate() {
                let ok = match &blocks[i][j] {
                    GMap::Zero => true,
                    GMap::Deg0(f) => *t == *s && f.source == *m && f.target == *n && f.commutes(),
                    GMap::Deg1(c) => {
                        *t == *s + 1 && c.source == presentation(m).omega && c.target == *n && c.commutes()
                    }
                };
                if !ok {
                    return Err(Error::Invalid(format!("block ({i}, {j}) is not a morphism of the given degree")));
                }
            }
        }
        Ok(DMorphism { source, target, blocks })
    }

    pub fn zero(source: Vec<(Rep, i64)>, target: Vec<(Rep, i64)>) -> Self {
        let blocks = vec![vec![GMap::Zero; target.len()]; source.len()];
        DMorphism { source, target, blocks }
    }

    pub fn identity(x: &DObject) -> Self {
        let parts = x.expanded();
        let blocks = (0..parts.len())
            .map(|i| {
                (0..parts.len())
                    .map(|j| if i == j { GMap::Deg0(parts[i].0.identity()) } else { GMap::Zero })
                    .collect()
            })
            .collect();
        DMorphism { source: parts.clone(), target: parts, blocks }
    }

    /// A module morphism viewed in degree zero.
    pub fn from_module_morphism(f: &RepMorphism) -> Self {
        DMorphism { source: vec![(f.source.clone(), 0)], target: vec![(f.target.clone(), 0)], blocks: vec![vec![GMap::Deg0(f.clone())]] }
    }

    pub fn then(&self, g: &DMorphism) -> Result<DMorphism> {
        let mut blocks = vec![vec![GMap::Zero; g.target.len()]; self.source.len()];
        for (i, row) in blocks.iter_mut().enumerate() {
            for (k, cell) in row.iter_mut().enumerate() {
                let mut acc = GMap::Zero;
                for j in 0..self.target.len() {
                    let c = self.blocks[i][j].then(&g.blocks[j][k], &self.source[i].0)?;
                    acc = acc.lin_comb(&q(1), &c, &q(1));
                }
                *cell = acc;
            }
        }
        Ok(DMorphism { source: self.source.clone(), target: g.target.clone(), blocks })
    }

    pub fn to_json(&self) -> Value {
        let blocks: Vec<Vec<Value>> =
            self.blocks.iter().map(|r| r.iter().map(GMap::to_json).collect()).collect();
        json!({
            "source": self.source.iter().map(|(r, s)| json!({"rep": r.to_json(), "shift": s})).collect::<Vec<_>>(),
            "target": self.target.iter().map(|(r, s)| json!({"rep": r.to_json(), "shift": s})).collect::<Vec<_>>(),
            "blocks": blocks,
        })
    }
}

/// Pieces of one degree of a complex: the module and where it came from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Piece {
    Top(usize),
    Syzygy(usize),
    Target(usize),
}

/// Morphism between direct sums assembled from blocks.
fn assemble<F>(alg: &Algebra, src: &[(Piece, Rep)], tgt: &[(Piece, Rep)], block: F) -> (Rep, Rep, RepMorphism)
where
    F: Fn(Piece, Piece) -> Option<RepMorphism>,
{
    let s = Rep::direct_sum(alg, &src.iter().map(|p| p.1.clone()).collect::<Vec<_>>());
    let t = Rep::direct_sum(alg, &tgt.iter().map(|p| p.1.clone()).collect::<Vec<_>>());
    let n = alg.num_vertices();
    let mut mats: Vec<Matrix> = (0..n).map(|v| Matrix::zeros(s.dims()[v], t.dims()[v])).collect();
    let mut roff = vec![0usize; n];
    for (a, ra) in src {
        let mut coff = vec![0usize; n];
        for (b, rb) in tgt {
            if let Some(f) = block(*a, *b) {
                for v in 0..n {
                    mats[v].set_block(roff[v], coff[v], f.mat(v));
                }
            }
            for v in 0..n {
                coff[v] += rb.dims()[v];
            }
        }
        for v in 0..n {
            roff[v] += ra.dims()[v];
        }
    }
    let f = RepMorphism::new_unchecked(&s, &t, mats);
    (s, t, f)
}

/// The mapping cone of `f`, as a split object: its cohomology modules.
///
/// Source summands are replaced by their projective presentations
/// `Ω -> P_0`, targets stay stalk complexes, and the cone is formed degree
/// by degree.
pub fn cone(f: &DMorphism) -> Result<DObject> {
    let alg = match (f.source.first(), f.target.first()) {
        (Some((r, _)), _) | (None, Some((r, _))) => r.algebra().clone(),
        (None, None) => return Err(Error::Invalid("cone of the zero object needs an algebra".into())),
    };
    require_hereditary(&alg)?;
    let pres: Vec<Presentation> = f.source.iter().map(|(m, _)| presentation(m)).collect();
    // source complex: Ω_i in degree -s_i - 1, P_0 in degree -s_i
    let src_at = |n: i64| -> Vec<(Piece, Rep)> {
        let mut out = Vec::new();
        for (i, (_, s)) in f.source.iter().enumerate() {
            if n == -s - 1 {
                out.push((Piece::Syzygy(i), pres[i].omega.clone()));
            }
            if n == -s {
                out.push((Piece::Top(i), pres[i].p0.clone()));
            }
        }
        out
    };
    let tgt_at = |n: i64| -> Vec<(Piece, Rep)> {
        f.target
            .iter()
            .enumerate()
            .filter(|(_, (_, t))| n == -t)
            .map(|(j, (r, _))| (Piece::Target(j), r.clone()))
            .collect()
    };
    let cone_at = |n: i64| -> Vec<(Piece, Rep)> {
        let mut v = src_at(n + 1);
        v.extend(tgt_at(n));
        v
    };
    // cone differential: (-d_S, φ) on the source part, zero on the target part
    let block = |a: Piece, b: Piece| -> Option<RepMorphism> {
        match (a, b) {
            (Piece::Syzygy(i), Piece::Top(k)) if i == k => Some(pres[i].iota.scale(&q(-1))),
            (Piece::Top(i), Piece::Target(j)) => match &f.blocks[i][j] {
                GMap::Deg0(h) => Some(pres[i].d0.then(h)),
                _ => None,
            },
            (Piece::Syzygy(i), Piece::Target(j)) => match &f.blocks[i][j] {
                GMap::Deg1(c) => Some(c.clone()),
                _ => None,
            },
            _ => None,
        }
    };
    let mut degrees: Vec<i64> = Vec::new();
    for (_, s) in &f.source {
        degrees.extend([-s - 2, -s - 1]);
    }
    for (_, t) in &f.target {
        degrees.push(-t);
    }
    let lo = *degrees.iter().min().unwrap();
    let hi = *degrees.iter().max().unwrap();
    let mut parts = Vec::new();
    for n in lo..=hi {
        let here = cone_at(n);
        if here.is_empty() {
            continue;
        }
        let (_, _, d_out) = assemble(&alg, &here, &cone_at(n + 1), block);
        let (_, _, d_in) = assemble(&alg, &cone_at(n - 1), &here, block);
        let (k, incl) = d_out.kernel();
        let im = d_in.image_spaces();
        let coords: Vec<Matrix> = (0..alg.num_vertices())
            .map(|v| {
                if im[v].rows() == 0 {
                    Matrix::zeros(0, k.dims()[v])
                } else {
                    incl.mat(v).solve_left(&im[v]).expect("image lies in the kernel")
                }
            })
            .collect();
        let (h, _) = k.quotient(&coords)?;
        if !h.is_zero() {
            parts.push((h, -n));
        }
    }
    DObject::new(&alg, &parts)
}

/// Summary line per summand, for logs and the command line.
pub fn describe(x: &DObject) -> Vec<BTreeMap<String, Value>> {
    x.summands
        .iter()
        .map(|s| {
            let mut m = BTreeMap::new();
            m.insert("dims".to_string(), json!(crate::rep::dims_map(&s.rep)));
            m.insert("shift".to_string(), json!(s.shift));
            m.insert("mult".to_string(), json!(s.mult));
            m
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::BoundQuiverAlgebra;
    use crate::quiver::named;
    use crate::rep::hom_basis;

    fn alg(n: usize) -> Algebra {
        Arc::new(BoundQuiverAlgebra::path_algebra(&named::linear_a(n)).unwrap())
    }

    #[test]
    fn normal_form_merges_isomorphic_summands() {
        let a = alg(2);
        let p1 = Rep::projective(&a, 0);
        let x = DObject::new(&a, &[(p1.clone(), 1), (Rep::regular(&a), 1), (p1.clone(), 0)]).unwrap();
        assert_eq!(x.len(), 4);
        assert_eq!(x.summands().len(), 3);
        assert_eq!(x.summands()[0].shift, 0);
        let top = x.summands().iter().find(|s| s.shift == 1 && s.rep.dims() == [1, 1]).unwrap();
        assert_eq!(top.mult, 2);
        assert_eq!(r_value(&x), 3);
        let back = DObject::from_json(&a, &x.to_json()).unwrap();
        assert!(back.is_isomorphic(&x).unwrap());
    }

    #[test]
    fn class_t_examples() {
        let a = alg(2);
        let (p1, s1, s2) = (Rep::projective(&a, 0), Rep::simple(&a, 0), Rep::simple(&a, 1));
        let x = DObject::new(&a, &[(p1.clone(), 0), (s1.clone(), 1)]).unwrap();
        assert!(in_class_t(&x).unwrap());
        assert_eq!(r_value(&x), 1);
        // Hom(S2, P1) != 0 sits in degree -1
        let y = DObject::new(&a, &[(p1.clone(), 0), (s2.clone(), 1)]).unwrap();
        assert!(!in_class_t(&y).unwrap());
        assert!(in_class_t(&DObject::new(&a, &[(s1.clone(), 0), (s2.clone(), 1)]).unwrap()).unwrap());
        assert!(!in_class_t(&DObject::new(&a, &[(p1.clone(), 0)]).unwrap()).unwrap());
        assert!(!in_class_t(&DObject::new(&a, &[(p1.clone(), 0), (p1, 1)]).unwrap()).unwrap());
    }

    #[test]
    fn ghom_matches_hom_and_ext() {
        let a = alg(2);
        let (s1, s2) = (Rep::simple(&a, 0), Rep::simple(&a, 1));
        let x = DObject::module(&s1).unwrap();
        let y = DObject::module(&s2).unwrap();
        assert_eq!(ghom_dim(&x, &y, 1).unwrap(), 1);
        assert_eq!(ghom_dim(&x, &y, 0).unwrap(), 0);
        assert_eq!(ghom_dim(&y, &x, 1).unwrap(), 0);
        assert_eq!(ghom_dim(&x, &y.shift(1), 0).unwrap(), 1);
        assert_eq!(ghom_dim(&x, &y, 2).unwrap(), 0);
    }

    #[test]
    fn cone_examples() {
        let a = alg(2);
        let (p1, p2) = (Rep::projective(&a, 0), Rep::projective(&a, 1));
        let h = hom_basis(&p2, &p1).unwrap().remove(0);
        let c = cone(&DMorphism::from_module_morphism(&h)).unwrap();
        let s1 = DObject::module(&Rep::simple(&a, 0)).unwrap();
        assert!(c.is_isomorphic(&s1).unwrap());

        let x = DObject::new(&a, &[(p1.clone(), 0), (Rep::simple(&a, 0), 1)]).unwrap();
        assert!(cone(&DMorphism::identity(&x)).unwrap().is_zero());

        let z = cone(&DMorphism::zero(vec![(p1.clone(), 0)], vec![(p2.clone(), 0)])).unwrap();
        let want = DObject::new(&a, &[(p2.clone(), 0), (p1.clone(), 1)]).unwrap();
        assert!(z.is_isomorphic(&want).unwrap());
    }

    #[test]
    fn cone_of_extension_class() {
        // S1 -> S2[1] with the nonzero class has cone P1[1]
        let a = alg(2);
        let (s1, s2) = (Rep::simple(&a, 0), Rep::simple(&a, 1));
        let g = GHom::new(&s1, 0, &s2, 1).unwrap();
        assert_eq!(g.dim(), 1);
        let f = DMorphism::new(vec![(s1, 0)], vec![(s2, 1)], vec![vec![g.basis[0].clone()]]).unwrap();
        let c = cone(&f).unwrap();
        let want = DObject::new(&a, &[(Rep::projective(&a, 0), 1)]).unwrap();
        assert!(c.is_isomorphic(&want).unwrap(), "got {c}");
    }

    #[test]
    fn composition_of_degree_one_maps() {
        // P2 -> P1 -> S1 -> P2[1]: the composite S1 -> P2[1] after P1 -> S1 vanishes
        let a = alg(2);
        let (p1, s1, p2) = (Rep::projective(&a, 0), Rep::simple(&a, 0), Rep::projective(&a, 1));
        let pi = GMap::Deg0(hom_basis(&p1, &s1).unwrap().remove(0));
        let g = GHom::new(&s1, 0, &p2, 1).unwrap();
        let comp = pi.then(&g.basis[0], &p1).unwrap();
        let target = GHom::new(&p1, 0, &p2, 1).unwrap();
        assert_eq!(target.dim(), 0);
        assert!(target.coords(&comp).is_empty());
        // an isomorphism followed by a nonzero class stays nonzero
        let b = alg(3);
        let (m12, _) = Rep::projective(&b, 0).quotient(&[Matrix::zeros(0, 1), Matrix::zeros(0, 1), Matrix::identity(1)]).unwrap();
        assert_eq!(m12.dims(), &[1, 1, 0]);
        let scale = vec![Matrix::scalar(1, &q(2)), Matrix::scalar(1, &q(3)), Matrix::zeros(0, 0)];
        let (x, iso) = m12.base_change(&scale).unwrap();
        let s3 = Rep::simple(&b, 2);
        let e = GHom::new(&m12, 0, &s3, 1).unwrap();
        assert_eq!(e.dim(), 1);
        let comp = GMap::Deg0(iso).then(&e.basis[0], &x).unwrap();
        let t = GHom::new(&x, 0, &s3, 1).unwrap();
        assert_ne!(t.coords(&comp), vec![q(0)]);
        // S1 -> S2[1] then S2[1] -> M[1] where S2 ⊂ P1: lands in Ext^1(S1, P1) = 0
        let (p1, s1, s2) = (Rep::projective(&a, 0), Rep::simple(&a, 0), Rep::simple(&a, 1));
        let c = GHom::new(&s1, 0, &s2, 1).unwrap().basis[0].clone();
        let inc = GMap::Deg0(hom_basis(&s2, &p1).unwrap().remove(0));
        let comp = c.then(&inc, &s1).unwrap();
        let t = GHom::new(&s1, 0, &p1, 1).unwrap();
        assert_eq!(t.dim(), 0);
        assert!(t.coords(&comp).is_empty());
    }
}
