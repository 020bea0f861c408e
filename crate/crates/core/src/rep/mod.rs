//! Finite-dimensional representations.
//!
//! A representation assigns a space `M(v)` to each vertex and, to each arrow
//! `a: s -> t`, a `dim M(s) x dim M(t)` matrix acting on row vectors:
//! `x |-> x * M_a`. Paths act in traversal order, so `M_{[a,b]} = M_a * M_b`.
//! This is the right-module convention in which the indecomposable projective
//! at `v` has `P_v(w)` spanned by the paths `v ~> w`, and `Hom(P_v, M) = M(v)`.
//!
//! A morphism `f: M -> N` is a family of `dim M(v) x dim N(v)` matrices with
//! `M_a * f_t = f_s * N_a` for every arrow. "`f` then `g`" is `f.then(g)`.

mod decomp;
mod enumerate;
mod hom;

pub use decomp::{
    decompose, endomorphism_radical, is_indecomposable, is_isomorphic, isomorphism, Decomposition, EndRadical,
};
pub use enumerate::{enumerate_indecomposables, tits_form, EnumerationMode, EnumerationResult};
pub use hom::{
    combine, ext1_basis, ext1_dim, extension_middle, factor_from, factor_through, hom_basis, hom_dim, pd_at_most,
    projective_cover, projective_resolution, Ext1Basis, Resolution,
};

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::Value;

use crate::algebra::{BoundQuiverAlgebra, Path};
use crate::error::{Error, Result};
use crate::exactla::{parse_scalar, q, Matrix, Scalar};

pub type Algebra = Arc<BoundQuiverAlgebra>;

#[derive(Clone)]
pub struct Rep {
    alg: Algebra,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl std::fmt::Debug for Rep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Rep{:?}", self.dims)
    }
}

impl PartialEq for Rep {
    /// Equality of the literal data (not isomorphism).
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.alg, &other.alg) && self.dims == other.dims && self.maps == other.maps
    }
}

pub(crate) fn same_algebra(a: &Algebra, b: &Algebra) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Rep {
    /// Validates shapes and relations.
    pub fn new(alg: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let qv = alg.quiver();
        if dims.len() != qv.num_vertices() || maps.len() != qv.num_arrows() {
            return Err(Error::Invalid("representation data does not match the quiver".into()));
        }
        for (k, a) in qv.arrows().iter().enumerate() {
            if maps[k].shape() != (dims[a.source], dims[a.target]) {
                return Err(Error::Invalid(format!(
                    "map of `{}` has shape {:?}, expected {:?}",
                    a.name,
                    maps[k].shape(),
                    (dims[a.source], dims[a.target])
                )));
            }
        }
        let r = Rep { alg: alg.clone(), dims, maps };
        for rel in alg.relations() {
            let (s, t) = (rel.source(), rel.target(qv));
            let mut acc = Matrix::zeros(r.dims[s], r.dims[t]);
            for (c, p) in &rel.terms {
                acc = acc.lin_comb(&q(1), &r.path_matrix(p), c);
            }
            if !acc.is_zero() {
                return Err(Error::RelationViolated);
            }
        }
        Ok(r)
    }

    pub(crate) fn new_unchecked(alg: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        Rep { alg: alg.clone(), dims, maps }
    }

    pub fn zero(alg: &Algebra) -> Self {
        let qv = alg.quiver();
        Rep {
            alg: alg.clone(),
            dims: vec![0; qv.num_vertices()],
            maps: vec![Matrix::zeros(0, 0); qv.num_arrows()],
        }
    }

    /// Simple representation at `v`.
    pub fn simple(alg: &Algebra, v: usize) -> Self {
        let mut dims = vec![0; alg.num_vertices()];
        dims[v] = 1;
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.source], dims[a.target]))
            .collect();
        Rep { alg: alg.clone(), dims, maps }
    }

    /// Indecomposable projective at `v`: `P_v(w)` has basis the normal words
    /// `v ~> w`, and an arrow acts by right multiplication.
    pub fn projective(alg: &Algebra, v: usize) -> Self {
        let qv = alg.quiver();
        let n = qv.num_vertices();
        let dims: Vec<usize> = (0..n).map(|w| alg.paths_between(v, w).len()).collect();
        let maps = qv
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let src = alg.paths_between(v, a.source);
                let tgt = alg.paths_between(v, a.target);
                let ae = alg.arrow_element(k);
                let mut entries = Vec::new();
                for (i, &p) in src.iter().enumerate() {
                    for (b, c) in alg.mul_basis(p, ae) {
                        let j = tgt.iter().position(|&x| x == b).expect("product stays in block");
                        entries.push((i, j, c));
                    }
                }
                Matrix::from_entries(src.len(), tgt.len(), entries)
            })
            .collect();
        Rep { alg: alg.clone(), dims, maps }
    }

    /// Regular representation `A_A = ⊕_v P_v`.
    pub fn regular(alg: &Algebra) -> Self {
        let ps: Vec<Rep> = (0..alg.num_vertices()).map(|v| Rep::projective(alg, v)).collect();
        Rep::direct_sum(alg, &ps)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Matrix of a path (traversal order).
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.dims[p.source]);
        for &a in &p.arrows {
            m = m.mul(&self.maps[a]);
        }
        m
    }

    /// Action of basis element `i` of the algebra.
    pub fn basis_action(&self, i: usize) -> Matrix {
        self.path_matrix(&self.alg.basis()[i])
    }

    pub fn direct_sum(alg: &Algebra, parts: &[Rep]) -> Rep {
        let qv = alg.quiver();
        let dims: Vec<usize> = (0..qv.num_vertices()).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..qv.num_arrows())
            .map(|a| Matrix::block_diag(&parts.iter().map(|p| p.maps[a].clone()).collect::<Vec<_>>()))
            .collect();
        Rep { alg: alg.clone(), dims, maps }
    }

    /// `self^k`.
    pub fn power(&self, k: usize) -> Rep {
        Rep::direct_sum(&self.alg, &vec![self.clone(); k])
    }

    /// Transports the structure along invertible `b_v`; the returned
    /// morphism `b` is an isomorphism from the new rep to `self`.
    pub fn base_change(&self, b: &[Matrix]) -> Result<(Rep, RepMorphism)> {
        let inv: Vec<Matrix> = b
            .iter()
            .map(|m| m.inverse().ok_or_else(|| Error::Invalid("base change is not invertible".into())))
            .collect::<Result<_>>()?;
        let maps = self
            .alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| b[a.source].mul(&self.maps[k]).mul(&inv[a.target]))
            .collect();
        let r = Rep::new_unchecked(&self.alg, self.dims.clone(), maps);
        let iso = RepMorphism::new_unchecked(&r, self, b.to_vec());
        Ok((r, iso))
    }

    /// Subrepresentation spanned at each vertex by the rows of `spaces[v]`
    /// (which must be independent), with its inclusion.
    pub fn subrep(&self, spaces: &[Matrix]) -> Result<(Rep, RepMorphism)> {
        let qv = self.alg.quiver();
        let dims: Vec<usize> = spaces.iter().map(Matrix::rows).collect();
        let mut maps = Vec::with_capacity(qv.num_arrows());
        for (k, a) in qv.arrows().iter().enumerate() {
            let img = spaces[a.source].mul(&self.maps[k]);
            let x = if dims[a.source] == 0 || dims[a.target] == 0 {
                if !img.is_zero() {
                    return Err(Error::Invalid("subspaces are not closed under the arrows".into()));
                }
                Matrix::zeros(dims[a.source], dims[a.target])
            } else {
                spaces[a.target]
                    .solve_left(&img)
                    .ok_or_else(|| Error::Invalid("subspaces are not closed under the arrows".into()))?
            };
            maps.push(x);
        }
        let sub = Rep::new_unchecked(&self.alg, dims, maps);
        let inc = RepMorphism::new_unchecked(&sub, self, spaces.to_vec());
        Ok((sub, inc))
    }

    /// Quotient by the subrepresentation spanned by `spaces`, with the
    /// projection. The quotient basis is the image of the standard basis
    /// vectors outside the pivot columns of each subspace.
    pub fn quotient(&self, spaces: &[Matrix]) -> Result<(Rep, RepMorphism)> {
        let qv = self.alg.quiver();
        let n = qv.num_vertices();
        let mut proj = Vec::with_capacity(n);
        let mut lifts = Vec::with_capacity(n);
        for v in 0..n {
            let d = self.dims[v];
            let k = spaces[v].row_space_basis();
            let r = k.rref();
            let mut is_piv = vec![false; d];
            for &p in &r.pivots {
                is_piv[p] = true;
            }
            let comp: Vec<usize> = (0..d).filter(|&c| !is_piv[c]).collect();
            let c = Matrix::from_entries(comp.len(), d, comp.iter().enumerate().map(|(i, &j)| (i, j, q(1))));
            // [K; C] is invertible; the projection is the last columns of its inverse
            let stacked = k.vstack(&c);
            let inv = stacked.inverse().expect("subspace plus complement is a basis");
            proj.push(inv.block(0, k.rows(), d, comp.len()));
            lifts.push(c);
        }
        let dims: Vec<usize> = lifts.iter().map(Matrix::rows).collect();
        let maps = qv
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| lifts[a.source].mul(&self.maps[k]).mul(&proj[a.target]))
            .collect();
        let quo = Rep::new_unchecked(&self.alg, dims, maps);
        let pm = RepMorphism::new_unchecked(self, &quo, proj);
        // closure check: K_s * M_a * proj_t = 0
        for (k, a) in qv.arrows().iter().enumerate() {
            if !spaces[a.source].mul(&self.maps[k]).mul(&pm.mats[a.target]).is_zero() {
                return Err(Error::Invalid("quotient by a non-subrepresentation".into()));
            }
        }
        Ok((quo, pm))
    }

    /// `rad M = M * rad A`: at `v`, the sum of images of arrows into `v`.
    pub fn radical_spaces(&self) -> Vec<Matrix> {
        let qv = self.alg.quiver();
        (0..qv.num_vertices())
            .map(|v| {
                let parts: Vec<Matrix> = qv.arrows_into(v).map(|a| self.maps[a].clone()).collect();
                Matrix::vstack_all(self.dims[v], &parts).row_space_basis()
            })
            .collect()
    }

    /// Dimension vector of the top `M / rad M`.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_spaces().iter().zip(&self.dims).map(|(r, d)| d - r.rows()).collect()
    }

    pub fn is_projective(&self) -> bool {
        let top = self.top_dims();
        let cover: usize = top
            .iter()
            .enumerate()
            .map(|(v, &m)| m * Rep::projective(&self.alg, v).total_dim())
            .sum();
        cover == self.total_dim()
    }

    /// Identity morphism.
    pub fn identity(&self) -> RepMorphism {
        RepMorphism::new_unchecked(self, self, self.dims.iter().map(|&d| Matrix::identity(d)).collect())
    }

    /// `M(v)` as the rows of the identity: the element `m` gives the map
    /// `P_v -> M` sending the path `p` to `m * M_p`.
    pub fn yoneda(&self, v: usize, m: &Matrix) -> RepMorphism {
        let p = Rep::projective(&self.alg, v);
        let alg = &self.alg;
        let mats = (0..alg.num_vertices())
            .map(|w| {
                let rows: Vec<Matrix> = alg
                    .paths_between(v, w)
                    .iter()
                    .map(|&b| m.mul(&self.basis_action(b)))
                    .collect();
                Matrix::vstack_all(self.dims[w], &rows)
            })
            .collect();
        RepMorphism::new_unchecked(&p, self, mats)
    }

    /// Canonical key for deterministic ordering.
    pub fn sort_key(&self) -> (Vec<usize>, Vec<Vec<Scalar>>) {
        (self.dims.clone(), self.maps.iter().map(Matrix::lex_key).collect())
    }

    pub fn to_json(&self) -> Value {
        let qv = self.alg.quiver();
        let mut dims = serde_json::Map::new();
        for v in 0..qv.num_vertices() {
            dims.insert(qv.vertex_name(v).to_string(), Value::from(self.dims[v]));
        }
        let mut maps = serde_json::Map::new();
        for (k, a) in qv.arrows().iter().enumerate() {
            maps.insert(a.name.clone(), matrix_to_json(&self.maps[k]));
        }
        serde_json::json!({ "dims": dims, "maps": maps })
    }

    /// Reads `{"dims":{v:n}, "maps":{arrow:[[...]]}}`; absent maps are zero.
    pub fn from_json(alg: &Algebra, j: &Value) -> Result<Self> {
        let qv = alg.quiver();
        let bad = |s: &str| Error::Invalid(format!("rep JSON: {s}"));
        let dj = j.get("dims").and_then(Value::as_object).ok_or_else(|| bad("missing dims"))?;
        let mut dims = vec![0usize; qv.num_vertices()];
        for (name, n) in dj {
            let v = qv.vertex_index(name)?;
            dims[v] = n.as_u64().ok_or_else(|| bad("dims must be natural numbers"))? as usize;
        }
        let empty = serde_json::Map::new();
        let mj = j.get("maps").and_then(Value::as_object).unwrap_or(&empty);
        let mut maps: Vec<Matrix> = qv.arrows().iter().map(|a| Matrix::zeros(dims[a.source], dims[a.target])).collect();
        for (name, m) in mj {
            let k = qv.arrow_index(name)?;
            let a = qv.arrow(k);
            maps[k] = matrix_from_json(m, dims[a.source], dims[a.target])?;
        }
        Rep::new(alg, dims, maps)
    }
}

pub(crate) fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(
        m.to_dense()
            .into_iter()
            .map(|row| Value::Array(row.iter().map(scalar_to_json).collect()))
            .collect(),
    )
}

pub(crate) fn scalar_to_json(x: &Scalar) -> Value {
    use num_traits::ToPrimitive;
    if x.is_integer() {
        if let Some(i) = x.to_integer().to_i64() {
            return Value::from(i);
        }
    }
    Value::String(crate::exactla::scalar_to_string(x))
}

pub(crate) fn matrix_from_json(m: &Value, rows: usize, cols: usize) -> Result<Matrix> {
    let bad = || Error::Invalid(format!("matrix must be {rows}x{cols}"));
    let rs = m.as_array().ok_or_else(bad)?;
    if rows == 0 || cols == 0 {
        return Ok(Matrix::zeros(rows, cols));
    }
    if rs.len() != rows {
        return Err(bad());
    }
    let mut dense = Vec::with_capacity(rows);
    for r in rs {
        let r = r.as_array().ok_or_else(bad)?;
        if r.len() != cols {
            return Err(bad());
        }
        dense.push(r.iter().map(|x| parse_scalar(&crate::quiver::json_id(x))).collect::<Result<Vec<_>>>()?);
    }
    Ok(Matrix::from_dense(rows, cols, &dense))
}

#[derive(Clone)]
pub struct RepMorphism {
    pub source: Rep,
    pub target: Rep,
    mats: Vec<Matrix>,
}

impl std::fmt::Debug for RepMorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RepMorphism({:?} -> {:?}, {:?})", self.source, self.target, self.mats)
    }
}

impl RepMorphism {
    /// Validates shapes and the commuting squares.
    pub fn new(source: &Rep, target: &Rep, mats: Vec<Matrix>) -> Result<Self> {
        if !same_algebra(&source.alg, &target.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let f = RepMorphism::new_unchecked(source, target, mats);
        for v in 0..source.dims.len() {
            if f.mats[v].shape() != (source.dims[v], target.dims[v]) {
                return Err(Error::Invalid("morphism block has the wrong shape".into()));
            }
        }
        if !f.commutes() {
            return Err(Error::Invalid("matrices do not commute with the arrows".into()));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: &Rep, target: &Rep, mats: Vec<Matrix>) -> Self {
        RepMorphism { source: source.clone(), target: target.clone(), mats }
    }

    pub fn zero(source: &Rep, target: &Rep) -> Self {
        let mats = (0..source.dims.len())
            .map(|v| Matrix::zeros(source.dims[v], target.dims[v]))
            .collect();
        RepMorphism::new_unchecked(source, target, mats)
    }

    pub fn commutes(&self) -> bool {
        let qv = self.source.alg.quiver();
        qv.arrows().iter().enumerate().all(|(k, a)| {
            self.source.maps[k].mul(&self.mats[a.target]) == self.mats[a.source].mul(&self.target.maps[k])
        })
    }

    pub fn mat(&self, v: usize) -> &Matrix {
        &self.mats[v]
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    /// `self` then `g`.
    pub fn then(&self, g: &RepMorphism) -> RepMorphism {
        let mats = self.mats.iter().zip(&g.mats).map(|(a, b)| a.mul(b)).collect();
        RepMorphism::new_unchecked(&self.source, &g.target, mats)
    }

    pub fn lin_comb(&self, a: &Scalar, other: &RepMorphism, b: &Scalar) -> RepMorphism {
        let mats = self.mats.iter().zip(&other.mats).map(|(x, y)| x.lin_comb(a, y, b)).collect();
        RepMorphism::new_unchecked(&self.source, &self.target, mats)
    }

    pub fn add(&self, other: &RepMorphism) -> RepMorphism {
        self.lin_comb(&q(1), other, &q(1))
    }

    pub fn scale(&self, c: &Scalar) -> RepMorphism {
        RepMorphism::new_unchecked(&self.source, &self.target, self.mats.iter().map(|m| m.scale(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(Matrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.mats.iter().all(Matrix::is_invertible)
    }

    pub fn is_injective(&self) -> bool {
        self.mats.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_surjective(&self) -> bool {
        self.mats.iter().all(|m| m.rank() == m.cols())
    }

    pub fn inverse(&self) -> Option<RepMorphism> {
        let mats = self.mats.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(RepMorphism::new_unchecked(&self.target, &self.source, mats))
    }

    /// Block-diagonal matrix of the whole morphism (vertex order).
    pub fn total_matrix(&self) -> Matrix {
        Matrix::block_diag(&self.mats)
    }

    /// Coordinates in a fixed ordering, for linear-algebra over Hom spaces.
    pub fn flatten(&self) -> crate::exactla::SparseVec {
        let mut out = Vec::new();
        let mut off = 0;
        for m in &self.mats {
            for (j, v) in m.flatten() {
                out.push((off + j, v));
            }
            off += m.rows() * m.cols();
        }
        out
    }

    pub fn flat_len(&self) -> usize {
        self.mats.iter().map(|m| m.rows() * m.cols()).sum()
    }

    pub fn kernel(&self) -> (Rep, RepMorphism) {
        let spaces: Vec<Matrix> = self.mats.iter().map(|m| m.left_kernel_basis().row_space_basis()).collect();
        self.source.subrep(&spaces).expect("kernel is a subrepresentation")
    }

    pub fn image_spaces(&self) -> Vec<Matrix> {
        self.mats.iter().map(Matrix::row_space_basis).collect()
    }

    pub fn image(&self) -> (Rep, RepMorphism) {
        self.target.subrep(&self.image_spaces()).expect("image is a subrepresentation")
    }

    pub fn cokernel(&self) -> (Rep, RepMorphism) {
        self.target.quotient(&self.image_spaces()).expect("image is a subrepresentation")
    }

    /// Morphism into a direct sum from its components.
    pub fn column(source: &Rep, target: &Rep, parts: &[RepMorphism]) -> RepMorphism {
        let mats = (0..source.dims.len())
            .map(|v| {
                let mut m = Matrix::zeros(source.dims[v], 0);
                for p in parts {
                    m = m.hstack(&p.mats[v]);
                }
                m
            })
            .collect();
        RepMorphism::new_unchecked(source, target, mats)
    }

    /// Morphism out of a direct sum from its components.
    pub fn row(source: &Rep, target: &Rep, parts: &[RepMorphism]) -> RepMorphism {
        let mats = (0..source.dims.len())
            .map(|v| Matrix::vstack_all(target.dims[v], &parts.iter().map(|p| p.mats[v].clone()).collect::<Vec<_>>()))
            .collect();
        RepMorphism::new_unchecked(source, target, mats)
    }

    /// `f ⊕ g`.
    pub fn direct_sum(parts: &[RepMorphism]) -> RepMorphism {
        let alg = parts[0].source.alg.clone();
        let s = Rep::direct_sum(&alg, &parts.iter().map(|p| p.source.clone()).collect::<Vec<_>>());
        let t = Rep::direct_sum(&alg, &parts.iter().map(|p| p.target.clone()).collect::<Vec<_>>());
        let mats = (0..s.dims.len())
            .map(|v| Matrix::block_diag(&parts.iter().map(|p| p.mats[v].clone()).collect::<Vec<_>>()))
            .collect();
        RepMorphism::new_unchecked(&s, &t, mats)
    }

    pub fn with_source(&self, s: &Rep) -> RepMorphism {
        RepMorphism::new_unchecked(s, &self.target, self.mats.clone())
    }

    pub fn with_target(&self, t: &Rep) -> RepMorphism {
        RepMorphism::new_unchecked(&self.source, t, self.mats.clone())
    }

    pub fn to_json(&self) -> Value {
        let qv = self.source.alg.quiver();
        let mut m = serde_json::Map::new();
        for v in 0..qv.num_vertices() {
            m.insert(qv.vertex_name(v).to_string(), matrix_to_json(&self.mats[v]));
        }
        Value::Object(m)
    }
}

/// Inclusions and projections of a direct sum `⊕ parts`.
pub fn sum_injections(alg: &Algebra, parts: &[Rep]) -> (Rep, Vec<RepMorphism>, Vec<RepMorphism>) {
    let total = Rep::direct_sum(alg, parts);
    let n = alg.num_vertices();
    let mut offs = vec![0usize; n];
    let mut inj = Vec::new();
    let mut proj = Vec::new();
    for p in parts {
        let mut im = Vec::with_capacity(n);
        let mut pm = Vec::with_capacity(n);
        for v in 0..n {
            let d = p.dims[v];
            let e: Vec<(usize, usize, Scalar)> = (0..d).map(|i| (i, offs[v] + i, q(1))).collect();
            let i_v = Matrix::from_entries(d, total.dims[v], e);
            pm.push(i_v.transpose());
            im.push(i_v);
            offs[v] += d;
        }
        inj.push(RepMorphism::new_unchecked(p, &total, im));
        proj.push(RepMorphism::new_unchecked(&total, p, pm));
    }
    (total, inj, proj)
}

/// Dimension vector keyed by vertex name.
pub fn dims_map(r: &Rep) -> BTreeMap<String, usize> {
    let qv = r.alg.quiver();
    (0..qv.num_vertices()).map(|v| (qv.vertex_name(v).to_string(), r.dims[v])).collect()
}

/// Sum of the images of all morphisms `T -> X`, as a subrepresentation of
/// `X`. `X` lies in `Fac T` exactly when this is all of `X`.
pub fn trace_in(t: &Rep, x: &Rep) -> Result<(Rep, RepMorphism)> {
    let hs = hom_basis(t, x)?;
    let n = x.alg.num_vertices();
    let spaces: Vec<Matrix> = (0..n)
        .map(|v| {
            let parts: Vec<Matrix> = hs.iter().map(|h| h.mats[v].clone()).collect();
            Matrix::vstack_all(x.dims[v], &parts).row_space_basis()
        })
        .collect();
    x.subrep(&spaces)
}

#[cfg(test)]
mod tests;
