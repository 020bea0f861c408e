//! Bound quiver algebras `kQ/I` for acyclic `Q`.
//!
//! Paths are stored in traversal order: `[a, b]` means "first `a`, then `b`",
//! so `[a, b]` requires `t(a) = s(b)`. Multiplication `p * q` of basis paths
//! is concatenation `p` then `q`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{parse_scalar, q, scalar_to_string, Matrix, Scalar, SparseVec};
use crate::quiver::{json_id, ArrowJson, Quiver};

/// A path: a start vertex and arrows in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.source, |&a| q.arrow(a).target)
    }

    /// `self` then `other`, if composable.
    pub fn concat(&self, other: &Path, q: &Quiver) -> Option<Path> {
        if self.target(q) != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: self.source, arrows })
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertex_name(self.source))
        } else {
            self.arrows.iter().map(|&a| q.arrow(a).name.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn new(q: &Quiver, terms: Vec<(Scalar, Path)>) -> Result<Self> {
        let terms: Vec<(Scalar, Path)> = terms.into_iter().filter(|(c, _)| *c != q0()).collect();
        let first = terms
            .first()
            .ok_or_else(|| Error::Invalid("relation has no nonzero coefficient".into()))?;
        let (s, t) = (first.1.source, first.1.target(q));
        for (_, p) in &terms {
            if p.len() < 2 {
                return Err(Error::Invalid("relation paths must have length at least 2".into()));
            }
            check_path(q, p)?;
            if p.source != s || p.target(q) != t {
                return Err(Error::Invalid("relation paths are not parallel".into()));
            }
        }
        Ok(Relation { terms })
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.terms[0].1.target(q)
    }
}

fn q0() -> Scalar {
    q(0)
}

fn check_path(q: &Quiver, p: &Path) -> Result<()> {
    let mut at = p.source;
    for &a in &p.arrows {
        let arr = q.arrow(a);
        if arr.source != at {
            return Err(Error::Invalid(format!("arrow `{}` does not continue the path", arr.name)));
        }
        at = arr.target;
    }
    Ok(())
}

/// How an algebra was produced, for callers whose guarantees only cover
/// particular families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    General,
    Squid,
    /// Endomorphism algebra of a tilting module built by the End-cover check.
    EndOfTilting,
}

/// A finite-dimensional bound quiver algebra with a cached path basis.
#[derive(Clone, Debug)]
pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<Path>,
    /// `block[(s,t)]` lists basis indices of paths `s ~> t`.
    block: BTreeMap<(usize, usize), Vec<usize>>,
    /// Normal form of every path of the quiver.
    reduce: HashMap<Path, SparseVec>,
    ideal_dim: usize,
    degenerate: bool,
    family: Family,
    label: String,
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.relations == other.relations
    }
}

impl Eq for BoundQuiverAlgebra {}

impl BoundQuiverAlgebra {
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Result<Self> {
        if !quiver.is_acyclic() {
            return Err(Error::OrientedCycle);
        }
        for r in &relations {
            for (_, p) in &r.terms {
                check_path(&quiver, p)?;
            }
        }
        let n = quiver.num_vertices();
        // all paths, grouped by endpoints
        let mut all: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
        for v in 0..n {
            let mut stack = vec![Path::trivial(v)];
            while let Some(p) = stack.pop() {
                let t = p.target(&quiver);
                for a in quiver.arrows_from(t) {
                    let mut next = p.clone();
                    next.arrows.push(a);
                    stack.push(next);
                }
                all.entry((v, t)).or_default().push(p);
            }
        }
        let mut basis = Vec::new();
        let mut block: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        let mut reduce: HashMap<Path, SparseVec> = HashMap::new();
        let mut ideal_dim = 0;
        for (&(s, t), paths) in all.iter_mut() {
            // columns: longest first, then lexicographically largest first, so
            // normal words are the short, small paths
            paths.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| b.arrows.cmp(&a.arrows)));
            let col: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let mut gens: Vec<SparseVec> = Vec::new();
            for r in &relations {
                let (a, b) = (r.source(), r.target(&quiver));
                let (Some(us), Some(ws)) = (all_get(&quiver, s, a), all_get(&quiver, b, t)) else {
                    continue;
                };
                for u in &us {
                    for w in &ws {
                        let mut row = Vec::new();
                        for (c, p) in &r.terms {
                            let full = Path {
                                source: s,
                                arrows: [u.arrows.as_slice(), &p.arrows, &w.arrows].concat(),
                            };
                            row.push((col[&full], c.clone()));
                        }
                        gens.push(crate::exactla::sv_normalize(row));
                    }
                }
            }
            let rref = Matrix::from_sparse_rows(paths.len(), gens).rref();
            ideal_dim += rref.pivots.len();
            let mut is_pivot = vec![None; paths.len()];
            for (i, &p) in rref.pivots.iter().enumerate() {
                is_pivot[p] = Some(i);
            }
            // normal words in ascending order
            let mut local: Vec<usize> = (0..paths.len()).filter(|&c| is_pivot[c].is_none()).collect();
            local.reverse();
            let mut col_to_basis = HashMap::new();
            let ids: Vec<usize> = local
                .iter()
                .map(|&c| {
                    let id = basis.len();
                    basis.push(paths[c].clone());
                    col_to_basis.insert(c, id);
                    id
                })
                .collect();
            if !ids.is_empty() {
                block.insert((s, t), ids);
            }
            for (c, p) in paths.iter().enumerate() {
                let nf = match is_pivot[c] {
                    None => vec![(col_to_basis[&c], q(1))],
                    Some(i) => rref.rows[i]
                        .iter()
                        .filter(|(j, _)| *j != c)
                        .map(|(j, v)| (col_to_basis[j], -v.clone()))
                        .collect(),
                };
                reduce.insert(p.clone(), crate::exactla::sv_normalize(nf));
            }
        }
        // basis order: group by (source, target) then length; already so
        Ok(BoundQuiverAlgebra {
            quiver,
            relations,
            basis,
            block,
            reduce,
            ideal_dim,
            degenerate: false,
            family: Family::General,
            label: String::new(),
        })
    }

    pub fn path_algebra(q: &Quiver) -> Result<Self> {
        let mut a = Self::new(q.clone(), Vec::new())?;
        a.label = "kQ".into();
        Ok(a)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, s: impl Into<String>) {
        self.label = s.into();
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub(crate) fn set_family(&mut self, f: Family) {
        self.family = f;
    }

    /// True for squids built with some branch length zero.
    pub fn is_degenerate_squid(&self) -> bool {
        self.degenerate
    }

    /// No relations survive: `kQ` itself.
    pub fn is_path_algebra(&self) -> bool {
        self.ideal_dim == 0
    }

    /// Basis indices of paths `s ~> t`.
    pub fn paths_between(&self, s: usize, t: usize) -> &[usize] {
        self.block.get(&(s, t)).map_or(&[], |v| v.as_slice())
    }

    pub fn basis_source(&self, i: usize) -> usize {
        self.basis[i].source
    }

    pub fn basis_target(&self, i: usize) -> usize {
        self.basis[i].target(&self.quiver)
    }

    /// Basis index of the trivial path at `v`.
    pub fn idempotent(&self, v: usize) -> usize {
        self.index_of(&Path::trivial(v)).expect("vertex idempotent in basis")
    }

    /// Basis index of an arrow.
    pub fn arrow_element(&self, a: usize) -> usize {
        let p = Path { source: self.quiver.arrow(a).source, arrows: vec![a] };
        self.index_of(&p).expect("arrows are never relations")
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        let nf = self.reduce.get(p)?;
        match nf.as_slice() {
            [(i, c)] if *c == q(1) && self.basis[*i] == *p => Some(*i),
            _ => None,
        }
    }

    /// Normal form of an arbitrary path of the quiver.
    pub fn reduce_path(&self, p: &Path) -> SparseVec {
        self.reduce.get(p).cloned().unwrap_or_default()
    }

    /// Product of basis elements `i * j` (first `i`, then `j`).
    pub fn mul_basis(&self, i: usize, j: usize) -> SparseVec {
        match self.basis[i].concat(&self.basis[j], &self.quiver) {
            Some(p) => self.reduce_path(&p),
            None => Vec::new(),
        }
    }

    /// Product of algebra elements in basis coordinates.
    pub fn mul(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                for (k, c) in self.mul_basis(*i, *j) {
                    acc.push((k, a * b * c));
                }
            }
        }
        crate::exactla::sv_normalize(acc)
    }

    /// Radical basis elements: normal words of positive length.
    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.basis[i].is_empty()).collect()
    }

    pub fn basis_display(&self, i: usize) -> String {
        self.basis[i].display(&self.quiver)
    }

    pub fn to_json(&self) -> AlgebraJson {
        let qj = self.quiver.to_json();
        AlgebraJson {
            vertices: qj.vertices,
            arrows: qj.arrows,
            relations: self
                .relations
                .iter()
                .map(|r| RelationJson {
                    paths: r
                        .terms
                        .iter()
                        .map(|(_, p)| p.arrows.iter().map(|&a| self.quiver.arrow(a).name.clone()).collect())
                        .collect(),
                    coeffs: r
                        .terms
                        .iter()
                        .map(|(c, _)| serde_json::Value::String(scalar_to_string(c)))
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Self> {
        let quiver = Quiver::from_json(&crate::quiver::QuiverJson {
            vertices: j.vertices.clone(),
            arrows: j.arrows.clone(),
        })?;
        let mut rels = Vec::new();
        for r in &j.relations {
            if r.paths.len() != r.coeffs.len() {
                return Err(Error::Invalid("relation paths and coeffs differ in length".into()));
            }
            let mut terms = Vec::new();
            for (p, c) in r.paths.iter().zip(&r.coeffs) {
                let arrows = p.iter().map(|a| quiver.arrow_index(a)).collect::<Result<Vec<_>>>()?;
                let first = *arrows
                    .first()
                    .ok_or_else(|| Error::Invalid("empty path in relation".into()))?;
                let c = parse_scalar(&json_id(c))?;
                terms.push((c, Path { source: quiver.arrow(first).source, arrows }));
            }
            rels.push(Relation::new(&quiver, terms)?);
        }
        Self::new(quiver, rels)
    }
}

fn all_get(q: &Quiver, s: usize, t: usize) -> Option<Vec<Path>> {
    let mut out = Vec::new();
    let mut stack = vec![Path::trivial(s)];
    while let Some(p) = stack.pop() {
        let e = p.target(q);
        if e == t {
            out.push(p.clone());
        }
        for a in q.arrows_from(e) {
            let mut n = p.clone();
            n.arrows.push(a);
            stack.push(n);
        }
    }
    (!out.is_empty()).then_some(out)
}

/// Algebra JSON: the quiver schema plus relations; each relation path lists
/// arrow ids in traversal order (first arrow first).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub vertices: Vec<serde_json::Value>,
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub relations: Vec<RelationJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationJson {
    pub paths: Vec<Vec<String>>,
    pub coeffs: Vec<serde_json::Value>,
}

/// Squid algebra `S(t,p,tau)`. Vertices `x`, `y` and branch vertices `c{i}_{j}`;
/// arrows `a1, a2: x -> y`, `b{i}: y -> c{i}_1` and `c{i}_{j}: c{i}_{j} ->
/// c{i}_{j+1}`. Relations `[a1,b1] = [a2,b2] = 0` and
/// `[a2,b_i] = tau_i [a1,b_i]` for `i >= 3`. A branch of length zero has no
/// `b_i`, and the relations mentioning it are dropped.
pub fn squid(t: usize, p: &[usize], tau: &[Scalar]) -> Result<BoundQuiverAlgebra> {
    if t < 2 {
        return Err(Error::Invalid("squid needs t >= 2".into()));
    }
    if p.len() != t {
        return Err(Error::Invalid(format!("expected {t} branch lengths, got {}", p.len())));
    }
    if tau.len() != t - 2 {
        return Err(Error::Invalid(format!("expected {} parameters, got {}", t - 2, tau.len())));
    }
    for (i, x) in tau.iter().enumerate() {
        if *x == q(0) {
            return Err(Error::Invalid("squid parameters must be nonzero".into()));
        }
        if tau[..i].contains(x) {
            return Err(Error::Invalid("squid parameters must be pairwise distinct".into()));
        }
    }
    let mut vs: Vec<String> = vec!["x".into(), "y".into()];
    let mut arrows: Vec<(String, String, String)> =
        vec![("a1".into(), "x".into(), "y".into()), ("a2".into(), "x".into(), "y".into())];
    for (i, &len) in p.iter().enumerate() {
        let i = i + 1;
        for j in 1..=len {
            vs.push(format!("c{i}_{j}"));
        }
        if len > 0 {
            arrows.push((format!("b{i}"), "y".into(), format!("c{i}_1")));
        }
        for j in 1..len {
            arrows.push((format!("c{i}_{j}"), format!("c{i}_{j}"), format!("c{i}_{}", j + 1)));
        }
    }
    let quiver = Quiver::new(&vs, &arrows)?;
    let a1 = quiver.arrow_index("a1")?;
    let a2 = quiver.arrow_index("a2")?;
    let x = quiver.vertex_index("x")?;
    let path = |arrs: Vec<usize>| Path { source: x, arrows: arrs };
    let mut rels = Vec::new();
    for (i, &len) in p.iter().enumerate() {
        if len == 0 {
            continue;
        }
        let b = quiver.arrow_index(&format!("b{}", i + 1))?;
        let terms = match i {
            0 => vec![(q(1), path(vec![a1, b]))],
            1 => vec![(q(1), path(vec![a2, b]))],
            _ => vec![(q(1), path(vec![a2, b])), (-tau[i - 2].clone(), path(vec![a1, b]))],
        };
        rels.push(Relation::new(&quiver, terms)?);
    }
    let mut alg = BoundQuiverAlgebra::new(quiver, rels)?;
    alg.degenerate = p.contains(&0);
    alg.family = Family::Squid;
    let ps: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    let ts: Vec<String> = tau.iter().map(scalar_to_string).collect();
    alg.label = format!("S({t},({}),({}))", ps.join(","), ts.join(","));
    Ok(alg)
}
