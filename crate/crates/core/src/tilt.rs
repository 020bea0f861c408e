//! Minimal approximations, the two elementary transformations on split
//! complexes, reduction to a tilting module, tilting modules, mutation and
//! the poset of tilting modules ordered by `Fac`.

use serde_json::{json, Value};

use crate::derived::{cone, ghom_dim, in_class_t, r_value, DMorphism, DObject, GHom, GMap};
use crate::error::{Error, Result};
use crate::exactla::{q, span_rank, Scalar, SparseVec};
use crate::rep::{
    decompose, endomorphism_radical, enumerate_indecomposables, ext1_dim, hom_dim, is_indecomposable, is_isomorphic,
    pd_at_most, trace_in, Algebra, EnumerationMode, Rep, RepMorphism,
};

/// `add(⊕ generators)` for pairwise non-isomorphic indecomposable stalk
/// complexes `M[s]`.
#[derive(Clone, Debug)]
pub struct AddSubcat {
    generators: Vec<(Rep, i64)>,
}

impl AddSubcat {
    pub fn new(generators: Vec<(Rep, i64)>) -> Result<Self> {
        for (i, (m, s)) in generators.iter().enumerate() {
            if !is_indecomposable(m)? {
                return Err(Error::Invalid(format!("generator {i} is not indecomposable")));
            }
            for (n, t) in &generators[..i] {
                if s == t && is_isomorphic(m, n)? {
                    return Err(Error::Invalid(format!("generator {i} repeats an earlier one")));
                }
            }
        }
        Ok(AddSubcat { generators })
    }

    /// `add(T)` for a module `T`.
    pub fn of_module(t: &Rep) -> Result<Self> {
        let g = decompose(t)?.grouped()?;
        Ok(AddSubcat { generators: g.into_iter().map(|(r, _)| (r, 0)).collect() })
    }

    pub fn of_object(x: &DObject) -> Self {
        AddSubcat { generators: x.summands().iter().map(|s| (s.rep.clone(), s.shift)).collect() }
    }

    pub fn generators(&self) -> &[(Rep, i64)] {
        &self.generators
    }
}

/// A minimal approximation: `B = ⊕ parts` together with one graded map per
/// part, into `M` (right) or out of `M` (left).
#[derive(Clone, Debug)]
pub struct Approximation {
    pub parts: Vec<(Rep, i64)>,
    /// Index of the generator each part is a copy of.
    pub generator: Vec<usize>,
    pub maps: Vec<GMap>,
}

impl Approximation {
    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// `B -> M` as a morphism of split complexes.
    pub fn as_right(&self, m: &Rep, s: i64) -> DMorphism {
        DMorphism {
            source: self.parts.clone(),
            target: vec![(m.clone(), s)],
            blocks: self.maps.iter().map(|f| vec![f.clone()]).collect(),
        }
    }

    /// `M -> B` as a morphism of split complexes.
    pub fn as_left(&self, m: &Rep, s: i64) -> DMorphism {
        DMorphism { source: vec![(m.clone(), s)], target: self.parts.clone(), blocks: vec![self.maps.clone()] }
    }

    /// The module `B` (all parts in degree zero).
    pub fn module(&self, alg: &Algebra) -> Rep {
        Rep::direct_sum(alg, &self.parts.iter().map(|p| p.0.clone()).collect::<Vec<_>>())
    }

    fn deg0(&self) -> Result<Vec<RepMorphism>> {
        self.maps
            .iter()
            .map(|f| match f {
                GMap::Deg0(h) => Ok(h.clone()),
                _ => Err(Error::Invalid("approximation has maps of nonzero degree".into())),
            })
            .collect()
    }

    /// `M -> B` as a module morphism; every map must have degree zero.
    pub fn left_module_morphism(&self, m: &Rep) -> Result<RepMorphism> {
        let b = self.module(m.algebra());
        Ok(RepMorphism::column(m, &b, &self.deg0()?))
    }

    /// `B -> M` as a module morphism; every map must have degree zero.
    pub fn right_module_morphism(&self, m: &Rep) -> Result<RepMorphism> {
        let b = self.module(m.algebra());
        Ok(RepMorphism::row(&b, m, &self.deg0()?))
    }
}

/// Radical morphisms `T_i -> T_j` inside the subcategory: everything for
/// `i != j`, the radical of `End(T_i)` otherwise.
fn radical_maps(sub: &AddSubcat, i: usize, j: usize) -> Result<Vec<GMap>> {
    let (ti, si) = &sub.generators[i];
    let (tj, sj) = &sub.generators[j];
    if i != j {
        return Ok(GHom::new(ti, *si, tj, *sj)?.basis);
    }
    let e = endomorphism_radical(ti)?;
    Ok((0..e.radical.rows())
        .map(|r| GMap::Deg0(crate::rep::combine(&e.basis, &e.radical.row_dense(r))))
        .collect())
}

/// Picks basis vectors of `h` independent modulo the span of `rad`.
fn complement(h: &GHom, rad: &[Vec<Scalar>]) -> Vec<GMap> {
    let k = h.dim();
    let to_sv = |v: &[Scalar]| -> SparseVec {
        v.iter().enumerate().filter(|(_, x)| **x != q(0)).map(|(i, x)| (i, x.clone())).collect()
    };
    let mut rows: Vec<SparseVec> = rad.iter().map(|v| to_sv(v)).collect();
    let mut rank = span_rank(k, &rows);
    let mut out = Vec::new();
    for (idx, b) in h.basis.iter().enumerate() {
        rows.push(vec![(idx, q(1))]);
        let r = span_rank(k, &rows);
        if r > rank {
            rank = r;
            out.push(b.clone());
        } else {
            rows.pop();
        }
    }
    out
}

/// Right minimal `sub`-approximation `B -> M[s]`. The multiplicity of a
/// generator `T_i` in `B` is the dimension of `Hom(T_i, M)` modulo maps that
/// factor through radical maps of the subcategory.
pub fn right_min_approx(m: &Rep, s: i64, sub: &AddSubcat) -> Result<Approximation> {
    let gens = &sub.generators;
    let homs: Vec<GHom> = gens.iter().map(|(t, st)| GHom::new(t, *st, m, s)).collect::<Result<_>>()?;
    let mut out = Approximation { parts: Vec::new(), generator: Vec::new(), maps: Vec::new() };
    for i in 0..gens.len() {
        if homs[i].dim() == 0 {
            continue;
        }
        let mut rad = Vec::new();
        for j in 0..gens.len() {
            if homs[j].dim() == 0 {
                continue;
            }
            for r in radical_maps(sub, i, j)? {
                for g in &homs[j].basis {
                    rad.push(homs[i].coords(&r.then(g, &gens[i].0)?));
                }
            }
        }
        for f in complement(&homs[i], &rad) {
            out.parts.push(gens[i].clone());
            out.generator.push(i);
            out.maps.push(f);
        }
    }
    Ok(out)
}

/// Left minimal `sub`-approximation `M[s] -> B`.
pub fn left_min_approx(m: &Rep, s: i64, sub: &AddSubcat) -> Result<Approximation> {
    let gens = &sub.generators;
    let homs: Vec<GHom> = gens.iter().map(|(t, st)| GHom::new(m, s, t, *st)).collect::<Result<_>>()?;
    let mut out = Approximation { parts: Vec::new(), generator: Vec::new(), maps: Vec::new() };
    for i in 0..gens.len() {
        if homs[i].dim() == 0 {
            continue;
        }
        let mut rad = Vec::new();
        for j in 0..gens.len() {
            if homs[j].dim() == 0 {
                continue;
            }
            for r in radical_maps(sub, j, i)? {
                for f in &homs[j].basis {
                    rad.push(homs[i].coords(&f.then(&r, m)?));
                }
            }
        }
        for f in complement(&homs[i], &rad) {
            out.parts.push(gens[i].clone());
            out.generator.push(i);
            out.maps.push(f);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    First,
    Second,
    Mutation,
}

impl StepKind {
    fn name(self) -> &'static str {
        match self {
            StepKind::First => "first",
            StepKind::Second => "second",
            StepKind::Mutation => "mutation",
        }
    }
}

/// One elementary transformation. For a second kind step the triangle is
/// `M* -> B -> M -> M*[1]` with `approximation: B -> M`; for a mutation it is
/// the exact sequence `0 -> X -> B -> Y -> 0` with `approximation: X -> B`.
#[derive(Clone, Debug)]
pub struct Step {
    pub kind: StepKind,
    pub before: DObject,
    pub after: DObject,
    pub removed: Option<(Rep, i64)>,
    pub added: Option<(Rep, i64)>,
    pub approximation: Option<DMorphism>,
}

impl Step {
    pub fn to_json(&self) -> Value {
        let part = |p: &Option<(Rep, i64)>| p.as_ref().map(|(r, s)| json!({"rep": r.to_json(), "shift": s}));
        json!({
            "kind": self.kind.name(),
            "before": self.before.to_json(),
            "after": self.after.to_json(),
            "removed": part(&self.removed),
            "added": part(&self.added),
            "approximation": self.approximation.as_ref().map(DMorphism::to_json),
        })
    }
}

#[derive(Clone, Debug)]
pub struct Transcript {
    pub start: DObject,
    pub steps: Vec<Step>,
}

impl Transcript {
    pub fn new(start: DObject) -> Self {
        Transcript { start, steps: Vec::new() }
    }

    pub fn end(&self) -> &DObject {
        self.steps.last().map_or(&self.start, |s| &s.after)
    }

    /// Recomputes every step from its input and checks it reproduces the
    /// recorded output.
    pub fn replay(&self) -> Result<DObject> {
        let mut cur = self.start.clone();
        for (i, step) in self.steps.iter().enumerate() {
            if !cur.is_isomorphic(&step.before)? {
                return Err(Error::Verification(format!("step {i} does not start where the previous ended")));
            }
            let next = match step.kind {
                StepKind::First => first_kind_step(&cur)?.ok_or_else(|| {
                    Error::Verification(format!("step {i}: first kind transformation no longer applies"))
                })?,
                StepKind::Second => second_kind_step(&cur)?.after,
                StepKind::Mutation => {
                    let (x, _) = step.removed.clone().ok_or_else(|| Error::Invalid("mutation without summand".into()))?;
                    let t = cur.underlying_module();
                    let k = decompose(&t)?
                        .summands
                        .iter()
                        .position(|s| is_isomorphic(s, &x).unwrap_or(false))
                        .ok_or_else(|| Error::Verification(format!("step {i}: summand not found")))?;
                    let mu = module_mutation(&t, k)?
                        .ok_or_else(|| Error::Verification(format!("step {i}: mutation no longer applies")))?;
                    DObject::module(&mu.result)?
                }
            };
            if !next.is_isomorphic(&step.after)? {
                return Err(Error::Verification(format!("step {i} does not reproduce its output")));
            }
            cur = next;
        }
        Ok(cur)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "start": self.start.to_json(),
            "steps": self.steps.iter().map(Step::to_json).collect::<Vec<_>>(),
        })
    }
}

fn require_class_t(t: &DObject) -> Result<()> {
    if in_class_t(t)? {
        Ok(())
    } else {
        Err(Error::Precondition("object is not in the class of tilting complexes".into()))
    }
}

/// The transformation of the first kind, or `None` when `Hom(Z_0, Z_1[1])`
/// is nonzero (or there is nothing above the lowest degree).
pub fn first_kind_step(t: &DObject) -> Result<Option<DObject>> {
    require_class_t(t)?;
    let Some(i0) = t.min_shift() else { return Ok(None) };
    if r_value(t) == 0 {
        return Ok(None);
    }
    let z0 = t.filter(|s| s.shift == i0);
    let z1 = t.filter(|s| s.shift == i0 + 1);
    let parts: Vec<(Rep, i64)> = if z1.is_empty() {
        t.expanded().into_iter().map(|(r, s)| if s > i0 { (r, s - 1) } else { (r, s) }).collect()
    } else if ghom_dim(&z0, &z1, 0)? == 0 {
        t.expanded().into_iter().map(|(r, s)| if s == i0 + 1 { (r, i0) } else { (r, s) }).collect()
    } else {
        return Ok(None);
    };
    Ok(Some(DObject::new(t.algebra(), &parts)?))
}

/// The transformation of the second kind at the first admissible summand
/// `M` of `Z_1[i_0 + 1]`.
pub fn second_kind_step(t: &DObject) -> Result<Step> {
    require_class_t(t)?;
    let r = r_value(t);
    if r == 0 {
        return Err(Error::Precondition("r(T) = 0".into()));
    }
    let i0 = t.min_shift().unwrap();
    let z0 = t.filter(|s| s.shift == i0);
    let z1 = t.filter(|s| s.shift == i0 + 1);
    if z1.is_empty() || ghom_dim(&z0, &z1, 0)? == 0 {
        return Err(Error::Precondition("apply transformations of the first kind first".into()));
    }
    // Summands M of Z_1 receiving maps from Z_0, those with no maps from the
    // rest of Z_1 first. The sink condition cannot always be met (over A_3,
    // S1 ⊕ P3[1] ⊕ P2[1] has none), so the others are tried as a fallback.
    let mut sinks = Vec::new();
    let mut others = Vec::new();
    for (k, s) in z1.summands().iter().enumerate() {
        let single = DObject::new(t.algebra(), &[(s.rep.clone(), s.shift)])?;
        if ghom_dim(&z0, &single, 0)? == 0 {
            continue;
        }
        let mut sink = true;
        for (l, o) in z1.summands().iter().enumerate() {
            if l != k && hom_dim(&o.rep, &s.rep)? != 0 {
                sink = false;
                break;
            }
        }
        if sink { &mut sinks } else { &mut others }.push((s.rep.clone(), s.shift));
    }
    for (m, sm) in sinks.into_iter().chain(others) {
        if let Some(step) = exchange(t, &m, sm, r)? {
            return Ok(step);
        }
    }
    Err(Error::NoAdmissibleSummand)
}

/// Replaces `M[sm]` in `t` by the cocone of its right minimal approximation
/// by the other summands, if the result lies in the class and lowers `r`.
fn exchange(t: &DObject, m: &Rep, sm: i64, r: usize) -> Result<Option<Step>> {
    let parts: Vec<(Rep, i64)> = t
        .summands()
        .iter()
        .filter(|s| !(s.shift == sm && is_isomorphic(&s.rep, m).unwrap_or(false)))
        .map(|s| (s.rep.clone(), s.shift))
        .collect();
    let rest = DObject::new(t.algebra(), &parts)?;
    let sub = AddSubcat::of_object(&rest);
    let approx = right_min_approx(m, sm, &sub)?;
    let f = approx.as_right(m, sm);
    let m_star = if approx.is_zero() {
        DObject::new(t.algebra(), &[(m.clone(), sm - 1)])?
    } else {
        cone(&f)?.shift(-1)
    };
    if m_star.len() != 1 {
        return Ok(None);
    }
    let after = rest.direct_sum(&m_star)?;
    if !in_class_t(&after)? || r_value(&after) >= r {
        return Ok(None);
    }
    let added = m_star.expanded().pop();
    Ok(Some(Step {
        kind: StepKind::Second,
        before: t.clone(),
        after,
        removed: Some((m.clone(), sm)),
        added,
        approximation: Some(f),
    }))
}

/// Result of reducing an object of the class of tilting complexes.
#[derive(Clone, Debug)]
pub struct Reduction {
    /// The tilting module `T'[-i_0]`.
    pub module: Rep,
    pub shift: i64,
    pub transcript: Transcript,
}

pub fn reduce_to_tilting(t: &DObject) -> Result<Reduction> {
    require_class_t(t)?;
    let n = t.algebra().num_vertices() as i64;
    let bound = n * (t.spread() + 1) + n + 1;
    let mut tr = Transcript::new(t.clone());
    let mut cur = t.clone();
    while r_value(&cur) > 0 {
        if tr.steps.len() as i64 > bound {
            return Err(Error::Verification("reduction did not terminate within its bound".into()));
        }
        let step = match first_kind_step(&cur)? {
            Some(next) => Step {
                kind: StepKind::First,
                before: cur.clone(),
                after: next,
                removed: None,
                added: None,
                approximation: None,
            },
            None => second_kind_step(&cur)?,
        };
        cur = step.after.clone();
        tr.steps.push(step);
    }
    let shift = cur.min_shift().unwrap_or(0);
    Ok(Reduction { module: cur.underlying_module(), shift, transcript: tr })
}

/// The exact sequence `0 -> P -> X -> Y -> 0` with `X, Y ∈ add T`, if the
/// left approximation of `P` provides one.
pub struct Coresolution {
    pub approx: Approximation,
    pub u: RepMorphism,
    pub cokernel: Rep,
}

fn in_add(sub: &AddSubcat, m: &Rep) -> Result<bool> {
    for piece in decompose(m)?.summands {
        let mut found = false;
        for (g, _) in sub.generators() {
            if is_isomorphic(g, &piece)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn coresolution(p: &Rep, sub: &AddSubcat) -> Result<Option<Coresolution>> {
    let approx = left_min_approx(p, 0, sub)?;
    let u = approx.left_module_morphism(p)?;
    if !u.is_injective() {
        return Ok(None);
    }
    let (y, _) = u.cokernel();
    if !in_add(sub, &y)? {
        return Ok(None);
    }
    Ok(Some(Coresolution { approx, u, cokernel: y }))
}

/// Multiplicity free, projective dimension at most one, no self-extensions
/// and a coresolution of every indecomposable projective in `add T`.
pub fn is_tilting_module(t: &Rep) -> Result<bool> {
    if t.is_zero() {
        return Ok(false);
    }
    let alg = t.algebra().clone();
    let grouped = decompose(t)?.grouped()?;
    let mult_free = grouped.iter().all(|(_, k)| *k == 1);
    let pd = grouped.iter().all(|(m, _)| pd_at_most(m, 1).is_some());
    let rigid = ext1_dim(t, t)? == 0;
    let mut full = mult_free && pd && rigid;
    if full {
        let sub = AddSubcat::of_module(t)?;
        for v in 0..alg.num_vertices() {
            if coresolution(&Rep::projective(&alg, v), &sub)?.is_none() {
                full = false;
                break;
            }
        }
    }
    if alg.is_path_algebra() {
        let shortcut = mult_free && rigid && grouped.len() == alg.num_vertices();
        if shortcut != full {
            return Err(Error::Verification("tilting criteria disagree".into()));
        }
    }
    Ok(full)
}

/// Exchange of one summand of a tilting module along an exact sequence
/// `0 -> A -> B -> C -> 0` with `B ∈ add(T̄)`.
#[derive(Clone, Debug)]
pub struct Mutation {
    pub result: Rep,
    pub removed: Rep,
    pub added: Rep,
    /// True when the removed summand is `A` (left approximation `A -> B`),
    /// false when it is `C` (right approximation `B -> C`).
    pub left: bool,
    pub approx: Approximation,
    /// `A -> B`.
    pub inclusion: RepMorphism,
    /// `B -> C`.
    pub projection: RepMorphism,
}

impl Mutation {
    pub fn step(&self, before: &Rep) -> Result<Step> {
        let approximation =
            if self.left { self.approx.as_left(&self.removed, 0) } else { self.approx.as_right(&self.removed, 0) };
        Ok(Step {
            kind: StepKind::Mutation,
            before: DObject::module(before)?,
            after: DObject::module(&self.result)?,
            removed: Some((self.removed.clone(), 0)),
            added: Some((self.added.clone(), 0)),
            approximation: Some(approximation),
        })
    }
}

/// Replaces the `k`-th indecomposable summand `X` (in decomposition order)
/// by the cokernel of its left `add(T̄)`-approximation when that is
/// injective, or else by the kernel of its right approximation when that is
/// surjective.
pub fn module_mutation(t: &Rep, k: usize) -> Result<Option<Mutation>> {
    let d = decompose(t)?;
    if k >= d.summands.len() {
        return Err(Error::Invalid(format!("summand index {k} out of range")));
    }
    let x = d.summands[k].clone();
    let rest: Vec<Rep> = d.summands.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, s)| s.clone()).collect();
    let alg = t.algebra();
    if rest.is_empty() {
        return Ok(None);
    }
    let sub = AddSubcat::of_module(&Rep::direct_sum(alg, &rest))?;
    let finish = |y: Rep, left: bool, approx: Approximation, inclusion: RepMorphism, projection: RepMorphism| {
        if !is_indecomposable(&y)? || in_add(&sub, &y)? {
            return Ok(None);
        }
        let mut parts = rest.clone();
        parts.push(y.clone());
        let result = Rep::direct_sum(alg, &parts);
        if !is_tilting_module(&result)? {
            return Ok(None);
        }
        Ok(Some(Mutation { result, removed: x.clone(), added: y, left, approx, inclusion, projection }))
    };
    let approx = left_min_approx(&x, 0, &sub)?;
    if !approx.is_zero() {
        let u = approx.left_module_morphism(&x)?;
        if u.is_injective() {
            let (y, projection) = u.cokernel();
            return finish(y, true, approx, u, projection);
        }
    }
    let approx = right_min_approx(&x, 0, &sub)?;
    if !approx.is_zero() {
        let f = approx.right_module_morphism(&x)?;
        if f.is_surjective() {
            let (y, inclusion) = f.kernel();
            return finish(y, false, approx, inclusion, f);
        }
    }
    Ok(None)
}

/// `Fac T ⊆ Fac U`.
pub fn fac_leq(t: &Rep, u: &Rep) -> Result<bool> {
    for x in decompose(t)?.summands {
        let (tr, _) = trace_in(u, &x)?;
        if tr.dims() != x.dims() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Tilting modules with the covering relation of `Fac` inclusion.
#[derive(Clone, Debug)]
pub struct TiltingGraph {
    /// Each tilting module as the indices of its summands in `indecomposables`.
    pub modules: Vec<Vec<usize>>,
    pub indecomposables: Vec<Rep>,
    /// `(u, t)` with `Fac T ⊊ Fac U` a cover.
    pub edges: Vec<(usize, usize)>,
}

impl TiltingGraph {
    pub fn module(&self, i: usize) -> Rep {
        let alg = self.indecomposables[0].algebra();
        Rep::direct_sum(alg, &self.modules[i].iter().map(|&j| self.indecomposables[j].clone()).collect::<Vec<_>>())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.modules.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn label(&self, i: usize) -> String {
        let parts: Vec<String> =
            self.modules[i].iter().map(|&j| format!("{:?}", self.indecomposables[j].dims())).collect();
        parts.join(" ")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph tilting {\n");
        for i in 0..self.modules.len() {
            out.push_str(&format!("  t{i} [label=\"{}\"];\n", self.label(i)));
        }
        for (u, t) in &self.edges {
            out.push_str(&format!("  t{u} -> t{t};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "modules": (0..self.modules.len()).map(|i| {
                self.modules[i].iter().map(|&j| crate::rep::dims_map(&self.indecomposables[j])).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "edges": self.edges,
            "connected": self.is_connected(),
        })
    }
}

fn extend_subsets(
    compat: &[Vec<bool>],
    need: usize,
    start: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if cur.len() == need {
        out.push(cur.clone());
        return;
    }
    for i in start..compat.len() {
        if compat[i][i] && cur.iter().all(|&j| compat[i][j]) {
            cur.push(i);
            extend_subsets(compat, need, i + 1, cur, out);
            cur.pop();
        }
    }
}

/// All tilting modules of a representation-finite hereditary algebra and the
/// Hasse diagram of `Fac` inclusion.
pub fn tilting_hasse(alg: &Algebra, dim_cap: usize) -> Result<TiltingGraph> {
    if !alg.is_path_algebra() {
        return Err(Error::NotHereditary);
    }
    let inds = match enumerate_indecomposables(alg, dim_cap, EnumerationMode::Strict) {
        Ok(r) => r.reps,
        Err(Error::InfiniteFamily(d)) => {
            return Err(Error::EnumerationIncomplete(format!("infinite family at {d:?}")));
        }
        Err(e) => return Err(e),
    };
    let k = inds.len();
    let mut ext = vec![vec![0usize; k]; k];
    for i in 0..k {
        for j in 0..k {
            ext[i][j] = ext1_dim(&inds[i], &inds[j])?;
        }
    }
    let compat: Vec<Vec<bool>> =
        (0..k).map(|i| (0..k).map(|j| ext[i][j] == 0 && ext[j][i] == 0).collect()).collect();
    let mut candidates = Vec::new();
    extend_subsets(&compat, alg.num_vertices(), 0, &mut Vec::new(), &mut candidates);
    let mut g = TiltingGraph { modules: Vec::new(), indecomposables: inds, edges: Vec::new() };
    for c in candidates {
        g.modules.push(c);
        let m = g.module(g.modules.len() - 1);
        if !is_tilting_module(&m)? {
            g.modules.pop();
        }
    }
    let n = g.modules.len();
    let mods: Vec<Rep> = (0..n).map(|i| g.module(i)).collect();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = i == j || fac_leq(&mods[i], &mods[j])?;
        }
    }
    for t in 0..n {
        for u in 0..n {
            if t == u || !leq[t][u] {
                continue;
            }
            let covered = (0..n).any(|w| w != t && w != u && leq[t][w] && leq[w][u]);
            if !covered {
                g.edges.push((u, t));
            }
        }
    }
    Ok(g)
}

/// Dimension of the common part of two summand lists (used for checks).
pub fn shared_summands(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|x| b.contains(x)).count()
}
