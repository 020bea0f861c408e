use std::sync::Arc;

use super::lift::{stabilizer, Lift};
use super::{build_cover, CategoryCover};
use crate::algebra::{BoundQuiverAlgebra, Path, Relation};
use crate::error::{Error, Result};
use crate::exactla::{q, span_rank, Matrix, Scalar, SparseVec};
use crate::quiver::{is_galois_quiver_covering, Quiver, QuiverCovering};
use crate::rep::{decompose, endomorphism_radical, ext1_dim, hom_basis, isomorphism, pd_at_most, Rep, RepMorphism};
use crate::tilt::{coresolution, AddSubcat};

/// The covering of `End(T)` induced by lifts of the summands of `T`.
#[derive(Clone, Debug)]
pub struct EndCover {
    /// `End(T)` as a bound quiver algebra; vertex `i` is the summand `T_i`
    /// and an arrow `j -> i` is an irreducible map `T_i -> T_j`.
    pub end_algebra: Arc<BoundQuiverAlgebra>,
    pub cover: CategoryCover,
    pub summands: Vec<Rep>,
    pub lifts: Vec<Rep>,
    /// Name and outcome of every verification that was run.
    pub checks: Vec<(String, bool)>,
}

fn coords(basis: &[RepMorphism], f: &RepMorphism) -> Vec<Scalar> {
    if basis.is_empty() {
        return Vec::new();
    }
    let len = f.flat_len();
    let cols: Vec<SparseVec> = basis.iter().map(RepMorphism::flatten).collect();
    let a = Matrix::from_sparse_rows(len, cols).transpose();
    let mut rhs = vec![q(0); len];
    for (j, v) in f.flatten() {
        rhs[j] = v;
    }
    a.solve(&rhs).expect("morphism lies in the hom space")
}

fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| **x != q(0)).map(|(i, x)| (i, x.clone())).collect()
}

/// Homogeneous hom spaces `Hom(T̃_i, ᵍT̃_j)` of the total category.
struct Homs<'a> {
    c: &'a CategoryCover,
    lifts: Vec<Rep>,
    basis: Vec<Vec<Vec<Vec<RepMorphism>>>>,
}

impl<'a> Homs<'a> {
    fn new(c: &'a CategoryCover, lifts: Vec<Rep>) -> Result<Self> {
        let m = c.group().order();
        let n = lifts.len();
        let mut basis = vec![vec![vec![Vec::new(); m]; n]; n];
        for i in 0..n {
            for j in 0..n {
                for g in 0..m {
                    basis[i][j][g] = hom_basis(&lifts[i], &c.translate(g, &lifts[j]))?;
                }
            }
        }
        Ok(Homs { c, lifts, basis })
    }

    /// `f: T̃_i -> ^{g1}T̃_k` followed by `^{g1}f': ^{g1}T̃_k -> ^{g1 g2}T̃_j`.
    fn compose(&self, f: &RepMorphism, g1: usize, f2: &RepMorphism, j: usize, g2: usize) -> RepMorphism {
        let g = self.c.group().mul(g1, g2);
        let moved = self.c.translate_morphism(g1, f2);
        f.then(&moved.with_source(&f.target)).with_target(&self.c.translate(g, &self.lifts[j]))
    }
}

/// Builds `End(T)` from the radical filtration of the homogeneous hom
/// spaces, the covering of its quiver by the objects `ᵍT̃_i`, and checks the
/// covering and the tilting properties of the lifts over the total algebra.
pub fn induced_end_cover(c: &CategoryCover, t: &Rep, lifts: &[Lift]) -> Result<EndCover> {
    let summands = decompose(t)?.summands;
    let n = summands.len();
    let group = c.group().clone();
    let m = group.order();
    let e = group.identity();
    let mut checks: Vec<(String, bool)> = Vec::new();
    let record = |name: &str, ok: bool, checks: &mut Vec<(String, bool)>| -> Result<()> {
        checks.push((name.to_string(), ok));
        if ok {
            Ok(())
        } else {
            Err(Error::Verification(name.to_string()))
        }
    };

    let mut tl = Vec::with_capacity(n);
    for s in &summands {
        let l = lifts
            .iter()
            .find(|l| l.shift == 0 && matches!(isomorphism(&l.base, s), Ok(Some(_))))
            .ok_or_else(|| Error::Precondition("a summand of T has no lift".into()))?;
        tl.push(l.total.clone());
    }
    let mut free = true;
    for x in &tl {
        free &= stabilizer(c, x)? == vec![e];
    }
    record("trivial stabilisers", free, &mut checks)?;

    let homs = Homs::new(c, tl.clone())?;
    // radical of each homogeneous piece, in coordinates
    let mut rad: Vec<Vec<Vec<Vec<Vec<Scalar>>>>> = vec![vec![vec![Vec::new(); m]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for g in 0..m {
                let b = &homs.basis[i][j][g];
                rad[i][j][g] = if i == j && g == e {
                    let er = endomorphism_radical(&tl[i])?;
                    (0..er.radical.rows())
                        .map(|r| coords(b, &crate::rep::combine(&er.basis, &er.radical.row_dense(r))))
                        .collect()
                } else {
                    (0..b.len()).map(|k| (0..b.len()).map(|l| if l == k { q(1) } else { q(0) }).collect()).collect()
                };
            }
        }
    }
    let rad_maps = |i: usize, j: usize, g: usize| -> Vec<RepMorphism> {
        rad[i][j][g].iter().map(|v| crate::rep::combine(&homs.basis[i][j][g], v)).collect()
    };
    // irreducible homogeneous maps: a complement of rad^2 in rad
    let mut irreducible: Vec<(usize, usize, usize, RepMorphism)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for g in 0..m {
                let b = &homs.basis[i][j][g];
                if rad[i][j][g].is_empty() {
                    continue;
                }
                let mut rows: Vec<SparseVec> = Vec::new();
                for k in 0..n {
                    for g1 in 0..m {
                        let g2 = group.mul(group.inv(g1), g);
                        let left = rad_maps(i, k, g1);
                        if left.is_empty() {
                            continue;
                        }
                        for f2 in rad_maps(k, j, g2) {
                            for f in &left {
                                rows.push(to_sparse(&coords(b, &homs.compose(f, g1, &f2, j, g2))));
                            }
                        }
                    }
                }
                let mut rank = span_rank(b.len(), &rows);
                for v in &rad[i][j][g] {
                    rows.push(to_sparse(v));
                    let r = span_rank(b.len(), &rows);
                    if r > rank {
                        rank = r;
                        irreducible.push((i, j, g, crate::rep::combine(b, v)));
                    } else {
                        rows.pop();
                    }
                }
            }
        }
    }

    // quiver of End(T): arrow j -> i for each irreducible T_i -> T_j
    let vnames: Vec<String> = (1..=n).map(|i| format!("T{i}")).collect();
    let mut counts = std::collections::BTreeMap::new();
    let anames: Vec<(String, String, String)> = irreducible
        .iter()
        .map(|(i, j, _, _)| {
            let k = counts.entry((*j, *i)).or_insert(0usize);
            *k += 1;
            (format!("{}_{}_{}", j + 1, i + 1, k), vnames[*j].clone(), vnames[*i].clone())
        })
        .collect();
    let bq = Quiver::new(&vnames, &anames)?;
    if !bq.is_acyclic() {
        return Err(Error::Unsupported("End(T) has an oriented cycle".into()));
    }

    // evaluate a path upstairs: returns (degree, T̃_t -> ^{deg}T̃_s)
    let eval = |p: &Path| -> (usize, RepMorphism) {
        let s = p.source;
        let mut cur: Option<(usize, RepMorphism, usize)> = None; // (deg, map, target summand)
        for &a in p.arrows.iter().rev() {
            let (i, j, g, f) = &irreducible[a];
            cur = Some(match cur {
                None => (*g, f.clone(), *j),
                Some((d, h, k)) => {
                    debug_assert_eq!(k, *i);
                    (group.mul(d, *g), homs.compose(&h, d, f, *j, *g), *j)
                }
            });
        }
        let (d, h, k) = cur.expect("nonempty path");
        debug_assert_eq!(k, s);
        (d, h)
    };
    let mut relations = Vec::new();
    for s in 0..n {
        for t in 0..n {
            let paths = paths_between(&bq, s, t);
            for g in 0..m {
                let ps: Vec<(&Path, RepMorphism)> = paths
                    .iter()
                    .filter_map(|p| {
                        let (d, h) = eval(p);
                        (d == g).then_some((p, h))
                    })
                    .collect();
                if ps.is_empty() {
                    continue;
                }
                let b = &homs.basis[t][s][g];
                let cols: Vec<SparseVec> = ps.iter().map(|(_, h)| to_sparse(&coords(b, h))).collect();
                let ker = Matrix::from_sparse_rows(b.len(), cols).transpose().kernel_basis();
                for col in 0..ker.cols() {
                    let terms: Vec<(Scalar, Path)> = (0..ps.len())
                        .filter(|&r| ker.get(r, col) != q(0))
                        .map(|r| (ker.get(r, col), ps[r].0.clone()))
                        .collect();
                    if terms.iter().any(|(_, p)| p.len() < 2) {
                        return Err(Error::Verification("an irreducible map lies in the square of the radical".into()));
                    }
                    relations.push(Relation::new(&bq, terms)?);
                }
            }
        }
    }
    let mut end_alg = BoundQuiverAlgebra::new(bq.clone(), relations)?;
    end_alg.set_label("End(T)");
    end_alg.set_family(crate::algebra::Family::EndOfTilting);
    let end_alg = Arc::new(end_alg);
    let mut dims_ok = true;
    for s in 0..n {
        for t in 0..n {
            let want: usize = (0..m).map(|g| homs.basis[t][s][g].len()).sum();
            dims_ok &= end_alg.paths_between(s, t).len() == want;
        }
    }
    record("End(T) presentation", dims_ok, &mut checks)?;

    // covering quiver on the objects ᵍT̃_i
    let tv: Vec<String> = (0..n).flat_map(|i| (0..m).map(move |h| (i, h))).map(|(i, h)| format!("T{}@{}", i + 1, group.name(h))).collect();
    let mut ta = Vec::new();
    let mut arrow_map = Vec::new();
    for (a, (name, _, _)) in anames.iter().enumerate() {
        let (i, j, g, _) = &irreducible[a];
        for h in 0..m {
            let src = j * m + group.mul(h, *g);
            let tgt = i * m + h;
            ta.push((format!("{name}@{}", group.name(h)), tv[src].clone(), tv[tgt].clone()));
            arrow_map.push(a);
        }
    }
    let total_q = Quiver::new(&tv, &ta)?;
    let vertex_map: Vec<usize> = (0..n * m).map(|v| v / m).collect();
    let vertex_action: Vec<Vec<usize>> =
        (0..m).map(|k| (0..n * m).map(|v| (v / m) * m + group.mul(k, v % m)).collect()).collect();
    let arrow_action: Vec<Vec<usize>> =
        (0..m).map(|k| (0..ta.len()).map(|x| (x / m) * m + group.mul(k, x % m)).collect()).collect();
    let qc = QuiverCovering { total: total_q, base: bq, vertex_map, arrow_map, group: group.clone(), vertex_action, arrow_action };
    record("free action", is_galois_quiver_covering(&qc), &mut checks)?;
    let cover = build_cover(&end_alg, qc)?;
    // total paths (s, h1) ~> (t, h2) are the maps ^{h2}T̃_t -> ^{h1}T̃_s
    let mut total_ok = true;
    for s in 0..n {
        for t in 0..n {
            for h1 in 0..m {
                for h2 in 0..m {
                    let g = group.mul(group.inv(h2), h1);
                    total_ok &= cover.total().paths_between(s * m + h1, t * m + h2).len() == homs.basis[t][s][g].len();
                }
            }
        }
    }
    record("quotient isomorphism", total_ok, &mut checks)?;
    record("connected total", cover.quiver_covering().is_connected(), &mut checks)?;

    // tilting properties of the lifts over the total algebra
    let mut no_ext = true;
    for i in 0..n {
        for j in 0..n {
            for h in 0..m {
                no_ext &= ext1_dim(&tl[i], &c.translate(h, &tl[j]))? == 0;
            }
        }
    }
    record("Ext^1 vanishes between lifts", no_ext, &mut checks)?;
    let pd = tl.iter().all(|x| pd_at_most(x, 1).is_some());
    record("lifts have projective dimension at most one", pd, &mut checks)?;
    let mut gens = Vec::new();
    for x in &tl {
        for h in 0..m {
            gens.push((c.translate(h, x), 0));
        }
    }
    let sub = AddSubcat::new(gens)?;
    let mut cores = true;
    for v in 0..c.total().num_vertices() {
        cores &= coresolution(&Rep::projective(c.total(), v), &sub)?.is_some();
    }
    record("coresolutions of projectives", cores, &mut checks)?;
    Ok(EndCover { end_algebra: end_alg, cover, summands, lifts: tl, checks })
}

fn paths_between(qv: &Quiver, s: usize, t: usize) -> Vec<Path> {
    let mut out = Vec::new();
    let mut stack = vec![Path::trivial(s)];
    while let Some(p) = stack.pop() {
        let end = p.target(qv);
        if end == t && !p.is_empty() {
            out.push(p.clone());
        }
        for a in qv.arrows_from(end) {
            let mut next = p.clone();
            next.arrows.push(a);
            stack.push(next);
        }
    }
    out.sort();
    out
}
