//! Galois coverings of bound quiver algebras with a finite group: push-down
//! and pull-up of representations, the group action on modules over the
//! total algebra, the covering property and lifting of tilting summands.

mod auto;
mod endcover;
mod lift;

use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::{BoundQuiverAlgebra, Path, Relation};
use crate::derived::stalk_hom_dim;
use crate::error::{Error, Result};
use crate::exactla::{q, Matrix};
use crate::quiver::{FiniteGroup, QuiverCovering};
use crate::rep::{hom_basis, Algebra, Rep, RepMorphism};

pub use auto::{check_h3, twist, Automorphism};
pub use endcover::{induced_end_cover, EndCover};
pub use lift::{
    lift_object, lift_transcript, projective_lifts, stabilizer, straighten, translate_between, Lift, Side, Straightened,
};

/// A Galois covering `total -> base` of bound quiver algebras, induced by a
/// covering of quivers along which every relation lifts.
#[derive(Clone, Debug)]
pub struct CategoryCover {
    base: Algebra,
    total: Algebra,
    qc: QuiverCovering,
}

impl CategoryCover {
    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn total(&self) -> &Algebra {
        &self.total
    }

    pub fn quiver_covering(&self) -> &QuiverCovering {
        &self.qc
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.qc.group
    }

    /// The lift of `p` starting at the total vertex `v`.
    pub fn lift_path(&self, p: &Path, v: usize) -> Result<Path> {
        if self.qc.vertex_map[v] != p.source {
            return Err(Error::Invalid("path does not start over the given vertex".into()));
        }
        let mut at = v;
        let mut arrows = Vec::with_capacity(p.arrows.len());
        for &a in &p.arrows {
            let l = self
                .qc
                .lift_arrow_at(a, at)
                .ok_or_else(|| Error::Invalid("covering is missing an arrow lift".into()))?;
            arrows.push(l);
            at = self.qc.total.arrow(l).target;
        }
        Ok(Path { source: v, arrows })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "base": self.base.to_json(),
            "total": self.total.to_json(),
            "group": self.qc.group.to_json(),
            "vertex_map": self.qc.vertex_map,
            "arrow_map": self.qc.arrow_map,
        })
    }

    /// `ᵍM = M ∘ g⁻¹`.
    pub fn translate(&self, g: usize, m: &Rep) -> Rep {
        let gi = self.qc.group.inv(g);
        let qt = &self.qc.total;
        let dims: Vec<usize> = (0..qt.num_vertices()).map(|y| m.dims()[self.qc.vertex_action[gi][y]]).collect();
        let maps: Vec<Matrix> = (0..qt.num_arrows()).map(|a| m.map(self.qc.arrow_action[gi][a]).clone()).collect();
        Rep::new_unchecked(&self.total, dims, maps)
    }

    /// `ᵍf: ᵍM -> ᵍN`.
    pub fn translate_morphism(&self, g: usize, f: &RepMorphism) -> RepMorphism {
        let gi = self.qc.group.inv(g);
        let s = self.translate(g, &f.source);
        let t = self.translate(g, &f.target);
        let mats = (0..self.qc.total.num_vertices()).map(|y| f.mat(self.qc.vertex_action[gi][y]).clone()).collect();
        RepMorphism::new_unchecked(&s, &t, mats)
    }

    /// Offsets of the fibre blocks of `(F_λ M)(x)`, listed by group element.
    fn fibre_offsets(&self, dims: &[usize], x: usize) -> Vec<usize> {
        let mut offs = Vec::with_capacity(self.qc.group.order());
        let mut acc = 0;
        for g in 0..self.qc.group.order() {
            offs.push(acc);
            acc += dims[self.qc.fibre_vertex(x, g)];
        }
        offs
    }

    /// `(F_λ M)(x) = ⊕_{g} M(g . rep(x))`, arrows assembled blockwise from
    /// their lifts.
    pub fn push_down(&self, m: &Rep) -> Rep {
        let qb = self.base.quiver();
        let n = qb.num_vertices();
        let dims: Vec<usize> =
            (0..n).map(|x| (0..self.qc.group.order()).map(|g| m.dims()[self.qc.fibre_vertex(x, g)]).sum()).collect();
        let offs: Vec<Vec<usize>> = (0..n).map(|x| self.fibre_offsets(m.dims(), x)).collect();
        let maps = qb
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let mut mat = Matrix::zeros(dims[arr.source], dims[arr.target]);
                for g in 0..self.qc.group.order() {
                    let y = self.qc.fibre_vertex(arr.source, g);
                    let l = self.qc.lift_arrow_at(a, y).expect("arrow lifts at every fibre vertex");
                    let y2 = self.qc.total.arrow(l).target;
                    let h = self.qc.degree_of_vertex(y2);
                    mat.set_block(offs[arr.source][g], offs[arr.target][h], m.map(l));
                }
                mat
            })
            .collect();
        Rep::new_unchecked(&self.base, dims, maps)
    }

    pub fn push_down_morphism(&self, f: &RepMorphism) -> RepMorphism {
        let s = self.push_down(&f.source);
        let t = self.push_down(&f.target);
        let mats = (0..self.base.num_vertices())
            .map(|x| {
                let parts: Vec<Matrix> =
                    (0..self.qc.group.order()).map(|g| f.mat(self.qc.fibre_vertex(x, g)).clone()).collect();
                Matrix::block_diag(&parts)
            })
            .collect();
        RepMorphism::new_unchecked(&s, &t, mats)
    }

    /// `F.X = X ∘ F`.
    pub fn pull_up(&self, x: &Rep) -> Rep {
        let qt = &self.qc.total;
        let dims: Vec<usize> = (0..qt.num_vertices()).map(|y| x.dims()[self.qc.vertex_map[y]]).collect();
        let maps: Vec<Matrix> = (0..qt.num_arrows()).map(|a| x.map(self.qc.arrow_map[a]).clone()).collect();
        Rep::new_unchecked(&self.total, dims, maps)
    }

    /// The canonical isomorphism `F_λ(ᵍM) -> F_λ(M)`: a permutation of fibre
    /// blocks.
    pub fn push_down_translate_iso(&self, g: usize, m: &Rep) -> RepMorphism {
        let gm = self.translate(g, m);
        let src = self.push_down(&gm);
        let tgt = self.push_down(m);
        let gi = self.qc.group.inv(g);
        let mats = (0..self.base.num_vertices())
            .map(|x| {
                let so = self.fibre_offsets(gm.dims(), x);
                let to = self.fibre_offsets(m.dims(), x);
                let mut mat = Matrix::zeros(src.dims()[x], tgt.dims()[x]);
                for h in 0..self.qc.group.order() {
                    // block h of F(ᵍM) is M(g⁻¹h . rep)
                    let k = self.qc.group.mul(gi, h);
                    let d = m.dims()[self.qc.fibre_vertex(x, k)];
                    mat.set_block(so[h], to[k], &Matrix::identity(d));
                }
                mat
            })
            .collect();
        RepMorphism::new_unchecked(&src, &tgt, mats)
    }

    /// `dim Hom(F_λM, F_λN)` against `Σ_g dim Hom(ᵍM, N)` in each degree.
    pub fn covering_property_check(&self, m: &Rep, n: &Rep, degrees: &[i64]) -> Result<bool> {
        let (fm, fn_) = (self.push_down(m), self.push_down(n));
        for &d in degrees {
            let lhs = stalk_hom_dim(&fm, 0, &fn_, d)?;
            let mut rhs = 0;
            for g in 0..self.qc.group.order() {
                rhs += stalk_hom_dim(&self.translate(g, m), 0, n, d)?;
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Writes `u: F_λX̃ -> F_λM̃` as `Σ_g F_λ(u_g)` with `u_g: X̃ -> ᵍM̃`,
    /// where `F_λ(ᵍM̃)` is identified with `F_λM̃`. Returns the nonzero
    /// components in group order.
    pub fn homogeneous_decomposition(
        &self,
        u: &RepMorphism,
        x: &Rep,
        m: &Rep,
    ) -> Result<Vec<(usize, RepMorphism)>> {
        let mut pieces: Vec<(usize, RepMorphism, RepMorphism)> = Vec::new();
        for g in 0..self.qc.group.order() {
            let gm = self.translate(g, m);
            let iso = self.push_down_translate_iso(g, m);
            for h in hom_basis(x, &gm)? {
                let down = self.push_down_morphism(&h).then(&iso);
                pieces.push((g, h, down));
            }
        }
        if u.is_zero() {
            return Ok(Vec::new());
        }
        let len = u.flat_len();
        let cols: Vec<_> = pieces.iter().map(|p| p.2.flatten()).collect();
        let a = Matrix::from_sparse_rows(len, cols).transpose();
        if a.rank() != pieces.len() {
            return Err(Error::CoveringProperty("pushed-down homogeneous maps are dependent".into()));
        }
        let mut rhs = vec![q(0); len];
        for (j, v) in u.flatten() {
            rhs[j] = v;
        }
        let coeffs = a
            .solve(&rhs)
            .ok_or_else(|| Error::CoveringProperty("morphism is not a sum of homogeneous ones".into()))?;
        let mut out: Vec<(usize, RepMorphism)> = Vec::new();
        for ((g, h, _), c) in pieces.into_iter().zip(coeffs) {
            if c == q(0) {
                continue;
            }
            match out.iter_mut().find(|(k, _)| *k == g) {
                Some((_, acc)) => *acc = acc.lin_comb(&q(1), &h, &c),
                None => out.push((g, h.scale(&c))),
            }
        }
        out.retain(|(_, h)| !h.is_zero());
        Ok(out)
    }
}

/// Lifts every relation of `base` along each fibre and checks that the
/// total algebra is a Galois covering: path spaces over each base block
/// add up fibrewise.
pub fn build_cover(base: &Algebra, qc: QuiverCovering) -> Result<CategoryCover> {
    if &qc.base != base.quiver() {
        return Err(Error::Invalid("covering is not over the quiver of the algebra".into()));
    }
    if !crate::quiver::is_galois_quiver_covering(&qc) {
        return Err(Error::Invalid("quiver covering is not Galois".into()));
    }
    let proto = CategoryCover { base: base.clone(), total: base.clone(), qc };
    let mut rels = Vec::new();
    for r in base.relations() {
        for g in 0..proto.qc.group.order() {
            let v = proto.qc.fibre_vertex(r.source(), g);
            let mut terms = Vec::new();
            let mut end = None;
            for (c, p) in &r.terms {
                let l = proto.lift_path(p, v)?;
                let t = l.target(&proto.qc.total);
                if *end.get_or_insert(t) != t {
                    return Err(Error::RelationLift(format!(
                        "paths of a relation at {} end in different fibre vertices",
                        base.quiver().vertex_name(r.source())
                    )));
                }
                terms.push((c.clone(), l));
            }
            rels.push(Relation::new(&proto.qc.total, terms)?);
        }
    }
    let mut total = BoundQuiverAlgebra::new(proto.qc.total.clone(), rels)?;
    total.set_label(format!("cover of {}", base.label()));
    let cover = CategoryCover { base: base.clone(), total: Arc::new(total), qc: proto.qc };
    let qb = base.quiver();
    for s in 0..qb.num_vertices() {
        let rep = cover.qc.fibre_representative(s);
        for t in 0..qb.num_vertices() {
            let up: usize = cover.qc.fibre(t).iter().map(|&y| cover.total.paths_between(rep, y).len()).sum();
            if up != base.paths_between(s, t).len() {
                return Err(Error::Verification(format!(
                    "path spaces over ({}, {}) do not match",
                    qb.vertex_name(s),
                    qb.vertex_name(t)
                )));
            }
        }
    }
    Ok(cover)
}
