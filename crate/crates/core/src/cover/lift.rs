use super::CategoryCover;
use crate::derived::{cone, DMorphism, GMap};
use crate::error::{Error, Result};
use crate::exactla::q;
use crate::rep::{factor_from, factor_through, is_indecomposable, isomorphism, sum_injections, Rep, RepMorphism};
use crate::tilt::{StepKind, Transcript};

const MAX_ROUNDS: usize = 256;

/// An indecomposable `X[shift]` over the base with a module `X̃` over the
/// total algebra and an isomorphism `F_λX̃ -> X`.
#[derive(Clone, Debug)]
pub struct Lift {
    pub base: Rep,
    pub shift: i64,
    pub total: Rep,
    pub witness: RepMorphism,
}

impl Lift {
    /// The isomorphism `F_λX̃ -> Y` for any `Y` isomorphic to `base`.
    fn witness_to(&self, y: &Rep) -> Result<RepMorphism> {
        let iso = isomorphism(&self.base, y)?.ok_or_else(|| Error::Verification("lift does not match".into()))?;
        Ok(self.witness.then(&iso))
    }

    fn matches(&self, y: &Rep, shift: i64) -> bool {
        self.shift == shift && isomorphism(&self.base, y).ok().flatten().is_some()
    }
}

/// Indecomposable projectives of the base with their canonical lifts, the
/// projectives at fibre representatives.
pub fn projective_lifts(c: &CategoryCover) -> Result<Vec<Lift>> {
    (0..c.base.num_vertices())
        .map(|x| {
            let total = Rep::projective(&c.total, c.qc.fibre_representative(x));
            let base = Rep::projective(&c.base, x);
            let witness = isomorphism(&c.push_down(&total), &base)?
                .ok_or_else(|| Error::Verification("push-down of a projective is not projective".into()))?;
            Ok(Lift { base, shift: 0, total, witness })
        })
        .collect()
}

/// Group elements fixing `X̃` up to isomorphism.
pub fn stabilizer(c: &CategoryCover, x: &Rep) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for g in 0..c.qc.group.order() {
        if isomorphism(&c.translate(g, x), x)?.is_some() {
            out.push(g);
        }
    }
    Ok(out)
}

/// Which side of the column the fixed object sits on: `X -> ⊕ M_j` (left)
/// or `⊕ M_j -> X` (right).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A column with homogeneous entries and the automorphism `θ` of `⊕ F_λM̃_j`
/// relating it to the input: `u' = u θ` (left) or `u' = θ u` (right).
#[derive(Clone, Debug)]
pub struct Straightened {
    pub u: RepMorphism,
    pub theta: RepMorphism,
    /// `g_j` such that entry `j` lifts to `X̃ -> ^{g_j}M̃_j` (left) or
    /// `^{g_j}M̃_j -> X̃` (right).
    pub degrees: Vec<usize>,
    pub components: Vec<RepMorphism>,
    pub rounds: usize,
}

impl Straightened {
    /// The lifted column over the total algebra.
    pub fn lifted(&self, c: &CategoryCover, side: Side, x: &Rep, parts: &[Rep]) -> RepMorphism {
        let moved: Vec<Rep> = parts.iter().zip(&self.degrees).map(|(m, &g)| c.translate(g, m)).collect();
        let sum = Rep::direct_sum(&c.total, &moved);
        match side {
            Side::Left => RepMorphism::column(x, &sum, &self.components),
            Side::Right => RepMorphism::row(&sum, x, &self.components),
        }
    }
}

/// Homogeneous components of entry `j`, each as `(g, upstairs map, its push-down)`.
fn entry_components(
    c: &CategoryCover,
    side: Side,
    entry: &RepMorphism,
    x: &Rep,
    m: &Rep,
) -> Result<Vec<(usize, RepMorphism, RepMorphism)>> {
    let mut out = Vec::new();
    match side {
        Side::Left => {
            for (g, h) in c.homogeneous_decomposition(entry, x, m)? {
                let down = c.push_down_morphism(&h).then(&c.push_down_translate_iso(g, m));
                out.push((g, h, down.with_source(&entry.source).with_target(&entry.target)));
            }
        }
        Side::Right => {
            for (g, h) in c.homogeneous_decomposition(entry, m, x)? {
                let down = c.push_down_morphism(&h).then(&c.push_down_translate_iso(g, x));
                // M̃ -> ᵍX̃ is the translate of ^{g⁻¹}M̃ -> X̃
                let gi = c.qc.group.inv(g);
                let up = c.translate_morphism(gi, &h);
                let up = up.with_target(x);
                out.push((gi, up, down.with_source(&entry.source).with_target(&entry.target)));
            }
        }
    }
    Ok(out)
}

/// Rewrites the column `u` until every entry is homogeneous. `x` and
/// `parts` are the lifts, with `u` a morphism between `F_λx` and
/// `⊕ F_λ parts` (in that order for [`Side::Left`]). Each round takes the
/// first entry with several components, factors its first component `h_1`
/// through `u` and changes the basis of the sum by the factorisation `λ`:
/// if `λ_jj` is invertible the entry becomes `h_1`, if it is nilpotent the
/// entry becomes `u_j - h_1`.
pub fn straighten(
    c: &CategoryCover,
    side: Side,
    u: &RepMorphism,
    x: &Rep,
    parts: &[Rep],
) -> Result<Straightened> {
    let downs: Vec<Rep> = parts.iter().map(|m| c.push_down(m)).collect();
    let (sum, inj, proj) = sum_injections(&c.base, &downs);
    let fx = c.push_down(x);
    let mut cur = match side {
        Side::Left => u.with_source(&fx).with_target(&sum),
        Side::Right => u.with_source(&sum).with_target(&fx),
    };
    let mut theta = sum.identity();
    let entry = |cur: &RepMorphism, j: usize| match side {
        Side::Left => cur.then(&proj[j]),
        Side::Right => inj[j].then(cur),
    };
    for round in 0..MAX_ROUNDS {
        let mut comps = Vec::with_capacity(parts.len());
        for j in 0..parts.len() {
            comps.push(entry_components(c, side, &entry(&cur, j), x, &parts[j])?);
        }
        let Some(j) = comps.iter().position(|cs| cs.len() > 1) else {
            let mut degrees = Vec::new();
            let mut components = Vec::new();
            for (j, cs) in comps.into_iter().enumerate() {
                match cs.into_iter().next() {
                    Some((g, h, _)) => {
                        degrees.push(g);
                        components.push(h);
                    }
                    None => {
                        degrees.push(c.qc.group.identity());
                        components.push(match side {
                            Side::Left => RepMorphism::zero(x, &parts[j]),
                            Side::Right => RepMorphism::zero(&parts[j], x),
                        });
                    }
                }
            }
            return Ok(Straightened { u: cur, theta, degrees, components, rounds: round });
        };
        let h1 = &comps[j][0].2;
        let (step, lam_jj) = match side {
            Side::Left => {
                let lam = factor_from(h1, &cur)?
                    .ok_or_else(|| Error::Precondition("component does not factor through the column".into()))?;
                let lam_jj = inj[j].then(&lam);
                (lam, lam_jj)
            }
            Side::Right => {
                let lam = factor_through(h1, &cur)?
                    .ok_or_else(|| Error::Precondition("component does not factor through the row".into()))?;
                let lam_jj = lam.then(&proj[j]);
                (lam, lam_jj)
            }
        };
        let invertible = lam_jj.is_iso();
        if !invertible {
            let d = lam_jj.source.total_dim().max(1);
            let mut p = lam_jj.clone();
            for _ in 1..d {
                p = p.then(&lam_jj);
            }
            if !p.is_zero() {
                return Err(Error::Precondition("endomorphism ring of a summand is not local".into()));
            }
        }
        let replaced = if invertible {
            step
        } else {
            match side {
                Side::Left => proj[j].lin_comb(&q(1), &step, &q(-1)),
                Side::Right => inj[j].lin_comb(&q(1), &step, &q(-1)),
            }
        };
        let th = match side {
            Side::Left => {
                let cols: Vec<RepMorphism> =
                    (0..parts.len()).map(|k| if k == j { replaced.clone() } else { proj[k].clone() }).collect();
                RepMorphism::column(&sum, &sum, &cols)
            }
            Side::Right => {
                let rows: Vec<RepMorphism> =
                    (0..parts.len()).map(|k| if k == j { replaced.clone() } else { inj[k].clone() }).collect();
                RepMorphism::row(&sum, &sum, &rows)
            }
        };
        debug_assert!(th.is_iso());
        match side {
            Side::Left => {
                cur = cur.then(&th);
                theta = theta.then(&th);
            }
            Side::Right => {
                cur = th.then(&cur);
                theta = th.then(&theta);
            }
        }
    }
    Err(Error::Verification("straightening did not terminate".into()))
}

fn find_lift(lifts: &[Lift], rep: &Rep, shift: i64, skip: Option<usize>) -> Result<usize> {
    lifts
        .iter()
        .enumerate()
        .position(|(i, l)| Some(i) != skip && l.matches(rep, shift))
        .ok_or_else(|| Error::Precondition("transcript refers to a summand without a lift".into()))
}

fn deg0_blocks(f: &DMorphism) -> Result<Vec<RepMorphism>> {
    f.blocks
        .iter()
        .flatten()
        .map(|b| match b {
            GMap::Deg0(h) => Ok(h.clone()),
            GMap::Zero => Err(Error::Unsupported("approximation with a zero entry".into())),
            GMap::Deg1(_) => Err(Error::Unsupported("lifting approximations with degree one blocks".into())),
        })
        .collect()
}

/// Replays an exchange step upstairs and returns the lift of the new summand.
fn lift_exchange(
    c: &CategoryCover,
    lifts: &[Lift],
    f: &DMorphism,
    removed: &(Rep, i64),
    added: &(Rep, i64),
    kind: StepKind,
) -> Result<Lift> {
    // a left approximation has the exchanged summand as its only source
    let left = f.source.len() == 1
        && f.source[0].1 == removed.1
        && isomorphism(&f.source[0].0, &removed.0)?.is_some();
    let (side, fixed, others) = if left {
        (Side::Left, f.source[0].clone(), f.target.clone())
    } else {
        (Side::Right, f.target[0].clone(), f.source.clone())
    };
    let blocks = deg0_blocks(f)?;
    let fx = &lifts[find_lift(lifts, &fixed.0, fixed.1, None)?];
    let alpha = fx.witness_to(&fixed.0)?;
    let mut part_lifts = Vec::new();
    let mut transported = Vec::new();
    for ((m, s), b) in others.iter().zip(&blocks) {
        let l = &lifts[find_lift(lifts, m, *s, None)?];
        let beta = l.witness_to(m)?;
        let beta_inv = beta.inverse().expect("witness is invertible");
        let alpha_inv = alpha.inverse().expect("witness is invertible");
        transported.push(match side {
            Side::Left => alpha.then(b).then(&beta_inv),
            Side::Right => beta.then(b).then(&alpha_inv),
        });
        part_lifts.push(l.total.clone());
    }
    let downs: Vec<Rep> = part_lifts.iter().map(|m| c.push_down(m)).collect();
    let sum = Rep::direct_sum(&c.base, &downs);
    let fxd = c.push_down(&fx.total);
    let u = match side {
        Side::Left => RepMorphism::column(&fxd, &sum, &transported),
        Side::Right => RepMorphism::row(&sum, &fxd, &transported),
    };
    let st = straighten(c, side, &u, &fx.total, &part_lifts)?;
    let up = st.lifted(c, side, &fx.total, &part_lifts);
    let (total, shift) = match (side, kind) {
        (Side::Left, _) => (up.cokernel().0, fixed.1),
        (Side::Right, StepKind::Mutation) => (up.kernel().0, fixed.1),
        (Side::Right, _) => {
            let tgt = DMorphism::from_module_morphism(&up);
            let tgt = DMorphism {
                source: tgt.source.into_iter().map(|(r, _)| (r, fixed.1)).collect(),
                target: tgt.target.into_iter().map(|(r, _)| (r, fixed.1)).collect(),
                blocks: tgt.blocks,
            };
            let m_star = cone(&tgt)?.shift(-1);
            let mut parts = m_star.expanded();
            if parts.len() != 1 {
                return Err(Error::Verification("cone upstairs is not indecomposable".into()));
            }
            parts.pop().unwrap()
        }
    };
    if !is_indecomposable(&total)? {
        return Err(Error::Verification("lifted summand is decomposable".into()));
    }
    if shift != added.1 {
        return Err(Error::Verification("lifted summand sits in the wrong degree".into()));
    }
    let witness = isomorphism(&c.push_down(&total), &added.0)?
        .ok_or_else(|| Error::Verification("push-down of the lift is not the new summand".into()))?;
    Ok(Lift { base: added.0.clone(), shift, total, witness })
}

/// Lifts every summand met along a transcript that starts at the regular
/// module, replaying each exchange over the total algebra. Returns the lifts
/// of the final object's summands.
pub fn lift_transcript(c: &CategoryCover, t: &Transcript) -> Result<Vec<Lift>> {
    if t.start.min_shift() != Some(0) || t.start.max_shift() != Some(0) {
        return Err(Error::Precondition("transcript must start at the regular module".into()));
    }
    let proj = projective_lifts(c)?;
    let mut lifts: Vec<Lift> = Vec::new();
    for (rep, s) in t.start.expanded() {
        let i = find_lift(&proj, &rep, s, None)
            .map_err(|_| Error::Precondition("transcript must start at the regular module".into()))?;
        let l = &proj[i];
        lifts.push(Lift { base: rep.clone(), shift: 0, total: l.total.clone(), witness: l.witness_to(&rep)? });
    }
    for step in &t.steps {
        match step.kind {
            StepKind::First => {
                let mut next = Vec::new();
                let mut used = vec![false; lifts.len()];
                for (rep, s) in step.after.expanded() {
                    let i = (0..lifts.len())
                        .find(|&i| {
                            !used[i]
                                && (lifts[i].shift == s || lifts[i].shift == s + 1)
                                && isomorphism(&lifts[i].base, &rep).ok().flatten().is_some()
                        })
                        .ok_or_else(|| Error::Verification("first kind step lost a summand".into()))?;
                    used[i] = true;
                    next.push(Lift { base: rep.clone(), shift: s, total: lifts[i].total.clone(), witness: lifts[i].witness_to(&rep)? });
                }
                lifts = next;
            }
            StepKind::Second | StepKind::Mutation => {
                let removed = step.removed.clone().ok_or_else(|| Error::Invalid("step without summand".into()))?;
                let added = step.added.clone().ok_or_else(|| Error::Invalid("step without summand".into()))?;
                let f = step.approximation.as_ref().ok_or_else(|| Error::Invalid("step without approximation".into()))?;
                let new = lift_exchange(c, &lifts, f, &removed, &added, step.kind)?;
                let k = find_lift(&lifts, &removed.0, removed.1, None)?;
                lifts.remove(k);
                lifts.push(new);
            }
        }
    }
    Ok(lifts)
}

/// The lift of the summand `x[shift]` of the end of `t`.
pub fn lift_object(c: &CategoryCover, x: &Rep, shift: i64, t: &Transcript) -> Result<Lift> {
    let lifts = lift_transcript(c, t)?;
    let i = find_lift(&lifts, x, shift, None)?;
    let l = &lifts[i];
    Ok(Lift { base: x.clone(), shift, total: l.total.clone(), witness: l.witness_to(x)? })
}

/// Some `g` with `ᵍA ≅ B`.
pub fn translate_between(c: &CategoryCover, a: &Rep, b: &Rep) -> Result<Option<usize>> {
    for g in 0..c.qc.group.order() {
        if isomorphism(&c.translate(g, a), b)?.is_some() {
            return Ok(Some(g));
        }
    }
    Ok(None)
}
