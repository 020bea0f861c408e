use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::decomp::{is_indecomposable, isomorphism};
use super::hom::{combine, ext1_basis, extension_middle};
use super::{Algebra, Rep};
use crate::error::{Error, Result};
use crate::exactla::{q, Matrix, Scalar};

const SEED: u64 = 0xe7_0e7a;
const GENERIC_TRIES: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Fail on the first dimension vector carrying a family.
    Strict,
    /// Keep going on families and collect finitely many members of each.
    Sample,
}

#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub reps: Vec<Rep>,
    /// Dimension vectors with `q(d) <= 0` that were only sampled.
    pub families: Vec<Vec<usize>>,
}

impl EnumerationResult {
    pub fn is_complete(&self) -> bool {
        self.families.is_empty()
    }
}

/// Tits form `Σ d_v^2 - Σ_a d_s d_t`.
pub fn tits_form(alg: &Algebra, d: &[usize]) -> i64 {
    let sq: i64 = d.iter().map(|&x| (x * x) as i64).sum();
    let arr: i64 = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| (d[a.source] * d[a.target]) as i64)
        .sum();
    sq - arr
}

fn support_connected(alg: &Algebra, d: &[usize]) -> bool {
    let qv = alg.quiver();
    let sup: Vec<usize> = (0..d.len()).filter(|&v| d[v] > 0).collect();
    let Some(&start) = sup.first() else { return false };
    let mut seen = vec![false; d.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for a in qv.arrows() {
            let w = if a.source == v {
                a.target
            } else if a.target == v {
                a.source
            } else {
                continue;
            };
            if d[w] > 0 && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    sup.iter().all(|&v| seen[v])
}

/// Dimension vectors of total dimension `1..=cap`, ordered by total then
/// lexicographically.
fn dim_vectors(n: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for total in 1..=cap {
        let mut cur = vec![0; n];
        compositions(total, 0, &mut cur, &mut out);
    }
    out
}

fn compositions(left: usize, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(cur.clone());
        return;
    }
    for x in (0..=left).rev() {
        cur[i] = x;
        compositions(left - x, i + 1, cur, out);
    }
    cur[i] = 0;
}

fn rep_with<F>(alg: &Algebra, d: &[usize], mut entry: F) -> Rep
where
    F: FnMut(usize, usize, usize) -> Scalar,
{
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let (r, c) = (d[a.source], d[a.target]);
            let e: Vec<(usize, usize, Scalar)> =
                (0..r).flat_map(|i| (0..c).map(move |j| (i, j))).map(|(i, j)| (i, j, entry(k, i, j))).collect();
            Matrix::from_entries(r, c, e)
        })
        .collect();
    Rep::new_unchecked(alg, d.to_vec(), maps)
}

fn indecomposable(r: &Rep) -> bool {
    matches!(is_indecomposable(r), Ok(true))
}

/// Indecomposables of a path algebra up to total dimension `dim_cap`, one
/// per isomorphism class, found by certification: "identity-like" and seeded
/// random representations, then middle terms of extensions between smaller
/// indecomposables, each certified with `is_indecomposable`.
pub fn enumerate_indecomposables(alg: &Algebra, dim_cap: usize, mode: EnumerationMode) -> Result<EnumerationResult> {
    if !alg.is_path_algebra() {
        return Err(Error::NotHereditary);
    }
    let n = alg.num_vertices();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut reps: Vec<Rep> = Vec::new();
    let mut families = Vec::new();
    for d in dim_vectors(n, dim_cap) {
        if !support_connected(alg, &d) {
            continue;
        }
        let qd = tits_form(alg, &d);
        if qd <= 0 && mode == EnumerationMode::Strict {
            return Err(Error::InfiniteFamily(d));
        }
        if qd > 1 {
            continue;
        }
        let mut found: Vec<Rep> = Vec::new();
        let consider = |r: Rep, found: &mut Vec<Rep>| -> Result<bool> {
            if !indecomposable(&r) {
                return Ok(false);
            }
            for f in found.iter() {
                if isomorphism(f, &r)?.is_some() {
                    return Ok(false);
                }
            }
            found.push(r);
            Ok(true)
        };
        // real roots have a unique indecomposable; stop at the first
        let done = |found: &Vec<Rep>| qd == 1 && !found.is_empty();
        consider(rep_with(alg, &d, |_, i, j| if i == j { q(1) } else { q(0) }), &mut found)?;
        for _ in 0..GENERIC_TRIES {
            if done(&found) {
                break;
            }
            let r = rep_with(alg, &d, |_, _, _| q(rng.gen_range(-3..=3)));
            consider(r, &mut found)?;
        }
        if !done(&found) {
            let smaller: Vec<Rep> = reps.clone();
            'pairs: for x in &smaller {
                for y in &smaller {
                    if (0..n).any(|v| x.dims[v] + y.dims[v] != d[v]) {
                        continue;
                    }
                    let ext = ext1_basis(x, y)?;
                    if ext.dim() == 0 {
                        continue;
                    }
                    let tries = if qd == 1 { 1 } else { 2 };
                    for t in 0..tries {
                        let cs: Vec<Scalar> = (0..ext.dim())
                            .map(|i| if t == 0 && i == 0 { q(1) } else { q(rng.gen_range(-3..=3)) })
                            .collect();
                        let c = combine(&ext.cocycles, &cs);
                        if c.is_zero() {
                            continue;
                        }
                        let (e, _, _) = extension_middle(&ext, &c)?;
                        consider(e, &mut found)?;
                        if done(&found) {
                            break 'pairs;
                        }
                    }
                }
            }
        }
        if qd == 1 && found.is_empty() {
            return Err(Error::EnumerationIncomplete(format!("no indecomposable found for real root {d:?}")));
        }
        if qd <= 0 {
            families.push(d.clone());
        }
        reps.extend(found);
    }
    Ok(EnumerationResult { reps, families })
}
