use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::{combine, hom_basis};
use super::{same_algebra, Rep, RepMorphism};
use crate::error::{Error, Result};
use crate::exactla::{poly, q, Matrix, Scalar};

const SEED: u64 = 0x5eed_7117;
const RANDOM_TRIES: usize = 12;

/// `End(M)` with its radical.
pub struct EndRadical {
    pub basis: Vec<RepMorphism>,
    /// Rows are coordinates (in `basis`) of a basis of the radical.
    pub radical: Matrix,
}

impl EndRadical {
    pub fn top_dim(&self) -> usize {
        self.basis.len() - self.radical.rows()
    }
}

/// Radical of `End(M)`: the elements `x` with `tr(x y) = 0` for all `y`.
/// In characteristic zero this is exactly the Jacobson radical, since the
/// trace form of a faithful module is nondegenerate on the semisimple part.
pub fn endomorphism_radical(m: &Rep) -> Result<EndRadical> {
    let basis = hom_basis(m, m)?;
    let k = basis.len();
    let mut gram = vec![vec![q(0); k]; k];
    for i in 0..k {
        for j in i..k {
            let t: Scalar = (0..m.dims.len())
                .map(|v| basis[i].mats[v].mul(&basis[j].mats[v]).trace())
                .fold(q(0), |a, b| a + b);
            gram[i][j] = t.clone();
            gram[j][i] = t;
        }
    }
    let radical = Matrix::from_dense(k, k, &gram).kernel_basis().transpose();
    Ok(EndRadical { basis, radical })
}

/// True iff `End(M)` is local. Errors when `End(M)/rad` is a division algebra
/// bigger than the rationals, which cannot be decided over the rationals.
pub fn is_indecomposable(m: &Rep) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let e = endomorphism_radical(m)?;
    if e.top_dim() == 1 {
        return Ok(true);
    }
    match find_split(m, &e.basis)? {
        Some(_) => Ok(false),
        None => Err(Error::NonSplitEndomorphism(e.top_dim())),
    }
}

/// Splitting of `M` as `ker y^d ⊕ im y^d` for `y = x - λ`.
struct Split {
    kernel: Vec<Matrix>,
    image: Vec<Matrix>,
}

fn try_split(m: &Rep, x: &RepMorphism) -> Option<Split> {
    let total = x.total_matrix();
    if total.rows() == 0 {
        return None;
    }
    let roots = poly::rational_roots(&total.char_poly())?;
    let n = m.dims.len();
    for lam in roots {
        let mut kernel = Vec::with_capacity(n);
        let mut image = Vec::with_capacity(n);
        let mut kdim = 0;
        for v in 0..n {
            let d = m.dims[v];
            let y = x.mats[v].sub(&Matrix::scalar(d, &lam)).pow(d.max(1));
            let k = y.left_kernel_basis().row_space_basis();
            kdim += k.rows();
            kernel.push(k);
            image.push(y.row_space_basis());
        }
        if kdim > 0 && kdim < m.total_dim() {
            return Some(Split { kernel, image });
        }
    }
    None
}

fn random_combo(rng: &mut ChaCha8Rng, basis: &[RepMorphism]) -> RepMorphism {
    let cs: Vec<Scalar> = basis.iter().map(|_| q(rng.gen_range(-6..=6))).collect();
    combine(basis, &cs)
}

/// Looks for an endomorphism that is neither nilpotent nor invertible.
fn find_split(m: &Rep, basis: &[RepMorphism]) -> Result<Option<Split>> {
    for e in basis {
        if let Some(s) = try_split(m, e) {
            return Ok(Some(s));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    // endomorphisms killing a fixed vector are never invertible; a
    // non-nilpotent one among them splits M
    for v in 0..m.dims.len() {
        for c in 0..m.dims[v] {
            let u = Matrix::from_entries(1, m.dims[v], [(0, c, q(1))]);
            let rows: Vec<crate::exactla::SparseVec> =
                basis.iter().map(|e| u.mul(&e.mats[v]).row(0).to_vec()).collect();
            let ann = Matrix::from_sparse_rows(m.dims[v], rows).left_kernel_basis();
            if ann.rows() == 0 {
                continue;
            }
            let sub: Vec<RepMorphism> = (0..ann.rows())
                .map(|i| combine(basis, &ann.row_dense(i)))
                .collect();
            for x in sub.iter().cloned().chain(std::iter::once(random_combo(&mut rng, &sub))) {
                if let Some(s) = try_split(m, &x) {
                    return Ok(Some(s));
                }
            }
        }
    }
    for _ in 0..RANDOM_TRIES {
        let x = random_combo(&mut rng, basis);
        if let Some(s) = try_split(m, &x) {
            return Ok(Some(s));
        }
    }
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            let x = basis[i].then(&basis[j]);
            if let Some(s) = try_split(m, &x) {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// Indecomposable summands with their inclusions into `M`; the inclusions
/// together give an isomorphism `⊕ summands -> M`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Rep>,
    pub inclusions: Vec<RepMorphism>,
}

impl Decomposition {
    /// The isomorphism `⊕ summands -> M`.
    pub fn iso_from_sum(&self, m: &Rep) -> RepMorphism {
        let sum = Rep::direct_sum(m.algebra(), &self.summands);
        RepMorphism::row(&sum, m, &self.inclusions)
    }

    /// Groups summands into isomorphism classes with multiplicities.
    pub fn grouped(&self) -> Result<Vec<(Rep, usize)>> {
        let mut out: Vec<(Rep, usize)> = Vec::new();
        'next: for s in &self.summands {
            for (r, k) in out.iter_mut() {
                if is_isomorphic(r, s)? {
                    *k += 1;
                    continue 'next;
                }
            }
            out.push((s.clone(), 1));
        }
        Ok(out)
    }
}

pub fn decompose(m: &Rep) -> Result<Decomposition> {
    let mut summands = Vec::new();
    let mut inclusions = Vec::new();
    decompose_into(m, &m.identity(), &mut summands, &mut inclusions)?;
    let mut idx: Vec<usize> = (0..summands.len()).collect();
    idx.sort_by(|&a, &b| summands[a].sort_key().cmp(&summands[b].sort_key()));
    Ok(Decomposition {
        summands: idx.iter().map(|&i| summands[i].clone()).collect(),
        inclusions: idx.iter().map(|&i| inclusions[i].clone()).collect(),
    })
}

fn decompose_into(
    m: &Rep,
    incl: &RepMorphism,
    summands: &mut Vec<Rep>,
    inclusions: &mut Vec<RepMorphism>,
) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    let e = endomorphism_radical(m)?;
    if e.top_dim() == 1 {
        summands.push(m.clone());
        inclusions.push(incl.clone());
        return Ok(());
    }
    let split = find_split(m, &e.basis)?.ok_or(Error::NonSplitEndomorphism(e.top_dim()))?;
    for spaces in [&split.kernel, &split.image] {
        let (sub, inc) = m.subrep(spaces)?;
        decompose_into(&sub, &inc.then(incl), summands, inclusions)?;
    }
    Ok(())
}

/// An isomorphism `M -> N` if one exists.
pub fn isomorphism(m: &Rep, n: &Rep) -> Result<Option<RepMorphism>> {
    if !same_algebra(&m.alg, &n.alg) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dims != n.dims {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(RepMorphism::zero(m, n)));
    }
    let hs = hom_basis(m, n)?;
    if hs.is_empty() {
        return Ok(None);
    }
    if let Some(h) = hs.iter().find(|h| h.is_iso()) {
        return Ok(Some(h.clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..3 {
        let h = random_combo(&mut rng, &hs);
        if h.is_iso() {
            return Ok(Some(h));
        }
    }
    if is_indecomposable(m)? {
        // End(M) is local: M ≅ N iff some f_i . g_j is invertible
        let gs = hom_basis(n, m)?;
        for f in &hs {
            for g in &gs {
                if f.then(g).is_iso() {
                    return Ok(Some(f.clone()));
                }
            }
        }
        return Ok(None);
    }
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.summands.len() != dn.summands.len() {
        return Ok(None);
    }
    let mut used = vec![false; dn.summands.len()];
    let mut order = Vec::new();
    let mut isos = Vec::new();
    for x in &dm.summands {
        let mut found = None;
        for (j, y) in dn.summands.iter().enumerate() {
            if used[j] || x.dims != y.dims {
                continue;
            }
            if let Some(f) = isomorphism(x, y)? {
                found = Some((j, f));
                break;
            }
        }
        let Some((j, f)) = found else { return Ok(None) };
        used[j] = true;
        order.push(j);
        isos.push(f);
    }
    let to_sum = dm.iso_from_sum(m).inverse().expect("decomposition is an isomorphism");
    let mid = RepMorphism::direct_sum(&isos);
    let targets: Vec<Rep> = order.iter().map(|&j| dn.summands[j].clone()).collect();
    let tsum = Rep::direct_sum(n.algebra(), &targets);
    let incs: Vec<RepMorphism> = order.iter().map(|&j| dn.inclusions[j].clone()).collect();
    let out = RepMorphism::row(&tsum, n, &incs);
    let iso = to_sum.then(&mid.with_source(&to_sum.target).with_target(&tsum)).then(&out);
    debug_assert!(iso.is_iso() && iso.commutes());
    Ok(Some(iso))
}

pub fn is_isomorphic(m: &Rep, n: &Rep) -> Result<bool> {
    Ok(isomorphism(m, n)?.is_some())
}
