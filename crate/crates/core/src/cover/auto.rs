use crate::algebra::Path;
use crate::derived::DObject;
use crate::error::{Error, Result};
use crate::exactla::{q, Matrix, Scalar, SparseVec};
use crate::rep::{is_isomorphic, Algebra, Rep};

/// A vertex-fixing algebra automorphism, given by the image of each arrow as
/// a combination of paths parallel to it.
#[derive(Clone, Debug)]
pub struct Automorphism {
    images: Vec<Vec<(Scalar, Path)>>,
}

impl Automorphism {
    pub fn new(alg: &Algebra, images: Vec<Vec<(Scalar, Path)>>) -> Result<Self> {
        let qv = alg.quiver();
        if images.len() != qv.num_arrows() {
            return Err(Error::Invalid("need one image per arrow".into()));
        }
        for (a, img) in images.iter().enumerate() {
            let arr = qv.arrow(a);
            for (_, p) in img {
                if p.source != arr.source || p.target(qv) != arr.target || p.is_empty() {
                    return Err(Error::Invalid(format!("image of `{}` is not parallel to it", arr.name)));
                }
            }
        }
        // invertible on arrows modulo longer paths
        let mut pairs: Vec<(usize, usize)> = qv.arrows().iter().map(|a| (a.source, a.target)).collect();
        pairs.sort();
        pairs.dedup();
        for (s, t) in pairs {
            let arrows: Vec<usize> =
                (0..qv.num_arrows()).filter(|&a| qv.arrow(a).source == s && qv.arrow(a).target == t).collect();
            let k = arrows.len();
            let mut m = Matrix::zeros(k, k);
            for (i, &a) in arrows.iter().enumerate() {
                for (c, p) in &images[a] {
                    if p.len() == 1 {
                        let j = arrows.iter().position(|&b| b == p.arrows[0]).unwrap();
                        m.set_block(i, j, &Matrix::scalar(1, &(m.get(i, j) + c)));
                    }
                }
            }
            if !m.is_invertible() {
                return Err(Error::Invalid("automorphism is not invertible on arrows".into()));
            }
        }
        let psi = Automorphism { images };
        for r in alg.relations() {
            let mut acc: SparseVec = Vec::new();
            for (c, p) in &r.terms {
                let img = psi.apply_path(alg, p);
                acc = crate::exactla::sv_lin_comb(&q(1), &acc, c, &img);
            }
            if !acc.is_empty() {
                return Err(Error::Invalid("automorphism does not preserve the relations".into()));
            }
        }
        Ok(psi)
    }

    pub fn identity(alg: &Algebra) -> Self {
        let images = (0..alg.quiver().num_arrows())
            .map(|a| vec![(q(1), Path { source: alg.quiver().arrow(a).source, arrows: vec![a] })])
            .collect();
        Automorphism { images }
    }

    /// `a ↦ c_a a`.
    pub fn scaling(alg: &Algebra, scalars: &[Scalar]) -> Result<Self> {
        let images = (0..alg.quiver().num_arrows())
            .map(|a| vec![(scalars[a].clone(), Path { source: alg.quiver().arrow(a).source, arrows: vec![a] })])
            .collect();
        Automorphism::new(alg, images)
    }

    /// `ψ(p)` in the path basis of the algebra.
    pub fn apply_path(&self, alg: &Algebra, p: &Path) -> SparseVec {
        let mut acc: SparseVec = alg.reduce_path(&Path::trivial(p.source));
        for &a in &p.arrows {
            let mut img: SparseVec = Vec::new();
            for (c, path) in &self.images[a] {
                img = crate::exactla::sv_lin_comb(&q(1), &img, c, &alg.reduce_path(path));
            }
            acc = alg.mul(&acc, &img);
        }
        acc
    }

    pub fn images(&self) -> &[Vec<(Scalar, Path)>] {
        &self.images
    }
}

/// `X` with arrows acting through `ψ`.
pub fn twist(x: &Rep, psi: &Automorphism) -> Rep {
    let alg = x.algebra();
    let maps = (0..alg.quiver().num_arrows())
        .map(|a| {
            let arr = alg.quiver().arrow(a);
            let mut m = Matrix::zeros(x.dims()[arr.source], x.dims()[arr.target]);
            for (c, p) in &psi.images[a] {
                m = m.lin_comb(&q(1), &x.path_matrix(p), c);
            }
            m
        })
        .collect();
    Rep::new_unchecked(alg, x.dims().to_vec(), maps)
}

/// Whether every indecomposable summand of `t` is isomorphic to its twist.
pub fn check_h3(alg: &Algebra, psi: &Automorphism, t: &DObject) -> Result<bool> {
    if t.algebra().as_ref() != alg.as_ref() {
        return Err(Error::AlgebraMismatch);
    }
    for s in t.summands() {
        if !is_isomorphic(&twist(&s.rep, psi), &s.rep)? {
            return Ok(false);
        }
    }
    Ok(true)
}
