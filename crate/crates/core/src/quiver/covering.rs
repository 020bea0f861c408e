use std::collections::{BTreeMap, VecDeque};

use super::{fibres, pi1_rank, Arrow, FiniteGroup, Quiver};
use crate::error::{Error, Result};

/// A covering of quivers `total -> base` together with a group acting on the
/// total quiver. `vertex_action[g][v]` is `g . v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverCovering {
    pub total: Quiver,
    pub base: Quiver,
    pub vertex_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
    pub group: FiniteGroup,
    pub vertex_action: Vec<Vec<usize>>,
    pub arrow_action: Vec<Vec<usize>>,
}

impl QuiverCovering {
    /// The identity covering with trivial group.
    pub fn identity(q: &Quiver) -> Self {
        let n = q.num_vertices();
        let m = q.num_arrows();
        QuiverCovering {
            total: q.clone(),
            base: q.clone(),
            vertex_map: (0..n).collect(),
            arrow_map: (0..m).collect(),
            group: FiniteGroup::trivial(),
            vertex_action: vec![(0..n).collect()],
            arrow_action: vec![(0..m).collect()],
        }
    }

    /// Smallest total vertex over each base vertex.
    pub fn fibre_representative(&self, x: usize) -> usize {
        self.vertex_map.iter().position(|&b| b == x).expect("nonempty fibre")
    }

    /// `g . rep(x)`; for a Galois covering this enumerates the fibre over `x`
    /// bijectively in `g`.
    pub fn fibre_vertex(&self, x: usize, g: usize) -> usize {
        self.vertex_action[g][self.fibre_representative(x)]
    }

    /// Total vertices over `x` listed by group element.
    pub fn fibre(&self, x: usize) -> Vec<usize> {
        (0..self.group.order()).map(|g| self.fibre_vertex(x, g)).collect()
    }

    /// The unique group element with `g . rep(F(v)) = v`.
    pub fn degree_of_vertex(&self, v: usize) -> usize {
        let rep = self.fibre_representative(self.vertex_map[v]);
        (0..self.group.order())
            .find(|&g| self.vertex_action[g][rep] == v)
            .expect("vertex lies in the orbit of its fibre representative")
    }

    /// The total arrow over `alpha` starting at total vertex `v`.
    pub fn lift_arrow_at(&self, alpha: usize, v: usize) -> Option<usize> {
        (0..self.total.num_arrows())
            .find(|&a| self.arrow_map[a] == alpha && self.total.arrow(a).source == v)
    }

    pub fn is_connected(&self) -> bool {
        self.total.is_connected()
    }

    /// DOT for the total quiver with fibres drawn as clusters.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph Cover {\n");
        for x in 0..self.base.num_vertices() {
            s.push_str(&format!(
                "  subgraph \"cluster_{}\" {{ label=\"{}\";",
                self.base.vertex_name(x),
                self.base.vertex_name(x)
            ));
            for v in self.fibre(x) {
                s.push_str(&format!(" \"{}\";", self.total.vertex_name(v)));
            }
            s.push_str(" }\n");
        }
        for a in self.total.arrows() {
            s.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                self.total.vertex_name(a.source),
                self.total.vertex_name(a.target),
                a.name
            ));
        }
        s.push_str("}\n");
        s
    }
}

/// Rewrites monodromy so that arrows of the BFS spanning tree (rooted at the
/// smallest vertex) carry the identity. Returns the new weights and the
/// vertex potentials `phi` with `w'(a) = phi(s) w(a) phi(t)^-1`.
pub fn normalize_monodromy(q: &Quiver, g: &FiniteGroup, w: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = q.num_vertices();
    let mut phi: Vec<Option<usize>> = vec![None; n];
    for root in 0..n {
        if phi[root].is_some() {
            continue;
        }
        phi[root] = Some(g.identity());
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for (k, a) in q.arrows().iter().enumerate() {
                if a.source == v && phi[a.target].is_none() {
                    phi[a.target] = Some(g.mul(phi[v].unwrap(), w[k]));
                    queue.push_back(a.target);
                } else if a.target == v && phi[a.source].is_none() {
                    phi[a.source] = Some(g.mul(phi[v].unwrap(), g.inv(w[k])));
                    queue.push_back(a.source);
                }
            }
        }
    }
    let phi: Vec<usize> = phi.into_iter().map(Option::unwrap).collect();
    let w2 = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| g.mul(g.mul(phi[a.source], w[k]), g.inv(phi[a.target])))
        .collect();
    (w2, phi)
}

/// Builds the cover with vertices `Q0 x G` from an arrow labelling. Arrows
/// absent from `w` carry the identity. Total vertex `(v,g)` has index
/// `v*|G| + g` and is named `v@g`.
pub fn finite_cover_from_monodromy(
    q: &Quiver,
    group: &FiniteGroup,
    w: &BTreeMap<String, usize>,
) -> Result<QuiverCovering> {
    if !q.is_connected() {
        return Err(Error::Precondition("base quiver must be connected".into()));
    }
    let mut raw = vec![group.identity(); q.num_arrows()];
    for (name, &g) in w {
        if g >= group.order() {
            return Err(Error::Invalid(format!("monodromy of `{name}` is not a group element")));
        }
        raw[q.arrow_index(name)?] = g;
    }
    let (norm, _) = normalize_monodromy(q, group, &raw);
    let ng = group.order();
    let mut vnames = Vec::with_capacity(q.num_vertices() * ng);
    for v in 0..q.num_vertices() {
        for g in 0..ng {
            vnames.push(format!("{}@{}", q.vertex_name(v), group.name(g)));
        }
    }
    let mut arrows = Vec::with_capacity(q.num_arrows() * ng);
    for (k, a) in q.arrows().iter().enumerate() {
        for g in 0..ng {
            arrows.push(Arrow {
                name: format!("{}@{}", a.name, group.name(g)),
                source: a.source * ng + g,
                target: a.target * ng + group.mul(g, norm[k]),
            });
        }
    }
    let total = Quiver::from_parts(vnames, arrows);
    let vertex_map = (0..total.num_vertices()).map(|i| i / ng).collect();
    let arrow_map = (0..total.num_arrows()).map(|i| i / ng).collect();
    let vertex_action = (0..ng)
        .map(|h| (0..total.num_vertices()).map(|i| (i / ng) * ng + group.mul(h, i % ng)).collect())
        .collect();
    let arrow_action = (0..ng)
        .map(|h| (0..total.num_arrows()).map(|i| (i / ng) * ng + group.mul(h, i % ng)).collect())
        .collect();
    Ok(QuiverCovering {
        total,
        base: q.clone(),
        vertex_map,
        arrow_map,
        group: group.clone(),
        vertex_action,
        arrow_action,
    })
}

/// Checks incidence, equivariance, freeness and that every fibre is a single
/// orbit.
pub fn is_galois_quiver_covering(c: &QuiverCovering) -> bool {
    check_galois(c).is_ok()
}

pub(crate) fn check_galois(c: &QuiverCovering) -> std::result::Result<(), String> {
    let (nv, na) = (c.total.num_vertices(), c.total.num_arrows());
    let ng = c.group.order();
    if c.vertex_map.len() != nv || c.arrow_map.len() != na {
        return Err("projection has wrong size".into());
    }
    if c.vertex_map.iter().any(|&x| x >= c.base.num_vertices())
        || c.arrow_map.iter().any(|&x| x >= c.base.num_arrows())
    {
        return Err("projection leaves the base".into());
    }
    for (k, a) in c.total.arrows().iter().enumerate() {
        let b = c.base.arrow(c.arrow_map[k]);
        if c.vertex_map[a.source] != b.source || c.vertex_map[a.target] != b.target {
            return Err(format!("projection breaks incidence at `{}`", a.name));
        }
    }
    if c.vertex_action.len() != ng || c.arrow_action.len() != ng {
        return Err("action table has wrong size".into());
    }
    for g in 0..ng {
        let (va, aa) = (&c.vertex_action[g], &c.arrow_action[g]);
        if !is_perm(va, nv) || !is_perm(aa, na) {
            return Err(format!("element {} does not act by permutations", c.group.name(g)));
        }
        for h in 0..ng {
            let gh = c.group.mul(g, h);
            if (0..nv).any(|v| va[c.vertex_action[h][v]] != c.vertex_action[gh][v])
                || (0..na).any(|a| aa[c.arrow_action[h][a]] != c.arrow_action[gh][a])
            {
                return Err("action is not a group action".into());
            }
        }
        for (k, a) in c.total.arrows().iter().enumerate() {
            let ga = c.total.arrow(aa[k]);
            if ga.source != va[a.source] || ga.target != va[a.target] {
                return Err("action does not commute with incidence".into());
            }
            if c.arrow_map[aa[k]] != c.arrow_map[k] {
                return Err("projection is not invariant on arrows".into());
            }
        }
        if (0..nv).any(|v| c.vertex_map[va[v]] != c.vertex_map[v]) {
            return Err("projection is not invariant on vertices".into());
        }
        if g != c.group.identity() && (0..nv).any(|v| va[v] == v) {
            return Err(format!("element {} fixes a vertex", c.group.name(g)));
        }
    }
    // free action means each orbit has |G| elements; fibres must be single
    // orbits
    for (x, f) in fibres(&c.vertex_map, c.base.num_vertices()) {
        if f.len() != ng {
            return Err(format!("fibre over vertex {} is not one orbit", c.base.vertex_name(x)));
        }
    }
    for (x, f) in fibres(&c.arrow_map, c.base.num_arrows()) {
        if f.len() != ng {
            return Err(format!("fibre over arrow {} is not one orbit", c.base.arrow(x).name));
        }
        let mut orbit: Vec<usize> = (0..ng).map(|g| c.arrow_action[g][f[0]]).collect();
        orbit.sort_unstable();
        if orbit != f {
            return Err(format!("fibre over arrow {} is not one orbit", c.base.arrow(x).name));
        }
    }
    Ok(())
}

fn is_perm(p: &[usize], n: usize) -> bool {
    if p.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in p {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// A finite ball in the universal cover: the tree of reduced walks from a
/// base vertex, with its projection.
#[derive(Clone, Debug)]
pub struct TruncatedCover {
    pub total: Quiver,
    pub base: Quiver,
    pub vertex_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
    /// The reduced walk of each total vertex as `(arrow, forwards)` steps.
    pub walks: Vec<Vec<(usize, bool)>>,
}

impl TruncatedCover {
    pub fn is_tree(&self) -> bool {
        super::is_tree(&self.total) && pi1_rank(&self.total) == 0
    }
}

/// Reduced walks of length at most `radius` from `base`; a walk may not
/// traverse an arrow and then immediately the same arrow backwards.
pub fn universal_cover_truncated(q: &Quiver, base: usize, radius: usize) -> Result<TruncatedCover> {
    if base >= q.num_vertices() {
        return Err(Error::UnknownVertex(base.to_string()));
    }
    if !q.is_connected() {
        return Err(Error::Precondition("quiver must be connected".into()));
    }
    let mut walks: Vec<Vec<(usize, bool)>> = vec![Vec::new()];
    let mut end = vec![base];
    let mut vnames = vec![format!("{}", q.vertex_name(base))];
    let mut arrows = Vec::new();
    let mut arrow_map = Vec::new();
    let mut frontier = vec![0usize];
    for _ in 0..radius {
        let mut next = Vec::new();
        for &w in &frontier {
            let here = end[w];
            let last = walks[w].last().copied();
            for (k, a) in q.arrows().iter().enumerate() {
                for forwards in [true, false] {
                    let (from, to) = if forwards { (a.source, a.target) } else { (a.target, a.source) };
                    if from != here || last == Some((k, !forwards)) {
                        continue;
                    }
                    let mut walk = walks[w].clone();
                    walk.push((k, forwards));
                    let id = walks.len();
                    vnames.push(format!(
                        "{}{}{}",
                        vnames[w],
                        if forwards { "+" } else { "-" },
                        a.name
                    ));
                    walks.push(walk);
                    end.push(to);
                    let (s, t) = if forwards { (w, id) } else { (id, w) };
                    arrows.push(Arrow { name: format!("{}#{}", a.name, arrows.len()), source: s, target: t });
                    arrow_map.push(k);
                    next.push(id);
                }
            }
        }
        frontier = next;
    }
    Ok(TruncatedCover {
        total: Quiver::from_parts(vnames, arrows),
        base: q.clone(),
        vertex_map: end,
        arrow_map,
        walks,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{is_tree, named};
    use super::*;

    fn kron_z2() -> QuiverCovering {
        let g = FiniteGroup::cyclic(2);
        let w = BTreeMap::from([("b".to_string(), 1)]);
        finite_cover_from_monodromy(&named::kronecker(), &g, &w).unwrap()
    }

    #[test]
    fn kronecker_double_cover() {
        let c = kron_z2();
        assert!(is_galois_quiver_covering(&c));
        assert!(c.total.is_connected() && c.total.is_acyclic());
        assert_eq!(c.total.num_vertices(), 4);
        let mut edges: Vec<(String, String)> = c
            .total
            .arrows()
            .iter()
            .map(|a| (c.total.vertex_name(a.source).into(), c.total.vertex_name(a.target).into()))
            .collect();
        edges.sort();
        let want: Vec<(String, String)> = [("1@0", "2@0"), ("1@0", "2@1"), ("1@1", "2@0"), ("1@1", "2@1")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        assert_eq!(edges, want);
    }

    #[test]
    fn trivial_monodromy_disconnects() {
        let g = FiniteGroup::cyclic(2);
        let c = finite_cover_from_monodromy(&named::kronecker(), &g, &BTreeMap::new()).unwrap();
        assert!(is_galois_quiver_covering(&c));
        assert_eq!(c.total.components().len(), 2);
        // on a tree any labelling normalises away
        let w = BTreeMap::from([("a1".to_string(), 1)]);
        let c = finite_cover_from_monodromy(&named::linear_a(2), &g, &w).unwrap();
        assert!(!c.total.is_connected());
        assert!(finite_cover_from_monodromy(&named::linear_a(2), &g, &BTreeMap::from([("zz".to_string(), 1)])).is_err());
    }

    #[test]
    fn identity_and_non_free() {
        let q = named::kronecker();
        assert!(is_galois_quiver_covering(&QuiverCovering::identity(&q)));
        let mut c = kron_z2();
        // make the non-identity element fix everything
        c.vertex_action[1] = (0..4).collect();
        c.arrow_action[1] = (0..4).collect();
        assert!(!is_galois_quiver_covering(&c));
    }

    #[test]
    fn truncated_universal_covers() {
        let k = named::kronecker();
        let r1 = universal_cover_truncated(&k, 0, 1).unwrap();
        assert_eq!((r1.total.num_vertices(), r1.total.num_arrows()), (3, 2));
        let r2 = universal_cover_truncated(&k, 0, 2).unwrap();
        assert_eq!((r2.total.num_vertices(), r2.total.num_arrows()), (5, 4));
        assert!(is_tree(&r2.total));
        let a3 = named::linear_a(3);
        let t = universal_cover_truncated(&a3, 0, 5).unwrap();
        assert_eq!(t.total.num_vertices(), 3);
    }

    #[test]
    fn oracle_reduced_walk_count() {
        // count reduced walks directly on the Kronecker graph: each vertex has
        // degree 2, so after the first step there is exactly one continuation
        let k = named::kronecker();
        for r in 0..6 {
            let c = universal_cover_truncated(&k, 0, r).unwrap();
            let expected = if r == 0 { 1 } else { 1 + 2 * r };
            assert_eq!(c.total.num_vertices(), expected);
        }
    }
}
