//! Finite quivers, finite groups given by tables, and Galois coverings of
//! quivers.

mod covering;
mod group;

pub use covering::{
    finite_cover_from_monodromy, is_galois_quiver_covering, normalize_monodromy,
    universal_cover_truncated, QuiverCovering, TruncatedCover,
};
pub use group::{FiniteGroup, GroupJson};

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Vertices and arrows are addressed by index; names are
/// kept for I/O.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(arrow, source, target)` names.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::Invalid(format!("duplicate vertex `{v}`")));
            }
        }
        let mut names = HashMap::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (a, s, t) in arrows {
            let (a, s, t) = (a.as_ref(), s.as_ref(), t.as_ref());
            let source = *index.get(s).ok_or_else(|| Error::UnknownVertex(s.into()))?;
            let target = *index.get(t).ok_or_else(|| Error::UnknownVertex(t.into()))?;
            if source == target {
                return Err(Error::Invalid(format!("arrow `{a}` is a loop")));
            }
            if names.insert(a.to_string(), ()).is_some() {
                return Err(Error::Invalid(format!("duplicate arrow `{a}`")));
            }
            out.push(Arrow { name: a.to_string(), source, target });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    /// Builds from index data; names are generated (`1..n`, `a1..am`).
    pub fn from_indices(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arr: Vec<(String, String, String)> = arrows
            .iter()
            .enumerate()
            .map(|(k, (s, t))| (format!("a{}", k + 1), (s + 1).to_string(), (t + 1).to_string()))
            .collect();
        Quiver::new(&vs, &arr)
    }

    pub(crate) fn from_parts(vertices: Vec<String>, arrows: Vec<Arrow>) -> Self {
        Quiver { vertices, arrows }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.into()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownArrow(name.into()))
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// Connected components of the underlying graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for a in &self.arrows {
                    let w = if a.source == v {
                        a.target
                    } else if a.target == v {
                        a.source
                    } else {
                        continue;
                    };
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Kahn ordering, smallest index first; `None` on an oriented cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.num_vertices();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut ready: std::collections::BTreeSet<usize> =
            (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(&v) = ready.iter().next() {
            ready.remove(&v);
            order.push(v);
            for a in &self.arrows {
                if a.source == v {
                    indeg[a.target] -= 1;
                    if indeg[a.target] == 0 {
                        ready.insert(a.target);
                    }
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Tree arrows of the BFS spanning forest rooted at the smallest vertex of
    /// each component; arrows are scanned in index order.
    pub fn spanning_tree_arrows(&self) -> Vec<usize> {
        let n = self.num_vertices();
        let mut seen = vec![false; n];
        let mut tree = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for (k, a) in self.arrows.iter().enumerate() {
                    let w = if a.source == v {
                        a.target
                    } else if a.target == v {
                        a.source
                    } else {
                        continue;
                    };
                    if !seen[w] {
                        seen[w] = true;
                        tree.push(k);
                        queue.push_back(w);
                    }
                }
            }
        }
        tree
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph Q {\n");
        for v in &self.vertices {
            s.push_str(&format!("  \"{v}\";\n"));
        }
        for a in &self.arrows {
            s.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                self.vertices[a.source], self.vertices[a.target], a.name
            ));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> QuiverJson {
        QuiverJson {
            vertices: self.vertices.iter().map(|v| serde_json::Value::String(v.clone())).collect(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    id: a.name.clone(),
                    from: serde_json::Value::String(self.vertices[a.source].clone()),
                    to: serde_json::Value::String(self.vertices[a.target].clone()),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &QuiverJson) -> Result<Self> {
        let vs: Vec<String> = j.vertices.iter().map(json_id).collect();
        let arr: Vec<(String, String, String)> = j
            .arrows
            .iter()
            .map(|a| (a.id.clone(), json_id(&a.from), json_id(&a.to)))
            .collect();
        Quiver::new(&vs, &arr)
    }

    /// Underlying-graph edge multiset as sorted vertex pairs; used by callers
    /// that canonicalise quivers.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.arrows.iter().map(|a| (a.source, a.target)).collect()
    }
}

pub(crate) fn json_id(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Quiver JSON: `{"vertices":[...], "arrows":[{"id":..,"from":..,"to":..}]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: Vec<serde_json::Value>,
    pub arrows: Vec<ArrowJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowJson {
    pub id: String,
    pub from: serde_json::Value,
    pub to: serde_json::Value,
}

/// Rank of the free fundamental group of the underlying graph:
/// `|edges| - |vertices| + |components|`.
pub fn pi1_rank(q: &Quiver) -> usize {
    q.num_arrows() + q.components().len() - q.num_vertices()
}

/// Connected and without cycles in the underlying graph.
pub fn is_tree(q: &Quiver) -> bool {
    q.is_connected() && pi1_rank(q) == 0
}

/// Common test quivers.
pub mod named {
    use super::Quiver;

    /// Linear `1 -> 2 -> ... -> n`.
    pub fn linear_a(n: usize) -> Quiver {
        let arrows: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Quiver::from_indices(n, &arrows).expect("valid linear quiver")
    }

    /// Two vertices with arrows `a, b : 1 -> 2`.
    pub fn kronecker() -> Quiver {
        Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).expect("valid Kronecker quiver")
    }
}

/// Counts of vertices and arrows per fibre; keyed by base index.
pub(crate) fn fibres(map: &[usize], n_base: usize) -> BTreeMap<usize, Vec<usize>> {
    let mut out: BTreeMap<usize, Vec<usize>> = (0..n_base).map(|b| (b, Vec::new())).collect();
    for (i, &b) in map.iter().enumerate() {
        out.entry(b).or_default().push(i);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi1_examples() {
        assert_eq!(pi1_rank(&named::linear_a(3)), 0);
        assert_eq!(pi1_rank(&named::kronecker()), 1);
        // squid t=2, p=(1,1): x =a1,a2=> y, y -> (1,1), y -> (2,1)
        let sq = Quiver::from_indices(4, &[(0, 1), (0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(pi1_rank(&sq), 1);
    }

    #[test]
    fn tree_examples() {
        assert!(is_tree(&named::linear_a(3)));
        assert!(!is_tree(&named::kronecker()));
        assert!(!is_tree(&Quiver::from_indices(2, &[]).unwrap()));
    }

    #[test]
    fn rejects_bad_quivers() {
        assert!(Quiver::new(&["1"], &[("a", "1", "1")]).is_err());
        assert!(Quiver::new(&["1", "1"], &[]).is_err());
        assert!(matches!(Quiver::new(&["1"], &[("a", "1", "2")]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn json_round_trip() {
        let q = named::kronecker();
        let j = serde_json::to_string(&q.to_json()).unwrap();
        let back = Quiver::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(q, back);
        let raw = r#"{"vertices":[1,2],"arrows":[{"id":"x","from":1,"to":2}]}"#;
        let q2 = Quiver::from_json(&serde_json::from_str(raw).unwrap()).unwrap();
        assert_eq!(q2.num_arrows(), 1);
    }
}
