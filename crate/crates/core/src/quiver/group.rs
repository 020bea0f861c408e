use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest group order accepted.
pub const MAX_ORDER: usize = 64;

/// A finite group given by its multiplication table. Element `0` need not be
/// the identity; `identity()` returns it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupJson {
    pub elements: Vec<String>,
    /// `table[i][j]` is the name of `elements[i] * elements[j]`.
    pub table: Vec<Vec<String>>,
}

impl FiniteGroup {
    /// Validates the table as a group law.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Invalid(format!("group order {n} outside 1..={MAX_ORDER}")));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::Invalid("multiplication table has wrong shape".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::Invalid("group table has no identity".into()))?;
        let mut inverse = vec![0; n];
        for g in 0..n {
            inverse[g] = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::Invalid(format!("element `{}` has no inverse", names[g])))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Invalid("group table is not associative".into()));
                    }
                }
            }
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n {
            return Err(Error::Invalid("duplicate group element names".into()));
        }
        Ok(FiniteGroup { names, table, identity, inverse })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z/n` with elements named `0..n-1`.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::from_table(names, table).expect("cyclic group table")
    }

    /// Direct product; elements named `(g,h)`.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self> {
        let (na, nb) = (a.order(), b.order());
        let mut names = Vec::with_capacity(na * nb);
        for i in 0..na {
            for j in 0..nb {
                names.push(format!("({},{})", a.names[i], b.names[j]));
            }
        }
        let table = (0..na * nb)
            .map(|x| {
                (0..na * nb)
                    .map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
                    .collect()
            })
            .collect();
        Self::from_table(names, table)
    }

    /// Parses `Zn` or `Zn x Zm x ...`.
    pub fn parse_spec(spec: &str) -> Result<Self> {
        let mut out: Option<FiniteGroup> = None;
        for part in spec.split(['x', 'X', '×']) {
            let part = part.trim();
            let n: usize = part
                .strip_prefix('Z')
                .and_then(|s| s.trim_start_matches("/").parse().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::Invalid(format!("bad group spec `{spec}`")))?;
            let z = FiniteGroup::cyclic(n);
            out = Some(match out {
                None => z,
                Some(g) => FiniteGroup::product(&g, &z)?,
            });
        }
        out.ok_or_else(|| Error::Invalid(format!("bad group spec `{spec}`")))
    }

    pub fn from_json(j: &GroupJson) -> Result<Self> {
        let idx = |s: &str| {
            j.elements
                .iter()
                .position(|e| e == s)
                .ok_or_else(|| Error::Invalid(format!("unknown group element `{s}`")))
        };
        let table = j
            .table
            .iter()
            .map(|r| r.iter().map(|s| idx(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_table(j.elements.clone(), table)
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            elements: self.names.clone(),
            table: self
                .table
                .iter()
                .map(|r| r.iter().map(|&k| self.names[k].clone()).collect())
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Looks an element up by name; for products also accepts `a,b`
    /// without parentheses, and plain integers for cyclic groups.
    pub fn element(&self, name: &str) -> Result<usize> {
        let name = name.trim();
        let alt = format!("({name})");
        self.names
            .iter()
            .position(|e| e == name || *e == alt)
            .ok_or_else(|| Error::Invalid(format!("unknown group element `{name}`")))
    }

    /// Subgroup generated by `gens`, as a sorted list.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order()).filter(|&g| seen[g]).collect()
    }
}
