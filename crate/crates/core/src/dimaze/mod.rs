//! Dimazes: digraphs with a set of exit sinks, and the path systems and
//! alternating walks that live on them.

mod link;
mod walk;

pub use link::{
    augment, find_alt_walk, is_base_by_onto, link, max_linkage, ml_oracle, ml_oracle_restricted,
    separates, LinkOutcome, WalkSearch,
};
pub use walk::{AltWalk, QIndex};

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::matroid::GroundSet;

/// A finite digraph with exits `B₀`.
///
/// Vertices are indexed in the order they were given; adjacency lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dimaze {
    names: Vec<String>,
    index: HashMap<String, usize>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    exit: Vec<bool>,
}

impl Dimaze {
    /// Builds and validates a dimaze from identifiers.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)], exits: &[S]) -> Result<Self> {
        let names: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidDimaze(format!("duplicate vertex `{name}`")));
            }
        }
        let lookup = |v: &str| {
            index
                .get(v)
                .copied()
                .ok_or_else(|| Error::InvalidDimaze(format!("unknown vertex `{v}`")))
        };
        let edges = edges
            .iter()
            .map(|(u, v)| Ok((lookup(u.as_ref())?, lookup(v.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        let exits = exits
            .iter()
            .map(|v| lookup(v.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(names, &edges, &exits)
    }

    /// Builds and validates a dimaze from vertex indices.
    pub fn from_indices(
        names: Vec<String>,
        edges: &[(usize, usize)],
        exits: &[usize],
    ) -> Result<Self> {
        let n = names.len();
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidDimaze(format!("duplicate vertex `{name}`")));
            }
        }
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidDimaze(format!(
                    "edge ({u},{v}) leaves the vertex range"
                )));
            }
            if u == v {
                return Err(Error::InvalidDimaze(format!("loop at `{}`", names[u])));
            }
            if !seen.insert((u, v)) {
                return Err(Error::InvalidDimaze(format!(
                    "parallel edge ({},{})",
                    names[u], names[v]
                )));
            }
            out[u].push(v);
            inn[v].push(u);
        }
        out.iter_mut().for_each(|l| l.sort_unstable());
        inn.iter_mut().for_each(|l| l.sort_unstable());
        let mut exit = vec![false; n];
        for &b in exits {
            if b >= n {
                return Err(Error::InvalidDimaze(format!("exit index {b} out of range")));
            }
            if exit[b] {
                return Err(Error::InvalidDimaze(format!(
                    "duplicate exit `{}`",
                    names[b]
                )));
            }
            if !out[b].is_empty() {
                return Err(Error::InvalidDimaze(format!(
                    "exit `{}` is not a sink",
                    names[b]
                )));
            }
            exit[b] = true;
        }
        Ok(Dimaze {
            names,
            index,
            out,
            inn,
            exit,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn vertices_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        names.iter().map(|n| self.vertex(n.as_ref())).collect()
    }

    pub fn out(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn inn(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn is_exit(&self, v: usize) -> bool {
        self.exit[v]
    }

    pub fn exits(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.exit[v]).collect()
    }

    /// All edges, sorted by tail then head.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().map(move |&v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn ground(&self) -> Result<GroundSet> {
        GroundSet::new(self.names.iter().cloned())
    }

    /// Same digraph with a different exit set.
    pub fn with_exits(&self, exits: &[usize]) -> Result<Dimaze> {
        Dimaze::from_indices(self.names.clone(), &self.edges(), exits)
    }

    /// Deletes the flagged vertices; returns the smaller dimaze and the old-to-new index map.
    pub fn delete_vertices(&self, remove: &[bool]) -> (Dimaze, Vec<Option<usize>>) {
        let mut map = vec![None; self.len()];
        let mut names = Vec::new();
        for v in 0..self.len() {
            if !remove[v] {
                map[v] = Some(names.len());
                names.push(self.names[v].clone());
            }
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter_map(|(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        let exits: Vec<usize> = self.exits().into_iter().filter_map(|b| map[b]).collect();
        let d = Dimaze::from_indices(names, &edges, &exits).expect("subgraph of a valid dimaze");
        (d, map)
    }

    /// Checks the dimaze invariants again (construction already enforces them).
    pub fn validate(&self) -> Result<()> {
        Dimaze::from_indices(self.names.clone(), &self.edges(), &self.exits()).map(|_| ())
    }
}

/// Vertex-disjoint directed paths, each given as its vertex sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathSystem {
    pub paths: Vec<Vec<usize>>,
}

impl PathSystem {
    pub fn new(paths: Vec<Vec<usize>>) -> Self {
        PathSystem { paths }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn initials(&self) -> Vec<usize> {
        self.paths.iter().map(|p| p[0]).collect()
    }

    pub fn terminals(&self) -> Vec<usize> {
        self.paths
            .iter()
            .map(|p| *p.last().expect("paths are nonempty"))
            .collect()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.paths.iter().flatten().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| (w[0], w[1])))
    }

    /// The path starting at `v`, if any.
    pub fn path_from(&self, v: usize) -> Option<&[usize]> {
        self.paths.iter().find(|p| p[0] == v).map(Vec::as_slice)
    }

    /// Sorts paths by initial vertex.
    pub fn canonical(mut self) -> Self {
        self.paths.sort_by_key(|p| p[0]);
        self
    }

    /// Checks disjointness and edges; with `linkage`, also that every path ends in an exit.
    pub fn validate(&self, d: &Dimaze, linkage: bool) -> Result<()> {
        let mut used = vec![false; d.len()];
        for p in &self.paths {
            if p.is_empty() {
                return Err(Error::InvalidPathSystem("empty path".into()));
            }
            for &v in p {
                if v >= d.len() {
                    return Err(Error::InvalidPathSystem(format!(
                        "vertex index {v} out of range"
                    )));
                }
                if used[v] {
                    return Err(Error::InvalidPathSystem(format!(
                        "vertex `{}` used twice",
                        d.name(v)
                    )));
                }
                used[v] = true;
            }
            for w in p.windows(2) {
                if !d.has_edge(w[0], w[1]) {
                    return Err(Error::InvalidPathSystem(format!(
                        "({},{}) is not an edge",
                        d.name(w[0]),
                        d.name(w[1])
                    )));
                }
            }
            let last = *p.last().expect("nonempty");
            if linkage && !d.is_exit(last) {
                return Err(Error::InvalidPathSystem(format!(
                    "path ends at `{}`, which is not an exit",
                    d.name(last)
                )));
            }
        }
        Ok(())
    }

    pub fn to_names(&self, d: &Dimaze) -> Vec<Vec<String>> {
        self.paths
            .iter()
            .map(|p| p.iter().map(|&v| d.name(v).to_string()).collect())
            .collect()
    }

    pub fn from_names<S: AsRef<str>>(d: &Dimaze, paths: &[Vec<S>]) -> Result<Self> {
        Ok(PathSystem {
            paths: paths
                .iter()
                .map(|p| d.vertices_of(p))
                .collect::<Result<_>>()?,
        })
    }
}

/// One vertex on each path of a linkage, meeting every path from `X` to the exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separator {
    pub vertices: Vec<usize>,
    /// `path_of[i]` is the index (in the linkage) of the path carrying `vertices[i]`.
    pub path_of: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_examples() {
        assert!(Dimaze::new(&["a", "b"], &[("a", "b")], &["b"]).is_ok());
        let err = Dimaze::new(&["a", "b"], &[("a", "b")], &["a"]).unwrap_err();
        assert!(err.to_string().contains("exit `a` is not a sink"));
        assert!(Dimaze::new(&["a", "b"], &[("a", "b"), ("a", "b")], &["b"]).is_err());
        assert!(Dimaze::new(&["a"], &[("a", "a")], &[]).is_err());
        assert!(Dimaze::new(&["a", "a"], &[], &[]).is_err());
        assert!(Dimaze::new(&["a"], &[("a", "z")], &[]).is_err());
    }

    #[test]
    fn path_system_checks() {
        let d = Dimaze::new(&["s", "x", "t"], &[("s", "x"), ("x", "t")], &["t"]).unwrap();
        let p = PathSystem::new(vec![vec![0, 1, 2]]);
        assert!(p.validate(&d, true).is_ok());
        assert!(PathSystem::new(vec![vec![0, 1]])
            .validate(&d, true)
            .is_err());
        assert!(PathSystem::new(vec![vec![0, 1]])
            .validate(&d, false)
            .is_ok());
        assert!(PathSystem::new(vec![vec![0, 2]])
            .validate(&d, false)
            .is_err());
        assert!(PathSystem::new(vec![vec![0, 1], vec![1, 2]])
            .validate(&d, false)
            .is_err());
    }

    #[test]
    fn delete_keeps_order() {
        let d = Dimaze::new(&["s", "x", "t"], &[("s", "x"), ("x", "t")], &["t"]).unwrap();
        let (e, map) = d.delete_vertices(&[false, true, false]);
        assert_eq!(e.names(), ["s".to_string(), "t".to_string()]);
        assert_eq!(map, vec![Some(0), None, Some(1)]);
        assert_eq!(e.edge_count(), 0);
        assert_eq!(e.exits(), vec![1]);
    }
}
