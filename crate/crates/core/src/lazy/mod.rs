//! Finitely described infinite dimazes and bimazes, their truncations, and
//! finite certificates for combs and fans.

mod generators;
mod patterns;

pub use generators::{builtin, builtin_names, Builtin, SeededGenerator, Tnd};
pub use patterns::{
    detect_comb, detect_fan, eliminate_fan_centres, fan_centres, topologically_linkable,
    PatternCertificate, PatternKind, TopoAnswer, TopoPath, TopoPathKind,
};

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::bimaze::{Bimaze, Bipartite};
use crate::dimaze::Dimaze;
use crate::duality::{to_bimaze, Converted};
use crate::error::{Error, Result};

/// Structured vertex identifiers used by the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexId {
    X(u64),
    Y(u64),
    Centre,
    Leaf(u64),
    /// A tree vertex, as the child indices along the path from the root.
    Tree(Vec<u32>),
    /// Left vertex `v_i` of a bipartite generator.
    V(u64),
    /// Right vertex `A_i` of a bipartite generator.
    A(u64),
}

impl VertexId {
    pub fn index(&self) -> Option<u64> {
        match self {
            VertexId::X(i)
            | VertexId::Y(i)
            | VertexId::Leaf(i)
            | VertexId::V(i)
            | VertexId::A(i) => Some(*i),
            _ => None,
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::X(i) => write!(f, "x{i}"),
            VertexId::Y(i) => write!(f, "y{i}"),
            VertexId::Centre => write!(f, "v"),
            VertexId::Leaf(i) => write!(f, "v{i}"),
            VertexId::Tree(path) => {
                write!(f, "r")?;
                for c in path {
                    write!(f, ".{c}")?;
                }
                Ok(())
            }
            VertexId::V(i) => write!(f, "v{i}"),
            VertexId::A(i) => write!(f, "A{i}"),
        }
    }
}

pub type Neighbours<'a> = Box<dyn Iterator<Item = VertexId> + 'a>;

/// A possibly infinite dimaze given by deterministic neighbour enumerators.
pub trait DimazeGenerator: Send + Sync {
    fn name(&self) -> String;
    fn roots(&self) -> Vec<VertexId>;
    fn out_neighbours(&self, v: &VertexId) -> Neighbours<'_>;
    fn in_neighbours(&self, v: &VertexId) -> Neighbours<'_>;
    fn is_exit(&self, v: &VertexId) -> bool;
}

/// A possibly infinite bipartite graph given by neighbour enumerators.
pub trait BipartiteGenerator: Send + Sync {
    fn name(&self) -> String;
    fn roots(&self) -> Vec<VertexId>;
    fn left_neighbours(&self, v: &VertexId) -> Neighbours<'_>;
    fn right_neighbours(&self, w: &VertexId) -> Neighbours<'_>;
}

/// A finite piece of a generator together with where it was cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub dimaze: Dimaze,
    /// Vertices whose generator out-neighbourhood is not fully present.
    pub frontier: Vec<bool>,
    /// Vertices whose generator in-neighbourhood is not fully present.
    pub in_frontier: Vec<bool>,
    pub depth: usize,
    pub width: usize,
}

impl Truncation {
    /// A finite dimaze viewed as a truncation with nothing cut.
    pub fn finite(d: Dimaze) -> Self {
        let n = d.len();
        Truncation {
            dimaze: d,
            frontier: vec![false; n],
            in_frontier: vec![false; n],
            depth: 0,
            width: 0,
        }
    }

    pub fn with_frontier(d: Dimaze, frontier: &[usize], in_frontier: &[usize]) -> Result<Self> {
        let n = d.len();
        let mut t = Truncation::finite(d);
        for &v in frontier {
            if v >= n {
                return Err(Error::Precondition(format!(
                    "frontier vertex index {v} out of range"
                )));
            }
            if t.dimaze.is_exit(v) {
                return Err(Error::InvalidDimaze(format!(
                    "frontier vertex `{}` is an exit",
                    t.dimaze.name(v)
                )));
            }
            t.frontier[v] = true;
        }
        for &v in in_frontier {
            if v >= n {
                return Err(Error::Precondition(format!(
                    "frontier vertex index {v} out of range"
                )));
            }
            t.in_frontier[v] = true;
        }
        Ok(t)
    }

    pub fn frontier_vertices(&self) -> Vec<usize> {
        (0..self.frontier.len())
            .filter(|&v| self.frontier[v])
            .collect()
    }

    pub fn in_frontier_vertices(&self) -> Vec<usize> {
        (0..self.in_frontier.len())
            .filter(|&v| self.in_frontier[v])
            .collect()
    }

    pub fn has_frontier(&self) -> bool {
        self.frontier.iter().any(|&f| f)
    }

    /// The converted bimaze; `v*` is cut when `v` is, and `v` is cut on the left when its in-edges are.
    pub fn to_bimaze(&self) -> Result<Converted> {
        let mut conv = to_bimaze(&self.dimaze)?;
        let right: Vec<usize> = self
            .frontier_vertices()
            .into_iter()
            .filter_map(|v| conv.star(v))
            .collect();
        let left = self.in_frontier_vertices();
        conv.bimaze = conv.bimaze.with_frontier(&left, &right);
        Ok(conv)
    }
}

fn probe(it: Neighbours<'_>, limit: usize) -> Vec<VertexId> {
    it.take(limit).collect()
}

/// Breadth-first closure from the roots in both edge directions, `depth`
/// levels deep (roots are level 1), keeping at most `width` out- and
/// in-neighbours of each vertex.
pub fn truncate(g: &dyn DimazeGenerator, depth: usize, width: usize) -> Result<Truncation> {
    if depth == 0 || width == 0 {
        return Err(Error::Precondition(
            "depth and width must be at least 1".into(),
        ));
    }
    let mut level: HashMap<VertexId, usize> = HashMap::new();
    let mut order: Vec<VertexId> = Vec::new();
    let mut queue = VecDeque::new();
    for r in g.roots() {
        if !level.contains_key(&r) {
            level.insert(r.clone(), 1);
            order.push(r.clone());
            queue.push_back(r);
        }
    }
    while let Some(u) = queue.pop_front() {
        let l = level[&u];
        if l >= depth {
            continue;
        }
        let nbrs = probe(g.out_neighbours(&u), width)
            .into_iter()
            .chain(probe(g.in_neighbours(&u), width));
        for v in nbrs {
            if !level.contains_key(&v) {
                level.insert(v.clone(), l + 1);
                order.push(v.clone());
                queue.push_back(v);
            }
        }
    }

    let index: HashMap<&VertexId, usize> = order.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let n = order.len();
    let mut edges = Vec::new();
    let mut frontier = vec![false; n];
    for (i, u) in order.iter().enumerate() {
        let outs = probe(g.out_neighbours(u), width + 1);
        if outs.len() > width {
            frontier[i] = true;
        }
        for v in outs.iter().take(width) {
            match index.get(v) {
                Some(&j) => edges.push((i, j)),
                None => frontier[i] = true,
            }
        }
    }
    let present: HashSet<(usize, usize)> = edges.iter().copied().collect();
    let mut in_frontier = vec![false; n];
    for (j, v) in order.iter().enumerate() {
        let ins = probe(g.in_neighbours(v), n + 1);
        in_frontier[j] = ins.len() > n
            || ins
                .iter()
                .any(|u| index.get(u).is_none_or(|&i| !present.contains(&(i, j))));
    }
    let exits: Vec<usize> = (0..n).filter(|&i| g.is_exit(&order[i])).collect();
    let names: Vec<String> = order.iter().map(ToString::to_string).collect();
    let dimaze = Dimaze::from_indices(names, &edges, &exits)?;
    Ok(Truncation {
        dimaze,
        frontier,
        in_frontier,
        depth,
        width,
    })
}

/// A finite piece of a bipartite generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteTruncation {
    pub graph: Bipartite,
    pub frontier_left: Vec<bool>,
    pub frontier_right: Vec<bool>,
    pub depth: usize,
    pub width: usize,
}

impl BipartiteTruncation {
    /// Attaches `m₀` (given by names) to get a bimaze carrying the frontier.
    pub fn to_bimaze<S: AsRef<str>>(&self, m0: &[(S, S)]) -> Result<Bimaze> {
        let b = Bimaze::new(self.graph.clone(), m0)?;
        let left: Vec<usize> = (0..self.frontier_left.len())
            .filter(|&v| self.frontier_left[v])
            .collect();
        let right: Vec<usize> = (0..self.frontier_right.len())
            .filter(|&w| self.frontier_right[w])
            .collect();
        Ok(b.with_frontier(&left, &right))
    }
}

/// Breadth-first truncation of a bipartite generator; roots are left vertices at level 1.
pub fn truncate_bipartite(
    g: &dyn BipartiteGenerator,
    depth: usize,
    width: usize,
) -> Result<BipartiteTruncation> {
    if depth == 0 || width == 0 {
        return Err(Error::Precondition(
            "depth and width must be at least 1".into(),
        ));
    }
    // (id, is_left) -> level
    let mut level: HashMap<(VertexId, bool), usize> = HashMap::new();
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut queue = VecDeque::new();
    for r in g.roots() {
        if level.insert((r.clone(), true), 1).is_none() {
            left.push(r.clone());
            queue.push_back((r, true));
        }
    }
    while let Some((u, is_left)) = queue.pop_front() {
        let l = level[&(u.clone(), is_left)];
        if l >= depth {
            continue;
        }
        let nbrs = if is_left {
            g.left_neighbours(&u)
        } else {
            g.right_neighbours(&u)
        };
        for v in probe(nbrs, width) {
            let key = (v.clone(), !is_left);
            if let std::collections::hash_map::Entry::Vacant(e) = level.entry(key) {
                e.insert(l + 1);
                if is_left {
                    right.push(v.clone());
                } else {
                    left.push(v.clone());
                }
                queue.push_back((v, !is_left));
            }
        }
    }
    let li: HashMap<&VertexId, usize> = left.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let ri: HashMap<&VertexId, usize> = right.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut edges = Vec::new();
    let mut frontier_left = vec![false; left.len()];
    for (i, v) in left.iter().enumerate() {
        let nbrs = probe(g.left_neighbours(v), width + 1);
        frontier_left[i] = nbrs.len() > width;
        for w in nbrs.iter().take(width) {
            match ri.get(w) {
                Some(&j) => edges.push((i, j)),
                None => frontier_left[i] = true,
            }
        }
    }
    let present: HashSet<(usize, usize)> = edges.iter().copied().collect();
    let bound = left.len() + 1;
    let frontier_right = right
        .iter()
        .enumerate()
        .map(|(j, w)| {
            let nbrs = probe(g.right_neighbours(w), bound);
            nbrs.len() >= bound
                || nbrs
                    .iter()
                    .any(|v| li.get(v).is_none_or(|&i| !present.contains(&(i, j))))
        })
        .collect();
    let graph = Bipartite::from_indices(
        left.iter().map(ToString::to_string).collect(),
        right.iter().map(ToString::to_string).collect(),
        &edges,
    )?;
    Ok(BipartiteTruncation {
        graph,
        frontier_left,
        frontier_right,
        depth,
        width,
    })
}

/// Left degrees of the given left vertices, each counted up to `bound`;
/// `None` marks a vertex with more than `bound` neighbours.
pub fn left_degrees(
    g: &dyn BipartiteGenerator,
    vertices: &[VertexId],
    bound: usize,
) -> Vec<Option<usize>> {
    vertices
        .iter()
        .map(|v| {
            let k = g.left_neighbours(v).take(bound + 1).count();
            (k <= bound).then_some(k)
        })
        .collect()
}

/// Whether every listed left vertex has at most `bound` neighbours.
pub fn left_locally_finite(
    g: &dyn BipartiteGenerator,
    vertices: &[VertexId],
    bound: usize,
) -> bool {
    left_degrees(g, vertices, bound).iter().all(Option::is_some)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(t: &Truncation, set: &[bool]) -> Vec<String> {
        (0..set.len())
            .filter(|&v| set[v])
            .map(|v| t.dimaze.name(v).to_string())
            .collect()
    }

    #[test]
    fn ro_path() {
        let t = truncate(&Builtin::RO, 5, 1).unwrap();
        assert_eq!(t.dimaze.names(), ["x1", "x2", "x3", "x4", "x5"]);
        assert_eq!(t.dimaze.edge_count(), 4);
        assert_eq!(names(&t, &t.frontier), ["x5"]);
        assert!(t.dimaze.exits().is_empty());
    }

    #[test]
    fn fan_star() {
        let t = truncate(&Builtin::Fan, 2, 4).unwrap();
        assert_eq!(t.dimaze.len(), 5);
        assert_eq!(t.dimaze.out(0).len(), 4);
        assert_eq!(t.dimaze.exits(), vec![1, 2, 3, 4]);
        assert_eq!(names(&t, &t.frontier), ["v"]);
    }

    #[test]
    fn ca_segment() {
        let t = truncate(&Builtin::CA, 9, 2).unwrap();
        assert_eq!(t.dimaze.len(), 9);
        let exits: Vec<&str> = t
            .dimaze
            .exits()
            .into_iter()
            .map(|v| t.dimaze.name(v))
            .collect();
        assert_eq!(exits, ["x1", "x3", "x5", "x7", "x9"]);
        assert!(!t.has_frontier());
        assert_eq!(names(&t, &t.in_frontier), ["x9"]);
    }

    #[test]
    fn frontier_is_never_an_exit() {
        for g in builtin_names() {
            let g = builtin(g).unwrap();
            let t = truncate(g.as_ref(), 4, 2).unwrap();
            for v in t.frontier_vertices() {
                assert!(!t.dimaze.is_exit(v));
            }
        }
    }

    #[test]
    fn tnd_truncation() {
        let t = truncate_bipartite(&Tnd, 4, 8).unwrap();
        assert_eq!(t.graph.left()[0], "v1");
        assert!(t.graph.right().contains(&"A1".to_string()));
        assert!(!t.frontier_left.iter().any(|&f| f));
        let cut: Vec<&str> = (0..t.graph.right_len())
            .filter(|&w| t.frontier_right[w])
            .map(|w| t.graph.right()[w].as_str())
            .collect();
        assert_eq!(cut, ["A4"]);
    }

    #[test]
    fn converted_frontier() {
        let t = truncate(&Builtin::RO, 3, 1).unwrap();
        let c = t.to_bimaze().unwrap();
        let b = &c.bimaze;
        let right: Vec<&str> = b
            .frontier_right()
            .iter()
            .map(|&w| b.graph.right()[w].as_str())
            .collect();
        assert_eq!(right, ["x3*"]);
        assert!(b.frontier_left().is_empty());
    }
}
