//! Bipartite graphs, bimazes, transversal and path-transversal oracles, and
//! presentation reductions.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matroid::{independence_table, GroundSet, IndependenceOracle};

/// A bipartite graph with left class `V` and right class `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartite {
    left: Vec<String>,
    right: Vec<String>,
    adj: Vec<Vec<usize>>,
    radj: Vec<Vec<usize>>,
    left_index: HashMap<String, usize>,
    right_index: HashMap<String, usize>,
}

fn index_names(names: &[String], side: &str) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.clone(), i).is_some() {
            return Err(Error::InvalidBimaze(format!(
                "duplicate {side} vertex `{n}`"
            )));
        }
    }
    Ok(index)
}

impl Bipartite {
    pub fn new<S: AsRef<str>>(left: &[S], right: &[S], edges: &[(S, S)]) -> Result<Self> {
        let left: Vec<String> = left.iter().map(|s| s.as_ref().to_string()).collect();
        let right: Vec<String> = right.iter().map(|s| s.as_ref().to_string()).collect();
        let li = index_names(&left, "left")?;
        let ri = index_names(&right, "right")?;
        let edges = edges
            .iter()
            .map(|(v, w)| {
                let v = li.get(v.as_ref()).copied().ok_or_else(|| {
                    Error::InvalidBimaze(format!("edge end `{}` is not a left vertex", v.as_ref()))
                })?;
                let w = ri.get(w.as_ref()).copied().ok_or_else(|| {
                    Error::InvalidBimaze(format!("edge end `{}` is not a right vertex", w.as_ref()))
                })?;
                Ok((v, w))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(left, right, &edges)
    }

    pub fn from_indices(
        left: Vec<String>,
        right: Vec<String>,
        edges: &[(usize, usize)],
    ) -> Result<Self> {
        let left_index = index_names(&left, "left")?;
        let right_index = index_names(&right, "right")?;
        if let Some(n) = left.iter().find(|n| right_index.contains_key(*n)) {
            return Err(Error::InvalidBimaze(format!("`{n}` is on both sides")));
        }
        let mut adj = vec![Vec::new(); left.len()];
        let mut radj = vec![Vec::new(); right.len()];
        let mut seen = HashSet::new();
        for &(v, w) in edges {
            if v >= left.len() || w >= right.len() {
                return Err(Error::InvalidBimaze(format!("edge ({v},{w}) out of range")));
            }
            if !seen.insert((v, w)) {
                return Err(Error::InvalidBimaze(format!(
                    "parallel edge {}{}",
                    left[v], right[w]
                )));
            }
            adj[v].push(w);
            radj[w].push(v);
        }
        adj.iter_mut().for_each(|l| l.sort_unstable());
        radj.iter_mut().for_each(|l| l.sort_unstable());
        Ok(Bipartite {
            left,
            right,
            adj,
            radj,
            left_index,
            right_index,
        })
    }

    pub fn left(&self) -> &[String] {
        &self.left
    }

    pub fn right(&self) -> &[String] {
        &self.right
    }

    pub fn left_len(&self) -> usize {
        self.left.len()
    }

    pub fn right_len(&self) -> usize {
        self.right.len()
    }

    pub fn left_of(&self, name: &str) -> Option<usize> {
        self.left_index.get(name).copied()
    }

    pub fn right_of(&self, name: &str) -> Option<usize> {
        self.right_index.get(name).copied()
    }

    pub fn lefts_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        names
            .iter()
            .map(|n| {
                self.left_of(n.as_ref())
                    .ok_or_else(|| Error::UnknownElement(n.as_ref().into()))
            })
            .collect()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn right_neighbours(&self, w: usize) -> &[usize] {
        &self.radj[w]
    }

    pub fn has_edge(&self, v: usize, w: usize) -> bool {
        self.adj[v].binary_search(&w).is_ok()
    }

    /// Edges as (left, right), sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(v, l)| l.iter().map(move |&w| (v, w)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn with_edges(&self, edges: &[(usize, usize)]) -> Result<Bipartite> {
        Bipartite::from_indices(self.left.clone(), self.right.clone(), edges)
    }

    /// Drops the flagged right vertices.
    pub fn delete_right(&self, remove: &[bool]) -> Bipartite {
        let mut map = vec![None; self.right.len()];
        let mut right = Vec::new();
        for w in 0..self.right.len() {
            if !remove[w] {
                map[w] = Some(right.len());
                right.push(self.right[w].clone());
            }
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter_map(|(v, w)| Some((v, map[w]?)))
            .collect();
        Bipartite::from_indices(self.left.clone(), right, &edges)
            .expect("subgraph of a valid graph")
    }

    /// Maximum matching of the left vertices in `allowed` (in ascending order),
    /// returned as right-to-left partners.
    pub fn max_matching_within(&self, allowed: &[bool]) -> Vec<Option<usize>> {
        let mut partner: Vec<Option<usize>> = vec![None; self.right.len()];
        for v in 0..self.left.len() {
            if allowed[v] {
                let mut seen = vec![false; self.right.len()];
                augment_from(&self.adj, v, &mut partner, &mut seen);
            }
        }
        partner
    }

    pub fn rank_of(&self, set: &[usize]) -> usize {
        let mut allowed = vec![false; self.left.len()];
        set.iter().for_each(|&v| allowed[v] = true);
        self.max_matching_within(&allowed)
            .iter()
            .filter(|p| p.is_some())
            .count()
    }

    /// A matching covering `set`, if one exists.
    pub fn match_set(&self, set: &[usize]) -> Option<Matching> {
        let mut partner: Vec<Option<usize>> = vec![None; self.right.len()];
        for &v in set {
            let mut seen = vec![false; self.right.len()];
            if !augment_from(&self.adj, v, &mut partner, &mut seen) {
                return None;
            }
        }
        Some(Matching::from_partners(&partner))
    }
}

fn augment_from(
    adj: &[Vec<usize>],
    v: usize,
    partner: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &w in &adj[v] {
        if seen[w] {
            continue;
        }
        seen[w] = true;
        if partner[w].is_none() || augment_from(adj, partner[w].expect("checked"), partner, seen) {
            partner[w] = Some(v);
            return true;
        }
    }
    false
}

/// A set of disjoint (left, right) edges, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        Matching { pairs }
    }

    fn from_partners(partner: &[Option<usize>]) -> Self {
        Matching::new(
            partner
                .iter()
                .enumerate()
                .filter_map(|(w, p)| p.map(|v| (v, w)))
                .collect(),
        )
    }

    pub fn left_covered(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.pairs.iter().map(|p| p.0).collect();
        v.sort_unstable();
        v
    }

    pub fn right_covered(&self) -> Vec<usize> {
        let mut w: Vec<usize> = self.pairs.iter().map(|p| p.1).collect();
        w.sort_unstable();
        w
    }

    pub fn validate(&self, g: &Bipartite) -> Result<()> {
        let mut lv = HashSet::new();
        let mut rw = HashSet::new();
        for &(v, w) in &self.pairs {
            if v >= g.left_len() || w >= g.right_len() || !g.has_edge(v, w) {
                return Err(Error::InvalidMatching(format!("({v},{w}) is not an edge")));
            }
            if !lv.insert(v) || !rw.insert(w) {
                return Err(Error::InvalidMatching("edges are not disjoint".into()));
            }
        }
        Ok(())
    }

    pub fn to_names(&self, g: &Bipartite) -> Vec<(String, String)> {
        self.pairs
            .iter()
            .map(|&(v, w)| (g.left[v].clone(), g.right[w].clone()))
            .collect()
    }
}

/// A bipartite graph with a matching `m₀` onto its right class.
///
/// Truncations of infinite bimazes flag frontier vertices whose neighbourhood
/// was cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimaze {
    pub graph: Bipartite,
    /// `m0[w]` is the left partner of right vertex `w`.
    m0: Vec<usize>,
    frontier_left: Vec<bool>,
    frontier_right: Vec<bool>,
}

impl Bimaze {
    /// `m0` lists (left, right) pairs by name.
    pub fn new<S: AsRef<str>>(graph: Bipartite, m0: &[(S, S)]) -> Result<Self> {
        let pairs = m0
            .iter()
            .map(|(v, w)| {
                let v = graph.left_of(v.as_ref()).ok_or_else(|| {
                    Error::InvalidBimaze(format!("m0 end `{}` is not a left vertex", v.as_ref()))
                })?;
                let w = graph.right_of(w.as_ref()).ok_or_else(|| {
                    Error::InvalidBimaze(format!("m0 end `{}` is not a right vertex", w.as_ref()))
                })?;
                Ok((v, w))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(graph, &pairs)
    }

    pub fn from_indices(graph: Bipartite, m0: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![None; graph.right_len()];
        let mut used = HashSet::new();
        for &(v, w) in m0 {
            if v >= graph.left_len() || w >= graph.right_len() || !graph.has_edge(v, w) {
                return Err(Error::InvalidBimaze(format!(
                    "m0 pair ({v},{w}) is not an edge"
                )));
            }
            if partner[w].is_some() || !used.insert(v) {
                return Err(Error::InvalidBimaze("m0 is not a matching".into()));
            }
            partner[w] = Some(v);
        }
        let m0 = partner
            .iter()
            .enumerate()
            .map(|(w, p)| {
                p.ok_or_else(|| {
                    Error::InvalidBimaze(format!(
                        "m0 does not cover right vertex `{}`",
                        graph.right()[w]
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let (l, r) = (graph.left_len(), graph.right_len());
        Ok(Bimaze {
            graph,
            m0,
            frontier_left: vec![false; l],
            frontier_right: vec![false; r],
        })
    }

    pub fn with_frontier(mut self, left: &[usize], right: &[usize]) -> Self {
        left.iter().for_each(|&v| self.frontier_left[v] = true);
        right.iter().for_each(|&w| self.frontier_right[w] = true);
        self
    }

    pub fn m0_partner(&self, w: usize) -> usize {
        self.m0[w]
    }

    /// `m₀` as (left, right) pairs.
    pub fn m0(&self) -> Matching {
        Matching::new(self.m0.iter().enumerate().map(|(w, &v)| (v, w)).collect())
    }

    pub fn frontier_left(&self) -> Vec<usize> {
        (0..self.frontier_left.len())
            .filter(|&v| self.frontier_left[v])
            .collect()
    }

    pub fn frontier_right(&self) -> Vec<usize> {
        (0..self.frontier_right.len())
            .filter(|&w| self.frontier_right[w])
            .collect()
    }

    pub fn has_frontier(&self) -> bool {
        self.frontier_left
            .iter()
            .chain(&self.frontier_right)
            .any(|&f| f)
    }

    fn m0_left_partner(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.graph.left_len()];
        for (w, &v) in self.m0.iter().enumerate() {
            out[v] = Some(w);
        }
        out
    }

    /// The graph without non-`m₀` edges at frontier vertices and their `m₀` partners.
    fn sealed(&self) -> Bipartite {
        let partner = self.m0_left_partner();
        let mut bad_left = self.frontier_left.clone();
        let mut bad_right = self.frontier_right.clone();
        for v in 0..bad_left.len() {
            if self.frontier_left[v] {
                if let Some(w) = partner[v] {
                    bad_right[w] = true;
                }
            }
        }
        for w in 0..bad_right.len() {
            if self.frontier_right[w] {
                bad_left[self.m0[w]] = true;
            }
        }
        let edges: Vec<(usize, usize)> = self
            .graph
            .edges()
            .into_iter()
            .filter(|&(v, w)| self.m0[w] == v || (!bad_left[v] && !bad_right[w]))
            .collect();
        self.graph.with_edges(&edges).expect("subgraph")
    }
}

/// A component of `m ∪ m₀`, as left and right vertex lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub touches_frontier: bool,
}

/// Components of `m ∪ m₀`.
pub fn components(b: &Bimaze, m: &Matching) -> Vec<Component> {
    let l = b.graph.left_len();
    let n = l + b.graph.right_len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut x = x;
        while parent[x] != r {
            let next = parent[x];
            parent[x] = r;
            x = next;
        }
        r
    }
    let mut union = |a: usize, c: usize| {
        let (ra, rc) = (find(&mut parent, a), find(&mut parent, c));
        if ra != rc {
            parent[ra.max(rc)] = ra.min(rc);
        }
    };
    for &(v, w) in m.pairs.iter().chain(b.m0().pairs.iter()) {
        union(v, l + w);
    }
    let mut groups: std::collections::BTreeMap<usize, Component> = Default::default();
    for x in 0..n {
        let r = find(&mut parent, x);
        let c = groups.entry(r).or_insert(Component {
            left: vec![],
            right: vec![],
            touches_frontier: false,
        });
        if x < l {
            c.left.push(x);
            c.touches_frontier |= b.frontier_left[x];
        } else {
            c.right.push(x - l);
            c.touches_frontier |= b.frontier_right[x - l];
        }
    }
    groups.into_values().collect()
}

/// Three-valued answer for `m₀`-matchability on a possibly truncated bimaze.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MptAnswer {
    Yes(Matching),
    No,
    Inconclusive,
}

/// Decides whether `set` is `m₀`-matchable.
///
/// On a truncation, a witness may not use non-`m₀` edges at frontier vertices
/// (nor at their `m₀` partners), so its components never reach the cut. A set
/// is refused outright only if its non-frontier part is already unmatchable.
pub fn mpt_decide(b: &Bimaze, set: &[usize]) -> MptAnswer {
    if !b.has_frontier() {
        return match b.graph.match_set(set) {
            Some(m) => MptAnswer::Yes(m),
            None => MptAnswer::No,
        };
    }
    if let Some(m) = b.sealed().match_set(set) {
        return MptAnswer::Yes(m);
    }
    let inner: Vec<usize> = set
        .iter()
        .copied()
        .filter(|&v| !b.frontier_left[v])
        .collect();
    if b.graph.match_set(&inner).is_none() {
        MptAnswer::No
    } else {
        MptAnswer::Inconclusive
    }
}

/// `M_T(G)`: matchable subsets of the left class.
pub fn mt_oracle(g: &Bipartite) -> Result<IndependenceOracle> {
    let ground = GroundSet::new(g.left.iter().cloned())?;
    let g = Arc::new(g.clone());
    Ok(IndependenceOracle::new(ground, move |s| {
        let set: Vec<usize> = s.iter().collect();
        g.match_set(&set).is_some()
    }))
}

/// `M_PT(G,m₀)`, with frontier-conservative semantics on truncations.
pub fn mpt_oracle(b: &Bimaze) -> Result<IndependenceOracle> {
    let ground = GroundSet::new(b.graph.left.iter().cloned())?;
    let b = Arc::new(b.clone());
    Ok(IndependenceOracle::new(ground, move |s| {
        let set: Vec<usize> = s.iter().collect();
        matches!(mpt_decide(&b, &set), MptAnswer::Yes(_))
    }))
}

/// Flips `m` along every component of `m ∪ m₀` that meets `W−m`.
pub fn extend_onto(b: &Bimaze, m: &Matching) -> Result<Matching> {
    m.validate(&b.graph)?;
    let covered: HashSet<usize> = m.right_covered().into_iter().collect();
    let m0 = b.m0();
    let mut result: HashSet<(usize, usize)> = m.pairs.iter().copied().collect();
    for c in components(b, m) {
        if !c.right.iter().any(|w| !covered.contains(w)) {
            continue;
        }
        let lefts: HashSet<usize> = c.left.iter().copied().collect();
        let comp_m: Vec<(usize, usize)> = m
            .pairs
            .iter()
            .copied()
            .filter(|(v, _)| lefts.contains(v))
            .collect();
        let comp_m0: Vec<(usize, usize)> = m0
            .pairs
            .iter()
            .copied()
            .filter(|(v, _)| lefts.contains(v))
            .collect();
        for e in &comp_m {
            result.remove(e);
        }
        result.extend(comp_m0);
    }
    let out = Matching::new(result.into_iter().collect());
    out.validate(&b.graph)
        .map_err(|e| Error::Internal(format!("extension is not a matching: {e}")))?;
    if out.pairs.len() != b.graph.right_len() {
        return Err(Error::Internal("extension does not cover W".into()));
    }
    Ok(out)
}

/// Deletes right vertices missed by a maximum matching; returns the reduced
/// graph and the left neighbours of the deleted vertices (all coloops).
pub fn reduce_cover_rhs(g: &Bipartite) -> (Bipartite, Vec<usize>) {
    let partner = g.max_matching_within(&vec![true; g.left_len()]);
    let remove: Vec<bool> = partner.iter().map(Option::is_none).collect();
    let mut coloops: Vec<usize> = (0..g.right_len())
        .filter(|&w| remove[w])
        .flat_map(|w| g.right_neighbours(w).iter().copied())
        .collect();
    coloops.sort_unstable();
    coloops.dedup();
    (g.delete_right(&remove), coloops)
}

fn is_coloop_without(g: &Bipartite, v: usize, w: usize) -> bool {
    let x: Vec<usize> = (0..g.left_len()).filter(|&u| !g.has_edge(u, w)).collect();
    let without: Vec<usize> = x.iter().copied().filter(|&u| u != v).collect();
    g.rank_of(&without) < g.rank_of(&x)
}

/// Adds every non-edge `vw` with `v` a coloop of `M_T(G)∖N(w)`, to a fixed point.
pub fn maximal_presentation(g: &Bipartite) -> Bipartite {
    let mut g = g.clone();
    loop {
        let mut changed = false;
        for v in 0..g.left_len() {
            for w in 0..g.right_len() {
                if !g.has_edge(v, w) && is_coloop_without(&g, v, w) {
                    let mut edges = g.edges();
                    edges.push((v, w));
                    g = g.with_edges(&edges).expect("new edge is fresh");
                    changed = true;
                }
            }
        }
        if !changed {
            return g;
        }
    }
}

fn matchable_table(g: &Bipartite, cap: usize) -> Result<Vec<bool>> {
    independence_table(&mt_oracle(g)?, cap)
}

/// Deletes edges in lexicographic order whenever the matroid survives, to a fixed point.
pub fn minimal_presentation(g: &Bipartite, cap: usize) -> Result<Bipartite> {
    let target = matchable_table(g, cap)?;
    let mut g = g.clone();
    loop {
        let mut changed = false;
        for e in g.edges() {
            let edges: Vec<(usize, usize)> = g.edges().into_iter().filter(|&f| f != e).collect();
            let candidate = g.with_edges(&edges)?;
            if matchable_table(&candidate, cap)? == target {
                g = candidate;
                changed = true;
            }
        }
        if !changed {
            return Ok(g);
        }
    }
}

/// Right neighbourhoods as sorted left-name lists, themselves sorted.
pub fn neighbourhood_multiset(g: &Bipartite) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = (0..g.right_len())
        .map(|w| {
            let mut n: Vec<String> = g
                .right_neighbours(w)
                .iter()
                .map(|&v| g.left[v].clone())
                .collect();
            n.sort();
            n
        })
        .collect();
    out.sort();
    out
}

/// Whether `a` and `b` share the left class and agree up to renaming right vertices.
pub fn same_up_to_right_relabelling(a: &Bipartite, b: &Bipartite) -> bool {
    let mut la = a.left.clone();
    let mut lb = b.left.clone();
    la.sort();
    lb.sort();
    la == lb && neighbourhood_multiset(a) == neighbourhood_multiset(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{check_axioms, coloops, same_matroid, ElemSet, DEFAULT_CAP};

    fn u23() -> Bipartite {
        Bipartite::new(
            &["a", "b", "c"],
            &["w1", "w2"],
            &[("a", "w1"), ("b", "w1"), ("b", "w2"), ("c", "w2")],
        )
        .unwrap()
    }

    #[test]
    fn mt_examples() {
        let g = Bipartite::new(&["a", "b"], &["w"], &[("a", "w"), ("b", "w")]).unwrap();
        let m = mt_oracle(&g).unwrap();
        let u12 = IndependenceOracle::uniform(1, ["a", "b"]).unwrap();
        assert!(same_matroid(&m, &u12, DEFAULT_CAP).unwrap());

        let m = mt_oracle(&u23()).unwrap();
        let u = IndependenceOracle::uniform(2, ["a", "b", "c"]).unwrap();
        assert!(same_matroid(&m, &u, DEFAULT_CAP).unwrap());
        assert!(check_axioms(&m, DEFAULT_CAP).unwrap().all_passed());
    }

    #[test]
    fn coloop_of_single_edge() {
        let g = Bipartite::new(&["a"], &["w"], &[("a", "w")]).unwrap();
        assert_eq!(
            coloops(&mt_oracle(&g).unwrap(), DEFAULT_CAP).unwrap(),
            ElemSet(1)
        );
    }

    #[test]
    fn m0_must_cover_w() {
        let g = Bipartite::new(&["a", "b"], &["w", "u"], &[("a", "w"), ("b", "w")]).unwrap();
        assert!(Bimaze::new(g, &[("a", "w")]).is_err());
    }

    fn path_bimaze() -> Bimaze {
        let g = Bipartite::new(
            &["s", "x", "t"],
            &["s*", "x*"],
            &[("s", "s*"), ("x", "x*"), ("x", "s*"), ("t", "x*")],
        )
        .unwrap();
        Bimaze::new(g, &[("s", "s*"), ("x", "x*")]).unwrap()
    }

    #[test]
    fn mpt_component_trace() {
        let b = path_bimaze();
        let MptAnswer::Yes(m) = mpt_decide(&b, &[1, 2]) else {
            panic!("expected a matching")
        };
        assert_eq!(
            m.to_names(&b.graph),
            vec![("x".into(), "s*".into()), ("t".into(), "x*".into())]
        );
        let comps = components(&b, &m);
        let big: Vec<_> = comps.iter().filter(|c| c.left.len() > 1).collect();
        assert_eq!(big.len(), 1);
        assert_eq!(big[0].left, vec![0, 1, 2]);
    }

    #[test]
    fn extend_examples() {
        let b = path_bimaze();
        assert_eq!(extend_onto(&b, &Matching::default()).unwrap(), b.m0());
        let m = Matching::new(vec![(1, 0)]);
        // the only component meeting x* also carries s*, so the flip lands on m0
        let e = extend_onto(&b, &m).unwrap();
        assert_eq!(e.pairs, vec![(0, 0), (1, 1)]);
        assert!(e.left_covered().contains(&1));
    }

    #[test]
    fn frontier_makes_the_whole_left_class_inconclusive() {
        // Truncated converted bimaze of an incoming ray x1 <- x2 <- x3.
        let g = Bipartite::new(
            &["x1", "x2", "x3"],
            &["x2*", "x3*"],
            &[("x1", "x2*"), ("x2", "x2*"), ("x2", "x3*"), ("x3", "x3*")],
        )
        .unwrap();
        let b = Bimaze::new(g, &[("x2", "x2*"), ("x3", "x3*")])
            .unwrap()
            .with_frontier(&[2], &[]);
        assert_eq!(mpt_decide(&b, &[0, 1, 2]), MptAnswer::Inconclusive);
        assert!(matches!(mpt_decide(&b, &[1, 2]), MptAnswer::Yes(_)));
    }

    #[test]
    fn reduce_examples() {
        let g = Bipartite::new(&["a"], &["w", "z"], &[("a", "w")]).unwrap();
        let (r, c) = reduce_cover_rhs(&g);
        assert_eq!(r.right(), ["w".to_string()]);
        assert!(c.is_empty());

        let g = Bipartite::new(&["a"], &["w1", "w2"], &[("a", "w1"), ("a", "w2")]).unwrap();
        let (r, c) = reduce_cover_rhs(&g);
        assert_eq!(r.right_len(), 1);
        assert_eq!(c, vec![0]);
        assert!(same_matroid(
            &mt_oracle(&g).unwrap(),
            &mt_oracle(&r).unwrap(),
            DEFAULT_CAP
        )
        .unwrap());
    }

    #[test]
    fn maximal_of_u23_is_complete() {
        let g = maximal_presentation(&u23());
        assert_eq!(g.edge_count(), 6);
        assert_eq!(maximal_presentation(&g), g);
    }

    #[test]
    fn minimal_of_complete_u23() {
        let full = maximal_presentation(&u23());
        let min = minimal_presentation(&full, DEFAULT_CAP).unwrap();
        assert_eq!(min.edge_count(), 4);
        assert_eq!(min.edges(), vec![(0, 1), (1, 0), (2, 0), (2, 1)],);
        assert!(same_matroid(
            &mt_oracle(&min).unwrap(),
            &mt_oracle(&full).unwrap(),
            DEFAULT_CAP
        )
        .unwrap());
        assert_eq!(minimal_presentation(&min, DEFAULT_CAP).unwrap(), min);
    }
}
