use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use super::{AltWalk, Dimaze, PathSystem, QIndex, Separator};
use crate::error::{Error, Result};
use crate::matroid::{GroundSet, IndependenceOracle};

/// Result of an alternating-walk search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WalkSearch {
    Walk(AltWalk),
    Separator(Separator),
}

/// Result of trying to link a vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinkOutcome {
    Linked(PathSystem),
    /// A maximum linkage from the set together with a separator on it; the
    /// separator is smaller than the set, which certifies dependence.
    Separated {
        partial: PathSystem,
        separator: Separator,
    },
}

impl LinkOutcome {
    pub fn is_linked(&self) -> bool {
        matches!(self, LinkOutcome::Linked(_))
    }
}

const FREE: usize = 0;
const BACK: usize = 1;

fn check_vertices(d: &Dimaze, xs: &[usize]) -> Result<()> {
    let mut seen = HashSet::new();
    for &x in xs {
        if x >= d.len() {
            return Err(Error::Precondition(format!(
                "vertex index {x} out of range"
            )));
        }
        if !seen.insert(x) {
            return Err(Error::Precondition(format!(
                "vertex `{}` listed twice",
                d.name(x)
            )));
        }
    }
    Ok(())
}

/// Searches for a `Q`-alternating walk from `X∖Ini(Q)` to `B₀∖Ter(Q)`.
///
/// Breadth-first over (vertex, arrived-backwards) states, so the walk found is
/// shortest and ties go to smaller vertex indices. Without a walk, returns the
/// separator made of the last reachable vertex of each `Q`-path (or its first
/// vertex when none is reachable).
pub fn find_alt_walk(d: &Dimaze, q: &PathSystem, x: &[usize]) -> Result<WalkSearch> {
    q.validate(d, true)?;
    check_vertices(d, x)?;
    let in_x: HashSet<usize> = x.iter().copied().collect();
    if let Some(&s) = q.initials().iter().find(|s| !in_x.contains(s)) {
        return Err(Error::Precondition(format!(
            "initial vertex `{}` of Q is not in X",
            d.name(s)
        )));
    }
    let qi = QIndex::new(d.len(), q);
    let ini: HashSet<usize> = q.initials().into_iter().collect();
    let target = |v: usize| d.is_exit(v) && !qi.contains(v);

    let mut sources: Vec<usize> = x.iter().copied().filter(|v| !ini.contains(v)).collect();
    sources.sort_unstable();
    if let Some(&s) = sources.iter().find(|&&s| target(s)) {
        return Ok(WalkSearch::Walk(AltWalk::trivial(s)));
    }

    let n = d.len();
    let mut parent: Vec<Option<(usize, (usize, usize))>> = vec![None; 2 * n];
    let mut visited = vec![false; 2 * n];
    let mut queue = VecDeque::new();
    for &s in &sources {
        visited[2 * s + FREE] = true;
        queue.push_back(2 * s + FREE);
    }
    let mut found = None;
    'search: while let Some(state) = queue.pop_front() {
        let (v, mode) = (state / 2, state % 2);
        let mut next: Vec<(usize, usize, (usize, usize))> = Vec::new();
        if !qi.contains(v) {
            next.extend(d.out(v).iter().map(|&u| (u, FREE, (v, u))));
        } else {
            if let Some(p) = qi.pred(v) {
                next.push((p, BACK, (p, v)));
            }
            if mode == BACK {
                next.extend(
                    d.out(v)
                        .iter()
                        .filter(|&&u| qi.succ(v) != Some(u))
                        .map(|&u| (u, FREE, (v, u))),
                );
            }
        }
        next.sort_unstable_by_key(|&(u, m, _)| (u, m));
        for (u, m, e) in next {
            let s2 = 2 * u + m;
            if visited[s2] {
                continue;
            }
            visited[s2] = true;
            parent[s2] = Some((state, e));
            if target(u) {
                found = Some(s2);
                break 'search;
            }
            queue.push_back(s2);
        }
    }

    if let Some(end) = found {
        let mut vertices = vec![end / 2];
        let mut edges = Vec::new();
        let mut cur = end;
        while let Some((prev, e)) = parent[cur] {
            vertices.push(prev / 2);
            edges.push(e);
            cur = prev;
        }
        vertices.reverse();
        edges.reverse();
        return Ok(WalkSearch::Walk(AltWalk { vertices, edges }));
    }

    let reached = |v: usize| visited[2 * v] || visited[2 * v + 1];
    let mut separator = Separator {
        vertices: Vec::new(),
        path_of: Vec::new(),
    };
    for (k, p) in q.paths.iter().enumerate() {
        let v = p
            .iter()
            .rev()
            .copied()
            .find(|&v| reached(v))
            .unwrap_or(p[0]);
        separator.vertices.push(v);
        separator.path_of.push(k);
    }
    Ok(WalkSearch::Separator(separator))
}

/// Reroutes `Q` along `W` by following out-edges of `E(Q)ΔE(W)`.
pub fn augment(d: &Dimaze, q: &PathSystem, w: &AltWalk) -> Result<PathSystem> {
    q.validate(d, true)?;
    let qi = QIndex::new(d.len(), q);
    w.validate(d, &qi, None)?;
    let ini = q.initials();
    let ter = q.terminals();
    if ini.contains(&w.initial()) {
        return Err(Error::InvalidWalk(format!(
            "walk starts at `{}`, already an initial vertex of Q",
            d.name(w.initial())
        )));
    }
    if !d.is_exit(w.terminal()) || ter.contains(&w.terminal()) {
        return Err(Error::InvalidWalk(format!(
            "walk ends at `{}`, which is not a free exit",
            d.name(w.terminal())
        )));
    }
    let mut edges: HashSet<(usize, usize)> = q.edges().collect();
    for &e in &w.edges {
        if !edges.remove(&e) {
            edges.insert(e);
        }
    }
    let mut out: HashMap<usize, usize> = HashMap::new();
    for &(a, b) in &edges {
        if out.insert(a, b).is_some() {
            return Err(Error::Internal(format!(
                "vertex `{}` has out-degree above one in the symmetric difference",
                d.name(a)
            )));
        }
    }
    let mut starts = ini.clone();
    starts.push(w.initial());
    let mut paths = Vec::with_capacity(starts.len());
    for s in starts {
        let mut path = vec![s];
        let mut v = s;
        while let Some(&u) = out.get(&v) {
            if path.len() > d.len() {
                return Err(Error::Internal("cycle in the symmetric difference".into()));
            }
            path.push(u);
            v = u;
        }
        paths.push(path);
    }
    let result = PathSystem::new(paths);
    result
        .validate(d, true)
        .map_err(|e| Error::Internal(format!("augmentation produced an invalid linkage: {e}")))?;
    Ok(result)
}

/// Augments from the empty linkage as long as a walk from `x` exists.
pub fn max_linkage(d: &Dimaze, x: &[usize]) -> Result<(PathSystem, Separator)> {
    grow(d, PathSystem::default(), x)
}

fn grow(d: &Dimaze, mut q: PathSystem, x: &[usize]) -> Result<(PathSystem, Separator)> {
    loop {
        match find_alt_walk(d, &q, x)? {
            WalkSearch::Walk(w) => q = augment(d, &q, &w)?,
            WalkSearch::Separator(s) => return Ok((q, s)),
        }
    }
}

/// Links `set` one element at a time, in ascending vertex order.
pub fn link(d: &Dimaze, set: &[usize]) -> Result<LinkOutcome> {
    check_vertices(d, set)?;
    let mut order = set.to_vec();
    order.sort_unstable();
    let mut q = PathSystem::default();
    for &v in &order {
        let mut x = q.initials();
        x.push(v);
        match find_alt_walk(d, &q, &x)? {
            WalkSearch::Walk(w) => q = augment(d, &q, &w)?,
            WalkSearch::Separator(_) => {
                let (partial, separator) = grow(d, q, &order)?;
                return Ok(LinkOutcome::Separated { partial, separator });
            }
        }
    }
    Ok(LinkOutcome::Linked(q.canonical()))
}

/// Whether every path from `x` to the exits meets `s`.
pub fn separates(d: &Dimaze, x: &[usize], s: &[usize]) -> bool {
    let mut blocked = vec![false; d.len()];
    s.iter().for_each(|&v| blocked[v] = true);
    let mut seen = vec![false; d.len()];
    let mut stack: Vec<usize> = x.iter().copied().filter(|&v| !blocked[v]).collect();
    stack.iter().for_each(|&v| seen[v] = true);
    while let Some(v) = stack.pop() {
        if d.is_exit(v) {
            return false;
        }
        for &u in d.out(v) {
            if !blocked[u] && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    true
}

fn linkable(d: &Dimaze, set: &[usize]) -> bool {
    link(d, set).map(|o| o.is_linked()).unwrap_or(false)
}

/// The strict gammoid `M_L(D,B₀)` on all vertices.
pub fn ml_oracle(d: &Dimaze) -> Result<IndependenceOracle> {
    let all: Vec<usize> = (0..d.len()).collect();
    ml_oracle_restricted(d, &all)
}

/// `M_L(D,B₀)|X`, with ground order following `x`.
pub fn ml_oracle_restricted(d: &Dimaze, x: &[usize]) -> Result<IndependenceOracle> {
    check_vertices(d, x)?;
    let ground = GroundSet::new(x.iter().map(|&v| d.name(v).to_string()))?;
    let d = Arc::new(d.clone());
    let map = x.to_vec();
    Ok(IndependenceOracle::new(ground, move |s| {
        let set: Vec<usize> = s.iter().map(|i| map[i]).collect();
        linkable(&d, &set)
    }))
}

/// Whether `set` can be linked onto all of `B₀`.
pub fn is_base_by_onto(d: &Dimaze, set: &[usize]) -> Result<bool> {
    Ok(match link(d, set)? {
        LinkOutcome::Linked(q) => {
            let mut ter = q.terminals();
            ter.sort_unstable();
            ter == d.exits()
        }
        LinkOutcome::Separated { .. } => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{check_axioms, enumerate, ElemSet, SetKind, DEFAULT_CAP};

    fn path3() -> Dimaze {
        Dimaze::new(&["s", "x", "t"], &[("s", "x"), ("x", "t")], &["t"]).unwrap()
    }

    #[test]
    fn walk_in_path_dimaze() {
        let d = path3();
        let r = find_alt_walk(&d, &PathSystem::default(), &[0]).unwrap();
        let WalkSearch::Walk(w) = r else {
            panic!("expected walk")
        };
        assert_eq!(w.vertices, vec![0, 1, 2]);
        assert_eq!(w.edges, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn single_edge_separator() {
        let d = Dimaze::new(&["a", "b"], &[("a", "b")], &["b"]).unwrap();
        let q = PathSystem::new(vec![vec![0, 1]]);
        let r = find_alt_walk(&d, &q, &[0]).unwrap();
        let WalkSearch::Separator(s) = r else {
            panic!("expected separator")
        };
        assert_eq!(s.path_of, vec![0]);
        assert_eq!(s.vertices.len(), 1);
        assert!(separates(&d, &[0], &s.vertices));
    }

    #[test]
    fn unreached_path_contributes_its_first_vertex() {
        let d = Dimaze::new(&["a", "b", "c"], &[("a", "b"), ("a", "c")], &["b", "c"]).unwrap();
        let q = PathSystem::new(vec![vec![0, 1]]);
        let WalkSearch::Separator(s) = find_alt_walk(&d, &q, &[0]).unwrap() else {
            panic!()
        };
        assert_eq!(s.vertices, vec![0]);
        assert!(separates(&d, &[0], &s.vertices));
        assert!(!separates(&d, &[0], &[1]));
    }

    #[test]
    fn augment_examples() {
        let d = path3();
        let w = AltWalk {
            vertices: vec![0, 1, 2],
            edges: vec![(0, 1), (1, 2)],
        };
        let q = augment(&d, &PathSystem::default(), &w).unwrap();
        assert_eq!(q.paths, vec![vec![0, 1, 2]]);

        let d = Dimaze::new(
            &["a", "b1", "b2", "c"],
            &[("a", "b1"), ("a", "b2"), ("c", "b1")],
            &["b1", "b2"],
        )
        .unwrap();
        let q = PathSystem::new(vec![vec![0, 1]]);
        let w = AltWalk {
            vertices: vec![3, 1, 0, 2],
            edges: vec![(3, 1), (0, 1), (0, 2)],
        };
        let q2 = augment(&d, &q, &w).unwrap().canonical();
        assert_eq!(q2.paths, vec![vec![0, 2], vec![3, 1]]);
    }

    #[test]
    fn augment_rejects_bad_walks() {
        let d = Dimaze::new(&["a", "b", "c"], &[("a", "b"), ("c", "b")], &["b"]).unwrap();
        let q = PathSystem::new(vec![vec![0, 1]]);
        let w = AltWalk {
            vertices: vec![2, 1],
            edges: vec![(2, 1)],
        };
        assert!(augment(&d, &q, &w).is_err());
        assert!(matches!(
            find_alt_walk(&d, &q, &[0, 2]).unwrap(),
            WalkSearch::Separator(_)
        ));
    }

    #[test]
    fn link_examples() {
        let d = path3();
        assert_eq!(
            link(&d, &[1]).unwrap(),
            LinkOutcome::Linked(PathSystem::new(vec![vec![1, 2]]))
        );
        let LinkOutcome::Separated { partial, separator } = link(&d, &[0, 1]).unwrap() else {
            panic!("expected dependence")
        };
        assert_eq!(partial.len(), 1);
        assert!(separator.vertices.len() < 2);
        assert!(separates(&d, &[0, 1], &separator.vertices));
        assert_eq!(
            link(&d, &[]).unwrap(),
            LinkOutcome::Linked(PathSystem::default())
        );
    }

    #[test]
    fn oracle_examples() {
        let d = Dimaze::new(&["a", "b"], &[("a", "b")], &["b"]).unwrap();
        let m = ml_oracle(&d).unwrap();
        assert!(m.is_independent(ElemSet(0b00)));
        assert!(m.is_independent(ElemSet(0b01)));
        assert!(m.is_independent(ElemSet(0b10)));
        assert!(!m.is_independent(ElemSet(0b11)));
        assert!(check_axioms(&m, DEFAULT_CAP).unwrap().all_passed());

        let r = ml_oracle_restricted(&d, &[0]).unwrap();
        assert!(r.is_independent(ElemSet(1)));

        let m = ml_oracle(&path3()).unwrap();
        let bases = enumerate(&m, SetKind::Bases, DEFAULT_CAP).unwrap();
        assert_eq!(bases, vec![ElemSet(0b001), ElemSet(0b010), ElemSet(0b100)]);
    }

    #[test]
    fn onto_examples() {
        let d = path3();
        assert!(is_base_by_onto(&d, &[2]).unwrap());
        assert!(!is_base_by_onto(&d, &[0, 1]).unwrap());
        let empty = Dimaze::new::<&str>(&["a"], &[], &[]).unwrap();
        assert!(is_base_by_onto(&empty, &[]).unwrap());
    }
}
