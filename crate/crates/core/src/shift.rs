//! Shifting a dimaze along a linkage, the walk/path correspondence, and dimaze
//! presentations of minors.

use std::collections::{HashMap, HashSet};

use crate::dimaze::{
    link, max_linkage, ml_oracle, AltWalk, Dimaze, LinkOutcome, PathSystem, QIndex,
};
use crate::error::{Error, Result};
use crate::matroid::{minor_normalize, ElemSet, IndependenceOracle, MinorSpec};

/// The `Q`-shifted dimaze `(D₁,B₁)` together with the data it came from.
#[derive(Clone, Debug)]
pub struct ShiftedDimaze {
    pub d1: Dimaze,
    pub source: Dimaze,
    pub q: PathSystem,
    qi: QIndex,
    forward: Vec<Option<usize>>,
    backward: Vec<Option<usize>>,
}

impl ShiftedDimaze {
    /// `Q⃗(v)`, defined off `Ter(Q)`.
    pub fn forward(&self, v: usize) -> Option<usize> {
        self.forward[v]
    }

    /// `Q⃖(v)`, defined off `Ini(Q)`.
    pub fn backward(&self, v: usize) -> Option<usize> {
        self.backward[v]
    }

    pub fn q_index(&self) -> &QIndex {
        &self.qi
    }
}

/// Builds `D₁ := Q⃗(D)` with exits `B₁ := (B₀∖T)∪S`.
pub fn shift(d: &Dimaze, q: &PathSystem) -> Result<ShiftedDimaze> {
    q.validate(d, true)?;
    let n = d.len();
    let qi = QIndex::new(n, q);
    let ter: HashSet<usize> = q.terminals().into_iter().collect();
    let ini: HashSet<usize> = q.initials().into_iter().collect();
    let mut forward = vec![None; n];
    let mut backward = vec![None; n];
    for v in 0..n {
        if !qi.contains(v) {
            forward[v] = Some(v);
            backward[v] = Some(v);
        } else {
            forward[v] = qi.succ(v);
            backward[v] = qi.pred(v);
        }
    }
    let edges: Vec<(usize, usize)> = d
        .edges()
        .into_iter()
        .map(|(v, u)| {
            if qi.is_edge(v, u) {
                (u, v)
            } else {
                (forward[v].expect("tails of edges are not terminal"), u)
            }
        })
        .collect();
    let mut exits: Vec<usize> = d.exits().into_iter().filter(|b| !ter.contains(b)).collect();
    exits.extend(ini.iter().copied());
    exits.sort_unstable();
    let d1 = Dimaze::from_indices(d.names().to_vec(), &edges, &exits)
        .map_err(|e| Error::Internal(format!("shifted digraph is not a dimaze: {e}")))?;
    Ok(ShiftedDimaze {
        d1,
        source: d.clone(),
        q: q.clone(),
        qi,
        forward,
        backward,
    })
}

fn in_b1(sh: &ShiftedDimaze, v: usize) -> bool {
    sh.d1.is_exit(v)
}

/// `Q⃗(W)`: drops every edge, and every `wᵢ ∈ V(Q)` whose `eᵢ ∉ E(Q)`.
pub fn walk_to_path(sh: &ShiftedDimaze, w: &AltWalk) -> Result<Vec<usize>> {
    w.validate(&sh.source, &sh.qi, None)?;
    if !in_b1(sh, w.terminal()) {
        return Err(Error::Precondition(format!(
            "walk ends at `{}`, outside B₁",
            sh.source.name(w.terminal())
        )));
    }
    let mut path = Vec::with_capacity(w.vertices.len());
    for (i, &v) in w.vertices.iter().enumerate() {
        if i < w.edges.len() {
            let (a, b) = w.edges[i];
            if sh.qi.contains(v) && !sh.qi.is_edge(a, b) {
                continue;
            }
        }
        path.push(v);
    }
    PathSystem::new(vec![path.clone()])
        .validate(&sh.d1, true)
        .map_err(|e| Error::Internal(format!("image of walk is not a path of D₁: {e}")))?;
    Ok(path)
}

/// `Q⃖(P)` for a path of `D₁` ending in `B₁`.
pub fn path_to_walk(sh: &ShiftedDimaze, p: &[usize]) -> Result<AltWalk> {
    PathSystem::new(vec![p.to_vec()]).validate(&sh.d1, true)?;
    let mut vertices = vec![p[0]];
    let mut edges = Vec::new();
    for pair in p.windows(2) {
        let (v, next) = (pair[0], pair[1]);
        if !sh.qi.contains(v) {
            edges.push((v, next));
        } else if sh.qi.is_edge(next, v) {
            edges.push((next, v));
        } else {
            let w = sh.backward[v].ok_or_else(|| {
                Error::Internal(format!("`{}` has no Q-predecessor", sh.d1.name(v)))
            })?;
            edges.push((w, v));
            vertices.push(w);
            edges.push((w, next));
        }
        vertices.push(next);
    }
    let walk = AltWalk { vertices, edges };
    walk.validate(&sh.source, &sh.qi, None)
        .map_err(|e| Error::Internal(format!("preimage of path is not alternating: {e}")))?;
    Ok(walk)
}

/// Checks that walks are pairwise disjoint in the alternating-walk sense.
pub fn walks_disjoint(qi: &QIndex, ws: &[AltWalk]) -> std::result::Result<(), String> {
    for (i, a) in ws.iter().enumerate() {
        for b in &ws[i + 1..] {
            if a.terminal() == b.terminal() {
                return Err("two walks share a terminal vertex".into());
            }
            let ea: HashSet<_> = a.edges.iter().collect();
            if b.edges.iter().any(|e| ea.contains(e)) {
                return Err("two walks share an edge".into());
            }
            let va: HashSet<_> = a.vertices.iter().collect();
            if b.vertices
                .iter()
                .any(|v| va.contains(v) && !qi.contains(*v))
            {
                return Err("two walks share a vertex off Q".into());
            }
        }
    }
    Ok(())
}

/// Paths of `Q Δ W` from `X := J∪(S∖Ter(W))` to `Y := T∪(Ter(W)∩B₀)`.
pub fn symdiff_paths(d: &Dimaze, q: &PathSystem, ws: &[AltWalk]) -> Result<PathSystem> {
    q.validate(d, true)?;
    let qi = QIndex::new(d.len(), q);
    let s: HashSet<usize> = q.initials().into_iter().collect();
    let t: HashSet<usize> = q.terminals().into_iter().collect();
    for w in ws {
        w.validate(d, &qi, None)?;
        if s.contains(&w.initial()) {
            return Err(Error::Precondition(format!(
                "walk starts in Ini(Q) at `{}`",
                d.name(w.initial())
            )));
        }
        let end = w.terminal();
        let ends_in_b1 = (d.is_exit(end) && !t.contains(&end)) || s.contains(&end);
        if !ends_in_b1 {
            return Err(Error::Precondition(format!(
                "walk ends at `{}`, outside B₁",
                d.name(end)
            )));
        }
    }
    walks_disjoint(&qi, ws).map_err(Error::InvalidWalk)?;

    let ter_w: HashSet<usize> = ws.iter().map(AltWalk::terminal).collect();
    let mut x: Vec<usize> = ws.iter().map(AltWalk::initial).collect();
    x.extend(q.initials().into_iter().filter(|v| !ter_w.contains(v)));
    x.sort_unstable();
    let mut y: HashSet<usize> = t.clone();
    y.extend(ter_w.iter().copied().filter(|&v| d.is_exit(v)));

    let mut edges: HashSet<(usize, usize)> = q.edges().collect();
    for w in ws {
        for &e in &w.edges {
            if !edges.remove(&e) {
                edges.insert(e);
            }
        }
    }
    let mut out: HashMap<usize, usize> = HashMap::new();
    for &(a, b) in &edges {
        if out.insert(a, b).is_some() {
            return Err(Error::Internal(format!(
                "`{}` has out-degree two in QΔW",
                d.name(a)
            )));
        }
    }
    let mut paths = Vec::with_capacity(x.len());
    for &start in &x {
        let mut path = vec![start];
        let mut v = start;
        while let Some(&u) = out.get(&v) {
            if path.len() > d.len() {
                return Err(Error::Internal("cycle in QΔW".into()));
            }
            path.push(u);
            v = u;
        }
        if !y.contains(&v) {
            return Err(Error::Internal(format!(
                "component from `{}` ends outside Y",
                d.name(start)
            )));
        }
        paths.push(path);
    }
    let result = PathSystem::new(paths);
    result
        .validate(d, false)
        .map_err(|e| Error::Internal(format!("QΔW paths are not disjoint: {e}")))?;
    Ok(result)
}

/// The maximal `P`-`Q`-alternating walk from each initial vertex of `P`.
pub fn max_pq_walks(d: &Dimaze, p: &PathSystem, q: &PathSystem) -> Result<Vec<AltWalk>> {
    p.validate(d, false)?;
    q.validate(d, false)?;
    let pi = QIndex::new(d.len(), p);
    let qi = QIndex::new(d.len(), q);
    let mut walks = Vec::with_capacity(p.len());
    for start in p.initials() {
        let mut vertices = vec![start];
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut used = HashSet::new();
        let mut seen = HashSet::from([start]);
        loop {
            let v = *vertices.last().expect("nonempty");
            let prev = edges.last().copied();
            let fwd = pi
                .succ(v)
                .filter(|&u| !qi.is_edge(v, u))
                .map(|u| ((v, u), u));
            let back = qi
                .pred(v)
                .filter(|&u| !pi.is_edge(u, v))
                .map(|u| ((u, v), u));
            let need_q = qi.contains(v) && prev.is_none_or(|(a, b)| !qi.is_edge(a, b));
            let need_p = pi.contains(v) && prev.is_some_and(|(a, b)| !pi.is_edge(a, b));
            let step = match (need_q, need_p) {
                (true, true) => None,
                (true, false) => back,
                (false, true) => fwd,
                (false, false) => fwd.or(back),
            };
            let Some((e, u)) = step else { break };
            if used.contains(&e) || (seen.contains(&u) && !qi.contains(u)) {
                break;
            }
            used.insert(e);
            seen.insert(u);
            edges.push(e);
            vertices.push(u);
        }
        walks.push(AltWalk { vertices, edges });
    }
    Ok(walks)
}

/// A dimaze presenting the minor `M_L(D,B₀)/S∖R`.
#[derive(Clone, Debug)]
pub struct MinorPresentation {
    /// `D₁−S` with exits `B₁∖S`.
    pub dimaze: Dimaze,
    /// Surviving ground elements `V∖(S∪R)`, in vertex order.
    pub ground: Vec<String>,
    pub contracted: Vec<String>,
    pub deleted: Vec<String>,
    /// The linkage from `S` onto `T` that was shifted along.
    pub linkage: PathSystem,
    /// Linkage vertices are indices of the original dimaze.
    pub base: Vec<usize>,
}

impl MinorPresentation {
    pub fn oracle(&self) -> Result<IndependenceOracle> {
        let x = self.dimaze.vertices_of(&self.ground)?;
        crate::dimaze::ml_oracle_restricted(&self.dimaze, &x)
    }
}

/// Presents `M_L(D,B₀)/S∖R`; `S` must be independent and `R` coindependent.
pub fn minor_presentation(d: &Dimaze, s: &[usize], r: &[usize]) -> Result<MinorPresentation> {
    let n = d.len();
    let mut in_s = vec![false; n];
    let mut in_r = vec![false; n];
    for &v in s {
        in_s[v] = true;
    }
    for &v in r {
        if in_s[v] {
            return Err(Error::Precondition(format!(
                "`{}` is in both S and R",
                d.name(v)
            )));
        }
        in_r[v] = true;
    }
    if !link(d, s)?.is_linked() {
        return Err(Error::Precondition("S is dependent".into()));
    }
    let all: Vec<usize> = (0..n).collect();
    let rest: Vec<usize> = (0..n).filter(|&v| !in_r[v]).collect();
    if max_linkage(d, &rest)?.0.len() != max_linkage(d, &all)?.0.len() {
        return Err(Error::Precondition("R is codependent".into()));
    }

    let mut base: Vec<usize> = s.to_vec();
    base.sort_unstable();
    for b in d.exits() {
        if in_s[b] {
            continue;
        }
        base.push(b);
        if !link(d, &base)?.is_linked() {
            base.pop();
        }
    }
    let added: HashSet<usize> = base.iter().copied().filter(|v| !in_s[*v]).collect();
    let t: Vec<usize> = d
        .exits()
        .into_iter()
        .filter(|b| !added.contains(b))
        .collect();
    let restricted = d.with_exits(&t)?;
    let q = match link(&restricted, s)? {
        LinkOutcome::Linked(q) => q,
        LinkOutcome::Separated { .. } => {
            return Err(Error::Internal("S does not link onto T".into()));
        }
    };
    let mut ter = q.terminals();
    ter.sort_unstable();
    if ter != t {
        return Err(Error::Internal("linkage from S is not onto T".into()));
    }
    let sh = shift(d, &q)?;
    let (minus_s, _) = sh.d1.delete_vertices(&in_s);
    let ground = (0..n)
        .filter(|&v| !in_s[v] && !in_r[v])
        .map(|v| d.name(v).to_string())
        .collect();
    let names = |xs: &[usize]| {
        let mut xs = xs.to_vec();
        xs.sort_unstable();
        xs.into_iter().map(|v| d.name(v).to_string()).collect()
    };
    base.sort_unstable();
    Ok(MinorPresentation {
        dimaze: minus_s,
        ground,
        contracted: names(s),
        deleted: names(r),
        linkage: q,
        base,
    })
}

/// Normalizes `M/C∖D` first, then presents it.
pub fn minor_presentation_for(
    d: &Dimaze,
    contract: &[usize],
    delete: &[usize],
) -> Result<(MinorSpec, MinorPresentation)> {
    let m = ml_oracle(d)?;
    let spec = minor_normalize(
        &m,
        ElemSet::from_indices(contract.iter().copied()),
        ElemSet::from_indices(delete.iter().copied()),
    )?;
    let s: Vec<usize> = spec.normalized_s.iter().collect();
    let r: Vec<usize> = spec.normalized_r.iter().collect();
    let pres = minor_presentation(d, &s, &r)?;
    Ok((spec, pres))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{minor, same_matroid, DEFAULT_CAP};

    fn path3() -> Dimaze {
        Dimaze::new(&["s", "x", "t"], &[("s", "x"), ("x", "t")], &["t"]).unwrap()
    }

    #[test]
    fn shift_path_dimaze() {
        let d = path3();
        let q = PathSystem::new(vec![vec![0, 1, 2]]);
        let sh = shift(&d, &q).unwrap();
        assert_eq!(sh.d1.edges(), vec![(1, 0), (2, 1)]);
        assert_eq!(sh.d1.exits(), vec![0]);
        assert_eq!(sh.forward(0), Some(1));
        assert_eq!(sh.backward(1), Some(0));
        assert_eq!(sh.forward(2), None);
    }

    #[test]
    fn empty_shift_is_identity() {
        let d = path3();
        let sh = shift(&d, &PathSystem::default()).unwrap();
        assert_eq!(sh.d1, d);
    }

    #[test]
    fn walk_path_translation() {
        let d = path3();
        let q = PathSystem::new(vec![vec![0, 1, 2]]);
        let sh = shift(&d, &q).unwrap();
        let w = AltWalk {
            vertices: vec![2, 1, 0],
            edges: vec![(1, 2), (0, 1)],
        };
        let p = walk_to_path(&sh, &w).unwrap();
        assert_eq!(p, vec![2, 1, 0]);
        assert_eq!(path_to_walk(&sh, &p).unwrap(), w);
        assert_eq!(walk_to_path(&sh, &AltWalk::trivial(0)).unwrap(), vec![0]);
        assert_eq!(path_to_walk(&sh, &[0]).unwrap(), AltWalk::trivial(0));
    }

    #[test]
    fn symdiff_examples() {
        let d = path3();
        let q = PathSystem::new(vec![vec![0, 1, 2]]);
        let w = AltWalk {
            vertices: vec![2, 1, 0],
            edges: vec![(1, 2), (0, 1)],
        };
        assert_eq!(symdiff_paths(&d, &q, &[w]).unwrap().paths, vec![vec![2]]);
        assert_eq!(symdiff_paths(&d, &q, &[]).unwrap(), q);
    }

    #[test]
    fn pq_walks_crossing_instance() {
        let d = Dimaze::new(
            &["a", "b1", "b2", "c"],
            &[("a", "b1"), ("a", "b2"), ("c", "b1")],
            &["b1", "b2"],
        )
        .unwrap();
        let p = PathSystem::new(vec![vec![3, 1], vec![0, 2]]);
        let q = PathSystem::new(vec![vec![0, 1]]);
        let ws = max_pq_walks(&d, &p, &q).unwrap();
        assert_eq!(ws[0].vertices, vec![3, 1, 0, 2]);
        assert_eq!(ws[1], AltWalk::trivial(0));
        let pi = QIndex::new(d.len(), &p);
        let qi = QIndex::new(d.len(), &q);
        for w in &ws {
            w.validate(&d, &qi, Some(&pi)).unwrap();
        }
    }

    #[test]
    fn pq_walks_trivial_cases() {
        let d = path3();
        let p = PathSystem::new(vec![vec![0, 1, 2]]);
        let ws = max_pq_walks(&d, &p, &PathSystem::default()).unwrap();
        assert_eq!(ws[0].vertices, vec![0, 1, 2]);
        let ws = max_pq_walks(&d, &p, &p).unwrap();
        assert_eq!(ws, vec![AltWalk::trivial(0)]);
    }

    #[test]
    fn contracting_an_exit() {
        let d = path3();
        let pres = minor_presentation(&d, &[2], &[]).unwrap();
        assert_eq!(pres.dimaze.names(), ["s".to_string(), "x".to_string()]);
        assert_eq!(pres.dimaze.edges(), vec![(0, 1)]);
        assert!(pres.dimaze.exits().is_empty());
        let m = pres.oracle().unwrap();
        assert!(!m.is_independent(ElemSet(0b01)) && !m.is_independent(ElemSet(0b10)));
    }

    #[test]
    fn trivial_minor_presentation() {
        let d = path3();
        let pres = minor_presentation(&d, &[], &[]).unwrap();
        assert_eq!(pres.dimaze, d);
    }

    #[test]
    fn minor_presentation_matches_oracle_minor() {
        let d = Dimaze::new(
            &["a", "b", "c", "e1", "e2"],
            &[
                ("a", "e1"),
                ("a", "b"),
                ("b", "e2"),
                ("c", "b"),
                ("c", "e1"),
            ],
            &["e1", "e2"],
        )
        .unwrap();
        let m = ml_oracle(&d).unwrap();
        for (c, del) in [(vec![0], vec![4]), (vec![1, 3], vec![]), (vec![2], vec![0])] {
            let (spec, pres) = minor_presentation_for(&d, &c, &del).unwrap();
            let expected = minor(&m, spec.contract, spec.delete).unwrap();
            assert!(same_matroid(&expected, &pres.oracle().unwrap(), DEFAULT_CAP).unwrap());
        }
    }

    #[test]
    fn dependent_s_is_rejected() {
        let d = path3();
        assert!(minor_presentation(&d, &[0, 1], &[]).is_err());
        assert!(minor_presentation(&d, &[], &[0, 1, 2]).is_err());
    }
}
