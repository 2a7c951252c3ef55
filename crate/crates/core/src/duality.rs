//! Star conversions between dimazes and bimazes, and the translation between
//! linkages onto the exits and `m₀`-matchings onto the right class.

use std::collections::HashSet;

use crate::bimaze::{mpt_decide, Bimaze, Bipartite, Matching, MptAnswer};
use crate::dimaze::{is_base_by_onto, ml_oracle, Dimaze, PathSystem};
use crate::error::{Error, Result};
use crate::matroid::{independence_table, ElemSet};

/// How right vertices of a converted bimaze correspond to non-exit vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarNaming {
    /// `(vertex index, right-vertex name)`, in right-class order.
    pub stars: Vec<(usize, String)>,
    /// The suffix that was appended; longer than `*` only after a collision.
    pub suffix: String,
}

impl StarNaming {
    /// `v ↦ v*` for each non-exit `v`, lengthening the suffix until nothing collides.
    pub fn for_dimaze(d: &Dimaze) -> Self {
        let taken: HashSet<&str> = d.names().iter().map(String::as_str).collect();
        let non_exits: Vec<usize> = (0..d.len()).filter(|&v| !d.is_exit(v)).collect();
        let mut suffix = String::from("*");
        while non_exits
            .iter()
            .any(|&v| taken.contains(format!("{}{suffix}", d.name(v)).as_str()))
        {
            suffix.push('*');
        }
        let stars = non_exits
            .iter()
            .map(|&v| (v, format!("{}{suffix}", d.name(v))))
            .collect();
        StarNaming { stars, suffix }
    }

    pub fn star_of(&self, v: usize) -> Option<usize> {
        self.stars.iter().position(|(u, _)| *u == v)
    }
}

/// A converted bimaze with its naming.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Converted {
    pub bimaze: Bimaze,
    pub naming: StarNaming,
}

impl Converted {
    /// Right index of `v*`.
    pub fn star(&self, v: usize) -> Option<usize> {
        self.naming.star_of(v)
    }

    /// The vertex whose star is right vertex `w`.
    pub fn unstar(&self, w: usize) -> usize {
        self.naming.stars[w].0
    }
}

/// The converted bimaze `D*_{B₀}` with default star names.
pub fn to_bimaze(d: &Dimaze) -> Result<Converted> {
    to_bimaze_named(d, &StarNaming::for_dimaze(d))
}

/// The converted bimaze using the given star names.
pub fn to_bimaze_named(d: &Dimaze, naming: &StarNaming) -> Result<Converted> {
    let non_exit = (0..d.len()).filter(|&v| !d.is_exit(v)).count();
    if naming.stars.len() != non_exit
        || naming
            .stars
            .iter()
            .any(|&(v, _)| v >= d.len() || d.is_exit(v))
    {
        return Err(Error::Precondition(
            "star naming does not match the non-exit vertices".into(),
        ));
    }
    let mut right_of = vec![None; d.len()];
    for (w, &(v, _)) in naming.stars.iter().enumerate() {
        right_of[v] = Some(w);
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut m0 = Vec::new();
    for (w, &(v, _)) in naming.stars.iter().enumerate() {
        edges.push((v, w));
        m0.push((v, w));
    }
    for (u, v) in d.edges() {
        edges.push((v, right_of[u].expect("tails of edges are not exits")));
    }
    let right = naming.stars.iter().map(|(_, n)| n.clone()).collect();
    let graph = Bipartite::from_indices(d.names().to_vec(), right, &edges)?;
    Ok(Converted {
        bimaze: Bimaze::from_indices(graph, &m0)?,
        naming: naming.clone(),
    })
}

/// The converted dimaze `(G,m₀)*`, plus the naming that converts it back exactly.
pub fn to_dimaze(b: &Bimaze) -> Result<(Dimaze, StarNaming)> {
    let g = &b.graph;
    let mut edges = Vec::new();
    for (w, v) in g.edges() {
        let u = b.m0_partner(v);
        if u != w {
            edges.push((u, w));
        }
    }
    let matched: HashSet<usize> = (0..g.right_len()).map(|r| b.m0_partner(r)).collect();
    let exits: Vec<usize> = (0..g.left_len()).filter(|v| !matched.contains(v)).collect();
    let d = Dimaze::from_indices(g.left().to_vec(), &edges, &exits)?;
    let stars = (0..g.right_len())
        .map(|r| (b.m0_partner(r), g.right()[r].clone()))
        .collect();
    Ok((
        d,
        StarNaming {
            stars,
            suffix: String::new(),
        },
    ))
}

/// `m := {vu* : (u,v) ∈ E(P)} ∪ {ww* : w ∉ V(P)}` for a linkage `P` onto `B₀`.
pub fn linkage_to_matching(d: &Dimaze, conv: &Converted, p: &PathSystem) -> Result<Matching> {
    p.validate(d, true)?;
    let mut ter = p.terminals();
    ter.sort_unstable();
    if ter != d.exits() {
        return Err(Error::Precondition("linkage is not onto the exits".into()));
    }
    let on_p: HashSet<usize> = p.vertices().collect();
    let mut pairs: Vec<(usize, usize)> = p
        .edges()
        .map(|(u, v)| (v, conv.star(u).expect("tails are not exits")))
        .collect();
    for w in 0..d.len() {
        if !on_p.contains(&w) {
            pairs.push((
                w,
                conv.star(w)
                    .expect("vertices off an onto linkage are not exits"),
            ));
        }
    }
    let m = Matching::new(pairs);
    m.validate(&conv.bimaze.graph)?;
    Ok(m)
}

/// Reads a linkage of `V∖V(m)` onto `B₀` off the `m₀`-`m`-alternating walks.
pub fn matching_to_linkage(d: &Dimaze, conv: &Converted, m: &Matching) -> Result<PathSystem> {
    let g = &conv.bimaze.graph;
    m.validate(g)?;
    if m.pairs.len() != g.right_len() {
        return Err(Error::InvalidMatching(
            "matching does not cover the right class".into(),
        ));
    }
    let mut partner = vec![0usize; g.right_len()];
    for &(v, w) in &m.pairs {
        partner[w] = v;
    }
    let covered: HashSet<usize> = m.left_covered().into_iter().collect();
    let mut paths = Vec::new();
    for start in (0..d.len()).filter(|v| !covered.contains(v)) {
        let mut path = vec![start];
        let mut v = start;
        while let Some(w) = conv.star(v) {
            let u = partner[w];
            if path.len() > d.len() {
                return Err(Error::InvalidMatching(
                    "alternating walk does not terminate".into(),
                ));
            }
            path.push(u);
            v = u;
        }
        paths.push(path);
    }
    let p = PathSystem::new(paths);
    p.validate(d, true)
        .map_err(|e| Error::InvalidMatching(format!("walks do not form a linkage: {e}")))?;
    Ok(p)
}

/// (†): maximal linkable sets are exactly those linkable onto `B₀`.
pub fn check_dagger(d: &Dimaze, cap: usize) -> Result<bool> {
    Ok(dagger_counterexample(d, cap)?.is_none())
}

pub fn dagger_counterexample(d: &Dimaze, cap: usize) -> Result<Option<ElemSet>> {
    let table = independence_table(&ml_oracle(d)?, cap)?;
    let n = d.len();
    for mask in 0..table.len() {
        let maximal =
            table[mask] && (0..n).all(|i| mask & (1 << i) != 0 || !table[mask | (1 << i)]);
        let set: Vec<usize> = ElemSet(mask as u64).iter().collect();
        if maximal != is_base_by_onto(d, &set)? {
            return Ok(Some(ElemSet(mask as u64)));
        }
    }
    Ok(None)
}

/// (‡): maximal `m₀`-matchable sets are exactly those `m₀`-matchable onto `W`.
pub fn check_ddagger(b: &Bimaze, cap: usize) -> Result<bool> {
    Ok(ddagger_counterexample(b, cap)?.is_none())
}

pub fn ddagger_counterexample(b: &Bimaze, cap: usize) -> Result<Option<ElemSet>> {
    let table = independence_table(&crate::bimaze::mpt_oracle(b)?, cap)?;
    let n = b.graph.left_len();
    let w = b.graph.right_len();
    for mask in 0..table.len() {
        let maximal =
            table[mask] && (0..n).all(|i| mask & (1 << i) != 0 || !table[mask | (1 << i)]);
        let set: Vec<usize> = ElemSet(mask as u64).iter().collect();
        let onto = set.len() == w && matches!(mpt_decide(b, &set), MptAnswer::Yes(_));
        if maximal != onto {
            return Ok(Some(ElemSet(mask as u64)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Dimaze {
        Dimaze::new(&["s", "x", "t"], &[("s", "x"), ("x", "t")], &["t"]).unwrap()
    }

    fn edge_names(c: &Converted) -> Vec<(String, String)> {
        let g = &c.bimaze.graph;
        g.edges()
            .into_iter()
            .map(|(v, w)| (g.left()[v].clone(), g.right()[w].clone()))
            .collect()
    }

    #[test]
    fn one_edge_conversion() {
        let d = Dimaze::new(&["a", "b"], &[("a", "b")], &["b"]).unwrap();
        let c = to_bimaze(&d).unwrap();
        assert_eq!(c.bimaze.graph.right(), ["a*".to_string()]);
        assert_eq!(
            edge_names(&c),
            vec![("a".into(), "a*".into()), ("b".into(), "a*".into())]
        );
        assert_eq!(
            c.bimaze.m0().to_names(&c.bimaze.graph),
            vec![("a".into(), "a*".into())]
        );
    }

    #[test]
    fn all_exits_give_empty_right_class() {
        let d = Dimaze::new::<&str>(&["a", "b"], &[], &["a", "b"]).unwrap();
        let c = to_bimaze(&d).unwrap();
        assert_eq!(c.bimaze.graph.right_len(), 0);
        assert!(c.bimaze.m0().pairs.is_empty());
    }

    #[test]
    fn path_conversion_and_back() {
        let d = path3();
        let c = to_bimaze(&d).unwrap();
        let mut e = edge_names(&c);
        e.sort();
        let expect: Vec<(String, String)> = [("s", "s*"), ("t", "x*"), ("x", "s*"), ("x", "x*")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        assert_eq!(e, expect);
        let (back, naming) = to_dimaze(&c.bimaze).unwrap();
        assert_eq!(back, d);
        assert_eq!(to_bimaze_named(&back, &naming).unwrap().bimaze, c.bimaze);
    }

    #[test]
    fn star_suffix_avoids_collisions() {
        let d = Dimaze::new(&["a", "a*", "t"], &[("a", "t"), ("a*", "t")], &["t"]).unwrap();
        let c = to_bimaze(&d).unwrap();
        assert_eq!(c.naming.suffix, "**");
        assert_eq!(
            c.bimaze.graph.right(),
            ["a**".to_string(), "a***".to_string()]
        );
    }

    #[test]
    fn linkage_matching_translation() {
        let d = path3();
        let c = to_bimaze(&d).unwrap();
        let p = PathSystem::new(vec![vec![0, 1, 2]]);
        let m = linkage_to_matching(&d, &c, &p).unwrap();
        assert_eq!(
            m.to_names(&c.bimaze.graph),
            vec![("x".into(), "s*".into()), ("t".into(), "x*".into())]
        );
        assert_eq!(matching_to_linkage(&d, &c, &m).unwrap(), p);

        let trivial = PathSystem::new(vec![vec![2]]);
        let m0 = linkage_to_matching(&d, &c, &trivial).unwrap();
        assert_eq!(m0, c.bimaze.m0());
        assert_eq!(matching_to_linkage(&d, &c, &m0).unwrap(), trivial);

        let not_onto = PathSystem::new(vec![vec![1, 2], vec![0]]);
        assert!(linkage_to_matching(&d, &c, &not_onto).is_err());
    }

    #[test]
    fn dagger_examples() {
        let d = path3();
        assert!(check_dagger(&d, 20).unwrap());
        assert!(check_ddagger(&to_bimaze(&d).unwrap().bimaze, 20).unwrap());
        let empty = Dimaze::new::<&str>(&["a", "b"], &[], &[]).unwrap();
        assert!(check_dagger(&empty, 20).unwrap());
    }
}
