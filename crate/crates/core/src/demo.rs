//! Scripted runs of the classic infinite examples at truncation scale.

use serde::Serialize;
use serde_json::{json, Value};

use crate::bimaze::maximal_presentation;
use crate::dimaze::{link, ml_oracle};
use crate::error::{Error, Result};
use crate::lazy::{left_degrees, truncate, truncate_bipartite, Builtin, Tnd, VertexId};
use crate::matroid::{enumerate, ElemSet, SetKind};

pub const DEMO_IDS: [&str; 3] = ["ca-cotransversal", "tnd-maximal", "tree-levels"];

#[derive(Clone, Debug, Serialize)]
pub struct DemoReport {
    pub id: String,
    pub passed: bool,
    pub facts: Value,
}

pub fn run_demo(id: &str, cap: usize) -> Result<DemoReport> {
    match id {
        "ca-cotransversal" => ca_cotransversal(cap),
        "tnd-maximal" => tnd_maximal(),
        "tree-levels" => tree_levels(),
        other => Err(Error::Precondition(format!(
            "unknown demo `{other}`; available: {}",
            DEMO_IDS.join(", ")
        ))),
    }
}

pub fn demo_gallery(cap: usize) -> Result<Vec<DemoReport>> {
    DEMO_IDS.iter().map(|id| run_demo(id, cap)).collect()
}

/// Truncated `C^A`: each exit with its in-neighbours is a cocircuit, and
/// the non-exits plus any single exit form a base.
fn ca_cotransversal(cap: usize) -> Result<DemoReport> {
    let t = truncate(&Builtin::CA, 9, 2)?;
    let d = &t.dimaze;
    let m = ml_oracle(d)?;
    let cocircuits = enumerate(&m, SetKind::Cocircuits, cap)?;
    let bases = enumerate(&m, SetKind::Bases, cap)?;
    let non_exits: Vec<usize> = (0..d.len()).filter(|&v| !d.is_exit(v)).collect();
    let mut passed = true;
    let mut per_exit = Vec::new();
    for b in d.exits() {
        let c = ElemSet::from_indices(std::iter::once(b).chain(d.inn(b).iter().copied()));
        let is_cocircuit = cocircuits.contains(&c);
        let base = ElemSet::from_indices(non_exits.iter().copied().chain(std::iter::once(b)));
        let is_base = bases.contains(&base);
        passed &= is_cocircuit && is_base;
        per_exit.push(json!({
            "exit": d.name(b),
            "cocircuit": m.ground().names_of(c),
            "is_cocircuit": is_cocircuit,
            "non_exits_plus_exit_is_base": is_base,
        }));
    }
    Ok(DemoReport {
        id: "ca-cotransversal".into(),
        passed,
        facts: json!({
            "vertices": d.len(),
            "exits": d.exits().iter().map(|&v| d.name(v)).collect::<Vec<_>>(),
            "bases": bases.len(),
            "cocircuits": cocircuits.len(),
            "per_exit": per_exit,
        }),
    })
}

/// The finitary transversal example: left degrees, left-local finiteness and
/// which edges a maximal presentation of the truncation adds.
fn tnd_maximal() -> Result<DemoReport> {
    let t = truncate_bipartite(&Tnd, 8, 8)?;
    let g = &t.graph;
    let ids: Vec<VertexId> = g
        .left()
        .iter()
        .map(|name| VertexId::V(name[1..].parse().expect("left names are v<i>")))
        .collect();
    let degrees = left_degrees(&Tnd, &ids, 64);
    let locally_finite = degrees.iter().all(Option::is_some);
    let degree_map: serde_json::Map<String, Value> = g
        .left()
        .iter()
        .zip(&degrees)
        .map(|(n, d)| (n.clone(), json!(d)))
        .collect();
    let above_two: Vec<&String> = g
        .left()
        .iter()
        .zip(&degrees)
        .filter(|(_, d)| d.is_some_and(|d| d > 2))
        .map(|(n, _)| n)
        .collect();

    let max = maximal_presentation(g);
    let again = maximal_presentation(&max);
    // A left vertex next to a cut right vertex sees a shrunken neighbourhood.
    let boundary: Vec<bool> = (0..g.left_len())
        .map(|v| {
            t.frontier_left[v]
                || g.edges()
                    .iter()
                    .any(|&(u, w)| u == v && t.frontier_right[w])
        })
        .collect();
    let mut added = Vec::new();
    let mut added_inside = Vec::new();
    for (v, w) in max.edges() {
        if !g.has_edge(v, w) {
            let e = json!([g.left()[v], g.right()[w]]);
            if !boundary[v] && !t.frontier_right[w] {
                added_inside.push(e.clone());
            }
            added.push(e);
        }
    }
    let idempotent = again == max;
    Ok(DemoReport {
        id: "tnd-maximal".into(),
        passed: locally_finite && idempotent && added_inside.is_empty(),
        facts: json!({
            "left": g.left_len(),
            "right": g.right_len(),
            "left_degrees": degree_map,
            "left_degree_above_two": above_two,
            "left_locally_finite": locally_finite,
            "maximal_presentation_added_edges": added,
            "added_edges_away_from_frontier": added_inside,
            "maximal_presentation_idempotent": idempotent,
        }),
    })
}

/// Truncated tree: vertex and exit counts per level.
fn tree_levels() -> Result<DemoReport> {
    let t = truncate(&Builtin::Tree, 3, 3)?;
    let d = &t.dimaze;
    let level = |v: usize| d.name(v).matches('.').count();
    let depth = (0..d.len()).map(level).max().unwrap_or(0);
    let mut passed = true;
    let mut rows = Vec::new();
    for l in 0..=depth {
        let at: Vec<usize> = (0..d.len()).filter(|&v| level(v) == l).collect();
        let exits = at.iter().filter(|&&v| d.is_exit(v)).count();
        passed &= if l % 2 == 0 {
            exits == at.len()
        } else {
            exits == 0
        };
        rows.push(json!({ "level": l, "vertices": at.len(), "exits": exits }));
    }
    let root_linkable = link(d, &[0])?.is_linked();
    Ok(DemoReport {
        id: "tree-levels".into(),
        passed: passed && root_linkable,
        facts: json!({
            "levels": rows,
            "frontier": t.frontier_vertices().iter().map(|&v| d.name(v)).collect::<Vec<_>>(),
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gallery_passes() {
        for r in demo_gallery(20).unwrap() {
            assert!(r.passed, "{}: {}", r.id, r.facts);
        }
    }

    #[test]
    fn tnd_degrees() {
        let r = run_demo("tnd-maximal", 20).unwrap();
        assert_eq!(r.facts["left_degrees"]["v1"], 3);
        assert_eq!(r.facts["left_degrees"]["v3"], 2);
        assert_eq!(r.facts["left_degree_above_two"], json!(["v1", "v2"]));
    }

    #[test]
    fn unknown_demo() {
        assert!(run_demo("nope", 20).is_err());
    }
}
