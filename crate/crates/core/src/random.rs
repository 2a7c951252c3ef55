//! Seeded random instances and exhaustive small families.

use std::collections::HashSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bimaze::{Bimaze, Bipartite};
use crate::dimaze::Dimaze;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn vertex_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// A loopless digraph with each ordered pair an edge with probability `edge_p`;
/// each sink becomes an exit with probability `exit_p`.
pub fn random_dimaze<R: Rng>(rng: &mut R, n: usize, edge_p: f64, exit_p: f64) -> Dimaze {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(edge_p) {
                edges.push((u, v));
            }
        }
    }
    let mut has_out = vec![false; n];
    edges.iter().for_each(|&(u, _)| has_out[u] = true);
    let exits: Vec<usize> = (0..n)
        .filter(|&v| !has_out[v] && rng.gen_bool(exit_p))
        .collect();
    Dimaze::from_indices(vertex_names(n), &edges, &exits).expect("exits are sinks")
}

/// Random dimaze on at most `max_n` vertices with mixed densities.
pub fn random_small_dimaze<R: Rng>(rng: &mut R, max_n: usize) -> Dimaze {
    let n = rng.gen_range(1..=max_n);
    let edge_p = rng.gen_range(0.15..0.55);
    let exit_p = rng.gen_range(0.4..0.95);
    random_dimaze(rng, n, edge_p, exit_p)
}

fn encode(n: usize, edges: &[(usize, usize)], exits: &[usize], perm: &[usize]) -> (u64, u64) {
    let mut e = 0u64;
    for &(u, v) in edges {
        e |= 1 << (perm[u] * n + perm[v]);
    }
    let x = exits.iter().fold(0u64, |acc, &b| acc | 1 << perm[b]);
    (e, x)
}

/// Every dimaze on `n ≤ max_n` vertices (`n ≥ 1`), one per isomorphism class.
pub fn all_dimazes(max_n: usize) -> Vec<Dimaze> {
    assert!(
        max_n <= 5,
        "exhaustive enumeration is meant for tiny dimazes"
    );
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n)
            .cartesian_product(0..n)
            .filter(|(u, v)| u != v)
            .collect();
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let mut seen: HashSet<(u64, u64)> = HashSet::new();
        for emask in 0u64..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|&i| emask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let mut has_out = vec![false; n];
            edges.iter().for_each(|&(u, _)| has_out[u] = true);
            let sinks: Vec<usize> = (0..n).filter(|&v| !has_out[v]).collect();
            for xmask in 0u64..1 << sinks.len() {
                let exits: Vec<usize> = (0..sinks.len())
                    .filter(|&i| xmask >> i & 1 == 1)
                    .map(|i| sinks[i])
                    .collect();
                let canon = perms
                    .iter()
                    .map(|p| encode(n, &edges, &exits, p))
                    .min()
                    .expect("n ≥ 1");
                if seen.insert(canon) {
                    out.push(
                        Dimaze::from_indices(vertex_names(n), &edges, &exits)
                            .expect("exits are sinks"),
                    );
                }
            }
        }
    }
    out
}

/// A bipartite graph with each pair an edge with probability `edge_p`.
pub fn random_bipartite<R: Rng>(rng: &mut R, left: usize, right: usize, edge_p: f64) -> Bipartite {
    let edges: Vec<(usize, usize)> = (0..left)
        .cartesian_product(0..right)
        .filter(|_| rng.gen_bool(edge_p))
        .collect();
    Bipartite::from_indices(
        vertex_names(left),
        (0..right).map(|j| format!("w{j}")).collect(),
        &edges,
    )
    .expect("fresh names")
}

/// A bimaze with a random `m₀` (needs `right ≤ left`) plus random extra edges.
pub fn random_bimaze<R: Rng>(rng: &mut R, left: usize, right: usize, edge_p: f64) -> Bimaze {
    assert!(right <= left, "m0 must cover the right class");
    let mut order: Vec<usize> = (0..left).collect();
    order.shuffle(rng);
    let m0: Vec<(usize, usize)> = (0..right).map(|w| (order[w], w)).collect();
    let mut edges: Vec<(usize, usize)> = (0..left)
        .cartesian_product(0..right)
        .filter(|&(v, w)| order[w] == v || rng.gen_bool(edge_p))
        .collect();
    edges.sort_unstable();
    let g = Bipartite::from_indices(
        vertex_names(left),
        (0..right).map(|j| format!("w{j}")).collect(),
        &edges,
    )
    .expect("fresh names");
    Bimaze::from_indices(g, &m0).expect("m0 edges are present")
}
