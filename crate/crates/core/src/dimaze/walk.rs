use std::collections::HashSet;

use super::{Dimaze, PathSystem};
use crate::error::{Error, Result};

/// Successor/predecessor lookup for a path system.
#[derive(Clone, Debug)]
pub struct QIndex {
    succ: Vec<Option<usize>>,
    pred: Vec<Option<usize>>,
    path: Vec<Option<usize>>,
}

impl QIndex {
    pub fn new(n: usize, q: &PathSystem) -> Self {
        let mut succ = vec![None; n];
        let mut pred = vec![None; n];
        let mut path = vec![None; n];
        for (k, p) in q.paths.iter().enumerate() {
            for (i, &v) in p.iter().enumerate() {
                path[v] = Some(k);
                if i + 1 < p.len() {
                    succ[v] = Some(p[i + 1]);
                    pred[p[i + 1]] = Some(v);
                }
            }
        }
        QIndex { succ, pred, path }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.path[v].is_some()
    }

    pub fn path_of(&self, v: usize) -> Option<usize> {
        self.path[v]
    }

    pub fn succ(&self, v: usize) -> Option<usize> {
        self.succ[v]
    }

    pub fn pred(&self, v: usize) -> Option<usize> {
        self.pred[v]
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.succ[u] == Some(v)
    }
}

/// A walk `w₀e₀w₁e₁…wₙ`; `edges[i]` is the edge of the digraph as oriented there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltWalk {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl AltWalk {
    pub fn trivial(v: usize) -> Self {
        AltWalk {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    /// Recovers edges from a vertex sequence: backwards along `q`, forwards otherwise.
    pub fn from_vertices(d: &Dimaze, q: &QIndex, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidWalk("empty walk".into()));
        }
        let edges = vertices
            .windows(2)
            .map(|w| {
                if q.is_edge(w[1], w[0]) {
                    Ok((w[1], w[0]))
                } else if d.has_edge(w[0], w[1]) {
                    Ok((w[0], w[1]))
                } else {
                    Err(Error::InvalidWalk(format!(
                        "no usable edge between `{}` and `{}`",
                        d.name(w[0]),
                        d.name(w[1])
                    )))
                }
            })
            .collect::<Result<_>>()?;
        Ok(AltWalk { vertices, edges })
    }

    pub fn initial(&self) -> usize {
        self.vertices[0]
    }

    pub fn terminal(&self) -> usize {
        *self.vertices.last().expect("walks are nonempty")
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks (W1)–(W3) against `q`; with `p`, also that edges lie in `E(P)ΔE(Q)` and (W4).
    pub fn validate(&self, d: &Dimaze, q: &QIndex, p: Option<&QIndex>) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidWalk(msg));
        let n = self.edges.len();
        if self.vertices.len() != n + 1 {
            return bad("vertex and edge counts disagree".into());
        }
        let mut seen_edges = HashSet::with_capacity(n);
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            let (wi, wj) = (self.vertices[i], self.vertices[i + 1]);
            if !d.has_edge(a, b) {
                return bad(format!("({},{}) is not an edge", d.name(a), d.name(b)));
            }
            let forward = (a, b) == (wi, wj);
            if !forward && (a, b) != (wj, wi) {
                return bad(format!("edge {i} is not incident with its neighbours"));
            }
            if !seen_edges.insert((a, b)) {
                return bad(format!("edge ({},{}) repeated", d.name(a), d.name(b)));
            }
            // (W1)
            if forward == q.is_edge(a, b) {
                return bad(format!("(W1) fails at edge ({},{})", d.name(a), d.name(b)));
            }
            if let Some(p) = p {
                if p.is_edge(a, b) == q.is_edge(a, b) {
                    return bad(format!(
                        "edge ({},{}) outside E(P)ΔE(Q)",
                        d.name(a),
                        d.name(b)
                    ));
                }
            }
        }
        // (W2)
        let mut seen = HashSet::new();
        for &v in &self.vertices {
            if !seen.insert(v) && !q.contains(v) {
                return bad(format!("(W2) fails: `{}` repeated off Q", d.name(v)));
            }
        }
        // (W3), with e_{-1} := e_0
        for i in 0..n {
            let w = self.vertices[i];
            if q.contains(w) {
                let prev = self.edges[i.saturating_sub(1)];
                let cur = self.edges[i];
                if !q.is_edge(prev.0, prev.1) && !q.is_edge(cur.0, cur.1) {
                    return bad(format!("(W3) fails at `{}`", d.name(w)));
                }
            }
        }
        // (W4) on interior vertices
        if let Some(p) = p {
            for i in 1..n {
                let w = self.vertices[i];
                if p.contains(w) {
                    let (prev, cur) = (self.edges[i - 1], self.edges[i]);
                    if !p.is_edge(prev.0, prev.1) && !p.is_edge(cur.0, cur.1) {
                        return bad(format!("(W4) fails at `{}`", d.name(w)));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn names(&self, d: &Dimaze) -> Vec<String> {
        self.vertices
            .iter()
            .map(|&v| d.name(v).to_string())
            .collect()
    }
}
