//! Pym's linkage construction, run as an explicit fixed-point iteration, and
//! the back-walks `W(v)` read off its tables.

use std::collections::HashSet;

use crate::dimaze::{AltWalk, Dimaze, PathSystem};
use crate::error::{Error, Result};

/// Everything the iteration computed.
///
/// `f[k][i]` is `f_x^i` for `x = sources[k]` (the initial vertex of `p.paths[k]`);
/// `t[l][i]` is `t_y^i` for `y = targets[l]` (the terminal of `q.paths[l]`), with
/// `t[l][0]` the initial vertex of `Q_y` since round zero uses `Q` itself.
#[derive(Clone, Debug)]
pub struct PymTrace {
    pub p: PathSystem,
    pub q: PathSystem,
    pub sources: Vec<usize>,
    pub targets: Vec<usize>,
    pub f: Vec<Vec<usize>>,
    pub t: Vec<Vec<usize>>,
    /// `(B^i, C^i)` for `i = 1, 2, …`; entry `i-1` belongs to round `i`.
    pub families: Vec<(PathSystem, PathSystem)>,
    pub q_inf: PathSystem,
    pub y_inf: Vec<usize>,
    n: usize,
}

impl PymTrace {
    /// Number of rounds run (the last one repeats its predecessor).
    pub fn rounds(&self) -> usize {
        self.families.len()
    }

    /// `I`: the initial vertices of `P` that do not start a path of `Q`.
    pub fn independent_part(&self) -> Vec<usize> {
        let s: HashSet<usize> = self.q.initials().into_iter().collect();
        self.sources
            .iter()
            .copied()
            .filter(|x| !s.contains(x))
            .collect()
    }

    /// Vertices `v` admitting a back-walk, i.e. `v = f_x^{j+1} ≠ f_x^j`.
    pub fn moved_vertices(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (k, row) in self.f.iter().enumerate() {
            for j in 0..row.len() - 1 {
                if row[j] != row[j + 1] {
                    out.push((row[j + 1], k, j));
                }
            }
        }
        out
    }
}

fn position(path: &[usize], v: usize) -> Option<usize> {
    path.iter().position(|&u| u == v)
}

/// Runs the iteration for a linkage `P` of `S∪I` and a linkage `Q` from `S` onto `T`.
pub fn pym_linkage(d: &Dimaze, p: &PathSystem, q: &PathSystem) -> Result<PymTrace> {
    p.validate(d, true)?;
    q.validate(d, true)?;
    let n = d.len();
    let sources = p.initials();
    let src_set: HashSet<usize> = sources.iter().copied().collect();
    for s in q.initials() {
        if !src_set.contains(&s) {
            return Err(Error::Precondition(format!(
                "Ini(Q) vertex `{}` does not start a path of P",
                d.name(s)
            )));
        }
    }
    let targets = q.terminals();
    let t_set: HashSet<usize> = targets.iter().copied().collect();

    let mut f: Vec<Vec<usize>> = sources.iter().map(|&x| vec![x]).collect();
    let mut t: Vec<Vec<usize>> = q.paths.iter().map(|qy| vec![qy[0]]).collect();
    let mut families = Vec::new();
    let mut covered = vec![false; n];
    q.vertices().for_each(|v| covered[v] = true);

    let cap = (n + 1).max(2);
    let mut round = 0;
    loop {
        round += 1;
        if round > cap {
            return Err(Error::Internal(format!(
                "no fixed point within {cap} rounds"
            )));
        }
        // f^i from f^{i-1} and V(Q^{i-1})
        let mut f_now = Vec::with_capacity(sources.len());
        for (k, px) in p.paths.iter().enumerate() {
            let from = position(px, *f[k].last().expect("nonempty")).expect("f lies on P_x");
            let v = px[from..]
                .iter()
                .copied()
                .find(|&v| covered[v])
                .unwrap_or(*px.last().expect("nonempty"));
            f_now.push(v);
        }
        let f_set: HashSet<usize> = f_now.iter().copied().collect();
        let t_now: Vec<usize> = q
            .paths
            .iter()
            .map(|qy| {
                qy.iter()
                    .rev()
                    .copied()
                    .find(|v| f_set.contains(v))
                    .unwrap_or(qy[0])
            })
            .collect();

        let mut b = Vec::new();
        let mut c = Vec::new();
        for (k, px) in p.paths.iter().enumerate() {
            let fx = f_now[k];
            if let Some(l) = t_now.iter().position(|&ty| ty == fx) {
                let qy = &q.paths[l];
                let mut path = px[..=position(px, fx).expect("on P_x")].to_vec();
                path.extend_from_slice(&qy[position(qy, fx).expect("on Q_y") + 1..]);
                b.push(path);
            } else if d.is_exit(fx) && !t_set.contains(&fx) {
                c.push(px.clone());
            }
        }
        covered = vec![false; n];
        b.iter()
            .chain(c.iter())
            .flatten()
            .for_each(|&v| covered[v] = true);

        let stable = round >= 2
            && f.iter()
                .zip(&f_now)
                .all(|(row, &v)| *row.last().expect("nonempty") == v)
            && t.iter()
                .zip(&t_now)
                .all(|(row, &v)| *row.last().expect("nonempty") == v);
        for (row, v) in f.iter_mut().zip(f_now) {
            row.push(v);
        }
        for (row, v) in t.iter_mut().zip(t_now) {
            row.push(v);
        }
        families.push((PathSystem::new(b), PathSystem::new(c)));
        if stable {
            break;
        }
    }

    let (b, c) = families.last().expect("at least one round").clone();
    let mut paths = b.paths;
    paths.extend(c.paths);
    let q_inf = PathSystem::new(paths).canonical();
    q_inf
        .validate(d, true)
        .map_err(|e| Error::Internal(format!("Pym output is not a linkage: {e}")))?;
    let mut y_inf = q_inf.terminals();
    y_inf.sort_unstable();
    Ok(PymTrace {
        p: p.clone(),
        q: q.clone(),
        sources,
        targets,
        f,
        t,
        families,
        q_inf,
        y_inf,
        n,
    })
}

/// The walk `W(v)` from `I` to `v`, built backwards through the tables.
pub fn back_walk(d: &Dimaze, trace: &PymTrace, v: usize) -> Result<AltWalk> {
    if v >= trace.n {
        return Err(Error::Precondition(format!(
            "vertex index {v} out of range"
        )));
    }
    let (k, j) = trace
        .moved_vertices()
        .into_iter()
        .find(|&(u, _, _)| u == v)
        .map(|(_, k, j)| (k, j))
        .ok_or_else(|| {
            Error::Precondition(format!(
                "`{}` is not of the form f_x^(j+1) differing from f_x^j",
                d.name(v)
            ))
        })?;

    // xs[i] holds the path index of x_i, for i = 1..=j+1.
    let mut xs = vec![usize::MAX; j + 2];
    xs[j + 1] = k;
    let mut q_idx = vec![usize::MAX; j + 1];
    for i in (1..=j).rev() {
        let a = trace.f[xs[i + 1]][i];
        let l = trace
            .q
            .paths
            .iter()
            .position(|qy| qy.contains(&a))
            .ok_or_else(|| Error::Internal(format!("f at round {i} is off Q")))?;
        let qy = &trace.q.paths[l];
        let after = position(qy, a).expect("on Q_i") + 1;
        let f_round: Vec<usize> = trace.f.iter().map(|row| row[i]).collect();
        let next = qy[after..]
            .iter()
            .find_map(|u| f_round.iter().position(|fu| fu == u))
            .ok_or_else(|| Error::Internal(format!("no F^{i} vertex after f on Q_{i}")))?;
        xs[i] = next;
        q_idx[i] = l;
    }

    let mut vertices = vec![trace.f[xs[1]][0]];
    let mut edges = Vec::new();
    let forward = |vertices: &mut Vec<usize>,
                   edges: &mut Vec<(usize, usize)>,
                   path: &[usize],
                   from: usize,
                   to: usize| {
        let (a, b) = (
            position(path, from).expect("on path"),
            position(path, to).expect("on path"),
        );
        for w in path[a..=b].windows(2) {
            edges.push((w[0], w[1]));
            vertices.push(w[1]);
        }
    };
    let p1 = &trace.p.paths[xs[1]];
    forward(
        &mut vertices,
        &mut edges,
        p1,
        trace.f[xs[1]][0],
        trace.f[xs[1]][1],
    );
    for i in 1..=j {
        let qy = &trace.q.paths[q_idx[i]];
        let (lo, hi) = (
            position(qy, trace.f[xs[i + 1]][i]).expect("on Q_i"),
            position(qy, trace.f[xs[i]][i]).expect("on Q_i"),
        );
        for pos in (lo..hi).rev() {
            edges.push((qy[pos], qy[pos + 1]));
            vertices.push(qy[pos]);
        }
        let pnext = &trace.p.paths[xs[i + 1]];
        forward(
            &mut vertices,
            &mut edges,
            pnext,
            trace.f[xs[i + 1]][i],
            trace.f[xs[i + 1]][i + 1],
        );
    }
    Ok(AltWalk { vertices, edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> (Dimaze, PathSystem, PathSystem) {
        let d = Dimaze::new(
            &["s", "i", "t1", "t2"],
            &[("s", "t1"), ("i", "t1"), ("i", "t2")],
            &["t1", "t2"],
        )
        .unwrap();
        let p = PathSystem::new(vec![vec![0, 2], vec![1, 3]]);
        let q = PathSystem::new(vec![vec![0, 2]]);
        (d, p, q)
    }

    #[test]
    fn hand_iteration() {
        let (d, p, q) = example();
        let tr = pym_linkage(&d, &p, &q).unwrap();
        assert_eq!(tr.f[0][1], 0);
        assert_eq!(tr.f[1][1], 3);
        assert_eq!(tr.t[0][1], 0);
        assert_eq!(tr.q_inf.paths, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(tr.y_inf, vec![2, 3]);
    }

    #[test]
    fn p_equal_q_is_fixed() {
        let (d, _, q) = example();
        let tr = pym_linkage(&d, &q, &q).unwrap();
        assert_eq!(tr.q_inf, q);
    }

    #[test]
    fn back_walk_examples() {
        let (d, p, q) = example();
        let tr = pym_linkage(&d, &p, &q).unwrap();
        let w = back_walk(&d, &tr, 3).unwrap();
        assert_eq!(w.vertices, vec![1, 3]);
        assert!(back_walk(&d, &tr, 0).is_err());
    }

    #[test]
    fn rejects_unrelated_q() {
        let (d, _, q) = example();
        let p = PathSystem::new(vec![vec![1, 3]]);
        assert!(pym_linkage(&d, &p, &q).is_err());
    }
}
