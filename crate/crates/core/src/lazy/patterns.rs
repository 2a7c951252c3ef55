//! Finite prefixes of combs and fans, topological linkage on truncations, and
//! fan-centre elimination.

use std::collections::HashSet;

use serde::Serialize;

use super::Truncation;
use crate::dimaze::{link, max_linkage, Dimaze, LinkOutcome, PathSystem, Separator};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PatternKind {
    Alternating,
    Incoming,
    Outgoing,
    Fan,
}

impl PatternKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "alternating" | "a" => Ok(PatternKind::Alternating),
            "incoming" | "i" => Ok(PatternKind::Incoming),
            "outgoing" | "o" => Ok(PatternKind::Outgoing),
            "fan" | "f" => Ok(PatternKind::Fan),
            other => Err(Error::Precondition(format!(
                "unknown pattern kind `{other}`; expected alternating, incoming, outgoing or fan"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PatternKind::Alternating => "alternating",
            PatternKind::Incoming => "incoming",
            PatternKind::Outgoing => "outgoing",
            PatternKind::Fan => "fan",
        }
    }
}

/// A comb prefix (spine plus spikes) or a fan (the spine is the centre alone).
///
/// Spine orientation: outgoing spines run forwards, incoming spines run
/// backwards from `spine[0]`, alternating spines start with a backward step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternCertificate {
    pub kind: PatternKind,
    pub spine: Vec<usize>,
    pub spikes: Vec<Vec<usize>>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidCertificate(msg.into())
}

/// Vertices where an alternating spine turns into a sink, plus its ends when they are sinks.
fn valleys(spine: &[usize], forward: &[bool], closed_only: bool) -> Vec<usize> {
    let mut out = vec![0];
    for j in 1..spine.len().saturating_sub(1) {
        if forward[j - 1] && !forward[j] {
            out.push(j);
        }
    }
    if !closed_only && spine.len() > 1 && *forward.last().expect("nonempty") {
        out.push(spine.len() - 1);
    }
    out
}

impl PatternCertificate {
    pub fn centre(&self) -> Option<usize> {
        (self.kind == PatternKind::Fan).then(|| self.spine[0])
    }

    /// Number of spikes (branches, for a fan).
    pub fn size(&self) -> usize {
        self.spikes.len()
    }

    /// Re-checks the certificate against `d` from scratch.
    pub fn verify(&self, d: &Dimaze) -> Result<()> {
        let n = d.len();
        if self.spine.is_empty() {
            return Err(bad("empty spine"));
        }
        if self
            .spine
            .iter()
            .chain(self.spikes.iter().flatten())
            .any(|&v| v >= n)
        {
            return Err(bad("vertex index out of range"));
        }
        let mut on_spine = vec![false; n];
        for &v in &self.spine {
            if std::mem::replace(&mut on_spine[v], true) {
                return Err(bad(format!("spine repeats `{}`", d.name(v))));
            }
        }
        let forward: Vec<bool> = self
            .spine
            .windows(2)
            .map(|w| {
                if d.has_edge(w[0], w[1]) {
                    Ok(true)
                } else if d.has_edge(w[1], w[0]) {
                    Ok(false)
                } else {
                    Err(bad(format!(
                        "`{}` and `{}` are not adjacent",
                        d.name(w[0]),
                        d.name(w[1])
                    )))
                }
            })
            .collect::<Result<_>>()?;

        let mut used = vec![false; n];
        let mut starts = Vec::new();
        for spike in &self.spikes {
            let Some((&first, rest)) = spike.split_first() else {
                return Err(bad("empty spike"));
            };
            let last = *spike.last().expect("nonempty");
            if !d.is_exit(last) {
                return Err(bad(format!(
                    "spike ends at `{}`, not an exit",
                    d.name(last)
                )));
            }
            for w in spike.windows(2) {
                if !d.has_edge(w[0], w[1]) {
                    return Err(bad(format!(
                        "spike uses a non-edge ({}, {})",
                        d.name(w[0]),
                        d.name(w[1])
                    )));
                }
            }
            for &v in rest {
                if on_spine[v] {
                    return Err(bad(format!(
                        "spike meets the spine again at `{}`",
                        d.name(v)
                    )));
                }
            }
            let start_shared = self.kind == PatternKind::Fan;
            for (i, &v) in spike.iter().enumerate() {
                if i == 0 && start_shared {
                    continue;
                }
                if std::mem::replace(&mut used[v], true) {
                    return Err(bad(format!("spikes share `{}`", d.name(v))));
                }
            }
            starts.push(first);
        }

        match self.kind {
            PatternKind::Fan => {
                if self.spine.len() != 1 {
                    return Err(bad("a fan certificate has a single centre"));
                }
                if self
                    .spikes
                    .iter()
                    .any(|s| s.len() < 2 || s[0] != self.spine[0])
                {
                    return Err(bad(
                        "fan branches must be non-trivial paths from the centre",
                    ));
                }
            }
            PatternKind::Outgoing => {
                if forward.iter().any(|f| !f) {
                    return Err(bad("outgoing spine has a backward step"));
                }
                if self.spine.iter().any(|&v| d.is_exit(v)) {
                    return Err(bad("outgoing spine contains an exit"));
                }
            }
            PatternKind::Incoming => {
                if forward.iter().any(|&f| f) {
                    return Err(bad("incoming spine has a forward step"));
                }
                if !starts.contains(&self.spine[0]) {
                    return Err(bad(
                        "the first spine vertex of an incoming comb carries no spike",
                    ));
                }
            }
            PatternKind::Alternating => {
                if forward.first() == Some(&true) {
                    return Err(bad("alternating spine must start with a backward step"));
                }
                let mut want: Vec<usize> = valleys(&self.spine, &forward, false)
                    .iter()
                    .map(|&j| self.spine[j])
                    .collect();
                let mut got = starts.clone();
                want.sort_unstable();
                got.sort_unstable();
                if want != got {
                    return Err(bad(
                        "spikes do not sit exactly on the sink vertices of the spine",
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn spine_names(&self, d: &Dimaze) -> Vec<String> {
        self.spine.iter().map(|&v| d.name(v).to_string()).collect()
    }

    pub fn spike_names(&self, d: &Dimaze) -> Vec<Vec<String>> {
        self.spikes
            .iter()
            .map(|p| p.iter().map(|&v| d.name(v).to_string()).collect())
            .collect()
    }
}

/// `d` without edges entering the spine, so that linkages from spine vertices
/// are exactly systems of spikes.
fn spike_graph(d: &Dimaze, on_spine: &[bool]) -> Dimaze {
    let edges: Vec<(usize, usize)> = d
        .edges()
        .into_iter()
        .filter(|&(_, v)| !on_spine[v])
        .collect();
    Dimaze::from_indices(d.names().to_vec(), &edges, &d.exits())
        .expect("subgraph of a valid dimaze")
}

fn linked(d: &Dimaze, set: &[usize]) -> Option<PathSystem> {
    match link(d, set) {
        Ok(LinkOutcome::Linked(q)) => Some(q),
        _ => None,
    }
}

/// Orders spikes along the spine and trims the spine after the last one.
fn finish(kind: PatternKind, spine: &[usize], q: PathSystem) -> PatternCertificate {
    let pos = |v: usize| {
        spine
            .iter()
            .position(|&u| u == v)
            .expect("spike starts on the spine")
    };
    let mut spikes = q.paths;
    spikes.sort_by_key(|p| pos(p[0]));
    let end = spikes.iter().map(|p| pos(p[0])).max().unwrap_or(0);
    PatternCertificate {
        kind,
        spine: spine[..=end].to_vec(),
        spikes,
    }
}

struct CombSearch<'a> {
    d: &'a Dimaze,
    k: usize,
    spine: Vec<usize>,
    forward: Vec<bool>,
    on: Vec<bool>,
}

impl CombSearch<'_> {
    fn push(&mut self, v: usize, fwd: Option<bool>) {
        self.spine.push(v);
        self.on[v] = true;
        if let Some(f) = fwd {
            self.forward.push(f);
        }
    }

    fn pop(&mut self) {
        let v = self.spine.pop().expect("nonempty");
        self.on[v] = false;
        if !self.spine.is_empty() {
            self.forward.pop();
        }
    }

    fn outgoing(&mut self) -> Option<PatternCertificate> {
        let sg = spike_graph(self.d, &self.on);
        let (mut q, _) = max_linkage(&sg, &self.spine).ok()?;
        if q.len() >= self.k {
            let pos = |v: usize| self.spine.iter().position(|&u| u == v).expect("on spine");
            q.paths.sort_by_key(|p| pos(p[0]));
            q.paths.truncate(self.k);
            return Some(finish(PatternKind::Outgoing, &self.spine, q));
        }
        let last = *self.spine.last().expect("nonempty");
        for &v in self.d.out(last) {
            if !self.on[v] && !self.d.is_exit(v) {
                self.push(v, Some(true));
                let found = self.outgoing();
                self.pop();
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }

    fn incoming(&mut self) -> Option<PatternCertificate> {
        let sg = spike_graph(self.d, &self.on);
        let mut chosen = vec![self.spine[0]];
        linked(&sg, &chosen)?;
        for &v in &self.spine[1..] {
            if chosen.len() == self.k {
                break;
            }
            chosen.push(v);
            if linked(&sg, &chosen).is_none() {
                chosen.pop();
            }
        }
        if chosen.len() >= self.k {
            let q = linked(&sg, &chosen).expect("greedy set is linkable");
            return Some(finish(PatternKind::Incoming, &self.spine, q));
        }
        let last = *self.spine.last().expect("nonempty");
        for &v in self.d.inn(last) {
            if !self.on[v] {
                self.push(v, Some(false));
                let found = self.incoming();
                self.pop();
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }

    fn alternating(&mut self) -> Option<PatternCertificate> {
        let sg = spike_graph(self.d, &self.on);
        let closed: Vec<usize> = valleys(&self.spine, &self.forward, true)
            .iter()
            .map(|&j| self.spine[j])
            .collect();
        linked(&sg, &closed)?;
        let ends_low = self.spine.len() == 1 || *self.forward.last().expect("nonempty");
        if ends_low {
            let all: Vec<usize> = valleys(&self.spine, &self.forward, false)
                .iter()
                .map(|&j| self.spine[j])
                .collect();
            if all.len() == self.k {
                if let Some(q) = linked(&sg, &all) {
                    return Some(finish(PatternKind::Alternating, &self.spine, q));
                }
            }
            if all.len() >= self.k {
                return None;
            }
        }
        let last = *self.spine.last().expect("nonempty");
        let mut steps: Vec<(usize, bool)> = self.d.inn(last).iter().map(|&v| (v, false)).collect();
        if self.spine.len() > 1 {
            steps.extend(self.d.out(last).iter().map(|&v| (v, true)));
        }
        for (v, fwd) in steps {
            if !self.on[v] {
                self.push(v, Some(fwd));
                let found = self.alternating();
                self.pop();
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }
}

/// Backtracking search for a comb prefix with `k` spikes.
pub fn detect_comb(d: &Dimaze, kind: PatternKind, k: usize) -> Result<Option<PatternCertificate>> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    if kind == PatternKind::Fan {
        return detect_fan(d, k);
    }
    for s in 0..d.len() {
        if kind == PatternKind::Outgoing && d.is_exit(s) {
            continue;
        }
        let mut search = CombSearch {
            d,
            k,
            spine: Vec::new(),
            forward: Vec::new(),
            on: vec![false; d.len()],
        };
        search.push(s, None);
        let found = match kind {
            PatternKind::Outgoing => search.outgoing(),
            PatternKind::Incoming => search.incoming(),
            PatternKind::Alternating => search.alternating(),
            PatternKind::Fan => unreachable!(),
        };
        if let Some(c) = found {
            c.verify(d)
                .map_err(|e| Error::Internal(format!("search produced a bad certificate: {e}")))?;
            return Ok(Some(c));
        }
    }
    Ok(None)
}

fn fan_at(d: &Dimaze, c: usize, k: usize) -> Option<PatternCertificate> {
    if d.out(c).len() < k {
        return None;
    }
    let mut remove = vec![false; d.len()];
    remove[c] = true;
    let (dc, map) = d.delete_vertices(&remove);
    let mut back = vec![0; dc.len()];
    for (old, new) in map.iter().enumerate() {
        if let Some(new) = new {
            back[*new] = old;
        }
    }
    let starts: Vec<usize> = d
        .out(c)
        .iter()
        .map(|&v| map[v].expect("not the centre"))
        .collect();
    let (q, _) = max_linkage(&dc, &starts).ok()?;
    if q.len() < k {
        return None;
    }
    let mut spikes: Vec<Vec<usize>> = q
        .paths
        .iter()
        .map(|p| {
            std::iter::once(c)
                .chain(p.iter().map(|&v| back[v]))
                .collect()
        })
        .collect();
    spikes.sort();
    spikes.truncate(k);
    Some(PatternCertificate {
        kind: PatternKind::Fan,
        spine: vec![c],
        spikes,
    })
}

/// A vertex with `k` internally disjoint non-trivial paths to the exits, if any.
pub fn detect_fan(d: &Dimaze, k: usize) -> Result<Option<PatternCertificate>> {
    Ok(fan_centres(d, k)?.into_iter().next())
}

/// Certificates for every vertex that centres a `k`-fan.
pub fn fan_centres(d: &Dimaze, k: usize) -> Result<Vec<PatternCertificate>> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let out: Vec<PatternCertificate> = (0..d.len()).filter_map(|c| fan_at(d, c, k)).collect();
    for c in &out {
        c.verify(d)
            .map_err(|e| Error::Internal(format!("search produced a bad certificate: {e}")))?;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopoPathKind {
    Exit,
    FanCentre(PatternCertificate),
    CombSpine(PatternCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopoPath {
    pub path: Vec<usize>,
    pub kind: TopoPathKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopoAnswer {
    Yes(Vec<TopoPath>),
    /// A separator in the truncation with frontier vertices turned into exits.
    No(Separator),
    /// Neither verdict survives the cut; lists the frontier.
    Inconclusive(Vec<usize>),
}

fn reaches_frontier(t: &Truncation) -> Vec<bool> {
    let d = &t.dimaze;
    let mut seen = t.frontier.clone();
    let mut stack = t.frontier_vertices();
    while let Some(v) = stack.pop() {
        for &u in d.inn(v) {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen
}

/// `d` with the out-edges of `sinks` removed and `sinks` added to the exits.
fn make_exits(d: &Dimaze, sinks: &[bool]) -> Dimaze {
    let edges: Vec<(usize, usize)> = d.edges().into_iter().filter(|&(u, _)| !sinks[u]).collect();
    let exits: Vec<usize> = (0..d.len()).filter(|&v| d.is_exit(v) || sinks[v]).collect();
    Dimaze::from_indices(d.names().to_vec(), &edges, &exits).expect("sinks may be exits")
}

struct TopoSearch<'a> {
    d: &'a Dimaze,
    dz: &'a Dimaze,
    k: usize,
    frontier: &'a [bool],
    fans: &'a [PatternCertificate],
    set: &'a [usize],
}

impl TopoSearch<'_> {
    fn label(&self, q: &PathSystem, back: &[usize]) -> Vec<TopoPath> {
        q.paths
            .iter()
            .map(|p| {
                let path: Vec<usize> = p.iter().map(|&v| back[v]).collect();
                let end = *path.last().expect("nonempty");
                let kind = match self.fans.iter().find(|c| c.spine[0] == end) {
                    Some(c) if !self.d.is_exit(end) => TopoPathKind::FanCentre(c.clone()),
                    _ => TopoPathKind::Exit,
                };
                TopoPath { path, kind }
            })
            .collect()
    }

    /// Links the elements outside `spined` in `dz` minus the chosen spines.
    fn finish(
        &self,
        spined: &[usize],
        blocked: &[bool],
        spines: &[TopoPath],
    ) -> Option<Vec<TopoPath>> {
        let (dr, map) = self.dz.delete_vertices(blocked);
        let mut back = vec![0; dr.len()];
        for (old, new) in map.iter().enumerate() {
            if let Some(new) = new {
                back[*new] = old;
            }
        }
        let rest: Vec<usize> = self
            .set
            .iter()
            .copied()
            .filter(|x| !spined.contains(x))
            .collect();
        let mapped: Option<Vec<usize>> = rest.iter().map(|&x| map[x]).collect();
        let q = linked(&dr, &mapped?)?;
        let mut out = spines.to_vec();
        out.extend(self.label(&q, &back));
        out.sort_by_key(|p| p.path[0]);
        Some(out)
    }

    /// Chooses a comb spine for each of `todo`, then links the rest.
    fn assign(
        &self,
        todo: &[usize],
        spined: &[usize],
        blocked: &mut Vec<bool>,
        spines: &mut Vec<TopoPath>,
    ) -> Option<Vec<TopoPath>> {
        let Some((&x, rest)) = todo.split_first() else {
            return self.finish(spined, blocked, spines);
        };
        let mut path = vec![x];
        blocked[x] = true;
        let found = self.spine_from(&mut path, rest, spined, blocked, spines);
        blocked[x] = false;
        found
    }

    fn spine_from(
        &self,
        path: &mut Vec<usize>,
        rest: &[usize],
        spined: &[usize],
        blocked: &mut Vec<bool>,
        spines: &mut Vec<TopoPath>,
    ) -> Option<Vec<TopoPath>> {
        let last = *path.last().expect("nonempty");
        if self.frontier[last] {
            let mut on = vec![false; self.d.len()];
            path.iter().for_each(|&v| on[v] = true);
            let sg = spike_graph(self.d, &on);
            if let Ok((mut q, _)) = max_linkage(&sg, path) {
                if q.len() >= self.k {
                    q.paths.sort();
                    q.paths.truncate(self.k);
                    let cert = PatternCertificate {
                        kind: PatternKind::Outgoing,
                        spine: path.clone(),
                        spikes: q.paths,
                    };
                    if cert.verify(self.d).is_ok() {
                        spines.push(TopoPath {
                            path: path.clone(),
                            kind: TopoPathKind::CombSpine(cert),
                        });
                        let mut now = spined.to_vec();
                        now.push(path[0]);
                        if let Some(ans) = self.assign(rest, &now, blocked, spines) {
                            return Some(ans);
                        }
                        spines.pop();
                    }
                }
            }
        }
        let is_member = |v: usize| self.set.contains(&v);
        for &v in self.d.out(last) {
            if !blocked[v] && !is_member(v) && !self.d.is_exit(v) {
                blocked[v] = true;
                path.push(v);
                let found = self.spine_from(path, rest, spined, blocked, spines);
                path.pop();
                blocked[v] = false;
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }
}

/// Largest set size for which comb-spine assignments are tried exhaustively.
const SPINE_SUBSET_LIMIT: usize = 12;

/// Topological linkability of `set` with `k` standing in for "infinitely many".
///
/// Fans and comb spines only count when they reach the frontier; a finite
/// certificate that stays inside the truncation is just a finite pattern.
pub fn topologically_linkable(t: &Truncation, set: &[usize], k: usize) -> Result<TopoAnswer> {
    let d = &t.dimaze;
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let mut seen = HashSet::new();
    for &v in set {
        if v >= d.len() {
            return Err(Error::Precondition(format!(
                "vertex index {v} out of range"
            )));
        }
        if !seen.insert(v) {
            return Err(Error::Precondition(format!("`{}` listed twice", d.name(v))));
        }
    }
    if let LinkOutcome::Linked(q) = link(d, set)? {
        return Ok(TopoAnswer::Yes(
            q.paths
                .into_iter()
                .map(|path| TopoPath {
                    path,
                    kind: TopoPathKind::Exit,
                })
                .collect(),
        ));
    }
    if t.has_frontier() {
        let reach = reaches_frontier(t);
        let fans: Vec<PatternCertificate> = fan_centres(d, k)?
            .into_iter()
            .filter(|c| reach[c.spine[0]])
            .collect();
        let mut is_centre = vec![false; d.len()];
        fans.iter().for_each(|c| is_centre[c.spine[0]] = true);
        let dz = make_exits(d, &is_centre);
        let search = TopoSearch {
            d,
            dz: &dz,
            k,
            frontier: &t.frontier,
            fans: &fans,
            set,
        };
        let candidates: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&x| reach[x] && !d.is_exit(x))
            .collect();
        let limit = if candidates.len() <= SPINE_SUBSET_LIMIT {
            1usize << candidates.len()
        } else {
            1
        };
        let mut masks: Vec<usize> = (0..limit).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        for mask in masks {
            let todo: Vec<usize> = (0..candidates.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| candidates[i])
                .collect();
            let mut blocked = vec![false; d.len()];
            if let Some(paths) = search.assign(&todo, &[], &mut blocked, &mut Vec::new()) {
                return Ok(TopoAnswer::Yes(paths));
            }
        }
    }
    let df = make_exits(d, &t.frontier);
    match link(&df, set)? {
        LinkOutcome::Separated { separator, .. } => Ok(TopoAnswer::No(separator)),
        LinkOutcome::Linked(_) => Ok(TopoAnswer::Inconclusive(t.frontier_vertices())),
    }
}

/// Makes every `k`-fan centre an exit by deleting its out-edges.
pub fn eliminate_fan_centres(t: &Truncation, k: usize) -> Result<Truncation> {
    if k < 2 {
        return Err(Error::Precondition("fan elimination needs k ≥ 2".into()));
    }
    let mut is_centre = vec![false; t.dimaze.len()];
    for c in fan_centres(&t.dimaze, k)? {
        is_centre[c.spine[0]] = true;
    }
    let dimaze = make_exits(&t.dimaze, &is_centre);
    dimaze.validate()?;
    let frontier = t
        .frontier
        .iter()
        .zip(&is_centre)
        .map(|(&f, &c)| f && !c)
        .collect();
    Ok(Truncation {
        dimaze,
        frontier,
        in_frontier: t.in_frontier.clone(),
        depth: t.depth,
        width: t.width,
    })
}
