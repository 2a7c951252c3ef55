//! The built-in infinite dimazes, the bipartite graph of the finitary
//! transversal example, and seeded random locally finite dimazes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BipartiteGenerator, DimazeGenerator, Neighbours, VertexId};
use crate::error::{Error, Result};

/// The nine named generators, minus the bipartite one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    RA,
    RI,
    RO,
    CA,
    CI,
    CO,
    Fan,
    /// Every vertex has infinitely many children; exits on even levels.
    Tree,
}

const NAMES: [&str; 9] = ["RA", "RI", "RO", "CA", "CI", "CO", "FAN", "TREE", "TND"];

pub fn builtin_names() -> Vec<&'static str> {
    NAMES[..8].to_vec()
}

/// Looks up a dimaze generator by its CLI name. `TND` is bipartite and lives in [`Tnd`].
pub fn builtin(name: &str) -> Result<Box<dyn DimazeGenerator>> {
    let b = match name.to_ascii_uppercase().as_str() {
        "RA" => Builtin::RA,
        "RI" => Builtin::RI,
        "RO" => Builtin::RO,
        "CA" => Builtin::CA,
        "CI" => Builtin::CI,
        "CO" => Builtin::CO,
        "FAN" => Builtin::Fan,
        "TREE" => Builtin::Tree,
        other => {
            return Err(Error::Precondition(format!(
                "unknown generator `{other}`; expected one of {}",
                NAMES.join(", ")
            )))
        }
    };
    Ok(Box::new(b))
}

fn one(v: VertexId) -> Neighbours<'static> {
    Box::new(std::iter::once(v))
}

fn none() -> Neighbours<'static> {
    Box::new(std::iter::empty())
}

fn list(v: Vec<VertexId>) -> Neighbours<'static> {
    Box::new(v.into_iter())
}

impl Builtin {
    fn ray_out(self, i: u64) -> Vec<VertexId> {
        use VertexId::X;
        match self {
            Builtin::RA | Builtin::CA if i.is_multiple_of(2) => vec![X(i - 1), X(i + 1)],
            Builtin::RA | Builtin::CA => vec![],
            Builtin::RI | Builtin::CI if i >= 2 => vec![X(i - 1)],
            Builtin::RI | Builtin::CI => vec![],
            Builtin::RO | Builtin::CO => vec![X(i + 1)],
            _ => unreachable!("not a ray"),
        }
    }

    fn ray_in(self, i: u64) -> Vec<VertexId> {
        use VertexId::X;
        match self {
            Builtin::RA | Builtin::CA if i % 2 == 1 && i > 1 => vec![X(i - 1), X(i + 1)],
            Builtin::RA | Builtin::CA if i == 1 => vec![X(2)],
            Builtin::RA | Builtin::CA => vec![],
            Builtin::RI | Builtin::CI => vec![X(i + 1)],
            Builtin::RO | Builtin::CO if i >= 2 => vec![X(i - 1)],
            Builtin::RO | Builtin::CO => vec![],
            _ => unreachable!("not a ray"),
        }
    }

    fn has_spikes(self) -> bool {
        matches!(self, Builtin::CI | Builtin::CO)
    }
}

impl DimazeGenerator for Builtin {
    fn name(&self) -> String {
        match self {
            Builtin::Fan => "FAN".into(),
            Builtin::Tree => "TREE".into(),
            b => format!("{b:?}"),
        }
    }

    fn roots(&self) -> Vec<VertexId> {
        match self {
            Builtin::Fan => vec![VertexId::Centre],
            Builtin::Tree => vec![VertexId::Tree(Vec::new())],
            _ => vec![VertexId::X(1)],
        }
    }

    fn out_neighbours(&self, v: &VertexId) -> Neighbours<'_> {
        match (self, v) {
            (Builtin::Fan, VertexId::Centre) => Box::new((1..).map(VertexId::Leaf)),
            (Builtin::Fan, _) => none(),
            (Builtin::Tree, VertexId::Tree(path)) => {
                if path.len() % 2 == 0 {
                    return none();
                }
                let parent = VertexId::Tree(path[..path.len() - 1].to_vec());
                let path = path.clone();
                Box::new(std::iter::once(parent).chain((1..).map(move |c| {
                    let mut p = path.clone();
                    p.push(c);
                    VertexId::Tree(p)
                })))
            }
            (Builtin::Tree, _) => none(),
            (b, VertexId::X(i)) => {
                let mut out = b.ray_out(*i);
                if b.has_spikes() && *i >= 2 {
                    out.push(VertexId::Y(*i));
                }
                list(out)
            }
            _ => none(),
        }
    }

    fn in_neighbours(&self, v: &VertexId) -> Neighbours<'_> {
        match (self, v) {
            (Builtin::Fan, VertexId::Leaf(_)) => one(VertexId::Centre),
            (Builtin::Fan, _) => none(),
            (Builtin::Tree, VertexId::Tree(path)) => {
                if path.len() % 2 == 1 {
                    return none();
                }
                let path = path.clone();
                let parent =
                    (!path.is_empty()).then(|| VertexId::Tree(path[..path.len() - 1].to_vec()));
                Box::new(parent.into_iter().chain((1..).map(move |c| {
                    let mut p = path.clone();
                    p.push(c);
                    VertexId::Tree(p)
                })))
            }
            (Builtin::Tree, _) => none(),
            (b, VertexId::X(i)) => list(b.ray_in(*i)),
            (b, VertexId::Y(i)) if b.has_spikes() && *i >= 2 => one(VertexId::X(*i)),
            _ => none(),
        }
    }

    fn is_exit(&self, v: &VertexId) -> bool {
        match (self, v) {
            (Builtin::Fan, VertexId::Leaf(_)) => true,
            (Builtin::Tree, VertexId::Tree(path)) => path.len() % 2 == 0,
            (Builtin::CA, VertexId::X(i)) => i % 2 == 1,
            (Builtin::RI | Builtin::CI, VertexId::X(1)) => true,
            (Builtin::CI | Builtin::CO, VertexId::Y(i)) => *i >= 2,
            _ => false,
        }
    }
}

/// The bipartite graph with `v₁A₁, v₂A₁, v₁A₃, v₂A₃` and, for `i ≥ 2`,
/// `v_{2i−3}Aᵢ, v_{2i−2}Aᵢ, v_{2i−1}Aᵢ, v_{2i}Aᵢ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tnd;

impl Tnd {
    fn right_of(i: u64) -> Vec<u64> {
        let mut out = Vec::new();
        if i == 1 {
            out.extend([1, 2]);
        } else {
            out.extend([2 * i - 3, 2 * i - 2, 2 * i - 1, 2 * i]);
        }
        if i == 3 {
            out.extend([1, 2]);
        }
        out.sort_unstable();
        out
    }
}

impl BipartiteGenerator for Tnd {
    fn name(&self) -> String {
        "TND".into()
    }

    fn roots(&self) -> Vec<VertexId> {
        vec![VertexId::V(1)]
    }

    fn left_neighbours(&self, v: &VertexId) -> Neighbours<'_> {
        let VertexId::V(i) = *v else { return none() };
        let js: Vec<VertexId> = (1..=i / 2 + 3)
            .filter(|&j| Tnd::right_of(j).contains(&i))
            .map(VertexId::A)
            .collect();
        list(js)
    }

    fn right_neighbours(&self, w: &VertexId) -> Neighbours<'_> {
        let VertexId::A(j) = *w else { return none() };
        list(Tnd::right_of(j).into_iter().map(VertexId::V).collect())
    }
}

/// A locally finite infinite dimaze on `x₁, x₂, …`: `xᵢ` is an exit with
/// probability `exit_p`, and each non-exit `xᵢ` points to each `xⱼ` with
/// `0 < |i−j| ≤ reach` with probability `edge_p`. Pure in `(seed, i, j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeededGenerator {
    pub seed: u64,
    pub reach: u64,
    pub edge_p: f64,
    pub exit_p: f64,
}

impl SeededGenerator {
    fn draw(&self, stream: u64) -> f64 {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng.gen::<f64>()
    }

    fn exit(&self, i: u64) -> bool {
        self.draw(i.wrapping_mul(2)) < self.exit_p
    }

    fn edge(&self, i: u64, j: u64) -> bool {
        !self.exit(i) && self.draw((i << 32 | j).wrapping_mul(2) | 1) < self.edge_p
    }

    fn window(&self, i: u64) -> impl Iterator<Item = u64> {
        let lo = i.saturating_sub(self.reach).max(1);
        (lo..=i + self.reach).filter(move |&j| j != i)
    }
}

impl DimazeGenerator for SeededGenerator {
    fn name(&self) -> String {
        format!("SEEDED({})", self.seed)
    }

    fn roots(&self) -> Vec<VertexId> {
        vec![VertexId::X(1)]
    }

    fn out_neighbours(&self, v: &VertexId) -> Neighbours<'_> {
        let VertexId::X(i) = *v else { return none() };
        Box::new(
            self.window(i)
                .filter(move |&j| self.edge(i, j))
                .map(VertexId::X),
        )
    }

    fn in_neighbours(&self, v: &VertexId) -> Neighbours<'_> {
        let VertexId::X(j) = *v else { return none() };
        Box::new(
            self.window(j)
                .filter(move |&i| self.edge(i, j))
                .map(VertexId::X),
        )
    }

    fn is_exit(&self, v: &VertexId) -> bool {
        matches!(*v, VertexId::X(i) if self.exit(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lazy::{truncate, truncate_bipartite};

    fn adjacency(name: &str, depth: usize, width: usize) -> (Vec<(String, String)>, Vec<String>) {
        let g = builtin(name).unwrap();
        let t = truncate(g.as_ref(), depth, width).unwrap();
        let d = &t.dimaze;
        let mut e: Vec<(String, String)> = d
            .edges()
            .into_iter()
            .map(|(u, v)| (d.name(u).to_string(), d.name(v).to_string()))
            .collect();
        e.sort();
        let mut x: Vec<String> = d
            .exits()
            .into_iter()
            .map(|v| d.name(v).to_string())
            .collect();
        x.sort();
        (e, x)
    }

    fn pairs(p: &[(&str, &str)]) -> Vec<(String, String)> {
        let mut v: Vec<(String, String)> = p
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        v.sort();
        v
    }

    fn strs(p: &[&str]) -> Vec<String> {
        let mut v: Vec<String> = p.iter().map(|s| s.to_string()).collect();
        v.sort();
        v
    }

    #[test]
    fn golden_ra() {
        let (e, x) = adjacency("RA", 5, 2);
        assert_eq!(
            e,
            pairs(&[("x2", "x1"), ("x2", "x3"), ("x4", "x3"), ("x4", "x5")])
        );
        assert!(x.is_empty());
    }

    #[test]
    fn golden_ri() {
        let (e, x) = adjacency("RI", 4, 2);
        assert_eq!(e, pairs(&[("x2", "x1"), ("x3", "x2"), ("x4", "x3")]));
        assert_eq!(x, strs(&["x1"]));
    }

    #[test]
    fn golden_ro() {
        let (e, x) = adjacency("RO", 4, 2);
        assert_eq!(e, pairs(&[("x1", "x2"), ("x2", "x3"), ("x3", "x4")]));
        assert!(x.is_empty());
    }

    #[test]
    fn golden_ca() {
        let (e, x) = adjacency("CA", 5, 2);
        assert_eq!(
            e,
            pairs(&[("x2", "x1"), ("x2", "x3"), ("x4", "x3"), ("x4", "x5")])
        );
        assert_eq!(x, strs(&["x1", "x3", "x5"]));
    }

    #[test]
    fn golden_ci() {
        let (e, x) = adjacency("CI", 4, 2);
        assert_eq!(
            e,
            pairs(&[
                ("x2", "x1"),
                ("x2", "y2"),
                ("x3", "x2"),
                ("x3", "y3"),
                ("x4", "x3")
            ])
        );
        assert_eq!(x, strs(&["x1", "y2", "y3"]));
    }

    #[test]
    fn golden_co() {
        let (e, x) = adjacency("CO", 4, 2);
        assert_eq!(
            e,
            pairs(&[
                ("x1", "x2"),
                ("x2", "x3"),
                ("x2", "y2"),
                ("x3", "x4"),
                ("x3", "y3")
            ])
        );
        assert_eq!(x, strs(&["y2", "y3"]));
    }

    #[test]
    fn golden_fan() {
        let (e, x) = adjacency("FAN", 2, 3);
        assert_eq!(e, pairs(&[("v", "v1"), ("v", "v2"), ("v", "v3")]));
        assert_eq!(x, strs(&["v1", "v2", "v3"]));
    }

    #[test]
    fn golden_tree() {
        let (e, x) = adjacency("TREE", 3, 2);
        assert_eq!(
            e,
            pairs(&[
                ("r.1", "r"),
                ("r.1", "r.1.1"),
                ("r.2", "r"),
                ("r.2", "r.2.1"),
            ])
        );
        assert_eq!(x, strs(&["r", "r.1.1", "r.2.1"]));
    }

    #[test]
    fn golden_tnd() {
        let t = truncate_bipartite(&Tnd, 20, 8).unwrap();
        let g = &t.graph;
        let nb = |a: &str| {
            let w = g.right_of(a).unwrap();
            let mut v: Vec<String> = g
                .right_neighbours(w)
                .iter()
                .map(|&i| g.left()[i].clone())
                .collect();
            v.sort();
            v
        };
        assert_eq!(nb("A1"), strs(&["v1", "v2"]));
        assert_eq!(nb("A2"), strs(&["v1", "v2", "v3", "v4"]));
        assert_eq!(nb("A3"), strs(&["v1", "v2", "v3", "v4", "v5", "v6"]));
        assert_eq!(nb("A4"), strs(&["v5", "v6", "v7", "v8"]));
        let deg = |v: &str| g.neighbours(g.left_of(v).unwrap()).len();
        assert_eq!((deg("v1"), deg("v2"), deg("v3"), deg("v5")), (3, 3, 2, 2));
    }

    #[test]
    fn tnd_enumerators_agree() {
        for i in 1..30 {
            for w in Tnd.left_neighbours(&VertexId::V(i)) {
                assert!(Tnd.right_neighbours(&w).any(|v| v == VertexId::V(i)));
            }
        }
    }

    #[test]
    fn seeded_is_consistent() {
        let g = SeededGenerator {
            seed: 7,
            reach: 3,
            edge_p: 0.4,
            exit_p: 0.3,
        };
        for i in 1..40 {
            let v = VertexId::X(i);
            for u in g.out_neighbours(&v) {
                assert!(g.in_neighbours(&u).any(|w| w == v));
                assert!(!g.is_exit(&v));
            }
        }
        let t = truncate(&g, 6, 3).unwrap();
        t.dimaze.validate().unwrap();
    }
}
