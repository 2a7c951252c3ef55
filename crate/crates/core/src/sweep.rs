//! The (I3) sweep over converted truncations of infinite dimazes.

use std::path::Path;

use rand::Rng;
use serde::Serialize;

use crate::bimaze::{mpt_oracle, Bimaze};
use crate::error::Result;
use crate::io::{emit, BimazeDoc};
use crate::lazy::{builtin, builtin_names, truncate, DimazeGenerator, SeededGenerator, Truncation};
use crate::matroid::check_i3;
use crate::random::rng;

/// Left classes above this size are shrunk by lowering the depth.
pub const SWEEP_MAX_LEFT: usize = 14;

#[derive(Clone, Debug, Serialize)]
pub struct SweepViolation {
    pub instance: usize,
    pub generator: String,
    pub depth: usize,
    pub width: usize,
    pub bimaze: BimazeDoc,
    /// `[I, I']` as in the axiom report.
    pub witness: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepReport {
    pub instances: usize,
    pub with_frontier: usize,
    pub largest_left: usize,
    pub violations: Vec<SweepViolation>,
}

/// Generator, depth and width of instance `i`.
fn instance(seed: u64, i: usize) -> (Box<dyn DimazeGenerator>, usize, usize) {
    let mut r = rng(seed.wrapping_add(i as u64));
    let names = builtin_names();
    if i.is_multiple_of(5) {
        let g = builtin(names[(i / 5) % names.len()]).expect("built-in name");
        return (g, r.gen_range(2..=6), r.gen_range(1..=3));
    }
    let g = SeededGenerator {
        seed: r.gen(),
        reach: r.gen_range(1..=3),
        edge_p: r.gen_range(0.2..0.6),
        exit_p: r.gen_range(0.15..0.5),
    };
    (Box::new(g), r.gen_range(3..=6), r.gen_range(2..=3))
}

fn truncation_within(
    g: &dyn DimazeGenerator,
    mut depth: usize,
    width: usize,
) -> Result<Truncation> {
    loop {
        let t = truncate(g, depth, width)?;
        if t.dimaze.len() <= SWEEP_MAX_LEFT || depth == 1 {
            return Ok(t);
        }
        depth -= 1;
    }
}

/// Checks (I3) for the conservative `m₀`-matchability oracle on `count`
/// converted truncations; each violation is also written to `artifacts`.
pub fn i3_sweep(count: usize, seed: u64, artifacts: Option<&Path>) -> Result<SweepReport> {
    let mut report = SweepReport::default();
    for i in 0..count {
        let (g, depth, width) = instance(seed, i);
        let t = truncation_within(g.as_ref(), depth, width)?;
        let b: Bimaze = t.to_bimaze()?.bimaze;
        report.instances += 1;
        report.largest_left = report.largest_left.max(b.graph.left_len());
        if b.has_frontier() {
            report.with_frontier += 1;
        }
        let oracle = mpt_oracle(&b)?;
        let r = check_i3(&oracle, SWEEP_MAX_LEFT)?;
        if !r.passed {
            let v = SweepViolation {
                instance: i,
                generator: g.name(),
                depth: t.depth,
                width,
                bimaze: BimazeDoc::from_bimaze(&b),
                witness: r
                    .witness
                    .iter()
                    .map(|s| oracle.ground().names_of(*s))
                    .collect(),
            };
            if let Some(dir) = artifacts {
                std::fs::create_dir_all(dir)?;
                std::fs::write(dir.join(format!("i3-counterexample-{i}.json")), emit(&v)?)?;
            }
            report.violations.push(v);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_is_clean() {
        let dir = tempfile::tempdir().unwrap();
        let r = i3_sweep(40, 11, Some(dir.path())).unwrap();
        assert_eq!(r.instances, 40);
        assert!(r.with_frontier > 0);
        assert!(r.violations.is_empty());
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
    }
}
