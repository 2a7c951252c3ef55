//! The `gammoid-lab` command line.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when the answer is
//! a mathematical "no" (dependent set, failed axiom, differing matroids, ...).

use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::bimaze::{
    maximal_presentation, minimal_presentation, mpt_decide, mpt_oracle, mt_oracle, Bimaze,
    MptAnswer,
};
use crate::demo::{demo_gallery, run_demo};
use crate::dimaze::{link, ml_oracle, Dimaze, LinkOutcome, PathSystem};
use crate::duality::to_dimaze;
use crate::error::{Error, Result};
use crate::io::{
    certificate_value, emit, linkage_value, matching_value, parse, parse_document, read_input,
    separator_value, BimazeDoc, DimazeDoc, Document, LinkageDoc, PymDoc,
};
use crate::lazy::{
    builtin, detect_comb, eliminate_fan_centres, fan_centres, topologically_linkable, truncate,
    truncate_bipartite, PatternKind, Tnd, TopoAnswer, TopoPathKind,
};
use crate::matroid::{check_axioms, first_difference, AxiomResult, IndependenceOracle};
use crate::pym::pym_linkage;
use crate::shift::{minor_presentation_for, shift};

#[derive(Debug, Parser)]
#[command(
    name = "gammoid-lab",
    version,
    about = "Gammoid and transversal matroid workbench"
)]
struct Cli {
    /// Largest ground set for exhaustive enumeration (default: GAMMOID_LAB_CAP or 20).
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check (I1), (I2), (I3) and (IM) for the matroid a document presents.
    Axioms { input: String },
    /// Link a vertex set onto the exits, or print a separator.
    Link {
        input: String,
        #[arg(long)]
        set: String,
    },
    /// Shift a dimaze along a linkage.
    Shift {
        input: String,
        #[arg(long)]
        linkage: String,
    },
    /// Present the minor M/C\D as a dimaze.
    Minor {
        input: String,
        #[arg(long, default_value = "")]
        contract: String,
        #[arg(long, default_value = "")]
        delete: String,
    },
    /// Run Pym's construction on a {p, q} document.
    Pym {
        input: String,
        #[arg(long)]
        linkage: String,
    },
    /// Convert a dimaze to its bimaze, or back with --to-dimaze.
    Dualize {
        input: String,
        #[arg(long)]
        to_dimaze: bool,
    },
    /// Decide m0-matchability of a left vertex set.
    Mpt {
        input: String,
        #[arg(long)]
        set: String,
    },
    /// The maximal presentation of a transversal presentation.
    PresentMax { input: String },
    /// A minimal presentation, up to the enumeration cap.
    PresentMin { input: String },
    /// Search a dimaze for comb and fan certificates of size k.
    Detect {
        input: String,
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long)]
        kind: Option<String>,
    },
    /// Topological linkability of a set in a (truncated) dimaze.
    Toplink {
        input: String,
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 5)]
        k: usize,
    },
    /// Remove k-fan centres by turning them into exits.
    EliminateFans {
        input: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Compare the matroids presented by two documents.
    Compare { a: String, b: String },
    /// Run one scripted example, or all of them.
    Demo { id: Option<String> },
    /// Truncate a built-in generator.
    Gen {
        name: String,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, default_value_t = 2)]
        width: usize,
    },
}

/// A document to print and the exit code that goes with it.
struct Outcome {
    doc: Value,
    code: i32,
}

impl Outcome {
    fn ok(doc: Value) -> Self {
        Outcome { doc, code: 0 }
    }

    fn no(doc: Value) -> Self {
        Outcome { doc, code: 2 }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                1
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let cap = cli.cap.unwrap_or_else(crate::enumeration_cap);
    match execute(cli.command, cap).and_then(|o| Ok((emit(&o.doc)?, o.code))) {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn names(list: &str) -> Vec<String> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}

fn read_dimaze_doc(path: &str) -> Result<DimazeDoc> {
    parse(&read_input(path)?, "dimaze document")
}

fn read_bimaze_doc(path: &str) -> Result<BimazeDoc> {
    parse(&read_input(path)?, "bimaze document")
}

fn read_dimaze(path: &str) -> Result<Dimaze> {
    read_dimaze_doc(path)?.to_dimaze()
}

/// The matroid a document presents, with the name of the oracle used.
fn oracle_of(doc: &Document) -> Result<(IndependenceOracle, &'static str)> {
    match doc {
        Document::Dimaze(d) => Ok((ml_oracle(&d.to_dimaze()?)?, "ml")),
        Document::Bimaze(b) if b.has_m0() => Ok((mpt_oracle(&b.to_bimaze()?)?, "mpt")),
        Document::Bimaze(b) => Ok((mt_oracle(&b.to_bipartite()?)?, "mt")),
    }
}

fn axiom_value(m: &IndependenceOracle, r: &AxiomResult) -> Value {
    let witness: Vec<Vec<String>> = r.witness.iter().map(|s| m.ground().names_of(*s)).collect();
    json!({ "note": r.note, "passed": r.passed, "witness": witness })
}

fn paths_of(d: &Dimaze, paths: &[Vec<String>]) -> Result<PathSystem> {
    PathSystem::from_names(d, paths)
}

fn execute(command: Command, cap: usize) -> Result<Outcome> {
    match command {
        Command::Axioms { input } => {
            let (m, kind) = oracle_of(&parse_document(&read_input(&input)?)?)?;
            let r = check_axioms(&m, cap)?;
            let doc = json!({
                "i1": axiom_value(&m, &r.i1),
                "i2": axiom_value(&m, &r.i2),
                "i3": axiom_value(&m, &r.i3),
                "im": axiom_value(&m, &r.im),
                "oracle": kind,
                "passed": r.all_passed(),
            });
            Ok(if r.all_passed() {
                Outcome::ok(doc)
            } else {
                Outcome::no(doc)
            })
        }
        Command::Link { input, set } => {
            let d = read_dimaze(&input)?;
            let x = d.vertices_of(&names(&set))?;
            Ok(match link(&d, &x)? {
                LinkOutcome::Linked(p) => Outcome::ok(linkage_value(&d, &p)),
                LinkOutcome::Separated { partial, separator } => {
                    Outcome::no(separator_value(&d, &partial, &separator))
                }
            })
        }
        Command::Shift { input, linkage } => {
            let d = read_dimaze(&input)?;
            let l: LinkageDoc = parse(&read_input(&linkage)?, "linkage document")?;
            let sh = shift(&d, &paths_of(&d, &l.linkage)?)?;
            Ok(Outcome::ok(serde_json::to_value(DimazeDoc::from_dimaze(
                &sh.d1,
            ))?))
        }
        Command::Minor {
            input,
            contract,
            delete,
        } => {
            let d = read_dimaze(&input)?;
            let c = d.vertices_of(&names(&contract))?;
            let r = d.vertices_of(&names(&delete))?;
            let (spec, pres) = minor_presentation_for(&d, &c, &r)?;
            let ground = ml_oracle(&d)?.ground().clone();
            Ok(Outcome::ok(json!({
                "contracted": pres.contracted,
                "deleted": pres.deleted,
                "dimaze": DimazeDoc::from_dimaze(&pres.dimaze),
                "ground": pres.ground,
                "linkage": pres.linkage.to_names(&d),
                "requested": {
                    "contract": ground.names_of(spec.contract),
                    "delete": ground.names_of(spec.delete),
                },
            })))
        }
        Command::Pym { input, linkage } => {
            let d = read_dimaze(&input)?;
            let doc: PymDoc = parse(&read_input(&linkage)?, "pym document")?;
            let trace = pym_linkage(&d, &paths_of(&d, &doc.p)?, &paths_of(&d, &doc.q)?)?;
            let y: Vec<&str> = trace.y_inf.iter().map(|&v| d.name(v)).collect();
            let i: Vec<&str> = trace
                .independent_part()
                .into_iter()
                .map(|v| d.name(v))
                .collect();
            Ok(Outcome::ok(json!({
                "independent_part": i,
                "linkage": trace.q_inf.to_names(&d),
                "rounds": trace.rounds(),
                "terminals": y,
            })))
        }
        Command::Dualize {
            input,
            to_dimaze: back,
        } => match (parse_document(&read_input(&input)?)?, back) {
            (Document::Dimaze(doc), false) => {
                let conv = doc.to_truncation()?.to_bimaze()?;
                Ok(Outcome::ok(serde_json::to_value(BimazeDoc::from_bimaze(
                    &conv.bimaze,
                ))?))
            }
            (Document::Bimaze(doc), true) => {
                let b = doc.to_bimaze()?;
                Ok(Outcome::ok(serde_json::to_value(dimaze_doc_of(&b)?)?))
            }
            (Document::Dimaze(_), true) => Err(Error::Document(
                "--to-dimaze expects a bimaze document".into(),
            )),
            (Document::Bimaze(_), false) => Err(Error::Document(
                "dualize expects a dimaze document; pass --to-dimaze for a bimaze".into(),
            )),
        },
        Command::Mpt { input, set } => {
            let b = read_bimaze_doc(&input)?.to_bimaze()?;
            let x = b.graph.lefts_of(&names(&set))?;
            Ok(match mpt_decide(&b, &x) {
                MptAnswer::Yes(m) => {
                    let mut v = matching_value(&b.graph, &m);
                    v["answer"] = json!("yes");
                    Outcome::ok(v)
                }
                MptAnswer::No => Outcome::no(json!({ "answer": "no" })),
                MptAnswer::Inconclusive => Outcome::ok(json!({ "answer": "inconclusive" })),
            })
        }
        Command::PresentMax { input } => {
            let g = read_bimaze_doc(&input)?.to_bipartite()?;
            Ok(Outcome::ok(serde_json::to_value(
                BimazeDoc::from_bipartite(&maximal_presentation(&g)),
            )?))
        }
        Command::PresentMin { input } => {
            let g = read_bimaze_doc(&input)?.to_bipartite()?;
            Ok(Outcome::ok(serde_json::to_value(
                BimazeDoc::from_bipartite(&minimal_presentation(&g, cap)?),
            )?))
        }
        Command::Detect { input, k, kind } => {
            let d = read_dimaze(&input)?;
            let kinds = match kind {
                Some(s) => vec![PatternKind::parse(&s)?],
                None => vec![
                    PatternKind::Alternating,
                    PatternKind::Incoming,
                    PatternKind::Outgoing,
                    PatternKind::Fan,
                ],
            };
            let mut found = Vec::new();
            for kind in kinds {
                if let Some(c) = detect_comb(&d, kind, k)? {
                    found.push(certificate_value(&d, &c));
                }
            }
            Ok(Outcome::ok(json!({ "certificates": found, "k": k })))
        }
        Command::Toplink { input, set, k } => {
            let t = read_dimaze_doc(&input)?.to_truncation()?;
            let d = &t.dimaze;
            let x = d.vertices_of(&names(&set))?;
            Ok(match topologically_linkable(&t, &x, k)? {
                TopoAnswer::Yes(paths) => {
                    let paths: Vec<Value> = paths
                        .iter()
                        .map(|p| {
                            let path: Vec<&str> = p.path.iter().map(|&v| d.name(v)).collect();
                            match &p.kind {
                                TopoPathKind::Exit => json!({ "end": "exit", "path": path }),
                                TopoPathKind::FanCentre(c) => json!({
                                    "certificate": certificate_value(d, c),
                                    "end": "fan-centre",
                                    "path": path,
                                }),
                                TopoPathKind::CombSpine(c) => json!({
                                    "certificate": certificate_value(d, c),
                                    "end": "comb-spine",
                                    "path": path,
                                }),
                            }
                        })
                        .collect();
                    Outcome::ok(json!({ "answer": "yes", "paths": paths }))
                }
                TopoAnswer::No(s) => {
                    let sep: Vec<&str> = s.vertices.iter().map(|&v| d.name(v)).collect();
                    Outcome::no(json!({ "answer": "no", "separator": sep }))
                }
                TopoAnswer::Inconclusive(f) => {
                    let f: Vec<&str> = f.iter().map(|&v| d.name(v)).collect();
                    Outcome::ok(json!({ "answer": "inconclusive", "frontier": f }))
                }
            })
        }
        Command::EliminateFans { input, k } => {
            let t = read_dimaze_doc(&input)?.to_truncation()?;
            let centres: Vec<String> = fan_centres(&t.dimaze, k)?
                .iter()
                .filter_map(|c| c.centre())
                .map(|v| t.dimaze.name(v).into())
                .collect();
            let e = eliminate_fan_centres(&t, k)?;
            Ok(Outcome::ok(json!({
                "centres": centres,
                "dimaze": DimazeDoc::from_truncation(&e),
            })))
        }
        Command::Compare { a, b } => {
            let (ma, ka) = oracle_of(&parse_document(&read_input(&a)?)?)?;
            let (mb, kb) = oracle_of(&parse_document(&read_input(&b)?)?)?;
            let diff = first_difference(&ma, &mb, cap)?;
            let doc = json!({
                "difference": diff.map(|s| ma.ground().names_of(s)),
                "equal": diff.is_none(),
                "oracles": [ka, kb],
            });
            Ok(if diff.is_none() {
                Outcome::ok(doc)
            } else {
                Outcome::no(doc)
            })
        }
        Command::Demo { id } => {
            let reports = match id {
                Some(id) => vec![run_demo(&id, cap)?],
                None => demo_gallery(cap)?,
            };
            let passed = reports.iter().all(|r| r.passed);
            let doc = if reports.len() == 1 {
                serde_json::to_value(&reports[0])?
            } else {
                json!({ "demos": reports, "passed": passed })
            };
            Ok(if passed {
                Outcome::ok(doc)
            } else {
                Outcome::no(doc)
            })
        }
        Command::Gen { name, depth, width } => {
            if name.eq_ignore_ascii_case("tnd") {
                let t = truncate_bipartite(&Tnd, depth, width)?;
                let mut doc = BimazeDoc::from_bipartite(&t.graph);
                if t.frontier_left.iter().chain(&t.frontier_right).any(|&f| f) {
                    let pick = |names: &[String], flags: &[bool]| -> Vec<String> {
                        names
                            .iter()
                            .zip(flags)
                            .filter(|(_, &f)| f)
                            .map(|(n, _)| n.clone())
                            .collect()
                    };
                    doc.frontier_left = Some(pick(t.graph.left(), &t.frontier_left));
                    doc.frontier_right = Some(pick(t.graph.right(), &t.frontier_right));
                }
                return Ok(Outcome::ok(serde_json::to_value(doc)?));
            }
            let t = truncate(builtin(&name)?.as_ref(), depth, width)?;
            Ok(Outcome::ok(serde_json::to_value(
                DimazeDoc::from_truncation(&t),
            )?))
        }
    }
}

/// Converts back, turning a right frontier into a frontier of `m₀` partners.
fn dimaze_doc_of(b: &Bimaze) -> Result<DimazeDoc> {
    let (d, _) = to_dimaze(b)?;
    let mut doc = DimazeDoc::from_dimaze(&d);
    if b.has_frontier() {
        let mut frontier: Vec<usize> = b
            .frontier_right()
            .into_iter()
            .map(|w| b.m0_partner(w))
            .collect();
        frontier.sort_unstable();
        doc.frontier = Some(
            frontier
                .into_iter()
                .map(|v| d.name(v).to_string())
                .collect(),
        );
        doc.in_frontier = Some(
            b.frontier_left()
                .into_iter()
                .map(|v| d.name(v).to_string())
                .collect(),
        );
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("gammoid-lab").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn help_and_usage() {
        assert_eq!(run_str(&["--help"]).0, 0);
        assert_eq!(run_str(&["--version"]).0, 0);
        let (code, _, err) = run_str(&["frobnicate"]);
        assert_eq!(code, 1);
        assert!(!err.is_empty());
    }

    #[test]
    fn set_lists() {
        assert_eq!(names("s, x,,t"), vec!["s", "x", "t"]);
        assert!(names("").is_empty());
    }

    #[test]
    fn gen_and_missing_file() {
        let (code, out, _) = run_str(&["gen", "RO", "--depth", "3", "--width", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"frontier\""));
        let (code, _, err) = run_str(&["axioms", "/nonexistent/file.json"]);
        assert_eq!(code, 1);
        assert!(err.contains("cannot read"), "{err}");
    }
}
