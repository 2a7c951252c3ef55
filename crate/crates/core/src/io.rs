//! JSON documents for dimazes, bimazes and the certificates computed on them.
//!
//! Output always goes through [`serde_json::Value`], whose maps are ordered,
//! so keys come out sorted; documents end with a newline.

use std::io::Read;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bimaze::{Bimaze, Bipartite, Matching};
use crate::dimaze::{Dimaze, PathSystem, Separator};
use crate::error::{Error, Result};
use crate::lazy::{PatternCertificate, Truncation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimazeDoc {
    pub edges: Vec<[String; 2]>,
    pub exits: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frontier: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub in_frontier: Option<Vec<String>>,
    pub vertices: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimazeDoc {
    /// `[left, right]` pairs.
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frontier_left: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frontier_right: Option<Vec<String>>,
    pub left: Vec<String>,
    /// Absent for a plain bipartite presentation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m0: Option<Vec<[String; 2]>>,
    pub right: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkageDoc {
    pub linkage: Vec<Vec<String>>,
}

/// Input of the `pym` command: `p` links `S ∪ I`, `q` links `S` onto `T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PymDoc {
    pub p: Vec<Vec<String>>,
    pub q: Vec<Vec<String>>,
}

/// Either kind of structure document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Dimaze(DimazeDoc),
    Bimaze(BimazeDoc),
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn emit<T: Serialize>(value: &T) -> Result<String> {
    let v: Value = serde_json::to_value(value)?;
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

/// Parses a document, naming it in the error together with serde's line and column.
pub fn parse<T: DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Document(format!("{what}: {e}")))
}

/// Reads a path, with `-` meaning standard input.
pub fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Document(format!("cannot read `{path}`: {e}")))
    }
}

/// Tells the two structure documents apart by their keys.
pub fn parse_document(text: &str) -> Result<Document> {
    let v: Value = parse(text, "document")?;
    let Some(obj) = v.as_object() else {
        return Err(Error::Document(
            "document: expected a JSON object at the top level".into(),
        ));
    };
    if obj.contains_key("vertices") {
        Ok(Document::Dimaze(parse(text, "dimaze document")?))
    } else if obj.contains_key("left") {
        Ok(Document::Bimaze(parse(text, "bimaze document")?))
    } else {
        Err(Error::Document(
            "document: neither a dimaze (needs `vertices`) nor a bimaze (needs `left`)".into(),
        ))
    }
}

fn pair(a: &str, b: &str) -> [String; 2] {
    [a.to_string(), b.to_string()]
}

fn names_of(names: &[String], flags: &[bool]) -> Vec<String> {
    (0..flags.len())
        .filter(|&i| flags[i])
        .map(|i| names[i].clone())
        .collect()
}

impl DimazeDoc {
    pub fn from_dimaze(d: &Dimaze) -> Self {
        DimazeDoc {
            edges: d
                .edges()
                .into_iter()
                .map(|(u, v)| pair(d.name(u), d.name(v)))
                .collect(),
            exits: d
                .exits()
                .into_iter()
                .map(|v| d.name(v).to_string())
                .collect(),
            frontier: None,
            in_frontier: None,
            vertices: d.names().to_vec(),
        }
    }

    /// Frontier fields are written only when something was cut.
    pub fn from_truncation(t: &Truncation) -> Self {
        let mut doc = DimazeDoc::from_dimaze(&t.dimaze);
        let names = t.dimaze.names();
        if t.frontier.iter().chain(&t.in_frontier).any(|&f| f) {
            doc.frontier = Some(names_of(names, &t.frontier));
            doc.in_frontier = Some(names_of(names, &t.in_frontier));
        }
        doc
    }

    pub fn to_dimaze(&self) -> Result<Dimaze> {
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let edges: Vec<(&str, &str)> = self
            .edges
            .iter()
            .map(|[u, v]| (u.as_str(), v.as_str()))
            .collect();
        let exits: Vec<&str> = self.exits.iter().map(String::as_str).collect();
        Dimaze::new(&vertices, &edges, &exits)
    }

    pub fn to_truncation(&self) -> Result<Truncation> {
        let d = self.to_dimaze()?;
        let frontier = d.vertices_of(self.frontier.as_deref().unwrap_or(&[]))?;
        let in_frontier = d.vertices_of(self.in_frontier.as_deref().unwrap_or(&[]))?;
        Truncation::with_frontier(d, &frontier, &in_frontier)
    }
}

impl BimazeDoc {
    pub fn from_bipartite(g: &Bipartite) -> Self {
        BimazeDoc {
            edges: g
                .edges()
                .into_iter()
                .map(|(v, w)| pair(&g.left()[v], &g.right()[w]))
                .collect(),
            frontier_left: None,
            frontier_right: None,
            left: g.left().to_vec(),
            m0: None,
            right: g.right().to_vec(),
        }
    }

    pub fn from_bimaze(b: &Bimaze) -> Self {
        let mut doc = BimazeDoc::from_bipartite(&b.graph);
        doc.m0 = Some(
            b.m0()
                .to_names(&b.graph)
                .into_iter()
                .map(|(v, w)| [v, w])
                .collect(),
        );
        if b.has_frontier() {
            doc.frontier_left = Some(
                b.frontier_left()
                    .into_iter()
                    .map(|v| b.graph.left()[v].clone())
                    .collect(),
            );
            doc.frontier_right = Some(
                b.frontier_right()
                    .into_iter()
                    .map(|w| b.graph.right()[w].clone())
                    .collect(),
            );
        }
        doc
    }

    pub fn to_bipartite(&self) -> Result<Bipartite> {
        let edges: Vec<(&str, &str)> = self
            .edges
            .iter()
            .map(|[v, w]| (v.as_str(), w.as_str()))
            .collect();
        let left: Vec<&str> = self.left.iter().map(String::as_str).collect();
        let right: Vec<&str> = self.right.iter().map(String::as_str).collect();
        Bipartite::new(&left, &right, &edges)
    }

    pub fn has_m0(&self) -> bool {
        self.m0.is_some()
    }

    pub fn to_bimaze(&self) -> Result<Bimaze> {
        let g = self.to_bipartite()?;
        let Some(m0) = &self.m0 else {
            return Err(Error::Document("bimaze document: missing `m0`".into()));
        };
        let m0: Vec<(&str, &str)> = m0.iter().map(|[v, w]| (v.as_str(), w.as_str())).collect();
        let b = Bimaze::new(g, &m0)?;
        let left = b
            .graph
            .lefts_of(self.frontier_left.as_deref().unwrap_or(&[]))?;
        let right = self
            .frontier_right
            .as_deref()
            .unwrap_or(&[])
            .iter()
            .map(|w| {
                b.graph
                    .right_of(w)
                    .ok_or_else(|| Error::UnknownElement(w.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(b.with_frontier(&left, &right))
    }
}

pub fn linkage_value(d: &Dimaze, p: &PathSystem) -> Value {
    json!({ "linkage": p.to_names(d) })
}

pub fn separator_value(d: &Dimaze, partial: &PathSystem, s: &Separator) -> Value {
    let names: Vec<&str> = s.vertices.iter().map(|&v| d.name(v)).collect();
    json!({ "partial": partial.to_names(d), "separator": names })
}

pub fn matching_value(g: &Bipartite, m: &Matching) -> Value {
    let pairs: Vec<[String; 2]> = m.to_names(g).into_iter().map(|(v, w)| [v, w]).collect();
    json!({ "matching": pairs })
}

pub fn certificate_value(d: &Dimaze, c: &PatternCertificate) -> Value {
    json!({
        "kind": c.kind.as_str(),
        "spikes": c.spike_names(d),
        "spine": c.spine_names(d),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const PATH: &str = r#"{
  "edges": [
    [
      "s",
      "x"
    ],
    [
      "x",
      "t"
    ]
  ],
  "exits": [
    "t"
  ],
  "vertices": [
    "s",
    "x",
    "t"
  ]
}
"#;

    #[test]
    fn dimaze_round_trip_is_byte_exact() {
        let doc: DimazeDoc = parse(PATH, "dimaze").unwrap();
        let d = doc.to_dimaze().unwrap();
        assert_eq!(emit(&DimazeDoc::from_dimaze(&d)).unwrap(), PATH);
    }

    #[test]
    fn unknown_fields_are_rejected_with_position() {
        let err = parse::<DimazeDoc>(
            "{\"vertices\": [], \"edges\": [], \"exits\": [], \"bogus\": 1}",
            "dimaze",
        )
        .unwrap_err()
        .to_string();
        assert!(err.contains("bogus"), "{err}");
        assert!(err.contains("line 1"), "{err}");
    }

    #[test]
    fn kinds_are_detected() {
        assert!(matches!(parse_document(PATH).unwrap(), Document::Dimaze(_)));
        let b = r#"{"left": ["a"], "right": ["w"], "edges": [["a", "w"]], "m0": [["a", "w"]]}"#;
        let Document::Bimaze(doc) = parse_document(b).unwrap() else {
            panic!()
        };
        let bm = doc.to_bimaze().unwrap();
        assert_eq!(BimazeDoc::from_bimaze(&bm), doc);
        assert!(parse_document("[]").is_err());
        assert!(parse_document("{}").is_err());
    }

    #[test]
    fn frontier_survives() {
        let t = crate::lazy::truncate(&crate::lazy::Builtin::RO, 3, 1).unwrap();
        let doc = DimazeDoc::from_truncation(&t);
        assert_eq!(doc.frontier.as_deref(), Some(&["x3".to_string()][..]));
        assert_eq!(
            doc.to_truncation().unwrap(),
            Truncation {
                depth: 0,
                width: 0,
                ..t
            }
        );
    }
}
