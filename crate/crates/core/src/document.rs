//! JSON documents (schema `hyperbox/1`) and Graphviz export.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::core::{IncidenceHypergraph, Object, Orientation, Quiver, SetSystemHypergraph, Violation};
use crate::elem::Elem;
use crate::error::{Error, Result};

pub const SCHEMA: &str = "hyperbox/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Quiver,
    Hypergraph,
    Incidence,
}

/// On-disk form. Structure maps are arrays of `[element, value]` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub schema: String,
    pub category: Category,
    pub vertices: Vec<Elem>,
    pub edges: Vec<Elem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub incidences: Option<Vec<Elem>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub port: Option<Vec<(Elem, Elem)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attachment: Option<Vec<(Elem, Elem)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<Vec<(Elem, Elem)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Vec<(Elem, Elem)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endpoints: Option<Vec<(Elem, Vec<Elem>)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<(Elem, i8)>>,
}

/// A loaded object with its orientation, if the document had one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub object: Object,
    pub orientation: Option<Orientation>,
}

fn require<T>(field: Option<T>, name: &str, cat: &str) -> Result<T> {
    field.ok_or_else(|| Error::Input(format!("{cat} document is missing `{name}`")))
}

fn forbid<T>(field: &Option<T>, name: &str, cat: &str) -> Result<()> {
    match field {
        Some(_) => Err(Error::Input(format!("{cat} document cannot have `{name}`"))),
        None => Ok(()),
    }
}

/// Looks up each element's value, failing on gaps and duplicates.
fn function(items: &[Elem], pairs: Vec<(Elem, Elem)>, what: &str) -> Result<Vec<Elem>> {
    let mut map = std::collections::BTreeMap::new();
    for (k, v) in pairs {
        if !items.contains(&k) {
            return Err(Violation::new("unknown element", format!("`{what}` mentions `{k}`")).into());
        }
        if map.insert(k.clone(), v).is_some() {
            return Err(Violation::new("duplicate label", format!("`{what}` assigns `{k}` twice")).into());
        }
    }
    items
        .iter()
        .map(|x| {
            map.remove(x)
                .ok_or_else(|| Violation::new("map not total", format!("`{what}` has no value for `{x}`")).into())
        })
        .collect()
}

impl GraphDocument {
    pub fn into_document(self) -> Result<Document> {
        if self.schema != SCHEMA {
            return Err(Error::Input(format!("unsupported schema `{}`, expected `{SCHEMA}`", self.schema)));
        }
        let d = self;
        let object = match d.category {
            Category::Quiver => {
                let c = "quiver";
                for (f, n) in [(&d.port, "port"), (&d.attachment, "attachment")] {
                    forbid(f, n, c)?;
                }
                forbid(&d.incidences, "incidences", c)?;
                forbid(&d.endpoints, "endpoints", c)?;
                forbid(&d.orientation, "orientation", c)?;
                let s = function(&d.edges, require(d.source, "source", c)?, "source")?;
                let t = function(&d.edges, require(d.target, "target", c)?, "target")?;
                let edges = d.edges.iter().cloned().zip(s).zip(t).map(|((e, s), t)| (e, s, t));
                Object::Quiver(Quiver::new(d.vertices, edges.collect::<Vec<_>>())?)
            }
            Category::Hypergraph => {
                let c = "hypergraph";
                for (f, n) in [(&d.port, "port"), (&d.attachment, "attachment"), (&d.source, "source"), (&d.target, "target")] {
                    forbid(f, n, c)?;
                }
                forbid(&d.incidences, "incidences", c)?;
                forbid(&d.orientation, "orientation", c)?;
                let ends = require(d.endpoints, "endpoints", c)?;
                let mut map = std::collections::BTreeMap::new();
                for (e, vs) in ends {
                    if !d.edges.contains(&e) {
                        return Err(Violation::new("unknown element", format!("`endpoints` mentions `{e}`")).into());
                    }
                    if map.insert(e.clone(), vs).is_some() {
                        return Err(Violation::new("duplicate label", format!("`endpoints` assigns `{e}` twice")).into());
                    }
                }
                let edges = d.edges.iter().map(|e| {
                    map.remove(e)
                        .map(|vs| (e.clone(), vs))
                        .ok_or_else(|| Error::from(Violation::new("map not total", format!("`endpoints` has no value for `{e}`"))))
                });
                Object::Hypergraph(SetSystemHypergraph::new(d.vertices, edges.collect::<Result<Vec<_>>>()?)?)
            }
            Category::Incidence => {
                let c = "incidence";
                for (f, n) in [(&d.source, "source"), (&d.target, "target")] {
                    forbid(f, n, c)?;
                }
                forbid(&d.endpoints, "endpoints", c)?;
                let incs = require(d.incidences, "incidences", c)?;
                let p = function(&incs, require(d.port, "port", c)?, "port")?;
                let a = function(&incs, require(d.attachment, "attachment", c)?, "attachment")?;
                let triples: Vec<_> = incs.iter().cloned().zip(p).zip(a).map(|((i, p), a)| (i, p, a)).collect();
                let g = IncidenceHypergraph::new(d.vertices, d.edges, triples)?;
                let orientation = match d.orientation {
                    Some(o) => Some(Orientation::from_labels(&g, &o)?),
                    None => None,
                };
                return Ok(Document { object: Object::Incidence(g), orientation });
            }
        };
        Ok(Document { object, orientation: None })
    }

    /// Canonical document: every array in sort order.
    pub fn from_object(object: &Object, orientation: Option<&Orientation>) -> Self {
        let base = |category, vertices: &[Elem], edges: &[Elem]| GraphDocument {
            schema: SCHEMA.into(),
            category,
            vertices: vertices.to_vec(),
            edges: edges.to_vec(),
            incidences: None,
            port: None,
            attachment: None,
            source: None,
            target: None,
            endpoints: None,
            orientation: None,
        };
        match object {
            Object::Quiver(q) => {
                let mut d = base(Category::Quiver, q.vertices().elems(), q.edges().elems());
                let es = q.edges().iter();
                d.source = Some(es.clone().map(|e| (e.clone(), q.source_of(e).unwrap().clone())).collect());
                d.target = Some(es.map(|e| (e.clone(), q.target_of(e).unwrap().clone())).collect());
                d
            }
            Object::Hypergraph(h) => {
                let mut d = base(Category::Hypergraph, h.vertices().elems(), h.edges().elems());
                d.endpoints = Some(
                    h.edges().iter().map(|e| (e.clone(), h.endpoints_of(e).unwrap().into_iter().cloned().collect())).collect(),
                );
                d
            }
            Object::Incidence(g) => {
                let mut d = base(Category::Incidence, g.vertices().elems(), g.edges().elems());
                let is = g.incidences();
                d.incidences = Some(is.elems().to_vec());
                d.port = Some(is.iter().map(|i| (i.clone(), g.port_of(i).unwrap().clone())).collect());
                d.attachment = Some(is.iter().map(|i| (i.clone(), g.attachment_of(i).unwrap().clone())).collect());
                d.orientation = orientation.map(|o| is.iter().cloned().zip(o.signs().iter().copied()).collect());
                d
            }
        }
    }
}

pub fn parse_document(json: &str) -> Result<Document> {
    let doc: GraphDocument = serde_json::from_str(json).map_err(|e| Error::Input(format!("malformed document: {e}")))?;
    doc.into_document()
}

pub fn read_document(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| match e {
        Error::Input(m) => Error::Input(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Pretty-printed canonical JSON, newline terminated.
pub fn to_json(object: &Object, orientation: Option<&Orientation>) -> String {
    let mut s = serde_json::to_string_pretty(&GraphDocument::from_object(object, orientation)).expect("documents serialize");
    s.push('\n');
    s
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn vnode(x: &Elem) -> String {
    quote(&format!("v {x}"))
}

fn enode(x: &Elem) -> String {
    quote(&format!("e {x}"))
}

/// Graphviz source. Vertices are filled dots, edges of incidence objects and
/// hyperedges are hollow circles, incidences are plain lines.
pub fn to_dot(object: &Object, name: &str) -> String {
    let mut s = String::new();
    let filled = "shape=circle, style=filled, fillcolor=black, width=0.12, fixedsize=true, label=\"\"";
    let hollow = "shape=circle, width=0.12, fixedsize=true, label=\"\"";
    match object {
        Object::Quiver(q) => {
            let _ = writeln!(s, "digraph {} {{", quote(name));
            for v in q.vertices().iter() {
                let _ = writeln!(s, "  {} [{filled}, xlabel={}];", vnode(v), quote(&v.to_string()));
            }
            for e in q.edges().iter() {
                let (a, b) = (q.source_of(e).unwrap(), q.target_of(e).unwrap());
                let _ = writeln!(s, "  {} -> {} [label={}];", vnode(a), vnode(b), quote(&e.to_string()));
            }
        }
        Object::Hypergraph(h) => {
            let _ = writeln!(s, "graph {} {{", quote(name));
            for v in h.vertices().iter() {
                let _ = writeln!(s, "  {} [{filled}, xlabel={}];", vnode(v), quote(&v.to_string()));
            }
            for (ix, e) in h.edges().iter().enumerate() {
                let ends = h.endpoints_of(e).unwrap();
                if let [a, b] = ends[..] {
                    let _ = writeln!(s, "  {} -- {} [label={}];", vnode(a), vnode(b), quote(&e.to_string()));
                } else {
                    let _ = writeln!(s, "  {} [{hollow}, xlabel={}];", enode(e), quote(&e.to_string()));
                    for v in h.endpoints(ix) {
                        let _ = writeln!(s, "  {} -- {};", enode(e), vnode(h.vertices().elem(*v)));
                    }
                }
            }
        }
        Object::Incidence(g) => {
            let _ = writeln!(s, "graph {} {{", quote(name));
            for v in g.vertices().iter() {
                let _ = writeln!(s, "  {} [{filled}, xlabel={}];", vnode(v), quote(&v.to_string()));
            }
            for e in g.edges().iter() {
                let _ = writeln!(s, "  {} [{hollow}, xlabel={}];", enode(e), quote(&e.to_string()));
            }
            for i in g.incidences().iter() {
                let (v, e) = (g.port_of(i).unwrap(), g.attachment_of(i).unwrap());
                let _ = writeln!(s, "  {} -- {} [label={}];", vnode(v), enode(e), quote(&i.to_string()));
            }
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::generators::{cycle_q, n_edge_h, path_r};

    #[test]
    fn round_trips() {
        for object in [Object::Incidence(path_r(2)), Object::Quiver(cycle_q(2)), Object::Hypergraph(n_edge_h(3))] {
            let json = to_json(&object, None);
            let back = parse_document(&json).unwrap();
            assert_eq!(back.object, object);
            assert_eq!(to_json(&back.object, None), json);
        }
    }

    #[test]
    fn orientation_round_trips() {
        let g = path_r(2);
        let o = Orientation::from_signs(&g, vec![1, -1]).unwrap();
        let json = to_json(&Object::Incidence(g), Some(&o));
        assert_eq!(parse_document(&json).unwrap().orientation, Some(o));
    }

    #[test]
    fn rejects_bad_documents() {
        let missing = r#"{"schema":"hyperbox/1","category":"incidence","vertices":["v"],"edges":[],
            "incidences":["i"],"port":[["i","v"]],"attachment":[["i","nowhere"]]}"#;
        let err = parse_document(missing).unwrap_err();
        assert!(err.to_string().contains("nowhere"), "{err}");
        let unknown = r#"{"schema":"hyperbox/1","category":"quiver","vertices":[],"edges":[],"source":[],"target":[],"extra":1}"#;
        assert!(matches!(parse_document(unknown), Err(Error::Input(_))));
        let cat = r#"{"schema":"hyperbox/1","category":"poset","vertices":[],"edges":[]}"#;
        assert!(matches!(parse_document(cat), Err(Error::Input(_))));
    }

    #[test]
    fn tagged_labels_print_with_colons() {
        let p = crate::products::box_r(&path_r(1), &path_r(1));
        assert!(to_json(&Object::Incidence(p), None).contains("\"1:i0:v0\""));
    }
}
