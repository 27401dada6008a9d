//! JSON documents. Every document carries `schema_version` and `kind`;
//! scalars are strings so that rationals stay exact. A reference to another
//! document is either a path (relative to the referring file) or the
//! document itself, inline.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// `(i, j, k, c)`: the product of basis elements `i` and `j` has
/// coefficient `c` on basis element `k`.
pub type Quad = (usize, usize, usize, String);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: u32,
    #[serde(flatten)]
    pub body: Document,
}

impl Envelope {
    pub fn new(body: Document) -> Self {
        Envelope {
            schema_version: SCHEMA_VERSION,
            body,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    Group(GroupDoc),
    Algebra(AlgebraDoc),
    Action(ActionDoc),
    StructureMap(StructureMapDoc),
    Bimodule(BimoduleDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Group(_) => "group",
            Document::Algebra(_) => "algebra",
            Document::Action(_) => "action",
            Document::StructureMap(_) => "structure_map",
            Document::Bimodule(_) => "bimodule",
        }
    }

    /// The declared coefficient field; groups have none.
    pub fn field(&self) -> Option<&str> {
        match self {
            Document::Group(_) => None,
            Document::Algebra(d) => Some(&d.field),
            Document::Action(d) => Some(&d.field),
            Document::StructureMap(d) => Some(&d.field),
            Document::Bimodule(d) => Some(&d.field),
        }
    }
}

/// A multiplication table on `0..n`, or a preset: `C<n>`, `S<n>` or `trivial`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub field: String,
    pub group: Ref,
    pub basis: Vec<String>,
    pub degree: Vec<usize>,
    pub mult: Vec<Quad>,
    pub one: Vec<String>,
}

/// Without `matrices` the action is trivial; without `acting_group` the
/// grading group acts on itself.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ActionDoc {
    pub field: String,
    pub algebra: Ref,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub acting_group: Option<Ref>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<Vec<Vec<String>>>>,
}

/// `zeta` is row-major with one column per basis element of `C`. Units
/// are optional; missing ones are searched for with the run's seed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureMapDoc {
    pub field: String,
    pub source: Ref,
    pub target: Ref,
    pub zeta: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub units: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BimoduleDoc {
    pub field: String,
    pub left: Ref,
    pub right: Ref,
    pub names: Vec<String>,
    pub degree: Vec<usize>,
    pub lact: Vec<Quad>,
    pub ract: Vec<Quad>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Ref {
    Path(String),
    Inline(Box<Envelope>),
}

impl Ref {
    pub fn inline(body: Document) -> Self {
        Ref::Inline(Box::new(Envelope::new(body)))
    }
}

impl<'de> Deserialize<'de> for Ref {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Value::deserialize(d)? {
            Value::String(s) => Ok(Ref::Path(s)),
            v @ Value::Object(_) => serde_json::from_value(v)
                .map(|e| Ref::Inline(Box::new(e)))
                .map_err(D::Error::custom),
            _ => Err(D::Error::custom("expected a file path or an inline document")),
        }
    }
}

impl Serialize for Ref {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Ref::Path(p) => s.serialize_str(p),
            Ref::Inline(e) => e.serialize(s),
        }
    }
}

/// A resolved document with where it came from.
#[derive(Clone, Debug)]
pub struct Node {
    pub doc: Envelope,
    /// Directory that relative references are resolved against.
    pub base: PathBuf,
    /// Location label such as `$.left.target`, used in reports.
    pub at: String,
}

pub fn parse_str(text: &str, origin: &str) -> Result<Envelope, CliError> {
    let env: Envelope = serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: origin.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    check_version(&env, origin)?;
    Ok(env)
}

fn check_version(env: &Envelope, origin: &str) -> Result<(), CliError> {
    if env.schema_version != SCHEMA_VERSION {
        return Err(CliError::Schema {
            path: origin.to_string(),
            found: env.schema_version,
        });
    }
    Ok(())
}

pub fn read(path: &Path) -> Result<Node, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let doc = parse_str(&text, &path.display().to_string())?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    Ok(Node {
        doc,
        base,
        at: "$".into(),
    })
}

/// Follows `r`, found under `key` of `parent`.
pub fn resolve(parent: &Node, key: &str, r: &Ref) -> Result<Node, CliError> {
    let at = format!("{}.{key}", parent.at);
    match r {
        Ref::Inline(e) => {
            check_version(e, &at)?;
            Ok(Node {
                doc: (**e).clone(),
                base: parent.base.clone(),
                at,
            })
        }
        Ref::Path(p) => {
            let path = parent.base.join(p);
            if !path.is_file() {
                return Err(CliError::Reference {
                    at,
                    reference: p.clone(),
                });
            }
            let mut node = read(&path)?;
            node.at = at;
            Ok(node)
        }
    }
}

pub fn to_json(env: &Envelope) -> String {
    let mut s = serde_json::to_string_pretty(env).expect("documents serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_and_path_references_parse() {
        let text = r#"{
            "schema_version": 1, "kind": "algebra", "field": "Q",
            "group": {"schema_version": 1, "kind": "group", "preset": "C2"},
            "basis": ["e", "a"], "degree": [0, 1],
            "mult": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[1,1,0,"1"]],
            "one": ["1", "0"]
        }"#;
        let env = parse_str(text, "inline").unwrap();
        let Document::Algebra(a) = &env.body else { panic!() };
        assert!(matches!(a.group, Ref::Inline(_)));
        let again = parse_str(&to_json(&env), "again").unwrap();
        assert_eq!(env, again);
        let with_path = text.replace(r#"{"schema_version": 1, "kind": "group", "preset": "C2"}"#, r#""c2.json""#);
        let env = parse_str(&with_path, "p").unwrap();
        let Document::Algebra(a) = &env.body else { panic!() };
        assert_eq!(a.group, Ref::Path("c2.json".into()));
    }

    #[test]
    fn parse_errors_carry_a_position() {
        let err = parse_str("{\n  \"schema_version\": 1,\n  \"kind\": \"group\",,\n}", "bad.json").unwrap_err();
        let CliError::Parse { line, .. } = err else { panic!("{err}") };
        assert_eq!(line, 3);
    }

    #[test]
    fn unknown_schema_version_rejected() {
        let err = parse_str(r#"{"schema_version": 7, "kind": "group", "preset": "C2"}"#, "v7").unwrap_err();
        assert!(matches!(err, CliError::Schema { found: 7, .. }));
    }
}
