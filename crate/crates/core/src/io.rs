//! JSON model files, Graphviz export, table rendering and JSON-lines records.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::enumerate::CatalogueEntry;
use crate::lattice::{Lattice, LatticeError};
use crate::quantale::{Quantale, QuantaleError, QuantaleProfile};
use crate::set::ElemSet;

pub const SCHEMA: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Lattice,
    Quantale,
}

/// On-disk shape. Fields are declared alphabetically so that the written
/// key order is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub leq: Vec<Vec<bool>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<Vec<Vec<String>>>,
    pub names: Vec<String>,
    pub schema: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Model {
    Lattice(Lattice),
    Quantale(Quantale),
}

impl Model {
    pub fn lattice(&self) -> &Lattice {
        match self {
            Model::Lattice(l) => l,
            Model::Quantale(q) => q.lattice(),
        }
    }
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("field `{field}`: {message}")]
    Field { field: &'static str, message: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Quantale(#[from] QuantaleError),
}

impl IoError {
    /// Validation failures come from the lattice or quantale checks; the
    /// other variants mean the input could not be read as a model at all.
    pub fn is_validation(&self) -> bool {
        matches!(self, IoError::Lattice(_) | IoError::Quantale(_))
    }
}

fn field(field: &'static str, message: impl Into<String>) -> IoError {
    IoError::Field { field, message: message.into() }
}

pub fn parse_model(text: &str) -> Result<Model, IoError> {
    let file: ModelFile = serde_json::from_str(text).map_err(|e| IoError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    from_file(file)
}

pub fn from_file(file: ModelFile) -> Result<Model, IoError> {
    if file.schema != SCHEMA {
        return Err(field("schema", format!("unsupported version {:?}", file.schema)));
    }
    let n = file.names.len();
    if file.leq.len() != n || file.leq.iter().any(|r| r.len() != n) {
        return Err(field("leq", format!("expected a {n}x{n} matrix")));
    }
    let lattice = Lattice::new(file.leq, file.names)?;
    match (file.kind, file.mul) {
        (Kind::Lattice, None) => Ok(Model::Lattice(lattice)),
        (Kind::Lattice, Some(_)) => Err(field("mul", "lattice files carry no multiplication")),
        (Kind::Quantale, None) => Err(field("mul", "missing for a quantale")),
        (Kind::Quantale, Some(rows)) => {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(field("mul", format!("expected a {n}x{n} matrix")));
            }
            let table = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|s| lattice.index_of(s).ok_or_else(|| field("mul", format!("undeclared element {s:?}"))))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Model::Quantale(Quantale::new(lattice, table, file.label)?))
        }
    }
}

pub fn to_file(model: &Model) -> ModelFile {
    let l = model.lattice();
    let (kind, mul, label) = match model {
        Model::Lattice(_) => (Kind::Lattice, None, None),
        Model::Quantale(q) => (Kind::Quantale, Some(name_table(q)), q.label().map(str::to_string)),
    };
    ModelFile { kind, label, leq: l.order_matrix(), mul, names: l.names().to_vec(), schema: SCHEMA.to_string() }
}

/// JSON with sorted keys, one matrix row per line and a trailing newline.
pub fn model_to_json(model: &Model) -> String {
    let value = serde_json::to_value(to_file(model)).expect("model files serialize");
    let mut s = String::new();
    write_rows(&value, 0, &mut s);
    s.push('\n');
    s
}

/// Like pretty printing, except arrays that hold no arrays stay on one line.
fn write_rows(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                let _ = write!(out, "{pad}{}: ", Value::String(k.clone()));
                write_rows(x, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", "  ".repeat(indent));
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad);
                write_rows(x, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", "  ".repeat(indent));
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            let _ = write!(out, "[{}]", parts.join(", "));
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

pub fn load_model(path: impl AsRef<Path>) -> Result<Model, IoError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| IoError::Io { path: path.display().to_string(), source })?;
    parse_model(&text)
}

pub fn save_model(model: &Model, path: impl AsRef<Path>) -> Result<(), IoError> {
    let path = path.as_ref();
    fs::write(path, model_to_json(model)).map_err(|source| IoError::Io { path: path.display().to_string(), source })
}

fn name_table(q: &Quantale) -> Vec<Vec<String>> {
    let l = q.lattice();
    l.elements().map(|a| l.elements().map(|b| l.name(q.mul(a, b)).to_string()).collect()).collect()
}

/// Hasse diagram as a Graphviz digraph, bottom to top.
pub fn export_dot(l: &Lattice) -> String {
    let mut s = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for x in l.elements() {
        let _ = writeln!(s, "  \"{}\";", escape(l.name(x)));
    }
    for (a, b) in l.covers() {
        let _ = writeln!(s, "  \"{}\" -> \"{}\";", escape(l.name(a)), escape(l.name(b)));
    }
    s.push_str("}\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn write_dot(l: &Lattice, path: impl AsRef<Path>) -> Result<(), IoError> {
    let path = path.as_ref();
    fs::write(path, export_dot(l)).map_err(|source| IoError::Io { path: path.display().to_string(), source })
}

/// Aligned multiplication table without the bottom row and column.
pub fn render_table(q: &Quantale) -> String {
    let l = q.lattice();
    let shown: Vec<usize> = l.elements().filter(|&x| x != l.bottom() || l.size() == 1).collect();
    let width = l.names().iter().map(|s| s.chars().count()).max().unwrap_or(1);
    let cell = |s: &str| format!("{s:>width$}");
    let mut out = String::new();
    let header: Vec<String> = shown.iter().map(|&b| cell(l.name(b))).collect();
    let _ = writeln!(out, "{} | {}", cell("*"), header.join(" "));
    let _ = writeln!(out, "{}-+-{}", "-".repeat(width), "-".repeat(header.join(" ").chars().count()));
    for &a in &shown {
        let row: Vec<String> = shown.iter().map(|&b| cell(l.name(q.mul(a, b)))).collect();
        let _ = writeln!(out, "{} | {}", cell(l.name(a)), row.join(" "));
    }
    out
}

fn names_of(l: &Lattice, set: ElemSet) -> Vec<&str> {
    set.iter().map(|x| l.name(x)).collect()
}

/// Profile with element names in place of indices.
pub fn profile_json(l: &Lattice, p: &QuantaleProfile) -> Value {
    json!({
        "unit": p.unit.map(|u| l.name(u)),
        "semiUnital": p.semi_unital,
        "twoSidedElements": names_of(l, p.two_sided_elements),
        "twoSided": p.two_sided,
        "integral": p.integral,
        "commutative": p.commutative,
        "dualizing": names_of(l, p.dualizing),
        "meetDistributiveMul": p.meet_distributive_mul,
    })
}

pub fn lattice_json(l: &Lattice) -> Value {
    json!({ "names": l.names(), "leq": l.order_matrix() })
}

/// One JSON-lines record: `{canonical, flags, label, lattice, mul, profile}`.
pub fn entry_json(e: &CatalogueEntry) -> Value {
    let l = e.quantale.lattice();
    json!({
        "canonical": e.canonical,
        "label": e.quantale.label(),
        "lattice": lattice_json(l),
        "mul": name_table(&e.quantale),
        "profile": profile_json(l, &e.profile),
        "flags": e.flags,
    })
}

pub fn entry_line(e: &CatalogueEntry) -> String {
    serde_json::to_string(&entry_json(e)).expect("values serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;
    use crate::named;

    #[test]
    fn round_trip_lattice_and_quantale() {
        for m in [Model::Lattice(named::ext_l7()), Model::Quantale(catalogue::by_label("5.3.6").unwrap().quantale())] {
            let text = model_to_json(&m);
            assert_eq!(parse_model(&text).unwrap(), m);
            assert_eq!(model_to_json(&parse_model(&text).unwrap()), text);
        }
    }

    #[test]
    fn keys_are_sorted() {
        let text = model_to_json(&Model::Quantale(catalogue::by_label("5.2.42").unwrap().quantale()));
        let keys: Vec<usize> = ["\"kind\"", "\"label\"", "\"leq\"", "\"mul\"", "\"names\"", "\"schema\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn undeclared_name_is_a_field_error() {
        let q = catalogue::by_label("5.2.42").unwrap().quantale();
        let mut file = to_file(&Model::Quantale(q));
        file.mul.as_mut().unwrap()[1][1] = "delta".into();
        let text = serde_json::to_string(&file).unwrap();
        let err = parse_model(&text).unwrap_err();
        assert!(matches!(err, IoError::Field { field: "mul", .. }), "{err}");
        assert!(!err.is_validation());
    }

    #[test]
    fn syntax_error_reports_position() {
        let err = parse_model("{\n  \"kind\": \"lattice\",\n  oops\n}").unwrap_err();
        match err {
            IoError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn invalid_order_is_a_validation_error() {
        let mut file = to_file(&Model::Lattice(named::m3()));
        file.leq[1][2] = true;
        file.leq[2][1] = true;
        let err = from_file(file).unwrap_err();
        assert!(err.is_validation(), "{err}");
    }

    #[test]
    fn dot_export() {
        let dot = export_dot(&named::ext_m3());
        assert!(dot.contains("rankdir=BT"));
        assert_eq!(dot.matches("->").count(), 9);
        assert_eq!(export_dot(&Lattice::chain(2).unwrap()).matches("->").count(), 1);
        assert_eq!(export_dot(&named::n5()).matches("->").count(), 5);
    }

    #[test]
    fn table_rendering_skips_bottom() {
        let q = catalogue::by_label("5.2.42").unwrap().quantale();
        let text = render_table(&q);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 6);
        assert!(lines[0].contains("alpha") && !lines[0].contains("bot"));
        assert!(lines[2].trim_start().starts_with("alpha |"));
        assert!(lines[2].ends_with("beta gamma alpha   top"));
    }
}
