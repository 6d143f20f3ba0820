//! JSON documents. One envelope carries an algebra, a module, a matched
//! pair or an O-operator:
//!
//! ```json
//! {"schema_version": "1", "algebra": {"dim": 1, "kind": "associative",
//!   "alpha1": [[1]], "alpha2": [[1]], "products": {"mul": [[[0]]]}}}
//! ```
//!
//! Scalars are JSON integers or `"p/q"` strings. Matrices are row-major
//! nested arrays acting on column vectors. Actions list one matrix per
//! basis vector of the acting algebra.
//!
//! Emission is canonical: keys sorted, integers as numbers, other
//! rationals as reduced `"p/q"`, arrays nested at most two deep on one
//! line and deeper arrays one element per line.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde_json::{Map, Number, Value};

use crate::algebra::{ActionSlot, Kind, Slot, StructuredAlgebra};
use crate::identity::CheckReport;
use crate::linalg::{Matrix, Scalar, Tensor3};
use crate::matched::MatchedPair;
use crate::modules::ActionFamily;
use crate::ooperator::OOperator;
use crate::{Error, Result};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Document {
    Algebra(StructuredAlgebra),
    Module(ActionFamily),
    MatchedPair(MatchedPair),
    OOperator(OOperator),
}

impl Document {
    pub fn payload_name(&self) -> &'static str {
        match self {
            Document::Algebra(_) => "algebra",
            Document::Module(_) => "module",
            Document::MatchedPair(_) => "matched_pair",
            Document::OOperator(_) => "o_operator",
        }
    }
}

const PAYLOADS: [&str; 4] = ["algebra", "module", "matched_pair", "o_operator"];

/// Parse a document. `base_dir` resolves `module_file` references; without
/// it such references are rejected.
pub fn parse_document(text: &str, base_dir: Option<&Path>) -> Result<Document> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::Syntax { line: e.line(), column: e.column(), message: strip_position(&e.to_string()) })?;
    let obj = object(&value, "")?;
    match obj.get("schema_version") {
        None => return Err(Error::schema("schema_version", "missing")),
        Some(Value::String(s)) if s == SCHEMA_VERSION => {}
        Some(Value::String(s)) => return Err(Error::Version(s.clone())),
        Some(_) => return Err(Error::schema("schema_version", "expected a string")),
    }
    let present: Vec<&str> = PAYLOADS.iter().copied().filter(|k| obj.contains_key(*k)).collect();
    if let Some(extra) = obj.keys().find(|k| *k != "schema_version" && !PAYLOADS.contains(&k.as_str())) {
        return Err(Error::schema(extra.clone(), "unknown field"));
    }
    let [name] = present[..] else {
        return Err(Error::schema("", format!("expected exactly one of {}", PAYLOADS.join(", "))));
    };
    let body = &obj[name];
    Ok(match name {
        "algebra" => Document::Algebra(algebra_from(body, "algebra")?),
        "module" => Document::Module(module_from(body, "module")?),
        "matched_pair" => Document::MatchedPair(matched_from(body, "matched_pair")?),
        _ => Document::OOperator(o_operator_from(body, "o_operator", base_dir)?),
    })
}

/// Read and parse a file; `module_file` references resolve relative to it.
pub fn read_document(path: &Path) -> Result<(Document, String)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::schema(path.display().to_string(), format!("cannot read: {e}")))?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."));
    Ok((parse_document(&text, Some(&dir))?, text))
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() { key.to_string() } else { format!("{path}.{key}") }
}

fn object<'v>(v: &'v Value, path: &str) -> Result<&'v Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::schema(path, "expected an object"))
}

fn field<'v>(obj: &'v Map<String, Value>, key: &str, path: &str) -> Result<&'v Value> {
    obj.get(key).ok_or_else(|| Error::schema(join(path, key), "missing"))
}

fn known_fields(obj: &Map<String, Value>, keys: &[&str], path: &str) -> Result<()> {
    match obj.keys().find(|k| !keys.contains(&k.as_str())) {
        Some(k) => Err(Error::schema(join(path, k), "unknown field")),
        None => Ok(()),
    }
}

fn array<'v>(v: &'v Value, path: &str) -> Result<&'v Vec<Value>> {
    v.as_array().ok_or_else(|| Error::schema(path, "expected an array"))
}

fn usize_from(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| Error::schema(path, "expected a nonnegative integer"))
}

fn kind_from(v: &Value, path: &str) -> Result<Kind> {
    v.as_str().and_then(Kind::parse).ok_or_else(|| Error::schema(path, "unknown kind"))
}

pub fn scalar_from(v: &Value, path: &str) -> Result<Scalar> {
    match v {
        Value::Number(n) => {
            let s = n.to_string();
            if s.contains(['.', 'e', 'E']) {
                return Err(Error::schema(path, "floating-point numbers are not allowed"));
            }
            s.parse().map_err(|e| Error::schema(path, format!("{e}")))
        }
        Value::String(s) => s.parse().map_err(|e| Error::schema(path, format!("{e}"))),
        _ => Err(Error::schema(path, "expected an integer or a \"p/q\" string")),
    }
}

fn vector_from(v: &Value, path: &str) -> Result<Vec<Scalar>> {
    array(v, path)?.iter().enumerate().map(|(i, e)| scalar_from(e, &format!("{path}[{i}]"))).collect()
}

fn matrix_from(v: &Value, path: &str, rows: usize, cols: usize) -> Result<Matrix> {
    let a = array(v, path)?;
    if a.len() != rows {
        return Err(Error::schema(path, format!("expected {rows} rows, got {}", a.len())));
    }
    let mut out = Vec::with_capacity(rows);
    for (i, r) in a.iter().enumerate() {
        let p = format!("{path}[{i}]");
        let row = vector_from(r, &p)?;
        if row.len() != cols {
            return Err(Error::schema(p, format!("expected {cols} entries, got {}", row.len())));
        }
        out.push(row);
    }
    if rows == 0 {
        return Ok(Matrix::zeros(0, cols));
    }
    Matrix::from_rows(out)
}

fn tensor_from(v: &Value, path: &str, dim: usize) -> Result<Tensor3> {
    let a = array(v, path)?;
    if a.len() != dim {
        return Err(Error::schema(path, format!("expected {dim} slices, got {}", a.len())));
    }
    let mut t = Tensor3::cube(dim);
    for (i, s) in a.iter().enumerate() {
        let m = matrix_from(s, &format!("{path}[{i}]"), dim, dim)?;
        for j in 0..dim {
            for k in 0..dim {
                t.set(i, j, k, m.get(j, k).clone());
            }
        }
    }
    Ok(t)
}

fn algebra_from(v: &Value, path: &str) -> Result<StructuredAlgebra> {
    let obj = object(v, path)?;
    known_fields(obj, &["dim", "kind", "alpha1", "alpha2", "products"], path)?;
    let dim = usize_from(field(obj, "dim", path)?, &join(path, "dim"))?;
    let kind = kind_from(field(obj, "kind", path)?, &join(path, "kind"))?;
    let a1 = matrix_from(field(obj, "alpha1", path)?, &join(path, "alpha1"), dim, dim)?;
    let a2 = matrix_from(field(obj, "alpha2", path)?, &join(path, "alpha2"), dim, dim)?;
    let pp = join(path, "products");
    let mut products = BTreeMap::new();
    for (k, t) in object(field(obj, "products", path)?, &pp)? {
        let p = join(&pp, k);
        let slot = Slot::parse(k).ok_or_else(|| Error::schema(&p, "unknown product"))?;
        products.insert(slot, tensor_from(t, &p, dim)?);
    }
    StructuredAlgebra::new(kind, a1, a2, products)
}

fn actions_from(v: &Value, path: &str, n: usize, m: usize) -> Result<BTreeMap<ActionSlot, Tensor3>> {
    let mut out = BTreeMap::new();
    for (k, mats) in object(v, path)? {
        let p = join(path, k);
        let slot = ActionSlot::parse(k).ok_or_else(|| Error::schema(&p, "unknown action"))?;
        let a = array(mats, &p)?;
        if a.len() != n {
            return Err(Error::schema(&p, format!("expected {n} matrices, got {}", a.len())));
        }
        let mats = a.iter().enumerate().map(|(i, x)| matrix_from(x, &format!("{p}[{i}]"), m, m)).collect::<Result<Vec<_>>>()?;
        out.insert(slot, Tensor3::from_action_matrices(m, &mats)?);
    }
    Ok(out)
}

fn module_from(v: &Value, path: &str) -> Result<ActionFamily> {
    let obj = object(v, path)?;
    known_fields(obj, &["base", "kind", "mdim", "beta1", "beta2", "actions"], path)?;
    let base = algebra_from(field(obj, "base", path)?, &join(path, "base"))?;
    let kind = kind_from(field(obj, "kind", path)?, &join(path, "kind"))?;
    let m = usize_from(field(obj, "mdim", path)?, &join(path, "mdim"))?;
    let b1 = matrix_from(field(obj, "beta1", path)?, &join(path, "beta1"), m, m)?;
    let b2 = matrix_from(field(obj, "beta2", path)?, &join(path, "beta2"), m, m)?;
    let actions = actions_from(field(obj, "actions", path)?, &join(path, "actions"), base.dim(), m)?;
    ActionFamily::new(base, kind, b1, b2, actions)
}

fn matched_from(v: &Value, path: &str) -> Result<MatchedPair> {
    let obj = object(v, path)?;
    known_fields(obj, &["kind", "alg_a", "alg_b", "a_on_b", "b_on_a"], path)?;
    let kind = kind_from(field(obj, "kind", path)?, &join(path, "kind"))?;
    let a = algebra_from(field(obj, "alg_a", path)?, &join(path, "alg_a"))?;
    let b = algebra_from(field(obj, "alg_b", path)?, &join(path, "alg_b"))?;
    let ab = actions_from(field(obj, "a_on_b", path)?, &join(path, "a_on_b"), a.dim(), b.dim())?;
    let ba = actions_from(field(obj, "b_on_a", path)?, &join(path, "b_on_a"), b.dim(), a.dim())?;
    MatchedPair::new(kind, a, b, ab, ba)
}

fn o_operator_from(v: &Value, path: &str, base_dir: Option<&Path>) -> Result<OOperator> {
    let obj = object(v, path)?;
    known_fields(obj, &["module", "module_file", "T"], path)?;
    let module = match (obj.get("module"), obj.get("module_file")) {
        (Some(m), None) => module_from(m, &join(path, "module"))?,
        (None, Some(f)) => {
            let p = join(path, "module_file");
            let name = f.as_str().ok_or_else(|| Error::schema(&p, "expected a path string"))?;
            let dir = base_dir.ok_or_else(|| Error::schema(&p, "file references need a base directory"))?;
            match read_document(&dir.join(name)) {
                Ok((Document::Module(m), _)) => m,
                Ok(_) => return Err(Error::schema(p, "referenced document is not a module")),
                Err(e) => return Err(Error::schema(p, format!("{name}: {e}"))),
            }
        }
        _ => return Err(Error::schema(path, "expected exactly one of module, module_file")),
    };
    let t = matrix_from(field(obj, "T", path)?, &join(path, "T"), module.base().dim(), module.mdim())?;
    OOperator::new(module, t)
}

pub fn scalar_value(s: &Scalar) -> Value {
    if s.is_integer() {
        Value::Number(s.to_string().parse::<Number>().expect("integer literal"))
    } else {
        Value::String(s.to_string())
    }
}

pub fn matrix_value(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(scalar_value).collect())).collect())
}

fn tensor_value(t: &Tensor3) -> Value {
    Value::Array(
        t.to_nested()
            .iter()
            .map(|s| Value::Array(s.iter().map(|f| Value::Array(f.iter().map(scalar_value).collect())).collect()))
            .collect(),
    )
}

fn algebra_value(a: &StructuredAlgebra) -> Value {
    let products: Map<String, Value> = a.products().iter().map(|(s, t)| (s.name().to_string(), tensor_value(t))).collect();
    let mut o = Map::new();
    o.insert("dim".into(), Value::from(a.dim()));
    o.insert("kind".into(), Value::from(a.kind().name()));
    o.insert("alpha1".into(), matrix_value(a.alpha1()));
    o.insert("alpha2".into(), matrix_value(a.alpha2()));
    o.insert("products".into(), Value::Object(products));
    Value::Object(o)
}

fn actions_value(actions: &BTreeMap<ActionSlot, Tensor3>) -> Value {
    Value::Object(
        actions
            .iter()
            .map(|(s, t)| (s.name().to_string(), Value::Array(t.action_matrices().iter().map(matrix_value).collect())))
            .collect(),
    )
}

fn module_value(m: &ActionFamily) -> Value {
    let mut o = Map::new();
    o.insert("base".into(), algebra_value(m.base()));
    o.insert("kind".into(), Value::from(m.kind().name()));
    o.insert("mdim".into(), Value::from(m.mdim()));
    o.insert("beta1".into(), matrix_value(m.beta1()));
    o.insert("beta2".into(), matrix_value(m.beta2()));
    o.insert("actions".into(), actions_value(m.actions()));
    Value::Object(o)
}

pub fn document_value(doc: &Document) -> Value {
    let body = match doc {
        Document::Algebra(a) => algebra_value(a),
        Document::Module(m) => module_value(m),
        Document::MatchedPair(p) => {
            let mut o = Map::new();
            o.insert("kind".into(), Value::from(p.kind().name()));
            o.insert("alg_a".into(), algebra_value(p.alg_a()));
            o.insert("alg_b".into(), algebra_value(p.alg_b()));
            o.insert("a_on_b".into(), actions_value(p.a_on_b().actions()));
            o.insert("b_on_a".into(), actions_value(p.b_on_a().actions()));
            Value::Object(o)
        }
        Document::OOperator(op) => {
            let mut o = Map::new();
            o.insert("module".into(), module_value(op.module()));
            o.insert("T".into(), matrix_value(op.t()));
            Value::Object(o)
        }
    };
    let mut o = Map::new();
    o.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
    o.insert(doc.payload_name().into(), body);
    Value::Object(o)
}

pub fn emit_document(doc: &Document) -> String {
    to_canonical(&document_value(doc))
}

/// Canonical text of any JSON value, newline terminated.
pub fn to_canonical(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn depth(v: &Value) -> usize {
    match v {
        Value::Array(a) => 1 + a.iter().map(depth).max().unwrap_or(0),
        _ => 0,
    }
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(o) if o.is_empty() => out.push_str("{}"),
        Value::Object(o) => {
            out.push_str("{\n");
            let mut keys: Vec<&String> = o.keys().collect();
            keys.sort();
            for (i, k) in keys.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String((*k).clone()).to_string());
                out.push_str(": ");
                write_value(&o[*k], indent + 1, out);
                out.push_str(if i + 1 < keys.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(a) if a.is_empty() || depth(v) <= 2 && a.iter().all(|e| !e.is_object()) => {
            out.push_str(&serde_json::to_string(v).expect("serialisable").replace(',', ", "));
        }
        Value::Array(a) => {
            out.push_str("[\n");
            for (i, e) in a.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(e, indent + 1, out);
                out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

/// JSON form of a report with one-based witnesses.
pub fn report_value(r: &CheckReport) -> Value {
    let violations = r
        .violations
        .iter()
        .map(|v| {
            let witness: Map<String, Value> =
                v.variables.iter().zip(&v.witness).map(|(n, i)| (n.clone(), Value::from(i + 1))).collect();
            let mut o = Map::new();
            o.insert("axiom".into(), Value::from(v.axiom.clone()));
            o.insert("order".into(), Value::Array(v.variables.iter().map(|n| Value::from(n.clone())).collect()));
            o.insert("witness".into(), Value::Object(witness));
            o.insert("residual".into(), Value::Array(v.residual.iter().map(scalar_value).collect()));
            Value::Object(o)
        })
        .collect();
    let mut o = Map::new();
    o.insert("verdict".into(), Value::from(r.verdict()));
    o.insert("checked".into(), Value::Array(r.checked.iter().map(|s| Value::from(s.clone())).collect()));
    o.insert("counts".into(), Value::Object(r.counts.iter().map(|(k, n)| (k.clone(), Value::from(*n))).collect()));
    o.insert("violations".into(), Value::Array(violations));
    Value::Object(o)
}

pub fn emit_report(r: &CheckReport) -> String {
    to_canonical(&report_value(r))
}

/// A list of matrices, as emitted by searches.
pub fn emit_matrices(ms: &[Matrix]) -> String {
    let mut o = Map::new();
    o.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
    o.insert("matrices".into(), Value::Array(ms.iter().map(matrix_value).collect()));
    to_canonical(&Value::Object(o))
}

/// Parse the output of [`emit_matrices`].
pub fn parse_matrices(text: &str) -> Result<Vec<Matrix>> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::Syntax { line: e.line(), column: e.column(), message: strip_position(&e.to_string()) })?;
    let obj = object(&value, "")?;
    let list = array(field(obj, "matrices", "")?, "matrices")?;
    list.iter()
        .enumerate()
        .map(|(i, m)| {
            let p = format!("matrices[{i}]");
            let rows = array(m, &p)?.len();
            let cols = array(m, &p)?.first().map_or(Ok(0), |r| array(r, &p).map(Vec::len))?;
            matrix_from(m, &p, rows, cols)
        })
        .collect()
}
