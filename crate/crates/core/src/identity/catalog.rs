use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde_json::Value;

use super::{Axiom, MapPower, Node, Sort, Term, Variable};
use crate::algebra::{ActionSlot, Slot};
use crate::linalg::Scalar;
use crate::{Error, Result};

macro_rules! sources {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../catalogs/", $name, ".json")))),*]
    };
}

static SOURCES: &[(&str, &str)] = sources![
    "associative",
    "lie",
    "pre_lie",
    "dendriform",
    "nc_poisson",
    "nc_pre_poisson",
    "assoc_bimodule",
    "lie_representation",
    "pre_lie_bimodule",
    "dendriform_bimodule",
    "poisson_representation",
    "pre_poisson_bimodule",
    "matched_associative",
    "matched_lie",
    "matched_pre_lie",
    "matched_dendriform",
    "matched_nc_poisson",
    "matched_nc_pre_poisson",
    "o_operator_associative",
    "o_operator_lie",
    "o_operator_poisson",
];

/// A named set of axioms with its included catalogs flattened in.
/// Axioms are sorted by name; names are unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub name: String,
    pub version: String,
    pub includes: Vec<String>,
    pub axioms: Vec<Axiom>,
}

impl Catalog {
    pub fn axiom(&self, name: &str) -> Option<&Axiom> {
        self.axioms.iter().find(|a| a.name == name)
    }
}

pub fn catalog_names() -> Vec<&'static str> {
    SOURCES.iter().map(|(n, _)| *n).collect()
}

fn all() -> &'static Result<BTreeMap<String, Catalog>, String> {
    static CACHE: OnceLock<Result<BTreeMap<String, Catalog>, String>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut out = BTreeMap::new();
        for (name, _) in SOURCES {
            let cat = load(name, &mut Vec::new()).map_err(|e| e.to_string())?;
            out.insert(name.to_string(), cat);
        }
        Ok(out)
    })
}

fn load(name: &str, stack: &mut Vec<String>) -> Result<Catalog> {
    if stack.iter().any(|s| s == name) {
        return Err(cat_err(name, "include cycle"));
    }
    let text = SOURCES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| cat_err(name, "unknown catalog"))?;
    stack.push(name.to_string());
    let cat = parse_catalog(name, text, &mut |inc| load(inc, stack));
    stack.pop();
    cat
}

/// A shipped catalog. Panics if the shipped data is malformed, which the
/// test suite rules out.
pub fn catalog(name: &str) -> &'static Catalog {
    try_catalog(name).unwrap_or_else(|e| panic!("{e}"))
}

pub fn try_catalog(name: &str) -> Result<&'static Catalog> {
    match all() {
        Ok(map) => map.get(name).ok_or_else(|| cat_err(name, "unknown catalog")),
        Err(msg) => Err(cat_err(name, msg)),
    }
}

fn cat_err(name: &str, msg: &str) -> Error {
    Error::Catalog { catalog: name.to_string(), message: msg.to_string() }
}

/// Parse catalog text; `resolve` supplies included catalogs.
pub fn parse_catalog(
    name: &str,
    text: &str,
    resolve: &mut dyn FnMut(&str) -> Result<Catalog>,
) -> Result<Catalog> {
    let err = |msg: String| cat_err(name, &msg);
    let root: Value = serde_json::from_str(text).map_err(|e| err(e.to_string()))?;
    let declared = root.get("catalog").and_then(Value::as_str).ok_or_else(|| err("missing catalog name".into()))?;
    if declared != name {
        return Err(err(format!("file declares catalog {declared:?}")));
    }
    let version = root.get("version").and_then(Value::as_str).ok_or_else(|| err("missing version".into()))?;
    let includes: Vec<String> = match root.get("includes") {
        None => Vec::new(),
        Some(v) => v
            .as_array()
            .ok_or_else(|| err("includes must be a list".into()))?
            .iter()
            .map(|i| i.as_str().map(String::from).ok_or_else(|| err("include names must be strings".into())))
            .collect::<Result<_>>()?,
    };
    let mut axioms = BTreeMap::new();
    for inc in &includes {
        for ax in resolve(inc)?.axioms {
            if axioms.insert(ax.name.clone(), ax).is_some() {
                return Err(err(format!("duplicate axiom via include {inc}")));
            }
        }
    }
    let entries = root.get("axioms").and_then(Value::as_object).ok_or_else(|| err("missing axioms".into()))?;
    for (ax_name, body) in entries {
        let ax = parse_axiom(ax_name, body).map_err(|m| err(format!("{ax_name}: {m}")))?;
        ax.value_sort().map_err(|e| err(format!("{ax_name}: {e}")))?;
        if axioms.insert(ax_name.clone(), ax).is_some() {
            return Err(err(format!("duplicate axiom {ax_name}")));
        }
    }
    Ok(Catalog { name: name.to_string(), version: version.to_string(), includes, axioms: axioms.into_values().collect() })
}

fn parse_axiom(name: &str, body: &Value) -> Result<Axiom, String> {
    let vars = body.get("variables").and_then(Value::as_array).ok_or("missing variables")?;
    let variables = vars
        .iter()
        .map(|v| {
            let name = v.get("name").and_then(Value::as_str).ok_or("variable without name")?;
            let sort = match v.get("sort").and_then(Value::as_str) {
                Some("A") => Sort::Primary,
                Some("B") => Sort::Secondary,
                _ => return Err(format!("variable {name} has no valid sort")),
            };
            Ok(Variable { name: name.to_string(), sort })
        })
        .collect::<Result<Vec<_>, String>>()?;
    let side = |key: &str| -> Result<Vec<Term>, String> {
        body.get(key)
            .and_then(Value::as_array)
            .ok_or(format!("missing {key}"))?
            .iter()
            .map(|t| {
                let coeff = t.get("coeff").and_then(Value::as_str).ok_or("term without coeff")?;
                let coeff: Scalar = coeff.parse().map_err(|e| format!("{e}"))?;
                let tree = t.get("tree").ok_or("term without tree")?;
                Ok(Term { coeff, node: parse_node(tree, &variables)? })
            })
            .collect()
    };
    Ok(Axiom {
        name: name.to_string(),
        note: body.get("note").and_then(Value::as_str).unwrap_or_default().to_string(),
        lhs: side("lhs")?,
        rhs: side("rhs")?,
        variables,
    })
}

fn parse_power(v: &Value) -> Result<MapPower, String> {
    let get = |k: &str| -> Result<i32, String> {
        v.get(k)
            .and_then(Value::as_i64)
            .and_then(|x| i32::try_from(x).ok())
            .ok_or(format!("missing integer {k}"))
    };
    Ok(MapPower::new(get("a1pow")?, get("a2pow")?))
}

fn parse_node(v: &Value, vars: &[Variable]) -> Result<Node, String> {
    if v.is_object() {
        let name = v.get("var").and_then(Value::as_str).ok_or("leaf without var")?;
        let index = vars.iter().position(|x| x.name == name).ok_or(format!("unbound variable {name}"))?;
        return Ok(Node::Var { index, power: parse_power(v)? });
    }
    let items = v.as_array().ok_or("tree node must be a list or a leaf")?;
    let head = items.first().and_then(Value::as_str).ok_or("node without operator")?;
    let child = |i: usize| -> Result<Box<Node>, String> {
        Ok(Box::new(parse_node(items.get(i).ok_or(format!("{head} is missing an argument"))?, vars)?))
    };
    let arity = |n: usize| -> Result<(), String> {
        if items.len() == n + 1 { Ok(()) } else { Err(format!("{head} takes {n} arguments")) }
    };
    match head {
        "maps" => {
            arity(2)?;
            Ok(Node::Maps { power: parse_power(&items[1])?, child: child(2)? })
        }
        "T" => {
            arity(1)?;
            Ok(Node::T(child(1)?))
        }
        _ => {
            arity(2)?;
            if let Some(slot) = Slot::parse(head) {
                Ok(Node::Product { slot, left: child(1)?, right: child(2)? })
            } else if let Some(slot) = ActionSlot::parse(head) {
                Ok(Node::Action { slot, actor: child(1)?, target: child(2)? })
            } else {
                Err(format!("unknown operator {head}"))
            }
        }
    }
}
