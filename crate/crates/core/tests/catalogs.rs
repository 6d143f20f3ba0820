//! Integrity of the shipped identity catalogs.

use std::path::Path;
use std::process::Command;

use bihom::error::Error;
use bihom::identity::{catalog_names, parse_catalog, try_catalog};

#[test]
fn every_catalog_loads_with_unique_sorted_axioms() {
    let names = catalog_names();
    assert_eq!(names.len(), 21);
    for name in names {
        let cat = try_catalog(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(cat.name, name);
        assert_eq!(cat.version, "1");
        let keys: Vec<&str> = cat.axioms.iter().map(|a| a.name.as_str()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted, "{name}");
        for inc in &cat.includes {
            let sub = try_catalog(inc).unwrap();
            for ax in &sub.axioms {
                assert_eq!(cat.axiom(&ax.name), Some(ax), "{name} includes {inc}");
            }
        }
    }
}

#[test]
fn every_axiom_is_twist_balanced() {
    for name in catalog_names() {
        for ax in &try_catalog(name).unwrap().axioms {
            assert!(ax.is_twist_balanced(), "{name}: {}", ax.name);
            assert!(!ax.lhs.is_empty() || !ax.rhs.is_empty(), "{name}: {}", ax.name);
        }
    }
}

#[test]
fn class_catalogs_refine_as_expected() {
    let has = |outer: &str, inner: &str| {
        let o = try_catalog(outer).unwrap();
        try_catalog(inner).unwrap().axioms.iter().all(|a| o.axiom(&a.name).is_some())
    };
    assert!(has("nc_poisson", "associative"));
    assert!(has("nc_poisson", "lie"));
    assert!(has("nc_pre_poisson", "dendriform"));
    assert!(has("nc_pre_poisson", "pre_lie"));
    assert!(!has("associative", "lie"));
}

#[test]
fn unbalanced_or_malformed_text_is_rejected() {
    let mut none = |inc: &str| -> bihom::Result<_> { Err(Error::Catalog { catalog: inc.into(), message: "none".into() }) };
    let wrong_name = r#"{"catalog":"other","version":"1","axioms":{}}"#;
    assert!(parse_catalog("mine", wrong_name, &mut none).is_err());
    let missing_include = r#"{"catalog":"mine","version":"1","includes":["gone"],"axioms":{}}"#;
    assert!(parse_catalog("mine", missing_include, &mut none).is_err());
    // x . y = a1 x . y is not balanced in x.
    let unbalanced = r#"{"catalog":"mine","version":"1","axioms":{"t":{
        "variables":[{"name":"x","sort":"A"},{"name":"y","sort":"A"}],
        "lhs":[{"coeff":"1","tree":["mul",{"a1pow":0,"a2pow":0,"var":"x"},{"a1pow":0,"a2pow":0,"var":"y"}]}],
        "rhs":[{"coeff":"1","tree":["mul",{"a1pow":1,"a2pow":0,"var":"x"},{"a1pow":0,"a2pow":0,"var":"y"}]}],
        "note":""}}}"#;
    let cat = parse_catalog("mine", unbalanced, &mut none).unwrap();
    assert!(!cat.axioms[0].is_twist_balanced());
}

#[test]
fn shipped_files_match_the_generator() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let script = root.join("tools/gen_catalogs.py");
    match Command::new("python3").arg(&script).arg("--check").current_dir(&root).output() {
        Ok(out) => assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr)),
        Err(e) => eprintln!("python3 unavailable, generator parity not checked: {e}"),
    }
}
