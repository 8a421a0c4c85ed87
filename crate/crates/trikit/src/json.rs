//! JSON renderings of library values for the command line.
//!
//! Every structured payload carries a top-level `"schema": "trikit/1"`
//! tag. Scalar outputs (path counts, join/meet results) are emitted as
//! bare JSON values. All maps serialize with lexicographically sorted
//! keys, so output is byte-stable across runs.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use trikit_core::{
    is_integral, recover_line, slope_bounds, tau_midpoint, BivariatePolynomial, EPolynomialVector,
    HasseGraph, Partition, Polynomial, SchurExpansion,
};

use crate::dot::embed;

/// Schema tag stamped on every structured JSON object the CLI emits.
pub const SCHEMA: &str = "trikit/1";

/// A big integer as a JSON value: a number while it fits in `i64`, the
/// decimal string beyond that.
pub fn bigint_value(n: &BigInt) -> Value {
    i64::try_from(n)
        .map(Value::from)
        .unwrap_or_else(|_| Value::String(n.to_string()))
}

/// The monomial label for $q^a t^b$: `"1"`, `"q"`, `"t^2"`, `"q^2 t"`.
pub fn qt_monomial(a: u32, b: u32) -> String {
    let mut s = String::new();
    match a {
        0 => {}
        1 => s.push('q'),
        _ => s.push_str(&format!("q^{a}")),
    }
    match b {
        0 => {}
        _ => {
            if !s.is_empty() {
                s.push(' ');
            }
            if b == 1 {
                s.push('t');
            } else {
                s.push_str(&format!("t^{b}"));
            }
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// Classification report: triangularity verdict, slope interval,
/// integrality witness, and a cutting line when one exists.
pub fn classify_value(p: &Partition) -> Value {
    let cert = slope_bounds(p);
    let mut obj = Map::new();
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("partition".into(), json!(p.to_string()));
    obj.insert("size".into(), json!(p.size()));
    obj.insert("triangular".into(), json!(cert.is_triangular));
    obj.insert("t_minus".into(), json!(cert.t_minus.to_string()));
    obj.insert("t_plus".into(), json!(cert.t_plus.to_string()));
    if cert.is_triangular {
        let t = tau_midpoint(p).expect("triangular");
        obj.insert("t_mid".into(), json!(t.to_string()));
        let witness = is_integral(p);
        obj.insert("integral".into(), json!(witness.is_some()));
        obj.insert(
            "integral_line".into(),
            witness.map_or(Value::Null, |(k, n)| json!({ "k": k, "n": n })),
        );
        let line = recover_line(p).expect("triangular");
        obj.insert(
            "line".into(),
            json!({ "r": line.r.to_string(), "s": line.s.to_string() }),
        );
    } else {
        obj.insert("t_mid".into(), Value::Null);
        obj.insert("integral".into(), json!(false));
        obj.insert("integral_line".into(), Value::Null);
        obj.insert("line".into(), Value::Null);
    }
    Value::Object(obj)
}

/// A list of partitions as a bare JSON array of comma strings.
pub fn list_value(items: &[Partition]) -> Value {
    Value::Array(items.iter().map(|p| json!(p.to_string())).collect())
}

/// A univariate polynomial with its display string and coefficient list
/// in increasing degree.
pub fn qpoly_value(p: &Partition, poly: &Polynomial) -> Value {
    json!({
        "schema": SCHEMA,
        "partition": p.to_string(),
        "degree": poly.degree(),
        "string": poly.to_string(),
        "coefficients": poly.coeffs().iter().map(bigint_value).collect::<Vec<_>>(),
    })
}

/// The term map `{"q^a t^b": coeff}` of a bivariate polynomial.
pub fn qt_terms(poly: &BivariatePolynomial) -> Value {
    let mut terms = Map::new();
    for (&(a, b), c) in poly.terms() {
        terms.insert(qt_monomial(a, b), bigint_value(c));
    }
    Value::Object(terms)
}

/// A bivariate polynomial with its display string and term map.
pub fn qtpoly_value(p: &Partition, poly: &BivariatePolynomial) -> Value {
    json!({
        "schema": SCHEMA,
        "partition": p.to_string(),
        "string": poly.to_string(),
        "symmetric": poly.is_symmetric(),
        "terms": qt_terms(poly),
    })
}

/// A delta-operator enumerator with its parameters and term map.
pub fn delta_value(n: u32, k: u32, poly: &BivariatePolynomial) -> Value {
    json!({
        "schema": SCHEMA,
        "n": n,
        "k": k,
        "string": poly.to_string(),
        "symmetric": poly.is_symmetric(),
        "terms": qt_terms(poly),
    })
}

/// A Schur expansion as a bare map from two-row shape to coefficient,
/// e.g. `{"2,2":1,"4,1":1,"6":1}`.
pub fn schur_value(exp: &SchurExpansion) -> Value {
    let mut terms = Map::new();
    for (&(a, b), c) in exp.terms() {
        let shape: Vec<u32> = [a, b].into_iter().filter(|&x| x > 0).collect();
        let key = Partition::new(shape).expect("a >= b").to_string();
        terms.insert(key, bigint_value(c));
    }
    Value::Object(terms)
}

/// A parking enumerator as a bare map from elementary index to
/// polynomial string, e.g. `{"1,1":"1","2":"q"}`.
pub fn evector_value(v: &EPolynomialVector) -> Value {
    let mut terms = Map::new();
    for (index, poly) in v.terms() {
        let key = Partition::new(index.clone())
            .expect("decreasing index")
            .to_string();
        terms.insert(key, json!(poly.to_string()));
    }
    Value::Object(terms)
}

/// The Hasse diagram with exact rational coordinates and the cosmetic
/// plane embedding used by the DOT export.
pub fn hasse_value(g: &HasseGraph, max_size: u32) -> Value {
    let nodes: Vec<Value> = g
        .nodes
        .iter()
        .enumerate()
        .map(|(id, node)| {
            let (px, py) = embed(&node.x, &node.y);
            json!({
                "id": id,
                "partition": node.partition.to_string(),
                "size": node.partition.size(),
                "x": node.x.to_string(),
                "y": node.y.to_string(),
                "px": px,
                "py": py,
            })
        })
        .collect();
    let edges: Vec<Value> = g.edges.iter().map(|&(l, u)| json!([l, u])).collect();
    json!({
        "schema": SCHEMA,
        "max_size": max_size,
        "nodes": nodes,
        "edges": edges,
    })
}
