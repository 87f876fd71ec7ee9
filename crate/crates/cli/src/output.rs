//! Result emission: canonical JSON (sorted keys, integers only) or
//! human-readable tables.

use serde_json::{json, Value};
use sqext_core::abcat::{GradedMorphism, Presentation};
use sqext_core::ring::Ring;
use sqext_core::yoneda::ExtensionComplex;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

/// serde_json's default map is ordered, so serialization is canonical once
/// every payload goes through `Value`.
pub fn print(result: &Value, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(result).unwrap()),
        Format::Table => print_table(result, 0),
    }
}

fn print_table(v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) => {
                        println!("{pad}{k}:");
                        print_table(val, indent + 1);
                    }
                    Value::Array(items) if items.iter().all(|x| x.is_array()) => {
                        println!("{pad}{k}:");
                        print_grid(items, indent + 1);
                    }
                    _ => println!("{pad}{k}: {}", plain(val)),
                }
            }
        }
        Value::Array(items) if items.iter().all(|x| x.is_array()) => print_grid(items, indent),
        other => println!("{pad}{}", plain(other)),
    }
}

fn print_grid(rows: &[Value], indent: usize) {
    let pad = "  ".repeat(indent);
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .map(|xs| xs.iter().map(plain).collect())
                .unwrap_or_default()
        })
        .collect();
    let width = cells
        .iter()
        .flatten()
        .map(|s| s.len())
        .max()
        .unwrap_or(1);
    for row in cells {
        let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        println!("{pad}{}", line.join(" "));
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn presentation_doc(ring: &Ring, p: &Presentation) -> Value {
    let relations: Vec<Value> = p
        .relations()
        .gens
        .iter()
        .map(|v| {
            Value::Array(
                v.comps
                    .iter()
                    .map(|poly| Value::String(ring.poly_format(poly)))
                    .collect(),
            )
        })
        .collect();
    json!({
        "twists": p.twists(),
        "relations": relations,
    })
}

pub fn morphism_doc(ring: &Ring, f: &GradedMorphism) -> Value {
    let rows: Vec<Value> = (0..f.target().rank())
        .map(|i| {
            Value::Array(
                (0..f.source().rank())
                    .map(|j| Value::String(ring.poly_format(&f.cols()[j].comps[i])))
                    .collect(),
            )
        })
        .collect();
    json!({ "matrix": rows })
}

pub fn complex_doc(ring: &Ring, e: &ExtensionComplex) -> Value {
    let mut objects = Vec::new();
    objects.push(presentation_doc(ring, e.head()));
    for mid in e.middles() {
        objects.push(presentation_doc(ring, mid));
    }
    objects.push(presentation_doc(ring, e.tail()));
    let maps: Vec<Value> = e.maps().iter().map(|f| morphism_doc(ring, f)).collect();
    let cert = e.certificate();
    json!({
        "c": e.c(),
        "objects": objects,
        "maps": maps,
        "certificate": {
            "head_epi": cert.head_epi,
            "tail_mono": cert.tail_mono,
            "middle_exact": cert.middle_exact,
        },
    })
}

pub fn policy_doc(window: usize, max_degree: i64, strict: bool) -> Value {
    json!({
        "window": window,
        "max_degree": max_degree,
        "strict": strict,
    })
}

pub fn trace_doc(trace: &[(i64, usize)]) -> Value {
    Value::Array(
        trace
            .iter()
            .map(|&(d, dim)| json!([d, dim]))
            .collect(),
    )
}
