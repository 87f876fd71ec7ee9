//! Input documents: a ring descriptor plus named modules, morphisms, and
//! complexes, all validated on load.

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;
use sqext_core::abcat::{GradedMorphism, Presentation};
use sqext_core::ring::{Field, FreeModule, Ring};
use sqext_core::yoneda::ExtensionComplex;
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Deserialize)]
pub struct FieldSpec {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default)]
    pub p: Option<u32>,
}

#[derive(Debug, Deserialize)]
pub struct ModuleSpec {
    pub twists: Vec<i64>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
}

#[derive(Debug, Deserialize)]
pub struct MorphismSpec {
    pub source: String,
    pub target: String,
    /// rows × cols = target rank × source rank, entries in the polynomial
    /// grammar
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Deserialize)]
pub struct ComplexSpec {
    /// morphism names ordered head first: G_c → M, …, N → G₁
    pub maps: Vec<String>,
}

#[derive(Debug, Deserialize)]
pub struct InputDoc {
    pub field: FieldSpec,
    pub variables: Vec<String>,
    #[serde(default)]
    pub ring_relations: Vec<String>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, MorphismSpec>,
    #[serde(default)]
    pub complexes: BTreeMap<String, ComplexSpec>,
}

pub struct Loaded {
    pub ring: Ring,
    pub ring_relations: Vec<sqext_core::ring::GradedPoly>,
    pub modules: BTreeMap<String, Presentation>,
    pub morphisms: BTreeMap<String, GradedMorphism>,
    pub complexes: BTreeMap<String, ExtensionComplex>,
}

pub fn parse_field(kind: &str, p: Option<u32>) -> Result<Field> {
    match kind {
        "fp" => {
            let p = p.ok_or_else(|| anyhow!("field type \"fp\" needs a prime \"p\""))?;
            if p < 2 || p >= 1 << 31 {
                bail!("prime out of range: {p}");
            }
            Ok(Field::Fp(p))
        }
        "q" => Ok(Field::Q),
        other => bail!("unknown field type {other:?} (expected \"fp\" or \"q\")"),
    }
}

/// Parses a `--field` override of the form `fp:32003` or `q`.
pub fn parse_field_flag(s: &str) -> Result<Field> {
    if s == "q" {
        return Ok(Field::Q);
    }
    if let Some(p) = s.strip_prefix("fp:") {
        return parse_field("fp", Some(p.parse().context("bad prime in --field")?));
    }
    bail!("--field expects `q` or `fp:<prime>`")
}

pub fn load(path: &Path, field_override: Option<Field>) -> Result<Loaded> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read input file {}", path.display()))?;
    let doc: InputDoc = serde_json::from_str(&text).context("input file is not valid JSON")?;
    build(doc, field_override)
}

pub fn build(doc: InputDoc, field_override: Option<Field>) -> Result<Loaded> {
    let field = match field_override {
        Some(f) => f,
        None => parse_field(&doc.field.kind, doc.field.p)?,
    };
    if doc.variables.is_empty() {
        bail!("at least one variable is required");
    }
    let ring = Ring::new(field, doc.variables.clone());

    let mut ring_relations = Vec::new();
    for (i, text) in doc.ring_relations.iter().enumerate() {
        let p = ring
            .parse_poly(text)
            .with_context(|| format!("ring relation {i}"))?;
        if !p.is_homogeneous() {
            bail!("ring relation {i} ({text:?}) is not homogeneous");
        }
        ring_relations.push(p);
    }

    let mut modules = BTreeMap::new();
    for (name, spec) in &doc.modules {
        let pres = build_module(&ring, &ring_relations, name, spec)?;
        modules.insert(name.clone(), pres);
    }

    let mut morphisms = BTreeMap::new();
    for (name, spec) in &doc.morphisms {
        let source = modules
            .get(&spec.source)
            .ok_or_else(|| anyhow!("morphism {name:?}: unknown source module {:?}", spec.source))?;
        let target = modules
            .get(&spec.target)
            .ok_or_else(|| anyhow!("morphism {name:?}: unknown target module {:?}", spec.target))?;
        if spec.matrix.len() != target.rank() {
            bail!(
                "morphism {name:?}: matrix has {} rows, target rank is {}",
                spec.matrix.len(),
                target.rank()
            );
        }
        let mut cols = vec![target.target().zero_vec(); source.rank()];
        for (i, row) in spec.matrix.iter().enumerate() {
            if row.len() != source.rank() {
                bail!(
                    "morphism {name:?}: row {i} has {} entries, source rank is {}",
                    row.len(),
                    source.rank()
                );
            }
            for (j, entry) in row.iter().enumerate() {
                cols[j].comps[i] = ring
                    .parse_poly(entry)
                    .with_context(|| format!("morphism {name:?}, entry ({i},{j})"))?;
            }
        }
        let m = GradedMorphism::new(source.clone(), target.clone(), cols)
            .with_context(|| format!("morphism {name:?} is not a valid degree-0 map"))?;
        morphisms.insert(name.clone(), m);
    }

    let mut complexes = BTreeMap::new();
    for (name, spec) in &doc.complexes {
        let mut maps = Vec::new();
        for mname in &spec.maps {
            let m = morphisms
                .get(mname)
                .ok_or_else(|| anyhow!("complex {name:?}: unknown morphism {mname:?}"))?;
            maps.push(m.clone());
        }
        let e = ExtensionComplex::new(maps)
            .with_context(|| format!("complex {name:?} fails validation"))?;
        complexes.insert(name.clone(), e);
    }

    Ok(Loaded {
        ring,
        ring_relations,
        modules,
        morphisms,
        complexes,
    })
}

fn build_module(
    ring: &Ring,
    ring_relations: &[sqext_core::ring::GradedPoly],
    name: &str,
    spec: &ModuleSpec,
) -> Result<Presentation> {
    for (i, &t) in spec.twists.iter().enumerate() {
        if t < 0 {
            bail!("module {name:?}: twist {i} is negative (modules must be generated in degrees ≥ 0)");
        }
    }
    let free = FreeModule::new(ring.clone(), spec.twists.clone());
    let mut rows = Vec::new();
    for (j, row) in spec.relations.iter().enumerate() {
        if row.len() != spec.twists.len() {
            bail!(
                "module {name:?}: relation row {j} has {} entries, expected {}",
                row.len(),
                spec.twists.len()
            );
        }
        let mut v = free.zero_vec();
        for (i, entry) in row.iter().enumerate() {
            v.comps[i] = ring
                .parse_poly(entry)
                .with_context(|| format!("module {name:?}, relation row {j}, entry {i}"))?;
        }
        // a single degree D with deg(entry_i) + twists[i] = D for nonzero entries
        if free.degree_of(&v).is_err() {
            bail!("module {name:?}: relation row {j} is not homogeneous");
        }
        rows.push(v);
    }
    Presentation::new(free, rows, ring_relations.to_vec())
        .with_context(|| format!("module {name:?} fails validation"))
}

impl Loaded {
    pub fn module(&self, name: &str) -> Result<&Presentation> {
        self.modules
            .get(name)
            .ok_or_else(|| anyhow!("unknown module {name:?}"))
    }

    pub fn morphism(&self, name: &str) -> Result<&GradedMorphism> {
        self.morphisms
            .get(name)
            .ok_or_else(|| anyhow!("unknown morphism {name:?}"))
    }

    pub fn complex(&self, name: &str) -> Result<&ExtensionComplex> {
        self.complexes
            .get(name)
            .ok_or_else(|| anyhow!("unknown complex {name:?}"))
    }
}
