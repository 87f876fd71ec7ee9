//! Command-line front end: parse module descriptions, dispatch computations,
//! emit machine-readable results.
//!
//! Exit codes: 0 success, 1 input error, 2 non-stabilized colimit (or a
//! saturation cap hit), 3 internal invariant failure.

mod input;
mod output;

use anyhow::{anyhow, Result};
use clap::{Parser, Subcommand};
use output::Format;
use serde_json::{json, Value};
use sqext_core::error::Error as CoreError;
use sqext_core::homres::{ext_group_basis, free_resolution, regularity, ExtCalculator};
use sqext_core::ring::{Field, Ring};
use sqext_core::serre::{
    ext_quotient, hom_quotient, hom_quotient_colimit, saturate, sheaf_cohomology_table,
    SerreContext,
};
use sqext_core::yoneda::{
    cocycle_class, exact_subcomplex, pullback_ext, pushout_ext, qext_preimage_ext1,
    yoneda_compose,
};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "sqext",
    about = "Exact Hom/Ext computations for coherent sheaves on projective space, \
             presented as graded modules modulo finite-length modules"
)]
struct Cli {
    /// Input document (JSON) defining the ring and named modules
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Canonical JSON output (default)
    #[arg(long, global = true)]
    json: bool,
    /// Human-readable table output
    #[arg(long, global = true)]
    table: bool,
    /// Stabilization window for colimit sweeps
    #[arg(long, global = true)]
    window: Option<usize>,
    /// Hard cap on truncation degrees (default 20, or SQEXT_MAX_DEGREE)
    #[arg(long = "max-degree", global = true)]
    max_degree: Option<i64>,
    /// Verify connecting-map isomorphy instead of trusting dimension
    /// stability
    #[arg(long, global = true)]
    strict: bool,
    /// Override the coefficient field: `fp:<prime>` or `q`
    #[arg(long, global = true)]
    field: Option<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Gröbner basis of a module's relation submodule
    Gb {
        #[arg(long)]
        module: String,
    },
    /// Free resolution with Betti data
    Res {
        #[arg(long)]
        module: String,
        #[arg(long)]
        length: Option<usize>,
        /// Raw Schreyer resolution (no minimalization)
        #[arg(long)]
        raw: bool,
    },
    /// Castelnuovo-Mumford regularity
    Regularity {
        #[arg(long)]
        module: String,
    },
    /// Hilbert function over a degree range
    Hilbert {
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 0)]
        lo: i64,
        #[arg(long, default_value_t = 10)]
        hi: i64,
    },
    /// Graded Hom: degree-0 dimension and basis
    Hom {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
    },
    /// Ambient Ext^c as a graded module: dimensions over a degree range
    Ext {
        #[arg(short)]
        c: usize,
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = -5)]
        lo: i64,
        #[arg(long, default_value_t = 5)]
        hi: i64,
    },
    /// Saturation monad: saturated module, unit, torsion, steps
    Saturate {
        #[arg(long)]
        module: String,
    },
    /// Hom in the quotient category (adjunction route by default)
    HomQuotient {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        /// Use the direct-limit route instead of the adjunction formula
        #[arg(long)]
        colimit: bool,
    },
    /// Ext in the quotient category via the stabilizing colimit
    ExtQuotient {
        #[arg(short)]
        c: usize,
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
    },
    /// H^c(P^n, O(d)) over a grid of twists
    SheafCohomology {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = -5, allow_hyphen_values = true)]
        d_lo: i64,
        #[arg(long, default_value_t = 5, allow_hyphen_values = true)]
        d_hi: i64,
        #[arg(long)]
        c_lo: Option<usize>,
        #[arg(long)]
        c_hi: Option<usize>,
    },
    /// Yoneda cocycle calculus on named complexes
    Yoneda {
        #[command(subcommand)]
        sub: YonedaCmd,
    },
}

#[derive(Subcommand)]
enum YonedaCmd {
    /// Splice two extensions through their common endpoint
    Compose {
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
    },
    /// Pullback action along a morphism into the head
    Pullback {
        #[arg(long)]
        morphism: String,
        #[arg(long)]
        complex: String,
    },
    /// Pushout action along a morphism out of the tail
    Pushout {
        #[arg(long)]
        complex: String,
        #[arg(long)]
        morphism: String,
    },
    /// Coordinates of an exact extension in the degree-0 Ext basis
    Class {
        #[arg(long)]
        complex: String,
    },
    /// Constructive Ext¹ preimage of a Sat-side short exact sequence
    PreimageExt1 {
        #[arg(long)]
        complex: String,
    },
    /// Exact subcomplex of a torsion-free complex with C-defects
    ExactSubcomplex {
        #[arg(long)]
        complex: String,
    },
}

fn main() {
    let code = match std::panic::catch_unwind(run) {
        Ok(Ok(code)) => code,
        Ok(Err(e)) => {
            eprintln!("error: {e:#}");
            classify(&e)
        }
        Err(_) => {
            eprintln!("error: internal invariant failure");
            3
        }
    };
    std::process::exit(code);
}

fn classify(e: &anyhow::Error) -> i32 {
    for cause in e.chain() {
        if let Some(core) = cause.downcast_ref::<CoreError>() {
            match core {
                CoreError::NotStabilized { .. } | CoreError::CapExceeded { .. } => return 2,
                _ => return 1,
            }
        }
    }
    1
}

fn run() -> Result<i32> {
    let cli = Cli::parse();
    let format = if cli.table {
        Format::Table
    } else {
        Format::Json
    };
    let window = cli.window.unwrap_or(3);
    let max_degree = match cli.max_degree {
        Some(d) => d,
        None => std::env::var("SQEXT_MAX_DEGREE")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(20),
    };
    if window == 0 {
        return Err(anyhow!("--window must be at least 1"));
    }
    let field_override = cli
        .field
        .as_deref()
        .map(input::parse_field_flag)
        .transpose()?;

    let ctx_for = |ring: &Ring| -> SerreContext {
        let mut ctx = SerreContext::standard(ring.clone());
        ctx.window = window;
        ctx.max_degree = max_degree;
        ctx.strict = cli.strict;
        ctx
    };

    let load = |input: &Option<PathBuf>| -> Result<input::Loaded> {
        let path = input
            .as_ref()
            .ok_or_else(|| anyhow!("this subcommand needs --input <file.json>"))?;
        input::load(path, field_override)
    };

    match &cli.cmd {
        Cmd::Gb { module } => {
            let doc = load(&cli.input)?;
            let m = doc.module(module)?;
            let basis: Vec<Value> = m
                .relations()
                .gb_vecs()
                .map(|v| {
                    Value::Array(
                        v.comps
                            .iter()
                            .map(|p| Value::String(doc.ring.poly_format(p)))
                            .collect(),
                    )
                })
                .collect();
            output::print(&json!({"module": module, "basis": basis}), format);
        }
        Cmd::Res {
            module,
            length,
            raw,
        } => {
            let doc = load(&cli.input)?;
            let m = doc.module(module)?;
            let default_len = if doc.ring_relations.is_empty() {
                doc.ring.nvars()
            } else {
                5
            };
            let length = length.unwrap_or(default_len);
            let res = free_resolution(m, length, !raw).map_err(wrap)?;
            let mut betti = serde_json::Map::new();
            for ((i, d), mult) in res.betti() {
                let entry = betti
                    .entry(i.to_string())
                    .or_insert_with(|| Value::Object(Default::default()));
                entry
                    .as_object_mut()
                    .unwrap()
                    .insert(d.to_string(), json!(mult));
            }
            output::print(
                &json!({
                    "module": module,
                    "length": res.length(),
                    "minimal": res.minimal,
                    "betti_numbers": res.betti_numbers(),
                    "betti": Value::Object(betti),
                }),
                format,
            );
        }
        Cmd::Regularity { module } => {
            let doc = load(&cli.input)?;
            let r = regularity(doc.module(module)?).map_err(wrap)?;
            output::print(&json!({"module": module, "regularity": r}), format);
        }
        Cmd::Hilbert { module, lo, hi } => {
            let doc = load(&cli.input)?;
            if lo > hi {
                return Err(anyhow!("--lo must not exceed --hi"));
            }
            let values = doc.module(module)?.hilbert_function(*lo, *hi);
            output::print(
                &json!({"module": module, "lo": lo, "hi": hi, "values": values}),
                format,
            );
        }
        Cmd::Hom { source, target } => {
            let doc = load(&cli.input)?;
            let basis =
                sqext_core::abcat::hom_group_basis(doc.module(source)?, doc.module(target)?)
                    .map_err(wrap)?;
            let matrices: Vec<Value> = basis
                .iter()
                .map(|f| output::morphism_doc(&doc.ring, f))
                .collect();
            output::print(&json!({"dim": basis.len(), "basis": matrices}), format);
        }
        Cmd::Ext {
            c,
            source,
            target,
            lo,
            hi,
        } => {
            let doc = load(&cli.input)?;
            let calc = ExtCalculator::new(*c, doc.module(source)?, doc.module(target)?)
                .map_err(wrap)?;
            let mut dims = serde_json::Map::new();
            for d in *lo..=*hi {
                dims.insert(d.to_string(), json!(calc.dim_at(d)));
            }
            let (dim0, _) =
                ext_group_basis(*c, doc.module(source)?, doc.module(target)?).map_err(wrap)?;
            output::print(
                &json!({"c": c, "dim0": dim0, "dims": Value::Object(dims)}),
                format,
            );
        }
        Cmd::Saturate { module } => {
            let doc = load(&cli.input)?;
            let ctx = ctx_for(&doc.ring);
            let sat = saturate(doc.module(module)?, &ctx).map_err(wrap)?;
            output::print(
                &json!({
                    "module": output::presentation_doc(&doc.ring, &sat.module),
                    "eta": output::morphism_doc(&doc.ring, &sat.eta),
                    "torsion": output::presentation_doc(&doc.ring, &sat.torsion.0),
                    "steps": sat.steps,
                }),
                format,
            );
        }
        Cmd::HomQuotient {
            source,
            target,
            colimit,
        } => {
            let doc = load(&cli.input)?;
            let ctx = ctx_for(&doc.ring);
            if *colimit {
                match hom_quotient_colimit(doc.module(source)?, doc.module(target)?, &ctx) {
                    Ok((dim, at)) => output::print(
                        &json!({
                            "dim": dim,
                            "route": "colimit",
                            "stabilized_at": at,
                            "policy": output::policy_doc(window, max_degree, cli.strict),
                        }),
                        format,
                    ),
                    Err(CoreError::NotStabilized { trace, .. }) => {
                        output::print(
                            &not_stabilized(&trace, window, max_degree, cli.strict),
                            format,
                        );
                        return Ok(2);
                    }
                    Err(e) => return Err(wrap(e)),
                }
            } else {
                let (dim, _) =
                    hom_quotient(doc.module(source)?, doc.module(target)?, &ctx).map_err(wrap)?;
                output::print(&json!({"dim": dim, "route": "adjunction"}), format);
            }
        }
        Cmd::ExtQuotient { c, source, target } => {
            let doc = load(&cli.input)?;
            let ctx = ctx_for(&doc.ring);
            match ext_quotient(*c, doc.module(source)?, doc.module(target)?, &ctx) {
                Ok(res) => output::print(
                    &json!({
                        "c": res.c,
                        "dim": res.dimension,
                        "stabilized_at": res.stabilized_at,
                        "strict_verified": res.strict_verified,
                        "torsion_stripped": res.torsion_stripped,
                        "trace": output::trace_doc(&res.trace),
                        "policy": output::policy_doc(window, max_degree, cli.strict),
                    }),
                    format,
                ),
                Err(CoreError::NotStabilized { trace, .. }) => {
                    output::print(
                        &not_stabilized(&trace, window, max_degree, cli.strict),
                        format,
                    );
                    return Ok(2);
                }
                Err(e) => return Err(wrap(e)),
            }
        }
        Cmd::SheafCohomology {
            n,
            d_lo,
            d_hi,
            c_lo,
            c_hi,
        } => {
            if *n == 0 {
                return Err(anyhow!("--n must be at least 1"));
            }
            let field = field_override.unwrap_or(Field::Fp(32003));
            let ring = Ring::new(field, (0..=*n).map(|i| format!("x{i}")).collect());
            let ctx = ctx_for(&ring);
            let c_lo = c_lo.unwrap_or(0);
            let c_hi = c_hi.unwrap_or(*n);
            match sheaf_cohomology_table(*n, *d_lo, *d_hi, c_lo, c_hi, &ctx) {
                Ok(table) => {
                    let rows: Vec<Value> = table
                        .iter()
                        .map(|r| Value::Array(r.iter().map(|&x| json!(x)).collect()))
                        .collect();
                    output::print(
                        &json!({
                            "n": n,
                            "d_lo": d_lo, "d_hi": d_hi,
                            "c_lo": c_lo, "c_hi": c_hi,
                            "table": rows,
                            "policy": output::policy_doc(window, max_degree, cli.strict),
                        }),
                        format,
                    );
                }
                Err(CoreError::NotStabilized { trace, .. }) => {
                    output::print(
                        &not_stabilized(&trace, window, max_degree, cli.strict),
                        format,
                    );
                    return Ok(2);
                }
                Err(e) => return Err(wrap(e)),
            }
        }
        Cmd::Yoneda { sub } => {
            let doc = load(&cli.input)?;
            let ctx = ctx_for(&doc.ring);
            match sub {
                YonedaCmd::Compose { first, second } => {
                    let e =
                        yoneda_compose(doc.complex(first)?, doc.complex(second)?).map_err(wrap)?;
                    output::print(&output::complex_doc(&doc.ring, &e), format);
                }
                YonedaCmd::Pullback { morphism, complex } => {
                    let e = pullback_ext(doc.morphism(morphism)?, doc.complex(complex)?)
                        .map_err(wrap)?;
                    output::print(&output::complex_doc(&doc.ring, &e), format);
                }
                YonedaCmd::Pushout { complex, morphism } => {
                    let e = pushout_ext(doc.complex(complex)?, doc.morphism(morphism)?)
                        .map_err(wrap)?;
                    output::print(&output::complex_doc(&doc.ring, &e), format);
                }
                YonedaCmd::Class { complex } => {
                    let class = cocycle_class(doc.complex(complex)?).map_err(wrap)?;
                    let field = doc.ring.field();
                    let coords: Vec<Value> = class
                        .coordinates
                        .iter()
                        .map(|c| Value::String(field.format(c)))
                        .collect();
                    output::print(
                        &json!({"c": class.c, "dim": coords.len(), "coordinates": coords}),
                        format,
                    );
                }
                YonedaCmd::PreimageExt1 { complex } => {
                    let (e, incl) = qext_preimage_ext1(doc.complex(complex)?).map_err(wrap)?;
                    output::print(
                        &json!({
                            "complex": output::complex_doc(&doc.ring, &e),
                            "head": output::presentation_doc(&doc.ring, incl.source()),
                            "inclusion": output::morphism_doc(&doc.ring, &incl),
                        }),
                        format,
                    );
                }
                YonedaCmd::ExactSubcomplex { complex } => {
                    let (e, emb) = exact_subcomplex(doc.complex(complex)?, &ctx).map_err(wrap)?;
                    let monos: Vec<Value> = emb
                        .monos
                        .iter()
                        .map(|m| output::morphism_doc(&doc.ring, m))
                        .collect();
                    output::print(
                        &json!({
                            "complex": output::complex_doc(&doc.ring, &e),
                            "embedding": monos,
                        }),
                        format,
                    );
                }
            }
        }
    }
    Ok(0)
}

fn not_stabilized(trace: &[(i64, usize)], window: usize, max_degree: i64, strict: bool) -> Value {
    json!({
        "status": "not_stabilized",
        "trace": output::trace_doc(trace),
        "policy": output::policy_doc(window, max_degree, strict),
    })
}

fn wrap(e: CoreError) -> anyhow::Error {
    anyhow::Error::new(e)
}
