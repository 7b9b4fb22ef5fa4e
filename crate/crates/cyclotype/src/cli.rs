//! Command-line front end: classification, bushes, the matrix oracle,
//! gradings, Kac diagrams, bundled tables and the full verification run.
//!
//! Output is JSON by default (TSV and DOT where documented); identical
//! flags and seeds give byte-identical output. Exit codes: 0 success,
//! 1 domain error (inadmissible input), 2 verification failure, 3 usage.

use std::collections::BTreeMap;
use std::io::Write;

use serde_json::{json, Value};

use crate::catalog::{self, Catalog};
use crate::classical::{self, classify, CyclicKind, Flavor, Partition};
use crate::crosscheck;
use crate::gradecalc::{characteristic_from_partition, sigma_data, z_grading, Characteristic};
use crate::kaccalc::KacLabeling;
use crate::oracle;
use crate::rootsys::{build_root_system, extended_diagram, twisted_diagram, SimpleType};

pub const USAGE: &str = "\
cyclotype <command> [flags]

commands:
  classify    --flavor {sl,so,sp} --partition N1,N2,...
  bush        --flavor {sl,so,sp} --partition N1,N2,...   [--format dot]
  oracle      --flavor {sl,so,sp} --partition N1,N2,...   [--trials T] [--seed S]
  grading     --flavor {sl,so,sp} --partition N1,N2,...
              or --algebra TYPE --labels S1,...,Sr
  kac         --diagram TYPE [--twist K] --labels S0,...,Sn | --print-numbering
  tables      [--which {0.1,1.1,5.1..5.6,6.1..6.7}]
  verify-all  [--trials T] [--seed S]

common flags: --format {json,tsv}; the data directory can be overridden
with the CYCLOTYPE_DATA_DIR environment variable.";

/// Exit codes per the interface contract.
pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Tsv,
    Dot,
}

struct Opts {
    values: BTreeMap<String, String>,
    flags: Vec<String>,
}

impl Opts {
    fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(|s| s.as_str())
    }

    fn has(&self, key: &str) -> bool {
        self.flags.iter().any(|f| f == key)
    }

    fn format(&self) -> Result<Format, String> {
        match self.get("format") {
            None | Some("json") => Ok(Format::Json),
            Some("tsv") => Ok(Format::Tsv),
            Some("dot") => Ok(Format::Dot),
            Some(other) => Err(format!("unknown format {other}")),
        }
    }
}

fn parse_opts(args: &[String]) -> Result<Opts, String> {
    let mut values = BTreeMap::new();
    let mut flags = Vec::new();
    let mut i = 0;
    while i < args.len() {
        let arg = &args[i];
        let Some(key) = arg.strip_prefix("--") else {
            return Err(format!("unexpected argument {arg}"));
        };
        if let Some((k, v)) = key.split_once('=') {
            values.insert(k.to_string(), v.to_string());
        } else if matches!(key, "print-numbering") {
            flags.push(key.to_string());
        } else {
            let v = args
                .get(i + 1)
                .ok_or_else(|| format!("flag --{key} needs a value"))?;
            values.insert(key.to_string(), v.clone());
            i += 1;
        }
        i += 1;
    }
    Ok(Opts { values, flags })
}

/// Run one command; everything is written through the two sinks.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run_inner(args, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "{USAGE}");
            EXIT_USAGE
        }
        Err(CliError::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

enum CliError {
    Usage(String),
    Domain(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn domain(msg: impl std::fmt::Display) -> CliError {
    CliError::Domain(msg.to_string())
}

fn run_inner(args: &[String], out: &mut dyn Write) -> Result<i32, CliError> {
    let Some(cmd) = args.first() else {
        return Err(usage("missing command"));
    };
    let opts = parse_opts(&args[1..]).map_err(usage)?;
    match cmd.as_str() {
        "classify" => cmd_classify(&opts, out),
        "bush" => cmd_bush(&opts, out),
        "oracle" => cmd_oracle(&opts, out),
        "grading" => cmd_grading(&opts, out),
        "kac" => cmd_kac(&opts, out),
        "tables" => cmd_tables(&opts, out),
        "verify-all" => cmd_verify_all(&opts, out),
        other => Err(usage(format!("unknown command {other}"))),
    }
}

fn parse_partition(opts: &Opts) -> Result<Partition, CliError> {
    let flavor = opts
        .get("flavor")
        .ok_or_else(|| usage("--flavor is required"))
        .and_then(|s| Flavor::parse(s).ok_or_else(|| usage(format!("unknown flavor {s}"))))?;
    let parts_str = opts
        .get("partition")
        .ok_or_else(|| usage("--partition is required"))?;
    let parts: Vec<usize> = parts_str
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("cannot parse partition {parts_str}")))?;
    if parts.windows(2).any(|w| w[0] < w[1]) {
        // transcription slips against the tables should fail loudly
        return Err(usage(format!(
            "partition {parts_str} is not non-increasing; not re-sorting"
        )));
    }
    Partition::new(flavor, parts).map_err(domain)
}

fn parse_labels(opts: &Opts) -> Result<Vec<i64>, CliError> {
    let labels = opts.get("labels").ok_or_else(|| usage("--labels is required"))?;
    labels
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("cannot parse labels {labels}")))
}

fn parse_algebra(opts: &Opts, key: &str) -> Result<SimpleType, CliError> {
    let s = opts.get(key).ok_or_else(|| usage(format!("--{key} is required")))?;
    SimpleType::parse(s).ok_or_else(|| usage(format!("unknown simple type {s}")))
}

fn emit(out: &mut dyn Write, format: Format, value: &Value) -> Result<i32, CliError> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(value).expect("serializable"))?,
        Format::Tsv => emit_tsv(out, "", value)?,
        Format::Dot => return Err(usage("DOT output is only available for bush")),
    }
    Ok(EXIT_OK)
}

fn emit_tsv(out: &mut dyn Write, prefix: &str, value: &Value) -> Result<(), CliError> {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                emit_tsv(out, &key, v)?;
            }
        }
        Value::Array(items) if items.iter().all(|v| !v.is_object() && !v.is_array()) => {
            let cells: Vec<String> = items.iter().map(plain).collect();
            writeln!(out, "{prefix}\t{}", cells.join(","))?;
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                emit_tsv(out, &format!("{prefix}[{i}]"), v)?;
            }
        }
        other => writeln!(out, "{prefix}\t{}", plain(other))?,
    }
    Ok(())
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn classification_json(p: &Partition) -> Result<Value, CliError> {
    let rec = classify(p).map_err(domain)?;
    let mut obj = serde_json::Map::new();
    obj.insert("flavor".into(), json!(p.flavor().name()));
    obj.insert("partition".into(), json!(p.parts()));
    obj.insert("depth".into(), json!(rec.depth));
    obj.insert("even".into(), json!(rec.even));
    obj.insert(
        "type".into(),
        json!(match rec.cyclic_type.kind {
            CyclicKind::Nilpotent => "nilpotent",
            CyclicKind::Semisimple => "semisimple",
            CyclicKind::Mixed => "mixed",
        }),
    );
    obj.insert("regular".into(), json!(rec.cyclic_type.regular));
    obj.insert("rank".into(), json!(rec.rank));
    if let Some(jt) = &rec.cyclic_jordan_type {
        obj.insert("cyclic_jordan_type".into(), json!(jt));
    }
    if !rec.gs.is_empty() {
        let gs: Vec<String> = rec.gs.iter().map(|s| s.to_string()).collect();
        obj.insert("reducing_subalgebra".into(), json!(gs));
    }
    if let (Some(es), Some(en)) = (&rec.es, &rec.en) {
        obj.insert("es".into(), json!(es));
        obj.insert("en".into(), json!(en));
    }
    if let Some(h) = &rec.bush_head {
        obj.insert("bush_head".into(), json!(h.parts()));
    }
    if rec.small_rank {
        obj.insert("small_rank".into(), json!(true));
    }
    Ok(Value::Object(obj))
}

fn cmd_classify(opts: &Opts, out: &mut dyn Write) -> Result<i32, CliError> {
    let p = parse_partition(opts)?;
    let v = classification_json(&p)?;
    emit(out, opts.format().map_err(usage)?, &v)
}

fn cmd_bush(opts: &Opts, out: &mut dyn Write) -> Result<i32, CliError> {
    let p = parse_partition(opts)?;
    let members = classical::bush(&p).map_err(domain)?;
    let format = opts.format().map_err(usage)?;
    if format == Format::Dot {
        writeln!(out, "digraph bush {{")?;
        let name = |q: &Partition| format!("\"{:?}\"", q.parts());
        writeln!(out, "  {} [shape=doublecircle];", name(&p))?;
        for m in &members {
            if m != &p {
                writeln!(out, "  {} -> {};", name(&p), name(m))?;
            }
        }
        writeln!(out, "}}")?;
        return Ok(EXIT_OK);
    }
    let mut rows = Vec::new();
    for m in &members {
        rows.push(classification_json(m)?);
    }
    let v = json!({
        "flavor": p.flavor().name(),
        "head": p.parts(),
        "members": rows,
    });
    emit(out, format, &v)
}

fn cmd_oracle(opts: &Opts, out: &mut dyn Write) -> Result<i32, CliError> {
    let p = parse_partition(opts)?;
    let trials: u64 = opts
        .get("trials")
        .map(|s| s.parse().map_err(|_| usage("bad --trials")))
        .transpose()?
        .unwrap_or(3);
    let seed: u64 = opts
        .get("seed")
        .map(|s| s.parse().map_err(|_| usage("bad --seed")))
        .transpose()?
        .unwrap_or(0);
    let verdict = oracle::oracle_type(&p, trials, seed).map_err(domain)?;
    let classified = classify(&p).map_err(domain)?;
    let mut obj = serde_json::Map::new();
    obj.insert("flavor".into(), json!(p.flavor().name()));
    obj.insert("partition".into(), json!(p.parts()));
    obj.insert("trials".into(), json!(trials));
    obj.insert("seed".into(), json!(seed));
    obj.insert(
        "type".into(),
        json!(match verdict.kind {
            CyclicKind::Nilpotent => "nilpotent",
            CyclicKind::Semisimple => "semisimple",
            CyclicKind::Mixed => "mixed",
        }),
    );
    obj.insert("regular".into(), json!(verdict.regular));
    obj.insert(
        "matches_classification".into(),
        json!(verdict == classified.cyclic_type),
    );
    if verdict.kind == CyclicKind::Nilpotent {
        let jt = oracle::cyclic_jordan_type(&p, seed).map_err(domain)?;
        obj.insert("cyclic_jordan_type".into(), json!(jt));
    }
    emit(out, opts.format().map_err(usage)?, &Value::Object(obj))
}

fn cmd_grading(opts: &Opts, out: &mut dyn Write) -> Result<i32, CliError> {
    let (characteristic, alternate, source) = if opts.get("partition").is_some() {
        let p = parse_partition(opts)?;
        let pc = characteristic_from_partition(&p).map_err(domain)?;
        (
            pc.characteristic,
            pc.very_even_alternate,
            json!({"flavor": p.flavor().name(), "partition": p.parts()}),
        )
    } else {
        let t = parse_algebra(opts, "algebra")?;
        let labels = parse_labels(opts)?;
        (Characteristic::new(t, labels).map_err(domain)?, None, Value::Null)
    };
    let t = characteristic.simple_type;
    let rs = build_root_system(t).map_err(domain)?;
    let grading = z_grading(&rs, &characteristic).map_err(domain)?;
    let sigma = sigma_data(&rs, &characteristic).map_err(domain)?;
    let dims: BTreeMap<String, usize> =
        grading.dims.iter().map(|(j, d)| (j.to_string(), *d)).collect();
    let mut obj = serde_json::Map::new();
    if !source.is_null() {
        obj.insert("source".into(), source);
    }
    obj.insert("algebra".into(), json!(t.to_string().replace('_', "")));
    obj.insert("labels".into(), json!(characteristic.labels));
    if let Some(alt) = alternate {
        obj.insert("very_even_alternate".into(), json!(alt.labels));
    }
    obj.insert("depth".into(), json!(grading.depth));
    obj.insert("dims".into(), json!(dims));
    obj.insert(
        "sigma".into(),
        json!({
            "m": sigma.m,
            "order": sigma.order,
            "mod_dims": sigma.mod_dims,
            "fixed": sigma.fixed_set.to_string(),
            "dim_fixed": sigma.fixed_set.dim(),
        }),
    );
    if characteristic.is_even() {
        let ok = crate::gradecalc::lemma51_check(&rs, &characteristic).map_err(domain)?;
        obj.insert("root_count_identity".into(), json!(ok));
    }
    emit(out, opts.format().map_err(usage)?, &Value::Object(obj))
}

fn cmd_kac(opts: &Opts, out: &mut dyn Write) -> Result<i32, CliError> {
    if opts.has("print-numbering") {
        writeln!(out, "{}", include_str!("../../../docs/numbering.md").trim_end())?;
        return Ok(EXIT_OK);
    }
    let base = parse_algebra(opts, "diagram")?;
    let twist: usize = opts
        .get("twist")
        .map(|s| s.parse().map_err(|_| usage("bad --twist")))
        .transpose()?
        .unwrap_or(1);
    let rs = build_root_system(base).map_err(domain)?;
    let diagram = if twist == 1 {
        extended_diagram(&rs)
    } else {
        twisted_diagram(base, twist).map_err(domain)?
    };
    let labels = parse_labels(opts)?;
    let lab = KacLabeling::new(diagram, labels).map_err(domain)?;
    let fixed = lab.fixed_point_set().map_err(domain)?;
    let mut obj = serde_json::Map::new();
    obj.insert(
        "diagram".into(),
        json!(format!("{}^({twist})", base.to_string().replace('_', ""))),
    );
    obj.insert("labels".into(), json!(lab.labels));
    obj.insert("order".into(), json!(lab.order()));
    obj.insert("fixed".into(), json!(fixed.to_string()));
    obj.insert("dim_fixed".into(), json!(fixed.dim()));
    match lab.dim_hw(&rs) {
        Ok(d) => {
            obj.insert("dim_hw".into(), json!(d));
        }
        Err(e) => {
            obj.insert("dim_hw".into(), Value::Null);
            obj.insert("dim_hw_error".into(), json!(e.to_string()));
        }
    }
    emit(out, opts.format().map_err(usage)?, &Value::Object(obj))
}

fn load_catalog() -> Result<Catalog, CliError> {
    Catalog::load().map_err(domain)
}

fn cmd_tables(opts: &Opts, out: &mut dyn Write) -> Result<i32, CliError> {
    let cat = load_catalog()?;
    let which = opts.get("which").unwrap_or("list");
    let v = match which {
        "list" => json!({
            "tables": ["0.1", "1.1", "5.1", "5.2", "5.3", "5.4", "5.5", "5.6",
                        "6.1", "6.2", "6.3", "6.4", "6.5", "6.6", "6.7"],
        }),
        "0.1" => {
            let mut rows = Vec::new();
            for t in catalog::EXCEPTIONAL {
                let (total, nilp, ss, reg) = cat.counts(t).expect("bundled");
                rows.push(json!({
                    "algebra": t.to_string().replace('_', ""),
                    "nonzero": total,
                    "nilpotent_type": nilp,
                    "semisimple_type": ss,
                    "regular_semisimple_type": reg,
                }));
            }
            json!({"table": "0.1", "rows": rows})
        }
        "1.1" => json!({"table": "1.1", "rows": cat.table11.rows}),
        "5.1" | "5.2" | "5.3" | "5.4" => {
            let types: &[SimpleType] = match which {
                "5.1" => &[SimpleType::E6],
                "5.2" => &[SimpleType::E7],
                "5.3" => &[SimpleType::E8],
                _ => &[SimpleType::F4, SimpleType::G2],
            };
            let mut rows = Vec::new();
            for t in types {
                for o in cat.algebra(*t).into_iter().flat_map(|a| &a.orbits) {
                    if o.cyclic_kind() != CyclicKind::Nilpotent {
                        let mut v = serde_json::to_value(o).expect("record");
                        let obj = v.as_object_mut().unwrap();
                        obj.insert("algebra".into(), json!(t.to_string().replace('_', "")));
                        if let Some(dz) = o.derived_cyclic_centralizer_dim(*t) {
                            obj.insert("dim_z_cyclic".into(), json!(dz));
                        }
                        rows.push(v);
                    }
                }
            }
            json!({"table": which, "rows": rows})
        }
        "5.5" | "5.6" => {
            let keep = |alg: &str| if which == "5.6" { alg == "E8" } else { alg != "E8" };
            let rows: Vec<&catalog::MixedRecord> =
                cat.mixed.rows.iter().filter(|r| keep(&r.algebra)).collect();
            json!({"table": which, "rows": rows})
        }
        t6 if t6.starts_with("6.") => {
            let idx: usize = t6[2..].parse().map_err(|_| usage(format!("bad table {t6}")))?;
            let table = cat
                .tables6
                .diagrams
                .get(idx.wrapping_sub(1))
                .ok_or_else(|| usage(format!("no diagram table {t6}")))?;
            let single = Catalog {
                orbits: cat.orbits.clone(),
                tables6: catalog::Tables6File {
                    schema_version: cat.tables6.schema_version,
                    diagrams: vec![table.clone()],
                },
                table11: cat.table11.clone(),
                mixed: cat.mixed.clone(),
            };
            let failures = catalog::verify_table6(&single).map_err(domain)?;
            json!({
                "table": t6,
                "diagram": table,
                "verified": failures.is_empty(),
                "failures": failures,
            })
        }
        other => return Err(usage(format!("unknown table {other}"))),
    };
    emit(out, opts.format().map_err(usage)?, &v)
}

fn cmd_verify_all(opts: &Opts, out: &mut dyn Write) -> Result<i32, CliError> {
    let trials: u64 = opts
        .get("trials")
        .map(|s| s.parse().map_err(|_| usage("bad --trials")))
        .transpose()?
        .unwrap_or(3);
    let seed: u64 = opts
        .get("seed")
        .map(|s| s.parse().map_err(|_| usage("bad --seed")))
        .transpose()?
        .unwrap_or(0);
    let cat = load_catalog()?;
    let results = crosscheck::run_all(&cat, trials, seed);
    let all_passed = results.iter().all(|r| r.passed);
    let rows: Vec<Value> = results
        .iter()
        .map(|r| json!({"criterion": r.name, "passed": r.passed, "detail": r.detail}))
        .collect();
    let v = json!({"criteria": rows, "all_passed": all_passed});
    emit(out, opts.format().map_err(usage)?, &v)?;
    Ok(if all_passed { EXIT_OK } else { EXIT_VERIFY })
}
