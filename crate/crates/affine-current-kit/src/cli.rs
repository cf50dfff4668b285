//! Command-line front end. One subcommand per library layer, each with a
//! table mode and a canonical-JSON mode (`--json`).
//!
//! Exit status: 0 on success, 2 when the request fails validation (unknown
//! type/rank/level combination, out-of-range labels, failed extension
//! hypotheses), 1 on an internal error. Output is byte-deterministic; the
//! only environment variable consulted anywhere is NO_COLOR (via clap's
//! help rendering — computational output is never colorized).

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::extension::{
    build_extension, build_extension_with_gram, check_hypotheses, generator_spec, parity,
};
use crate::fusion::{simple_current_group, FusionClass};
use crate::jsonio::to_bytes;
use crate::modrep::{
    classify, label_json, sl2_base_table, verlinde_quotient, ExtModuleLabel, ModuleLabel,
};
use crate::qchar::ext_module_char;
use crate::ratio::{parse_q, q_str, qz, Q};
use crate::rootdata::{build_root_system, DominantWeight, Family, LieType, RootSystem};
use crate::{Error, Result};

pub const SCHEMA: &str = "affine-current-kit/1";

#[derive(Parser)]
#[command(
    name = "affine-current-kit",
    version,
    about = "Exact data for simple-current extensions of affine vertex operator algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SystemArgs {
    /// Simple type: one of A, B, C, D, E, F, G
    #[arg(long = "type", value_name = "LETTER")]
    family: String,
    /// Rank of the simple type
    #[arg(long)]
    rank: usize,
    /// Emit one canonical JSON document instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LevelArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Level k >= 1
    #[arg(long)]
    level: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Print root-system data: Cartan matrix, marks, comarks, norms, center
    Describe(SystemArgs),
    /// Print the group of simple currents and its class weights
    Currents(LevelArgs),
    /// Print the level-k sl(2) fusion table, or the extended one with --ext
    Fusion {
        #[command(flatten)]
        level: LevelArgs,
        /// Fuse classes of the extended algebra instead of the base algebra
        #[arg(long)]
        ext: bool,
    },
    /// Print the extension data A_k(g): Gram matrices, parity, generators
    Extension(LevelArgs),
    /// List the untwisted irreducible module classes of A_k(g)
    Classify(LevelArgs),
    /// Print one truncated graded character of an A_k(sl(2)) module
    Char {
        #[command(flatten)]
        level: LevelArgs,
        /// Module label as two comma-separated integers i,j
        #[arg(long, value_name = "I,J")]
        module: String,
        /// Truncation order: coefficients are complete through q^ORDER
        #[arg(long, value_name = "ORDER")]
        order: i64,
    },
    /// Check the hypotheses under which V[L] is a (super)algebra
    Check {
        #[command(flatten)]
        level: LevelArgs,
        /// Override the Heisenberg Gram matrix: row-major rationals "p/q,..."
        #[arg(long = "heis-gram", value_name = "ENTRIES")]
        heis_gram: Option<String>,
    },
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cmd: &Command) -> Result<()> {
    let mut out = Vec::new();
    let result = match cmd {
        Command::Describe(args) => describe(args, &mut out),
        Command::Currents(args) => currents(args, &mut out),
        Command::Fusion { level, ext } => fusion(level, *ext, &mut out),
        Command::Extension(args) => extension(args, &mut out),
        Command::Classify(args) => classify_cmd(args, &mut out),
        Command::Char {
            level,
            module,
            order,
        } => char_cmd(level, module, *order, &mut out),
        Command::Check { level, heis_gram } => check(level, heis_gram.as_deref(), &mut out),
    };
    // A failing `check` still reports what it found before exiting nonzero.
    std::io::stdout()
        .write_all(&out)
        .expect("writing to stdout");
    result
}

fn root_system(args: &SystemArgs) -> Result<RootSystem> {
    let letter = args
        .family
        .trim()
        .to_ascii_uppercase()
        .chars()
        .next()
        .unwrap_or(' ');
    let family = Family::from_letter(letter).ok_or(Error::InvalidRank {
        family: letter,
        rank: args.rank,
    })?;
    Ok(build_root_system(LieType::new(family, args.rank)?))
}

fn checked_level(args: &LevelArgs) -> Result<i64> {
    if args.level < 1 {
        return Err(Error::Invalid(format!(
            "level must be positive, got {}",
            args.level
        )));
    }
    Ok(args.level)
}

fn emit(json_mode: bool, doc: Value, table: String, out: &mut Vec<u8>) {
    if json_mode {
        out.extend_from_slice(&to_bytes(&doc));
    } else {
        out.extend_from_slice(table.as_bytes());
    }
}

/// "0", "lambda_2", or "3*lambda_1+lambda_4": a dominant weight by labels.
fn weight_name(labels: &[i64]) -> String {
    let parts: Vec<String> = labels
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            if c == 1 {
                format!("lambda_{}", i + 1)
            } else {
                format!("{c}*lambda_{}", i + 1)
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

fn current_name(k: i64, labels: &[i64]) -> String {
    format!("[L({k},{})]", weight_name(labels))
}

fn group_name(invariants: &[u64]) -> String {
    if invariants.is_empty() {
        "trivial".into()
    } else {
        invariants
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

fn module_name(label: &ExtModuleLabel) -> String {
    let gammas: Vec<String> = label.0.gamma.iter().map(q_str).collect();
    format!(
        "W({}; {})",
        weight_name(label.0.lambda.labels()),
        gammas.join(",")
    )
}

fn int_row(row: &[i64]) -> String {
    row.iter()
        .map(|v| format!("{v:>3}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn describe(args: &SystemArgs, out: &mut Vec<u8>) -> Result<()> {
    let rs = root_system(args)?;
    let center = rs.center_group();
    let mut doc = rs.to_json();
    let obj = doc.as_object_mut().unwrap();
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("comarks".into(), json!(rs.comarks()));
    obj.insert("cominimal_nodes".into(), json!(rs.cominimal_indices()));
    obj.insert(
        "center".into(),
        json!({
            "order": center.order(),
            "invariants": center.invariants,
            "generator_nodes": center.generators,
        }),
    );

    let mut t = String::new();
    t += &format!(
        "type {}{} (rank {})\n",
        rs.lie_type.family().letter(),
        rs.rank(),
        rs.rank()
    );
    t += "cartan matrix:\n";
    for row in &rs.cartan {
        t += &format!("  {}\n", int_row(row));
    }
    t += &format!("marks:   {}\n", int_row(&rs.marks));
    t += &format!("comarks: {}\n", int_row(&rs.comarks()));
    t += &format!("dual Coxeter number: {}\n", rs.dual_coxeter);
    t += &format!(
        "root norms: {}\n",
        rs.root_norms.iter().map(q_str).collect::<Vec<_>>().join(" ")
    );
    t += &format!(
        "cominimal nodes: {}\n",
        rs.cominimal_indices()
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    t += &format!("center: {}", group_name(&center.invariants));
    if !center.generators.is_empty() {
        t += &format!(
            ", generator node{} {}",
            if center.generators.len() > 1 { "s" } else { "" },
            center
                .generators
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    t += "\n";
    emit(args.json, doc, t, out);
    Ok(())
}

fn currents(args: &LevelArgs, out: &mut Vec<u8>) -> Result<()> {
    let rs = root_system(&args.system)?;
    let k = checked_level(args)?;
    let group = simple_current_group(&rs, k);
    let center = group.center().clone();

    let mut gens = Vec::new();
    let mut gen_lines = Vec::new();
    for &node in &center.generators {
        let s = group.from_node(node)?;
        let w = group.class_weight(&s);
        gens.push(json!({
            "node": node,
            "order": group.order_of(&s),
            "class_labels": w.labels(),
        }));
        gen_lines.push(format!(
            "  node {node}: {} (order {})\n",
            current_name(k, w.labels()),
            group.order_of(&s)
        ));
    }
    let mut elems = Vec::new();
    let mut elem_lines = Vec::new();
    for s in group.elements() {
        let w = group.class_weight(&s);
        elems.push(json!({
            "coords": s.coords(),
            "class_labels": w.labels(),
        }));
        elem_lines.push(format!(
            "  ({}) -> {}\n",
            s.coords()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(","),
            current_name(k, w.labels())
        ));
    }
    let doc = json!({
        "schema": SCHEMA,
        "family": rs.lie_type.family().letter().to_string(),
        "rank": rs.rank(),
        "level": k,
        "order": group.order(),
        "invariants": center.invariants,
        "generators": gens,
        "elements": elems,
    });

    let mut t = format!(
        "simple-current group for {}{} at level {k}: {}\n",
        rs.lie_type.family().letter(),
        rs.rank(),
        group_name(&center.invariants)
    );
    if !gen_lines.is_empty() {
        t += "generators:\n";
        for l in &gen_lines {
            t += l;
        }
    }
    t += "elements:\n";
    for l in &elem_lines {
        t += l;
    }
    emit(args.system.json, doc, t, out);
    Ok(())
}

fn fusion(args: &LevelArgs, ext_mode: bool, out: &mut Vec<u8>) -> Result<()> {
    let rs = root_system(&args.system)?;
    let k = checked_level(args)?;
    if rs.lie_type.family() != Family::A || rs.rank() != 1 {
        return Err(Error::Sl2Only);
    }
    let base = sl2_base_table(k)?;
    if ext_mode {
        let ext = build_extension(&rs, k)?;
        let table = verlinde_quotient(&ext, &base)?;
        let mut doc = table.to_json(&ext)?;
        doc.as_object_mut()
            .unwrap()
            .insert("schema".into(), json!(SCHEMA));

        let mut t = format!(
            "extended fusion table for A1 at level {k} ({} classes):\n",
            table.classes.len()
        );
        for (a, b, mults) in &table.entries {
            if a > b {
                continue;
            }
            let product: Vec<String> = mults
                .iter()
                .enumerate()
                .filter(|(_, &m)| m > 0)
                .map(|(c, &m)| {
                    let name = module_name(&table.classes[c]);
                    if m == 1 {
                        name
                    } else {
                        format!("{m}*{name}")
                    }
                })
                .collect();
            t += &format!(
                "  {} x {} = {}\n",
                module_name(&table.classes[*a]),
                module_name(&table.classes[*b]),
                product.join(" + ")
            );
        }
        emit(args.system.json, doc, t, out);
        return Ok(());
    }

    let classes: Vec<DominantWeight> = (0..=k)
        .map(|i| DominantWeight::new(vec![i]).unwrap())
        .collect();
    let mut rows = Vec::new();
    let mut t = format!("fusion table for A1 at level {k}:\n");
    for a in &classes {
        for b in &classes {
            let row = base.row(a, b).ok_or_else(|| Error::MissingFusionEntry {
                entry: format!("({:?}, {:?})", a.labels(), b.labels()),
            })?;
            let mults: Vec<u64> = classes
                .iter()
                .map(|c| row.mult_of(&FusionClass(c.clone())))
                .collect();
            rows.push(json!([a.labels(), b.labels(), mults]));
            if a.labels() <= b.labels() {
                let product: Vec<String> = classes
                    .iter()
                    .zip(&mults)
                    .filter(|(_, &m)| m > 0)
                    .map(|(c, &m)| {
                        let name = format!("[{}]", c.labels()[0]);
                        if m == 1 {
                            name
                        } else {
                            format!("{m}*{name}")
                        }
                    })
                    .collect();
                t += &format!(
                    "  [{}] x [{}] = {}\n",
                    a.labels()[0],
                    b.labels()[0],
                    product.join(" + ")
                );
            }
        }
    }
    let doc = json!({
        "schema": SCHEMA,
        "level": k,
        "classes": classes.iter().map(|c| json!(c.labels())).collect::<Vec<_>>(),
        "table": rows,
    });
    emit(args.system.json, doc, t, out);
    Ok(())
}

fn extension(args: &LevelArgs, out: &mut Vec<u8>) -> Result<()> {
    let rs = root_system(&args.system)?;
    let k = checked_level(args)?;
    let ext = build_extension(&rs, k)?;
    let par = parity(&ext)?;
    let spec = generator_spec(&ext);
    let spec_json = match &spec {
        Ok(s) => s.to_json(),
        Err(_) => Value::Null,
    };
    let mut doc = ext.to_json();
    let obj = doc.as_object_mut().unwrap();
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("parity".into(), par.to_json());
    obj.insert("generator_spec".into(), spec_json);

    let mut t = format!(
        "extension data for {}{} at level {k}\n",
        rs.lie_type.family().letter(),
        rs.rank()
    );
    t += &format!("Heisenberg rank: {}\n", ext.heis_dim());
    if ext.heis_dim() > 0 {
        t += "Heisenberg Gram <a'_s,a'_t>:\n";
        for row in ext.heis_gram() {
            t += &format!(
                "  {}\n",
                row.iter().map(q_str).collect::<Vec<_>>().join(" ")
            );
        }
    }
    t += "generators alpha_s = h^(node) + a'_s at nodes: ";
    t += &ext
        .generators()
        .iter()
        .map(|g| g.node.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    t += "\n";
    t += "B(alpha_s,alpha_t):\n";
    for row in ext.big_lattice().gram() {
        t += &format!(
            "  {}\n",
            row.iter().map(q_str).collect::<Vec<_>>().join(" ")
        );
    }
    t += &format!(
        "parity: {} (even sublattice index {})\n",
        if par.is_super { "super" } else { "even" },
        par.even_sublattice_index
    );
    match &spec {
        Ok(s) => {
            t += &format!(
                "generating spaces (pairwise locality order {}):\n",
                s.locality_order
            );
            for sp in &s.spaces {
                t += &format!(
                    "  {}  weight {}  dim {}\n",
                    sp.label,
                    q_str(&sp.weight),
                    sp.dim
                );
            }
        }
        Err(e) => {
            t += &format!("generating spaces: {e}\n");
        }
    }
    emit(args.system.json, doc, t, out);
    Ok(())
}

fn classify_cmd(args: &LevelArgs, out: &mut Vec<u8>) -> Result<()> {
    let rs = root_system(&args.system)?;
    let k = checked_level(args)?;
    let ext = build_extension(&rs, k)?;
    let classes = classify(&ext)?;
    let mut rows = Vec::new();
    let mut t = format!(
        "{} untwisted irreducible classes for {}{} at level {k}:\n",
        classes.len(),
        rs.lie_type.family().letter(),
        rs.rank()
    );
    for c in &classes {
        let row = label_json(&ext, c)?;
        t += &format!(
            "  {}  conformal weight {}\n",
            module_name(c),
            row["conformal_weight"].as_str().unwrap()
        );
        rows.push(row);
    }
    let doc = json!({
        "schema": SCHEMA,
        "family": rs.lie_type.family().letter().to_string(),
        "rank": rs.rank(),
        "level": k,
        "count": classes.len(),
        "modules": rows,
    });
    emit(args.system.json, doc, t, out);
    Ok(())
}

fn char_cmd(args: &LevelArgs, module: &str, order: i64, out: &mut Vec<u8>) -> Result<()> {
    let rs = root_system(&args.system)?;
    let k = checked_level(args)?;
    let ext = build_extension(&rs, k)?;
    let parts: Vec<i64> = module
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Invalid(format!("module label must be two integers i,j, got {module:?}")))?;
    if parts.len() != 2 {
        return Err(Error::Invalid(format!(
            "module label must be two integers i,j, got {module:?}"
        )));
    }
    if order < 0 {
        return Err(Error::Invalid(format!(
            "truncation order must be nonnegative, got {order}"
        )));
    }
    let (i, j) = (parts[0], parts[1]);
    let label = ExtModuleLabel(ModuleLabel::new(
        DominantWeight::new(vec![i])?,
        vec![qz(j) / qz(k)],
    ));
    let trunc = qz(order);
    let series = ext_module_char(&ext, &label, &trunc)?;
    let doc = json!({
        "schema": SCHEMA,
        "family": rs.lie_type.family().letter().to_string(),
        "rank": rs.rank(),
        "level": k,
        "module": label_json(&ext, &label)?,
        "order": order,
        "terms": series.to_json(),
    });
    let mut t = format!(
        "character of {} for A1 at level {k}, complete through q^{order}:\n",
        module_name(&label)
    );
    for (e, c) in series.terms() {
        t += &format!("  q^{{{}}}: {c}\n", q_str(e));
    }
    emit(args.system.json, doc, t, out);
    Ok(())
}

fn check(args: &LevelArgs, heis_gram: Option<&str>, out: &mut Vec<u8>) -> Result<()> {
    let rs = root_system(&args.system)?;
    let k = checked_level(args)?;
    let ext = match heis_gram {
        None => build_extension(&rs, k)?,
        Some(text) => {
            let entries: Vec<Q> = text
                .split(',')
                .map(|p| {
                    parse_q(p.trim()).ok_or_else(|| {
                        Error::Invalid(format!("cannot parse Gram entry {:?}", p.trim()))
                    })
                })
                .collect::<Result<_>>()?;
            let g = (1..).find(|d| d * d >= entries.len()).unwrap_or(0);
            if g * g != entries.len() {
                return Err(Error::Invalid(format!(
                    "--heis-gram needs a square count of entries, got {}",
                    entries.len()
                )));
            }
            let gram: Vec<Vec<Q>> = entries.chunks(g).map(|c| c.to_vec()).collect();
            build_extension_with_gram(&rs, k, gram)?
        }
    };
    let report = check_hypotheses(&ext);
    let par = parity(&ext).ok();
    let doc = json!({
        "schema": SCHEMA,
        "family": rs.lie_type.family().letter().to_string(),
        "rank": rs.rank(),
        "level": k,
        "heis_gram": crate::jsonio::qmat_json(ext.heis_gram()),
        "report": report.to_json(),
        "parity": par.as_ref().map(|p| p.to_json()).unwrap_or(Value::Null),
    });

    let mut t = format!(
        "hypothesis checks for {}{} at level {k}:\n",
        rs.lie_type.family().letter(),
        rs.rank()
    );
    for c in &report.checks {
        t += &format!(
            "  [{}] {}: {}\n",
            if c.passed { "pass" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    if let Some(p) = &par {
        t += &format!(
            "parity: {} (even sublattice index {})\n",
            if p.is_super { "super" } else { "even" },
            p.even_sublattice_index
        );
    }
    emit(args.system.json, doc, t, out);
    match report.first_failure() {
        None => Ok(()),
        Some(name) => Err(Error::HypothesisFailed { name }),
    }
}
