//! Command implementations. Each command returns an [`Outcome`] holding the
//! exit code, both renderings of its report, and what to record.

use std::path::{Path, PathBuf};

use chainrep::choquet::{choquet, choquet_sup_representation, risk_measure};
use chainrep::law_invariant::{domination_report, kusuoka_measure, DominationReport};
use chainrep::recursion::{iterate_to_fixed_point, recursion_step, RecursionTrace};
use chainrep::representation::{EquivalenceReport, Side};
use chainrep::scalar::format_scalar;
use chainrep::setfn::table_order;
use chainrep::{
    choquet_product_formula, comonotone_check, distribution_of_density, parse_scalar, spectral_decomposition_check,
    verify_corollary_supermodular, verify_theorem2, Error, GroundSet, Scalar, SetFunction, SimpleFunction, SubsetRef,
    WeightedSpace,
};
use serde_json::{json, Value};

use crate::document::{self, DocumentError};
use crate::record::digest;
use crate::{exit, golden, render, Cli, Command, Format};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Document { path: PathBuf, source: DocumentError },
    #[error("--f: {0}")]
    Function(String),
    #[error(transparent)]
    Model(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Model(Error::NotSubmodular { .. }) => exit::NEGATIVE,
            CliError::Model(Error::MaxStepsExceeded { .. }) => exit::STEP_CAP,
            CliError::Model(Error::Inconsistent(_)) => exit::INCONSISTENT,
            _ => exit::INPUT,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: u8,
    pub text: String,
    pub json: Value,
    /// Digest of the canonical input document.
    pub digest: String,
    pub command: &'static str,
    pub parameters: Value,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serialisable");
                s.push('\n');
                s
            }
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Check { file } => check(file),
        Command::Iterate { file, max_steps } => iterate(file, *max_steps),
        Command::ReproTable { self_test } => repro_table(*self_test),
        Command::Choquet { file, f, risk, sup, witness } => choquet_cmd(file, f, *risk, *sup, *witness),
        Command::Spectral { file, f } => spectral(file, f.as_deref()),
        Command::Represent { file, supermodular } => represent(file, *supermodular),
        Command::Dual { file } => dual(file),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_owned(), source })
}

fn load_set_function(path: &Path) -> Result<(SetFunction, String), CliError> {
    let v = document::parse_set_function(&read(path)?)
        .map_err(|source| CliError::Document { path: path.to_owned(), source })?;
    let d = digest(&document::set_function_value(&v));
    Ok((v, d))
}

fn load_weighted(path: &Path) -> Result<(WeightedSpace, String), CliError> {
    let w = document::parse_weighted(&read(path)?)
        .map_err(|source| CliError::Document { path: path.to_owned(), source })?;
    let d = digest(&document::weighted_value(&w));
    Ok((w, d))
}

fn parse_function(ground: &GroundSet, text: &str) -> Result<SimpleFunction, CliError> {
    let values = text
        .split(',')
        .map(|s| parse_scalar(s.trim()).map_err(|e| CliError::Function(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != ground.len() {
        return Err(CliError::Function(format!("expected {} values, got {}", ground.len(), values.len())));
    }
    Ok(SimpleFunction::new(ground.clone(), values)?)
}

fn s(x: &Scalar) -> String {
    format_scalar(x)
}

fn scalars(xs: &[Scalar]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(s(x))).collect())
}

fn file_param(path: &Path) -> Value {
    Value::String(path.display().to_string())
}

fn pair_text(v: &SetFunction, a: SubsetRef, b: SubsetRef, op: &str) -> String {
    let g = v.ground();
    let lhs = v.get(a) + v.get(b);
    let rhs = v.get(a.union(b)) + v.get(a.intersection(b));
    format!(
        "A={} B={}: v(A)+v(B) = {} {op} {} = v(A∪B)+v(A∩B)",
        g.format_subset(a),
        g.format_subset(b),
        s(&lhs),
        s(&rhs)
    )
}

fn pair_json(v: &SetFunction, a: SubsetRef, b: SubsetRef) -> Value {
    let g = v.ground();
    json!({"a": document::subset_key(g, a), "b": document::subset_key(g, b)})
}

fn check(path: &Path) -> Result<Outcome, CliError> {
    let (v, digest) = load_set_function(path)?;
    let g = v.ground();
    let monotone = v.monotone_witness();
    let submodular = v.submodular_witness();
    let supermodular = v.supermodular_witness();

    let mut rows: Vec<(&str, String)> = vec![("elements", g.labels().join(","))];
    rows.push((
        "monotone",
        match monotone {
            None => "yes".into(),
            Some(w) => format!(
                "no  v({}) = {} > {} = v({})",
                g.format_subset(w.smaller),
                s(v.get(w.smaller)),
                s(v.get(w.larger)),
                g.format_subset(w.larger)
            ),
        },
    ));
    rows.push(("submodular", submodular.map_or("yes".into(), |w| format!("no  {}", pair_text(&v, w.a, w.b, "<")))));
    rows.push(("supermodular", supermodular.map_or("yes".into(), |w| format!("no  {}", pair_text(&v, w.a, w.b, ">")))));

    let mut code = if submodular.is_none() { exit::OK } else { exit::NEGATIVE };
    let mut conditions = Value::Null;
    if monotone.is_none() && v.m() <= chainrep::MAX_SWEEP {
        let report = verify_theorem2(&v)?;
        let flags = report.flags();
        rows.push((
            "conditions",
            flags
                .iter()
                .zip(["a", "b", "c", "d"])
                .map(|(f, n)| format!("({n}) {}", render::yes_no(*f)))
                .collect::<Vec<_>>()
                .join("  "),
        ));
        if !report.all_agree() || flags[0] != submodular.is_none() {
            rows.push(("status", "inconsistent: the four conditions disagree".into()));
            code = exit::INCONSISTENT;
        }
        conditions = json!(flags);
    }

    let json = json!({
        "monotone": monotone.is_none(),
        "monotone_witness": monotone.map(|w| json!({"smaller": document::subset_key(g, w.smaller), "larger": document::subset_key(g, w.larger)})),
        "submodular": submodular.is_none(),
        "submodular_witness": submodular.map(|w| pair_json(&v, w.a, w.b)),
        "supermodular": supermodular.is_none(),
        "supermodular_witness": supermodular.map(|w| pair_json(&v, w.a, w.b)),
        "conditions": conditions,
    });
    Ok(Outcome {
        code,
        text: render::pairs(&rows),
        json,
        digest,
        command: "check",
        parameters: json!({"file": file_param(path)}),
    })
}

fn trace_rows(v0: &SetFunction, trace: &RecursionTrace) -> (Vec<String>, Vec<Vec<String>>, Vec<Value>) {
    let g = v0.ground();
    let columns = table_order(v0.m());
    let mut header = vec!["n".to_owned()];
    header.extend(columns.iter().map(|&c| g.format_subset(c)));
    header.push("submodular".into());
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for (n, (v, sub)) in trace.iterates.iter().zip(&trace.submodular).enumerate() {
        let values: Vec<Scalar> = columns.iter().map(|&c| v.get(c).clone()).collect();
        let mut row = vec![n.to_string()];
        row.extend(values.iter().map(s));
        let mut flag = render::yes_no(*sub);
        if trace.fixed_point == Some(n) {
            flag.push_str(" *");
        }
        row.push(flag);
        rows.push(row);
        json_rows.push(json!({"n": n, "values": scalars(&values), "submodular": sub}));
    }
    (header, rows, json_rows)
}

fn iterate(path: &Path, max_steps: Option<usize>) -> Result<Outcome, CliError> {
    let (v0, digest) = load_set_function(path)?;
    let (trace, code, status) = match iterate_to_fixed_point(&v0, max_steps) {
        Ok(trace) => {
            let n = trace.fixed_point.expect("successful trace has a fixed point");
            (trace, exit::OK, format!("fixed point at n = {n} (marked *)"))
        }
        Err(Error::MaxStepsExceeded { max_steps, trace }) => {
            (*trace, exit::STEP_CAP, format!("no fixed point within {max_steps} step(s); partial trace shown"))
        }
        Err(e) => return Err(e.into()),
    };
    let g = v0.ground();
    let (header, rows, json_rows) = trace_rows(&v0, &trace);
    let mut text = render::table(&header, &rows);
    text.push_str(&status);
    text.push('\n');
    let json = json!({
        "columns": table_order(v0.m()).into_iter().map(|c| document::subset_key(g, c)).collect::<Vec<_>>(),
        "iterates": json_rows,
        "fixed_point": trace.fixed_point,
        "steps": trace.steps(),
    });
    Ok(Outcome {
        code,
        text,
        json,
        digest,
        command: "iterate",
        parameters: json!({"file": file_param(path), "max_steps": max_steps}),
    })
}

fn repro_table(self_test: bool) -> Result<Outcome, CliError> {
    let v0 = golden::v0();
    let v1 = recursion_step(&v0)?;
    let v2 = recursion_step(&v1)?;
    let columns = golden::columns();
    let computed: Vec<Vec<Scalar>> =
        [&v0, &v1, &v2].iter().map(|v| columns.iter().map(|&c| v.get(c).clone()).collect()).collect();
    let expected = golden::expected(self_test);

    let mut diffs = Vec::new();
    for (n, (got_row, want_row)) in computed.iter().zip(&expected).enumerate() {
        for ((c, got), want) in columns.iter().zip(got_row).zip(want_row) {
            if got != want {
                diffs.push((n, *c, want.clone(), got.clone()));
            }
        }
    }
    let cells = columns.len() * computed.len();

    let mut header = vec!["n".to_owned()];
    header.extend(columns.iter().map(|c| c.to_string()));
    let rows: Vec<Vec<String>> = computed
        .iter()
        .enumerate()
        .map(|(n, row)| std::iter::once(format!("v{n}")).chain(row.iter().map(s)).collect())
        .collect();
    let mut text = render::table(&header, &rows);
    for (n, c, want, got) in &diffs {
        text.push_str(&format!("mismatch v{n}({c}): expected {}, computed {}\n", s(want), s(got)));
    }
    text.push_str(&format!("{}/{cells} values match\n", cells - diffs.len()));

    let json = json!({
        "rows": computed.iter().map(|r| scalars(r)).collect::<Vec<_>>(),
        "matched": cells - diffs.len(),
        "cells": cells,
        "diffs": diffs.iter().map(|(n, c, want, got)| json!({"n": n, "subset": c.to_string(), "expected": s(want), "computed": s(got)})).collect::<Vec<_>>(),
    });
    let code = if diffs.is_empty() { exit::OK } else { exit::NEGATIVE };
    let digest = digest(&document::set_function_value(&v0));
    Ok(Outcome { code, text, json, digest, command: "repro-table", parameters: json!({"self_test": self_test}) })
}

fn choquet_cmd(path: &Path, f_text: &str, risk: bool, sup: bool, witness: bool) -> Result<Outcome, CliError> {
    let (v, digest) = load_set_function(path)?;
    let g = v.ground();
    let f = parse_function(g, f_text)?;
    let value = choquet(&v, &f)?;
    let mut code = exit::OK;
    let mut rows: Vec<(&str, String)> =
        vec![("f", f.values().iter().map(s).collect::<Vec<_>>().join(",")), ("v(f)", s(&value))];
    let mut json = json!({"f": scalars(f.values()), "choquet": s(&value)});
    if witness {
        let chain = f.comonotone_chain();
        rows.push(("chain", render::chain(g, &chain)));
        json["chain"] = json!(chain.order().iter().map(|&e| g.label(e)).collect::<Vec<_>>());
    }
    if risk {
        let r = risk_measure(&v, &f)?;
        rows.push(("risk", s(&r)));
        json["risk"] = json!(s(&r));
    }
    if sup {
        match choquet_sup_representation(&v, &f) {
            Ok(opt) => {
                rows.push(("sup", s(&opt.value)));
                json["sup"] = json!(s(&opt.value));
                if witness {
                    rows.push(("sup chain", render::chain(g, &opt.chain)));
                    json["sup_chain"] = json!(opt.chain.order().iter().map(|&e| g.label(e)).collect::<Vec<_>>());
                }
                if opt.value != value {
                    rows.push(("status", "inconsistent: sup differs from v(f)".into()));
                    code = exit::INCONSISTENT;
                }
            }
            Err(e @ Error::NotSubmodular { .. }) => {
                rows.push(("sup", format!("refused: {e}")));
                json["sup"] = Value::Null;
                json["sup_refused"] = json!(e.to_string());
                code = exit::NEGATIVE;
            }
            Err(e) => return Err(e.into()),
        }
    }
    let parameters = json!({"file": file_param(path), "f": f_text, "risk": risk, "sup": sup, "witness": witness});
    Ok(Outcome { code, text: render::pairs(&rows), json, digest, command: "choquet", parameters })
}

fn spectral(path: &Path, f_text: Option<&str>) -> Result<Outcome, CliError> {
    let (w, digest) = load_weighted(path)?;
    let g = w.ground();
    let f = match f_text {
        Some(t) => parse_function(g, t)?,
        None => SimpleFunction::new(g.clone(), w.density().to_vec())?,
    };
    f.require_nonnegative()?;

    let dist = distribution_of_density(&w);
    let kusuoka = kusuoka_measure(&w)?;
    let spectral = spectral_decomposition_check(&w, &f)?;
    let product = choquet_product_formula(&w, &f)?;
    let report: DominationReport = domination_report(&w, &f)?;
    let density = SimpleFunction::new(g.clone(), w.density().to_vec())?;
    let comonotone = comonotone_check(&f, &density);
    let agree = spectral.choquet == product && spectral.holds();

    let mut text = String::from("distribution of the density\n");
    text.push_str(&render::table(
        &["y".into(), "F(y)".into()],
        &dist.breakpoints().iter().zip(dist.levels()).map(|(b, l)| vec![s(b), s(l)]).collect::<Vec<_>>(),
    ));
    text.push_str("\nquantile function\n");
    let quantiles = dist.quantile_segments();
    text.push_str(&render::table(
        &["beta".into(), "quantile".into()],
        &quantiles.iter().map(|(lo, hi, z)| vec![format!("[{}, {})", s(lo), s(hi)), s(z)]).collect::<Vec<_>>(),
    ));
    text.push_str("\nspectral measure\n");
    text.push_str(&render::table(
        &["alpha".into(), "mass".into(), "component".into()],
        &spectral.terms.iter().map(|t| vec![s(&t.alpha), s(&t.mass), s(&t.value)]).collect::<Vec<_>>(),
    ));
    text.push('\n');
    let mut rows: Vec<(&str, String)> = vec![
        ("f", f.values().iter().map(s).collect::<Vec<_>>().join(",")),
        ("total mass", s(&kusuoka.total_mass())),
        ("direct", s(&spectral.choquet)),
        ("product formula", s(&product)),
        ("spectral sum", s(&spectral.decomposition)),
        ("integral", s(&report.integral)),
        ("rearrangement sup", s(&report.rearrangement_sup)),
        ("gap", s(&(&spectral.choquet - &report.integral))),
        ("comonotone", render::yes_no(comonotone)),
    ];
    let code = if agree && report.holds() {
        exit::OK
    } else {
        rows.push(("status", "inconsistent: the routes disagree".into()));
        exit::INCONSISTENT
    };
    text.push_str(&render::pairs(&rows));

    let json = json!({
        "distribution": {"breakpoints": scalars(dist.breakpoints()), "levels": scalars(dist.levels())},
        "quantiles": quantiles.iter().map(|(lo, hi, z)| json!({"from": s(lo), "to": s(hi), "value": s(z)})).collect::<Vec<_>>(),
        "atoms": spectral.terms.iter().map(|t| json!({"alpha": s(&t.alpha), "mass": s(&t.mass), "component": s(&t.value)})).collect::<Vec<_>>(),
        "f": scalars(f.values()),
        "direct": s(&spectral.choquet),
        "product": s(&product),
        "spectral": s(&spectral.decomposition),
        "integral": s(&report.integral),
        "rearrangement_sup": s(&report.rearrangement_sup),
        "gap": s(&(&spectral.choquet - &report.integral)),
        "comonotone": comonotone,
    });
    Ok(Outcome {
        code,
        text,
        json,
        digest,
        command: "spectral",
        parameters: json!({"file": file_param(path), "f": f_text}),
    })
}

fn condition_rows(v: &SetFunction, report: &EquivalenceReport) -> (Vec<(&'static str, String)>, Value) {
    let g = v.ground();
    let sub = report.side == Side::Submodular;
    let (op, rel) = if sub { ("<", "≤") } else { (">", "≥") };
    let mut rows = Vec::new();
    let mut details = serde_json::Map::new();

    rows.push((
        "(a) modularity",
        match report.modularity {
            None => "holds".into(),
            Some(w) => {
                details.insert("a".into(), pair_json(v, w.a, w.b));
                format!("fails  {}", pair_text(v, w.a, w.b, op))
            }
        },
    ));
    rows.push((
        "(b) extremal in core",
        match &report.extremal_in_core {
            None => "holds".into(),
            Some(fail) => {
                details.insert(
                    "b".into(),
                    json!({"chain": render::chain(g, &fail.chain), "subset": document::subset_key(g, fail.subset)}),
                );
                format!(
                    "fails  chain {} breaks μ(B) {rel} v(B) at B={}",
                    render::chain(g, &fail.chain),
                    g.format_subset(fail.subset)
                )
            }
        },
    ));
    rows.push(("(c) chain representation", match &report.chain_representation {
        None => "holds".into(),
        Some(fail) => {
            details.insert("c".into(), json!({"subset": document::subset_key(g, fail.subset), "optimum": s(&fail.optimum.value), "chain": render::chain(g, &fail.optimum.chain)}));
            format!(
                "fails  at A={}: optimum {} via {} vs v(A) = {}",
                g.format_subset(fail.subset),
                s(&fail.optimum.value),
                render::chain(g, &fail.optimum.chain),
                s(v.get(fail.subset))
            )
        }
    }));
    rows.push(("(d) local core", match &report.local_core {
        None => "holds".into(),
        Some(fail) => {
            let best = fail.best.as_ref().map(s);
            details.insert("d".into(), json!({"outer": document::subset_key(g, fail.outer), "inner": document::subset_key(g, fail.inner), "best": best}));
            format!(
                "fails  at A={} ⊆ B={}: best {} vs v(A) = {}",
                g.format_subset(fail.inner),
                g.format_subset(fail.outer),
                best.unwrap_or_else(|| "none".into()),
                s(v.get(fail.inner))
            )
        }
    }));
    (rows, Value::Object(details))
}

fn represent(path: &Path, supermodular: bool) -> Result<Outcome, CliError> {
    let (v, digest) = load_set_function(path)?;
    let report = if supermodular { verify_corollary_supermodular(&v)? } else { verify_theorem2(&v)? };
    let (mut rows, witnesses) = condition_rows(&v, &report);
    let flags = report.flags();
    let code = if !report.all_agree() {
        rows.push(("status", "inconsistent: the four conditions disagree".into()));
        exit::INCONSISTENT
    } else if flags[0] {
        exit::OK
    } else {
        exit::NEGATIVE
    };
    let side = if supermodular { "supermodular" } else { "submodular" };
    let json = json!({"side": side, "conditions": flags, "witnesses": witnesses});
    Ok(Outcome {
        code,
        text: render::pairs(&rows),
        json,
        digest,
        command: "represent",
        parameters: json!({"file": file_param(path), "supermodular": supermodular}),
    })
}

fn dual(path: &Path) -> Result<Outcome, CliError> {
    let (v, digest) = load_set_function(path)?;
    let d = v.dual();
    let doc = document::set_function_value(&d);
    Ok(Outcome {
        code: exit::OK,
        text: document::render_set_function(&d),
        json: doc,
        digest,
        command: "dual",
        parameters: json!({"file": file_param(path)}),
    })
}
