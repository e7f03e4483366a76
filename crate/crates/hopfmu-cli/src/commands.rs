//! The table, mu, and inspect subcommands: build modules, collect exact
//! reports, and render them as JSON, CSV, or aligned text.

use std::collections::BTreeMap;

use serde::Serialize;

use hopfmu::cyclo::pretty_in_root_powers;
use hopfmu::{
    build_module, build_vlr, quantum_dim, simple_labels, BilinearReport, CMatrix, CycNum,
    QContext, Rep, UqLabel, VlrLabel,
};

use crate::{context, uq_context, CliError, Format};

/// The u_q(sl2)-module selected by `--i` (index n-1 means V(q^-1)).
fn uq_label(ctx: &QContext, i: u64) -> Result<UqLabel, CliError> {
    let n = ctx.n();
    if i == n - 1 {
        Ok(UqLabel::Vqinv)
    } else if i <= n - 2 {
        Ok(UqLabel::Vi(i))
    } else {
        Err(CliError::Usage(format!(
            "index i = {i} is out of range; at n = {n} the simple modules are V_0..V_{} and V(q^-1) = V_{}",
            n - 2,
            n - 1
        )))
    }
}

fn vlr_label(ctx: &QContext, l: u64, r: i64) -> Result<VlrLabel, CliError> {
    VlrLabel::new(l, r, ctx.n()).map_err(|e| CliError::Usage(e.to_string()))
}

fn failure(e: impl std::fmt::Display) -> CliError {
    CliError::Failure(e.to_string())
}

// ---------------------------------------------------------------------------
// Table rows
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct UqRow {
    label: String,
    i: u64,
    dim: usize,
    self_dual: bool,
    mu: CycNum,
    mu_pretty: String,
    quantum_dim: CycNum,
    quantum_dim_pretty: String,
    lambda: Option<CycNum>,
    lambda_pretty: Option<String>,
}

#[derive(Serialize)]
struct DoubleRow {
    label: String,
    l: u64,
    r: u64,
    dim: usize,
    self_dual: bool,
    mu: CycNum,
    mu_pretty: String,
    note: String,
}

#[derive(Serialize)]
struct TableDoc<R: Serialize> {
    algebra: &'static str,
    n: u64,
    exponent: u64,
    rows: Vec<R>,
}

fn uq_row(ctx: &QContext, label: UqLabel) -> Result<UqRow, CliError> {
    let rep = build_module(ctx, label).map_err(failure)?;
    let report = rep.mu().map_err(failure)?;
    let qdim = quantum_dim(ctx, label);
    let lambda = report
        .u
        .as_ref()
        .and_then(|u| rep.pivotal_scalar(u, "K").ok());
    let i = match label {
        UqLabel::Vi(i) => i,
        UqLabel::Vqinv => ctx.n() - 1,
    };
    Ok(UqRow {
        label: rep.label().to_string(),
        i,
        dim: rep.dim(),
        self_dual: report.self_dual,
        mu_pretty: pretty_in_root_powers(&report.mu),
        mu: report.mu,
        quantum_dim_pretty: pretty_in_root_powers(&qdim),
        quantum_dim: qdim,
        lambda_pretty: lambda.as_ref().map(pretty_in_root_powers),
        lambda,
    })
}

fn double_row(ctx: &QContext, label: VlrLabel, note: &str) -> Result<DoubleRow, CliError> {
    let rep = build_vlr(ctx, label).map_err(failure)?;
    let report = rep.mu().map_err(failure)?;
    Ok(DoubleRow {
        label: rep.label().to_string(),
        l: label.l,
        r: label.r,
        dim: rep.dim(),
        self_dual: report.self_dual,
        mu_pretty: pretty_in_root_powers(&report.mu),
        mu: report.mu,
        note: note.to_string(),
    })
}

pub fn table_uq(n: u64, exp: i64, format: Format) -> Result<(), CliError> {
    let ctx = uq_context(n, exp)?;
    let rows = simple_labels(n)
        .into_iter()
        .map(|label| uq_row(&ctx, label))
        .collect::<Result<Vec<_>, _>>()?;
    let doc = TableDoc {
        algebra: "uq",
        n,
        exponent: ctx.exponent(),
        rows,
    };
    match format {
        Format::Json => print_json(&doc),
        Format::Csv => print_uq_csv(&doc),
        Format::Pretty => print_uq_pretty(&doc),
    }
}

pub fn table_double(n: u64, exp: i64, format: Format) -> Result<(), CliError> {
    let ctx = context(n, exp)?;
    // Closed forms exist for odd n; even-n values are engine output only.
    let note = if n % 2 == 0 { "beyond paper" } else { "" };
    let mut rows = Vec::new();
    for l in 1..=n {
        for r in 1..=n {
            rows.push(double_row(&ctx, VlrLabel { l, r }, note)?);
        }
    }
    let doc = TableDoc {
        algebra: "double",
        n,
        exponent: ctx.exponent(),
        rows,
    };
    match format {
        Format::Json => print_json(&doc),
        Format::Csv => print_double_csv(&doc),
        Format::Pretty => print_double_pretty(&doc),
    }
}

fn print_json<T: Serialize>(doc: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(doc).map_err(failure)?;
    println!("{text}");
    Ok(())
}

fn json_cell<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string(value).map_err(failure)
}

fn print_csv(header: &[&str], records: Vec<Vec<String>>) -> Result<(), CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).map_err(failure)?;
    for record in records {
        writer.write_record(&record).map_err(failure)?;
    }
    let bytes = writer.into_inner().map_err(failure)?;
    print!("{}", String::from_utf8(bytes).map_err(failure)?);
    Ok(())
}

fn print_uq_csv(doc: &TableDoc<UqRow>) -> Result<(), CliError> {
    let mut records = Vec::new();
    for row in &doc.rows {
        records.push(vec![
            row.label.clone(),
            row.i.to_string(),
            row.dim.to_string(),
            row.self_dual.to_string(),
            json_cell(&row.mu)?,
            row.mu_pretty.clone(),
            json_cell(&row.quantum_dim)?,
            row.quantum_dim_pretty.clone(),
            row.lambda.as_ref().map(json_cell).transpose()?.unwrap_or_default(),
            row.lambda_pretty.clone().unwrap_or_default(),
        ]);
    }
    print_csv(
        &[
            "label",
            "i",
            "dim",
            "self_dual",
            "mu",
            "mu_pretty",
            "quantum_dim",
            "quantum_dim_pretty",
            "lambda",
            "lambda_pretty",
        ],
        records,
    )
}

fn print_double_csv(doc: &TableDoc<DoubleRow>) -> Result<(), CliError> {
    let mut records = Vec::new();
    for row in &doc.rows {
        records.push(vec![
            row.label.clone(),
            row.l.to_string(),
            row.r.to_string(),
            row.dim.to_string(),
            row.self_dual.to_string(),
            json_cell(&row.mu)?,
            row.mu_pretty.clone(),
            row.note.clone(),
        ]);
    }
    print_csv(
        &["label", "l", "r", "dim", "self_dual", "mu", "mu_pretty", "note"],
        records,
    )
}

/// Left-align `cells` under `header` with two-space gutters.
fn print_aligned(header: &[&str], cells: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in cells {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let render = |row: &[String]| {
        let mut line = String::new();
        for (k, cell) in row.iter().enumerate() {
            if k > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if k + 1 < row.len() {
                for _ in cell.len()..widths[k] {
                    line.push(' ');
                }
            }
        }
        println!("{}", line.trim_end());
    };
    render(&header.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    for row in cells {
        render(row);
    }
}

fn print_uq_pretty(doc: &TableDoc<UqRow>) -> Result<(), CliError> {
    println!("u_q(sl2), n = {}, q = zeta_{}^{}", doc.n, doc.n, doc.exponent);
    let cells: Vec<Vec<String>> = doc
        .rows
        .iter()
        .map(|row| {
            vec![
                row.label.clone(),
                row.dim.to_string(),
                if row.self_dual { "yes" } else { "no" }.to_string(),
                row.mu_pretty.clone(),
                row.quantum_dim_pretty.clone(),
                row.lambda_pretty.clone().unwrap_or_else(|| "-".to_string()),
            ]
        })
        .collect();
    print_aligned(
        &["label", "dim", "self_dual", "mu", "quantum_dim", "lambda"],
        &cells,
    );
    Ok(())
}

fn print_double_pretty(doc: &TableDoc<DoubleRow>) -> Result<(), CliError> {
    println!("H_n(1,q), n = {}, q = zeta_{}^{}", doc.n, doc.n, doc.exponent);
    let cells: Vec<Vec<String>> = doc
        .rows
        .iter()
        .map(|row| {
            let mu = if row.note.is_empty() {
                row.mu_pretty.clone()
            } else {
                format!("{} ({})", row.mu_pretty, row.note)
            };
            vec![
                row.label.clone(),
                row.dim.to_string(),
                if row.self_dual { "yes" } else { "no" }.to_string(),
                mu,
            ]
        })
        .collect();
    print_aligned(&["label", "dim", "self_dual", "mu"], &cells);
    Ok(())
}

// ---------------------------------------------------------------------------
// mu
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct MuDoc {
    algebra: &'static str,
    n: u64,
    exponent: u64,
    label: String,
    self_dual: bool,
    mu: CycNum,
    mu_pretty: String,
}

fn emit_mu(algebra: &'static str, ctx: &QContext, rep: &Rep, format: Format) -> Result<(), CliError> {
    let report = rep.mu().map_err(failure)?;
    let doc = MuDoc {
        algebra,
        n: ctx.n(),
        exponent: ctx.exponent(),
        label: rep.label().to_string(),
        self_dual: report.self_dual,
        mu_pretty: pretty_in_root_powers(&report.mu),
        mu: report.mu,
    };
    match format {
        Format::Json => print_json(&doc),
        Format::Pretty => {
            println!("{}", doc.mu_pretty);
            Ok(())
        }
        Format::Csv => Err(CliError::Usage(
            "csv is not available for `mu`; use json or pretty".to_string(),
        )),
    }
}

pub fn mu_uq(i: u64, n: u64, exp: i64, format: Format) -> Result<(), CliError> {
    let ctx = uq_context(n, exp)?;
    let label = uq_label(&ctx, i)?;
    let rep = build_module(&ctx, label).map_err(failure)?;
    emit_mu("uq", &ctx, &rep, format)
}

pub fn mu_double(l: u64, r: i64, n: u64, exp: i64, format: Format) -> Result<(), CliError> {
    let ctx = context(n, exp)?;
    let label = vlr_label(&ctx, l, r)?;
    let rep = build_vlr(&ctx, label).map_err(failure)?;
    emit_mu("double", &ctx, &rep, format)
}

// ---------------------------------------------------------------------------
// inspect
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct InspectDoc {
    algebra: &'static str,
    n: u64,
    exponent: u64,
    label: String,
    dim: usize,
    self_dual: bool,
    mu: CycNum,
    mu_pretty: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_mu: Option<CycNum>,
    matrices: BTreeMap<String, CMatrix>,
    #[serde(rename = "Q", skip_serializing_if = "Option::is_none")]
    q: Option<CMatrix>,
    #[serde(rename = "U", skip_serializing_if = "Option::is_none")]
    u: Option<CMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bilinear: Option<BilinearReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pivot_scalar: Option<CycNum>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dual_label: Option<String>,
}

fn inspect_doc(
    algebra: &'static str,
    ctx: &QContext,
    rep: &Rep,
    grouplike: Option<&str>,
) -> Result<InspectDoc, CliError> {
    let report = rep.mu().map_err(failure)?;
    // The oracle trace is only meaningful when S descends to End(V),
    // i.e. when the module is self-dual.
    let oracle_mu = if report.self_dual {
        Some(rep.mu_oracle().map_err(failure)?)
    } else {
        None
    };
    let bilinear = report.q.as_ref().map(|q| rep.bilinear_form_checks(q));
    let pivot_scalar = match (&report.u, grouplike) {
        (Some(u), Some(g)) => rep.pivotal_scalar(u, g).ok(),
        _ => None,
    };
    let matrices: BTreeMap<String, CMatrix> = rep
        .hopf()
        .generators()
        .iter()
        .map(|g| (g.clone(), rep.matrix(g).unwrap().clone()))
        .collect();
    Ok(InspectDoc {
        algebra,
        n: ctx.n(),
        exponent: ctx.exponent(),
        label: rep.label().to_string(),
        dim: rep.dim(),
        self_dual: report.self_dual,
        mu_pretty: pretty_in_root_powers(&report.mu),
        mu: report.mu,
        oracle_mu,
        matrices,
        q: report.q,
        u: report.u,
        bilinear,
        pivot_scalar,
        dual_label: None,
    })
}

fn print_matrix_block(name: &str, m: &CMatrix) {
    println!("{name} =");
    for i in 0..m.rows() {
        let cells: Vec<String> = (0..m.cols())
            .map(|j| pretty_in_root_powers(m.get(i, j)))
            .collect();
        println!("  [{}]", cells.join(", "));
    }
}

fn print_inspect_pretty(doc: &InspectDoc) {
    let algebra = match doc.algebra {
        "uq" => "u_q(sl2)".to_string(),
        _ => "H_n(1,q)".to_string(),
    };
    println!(
        "{} over {}, n = {}, q = zeta_{}^{}",
        doc.label, algebra, doc.n, doc.n, doc.exponent
    );
    println!("dim: {}", doc.dim);
    println!("self_dual: {}", doc.self_dual);
    if let Some(dual) = &doc.dual_label {
        println!("dual module: {dual}");
    }
    println!("mu: {}", doc.mu_pretty);
    if let Some(oracle) = &doc.oracle_mu {
        println!("oracle mu: {}", pretty_in_root_powers(oracle));
    }
    if let Some(lambda) = &doc.pivot_scalar {
        println!("pivotal scalar: {}", pretty_in_root_powers(lambda));
    }
    println!("matrices:");
    for (g, m) in &doc.matrices {
        print_matrix_block(g, m);
    }
    match (&doc.q, &doc.u) {
        (Some(q), Some(u)) => {
            print_matrix_block("Q", q);
            print_matrix_block("U", u);
        }
        _ => println!("Q, U: not defined (module is not self-dual)"),
    }
    if let Some(b) = &doc.bilinear {
        let yes_no = |v: bool| if v { "yes" } else { "no" };
        let coproduct = match b.coproduct_invariance {
            Some(v) => yes_no(v),
            None => "n/a",
        };
        println!(
            "bilinear form: nondegenerate {}, adjoint law {}, u-law {}, coproduct invariance {}",
            yes_no(b.nondegenerate),
            yes_no(b.adjoint_law),
            yes_no(b.u_law),
            coproduct
        );
    }
}

fn emit_inspect(doc: &InspectDoc, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => print_json(doc),
        Format::Pretty => {
            print_inspect_pretty(doc);
            Ok(())
        }
        Format::Csv => Err(CliError::Usage(
            "csv is not available for `inspect`; use json or pretty".to_string(),
        )),
    }
}

pub fn inspect_uq(i: u64, n: u64, exp: i64, format: Format) -> Result<(), CliError> {
    let ctx = uq_context(n, exp)?;
    let label = uq_label(&ctx, i)?;
    let rep = build_module(&ctx, label).map_err(failure)?;
    let doc = inspect_doc("uq", &ctx, &rep, Some("K"))?;
    emit_inspect(&doc, format)
}

pub fn inspect_double(l: u64, r: i64, n: u64, exp: i64, format: Format) -> Result<(), CliError> {
    let ctx = context(n, exp)?;
    let label = vlr_label(&ctx, l, r)?;
    let rep = build_vlr(&ctx, label).map_err(failure)?;
    let mut doc = inspect_doc("double", &ctx, &rep, None)?;
    let dual = hopfmu::dual_label(n, label);
    doc.dual_label = Some(format!("V({},{})", dual.l, dual.r));
    emit_inspect(&doc, format)
}
