use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use xlorentz::algebra::{group_metric, BASIS};
use xlorentz::dispersion::{analyze, DispersionRequest, FloatRepresentation, FourMomentum, Tolerances, TransformKind, Transformation};
use xlorentz::rep::state_count_evaluations;
use xlorentz::spinor::{Charge, GeneratorName};
use xlorentz::verify::full_report;
use xlorentz::{ComplexScalar, ExactMatrix, HalfInteger, Representation, SpinorPolynomial, VerificationReport};

/// Exact finite-dimensional representations of the J/K/Γ algebra built from
/// spinor polynomials.
#[derive(Parser, Debug)]
#[command(name = "xlorentz", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit the labeled basis states ψ^{Λ,J}_{γ,M}.
    States(Common),
    /// Emit the generator matrices and the spinor metric g.
    Matrices {
        #[command(flatten)]
        common: Common,
        /// Also emit Δ_z^{(±)} and Δ_±^{(±)}.
        #[arg(long)]
        include_delta: bool,
    },
    /// Run every exact check; exit status 1 if any hard check fails.
    Verify(Common),
    /// Emit the 10×10 group metric tr(ad_a ad_b).
    Metric(Output),
    /// Emit N_Λ and its three independent evaluations.
    Count(Common),
    /// Spectrum of Γ^μ p_μ, plane-wave current and covariance checks.
    Dispersion(DispersionArgs),
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Render exact values as decimals (15 significant digits).
    #[arg(long)]
    decimal: bool,
    /// Write the document to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Common {
    /// Λ as "k" or "k/2".
    #[arg(long, value_parser = parse_lambda)]
    lambda: HalfInteger,
    /// Largest Λ accepted.
    #[arg(long, default_value_t = 6)]
    lambda_cap: u32,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct DispersionArgs {
    #[command(flatten)]
    common: Common,
    /// Four-momentum "p0,p1,p2,p3" (default: at rest with unit mass).
    #[arg(long, value_parser = parse_momentum, allow_hyphen_values = true)]
    p: Option<FourMomentum>,
    /// Second momentum for the cross current; rescaled to the mass of p.
    #[arg(long, value_parser = parse_momentum, allow_hyphen_values = true)]
    p_prime: Option<FourMomentum>,
    /// Rotation "axis,angle" with axis x|y|z or "nx,ny,nz,angle".
    #[arg(long, allow_hyphen_values = true)]
    rotation: Option<String>,
    /// Boost "axis,rapidity" with axis x|y|z or "nx,ny,nz,rapidity".
    #[arg(long, allow_hyphen_values = true)]
    boost: Option<String>,
    #[arg(long)]
    tol_spectral: Option<f64>,
    #[arg(long)]
    tol_covariance: Option<f64>,
    #[arg(long)]
    tol_current: Option<f64>,
    #[arg(long)]
    tol_pseudo_hermitian: Option<f64>,
    #[arg(long)]
    max_condition: Option<f64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn parse_lambda(s: &str) -> Result<HalfInteger, String> {
    let l: HalfInteger = s.parse().map_err(|e: xlorentz::Error| e.to_string())?;
    if l.is_negative() {
        return Err(format!("lambda must be non-negative, got {s}"));
    }
    Ok(l)
}

fn parse_momentum(s: &str) -> Result<FourMomentum, String> {
    s.parse().map_err(|e: xlorentz::Error| e.to_string())
}

/// Rendered document plus whether every hard check passed.
struct Emitted {
    json: Value,
    text: String,
    ok: bool,
}

fn build(common: &Common) -> Result<Representation> {
    let cap = HalfInteger::from_int(common.lambda_cap as i64);
    Ok(Representation::build_capped(common.lambda, cap)?)
}

fn scalar(c: &ComplexScalar, decimal: bool) -> Value {
    if decimal {
        Value::String(c.to_decimal_string())
    } else {
        serde_json::to_value(c).expect("scalars serialize")
    }
}

fn scalar_text(c: &ComplexScalar, decimal: bool) -> String {
    if decimal {
        c.to_decimal_string()
    } else {
        c.to_string()
    }
}

fn matrix_json(m: &ExactMatrix, decimal: bool) -> Value {
    Value::Array(m.rows().map(|r| Value::Array(r.iter().map(|c| scalar(c, decimal)).collect())).collect())
}

fn matrix_text(name: &str, m: &ExactMatrix, decimal: bool) -> String {
    let cells: Vec<Vec<String>> = m.rows().map(|r| r.iter().map(|c| scalar_text(c, decimal)).collect()).collect();
    let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = format!("{name}:\n");
    for row in cells {
        let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        let _ = writeln!(out, "  {}", line.join("  "));
    }
    out
}

fn polynomial_json(p: &SpinorPolynomial, decimal: bool) -> Value {
    if !decimal {
        return serde_json::to_value(p).expect("polynomials serialize");
    }
    Value::Array(p.terms().rev().map(|(m, c)| json!({ "monomial": m.0, "coeff": c.to_decimal_string() })).collect())
}

fn polynomial_text(p: &SpinorPolynomial, decimal: bool) -> String {
    if !decimal {
        return p.to_string();
    }
    let terms: Vec<String> = p.terms().rev().map(|(m, c)| format!("[{}]·{m}", c.to_decimal_string())).collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn states(common: &Common) -> Result<Emitted> {
    let rep = build(common)?;
    let basis = rep.basis();
    let decimal = common.output.decimal;
    let json = if decimal {
        let states: Vec<Value> = basis
            .states
            .iter()
            .map(|s| {
                json!({ "J": s.label.j, "gamma": s.label.gamma, "M": s.label.m, "polynomial": polynomial_json(&s.polynomial, true) })
            })
            .collect();
        json!({ "lambda": basis.lambda, "dimension": basis.dimension(), "states": states })
    } else {
        serde_json::to_value(basis)?
    };
    let mut text = format!("lambda = {}, {} states\n", basis.lambda, basis.dimension());
    for s in &basis.states {
        let _ = writeln!(text, "{}  {}", s.label, polynomial_text(&s.polynomial, decimal));
    }
    Ok(Emitted { json, text, ok: true })
}

fn matrix_names(include_delta: bool) -> Vec<GeneratorName> {
    let mut names: Vec<GeneratorName> = BASIS.to_vec();
    names.extend([
        GeneratorName::JPlus,
        GeneratorName::JMinus,
        GeneratorName::delta_j(Charge::Plus),
        GeneratorName::delta_j(Charge::Minus),
    ]);
    if include_delta {
        for t in [Charge::Plus, Charge::Minus] {
            names.push(GeneratorName::delta_z(t));
        }
        for s in [1, -1] {
            for t in [Charge::Plus, Charge::Minus] {
                names.push(GeneratorName::delta_ladder(s, t));
            }
        }
    }
    names
}

fn matrices(common: &Common, include_delta: bool) -> Result<Emitted> {
    let rep = build(common)?;
    let decimal = common.output.decimal;
    let mut entries = Vec::new();
    let mut text = format!("lambda = {}, dimension {}\n", rep.lambda(), rep.dim());
    for g in matrix_names(include_delta) {
        let m = rep.matrix(g);
        entries.push(json!({ "generator": g, "entries": matrix_json(m, decimal) }));
        text.push_str(&matrix_text(g.as_str(), m, decimal));
    }
    let g = rep.metric().to_matrix();
    text.push_str(&matrix_text("g", &g, decimal));
    let labels: Vec<Value> = rep.basis().labels().map(|l| json!({ "J": l.j, "gamma": l.gamma, "M": l.m })).collect();
    let json = json!({
        "lambda": rep.lambda(),
        "dimension": rep.dim(),
        "basis": labels,
        "matrices": entries,
        "metric": matrix_json(&g, decimal),
    });
    Ok(Emitted { json, text, ok: true })
}

fn report_emitted(report: VerificationReport) -> Result<Emitted> {
    let ok = report.all_hard_pass();
    Ok(Emitted { text: report.summary_table(), json: serde_json::to_value(&report)?, ok })
}

fn verify(common: &Common) -> Result<Emitted> {
    let rep = build(common)?;
    report_emitted(full_report(&rep)?)
}

fn metric(output: &Output) -> Result<Emitted> {
    let eta = group_metric();
    let names: Vec<&str> = BASIS.iter().map(|g| g.as_str()).collect();
    let json = json!({ "basis": names, "metric": matrix_json(&eta, output.decimal) });
    let mut text = format!("basis: {}\n", names.join(", "));
    text.push_str(&matrix_text("eta", &eta, output.decimal));
    Ok(Emitted { json, text, ok: true })
}

fn count(common: &Common) -> Result<Emitted> {
    let cap = HalfInteger::from_int(common.lambda_cap as i64);
    if common.lambda > cap {
        return Err(xlorentz::Error::LambdaTooLarge { lambda: common.lambda, cap }.into());
    }
    let c = state_count_evaluations(common.lambda);
    let text = format!(
        "lambda = {}\nformula        {}\nmultiplet sum  {}\nbinomial       {}\n",
        c.lambda, c.formula, c.multiplet_sum, c.binomial
    );
    let json = json!({
        "lambda": c.lambda,
        "count": c.formula,
        "formula": c.formula,
        "multiplet_sum": c.multiplet_sum,
        "binomial": c.binomial,
        "consistent": c.consistent(),
    });
    Ok(Emitted { json, text, ok: c.consistent() })
}

fn dispersion(args: &DispersionArgs) -> Result<Emitted> {
    let rep = build(&args.common)?;
    let mut tolerances = Tolerances::default();
    let overrides = [
        (args.tol_spectral, &mut tolerances.spectral),
        (args.tol_covariance, &mut tolerances.covariance),
        (args.tol_current, &mut tolerances.current),
        (args.tol_pseudo_hermitian, &mut tolerances.pseudo_hermitian),
        (args.max_condition, &mut tolerances.max_condition),
    ];
    for (value, slot) in overrides {
        if let Some(v) = value {
            *slot = v;
        }
    }
    let transform = |kind, s: &Option<String>| -> Result<Option<Transformation>> {
        s.as_deref().map(|s| Transformation::parse(kind, s)).transpose().map_err(Into::into)
    };
    let request = DispersionRequest {
        p: args.p,
        p_prime: args.p_prime,
        rotation: transform(TransformKind::Rotation, &args.rotation).context("--rotation")?,
        boost: transform(TransformKind::Boost, &args.boost).context("--boost")?,
        tolerances,
    };
    let float = FloatRepresentation::new(&rep);
    let analysis = analyze(&float, rep.lambda(), &request)?;
    for w in &analysis.warnings {
        eprintln!("warning: {w}");
    }

    let mut text = format!("lambda = {}\np = {}, p·p = {}\n", rep.lambda(), analysis.momentum, analysis.mass_squared);
    if let Some(s) = &analysis.spectrum {
        let values: Vec<String> = s.eigenvalues.iter().map(|z| complex_text(z.re, z.im)).collect();
        let _ = writeln!(text, "eigenvalues: {}", values.join(", "));
        let _ = writeln!(text, "eigenvector condition number: {:.6e}", s.condition);
    }
    if let Some(c) = &analysis.current {
        let j: Vec<String> = c.current.components().iter().map(|z| complex_text(z.re, z.im)).collect();
        let _ = writeln!(text, "p' = {}\ncurrent j^mu: ({})", c.p_prime, j.join(", "));
        let _ = writeln!(text, "|(p - p')_mu j^mu| = {:.6e}", c.residual);
    }
    for w in &analysis.warnings {
        let _ = writeln!(text, "warning: {w}");
    }
    text.push_str(&analysis.report.summary_table());
    let ok = analysis.report.all_hard_pass();
    Ok(Emitted { json: serde_json::to_value(&analysis)?, text, ok })
}

fn complex_text(re: f64, im: f64) -> String {
    // below the printed precision
    if im.abs() < 5e-16 {
        format!("{re:.15}")
    } else {
        format!("{re:.15}{im:+.15}i")
    }
}

fn write_document(output: &Output, emitted: &Emitted) -> Result<()> {
    let body = match output.format {
        Format::Json => serde_json::to_string_pretty(&emitted.json)? + "\n",
        Format::Text => emitted.text.clone(),
    };
    match &output.out {
        Some(path) => std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{body}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    let (output, emitted) = match &cli.command {
        Command::States(c) => (&c.output, states(c)?),
        Command::Matrices { common, include_delta } => (&common.output, matrices(common, *include_delta)?),
        Command::Verify(c) => (&c.output, verify(c)?),
        Command::Metric(o) => (o, metric(o)?),
        Command::Count(c) => (&c.output, count(c)?),
        Command::Dispersion(d) => (&d.common.output, dispersion(d)?),
    };
    write_document(output, &emitted)?;
    Ok(emitted.ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
