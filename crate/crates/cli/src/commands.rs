use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Args;
use ghbounds::checks::{
    self, BoundReport, HypothesisStatus, SweepConfig, SweepResult, TheoremId,
};
use ghbounds::dimension::{krull_dim, DimensionResult};
use ghbounds::groebner::kernel;
use ghbounds::modules::{
    equidim_certificate, fitting_ideal, minors, order_ideal, row_ideal, sym_presentation,
    EquidimCertificate,
};
use ghbounds::{Ideal, PolyMatrix, ResourceLimits};
use serde::Serialize;
use serde_json::{json, Value};

use crate::session::{CertificateSpec, Session};
use crate::CliError;

/// Rendered result of one command.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub exit: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, exit: 0 }
    }
}

fn ideal_json(i: &Ideal) -> Value {
    json!(i.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>())
}

fn matrix_json(m: &PolyMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": (0..m.rows())
            .map(|i| m.row(i).iter().map(|e| e.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

fn matrix_text(out: &mut String, m: &PolyMatrix) {
    let _ = writeln!(out, "  shape {}x{}", m.rows(), m.cols());
    if m.cols() > 0 {
        for row in m.row_strings() {
            let _ = writeln!(out, "  {row}");
        }
    }
}

fn dimension_json(d: &DimensionResult, i: &Ideal) -> Value {
    json!({
        "dim": d.dim,
        "height": d.height,
        "unit": d.unit,
        "independent_set": d.witness_names(i),
    })
}

pub fn gb(session: &Session, name: &str) -> Result<Output, CliError> {
    let i = session.ideal(name)?;
    let basis = i.groebner_basis()?;
    let mut text = format!("gb {name}: {} elements, {}\n", basis.len(), session.ring.order());
    for g in basis {
        let _ = writeln!(text, "  {g}");
    }
    let json = json!({
        "command": "gb",
        "ideal": name,
        "order": session.ring.order().to_string(),
        "basis": basis.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, json))
}

pub fn dim(session: &Session, name: &str, height_first: bool) -> Result<Output, CliError> {
    let i = session.ideal(name)?;
    let d = krull_dim(&i)?;
    let mut text = if height_first {
        format!("height {}, dim {}\n", d.height, d.dim)
    } else {
        format!("dim {}, height {}\n", d.dim, d.height)
    };
    if d.unit {
        text.push_str("  unit ideal\n");
    } else {
        let _ = writeln!(text, "  independent set {{{}}}", d.witness_names(&i).join(", "));
    }
    let mut json = dimension_json(&d, &i);
    json["command"] = json!(if height_first { "height" } else { "dim" });
    json["ideal"] = json!(name);
    Ok(Output::ok(text, json))
}

pub fn minors_cmd(session: &Session, matrix: &str, t: usize) -> Result<Output, CliError> {
    let a = session.matrix(matrix)?;
    let ms = minors(a, t)?;
    let nonzero: Vec<String> = ms.iter().filter(|m| !m.is_zero()).map(|m| m.to_string()).collect();
    let mut text = format!("{t}-minors of {matrix}: {} total, {} nonzero\n", ms.len(), nonzero.len());
    for m in &nonzero {
        let _ = writeln!(text, "  {m}");
    }
    let json = json!({
        "command": "minors",
        "matrix": matrix,
        "t": t,
        "minors": ms.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, json))
}

fn ideal_report(
    command: &str,
    label: String,
    i: &Ideal,
    extra: Value,
) -> Result<Output, CliError> {
    let d = krull_dim(i)?;
    let text = format!("{label} = {i}\n  height {}, dim {}\n", d.height, d.dim);
    let mut json = json!({
        "command": command,
        "ideal": ideal_json(i),
        "height": d.height,
        "dim": d.dim,
    });
    if let (Value::Object(map), Value::Object(more)) = (&mut json, extra) {
        map.extend(more);
    }
    Ok(Output::ok(text, json))
}

pub fn fitting(session: &Session, matrix: &str, i: usize) -> Result<Output, CliError> {
    let a = session.matrix(matrix)?;
    let f = fitting_ideal(a, i)?;
    ideal_report(
        "fitting",
        format!("Fitt_{i}({matrix})"),
        &f,
        json!({"matrix": matrix, "i": i}),
    )
}

pub fn rowideal(session: &Session, matrix: &str, vector: &str) -> Result<Output, CliError> {
    let a = session.matrix(matrix)?;
    let b = session.element(vector)?;
    let r = row_ideal(a, &b)?;
    ideal_report(
        "rowideal",
        format!("{vector}·{matrix}"),
        &r,
        json!({"matrix": matrix, "vector": vector}),
    )
}

pub fn orderideal(session: &Session, matrix: &str, vector: &str) -> Result<Output, CliError> {
    let psi = session.matrix(matrix)?;
    let x = session.element(vector)?;
    let o = order_ideal(psi, &x)?;
    let d = krull_dim(&o.ideal)?;
    let mut text = format!(
        "order ideal of {vector} in coker {matrix} = {}\n  height {}, dim {}\n  Hom(N, R) generators (columns):\n",
        o.ideal, d.height, d.dim
    );
    matrix_text(&mut text, &o.duals);
    if o.x_not_in_mn {
        text.push_str("  note: x is not in mN\n");
    }
    let json = json!({
        "command": "orderideal",
        "matrix": matrix,
        "vector": vector,
        "ideal": ideal_json(&o.ideal),
        "height": d.height,
        "dim": d.dim,
        "duals": matrix_json(&o.duals),
        "x_not_in_mn": o.x_not_in_mn,
    });
    Ok(Output::ok(text, json))
}

pub fn kernel_cmd(session: &Session, matrix: &str) -> Result<Output, CliError> {
    let a = session.matrix(matrix)?;
    let k = kernel(a)?;
    let mut text = format!("kernel of {matrix}: {} generators (columns)\n", k.cols());
    matrix_text(&mut text, &k);
    let json = json!({"command": "kernel", "matrix": matrix, "kernel": matrix_json(&k)});
    Ok(Output::ok(text, json))
}

pub fn sym(session: &Session, matrix: &str) -> Result<Output, CliError> {
    let a = session.matrix(matrix)?;
    let s = sym_presentation(a);
    let d = s.dimension()?;
    let cert = equidim_certificate(&s, None)?;
    let mut text = format!(
        "Sym(coker {matrix}) = {} / {}\n  dim {}, height {}\n",
        s.ring, s.defining_ideal, d.dim, d.height
    );
    let _ = writeln!(
        text,
        "  equidimensional: {}",
        cert.as_ref().map_or("not certified", |c| c.kind_name())
    );
    let json = json!({
        "command": "sym",
        "matrix": matrix,
        "ring": s.ring.to_string(),
        "t_variables": s.t_variables(),
        "defining_ideal": ideal_json(&s.defining_ideal),
        "dim": d.dim,
        "height": d.height,
        "certificate": cert,
    });
    Ok(Output::ok(text, json))
}

#[derive(Args, Debug, Default)]
pub struct CheckArgs {
    /// Bound to check: row_ideal_dim, gpit, macaulay_ee, bruns, row_ideal_height,
    /// kwiecinski, kwiecinski_refined, huneke_rossi, serre, mu_inequality.
    pub theorem: String,
    /// Presentation matrix.
    #[arg(long)]
    pub matrix: Option<String>,
    /// Row vector b, or the element x for gpit.
    #[arg(long)]
    pub vector: Option<String>,
    /// Column appended for macaulay_ee.
    #[arg(long)]
    pub column: Option<String>,
    /// Minor size for bruns and macaulay_ee.
    #[arg(long)]
    pub t: Option<usize>,
    /// Fitting index for kwiecinski and kwiecinski_refined.
    #[arg(long)]
    pub i: Option<usize>,
    /// Prime witness; `0` and `m` name (0) and the origin. Repeatable for huneke_rossi.
    #[arg(long)]
    pub prime: Vec<String>,
    /// Equidimensionality certificate; computed automatically when absent.
    #[arg(long)]
    pub cert: Option<String>,
    /// First ideal for serre.
    #[arg(long)]
    pub ideal: Option<String>,
    /// Second ideal for serre.
    #[arg(long)]
    pub ideal2: Option<String>,
}

fn need<'a>(v: &'a Option<String>, flag: &str, theorem: TheoremId) -> Result<&'a str, CliError> {
    v.as_deref()
        .ok_or_else(|| CliError::Usage(format!("{theorem} needs {flag}")))
}

fn need_num(v: Option<usize>, flag: &str, theorem: TheoremId) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{theorem} needs {flag}")))
}

fn certificate(
    session: &Session,
    a: &PolyMatrix,
    name: Option<&str>,
) -> Result<Option<EquidimCertificate>, CliError> {
    let s = sym_presentation(a);
    let Some(name) = name else {
        return Ok(equidim_certificate(&s, None)?);
    };
    match session.certificate(name)? {
        CertificateSpec::CompleteIntersection => match equidim_certificate(&s, None)? {
            Some(c) => Ok(Some(c)),
            None => Err(CliError::Algebra(ghbounds::Error::HypothesisViolated(format!(
                "certificate {name}: Sym(M) has height {} with {} generators, not a complete intersection",
                s.height()?,
                s.defining_ideal.nonzero_generators().count()
            )))),
        },
        CertificateSpec::UserAsserted { note } => Ok(equidim_certificate(&s, Some(note))?),
    }
}

fn report_exit(r: &BoundReport) -> u8 {
    if r.overall_status() == HypothesisStatus::Violated {
        4
    } else if r.failed() {
        1
    } else {
        0
    }
}

pub fn check(session: &Session, args: &CheckArgs) -> Result<Output, CliError> {
    let theorem = TheoremId::parse(&args.theorem)?;
    let matrix = || -> Result<&PolyMatrix, CliError> {
        Ok(session.matrix(need(&args.matrix, "--matrix", theorem)?)?)
    };
    let single_prime = |default: Option<&str>| -> Result<Option<checks::PrimeWitness>, CliError> {
        match (args.prime.as_slice(), default) {
            ([], None) => Ok(None),
            ([], Some(d)) => Ok(Some(session.prime(d)?)),
            ([p], _) => Ok(Some(session.prime(p)?)),
            _ => Err(CliError::Usage(format!("{theorem} takes one --prime"))),
        }
    };
    let report = match theorem {
        TheoremId::RowIdealDim => {
            let b = session.element(need(&args.vector, "--vector", theorem)?)?;
            checks::check_row_ideal_dim(matrix()?, &b)?
        }
        TheoremId::Gpit => {
            let x = session.element(need(&args.vector, "--vector", theorem)?)?;
            checks::check_gpit(matrix()?, &x)?
        }
        TheoremId::MacaulayEe => {
            let c = session.vector(need(&args.column, "--column", theorem)?)?;
            checks::check_macaulay_ee(matrix()?, c, need_num(args.t, "--t", theorem)?)?
        }
        TheoremId::Bruns => checks::check_bruns(matrix()?, need_num(args.t, "--t", theorem)?)?,
        TheoremId::RowIdealHeight => {
            let a = matrix()?;
            let b = session.element(need(&args.vector, "--vector", theorem)?)?;
            let q = single_prime(Some("0"))?.expect("defaulted");
            let cert = certificate(session, a, args.cert.as_deref())?;
            checks::check_row_ideal_height(a, &b, cert.as_ref(), &q)?
        }
        TheoremId::Kwiecinski => {
            let a = matrix()?;
            let cert = certificate(session, a, args.cert.as_deref())?;
            checks::check_kwiecinski(a, need_num(args.i, "--i", theorem)?, cert.as_ref())?
        }
        TheoremId::KwiecinskiRefined => {
            let a = matrix()?;
            let cert = certificate(session, a, args.cert.as_deref())?;
            let p = single_prime(None)?;
            checks::check_kwiecinski_refined(
                a,
                need_num(args.i, "--i", theorem)?,
                cert.as_ref(),
                p.as_ref(),
            )?
        }
        TheoremId::HunekeRossi => {
            let witnesses = args
                .prime
                .iter()
                .map(|p| session.prime(p))
                .collect::<Result<Vec<_>, _>>()?;
            checks::check_huneke_rossi(matrix()?, &witnesses)?
        }
        TheoremId::Serre => {
            let i = session.ideal(need(&args.ideal, "--ideal", theorem)?)?;
            let j = session.ideal(need(&args.ideal2, "--ideal2", theorem)?)?;
            checks::check_serre(&i, &j)?
        }
        TheoremId::MuInequality => checks::check_mu_inequality(matrix()?)?,
    };
    let mut text = report.to_string();
    if !report.holds && report.overall_status() == HypothesisStatus::Unverified {
        text.push_str("  bound fails with unverified hypotheses; not a counterexample\n");
    }
    let mut json = serde_json::to_value(&report).expect("reports serialize");
    json["summary"] = json!(report.summary());
    json["command"] = json!("check");
    Ok(Output {
        exit: report_exit(&report),
        text,
        json,
    })
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Bound to sweep.
    #[arg(long)]
    pub theorem: String,
    #[arg(long)]
    pub rows: usize,
    #[arg(long)]
    pub cols: usize,
    /// Prime characteristic of the coefficient field.
    #[arg(long = "char", default_value_t = 5)]
    pub characteristic: u32,
    /// Entry degree (exact when homogeneous, an upper bound otherwise).
    #[arg(long, default_value_t = 1)]
    pub max_deg: u32,
    /// Allow entries of every degree up to --max-deg.
    #[arg(long)]
    pub inhomogeneous: bool,
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// t for bruns and macaulay_ee (defaults 2 and cols + 1), i for the
    /// Fitting-ideal bounds (default rows).
    #[arg(long)]
    pub param: Option<usize>,
    /// Number of variables x1..xn.
    #[arg(long, default_value_t = 4)]
    pub nvars: usize,
    /// Write the per-sample CSV here; `-` for standard output.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Serialize)]
struct SweepJson<'a> {
    command: &'static str,
    #[serde(flatten)]
    result: &'a SweepResult,
}

pub fn sweep(args: &SweepArgs, limits: ResourceLimits) -> Result<Output, CliError> {
    let mut c = SweepConfig::new(TheoremId::parse(&args.theorem)?, args.rows, args.cols);
    c.characteristic = args.characteristic;
    c.max_degree = args.max_deg;
    c.homogeneous = !args.inhomogeneous;
    c.samples = args.samples;
    c.seed = args.seed;
    c.param = args.param;
    c.nvars = args.nvars;
    c.limits = limits;
    let result = checks::sweep(&c)?;
    let s = &result.summary;
    let mut text = format!(
        "sweep {} {}x{} over Fp {}, degree {} {}, {} samples, seed {}",
        c.theorem,
        c.rows,
        c.cols,
        c.characteristic,
        c.max_degree,
        if c.homogeneous { "homogeneous" } else { "inhomogeneous" },
        c.samples,
        c.seed
    );
    if let Some(p) = c.effective_param() {
        let _ = write!(text, ", param {p}");
    }
    let _ = writeln!(
        text,
        "\n  holds {}, vacuous {}, hypothesis unverified {}, hypothesis violated {}, resource limited {}",
        s.holds, s.vacuous, s.hypothesis_unverified, s.hypothesis_violated, s.resource_limited
    );
    if s.unverified_failures > 0 {
        let _ = writeln!(text, "  failures with unverified hypotheses {}", s.unverified_failures);
    }
    let hist: Vec<String> = s.slack_histogram.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    let _ = writeln!(text, "  slack histogram {{{}}}", hist.join(", "));
    match args.csv.as_deref() {
        Some(p) if p.as_os_str() == "-" => text.push_str(&result.csv),
        Some(p) => {
            std::fs::write(p, &result.csv)
                .map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            let _ = writeln!(text, "  csv written to {}", p.display());
        }
        None => {}
    }
    let json = serde_json::to_value(SweepJson {
        command: "sweep",
        result: &result,
    })
    .expect("sweep results serialize");
    Ok(Output::ok(text, json))
}
