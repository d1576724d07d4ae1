//! Command-line front end. Exit codes: 0 success/valid, 1 well-formed input
//! that is not an ω-deformed Lie algebra (or not deformable), 2 parse or
//! usage error.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num::Zero;
use serde_json::{json, Value};

use crate::algebra::{AlgebraSpec, ResidualTensor};
use crate::classify::{
    classify_with_tolerance, generate, orbit_sample, orbit_transform, BianchiType, NormalForm,
};
use crate::decomp3d::{decompose, forced_b, reconstruct, t_vector, NabTriple};
use crate::decomp_nd::{deformability, induced_omega, split_trace};
use crate::document::{parse, AlgebraDocument};
use crate::error::Error;
use crate::scalar::{format_scalar, int, parse_scalar, Scalar};
use crate::tensor::Matrix;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "omega-lie",
    version,
    about = "Exact tools for omega-deformed Lie algebras"
)]
pub struct Cli {
    /// Emit a machine-readable JSON report
    #[arg(long, global = true)]
    pub json: bool,

    /// Tolerance for float comparisons in normal forms
    #[arg(long, global = true, default_value_t = crate::classify::DEFAULT_TOLERANCE)]
    pub float_tol: f64,

    /// Replace the supplied 2-form by the one forced by the bracket
    #[arg(long, global = true)]
    pub force_omega: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the deformed Jacobi identity
    Validate { file: Option<PathBuf> },
    /// Dimension 3: split into (n, a, b)
    Decompose { file: Option<PathBuf> },
    /// Dimension 3: Bianchi-style normal form
    Classify { file: Option<PathBuf> },
    /// Canonical document of a table row
    Generate {
        label: String,
        #[arg(long)]
        param: Option<String>,
    },
    /// Both classification tables as documents
    Tables,
    /// Table algebra in a pseudorandom basis
    OrbitSample {
        label: String,
        #[arg(long)]
        param: Option<String>,
        #[arg(long)]
        seed: u64,
    },
    /// Dimension >= 3: the forced 2-form, if the bracket admits one
    Deformability { file: Option<PathBuf> },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: String) -> Self {
        Self {
            code: 2,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Parses `args` (including the program name) and runs the command. `stdin`
/// is read when a FILE argument is omitted or `-`.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome::usage(text)
            };
        }
    };
    let ctx = Context {
        json: cli.json,
        tol: cli.float_tol,
        force: cli.force_omega,
    };
    let result = match &cli.command {
        Command::Validate { file } => load(file, stdin).and_then(|s| ctx.validate(s)),
        Command::Decompose { file } => load(file, stdin).and_then(|s| ctx.decompose(s)),
        Command::Classify { file } => load(file, stdin).and_then(|s| ctx.classify(s)),
        Command::Generate { label, param } => ctx.generate(label, param.as_deref()),
        Command::Tables => ctx.tables(),
        Command::OrbitSample { label, param, seed } => ctx.orbit(label, param.as_deref(), *seed),
        Command::Deformability { file } => load(file, stdin).and_then(|s| ctx.deformability(s)),
    };
    result.unwrap_or_else(|e| Outcome::usage(format!("error: {e}\n")))
}

fn load(file: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<AlgebraSpec, Error> {
    let text = match file {
        Some(path) if path.as_os_str() != "-" => {
            std::fs::read_to_string(path).map_err(|e| Error::Syntax {
                line: 0,
                column: 0,
                message: format!("{}: {e}", path.display()),
            })?
        }
        _ => {
            let mut buf = String::new();
            stdin.read_to_string(&mut buf).map_err(|e| Error::Syntax {
                line: 0,
                column: 0,
                message: format!("stdin: {e}"),
            })?;
            buf
        }
    };
    parse(&text)
}

struct Context {
    json: bool,
    tol: f64,
    force: bool,
}

fn s(x: &Scalar) -> String {
    format_scalar(x)
}

fn vec_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(s(x))).collect())
}

fn vec_text(v: &[Scalar]) -> String {
    format!("({})", v.iter().map(s).collect::<Vec<_>>().join(", "))
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.dim()).map(|i| vec_json(m.row(i))).collect())
}

fn matrix_text(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.dim()).map(|i| vec_text(m.row(i))).collect();
    format!("[{}]", rows.join(", "))
}

fn float_matrix_json(m: &Matrix<f64>) -> Value {
    json!((0..m.dim()).map(|i| m.row(i).to_vec()).collect::<Vec<_>>())
}

fn residual_components(r: &ResidualTensor) -> Vec<(String, Scalar)> {
    r.nonzero_components()
        .into_iter()
        .map(|([m, l, j, k], v)| (format!("R^{}_{}{}{}", m + 1, l + 1, j + 1, k + 1), v))
        .collect()
}

fn nab_json(t: &NabTriple) -> Value {
    json!({ "n": matrix_json(t.n()), "a": vec_json(t.a()), "b": vec_json(t.b()) })
}

fn parse_label(label: &str, param: Option<&str>) -> Result<(BianchiType, Option<Scalar>), Error> {
    let kind: BianchiType = label.parse()?;
    let param = param.map(parse_scalar).transpose()?;
    Ok((kind, param))
}

impl Context {
    fn emit(&self, code: i32, report: Value, text: String) -> Outcome {
        let stdout = if self.json {
            let mut report = report;
            report["schema_version"] = json!(SCHEMA_VERSION);
            format!(
                "{}\n",
                serde_json::to_string_pretty(&report).expect("report serializes")
            )
        } else {
            text
        };
        Outcome::with_code(code, stdout)
    }

    /// Applies `--force-omega`.
    fn prepare(&self, spec: AlgebraSpec) -> Result<AlgebraSpec, Error> {
        if !self.force || spec.dim() < 3 {
            return Ok(spec);
        }
        let omega = induced_omega(&split_trace(&spec)?)?;
        spec.with_omega(omega)
    }

    fn validate(&self, spec: AlgebraSpec) -> Result<Outcome, Error> {
        let spec = self.prepare(spec)?;
        let residual = spec.residual()?;
        let valid = residual.is_zero();
        let components = residual_components(&residual);
        let mut report = json!({
            "command": "validate",
            "dim": spec.dim(),
            "valid": valid,
            "residual": components.iter().map(|(k, v)| json!({ "component": k, "value": s(v) })).collect::<Vec<_>>(),
        });
        let mut text = format!("dim: {}\nvalid: {valid}\n", spec.dim());
        if spec.dim() == 3 {
            let t = t_vector(&decompose(&spec)?);
            report["t"] = vec_json(&t);
            text.push_str(&format!("t: {}\n", vec_text(&t)));
        }
        for (k, v) in &components {
            text.push_str(&format!("{k} = {}\n", s(v)));
        }
        Ok(self.emit(if valid { 0 } else { 1 }, report, text))
    }

    fn decompose(&self, spec: AlgebraSpec) -> Result<Outcome, Error> {
        let spec = self.prepare(spec)?;
        let triple = decompose(&spec)?;
        let t = t_vector(&triple);
        let forced = forced_b(triple.n(), triple.a());
        let valid = triple.is_consistent();
        let mut report = nab_json(&triple);
        report["command"] = json!("decompose");
        report["t"] = vec_json(&t);
        report["forced_b"] = vec_json(&forced);
        report["valid"] = json!(valid);
        let text = format!(
            "n: {}\na: {}\nb: {}\nt: {}\nforced b = -2 n a: {}\nvalid: {valid}\n",
            matrix_text(triple.n()),
            vec_text(triple.a()),
            vec_text(triple.b()),
            vec_text(&t),
            vec_text(&forced),
        );
        Ok(self.emit(if valid { 0 } else { 1 }, report, text))
    }

    fn classify(&self, spec: AlgebraSpec) -> Result<Outcome, Error> {
        let spec = self.prepare(spec)?;
        match classify_with_tolerance(&spec, self.tol) {
            Ok(nf) => Ok(self.classification_report(&nf)),
            Err(Error::NotAnAlgebra { t }) => {
                let report = json!({ "command": "classify", "valid": false, "t": vec_json(&t) });
                let text = format!("valid: false\nt: {}\n", vec_text(&t));
                Ok(self.emit(1, report, text))
            }
            Err(e) => Err(e),
        }
    }

    fn classification_report(&self, nf: &NormalForm) -> Outcome {
        let kind = nf.label.kind;
        let row = kind.row();
        let cert = &nf.certificates;
        let report = json!({
            "command": "classify",
            "valid": true,
            "label": kind.name(),
            "parameter": nf.label.parameter,
            "decomposition": nab_json(&nf.decomposition),
            "residual": { "t": ["0", "0", "0"] },
            "certificates": {
                "inertia": [cert.inertia.positive, cert.inertia.negative, cert.inertia.zero],
                "a_zero": cert.a_zero,
                "causal": cert.causal.to_string(),
                "invariant": cert.invariant.as_ref().map(s),
            },
            "table_row": {
                "label": kind.name(),
                "n": row.n,
                "a": row.a,
                "b": row.forced_b(),
                "parametric": kind.is_parametric(),
                "b_certificate": "b = -2 n a",
            },
            "transform": float_matrix_json(&nf.transform),
            "warnings": nf.warnings,
        });
        let mut text = format!("label: {}\n", nf.label);
        text.push_str(&format!(
            "table row: n = {:?}, a = {:?}{}, b = {:?}{} (b = -2 n a)\n",
            row.n,
            row.a,
            if kind.is_parametric() { "*a" } else { "" },
            row.forced_b(),
            if kind.is_parametric() { "*a" } else { "" },
        ));
        text.push_str(&format!(
            "input: n = {}, a = {}, b = {}\n",
            matrix_text(nf.decomposition.n()),
            vec_text(nf.decomposition.a()),
            vec_text(nf.decomposition.b()),
        ));
        text.push_str(&format!(
            "certificates: inertia {}, a {}, {}\n",
            cert.inertia,
            if cert.a_zero { "zero" } else { "nonzero" },
            cert.causal
        ));
        if let Some(inv) = &cert.invariant {
            text.push_str(&format!(
                "invariant (exact, |value| = parameter^2): {}\n",
                s(inv)
            ));
        }
        text.push_str(&format!("transform: {:?}\n", nf.transform));
        for w in &nf.warnings {
            text.push_str(&format!("warning: {w}\n"));
        }
        self.emit(0, report, text)
    }

    fn generate(&self, label: &str, param: Option<&str>) -> Result<Outcome, Error> {
        let (kind, param) = parse_label(label, param)?;
        let spec = generate(kind, param.as_ref())?;
        let mut doc = AlgebraDocument::from_spec(&spec)?.with_metadata("label", kind.name());
        if let Some(p) = &param {
            doc = doc.with_metadata("parameter", s(p));
        }
        Ok(Outcome::ok(doc.to_json()))
    }

    fn orbit(&self, label: &str, param: Option<&str>, seed: u64) -> Result<Outcome, Error> {
        let (kind, param) = parse_label(label, param)?;
        let spec = orbit_sample(kind, param.as_ref(), seed)?;
        let mut doc = AlgebraDocument::from_spec(&spec)?
            .with_metadata("label", kind.name())
            .with_metadata("seed", seed.to_string())
            .with_metadata("transform", matrix_text(&orbit_transform(seed)));
        if let Some(p) = &param {
            doc = doc.with_metadata("parameter", s(p));
        }
        Ok(Outcome::ok(doc.to_json()))
    }

    fn tables(&self) -> Result<Outcome, Error> {
        let tables = [
            ("a = 0", &BianchiType::A_ZERO_TABLE[..]),
            ("a != 0", &BianchiType::A_NONZERO_TABLE[..]),
        ];
        let mut json_tables = Vec::new();
        let mut grid =
            String::from("type      n            a            b            omega-deformed\n");
        let mut docs = String::new();
        for (name, kinds) in tables {
            let mut rows = Vec::new();
            for &kind in kinds {
                let param = kind.is_parametric().then(|| int(1));
                let triple = crate::classify::table_triple(kind, param.as_ref())?;
                let spec = reconstruct(&triple);
                let mut doc =
                    AlgebraDocument::from_spec(&spec)?.with_metadata("label", kind.name());
                if kind.is_parametric() {
                    doc = doc.with_metadata("parameter", "1");
                }
                let row = kind.row();
                let suffix = if kind.is_parametric() { "*a" } else { "" };
                grid.push_str(&format!(
                    "{:<9} {:<12} {:<12} {:<12} {}\n",
                    kind.name(),
                    format!("{:?}", row.n),
                    format!("{:?}{suffix}", row.a),
                    format!("{:?}{suffix}", row.forced_b()),
                    if kind.is_deformed() { "yes" } else { "no" },
                ));
                docs.push_str(&format!("# {name}: {}\n{}", kind.name(), doc.to_json()));
                rows.push(json!({
                    "label": kind.name(),
                    "n": row.n,
                    "a": row.a,
                    "b": row.forced_b(),
                    "parametric": kind.is_parametric(),
                    "parameter_note": if kind.is_parametric() { "document emitted at a = 1; a and b scale with a > 0" } else { "" },
                    "deformed": kind.is_deformed(),
                    "document": serde_json::to_value(&doc).expect("document serializes"),
                }));
            }
            json_tables.push(json!({ "name": name, "rows": rows }));
        }
        let report = json!({ "command": "tables", "tables": json_tables });
        Ok(self.emit(0, report, format!("{grid}\n{docs}")))
    }

    fn deformability(&self, spec: AlgebraSpec) -> Result<Outcome, Error> {
        let (code, candidate, deformable) = match deformability(&spec) {
            Ok(w) => (0, w, true),
            Err(Error::NotDeformable { candidate }) => (1, candidate, false),
            Err(e) => return Err(e),
        };
        let entries: Vec<(String, Scalar)> = (0..spec.dim())
            .flat_map(|i| (i + 1..spec.dim()).map(move |j| (i, j)))
            .filter(|&(i, j)| !candidate[(i, j)].is_zero())
            .map(|(i, j)| {
                (
                    format!("omega_{}{}", i + 1, j + 1),
                    candidate[(i, j)].clone(),
                )
            })
            .collect();
        let report = json!({
            "command": "deformability",
            "dim": spec.dim(),
            "deformable": deformable,
            "omega": entries.iter().map(|(k, v)| json!({ "component": k, "value": s(v) })).collect::<Vec<_>>(),
        });
        let mut text = format!("deformable: {deformable}\nforced omega:");
        if entries.is_empty() {
            text.push_str(" 0");
        }
        text.push('\n');
        for (k, v) in &entries {
            text.push_str(&format!("  {k} = {}\n", s(v)));
        }
        Ok(self.emit(code, report, text))
    }
}
