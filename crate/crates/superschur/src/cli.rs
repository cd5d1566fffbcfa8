//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use superschur_core::verifier::{self, ScanConfig};
use superschur_core::{catalog, Error, Field, FieldKind, PrimeField, Rationals, SuperDim, Superalgebra};

use crate::any::AnyAlgebra;
use crate::presentation::{self, PresentationError};
use crate::report;
use crate::with_algebra;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "superschur", version, about = "Schur multipliers and capability of nilpotent Lie superalgebras")]
struct Cli {
    /// Emit a single JSON document instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Field to compute over: Q or F<p> (p >= 5 prime). Overrides the file's field.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldKind>,
    /// Suppress human-readable output; only the exit code and JSON remain.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Presentation file (.lsa).
    file: Option<PathBuf>,
    /// Built-in catalog entry, e.g. "(2|3)_22" or "abelian(2|2)".
    #[arg(long, conflicts_with = "file")]
    catalog: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and check the graded Jacobi identity.
    Validate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Dimensions, derived subalgebra, central series, center and nilpotency.
    Invariants(Input),
    /// Dimension of the Schur multiplier.
    Multiplier(Input),
    /// Epicenter and capability.
    Capability(Input),
    /// The defect gamma = m + 2n - 2 - dim M(L).
    Gamma(Input),
    /// List built-in presentations.
    Catalog {
        #[arg(long)]
        tag: Option<String>,
    },
    /// Recompute every tabulated multiplier dimension.
    #[command(name = "verify-table1")]
    VerifyTable1,
    /// Check the published bounds on generated nilpotent superalgebras (default field F5).
    Scan {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, num_args = 2, value_names = ["M", "N"], default_values_t = [3, 3])]
        max_dim: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
}

fn parse_field(s: &str) -> Result<FieldKind, String> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldKind::Rationals);
    }
    let digits = t.strip_prefix(['F', 'f']).unwrap_or(t).trim();
    let p: u64 = digits
        .parse()
        .map_err(|_| format!("expected Q or F<p>, got {s:?}"))?;
    FieldKind::prime(p).map_err(|e| e.to_string())
}

/// Failure classes mapped onto exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Computation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownName(_) | Error::BadField(_) => Failure::Usage(e.to_string()),
            _ => Failure::Computation(e.to_string()),
        }
    }
}

impl From<PresentationError> for Failure {
    fn from(e: PresentationError) -> Self {
        match e {
            PresentationError::Jacobi(_) | PresentationError::Table { .. } => Failure::Computation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Ctx<'a> {
    json: bool,
    quiet: bool,
    field: Option<FieldKind>,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn human(&mut self, text: &str) {
        if !self.quiet && !self.json {
            let _ = self.out.write_all(text.as_bytes());
        }
    }

    fn json(&mut self, v: &Value) {
        let _ = writeln!(self.out, "{}", serde_json::to_string_pretty(v).expect("values serialize"));
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn build_catalog(name: &str, field: Option<FieldKind>) -> Result<AnyAlgebra, Failure> {
    Ok(match field.unwrap_or(FieldKind::Rationals) {
        FieldKind::Rationals => catalog::get(name, Rationals)?.into(),
        FieldKind::Prime(p) => catalog::get(name, PrimeField::new(p)?)?.into(),
    })
}

fn load_input(input: &Input, field: Option<FieldKind>) -> Result<AnyAlgebra, Failure> {
    match (&input.file, &input.catalog) {
        (Some(path), None) => {
            let text = read(path)?;
            presentation::load(&text, field).map_err(|e| match Failure::from(e) {
                Failure::Usage(m) => Failure::Usage(format!("{}:{m}", path.display())),
                Failure::Computation(m) => Failure::Computation(format!("{}: {m}", path.display())),
            })
        }
        (None, Some(name)) => build_catalog(name, field),
        _ => Err(Failure::Usage(String::from("give either FILE or --catalog NAME"))),
    }
}

fn validate(ctx: &mut Ctx, files: &[PathBuf]) -> Result<i32, Failure> {
    let mut code = EXIT_OK;
    let mut docs = Vec::new();
    for path in files {
        let text = read(path)?;
        let outcome = presentation::load(&text, ctx.field);
        let mut doc = json!({ "path": path.display().to_string(), "valid": outcome.is_ok() });
        match outcome {
            Ok(l) => {
                doc["name"] = json!(l.name());
                doc["dims"] = json!(l.dims().to_string());
                ctx.human(&format!("{}: ok, {} {}\n", path.display(), l.name().unwrap_or("unnamed"), l.dims()));
            }
            Err(e) => {
                let failure = Failure::from(e.clone());
                code = code.max(match failure {
                    Failure::Usage(_) => EXIT_USAGE,
                    Failure::Computation(_) => EXIT_COMPUTATION,
                });
                if let PresentationError::Jacobi(j) = &e {
                    doc["witness"] = json!(j.witness);
                    doc["violations"] = json!(j.count);
                }
                doc["error"] = json!(e.to_string());
                ctx.human(&format!("{}: invalid: {e}\n", path.display()));
            }
        }
        docs.push(doc);
    }
    if ctx.json {
        ctx.json(&Value::Array(docs));
    }
    Ok(code)
}

fn dims_list<E: Clone + PartialEq>(series: &[superschur_core::GradedSubspace<E>]) -> Vec<String> {
    series.iter().map(|s| s.superdim().to_string()).collect()
}

fn invariants<F: Field>(ctx: &mut Ctx, l: &Superalgebra<F>) -> Result<i32, Failure> {
    let lcs = l.lower_central_series();
    let (even, odd) = l.component_series();
    let nilpotent = l.is_nilpotent();
    if ctx.json {
        ctx.json(&json!({
            "name": l.name(),
            "dims": l.dims().to_string(),
            "derived": l.derived().superdim().to_string(),
            "lowerCentralSeries": dims_list(&lcs),
            "evenSeries": even.iter().map(|s| s.dim()).collect::<Vec<_>>(),
            "oddSeries": odd.iter().map(|s| s.dim()).collect::<Vec<_>>(),
            "center": l.center().superdim().to_string(),
            "nilpotent": nilpotent,
            "abelian": l.is_abelian(),
        }));
    } else {
        let dims_of = |v: &[superschur_core::GradedSubspace<F::Elem>]| {
            v.iter().map(|s| s.dim().to_string()).collect::<Vec<_>>().join(" > ")
        };
        let text = report::key_values(&[
            ("algebra", format!("{} {}", l.name().unwrap_or("unnamed"), l.dims())),
            ("field", l.field().kind().to_string()),
            ("dim L^2", l.derived().superdim().to_string()),
            ("lower central series", dims_list(&lcs).join(" > ")),
            ("even series", dims_of(&even)),
            ("odd series", dims_of(&odd)),
            ("center", l.center().superdim().to_string()),
            ("nilpotent", nilpotent.to_string()),
            ("abelian", l.is_abelian().to_string()),
        ]);
        ctx.human(&text);
    }
    Ok(EXIT_OK)
}

#[derive(Clone, Copy)]
enum View {
    Multiplier,
    Capability,
    Gamma,
}

fn algebra_view<F: Field>(ctx: &mut Ctx, l: &Superalgebra<F>, view: View) -> Result<i32, Failure> {
    let r = report::algebra_report(l)?;
    if ctx.json {
        ctx.json(&report::algebra_json(&r));
    } else {
        let text = match view {
            View::Multiplier => report::multiplier_human(&r),
            View::Capability => report::capability_human(&r),
            View::Gamma => report::gamma_human(&r),
        };
        ctx.human(&text);
    }
    if matches!(view, View::Gamma) && r.gamma.is_none() {
        return Err(Failure::Computation(String::from(
            "gamma is defined only for dim L^2 = m+n-2 with m+n >= 4 and n >= 1",
        )));
    }
    Ok(EXIT_OK)
}

fn list_catalog(ctx: &mut Ctx, tag: Option<&str>) -> Result<i32, Failure> {
    let names = catalog::names(tag);
    let entries: Vec<&catalog::CatalogEntry> = names.iter().filter_map(|n| catalog::entry(n)).collect();
    if ctx.json {
        let docs: Vec<Value> = entries
            .iter()
            .map(|e| {
                json!({
                    "name": e.name,
                    "dims": e.dims.to_string(),
                    "expectedMultiplierDim": e.expected_multiplier_dim,
                    "tags": e.tags,
                })
            })
            .collect();
        ctx.json(&Value::Array(docs));
    } else {
        let rows: Vec<Vec<String>> = entries
            .iter()
            .map(|e| {
                vec![
                    e.name.to_string(),
                    e.dims.to_string(),
                    e.expected_multiplier_dim.map_or_else(|| String::from("-"), |d| d.to_string()),
                    e.tags.join(","),
                ]
            })
            .collect();
        ctx.human(&report::grid(&["name", "dims", "dim M", "tags"], &rows));
    }
    Ok(EXIT_OK)
}

fn verify_table<F: Field>(ctx: &mut Ctx, field: F) -> Result<i32, Failure> {
    let t = verifier::reproduce_table1(field)?;
    if ctx.json {
        ctx.json(&report::table_json(&t));
    } else {
        ctx.human(&report::table_human(&t));
    }
    Ok(if t.rows.iter().all(|r| r.pass) {
        EXIT_OK
    } else {
        EXIT_COMPUTATION
    })
}

fn run_scan<F: Field>(ctx: &mut Ctx, config: ScanConfig<F>) -> Result<i32, Failure> {
    let s = verifier::scan(&config);
    if ctx.json {
        ctx.json(&report::scan_json(&s));
    } else {
        ctx.human(&report::scan_human(&s));
    }
    Ok(if s.findings.is_empty() && s.errors.is_empty() {
        EXIT_OK
    } else {
        EXIT_COMPUTATION
    })
}

fn dispatch(ctx: &mut Ctx, command: Command) -> Result<i32, Failure> {
    match command {
        Command::Validate { files } => validate(ctx, &files),
        Command::Invariants(input) => {
            let l = load_input(&input, ctx.field)?;
            with_algebra!(&l, l => invariants(ctx, l))
        }
        Command::Multiplier(input) => {
            let l = load_input(&input, ctx.field)?;
            with_algebra!(&l, l => algebra_view(ctx, l, View::Multiplier))
        }
        Command::Capability(input) => {
            let l = load_input(&input, ctx.field)?;
            with_algebra!(&l, l => algebra_view(ctx, l, View::Capability))
        }
        Command::Gamma(input) => {
            let l = load_input(&input, ctx.field)?;
            with_algebra!(&l, l => algebra_view(ctx, l, View::Gamma))
        }
        Command::Catalog { tag } => list_catalog(ctx, tag.as_deref()),
        Command::VerifyTable1 => match ctx.field.unwrap_or(FieldKind::Rationals) {
            FieldKind::Rationals => verify_table(ctx, Rationals),
            FieldKind::Prime(p) => verify_table(ctx, PrimeField::new(p)?),
        },
        Command::Scan {
            seed,
            samples,
            max_dim,
            depth,
        } => {
            let max_dims = SuperDim::new(max_dim[0], max_dim[1]);
            match ctx.field.unwrap_or(FieldKind::Prime(5)) {
                FieldKind::Rationals => run_scan(
                    ctx,
                    ScanConfig {
                        field: Rationals,
                        max_dims,
                        samples,
                        seed,
                        depth,
                    },
                ),
                FieldKind::Prime(p) => run_scan(
                    ctx,
                    ScanConfig {
                        field: PrimeField::new(p)?,
                        max_dims,
                        samples,
                        seed,
                        depth,
                    },
                ),
            }
        }
    }
}

/// Runs one invocation and returns its exit code. Results go to `out`,
/// diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        quiet: cli.quiet,
        field: cli.field,
        out,
    };
    match dispatch(&mut ctx, cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Computation(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_COMPUTATION
        }
    }
}
