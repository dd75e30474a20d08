//! Command-line front end. JSON on stdout by default, `--format text` for
//! people; diagnostics go to stderr.
//!
//! Exit codes: 0 when the computation ran (whatever the verdict), 2 for
//! malformed input, 3 when an input violates a precondition.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::borel::{
    classify_tuple_capped, cross_check_capped, symbolic_generators_capped, ClassifyReport,
    CrossCheckReport, Evidence, GeneratorExport, DEFAULT_SYMBOLIC_EXPR_CAP,
};
use crate::bracket::{
    count_exprs, find_witness_where, is_very_nilpotent_basis, CountMode, Witness,
    DEFAULT_LAYER_CAP,
};
use crate::error::Error;
use crate::lie::{catalog, Element, LieAlgebra, SeriesKind, Subalgebra, TupleFile};
use crate::linalg::{format_rational, Rational};
use crate::semisimple::{
    characteristic_grading, jacobson_morozov, refute_with, Grading, RefutationOutcome,
    RefutationReport, RefuteOptions,
};

#[derive(Parser, Debug)]
#[command(name = "borel-lie", version, about = "Exact computations with iterated brackets in Lie algebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Lower,
    Derived,
}

#[derive(Args, Debug)]
struct AlgebraArg {
    /// Algebra file (JSON).
    #[arg(long)]
    algebra: PathBuf,
}

#[derive(Args, Debug)]
struct TupleArgs {
    #[command(flatten)]
    algebra: AlgebraArg,
    /// Tuple file: {"elements": [{"coords": [...]}, ...]}.
    #[arg(long)]
    tuple: PathBuf,
}

#[derive(Args, Debug)]
struct LayerCap {
    /// Abort a value closure when one layer exceeds this many values.
    #[arg(long, default_value_t = DEFAULT_LAYER_CAP)]
    layer_cap: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Jacobi identity of an algebra file.
    Validate {
        /// Algebra file (JSON).
        file: PathBuf,
    },
    /// Write a catalog algebra: sl, heisenberg, strictly_upper, borel_sl, abelian.
    Catalog {
        family: String,
        param: usize,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lower central or derived series of the algebra or of a subalgebra.
    Series {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Tuple file whose span is the (closed) subalgebra to use.
        #[arg(long)]
        within: Option<PathBuf>,
    },
    /// Common nilradical / common Borel / neither.
    Classify {
        #[command(flatten)]
        input: TupleArgs,
        /// Deepest bracket tried when looking for a non-nilpotent witness.
        #[arg(long, default_value_t = 4)]
        witness_depth: usize,
        #[command(flatten)]
        cap: LayerCap,
    },
    /// First iterated bracket of the tuple that is not ad-nilpotent.
    Witness {
        #[command(flatten)]
        input: TupleArgs,
        #[arg(long)]
        max_depth: usize,
        #[command(flatten)]
        cap: LayerCap,
    },
    /// Decide whether the tuple is a very nilpotent basis.
    VeryNilpotent {
        #[command(flatten)]
        input: TupleArgs,
        /// Depth of the corroborating witness search.
        #[arg(long)]
        check_depth: usize,
    },
    /// sl2-triple through a nilpotent element.
    Jm {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Element file: {"coords": [...]}.
        #[arg(long)]
        element: PathBuf,
    },
    /// Eigenspace grading of ad_h.
    Grading {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Element file for h.
        #[arg(long)]
        h: PathBuf,
    },
    /// Exhibit a non-nilpotent element refuting "this basis is very nilpotent".
    RefuteEngel {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Tuple file with a basis.
        #[arg(long)]
        basis: PathBuf,
        /// Depth of the direct search before descending; 0 disables it.
        #[arg(long, default_value_t = 2)]
        direct_depth: usize,
    },
    /// Number of iterated-bracket expressions.
    CountBrackets {
        #[arg(long)]
        arity: usize,
        #[arg(long)]
        depth: usize,
        /// Count expressions of depth exactly `depth` (default).
        #[arg(long, conflicts_with = "cumulative")]
        exact: bool,
        /// Count expressions of depth at most `depth`.
        #[arg(long)]
        cumulative: bool,
    },
    /// Export the invariant generators as explicit polynomials.
    GenExport {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        arity: usize,
        #[arg(long)]
        min_depth: usize,
        #[arg(long)]
        max_depth: usize,
        /// Refuse when more expressions than this would be expanded.
        #[arg(long, default_value_t = DEFAULT_SYMBOLIC_EXPR_CAP)]
        expr_cap: u64,
    },
    /// Compare the classification with invariant vanishing up to a depth.
    CrossCheck {
        #[command(flatten)]
        input: TupleArgs,
        #[arg(long)]
        depth: usize,
        #[command(flatten)]
        cap: LayerCap,
    },
}

/// An error with the input it concerns.
struct Failure {
    source: Option<String>,
    error: Error,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { source: None, error }
    }
}

fn at(path: &Path) -> impl FnOnce(Error) -> Failure + '_ {
    move |error| Failure {
        source: Some(path.display().to_string()),
        error,
    }
}

/// Attributes a computation error to the algebra file when it concerns the
/// algebra, otherwise to the element or tuple file.
fn blame<'a>(algebra: &'a Path, input: &'a Path) -> impl FnOnce(Error) -> Failure + 'a {
    move |error| {
        let path = match error {
            Error::NotSemisimple => algebra,
            _ => input,
        };
        at(path)(error)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::DimensionMismatch { .. }
        | Error::ArityMismatch { .. }
        | Error::UnknownFamily(_)
        | Error::InvalidParameter(_)
        | Error::JacobiViolation(..)
        | Error::IndexOutOfRange { .. } => 2,
        _ => 3,
    }
}

type Out = std::result::Result<String, Failure>;

/// Runs the command line `args` (program name first), writing results to
/// stdout and diagnostics to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(s) => {
            let _ = out.write_all(s.as_bytes());
            0
        }
        Err(f) => {
            let _ = match &f.source {
                Some(src) => writeln!(err, "error: {src}: {}", f.error),
                None => writeln!(err, "error: {}", f.error),
            };
            exit_code(&f.error)
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        source: Some(path.display().to_string()),
        error: Error::Parse(e.to_string()),
    })
}

fn load_algebra(path: &Path) -> std::result::Result<LieAlgebra, Failure> {
    let l = LieAlgebra::from_json(&read(path)?).map_err(at(path))?;
    if let Some(f) = l.validate().failures.first() {
        let (i, j, k) = f.triple;
        return Err(at(path)(Error::JacobiViolation(i, j, k)));
    }
    Ok(l)
}

fn load_element(l: &LieAlgebra, path: &Path) -> std::result::Result<Element, Failure> {
    let x = Element::from_json(&read(path)?).map_err(at(path))?;
    check_dim(l, &x).map_err(at(path))?;
    Ok(x)
}

fn load_tuple(l: &LieAlgebra, path: &Path) -> std::result::Result<Vec<Element>, Failure> {
    let t = TupleFile::from_json(&read(path)?).map_err(at(path))?;
    for x in &t.elements {
        check_dim(l, x).map_err(at(path))?;
    }
    Ok(t.elements)
}

fn check_dim(l: &LieAlgebra, x: &Element) -> crate::Result<()> {
    if x.dim() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: x.dim(),
        });
    }
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// `2*e - 1/2*h`, or `0`.
fn show(l: &LieAlgebra, x: &Element) -> String {
    let mut s = String::new();
    for (i, c) in x.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let neg = c.is_negative();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let a: Rational = c.abs();
        if a != Rational::from_integer(1.into()) {
            let _ = write!(s, "{}*", format_rational(&a));
        }
        s.push_str(&l.basis_labels()[i]);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn show_witness(l: &LieAlgebra, w: &Option<Witness>) -> String {
    match w {
        Some(w) => format!("{} = {} (depth {})", w.expr, show(l, &w.value), w.depth),
        None => "none".into(),
    }
}

fn dispatch(cli: &Cli) -> Out {
    let text = cli.format == Format::Text;
    match &cli.command {
        Command::Validate { file } => {
            let l = LieAlgebra::from_json(&read(file)?).map_err(at(file))?;
            let report = l.validate();
            if text {
                let mut s = String::new();
                if report.is_ok() {
                    s.push_str("jacobi: ok\n");
                } else {
                    let _ = writeln!(s, "jacobi: failed on {} triples", report.failures.len());
                    for f in &report.failures {
                        let (i, j, k) = f.triple;
                        let _ = writeln!(s, "  ({i}, {j}, {k}): {}", show(&l, &f.defect));
                    }
                }
                Ok(s)
            } else {
                Ok(to_json(&json!({
                    "jacobi": if report.is_ok() { "ok" } else { "failed" },
                    "failures": report.failures,
                })))
            }
        }
        Command::Catalog { family, param, out } => {
            let l = catalog::catalog(family, *param)?;
            let body = l.to_json();
            match out {
                Some(path) => {
                    std::fs::write(path, &body).map_err(|e| Failure {
                        source: Some(path.display().to_string()),
                        error: Error::Parse(e.to_string()),
                    })?;
                    Ok(String::new())
                }
                None => Ok(body),
            }
        }
        Command::Series { algebra, kind, within } => {
            let l = load_algebra(&algebra.algebra)?;
            let sub = match within {
                Some(p) => {
                    let t = load_tuple(&l, p)?;
                    Some(Subalgebra::span(&l, &t).map_err(at(p))?)
                }
                None => None,
            };
            let k = match kind {
                Kind::Lower => SeriesKind::LowerCentral,
                Kind::Derived => SeriesKind::Derived,
            };
            let terms = l.series(k, sub.as_ref()).map_err(at(within.as_deref().unwrap_or(&algebra.algebra)))?;
            let dims: Vec<usize> = terms.iter().map(Subalgebra::dim).collect();
            let reaches_zero = dims.last() == Some(&0);
            let kind_name = match kind {
                Kind::Lower => "lower",
                Kind::Derived => "derived",
            };
            if text {
                let d: Vec<String> = dims.iter().map(ToString::to_string).collect();
                Ok(format!(
                    "{kind_name} series dims: {}\nreaches zero: {reaches_zero}\n",
                    d.join(", ")
                ))
            } else {
                Ok(to_json(&json!({
                    "kind": kind_name,
                    "dims": dims,
                    "reaches_zero": reaches_zero,
                    "terms": terms,
                })))
            }
        }
        Command::Classify { input, witness_depth, cap } => {
            let l = load_algebra(&input.algebra.algebra)?;
            let t = load_tuple(&l, &input.tuple)?;
            let r = classify_tuple_capped(&l, &t, *witness_depth, cap.layer_cap)
                .map_err(blame(&input.algebra.algebra, &input.tuple))?;
            if text {
                Ok(classify_text(&l, &r))
            } else {
                Ok(to_json(&r))
            }
        }
        Command::Witness { input, max_depth, cap } => {
            let l = load_algebra(&input.algebra.algebra)?;
            let t = load_tuple(&l, &input.tuple)?;
            let (witness, aborted) = match find_witness_where(&l, &t, 1, *max_depth, cap.layer_cap) {
                Ok(w) => (w, None),
                Err(Error::LayerCap { depth, partial, .. }) => {
                    let sizes: Vec<usize> = partial.layers.iter().map(Vec::len).collect();
                    (None, Some((depth, sizes)))
                }
                Err(e) => return Err(at(&input.tuple)(e)),
            };
            if text {
                let mut s = format!("witness: {}\n", show_witness(&l, &witness));
                if let Some((d, _)) = &aborted {
                    let _ = writeln!(s, "search aborted at depth {d} (layer cap)");
                }
                Ok(s)
            } else {
                Ok(to_json(&json!({
                    "max_depth": max_depth,
                    "witness": witness,
                    "search_aborted_at": aborted.as_ref().map(|a| a.0),
                    "partial_layer_sizes": aborted.map(|a| a.1),
                })))
            }
        }
        Command::VeryNilpotent { input, check_depth } => {
            let l = load_algebra(&input.algebra.algebra)?;
            let t = load_tuple(&l, &input.tuple)?;
            let v = is_very_nilpotent_basis(&l, &t, *check_depth).map_err(at(&input.tuple))?;
            if text {
                Ok(format!(
                    "very nilpotent basis: {}\nbasis: {}\nalgebra nilpotent: {}\nwitness (depth <= {}): {}\n",
                    v.theorem_verdict,
                    v.is_basis,
                    v.algebra_nilpotent,
                    v.check_depth,
                    show_witness(&l, &v.witness)
                ))
            } else {
                Ok(to_json(&v))
            }
        }
        Command::Jm { algebra, element } => {
            let l = load_algebra(&algebra.algebra)?;
            let y = load_element(&l, element)?;
            let t = jacobson_morozov(&l, &y).map_err(blame(&algebra.algebra, element))?;
            if text {
                Ok(format!(
                    "y = {}\nh = {}\nf = {}\n",
                    show(&l, &t.y),
                    show(&l, &t.h),
                    show(&l, &t.f)
                ))
            } else {
                Ok(to_json(&json!({
                    "y": t.y,
                    "h": t.h,
                    "f": t.f,
                    "relations_hold": t.satisfies_relations(&l),
                })))
            }
        }
        Command::Grading { algebra, h } => {
            let l = load_algebra(&algebra.algebra)?;
            let h_path = h.as_path();
            let h = load_element(&l, h_path)?;
            let g = characteristic_grading(&l, &h).map_err(at(h_path))?;
            if text {
                Ok(grading_text(&l, &g))
            } else {
                Ok(to_json(&grading_json(&l, &g)))
            }
        }
        Command::RefuteEngel { algebra, basis, direct_depth } => {
            let l = load_algebra(&algebra.algebra)?;
            let b = load_tuple(&l, basis)?;
            let r = refute_with(
                &l,
                &b,
                RefuteOptions {
                    direct_search_depth: *direct_depth,
                },
            )
            .map_err(blame(&algebra.algebra, basis))?;
            if text {
                Ok(refute_text(&l, &r))
            } else {
                Ok(to_json(&r))
            }
        }
        Command::CountBrackets { arity, depth, exact: _, cumulative } => {
            if *arity == 0 || *depth == 0 {
                return Err(Error::InvalidParameter("arity and depth must be at least 1".into()).into());
            }
            let mode = if *cumulative { CountMode::Cumulative } else { CountMode::Exact };
            let count = count_exprs(*arity, *depth, mode);
            if text {
                Ok(format!("{count}\n"))
            } else {
                Ok(to_json(&json!({
                    "arity": arity,
                    "depth": depth,
                    "mode": if *cumulative { "cumulative" } else { "exact" },
                    "count": count.to_string(),
                    "bits": count.bits(),
                })))
            }
        }
        Command::GenExport { algebra, arity, min_depth, max_depth, expr_cap } => {
            let l = load_algebra(&algebra.algebra)?;
            let gens = symbolic_generators_capped(&l, *arity, *min_depth, *max_depth, *expr_cap)
                .map_err(at(&algebra.algebra))?;
            let export = GeneratorExport::new(&l, *arity, *min_depth, *max_depth, &gens);
            if text {
                let mut s = String::new();
                for g in &export.generators {
                    let _ = writeln!(s, "{} c{}: {}", g.expr, g.coeff_index, g.text);
                }
                Ok(s)
            } else {
                Ok(to_json(&export))
            }
        }
        Command::CrossCheck { input, depth, cap } => {
            let l = load_algebra(&input.algebra.algebra)?;
            let t = load_tuple(&l, &input.tuple)?;
            let r = cross_check_capped(&l, &t, *depth, cap.layer_cap)
                .map_err(blame(&input.algebra.algebra, &input.tuple))?;
            if text {
                Ok(cross_check_text(&l, &r))
            } else {
                Ok(to_json(&r))
            }
        }
    }
}

fn classify_text(l: &LieAlgebra, r: &ClassifyReport) -> String {
    let mut s = format!("verdict: {}\nk dim: {}\n", r.verdict.as_str(), r.k.dim());
    for (x, e) in r.k.basis().iter().zip(&r.provenance) {
        let _ = writeln!(s, "  {e} = {}", show(l, x));
    }
    match &r.evidence {
        Evidence::Nilradical { nilpotency_class } => {
            let _ = writeln!(s, "nilpotency class: {nilpotency_class}");
        }
        Evidence::BorelOnly { non_nilpotent } => {
            let _ = writeln!(s, "non-nilpotent: {}", show_witness(l, &Some(non_nilpotent.clone())));
        }
        Evidence::Neither {
            derived_series_dims,
            witness,
            witness_depth_cap,
            ..
        } => {
            let d: Vec<String> = derived_series_dims.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "derived series dims: {}", d.join(", "));
            let _ = writeln!(s, "witness (depth <= {witness_depth_cap}): {}", show_witness(l, witness));
        }
    }
    s
}

fn grading_json(l: &LieAlgebra, g: &Grading) -> Value {
    let layers: Vec<Value> = g
        .weights()
        .into_iter()
        .map(|w| {
            let layer = g.layer(w).expect("weight present");
            json!({ "weight": w, "dim": layer.dim(), "basis": layer.basis() })
        })
        .collect();
    json!({
        "h": g.h,
        "weights": g.weights(),
        "highest_weight": g.highest_weight().ok(),
        "dim": g.dim(),
        "compatible": g.is_compatible(l),
        "layers": layers,
    })
}

fn grading_text(l: &LieAlgebra, g: &Grading) -> String {
    let mut s = format!("h = {}\n", show(l, &g.h));
    for (w, d) in g.layer_dims() {
        let _ = writeln!(s, "weight {w}: dim {d}");
    }
    if let Ok(top) = g.highest_weight() {
        let _ = writeln!(s, "highest weight: {top}");
    }
    s
}

fn refute_text(l: &LieAlgebra, r: &RefutationReport) -> String {
    let mut s = String::new();
    for t in &r.trace {
        let _ = writeln!(
            s,
            "level {}: dim {}, highest weight {}, k dim {}, non-nilpotent x: {}",
            t.level,
            t.algebra_dim,
            t.highest_weight,
            t.k_dim,
            t.non_nilpotent_x.len()
        );
    }
    match &r.outcome {
        RefutationOutcome::DirectWitness { expr, value } => {
            let _ = writeln!(s, "direct witness: {expr} = {}", show(l, value));
        }
        RefutationOutcome::StructuralContradiction { non_nilpotent_central, level } => {
            let _ = writeln!(
                s,
                "central element at level {level}: {}",
                show(l, non_nilpotent_central)
            );
        }
        RefutationOutcome::NonNilpotentDescendant { element, level, index } => {
            let _ = writeln!(
                s,
                "basis element {index} at level {level}: {}",
                show(l, element)
            );
        }
    }
    s
}

fn cross_check_text(l: &LieAlgebra, r: &CrossCheckReport) -> String {
    let status = serde_json::to_value(r.status).expect("serializable");
    format!(
        "verdict: {}\nstatus: {}\ndepth: {}\ndepth-1 violation: {}\ndeeper violation: {}\n",
        r.verdict.as_str(),
        status.as_str().unwrap_or_default(),
        r.depth,
        show_witness(l, &r.depth_one_violation),
        show_witness(l, &r.deep_violation)
    )
}
