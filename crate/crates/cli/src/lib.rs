//! The `cobord2` command line.
//!
//! [`run`] takes the argument vector and returns the exit code with the text
//! that would go to stdout and stderr, so the binary and the tests share one
//! code path. Exit codes: 0 success, 1 domain error (message starts with the
//! error's name), 2 usage error.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use cobord2::bordism::{self, BordismError};
use cobord2::classify::{self, ClassifyError};
use cobord2::gauge::{self, GaugeError, DEFAULT_WORK_CAP};
use cobord2::group::{BuiltinGroup, FiniteGroup, GroupError};
use cobord2::io::{self, FileKind, FormatError};
use cobord2::{Algebra, ClassFunctionSpace, FrobeniusAlgebra, GroupAlgebra, Rational};

/// Environment variable overriding the brute-force work cap.
pub const WORK_CAP_VAR: &str = "COBORD2_WORK_CAP";

/// Largest group whose dense group algebra the algebraic routes will build.
pub const MAX_GROUP_ALGEBRA_ORDER: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "cobord2", version, about = "Evaluate and classify 2D topological field theories exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a bordism expression over a commutative Frobenius algebra.
    Eval {
        /// Frobenius file, or a group tag for that group's gauge theory.
        frobenius: String,
        expr: String,
    },
    /// Closed or bounded surface value of finite gauge theory.
    Dw {
        /// Group file or tag (Z4, S3, D4, Q8, ...).
        group: String,
        #[arg(long)]
        genus: u32,
        /// Count surface-group homomorphisms instead of using the class algebra.
        #[arg(long)]
        brute_force: bool,
        /// Comma-separated class indices labelling incoming boundary circles.
        #[arg(long, value_delimiter = ',')]
        boundary: Vec<usize>,
        /// Worker threads for --brute-force (default: all cores).
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Semisimplicity, center/cocenter and Morita model of an algebra.
    Classify {
        /// Algebra file, group file or tag, or one of `k`, `dual`, `M<n>`.
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Morita equivalence of two semisimple algebras.
    Morita { a: String, b: String },
    /// Conjugacy classes of a group.
    Classes { group: String },
    /// Check the standard bordism relations over a Frobenius algebra.
    Relations { frobenius: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Gauge(#[from] GaugeError),
    #[error(transparent)]
    Bordism(#[from] BordismError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Frobenius(#[from] cobord2::FrobeniusError),
    #[error("IoError: {path}: {message}")]
    Io { path: String, message: String },
    #[error("GroupTooLarge: order {order} exceeds {MAX_GROUP_ALGEBRA_ORDER} for the group-algebra route")]
    GroupTooLarge { order: usize },
    #[error("NotAGroup: `{0}` describes an algebra, not a group")]
    NotAGroup(String),
    #[error("RelationFailed: {failed} of {total} relations do not hold")]
    RelationFailed { failed: usize, total: usize },
    #[error("UsageError: {0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one command. `args` includes the program name.
pub fn run<I, S>(args: I) -> Outcome
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
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut out = String::new();
    match execute(cli.command, &mut out) {
        Ok(()) => Outcome { code: 0, stdout: out, stderr: String::new() },
        Err(e) => Outcome { code: e.exit_code(), stdout: out, stderr: format!("error: {e}\n") },
    }
}

fn work_cap() -> Result<u128, CliError> {
    match std::env::var(WORK_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("{WORK_CAP_VAR} must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_WORK_CAP),
    }
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.to_string(), message: e.to_string() })
}

enum Resolved {
    Group(FiniteGroup),
    Algebra(Algebra, Option<Vec<Rational>>),
}

fn resolve(spec: &str) -> Result<Resolved, CliError> {
    if Path::new(spec).is_file() {
        let text = read_file(spec)?;
        return match io::detect_kind(&text) {
            Some(FileKind::GroupTable | FileKind::Permutations) => Ok(Resolved::Group(io::parse_group(&text)?)),
            Some(FileKind::Algebra) => {
                let (alg, counit) = io::parse_algebra(&text)?;
                Ok(Resolved::Algebra(alg, counit))
            }
            None => Err(FormatError::Parse { line: 1, message: format!("{spec}: unrecognised file header") }.into()),
        };
    }
    if let Some(alg) = builtin_algebra(spec) {
        return Ok(Resolved::Algebra(alg, None));
    }
    Ok(Resolved::Group(BuiltinGroup::parse(spec)?.build()?))
}

fn builtin_algebra(tag: &str) -> Option<Algebra> {
    match tag {
        "k" => Some(Algebra::ground_field()),
        "dual" => Some(Algebra::dual_numbers()),
        _ => {
            let n: usize = tag.strip_prefix('M')?.parse().ok()?;
            (1..=6).contains(&n).then(|| Algebra::matrix_algebra(n))
        }
    }
}

fn resolve_group(spec: &str) -> Result<FiniteGroup, CliError> {
    match resolve(spec)? {
        Resolved::Group(g) => Ok(g),
        Resolved::Algebra(..) => Err(CliError::NotAGroup(spec.to_string())),
    }
}

fn group_algebra(group: &FiniteGroup) -> Result<GroupAlgebra, CliError> {
    if group.order() > MAX_GROUP_ALGEBRA_ORDER {
        return Err(CliError::GroupTooLarge { order: group.order() });
    }
    Ok(GroupAlgebra::new(group))
}

fn class_space(group: &FiniteGroup) -> Result<ClassFunctionSpace, CliError> {
    Ok(ClassFunctionSpace::new(group_algebra(group)?)?)
}

fn resolve_algebra(spec: &str) -> Result<Algebra, CliError> {
    match resolve(spec)? {
        Resolved::Group(g) => Ok(group_algebra(&g)?.algebra().clone()),
        Resolved::Algebra(a, _) => Ok(a),
    }
}

fn resolve_frobenius(spec: &str) -> Result<FrobeniusAlgebra, CliError> {
    match resolve(spec)? {
        Resolved::Group(g) => Ok(class_space(&g)?.center_frobenius().clone()),
        Resolved::Algebra(a, Some(counit)) => Ok(FrobeniusAlgebra::from_counit(a, counit)?),
        Resolved::Algebra(_, None) => Err(FormatError::MissingCounit.into()),
    }
}

fn group_label(group: &FiniteGroup, spec: &str) -> String {
    group.name().unwrap_or(spec).to_string()
}

fn execute(command: Command, out: &mut String) -> Result<(), CliError> {
    match command {
        Command::Eval { frobenius, expr } => {
            let f = resolve_frobenius(&frobenius)?;
            let e = bordism::parse(&expr)?;
            writeln!(out, "{}", bordism::evaluate(&e, &f)?).unwrap();
        }
        Command::Dw { group, genus, brute_force, boundary, workers } => {
            let g = resolve_group(&group)?;
            if brute_force {
                if !boundary.is_empty() {
                    return Err(CliError::Usage("--boundary cannot be combined with --brute-force".into()));
                }
                if workers == Some(0) {
                    return Err(CliError::Usage("--workers must be at least 1".into()));
                }
                let r = gauge::dw_brute_force(&g, genus, work_cap()?, workers)?;
                writeln!(out, "Z = {} (count={}, |G|={})", r.value::<Rational>(), r.count, r.group_order).unwrap();
            } else {
                let space = class_space(&g)?;
                let z = space.genus_with_boundary(genus, &boundary)?;
                writeln!(out, "Z = {z}").unwrap();
            }
        }
        Command::Classify { spec, format } => {
            let report = match resolve(&spec)? {
                Resolved::Algebra(a, Some(counit)) => classify::classify_frobenius(&FrobeniusAlgebra::from_counit(a, counit)?)?,
                Resolved::Algebra(a, None) => classify::classify(&a),
                Resolved::Group(g) => classify::classify(group_algebra(&g)?.algebra()),
            };
            match format {
                Format::Text => write!(out, "{report}").unwrap(),
                Format::Kv => write!(out, "{}", report.to_kv()).unwrap(),
            }
        }
        Command::Morita { a, b } => {
            let verdict = classify::morita_compare(&resolve_algebra(&a)?, &resolve_algebra(&b)?)?;
            writeln!(out, "{verdict}").unwrap();
        }
        Command::Classes { group } => {
            let g = resolve_group(&group)?;
            let cc = g.conjugacy_classes();
            writeln!(out, "group: {}", group_label(&g, &group)).unwrap();
            writeln!(out, "order: {}", g.order()).unwrap();
            writeln!(out, "classes: {}", cc.len()).unwrap();
            for (i, members) in cc.classes().iter().enumerate() {
                let list: Vec<String> = members.iter().map(ToString::to_string).collect();
                writeln!(out, "class {i} (size {}): {}", members.len(), list.join(" ")).unwrap();
            }
        }
        Command::Relations { frobenius } => {
            let f = resolve_frobenius(&frobenius)?;
            let results = bordism::check_standard_relations(&f)?;
            let failed = results.iter().filter(|(_, ok)| !ok).count();
            for (rel, ok) in &results {
                writeln!(out, "{:<16} {}", rel.name, if *ok { "pass" } else { "FAIL" }).unwrap();
            }
            if failed > 0 {
                return Err(CliError::RelationFailed { failed, total: results.len() });
            }
            writeln!(out, "all {} relations hold", results.len()).unwrap();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("cobord2").chain(args.iter().copied()))
    }

    #[test]
    fn dw_examples() {
        assert_eq!(run_args(&["dw", "S3", "--genus", "2"]).stdout, "Z = 81\n");
        assert_eq!(run_args(&["dw", "S3", "--genus", "2", "--brute-force"]).stdout, "Z = 81 (count=486, |G|=6)\n");
        assert_eq!(run_args(&["dw", "S3", "--genus", "0", "--boundary", "1,1"]).stdout, "Z = 1/2\n");
    }

    #[test]
    fn morita_example() {
        let o = run_args(&["morita", "S3", "Z3"]);
        assert_eq!(o.code, 0);
        assert_eq!(o.stdout, "morita-equivalent: true (center dims 3 = 3)\n");
    }

    #[test]
    fn domain_errors_exit_one_with_error_name() {
        let o = run_args(&["dw", "X9", "--genus", "1"]);
        assert_eq!(o.code, 1);
        assert!(o.stderr.starts_with("error: UnknownName"), "{}", o.stderr);
        let o = run_args(&["morita", "dual", "k"]);
        assert_eq!(o.code, 1);
        assert!(o.stderr.contains("NotSemisimple"), "{}", o.stderr);
        let o = run_args(&["eval", "S3", "cap ; pants"]);
        assert_eq!(o.code, 1);
        assert!(o.stderr.contains("ArityMismatch"), "{}", o.stderr);
        let o = run_args(&["dw", "S3", "--genus", "0", "--boundary", "7"]);
        assert!(o.stderr.contains("IndexOutOfRange"), "{}", o.stderr);
        assert_eq!(run_args(&["dw", "S5", "--genus", "1"]).code, 1);
        assert!(run_args(&["classes", "M2"]).stderr.contains("NotAGroup"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&[]).code, 2);
        assert_eq!(run_args(&["dw", "S3"]).code, 2);
        assert_eq!(run_args(&["frobnicate"]).code, 2);
        assert_eq!(run_args(&["dw", "S3", "--genus", "1", "--brute-force", "--boundary", "1"]).code, 2);
        assert_eq!(run_args(&["dw", "S3", "--genus", "1", "--brute-force", "--workers", "0"]).code, 2);
    }

    #[test]
    fn classes_listing() {
        let o = run_args(&["classes", "S3"]);
        assert_eq!(
            o.stdout,
            "group: S3\norder: 6\nclasses: 3\nclass 0 (size 1): 0\nclass 1 (size 3): 1 3 4\nclass 2 (size 2): 2 5\n"
        );
    }

    #[test]
    fn classify_kv() {
        let o = run_args(&["classify", "Q8", "--format", "kv"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("morita_model=cyclic(5)\n"));
        let o = run_args(&["classify", "dual"]);
        assert!(o.stdout.contains("morita model: none"));
    }

    #[test]
    fn eval_on_gauge_theory() {
        assert_eq!(run_args(&["eval", "S3", "cap ; cup"]).stdout, "1 1\n1/6\n");
        assert_eq!(run_args(&["eval", "S3", "cap ; copants ; pants ; cup"]).stdout, "1 1\n3\n");
    }

    #[test]
    fn relations_on_gauge_theory() {
        let o = run_args(&["relations", "Q8"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o.stdout.ends_with("all 13 relations hold\n"));
    }
}
