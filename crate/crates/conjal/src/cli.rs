//! Command surface of the `conjal` binary. Commands are plain data so tests
//! can execute them in process and compare outputs bit-exactly; the binary
//! is a thin argv adapter.
//!
//! Exit codes: 0 success, 1 domain errors (not invertible, root of a
//! denominator, ...), 2 usage and parse errors. Errors render on stderr
//! with the stable prefix `ERR:<CODE>`.

use crate::algebra::{catalog, validate_algebra, AlgebraSpec, CATALOG_NAMES};
use crate::error::{Error, Result};
use crate::fractions::{classify, invert, left_fraction, right_fraction, ClassTag};
use crate::ideal::{poly_ideal_membership, principal_membership, IdealSide};
use crate::parse::{
    compile_mixed, compile_poly, compile_rational, eval_at_point, eval_element, parse_expr,
};
use crate::rational::reval;
use crate::scalar::ScalarRing;
use crate::suite::{all_passed, run_all, SuiteOutcome};
use std::sync::Arc;

/// Ambient algebra reference: a catalog name or a spec-file path, plus the
/// coefficient ring for catalog entries (files carry their own ring).
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraRef {
    pub name_or_path: String,
    pub ring: ScalarRing,
}

impl AlgebraRef {
    pub fn catalog(name: &str) -> AlgebraRef {
        AlgebraRef { name_or_path: name.into(), ring: ScalarRing::Rationals }
    }

    fn resolve(&self) -> Result<Arc<AlgebraSpec>> {
        if CATALOG_NAMES.contains(&self.name_or_path.replace('-', "_").as_str()) {
            return catalog(&self.name_or_path, self.ring);
        }
        let path = std::path::Path::new(&self.name_or_path);
        if path.exists() {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", self.name_or_path)))?;
            return AlgebraSpec::from_json(&text);
        }
        Err(Error::UnknownAlgebra(self.name_or_path.clone()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    /// Load a spec file, run the axiom checks, report.
    Check { spec_path: String },
    Eval { algebra: AlgebraRef, expr: String },
    Classify { algebra: AlgebraRef, expr: String },
    Invert { algebra: AlgebraRef, expr: String },
    Norm { algebra: AlgebraRef, expr: String },
    /// Left fraction a^-1 b.
    LFrac { algebra: AlgebraRef, a: String, b: String },
    /// Right fraction b a^-1.
    RFrac { algebra: AlgebraRef, b: String, a: String },
    PolyEval { algebra: AlgebraRef, poly: String, point: String },
    REval { algebra: AlgebraRef, expr: String, point: String },
    IdealMember {
        algebra: AlgebraRef,
        side: IdealSide,
        generator: String,
        element: String,
        degree_bound: Option<usize>,
    },
    Suite { only: Option<String> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { exit: 0, stdout, stderr: String::new() }
    }

    fn err(e: &Error) -> Outcome {
        Outcome {
            exit: e.exit_class(),
            stdout: String::new(),
            stderr: format!("ERR:{} {e}\n", e.code()),
        }
    }
}

pub fn run(cmd: &Command) -> Outcome {
    match execute(cmd) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::err(&e),
    }
}

fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Check { spec_path } => {
            let text = std::fs::read_to_string(spec_path)
                .map_err(|e| Error::Io(format!("{spec_path}: {e}")))?;
            let alg = AlgebraSpec::from_json(&text)?;
            let report = validate_algebra(&alg);
            let mut out = String::new();
            out.push_str(&format!("algebra: {}\n", alg.name()));
            out.push_str(&format!("dim: {}\n", alg.dim()));
            out.push_str(&format!("scalar: {}\n", alg.scalar()));
            let flag = |b: bool| if b { "pass" } else { "FAIL" };
            out.push_str(&format!("unit axiom: {}\n", flag(report.unit_ok)));
            out.push_str(&format!("involution: {}\n", flag(report.involution_ok)));
            out.push_str(&format!(
                "anti-homomorphism: {}\n",
                flag(report.anti_homomorphism_ok)
            ));
            out.push_str(&format!("norm scalarity: {}\n", flag(report.norm_scalar_ok)));
            out.push_str(&format!(
                "associative: {}\n",
                if report.associative { "yes" } else { "no" }
            ));
            for f in &report.failures {
                out.push_str(&format!("  detail: {f}\n"));
            }
            if report.passed() {
                out.push_str("result: VALID\n");
                Ok(Outcome::ok(out))
            } else {
                out.push_str("result: INVALID\n");
                Ok(Outcome {
                    exit: 1,
                    stdout: out,
                    stderr: "ERR:INVALID_SPEC algebra axioms failed\n".into(),
                })
            }
        }
        Command::Eval { algebra, expr } => {
            let alg = algebra.resolve()?;
            let value = eval_element(&parse_expr(expr, &alg)?, &alg)?;
            Ok(Outcome::ok(format!("{value}\n")))
        }
        Command::Classify { algebra, expr } => {
            let alg = algebra.resolve()?;
            let value = eval_element(&parse_expr(expr, &alg)?, &alg)?;
            let class = classify(&value);
            let line = match (class.tag, &class.witness) {
                (ClassTag::ZeroDivisor, Some(w)) => format!("ZeroDivisor witness={w}\n"),
                (tag, _) => format!("{tag}\n"),
            };
            Ok(Outcome::ok(line))
        }
        Command::Invert { algebra, expr } => {
            let alg = algebra.resolve()?;
            let value = eval_element(&parse_expr(expr, &alg)?, &alg)?;
            let inv = invert(&value)?;
            Ok(Outcome::ok(format!("{inv}\n")))
        }
        Command::Norm { algebra, expr } => {
            let alg = algebra.resolve()?;
            let value = eval_element(&parse_expr(expr, &alg)?, &alg)?;
            Ok(Outcome::ok(format!("{}\n", value.norm_form()?)))
        }
        Command::LFrac { algebra, a, b } => {
            let alg = algebra.resolve()?;
            let a = eval_element(&parse_expr(a, &alg)?, &alg)?;
            let b = eval_element(&parse_expr(b, &alg)?, &alg)?;
            Ok(Outcome::ok(format!("{}\n", left_fraction(&a, &b)?)))
        }
        Command::RFrac { algebra, b, a } => {
            let alg = algebra.resolve()?;
            let b = eval_element(&parse_expr(b, &alg)?, &alg)?;
            let a = eval_element(&parse_expr(a, &alg)?, &alg)?;
            Ok(Outcome::ok(format!("{}\n", right_fraction(&b, &a)?)))
        }
        Command::PolyEval { algebra, poly, point } => {
            let alg = algebra.resolve()?;
            let ast = parse_expr(poly, &alg)?;
            let v = eval_element(&parse_expr(point, &alg)?, &alg)?;
            let value = if alg.is_associative() {
                compile_mixed(&ast, &alg)?.eval(&v)?
            } else {
                // nonassociative ambients evaluate the parse tree directly
                eval_at_point(&ast, &v)?
            };
            Ok(Outcome::ok(format!("{value}\n")))
        }
        Command::REval { algebra, expr, point } => {
            let alg = algebra.resolve()?;
            let rational = compile_rational(&parse_expr(expr, &alg)?, &alg)?;
            let v = eval_element(&parse_expr(point, &alg)?, &alg)?;
            let value = reval(&rational, &v)?;
            let mut outcome = Outcome::ok(format!("{value}\n"));
            if rational.degenerate_warning() {
                outcome.stderr.push_str(
                    "WARN:DEGENERATE_GENERATOR a denominator never leaves the zero set on sampled points\n",
                );
            }
            Ok(outcome)
        }
        Command::IdealMember { algebra, side, generator, element, degree_bound } => {
            let alg = algebra.resolve()?;
            let gen_ast = parse_expr(generator, &alg)?;
            let elem_ast = parse_expr(element, &alg)?;
            let mentions_var = |src: &str| src.contains('x');
            let mut out = String::new();
            if mentions_var(generator) || mentions_var(element) {
                let g = compile_poly(&gen_ast, &alg)?;
                let p = compile_poly(&elem_ast, &alg)?;
                let bound = degree_bound.unwrap_or_else(|| p.degree().max(g.degree()));
                match poly_ideal_membership(*side, &g, &p, bound)? {
                    Some(cert) => {
                        out.push_str("member: true\n");
                        out.push_str(&format!("certificate: {}\n", cert.render()));
                    }
                    None => out.push_str("member: false\n"),
                }
            } else {
                let g = eval_element(&gen_ast, &alg)?;
                let b = eval_element(&elem_ast, &alg)?;
                match principal_membership(*side, &g, &b)? {
                    Some(cert) => {
                        out.push_str("member: true\n");
                        out.push_str(&format!("certificate: {}\n", cert.render(&alg)));
                    }
                    None => out.push_str("member: false\n"),
                }
            }
            Ok(Outcome::ok(out))
        }
        Command::Suite { only } => {
            let seed = match std::env::var("CONJAL_SEED") {
                Ok(text) => text
                    .parse::<u64>()
                    .map_err(|_| Error::Usage(format!("bad CONJAL_SEED {text:?}")))?,
                Err(_) => 0,
            };
            let outcomes = run_all(seed, only.as_deref())?;
            Ok(render_suites(&outcomes, seed))
        }
    }
}

fn render_suites(outcomes: &[SuiteOutcome], seed: u64) -> Outcome {
    let mut out = String::new();
    out.push_str(&format!("seed: {seed}\n"));
    for o in outcomes {
        out.push_str(&format!(
            "{:<22} {}  ({} cases)\n",
            o.name,
            if o.passed { "PASS" } else { "FAIL" },
            o.cases
        ));
        for f in &o.failures {
            out.push_str(&format!("  fail: {f}\n"));
        }
        for n in &o.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    out.push_str(&format!(
        "suite result: {} ({passed}/{} passed)\n",
        if all_passed(outcomes) { "PASS" } else { "FAIL" },
        outcomes.len()
    ));
    Outcome {
        exit: if all_passed(outcomes) { 0 } else { 1 },
        stdout: out,
        stderr: String::new(),
    }
}

// ---------------------------------------------------------------------------
// argv adapter
// ---------------------------------------------------------------------------

pub const USAGE: &str = "\
conjal - exact kernel for algebras with conjugation

usage:
  conjal check <spec.json>
  conjal eval     -a <algebra> [--ring Z|Q|Z/<n>] <expr>
  conjal classify -a <algebra> [--ring ...] <expr>
  conjal invert   -a <algebra> [--ring ...] <expr>
  conjal norm     -a <algebra> [--ring ...] <expr>
  conjal lfrac    -a <algebra> [--ring ...] <a> <b>     # a^-1 b
  conjal rfrac    -a <algebra> [--ring ...] <b> <a>     # b a^-1
  conjal polyeval -a <algebra> [--ring ...] <poly> <point>
  conjal reval    -a <algebra> [--ring ...] <expr> <point>
  conjal ideal member -a <algebra> [--ring ...] --side left|right|two-sided \\
         --gen <expr> --elem <expr> [--deg <k>]
  conjal suite [--only <name>]

<algebra> is a catalog name (complex, split_complex, dual, quaternion,
split_quaternion, octonion) or a path to a spec file; the ring defaults
to Q. Expressions use: + - *, '~e' for conjugation, 'x' for the variable,
'~x' for the conjugated variable, 'inv(p)' in reval, scalar literals
(-3, 1/2 over Q), and the ambient basis names (i, j, k, e0..e7).
CONJAL_SEED overrides the property-suite seed (default 0).
";

struct Args {
    positional: Vec<String>,
    algebra: Option<String>,
    ring: Option<String>,
    side: Option<String>,
    generator: Option<String>,
    element: Option<String>,
    degree: Option<String>,
    only: Option<String>,
    help: bool,
}

fn collect_args(args: impl Iterator<Item = String>) -> Result<Args> {
    let mut out = Args {
        positional: Vec::new(),
        algebra: None,
        ring: None,
        side: None,
        generator: None,
        element: None,
        degree: None,
        only: None,
        help: false,
    };
    let mut iter = args.peekable();
    while let Some(arg) = iter.next() {
        let take = |slot: &mut Option<String>, name: &str, value: Option<String>| match value {
            Some(v) => {
                *slot = Some(v);
                Ok(())
            }
            None => Err(Error::Usage(format!("missing value for {name}"))),
        };
        match arg.as_str() {
            "-h" | "--help" => out.help = true,
            "-a" | "--algebra" => take(&mut out.algebra, &arg, iter.next())?,
            "--ring" => take(&mut out.ring, &arg, iter.next())?,
            "--side" => take(&mut out.side, &arg, iter.next())?,
            "--gen" => take(&mut out.generator, &arg, iter.next())?,
            "--elem" => take(&mut out.element, &arg, iter.next())?,
            "--deg" => take(&mut out.degree, &arg, iter.next())?,
            "--only" => take(&mut out.only, &arg, iter.next())?,
            other if other.starts_with("--") => {
                return Err(Error::Usage(format!("unknown flag {other}")));
            }
            _ => out.positional.push(arg),
        }
    }
    Ok(out)
}

fn algebra_ref(args: &Args) -> Result<AlgebraRef> {
    let name = args
        .algebra
        .clone()
        .ok_or_else(|| Error::Usage("missing -a <algebra>".into()))?;
    let ring = match &args.ring {
        Some(text) => ScalarRing::parse(text)
            .map_err(|_| Error::Usage(format!("bad --ring {text:?} (use Z, Q or Z/<n>)")))?,
        None => ScalarRing::Rationals,
    };
    Ok(AlgebraRef { name_or_path: name, ring })
}

fn positional<'a>(args: &'a Args, index: usize, what: &str) -> Result<&'a String> {
    args.positional
        .get(index)
        .ok_or_else(|| Error::Usage(format!("missing {what}")))
}

/// Parses an argv tail (without the program name) into a command.
pub fn parse_args(args: impl Iterator<Item = String>) -> Result<Option<Command>> {
    let args = collect_args(args)?;
    if args.help || args.positional.is_empty() {
        return Ok(None);
    }
    let sub = args.positional[0].as_str();
    let cmd = match sub {
        "check" => Command::Check { spec_path: positional(&args, 1, "spec file path")?.clone() },
        "eval" => Command::Eval {
            algebra: algebra_ref(&args)?,
            expr: positional(&args, 1, "an expression")?.clone(),
        },
        "classify" => Command::Classify {
            algebra: algebra_ref(&args)?,
            expr: positional(&args, 1, "an expression")?.clone(),
        },
        "invert" => Command::Invert {
            algebra: algebra_ref(&args)?,
            expr: positional(&args, 1, "an expression")?.clone(),
        },
        "norm" => Command::Norm {
            algebra: algebra_ref(&args)?,
            expr: positional(&args, 1, "an expression")?.clone(),
        },
        "lfrac" => Command::LFrac {
            algebra: algebra_ref(&args)?,
            a: positional(&args, 1, "the denominator a")?.clone(),
            b: positional(&args, 2, "the numerator b")?.clone(),
        },
        "rfrac" => Command::RFrac {
            algebra: algebra_ref(&args)?,
            b: positional(&args, 1, "the numerator b")?.clone(),
            a: positional(&args, 2, "the denominator a")?.clone(),
        },
        "polyeval" => Command::PolyEval {
            algebra: algebra_ref(&args)?,
            poly: positional(&args, 1, "a polynomial expression")?.clone(),
            point: positional(&args, 2, "a point expression")?.clone(),
        },
        "reval" => Command::REval {
            algebra: algebra_ref(&args)?,
            expr: positional(&args, 1, "a rational expression")?.clone(),
            point: positional(&args, 2, "a point expression")?.clone(),
        },
        "ideal" => {
            if args.positional.get(1).map(String::as_str) != Some("member") {
                return Err(Error::Usage("expected: ideal member ...".into()));
            }
            let side = match args.side.as_deref() {
                Some("left") | None => IdealSide::Left,
                Some("right") => IdealSide::Right,
                Some("two-sided") | Some("twosided") | Some("two_sided") => IdealSide::TwoSided,
                Some(other) => {
                    return Err(Error::Usage(format!(
                        "bad --side {other:?} (left, right or two-sided)"
                    )));
                }
            };
            let degree_bound = match &args.degree {
                Some(text) => Some(
                    text.parse::<usize>()
                        .map_err(|_| Error::Usage(format!("bad --deg {text:?}")))?,
                ),
                None => None,
            };
            Command::IdealMember {
                algebra: algebra_ref(&args)?,
                side,
                generator: args
                    .generator
                    .clone()
                    .ok_or_else(|| Error::Usage("missing --gen <expr>".into()))?,
                element: args
                    .element
                    .clone()
                    .ok_or_else(|| Error::Usage("missing --elem <expr>".into()))?,
                degree_bound,
            }
        }
        "suite" => Command::Suite { only: args.only.clone() },
        other => return Err(Error::Usage(format!("unknown command {other:?}"))),
    };
    Ok(Some(cmd))
}

/// Entry point used by the binary: parse, run, print, exit code.
pub fn main_entry(args: impl Iterator<Item = String>) -> i32 {
    match parse_args(args) {
        Ok(None) => {
            print!("{USAGE}");
            0
        }
        Ok(Some(cmd)) => {
            let outcome = run(&cmd);
            print!("{}", outcome.stdout);
            eprint!("{}", outcome.stderr);
            outcome.exit
        }
        Err(e) => {
            eprint!("ERR:{} {e}\n{USAGE}", e.code());
            2
        }
    }
}
