use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use antiflex_algebra::{AssociativeVariant, IdentityKind, WitnessMode};
use antiflex_cli::check::{evaluate, CheckKind, CheckOptions};
use antiflex_cli::construct::{construct, ConstructOptions, ConstructWhat};
use antiflex_cli::format::{load, save, write_value, Document, Object, RElement};
use antiflex_cli::report::{report_json, report_text, Runner};
use antiflex_cli::search::{format_coefficients, grid_search, parse_coefficients, SearchSpec, SearchTarget, Subject};
use antiflex_cli::{corpus, CliError, EXIT_FAIL, EXIT_PASS};
use antiflex_coboundary::SpecialCase;
use antiflex_linear::format_scalar;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "antiflex", version, about = "Exact checks and constructions for anti-flexible and pre-anti-flexible algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Output {
    /// print the report as JSON
    #[arg(long)]
    json: bool,
    /// add wall time to the report (makes it nondeterministic)
    #[arg(long)]
    timing: bool,
}

#[derive(Args, Clone)]
struct CheckArgs {
    /// identity family for `algebra`: associative, anti-flexible, pre-anti-flexible, dendriform
    #[arg(long = "kind", value_parser = parse_identity_kind)]
    identity: Option<IdentityKind>,
    /// turn a single r into (r_≺, r_≻): one = (r, −σr), two = (−r, r)
    #[arg(long, value_parser = parse_case)]
    case: Option<SpecialCase>,
    /// collect every failing basis tuple
    #[arg(long)]
    all_witnesses: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check identities exactly on basis tuples
    Check {
        kind: CheckKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[command(flatten)]
        opts: CheckArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Build a structure and write it to a file
    Construct {
        what: ConstructWhat,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        /// where to write the algebra carrying r (default: <output stem>.double.json)
        #[arg(long)]
        double_out: Option<PathBuf>,
        #[arg(long, value_parser = parse_case)]
        case: Option<SpecialCase>,
        /// succ-left, succ-right, prec-left or prec-right
        #[arg(long, value_parser = parse_variant)]
        variant: Option<AssociativeVariant>,
        #[command(flatten)]
        out: Output,
    },
    /// Enumerate every candidate with entries from a finite set
    Search {
        target: SearchTarget,
        file: PathBuf,
        /// largest subject dimension accepted
        #[arg(long, default_value_t = 3)]
        bound: usize,
        #[arg(long, default_value = "-1,0,1", allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// write the found objects, one file per result, into this directory
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Compare basis-tuple verdicts with verdicts on random elements
    Oracle {
        kind: CheckKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        opts: CheckArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Write the example corpus into a directory
    Corpus { dir: PathBuf },
}

fn parse_identity_kind(s: &str) -> Result<IdentityKind, String> {
    IdentityKind::parse(s).ok_or_else(|| format!("unknown identity family {s:?}"))
}

fn parse_case(s: &str) -> Result<SpecialCase, String> {
    SpecialCase::parse(s).ok_or_else(|| format!("unknown case {s:?}; use one or two"))
}

fn parse_variant(s: &str) -> Result<AssociativeVariant, String> {
    AssociativeVariant::parse(s).ok_or_else(|| format!("unknown variant {s:?}"))
}

fn emit(value: &Value, text: &str, out: &Output) {
    if out.json {
        let mut s = String::new();
        write_value(value, 0, &mut s);
        println!("{s}");
    } else {
        print!("{text}");
    }
}

fn load_all(files: &[PathBuf]) -> Result<Vec<Document>, CliError> {
    files.iter().map(|f| load(f)).collect()
}

fn display(files: &[PathBuf]) -> Vec<String> {
    files.iter().map(|f| f.display().to_string()).collect()
}

fn with_timing(mut v: Value, start: Instant, out: &Output) -> Value {
    if out.timing {
        v.as_object_mut().expect("report object").insert("wall_time_ms".into(), json!(start.elapsed().as_millis() as u64));
    }
    v
}

fn run_check(
    command: &str,
    kind: CheckKind,
    files: &[PathBuf],
    opts: &CheckArgs,
    mut runner: Runner,
    out: &Output,
) -> Result<i32, CliError> {
    let start = Instant::now();
    let docs = load_all(files)?;
    let copts = CheckOptions { identity: opts.identity, case: opts.case };
    evaluate(kind, &docs, copts, &mut runner)?;
    if let Some(e) = runner.oracle_error() {
        return Err(e);
    }
    let value = with_timing(report_json(command, kind.name(), &display(files), &runner), start, out);
    emit(&value, &report_text(command, kind.name(), &runner), out);
    Ok(if runner.passed() { EXIT_PASS } else { EXIT_FAIL })
}

fn sibling(output: &Path) -> PathBuf {
    let stem = output.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "out".into());
    output.with_file_name(format!("{stem}.double.json"))
}

fn matrix_json(m: &antiflex_linear::Matrix) -> Value {
    json!(m.to_rows().iter().map(|r| r.iter().map(format_scalar).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Check { kind, files, opts, out } => {
            let mode = if opts.all_witnesses { WitnessMode::All } else { WitnessMode::First };
            run_check("check", kind, &files, &opts, Runner::new(mode), &out)
        }
        Command::Oracle { kind, files, trials, seed, opts, out } => {
            let mode = if opts.all_witnesses { WitnessMode::All } else { WitnessMode::First };
            run_check("oracle", kind, &files, &opts, Runner::with_oracle(mode, trials, seed), &out)
        }
        Command::Construct { what, files, output, double_out, case, variant, out } => {
            let start = Instant::now();
            let docs = load_all(&files)?;
            let made = construct(what, &docs, ConstructOptions { case, variant })?;
            save(&output, &made.primary)?;
            let mut written = vec![json!({"path": output.display().to_string(), "kind": made.primary.kind().name()})];
            if let Some(d) = &made.double {
                let path = double_out.unwrap_or_else(|| sibling(&output));
                save(&path, d)?;
                written.push(json!({"path": path.display().to_string(), "kind": d.kind().name()}));
            }
            let value = with_timing(
                json!({"command": "construct", "kind": what.name(), "inputs": display(&files), "outputs": written}),
                start,
                &out,
            );
            let text: String = written.iter().map(|w| format!("wrote {} ({})\n", w["path"].as_str().unwrap_or(""), w["kind"].as_str().unwrap_or(""))).collect();
            emit(&value, &text, &out);
            Ok(EXIT_PASS)
        }
        Command::Search { target, file, bound, coeffs, seed, output, out } => {
            let start = Instant::now();
            let doc = load(&file)?;
            let spec = SearchSpec { target, coefficients: parse_coefficients(&coeffs)?, bound, seed };
            let oo;
            let subject = match (&doc.object, target) {
                (Object::Algebra(a), SearchTarget::RotaBaxter) => Subject::Algebra(a),
                (Object::PreAlgebra(p), SearchTarget::PafybeSymmetric) => Subject::PreAlgebra(p),
                (Object::PreAlgebra(p), SearchTarget::OOperator) => {
                    oo = antiflex_solutions::OOperator::regular(p);
                    Subject::OOperatorSpace(oo)
                }
                (Object::AfBimodule(bm), SearchTarget::OOperator) => {
                    Subject::OOperatorSpace(antiflex_solutions::OOperator::new(bm.clone(), antiflex_linear::Matrix::zeros(bm.base.dimension, bm.space_dim))?)
                }
                _ => return Err(CliError::Input(format!("a {} file is not a subject for {}", doc.kind().name(), target.name()))),
            };
            let outcome = grid_search(&spec, subject)?;
            if let Some(dir) = &output {
                std::fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
                for (i, m) in outcome.found.iter().enumerate() {
                    let obj = match target {
                        SearchTarget::PafybeSymmetric => Object::RElement(RElement::Single(m.clone())),
                        _ => Object::LinearMap(m.clone()),
                    };
                    let d = Document::named(obj, format!("{} {}", target.name(), i + 1), format!("search {} over {}", target.name(), file.display()));
                    save(&dir.join(format!("{}-{:04}.json", target.name(), i + 1)), &d)?;
                }
            }
            let value = with_timing(
                json!({
                    "command": "search",
                    "kind": target.name(),
                    "inputs": [file.display().to_string()],
                    "coefficients": format_coefficients(&spec.coefficients),
                    "bound": bound,
                    "seed": seed,
                    "candidates": outcome.candidates.to_string(),
                    "found_count": outcome.found.len(),
                    "found": outcome.found.iter().map(matrix_json).collect::<Vec<_>>(),
                }),
                start,
                &out,
            );
            let text = format!(
                "search {}: {} found among {} candidates (coefficients {}, seed {seed})\n",
                target.name(),
                outcome.found.len(),
                outcome.candidates,
                format_coefficients(&spec.coefficients)
            );
            emit(&value, &text, &out);
            Ok(EXIT_PASS)
        }
        Command::Corpus { dir } => {
            for name in corpus::write_corpus(&dir)? {
                println!("{}", dir.join(name).display());
            }
            Ok(EXIT_PASS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("antiflex: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
