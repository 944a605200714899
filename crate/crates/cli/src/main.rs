use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use idcodes::bounds::{self, BoundKind, BoundQuery, GraphClass};
use idcodes::generators::{self, FamilyParams};
use idcodes::models::cograph_recognize;
use idcodes::{cograph, exact, io, verify, Cotree, Error, Model, ProblemKind, VertexSet};

#[derive(Parser)]
#[command(name = "idcodes", version, about = "Identifying codes and related sets on structured graph classes")]
struct Cli {
    /// Reserved for randomized commands; accepted and currently unused.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum solution by exhaustive search.
    Solve {
        #[arg(long)]
        problem: ProblemKind,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = exact::DEFAULT_CAP)]
        cap: usize,
    },
    /// Check a given set.
    Verify {
        #[arg(long)]
        problem: ProblemKind,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Linear-time values on a cograph.
    Cograph {
        #[arg(long)]
        problem: ProblemKind,
        #[arg(long)]
        cotree: PathBuf,
        #[arg(long)]
        witness: bool,
    },
    /// Write an extremal instance and its manifest line.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long = "k-variant", alias = "variant")]
        variant: Option<u8>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Verify a set and check the order against the class bound.
    Certify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long)]
        problem: ProblemKind,
        /// Defaults to the class the model attests.
        #[arg(long)]
        class: Option<GraphClass>,
    },
    /// Print a bound row, or the least solution size for `--n` vertices.
    Bounds {
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        kind: BoundKind,
        #[arg(long, required_unless_present = "n")]
        k: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long, conflicts_with = "k")]
        n: Option<u64>,
    },
    /// Compile a model file to a plain graph file.
    CompileModel {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::MalformedCotree(_) => 3,
            Error::CapExceeded(_) => 4,
            _ => 2,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure { code: 3, msg: format!("cannot read {}: {e}", path.display()) })
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure { code: 4, msg: format!("cannot write {}: {e}", path.display()) })
}

fn load(path: &Path) -> Result<Model, Failure> {
    Ok(io::parse_model(&read(path)?)?)
}

fn parse_set(text: &str) -> Result<VertexSet, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Failure { code: 3, msg: format!("bad vertex `{s}` in set") }))
        .collect()
}

fn list(s: &VertexSet) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn cotree_of(model: Model) -> Result<Cotree, Failure> {
    Ok(match model {
        Model::Cotree(t) => t,
        other => cograph_recognize(&other.to_graph()?)?,
    })
}

fn cograph_line(t: &Cotree, problem: ProblemKind, witness: bool) -> Result<String, Failure> {
    let (k, s) = match problem {
        ProblemKind::Ic => {
            let s = cograph::sep_id_dp(t)?;
            (s.k + s.emp as usize, s)
        }
        ProblemKind::Ld => {
            let s = cograph::sep_ld_dp(t);
            (s.k + s.emp as usize, s)
        }
        ProblemKind::Rs => (cograph::dim_cograph(t)?, cograph::sep_ld_dp(t)),
        ProblemKind::Old => {
            cograph::enable_old_dp()?;
            (cograph::gamma_old_cograph(t)?, cograph::sep_old_dp(t)?)
        }
        other => return Err(Error::BadParameter(format!("cograph does not support {other}")).into()),
    };
    let mut line = format!("k={k} emp={} univ={} sep={}", s.emp, s.univ, s.k);
    if witness {
        line += &format!(" witness={}", list(&cograph::witness_cograph(t, problem)?));
    }
    Ok(line)
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Solve { problem, input, cap } => {
            let g = load(&input)?.to_graph()?;
            let r = exact::min_set_capped(&g, problem, cap)?;
            Ok(format!("k={} witness={}", r.k, list(&r.witness)))
        }
        Command::Verify { problem, input, set } => {
            let g = load(&input)?.to_graph()?;
            match verify::check(&g, &parse_set(&set)?, problem)? {
                None => Ok("valid".into()),
                Some(v) => Err(Error::VerifierFailed(v.to_string()).into()),
            }
        }
        Command::Cograph { problem, cotree, witness } => cograph_line(&cotree_of(load(&cotree)?)?, problem, witness),
        Command::Generate { family, k, d, n, variant, out } => {
            let inst = generators::generate(&family, FamilyParams { k, d, n, variant })?;
            let manifest = inst.manifest_line();
            write(&out.with_extension("model"), &io::write_model(&inst.model))?;
            write(&out.with_extension("manifest"), &format!("{manifest}\n"))?;
            Ok(manifest)
        }
        Command::Certify { input, set, problem, class } => {
            let model = load(&input)?;
            let s = parse_set(&set)?;
            let r = match class {
                Some(c) => bounds::certify_as(&model, c, &s, problem)?,
                None => bounds::certify(&model, &s, problem)?,
            };
            let d = r.d.map_or("-".to_string(), |d| d.to_string());
            let line = format!(
                "{} slack={} class={} kind={} k={} D={} n={} max_n={} label={}",
                if r.satisfied { "satisfied" } else { "violated" },
                r.slack,
                r.class,
                r.kind,
                r.k,
                d,
                r.n,
                r.max_n,
                r.theorem_label
            );
            if r.satisfied {
                Ok(line)
            } else {
                Err(Failure { code: 1, msg: line })
            }
        }
        Command::Bounds { class, kind, k, d, n } => {
            let dd = d.map_or("-".to_string(), |d| d.to_string());
            let label = bounds::theorem_label(class, kind)?;
            if let Some(n) = n {
                let k = bounds::min_parameter(class, kind, n, d)?;
                return Ok(format!("{class} {kind} n={n} {dd} min_k={k} {label}"));
            }
            let k = k.expect("clap requires k without n");
            let max_n = bounds::max_order(&BoundQuery::new(class, kind, k, d))?;
            Ok(format!("{class} {kind} {k} {dd} {max_n} {label}"))
        }
        Command::CompileModel { input, out } => {
            let text = io::write_graph(&load(&input)?.to_graph()?);
            match out {
                Some(path) => {
                    write(&path, &text)?;
                    Ok(format!("wrote {}", path.display()))
                }
                None => Ok(text.trim_end().to_string()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::SUCCESS
        }
        Err(Failure { code: 1, msg }) => {
            let _ = writeln!(std::io::stdout(), "{msg}");
            ExitCode::from(1)
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
