use crate::checks::{default_params, run_check, Params};
use crate::corpus::gen_corpus;
use crate::describe::describe;
use crate::input::{self, CORPUS_ENV};
use crate::report::{Input, Report};
use crate::suite::{parse_params, run_suite};
use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::path::{Path, PathBuf};
use triality::loops::generators::{chein_loop, octonion_unit_loop};
use triality::loops::format_loop;
use triality::malcev::{build_cayley, lie_of_malcev};

#[derive(Parser, Debug)]
#[command(name = "triality", version, about = "Exact checks for loops, groups, Hopf and Lie algebras with triality")]
pub struct Cli {
    #[command(flatten)]
    pub opts: Opts,
    #[command(subcommand)]
    pub cmd: Noun,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// PBW truncation degree.
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// Number of seeded samples where a check is not exhaustive
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Refuse loops and groups larger than this.
    #[arg(long, global = true)]
    pub max_order: Option<usize>,
    /// Write the report, or the generated structure, to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Noun {
    /// Finite loops in the text table format.
    #[command(subcommand)]
    Loop(LoopCmd),
    /// Groups with an S₃ action, as JSON.
    #[command(subcommand)]
    Group(GroupCmd),
    /// The autotopy group of a Moufang loop.
    #[command(subcommand)]
    Atp(AtpCmd),
    /// Group and loop algebras.
    #[command(subcommand)]
    Hopf(HopfCmd),
    /// Cayley–Dickson algebras.
    #[command(subcommand)]
    Cayley(CayleyCmd),
    /// Malcev algebras given by structure constants
    #[command(subcommand)]
    Malcev(MalcevCmd),
    /// Lie algebras with a pair of triality automorphisms
    #[command(subcommand)]
    Lie(LieCmd),
    /// Universal enveloping algebras.
    #[command(subcommand)]
    Env(EnvCmd),
    /// Convolution over group-like coalgebras.
    #[command(subcommand)]
    Conv(ConvCmd),
    /// Run a manifest of checks
    #[command(subcommand)]
    Suite(SuiteCmd),
    /// The bundled example files
    #[command(subcommand)]
    Corpus(CorpusCmd),
    /// Report the type of a corpus file and the checks that apply to it.
    Describe { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum LoopCmd {
    /// Moufang identities and associativity.
    Check { file: PathBuf },
    /// The Doro relations of the multiplication operators.
    Doro { file: PathBuf },
    #[command(subcommand)]
    Gen(LoopGen),
}

#[derive(Subcommand, Debug)]
pub enum LoopGen {
    /// Chein's loop `M(G, 2)` of a group given as a loop file.
    Chein {
        #[arg(long)]
        group: PathBuf,
    },
    /// The sixteen octonion units `±eᵢ`.
    O16,
}

#[derive(Subcommand, Debug)]
pub enum GroupCmd {
    Check { file: PathBuf },
    Mloop { file: PathBuf },
    Center { file: PathBuf },
    Embed { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum AtpCmd {
    Compute { file: PathBuf },
    Mloop { file: PathBuf },
    Psi { file: PathBuf },
    Psaut { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum HopfCmd {
    Check { file: PathBuf },
    Mh { file: PathBuf },
    Multalg { file: PathBuf },
    DoroVerify { loop_file: PathBuf, group_file: PathBuf },
    /// The bundled `(U, target, φ)` fixtures.
    DoroFixtures,
}

#[derive(Subcommand, Debug)]
pub enum CayleyCmd {
    /// Emit the structure constants of `(α, β, γ)`.
    Build {
        #[arg(long, allow_hyphen_values = true)]
        params: String,
    },
    /// Alternativity, the composition law and the Malcev identity on `O₀`.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum MalcevCmd {
    /// Anticommutativity and the Malcev identity.
    Check { file: PathBuf },
    /// Emit the Lie algebra with triality of the traceless part.
    Liefy {
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum LieCmd {
    TrialityCheck { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum EnvCmd {
    TrialityCheck { file: PathBuf },
    Mh {
        /// `o0` or `split`.
        #[arg(long, default_value = "o0")]
        malcev: String,
    },
    ActionCheck { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum ConvCmd {
    Loop {
        #[arg(long, default_value_t = 2)]
        points: usize,
        #[arg(long = "loop")]
        loop_file: PathBuf,
    },
    Triality {
        #[arg(long, default_value_t = 1)]
        points: usize,
        #[arg(long = "loop")]
        loop_file: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum SuiteCmd {
    /// Run a manifest; `--out` names a directory for the reports.
    Run { manifest: Option<PathBuf> },
}

#[derive(Subcommand, Debug)]
pub enum CorpusCmd {
    Gen { outdir: Option<PathBuf> },
}

fn corpus_dir() -> Result<PathBuf> {
    std::env::var_os(CORPUS_ENV).map(PathBuf::from).ok_or_else(|| anyhow!("no path given and ${CORPUS_ENV} is unset"))
}

fn emit(opts: &Opts, text: &str) -> Result<i32> {
    match &opts.out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn show(opts: &Opts, r: &Report) -> Result<i32> {
    let json = serde_json::to_string_pretty(r)? + "\n";
    if let Some(p) = &opts.out {
        std::fs::write(p, &json).with_context(|| format!("cannot write {}", p.display()))?;
    }
    if opts.json {
        print!("{json}");
    } else {
        print!("{}", r.to_text());
    }
    Ok(if r.passed() { 0 } else { 1 })
}

fn check(opts: &Opts, name: &str, files: &[&Path], extra: impl FnOnce(&mut Params) -> Result<()>) -> Result<i32> {
    let inputs = files.iter().map(|f| input::read(f)).collect::<Result<Vec<Input>>>()?;
    let mut p = Params {
        seed: opts.seed,
        degree: opts.degree,
        samples: opts.samples,
        max_order: opts.max_order,
        ..Params::default()
    };
    extra(&mut p)?;
    show(opts, &run_check(name, &inputs, &p)?)
}

fn none(_: &mut Params) -> Result<()> {
    Ok(())
}

pub fn run(cli: Cli) -> Result<i32> {
    let o = &cli.opts;
    match cli.cmd {
        Noun::Loop(LoopCmd::Check { file }) => check(o, "loop check", &[&file], none),
        Noun::Loop(LoopCmd::Doro { file }) => check(o, "loop doro", &[&file], none),
        Noun::Loop(LoopCmd::Gen(LoopGen::Chein { group })) => {
            let g = input::load_loop(&input::read(&group)?)?;
            if !g.is_associative() {
                bail!("{}: not a group", group.display());
            }
            emit(o, &format_loop(&chein_loop(&g)?))
        }
        Noun::Loop(LoopCmd::Gen(LoopGen::O16)) => emit(o, &format_loop(&octonion_unit_loop())),
        Noun::Group(c) => {
            let (name, file) = match c {
                GroupCmd::Check { file } => ("group check", file),
                GroupCmd::Mloop { file } => ("group mloop", file),
                GroupCmd::Center { file } => ("group center", file),
                GroupCmd::Embed { file } => ("group embed", file),
            };
            check(o, name, &[&file], none)
        }
        Noun::Atp(c) => {
            let (name, file) = match c {
                AtpCmd::Compute { file } => ("atp compute", file),
                AtpCmd::Mloop { file } => ("atp mloop", file),
                AtpCmd::Psi { file } => ("atp psi", file),
                AtpCmd::Psaut { file } => ("atp psaut", file),
            };
            check(o, name, &[&file], none)
        }
        Noun::Hopf(HopfCmd::Check { file }) => check(o, "hopf check", &[&file], none),
        Noun::Hopf(HopfCmd::Mh { file }) => check(o, "hopf mh", &[&file], none),
        Noun::Hopf(HopfCmd::Multalg { file }) => check(o, "hopf multalg", &[&file], none),
        Noun::Hopf(HopfCmd::DoroVerify { loop_file, group_file }) => {
            check(o, "hopf doro-verify", &[&loop_file, &group_file], none)
        }
        Noun::Hopf(HopfCmd::DoroFixtures) => check(o, "hopf doro-fixtures", &[], none),
        Noun::Cayley(CayleyCmd::Build { params }) => {
            let [a, b, c] = parse_params(&params)?;
            emit(o, &(build_cayley(a, b, c)?.product().to_json() + "\n"))
        }
        Noun::Cayley(CayleyCmd::Check { params }) => check(o, "cayley check", &[], |p| {
            p.cayley = params.as_deref().map(parse_params).transpose()?;
            Ok(())
        }),
        Noun::Malcev(MalcevCmd::Check { file }) => check(o, "malcev check", &[&file], none),
        Noun::Malcev(MalcevCmd::Liefy { params }) => {
            let [a, b, c] = params.as_deref().map(parse_params).transpose()?.unwrap_or_else(default_params);
            let lom = lie_of_malcev(&build_cayley(a, b, c)?)?;
            if !lom.report().passed() {
                eprintln!("{}", serde_json::to_string_pretty(lom.report())?);
                bail!("the Lie algebra of the Malcev algebra failed its checks");
            }
            emit(o, &(serde_json::to_string_pretty(&lom.lie().to_json_value())? + "\n"))
        }
        Noun::Lie(LieCmd::TrialityCheck { file }) => check(o, "lie triality-check", &[&file], none),
        Noun::Env(EnvCmd::TrialityCheck { file }) => check(o, "env triality-check", &[&file], none),
        Noun::Env(EnvCmd::ActionCheck { file }) => check(o, "env action-check", &[&file], none),
        Noun::Env(EnvCmd::Mh { malcev }) => check(o, "env mh", &[], |p| {
            p.malcev = Some(malcev);
            Ok(())
        }),
        Noun::Conv(ConvCmd::Loop { points, loop_file }) => check(o, "conv loop", &[&loop_file], |p| {
            p.points = Some(points);
            Ok(())
        }),
        Noun::Conv(ConvCmd::Triality { points, loop_file }) => check(o, "conv triality", &[&loop_file], |p| {
            p.points = Some(points);
            Ok(())
        }),
        Noun::Suite(SuiteCmd::Run { manifest }) => {
            let manifest = match manifest {
                Some(m) => m,
                None => corpus_dir()?.join("manifest.json"),
            };
            let (summary, _) = run_suite(&manifest, o.out.as_deref(), o.seed)?;
            if o.json {
                println!("{}", serde_json::to_string_pretty(&summary)?);
            } else {
                print!("{}", summary.to_text());
            }
            Ok(summary.exit_code())
        }
        Noun::Corpus(CorpusCmd::Gen { outdir }) => {
            let dir = match outdir {
                Some(d) => d,
                None => corpus_dir()?,
            };
            let files = gen_corpus(&dir)?;
            let mut out = std::io::stdout().lock();
            for f in files {
                writeln!(out, "{}", f.display())?;
            }
            Ok(0)
        }
        Noun::Describe { file } => {
            let inp = input::read(&file)?;
            let (line, report) = describe(&inp)?;
            if o.json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("{line}");
            }
            Ok(0)
        }
    }
}

/// Parses arguments and runs; the return value is the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}
