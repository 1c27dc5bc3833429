//! Command-line driver. Exit codes: 0 all pass, 1 a check failed, 2 input error,
//! 3 unstable fit or genericity failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use super::report::{error_exit_code, exit_code, render, summary_line, Format};
use super::script::run_text;
use crate::alg::{PolyRing, RingDesc, TermOrder, DEFAULT_CHARACTERISTIC};
use crate::config::{Config, Overrides};
use crate::error::{Error, Result};
use crate::groebner::{krull_dim, local_length_at_origin, sum, IdealHandle};
use crate::hilbert::coefficients;
use crate::lab::{run_suite, Corpus, ExperimentReport, Suite};
use crate::structure::is_cohen_macaulay;

#[derive(Parser, Debug)]
#[command(
    name = "chern",
    version,
    about = "Hilbert-Samuel coefficients, depth and related checks for ideals over F_p"
)]
pub struct Cli {
    /// Run seed (default 42).
    #[arg(long, global = true, env = "CHERN_SEED")]
    pub seed: Option<u64>,
    /// Fit bound N: samples n = 0..=N.
    #[arg(long, global = true)]
    pub nmax: Option<usize>,
    /// Random parameter ideals per sign test.
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    /// Field characteristic; overrides script declarations.
    #[arg(long = "char", global = true)]
    pub characteristic: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Default)]
pub struct Outputs {
    /// Write a JSON report here.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Write a CSV table here.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct RingArgs {
    /// Variable names, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub vars: Vec<String>,
    /// A defining relation of the quotient ring (repeatable).
    #[arg(long = "rel")]
    pub relations: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the tasks of a script.
    Run {
        file: PathBuf,
        #[command(flatten)]
        out: Outputs,
    },
    /// Run a built-in suite: paper, cm, noncm, modules or all.
    Corpus {
        #[arg(long, default_value = "paper")]
        suite: String,
        #[command(flatten)]
        out: Outputs,
        /// Invert the cm_expected flag of a corpus entry (negative control).
        #[arg(long = "flip-cm")]
        flip_cm: Vec<String>,
    },
    /// Reduced Gröbner basis of the ideal generated by GENS.
    Gb {
        #[command(flatten)]
        ring: RingArgs,
        /// grevlex or lex.
        #[arg(long, default_value = "grevlex")]
        order: String,
        gens: Vec<String>,
    },
    /// Krull dimension of S/(relations + GENS).
    Dim {
        #[command(flatten)]
        ring: RingArgs,
        gens: Vec<String>,
    },
    /// Depth and dimension of S/(relations) at the origin.
    Depth {
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Length of R/(GENS) at the origin.
    Length {
        #[command(flatten)]
        ring: RingArgs,
        gens: Vec<String>,
    },
    /// Hilbert coefficients of the ideal generated by GENS in S/(relations).
    Coeffs {
        #[command(flatten)]
        ring: RingArgs,
        gens: Vec<String>,
        #[command(flatten)]
        out: Outputs,
    },
}

impl Cli {
    fn overrides(&self) -> Overrides {
        Overrides {
            seed: self.seed,
            nmax: self.nmax,
            trials: self.trials,
            characteristic: self.characteristic,
            ..Overrides::default()
        }
    }
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let context = command_name(&cli.command);
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {context}: {e}");
            error_exit_code(&e)
        }
    }
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Run { file, .. } => format!("run {}", file.display()),
        Command::Corpus { suite, .. } => format!("corpus --suite {suite}"),
        Command::Gb { .. } => "gb".into(),
        Command::Dim { .. } => "dim".into(),
        Command::Depth { .. } => "depth".into(),
        Command::Length { .. } => "length".into(),
        Command::Coeffs { .. } => "coeffs".into(),
    }
}

fn write_outputs(reports: &[ExperimentReport], out: &Outputs) -> Result<()> {
    let targets = [(&out.json, Format::Json), (&out.csv, Format::Csv)];
    for (path, format) in targets {
        if let Some(p) = path {
            write_file(p, &render(reports, format))?;
        }
    }
    Ok(())
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn print_reports(reports: &[ExperimentReport]) {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    for r in reports {
        let _ = writeln!(lock, "{}", summary_line(r));
        for n in &r.notes {
            let _ = writeln!(lock, "    {n}");
        }
    }
}

fn one_shot_ring(args: &RingArgs, characteristic: u32, order: TermOrder) -> Result<RingDesc> {
    let base = PolyRing::with_names(characteristic, args.vars.clone(), order)?;
    let rels = args
        .relations
        .iter()
        .map(|r| base.parse(r))
        .collect::<Result<Vec<_>>>()?;
    RingDesc::quotient(&base, rels)
}

fn one_shot_ideal(ring: &RingDesc, gens: &[String]) -> Result<IdealHandle> {
    let polys = gens
        .iter()
        .map(|g| ring.base().parse(g))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealHandle::new(ring.base(), polys))
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let overrides = cli.overrides();
    let config = overrides.apply(&Config::default());
    let p = cli.characteristic.unwrap_or(DEFAULT_CHARACTERISTIC);
    match &cli.command {
        Command::Run { file, out } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
            let reports = run_text(&text, &overrides)?;
            print_reports(&reports);
            write_outputs(&reports, out)?;
            Ok(exit_code(&reports))
        }
        Command::Corpus {
            suite,
            out,
            flip_cm,
        } => {
            let suite: Suite = suite.parse()?;
            let mut corpus = Corpus::builtin(config.characteristic)?;
            for name in flip_cm {
                corpus.flip_cm_expected(name)?;
            }
            let reports = run_suite(&corpus, suite, &config)?;
            print_reports(&reports);
            write_outputs(&reports, out)?;
            Ok(exit_code(&reports))
        }
        Command::Gb { ring, order, gens } => {
            let order = match order.as_str() {
                "grevlex" => TermOrder::grevlex(),
                "lex" => TermOrder::lex(),
                other => return Err(Error::input(format!("unknown order `{other}`"))),
            };
            let r = one_shot_ring(ring, p, order)?;
            let ideal = sum(r.relations(), &one_shot_ideal(&r, gens)?);
            for g in ideal.groebner_basis().polys() {
                println!("{g}");
            }
            Ok(0)
        }
        Command::Dim { ring, gens } => {
            let r = one_shot_ring(ring, p, TermOrder::grevlex())?;
            let ideal = sum(r.relations(), &one_shot_ideal(&r, gens)?);
            println!("{}", krull_dim(&ideal)?);
            Ok(0)
        }
        Command::Depth { ring } => {
            let r = one_shot_ring(ring, p, TermOrder::grevlex())?;
            let st = is_cohen_macaulay(&r, config.seed, config.genericity_trials)?;
            println!(
                "depth {} dim {} cohen-macaulay {}",
                st.depth, st.dim, st.is_cm
            );
            Ok(0)
        }
        Command::Length { ring, gens } => {
            let r = one_shot_ring(ring, p, TermOrder::grevlex())?;
            let ideal = sum(r.relations(), &one_shot_ideal(&r, gens)?);
            let ideal = IdealHandle::new(ideal.ring(), ideal.groebner_basis().polys().to_vec());
            println!("{}", local_length_at_origin(&ideal)?);
            Ok(0)
        }
        Command::Coeffs { ring, gens, out } => {
            let r = one_shot_ring(ring, p, TermOrder::grevlex())?;
            let ideal = one_shot_ideal(&r, gens)?;
            let report = crate::lab::guarded(
                crate::lab::Claim::Coefficients,
                "coeffs",
                config.seed,
                &config,
                |rep| {
                    rep.input("ring", &r);
                    rep.input("ideal", &ideal);
                    let co = coefficients(&r, &ideal, config.nmax)?;
                    rep.e = co.evector.e.clone();
                    rep.length("lambda", co.table.values[0] as i64);
                    Ok(crate::lab::Verdict::Pass)
                },
            )?;
            let reports = vec![report];
            print_reports(&reports);
            write_outputs(&reports, out)?;
            Ok(exit_code(&reports))
        }
    }
}
