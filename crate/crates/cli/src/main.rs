//! `groupid`: evaluate, solve, check, generate and reduce bribery instances.
//!
//! Exit codes: 0 optimal or ok, 2 goal not reachable within the budget,
//! 3 unsupported, 4 parse or validation error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use groupid::oracle::{oracle_agent, oracle_link, oracle_link_deletions, DEFAULT_AGENT_MAX_N, DEFAULT_LINK_MAX_N};
use groupid::{
    build_reduction, check_solution, cost_of, evaluate, generate_random, parse_instance, parse_report,
    render_solution, serialize_instance, Algorithm, BriberyInstance, CheckOutcome, CostKind, Error,
    FlipSet, GenParams, ReductionKind, SocialRule, SolveOptions, SolveResult, Status,
};

#[derive(Parser)]
#[command(name = "groupid", version, about = "Optimal bribery in group identification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the socially qualified agents.
    Eval { file: PathBuf },
    /// Solve an instance and print the solution report.
    Solve {
        file: PathBuf,
        /// Solver name, or `auto` to route by rule, cost model and goal.
        #[arg(long, default_value = "auto")]
        algorithm: Algorithm,
        #[arg(long)]
        single_thread: bool,
    },
    /// Solve by exhaustive search.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        max_n: Option<usize>,
        /// List every optimal witness (link prices only).
        #[arg(long)]
        all_witnesses: bool,
        /// Only turn 1-entries into 0 (link prices only).
        #[arg(long)]
        deletions_only: bool,
    },
    /// Validate a solution report against an instance.
    Check { instance: PathBuf, solution: PathBuf },
    /// Write a random instance to stdout.
    Gen(GenArgs),
    /// Build the instance of a hardness reduction.
    Reduce { kind: ReductionKind, input: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Lsr,
    Csr,
    Consent,
}

#[derive(Clone, Copy, ValueEnum)]
enum CostArg {
    Agent,
    Link,
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    rule: RuleArg,
    /// Consent parameter s.
    #[arg(long, default_value_t = 1)]
    s: usize,
    /// Consent parameter t.
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[arg(long, value_enum, default_value = "agent")]
    cost: CostArg,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    /// Size of A+.
    #[arg(long, default_value_t = 0)]
    plus: usize,
    /// Size of A-.
    #[arg(long, default_value_t = 0)]
    minus: usize,
    /// Make the goal exact on A+.
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    min_price: u64,
    #[arg(long, default_value_t = 1)]
    max_price: u64,
    #[arg(long)]
    seed: u64,
}

/// Failures with their exit codes.
#[derive(Debug)]
struct Exit(u8, anyhow::Error);

impl From<anyhow::Error> for Exit {
    fn from(e: anyhow::Error) -> Self {
        let code = match e.downcast_ref::<Error>() {
            Some(Error::Unsupported(_) | Error::InstanceTooLarge { .. } | Error::TooManyTargets(_)) => 3,
            _ => 4,
        };
        Exit(code, e)
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(path: &Path) -> Result<BriberyInstance> {
    parse_instance(&read(path)?).with_context(|| format!("invalid instance {}", path.display()))
}

fn status_code(status: Status) -> u8 {
    match status {
        Status::Optimal => 0,
        Status::Infeasible | Status::BudgetExceeded => 2,
        Status::Unsupported => 3,
    }
}

fn flip_lines(out: &mut String, flips: &FlipSet) {
    for f in flips.iter() {
        writeln!(out, "{f}").unwrap();
    }
}

fn run(cli: Cli) -> Result<u8, Exit> {
    match cli.command {
        Command::Eval { file } => {
            let inst = load(&file)?;
            let q = evaluate(&inst.profile, inst.rule)?;
            let mut line = format!("qualified {}", q.len());
            for a in &q {
                write!(line, " {a}").unwrap();
            }
            println!("{line}");
            Ok(0)
        }
        Command::Solve {
            file,
            algorithm,
            single_thread,
        } => {
            let inst = load(&file)?;
            let r = groupid::solve(
                &inst,
                SolveOptions {
                    algorithm,
                    parallel: !single_thread,
                },
            );
            print!("{}", render_solution(&inst, &r));
            Ok(status_code(r.status))
        }
        Command::Oracle {
            file,
            max_n,
            all_witnesses,
            deletions_only,
        } => {
            let inst = load(&file)?;
            if deletions_only && inst.cost.is_agent() {
                return Err(Exit(4, anyhow::anyhow!("--deletions-only needs link prices")));
            }
            let (cost, witnesses) = if inst.cost.is_agent() {
                let found = oracle_agent(&inst, max_n.unwrap_or(DEFAULT_AGENT_MAX_N))?;
                (found.as_ref().map(|f| f.0), found.into_iter().map(|f| f.1).collect())
            } else {
                let max_n = max_n.unwrap_or(DEFAULT_LINK_MAX_N);
                let found = if deletions_only {
                    oracle_link_deletions(&inst, max_n)?
                } else {
                    oracle_link(&inst, max_n)?
                };
                (found.as_ref().map(|f| f.0), found.map(|f| f.1).unwrap_or_default())
            };
            let r = match (cost, witnesses.first()) {
                (Some(_), Some(w)) => SolveResult::from_optimum(&inst, w.clone()),
                _ => SolveResult::infeasible(),
            };
            let mut out = render_solution(&inst, &r);
            if all_witnesses && !witnesses.is_empty() {
                writeln!(out, "witnesses {}", witnesses.len()).unwrap();
                for w in &witnesses {
                    writeln!(out, "witness {}", w.len()).unwrap();
                    flip_lines(&mut out, w);
                }
            }
            print!("{out}");
            Ok(status_code(r.status))
        }
        Command::Check { instance, solution } => {
            let inst = load(&instance)?;
            let report = parse_report(&read(&solution)?)
                .with_context(|| format!("invalid report {}", solution.display()))?;
            let Some(flips) = report.flips else {
                println!("no witness ({})", report.status);
                return Ok(status_code(report.status).max(2));
            };
            let verdict = check_solution(&inst, &flips).context("witness does not apply")?;
            let cost = cost_of(&flips, &inst.cost);
            if report.cost != Some(cost) {
                return Err(Exit(4, anyhow::anyhow!("reported cost {:?}, witness costs {cost}", report.cost)));
            }
            if let Some(q) = report.qualified {
                let bribed = groupid::apply_flips(&inst.profile, &flips)?;
                if evaluate(&bribed, inst.rule)? != q {
                    return Err(Exit(4, anyhow::anyhow!("reported qualified set is wrong")));
                }
            }
            let (text, code) = match verdict {
                CheckOutcome::Ok => ("ok", 0),
                CheckOutcome::GoalViolated => ("goal violated", 2),
                CheckOutcome::BudgetExceeded => ("budget exceeded", 2),
            };
            println!("{text}");
            Ok(code)
        }
        Command::Gen(args) => {
            let rule = match args.rule {
                RuleArg::Lsr => SocialRule::Lsr,
                RuleArg::Csr => SocialRule::Csr,
                RuleArg::Consent => SocialRule::Consent { s: args.s, t: args.t },
            };
            let cost = match args.cost {
                CostArg::Agent => CostKind::Agent,
                CostArg::Link => CostKind::Link,
            };
            let mut params = GenParams::new(args.n, rule, cost);
            params.density = args.density;
            params.plus = args.plus;
            params.minus = args.minus;
            params.exact = args.exact;
            params.budget = args.budget;
            params.price_range = (args.min_price, args.max_price);
            print!("{}", serialize_instance(&generate_random(&params, args.seed)?));
            Ok(0)
        }
        Command::Reduce { kind, input } => {
            let inst = build_reduction(kind, &read(&input)?)?;
            print!("{}", serialize_instance(&inst));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
