use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ghmodule::report::{self, Context, Level, Report};
use ghmodule::{Error, HookParams, Partition};

#[derive(Parser)]
#[command(name = "ghmod", version, about = "Verify monomial bases of Garsia-Haiman modules")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Refuse to expand Delta for n above this.
    #[arg(long = "limit-n", global = true, default_value_t = 7)]
    limit_n: usize,
    /// Report a runtime of 0 so output is byte-stable.
    #[arg(long, global = true)]
    reproducible: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Print Delta_mu.
    Delta {
        #[arg(long)]
        partition: Partition,
    },
    #[command(subcommand)]
    Hooks(Hooks),
    #[command(subcommand)]
    Ideal(Ideal),
    #[command(subcommand)]
    Zerox(Zerox),
    /// Run the verification matrix.
    Suite {
        #[arg(long, value_enum, default_value_t = SuiteLevel::Smoke)]
        level: SuiteLevel,
    },
}

#[derive(Args, Clone, Copy)]
struct HookArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l: usize,
}

impl From<HookArgs> for HookParams {
    fn from(a: HookArgs) -> Self {
        HookParams::new(a.k, a.l)
    }
}

#[derive(Subcommand)]
enum Hooks {
    /// Count the drawings, optionally listing them.
    Enumerate {
        #[command(flatten)]
        hook: HookArgs,
        #[arg(long)]
        list: bool,
    },
    /// dim M_mu by derivative closure.
    VerifyDim {
        #[command(flatten)]
        hook: HookArgs,
    },
    /// Rank of the drawing images.
    VerifyBasis {
        #[command(flatten)]
        hook: HookArgs,
    },
    /// The son relation and its acyclicity.
    Descendants {
        #[command(flatten)]
        hook: HookArgs,
    },
}

#[derive(Subcommand)]
enum Ideal {
    /// Generators and relation families annihilate Delta.
    Verify {
        #[command(flatten)]
        hook: HookArgs,
    },
    /// Graded dimensions of the quotient by the generator ideal.
    QuotientDim {
        #[command(flatten)]
        hook: HookArgs,
    },
    /// Rewrite an operator onto drawing operators.
    NormalForm {
        #[command(flatten)]
        hook: HookArgs,
        #[arg(long)]
        op: String,
    },
}

#[derive(Subcommand)]
enum Zerox {
    /// Count zero x-degree drawings.
    Count {
        #[arg(long)]
        partition: Partition,
    },
    /// Full check of the zero x-degree basis.
    Verify {
        #[arg(long)]
        partition: Partition,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteLevel {
    Smoke,
    Full,
}

fn run(cli: &Cli) -> ghmodule::Result<Report> {
    let ctx = Context {
        limit: cli.limit_n,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Delta { partition } => report::delta_command(partition, &ctx),
        Command::Hooks(h) => match h {
            Hooks::Enumerate { hook, list } => report::hooks_enumerate((*hook).into(), *list, &ctx),
            Hooks::VerifyDim { hook } => report::hooks_verify_dim((*hook).into(), &ctx),
            Hooks::VerifyBasis { hook } => report::hooks_verify_basis((*hook).into(), &ctx),
            Hooks::Descendants { hook } => report::hooks_descendants((*hook).into(), &ctx),
        },
        Command::Ideal(i) => match i {
            Ideal::Verify { hook } => report::ideal_verify((*hook).into(), &ctx),
            Ideal::QuotientDim { hook } => report::ideal_quotient_dim((*hook).into(), &ctx),
            Ideal::NormalForm { hook, op } => report::ideal_normal_form((*hook).into(), op, &ctx),
        },
        Command::Zerox(z) => match z {
            Zerox::Count { partition } => report::zerox_count(partition, &ctx),
            Zerox::Verify { partition } => report::zerox_verify(partition, &ctx),
        },
        Command::Suite { level } => {
            let level = match level {
                SuiteLevel::Smoke => Level::Smoke,
                SuiteLevel::Full => Level::Full,
            };
            report::suite(level, &ctx)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(mut r) => {
            if cli.reproducible {
                r.runtime_ms = 0;
            }
            match cli.output {
                Output::Json => println!("{}", r.to_json()),
                Output::Text => print!("{}", r.to_text()),
            }
            if r.pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e @ Error::SizeLimit { .. }) => {
            eprintln!("error: {}", e);
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
