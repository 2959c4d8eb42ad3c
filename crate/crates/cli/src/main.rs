//! `gnice`: Gröbner bases and G-nice pair checks over a session file.

mod commands;
mod session;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gnice_core::nice::Mode;
use gnice_core::{Error, Limits};

use session::Session;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("session line {line}: {message}")]
    Session { line: usize, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("cannot read session: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 2: bad input, 3: a mathematical precondition failed, 4: resource cap
    /// reached, 1: anything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Session { .. } | CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Core(e) => match e {
                Error::Parse { .. } | Error::UnknownVariable(_) | Error::EmptyIdeal | Error::InvalidOrder(_) => 2,
                Error::Precondition(_) | Error::NotRegularSequence { .. } | Error::NotGroebnerBasis(_) => 3,
                Error::ResourceLimit(_) | Error::IterationLimit { .. } => 4,
                _ => 1,
            },
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    A,
    C,
    D,
    Both,
    All,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::A => Mode::A,
            ModeArg::C => Mode::C,
            ModeArg::D => Mode::D,
            ModeArg::Both => Mode::Both,
            ModeArg::All => Mode::All,
        }
    }
}

#[derive(Parser)]
#[command(name = "gnice", version, about = "Gröbner bases and G-nice pairs of polynomial ideals")]
struct Cli {
    /// Session file declaring the ring, the order and named ideals. May also
    /// follow the subcommand.
    session: Option<PathBuf>,
    /// Override the session's monomial order, e.g. `lex y>x`.
    #[arg(long, global = true)]
    order: Option<String>,
    /// Lift the pair, degree and iteration caps.
    #[arg(long, global = true)]
    slow: bool,
    #[arg(long, global = true)]
    max_pairs: Option<usize>,
    #[arg(long, global = true)]
    max_iters: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
#[command(rename_all = "kebab-case")]
enum Command {
    /// Reduced Gröbner basis.
    Gb {
        #[arg(long = "I")]
        i: String,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// Minimal generators of the initial ideal.
    Ini {
        #[arg(long = "I")]
        i: String,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// Normal form of a polynomial.
    Nf {
        #[arg(long = "I", required_unless_present = "gb")]
        i: Option<String>,
        #[arg(long)]
        gb: Option<String>,
        #[arg(long)]
        f: String,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// S-polynomial of two polynomials.
    Spoly {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// Intersection of two ideals.
    Intersect {
        #[arg(long = "J")]
        j: String,
        #[arg(long = "E")]
        e: String,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// Colon ideal (J : f).
    Colon {
        #[arg(long = "J")]
        j: String,
        #[arg(long)]
        f: String,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// Ideal membership.
    Member {
        #[arg(long = "I")]
        i: String,
        #[arg(long)]
        f: String,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// Is the pair (J, E) G-nice?
    IsGnice {
        #[arg(long = "J")]
        j: String,
        #[arg(long = "E")]
        e: String,
        #[arg(long, value_enum, default_value = "a")]
        mode: ModeArg,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// Is E S-nice for the Gröbner basis of J?
    IsSnice {
        #[arg(long = "J")]
        j: String,
        #[arg(long = "E")]
        e: String,
        #[arg(long)]
        gb: Option<String>,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// Smallest enlargement of a monomial ideal E making (J, E) G-nice.
    Hat {
        #[arg(long = "J")]
        j: String,
        #[arg(long = "E")]
        e: String,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// S-polynomial closure of E.
    Tilde {
        #[arg(long = "J")]
        j: String,
        #[arg(long = "E")]
        e: String,
        #[arg(long)]
        gb: Option<String>,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// Monomial S-polynomial closure of E.
    Sharp {
        #[arg(long = "J")]
        j: String,
        #[arg(long = "E")]
        e: String,
        #[arg(long)]
        gb: Option<String>,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// Normal-form ideal NF_J(E).
    NfIdeal {
        #[arg(long = "J")]
        j: String,
        #[arg(long = "E")]
        e: String,
        #[arg(long)]
        gb: Option<String>,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// Transfer of a regular sequence to initial forms.
    Regseq {
        #[arg(long = "J")]
        j: String,
        #[arg(long, value_delimiter = ',')]
        fs: Vec<String>,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// Distributivity of J over E and E'.
    Distrib {
        #[arg(long = "J")]
        j: String,
        #[arg(long = "E")]
        e: String,
        #[arg(long = "E2")]
        e2: String,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// Dual distributivity of J over E and E'.
    DistribDual {
        #[arg(long = "J")]
        j: String,
        #[arg(long = "E")]
        e: String,
        #[arg(long = "E2")]
        e2: String,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// Intersection of a family of monomial ideals against J.
    FamilyIntersect {
        #[arg(long = "J")]
        j: String,
        #[arg(long = "Es", value_delimiter = ',')]
        es: Vec<String>,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// Split a sum of a G-nice family by a subset of its members.
    SumSplit {
        #[arg(long = "Es", value_delimiter = ',')]
        es: Vec<String>,
        #[arg(long = "X", value_delimiter = ',')]
        x: Vec<String>,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
    /// Condition A under every lex and degrevlex order.
    OrderSweep {
        #[arg(long = "J")]
        j: String,
        #[arg(long = "E")]
        e: String,
        #[arg(value_name = "SESSION")]
        session: Option<PathBuf>,
    },
}

fn limits(cli: &Cli) -> Limits {
    let mut l = Limits::default();
    if cli.slow {
        l = Limits {
            max_pairs: usize::MAX,
            max_degree: u32::MAX,
            max_iterations: usize::MAX,
        };
    }
    if let Some(p) = cli.max_pairs {
        l.max_pairs = p;
    }
    if let Some(i) = cli.max_iters {
        l.max_iterations = i;
    }
    l
}

impl Command {
    fn session(&self) -> Option<&PathBuf> {
        use Command::*;
        match self {
            Gb { session, .. }
            | Ini { session, .. }
            | Nf { session, .. }
            | Spoly { session, .. }
            | Intersect { session, .. }
            | Colon { session, .. }
            | Member { session, .. }
            | IsGnice { session, .. }
            | IsSnice { session, .. }
            | Hat { session, .. }
            | Tilde { session, .. }
            | Sharp { session, .. }
            | NfIdeal { session, .. }
            | Regseq { session, .. }
            | Distrib { session, .. }
            | DistribDual { session, .. }
            | FamilyIntersect { session, .. }
            | SumSplit { session, .. }
            | OrderSweep { session, .. } => session.as_ref(),
        }
    }
}

fn session_path(cli: &Cli) -> Result<&PathBuf, CliError> {
    match (cli.session.as_ref(), cli.command.session()) {
        (Some(p), None) | (None, Some(p)) => Ok(p),
        (None, None) => Err(CliError::Usage("no session file given".into())),
        (Some(_), Some(_)) => Err(CliError::Usage("session file given twice".into())),
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let text = std::fs::read_to_string(session_path(cli)?)?;
    let s = Session::parse(&text, cli.order.as_deref(), limits(cli))?;
    use commands as c;
    match &cli.command {
        Command::Gb { i, .. } => c::gb(&s, i),
        Command::Ini { i, .. } => c::ini(&s, i),
        Command::Nf { i, gb, f, .. } => c::nf(&s, f, i.as_deref().unwrap_or_default(), gb.as_deref()),
        Command::Spoly { f, g, .. } => c::spoly(&s, f, g),
        Command::Intersect { j, e, .. } => c::intersect(&s, j, e),
        Command::Colon { j, f, .. } => c::colon(&s, j, f),
        Command::Member { i, f, .. } => c::member(&s, i, f),
        Command::IsGnice { j, e, mode, .. } => c::is_gnice_cmd(&s, j, e, (*mode).into()),
        Command::IsSnice { j, e, gb, .. } => c::is_snice_cmd(&s, j, e, gb.as_deref()),
        Command::Hat { j, e, .. } => c::hat(&s, j, e),
        Command::Tilde { j, e, gb, .. } => c::tilde(&s, j, e, gb.as_deref()),
        Command::Sharp { j, e, gb, .. } => c::sharp(&s, j, e, gb.as_deref()),
        Command::NfIdeal { j, e, gb, .. } => c::nf_ideal_cmd(&s, j, e, gb.as_deref()),
        Command::Regseq { j, fs, .. } => c::regseq(&s, j, fs),
        Command::Distrib { j, e, e2, .. } => c::distrib(&s, j, e, e2),
        Command::DistribDual { j, e, e2, .. } => c::distrib_dual(&s, j, e, e2),
        Command::FamilyIntersect { j, es, .. } => c::family_intersect(&s, j, es),
        Command::SumSplit { es, x, .. } => c::sum_split(&s, es, x),
        Command::OrderSweep { j, e, .. } => c::order_sweep_cmd(&s, j, e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("gnice: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
