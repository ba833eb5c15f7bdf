mod commands;
mod load;
mod names;

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{Outcome, Status};

/// Homological reports for bound quiver algebras.
///
/// FILE is an algebra description file, or `@name` for a bundled fixture
/// (e1, e2, e3_n4, e3_n5, e3p_n4, e3p_n5, e4, a3, a3_rev, aus_kx2,
/// nakayama_selfinj).
#[derive(Parser, Debug)]
#[command(name = "domtilt", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Cap on resolution lengths and homological degrees.
    #[arg(long, global = true, default_value_t = 8)]
    pub bound: usize,
    /// Override the field of the file with F_p.
    #[arg(long, global = true)]
    pub field: Option<u32>,
    /// Partial order for `qh`, e.g. "2<3<1<4"; defaults to the file's first `order` line.
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Run the brute-force cross-checks as well.
    #[arg(long, global = true)]
    pub oracle: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal projective resolution and injective coresolution.
    Resolve {
        file: String,
        /// Module expression; defaults to A.
        #[arg(long)]
        module: Option<String>,
    },
    /// The tilting chain T^1, ..., T^{m+1} from Q.
    Tilting {
        file: String,
        /// Module expression for Q; defaults to the file's `Q`, else the
        /// canonical injective of pd <= 1.
        #[arg(long)]
        q: Option<String>,
        /// Test one module for the tilting axioms instead.
        #[arg(long)]
        check: Option<String>,
    },
    /// Homological invariants and the almost Auslander(-Gorenstein) levels.
    Classify { file: String },
    /// Standard modules, the characteristic tilting module and strong flags.
    Qh { file: String },
    /// Endomorphism algebras of the chain modules.
    #[command(name = "section4", visible_alias = "endo")]
    Endo {
        file: String,
        #[arg(long)]
        q: Option<String>,
    },
    /// `classify`, `tilting` and `qh` on several inputs; all fixtures by default.
    ReportAll { files: Vec<String> },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = &cli.opts;
    let result = match &cli.command {
        Command::Resolve { file, module } => commands::resolve(file, module.as_deref(), opts),
        Command::Tilting { file, q, check } => commands::tilting(file, q.as_deref(), check.as_deref(), opts),
        Command::Classify { file } => commands::classify(file, opts),
        Command::Qh { file } => commands::qh(file, opts),
        Command::Endo { file, q } => commands::chain_endos(file, q.as_deref(), opts),
        Command::ReportAll { files } => commands::report_all(files, opts),
    };
    match result {
        Ok(out) => {
            emit(&out, opts.format);
            match out.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Refused => ExitCode::from(2),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn emit(out: &Outcome, format: Format) {
    let mut stdout = std::io::stdout().lock();
    let _ = match format {
        Format::Text => write!(stdout, "{}", out.text),
        Format::Structured => {
            let s = serde_json::to_string_pretty(&out.document()).expect("report serialises");
            writeln!(stdout, "{s}")
        }
    };
}
