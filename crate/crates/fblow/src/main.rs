use clap::{Parser, Subcommand, ValueEnum};

use fblow::cli::{self, Format, InputSpec};

#[derive(Parser)]
#[command(
    name = "fblow",
    version,
    about = "Exact-arithmetic F-blowups of affine toric varieties from monoid data"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Singularity predicates: weak normality, F-purity, normality
    Analyze {
        /// Input file path or inline JSON
        input: String,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Fan, charts and smoothness at a single Frobenius level
    Fblow {
        /// Input file path or inline JSON
        input: String,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Levels 1..e_max with monotonicity, the image condition, stabilization
    Sequence {
        /// Input file path or inline JSON
        input: String,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Hypersurface F-purity from the Frobenius power of f
    Fedder {
        /// Polynomial in variables x0..x9, e.g. "x0^2 + x1*x2"
        polynomial: String,
        /// Characteristic (a prime)
        #[arg(long)]
        p: u64,
    },
}

#[derive(clap::Args)]
struct Overrides {
    /// Frobenius level e
    #[arg(long)]
    e: Option<u32>,
    /// Largest level for sequence reports
    #[arg(long)]
    e_max: Option<u32>,
    /// Interior weight, comma separated: w1,...,wd
    #[arg(long)]
    weight: Option<String>,
    /// Extra enumeration depth for chart generators (d >= 2)
    #[arg(long)]
    degree_bound: Option<i64>,
    /// Seed echoed into reports; used by corpus-generating examples
    #[arg(long)]
    seed: Option<u64>,
}

impl Overrides {
    fn apply(&self, spec: &mut InputSpec) -> Result<(), String> {
        if let Some(e) = self.e {
            spec.e = Some(e);
        }
        if let Some(e_max) = self.e_max {
            spec.e_max = Some(e_max);
        }
        if let Some(w) = &self.weight {
            let parsed: Result<Vec<i64>, _> =
                w.split(',').map(|c| c.trim().parse::<i64>()).collect();
            spec.weight =
                Some(parsed.map_err(|_| format!("invalid weight '{w}': expected w1,...,wd"))?);
        }
        if let Some(db) = self.degree_bound {
            spec.degree_bound = Some(db);
        }
        if let Some(seed) = self.seed {
            spec.seed = Some(seed);
        }
        Ok(())
    }
}

fn main() {
    let args = Args::parse();
    let format: Format = args.format.into();
    let outcome = match &args.command {
        Command::Analyze { input, overrides } => with_spec(input, overrides, |spec| {
            cli::run_analyze(spec, format)
        }),
        Command::Fblow { input, overrides } => with_spec(input, overrides, |spec| {
            cli::run_fblow(spec, format)
        }),
        Command::Sequence { input, overrides } => with_spec(input, overrides, |spec| {
            cli::run_sequence(spec, format)
        }),
        Command::Fedder { polynomial, p } => cli::run_fedder(polynomial, *p, format),
    };
    match outcome {
        Ok(rendered) => {
            print!("{}", rendered.body);
            std::process::exit(if rendered.certified { 0 } else { 2 });
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(cli::exit_code_for(&err));
        }
    }
}

fn with_spec(
    input: &str,
    overrides: &Overrides,
    run: impl FnOnce(&InputSpec) -> fblow::Result<cli::Rendered>,
) -> fblow::Result<cli::Rendered> {
    let mut spec = cli::load_input(input)?;
    overrides
        .apply(&mut spec)
        .map_err(fblow::Error::Validation)?;
    run(&spec)
}
