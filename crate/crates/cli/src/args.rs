use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "krawtchouk",
    version,
    about = "Krawtchouk transforms, convolutions and identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Number of steps; signals have length N + 1.
    #[arg(long = "N", value_name = "N")]
    pub n: usize,
    /// Bernoulli probability, as "a/b" or a decimal.
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    pub p: String,
    /// Jump size, as "a/b" or a decimal.
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    pub lambda: String,
    /// Arithmetic backend; exact for N <= 16 and float above when omitted.
    #[arg(long, value_enum)]
    pub backend: Option<Backend>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output path, "-" for stdout.
    #[arg(short, long, default_value = "-")]
    pub output: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one of the structural matrices.
    Matrix {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Which::Phi)]
        which: Which,
    },
    /// Forward transform F(j) = sum_n f(n) k_n(j, N).
    Transform {
        #[command(flatten)]
        common: Common,
        /// Input vector path, "-" for stdin.
        #[arg(short, long, default_value = "-")]
        input: String,
    },
    /// Inverse transform.
    Inverse {
        #[command(flatten)]
        common: Common,
        #[arg(short, long, default_value = "-")]
        input: String,
    },
    /// Krawtchouk convolution of two vectors.
    Convolve {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "PATH")]
        f: String,
        #[arg(long, value_name = "PATH")]
        g: String,
        #[arg(long, value_enum, default_value_t = Route::Direct)]
        route: Route,
    },
    /// Images of the binomial functions; all of them as matrix rows unless
    /// --index is given.
    Basis {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = BasisKind::Dual)]
        kind: BasisKind,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Run the identity suite and report each check.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Relative tolerance for the float backend.
        #[arg(long, default_value_t = krawtchouk_core::DEFAULT_REL_TOL)]
        tol: f64,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Matrix { common, .. }
            | Command::Transform { common, .. }
            | Command::Inverse { common, .. }
            | Command::Convolve { common, .. }
            | Command::Basis { common, .. }
            | Command::Verify { common, .. } => common,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Phi,
    /// Inverse of Phi.
    PhiInv,
    B,
    Gamma,
    P,
    Pprime,
    /// T(N) of the shift-operator transform.
    Tn,
    U,
    /// J D, Phi in the binomial basis (symmetric case only).
    Jd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Direct,
    Shift,
    Inversion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisKind {
    /// Phi f_m for f_m(j) = C(m, j) p^(m-j) q^j.
    Dual,
    /// f_i Phi for f_i(n) = C(N-n, N-i) p^(i-n) lambda^(-n).
    Row,
}
