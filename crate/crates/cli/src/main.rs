//! `localarith`: command-line access to the localarith kernels.

mod commands;
mod reproduce;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use localarith::padic::DEFAULT_PREC;
use localarith::Error;

#[derive(Parser)]
#[command(name = "localarith", version, about = "Exact arithmetic in local fields")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Working p-adic precision in digits.
    #[arg(long, env = "PADIC_PREC", default_value_t = DEFAULT_PREC, global = true)]
    pub prec: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A polynomial given inline or read from a file.
#[derive(Args, Clone)]
pub struct PolyInput {
    /// Polynomial such as "1 + T + 1/2*T^2".
    pub poly: Option<String>,
    /// Read the polynomial from this file instead.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum Command {
    /// p-adic valuation of a rational.
    Vp {
        #[arg(short)]
        p: u64,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// All normalized absolute values of a nonzero rational and their product.
    ProductFormula {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Valuations on F_q(T); without --place, checks the sum formula.
    FfVal {
        #[arg(short)]
        q: u64,
        /// Numerator coefficients over F_q, lowest degree first ("1,0,1").
        #[arg(long)]
        num: String,
        /// Denominator coefficients, lowest degree first.
        #[arg(long, default_value = "1")]
        den: String,
        /// "inf" or a monic irreducible polynomial as a coefficient list.
        #[arg(long)]
        place: Option<String>,
    },
    /// A rational close to given values at finitely many places.
    WeakApprox {
        /// PLACE:VALUE:EPS with PLACE a prime or "inf"; repeatable.
        #[arg(long = "target", required = true, allow_hyphen_values = true)]
        targets: Vec<String>,
    },
    /// The Bernoulli number B_k.
    Bernoulli { k: usize },
    /// W_k = B_k + Σ_{l-1 | k} 1/l and the denominator of B_k.
    StaudtClausen { k: u64 },
    /// A rational as a p-adic number with its digit expansion.
    Padic {
        #[arg(short)]
        p: u64,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Square root in Q_p.
    Sqrt {
        #[arg(short)]
        p: u64,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// The (p-1)-th root of unity with the given residue.
    Teichmuller {
        #[arg(short)]
        p: u64,
        #[arg(allow_hyphen_values = true)]
        a: i64,
    },
    /// Newton lifting of an approximate root of an integer polynomial.
    Lift {
        #[arg(short)]
        p: u64,
        #[command(flatten)]
        input: PolyInput,
        /// Starting approximation.
        #[arg(long, allow_hyphen_values = true)]
        a0: i64,
    },
    /// Newton polygon of a polynomial over Q_p.
    Polygon {
        #[arg(short)]
        p: u64,
        #[command(flatten)]
        input: PolyInput,
    },
    /// Lift f ≡ g0 h0 mod p^{2α+1} to a factorization mod p^prec.
    FactorLift {
        #[arg(short)]
        p: u64,
        #[command(flatten)]
        input: PolyInput,
        #[arg(long)]
        g0: String,
        #[arg(long)]
        h0: String,
        #[arg(long, default_value_t = 0)]
        alpha: u32,
    },
    /// Factorization into pure factors, one per side of the Newton polygon.
    SlopeFactor {
        #[arg(short)]
        p: u64,
        #[command(flatten)]
        input: PolyInput,
    },
    /// Weierstrass preparation of a truncated power series.
    Weierstrass {
        #[arg(short)]
        p: u64,
        #[command(flatten)]
        input: PolyInput,
        /// Valuation bound on the omitted terms; omit for a polynomial.
        #[arg(long)]
        tail: Option<i64>,
    },
    /// Resultant of two polynomials over Q.
    Resultant {
        g: String,
        h: String,
        /// Also report the p-adic valuation.
        #[arg(short)]
        p: Option<u64>,
    },
    /// Invariants of the extension defined by an Eisenstein polynomial.
    Eisenstein {
        #[arg(short)]
        p: u64,
        #[command(flatten)]
        input: PolyInput,
    },
    /// Ramification filtrations.
    #[command(subcommand)]
    Ramification(RamificationCmd),
    /// Unramified and tamely ramified extensions.
    #[command(subcommand)]
    Extensions(ExtensionsCmd),
    /// Regenerate the reference tables.
    Reproduce {
        #[arg(long)]
        all: bool,
        #[arg(long)]
        bernoulli: bool,
        #[arg(long)]
        polygon: bool,
        #[arg(long)]
        cyclotomic: bool,
        #[arg(long)]
        extensions: bool,
    },
}

#[derive(Subcommand)]
pub enum RamificationCmd {
    /// Gal(Q_p(ζ_{p^n})|Q_p) with its lower and upper filtrations.
    Cyclotomic {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        n: u32,
    },
}

#[derive(Subcommand)]
pub enum ExtensionsCmd {
    /// Number of tame extensions with invariants (e, f).
    Count {
        #[arg(short)]
        q: u64,
        #[arg(short)]
        e: u64,
        #[arg(short)]
        f: u32,
    },
    /// Galois and abelian criteria for K_f(ᵉ√(u^r π)).
    Classify {
        #[arg(short)]
        q: u64,
        #[arg(short)]
        e: u64,
        #[arg(short)]
        f: u32,
        #[arg(short)]
        r: u64,
    },
    /// Degree of K(ζ_n) over K.
    Splitting {
        #[arg(short)]
        q: u64,
        #[arg(short)]
        n: u64,
    },
    /// Structure of (Z/p^n)^×.
    Units {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        n: u32,
    },
}

/// A command result in both renderings.
pub struct Output {
    pub text: String,
    pub json: serde_json::Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

pub type CmdResult = Result<Output, Error>;
