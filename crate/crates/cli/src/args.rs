use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "zplane",
    version,
    about = "Arithmetic in the Gaussian, hyperbolic and parabolic integers",
    long_about = "Arithmetic in Z[i] (i² = −1), Z[j] (j² = 1) and Z[k] (k² = 0).\n\n\
        Elements are written x+yi, x-yj, yk, ... The unit letter picks the ring; \
        plain integers need --ring."
)]
pub struct Cli {
    /// Emit JSON instead of text. Integers are encoded as decimal strings.
    #[arg(long, global = true)]
    pub json: bool,

    /// Colorize text output.
    #[arg(long, global = true, value_enum, default_value_t = ColorChoice::Auto)]
    pub color: ColorChoice,

    /// Ring for inputs without a unit letter: i, j or k.
    #[arg(long, global = true, value_name = "RING")]
    pub ring: Option<zplane::RingKind>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ColorChoice {
    Auto,
    Always,
    Never,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleMode {
    /// Decide irreducibility by enumerating divisors.
    Irreducible,
    /// Search a box for a counterexample to primality.
    Prime,
    /// List divisors up to associates.
    Divisors,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Unit, zero-divisor, prime and irreducible status of an element.
    Classify {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Factor an element into irreducibles.
    Factor {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Division with remainder: a = q·b + r with η⁺(r) < η⁺(b).
    Divmod {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Norm, trace, conjugate and canonical associate.
    Norm {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Which n ≤ N are differences of two squares, with witnesses.
    Dts {
        #[arg(value_name = "N_MAX")]
        n_max: u64,
    },
    /// Decompose the ideal generated by the given elements.
    ///
    /// Put generators with a leading minus sign after `--`.
    Ideal {
        #[arg(required = true)]
        generators: Vec<String>,
        /// Also test membership of this element.
        #[arg(long, allow_hyphen_values = true)]
        contains: Option<String>,
    },
    /// Brute-force checks: irreducible, prime or divisors.
    Oracle {
        #[arg(value_enum)]
        mode: OracleMode,
        #[arg(allow_hyphen_values = true)]
        element: String,
        /// Coordinate bound for the primality search.
        #[arg(long = "box", value_name = "B", default_value_t = 10)]
        bound: u32,
    },
    /// Which plane R[x]/(ax² + bx + c) is, with the change of basis.
    ClassifyPoly {
        /// Leading coefficient, an integer or p/q.
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Exponential of x + θy with real coordinates (needs --ring).
    Exp {
        #[arg(allow_hyphen_values = true)]
        x: f64,
        #[arg(allow_hyphen_values = true)]
        y: f64,
    },
    /// n-th power of x + θy with real coordinates (needs --ring).
    Pow {
        #[arg(allow_hyphen_values = true)]
        x: f64,
        #[arg(allow_hyphen_values = true)]
        y: f64,
        #[arg(allow_hyphen_values = true)]
        n: i32,
    },
    /// Classification table of all associate classes in a box (needs --ring).
    Table {
        /// Coordinate bound.
        #[arg(long, value_name = "B")]
        bound: u32,
    },
}
