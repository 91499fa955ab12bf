use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "zc", version, about = "Exact Witt-vector, Almkvist and Hadamard ring computations")]
pub struct Cli {
    /// Truncation order for series and the number of sequence terms shown.
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
    pub order: u64,

    /// Largest number of points a single enumeration may visit.
    #[arg(long, global = true, env = "ZC_BUDGET", default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for point enumeration (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Read series operands as denominator polynomials `q`, standing for `1/q`.
    #[arg(long, global = true)]
    pub inverse_input: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Big Witt vectors, stored as power series with constant term 1.
    #[command(subcommand)]
    Witt(WittCmd),
    /// The Almkvist ring of rational functions `p/q`.
    #[command(subcommand)]
    W0(W0Cmd),
    /// Integral linear recursive sequences under termwise operations.
    #[command(subcommand)]
    Hadamard(HadamardCmd),
    /// Polynomial motives in the Lefschetz class `L`.
    #[command(subcommand)]
    Motive(MotiveCmd),
    /// Point counts of affine varieties over finite fields.
    #[command(subcommand)]
    Variety(VarietyCmd),
    /// Finite dynamical systems and homology actions.
    #[command(subcommand)]
    Dynsys(DynsysCmd),
}

#[derive(Args, Debug)]
pub struct Pair {
    /// First operand (JSON).
    #[arg(long)]
    pub a: String,
    /// Second operand (JSON).
    #[arg(long)]
    pub b: String,
}

#[derive(Args, Debug)]
pub struct Single {
    /// Operand (JSON).
    #[arg(long)]
    pub a: String,
}

#[derive(Subcommand, Debug)]
pub enum WittCmd {
    /// Witt sum: the product of the series.
    Add(Pair),
    /// Witt product.
    Mul(Pair),
    /// Additive inverse.
    Neg(Single),
    /// Ghost components `g_1 .. g_N`.
    Ghost(Single),
    /// The Witt vector with the given ghost components.
    GhostInv {
        /// Ghost components as a JSON list.
        #[arg(long)]
        ghost: String,
    },
    /// Adams operation `Psi_n`.
    Adams {
        #[arg(long)]
        a: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum W0Cmd {
    /// The class of an integer matrix, `1/det(1 - tM)`.
    FromMatrix {
        /// Square matrix as a JSON list of rows.
        #[arg(long)]
        matrix: String,
    },
    Add(Pair),
    Mul(Pair),
    /// Expansion into the Witt ring.
    L(Single),
    /// Trace sequence.
    Tr(Single),
    /// Recover `p/q` from a series with constant term 1.
    Detect {
        /// Series coefficients as a JSON list.
        #[arg(long)]
        series: String,
        /// Degree bound for numerator and denominator (default `(order - 2) / 2`).
        #[arg(long)]
        max_deg: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum HadamardCmd {
    /// Minimal presentation of a sequence.
    New {
        /// Initial terms, one per degree of the characteristic polynomial.
        #[arg(long, requires = "charpoly", conflicts_with = "terms")]
        init: Option<String>,
        /// Monic characteristic polynomial, coefficients ascending.
        #[arg(long)]
        charpoly: Option<String>,
        /// A window of terms from which the recurrence is found.
        #[arg(long)]
        terms: Option<String>,
    },
    /// The first `order` terms.
    Terms(Single),
    Add(Pair),
    Mul(Pair),
    /// Finite-window tensor decomposition of the coproduct.
    Delta {
        #[arg(long)]
        a: String,
        #[arg(long, default_value_t = 8)]
        window: usize,
    },
    /// Counit, primitivity and group-likeness.
    Classify {
        #[arg(long)]
        a: String,
        #[arg(long, default_value_t = 8)]
        window: usize,
    },
}

#[derive(Args, Debug)]
pub struct MotiveInput {
    /// Dimensions of the tori in a torification, as a JSON list.
    #[arg(long, conflicts_with = "poly")]
    pub tori: Option<String>,
    /// Coefficients in `L`, ascending, as a JSON list.
    #[arg(long)]
    pub poly: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum MotiveCmd {
    /// The motive of a torified variety.
    FromTori {
        #[arg(long)]
        tori: String,
    },
    /// Value of a counting measure.
    Count {
        #[command(flatten)]
        motive: MotiveInput,
        /// Count over `F_1^n`, sending `L` to `n + 1`.
        #[arg(long, conflicts_with = "l")]
        n: Option<u64>,
        /// Send `L` to this integer.
        #[arg(long, allow_hyphen_values = true)]
        l: Option<i64>,
    },
    /// Zeta function over `F_1` of a torified variety.
    F1Zeta {
        #[arg(long)]
        tori: String,
    },
    /// Kapranov zeta function under the measure `L -> l`.
    Kapranov {
        #[command(flatten)]
        motive: MotiveInput,
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
    },
    /// Adams operation `L -> L^n`.
    Adams {
        #[command(flatten)]
        motive: MotiveInput,
        #[arg(long)]
        n: u32,
    },
    /// Coproduct `p(L1 + L2 - 2)`.
    Delta {
        #[command(flatten)]
        motive: MotiveInput,
    },
    /// Image in the Hadamard ring, term `n` being `p(2 + c(n - 1))`.
    CMap {
        #[command(flatten)]
        motive: MotiveInput,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        c: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum VarietyCmd {
    /// Number of points over `F_{p^n}`.
    Count {
        #[arg(long)]
        file: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Points over `F_{p^m}` fixed by the `n`-th Frobenius power.
    Frobenius {
        #[arg(long)]
        file: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Weil zeta function from the counts `n = 1 .. order`.
    Zeta {
        #[arg(long)]
        file: String,
        /// Report the zeta function as a rational function.
        #[arg(long)]
        detect: bool,
        /// Degree bound for detection (default `(order - 2) / 2`).
        #[arg(long)]
        max_deg: Option<usize>,
    },
    /// Product of two varieties over the same prime.
    Product {
        #[arg(long)]
        file: String,
        #[arg(long)]
        other: String,
    },
}

#[derive(Args, Debug)]
pub struct SystemInput {
    /// Self-map of `{0, .., k-1}` as a JSON list.
    #[arg(long, conflicts_with = "file")]
    pub map: Option<String>,
    /// File holding the map, as a list or `{"map": [...]}`.
    #[arg(long)]
    pub file: Option<String>,
}

#[derive(Args, Debug)]
pub struct HomologyInput {
    /// File holding `{"matrices": [...]}`.
    #[arg(long, conflicts_with = "matrix")]
    pub file: Option<String>,
    /// A single matrix as a JSON list of rows.
    #[arg(long)]
    pub matrix: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ring {
    Witt,
    Hadamard,
}

#[derive(Subcommand, Debug)]
pub enum DynsysCmd {
    /// Number of points fixed by the `n`-th iterate.
    Fix {
        #[command(flatten)]
        system: SystemInput,
        #[arg(long)]
        n: usize,
    },
    /// Artin-Mazur zeta function.
    Zeta {
        #[command(flatten)]
        system: SystemInput,
        #[arg(long)]
        detect: bool,
        #[arg(long)]
        max_deg: Option<usize>,
    },
    /// Cyclotomic factorization and period of each homology action.
    QuasiUnipotent {
        #[command(flatten)]
        homology: HomologyInput,
    },
    /// Morse-Smale invariant in the Witt or Hadamard ring.
    MorseSmale {
        #[command(flatten)]
        homology: HomologyInput,
        #[arg(long, value_enum, default_value_t = Ring::Witt)]
        ring: Ring,
    },
}
