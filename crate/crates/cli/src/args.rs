use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "k3lat",
    version,
    about = "Exact lattice computations for K3-type lattices"
)]
pub struct Cli {
    /// Render output as a plain-text table instead of JSON.
    #[arg(long, global = true)]
    pub table: bool,

    /// Emit every integer as a JSON number, however large.
    #[arg(long, global = true)]
    pub raw_ints: bool,

    /// Worker threads for the enumeration kernels; 1 runs sequentially.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build and inspect lattices.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Explicit embeddings.
    #[command(subcommand)]
    Embed(EmbedCmd),
    /// Orthogonal complement of an embedding (read from INPUT).
    Complement(Input),
    /// Saturation of an embedding (read from INPUT).
    Saturate(Input),
    /// Vectors of a given norm in a positive-definite lattice.
    Roots {
        #[arg(long)]
        norm: String,
        #[command(flatten)]
        input: Input,
    },
    /// (−2)-vectors orthogonal to `v` in a hyperbolic lattice.
    Walls {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[command(flatten)]
        input: Input,
    },
    /// Bounded search for the least polarization degree.
    Mindeg {
        #[arg(long, default_value_t = 20)]
        norm_limit: i64,
        #[arg(long = "box", default_value_t = 10)]
        coeff_box: i64,
        #[command(flatten)]
        input: Input,
    },
    /// Recheck a polarization certificate.
    VerifyCert {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
        #[command(flatten)]
        input: Input,
    },
    /// Whether an isometry acts trivially on the discriminant group.
    DiscKernel {
        /// `{"lattice": ..., "matrix": ...}`; without "lattice", INPUT supplies it.
        #[arg(long)]
        isometry_file: String,
        #[command(flatten)]
        input: Input,
    },
    /// Integral Clifford algebra operations.
    #[command(subcommand)]
    Clifford(CliffordCmd),
    /// Positive-definite forms of bounded determinant.
    Enumerate {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        max_disc: u64,
        #[arg(long)]
        even: bool,
        /// Print the `disc,count` table instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// `(|disc N|, |disc N′|, [M : N + N′])` for two embeddings.
    CheckDiscComplement {
        #[arg(long)]
        n: String,
        #[arg(long)]
        nprime: String,
    },
}

/// Input document: a file path, inline JSON, or `-` / absent for stdin.
#[derive(Debug, Args)]
pub struct Input {
    pub input: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum LatticeCmd {
    /// `k3`, `l_d --d N`, `big-l`, `e8`, `u`, `rank-one --n N`, or a JSON file.
    Build {
        name: String,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
    },
    /// Rank, signature and discriminant data.
    Info(Input),
}

#[derive(Debug, Subcommand)]
pub enum EmbedCmd {
    FourSquares {
        #[arg(long)]
        m: u64,
    },
    LdInL {
        #[arg(long)]
        d: i64,
    },
    Vd {
        #[arg(long)]
        d: i64,
    },
}

/// Host lattice shared by the Clifford subcommands.
#[derive(Debug, Args)]
pub struct Host {
    /// Host lattice file or inline JSON; stdin when absent.
    #[arg(long)]
    pub host: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum CliffordCmd {
    Mul {
        #[command(flatten)]
        host: Host,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    Reversal {
        #[command(flatten)]
        host: Host,
        #[arg(long)]
        x: String,
    },
    PhiA {
        #[command(flatten)]
        host: Host,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        a: String,
    },
    FindA {
        #[command(flatten)]
        host: Host,
        #[arg(long, default_value_t = 2)]
        max_support: usize,
        #[arg(long, default_value_t = 2)]
        coeff_bound: i64,
    },
    Gspin {
        #[command(flatten)]
        host: Host,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Project `L_x` (or an explicit endomorphism) back to the host.
    Project {
        #[command(flatten)]
        host: Host,
        #[arg(
            long,
            conflicts_with = "endo_file",
            required_unless_present = "endo_file"
        )]
        x: Option<String>,
        /// `{"rank": n, "matrix": [[...]]}` in the subset-mask basis.
        #[arg(long)]
        endo_file: Option<String>,
    },
}
