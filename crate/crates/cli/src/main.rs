use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

mod commands;

use commands::{CliError, Report};

#[derive(Parser, Debug)]
#[command(name = "sepinv", version, about = "Helly dimension, orbit separation, torus and binary-form checks")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Directory for cached subgroup lattices.
    #[arg(long, global = true, value_name = "PATH")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Group tables.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Subgroup lattices.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Helly dimension.
    #[command(subcommand)]
    Helly(HellyCmd),
    /// Orbit equality of tuples.
    #[command(subcommand)]
    Orbit(OrbitCmd),
    /// Monomial invariants of diagonal tori.
    #[command(subcommand)]
    Torus(TorusCmd),
    /// Binary forms over Q.
    #[command(subcommand)]
    Binary(BinaryCmd),
}

#[derive(Args, Debug, Clone)]
struct GroupArg {
    /// cyclic:n, dicyclic:n, binary:{tet,oct,ico}, klein4, alt4, sym4 or alt5.
    #[arg(long, value_name = "KIND:PARAMS")]
    group: String,
}

#[derive(Subcommand, Debug)]
enum GroupCmd {
    /// Order, center, abelianization and content hash.
    Info(GroupArg),
    /// Full multiplication table.
    Build(GroupArg),
}

#[derive(Subcommand, Debug)]
enum LatticeCmd {
    /// All subgroups with their members.
    Subgroups(GroupArg),
    /// Longest chain of proper subgroups.
    Lambda(GroupArg),
    /// Largest intersection-independent family.
    Mu(GroupArg),
}

#[derive(Subcommand, Debug)]
enum HellyCmd {
    /// kappa, mu, lambda and a witness.
    Compute(GroupArg),
    /// Definition-level brute force (order <= 48).
    Oracle {
        #[command(flatten)]
        group: GroupArg,
        /// Largest family size enumerated; defaults to mu + 1.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// The canonical maximal minimal empty coset family.
    Witness(GroupArg),
    /// kappa, mu and lambda over the whole zoo, with the published bounds.
    VerifyPaper,
}

#[derive(Subcommand, Debug)]
enum OrbitCmd {
    /// Classify a pair of tuples at a given d.
    Check {
        #[command(flatten)]
        group: GroupArg,
        /// Act on the disjoint union of these coset spaces (subgroup ids); default is the regular action.
        #[arg(long, value_delimiter = ',', conflicts_with = "diagonal")]
        subgroups: Option<Vec<usize>>,
        /// Field size for a diagonal linear action of a cyclic group.
        #[arg(long, requires = "diagonal")]
        field: Option<usize>,
        /// Diagonal entries of the generator's matrix.
        #[arg(long, value_delimiter = ',', requires = "field")]
        diagonal: Option<Vec<u8>>,
        /// First tuple as JSON: point indices, or vectors for a linear action.
        #[arg(long)]
        x: String,
        /// Second tuple as JSON.
        #[arg(long = "x-prime")]
        x_prime: String,
        #[arg(long)]
        d: usize,
    },
    /// The G-set instance built from the kappa witness.
    WitnessInstance {
        #[command(flatten)]
        group: GroupArg,
        /// Also run this many random instances at d = kappa.
        #[arg(long, requires = "seed")]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Random check that (n+1)-wise orbit equality implies orbit equality.
    VerifyReductive {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        field: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        diagonal: Vec<u8>,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum TorusCmd {
    /// First separating invariant monomial for two rational points.
    Separate {
        /// Weight matrix as JSON, one row per torus coordinate.
        #[arg(long)]
        weights: String,
        #[arg(long)]
        copies: usize,
        /// Point as a JSON array of rationals, copy after copy.
        #[arg(long)]
        v: String,
        #[arg(long = "v-prime")]
        v_prime: String,
        #[arg(long, default_value_t = 12)]
        degree_cap: u32,
        /// 1-based copies allowed in the monomial; default all.
        #[arg(long, value_delimiter = ',')]
        support: Option<Vec<usize>>,
    },
    /// The weight -2 example over Q.
    Sharpness {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 12)]
        degree_cap: u32,
    },
    /// The weight -3 example over GF(4).
    Char2 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 12)]
        degree_cap: u32,
    },
}

#[derive(Subcommand, Debug)]
enum BinaryCmd {
    /// Root multiplicity strata of one form.
    Profile {
        /// Coefficients of x^0 y^d, ..., x^d y^0 as JSON rationals ("p/q").
        #[arg(long)]
        form: String,
    },
    /// Case label and orbit flags of a tuple.
    Classify {
        /// JSON array of forms.
        #[arg(long)]
        forms: String,
    },
    /// Limit along the torus scaling l by z and m by 1/z.
    Limit {
        #[arg(long)]
        form: String,
        #[arg(long)]
        l: String,
        #[arg(long)]
        m: String,
    },
}

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let ctx = commands::Context::new(cli.cache_dir.clone());
    match &cli.command {
        Command::Group(GroupCmd::Info(g)) => commands::group_info(&g.group),
        Command::Group(GroupCmd::Build(g)) => commands::group_build(&g.group),
        Command::Lattice(LatticeCmd::Subgroups(g)) => commands::lattice_subgroups(&ctx, &g.group),
        Command::Lattice(LatticeCmd::Lambda(g)) => commands::lattice_lambda(&ctx, &g.group),
        Command::Lattice(LatticeCmd::Mu(g)) => commands::lattice_mu(&ctx, &g.group),
        Command::Helly(HellyCmd::Compute(g)) => commands::helly_compute(&ctx, &g.group),
        Command::Helly(HellyCmd::Oracle { group, cap }) => commands::helly_oracle(&ctx, &group.group, *cap),
        Command::Helly(HellyCmd::Witness(g)) => commands::helly_witness(&ctx, &g.group),
        Command::Helly(HellyCmd::VerifyPaper) => commands::helly_verify_paper(&ctx),
        Command::Orbit(OrbitCmd::Check { group, subgroups, field, diagonal, x, x_prime, d }) => {
            let linear = field.zip(diagonal.clone());
            commands::orbit_check(&ctx, &group.group, subgroups.as_deref(), linear, x, x_prime, *d)
        }
        Command::Orbit(OrbitCmd::WitnessInstance { group, trials, seed }) => {
            commands::orbit_witness_instance(&ctx, &group.group, trials.zip(*seed))
        }
        Command::Orbit(OrbitCmd::VerifyReductive { group, field, diagonal, trials, seed }) => {
            commands::orbit_verify_reductive(&group.group, *field, diagonal, *trials, *seed)
        }
        Command::Torus(TorusCmd::Separate { weights, copies, v, v_prime, degree_cap, support }) => {
            commands::torus_separate(weights, *copies, v, v_prime, *degree_cap, support.as_deref())
        }
        Command::Torus(TorusCmd::Sharpness { n, degree_cap }) => commands::torus_sharpness(*n, *degree_cap),
        Command::Torus(TorusCmd::Char2 { n, degree_cap }) => commands::torus_char2(*n, *degree_cap),
        Command::Binary(BinaryCmd::Profile { form }) => commands::binary_profile(form),
        Command::Binary(BinaryCmd::Classify { forms }) => commands::binary_classify(forms),
        Command::Binary(BinaryCmd::Limit { form, l, m }) => commands::binary_limit(form, l, m),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.value).expect("values serialize"));
            } else {
                print!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
