//! `toric`: Poincaré polynomials and Weyl-group decompositions of toric
//! arrangements of root systems.

mod cache;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use toric_core::characters::{
    decompose, load_table_for, save_table, weyl_character_table, CharacterTable, DecompositionTable,
};
use toric_core::cohomology::{complement_poincare, toric_poincare, ClassPolynomial};
use toric_core::lattice::IntMatrix;
use toric_core::poset::{custom_poset, fixed_poset, hyperplane_poset, CustomArrangement, FixedPoset};
use toric_core::weyl::{ClassInvariants, DEFAULT_GROUP_BUDGET, LARGE_GROUP_BUDGET};
use toric_core::{Error, ErrorKind, Poly, RootSystem, WeylGroup};

use cache::ResultCache;

#[derive(Parser, Debug)]
#[command(name = "toric", version, about = "Cohomology of toric arrangements of root systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Allow groups larger than 100 000 elements (E7, A8 and up).
    #[arg(long, global = true)]
    large_memory: bool,

    /// Maximum number of poset nodes per class.
    #[arg(long, global = true, default_value_t = toric_core::poset::DEFAULT_NODE_BUDGET,
          value_parser = positive)]
    node_budget: usize,

    /// Directory for cached groups and class polynomials.
    #[arg(long, global = true, env = "TORIC_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Poincaré polynomial of the complement, for the identity or every class.
    Poincare {
        #[command(flatten)]
        input: Input,
        /// Evaluate the equivariant polynomial on every conjugacy class.
        #[arg(long)]
        all_classes: bool,
    },
    /// Multiplicities of the irreducible characters in each cohomology degree.
    Table {
        #[command(flatten)]
        system: System,
        /// Character table file to use instead of computing one.
        #[arg(long)]
        char_table: Option<PathBuf>,
        /// Write the character table used to this file.
        #[arg(long)]
        save_char_table: Option<PathBuf>,
        /// Append a row with the multiplicities summed over all degrees.
        #[arg(long)]
        total: bool,
    },
    /// Intersection poset of the arrangement for the identity.
    Poset {
        #[command(flatten)]
        input: Input,
        /// Report whether complexification is a poset isomorphism.
        #[arg(long)]
        check_tau: bool,
        /// Use the associated hyperplane arrangement instead.
        #[arg(long)]
        linear: bool,
        /// Write the full poset (nodes, Möbius values, covers) as JSON.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct System {
    /// Root system type: A..G, or a full label such as E6.
    #[arg(long = "type")]
    type_label: String,
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Args, Debug)]
#[group(skip)]
struct Input {
    /// Root system type: A..G, or a full label such as E6.
    #[arg(long = "type")]
    type_label: Option<String>,
    #[arg(long, requires = "type_label")]
    rank: Option<usize>,
    /// Custom arrangement file: {"rank": n, "vectors": [[...], ...]}.
    #[arg(long, conflicts_with = "type_label", required_unless_present = "type_label")]
    custom: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

enum Source {
    Root(RootSystem),
    Custom(CustomArrangement),
}

impl Input {
    fn resolve(&self) -> Result<Source, Error> {
        match (&self.type_label, &self.custom) {
            (Some(t), None) => Ok(Source::Root(RootSystem::from_label(t, self.rank)?)),
            (None, Some(path)) => Ok(Source::Custom(CustomArrangement::from_json(&std::fs::read_to_string(path)?)?)),
            _ => Err(Error::Schema("give exactly one of --type and --custom".into())),
        }
    }
}

struct Context {
    large_memory: bool,
    node_budget: usize,
    cache: Option<ResultCache>,
}

impl Context {
    fn group_budget(&self) -> usize {
        if self.large_memory {
            LARGE_GROUP_BUDGET
        } else {
            DEFAULT_GROUP_BUDGET
        }
    }

    /// Rejects systems whose group exceeds the budget before any work.
    fn check_scale(&self, rs: &RootSystem) -> Result<(), Error> {
        let order = rs.cartan_type().weyl_order();
        let budget = self.group_budget();
        if order > budget as u128 {
            return Err(Error::MemoryBudgetExceeded { order: usize::try_from(order).unwrap_or(usize::MAX), budget });
        }
        Ok(())
    }

    fn group(&self, rs: &RootSystem) -> Result<WeylGroup, Error> {
        self.check_scale(rs)?;
        match &self.cache {
            Some(c) => WeylGroup::enumerate_cached(rs, self.group_budget(), c.dir()),
            None => WeylGroup::enumerate(rs, self.group_budget()),
        }
    }

    fn class_poly(&self, rs: &RootSystem, g: &IntMatrix, inv: &ClassInvariants) -> Result<Poly, Error> {
        match &self.cache {
            Some(c) => c.poincare(rs, g, &inv.label(), self.node_budget),
            None => toric_poincare(rs, g, self.node_budget),
        }
    }

    /// Equivariant polynomial on every class, through the cache when set.
    fn class_polynomials(&self, rs: &RootSystem, group: &WeylGroup) -> Result<ClassPolynomial, Error> {
        use rayon::prelude::*;
        let classes = group.conjugacy_classes(rs)?;
        let polys = classes
            .representatives()
            .par_iter()
            .zip(classes.invariants().par_iter())
            .map(|(&r, inv)| self.class_poly(rs, &group.element(r), inv))
            .collect::<Result<Vec<_>, _>>()?;
        let table = ClassPolynomial {
            system: rs.cartan_type().to_string(),
            rank: rs.rank(),
            group_order: group.order(),
            labels: classes.labels(),
            sizes: classes.sizes().to_vec(),
            invariants: classes.invariants().to_vec(),
            polys,
        };
        table.check_bounds()?;
        Ok(table)
    }
}

/// Polynomials to report for `poincare`.
pub struct PoincareReport {
    pub system: String,
    pub rank: usize,
    pub rows: Vec<(String, usize, Poly)>,
}

fn cmd_poincare(ctx: &Context, input: &Input, all_classes: bool, format: Format) -> Result<String, Error> {
    let report = match input.resolve()? {
        Source::Custom(arr) => {
            if all_classes {
                return Err(Error::Schema("--all-classes needs a root system".into()));
            }
            let poset = custom_poset(&arr, false, ctx.node_budget)?;
            let p = complement_poincare(&poset, &IntMatrix::identity(arr.rank))?;
            PoincareReport { system: "custom".into(), rank: arr.rank, rows: vec![("id".into(), 1, p)] }
        }
        Source::Root(rs) => {
            let system = rs.cartan_type().to_string();
            if all_classes {
                let group = ctx.group(&rs)?;
                let cp = ctx.class_polynomials(&rs, &group)?;
                let rows = cp.labels.into_iter().zip(cp.sizes).zip(cp.polys).map(|((l, s), p)| (l, s, p)).collect();
                PoincareReport { system, rank: rs.rank(), rows }
            } else {
                // the identity alone needs no group enumeration
                ctx.check_scale(&rs)?;
                let id = IntMatrix::identity(rs.rank());
                let inv = ClassInvariants::of(&id, &rs, 1)?;
                let p = ctx.class_poly(&rs, &id, &inv)?;
                PoincareReport { system, rank: rs.rank(), rows: vec![(inv.label(), 1, p)] }
            }
        }
    };
    render::poincare(&report, all_classes, format)
}

/// Everything `table` prints.
pub struct TableReport {
    pub classes: ClassPolynomial,
    pub characters: CharacterTable,
    pub decomposition: DecompositionTable,
    pub ties_from_data: bool,
    pub total: bool,
}

fn cmd_table(
    ctx: &Context,
    system: &System,
    char_table: Option<&PathBuf>,
    save: Option<&PathBuf>,
    total: bool,
    format: Format,
) -> Result<String, Error> {
    let rs = RootSystem::from_label(&system.type_label, system.rank)?;
    let group = ctx.group(&rs)?;
    let classes = group.conjugacy_classes(&rs)?;
    let type_label = rs.cartan_type().to_string();
    let (characters, ties_from_data) = match char_table {
        Some(path) => (load_table_for(path, &type_label, &classes)?, false),
        None => {
            let budget = if ctx.large_memory { LARGE_GROUP_BUDGET } else { toric_core::characters::DEFAULT_DIXON_BUDGET };
            let named = weyl_character_table(&rs, &group, &classes, budget)?;
            (named.table, named.ties_from_data)
        }
    };
    if let Some(path) = save {
        save_table(path, &characters)?;
    }
    let cp = ctx.class_polynomials(&rs, &group)?;
    let decomposition = decompose(&cp, &characters)?;
    // Betti numbers must be recovered from the multiplicities
    for (i, row) in decomposition.rows.iter().enumerate() {
        let betti: i64 = row.iter().zip(characters.degrees()).map(|(m, d)| m * d).sum();
        if betti != cp.polys[0].coeff(i) {
            return Err(Error::Internal(format!("degree {i}: multiplicities give Betti number {betti}")));
        }
    }
    let report = TableReport { classes: cp, characters, decomposition, ties_from_data, total };
    render::table(&report, format)
}

/// Everything `poset` prints.
pub struct PosetReport {
    pub system: String,
    pub poset: FixedPoset,
    pub tau: Option<bool>,
}

fn cmd_poset(
    ctx: &Context,
    input: &Input,
    check_tau: bool,
    linear: bool,
    dump: Option<&PathBuf>,
    format: Format,
) -> Result<String, Error> {
    let (system, poset) = match input.resolve()? {
        Source::Custom(arr) => ("custom".to_string(), custom_poset(&arr, linear, ctx.node_budget)?),
        Source::Root(rs) => {
            ctx.check_scale(&rs)?;
            let id = IntMatrix::identity(rs.rank());
            let p = if linear { hyperplane_poset(&rs, &id, ctx.node_budget)? } else { fixed_poset(&rs, &id, ctx.node_budget)? };
            (rs.cartan_type().to_string(), p)
        }
    };
    // for the linear poset every span is saturated by construction
    let tau = if check_tau { Some(poset.all_saturated()?) } else { None };
    if let Some(path) = dump {
        let mut text = serde_json::to_string_pretty(&poset.export()?)?;
        text.push('\n');
        std::fs::write(path, text)?;
    }
    render::poset(&PosetReport { system, poset, tau }, format)
}

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Input => 2,
        ErrorKind::Budget => 3,
        ErrorKind::Internal => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(4);
        }
    }
    let cache = match cli.cache_dir.as_deref().map(ResultCache::open).transpose() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(e.kind()));
        }
    };
    let ctx = Context { large_memory: cli.large_memory, node_budget: cli.node_budget, cache };
    let result = match &cli.command {
        Command::Poincare { input, all_classes } => cmd_poincare(&ctx, input, *all_classes, cli.format),
        Command::Table { system, char_table, save_char_table, total } => {
            cmd_table(&ctx, system, char_table.as_ref(), save_char_table.as_ref(), *total, cli.format)
        }
        Command::Poset { input, check_tau, linear, dump } => {
            cmd_poset(&ctx, input, *check_tau, *linear, dump.as_ref(), cli.format)
        }
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(e.kind()))
        }
    }
}
