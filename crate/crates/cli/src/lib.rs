//! The `loopoid` command line: check, build, reduce, enumerate and compare
//! finite structures stored as `.lpd` files.

mod render;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use loopoid::analysis::{
    canonical_form, enumerate, equivalence_experiment_with, inverse_identity_experiment_with, isomorphic,
    AnalysisError, EnumMode, EnumerationSpec, Limits,
};
use loopoid::axioms::{check_class, classify, AxiomError};
use loopoid::constructors::{
    baer_transversal_loop, extended_trivial_semiloopoid, isotropy_loop, pair_groupoid, phi_left_loopoid,
    product_loop_pair_groupoid, transversal_reduce, trivial_semiloopoid, ConstructError, GroupTable, OddPermutation,
    TransversalSide, TrivialSpec,
};
use loopoid::io::{parse, parse_transversal, print};
use loopoid::{ClassName, ElementId, StructureTable};

pub use render::Format;
use render::{verdict, Doc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID_INPUT: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

/// Environment variable overriding the enumeration node budget.
pub const BUDGET_ENV: &str = "LPD_BUDGET_NODES";

#[derive(Debug, Parser)]
#[command(name = "loopoid", version, about = "Finite semiloopoids, loopoids, groupoids and loops")]
struct Cli {
    /// Output format for reports.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a structure, or run the checker for one class.
    Check {
        file: PathBuf,
        #[arg(long)]
        class: Option<ClassName>,
    },
    /// Build a structure from one of the standard families.
    Construct {
        #[command(subcommand)]
        kind: Kind,
    },
    /// Extract the isotropy loop at a unit of a loopoid.
    Isotropy {
        file: PathBuf,
        #[arg(long)]
        unit: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reduce a structure to a transversal.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        transversal: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        side: Side,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List all structures of a class and size.
    Enumerate {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        size: usize,
        /// Fix the units to the first K elements.
        #[arg(long)]
        units: Option<usize>,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long)]
        count_only: bool,
        /// Lift the default size caps.
        #[arg(long)]
        allow_oversize: bool,
    },
    /// Decide isomorphism and print a witness map.
    Iso { first: PathBuf, second: PathBuf },
    /// Run the census experiments for the inverse identities and the
    /// unities-associativity characterization.
    VerifyPropositions {
        #[arg(long, default_value_t = 3)]
        max_size: usize,
    },
}

#[derive(Debug, Subcommand)]
enum Kind {
    /// Pair groupoid over n points.
    PairGroupoid {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Only unit products defined.
    Trivial {
        #[command(flatten)]
        spec: TrivialArgs,
        #[command(flatten)]
        out: Out,
    },
    /// Trivial semiloopoid with one element acting through an injective map.
    Extended {
        #[command(flatten)]
        spec: TrivialArgs,
        #[arg(long)]
        g0: usize,
        /// Domain A, comma-separated indices.
        #[arg(long, value_delimiter = ',')]
        a: Vec<usize>,
        /// The map l0 as comma-separated `h:value` pairs.
        #[arg(long, value_delimiter = ',')]
        l0: Vec<String>,
        #[command(flatten)]
        out: Out,
    },
    /// Left loop on a left transversal of a subgroup.
    Baer {
        /// `symmetric:K` or `cyclic:N`.
        #[arg(long)]
        group: String,
        /// Subgroup elements by label, comma-separated.
        #[arg(long, value_delimiter = ',')]
        subgroup: Vec<String>,
        /// Transversal elements by label, comma-separated.
        #[arg(long, value_delimiter = ',')]
        transversal: Vec<String>,
        #[command(flatten)]
        out: Out,
    },
    /// Loop times the pair groupoid over n points.
    Product {
        #[arg(long = "loop")]
        loop_file: PathBuf,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Out,
    },
    /// The left loopoid over Z_n built from an odd permutation.
    Phi {
        #[arg(long)]
        n: usize,
        /// Comma-separated table of the permutation.
        #[arg(long, value_delimiter = ',')]
        phi: Vec<usize>,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Debug, Args)]
struct TrivialArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_delimiter = ',')]
    units: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    alpha: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    beta: Vec<usize>,
}

#[derive(Debug, Args)]
struct Out {
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Side {
    Left,
    Right,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Semiloopoid,
    Loopoid,
    Loop,
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn input(msg: impl ToString) -> Self {
        Failure { code: EXIT_INVALID_INPUT, msg: msg.to_string() }
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        Failure::input(e)
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::BudgetExceeded { budget, partial } => Failure {
                code: EXIT_BUDGET,
                msg: format!("node budget of {budget} exhausted after {} results", partial.len()),
            },
            other => Failure { code: EXIT_USAGE, msg: other.to_string() },
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut buf = String::new();
    let result = dispatch(cli, &mut buf);
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn dispatch(cli: Cli, out: &mut String) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Check { file, class } => check(&read_structure(&file)?, class, format, out),
        Command::Construct { kind } => construct(kind, out),
        Command::Isotropy { file, unit, output } => {
            let g = read_structure(&file)?;
            let u = resolve_label(&g, &unit)?;
            emit(&isotropy_loop(&g, u)?, output.as_deref(), out)
        }
        Command::Reduce { file, transversal, side, output } => {
            let g = read_structure(&file)?;
            let text = read(&transversal)?;
            let t = parse_transversal(&text, g.n()).map_err(|e| Failure::input(format!("{}: {e}", transversal.display())))?;
            let side = match side {
                Side::Left => TransversalSide::Left,
                Side::Right => TransversalSide::Right,
                Side::Both => TransversalSide::Both,
            };
            emit(&transversal_reduce(&g, &t, side)?, output.as_deref(), out)
        }
        Command::Enumerate { mode, size, units, up_to_iso, count_only, allow_oversize } => {
            let mode = match mode {
                Mode::Semiloopoid => EnumMode::Semiloopoid,
                Mode::Loopoid => EnumMode::Loopoid,
                Mode::Loop => EnumMode::Loop,
            };
            let spec = EnumerationSpec {
                n: size,
                units: units.map(|k| (0..k).map(ElementId::new).collect()),
                mode,
                up_to_iso,
                limits: limits(allow_oversize)?,
            };
            let found = enumerate(&spec)?;
            let mut doc = Doc::new();
            doc.put("count", found.len());
            if format == Format::Machine && !count_only {
                for (i, g) in found.iter().enumerate() {
                    let form = canonical_form(g).map(|f| f.to_string()).unwrap_or_default();
                    doc.put(format!("structure.{i}.canonical"), form);
                }
            }
            out.push_str(&doc.render(format));
            if format == Format::Text && !count_only {
                for g in &found {
                    out.push('\n');
                    out.push_str(&print(g));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Iso { first, second } => {
            let (g, h) = (read_structure(&first)?, read_structure(&second)?);
            let mut doc = Doc::new();
            let code = match isomorphic(&g, &h) {
                Some(f) => {
                    doc.put("isomorphic", "yes");
                    for (x, y) in g.elements().zip(&f.element_map) {
                        doc.put(format!("map.{}", g.label(x)), h.label(*y));
                    }
                    EXIT_OK
                }
                None => {
                    doc.put("isomorphic", "no");
                    EXIT_CHECK_FAILED
                }
            };
            out.push_str(&doc.render(format));
            Ok(code)
        }
        Command::VerifyPropositions { max_size } => {
            let limits = limits(false)?;
            let inv = inverse_identity_experiment_with(max_size, &limits)?;
            let eq = equivalence_experiment_with(max_size, &limits)?;
            let mut doc = Doc::new();
            doc.put("max-size", max_size);
            doc.put("inverse-identities.examined", inv.examined);
            doc.put("inverse-identities.discrepancies", inv.discrepancies);
            doc.put("inverse-identities.result", verdict(inv.passed()));
            doc.put("equivalence.examined", eq.examined);
            doc.put("equivalence.discrepancies", eq.discrepancies);
            for (flag, ok) in &eq.report.flags {
                doc.put(format!("equivalence.flag.{flag}"), verdict(*ok));
            }
            let passed = inv.passed() && eq.passed();
            doc.put("result", verdict(passed));
            out.push_str(&doc.render(format));
            Ok(if passed { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}

fn check(g: &StructureTable, class: Option<ClassName>, format: Format, out: &mut String) -> Outcome {
    let mut doc = Doc::new();
    let Some(class) = class else {
        for (c, ok) in classify(g) {
            doc.put(format!("class.{c}"), verdict(ok));
        }
        out.push_str(&doc.render(format));
        return Ok(EXIT_OK);
    };
    doc.put("class", class);
    let code = match check_class(g, class) {
        Ok(report) => {
            doc.report(g, &report);
            if report.passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(AxiomError::MissingInversion(what)) => {
            doc.put("result", "fail");
            doc.put("reason", format!("{what} needs an inversion map the file does not provide"));
            EXIT_CHECK_FAILED
        }
        Err(e) => return Err(Failure::input(e)),
    };
    out.push_str(&doc.render(format));
    Ok(code)
}

fn construct(kind: Kind, out: &mut String) -> Outcome {
    let (g, output) = match kind {
        Kind::PairGroupoid { n, out } => {
            if n == 0 {
                return Err(Failure::input("n must be positive"));
            }
            (pair_groupoid(n), out.output)
        }
        Kind::Trivial { spec, out } => (trivial_semiloopoid(&trivial_spec(&spec))?, out.output),
        Kind::Extended { spec, g0, a, l0, out } => {
            let l0 = l0
                .iter()
                .map(|pair| {
                    let (h, v) = pair.split_once(':').ok_or_else(|| Failure::input(format!("bad l0 entry {pair:?}")))?;
                    let num = |s: &str| s.parse::<usize>().map(ElementId::new).map_err(|_| Failure::input(format!("bad l0 entry {pair:?}")));
                    Ok((num(h)?, num(v)?))
                })
                .collect::<Result<BTreeMap<_, _>, Failure>>()?;
            let a: Vec<ElementId> = a.into_iter().map(ElementId::new).collect();
            (extended_trivial_semiloopoid(&trivial_spec(&spec), ElementId::new(g0), &a, &l0)?, out.output)
        }
        Kind::Baer { group, subgroup, transversal, out } => {
            let g = named_group(&group)?;
            let find = |labels: &[String]| -> Result<Vec<ElementId>, Failure> {
                labels
                    .iter()
                    .map(|l| g.find_label(l).ok_or_else(|| Failure::input(format!("no element labelled {l:?} in {group}"))))
                    .collect()
            };
            (baer_transversal_loop(&g, &find(&subgroup)?, &find(&transversal)?)?, out.output)
        }
        Kind::Product { loop_file, n, out } => (product_loop_pair_groupoid(&read_structure(&loop_file)?, n)?, out.output),
        Kind::Phi { n, phi, out } => {
            let phi = OddPermutation::new(phi)?;
            (phi_left_loopoid(n, &phi)?, out.output)
        }
    };
    emit(&g, output.as_deref(), out)
}

fn trivial_spec(args: &TrivialArgs) -> TrivialSpec {
    let ids = |v: &[usize]| v.iter().map(|&i| ElementId::new(i)).collect();
    TrivialSpec { n: args.n, units: ids(&args.units), alpha: ids(&args.alpha), beta: ids(&args.beta) }
}

fn named_group(name: &str) -> Result<GroupTable, Failure> {
    let bad = || Failure::input(format!("unknown group {name:?}; use symmetric:K or cyclic:N"));
    let (family, size) = name.split_once(':').ok_or_else(bad)?;
    let size: usize = size.parse().map_err(|_| bad())?;
    match (family, size) {
        ("symmetric", 1..=5) => Ok(GroupTable::symmetric(size)),
        ("cyclic", 1..) => Ok(GroupTable::cyclic(size)),
        _ => Err(bad()),
    }
}

fn limits(allow_oversize: bool) -> Result<Limits, Failure> {
    let max_nodes = match std::env::var(BUDGET_ENV) {
        Ok(v) => Some(v.trim().parse::<u64>().map_err(|_| Failure { code: EXIT_USAGE, msg: format!("{BUDGET_ENV} must be a non-negative integer, got {v:?}") })?),
        Err(_) => None,
    };
    Ok(Limits { max_nodes, allow_oversize })
}

fn resolve_label(g: &StructureTable, label: &str) -> Result<ElementId, Failure> {
    g.find_label(label)
        .or_else(|| label.parse::<usize>().ok().filter(|&i| i < g.n() && g.has_default_labels()).map(ElementId::new))
        .ok_or_else(|| Failure::input(format!("no element labelled {label:?}")))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_structure(path: &Path) -> Result<StructureTable, Failure> {
    parse(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn emit(g: &StructureTable, output: Option<&Path>, out: &mut String) -> Outcome {
    let text = print(g);
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?,
        None => out.push_str(&text),
    }
    Ok(EXIT_OK)
}
