//! The `relcomm` command line: loads algebras, runs engine operations and
//! theorem sweeps, and reports as text or JSON.
//!
//! Exit codes: 0 on success or agreement, 1 when a sweep or cross-check
//! finds a disagreement, 2 on input errors.

use std::ffi::OsString;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde_json::{json, Value};

use relcomm_core::commutators::{
    associator_subloop, ideal_lattice, loop_commutator_sweep, relcomm_loops, relcomm_oracle_detailed,
    relcomm_words_with, theorem31_sweep, CommutatorReport, WordOptions,
};
use relcomm_core::corpus::{self, CorpusEntry, Source};
use relcomm_core::galois::{
    centralisation, double_central_verdicts, is_trivial_extension_with, relative_commutator_of_extension_with,
    trivialised_by, verbal_projections_agree, DoubleExtension, Extension,
};
use relcomm_core::varieties::{in_subvariety_with, reflection_with, verbal_subobject_with};
use relcomm_core::{format, product_ideal, AlgebraRef, Budget, Elem, Ideal, Kind, VarietyDescriptor};

pub mod input;
pub mod report;

pub use report::{Format, Report};

use report::set;

/// Shown when homology computations are requested.
pub const HOPF_MESSAGE: &str = "Hopf formulas and second homology H2(B,B) are not computed: \
they need projective presentations by free algebras, which are infinite and cannot be \
represented as finite operation tables. Use `commutator` or `central` for the finite \
invariants this tool supports.";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{context}{error}")]
    Core {
        context: String,
        error: relcomm_core::Error,
    },
    #[error("{0}")]
    OutOfScope(&'static str),
}

impl From<relcomm_core::Error> for CliError {
    fn from(error: relcomm_core::Error) -> Self {
        CliError::Core {
            context: String::new(),
            error,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "relcomm", version, about = "Relative commutators of finite groups and loops")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Cap on word evaluations per computation (default: $RELCOMM_BUDGET or 10^8).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for sampled sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Leave timing out of the report, making identical runs byte-identical.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Word values, for groups.
    Words,
    /// `[M,N,M·N]`, for loops relative to Gp.
    Loops,
    /// The associator subloop generated by `M`, `N` and `M·N` directly.
    Associator,
    /// Least ideal making the quotient square double central.
    Oracle,
    /// Every method that applies to the algebra.
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load and validate a table; list its ideals.
    Validate {
        #[arg(long)]
        algebra: String,
    },
    /// The verbal subobject `[A]_B`.
    Verbal {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        variety: String,
    },
    /// The reflection `A/[A]_B` and its unit.
    Reflect {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        variety: String,
        /// Also write the reflection's table to this file.
        #[arg(long)]
        out: Option<String>,
    },
    /// Whether `A -> A/K` is central (and trivial) relative to the variety.
    Central {
        #[arg(long)]
        algebra: String,
        #[arg(long = "K")]
        kernel: String,
        #[arg(long)]
        variety: String,
    },
    /// The centralisation of `A -> A/K`.
    Centralise {
        #[arg(long)]
        algebra: String,
        #[arg(long = "K")]
        kernel: String,
        #[arg(long)]
        variety: String,
    },
    /// Whether the square of `M·N` over its quotients by `M` and `N` is
    /// double central.
    DoubleCentral {
        #[arg(long)]
        algebra: String,
        #[arg(long = "M")]
        m: String,
        #[arg(long = "N")]
        n: String,
        #[arg(long)]
        variety: String,
    },
    /// The relative commutator `[M,N]_B`.
    Commutator {
        #[arg(long)]
        algebra: String,
        #[arg(long = "M")]
        m: String,
        #[arg(long = "N")]
        n: String,
        #[arg(long)]
        variety: String,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
        /// Drop the `w(p)` factor from the word generators (diagnostic).
        #[arg(long)]
        no_p_factor: bool,
    },
    /// Check "commutator is zero iff the square is double central" on every
    /// ideal pair.
    #[command(name = "sweep-thm31")]
    SweepThm31 {
        /// Algebras to sweep (default: bundled corpus and generated loops).
        #[arg(long)]
        algebra: Vec<String>,
        /// Varieties for groups (default: Ab, Nil_2, Sol_2); loops use Gp.
        #[arg(long)]
        variety: Vec<String>,
        /// Largest order of generated loops in the default corpus.
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        /// Sweep a seeded random sample of this many generated loops.
        #[arg(long)]
        sample: Option<usize>,
        /// Include every pair in the report, not only disagreements.
        #[arg(long)]
        details: bool,
    },
    /// Check `[M,N]_Gp = [M,N,M·N]` on every pair of normal subloops.
    #[command(name = "sweep-thm42")]
    SweepThm42 {
        #[arg(long)]
        algebra: Vec<String>,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long)]
        details: bool,
    },
    /// Enumerate loops of one order as reduced Latin squares.
    GenLoops {
        #[arg(long)]
        order: usize,
        /// Include every table in the report.
        #[arg(long)]
        tables: bool,
    },
    /// Hopf formulas / H2 homology (not supported).
    #[command(aliases = ["homology", "h2"])]
    Hopf {
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        args: Vec<String>,
    },
}

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub format: Format,
    pub budget: Budget,
    pub threads: Option<usize>,
    pub seed: u64,
    pub timing: bool,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let budget = match cli.budget {
            Some(0) => return Err(CliError::Input("--budget must be positive".into())),
            Some(b) => Budget::new(b),
            None => Budget::from_env().map_err(CliError::Input)?,
        };
        if cli.threads == Some(0) {
            return Err(CliError::Input("--threads must be positive".into()));
        }
        Ok(RunConfig {
            format: cli.format,
            budget,
            threads: cli.threads,
            seed: cli.seed,
            timing: !cli.no_timing,
        })
    }
}

/// What a run prints and how it exits.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match RunConfig::from_cli(&cli) {
        Ok(config) => run_command(&cli.command, &config),
        Err(e) => failure(e),
    }
}

fn failure(e: CliError) -> Outcome {
    Outcome {
        code: 2,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

pub fn run_command(cmd: &Command, config: &RunConfig) -> Outcome {
    let start = Instant::now();
    let result = match config.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(cmd, config)),
            Err(e) => Err(CliError::Input(format!("cannot start {n} threads: {e}"))),
        },
        None => dispatch(cmd, config),
    };
    match result {
        Ok(report) => Outcome {
            code: if report.disagreement { 1 } else { 0 },
            stdout: report.render(config.format, config.timing.then(|| start.elapsed())),
            stderr: String::new(),
        },
        Err(e) => failure(e),
    }
}

fn dispatch(cmd: &Command, config: &RunConfig) -> Result<Report, CliError> {
    match cmd {
        Command::Validate { algebra } => validate(algebra, config),
        Command::Verbal { algebra, variety } => verbal(algebra, variety, config),
        Command::Reflect { algebra, variety, out } => reflect(algebra, variety, out.as_deref(), config),
        Command::Central {
            algebra,
            kernel,
            variety,
        } => central(algebra, kernel, variety, config),
        Command::Centralise {
            algebra,
            kernel,
            variety,
        } => centralise(algebra, kernel, variety, config),
        Command::DoubleCentral { algebra, m, n, variety } => double_central(algebra, m, n, variety, config),
        Command::Commutator {
            algebra,
            m,
            n,
            variety,
            method,
            no_p_factor,
        } => commutator(algebra, m, n, variety, *method, *no_p_factor, config),
        Command::SweepThm31 {
            algebra,
            variety,
            max_order,
            sample,
            details,
        } => sweep_thm31(algebra, variety, *max_order, *sample, *details, config),
        Command::SweepThm42 {
            algebra,
            max_order,
            sample,
            details,
        } => sweep_thm42(algebra, *max_order, *sample, *details, config),
        Command::GenLoops { order, tables } => gen_loops(*order, *tables),
        Command::Hopf { .. } => Err(CliError::OutOfScope(HOPF_MESSAGE)),
    }
}

fn entry_inputs(report: &mut Report, entry: &CorpusEntry) {
    report
        .input("algebra", entry.id.clone())
        .input("kind", entry.kind.to_string())
        .input("order", entry.order)
        .input("source", entry.source.to_string());
}

fn table(alg: &AlgebraRef) -> Value {
    json!(alg.mul_table())
}

fn validate(arg: &str, config: &RunConfig) -> Result<Report, CliError> {
    let entry = input::load(arg)?;
    let a = &entry.algebra;
    let ideals: Vec<Vec<Elem>> = ideal_lattice(a, config.budget)?
        .iter()
        .map(|i| i.members().to_vec())
        .collect();
    let named: serde_json::Map<String, Value> = entry
        .named_ideals
        .iter()
        .map(|(n, _)| (n.clone(), json!(entry.named_ideal(n).unwrap().members())))
        .collect();
    let mut r = Report::new("validate");
    entry_inputs(&mut r, &entry);
    r.result("valid", true)
        .result("associative", a.is_associative())
        .result("generators", a.generators().to_vec())
        .result("ideals", json!(ideals))
        .result("named_ideals", named);
    r.line(format!("{}: valid {} of order {}", entry.id, entry.kind, entry.order));
    if entry.kind == Kind::Loop {
        r.line(format!("associative: {}", a.is_associative()));
    }
    r.line(format!("generators: {}", set(a.generators())));
    r.line(format!("ideals ({}):", ideals.len()));
    for i in &ideals {
        r.line(format!("  {}", set(i)));
    }
    Ok(r)
}

fn verbal(algebra: &str, variety: &str, config: &RunConfig) -> Result<Report, CliError> {
    let v = input::variety(variety)?;
    let entry = input::load(algebra)?;
    let a = &entry.algebra;
    let verbal = verbal_subobject_with(a, &v, config.budget)?;
    let mut r = Report::new("verbal");
    entry_inputs(&mut r, &entry);
    r.input("variety", v.name());
    r.result("members", verbal.members().to_vec())
        .result("quotient_order", a.order() / verbal.len())
        .result("in_variety", verbal.is_trivial());
    if entry.kind == Kind::Loop && v.is_builtin() && v.name() == "Gp" {
        let full = Ideal::full(a);
        let assoc = associator_subloop(&full, &full, &full)?;
        let agree = assoc.members() == verbal.members();
        r.diagnostic("associator_subloop", assoc.members()).diagnostic("associator_agrees", agree);
        r.disagreement |= !agree;
    }
    r.line(format!("[{}]_{} = {}", entry.id, v.name(), set(verbal.members())));
    r.line(format!("quotient order {}", a.order() / verbal.len()));
    Ok(r)
}

fn reflect(algebra: &str, variety: &str, out: Option<&str>, config: &RunConfig) -> Result<Report, CliError> {
    let v = input::variety(variety)?;
    let entry = input::load(algebra)?;
    let (image, eta) = reflection_with(&entry.algebra, &v, config.budget)?;
    // A reflection into groups is printed as a group table.
    let shown = if image.kind() == Kind::Loop && image.is_associative() {
        image.as_group().map_err(CliError::from)?
    } else {
        image.clone()
    };
    let text = format::serialize(&shown, false);
    if let Some(path) = out {
        std::fs::write(path, &text).map_err(|e| CliError::Input(format!("cannot write {path}: {e}")))?;
    }
    let mut r = Report::new("reflect");
    entry_inputs(&mut r, &entry);
    r.input("variety", v.name());
    r.result("order", shown.order())
        .result("kind", shown.kind().to_string())
        .result("table", table(&shown))
        .result("unit", eta.map().to_vec())
        .result("in_variety", in_subvariety_with(&image, &v, config.budget)?);
    r.line(format!("reflection of {} into {}: order {}", entry.id, v.name(), shown.order()));
    r.line(format!("unit map: {:?}", eta.map()));
    for l in text.lines() {
        r.line(l.to_string());
    }
    Ok(r)
}

fn extension_of(entry: &CorpusEntry, kernel: &str) -> Result<(Ideal, Extension), CliError> {
    let k = input::ideal(entry, kernel)?;
    let e = Extension::quotient_by(&k)?;
    Ok((k, e))
}

fn central(algebra: &str, kernel: &str, variety: &str, config: &RunConfig) -> Result<Report, CliError> {
    let v = input::variety(variety)?;
    let entry = input::load(algebra)?;
    let (k, e) = extension_of(&entry, kernel)?;
    let comm = relative_commutator_of_extension_with(&e, &v, config.budget)?;
    let central = comm.is_trivial();
    let trivial = is_trivial_extension_with(&e, &v, config.budget)?;
    let projections = verbal_projections_agree(&e, &v)?;
    let mut r = Report::new("central");
    entry_inputs(&mut r, &entry);
    r.input("variety", v.name()).input("K", k.members().to_vec());
    r.result("commutator", comm.members().to_vec())
        .result("central", central)
        .result("trivial", trivial)
        .result("quotient_order", e.dst().order());
    r.diagnostic("projections_agree", projections)
        .diagnostic("trivialised_by_itself", trivialised_by(&e, &e, &v)?);
    r.disagreement |= projections != central;
    if entry.kind == Kind::Loop && v.is_builtin() && v.name() == "Gp" {
        let full = Ideal::full(&entry.algebra);
        let assoc = associator_subloop(&k, &full, &full)?;
        r.diagnostic("associator_KAA", assoc.members());
        r.disagreement |= assoc.is_trivial() != central;
    }
    r.line(format!("[K,A]_{} = {}", v.name(), set(comm.members())));
    r.line(format!("central: {central}"));
    r.line(format!("trivial: {trivial}"));
    Ok(r)
}

fn centralise(algebra: &str, kernel: &str, variety: &str, config: &RunConfig) -> Result<Report, CliError> {
    let v = input::variety(variety)?;
    let entry = input::load(algebra)?;
    let (k, e) = extension_of(&entry, kernel)?;
    let comm = relative_commutator_of_extension_with(&e, &v, config.budget)?;
    let (i1, rho) = centralisation(&e, &v)?;
    let mut r = Report::new("centralise");
    entry_inputs(&mut r, &entry);
    r.input("variety", v.name()).input("K", k.members().to_vec());
    r.result("commutator", comm.members().to_vec())
        .result("order", i1.src().order())
        .result("table", table(i1.src()))
        .result("map", i1.map().map().to_vec())
        .result("rho", rho.map().to_vec());
    r.line(format!("[K,A]_{} = {}", v.name(), set(comm.members())));
    r.line(format!(
        "centralisation: A/[K,A] of order {} -> A/K of order {}",
        i1.src().order(),
        i1.dst().order()
    ));
    r.line(format!("rho: {:?}", rho.map()));
    Ok(r)
}

fn double_central(algebra: &str, m: &str, n: &str, variety: &str, config: &RunConfig) -> Result<Report, CliError> {
    let v = input::variety(variety)?;
    let entry = input::load(algebra)?;
    let (m, n) = (input::ideal(&entry, m)?, input::ideal(&entry, n)?);
    let (sq, x) = DoubleExtension::of_ideals(&m, &n)?;
    let verdicts = double_central_verdicts(&sq, &v, config.budget)?;
    let agree = verdicts.iter().all(|&b| b == verdicts[0]);
    let mut r = Report::new("double-central");
    entry_inputs(&mut r, &entry);
    r.input("variety", v.name())
        .input("M", m.members().to_vec())
        .input("N", n.members().to_vec());
    r.result("join", x.members().to_vec())
        .result("double_extension", sq.is_double_extension())
        .result("double_central", verdicts[0])
        .result("square_verdicts", verdicts.to_vec());
    r.diagnostic("corners_agree", agree);
    r.disagreement |= !agree;
    r.line(format!("M·N = {}", set(x.members())));
    r.line(format!("double extension: {}", sq.is_double_extension()));
    r.line(format!("double central: {} (corner verdicts {:?})", verdicts[0], verdicts));
    Ok(r)
}

fn commutator(
    algebra: &str,
    m: &str,
    n: &str,
    variety: &str,
    method: Method,
    no_p_factor: bool,
    config: &RunConfig,
) -> Result<Report, CliError> {
    let v = input::variety(variety)?;
    let entry = input::load(algebra)?;
    let (m, n) = (input::ideal(&entry, m)?, input::ideal(&entry, n)?);
    let kind = entry.kind;
    let is_gp = v.is_builtin() && v.name() == "Gp";
    let methods: Vec<Method> = match method {
        Method::All if kind == Kind::Group => vec![Method::Words, Method::Oracle],
        Method::All => vec![Method::Loops, Method::Associator, Method::Oracle],
        m => vec![m],
    };
    let mut results = std::collections::BTreeMap::new();
    let mut first = None;
    let mut r = Report::new("commutator");
    for method in methods {
        let (name, members) = match method {
            Method::Words => {
                let opts = WordOptions {
                    p_factor: !no_p_factor,
                    budget: config.budget,
                };
                ("words", relcomm_words_with(&m, &n, &v, opts)?.members())
            }
            Method::Loops | Method::Associator if !is_gp => {
                return Err(CliError::Input(format!(
                    "the associator construction computes commutators relative to Gp, not {}",
                    v.name()
                )))
            }
            Method::Loops => ("loops", relcomm_loops(&m, &n)?.members()),
            Method::Associator => {
                let join = product_ideal(&m, &n)?;
                ("associator", associator_subloop(&m, &n, &join)?.members())
            }
            Method::Oracle => {
                let outcome = relcomm_oracle_detailed(&m, &n, &v, config.budget)?;
                r.diagnostic("oracle_candidates", json!(outcome.candidates));
                if outcome.disagreements() > 0 {
                    r.diagnostic("corner_disagreements", outcome.disagreements());
                    r.disagreement = true;
                }
                ("oracle", outcome.commutator.members())
            }
            Method::All => unreachable!("expanded above"),
        };
        first.get_or_insert_with(|| members.clone());
        results.insert(name.to_string(), members);
    }
    let summary = CommutatorReport::new(&entry.id, v.name(), &m, &n, results);
    entry_inputs(&mut r, &entry);
    r.input("variety", v.name())
        .input("M", m.members().to_vec())
        .input("N", n.members().to_vec())
        .input("method", format!("{method:?}").to_lowercase())
        .input("no_p_factor", no_p_factor);
    let join = product_ideal(&m, &n)?;
    r.result("members", first.unwrap_or_default())
        .result("join", join.members().to_vec())
        .result("methods", json!(summary.results))
        .result("agree", summary.agree);
    r.disagreement |= !summary.agree;
    for (name, members) in &summary.results {
        r.line(format!("{name}: [M,N]_{} = {}", v.name(), set(members)));
    }
    if summary.results.len() > 1 {
        r.line(format!("methods agree: {}", summary.agree));
    }
    Ok(r)
}

/// Generated loops up to `max_order`, or a seeded sample of them.
fn generated_loops(max_order: usize, sample: Option<usize>, seed: u64) -> Result<Vec<&'static CorpusEntry>, CliError> {
    let all = corpus::loops_up_to(max_order)?;
    Ok(match sample {
        Some(k) if k < all.len() => {
            let mut rng = StdRng::seed_from_u64(seed);
            let mut picked: Vec<usize> = rand::seq::index::sample(&mut rng, all.len(), k).into_vec();
            picked.sort_unstable();
            picked.into_iter().map(|i| all[i]).collect()
        }
        _ => all,
    })
}

fn summarize_generated(r: &mut Report, rows: &[(String, Source, usize, usize, usize)]) {
    // rows: (id, source, order, pairs, disagreements)
    let mut per_order = std::collections::BTreeMap::new();
    for (id, source, order, pairs, bad) in rows {
        if *source == Source::Generated {
            let e = per_order.entry(*order).or_insert((0usize, 0usize, 0usize));
            e.0 += 1;
            e.1 += pairs;
            e.2 += bad;
        } else {
            r.line(format!("{id}: {pairs} pairs, {bad} disagreements"));
        }
    }
    for (order, (count, pairs, bad)) in per_order {
        r.line(format!("loops of order {order}: {count} loops, {pairs} pairs, {bad} disagreements"));
    }
}

fn sweep_thm31(
    algebras: &[String],
    varieties: &[String],
    max_order: usize,
    sample: Option<usize>,
    details: bool,
    config: &RunConfig,
) -> Result<Report, CliError> {
    let mut group_vs = varieties.iter().map(|v| input::variety(v)).collect::<Result<Vec<_>, _>>()?;
    if group_vs.iter().any(|v| v.kind() != Kind::Group) {
        return Err(CliError::Input(
            "sweep varieties are group varieties; loops are always swept against Gp".into(),
        ));
    }
    if group_vs.is_empty() {
        group_vs = vec![VarietyDescriptor::ab(), VarietyDescriptor::nil(2)?, VarietyDescriptor::sol(2)?];
    }
    let gp = VarietyDescriptor::gp();
    let entries: Vec<CorpusEntry> = if algebras.is_empty() {
        let mut v = corpus::bundled_groups();
        v.push(corpus::bundled("l5")?);
        v.extend(generated_loops(max_order, sample, config.seed)?.into_iter().cloned());
        v
    } else {
        algebras.iter().map(|a| input::load(a)).collect::<Result<_, _>>()?
    };
    let items: Vec<(&CorpusEntry, &VarietyDescriptor)> = entries
        .iter()
        .flat_map(|e| match e.kind {
            Kind::Group => group_vs.iter().map(|v| (e, v)).collect::<Vec<_>>(),
            Kind::Loop => vec![(e, &gp)],
        })
        .collect();
    let budget = config.budget;
    let outcomes: Vec<_> = items
        .par_iter()
        .map(|(e, v)| theorem31_sweep(&e.id, &e.algebra, v, budget))
        .collect();

    let mut r = Report::new("sweep-thm31");
    r.input("algebras", entries.len())
        .input("varieties", group_vs.iter().map(|v| v.name().to_string()).collect::<Vec<_>>())
        .input("max_order", max_order)
        .input("sample", json!(sample))
        .input("seed", config.seed);
    let mut summaries = Vec::new();
    let mut disagreeing = Vec::new();
    let mut errors = Vec::new();
    let mut rows = Vec::new();
    let (mut total_pairs, mut total_bad, mut total_corner) = (0, 0, 0);
    for ((entry, v), outcome) in items.iter().zip(outcomes) {
        match outcome {
            Ok(report) => {
                total_pairs += report.pairs.len();
                total_bad += report.disagreements;
                total_corner += report.corner_disagreements;
                rows.push((
                    format!("{} / {}", entry.id, v.name()),
                    entry.source.clone(),
                    entry.order,
                    report.pairs.len(),
                    report.disagreements,
                ));
                for p in report.pairs.iter().filter(|p| !p.agree) {
                    disagreeing.push(json!({ "algebra": entry.id, "variety": v.name(), "pair": p }));
                }
                let mut s = json!({
                    "algebra": entry.id,
                    "variety": v.name(),
                    "pairs": report.pairs.len(),
                    "disagreements": report.disagreements,
                    "corner_disagreements": report.corner_disagreements,
                });
                if details {
                    s["details"] = json!(report.pairs);
                }
                summaries.push(s);
            }
            Err(e) => errors.push(json!({ "algebra": entry.id, "variety": v.name(), "error": e.to_string() })),
        }
    }
    r.result("items", summaries)
        .result("total_pairs", total_pairs)
        .result("disagreements", total_bad)
        .result("corner_disagreements", total_corner)
        .result("disagreeing_pairs", disagreeing);
    r.diagnostic("errors", json!(errors));
    r.disagreement = total_bad > 0 || total_corner > 0 || !errors.is_empty();
    summarize_generated(&mut r, &rows);
    for e in &errors {
        r.line(format!("error: {} / {}: {}", e["algebra"], e["variety"], e["error"]));
    }
    r.line(format!(
        "total: {total_pairs} pairs, {total_bad} disagreements, {total_corner} corner disagreements"
    ));
    Ok(r)
}

fn sweep_thm42(
    algebras: &[String],
    max_order: usize,
    sample: Option<usize>,
    details: bool,
    config: &RunConfig,
) -> Result<Report, CliError> {
    let entries: Vec<CorpusEntry> = if algebras.is_empty() {
        let mut v = vec![corpus::bundled("l5")?];
        v.extend(generated_loops(max_order, sample, config.seed)?.into_iter().cloned());
        v
    } else {
        algebras.iter().map(|a| input::load(a)).collect::<Result<_, _>>()?
    };
    if let Some(g) = entries.iter().find(|e| e.kind != Kind::Loop) {
        return Err(CliError::Input(format!(
            "{} is a group; this sweep is over loops (load its table as `loop n`)",
            g.id
        )));
    }
    let budget = config.budget;
    let outcomes: Vec<_> = entries
        .par_iter()
        .map(|e| loop_commutator_sweep(&e.id, &e.algebra, budget))
        .collect();
    let mut r = Report::new("sweep-thm42");
    r.input("loops", entries.len())
        .input("max_order", max_order)
        .input("sample", json!(sample))
        .input("seed", config.seed);
    let (mut pairs, mut bad) = (0, 0);
    let mut disagreeing = Vec::new();
    let mut budget_exceeded = Vec::new();
    let mut errors = Vec::new();
    let mut summaries = Vec::new();
    let mut rows = Vec::new();
    for (entry, outcome) in entries.iter().zip(outcomes) {
        match outcome {
            Ok(report) => {
                pairs += report.pairs.len();
                bad += report.disagreements;
                rows.push((entry.id.clone(), entry.source.clone(), entry.order, report.pairs.len(), report.disagreements));
                for p in report.pairs.iter().filter(|p| !p.agree) {
                    disagreeing.push(json!({ "algebra": entry.id, "pair": p }));
                }
                if details {
                    summaries.push(json!({ "algebra": entry.id, "pairs": report.pairs }));
                }
            }
            Err(relcomm_core::Error::BudgetExceeded { .. }) => budget_exceeded.push(entry.id.clone()),
            Err(e) => errors.push(json!({ "algebra": entry.id, "error": e.to_string() })),
        }
    }
    r.result("pairs", pairs)
        .result("disagreements", bad)
        .result("disagreeing_pairs", disagreeing)
        .result("budget_exceeded", budget_exceeded.clone());
    if details {
        r.result("details", summaries);
    }
    r.diagnostic("errors", json!(errors));
    r.disagreement = bad > 0 || !budget_exceeded.is_empty() || !errors.is_empty();
    summarize_generated(&mut r, &rows);
    if !budget_exceeded.is_empty() {
        r.line(format!("budget exceeded: {}", budget_exceeded.join(", ")));
    }
    r.line(format!("total: {pairs} pairs, {bad} disagreements"));
    Ok(r)
}

fn gen_loops(order: usize, tables: bool) -> Result<Report, CliError> {
    let loops = corpus::loops_of_order(order)?;
    let associative = loops.iter().filter(|e| e.algebra.is_associative()).count();
    let mut r = Report::new("gen-loops");
    r.input("order", order);
    r.result("count", loops.len())
        .result("associative", associative)
        .result("nonassociative", loops.len() - associative);
    if tables {
        r.result(
            "tables",
            loops
                .iter()
                .map(|e| json!({ "id": e.id, "table": table(&e.algebra) }))
                .collect::<Vec<_>>(),
        );
    }
    r.line(format!(
        "order {order}: {} reduced Latin squares, {associative} associative, {} nonassociative",
        loops.len(),
        loops.len() - associative
    ));
    if tables {
        for e in loops {
            r.line(format!("# {}", e.id));
            for l in format::serialize(&e.algebra, false).lines() {
                r.line(l.to_string());
            }
        }
    }
    Ok(r)
}
