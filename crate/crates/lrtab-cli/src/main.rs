use std::fs;
use std::io::{BufWriter, Write as _};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use lrtab::bruhat::bruhat_chain;
use lrtab::orders::{
    conjecture_for_gamma, leq_in, sweep_gammas, verify_gamma, word_chain, ConjectureStats,
    OrderKind, PosetGraph, TieBreak, VerifyReport, MAX_WEIGHT,
};
use lrtab::partitions::Partition;
use lrtab::tableaux::{enumerate_fillings, format_word, parse_word, Chain, LrFilling, TableauType};
use lrtab::Error;

#[derive(Parser)]
#[command(
    name = "lrtab",
    version,
    about = "Littlewood-Richardson fillings and the partial orders between them"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List every filling of a type in canonical order.
    #[command(name = "enum")]
    Enumerate {
        /// Content partition, comma separated.
        #[arg(long)]
        alpha: String,
        /// Outer shape partition.
        #[arg(long)]
        beta: String,
        /// Inner shape partition.
        #[arg(long)]
        gamma: String,
        /// Print one JSON object per filling.
        #[arg(long, conflicts_with = "words")]
        json: bool,
        /// Print one column word per filling. This is the default.
        #[arg(long)]
        words: bool,
    },
    /// Compare two fillings in the chosen order.
    Cmp {
        #[arg(long, value_enum, default_value_t = OrderArg::Dom)]
        order: OrderArg,
        /// Outer shape, required when a filling is given as a word.
        #[arg(long)]
        beta: Option<String>,
        /// Inner shape, required when a filling is given as a word.
        #[arg(long)]
        gamma: Option<String>,
        /// Filling X: a column word, inline JSON, or @file.
        x: String,
        /// Filling Z in the same forms.
        z: String,
    },
    /// Walk from filling X down to filling Z one box move at a time.
    Chain {
        #[arg(long, value_enum, default_value_t = AlgoArg::Bruhat)]
        algo: AlgoArg,
        /// Position rule for word steps: max, min, or a position number.
        #[arg(long, default_value = "max")]
        tie: String,
        #[arg(long)]
        beta: Option<String>,
        #[arg(long)]
        gamma: Option<String>,
        x: String,
        z: String,
    },
    /// Print the Hasse diagram of the fillings of a type.
    Hasse {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        gamma: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Dom)]
        order: OrderArg,
        /// Emit graphviz DOT. This is the default.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// Emit one JSON document instead of DOT.
        #[arg(long)]
        json: bool,
    },
    /// Check the order theorems over every generated type.
    Verify {
        /// Largest content weight to sweep, at most 7.
        #[arg(long, default_value_t = MAX_WEIGHT)]
        max_n: usize,
        /// Worker threads for the sweep.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Compare the two chain algorithms on every comparable pair.
    Conjecture {
        /// Largest content weight to sweep, at most 7.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Dom,
    Box,
}

impl OrderArg {
    fn kind(self) -> OrderKind {
        match self {
            OrderArg::Dom => OrderKind::Dominance,
            OrderArg::Box => OrderKind::Box,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Bruhat,
    Word,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::PartitionParse(_) | Error::WordParse(_) | Error::FillingParse(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

/// A closed pipe on stdout ends the run quietly; any other write
/// error is reported as a domain failure.
fn write_failure(e: std::io::Error) -> Failure {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        Failure {
            code: 0,
            message: String::new(),
        }
    } else {
        Failure::domain(format!("cannot write output: {e}"))
    }
}

fn emit(text: &str) -> Result<(), Failure> {
    std::io::stdout()
        .lock()
        .write_all(text.as_bytes())
        .map_err(write_failure)
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.cmd {
        Cmd::Enumerate {
            alpha,
            beta,
            gamma,
            json,
            ..
        } => cmd_enum(&alpha, &beta, &gamma, json),
        Cmd::Cmp {
            order,
            beta,
            gamma,
            x,
            z,
        } => cmd_cmp(order, &beta, &gamma, &x, &z),
        Cmd::Chain {
            algo,
            tie,
            beta,
            gamma,
            x,
            z,
        } => cmd_chain(algo, &tie, &beta, &gamma, &x, &z),
        Cmd::Hasse {
            alpha,
            beta,
            gamma,
            order,
            json,
            ..
        } => cmd_hasse(&alpha, &beta, &gamma, order, json),
        Cmd::Verify { max_n, jobs } => cmd_verify(max_n, jobs),
        Cmd::Conjecture { max_n, jobs } => cmd_conjecture(max_n, jobs),
    }
}

fn partition(s: &str) -> Result<Partition, Failure> {
    s.parse::<Partition>().map_err(Failure::from)
}

fn tableau_type(alpha: &str, beta: &str, gamma: &str) -> Result<TableauType, Failure> {
    let alpha = partition(alpha)?;
    let beta = partition(beta)?;
    let gamma = partition(gamma)?;
    TableauType::new(alpha, beta, gamma).map_err(Failure::from)
}

/// Accepts a filling as a column word (`21321` or `w=21321`, with
/// `--beta` and `--gamma` supplying the shape), as inline JSON, or as
/// `@path` naming a JSON file.
fn filling_input(
    input: &str,
    beta: &Option<String>,
    gamma: &Option<String>,
) -> Result<LrFilling, Failure> {
    let input = input.trim();
    if let Some(path) = input.strip_prefix('@') {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?;
        return LrFilling::from_json(text.trim()).map_err(Failure::from);
    }
    if input.starts_with('{') {
        return LrFilling::from_json(input).map_err(Failure::from);
    }
    let word = parse_word(input).map_err(Failure::from)?;
    let (Some(beta), Some(gamma)) = (beta, gamma) else {
        return Err(Failure::usage(
            "a filling given as a word needs --beta and --gamma",
        ));
    };
    let beta = partition(beta)?;
    let gamma = partition(gamma)?;
    let mut counts = vec![0usize; word.iter().copied().max().unwrap_or(0)];
    for &v in &word {
        counts[v - 1] += 1;
    }
    let alpha = Partition::new(counts)
        .map_err(|_| Failure::domain("the word's letter counts do not form a partition"))?;
    let ty = TableauType::new(alpha, beta, gamma).map_err(Failure::from)?;
    LrFilling::from_word(&ty, &word).map_err(Failure::from)
}

fn cmd_enum(alpha: &str, beta: &str, gamma: &str, json: bool) -> Result<ExitCode, Failure> {
    let ty = tableau_type(alpha, beta, gamma)?;
    let fillings = enumerate_fillings(&ty);
    let mut out = String::new();
    for f in &fillings {
        if json {
            out.push_str(&f.to_json());
        } else {
            out.push_str(&format_word(&f.column_word()));
        }
        out.push('\n');
    }
    out.push_str(&format!("count={}\n", fillings.len()));
    emit(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_cmp(
    order: OrderArg,
    beta: &Option<String>,
    gamma: &Option<String>,
    x: &str,
    z: &str,
) -> Result<ExitCode, Failure> {
    let x = filling_input(x, beta, gamma)?;
    let z = filling_input(z, beta, gamma)?;
    if !x.same_type(&z) {
        return Err(Failure::from(Error::TypeMismatch));
    }
    let z_le_x = leq_in(order.kind(), &z, &x).map_err(Failure::from)?;
    let x_le_z = leq_in(order.kind(), &x, &z).map_err(Failure::from)?;
    let verdict = match (z_le_x, x_le_z) {
        (true, true) => "equal",
        (true, false) => "Z<X",
        (false, true) => "X<Z",
        (false, false) => "incomparable",
    };
    emit(&format!("{verdict}\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn parse_tie(s: &str) -> Result<TieBreak, Failure> {
    match s {
        "max" => Ok(TieBreak::MaxL),
        "min" => Ok(TieBreak::MinL),
        other => other.parse::<usize>().map(TieBreak::At).map_err(|_| {
            Failure::usage(format!(
                "tie must be max, min, or a position, got {other:?}"
            ))
        }),
    }
}

fn cmd_chain(
    algo: AlgoArg,
    tie: &str,
    beta: &Option<String>,
    gamma: &Option<String>,
    x: &str,
    z: &str,
) -> Result<ExitCode, Failure> {
    let tie = parse_tie(tie)?;
    let x = filling_input(x, beta, gamma)?;
    let z = filling_input(z, beta, gamma)?;
    let chain = match algo {
        AlgoArg::Bruhat => bruhat_chain(&x, &z),
        AlgoArg::Word => word_chain(&x, &z, tie),
    }
    .map_err(Failure::from)?;
    emit(&render_chain(&chain))?;
    Ok(ExitCode::SUCCESS)
}

fn render_chain(chain: &Chain) -> String {
    let mut out = format_word(&chain.fillings[0].column_word());
    out.push('\n');
    for (step, mv) in chain.moves.iter().enumerate() {
        out.push_str(&format!("move {mv}\n"));
        out.push_str(&format_word(&chain.fillings[step + 1].column_word()));
        out.push('\n');
    }
    out.push_str(&format!("steps={}\n", chain.steps()));
    out
}

fn cmd_hasse(
    alpha: &str,
    beta: &str,
    gamma: &str,
    order: OrderArg,
    json: bool,
) -> Result<ExitCode, Failure> {
    let ty = tableau_type(alpha, beta, gamma)?;
    let poset = PosetGraph::build(&ty, order.kind()).map_err(Failure::from)?;
    if json {
        emit(&format!("{}\n", poset.to_json_string()))?;
    } else {
        emit(&poset.to_dot())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn build_pool(jobs: Option<usize>) -> Result<Option<rayon::ThreadPool>, Failure> {
    match jobs {
        None => Ok(None),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map(Some)
            .map_err(|e| Failure::usage(format!("cannot build a worker pool: {e}"))),
    }
}

fn run_in<T: Send>(pool: &Option<rayon::ThreadPool>, f: impl FnOnce() -> T + Send) -> T {
    match pool {
        Some(p) => p.install(f),
        None => f(),
    }
}

fn cmd_verify(max_n: usize, jobs: Option<usize>) -> Result<ExitCode, Failure> {
    if max_n > MAX_WEIGHT {
        return Err(Failure::usage(format!(
            "max-n {max_n} exceeds the safety cap {MAX_WEIGHT}"
        )));
    }
    let pool = build_pool(jobs)?;
    let gammas = sweep_gammas();
    let reports: Vec<VerifyReport> = run_in(&pool, || {
        gammas.par_iter().map(|g| verify_gamma(g, max_n)).collect()
    });
    let mut report = VerifyReport::default();
    for r in reports {
        report.merge(r);
    }
    let mut out = String::new();
    for (name, outcome) in report.outcomes() {
        let verdict = if outcome.passed() { "pass" } else { "FAIL" };
        out.push_str(&format!(
            "check {name}: {verdict} (types={}, cases={})\n",
            outcome.types, outcome.cases
        ));
    }
    let code = if report.all_passed() {
        out.push_str(&format!("all checks passed (max-n={max_n})\n"));
        ExitCode::SUCCESS
    } else {
        let cx = report
            .first_failure()
            .expect("a failed check records its counterexample");
        out.push_str(&format!(
            "counterexample: {}\n",
            serde_json::to_string(cx).expect("counterexamples serialize")
        ));
        ExitCode::from(3)
    };
    emit(&out)?;
    Ok(code)
}

fn cmd_conjecture(max_n: usize, jobs: Option<usize>) -> Result<ExitCode, Failure> {
    if max_n > MAX_WEIGHT {
        return Err(Failure::usage(format!(
            "max-n {max_n} exceeds the safety cap {MAX_WEIGHT}"
        )));
    }
    let pool = build_pool(jobs)?;
    let gammas = sweep_gammas();
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut stats = ConjectureStats::default();
    for batch in gammas.chunks(128) {
        let pages: Vec<(String, ConjectureStats)> = run_in(&pool, || {
            batch
                .par_iter()
                .map(|gamma| {
                    let mut page = String::new();
                    let st = conjecture_for_gamma(gamma, max_n, &mut page);
                    (page, st)
                })
                .collect()
        });
        for (page, st) in pages {
            out.write_all(page.as_bytes()).map_err(write_failure)?;
            stats.merge(st);
        }
    }
    writeln!(
        out,
        "summary types={} pairs={} agree={} diverge={}",
        stats.types, stats.pairs, stats.agreements, stats.divergences
    )
    .and_then(|()| out.flush())
    .map_err(write_failure)?;
    Ok(ExitCode::SUCCESS)
}
