use clap::{Args, Parser, Subcommand};
use ramsey_core::detect::DetectionResult;
use ramsey_core::formulas::{
    continuity_violations, render_ratio, sweep, BoundValue, Figure, FormulaConfig, Pair, Rational, Term,
};
use ramsey_core::reference::Brute;
use ramsey_core::search::{ramsey_number_with, verify_witness, SearchConfig, SearchStatus, DEFAULT_NODE_BUDGET};
use ramsey_core::selftest::{self, SuiteConfig};
use ramsey_core::{witness, FamilySpec};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

/// Ramsey numbers of even wheels: witnesses, bounds and a small exact oracle.
///
/// Family syntax: C<k> cycle, W<k> wheel (hub plus a k-cycle, k+1 vertices),
/// F<k> fan (hub plus k disjoint edges), S<m> star K_{1,m}, M<n> matching nK_2,
/// K<n> clique.
#[derive(Parser)]
#[command(name = "ramsey", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a lower-bound coloring and certify it.
    Construct(ConstructArgs),
    /// Check a witness file against two forbidden families.
    Verify(VerifyArgs),
    /// Evaluate a Ramsey value or bound.
    Value(ValueArgs),
    /// CSV sweep of the piecewise curves, or a grid of bounds for one pair.
    Table(TableArgs),
    /// Exact Ramsey number by exhaustive search (small cases only).
    Search(SearchArgs),
    /// Run the acceptance suite.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// star-wheel, mindeg-wheel, cycle-wheel, cycle-fan, cycle-star or matching-fan.
    #[arg(long)]
    witness: String,
    /// First parameter; the wheel size k for mindeg-wheel, unused by matching-fan.
    #[arg(long)]
    m: Option<usize>,
    /// Second parameter; the number of vertices for mindeg-wheel.
    #[arg(long)]
    n: usize,
    /// Write the witness here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    file: PathBuf,
    /// Forbidden red family; defaults to the file's `avoided-red` header.
    #[arg(long)]
    red: Option<String>,
    /// Forbidden blue family; defaults to the file's `avoided-blue` header.
    #[arg(long)]
    blue: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ValueArgs {
    #[arg(long)]
    pair: String,
    /// Unused by wheel-diag, odd-wheel-diag and matching-fan.
    #[arg(long, default_value_t = 0)]
    m: u64,
    #[arg(long)]
    n: u64,
    /// Treat every m at or above this as "sufficiently large".
    #[arg(long)]
    large_cutoff: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TableArgs {
    /// 1: R(C_2m, W_2n)/n; 2: the same next to R(C_2m, K_{1,2n})/n.
    #[arg(long, conflicts_with = "pair")]
    figure: Option<u8>,
    #[arg(long, default_value_t = 5040)]
    n: i64,
    #[arg(long, default_value_t = 100)]
    steps: i64,
    /// Grid mode: evaluate this pair for all m <= m-max, n <= n-max.
    #[arg(long)]
    pair: Option<String>,
    #[arg(long, default_value_t = 20)]
    m_max: u64,
    #[arg(long, default_value_t = 20)]
    n_max: u64,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    red: String,
    #[arg(long)]
    blue: String,
    #[arg(long, default_value_t = 10)]
    nmax: usize,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Write the largest good coloring found here.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SelftestArgs {
    /// Run only these criteria (1-9).
    #[arg(long, value_delimiter = ',')]
    only: Vec<usize>,
}

/// Exit code 1: a check ran and failed. Exit code 2: bad input.
enum Failure {
    Check(String),
    Usage(String),
}

impl From<ramsey_core::Error> for Failure {
    fn from(e: ramsey_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(a),
        Command::Value(a) => value(a),
        Command::Table(a) => table(a),
        Command::Search(a) => search(a),
        Command::Selftest(a) => run_selftest(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("ramsey: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("ramsey: {msg}");
            ExitCode::from(2)
        }
    }
}

fn family(s: &str) -> Result<FamilySpec, Failure> {
    Ok(s.parse()?)
}

fn node_budget() -> Result<u64, Failure> {
    match std::env::var("RAMSEY_NODE_BUDGET") {
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("RAMSEY_NODE_BUDGET must be a positive integer, got {v:?}"))),
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> Outcome {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn construct(a: ConstructArgs) -> Outcome {
    let m = match (a.witness.as_str(), a.m) {
        ("matching-fan", m) => m.unwrap_or(0),
        (_, Some(m)) => m,
        (name, None) => return Err(Failure::Usage(format!("{name} needs --m"))),
    };
    let report = selftest::build_witness(&a.witness, m, a.n)?;
    emit(&witness::write(&report.coloring, &report.metadata()), a.output.as_ref())?;
    let summary = format!(
        "{} on {} vertices avoids red {} and blue {}: R >= {}",
        report.generator,
        report.coloring.order(),
        report.avoided_red,
        report.avoided_blue,
        report.claimed_bound
    );
    if !report.certified {
        return Err(Failure::Check(format!("not certified: {summary}")));
    }
    eprintln!("certified: {summary}");
    Ok(())
}

fn describe(r: &DetectionResult) -> String {
    match r {
        DetectionResult::NotFound => "absent".into(),
        DetectionResult::Found(w) => format!("present {w:?}"),
        DetectionResult::BudgetExhausted => "undetermined (budget exhausted)".into(),
    }
}

fn verify(a: VerifyArgs) -> Outcome {
    let text = std::fs::read_to_string(&a.file).map_err(|e| Failure::Usage(format!("{}: {e}", a.file.display())))?;
    let file = witness::parse(&text)?;
    let pick = |flag: &Option<String>, key: &str| -> Result<FamilySpec, Failure> {
        match flag.as_deref().or(file.meta(key)) {
            Some(s) => family(s),
            None => Err(Failure::Usage(format!("no --{} and no {key} header", &key[8..]))),
        }
    };
    let (red, blue) = (pick(&a.red, "avoided-red")?, pick(&a.blue, "avoided-blue")?);
    let report = verify_witness(&file.coloring, red, blue);
    if a.json {
        let out = json!({
            "vertices": file.coloring.order(),
            "red": {"family": red.to_string(), "result": describe(&report.red), "witness": report.red.witness()},
            "blue": {"family": blue.to_string(), "result": describe(&report.blue), "witness": report.blue.witness()},
            "passed": report.passed(),
        });
        println!("{out}");
    } else {
        println!("vertices {}", file.coloring.order());
        println!("red {red}: {}", describe(&report.red));
        println!("blue {blue}: {}", describe(&report.blue));
        println!("{}", if report.passed() { "certified" } else { "not certified" });
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check("verification failed".into()))
    }
}

fn term_json(t: &Term) -> Value {
    match t.concrete() {
        Some(v) => json!(v),
        None => json!(t.to_string()),
    }
}

fn bound_json(pair: Pair, m: u64, n: u64, b: &BoundValue) -> Value {
    json!({
        "pair": pair.name(),
        "m": m,
        "n": n,
        "lower": term_json(&b.lower),
        "upper": term_json(&b.upper),
        "exactness": b.exactness,
        "error_class": b.error_class,
        "regime": b.regime.case,
        "q": b.regime.q,
        "provenance": b.provenance,
        "flags": b.flags,
    })
}

fn value(a: ValueArgs) -> Outcome {
    let pair: Pair = a.pair.parse()?;
    let cfg = FormulaConfig {
        large_cutoff: a.large_cutoff,
    };
    let b = pair.evaluate_with(a.m, a.n, &cfg)?;
    if a.json {
        println!("{}", bound_json(pair, a.m, a.n, &b));
        return Ok(());
    }
    println!("{}", b.headline());
    println!("regime: {}", b.regime.case);
    if let Some(q) = b.regime.q {
        println!("q: {q}");
    }
    println!("provenance: {}", b.provenance);
    for f in &b.flags {
        println!("flag: {}", serde_json::to_string(f).expect("flags serialize"));
    }
    Ok(())
}

fn table(a: TableArgs) -> Outcome {
    if let Some(p) = &a.pair {
        return grid(p.parse()?, a.m_max, a.n_max);
    }
    let figure = match a.figure {
        Some(1) => Figure::CycleWheel,
        Some(2) => Figure::CycleVsStar,
        Some(f) => return Err(Failure::Usage(format!("--figure must be 1 or 2, got {f}"))),
        None => return Err(Failure::Usage("table needs --figure or --pair".into())),
    };
    if a.n < 1 || a.steps < 1 {
        return Err(Failure::Usage("--n and --steps must be positive".into()));
    }
    let n = Rational::from_integer(a.n);
    let mut out = String::new();
    match figure {
        Figure::CycleWheel => out.push_str("m,m_over_n,wheel_coefficient,leading_value\n"),
        Figure::CycleVsStar => out.push_str("m,m_over_n,wheel_coefficient,star_coefficient\n"),
    }
    for p in sweep(figure, a.n, a.steps) {
        let [mu, wheel, star] = p.csv_fields();
        let m = render_ratio(&(p.m_over_n * n));
        let last = match figure {
            Figure::CycleWheel => render_ratio(&(p.wheel * n)),
            Figure::CycleVsStar => star,
        };
        writeln!(out, "{m},{mu},{wheel},{last}").expect("write to string");
    }
    print!("{out}");
    let bad = continuity_violations(50);
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("discontinuous: {}", bad.join("; "))))
    }
}

fn grid(pair: Pair, m_max: u64, n_max: u64) -> Outcome {
    let mut out = String::from("m,n,regime,q,lower,upper,exactness,provenance\n");
    for m in 1..=m_max {
        for n in 1..=n_max {
            let Ok(b) = pair.evaluate(m, n) else { continue };
            let q = b.regime.q.map(|q| q.to_string()).unwrap_or_default();
            writeln!(
                out,
                "{m},{n},{},{q},{},{},{},\"{}\"",
                b.regime.case, b.lower, b.upper, b.exactness, b.provenance
            )
            .expect("write to string");
        }
    }
    print!("{out}");
    Ok(())
}

fn search(a: SearchArgs) -> Outcome {
    let (red, blue) = (family(&a.red)?, family(&a.blue)?);
    if a.nmax == 0 || a.threads == 0 {
        return Err(Failure::Usage("--nmax and --threads must be positive".into()));
    }
    let cfg = SearchConfig {
        node_budget: node_budget()?,
        threads: a.threads,
    };
    let out = ramsey_number_with(red, blue, a.nmax, &cfg);
    if let (Some(path), Some(w)) = (&a.output, &out.witness) {
        let meta = vec![
            ("generator".to_string(), "search".to_string()),
            ("avoided-red".to_string(), red.to_string()),
            ("avoided-blue".to_string(), blue.to_string()),
        ];
        emit(&witness::write(w, &meta), Some(path))?;
    }
    if a.json {
        let v = json!({
            "red": red.to_string(),
            "blue": blue.to_string(),
            "status": out.status,
            "value": out.value,
            "witness_order": out.witness.as_ref().map(|w| w.order()),
            "stats": out.stats,
            "transcript": out.transcript,
        });
        println!("{v}");
    } else {
        for line in &out.transcript {
            println!("{line}");
        }
        let relation = match out.status {
            SearchStatus::RamseyValue => "=",
            _ => ">=",
        };
        println!(
            "status={} R({red},{blue}) {relation} {} nodes={} pruned={}",
            out.status, out.value, out.stats.nodes, out.stats.pruned
        );
    }
    match out.status {
        SearchStatus::ExhaustedBudget => Err(Failure::Check("node budget exhausted".into())),
        _ => Ok(()),
    }
}

fn run_selftest(a: SelftestArgs) -> Outcome {
    let ids: Vec<usize> = if a.only.is_empty() {
        (1..=selftest::TITLES.len()).collect()
    } else {
        a.only
    };
    if let Some(bad) = ids.iter().find(|&&i| i == 0 || i > selftest::TITLES.len()) {
        return Err(Failure::Usage(format!("no criterion {bad}; valid are 1-{}", selftest::TITLES.len())));
    }
    let cfg = SuiteConfig {
        node_budget: node_budget()?,
        ..SuiteConfig::default()
    };
    let mut failed = 0;
    for id in ids {
        let o = selftest::run(id, &Brute, &cfg);
        println!("{}", o.line());
        failed += usize::from(!o.passed);
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check(format!("{failed} criteria failed")))
    }
}
