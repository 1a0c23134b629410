//! Command-line experiments over rings of algebraic integers: prime
//! splitting tables, Dedekind zeta values, coprimality densities over
//! coordinate boxes, and consistency verification.
//!
//! Exit codes: 0 success, 2 verification mismatch, 3 the order is not
//! maximal at some required prime, 4 enumeration budget exceeded,
//! 5 argument or input parse failure, 1 anything else.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde_json::json;

use nfdensity_core::density::{
    self, BoxSpec, ConvergenceRow, CoprimalityTester, Mode, PrimeSet, SampleParams, TableKind,
};
use nfdensity_core::linalg::IMat;
use nfdensity_core::order::{BasisView, IntegralBasis, NumberFieldOrder};
use nfdensity_core::poly::{IntPolynomial, IrreducibilityEvidence};
use nfdensity_core::primes::primes_up_to;
use nfdensity_core::splitting::{prime_ideal, SplittingTable};
use nfdensity_core::zeta;
use nfdensity_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "nfdensity",
    version,
    about = "Coprimality densities in rings of algebraic integers"
)]
struct Cli {
    /// Cap the number of worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Splitting cache file to read and update; the NF_DENSITY_CACHE
    /// environment variable overrides this path
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Write the result to this file instead of stdout
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,

    /// Output format: json, or csv for tabular results
    #[arg(long, global = true, default_value = "json")]
    format: String,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Splitting types (e_j, d_j) of every prime up to a bound
    Split {
        /// Monic defining polynomial, e.g. "x^2+1"
        #[arg(long)]
        poly: String,
        /// Split every prime p <= this bound
        #[arg(long)]
        upto: u64,
    },
    /// Dedekind zeta value at an integer by truncated Euler product
    Zeta {
        #[arg(long)]
        poly: String,
        /// Exponent; the density statement needs m >= 2
        #[arg(short)]
        m: i64,
        /// Include Euler factors for all primes up to this bound
        #[arg(short = 'P', long = "prime-bound", default_value_t = 100_000)]
        prime_bound: u64,
    },
    /// Empirical densities over boxes, with exact or zeta references
    Density {
        #[arg(long)]
        poly: String,
        /// Alternative basis: rows of power coordinates, e.g. "1,0;-1,1"
        #[arg(long)]
        basis: Option<String>,
        /// Tuple length
        #[arg(short, default_value_t = 2)]
        m: u32,
        /// Box side parameter (single runs and --t-schedule)
        #[arg(short = 'B')]
        b: Option<u64>,
        /// Measure avoidance of these primes instead of full coprimality
        #[arg(long, value_delimiter = ',')]
        set: Vec<u64>,
        /// Measure avoidance of the first t primes
        #[arg(long)]
        first_t: Option<usize>,
        /// Emit a convergence table over these box sides
        #[arg(long, value_delimiter = ',')]
        b_schedule: Vec<u64>,
        /// Emit a convergence table over these prime-set sizes at fixed -B
        #[arg(long, value_delimiter = ',')]
        t_schedule: Vec<usize>,
        /// exhaustive or sampled
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        /// Sample count (sampled mode)
        #[arg(long)]
        samples: Option<u64>,
        /// RNG seed (sampled mode); recorded in every sampled output
        #[arg(long)]
        seed: Option<u64>,
        /// Prime bound for the zeta reference value
        #[arg(short = 'P', long = "prime-bound", default_value_t = 100_000)]
        prime_bound: u64,
        /// Cap on exhaustive enumeration size
        #[arg(long, default_value_t = density::DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
    },
    /// Cross-check closed-form counts, period densities, and lattice counts
    Verify {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        basis: Option<String>,
        /// Primes the box checks avoid
        #[arg(long, value_delimiter = ',', default_value = "2")]
        set: Vec<u64>,
        /// Box scale: the box side is q times the product of the set
        #[arg(short, default_value_t = 1)]
        q: u64,
        /// Tuple length
        #[arg(short, default_value_t = 1)]
        m: u32,
        /// Box sides for the ideal lattice diagnostic
        #[arg(long, value_delimiter = ',', default_values_t = [20u64, 40])]
        lattice_b: Vec<u64>,
        /// Largest allowed normalized lattice deviation
        #[arg(long, default_value_t = 8.0)]
        max_deviation: f64,
        #[arg(long, default_value_t = density::DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
    },
}

#[derive(Clone, Copy, PartialEq)]
enum Fmt {
    Json,
    Csv,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 5,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match dispatch(&cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            match &e {
                Error::BudgetExceeded { .. } => eprintln!(
                    "hint: rerun with --mode sampled --samples <count> --seed <seed>, or raise --budget"
                ),
                Error::ZetaPole { .. } => {
                    eprintln!("hint: the Euler product diverges at m = 1; pick m >= 2")
                }
                _ => {}
            }
            std::process::exit(exit_code(&e));
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::NotPrime(_) => 5,
        Error::NonMaximalAtP(_) => 3,
        Error::BudgetExceeded { .. } => 4,
        _ => 1,
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let fmt = match cli.format.as_str() {
        "json" => Fmt::Json,
        "csv" => Fmt::Csv,
        other => return Err(Error::Parse(format!("unknown format `{other}`"))),
    };
    match &cli.cmd {
        Cmd::Split { poly, upto } => cmd_split(cli, fmt, poly, *upto),
        Cmd::Zeta { poly, m, prime_bound } => cmd_zeta(cli, poly, *m, *prime_bound),
        Cmd::Density {
            poly,
            basis,
            m,
            b,
            set,
            first_t,
            b_schedule,
            t_schedule,
            mode,
            samples,
            seed,
            prime_bound,
            budget,
        } => cmd_density(
            cli,
            fmt,
            DensityArgs {
                poly,
                basis: basis.as_deref(),
                m: *m,
                b: *b,
                set,
                first_t: *first_t,
                b_schedule,
                t_schedule,
                mode,
                samples: *samples,
                seed: *seed,
                prime_bound: *prime_bound,
                budget: *budget,
            },
        ),
        Cmd::Verify {
            poly,
            basis,
            set,
            q,
            m,
            lattice_b,
            max_deviation,
            budget,
        } => cmd_verify(
            cli,
            poly,
            basis.as_deref(),
            set,
            *q,
            *m,
            lattice_b,
            *max_deviation,
            *budget,
        ),
    }
}

/// Polynomial -> order, refusing inputs that cannot define a field.
fn order_for_cli(poly: &str) -> Result<NumberFieldOrder> {
    let f: IntPolynomial = poly.parse()?;
    let order = NumberFieldOrder::new(f)?;
    if order.disc_f().is_zero() {
        return Err(Error::Invalid(
            "defining polynomial has repeated roots; it does not define a field".into(),
        ));
    }
    if let IrreducibilityEvidence::Uncertified { rational_roots } = order.evidence() {
        if let Some(r) = rational_roots.first() {
            return Err(Error::Invalid(format!(
                "defining polynomial is reducible (rational root {r})"
            )));
        }
        eprintln!(
            "note: irreducibility not certified within the witness budget; proceeding anyway"
        );
    }
    Ok(order)
}

fn build_view<'a>(order: &'a NumberFieldOrder, basis: Option<&str>) -> Result<BasisView<'a>> {
    match basis {
        None => Ok(BasisView::power_basis(order)),
        Some(text) => {
            let rows = parse_matrix(text, order.degree())?;
            let basis = IntegralBasis::from_rows(&rows)?;
            BasisView::with_basis(order, basis)
        }
    }
}

/// "a,b;c,d" -> n x n integer matrix whose row t holds the power
/// coordinates of basis vector t.
fn parse_matrix(text: &str, n: usize) -> Result<IMat> {
    let mut rows = Vec::new();
    for row_text in text.split(';') {
        let mut row = Vec::new();
        for entry in row_text.split(',') {
            let v: BigInt = entry
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad basis entry `{}`", entry.trim())))?;
            row.push(v);
        }
        if row.len() != n {
            return Err(Error::Parse(format!("each basis row needs {n} entries")));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::Parse(format!("the basis needs {n} rows")));
    }
    Ok(IMat::from_rows(rows))
}

fn cache_path(cli: &Cli) -> Option<PathBuf> {
    std::env::var_os("NF_DENSITY_CACHE")
        .map(PathBuf::from)
        .or_else(|| cli.cache.clone())
}

fn load_cache(table: &SplittingTable, path: &Option<PathBuf>) -> Result<()> {
    if let Some(p) = path {
        table.load_cache(p)?;
    }
    Ok(())
}

fn save_cache(table: &SplittingTable, path: &Option<PathBuf>) {
    if let Some(p) = path {
        if let Err(e) = table.save_cache(p) {
            eprintln!("warning: splitting cache not saved: {e}");
        }
    }
}

fn emit(output: &Option<PathBuf>, mut text: String) -> Result<()> {
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match output {
        Some(p) => std::fs::write(p, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json_line(v: &serde_json::Value) -> String {
    serde_json::to_string(v).expect("plain json values always serialize")
}

fn cmd_split(cli: &Cli, fmt: Fmt, poly: &str, upto: u64) -> Result<i32> {
    let order = order_for_cli(poly)?;
    let table = SplittingTable::new(&order);
    let cache = cache_path(cli);
    load_cache(&table, &cache)?;

    let mut rows = Vec::new();
    for p in primes_up_to(upto) {
        let split = table.split(p)?;
        rows.push((p, split));
    }

    let text = match fmt {
        Fmt::Json => {
            let rows_json: Vec<serde_json::Value> = rows
                .iter()
                .map(|(p, s)| {
                    json!({
                        "p": p,
                        "D": s.big_d(),
                        "factors": s.factors.iter()
                            .map(|f| json!({"e": f.e, "d": f.d}))
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            json_line(&json!({
                "poly": order.defining_poly().to_string(),
                "rows": rows_json,
            }))
        }
        Fmt::Csv => {
            let mut out = String::from("p,D,types\n");
            for (p, s) in &rows {
                let types: Vec<String> =
                    s.factors.iter().map(|f| format!("{}:{}", f.e, f.d)).collect();
                out.push_str(&format!("{},{},{}\n", p, s.big_d(), types.join(" ")));
            }
            out
        }
    };
    emit(&cli.output, text)?;
    save_cache(&table, &cache);
    Ok(0)
}

fn cmd_zeta(cli: &Cli, poly: &str, m: i64, prime_bound: u64) -> Result<i32> {
    let order = order_for_cli(poly)?;
    let table = SplittingTable::new(&order);
    let cache = cache_path(cli);
    load_cache(&table, &cache)?;

    let est = zeta::zeta_k(&table, m, prime_bound)?;
    let (recip, recip_err) = zeta::reciprocal_density(&est)?;
    let mut v = est.to_json();
    v["reciprocal"] = json!(recip.to_decimal_string());
    v["reciprocal_error"] = json!(recip_err.to_string());
    emit(&cli.output, json_line(&v))?;
    save_cache(&table, &cache);
    Ok(0)
}

struct DensityArgs<'a> {
    poly: &'a str,
    basis: Option<&'a str>,
    m: u32,
    b: Option<u64>,
    set: &'a [u64],
    first_t: Option<usize>,
    b_schedule: &'a [u64],
    t_schedule: &'a [usize],
    mode: &'a str,
    samples: Option<u64>,
    seed: Option<u64>,
    prime_bound: u64,
    budget: u64,
}

fn cmd_density(cli: &Cli, fmt: Fmt, args: DensityArgs) -> Result<i32> {
    let order = order_for_cli(args.poly)?;
    let table = SplittingTable::new(&order);
    let cache = cache_path(cli);
    load_cache(&table, &cache)?;
    let view = build_view(&order, args.basis)?;

    let mode: Mode = args.mode.parse()?;
    let sampling = match mode {
        Mode::Exhaustive => None,
        Mode::Sampled => {
            let samples = args
                .samples
                .ok_or_else(|| Error::Invalid("sampled mode needs --samples".into()))?;
            let seed = args.seed.ok_or(Error::MissingSeed)?;
            Some(SampleParams { samples, seed })
        }
    };
    if !args.set.is_empty() && args.first_t.is_some() {
        return Err(Error::Invalid("--set and --first-t are mutually exclusive".into()));
    }

    let unit_note = "with m = 1 the coprime elements are exactly the units, \
                     whose density in a growing box tends to zero";

    if !args.t_schedule.is_empty() {
        let b = args
            .b
            .ok_or_else(|| Error::Invalid("--t-schedule needs a fixed -B".into()))?;
        let kind = TableKind::FirstTSchedule { b, ts: args.t_schedule };
        let rows =
            density::density_convergence_table(&view, &table, args.m, &kind, mode, sampling, args.budget)?;
        emit_table(cli, fmt, &rows)?;
    } else if !args.b_schedule.is_empty() {
        if !args.set.is_empty() {
            return Err(Error::Invalid(
                "schedules track the first t primes; use --first-t instead of --set".into(),
            ));
        }
        let kind = match args.first_t {
            Some(t) => TableKind::AvoidFirstT { t, bs: args.b_schedule },
            None => TableKind::CoprimeTarget {
                zeta_prime_bound: args.prime_bound,
                bs: args.b_schedule,
            },
        };
        if args.m == 1 && args.first_t.is_none() {
            eprintln!("note: {unit_note}");
        }
        let rows =
            density::density_convergence_table(&view, &table, args.m, &kind, mode, sampling, args.budget)?;
        emit_table(cli, fmt, &rows)?;
    } else {
        let b = args
            .b
            .ok_or_else(|| Error::Invalid("need -B, or --b-schedule / --t-schedule".into()))?;
        let spec = BoxSpec::new(b, args.m)?;
        let s = if !args.set.is_empty() {
            Some(PrimeSet::new(args.set.iter().copied())?)
        } else {
            args.first_t.map(PrimeSet::first_t)
        };
        let (report, reference, t_col) = match &s {
            Some(s) => {
                let rep = density::empirical_density_es(
                    &view, &table, s, &spec, mode, sampling, args.budget,
                )?;
                let exact = density::exact_density_es(&table, s, args.m)?;
                (rep, ratio_f64(&exact), Some(s.len()))
            }
            None => {
                let tester = CoprimalityTester::new(&view, &table)?;
                let rep =
                    density::empirical_density_e(&tester, &spec, mode, sampling, args.budget)?;
                let est = zeta::zeta_k(&table, args.m.max(2) as i64, args.prime_bound)?;
                let recip = zeta::reciprocal_density(&est)?.0.to_f64();
                // m = 1 has no zeta reference: the limit density is zero
                let reference = if args.m == 1 { 0.0 } else { recip };
                (rep, reference, None)
            }
        };
        match fmt {
            Fmt::Json => {
                let mut v = report.to_json();
                v["reference"] = json!(reference);
                if args.m == 1 && s.is_none() {
                    v["note"] = json!(unit_note);
                }
                emit(&cli.output, json_line(&v))?;
            }
            Fmt::Csv => {
                if args.m == 1 && s.is_none() {
                    eprintln!("note: {unit_note}");
                }
                let row = ConvergenceRow {
                    b: report.b,
                    t: t_col,
                    estimate: report.estimate,
                    reference,
                    abs_diff: (report.estimate - reference).abs(),
                    mode: report.mode,
                    seed: report.seed,
                };
                emit_table(cli, fmt, &[row])?;
            }
        }
    }
    save_cache(&table, &cache);
    Ok(0)
}

fn emit_table(cli: &Cli, fmt: Fmt, rows: &[ConvergenceRow]) -> Result<()> {
    match fmt {
        Fmt::Csv => {
            let mut buf = Vec::new();
            density::write_convergence_csv(&mut buf, rows)?;
            emit(&cli.output, String::from_utf8(buf).expect("csv writer emits utf-8"))
        }
        Fmt::Json => {
            let arr: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "B": r.b,
                        "t": r.t,
                        "estimate": r.estimate,
                        "reference": r.reference,
                        "abs_diff": r.abs_diff,
                        "mode": r.mode.to_string(),
                        "seed": r.seed,
                    })
                })
                .collect();
            emit(&cli.output, json_line(&json!({ "rows": arr })))
        }
    }
}

fn ratio_f64(r: &Ratio<BigInt>) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn fmt_ratio(r: &Ratio<BigInt>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    cli: &Cli,
    poly: &str,
    basis: Option<&str>,
    set: &[u64],
    q: u64,
    m: u32,
    lattice_b: &[u64],
    max_deviation: f64,
    budget: u64,
) -> Result<i32> {
    let order = order_for_cli(poly)?;
    let table = SplittingTable::new(&order);
    let cache = cache_path(cli);
    load_cache(&table, &cache)?;
    let view = build_view(&order, basis)?;

    let s = PrimeSet::new(set.iter().copied())?;
    let n_val = s
        .modulus_u64()
        .ok_or_else(|| Error::Invalid("prime set product too large for a box side".into()))?;
    let b = q
        .checked_mul(n_val)
        .ok_or_else(|| Error::Invalid("q times the set product overflows".into()))?;
    let spec = BoxSpec::new(b, m)?;

    let mut lines = Vec::new();
    let mut all_pass = true;
    let check = |name: &str, pass: bool, detail: String| -> String {
        let verdict = if pass { "PASS" } else { "FAIL" };
        format!("{name} {verdict} ({detail})")
    };

    // closed-form count and exact period density against one enumeration
    let rep = density::empirical_density_es(
        &view,
        &table,
        &s,
        &spec,
        Mode::Exhaustive,
        None,
        budget,
    )?;
    let closed = density::exact_count_es(&table, &s, q, m)?;
    let count_ok = BigInt::from(rep.hits) == closed;
    all_pass &= count_ok;
    lines.push(check("box-count", count_ok, format!("{} = {}", rep.hits, closed)));

    let exact_d = density::exact_density_es(&table, &s, m)?;
    let got = rep.exact.clone().expect("exhaustive runs carry the exact ratio");
    let density_ok = got == exact_d;
    all_pass &= density_ok;
    lines.push(check(
        "box-density",
        density_ok,
        format!("{} = {}", fmt_ratio(&got), fmt_ratio(&exact_d)),
    ));

    // lattice counts for every prime ideal above the set
    for &p in s.primes() {
        let split = table.split(p)?;
        for j in 0..split.factors.len() {
            let ideal = prime_ideal(&view, &split, j)?;
            let mut worst: f64 = 0.0;
            for &lb in lattice_b {
                let chk = density::lattice_count_check(&view, &ideal, lb, budget)?;
                worst = worst.max(chk.normalized_deviation);
            }
            let ok = worst <= max_deviation;
            all_pass &= ok;
            lines.push(check(
                "ideal-lattice",
                ok,
                format!("p={p} ideal {j}: max normalized deviation {worst:.4} vs {max_deviation}"),
            ));
        }
    }

    emit(&cli.output, lines.join("\n"))?;
    save_cache(&table, &cache);
    Ok(if all_pass { 0 } else { 2 })
}
