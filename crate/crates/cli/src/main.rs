//! `capcalc` — exact capacities of rational surfaces and toric domains
//! from the command line.
//!
//! Exit codes: 0 success, 1 parse/validation error, 2 input outside the
//! admissible cone, 3 uncertified result under `--certify-strict`.

mod plot;
mod render;

use std::ops::RangeInclusive;
use std::process::ExitCode;

use capcalc::capacity::capacity_fk;
use capcalc::cremona::reduce;
use capcalc::lattice::CohomClass;
use capcalc::toric::{capacities_of_polygon, ech_capacity, standard_corpus, weights_to_class, Polygon, WeightSequence};
use capcalc::tropical::minimizer_set;
use capcalc::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "capcalc", version, about = "Exact symplectic capacity calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PlotFormat {
    Csv,
    Svg,
}

#[derive(Args)]
struct KRangeArg {
    /// Capacity indices, a single value `6` or an inclusive range `1..8`.
    #[arg(long, short)]
    k: String,
}

#[derive(Subcommand)]
enum Command {
    /// Capacities f_k at a symplectic class given as "x0;x1,...,xn".
    Fk {
        #[arg(long)]
        omega: String,
        #[command(flatten)]
        k: KRangeArg,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// The minimizer set presenting f_k as a tropical polynomial.
    Tropical {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        /// Enumeration budget on the H-coefficient, used when the
        /// certified bound is impractically large.
        #[arg(long)]
        budget: Option<u64>,
        /// Fail (exit 3) instead of returning an uncertified set.
        #[arg(long)]
        certify_strict: bool,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Cremona-reduce a class into the fundamental domain.
    Reduce {
        #[arg(long)]
        omega: String,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// ECH capacities of the polygon in a JSON file, optionally
    /// cross-checked against f_k of the closed toric surface.
    Polygon {
        #[arg(long)]
        file: String,
        #[command(flatten)]
        k: KRangeArg,
        #[arg(long)]
        crosscheck: bool,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// ECH capacities straight from a weight sequence "head;b1,b2;c1,c2".
    Weights {
        #[arg(long)]
        weights: String,
        #[command(flatten)]
        k: KRangeArg,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Sampled capacity curves over the one-blowup slice (1 | x).
    Plot {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[command(flatten)]
        k: KRangeArg,
        /// Number of uniform sample points in (0, 1); breakpoints are
        /// always added exactly.
        #[arg(long, default_value_t = 64)]
        samples: u32,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: PlotFormat,
    },
    /// Runs the built-in Delzant corpus crosscheck.
    Verify {
        #[arg(long, default_value_t = 20)]
        kmax: u32,
    },
}

fn parse_k_range(s: &str) -> Result<RangeInclusive<u32>, Error> {
    let t = s.trim();
    let (lo, hi) = match t.split_once("..") {
        None => {
            let k = t
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("bad k {t:?}: {e}")))?;
            (k, k)
        }
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let lo = a
                .trim()
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("bad range start {a:?}: {e}")))?;
            let hi = b
                .trim()
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("bad range end {b:?}: {e}")))?;
            (lo, hi)
        }
    };
    if lo < 1 || hi < lo {
        return Err(Error::Parse(format!(
            "k range must be non-empty with bounds ≥ 1, got {t:?}"
        )));
    }
    Ok(lo..=hi)
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NotInSymplecticCone
        | Error::ReductionCapExceeded(_)
        | Error::OutsideAdmissibleRegion(_)
        | Error::OutOfDomain => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("CAPCALC_THREADS") {
        if let Ok(n) = threads.trim().parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Fk { omega, k, format } => cmd_fk(&omega, &k.k, format),
        Command::Tropical {
            n,
            k,
            budget,
            certify_strict,
            format,
        } => cmd_tropical(n, k, budget, certify_strict, format),
        Command::Reduce { omega, format } => cmd_reduce(&omega, format),
        Command::Polygon {
            file,
            k,
            crosscheck,
            format,
        } => cmd_polygon(&file, &k.k, crosscheck, format),
        Command::Weights { weights, k, format } => cmd_weights(&weights, &k.k, format),
        Command::Plot {
            n,
            k,
            samples,
            out,
            format,
        } => plot::cmd_plot(n, &k.k, samples, out.as_deref(), format),
        Command::Verify { kmax } => cmd_verify(kmax),
    }
}

fn cmd_fk(omega: &str, k: &str, format: Format) -> Result<ExitCode, Error> {
    let w: CohomClass = omega.parse()?;
    let ks = parse_k_range(k)?;
    let results: Vec<_> = ks.map(|k| capacity_fk(&w, k)).collect::<Result<_, _>>()?;
    match format {
        Format::Json => {
            let arr: Vec<serde_json::Value> = results.iter().map(render::fk_json).collect();
            println!("{}", serde_json::Value::Array(arr));
        }
        Format::Csv => {
            println!("k,value,witnesses");
            for r in &results {
                let ws: Vec<String> = r.witnesses.iter().map(|c| c.to_string()).collect();
                println!("{},{},{}", r.k, r.value, ws.join(" "));
            }
        }
        Format::Pretty => {
            for r in &results {
                let ws: Vec<String> = r.witnesses.iter().map(|c| c.to_string()).collect();
                println!(
                    "f_{}({}) = {}   witnesses: {}",
                    r.k,
                    r.omega_reduced,
                    r.value,
                    ws.join(", ")
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_tropical(
    n: usize,
    k: u32,
    budget: Option<u64>,
    certify_strict: bool,
    format: Format,
) -> Result<ExitCode, Error> {
    let tp = minimizer_set(n, k, budget)?;
    if !tp.certified() {
        eprintln!(
            "warning: enumeration bound not certified (budget {}); the term set may be incomplete",
            budget.map_or_else(|| "-".into(), |b| b.to_string())
        );
    }
    match format {
        Format::Json => println!("{}", render::tropical_json(&tp)),
        Format::Csv => {
            println!("a,b");
            for t in tp.terms() {
                let b: Vec<String> = t.b().iter().map(|v| v.to_string()).collect();
                println!("{},{}", t.a(), b.join(" "));
            }
        }
        Format::Pretty => {
            println!(
                "f_{k} over the c1-nef cone (n = {n}, {}):",
                if tp.certified() { "certified" } else { "uncertified" }
            );
            println!("  {}", render::tropical_pretty(&tp));
            for t in tp.terms() {
                println!("  term {t}");
            }
        }
    }
    if certify_strict && !tp.certified() {
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reduce(omega: &str, format: Format) -> Result<ExitCode, Error> {
    let w: CohomClass = omega.parse()?;
    let red = reduce(&w)?;
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::json!({
                    "input": w.to_string(),
                    "reduced": red.omega.to_string(),
                    "boundary": red.boundary,
                    "trace": red.trace.to_json(),
                })
            );
        }
        Format::Csv | Format::Pretty => {
            println!("{}", red.omega);
            if red.boundary {
                println!("# on the boundary of the reduced cone");
            }
            println!("# trace: {}", red.trace.to_json());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_polygon(file: &str, k: &str, crosscheck: bool, format: Format) -> Result<ExitCode, Error> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::Parse(format!("cannot read {file}: {e}")))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad JSON in {file}: {e}")))?;
    let p = Polygon::from_json(&value)?;
    let ks = parse_k_range(k)?;
    let rows = capacities_of_polygon(&p, ks, crosscheck)?;
    render::print_capacity_rows(&rows, format);
    Ok(ExitCode::SUCCESS)
}

fn cmd_weights(weights: &str, k: &str, format: Format) -> Result<ExitCode, Error> {
    let w: WeightSequence = weights.parse()?;
    let ks = parse_k_range(k)?;
    let red = weights_to_class(&w)?;
    let rows: Vec<(u32, num_rational::BigRational)> = ks
        .map(|k| ech_capacity(&w, k).map(|c| (k, c)))
        .collect::<Result<_, _>>()?;
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::json!({
                    "weights": w.to_string(),
                    "class": red.omega.to_string(),
                    "boundary": red.boundary,
                    "capacities": rows
                        .iter()
                        .map(|(k, c)| serde_json::json!({"k": k, "value": c.to_string()}))
                        .collect::<Vec<_>>(),
                })
            );
        }
        Format::Csv => {
            println!("k,value");
            for (k, c) in &rows {
                println!("{k},{c}");
            }
        }
        Format::Pretty => {
            println!("weights {w}  ->  class {}{}", red.omega, if red.boundary { " (boundary)" } else { "" });
            for (k, c) in &rows {
                println!("c_{k} = {c}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(kmax: u32) -> Result<ExitCode, Error> {
    let mut failures = 0usize;
    for (name, p) in standard_corpus() {
        match capacities_of_polygon(&p, 1..=kmax, true) {
            Ok(rows) => {
                let bad: Vec<u32> = rows
                    .iter()
                    .filter(|r| r.equal != Some(true))
                    .map(|r| r.k)
                    .collect();
                if bad.is_empty() {
                    println!("{name}: ok (ech == fk for k = 1..={kmax})");
                } else {
                    failures += 1;
                    println!("{name}: MISMATCH at k = {bad:?}");
                }
            }
            Err(e) => {
                failures += 1;
                println!("{name}: ERROR {e}");
            }
        }
    }
    if failures == 0 {
        println!("verify: all polygons passed");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("verify: {failures} polygon(s) failed");
        Ok(ExitCode::from(1))
    }
}
