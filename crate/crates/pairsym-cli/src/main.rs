//! Command-line front end: construct, verify and search MDS symbol-pair
//! codes, build eulerian graphs of prescribed girth, and reproduce the
//! catalog of known small codes.
//!
//! Exit codes: 0 success or verified, 1 verification failure, 2 usage or
//! input error, 3 nonexistent or unsupported parameters.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pairsym::{
    certify, classical_mds_matrix, construct_with_budget, dev_8_7_2p, develop,
    embed_classical_matrix, entry_is_mds, eulerian_girth3, eulerian_girth4, interleave, linear_d4,
    linear_d5, linear_dn, max_code_size, mds_nm1, mds_nm2, min_alphabet_order, product, read_code,
    read_graph, run_catalog, singleton_bound, span_with_claim, tabulated_code, write_code,
    write_gen, write_graph, Alphabet, Code, Constructed, Error, Status, Word, CATALOG_BUDGET,
    CATALOG_INSTANCES, DEFAULT_VERIFY_BUDGET,
};

#[derive(Parser)]
#[command(name = "pairsym", version, about = "MDS symbol-pair code toolkit")]
struct Cli {
    /// Worker threads for verification and search kernels.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    WholeSpace,
    ClassicalEmbedding,
    LinearD4,
    LinearDn,
    LinearD5,
    Tabulated,
    Development,
    GraphGirth3,
    GraphGirth4,
    Interleaving,
    Product,
}

#[derive(Subcommand)]
enum Command {
    /// Build an MDS (n,d)_q symbol-pair code and verify it within budget.
    Construct {
        /// Code length.
        #[arg(long)]
        n: usize,
        /// Pair distance.
        #[arg(long)]
        d: usize,
        /// Alphabet order.
        #[arg(long)]
        q: u16,
        /// Force a specific construction instead of automatic dispatch.
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Cap on pairwise comparisons spent verifying the result.
        #[arg(long)]
        budget: Option<u128>,
        /// Write the code as a pairsym-code/1 JSON file.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the generator matrix when the route has one.
        #[arg(long)]
        gen_output: Option<PathBuf>,
    },
    /// Re-check a code file's minimum pair distance by exhaustive scan.
    Verify {
        file: PathBuf,
        /// Fail unless the computed distance equals this value.
        #[arg(long)]
        expect_d: Option<usize>,
        /// Fail unless the code meets the Singleton-type bound exactly.
        #[arg(long)]
        expect_mds: bool,
    },
    /// Build an eulerian graph of the given order, size and minimum girth.
    Graph {
        /// Number of vertices.
        #[arg(long)]
        order: usize,
        /// Number of edges.
        #[arg(long)]
        size: usize,
        /// Shortest cycle allowed, 3 or 4.
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=4))]
        min_girth: u8,
        /// Write the graph as a pairsym-graph/1 JSON file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print a closed eulerian trail of a graph file as a vertex sequence.
    Trail { file: PathBuf },
    /// Construct and verify the whole catalog of known small codes.
    Table2 {
        /// Cap on pairwise comparisons spent verifying each entry.
        #[arg(long)]
        budget: Option<u128>,
        /// Write each constructed code into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Exhaustive maximum-code-size search (guarded to q^n <= 4096).
    Search {
        /// Code length.
        #[arg(long)]
        n: usize,
        /// Pair distance every pair of codewords must reach.
        #[arg(long)]
        d: usize,
        /// Alphabet order.
        #[arg(long)]
        q: u16,
        /// Stop early once a code this large is found.
        #[arg(long)]
        target: Option<usize>,
        /// Write the best code found as a pairsym-code/1 file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Pair distance between two comma-separated words.
    Dist { left: String, right: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // Ignore failure: the global pool may already exist in tests.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::VerificationFailed { .. } => 1,
        Error::Nonexistent(_)
        | Error::GraphNonexistent { .. }
        | Error::Unsupported(_)
        | Error::GraphUnsupported { .. }
        | Error::Inapplicable(_)
        | Error::NotEulerian => 3,
        _ => 2,
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Construct {
            n,
            d,
            q,
            method,
            budget,
            output,
            gen_output,
        } => cmd_construct(n, d, q, method, budget, output, gen_output),
        Command::Verify {
            file,
            expect_d,
            expect_mds,
        } => cmd_verify(&file, expect_d, expect_mds),
        Command::Graph {
            order,
            size,
            min_girth,
            output,
        } => cmd_graph(order, size, min_girth, output),
        Command::Trail { file } => cmd_trail(&file),
        Command::Table2 { budget, out_dir } => cmd_table2(budget, out_dir),
        Command::Search {
            n,
            d,
            q,
            target,
            output,
        } => cmd_search(n, d, q, target, output),
        Command::Dist { left, right } => cmd_dist(&left, &right),
    }
}

/// Build by a forced method; `Auto` defers to the dispatcher.
fn construct_via(
    method: Method,
    n: usize,
    d: usize,
    q: u16,
    budget: u128,
) -> Result<Constructed, Error> {
    let code: Code = match method {
        Method::Auto => return construct_with_budget(n, d, q, budget),
        Method::WholeSpace => {
            if d != 2 {
                return Err(Error::Unsupported(format!(
                    "the whole space has pair distance 2, not {d}"
                )));
            }
            Code::whole_space(Alphabet::ring(q)?, n)?
        }
        Method::ClassicalEmbedding => {
            let gm = classical_mds_matrix(q, n, d - 1).ok_or_else(|| {
                Error::Unsupported(format!(
                    "no classical MDS [n={n}, d={}] generator is available over GF({q})",
                    d - 1
                ))
            })?;
            embed_classical_matrix(&gm)?
        }
        Method::LinearD4 => {
            expect_distance(d, 4)?;
            span_with_claim(linear_d4(q, n)?, 4)?
        }
        Method::LinearDn => {
            expect_distance(d, n)?;
            span_with_claim(linear_dn(q, n)?, n)?
        }
        Method::LinearD5 => {
            expect_distance(d, 5)?;
            span_with_claim(linear_d5(q, n)?, 5)?
        }
        Method::Tabulated => span_with_claim(tabulated_code(q, n, d)?, d)?,
        Method::Development => {
            if n != 8 || d != 7 || !q.is_multiple_of(2) {
                return Err(Error::Unsupported(format!(
                    "development covers (8,7) over an order twice an odd prime, \
                     not (n={n}, d={d}, q={q})"
                )));
            }
            develop(&dev_8_7_2p(q / 2)?)?
        }
        Method::GraphGirth3 => {
            expect_distance(d, n.saturating_sub(1))?;
            mds_nm1(q, n)?
        }
        Method::GraphGirth4 => {
            expect_distance(d, n.saturating_sub(2))?;
            mds_nm2(q, n)?
        }
        Method::Interleaving => {
            if !n.is_multiple_of(2) || !d.is_multiple_of(2) {
                return Err(Error::Unsupported(format!(
                    "interleaving doubles length and distance, so both must be even, \
                     got (n={n}, d={d})"
                )));
            }
            let gm = classical_mds_matrix(q, n / 2, d / 2).ok_or_else(|| {
                Error::Unsupported(format!(
                    "no classical MDS [n={}, d={}] generator is available over GF({q})",
                    n / 2,
                    d / 2
                ))
            })?;
            let half = gm.span()?;
            interleave(&half, &half)?
        }
        Method::Product => {
            let mut found = None;
            let mut a = 2u16;
            while (a as u32) * (a as u32) <= q as u32 {
                if q.is_multiple_of(a) {
                    let b = q / a;
                    if let (Ok(c1), Ok(c2)) = (
                        construct_with_budget(n, d, a, 0),
                        construct_with_budget(n, d, b, 0),
                    ) {
                        found = Some(product(&c1.code, &c2.code)?);
                        break;
                    }
                }
                a += 1;
            }
            found.ok_or_else(|| {
                Error::Unsupported(format!(
                    "no factorization of {q} yields two MDS (n={n}, d={d}) codes"
                ))
            })?
        }
    };
    certify(code, budget)
}

fn expect_distance(got: usize, needed: usize) -> Result<(), Error> {
    if got != needed {
        return Err(Error::Unsupported(format!(
            "this method produces pair distance {needed}, not {got}"
        )));
    }
    Ok(())
}

fn cmd_construct(
    n: usize,
    d: usize,
    q: u16,
    method: Method,
    budget: Option<u128>,
    output: Option<PathBuf>,
    gen_output: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let budget = budget.unwrap_or(DEFAULT_VERIFY_BUDGET);
    let built = match construct_via(method, n, d, q, budget) {
        Ok(built) => built,
        Err(Error::Nonexistent(reason)) => {
            match min_alphabet_order(n, d) {
                Some(q0) => eprintln!("nonexistent: q({n},{d})={q0}; {reason}"),
                None => eprintln!("nonexistent: {reason}"),
            }
            return Ok(ExitCode::from(3));
        }
        Err(e) => return Err(e),
    };
    println!("route: {}", built.route);
    println!("size: {}", built.code.size());
    println!("bound: {}", singleton_bound(n, d, q)?);
    match &built.verified {
        Some(report) => println!("verified d: {} (MDS)", report.min_pair_distance),
        None => println!("verified d: skipped, claimed {d} exceeds the scan budget"),
    }
    if let Some(path) = output {
        write_code(&path, &built.code)?;
        println!("wrote {}", path.display());
    }
    if let Some(path) = gen_output {
        match tabulated_code(q, n, d)
            .ok()
            .or_else(|| classical_mds_matrix(q, n, d - 1))
        {
            Some(gm) => {
                write_gen(&path, &gm)?;
                println!("wrote {}", path.display());
            }
            None => eprintln!("no generator matrix to write for this route"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    file: &PathBuf,
    expect_d: Option<usize>,
    expect_mds: bool,
) -> Result<ExitCode, Error> {
    let code = read_code(file)?;
    let report = code.mds_report()?;
    println!("d: {}", report.min_pair_distance);
    println!("size: {}", report.size);
    println!("bound: {}", report.bound);
    println!("MDS: {}", if report.is_mds { "yes" } else { "no" });
    if let Some(claimed) = code.claimed_d() {
        if claimed != report.min_pair_distance {
            println!("claimed d: {claimed} (differs from computed)");
        }
    }
    let mut ok = true;
    if let Some(d) = expect_d {
        if report.min_pair_distance != d {
            eprintln!("expected d = {d}, computed {}", report.min_pair_distance);
            ok = false;
        }
    }
    if expect_mds && !report.is_mds {
        eprintln!(
            "expected an MDS code, size {} is below bound {}",
            report.size, report.bound
        );
        ok = false;
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_graph(
    order: usize,
    size: usize,
    min_girth: u8,
    output: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let graph = if min_girth == 3 {
        eulerian_girth3(order, size)?
    } else {
        eulerian_girth4(order, size)?
    };
    println!("order: {}", graph.order());
    println!("size: {}", graph.size());
    println!(
        "girth: {}",
        graph.girth().expect("eulerian graphs have cycles")
    );
    match output {
        Some(path) => {
            write_graph(&path, &graph)?;
            println!("wrote {}", path.display());
        }
        None => {
            let edges: Vec<String> = graph.edges().map(|(u, v)| format!("{u}-{v}")).collect();
            println!("edges: {}", edges.join(" "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_trail(file: &PathBuf) -> Result<ExitCode, Error> {
    let graph = read_graph(file)?;
    let trail = graph.eulerian_trail()?;
    let stops: Vec<String> = trail.iter().map(|v| v.to_string()).collect();
    println!("{}", stops.join(" "));
    Ok(ExitCode::SUCCESS)
}

fn cmd_table2(budget: Option<u128>, out_dir: Option<PathBuf>) -> Result<ExitCode, Error> {
    let budget = budget.unwrap_or(CATALOG_BUDGET);
    let entries = run_catalog(budget)?;
    println!(
        "{:>3} {:>2} {:>3}  {:<22} {:>6}  route",
        "n", "d", "q", "status", "size"
    );
    let mut all_verified = true;
    for entry in &entries {
        println!(
            "{:>3} {:>2} {:>3}  {:<22} {:>6}  {}",
            entry.n,
            entry.d,
            entry.q,
            entry.status.to_string(),
            entry
                .size
                .map(|s| s.to_string())
                .unwrap_or_else(|| "-".into()),
            entry.route
        );
        all_verified &= entry.status == Status::ConstructedVerified && entry_is_mds(entry);
    }
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(&dir)?;
        for &(n, d, q) in CATALOG_INSTANCES.iter() {
            if let Ok(built) = construct_with_budget(n, d, q, 0) {
                write_code(dir.join(format!("n{n}d{d}q{q}.json")), &built.code)?;
            }
        }
        println!("wrote code files to {}", dir.display());
    }
    Ok(if all_verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_search(
    n: usize,
    d: usize,
    q: u16,
    target: Option<usize>,
    output: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let outcome = max_code_size(n, d, q, target)?;
    if outcome.reached_target {
        println!("maximum: at least {} (stopped at target)", outcome.maximum);
    } else {
        println!("maximum: {}", outcome.maximum);
    }
    println!("bound: {}", singleton_bound(n, d, q)?);
    if let Some(path) = output {
        let code = Code::new(Alphabet::ring(q)?, n, outcome.witness, Some(d))?;
        write_code(&path, &code)?;
        println!("wrote {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_dist(left: &str, right: &str) -> Result<ExitCode, Error> {
    let parse = |s: &str| -> Result<Vec<u16>, Error> {
        s.split(',')
            .map(|part| {
                part.trim().parse::<u16>().map_err(|_| {
                    Error::InvalidParameter(format!("bad symbol {part:?} in word {s:?}"))
                })
            })
            .collect()
    };
    let (u, v) = (parse(left)?, parse(right)?);
    let q = u.iter().chain(v.iter()).copied().max().unwrap_or(0).max(1) + 1;
    let alphabet = Alphabet::ring(q)?;
    let u = Word::new(alphabet.clone(), u)?;
    let v = Word::new(alphabet, v)?;
    println!("pair distance: {}", u.pair_distance(&v)?);
    println!("hamming distance: {}", u.hamming_distance(&v)?);
    Ok(ExitCode::SUCCESS)
}
