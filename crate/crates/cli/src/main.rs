use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use slh::instances::{flower_snark, generalized_petersen, random_cubic, relabel_random, sheehan};
use slh::io::{
    parse_edge_list, parse_tsplib_hcp, read_tour, read_trace, write_tour, write_trace,
    write_tsplib_hcp,
};
use slh::oracle::enumerate_hamiltonian_cycles;
use slh::render::{render_frames, trace_frames};
use slh::solver::SolveResult;
use slh::{solve, verify_hamiltonian_cycle, Graph, SolverConfig, Verdict, Vertex};

const EXIT_FOUND: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_LIKELY_NON: u8 = 2;
const EXIT_CERTIFIED_NON: u8 = 3;

#[derive(Parser)]
#[command(
    name = "slh",
    version,
    about = "Snakes-and-ladders search for Hamiltonian cycles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// Guess from the first token: a number means an edge list.
    Auto,
    Tsplib,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Gp,
    Flower,
    Sheehan,
    Cubic,
}

#[derive(Subcommand)]
enum Command {
    /// Search for a Hamiltonian cycle.
    Solve {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Auto)]
        format: Format,
        /// `identity` or a TSPLIB tour file giving the starting arrangement.
        #[arg(long, default_value = "identity")]
        initial: String,
        /// Ordering list cap is n^budget_exp.
        #[arg(long, default_value_t = 3)]
        budget_exp: u32,
        /// Generator application cap, n^4 when omitted.
        #[arg(long)]
        generator_cap: Option<u64>,
        /// Write the move trace as JSON lines.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Write the cycle as a TSPLIB tour when one is found.
        #[arg(long)]
        tour_out: Option<PathBuf>,
    },
    /// Write a test instance in TSPLIB HCP format.
    Generate {
        #[arg(value_enum)]
        family: Family,
        /// Size parameter: GP outer cycle length, snark index, Sheehan or cubic vertex count.
        #[arg(long)]
        n: usize,
        /// Step of the generalized Petersen graph.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Seed for random cubic graphs.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Relabel the vertices with a random permutation from this seed.
        #[arg(long)]
        scramble_seed: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that a tour is a Hamiltonian cycle of a graph.
    Verify {
        graph: PathBuf,
        tour: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Auto)]
        format: Format,
    },
    /// Count Hamiltonian cycles by exhaustive search.
    Count {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Auto)]
        format: Format,
        /// Also print up to this many cycles.
        #[arg(long, default_value_t = 0)]
        limit: usize,
        #[arg(long, default_value_t = 100_000_000)]
        node_budget: u64,
    },
    /// Solve every instance of a manifest and print one CSV row each.
    Bench {
        /// CSV with columns `instance,path`; relative paths resolve against the manifest.
        manifest: PathBuf,
        #[arg(long, default_value_t = 3)]
        budget_exp: u32,
        /// Directory for the tours of solved instances.
        #[arg(long)]
        tour_dir: Option<PathBuf>,
        /// Leave the seconds column empty so the output is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Draw the orderings visited by a trace as SVG.
    Render {
        graph: PathBuf,
        trace: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Auto)]
        format: Format,
        #[arg(long, default_value = "identity")]
        initial: String,
        #[arg(long, default_value_t = 4)]
        columns: usize,
        #[arg(long, default_value_t = 64)]
        max_frames: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path, format: Format) -> Result<Graph> {
    let text = read_text(path)?;
    let edgelist = match format {
        Format::Tsplib => false,
        Format::Edgelist => true,
        Format::Auto => text
            .split_whitespace()
            .next()
            .is_some_and(|t| t.bytes().all(|b| b.is_ascii_digit())),
    };
    let g = if edgelist {
        parse_edge_list(&text)
    } else {
        parse_tsplib_hcp(&text)
    };
    g.with_context(|| format!("parsing {}", path.display()))
}

fn load_initial(initial: &str, n: usize) -> Result<Option<Vec<Vertex>>> {
    if initial == "identity" {
        return Ok(None);
    }
    let tour =
        read_tour(&read_text(Path::new(initial))?).with_context(|| format!("parsing {initial}"))?;
    if tour.len() != n {
        bail!("initial tour has {} vertices, graph has {n}", tour.len());
    }
    Ok(Some(tour.into_vec()))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn exit_for(v: &Verdict) -> u8 {
    match v {
        Verdict::HamiltonianCycle { .. } => EXIT_FOUND,
        Verdict::LikelyNonHamiltonian => EXIT_LIKELY_NON,
        Verdict::CertifiedNonHamiltonian { .. } => EXIT_CERTIFIED_NON,
    }
}

fn print_summary(r: &SolveResult) {
    let s = &r.stats;
    println!("verdict: {}", r.verdict.label());
    if let Verdict::CertifiedNonHamiltonian { reason } = &r.verdict {
        println!("reason: {reason}");
    }
    println!("vertices: {}", s.n);
    println!("stage: {}", s.stage_reached);
    println!("gaps: {}", s.gap_count);
    println!("best gaps: {}", s.best_gap_count);
    println!("orderings explored: {}", s.orderings_explored);
    println!("orderings listed (peak): {}", s.peak_orderings_listed);
    println!("ordering cap: {}", s.ordering_cap);
    println!("generators applied: {}", s.generator_applications);
    println!("reentries: {}", s.reentries);
    println!("stop: {:?}", s.stop);
    if s.budget_exhausted {
        println!("budget exhausted: yes");
    }
}

fn cmd_solve(
    path: &Path,
    format: Format,
    initial: &str,
    budget_exp: u32,
    generator_cap: Option<u64>,
    trace: Option<&Path>,
    tour_out: Option<&Path>,
) -> Result<u8> {
    let g = load_graph(path, format)?;
    let init = load_initial(initial, g.vertex_count())?;
    let config = SolverConfig {
        budget_exponent: budget_exp,
        generator_cap,
        record_trace: trace.is_some(),
        ..SolverConfig::default()
    };
    let r = solve(&g, &config, init.as_deref())?;
    print_summary(&r);
    eprintln!("elapsed: {:.3}s", r.stats.elapsed.as_secs_f64());
    if let Some(p) = trace {
        write_output(Some(p), &write_trace(&r.trace))?;
    }
    if let (Some(p), Some(c)) = (tour_out, r.verdict.cycle()) {
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("tour");
        write_output(Some(p), &write_tour(c, &format!("{name}.tour")))?;
    }
    Ok(exit_for(&r.verdict))
}

fn cmd_generate(
    family: Family,
    n: usize,
    k: usize,
    seed: u64,
    scramble: Option<u64>,
    output: Option<&Path>,
) -> Result<u8> {
    let (g, name, comment) = match family {
        Family::Gp => (
            generalized_petersen(n, k)?,
            format!("gp_{n}_{k}"),
            format!("generalized Petersen graph GP({n},{k})"),
        ),
        Family::Flower => (
            flower_snark(n)?,
            format!("flower_{n}"),
            format!("flower snark J{n}"),
        ),
        Family::Sheehan => (
            sheehan(n)?,
            format!("sheehan_{n}"),
            format!("graph on {n} vertices with a unique Hamiltonian cycle"),
        ),
        Family::Cubic => (
            random_cubic(n, seed)?,
            format!("cubic_{n}_s{seed}"),
            format!("random cubic graph, seed {seed}"),
        ),
    };
    let (g, name, comment) = match scramble {
        Some(s) => (
            relabel_random(&g, s).0,
            format!("{name}_r{s}"),
            format!("{comment}, relabeled with seed {s}"),
        ),
        None => (g, name, comment),
    };
    write_output(output, &write_tsplib_hcp(&g, &name, Some(&comment)))?;
    Ok(EXIT_FOUND)
}

fn cmd_verify(graph: &Path, tour: &Path, format: Format) -> Result<u8> {
    let g = load_graph(graph, format)?;
    let c = read_tour(&read_text(tour)?).with_context(|| format!("parsing {}", tour.display()))?;
    if verify_hamiltonian_cycle(&g, c.as_slice()) {
        println!("valid");
        Ok(EXIT_FOUND)
    } else {
        println!("invalid");
        Ok(EXIT_LIKELY_NON)
    }
}

fn cmd_count(graph: &Path, format: Format, limit: usize, node_budget: u64) -> Result<u8> {
    let g = load_graph(graph, format)?;
    let r = enumerate_hamiltonian_cycles(&g, limit, node_budget);
    match r.count {
        Some(c) => println!("{c}"),
        None => println!("unknown (node budget of {node_budget} exhausted)"),
    }
    for c in &r.cycles {
        let labels: Vec<String> = c.as_slice().iter().map(|v| (v + 1).to_string()).collect();
        println!("{}", labels.join(" "));
    }
    Ok(if r.completed {
        EXIT_FOUND
    } else {
        EXIT_LIKELY_NON
    })
}

#[derive(serde::Deserialize)]
struct ManifestRow {
    instance: String,
    path: PathBuf,
}

#[derive(serde::Serialize)]
struct BenchRow {
    instance: String,
    verdict: &'static str,
    stage: u8,
    gaps: usize,
    orderings: u64,
    generators: u64,
    seconds: Option<String>,
}

fn cmd_bench(
    manifest: &Path,
    budget_exp: u32,
    tour_dir: Option<&Path>,
    no_timing: bool,
) -> Result<u8> {
    let base = manifest.parent().unwrap_or(Path::new("."));
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_path(manifest)
        .with_context(|| format!("reading {}", manifest.display()))?;
    let rows: Vec<ManifestRow> = rdr
        .deserialize()
        .collect::<Result<_, _>>()
        .context("malformed manifest")?;
    if let Some(d) = tour_dir {
        fs::create_dir_all(d).with_context(|| format!("creating {}", d.display()))?;
    }
    let config = SolverConfig {
        budget_exponent: budget_exp,
        record_trace: false,
        ..SolverConfig::default()
    };
    let mut out = csv::Writer::from_writer(std::io::stdout());
    for row in rows {
        let path = base.join(&row.path);
        let g = load_graph(&path, Format::Auto)?;
        let t = Instant::now();
        let r = solve(&g, &config, None)?;
        let secs = t.elapsed().as_secs_f64();
        if let (Some(d), Some(c)) = (tour_dir, r.verdict.cycle()) {
            let p = d.join(format!("{}.tour", row.instance));
            write_output(Some(&p), &write_tour(c, &format!("{}.tour", row.instance)))?;
        }
        out.serialize(BenchRow {
            instance: row.instance,
            verdict: r.verdict.label(),
            stage: r.stats.stage_reached,
            gaps: r.stats.gap_count,
            orderings: r.stats.orderings_explored,
            generators: r.stats.generator_applications,
            seconds: (!no_timing).then(|| format!("{secs:.3}")),
        })?;
        out.flush()?;
    }
    Ok(EXIT_FOUND)
}

fn cmd_render(
    graph: &Path,
    trace: &Path,
    format: Format,
    initial: &str,
    columns: usize,
    max_frames: usize,
    output: &Path,
) -> Result<u8> {
    let g = load_graph(graph, format)?;
    let n = g.vertex_count();
    let init = load_initial(initial, n)?.unwrap_or_else(|| (0..n).collect());
    let events =
        read_trace(&read_text(trace)?).with_context(|| format!("parsing {}", trace.display()))?;
    let frames = trace_frames(&g, &init, &events, max_frames)?;
    write_output(Some(output), &render_frames(&g, &frames, columns)?)?;
    Ok(EXIT_FOUND)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Solve {
            path,
            format,
            initial,
            budget_exp,
            generator_cap,
            trace,
            tour_out,
        } => cmd_solve(
            &path,
            format,
            &initial,
            budget_exp,
            generator_cap,
            trace.as_deref(),
            tour_out.as_deref(),
        ),
        Command::Generate {
            family,
            n,
            k,
            seed,
            scramble_seed,
            output,
        } => cmd_generate(family, n, k, seed, scramble_seed, output.as_deref()),
        Command::Verify {
            graph,
            tour,
            format,
        } => cmd_verify(&graph, &tour, format),
        Command::Count {
            graph,
            format,
            limit,
            node_budget,
        } => cmd_count(&graph, format, limit, node_budget),
        Command::Bench {
            manifest,
            budget_exp,
            tour_dir,
            no_timing,
        } => cmd_bench(&manifest, budget_exp, tour_dir.as_deref(), no_timing),
        Command::Render {
            graph,
            trace,
            format,
            initial,
            columns,
            max_frames,
            output,
        } => cmd_render(
            &graph, &trace, format, &initial, columns, max_frames, &output,
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
