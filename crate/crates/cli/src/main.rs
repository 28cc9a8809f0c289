//! `golfnet`: generate, measure and certify low-diameter graphs.
//!
//! Exit codes: 0 success, 1 a verification or certification failed,
//! 2 bad usage or unreadable input.

mod families;
mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use golfnet::bounds::{construction_lower_bounds, moore_ratio, percent, KnownOptimum};
use golfnet::edgelist::{emit_edge_list, parse_edge_list};
use golfnet::planner::{best_order, plan, realize_and_certify};
use golfnet::{BigCount, Graph};

use families::{generate, DupOptions};

#[derive(Parser)]
#[command(
    name = "golfnet",
    version,
    about = "Degree-diameter graph constructions and metrics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write its edge list.
    ///
    /// Families: petersen | hypercube N | torus M N | debruijn T N |
    /// complete N | cycle N | g8 | brown-f Q | brown-z N | kg8 N |
    /// kkg8 A B | dup <base family...> --delta D [--target T] [--clique]
    Gen {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = false)]
        family: Vec<String>,
        /// Write the edge list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// dup: vertex to duplicate (default: lowest-id vertex of minimum degree).
        #[arg(long)]
        target: Option<usize>,
        /// dup: number of copies to add.
        #[arg(long)]
        delta: Option<usize>,
        /// dup: also join the copies to each other and to the target.
        #[arg(long)]
        clique: bool,
    },
    /// Report metrics and bounds for an edge-list file.
    Analyze {
        file: PathBuf,
        /// Emit the CSV header and one data row.
        #[arg(long)]
        csv: bool,
        /// Name cell for the CSV row (default: the file name).
        #[arg(long)]
        name: Option<String>,
        /// Order override for files with isolated trailing vertices.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Check an edge list against order, degree and diameter limits.
    ///
    /// Reads stdin when FILE is omitted or `-`.
    Verify {
        file: Option<PathBuf>,
        /// Required order.
        #[arg(long)]
        order: usize,
        /// Maximum allowed degree.
        #[arg(long)]
        degree: usize,
        /// Maximum allowed diameter.
        #[arg(long)]
        diameter: u32,
        /// Also require every vertex to have degree exactly --degree.
        #[arg(long)]
        regular: bool,
    },
    /// Print the Moore bound and construction lower bounds.
    Bounds {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        diameter: u32,
    },
    /// Rank diameter-2 constructions for an order and degree budget.
    Search {
        #[arg(long)]
        order: u64,
        #[arg(long)]
        degree: u64,
        /// Build the top plan, certify it and write its edge list.
        #[arg(long)]
        realize: bool,
        /// Destination for --realize (default: stdout, with plans on stderr).
        #[arg(long, requires = "realize")]
        out: Option<PathBuf>,
    },
    /// CSV of the best planner-reachable order per degree.
    Table {
        #[arg(long)]
        diameter: u32,
        #[arg(long = "max-degree")]
        max_degree: u64,
    },
}

enum Failure {
    /// A check ran and did not hold.
    Rejected,
    Usage(String),
}

impl From<golfnet::Error> for Failure {
    fn from(e: golfnet::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => {
            fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
        }
    }
}

fn read_stdin() -> Result<String, Failure> {
    let mut text = String::new();
    io::stdin().read_to_string(&mut text)?;
    Ok(text)
}

fn write_output(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            io::stdout().lock().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn show<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_else(|| "inf".into())
}

fn gen(family: &[String], out: Option<&Path>, dup: DupOptions) -> Outcome {
    let generated = generate(family, &dup)?;
    write_output(out, &emit_edge_list(&generated.graph))?;
    let p = &generated.predicted;
    let m = generated.graph.metrics();
    let bound = if p.exact { "=" } else { "<=" };
    eprintln!("family: {}", generated.label);
    eprintln!(
        "predicted: order={} max_degree{bound}{} diameter{bound}{}",
        p.order,
        p.max_degree,
        p.diameter
            .map(|d| d.to_string())
            .unwrap_or_else(|| "?".into())
    );
    eprintln!(
        "measured: order={} max_degree={} diameter={}",
        m.order,
        m.max_degree,
        show(m.diameter)
    );
    Ok(())
}

fn analyze(file: &Path, csv: bool, name: Option<String>, order: Option<usize>) -> Outcome {
    let graph = parse_edge_list(&read_input(Some(file))?, order)?;
    let analysis = report::analyze(&graph);
    if csv {
        let name = name.unwrap_or_else(|| {
            file.file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default()
        });
        println!("{}", report::CSV_HEADER);
        println!("{}", analysis.csv_row(&name));
    } else {
        print!("{}", analysis.text());
    }
    Ok(())
}

fn check(label: &str, ok: bool, detail: String) -> bool {
    println!("{} {label}: {detail}", if ok { "ok  " } else { "FAIL" });
    ok
}

fn verify(g: &Graph, order: usize, degree: usize, diameter: u32, regular: bool) -> Outcome {
    let stats = g.degree_stats();
    let measured = g.metrics().diameter;
    let mut pass = check(
        "order",
        g.order() == order,
        format!("{} (required {order})", g.order()),
    );
    pass &= check(
        "max_degree",
        stats.max <= degree,
        format!("{} (limit {degree})", stats.max),
    );
    if regular {
        pass &= check(
            "regular",
            stats.is_regular && stats.min == degree,
            format!("degrees {}..={} (required {degree})", stats.min, stats.max),
        );
    }
    pass &= check(
        "diameter",
        measured.is_some_and(|d| d <= diameter),
        format!("{} (limit {diameter})", show(measured)),
    );
    if pass {
        println!("PASS");
        Ok(())
    } else {
        println!("FAIL");
        Err(Failure::Rejected)
    }
}

fn bounds(degree: u32, diameter: u32) -> Outcome {
    let report = construction_lower_bounds::<BigCount>(degree, diameter)?;
    print!("{report}");
    if let KnownOptimum::Exact(n) = report.known_optimum {
        let r = moore_ratio::<BigCount>(n, degree, diameter)?;
        println!("known_optimum_moore_ratio: {}%", percent(&r));
    }
    Ok(())
}

fn search(order: u64, degree: u64, realize: bool, out: Option<&Path>) -> Outcome {
    let plans = plan(order, degree)?;
    // keep stdout clean for the edge list
    let to_stderr = realize && out.is_none();
    let say = |line: String| {
        if to_stderr {
            eprintln!("{line}");
        } else {
            println!("{line}");
        }
    };
    if plans.is_empty() {
        say(format!(
            "no diameter-2 construction with order {order} and degree <= {degree}"
        ));
        return Err(Failure::Rejected);
    }
    for (rank, p) in plans.iter().enumerate() {
        say(format!("{}. {p}", rank + 1));
    }
    if !realize {
        return Ok(());
    }
    let cert = realize_and_certify(&plans[0])?;
    let m = &cert.metrics;
    say(format!(
        "certificate: {} order={} max_degree={} diameter={} {}",
        cert.plan.family,
        m.order,
        m.max_degree,
        show(m.diameter),
        if cert.verdict.pass() { "PASS" } else { "FAIL" }
    ));
    if !cert.verdict.pass() {
        return Err(Failure::Rejected);
    }
    write_output(out, &emit_edge_list(&cert.graph))
}

fn table(diameter: u32, max_degree: u64) -> Outcome {
    if diameter != 2 {
        return Err(Failure::Usage("table supports --diameter 2 only".into()));
    }
    println!("degree,order,family,moore_bound,moore_ratio_pct");
    for delta in 2..=max_degree {
        let Some(best) = best_order(delta)? else {
            continue;
        };
        let moore = delta * delta + 1;
        let ratio = moore_ratio::<u64>(best.predicted_order, delta as u32, 2)?;
        println!(
            "{delta},{},{},{moore},{}",
            best.predicted_order,
            best.family,
            percent(&ratio)
        );
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen {
            family,
            out,
            target,
            delta,
            clique,
        } => gen(
            &family,
            out.as_deref(),
            DupOptions {
                target,
                copies: delta,
                clique,
            },
        ),
        Command::Analyze {
            file,
            csv,
            name,
            order,
        } => analyze(&file, csv, name, order),
        Command::Verify {
            file,
            order,
            degree,
            diameter,
            regular,
        } => {
            let g = parse_edge_list(&read_input(file.as_deref())?, None)?;
            verify(&g, order, degree, diameter, regular)
        }
        Command::Bounds { degree, diameter } => bounds(degree, diameter),
        Command::Search {
            order,
            degree,
            realize,
            out,
        } => search(order, degree, realize, out.as_deref()),
        Command::Table {
            diameter,
            max_degree,
        } => table(diameter, max_degree),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("golfnet: {msg}");
            ExitCode::from(2)
        }
    }
}
