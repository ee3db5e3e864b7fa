use std::fmt::Display;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use genpos::audit::{run_audit, write_jsonl, AuditOptions, TheoremId, Verdict};
use genpos::cactus::{bound_report, cactus_profile};
use genpos::families::{Family, FamilySpec};
use genpos::solver::{gp_number_exact_with, ExactOptions};
use genpos::{Error, Graph};

const EXIT_TIMEOUT: i32 = 2;
const EXIT_COUNTEREXAMPLE: i32 = 3;

/// Exact general position numbers of graphs, with structural analysis of
/// cacti and wheels and a claim-audit harness.
#[derive(Parser)]
#[command(name = "genpos", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the gp number of an edge-list graph.
    Gp {
        /// Edge-list file: first meaningful line is the vertex count,
        /// then one "u v" pair per line; '#' starts a comment.
        #[arg(
            long,
            value_name = "FILE",
            conflicts_with = "stdin",
            required_unless_present = "stdin"
        )]
        input: Option<PathBuf>,
        /// Read the edge list from standard input instead.
        #[arg(long)]
        stdin: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Give up with exit code 2 after this many seconds.
        #[arg(long, value_name = "SECS")]
        timeout: Option<u64>,
    },
    /// Profile a cactus: cycles, pendant trees, and gp bounds.
    Classify {
        #[arg(
            long,
            value_name = "FILE",
            conflicts_with = "stdin",
            required_unless_present = "stdin"
        )]
        input: Option<PathBuf>,
        /// Read the edge list from standard input instead.
        #[arg(long)]
        stdin: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Emit a family graph as an edge list.
    Generate {
        /// One of: path, cycle, star, random-tree, wheel, b0, bouquet,
        /// chain-cactus, random-cactus.
        #[arg(long)]
        family: String,
        /// Comma-separated integers; see the family docs for the layout.
        #[arg(long, value_delimiter = ',', required = true)]
        params: Vec<usize>,
        /// Seed for the random families.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Audit a structural claim over an instance sweep; emits one JSON
    /// record per line and exits 3 if any instance is a counterexample.
    Audit {
        /// Claim id; pass an unknown id to get the list.
        #[arg(long)]
        theorem: String,
        /// Instances to sweep (random sweeps only).
        #[arg(long)]
        count: Option<usize>,
        /// Largest graph order the sweep may draw.
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Select all-good instances by the strict reading (good and not
        /// bad) instead of the inclusive good flag.
        #[arg(long = "strict-good-flag")]
        strict_good_flag: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = match cli.command {
        Command::Gp {
            input,
            stdin,
            format,
            timeout,
        } => cmd_gp(input, stdin, format, timeout),
        Command::Classify {
            input,
            stdin,
            format,
        } => cmd_classify(input, stdin, format),
        Command::Generate {
            family,
            params,
            seed,
        } => cmd_generate(&family, params, seed),
        Command::Audit {
            theorem,
            count,
            max_n,
            seed,
            strict_good_flag,
        } => cmd_audit(&theorem, count, max_n, seed, strict_good_flag),
    };
    std::process::exit(code);
}

fn fail(msg: impl Display) -> i32 {
    eprintln!("error: {msg}");
    1
}

fn read_graph(input: Option<PathBuf>, use_stdin: bool) -> Result<Graph, String> {
    let text = if use_stdin {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        buf
    } else {
        let path = input.expect("clap requires --input without --stdin");
        fs::read_to_string(&path).map_err(|e| format!("reading {}: {e}", path.display()))?
    };
    let g = Graph::parse_edge_list(&text).map_err(|e| e.to_string())?;
    if !g.is_connected() {
        return Err("graph must be connected".to_string());
    }
    Ok(g)
}

fn cmd_gp(
    input: Option<PathBuf>,
    use_stdin: bool,
    format: OutputFormat,
    timeout: Option<u64>,
) -> i32 {
    let g = match read_graph(input, use_stdin) {
        Ok(g) => g,
        Err(msg) => return fail(msg),
    };
    let opts = ExactOptions {
        deadline: timeout.map(|s| Instant::now() + Duration::from_secs(s)),
        ..Default::default()
    };
    let cert = match gp_number_exact_with(&g, &opts) {
        Ok(cert) => cert,
        Err(Error::Timeout) => {
            eprintln!("error: solver exceeded the time limit");
            return EXIT_TIMEOUT;
        }
        Err(e) => return fail(e),
    };
    match format {
        OutputFormat::Json => {
            let value = serde_json::json!({
                "n": g.vertex_count(),
                "m": g.edge_count(),
                "gp": cert.value,
                "witness": cert.witness.as_vec(),
                "method": cert.method.to_string(),
            });
            println!("{value}");
        }
        OutputFormat::Text => {
            println!("gp = {}", cert.value);
            println!("witness = {}", cert.witness);
            println!("method = {}", cert.method);
        }
    }
    0
}

fn cmd_classify(input: Option<PathBuf>, use_stdin: bool, format: OutputFormat) -> i32 {
    let g = match read_graph(input, use_stdin) {
        Ok(g) => g,
        Err(msg) => return fail(msg),
    };
    let profile = match cactus_profile(&g) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let bounds = bound_report(&profile);
    match format {
        OutputFormat::Json => {
            let mut value = serde_json::to_value(&profile).expect("profile serializes");
            value["bounds"] = serde_json::to_value(&bounds).expect("bounds serialize");
            println!("{value}");
        }
        OutputFormat::Text => {
            println!(
                "order {}, cycles {} ({} odd), pendant edges {}, chain: {}",
                profile.n,
                profile.k,
                profile.k1_odd,
                profile.t,
                if profile.is_chain { "yes" } else { "no" }
            );
            for c in &profile.cycles {
                let mut line = format!("cycle {:?}: length {}", c.vertices, c.length);
                if let Some(d) = c.d_c_min {
                    line.push_str(&format!(", D_c {d}"));
                }
                if c.is_end_block {
                    line.push_str(", end-block");
                }
                if c.is_good {
                    line.push_str(", good");
                }
                if c.is_bad {
                    line.push_str(", bad");
                }
                println!("{line}");
            }
            for t in &profile.pendant_trees {
                println!("pendant tree at {}: {}", t.root, t.vertices);
            }
            println!(
                "bounds: gp >= {}, gp <= {}, gp <= {}",
                bounds.lower_t.value, bounds.upper_2k_t.value, bounds.upper_n_minus_1.value
            );
            if let Some(lower) = bounds.lower_no_pendant {
                println!("pendant-free lower bound: gp >= {}", lower.value);
            }
            if let Some(exact) = bounds.predicted_exact {
                println!("predicted exact: {} ({})", exact.value, exact.source);
            }
        }
    }
    0
}

fn cmd_generate(family: &str, params: Vec<usize>, seed: Option<u64>) -> i32 {
    let Some(family) = Family::from_name(family) else {
        return fail(format!(
            "unknown family `{family}`; expected one of path, cycle, star, \
             random-tree, wheel, b0, bouquet, chain-cactus, random-cactus"
        ));
    };
    match FamilySpec::new(family, params, seed).generate() {
        Ok(g) => {
            print!("{}", g.to_edge_list());
            0
        }
        Err(e) => fail(e),
    }
}

fn cmd_audit(
    theorem: &str,
    count: Option<usize>,
    max_n: Option<usize>,
    seed: u64,
    strict_good_flag: bool,
) -> i32 {
    let Some(theorem) = TheoremId::from_name(theorem) else {
        let known: Vec<&str> = TheoremId::ALL.iter().map(|t| t.name()).collect();
        return fail(format!(
            "unknown theorem `{theorem}`; expected one of {}",
            known.join(", ")
        ));
    };
    let (default_count, default_max_n) = theorem.default_budget();
    let opts = AuditOptions {
        strict_good: strict_good_flag,
        ..Default::default()
    };
    let records = run_audit(
        theorem,
        seed,
        count.unwrap_or(default_count),
        max_n.unwrap_or(default_max_n),
        &opts,
    );
    let stdout = io::stdout();
    if let Err(e) = write_jsonl(&records, stdout.lock()) {
        return fail(e);
    }
    let mut tally = [0usize; 4];
    for rec in &records {
        let slot = match rec.verdict {
            Verdict::Confirmed => 0,
            Verdict::Counterexample => 1,
            Verdict::Ambiguous => 2,
            Verdict::Skipped(_) => 3,
        };
        tally[slot] += 1;
    }
    let _ = writeln!(
        io::stderr(),
        "{}: {} records | confirmed {} | counterexamples {} | ambiguous {} | skipped {}",
        theorem.name(),
        records.len(),
        tally[0],
        tally[1],
        tally[2],
        tally[3]
    );
    if tally[1] > 0 {
        EXIT_COUNTEREXAMPLE
    } else {
        0
    }
}
