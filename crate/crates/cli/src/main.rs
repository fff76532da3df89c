mod output;

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pathchain::verify;
use pathchain::{
    gen_family, homology_report, inductive_generators, parse_digraph, random_digraph, serialize, Digraph, Direction,
    Family, Ring, DEFAULT_MUTATION_CAP,
};

#[derive(Parser)]
#[command(name = "pathchain", version, about = "Path chain modules and path homology of digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Csv,
}

/// Where the digraph comes from: a file, a named family, or a random draw.
#[derive(clap::Args)]
struct Source {
    /// Edge-list file (`-` for standard input).
    #[arg(long)]
    input: Option<String>,
    /// Named family: trapezohedron, multiplicity, euler, multisquare-chain.
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
    /// Family parameter.
    #[arg(long, requires = "family")]
    t: Option<usize>,
    /// Number of vertices of a random digraph.
    #[arg(long, conflicts_with_all = ["input", "family"])]
    random: Option<usize>,
    /// Edge probability `a/b` for `--random`.
    #[arg(long, default_value = "2/5")]
    edge_prob: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Omega dimensions, Betti numbers, torsion and Euler characteristic.
    Compute {
        #[command(flatten)]
        source: Source,
        /// Coefficients: q, z or zp:<prime>.
        #[arg(long, default_value = "q")]
        ring: String,
        /// Highest dimension (default: longest path).
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
        /// Include boundary matrices and their bases.
        #[arg(long)]
        with_boundaries: bool,
    },
    /// Print a digraph as an edge list.
    Gen {
        #[command(flatten)]
        source: Source,
    },
    /// Inductive generating set of one dimension, with structures.
    Inductive {
        #[command(flatten)]
        source: Source,
        /// Coefficients: q, z or zp:<prime>.
        #[arg(long, default_value = "z")]
        ring: String,
        #[arg(long)]
        dim: usize,
        /// upper or lower extensions.
        #[arg(long, default_value = "upper")]
        direction: String,
        #[arg(long, default_value_t = DEFAULT_MUTATION_CAP)]
        mutation_cap: usize,
    },
    /// Run the reproduction suite.
    Verify {
        #[arg(long, default_value = "paper")]
        suite: String,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
}

enum Failure {
    Usage(String),
    Input(String),
    Resource(String),
    Checks,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Resource(_) => 3,
            Failure::Checks => 1,
        }
    }
}

fn parse_ring(spec: &str) -> Result<Ring, Failure> {
    spec.parse().map_err(|e| Failure::Usage(format!("{e}")))
}

fn parse_prob(spec: &str) -> Result<(u64, u64), Failure> {
    let bad = || Failure::Usage(format!("edge probability `{spec}` should look like a/b with 0 <= a <= b, b > 0"));
    let (a, b) = spec.split_once('/').ok_or_else(bad)?;
    let (a, b): (u64, u64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if b == 0 || a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn load(source: &Source) -> Result<(Digraph, Option<String>), Failure> {
    if let Some(path) = &source.input {
        let text = if path == "-" {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("standard input: {e}")))?;
            s
        } else {
            fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?
        };
        let g = parse_digraph(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
        return Ok((g, None));
    }
    if let Some(name) = &source.family {
        let family: Family = name.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
        let t = source.t.ok_or_else(|| Failure::Usage("--family needs --t".into()))?;
        let g = gen_family(family, t).map_err(|e| Failure::Usage(format!("{e}")))?;
        return Ok((g, Some(format!("{family} t={t}"))));
    }
    if let Some(n) = source.random {
        let (a, b) = parse_prob(&source.edge_prob)?;
        let g = random_digraph(n, a, b, source.seed);
        return Ok((g, Some(format!("random n={n} p={a}/{b} seed={}", source.seed))));
    }
    Err(Failure::Usage("give one of --input, --family or --random".into()))
}

/// Write to standard output; a closed pipe is not an error.
fn write_out(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(v: &Value) {
    write_out(&format!("{}\n", serde_json::to_string_pretty(v).expect("JSON values serialize")));
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compute { source, ring, max_dim, emit, with_boundaries } => {
            let ring = parse_ring(&ring)?;
            let (g, _) = load(&source)?;
            let report = homology_report(&g, max_dim, ring).map_err(|e| Failure::Input(format!("{e}")))?;
            match emit {
                Emit::Json => print_json(&output::report(&g, &report, with_boundaries)),
                Emit::Csv => write_out(&output::csv(&report)),
            }
        }
        Command::Gen { source } => {
            let (g, origin) = load(&source)?;
            if let Some(origin) = origin {
                write_out(&format!("# {origin}\n"));
            }
            write_out(&serialize(&g));
        }
        Command::Inductive { source, ring, dim, direction, mutation_cap } => {
            let ring = parse_ring(&ring)?;
            let direction: Direction = direction.parse().map_err(Failure::Usage)?;
            let (g, _) = load(&source)?;
            let report = homology_report(&g, Some(dim), ring).map_err(|e| Failure::Input(format!("{e}")))?;
            let set = inductive_generators(&g, dim, ring, direction, mutation_cap).map_err(|e| {
                let e = pathchain::Error::from(e);
                if e.is_resource_limit() {
                    Failure::Resource(format!("{e}"))
                } else {
                    Failure::Input(format!("{e}"))
                }
            })?;
            let mut v = output::report(&g, &report, false);
            v["generators"] = output::generators(&g, &set);
            print_json(&v);
        }
        Command::Verify { suite, emit } => {
            if suite != "paper" {
                return Err(Failure::Usage(format!("unknown suite `{suite}` (expected paper)")));
            }
            let results = verify::run_all();
            match emit {
                Some(Emit::Json) => {
                    let rows: Vec<Value> = results
                        .iter()
                        .map(|r| json!({ "id": r.id, "title": r.title, "expected": r.expected, "actual": r.actual, "passed": r.passed }))
                        .collect();
                    print_json(&Value::Array(rows));
                }
                Some(Emit::Csv) => {
                    let mut text = String::from("id,passed,title\n");
                    for r in &results {
                        text.push_str(&format!("{},{},\"{}\"\n", r.id, r.passed, r.title));
                    }
                    write_out(&text);
                }
                None => write_out(&results.iter().map(|r| format!("{r}\n")).collect::<String>()),
            }
            if results.iter().any(|r| !r.passed) {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Input(m) | Failure::Resource(m) => eprintln!("error: {m}"),
                Failure::Checks => eprintln!("error: some checks failed"),
            }
            ExitCode::from(f.code())
        }
    }
}
