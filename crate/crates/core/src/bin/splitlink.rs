//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage/domain/validation error, 2 negative
//! verdict or refutation, 3 search budget exhausted.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use splitlink::classes::{
    is_semicomplete, is_semicomplete_multipartite, is_semicomplete_split, is_tournament, split_partition,
    validate_partition,
};
use splitlink::connectivity::{disjoint_path_system, is_k_strong, local_connectivity_without, strong_connectivity};
use splitlink::constructive::{link_by_templates, link_with_certificate, Mode};
use splitlink::dot::export_dot;
use splitlink::generators::{random_instance, Family, GenError, GenSpec, DEFAULT_MAX_ATTEMPTS};
use splitlink::io::{parse, parse_paths, serialize};
use splitlink::linkage::{two_disjoint_paths, LinkageOutcome, LinkageQuery, LinkageWitness, DEFAULT_BUDGET};
use splitlink::verify::{
    explore, verify_paper_pins, verify_theorem, write_refutations, Exploration, QueryMode, SuiteConfig, TheoremId,
};
use splitlink::{Digraph, Error, SplitPartition, VertexId};

#[derive(Parser)]
#[command(name = "splitlink", version, about = "Disjoint-path linkage in split-like digraphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Report class membership and strong connectivity.
    Classify { file: PathBuf },
    /// Local connectivity between two vertices.
    Kappa {
        file: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Comma-separated vertices to delete first.
        #[arg(long, value_delimiter = ',')]
        delete: Vec<String>,
        /// Also print a maximum path system.
        #[arg(long)]
        paths: bool,
    },
    /// Whether the digraph is k-strong (exit 2 if not).
    Kstrong {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Disjoint (s1,t1)- and (s2,t2)-paths.
    Link2 {
        file: PathBuf,
        #[arg(long)]
        s1: String,
        #[arg(long)]
        t1: String,
        #[arg(long)]
        s2: String,
        #[arg(long)]
        t2: String,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        /// Premise set for template and certified methods.
        #[arg(long, value_enum, default_value_t = ModeArg::Split)]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Generate a random instance.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 4)]
        n1: usize,
        #[arg(long, default_value_t = 8)]
        n2: usize,
        /// Partite sets for random-smp (0 picks n/2).
        #[arg(long, default_value_t = 0)]
        parts: usize,
        #[arg(long, default_value_t = 0.5)]
        p_arc: f64,
        #[arg(long, default_value_t = 0.3)]
        p_bidir: f64,
        #[arg(long, default_value_t = 0)]
        k_strong: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_ATTEMPTS)]
        max_attempts: usize,
        /// Write the partition line for split families.
        #[arg(long)]
        with_partition: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a seeded theorem suite.
    Verify {
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// all, sampled(K) or K; defaults per theorem.
        #[arg(long)]
        query_mode: Option<QueryMode>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Directory for refutation artifacts.
        #[arg(long, default_value = "refutations")]
        artifacts: PathBuf,
    },
    /// Check the pinned facts about the 13-vertex counterexample.
    Pins,
    /// Graphviz output.
    ExportDot {
        file: PathBuf,
        /// One path per line, vertex names separated by spaces or `->`.
        #[arg(long)]
        highlight: Option<PathBuf>,
    },
    /// Open-ended searches with no predicted outcome.
    Explore {
        #[arg(long)]
        mode: Exploration,
        #[arg(long, default_value_t = 20)]
        instances: usize,
        #[arg(long, default_value_t = 100)]
        queries: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Directory for any non-linked quadruples found.
        #[arg(long)]
        artifacts: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Template,
    Certified,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Split,
    Scsplit,
    Smp,
    ScsplitWeak,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Split => Mode::Split,
            ModeArg::Scsplit => Mode::ScSplit,
            ModeArg::Smp => Mode::Smp,
            ModeArg::ScsplitWeak => Mode::ScSplitWeak,
        }
    }
}

/// A failed command: message for stderr and exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TheoremRefuted(_) => 2,
            Error::BudgetExceeded(_) => 3,
            _ => 1,
        };
        Fail(code, e.to_string())
    }
}

type CmdResult = Result<u8, Fail>;

fn read(path: &PathBuf) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| Fail(1, format!("{}: {e}", path.display())))
}

fn load(path: &PathBuf) -> Result<(Digraph, Option<SplitPartition>), Fail> {
    parse(&read(path)?).map_err(|e| Fail(1, format!("{}: {e}", path.display())))
}

fn vertex(d: &Digraph, name: &str) -> Result<VertexId, Fail> {
    d.vertex_by_name(name).ok_or_else(|| Fail(1, format!("unknown vertex `{name}`")))
}

fn print_witness(d: &Digraph, w: &LinkageWitness) {
    println!("linked");
    println!("P1: {}", w.p1.display(d));
    println!("P2: {}", w.p2.display(d));
    println!("provenance: {}", w.provenance);
}

fn classify(file: &PathBuf) -> CmdResult {
    let (d, given) = load(file)?;
    let names = |xs: &[VertexId]| xs.iter().map(|&x| d.name(x)).collect::<Vec<_>>().join(",");
    println!("order: {}", d.order());
    println!("arcs: {}", d.arc_count());
    let split = match &given {
        Some(p) => validate_partition(&d, p)?.then(|| p.clone()),
        None => split_partition(&d),
    };
    match &split {
        Some(p) => println!("split: yes (V1 = {{{}}})", names(p.v1())),
        None => println!("split: no"),
    }
    println!("semicomplete split: {}", yes_no(is_semicomplete_split(&d, split.as_ref())?));
    println!("semicomplete: {}", yes_no(is_semicomplete(&d)));
    println!("tournament: {}", yes_no(is_tournament(&d)));
    match is_semicomplete_multipartite(&d) {
        Some(parts) => println!("semicomplete multipartite: yes ({} parts)", parts.len()),
        None => println!("semicomplete multipartite: no"),
    }
    println!("strong connectivity: {}", strong_connectivity(&d));
    Ok(0)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cmd: Cmd) -> CmdResult {
    match cmd {
        Cmd::Classify { file } => classify(&file),
        Cmd::Kappa { file, from, to, delete, paths } => {
            let (d, _) = load(&file)?;
            let (x, y) = (vertex(&d, &from)?, vertex(&d, &to)?);
            let del = delete.iter().map(|n| vertex(&d, n)).collect::<Result<Vec<_>, _>>()?;
            let k = local_connectivity_without(&d, x, y, &del)?;
            println!("{k}");
            if paths && del.is_empty() {
                if let Some(sys) = disjoint_path_system(&d, x, y, k)? {
                    for p in &sys.paths {
                        println!("{}", p.display(&d));
                    }
                }
            }
            Ok(0)
        }
        Cmd::Kstrong { file, k } => {
            let (d, _) = load(&file)?;
            let ok = is_k_strong(&d, k);
            println!("{}", if ok { "yes" } else { "no" });
            Ok(if ok { 0 } else { 2 })
        }
        Cmd::Link2 { file, s1, t1, s2, t2, method, mode, budget } => {
            let (d, _) = load(&file)?;
            let q = LinkageQuery::new(vertex(&d, &s1)?, vertex(&d, &t1)?, vertex(&d, &s2)?, vertex(&d, &t2)?)?;
            q.check(&d)?;
            match method {
                Method::Exact => match two_disjoint_paths(&d, &q, budget)? {
                    LinkageOutcome::Linked(w) => print_witness(&d, &w),
                    LinkageOutcome::NotLinked => {
                        println!("not linked");
                        return Ok(2);
                    }
                    LinkageOutcome::BudgetExceeded => return Err(Error::BudgetExceeded(budget).into()),
                },
                Method::Template => match link_by_templates(&d, &q, mode.into())? {
                    Some(w) => print_witness(&d, &w),
                    None => {
                        println!("no template applies");
                        return Ok(2);
                    }
                },
                Method::Certified => print_witness(&d, &link_with_certificate(&d, &q, mode.into(), budget)?),
            }
            Ok(0)
        }
        Cmd::Gen { family, n1, n2, parts, p_arc, p_bidir, k_strong, seed, max_attempts, with_partition, out } => {
            let spec = GenSpec { family, n1, n2, parts, p_arc, p_bidir, k_strong, seed, max_attempts };
            let inst = random_instance(&spec).map_err(|e| match e {
                GenError::InvalidSpec(_) => Fail(1, e.to_string()),
                GenError::Exhausted { .. } => Fail(3, e.to_string()),
            })?;
            let partition = inst.partition.as_ref().filter(|_| with_partition);
            std::fs::write(&out, serialize(&inst.digraph, partition))
                .map_err(|e| Fail(1, format!("{}: {e}", out.display())))?;
            eprintln!("wrote {} ({} attempts)", out.display(), inst.attempts);
            Ok(0)
        }
        Cmd::Verify { theorem, trials, seed, query_mode, jobs, json, artifacts } => {
            let mut cfg = SuiteConfig::for_theorem(theorem, trials, seed);
            cfg.jobs = jobs;
            if query_mode.is_some() {
                cfg.query_mode = query_mode;
            }
            let (mut report, failure) = match verify_theorem(&cfg) {
                Ok(r) => (r, None),
                Err(e) => {
                    let code = match &e.source {
                        splitlink::verify::TrialError::Linkage(Error::BudgetExceeded(_)) => 3,
                        splitlink::verify::TrialError::Generator(GenError::Exhausted { .. }) => 3,
                        _ => 1,
                    };
                    ((*e.partial).clone(), Some(Fail(code, e.to_string())))
                }
            };
            write_refutations(&mut report, &artifacts).map_err(|e| Fail(1, format!("{}: {e}", artifacts.display())))?;
            println!("{report}");
            if let Some(path) = json {
                std::fs::write(&path, report.to_json()).map_err(|e| Fail(1, format!("{}: {e}", path.display())))?;
            }
            if let Some(f) = failure {
                return Err(f);
            }
            Ok(if report.refutations.is_empty() { 0 } else { 2 })
        }
        Cmd::Pins => {
            let r = verify_paper_pins();
            print!("{r}");
            Ok(if r.all_hold() { 0 } else { 2 })
        }
        Cmd::ExportDot { file, highlight } => {
            let (d, partition) = load(&file)?;
            let partition = partition.or_else(|| split_partition(&d));
            let paths = match highlight {
                Some(h) => parse_paths(&d, &read(&h)?).map_err(|e| Fail(1, format!("{}: {e}", h.display())))?,
                None => Vec::new(),
            };
            print!("{}", export_dot(&d, partition.as_ref(), &paths)?);
            Ok(0)
        }
        Cmd::Explore { mode, instances, queries, seed, jobs, artifacts } => {
            let r = explore(mode, instances, queries, seed, jobs);
            println!("{r}");
            if let Some(dir) = artifacts {
                std::fs::create_dir_all(&dir).map_err(|e| Fail(1, format!("{}: {e}", dir.display())))?;
                for (i, text) in r.found.iter().enumerate() {
                    let path = dir.join(format!("{}-seed{seed}-{i}.txt", mode.as_str()));
                    std::fs::write(&path, text).map_err(|e| Fail(1, format!("{}: {e}", path.display())))?;
                    println!("  {}", path.display());
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
