//! `distinguish`: symmetry-breaking indices of small graphs and checks of
//! their closed forms against exhaustive search.
//!
//! Exit codes: 0 success, 2 usage, parse or precondition errors, 3 when a
//! computation exceeded the resource budget.

use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use distinguish::config::{parse_count, HARD_VERTEX_LIMIT};
use distinguish::formulas;
use distinguish::graph::FamilyKind;
use distinguish::indices::{analyze, rooted_indices};
use distinguish::io::report::{digest, is_skip, GraphDocument, ReportEnvelope, Source, TableRow};
use distinguish::io::{edgelist, graph6};
use distinguish::named::{parse_graph, parse_rooted};
use distinguish::products::{self, ProductLayout};
use distinguish::verify::{self, TheoremId};
use distinguish::{Budget, Error, Graph};

#[derive(Parser, Debug)]
#[command(name = "distinguish", version, about = "Distinguishing number, threshold and coloring counts of small graphs")]
struct Cli {
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Largest automorphism group to enumerate (accepts 10^7 or 1e7).
    #[arg(long, global = true, env = "DISTINGUISH_MAX_AUT", value_parser = count, default_value = "10^7")]
    max_aut: u64,
    /// Largest number of candidate colorings one count may visit.
    #[arg(long, global = true, env = "DISTINGUISH_MAX_COLORINGS", value_parser = count, default_value = "10^7")]
    max_colorings: u64,
    /// Largest vertex count accepted (at most 64).
    #[arg(long, global = true, env = "DISTINGUISH_MAX_VERTICES", value_parser = count, default_value = "64")]
    max_vertices: u64,
    /// Run on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_vertices: (self.max_vertices as usize).min(HARD_VERTEX_LIMIT),
            max_aut: self.max_aut,
            max_colorings: self.max_colorings,
            parallel: !self.sequential,
        }
    }
}

fn count(s: &str) -> Result<u64, String> {
    parse_count(s).ok_or_else(|| format!("expected a count such as 1000, 1e7 or 10^7, found {s:?}"))
}

#[derive(Subcommand, Debug)]
enum Command {
    /// D, θ, |Aut| and the Φ table of each input graph.
    Analyze {
        /// A graph6 or edge-list file, `builtin:<name>`, or a graph name such as `petersen` or `K4-e@0`.
        input: String,
        /// Last palette size in the Φ table.
        #[arg(long, default_value_t = 4)]
        phi_max: usize,
        /// Also list the steady vertices.
        #[arg(long)]
        steady: bool,
        /// Treat a trailing `@v` as a root and report the rooted indices.
        #[arg(long)]
        rooted: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Build a product graph from named factors.
    Product {
        #[arg(value_enum)]
        kind: Kind,
        /// Factors; rooted factors take `@v`. `power` takes a graph and a count.
        #[arg(required = true)]
        args: Vec<String>,
        #[arg(long, value_enum, default_value_t = Emit::G6)]
        emit: Emit,
    },
    /// Compare closed forms with exhaustive computation.
    Verify {
        /// A statement id such as `thm3.7`, or `all`.
        theorem: String,
        /// Instances, e.g. `K3,t=2..5; C5,t=2`. Defaults to the built-in grid.
        #[arg(long)]
        grid: Option<String>,
        /// Last t in the radical-form comparison emitted with `all`.
        #[arg(long, default_value_t = 50)]
        radical_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Φ and φ for a graph family over a range of orders.
    Table {
        /// path, cycle, complete, star, empty, bipartite or kneser.
        family: String,
        /// Orders, e.g. `2..8` or `5`.
        range: String,
        /// Second parameter of bipartite (K_{n,m}) and kneser (K(n,m)).
        #[arg(long)]
        with: Option<usize>,
        #[arg(long, default_value_t = 4)]
        phi_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Convert between graph6 (`.g6`) and edge lists (`.el`, `.txt`); `-` is standard output.
    Convert { input: String, output: String },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Emit {
    G6,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    /// Factors glued at their roots.
    VertexSum,
    /// t copies of one rooted graph glued at the root: `power G@u t`.
    Power,
    /// A copy of H rooted at every vertex of G: `rooted G H@v`.
    Rooted,
    /// A copy of H joined to every vertex of G: `corona G H`.
    Corona,
    /// Every vertex of G replaced by a copy of H: `lexicographic G H`.
    Lexicographic,
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure { code: if is_skip(&e) { 3 } else { 2 }, message: e.to_string() }
    }
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match run(cli, &argv) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("distinguish: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| Failure::input(format!("writing output: {e}")))
}

fn render(env: &ReportEnvelope, format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => emit(&env.to_json()),
        Format::Csv => emit(&env.to_csv()?),
    }
}

/// Exit code for a finished report: 3 if anything was skipped for budget
/// reasons, else 0.
fn budget_code(env: &ReportEnvelope) -> u8 {
    if env.skipped.is_empty() {
        0
    } else {
        3
    }
}

fn run(cli: Cli, argv: &[String]) -> Result<u8, Failure> {
    let budget = cli.budget.budget();
    match cli.command {
        Command::Analyze { input, phi_max, steady, rooted, format } => {
            let (docs, bytes) = load(&input)?;
            let mut env = ReportEnvelope::new(digest(argv.iter().map(String::as_bytes).chain([bytes.as_slice()])), &budget);
            let root = if rooted {
                let token = input.strip_prefix("builtin:").unwrap_or(&input);
                Some(parse_rooted(token).map_err(|e| Failure::input(format!("--rooted needs a graph name such as P4@1 ({e})")))?)
            } else {
                None
            };
            for doc in &docs {
                let result = match &root {
                    Some(h) => rooted_indices(h, phi_max, &budget),
                    None => analyze(&doc.graph, phi_max, steady, &budget),
                };
                env.push_graph(doc, result)?;
            }
            for s in &env.skipped {
                eprintln!("distinguish: skipped {}: {}", s.subject, s.reason);
            }
            render(&env, format)?;
            Ok(budget_code(&env))
        }
        Command::Product { kind, args, emit: how } => {
            let (g, layout) = build_product(kind, &args)?;
            match how {
                Emit::G6 => emit(&format!("{}\n", graph6::encode(&g)))?,
                Emit::Json => {
                    let doc = ProductDocument {
                        kind: layout.kind.name(),
                        factors: &args,
                        n: g.order(),
                        edges: g.edge_count(),
                        graph6: graph6::encode(&g),
                        layout: &layout,
                    };
                    emit(&format!("{}\n", serde_json_pretty(&doc)))?;
                }
            }
            Ok(0)
        }
        Command::Verify { theorem, grid, radical_max, format } => {
            let mut env = ReportEnvelope::new(digest(argv.iter().map(String::as_bytes)), &budget);
            let ids: Vec<TheoremId> = if theorem.eq_ignore_ascii_case("all") {
                if grid.is_some() {
                    return Err(Failure::input("--grid needs a single statement id, not `all`"));
                }
                TheoremId::ALL.to_vec()
            } else {
                vec![theorem.parse()?]
            };
            for id in &ids {
                let instances = match &grid {
                    Some(spec) => verify::parse_grid(*id, spec)?,
                    None => verify::default_grid(*id, &budget)?,
                };
                env.push_verdicts(verify::run(*id, instances, &budget));
            }
            if ids.len() > 1 {
                env.radical = verify::radical_table(2, radical_max.max(2))?;
            }
            eprintln!(
                "distinguish: {} agree, {} disagree, {} inconclusive, {} skipped",
                env.count(verify::Status::Agree),
                env.count(verify::Status::Disagree),
                env.count(verify::Status::Inconclusive),
                env.skipped.len()
            );
            render(&env, format)?;
            Ok(0)
        }
        Command::Table { family, range, with, phi_max, format } => {
            let kind = FamilyKind::parse(&family.to_ascii_lowercase())
                .ok_or_else(|| Failure::input(format!("unknown family {family:?}")))?;
            let orders = parse_range(&range)?;
            let mut env = ReportEnvelope::new(digest(argv.iter().map(String::as_bytes)), &budget);
            for n in orders {
                let params: Vec<usize> = match (kind, with) {
                    (FamilyKind::CompleteBipartite | FamilyKind::Kneser, Some(m)) => vec![n, m],
                    (FamilyKind::CompleteBipartite | FamilyKind::Kneser, None) => {
                        return Err(Failure::input(format!("{} needs --with", kind.name())))
                    }
                    _ => vec![n],
                };
                let g = Graph::family(kind, &params)?;
                let name = format!("{}({})", kind.name(), params.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
                match table_rows(&name, kind, &g, phi_max, &budget) {
                    Ok(rows) => env.table.extend(rows),
                    Err(e) if is_skip(&e) => env.skip("table", &name, None, &e),
                    Err(e) => return Err(e.into()),
                }
            }
            render(&env, format)?;
            Ok(budget_code(&env))
        }
        Command::Convert { input, output } => {
            let (docs, _) = load(&input)?;
            let text = if is_edgelist_path(&output) {
                match docs.as_slice() {
                    [one] => edgelist::write(&one.graph),
                    _ => return Err(Failure::input(format!("an edge list holds one graph; {input} has {}", docs.len()))),
                }
            } else {
                docs.iter().map(|d| format!("{}\n", graph6::encode(&d.graph))).collect()
            };
            if output == "-" {
                emit(&text)?;
            } else {
                fs::write(&output, text).map_err(|e| Failure::input(format!("writing {output}: {e}")))?;
            }
            Ok(0)
        }
    }
}

#[derive(serde::Serialize)]
struct ProductDocument<'a> {
    kind: &'a str,
    factors: &'a [String],
    n: usize,
    edges: usize,
    graph6: String,
    layout: &'a ProductLayout,
}

fn serde_json_pretty<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("document serializes")
}

fn table_rows(name: &str, kind: FamilyKind, g: &Graph, phi_max: usize, budget: &Budget) -> distinguish::Result<Vec<TableRow>> {
    let report = analyze(g, phi_max, false, budget)?;
    let n = g.order() as u64;
    report
        .phi_table
        .rows
        .iter()
        .map(|row| {
            let k = row.k as u64;
            let closed_form = match kind {
                FamilyKind::Path => Some(formulas::phi_path_closed(n, k)?),
                FamilyKind::Complete => Some(formulas::phi_complete_closed(n, k)?),
                _ => None,
            };
            Ok(TableRow { graph: name.to_string(), n: g.order(), k: row.k, phi: row.phi, varphi: row.varphi, closed_form })
        })
        .collect()
}

fn parse_range(s: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::input(format!("bad range {s:?}; expected a..b or a number"));
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![num(s)?]),
    }
}

fn build_product(kind: Kind, args: &[String]) -> Result<(Graph, ProductLayout), Failure> {
    let arity = |want: usize| {
        if args.len() == want {
            Ok(())
        } else {
            Err(Failure::input(format!("{kind:?} takes {want} arguments, found {}", args.len()).to_lowercase()))
        }
    };
    let out = match kind {
        Kind::VertexSum => {
            if args.len() < 2 {
                return Err(Failure::input("vertex-sum takes at least two rooted factors"));
            }
            let factors = args.iter().map(|a| parse_rooted(a)).collect::<distinguish::Result<Vec<_>>>()?;
            products::vertex_sum(&factors)?
        }
        Kind::Power => {
            arity(2)?;
            let base = parse_rooted(&args[0])?;
            let t: usize = args[1].parse().map_err(|_| Failure::input(format!("expected a copy count, found {:?}", args[1])))?;
            products::vertex_sum_power(base.graph(), base.root(), t)?
        }
        Kind::Rooted => {
            arity(2)?;
            products::rooted_product_smooth(&parse_graph(&args[0])?, &parse_rooted(&args[1])?)?
        }
        Kind::Corona => {
            arity(2)?;
            products::corona(&parse_graph(&args[0])?, &parse_graph(&args[1])?)?
        }
        Kind::Lexicographic => {
            arity(2)?;
            products::lexicographic(&parse_graph(&args[0])?, &parse_graph(&args[1])?)?
        }
    };
    Ok(out)
}

fn is_edgelist_path(p: &str) -> bool {
    matches!(Path::new(p).extension().and_then(|e| e.to_str()), Some("el" | "txt" | "edges"))
}

/// Reads an input argument: `builtin:<name>`, an existing file, or a bare
/// graph name. Returns the documents and the bytes that identify the input.
fn load(input: &str) -> Result<(Vec<GraphDocument>, Vec<u8>), Failure> {
    if let Some(name) = input.strip_prefix("builtin:") {
        let g = parse_rooted(name).map(|r| r.graph().clone()).or_else(|_| parse_graph(name))?;
        return Ok((vec![GraphDocument::new(name, g, Source::Builtin)?], Vec::new()));
    }
    let path = Path::new(input);
    if path.is_file() {
        let bytes = fs::read(path).map_err(|e| Failure::input(format!("reading {input}: {e}")))?;
        let text = String::from_utf8(bytes.clone()).map_err(|_| Failure::input(format!("{input} is not UTF-8 text")))?;
        let stem = path.file_name().and_then(|s| s.to_str()).unwrap_or(input);
        let docs = if is_edgelist_path(input) || looks_like_edgelist(&text) {
            vec![GraphDocument::new(stem, edgelist::parse(&text)?, Source::Edgelist)?]
        } else {
            let graphs = graph6::decode_all(&text).map_err(Error::from)?;
            if graphs.is_empty() {
                return Err(Failure::input(format!("{input} holds no graphs")));
            }
            let many = graphs.len() > 1;
            graphs
                .into_iter()
                .enumerate()
                .map(|(i, g)| GraphDocument::new(if many { format!("{stem}#{}", i + 1) } else { stem.to_string() }, g, Source::Graph6))
                .collect::<distinguish::Result<Vec<_>>>()?
        };
        return Ok((docs, bytes));
    }
    let g = parse_rooted(input).map(|r| r.graph().clone()).or_else(|_| parse_graph(input)).map_err(|e| {
        Failure::input(format!("{input:?} is neither a readable file nor a graph name ({e})"))
    })?;
    Ok((vec![GraphDocument::new(input, g, Source::Builtin)?], Vec::new()))
}

/// An edge list starts with a line of two decimal numbers; graph6 never
/// contains digits.
fn looks_like_edgelist(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.split_whitespace().count() == 2 && l.split_whitespace().all(|w| w.parse::<usize>().is_ok()))
}
