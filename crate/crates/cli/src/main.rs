use std::borrow::Cow;
use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use barnette::catalog::{default_catalog, instantiate_base_graph, load_catalog_dir, validate_catalog, Catalog};
use barnette::constructor::{construct_with_catalog, parse_set_line};
use barnette::dualize::{check_barnette_class, cycle_to_dot, is_hamiltonian_cycle, tree_to_dual_cycle};
use barnette::family::bfs_levels;
use barnette::oracle::{enumerate_hamiltonian_sets, exhaustive_family_census, SearchConstraint};
use barnette::planar::{dual_graph, parse_triangulation, write_triangulation, PlaneTriangulation, VertexId};
use barnette::rewrite::{enumerate_family, DerivationTrace};
use barnette::verifier::{verify_hamiltonian_set, Flavor};

/// Hamiltonian sets in plane triangulations and Hamiltonian cycles in
/// their cubic duals.
#[derive(Debug, Parser)]
#[command(name = "barnette", version)]
struct Cli {
    /// Worker threads for enumeration and batch work; defaults to all cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Catalog directory; the built-in catalog when unset.
    #[arg(long, global = true, env = "BARNETTE_CATALOG")]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Lists every class of the family up to a size.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_vertices: u32,
        /// Keep only classes of this height.
        #[arg(long)]
        height: Option<usize>,
        /// Write one graph file per class here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Builds a hamiltonian set with the requested flavor.
    Construct {
        graph: PathBuf,
        #[arg(long, default_value = "compatible")]
        flavor: Flavor,
    },
    /// Checks a set: an id list such as "2 3" or a file with a `set=` line.
    Verify {
        graph: PathBuf,
        set: String,
        /// Exit 1 unless the set has this flavor.
        #[arg(long)]
        flavor: Option<Flavor>,
    },
    /// Exhaustive search for hamiltonian sets.
    Oracle {
        graph: PathBuf,
        #[arg(long, default_value = "any")]
        flavor: Flavor,
        /// Cap on search nodes.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        budget: Option<u64>,
        /// Collect every set instead of the first.
        #[arg(long)]
        all: bool,
    },
    /// Turns a hamiltonian set into a Hamiltonian cycle of the dual.
    Dualize {
        graph: PathBuf,
        set: String,
        /// Write the dual drawing here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Independent enumeration of the family by disk filling.
    Census {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_vertices: u32,
    },
    /// Rebuilds the graph a derivation trace describes.
    Replay { trace: PathBuf },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    /// Runs every validator on the catalog.
    Check { dir: Option<PathBuf> },
}

/// A domain failure: reported with exit status 1.
#[derive(Debug)]
struct Failure(String);

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failure {}

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Failure(msg.into()).into())
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_graph(path: &Path) -> Result<PlaneTriangulation> {
    parse_triangulation(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn read_set(arg: &str) -> Result<BTreeSet<VertexId>> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = read(path)?;
        return parse_set_line(&text).with_context(|| format!("{arg}: no valid `set=` line"));
    }
    arg.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<VertexId>().with_context(|| format!("`{t}` is not a vertex id")))
        .collect()
}

fn load(dir: &Option<PathBuf>) -> Result<Cow<'static, Catalog>> {
    match dir {
        Some(dir) => Ok(Cow::Owned(load_catalog_dir(dir).with_context(|| format!("catalog {}", dir.display()))?)),
        None => Ok(Cow::Borrowed(default_catalog())),
    }
}

fn run(cli: Cli) -> Result<()> {
    if let Some(k) = cli.jobs {
        if k == 0 {
            bail!("--jobs must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global().context("thread pool")?;
    }
    match cli.command {
        Command::Catalog { action: CatalogAction::Check { dir } } => {
            let c = load(&dir.or(cli.catalog))?;
            let report = validate_catalog(&c);
            print!("{report}");
            if !report.all_pass() {
                return fail("catalog validation failed");
            }
        }
        Command::Enumerate { max_vertices, height, out } => {
            if let Some(dir) = &out {
                fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
            }
            let classes = enumerate_family(max_vertices as usize)
                .into_iter()
                .filter(|c| height.is_none_or(|h| bfs_levels(&c.graph).height() == h));
            for (i, class) in classes.enumerate() {
                println!("{}", class.code);
                if let Some(dir) = &out {
                    let trace = class.trace.to_string().trim_end().replace('\n', "; ");
                    let text = format!("# code {}\n# {trace}\n{}", class.code, write_triangulation(&class.graph));
                    let path = dir.join(format!("class-{i:05}.tri"));
                    fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?;
                }
            }
        }
        Command::Construct { graph, flavor } => {
            let c = load(&cli.catalog)?;
            let t = read_graph(&graph)?;
            match construct_with_catalog(&c, &t, flavor) {
                Ok(r) => {
                    print!("{}", r.to_text());
                    if let Some(x) = r.exception.filter(|_| flavor != Flavor::Any) {
                        return fail(format!("exceptional graph {x}: no {flavor} set exists; the set above is hamiltonian only"));
                    }
                }
                Err(e) => return fail(e.to_string()),
            }
        }
        Command::Verify { graph, set, flavor } => {
            let t = read_graph(&graph)?;
            let u = read_set(&set)?;
            let report = verify_hamiltonian_set(&t, &u);
            print!("{}", report.to_key_values());
            let ok = match flavor {
                Some(f) => report.satisfies(f),
                None => report.is_hamiltonian,
            };
            if !ok {
                return fail(format!("the set is not {}", flavor.map_or("hamiltonian".to_string(), |f| f.to_string())));
            }
        }
        Command::Oracle { graph, flavor, budget, all } => {
            let t = read_graph(&graph)?;
            let mut c = if all { SearchConstraint::all(flavor) } else { SearchConstraint::first(flavor) };
            if let Some(b) = budget {
                c.budget = b;
            }
            let r = enumerate_hamiltonian_sets(&t, c).map_err(|e| Failure(e.to_string()))?;
            for s in &r.sets {
                let ids: Vec<String> = s.iter().map(ToString::to_string).collect();
                println!("set={}", ids.join(" "));
            }
            println!("count={}\nexhausted={}\nnodes={}", r.sets.len(), r.exhausted, r.nodes);
            if r.sets.is_empty() {
                return fail(format!("no {flavor} set found"));
            }
        }
        Command::Dualize { graph, set, dot } => {
            let t = read_graph(&graph)?;
            let u = read_set(&set)?;
            let w = tree_to_dual_cycle(&t, &u).map_err(|e| Failure(e.to_string()))?;
            let d = dual_graph(&t);
            if !is_hamiltonian_cycle(&d, &w.cycle) {
                return fail("internal: the dual walk is not a Hamiltonian cycle");
            }
            let g_face = d.face_of(t.g()).expect("every vertex has a dual face");
            let class = check_barnette_class(&d, g_face).map_err(|e| Failure(e.to_string()))?;
            print!("{}", w.to_text());
            println!("length={}\ng_face={g_face}\nbarnette_class={class}", w.len());
            match dot {
                Some(path) => fs::write(&path, cycle_to_dot(&d, &w)).with_context(|| format!("cannot write {}", path.display()))?,
                None => print!("{}", cycle_to_dot(&d, &w)),
            }
        }
        Command::Census { max_vertices } => {
            let all = exhaustive_family_census(max_vertices as usize).map_err(|e| Failure(e.to_string()))?;
            for code in all.keys() {
                println!("{code}");
            }
        }
        Command::Replay { trace } => {
            let c = load(&cli.catalog)?;
            let tr = read(&trace)?.parse::<DerivationTrace>().map_err(|e| Failure(e.to_string()))?;
            let t = tr
                .replay(|name, n| instantiate_base_graph(&c, name, n).ok().map(|e| e.graph))
                .map_err(|e| Failure(e.to_string()))?;
            print!("{}", write_triangulation(&t));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<Failure>() => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
