use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use kclass_core::autorbits::{element_order_spectrum, k_star, AmbientPair};
use kclass_core::bounds::{c2_limit, gamma};
use kclass_core::corpus::{parse_group_file, Catalog, GroupFile, CATALOG_ENV};
use kclass_core::permcore::{FiniteGroup, DEFAULT_CAP};
use kclass_core::report::{reports_to_json, VerificationReport};
use kclass_core::verifier::{run_suite, Suite, SuiteOptions};

#[derive(Parser)]
#[command(name = "kclass")]
#[command(about = "Class counts, automorphism orbits and bound verification for permutation groups")]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// |A| and |T| of a group file
    Order { file: PathBuf },
    /// Conjugacy classes of the ambient group (and of the socle section, if any)
    Classes {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// k*(T): orbits of the ambient group on the elements of the socle
    Kstar {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Element orders occurring in the socle, and their number e(T)
    Eorders {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// gamma = log2|Aut| / ((log2 k)^2 log2 log2 k)
    Gamma {
        #[arg(long)]
        log2aut: f64,
        #[arg(long)]
        k: u64,
    },
    /// Run a verification suite over the catalog
    Verify {
        /// tables, c2, lemmas, bertram, almost-simple, socle or all
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Catalog directory; defaults to the bundled catalog
        #[arg(long, env = CATALOG_ENV)]
        catalog: Option<PathBuf>,
        /// Also write the reports as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn load(path: &Path) -> Result<GroupFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_group_file(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_pair(path: &Path) -> Result<(GroupFile, AmbientPair)> {
    let file = load(path)?;
    let ambient = FiniteGroup::new(file.degree, file.ambient().to_vec())?;
    let pair = if file.has_socle_section() {
        AmbientPair::new(ambient, file.socle().to_vec()).context("socle section")?
    } else {
        AmbientPair::trivial_extension(ambient)
    };
    Ok((file, pair))
}

fn print_classes(label: &str, g: &FiniteGroup, cap: usize) -> Result<()> {
    let c = g.classes(cap)?;
    println!("{label}: {} classes, |G| = {}", c.k(), c.group_order());
    println!("  {:>10}  {:>5}  representative", "size", "order");
    for (rep, size) in c.representatives().iter().zip(c.sizes()) {
        println!("  {size:>10}  {:>5}  {}", rep.order(), rep.cycle_string());
    }
    Ok(())
}

fn print_table(reports: &[VerificationReport]) {
    let width = reports.iter().map(|r| r.id.chars().count()).max().unwrap_or(0);
    let subj = reports.iter().map(|r| r.subject.chars().count()).max().unwrap_or(0);
    for r in reports {
        let margin = r.margin.map(|m| format!("{m:+.6}")).unwrap_or_default();
        let reason = r.reason.as_deref().map(|s| format!("  {s}")).unwrap_or_default();
        println!(
            "{:<7} {:<width$}  {:<subj$}  {margin:>12}{reason}",
            r.verdict.as_str(),
            r.id,
            r.subject
        );
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Order { file } => {
            let (f, pair) = load_pair(&file)?;
            println!("{}: degree {}", f.name, f.degree);
            println!("|A| = {}", pair.ambient().order_exact());
            if f.has_socle_section() {
                println!("|T| = {}", pair.socle().order_exact());
                println!("|A:T| = {}", pair.out_index());
            }
        }
        Command::Classes { file, cap } => {
            let (f, pair) = load_pair(&file)?;
            print_classes(&format!("{} ambient", f.name), pair.ambient(), cap)?;
            if f.has_socle_section() {
                print_classes(&format!("{} socle", f.name), pair.socle(), cap)?;
            }
        }
        Command::Kstar { file, cap } => {
            let (f, pair) = load_pair(&file)?;
            let ks = k_star(&pair, cap)?;
            let kt = pair.socle().classes(cap)?.k();
            println!("{}: k(T) = {kt}, k*(T) = {ks}, |A:T| = {}", f.name, pair.out_index());
        }
        Command::Eorders { file, cap } => {
            let (f, pair) = load_pair(&file)?;
            let orders = element_order_spectrum(pair.socle(), cap)?;
            let list: Vec<String> = orders.iter().map(u64::to_string).collect();
            println!("{}: e(T) = {} {{{}}}", f.name, orders.len(), list.join(", "));
        }
        Command::Gamma { log2aut, k } => {
            let g = gamma(log2aut, k)?;
            let (limit, inclusive, exception) = c2_limit(log2aut, k);
            let within = if inclusive { g.gamma <= limit } else { g.gamma < limit };
            let op = if inclusive { "<=" } else { "<" };
            let label = exception.map(|n| format!(" ({n})")).unwrap_or_default();
            println!("gamma = {:.6}", g.gamma);
            println!(
                "bound: gamma {op} {limit}{label}: {}",
                if within { "holds" } else { "violated" }
            );
            return Ok(within);
        }
        Command::Verify {
            suite,
            cap,
            catalog,
            json,
        } => {
            let catalog = Catalog::resolve(catalog.as_deref())?;
            eprintln!("catalog: {} ({} entries)", catalog.origin(), catalog.entries().len());
            let mut opts = SuiteOptions::new(catalog);
            opts.cap = cap;
            let reports = run_suite(suite, &opts)?;
            print_table(&reports);
            let failed = reports.iter().filter(|r| r.failed()).count();
            let skipped = reports.iter().filter(|r| !r.passed() && !r.failed()).count();
            println!(
                "{}: {} reports, {} failed, {} skipped",
                suite,
                reports.len(),
                failed,
                skipped
            );
            if let Some(out) = json {
                fs::write(&out, reports_to_json(&reports)).with_context(|| format!("writing {}", out.display()))?;
            }
            return Ok(failed == 0);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
