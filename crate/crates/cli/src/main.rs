use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use slimlat::analysis::{battery, run_battery, search_corpus, structural_suite, SearchOutcome};
use slimlat::construction::{
    enumerate_slim_rectangular, replay, CzedliSchmidtSequence, Enumeration, EnumerationBounds,
};
use slimlat::io::{
    analysis_report, export_dot, format_enumeration, format_reports, parse_lattice, parse_sequence,
    sequence_one_line, serialize_lattice, EnumerationCache, Flags,
};
use slimlat::{canonical_form, fixtures, PlanarLattice};

#[derive(Parser)]
#[command(
    name = "slimlat",
    version,
    about = "Slim rectangular lattices and their congruences"
)]
struct Cli {
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Replay a sequence script into a lattice file (and optionally a DOT diagram).
    Build {
        #[arg(long)]
        script: PathBuf,
        /// Lattice file to write; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Boundary profile, t, Con L, dual atoms, prime ideals and element labels.
    Analyze {
        #[command(flatten)]
        input: Input,
    },
    /// Run every check; exit status 1 if any fails.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Check every enumerated lattice with at most this many elements instead.
        #[arg(long, conflicts_with_all = ["script", "lattice"])]
        max_elements: Option<usize>,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// List every slim rectangular lattice within the bounds, once per isomorphism class.
    Enumerate {
        #[command(flatten)]
        bounds: BoundsArgs,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Look for a slim rectangular lattice whose congruence lattice is the target.
    Search {
        /// `c3`, `d8`, `b2`, `bn:k` or a lattice file.
        #[arg(long)]
        target: String,
        #[command(flatten)]
        bounds: BoundsArgs,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Input {
    #[arg(long, conflicts_with = "lattice")]
    script: Option<PathBuf>,
    #[arg(long)]
    lattice: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    max_elements: usize,
    /// Largest grid factor (default: no limit beyond the element bound).
    #[arg(long)]
    max_grid: Option<usize>,
    #[arg(long)]
    max_forks: Option<usize>,
}

impl BoundsArgs {
    fn bounds(&self) -> EnumerationBounds {
        let mut b = EnumerationBounds::elements(self.max_elements);
        if let Some(g) = self.max_grid {
            b.max_grid = g;
        }
        if let Some(f) = self.max_forks {
            b.max_forks = f;
        }
        b
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_script(path: &Path) -> Result<CzedliSchmidtSequence> {
    parse_sequence(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_lattice(path: &Path) -> Result<PlanarLattice> {
    let (l, _) =
        parse_lattice(&read(path)?).with_context(|| format!("loading {}", path.display()))?;
    Ok(l)
}

enum Loaded {
    Script(CzedliSchmidtSequence, PlanarLattice),
    Lattice(PlanarLattice),
}

impl Loaded {
    fn lattice(&self) -> &PlanarLattice {
        match self {
            Loaded::Script(_, l) | Loaded::Lattice(l) => l,
        }
    }
}

fn load_input(input: &Input) -> Result<Loaded> {
    match (&input.script, &input.lattice) {
        (Some(s), None) => {
            let seq = load_script(s)?;
            let l = replay(&seq).with_context(|| format!("replaying {}", s.display()))?;
            Ok(Loaded::Script(seq, l))
        }
        (None, Some(l)) => Ok(Loaded::Lattice(load_lattice(l)?)),
        _ => bail!("give exactly one of --script or --lattice"),
    }
}

fn enumerate(bounds: EnumerationBounds, cache: Option<&Path>) -> Result<Enumeration> {
    Ok(match cache {
        Some(dir) => EnumerationCache::new(dir).enumerate(bounds)?.0,
        None => enumerate_slim_rectangular(bounds)?,
    })
}

fn target(name: &str) -> Result<PlanarLattice> {
    Ok(match name {
        "c3" => fixtures::chain(3),
        "d8" => fixtures::d8(),
        "b2" => fixtures::boolean(2),
        _ => match name.strip_prefix("bn:") {
            Some(k) => {
                let k: usize = k.parse().with_context(|| format!("bad target `{name}`"))?;
                if k > 6 {
                    bail!("bn:{k} is too large (at most bn:6)");
                }
                fixtures::boolean(k)
            }
            None => load_lattice(Path::new(name))?,
        },
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut out = String::new();
    let mut failed = false;
    match cli.command {
        Command::Build {
            script,
            out: path,
            dot,
        } => {
            let seq = load_script(&script)?;
            let l = replay(&seq).with_context(|| format!("replaying {}", script.display()))?;
            let text = serialize_lattice(&l, Flags::detect(&l));
            match path {
                Some(p) => {
                    fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?
                }
                None => out.push_str(&text),
            }
            if let Some(p) = dot {
                fs::write(&p, export_dot(&l))
                    .with_context(|| format!("writing {}", p.display()))?;
            }
        }
        Command::Analyze { input } => out.push_str(&analysis_report(load_input(&input)?.lattice())),
        Command::Verify {
            input,
            max_elements,
            cache,
        } => {
            if let Some(n) = max_elements {
                let e = enumerate(EnumerationBounds::elements(n), cache.as_deref())?;
                let lattices: Vec<PlanarLattice> =
                    e.lattices.iter().map(|x| x.lattice.clone()).collect();
                let all = run_battery(&lattices);
                for (x, reports) in e.lattices.iter().zip(&all) {
                    out.push_str(&format!(
                        "lattice {} {}\n",
                        x.form.digest(),
                        sequence_one_line(&x.sequence)
                    ));
                    out.push_str(&format_reports(reports));
                    failed |= reports.iter().any(|r| !r.pass);
                }
                if !e.invariant_violations.is_empty() {
                    out.push_str(&format!(
                        "FAIL enumeration invariants: {} violations\n",
                        e.invariant_violations.len()
                    ));
                    failed = true;
                }
                out.push_str(&format!(
                    "lattices {} {}\n",
                    e.lattices.len(),
                    if failed { "FAIL" } else { "PASS" }
                ));
            } else {
                let loaded = load_input(&input)?;
                let mut reports = battery(loaded.lattice());
                if let Loaded::Script(seq, _) = &loaded {
                    reports.push(structural_suite(seq));
                }
                failed = reports.iter().any(|r| !r.pass);
                out.push_str(&format_reports(&reports));
            }
        }
        Command::Enumerate { bounds, cache } => {
            out.push_str(&format_enumeration(&enumerate(
                bounds.bounds(),
                cache.as_deref(),
            )?));
        }
        Command::Search {
            target: spec,
            bounds,
            cache,
        } => {
            let t = target(&spec)?;
            let b = bounds.bounds();
            let e = enumerate(b, cache.as_deref())?;
            out.push_str(&format!(
                "target {} elements {}\n",
                canonical_form(&t).digest(),
                t.len()
            ));
            match search_corpus(&t, b, &e.lattices) {
                SearchOutcome::Witness { sequence, lattice } => {
                    out.push_str(&format!(
                        "witness {} elements {}\n",
                        sequence_one_line(&sequence),
                        lattice.len()
                    ));
                }
                SearchOutcome::Exhausted(cert) => {
                    out.push_str("exhausted: no witness\n");
                    let b = cert.bounds;
                    out.push_str(&format!(
                        "bounds max_elements={} max_grid={} max_forks={}\n",
                        b.max_elements, b.max_grid, b.max_forks
                    ));
                    out.push_str(&format!(
                        "corpus {}\ncorpus_hash {}\n",
                        cert.corpus_size, cert.corpus_hash
                    ));
                }
            }
        }
    }
    print!("{out}");
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match cli.jobs {
        Some(0) => {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(code) => code,
        // bad input of any kind: unreadable, unparsable, or not a valid lattice
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
