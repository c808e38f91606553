use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use contextuality::hypergraph::{Builtin, Format};
use contextuality::report::{run, ForSource, Options, Section, Source};

#[derive(Parser)]
#[command(
    name = "contextuality",
    version,
    about = "Contextuality analysis of orthogonality hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate two-valued states (the Travis matrix).
    States(Common),
    /// Partition logic: the states on which each vertex is 1.
    Partition(Common),
    /// Pseudocontext pairs and true-implies-false pairs.
    Pseudocontexts {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pc: PseudoArgs,
    },
    /// Check a faithful orthogonal representation.
    ForVerify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        vectors: ForArgs,
        #[command(flatten)]
        pc: PseudoArgs,
    },
    /// Facets of the correlation polytope.
    #[command(alias = "polytope")]
    Hull {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pairs: PairArgs,
        /// Write the H-representation (cdd .ine).
        #[arg(long, value_name = "PATH")]
        ine: Option<PathBuf>,
        /// Write the V-representation (cdd .ext).
        #[arg(long, value_name = "PATH")]
        ext: Option<PathBuf>,
    },
    /// Quantum minimum of every facet inequality.
    Violations {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        vectors: ForArgs,
        #[command(flatten)]
        pairs: PairArgs,
    },
    /// Rainbow colorings and extendability of states.
    Colorings {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        colors: ColorArgs,
    },
    /// Run every section.
    Report {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        vectors: ForArgs,
        #[command(flatten)]
        pairs: PairArgs,
        #[command(flatten)]
        pc: PseudoArgs,
        #[command(flatten)]
        colors: ColorArgs,
        /// Section to leave out (repeatable).
        #[arg(long, value_name = "SECTION")]
        skip: Vec<Section>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Simple,
    Mmp,
}

#[derive(Args)]
struct Common {
    /// Hypergraph file (one context per line, or MMP with --format mmp or a .mmp extension).
    #[arg(value_name = "INPUT", conflicts_with = "builtin")]
    input: Option<PathBuf>,
    /// Built-in hypergraph: mep, pruned, a, b, c. Default: mep.
    #[arg(long)]
    builtin: Option<Builtin>,
    #[arg(long, value_enum, requires = "input")]
    format: Option<FormatArg>,
    /// Write the JSON report here.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write CSV (and cdd) files into this directory.
    #[arg(long, value_name = "DIR")]
    csv: Option<PathBuf>,
    /// Compare against the reference MEP values; mismatches exit nonzero.
    #[arg(long)]
    assert_paper: bool,
}

#[derive(Args)]
struct ForArgs {
    /// Vector labels file (`label x y z` per line) or `builtin`.
    #[arg(long = "for", value_name = "FILE", default_value = "builtin")]
    for_source: ForSource,
    #[arg(long, default_value_t = contextuality::geometry::DEFAULT_TOL_ZERO)]
    tol_zero: f64,
    #[arg(long, default_value_t = contextuality::geometry::DEFAULT_TOL_MARGIN)]
    tol_margin: f64,
}

#[derive(Args)]
struct PairArgs {
    /// Co-contextual pairs such as `1-3,3-5`; defaults to the built-in configuration.
    #[arg(long)]
    pairs: Option<String>,
}

#[derive(Args)]
struct PseudoArgs {
    /// Largest pseudocontext set size.
    #[arg(long, default_value_t = contextuality::states::DEFAULT_PSEUDOCONTEXT_SIZE)]
    max_size: usize,
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=31))]
    colors: u8,
}

fn options(c: &Common) -> Options {
    let source = match &c.input {
        Some(path) => Source::File {
            path: path.clone(),
            format: c.format.map(|f| match f {
                FormatArg::Simple => Format::Simple,
                FormatArg::Mmp => Format::Mmp,
            }),
        },
        None => Source::Builtin(c.builtin.unwrap_or(Builtin::Mep)),
    };
    let mut o = Options::new(source);
    o.assert_paper = c.assert_paper;
    o
}

fn write(path: &Path, content: &str) -> Result<(), String> {
    fs::write(path, content).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut ine = None;
    let mut ext = None;
    let (section, common, opts) = match &cli.command {
        Command::States(c) => (Some(Section::States), c, options(c)),
        Command::Partition(c) => (Some(Section::Partition), c, options(c)),
        Command::Pseudocontexts { common, pc } => {
            let mut o = options(common);
            o.max_size = pc.max_size;
            (Some(Section::Pseudocontexts), common, o)
        }
        Command::ForVerify { common, vectors, pc } => {
            let mut o = options(common);
            o.for_source = vectors.for_source.clone();
            o.tol_zero = vectors.tol_zero;
            o.tol_margin = vectors.tol_margin;
            o.max_size = pc.max_size;
            (Some(Section::ForVerify), common, o)
        }
        Command::Hull {
            common,
            pairs,
            ine: i,
            ext: e,
        } => {
            let mut o = options(common);
            o.pairs = pairs.pairs.clone();
            ine = i.clone();
            ext = e.clone();
            (Some(Section::Hull), common, o)
        }
        Command::Violations { common, vectors, pairs } => {
            let mut o = options(common);
            o.for_source = vectors.for_source.clone();
            o.pairs = pairs.pairs.clone();
            (Some(Section::Violations), common, o)
        }
        Command::Colorings { common, colors } => {
            let mut o = options(common);
            o.colors = colors.colors;
            (Some(Section::Colorings), common, o)
        }
        Command::Report {
            common,
            vectors,
            pairs,
            pc,
            colors,
            skip,
        } => {
            let mut o = options(common);
            o.for_source = vectors.for_source.clone();
            o.tol_zero = vectors.tol_zero;
            o.tol_margin = vectors.tol_margin;
            o.pairs = pairs.pairs.clone();
            o.max_size = pc.max_size;
            o.colors = colors.colors;
            o.skip = skip.iter().copied().collect::<BTreeSet<_>>();
            (None, common, o)
        }
    };

    let outcome = match run(section, &opts) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    print!("{}", outcome.text);

    let mut io_errors = Vec::new();
    if let Some(path) = &common.json {
        io_errors.extend(write(path, &outcome.json()).err());
    }
    if let Some(dir) = &common.csv {
        if let Err(e) = fs::create_dir_all(dir) {
            io_errors.push(format!("cannot create {}: {e}", dir.display()));
        } else {
            for (name, content) in &outcome.files {
                io_errors.extend(write(&dir.join(name), content).err());
            }
        }
    }
    for (target, name) in [(&ine, "hull.ine"), (&ext, "hull.ext")] {
        if let Some(path) = target {
            match outcome.files.iter().find(|f| f.0 == name) {
                Some((_, content)) => io_errors.extend(write(path, content).err()),
                None => io_errors.push(format!("no {name} produced")),
            }
        }
    }

    for e in &io_errors {
        eprintln!("error: {e}");
    }
    for f in &outcome.failures {
        eprintln!("FAIL: {f}");
    }
    if !io_errors.is_empty() {
        ExitCode::from(2)
    } else if !outcome.success() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
