//! syllnet: corpus → syllables → syllable networks → small-world
//! measures vs matched random baselines.
//!
//! Diagnostics go to standard error; data goes to standard output or to
//! the requested files. Exit codes: 1 for usage/configuration problems,
//! 2 for I/O and parse failures, 3 for analysis errors (empty networks,
//! undefined measures).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand};

use syllnet_core::baseline::{compare_with_er, ComparisonReport};
use syllnet_core::corpus::{self, load_corpus, tokenize_corpus, Alphabet, TokenizerConfig, Token};
use syllnet_core::graph_io::{export_graph, import_graph, GraphFileFormat};
use syllnet_core::metrics::{
    degree_distribution, top_k_by_degree, LowDegreePolicy, MetricsOptions, NetworkMetrics,
    PathConvention,
};
use syllnet_core::netbuild::{filter_min_degree, to_undirected_unweighted, EdgeAccumulator};
use syllnet_core::network::{Linking, NetworkVariant, SyllableNetwork};
use syllnet_core::report::{
    comparison_json, emit_degree_distribution, emit_table, metrics_json, TableInputs, TableSpec,
};
use syllnet_core::syllabifier::{syllabify, syllabify_all, RuleSet, SyllabifiedWord};
use syllnet_core::{Error, Result};

#[derive(Parser)]
#[command(name = "syllnet", version, about = "Syllable network construction and analysis")]
struct Cli {
    /// Cap the number of worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Split words into syllables, one middle-dot-joined word per line.
    Syllabify(SyllabifyArgs),
    /// Build a syllable network from text files and write it to disk.
    Build(BuildArgs),
    /// Compute measures of a stored network.
    Analyze(AnalyzeArgs),
    /// Compare a stored network against matched random graphs.
    Compare(CompareArgs),
    /// Convert a network file to another format.
    Export(ExportArgs),
    /// Print the highest-degree syllables of a stored network.
    Top(TopArgs),
    /// Render a summary table from stored artifacts.
    Table(TableArgs),
    /// Run the whole pipeline: load, syllabify, build, analyze, compare.
    Run(RunArgs),
}

#[derive(Args)]
struct RuleArgs {
    /// Syllabification rule file overriding the Croatian defaults
    /// (keys: vowels, digraphs, onset).
    #[arg(long)]
    rules: Option<PathBuf>,
}

impl RuleArgs {
    fn load(&self) -> Result<RuleSet> {
        match &self.rules {
            Some(path) => RuleSet::from_config_file(path),
            None => Ok(RuleSet::croatian()),
        }
    }
}

#[derive(Args)]
struct VariantArgs {
    /// Linking rule: every syllable pair of a word ("co") or only
    /// adjacent pairs ("fn").
    #[arg(long, default_value = "co")]
    linking: Linking,

    /// Orient edges by within-word order.
    #[arg(long)]
    directed: bool,

    /// Count repeated pairs as edge weights.
    #[arg(long)]
    weighted: bool,
}

impl VariantArgs {
    fn variant(&self) -> NetworkVariant {
        NetworkVariant::new(self.linking, self.directed, self.weighted)
    }
}

#[derive(Args)]
struct ConventionArgs {
    /// Path-length normalization: "connected-pairs" (mean over
    /// unordered connected pairs of the largest component) or
    /// "ordered-with-self" (divide per-node sums by N).
    #[arg(long = "path-norm", default_value = "connected-pairs")]
    path_norm: PathConvention,

    /// Degree-<2 nodes in the clustering average: "zero" (count them
    /// as 0) or "excluded" (drop them).
    #[arg(long = "low-degree", default_value = "zero")]
    low_degree: LowDegreePolicy,
}

impl ConventionArgs {
    fn options(&self) -> MetricsOptions {
        MetricsOptions { path_convention: self.path_norm, low_degree: self.low_degree }
    }
}

#[derive(Args)]
struct CorpusArgs {
    /// Input text files or directories (walked recursively).
    #[arg(required = true)]
    inputs: Vec<PathBuf>,

    /// Provenance label recorded in the network.
    #[arg(long, default_value = "corpus")]
    source_label: String,

    /// Drop tokens containing letters outside the alphabet.
    #[arg(long, default_value_t = true, action = ArgAction::Set, value_name = "BOOL")]
    strict_alphabet: bool,

    /// Token alphabet override, written as a string of letters.
    #[arg(long)]
    alphabet: Option<String>,
}

impl CorpusArgs {
    /// Loads, tokenizes and syllabifies the corpus, reporting counters
    /// on standard error.
    fn read_words(&self, rules: &RuleSet) -> Result<Vec<SyllabifiedWord>> {
        let alphabet = match &self.alphabet {
            Some(letters) => letters.parse::<Alphabet>()?,
            None => Alphabet::croatian(),
        };
        let docs = load_corpus(&self.inputs, &self.source_label)?;
        let config = TokenizerConfig { alphabet, strict: self.strict_alphabet };
        let (tokens, dropped) = tokenize_corpus(&docs, &config);
        let (words, skipped) = syllabify_all(&tokens, rules);
        eprintln!(
            "{} document(s), {} token(s) ({} dropped by alphabet filter), \
             {} word(s) syllabified ({} without nucleus skipped)",
            docs.len(),
            tokens.len() + dropped,
            dropped,
            words.len(),
            skipped
        );
        Ok(words)
    }
}

#[derive(Args)]
struct SyllabifyArgs {
    /// Words to split.
    #[arg(required = true)]
    words: Vec<String>,

    #[command(flatten)]
    rules: RuleArgs,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    corpus: CorpusArgs,

    #[command(flatten)]
    variant: VariantArgs,

    #[command(flatten)]
    rules: RuleArgs,

    /// Remove nodes with degree below this threshold.
    #[arg(long)]
    min_degree: Option<u64>,

    /// Repeat the degree filter until a fixpoint (k-core).
    #[arg(long)]
    iterative_filter: bool,

    /// Output network file (.graphml, .gexf or .csv).
    #[arg(short, long)]
    output: PathBuf,

    /// Output format override (otherwise from the extension).
    #[arg(long)]
    format: Option<GraphFileFormat>,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Network file to analyze.
    network: PathBuf,

    /// Input format override (otherwise from the extension).
    #[arg(long)]
    format: Option<GraphFileFormat>,

    /// Write the measures as JSON here instead of standard output.
    #[arg(long)]
    report: Option<PathBuf>,

    /// Write the degree histogram TSV here; a log-log companion file
    /// is written next to it.
    #[arg(long)]
    degree_dist: Option<PathBuf>,

    /// Also print the given number of highest-degree syllables.
    #[arg(long)]
    top: Option<usize>,

    #[command(flatten)]
    conventions: ConventionArgs,
}

#[derive(Args)]
struct CompareArgs {
    /// Network file to compare.
    network: PathBuf,

    /// Input format override (otherwise from the extension).
    #[arg(long)]
    format: Option<GraphFileFormat>,

    /// Number of random graphs in the ensemble.
    #[arg(long, default_value_t = 30)]
    samples: usize,

    /// Seed for the random ensemble.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Write the comparison JSON here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,

    #[command(flatten)]
    conventions: ConventionArgs,
}

#[derive(Args)]
struct ExportArgs {
    /// Network file to read.
    input: PathBuf,

    /// Input format override (otherwise from the extension).
    #[arg(long)]
    from: Option<GraphFileFormat>,

    /// Destination file.
    #[arg(short, long)]
    output: PathBuf,

    /// Output format override (otherwise from the extension).
    #[arg(long)]
    to: Option<GraphFileFormat>,
}

#[derive(Args)]
struct TopArgs {
    /// Network file to rank.
    network: PathBuf,

    /// Input format override (otherwise from the extension).
    #[arg(long)]
    format: Option<GraphFileFormat>,

    /// How many syllables to print.
    #[arg(short = 'k', long, default_value_t = 10)]
    count: usize,
}

#[derive(Args)]
struct TableArgs {
    /// Which table: table1 (counts), table2 (measures vs ER), table3
    /// (first-neighbour directed vs undirected) or table4 (top
    /// syllables).
    spec: TableSpec,

    /// Network files as NAME=PATH (table1; the first one also feeds
    /// table4). NAME defaults to the file stem.
    #[arg(long = "network", value_name = "NAME=PATH")]
    networks: Vec<String>,

    /// Comparison JSON files as NAME=PATH (table2).
    #[arg(long = "comparison", value_name = "NAME=PATH")]
    comparisons: Vec<String>,

    /// Metrics JSON of the directed first-neighbour network (table3).
    #[arg(long)]
    fn_directed: Option<PathBuf>,

    /// Comparison JSON of the undirected first-neighbour network
    /// (table3).
    #[arg(long)]
    fn_undirected: Option<PathBuf>,

    /// Ranking length for table4.
    #[arg(long, default_value_t = 10)]
    top: usize,

    /// Print the aligned text rendering instead of CSV.
    #[arg(long)]
    text: bool,

    /// Write the table here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    corpus: CorpusArgs,

    #[command(flatten)]
    variant: VariantArgs,

    #[command(flatten)]
    rules: RuleArgs,

    /// Remove nodes with degree below this threshold.
    #[arg(long)]
    min_degree: Option<u64>,

    /// Repeat the degree filter until a fixpoint (k-core).
    #[arg(long)]
    iterative_filter: bool,

    /// Directory that receives every artifact.
    #[arg(short, long)]
    out_dir: PathBuf,

    /// Network file format.
    #[arg(long, default_value = "graphml")]
    format: GraphFileFormat,

    /// Number of random graphs in the ensemble.
    #[arg(long, default_value_t = 30)]
    samples: usize,

    /// Seed for the random ensemble; fixes every random choice of the
    /// run.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Ranking length for the table4 artifact.
    #[arg(long, default_value_t = 10)]
    top: usize,

    /// Summary tables to write (table1..table4); repeatable.
    #[arg(long = "table", value_name = "SPEC")]
    tables: Vec<TableSpec>,

    #[command(flatten)]
    conventions: ConventionArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help/--version print to stdout and exit 0; everything
            // else is a usage error.
            let code = u8::from(err.use_stderr());
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(err) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("syllnet: {err}");
            return ExitCode::from(1);
        }
    }
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("syllnet: {err}");
            ExitCode::from(exit_category(&err))
        }
    }
}

/// 1 usage, 2 I/O, 3 analysis.
fn exit_category(err: &Error) -> u8 {
    match err {
        Error::Config(_) | Error::MissingInput(_) => 1,
        Error::Io { .. } | Error::InvalidUtf8 { .. } | Error::Parse { .. } => 2,
        _ => 3,
    }
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Syllabify(args) => cmd_syllabify(args),
        Command::Build(args) => cmd_build(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Export(args) => cmd_export(args),
        Command::Top(args) => cmd_top(args),
        Command::Table(args) => cmd_table(args),
        Command::Run(args) => cmd_run(args),
    }
}

fn resolve_format(explicit: Option<GraphFileFormat>, path: &Path) -> Result<GraphFileFormat> {
    explicit.or_else(|| GraphFileFormat::from_path(path)).ok_or_else(|| {
        Error::Config(format!(
            "cannot infer a graph format from {:?}; pass --format graphml|gexf|csv",
            path.display().to_string()
        ))
    })
}

fn read_network(path: &Path, explicit: Option<GraphFileFormat>) -> Result<SyllableNetwork> {
    import_graph(path, resolve_format(explicit, path)?)
}

fn write_or_print(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(path) => fs::write(path, text).map_err(|e| Error::io(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_syllabify(args: SyllabifyArgs) -> Result<()> {
    let rules = args.rules.load()?;
    let mut lines = String::new();
    for word in &args.words {
        let token = Token {
            surface: corpus::normalize(word).to_lowercase(),
            doc_id: "argument".to_owned(),
        };
        let split = syllabify(&token, &rules)?;
        lines.push_str(&split.dotted());
        lines.push('\n');
    }
    print!("{lines}");
    Ok(())
}

/// Builds the network and applies the degree filter; shared by `build`
/// and `run`.
fn assemble_network(
    words: &[SyllabifiedWord],
    variant: NetworkVariant,
    source_label: &str,
    min_degree: Option<u64>,
    iterative: bool,
) -> Result<SyllableNetwork> {
    let mut accumulator = EdgeAccumulator::new(variant);
    accumulator.add_provenance(source_label);
    for word in words {
        accumulator.add_word(word);
    }
    let mut network = accumulator.finish();
    if let Some(k_min) = min_degree {
        network = filter_min_degree(&network, k_min, iterative);
    }
    if network.node_count() == 0 {
        return Err(Error::EmptyNetwork);
    }
    Ok(network)
}

fn cmd_build(args: BuildArgs) -> Result<()> {
    let rules = args.rules.load()?;
    let words = args.corpus.read_words(&rules)?;
    let network = assemble_network(
        &words,
        args.variant.variant(),
        &args.corpus.source_label,
        args.min_degree,
        args.iterative_filter,
    )?;
    let format = resolve_format(args.format, &args.output)?;
    export_graph(&network, format, &args.output)?;
    eprintln!(
        "wrote {} ({}; N={}, K={})",
        args.output.display(),
        network.variant(),
        network.node_count(),
        network.edge_count()
    );
    Ok(())
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<()> {
    let network = read_network(&args.network, args.format)?;
    let metrics = NetworkMetrics::compute(&network, args.conventions.options())?;
    write_or_print(&metrics_json(&metrics), args.report.as_deref())?;
    if let Some(path) = &args.degree_dist {
        emit_degree_distribution(&degree_distribution(&network), path)?;
    }
    if let Some(k) = args.top {
        let mut lines = String::new();
        for (syllable, degree) in top_k_by_degree(&network, k) {
            lines.push_str(&format!("{syllable}\t{degree}\n"));
        }
        print!("{lines}");
    }
    Ok(())
}

fn cmd_compare(args: CompareArgs) -> Result<()> {
    let network = read_network(&args.network, args.format)?;
    let report = compare_with_er(&network, args.samples, args.seed, args.conventions.options())?;
    write_or_print(&comparison_json(&report), args.output.as_deref())
}

fn cmd_export(args: ExportArgs) -> Result<()> {
    let network = read_network(&args.input, args.from)?;
    let format = resolve_format(args.to, &args.output)?;
    export_graph(&network, format, &args.output)
}

fn cmd_top(args: TopArgs) -> Result<()> {
    let network = read_network(&args.network, args.format)?;
    if network.node_count() == 0 {
        return Err(Error::EmptyNetwork);
    }
    let mut lines = String::new();
    for (syllable, degree) in top_k_by_degree(&network, args.count) {
        lines.push_str(&format!("{syllable}\t{degree}\n"));
    }
    print!("{lines}");
    Ok(())
}

/// "name=path" or bare "path" (name := file stem).
fn parse_named_path(value: &str) -> (String, PathBuf) {
    match value.split_once('=') {
        Some((name, path)) => (name.to_owned(), PathBuf::from(path)),
        None => {
            let path = PathBuf::from(value);
            let name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| value.to_owned());
            (name, path)
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        path: path.to_owned(),
        context: format!("line {}", e.line()),
        message: e.to_string(),
    })
}

fn cmd_table(args: TableArgs) -> Result<()> {
    let networks: Vec<(String, SyllableNetwork)> = args
        .networks
        .iter()
        .map(|value| {
            let (name, path) = parse_named_path(value);
            Ok((name, read_network(&path, None)?))
        })
        .collect::<Result<_>>()?;
    let comparisons: Vec<(String, ComparisonReport)> = args
        .comparisons
        .iter()
        .map(|value| {
            let (name, path) = parse_named_path(value);
            Ok((name, read_json(&path)?))
        })
        .collect::<Result<_>>()?;
    let fn_directed: Option<NetworkMetrics> =
        args.fn_directed.as_deref().map(read_json).transpose()?;
    let fn_undirected: Option<ComparisonReport> =
        args.fn_undirected.as_deref().map(read_json).transpose()?;

    let inputs = TableInputs {
        networks: networks.iter().map(|(name, net)| (name.as_str(), net)).collect(),
        comparisons: comparisons.iter().map(|(name, rep)| (name.as_str(), rep)).collect(),
        fn_directed: fn_directed.as_ref(),
        fn_undirected: fn_undirected.as_ref(),
        top: networks.first().map(|(_, net)| top_k_by_degree(net, args.top)),
    };
    let rendering = emit_table(args.spec, &inputs)?;
    let body = if args.text { &rendering.text } else { &rendering.csv };
    write_or_print(body, args.output.as_deref())
}

fn network_file_name(format: GraphFileFormat) -> &'static str {
    match format {
        GraphFileFormat::GraphML => "network.graphml",
        GraphFileFormat::Gexf => "network.gexf",
        GraphFileFormat::EdgeCsv => "network.csv",
    }
}

fn table_file_name(spec: TableSpec) -> &'static str {
    match spec {
        TableSpec::Table1Counts => "table1.csv",
        TableSpec::Table2Metrics => "table2.csv",
        TableSpec::Table3FnMetrics => "table3.csv",
        TableSpec::Table4TopSyllables => "table4.csv",
    }
}

fn cmd_run(args: RunArgs) -> Result<()> {
    let rules = args.rules.load()?;
    let words = args.corpus.read_words(&rules)?;
    let variant = args.variant.variant();
    let network = assemble_network(
        &words,
        variant,
        &args.corpus.source_label,
        args.min_degree,
        args.iterative_filter,
    )?;
    fs::create_dir_all(&args.out_dir).map_err(|e| Error::io(&args.out_dir, e))?;
    let artifact = |name: &str| args.out_dir.join(name);

    let network_path = artifact(network_file_name(args.format));
    export_graph(&network, args.format, &network_path)?;
    eprintln!("wrote {}", network_path.display());

    let options = args.conventions.options();
    let metrics = NetworkMetrics::compute(&network, options)?;
    fs_write(&artifact("metrics.json"), &metrics_json(&metrics))?;

    let dist_path = artifact("degree_dist.tsv");
    emit_degree_distribution(&degree_distribution(&network), &dist_path)?;
    eprintln!("wrote {}", dist_path.display());

    let comparison = compare_with_er(&network, args.samples, args.seed, options)?;
    fs_write(&artifact("comparison.json"), &comparison_json(&comparison))?;

    let ranking = top_k_by_degree(&network, args.top);

    // Table 3 contrasts the directed first-neighbour network with its
    // undirected transform, so those two are derived on demand.
    let mut fn_directed_metrics = None;
    let mut fn_undirected_report = None;
    if args.tables.contains(&TableSpec::Table3FnMetrics) {
        let fn_variant = NetworkVariant::new(Linking::FirstNeighbour, true, variant.weighted);
        let fn_directed = assemble_network(
            &words,
            fn_variant,
            &args.corpus.source_label,
            args.min_degree,
            args.iterative_filter,
        )?;
        fn_directed_metrics = Some(NetworkMetrics::compute(&fn_directed, options)?);
        let fn_undirected = to_undirected_unweighted(&fn_directed);
        fn_undirected_report =
            Some(compare_with_er(&fn_undirected, args.samples, args.seed, options)?);
    }

    for &spec in &args.tables {
        let inputs = TableInputs {
            networks: vec![(args.corpus.source_label.as_str(), &network)],
            comparisons: vec![(args.corpus.source_label.as_str(), &comparison)],
            fn_directed: fn_directed_metrics.as_ref(),
            fn_undirected: fn_undirected_report.as_ref(),
            top: Some(ranking.clone()),
        };
        fs_write(&artifact(table_file_name(spec)), &emit_table(spec, &inputs)?.csv)?;
    }

    let ratio = if comparison.clustering_ratio.is_finite() {
        format!("{:.1}", comparison.clustering_ratio)
    } else {
        "inf".to_owned()
    };
    print!(
        "N {}\nK {}\n<k> {:.2}\nD {}\nL {:.3}\nC {:.3}\nC/C_ER {}\n",
        metrics.n,
        metrics.k,
        metrics.avg_degree,
        metrics.diameter,
        metrics.avg_path_length,
        metrics.avg_clustering,
        ratio
    );
    Ok(())
}

fn fs_write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::io(path, e))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}
