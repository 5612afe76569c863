//! Corpus-to-syllable-network toolkit: syllabify Croatian text, build
//! syllable networks under several linking rules, compute small-world
//! statistics, and compare them against random baselines of equal size.

pub mod baseline;
pub mod corpus;
pub mod error;
pub mod graph_io;
pub mod metrics;
pub mod netbuild;
pub mod network;
pub mod report;
pub mod syllabifier;

pub use baseline::{compare_with_er, expected_er_clustering, generate_er, ComparisonReport, ERConfig};
pub use corpus::{load_corpus, normalize, tokenize, tokenize_corpus};
pub use corpus::{Alphabet, RawDocument, Token, TokenizerConfig};
pub use error::{Error, Result};
pub use graph_io::{export_graph, import_graph, GraphFileFormat};
pub use metrics::{LowDegreePolicy, MetricsOptions, NetworkMetrics, PathConvention};
pub use netbuild::{build_network, filter_min_degree, to_undirected_unweighted, EdgeAccumulator};
pub use network::{Edge, Linking, NetworkVariant, SyllableNetwork};
pub use report::{emit_table, TableInputs, TableRendering, TableSpec};
pub use syllabifier::{syllabify, syllabify_all, RuleSet, Syllable, SyllabifiedWord};
