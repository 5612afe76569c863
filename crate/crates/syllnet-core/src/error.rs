//! Crate-wide error type.

use std::path::PathBuf;

use crate::network::NetworkVariant;

/// Errors produced by the corpus, syllabification, construction, analysis
/// and serialization layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Reading or writing a file failed.
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A file was not valid UTF-8.
    #[error("{path}: invalid UTF-8 at byte offset {offset}")]
    InvalidUtf8 { path: PathBuf, offset: usize },

    /// A token contains neither a vowel nor a syllabic r.
    #[error("token \"{token}\" has no syllable nucleus")]
    NoNucleus { token: String },

    /// Networks with different construction variants cannot be merged.
    #[error("variant mismatch: {left} vs {right}")]
    VariantMismatch {
        left: NetworkVariant,
        right: NetworkVariant,
    },

    /// The operation needs at least one node.
    #[error("network is empty")]
    EmptyNetwork,

    /// A syllable label was not found in the network.
    #[error("node \"{0}\" not found")]
    NodeNotFound(String),

    /// The metric has no defined value on this input.
    #[error("undefined: {0}")]
    Undefined(&'static str),

    /// Clustering is only defined on undirected networks; transform first.
    #[error("operation requires an undirected network (transform directed networks first)")]
    RequiresUndirected,

    /// A random-graph request exceeds the number of available node pairs.
    #[error("cannot place {edges} edges among {nodes} nodes (at most {max} simple edges)")]
    TooManyEdges { nodes: usize, edges: usize, max: u64 },

    /// A graph or distribution file did not parse.
    #[error("{path}: {context}: {message}")]
    Parse {
        path: PathBuf,
        /// Line number or element name closest to the failure.
        context: String,
        message: String,
    },

    /// A table was requested without the inputs it needs.
    #[error("missing table input: {0}")]
    MissingInput(&'static str),

    /// Invalid configuration value or flag combination.
    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
