//! Corpus loading, Unicode normalization and tokenization.
//!
//! Documents are plain-text UTF-8 files. Text is normalized to canonical
//! composition (NFC) on load, so decomposed diacritics such as `c` +
//! combining caron compare equal to the precomposed letter. Tokens are
//! maximal runs of alphabetic characters, lowercased; everything else
//! (digits, punctuation, whitespace, apostrophes) separates tokens.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use unicode_normalization::{is_nfc, UnicodeNormalization};

use crate::error::{Error, Result};

/// The letters a token may consist of.
///
/// The default covers the Croatian Latin alphabet: a b c č ć d đ e f g h i
/// j k l m n o p r s š t u v z ž. The digraphs lj, nj and dž are written
/// with these letters and are recognized later, at the syllable level.
/// q, w, x and y are excluded by default so that foreign words can be
/// filtered out before they pollute the network.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: std::collections::BTreeSet<char>,
}

pub const CROATIAN_LETTERS: &str = "abcčćdđefghijklmnoprsštuvzž";

impl Alphabet {
    pub fn croatian() -> Self {
        CROATIAN_LETTERS.parse().expect("default alphabet is valid")
    }

    pub fn contains(&self, c: char) -> bool {
        self.letters.contains(&c)
    }

    pub fn letters(&self) -> impl Iterator<Item = char> + '_ {
        self.letters.iter().copied()
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Self::croatian()
    }
}

impl FromStr for Alphabet {
    type Err = Error;

    /// Parses an alphabet from a string of letters. Whitespace and commas
    /// are ignored; letters are lowercased and NFC-normalized.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = std::collections::BTreeSet::new();
        for c in normalize(s).chars() {
            if c.is_whitespace() || c == ',' {
                continue;
            }
            if !c.is_alphabetic() {
                return Err(Error::Config(format!(
                    "alphabet may only contain letters, got {c:?}"
                )));
            }
            letters.extend(c.to_lowercase());
        }
        if letters.is_empty() {
            return Err(Error::Config("alphabet is empty".into()));
        }
        Ok(Alphabet { letters })
    }
}

/// One loaded text file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawDocument {
    /// Opaque identifier; the file path for loaded corpora.
    pub id: String,
    /// NFC-normalized document text.
    pub text: String,
    /// Corpus label, e.g. "wiki" or "blog".
    pub source_label: String,
}

/// One word token: a lowercase letter string plus its document of origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub doc_id: String,
}

/// Applies canonical composition (NFC). Idempotent.
pub fn normalize(text: &str) -> String {
    if is_nfc(text) {
        text.to_owned()
    } else {
        text.nfc().collect()
    }
}

/// Loads every file under `paths` (directories are walked recursively, in
/// sorted order) as one [`RawDocument`] each.
///
/// Files must be valid UTF-8; a decode failure reports the byte offset of
/// the first invalid sequence. Unreadable paths surface an I/O error
/// naming the path.
pub fn load_corpus<P: AsRef<Path>>(paths: &[P], source_label: &str) -> Result<Vec<RawDocument>> {
    // Source labels end up in graph-file metadata, where these
    // characters act as delimiters.
    if source_label.chars().any(|c| matches!(c, ',' | ';' | '|' | '\n')) {
        return Err(Error::Config(format!(
            "source label {source_label:?} may not contain ',', ';', '|' or newlines"
        )));
    }
    let mut files: Vec<PathBuf> = Vec::new();
    for path in paths {
        let path = path.as_ref();
        let meta = fs::metadata(path).map_err(|e| Error::io(path, e))?;
        if meta.is_dir() {
            let mut entries: Vec<PathBuf> = walkdir::WalkDir::new(path)
                .sort_by_file_name()
                .into_iter()
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| {
                    let at = e.path().map(Path::to_path_buf).unwrap_or_else(|| path.to_path_buf());
                    Error::io(at, e.into())
                })?
                .into_iter()
                .filter(|e| e.file_type().is_file())
                .map(|e| e.into_path())
                .collect();
            entries.sort();
            files.extend(entries);
        } else {
            files.push(path.to_path_buf());
        }
    }

    let mut docs = Vec::with_capacity(files.len());
    for file in files {
        let bytes = fs::read(&file).map_err(|e| Error::io(&file, e))?;
        let text = String::from_utf8(bytes).map_err(|e| Error::InvalidUtf8 {
            path: file.clone(),
            offset: e.utf8_error().valid_up_to(),
        })?;
        docs.push(RawDocument {
            id: file.to_string_lossy().into_owned(),
            text: normalize(&text),
            source_label: source_label.to_owned(),
        });
    }
    Ok(docs)
}

/// How tokens are extracted and filtered.
#[derive(Debug, Clone)]
pub struct TokenizerConfig {
    pub alphabet: Alphabet,
    /// When set, tokens containing any letter outside the alphabet are
    /// dropped entirely (foreign words). When unset they are kept.
    pub strict: bool,
}

impl Default for TokenizerConfig {
    fn default() -> Self {
        TokenizerConfig { alphabet: Alphabet::croatian(), strict: true }
    }
}

/// Splits a document into word tokens.
///
/// A token is a maximal run of alphabetic characters, lowercased. All
/// non-letters act as separators. In strict mode, runs containing any
/// letter outside the configured alphabet are discarded.
pub fn tokenize(doc: &RawDocument, config: &TokenizerConfig) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut run = String::new();
    let mut flush = |run: &mut String| {
        if !run.is_empty() {
            let keep = !config.strict || run.chars().all(|c| config.alphabet.contains(c));
            if keep {
                tokens.push(Token { surface: std::mem::take(run), doc_id: doc.id.clone() });
            } else {
                run.clear();
            }
        }
    };
    for c in doc.text.chars() {
        if c.is_alphabetic() {
            run.extend(c.to_lowercase());
        } else {
            flush(&mut run);
        }
    }
    flush(&mut run);
    tokens
}

/// Tokenizes a whole corpus, counting how many runs strict mode dropped.
pub fn tokenize_corpus(docs: &[RawDocument], config: &TokenizerConfig) -> (Vec<Token>, usize) {
    let mut all = Vec::new();
    let mut dropped = 0usize;
    for doc in docs {
        let lenient = TokenizerConfig { alphabet: config.alphabet.clone(), strict: false };
        let raw = tokenize(doc, &lenient);
        if config.strict {
            for token in raw {
                if token.surface.chars().all(|c| config.alphabet.contains(c)) {
                    all.push(token);
                } else {
                    dropped += 1;
                }
            }
        } else {
            all.extend(raw);
        }
    }
    (all, dropped)
}
