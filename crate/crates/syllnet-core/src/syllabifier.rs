//! Rule-based Croatian syllabification.
//!
//! A word is split into grapheme units (the digraphs lj, nj and dž count
//! as one unit each), nuclei are located, and the consonants between two
//! nuclei are divided by the maximal-onset principle: the longest suffix
//! of the cluster that forms a permissible onset opens the next syllable,
//! the rest closes the previous one.
//!
//! Nuclei are the five vowels plus the syllabic r: an r with no vowel on
//! either side ("prst", "trg", "vrt"). Permissible onsets are, by
//! default, consonant sequences of strictly rising sonority with ranks
//! obstruent(1) < nasal(2) < liquid(3) < glide(4); a single consonant is
//! always permissible. Word-initial and word-final clusters attach whole
//! to the first onset and last coda. Clusters of equal or falling
//! sonority therefore split: "mačka" gives mač·ka, "sestra" gives
//! ses·tra.
//!
//! Digraph matching is greedy with no lexical exceptions, so a morpheme
//! boundary inside a digraph is not recognized: "nadživjeti" segments
//! with one dž unit.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::corpus::Token;
use crate::error::{Error, Result};

/// Sonority ranks. Vowels outrank every consonant.
const RANK_OBSTRUENT: u8 = 1;
const RANK_NASAL: u8 = 2;
const RANK_LIQUID: u8 = 3;
const RANK_GLIDE: u8 = 4;
const RANK_VOWEL: u8 = 5;

/// Which consonant sequences may open a syllable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnsetMode {
    /// Strictly rising sonority; single consonants always allowed.
    Sonority,
    /// At most one consonant.
    CvSimple,
}

impl FromStr for OnsetMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sonority" => Ok(OnsetMode::Sonority),
            "cv-simple" => Ok(OnsetMode::CvSimple),
            other => Err(Error::Config(format!(
                "unknown onset mode {other:?} (expected \"sonority\" or \"cv-simple\")"
            ))),
        }
    }
}

impl fmt::Display for OnsetMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OnsetMode::Sonority => "sonority",
            OnsetMode::CvSimple => "cv-simple",
        })
    }
}

/// The complete rule set: vowels, digraphs, sonority ranks and the onset
/// predicate mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSet {
    vowels: BTreeSet<String>,
    digraphs: Vec<String>,
    sonority: BTreeMap<String, u8>,
    onset_mode: OnsetMode,
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet::croatian()
    }
}

impl RuleSet {
    /// The default Croatian rules.
    pub fn croatian() -> Self {
        let vowels = ["a", "e", "i", "o", "u"];
        let obstruents = [
            "b", "c", "č", "ć", "d", "dž", "đ", "f", "g", "h", "k", "p", "s", "š", "t", "z", "ž",
        ];
        let nasals = ["m", "n", "nj"];
        let liquids = ["l", "lj", "r"];
        let glides = ["v", "j"];

        let mut sonority = BTreeMap::new();
        for c in obstruents {
            sonority.insert(c.to_owned(), RANK_OBSTRUENT);
        }
        for c in nasals {
            sonority.insert(c.to_owned(), RANK_NASAL);
        }
        for c in liquids {
            sonority.insert(c.to_owned(), RANK_LIQUID);
        }
        for c in glides {
            sonority.insert(c.to_owned(), RANK_GLIDE);
        }

        RuleSet {
            vowels: vowels.iter().map(|s| s.to_string()).collect(),
            digraphs: vec!["lj".into(), "nj".into(), "dž".into()],
            sonority,
            onset_mode: OnsetMode::Sonority,
        }
    }

    /// Parses a plain key-value rules file. Recognized keys: `vowels`,
    /// `digraphs` (values space- or comma-separated) and `onset`
    /// (`sonority` or `cv-simple`). Omitted keys keep the Croatian
    /// defaults. `#` starts a comment.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut rules = RuleSet::croatian();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("rules line {}: expected key = value", lineno + 1))
            })?;
            let values: Vec<String> = value
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|v| !v.is_empty())
                .map(|v| v.to_owned())
                .collect();
            match key.trim() {
                "vowels" => {
                    if values.is_empty() {
                        return Err(Error::Config("vowel set may not be empty".into()));
                    }
                    rules.vowels = values.into_iter().collect();
                }
                "digraphs" => rules.digraphs = values,
                "onset" => {
                    rules.onset_mode = value.trim().parse()?;
                }
                other => {
                    return Err(Error::Config(format!(
                        "rules line {}: unknown key {other:?}",
                        lineno + 1
                    )))
                }
            }
        }
        Ok(rules)
    }

    pub fn from_config_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_config_str(&text)
    }

    pub fn onset_mode(&self) -> OnsetMode {
        self.onset_mode
    }

    pub fn is_vowel(&self, unit: &str) -> bool {
        self.vowels.contains(unit)
    }

    /// Sonority rank of a grapheme unit. Unlisted consonants count as
    /// obstruents; vowels outrank everything.
    pub fn rank(&self, unit: &str) -> u8 {
        if self.is_vowel(unit) {
            RANK_VOWEL
        } else {
            self.sonority.get(unit).copied().unwrap_or(RANK_OBSTRUENT)
        }
    }

    /// May `cluster` open a syllable?
    pub fn allowed_onset(&self, cluster: &[&str]) -> bool {
        match self.onset_mode {
            OnsetMode::CvSimple => cluster.len() <= 1,
            OnsetMode::Sonority => {
                cluster.len() <= 1
                    || cluster.windows(2).all(|w| self.rank(w[0]) < self.rank(w[1]))
            }
        }
    }
}

/// One syllable of a word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllable {
    surface: String,
}

impl Syllable {
    pub fn new(surface: impl Into<String>) -> Self {
        Syllable { surface: surface.into() }
    }

    pub fn as_str(&self) -> &str {
        &self.surface
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.surface)
    }
}

/// A token together with its syllable split. Joining the syllables in
/// order reproduces the token surface exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyllabifiedWord {
    pub token: Token,
    pub syllables: Vec<Syllable>,
}

impl SyllabifiedWord {
    /// Middle-dot-joined rendering, e.g. "ma·te·ma·ti·ka".
    pub fn dotted(&self) -> String {
        self.syllables
            .iter()
            .map(Syllable::as_str)
            .collect::<Vec<_>>()
            .join("·")
    }
}

/// Splits a lowercase surface into grapheme units. Digraphs match
/// greedily left to right; every other character is its own unit.
pub fn segment_graphemes<'a>(surface: &'a str, rules: &RuleSet) -> Vec<&'a str> {
    let mut units = Vec::new();
    let mut rest = surface;
    'outer: while !rest.is_empty() {
        for digraph in &rules.digraphs {
            if rest.starts_with(digraph.as_str()) {
                let (unit, tail) = rest.split_at(digraph.len());
                units.push(unit);
                rest = tail;
                continue 'outer;
            }
        }
        let len = rest.chars().next().map(char::len_utf8).unwrap_or(0);
        let (unit, tail) = rest.split_at(len);
        units.push(unit);
        rest = tail;
    }
    units
}

/// Positions of syllable nuclei among `units`, strictly increasing.
///
/// Every vowel is a nucleus. An r is a nucleus when neither neighbouring
/// unit is a vowel (word edges count as non-vowels).
pub fn find_nuclei(units: &[&str], rules: &RuleSet) -> Vec<usize> {
    let mut nuclei = Vec::new();
    for (i, unit) in units.iter().enumerate() {
        if rules.is_vowel(unit) {
            nuclei.push(i);
        } else if *unit == "r" {
            let left_vowel = i > 0 && rules.is_vowel(units[i - 1]);
            let right_vowel = i + 1 < units.len() && rules.is_vowel(units[i + 1]);
            if !left_vowel && !right_vowel {
                nuclei.push(i);
            }
        }
    }
    nuclei
}

/// Splits a lowercase surface into syllable surfaces.
pub fn split_syllables(surface: &str, rules: &RuleSet) -> Result<Vec<Syllable>> {
    let units = segment_graphemes(surface, rules);
    let nuclei = find_nuclei(&units, rules);
    if nuclei.is_empty() {
        return Err(Error::NoNucleus { token: surface.to_owned() });
    }

    // A syllable starts at the word start and after each internal
    // boundary. The boundary between consecutive nuclei sits before the
    // longest cluster suffix that is a permissible onset.
    let mut starts = vec![0usize];
    for pair in nuclei.windows(2) {
        let (prev, next) = (pair[0], pair[1]);
        let mut boundary = prev + 1;
        while boundary < next && !rules.allowed_onset(&units[boundary..next]) {
            boundary += 1;
        }
        starts.push(boundary);
    }
    starts.push(units.len());

    let syllables: Vec<Syllable> = starts
        .windows(2)
        .map(|w| Syllable::new(units[w[0]..w[1]].concat()))
        .collect();

    debug_assert_eq!(
        syllables.iter().map(|s| s.as_str().len()).sum::<usize>(),
        surface.len(),
        "syllables must cover the surface exactly"
    );
    Ok(syllables)
}

/// Syllabifies one token. Tokens without any nucleus (e.g. "hm") fail
/// with [`Error::NoNucleus`]; pipelines skip and count those.
pub fn syllabify(token: &Token, rules: &RuleSet) -> Result<SyllabifiedWord> {
    let syllables = split_syllables(&token.surface, rules)?;
    Ok(SyllabifiedWord { token: token.clone(), syllables })
}

/// Syllabifies a token stream, skipping tokens without a nucleus.
/// Returns the words in input order and the skipped-token count.
pub fn syllabify_all(tokens: &[Token], rules: &RuleSet) -> (Vec<SyllabifiedWord>, usize) {
    let mut words = Vec::with_capacity(tokens.len());
    let mut skipped = 0usize;
    for token in tokens {
        match syllabify(token, rules) {
            Ok(word) => words.push(word),
            Err(_) => skipped += 1,
        }
    }
    (words, skipped)
}
