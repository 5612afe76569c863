//! Seeded synthetic inputs shared by the benchmarks.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use syllnet_core::{syllabify_all, RuleSet, SyllabifiedWord, Token};

const ONSETS: &[&str] = &["", "m", "t", "k", "v", "b", "z", "pr", "st", "gl", "dr", "sl", "nj"];
const NUCLEI: &[&str] = &["a", "e", "i", "o", "u"];
const CODAS: &[&str] = &["n", "m", "r", "st"];

/// Pronounceable pseudo-words, deterministic in `seed`. Every syllable
/// carries a vowel, so all tokens syllabify.
pub fn sample_tokens(count: usize, seed: u64) -> Vec<Token> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let mut surface = String::new();
            for _ in 0..rng.gen_range(1..=5) {
                surface.push_str(ONSETS.choose(&mut rng).unwrap());
                surface.push_str(NUCLEI.choose(&mut rng).unwrap());
            }
            if rng.gen_bool(0.3) {
                surface.push_str(CODAS.choose(&mut rng).unwrap());
            }
            Token { surface, doc_id: format!("bench{}", i % 8) }
        })
        .collect()
}

pub fn sample_words(count: usize, seed: u64) -> Vec<SyllabifiedWord> {
    let (words, skipped) = syllabify_all(&sample_tokens(count, seed), &RuleSet::default());
    assert_eq!(skipped, 0);
    words
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_tokens_all_syllabify() {
        assert_eq!(sample_words(500, 9).len(), 500);
    }

    #[test]
    fn generation_is_deterministic() {
        assert_eq!(sample_tokens(100, 3), sample_tokens(100, 3));
    }
}
