//! Seeded input generators shared by the benchmarks.

use plactic::{Alphabet, LetterWord, Row};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random row with exactly `len` letters.
pub fn random_row(rng: &mut ChaCha8Rng, alphabet: Alphabet, len: u64) -> Row {
    let mut counts = vec![0u64; alphabet.size()];
    for _ in 0..len {
        counts[rng.gen_range(0..alphabet.size())] += 1;
    }
    Row::from_counts(counts).expect("len ≥ 1 gives a nonempty row")
}

/// A uniformly random word with exactly `len` letters.
pub fn random_word(rng: &mut ChaCha8Rng, alphabet: Alphabet, len: usize) -> LetterWord {
    let letters: Vec<u64> = (0..len)
        .map(|_| rng.gen_range(1..=alphabet.size() as u64))
        .collect();
    LetterWord::new(alphabet, &letters).expect("letters are drawn in range")
}
