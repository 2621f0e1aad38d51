//! Brute-force congruence oracle on letter words.
//!
//! Deliberately naive: neighbors come from matching the two defining
//! relations literally in three-letter windows, and classes are BFS
//! closures with a visited set. Everything else in the crate is validated
//! against this module.

use std::collections::{BTreeSet, VecDeque};

use crate::alphabet::{Letter, LetterWord};
use crate::error::{Error, Result};

/// Default bound on the number of words explored per class.
pub const DEFAULT_FUEL: usize = 1_000_000;

/// A congruence class: the set of words reachable by single rewrites.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CongruenceClass {
    members: BTreeSet<LetterWord>,
}

impl CongruenceClass {
    /// The members in sorted order.
    pub fn members(&self) -> &BTreeSet<LetterWord> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, word: &LetterWord) -> bool {
        self.members.contains(word)
    }
}

/// All words one rewrite away from `word`.
///
/// The two relations are applied at every three-letter window, each in both
/// directions:
///
/// ```text
/// x z y = z x y   (x ≤ y < z)   — swaps the window's first two letters
/// y x z = y z x   (x < y ≤ z)   — swaps the window's last two letters
/// ```
pub fn knuth_neighbors(word: &LetterWord) -> BTreeSet<LetterWord> {
    let letters = word.letters();
    let mut out = BTreeSet::new();
    if letters.len() < 3 {
        return out;
    }
    for i in 0..=letters.len() - 3 {
        let (a, b, c) = (
            letters[i].value(),
            letters[i + 1].value(),
            letters[i + 2].value(),
        );
        // x z y → z x y with (x, z, y) = (a, b, c): x ≤ y < z
        // z x y → x z y with (z, x, y) = (a, b, c): x ≤ y < z
        if (a <= c && c < b) || (b <= c && c < a) {
            out.insert(swap_letters(word, i, i + 1));
        }
        // y x z → y z x with (y, x, z) = (a, b, c): x < y ≤ z
        // y z x → y x z with (y, z, x) = (a, b, c): x < y ≤ z
        if (b < a && a <= c) || (c < a && a <= b) {
            out.insert(swap_letters(word, i + 1, i + 2));
        }
    }
    out
}

fn swap_letters(word: &LetterWord, i: usize, j: usize) -> LetterWord {
    let mut letters: Vec<Letter> = word.letters().to_vec();
    letters.swap(i, j);
    LetterWord::from_letters(word.alphabet(), letters)
}

/// BFS closure of `word` under [`knuth_neighbors`], with the default fuel.
pub fn congruence_class(word: &LetterWord) -> Result<CongruenceClass> {
    congruence_class_with_fuel(word, DEFAULT_FUEL)
}

/// BFS closure with an explicit bound on the class size.
pub fn congruence_class_with_fuel(word: &LetterWord, fuel: usize) -> Result<CongruenceClass> {
    let mut members = BTreeSet::new();
    let mut queue = VecDeque::new();
    members.insert(word.clone());
    queue.push_back(word.clone());
    while let Some(current) = queue.pop_front() {
        for neighbor in knuth_neighbors(&current) {
            if members.insert(neighbor.clone()) {
                if members.len() > fuel {
                    return Err(Error::FuelExhausted { fuel });
                }
                queue.push_back(neighbor);
            }
        }
    }
    Ok(CongruenceClass { members })
}

/// Whether `u` and `v` are congruent, by membership in the BFS class.
pub fn oracle_equivalent(u: &LetterWord, v: &LetterWord) -> Result<bool> {
    assert_eq!(
        u.alphabet(),
        v.alphabet(),
        "congruence requires a common alphabet"
    );
    if u == v {
        return Ok(true);
    }
    if u.len() != v.len() {
        // rewrites preserve length, so distinct lengths can never meet
        return Ok(false);
    }
    Ok(congruence_class(u)?.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn word(n: usize, text: &str) -> LetterWord {
        LetterWord::parse(Alphabet::new(n).unwrap(), text).unwrap()
    }

    fn class_words(n: usize, text: &str) -> Vec<String> {
        congruence_class(&word(n, text))
            .unwrap()
            .members()
            .iter()
            .map(|w| w.to_string())
            .collect()
    }

    #[test]
    fn neighbor_examples() {
        let neighbors: Vec<String> = knuth_neighbors(&word(3, "132"))
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(neighbors, vec!["312"]);

        let neighbors: Vec<String> = knuth_neighbors(&word(3, "213"))
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(neighbors, vec!["231"]);

        assert!(knuth_neighbors(&word(3, "111")).is_empty());
    }

    #[test]
    fn neighbors_are_symmetric() {
        let a = Alphabet::new(3).unwrap();
        let mut words = vec![Vec::new()];
        for _ in 0..4 {
            words = words
                .into_iter()
                .flat_map(|w: Vec<u64>| {
                    (1..=3u64).map(move |l| {
                        let mut next = w.clone();
                        next.push(l);
                        next
                    })
                })
                .collect();
        }
        for w in &words {
            let u = LetterWord::new(a, w).unwrap();
            for v in knuth_neighbors(&u) {
                assert!(
                    knuth_neighbors(&v).contains(&u),
                    "asymmetric rewrite {u} → {v}"
                );
            }
        }
    }

    #[test]
    fn class_examples() {
        assert_eq!(class_words(3, "21"), vec!["21"]);
        assert_eq!(class_words(3, "132"), vec!["132", "312"]);
        assert_eq!(class_words(3, "123"), vec!["123"]);
    }

    #[test]
    fn oracle_equivalence_examples() {
        assert!(oracle_equivalent(&word(3, "132"), &word(3, "312")).unwrap());
        assert!(!oracle_equivalent(&word(3, "123"), &word(3, "213")).unwrap());
        assert!(oracle_equivalent(&word(3, "2121"), &word(3, "2121")).unwrap());
    }

    #[test]
    fn classes_preserve_multisets() {
        let w = word(3, "13221");
        for member in congruence_class(&w).unwrap().members() {
            let mut counts = [0u64; 3];
            for l in member.letters() {
                counts[(l.value() - 1) as usize] += 1;
            }
            assert_eq!(counts, [2, 2, 1]);
        }
    }

    #[test]
    fn fuel_exhaustion_is_reported() {
        let w = word(3, "132");
        assert!(matches!(
            congruence_class_with_fuel(&w, 1),
            Err(Error::FuelExhausted { fuel: 1 })
        ));
    }
}
