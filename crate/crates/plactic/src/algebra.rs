//! The monoid algebra over exact rationals, with tableaux as the basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::rowword::RowWord;
use crate::tableau::{normal_form_rowword, tableau_multiply, Tableau};

/// A finite linear combination of tableaux with nonzero rational
/// coefficients; the empty combination is zero. Terms are kept in the
/// tableau term order, so printing is deterministic.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "ElementData", into = "ElementData")]
pub struct AlgebraElement {
    alphabet: Alphabet,
    terms: BTreeMap<Tableau, BigRational>,
}

/// Serialized form: coefficients as exact `numer/denom` strings.
#[derive(Clone, Serialize, Deserialize)]
pub struct ElementData {
    pub n: usize,
    pub terms: Vec<TermData>,
}

#[derive(Clone, Serialize, Deserialize)]
pub struct TermData {
    pub coeff: String,
    pub rows: Vec<Vec<u64>>,
}

impl AlgebraElement {
    /// The zero element.
    pub fn zero(alphabet: Alphabet) -> Self {
        AlgebraElement {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity: the empty tableau with coefficient 1.
    pub fn one(alphabet: Alphabet) -> Self {
        AlgebraElement::monomial(Tableau::identity(alphabet), BigRational::one())
    }

    /// A single term; a zero coefficient yields the zero element.
    pub fn monomial(tableau: Tableau, coeff: BigRational) -> Self {
        let alphabet = tableau.alphabet();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(tableau, coeff);
        }
        AlgebraElement { alphabet, terms }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending tableau order.
    pub fn terms(&self) -> impl Iterator<Item = (&Tableau, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, tableau: &Tableau) -> BigRational {
        self.terms.get(tableau).cloned().unwrap_or_else(BigRational::zero)
    }

    fn insert(&mut self, tableau: Tableau, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(tableau) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    slot.insert(sum);
                }
            }
        }
    }

    /// Parses `q1*T1 + q2*T2 + …` where each `q` is an integer or
    /// `numer/denom`, each `T` uses the row-word syntax (`ε` for the empty
    /// tableau), and a bare rational stands for a multiple of the identity.
    /// `0` is the zero element.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut result = AlgebraElement::zero(alphabet);
        if text == "0" {
            return Ok(result);
        }
        for (negative, chunk) in split_terms(text)? {
            let (coeff, word_text) = match chunk.split_once('*') {
                Some((coeff_text, word_text)) => {
                    let coeff = parse_rational(coeff_text.trim())?;
                    (coeff, word_text.trim())
                }
                None => {
                    let chunk = chunk.trim();
                    match parse_rational(chunk) {
                        Ok(coeff) => (coeff, "ε"),
                        Err(_) => (BigRational::one(), chunk),
                    }
                }
            };
            let coeff = if negative { -coeff } else { coeff };
            let word = RowWord::parse(alphabet, word_text)?;
            let reduced = reduce_free_word(&word, coeff);
            result = &result + &reduced;
        }
        Ok(result)
    }
}

/// Splits an element expression at top-level `+`/`-`, returning each term
/// with its sign.
fn split_terms(text: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for c in text.chars() {
        match c {
            '+' | '-' if current.trim().is_empty() => {
                if c == '-' {
                    negative = !negative;
                }
            }
            '+' | '-' => {
                out.push((negative, std::mem::take(&mut current)));
                negative = c == '-';
            }
            _ => current.push(c),
        }
    }
    if current.trim().is_empty() {
        return Err(Error::parse(text, "element ends with a dangling operator"));
    }
    out.push((negative, current));
    Ok(out)
}

fn parse_rational(text: &str) -> Result<BigRational> {
    BigRational::from_str(text)
        .map_err(|_| Error::parse(text, "expected an integer or numer/denom rational"))
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (tableau, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}*{tableau}")?;
        }
        Ok(())
    }
}

impl TryFrom<ElementData> for AlgebraElement {
    type Error = Error;

    fn try_from(data: ElementData) -> Result<Self> {
        let alphabet = Alphabet::new(data.n)?;
        let mut element = AlgebraElement::zero(alphabet);
        for term in data.terms {
            let tableau = Tableau::try_from(crate::tableau::TableauData {
                n: data.n,
                rows: term.rows,
            })?;
            element.insert(tableau, parse_rational(&term.coeff)?);
        }
        Ok(element)
    }
}

impl From<AlgebraElement> for ElementData {
    fn from(element: AlgebraElement) -> Self {
        ElementData {
            n: element.alphabet.size(),
            terms: element
                .terms
                .iter()
                .map(|(t, c)| TermData {
                    coeff: c.to_string(),
                    rows: t.rows().iter().map(|r| r.counts().to_vec()).collect(),
                })
                .collect(),
        }
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(
            self.alphabet, other.alphabet,
            "algebra elements must share an alphabet"
        );
        let mut out = self.clone();
        for (tableau, coeff) in &other.terms {
            out.insert(tableau.clone(), coeff.clone());
        }
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            alphabet: self.alphabet,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, other: &AlgebraElement) -> AlgebraElement {
        self + &(-other)
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;

    /// Bilinear extension of the tableau product.
    fn mul(self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(
            self.alphabet, other.alphabet,
            "algebra elements must share an alphabet"
        );
        let mut out = AlgebraElement::zero(self.alphabet);
        for (left, lc) in &self.terms {
            for (right, rc) in &other.terms {
                out.insert(tableau_multiply(left, right), lc * rc);
            }
        }
        out
    }
}

/// Maps a free word to `coeff` times its normal form. Extends linearly to
/// the canonical-form map on the whole free algebra.
pub fn reduce_free_word(word: &RowWord, coeff: BigRational) -> AlgebraElement {
    AlgebraElement::monomial(normal_form_rowword(word), coeff)
}

/// Whether `Σ coeffᵢ · wordᵢ` lies in the ideal of the defining relations,
/// decided by reducing every term to the tableau basis.
pub fn is_zero_mod_ideal(expression: &[(RowWord, BigRational)]) -> bool {
    let Some(first) = expression.first() else {
        return true;
    };
    let mut sum = AlgebraElement::zero(first.0.alphabet());
    for (word, coeff) in expression {
        sum = &sum + &reduce_free_word(word, coeff.clone());
    }
    sum.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn alphabet(n: usize) -> Alphabet {
        Alphabet::new(n).unwrap()
    }

    fn rational(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn tab(n: usize, text: &str) -> Tableau {
        Tableau::parse(alphabet(n), text).unwrap()
    }

    fn element(n: usize, text: &str) -> AlgebraElement {
        AlgebraElement::parse(alphabet(n), text).unwrap()
    }

    #[test]
    fn addition_merges_and_prunes() {
        let two = AlgebraElement::monomial(tab(2, "12"), rational(2));
        let three = AlgebraElement::monomial(tab(2, "12"), rational(3));
        assert_eq!(&two + &three, element(2, "5*12"));

        let x = element(2, "2*12 + 1*2·1");
        assert_eq!(&x + &AlgebraElement::zero(alphabet(2)), x);

        let one_term = AlgebraElement::monomial(tab(2, "1"), rational(1));
        assert!((&one_term + &-&one_term).is_zero());
    }

    #[test]
    fn multiplication_reduces_monomials() {
        let a = AlgebraElement::monomial(tab(2, "2"), rational(1));
        let b = AlgebraElement::monomial(tab(2, "12"), rational(1));
        let c = AlgebraElement::monomial(tab(2, "1"), rational(1));
        let product = &(&a * &b) * &c;
        assert_eq!(product, element(2, "1*22·11"));

        let one = AlgebraElement::one(alphabet(2));
        assert_eq!(&product * &one, product);
        assert_eq!(&one * &product, product);

        let sum = element(2, "1*1 + 1*2");
        let expanded = &sum * &c;
        assert_eq!(expanded, element(2, "1*11 + 1*2·1"));
    }

    #[test]
    fn reduction_examples() {
        let word = RowWord::parse(alphabet(2), "11·2").unwrap();
        assert_eq!(
            reduce_free_word(&word, rational(1)),
            element(2, "1*112")
        );

        let empty = RowWord::empty(alphabet(2));
        assert_eq!(
            reduce_free_word(&empty, rational(5)),
            AlgebraElement::monomial(Tableau::identity(alphabet(2)), rational(5))
        );

        let fixed = RowWord::parse(alphabet(2), "22·11").unwrap();
        assert_eq!(reduce_free_word(&fixed, rational(2)), element(2, "2*22·11"));
    }

    #[test]
    fn ideal_membership_examples() {
        let letters = |text: &str| {
            let word = crate::alphabet::LetterWord::parse(alphabet(3), text).unwrap();
            RowWord::from_letter_word(&word)
        };
        assert!(is_zero_mod_ideal(&[
            (letters("132"), rational(1)),
            (letters("312"), rational(-1)),
        ]));
        assert!(!is_zero_mod_ideal(&[
            (letters("123"), rational(1)),
            (letters("213"), rational(-1)),
        ]));
        assert!(is_zero_mod_ideal(&[]));
    }

    #[test]
    fn parse_display_roundtrip() {
        let samples = [
            "0",
            "1*ε",
            "5*12",
            "-1/2*2·1 + 3*11",
            "1*22·11",
        ];
        for text in samples {
            let parsed = element(2, text);
            let printed = parsed.to_string();
            assert_eq!(element(2, &printed), parsed, "roundtrip failed for {text}");
        }
        // parsing reduces: a non-tableau word folds onto the basis
        assert_eq!(element(2, "1*11·2"), element(2, "1*112"));
        // signs combine across terms
        assert_eq!(element(2, "1*11 - 1*11"), AlgebraElement::zero(alphabet(2)));
    }

    #[test]
    fn json_roundtrip() {
        let x = element(2, "-1/2*2·1 + 3*11");
        let json = serde_json::to_string(&x).unwrap();
        let back: AlgebraElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn ring_axioms_on_a_small_family() {
        let a = alphabet(3);
        let mut family = vec![
            AlgebraElement::zero(a),
            AlgebraElement::one(a),
            element(3, "1*12 + 1*3"),
            element(3, "-2*2·1"),
            element(3, "1/2*123 + 1*2·1·3"),
        ];
        let half = AlgebraElement::monomial(tab(3, "2"), BigRational::new(1.into(), 2.into()));
        family.push(half);
        for x in &family {
            for y in &family {
                assert_eq!(&(x + y), &(y + x));
                for z in &family {
                    assert_eq!(&(&(x + y) + z), &(x + &(y + z)));
                    assert_eq!(&(&(x * y) * z), &(x * &(y * z)));
                    assert_eq!(&(x * &(y + z)), &(&(x * y) + &(x * z)));
                    assert_eq!(&(&(x + y) * z), &(&(x * z) + &(y * z)));
                }
            }
        }
    }
}
