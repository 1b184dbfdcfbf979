//! Finite words over a graded alphabet: the universal crystal carrier.

use crate::alphabet::{GradedAlphabet, Letter};
use crate::error::Result;
use crate::weight::Weight;

/// A finite (possibly empty) sequence of letters. The alphabet is passed
/// as context to the operations that need it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&self, l: Letter) -> Word {
        let mut v = self.0.clone();
        v.push(l);
        Word(v)
    }

    /// Sum of the epsilons of the letters; the empty word has weight 0.
    pub fn weight(&self) -> Weight {
        Weight::from_letters(self.0.iter().copied())
    }

    pub fn display(&self, alphabet: &GradedAlphabet) -> String {
        self.0
            .iter()
            .map(|l| alphabet.display(*l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses a space-separated sequence of letter displays.
    pub fn parse(s: &str, alphabet: &GradedAlphabet) -> Result<Word> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            letters.push(alphabet.parse_letter(tok)?);
        }
        Ok(Word(letters))
    }

    pub fn check(&self, alphabet: &GradedAlphabet) -> Result<()> {
        for l in &self.0 {
            alphabet.check_letter(*l)?;
        }
        Ok(())
    }
}

/// All words of exactly length `len` over the alphabet, in lexicographic
/// order.
pub fn words_of_length(alphabet: &GradedAlphabet, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * alphabet.len());
        for w in &out {
            for l in alphabet.letters() {
                next.push(w.push(l));
            }
        }
        out = next;
    }
    out
}

/// All words of length at most `len`, shortest first.
pub fn words_up_to_length(alphabet: &GradedAlphabet, len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for r in 0..=len {
        out.extend(words_of_length(alphabet, r));
    }
    out
}
