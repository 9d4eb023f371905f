//! Alphabets, words and rearrangement classes.
//!
//! Letters are the integers `1..=r`. A [`Composition`] records how many times
//! each letter occurs; the words sharing a composition form its rearrangement
//! class, which [`enumerate_class`] walks in lexicographic order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

pub type Letter = usize;

/// The alphabet `[r] = {1, ..., r}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    size: usize,
}

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::Input("alphabet size must be at least 1".into()));
        }
        Ok(Alphabet { size })
    }

    pub fn size(self) -> usize {
        self.size
    }

    pub fn contains(self, letter: Letter) -> bool {
        (1..=self.size).contains(&letter)
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        1..=self.size
    }
}

/// A finite sequence of letters over `[r]`. The empty word is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet_size: usize,
}

impl Word {
    pub fn new(letters: Vec<Letter>, alphabet_size: usize) -> Result<Self> {
        Alphabet::new(alphabet_size)?;
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l > alphabet_size) {
            return Err(Error::LetterOutOfRange {
                letter: bad,
                size: alphabet_size,
            });
        }
        Ok(Word {
            letters,
            alphabet_size,
        })
    }

    pub fn empty(alphabet_size: usize) -> Result<Self> {
        Word::new(Vec::new(), alphabet_size)
    }

    /// Parses the text form: whitespace-separated decimal letters. The empty
    /// (or all-blank) string is the empty word.
    pub fn parse(text: &str, alphabet_size: usize) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Letter>()
                    .map_err(|_| Error::Input(format!("not a letter: {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters, alphabet_size)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet {
            size: self.alphabet_size,
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// The word followed by one more letter.
    pub fn appended(&self, letter: Letter) -> Result<Word> {
        let mut letters = self.letters.clone();
        letters.push(letter);
        Word::new(letters, self.alphabet_size)
    }

    pub fn composition(&self) -> Composition {
        composition_of(self)
    }

    /// Assumes the letters were already validated against `alphabet_size`.
    pub(crate) fn from_trusted(letters: Vec<Letter>, alphabet_size: usize) -> Word {
        debug_assert!(letters.iter().all(|&l| l >= 1 && l <= alphabet_size));
        Word {
            letters,
            alphabet_size,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Letter multiplicities `(c(1), ..., c(r))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    counts: Vec<usize>,
}

impl Composition {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::Input(
                "a composition needs at least one letter count".into(),
            ));
        }
        Ok(Composition { counts })
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn alphabet_size(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.counts[letter - 1]
    }

    pub fn weight(&self) -> usize {
        self.counts.iter().sum()
    }

    /// The non-decreasing word `1^c(1) 2^c(2) ... r^c(r)`.
    pub fn base_word(&self) -> Word {
        let letters = self
            .counts
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(i + 1, c))
            .collect();
        Word::from_trusted(letters, self.counts.len())
    }

    /// Every composition over `[r]` with weight exactly `weight`, in
    /// lexicographic order of count vectors.
    pub fn all_of_weight(r: usize, weight: usize) -> Result<Vec<Composition>> {
        Alphabet::new(r)?;
        let mut out = Vec::new();
        let mut counts = vec![0; r];
        fill_compositions(&mut counts, 0, weight, &mut out);
        Ok(out)
    }

    /// Every composition over `[r]` with weight at most `max_weight`, ordered
    /// by weight and then lexicographically.
    pub fn all_up_to(r: usize, max_weight: usize) -> Result<Vec<Composition>> {
        let mut out = Vec::new();
        for w in 0..=max_weight {
            out.extend(Composition::all_of_weight(r, w)?);
        }
        Ok(out)
    }
}

fn fill_compositions(counts: &mut [usize], pos: usize, left: usize, out: &mut Vec<Composition>) {
    if pos + 1 == counts.len() {
        counts[pos] = left;
        out.push(Composition {
            counts: counts.to_vec(),
        });
        return;
    }
    for c in 0..=left {
        counts[pos] = c;
        fill_compositions(counts, pos + 1, left - c, out);
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Comma-separated counts, e.g. `"1,1,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let counts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>()
                    .map_err(|_| Error::Input(format!("not a count: {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(counts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn composition_of(w: &Word) -> Composition {
    let mut counts = vec![0; w.alphabet_size];
    for &l in &w.letters {
        counts[l - 1] += 1;
    }
    Composition { counts }
}

/// Iterator over a rearrangement class in lexicographic order.
///
/// Starts from the non-decreasing word and steps with the classical
/// next-permutation rule, which skips repeated arrangements of equal letters.
#[derive(Debug, Clone)]
pub struct ClassIter {
    current: Option<Vec<Letter>>,
    alphabet_size: usize,
}

impl Iterator for ClassIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.as_mut()?;
        let out = Word::from_trusted(cur.clone(), self.alphabet_size);
        if !next_permutation(cur) {
            self.current = None;
        }
        Some(out)
    }
}

fn next_permutation(v: &mut [Letter]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn enumerate_class(c: &Composition) -> ClassIter {
    ClassIter {
        current: Some(c.base_word().letters),
        alphabet_size: c.alphabet_size(),
    }
}

/// Multinomial coefficient `n! / prod c(i)!`.
pub fn class_size(c: &Composition) -> BigUint {
    // Built as a product of binomials so intermediate values stay integral.
    let mut total = BigUint::one();
    let mut n = 0usize;
    for &k in &c.counts {
        for j in 1..=k {
            total *= BigUint::from(n + j);
            total /= BigUint::from(j);
        }
        n += k;
    }
    total
}

/// All words of length exactly `len` over `[r]`, lexicographic.
pub fn all_words(r: usize, len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = vec![1; len];
    loop {
        out.push(Word::from_trusted(cur.clone(), r));
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < r {
                cur[i] += 1;
                for x in &mut cur[i + 1..] {
                    *x = 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[usize], r: usize) -> Word {
        Word::new(letters.to_vec(), r).unwrap()
    }

    fn class(counts: &[usize]) -> Vec<String> {
        enumerate_class(&Composition::new(counts.to_vec()).unwrap())
            .map(|w| w.to_string())
            .collect()
    }

    #[test]
    fn composition_examples() {
        assert_eq!(composition_of(&w(&[], 3)).counts(), &[0, 0, 0]);
        assert_eq!(composition_of(&w(&[3, 1, 2], 3)).counts(), &[1, 1, 1]);
        assert_eq!(composition_of(&w(&[1, 1, 2], 2)).counts(), &[2, 1]);
    }

    #[test]
    fn class_examples() {
        assert_eq!(class(&[1, 1]), ["1 2", "2 1"]);
        assert_eq!(class(&[2, 1]), ["1 1 2", "1 2 1", "2 1 1"]);
        assert_eq!(class(&[0, 0, 0]), [""]);
    }

    #[test]
    fn class_size_examples() {
        let size = |c: &[usize]| class_size(&Composition::new(c.to_vec()).unwrap());
        assert_eq!(size(&[1, 1, 1]), BigUint::from(6u32));
        assert_eq!(size(&[2, 1]), BigUint::from(3u32));
        assert_eq!(size(&[7]), BigUint::from(1u32));
        assert_eq!(size(&[0, 0]), BigUint::from(1u32));
    }

    #[test]
    fn class_enumeration_is_complete_and_sorted() {
        for r in 1..=4 {
            for c in Composition::all_up_to(r, 8).unwrap() {
                if c.weight() > 8 {
                    continue;
                }
                let words: Vec<Word> = enumerate_class(&c).collect();
                assert_eq!(BigUint::from(words.len()), class_size(&c), "{c}");
                for pair in words.windows(2) {
                    assert!(pair[0].letters() < pair[1].letters());
                }
                assert!(words.iter().all(|w| composition_of(w) == c));
            }
        }
    }

    #[test]
    fn word_validation() {
        assert_eq!(
            Word::new(vec![1, 4], 3),
            Err(Error::LetterOutOfRange { letter: 4, size: 3 })
        );
        assert!(Word::new(vec![0], 3).is_err());
        assert!(Word::new(vec![], 0).is_err());
        assert_eq!(Word::parse("", 3).unwrap().len(), 0);
        assert_eq!(Word::parse(" 3 1  2 ", 3).unwrap().letters(), &[3, 1, 2]);
        assert!(Word::parse("3 x", 3).is_err());
    }

    #[test]
    fn composition_text_form() {
        let c: Composition = "1, 0,2".parse().unwrap();
        assert_eq!(c.counts(), &[1, 0, 2]);
        assert_eq!(c.to_string(), "1,0,2");
        assert!("".parse::<Composition>().is_err());
        assert!("1,-1".parse::<Composition>().is_err());
    }

    #[test]
    fn all_words_counts() {
        assert_eq!(all_words(3, 0).len(), 1);
        assert_eq!(all_words(3, 4).len(), 81);
        assert_eq!(
            all_words(2, 2)
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>(),
            ["1 1", "1 2", "2 1", "2 2"]
        );
    }
}
