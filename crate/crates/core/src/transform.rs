//! The second fundamental transformation generalized to an arbitrary
//! relation `U`.
//!
//! For a letter `x`, `U` splits the alphabet into `R_x = {y : y U x}` and
//! its complement `L_x`. The x-factorization cuts a word into blocks
//! `w_i x_i` whose pivots `x_i` lie in the class of the word's last letter
//! and whose bodies `w_i` avoid that class. [`gamma`] moves every pivot to the
//! front of its block, and [`psi`] applies `gamma` letter by letter:
//! `psi(w x) = gamma_x(psi(w)) x`.
//!
//! `psi` is a bijection on each rearrangement class for every `U`. When `S`
//! is a kappa-extension of `U` it carries `maj'_U + inv'_{S \ U}` to
//! `inv'_S`.

use crate::error::{Error, Result};
use crate::relations::Relation;
use crate::words::{Letter, Word};

/// Which side of the `R_x` / `L_x` split supplies the pivots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorizationCase {
    /// Last letter in `R_x`: pivots in `R_x`, bodies in `L_x*`.
    Related,
    /// Last letter in `L_x`: pivots in `L_x`, bodies in `R_x*`.
    Unrelated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub case: FactorizationCase,
    /// `(w_i, x_i)` in order; concatenating `w_i x_i` gives the word back.
    pub blocks: Vec<(Word, Letter)>,
}

fn check(u: &Relation, x: Letter, w: &Word) -> Result<()> {
    let size = u.size();
    if x == 0 || x > size {
        return Err(Error::LetterOutOfRange { letter: x, size });
    }
    match w.letters().iter().find(|&&l| l == 0 || l > size) {
        Some(&letter) => Err(Error::LetterOutOfRange { letter, size }),
        None => Ok(()),
    }
}

pub fn x_factorization(u: &Relation, w: &Word, x: Letter) -> Result<Factorization> {
    check(u, x, w)?;
    let last = w
        .last()
        .ok_or_else(|| Error::Domain("the empty word has no x-factorization".into()))?;
    let pivot_side = u.contains(last, x);
    let case = if pivot_side {
        FactorizationCase::Related
    } else {
        FactorizationCase::Unrelated
    };
    let mut blocks = Vec::new();
    let mut body = Vec::new();
    for &y in w.letters() {
        if u.contains(y, x) == pivot_side {
            let block = Word::new(std::mem::take(&mut body), u.size())?;
            blocks.push((block, y));
        } else {
            body.push(y);
        }
    }
    debug_assert!(body.is_empty());
    Ok(Factorization { case, blocks })
}

/// Pivot-first rewrite `x_1 w_1 x_2 w_2 ...` of the x-factorization; the
/// empty word maps to itself.
pub fn gamma(u: &Relation, x: Letter, w: &Word) -> Result<Word> {
    check(u, x, w)?;
    Ok(Word::from_trusted(
        gamma_letters(u, x, w.letters()),
        u.size(),
    ))
}

pub(crate) fn gamma_letters(u: &Relation, x: Letter, w: &[Letter]) -> Vec<Letter> {
    let Some(&last) = w.last() else {
        return Vec::new();
    };
    let pivot_side = u.contains(last, x);
    let mut out = Vec::with_capacity(w.len());
    let mut start = 0;
    for (i, &y) in w.iter().enumerate() {
        if u.contains(y, x) == pivot_side {
            out.push(y);
            out.extend_from_slice(&w[start..i]);
            start = i + 1;
        }
    }
    out
}

/// Undoes [`gamma`]. The first letter of an image is always a pivot, so its
/// side of the split identifies the case; every later letter on that side
/// starts a new block.
pub fn gamma_inverse(u: &Relation, x: Letter, w: &Word) -> Result<Word> {
    check(u, x, w)?;
    Ok(Word::from_trusted(
        gamma_inverse_letters(u, x, w.letters()),
        u.size(),
    ))
}

pub(crate) fn gamma_inverse_letters(u: &Relation, x: Letter, w: &[Letter]) -> Vec<Letter> {
    let Some(&first) = w.first() else {
        return Vec::new();
    };
    let pivot_side = u.contains(first, x);
    let mut out = Vec::with_capacity(w.len());
    let mut pivot = first;
    for &y in &w[1..] {
        if u.contains(y, x) == pivot_side {
            out.push(pivot);
            pivot = y;
        } else {
            out.push(y);
        }
    }
    out.push(pivot);
    out
}

pub fn psi(u: &Relation, w: &Word) -> Result<Word> {
    if let Some(&x) = w.letters().first() {
        check(u, x, w)?;
    }
    Ok(Word::from_trusted(psi_letters(u, w.letters()), u.size()))
}

pub(crate) fn psi_letters(u: &Relation, w: &[Letter]) -> Vec<Letter> {
    let mut image: Vec<Letter> = Vec::with_capacity(w.len());
    for &x in w {
        image = gamma_letters(u, x, &image);
        image.push(x);
    }
    image
}

pub fn psi_inverse(u: &Relation, w: &Word) -> Result<Word> {
    if let Some(&x) = w.letters().first() {
        check(u, x, w)?;
    }
    Ok(Word::from_trusted(
        psi_inverse_letters(u, w.letters()),
        u.size(),
    ))
}

pub(crate) fn psi_inverse_letters(u: &Relation, w: &[Letter]) -> Vec<Letter> {
    let mut rest = w.to_vec();
    let mut reversed = Vec::with_capacity(w.len());
    while let Some(x) = rest.pop() {
        reversed.push(x);
        rest = gamma_inverse_letters(u, x, &rest);
    }
    reversed.reverse();
    reversed
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::natural_order;
    use crate::words::all_words;

    fn w(letters: &[usize]) -> Word {
        Word::new(letters.to_vec(), 3).unwrap()
    }

    fn gt() -> Relation {
        natural_order(3).unwrap()
    }

    #[test]
    fn factorization_examples() {
        let f = x_factorization(&gt(), &w(&[3, 1]), 2).unwrap();
        assert_eq!(f.case, FactorizationCase::Unrelated);
        assert_eq!(f.blocks, vec![(w(&[3]), 1)]);

        let f = x_factorization(&gt(), &w(&[2, 3]), 1).unwrap();
        assert_eq!(f.case, FactorizationCase::Related);
        assert_eq!(f.blocks, vec![(w(&[]), 2), (w(&[]), 3)]);

        let empty = Relation::empty(3).unwrap();
        let f = x_factorization(&empty, &w(&[2, 1, 3, 3]), 2).unwrap();
        assert_eq!(f.case, FactorizationCase::Unrelated);
        assert!(f.blocks.iter().all(|(b, _)| b.is_empty()));
        assert_eq!(
            f.blocks.iter().map(|(_, p)| *p).collect::<Vec<_>>(),
            [2, 1, 3, 3]
        );

        assert!(matches!(
            x_factorization(&gt(), &w(&[]), 1),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn factorization_concatenates_back() {
        let u = Relation::from_pairs(3, &[(1, 2), (3, 2), (2, 2)]).unwrap();
        for n in 1..=5 {
            for word in all_words(3, n) {
                for x in 1..=3 {
                    let f = x_factorization(&u, &word, x).unwrap();
                    let joined: Vec<usize> = f
                        .blocks
                        .iter()
                        .flat_map(|(b, p)| b.letters().iter().copied().chain([*p]))
                        .collect();
                    assert_eq!(joined, word.letters());
                }
            }
        }
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&gt(), 1, &w(&[])).unwrap(), w(&[]));
        assert_eq!(gamma(&gt(), 2, &w(&[3, 1])).unwrap(), w(&[1, 3]));
        assert_eq!(gamma(&gt(), 1, &w(&[2, 3])).unwrap(), w(&[2, 3]));
    }

    #[test]
    fn gamma_inverse_examples() {
        assert_eq!(gamma_inverse(&gt(), 2, &w(&[])).unwrap(), w(&[]));
        assert_eq!(gamma_inverse(&gt(), 2, &w(&[1, 3])).unwrap(), w(&[3, 1]));
    }

    #[test]
    fn gamma_round_trip_all_relations() {
        let words: Vec<Word> = (0..=5).flat_map(|n| all_words(3, n)).collect();
        for mask in 0..512 {
            let u = Relation::from_mask(3, mask).unwrap();
            for word in &words {
                for x in 1..=3 {
                    let img = gamma(&u, x, word).unwrap();
                    assert_eq!(img.composition(), word.composition());
                    assert_eq!(&gamma_inverse(&u, x, &img).unwrap(), word);
                }
            }
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&gt(), &w(&[])).unwrap(), w(&[]));
        for x in 1..=3 {
            assert_eq!(psi(&gt(), &w(&[x])).unwrap(), w(&[x]));
        }
        assert_eq!(psi(&gt(), &w(&[3, 1])).unwrap(), w(&[3, 1]));
        assert_eq!(psi(&gt(), &w(&[3, 1, 2])).unwrap(), w(&[1, 3, 2]));
        assert_eq!(psi_inverse(&gt(), &w(&[1, 3, 2])).unwrap(), w(&[3, 1, 2]));
        assert_eq!(psi_inverse(&gt(), &w(&[])).unwrap(), w(&[]));
    }

    #[test]
    fn psi_round_trip_all_relations() {
        let words: Vec<Word> = (0..=6).flat_map(|n| all_words(3, n)).collect();
        for mask in 0..512 {
            let u = Relation::from_mask(3, mask).unwrap();
            for word in &words {
                let img = psi(&u, word).unwrap();
                assert_eq!(&psi_inverse(&u, &img).unwrap(), word);
                let pre = psi_inverse(&u, word).unwrap();
                assert_eq!(&psi(&u, &pre).unwrap(), word);
            }
        }
    }

    #[test]
    fn letters_out_of_range() {
        let w4 = Word::new(vec![4], 4).unwrap();
        assert!(psi(&gt(), &w4).is_err());
        assert!(gamma(&gt(), 4, &w(&[1])).is_err());
    }
}
