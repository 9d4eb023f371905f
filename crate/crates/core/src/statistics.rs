//! Graphical statistics `maj'_U`, `inv'_U` and their sums.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::relations::{
    gmap_to_relation, natural_order, set_alphabet_relations, u_k, v_k, GMap, Relation, SetAlphabet,
    Threshold,
};
use crate::words::{Letter, Word};

fn check_word(size: usize, w: &Word) -> Result<()> {
    match w.letters().iter().find(|&&l| l == 0 || l > size) {
        Some(&letter) => Err(Error::LetterOutOfRange { letter, size }),
        None => Ok(()),
    }
}

/// Number of pairs `i < j` with `x_i U x_j`.
pub fn graphical_inv(u: &Relation, w: &Word) -> Result<usize> {
    check_word(u.size(), w)?;
    Ok(inv_of(u, w.letters()))
}

/// Sum of the 1-based positions `i` with `x_i U x_{i+1}`.
pub fn graphical_maj(u: &Relation, w: &Word) -> Result<usize> {
    check_word(u.size(), w)?;
    Ok(maj_of(u, w.letters()))
}

#[inline]
pub(crate) fn inv_of(u: &Relation, letters: &[Letter]) -> usize {
    let mut total = 0;
    for (i, &a) in letters.iter().enumerate() {
        for &b in &letters[i + 1..] {
            total += u.contains(a, b) as usize;
        }
    }
    total
}

#[inline]
pub(crate) fn maj_of(u: &Relation, letters: &[Letter]) -> usize {
    letters
        .windows(2)
        .enumerate()
        .filter(|(_, p)| u.contains(p[0], p[1]))
        .map(|(i, _)| i + 1)
        .sum()
}

/// `maj'_U + inv'_V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MajInvStatistic {
    u: Relation,
    v: Relation,
}

impl MajInvStatistic {
    pub fn new(u: Relation, v: Relation) -> Result<Self> {
        u.check_same_size(&v)?;
        Ok(MajInvStatistic { u, v })
    }

    /// Classical inversion number: `(empty, >)`.
    pub fn inv(r: usize) -> Result<Self> {
        MajInvStatistic::new(Relation::empty(r)?, natural_order(r)?)
    }

    /// Classical major index: `(>, empty)`.
    pub fn maj(r: usize) -> Result<Self> {
        MajInvStatistic::new(natural_order(r)?, Relation::empty(r)?)
    }

    /// Rawlings' `k-maj = maj'_{U_k} + inv'_{V_k}`.
    pub fn k_maj(r: usize, k: usize) -> Result<Self> {
        MajInvStatistic::new(u_k(r, k)?, v_k(r, k)?)
    }

    /// `(U, S_f \ U)` with `U` the relation encoded by `m`.
    pub fn from_gmap(m: &GMap) -> Self {
        let u = gmap_to_relation(m);
        let v = m.transported_order().difference(&u).expect("same size");
        MajInvStatistic { u, v }
    }

    /// `(U_A, V_A)` over a set alphabet.
    pub fn set_maj(alpha: &SetAlphabet) -> Self {
        let (u, v, _) = set_alphabet_relations(alpha);
        MajInvStatistic { u, v }
    }

    pub fn u(&self) -> &Relation {
        &self.u
    }

    pub fn v(&self) -> &Relation {
        &self.v
    }

    pub fn size(&self) -> usize {
        self.u.size()
    }

    pub fn eval(&self, w: &Word) -> Result<usize> {
        check_word(self.size(), w)?;
        Ok(self.eval_letters(w.letters()))
    }

    #[inline]
    pub(crate) fn eval_letters(&self, letters: &[Letter]) -> usize {
        maj_of(&self.u, letters) + inv_of(&self.v, letters)
    }
}

pub fn eval(stat: &MajInvStatistic, w: &Word) -> Result<usize> {
    stat.eval(w)
}

pub fn k_maj(r: usize, k: usize, w: &Word) -> Result<usize> {
    MajInvStatistic::k_maj(r, k)?.eval(w)
}

/// Steingrimsson-style `MAJ` on a word whose letters index `alpha`.
pub fn set_maj(alpha: &SetAlphabet, pi: &Word) -> Result<usize> {
    MajInvStatistic::set_maj(alpha).eval(pi)
}

/// `stat_{f,g}` evaluated straight from its defining sums:
/// descents `f(x_i) >= g(f(x_{i+1}))` weighted by position, plus pairs
/// `i < j` with `g(f(x_j)) > f(x_i) > f(x_j)`.
pub fn stat_fg(m: &GMap, w: &Word) -> Result<usize> {
    check_word(m.size(), w)?;
    let fx: Vec<Letter> = w.letters().iter().map(|&x| m.f(x)).collect();
    let mut total = 0;
    for (i, p) in fx.windows(2).enumerate() {
        if Threshold::Finite(p[0]) >= m.g(p[1]) {
            total += i + 1;
        }
    }
    for (i, &a) in fx.iter().enumerate() {
        for &b in &fx[i + 1..] {
            if m.g(b) > Threshold::Finite(a) && a > b {
                total += 1;
            }
        }
    }
    Ok(total)
}

/// Counts over the letters of `w` relative to `x`:
/// `l` letters not related to `x` by `U`, `r` letters related to `x` by `U`,
/// `t` letters not related by `U` but related by `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LetterCounts {
    pub l: usize,
    pub r: usize,
    pub t: usize,
}

pub fn letter_counts(u: &Relation, s: &Relation, w: &Word, x: Letter) -> Result<LetterCounts> {
    u.check_same_size(s)?;
    check_word(u.size(), w)?;
    if x == 0 || x > u.size() {
        return Err(Error::LetterOutOfRange {
            letter: x,
            size: u.size(),
        });
    }
    let mut counts = LetterCounts { l: 0, r: 0, t: 0 };
    for &y in w.letters() {
        if u.contains(y, x) {
            counts.r += 1;
        } else {
            counts.l += 1;
            if s.contains(y, x) {
                counts.t += 1;
            }
        }
    }
    Ok(counts)
}

/// Statistic names accepted on the command line:
/// `inv`, `maj`, `kmaj:<k>`, `fg:<f>:<g>`, `pair:<U.json>:<V.json>`, `setmaj`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StatSpec {
    Inv,
    Maj,
    KMaj(usize),
    /// `f` as a permutation word (`"2 1 3"`), `g` as a comma list with `inf`.
    Fg {
        f: Vec<Letter>,
        g: Vec<Threshold>,
    },
    Pair {
        u_path: String,
        v_path: String,
    },
    SetMaj,
}

impl StatSpec {
    /// Alphabet size fixed by the statistic itself, if any.
    pub fn implied_size(&self) -> Option<usize> {
        match self {
            StatSpec::Fg { f, .. } => Some(f.len()),
            _ => None,
        }
    }
}

impl FromStr for StatSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, rest) = match s.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => (s, None),
        };
        let bad = || Error::Input(format!("unrecognized statistic {s:?}"));
        match (head, rest) {
            ("inv", None) => Ok(StatSpec::Inv),
            ("maj", None) => Ok(StatSpec::Maj),
            ("setmaj", None) => Ok(StatSpec::SetMaj),
            ("kmaj", Some(k)) => k
                .trim()
                .parse()
                .map(StatSpec::KMaj)
                .map_err(|_| Error::Input(format!("bad k in {s:?}"))),
            ("fg", Some(rest)) => {
                let (f, g) = rest.split_once(':').ok_or_else(bad)?;
                let f = f
                    .split_whitespace()
                    .map(|t| {
                        t.parse()
                            .map_err(|_| Error::Input(format!("bad letter {t:?} in f")))
                    })
                    .collect::<Result<Vec<Letter>>>()?;
                let g = g
                    .split(',')
                    .map(str::parse)
                    .collect::<Result<Vec<Threshold>>>()?;
                Ok(StatSpec::Fg { f, g })
            }
            ("pair", Some(rest)) => {
                let (u, v) = rest.split_once(':').ok_or_else(bad)?;
                Ok(StatSpec::Pair {
                    u_path: u.to_string(),
                    v_path: v.to_string(),
                })
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for StatSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatSpec::Inv => f.write_str("inv"),
            StatSpec::Maj => f.write_str("maj"),
            StatSpec::SetMaj => f.write_str("setmaj"),
            StatSpec::KMaj(k) => write!(f, "kmaj:{k}"),
            StatSpec::Fg { f: perm, g } => {
                let perm: Vec<String> = perm.iter().map(|x| x.to_string()).collect();
                let g: Vec<String> = g.iter().map(|x| x.to_string()).collect();
                write!(f, "fg:{}:{}", perm.join(" "), g.join(","))
            }
            StatSpec::Pair { u_path, v_path } => write!(f, "pair:{u_path}:{v_path}"),
        }
    }
}
