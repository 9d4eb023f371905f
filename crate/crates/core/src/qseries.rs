//! Exact integer polynomials in `q` and distribution polynomials of
//! statistics over rearrangement classes.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::relations::Bipartition;
use crate::statistics::MajInvStatistic;
use crate::words::{class_size, enumerate_class, Composition, Letter};

/// Polynomial with arbitrary-precision integer coefficients, ascending
/// degree. Always canonical: no trailing zeros, and the zero polynomial is
/// stored as `[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        QPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        QPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        QPolynomial::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPolynomial::new(Vec::new())
    }

    pub fn one() -> Self {
        QPolynomial::from_i64s(&[1])
    }

    /// `coeff * q^degree`.
    pub fn monomial(coeff: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = coeff.into();
        QPolynomial::new(coeffs)
    }

    /// `1 + q + ... + q^(n-1)`.
    pub fn q_integer(n: usize) -> Self {
        QPolynomial::new(vec![BigInt::one(); n])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.coeffs.len() - 1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// `q^shift * self`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial::new(coeffs)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        QPolynomial::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Quotient and remainder by `divisor`, or `None` when the division
    /// leaves the integers or the divisor is zero.
    pub fn div_rem(&self, divisor: &QPolynomial) -> Option<(QPolynomial, QPolynomial)> {
        let d_deg = divisor.degree()?;
        let lead = &divisor.coeffs[d_deg];
        let mut rem = self.coeffs.clone();
        if self.is_zero() || rem.len() <= d_deg {
            return Some((QPolynomial::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d_deg];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + d_deg];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return None;
            }
            let factor = top / lead;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &factor * dc;
            }
            quot[i] = factor;
        }
        Some((QPolynomial::new(quot), QPolynomial::new(rem)))
    }

    /// Exact quotient; `None` unless `divisor` divides `self` over the integers.
    pub fn div_exact(&self, divisor: &QPolynomial) -> Option<QPolynomial> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serializes")
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::new(out)
    }
}

impl fmt::Display for QPolynomial {
    /// Human form, e.g. `1 + 2*q + 2*q^2 + q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match deg {
                0 => String::new(),
                1 => "q".to_string(),
                d => format!("q^{d}"),
            };
            if deg == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

/// JSON form `{"coeffs": [1, 2, 2, 1]}`; coefficients are exact JSON
/// integers of any size.
#[derive(Serialize, Deserialize)]
struct PolyJson {
    coeffs: Vec<Box<RawValue>>,
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| RawValue::from_string(c.to_string()))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::ser::Error::custom)?;
        PolyJson { coeffs }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(de)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|v| {
                v.get()
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|_| D::Error::custom(format!("not an integer: {}", v.get())))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QPolynomial::new(coeffs))
    }
}

/// `[n]_q! = (1)(1+q)(1+q+q^2)...(1+q+...+q^(n-1))`.
pub fn q_factorial(n: usize) -> QPolynomial {
    (1..=n).fold(QPolynomial::one(), |acc, k| {
        &acc * &QPolynomial::q_integer(k)
    })
}

/// `[m_1 + ... + m_k]_q! / ([m_1]_q! ... [m_k]_q!)`.
pub fn q_multinomial_parts(parts: &[usize]) -> Result<QPolynomial> {
    let n: usize = parts.iter().sum();
    let mut acc = q_factorial(n);
    for &m in parts {
        acc = acc.div_exact(&q_factorial(m)).ok_or_else(|| {
            Error::Invariant(format!("[{n}]_q! not divisible by [{m}]_q! in {parts:?}"))
        })?;
    }
    Ok(acc)
}

pub fn q_multinomial(c: &Composition) -> Result<QPolynomial> {
    q_multinomial_parts(c.counts())
}

/// `sum over R(c) of q^stat(w)`.
pub fn distribution(stat: &MajInvStatistic, c: &Composition) -> Result<QPolynomial> {
    if stat.size() != c.alphabet_size() {
        return Err(Error::SizeMismatch {
            left: stat.size(),
            right: c.alphabet_size(),
        });
    }
    let mut hist: Vec<u64> = Vec::new();
    for w in enumerate_class(c) {
        let v = stat.eval_letters(w.letters());
        if hist.len() <= v {
            hist.resize(v + 1, 0);
        }
        hist[v] += 1;
    }
    Ok(QPolynomial::from_counts(&hist))
}

/// Whether `stat` matches the q-multinomial on every composition over its
/// alphabet with weight at most `max_weight`. A finite certificate only.
pub fn is_mahonian_up_to(stat: &MajInvStatistic, max_weight: usize) -> bool {
    let table = ClassTable::new(stat.size(), max_weight).expect("statistic size is valid");
    let target = table.mahonian_histograms();
    table.matches(|w| stat.eval_letters(w), &target)
}

/// Product formula for `maj'_U + inv'_{H \ U}` when `H` is bipartitional
/// with bipartition `b` and a kappa-extension of `U`:
/// `[n; m_1..m_k]_q * prod_l multinomial(m_l; c(B_l)) * q^(beta_l * C(m_l, 2))`.
pub fn bipartitional_product_formula(c: &Composition, b: &Bipartition) -> Result<QPolynomial> {
    if b.size() != c.alphabet_size() {
        return Err(Error::SizeMismatch {
            left: b.size(),
            right: c.alphabet_size(),
        });
    }
    let block_sizes: Vec<usize> = b
        .blocks()
        .iter()
        .map(|block| block.iter().map(|&x| c.count(x)).sum())
        .collect();
    let mut out = q_multinomial_parts(&block_sizes)?;
    for ((block, &m), &beta) in b.blocks().iter().zip(&block_sizes).zip(b.betas()) {
        let inner = Composition::new(block.iter().map(|&x| c.count(x)).collect())?;
        out = out.scale(&BigInt::from(class_size(&inner)));
        if beta {
            out = out.shift(m * m.saturating_sub(1) / 2);
        }
    }
    Ok(out)
}

/// Every rearrangement class over `[r]` up to a weight, with its words
/// materialized. Shared by the sweeps so each class is enumerated once.
#[derive(Debug, Clone)]
pub(crate) struct ClassTable {
    pub classes: Vec<(Composition, Vec<Vec<Letter>>)>,
}

impl ClassTable {
    pub fn new(r: usize, max_weight: usize) -> Result<Self> {
        let classes = Composition::all_up_to(r, max_weight)?
            .into_iter()
            .map(|c| {
                let words = enumerate_class(&c).map(|w| w.into_letters()).collect();
                (c, words)
            })
            .collect();
        Ok(ClassTable { classes })
    }

    pub fn histograms(&self, stat: impl Fn(&[Letter]) -> usize) -> Vec<Vec<u64>> {
        self.classes
            .iter()
            .map(|(_, words)| histogram(words, &stat))
            .collect()
    }

    /// q-multinomial coefficients of each class, as counts.
    pub fn mahonian_histograms(&self) -> Vec<Vec<u64>> {
        self.classes
            .iter()
            .map(|(c, _)| {
                q_multinomial(c)
                    .expect("q-multinomial division is exact")
                    .coeffs()
                    .iter()
                    .map(|v| u64::try_from(v).expect("small coefficient"))
                    .collect()
            })
            .collect()
    }

    /// Compares class by class, stopping at the first mismatch.
    pub fn matches(&self, stat: impl Fn(&[Letter]) -> usize, target: &[Vec<u64>]) -> bool {
        self.first_mismatch(stat, target).is_none()
    }

    pub fn first_mismatch(
        &self,
        stat: impl Fn(&[Letter]) -> usize,
        target: &[Vec<u64>],
    ) -> Option<&Composition> {
        self.classes
            .iter()
            .zip(target)
            .find(|((_, words), want)| histogram(words, &stat) != **want)
            .map(|((c, _), _)| c)
    }
}

/// Value counts with trailing zeros trimmed, matching canonical coefficients.
pub(crate) fn histogram(words: &[Vec<Letter>], stat: impl Fn(&[Letter]) -> usize) -> Vec<u64> {
    let mut hist: Vec<u64> = Vec::new();
    for w in words {
        let v = stat(w);
        if hist.len() <= v {
            hist.resize(v + 1, 0);
        }
        hist[v] += 1;
    }
    if hist.is_empty() {
        hist.push(0);
    }
    hist
}

/// Multinomial `n! / prod c_i!` as a big integer.
pub fn multinomial(parts: &[usize]) -> BigUint {
    match Composition::new(parts.to_vec()) {
        Ok(c) => class_size(&c),
        Err(_) => BigUint::one(),
    }
}
