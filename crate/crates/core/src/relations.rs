//! Finite relations on `[r]` and the decision procedures around them:
//! transitivity, total orders, bipartitional relations, kappa-extensions and
//! the kappa-closure, plus the `(f, g)` parametrization of the relations that
//! a total order extends.
//!
//! A [`Relation`] is stored as one bit row per letter, so `r` is capped at
//! [`MAX_SIZE`].

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::Letter;

/// Largest alphabet a [`Relation`] can be built on.
pub const MAX_SIZE: usize = 64;

/// A subset of `[r] x [r]`. `contains(x, y)` reads "x U y".
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RelationFile", into = "RelationFile")]
pub struct Relation {
    size: usize,
    rows: Vec<u64>,
}

/// On-disk form: `{"size": r, "pairs": [[x, y], ...]}` with 1-indexed letters.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationFile {
    size: usize,
    pairs: Vec<[Letter; 2]>,
}

impl TryFrom<RelationFile> for Relation {
    type Error = Error;

    fn try_from(file: RelationFile) -> Result<Self> {
        let mut rel = Relation::empty(file.size)?;
        for [x, y] in file.pairs {
            rel.check_letter(x)?;
            rel.check_letter(y)?;
            if rel.contains(x, y) {
                return Err(Error::Input(format!("duplicate pair ({x}, {y})")));
            }
            rel.insert(x, y);
        }
        Ok(rel)
    }
}

impl From<Relation> for RelationFile {
    fn from(rel: Relation) -> Self {
        RelationFile {
            size: rel.size,
            pairs: rel.pairs().map(|(x, y)| [x, y]).collect(),
        }
    }
}

impl Relation {
    pub fn empty(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::Input("relation size must be at least 1".into()));
        }
        if size > MAX_SIZE {
            return Err(Error::TooLarge {
                what: "relation",
                size,
                cap: MAX_SIZE,
            });
        }
        Ok(Relation {
            size,
            rows: vec![0; size],
        })
    }

    /// `[r] x [r]`.
    pub fn full(size: usize) -> Result<Self> {
        let mut rel = Relation::empty(size)?;
        let mask = rel.mask();
        rel.rows.iter_mut().for_each(|row| *row = mask);
        Ok(rel)
    }

    pub fn from_pairs(size: usize, pairs: &[(Letter, Letter)]) -> Result<Self> {
        let mut rel = Relation::empty(size)?;
        for &(x, y) in pairs {
            rel.check_letter(x)?;
            rel.check_letter(y)?;
            rel.insert(x, y);
        }
        Ok(rel)
    }

    /// Builds the relation whose pair `(x, y)` is bit `(x-1)*r + (y-1)` of
    /// `mask`. Used to enumerate all `2^(r^2)` relations.
    pub fn from_mask(size: usize, mask: u64) -> Result<Self> {
        if size * size > 64 {
            return Err(Error::TooLarge {
                what: "relation mask encoding",
                size,
                cap: 8,
            });
        }
        let mut rel = Relation::empty(size)?;
        let row_mask = rel.mask();
        for x in 0..size {
            rel.rows[x] = (mask >> (x * size)) & row_mask;
        }
        Ok(rel)
    }

    /// Inverse of [`Relation::from_mask`]. Only meaningful for `r <= 8`.
    pub fn to_mask(&self) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (x, &row)| acc | (row << (x * self.size)))
    }

    /// Builds a relation from a predicate on pairs of letters.
    pub fn from_fn(size: usize, mut pred: impl FnMut(Letter, Letter) -> bool) -> Result<Self> {
        let mut rel = Relation::empty(size)?;
        for x in 1..=size {
            for y in 1..=size {
                if pred(x, y) {
                    rel.insert(x, y);
                }
            }
        }
        Ok(rel)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn mask(&self) -> u64 {
        if self.size == 64 {
            u64::MAX
        } else {
            (1u64 << self.size) - 1
        }
    }

    fn check_letter(&self, x: Letter) -> Result<()> {
        if x == 0 || x > self.size {
            Err(Error::LetterOutOfRange {
                letter: x,
                size: self.size,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_same_size(&self, other: &Relation) -> Result<()> {
        if self.size != other.size {
            Err(Error::SizeMismatch {
                left: self.size,
                right: other.size,
            })
        } else {
            Ok(())
        }
    }

    /// `x U y`. Letters must lie in `[1, r]`.
    #[inline]
    pub fn contains(&self, x: Letter, y: Letter) -> bool {
        (self.rows[x - 1] >> (y - 1)) & 1 == 1
    }

    pub fn insert(&mut self, x: Letter, y: Letter) {
        self.rows[x - 1] |= 1 << (y - 1);
    }

    pub fn remove(&mut self, x: Letter, y: Letter) {
        self.rows[x - 1] &= !(1 << (y - 1));
    }

    /// Bit row of `x`: bit `y-1` set iff `x U y`.
    pub(crate) fn row(&self, x: Letter) -> u64 {
        self.rows[x - 1]
    }

    /// Bit column of `y`: bit `x-1` set iff `x U y`.
    pub(crate) fn column(&self, y: Letter) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, &row)| (row >> (y - 1)) & 1 == 1)
            .fold(0, |acc, (x, _)| acc | (1 << x))
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (Letter, Letter)> + '_ {
        (1..=self.size).flat_map(move |x| {
            (1..=self.size)
                .filter(move |&y| self.contains(x, y))
                .map(move |y| (x, y))
        })
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    fn zip_rows(&self, other: &Relation, op: impl Fn(u64, u64) -> u64) -> Result<Relation> {
        self.check_same_size(other)?;
        Ok(Relation {
            size: self.size,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        })
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.zip_rows(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Relation) -> Result<Relation> {
        self.zip_rows(other, |a, b| a & b)
    }

    /// `self \ other`.
    pub fn difference(&self, other: &Relation) -> Result<Relation> {
        self.zip_rows(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.size == other.size
            && self
                .rows
                .iter()
                .zip(&other.rows)
                .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Relation) -> bool {
        self.rows.iter().zip(&other.rows).all(|(&a, &b)| a & b == 0)
    }

    /// The relation `h(U)`: `a h(U) b` iff `h^-1(a) U h^-1(b)`, for a
    /// permutation `h` given as `h[x-1] = h(x)`.
    pub fn transport(&self, h: &[Letter]) -> Result<Relation> {
        check_permutation(h, self.size)?;
        let mut out = Relation::empty(self.size)?;
        for (x, y) in self.pairs() {
            out.insert(h[x - 1], h[y - 1]);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("relation serializes")
    }

    pub fn from_json(text: &str) -> Result<Relation> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("relation JSON: {e}")))
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation[{}]{{", self.size)?;
        for (i, (x, y)) in self.pairs().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({x},{y})")?;
        }
        f.write_str("}")
    }
}

fn check_permutation(p: &[Letter], size: usize) -> Result<()> {
    if p.len() != size {
        return Err(Error::SizeMismatch {
            left: p.len(),
            right: size,
        });
    }
    let mut seen = vec![false; size];
    for &v in p {
        if v == 0 || v > size || std::mem::replace(&mut seen[v - 1], true) {
            return Err(Error::Input(format!(
                "{p:?} is not a permutation of [{size}]"
            )));
        }
    }
    Ok(())
}

/// `x > y` on `[r]`.
pub fn natural_order(r: usize) -> Result<Relation> {
    Relation::from_fn(r, |x, y| x > y)
}

pub fn is_transitive(u: &Relation) -> bool {
    // x U y and y U z imply x U z: row(x) must contain row(y) for every y in row(x).
    (1..=u.size).all(|x| {
        let row = u.row(x);
        (1..=u.size)
            .filter(|&y| (row >> (y - 1)) & 1 == 1)
            .all(|y| u.row(y) & !row == 0)
    })
}

/// Strict total order: irreflexive, antisymmetric, total and transitive.
pub fn is_total_order(s: &Relation) -> bool {
    for x in 1..=s.size {
        if s.contains(x, x) {
            return false;
        }
        for y in (x + 1)..=s.size {
            if s.contains(x, y) == s.contains(y, x) {
                return false;
            }
        }
    }
    is_transitive(s)
}

/// Han's axioms: transitive, and `x U y`, `z !U y` imply `x U z`.
pub fn is_bipartitional(u: &Relation) -> bool {
    if !is_transitive(u) {
        return false;
    }
    for y in 1..=u.size {
        let related = u.column(y);
        let unrelated = !related & u.mask();
        for x in 1..=u.size {
            if (related >> (x - 1)) & 1 == 1 && unrelated & !u.row(x) != 0 {
                return false;
            }
        }
    }
    true
}

/// Ordered blocks with one bit each. `x U y` iff `x` sits in an earlier block
/// than `y`, or both share a block whose bit is set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BipartitionFile", into = "BipartitionFile")]
pub struct Bipartition {
    size: usize,
    blocks: Vec<Vec<Letter>>,
    betas: Vec<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BipartitionFile {
    blocks: Vec<Vec<Letter>>,
    betas: Vec<u8>,
}

impl TryFrom<BipartitionFile> for Bipartition {
    type Error = Error;

    fn try_from(file: BipartitionFile) -> Result<Self> {
        let size = file.blocks.iter().map(Vec::len).sum();
        let betas = file
            .betas
            .iter()
            .map(|&b| match b {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(Error::Input(format!("beta must be 0 or 1, got {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Bipartition::new(size, file.blocks, betas)
    }
}

impl From<Bipartition> for BipartitionFile {
    fn from(b: Bipartition) -> Self {
        BipartitionFile {
            blocks: b.blocks,
            betas: b.betas.into_iter().map(u8::from).collect(),
        }
    }
}

impl Bipartition {
    pub fn new(size: usize, blocks: Vec<Vec<Letter>>, betas: Vec<bool>) -> Result<Self> {
        if blocks.len() != betas.len() {
            return Err(Error::Input(format!(
                "{} blocks but {} betas",
                blocks.len(),
                betas.len()
            )));
        }
        let mut seen = vec![false; size];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::Input("empty block".into()));
            }
            for &x in block {
                if x == 0 || x > size {
                    return Err(Error::LetterOutOfRange { letter: x, size });
                }
                if std::mem::replace(&mut seen[x - 1], true) {
                    return Err(Error::Input(format!("letter {x} appears in two blocks")));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::Input(format!(
                "letter {} is in no block",
                missing + 1
            )));
        }
        Relation::empty(size)?;
        Ok(Bipartition {
            size,
            blocks,
            betas,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn blocks(&self) -> &[Vec<Letter>] {
        &self.blocks
    }

    pub fn betas(&self) -> &[bool] {
        &self.betas
    }

    pub fn to_relation(&self) -> Relation {
        relation_from_bipartition(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("bipartition serializes")
    }
}

pub fn relation_from_bipartition(b: &Bipartition) -> Relation {
    let mut block_of = vec![0; b.size];
    for (l, block) in b.blocks.iter().enumerate() {
        for &x in block {
            block_of[x - 1] = l;
        }
    }
    Relation::from_fn(b.size, |x, y| {
        let (lx, ly) = (block_of[x - 1], block_of[y - 1]);
        lx < ly || (lx == ly && b.betas[lx])
    })
    .expect("bipartition size was validated")
}

/// Recovers the block structure of a bipartitional relation.
///
/// Two letters share a block iff they are related in both directions or in
/// neither. Blocks are ordered by how many letters they strictly dominate,
/// letters inside a block ascend.
pub fn extract_bipartition(u: &Relation) -> Result<Bipartition> {
    if !is_bipartitional(u) {
        return Err(Error::Domain(format!("{u:?} is not bipartitional")));
    }
    let r = u.size;
    let mut blocks: Vec<Vec<Letter>> = Vec::new();
    for x in 1..=r {
        match blocks
            .iter_mut()
            .find(|b| u.contains(x, b[0]) == u.contains(b[0], x))
        {
            Some(block) => block.push(x),
            None => blocks.push(vec![x]),
        }
    }
    let dominated = |x: Letter| {
        (1..=r)
            .filter(|&y| u.contains(x, y) && !u.contains(y, x))
            .count()
    };
    blocks.sort_by_key(|b| (std::cmp::Reverse(dominated(b[0])), b[0]));
    let betas = blocks.iter().map(|b| u.contains(b[0], b[0])).collect();
    let b = Bipartition::new(r, blocks, betas)?;
    if relation_from_bipartition(&b) != *u {
        return Err(Error::Invariant(format!(
            "extracted bipartition does not reproduce {u:?}"
        )));
    }
    Ok(b)
}

/// `S` is a kappa-extension of `U` when `U` is contained in `S` and
/// `x U y`, `z !U y` force `x S z` and `z !S x`.
pub fn is_kappa_extension(s: &Relation, u: &Relation) -> Result<bool> {
    s.check_same_size(u)?;
    Ok(kappa_extension_unchecked(s, u))
}

pub(crate) fn kappa_extension_unchecked(s: &Relation, u: &Relation) -> bool {
    if !u.is_subset(s) {
        return false;
    }
    let mask = u.mask();
    for y in 1..=u.size {
        let related = u.column(y);
        let unrelated = !related & mask;
        if related == 0 || unrelated == 0 {
            continue;
        }
        for x in 1..=u.size {
            // every z outside R_y must satisfy x S z
            if (related >> (x - 1)) & 1 == 1 && unrelated & !s.row(x) != 0 {
                return false;
            }
        }
        for z in 1..=u.size {
            // and no x inside R_y may satisfy z S x
            if (unrelated >> (z - 1)) & 1 == 1 && related & s.row(z) != 0 {
                return false;
            }
        }
    }
    true
}

/// A quadruple `(x, y, z, t)` with `x U y`, `z !U y`, `x !U t`, `z U t`.
/// Scanned in lexicographic order, so the first hit is returned.
pub fn forbidden_quadruple(u: &Relation) -> Option<(Letter, Letter, Letter, Letter)> {
    let r = u.size;
    for x in 1..=r {
        for y in 1..=r {
            if !u.contains(x, y) {
                continue;
            }
            for z in 1..=r {
                if u.contains(z, y) {
                    continue;
                }
                for t in 1..=r {
                    if !u.contains(x, t) && u.contains(z, t) {
                        return Some((x, y, z, t));
                    }
                }
            }
        }
    }
    None
}

/// Transitive and free of forbidden quadruples.
pub fn is_kappa_extensible(u: &Relation) -> bool {
    is_transitive(u) && forbidden_quadruple(u).is_none()
}

/// `U` plus every `(x, y)` for which some `z` has `x U z` and `y !U z`.
///
/// Defined for any `U`; it is a kappa-extension of `U` only when `U` is
/// kappa-extensible.
pub fn kappa_closure(u: &Relation) -> Relation {
    let mask = u.mask();
    let mut out = u.clone();
    for z in 1..=u.size {
        let not_into_z = !u.column(z) & mask;
        for x in 1..=u.size {
            if u.contains(x, z) {
                out.rows[x - 1] |= not_into_z;
            }
        }
    }
    out
}

/// A value of `g`: a letter or the sentinel above every letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Threshold {
    Finite(Letter),
    Infinity,
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Finite(x) => write!(f, "{x}"),
            Threshold::Infinity => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for Threshold {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "∞" => Ok(Threshold::Infinity),
            t => t
                .parse()
                .map(Threshold::Finite)
                .map_err(|_| Error::Input(format!("not a letter or 'inf': {t:?}"))),
        }
    }
}

impl Serialize for Threshold {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Threshold::Finite(x) => ser.serialize_u64(*x as u64),
            Threshold::Infinity => ser.serialize_str("inf"),
        }
    }
}

/// A permutation `f` of `[r]` and a map `g: [r] -> [r] + {inf}` with
/// `g(y) > y`. It encodes the relation `x U y <=> f(x) >= g(f(y))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GMap {
    f: Vec<Letter>,
    g: Vec<Threshold>,
}

impl GMap {
    pub fn new(f: Vec<Letter>, g: Vec<Threshold>) -> Result<Self> {
        let r = f.len();
        if r == 0 || r > MAX_SIZE {
            return Err(Error::Input(format!("g-map size {r} out of range")));
        }
        check_permutation(&f, r)?;
        if g.len() != r {
            return Err(Error::SizeMismatch {
                left: r,
                right: g.len(),
            });
        }
        for (i, &gy) in g.iter().enumerate() {
            let y = i + 1;
            match gy {
                Threshold::Finite(v) if v <= y || v > r => {
                    return Err(Error::Input(format!(
                        "g({y}) = {v} must exceed {y} and lie in [1, {r}] or be inf"
                    )))
                }
                _ => {}
            }
        }
        Ok(GMap { f, g })
    }

    /// `f = Id`.
    pub fn with_identity(g: Vec<Threshold>) -> Result<Self> {
        GMap::new((1..=g.len()).collect(), g)
    }

    pub fn size(&self) -> usize {
        self.f.len()
    }

    pub fn f(&self, x: Letter) -> Letter {
        self.f[x - 1]
    }

    pub fn g(&self, y: Letter) -> Threshold {
        self.g[y - 1]
    }

    pub fn f_values(&self) -> &[Letter] {
        &self.f
    }

    pub fn g_values(&self) -> &[Threshold] {
        &self.g
    }

    /// The total order carried through `f`: `x S_f y <=> f(x) > f(y)`.
    pub fn transported_order(&self) -> Relation {
        Relation::from_fn(self.size(), |x, y| self.f(x) > self.f(y)).expect("size validated")
    }

    /// Every g-map over `[r]` sharing the permutation `f`: `r!` of them,
    /// enumerated with `g(1)` varying slowest.
    pub fn all_with_f(f: &[Letter]) -> Result<Vec<GMap>> {
        let r = f.len();
        check_permutation(f, r)?;
        let mut out = Vec::new();
        let mut g = vec![Threshold::Infinity; r];
        fn rec(f: &[Letter], g: &mut Vec<Threshold>, y: usize, out: &mut Vec<GMap>) {
            let r = f.len();
            if y > r {
                out.push(GMap {
                    f: f.to_vec(),
                    g: g.clone(),
                });
                return;
            }
            for v in (y + 1)..=r {
                g[y - 1] = Threshold::Finite(v);
                rec(f, g, y + 1, out);
            }
            g[y - 1] = Threshold::Infinity;
            rec(f, g, y + 1, out);
        }
        rec(f, &mut g, 1, &mut out);
        Ok(out)
    }

    /// `g_k(x) = floor(kx) + 1` when `kx < r`, else `inf`, with `f = Id`.
    pub fn g_k(r: usize, k: Ratio<u64>) -> Result<Self> {
        if k < Ratio::from_integer(1) {
            return Err(Error::Input(format!("k must be at least 1, got {k}")));
        }
        let g = (1..=r as u64)
            .map(|x| {
                let kx = k * x;
                if kx < Ratio::from_integer(r as u64) {
                    Threshold::Finite((kx.floor().to_integer() + 1) as Letter)
                } else {
                    Threshold::Infinity
                }
            })
            .collect();
        GMap::with_identity(g)
    }

    /// `H_B(x) = x + 1` for `x` in `B` below `r`, else `inf`, with `f = Id`.
    pub fn h_b(r: usize, b: &BTreeSet<Letter>) -> Result<Self> {
        check_subset(b, r)?;
        let g = (1..=r)
            .map(|x| {
                if b.contains(&x) && x != r {
                    Threshold::Finite(x + 1)
                } else {
                    Threshold::Infinity
                }
            })
            .collect();
        GMap::with_identity(g)
    }
}

pub fn gmap_to_relation(m: &GMap) -> Relation {
    Relation::from_fn(m.size(), |x, y| Threshold::Finite(m.f(x)) >= m.g(m.f(y)))
        .expect("size validated")
}

/// Inverse of [`gmap_to_relation`] for a total order `S` extending `U`.
///
/// `f` ranks letters by `S` (`x S y <=> f(x) > f(y)`), and
/// `g(b) = min { a : f^-1(a) U f^-1(b) }` or `inf` when that set is empty.
pub fn relation_to_gmap(u: &Relation, s: &Relation) -> Result<GMap> {
    u.check_same_size(s)?;
    if !is_total_order(s) {
        return Err(Error::Domain(format!("{s:?} is not a total order")));
    }
    if !kappa_extension_unchecked(s, u) {
        return Err(Error::Domain(format!(
            "{s:?} is not a kappa-extension of {u:?}"
        )));
    }
    let r = u.size;
    let f: Vec<Letter> = (1..=r)
        .map(|x| s.row(x).count_ones() as Letter + 1)
        .collect();
    let moved = u.transport(&f)?;
    let g = (1..=r)
        .map(|b| {
            (1..=r)
                .find(|&a| moved.contains(a, b))
                .map_or(Threshold::Infinity, Threshold::Finite)
        })
        .collect();
    let m = GMap::new(f, g)?;
    if gmap_to_relation(&m) != *u {
        return Err(Error::Invariant(format!(
            "g-map for {u:?} does not round-trip"
        )));
    }
    Ok(m)
}

fn check_subset(set: &BTreeSet<Letter>, r: usize) -> Result<()> {
    match set.iter().find(|&&x| x == 0 || x > r) {
        Some(&x) => Err(Error::LetterOutOfRange { letter: x, size: r }),
        None => Ok(()),
    }
}

/// `U_k = {(x, y) : x >= y + k}`.
pub fn u_k(r: usize, k: usize) -> Result<Relation> {
    if k == 0 {
        return Err(Error::Input("k must be at least 1".into()));
    }
    Relation::from_fn(r, |x, y| x >= y + k)
}

/// `V_k = {(x, y) : y + k > x > y}`.
pub fn v_k(r: usize, k: usize) -> Result<Relation> {
    if k == 0 {
        return Err(Error::Input("k must be at least 1".into()));
    }
    Relation::from_fn(r, |x, y| y + k > x && x > y)
}

/// `U_{A,B} = {(x, y) : x in A, y in B, x > y}`.
pub fn u_ab(r: usize, a: &BTreeSet<Letter>, b: &BTreeSet<Letter>) -> Result<Relation> {
    check_subset(a, r)?;
    check_subset(b, r)?;
    Relation::from_fn(r, |x, y| a.contains(&x) && b.contains(&y) && x > y)
}

/// `S_{A,B}`: `A` above its complement, `A` ordered by `>`, the complement
/// unordered. It depends on `A` only.
pub fn s_ab(r: usize, a: &BTreeSet<Letter>) -> Result<Relation> {
    check_subset(a, r)?;
    Relation::from_fn(r, |x, y| a.contains(&x) && (!a.contains(&y) || x > y))
}

/// `S'_{A,B}`: `S_{A,B}` with the complement of `A` ordered by `>` as well.
pub fn s_prime_ab(r: usize, a: &BTreeSet<Letter>) -> Result<Relation> {
    let mut s = s_ab(r, a)?;
    for x in 1..=r {
        for y in 1..x {
            if !a.contains(&x) && !a.contains(&y) {
                s.insert(x, y);
            }
        }
    }
    Ok(s)
}

/// `x | y` on `[r]`.
pub fn divides(r: usize) -> Result<Relation> {
    Relation::from_fn(r, |x, y| y % x == 0)
}

/// A list of non-empty, mutually disjoint finite sets of non-negative
/// integers. Set `i` in the list is encoded as letter `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetAlphabet {
    sets: Vec<BTreeSet<u64>>,
}

impl SetAlphabet {
    pub fn new(sets: Vec<Vec<u64>>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::Input("set alphabet needs at least one set".into()));
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(sets.len());
        for (i, set) in sets.into_iter().enumerate() {
            if set.is_empty() {
                return Err(Error::Input(format!("set #{} is empty", i + 1)));
            }
            let set: BTreeSet<u64> = set.into_iter().collect();
            if let Some(v) = set.iter().find(|v| seen.contains(*v)) {
                return Err(Error::Input(format!("value {v} occurs in two sets")));
            }
            seen.extend(set.iter().copied());
            out.push(set);
        }
        Relation::empty(out.len())?;
        Ok(SetAlphabet { sets: out })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let sets: Vec<Vec<u64>> = serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("set alphabet JSON: {e}")))?;
        SetAlphabet::new(sets)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn set(&self, letter: Letter) -> &BTreeSet<u64> {
        &self.sets[letter - 1]
    }

    fn min(&self, letter: Letter) -> u64 {
        *self.sets[letter - 1].first().expect("non-empty")
    }

    fn max(&self, letter: Letter) -> u64 {
        *self.sets[letter - 1].last().expect("non-empty")
    }
}

/// `(U_A, V_A, S_A)` on the encoded set alphabet:
/// `B U B'` iff `min B > max B'`, `B V B'` iff `max B' >= min B > min B'`,
/// `B S B'` iff `min B > min B'`.
pub fn set_alphabet_relations(alpha: &SetAlphabet) -> (Relation, Relation, Relation) {
    let r = alpha.len();
    let u = Relation::from_fn(r, |b, c| alpha.min(b) > alpha.max(c));
    let v = Relation::from_fn(r, |b, c| {
        alpha.max(c) >= alpha.min(b) && alpha.min(b) > alpha.min(c)
    });
    let s = Relation::from_fn(r, |b, c| alpha.min(b) > alpha.min(c));
    (
        u.expect("size validated"),
        v.expect("size validated"),
        s.expect("size validated"),
    )
}
