//! Enumeration of mahonian maj-inv statistics and exhaustive verifiers for
//! the equidistribution and classification results at small alphabet sizes.
//!
//! Verifiers never fail on a counterexample: they collect it into a
//! [`Report`]. Violations are sorted so a report is deterministic apart from
//! its timing field.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::qseries::{
    bipartitional_product_formula, distribution, multinomial, q_factorial, q_multinomial,
    q_multinomial_parts, ClassTable, QPolynomial,
};
use crate::relations::{
    extract_bipartition, forbidden_quadruple, is_bipartitional, is_kappa_extensible,
    is_total_order, kappa_closure, kappa_extension_unchecked, relation_from_bipartition, s_ab,
    s_prime_ab, u_ab, Bipartition, GMap, Relation,
};
use crate::statistics::{inv_of, maj_of, stat_fg, MajInvStatistic};
use crate::transform::psi_letters;
use crate::words::{all_words, Composition, Letter, Word};

/// Largest `r` for sweeps over pairs of relations (`2^(2 r^2)` cases).
pub const MAX_PAIR_SWEEP: usize = 3;
/// Largest `r` for sweeps over single relations (`2^(r^2)` cases).
pub const MAX_SINGLE_SWEEP: usize = 4;
/// Largest `r` for which the `r!` statistics of a total order are listed.
pub const MAX_STAT_ENUMERATION: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub case: String,
    pub detail: String,
}

impl Violation {
    fn new(case: impl Into<String>, detail: impl Into<String>) -> Self {
        Violation {
            case: case.into(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub checked: u64,
    pub violations: Vec<Violation>,
    pub witnesses: BTreeMap<String, Value>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn witness(&self, key: &str) -> Option<&Value> {
        self.witnesses.get(key)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct ReportBuilder {
    start: Instant,
    checked: u64,
    violations: Vec<Violation>,
    witnesses: BTreeMap<String, Value>,
}

impl ReportBuilder {
    fn new() -> Self {
        ReportBuilder {
            start: Instant::now(),
            checked: 0,
            violations: Vec::new(),
            witnesses: BTreeMap::new(),
        }
    }

    fn check(&mut self, ok: bool, case: impl FnOnce() -> String, detail: &str) {
        self.checked += 1;
        if !ok {
            self.violations.push(Violation::new(case(), detail));
        }
    }

    fn witness(&mut self, key: &str, value: Value) {
        self.witnesses.insert(key.to_string(), value);
    }

    fn finish(mut self) -> Report {
        self.violations.sort();
        Report {
            checked: self.checked,
            violations: self.violations,
            witnesses: self.witnesses,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

fn guard(what: &'static str, r: usize, cap: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::Input("alphabet size must be at least 1".into()));
    }
    if r > cap {
        return Err(Error::TooLarge { what, size: r, cap });
    }
    Ok(())
}

fn relation_value(rel: &Relation) -> Value {
    serde_json::to_value(rel).expect("relation serializes")
}

fn describe(rel: &Relation) -> String {
    rel.to_json()
}

/// All `2^(r^2)` relations on `[r]`, ordered by their bit mask.
pub fn enumerate_relations(r: usize) -> Result<impl Iterator<Item = Relation>> {
    guard("relation enumeration", r, MAX_SINGLE_SWEEP)?;
    Ok((0..1u64 << (r * r)).map(move |m| Relation::from_mask(r, m).expect("r <= 4")))
}

fn relations_vec(r: usize) -> Result<Vec<Relation>> {
    Ok(enumerate_relations(r)?.collect())
}

/// `f` with `x S y <=> f(x) > f(y)`, i.e. the rank of each letter in `S`.
fn rank_in(s: &Relation) -> Vec<Letter> {
    (1..=s.size())
        .map(|x| (1..=s.size()).filter(|&y| s.contains(x, y)).count() + 1)
        .collect()
}

/// The `r!` g-maps whose relations `S` extends, with `f` ranking `S`.
pub fn mahonian_gmaps(s: &Relation) -> Result<Vec<GMap>> {
    if !is_total_order(s) {
        return Err(Error::Domain(format!("{s:?} is not a total order")));
    }
    guard("statistic enumeration", s.size(), MAX_STAT_ENUMERATION)?;
    GMap::all_with_f(&rank_in(s))
}

/// The `r!` statistics `maj'_U + inv'_{S \ U}` with `S` a kappa-extension of `U`.
pub fn enumerate_mahonian_stats(s: &Relation) -> Result<Vec<MajInvStatistic>> {
    Ok(mahonian_gmaps(s)?
        .iter()
        .map(MajInvStatistic::from_gmap)
        .collect())
}

/// Total orders on `[r]`, one per permutation, in lexicographic order of the
/// ranking vector.
pub fn total_orders(r: usize) -> Result<Vec<Relation>> {
    guard("total order enumeration", r, MAX_STAT_ENUMERATION)?;
    let mut out = Vec::new();
    let mut perm: Vec<Letter> = (1..=r).collect();
    loop {
        out.push(Relation::from_fn(r, |x, y| perm[x - 1] > perm[y - 1])?);
        // next permutation
        let Some(i) = (1..r).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..r)
            .rev()
            .find(|&j| perm[j] > perm[i - 1])
            .expect("exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    Ok(out)
}

/// Whether `maj'_U + inv'_{S \ U}` and `inv'_S` agree on every class of
/// weight at most `max_weight`.
pub fn verify_equidistribution(u: &Relation, s: &Relation, max_weight: usize) -> Result<bool> {
    u.check_same_size(s)?;
    let table = ClassTable::new(u.size(), max_weight)?;
    let v = s.difference(u)?;
    let target = table.histograms(|w| inv_of(s, w));
    Ok(table.matches(|w| maj_of(u, w) + inv_of(&v, w), &target))
}

/// MacMahon: `inv`, `maj` and the q-multinomial agree on every class.
pub fn verify_macmahon(r: usize, max_weight: usize) -> Result<Report> {
    guard("macmahon sweep", r, MAX_SINGLE_SWEEP)?;
    let mut rep = ReportBuilder::new();
    let inv = MajInvStatistic::inv(r)?;
    let maj = MajInvStatistic::maj(r)?;
    let mut classes = 0;
    for c in Composition::all_up_to(r, max_weight)? {
        let target = q_multinomial(&c)?;
        rep.check(
            distribution(&inv, &c)? == target,
            || format!("c={c}"),
            "inv distribution differs from the q-multinomial",
        );
        rep.check(
            distribution(&maj, &c)? == target,
            || format!("c={c}"),
            "maj distribution differs from the q-multinomial",
        );
        classes += 1;
    }
    rep.witness("classes", json!(classes));
    Ok(rep.finish())
}

/// For every ordered pair `(U, S)` on `[r]`: equidistribution up to
/// `max_weight` holds iff `S` is a kappa-extension of `U`.
pub fn verify_theorem_majinv(r: usize, max_weight: usize) -> Result<Report> {
    guard("theorem sweep over relation pairs", r, MAX_PAIR_SWEEP)?;
    let mut rep = ReportBuilder::new();
    let table = ClassTable::new(r, max_weight)?;
    let rels = relations_vec(r)?;

    let per_s: Vec<(u64, u64, Vec<Violation>)> = rels
        .par_iter()
        .map(|s| {
            let target = table.histograms(|w| inv_of(s, w));
            let mut checked = 0;
            let mut extensions = 0;
            let mut bad = Vec::new();
            for u in &rels {
                let v = s.difference(u).expect("same size");
                let equi = table.matches(|w| maj_of(u, w) + inv_of(&v, w), &target);
                let ext = kappa_extension_unchecked(s, u);
                checked += 1;
                extensions += ext as u64;
                if equi != ext {
                    bad.push(Violation::new(
                        format!("U={} S={}", describe(u), describe(s)),
                        format!("equidistributed={equi} but kappa_extension={ext}"),
                    ));
                }
            }
            (checked, extensions, bad)
        })
        .collect();

    let mut extensions = 0;
    for (checked, ext, bad) in per_s {
        rep.checked += checked;
        extensions += ext;
        rep.violations.extend(bad);
    }
    rep.witness("pairs", json!(rels.len() * rels.len()));
    rep.witness("kappa_extension_pairs", json!(extensions));
    rep.witness("max_weight", json!(max_weight));
    Ok(rep.finish())
}

/// The classification predicate: `U`, `V` disjoint, `U + V` a total order
/// and a kappa-extension of `U`.
pub fn is_classified_pair(u: &Relation, v: &Relation) -> bool {
    if u.size() != v.size() || !u.is_disjoint(v) {
        return false;
    }
    let s = u.union(v).expect("same size");
    is_total_order(&s) && kappa_extension_unchecked(&s, u)
}

/// For every pair `(U, V)`: mahonian up to `max_weight` iff the
/// classification predicate holds, and the passing pairs number `r! * r!`.
pub fn verify_classification(r: usize, max_weight: usize) -> Result<Report> {
    guard(
        "classification sweep over relation pairs",
        r,
        MAX_PAIR_SWEEP,
    )?;
    let mut rep = ReportBuilder::new();
    let table = ClassTable::new(r, max_weight)?;
    let target = table.mahonian_histograms();
    let rels = relations_vec(r)?;

    type MaskPair = (u64, u64);
    let results: Vec<(Vec<MaskPair>, Vec<Violation>)> = rels
        .par_iter()
        .map(|u| {
            let mut found = Vec::new();
            let mut bad = Vec::new();
            for v in &rels {
                let mahonian = table.matches(|w| maj_of(u, w) + inv_of(v, w), &target);
                let predicted = is_classified_pair(u, v);
                if mahonian {
                    found.push((u.to_mask(), v.to_mask()));
                }
                if mahonian != predicted {
                    bad.push(Violation::new(
                        format!("U={} V={}", describe(u), describe(v)),
                        format!("mahonian={mahonian} but classified={predicted}"),
                    ));
                }
            }
            (found, bad)
        })
        .collect();

    let mut mahonian_pairs = BTreeSet::new();
    for (found, bad) in results {
        rep.checked += rels.len() as u64;
        mahonian_pairs.extend(found);
        rep.violations.extend(bad);
    }

    let expected: u64 = (1..=r as u64).product::<u64>().pow(2);
    rep.check(
        mahonian_pairs.len() as u64 == expected,
        || "count".into(),
        &format!(
            "{} mahonian pairs, expected r!*r! = {expected}",
            mahonian_pairs.len()
        ),
    );

    let mut enumerated = BTreeSet::new();
    for s in total_orders(r)? {
        for stat in enumerate_mahonian_stats(&s)? {
            enumerated.insert((stat.u().to_mask(), stat.v().to_mask()));
        }
    }
    rep.check(
        enumerated == mahonian_pairs,
        || "enumeration".into(),
        "statistics listed from g-maps differ from the mahonian pairs found by the sweep",
    );

    rep.witness("mahonian_pairs", json!(mahonian_pairs.len()));
    rep.witness("expected", json!(expected));
    rep.witness("max_weight", json!(max_weight));
    Ok(rep.finish())
}

/// Every classified statistic, `r!` per total order.
pub fn classified_statistics(r: usize) -> Result<Vec<MajInvStatistic>> {
    let mut out = Vec::new();
    for s in total_orders(r)? {
        out.extend(enumerate_mahonian_stats(&s)?);
    }
    Ok(out)
}

/// Separates every pair of distinct classified statistics by a word of
/// length at most `max_len`. Unseparated pairs are violations.
pub fn verify_distinctness(r: usize, max_len: usize) -> Result<Report> {
    guard("distinctness sweep", r, MAX_PAIR_SWEEP)?;
    let mut rep = ReportBuilder::new();
    let stats = classified_statistics(r)?;
    let words: Vec<Vec<Letter>> = (0..=max_len)
        .flat_map(|n| all_words(r, n))
        .map(Word::into_letters)
        .collect();
    let values: Vec<Vec<usize>> = stats
        .iter()
        .map(|s| words.iter().map(|w| s.eval_letters(w)).collect())
        .collect();

    let mut longest = 0;
    for i in 0..stats.len() {
        for j in (i + 1)..stats.len() {
            let sep = (0..words.len()).find(|&k| values[i][k] != values[j][k]);
            if let Some(k) = sep {
                longest = longest.max(words[k].len());
            }
            rep.check(
                sep.is_some(),
                || {
                    format!(
                        "({}, {}) vs ({}, {})",
                        describe(stats[i].u()),
                        describe(stats[i].v()),
                        describe(stats[j].u()),
                        describe(stats[j].v())
                    )
                },
                &format!("no separating word of length <= {max_len}"),
            );
        }
    }
    rep.witness("statistics", json!(stats.len()));
    rep.witness("longest_separating_word", json!(longest));
    Ok(rep.finish())
}

/// For every relation `U`: `psi` permutes each set of words of a given
/// length within rearrangement classes and keeps the last letter; for every
/// kappa-extension `S` of `U`: `inv'_S(psi(w)) = maj'_U(w) + inv'_{S \ U}(w)`.
pub fn verify_psi(r: usize, max_len: usize) -> Result<Report> {
    guard("transformation sweep", r, MAX_PAIR_SWEEP)?;
    let mut rep = ReportBuilder::new();
    let rels = relations_vec(r)?;
    let by_len: Vec<Vec<Vec<Letter>>> = (0..=max_len)
        .map(|n| {
            all_words(r, n)
                .into_iter()
                .map(Word::into_letters)
                .collect()
        })
        .collect();

    let results: Vec<(u64, u64, Vec<Violation>)> = rels
        .par_iter()
        .map(|u| {
            let mut checked = 0;
            let mut pairs = 0;
            let mut bad = Vec::new();
            let mut push = |detail: &str, w: &[Letter]| {
                bad.push(Violation::new(
                    format!("U={} w={}", describe(u), Word::from_trusted(w.to_vec(), r)),
                    detail,
                ))
            };
            let images: Vec<Vec<Vec<Letter>>> = by_len
                .iter()
                .map(|ws| ws.iter().map(|w| psi_letters(u, w)).collect())
                .collect();
            for (ws, imgs) in by_len.iter().zip(&images) {
                let mut seen = HashSet::with_capacity(ws.len());
                for (w, img) in ws.iter().zip(imgs) {
                    checked += 1;
                    let mut a = w.clone();
                    let mut b = img.clone();
                    a.sort_unstable();
                    b.sort_unstable();
                    if a != b {
                        push("image leaves the rearrangement class", w);
                    }
                    if w.last() != img.last() {
                        push("last letter not preserved", w);
                    }
                    if !seen.insert(img.clone()) {
                        push("image already taken", w);
                    }
                }
            }
            for s in &rels {
                if !kappa_extension_unchecked(s, u) {
                    continue;
                }
                pairs += 1;
                let v = s.difference(u).expect("same size");
                for (ws, imgs) in by_len.iter().zip(&images) {
                    for (w, img) in ws.iter().zip(imgs) {
                        checked += 1;
                        if inv_of(s, img) != maj_of(u, w) + inv_of(&v, w) {
                            bad.push(Violation::new(
                                format!(
                                    "U={} S={} w={}",
                                    describe(u),
                                    describe(s),
                                    Word::from_trusted(w.clone(), r)
                                ),
                                "inv'_S(psi(w)) differs from (maj'_U + inv'_{S\\U})(w)",
                            ));
                        }
                    }
                }
            }
            (checked, pairs, bad)
        })
        .collect();

    let mut pairs = 0;
    for (checked, p, bad) in results {
        rep.checked += checked;
        pairs += p;
        rep.violations.extend(bad);
    }
    rep.witness("relations", json!(rels.len()));
    rep.witness("kappa_extension_pairs", json!(pairs));
    rep.witness("max_len", json!(max_len));
    Ok(rep.finish())
}

/// Every bipartition of `[r]`: ordered set partitions with one bit per block.
/// Independent of [`extract_bipartition`]; used to confirm the axioms match
/// the block definition.
pub fn all_bipartitions(r: usize) -> Result<Vec<Bipartition>> {
    guard("bipartition enumeration", r, MAX_SINGLE_SWEEP)?;
    let mut out = Vec::new();
    // assign each letter a block label, keep labelings whose labels are 0..k
    let total = r.pow(r as u32);
    for code in 0..total {
        let labels: Vec<usize> = (0..r).map(|i| (code / r.pow(i as u32)) % r).collect();
        let k = labels.iter().max().expect("r >= 1") + 1;
        if (0..k).any(|l| !labels.contains(&l)) {
            continue;
        }
        let blocks: Vec<Vec<Letter>> = (0..k)
            .map(|l| (1..=r).filter(|&x| labels[x - 1] == l).collect())
            .collect();
        for bits in 0..1u32 << k {
            let betas = (0..k).map(|l| (bits >> l) & 1 == 1).collect();
            out.push(Bipartition::new(r, blocks.clone(), betas)?);
        }
    }
    Ok(out)
}

/// Kappa-extension machinery over every relation on `[r]`:
/// bipartitional iff self-extending, the axioms match the block definition,
/// kappa-extensibility matches both the closure test and the existence of
/// some extension, the closure is the least extension and bipartitional,
/// and bipartitions round-trip. Also rejects the chain `{(1,2),(2,3)}` and
/// divisibility on `[9]`.
pub fn verify_kappa_machinery(r: usize) -> Result<Report> {
    guard("kappa-closure sweep", r, MAX_PAIR_SWEEP)?;
    let mut rep = ReportBuilder::new();
    let rels = relations_vec(r)?;

    let from_blocks: HashSet<Relation> = all_bipartitions(r)?
        .iter()
        .map(relation_from_bipartition)
        .collect();

    let mut bipartitional = 0;
    let mut extensible = 0;
    for u in &rels {
        let case = || format!("U={}", describe(u));
        let bip = is_bipartitional(u);
        bipartitional += bip as u64;
        rep.check(
            bip == kappa_extension_unchecked(u, u),
            case,
            "bipartitional differs from kappa-extension of itself",
        );
        rep.check(
            bip == from_blocks.contains(u),
            case,
            "axioms disagree with the block definition",
        );
        if bip {
            let round_trip = extract_bipartition(u).map(|b| relation_from_bipartition(&b));
            rep.check(
                round_trip.as_ref() == Ok(u),
                case,
                "bipartition does not round-trip",
            );
        }

        let ext = is_kappa_extensible(u);
        extensible += ext as u64;
        let closure = kappa_closure(u);
        let closure_extends = kappa_extension_unchecked(&closure, u);
        let extensions: Vec<&Relation> = rels
            .iter()
            .filter(|s| kappa_extension_unchecked(s, u))
            .collect();
        rep.check(
            ext == closure_extends,
            case,
            "extensible differs from closure being an extension",
        );
        rep.check(
            ext == !extensions.is_empty(),
            case,
            "extensible differs from existence of an extension",
        );
        if ext {
            rep.check(
                extensions.iter().all(|s| closure.is_subset(s)),
                case,
                "closure is not contained in every extension",
            );
            rep.check(
                is_bipartitional(&closure),
                case,
                "closure is not bipartitional",
            );
        }
    }

    let chain = Relation::from_pairs(3, &[(1, 2), (2, 3)])?;
    rep.check(
        !is_kappa_extensible(&chain),
        || "chain {(1,2),(2,3)}".into(),
        "accepted as kappa-extensible",
    );
    let divides = crate::relations::divides(9)?;
    let pattern = divides.contains(3, 9)
        && !divides.contains(2, 9)
        && !divides.contains(3, 4)
        && divides.contains(2, 4);
    rep.check(
        pattern,
        || "divides on [9]".into(),
        "(3,9,2,4) is not a forbidden quadruple",
    );
    rep.check(
        !is_kappa_extensible(&divides),
        || "divides on [9]".into(),
        "accepted as kappa-extensible",
    );

    rep.witness("relations", json!(rels.len()));
    rep.witness("bipartitional", json!(bipartitional));
    rep.witness("kappa_extensible", json!(extensible));
    rep.witness("chain_quadruple", json!(forbidden_quadruple(&chain)));
    rep.witness("divides_quadruple", json!(forbidden_quadruple(&divides)));
    Ok(rep.finish())
}

/// For every kappa-extensible `U` with closure `H`, the distribution of
/// `maj'_U + inv'_{H \ U}` matches the bipartitional product formula.
pub fn verify_product_formula(r: usize, max_weight: usize) -> Result<Report> {
    guard("product formula sweep", r, MAX_SINGLE_SWEEP)?;
    let mut rep = ReportBuilder::new();
    let comps = Composition::all_up_to(r, max_weight)?;
    let rels: Vec<Relation> = relations_vec(r)?
        .into_iter()
        .filter(is_kappa_extensible)
        .collect();

    let results: Vec<Vec<Violation>> = rels
        .par_iter()
        .map(|u| {
            let h = kappa_closure(u);
            let b = match extract_bipartition(&h) {
                Ok(b) => b,
                Err(e) => {
                    return vec![Violation::new(
                        format!("U={}", describe(u)),
                        format!("closure has no bipartition: {e}"),
                    )]
                }
            };
            let stat = MajInvStatistic::new(u.clone(), h.difference(u).expect("same size"))
                .expect("same size");
            comps
                .iter()
                .filter_map(|c| {
                    let brute = distribution(&stat, c).expect("sizes agree");
                    let formula = bipartitional_product_formula(c, &b).expect("sizes agree");
                    (brute != formula).then(|| {
                        Violation::new(
                            format!("U={} c={c}", describe(u)),
                            format!("distribution {brute} but formula {formula}"),
                        )
                    })
                })
                .collect()
        })
        .collect();
    for bad in results {
        rep.checked += comps.len() as u64;
        rep.violations.extend(bad);
    }
    rep.witness("kappa_extensible_relations", json!(rels.len()));
    rep.witness("compositions", json!(comps.len()));
    rep.witness("exponent", json!("beta_l * binom(m_l, 2)"));
    Ok(rep.finish())
}

fn subsets(r: usize) -> Vec<BTreeSet<Letter>> {
    (0..1u32 << r)
        .map(|bits| (1..=r).filter(|&x| (bits >> (x - 1)) & 1 == 1).collect())
        .collect()
}

/// `stat_{g_k}` read off its ratio form: descents with `x_i / x_{i+1} > k`
/// weighted by position, plus pairs with `k >= x_i / x_j > 1`.
pub fn stat_g_k_ratio_form(k: Ratio<u64>, w: &[Letter]) -> usize {
    let ratio = |a: Letter, b: Letter| Ratio::new(a as u64, b as u64);
    let one = Ratio::from_integer(1);
    let mut total = 0;
    for (i, p) in w.windows(2).enumerate() {
        if ratio(p[0], p[1]) > k {
            total += i + 1;
        }
    }
    for (i, &a) in w.iter().enumerate() {
        for &b in &w[i + 1..] {
            let q = ratio(a, b);
            if k >= q && q > one {
                total += 1;
            }
        }
    }
    total
}

/// `stat_{H_B}` read off its set form: descents onto a letter of `B`
/// weighted by position, plus inversions whose smaller letter avoids `B`.
pub fn stat_h_b_set_form(b: &BTreeSet<Letter>, w: &[Letter]) -> usize {
    let mut total = 0;
    for (i, p) in w.windows(2).enumerate() {
        if p[0] > p[1] && b.contains(&p[1]) {
            total += i + 1;
        }
    }
    for (i, &x) in w.iter().enumerate() {
        for &y in &w[i + 1..] {
            if x > y && !b.contains(&y) {
                total += 1;
            }
        }
    }
    total
}

/// Distribution of `stat_{E,O}` over the symmetric group `S_r`:
/// `m! * [r]_q! / [m]_q!` with `m = floor((r + 1) / 2)`.
pub fn stat_eo_permutation_formula(r: usize) -> QPolynomial {
    let m = r.div_ceil(2);
    let m_fact: BigInt = (1..=m).map(BigInt::from).product();
    q_factorial(r)
        .div_exact(&q_factorial(m))
        .expect("[m]_q! divides [r]_q!")
        .scale(&m_fact)
}

/// Closed form for the distribution of `stat_{A,B}` on `R(c)`:
/// `multinomial(m(A^c); c(A^c)) * [n; c(a_1), ..., c(a_k), m(A^c)]_q`.
pub fn stat_ab_formula(a: &BTreeSet<Letter>, c: &Composition) -> Result<QPolynomial> {
    let r = c.alphabet_size();
    let outside: Vec<usize> = (1..=r)
        .filter(|x| !a.contains(x))
        .map(|x| c.count(x))
        .collect();
    let m_out: usize = outside.iter().sum();
    let mut parts: Vec<usize> = a.iter().rev().map(|&x| c.count(x)).collect();
    parts.push(m_out);
    Ok(q_multinomial_parts(&parts)?.scale(&BigInt::from(multinomial(&outside))))
}

/// The families of new mahonian statistics: `stat_{g_k}`, `stat_{H_B}`,
/// `stat'_{A,B}` and `stat_{A,B}` for `r <= 4`, and `stat_{E,O}` on `S_3`
/// and `S_4`.
pub fn verify_applications(max_weight: usize) -> Result<Report> {
    let mut rep = ReportBuilder::new();
    for r in 1..=MAX_SINGLE_SWEEP {
        let table = ClassTable::new(r, max_weight)?;
        let target = table.mahonian_histograms();
        let gt = crate::relations::natural_order(r)?;
        let words: Vec<Word> = (0..=max_weight.min(5))
            .flat_map(|n| all_words(r, n))
            .collect();

        let ks: Vec<Ratio<u64>> = {
            let mut ks = vec![
                Ratio::from_integer(1),
                Ratio::new(3, 2),
                Ratio::from_integer(2),
                Ratio::from_integer(r as u64),
            ];
            ks.sort();
            ks.dedup();
            ks
        };
        for &k in &ks {
            let m = GMap::g_k(r, k)?;
            let stat = MajInvStatistic::from_gmap(&m);
            let case = || format!("g_k r={r} k={k}");
            rep.check(
                table.matches(|w| stat.eval_letters(w), &target),
                case,
                "stat_{g_k} is not mahonian",
            );
            rep.check(
                words.iter().all(|w| {
                    let direct = stat_fg(&m, w).expect("letters in range");
                    direct == stat.eval(w).expect("letters in range")
                        && direct == stat_g_k_ratio_form(k, w.letters())
                }),
                case,
                "stat_{g_k} formula, ratio form and relation form disagree",
            );
        }
        // The displayed formula gives g_1 = maj and g_r = inv.
        let g1 = MajInvStatistic::from_gmap(&GMap::g_k(r, Ratio::from_integer(1))?);
        let gr = MajInvStatistic::from_gmap(&GMap::g_k(r, Ratio::from_integer(r as u64))?);
        rep.check(
            words.iter().all(|w| {
                g1.eval_letters(w.letters()) == maj_of(&gt, w.letters())
                    && gr.eval_letters(w.letters()) == inv_of(&gt, w.letters())
            }),
            || format!("g_1/g_r r={r}"),
            "stat_{g_1} is not maj or stat_{g_r} is not inv",
        );

        for b in subsets(r) {
            let m = GMap::h_b(r, &b)?;
            let stat = MajInvStatistic::from_gmap(&m);
            let case = || format!("H_B r={r} B={b:?}");
            rep.check(
                table.matches(|w| stat.eval_letters(w), &target),
                case,
                "stat_{H_B} is not mahonian",
            );
            rep.check(
                words
                    .iter()
                    .all(|w| stat.eval_letters(w.letters()) == stat_h_b_set_form(&b, w.letters())),
                case,
                "stat_{H_B} set form and relation form disagree",
            );
        }

        let sets = subsets(r);
        let comps = Composition::all_up_to(r, max_weight)?;
        for a in &sets {
            let s = s_ab(r, a)?;
            let s_prime = s_prime_ab(r, a)?;
            let expected_blocks: Vec<Vec<Letter>> = a
                .iter()
                .rev()
                .map(|&x| vec![x])
                .chain(
                    Some((1..=r).filter(|x| !a.contains(x)).collect::<Vec<_>>())
                        .filter(|rest| !rest.is_empty()),
                )
                .collect();
            let bip = extract_bipartition(&s);
            rep.check(
                bip.as_ref()
                    .is_ok_and(|b| b.blocks() == expected_blocks && b.betas().iter().all(|&x| !x)),
                || format!("S_AB r={r} A={a:?}"),
                "S_{A,B} does not have the expected bipartition",
            );
            for b in &sets {
                let u = u_ab(r, a, b)?;
                let case = || format!("A,B r={r} A={a:?} B={b:?}");
                rep.check(
                    kappa_extension_unchecked(&s, &u) && kappa_extension_unchecked(&s_prime, &u),
                    case,
                    "S_{A,B} or S'_{A,B} is not a kappa-extension of U_{A,B}",
                );
                let stat_prime = MajInvStatistic::new(u.clone(), s_prime.difference(&u)?)?;
                rep.check(
                    table.matches(|w| stat_prime.eval_letters(w), &target),
                    case,
                    "stat'_{A,B} is not mahonian",
                );
                let stat = MajInvStatistic::new(u.clone(), s.difference(&u)?)?;
                for c in &comps {
                    let brute = distribution(&stat, c)?;
                    let formula = stat_ab_formula(a, c)?;
                    rep.check(
                        brute == formula,
                        || format!("A,B r={r} A={a:?} B={b:?} c={c}"),
                        "stat_{A,B} distribution differs from the closed form",
                    );
                }
            }
        }
    }

    let mut eo = BTreeMap::new();
    for r in [3usize, 4] {
        let evens: BTreeSet<Letter> = (1..=r).filter(|x| x % 2 == 0).collect();
        let odds: BTreeSet<Letter> = (1..=r).filter(|x| x % 2 == 1).collect();
        let stat = MajInvStatistic::new(
            u_ab(r, &evens, &odds)?,
            s_ab(r, &evens)?.difference(&u_ab(r, &evens, &odds)?)?,
        )?;
        let brute = distribution(&stat, &Composition::new(vec![1; r])?)?;
        let formula = stat_eo_permutation_formula(r);
        rep.check(
            brute == formula,
            || format!("E,O r={r}"),
            "stat_{E,O} distribution over permutations differs from the closed form",
        );
        eo.insert(format!("S_{r}"), json!(brute.to_string()));
    }
    rep.witness("stat_EO", json!(eo));
    rep.witness("g_1", json!("maj"));
    rep.witness("g_r", json!("inv"));
    rep.witness("max_weight", json!(max_weight));
    Ok(rep.finish())
}

/// Distribution of set-`MAJ` over the permutations of the `r` sets.
pub fn set_maj_permutation_distribution(
    alpha: &crate::relations::SetAlphabet,
) -> Result<QPolynomial> {
    let stat = MajInvStatistic::set_maj(alpha);
    distribution(&stat, &Composition::new(vec![1; alpha.len()])?)
}

/// Builds the JSON form of a statistic list for display.
pub fn statistics_json(s: &Relation) -> Result<Value> {
    let gmaps = mahonian_gmaps(s)?;
    Ok(Value::Array(
        gmaps
            .iter()
            .map(|m| {
                let stat = MajInvStatistic::from_gmap(m);
                json!({
                    "u": relation_value(stat.u()),
                    "v": relation_value(stat.v()),
                    "f": m.f_values(),
                    "g": m.g_values(),
                })
            })
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::is_mahonian_up_to;
    use crate::relations::{natural_order, Threshold};

    #[test]
    fn enumerate_relations_counts() {
        assert_eq!(enumerate_relations(1).unwrap().count(), 2);
        assert_eq!(enumerate_relations(2).unwrap().count(), 16);
        let chain = Relation::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
        let supersets = enumerate_relations(3)
            .unwrap()
            .filter(|s| chain.is_subset(s))
            .count();
        assert_eq!(supersets, 128);
        assert!(matches!(
            enumerate_relations(5),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn mahonian_stat_examples() {
        assert_eq!(
            enumerate_mahonian_stats(&natural_order(3).unwrap())
                .unwrap()
                .len(),
            6
        );
        let one = enumerate_mahonian_stats(&natural_order(1).unwrap()).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].u().is_empty() && one[0].v().is_empty());

        let two = enumerate_mahonian_stats(&natural_order(2).unwrap()).unwrap();
        type Pairs = Vec<(usize, usize)>;
        let pairs: BTreeSet<(Pairs, Pairs)> = two
            .iter()
            .map(|s| (s.u().pairs().collect(), s.v().pairs().collect()))
            .collect();
        let expected: BTreeSet<_> = [(vec![(2, 1)], vec![]), (vec![], vec![(2, 1)])]
            .into_iter()
            .collect();
        assert_eq!(pairs, expected);

        assert!(matches!(
            enumerate_mahonian_stats(&Relation::full(2).unwrap()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn mahonian_stats_are_disjoint_and_extend() {
        for r in 1..=4 {
            for s in total_orders(r).unwrap() {
                let stats = enumerate_mahonian_stats(&s).unwrap();
                let distinct: HashSet<_> = stats.iter().cloned().collect();
                assert_eq!(distinct.len(), (1..=r).product::<usize>());
                for st in &stats {
                    assert!(st.u().is_disjoint(st.v()));
                    assert_eq!(st.u().union(st.v()).unwrap(), s);
                    assert!(kappa_extension_unchecked(&s, st.u()));
                }
            }
        }
    }

    #[test]
    fn total_order_count() {
        for r in 1..=5 {
            let orders = total_orders(r).unwrap();
            assert_eq!(orders.len(), (1..=r).product::<usize>());
            assert!(orders.iter().all(is_total_order));
        }
    }

    #[test]
    fn equidistribution_examples() {
        let gt = natural_order(3).unwrap();
        assert!(verify_equidistribution(&crate::relations::u_k(3, 2).unwrap(), &gt, 4).unwrap());
        let chain = Relation::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(!verify_equidistribution(&chain, &kappa_closure(&chain), 3).unwrap());
        let empty = Relation::empty(3).unwrap();
        for mask in [0u64, 7, 100, 511] {
            let s = Relation::from_mask(3, mask).unwrap();
            assert!(verify_equidistribution(&empty, &s, 3).unwrap());
        }
    }

    #[test]
    fn small_sweeps() {
        let rep = verify_theorem_majinv(1, 3).unwrap();
        assert!(rep.is_clean(), "{rep:?}");
        let rep = verify_theorem_majinv(2, 4).unwrap();
        assert!(rep.is_clean(), "{rep:?}");
        assert_eq!(rep.checked, 256);

        let rep = verify_classification(1, 3).unwrap();
        assert!(rep.is_clean());
        assert_eq!(rep.witness("mahonian_pairs"), Some(&json!(1)));
        let rep = verify_classification(2, 4).unwrap();
        assert!(rep.is_clean(), "{rep:?}");
        assert_eq!(rep.witness("mahonian_pairs"), Some(&json!(4)));

        assert!(verify_distinctness(2, 3).unwrap().is_clean());
        assert!(matches!(
            verify_theorem_majinv(4, 2),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn length_one_words_do_not_separate() {
        let rep = verify_distinctness(2, 1).unwrap();
        assert!(!rep.is_clean());
        assert_eq!(rep.violations.len(), 6);
    }

    #[test]
    fn bipartition_enumeration_counts() {
        // ordered set partitions (Fubini numbers) weighted by 2^blocks: 2, 10, 74
        assert_eq!(all_bipartitions(1).unwrap().len(), 2);
        assert_eq!(all_bipartitions(2).unwrap().len(), 10);
        assert_eq!(all_bipartitions(3).unwrap().len(), 74);
    }

    #[test]
    fn eo_formula_values() {
        assert_eq!(
            stat_eo_permutation_formula(3),
            QPolynomial::from_i64s(&[2, 2, 2])
        );
        let expected = &(&QPolynomial::from_i64s(&[1, 1, 1])
            * &QPolynomial::from_i64s(&[1, 1, 1, 1]))
            .scale(&BigInt::from(2));
        assert_eq!(&stat_eo_permutation_formula(4), expected);
    }

    #[test]
    fn statistics_json_lists_gmaps() {
        let v = statistics_json(&natural_order(2).unwrap()).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 2);
        assert_eq!(arr[0]["g"], json!([2, "inf"]));
        assert_eq!(arr[1]["g"], json!(["inf", "inf"]));
        let _ = Threshold::Infinity;
    }

    #[test]
    fn classification_at_three_finds_cyclic_pairs() {
        let rep = verify_classification(3, 5).unwrap();
        assert_eq!(rep.witness("mahonian_pairs"), Some(&json!(42)));
        let extra: Vec<_> = rep
            .violations
            .iter()
            .filter(|v| v.case.starts_with("U="))
            .collect();
        assert_eq!(extra.len(), 6);
        // each extra pair is one arc of a 3-cycle against the other two
        for rels in enumerate_relations(3).unwrap().filter(|u| u.len() == 1) {
            let (x, y) = rels.pairs().next().unwrap();
            if x == y {
                continue;
            }
            let z = 6 - x - y;
            let v = Relation::from_pairs(3, &[(y, z), (z, x)]).unwrap();
            assert!(!is_classified_pair(&rels, &v));
            assert!(is_mahonian_up_to(&MajInvStatistic::new(rels, v).unwrap(), 5));
        }
    }
}
