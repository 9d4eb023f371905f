use majinv::mahonian::{enumerate_mahonian_stats, total_orders};
use majinv::qseries::{q_factorial, q_multinomial, QPolynomial};
use majinv::relations::{is_kappa_extensible, is_kappa_extension, kappa_closure};
use majinv::statistics::{graphical_inv, graphical_maj, letter_counts, stat_fg};
use majinv::transform::{gamma, psi, psi_inverse};
use majinv::words::all_words;
use majinv::{Composition, GMap, MajInvStatistic, Relation, Word};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-50i64..50, 0..8).prop_map(|c| QPolynomial::from_i64s(&c))
}

fn relation(r: usize) -> impl Strategy<Value = Relation> {
    (0u64..1 << (r * r)).prop_map(move |m| Relation::from_mask(r, m).unwrap())
}

fn word(r: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=r, 0..=max_len).prop_map(move |l| Word::new(l, r).unwrap())
}

fn sized_relation_and_word() -> impl Strategy<Value = (Relation, Word)> {
    (1usize..=4).prop_flat_map(|r| (relation(r), word(r, 8)))
}

/// Gaussian binomials by `[n; k] = [n-1; k-1] + q^k [n-1; k]`, multiplied
/// along the composition.
fn multinomial_oracle(counts: &[usize]) -> QPolynomial {
    fn binomial(n: usize, k: usize) -> QPolynomial {
        let mut row = vec![QPolynomial::one()];
        for m in 1..=n {
            let mut next = vec![QPolynomial::one(); m + 1];
            for j in 1..m {
                next[j] = &row[j - 1] + &row[j].shift(j);
            }
            row = next;
        }
        row[k].clone()
    }
    let mut total = 0;
    let mut out = QPolynomial::one();
    for &c in counts {
        total += c;
        out = &out * &binomial(total, c);
    }
    out
}

proptest! {
    #[test]
    fn polynomial_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }
    }

    #[test]
    fn q_multinomial_matches_binomial_recurrence(counts in prop::collection::vec(0usize..5, 1..5)) {
        let c = Composition::new(counts.clone()).unwrap();
        prop_assert_eq!(q_multinomial(&c).unwrap(), multinomial_oracle(&counts));
    }

    #[test]
    fn q_factorial_shape(n in 0usize..30) {
        let f = q_factorial(n);
        prop_assert_eq!(f.degree(), Some(n * n.saturating_sub(1) / 2));
        let fact: num_bigint::BigInt = (1..=n).map(num_bigint::BigInt::from).product();
        prop_assert_eq!(f.eval_at_one(), fact);
    }

    #[test]
    fn inv_is_additive_over_disjoint_relations((a, w) in sized_relation_and_word(), mask in any::<u64>()) {
        let r = a.size();
        let b = Relation::from_mask(r, mask & ((1 << (r * r)) - 1)).unwrap().difference(&a).unwrap();
        let sum = graphical_inv(&a, &w).unwrap() + graphical_inv(&b, &w).unwrap();
        prop_assert_eq!(sum, graphical_inv(&a.union(&b).unwrap(), &w).unwrap());
    }

    #[test]
    fn maj_equals_inv_on_length_two(u in relation(4), x in 1usize..=4, y in 1usize..=4) {
        let w = Word::new(vec![x, y], 4).unwrap();
        prop_assert_eq!(graphical_maj(&u, &w).unwrap(), graphical_inv(&u, &w).unwrap());
    }

    #[test]
    fn psi_is_invertible_and_keeps_class((u, w) in sized_relation_and_word()) {
        let img = psi(&u, &w).unwrap();
        prop_assert_eq!(img.composition(), w.composition());
        prop_assert_eq!(img.last(), w.last());
        prop_assert_eq!(psi_inverse(&u, &img).unwrap(), w.clone());
        prop_assert_eq!(psi(&u, &psi_inverse(&u, &w).unwrap()).unwrap(), w);
    }

    #[test]
    fn psi_carries_stat_to_inv_for_closures((u, w) in sized_relation_and_word()) {
        prop_assume!(is_kappa_extensible(&u));
        let s = kappa_closure(&u);
        let v = s.difference(&u).unwrap();
        let left = graphical_inv(&s, &psi(&u, &w).unwrap()).unwrap();
        prop_assert_eq!(left, graphical_maj(&u, &w).unwrap() + graphical_inv(&v, &w).unwrap());
    }

    #[test]
    fn psi_carries_stat_to_inv_for_total_orders(r in 1usize..=4, pick in any::<prop::sample::Index>(), which in any::<prop::sample::Index>(), letters in prop::collection::vec(1usize..=4, 0..9)) {
        let orders = total_orders(r).unwrap();
        let s = pick.get(&orders);
        let stats = enumerate_mahonian_stats(s).unwrap();
        let stat = which.get(&stats);
        let w = Word::new(letters.into_iter().map(|x| (x - 1) % r + 1).collect(), r).unwrap();
        let left = graphical_inv(s, &psi(stat.u(), &w).unwrap()).unwrap();
        prop_assert_eq!(left, stat.eval(&w).unwrap());
    }
}

/// Every ordered pair `(U, S)` on `[3]` with `S` a kappa-extension of `U`.
fn extension_pairs() -> Vec<(Relation, Relation)> {
    let rels: Vec<Relation> = (0..512)
        .map(|m| Relation::from_mask(3, m).unwrap())
        .collect();
    let mut out = Vec::new();
    for u in &rels {
        for s in &rels {
            if is_kappa_extension(s, u).unwrap() {
                out.push((u.clone(), s.clone()));
            }
        }
    }
    out
}

#[test]
fn letter_and_gamma_identities_exhaustive() {
    let words: Vec<Word> = (1..=5).flat_map(|n| all_words(3, n)).collect();
    for (u, s) in extension_pairs() {
        let v = s.difference(&u).unwrap();
        let stat = |w: &Word| graphical_maj(&u, w).unwrap() + graphical_inv(&v, w).unwrap();
        for w in &words {
            for x in 1..=3 {
                let c = letter_counts(&u, &s, w, x).unwrap();
                let wx = w.appended(x).unwrap();
                let inv_w = graphical_inv(&s, w).unwrap();
                assert_eq!(graphical_inv(&s, &wx).unwrap(), inv_w + c.r + c.t);
                let g = graphical_inv(&s, &gamma(&u, x, w).unwrap()).unwrap();
                let ends_related = u.contains(w.last().unwrap(), x);
                if ends_related {
                    assert_eq!(g, inv_w + c.l, "U={u:?} S={s:?} w={w} x={x}");
                    assert_eq!(stat(&wx), stat(w) + c.t + w.len());
                } else {
                    assert_eq!(g + c.r, inv_w, "U={u:?} S={s:?} w={w} x={x}");
                    assert_eq!(stat(&wx), stat(w) + c.t);
                }
            }
        }
    }
}

#[test]
fn direct_gmap_formula_matches_relation_form() {
    let words: Vec<Word> = (0..=4).flat_map(|n| all_words(3, n)).collect();
    for s in total_orders(3).unwrap() {
        for stat in enumerate_mahonian_stats(&s).unwrap() {
            let m = majinv::relations::relation_to_gmap(stat.u(), &s).unwrap();
            for w in &words {
                assert_eq!(stat_fg(&m, w).unwrap(), stat.eval(w).unwrap());
            }
        }
    }
    let m = GMap::with_identity(vec![
        majinv::Threshold::Finite(3),
        majinv::Threshold::Infinity,
        majinv::Threshold::Infinity,
    ])
    .unwrap();
    let stat = MajInvStatistic::from_gmap(&m);
    assert_eq!(stat.u(), &Relation::from_pairs(3, &[(3, 1)]).unwrap());
    assert_eq!(
        stat.v(),
        &Relation::from_pairs(3, &[(2, 1), (3, 2)]).unwrap()
    );
}

#[test]
fn inv_and_maj_are_mahonian_up_to_weight_six() {
    for r in 1..=4 {
        let inv = MajInvStatistic::inv(r).unwrap();
        let maj = MajInvStatistic::maj(r).unwrap();
        for c in Composition::all_up_to(r, 6).unwrap() {
            let target = multinomial_oracle(c.counts());
            assert_eq!(majinv::distribution(&inv, &c).unwrap(), target);
            assert_eq!(majinv::distribution(&maj, &c).unwrap(), target);
        }
    }
}
