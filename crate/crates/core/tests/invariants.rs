//! Randomized invariants that cut across modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use expcon::counts;
use expcon::exactring::parse_fraction;
use expcon::export::ExportEnvelope;
use expcon::hecke::{self, HeckeElement};
use expcon::partitions::{compositions_of, partitions_of};
use expcon::symgroup::{all_permutations, in_young_subgroup};
use expcon::{Basis, Composition, Context, LabeledMatrix, Partition, Permutation, QTFraction, QTLaurent, SymFunc};

fn laurent() -> impl Strategy<Value = QTLaurent> {
    prop::collection::vec(((-3i32..=3, -3i32..=3), -4i64..=4), 0..5).prop_map(|terms| {
        QTLaurent::from_terms(
            terms
                .into_iter()
                .map(|(e, c)| (e, BigRational::from_integer(BigInt::from(c)))),
        )
    })
}

fn nonzero_laurent() -> impl Strategy<Value = QTLaurent> {
    laurent().prop_filter("nonzero", |f| !f.is_zero())
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=max, 1..=max).prop_map(Partition::from_unsorted)
}

fn hecke_element(n: usize) -> impl Strategy<Value = HeckeElement> {
    prop::collection::vec((permutation(n), -2i64..=2, -1i32..=1), 1..4).prop_map(move |terms| {
        let mut h = HeckeElement::zero(n);
        for (w, c, e) in terms {
            h.add_term(w, QTFraction::from(QTLaurent::q_pow(e).scale(&BigRational::from_integer(c.into()))));
        }
        h
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a * &b).terms().all(|(_, k)| *k != BigRational::from_integer(0.into())));
    }

    #[test]
    fn fractions_compare_by_cross_multiplication(a in laurent(), b in nonzero_laurent(), k in nonzero_laurent()) {
        let x = QTFraction::new(a.clone(), b.clone()).unwrap();
        let y = QTFraction::new(&a * &k, &b * &k).unwrap();
        prop_assert_eq!(&x, &y);
        prop_assert!(!x.den().is_zero());
        prop_assert_eq!(&(&x * &QTFraction::from(b)), &QTFraction::from(a));
    }

    #[test]
    fn fraction_strings_reparse(a in laurent(), b in nonzero_laurent()) {
        let x = QTFraction::new(a, b).unwrap();
        prop_assert_eq!(parse_fraction(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn partition_conjugation(l in partition(6)) {
        prop_assert!(l.parts().windows(2).all(|w| w[0] >= w[1]) && l.parts().iter().all(|&p| p > 0));
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn dominance_reverses_under_conjugation(n in 1usize..=7, i in 0usize..15, j in 0usize..15) {
        let ps = partitions_of(n);
        let (a, b) = (&ps[i % ps.len()], &ps[j % ps.len()]);
        prop_assert_eq!(a.dominates(b), b.conjugate().dominates(&a.conjugate()));
    }

    #[test]
    fn length_is_reduced_word_length(w in permutation(6)) {
        let inversions = (0..6)
            .flat_map(|i| (i + 1..6).map(move |j| (i, j)))
            .filter(|&(i, j)| w.images()[i] > w.images()[j])
            .count();
        prop_assert_eq!(w.length(), inversions);
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), inversions);
        prop_assert_eq!(Permutation::from_word(6, &word).unwrap(), w.clone());
        prop_assert_eq!(w.compose(&w.inverse()), Permutation::identity(6));
    }

    #[test]
    fn hecke_multiplication_is_associative(a in hecke_element(4), b in hecke_element(4), c in hecke_element(4)) {
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left.sub(&right).unwrap().is_zero(), true);
        prop_assert!(left.terms().all(|(_, k)| !k.is_zero()));
    }

    #[test]
    fn basis_conversions_round_trip(n in 1usize..=5, seed in prop::collection::vec(-3i64..=3, 7)) {
        let sym = Context::new(n).unwrap();
        let sym = sym.sym();
        let k = sym.partitions().len();
        let coeffs: Vec<QTFraction> = (0..k).map(|i| QTFraction::integer(seed[i % seed.len()] + i as i64)).collect();
        for from in [Basis::Monomial, Basis::PowerSum, Basis::Schur] {
            let f = SymFunc::from_coeffs(from, n, coeffs.clone());
            for to in [Basis::Monomial, Basis::PowerSum, Basis::Schur] {
                let back = sym.convert(&sym.convert(&f, to).unwrap(), from).unwrap();
                prop_assert!(back == f, "{:?} -> {:?} -> {:?}", from, to, from);
            }
        }
    }
}

#[test]
fn contraction_entries_are_young_subgroup_membership() {
    for n in 1..=4 {
        let cols = compositions_of(n);
        let c = hecke::contraction_matrix(n, &cols);
        for (i, w) in c.rows().iter().enumerate() {
            for (j, pi) in cols.iter().enumerate() {
                let member = w.images().iter().enumerate().all(|(k, &img)| block(pi, k + 1) == block(pi, img));
                assert_eq!(c.get(i, j).is_one(), member);
                assert_eq!(in_young_subgroup(w, pi).unwrap(), member);
            }
        }
    }
}

fn block(pi: &Composition, j: usize) -> usize {
    let mut end = 0;
    for (b, &p) in pi.parts().iter().enumerate() {
        end += p;
        if j <= end {
            return b;
        }
    }
    unreachable!()
}

#[test]
fn kappa_is_the_identity_on_minimal_class_elements() {
    for n in 1..=5 {
        let ctx = Context::new(n).unwrap();
        let kappa = ctx.kappa().unwrap();
        for (i, _) in kappa.rows().iter().enumerate() {
            for (j, mu) in kappa.rows().iter().enumerate() {
                let gamma = expcon::symgroup::min_class_rep(mu);
                let entry = kappa.entry(&kappa.rows()[i], &gamma).unwrap();
                assert_eq!(entry.is_one(), i == j);
                assert_eq!(entry.is_zero(), i != j);
            }
        }
    }
}

#[test]
fn springer_ignores_part_order() {
    for n in 1..=4 {
        let ctx = Context::new(n).unwrap();
        for mu in partitions_of(n) {
            assert!(counts::springer_count(&ctx, &mu, &Composition::new(vec![n]).unwrap()).unwrap().is_one());
            for pi in compositions_of(n) {
                assert_eq!(
                    counts::springer_count(&ctx, &mu, &pi).unwrap(),
                    counts::springer_count(&ctx, &mu, &pi.sorted().as_composition()).unwrap(),
                    "{mu} {pi}"
                );
            }
        }
    }
}

#[test]
fn lusztig_counts_agree_on_left_and_right_extensions() {
    for n in 2..=5 {
        let ctx = Context::new(n).unwrap();
        for w in all_permutations(n) {
            for i in 1..n {
                let s = Permutation::simple(n, i).unwrap();
                let (left, right) = (s.compose(&w), w.compose(&s));
                if left.length() != w.length() + 1 || right.length() != w.length() + 1 {
                    continue;
                }
                for mu in partitions_of(n) {
                    assert_eq!(
                        counts::lusztig_count_w(&ctx, &mu, &left).unwrap(),
                        counts::lusztig_count_w(&ctx, &mu, &right).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn exported_tables_reparse() {
    let ctx = Context::new(4).unwrap();
    let m: &LabeledMatrix<Partition, Partition> = ctx.sym().b_matrix().unwrap();
    let env = ExportEnvelope::from_matrix(4, "b", m);
    assert_eq!(env.row_labels.len(), env.entries.len());
    assert!(env.entries.iter().all(|r| r.len() == env.col_labels.len()));
    let back = ExportEnvelope::from_json(&env.to_json()).unwrap();
    assert_eq!(back.values().unwrap(), m.entries());
}
