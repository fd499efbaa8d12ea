use std::collections::BTreeSet;

use hecke_fh::combinatorics::*;
use proptest::prelude::*;

fn inversions(p: &Permutation) -> usize {
    let w = p.word();
    (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count()
}

fn young_subgroup(c: &Composition) -> Vec<Permutation> {
    all_permutations(c.size()).into_iter().filter(|s| c.preserves(s)).collect()
}

#[test]
fn matsumoto_reachability() {
    for n in 1..=5 {
        for w in all_permutations(n) {
            let all = all_reduced_words(&w);
            assert_eq!(reduced_words_by_moves(&w.reduced_word()), all, "{w}");
            for word in &all {
                assert_eq!(Permutation::from_generators(n, word).unwrap(), w);
            }
        }
    }
}

#[test]
fn distinguished_reps_are_coset_minima() {
    for n in 1..=5 {
        for c in compositions(n) {
            let reps = distinguished_reps(&c);
            let sub = young_subgroup(&c);
            let fact = |k: usize| (1..=k).product::<usize>();
            assert_eq!(reps.len(), fact(n) / c.parts().iter().map(|&p| fact(p)).product::<usize>());
            let mut seen = BTreeSet::new();
            for w in &reps {
                let coset: Vec<Permutation> = sub.iter().map(|s| s.compose(w).unwrap()).collect();
                for x in &coset {
                    assert!(seen.insert(x.clone()), "cosets of ({c}) overlap at {x}");
                    if x != w {
                        assert!(x.length() > w.length(), "{w} is not the unique minimum of its coset");
                    }
                }
            }
            assert_eq!(seen.len(), fact(n));
        }
    }
}

#[test]
fn mobius_sums_vanish() {
    for n in 1..=6 {
        for c in compositions(n) {
            let total: i32 = c.coarsenings().iter().map(|d| mobius(&c, d).unwrap()).sum();
            assert_eq!(total, if c.len() == 1 { 1 } else { 0 }, "({c})");
        }
    }
}

fn composition_strategy() -> impl Strategy<Value = (Composition, Composition, Composition)> {
    (1usize..=7).prop_flat_map(|n| {
        let comp = prop::collection::btree_set(1..n.max(2), 0..n).prop_map(move |d| {
            let mut d: BTreeSet<usize> = d.into_iter().filter(|&x| x < n).collect();
            d.insert(n);
            Composition::from_descents(n, &d)
        });
        (comp.clone(), comp.clone(), comp)
    })
}

fn permutation_strategy() -> impl Strategy<Value = Permutation> {
    (1usize..=8).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::from_word(&w).unwrap())
}

proptest! {
    #[test]
    fn length_is_inversion_count(p in permutation_strategy()) {
        prop_assert_eq!(p.length(), inversions(&p));
        prop_assert_eq!(p.reduced_word().len(), p.length());
        prop_assert_eq!(Permutation::from_generators(p.n(), &p.reduced_word()).unwrap(), p.clone());
        prop_assert_eq!(p.inverse().length(), p.length());
    }

    #[test]
    fn join_is_a_semilattice((a, b, c) in composition_strategy()) {
        let ab = a.join(&b).unwrap();
        prop_assert_eq!(&ab, &b.join(&a).unwrap());
        prop_assert_eq!(&a.join(&a).unwrap(), &a);
        prop_assert_eq!(ab.join(&c).unwrap(), a.join(&b.join(&c).unwrap()).unwrap());
        let expected = a.set_partition().join(&b.set_partition()).unwrap().interval_closure();
        prop_assert_eq!(ab.set_partition(), expected);
        prop_assert!(ab.coarsens(&a) && ab.coarsens(&b));
    }

    #[test]
    fn partition_parse_and_conjugate(parts in prop::collection::vec(1usize..6, 0..6)) {
        let p = Partition::new(parts);
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        let s = format!("({p})");
        prop_assert_eq!(s.parse::<Partition>().unwrap(), p.clone());
        for n in p.size() + p.len()..p.size() + p.len() + 3 {
            prop_assert_eq!(p.complete_arrow(n).unwrap().strip_arrow(), p.clone());
        }
    }
}
