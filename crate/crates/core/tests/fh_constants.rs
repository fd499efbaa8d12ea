use std::collections::BTreeMap;

use hecke_fh::coefficients::LaurentScalar;
use hecke_fh::combinatorics::{partitions_up_to, Partition};
use hecke_fh::fh_constants::*;
use hecke_fh::hecke::{norm_completed, norm_coordinates};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn l(s: &str) -> LaurentScalar {
    s.parse().unwrap()
}

fn pairs(max: usize) -> Vec<(Partition, Partition)> {
    let all = partitions_up_to(max);
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            if a <= b && a.size() + b.size() <= max {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

#[test]
fn g_tables_are_symmetric_in_q_and_bounded() {
    for (a, b) in pairs(4) {
        let t = g_constants(&a, &b).unwrap();
        for (nu, v) in &t.entries {
            assert!(v.is_q_symmetric(), "g^({nu}) for ({a})*({b}) = {v}");
            assert!(nu.size() <= a.size() + b.size());
        }
        assert!(t.onset <= a.size() + b.size() + 2);
    }
}

#[test]
fn g_tables_stay_stable_on_a_wider_window() {
    for (a, b) in pairs(3) {
        let narrow = g_constants(&a, &b).unwrap();
        let wide = g_constants_up_to(&a, &b, a.size() + b.size() + 3).unwrap();
        assert_eq!(narrow.entries, wide.entries, "({a})*({b})");
    }
}

#[test]
fn g_reproduces_norm_products_at_each_level() {
    for (a, b) in pairs(3) {
        let g = g_constants(&a, &b).unwrap();
        for n in 1..=6 {
            let prod = norm_completed(&a, n).unwrap().multiply(&norm_completed(&b, n).unwrap()).unwrap();
            let mut expected = hecke_fh::hecke::HeckeElement::zero(n);
            for (nu, v) in &g.entries {
                expected = &expected + &norm_completed(nu, n).unwrap().scale(v);
            }
            assert_eq!(prod, expected, "({a})*({b}) at n={n}");
        }
    }
}

#[test]
fn norm_square_instances() {
    let two = norm_completed(&p("1"), 2).unwrap();
    let sq = two.multiply(&two).unwrap();
    let rhs = (&norm_completed(&p("1,1"), 2).unwrap() - &norm_completed(&p("2"), 2).unwrap())
        .scale(&l("q + 2 + q^-1"));
    assert_eq!(sq, rhs);

    let x = norm_completed(&p("1"), 4).unwrap();
    let coords = norm_coordinates(&x.multiply(&x).unwrap()).unwrap();
    let got: BTreeMap<Partition, LaurentScalar> =
        coords.into_iter().map(|(k, v)| (k, v.to_laurent().unwrap())).collect();
    let expected = BTreeMap::from([
        (p("3,1"), l("1")),
        (p("2,1,1"), l("q + 1 + q^-1")),
        (p("2,2"), l("-q - 2 - q^-1")),
    ]);
    assert_eq!(got, expected);
}

#[test]
fn three_routes_agree() {
    for (a, b) in pairs(4) {
        let table = a_polynomials(&a, &b).unwrap();
        for nu in table.entries.keys() {
            assert!(nu.size() <= a.size() + b.size());
        }
        let lo = (a.size() + a.len()).max(b.size() + b.len()).max(1);
        for n in lo..=7 {
            let direct = a_constants_at_n(&a, &b, n).unwrap();
            assert_eq!(table.eval(n), direct, "fitted vs direct ({a})*({b}) at n={n}");
            if let Ok(norm) = a_constants_norm_route(&a, &b, n) {
                assert_eq!(norm, direct, "norm route vs direct ({a})*({b}) at n={n}");
            }
        }
    }
}

#[test]
fn q_equals_one_matches_class_sums() {
    for (a, b) in pairs(4) {
        let table = a_polynomials(&a, &b).unwrap();
        for n in 1..=6 {
            if a.size() + a.len() > n || b.size() + b.len() > n {
                continue;
            }
            assert!(check_q1(&table, n).unwrap(), "({a})*({b}) at n={n}");
        }
    }
}

#[test]
fn unit_law() {
    for mu in partitions_up_to(3) {
        let t = a_polynomials(&p(""), &mu).unwrap();
        assert_eq!(t.entries, BTreeMap::from([(mu.clone(), hecke_fh::coefficients::NPolynomial::one())]));
    }
}

#[test]
fn held_out_recomputation() {
    let t = a_polynomials(&p("1"), &p("1")).unwrap();
    let r = verify_theorem1(&t, &[8]).unwrap();
    assert!(r.all_match(), "{r:?}");
    let t = a_polynomials(&p("1"), &p("1,1")).unwrap();
    let r = verify_theorem1(&t, &[9]).unwrap();
    assert!(r.all_match(), "{r:?}");
    assert_eq!(r.checks[0].route, "norm-route");
    let t = a_polynomials(&p(""), &p("2")).unwrap();
    assert!(verify_theorem1(&t, &[5, 6]).unwrap().all_match());
}
