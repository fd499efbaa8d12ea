use std::collections::BTreeMap;

use hecke_fh::coefficients::{LaurentScalar, Rational};
use hecke_fh::combinatorics::{partitions, Partition};
use hecke_fh::symfunc::*;

/// Coefficients of the dominant monomials of `e_μ` in `n` variables, by expansion.
fn brute_e2m(mu: &Partition, n: usize) -> BTreeMap<Partition, u64> {
    let mut poly: BTreeMap<Vec<u8>, u64> = BTreeMap::from([(vec![0u8; n], 1)]);
    for &k in mu.parts() {
        let mut next = BTreeMap::new();
        for (exps, c) in &poly {
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let mut e = exps.clone();
                for (i, x) in e.iter_mut().enumerate() {
                    if mask & (1 << i) != 0 {
                        *x += 1;
                    }
                }
                *next.entry(e).or_insert(0) += c;
            }
        }
        poly = next;
    }
    poly.into_iter()
        .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
        .map(|(e, c)| (Partition::new(e.into_iter().map(usize::from).collect()), c))
        .collect()
}

fn r(x: u64) -> Rational {
    Rational::from(x)
}

#[test]
fn e2m_matches_brute_force() {
    for n in 1..=6 {
        let m = e2m_matrix(n);
        for mu in partitions(n) {
            let brute = brute_e2m(&mu, n);
            for lam in partitions(n) {
                let want = brute.get(&lam).copied().unwrap_or(0);
                assert_eq!(m.get(&mu, &lam), r(want), "e_({mu}) at m_({lam})");
                assert_eq!(want != 0, lam.dominated_by(&mu.conjugate()), "support at ({mu}), ({lam})");
            }
        }
    }
}

#[test]
fn m2e_inverts_e2m() {
    for n in 1..=6 {
        let prod = m2e_matrix(n).compose(&e2m_matrix(n));
        for a in partitions(n) {
            for b in partitions(n) {
                let want = if a == b { r(1) } else { r(0) };
                assert_eq!(prod.get(&(a.clone(), b.clone())).cloned().unwrap_or_else(|| r(0)), want);
            }
        }
    }
}

fn as_rational(v: &LaurentScalar) -> Rational {
    assert!(v.terms().iter().all(|(e, _)| *e == 0));
    v.coeff(0)
}

#[test]
fn completed_expansions_hold_on_a_window() {
    for k in 0..=3 {
        for lam in hecke_fh::combinatorics::partitions(k) {
            let ps = p_polynomials(&lam).unwrap();
            let start = lam.size() + lam.len();
            for n in start.max(1)..=start + 6 {
                let full = lam.complete_arrow(n).unwrap();
                // Σ_ρ P_{λρ}(n) e_{ρ↑n} in the monomial basis equals m_{λ→n}.
                let mut acc: BTreeMap<Partition, Rational> = BTreeMap::new();
                for (rho, p) in &ps {
                    let c = as_rational(&p.eval(n as i64));
                    let Ok(up) = rho.complete_up(n) else { continue };
                    for (kappa, v) in e2m_row(&up).iter() {
                        *acc.entry(kappa.clone()).or_insert_with(|| r(0)) += &(&c * v);
                    }
                }
                acc.retain(|_, v| *v != r(0));
                assert_eq!(acc, BTreeMap::from([(full, r(1))]), "m_({lam})→{n}");

                // Composing with the Q expansion returns m_{λ→n} as well.
                let mut back: BTreeMap<Partition, Rational> = BTreeMap::new();
                for (rho, p) in &ps {
                    if rho.size() > n {
                        continue;
                    }
                    let c = as_rational(&p.eval(n as i64));
                    for (nu, qp) in q_polynomials(rho).unwrap() {
                        if nu.size() + nu.len() > n {
                            continue;
                        }
                        *back.entry(nu).or_insert_with(|| r(0)) += &(&c * &as_rational(&qp.eval(n as i64)));
                    }
                }
                back.retain(|_, v| *v != r(0));
                assert_eq!(back, BTreeMap::from([(lam.clone(), r(1))]), "P·Q for ({lam}) at n={n}");
            }
        }
    }
}
