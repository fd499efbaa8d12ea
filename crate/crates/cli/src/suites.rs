//! Verification suites behind `hecke-fh verify`.

use clap::ValueEnum;
use serde::Serialize;

use hecke_fh::coefficients::LaurentScalar;
use hecke_fh::combinatorics::{
    all_permutations, all_reduced_words, compositions, partitions, partitions_up_to, reduced_words_by_moves,
    Composition, Partition,
};
use hecke_fh::composed::{
    composed_permutations, d_multiply, generic_norm, is_in_dprime, phi, pr, psi, psi_inverse, BlockDecomposition,
    ComposedElement,
};
use hecke_fh::fh_constants::{a_constants_at_n, a_polynomials, check_q1};
use hecke_fh::hecke::{norm, norm_completed, verify_gr_characterization, HeckeElement};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Relations,
    Centers,
    Composed,
    Theorem1,
    All,
}

#[derive(Serialize)]
pub struct Check {
    pub name: String,
    pub max_n: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

type Outcome = Result<(), String>;

fn q(s: &str) -> LaurentScalar {
    s.parse().expect("literal")
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn hecke_relations(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        for w in all_permutations(n) {
            let x = HeckeElement::basis(w.clone());
            for i in 1..n {
                let xi = x.t_generator_mult(i).map_err(err)?;
                if xi.t_generator_mult(i).map_err(err)? != &xi.scale(&q("q - 1")) + &x.scale(&q("q")) {
                    return Err(format!("quadratic relation at T_{w}, i = {i}"));
                }
                if i + 1 < n && x.mult_word(&[i, i + 1, i]).map_err(err)? != x.mult_word(&[i + 1, i, i + 1]).map_err(err)? {
                    return Err(format!("braid relation at T_{w}, i = {i}"));
                }
                for j in i + 2..n {
                    if x.mult_word(&[i, j]).map_err(err)? != x.mult_word(&[j, i]).map_err(err)? {
                        return Err(format!("commutation at T_{w}, ({i}, {j})"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn matsumoto(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        for w in all_permutations(n) {
            let words = all_reduced_words(&w);
            if reduced_words_by_moves(&w.reduced_word()) != words {
                return Err(format!("braid moves do not connect the reduced words of {w}"));
            }
            let t = HeckeElement::basis(w.clone());
            for word in &words {
                if HeckeElement::one(n).mult_word(word).map_err(err)? != t {
                    return Err(format!("T_{w} depends on the reduced word {word:?}"));
                }
            }
        }
    }
    Ok(())
}

fn norms_central(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        for c in compositions(n) {
            let x = norm(&c).map_err(err)?;
            if !x.is_central() {
                return Err(format!("N_({c}) is not central"));
            }
            let sorted = Composition::new(c.to_partition().parts().to_vec()).map_err(err)?;
            if x != norm(&sorted).map_err(err)? {
                return Err(format!("N_({c}) depends on the order of parts"));
            }
        }
    }
    Ok(())
}

fn gr_characterization(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        for lam in partitions(n) {
            if !verify_gr_characterization(&lam).map_err(err)? {
                return Err(format!("Γ_({lam}) fails its characterization"));
            }
        }
    }
    Ok(())
}

fn composed_relations(max_n: usize) -> Outcome {
    for n in 2..=max_n {
        let s = |i| ComposedElement::s(n, i).expect("index in range");
        let ii = |i| ComposedElement::i(n, i).expect("index in range");
        let mul = |a: &ComposedElement, b: &ComposedElement| d_multiply(a, b).expect("same degree");
        for a in 1..n {
            let checks = [
                (mul(&s(a), &s(a)), &s(a).scale(&q("q - 1")) + &ii(a).scale(&q("q")), "quadratic"),
                (mul(&s(a), &ii(a)), s(a), "S_i I_i = S_i"),
                (mul(&ii(a), &ii(a)), ii(a), "idempotent"),
            ];
            for (lhs, rhs, what) in checks {
                if lhs != rhs {
                    return Err(format!("{what} at n = {n}, i = {a}"));
                }
            }
            if a + 1 < n && mul(&mul(&s(a), &s(a + 1)), &s(a)) != mul(&mul(&s(a + 1), &s(a)), &s(a + 1)) {
                return Err(format!("braid at n = {n}, i = {a}"));
            }
            for b in 1..n {
                if mul(&s(a), &ii(b)) != mul(&ii(b), &s(a)) || mul(&ii(a), &ii(b)) != mul(&ii(b), &ii(a)) {
                    return Err(format!("I_{b} is not central at n = {n}"));
                }
                if a.abs_diff(b) > 1 && mul(&s(a), &s(b)) != mul(&s(b), &s(a)) {
                    return Err(format!("S_{a} S_{b} commutation at n = {n}"));
                }
            }
        }
    }
    Ok(())
}

fn psi_bijective(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let basis = composed_permutations(n);
        if basis.len() != BlockDecomposition::dimension(n) {
            return Err(format!("dimension mismatch at n = {n}"));
        }
        for x in &basis {
            let e = ComposedElement::basis(x.clone());
            if psi_inverse(&psi(&e)).map_err(err)? != e {
                return Err(format!("ψ round trip fails at {x}"));
            }
        }
    }
    Ok(())
}

fn generic_norm_compatibility(max_n: usize) -> Outcome {
    for big in 1..=max_n {
        for k in 0..=big.min(4) {
            for c in compositions(k) {
                let top = generic_norm(&c, big).map_err(err)?;
                if !is_in_dprime(&top) {
                    return Err(format!("M_({c}),{big} is not in D′"));
                }
                if pr(&top) != norm_completed(&c.to_partition(), big).map_err(err)? {
                    return Err(format!("pr(M_({c}),{big}) is not the completed norm"));
                }
                for n in 1..=big {
                    if phi(&top, n).map_err(err)? != generic_norm(&c, n).map_err(err)? {
                        return Err(format!("φ_{big},{n}(M_({c}),{big}) ≠ M_({c}),{n}"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn theorem1(max_n: usize) -> Outcome {
    let k_max = max_n.min(4);
    let all = partitions_up_to(k_max);
    for a in &all {
        for b in all.iter().filter(|b| a <= *b && a.size() + b.size() <= k_max) {
            let table = a_polynomials(a, b).map_err(|e| format!("({a})*({b}): {e}"))?;
            let lo = (a.size() + a.len()).max(b.size() + b.len()).max(1);
            for n in lo..=max_n {
                if table.eval(n) != a_constants_at_n(a, b, n).map_err(err)? {
                    return Err(format!("({a})*({b}) fitted polynomials disagree with the product at n = {n}"));
                }
                if n <= 6 && !check_q1(&table, n).map_err(err)? {
                    return Err(format!("({a})*({b}) at q = 1 disagrees with class sums at n = {n}"));
                }
            }
            if table.entries.keys().any(|nu: &Partition| nu.size() > a.size() + b.size()) {
                return Err(format!("({a})*({b}) violates the support bound"));
            }
        }
    }
    Ok(())
}

pub fn run(suite: Suite, max_n: usize) -> Vec<Check> {
    let checks: Vec<(Suite, &str, usize, fn(usize) -> Outcome)> = vec![
        (Suite::Relations, "Hecke presentation relations", max_n.min(5), hecke_relations),
        (Suite::Relations, "Matsumoto independence", max_n.min(5), matsumoto),
        (Suite::Relations, "D(n,q) presentation relations", max_n.min(4), composed_relations),
        (Suite::Centers, "norms central and order invariant", max_n.min(6), norms_central),
        (Suite::Centers, "Geck-Rouquier characterization", max_n.min(6), gr_characterization),
        (Suite::Composed, "ψ bijective with dim Σ∏c_i!", max_n.min(5), psi_bijective),
        (Suite::Composed, "generic norms under φ and pr", max_n.min(6), generic_norm_compatibility),
        (Suite::Theorem1, "structure constants polynomial in n", max_n.min(8), theorem1),
    ];
    checks
        .into_iter()
        .filter(|(s, ..)| suite == Suite::All || *s == suite)
        .map(|(_, name, n, f)| {
            let outcome = f(n);
            Check { name: name.to_string(), max_n: n, pass: outcome.is_ok(), detail: outcome.err() }
        })
        .collect()
}
