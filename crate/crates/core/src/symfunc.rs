//! Transition matrices between elementary and monomial symmetric functions, and
//! the completion polynomials `P_{λρ}(n)`, `Q_{τν}(n)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::coefficients::{interpolate, LaurentScalar, NPolynomial, Rational};
use crate::combinatorics::{partitions, Partition};
use crate::error::{Error, Result};

/// Number of 0-1 matrices with row sums `rows` and column sums `cols`: the
/// coefficient of `m_cols` in `e_rows`.
pub fn e2m_entry(rows: &Partition, cols: &Partition) -> u128 {
    if rows.size() != cols.size() {
        return 0;
    }
    // State: remaining row sums as a multiset (value -> multiplicity).
    fn count(
        j: usize,
        cols: &[usize],
        state: Vec<(usize, usize)>,
        memo: &mut HashMap<(usize, Vec<(usize, usize)>), u128>,
    ) -> u128 {
        if j == cols.len() {
            return u128::from(state.iter().all(|&(v, _)| v == 0));
        }
        if let Some(&c) = memo.get(&(j, state.clone())) {
            return c;
        }
        let groups = state;
        let mut total = 0u128;
        let mut pick = vec![0usize; groups.len()];
        fn choose(
            g: usize,
            left: usize,
            groups: &[(usize, usize)],
            pick: &mut Vec<usize>,
            acc: &mut Vec<(Vec<usize>, u128)>,
        ) {
            if g == groups.len() {
                if left == 0 {
                    let ways = groups
                        .iter()
                        .zip(pick.iter())
                        .map(|(&(_, m), &k)| binomial(m, k))
                        .product();
                    acc.push((pick.clone(), ways));
                }
                return;
            }
            for k in 0..=groups[g].1.min(left) {
                pick[g] = k;
                choose(g + 1, left - k, groups, pick, acc);
            }
            pick[g] = 0;
        }
        let mut choices = Vec::new();
        choose(0, cols[j], &groups, &mut pick, &mut choices);
        for (pick, ways) in choices {
            let mut next: BTreeMap<usize, usize> = BTreeMap::new();
            for (&(v, m), &k) in groups.iter().zip(pick.iter()) {
                if m > k {
                    *next.entry(v).or_default() += m - k;
                }
                if k > 0 {
                    *next.entry(v - 1).or_default() += k;
                }
            }
            next.remove(&0);
            total += ways * count(j + 1, cols, next.into_iter().collect(), memo);
        }
        memo.insert((j, groups), total);
        total
    }
    let mut init: BTreeMap<usize, usize> = BTreeMap::new();
    for &r in rows.parts() {
        *init.entry(r).or_default() += 1;
    }
    let mut memo = HashMap::new();
    count(0, cols.parts(), init.into_iter().collect(), &mut memo)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `e_μ = Σ_λ entry(μ, λ) m_λ`.
    E2M,
    /// `m_λ = Σ_μ entry(λ, μ) e_μ`.
    M2E,
}

/// A square transition matrix indexed by the partitions of `n`.
#[derive(Clone, Debug)]
pub struct TransitionMatrix {
    pub n: usize,
    pub direction: Direction,
    pub index: Vec<Partition>,
    entries: BTreeMap<(Partition, Partition), Rational>,
}

impl TransitionMatrix {
    pub fn get(&self, row: &Partition, col: &Partition) -> Rational {
        self.entries.get(&(row.clone(), col.clone())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn row(&self, row: &Partition) -> BTreeMap<Partition, Rational> {
        self.entries
            .iter()
            .filter(|((r, _), _)| r == row)
            .map(|((_, c), v)| (c.clone(), v.clone()))
            .collect()
    }

    /// Nonzero entries in row-major canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &Partition, &Rational)> {
        self.entries.iter().map(|((r, c), v)| (r, c, v))
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &TransitionMatrix) -> BTreeMap<(Partition, Partition), Rational> {
        let mut out: BTreeMap<(Partition, Partition), Rational> = BTreeMap::new();
        for ((r, k), a) in &self.entries {
            for c in &other.index {
                let b = other.get(k, c);
                if !b.is_zero() {
                    *out.entry((r.clone(), c.clone())).or_insert_with(Rational::zero) += &(a * &b);
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

impl Serialize for TransitionMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            row: String,
            col: String,
            value: &'a Rational,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            n: usize,
            direction: Direction,
            index: Vec<String>,
            entries: Vec<Entry<'a>>,
        }
        Out {
            n: self.n,
            direction: self.direction,
            index: self.index.iter().map(|p| p.to_string()).collect(),
            entries: self
                .entries
                .iter()
                .map(|((r, c), v)| Entry { row: r.to_string(), col: c.to_string(), value: v })
                .collect(),
        }
        .serialize(s)
    }
}

pub fn e2m_matrix(n: usize) -> TransitionMatrix {
    let index = partitions(n);
    let mut entries = BTreeMap::new();
    for r in &index {
        for (c, v) in e2m_row(r).iter() {
            entries.insert((r.clone(), c.clone()), v.clone());
        }
    }
    TransitionMatrix { n, direction: Direction::E2M, index, entries }
}

/// Exact inverse of [`e2m_matrix`].
pub fn m2e_matrix(n: usize) -> TransitionMatrix {
    let index = partitions(n);
    let mut entries = BTreeMap::new();
    for r in &index {
        for (c, v) in m2e_row(r).iter() {
            entries.insert((r.clone(), c.clone()), v.clone());
        }
    }
    TransitionMatrix { n, direction: Direction::M2E, index, entries }
}

type Row = Arc<BTreeMap<Partition, Rational>>;

fn row_cache(which: usize) -> &'static Mutex<HashMap<Partition, Row>> {
    static CACHES: OnceLock<[Mutex<HashMap<Partition, Row>>; 2]> = OnceLock::new();
    &CACHES.get_or_init(|| [Mutex::new(HashMap::new()), Mutex::new(HashMap::new())])[which]
}

/// Row `μ` of E2M: `e_μ` expanded in monomials. Support is `{λ : λ ≤_d μ′}`.
pub fn e2m_row(mu: &Partition) -> Row {
    if let Some(r) = row_cache(0).lock().unwrap().get(mu) {
        return r.clone();
    }
    let conj = mu.conjugate();
    let row: BTreeMap<Partition, Rational> = partitions(mu.size())
        .into_iter()
        .filter(|l| l.dominated_by(&conj))
        .filter_map(|l| {
            let c = e2m_entry(mu, &l);
            (c != 0).then(|| (l, Rational::from(c)))
        })
        .collect();
    let row = Arc::new(row);
    row_cache(0).lock().unwrap().insert(mu.clone(), row.clone());
    row
}

/// Row `λ` of M2E: `m_λ` expanded in elementary functions, by back-substitution
/// `m_λ = e_{λ′} − Σ_{κ <_d λ} E2M_{λ′κ} m_κ`.
pub fn m2e_row(lambda: &Partition) -> Row {
    if let Some(r) = row_cache(1).lock().unwrap().get(lambda) {
        return r.clone();
    }
    let conj = lambda.conjugate();
    let mut acc: BTreeMap<Partition, Rational> = BTreeMap::new();
    acc.insert(conj.clone(), Rational::one());
    for (kappa, coeff) in e2m_row(&conj).iter() {
        if kappa == lambda {
            debug_assert!(coeff.is_one());
            continue;
        }
        for (mu, v) in m2e_row(kappa).iter() {
            *acc.entry(mu.clone()).or_insert_with(Rational::zero) -= &(coeff * v);
        }
    }
    acc.retain(|_, v| !v.is_zero());
    let row = Arc::new(acc);
    row_cache(1).lock().unwrap().insert(lambda.clone(), row.clone());
    row
}

/// Expansion `m_{λ→n} = Σ_ρ c_ρ e_{ρ↑n}` at a fixed `n`, keyed by `ρ`.
/// Requires `n ≥ 2|λ|` so that `ρ ↦ ρ↑n` is injective on the support.
pub fn p_coefficients_at(lambda: &Partition, n: usize) -> Result<BTreeMap<Partition, Rational>> {
    let Ok(full) = lambda.complete_arrow(n) else {
        return Ok(BTreeMap::new());
    };
    let mut out = BTreeMap::new();
    for (kappa, v) in m2e_row(&full).iter() {
        let rho = kappa.remove_largest();
        if rho.size() > lambda.size() || kappa.largest() < rho.largest() {
            return Err(Error::SupportViolation(format!(
                "m_({lambda})→{n} involves e_({kappa}) outside the completed range"
            )));
        }
        out.insert(rho, v.clone());
    }
    Ok(out)
}

/// Expansion `e_{τ↑n} = Σ_ν c_ν m_{ν→n}` at a fixed `n`, keyed by `ν`.
pub fn q_coefficients_at(tau: &Partition, n: usize) -> BTreeMap<Partition, Rational> {
    let Ok(full) = tau.complete_up(n) else {
        return BTreeMap::new();
    };
    e2m_row(&full).iter().map(|(k, v)| (k.strip_arrow(), v.clone())).collect()
}

fn fit_family<F>(first: usize, bound: usize, mut at: F) -> Result<BTreeMap<Partition, NPolynomial>>
where
    F: FnMut(usize) -> Result<BTreeMap<Partition, Rational>>,
{
    let mut last_err = None;
    for degree in [bound, bound + 2] {
        let nodes: Vec<usize> = (first..first + degree + 3).collect();
        let samples: Vec<BTreeMap<Partition, Rational>> =
            nodes.iter().map(|&n| at(n)).collect::<Result<_>>()?;
        let keys: std::collections::BTreeSet<&Partition> =
            samples.iter().flat_map(|s| s.keys()).collect();
        let mut out = BTreeMap::new();
        let mut ok = true;
        for key in keys {
            let pts: Vec<(i64, LaurentScalar)> = nodes
                .iter()
                .zip(samples.iter())
                .map(|(&n, s)| {
                    (n as i64, LaurentScalar::constant(s.get(key).cloned().unwrap_or_else(Rational::zero)))
                })
                .collect();
            match interpolate(&pts, degree) {
                Ok(p) => {
                    if !p.is_zero() {
                        out.insert(key.clone(), p);
                    }
                }
                Err(e) => {
                    ok = false;
                    last_err = Some(e);
                    break;
                }
            }
        }
        if ok {
            return Ok(out);
        }
    }
    Err(last_err.unwrap_or_else(|| Error::Interpolation("no data".into())))
}

/// Every `P_{λρ}(n)` for fixed `λ`: `m_{λ→n} = Σ_ρ P_{λρ}(n) e_{ρ↑n}`.
pub fn p_polynomials(lambda: &Partition) -> Result<BTreeMap<Partition, NPolynomial>> {
    let first = (2 * lambda.size()).max(lambda.size() + lambda.len()).max(1);
    fit_family(first, lambda.size(), |n| p_coefficients_at(lambda, n))
}

/// Every `Q_{τν}(n)` for fixed `τ`: `e_{τ↑n} = Σ_ν Q_{τν}(n) m_{ν→n}`.
pub fn q_polynomials(tau: &Partition) -> Result<BTreeMap<Partition, NPolynomial>> {
    let first = (2 * tau.size()).max(1);
    fit_family(first, tau.size(), |n| Ok(q_coefficients_at(tau, n)))
}

pub fn p_polynomial(lambda: &Partition, rho: &Partition) -> Result<NPolynomial> {
    Ok(p_polynomials(lambda)?.remove(rho).unwrap_or_default())
}

pub fn q_polynomial(tau: &Partition, nu: &Partition) -> Result<NPolynomial> {
    Ok(q_polynomials(tau)?.remove(nu).unwrap_or_default())
}
