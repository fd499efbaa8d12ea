//! Norms, Geck-Rouquier elements, and coordinates of central elements.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use super::dense::{tables, Dense, Tables};
use super::element::{GroupAlgebraElement, HeckeElement};
use crate::coefficients::{LaurentScalar, Rational, RationalFunction};
use crate::combinatorics::{
    all_permutations, distinguished_reps, minimal_class_elements, partitions, Composition, Partition,
    Permutation, ENUMERATION_BOUND,
};
use crate::error::{Error, Result};
use crate::symfunc::m2e_row;

/// Largest `n` for which elements of `H(n,q)` are handled densely.
pub const COMPUTE_BOUND: usize = ENUMERATION_BOUND;

fn check_bound(n: usize) -> Result<()> {
    if n > COMPUTE_BOUND {
        return Err(Error::BoundExceeded { n, bound: COMPUTE_BOUND });
    }
    Ok(())
}

type Memo<K> = Mutex<HashMap<K, Arc<Dense>>>;

fn norm_memo() -> &'static Memo<(usize, Composition)> {
    static M: OnceLock<Memo<(usize, Composition)>> = OnceLock::new();
    M.get_or_init(Default::default)
}

fn gamma_memo() -> &'static Memo<Partition> {
    static M: OnceLock<Memo<Partition>> = OnceLock::new();
    M.get_or_init(Default::default)
}

/// `N_c` in `H(n,q)` for `|c| = n`, built as a chain of relative norms:
/// `X ← Σ_v q^{-ℓ(v)} T_{v⁻¹} X T_v` over the shuffles `v` of the blocks so far
/// with the next block.
pub(crate) fn norm_dense(c: &Composition) -> Result<Arc<Dense>> {
    let n = c.size();
    check_bound(n)?;
    let key = (n, c.clone());
    if let Some(v) = norm_memo().lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let t = tables(n);
    let mut x = t.identity();
    let mut a = c.parts().first().copied().unwrap_or(0);
    for &b in c.parts().iter().skip(1) {
        let reps: HashSet<Vec<usize>> = distinguished_reps(&Composition::new(vec![a, b])?)
            .iter()
            .map(|p| p.reduced_word())
            .collect();
        let mut acc = t.zero();
        // Reduced words of the shuffles are prefix-closed, so a depth-first walk
        // conjugates one generator per edge.
        let mut stack: Vec<(Vec<usize>, Dense)> = vec![(Vec::new(), x)];
        while let Some((word, y)) = stack.pop() {
            let shift = -(word.len() as i32);
            for (w, c) in y.iter().enumerate() {
                if !c.is_zero() {
                    acc[w].add_shifted(c, shift);
                }
            }
            for g in 1..a + b {
                let mut child = word.clone();
                child.push(g);
                if reps.contains(&child) {
                    let z = t.right_gen(&t.left_gen(g, &y), g);
                    stack.push((child, z));
                }
            }
        }
        x = acc;
        a += b;
    }
    let x = Arc::new(x);
    norm_memo().lock().unwrap().insert(key, x.clone());
    Ok(x)
}

/// The norm `N_c = Σ q^{-ℓ(ω)} T_{ω⁻¹} T_ω` over distinguished representatives of `S_c\S_n`.
pub fn norm(c: &Composition) -> Result<HeckeElement> {
    Ok(HeckeElement::from_dense(c.size(), &norm_dense(c)?))
}

/// `N_c` straight from its defining sum, one product per coset representative.
pub fn norm_by_definition(c: &Composition) -> Result<HeckeElement> {
    let n = c.size();
    let mut out = HeckeElement::zero(n);
    for w in distinguished_reps(c) {
        let term = HeckeElement::basis(w.inverse()).multiply(&HeckeElement::basis(w.clone()))?;
        out = &out + &term.scale(&LaurentScalar::q_pow(-(w.length() as i32)));
    }
    Ok(out)
}

fn partition_composition(p: &Partition) -> Composition {
    Composition::new(p.parts().to_vec()).expect("partition parts are positive")
}

/// `N_{λ,n} = N_{λ↑n}`, or zero when `|λ| > n`.
pub fn norm_completed(lambda: &Partition, n: usize) -> Result<HeckeElement> {
    match lambda.complete_up(n) {
        Ok(full) => norm(&partition_composition(&full)),
        Err(_) => Ok(HeckeElement::zero(n)),
    }
}

/// `Γ_λ = (q/(q−1))^{n−ℓ(λ)} Σ_μ M2E_{λμ} N_μ`; the division by `(q−1)^{n−ℓ(λ)}` must be exact.
pub(crate) fn gamma_dense(lambda: &Partition) -> Result<Arc<Dense>> {
    let n = lambda.size();
    check_bound(n)?;
    if let Some(v) = gamma_memo().lock().unwrap().get(lambda) {
        return Ok(v.clone());
    }
    let t = tables(n);
    let mut sum = t.zero();
    for (mu, coeff) in m2e_row(lambda).iter() {
        let nm = norm_dense(&partition_composition(mu))?;
        for (w, c) in nm.iter().enumerate() {
            if !c.is_zero() {
                sum[w] += &c.scale(coeff);
            }
        }
    }
    let k = (n - lambda.len()) as u32;
    let divisor = LaurentScalar::q_minus_one().pow(k);
    let mut out = Vec::with_capacity(sum.len());
    for c in sum {
        let d = c.div_exact(&divisor).ok_or_else(|| {
            Error::Cancellation(format!("Γ_({lambda}): coefficient {c} not divisible by (q-1)^{k}"))
        })?;
        out.push(d.shift(k as i32));
    }
    let out = Arc::new(out);
    gamma_memo().lock().unwrap().insert(lambda.clone(), out.clone());
    Ok(out)
}

pub fn geck_rouquier(lambda: &Partition) -> Result<HeckeElement> {
    Ok(HeckeElement::from_dense(lambda.size(), &gamma_dense(lambda)?))
}

/// `Γ_{μ,n} = Γ_{μ→n}`, or zero when `|μ| + ℓ(μ) > n`.
pub fn gamma_completed(mu: &Partition, n: usize) -> Result<HeckeElement> {
    match mu.complete_arrow(n) {
        Ok(full) => geck_rouquier(&full),
        Err(_) => Ok(HeckeElement::zero(n)),
    }
}

fn class_elements(full: &Partition) -> Vec<Permutation> {
    all_permutations(full.size()).into_iter().filter(|p| &p.cycle_type() == full).collect()
}

/// `C_{λ,n}`: the sum of the permutations of cycle type `λ→n`, or zero.
pub fn class_sum(lambda: &Partition, n: usize) -> Result<GroupAlgebraElement> {
    check_bound(n)?;
    match lambda.complete_arrow(n) {
        Ok(full) => Ok(GroupAlgebraElement::from_terms(
            n,
            class_elements(&full).into_iter().map(|p| (p, Rational::one())),
        )),
        Err(_) => Ok(GroupAlgebraElement::zero(n)),
    }
}

/// Checks that `Γ_λ` is central, specializes to the class sum at `q = 1`, and that
/// `Γ_λ − C_λ` involves no permutation of minimal length in its class.
pub fn verify_gr_characterization(lambda: &Partition) -> Result<bool> {
    let n = lambda.size();
    let gamma = geck_rouquier(lambda)?;
    if !gamma.is_central() {
        return Ok(false);
    }
    let class = class_elements(lambda);
    let expected = GroupAlgebraElement::from_terms(n, class.iter().map(|p| (p.clone(), Rational::one())));
    if gamma.specialize_q1() != expected {
        return Ok(false);
    }
    let minimal = minimal_class_elements(n, COMPUTE_BOUND)?;
    let class_set: HashSet<&Permutation> = class.iter().collect();
    for (w, c) in gamma.terms() {
        let residual = if class_set.contains(w) { c - &LaurentScalar::one() } else { c.clone() };
        if !residual.is_zero() && w.length() <= minimal[&w.cycle_type()].0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coefficients `x` with `z = Σ x_i basis_i`, by exact elimination over `ℚ(q)`.
/// Rows are the permutations of the combined support in canonical order.
pub fn expand_in_center_basis(z: &HeckeElement, basis: &[HeckeElement]) -> Result<Vec<RationalFunction>> {
    let mut rows: Vec<&Permutation> = z.terms().keys().chain(basis.iter().flat_map(|b| b.terms().keys())).collect();
    rows.sort();
    rows.dedup();
    let k = basis.len();
    let mut m: Vec<Vec<RationalFunction>> = rows
        .iter()
        .map(|w| {
            let mut r: Vec<RationalFunction> = basis.iter().map(|b| RationalFunction::from(&b.coeff(w))).collect();
            r.push(RationalFunction::from(&z.coeff(w)));
            r
        })
        .collect();
    let mut pivots = Vec::with_capacity(k);
    let mut next = 0;
    for col in 0..k {
        let Some(p) = (next..m.len()).find(|&r| !m[r][col].is_zero()) else {
            return Err(Error::Singular);
        };
        m.swap(next, p);
        let inv = m[next][col].recip();
        for j in col..=k {
            m[next][j] = &m[next][j] * &inv;
        }
        for r in 0..m.len() {
            if r != next && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..=k {
                    let d = &f * &m[next][j];
                    m[r][j] = &m[r][j] - &d;
                }
            }
        }
        pivots.push(next);
        next += 1;
    }
    if m[next..].iter().any(|r| !r[k].is_zero()) {
        return Err(Error::NotInSpan);
    }
    Ok(pivots.into_iter().map(|r| m[r][k].clone()).collect())
}

fn minimal_elements(n: usize) -> Result<Arc<BTreeMap<Partition, (usize, Permutation)>>> {
    static M: OnceLock<Mutex<HashMap<usize, Arc<BTreeMap<Partition, (usize, Permutation)>>>>> = OnceLock::new();
    let memo = M.get_or_init(Default::default);
    if let Some(v) = memo.lock().unwrap().get(&n) {
        return Ok(v.clone());
    }
    let v = Arc::new(minimal_class_elements(n, COMPUTE_BOUND)?);
    memo.lock().unwrap().insert(n, v.clone());
    Ok(v)
}

/// Coordinates of a central `z` in the Geck-Rouquier basis, keyed by cycle type.
/// Each `Γ_κ` has coefficient 1 at the minimal-length elements of its own class and 0
/// at those of every other class, so the coordinate is a single coefficient.
pub fn gr_coordinates(z: &HeckeElement) -> Result<BTreeMap<Partition, LaurentScalar>> {
    let min = minimal_elements(z.n())?;
    Ok(min
        .iter()
        .map(|(k, (_, w))| (k.clone(), z.coeff(w)))
        .filter(|(_, c)| !c.is_zero())
        .collect())
}

pub(crate) fn product_gr_coordinates_dense(
    t: &Tables,
    x: &[LaurentScalar],
    y: &[LaurentScalar],
) -> Result<BTreeMap<Partition, LaurentScalar>> {
    let min = minimal_elements(t.n)?;
    Ok(min
        .iter()
        .map(|(k, (_, w))| (k.clone(), t.product_coeff(x, y, t.rank_of(w))))
        .filter(|(_, c)| !c.is_zero())
        .collect())
}

/// Geck-Rouquier coordinates of `x·y` for central `x, y`, without forming the product.
pub fn product_gr_coordinates(x: &HeckeElement, y: &HeckeElement) -> Result<BTreeMap<Partition, LaurentScalar>> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch { left: x.n(), right: y.n() });
    }
    check_bound(x.n())?;
    let t = tables(x.n());
    product_gr_coordinates_dense(&t, &x.to_dense(), &y.to_dense())
}

/// Converts Geck-Rouquier coordinates at level `n` to norm coordinates:
/// `x_μ = Σ_κ γ_κ (q/(q−1))^{n−ℓ(κ)} M2E_{κμ}`.
pub fn gr_to_norm_coordinates(
    n: usize,
    gr: &BTreeMap<Partition, LaurentScalar>,
) -> BTreeMap<Partition, RationalFunction> {
    let mut out: BTreeMap<Partition, RationalFunction> = BTreeMap::new();
    for (kappa, g) in gr {
        let d = &RationalFunction::q_over_q_minus_one_pow((n - kappa.len()) as i32) * &RationalFunction::from(g);
        for (mu, m) in m2e_row(kappa).iter() {
            let e = out.entry(mu.clone()).or_insert_with(RationalFunction::zero);
            *e = &*e + &(&d * &RationalFunction::from_rational(m.clone()));
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Norm-basis coordinates of a central element, keyed by partitions of `n`.
pub fn norm_coordinates(z: &HeckeElement) -> Result<BTreeMap<Partition, RationalFunction>> {
    Ok(gr_to_norm_coordinates(z.n(), &gr_coordinates(z)?))
}

/// Brute-force class-sum product in `ℚS_n`: `C_{λ,n} C_{μ,n} = Σ_ν a_ν C_{ν,n}`.
pub fn fh_product_q1(lambda: &Partition, mu: &Partition, n: usize) -> Result<BTreeMap<Partition, Rational>> {
    check_bound(n)?;
    let (Ok(l), Ok(m)) = (lambda.complete_arrow(n), mu.complete_arrow(n)) else {
        return Ok(BTreeMap::new());
    };
    let left = class_elements(&l);
    let min = minimal_elements(n)?;
    let mut out = BTreeMap::new();
    for kappa in partitions(n) {
        let w = &min[&kappa].1;
        let count = left
            .iter()
            .filter(|a| a.inverse().compose(w).map(|b| b.cycle_type() == m).unwrap_or(false))
            .count();
        if count > 0 {
            out.insert(kappa.strip_arrow(), Rational::from(count as u64));
        }
    }
    Ok(out)
}
