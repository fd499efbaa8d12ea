use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::dense::{tables, Dense};
use crate::coefficients::{LaurentScalar, Rational};
use crate::combinatorics::{Permutation, ENUMERATION_BOUND};
use crate::error::{Error, Result};

/// An element `Σ c_w T_w` of `H(n,q)`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, LaurentScalar>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    /// `T_identity`, the unit.
    pub fn one(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    pub fn basis(w: Permutation) -> Self {
        let n = w.n();
        Self { n, terms: BTreeMap::from([(w, LaurentScalar::one())]) }
    }

    /// `T_{s_i}`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Ok(Self::basis(Permutation::generator(n, i)?))
    }

    pub fn from_terms<I: IntoIterator<Item = (Permutation, LaurentScalar)>>(n: usize, it: I) -> Result<Self> {
        let mut terms: BTreeMap<Permutation, LaurentScalar> = BTreeMap::new();
        for (w, c) in it {
            if w.n() != n {
                return Err(Error::SizeMismatch { left: n, right: w.n() });
            }
            *terms.entry(w).or_default() += &c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Self { n, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, LaurentScalar> {
        &self.terms
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero(self.n);
        for (w, x) in &self.terms {
            let y = x * c;
            if !y.is_zero() {
                out.terms.insert(w.clone(), y);
            }
        }
        out
    }

    /// Image under `T_w ↦ T_{w ⊕ id}` in `H(m,q)`, `m ≥ n`.
    pub fn embed(&self, m: usize) -> Self {
        Self { n: m, terms: self.terms.iter().map(|(w, c)| (w.extend(m), c.clone())).collect() }
    }

    fn check_gen(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            return Err(Error::GeneratorOutOfRange { index: i, n: self.n });
        }
        Ok(())
    }

    /// `x · T_{s_i}`.
    pub fn t_generator_mult(&self, i: usize) -> Result<Self> {
        self.check_gen(i)?;
        let mut terms: BTreeMap<Permutation, LaurentScalar> = BTreeMap::new();
        for (w, c) in &self.terms {
            let ws = w.mul_generator_right(i);
            if w.image(i) < w.image(i + 1) {
                terms.entry(ws).or_default().add_shifted(c, 0);
            } else {
                let e = terms.entry(w.clone()).or_default();
                e.add_shifted(c, 1);
                e.sub_shifted(c, 0);
                terms.entry(ws).or_default().add_shifted(c, 1);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Self { n: self.n, terms })
    }

    /// `T_{s_i} · x`.
    pub fn t_generator_left_mult(&self, i: usize) -> Result<Self> {
        self.check_gen(i)?;
        let mut terms: BTreeMap<Permutation, LaurentScalar> = BTreeMap::new();
        for (w, c) in &self.terms {
            let sw = w.mul_generator_left(i);
            let ascent = w.inverse().image(i) < w.inverse().image(i + 1);
            if ascent {
                terms.entry(sw).or_default().add_shifted(c, 0);
            } else {
                let e = terms.entry(w.clone()).or_default();
                e.add_shifted(c, 1);
                e.sub_shifted(c, 0);
                terms.entry(sw).or_default().add_shifted(c, 1);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Self { n: self.n, terms })
    }

    /// `x · T_{s_{i_1}} ··· T_{s_{i_r}}`, one generator at a time. The word need
    /// not be reduced.
    pub fn mult_word(&self, word: &[usize]) -> Result<Self> {
        let mut cur = self.clone();
        for &i in word {
            cur = cur.t_generator_mult(i)?;
        }
        Ok(cur)
    }

    /// Product expanding each `T_w` of `y` along its canonical reduced word,
    /// without the dense tables.
    pub fn multiply_sparse(&self, y: &HeckeElement) -> Result<Self> {
        if self.n != y.n {
            return Err(Error::SizeMismatch { left: self.n, right: y.n });
        }
        let mut out = Self::zero(self.n);
        for (w, c) in &y.terms {
            out = &out + &self.mult_word(&w.reduced_word())?.scale(c);
        }
        Ok(out)
    }

    pub fn multiply(&self, y: &HeckeElement) -> Result<Self> {
        if self.n != y.n {
            return Err(Error::SizeMismatch { left: self.n, right: y.n });
        }
        if self.n > ENUMERATION_BOUND {
            return self.multiply_sparse(y);
        }
        let t = tables(self.n);
        Ok(Self::from_dense(self.n, &t.mul(&self.to_dense(), &y.to_dense())))
    }

    pub fn is_central(&self) -> bool {
        (1..self.n).all(|i| {
            self.t_generator_mult(i).expect("index in range")
                == self.t_generator_left_mult(i).expect("index in range")
        })
    }

    pub fn specialize_q1(&self) -> GroupAlgebraElement {
        GroupAlgebraElement::from_terms(self.n, self.terms.iter().map(|(w, c)| (w.clone(), c.eval_q1())))
    }

    pub(crate) fn to_dense(&self) -> Dense {
        let t = tables(self.n);
        let mut v = t.zero();
        for (w, c) in &self.terms {
            v[t.rank_of(w)] = c.clone();
        }
        v
    }

    pub(crate) fn from_dense(n: usize, v: &[LaurentScalar]) -> Self {
        let t = tables(n);
        let terms = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (t.perms[i].clone(), c.clone()))
            .collect();
        Self { n, terms }
    }
}

impl Add<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.n, rhs.n, "degree mismatch");
        let mut terms = self.terms.clone();
        for (w, c) in &rhs.terms {
            *terms.entry(w.clone()).or_default() += c;
        }
        terms.retain(|_, c| !c.is_zero());
        HeckeElement { n: self.n, terms }
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        HeckeElement { n: self.n, terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Sub<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        self + &(-rhs)
    }
}

fn fmt_terms(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (String, String, usize)>) -> fmt::Result {
    // (basis label, rendered coefficient, number of summands in the coefficient)
    let mut first = true;
    for (label, c, summands) in terms {
        let neg = summands == 1 && c.starts_with('-');
        let abs = if neg { &c[1..] } else { &c[..] };
        match (first, neg) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        if abs == "1" {
            write!(f, "{label}")?;
        } else if summands > 1 {
            write!(f, "({c})·{label}")?;
        } else {
            write!(f, "{abs}·{label}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// `coeff·T_word + …` in canonical permutation order.
impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            self.terms.iter().map(|(w, c)| (format!("T_{w}"), c.to_string(), c.terms().len())),
        )
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    perm: String,
    coeff: LaurentScalar,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for HeckeElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| TermJson { perm: w.to_string(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HeckeElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ElementJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            terms.push((t.perm.parse::<Permutation>().map_err(serde::de::Error::custom)?, t.coeff));
        }
        HeckeElement::from_terms(raw.n, terms).map_err(serde::de::Error::custom)
    }
}

/// An element of the group algebra `ℚS_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::from_terms(n, [(Permutation::identity(n), Rational::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Permutation, Rational)>>(n: usize, it: I) -> Self {
        let mut terms: BTreeMap<Permutation, Rational> = BTreeMap::new();
        for (w, c) in it {
            assert_eq!(w.n(), n, "degree mismatch");
            *terms.entry(w).or_insert_with(Rational::zero) += &c;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, Rational> {
        &self.terms
    }

    pub fn coeff(&self, w: &Permutation) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiply(&self, other: &GroupAlgebraElement) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        let mut terms: BTreeMap<Permutation, Rational> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                *terms.entry(a.compose(b)?).or_insert_with(Rational::zero) += &(x * y);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Self { n: self.n, terms })
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            self.terms.iter().map(|(w, c)| (w.to_string(), c.to_string(), 1)),
        )
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> HeckeElement {
        HeckeElement::basis(s.parse().unwrap())
    }

    fn l(s: &str) -> LaurentScalar {
        s.parse().unwrap()
    }

    #[test]
    fn generator_action() {
        let got = t("213").t_generator_mult(1).unwrap();
        let want = &t("213").scale(&l("q - 1")) + &t("123").scale(&l("q"));
        assert_eq!(got, want);
        assert_eq!(t("123").t_generator_mult(1).unwrap(), t("213"));
        assert_eq!(t("213").t_generator_mult(2).unwrap(), t("231"));
        assert!(t("213").t_generator_mult(3).is_err());
    }

    #[test]
    fn dense_and_sparse_products_agree() {
        let x = &(&t("2314").scale(&l("q + 2")) + &t("1243")) - &t("4321").scale(&l("q^-1"));
        let y = &t("3142").scale(&l("1/2*q^2 - 1")) + &t("2134");
        assert_eq!(x.multiply(&y).unwrap(), x.multiply_sparse(&y).unwrap());
    }

    #[test]
    fn unit_and_centrality() {
        let x = &t("231").scale(&l("q")) + &t("321");
        assert_eq!(x.multiply(&HeckeElement::one(3)).unwrap(), x);
        assert!(!t("213").is_central());
        assert!(HeckeElement::one(3).is_central());
    }

    #[test]
    fn rendering() {
        let x = &(&t("123").scale(&l("3")) + &t("213").scale(&l("1 - q^-1"))) - &t("321");
        assert_eq!(x.to_string(), "3·T_123 + (1 - q^-1)·T_213 - T_321");
        let json = serde_json::to_string(&x).unwrap();
        let back: HeckeElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }
}
